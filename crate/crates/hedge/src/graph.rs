//! Undirected simple graphs and the structural primitives the solvers are
//! built on: connected components, neighborhoods, induced subgraphs and
//! torsos.
//!
//! Vertices are `0..n`. The adjacency structure is a bitset per vertex, so
//! neighbor iteration is always in ascending order. Self-loops are rejected
//! at construction; duplicate edges collapse silently.
//!
//! Two text formats are supported: graph6 (for graphs on at most 62
//! vertices) and DIMACS edge lists (`p edge n m` header, `e u v` lines,
//! 1-based endpoints).

use crate::set::VertexSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: malformed header byte {0:#04x}")]
    Graph6Header(u8),
    #[error("graph6: {0} vertices exceed the 62-vertex limit of this encoding")]
    Graph6TooLarge(usize),
    #[error("graph6: bit stream truncated (need {need} bytes after the header, got {got})")]
    Graph6Truncated { need: usize, got: usize },
    #[error("graph6: {0} trailing bytes after the bit stream")]
    Graph6Trailing(usize),
    #[error("graph6: byte {0:#04x} outside the printable range 63..=126")]
    Graph6InvalidByte(u8),
    #[error("dimacs: missing 'p edge <n> <m>' header")]
    DimacsNoHeader,
    #[error("dimacs: malformed line {lineno}: {line:?}")]
    DimacsBadLine { lineno: usize, line: String },
    #[error("dimacs: duplicate problem line at line {0}")]
    DimacsDuplicateHeader(usize),
    #[error("dimacs: header declares {declared} edges but {found} edge lines present")]
    DimacsEdgeCount { declared: usize, found: usize },
    #[error("dimacs: endpoint {v} out of range 1..={n} at line {lineno}")]
    DimacsEndpoint { v: usize, n: usize, lineno: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge endpoint {v} out of range for {n} vertices")]
    Endpoint { v: usize, n: usize },
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborhoodMode {
    Open,
    Closed,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![VertexSet::new(); n] }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ParseError> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), ParseError> {
        let n = self.n();
        if u == v {
            return Err(ParseError::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::Endpoint { v: w, n });
            }
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Neighborhood of a vertex set: open excludes `s` itself, closed
    /// includes it.
    pub fn neighborhood(&self, s: &VertexSet, mode: NeighborhoodMode) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s.iter() {
            if v < self.n() {
                out.union_with(&self.adj[v]);
            }
        }
        match mode {
            NeighborhoodMode::Open => out.difference(s),
            NeighborhoodMode::Closed => out.union(s),
        }
    }

    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.neighborhood(s, NeighborhoodMode::Open)
    }

    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.neighborhood(s, NeighborhoodMode::Closed)
    }

    /// Connected components, ascending by minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// Connected components of the subgraph induced by `within`, ascending
    /// by minimum vertex. Ids outside `0..n` are ignored.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let alive = within.intersection(&self.vertex_set());
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in alive.iter() {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            let mut frontier = VertexSet::singleton(v);
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for u in frontier.iter() {
                    next.union_with(&self.adj[u]);
                }
                frontier = next.intersection(&alive).difference(&comp);
                comp.union_with(&frontier);
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced by `s`, re-indexed to `0..|s|`. The second return
    /// value maps new ids back to old ids (ascending).
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let ids: Vec<usize> = s.intersection(&self.vertex_set()).to_vec();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::empty(ids.len());
        for (i, &v) in ids.iter().enumerate() {
            for w in self.adj[v].iter() {
                if new_id[w] != usize::MAX && new_id[w] > i {
                    g.adj[i].insert(new_id[w]);
                    g.adj[new_id[w]].insert(i);
                }
            }
        }
        (g, ids)
    }

    /// Torso of `x`: take `G`, complete the neighborhood of every component
    /// of `G - x` into a clique, then delete everything outside `x`. The
    /// result is re-indexed; the second return value maps new ids back to
    /// old ids. The torso always contains the induced subgraph `G[x]`.
    pub fn torso(&self, x: &VertexSet) -> (Graph, Vec<usize>) {
        let x = x.intersection(&self.vertex_set());
        let (mut g, ids) = self.induced(&x);
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in ids.iter().enumerate() {
            new_id[v] = i;
        }
        let outside = self.vertex_set().difference(&x);
        for comp in self.components_within(&outside) {
            let nb: Vec<usize> = self
                .open_neighborhood(&comp)
                .intersection(&x)
                .iter()
                .map(|v| new_id[v])
                .collect();
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    g.adj[a].insert(b);
                    g.adj[b].insert(a);
                }
            }
        }
        (g, ids)
    }

    /// Parse the graph6 encoding of a graph on at most 62 vertices.
    /// An optional `>>graph6<<` prefix is accepted.
    pub fn parse_graph6(text: &str) -> Result<Self, ParseError> {
        let text = text.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(ParseError::Graph6Empty);
        }
        let head = bytes[0];
        if head == 126 {
            // multi-byte vertex counts encode n > 62
            return Err(ParseError::Graph6TooLarge(63));
        }
        if !(63..=125).contains(&head) {
            return Err(ParseError::Graph6Header(head));
        }
        let n = (head - 63) as usize;
        let nbits = n * (n.saturating_sub(1)) / 2;
        let need = nbits.div_ceil(6);
        let got = bytes.len() - 1;
        if got < need {
            return Err(ParseError::Graph6Truncated { need, got });
        }
        if got > need {
            return Err(ParseError::Graph6Trailing(got - need));
        }
        let mut g = Graph::empty(n);
        let mut bit = 0usize;
        for j in 1..n {
            for i in 0..j {
                let byte = bytes[1 + bit / 6];
                if !(63..=126).contains(&byte) {
                    return Err(ParseError::Graph6InvalidByte(byte));
                }
                let chunk = byte - 63;
                if chunk & (1 << (5 - bit % 6)) != 0 {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// Encode as graph6. Fails for graphs on more than 62 vertices.
    pub fn to_graph6(&self) -> Result<String, ParseError> {
        let n = self.n();
        if n > 62 {
            return Err(ParseError::Graph6TooLarge(n));
        }
        let mut out = vec![63 + n as u8];
        let mut chunk = 0u8;
        let mut fill = 0usize;
        for j in 1..n {
            for i in 0..j {
                chunk = (chunk << 1) | u8::from(self.has_edge(i, j));
                fill += 1;
                if fill == 6 {
                    out.push(63 + chunk);
                    chunk = 0;
                    fill = 0;
                }
            }
        }
        if fill > 0 {
            out.push(63 + (chunk << (6 - fill)));
        }
        Ok(String::from_utf8(out).unwrap())
    }

    /// Parse a DIMACS edge list. Comment lines (`c ...`) and blank lines
    /// are skipped. The declared edge count must match the number of edge
    /// lines; duplicate edges collapse to one.
    pub fn parse_dimacs(text: &str) -> Result<Self, ParseError> {
        let mut g: Option<Graph> = None;
        let mut declared = 0usize;
        let mut found = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let bad = || ParseError::DimacsBadLine { lineno, line: line.to_string() };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields[0] {
                "p" => {
                    if g.is_some() {
                        return Err(ParseError::DimacsDuplicateHeader(lineno));
                    }
                    if fields.len() != 4 || fields[1] != "edge" {
                        return Err(bad());
                    }
                    let n: usize = fields[2].parse().map_err(|_| bad())?;
                    declared = fields[3].parse().map_err(|_| bad())?;
                    g = Some(Graph::empty(n));
                }
                "e" => {
                    let g = g.as_mut().ok_or(ParseError::DimacsNoHeader)?;
                    if fields.len() != 3 {
                        return Err(bad());
                    }
                    let u: usize = fields[1].parse().map_err(|_| bad())?;
                    let v: usize = fields[2].parse().map_err(|_| bad())?;
                    let n = g.n();
                    for w in [u, v] {
                        if w < 1 || w > n {
                            return Err(ParseError::DimacsEndpoint { v: w, n, lineno });
                        }
                    }
                    if u == v {
                        return Err(ParseError::SelfLoop(u));
                    }
                    g.add_edge_checked(u - 1, v - 1)?;
                    found += 1;
                }
                _ => return Err(bad()),
            }
        }
        let g = g.ok_or(ParseError::DimacsNoHeader)?;
        if declared != found {
            return Err(ParseError::DimacsEdgeCount { declared, found });
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// A partition `(x_side, separator, y_side)` of the vertices of a graph
/// with no edge between the two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub x_side: VertexSet,
    pub separator: VertexSet,
    pub y_side: VertexSet,
}

impl Separation {
    /// Checks the type invariants: the three parts partition the vertex set
    /// and no edge joins `x_side` to `y_side`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let all = self.x_side.union(&self.separator).union(&self.y_side);
        all == g.vertex_set()
            && self.x_side.is_disjoint(&self.separator)
            && self.x_side.is_disjoint(&self.y_side)
            && self.separator.is_disjoint(&self.y_side)
            && g.open_neighborhood(&self.x_side).is_disjoint(&self.y_side)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_self_loops_and_bad_endpoints() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]).unwrap_err(),
            ParseError::SelfLoop(1)
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]).unwrap_err(),
            ParseError::Endpoint { v: 3, n: 3 }
        );
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn graph6_known_values() {
        assert_eq!(Graph::parse_graph6("?").unwrap().n(), 0);
        let k2 = Graph::parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        let k3 = Graph::parse_graph6("Bw").unwrap();
        assert_eq!((k3.n(), k3.edge_count()), (3, 3));
        assert_eq!(k3.to_graph6().unwrap(), "Bw");
        let p3 = Graph::parse_graph6(">>graph6<<AG").unwrap();
        assert_eq!((p3.n(), p3.edge_count()), (2, 0));
    }

    #[test]
    fn graph6_errors_are_distinct() {
        assert_eq!(Graph::parse_graph6(""), Err(ParseError::Graph6Empty));
        assert_eq!(
            Graph::parse_graph6("!w"),
            Err(ParseError::Graph6Header(b'!'))
        );
        assert_eq!(
            Graph::parse_graph6("B"),
            Err(ParseError::Graph6Truncated { need: 1, got: 0 })
        );
        assert_eq!(
            Graph::parse_graph6("Bww"),
            Err(ParseError::Graph6Trailing(1))
        );
        assert_eq!(
            Graph::parse_graph6("~~~"),
            Err(ParseError::Graph6TooLarge(63))
        );
    }

    #[test]
    fn graph6_round_trip() {
        for g6 in ["?", "@", "A_", "A?", "Bw", "DQc"] {
            let g = Graph::parse_graph6(g6).unwrap();
            assert_eq!(g.to_graph6().unwrap(), g6);
        }
        // a set padding bit is tolerated on input but not re-emitted
        assert_eq!(
            Graph::parse_graph6("AG").unwrap().to_graph6().unwrap(),
            "A?"
        );
        let big = Graph::from_edges(20, (0..19).map(|i| (i, i + 1))).unwrap();
        let round = Graph::parse_graph6(&big.to_graph6().unwrap()).unwrap();
        assert_eq!(round, big);
        assert!(matches!(
            Graph::empty(63).to_graph6(),
            Err(ParseError::Graph6TooLarge(63))
        ));
    }

    #[test]
    fn dimacs_parsing() {
        let g = Graph::parse_dimacs("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 3));
        // duplicate edge lines count toward m but collapse in the graph
        let g = Graph::parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(
            Graph::parse_dimacs("p edge 2 2\ne 1 2\n"),
            Err(ParseError::DimacsEdgeCount { declared: 2, found: 1 })
        );
        assert_eq!(
            Graph::parse_dimacs("p edge 2 1\ne 1 3\n"),
            Err(ParseError::DimacsEndpoint { v: 3, n: 2, lineno: 2 })
        );
        assert_eq!(
            Graph::parse_dimacs("p edge 2 1\ne 1 1\n"),
            Err(ParseError::SelfLoop(1))
        );
        assert_eq!(
            Graph::parse_dimacs("e 1 2\n"),
            Err(ParseError::DimacsNoHeader)
        );
    }

    #[test]
    fn components_ascending_by_minimum() {
        let g = Graph::from_edges(6, [(4, 2), (0, 5)]).unwrap();
        let comps = g.connected_components();
        let shown: Vec<Vec<usize>> = comps.iter().map(|c| c.to_vec()).collect();
        assert_eq!(shown, vec![vec![0, 5], vec![1], vec![2, 4], vec![3]]);
        for c in &comps {
            let (sub, _) = g.induced(c);
            assert!(sub.is_connected());
        }
    }

    #[test]
    fn neighborhoods() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = VertexSet::from([1, 2]);
        assert_eq!(p4.open_neighborhood(&s).to_vec(), vec![0, 3]);
        assert_eq!(p4.closed_neighborhood(&s).to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn torso_completes_component_neighborhoods() {
        // path 0-1-2-3-4; torso on {0,2,4} cliques nothing new except the
        // neighborhoods of {1} and {3}, creating edges 0-2 and 2-4.
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (t, ids) = p5.torso(&VertexSet::from([0, 2, 4]));
        assert_eq!(ids, vec![0, 2, 4]);
        assert_eq!(t.edges(), vec![(0, 1), (1, 2)]);

        // star: hub 0, leaves 1..4; torso on the leaves cliques them.
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let (t, _) = star.torso(&VertexSet::from([1, 2, 3, 4]));
        assert_eq!(t.edge_count(), 6);
    }

    #[test]
    fn torso_contains_induced_subgraph() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let x = VertexSet::from([0, 1, 3]);
        let (ind, _) = g.induced(&x);
        let (tor, _) = g.torso(&x);
        for (u, v) in ind.edges() {
            assert!(tor.has_edge(u, v));
        }
    }

    #[test]
    fn separation_validity() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let good = Separation {
            x_side: VertexSet::from([0]),
            separator: VertexSet::from([1]),
            y_side: VertexSet::from([2]),
        };
        assert!(good.is_valid(&p3));
        let bad = Separation {
            x_side: VertexSet::from([0, 1]),
            separator: VertexSet::new(),
            y_side: VertexSet::from([2]),
        };
        assert!(!bad.is_valid(&p3));
    }
}
