//! Membership oracles for hereditary graph classes.
//!
//! Two kinds of class are supported: bipartite graphs, and classes given
//! by a finite list of forbidden induced subgraphs. Both contain the empty
//! graph and are closed under vertex deletion, which the solvers rely on.
//!
//! Presets cover the standard obstruction lists: triangle-free `{K3}`,
//! claw-free `{K1,3}`, split `{2K2, C4, C5}`, cographs `{P4}`, and bounded
//! degree. For maximum degree `d` the full obstruction list is every graph
//! on `d + 2` vertices with a universal vertex; a star alone would not do,
//! since e.g. `K3` contains no induced `K1,2` yet has degree 2.

use crate::families;
use crate::graph::{Graph, ParseError};
use crate::set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("operation requires a forbidden-induced-subgraph class, got {0}")]
    NotFiniteClass(String),
    #[error("obstruction list must not be empty")]
    EmptyObstructionList,
    #[error("obstruction {index} has no vertices; every obstruction needs at least one")]
    EmptyObstruction { index: usize },
    #[error("max-degree preset supports degree at most {max}, got {got}")]
    DegreeTooLarge { got: usize, max: usize },
    #[error("obstruction file line {lineno}: {source}")]
    ObstructionFile { lineno: usize, source: ParseError },
}

/// A proper 2-coloring of (part of) a graph. The two color classes are
/// disjoint; the domain is their union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub color1: VertexSet,
    pub color2: VertexSet,
}

impl Coloring {
    pub fn class_of(&self, v: usize) -> Option<u8> {
        if self.color1.contains(v) {
            Some(1)
        } else if self.color2.contains(v) {
            Some(2)
        } else {
            None
        }
    }

    pub fn domain(&self) -> VertexSet {
        self.color1.union(&self.color2)
    }

    /// True when both classes are independent sets of `g` and disjoint.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.color1.is_disjoint(&self.color2)
            && self
                .color1
                .iter()
                .all(|v| g.neighbors(v).is_disjoint(&self.color1))
            && self
                .color2
                .iter()
                .all(|v| g.neighbors(v).is_disjoint(&self.color2))
    }
}

/// Canonical proper 2-coloring of the subgraph induced by `within`, or
/// `None` if it is not bipartite. Canonical means: components are colored
/// independently by BFS layering, and each component's minimum vertex gets
/// color 1.
pub fn bipartite_within(g: &Graph, within: &VertexSet) -> Option<Coloring> {
    let alive = within.intersection(&g.vertex_set());
    let mut c1 = VertexSet::new();
    let mut c2 = VertexSet::new();
    for comp in g.components_within(&alive) {
        let mut frontier = VertexSet::singleton(comp.min_elem().unwrap());
        let mut color1_turn = true;
        let mut seen = VertexSet::new();
        while !frontier.is_empty() {
            if color1_turn {
                c1.union_with(&frontier);
            } else {
                c2.union_with(&frontier);
            }
            seen.union_with(&frontier);
            frontier = g
                .open_neighborhood(&frontier)
                .intersection(&comp)
                .difference(&seen);
            color1_turn = !color1_turn;
        }
    }
    // layering is a valid 2-coloring exactly when the graph is bipartite
    for v in c1.iter() {
        if !g.neighbors(v).intersection(&alive).is_disjoint(&c1) {
            return None;
        }
    }
    for v in c2.iter() {
        if !g.neighbors(v).intersection(&alive).is_disjoint(&c2) {
            return None;
        }
    }
    Some(Coloring { color1: c1, color2: c2 })
}

/// Canonical proper 2-coloring of the whole graph, or `None`.
pub fn is_bipartite(g: &Graph) -> Option<Coloring> {
    bipartite_within(g, &g.vertex_set())
}

/// An induced occurrence of an obstruction: `vertices[i]` is the image of
/// obstruction vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenEmbedding {
    pub obstruction: usize,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub enum OracleVariant {
    Bipartite,
    ForbiddenInduced(Vec<Graph>),
}

/// A hereditary graph class with a decidable membership test.
#[derive(Debug, Clone)]
pub struct ClassOracle {
    name: String,
    variant: OracleVariant,
}

impl ClassOracle {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn variant(&self) -> &OracleVariant {
        &self.variant
    }

    pub fn is_finite_class(&self) -> bool {
        matches!(self.variant, OracleVariant::ForbiddenInduced(_))
    }

    pub fn bipartite() -> Self {
        ClassOracle { name: "bip".into(), variant: OracleVariant::Bipartite }
    }

    pub fn from_obstructions(
        name: impl Into<String>,
        obstructions: Vec<Graph>,
    ) -> Result<Self, OracleError> {
        if obstructions.is_empty() {
            return Err(OracleError::EmptyObstructionList);
        }
        for (index, h) in obstructions.iter().enumerate() {
            if h.n() == 0 {
                return Err(OracleError::EmptyObstruction { index });
            }
        }
        Ok(ClassOracle {
            name: name.into(),
            variant: OracleVariant::ForbiddenInduced(obstructions),
        })
    }

    /// One graph6 string per line; `#` starts a comment, blank lines are
    /// skipped.
    pub fn from_obstruction_file(
        name: impl Into<String>,
        text: &str,
    ) -> Result<Self, OracleError> {
        let mut obstructions = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let g = Graph::parse_graph6(line)
                .map_err(|source| OracleError::ObstructionFile { lineno: idx + 1, source })?;
            obstructions.push(g);
        }
        Self::from_obstructions(name, obstructions)
    }

    pub fn triangle_free() -> Self {
        Self::from_obstructions("triangle-free", vec![families::complete(3)]).unwrap()
    }

    pub fn claw_free() -> Self {
        Self::from_obstructions("claw-free", vec![families::star(3)]).unwrap()
    }

    pub fn split() -> Self {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let obs = vec![two_k2, families::cycle(4).unwrap(), families::cycle(5).unwrap()];
        Self::from_obstructions("split", obs).unwrap()
    }

    pub fn cograph() -> Self {
        Self::from_obstructions("cograph", vec![families::path(4)]).unwrap()
    }

    /// Graphs of maximum degree at most `d`. The obstructions are all
    /// graphs on `d + 2` vertices having a universal vertex, one per
    /// isomorphism class; supported for `d <= 5`.
    pub fn max_degree(d: usize) -> Result<Self, OracleError> {
        const MAX_D: usize = 5;
        if d > MAX_D {
            return Err(OracleError::DegreeTooLarge { got: d, max: MAX_D });
        }
        let mut obstructions = Vec::new();
        for leaves in families::all_graphs(d + 1).expect("d + 1 <= 6") {
            let mut edges: Vec<(usize, usize)> = (1..d + 2).map(|v| (0, v)).collect();
            edges.extend(leaves.edges().iter().map(|&(u, v)| (u + 1, v + 1)));
            obstructions.push(Graph::from_edges(d + 2, edges).unwrap());
        }
        Self::from_obstructions(format!("maxdeg:{d}"), obstructions)
    }

    /// The least-index obstruction with an induced occurrence in `g`,
    /// under the lexicographically least vertex map. `None` means `g` is
    /// in the class. Errors on the bipartite oracle.
    pub fn find_forbidden_induced(
        &self,
        g: &Graph,
    ) -> Result<Option<ForbiddenEmbedding>, OracleError> {
        let obstructions = match &self.variant {
            OracleVariant::Bipartite => {
                return Err(OracleError::NotFiniteClass(self.name.clone()))
            }
            OracleVariant::ForbiddenInduced(list) => list,
        };
        for (obstruction, h) in obstructions.iter().enumerate() {
            if let Some(vertices) = least_induced_embedding(g, h) {
                return Ok(Some(ForbiddenEmbedding { obstruction, vertices }));
            }
        }
        Ok(None)
    }

    /// Like [`Self::find_forbidden_induced`], but searching only the
    /// subgraph induced by `within`. Vertices come back in original ids.
    pub fn find_forbidden_induced_within(
        &self,
        g: &Graph,
        within: &VertexSet,
    ) -> Result<Option<ForbiddenEmbedding>, OracleError> {
        let (sub, ids) = g.induced(within);
        Ok(self.find_forbidden_induced(&sub)?.map(|emb| ForbiddenEmbedding {
            obstruction: emb.obstruction,
            vertices: emb.vertices.into_iter().map(|v| ids[v]).collect(),
        }))
    }

    /// Class membership for the whole graph.
    pub fn in_class(&self, g: &Graph) -> bool {
        self.in_class_within(g, &g.vertex_set())
    }

    /// Class membership for the subgraph induced by `within`.
    pub fn in_class_within(&self, g: &Graph, within: &VertexSet) -> bool {
        match &self.variant {
            OracleVariant::Bipartite => bipartite_within(g, within).is_some(),
            OracleVariant::ForbiddenInduced(list) => {
                // with connected obstructions the search can run per component
                let comps: Vec<VertexSet> = if list.iter().all(|h| h.is_connected()) {
                    g.components_within(within)
                } else {
                    vec![within.clone()]
                };
                comps.iter().all(|c| {
                    let (sub, _) = g.induced(c);
                    list.iter().all(|h| least_induced_embedding(&sub, h).is_none())
                })
            }
        }
    }
}

/// Lexicographically least injective map realizing `h` as an induced
/// subgraph of `g`, by backtracking in obstruction vertex order.
fn least_induced_embedding(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    let mut map: Vec<usize> = Vec::with_capacity(h.n());
    let mut used = VertexSet::new();
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut VertexSet) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for cand in 0..g.n() {
            if used.contains(cand) || g.degree(cand) < h.degree(i) {
                continue;
            }
            let ok = (0..i).all(|j| g.has_edge(map[j], cand) == h.has_edge(j, i));
            if !ok {
                continue;
            }
            map.push(cand);
            used.insert(cand);
            if go(g, h, map, used) {
                return true;
            }
            map.pop();
            used.remove(cand);
        }
        false
    }
    go(g, h, &mut map, &mut used).then_some(map)
}
