//! Exact treewidth and treedepth on small graphs, with certificates.
//!
//! Treewidth uses the elimination-order formulation: the width of an order
//! is the maximum number of higher neighbors a vertex has in the fill-in
//! graph at its elimination, and treewidth is the minimum over orders.
//! A dynamic program over vertex subsets
//! finds the optimum in `O*(2^n)`; the lexicographically least optimal
//! order is then extracted and turned into a tree decomposition.
//!
//! Treedepth follows its recursive definition directly: empty graphs have
//! depth 0, disconnected graphs take the maximum over components, and a
//! connected graph pays 1 to delete its best vertex. Memoization is on
//! vertex subsets; the recorded best roots assemble an elimination forest.
//!
//! Conventions: the empty graph has treewidth -1 and treedepth 0.

use crate::graph::Graph;
use crate::set::VertexSet;
use serde_json::json;
use std::collections::HashMap;
use thiserror::Error;

/// Default vertex cap for the exact algorithms.
pub const DEFAULT_WIDTH_CAP: usize = 20;

/// Beyond this the subset tables no longer fit in memory.
const HARD_CAP: usize = 26;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WidthError {
    #[error("graph has {n} vertices, above the exact-solver cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompositionDefect {
    #[error("parent links do not form a single rooted tree")]
    NotATree,
    #[error("vertex {0} is in no bag")]
    VertexNotCovered(usize),
    #[error("edge ({0}, {1}) is in no bag")]
    EdgeNotCovered(usize, usize),
    #[error("bags containing vertex {0} do not form a connected subtree")]
    NotConnected(usize),
    #[error("stated width {stated} but bags give {actual}")]
    WidthMismatch { stated: i32, actual: i32 },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ForestDefect {
    #[error("parent links contain a cycle")]
    Cyclic,
    #[error("edge ({0}, {1}) does not join an ancestor-descendant pair")]
    EdgeNotCovered(usize, usize),
    #[error("component with minimum vertex {0} does not have exactly one root")]
    BadRootCount(usize),
    #[error("stated depth {stated} but paths give {actual}")]
    DepthMismatch { stated: u32, actual: u32 },
}

/// A tree decomposition: bags indexed by node, parent links with the root
/// at `None`. Satisfies: every vertex is in a bag, every edge is inside a
/// bag, and the bags containing any fixed vertex form a subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub parent: Vec<Option<usize>>,
    pub bags: Vec<VertexSet>,
    pub width: i32,
}

impl TreeDecomposition {
    pub fn validate(&self, g: &Graph) -> Result<(), DecompositionDefect> {
        let nodes = self.bags.len();
        if self.parent.len() != nodes {
            return Err(DecompositionDefect::NotATree);
        }
        if nodes > 0 {
            let roots = self.parent.iter().filter(|p| p.is_none()).count();
            if roots != 1 {
                return Err(DecompositionDefect::NotATree);
            }
            for start in 0..nodes {
                let mut cur = start;
                let mut steps = 0;
                while let Some(p) = self.parent[cur] {
                    if p >= nodes || steps > nodes {
                        return Err(DecompositionDefect::NotATree);
                    }
                    cur = p;
                    steps += 1;
                }
            }
        }
        for v in 0..g.n() {
            let holding: Vec<usize> = (0..nodes)
                .filter(|&i| self.bags[i].contains(v))
                .collect();
            if holding.is_empty() {
                return Err(DecompositionDefect::VertexNotCovered(v));
            }
            // a subtree of a rooted tree has exactly one local root
            let local_roots = holding
                .iter()
                .filter(|&&i| match self.parent[i] {
                    None => true,
                    Some(p) => !self.bags[p].contains(v),
                })
                .count();
            if local_roots != 1 {
                return Err(DecompositionDefect::NotConnected(v));
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return Err(DecompositionDefect::EdgeNotCovered(u, v));
            }
        }
        let actual = self.bags.iter().map(|b| b.len() as i32 - 1).max().unwrap_or(-1);
        if actual != self.width {
            return Err(DecompositionDefect::WidthMismatch { stated: self.width, actual });
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "nodes": (0..self.bags.len()).collect::<Vec<_>>(),
            "parent": self.parent,
            "bags": self.bags.iter().map(|b| b.to_vec()).collect::<Vec<_>>(),
            "width": self.width,
        })
    }
}

/// An elimination forest: a parent link per vertex, roots at `None`.
/// Every edge of the graph joins an ancestor-descendant pair, and the
/// depth is the maximum number of vertices on a root-to-leaf path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationForest {
    pub parent: Vec<Option<usize>>,
    pub depth: u32,
}

impl EliminationForest {
    fn ancestors(&self, v: usize) -> Option<Vec<usize>> {
        let mut chain = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            if chain.len() > self.parent.len() {
                return None;
            }
            chain.push(p);
            cur = p;
        }
        Some(chain)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), ForestDefect> {
        assert_eq!(self.parent.len(), g.n());
        let chains: Vec<Vec<usize>> = (0..g.n())
            .map(|v| self.ancestors(v).ok_or(ForestDefect::Cyclic))
            .collect::<Result<_, _>>()?;
        for (u, v) in g.edges() {
            if !chains[u].contains(&v) && !chains[v].contains(&u) {
                return Err(ForestDefect::EdgeNotCovered(u, v));
            }
        }
        for comp in g.connected_components() {
            let roots = comp.iter().filter(|&v| self.parent[v].is_none()).count();
            if roots != 1 {
                return Err(ForestDefect::BadRootCount(comp.min_elem().unwrap()));
            }
        }
        let actual = chains.iter().map(|c| c.len() as u32).max().unwrap_or(0);
        if actual != self.depth {
            return Err(ForestDefect::DepthMismatch { stated: self.depth, actual });
        }
        Ok(())
    }

    /// Same key scheme as tree decompositions; bags are singletons and the
    /// width field carries the depth.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "nodes": (0..self.parent.len()).collect::<Vec<_>>(),
            "parent": self.parent,
            "bags": (0..self.parent.len()).map(|v| vec![v]).collect::<Vec<_>>(),
            "width": self.depth,
        })
    }
}

fn check_cap(n: usize, cap: usize) -> Result<(), WidthError> {
    if n > cap {
        return Err(WidthError::CapExceeded { n, cap });
    }
    if n > HARD_CAP {
        return Err(WidthError::CapExceeded { n, cap: HARD_CAP });
    }
    Ok(())
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
        .collect()
}

/// Number of vertices outside `s + v` reachable from `v` through `s`;
/// this is the degree of `v` after eliminating `s` with fill-in.
fn elimination_degree(adj: &[u64], s: u64, v: usize) -> u32 {
    let mut reached = 1u64 << v;
    let mut nbr = adj[v];
    loop {
        let fresh = nbr & s & !reached;
        if fresh == 0 {
            break;
        }
        reached |= fresh;
        let mut m = fresh;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            nbr |= adj[u];
        }
    }
    (nbr & !s & !(1u64 << v)).count_ones()
}

pub fn treewidth_exact(g: &Graph) -> Result<(i32, TreeDecomposition), WidthError> {
    treewidth_exact_capped(g, DEFAULT_WIDTH_CAP)
}

pub fn treewidth_exact_capped(
    g: &Graph,
    cap: usize,
) -> Result<(i32, TreeDecomposition), WidthError> {
    let n = g.n();
    check_cap(n, cap)?;
    let adj = adjacency_masks(g);
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };

    // table[s] = best achievable maximum elimination degree for the
    // remaining vertices, given that the set s is already eliminated
    let mut table = vec![0i8; 1usize << n];
    table[full as usize] = -1;
    for s in (0..full).rev() {
        let mut best = i8::MAX;
        for v in 0..n {
            if s & (1 << v) != 0 {
                continue;
            }
            let d = elimination_degree(&adj, s, v) as i8;
            let m = d.max(table[(s | (1 << v)) as usize]);
            if m < best {
                best = m;
            }
        }
        table[s as usize] = best;
    }
    let width = i32::from(table[0]);

    // lexicographically least optimal elimination order
    let mut order = Vec::with_capacity(n);
    let mut s = 0u64;
    while s != full {
        for v in 0..n {
            if s & (1 << v) != 0 {
                continue;
            }
            let d = elimination_degree(&adj, s, v) as i8;
            if d.max(table[(s | (1 << v)) as usize]) as i32 <= width {
                order.push(v);
                s |= 1 << v;
                break;
            }
        }
    }

    // simulate the elimination to collect bags and attach each bag to the
    // bag of its earliest-eliminated fill neighbor
    let mut cur = adj.clone();
    let mut alive = full;
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut parent = Vec::with_capacity(n);
    for (i, &v) in order.iter().enumerate() {
        let nb = cur[v] & alive & !(1 << v);
        let mut bag = VertexSet::singleton(v);
        let mut m = nb;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            bag.insert(u);
            cur[u] |= nb & !(1 << u);
        }
        bags.push(bag);
        parent.push(if nb != 0 {
            let mut m = nb;
            let mut first = usize::MAX;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                first = first.min(pos[u]);
            }
            Some(first)
        } else if i + 1 < n {
            Some(i + 1)
        } else {
            None
        });
        alive &= !(1 << v);
    }
    let dec = TreeDecomposition { parent, bags, width };
    debug_assert_eq!(dec.validate(g), Ok(()));
    Ok((width, dec))
}

pub fn treedepth_exact(g: &Graph) -> Result<(u32, EliminationForest), WidthError> {
    treedepth_exact_capped(g, DEFAULT_WIDTH_CAP)
}

pub fn treedepth_exact_capped(
    g: &Graph,
    cap: usize,
) -> Result<(u32, EliminationForest), WidthError> {
    let n = g.n();
    check_cap(n, cap)?;
    let adj = adjacency_masks(g);
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    // value and best deletion root per connected subset
    let mut memo: HashMap<u64, (u32, usize)> = HashMap::new();
    let depth = td_of_subset(&adj, full, &mut memo);

    let mut parent = vec![None; n];
    build_forest(&adj, full, None, &memo, &mut parent);
    let forest = EliminationForest { parent, depth };
    debug_assert_eq!(forest.validate(g), Ok(()));
    Ok((depth, forest))
}

fn mask_components(adj: &[u64], s: u64) -> Vec<u64> {
    let mut rest = s;
    let mut out = Vec::new();
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let mut comp = 1u64 << v;
        loop {
            let mut nbr = 0u64;
            let mut m = comp;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                nbr |= adj[u];
            }
            let fresh = nbr & s & !comp;
            if fresh == 0 {
                break;
            }
            comp |= fresh;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

fn td_of_subset(adj: &[u64], s: u64, memo: &mut HashMap<u64, (u32, usize)>) -> u32 {
    mask_components(adj, s)
        .into_iter()
        .map(|c| td_connected(adj, c, memo))
        .max()
        .unwrap_or(0)
}

fn td_connected(adj: &[u64], s: u64, memo: &mut HashMap<u64, (u32, usize)>) -> u32 {
    if let Some(&(val, _)) = memo.get(&s) {
        return val;
    }
    let mut best = u32::MAX;
    let mut root = 0;
    let mut m = s;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let val = 1 + td_of_subset(adj, s & !(1u64 << v), memo);
        if val < best {
            best = val;
            root = v;
        }
    }
    memo.insert(s, (best, root));
    best
}

fn build_forest(
    adj: &[u64],
    s: u64,
    parent_of_roots: Option<usize>,
    memo: &HashMap<u64, (u32, usize)>,
    parent: &mut Vec<Option<usize>>,
) {
    for comp in mask_components(adj, s) {
        let (_, root) = memo[&comp];
        parent[root] = parent_of_roots;
        build_forest(adj, comp & !(1u64 << root), Some(root), memo, parent);
    }
}

/// Decision form of `treewidth_exact`; may answer without running the full
/// dynamic program.
pub fn treewidth_atmost(g: &Graph, bound: i32) -> Result<bool, WidthError> {
    treewidth_atmost_capped(g, bound, DEFAULT_WIDTH_CAP)
}

pub fn treewidth_atmost_capped(g: &Graph, bound: i32, cap: usize) -> Result<bool, WidthError> {
    let n = g.n() as i32;
    if bound >= n - 1 {
        return Ok(true);
    }
    if bound < 0 {
        // only the empty graph has width -1, and n - 1 >= 0 was not below bound
        return Ok(false);
    }
    Ok(treewidth_exact_capped(g, cap)?.0 <= bound)
}

/// Decision form of `treedepth_exact`.
pub fn treedepth_atmost(g: &Graph, bound: u32) -> Result<bool, WidthError> {
    treedepth_atmost_capped(g, bound, DEFAULT_WIDTH_CAP)
}

pub fn treedepth_atmost_capped(g: &Graph, bound: u32, cap: usize) -> Result<bool, WidthError> {
    if bound as usize >= g.n() {
        return Ok(true);
    }
    if bound == 0 {
        return Ok(g.n() == 0);
    }
    Ok(treedepth_exact_capped(g, cap)?.0 <= bound)
}
