//! Odd cycle transversal machinery: the transversal-versus-separator
//! correspondence, minimum vertex separators by max-flow, and minimum
//! transversals by iterative compression.

use crate::graph::Graph;
use crate::oracle::{bipartite_within, Coloring};
use crate::set::VertexSet;
use rayon::prelude::*;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OctError {
    #[error("the parts do not form an odd cycle transversal: the remainder is not bipartite")]
    NotAnOct,
    #[error("part {0} is not an independent set")]
    NotIndependent(&'static str),
    #[error("parts w_l1, w_l2, w_i must be pairwise disjoint")]
    PartsOverlap,
    #[error("coloring is not a proper 2-coloring of the graph minus the transversal")]
    ImproperColoring,
    #[error("separator candidate intersects the transversal")]
    SeparatorOverlapsTransversal,
}

/// An odd cycle transversal `W` split into two parts. `w_l` is the part
/// expected to lie inside the large component of a witness, `w_i` the
/// part expected inside the witness itself.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionedOct {
    pub w_l: VertexSet,
    pub w_i: VertexSet,
}

impl PartitionedOct {
    pub fn oct(&self) -> VertexSet {
        self.w_l.union(&self.w_i)
    }
}

/// Terminal sets of the transversal-separator correspondence. A candidate
/// separator `X` in the ambient graph `G - W` leaves the constrained
/// 2-coloring achievable exactly when it separates `a_side` from `r_side`;
/// `X` may intersect the terminals.
#[derive(Debug, Clone)]
pub struct SeparatorInstance {
    /// Vertices forced to change color, in original ids.
    pub a_side: VertexSet,
    /// Vertices forced to keep their color, in original ids.
    pub r_side: VertexSet,
    /// The graph `G - W` the separation happens in.
    pub ambient: Graph,
    /// Ambient index to original id, ascending.
    pub ambient_ids: Vec<usize>,
}

impl SeparatorInstance {
    fn to_ambient(&self, s: &VertexSet) -> VertexSet {
        self.ambient_ids
            .iter()
            .enumerate()
            .filter(|(_, &orig)| s.contains(orig))
            .map(|(idx, _)| idx)
            .collect()
    }

    fn to_original(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|idx| self.ambient_ids[idx]).collect()
    }

    /// Minimum separator between the two terminal sets, in original ids,
    /// or `None` if every separator is larger than `cap`.
    pub fn min_separator(&self, cap: usize) -> Option<VertexSet> {
        let a = self.to_ambient(&self.a_side);
        let r = self.to_ambient(&self.r_side);
        let cut = min_vertex_separator(&self.ambient, &a, &r, cap)?;
        Some(self.to_original(&cut))
    }
}

fn check_parts(
    g: &Graph,
    w_l1: &VertexSet,
    w_l2: &VertexSet,
    w_i: &VertexSet,
) -> Result<VertexSet, OctError> {
    if !w_l1.is_disjoint(w_l2) || !w_l1.is_disjoint(w_i) || !w_l2.is_disjoint(w_i) {
        return Err(OctError::PartsOverlap);
    }
    for (name, part) in [("w_l1", w_l1), ("w_l2", w_l2)] {
        if part.iter().any(|v| !g.neighbors(v).is_disjoint(part)) {
            return Err(OctError::NotIndependent(name));
        }
    }
    Ok(w_l1.union(w_l2).union(w_i))
}

/// The terminal sets `A` (color-conflicting neighbors of the retained
/// transversal parts, which must flip) and `R` (color-agreeing neighbors,
/// which must stay), relative to the 2-coloring `c` of `G - W`. Vertices
/// of `w_l1` are destined for color 1 and `w_l2` for color 2; `w_i` is
/// the part slated for deletion.
pub fn separator_instance(
    g: &Graph,
    w_l1: &VertexSet,
    w_l2: &VertexSet,
    w_i: &VertexSet,
    c: &Coloring,
) -> Result<SeparatorInstance, OctError> {
    let w = check_parts(g, w_l1, w_l2, w_i)?;
    let rest = g.vertex_set().difference(&w);
    if bipartite_within(g, &rest).is_none() {
        return Err(OctError::NotAnOct);
    }
    if c.domain() != rest || !c.is_proper(g) {
        return Err(OctError::ImproperColoring);
    }
    // the color classes live outside W, so intersecting with them already
    // restricts the neighborhoods to the ambient graph
    let n1 = g.open_neighborhood(w_l1);
    let n2 = g.open_neighborhood(w_l2);
    let a_side = n1.intersection(&c.color1).union(&n2.intersection(&c.color2));
    let r_side = n1.intersection(&c.color2).union(&n2.intersection(&c.color1));
    let (ambient, ambient_ids) = g.induced(&rest);
    Ok(SeparatorInstance { a_side, r_side, ambient, ambient_ids })
}

/// Whether `G - (w_i ∪ x)` has a proper 2-coloring that gives all of
/// `w_l1` color 1 and all of `w_l2` color 2. Seeds the two parts and
/// propagates; components touching neither part only need to be bipartite.
pub fn check_recolorable(
    g: &Graph,
    w_l1: &VertexSet,
    w_l2: &VertexSet,
    w_i: &VertexSet,
    x: &VertexSet,
) -> Result<bool, OctError> {
    let w = check_parts(g, w_l1, w_l2, w_i)?;
    if !x.is_disjoint(&w) {
        return Err(OctError::SeparatorOverlapsTransversal);
    }
    let alive = g.vertex_set().difference(w_i).difference(x);
    let mut c1 = w_l1.clone();
    let mut c2 = w_l2.clone();
    let mut queue: VecDeque<usize> = w_l1.iter().chain(w_l2.iter()).collect();
    while let Some(v) = queue.pop_front() {
        let flipped = if c1.contains(v) { &mut c2 } else { &mut c1 };
        for u in g.neighbors(v).intersection(&alive).iter() {
            if !flipped.contains(u) {
                flipped.insert(u);
                queue.push_back(u);
            }
        }
    }
    // propagation colors every alive neighbor of a colored vertex, so the
    // seeded part is properly colored exactly when the classes stay disjoint
    if !c1.is_disjoint(&c2) {
        return Ok(false);
    }
    // untouched components are free to use either orientation
    Ok(bipartite_within(g, &alive.difference(&c1).difference(&c2)).is_some())
}

/// True when `G - x` has no path from `a` to `r`. A vertex of `a ∩ r`
/// outside `x` counts as a path of length zero.
pub fn separates(g: &Graph, a: &VertexSet, r: &VertexSet, x: &VertexSet) -> bool {
    let alive = g.vertex_set().difference(x);
    g.components_within(&alive)
        .iter()
        .all(|comp| comp.is_disjoint(a) || comp.is_disjoint(r))
}

/// A minimum vertex set whose removal disconnects `a` from `r`, allowed
/// to include terminal vertices, or `None` if every such set is larger
/// than `cap`. Unit-capacity vertex splitting plus augmenting paths; the
/// cut is read off the residual reachability from the source, so the
/// result is deterministic.
pub fn min_vertex_separator(
    g: &Graph,
    a: &VertexSet,
    r: &VertexSet,
    cap: usize,
) -> Option<VertexSet> {
    let n = g.n();
    // nodes: 2v enters vertex v, 2v+1 leaves it; then source and sink
    let (source, sink) = (2 * n, 2 * n + 1);
    let nn = 2 * n + 2;
    let inf = n as i32 + 1;
    let mut cap_m = vec![vec![0i32; nn]; nn];
    for v in 0..n {
        cap_m[2 * v][2 * v + 1] = 1;
    }
    for (u, v) in g.edges() {
        cap_m[2 * u + 1][2 * v] = inf;
        cap_m[2 * v + 1][2 * u] = inf;
    }
    for v in a.iter() {
        cap_m[source][2 * v] = inf;
    }
    for v in r.iter() {
        cap_m[2 * v + 1][sink] = inf;
    }
    let bfs = |cap_m: &Vec<Vec<i32>>| -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; nn];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in 0..nn {
                if prev[v] == usize::MAX && cap_m[u][v] > 0 {
                    prev[v] = u;
                    if v == sink {
                        return Some(prev);
                    }
                    queue.push_back(v);
                }
            }
        }
        None
    };
    let mut flow = 0usize;
    while let Some(prev) = bfs(&cap_m) {
        // every source-sink path crosses a unit split arc
        flow += 1;
        if flow > cap {
            return None;
        }
        let mut v = sink;
        while v != source {
            let u = prev[v];
            cap_m[u][v] -= 1;
            cap_m[v][u] += 1;
            v = u;
        }
    }
    let mut reach = vec![false; nn];
    reach[source] = true;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for v in 0..nn {
            if !reach[v] && cap_m[u][v] > 0 {
                reach[v] = true;
                queue.push_back(v);
            }
        }
    }
    Some((0..n).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect())
}

/// A minimum odd cycle transversal, or `None` if the minimum exceeds
/// `cap`. Iterative compression: grow the graph one vertex at a time and,
/// whenever the carried transversal stops working, rebuild a minimum one
/// by trying every split of the enlarged transversal into a deleted part
/// and two color classes, closing each split with a minimum separator.
///
/// Deterministic (splits resolved by first success in canonical order)
/// but not necessarily the lexicographically least minimum transversal.
pub fn min_oct(g: &Graph, cap: usize) -> Option<VertexSet> {
    let mut w = VertexSet::new();
    for i in 0..g.n() {
        let prefix: VertexSet = (0..=i).collect();
        if bipartite_within(g, &prefix.difference(&w)).is_some() {
            continue;
        }
        // w ∪ {i} is a transversal of the prefix graph; relabeling is the
        // identity because the prefix is an initial segment
        let (h, _) = g.induced(&prefix);
        let mut wp = w.clone();
        wp.insert(i);
        w = compress(&h, &wp, cap)?;
    }
    Some(w)
}

/// Minimum OCT of `h` given the OCT `wp`, or `None` above `cap`. Every
/// transversal `Z` splits `wp` into `Z ∩ wp` plus the two color classes
/// of `wp ∖ Z`, so scanning all 3-way splits and completing each with a
/// minimum separator in `h - wp` finds the global minimum.
fn compress(h: &Graph, wp: &VertexSet, cap: usize) -> Option<VertexSet> {
    let elems = wp.to_vec();
    let rest = h.vertex_set().difference(wp);
    let coloring = bipartite_within(h, &rest).expect("wp is a transversal");
    let total = 3usize.pow(elems.len() as u32);
    let split = |idx: usize| {
        let mut parts = [VertexSet::new(), VertexSet::new(), VertexSet::new()];
        let mut digits = idx;
        for &v in &elems {
            parts[digits % 3].insert(v);
            digits /= 3;
        }
        parts
    };
    let cost = |idx: usize| -> Option<(usize, usize)> {
        let [deleted, p1, p2] = split(idx);
        let budget = cap.checked_sub(deleted.len())?;
        let inst = separator_instance(h, &p1, &p2, &deleted, &coloring).ok()?;
        let x = inst.min_separator(budget)?;
        Some((deleted.len() + x.len(), idx))
    };
    let (_, best_idx) = (0..total)
        .into_par_iter()
        .filter_map(cost)
        .min()?;
    let [deleted, p1, p2] = split(best_idx);
    let inst = separator_instance(h, &p1, &p2, &deleted, &coloring).expect("revisiting best split");
    let budget = cap - deleted.len();
    Some(deleted.union(&inst.min_separator(budget).expect("revisiting best split")))
}
