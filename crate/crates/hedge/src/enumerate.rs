//! Enumeration of small structures: connected sets with bounded
//! neighborhoods, minimal deletion sets into a finite-obstruction class,
//! and separations with a small separator and two large sides.

use crate::graph::{Graph, Separation};
use crate::oracle::{ClassOracle, OracleError, OracleVariant};
use crate::set::VertexSet;
use itertools::Itertools;
use thiserror::Error;

/// Default vertex cap for the exhaustive separation search.
pub const DEFAULT_SEPARATION_CAP: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("graph has {n} vertices, above the separation-search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Query for connected sets around an anchor vertex: sets `S` with
/// `anchor in S`, `|S| <= size_budget + 1` and `|N(S)| <= nbhd_budget`.
/// There are at most `size_budget * nbhd_budget * C(size_budget +
/// nbhd_budget, size_budget)` such sets when both budgets are positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectedSetQuery {
    pub anchor: usize,
    pub size_budget: usize,
    pub nbhd_budget: usize,
}

/// All connected sets matching the query, in canonical order, each once.
///
/// The search grows a set from the anchor, It branches on the least
/// unresolved neighbor: either include it or exclude it forever. Excluded
/// vertices stay neighbors of every extension, so a branch dies as soon as
/// the exclusions exceed the neighborhood budget.
pub fn enum_connected_sets(g: &Graph, q: &ConnectedSetQuery) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if q.anchor >= g.n() {
        return out;
    }
    let mut b = VertexSet::singleton(q.anchor);
    let mut x = VertexSet::new();
    fn go(
        g: &Graph,
        q: &ConnectedSetQuery,
        b: &mut VertexSet,
        x: &mut VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        let frontier = g.open_neighborhood(b).difference(x);
        match frontier.min_elem() {
            None => out.push(b.clone()),
            Some(u) => {
                if b.len() < q.size_budget + 1 {
                    b.insert(u);
                    go(g, q, b, x, out);
                    b.remove(u);
                }
                if x.len() < q.nbhd_budget {
                    x.insert(u);
                    go(g, q, b, x, out);
                    x.remove(u);
                }
            }
        }
    }
    go(g, q, &mut b, &mut x, &mut out);
    out.sort();
    out
}

/// All inclusion-minimal sets `Y` with `|Y| <= bound` whose deletion puts
/// the graph into the oracle's class, in canonical order. Requires a
/// finite-obstruction oracle.
///
/// Branches on the vertices of a forbidden occurrence; partial deletions
/// extending an already complete deletion set are pruned, and non-minimal
/// leftovers are filtered at the end.
pub fn enum_minimal_deletion_sets(
    oracle: &ClassOracle,
    g: &Graph,
    bound: usize,
) -> Result<Vec<VertexSet>, OracleError> {
    if !matches!(oracle.variant(), OracleVariant::ForbiddenInduced(_)) {
        return Err(OracleError::NotFiniteClass(oracle.name().to_string()));
    }
    let all = g.vertex_set();
    let mut complete: Vec<VertexSet> = Vec::new();
    let mut stack = vec![VertexSet::new()];
    while let Some(deleted) = stack.pop() {
        if complete.iter().any(|f| f.is_subset_of(&deleted) && *f != deleted) {
            continue;
        }
        let within = all.difference(&deleted);
        match oracle.find_forbidden_induced_within(g, &within)? {
            None => complete.push(deleted),
            Some(emb) => {
                if deleted.len() < bound {
                    for v in emb.vertices {
                        let mut next = deleted.clone();
                        next.insert(v);
                        stack.push(next);
                    }
                }
            }
        }
    }
    let mut out: Vec<VertexSet> = complete
        .into_iter()
        .filter(|y| {
            y.iter().all(|v| {
                let mut smaller = y.clone();
                smaller.remove(v);
                !oracle.in_class_within(g, &all.difference(&smaller))
            })
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn find_separation(
    g: &Graph,
    s: usize,
    c: usize,
) -> Result<Option<Separation>, EnumError> {
    find_separation_capped(g, s, c, DEFAULT_SEPARATION_CAP)
}

/// Some partition `(X, C, Y)` of the vertices with `|C| <= c`, no edge
/// between `X` and `Y`, and both `|X| >= s` and `|Y| >= s`, if one exists.
/// Separators are tried in canonical order; exhaustive, so capped.
pub fn find_separation_capped(
    g: &Graph,
    s: usize,
    c: usize,
    cap: usize,
) -> Result<Option<Separation>, EnumError> {
    let n = g.n();
    if n > cap {
        return Err(EnumError::CapExceeded { n, cap });
    }
    let all = g.vertex_set();
    for csize in 0..=c.min(n) {
        for sep in (0..n).combinations(csize) {
            let separator: VertexSet = sep.iter().copied().collect();
            let comps = g.components_within(&all.difference(&separator));
            if let Some(sep) = split_components(&comps, s, separator) {
                debug_assert!(sep.is_valid(g));
                return Ok(Some(sep));
            }
        }
    }
    Ok(None)
}

/// Group whole components into two sides of size at least `s` each, via a
/// subset-sum over component sizes.
fn split_components(comps: &[VertexSet], s: usize, separator: VertexSet) -> Option<Separation> {
    let sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    let total: usize = sizes.iter().sum();
    if total < 2 * s {
        return None;
    }
    // reachable[i] = sums over the first i components, as a bitmask
    let mut reachable: Vec<u64> = vec![1];
    for &sz in &sizes {
        let prev = *reachable.last().unwrap();
        reachable.push(prev | prev << sz);
    }
    let target = (s..=total - s).find(|&t| reachable[sizes.len()] >> t & 1 == 1)?;
    let mut x_side = VertexSet::new();
    let mut rest = target;
    for i in (0..sizes.len()).rev() {
        // component i joins the x side iff the remainder is not reachable
        // without it
        if reachable[i] >> rest & 1 == 0 {
            x_side.union_with(&comps[i]);
            rest -= sizes[i];
        }
    }
    let y_side = comps
        .iter()
        .fold(VertexSet::new(), |acc, c| acc.union(c))
        .difference(&x_side);
    Some(Separation { x_side, separator, y_side })
}

/// True when the graph admits no `(s, c)`-separation.
pub fn is_unbreakable(g: &Graph, s: usize, c: usize) -> Result<bool, EnumError> {
    Ok(find_separation(g, s, c)?.is_none())
}

pub fn is_unbreakable_capped(g: &Graph, s: usize, c: usize, cap: usize) -> Result<bool, EnumError> {
    Ok(find_separation_capped(g, s, c, cap)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, gnp, path, star, wheel};

    /// Reference filter: check every subset directly.
    fn connected_sets_by_filter(g: &Graph, q: &ConnectedSetQuery) -> Vec<VertexSet> {
        let n = g.n();
        let mut out = Vec::new();
        for mask in 0u64..1 << n {
            let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if s.contains(q.anchor)
                && s.len() <= q.size_budget + 1
                && g.components_within(&s).len() == 1
                && g.open_neighborhood(&s).len() <= q.nbhd_budget
            {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn star_and_triangle_queries() {
        let q = ConnectedSetQuery { anchor: 0, size_budget: 1, nbhd_budget: 3 };
        let sets = enum_connected_sets(&star(3), &q);
        let shown: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(shown, vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 3]]);

        let q = ConnectedSetQuery { anchor: 0, size_budget: 2, nbhd_budget: 3 };
        let sets = enum_connected_sets(&complete(3), &q);
        let shown: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(shown, vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn matches_subset_filter_on_random_graphs() {
        for seed in 0..25 {
            let g = gnp(9, 0.3, seed).unwrap();
            for (b, f) in [(1, 2), (2, 2), (3, 3)] {
                let q = ConnectedSetQuery { anchor: 0, size_budget: b, nbhd_budget: f };
                assert_eq!(
                    enum_connected_sets(&g, &q),
                    connected_sets_by_filter(&g, &q),
                    "seed {seed} b {b} f {f}"
                );
            }
        }
    }

    #[test]
    fn count_bound_holds() {
        fn binom(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for seed in 0..10 {
            let g = gnp(10, 0.4, seed).unwrap();
            for b in 1..=3usize {
                for f in 1..=3usize {
                    let q = ConnectedSetQuery { anchor: 2, size_budget: b, nbhd_budget: f };
                    let count = enum_connected_sets(&g, &q).len();
                    assert!(count <= b * f * binom(b + f, b));
                }
            }
        }
    }

    #[test]
    fn minimal_triangle_deletion_sets_of_k4() {
        let oracle = ClassOracle::triangle_free();
        let sets = enum_minimal_deletion_sets(&oracle, &complete(4), 2).unwrap();
        let shown: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(
            shown,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        // bound too small: no set of size <= 1 works
        assert!(enum_minimal_deletion_sets(&oracle, &complete(4), 1)
            .unwrap()
            .is_empty());
        assert!(enum_minimal_deletion_sets(&ClassOracle::bipartite(), &complete(4), 2).is_err());
    }

    #[test]
    fn minimal_deletion_sets_match_filter() {
        let oracle = ClassOracle::triangle_free();
        for seed in 0..20 {
            let g = gnp(8, 0.4, seed).unwrap();
            let bound = 3;
            let fast = enum_minimal_deletion_sets(&oracle, &g, bound).unwrap();
            // reference: all subsets, kept if deleting them works and no
            // proper subset works
            let all = g.vertex_set();
            let mut slow = Vec::new();
            for mask in 0u64..1 << g.n() {
                let y: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
                if y.len() > bound || !oracle.in_class_within(&g, &all.difference(&y)) {
                    continue;
                }
                let minimal = y.iter().all(|v| {
                    let mut sub = y.clone();
                    sub.remove(v);
                    !oracle.in_class_within(&g, &all.difference(&sub))
                });
                if minimal {
                    slow.push(y);
                }
            }
            slow.sort();
            assert_eq!(fast, slow, "seed {seed}");
        }
    }

    #[test]
    fn path_separation_and_unbreakable_cycle() {
        let sep = find_separation(&path(9), 4, 1).unwrap().unwrap();
        assert_eq!(sep.separator.to_vec(), vec![4]);
        assert_eq!(sep.x_side.len(), 4);
        assert_eq!(sep.y_side.len(), 4);

        let c6 = cycle(6).unwrap();
        let sep = find_separation(&c6, 2, 2).unwrap().unwrap();
        assert!(sep.is_valid(&c6));
        assert_eq!(sep.separator.to_vec(), vec![0, 3]);
        assert!(is_unbreakable(&c6, 2, 1).unwrap());
        assert!(is_unbreakable(&c6, 3, 2).unwrap());

        // wheels survive every 2-separator
        for rim in [5, 6, 8] {
            let w = wheel(rim).unwrap();
            for s in 1..=3 {
                assert!(is_unbreakable(&w, s, 2).unwrap());
            }
            assert!(!is_unbreakable(&w, 1, 3).unwrap());
        }
        assert_eq!(
            find_separation(&Graph::empty(25), 1, 0),
            Err(EnumError::CapExceeded { n: 25, cap: 20 })
        );
    }

    #[test]
    fn separation_groups_whole_components() {
        // components of sizes 1, 2, 3 with an empty separator: sides must
        // combine components, e.g. {1,2} vs {3}
        let g = Graph::from_edges(6, [(1, 2), (3, 4), (4, 5)]).unwrap();
        let sep = find_separation(&g, 3, 0).unwrap().unwrap();
        assert!(sep.is_valid(&g));
        assert!(sep.x_side.len() >= 3 && sep.y_side.len() >= 3);
        assert!(find_separation(&g, 4, 0).unwrap().is_none());
    }
}
