//! Deterministic generators for named graph families.
//!
//! Everything here is reproducible: the random family takes an explicit
//! seed and fixed-order edge sampling, so equal parameters always produce
//! the same graph, byte for byte, across runs and platforms.

use crate::graph::Graph;
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameters for family {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },
}

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter { family, reason: reason.into() }
}

/// Path on `n` vertices `0-1-...-(n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("cycle", format!("need at least 3 vertices, got {n}")));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap())
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).tuple_combinations()).unwrap()
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).cartesian_product(a..a + b)).unwrap()
}

/// Star with center `0` and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// Wheel: hub `0` joined to every vertex of the cycle `1..=rim`.
pub fn wheel(rim: usize) -> Result<Graph, FamilyError> {
    if rim < 3 {
        return Err(bad("wheel", format!("need a rim of at least 3, got {rim}")));
    }
    let rim_edges = (1..=rim).map(|i| (i, i % rim + 1));
    let spokes = (1..=rim).map(|i| (0, i));
    Ok(Graph::from_edges(rim + 1, rim_edges.chain(spokes)).unwrap())
}

/// `rows x cols` grid; vertex `(i, j)` has id `i * cols + j`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph, FamilyError> {
    if rows == 0 || cols == 0 {
        return Err(bad("grid", "both dimensions must be positive"));
    }
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((i * cols + j, i * cols + j + 1));
            }
            if i + 1 < rows {
                edges.push((i * cols + j, (i + 1) * cols + j));
            }
        }
    }
    Ok(Graph::from_edges(rows * cols, edges).unwrap())
}

/// The Petersen graph: outer cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).unwrap()
}

/// Erdos-Renyi graph: each pair `(i, j)` with `i < j`, visited in ascending
/// order, becomes an edge with probability `p` under a ChaCha8 stream
/// seeded with `seed`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(bad("gnp", format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, edges).unwrap())
}

/// A clique `0..m` with a complete bipartite appendage glued on: `pendants`
/// extra vertices, each adjacent to exactly the clique vertices `0, 1, 2`.
/// Every 2-separator leaves the graph connected, which makes these useful
/// as highly unbreakable non-bipartite instances.
pub fn clique_with_appendage(m: usize, pendants: usize) -> Result<Graph, FamilyError> {
    if m < 3 {
        return Err(bad("appendage", format!("need a clique of at least 3, got {m}")));
    }
    let clique = (0..m).tuple_combinations();
    let pend = (0..pendants).flat_map(|i| (0..3).map(move |a| (m + i, a)));
    Ok(Graph::from_edges(m + pendants, clique.chain(pend)).unwrap())
}

const MAX_ENUM_N: usize = 7;

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // index into the list of pairs (0,1), (0,2), (1,2), (0,3), ...
    j * (j - 1) / 2 + i
}

fn canonical_mask(mask: u32, perm_tables: &[Vec<u8>]) -> u32 {
    let mut best = u32::MAX;
    for table in perm_tables {
        let mut m = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            m |= 1 << table[b];
        }
        if m < best {
            best = m;
        }
    }
    best
}

/// All graphs on exactly `n` labeled vertices, one representative per
/// isomorphism class, ascending by a canonical edge encoding. Supported
/// for `n <= 7` (beyond that the counts explode).
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if n > MAX_ENUM_N {
        return Err(bad(
            "all-graphs",
            format!("isomorphism-free enumeration is supported up to {MAX_ENUM_N} vertices, got {n}"),
        ));
    }
    let mut reps: Vec<u32> = vec![0];
    for m in 1..=n {
        // pair-index remap table per permutation of m vertices
        let perm_tables: Vec<Vec<u8>> = (0..m)
            .permutations(m)
            .map(|perm| {
                let mut table = vec![0u8; m * (m - 1) / 2];
                for j in 1..m {
                    for i in 0..j {
                        let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                        table[pair_index(m, i, j)] = pair_index(m, a, b) as u8;
                    }
                }
                table
            })
            .collect();
        let mut next = std::collections::BTreeSet::new();
        for &old in &reps {
            for nb in 0u32..1 << (m - 1) {
                let mut mask = old;
                for i in 0..m - 1 {
                    if nb & (1 << i) != 0 {
                        mask |= 1 << pair_index(m, i, m - 1);
                    }
                }
                next.insert(canonical_mask(mask, &perm_tables));
            }
        }
        reps = next.into_iter().collect();
    }
    Ok(reps
        .into_iter()
        .map(|mask| {
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if mask & (1 << pair_index(n, i, j)) != 0 {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_families() {
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert!(cycle(2).is_err());
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(complete_bipartite(3, 4).edge_count(), 12);
        assert_eq!(star(6).degree(0), 6);
        let w = wheel(8).unwrap();
        assert_eq!((w.n(), w.edge_count(), w.degree(0)), (9, 16, 8));
        let g = grid(3, 3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 12));
        let p = petersen();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = gnp(10, 0.3, 7).unwrap();
        let b = gnp(10, 0.3, 7).unwrap();
        assert_eq!(a, b);
        let c = gnp(10, 0.3, 8).unwrap();
        assert_ne!(a, c);
        assert!(gnp(5, 1.5, 0).is_err());
        assert_eq!(gnp(6, 1.0, 0).unwrap().edge_count(), 15);
        assert_eq!(gnp(6, 0.0, 0).unwrap().edge_count(), 0);
    }

    #[test]
    fn appendage_shape() {
        let g = clique_with_appendage(5, 3).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 10 + 9);
        for p in 5..8 {
            assert_eq!(g.neighbors(p).to_vec(), vec![0, 1, 2]);
        }
    }

    #[test]
    fn graph_counts_up_to_isomorphism() {
        // OEIS A000088: 1, 1, 2, 4, 11, 34, 156, 1044
        let expected = [1usize, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(all_graphs(n).unwrap().len(), want, "n = {n}");
        }
        assert!(all_graphs(8).is_err());
    }
}
