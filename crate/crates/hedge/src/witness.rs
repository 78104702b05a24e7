//! Witness verification and search. A witness is a vertex set X whose
//! removal leaves only components inside the target class, certified by
//! the treedepth (elimination-distance kind) or treewidth (treewidth
//! kind) of the torso of X.
//!
//! Two pipelines answer "is there a witness for parameter k": a
//! brute-force search over all vertex subsets at small treewidth, and a
//! structured search at high treewidth that seeds the extraction with
//! consistent odd cycle transversals (bipartite class) or minimal
//! deletion sets (finite-obstruction classes). The structured "no"
//! answers are guaranteed only on unbreakable inputs; the solvers verify
//! that hypothesis when the graph is small enough and log a warning
//! otherwise.

use crate::enumerate::{
    enum_connected_sets, enum_minimal_deletion_sets, is_unbreakable_capped, ConnectedSetQuery,
    DEFAULT_SEPARATION_CAP,
};
use crate::graph::Graph;
use crate::oct::{min_oct, OctError, PartitionedOct};
use crate::oracle::{bipartite_within, ClassOracle, OracleError};
use crate::set::{subsets_up_to, VertexSet};
use crate::width::{
    treedepth_exact, treedepth_atmost, treewidth_exact, treewidth_atmost, WidthError,
};
use serde_json::json;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Vertex cap for the recursive elimination-distance oracle.
pub const DEFAULT_HHDEPTH_CAP: usize = 14;
/// Vertex cap for the exhaustive torso-parameter oracle and witness search.
pub const DEFAULT_TORSO_PARAM_CAP: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {n} vertices, above the brute-force cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("the seed set is not a deletion set: a remaining component is outside the class")]
    NotADeletionSet,
    #[error("the seed set has {got} vertices, above the bound of {max}")]
    DeletionSetTooLarge { got: usize, max: usize },
    #[error("invalid solver parameters: {0}")]
    InvalidParams(&'static str),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Oct(#[from] OctError),
    #[error(transparent)]
    Width(#[from] WidthError),
}

/// Which torso measure certifies the witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Elimination distance: treedepth of the torso, at most k.
    Ed,
    /// Treewidth relative to the class: treewidth of the torso, at most k - 1.
    Tw,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Ed => "ed",
            Kind::Tw => "tw",
        })
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ed" => Ok(Kind::Ed),
            "tw" => Ok(Kind::Tw),
            other => Err(format!("unknown kind {other:?}, expected \"ed\" or \"tw\"")),
        }
    }
}

/// Parameters shared by the structured pipelines: the parameter `k`, the
/// unbreakability size threshold `s`, and the separator bound `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverParams {
    pub k: usize,
    pub s: usize,
    pub c: usize,
}

impl SolverParams {
    pub fn new(k: usize, s: usize, c: usize) -> Result<Self, SolveError> {
        if s == 0 {
            return Err(SolveError::InvalidParams("s must be at least 1"));
        }
        if c < k {
            return Err(SolveError::InvalidParams("c must be at least k"));
        }
        Ok(SolverParams { k, s, c })
    }

    /// Bipartite pipeline: separators up to 2k.
    pub fn for_bipartite(k: usize, s: usize) -> Result<Self, SolveError> {
        Self::new(k, s, 2 * k)
    }

    /// Finite-obstruction pipeline: separators up to k.
    pub fn for_finite(k: usize, s: usize) -> Result<Self, SolveError> {
        Self::new(k, s, k)
    }
}

/// One branch of the extraction search: the guessed part `b` of the seed
/// set that borders the large component, one small connected set per
/// remaining seed vertex, and the residual guess `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchChoice {
    pub b: VertexSet,
    pub tuple: BTreeMap<usize, VertexSet>,
    pub q: VertexSet,
}

impl BranchChoice {
    /// The deletion set this branch proposes: the seed set, the
    /// neighborhoods of the chosen connected sets, and the residual guess.
    pub fn deletion_set(&self, g: &Graph, seed: &VertexSet) -> VertexSet {
        let mut d = seed.union(&self.q);
        for set in self.tuple.values() {
            d.union_with(&g.open_neighborhood(set));
        }
        d
    }
}

/// Per-component membership record for a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCert {
    pub vertices: VertexSet,
    pub in_class: bool,
}

/// A verified witness: X, the achieved torso value, the torso itself,
/// and the per-component class certificates.
#[derive(Debug, Clone)]
pub struct Witness {
    pub x: VertexSet,
    pub kind: Kind,
    pub k: usize,
    /// Achieved torso treedepth (ed) or treewidth (tw; -1 for the empty torso).
    pub value: i32,
    pub torso: Graph,
    /// Torso index to original vertex id, ascending.
    pub torso_ids: Vec<usize>,
    pub components: Vec<ComponentCert>,
    /// Whether every component neighborhood obeys the size bound implied
    /// by the torso value (value for ed, value + 1 for tw).
    pub note1: bool,
}

impl Witness {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": self.kind.to_string(),
            "k": self.k,
            "value": self.value,
            "x": self.x.to_vec(),
            "torso": { "graph6": self.torso.to_graph6().expect("torso within graph6 range") },
            "components": self.components.iter().map(|c| json!({
                "vertices": c.vertices.to_vec(),
                "in_class": c.in_class,
            })).collect::<Vec<_>>(),
            "checks": { "note1": self.note1, "torso_param": self.value },
        })
    }
}

/// Which pipeline branch actually ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveBranch {
    /// Treewidth was at most s + k: exhaustive subset search.
    BruteForce,
    /// High treewidth: consistent-transversal / minimal-deletion-set search.
    Structured,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub witness: Option<Witness>,
    pub branch: SolveBranch,
    /// Unbreakability check outcome on the structured branch: `None` when
    /// the graph was too large to check, otherwise the verdict. A "no"
    /// answer is only guaranteed correct when this is `Some(true)`.
    pub hypotheses_verified: Option<bool>,
}

/// True when every component of `G - x` is in the class and the torso of
/// `x` satisfies the width bound for `kind` (treedepth at most k, or
/// treewidth at most k - 1).
pub fn verify_witness(
    g: &Graph,
    x: &VertexSet,
    k: usize,
    kind: Kind,
    oracle: &ClassOracle,
) -> Result<bool, SolveError> {
    let rest = g.vertex_set().difference(x);
    for comp in g.components_within(&rest) {
        if !oracle.in_class_within(g, &comp) {
            return Ok(false);
        }
    }
    let (torso, _) = g.torso(x);
    let ok = match kind {
        Kind::Ed => treedepth_atmost(&torso, k as u32)?,
        Kind::Tw => treewidth_atmost(&torso, k as i32 - 1)?,
    };
    Ok(ok)
}

/// Builds the full certificate for `x`, or `None` if `x` is not a
/// witness for the given parameter.
pub fn certify_witness(
    g: &Graph,
    x: VertexSet,
    k: usize,
    kind: Kind,
    oracle: &ClassOracle,
) -> Result<Option<Witness>, SolveError> {
    let rest = g.vertex_set().difference(&x);
    let components: Vec<ComponentCert> = g
        .components_within(&rest)
        .into_iter()
        .map(|c| {
            let in_class = oracle.in_class_within(g, &c);
            ComponentCert { vertices: c, in_class }
        })
        .collect();
    if components.iter().any(|c| !c.in_class) {
        return Ok(None);
    }
    let (torso, torso_ids) = g.torso(&x);
    let value = match kind {
        Kind::Ed => treedepth_exact(&torso)?.0 as i32,
        Kind::Tw => treewidth_exact(&torso)?.0,
    };
    let bound_ok = match kind {
        Kind::Ed => value <= k as i32,
        Kind::Tw => value <= k as i32 - 1,
    };
    if !bound_ok {
        return Ok(None);
    }
    let nbhd_bound = match kind {
        Kind::Ed => value,
        Kind::Tw => value + 1,
    };
    let note1 = components
        .iter()
        .all(|c| g.open_neighborhood(&c.vertices).len() as i32 <= nbhd_bound);
    Ok(Some(Witness { x, kind, k, value, torso, torso_ids, components, note1 }))
}

/// Exact elimination distance to the class by the recursive definition:
/// 0 when a connected graph is in the class, otherwise one more than the
/// best single-vertex deletion; maximum over components.
pub fn brute_force_hhdepth(g: &Graph, oracle: &ClassOracle) -> Result<usize, SolveError> {
    brute_force_hhdepth_capped(g, oracle, DEFAULT_HHDEPTH_CAP)
}

pub fn brute_force_hhdepth_capped(
    g: &Graph,
    oracle: &ClassOracle,
    cap: usize,
) -> Result<usize, SolveError> {
    if g.n() > cap {
        return Err(SolveError::CapExceeded { n: g.n(), cap });
    }
    let mut memo: HashMap<VertexSet, usize> = HashMap::new();
    Ok(hhdepth_rec(g, oracle, &g.vertex_set(), &mut memo))
}

fn hhdepth_rec(
    g: &Graph,
    oracle: &ClassOracle,
    within: &VertexSet,
    memo: &mut HashMap<VertexSet, usize>,
) -> usize {
    let comps = g.components_within(within);
    if comps.len() != 1 {
        return comps
            .iter()
            .map(|c| hhdepth_rec(g, oracle, c, memo))
            .max()
            .unwrap_or(0);
    }
    let comp = comps.into_iter().next().unwrap();
    if let Some(&v) = memo.get(&comp) {
        return v;
    }
    let val = if oracle.in_class_within(g, &comp) {
        0
    } else {
        1 + comp
            .iter()
            .map(|v| {
                let mut sub = comp.clone();
                sub.remove(v);
                hhdepth_rec(g, oracle, &sub, memo)
            })
            .min()
            .unwrap()
    };
    memo.insert(comp, val);
    val
}

fn deletion_set_ok(g: &Graph, oracle: &ClassOracle, x: &VertexSet) -> bool {
    g.components_within(&g.vertex_set().difference(x))
        .iter()
        .all(|c| oracle.in_class_within(g, c))
}

/// Exhaustive minimum of the torso parameter over all deletion sets:
/// treedepth of the torso for `Ed` (0 when the graph is in the class),
/// treewidth for `Tw` (-1 when it is, by the empty-torso convention).
pub fn brute_force_torso_param(
    g: &Graph,
    oracle: &ClassOracle,
    kind: Kind,
) -> Result<i32, SolveError> {
    brute_force_torso_param_capped(g, oracle, kind, DEFAULT_TORSO_PARAM_CAP)
}

pub fn brute_force_torso_param_capped(
    g: &Graph,
    oracle: &ClassOracle,
    kind: Kind,
    cap: usize,
) -> Result<i32, SolveError> {
    if g.n() > cap {
        return Err(SolveError::CapExceeded { n: g.n(), cap });
    }
    let mut best: Option<i32> = None;
    for x in subsets_up_to(&g.vertex_set(), g.n()) {
        if !deletion_set_ok(g, oracle, &x) {
            continue;
        }
        let (torso, _) = g.torso(&x);
        let value = match kind {
            Kind::Ed => treedepth_exact(&torso)?.0 as i32,
            Kind::Tw => treewidth_exact(&torso)?.0,
        };
        best = Some(best.map_or(value, |b: i32| b.min(value)));
    }
    Ok(best.expect("deleting every vertex always qualifies"))
}

/// First witness in canonical subset order, or `None`. Exhaustive; the
/// independent reference for the solver pipelines.
pub fn brute_force_witness(
    g: &Graph,
    oracle: &ClassOracle,
    kind: Kind,
    k: usize,
) -> Result<Option<VertexSet>, SolveError> {
    brute_force_witness_capped(g, oracle, kind, k, DEFAULT_TORSO_PARAM_CAP)
}

pub fn brute_force_witness_capped(
    g: &Graph,
    oracle: &ClassOracle,
    kind: Kind,
    k: usize,
    cap: usize,
) -> Result<Option<VertexSet>, SolveError> {
    if g.n() > cap {
        return Err(SolveError::CapExceeded { n: g.n(), cap });
    }
    for x in subsets_up_to(&g.vertex_set(), g.n()) {
        if verify_witness(g, &x, k, kind, oracle)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Checks the structured-branch hypotheses at desk scale; warnings are
/// logged when a hypothesis fails or cannot be checked.
fn validate_hypotheses(g: &Graph, p: &SolverParams) -> Option<bool> {
    let tw_high = match treewidth_atmost(g, (p.s + p.k) as i32) {
        Ok(atmost) => Some(!atmost),
        Err(_) => None,
    };
    match tw_high {
        Some(false) => log::warn!(
            "treewidth is at most s + k = {}; the structured search is outside its hypotheses",
            p.s + p.k
        ),
        None => log::warn!(
            "treewidth hypothesis unchecked: {} vertices is above the width cap",
            g.n()
        ),
        Some(true) => {}
    }
    let unb = unbreakability_logged(g, p);
    match (tw_high, unb) {
        (Some(a), Some(b)) => Some(a && b),
        _ => None,
    }
}

fn unbreakability_logged(g: &Graph, p: &SolverParams) -> Option<bool> {
    match is_unbreakable_capped(g, p.s, p.c, DEFAULT_SEPARATION_CAP) {
        Ok(true) => Some(true),
        Ok(false) => {
            log::warn!(
                "graph admits a ({}, {})-separation; a negative answer from the structured pipeline is not guaranteed",
                p.s, p.c
            );
            Some(false)
        }
        Err(_) => {
            log::warn!(
                "unbreakability unchecked: {} vertices is above the cap of {}",
                g.n(),
                DEFAULT_SEPARATION_CAP
            );
            None
        }
    }
}

/// Runs `f` on every choice tuple: one candidate set per key, odometer
/// order, first key fastest. Stops early when `f` returns `Some`.
fn scan_tuples<T>(
    keys: &[usize],
    cands: &BTreeMap<usize, Vec<VertexSet>>,
    mut f: impl FnMut(&BTreeMap<usize, VertexSet>) -> Result<Option<T>, SolveError>,
) -> Result<Option<T>, SolveError> {
    if keys.iter().any(|k| cands[k].is_empty()) {
        return Ok(None);
    }
    let mut idx = vec![0usize; keys.len()];
    loop {
        let tuple: BTreeMap<usize, VertexSet> = keys
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, cands[&k][idx[i]].clone()))
            .collect();
        if let Some(t) = f(&tuple)? {
            return Ok(Some(t));
        }
        let mut pos = 0;
        loop {
            if pos == keys.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < cands[&keys[pos]].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// The unique large component's forbidden region: if `G - d0` has exactly
/// one component of size at least `s` and fewer than `s` vertices lie
/// outside its closed neighborhood, returns those outside vertices (minus
/// `d0`, which is already deleted).
fn residual_base(g: &Graph, d0: &VertexSet, s: usize) -> Option<VertexSet> {
    let comps = g.components_within(&g.vertex_set().difference(d0));
    let mut large = comps.iter().filter(|c| c.len() >= s);
    let c = large.next()?;
    if large.next().is_some() {
        return None;
    }
    let outside = g.vertex_set().difference(&g.closed_neighborhood(c));
    if outside.len() >= s {
        return None;
    }
    Some(outside.difference(d0))
}

/// Searches for a witness containing the seed deletion set `y`,
/// validating the seed and (at desk scale) the search hypotheses. The
/// returned witness is the first in canonical branch order; `None` means
/// no witness contains `y` (guaranteed only under the hypotheses).
pub fn extract_witness(
    g: &Graph,
    y: &VertexSet,
    p: &SolverParams,
    kind: Kind,
    oracle: &ClassOracle,
) -> Result<Option<Witness>, SolveError> {
    if !deletion_set_ok(g, oracle, y) {
        return Err(SolveError::NotADeletionSet);
    }
    if y.len() > p.s + p.k {
        return Err(SolveError::DeletionSetTooLarge { got: y.len(), max: p.s + p.k });
    }
    validate_hypotheses(g, p);
    Ok(extract_impl(g, y, p, kind, oracle)?.map(|(w, _)| w))
}

/// Like [`extract_witness`], also reporting which branch found the
/// witness.
pub fn extract_witness_with_choice(
    g: &Graph,
    y: &VertexSet,
    p: &SolverParams,
    kind: Kind,
    oracle: &ClassOracle,
) -> Result<Option<(Witness, BranchChoice)>, SolveError> {
    if !deletion_set_ok(g, oracle, y) {
        return Err(SolveError::NotADeletionSet);
    }
    if y.len() > p.s + p.k {
        return Err(SolveError::DeletionSetTooLarge { got: y.len(), max: p.s + p.k });
    }
    validate_hypotheses(g, p);
    extract_impl(g, y, p, kind, oracle)
}

fn extract_impl(
    g: &Graph,
    y: &VertexSet,
    p: &SolverParams,
    kind: Kind,
    oracle: &ClassOracle,
) -> Result<Option<(Witness, BranchChoice)>, SolveError> {
    let mut cands: BTreeMap<usize, Vec<VertexSet>> = BTreeMap::new();
    for yv in y.iter() {
        let q = ConnectedSetQuery { anchor: yv, size_budget: p.s - 1, nbhd_budget: p.k };
        cands.insert(yv, enum_connected_sets(g, &q));
    }
    for b in subsets_up_to(y, p.k) {
        let keys: Vec<usize> = y.difference(&b).to_vec();
        let found = scan_tuples(&keys, &cands, |tuple| {
            let mut d0 = y.clone();
            for set in tuple.values() {
                d0.union_with(&g.open_neighborhood(set));
            }
            let Some(base) = residual_base(g, &d0, p.s) else {
                return Ok(None);
            };
            // increasing |q| makes the hit cardinality-minimal for this branch
            for q in subsets_up_to(&base, base.len()) {
                let d = d0.union(&q);
                if verify_witness(g, &d, p.k, kind, oracle)? {
                    let witness = certify_witness(g, d, p.k, kind, oracle)?
                        .expect("verified witness certifies");
                    let choice = BranchChoice { b: b.clone(), tuple: tuple.clone(), q };
                    return Ok(Some((witness, choice)));
                }
            }
            Ok(None)
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Partitioned transversals such that, for every witness X, some entry
/// has its first part exactly on X's large component and the rest inside
/// X (guaranteed on unbreakable high-treewidth inputs). Canonical order,
/// deduplicated.
pub fn weakly_consistent_octs(
    g: &Graph,
    p: &SolverParams,
) -> Result<Vec<PartitionedOct>, SolveError> {
    validate_hypotheses(g, p);
    weakly_impl(g, p)
}

fn weakly_impl(g: &Graph, p: &SolverParams) -> Result<Vec<PartitionedOct>, SolveError> {
    let cap = p.s + p.k - 1;
    let Some(w) = min_oct(g, cap) else {
        return Ok(Vec::new());
    };
    let elems = w.to_vec();
    let full = g.vertex_set();
    let mut cands: BTreeMap<usize, Vec<VertexSet>> = BTreeMap::new();
    for &yv in &elems {
        let q = ConnectedSetQuery { anchor: yv, size_budget: p.s - 1, nbhd_budget: p.k };
        cands.insert(yv, enum_connected_sets(g, &q));
    }
    let mut out: BTreeSet<PartitionedOct> = BTreeSet::new();
    for idx in 0..3usize.pow(elems.len() as u32) {
        let mut parts = [VertexSet::new(), VertexSet::new(), VertexSet::new()];
        let mut digits = idx;
        for &v in &elems {
            parts[digits % 3].insert(v);
            digits /= 3;
        }
        let [w_l, w_i, w_r] = parts;
        let keys = w_r.to_vec();
        scan_tuples(&keys, &cands, |tuple| {
            let mut u = w_l.union(&w_i);
            for set in tuple.values() {
                u.union_with(&g.open_neighborhood(set));
            }
            if bipartite_within(g, &full.difference(&u)).is_some() {
                out.insert(PartitionedOct { w_l: w_l.clone(), w_i: u.difference(&w_l) });
            }
            Ok(None::<()>)
        })?;
    }
    Ok(out.into_iter().collect())
}

/// Transversals obtained from a weakly consistent partitioned OCT such
/// that, for every witness X the input is weakly consistent with, some
/// output is contained in X (guaranteed on unbreakable high-treewidth
/// inputs). Canonical order, deduplicated.
pub fn strongly_consistent_octs(
    g: &Graph,
    p: &SolverParams,
    poct: &PartitionedOct,
) -> Result<Vec<VertexSet>, SolveError> {
    let w = poct.oct();
    if w.len() > p.s + p.k - 1 {
        return Ok(Vec::new());
    }
    let full = g.vertex_set();
    let rest = full.difference(&w);
    let Some(cstar) = bipartite_within(g, &rest) else {
        return Err(OctError::NotAnOct.into());
    };
    let mut cands: BTreeMap<usize, Vec<VertexSet>> = BTreeMap::new();
    let mut out: BTreeSet<VertexSet> = BTreeSet::new();
    for w1 in subsets_up_to(&poct.w_l, poct.w_l.len()) {
        let w2 = poct.w_l.difference(&w1);
        // crossed neighborhoods: a vertex next to the part colored 2 is
        // expected in color 1, so disagreement with the reference
        // coloring goes to the must-flip side
        let b1 = g.open_neighborhood(&w2).difference(&w);
        let b2 = g.open_neighborhood(&w1).difference(&w);
        let a = b1.intersection(&cstar.color2).union(&b2.intersection(&cstar.color1));
        let r = b1.intersection(&cstar.color1).union(&b2.intersection(&cstar.color2));
        for q in [a, r] {
            if q.len() > p.s + p.k {
                continue;
            }
            for d in subsets_up_to(&q, p.k) {
                let keys: Vec<usize> = q.difference(&d).to_vec();
                for &key in &keys {
                    cands.entry(key).or_insert_with(|| {
                        let cq = ConnectedSetQuery {
                            anchor: key,
                            size_budget: p.s - 1,
                            nbhd_budget: 2 * p.k,
                        };
                        enum_connected_sets(g, &cq)
                    });
                }
                scan_tuples(&keys, &cands, |tuple| {
                    let mut u = w.union(&d);
                    for set in tuple.values() {
                        u.union_with(&g.open_neighborhood(set));
                    }
                    let u = u.difference(&poct.w_l);
                    if bipartite_within(g, &full.difference(&u)).is_some() {
                        out.insert(u);
                    }
                    Ok(None::<()>)
                })?;
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Decides whether a witness exists for the bipartite class, returning
/// it when found. Low treewidth falls back to the exhaustive search;
/// high treewidth runs the consistent-transversal pipeline.
pub fn solve_bip(g: &Graph, k: usize, s: usize, kind: Kind) -> Result<SolveResult, SolveError> {
    let p = SolverParams::for_bipartite(k, s)?;
    let oracle = ClassOracle::bipartite();
    if treewidth_atmost(g, (p.s + p.k) as i32)? {
        return solve_brute(g, &p, kind, &oracle);
    }
    let hypotheses_verified = unbreakability_logged(g, &p);
    let mut tried: BTreeSet<VertexSet> = BTreeSet::new();
    let mut witness = None;
    'outer: for poct in weakly_impl(g, &p)? {
        for u in strongly_consistent_octs(g, &p, &poct)? {
            if u.len() > p.s + p.k || !tried.insert(u.clone()) {
                continue;
            }
            if let Some((found, _)) = extract_impl(g, &u, &p, kind, &oracle)? {
                witness = Some(found);
                break 'outer;
            }
        }
    }
    Ok(SolveResult { witness, branch: SolveBranch::Structured, hypotheses_verified })
}

/// Decides whether a witness exists for a finite-obstruction class. Low
/// treewidth falls back to the exhaustive search; high treewidth seeds
/// the extraction with every minimal deletion set.
pub fn solve_finite_obstruction(
    g: &Graph,
    k: usize,
    s: usize,
    kind: Kind,
    oracle: &ClassOracle,
) -> Result<SolveResult, SolveError> {
    if !oracle.is_finite_class() {
        return Err(OracleError::NotFiniteClass(oracle.name().to_string()).into());
    }
    let p = SolverParams::for_finite(k, s)?;
    if treewidth_atmost(g, (p.s + p.k) as i32)? {
        return solve_brute(g, &p, kind, oracle);
    }
    let hypotheses_verified = unbreakability_logged(g, &p);
    let mut witness = None;
    for y in enum_minimal_deletion_sets(oracle, g, p.s + p.k - 1)? {
        if let Some((found, _)) = extract_impl(g, &y, &p, kind, oracle)? {
            witness = Some(found);
            break;
        }
    }
    Ok(SolveResult { witness, branch: SolveBranch::Structured, hypotheses_verified })
}

fn solve_brute(
    g: &Graph,
    p: &SolverParams,
    kind: Kind,
    oracle: &ClassOracle,
) -> Result<SolveResult, SolveError> {
    let witness = match brute_force_witness(g, oracle, kind, p.k)? {
        Some(x) => Some(
            certify_witness(g, x, p.k, kind, oracle)?.expect("brute-force result certifies"),
        ),
        None => None,
    };
    Ok(SolveResult { witness, branch: SolveBranch::BruteForce, hypotheses_verified: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, wheel};
    use crate::set::VertexSet;

    fn bip() -> ClassOracle {
        ClassOracle::bipartite()
    }

    #[test]
    fn verify_witness_known_cases() {
        let k4 = complete(4);
        assert!(verify_witness(&k4, &[0, 1].into(), 2, Kind::Tw, &bip()).unwrap());
        let c5 = cycle(5).unwrap();
        assert!(!verify_witness(&c5, &VertexSet::new(), 5, Kind::Ed, &bip()).unwrap());
        // deleting everything works once k reaches the treedepth
        assert!(verify_witness(&c5, &c5.vertex_set(), 4, Kind::Ed, &bip()).unwrap());
        assert!(!verify_witness(&c5, &c5.vertex_set(), 3, Kind::Ed, &bip()).unwrap());
    }

    #[test]
    fn brute_oracle_known_values() {
        let or = bip();
        assert_eq!(brute_force_hhdepth(&cycle(4).unwrap(), &or).unwrap(), 0);
        assert_eq!(brute_force_hhdepth(&cycle(5).unwrap(), &or).unwrap(), 1);
        assert_eq!(brute_force_hhdepth(&complete(4), &or).unwrap(), 2);
        assert_eq!(brute_force_hhdepth(&complete(5), &or).unwrap(), 3);
        assert_eq!(brute_force_torso_param(&cycle(5).unwrap(), &or, Kind::Tw).unwrap(), 0);
        assert_eq!(brute_force_torso_param(&complete(4), &or, Kind::Tw).unwrap(), 1);
        assert_eq!(brute_force_torso_param(&cycle(4).unwrap(), &or, Kind::Tw).unwrap(), -1);
        assert_eq!(brute_force_torso_param(&complete(4), &or, Kind::Ed).unwrap(), 2);
        assert_eq!(
            brute_force_hhdepth(&path(15), &or),
            Err(SolveError::CapExceeded { n: 15, cap: 14 })
        );
    }

    #[test]
    fn extract_witness_known_cases() {
        let w8 = wheel(8).unwrap();
        let p = SolverParams::for_bipartite(1, 8).unwrap();
        let found = extract_witness(&w8, &[0].into(), &p, Kind::Ed, &bip())
            .unwrap()
            .unwrap();
        assert_eq!(found.x.to_vec(), vec![0]);
        assert_eq!(found.value, 1);
        assert!(found.note1);

        let k5 = complete(5);
        let y = min_oct(&k5, 5).unwrap();
        assert_eq!(y.len(), 3);
        let p = SolverParams::for_bipartite(1, 2).unwrap();
        assert!(extract_witness(&k5, &y, &p, Kind::Ed, &bip()).unwrap().is_none());

        let c5 = cycle(5).unwrap();
        let p = SolverParams::for_bipartite(1, 4).unwrap();
        let found = extract_witness(&c5, &[0].into(), &p, Kind::Ed, &bip())
            .unwrap()
            .unwrap();
        assert_eq!(found.x.to_vec(), vec![0]);

        // precondition failures are reported distinctly
        assert_eq!(
            extract_witness(&c5, &VertexSet::new(), &p, Kind::Ed, &bip()).unwrap_err(),
            SolveError::NotADeletionSet
        );
        let tight = SolverParams::for_bipartite(1, 1).unwrap();
        assert_eq!(
            extract_witness(&k5, &y, &tight, Kind::Ed, &bip()).unwrap_err(),
            SolveError::DeletionSetTooLarge { got: 3, max: 2 }
        );
    }

    #[test]
    fn branch_choice_reconstructs_deletion_set() {
        let w8 = wheel(8).unwrap();
        let p = SolverParams::for_bipartite(1, 8).unwrap();
        let (witness, choice) =
            extract_witness_with_choice(&w8, &[0].into(), &p, Kind::Ed, &bip())
                .unwrap()
                .unwrap();
        assert_eq!(choice.deletion_set(&w8, &[0].into()), witness.x);
    }

    #[test]
    fn weakly_consistent_examples() {
        let p = SolverParams::for_bipartite(1, 2).unwrap();
        let list = weakly_consistent_octs(&cycle(4).unwrap(), &p).unwrap();
        assert_eq!(list, vec![PartitionedOct { w_l: VertexSet::new(), w_i: VertexSet::new() }]);

        let p = SolverParams::for_bipartite(1, 1).unwrap();
        let list = weakly_consistent_octs(&wheel(8).unwrap(), &p).unwrap();
        assert!(list.contains(&PartitionedOct { w_l: VertexSet::new(), w_i: [0].into() }));

        let c5 = cycle(5).unwrap();
        let p = SolverParams::for_bipartite(1, 8).unwrap();
        let w = min_oct(&c5, 8).unwrap();
        let list = weakly_consistent_octs(&c5, &p).unwrap();
        assert!(list.contains(&PartitionedOct { w_l: w, w_i: VertexSet::new() }));
        // every emitted pair is a partitioned transversal
        for poct in &list {
            assert!(poct.w_l.is_disjoint(&poct.w_i));
            assert!(bipartite_within(&c5, &c5.vertex_set().difference(&poct.oct())).is_some());
        }
    }

    #[test]
    fn strongly_consistent_examples() {
        let c4 = cycle(4).unwrap();
        let p = SolverParams::for_bipartite(1, 2).unwrap();
        let empty = PartitionedOct { w_l: VertexSet::new(), w_i: VertexSet::new() };
        assert!(strongly_consistent_octs(&c4, &p, &empty)
            .unwrap()
            .contains(&VertexSet::new()));

        let w8 = wheel(8).unwrap();
        let p = SolverParams::for_bipartite(1, 1).unwrap();
        let poct = PartitionedOct { w_l: VertexSet::new(), w_i: [0].into() };
        assert!(strongly_consistent_octs(&w8, &p, &poct).unwrap().contains(&[0].into()));

        let c5 = cycle(5).unwrap();
        let p = SolverParams::for_bipartite(1, 5).unwrap();
        let poct = PartitionedOct { w_l: [0].into(), w_i: VertexSet::new() };
        let list = strongly_consistent_octs(&c5, &p, &poct).unwrap();
        assert!(list.contains(&[2].into()));
        // an emitted transversal is contained in some depth-1 witness
        assert!(list.iter().any(|u| {
            u.len() == 1 && verify_witness(&c5, u, 1, Kind::Ed, &bip()).unwrap()
        }));

        // oversized input transversal yields nothing
        let p = SolverParams::for_bipartite(0, 1).unwrap();
        let big = PartitionedOct { w_l: VertexSet::new(), w_i: [0, 1, 2].into() };
        assert!(strongly_consistent_octs(&c5, &p, &big).unwrap().is_empty());
    }

    #[test]
    fn solve_bip_known_cases() {
        let c5 = cycle(5).unwrap();
        let res = solve_bip(&c5, 1, 8, Kind::Ed).unwrap();
        assert_eq!(res.branch, SolveBranch::BruteForce);
        let w = res.witness.unwrap();
        assert_eq!((w.value, w.x.to_vec()), (1, vec![0]));

        assert!(solve_bip(&complete(5), 2, 8, Kind::Ed).unwrap().witness.is_none());

        let c4 = cycle(4).unwrap();
        let res = solve_bip(&c4, 0, 8, Kind::Ed).unwrap();
        assert!(res.witness.unwrap().x.is_empty());
    }

    #[test]
    fn solve_bip_structured_branch() {
        let w8 = wheel(8).unwrap();
        let res = solve_bip(&w8, 1, 1, Kind::Ed).unwrap();
        assert_eq!(res.branch, SolveBranch::Structured);
        assert_eq!(res.hypotheses_verified, Some(true));
        assert_eq!(res.witness.unwrap().x.to_vec(), vec![0]);

        let res = solve_bip(&w8, 1, 1, Kind::Tw).unwrap();
        assert_eq!(res.branch, SolveBranch::Structured);
        let w = res.witness.unwrap();
        assert_eq!((w.value, w.x.to_vec()), (0, vec![0]));

        let res = solve_bip(&complete(5), 1, 1, Kind::Ed).unwrap();
        assert_eq!(res.branch, SolveBranch::Structured);
        assert!(res.witness.is_none());
        assert_eq!(res.hypotheses_verified, Some(true));
    }

    #[test]
    fn solve_finite_obstruction_cases() {
        let tf = ClassOracle::triangle_free();
        let k4 = complete(4);
        let res = solve_finite_obstruction(&k4, 2, 2, Kind::Ed, &tf).unwrap();
        assert_eq!(res.branch, SolveBranch::BruteForce);
        assert!(res.witness.is_some());
        assert!(solve_finite_obstruction(&k4, 1, 2, Kind::Ed, &tf)
            .unwrap()
            .witness
            .is_none());
        let res = solve_finite_obstruction(&cycle(5).unwrap(), 0, 2, Kind::Ed, &tf).unwrap();
        assert!(res.witness.unwrap().x.is_empty());

        // structured branch: the hub is the only small deletion set
        let w8 = wheel(8).unwrap();
        let res = solve_finite_obstruction(&w8, 1, 1, Kind::Ed, &tf).unwrap();
        assert_eq!(res.branch, SolveBranch::Structured);
        assert_eq!(res.witness.unwrap().x.to_vec(), vec![0]);

        let res = solve_finite_obstruction(&complete(6), 1, 1, Kind::Ed, &tf).unwrap();
        assert_eq!(res.branch, SolveBranch::Structured);
        assert!(res.witness.is_none());

        assert!(matches!(
            solve_finite_obstruction(&k4, 1, 2, Kind::Ed, &bip()),
            Err(SolveError::Oracle(OracleError::NotFiniteClass(_)))
        ));
    }

    #[test]
    fn params_validation() {
        assert!(SolverParams::for_bipartite(1, 0).is_err());
        assert!(SolverParams::new(2, 1, 1).is_err());
        assert_eq!(SolverParams::for_bipartite(2, 3).unwrap().c, 4);
        assert_eq!(SolverParams::for_finite(2, 3).unwrap().c, 2);
    }

    #[test]
    fn witness_json_shape() {
        let res = solve_bip(&cycle(5).unwrap(), 1, 8, Kind::Ed).unwrap();
        let j = res.witness.unwrap().to_json();
        assert_eq!(j["kind"], "ed");
        assert_eq!(j["k"], 1);
        assert_eq!(j["value"], 1);
        assert_eq!(j["x"][0], 0);
        assert_eq!(j["torso"]["graph6"], "@");
        assert_eq!(j["components"][0]["in_class"], true);
        assert_eq!(j["checks"]["note1"], true);
        assert_eq!(j["checks"]["torso_param"], 1);
    }

    #[test]
    fn kind_round_trip() {
        assert_eq!("ed".parse::<Kind>().unwrap(), Kind::Ed);
        assert_eq!("tw".parse::<Kind>().unwrap(), Kind::Tw);
        assert!("td".parse::<Kind>().is_err());
        assert_eq!(Kind::Tw.to_string(), "tw");
    }
}
