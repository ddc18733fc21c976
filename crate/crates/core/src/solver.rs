//! Exact minimum resolving, doubly resolving and doubly distance resolving
//! sets.
//!
//! Each problem is the 0-1 program "pick the fewest vertices `t` so that
//! every constraint pair `(u, v)` has some chosen `t` with `A[(u,v), t] = 1`",
//! i.e. a minimum set cover whose rows are vertex pairs and whose columns are
//! candidate vertices:
//!
//! | objective        | rows                                  | `t` covers `{u, v}` iff                     |
//! |------------------|---------------------------------------|---------------------------------------------|
//! | `β`              | all pairs                             | `d(u,t) != d(v,t)`                          |
//! | `φ(G, s)`        | pairs with `d(u,s) != d(v,s)`         | `d(u,s) - d(u,t) != d(v,s) - d(v,t)`        |
//! | `Ψ` anchored at s| all pairs                             | same as `φ`; the anchor itself is added     |
//!
//! Any doubly resolving set is doubly resolving relative to its first element,
//! so the unrestricted `Ψ` is the best anchored value over all anchors.
//!
//! The cover is solved by depth-first branch and bound: branch on the
//! uncovered row with the fewest candidate columns, prune with a greedy
//! packing of column-disjoint rows. Among optimal covers the one with the
//! lexicographically smallest sorted column sequence is returned.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Metric, VertexId};
use crate::resolving::{is_ddrs, is_doubly_resolving, is_resolving, LandmarkSet};

/// Largest graph accepted by [`brute_force_min`].
pub const BRUTE_FORCE_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Beta,
    Psi,
    Phi,
    /// A raw cover instance not derived from a graph.
    Cover,
}

impl std::str::FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "beta" => Ok(Objective::Beta),
            "psi" => Ok(Objective::Psi),
            "phi" => Ok(Objective::Phi),
            _ => Err(Error::InvalidParameter(format!(
                "unknown objective {s:?} (expected beta, psi or phi)"
            ))),
        }
    }
}

/// What a cover instance encodes, and so how a cover maps back to a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverKind {
    Generic,
    Beta,
    Phi { anchor: VertexId },
    PsiAnchored { anchor: VertexId },
}

/// Fixed-width bitset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    wi * 64 + b
                })
            })
        })
    }

    #[inline]
    fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    #[inline]
    fn is_subset_of(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

/// Rows are constraints (vertex pairs), columns are candidate vertices and
/// `covers[c]` is the set of rows column `c` satisfies.
#[derive(Debug, Clone)]
pub struct CoverInstance {
    pub kind: CoverKind,
    pub rows: Vec<(VertexId, VertexId)>,
    pub columns: Vec<VertexId>,
    pub covers: Vec<BitSet>,
}

impl CoverInstance {
    /// A cover instance from explicit column sets over `n_rows` rows.
    pub fn generic(n_rows: usize, column_rows: &[Vec<usize>]) -> Result<Self> {
        let mut covers = Vec::with_capacity(column_rows.len());
        for rows in column_rows {
            let mut b = BitSet::new(n_rows);
            for &r in rows {
                if r >= n_rows {
                    return Err(Error::InvalidParameter(format!(
                        "row {r} out of range for {n_rows} rows"
                    )));
                }
                b.insert(r);
            }
            covers.push(b);
        }
        Ok(Self {
            kind: CoverKind::Generic,
            rows: (0..n_rows).map(|r| (r, r)).collect(),
            columns: (0..column_rows.len()).collect(),
            covers,
        })
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn objective(&self) -> Objective {
        match self.kind {
            CoverKind::Generic => Objective::Cover,
            CoverKind::Beta => Objective::Beta,
            CoverKind::Phi { .. } => Objective::Phi,
            CoverKind::PsiAnchored { .. } => Objective::Psi,
        }
    }

    fn from_predicate<M: Metric>(
        g: &M,
        kind: CoverKind,
        keep_row: impl Fn(VertexId, VertexId) -> bool,
        covers_row: impl Fn(VertexId, VertexId, VertexId) -> bool,
    ) -> Self {
        let n = g.order();
        let rows: Vec<(VertexId, VertexId)> = (0..n)
            .tuple_combinations()
            .filter(|&(u, v)| keep_row(u, v))
            .collect();
        let covers = (0..n)
            .map(|t| {
                let mut b = BitSet::new(rows.len());
                for (r, &(u, v)) in rows.iter().enumerate() {
                    if covers_row(u, v, t) {
                        b.insert(r);
                    }
                }
                b
            })
            .collect();
        Self {
            kind,
            rows,
            columns: (0..n).collect(),
            covers,
        }
    }
}

fn require_graph<M: Metric>(g: &M) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::TooFewVertices(g.order()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn require_vertex<M: Metric>(g: &M, v: VertexId) -> Result<()> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(())
}

/// Rows: all pairs; `t` covers `{u, v}` iff `d(u,t) != d(v,t)`.
pub fn build_beta_cover<M: Metric>(g: &M) -> Result<CoverInstance> {
    require_graph(g)?;
    Ok(CoverInstance::from_predicate(
        g,
        CoverKind::Beta,
        |_, _| true,
        |u, v, t| g.dist(u, t) != g.dist(v, t),
    ))
}

#[inline]
fn relative<M: Metric>(g: &M, u: VertexId, anchor: VertexId, t: VertexId) -> i64 {
    g.dist(u, anchor) as i64 - g.dist(u, t) as i64
}

/// Rows: pairs at different distances from `anchor`; `t` covers `{u, v}` iff
/// it separates their distance differences relative to `anchor`.
pub fn build_phi_cover<M: Metric>(g: &M, anchor: VertexId) -> Result<CoverInstance> {
    require_graph(g)?;
    require_vertex(g, anchor)?;
    Ok(CoverInstance::from_predicate(
        g,
        CoverKind::Phi { anchor },
        |u, v| g.dist(u, anchor) != g.dist(v, anchor),
        |u, v, t| relative(g, u, anchor, t) != relative(g, v, anchor, t),
    ))
}

/// Rows: all pairs; columns as for `φ`. A cover plus `anchor` is a doubly
/// resolving set containing `anchor`.
pub fn build_psi_cover_anchored<M: Metric>(g: &M, anchor: VertexId) -> Result<CoverInstance> {
    require_graph(g)?;
    require_vertex(g, anchor)?;
    Ok(CoverInstance::from_predicate(
        g,
        CoverKind::PsiAnchored { anchor },
        |_, _| true,
        |u, v, t| relative(g, u, anchor, t) != relative(g, v, anchor, t),
    ))
}

/// Result of an exact (or budget-limited) minimisation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub objective: Objective,
    pub value: usize,
    /// Sorted vertex ids.
    pub witness: LandmarkSet,
    /// False when the node budget ran out before optimality was proven.
    pub optimal: bool,
}

/// Search limits for the branch and bound.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Maximum number of search nodes; `None` for unlimited.
    pub budget: Option<u64>,
}

impl SolveOptions {
    pub fn with_budget(budget: Option<u64>) -> Self {
        Self { budget }
    }
}

/// The reduced problem the search runs on: each row is the set of columns
/// covering it, dominated rows removed.
struct Reduced {
    row_cols: Vec<BitSet>,
    col_rows: Vec<BitSet>,
    n_cols: usize,
}

impl Reduced {
    fn new(inst: &CoverInstance) -> Result<Self> {
        let n_cols = inst.columns.len();
        let n_rows = inst.rows.len();
        let mut row_cols: Vec<BitSet> = (0..n_rows).map(|_| BitSet::new(n_cols)).collect();
        for (c, cov) in inst.covers.iter().enumerate() {
            for r in cov.iter() {
                row_cols[r].insert(c);
            }
        }
        if let Some(r) = row_cols.iter().position(BitSet::is_empty) {
            return Err(Error::Infeasible(r));
        }
        row_cols.sort_by_key(|b| (b.count(), b.clone()));
        row_cols.dedup();
        // A row whose column set contains another row's is implied by it.
        let mut kept: Vec<BitSet> = Vec::new();
        for row in row_cols {
            if !kept.iter().any(|k| k.is_subset_of(&row)) {
                kept.push(row);
            }
        }
        let mut col_rows: Vec<BitSet> = (0..n_cols).map(|_| BitSet::new(kept.len())).collect();
        for (r, cols) in kept.iter().enumerate() {
            for c in cols.iter() {
                col_rows[c].insert(r);
            }
        }
        Ok(Self {
            row_cols: kept,
            col_rows,
            n_cols,
        })
    }
}

struct Search<'a> {
    red: &'a Reduced,
    nodes: u64,
    budget: Option<u64>,
    aborted: bool,
    /// Covers of size `>= limit` are not interesting.
    limit: usize,
    best: Option<Vec<usize>>,
    /// Stop at the first cover found below `limit`.
    first_only: bool,
}

impl<'a> Search<'a> {
    fn new(red: &'a Reduced, budget: Option<u64>) -> Self {
        Self {
            red,
            nodes: 0,
            budget,
            aborted: false,
            limit: usize::MAX,
            best: None,
            first_only: false,
        }
    }

    fn packing_bound(&self, uncovered: &[u32], allowed: &BitSet) -> usize {
        let mut used = BitSet::new(self.red.n_cols);
        let mut count = 0;
        for &r in uncovered {
            let cols = &self.red.row_cols[r as usize];
            let disjoint = cols
                .words
                .iter()
                .zip(&allowed.words)
                .zip(&used.words)
                .all(|((c, a), u)| c & a & u == 0);
            if disjoint {
                count += 1;
                for ((u, c), a) in used.words.iter_mut().zip(&cols.words).zip(&allowed.words) {
                    *u |= c & a;
                }
            }
        }
        count
    }

    fn dfs(&mut self, uncovered: &[u32], allowed: &mut BitSet, chosen: &mut Vec<usize>) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.aborted = true;
            return;
        }
        if uncovered.is_empty() {
            if chosen.len() < self.limit {
                let mut sol = chosen.clone();
                sol.sort_unstable();
                self.limit = sol.len();
                self.best = Some(sol);
                if self.first_only {
                    self.aborted = true;
                }
            }
            return;
        }
        if chosen.len() + 1 >= self.limit {
            return;
        }
        if chosen.len() + self.packing_bound(uncovered, allowed) >= self.limit {
            return;
        }
        let mut pick = None;
        let mut fewest = usize::MAX;
        for &r in uncovered {
            let k = self.red.row_cols[r as usize].intersection_count(allowed);
            if k < fewest {
                fewest = k;
                pick = Some(r);
                if k <= 1 {
                    break;
                }
            }
        }
        if fewest == 0 {
            return;
        }
        let row = &self.red.row_cols[pick.expect("uncovered is nonempty") as usize];
        let branch: Vec<usize> = row.iter().filter(|&c| allowed.contains(c)).collect();
        let mut excluded = Vec::with_capacity(branch.len());
        for c in branch {
            let covered = &self.red.col_rows[c];
            let rest: Vec<u32> = uncovered
                .iter()
                .copied()
                .filter(|&r| !covered.contains(r as usize))
                .collect();
            allowed.remove(c);
            chosen.push(c);
            self.dfs(&rest, allowed, chosen);
            chosen.pop();
            // Later branches exclude `c`: covers using it were just explored.
            excluded.push(c);
            if self.aborted {
                break;
            }
        }
        for c in excluded {
            allowed.insert(c);
        }
    }
}

fn greedy_cover(red: &Reduced) -> Vec<usize> {
    let mut uncovered = BitSet::full(red.row_cols.len());
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let c = (0..red.n_cols)
            .max_by_key(|&c| {
                (
                    red.col_rows[c].intersection_count(&uncovered),
                    std::cmp::Reverse(c),
                )
            })
            .expect("feasible instance has columns");
        for r in red.col_rows[c].iter() {
            uncovered.remove(r);
        }
        chosen.push(c);
    }
    chosen.sort_unstable();
    chosen
}

/// Outcome of [`solve_cover`] in column indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    pub columns: Vec<usize>,
    pub optimal: bool,
    pub nodes: u64,
}

/// Minimum cover, lexicographically smallest among minima when the budget
/// allows the search to finish.
pub fn solve_cover(inst: &CoverInstance, opts: SolveOptions) -> Result<CoverSolution> {
    let red = Reduced::new(inst)?;
    let all_rows: Vec<u32> = (0..red.row_cols.len() as u32).collect();
    if all_rows.is_empty() {
        return Ok(CoverSolution {
            columns: Vec::new(),
            optimal: true,
            nodes: 0,
        });
    }

    let incumbent = greedy_cover(&red);
    let mut search = Search::new(&red, opts.budget);
    search.limit = incumbent.len();
    search.best = Some(incumbent);
    let mut allowed = BitSet::full(red.n_cols);
    search.dfs(&all_rows, &mut allowed, &mut Vec::new());
    let best = search.best.take().expect("incumbent present");
    let mut nodes = search.nodes;
    if search.aborted {
        return Ok(CoverSolution {
            columns: best,
            optimal: false,
            nodes,
        });
    }

    // Fix columns one position at a time, smallest feasible first.
    let k = best.len();
    let mut prefix: Vec<usize> = Vec::with_capacity(k);
    let mut uncovered = all_rows;
    for pos in 0..k {
        let start = prefix.last().map_or(0, |&c| c + 1);
        let mut placed = false;
        for c in start..red.n_cols {
            // A column adding nothing cannot sit in a minimum cover.
            if !uncovered
                .iter()
                .any(|&r| red.col_rows[c].contains(r as usize))
            {
                continue;
            }
            let rest: Vec<u32> = uncovered
                .iter()
                .copied()
                .filter(|&r| !red.col_rows[c].contains(r as usize))
                .collect();
            let remaining = k - pos - 1;
            let feasible = if rest.is_empty() {
                true
            } else if remaining == 0 {
                false
            } else {
                let mut allowed = BitSet::new(red.n_cols);
                for a in c + 1..red.n_cols {
                    allowed.insert(a);
                }
                let left = opts.budget.map(|b| b.saturating_sub(nodes));
                let mut probe = Search::new(&red, left);
                probe.limit = remaining + 1;
                probe.first_only = true;
                probe.dfs(&rest, &mut allowed, &mut Vec::new());
                nodes += probe.nodes;
                if probe.best.is_none() && probe.aborted {
                    // Budget ran out mid-extraction; the value is still optimal.
                    return Ok(CoverSolution {
                        columns: best,
                        optimal: true,
                        nodes,
                    });
                }
                probe.best.is_some()
            };
            if feasible {
                prefix.push(c);
                uncovered = rest;
                placed = true;
                break;
            }
        }
        assert!(placed, "an optimal cover of size {k} exists");
        if uncovered.is_empty() {
            break;
        }
    }
    debug_assert_eq!(prefix.len(), k);
    Ok(CoverSolution {
        columns: prefix,
        optimal: true,
        nodes,
    })
}

/// Solves a cover instance and maps the cover back to a vertex set.
pub fn solve_cover_exact(inst: &CoverInstance, opts: SolveOptions) -> Result<SolveResult> {
    let sol = solve_cover(inst, opts)?;
    let mut witness: Vec<VertexId> = sol.columns.iter().map(|&c| inst.columns[c]).collect();
    if let CoverKind::PsiAnchored { anchor } = inst.kind {
        if !witness.contains(&anchor) {
            witness.push(anchor);
        }
    }
    witness.sort_unstable();
    Ok(SolveResult {
        objective: inst.objective(),
        value: witness.len(),
        witness: LandmarkSet::new(witness)?,
        optimal: sol.optimal,
    })
}

/// `β(G)`.
pub fn solve_beta<M: Metric>(g: &M, opts: SolveOptions) -> Result<SolveResult> {
    solve_cover_exact(&build_beta_cover(g)?, opts)
}

/// `φ(G, anchor)`.
pub fn solve_phi<M: Metric>(g: &M, anchor: VertexId, opts: SolveOptions) -> Result<SolveResult> {
    solve_cover_exact(&build_phi_cover(g, anchor)?, opts)
}

/// Smallest doubly resolving set that contains `anchor`.
pub fn solve_psi_anchored<M: Metric>(
    g: &M,
    anchor: VertexId,
    opts: SolveOptions,
) -> Result<SolveResult> {
    solve_cover_exact(&build_psi_cover_anchored(g, anchor)?, opts)
}

/// Whether the caller vouches that the graph is vertex-transitive.
///
/// Only then may `Ψ` and `φ` be computed from the single anchor 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    General,
    VertexTransitive,
}

fn pick_best(results: Vec<SolveResult>) -> SolveResult {
    results
        .into_iter()
        .min_by(|a, b| {
            a.value
                .cmp(&b.value)
                .then_with(|| a.witness.as_slice().cmp(b.witness.as_slice()))
        })
        .expect("at least two anchors")
}

/// `Ψ(G)`: the best anchored optimum over every anchor (or anchor 0 alone
/// for vertex-transitive graphs).
pub fn solve_psi<M: Metric>(g: &M, symmetry: Symmetry, opts: SolveOptions) -> Result<SolveResult> {
    require_graph(g)?;
    if symmetry == Symmetry::VertexTransitive {
        return solve_psi_anchored(g, 0, opts);
    }
    let results = (0..g.order())
        .into_par_iter()
        .map(|x| solve_psi_anchored(g, x, opts))
        .collect::<Result<Vec<_>>>()?;
    let optimal = results.iter().all(|r| r.optimal);
    let mut best = pick_best(results);
    best.optimal = optimal;
    Ok(best)
}

/// `Ψ(G)` over all anchors.
pub fn solve_psi_general<M: Metric>(g: &M, opts: SolveOptions) -> Result<SolveResult> {
    solve_psi(g, Symmetry::General, opts)
}

/// `φ(G) = max_x φ(G, x)`, reported with the witness of the first anchor
/// attaining the maximum.
pub fn solve_phi_max<M: Metric>(
    g: &M,
    symmetry: Symmetry,
    opts: SolveOptions,
) -> Result<(VertexId, SolveResult)> {
    require_graph(g)?;
    if symmetry == Symmetry::VertexTransitive {
        return Ok((0, solve_phi(g, 0, opts)?));
    }
    let results = (0..g.order())
        .into_par_iter()
        .map(|x| solve_phi(g, x, opts))
        .collect::<Result<Vec<_>>>()?;
    let optimal = results.iter().all(|r| r.optimal);
    let (anchor, best) = results
        .into_iter()
        .enumerate()
        .rev()
        .max_by_key(|(_, r)| r.value)
        .expect("at least two anchors");
    Ok((anchor, SolveResult { optimal, ..best }))
}

/// Checks `s` against the predicate matching `objective`.
pub fn verify_witness<M: Metric>(
    g: &M,
    objective: Objective,
    anchor: Option<VertexId>,
    s: &LandmarkSet,
) -> Result<bool> {
    match objective {
        Objective::Beta => is_resolving(g, s),
        Objective::Psi => is_doubly_resolving(g, s),
        Objective::Phi => {
            let anchor = anchor
                .ok_or_else(|| Error::InvalidParameter("phi needs an anchor vertex".into()))?;
            is_ddrs(g, anchor, s)
        }
        Objective::Cover => Err(Error::InvalidParameter(
            "raw cover results have no graph predicate".into(),
        )),
    }
}

/// Enumerates `k`-subsets in lexicographic order for increasing `k` and
/// returns the first one passing the predicate. With `anchor`, `Beta` and
/// `Psi` only consider sets containing it; `Phi` requires it.
pub fn brute_force_min<M: Metric>(
    g: &M,
    objective: Objective,
    anchor: Option<VertexId>,
) -> Result<SolveResult> {
    require_graph(g)?;
    let n = g.order();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::CapExceeded {
            what: "vertex count for brute force",
            value: n as u128,
            cap: BRUTE_FORCE_MAX_VERTICES as u128,
        });
    }
    if let Some(a) = anchor {
        require_vertex(g, a)?;
    }
    let (start, must_contain) = match objective {
        Objective::Beta => (1, anchor),
        Objective::Psi => (2, anchor),
        Objective::Phi => {
            if anchor.is_none() {
                return Err(Error::InvalidParameter("phi needs an anchor vertex".into()));
            }
            (1, None)
        }
        Objective::Cover => {
            return Err(Error::InvalidParameter(
                "brute force works on graph objectives only".into(),
            ))
        }
    };
    for k in start..=n {
        for combo in (0..n).combinations(k) {
            if must_contain.is_some_and(|a| !combo.contains(&a)) {
                continue;
            }
            let s = LandmarkSet::new(combo)?;
            if verify_witness(g, objective, anchor, &s)? {
                return Ok(SolveResult {
                    objective,
                    value: k,
                    witness: s,
                    optimal: true,
                });
            }
        }
    }
    unreachable!("the full vertex set satisfies every objective")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;
    use crate::graph::Graph;

    const EXACT: SolveOptions = SolveOptions { budget: None };

    #[test]
    fn trivial_instance() {
        let inst = CoverInstance::generic(1, &[vec![0]]).unwrap();
        let r = solve_cover_exact(&inst, EXACT).unwrap();
        assert_eq!((r.value, r.optimal), (1, true));
        assert_eq!(r.objective, Objective::Cover);
    }

    #[test]
    fn infeasible_instance() {
        let inst = CoverInstance::generic(2, &[vec![0]]).unwrap();
        assert_eq!(solve_cover(&inst, EXACT).unwrap_err(), Error::Infeasible(1));
    }

    #[test]
    fn lexicographic_tie_break() {
        // Rows 0,1; columns 0:{0}, 1:{1}, 2:{0,1}, 3:{0,1}.
        let inst = CoverInstance::generic(2, &[vec![0], vec![1], vec![0, 1], vec![0, 1]]).unwrap();
        let s = solve_cover(&inst, EXACT).unwrap();
        assert_eq!(s.columns, vec![2]);
        let inst =
            CoverInstance::generic(3, &[vec![0], vec![1, 2], vec![1, 2], vec![0, 1, 2]]).unwrap();
        assert_eq!(solve_cover(&inst, EXACT).unwrap().columns, vec![3]);
        let inst = CoverInstance::generic(3, &[vec![2], vec![0, 1], vec![0], vec![1, 2]]).unwrap();
        assert_eq!(solve_cover(&inst, EXACT).unwrap().columns, vec![0, 1]);
    }

    #[test]
    fn small_graph_values() {
        assert_eq!(solve_beta(&Graph::cycle(4), EXACT).unwrap().value, 2);
        assert_eq!(solve_beta(&Graph::complete(2), EXACT).unwrap().value, 1);
        let k2 = Graph::complete(2);
        let phi = solve_phi(&k2, 0, EXACT).unwrap();
        assert_eq!(phi.value, 1);
        assert_eq!(phi.witness.as_slice(), &[1]);
        let psi = solve_psi_general(&k2, EXACT).unwrap();
        assert_eq!((psi.value, psi.witness.as_slice()), (2, &[0, 1][..]));
        assert_eq!(solve_psi_general(&Graph::cycle(4), EXACT).unwrap().value, 3);
    }

    #[test]
    fn hypercube_anchored_psi() {
        let q2 = Family::cube(2).unwrap();
        let inst = build_psi_cover_anchored(&q2, 0).unwrap();
        assert_eq!(solve_cover(&inst, EXACT).unwrap().columns.len(), 2);
        let r = solve_cover_exact(&inst, EXACT).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.witness.contains(0));
        let q3 = Family::cube(3).unwrap();
        assert_eq!(
            solve_psi(&q3, Symmetry::VertexTransitive, EXACT)
                .unwrap()
                .value,
            4
        );
        let f3 = Family::folded(3).unwrap();
        assert_eq!(
            solve_psi(&f3, Symmetry::VertexTransitive, EXACT)
                .unwrap()
                .value,
            3
        );
    }

    #[test]
    fn brute_force_agrees_on_small_cases() {
        let c4 = Graph::cycle(4);
        let b = brute_force_min(&c4, Objective::Beta, None).unwrap();
        assert_eq!((b.value, b.witness.as_slice()), (2, &[0, 1][..]));
        let q3 = Family::cube(3).unwrap();
        let bf = brute_force_min(&q3, Objective::Psi, None).unwrap();
        let ex = solve_psi(&q3, Symmetry::VertexTransitive, EXACT).unwrap();
        assert_eq!(bf, ex);
        let f4 = Family::folded(4).unwrap();
        assert_eq!(
            brute_force_min(&f4, Objective::Phi, Some(0)).unwrap().value,
            3
        );
        assert!(brute_force_min(&f4, Objective::Phi, None).is_err());
        assert!(brute_force_min(&Family::cube(5).unwrap(), Objective::Beta, None).is_err());
    }

    #[test]
    fn budget_reports_suboptimal() {
        let q5 = Family::cube(5).unwrap();
        let r = solve_beta(&q5, SolveOptions::with_budget(Some(1))).unwrap();
        assert!(!r.optimal);
        assert!(r.value >= 4);
        assert!(is_resolving(&q5, &r.witness).unwrap());
    }

    #[test]
    fn graph_preconditions() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(build_beta_cover(&g).unwrap_err(), Error::Disconnected);
        let k1 = Graph::complete(1);
        assert_eq!(build_beta_cover(&k1).unwrap_err(), Error::TooFewVertices(1));
        assert!(build_phi_cover(&Graph::complete(3), 3).is_err());
    }

    #[test]
    fn solve_result_json_shape() {
        let r = solve_beta(&Graph::cycle(4), EXACT).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"objective":"beta","value":2,"witness":[0,1],"optimal":true}"#
        );
    }
}
