//! Non-adaptive coin weighing and its correspondence with doubly resolving
//! sets of hypercubes.
//!
//! A distribution of defective coins is an `n`-bit word `u` (bit `j` set iff
//! coin `j + 1` is defective) and a weighing is an `n`-bit word `x`; the
//! scale reads `popcount(u & x)`. On `Q_n`,
//! `d(u, 0) - d(u, x) = 2 (u·x) - |x|`, so a set of weighings separates all
//! distributions exactly when it plus the origin doubly resolves `Q_n`.

use std::fmt::Write as _;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::VertexId;
use crate::resolving::{check_doubly_resolving, LandmarkSet, Verdict};

/// Largest coin count whose strategies are verified by full enumeration.
pub const VERIFY_CAP: u32 = 24;
/// Largest coin count accepted by [`brute_force_m`].
pub const BRUTE_FORCE_CAP: u32 = 5;

/// A set of predetermined weighings on `n` coins.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeighingStrategy {
    n: u32,
    rows: Vec<u64>,
}

impl WeighingStrategy {
    /// Rows are stored sorted and deduplicated.
    pub fn new(n: u32, rows: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n > 63 {
            return Err(Error::InvalidParameter(format!("{n} coins is too many")));
        }
        let mut rows: Vec<u64> = rows.into_iter().collect();
        if let Some(r) = rows.iter().find(|&&r| r >> n != 0) {
            return Err(Error::InvalidParameter(format!(
                "weighing {r:#b} uses a coin beyond {n}"
            )));
        }
        rows.sort_unstable();
        rows.dedup();
        Ok(Self { n, rows })
    }

    pub fn coins(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Returns two distributions with identical outcomes, or `None` if the
/// strategy separates every distribution.
pub fn find_confusion(s: &WeighingStrategy) -> Result<Option<(u64, u64)>> {
    let n = s.n;
    if n > VERIFY_CAP {
        return Err(Error::CapExceeded {
            what: "coin count for exact verification",
            value: n as u128,
            cap: VERIFY_CAP as u128,
        });
    }
    let radix = n as u128 + 1;
    let fits = (radix.ilog2() + 1) * s.rows.len() as u32 <= 127;
    let total = 1u64 << n;
    if fits {
        let mut keyed: Vec<(u128, u64)> = (0..total)
            .map(|u| {
                let key = s
                    .rows
                    .iter()
                    .fold(0u128, |acc, &x| acc * radix + (u & x).count_ones() as u128);
                (key, u)
            })
            .collect();
        keyed.sort_unstable();
        Ok(keyed
            .windows(2)
            .find(|w| w[0].0 == w[1].0)
            .map(|w| (w[0].1, w[1].1)))
    } else {
        let mut keyed: Vec<(Vec<u8>, u64)> = (0..total)
            .map(|u| {
                let key = s.rows.iter().map(|&x| (u & x).count_ones() as u8).collect();
                (key, u)
            })
            .collect();
        keyed.sort_unstable();
        Ok(keyed
            .windows(2)
            .find(|w| w[0].0 == w[1].0)
            .map(|w| (w[0].1, w[1].1)))
    }
}

pub fn is_weighing_strategy(s: &WeighingStrategy) -> Result<bool> {
    Ok(find_confusion(s)?.is_none())
}

fn separates_all(n: u32, rows: &[u64], seen: &mut Vec<u64>) -> bool {
    let radix = n as u64 + 1;
    seen.clear();
    seen.extend((0..1u64 << n).map(|u| {
        rows.iter()
            .fold(0u64, |acc, &x| acc * radix + (u & x).count_ones() as u64)
    }));
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// Exact `M(n)` by enumerating sets of nonzero weighings in increasing
/// size; the witness is the lexicographically smallest valid set of that
/// size.
pub fn brute_force_m(n: u32) -> Result<(usize, WeighingStrategy)> {
    if n > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            what: "coin count for brute-force M(n)",
            value: n as u128,
            cap: BRUTE_FORCE_CAP as u128,
        });
    }
    let mut seen = Vec::with_capacity(1 << n);
    for k in 0..=n as usize {
        for rows in (1..1u64 << n).combinations(k) {
            if separates_all(n, &rows, &mut seen) {
                return Ok((k, WeighingStrategy::new(n, rows)?));
            }
        }
    }
    unreachable!("the n unit weighings always separate")
}

/// `{0⃗} ∪ rows`, a doubly resolving set of `Q_n` with the origin first.
pub fn strategy_to_drs(s: &WeighingStrategy) -> Result<LandmarkSet> {
    if let Some((u, v)) = find_confusion(s)? {
        return Err(Error::Precondition(format!(
            "not a weighing strategy: distributions {u:#b} and {v:#b} weigh the same"
        )));
    }
    let mut out = vec![0usize];
    out.extend(s.rows.iter().filter(|&&x| x != 0).map(|&x| x as VertexId));
    LandmarkSet::new(out)
}

/// Moves `member` of a landmark set of `Q_n` to the origin by the
/// translation `u ↦ u ⊕ member`, an automorphism of `Q_n`.
pub fn translate_to_origin(s: &LandmarkSet, member: VertexId) -> Result<LandmarkSet> {
    if !s.contains(member) {
        return Err(Error::Precondition(format!(
            "vertex {member} is not in the set"
        )));
    }
    LandmarkSet::new(s.iter().map(|x| x ^ member).collect())
}

/// `S ∖ {0⃗}` for a doubly resolving set `S` of `Q_n` that contains the
/// origin. Use [`translate_to_origin`] first for other sets.
pub fn drs_to_strategy(n: u32, s: &LandmarkSet) -> Result<WeighingStrategy> {
    if !s.contains(0) {
        return Err(Error::Precondition(
            "the set must contain the origin; translate it first".into(),
        ));
    }
    let cube = Family::cube(n)?;
    if let Verdict::Fail { witness } = check_doubly_resolving(&cube, s)? {
        return Err(Error::Precondition(format!(
            "not doubly resolving on Q{n}: {witness:?}"
        )));
    }
    WeighingStrategy::new(n, s.iter().filter(|&x| x != 0).map(|x| x as u64))
}

/// Forgets the last coin: a strategy for `n + 1` coins becomes one for `n`.
/// Rows that only weighed the dropped coin vanish.
pub fn project_strategy(s: &WeighingStrategy) -> Result<WeighingStrategy> {
    if s.n == 0 {
        return Err(Error::InvalidParameter("cannot project 0 coins".into()));
    }
    let n = s.n - 1;
    let low = (1u64 << n) - 1;
    WeighingStrategy::new(n, s.rows.iter().map(|&x| x & low).filter(|&x| x != 0))
}

/// Adds a coin: keeps every row and weighs the new coin on its own.
pub fn extend_strategy(s: &WeighingStrategy) -> Result<WeighingStrategy> {
    let n = s.n;
    WeighingStrategy::new(n + 1, s.rows.iter().copied().chain([1u64 << n]))
}

/// A family of finite sets of nonnegative integers, each stored as a
/// bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    sets: Vec<u64>,
}

impl Complex {
    pub fn new(sets: impl IntoIterator<Item = u64>) -> Self {
        Self {
            sets: sets.into_iter().collect(),
        }
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    /// Each set as a sorted list of its elements.
    pub fn members(&self) -> Vec<Vec<u32>> {
        self.sets
            .iter()
            .map(|&s| (0..64).filter(|&i| s >> i & 1 == 1).collect())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `Σ |A|` over the members.
    pub fn total_size(&self) -> u64 {
        self.sets.iter().map(|s| s.count_ones() as u64).sum()
    }

    /// Closed under taking subsets.
    pub fn is_subset_closed(&self) -> bool {
        let present: std::collections::HashSet<u64> = self.sets.iter().copied().collect();
        self.sets.iter().all(|&a| {
            // Closure under removing one element implies closure under all subsets.
            (0..64)
                .filter(|&i| a >> i & 1 == 1)
                .all(|i| present.contains(&(a & !(1 << i))))
        })
    }
}

/// `{F_0, ..., F_{m-1}}` where `F_j` holds the exponents in the binary
/// expansion of `j`.
pub fn lindstrom_complex(m: u64) -> Complex {
    Complex::new(0..m)
}

/// Upper bounds `P(n)` on the doubly resolving number of `Q_n`, for
/// `n = 1..=len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsTable {
    values: Vec<u32>,
}

impl BoundsTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `P(n)`, 1-based.
    pub fn get(&self, n: usize) -> Option<u32> {
        n.checked_sub(1).and_then(|i| self.values.get(i)).copied()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn truncate(&mut self, n_max: usize) {
        self.values.truncate(n_max);
    }

    /// `P(n) <= P(n+1) <= P(n) + 1` throughout.
    pub fn is_unit_step_monotone(&self) -> bool {
        self.values
            .windows(2)
            .all(|w| w[0] <= w[1] && w[1] <= w[0] + 1)
    }

    /// `n,P` header then one row per `n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,P\n");
        for (i, p) in self.values.iter().enumerate() {
            writeln!(out, "{},{}", i + 1, p).unwrap();
        }
        out
    }
}

/// Runs the complex-based bound: the `i`-th member `F_i` of the complex
/// extends the coin range by `|F_i|` coins, each bounded by `i + 1`.
pub fn algorithm1_bounds(m: u64) -> Result<BoundsTable> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("need m >= 2, got {m}")));
    }
    let mut values = Vec::new();
    let mut covered = 0u64;
    for i in 1..m {
        let mut next = covered;
        let mut j = i;
        while j > 0 {
            if j % 2 == 1 {
                next += 1;
            }
            j /= 2;
        }
        for _ in covered + 1..=next {
            values.push((i + 1) as u32);
        }
        covered = next;
    }
    Ok(BoundsTable { values })
}

/// Bounds for `n = 1..=n_max`, using the smallest `m` whose complex is
/// large enough.
pub fn bounds_up_to(n_max: usize) -> Result<BoundsTable> {
    if n_max == 0 {
        return Err(Error::InvalidParameter("n_max must be positive".into()));
    }
    let mut m = 2u64;
    let mut total = 1usize;
    while total < n_max {
        total += m.count_ones() as usize;
        m += 1;
    }
    let mut table = algorithm1_bounds(m)?;
    table.truncate(n_max);
    Ok(table)
}
