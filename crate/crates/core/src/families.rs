//! Hamming graphs `H(n,q)`, hypercubes `Q_n` and folded hypercubes `F_n`.
//!
//! Vertex encodings:
//!
//! * `H(n,q)`: the word `(u_1, ..., u_n)` is the base-`q` integer whose digit
//!   `i - 1` (little-endian) is `u_i`.
//! * `Q_n`: the same with `q = 2`, so bit `i - 1` is `u_i`.
//! * `F_n`: the class `{u, ū}` is stored as the member whose top bit
//!   (`u_n`) is 0, giving ids `0 .. 2^(n-1)`.
//!
//! [`Family`] implements [`Metric`] with closed-form distances, so the set
//! predicates run on these graphs without materialising a distance matrix.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Metric, VertexId};
use crate::resolving::{check_resolving, LandmarkSet, Verdict};

/// Largest vertex count served by the closed-form oracles.
pub const DEFAULT_ORACLE_CAP: u64 = 1 << 20;
/// Largest vertex count materialised as an explicit [`Graph`].
pub const DEFAULT_GRAPH_CAP: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HammingCode {
    pub n: u32,
    pub q: u32,
    pub code: u64,
}

impl HammingCode {
    pub fn from_digits(q: u32, digits: &[u32]) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParameter(format!("alphabet size {q} < 2")));
        }
        let mut code = 0u64;
        for &d in digits.iter().rev() {
            if d >= q {
                return Err(Error::InvalidParameter(format!("digit {d} >= q = {q}")));
            }
            code = code * q as u64 + d as u64;
        }
        Ok(Self {
            n: digits.len() as u32,
            q,
            code,
        })
    }

    pub fn digits(&self) -> Vec<u32> {
        let mut c = self.code;
        (0..self.n)
            .map(|_| {
                let d = (c % self.q as u64) as u32;
                c /= self.q as u64;
                d
            })
            .collect()
    }

    /// Coordinate-wise difference modulo `q`.
    pub fn sub(&self, other: &HammingCode) -> Result<HammingCode> {
        same_shape(self, other)?;
        let digits: Vec<u32> = self
            .digits()
            .iter()
            .zip(other.digits())
            .map(|(&a, b)| (a + self.q - b) % self.q)
            .collect();
        HammingCode::from_digits(self.q, &digits)
    }
}

fn same_shape(u: &HammingCode, v: &HammingCode) -> Result<()> {
    if u.n != v.n || u.q != v.q {
        return Err(Error::InvalidParameter(format!(
            "dimension mismatch: H({},{}) vs H({},{})",
            u.n, u.q, v.n, v.q
        )));
    }
    Ok(())
}

fn digit_mismatches(n: u32, q: u64, mut a: u64, mut b: u64) -> u32 {
    let mut count = 0;
    for _ in 0..n {
        count += u32::from(a % q != b % q);
        a /= q;
        b /= q;
    }
    count
}

/// Number of coordinates in which `u` and `v` differ.
pub fn hamming_distance(u: &HammingCode, v: &HammingCode) -> Result<u32> {
    same_shape(u, v)?;
    Ok(digit_mismatches(u.n, u.q as u64, u.code, v.code))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubeCode {
    pub n: u32,
    pub bits: u64,
}

impl CubeCode {
    pub fn new(n: u32, bits: u64) -> Result<Self> {
        if n > 63 || bits >> n != 0 {
            return Err(Error::InvalidParameter(format!(
                "{bits:#b} is not an {n}-bit vertex"
            )));
        }
        Ok(Self { n, bits })
    }

    pub fn complement(&self) -> CubeCode {
        CubeCode {
            n: self.n,
            bits: !self.bits & mask(self.n),
        }
    }
}

pub fn cube_distance(u: &CubeCode, v: &CubeCode) -> Result<u32> {
    if u.n != v.n {
        return Err(Error::InvalidParameter(format!(
            "dimension mismatch: Q{} vs Q{}",
            u.n, v.n
        )));
    }
    Ok((u.bits ^ v.bits).count_ones())
}

/// A vertex `{u, ū}` of `F_n`, stored by its member with bit `n - 1` clear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FoldedCode {
    pub n: u32,
    pub rep: u64,
}

impl FoldedCode {
    /// The class of the hypercube vertex `bits`.
    pub fn of(n: u32, bits: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "folded hypercube needs n >= 2, got {n}"
            )));
        }
        let u = CubeCode::new(n, bits)?;
        Ok(Self {
            n,
            rep: canonical_fold(n, u.bits),
        })
    }
}

#[inline]
fn mask(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
fn canonical_fold(n: u32, bits: u64) -> u64 {
    if bits >> (n - 1) & 1 == 1 {
        !bits & mask(n)
    } else {
        bits
    }
}

pub fn folded_distance(a: &FoldedCode, b: &FoldedCode) -> Result<u32> {
    if a.n != b.n {
        return Err(Error::InvalidParameter(format!(
            "dimension mismatch: F{} vs F{}",
            a.n, b.n
        )));
    }
    let d = (a.rep ^ b.rep).count_ones();
    Ok(d.min(a.n - d))
}

/// One of the graph families, named by its CLI descriptor (`q5`, `f6`,
/// `h3,4`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hamming { n: u32, q: u32 },
    Cube { n: u32 },
    Folded { n: u32 },
}

impl Family {
    pub fn hamming(n: u32, q: u32) -> Result<Self> {
        Self::Hamming { n, q }.checked(DEFAULT_ORACLE_CAP)
    }

    pub fn cube(n: u32) -> Result<Self> {
        Self::Cube { n }.checked(DEFAULT_ORACLE_CAP)
    }

    pub fn folded(n: u32) -> Result<Self> {
        Self::Folded { n }.checked(DEFAULT_ORACLE_CAP)
    }

    /// Validates parameters and that the vertex count is at most `cap`.
    pub fn checked(self, cap: u64) -> Result<Self> {
        match self {
            Family::Hamming { n, q } if n == 0 || q < 2 => {
                return Err(Error::InvalidParameter(format!(
                    "H({n},{q}) needs n >= 1 and q >= 2"
                )))
            }
            Family::Cube { n: 0 } => {
                return Err(Error::InvalidParameter("Q_n needs n >= 1".into()))
            }
            Family::Folded { n } if n < 2 => {
                return Err(Error::InvalidParameter("F_n needs n >= 2".into()))
            }
            _ => {}
        }
        let order = self.order_u128();
        if order > cap as u128 {
            return Err(Error::CapExceeded {
                what: "family vertex count",
                value: order,
                cap: cap as u128,
            });
        }
        Ok(self)
    }

    fn order_u128(&self) -> u128 {
        match *self {
            Family::Hamming { n, q } => (q as u128).checked_pow(n).unwrap_or(u128::MAX),
            Family::Cube { n } => 1u128.checked_shl(n).unwrap_or(u128::MAX),
            Family::Folded { n } => 1u128.checked_shl(n - 1).unwrap_or(u128::MAX),
        }
    }

    pub fn dimension(&self) -> u32 {
        match *self {
            Family::Hamming { n, .. } | Family::Cube { n } | Family::Folded { n } => n,
        }
    }

    pub fn alphabet(&self) -> u32 {
        match *self {
            Family::Hamming { q, .. } => q,
            _ => 2,
        }
    }

    /// Every family here is vertex-transitive (translations are
    /// automorphisms), which licenses anchoring exact searches at vertex 0.
    pub fn is_vertex_transitive(&self) -> bool {
        true
    }

    /// Materialises the explicit graph (vertex id = encoding).
    pub fn build_graph(&self) -> Result<Graph> {
        self.build_graph_capped(DEFAULT_GRAPH_CAP)
    }

    pub fn build_graph_capped(&self, cap: u64) -> Result<Graph> {
        let fam = self.checked(cap)?;
        let order = fam.order();
        let mut edges = Vec::new();
        match fam {
            Family::Hamming { n, q } => {
                let q = q as u64;
                for u in 0..order as u64 {
                    let mut place = 1u64;
                    for _ in 0..n {
                        let digit = (u / place) % q;
                        for d in digit + 1..q {
                            edges.push((u as usize, (u + (d - digit) * place) as usize));
                        }
                        place *= q;
                    }
                }
            }
            Family::Cube { n } => {
                for u in 0..order {
                    for i in 0..n {
                        let v = u ^ (1 << i);
                        if u < v {
                            edges.push((u, v));
                        }
                    }
                }
            }
            Family::Folded { n } => {
                for u in 0..order {
                    for i in 0..n {
                        let v = canonical_fold(n, u as u64 ^ (1 << i)) as usize;
                        if u < v {
                            edges.push((u, v));
                        }
                    }
                }
            }
        }
        Graph::from_edge_list(order, &edges)
    }
}

impl Metric for Family {
    fn order(&self) -> usize {
        self.order_u128() as usize
    }

    fn dist(&self, u: VertexId, v: VertexId) -> u32 {
        match *self {
            Family::Hamming { n, q: 2 } | Family::Cube { n } => {
                let _ = n;
                (u ^ v).count_ones()
            }
            Family::Hamming { n, q } => digit_mismatches(n, q as u64, u as u64, v as u64),
            Family::Folded { n } => {
                let d = (u ^ v).count_ones();
                d.min(n - d)
            }
        }
    }

    fn is_connected(&self) -> bool {
        true
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Hamming { n, q } => write!(f, "h{n},{q}"),
            Family::Cube { n } => write!(f, "q{n}"),
            Family::Folded { n } => write!(f, "f{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad family descriptor {s:?}"));
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let s = s.trim();
        let (tag, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        match tag {
            "q" | "Q" => Family::cube(num(rest)?),
            "f" | "F" => Family::folded(num(rest)?),
            "h" | "H" => {
                let (n, q) = rest.split_once(',').ok_or_else(bad)?;
                Family::hamming(num(n)?, num(q)?)
            }
            _ => Err(bad()),
        }
    }
}

fn constant_word(n: u32, q: u32, c: u32) -> VertexId {
    (0..n).fold(0u64, |acc, _| acc * q as u64 + c as u64) as VertexId
}

/// The `q - 1` constant words `1⃗, ..., (q-1)⃗`: a doubly distance resolving
/// set of `H(n,q)` on `0⃗`.
pub fn hamming_ddrs_constant(n: u32, q: u32) -> Result<LandmarkSet> {
    Family::hamming(n, q)?;
    LandmarkSet::new((1..q).map(|c| constant_word(n, q, c)).collect())
}

/// The `n` constant words `1⃗, ..., n⃗`, valid when `n <= q - 1`.
pub fn hamming_ddrs_levels(n: u32, q: u32) -> Result<LandmarkSet> {
    Family::hamming(n, q)?;
    if n > q - 1 {
        return Err(Error::InvalidParameter(format!(
            "level construction needs n <= q - 1, got n = {n}, q = {q}"
        )));
    }
    LandmarkSet::new((1..=n).map(|c| constant_word(n, q, c)).collect())
}

fn require_resolving<M: Metric>(g: &M, s: &LandmarkSet, what: &str) -> Result<()> {
    match check_resolving(g, s)? {
        Verdict::Pass => Ok(()),
        Verdict::Fail { witness } => Err(Error::Precondition(format!(
            "input set is not resolving in {what}: {witness:?} are unresolved"
        ))),
    }
}

fn dedup_in_order(v: impl IntoIterator<Item = VertexId>) -> Vec<VertexId> {
    let mut out = Vec::new();
    for x in v {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Maps a resolving set of `F_n` to a resolving set of `Q_n` by picking, in
/// each class `{x, x̄}`, the member with `x_1 = 0`.
pub fn fold_resolving_map(n: u32, s: &LandmarkSet) -> Result<LandmarkSet> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n >= 3, got {n}")));
    }
    let folded = Family::folded(n)?;
    require_resolving(&folded, s, &folded.to_string())?;
    LandmarkSet::new(
        s.iter()
            .map(|rep| {
                if rep & 1 == 1 {
                    (!(rep as u64) & mask(n)) as VertexId
                } else {
                    rep
                }
            })
            .collect(),
    )
}

/// Projects a resolving set of `Q_n` (odd `n`) onto `F_n` via `x ↦ [x]`.
pub fn unfold_resolving_map(n: u32, s: &LandmarkSet) -> Result<LandmarkSet> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "unfolding needs odd n >= 3, got {n}"
        )));
    }
    let cube = Family::cube(n)?;
    require_resolving(&cube, s, &cube.to_string())?;
    LandmarkSet::new(dedup_in_order(
        s.iter().map(|x| canonical_fold(n, x as u64) as VertexId),
    ))
}

/// Sends a resolving set of `Q_n` to `{[x0], [x1] : x ∈ S}`, a resolving set
/// of `F_{n+1}` of size at most `2|S|`.
pub fn double_resolving_map(n: u32, s: &LandmarkSet) -> Result<LandmarkSet> {
    let cube = Family::cube(n)?;
    Family::folded(n + 1)?;
    require_resolving(&cube, s, &cube.to_string())?;
    let m = n + 1;
    LandmarkSet::new(dedup_in_order(s.iter().flat_map(|x| {
        let x0 = x as u64;
        let x1 = x0 | 1 << n;
        [
            canonical_fold(m, x0) as VertexId,
            canonical_fold(m, x1) as VertexId,
        ]
    })))
}

/// `k + 1` vectors for `n = 2k + 1`: bit pairs `{2i-1, 2i}` (1-based) for
/// `i <= k` and the single last bit. For `n = 3` the two vectors are
/// antipodal and collapse to one vertex.
pub fn folded_ddrs_odd(n: u32) -> Result<LandmarkSet> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "odd construction needs odd n >= 3, got {n}"
        )));
    }
    Family::folded(n)?;
    let k = (n - 1) / 2;
    let mut words: Vec<u64> = (0..k).map(|i| 0b11 << (2 * i)).collect();
    words.push(1 << (n - 1));
    LandmarkSet::new(dedup_in_order(
        words.into_iter().map(|w| canonical_fold(n, w) as VertexId),
    ))
}

/// The `n - 1` prefix vectors (first `i` coordinates set, `1 <= i < n`) for
/// even `n`.
pub fn folded_ddrs_even(n: u32) -> Result<LandmarkSet> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "even construction needs even n >= 4, got {n}"
        )));
    }
    Family::folded(n)?;
    LandmarkSet::new(
        (1..n)
            .map(|i| canonical_fold(n, mask(i)) as VertexId)
            .collect(),
    )
}
