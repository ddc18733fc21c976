//! Resolving, doubly resolving and doubly distance resolving predicates.
//!
//! All three checks reduce to "are these per-vertex signatures pairwise
//! distinct?" and are answered with one hash map pass over the vertices, so
//! they stay linear in `|V| * |S|` on hypercubes with thousands of vertices.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Metric, VertexId};

/// An ordered set of distinct landmark vertices.
///
/// Order is significant only for the doubly resolving signature, which is
/// normalised against the first landmark.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct LandmarkSet(Vec<VertexId>);

impl LandmarkSet {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        let mut seen = vertices.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLandmark(w[0]));
        }
        Ok(Self(vertices))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    /// The same vertices in increasing order.
    pub fn sorted(&self) -> LandmarkSet {
        let mut v = self.0.clone();
        v.sort_unstable();
        LandmarkSet(v)
    }
}

impl TryFrom<Vec<VertexId>> for LandmarkSet {
    type Error = Error;

    fn try_from(v: Vec<VertexId>) -> Result<Self> {
        Self::new(v)
    }
}

impl<const N: usize> TryFrom<[VertexId; N]> for LandmarkSet {
    type Error = Error;

    fn try_from(v: [VertexId; N]) -> Result<Self> {
        Self::new(v.to_vec())
    }
}

/// Outcome of a predicate check. A failure carries two vertices the set does
/// not separate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { witness: (VertexId, VertexId) },
}

impl Verdict {
    pub fn passed(self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(self) -> Option<(VertexId, VertexId)> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail { witness } => Some(witness),
        }
    }
}

fn validate<M: Metric>(g: &M, set: &[VertexId], min_len: usize) -> Result<()> {
    let n = g.order();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: n,
        });
    }
    if set.len() < min_len {
        return Err(Error::LandmarkSetTooSmall {
            required: min_len,
            got: set.len(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// `(d(u, s_1), ..., d(u, s_m))`.
pub fn distance_vector<M: Metric>(g: &M, u: VertexId, s: &LandmarkSet) -> Result<Vec<u32>> {
    validate(g, s.as_slice(), 0)?;
    if u >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            order: g.order(),
        });
    }
    Ok(s.iter().map(|x| g.dist(u, x)).collect())
}

/// Returns the first pair of vertices (in vertex order) whose signatures
/// collide. `sig` writes the signature of a vertex into the buffer.
fn first_collision(
    n: usize,
    width: usize,
    mut sig: impl FnMut(VertexId, &mut [i64]),
) -> Option<(VertexId, VertexId)> {
    let mut flat = vec![0i64; n * width];
    for (u, chunk) in flat.chunks_mut(width.max(1)).enumerate().take(n) {
        sig(u, chunk);
    }
    if width == 0 {
        return (n >= 2).then_some((0, 1));
    }
    let mut seen: HashMap<&[i64], VertexId> = HashMap::with_capacity(n);
    for (u, chunk) in flat.chunks(width).enumerate() {
        match seen.entry(chunk) {
            Entry::Occupied(e) => return Some((*e.get(), u)),
            Entry::Vacant(e) => {
                e.insert(u);
            }
        }
    }
    None
}

pub fn check_resolving<M: Metric>(g: &M, s: &LandmarkSet) -> Result<Verdict> {
    validate(g, s.as_slice(), 0)?;
    let set = s.as_slice();
    let hit = first_collision(g.order(), set.len(), |u, out| {
        for (o, &x) in out.iter_mut().zip(set) {
            *o = g.dist(u, x) as i64;
        }
    });
    Ok(hit.map_or(Verdict::Pass, |witness| Verdict::Fail { witness }))
}

pub fn is_resolving<M: Metric>(g: &M, s: &LandmarkSet) -> Result<bool> {
    check_resolving(g, s).map(Verdict::passed)
}

/// Two vertices are doubly resolved iff their distance vectors do not differ
/// by a constant vector; normalising each vector by its first entry turns
/// that into plain distinctness.
pub fn check_doubly_resolving<M: Metric>(g: &M, s: &LandmarkSet) -> Result<Verdict> {
    validate(g, s.as_slice(), 2)?;
    let set = s.as_slice();
    let (first, rest) = set.split_first().expect("validated nonempty");
    let hit = first_collision(g.order(), rest.len(), |u, out| {
        let base = g.dist(u, *first) as i64;
        for (o, &x) in out.iter_mut().zip(rest) {
            *o = g.dist(u, x) as i64 - base;
        }
    });
    Ok(hit.map_or(Verdict::Pass, |witness| Verdict::Fail { witness }))
}

pub fn is_doubly_resolving<M: Metric>(g: &M, s: &LandmarkSet) -> Result<bool> {
    check_doubly_resolving(g, s).map(Verdict::passed)
}

/// Checks that `(d(u, anchor) - d(u, s_i))_i` determines `d(u, anchor)`.
pub fn check_ddrs<M: Metric>(g: &M, anchor: VertexId, s: &LandmarkSet) -> Result<Verdict> {
    validate(g, s.as_slice(), 1)?;
    validate(g, &[anchor], 0)?;
    let set = s.as_slice();
    let width = set.len();
    let n = g.order();
    let mut flat = vec![0i64; n * width];
    for (u, chunk) in flat.chunks_mut(width).enumerate() {
        let base = g.dist(u, anchor) as i64;
        for (o, &x) in chunk.iter_mut().zip(set) {
            *o = base - g.dist(u, x) as i64;
        }
    }
    let mut seen: HashMap<&[i64], VertexId> = HashMap::with_capacity(n);
    for (u, chunk) in flat.chunks(width).enumerate() {
        match seen.entry(chunk) {
            Entry::Occupied(e) => {
                let v = *e.get();
                if g.dist(v, anchor) != g.dist(u, anchor) {
                    return Ok(Verdict::Fail { witness: (v, u) });
                }
            }
            Entry::Vacant(e) => {
                e.insert(u);
            }
        }
    }
    Ok(Verdict::Pass)
}

pub fn is_ddrs<M: Metric>(g: &M, anchor: VertexId, s: &LandmarkSet) -> Result<bool> {
    check_ddrs(g, anchor, s).map(Verdict::passed)
}

/// Joins a resolving set containing `anchor` with a doubly distance
/// resolving set on `anchor`; the union is doubly resolving.
///
/// Output order: `anchor`, the rest of `resolving`, then the new vertices of
/// `ddrs`.
pub fn compose_drs<M: Metric>(
    g: &M,
    resolving: &LandmarkSet,
    anchor: VertexId,
    ddrs: &LandmarkSet,
) -> Result<LandmarkSet> {
    if !resolving.contains(anchor) {
        return Err(Error::Precondition(format!(
            "anchor {anchor} is not in the resolving set"
        )));
    }
    if let Verdict::Fail { witness } = check_resolving(g, resolving)? {
        return Err(Error::Precondition(format!(
            "first set is not resolving: {witness:?} share a distance vector"
        )));
    }
    if let Verdict::Fail { witness } = check_ddrs(g, anchor, ddrs)? {
        return Err(Error::Precondition(format!(
            "second set is not doubly distance resolving on {anchor}: {witness:?}"
        )));
    }
    let mut out = vec![anchor];
    out.extend(resolving.iter().filter(|&v| v != anchor));
    for v in ddrs.iter() {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    LandmarkSet::new(out)
}
