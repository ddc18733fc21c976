//! Reduction graphs from 3-dimensional matching.
//!
//! Given a 3DM instance with parts `A, B, C` of size `n` and `τ` triples,
//! the gadget takes `N` disjoint copies of the instance and builds a graph on
//! `I = {s_A, s_B, s_C, s_D} ∪ triples` and `J = elements ∪ {d_0..d_{v-1}}`
//! with the edges
//!
//! 1. every `A` element to `s_A`,
//! 2. every `B` element to `s_B`,
//! 3. every `C` element to `s_C`,
//! 4. every element to `s_D`,
//! 5. each triple to its three elements,
//! 6. `d_i` to the triple with global index `j` when bit `i` of `j` is set,
//! 7. every `d_i` to `s_D`,
//!
//! plus the variant's clique edges: none (bipartite), `J` (split) or both `I`
//! and `J` (co-bipartite). A perfect matching in every copy, together with
//! the four hubs and the selectors, is a doubly resolving set.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::resolving::LandmarkSet;

pub type Triple = (usize, usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeDMInstance {
    n: usize,
    triples: Vec<Triple>,
}

impl ThreeDMInstance {
    pub fn new(n: usize, triples: Vec<Triple>) -> Result<Self> {
        if triples.is_empty() {
            return Err(Error::InvalidParameter("the triple set is empty".into()));
        }
        for (i, &(a, b, c)) in triples.iter().enumerate() {
            if a >= n || b >= n || c >= n {
                return Err(Error::InvalidParameter(format!(
                    "triple {i} ({a}, {b}, {c}) has an index >= n = {n}"
                )));
            }
            if triples[..i].contains(&(a, b, c)) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate triple ({a}, {b}, {c})"
                )));
            }
        }
        Ok(Self { n, triples })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    /// `n <int>` on the first line, then `a b c` per triple; `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut triples = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.split('#').next().unwrap_or("").trim();
            if l.is_empty() {
                continue;
            }
            let toks: Vec<&str> = l.split_whitespace().collect();
            let bad = |msg: String| Error::Parse { line, msg };
            match (n, toks.as_slice()) {
                (None, ["n", v]) => {
                    n = Some(
                        v.parse::<usize>()
                            .map_err(|_| bad(format!("bad count {v:?}")))?,
                    )
                }
                (None, _) => return Err(bad("expected `n <int>`".into())),
                (Some(size), [a, b, c]) => {
                    let mut idx = [0usize; 3];
                    for (slot, t) in idx.iter_mut().zip([a, b, c]) {
                        *slot = t.parse().map_err(|_| bad(format!("bad index {t:?}")))?;
                        if *slot >= size {
                            return Err(bad(format!("index {slot} out of range for n = {size}")));
                        }
                    }
                    let t = (idx[0], idx[1], idx[2]);
                    if triples.contains(&t) {
                        return Err(bad(format!("duplicate triple {t:?}")));
                    }
                    triples.push(t);
                }
                (Some(_), _) => return Err(bad("expected a triple `a b c`".into())),
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 1,
            msg: "missing `n <int>` line".into(),
        })?;
        if triples.is_empty() {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                msg: "no triples".into(),
            });
        }
        Self::new(n, triples)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (a, b, c) in &self.triples {
            writeln!(out, "{a} {b} {c}").unwrap();
        }
        out
    }

    /// Whether `subset` (triple indices) covers every element exactly once.
    pub fn is_perfect_matching(&self, subset: &[usize]) -> bool {
        if subset.len() != self.n || subset.iter().any(|&t| t >= self.triples.len()) {
            return false;
        }
        let mut seen = vec![[false; 3]; self.n];
        for &t in subset {
            let (a, b, c) = self.triples[t];
            for (part, e) in [a, b, c].into_iter().enumerate() {
                if std::mem::replace(&mut seen[e][part], true) {
                    return false;
                }
            }
        }
        true
    }

    /// Lexicographically smallest perfect matching, by backtracking over the
    /// `A` elements in order.
    pub fn find_perfect_matching(&self) -> Option<Vec<usize>> {
        fn go(
            inst: &ThreeDMInstance,
            a: usize,
            used_b: &mut [bool],
            used_c: &mut [bool],
            pick: &mut Vec<usize>,
        ) -> bool {
            if a == inst.n {
                return true;
            }
            for (t, &(ta, tb, tc)) in inst.triples.iter().enumerate() {
                if ta != a || used_b[tb] || used_c[tc] {
                    continue;
                }
                used_b[tb] = true;
                used_c[tc] = true;
                pick.push(t);
                if go(inst, a + 1, used_b, used_c, pick) {
                    return true;
                }
                pick.pop();
                used_b[tb] = false;
                used_c[tc] = false;
            }
            false
        }
        let mut pick = Vec::with_capacity(self.n);
        let found = go(
            self,
            0,
            &mut vec![false; self.n],
            &mut vec![false; self.n],
            &mut pick,
        );
        found.then(|| {
            pick.sort_unstable();
            pick
        })
    }
}

impl FromStr for ThreeDMInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// `c(S') = |S'| + 3n - |elements covered by S'|`.
pub fn matching_cost(inst: &ThreeDMInstance, subset: &[usize]) -> Result<usize> {
    let mut covered = vec![[false; 3]; inst.n];
    for &t in subset {
        let &(a, b, c) = inst
            .triples
            .get(t)
            .ok_or_else(|| Error::InvalidParameter(format!("triple index {t} out of range")))?;
        covered[a][0] = true;
        covered[b][1] = true;
        covered[c][2] = true;
    }
    let hit: usize = covered
        .iter()
        .map(|parts| parts.iter().filter(|&&x| x).count())
        .sum();
    let mut distinct = subset.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(distinct.len() + 3 * inst.n - hit)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Split,
    Bipartite,
    Cobipartite,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Split, Variant::Bipartite, Variant::Cobipartite];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Split => "split",
            Variant::Bipartite => "bipartite",
            Variant::Cobipartite => "cobipartite",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "split" => Ok(Variant::Split),
            "bipartite" => Ok(Variant::Bipartite),
            "cobipartite" | "co-bipartite" => Ok(Variant::Cobipartite),
            _ => Err(Error::InvalidParameter(format!(
                "unknown variant {s:?} (expected split, bipartite or cobipartite)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Part {
    A,
    B,
    C,
}

/// What a gadget vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    HubA,
    HubB,
    HubC,
    HubD,
    Selector(usize),
    Element {
        part: Part,
        copy: usize,
        index: usize,
    },
    Triple {
        copy: usize,
        index: usize,
    },
}

impl Role {
    /// Whether the vertex lies in `I` (hubs and triples) rather than `J`.
    pub fn in_i(&self) -> bool {
        matches!(
            self,
            Role::HubA | Role::HubB | Role::HubC | Role::HubD | Role::Triple { .. }
        )
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::HubA => f.write_str("s_A"),
            Role::HubB => f.write_str("s_B"),
            Role::HubC => f.write_str("s_C"),
            Role::HubD => f.write_str("s_D"),
            Role::Selector(i) => write!(f, "d_{i}"),
            Role::Element { part, copy, index } => {
                let p = match part {
                    Part::A => 'a',
                    Part::B => 'b',
                    Part::C => 'c',
                };
                write!(f, "{p}_{copy}_{index}")
            }
            Role::Triple { copy, index } => write!(f, "s_{copy}_{index}"),
        }
    }
}

/// A built reduction graph with its vertex roles.
#[derive(Debug, Clone)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub variant: Variant,
    /// Elements per part in one copy.
    pub n: usize,
    pub copies: usize,
    /// Triples per copy.
    pub triples_per_copy: usize,
    /// Number of selector vertices `d_i`.
    pub selectors: usize,
}

pub const HUB_A: VertexId = 0;
pub const HUB_B: VertexId = 1;
pub const HUB_C: VertexId = 2;
pub const HUB_D: VertexId = 3;

/// `⌈log₂ x⌉` for `x >= 1`.
fn ceil_log2(x: usize) -> usize {
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

impl GadgetGraph {
    pub fn selector(&self, i: usize) -> VertexId {
        assert!(i < self.selectors);
        4 + i
    }

    pub fn element(&self, part: Part, copy: usize, index: usize) -> VertexId {
        assert!(copy < self.copies && index < self.n);
        let p = match part {
            Part::A => 0,
            Part::B => 1,
            Part::C => 2,
        };
        4 + self.selectors + (p * self.copies + copy) * self.n + index
    }

    pub fn triple(&self, copy: usize, index: usize) -> VertexId {
        assert!(copy < self.copies && index < self.triples_per_copy);
        4 + self.selectors + 3 * self.copies * self.n + copy * self.triples_per_copy + index
    }

    pub fn i_count(&self) -> usize {
        self.roles.iter().filter(|r| r.in_i()).count()
    }

    pub fn j_count(&self) -> usize {
        self.roles.len() - self.i_count()
    }

    /// `<id> <role>` lines.
    pub fn role_map_text(&self) -> String {
        let mut out = String::new();
        for (v, r) in self.roles.iter().enumerate() {
            writeln!(out, "{v} {r}").unwrap();
        }
        out
    }

    /// The selectors with `s_A, s_B, s_C`: doubly distance resolving on
    /// `s_D` in every variant. Returns `(s_D, set)`.
    pub fn hub_ddrs(&self) -> (VertexId, LandmarkSet) {
        let mut v = vec![HUB_A, HUB_B, HUB_C];
        v.extend((0..self.selectors).map(|i| self.selector(i)));
        (HUB_D, LandmarkSet::new(v).expect("distinct ids"))
    }

    /// Size parameters of the hardness argument for this gadget.
    pub fn thresholds(&self) -> Thresholds {
        let n_prime = self.n * self.copies;
        Thresholds {
            n_prime,
            selectors: self.selectors,
            k: n_prime + self.selectors + 5,
            gap: n_prime as f64 + (n_prime as f64).sqrt() - 1.0,
            witness_size: n_prime + 4 + self.selectors,
        }
    }
}

/// `n' = nN`, `K = n' + v + 5`, the cost gap `n' + √n' - 1`, and the
/// size `K - 1` of the matching-derived witness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub n_prime: usize,
    pub selectors: usize,
    pub k: usize,
    pub gap: f64,
    pub witness_size: usize,
}

/// Builds the reduction graph over `copies` copies of `inst`.
///
/// Selector bits address the global triple index `copy * τ + index`, so
/// `v = ⌈log₂(copies * τ)⌉`.
pub fn build_gadget(
    inst: &ThreeDMInstance,
    variant: Variant,
    copies: usize,
) -> Result<GadgetGraph> {
    if copies == 0 {
        return Err(Error::InvalidParameter("need at least one copy".into()));
    }
    let n = inst.n;
    let tau = inst.triples.len();
    let total_triples = copies * tau;
    let selectors = ceil_log2(total_triples);

    let mut roles = vec![Role::HubA, Role::HubB, Role::HubC, Role::HubD];
    roles.extend((0..selectors).map(Role::Selector));
    for part in [Part::A, Part::B, Part::C] {
        for copy in 0..copies {
            roles.extend((0..n).map(|index| Role::Element { part, copy, index }));
        }
    }
    for copy in 0..copies {
        roles.extend((0..tau).map(|index| Role::Triple { copy, index }));
    }

    let mut g = GadgetGraph {
        graph: Graph::complete(0),
        roles,
        variant,
        n,
        copies,
        triples_per_copy: tau,
        selectors,
    };

    let mut edges = Vec::new();
    for copy in 0..copies {
        for index in 0..n {
            for (part, hub) in [(Part::A, HUB_A), (Part::B, HUB_B), (Part::C, HUB_C)] {
                let e = g.element(part, copy, index);
                edges.push((e, hub));
                edges.push((e, HUB_D));
            }
        }
        for (index, &(a, b, c)) in inst.triples.iter().enumerate() {
            let t = g.triple(copy, index);
            edges.push((t, g.element(Part::A, copy, a)));
            edges.push((t, g.element(Part::B, copy, b)));
            edges.push((t, g.element(Part::C, copy, c)));
            let j = copy * tau + index;
            for i in 0..selectors {
                if (j >> i) & 1 == 1 {
                    edges.push((g.selector(i), t));
                }
            }
        }
    }
    for i in 0..selectors {
        edges.push((g.selector(i), HUB_D));
    }

    let (i_side, j_side): (Vec<VertexId>, Vec<VertexId>) =
        (0..g.roles.len()).partition(|&v| g.roles[v].in_i());
    let mut clique = |side: &[VertexId]| {
        for (k, &u) in side.iter().enumerate() {
            for &v in &side[k + 1..] {
                edges.push((u, v));
            }
        }
    };
    match variant {
        Variant::Bipartite => {}
        Variant::Split => clique(&j_side),
        Variant::Cobipartite => {
            clique(&i_side);
            clique(&j_side);
        }
    }
    g.graph = Graph::from_edge_list(g.roles.len(), &edges)?;
    Ok(g)
}

/// `{s_A, s_B, s_C, s_D} ∪ {d_i} ∪` the matched triples of every copy.
///
/// `matching[c]` lists the triple indices chosen in copy `c`; each must be a
/// perfect matching of the instance.
pub fn witness_set(
    g: &GadgetGraph,
    inst: &ThreeDMInstance,
    matching: &[Vec<usize>],
) -> Result<LandmarkSet> {
    if inst.n != g.n || inst.triples.len() != g.triples_per_copy {
        return Err(Error::InvalidParameter(
            "instance does not match the gadget".into(),
        ));
    }
    if matching.len() != g.copies {
        return Err(Error::InvalidParameter(format!(
            "expected a matching for each of {} copies, got {}",
            g.copies,
            matching.len()
        )));
    }
    for (copy, m) in matching.iter().enumerate() {
        if !inst.is_perfect_matching(m) {
            return Err(Error::Precondition(format!(
                "triples {m:?} are not a perfect matching (copy {copy})"
            )));
        }
    }
    let mut v = vec![HUB_A, HUB_B, HUB_C, HUB_D];
    v.extend((0..g.selectors).map(|i| g.selector(i)));
    for (copy, m) in matching.iter().enumerate() {
        v.extend(m.iter().map(|&t| g.triple(copy, t)));
    }
    LandmarkSet::new(v)
}

/// The 3DM instance drawn in the bipartite construction example, with
/// 0-based indices.
pub fn figure_instance() -> ThreeDMInstance {
    ThreeDMInstance::new(
        3,
        vec![
            (0, 0, 0),
            (0, 1, 2),
            (0, 2, 1),
            (1, 0, 1),
            (1, 1, 2),
            (2, 2, 0),
            (2, 2, 1),
        ],
    )
    .expect("valid instance")
}
