//! Stars `K_{1,m}`, closed-form common-neighbor predictions for augmented
//! cubes, the two forbidden patterns `T` and `H`, and star-intersection bounds.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::topology::{format_vertex, parse_vertex, Adjacency, Kind, Topology, Vertex};

/// A center plus a leaf set. Leaves are kept sorted and distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Star {
    pub center: Vertex,
    pub leaves: Vec<Vertex>,
}

/// Wire form of a [`Star`]: labels as binary strings, leaves ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarRecord {
    pub center: String,
    pub leaves: Vec<String>,
}

impl Star {
    pub fn new(center: Vertex, leaves: impl IntoIterator<Item = Vertex>) -> Self {
        let mut leaves: Vec<Vertex> = leaves.into_iter().collect();
        leaves.sort_unstable();
        leaves.dedup();
        Star { center, leaves }
    }

    pub fn single(center: Vertex) -> Self {
        Star {
            center,
            leaves: Vec::new(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    /// Center followed by the leaves.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        std::iter::once(self.center).chain(self.leaves.iter().copied())
    }

    pub fn to_record(&self, n: u32) -> StarRecord {
        StarRecord {
            center: format_vertex(self.center, n),
            leaves: self.leaves.iter().map(|&l| format_vertex(l, n)).collect(),
        }
    }

    /// Parses a record. Duplicate leaves are kept so validation can reject them.
    pub fn from_record(rec: &StarRecord, n: u32) -> Result<Self> {
        let center = parse_vertex(&rec.center, n)?;
        let mut leaves = rec
            .leaves
            .iter()
            .map(|s| parse_vertex(s, n))
            .collect::<Result<Vec<_>>>()?;
        leaves.sort_unstable();
        Ok(Star { center, leaves })
    }
}

/// True iff every leaf is a distinct neighbor of the center.
pub fn is_star_subgraph(t: &Topology, s: &Star) -> bool {
    t.contains(s.center)
        && s.leaves.windows(2).all(|w| w[0] != w[1])
        && s.leaves.iter().all(|&l| t.is_adjacent(s.center, l))
}

/// [`is_star_subgraph`] plus no edge between two leaves.
pub fn induced_exact(t: &Topology, s: &Star) -> bool {
    is_star_subgraph(t, s)
        && s
            .leaves
            .iter()
            .tuple_combinations()
            .all(|(&a, &b)| !t.is_adjacent(a, b))
}

/// Result of [`enumerate_stars`].
#[derive(Clone, Debug, Default)]
pub struct StarPool {
    pub stars: Vec<Star>,
    /// Set when the requested leaf count exceeds the degree; `stars` is then empty.
    pub exceeds_degree: bool,
}

/// Every star with exactly `m` leaves, or with `0..=m` leaves when
/// `include_substars` is set.
///
/// Order: by leaf count, then center, then leaf subset in lexicographic order.
pub fn enumerate_stars(t: &Topology, m: usize, include_substars: bool) -> StarPool {
    if m > t.degree() {
        return StarPool {
            stars: Vec::new(),
            exceeds_degree: true,
        };
    }
    let sizes = if include_substars { 0..=m } else { m..=m };
    let mut stars = Vec::new();
    for size in sizes {
        for c in t.vertices() {
            let nb = t.neighbors_of(c);
            for combo in nb.iter().copied().combinations(size) {
                stars.push(Star {
                    center: c,
                    leaves: combo,
                });
            }
        }
    }
    StarPool {
        stars,
        exceeds_degree: false,
    }
}

/// A vertex named relative to a base vertex `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relative {
    /// `u` itself.
    Base,
    /// `u^i`.
    Hypercube(u32),
    /// `ū^i`.
    Complement(u32),
}

impl Relative {
    pub fn resolve(self, u: Vertex) -> Vertex {
        match self {
            Relative::Base => u,
            Relative::Hypercube(i) => u.flip(i),
            Relative::Complement(i) => u.flip_low(i),
        }
    }
}

/// Which case of which classification formula produced a prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AqCase {
    /// `(u, u^1)`.
    HypercubeEdgeFirst,
    /// `(u, u^i)`, `2 <= i <= n`.
    HypercubeEdge,
    /// `(u, ū^i)`, `2 <= i <= n-1`.
    ComplementEdge,
    /// `(u, ū^n)`.
    ComplementEdgeLast,
    /// `(u^1, u^j)`, `j ∈ {2, 3}`.
    TwoHypercubeLow,
    /// `(u^i, u^{i+1})`, `i >= 2`.
    TwoHypercubeAdjacent,
    TwoHypercubeOther,
    /// `(ū^i, ū^{i+2})`.
    TwoComplementGapTwo,
    TwoComplementOther,
    /// `(u^1, ū^3)`.
    MixedLow,
    /// `(u^i, ū^i)`, `3 <= i <= n`.
    MixedEqual,
    /// `(u^i, ū^j)` with `i = j + 1, 2 <= j <= n-2` or `i = j - 1, 3 <= j <= n`.
    MixedOffByOne,
    /// `(u^i, ū^j)` with `i = j + 2, 2 <= j <= n-2`.
    MixedOffByTwo,
    MixedOther,
}

impl AqCase {
    pub const ALL: [AqCase; 14] = [
        AqCase::HypercubeEdgeFirst,
        AqCase::HypercubeEdge,
        AqCase::ComplementEdge,
        AqCase::ComplementEdgeLast,
        AqCase::TwoHypercubeLow,
        AqCase::TwoHypercubeAdjacent,
        AqCase::TwoHypercubeOther,
        AqCase::TwoComplementGapTwo,
        AqCase::TwoComplementOther,
        AqCase::MixedLow,
        AqCase::MixedEqual,
        AqCase::MixedOffByOne,
        AqCase::MixedOffByTwo,
        AqCase::MixedOther,
    ];

    /// Whether the formula for this case has four elements.
    pub fn predicts_four(self) -> bool {
        matches!(
            self,
            AqCase::ComplementEdge
                | AqCase::TwoHypercubeLow
                | AqCase::TwoHypercubeAdjacent
                | AqCase::TwoComplementGapTwo
                | AqCase::MixedLow
                | AqCase::MixedEqual
                | AqCase::MixedOffByOne
                | AqCase::MixedOffByTwo
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            AqCase::HypercubeEdgeFirst => "hypercube-edge-first",
            AqCase::HypercubeEdge => "hypercube-edge",
            AqCase::ComplementEdge => "complement-edge",
            AqCase::ComplementEdgeLast => "complement-edge-last",
            AqCase::TwoHypercubeLow => "two-hypercube-low",
            AqCase::TwoHypercubeAdjacent => "two-hypercube-adjacent",
            AqCase::TwoHypercubeOther => "two-hypercube-other",
            AqCase::TwoComplementGapTwo => "two-complement-gap-two",
            AqCase::TwoComplementOther => "two-complement-other",
            AqCase::MixedLow => "mixed-low",
            AqCase::MixedEqual => "mixed-equal",
            AqCase::MixedOffByOne => "mixed-off-by-one",
            AqCase::MixedOffByTwo => "mixed-off-by-two",
            AqCase::MixedOther => "mixed-other",
        }
    }
}

impl fmt::Display for AqCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A closed-form common neighborhood and the case that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub case: AqCase,
    /// Ascending, deduplicated.
    pub set: Vec<Vertex>,
}

/// Closed-form `N(a) ∩ N(b)` in `AQ_n` for `a`, `b` named relative to `u`.
///
/// The pair selects the formula: `(u, u^i)`, `(u, ū^i)`, `(u^i, u^j)`,
/// `(ū^i, ū^j)` or `(u^i, ū^j)`; the arguments may be given in either order.
pub fn predicted_common_neighbors_aq(
    t: &Topology,
    u: Vertex,
    a: Relative,
    b: Relative,
) -> Result<Prediction> {
    use Relative::*;

    if t.kind() != Kind::AugmentedCube {
        return Err(Error::range("topology kind", "classification formulas need an augmented cube"));
    }
    t.check(u)?;
    let n = t.n();
    let hyp = |i: u32, case: &str| -> Result<()> {
        if (1..=n).contains(&i) {
            Ok(())
        } else {
            Err(Error::range("dimension", format!("{case}: hypercube index {i} not in 1..={n}")))
        }
    };
    let comp = |i: u32, case: &str| -> Result<()> {
        if (2..=n).contains(&i) {
            Ok(())
        } else {
            Err(Error::range("dimension", format!("{case}: complement index {i} not in 2..={n}")))
        }
    };
    let h = |x: Vertex, i: u32| x.flip(i);
    let c = |x: Vertex, i: u32| x.flip_low(i);

    let (case, set) = match (a, b) {
        (Base, Hypercube(i)) | (Hypercube(i), Base) => {
            hyp(i, "hypercube edge (u, u^i)")?;
            if i >= 2 {
                (AqCase::HypercubeEdge, vec![c(u, i), c(u, i - 1)])
            } else {
                if n < 2 {
                    return Err(Error::range("dimension", "hypercube edge (u, u^1): needs n >= 2"));
                }
                (AqCase::HypercubeEdgeFirst, vec![c(u, 2), h(u, 2)])
            }
        }
        (Base, Complement(i)) | (Complement(i), Base) => {
            comp(i, "complement edge (u, ū^i)")?;
            if i < n {
                (
                    AqCase::ComplementEdge,
                    vec![h(u, i), h(u, i + 1), c(u, i + 1), c(u, i - 1)],
                )
            } else {
                (AqCase::ComplementEdgeLast, vec![c(u, n - 1), h(u, n)])
            }
        }
        (Hypercube(p), Hypercube(q)) => {
            let (i, j) = (p.min(q), p.max(q));
            if i == j {
                return Err(Error::InvalidPair);
            }
            if n < 3 {
                return Err(Error::range("dimension", "two hypercube edges: needs n >= 3"));
            }
            hyp(i, "two hypercube edges")?;
            hyp(j, "two hypercube edges")?;
            let ui = h(u, i);
            if i == 1 && (j == 2 || j == 3) {
                (
                    AqCase::TwoHypercubeLow,
                    vec![u, u.flip_all(&[1, 2]), u.flip_all(&[1, 3]), u.flip_all(&[2, 3])],
                )
            } else if i >= 2 && j == i + 1 {
                (
                    AqCase::TwoHypercubeAdjacent,
                    vec![u, h(ui, j), c(u, i), c(ui, j)],
                )
            } else {
                (AqCase::TwoHypercubeOther, vec![u, h(ui, j)])
            }
        }
        (Complement(p), Complement(q)) => {
            let (i, j) = (p.min(q), p.max(q));
            if i == j {
                return Err(Error::InvalidPair);
            }
            if n < 3 {
                return Err(Error::range("dimension", "two complement edges: needs n >= 3"));
            }
            comp(i, "two complement edges")?;
            comp(j, "two complement edges")?;
            let ci = c(u, i);
            if j == i + 2 {
                (
                    AqCase::TwoComplementGapTwo,
                    vec![u, c(ci, j), c(u, i + 1), h(ci, j)],
                )
            } else {
                (AqCase::TwoComplementOther, vec![u, c(ci, j)])
            }
        }
        (Hypercube(i), Complement(j)) | (Complement(j), Hypercube(i)) => {
            if n < 3 {
                return Err(Error::range("dimension", "mixed edges: needs n >= 3"));
            }
            hyp(i, "mixed edges")?;
            comp(j, "mixed edges")?;
            let ui = h(u, i);
            if i == 1 && j == 3 {
                (
                    AqCase::MixedLow,
                    vec![u, u.flip_all(&[1, 3]), u.flip_all(&[1, 2]), u.flip_all(&[2, 3])],
                )
            } else if i == j && (3..=n).contains(&j) {
                (
                    AqCase::MixedEqual,
                    vec![u, h(ui, i - 1), c(u, i - 1), h(c(u, i), i - 1)],
                )
            } else if (i == j + 1 && (2..=n.saturating_sub(2)).contains(&j))
                || (i + 1 == j && (3..=n).contains(&j))
            {
                (
                    AqCase::MixedOffByOne,
                    vec![u, h(ui, i + 1), c(u, i), c(ui, i + 1)],
                )
            } else if i == j + 2 && (2..=n.saturating_sub(2)).contains(&j) {
                (
                    AqCase::MixedOffByTwo,
                    vec![u, h(ui, i - 1), c(u, i - 1), c(ui, i - 2)],
                )
            } else {
                (AqCase::MixedOther, vec![u, c(ui, j)])
            }
        }
        (Base, Base) => return Err(Error::InvalidPair),
    };
    let mut set = set;
    set.sort_unstable();
    set.dedup();
    Ok(Prediction { case, set })
}

/// Every relative pair the classification formulas cover for dimension `n`,
/// in a fixed order.
pub fn classification_pairs(n: u32) -> Vec<(Relative, Relative)> {
    use Relative::*;
    let mut out = Vec::new();
    for i in 1..=n {
        out.push((Base, Hypercube(i)));
    }
    for i in 2..=n {
        out.push((Base, Complement(i)));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((Hypercube(i), Hypercube(j)));
        }
    }
    for i in 2..=n {
        for j in i + 1..=n {
            out.push((Complement(i), Complement(j)));
        }
    }
    for i in 1..=n {
        for j in 2..=n {
            out.push((Hypercube(i), Complement(j)));
        }
    }
    out
}

/// The two fixed patterns whose absence from `AQ_n` caps edge/star overlap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    /// 11 vertices: edge `uv`, hub `x` adjacent to `x_1..x_8`, `v` to `x_1..x_4`,
    /// `u` to `x_5..x_8`.
    T,
    /// 10 vertices: edge `uv`, edge `vx`, hub `x` adjacent to `x_1..x_7`, `v` to
    /// `x_1..x_4`, `u` to `x_5..x_7`.
    H,
}

impl Pattern {
    /// Leaves attached to `v` and to `u` respectively.
    pub fn arms(self) -> (usize, usize) {
        match self {
            Pattern::T => (4, 4),
            Pattern::H => (4, 3),
        }
    }

    /// Pattern vertex count.
    pub fn order(self) -> usize {
        let (a, b) = self.arms();
        3 + a + b
    }

    /// Edges of the pattern over role indices `x = 0, u = 1, v = 2, x_i = 2 + i`.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let (a, b) = self.arms();
        let mut e = vec![(1, 2)];
        if self == Pattern::H {
            e.push((0, 2));
        }
        for i in 1..=a + b {
            e.push((0, 2 + i));
        }
        for i in 1..=a {
            e.push((2, 2 + i));
        }
        for i in a + 1..=a + b {
            e.push((1, 2 + i));
        }
        e
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::T => "T",
            Pattern::H => "H",
        })
    }
}

/// Role-to-vertex map for a pattern occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternEmbedding {
    pub pattern: Pattern,
    pub x: usize,
    pub u: usize,
    pub v: usize,
    /// `x_1, x_2, ...` in role order.
    pub leaves: Vec<usize>,
}

impl PatternEmbedding {
    /// Images in role-index order.
    pub fn images(&self) -> Vec<usize> {
        let mut out = vec![self.x, self.u, self.v];
        out.extend(&self.leaves);
        out
    }

    /// Injective and edge-preserving in `g`.
    pub fn is_valid<G: Adjacency + ?Sized>(&self, g: &G) -> bool {
        let img = self.images();
        if img.len() != self.pattern.order() || img.iter().any(|&a| a >= g.order()) {
            return false;
        }
        let mut sorted = img.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == img.len()
            && self
                .pattern
                .edges()
                .iter()
                .all(|&(a, b)| g.adjacent(img[a], img[b]))
    }

    /// Role names to labels, for reports.
    pub fn roles(&self) -> Vec<(String, usize)> {
        let mut out = vec![
            ("x".to_string(), self.x),
            ("u".to_string(), self.u),
            ("v".to_string(), self.v),
        ];
        out.extend(
            self.leaves
                .iter()
                .enumerate()
                .map(|(i, &l)| (format!("x{}", i + 1), l)),
        );
        out
    }
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Picks disjoint `a`-subset of `left` and `b`-subset of `right` (both sorted),
/// preferring private elements so shared ones are left for the other side.
fn disjoint_pick(left: &[usize], a: usize, right: &[usize], b: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let shared = intersect_sorted(left, right);
    let only_left: Vec<usize> = left.iter().copied().filter(|x| !shared.contains(x)).collect();
    let only_right: Vec<usize> = right.iter().copied().filter(|x| !shared.contains(x)).collect();
    if left.len() < a || right.len() < b || only_left.len() + only_right.len() + shared.len() < a + b {
        return None;
    }
    let mut pool = shared.into_iter();
    let mut pl: Vec<usize> = only_left.into_iter().take(a).collect();
    while pl.len() < a {
        pl.push(pool.next()?);
    }
    let mut pr: Vec<usize> = only_right.into_iter().take(b).collect();
    while pr.len() < b {
        pr.push(pool.next()?);
    }
    pl.sort_unstable();
    pr.sort_unstable();
    Some((pl, pr))
}

fn embed_at<G: Adjacency + ?Sized>(g: &G, pattern: Pattern, u: usize, v: usize, nv: &[usize], nu: &[usize]) -> Option<PatternEmbedding> {
    let (a, b) = pattern.arms();
    // x shares >= 4 neighbors with v, so it lies within distance two of v.
    let mut candidates: Vec<usize> = match pattern {
        Pattern::H => nv.to_vec(),
        Pattern::T => nv.iter().flat_map(|&w| g.neighbor_list(w)).collect(),
    };
    candidates.sort_unstable();
    candidates.dedup();
    for x in candidates {
        if x == u || x == v {
            continue;
        }
        let nx = g.neighbor_list(x);
        let mut with_v = intersect_sorted(&nx, nv);
        with_v.retain(|&w| w != u);
        if with_v.len() < a {
            continue;
        }
        let mut with_u = intersect_sorted(&nx, nu);
        with_u.retain(|&w| w != v);
        if with_u.len() < b {
            continue;
        }
        if let Some((lv, lu)) = disjoint_pick(&with_v, a, &with_u, b) {
            let mut leaves = lv;
            leaves.extend(lu);
            return Some(PatternEmbedding {
                pattern,
                x,
                u,
                v,
                leaves,
            });
        }
    }
    None
}

/// Searches `g` for a (not necessarily induced) copy of `pattern`.
///
/// Tries every ordered edge `(u, v)` in lexicographic order, so the returned
/// embedding is the same under either execution strategy.
pub fn find_forbidden_pattern<G: Adjacency + ?Sized>(g: &G, pattern: Pattern, exec: Exec) -> Option<PatternEmbedding> {
    par::find_first(exec, 0..g.order(), |u| {
        let nu = g.neighbor_list(u);
        nu.iter().find_map(|&v| {
            let nv = g.neighbor_list(v);
            embed_at(g, pattern, u, v, &nv, &nu)
        })
    })
}

/// Largest overlap between `N(seed)` and a star disjoint from `seed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionBound {
    /// Over stars with exactly `m` leaves.
    pub max: usize,
    /// Smallest center attaining `max`, if any center has `m` free neighbors.
    pub center: Option<u32>,
    /// Over stars with at most `m` leaves; never below `max`.
    pub max_at_most_m: usize,
}

/// What one candidate center can contribute.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CenterOverlap {
    pub center: Vertex,
    /// The center itself lies in `N(seed)`.
    pub center_hit: bool,
    /// Neighbors of the center in `N(seed)`.
    pub leaf_hits: usize,
    /// Neighbors of the center outside `seed`.
    pub free: usize,
}

pub(crate) fn center_overlaps(t: &Topology, seed: &[Vertex]) -> Vec<CenterOverlap> {
    let mut in_seed = vec![false; t.order()];
    for &s in seed {
        in_seed[s.index()] = true;
    }
    let mut in_nbhd = vec![false; t.order()];
    for &s in seed {
        for w in t.neighbors_of(s) {
            if !in_seed[w.index()] {
                in_nbhd[w.index()] = true;
            }
        }
    }
    t.vertices()
        .filter(|x| !in_seed[x.index()])
        .map(|x| {
            let nb = t.neighbors_of(x);
            CenterOverlap {
                center: x,
                center_hit: in_nbhd[x.index()],
                leaf_hits: nb.iter().filter(|w| in_nbhd[w.index()]).count(),
                free: nb.iter().filter(|w| !in_seed[w.index()]).count(),
            }
        })
        .collect()
}

pub(crate) fn best_from_overlaps(overlaps: &[CenterOverlap], m: usize) -> IntersectionBound {
    let mut best = IntersectionBound { max: 0, center: None, max_at_most_m: 0 };
    for o in overlaps {
        let val = usize::from(o.center_hit) + o.leaf_hits.min(m);
        best.max_at_most_m = best.max_at_most_m.max(val);
        if o.free >= m && (best.center.is_none() || val > best.max) {
            best.max = val;
            best.center = Some(o.center.label());
        }
    }
    best
}

/// Over centers `x ∉ seed`, the value `[x ∈ N(seed)] + min(m, |N(seed) ∩ N(x)|)`:
/// the most vertices of `N(seed)` a star disjoint from `seed` can cover.
/// `max` admits only centers with at least `m` neighbors outside `seed`
/// (exactly `m` leaves); `max_at_most_m` admits every center.
pub fn star_intersection_bound(t: &Topology, seed: &[Vertex], m: usize) -> Result<IntersectionBound> {
    for &s in seed {
        t.check(s)?;
    }
    Ok(best_from_overlaps(&center_overlaps(t, seed), m))
}

/// All vertex sets of size `k` inducing a connected subgraph, each exactly once,
/// each sorted ascending. Uses exclusive-neighborhood extension.
pub fn connected_subsets(t: &Topology, k: usize) -> Vec<Vec<Vertex>> {
    fn extend(
        t: &Topology,
        k: usize,
        root: Vertex,
        sub: &mut Vec<Vertex>,
        ext: Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        if sub.len() == k {
            let mut s = sub.clone();
            s.sort_unstable();
            out.push(s);
            return;
        }
        let mut ext = ext;
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for z in t.neighbors_of(w) {
                if z > root
                    && !sub.contains(&z)
                    && z != w
                    && !next.contains(&z)
                    && !sub.iter().any(|&s| t.is_adjacent(s, z))
                {
                    next.push(z);
                }
            }
            sub.push(w);
            extend(t, k, root, sub, next, out);
            sub.pop();
        }
    }

    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    for root in t.vertices() {
        let ext: Vec<Vertex> = t.neighbors_of(root).into_iter().filter(|&z| z > root).collect();
        let mut sub = vec![root];
        extend(t, k, root, &mut sub, ext, &mut out);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::SyntheticGraph;

    fn p(t: &Topology, s: &str) -> Vertex {
        t.parse_vertex(s).unwrap()
    }

    #[test]
    fn star_counts() {
        let q3 = Topology::hypercube(3).unwrap();
        assert_eq!(enumerate_stars(&q3, 2, false).stars.len(), 24);
        let fq3 = Topology::folded(3).unwrap();
        assert_eq!(enumerate_stars(&fq3, 2, false).stars.len(), 48);
        let aq4 = Topology::augmented(4).unwrap();
        assert_eq!(enumerate_stars(&aq4, 3, false).stars.len(), 560);
        // 8 + 8*3 + 24
        assert_eq!(enumerate_stars(&q3, 2, true).stars.len(), 56);
        let over = enumerate_stars(&q3, 4, false);
        assert!(over.exceeds_degree && over.stars.is_empty());
    }

    #[test]
    fn star_validity_examples() {
        let fq6 = Topology::folded(6).unwrap();
        let s = Star::new(
            p(&fq6, "000011"),
            ["000001", "000010", "000111", "001011", "010011"].map(|x| p(&fq6, x)),
        );
        assert!(is_star_subgraph(&fq6, &s));
        assert!(induced_exact(&fq6, &s));

        let q3 = Topology::hypercube(3).unwrap();
        assert!(!is_star_subgraph(&q3, &Star::new(Vertex(0), [p(&q3, "011")])));
        let lone = Star::single(Vertex(5));
        assert!(is_star_subgraph(&q3, &lone) && induced_exact(&q3, &lone));
    }

    #[test]
    fn induced_flag_detects_leaf_edge() {
        // 0001 and 0011 are adjacent in AQ_4
        let aq4 = Topology::augmented(4).unwrap();
        let s = Star::new(Vertex(0), [Vertex(0b0001), Vertex(0b0011)]);
        assert!(is_star_subgraph(&aq4, &s));
        assert!(!induced_exact(&aq4, &s));
    }

    #[test]
    fn record_round_trip_keeps_duplicates() {
        let rec = StarRecord {
            center: "000".into(),
            leaves: vec!["001".into(), "001".into()],
        };
        let q3 = Topology::hypercube(3).unwrap();
        let s = Star::from_record(&rec, 3).unwrap();
        assert_eq!(s.leaf_count(), 2);
        assert!(!is_star_subgraph(&q3, &s));
    }

    #[test]
    fn prediction_examples() {
        let aq4 = Topology::augmented(4).unwrap();
        let u = Vertex(0);
        let fmt = |pr: Prediction| -> Vec<String> {
            pr.set.iter().map(|&v| aq4.format_vertex(v)).collect()
        };
        let pr = predicted_common_neighbors_aq(&aq4, u, Relative::Base, Relative::Hypercube(3)).unwrap();
        assert_eq!(pr.case, AqCase::HypercubeEdge);
        assert_eq!(fmt(pr), ["0011", "0111"]);
        let pr = predicted_common_neighbors_aq(&aq4, u, Relative::Base, Relative::Complement(4)).unwrap();
        assert_eq!(pr.case, AqCase::ComplementEdgeLast);
        assert_eq!(fmt(pr), ["0111", "1000"]);
        let pr = predicted_common_neighbors_aq(&aq4, u, Relative::Hypercube(2), Relative::Hypercube(3)).unwrap();
        assert_eq!(pr.case, AqCase::TwoHypercubeAdjacent);
        assert_eq!(fmt(pr), ["0000", "0011", "0101", "0110"]);
    }

    #[test]
    fn prediction_range_errors() {
        let aq5 = Topology::augmented(5).unwrap();
        let u = Vertex(0);
        let e = predicted_common_neighbors_aq(&aq5, u, Relative::Base, Relative::Complement(1)).unwrap_err();
        assert!(e.to_string().contains("complement edge"), "{e}");
        let e = predicted_common_neighbors_aq(&aq5, u, Relative::Hypercube(6), Relative::Complement(2)).unwrap_err();
        assert!(e.to_string().contains("mixed"), "{e}");
        assert_eq!(
            predicted_common_neighbors_aq(&aq5, u, Relative::Hypercube(2), Relative::Hypercube(2)),
            Err(Error::InvalidPair)
        );
        assert!(predicted_common_neighbors_aq(&Topology::folded(5).unwrap(), u, Relative::Base, Relative::Hypercube(1)).is_err());
    }

    #[test]
    fn prediction_is_order_insensitive() {
        let aq6 = Topology::augmented(6).unwrap();
        let u = Vertex(0b101101);
        for (a, b) in classification_pairs(6) {
            assert_eq!(
                predicted_common_neighbors_aq(&aq6, u, a, b),
                predicted_common_neighbors_aq(&aq6, u, b, a)
            );
        }
    }

    fn pattern_graph(pattern: Pattern) -> SyntheticGraph {
        SyntheticGraph::from_edges(pattern.order(), &pattern.edges())
    }

    #[test]
    fn pattern_embeds_in_itself() {
        for pattern in [Pattern::T, Pattern::H] {
            let g = pattern_graph(pattern);
            for exec in [Exec::Sequential, Exec::Parallel] {
                let emb = find_forbidden_pattern(&g, pattern, exec).expect("self-embedding");
                assert!(emb.is_valid(&g));
                assert_eq!(emb.images(), (0..pattern.order()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn pattern_needs_every_edge() {
        for pattern in [Pattern::T, Pattern::H] {
            for skip in 0..pattern.edges().len() {
                let edges: Vec<_> = pattern
                    .edges()
                    .into_iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, e)| e)
                    .collect();
                let g = SyntheticGraph::from_edges(pattern.order(), &edges);
                assert!(find_forbidden_pattern(&g, pattern, Exec::Sequential).is_none());
            }
        }
    }

    #[test]
    fn pattern_found_with_relabeling_and_extra_edges() {
        // T with labels reversed and a chord x–u (subgraph, not induced)
        let pattern = Pattern::T;
        let k = pattern.order();
        let mut edges: Vec<_> = pattern.edges().into_iter().map(|(a, b)| (k - 1 - a, k - 1 - b)).collect();
        edges.push((k - 1, k - 2));
        let g = SyntheticGraph::from_edges(k, &edges);
        let emb = find_forbidden_pattern(&g, pattern, Exec::Sequential).unwrap();
        assert!(emb.is_valid(&g));
    }

    #[test]
    fn absent_from_small_augmented_cubes() {
        let aq5 = Topology::augmented(5).unwrap();
        assert!(find_forbidden_pattern(&aq5, Pattern::T, Exec::Parallel).is_none());
        let aq6 = Topology::augmented(6).unwrap();
        assert!(find_forbidden_pattern(&aq6, Pattern::H, Exec::Parallel).is_none());
    }

    #[test]
    fn intersection_examples() {
        let fq5 = Topology::folded(5).unwrap();
        assert_eq!(star_intersection_bound(&fq5, &[Vertex(0)], 3).unwrap().max, 2);
        let aq6 = Topology::augmented(6).unwrap();
        let b = star_intersection_bound(&aq6, &[p(&aq6, "000011"), p(&aq6, "001100")], 6).unwrap();
        assert_eq!(b.max, 7);
        assert_eq!(b.max_at_most_m, 7);
        // a closed neighborhood needs a center far from the seed
        let aq5 = Topology::augmented(5).unwrap();
        let b = star_intersection_bound(&aq5, &[Vertex(0), Vertex(1)], 9).unwrap();
        assert!(b.max < b.max_at_most_m);
        assert!(star_intersection_bound(&fq5, &[Vertex(99)], 3).is_err());
    }

    fn brute_connected(t: &Topology, k: usize) -> Vec<Vec<Vertex>> {
        t.vertices()
            .combinations(k)
            .filter(|set| {
                let mut seen = vec![set[0]];
                let mut i = 0;
                while i < seen.len() {
                    let a = seen[i];
                    for &b in set {
                        if !seen.contains(&b) && t.is_adjacent(a, b) {
                            seen.push(b);
                        }
                    }
                    i += 1;
                }
                seen.len() == set.len()
            })
            .collect()
    }

    #[test]
    fn connected_subsets_match_brute_force() {
        for t in [
            Topology::hypercube(3).unwrap(),
            Topology::folded(3).unwrap(),
            Topology::augmented(3).unwrap(),
            Topology::folded(4).unwrap(),
        ] {
            for k in 1..=4 {
                assert_eq!(connected_subsets(&t, k), brute_connected(&t, k), "{t} k={k}");
            }
        }
        // Q_3: 12 edges, 24 three-vertex paths
        let q3 = Topology::hypercube(3).unwrap();
        assert_eq!(connected_subsets(&q3, 2).len(), 12);
        assert_eq!(connected_subsets(&q3, 3).len(), 24);
    }
}
