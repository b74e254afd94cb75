//! Bit-defined interconnection topologies: the hypercube `Q_n`, the folded
//! hypercube `FQ_n` and the augmented cube `AQ_n`.
//!
//! Vertices are `n`-bit labels. Bit `i` (1-indexed) is `1 << (i - 1)`, so the
//! string `x_n ... x_1` reads most significant bit first. Adjacency is computed
//! on demand from the XOR of two labels; no edge list is ever materialized.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported dimension. Labels are `u32` and sweeps allocate per-vertex state.
pub const MAX_DIMENSION: u32 = 24;

/// The three supported families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "q")]
    Hypercube,
    #[serde(rename = "fq")]
    FoldedHypercube,
    #[serde(rename = "aq")]
    AugmentedCube,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Hypercube, Kind::FoldedHypercube, Kind::AugmentedCube];

    /// Short lowercase tag used on the command line and in files.
    pub fn tag(self) -> &'static str {
        match self {
            Kind::Hypercube => "q",
            Kind::FoldedHypercube => "fq",
            Kind::AugmentedCube => "aq",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q" | "hypercube" => Ok(Kind::Hypercube),
            "fq" | "folded" | "folded-hypercube" => Ok(Kind::FoldedHypercube),
            "aq" | "augmented" | "augmented-cube" => Ok(Kind::AugmentedCube),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// An `n`-bit vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Vertex(pub u32);

impl Vertex {
    pub fn label(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// `x^i`: flip bit `i`.
    #[inline]
    pub fn flip(self, i: u32) -> Vertex {
        debug_assert!(i >= 1);
        Vertex(self.0 ^ (1 << (i - 1)))
    }

    /// `x^{i,j,...}`: flip every listed bit in turn.
    pub fn flip_all(self, dims: &[u32]) -> Vertex {
        dims.iter().fold(self, |v, &i| v.flip(i))
    }

    /// `x̄^i`: flip bits `i, i-1, ..., 1`.
    #[inline]
    pub fn flip_low(self, i: u32) -> Vertex {
        debug_assert!(i >= 1);
        Vertex(self.0 ^ low_mask(i))
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }
}

#[inline]
fn low_mask(i: u32) -> u32 {
    if i >= 32 {
        u32::MAX
    } else {
        (1u32 << i) - 1
    }
}

/// Classification of a vertex pair in an augmented cube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeKindAq {
    /// `v = u^i`.
    HypercubeEdge(u32),
    /// `v = ū^i` with `i >= 2`.
    ComplementEdge(u32),
    NotAnEdge,
}

/// A topology instance: a family plus its dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Topology {
    kind: Kind,
    n: u32,
}

impl Topology {
    pub fn new(kind: Kind, n: u32) -> Result<Self> {
        let min = match kind {
            Kind::FoldedHypercube => 2,
            _ => 1,
        };
        if n < min || n > MAX_DIMENSION {
            return Err(Error::range(
                "dimension",
                format!("{kind} requires {min} <= n <= {MAX_DIMENSION}, got {n}"),
            ));
        }
        Ok(Topology { kind, n })
    }

    pub fn hypercube(n: u32) -> Result<Self> {
        Self::new(Kind::Hypercube, n)
    }

    pub fn folded(n: u32) -> Result<Self> {
        Self::new(Kind::FoldedHypercube, n)
    }

    pub fn augmented(n: u32) -> Result<Self> {
        Self::new(Kind::AugmentedCube, n)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of vertices, `2^n`.
    pub fn order(&self) -> usize {
        1usize << self.n
    }

    /// The uniform degree of the family.
    pub fn degree(&self) -> usize {
        let n = self.n as usize;
        match self.kind {
            Kind::Hypercube => n,
            Kind::FoldedHypercube => n + 1,
            Kind::AugmentedCube => 2 * n - 1,
        }
    }

    pub fn full_mask(&self) -> u32 {
        low_mask(self.n)
    }

    /// `x̄`: flip all `n` bits.
    pub fn complement(&self, v: Vertex) -> Vertex {
        Vertex(v.0 ^ self.full_mask())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (v.0 as usize) < self.order()
    }

    pub fn check(&self, v: Vertex) -> Result<Vertex> {
        if self.contains(v) {
            Ok(v)
        } else {
            Err(Error::InvalidVertex {
                label: v.0,
                n: self.n,
            })
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.order() as u32).map(Vertex)
    }

    /// Adjacency by bit rule. Out-of-range labels are never adjacent.
    #[inline]
    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        if !self.contains(u) || !self.contains(v) {
            return false;
        }
        let d = u.0 ^ v.0;
        if d == 0 {
            return false;
        }
        if d.is_power_of_two() {
            return true;
        }
        match self.kind {
            Kind::Hypercube => false,
            Kind::FoldedHypercube => d == self.full_mask(),
            // d = 2^i - 1 with i >= 2
            Kind::AugmentedCube => (d & (d + 1)) == 0,
        }
    }

    /// Neighbors in ascending label order. Assumes `v` is valid.
    pub fn neighbors_of(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.degree());
        for i in 1..=self.n {
            out.push(v.flip(i));
        }
        match self.kind {
            Kind::Hypercube => {}
            Kind::FoldedHypercube => out.push(self.complement(v)),
            Kind::AugmentedCube => out.extend((2..=self.n).map(|i| v.flip_low(i))),
        }
        out.sort_unstable();
        out
    }

    /// Neighbor set of `v`, ascending.
    pub fn neighbors(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check(v)?;
        Ok(self.neighbors_of(v))
    }

    /// `N(u) ∩ N(v)` in ascending order.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::InvalidPair);
        }
        Ok(sorted_intersection(
            &self.neighbors_of(u),
            &self.neighbors_of(v),
        ))
    }

    /// Which augmented-cube edge class, if any, joins `u` and `v`.
    pub fn classify_edge_aq(&self, u: Vertex, v: Vertex) -> Result<EdgeKindAq> {
        if self.kind != Kind::AugmentedCube {
            return Err(Error::range(
                "topology kind",
                format!("edge classification needs an augmented cube, got {}", self.kind),
            ));
        }
        self.check(u)?;
        self.check(v)?;
        let d = u.0 ^ v.0;
        Ok(if d != 0 && d.is_power_of_two() {
            EdgeKindAq::HypercubeEdge(d.trailing_zeros() + 1)
        } else if d >= 3 && (d & (d + 1)) == 0 {
            EdgeKindAq::ComplementEdge(d.count_ones())
        } else {
            EdgeKindAq::NotAnEdge
        })
    }

    pub fn parse_vertex(&self, s: &str) -> Result<Vertex> {
        parse_vertex(s, self.n)
    }

    pub fn format_vertex(&self, v: Vertex) -> String {
        format_vertex(v, self.n)
    }

    pub fn name(&self) -> String {
        let prefix = match self.kind {
            Kind::Hypercube => "Q",
            Kind::FoldedHypercube => "FQ",
            Kind::AugmentedCube => "AQ",
        };
        format!("{prefix}_{}", self.n)
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn sorted_intersection(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
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

/// Parses an `n`-character binary string; the leftmost character is bit `n`.
pub fn parse_vertex(s: &str, n: u32) -> Result<Vertex> {
    let err = |reason: String| Error::Parse {
        input: s.to_string(),
        reason,
    };
    if s.chars().count() != n as usize {
        return Err(err(format!("expected {n} binary digits, found {}", s.chars().count())));
    }
    if n > MAX_DIMENSION {
        return Err(err(format!("dimension {n} exceeds {MAX_DIMENSION}")));
    }
    let mut label = 0u32;
    for c in s.chars() {
        label <<= 1;
        match c {
            '0' => {}
            '1' => label |= 1,
            other => return Err(err(format!("invalid character {other:?}"))),
        }
    }
    Ok(Vertex(label))
}

/// Renders `v` as `x_n ... x_1`.
pub fn format_vertex(v: Vertex, n: u32) -> String {
    (1..=n)
        .rev()
        .map(|i| if v.0 >> (i - 1) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Minimal adjacency interface shared by the bit-defined topologies and
/// hand-wired test graphs. Vertices are `0..order()`.
pub trait Adjacency: Sync {
    fn order(&self) -> usize;

    fn adjacent(&self, a: usize, b: usize) -> bool;

    /// Neighbors of `v` in ascending order.
    fn neighbor_list(&self, v: usize) -> Vec<usize>;
}

impl Adjacency for Topology {
    fn order(&self) -> usize {
        Topology::order(self)
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.is_adjacent(Vertex(a as u32), Vertex(b as u32))
    }

    fn neighbor_list(&self, v: usize) -> Vec<usize> {
        self.neighbors_of(Vertex(v as u32))
            .into_iter()
            .map(Vertex::index)
            .collect()
    }
}

/// An explicit adjacency-list graph, used to exercise pattern searches on
/// hand-built inputs.
#[derive(Clone, Debug, Default)]
pub struct SyntheticGraph {
    adj: Vec<Vec<usize>>,
}

impl SyntheticGraph {
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); order];
        for &(a, b) in edges {
            assert!(a < order && b < order && a != b, "bad edge ({a}, {b})");
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SyntheticGraph { adj }
    }
}

impl Adjacency for SyntheticGraph {
    fn order(&self) -> usize {
        self.adj.len()
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    fn neighbor_list(&self, v: usize) -> Vec<usize> {
        self.adj[v].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(t: &Topology, s: &str) -> Vertex {
        t.parse_vertex(s).unwrap()
    }

    fn fmt_all(t: &Topology, vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|&x| t.format_vertex(x)).collect()
    }

    #[test]
    fn neighbor_examples() {
        let fq3 = Topology::folded(3).unwrap();
        assert_eq!(
            fmt_all(&fq3, &fq3.neighbors(v(&fq3, "000")).unwrap()),
            ["001", "010", "100", "111"]
        );
        let q3 = Topology::hypercube(3).unwrap();
        assert_eq!(
            fmt_all(&q3, &q3.neighbors(v(&q3, "000")).unwrap()),
            ["001", "010", "100"]
        );
        let aq4 = Topology::augmented(4).unwrap();
        let mut expected = vec!["0001", "0010", "0100", "1000", "0011", "0111", "1111"];
        expected.sort();
        assert_eq!(fmt_all(&aq4, &aq4.neighbors(v(&aq4, "0000")).unwrap()), expected);
    }

    #[test]
    fn invalid_vertex_rejected() {
        let q3 = Topology::hypercube(3).unwrap();
        assert_eq!(
            q3.neighbors(Vertex(8)),
            Err(Error::InvalidVertex { label: 8, n: 3 })
        );
    }

    #[test]
    fn common_neighbor_examples() {
        let fq4 = Topology::folded(4).unwrap();
        let got = fq4.common_neighbors(v(&fq4, "0000"), v(&fq4, "0011")).unwrap();
        assert_eq!(fmt_all(&fq4, &got), ["0001", "0010"]);

        let aq4 = Topology::augmented(4).unwrap();
        let got = aq4.common_neighbors(v(&aq4, "0000"), v(&aq4, "0100")).unwrap();
        assert_eq!(fmt_all(&aq4, &got), ["0011", "0111"]);

        let q3 = Topology::hypercube(3).unwrap();
        assert!(q3.common_neighbors(v(&q3, "000"), v(&q3, "111")).unwrap().is_empty());
        assert_eq!(
            q3.common_neighbors(v(&q3, "000"), v(&q3, "000")),
            Err(Error::InvalidPair)
        );
    }

    #[test]
    fn classification_examples() {
        let aq4 = Topology::augmented(4).unwrap();
        let u = v(&aq4, "0000");
        assert_eq!(aq4.classify_edge_aq(u, v(&aq4, "1000")).unwrap(), EdgeKindAq::HypercubeEdge(4));
        assert_eq!(aq4.classify_edge_aq(u, v(&aq4, "0111")).unwrap(), EdgeKindAq::ComplementEdge(3));
        assert_eq!(aq4.classify_edge_aq(u, v(&aq4, "0101")).unwrap(), EdgeKindAq::NotAnEdge);
        assert_eq!(aq4.classify_edge_aq(u, v(&aq4, "0001")).unwrap(), EdgeKindAq::HypercubeEdge(1));
        assert_eq!(aq4.classify_edge_aq(u, u).unwrap(), EdgeKindAq::NotAnEdge);
        assert!(Topology::hypercube(4).unwrap().classify_edge_aq(u, u).is_err());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_vertex("000111", 6).unwrap(), Vertex(0b111));
        assert_eq!(format_vertex(parse_vertex("1010", 4).unwrap(), 4), "1010");
        assert!(matches!(parse_vertex("012", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_vertex("0101", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_vertex("", 3), Err(Error::Parse { .. })));
    }

    #[test]
    fn small_augmented_cubes() {
        // AQ_1 = K_2, AQ_2 = K_4
        let aq1 = Topology::augmented(1).unwrap();
        assert_eq!(aq1.neighbors(Vertex(0)).unwrap(), vec![Vertex(1)]);
        let aq2 = Topology::augmented(2).unwrap();
        for a in aq2.vertices() {
            assert_eq!(aq2.neighbors(a).unwrap().len(), 3);
        }
        assert!(Topology::folded(1).is_err());
        assert!(Topology::hypercube(0).is_err());
    }

    #[test]
    fn dimension_guard() {
        assert!(Topology::hypercube(MAX_DIMENSION).is_ok());
        assert!(Topology::hypercube(MAX_DIMENSION + 1).is_err());
    }
}
