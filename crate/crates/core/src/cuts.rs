//! Closed-form quantities and the explicit star-cut families around `0…0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::starform::{Star, StarRecord};
use crate::topology::{Kind, Topology, Vertex};

/// `f(x) = -x²/2 + (n - 1/2)x + 1`.
pub fn f_eval(n: u32, x: f64) -> f64 {
    -x * x / 2.0 + (n as f64 - 0.5) * x + 1.0
}

/// `g(x) = -x²/2 + (2n - 3/2)x + 2 - n²`.
pub fn g_eval(n: u32, x: f64) -> f64 {
    let n = n as f64;
    -x * x / 2.0 + (2.0 * n - 1.5) * x + 2.0 - n * n
}

/// `f` at an integer point. The value is always an integer since
/// `x(2n - 1 - x)` is even.
pub fn f_int(n: u32, x: i64) -> i64 {
    x * (2 * n as i64 - 1 - x) / 2 + 1
}

/// `g` at an integer point; integral for the same parity reason as [`f_int`].
pub fn g_int(n: u32, x: i64) -> i64 {
    let n = n as i64;
    x * (4 * n - 3 - x) / 2 + 2 - n * n
}

fn ceil_div(a: u32, b: u32) -> u32 {
    a.div_ceil(b)
}

/// Where a κ value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaSource {
    FqClosedForm,
    AqClosedForm,
    AqSmallMKnown,
    QKnown,
    K11Known,
}

/// A `κ(G; K_{1,m})` value with the range condition that was checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaFormula {
    pub kind: Kind,
    pub n: u32,
    pub m: u32,
    pub value: u32,
    pub source: FormulaSource,
    /// False when `(n, m)` lies outside every proven range; `value` is then an extrapolation.
    pub applicable: bool,
    pub condition: String,
}

/// Known or extrapolated star-structure connectivity.
pub fn kappa_formula(kind: Kind, n: u32, m: u32) -> Result<KappaFormula> {
    if m < 1 {
        return Err(Error::range("leaf count", "m must be at least 1"));
    }
    if n < 1 {
        return Err(Error::range("dimension", "n must be at least 1"));
    }
    let (value, source, applicable, condition) = match kind {
        Kind::FoldedHypercube if m == 1 => (n, FormulaSource::K11Known, n >= 7, "m=1 && n>=7"),
        Kind::FoldedHypercube => {
            let main = (2..=n.saturating_sub(1)).contains(&m) && n >= 7;
            let ext = (5..=6).contains(&n) && (2..=n - 2).contains(&m);
            (
                ceil_div(n + 1, 2),
                FormulaSource::FqClosedForm,
                main || ext,
                "(2<=m<=n-1 && n>=7) || (5<=n<=6 && 2<=m<=n-2)",
            )
        }
        Kind::AugmentedCube if m <= 3 => (
            ceil_div(2 * n - 1, m + 1),
            FormulaSource::AqSmallMKnown,
            n >= 4,
            "1<=m<=3 && n>=4",
        ),
        Kind::AugmentedCube => (
            ceil_div(n - 1, 2).max(1),
            FormulaSource::AqClosedForm,
            // 4m <= 3n - 15
            4 * m + 15 <= 3 * n,
            "4<=m<=(3n-15)/4",
        ),
        Kind::Hypercube if m == 1 => (
            n.saturating_sub(1).max(1),
            FormulaSource::K11Known,
            n >= 4,
            "m=1 && n>=4",
        ),
        Kind::Hypercube => (
            ceil_div(n, 2),
            FormulaSource::QKnown,
            m <= n && n >= 4,
            "2<=m<=n && n>=4",
        ),
    };
    Ok(KappaFormula {
        kind,
        n,
        m,
        value,
        source,
        applicable,
        condition: condition.to_string(),
    })
}

/// Whether every family member must be a full `K_{1,m}` or may be a sub-star.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Structure,
    Substructure,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Structure => "structure",
            Mode::Substructure => "substructure",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "structure" => Ok(Mode::Structure),
            "substructure" => Ok(Mode::Substructure),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "expected structure or substructure".into(),
            }),
        }
    }
}

/// A vertex listed twice while building one member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub member: usize,
    pub vertex: u32,
}

/// An ordered candidate cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarFamily {
    pub topology: Topology,
    pub mode: Mode,
    pub m: usize,
    pub members: Vec<Star>,
    /// Duplicates found during construction; empty for a clean build.
    pub collisions: Vec<Collision>,
}

/// The on-disk cut file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutFile {
    pub kind: Kind,
    pub n: u32,
    pub m: usize,
    pub mode: Mode,
    pub stars: Vec<StarRecord>,
}

impl StarFamily {
    pub fn new(topology: Topology, mode: Mode, m: usize, members: Vec<Star>) -> Self {
        StarFamily {
            topology,
            mode,
            m,
            members,
            collisions: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Union of member vertex sets, ascending.
    pub fn vertex_union(&self) -> Vec<Vertex> {
        let mut all: Vec<Vertex> = self.members.iter().flat_map(|s| s.vertices()).collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn to_cut_file(&self) -> CutFile {
        let n = self.topology.n();
        CutFile {
            kind: self.topology.kind(),
            n,
            m: self.m,
            mode: self.mode,
            stars: self.members.iter().map(|s| s.to_record(n)).collect(),
        }
    }

    pub fn from_cut_file(file: &CutFile) -> Result<Self> {
        let topology = Topology::new(file.kind, file.n)?;
        let members = file
            .stars
            .iter()
            .map(|r| Star::from_record(r, file.n))
            .collect::<Result<Vec<_>>>()?;
        Ok(StarFamily::new(topology, file.mode, file.m, members))
    }
}

/// Accumulates one member, recording any vertex listed twice.
struct MemberBuilder {
    center: Vertex,
    seen: Vec<Vertex>,
}

impl MemberBuilder {
    fn new(center: Vertex) -> Self {
        MemberBuilder {
            center,
            seen: vec![center],
        }
    }

    fn push(&mut self, v: Vertex) {
        self.seen.push(v);
    }

    /// `(y)^i` and `ȳ^i` for each `i`.
    fn pairs(&mut self, base: Vertex, dims: impl IntoIterator<Item = u32>) {
        for i in dims {
            self.push(base.flip(i));
            self.push(base.flip_low(i));
        }
    }

    fn finish(self, member: usize, collisions: &mut Vec<Collision>) -> Star {
        let mut sorted = self.seen.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                collisions.push(Collision {
                    member,
                    vertex: w[0].label(),
                });
            }
        }
        Star::new(self.center, self.seen.into_iter().filter(|&v| v != self.center))
    }
}

/// Reduces a dimension index into `1..=n`, with residue 0 mapped to `n`.
fn wrap(idx: u32, n: u32) -> u32 {
    (idx - 1) % n + 1
}

/// The `⌈(n+1)/2⌉`-member `K_{1,m}`-structure cut of `FQ_n` isolating `0…0`.
pub fn build_fq_cut(n: u32, m: usize) -> Result<StarFamily> {
    if n < 3 {
        return Err(Error::range("dimension", format!("folded-hypercube cut needs n >= 3, got {n}")));
    }
    let t = Topology::folded(n)?;
    if !(2..=n as usize + 1).contains(&m) {
        return Err(Error::range("leaf count", format!("folded-hypercube cut needs 2 <= m <= n+1 = {}, got {m}", n + 1)));
    }
    let m32 = m as u32;
    let u = Vertex(0);
    let ubar = t.complement(u);
    let mut collisions = Vec::new();
    let mut members = Vec::new();

    for i in 1..=n / 2 {
        let center = u.flip_all(&[2 * i - 1, 2 * i]);
        let mut b = MemberBuilder::new(center);
        b.push(u.flip(2 * i - 1));
        b.push(u.flip(2 * i));
        let extra = m32.min(n) - 2;
        for j in 1..=extra {
            b.push(center.flip(wrap(2 * i + j, n)));
        }
        if m32 == n + 1 {
            b.push(t.complement(center));
        }
        members.push(b.finish(members.len(), &mut collisions));
    }

    let last = if n % 2 == 1 {
        let center = ubar.flip(n);
        let mut b = MemberBuilder::new(center);
        b.push(u.flip(n));
        b.push(ubar);
        for j in 1..=m32 - 2 {
            b.push(center.flip(j));
        }
        b
    } else {
        let center = ubar.flip(1);
        let mut b = MemberBuilder::new(center);
        b.push(ubar);
        b.push(u.flip(1));
        for j in 2..=m32 - 1 {
            b.push(center.flip(j));
        }
        b
    };
    members.push(last.finish(members.len(), &mut collisions));

    Ok(StarFamily {
        topology: t,
        mode: Mode::Structure,
        m,
        members,
        collisions,
    })
}

/// The `⌈(n-1)/2⌉`-member `K_{1,m}`-structure cut of `AQ_n` isolating `0…0`.
///
/// Member `k` is centered at `ū^{2k}` (`ū^2` for the first), the last at
/// `ū^{n-1}` or `ū^n` by the parity of `n`.
pub fn build_aq_cut(n: u32, m: usize) -> Result<StarFamily> {
    if n < 4 {
        return Err(Error::range("dimension", format!("augmented-cube cut needs n >= 4, got {n}")));
    }
    let t = Topology::augmented(n)?;
    if !(4..=2 * n as usize - 2).contains(&m) {
        return Err(Error::range("leaf count", format!("augmented-cube cut needs 4 <= m <= 2n-2 = {}, got {m}", 2 * n - 2)));
    }
    let m = m as u32;
    let u = Vertex(0);
    let odd = m % 2 == 1;
    let count = (n - 1).div_ceil(2);
    let mut collisions = Vec::new();
    let mut members = Vec::new();

    for k in 1..=count {
        let b = if k == 1 {
            let c = u.flip_low(2);
            let mut b = MemberBuilder::new(c);
            b.push(u.flip(1));
            b.push(u.flip(2));
            b.push(u.flip(3));
            b.push(u.flip_low(3));
            if odd {
                b.push(c.flip(n));
                b.pairs(c, 4..=m.div_ceil(2));
            } else {
                b.pairs(c, 4..=(m + 2) / 2);
            }
            b
        } else if k == count {
            last_aq_member(u, n, m)
        } else {
            let c = u.flip_low(2 * k);
            let mut b = MemberBuilder::new(c);
            b.push(u.flip(2 * k));
            b.push(u.flip(2 * k + 1));
            b.push(u.flip_low(2 * k + 1));
            b.push(c.flip(1));
            if odd {
                b.push(c.flip(2 * k));
                if m + 4 * k <= 2 * n + 3 {
                    // 2k+2 ..= 2k+2+(m-7)/2, empty for m = 5
                    b.pairs(c, 2 * k + 2..2 * k + (m - 1) / 2);
                } else {
                    b.pairs(c, 2 * k + 2..=n);
                    b.pairs(c, 2..=(2 * k + (m - 1) / 2).saturating_sub(n));
                }
            } else if m + 4 * k <= 2 * n + 2 {
                // 2k+2 ..= 2k+2+(m-6)/2, empty for m = 4
                b.pairs(c, 2 * k + 2..2 * k + m / 2);
            } else {
                b.push(c.flip(2 * k - 1));
                b.push(c.flip(2 * k));
                b.pairs(c, 2 * k + 2..=n);
                b.pairs(c, 2..=(2 * k + m / 2).saturating_sub(n + 1));
            }
            b
        };
        members.push(b.finish(members.len(), &mut collisions));
    }

    Ok(StarFamily {
        topology: t,
        mode: Mode::Structure,
        m: m as usize,
        members,
        collisions,
    })
}

fn last_aq_member(u: Vertex, n: u32, m: u32) -> MemberBuilder {
    let odd = m % 2 == 1;
    if n % 2 == 1 {
        let c = u.flip_low(n - 1);
        let mut b = MemberBuilder::new(c);
        b.push(u.flip(n - 1));
        b.push(u.flip(n));
        b.push(u.flip_low(n));
        b.push(c.flip(1));
        if odd {
            b.push(c.flip(n - 1));
            b.pairs(c, 2..=(m - 3) / 2);
        } else if m >= 6 {
            b.push(c.flip(n - 2));
            b.push(c.flip(n - 1));
            b.pairs(c, 2..=m / 2 - 2);
        }
        b
    } else {
        let c = u.flip_low(n);
        let mut b = MemberBuilder::new(c);
        b.push(u.flip(n));
        b.push(c.flip(1));
        b.push(c.flip(n));
        b.push(c.flip(n - 1));
        if odd {
            b.push(c.flip(n - 2));
            b.pairs(c, 2..=(m - 3) / 2);
        } else {
            b.pairs(c, 2..=(m - 2) / 2);
        }
        b
    }
}
