//! Named exhaustive (or sampled) sweeps producing reproducible reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::analysis::connectivity::{is_bipartite, odd_girth, vertex_connectivity};
use crate::analysis::structure::{check_component_structure, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::starform::{
    best_from_overlaps, center_overlaps, classification_pairs, connected_subsets, find_forbidden_pattern,
    predicted_common_neighbors_aq, AqCase, Pattern, PatternEmbedding, Relative,
};
use crate::topology::{sorted_intersection, Kind, Topology, Vertex};

/// Counterexamples kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 10;
/// Odd girth is only computed up to this dimension.
const GIRTH_MAX_N: u32 = 10;

/// Inclusive dimension range, written `a..b` or `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: u32,
    pub hi: u32,
}

impl NRange {
    pub fn new(lo: u32, hi: u32) -> Self {
        NRange { lo, hi }
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for NRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let num = |x: &str| x.trim().parse::<u32>().map_err(|_| bad("expected an integer or a..b"));
        let r = match s.split_once("..") {
            Some((a, b)) => NRange::new(num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                NRange::new(v, v)
            }
        };
        if r.lo > r.hi {
            return Err(bad("empty range"));
        }
        Ok(r)
    }
}

impl Serialize for NRange {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    FqCommonNeighbors,
    AqCommonNeighborCap,
    AqClassification,
    ForbiddenT,
    ForbiddenH,
    FqStarBoundVertex,
    FqStarBoundSubgraph,
    AqStarBoundEdge,
    BipartiteOddGirth,
    ComponentStructure,
    Regularity,
    VertexConnectivity,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::FqCommonNeighbors,
        Suite::AqCommonNeighborCap,
        Suite::AqClassification,
        Suite::ForbiddenT,
        Suite::ForbiddenH,
        Suite::FqStarBoundVertex,
        Suite::FqStarBoundSubgraph,
        Suite::AqStarBoundEdge,
        Suite::BipartiteOddGirth,
        Suite::ComponentStructure,
        Suite::Regularity,
        Suite::VertexConnectivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FqCommonNeighbors => "fq-common-neighbors",
            Suite::AqCommonNeighborCap => "aq-common-neighbor-cap",
            Suite::AqClassification => "aq-classification",
            Suite::ForbiddenT => "forbidden-T",
            Suite::ForbiddenH => "forbidden-H",
            Suite::FqStarBoundVertex => "fq-star-bound-vertex",
            Suite::FqStarBoundSubgraph => "fq-star-bound-subgraph",
            Suite::AqStarBoundEdge => "aq-star-bound-edge",
            Suite::BipartiteOddGirth => "bipartite-odd-girth",
            Suite::ComponentStructure => "component-structure",
            Suite::Regularity => "regularity",
            Suite::VertexConnectivity => "vertex-connectivity",
        }
    }

    pub fn default_range(self) -> NRange {
        let (lo, hi) = match self {
            Suite::FqCommonNeighbors => (4, 8),
            Suite::AqCommonNeighborCap => (3, 8),
            Suite::AqClassification => (5, 8),
            Suite::ForbiddenT | Suite::ForbiddenH => (4, 7),
            Suite::FqStarBoundVertex => (5, 8),
            Suite::FqStarBoundSubgraph => (5, 7),
            Suite::AqStarBoundEdge => (5, 8),
            Suite::BipartiteOddGirth => (2, 12),
            Suite::ComponentStructure => (5, 6),
            Suite::Regularity => (1, 10),
            Suite::VertexConnectivity => (3, 6),
        };
        NRange::new(lo, hi)
    }

    /// Largest dimension accepted, to keep runs at desk scale.
    pub fn max_n(self) -> u32 {
        match self {
            Suite::ForbiddenT | Suite::ForbiddenH => 9,
            Suite::FqStarBoundSubgraph => 8,
            Suite::VertexConnectivity => 10,
            Suite::BipartiteOddGirth => 16,
            _ => 12,
        }
    }

    fn min_n(self) -> u32 {
        match self {
            Suite::FqCommonNeighbors
            | Suite::FqStarBoundVertex
            | Suite::FqStarBoundSubgraph
            | Suite::BipartiteOddGirth => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    /// `None` selects the suite's default range.
    pub n_range: Option<NRange>,
    /// Trials per sampler configuration.
    pub trials: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n_range: None,
            trials: 1000,
            seed: DEFAULT_SEED,
            exec: Exec::default(),
        }
    }
}

/// One summary-table line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub check: String,
    pub kind: Kind,
    pub n: u32,
    pub m: Option<usize>,
    pub mode: Option<String>,
    pub value: String,
    pub expected: String,
    pub pass: bool,
    /// Wall time; kept out of JSON so payloads stay reproducible.
    #[serde(skip)]
    pub millis: u128,
}

impl ReportRow {
    pub const CSV_HEADER: &'static str = "check,kind,n,m,mode,value,expected,pass,millis";

    pub fn to_csv(&self) -> String {
        let esc = |s: &str| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        format!(
            "{},{},{},{},{},{},{},{},{}",
            esc(&self.check),
            self.kind.tag(),
            self.n,
            self.m.map(|m| m.to_string()).unwrap_or_default(),
            esc(self.mode.as_deref().unwrap_or("")),
            esc(&self.value),
            esc(&self.expected),
            self.pass,
            self.millis
        )
    }

    /// Canonical order for emission.
    pub fn sort_key(&self) -> (String, Kind, u32, Option<usize>, Option<String>) {
        (self.check.clone(), self.kind, self.n, self.m, self.mode.clone())
    }
}

/// A failing instance with every label needed to replay it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub topology: String,
    pub description: String,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaReport {
    pub name: String,
    pub n_range: NRange,
    pub checks_performed: u64,
    pub pass: bool,
    pub counterexamples: Vec<Counterexample>,
    pub observations: BTreeMap<String, Value>,
    pub rows: Vec<ReportRow>,
}

struct Builder {
    report: LemmaReport,
}

impl Builder {
    fn new(suite: Suite, range: NRange) -> Self {
        Builder {
            report: LemmaReport {
                name: suite.name().to_string(),
                n_range: range,
                checks_performed: 0,
                pass: true,
                counterexamples: Vec::new(),
                observations: BTreeMap::new(),
                rows: Vec::new(),
            },
        }
    }

    fn fail(&mut self, t: &Topology, description: impl Into<String>, witness: Value) {
        self.report.pass = false;
        if self.report.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.report.counterexamples.push(Counterexample {
                topology: t.name(),
                description: description.into(),
                witness,
            });
        }
    }

    fn observe(&mut self, key: impl Into<String>, v: Value) {
        self.report.observations.insert(key.into(), v);
    }

    #[allow(clippy::too_many_arguments)]
    fn row(&mut self, check: &str, t: &Topology, m: Option<usize>, value: String, expected: String, pass: bool, start: Instant) {
        self.report.pass &= pass;
        self.report.rows.push(ReportRow {
            check: check.to_string(),
            kind: t.kind(),
            n: t.n(),
            m,
            mode: None,
            value,
            expected,
            pass,
            millis: start.elapsed().as_millis(),
        });
    }

    fn finish(self) -> LemmaReport {
        self.report
    }
}

fn labels(t: &Topology, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| t.format_vertex(v)).collect()
}

/// Per-vertex results merged in vertex order.
struct Sweep<T> {
    per_vertex: Vec<T>,
}

impl<T: Send> Sweep<T> {
    fn run(t: &Topology, exec: Exec, f: impl Fn(Vertex) -> T + Sync + Send) -> Self {
        Sweep {
            per_vertex: par::map_range(exec, 0..t.order(), |i| f(Vertex(i as u32))),
        }
    }
}

/// Runs `suite` over its dimension range.
pub fn run_lemma_suite(suite: Suite, params: &SuiteParams) -> Result<LemmaReport> {
    let range = params.n_range.unwrap_or_else(|| suite.default_range());
    if range.lo < suite.min_n() {
        return Err(Error::range(
            "dimension",
            format!("{suite} needs n >= {}, got {range}", suite.min_n()),
        ));
    }
    if range.hi > suite.max_n() {
        return Err(Error::Guard(format!("{suite} supports n <= {}, got {range}", suite.max_n())));
    }
    let mut b = Builder::new(suite, range);
    for n in range.iter() {
        match suite {
            Suite::FqCommonNeighbors => fq_common_neighbors(&mut b, n, params.exec)?,
            Suite::AqCommonNeighborCap => aq_common_neighbor_cap(&mut b, n, params.exec)?,
            Suite::AqClassification => aq_classification(&mut b, n, params.exec)?,
            Suite::ForbiddenT => forbidden(&mut b, n, Pattern::T, params.exec)?,
            Suite::ForbiddenH => forbidden(&mut b, n, Pattern::H, params.exec)?,
            Suite::FqStarBoundVertex => fq_star_bound_vertex(&mut b, n, params.exec)?,
            Suite::FqStarBoundSubgraph => fq_star_bound_subgraph(&mut b, n, params.exec)?,
            Suite::AqStarBoundEdge => aq_star_bound_edge(&mut b, n, params.exec)?,
            Suite::BipartiteOddGirth => bipartite_odd_girth(&mut b, n)?,
            Suite::ComponentStructure => component_structure(&mut b, n, params)?,
            Suite::Regularity => regularity(&mut b, n, params.exec)?,
            Suite::VertexConnectivity => connectivity(&mut b, n)?,
        }
    }
    Ok(b.finish())
}

/// Histogram of `|N(u) ∩ N(v)|` over unordered pairs, plus pairs outside `allowed`.
fn common_neighbor_sizes(
    t: &Topology,
    exec: Exec,
    allowed: impl Fn(usize) -> bool + Sync,
) -> (BTreeMap<usize, u64>, Vec<(Vertex, Vertex, Vec<Vertex>)>, u64) {
    let nbrs: Vec<Vec<Vertex>> = t.vertices().map(|v| t.neighbors_of(v)).collect();
    let sweep = Sweep::run(t, exec, |u| {
        let mut hist = BTreeMap::new();
        let mut bad = Vec::new();
        for w in u.index() + 1..t.order() {
            let common = sorted_intersection(&nbrs[u.index()], &nbrs[w]);
            *hist.entry(common.len()).or_insert(0u64) += 1;
            if !allowed(common.len()) {
                bad.push((u, Vertex(w as u32), common));
            }
        }
        (hist, bad)
    });
    let mut hist = BTreeMap::new();
    let mut bad = Vec::new();
    for (h, b) in sweep.per_vertex {
        for (k, c) in h {
            *hist.entry(k).or_insert(0) += c;
        }
        bad.extend(b);
    }
    let pairs = (t.order() * (t.order() - 1) / 2) as u64;
    (hist, bad, pairs)
}

fn fq_common_neighbors(b: &mut Builder, n: u32, exec: Exec) -> Result<()> {
    let start = Instant::now();
    let t = Topology::folded(n)?;
    let (hist, bad, pairs) = common_neighbor_sizes(&t, exec, |s| s == 0 || s == 2);
    b.report.checks_performed += pairs;
    for (u, w, c) in bad.iter().take(MAX_COUNTEREXAMPLES) {
        b.fail(
            &t,
            format!("{} common neighbors", c.len()),
            json!({"u": t.format_vertex(*u), "v": t.format_vertex(*w), "common": labels(&t, c)}),
        );
    }
    b.observe(format!("n={n}/size-histogram"), json!(hist));
    let sizes: Vec<usize> = hist.keys().copied().collect();
    b.row("fq-common-neighbors", &t, None, format!("{sizes:?}"), "{0,2}".into(), bad.is_empty(), start);
    Ok(())
}

fn aq_common_neighbor_cap(b: &mut Builder, n: u32, exec: Exec) -> Result<()> {
    let start = Instant::now();
    let t = Topology::augmented(n)?;
    let (hist, bad, pairs) = common_neighbor_sizes(&t, exec, |s| s <= 4);
    b.report.checks_performed += pairs;
    for (u, w, c) in bad.iter().take(MAX_COUNTEREXAMPLES) {
        b.fail(
            &t,
            format!("{} common neighbors exceeds 4", c.len()),
            json!({"u": t.format_vertex(*u), "v": t.format_vertex(*w), "common": labels(&t, c)}),
        );
    }
    b.observe(format!("n={n}/size-histogram"), json!(hist));
    let max = hist.keys().max().copied().unwrap_or(0);
    b.row("aq-common-neighbor-cap", &t, None, max.to_string(), "<=4".into(), bad.is_empty(), start);

    if n >= 4 {
        // two vertices of one half sharing a neighbor in the other half
        let start = Instant::now();
        let top = 1u32 << (n - 1);
        let sweep = Sweep::run(&t, exec, |u| {
            let mut bad = Vec::new();
            let mut checks = 0u64;
            for w in t.vertices().filter(|&w| w > u && (w.0 & top) == (u.0 & top)) {
                checks += 1;
                let across: Vec<Vertex> = sorted_intersection(&t.neighbors_of(u), &t.neighbors_of(w))
                    .into_iter()
                    .filter(|c| (c.0 & top) != (u.0 & top))
                    .collect();
                if across.is_empty() {
                    continue;
                }
                let mut expect = vec![u.flip(n), u.flip_low(n)];
                expect.sort_unstable();
                if w != u.flip_low(n - 1) || across != expect {
                    bad.push((u, w, across));
                }
            }
            (checks, bad)
        });
        let mut failures = 0;
        for (checks, bad) in sweep.per_vertex {
            b.report.checks_performed += checks;
            for (u, w, across) in bad {
                failures += 1;
                b.fail(
                    &t,
                    "same-half pair with unexpected cross neighbors",
                    json!({"u": t.format_vertex(u), "w": t.format_vertex(w), "cross_common": labels(&t, &across)}),
                );
            }
        }
        b.row(
            "aq-half-common-neighbors",
            &t,
            None,
            format!("{failures} mismatches"),
            "0 mismatches".into(),
            failures == 0,
            start,
        );
    }
    Ok(())
}

fn aq_classification(b: &mut Builder, n: u32, exec: Exec) -> Result<()> {
    let start = Instant::now();
    let t = Topology::augmented(n)?;
    let pairs = classification_pairs(n);
    let sweep = Sweep::run(&t, exec, |u| {
        let mut fires: BTreeMap<AqCase, u64> = BTreeMap::new();
        let mut bad = Vec::new();
        for &(ra, rb) in &pairs {
            let (a, c) = (ra.resolve(u), rb.resolve(u));
            let actual = t.common_neighbors(a, c).unwrap_or_default();
            match predicted_common_neighbors_aq(&t, u, ra, rb) {
                Ok(p) => {
                    *fires.entry(p.case).or_insert(0) += 1;
                    let four_ok = (actual.len() == 4) == p.case.predicts_four();
                    if p.set != actual || !four_ok {
                        bad.push((u, ra, rb, Some(p.case), p.set, actual));
                    }
                }
                Err(_) => bad.push((u, ra, rb, None, Vec::new(), actual)),
            }
        }
        (fires, bad)
    });
    let mut fires: BTreeMap<AqCase, u64> = BTreeMap::new();
    let mut mismatches = 0u64;
    let informational = n < 5;
    for (f, bad) in sweep.per_vertex {
        for (k, c) in f {
            *fires.entry(k).or_insert(0) += c;
        }
        for (u, ra, rb, case, predicted, actual) in bad {
            mismatches += 1;
            let witness = json!({
                "u": t.format_vertex(u),
                "a": rel_name(ra), "b": rel_name(rb),
                "case": case.map(AqCase::name),
                "predicted": labels(&t, &predicted),
                "actual": labels(&t, &actual),
            });
            if informational {
                let key = format!("n={n}/informational-mismatches");
                let e = b.report.observations.entry(key).or_insert_with(|| json!([]));
                if let Some(arr) = e.as_array_mut() {
                    if arr.len() < MAX_COUNTEREXAMPLES {
                        arr.push(witness);
                    }
                }
            } else {
                b.fail(&t, "prediction differs from brute-force intersection", witness);
            }
        }
    }
    b.report.checks_performed += (pairs.len() * t.order()) as u64;
    let fire_counts: BTreeMap<&str, u64> = fires.iter().map(|(k, v)| (k.name(), *v)).collect();
    b.observe(format!("n={n}/fire-counts"), json!(fire_counts));
    b.row(
        "aq-classification",
        &t,
        None,
        format!("{mismatches} mismatches"),
        "0 mismatches".into(),
        informational || mismatches == 0,
        start,
    );
    Ok(())
}

fn rel_name(r: Relative) -> String {
    match r {
        Relative::Base => "u".into(),
        Relative::Hypercube(i) => format!("u^{i}"),
        Relative::Complement(i) => format!("ū^{i}"),
    }
}

fn embedding_json(t: &Topology, e: &PatternEmbedding) -> Value {
    let roles: BTreeMap<String, String> = e
        .roles()
        .into_iter()
        .map(|(role, v)| (role, t.format_vertex(Vertex(v as u32))))
        .collect();
    json!(roles)
}

fn forbidden(b: &mut Builder, n: u32, pattern: Pattern, exec: Exec) -> Result<()> {
    let start = Instant::now();
    let t = Topology::augmented(n)?;
    let found = find_forbidden_pattern(&t, pattern, exec);
    b.report.checks_performed += (t.order() * t.degree()) as u64;
    let check = format!("forbidden-{pattern}");
    if let Some(e) = &found {
        b.fail(&t, format!("{pattern} embeds"), embedding_json(&t, e));
    }
    b.row(
        &check,
        &t,
        None,
        if found.is_some() { "embedding" } else { "none" }.into(),
        "none".into(),
        found.is_none(),
        start,
    );
    Ok(())
}

fn fq_star_bound_vertex(b: &mut Builder, n: u32, exec: Exec) -> Result<()> {
    let start = Instant::now();
    let t = Topology::folded(n)?;
    let max_m = t.degree();
    let sweep = Sweep::run(&t, exec, |u| {
        let overlaps = center_overlaps(&t, &[u]);
        let per_m: Vec<(usize, Option<u32>)> = (1..=max_m)
            .map(|m| {
                let best = best_from_overlaps(&overlaps, m);
                (best.max.max(best.max_at_most_m), best.center)
            })
            .collect();
        // a center adjacent to u may not also see a leaf adjacent to u
        let mixed = overlaps.iter().find(|o| o.center_hit && o.leaf_hits > 0).map(|o| o.center);
        (u, per_m, mixed)
    });
    let mut max_seen = vec![0usize; max_m + 1];
    for (u, per_m, mixed) in sweep.per_vertex {
        for (i, (value, center)) in per_m.into_iter().enumerate() {
            let m = i + 1;
            b.report.checks_performed += 1;
            max_seen[m] = max_seen[m].max(value);
            if value > 2 {
                b.fail(
                    &t,
                    format!("star with {m} leaves covers {value} neighbors"),
                    json!({"u": t.format_vertex(u), "m": m, "center": center.map(|c| t.format_vertex(Vertex(c)))}),
                );
            }
        }
        if let Some(x) = mixed {
            b.fail(
                &t,
                "center adjacent to u shares a neighbor with u",
                json!({"u": t.format_vertex(u), "center": t.format_vertex(x)}),
            );
        }
    }
    for m in 1..=max_m {
        b.row(
            "fq-star-bound-vertex",
            &t,
            Some(m),
            max_seen[m].to_string(),
            "<=2".into(),
            max_seen[m] <= 2,
            start,
        );
    }
    Ok(())
}

fn fq_star_bound_subgraph(b: &mut Builder, n: u32, exec: Exec) -> Result<()> {
    let t = Topology::folded(n)?;
    let m = t.degree();
    for k in 2..=4usize {
        let start = Instant::now();
        let subsets = connected_subsets(&t, k);
        let limit = 2 * (k - 1);
        let results = par::map_slice(exec, &subsets, |c| {
            let best = best_from_overlaps(&center_overlaps(&t, c), m);
            let best = (best.max_at_most_m, best.center);
            let is_star = c.iter().any(|&h| c.iter().all(|&o| o == h || t.is_adjacent(h, o)));
            (best.0, best.1, is_star)
        });
        let mut max_seen = 0;
        let mut equal_cases = 0u64;
        let mut failures = 0u64;
        for (c, (value, center, is_star)) in subsets.iter().zip(results) {
            max_seen = max_seen.max(value);
            if value == limit {
                equal_cases += 1;
            }
            if value > limit || (value == limit && !is_star) {
                failures += 1;
                b.fail(
                    &t,
                    format!("connected set of {k} vertices reaches {value} (limit {limit}, star: {is_star})"),
                    json!({"set": labels(&t, c), "center": center.map(|x| t.format_vertex(Vertex(x)))}),
                );
            }
        }
        b.report.checks_performed += subsets.len() as u64;
        b.observe(format!("n={n}/k={k}/subsets"), json!(subsets.len()));
        b.observe(format!("n={n}/k={k}/attaining-limit"), json!(equal_cases));
        b.row(
            &format!("fq-star-bound-subgraph:k={k}"),
            &t,
            Some(m),
            max_seen.to_string(),
            format!("<={limit}"),
            failures == 0,
            start,
        );
    }
    Ok(())
}

/// The explicit seven-vertex overlap for `2 <= i <= n-2` around `x = 0…0`:
/// returns `(u, v, star vertices, overlap)`.
pub fn sharp_edge_example(t: &Topology, i: u32) -> (Vertex, Vertex, Vec<Vertex>, usize) {
    let x = Vertex(0);
    let v = x.flip_low(i);
    let u = v.flip_low(i + 2);
    let star = vec![
        x,
        x.flip(i),
        x.flip(i + 1),
        x.flip_low(i + 1),
        x.flip_low(i - 1),
        x.flip(i + 2),
        x.flip_low(i + 2),
    ];
    let mut nb: Vec<Vertex> = t.neighbors_of(u).into_iter().chain(t.neighbors_of(v)).collect();
    nb.sort_unstable();
    nb.dedup();
    let overlap = star.iter().filter(|&&s| s != u && s != v && nb.contains(&s)).count();
    (u, v, star, overlap)
}

fn aq_star_bound_edge(b: &mut Builder, n: u32, exec: Exec) -> Result<()> {
    let start = Instant::now();
    let t = Topology::augmented(n)?;
    let max_m = t.degree();
    let sweep = Sweep::run(&t, exec, |u| {
        let mut out = Vec::new();
        for v in t.neighbors_of(u).into_iter().filter(|&v| v > u) {
            let overlaps = center_overlaps(&t, &[u, v]);
            let per_m: Vec<(usize, usize, Option<u32>)> = (1..=max_m)
                .map(|m| {
                    let best = best_from_overlaps(&overlaps, m);
                    (best.max, best.max_at_most_m, best.center)
                })
                .collect();
            out.push((u, v, per_m));
        }
        out
    });
    let mut exact_seen = vec![0usize; max_m + 1];
    let mut at_most_seen = vec![0usize; max_m + 1];
    for (u, v, per_m) in sweep.per_vertex.into_iter().flatten() {
        for (idx, (exact, at_most, center)) in per_m.into_iter().enumerate() {
            let m = idx + 1;
            b.report.checks_performed += 1;
            exact_seen[m] = exact_seen[m].max(exact);
            at_most_seen[m] = at_most_seen[m].max(at_most);
            if at_most > 7 {
                b.fail(
                    &t,
                    format!("star with at most {m} leaves covers {at_most} vertices of N(u,v)"),
                    json!({"u": t.format_vertex(u), "v": t.format_vertex(v), "m": m,
                           "center": center.map(|c| t.format_vertex(Vertex(c)))}),
                );
            }
        }
    }
    let attaining: Vec<usize> = (1..=max_m).filter(|&m| exact_seen[m] == 7).collect();
    b.observe(format!("n={n}/exact-m-attaining-7"), json!(attaining));
    for m in 1..=max_m {
        // seven needs six leaves; with all 2n-1 leaves the center must avoid u and v
        let sharp_needed = (6..max_m).contains(&m);
        let pass = at_most_seen[m] <= 7 && (!sharp_needed || exact_seen[m] == 7);
        let expected = if sharp_needed { "=7" } else { "<=7" };
        let value = format!("{} (at most m leaves: {})", exact_seen[m], at_most_seen[m]);
        b.row("aq-star-bound-edge", &t, Some(m), value, expected.into(), pass, start);
    }

    for i in 2..=n.saturating_sub(2) {
        let start = Instant::now();
        let (u, v, star, overlap) = sharp_edge_example(&t, i);
        let center = star[0];
        let valid = t.is_adjacent(u, v)
            && star[1..].iter().all(|&l| t.is_adjacent(center, l))
            && !star.contains(&u)
            && !star.contains(&v)
            && {
                let mut s = star.clone();
                s.sort_unstable();
                s.dedup();
                s.len() == 7
            };
        b.report.checks_performed += 1;
        let pass = valid && overlap == 7;
        if !pass {
            b.fail(
                &t,
                format!("explicit sharpness star for i={i} is invalid or covers {overlap}"),
                json!({"u": t.format_vertex(u), "v": t.format_vertex(v), "star": labels(&t, &star)}),
            );
        }
        b.row(
            &format!("aq-star-bound-edge:sharp-i={i}"),
            &t,
            Some(6),
            overlap.to_string(),
            "=7".into(),
            pass,
            start,
        );
    }
    Ok(())
}

fn bipartite_odd_girth(b: &mut Builder, n: u32) -> Result<()> {
    let start = Instant::now();
    let t = Topology::folded(n)?;
    let bip = is_bipartite(&t);
    b.report.checks_performed += 1;
    let pass = bip == (n % 2 == 1);
    if !pass {
        b.fail(&t, format!("bipartite = {bip}"), json!({"n": n}));
    }
    b.row(
        "fq-bipartite",
        &t,
        None,
        bip.to_string(),
        (n % 2 == 1).to_string(),
        pass,
        start,
    );
    if n.is_multiple_of(2) {
        if n > GIRTH_MAX_N {
            b.observe(format!("n={n}/odd-girth"), json!("skipped"));
            return Ok(());
        }
        let start = Instant::now();
        let girth = odd_girth(&t);
        b.report.checks_performed += 1;
        b.observe(format!("n={n}/odd-girth"), json!(girth));
        let pass = girth == Some(n as usize + 1);
        if !pass {
            b.fail(&t, format!("odd girth {girth:?}"), json!({"n": n}));
        }
        b.row(
            "fq-odd-girth",
            &t,
            None,
            girth.map_or("none".into(), |g| g.to_string()),
            (n + 1).to_string(),
            pass,
            start,
        );
    }
    Ok(())
}

fn component_structure(b: &mut Builder, n: u32, params: &SuiteParams) -> Result<()> {
    for kind in Kind::ALL {
        let start = Instant::now();
        let t = Topology::new(kind, n)?;
        let rep = check_component_structure(&t, params.trials, params.seed, params.exec);
        b.observe(format!("{}/applicable", t.name()), json!(rep.applicable));
        for w in &rep.witnesses {
            b.fail(&t, format!("shape violated at k={}", w.k), serde_json::to_value(w).unwrap_or(Value::Null));
        }
        for c in &rep.configs {
            b.report.checks_performed += c.trials as u64;
            b.observe(
                format!("{}/k={}/max-small-total", t.name(), c.config.k),
                json!(c.max_small_total),
            );
            b.row(
                &format!("component-structure:k={}", c.config.k),
                &t,
                None,
                format!("{} violations in {} trials", c.violations, c.trials),
                format!("0 violations, |S|={}, slack {}", c.config.set_size, c.config.slack),
                c.violations == 0,
                start,
            );
        }
    }
    Ok(())
}

fn regularity(b: &mut Builder, n: u32, exec: Exec) -> Result<()> {
    for kind in Kind::ALL {
        let Ok(t) = Topology::new(kind, n) else {
            continue;
        };
        let start = Instant::now();
        let sweep = Sweep::run(&t, exec, |u| {
            let nb = t.neighbors_of(u);
            let mut problems = Vec::new();
            if nb.len() != t.degree() {
                problems.push(format!("degree {}", nb.len()));
            }
            if t.is_adjacent(u, u) {
                problems.push("loop".to_string());
            }
            for w in t.vertices() {
                if t.is_adjacent(u, w) != t.is_adjacent(w, u) {
                    problems.push(format!("asymmetric with {}", t.format_vertex(w)));
                    break;
                }
                if t.is_adjacent(u, w) != nb.binary_search(&w).is_ok() {
                    problems.push(format!("neighbor list disagrees at {}", t.format_vertex(w)));
                    break;
                }
            }
            (u, problems)
        });
        let mut failures = 0;
        for (u, problems) in sweep.per_vertex {
            for p in problems {
                failures += 1;
                b.fail(&t, p, json!({"u": t.format_vertex(u)}));
            }
        }
        b.report.checks_performed += (t.order() * t.order()) as u64;
        b.row(
            "regularity",
            &t,
            None,
            format!("{failures} problems"),
            format!("{}-regular, symmetric, loopless", t.degree()),
            failures == 0,
            start,
        );
    }
    Ok(())
}

fn connectivity(b: &mut Builder, n: u32) -> Result<()> {
    for kind in Kind::ALL {
        let Ok(t) = Topology::new(kind, n) else {
            continue;
        };
        if kind == Kind::AugmentedCube && n == 3 {
            b.observe("AQ_3/vertex-connectivity", json!(vertex_connectivity(&t)?));
            continue;
        }
        let start = Instant::now();
        let value = vertex_connectivity(&t)?;
        b.report.checks_performed += 1;
        let pass = value == t.degree();
        if !pass {
            b.fail(&t, format!("connectivity {value}"), json!({"n": n}));
        }
        b.row("vertex-connectivity", &t, None, value.to_string(), t.degree().to_string(), pass, start);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(range: &str) -> SuiteParams {
        SuiteParams {
            n_range: Some(range.parse().unwrap()),
            trials: 50,
            ..Default::default()
        }
    }

    #[test]
    fn range_syntax() {
        assert_eq!("5..10".parse::<NRange>().unwrap(), NRange::new(5, 10));
        assert_eq!("6".parse::<NRange>().unwrap(), NRange::new(6, 6));
        assert_eq!("3..=4".parse::<NRange>().unwrap(), NRange::new(3, 4));
        assert!("7..5".parse::<NRange>().is_err());
        assert!("x".parse::<NRange>().is_err());
        assert_eq!(NRange::new(2, 3).to_string(), "2..3");
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("nope".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn classification_at_five() {
        let r = run_lemma_suite(Suite::AqClassification, &small("5")).unwrap();
        assert!(r.pass, "{:?}", r.counterexamples);
        assert!(r.counterexamples.is_empty());
        assert!(r.observations.contains_key("n=5/fire-counts"));
    }

    #[test]
    fn odd_girth_recorded() {
        let r = run_lemma_suite(Suite::BipartiteOddGirth, &small("4")).unwrap();
        assert!(r.pass);
        assert_eq!(r.observations["n=4/odd-girth"], json!(5));
    }

    #[test]
    fn sharp_example_covers_seven() {
        let t = Topology::augmented(6).unwrap();
        let (u, v, _, overlap) = sharp_edge_example(&t, 2);
        assert_eq!(t.format_vertex(u), "001100");
        assert_eq!(t.format_vertex(v), "000011");
        assert_eq!(overlap, 7);
    }

    #[test]
    fn guards_and_ranges() {
        assert!(run_lemma_suite(Suite::ForbiddenT, &small("10")).unwrap_err().is_guard());
        assert!(run_lemma_suite(Suite::FqCommonNeighbors, &small("1..3")).is_err());
    }

    #[test]
    fn quick_suites_pass() {
        for (s, r) in [
            (Suite::FqCommonNeighbors, "4..5"),
            (Suite::AqCommonNeighborCap, "3..5"),
            (Suite::FqStarBoundVertex, "5"),
            (Suite::AqStarBoundEdge, "5"),
            (Suite::Regularity, "1..4"),
            (Suite::VertexConnectivity, "2..4"),
            (Suite::ComponentStructure, "5"),
        ] {
            let rep = run_lemma_suite(s, &small(r)).unwrap();
            assert!(rep.pass, "{s}: {:?}", rep.counterexamples);
            assert!(rep.checks_performed > 0);
            assert!(!rep.rows.is_empty());
        }
    }

    #[test]
    fn csv_row_format() {
        let row = ReportRow {
            check: "x".into(),
            kind: Kind::FoldedHypercube,
            n: 5,
            m: Some(2),
            mode: None,
            value: "[0, 2]".into(),
            expected: "{0,2}".into(),
            pass: true,
            millis: 3,
        };
        assert_eq!(row.to_csv(), "x,fq,5,2,,\"[0, 2]\",\"{0,2}\",true,3");
    }
}
