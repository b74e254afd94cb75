//! Exhaustive minimum `K_{1,m}`-(sub)structure cut search on small instances.

use serde::Serialize;

use crate::cuts::{CutFile, Mode, StarFamily};
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::starform::{enumerate_stars, Star};
use crate::topology::{Kind, Topology};

/// Largest dimension searched without `force`.
pub const DEFAULT_GUARD_N: u32 = 4;
/// Hard ceiling: vertex sets are `u64` bitmasks.
pub const MAX_ORACLE_N: u32 = 6;

#[derive(Clone, Copy, Debug, Default)]
pub struct OracleOptions {
    /// Allow `n > DEFAULT_GUARD_N`.
    pub force: bool,
    /// Reject families whose members share a vertex.
    pub strict_disjoint: bool,
    pub exec: Exec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub kind: Kind,
    pub n: u32,
    pub mode: Mode,
    pub m: usize,
    pub found_cut: Option<CutFile>,
    /// Set only when a cut of this size was found and every smaller size was exhausted.
    pub exact_value: Option<usize>,
    pub search_ceiling: usize,
    pub families_examined: u64,
    /// Distinct member vertex sets in the candidate pool.
    pub pool_size: usize,
    pub strict_disjoint: bool,
}

/// Rough count of families the search may visit, for guard messages.
pub fn search_cost(pool: usize, max_size: usize) -> u128 {
    (1..=max_size).map(|s| binom(pool as u128, s as u128)).sum()
}

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Position of `combo` among all `combo.len()`-subsets of `0..pool` in lexicographic order.
fn lex_rank(combo: &[usize], pool: usize) -> u128 {
    let s = combo.len();
    let mut rank = 0u128;
    let mut prev: Option<usize> = None;
    for (t, &c) in combo.iter().enumerate() {
        let start = prev.map_or(0, |p| p + 1);
        for x in start..c {
            rank += binom((pool - 1 - x) as u128, (s - 1 - t) as u128);
        }
        prev = Some(c);
    }
    rank
}

struct MaskGraph {
    nb: Vec<u64>,
    full: u64,
}

impl MaskGraph {
    fn new(t: &Topology) -> Self {
        let nb = t
            .vertices()
            .map(|v| t.neighbors_of(v).iter().fold(0u64, |m, w| m | 1u64 << w.0))
            .collect();
        let full = if t.order() == 64 { u64::MAX } else { (1u64 << t.order()) - 1 };
        MaskGraph { nb, full }
    }

    /// Disconnected or a single vertex once `removed` is deleted.
    fn is_cut(&self, removed: u64) -> bool {
        let rest = self.full & !removed;
        match rest.count_ones() {
            0 => return false,
            1 => return true,
            _ => {}
        }
        let mut seen = rest & rest.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.nb[v];
            }
            next &= rest & !seen;
            seen |= next;
            frontier = next;
        }
        seen != rest
    }
}

fn star_mask(s: &Star) -> u64 {
    s.vertices().fold(0u64, |m, v| m | 1u64 << v.0)
}

/// Lexicographically first `size`-combination starting at `first` whose union is a cut.
fn first_cut_from(
    g: &MaskGraph,
    masks: &[u64],
    size: usize,
    first: usize,
    strict: bool,
) -> Option<Vec<usize>> {
    fn go(
        g: &MaskGraph,
        masks: &[u64],
        size: usize,
        strict: bool,
        chosen: &mut Vec<usize>,
        acc: u64,
    ) -> bool {
        if chosen.len() == size {
            return g.is_cut(acc);
        }
        let next_start = chosen.last().map_or(0, |&c| c + 1);
        let need = size - chosen.len();
        for i in next_start..masks.len().saturating_sub(need - 1) {
            if strict && acc & masks[i] != 0 {
                continue;
            }
            chosen.push(i);
            if go(g, masks, size, strict, chosen, acc | masks[i]) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    if first + size > masks.len() {
        return None;
    }
    let mut chosen = vec![first];
    go(g, masks, size, strict, &mut chosen, masks[first]).then_some(chosen)
}

/// Smallest family of stars (exactly `m` leaves) or sub-stars (`<= m` leaves)
/// whose removal disconnects `t` or leaves one vertex, searching sizes
/// `1..=max_size` in order. Members may overlap unless `strict_disjoint`.
pub fn brute_min_star_cut(
    t: &Topology,
    m: usize,
    mode: Mode,
    max_size: usize,
    opts: OracleOptions,
) -> Result<OracleResult> {
    if t.n() > MAX_ORACLE_N {
        return Err(Error::Guard(format!(
            "brute-force search supports n <= {MAX_ORACLE_N}, got {}",
            t.n()
        )));
    }
    let pool = enumerate_stars(t, m, mode == Mode::Substructure);
    // one representative per vertex set, first in enumeration order
    let mut seen = std::collections::HashSet::new();
    let stars: Vec<Star> = pool
        .stars
        .into_iter()
        .filter(|s| seen.insert(star_mask(s)))
        .collect();
    if t.n() > DEFAULT_GUARD_N && !opts.force {
        return Err(Error::Guard(format!(
            "refusing n = {} > {DEFAULT_GUARD_N} without force; up to {} families",
            t.n(),
            search_cost(stars.len(), max_size)
        )));
    }
    let masks: Vec<u64> = stars.iter().map(star_mask).collect();
    let g = MaskGraph::new(t);

    let mut examined: u128 = 0;
    for size in 1..=max_size {
        let hit = par::find_first(opts.exec, 0..masks.len(), |first| {
            first_cut_from(&g, &masks, size, first, opts.strict_disjoint)
        });
        match hit {
            Some(combo) => {
                examined += lex_rank(&combo, masks.len()) + 1;
                let members = combo.iter().map(|&i| stars[i].clone()).collect();
                let fam = StarFamily::new(*t, mode, m, members);
                return Ok(OracleResult {
                    kind: t.kind(),
                    n: t.n(),
                    mode,
                    m,
                    found_cut: Some(fam.to_cut_file()),
                    exact_value: Some(size),
                    search_ceiling: max_size,
                    families_examined: examined.min(u64::MAX as u128) as u64,
                    pool_size: masks.len(),
                    strict_disjoint: opts.strict_disjoint,
                });
            }
            None => examined += binom(masks.len() as u128, size as u128),
        }
    }
    Ok(OracleResult {
        kind: t.kind(),
        n: t.n(),
        mode,
        m,
        found_cut: None,
        exact_value: None,
        search_ceiling: max_size,
        families_examined: examined.min(u64::MAX as u128) as u64,
        pool_size: masks.len(),
        strict_disjoint: opts.strict_disjoint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::components::verify_cut;
    use itertools::Itertools;

    #[test]
    fn rank_matches_enumeration() {
        for (i, c) in (0..7).combinations(3).enumerate() {
            assert_eq!(lex_rank(&c, 7), i as u128);
        }
        assert_eq!(binom(968, 2), 468_028);
    }

    #[test]
    fn mask_cut_matches_traversal() {
        let t = Topology::augmented(3).unwrap();
        let g = MaskGraph::new(&t);
        for removed in 0u64..256 {
            let vs: Vec<_> = (0..8).filter(|b| removed >> b & 1 == 1).map(crate::topology::Vertex).collect();
            let expect = crate::analysis::components::remove_and_components(&t, &vs).is_cut;
            assert_eq!(g.is_cut(removed), expect, "{removed:08b}");
        }
    }

    #[test]
    fn empty_search() {
        let q3 = Topology::hypercube(3).unwrap();
        let r = brute_min_star_cut(&q3, 2, Mode::Structure, 0, OracleOptions::default()).unwrap();
        assert_eq!(r.found_cut, None);
        assert_eq!(r.exact_value, None);
        assert_eq!(r.search_ceiling, 0);
        assert_eq!(r.families_examined, 0);
    }

    #[test]
    fn small_hypercube_value_and_witness() {
        let q4 = Topology::hypercube(4).unwrap();
        let r = brute_min_star_cut(&q4, 2, Mode::Structure, 3, OracleOptions::default()).unwrap();
        assert_eq!(r.exact_value, Some(2));
        let fam = StarFamily::from_cut_file(r.found_cut.as_ref().unwrap()).unwrap();
        assert!(verify_cut(&fam).is_cut);
    }

    #[test]
    fn guard() {
        let fq5 = Topology::folded(5).unwrap();
        let e = brute_min_star_cut(&fq5, 2, Mode::Structure, 2, OracleOptions::default()).unwrap_err();
        assert!(matches!(e, Error::Guard(_)));
        let fq7 = Topology::folded(7).unwrap();
        let opts = OracleOptions { force: true, ..Default::default() };
        assert!(brute_min_star_cut(&fq7, 2, Mode::Structure, 1, opts).is_err());
    }

    #[test]
    fn parallel_matches_sequential() {
        let aq4 = Topology::augmented(4).unwrap();
        let seq = OracleOptions { exec: Exec::Sequential, ..Default::default() };
        let par = OracleOptions { exec: Exec::Parallel, ..Default::default() };
        for m in 1..=3 {
            assert_eq!(
                brute_min_star_cut(&aq4, m, Mode::Structure, 4, seq).unwrap(),
                brute_min_star_cut(&aq4, m, Mode::Structure, 4, par).unwrap()
            );
        }
    }
}
