use std::collections::VecDeque;

use serde::Serialize;

use crate::cuts::{Mode, StarFamily};
use crate::starform::{induced_exact, is_star_subgraph};
use crate::topology::{Topology, Vertex};

/// Connected components of `t - removed`, each sorted, ordered by smallest label.
pub fn components_after_removal(t: &Topology, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
    let order = t.order();
    let mut blocked = vec![false; order];
    for &r in removed {
        if t.contains(r) {
            blocked[r.index()] = true;
        }
    }
    let mut comps = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..order {
        if blocked[start] {
            continue;
        }
        blocked[start] = true;
        queue.push_back(Vertex(start as u32));
        let mut comp = Vec::new();
        while let Some(a) = queue.pop_front() {
            comp.push(a);
            for b in t.neighbors_of(a) {
                if !blocked[b.index()] {
                    blocked[b.index()] = true;
                    queue.push_back(b);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Per-member validity of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberDiagnostic {
    pub index: usize,
    pub center: String,
    pub leaf_count: usize,
    pub valid: bool,
    pub induced_exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub problem: Option<String>,
}

/// Two members sharing vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub members: (usize, usize),
    pub shared: Vec<String>,
}

/// Outcome of removing a vertex set (and, for families, of member validation).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutVerdict {
    pub is_cut: bool,
    pub component_count: usize,
    /// Descending.
    pub component_sizes: Vec<usize>,
    pub isolated_vertices: Vec<String>,
    pub removed_count: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub member_diagnostics: Vec<MemberDiagnostic>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub overlaps: Vec<Overlap>,
    /// Index of the first invalid member, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invalid_member: Option<usize>,
}

impl CutVerdict {
    /// Order of the smallest remaining component.
    pub fn smallest_component(&self) -> Option<usize> {
        self.component_sizes.last().copied()
    }
}

/// Exact component decomposition of `t - removed`.
pub fn remove_and_components(t: &Topology, removed: &[Vertex]) -> CutVerdict {
    let mut uniq: Vec<Vertex> = removed.iter().copied().filter(|&v| t.contains(v)).collect();
    uniq.sort_unstable();
    uniq.dedup();
    let comps = components_after_removal(t, &uniq);
    let remaining: usize = comps.iter().map(Vec::len).sum();
    let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let isolated = comps
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| t.format_vertex(c[0]))
        .collect();
    CutVerdict {
        is_cut: comps.len() >= 2 || remaining == 1,
        component_count: comps.len(),
        component_sizes: sizes,
        isolated_vertices: isolated,
        removed_count: uniq.len(),
        member_diagnostics: Vec::new(),
        overlaps: Vec::new(),
        invalid_member: None,
    }
}

/// Validates every member, then removes the union of member vertices.
///
/// Overlapping members are permitted and reported. Any invalid member forces
/// `is_cut = false`.
pub fn verify_cut(fam: &StarFamily) -> CutVerdict {
    let t = &fam.topology;
    let mut diags = Vec::with_capacity(fam.members.len());
    for (index, s) in fam.members.iter().enumerate() {
        let leaf_count = s.leaf_count();
        let problem = if !t.contains(s.center) || s.leaves.iter().any(|&l| !t.contains(l)) {
            Some("vertex out of range".to_string())
        } else if s.leaves.contains(&s.center) {
            Some("center listed as a leaf".to_string())
        } else if !is_star_subgraph(t, s) {
            let bad: Vec<String> = s
                .leaves
                .iter()
                .filter(|&&l| !t.is_adjacent(s.center, l))
                .map(|&l| t.format_vertex(l))
                .collect();
            if bad.is_empty() {
                Some("duplicate leaf".to_string())
            } else {
                Some(format!("leaves not adjacent to center: {}", bad.join(", ")))
            }
        } else {
            match fam.mode {
                Mode::Structure if leaf_count != fam.m => {
                    Some(format!("expected exactly {} leaves, found {leaf_count}", fam.m))
                }
                Mode::Substructure if leaf_count > fam.m => {
                    Some(format!("expected at most {} leaves, found {leaf_count}", fam.m))
                }
                _ => None,
            }
        };
        diags.push(MemberDiagnostic {
            index,
            center: t.format_vertex(s.center),
            leaf_count,
            valid: problem.is_none(),
            induced_exact: problem.is_none() && induced_exact(t, s),
            problem,
        });
    }

    let mut overlaps = Vec::new();
    for a in 0..fam.members.len() {
        for b in a + 1..fam.members.len() {
            let va: Vec<Vertex> = fam.members[a].vertices().collect();
            let mut shared: Vec<Vertex> = fam.members[b].vertices().filter(|v| va.contains(v)).collect();
            if !shared.is_empty() {
                shared.sort_unstable();
                shared.dedup();
                overlaps.push(Overlap {
                    members: (a, b),
                    shared: shared.iter().map(|&v| t.format_vertex(v)).collect(),
                });
            }
        }
    }

    let mut verdict = remove_and_components(t, &fam.vertex_union());
    verdict.invalid_member = diags.iter().find(|d| !d.valid).map(|d| d.index);
    if verdict.invalid_member.is_some() {
        verdict.is_cut = false;
    }
    verdict.member_diagnostics = diags;
    verdict.overlaps = overlaps;
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::{build_aq_cut, build_fq_cut};
    use crate::starform::Star;

    fn p(t: &Topology, s: &str) -> Vertex {
        t.parse_vertex(s).unwrap()
    }

    #[test]
    fn removal_examples() {
        let q3 = Topology::hypercube(3).unwrap();
        let v = remove_and_components(&q3, &[]);
        assert!(!v.is_cut);
        assert_eq!(v.component_sizes, [8]);

        let v = remove_and_components(&q3, &["001", "010", "100"].map(|s| p(&q3, s)));
        assert!(v.is_cut);
        assert_eq!(v.component_sizes, [4, 1]);
        assert_eq!(v.isolated_vertices, ["000"]);
        let comps = components_after_removal(&q3, &["001", "010", "100"].map(|s| p(&q3, s)));
        assert_eq!(comps[0], vec![Vertex(0)]);

        let fq3 = Topology::folded(3).unwrap();
        let v = remove_and_components(&fq3, &["001", "010", "100", "111"].map(|s| p(&fq3, s)));
        assert_eq!(v.component_count, 4);
        assert_eq!(v.component_sizes, [1, 1, 1, 1]);
    }

    #[test]
    fn trivial_remainder_counts_as_cut() {
        let q2 = Topology::hypercube(2).unwrap();
        let v = remove_and_components(&q2, &[Vertex(1), Vertex(2), Vertex(3)]);
        assert!(v.is_cut);
        let v = remove_and_components(&q2, &[Vertex(0), Vertex(1), Vertex(2), Vertex(3)]);
        assert!(!v.is_cut);
        assert_eq!(v.component_count, 0);
    }

    #[test]
    fn constructed_cuts_isolate_origin() {
        let v = verify_cut(&build_fq_cut(6, 5).unwrap());
        assert!(v.is_cut);
        assert!(v.isolated_vertices.contains(&"000000".to_string()));
        let v = verify_cut(&build_aq_cut(6, 5).unwrap());
        assert!(v.is_cut);
        assert!(v.isolated_vertices.contains(&"000000".to_string()));
        assert_eq!(v.component_sizes.iter().sum::<usize>() + v.removed_count, 64);
    }

    #[test]
    fn empty_family_is_not_a_cut() {
        let t = Topology::folded(5).unwrap();
        let v = verify_cut(&StarFamily::new(t, Mode::Structure, 3, vec![]));
        assert!(!v.is_cut);
        assert_eq!(v.component_count, 1);
    }

    #[test]
    fn invalid_member_is_reported() {
        let mut fam = build_fq_cut(6, 5).unwrap();
        // replace a leaf of member 2 by a non-neighbor of its center
        let c = fam.members[2].center;
        let far = Vertex(c.0 ^ 0b110000);
        fam.members[2].leaves[0] = far;
        fam.members[2].leaves.sort_unstable();
        let v = verify_cut(&fam);
        assert!(!v.is_cut);
        assert_eq!(v.invalid_member, Some(2));
        assert!(v.member_diagnostics[2].problem.as_ref().unwrap().contains("not adjacent"));
    }

    #[test]
    fn leaf_count_checked_by_mode() {
        let t = Topology::hypercube(3).unwrap();
        let s = Star::new(Vertex(0), [Vertex(1)]);
        let structure = StarFamily::new(t, Mode::Structure, 2, vec![s.clone()]);
        assert_eq!(verify_cut(&structure).invalid_member, Some(0));
        let sub = StarFamily::new(t, Mode::Substructure, 2, vec![s]);
        assert_eq!(verify_cut(&sub).invalid_member, None);
    }
}
