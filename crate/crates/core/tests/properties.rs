//! Randomized invariants of the graph families and closed forms.

use proptest::prelude::*;
use starcut::analysis::remove_and_components;
use starcut::analysis::structure::sampler_configs;
use starcut::cuts::{f_eval, f_int, g_eval, g_int};
use starcut::topology::{format_vertex, parse_vertex};
use starcut::{Kind, Topology, Vertex};

fn kind() -> impl Strategy<Value = Kind> {
    prop::sample::select(Kind::ALL.to_vec())
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_matches_neighbors(k in kind(), n in 2u32..=10, a in any::<u32>(), b in any::<u32>()) {
        let t = Topology::new(k, n).unwrap();
        let (u, v) = (Vertex(a & t.full_mask()), Vertex(b & t.full_mask()));
        prop_assert_eq!(t.is_adjacent(u, v), t.is_adjacent(v, u));
        prop_assert_eq!(t.is_adjacent(u, v), t.neighbors_of(u).contains(&v));
        prop_assert_eq!(t.neighbors_of(u).len(), t.degree());
    }

    #[test]
    fn vertex_text_round_trips(n in 1u32..=24, a in any::<u32>()) {
        let v = Vertex(a & ((1u32 << n) - 1));
        let s = format_vertex(v, n);
        prop_assert_eq!(s.len(), n as usize);
        prop_assert_eq!(parse_vertex(&s, n).unwrap(), v);
    }

    #[test]
    fn removal_conserves_vertices(k in kind(), n in 3u32..=8, picks in prop::collection::vec(any::<u32>(), 0..40)) {
        let t = Topology::new(k, n).unwrap();
        let mut removed: Vec<Vertex> = picks.iter().map(|&p| Vertex(p & t.full_mask())).collect();
        removed.sort_unstable();
        removed.dedup();
        let r = remove_and_components(&t, &removed);
        prop_assert_eq!(r.component_sizes.iter().sum::<usize>() + removed.len(), t.order());
    }

    #[test]
    fn closed_forms_agree(n in 1u32..=30, x in -50i64..=50) {
        prop_assert_eq!(f_int(n, x) as f64, f_eval(n, x as f64));
        prop_assert_eq!(g_int(n, x) as f64, g_eval(n, x as f64));
        // same leading term, so the difference is linear
        let n = n as i64;
        prop_assert_eq!(g_int(n as u32, x) - f_int(n as u32, x), (n - 1) * x + 1 - n * n);
    }

    #[test]
    fn sampler_configs_are_consistent(n in 4u32..=16) {
        let cfgs = sampler_configs(n);
        let ks: Vec<u32> = cfgs.iter().map(|c| c.k).collect();
        let expect: Vec<u32> = (1..=(2 * n - 4).max(n + 1)).collect();
        prop_assert_eq!(ks, expect);
        for c in &cfgs {
            prop_assert!(c.set_size >= 1);
            prop_assert!((c.set_size as u64) < 1u64 << n);
        }
    }
}
