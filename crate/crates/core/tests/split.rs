mod common;

use common::*;
use degseq::graphicality::{is_graphic, very_simple_region_fully_graphic};
use degseq::splitgraph::{
    is_split_sequence, nonstability_witness, split_witness, tyshkevich_compose, tyshkevich_compose_split,
    verify_multiplicativity, CrossEdgeLayout, SplitGraph,
};
use degseq::{DegreeSequence, ExactCounter, LabeledGraph, Region, VerySimpleRegion};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn hammer_simeone_matches_partition_search_on_every_realization() {
    for n in 1..=ORACLE_MAX_N {
        for v in bounded_sequences(n) {
            let graphs = brute_realizations(&v);
            let d = DegreeSequence::new(v.clone()).unwrap();
            if graphs.is_empty() {
                assert!(is_split_sequence(&d).is_err());
                continue;
            }
            let verdict = is_split_sequence(&d).unwrap().is_split;
            for adj in &graphs {
                assert_eq!(has_split_partition(adj), verdict, "{d}");
            }
        }
    }
}

#[test]
fn witness_exists_in_every_non_fully_graphic_region() {
    let mut seen = 0;
    let mut sequential = 0;
    for n in 1..=10 {
        for c1 in 0..n as u32 {
            for c2 in 0..=c1 {
                let r = VerySimpleRegion::new(n, c1, c2).unwrap();
                let w = split_witness(&r).unwrap();
                assert_eq!(w.is_none(), very_simple_region_fully_graphic(&r), "{r}");
                let Some(w) = w else { continue };
                seen += 1;
                if w.layout == CrossEdgeLayout::Sequential {
                    sequential += 1;
                }
                assert!(w.sequence.is_member_of(&Region::VerySimple(r)), "{r}");
                assert!(is_graphic(&w.sequence).graphic, "{r}");
                assert!(is_split_sequence(&w.sequence).unwrap().is_split, "{r}");
                assert_eq!(w.split.graph.degree_sequence(), w.sequence);
                assert!(w.split.graph.is_clique(&w.split.clique));
                assert!(w.split.graph.is_independent(&w.split.independent));
            }
        }
    }
    assert_eq!(seen, 85);
    assert_eq!(sequential, 13);
}

fn random_split(rng: &mut ChaCha8Rng, max_n: usize) -> SplitGraph {
    let n = rng.gen_range(1..=max_n);
    let k = rng.gen_range(1..=n);
    let mut g = LabeledGraph::empty(n);
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v);
        }
        for w in k..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, w);
            }
        }
    }
    SplitGraph::new(g, (0..k).collect(), (k..n).collect()).unwrap()
}

#[test]
fn composition_shifts_degrees_as_expected() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for t in 0..200 {
        let g = random_split(&mut rng, 6);
        let nh = rng.gen_range(1..=6);
        let h = LabeledGraph::from_edges(nh, random_graph(nh, t, 0.4)).unwrap();
        let k = tyshkevich_compose(&g, &h);
        let off = g.graph.vertex_count();
        for &u in &g.clique {
            assert_eq!(k.degree(u), g.graph.degree(u) + nh);
        }
        for &w in &g.independent {
            assert_eq!(k.degree(w), g.graph.degree(w));
        }
        for v in 0..nh {
            assert_eq!(k.degree(off + v), h.degree(v) + g.clique.len());
        }
        assert_eq!(k.edge_count(), g.graph.edge_count() + h.edge_count() + g.clique.len() * nh);
    }
}

#[test]
fn composition_of_split_graphs_is_split() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let g = random_split(&mut rng, 5);
        let h = random_split(&mut rng, 5);
        let k = tyshkevich_compose_split(&g, &h).unwrap();
        assert!(is_split_sequence(&k.graph.degree_sequence()).unwrap().is_split);
    }
}

#[test]
fn counts_multiply_under_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut counter = ExactCounter::default();
    let mut checked = 0;
    for t in 0..60u64 {
        let g = random_split(&mut rng, 6);
        let nh = rng.gen_range(1..=12 - g.graph.vertex_count());
        let h = LabeledGraph::from_edges(nh, random_graph(nh, 100 + t, 0.5)).unwrap();
        let r = verify_multiplicativity(&mut counter, &g, &h).unwrap();
        assert!(r.holds, "{r:?}");
        let k = tyshkevich_compose(&g, &h);
        if k.vertex_count() <= ORACLE_MAX_N {
            // labels of the composite need not be sorted; the census is positional
            let deg: Vec<i64> = k.degrees().iter().map(|&x| x as i64).collect();
            assert_eq!(r.count_composite, BigUint::from(brute_count(&deg)));
        }
        checked += 1;
    }
    assert!(checked >= 20);
}

#[test]
fn nonstability_witness_shape() {
    let mut counter = ExactCounter::default();
    let mut last = BigUint::from(0u32);
    for gap in 2..=4 {
        let w = nonstability_witness(6, 6 + gap, 5, 1, Some(&mut counter)).unwrap().unwrap();
        assert_eq!(w.m, gap);
        assert_eq!(w.e.len(), 6 + 2 * gap);
        assert_eq!(w.witness.sequence.degrees(), &[3, 3, 1, 1, 1, 1]);
        let v = w.verification.unwrap();
        // the clique pair may take any two of the four leaves
        assert_eq!(v.count_split, BigUint::from(6u32));
        assert!(!v.split_unique);
        assert_eq!(v.count_e, v.count_split);
        assert!(v.count_perturbed > last);
        last = v.count_perturbed;
    }
    assert!(nonstability_witness(6, 6, 5, 1, None).is_err());
    assert!(nonstability_witness(6, 9, 2, 2, None).unwrap().is_none());
}
