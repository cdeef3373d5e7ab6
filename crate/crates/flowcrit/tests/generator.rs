//! Generated classes against brute force and against the statements they
//! must satisfy.

mod common;

use std::collections::BTreeSet;

use flowcrit::critical::in_gk;
use flowcrit::generate::{
    brute_force_easels, brute_force_enumerate, generate_gk, generate_gkr_with, one_step_codes, read_jsonl,
    tame_canvases, write_jsonl, CorpusEntry, GenOptions, Provenance, Tag,
};
use flowcrit::graph::{BorderedMultigraph, CanonCode, Canvas};
use flowcrit::verify::{verify, Claim};

use common::*;

fn codes(entries: &[CorpusEntry]) -> BTreeSet<CanonCode> {
    entries.iter().map(|e| e.code.clone()).collect()
}

#[test]
fn every_derived_entry_replays_to_its_code() {
    for (name, corpus) in all_corpora() {
        let mut derived = 0;
        for e in corpus {
            match e.replay().unwrap() {
                Some(code) => {
                    derived += 1;
                    assert_eq!(code, e.code, "{name}");
                }
                None => assert!(matches!(e.provenance, Provenance::Seed)),
            }
        }
        assert!(derived > 0, "{name}");
    }
}

#[test]
fn json_lines_round_trip() {
    for (_, corpus) in all_corpora() {
        let mut buf = Vec::new();
        write_jsonl(&mut buf, corpus).unwrap();
        let back = read_jsonl(buf.as_slice()).unwrap();
        assert_eq!(back.len(), corpus.len());
        for (a, b) in corpus.iter().zip(&back) {
            assert_eq!(a.code, b.code);
            assert_eq!((a.x, a.k, a.r), (b.x, b.k, b.r));
            assert_eq!(a.psi, b.psi);
            assert_eq!(a.provenance, b.provenance);
            assert_eq!(a.to_json(), b.to_json());
        }
    }
}

#[test]
fn classes_grow_with_the_vertex_bound_and_with_k() {
    let g6_5 = codes(&generate_gk(6, 5).unwrap());
    let g6_6 = codes(g6());
    let g7_6 = codes(g7());
    assert!(g6_5.is_subset(&g6_6) && g6_5.len() < g6_6.len());
    assert!(g6_6.is_subset(&g7_6));
    let small: BTreeSet<CanonCode> = g6().iter().filter(|e| e.vertex_count() <= 5).map(|e| e.code.clone()).collect();
    assert_eq!(small, g6_5);
}

#[test]
fn low_minimum_degree_members_come_from_expansions() {
    for (k, corpus) in [(6, g6()), (7, g7())] {
        let reach = one_step_codes(corpus, k, None, 6, &[Tag::Expa]);
        for e in corpus {
            let c = &e.canvas;
            let low = c.non_tip_vertices().into_iter().any(|v| c.degree(v) <= 4);
            if low && e.vertex_count() > 3 {
                assert!(reach.contains(&e.code), "k = {k}: {}", e.code);
            }
        }
    }
}

#[test]
fn k5_members_have_tip_degree_six() {
    let g5 = generate_gk(5, 6).unwrap();
    assert!(!g5.is_empty());
    assert!(g5.iter().all(|e| e.tip_degree() == 6));
    assert_eq!(codes(&g5), codes(&brute_force_enumerate(5, 6).unwrap()));
}

#[test]
fn nothing_below_k5() {
    for k in 0..=4 {
        assert!(brute_force_enumerate(k, 6).unwrap().is_empty());
        assert!(generate_gk(k, 6).is_err());
    }
}

#[test]
fn k4_canvas_membership() {
    let f = k4_canvas().canonical_code().unwrap();
    assert!(codes(&brute_force_enumerate(8, 5).unwrap()).contains(&f));
    assert!(codes(&generate_gk(8, 5).unwrap()).contains(&f));
    // deg z = 8 with a mixed witness is allowed at k = 7 but not at k = 6
    assert!(codes(&brute_force_enumerate(7, 5).unwrap()).contains(&f));
    assert!(!codes(&brute_force_enumerate(6, 5).unwrap()).contains(&f));
}

#[test]
fn three_vertex_level_is_the_seeds() {
    for k in 5..=8 {
        let seeds: BTreeSet<CanonCode> =
            tame_canvases(3, k + 1).into_iter().filter(|(_, c)| in_gk(c, k).is_some()).map(|(code, _)| code).collect();
        let generated = codes(&generate_gk(k, 3).unwrap());
        assert_eq!(generated, seeds);
        assert!(generate_gk(k, 3).unwrap().iter().all(|e| matches!(e.provenance, Provenance::Seed)));
    }
}

#[test]
fn easels_project_to_canvases() {
    let g7: BTreeSet<CanonCode> = codes(g7());
    for (r, corpus) in [(0, g70()), (1, g71())] {
        for e in corpus {
            assert_eq!(e.r, Some(r));
            assert_eq!(e.x, Some(1));
            assert!(g7.contains(&e.canvas.canonical_code().unwrap()));
        }
    }
}

#[test]
fn easels_match_brute_force() {
    let opts = GenOptions { check_depth: true, ..GenOptions::default() };
    for (k, r, n) in [(7, 0, 5), (7, 1, 5), (6, 1, 5), (6, 0, 6)] {
        let gen = generate_gkr_with(k, r, n, &opts).unwrap();
        assert_eq!(gen.depth_stable, Some(true), "k = {k}, r = {r}");
        assert_eq!(codes(&gen.entries), codes(&brute_force_easels(k, r, n).unwrap()), "k = {k}, r = {r}");
    }
}

#[test]
fn k7_matches_brute_force_on_six_vertices() {
    assert_eq!(codes(g7()), codes(&brute_force_enumerate(7, 6).unwrap()));
}

/// The all-vertex reading of the few-large-degrees inequality, where each
/// degree-4 vertex contributes −2.
#[test]
fn few_large_degrees_summed_over_all_vertices() {
    for (name, corpus) in all_corpora() {
        for e in corpus {
            let c = &e.canvas;
            let s: i64 = c.non_tip_vertices().into_iter().map(|v| c.degree(v) as i64 - 6).sum();
            assert!(s <= c.tip_degree() as i64 - 8, "{name}: {}", e.code);
        }
        let r = verify(Claim::ConjFewlarge, corpus).unwrap();
        assert_eq!(r.stats["all_vertex_sum_counterexamples"], serde_json::json!([]));
    }
}

/// An edge with a triple tip edge at each end: tame, flow-critical, tip
/// degree 6, empty census.
#[test]
fn smallest_tip_degree_six_member() {
    let edges = [(0, 1), (0, 2), (0, 2), (0, 2), (1, 2), (1, 2), (1, 2)];
    let c = Canvas::new(BorderedMultigraph::from_edges(3, &edges, &[0, 0, 0]).unwrap(), 2).unwrap();
    assert!(c.is_tame() && c.census().is_empty() && c.tip_degree() == 6);
    assert!(in_gk(&c, 6).is_some());
    assert!(codes(g6()).contains(&c.canonical_code().unwrap()));
}

#[test]
fn other_claims_hold_on_generated_classes() {
    for claim in [Claim::ThmDegbetter, Claim::CorDb3, Claim::CorCensmax] {
        for (name, corpus) in all_corpora() {
            let r = verify(claim, corpus).unwrap();
            assert!(r.passed(), "{claim} on {name}: {:?}", r.violations);
        }
    }
}
