use ishango::artifact::{layout, Artifact, MeVariant};
use ishango::data;
use ishango::relations::{
    alignment_score, base12_tally, cover, enumerate_relations, select_cover, verify_relation,
    AlignmentFilter, CoverPolicy, Relation, SearchConfig, TallyOrdering,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;
use common::relations_oracle::{assert_matches_oracle, render, toy};

#[test]
fn exhaustive_on_bundled_artifact() {
    for v in [MeVariant::Me9, MeVariant::Me10] {
        let a = data::ishango(v);
        for filter in [
            AlignmentFilter::Ignore,
            AlignmentFilter::Overlap,
            AlignmentFilter::AtLeast(0.5),
        ] {
            for max_corr in 0..=2 {
                let cfg = SearchConfig {
                    min_alignment: filter,
                    max_correction_abs: max_corr,
                    ..SearchConfig::default()
                };
                assert_matches_oracle(&a, &cfg);
            }
        }
    }
}

#[test]
fn exhaustive_on_random_toys() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..50 {
        let a = toy(&mut rng, i);
        assert_matches_oracle(&a, &SearchConfig::default());
        let cfg = SearchConfig {
            min_alignment: AlignmentFilter::Ignore,
            max_run: 4,
            ..SearchConfig::default()
        };
        assert_matches_oracle(&a, &cfg);
    }
}

#[test]
fn me9_without_corrections_gives_middle_relations() {
    let a = data::ishango(MeVariant::Me9);
    let cfg = SearchConfig {
        max_correction_abs: 0,
        ..SearchConfig::default()
    };
    let middle = ["Gb", "Db", "Gc", "Dc"];
    let mut got: Vec<String> = enumerate_relations(&a, &cfg)
        .iter()
        .filter(|r| middle.contains(&r.target.as_str()))
        .map(render)
        .collect();
    got.sort();
    assert_eq!(
        got,
        [
            "Db:21 = 4+8+9",
            "Dc:19 = 9+5+5",
            "Gb:13 = 3+6+4",
            "Gc:17 = 8+9"
        ]
    );
}

#[test]
fn me10_defaults_contain_corrected_middle_relations() {
    let a = data::ishango(MeVariant::Me10);
    let got: Vec<String> = enumerate_relations(&a, &SearchConfig::default())
        .iter()
        .map(render)
        .collect();
    for want in [
        "Gb:13 = 4+8+1",
        "Db:21 = 4+8+10-1",
        "Gc:17 = 8+10-1",
        "Dc:19 = 10+5+5-1",
    ] {
        assert!(got.iter().any(|g| g == want), "missing {want}");
    }
}

#[test]
fn me10_aligned_cover_is_the_eight_relation_set() {
    let a = data::ishango(MeVariant::Me10);
    let c = cover(&a, &SearchConfig::default(), CoverPolicy::Alignment);
    let got: Vec<String> = c.relations.iter().map(render).collect();
    assert_eq!(
        got,
        [
            "Da:11 = 3+6+2",
            "Ga:11 = 6+4+1",
            "Gb:13 = 4+8+1",
            "Db:21 = 4+8+10-1",
            "Gc:17 = 8+10-1",
            "Dc:19 = 10+5+5-1",
            "Gd:19 = 5+5+7+2",
            "Dd:9 = 7+2",
        ]
    );
    assert_eq!(c.corrections(), [2, 2, 2, 1, 1, -1, -1, -1]);
}

#[test]
fn simplicity_prefers_me9() {
    let cfg = SearchConfig::default();
    let me9 = cover(
        &data::ishango(MeVariant::Me9),
        &cfg,
        CoverPolicy::Simplicity,
    );
    let me10 = cover(
        &data::ishango(MeVariant::Me10),
        &cfg,
        CoverPolicy::Simplicity,
    );
    assert!(me9.is_complete() && me10.is_complete());
    assert_eq!(me9.total_cost(), 19.0);
    assert_eq!(me10.total_cost(), 26.0);
    for r in &me9.relations {
        if ["Gb", "Db", "Gc", "Dc"].contains(&r.target.as_str()) {
            assert_eq!(r.correction, 0, "{}", render(r));
        }
    }
}

#[test]
fn db_alignment_golden() {
    let a = data::ishango(MeVariant::Me10);
    let l = layout(&a, 2.5);
    let r = enumerate_relations(&a, &SearchConfig::default())
        .into_iter()
        .find(|r| r.to_string() == "Db:21 = 4+8+10-1")
        .unwrap();
    let two_ops = Relation {
        operands: vec!["Mc".into(), "Md".into()],
        ..r.clone()
    };
    // Db spans 58..98 mm; Mc and Md cover 60.5..68 and 74..91.5.
    assert!((alignment_score(&two_ops, &l).unwrap() - 0.625).abs() < 1e-12);
    assert!(alignment_score(&r, &l).unwrap() > 0.5);
}

fn eight(a: &Artifact) -> Vec<Relation> {
    cover(a, &SearchConfig::default(), CoverPolicy::Alignment).relations
}

#[test]
fn tally_in_column_order() {
    let a = data::ishango(MeVariant::Me10);
    let t = base12_tally(&eight(&a), &a, &TallyOrdering::column_order()).unwrap();
    assert_eq!(t.totals(), [3, 12, 12, 24, 30, 10, 10, 14]);
    assert_eq!(t.corrections_total, 2 * 3 + 2 - 3);
    assert_eq!(t.grand_total, 120);
    assert_eq!(t.multiples_of_12, ["Mb", "Mc", "Md"]);
}

#[test]
fn tally_as_engraved() {
    let a = data::ishango(MeVariant::Me10);
    let t = base12_tally(&eight(&a), &a, &TallyOrdering::as_engraved()).unwrap();
    assert_eq!(t.totals(), [3, 12, 12, 24, 30, 12, 10, 12]);
    let mf: Vec<u32> = t.slots[5].contributions.iter().map(|c| c.1).collect();
    assert_eq!(mf, [5, 7]);
    assert_eq!(t.multiples_of_12, ["Mb", "Mc", "Md", "Mf", "Mh"]);
}

#[test]
fn cover_reports_unreachable_targets() {
    let a = Artifact::from_counts("toy", &[1, 1, 1], &[9, 2], &[]).unwrap();
    let cfg = SearchConfig {
        min_alignment: AlignmentFilter::Ignore,
        ..SearchConfig::default()
    };
    let ranked = enumerate_relations(&a, &cfg);
    let c = select_cover(
        &ranked,
        &["Ga".into(), "Gb".into()],
        CoverPolicy::Simplicity,
    );
    assert_eq!(c.uncovered, ["Ga"]);
}

proptest! {
    #[test]
    fn every_relation_verifies_and_output_is_deterministic(
        m in prop::collection::vec(1u32..15, 1..8),
        g in prop::collection::vec(1u32..40, 1..4),
        d in prop::collection::vec(1u32..40, 0..4),
    ) {
        let a = Artifact::from_counts("p", &m, &g, &d).unwrap();
        let cfg = SearchConfig { min_alignment: AlignmentFilter::Ignore, ..SearchConfig::default() };
        let first = enumerate_relations(&a, &cfg);
        for r in &first {
            prop_assert!(verify_relation(r, &a).unwrap());
        }
        prop_assert_eq!(first, enumerate_relations(&a, &cfg));
    }

    #[test]
    fn cost_is_monotone(run in 1usize..3, corr in 0i32..2, w in 0.1f64..5.0) {
        let cfg = SearchConfig { correction_weight: w, ..SearchConfig::default() };
        let r = |run: usize, c: i32| Relation {
            target: "Ga".into(),
            target_count: 0,
            operands: vec!["Ma".into(); run],
            operand_counts: vec![0; run],
            correction: c,
            cost: 0.0,
            alignment: 0.0,
        };
        use ishango::relations::relation_cost;
        prop_assert!(relation_cost(&r(run, corr + 1), &cfg) > relation_cost(&r(run, corr), &cfg));
        prop_assert!(relation_cost(&r(run, -corr - 1), &cfg) > relation_cost(&r(run, -corr), &cfg));
        prop_assert!(relation_cost(&r(run + 1, corr), &cfg) > relation_cost(&r(run, corr), &cfg));
    }
}
