use std::collections::BTreeMap;

use ishango::artifact::{layout, Artifact, ColumnId, MeVariant, NotchGroup};
use ishango::relations::{
    enumerate_relations, target_order, verify_relation, AlignmentFilter, Relation, SearchConfig,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Key = (String, Vec<String>, i32);

pub fn key(r: &Relation) -> Key {
    (r.target.clone(), r.operands.clone(), r.correction)
}

pub fn render(r: &Relation) -> String {
    r.to_string()
}

/// Independent oracle: every (target, run, correction) triple checked
/// directly, alignment from raw interval arithmetic.
pub fn brute_force(a: &Artifact, cfg: &SearchConfig) -> BTreeMap<Key, (f64, f64)> {
    let l = layout(a, cfg.pitch_mm);
    let m = &a.column(ColumnId::M).groups;
    let mut out = BTreeMap::new();
    for col in [ColumnId::G, ColumnId::D] {
        for t in &a.column(col).groups {
            let tiv = l.interval(&t.label).unwrap();
            for start in 0..m.len() {
                for end in start..m.len() {
                    let run = end - start + 1;
                    if run > cfg.max_run {
                        continue;
                    }
                    let k = cfg.max_correction_abs as i64;
                    for c in -k..=k {
                        let sum: i64 = m[start..=end].iter().map(|g| g.count() as i64).sum();
                        if t.count() as i64 != sum + c {
                            continue;
                        }
                        let mut covered = 0.0;
                        for g in &m[start..=end] {
                            let iv = l.interval(&g.label).unwrap();
                            let lo = iv.top_mm.max(tiv.top_mm);
                            let hi = iv.bottom_mm.min(tiv.bottom_mm);
                            if hi > lo {
                                covered += hi - lo;
                            }
                        }
                        let align = covered / (tiv.bottom_mm - tiv.top_mm);
                        let keep = match cfg.min_alignment {
                            AlignmentFilter::Ignore => true,
                            AlignmentFilter::Overlap => align > 0.0,
                            AlignmentFilter::AtLeast(x) => align >= x,
                        };
                        if keep {
                            let cost = (run - 1) as f64 + cfg.correction_weight * c.abs() as f64;
                            let ops = m[start..=end].iter().map(|g| g.label.clone()).collect();
                            out.insert((t.label.clone(), ops, c as i32), (cost, align));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn assert_matches_oracle(a: &Artifact, cfg: &SearchConfig) {
    let got = enumerate_relations(a, cfg);
    let oracle = brute_force(a, cfg);
    assert_eq!(got.len(), oracle.len(), "{}", a.name());
    for r in &got {
        let (cost, align) = oracle
            .get(&key(r))
            .unwrap_or_else(|| panic!("{} not in oracle", render(r)));
        assert_eq!(r.cost, *cost);
        assert!((r.alignment - align).abs() < 1e-9);
        assert!(verify_relation(r, a).unwrap());
    }
    let order: BTreeMap<String, usize> = target_order(a, &layout(a, cfg.pitch_mm))
        .into_iter()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    for w in got.windows(2) {
        let k = |r: &Relation| {
            let start = a.locate(&r.operands[0]).unwrap().1;
            (order[&r.target], start, r.operands.len(), r.correction)
        };
        assert!(
            w[0].cost < w[1].cost || (w[0].cost == w[1].cost && k(&w[0]) < k(&w[1])),
            "{} before {}",
            render(&w[0]),
            render(&w[1])
        );
    }
}

pub fn toy(rng: &mut ChaCha8Rng, i: usize) -> Artifact {
    let n_m = rng.random_range(1..=5);
    let n_g = rng.random_range(1..=8 - n_m).min(2);
    let n_d = rng.random_range(0..=(8 - n_m - n_g).min(2));
    let mut build = |col: ColumnId, n: usize| -> Vec<NotchGroup> {
        (0..n)
            .map(|j| {
                let mut g = NotchGroup::counts_only(
                    ishango::artifact::group_label(col, j),
                    rng.random_range(1..=12),
                );
                g.gap_before_mm = rng.random_range(0..=15) as f64;
                g
            })
            .collect()
    };
    let m = build(ColumnId::M, n_m);
    let g = build(ColumnId::G, n_g);
    let d = build(ColumnId::D, n_d);
    Artifact::new(format!("toy{i}"), MeVariant::Me10, m, g, d).unwrap()
}
