//! Competing readings of the bone, each scored as a checklist plus one cost.
//!
//! Checklist scorers cost one unit per failed check and per raised
//! objection. The slide-rule cost is the cheapest covering set of relations;
//! the lunar cost is the residual as a fraction of a month.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::artifact::{layout, Artifact, ColumnId};
use crate::par::Parallelism;
use crate::relations::{
    base12_tally, enumerate_relations_with, select_cover, target_order, CoverPolicy, SearchConfig,
    TallyOrdering,
};
use crate::schema::{classify_notches, ClassifyParams};

pub const SYNODIC_MONTH_DAYS: f64 = 29.5306;

/// Smallest vertical gap separating two duplication families.
pub const FAMILY_GAP_MM: f64 = 10.0;

/// M-column families: a group, its double, and what follows.
pub const FAMILIES: [&[&str]; 4] = [&["Ma", "Mb"], &["Mc", "Md", "Me"], &["Mf", "Mg"], &["Mh"]];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisName {
    SlideRuleBase12,
    Prime,
    Decimal,
    Lunar,
    DuplicationFamilies,
}

impl HypothesisName {
    pub const ALL: [HypothesisName; 5] = [
        HypothesisName::SlideRuleBase12,
        HypothesisName::Prime,
        HypothesisName::Decimal,
        HypothesisName::Lunar,
        HypothesisName::DuplicationFamilies,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            HypothesisName::SlideRuleBase12 => "slide_rule_base12",
            HypothesisName::Prime => "prime",
            HypothesisName::Decimal => "decimal",
            HypothesisName::Lunar => "lunar",
            HypothesisName::DuplicationFamilies => "duplication_families",
        }
    }
}

impl fmt::Display for HypothesisName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ComponentValue {
    Check(bool),
    Number(f64),
    Text(String),
}

impl fmt::Display for ComponentValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentValue::Check(true) => f.write_str("pass"),
            ComponentValue::Check(false) => f.write_str("fail"),
            ComponentValue::Number(x) if x.fract() == 0.0 && x.abs() < 1e15 => {
                write!(f, "{}", *x as i64)
            }
            ComponentValue::Number(x) => write!(f, "{x:.4}"),
            ComponentValue::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    /// Supports the hypothesis when true.
    Check,
    /// Counts against the hypothesis when true.
    Objection,
    /// Reported value, no verdict.
    Measure,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Component {
    pub name: String,
    pub kind: ComponentKind,
    pub value: ComponentValue,
}

impl Component {
    fn check(name: &str, ok: bool) -> Self {
        Component {
            name: name.into(),
            kind: ComponentKind::Check,
            value: ComponentValue::Check(ok),
        }
    }

    fn objection(name: &str, raised: bool) -> Self {
        Component {
            name: name.into(),
            kind: ComponentKind::Objection,
            value: ComponentValue::Check(raised),
        }
    }

    fn number(name: &str, x: f64) -> Self {
        Component {
            name: name.into(),
            kind: ComponentKind::Measure,
            value: ComponentValue::Number(x),
        }
    }

    fn text(name: &str, t: impl Into<String>) -> Self {
        Component {
            name: name.into(),
            kind: ComponentKind::Measure,
            value: ComponentValue::Text(t.into()),
        }
    }

    fn penalty(&self) -> f64 {
        match (self.kind, &self.value) {
            (ComponentKind::Check, ComponentValue::Check(false)) => 1.0,
            (ComponentKind::Objection, ComponentValue::Check(true)) => 1.0,
            _ => 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HypothesisScore {
    pub name: HypothesisName,
    pub components: Vec<Component>,
    pub total_cost: f64,
    pub notes: String,
}

impl HypothesisScore {
    fn checklist(name: HypothesisName, components: Vec<Component>, notes: &str) -> Self {
        let total_cost = components.iter().map(Component::penalty).sum();
        HypothesisScore {
            name,
            components,
            total_cost,
            notes: notes.into(),
        }
    }

    pub fn component(&self, name: &str) -> Option<&ComponentValue> {
        self.components
            .iter()
            .find(|c| c.name == name)
            .map(|c| &c.value)
    }

    /// Value of a boolean component; `None` if absent or not boolean.
    pub fn flag(&self, name: &str) -> Option<bool> {
        match self.component(name) {
            Some(ComponentValue::Check(b)) => Some(*b),
            _ => None,
        }
    }

    pub fn number(&self, name: &str) -> Option<f64> {
        match self.component(name) {
            Some(ComponentValue::Number(x)) => Some(*x),
            _ => None,
        }
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn counts(a: &Artifact, col: ColumnId) -> Vec<u64> {
    a.column(col)
        .groups
        .iter()
        .map(|g| g.count() as u64)
        .collect()
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Cost of the cheapest cover, plus a fixed penalty for each target no
/// relation reaches (one more than the most expensive admissible relation).
pub fn penalized_cover_cost(a: &Artifact, cfg: &SearchConfig) -> f64 {
    let ranked = enumerate_relations_with(a, cfg, Parallelism::Sequential);
    let targets = target_order(a, &layout(a, cfg.pitch_mm));
    let c = select_cover(&ranked, &targets, CoverPolicy::Simplicity);
    c.total_cost() + c.uncovered.len() as f64 * uncovered_penalty(cfg)
}

/// [`penalized_cover_cost`] with alignment ignored, from group counts alone.
pub fn penalized_cover_cost_counts(m: &[u32], targets: &[u32], cfg: &SearchConfig) -> f64 {
    let max_corr = cfg.max_correction_abs as i64;
    targets
        .iter()
        .map(|&t| {
            let mut best = f64::INFINITY;
            for start in 0..m.len() {
                let mut sum = 0i64;
                for run in 1..=cfg.max_run.min(m.len() - start) {
                    sum += m[start + run - 1] as i64;
                    let c = t as i64 - sum;
                    if c.abs() <= max_corr {
                        let cost = (run - 1) as f64 + cfg.correction_weight * c.abs() as f64;
                        best = best.min(cost);
                    }
                }
            }
            if best.is_finite() {
                best
            } else {
                uncovered_penalty(cfg)
            }
        })
        .sum()
}

fn uncovered_penalty(cfg: &SearchConfig) -> f64 {
    cfg.max_run.saturating_sub(1) as f64
        + cfg.correction_weight * cfg.max_correction_abs as f64
        + 1.0
}

pub fn score_slide_rule(a: &Artifact, cfg: &SearchConfig) -> HypothesisScore {
    let ranked = enumerate_relations_with(a, cfg, Parallelism::Sequential);
    let targets = target_order(a, &layout(a, cfg.pitch_mm));
    let simple = select_cover(&ranked, &targets, CoverPolicy::Simplicity);
    let aligned = select_cover(&ranked, &targets, CoverPolicy::Alignment);

    let sums: Vec<u64> = ColumnId::ALL
        .iter()
        .map(|&c| a.column(c).sum() as u64)
        .collect();
    let describe = |cover: &crate::relations::Cover| {
        cover
            .relations
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    };
    let corrections = aligned
        .corrections()
        .iter()
        .map(|c| format!("{c:+}"))
        .collect::<Vec<_>>()
        .join(" ");
    let multiples = |ordering: &TallyOrdering| {
        base12_tally(&aligned.relations, a, ordering)
            .map(|t| t.multiples_of_12.len() as f64)
            .unwrap_or(0.0)
    };

    let mut components = vec![
        Component::check("all_targets_covered", simple.is_complete()),
        Component::number("covering_cost", simple.total_cost()),
        Component::number(
            "zero_correction_relations",
            simple
                .relations
                .iter()
                .filter(|r| r.correction == 0)
                .count() as f64,
        ),
        Component::text("simplest_cover", describe(&simple)),
        Component::text("aligned_cover", describe(&aligned)),
        Component::text("aligned_corrections", corrections),
        Component::check(
            "column_sums_divisible_by_12",
            !sums.is_empty() && sums.iter().all(|s| s % 12 == 0),
        ),
        Component::text("column_sums", join(&sums)),
        Component::number(
            "base12_multiples_column_order",
            multiples(&TallyOrdering::column_order()),
        ),
        Component::number(
            "base12_multiples_engraved",
            multiples(&TallyOrdering::as_engraved()),
        ),
    ];
    if !simple.uncovered.is_empty() {
        components.push(Component::text(
            "uncovered_targets",
            simple.uncovered.join(","),
        ));
    }
    HypothesisScore {
        name: HypothesisName::SlideRuleBase12,
        components,
        total_cost: simple.total_cost() + simple.uncovered.len() as f64 * uncovered_penalty(cfg),
        notes: "cost: cheapest covering relations; uncovered targets add a fixed penalty".into(),
    }
}

pub fn score_prime(a: &Artifact) -> HypothesisScore {
    let g = counts(a, ColumnId::G);
    let mut sorted = g.clone();
    sorted.sort_unstable();
    let primes_10_20: Vec<u64> = (11..20).filter(|&n| is_prime(n)).collect();
    let all: BTreeSet<u64> = ColumnId::ALL.iter().flat_map(|&c| counts(a, c)).collect();
    let m = counts(a, ColumnId::M);
    let m_mixed = m.iter().any(|&n| is_prime(n)) && m.iter().any(|&n| !is_prime(n));
    HypothesisScore::checklist(
        HypothesisName::Prime,
        vec![
            Component::check(
                "g_all_prime",
                !g.is_empty() && g.iter().all(|&n| is_prime(n)),
            ),
            Component::check("g_is_primes_between_10_and_20", sorted == primes_10_20),
            Component::objection("two_absent", !all.contains(&2)),
            Component::objection("m_primes_not_singled_out", m_mixed),
            Component::text("g_counts", join(&g)),
        ],
        "cost: failed checks plus raised objections",
    )
}

pub fn score_decimal(a: &Artifact) -> HypothesisScore {
    let d = counts(a, ColumnId::D);
    let set: BTreeSet<u64> = d.iter().copied().collect();
    let monotone = d.windows(2).all(|w| w[0] <= w[1]) || d.windows(2).all(|w| w[0] >= w[1]);
    HypothesisScore::checklist(
        HypothesisName::Decimal,
        vec![
            Component::check(
                "d_is_10_and_20_plus_minus_1",
                d.len() == 4 && set == BTreeSet::from([9, 11, 19, 21]),
            ),
            Component::objection("d_not_monotone", !monotone),
            Component::text("d_counts", join(&d)),
        ],
        "cost: failed checks plus raised objections",
    )
}

/// Whole number of synodic months nearest to `days` (at least 1) and the
/// residual in days.
pub fn lunar_fit(days: f64) -> (u64, f64) {
    let k = (days / SYNODIC_MONTH_DAYS).round().max(1.0);
    (k as u64, (days - k * SYNODIC_MONTH_DAYS).abs())
}

pub fn score_lunar(a: &Artifact) -> HypothesisScore {
    let total = a.total_notches() as f64;
    let (k, residual) = lunar_fit(total);
    let fraction = residual / SYNODIC_MONTH_DAYS;
    HypothesisScore {
        name: HypothesisName::Lunar,
        components: vec![
            Component::number("total_notches", total),
            Component::number("months", k as f64),
            Component::number("residual_days", residual),
            Component::number("residual_fraction_of_month", fraction),
        ],
        total_cost: fraction,
        notes: format!(
            "synodic month {SYNODIC_MONTH_DAYS} days; cost: residual as a fraction of a month"
        ),
    }
}

/// Sizes of runs of equal length class within a group, top to bottom.
fn class_runs(a: &Artifact, label: &str) -> Option<Vec<usize>> {
    let g = a.group(label)?;
    let classes = classify_notches(g, &ClassifyParams::default())
        .ok()?
        .classes;
    let mut runs: Vec<usize> = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        if i > 0 && classes[i - 1] == *c {
            *runs.last_mut()? += 1;
        } else {
            runs.push(1);
        }
    }
    Some(runs)
}

pub fn score_duplication(a: &Artifact) -> HypothesisScore {
    let count = |l: &str| a.group(l).map(|g| g.count());
    let doubles = |small: &str, big: &str| match (count(small), count(big)) {
        (Some(s), Some(b)) => b == 2 * s,
        _ => false,
    };

    let boundary_gaps: Option<Vec<f64>> = FAMILIES[1..]
        .iter()
        .map(|f| a.group(f[0]).map(|g| g.gap_before_mm))
        .collect();
    let families_split = boundary_gaps
        .as_ref()
        .is_some_and(|gaps| gaps.iter().all(|&g| g >= FAMILY_GAP_MM));
    let inner_gaps: Vec<String> = FAMILIES
        .iter()
        .flat_map(|f| f.iter().skip(1))
        .filter_map(|l| a.group(l).map(|g| format!("{l} {}", g.gap_before_mm)))
        .collect();

    let seven = match (count("Ma"), count("Mc"), count("Mh"), class_runs(a, "Mh")) {
        (Some(x), Some(y), Some(z), Some(runs)) => z == x + y && runs == [x, y],
        _ => false,
    };
    let leads: Option<Vec<usize>> = FAMILIES.iter().map(|f| count(f[0])).collect();
    let leads_increasing = leads
        .as_ref()
        .is_some_and(|l| l.windows(2).all(|w| w[0] < w[1]));

    HypothesisScore::checklist(
        HypothesisName::DuplicationFamilies,
        vec![
            Component::check("mb_doubles_ma", doubles("Ma", "Mb")),
            Component::check("md_doubles_mc", doubles("Mc", "Md")),
            Component::check("families_split_at_large_gaps", families_split),
            Component::text(
                "family_boundary_gaps_mm",
                boundary_gaps
                    .unwrap_or_default()
                    .iter()
                    .map(f64::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            Component::text("within_family_gaps_mm", inner_gaps.join(", ")),
            Component::check("seven_is_three_plus_four", seven),
            Component::check("family_leads_increasing", leads_increasing),
        ],
        "cost: failed checks",
    )
}

/// All five scorers, in the order of [`HypothesisName::ALL`].
pub fn score_all(a: &Artifact, cfg: &SearchConfig) -> Vec<HypothesisScore> {
    vec![
        score_slide_rule(a, cfg),
        score_prime(a),
        score_decimal(a),
        score_lunar(a),
        score_duplication(a),
    ]
}
