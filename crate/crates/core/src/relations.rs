//! Slide-rule relations: a G or D group count written as the sum of a run of
//! consecutive M-column counts plus a small correction.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::artifact::{layout, Artifact, ColumnId, Interval, Layout, DEFAULT_PITCH_MM};
use crate::par::{map_range, Parallelism};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RelationError {
    #[error("unknown group label {0}")]
    UnknownLabel(String),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

/// How vertical alignment restricts candidate relations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum AlignmentFilter {
    /// Keep every arithmetic match.
    Ignore,
    /// Target and operands must share some vertical range.
    Overlap,
    /// Alignment fraction must reach the given value.
    AtLeast(f64),
}

impl AlignmentFilter {
    pub fn accepts(self, alignment: f64) -> bool {
        match self {
            AlignmentFilter::Ignore => true,
            AlignmentFilter::Overlap => alignment > 0.0,
            AlignmentFilter::AtLeast(min) => alignment >= min,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchConfig {
    pub max_run: usize,
    pub max_correction_abs: u32,
    pub min_alignment: AlignmentFilter,
    pub correction_weight: f64,
    /// Pitch used to lay out groups without measured extents.
    pub pitch_mm: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_run: 3,
            max_correction_abs: 2,
            min_alignment: AlignmentFilter::Overlap,
            correction_weight: 2.0,
            pitch_mm: DEFAULT_PITCH_MM,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), RelationError> {
        if self.max_run < 1 {
            return Err(RelationError::InvalidConfig(
                "max_run must be at least 1".into(),
            ));
        }
        if !(self.correction_weight.is_finite() && self.correction_weight >= 0.0) {
            return Err(RelationError::InvalidConfig(
                "correction_weight must be a non-negative number".into(),
            ));
        }
        if let AlignmentFilter::AtLeast(m) = self.min_alignment {
            if !(0.0..=1.0).contains(&m) {
                return Err(RelationError::InvalidConfig(
                    "min_alignment must lie in [0, 1]".into(),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Relation {
    pub target: String,
    pub target_count: u32,
    /// Consecutive M-column labels, top to bottom.
    pub operands: Vec<String>,
    pub operand_counts: Vec<u32>,
    pub correction: i32,
    pub cost: f64,
    pub alignment: f64,
}

impl Relation {
    pub fn run_length(&self) -> usize {
        self.operands.len()
    }
}

impl fmt::Display for Relation {
    /// `Gb:13 = 4+8+1`, `Db:21 = 4+8+10-1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{} = ", self.target, self.target_count)?;
        let terms: Vec<String> = self.operand_counts.iter().map(u32::to_string).collect();
        f.write_str(&terms.join("+"))?;
        match self.correction {
            0 => Ok(()),
            c if c > 0 => write!(f, "+{c}"),
            c => write!(f, "{c}"),
        }
    }
}

pub fn relation_cost(r: &Relation, cfg: &SearchConfig) -> f64 {
    cost(r.run_length(), r.correction, cfg.correction_weight)
}

fn cost(run: usize, correction: i32, weight: f64) -> f64 {
    (run.saturating_sub(1)) as f64 + weight * correction.unsigned_abs() as f64
}

/// True iff the target count equals the operand counts plus the correction.
pub fn verify_relation(r: &Relation, a: &Artifact) -> Result<bool, RelationError> {
    let count = |label: &str| {
        a.group(label)
            .map(|g| g.count() as i64)
            .ok_or_else(|| RelationError::UnknownLabel(label.to_string()))
    };
    let target = count(&r.target)?;
    let mut sum = 0;
    for op in &r.operands {
        sum += count(op)?;
    }
    Ok(target == sum + r.correction as i64)
}

/// Fraction of the target's vertical range covered by its operands.
pub fn alignment_score(r: &Relation, l: &Layout) -> Result<f64, RelationError> {
    let interval = |label: &str| {
        l.interval(label)
            .ok_or_else(|| RelationError::UnknownLabel(label.to_string()))
    };
    let target = interval(&r.target)?;
    let ops = r
        .operands
        .iter()
        .map(|o| interval(o))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(covered_fraction(&target, ops))
}

fn covered_fraction(target: &Interval, mut ops: Vec<Interval>) -> f64 {
    if target.height() <= 0.0 {
        return 0.0;
    }
    ops.sort_by(|x, y| x.top_mm.total_cmp(&y.top_mm));
    let mut covered = 0.0;
    let mut current: Option<Interval> = None;
    for op in ops {
        match &mut current {
            Some(c) if op.top_mm <= c.bottom_mm => c.bottom_mm = c.bottom_mm.max(op.bottom_mm),
            _ => {
                if let Some(c) = current.take() {
                    covered += target.overlap(&c);
                }
                current = Some(op);
            }
        }
    }
    if let Some(c) = current {
        covered += target.overlap(&c);
    }
    (covered / target.height()).clamp(0.0, 1.0)
}

/// G and D labels in reading order: by top of their layout interval, G before
/// D on ties.
pub fn target_order(a: &Artifact, l: &Layout) -> Vec<String> {
    let mut keyed: Vec<(f64, ColumnId, usize, String)> = [ColumnId::G, ColumnId::D]
        .into_iter()
        .flat_map(|col| {
            a.column(col).groups.iter().enumerate().map(move |(i, g)| {
                let top = l.interval(&g.label).map_or(0.0, |iv| iv.top_mm);
                (top, col, i, g.label.clone())
            })
        })
        .collect();
    keyed.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
    keyed.into_iter().map(|k| k.3).collect()
}

/// Every relation allowed by `cfg`, cheapest first.
///
/// Ties are broken by target reading order, then earliest operand, shorter
/// run and smaller correction.
pub fn enumerate_relations(a: &Artifact, cfg: &SearchConfig) -> Vec<Relation> {
    enumerate_relations_with(a, cfg, Parallelism::Auto)
}

pub fn enumerate_relations_with(
    a: &Artifact,
    cfg: &SearchConfig,
    par: Parallelism,
) -> Vec<Relation> {
    let l = layout(a, cfg.pitch_mm);
    let targets = target_order(a, &l);
    let m = &a.column(ColumnId::M).groups;
    let mut prefix = vec![0i64; m.len() + 1];
    for (i, g) in m.iter().enumerate() {
        prefix[i + 1] = prefix[i] + g.count() as i64;
    }
    let max_corr = cfg.max_correction_abs as i64;

    let per_target = map_range(targets.len(), par, |ti| {
        let label = &targets[ti];
        let target_count = a.group(label).map_or(0, |g| g.count()) as i64;
        let target_iv = l.interval(label).expect("layout covers every group");
        let mut out = Vec::new();
        for start in 0..m.len() {
            for run in 1..=cfg.max_run.min(m.len() - start) {
                let sum = prefix[start + run] - prefix[start];
                let correction = target_count - sum;
                if correction.abs() > max_corr {
                    continue;
                }
                let ops = &m[start..start + run];
                let alignment = covered_fraction(
                    &target_iv,
                    ops.iter()
                        .map(|g| l.interval(&g.label).expect("layout covers every group"))
                        .collect(),
                );
                if !cfg.min_alignment.accepts(alignment) {
                    continue;
                }
                let correction = correction as i32;
                out.push((
                    ti,
                    start,
                    Relation {
                        target: label.clone(),
                        target_count: target_count as u32,
                        operands: ops.iter().map(|g| g.label.clone()).collect(),
                        operand_counts: ops.iter().map(|g| g.count() as u32).collect(),
                        correction,
                        cost: cost(run, correction, cfg.correction_weight),
                        alignment,
                    },
                ));
            }
        }
        out
    });

    let mut all: Vec<(usize, usize, Relation)> = per_target.into_iter().flatten().collect();
    all.sort_by(|x, y| {
        x.2.cost
            .total_cmp(&y.2.cost)
            .then(x.0.cmp(&y.0))
            .then(x.1.cmp(&y.1))
            .then(x.2.run_length().cmp(&y.2.run_length()))
            .then(x.2.correction.cmp(&y.2.correction))
    });
    all.into_iter().map(|(_, _, r)| r).collect()
}

/// How one relation is chosen per target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoverPolicy {
    /// Cheapest relation; higher alignment breaks ties.
    Simplicity,
    /// Best-aligned relation; lower cost breaks ties.
    Alignment,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cover {
    pub policy: CoverPolicy,
    /// One relation per covered target, in target reading order.
    pub relations: Vec<Relation>,
    pub uncovered: Vec<String>,
}

impl Cover {
    pub fn total_cost(&self) -> f64 {
        self.relations.iter().map(|r| r.cost).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.uncovered.is_empty()
    }

    /// Corrections of the chosen relations, sorted descending.
    pub fn corrections(&self) -> Vec<i32> {
        let mut c: Vec<i32> = self.relations.iter().map(|r| r.correction).collect();
        c.sort_unstable_by(|x, y| y.cmp(x));
        c
    }
}

/// Picks one relation per target from a ranked list.
pub fn select_cover(ranked: &[Relation], targets: &[String], policy: CoverPolicy) -> Cover {
    const TIE: f64 = 1e-9;
    let mut relations = Vec::new();
    let mut uncovered = Vec::new();
    for t in targets {
        let mut best: Option<&Relation> = None;
        for r in ranked.iter().filter(|r| &r.target == t) {
            let better = match best {
                None => true,
                Some(b) => match policy {
                    CoverPolicy::Simplicity => {
                        r.cost < b.cost - TIE
                            || ((r.cost - b.cost).abs() <= TIE && r.alignment > b.alignment + TIE)
                    }
                    CoverPolicy::Alignment => {
                        r.alignment > b.alignment + TIE
                            || ((r.alignment - b.alignment).abs() <= TIE && r.cost < b.cost - TIE)
                    }
                },
            };
            if better {
                best = Some(r);
            }
        }
        match best {
            Some(r) => relations.push(r.clone()),
            None => uncovered.push(t.clone()),
        }
    }
    Cover {
        policy,
        relations,
        uncovered,
    }
}

/// Enumerates relations and picks one per G/D target.
pub fn cover(a: &Artifact, cfg: &SearchConfig, policy: CoverPolicy) -> Cover {
    let ranked = enumerate_relations(a, cfg);
    let targets = target_order(a, &layout(a, cfg.pitch_mm));
    select_cover(&ranked, &targets, policy)
}

/// Order in which each relation's operand counts are written.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct TallyOrdering {
    /// Targets whose operands are written bottom-to-top.
    pub reversed_targets: BTreeSet<String>,
}

impl TallyOrdering {
    /// Every relation in M-column order.
    pub fn column_order() -> Self {
        TallyOrdering::default()
    }

    /// Gd written as 7+5+5, as engraved.
    pub fn as_engraved() -> Self {
        TallyOrdering {
            reversed_targets: BTreeSet::from(["Gd".to_string()]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TallySlot {
    /// M group whose position the values occupy.
    pub label: String,
    /// (target, value) for each value written in this slot.
    pub contributions: Vec<(String, u32)>,
    pub total: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Base12Tally {
    pub slots: Vec<TallySlot>,
    pub corrections_total: i64,
    pub grand_total: i64,
    /// Labels of slots whose total is a positive multiple of 12.
    pub multiples_of_12: Vec<String>,
}

impl Base12Tally {
    pub fn totals(&self) -> Vec<u64> {
        self.slots.iter().map(|s| s.total).collect()
    }
}

/// Column sums of the relations' operand values, with each relation's values
/// written under the M positions of its operands (reversed for targets listed
/// in `ordering`).
pub fn base12_tally(
    relations: &[Relation],
    a: &Artifact,
    ordering: &TallyOrdering,
) -> Result<Base12Tally, RelationError> {
    let m = &a.column(ColumnId::M).groups;
    let mut slots: Vec<TallySlot> = m
        .iter()
        .map(|g| TallySlot {
            label: g.label.clone(),
            contributions: Vec::new(),
            total: 0,
        })
        .collect();
    let mut corrections_total = 0i64;
    for r in relations {
        let positions = r
            .operands
            .iter()
            .map(|o| {
                m.iter()
                    .position(|g| &g.label == o)
                    .ok_or_else(|| RelationError::UnknownLabel(o.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut values: Vec<u32> = positions.iter().map(|&p| m[p].count() as u32).collect();
        if ordering.reversed_targets.contains(&r.target) {
            values.reverse();
        }
        for (&p, v) in positions.iter().zip(values) {
            slots[p].contributions.push((r.target.clone(), v));
            slots[p].total += v as u64;
        }
        corrections_total += r.correction as i64;
    }
    let grand_total = slots.iter().map(|s| s.total as i64).sum::<i64>() + corrections_total;
    let multiples_of_12 = slots
        .iter()
        .filter(|s| s.total > 0 && s.total % 12 == 0)
        .map(|s| s.label.clone())
        .collect();
    Ok(Base12Tally {
        slots,
        corrections_total,
        grand_total,
        multiples_of_12,
    })
}
