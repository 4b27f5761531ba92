//! Monte-Carlo significance under a uniform null over group counts.
//!
//! A null artifact splits a fixed number of notches into a fixed group
//! structure, each group's count drawn so that every bounded composition is
//! equally likely. Samples are drawn in fixed-size chunks; chunk `i` uses the
//! ChaCha stream `i` of the seed, so results do not depend on how chunks are
//! spread over workers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::artifact::{Artifact, ColumnId};
use crate::hypotheses::penalized_cover_cost_counts;
use crate::par::{map_range, Parallelism};
use crate::relations::{AlignmentFilter, SearchConfig};

/// Samples per chunk (and per random stream).
pub const CHUNK_SIZE: usize = 1024;

/// Largest composition space `exact_pvalue_small` will enumerate.
pub const MAX_EXACT_COMPOSITIONS: u128 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NullModelError {
    #[error("infeasible constraints: {0}")]
    Infeasible(String),
    #[error("composition count overflows 128 bits")]
    CountOverflow,
    #[error("{count} compositions exceed the exact-enumeration limit of {limit}; use the Monte-Carlo estimate")]
    TooLarge { count: u128, limit: u128 },
    #[error("unknown statistic {0:?} (expected one of equal_GD_sums, sums_divisible_12, slide_rule_coverage_at_cost)")]
    UnknownStatistic(String),
    #[error("at least one sample is required")]
    NoSamples,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NullConstraints {
    pub total_notches: u32,
    /// Group count for M, G and D.
    pub groups_per_column: [usize; 3],
    pub min_group: u32,
    pub max_group: u32,
}

impl Default for NullConstraints {
    fn default() -> Self {
        NullConstraints {
            total_notches: 168,
            groups_per_column: [8, 4, 4],
            min_group: 1,
            max_group: 25,
        }
    }
}

impl NullConstraints {
    pub fn groups(&self) -> usize {
        self.groups_per_column.iter().sum()
    }

    pub fn validate(&self) -> Result<(), NullModelError> {
        let k = self.groups() as u64;
        let total = self.total_notches as u64;
        if self.min_group < 1 {
            return Err(NullModelError::Infeasible(
                "min_group must be at least 1".into(),
            ));
        }
        if self.min_group > self.max_group {
            return Err(NullModelError::Infeasible(format!(
                "min_group {} exceeds max_group {}",
                self.min_group, self.max_group
            )));
        }
        if k * (self.min_group as u64) > total || total > k * (self.max_group as u64) {
            return Err(NullModelError::Infeasible(format!(
                "{total} notches cannot fill {k} groups of {}..={} notches",
                self.min_group, self.max_group
            )));
        }
        Ok(())
    }
}

/// Uniform sampler over bounded compositions.
#[derive(Debug, Clone)]
pub struct CompositionSampler {
    constraints: NullConstraints,
    // ways[j][s]: compositions of s into j bounded parts
    ways: Vec<Vec<u128>>,
}

impl CompositionSampler {
    pub fn new(c: &NullConstraints) -> Result<Self, NullModelError> {
        c.validate()?;
        let k = c.groups();
        let total = c.total_notches as usize;
        let (lo, hi) = (c.min_group as usize, c.max_group as usize);
        let mut ways = vec![vec![0u128; total + 1]; k + 1];
        ways[0][0] = 1;
        for j in 1..=k {
            for s in 0..=total {
                let mut acc: u128 = 0;
                for v in lo..=hi.min(s) {
                    acc = acc
                        .checked_add(ways[j - 1][s - v])
                        .ok_or(NullModelError::CountOverflow)?;
                }
                ways[j][s] = acc;
            }
        }
        Ok(CompositionSampler {
            constraints: c.clone(),
            ways,
        })
    }

    /// Number of admissible compositions.
    pub fn count(&self) -> u128 {
        self.ways[self.constraints.groups()][self.constraints.total_notches as usize]
    }

    pub fn constraints(&self) -> &NullConstraints {
        &self.constraints
    }

    /// One composition, uniformly at random.
    pub fn sample_counts<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u32> {
        let k = self.constraints.groups();
        let mut remaining = self.constraints.total_notches as usize;
        let mut out = Vec::with_capacity(k);
        for j in (1..=k).rev() {
            let mut r = rng.random_range(0..self.ways[j][remaining]);
            let mut v = self.constraints.min_group as usize;
            loop {
                let w = self.ways[j - 1][remaining - v];
                if r < w {
                    break;
                }
                r -= w;
                v += 1;
            }
            out.push(v as u32);
            remaining -= v;
        }
        out
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Artifact {
        self.to_artifact(&self.sample_counts(rng))
    }

    fn to_artifact(&self, counts: &[u32]) -> Artifact {
        let [m, g, _] = self.constraints.groups_per_column;
        Artifact::from_counts("null", &counts[..m], &counts[m..m + g], &counts[m + g..])
            .expect("compositions respect min_group >= 1")
    }

    /// Calls `f` on every admissible composition in lexicographic order.
    pub fn for_each_composition(&self, mut f: impl FnMut(&[u32])) {
        let mut buf = Vec::with_capacity(self.constraints.groups());
        self.walk(
            self.constraints.groups(),
            self.constraints.total_notches as usize,
            &mut buf,
            &mut f,
        );
    }

    fn walk(&self, j: usize, s: usize, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if j == 0 {
            f(buf);
            return;
        }
        let (lo, hi) = (
            self.constraints.min_group as usize,
            self.constraints.max_group as usize,
        );
        for v in lo..=hi.min(s) {
            if self.ways[j - 1][s - v] == 0 {
                continue;
            }
            buf.push(v as u32);
            self.walk(j - 1, s - v, buf, f);
            buf.pop();
        }
    }
}

pub fn sample_null_artifact<R: Rng + ?Sized>(
    rng: &mut R,
    c: &NullConstraints,
) -> Result<Artifact, NullModelError> {
    Ok(CompositionSampler::new(c)?.sample(rng))
}

/// A yes/no property of artifacts: does this artifact look at least as
/// extreme as the observed one?
pub trait Statistic: Sync {
    fn name(&self) -> &str;
    fn holds(&self, a: &Artifact) -> bool;
}

/// A statistic built from a closure.
pub struct Predicate<F> {
    name: String,
    f: F,
}

pub fn predicate<F>(name: impl Into<String>, f: F) -> Predicate<F>
where
    F: Fn(&Artifact) -> bool + Sync,
{
    Predicate {
        name: name.into(),
        f,
    }
}

impl<F: Fn(&Artifact) -> bool + Sync> Statistic for Predicate<F> {
    fn name(&self) -> &str {
        &self.name
    }

    fn holds(&self, a: &Artifact) -> bool {
        (self.f)(a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StatisticKind {
    /// 1 when the G and D columns have equal sums, else 0. Extreme: ≥ observed.
    EqualGdSums,
    /// Number of columns whose sum is a multiple of 12. Extreme: ≥ observed.
    SumsDivisible12,
    /// Cheapest slide-rule cover cost, alignment ignored. Extreme: ≤ observed.
    SlideRuleCoverageAtCost,
}

impl StatisticKind {
    pub const ALL: [StatisticKind; 3] = [
        StatisticKind::EqualGdSums,
        StatisticKind::SumsDivisible12,
        StatisticKind::SlideRuleCoverageAtCost,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatisticKind::EqualGdSums => "equal_GD_sums",
            StatisticKind::SumsDivisible12 => "sums_divisible_12",
            StatisticKind::SlideRuleCoverageAtCost => "slide_rule_coverage_at_cost",
        }
    }

    pub fn from_name(name: &str) -> Result<Self, NullModelError> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| NullModelError::UnknownStatistic(name.to_string()))
    }

    pub fn value(self, a: &Artifact) -> f64 {
        match self {
            StatisticKind::EqualGdSums => {
                (a.column(ColumnId::G).sum() == a.column(ColumnId::D).sum()) as u8 as f64
            }
            StatisticKind::SumsDivisible12 => a
                .columns()
                .iter()
                .filter(|c| !c.groups.is_empty() && c.sum() % 12 == 0)
                .count() as f64,
            StatisticKind::SlideRuleCoverageAtCost => {
                let targets: Vec<u32> = [ColumnId::G, ColumnId::D]
                    .iter()
                    .flat_map(|&c| a.column(c).counts())
                    .collect();
                penalized_cover_cost_counts(
                    &a.column(ColumnId::M).counts(),
                    &targets,
                    &coverage_config(),
                )
            }
        }
    }

    fn at_least_as_extreme(self, value: f64, observed: f64) -> bool {
        match self {
            StatisticKind::SlideRuleCoverageAtCost => value <= observed + 1e-9,
            _ => value >= observed - 1e-9,
        }
    }
}

/// Counts-only null artifacts have no meaningful geometry, so coverage is
/// scored on arithmetic alone.
fn coverage_config() -> SearchConfig {
    SearchConfig {
        min_alignment: AlignmentFilter::Ignore,
        ..SearchConfig::default()
    }
}

/// A named statistic with its value on the observed artifact.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NamedStatistic {
    pub kind: StatisticKind,
    pub observed: f64,
}

impl NamedStatistic {
    pub fn new(kind: StatisticKind, observed: &Artifact) -> Self {
        NamedStatistic {
            kind,
            observed: kind.value(observed),
        }
    }

    pub fn by_name(name: &str, observed: &Artifact) -> Result<Self, NullModelError> {
        Ok(Self::new(StatisticKind::from_name(name)?, observed))
    }
}

impl Statistic for NamedStatistic {
    fn name(&self) -> &str {
        self.kind.name()
    }

    fn holds(&self, a: &Artifact) -> bool {
        self.kind
            .at_least_as_extreme(self.kind.value(a), self.observed)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PValueEstimate {
    pub statistic: String,
    pub estimate: f64,
    pub hits: u64,
    pub n_samples: u64,
    pub seed: u64,
    pub stderr: f64,
}

/// Fraction of `n` seeded null samples on which `stat` holds.
pub fn estimate_pvalue(
    stat: &dyn Statistic,
    c: &NullConstraints,
    n: u64,
    seed: u64,
    par: Parallelism,
) -> Result<PValueEstimate, NullModelError> {
    if n == 0 {
        return Err(NullModelError::NoSamples);
    }
    let sampler = CompositionSampler::new(c)?;
    let chunks = n.div_ceil(CHUNK_SIZE as u64) as usize;
    let hits: u64 = map_range(chunks, par, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let len = (n - (i * CHUNK_SIZE) as u64).min(CHUNK_SIZE as u64);
        (0..len)
            .filter(|_| stat.holds(&sampler.sample(&mut rng)))
            .count() as u64
    })
    .into_iter()
    .sum();
    let p = hits as f64 / n as f64;
    Ok(PValueEstimate {
        statistic: stat.name().to_string(),
        estimate: p,
        hits,
        n_samples: n,
        seed,
        stderr: (p * (1.0 - p) / n as f64).sqrt(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactPValue {
    pub numerator: u128,
    pub denominator: u128,
}

impl ExactPValue {
    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

/// Exact probability by enumerating every composition.
pub fn exact_pvalue_small(
    stat: &dyn Statistic,
    c: &NullConstraints,
) -> Result<ExactPValue, NullModelError> {
    let sampler = CompositionSampler::new(c)?;
    let count = sampler.count();
    if count > MAX_EXACT_COMPOSITIONS {
        return Err(NullModelError::TooLarge {
            count,
            limit: MAX_EXACT_COMPOSITIONS,
        });
    }
    let mut hits = 0u128;
    sampler.for_each_composition(|counts| {
        if stat.holds(&sampler.to_artifact(counts)) {
            hits += 1;
        }
    });
    Ok(ExactPValue {
        numerator: hits,
        denominator: count,
    })
}
