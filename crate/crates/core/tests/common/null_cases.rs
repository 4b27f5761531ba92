use ishango::artifact::MeVariant;
use ishango::data;
use ishango::null_model::{NamedStatistic, NullConstraints, StatisticKind};

/// Statistic, constraint set small enough to enumerate, and sample size.
pub fn enumerable_cases() -> Vec<(NamedStatistic, NullConstraints, u64)> {
    vec![
        (
            NamedStatistic::new(StatisticKind::EqualGdSums, &data::ishango(MeVariant::Me10)),
            NullConstraints {
                total_notches: 12,
                groups_per_column: [2, 1, 1],
                min_group: 1,
                max_group: 6,
            },
            4000,
        ),
        (
            NamedStatistic::new(
                StatisticKind::SumsDivisible12,
                &data::ishango(MeVariant::Me10),
            ),
            NullConstraints {
                total_notches: 36,
                groups_per_column: [3, 2, 2],
                min_group: 1,
                max_group: 12,
            },
            4000,
        ),
        (
            NamedStatistic {
                kind: StatisticKind::SlideRuleCoverageAtCost,
                observed: 4.0,
            },
            NullConstraints {
                total_notches: 20,
                groups_per_column: [3, 1, 1],
                min_group: 1,
                max_group: 8,
            },
            1000,
        ),
    ]
}
