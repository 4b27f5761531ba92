//! Analysis toolkit for the Ishango bone.
//!
//! The bundled dataset describes the bone's three columns of notch groups.
//! On top of it the crate offers an s/m/L schema language for notch lengths,
//! a search for slide-rule relations between columns, scorers for competing
//! readings of the bone, a Monte-Carlo null model and a data-driven engine
//! for mixed-radix number-word systems.
//!
//! ```
//! use ishango::{data, MeVariant, ColumnId};
//!
//! let bone = data::ishango(MeVariant::Me10);
//! assert_eq!(bone.column(ColumnId::G).sum(), 60);
//! assert_eq!(bone.total_notches(), 168);
//! ```

pub mod artifact;
pub mod data;
pub mod hypotheses;
pub mod null_model;
pub mod numerals;
pub mod par;
pub mod relations;
pub mod render;
pub mod schema;

use thiserror::Error;

pub use artifact::{
    column_sum, group_counts, layout, load_artifact, Artifact, ArtifactError, Column, ColumnId,
    Interval, Layout, MeVariant, Notch, NotchGroup,
};
pub use hypotheses::{
    score_all, score_decimal, score_duplication, score_lunar, score_prime, score_slide_rule,
    HypothesisName, HypothesisScore,
};
pub use null_model::{
    estimate_pvalue, exact_pvalue_small, sample_null_artifact, NamedStatistic, NullConstraints,
    NullModelError, PValueEstimate, Statistic, StatisticKind,
};
pub use numerals::NumeralError;
pub use par::Parallelism;
pub use relations::{
    alignment_score, base12_tally, enumerate_relations, relation_cost, verify_relation,
    AlignmentFilter, Base12Tally, Cover, CoverPolicy, Relation, RelationError, SearchConfig,
    TallyOrdering,
};
pub use render::{render_artifact, RenderMode};
pub use schema::{
    classify_notches, match_schema, parse_schema, render_schema, ClassifiedGroup, ClassifyParams,
    LengthClass, Schema, SchemaError, SchemaMatch,
};

/// Any error raised by this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Artifact(#[from] ArtifactError),
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    NullModel(#[from] NullModelError),
    #[error(transparent)]
    Numeral(#[from] NumeralError),
}
