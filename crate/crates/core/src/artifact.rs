//! The bone as structured data: three columns of notch groups, each notch
//! with whatever geometry was measured.
//!
//! Artifacts are validated on construction and immutable afterwards. The
//! Me group is the only place where the two readings of the bone differ:
//! under [`MeVariant::Me9`] its trailing interrupted notch is dropped and the
//! vertical space it occupied is handed to the gap before the next group.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Notch spacing assumed when a group carries no per-notch gaps.
pub const DEFAULT_PITCH_MM: f64 = 2.5;

/// Smallest vertical extent given to any group, so intervals are never empty.
pub const MIN_EXTENT_MM: f64 = 1.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArtifactError {
    #[error("malformed artifact document at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid group {group}: {message}")]
    InvalidGroup { group: String, message: String },
    #[error("invalid artifact: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ColumnId {
    M,
    G,
    D,
}

impl ColumnId {
    pub const ALL: [ColumnId; 3] = [ColumnId::M, ColumnId::G, ColumnId::D];

    pub fn letter(self) -> char {
        match self {
            ColumnId::M => 'M',
            ColumnId::G => 'G',
            ColumnId::D => 'D',
        }
    }

    fn index(self) -> usize {
        match self {
            ColumnId::M => 0,
            ColumnId::G => 1,
            ColumnId::D => 2,
        }
    }
}

impl fmt::Display for ColumnId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for ColumnId {
    type Err = ArtifactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "M" | "m" => Ok(ColumnId::M),
            "G" | "g" => Ok(ColumnId::G),
            "D" | "d" => Ok(ColumnId::D),
            other => Err(ArtifactError::Invalid(format!(
                "unknown column id {other:?}"
            ))),
        }
    }
}

/// Which reading of the fifth M group is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MeVariant {
    /// The interrupted tenth notch is treated as an artefact.
    Me9,
    /// The interrupted tenth notch is counted.
    Me10,
}

impl fmt::Display for MeVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeVariant::Me9 => f.write_str("Me9"),
            MeVariant::Me10 => f.write_str("Me10"),
        }
    }
}

impl FromStr for MeVariant {
    type Err = ArtifactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "me9" | "9" => Ok(MeVariant::Me9),
            "me10" | "10" => Ok(MeVariant::Me10),
            other => Err(ArtifactError::Invalid(format!(
                "unknown Me variant {other:?} (expected me9 or me10)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Notch {
    /// Tip-to-tip length; `None` where it was never measured.
    pub length_mm: Option<f64>,
    /// 0 is horizontal, positive is upward reading right to left.
    pub orientation_deg: Option<f64>,
    pub curvature_note: Option<String>,
    pub interrupted: bool,
    pub damaged: bool,
}

impl Notch {
    pub fn with_length(length_mm: f64) -> Self {
        Notch {
            length_mm: Some(length_mm),
            ..Notch::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NotchGroup {
    pub label: String,
    /// Top to bottom.
    pub notches: Vec<Notch>,
    /// Vertical distance from the previous group (or the bone edge).
    pub gap_before_mm: f64,
    /// Vertical separation between consecutive notches, when measured.
    pub intra_gaps_mm: Option<Vec<f64>>,
    /// Measured vertical range of the whole group.
    pub extent_mm: Option<f64>,
}

impl NotchGroup {
    /// A group of `count` unmeasured notches.
    pub fn counts_only(label: impl Into<String>, count: usize) -> Self {
        NotchGroup {
            label: label.into(),
            notches: vec![Notch::default(); count],
            gap_before_mm: 0.0,
            intra_gaps_mm: None,
            extent_mm: None,
        }
    }

    pub fn count(&self) -> usize {
        self.notches.len()
    }

    /// All notch lengths, or `None` if any notch is unmeasured.
    pub fn lengths(&self) -> Option<Vec<f64>> {
        self.notches.iter().map(|n| n.length_mm).collect()
    }

    /// Vertical extent used by the layout.
    pub fn extent(&self, pitch_mm: f64) -> f64 {
        let raw = match (self.extent_mm, &self.intra_gaps_mm) {
            (Some(e), _) => e,
            (None, Some(gaps)) => gaps.iter().sum(),
            (None, None) => self.count().saturating_sub(1) as f64 * pitch_mm,
        };
        raw.max(MIN_EXTENT_MM)
    }

    /// Offset of each notch from the top of the group, in mm.
    pub fn notch_offsets(&self, pitch_mm: f64) -> Vec<f64> {
        let n = self.count();
        if let (None, Some(gaps)) = (self.extent_mm, &self.intra_gaps_mm) {
            let mut y = 0.0;
            let mut out = Vec::with_capacity(n);
            out.push(0.0);
            for g in gaps {
                y += g;
                out.push(y);
            }
            return out;
        }
        if n <= 1 {
            return vec![0.0; n];
        }
        let step = self.extent(pitch_mm) / (n - 1) as f64;
        (0..n).map(|i| i as f64 * step).collect()
    }

    fn validate(&self, column: ColumnId) -> Result<(), ArtifactError> {
        let bad = |message: String| ArtifactError::InvalidGroup {
            group: self.label.clone(),
            message,
        };
        if !self.label.starts_with(column.letter()) || self.label.len() < 2 {
            return Err(bad(format!(
                "label must start with the column letter {}",
                column.letter()
            )));
        }
        if self.notches.is_empty() {
            return Err(bad("a group must hold at least one notch".into()));
        }
        if !(self.gap_before_mm.is_finite() && self.gap_before_mm >= 0.0) {
            return Err(bad(format!(
                "gap_before_mm must be non-negative, got {}",
                self.gap_before_mm
            )));
        }
        if let Some(e) = self.extent_mm {
            if !(e.is_finite() && e >= 0.0) {
                return Err(bad(format!("extent_mm must be non-negative, got {e}")));
            }
        }
        if let Some(gaps) = &self.intra_gaps_mm {
            if gaps.len() + 1 != self.notches.len() {
                return Err(bad(format!(
                    "intra_gaps_mm has {} entries for {} notches",
                    gaps.len(),
                    self.notches.len()
                )));
            }
            if gaps.iter().any(|g| !(g.is_finite() && *g >= 0.0)) {
                return Err(bad("intra_gaps_mm entries must be non-negative".into()));
            }
        }
        for (i, notch) in self.notches.iter().enumerate() {
            if let Some(len) = notch.length_mm {
                if !(len.is_finite() && len > 0.0) {
                    return Err(bad(format!(
                        "notch {} has non-positive length {len}",
                        i + 1
                    )));
                }
            }
            if let Some(o) = notch.orientation_deg {
                if !(-90.0..=90.0).contains(&o) {
                    return Err(bad(format!(
                        "notch {} orientation {o} outside [-90, 90]",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub id: ColumnId,
    pub groups: Vec<NotchGroup>,
}

impl Column {
    pub fn sum(&self) -> usize {
        self.groups.iter().map(NotchGroup::count).sum()
    }

    pub fn counts(&self) -> Vec<u32> {
        self.groups.iter().map(|g| g.count() as u32).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    name: String,
    me_variant: MeVariant,
    columns: [Column; 3],
}

impl Artifact {
    /// Builds and validates an artifact from its three columns.
    ///
    /// The groups are taken as given; the Me variant is recorded, not applied.
    pub fn new(
        name: impl Into<String>,
        me_variant: MeVariant,
        m: Vec<NotchGroup>,
        g: Vec<NotchGroup>,
        d: Vec<NotchGroup>,
    ) -> Result<Self, ArtifactError> {
        let columns = [
            Column {
                id: ColumnId::M,
                groups: m,
            },
            Column {
                id: ColumnId::G,
                groups: g,
            },
            Column {
                id: ColumnId::D,
                groups: d,
            },
        ];
        let mut seen = HashSet::new();
        for column in &columns {
            for group in &column.groups {
                group.validate(column.id)?;
                if !seen.insert(group.label.clone()) {
                    return Err(ArtifactError::InvalidGroup {
                        group: group.label.clone(),
                        message: "duplicate group label".into(),
                    });
                }
            }
        }
        Ok(Artifact {
            name: name.into(),
            me_variant,
            columns,
        })
    }

    /// An artifact with group counts only and no geometry; labels are the
    /// column letter followed by a, b, c, ...
    pub fn from_counts(
        name: impl Into<String>,
        m: &[u32],
        g: &[u32],
        d: &[u32],
    ) -> Result<Self, ArtifactError> {
        let build = |col: ColumnId, counts: &[u32]| -> Vec<NotchGroup> {
            counts
                .iter()
                .enumerate()
                .map(|(i, &c)| NotchGroup::counts_only(group_label(col, i), c as usize))
                .collect()
        };
        Artifact::new(
            name,
            MeVariant::Me10,
            build(ColumnId::M, m),
            build(ColumnId::G, g),
            build(ColumnId::D, d),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn me_variant(&self) -> MeVariant {
        self.me_variant
    }

    pub fn columns(&self) -> &[Column; 3] {
        &self.columns
    }

    pub fn column(&self, id: ColumnId) -> &Column {
        &self.columns[id.index()]
    }

    pub fn group(&self, label: &str) -> Option<&NotchGroup> {
        self.columns
            .iter()
            .flat_map(|c| c.groups.iter())
            .find(|g| g.label == label)
    }

    /// Column and position within the column of a group.
    pub fn locate(&self, label: &str) -> Option<(ColumnId, usize)> {
        self.columns.iter().find_map(|c| {
            c.groups
                .iter()
                .position(|g| g.label == label)
                .map(|i| (c.id, i))
        })
    }

    pub fn total_notches(&self) -> usize {
        self.columns.iter().map(Column::sum).sum()
    }

    /// Serializes to the artifact document format.
    pub fn to_json(&self) -> String {
        let doc = ArtifactDocument::from(self);
        let mut out = serde_json::to_string_pretty(&doc).expect("artifact documents serialize");
        out.push('\n');
        out
    }
}

/// `M`, 0 → `Ma`; past `z` the suffix continues as `aa`, `ab`, ...
pub fn group_label(column: ColumnId, index: usize) -> String {
    let mut suffix = Vec::new();
    let mut i = index;
    loop {
        suffix.push((b'a' + (i % 26) as u8) as char);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    suffix.reverse();
    let mut label = String::with_capacity(suffix.len() + 1);
    label.push(column.letter());
    label.extend(suffix);
    label
}

/// Sum of notch counts over a column.
pub fn column_sum(a: &Artifact, column: ColumnId) -> usize {
    a.column(column).sum()
}

/// Notch count per group, top to bottom.
pub fn group_counts(a: &Artifact, column: ColumnId) -> Vec<u32> {
    a.column(column).counts()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub top_mm: f64,
    pub bottom_mm: f64,
}

impl Interval {
    pub fn height(&self) -> f64 {
        self.bottom_mm - self.top_mm
    }

    pub fn overlap(&self, other: &Interval) -> f64 {
        (self.bottom_mm.min(other.bottom_mm) - self.top_mm.max(other.top_mm)).max(0.0)
    }
}

/// Vertical placement of every group, measured from the top edge of the bone.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    pitch_mm: f64,
    intervals: BTreeMap<String, Interval>,
    order: [Vec<String>; 3],
}

impl Layout {
    pub fn interval(&self, label: &str) -> Option<Interval> {
        self.intervals.get(label).copied()
    }

    pub fn pitch_mm(&self) -> f64 {
        self.pitch_mm
    }

    /// Intervals of one column, top to bottom.
    pub fn column(&self, id: ColumnId) -> Vec<(&str, Interval)> {
        self.order[id.index()]
            .iter()
            .map(|l| (l.as_str(), self.intervals[l]))
            .collect()
    }

    /// Lowest point reached by any group.
    pub fn bottom_mm(&self) -> f64 {
        self.intervals
            .values()
            .map(|i| i.bottom_mm)
            .fold(0.0, f64::max)
    }
}

/// Stacks each column's groups from the top edge: every group starts
/// `gap_before_mm` below the end of the previous one.
pub fn layout(a: &Artifact, pitch_mm: f64) -> Layout {
    let pitch_mm = if pitch_mm > 0.0 && pitch_mm.is_finite() {
        pitch_mm
    } else {
        DEFAULT_PITCH_MM
    };
    let mut intervals = BTreeMap::new();
    let mut order: [Vec<String>; 3] = Default::default();
    for column in a.columns() {
        let mut y = 0.0;
        for group in &column.groups {
            y += group.gap_before_mm;
            let top = y;
            y += group.extent(pitch_mm);
            intervals.insert(
                group.label.clone(),
                Interval {
                    top_mm: top,
                    bottom_mm: y,
                },
            );
            order[column.id.index()].push(group.label.clone());
        }
    }
    Layout {
        pitch_mm,
        intervals,
        order,
    }
}

/// Parses and validates an artifact document, applying `variant` (or the
/// document's own `me_variant` when `None`).
pub fn load_artifact(source: &str, variant: Option<MeVariant>) -> Result<Artifact, ArtifactError> {
    let doc: ArtifactDocument = serde_json::from_str(source).map_err(|e| ArtifactError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let variant = variant.unwrap_or(doc.me_variant);
    let mut columns: [Option<Vec<NotchGroup>>; 3] = [None, None, None];
    for col in doc.columns {
        let slot = &mut columns[col.id.index()];
        if slot.is_some() {
            return Err(ArtifactError::Invalid(format!(
                "column {} appears twice",
                col.id
            )));
        }
        *slot = Some(col.groups.into_iter().map(NotchGroup::from).collect());
    }
    let [m, g, d] = columns;
    let mut m = m.ok_or_else(|| ArtifactError::Invalid("column M is missing".into()))?;
    let g = g.ok_or_else(|| ArtifactError::Invalid("column G is missing".into()))?;
    let d = d.ok_or_else(|| ArtifactError::Invalid("column D is missing".into()))?;
    if variant == MeVariant::Me9 {
        drop_interrupted_me_notch(&mut m);
    }
    Artifact::new(doc.name, variant, m, g, d)
}

fn drop_interrupted_me_notch(m: &mut [NotchGroup]) {
    let Some(idx) = m.iter().position(|g| g.label == "Me") else {
        return;
    };
    let me = &mut m[idx];
    if me.count() < 2 || !me.notches.last().is_some_and(|n| n.interrupted) {
        return;
    }
    me.notches.pop();
    let freed = me
        .intra_gaps_mm
        .as_mut()
        .and_then(|gaps| gaps.pop())
        .unwrap_or(0.0);
    if let Some(next) = m.get_mut(idx + 1) {
        next.gap_before_mm += freed;
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArtifactDocument {
    name: String,
    me_variant: MeVariant,
    columns: Vec<ColumnDocument>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColumnDocument {
    id: ColumnId,
    groups: Vec<GroupDocument>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDocument {
    label: String,
    gap_before_mm: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    extent_mm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    intra_gaps_mm: Option<Vec<f64>>,
    notches: Vec<NotchDocument>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NotchDocument {
    len_mm: Option<f64>,
    orient_deg: Option<f64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    interrupted: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    damaged: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

impl From<GroupDocument> for NotchGroup {
    fn from(g: GroupDocument) -> Self {
        NotchGroup {
            label: g.label,
            gap_before_mm: g.gap_before_mm,
            extent_mm: g.extent_mm,
            intra_gaps_mm: g.intra_gaps_mm,
            notches: g
                .notches
                .into_iter()
                .map(|n| Notch {
                    length_mm: n.len_mm,
                    orientation_deg: n.orient_deg,
                    curvature_note: n.note,
                    interrupted: n.interrupted,
                    damaged: n.damaged,
                })
                .collect(),
        }
    }
}

impl From<&Artifact> for ArtifactDocument {
    fn from(a: &Artifact) -> Self {
        ArtifactDocument {
            name: a.name.clone(),
            me_variant: a.me_variant,
            columns: a
                .columns
                .iter()
                .map(|c| ColumnDocument {
                    id: c.id,
                    groups: c
                        .groups
                        .iter()
                        .map(|g| GroupDocument {
                            label: g.label.clone(),
                            gap_before_mm: g.gap_before_mm,
                            extent_mm: g.extent_mm,
                            intra_gaps_mm: g.intra_gaps_mm.clone(),
                            notches: g
                                .notches
                                .iter()
                                .map(|n| NotchDocument {
                                    len_mm: n.length_mm,
                                    orient_deg: n.orientation_deg,
                                    interrupted: n.interrupted,
                                    damaged: n.damaged,
                                    note: n.curvature_note.clone(),
                                })
                                .collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    fn ishango(v: MeVariant) -> Artifact {
        load_artifact(data::ISHANGO_JSON, Some(v)).unwrap()
    }

    #[test]
    fn bundled_counts_per_variant() {
        let me10 = ishango(MeVariant::Me10);
        let me9 = ishango(MeVariant::Me9);
        assert_eq!(group_counts(&me10, ColumnId::M), [3, 6, 4, 8, 10, 5, 5, 7]);
        assert_eq!(group_counts(&me9, ColumnId::M), [3, 6, 4, 8, 9, 5, 5, 7]);
        assert_eq!(group_counts(&me10, ColumnId::G), [11, 13, 17, 19]);
        assert_eq!(group_counts(&me10, ColumnId::D), [11, 21, 19, 9]);
        assert_eq!(column_sum(&me10, ColumnId::M), 48);
        assert_eq!(column_sum(&me9, ColumnId::M), 47);
        assert_eq!(column_sum(&me9, ColumnId::G), 60);
        assert_eq!(column_sum(&me9, ColumnId::D), 60);
        assert_eq!(me10.total_notches(), 168);
        assert_eq!(me9.total_notches(), 167);
        assert_eq!(60 % 12, 0);
        assert_eq!(column_sum(&me10, ColumnId::M) % 12, 0);
    }

    #[test]
    fn me9_hands_the_dropped_gap_to_mf() {
        let me10 = ishango(MeVariant::Me10);
        let me9 = ishango(MeVariant::Me9);
        assert_eq!(me10.group("Mf").unwrap().gap_before_mm, 13.0);
        assert_eq!(me9.group("Mf").unwrap().gap_before_mm, 16.0);
        let (l9, l10) = (layout(&me9, 2.5), layout(&me10, 2.5));
        assert_eq!(l9.interval("Mf"), l10.interval("Mf"));
    }

    #[test]
    fn damaged_mf_notch_is_kept() {
        let me9 = ishango(MeVariant::Me9);
        let mf = me9.group("Mf").unwrap();
        assert_eq!(mf.count(), 5);
        assert!(mf.notches[0].damaged);
    }

    #[test]
    fn empty_group_is_rejected() {
        let doc = r#"{"name":"x","me_variant":"Me10","columns":[
            {"id":"M","groups":[{"label":"Ma","gap_before_mm":1.0,"notches":[]}]},
            {"id":"G","groups":[]},{"id":"D","groups":[]}]}"#;
        match load_artifact(doc, None) {
            Err(ArtifactError::InvalidGroup { group, .. }) => assert_eq!(group, "Ma"),
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_document_reports_line() {
        let doc = "{\n  \"name\": \"x\",\n  \"me_variant\": \"Me10\",\n  \"columns\": [ oops ]\n}";
        match load_artifact(doc, None) {
            Err(ArtifactError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn intra_gap_count_must_match() {
        let mut g = NotchGroup::counts_only("Ma", 3);
        g.intra_gaps_mm = Some(vec![2.0]);
        let err = Artifact::new("x", MeVariant::Me10, vec![g], vec![], vec![]).unwrap_err();
        assert!(matches!(err, ArtifactError::InvalidGroup { .. }));
    }

    #[test]
    fn orientation_bounds() {
        let mut g = NotchGroup::counts_only("Ma", 1);
        g.notches[0].orientation_deg = Some(91.0);
        assert!(Artifact::new("x", MeVariant::Me10, vec![g], vec![], vec![]).is_err());
    }

    #[test]
    fn label_must_carry_column_letter() {
        let g = NotchGroup::counts_only("Ga", 2);
        assert!(Artifact::new("x", MeVariant::Me10, vec![g], vec![], vec![]).is_err());
    }

    #[test]
    fn layout_pitch_fallback() {
        let mut g = NotchGroup::counts_only("Ma", 3);
        g.gap_before_mm = 20.0;
        let a = Artifact::new("x", MeVariant::Me10, vec![g], vec![], vec![]).unwrap();
        let iv = layout(&a, 2.5).interval("Ma").unwrap();
        assert_eq!((iv.top_mm, iv.bottom_mm), (20.0, 25.0));
    }

    #[test]
    fn single_notch_gets_extent_floor() {
        let a = Artifact::from_counts("x", &[1], &[], &[]).unwrap();
        let iv = layout(&a, 2.5).interval("Ma").unwrap();
        assert_eq!(iv.height(), 1.0);
    }

    #[test]
    fn measured_extent_wins() {
        let a = ishango(MeVariant::Me10);
        assert_eq!(layout(&a, 2.5).interval("Db").unwrap().height(), 40.0);
    }

    #[test]
    fn layout_columns_are_ordered() {
        for v in [MeVariant::Me9, MeVariant::Me10] {
            let l = layout(&ishango(v), DEFAULT_PITCH_MM);
            for id in ColumnId::ALL {
                let col = l.column(id);
                for (_, iv) in &col {
                    assert!(iv.bottom_mm > iv.top_mm);
                }
                for w in col.windows(2) {
                    assert!(w[0].1.bottom_mm <= w[1].1.top_mm);
                }
            }
        }
    }

    #[test]
    fn reserialization_is_stable() {
        for v in [MeVariant::Me9, MeVariant::Me10] {
            let a = ishango(v);
            let again = load_artifact(&a.to_json(), None).unwrap();
            assert_eq!(a, again);
            assert_eq!(again.to_json(), a.to_json());
        }
    }

    #[test]
    fn labels_past_z() {
        assert_eq!(group_label(ColumnId::M, 0), "Ma");
        assert_eq!(group_label(ColumnId::G, 25), "Gz");
        assert_eq!(group_label(ColumnId::D, 26), "Daa");
    }
}
