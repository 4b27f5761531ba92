//! s/m/L notch-length schemas.
//!
//! A schema such as `2m+((7L)+(3L+2m)+(1s+3m+1s))` describes a group as runs
//! of small, medium and long notches. Parentheses are spacing claims: each
//! parenthesised run is expected to be set apart vertically from its
//! neighbours.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! schema := term ('+' term)*
//! term   := INT CLASS ['(?)'] | '(' schema ')'
//! CLASS  := 's' | 'm' | 'L'
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::artifact::NotchGroup;

pub const DEFAULT_GAP_LEN_MM: f64 = 2.0;
pub const DEFAULT_GAP_VERT_MM: f64 = 3.0;

// Relative slack on threshold comparisons so that scaling lengths and
// thresholds together never flips a boundary through rounding.
const REL_EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SchemaError {
    #[error("schema parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("group {group} has unmeasured notch {index}; lengths are required to classify")]
    UnmeasuredNotch { group: String, index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LengthClass {
    #[serde(rename = "s")]
    Small,
    #[serde(rename = "m")]
    Medium,
    #[serde(rename = "L")]
    Long,
}

impl LengthClass {
    pub fn letter(self) -> char {
        match self {
            LengthClass::Small => 's',
            LengthClass::Medium => 'm',
            LengthClass::Long => 'L',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        match c {
            's' => Some(LengthClass::Small),
            'm' => Some(LengthClass::Medium),
            'L' => Some(LengthClass::Long),
            _ => None,
        }
    }
}

impl fmt::Display for LengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Leaf {
    pub count: u32,
    pub class: LengthClass,
    pub uncertain: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Leaf(Leaf),
    Group(Schema),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schema {
    pub terms: Vec<Term>,
}

impl Schema {
    /// Number of notches the schema describes.
    pub fn total(&self) -> usize {
        self.terms
            .iter()
            .map(|t| match t {
                Term::Leaf(l) => l.count as usize,
                Term::Group(s) => s.total(),
            })
            .sum()
    }

    /// Leaves in reading order, each with the offset of its first notch.
    pub fn leaves(&self) -> Vec<(usize, Leaf)> {
        let mut out = Vec::new();
        self.collect_leaves(0, &mut out);
        out
    }

    fn collect_leaves(&self, mut offset: usize, out: &mut Vec<(usize, Leaf)>) -> usize {
        for t in &self.terms {
            match t {
                Term::Leaf(l) => {
                    out.push((offset, *l));
                    offset += l.count as usize;
                }
                Term::Group(s) => offset = s.collect_leaves(offset, out),
            }
        }
        offset
    }

    /// One class per notch, in order.
    pub fn class_sequence(&self) -> Vec<LengthClass> {
        self.leaves()
            .into_iter()
            .flat_map(|(_, l)| std::iter::repeat_n(l.class, l.count as usize))
            .collect()
    }

    /// Interior notch positions where a parenthesised run starts or ends.
    pub fn paren_boundaries(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.collect_boundaries(0, &mut out);
        let total = self.total();
        out.retain(|&p| p > 0 && p < total);
        out
    }

    fn collect_boundaries(&self, mut offset: usize, out: &mut BTreeSet<usize>) -> usize {
        for t in &self.terms {
            match t {
                Term::Leaf(l) => offset += l.count as usize,
                Term::Group(s) => {
                    out.insert(offset);
                    offset = s.collect_boundaries(offset, out);
                    out.insert(offset);
                }
            }
        }
        offset
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match t {
                Term::Leaf(l) => {
                    write!(f, "{}{}", l.count, l.class)?;
                    if l.uncertain {
                        f.write_str("(?)")?;
                    }
                }
                Term::Group(s) => write!(f, "({s})")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Schema {
    type Err = SchemaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_schema(s)
    }
}

pub fn parse_schema(text: &str) -> Result<Schema, SchemaError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let schema = p.schema()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        let message = if c == ')' {
            "unbalanced ')'".to_string()
        } else {
            format!("unexpected {c:?}")
        };
        return Err(p.error(message));
    }
    Ok(schema)
}

/// Canonical text: no whitespace, `+` between terms, `(?)` after uncertain leaves.
pub fn render_schema(s: &Schema) -> String {
    s.to_string()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> SchemaError {
        SchemaError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn schema(&mut self) -> Result<Schema, SchemaError> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some('+') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(Schema { terms })
    }

    fn term(&mut self) -> Result<Term, SchemaError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.schema()?;
                if self.peek() != Some(')') {
                    return Err(self.error("unbalanced '(': expected ')'"));
                }
                self.pos += 1;
                Ok(Term::Group(inner))
            }
            Some(c) if c.is_ascii_digit() => self.leaf().map(Term::Leaf),
            Some(c) => Err(self.error(format!("expected a count or '(', found {c:?}"))),
            None => Err(self.error("unexpected end of schema")),
        }
    }

    fn leaf(&mut self) -> Result<Leaf, SchemaError> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let count: u32 = digits.parse().map_err(|_| SchemaError::Parse {
            position: start,
            message: format!("count {digits} is too large"),
        })?;
        if count == 0 {
            return Err(SchemaError::Parse {
                position: start,
                message: "count must be positive".into(),
            });
        }
        let class = match self.peek() {
            Some(c) => LengthClass::from_letter(c).ok_or_else(|| {
                self.error(format!("unknown class letter {c:?} (expected s, m or L)"))
            })?,
            None => return Err(self.error("missing class letter after count")),
        };
        self.pos += 1;
        let uncertain = self.uncertainty_marker();
        Ok(Leaf {
            count,
            class,
            uncertain,
        })
    }

    // '(?)' after a leaf; anything else starting with '(' is left for the caller.
    fn uncertainty_marker(&mut self) -> bool {
        let save = self.pos;
        if self.peek() == Some('(') {
            self.pos += 1;
            if self.peek() == Some('?') {
                self.pos += 1;
                if self.peek() == Some(')') {
                    self.pos += 1;
                    return true;
                }
            }
        }
        self.pos = save;
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyParams {
    /// Minimum jump between consecutive sorted lengths that separates clusters.
    pub gap_len_mm: f64,
    /// Minimum vertical separation that starts a new subgroup.
    pub gap_vert_mm: f64,
}

impl Default for ClassifyParams {
    fn default() -> Self {
        ClassifyParams {
            gap_len_mm: DEFAULT_GAP_LEN_MM,
            gap_vert_mm: DEFAULT_GAP_VERT_MM,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifiedGroup {
    pub classes: Vec<LengthClass>,
    /// Positions p where notch p starts a new subgroup (p notches precede it).
    pub subgroup_boundaries: BTreeSet<usize>,
    pub uniform: bool,
}

/// Classifies the notches of a measured group.
pub fn classify_notches(
    g: &NotchGroup,
    params: &ClassifyParams,
) -> Result<ClassifiedGroup, SchemaError> {
    let lengths = g
        .notches
        .iter()
        .enumerate()
        .map(|(i, n)| {
            n.length_mm.ok_or_else(|| SchemaError::UnmeasuredNotch {
                group: g.label.clone(),
                index: i + 1,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(classify_lengths(
        &lengths,
        g.intra_gaps_mm.as_deref(),
        params,
    ))
}

/// Clusters lengths at large jumps (at most two cuts) and names the clusters
/// s < m < L; two clusters become s and L, one cluster is uniform.
pub fn classify_lengths(
    lengths: &[f64],
    intra_gaps: Option<&[f64]>,
    params: &ClassifyParams,
) -> ClassifiedGroup {
    let mut sorted = lengths.to_vec();
    sorted.sort_by(f64::total_cmp);

    let len_threshold = params.gap_len_mm * (1.0 - REL_EPS);
    let mut cuts: Vec<(f64, usize)> = sorted
        .windows(2)
        .enumerate()
        .filter_map(|(i, w)| {
            let d = w[1] - w[0];
            (d > 0.0 && d >= len_threshold).then_some((d, i + 1))
        })
        .collect();
    // Jumps equal up to rounding count as ties and go to the lower position.
    let mut kept = Vec::new();
    for _ in 0..2 {
        let best = cuts.iter().enumerate().fold(
            None,
            |best: Option<(usize, f64, usize)>, (k, &(d, i))| match best {
                Some((_, bd, _)) if d <= bd * (1.0 + REL_EPS) => best,
                _ => Some((k, d, i)),
            },
        );
        if let Some((k, _, i)) = best {
            kept.push(i);
            cuts.remove(k);
        }
    }
    let mut cut_values: Vec<f64> = kept.iter().map(|&i| sorted[i]).collect();
    cut_values.sort_by(f64::total_cmp);

    let palette: &[LengthClass] = match cut_values.len() {
        0 => &[LengthClass::Small],
        1 => &[LengthClass::Small, LengthClass::Long],
        _ => &[LengthClass::Small, LengthClass::Medium, LengthClass::Long],
    };
    let classes = lengths
        .iter()
        .map(|&len| palette[cut_values.iter().filter(|&&c| len >= c).count()])
        .collect();

    let vert_threshold = params.gap_vert_mm * (1.0 - REL_EPS);
    let subgroup_boundaries = intra_gaps
        .map(|gaps| {
            gaps.iter()
                .enumerate()
                .filter(|(_, &g)| g >= vert_threshold)
                .map(|(i, _)| i + 1)
                .collect()
        })
        .unwrap_or_default();

    ClassifiedGroup {
        classes,
        subgroup_boundaries,
        uniform: cut_values.is_empty(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeafAssignment {
    pub start: usize,
    pub count: usize,
    pub class: LengthClass,
    pub uncertain: bool,
    /// Classes observed on the notches this leaf covers.
    pub observed: Vec<LengthClass>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchemaMatch {
    pub matched: bool,
    pub leaves: Vec<LeafAssignment>,
    pub reason: Option<String>,
}

impl SchemaMatch {
    fn rejected(reason: impl Into<String>) -> Self {
        SchemaMatch {
            matched: false,
            leaves: Vec::new(),
            reason: Some(reason.into()),
        }
    }
}

/// Checks a group against a schema.
///
/// Class letters are relative to the group: the observed classes must map
/// onto the schema's letters by a strictly increasing relabelling, so a
/// uniform group matches any single-letter schema and a two-cluster group
/// matches any two-letter schema in the right order. Notches covered by an
/// uncertain leaf match any letter, damaged or not. When the group has
/// measured vertical gaps, every parenthesis boundary of the schema must fall
/// on a detected subgroup boundary.
pub fn match_schema(g: &NotchGroup, s: &Schema, params: &ClassifyParams) -> SchemaMatch {
    let total = s.total();
    if total != g.count() {
        return SchemaMatch::rejected(format!(
            "schema describes {total} notches, group {} has {}",
            g.label,
            g.count()
        ));
    }
    let classified = match classify_notches(g, params) {
        Ok(c) => c,
        Err(e) => return SchemaMatch::rejected(e.to_string()),
    };

    let mut leaves = Vec::new();
    let mut pairs = Vec::new();
    for (start, leaf) in s.leaves() {
        let count = leaf.count as usize;
        let observed = classified.classes[start..start + count].to_vec();
        if !leaf.uncertain {
            pairs.extend(observed.iter().map(|&o| (o, leaf.class)));
        }
        leaves.push(LeafAssignment {
            start,
            count,
            class: leaf.class,
            uncertain: leaf.uncertain,
            observed,
        });
    }

    let mut reason = None;
    if !monotone_relabelling_exists(&pairs) {
        reason = Some("class sequence differs from the schema".to_string());
    } else if g.intra_gaps_mm.is_some() {
        let missing: Vec<usize> = s
            .paren_boundaries()
            .into_iter()
            .filter(|b| !classified.subgroup_boundaries.contains(b))
            .collect();
        if !missing.is_empty() {
            reason = Some(format!(
                "parenthesis boundaries {missing:?} have no matching vertical gap"
            ));
        }
    }
    SchemaMatch {
        matched: reason.is_none(),
        leaves,
        reason,
    }
}

fn monotone_relabelling_exists(pairs: &[(LengthClass, LengthClass)]) -> bool {
    let mut map: Vec<(LengthClass, LengthClass)> = Vec::new();
    for &(o, e) in pairs {
        match map.iter().find(|(k, _)| *k == o) {
            Some(&(_, v)) if v != e => return false,
            Some(_) => {}
            None => map.push((o, e)),
        }
    }
    map.sort();
    map.windows(2).all(|w| w[0].1 < w[1].1)
}
