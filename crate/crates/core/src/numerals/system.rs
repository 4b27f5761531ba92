use std::collections::{BTreeMap, HashMap, HashSet};
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::NumeralError;
use crate::data::{numeral_system_source, NUMERAL_SYSTEMS};

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
enum LexDoc {
    Plain(String),
    Full {
        word: String,
        #[serde(default)]
        gloss: Option<String>,
        #[serde(default, alias = "uncertain_gloss")]
        uncertain: bool,
    },
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct JoinersDoc {
    remainder: Option<String>,
    before_anchor: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct MultiplesDoc {
    word: String,
    #[serde(default)]
    joiner: String,
    multipliers: BTreeMap<String, LexDoc>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct AnchorDoc {
    value: u64,
    word: String,
    stem: Option<String>,
    #[serde(default)]
    joiners: JoinersDoc,
    #[serde(default)]
    remainder_forms: BTreeMap<String, LexDoc>,
    multiples: Option<MultiplesDoc>,
    gloss: Option<String>,
    #[serde(default, alias = "uncertain_gloss")]
    uncertain: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemDoc {
    name: String,
    max_supported: u64,
    domain: Option<Vec<[u64; 2]>>,
    #[serde(default)]
    atoms: BTreeMap<String, LexDoc>,
    #[serde(default)]
    combining: BTreeMap<String, LexDoc>,
    #[serde(default)]
    anchors: Vec<AnchorDoc>,
    #[serde(default)]
    joiners: JoinersDoc,
    #[serde(default)]
    exceptions: BTreeMap<String, LexDoc>,
    #[serde(default)]
    registers: BTreeMap<String, BTreeMap<String, LexDoc>>,
}

#[derive(Debug, Clone, PartialEq)]
struct Lexeme {
    word: String,
    gloss: Option<String>,
    uncertain: bool,
}

impl From<LexDoc> for Lexeme {
    fn from(d: LexDoc) -> Self {
        match d {
            LexDoc::Plain(word) => Lexeme {
                word,
                gloss: None,
                uncertain: false,
            },
            LexDoc::Full {
                word,
                gloss,
                uncertain,
            } => Lexeme {
                word,
                gloss,
                uncertain,
            },
        }
    }
}

type Table = BTreeMap<u64, Lexeme>;

#[derive(Debug, Clone, PartialEq)]
struct Multiples {
    word: String,
    joiner: String,
    multipliers: Table,
}

#[derive(Debug, Clone, PartialEq)]
struct Anchor {
    value: u64,
    lexeme: Lexeme,
    stem: Option<String>,
    remainder_joiner: Option<String>,
    before_anchor: Option<String>,
    remainder_forms: Table,
    multiples: Option<Multiples>,
}

/// A loaded, validated number-word system.
#[derive(Debug, Clone)]
pub struct NumeralSystem {
    name: String,
    max_supported: u64,
    domain: Vec<RangeInclusive<u64>>,
    atoms: Table,
    combining: Table,
    anchors: Vec<Anchor>,
    remainder_joiner: String,
    before_anchor: Option<String>,
    exceptions: Table,
    registers: BTreeMap<String, Table>,
    // normalized rendering -> value, per register (None = default)
    parse_index: HashMap<Option<String>, HashMap<String, u64>>,
    prefixes: HashMap<Option<String>, HashSet<String>>,
}

/// How a number word is built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Lexical {
        value: u64,
        word: String,
    },
    Anchor {
        value: u64,
        /// Present when the anchor is multiplied (e.g. 2 × 24).
        multiplier: Option<u64>,
        remainder: Option<Box<Construction>>,
    },
}

impl Construction {
    pub fn value(&self) -> u64 {
        match self {
            Construction::Lexical { value, .. } => *value,
            Construction::Anchor {
                value,
                multiplier,
                remainder,
            } => value * multiplier.unwrap_or(1) + remainder.as_ref().map_or(0, |r| r.value()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gloss {
    pub word: String,
    pub gloss: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Words {
    pub text: String,
    pub construction: Construction,
    /// Glosses of the lexical pieces used, outermost first.
    pub glosses: Vec<Gloss>,
    /// Some piece is recorded with a question mark.
    pub uncertain: bool,
}

impl Words {
    fn lexical(value: u64, lex: &Lexeme) -> Self {
        Words {
            text: lex.word.clone(),
            construction: Construction::Lexical {
                value,
                word: lex.word.clone(),
            },
            glosses: gloss_of(lex),
            uncertain: lex.uncertain,
        }
    }
}

fn gloss_of(lex: &Lexeme) -> Vec<Gloss> {
    lex.gloss
        .iter()
        .map(|g| Gloss {
            word: lex.word.clone(),
            gloss: g.clone(),
        })
        .collect()
}

fn normalize(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn table(name: &str, raw: BTreeMap<String, LexDoc>) -> Result<Table, NumeralError> {
    raw.into_iter()
        .map(|(k, v)| {
            let n: u64 = k
                .trim()
                .parse()
                .map_err(|_| NumeralError::Invalid(format!("{name}: key {k:?} is not a number")))?;
            if n == 0 {
                return Err(NumeralError::Invalid(format!(
                    "{name}: key 0 is not a positive number"
                )));
            }
            let lex = Lexeme::from(v);
            if lex.word.trim().is_empty() {
                return Err(NumeralError::Invalid(format!("{name}: empty word for {n}")));
            }
            Ok((n, lex))
        })
        .collect()
}

/// Parses and validates a system document.
///
/// Rejects numbers listed both as atoms and as exceptions, domain values
/// with no rule, and renderings shared by two different numbers.
pub fn load_system(source: &str) -> Result<NumeralSystem, NumeralError> {
    let doc: SystemDoc = serde_json::from_str(source).map_err(|e| NumeralError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if doc.max_supported < 1 {
        return Err(NumeralError::Invalid(
            "max_supported must be at least 1".into(),
        ));
    }
    let domain: Vec<RangeInclusive<u64>> = match doc.domain {
        None => vec![1..=doc.max_supported],
        Some(ranges) => ranges.into_iter().map(|[lo, hi]| lo..=hi).collect(),
    };
    if domain.is_empty() {
        return Err(NumeralError::Invalid("domain is empty".into()));
    }
    for r in &domain {
        if *r.start() < 1 || r.start() > r.end() || *r.end() > doc.max_supported {
            return Err(NumeralError::Invalid(format!(
                "domain range {}..={} must lie within 1..={}",
                r.start(),
                r.end(),
                doc.max_supported
            )));
        }
    }

    let atoms = table("atoms", doc.atoms)?;
    let exceptions = table("exceptions", doc.exceptions)?;
    if let Some(n) = atoms.keys().find(|n| exceptions.contains_key(n)) {
        return Err(NumeralError::Invalid(format!(
            "{n} is listed both as an atom and as an exception"
        )));
    }

    let mut anchors = Vec::new();
    for a in doc.anchors {
        if a.value < 1 {
            return Err(NumeralError::Invalid(
                "anchor values must be positive".into(),
            ));
        }
        let multiples = match a.multiples {
            None => None,
            Some(m) => Some(Multiples {
                word: m.word,
                joiner: m.joiner,
                multipliers: table("multipliers", m.multipliers)?,
            }),
        };
        anchors.push(Anchor {
            value: a.value,
            lexeme: Lexeme {
                word: a.word,
                gloss: a.gloss,
                uncertain: a.uncertain,
            },
            stem: a.stem,
            remainder_joiner: a.joiners.remainder,
            before_anchor: a.joiners.before_anchor,
            remainder_forms: table("remainder_forms", a.remainder_forms)?,
            multiples,
        });
    }
    anchors.sort_by_key(|a| a.value);
    if anchors.windows(2).any(|w| w[0].value == w[1].value) {
        return Err(NumeralError::Invalid("duplicate anchor value".into()));
    }

    let registers = doc
        .registers
        .into_iter()
        .map(|(k, v)| Ok((k.clone(), table(&format!("register {k}"), v)?)))
        .collect::<Result<BTreeMap<_, _>, NumeralError>>()?;

    let mut sys = NumeralSystem {
        name: doc.name,
        max_supported: doc.max_supported,
        domain,
        atoms,
        combining: table("combining", doc.combining)?,
        anchors,
        remainder_joiner: doc.joiners.remainder.unwrap_or_else(|| " ".into()),
        before_anchor: doc.joiners.before_anchor,
        exceptions,
        registers,
        parse_index: HashMap::new(),
        prefixes: HashMap::new(),
    };
    sys.build_index()?;
    Ok(sys)
}

impl NumeralSystem {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn max_supported(&self) -> u64 {
        self.max_supported
    }

    pub fn domain(&self) -> &[RangeInclusive<u64>] {
        &self.domain
    }

    pub fn contains(&self, n: u64) -> bool {
        self.domain.iter().any(|r| r.contains(&n))
    }

    /// Every supported value in increasing order.
    pub fn values(&self) -> impl Iterator<Item = u64> + '_ {
        let mut v: Vec<u64> = self.domain.iter().flat_map(|r| r.clone()).collect();
        v.sort_unstable();
        v.dedup();
        v.into_iter()
    }

    pub fn registers(&self) -> impl Iterator<Item = &str> {
        self.registers.keys().map(String::as_str)
    }

    fn domain_text(&self) -> String {
        self.domain
            .iter()
            .map(|r| {
                if r.start() == r.end() {
                    r.start().to_string()
                } else {
                    format!("{}..={}", r.start(), r.end())
                }
            })
            .collect::<Vec<_>>()
            .join(", ")
    }

    fn build_index(&mut self) -> Result<(), NumeralError> {
        let mut keys: Vec<Option<String>> = vec![None];
        keys.extend(self.registers.keys().cloned().map(Some));
        let values: Vec<u64> = self.values().collect();
        let mut index = HashMap::new();
        let mut prefixes = HashMap::new();
        let mut everywhere: HashMap<String, u64> = HashMap::new();
        for key in keys {
            let mut map = HashMap::new();
            let mut pre = HashSet::new();
            for &n in &values {
                let w = self.render_top(n, key.as_deref())?;
                let text = normalize(&w.text);
                if let Some(&other) = everywhere.get(&text) {
                    if other != n {
                        return Err(NumeralError::Invalid(format!(
                            "{text:?} renders both {other} and {n}"
                        )));
                    }
                }
                everywhere.insert(text.clone(), n);
                let tokens: Vec<&str> = text.split(' ').collect();
                for i in 1..=tokens.len() {
                    pre.insert(tokens[..i].join(" "));
                }
                map.insert(text, n);
            }
            index.insert(key.clone(), map);
            prefixes.insert(key, pre);
        }
        self.parse_index = index;
        self.prefixes = prefixes;
        Ok(())
    }

    fn render_top(&self, n: u64, register: Option<&str>) -> Result<Words, NumeralError> {
        self.render(n, register, None)
    }

    fn lookup_exception(&self, n: u64, register: Option<&str>) -> Option<&Lexeme> {
        register
            .and_then(|r| self.registers.get(r))
            .and_then(|t| t.get(&n))
            .or_else(|| self.exceptions.get(&n))
    }

    // `outer` is the outermost anchor when rendering a remainder.
    fn render(
        &self,
        n: u64,
        register: Option<&str>,
        outer: Option<&Anchor>,
    ) -> Result<Words, NumeralError> {
        if let Some(lex) = self.lookup_exception(n, register) {
            return Ok(Words::lexical(n, lex));
        }
        if let Some(outer) = outer {
            if let Some(lex) = outer
                .remainder_forms
                .get(&n)
                .or_else(|| self.combining.get(&n))
            {
                return Ok(Words::lexical(n, lex));
            }
        }
        if let Some(lex) = self.atoms.get(&n) {
            return Ok(Words::lexical(n, lex));
        }
        let unsupported = || NumeralError::Unsupported {
            system: self.name.clone(),
            n,
        };
        let anchor = self
            .anchors
            .iter()
            .rev()
            .find(|a| a.value <= n)
            .ok_or_else(unsupported)?;

        let (k, rem) = match &anchor.multiples {
            Some(_) => (n / anchor.value, n % anchor.value),
            None => (1, n - anchor.value),
        };
        let mut glosses = gloss_of(&anchor.lexeme);
        let mut uncertain = anchor.lexeme.uncertain;
        let mut text = if k == 1 {
            if rem == 0 {
                anchor.lexeme.word.clone()
            } else {
                anchor
                    .stem
                    .clone()
                    .unwrap_or_else(|| anchor.lexeme.word.clone())
            }
        } else {
            let m = anchor.multiples.as_ref().ok_or_else(unsupported)?;
            let mult = m.multipliers.get(&k).ok_or_else(unsupported)?;
            glosses.extend(gloss_of(mult));
            uncertain |= mult.uncertain;
            format!("{}{}{}", m.word, m.joiner, mult.word)
        };

        let remainder = if rem > 0 {
            let r = self.render(rem, register, Some(outer.unwrap_or(anchor)))?;
            let joiner = match r.construction {
                Construction::Anchor { .. } => anchor
                    .before_anchor
                    .as_deref()
                    .or(self.before_anchor.as_deref()),
                Construction::Lexical { .. } => None,
            }
            .or(anchor.remainder_joiner.as_deref())
            .unwrap_or(&self.remainder_joiner);
            text.push_str(joiner);
            text.push_str(&r.text);
            glosses.extend(r.glosses);
            uncertain |= r.uncertain;
            Some(Box::new(r.construction))
        } else {
            None
        };

        Ok(Words {
            text,
            construction: Construction::Anchor {
                value: anchor.value,
                multiplier: (k > 1).then_some(k),
                remainder,
            },
            glosses,
            uncertain,
        })
    }
}

fn check_register(sys: &NumeralSystem, register: Option<&str>) -> Result<(), NumeralError> {
    match register {
        Some(r) if !sys.registers.contains_key(r) => Err(NumeralError::UnknownRegister(r.into())),
        _ => Ok(()),
    }
}

pub fn to_words(n: u64, sys: &NumeralSystem) -> Result<Words, NumeralError> {
    to_words_in(n, sys, None)
}

/// Renders `n`, preferring the register's forms where it has them.
pub fn to_words_in(
    n: u64,
    sys: &NumeralSystem,
    register: Option<&str>,
) -> Result<Words, NumeralError> {
    check_register(sys, register)?;
    if n < 1 || n > sys.max_supported {
        return Err(NumeralError::OutOfRange {
            n,
            max_supported: sys.max_supported,
        });
    }
    if !sys.contains(n) {
        return Err(NumeralError::NotInDomain {
            n,
            domain: sys.domain_text(),
        });
    }
    sys.render_top(n, register)
}

/// Inverse of [`to_words`]; forms from any register are accepted.
pub fn from_words(words: &str, sys: &NumeralSystem) -> Result<u64, NumeralError> {
    let text = normalize(words);
    if let Some(&n) = sys.parse_index[&None].get(&text) {
        return Ok(n);
    }
    for r in sys.registers.keys() {
        if let Some(&n) = sys.parse_index[&Some(r.clone())].get(&text) {
            return Ok(n);
        }
    }
    Err(unmatched(&text, sys.prefixes.values()))
}

/// Inverse of [`to_words_in`] for one register.
pub fn from_words_in(
    words: &str,
    sys: &NumeralSystem,
    register: Option<&str>,
) -> Result<u64, NumeralError> {
    check_register(sys, register)?;
    let key = register.map(str::to_string);
    let text = normalize(words);
    sys.parse_index[&key]
        .get(&text)
        .copied()
        .ok_or_else(|| unmatched(&text, std::iter::once(&sys.prefixes[&key])))
}

fn unmatched<'a>(
    text: &str,
    prefix_sets: impl Iterator<Item = &'a HashSet<String>> + Clone,
) -> NumeralError {
    let tokens: Vec<&str> = if text.is_empty() {
        Vec::new()
    } else {
        text.split(' ').collect()
    };
    let mut matched = 0;
    for i in 1..=tokens.len() {
        let p = tokens[..i].join(" ");
        if prefix_sets.clone().any(|s| s.contains(&p)) {
            matched = i;
        } else {
            break;
        }
    }
    NumeralError::Unparseable {
        token: tokens
            .get(matched)
            .map_or_else(|| "<end of input>".into(), |t| t.to_string()),
        position: matched,
    }
}

pub fn bundled_names() -> impl Iterator<Item = &'static str> {
    NUMERAL_SYSTEMS.iter().map(|(n, _)| *n)
}

/// One of the bundled systems, by name.
pub fn bundled(name: &str) -> Result<NumeralSystem, NumeralError> {
    let src =
        numeral_system_source(name).ok_or_else(|| NumeralError::UnknownSystem(name.into()))?;
    load_system(src)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(sys: &str, n: u64) -> String {
        to_words(n, &bundled(sys).unwrap()).unwrap().text
    }

    #[test]
    fn anchor_forms() {
        assert_eq!(words("yagua", 14), "nsoava");
        assert_eq!(words("baali", 577), "modingo idingo nemoti");
        assert_eq!(words("ndaaka", 1025), "edidi negana");
        assert_eq!(words("yagua", 20), "nsotondad");
    }

    #[test]
    fn parse_examples() {
        assert_eq!(from_words("plalo", &bundled("koro").unwrap()).unwrap(), 13);
        assert_eq!(
            from_words("bokama lomoko", &bundled("yasayama").unwrap()).unwrap(),
            11
        );
        assert_eq!(
            from_words("idingo  na komba", &bundled("baali").unwrap()).unwrap(),
            36
        );
    }

    #[test]
    fn first_unmatched_token() {
        let sys = bundled("baali").unwrap();
        assert_eq!(
            from_words("idingo na zzz", &sys),
            Err(NumeralError::Unparseable {
                token: "zzz".into(),
                position: 2
            })
        );
        assert!(matches!(
            from_words("", &sys),
            Err(NumeralError::Unparseable { position: 0, .. })
        ));
    }

    #[test]
    fn range_errors() {
        let sys = bundled("quevedo").unwrap();
        assert_eq!(
            to_words(11, &sys),
            Err(NumeralError::OutOfRange {
                n: 11,
                max_supported: 10
            })
        );
        assert!(matches!(
            to_words(100, &bundled("baali").unwrap()),
            Err(NumeralError::NotInDomain { .. })
        ));
    }

    #[test]
    fn registers() {
        let sys = bundled("burundi_cattle").unwrap();
        assert_eq!(to_words(6, &sys).unwrap().text, "itandatu");
        assert_eq!(
            to_words_in(6, &sys, Some("cattle")).unwrap().text,
            "itano n'umwe"
        );
        assert_eq!(from_words("itano n' iwiri", &sys).unwrap(), 7);
        assert!(matches!(
            to_words_in(6, &sys, Some("goats")),
            Err(NumeralError::UnknownRegister(_))
        ));
    }

    #[test]
    fn atom_exception_overlap_rejected() {
        let doc =
            r#"{"name":"x","max_supported":2,"atoms":{"1":"a","2":"b"},"exceptions":{"2":"c"}}"#;
        assert!(matches!(load_system(doc), Err(NumeralError::Invalid(_))));
    }

    #[test]
    fn ambiguous_rendering_rejected() {
        let doc = r#"{"name":"x","max_supported":2,"atoms":{"1":"a","2":"a"}}"#;
        assert!(matches!(load_system(doc), Err(NumeralError::Invalid(_))));
    }

    #[test]
    fn gap_in_rules_rejected() {
        let doc = r#"{"name":"x","max_supported":3,"atoms":{"1":"a","2":"b"}}"#;
        assert!(matches!(
            load_system(doc),
            Err(NumeralError::Unsupported { n: 3, .. })
        ));
    }

    #[test]
    fn unknown_field_rejected() {
        let doc = r#"{"name":"x","max_supported":1,"atoms":{"1":"a"},"extra":1}"#;
        assert!(matches!(load_system(doc), Err(NumeralError::Parse { .. })));
    }
}
