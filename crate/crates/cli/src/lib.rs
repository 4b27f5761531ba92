//! Command-line front end for the `ishango` crate.
//!
//! [`run`] parses a token list, executes one command and writes its report
//! to `out`; diagnostics go to `err`. Exit codes: 0 on success, 1 when the
//! input fails validation or parsing, 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ishango::artifact::{layout, load_artifact, Artifact, ColumnId, MeVariant, DEFAULT_PITCH_MM};
use ishango::data;
use ishango::hypotheses::{score_all, ComponentValue};
use ishango::null_model::{estimate_pvalue, NamedStatistic, NullConstraints};
use ishango::numerals::{self, from_words_in, load_system, to_words_in, NumeralSystem};
use ishango::par::Parallelism;
use ishango::relations::{
    base12_tally, enumerate_relations, select_cover, target_order, CoverPolicy, Relation,
    SearchConfig, TallyOrdering,
};
use ishango::render::{render_artifact, RenderMode};
use ishango::schema::{
    classify_notches, match_schema, parse_schema, render_schema, ClassifyParams,
};
use serde::Serialize;

/// Environment variable naming a directory that replaces the bundled data.
pub const DATA_DIR_ENV: &str = "ISHANGO_DATA_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "ishango",
    version,
    about = "Explore the notch groups of the Ishango bone"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Group counts and column sums; optionally classify one group.
    Inspect(InspectArgs),
    /// Rank slide-rule relations and pick a covering set.
    Relations(RelationsArgs),
    /// Score the competing readings side by side.
    Hypotheses(HypothesesArgs),
    /// Monte-Carlo p-value of a statistic under the uniform null.
    Significance(SignificanceArgs),
    /// Convert between numbers and number words.
    Numerals(NumeralsArgs),
    /// Draw the three columns as text or SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Me9,
    Me10,
}

impl From<Variant> for MeVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Me9 => MeVariant::Me9,
            Variant::Me10 => MeVariant::Me10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Policy {
    Simplicity,
    Alignment,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Ascii,
    Svg,
}

#[derive(Debug, Args)]
struct ArtifactArgs {
    /// Artifact document; defaults to the bundled dataset.
    path: Option<PathBuf>,
    /// Reading of the fifth M group; defaults to the document's own.
    #[arg(long, value_enum)]
    variant: Option<Variant>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 3)]
    max_run: usize,
    #[arg(long, default_value_t = 2)]
    max_correction: u32,
    /// Vertical distance between consecutive notches, in mm.
    #[arg(long, default_value_t = DEFAULT_PITCH_MM)]
    pitch: f64,
}

impl SearchArgs {
    fn config(&self) -> Result<SearchConfig, CliError> {
        check_pitch(self.pitch)?;
        let cfg = SearchConfig {
            max_run: self.max_run,
            max_correction_abs: self.max_correction,
            pitch_mm: self.pitch,
            ..SearchConfig::default()
        };
        cfg.validate()
            .map_err(|e| CliError::Invalid(e.to_string()))?;
        Ok(cfg)
    }
}

#[derive(Debug, Args)]
struct InspectArgs {
    #[command(flatten)]
    artifact: ArtifactArgs,
    /// Group to classify, e.g. Mb.
    #[arg(long)]
    group: Option<String>,
    /// Schema to test against --group; defaults to the stored candidates.
    #[arg(long, requires = "group")]
    schema: Option<String>,
}

#[derive(Debug, Args)]
struct RelationsArgs {
    #[command(flatten)]
    artifact: ArtifactArgs,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, value_enum, default_value_t = Policy::Alignment)]
    cover: Policy,
}

#[derive(Debug, Args)]
struct HypothesesArgs {
    #[command(flatten)]
    artifact: ArtifactArgs,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Debug, Args)]
struct SignificanceArgs {
    #[command(flatten)]
    artifact: ArtifactArgs,
    /// equal_GD_sums, sums_divisible_12 or slide_rule_coverage_at_cost.
    #[arg(long, default_value = "equal_GD_sums")]
    statistic: String,
    #[arg(long, default_value_t = 10_000)]
    n: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest count any null group may take.
    #[arg(long, default_value_t = 25)]
    max_group: u32,
    /// Worker threads; 0 picks automatically. Results do not depend on it.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["value", "parse"]))]
struct NumeralsArgs {
    #[arg(long)]
    system: String,
    /// Number to put into words.
    value: Option<u64>,
    /// Words to read back as a number.
    #[arg(long)]
    parse: Option<String>,
    /// Alternative register, e.g. cattle.
    #[arg(long)]
    register: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[command(flatten)]
    artifact: ArtifactArgs,
    #[arg(long, value_enum, default_value_t = Mode::Ascii)]
    mode: Mode,
    #[arg(long, default_value_t = DEFAULT_PITCH_MM)]
    pitch: f64,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Invalid(String),
}

impl<E: Into<ishango::Error>> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Invalid(e.into().to_string())
    }
}

/// Runs one command and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let data_dir = std::env::var_os(DATA_DIR_ENV).map(PathBuf::from);
    match execute(cli.command, data_dir.as_deref()) {
        Ok(report) => match out.write_all(report.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "usage error: {m}");
            2
        }
        Err(CliError::Invalid(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

fn execute(command: Command, data_dir: Option<&Path>) -> Result<String, CliError> {
    match command {
        Command::Inspect(a) => inspect(a, data_dir),
        Command::Relations(a) => relations(a, data_dir),
        Command::Hypotheses(a) => hypotheses(a, data_dir),
        Command::Significance(a) => significance(a, data_dir),
        Command::Numerals(a) => numerals(a, data_dir),
        Command::Render(a) => render(a, data_dir),
    }
}

fn check_pitch(pitch: f64) -> Result<(), CliError> {
    if pitch.is_finite() && pitch > 0.0 {
        Ok(())
    } else {
        Err(CliError::Invalid(format!(
            "pitch must be positive, got {pitch}"
        )))
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn load(args: &ArtifactArgs, data_dir: Option<&Path>) -> Result<Artifact, CliError> {
    let variant = args.variant.map(MeVariant::from);
    let source = match (&args.path, data_dir) {
        (Some(p), _) => read(p)?,
        (None, Some(dir)) => read(&dir.join("ishango.json"))?,
        (None, None) => data::ISHANGO_JSON.to_string(),
    };
    Ok(load_artifact(&source, variant)?)
}

fn candidate_schemas(
    label: &str,
    variant: MeVariant,
    data_dir: Option<&Path>,
) -> Result<Vec<String>, CliError> {
    let Some(dir) = data_dir else {
        return Ok(data::candidate_schemas(label, variant));
    };
    let path = dir.join("schemas.json");
    if !path.exists() {
        return Ok(Vec::new());
    }
    let table: std::collections::BTreeMap<String, Vec<String>> =
        serde_json::from_str(&read(&path)?)
            .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    let key = match (label, variant) {
        ("Me", MeVariant::Me9) => "Me9".to_string(),
        ("Me", MeVariant::Me10) => "Me10".to_string(),
        _ => label.to_string(),
    };
    Ok(table.get(&key).cloned().unwrap_or_default())
}

fn variant_tag(v: MeVariant) -> &'static str {
    match v {
        MeVariant::Me9 => "me9",
        MeVariant::Me10 => "me10",
    }
}

/// Report values are rounded so text and JSON show the same digits.
fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

fn emit<T: Serialize>(format: Format, report: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text(report),
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn or_none(items: &[String]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(" ")
    }
}

fn signed(c: i32) -> String {
    if c > 0 {
        format!("+{c}")
    } else {
        c.to_string()
    }
}

// inspect

#[derive(Serialize)]
struct InspectReport {
    name: String,
    variant: &'static str,
    total_notches: usize,
    columns: Vec<ColumnRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    group: Option<GroupReport>,
}

#[derive(Serialize)]
struct ColumnRow {
    id: char,
    sum: usize,
    groups: Vec<String>,
    counts: Vec<u32>,
}

#[derive(Serialize)]
struct GroupReport {
    label: String,
    count: usize,
    lengths_mm: Option<Vec<f64>>,
    classes: Option<String>,
    subgroup_starts: Vec<usize>,
    schemas: Vec<SchemaRow>,
}

#[derive(Serialize)]
struct SchemaRow {
    schema: String,
    matched: bool,
    reason: Option<String>,
}

fn inspect(args: InspectArgs, data_dir: Option<&Path>) -> Result<String, CliError> {
    let a = load(&args.artifact, data_dir)?;
    let columns = ColumnId::ALL
        .iter()
        .map(|&id| {
            let col = a.column(id);
            ColumnRow {
                id: id.letter(),
                sum: col.sum(),
                groups: col.groups.iter().map(|g| g.label.clone()).collect(),
                counts: col.counts(),
            }
        })
        .collect();
    let group = match &args.group {
        None => None,
        Some(label) => Some(inspect_group(&a, label, args.schema.as_deref(), data_dir)?),
    };
    let report = InspectReport {
        name: a.name().to_string(),
        variant: variant_tag(a.me_variant()),
        total_notches: a.total_notches(),
        columns,
        group,
    };
    Ok(emit(args.artifact.format, &report, inspect_text))
}

fn inspect_group(
    a: &Artifact,
    label: &str,
    schema: Option<&str>,
    data_dir: Option<&Path>,
) -> Result<GroupReport, CliError> {
    let g = a
        .group(label)
        .ok_or_else(|| CliError::Invalid(format!("no group labelled {label:?}")))?;
    let params = ClassifyParams::default();
    let classified = classify_notches(g, &params).ok();
    let texts = match schema {
        Some(s) => vec![s.to_string()],
        None => candidate_schemas(label, a.me_variant(), data_dir)?,
    };
    let mut schemas = Vec::new();
    for text in texts {
        let s = parse_schema(&text)?;
        let m = match_schema(g, &s, &params);
        schemas.push(SchemaRow {
            schema: render_schema(&s),
            matched: m.matched,
            reason: m.reason,
        });
    }
    Ok(GroupReport {
        label: g.label.clone(),
        count: g.count(),
        lengths_mm: g.lengths(),
        classes: classified
            .as_ref()
            .map(|c| c.classes.iter().map(|k| k.letter()).collect()),
        subgroup_starts: classified
            .map(|c| c.subgroup_boundaries.into_iter().collect())
            .unwrap_or_default(),
        schemas,
    })
}

fn inspect_text(r: &InspectReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} ({}): {} notches", r.name, r.variant, r.total_notches);
    let _ = writeln!(s, "column  sum  groups");
    for c in &r.columns {
        let groups: Vec<String> = c
            .groups
            .iter()
            .zip(&c.counts)
            .map(|(l, n)| format!("{l}:{n}"))
            .collect();
        let _ = writeln!(s, "{:<6} {:>4}  {}", c.id, c.sum, groups.join(" "));
    }
    if let Some(g) = &r.group {
        let _ = writeln!(s, "\ngroup {}: {} notches", g.label, g.count);
        match &g.lengths_mm {
            Some(l) => {
                let _ = writeln!(s, "lengths (mm): {}", join(l, " "));
            }
            None => {
                let _ = writeln!(s, "lengths (mm): not measured");
            }
        }
        if let Some(c) = &g.classes {
            let _ = writeln!(s, "classes: {c}");
        }
        let starts: Vec<String> = g.subgroup_starts.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "subgroups start after notch: {}", or_none(&starts));
        for row in &g.schemas {
            let verdict = if row.matched { "match" } else { "no match" };
            match &row.reason {
                Some(why) => {
                    let _ = writeln!(s, "schema {}: {verdict} ({why})", row.schema);
                }
                None => {
                    let _ = writeln!(s, "schema {}: {verdict}", row.schema);
                }
            }
        }
    }
    s
}

// relations

#[derive(Serialize)]
struct RelationsReport {
    name: String,
    variant: &'static str,
    max_run: usize,
    max_correction: u32,
    count: usize,
    relations: Vec<RelationRow>,
    cover: CoverReport,
}

#[derive(Serialize)]
struct RelationRow {
    relation: String,
    target: String,
    target_count: u32,
    operands: Vec<String>,
    operand_counts: Vec<u32>,
    correction: i32,
    cost: f64,
    alignment: f64,
}

impl From<&Relation> for RelationRow {
    fn from(r: &Relation) -> Self {
        RelationRow {
            relation: r.to_string(),
            target: r.target.clone(),
            target_count: r.target_count,
            operands: r.operands.clone(),
            operand_counts: r.operand_counts.clone(),
            correction: r.correction,
            cost: round6(r.cost),
            alignment: round6(r.alignment),
        }
    }
}

#[derive(Serialize)]
struct CoverReport {
    policy: &'static str,
    relations: Vec<String>,
    corrections: Vec<i32>,
    total_cost: f64,
    uncovered: Vec<String>,
    tallies: Vec<TallyReport>,
}

#[derive(Serialize)]
struct TallyReport {
    ordering: &'static str,
    slots: Vec<String>,
    totals: Vec<u64>,
    grand_total: i64,
    multiples_of_12: Vec<String>,
}

fn relations(args: RelationsArgs, data_dir: Option<&Path>) -> Result<String, CliError> {
    let a = load(&args.artifact, data_dir)?;
    let cfg = args.search.config()?;
    let ranked = enumerate_relations(&a, &cfg);
    let targets = target_order(&a, &layout(&a, cfg.pitch_mm));
    let (policy, name) = match args.cover {
        Policy::Simplicity => (CoverPolicy::Simplicity, "simplicity"),
        Policy::Alignment => (CoverPolicy::Alignment, "alignment"),
    };
    let cover = select_cover(&ranked, &targets, policy);
    let mut tallies = Vec::new();
    if cover.is_complete() {
        for (ordering, tag) in [
            (TallyOrdering::column_order(), "column_order"),
            (TallyOrdering::as_engraved(), "as_engraved"),
        ] {
            let t = base12_tally(&cover.relations, &a, &ordering)?;
            tallies.push(TallyReport {
                ordering: tag,
                slots: t.slots.iter().map(|s| s.label.clone()).collect(),
                totals: t.totals(),
                grand_total: t.grand_total,
                multiples_of_12: t.multiples_of_12.clone(),
            });
        }
    }
    let report = RelationsReport {
        name: a.name().to_string(),
        variant: variant_tag(a.me_variant()),
        max_run: cfg.max_run,
        max_correction: cfg.max_correction_abs,
        count: ranked.len(),
        relations: ranked.iter().map(RelationRow::from).collect(),
        cover: CoverReport {
            policy: name,
            relations: cover.relations.iter().map(|r| r.to_string()).collect(),
            corrections: cover.corrections(),
            total_cost: round6(cover.total_cost()),
            uncovered: cover.uncovered.clone(),
            tallies,
        },
    };
    Ok(emit(args.artifact.format, &report, relations_text))
}

fn relations_text(r: &RelationsReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} ({}): {} relations, runs up to {}, corrections up to {}",
        r.name, r.variant, r.count, r.max_run, r.max_correction
    );
    let width = r
        .relations
        .iter()
        .map(|x| x.relation.len())
        .max()
        .unwrap_or(0)
        .max("relation".len());
    let _ = writeln!(s, "{:<width$}  corr  cost  alignment", "relation");
    for row in &r.relations {
        let _ = writeln!(
            s,
            "{:<width$}  {:>4}  {:>4}  {}",
            row.relation,
            signed(row.correction),
            row.cost,
            row.alignment
        );
    }
    let c = &r.cover;
    let _ = writeln!(s, "\n{} cover, total cost {}:", c.policy, c.total_cost);
    for rel in &c.relations {
        let _ = writeln!(s, "  {rel}");
    }
    let corr: Vec<String> = c.corrections.iter().map(|&x| signed(x)).collect();
    let _ = writeln!(s, "corrections: {}", or_none(&corr));
    let _ = writeln!(s, "uncovered: {}", or_none(&c.uncovered));
    for t in &c.tallies {
        let slots: Vec<String> = t
            .slots
            .iter()
            .zip(&t.totals)
            .map(|(l, n)| format!("{l}:{n}"))
            .collect();
        let _ = writeln!(
            s,
            "tally {}: {} (total {}; multiples of twelve: {})",
            t.ordering,
            slots.join(" "),
            t.grand_total,
            or_none(&t.multiples_of_12)
        );
    }
    s
}

// hypotheses

#[derive(Serialize)]
struct HypothesesReport {
    name: String,
    variant: &'static str,
    hypotheses: Vec<HypothesisRow>,
}

#[derive(Serialize)]
struct HypothesisRow {
    name: &'static str,
    total_cost: f64,
    notes: String,
    components: Vec<ComponentRow>,
}

#[derive(Serialize)]
struct ComponentRow {
    name: String,
    kind: &'static str,
    value: serde_json::Value,
}

fn hypotheses(args: HypothesesArgs, data_dir: Option<&Path>) -> Result<String, CliError> {
    let a = load(&args.artifact, data_dir)?;
    let cfg = args.search.config()?;
    let rows = score_all(&a, &cfg)
        .into_iter()
        .map(|h| HypothesisRow {
            name: h.name.as_str(),
            total_cost: round6(h.total_cost),
            notes: h.notes,
            components: h
                .components
                .into_iter()
                .map(|c| ComponentRow {
                    name: c.name,
                    kind: match c.kind {
                        ishango::hypotheses::ComponentKind::Check => "check",
                        ishango::hypotheses::ComponentKind::Objection => "objection",
                        ishango::hypotheses::ComponentKind::Measure => "measure",
                    },
                    value: match c.value {
                        ComponentValue::Check(b) => b.into(),
                        ComponentValue::Number(x) => round6(x).into(),
                        ComponentValue::Text(t) => t.into(),
                    },
                })
                .collect(),
        })
        .collect();
    let report = HypothesesReport {
        name: a.name().to_string(),
        variant: variant_tag(a.me_variant()),
        hypotheses: rows,
    };
    Ok(emit(args.artifact.format, &report, hypotheses_text))
}

fn hypotheses_text(r: &HypothesesReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} ({})", r.name, r.variant);
    let _ = writeln!(s, "{:<22} cost", "hypothesis");
    for h in &r.hypotheses {
        let _ = writeln!(s, "{:<22} {}", h.name, h.total_cost);
    }
    for h in &r.hypotheses {
        let _ = writeln!(s, "\n{} ({})", h.name, h.notes);
        for c in &h.components {
            let value = match &c.value {
                serde_json::Value::Bool(true) => "yes".to_string(),
                serde_json::Value::Bool(false) => "no".to_string(),
                serde_json::Value::String(t) => t.clone(),
                serde_json::Value::Number(x) => {
                    x.as_f64().map_or_else(|| x.to_string(), |f| f.to_string())
                }
                other => other.to_string(),
            };
            let _ = writeln!(s, "  {:<9} {:<42} {value}", c.kind, c.name);
        }
    }
    s
}

// significance

#[derive(Serialize)]
struct SignificanceReport {
    name: String,
    variant: &'static str,
    statistic: String,
    observed: f64,
    estimate: f64,
    stderr: f64,
    hits: u64,
    n_samples: u64,
    seed: u64,
    constraints: NullConstraints,
}

fn significance(args: SignificanceArgs, data_dir: Option<&Path>) -> Result<String, CliError> {
    let a = load(&args.artifact, data_dir)?;
    let stat = NamedStatistic::by_name(&args.statistic, &a)?;
    let groups = ColumnId::ALL.map(|c| a.column(c).groups.len());
    let constraints = NullConstraints {
        total_notches: a.total_notches() as u32,
        groups_per_column: groups,
        min_group: 1,
        max_group: args.max_group,
    };
    let par = Parallelism::from_workers(args.workers);
    let e = estimate_pvalue(&stat, &constraints, args.n, args.seed, par)?;
    let report = SignificanceReport {
        name: a.name().to_string(),
        variant: variant_tag(a.me_variant()),
        statistic: e.statistic,
        observed: round6(stat.observed),
        estimate: round6(e.estimate),
        stderr: round6(e.stderr),
        hits: e.hits,
        n_samples: e.n_samples,
        seed: e.seed,
        constraints,
    };
    Ok(emit(args.artifact.format, &report, |r| {
        let c = &r.constraints;
        format!(
            "{} on {} ({})\nobserved  {}\nestimate  {}\nstderr    {}\nhits      {} of {} samples, seed {}\nnull      {} notches in {} groups of {} to {}\n",
            r.statistic,
            r.name,
            r.variant,
            r.observed,
            r.estimate,
            r.stderr,
            r.hits,
            r.n_samples,
            r.seed,
            c.total_notches,
            join(&c.groups_per_column, "/"),
            c.min_group,
            c.max_group
        )
    }))
}

// numerals

#[derive(Serialize)]
struct WordsReport {
    system: String,
    register: Option<String>,
    value: u64,
    text: String,
    uncertain: bool,
    glosses: Vec<numerals::Gloss>,
}

#[derive(Serialize)]
struct ParseReport {
    system: String,
    register: Option<String>,
    text: String,
    value: u64,
}

fn system(name: &str, data_dir: Option<&Path>) -> Result<NumeralSystem, CliError> {
    match data_dir {
        Some(dir) => Ok(load_system(&read(
            &dir.join("numerals").join(format!("{name}.json")),
        )?)?),
        None => Ok(numerals::bundled(name)?),
    }
}

fn numerals(args: NumeralsArgs, data_dir: Option<&Path>) -> Result<String, CliError> {
    let sys = system(&args.system, data_dir)?;
    let register = args.register.as_deref();
    match (args.value, &args.parse) {
        (Some(n), None) => {
            let w = to_words_in(n, &sys, register)?;
            let report = WordsReport {
                system: sys.name().to_string(),
                register: args.register.clone(),
                value: n,
                text: w.text,
                uncertain: w.uncertain,
                glosses: w.glosses,
            };
            Ok(emit(args.format, &report, |r| {
                let mut s = format!("{}\n", r.text);
                let _ = writeln!(s, "{} {}{}", r.system, r.value, register_note(&r.register));
                for g in &r.glosses {
                    let _ = writeln!(s, "  {} = {}", g.word, g.gloss);
                }
                if r.uncertain {
                    let _ = writeln!(s, "form uncertain");
                }
                s
            }))
        }
        (None, Some(words)) => {
            let value = from_words_in(words, &sys, register)?;
            let report = ParseReport {
                system: sys.name().to_string(),
                register: args.register.clone(),
                text: words.clone(),
                value,
            };
            Ok(emit(args.format, &report, |r| {
                format!(
                    "{}\n{} {:?}{}\n",
                    r.value,
                    r.system,
                    r.text,
                    register_note(&r.register)
                )
            }))
        }
        _ => Err(CliError::Usage(
            "give either a value or --parse, not both".into(),
        )),
    }
}

fn register_note(register: &Option<String>) -> String {
    register
        .as_ref()
        .map(|r| format!(" (register {r})"))
        .unwrap_or_default()
}

// render

#[derive(Serialize)]
struct RenderReport {
    mode: &'static str,
    document: String,
}

fn render(args: RenderArgs, data_dir: Option<&Path>) -> Result<String, CliError> {
    check_pitch(args.pitch)?;
    let a = load(&args.artifact, data_dir)?;
    let (mode, tag) = match args.mode {
        Mode::Ascii => (RenderMode::Ascii, "ascii"),
        Mode::Svg => (RenderMode::Svg, "svg"),
    };
    let report = RenderReport {
        mode: tag,
        document: render_artifact(&a, &layout(&a, args.pitch), mode),
    };
    Ok(emit(args.artifact.format, &report, |r| r.document.clone()))
}
