//! Data files compiled into the library.

use std::collections::BTreeMap;

use crate::artifact::{load_artifact, Artifact, ArtifactError, MeVariant};

pub const ISHANGO_JSON: &str = include_str!("../../../data/ishango.json");

/// Candidate s/m/L schemas per group. The Me group is keyed by variant
/// (`Me9`, `Me10`).
pub const SCHEMAS_JSON: &str = include_str!("../../../data/schemas.json");

pub const NUMERAL_SYSTEMS: [(&str, &str); 10] = [
    (
        "yasayama",
        include_str!("../../../data/numerals/yasayama.json"),
    ),
    ("baali", include_str!("../../../data/numerals/baali.json")),
    ("nyali", include_str!("../../../data/numerals/nyali.json")),
    ("ndaaka", include_str!("../../../data/numerals/ndaaka.json")),
    (
        "burundi_cattle",
        include_str!("../../../data/numerals/burundi_cattle.json"),
    ),
    (
        "shambaa",
        include_str!("../../../data/numerals/shambaa.json"),
    ),
    (
        "quevedo",
        include_str!("../../../data/numerals/quevedo.json"),
    ),
    ("yagua", include_str!("../../../data/numerals/yagua.json")),
    ("koro", include_str!("../../../data/numerals/koro.json")),
    (
        "huku_walegga",
        include_str!("../../../data/numerals/huku_walegga.json"),
    ),
];

pub fn ishango(variant: MeVariant) -> Artifact {
    load_artifact(ISHANGO_JSON, Some(variant)).expect("bundled dataset is valid")
}

/// Bundled artifact, surfacing errors instead of panicking.
pub fn try_ishango(variant: MeVariant) -> Result<Artifact, ArtifactError> {
    load_artifact(ISHANGO_JSON, Some(variant))
}

pub fn numeral_system_source(name: &str) -> Option<&'static str> {
    NUMERAL_SYSTEMS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
}

/// Candidate schema strings for a group label under a variant.
pub fn candidate_schemas(label: &str, variant: MeVariant) -> Vec<String> {
    let table: BTreeMap<String, Vec<String>> =
        serde_json::from_str(SCHEMAS_JSON).expect("bundled schema table is valid");
    let key = if label == "Me" {
        format!("Me{}", if variant == MeVariant::Me9 { 9 } else { 10 })
    } else {
        label.to_string()
    };
    table.get(&key).cloned().unwrap_or_default()
}

/// Every schema string in the bundled table.
pub fn all_candidate_schemas() -> Vec<(String, String)> {
    let table: BTreeMap<String, Vec<String>> =
        serde_json::from_str(SCHEMAS_JSON).expect("bundled schema table is valid");
    table
        .into_iter()
        .flat_map(|(k, v)| v.into_iter().map(move |s| (k.clone(), s)))
        .collect()
}
