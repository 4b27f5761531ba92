use ishango::artifact::MeVariant;
use ishango::data;
use ishango::schema::{
    classify_notches, match_schema, parse_schema, render_schema, ClassifyParams, LengthClass,
};

const QUOTED: [&str; 11] = [
    "3s",
    "1m + 3s + 1m + 1L",
    "4L",
    "3L + 2s + 3m",
    "3m + 4L",
    "2L (?) + 3m",
    "3m (?) + 2L",
    "1m + 1L + 3m",
    "2m + ((7L)+(3L+2m)+(1s+3m+1s))",
    "2s + (1L+1m+3L+1m+1L)",
    "(2m+1L+2m+1L) + 4L + 1L",
];

fn matches(label: &str, schema: &str) -> bool {
    let bone = data::ishango(MeVariant::Me10);
    let s = parse_schema(schema).unwrap();
    match_schema(bone.group(label).unwrap(), &s, &ClassifyParams::default()).matched
}

#[test]
fn quoted_schemas_round_trip() {
    for text in QUOTED {
        let s = parse_schema(text).unwrap();
        let canon = render_schema(&s);
        assert_eq!(parse_schema(&canon).unwrap(), s, "{text}");
        assert_eq!(render_schema(&parse_schema(&canon).unwrap()), canon);
        assert_eq!(canon.parse::<ishango::Schema>().unwrap(), s);
    }
}

#[test]
fn bundled_candidates_parse_and_count_right() {
    let bone = data::ishango(MeVariant::Me10);
    for (label, text) in data::all_candidate_schemas() {
        let s = parse_schema(&text).unwrap();
        let group = label.trim_end_matches(|c: char| c.is_ascii_digit());
        let expected = if label == "Me9" {
            9
        } else {
            bone.group(group).unwrap().count()
        };
        assert_eq!(s.total(), expected, "{label}: {text}");
    }
}

#[test]
fn table_lengths_match_their_schemas() {
    assert!(matches("Ma", "3s"));
    assert!(matches("Mb", "1m+3s+1m+1L"));
    assert!(matches("Mc", "4L"));
    assert!(matches("Md", "3L+2s+3m"));
    assert!(matches("Mh", "3m+4L"));
}

#[test]
fn wrong_schemas_are_rejected() {
    assert!(!matches("Mb", "6s"));
    assert!(!matches("Md", "3s+2L+3m"));
    assert!(!matches("Mh", "4m+3L"));
    assert!(!matches("Ma", "4s"));
}

#[test]
fn uniform_groups_take_any_single_letter() {
    for s in ["3s", "3m", "3L"] {
        assert!(matches("Ma", s), "{s}");
    }
    for s in ["4s", "4m", "4L"] {
        assert!(matches("Mc", s), "{s}");
    }
    let bone = data::ishango(MeVariant::Me10);
    let c = classify_notches(bone.group("Mc").unwrap(), &ClassifyParams::default()).unwrap();
    assert!(c.uniform);
}

#[test]
fn thresholds_change_the_clustering() {
    let bone = data::ishango(MeVariant::Me10);
    let md = bone.group("Md").unwrap();
    let coarse = ClassifyParams {
        gap_len_mm: 5.0,
        ..ClassifyParams::default()
    };
    let c = classify_notches(md, &coarse).unwrap();
    assert!(c.uniform, "{:?}", c.classes);
    assert!(!match_schema(md, &parse_schema("3L+2s+3m").unwrap(), &coarse).matched);

    let fine = ClassifyParams {
        gap_len_mm: 1.0,
        ..ClassifyParams::default()
    };
    let c = classify_notches(bone.group("Mh").unwrap(), &fine).unwrap();
    assert_eq!(
        c.classes
            .iter()
            .filter(|&&k| k == LengthClass::Medium)
            .count(),
        2
    );
}

#[test]
fn mg_subgroups_follow_the_wide_gap() {
    let bone = data::ishango(MeVariant::Me10);
    let mg = bone.group("Mg").unwrap();
    let c = classify_notches(mg, &ClassifyParams::default()).unwrap();
    assert_eq!(
        c.subgroup_boundaries.iter().copied().collect::<Vec<_>>(),
        vec![2]
    );
    assert!(matches("Mg", "2L (?) + 3m"));
    assert!(!matches("Mg", "(1m+1L+1m)+(2m)"));
}
