use std::path::PathBuf;
use std::sync::Arc;

use serde_json::json;
use tan_core::ainfty::fixtures::{dg_pair, dg_pair_scaling, m3_endofunctor, m3_fixture, nonassociative, standard_simplex_dg};
use tan_core::ainfty::spec::{functor_to_spec, load_category, load_functor, CategorySpec};
use tan_core::ainfty::{AInftyCategory, AInftyFunctor};
use tan_core::exactlin::Field;
use tan_core::io::parse_horn;
use tan_core::nerve::Nerve;
use tan_core::quasicat::{horn_compatible, horn_fill};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn categories() -> Vec<(&'static str, AInftyCategory)> {
    let q = Field::Rational;
    vec![
        ("a2simplex.json", standard_simplex_dg(2, q)),
        ("a3simplex.json", standard_simplex_dg(3, q)),
        ("dg_pair.json", dg_pair(q)),
        ("m3.json", m3_fixture(q)),
        ("nonassoc.json", nonassociative(q)),
    ]
}

fn functors() -> Vec<(&'static str, &'static str, AInftyFunctor)> {
    let q = Field::Rational;
    vec![
        ("scale.json", "dg_pair.json", dg_pair_scaling(Arc::new(dg_pair(q)))),
        ("shear.json", "m3.json", m3_endofunctor(Arc::new(m3_fixture(q)))),
    ]
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn horn_text() -> String {
    pretty(&json!({
        "n": 2,
        "j": 1,
        "from": "0",
        "to": "2",
        "faces": {},
        "decomps": {
            "1": {
                "necklace": "1,1",
                "from": "0",
                "to": "2",
                "components": [
                    { "map": [0, 1, 2], "joints": [0, 1, 2], "terms": [[["(0,1)", "(1,2)"], "1"]] }
                ]
            }
        }
    }))
}

#[test]
fn shipped_fixtures_match_builders() {
    let bless = std::env::var_os("TAN_BLESS").is_some();
    for (file, cat) in categories() {
        let path = dir().join(file);
        if bless {
            std::fs::write(&path, pretty(&CategorySpec::from_category(&cat))).unwrap();
        }
        let loaded = load_category(&path, None).unwrap();
        assert_eq!(CategorySpec::from_category(&loaded), CategorySpec::from_category(&cat), "{file}");
    }
    for (file, base, f) in functors() {
        let path = dir().join(file);
        if bless {
            let mut spec = functor_to_spec(&f);
            spec.source = json!(base);
            spec.target = json!(base);
            std::fs::write(&path, pretty(&spec)).unwrap();
        }
        let loaded = load_functor(&path, None).unwrap();
        assert_eq!(functor_to_spec(&loaded), functor_to_spec(&f), "{file}");
    }
    let horn = dir().join("horn_a2.json");
    if bless {
        std::fs::write(&horn, horn_text()).unwrap();
    }
    assert_eq!(std::fs::read_to_string(horn).unwrap(), horn_text());
}

#[test]
fn example_horn_fills_with_unit_coefficient() {
    let a = load_category(&dir().join("a2simplex.json"), None).unwrap();
    let h = parse_horn(&a, &std::fs::read_to_string(dir().join("horn_a2.json")).unwrap()).unwrap();
    let nerve = Nerve::new(&a, Default::default());
    assert!(horn_compatible(&nerve, &h).unwrap().passed());
    let z = horn_fill(&nerve, &h).unwrap();
    let q = a.quiver();
    let e02 = q.lookup(0, 2, 0, "(0,2)").unwrap();
    let idx = tan_core::necklace::injective_index(&z.necklace);
    let d1 = idx.position(&tan_core::necklace::NecklaceMap::face(2, 1).unwrap()).unwrap();
    let id = idx.position(&tan_core::necklace::NecklaceMap::identity(&z.necklace)).unwrap();
    assert!(z.comps[id].is_zero());
    let terms: Vec<_> = z.comps[d1].terms().map(|(k, c)| (k.clone(), c.clone())).collect();
    assert_eq!(terms, vec![(vec![e02], a.field().one())]);
}
