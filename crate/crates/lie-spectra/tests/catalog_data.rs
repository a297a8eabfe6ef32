//! Shipped-catalog shakeout: every non-pending entry instantiates, passes
//! embedding validation, and reproduces the transcribed Einstein constant.

use lie_spectra::catalog::{load_catalog, Catalog};
use lie_spectra::expr::Params;
use std::path::PathBuf;

fn data(name: &str) -> Catalog {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    load_catalog(&p).unwrap()
}

#[test]
fn catalog_counts() {
    let irr = data("irreducible.cat");
    assert_eq!(irr.family_count(), 10);
    assert_eq!(irr.isolated_count(), 33);
    let red = data("reducible.cat");
    assert_eq!(red.family_count(), 9);
    assert_eq!(red.isolated_count(), 22);
}

fn check_all(cat: &Catalog, skip_heavy: &[&str]) {
    let mut instantiated = 0;
    let mut pending = 0;
    for entry in &cat.entries {
        if entry.is_pending() {
            pending += 1;
            continue;
        }
        if skip_heavy.contains(&entry.id.as_str()) {
            continue;
        }
        let grids = entry.default_instances().unwrap();
        assert!(
            !grids.is_empty(),
            "{}: no parameter assignment satisfies the constraints",
            entry.id
        );
        for params in &grids {
            let space = entry
                .instantiate(params)
                .unwrap_or_else(|e| panic!("{} {params:?}: {e}", entry.id));
            if let Some(expected) = entry.expected_two_e(params).unwrap() {
                assert_eq!(
                    space.two_e, expected,
                    "{} {params:?}: Einstein constant mismatch",
                    entry.id
                );
            }
            instantiated += 1;
        }
    }
    println!("instantiated {instantiated} spaces ({pending} entries pending)");
}

#[test]
fn reducible_catalog_instantiates_and_matches_two_e() {
    check_all(&data("reducible.cat"), &[]);
}

#[test]
fn irreducible_catalog_instantiates_and_matches_two_e() {
    // the largest ambient algebras are checked separately below
    check_all(&data("irreducible.cat"), &["iso-4", "iso-17", "iso-18"]);
}

#[test]
fn irreducible_catalog_heaviest_entries() {
    let irr = data("irreducible.cat");
    for id in ["iso-4", "iso-17", "iso-18"] {
        let entry = irr.find(id).unwrap();
        let space = entry.instantiate(&Params::new()).unwrap();
        let expected = entry.expected_two_e(&Params::new()).unwrap().unwrap();
        assert_eq!(space.two_e, expected, "{id}");
    }
}
