//! Transcription checks for the bundled normal forms. Run with
//! `--nocapture` to print every factor-1 matrix for comparison by eye.

use collineation::catalog::{self, Params};
use collineation::Field;

fn instance(name: &str) -> collineation::Tensor3 {
    let e = catalog::find(name).unwrap();
    let params = if e.is_family() { Params::lambda(2) } else { Params::new() };
    e.instantiate(&params, Field::Rational).unwrap()
}

#[test]
fn print_factor_one_matrices() {
    for e in catalog::entries().iter().filter(|e| e.table > 0) {
        let m = instance(&e.name).linear_matrix(1).unwrap();
        println!("{} (table {}), expected {:?}\n{m}", e.name, e.table, e.expected.get("1"));
    }
}

#[test]
fn every_table_entry_has_a_factor_one_label() {
    for e in catalog::entries().iter().filter(|e| e.table > 0) {
        assert!(e.expected_label(1).is_some(), "{}", e.name);
        assert_eq!(e.dims, [3, 3, 3], "{}", e.name);
    }
}

#[test]
fn terms_are_in_range_and_distinct() {
    for e in catalog::entries().iter().filter(|e| e.family.is_none()) {
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, k, coef) in &e.terms {
            assert!(*i < e.dims[0] && *j < e.dims[1] && *k < e.dims[2], "{}", e.name);
            assert!(seen.insert((*i, *j, *k)), "{} repeats ({i},{j},{k})", e.name);
            let body = coef.trim_start_matches('-');
            assert!(body == "1" || e.params.iter().any(|p| p == body), "{}: {coef}", e.name);
        }
    }
}

#[test]
fn recorded_strassen_ranks_of_the_extras() {
    for name in ["unit", "T1", "T2"] {
        let e = catalog::find(name).unwrap();
        let r = instance(name).strassen_flattening().unwrap().rank;
        assert_eq!(Some(r), e.strassen_rank, "{name}");
    }
}

#[test]
fn one_parameter_rows_depend_on_lambda() {
    for e in catalog::entries().iter().filter(|e| e.params.iter().any(|p| p == "lambda")) {
        let a = e.instantiate(&Params::lambda(2), Field::Rational).unwrap();
        let b = e.instantiate(&Params::lambda(3), Field::Rational).unwrap();
        assert_ne!(a, b, "{}", e.name);
    }
}
