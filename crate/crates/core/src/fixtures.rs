//! Shared test inputs.

use crate::ea::build_ea;
use crate::fbc::Fbc;
use crate::io::{parse_input, Input};
use crate::monomial::MonomialAlgebra;
use crate::presentation::QuiverPresentation;

fn fbc(text: &str) -> Fbc {
    match parse_input(text, "fixture").unwrap() {
        Input::Fbc { fbc, .. } => fbc,
        other => panic!("not a configuration: {other:?}"),
    }
}

fn algebra(text: &str) -> MonomialAlgebra {
    match parse_input(text, "fixture").unwrap() {
        Input::Algebra { algebra, .. } => algebra,
        other => panic!("not an algebra: {other:?}"),
    }
}

fn presentation(text: &str) -> QuiverPresentation {
    match parse_input(text, "fixture").unwrap() {
        Input::Presentation { presentation, .. } => presentation,
        other => panic!("not a presentation: {other:?}"),
    }
}

pub fn eight_angle_type_s() -> Fbc {
    fbc(include_str!("../fixtures/eight_angle_type_s.fbc.json"))
}

pub fn twelve_angle_not_type_s() -> Fbc {
    fbc(include_str!("../fixtures/twelve_angle_not_type_s.fbc.json"))
}

pub fn shared_arrow_two_cycles() -> Fbc {
    fbc(include_str!("../fixtures/shared_arrow_two_cycles.fbc.json"))
}

pub fn eight_angle_listed_relations() -> QuiverPresentation {
    presentation(include_str!("../fixtures/eight_angle_listed_relations.pres.json"))
}

pub fn two_loop_commutative() -> QuiverPresentation {
    presentation(include_str!("../fixtures/two_loop_commutative.pres.json"))
}

pub fn truncated_loop_x3() -> MonomialAlgebra {
    algebra(include_str!("../fixtures/truncated_loop_x3.algebra.json"))
}

pub fn diamond() -> MonomialAlgebra {
    algebra(include_str!("../fixtures/diamond_path_relation.algebra.json"))
}

pub fn truncated_loop_configuration() -> Fbc {
    build_ea(&truncated_loop_x3()).unwrap().fbc().clone()
}

/// Orbits `(a b)` and `(c)`, polygons `{a, c}` and `{b}`, singleton arrow classes.
pub fn two_orbit_trivial_partition() -> Fbc {
    fbc(r#"{"angles":["a","b","c"],"g":{"a":"b","b":"a","c":"c"},
        "P":[["a","c"],["b"]],"L":[["a"],["b"],["c"]],"d":"trivial"}"#)
}

/// One orbit of length three with singleton polygons and arrow classes.
pub fn singleton_polygons() -> Fbc {
    fbc(r#"{"angles":["a","b","c"],"g":{"a":"b","b":"c","c":"a"},
        "P":[["a"],["b"],["c"]],"L":[["a"],["b"],["c"]],"d":"trivial"}"#)
}

pub fn all_configurations() -> Vec<Fbc> {
    vec![
        eight_angle_type_s(),
        twelve_angle_not_type_s(),
        shared_arrow_two_cycles(),
        truncated_loop_configuration(),
        two_orbit_trivial_partition(),
        singleton_polygons(),
        build_ea(&diamond()).unwrap().fbc().clone(),
    ]
}
