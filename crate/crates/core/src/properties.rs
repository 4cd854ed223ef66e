use proptest::prelude::*;

use crate::cuts;
use crate::ea::build_ea;
use crate::engine::{ideals_equal, PathSpaceModel};
use crate::fuzz::{generate_monomial_algebra, FuzzConfig};
use crate::io::{parse_input, AlgebraFile, FbcFile, Input, PresentationFile};
use crate::presentation::{check_sf7, parse_element};
use crate::trivext::TrivialExtension;
use crate::{Fbc, MonomialAlgebra};

fn small_config(seed: u64) -> FuzzConfig {
    FuzzConfig { seed, count: 1, max_vertices: 4, max_arrows: 6, max_generator_len: 4, dim_cap: 30 }
}

fn algebra() -> impl Strategy<Value = MonomialAlgebra> {
    (any::<u64>(), 0usize..50).prop_map(|(seed, index)| generate_monomial_algebra(&small_config(seed), index).unwrap())
}

/// A random permutation with a degree that is constant on each orbit, and
/// singleton polygons and arrow classes.
fn permutation_configuration() -> impl Strategy<Value = Fbc> {
    (1usize..9)
        .prop_flat_map(|n| (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(1u64..13, n)))
        .prop_map(|(g, raw)| {
            let n = g.len();
            let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
            let singletons: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
            // spread the degree of each orbit's least angle over the orbit
            let mut degree = vec![0; n];
            for start in 0..n {
                let mut orbit = vec![start];
                let mut e = g[start];
                while e != start {
                    orbit.push(e);
                    e = g[e];
                }
                let least = *orbit.iter().min().unwrap();
                degree[start] = raw[least];
            }
            Fbc::new(names, g, singletons.clone(), singletons, degree).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn configuration_of_an_algebra_is_symmetric_of_type_s(a in algebra()) {
        let ea = build_ea(&a).unwrap();
        let report = ea.verify().unwrap();
        let angles: usize = a.maximal_paths().iter().map(|m| m.len() + 1).sum();
        prop_assert_eq!(report.angles, angles);
        prop_assert_eq!(report.polygons, a.quiver().vertex_count());
        prop_assert_eq!(report.arrows, a.quiver().arrow_count() + a.maximal_paths().len());
        prop_assert!(ea.fbc().is_symmetric());
        prop_assert!(ea.fbc().has_trivial_degree());
    }

    #[test]
    fn configuration_algebra_has_twice_the_dimension(a in algebra()) {
        let ea = build_ea(&a).unwrap();
        let pres = ea.presentation().unwrap();
        let model = PathSpaceModel::new(&pres).unwrap();
        prop_assert_eq!(model.dimension(), 2 * a.dimension());
        prop_assert_eq!(TrivialExtension::new(&a).dimension(), 2 * a.dimension());
        let c = model.cartan_matrix();
        for (i, row) in c.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                prop_assert_eq!(x, c[j][i]);
            }
        }
    }

    #[test]
    fn both_relation_descriptions_agree(a in algebra()) {
        let ea = build_ea(&a).unwrap();
        let cmp = ideals_equal(&ea.presentation().unwrap(), &ea.primed_presentation().unwrap()).unwrap();
        prop_assert!(cmp.equal());
        prop_assert_eq!(check_sf7(ea.fbc()).unwrap().holds, ea.fbc().check_f7().holds);
    }

    #[test]
    fn trivial_extension_identities(a in algebra()) {
        let te = TrivialExtension::new(&a);
        prop_assert!(te.check_sandwich_identity().is_ok());
        if te.dimension() <= 24 {
            prop_assert!(te.check_associativity().is_ok());
        }
    }

    #[test]
    fn cutting_the_dual_arrows_recovers_the_algebra(a in algebra()) {
        let report = cuts::verify_cut_recovers_algebra(&a).unwrap();
        prop_assert_eq!(report.dim_cut, a.dimension());
    }

    #[test]
    fn engine_dimension_of_monomial_presentation(a in algebra()) {
        let model = PathSpaceModel::new(&a.presentation()).unwrap();
        prop_assert_eq!(model.dimension(), a.dimension());
        for p in a.basis() {
            prop_assert!(!model.is_zero_path(p));
        }
        for g in a.generators() {
            prop_assert!(model.is_zero_path(g));
        }
    }

    #[test]
    fn file_formats_round_trip(a in algebra()) {
        let text = serde_json::to_string(&AlgebraFile::from_algebra(&a, None)).unwrap();
        let Input::Algebra { algebra: b, .. } = parse_input(&text, "x").unwrap() else { panic!("kind") };
        prop_assert_eq!(a.generators(), b.generators());
        prop_assert_eq!(a.basis(), b.basis());

        let ea = build_ea(&a).unwrap();
        let text = serde_json::to_string(&FbcFile::from_fbc(ea.fbc(), None)).unwrap();
        let Input::Fbc { fbc, .. } = parse_input(&text, "x").unwrap() else { panic!("kind") };
        prop_assert_eq!(fbc.polygons(), ea.fbc().polygons());
        prop_assert_eq!(fbc.arrow_classes(), ea.fbc().arrow_classes());

        let pres = ea.presentation().unwrap();
        let text = serde_json::to_string(&PresentationFile::from_presentation(&pres, None)).unwrap();
        let Input::Presentation { presentation, .. } = parse_input(&text, "x").unwrap() else { panic!("kind") };
        prop_assert_eq!(presentation.relations(), pres.relations());
    }

    #[test]
    fn relation_text_round_trips(a in algebra()) {
        let ea = build_ea(&a).unwrap();
        let pres = ea.primed_presentation().unwrap();
        let q = pres.quiver();
        let model = PathSpaceModel::new(&pres).unwrap();
        for r in pres.relations() {
            let terms = parse_element(q, &r.display(q)).unwrap();
            prop_assert!(model.contains(&terms));
        }
    }

    #[test]
    fn symmetric_iff_integral_f_degree(fbc in permutation_configuration()) {
        let integral = (0..fbc.orbits().len()).all(|o| fbc.f_degree(o).is_integer());
        prop_assert_eq!(fbc.is_symmetric(), integral);
        let nakayama = fbc.nakayama();
        for e in fbc.angles() {
            prop_assert_eq!(fbc.orbit_of(nakayama[e]), fbc.orbit_of(e));
        }
    }
}
