//! Special cycles, cutting sets and cut algebras of symmetric configurations
//! with trivial degree, and the two round trips between monomial algebras
//! and (configuration, admissible cut) pairs.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::One;

use crate::ea::build_ea;
use crate::engine::PathSpaceModel;
use crate::error::{Error, Result};
use crate::fbc::Fbc;
use crate::iso::{models_isomorphic, presentations_isomorphic, ArrowConstraint, Isomorphism, DEFAULT_NODE_BUDGET};
use crate::monomial::{enumerate_basis, MonomialAlgebra, DEFAULT_BASIS_CAP};
use crate::presentation::{self, special_paths, QuiverPresentation, RelationElement};
use crate::quiver::{Arrow, ArrowId, Path, Quiver};

/// The cycle `p` read from position `k`: arrows `k..` then `..k`.
pub fn rotate(q: &Quiver, p: &Path, k: usize) -> Path {
    let mut arrows = p.arrows()[k..].to_vec();
    arrows.extend_from_slice(&p.arrows()[..k]);
    q.path(&arrows).expect("rotation of a cycle")
}

/// Least rotation by arrow sequence.
pub fn canonical_rotation(q: &Quiver, p: &Path) -> Path {
    (0..p.len().max(1))
        .map(|k| if p.is_empty() { p.clone() } else { rotate(q, p, k) })
        .min_by(|a, b| a.arrows().cmp(b.arrows()).then(a.source().cmp(&b.source())))
        .unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialCycleClass {
    pub representative: Path,
    /// Special paths in the class, in canonical order.
    pub members: Vec<Path>,
    pub arrows: BTreeSet<ArrowId>,
}

fn require_cut_setting(fbc: &Fbc) -> Result<()> {
    if !fbc.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !fbc.has_trivial_degree() {
        return Err(Error::NotTrivialDegree);
    }
    Ok(())
}

pub fn special_cycle_classes(fbc: &Fbc) -> Result<Vec<SpecialCycleClass>> {
    require_cut_setting(fbc)?;
    let q = presentation::build_quiver(fbc)?;
    let mut classes: BTreeMap<Vec<ArrowId>, SpecialCycleClass> = BTreeMap::new();
    for p in special_paths(fbc) {
        let rep = canonical_rotation(&q, &p);
        let class = classes.entry(rep.arrows().to_vec()).or_insert_with(|| SpecialCycleClass {
            arrows: rep.arrows().iter().copied().collect(),
            representative: rep,
            members: Vec::new(),
        });
        class.members.push(p);
    }
    Ok(classes.into_values().collect())
}

/// Positions of the representative whose arrow lies in `d`.
fn hits(class: &SpecialCycleClass, d: &BTreeSet<ArrowId>) -> usize {
    class.representative.arrows().iter().filter(|a| d.contains(a)).count()
}

/// Every special cycle passes through `D` exactly once.
pub fn is_cutting_set(classes: &[SpecialCycleClass], d: &BTreeSet<ArrowId>) -> bool {
    classes.iter().all(|c| hits(c, d) == 1)
}

pub fn is_admissible(classes: &[SpecialCycleClass], d: &BTreeSet<ArrowId>) -> bool {
    is_cutting_set(classes, d) && d.len() == classes.len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutChoice {
    /// One arrow per class, in class order.
    pub choice: Vec<ArrowId>,
    pub arrows: BTreeSet<ArrowId>,
    pub cutting_set: bool,
    pub admissible: bool,
}

/// All ways of picking one arrow from each class, in lexicographic order.
pub fn enumerate_cut_choices(fbc: &Fbc) -> Result<Vec<CutChoice>> {
    let classes = special_cycle_classes(fbc)?;
    let options: Vec<Vec<ArrowId>> = classes.iter().map(|c| c.arrows.iter().copied().collect()).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; options.len()];
    if options.iter().any(|o| o.is_empty()) {
        return Ok(out);
    }
    loop {
        let choice: Vec<ArrowId> = idx.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        let arrows: BTreeSet<ArrowId> = choice.iter().copied().collect();
        out.push(CutChoice {
            cutting_set: is_cutting_set(&classes, &arrows),
            admissible: is_admissible(&classes, &arrows),
            choice,
            arrows,
        });
        let mut k = options.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < options[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The quiver with the arrows of `d` removed, plus the map from old arrow ids.
pub fn subquiver_without(q: &Quiver, d: &BTreeSet<ArrowId>) -> (Quiver, HashMap<ArrowId, ArrowId>) {
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut map = HashMap::new();
    for a in q.arrow_ids() {
        if !d.contains(&a) {
            map.insert(a, ArrowId(arrows.len()));
            arrows.push(q.arrow(a).clone());
        }
    }
    (Quiver::new(q.vertex_names().to_vec(), arrows).expect("subquiver of a valid quiver"), map)
}

fn translate(q: &Quiver, map: &HashMap<ArrowId, ArrowId>, p: &Path) -> Path {
    if p.is_trivial() {
        return Path::trivial(p.source());
    }
    let arrows: Vec<ArrowId> = p.arrows().iter().map(|a| map[a]).collect();
    q.path(&arrows).expect("path inside the subquiver")
}

/// An arrow equal in the algebra to a scalar multiple of a longer path.
fn redundant_arrow(pres: &QuiverPresentation) -> Option<(usize, ArrowId, BigRational, Path)> {
    pres.relations().iter().enumerate().find_map(|(i, r)| {
        if r.terms.len() != 2 {
            return None;
        }
        let (short, long) = if r.terms[0].path.len() <= r.terms[1].path.len() {
            (&r.terms[0], &r.terms[1])
        } else {
            (&r.terms[1], &r.terms[0])
        };
        if short.path.len() != 1 || long.path.len() < 2 {
            return None;
        }
        let a = short.path.arrows()[0];
        if long.path.arrows().contains(&a) {
            return None;
        }
        Some((i, a, -(&long.coeff / &short.coeff), long.path.clone()))
    })
}

/// Substitutes away arrows that equal a multiple of a longer path, so that
/// the remaining arrows are irreducible. Returns the reduced presentation and
/// the map from surviving original arrows to their new ids.
pub fn eliminate_redundant_arrows(pres: &QuiverPresentation) -> Result<(QuiverPresentation, HashMap<ArrowId, ArrowId>)> {
    let mut current = pres.clone();
    let mut survivors: HashMap<ArrowId, ArrowId> = pres.quiver().arrow_ids().map(|a| (a, a)).collect();
    while let Some((index, alpha, scale, image)) = redundant_arrow(&current) {
        let q = current.quiver();
        let (sub, map) = subquiver_without(q, &[alpha].into());
        let mut relations = Vec::new();
        for (i, r) in current.relations().iter().enumerate() {
            if i == index {
                continue;
            }
            let mut terms = Vec::new();
            for t in &r.terms {
                let mut coeff = t.coeff.clone();
                let mut word = Vec::new();
                for &a in t.path.arrows() {
                    if a == alpha {
                        coeff *= &scale;
                        word.extend_from_slice(image.arrows());
                    } else {
                        word.push(a);
                    }
                }
                let path = if word.is_empty() { t.path.clone() } else { q.path(&word)? };
                terms.push((coeff, translate(&sub, &map, &path)));
            }
            // relations that cancel out entirely are dropped
            if let Ok(rel) = RelationElement::from_terms(r.kind, terms) {
                relations.push(rel);
            }
        }
        survivors = survivors
            .into_iter()
            .filter_map(|(orig, now)| map.get(&now).map(|&new| (orig, new)))
            .collect();
        current = QuiverPresentation::new_unchecked(sub, relations);
    }
    Ok((current, survivors))
}

#[derive(Clone, Debug)]
pub enum CutOutcome {
    Monomial {
        algebra: MonomialAlgebra,
        dim_cut: usize,
    },
    NonMonomial {
        dim_cut: usize,
        monomial_dim: usize,
        /// Two parallel paths of the subquiver, nonzero but proportional in
        /// the cut algebra.
        witness: Option<(Path, Path)>,
        subquiver: Quiver,
    },
}

impl CutOutcome {
    pub fn is_monomial(&self) -> bool {
        matches!(self, CutOutcome::Monomial { .. })
    }

    pub fn dim_cut(&self) -> usize {
        match self {
            CutOutcome::Monomial { dim_cut, .. } | CutOutcome::NonMonomial { dim_cut, .. } => *dim_cut,
        }
    }
}

/// `kQ_Λ/⟨I_Λ ∪ D⟩`, returned as a monomial algebra on `Q_Λ` minus `D` when
/// the zero paths there account for the whole quotient.
pub fn cut_algebra(pres: &QuiverPresentation, d: &BTreeSet<ArrowId>) -> Result<CutOutcome> {
    let killed: Vec<ArrowId> = d.iter().copied().collect();
    let model = PathSpaceModel::new(&pres.killing_arrows(&killed))?;
    let dim_cut = model.dimension();
    let q = pres.quiver();
    let (sub, map) = subquiver_without(q, d);
    let kept: Vec<ArrowId> = q.arrow_ids().filter(|a| !d.contains(a)).collect();
    let zero = model.minimal_zero_paths(&kept);
    let gens: Vec<Path> = zero.iter().map(|p| translate(&sub, &map, p)).collect();
    let short = gens.iter().any(|g| g.len() < 2);
    let basis = enumerate_basis(&sub, &gens, DEFAULT_BASIS_CAP)?;
    if !short && basis.len() == dim_cut {
        let algebra = MonomialAlgebra::new(sub, gens)?;
        return Ok(CutOutcome::Monomial { algebra, dim_cut });
    }

    // look for two parallel nonzero paths that are proportional modulo the ideal
    let back: HashMap<ArrowId, ArrowId> = map.iter().map(|(k, v)| (*v, *k)).collect();
    let forms: Vec<(Path, Vec<(usize, BigRational)>)> = basis
        .iter()
        .map(|p| {
            let orig = translate(q, &back, p);
            (p.clone(), model.normal_form(&[(BigRational::one(), orig)]))
        })
        .filter(|(_, f)| !f.is_empty())
        .collect();
    let mut witness = None;
    'search: for (i, (p, fp)) in forms.iter().enumerate() {
        for (r, fr) in &forms[i + 1..] {
            if p.source() != r.source() || p.target() != r.target() || fp.len() != fr.len() {
                continue;
            }
            let ratio = &fr[0].1 / &fp[0].1;
            if fp.iter().zip(fr).all(|(a, b)| a.0 == b.0 && &a.1 * &ratio == b.1) {
                witness = Some((p.clone(), r.clone()));
                break 'search;
            }
        }
    }
    Ok(CutOutcome::NonMonomial {
        dim_cut,
        monomial_dim: basis.len(),
        witness,
        subquiver: sub,
    })
}

#[derive(Clone, Debug)]
pub struct RecoveryReport {
    pub dim_a: usize,
    pub dim_trivial_extension: usize,
    pub dim_cut: usize,
    pub isomorphism: Isomorphism,
}

/// Cutting the algebra of `E_A` at the dual arrows gives back `A`.
pub fn verify_cut_recovers_algebra(a: &MonomialAlgebra) -> Result<RecoveryReport> {
    let ea = build_ea(a)?;
    let pres = ea.presentation()?;
    let d: BTreeSet<ArrowId> = ea.dual_arrows().into_iter().collect();
    let classes = special_cycle_classes(ea.fbc())?;
    if !is_admissible(&classes, &d) {
        return Err(Error::VerificationFailed("dual arrows do not form an admissible cut".into()));
    }
    let (algebra, dim_cut) = match cut_algebra(&pres, &d)? {
        CutOutcome::Monomial { algebra, dim_cut } => (algebra, dim_cut),
        CutOutcome::NonMonomial { dim_cut, monomial_dim, .. } => {
            return Err(Error::VerificationFailed(format!(
                "cut algebra is not monomial ({dim_cut} vs {monomial_dim})"
            )))
        }
    };
    let iso = presentations_isomorphic(&algebra.presentation(), &a.presentation(), None)?
        .ok_or_else(|| Error::VerificationFailed("cut algebra is not isomorphic to A".into()))?;
    Ok(RecoveryReport {
        dim_a: a.dimension(),
        dim_trivial_extension: crate::engine::dimension(&pres)?,
        dim_cut,
        isomorphism: iso,
    })
}

#[derive(Clone, Debug)]
pub struct RoundTripReport {
    pub cut: MonomialAlgebra,
    pub dim_cut: usize,
    pub dim_original: usize,
    pub isomorphism: Isomorphism,
}

/// Cuts the configuration's algebra at `d` and checks that the trivial
/// extension of the cut algebra is the original algebra.
pub fn verify_cut_round_trip(fbc: &Fbc, d: &BTreeSet<ArrowId>) -> Result<RoundTripReport> {
    require_cut_setting(fbc)?;
    let pres = presentation::presentation(fbc)?;
    let classes = special_cycle_classes(fbc)?;
    if !is_admissible(&classes, d) {
        return Err(Error::InvalidInput("the arrow set is not an admissible cut".into()));
    }
    let (algebra, dim_cut) = match cut_algebra(&pres, d)? {
        CutOutcome::Monomial { algebra, dim_cut } => (algebra, dim_cut),
        CutOutcome::NonMonomial { dim_cut, monomial_dim, .. } => {
            return Err(Error::VerificationFailed(format!(
                "cut algebra is not monomial ({dim_cut} vs {monomial_dim})"
            )))
        }
    };
    let ea = build_ea(&algebra)?;
    let (reduced_ea, _) = eliminate_redundant_arrows(&ea.presentation()?)?;
    let (reduced, _) = eliminate_redundant_arrows(&pres)?;
    let iso = presentations_isomorphic(&reduced_ea, &reduced, None)?
        .ok_or_else(|| Error::VerificationFailed("trivial extension of the cut is not isomorphic".into()))?;
    Ok(RoundTripReport {
        cut: algebra,
        dim_cut,
        dim_original: crate::engine::dimension(&pres)?,
        isomorphism: iso,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessEntry {
    pub instance: String,
    pub passed: bool,
    pub detail: String,
}

/// Both directions of the correspondence between monomial algebras and
/// pairs (configuration, admissible cut). For a pair the isomorphism must
/// carry the dual arrows onto the given cut.
pub fn bijection_harness(
    algebras: &[(String, MonomialAlgebra)],
    pairs: &[(String, Fbc, BTreeSet<ArrowId>)],
) -> Result<Vec<HarnessEntry>> {
    let mut out = Vec::new();
    for (name, a) in algebras {
        let entry = match verify_cut_recovers_algebra(a) {
            Ok(r) => HarnessEntry {
                instance: name.clone(),
                passed: true,
                detail: format!("dim {} recovered from dim {}", r.dim_cut, r.dim_trivial_extension),
            },
            Err(e) if e.is_resource_limit() => return Err(e),
            Err(e) => HarnessEntry { instance: name.clone(), passed: false, detail: e.to_string() },
        };
        out.push(entry);
    }
    for (name, fbc, d) in pairs {
        let entry = match pair_round_trip(fbc, d) {
            Ok(detail) => HarnessEntry { instance: name.clone(), passed: true, detail },
            Err(e) if e.is_resource_limit() => return Err(e),
            Err(e) => HarnessEntry { instance: name.clone(), passed: false, detail: e.to_string() },
        };
        out.push(entry);
    }
    Ok(out)
}

fn pair_round_trip(fbc: &Fbc, d: &BTreeSet<ArrowId>) -> Result<String> {
    let report = verify_cut_round_trip(fbc, d)?;
    let ea = build_ea(&report.cut)?;
    let (reduced_ea, ea_map) = eliminate_redundant_arrows(&ea.presentation()?)?;
    let (reduced, map) = eliminate_redundant_arrows(&presentation::presentation(fbc)?)?;
    // cut arrows that are products of other arrows have no image to match
    let constraint = ArrowConstraint {
        first: ea.dual_arrows().iter().filter_map(|a| ea_map.get(a).copied()).collect(),
        second: d.iter().filter_map(|a| map.get(a).copied()).collect(),
    };
    let m1 = PathSpaceModel::new(&reduced_ea)?;
    let m2 = PathSpaceModel::new(&reduced)?;
    models_isomorphic(&m1, &m2, Some(&constraint), DEFAULT_NODE_BUDGET)?
        .ok_or_else(|| Error::VerificationFailed("no isomorphism carries the dual arrows onto the cut".into()))?;
    Ok(format!("cut of dim {} re-extends to dim {}", report.dim_cut, report.dim_original))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn arrows(q: &Quiver, names: &[&str]) -> BTreeSet<ArrowId> {
        names.iter().map(|n| q.arrow_by_name(n).unwrap()).collect()
    }

    #[test]
    fn rotations() {
        let fbc = fixtures::eight_angle_type_s();
        let q = presentation::build_quiver(&fbc).unwrap();
        let p = fbc.special_path(fbc.angle_by_name("2").unwrap());
        let r = canonical_rotation(&q, &p);
        assert_eq!(q.display_path(&r), "L(3)·L(2)·L(1)");
        assert_eq!(rotate(&q, &p, 0), p);
    }

    #[test]
    fn shared_arrow_classes() {
        let fbc = fixtures::shared_arrow_two_cycles();
        let q = presentation::build_quiver(&fbc).unwrap();
        let classes = special_cycle_classes(&fbc).unwrap();
        assert_eq!(classes.len(), 2);
        let gamma = q.arrow_by_name("L(4)").unwrap();
        assert!(classes.iter().all(|c| c.arrows.contains(&gamma)));
        assert!(classes.iter().all(|c| c.members.len() == 3));
    }

    #[test]
    fn shared_arrow_choices() {
        let fbc = fixtures::shared_arrow_two_cycles();
        let q = presentation::build_quiver(&fbc).unwrap();
        let choices = enumerate_cut_choices(&fbc).unwrap();
        assert_eq!(choices.len(), 9);
        let gamma = q.arrow_by_name("L(4)").unwrap();
        let only_gamma: Vec<&CutChoice> = choices.iter().filter(|c| c.arrows == [gamma].into()).collect();
        assert_eq!(only_gamma.len(), 1);
        assert!(only_gamma[0].cutting_set && !only_gamma[0].admissible);
        let admissible: Vec<&CutChoice> = choices.iter().filter(|c| c.admissible).collect();
        assert_eq!(admissible.len(), 4);
        assert!(admissible.iter().all(|c| !c.arrows.contains(&gamma)));
        // a choice meeting one cycle twice is no cutting set
        let mixed = arrows(&q, &["L(4)", "L(1)"]);
        assert!(!choices.iter().find(|c| c.arrows == mixed).unwrap().cutting_set);
    }

    #[test]
    fn gamma_cut_is_not_monomial() {
        let fbc = fixtures::shared_arrow_two_cycles();
        let pres = presentation::presentation(&fbc).unwrap();
        let q = pres.quiver();
        match cut_algebra(&pres, &arrows(q, &["L(4)"])).unwrap() {
            CutOutcome::NonMonomial { dim_cut, monomial_dim, witness, subquiver } => {
                assert_eq!(dim_cut, 9);
                assert_eq!(monomial_dim, 10);
                let (p, r) = witness.unwrap();
                let shown: BTreeSet<String> = [subquiver.display_path(&p), subquiver.display_path(&r)].into();
                assert_eq!(shown, ["L(2)·L(1)".to_string(), "L(3)·L(1')".to_string()].into());
            }
            other => panic!("expected a non-monomial cut, got {other:?}"),
        }
    }

    #[test]
    fn admissible_cut_round_trip() {
        let fbc = fixtures::shared_arrow_two_cycles();
        let q = presentation::build_quiver(&fbc).unwrap();
        let d = arrows(&q, &["L(1)", "L(3)"]);
        let pres = presentation::presentation(&fbc).unwrap();
        let cut = cut_algebra(&pres, &d).unwrap();
        assert!(cut.is_monomial());
        assert_eq!(cut.dim_cut(), 9);
        let report = verify_cut_round_trip(&fbc, &d).unwrap();
        assert_eq!(report.dim_original, 18);
    }

    #[test]
    fn loops_equal_to_longer_paths_are_eliminated() {
        // L(3') = L(2)·L(1)·L(3) and L(4) = L(2')·L(1)·L(4') in the algebra
        let fbc = fixtures::eight_angle_type_s();
        let pres = presentation::presentation(&fbc).unwrap();
        let (reduced, map) = eliminate_redundant_arrows(&pres).unwrap();
        assert_eq!(reduced.quiver().arrow_count(), 5);
        let q = pres.quiver();
        let gone: BTreeSet<&str> = q.arrow_ids().filter(|a| !map.contains_key(a)).map(|a| q.arrow(a).name.as_str()).collect();
        assert_eq!(gone, ["L(3')", "L(4)"].into());
        assert_eq!(crate::engine::dimension(&reduced).unwrap(), 18);
        let choices = enumerate_cut_choices(&fbc).unwrap();
        let admissible: Vec<_> = choices.iter().filter(|c| c.admissible).collect();
        assert_eq!(admissible.len(), 4);
        for c in admissible {
            let report = verify_cut_round_trip(&fbc, &c.arrows).unwrap();
            assert_eq!(report.dim_cut, 9);
            assert!(pair_round_trip(&fbc, &c.arrows).is_ok());
        }
    }

    #[test]
    fn every_admissible_cut_round_trips() {
        let configurations = [
            fixtures::shared_arrow_two_cycles(),
            fixtures::eight_angle_type_s(),
            fixtures::truncated_loop_configuration(),
            build_ea(&fixtures::diamond()).unwrap().fbc().clone(),
        ];
        for fbc in configurations {
            for c in enumerate_cut_choices(&fbc).unwrap() {
                if c.admissible {
                    verify_cut_round_trip(&fbc, &c.arrows).unwrap();
                }
            }
        }
    }

    #[test]
    fn truncated_loop_cuts() {
        let ea = build_ea(&fixtures::truncated_loop_x3()).unwrap();
        let choices = enumerate_cut_choices(ea.fbc()).unwrap();
        assert_eq!(choices.len(), 2);
        let duals: BTreeSet<ArrowId> = ea.dual_arrows().into_iter().collect();
        for c in &choices {
            assert_eq!(c.admissible, c.arrows == duals);
        }
        let pres = ea.presentation().unwrap();
        match cut_algebra(&pres, &duals).unwrap() {
            CutOutcome::Monomial { algebra, dim_cut } => {
                assert_eq!(dim_cut, 3);
                let g: Vec<String> = algebra.generators().iter().map(|p| algebra.quiver().display_path(p)).collect();
                assert_eq!(g, ["x·x·x"]);
            }
            other => panic!("{other:?}"),
        }
        verify_cut_round_trip(ea.fbc(), &duals).unwrap();
    }

    #[test]
    fn recovery_on_fixtures() {
        for a in [fixtures::truncated_loop_x3(), fixtures::diamond()] {
            let r = verify_cut_recovers_algebra(&a).unwrap();
            assert_eq!(r.dim_cut, a.dimension());
            assert_eq!(r.dim_trivial_extension, 2 * a.dimension());
        }
        let point = MonomialAlgebra::new(Quiver::from_names::<&str>(&["1"], &[]).unwrap(), vec![]).unwrap();
        verify_cut_recovers_algebra(&point).unwrap();
    }

    #[test]
    fn diamond_cut_generators() {
        let a = fixtures::diamond();
        let ea = build_ea(&a).unwrap();
        let d: BTreeSet<ArrowId> = ea.dual_arrows().into_iter().collect();
        match cut_algebra(&ea.presentation().unwrap(), &d).unwrap() {
            CutOutcome::Monomial { algebra, .. } => {
                let g: Vec<String> = algebra.generators().iter().map(|p| algebra.quiver().display_path(p)).collect();
                assert_eq!(g, ["a3·a2·a1"]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn single_angle() {
        let fbc = Fbc::with_trivial_degree(vec!["a".into()], vec![0], vec![vec![0]], vec![vec![0]]).unwrap();
        let classes = special_cycle_classes(&fbc).unwrap();
        assert_eq!(classes.len(), 1);
        let choices = enumerate_cut_choices(&fbc).unwrap();
        assert_eq!(choices.len(), 1);
        assert!(choices[0].admissible);
        let r = verify_cut_round_trip(&fbc, &choices[0].arrows).unwrap();
        assert_eq!(r.dim_cut, 1);
        assert_eq!(r.dim_original, 2);
    }

    #[test]
    fn harness() {
        let fbc = fixtures::shared_arrow_two_cycles();
        let q = presentation::build_quiver(&fbc).unwrap();
        let entries = bijection_harness(
            &[("x3".into(), fixtures::truncated_loop_x3()), ("diamond".into(), fixtures::diamond())],
            &[("shared".into(), fbc, arrows(&q, &["L(1)", "L(3)"]))],
        )
        .unwrap();
        assert_eq!(entries.len(), 3);
        assert!(entries.iter().all(|e| e.passed), "{entries:?}");
        assert!(bijection_harness(&[], &[]).unwrap().is_empty());
    }

    #[test]
    fn requires_symmetric_trivial_degree() {
        let names = vec!["a".to_string(), "b".to_string()];
        let fbc = Fbc::new(names.clone(), vec![1, 0], vec![vec![0, 1]], vec![vec![0], vec![1]], vec![3, 3]).unwrap();
        assert!(matches!(special_cycle_classes(&fbc), Err(Error::NotSymmetric)));
        let fbc = Fbc::new(names, vec![1, 0], vec![vec![0, 1]], vec![vec![0], vec![1]], vec![4, 4]).unwrap();
        assert!(matches!(special_cycle_classes(&fbc), Err(Error::NotTrivialDegree)));
    }
}
