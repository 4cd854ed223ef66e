//! The aggregate verification suite behind `fbca suite`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cuts::{bijection_harness, enumerate_cut_choices, verify_cut_recovers_algebra, verify_cut_round_trip};
use crate::ea::build_ea;
use crate::engine::{ideals_equal, PathSpaceModel};
use crate::error::{Error, Result};
use crate::fbc::Fbc;
use crate::fuzz::{generate_monomial_algebra, FuzzConfig};
use crate::io::Input;
use crate::iso::presentations_isomorphic;
use crate::monomial::MonomialAlgebra;
use crate::presentation::{self, check_sf7, QuiverPresentation};
use crate::quiver::ArrowId;
use crate::trivext::verify_trivial_extension_iso;

pub const CHECKS: [&str; 9] = [
    "fbc-axioms",
    "ideal-equality",
    "sf7-f7-agreement",
    "ea-symmetric-type-s",
    "trivial-extension-iso",
    "cut-recovers-algebra",
    "trivial-extension-of-cut",
    "pair-bijection",
    "cartan-symmetry",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub instance: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// An input file together with the file name other inputs refer to it by.
#[derive(Clone, Debug)]
pub struct SuiteInput {
    pub file: String,
    pub input: Input,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Fuzzed algebras to add; `None` adds none.
    pub fuzz: Option<FuzzConfig>,
    /// Overrides the `expect_type_s` field of every configuration file.
    pub expect_type_s: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.verdict == Verdict::Pass)
    }

    pub fn hit_resource_limit(&self) -> bool {
        self.results
            .iter()
            .any(|r| r.verdict == Verdict::Error && r.witness.as_deref().is_some_and(|w| w.starts_with(RESOURCE_TAG)))
    }

    /// 0 when everything passes, 3 when a resource cap was hit, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else if self.hit_resource_limit() {
            3
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.results).expect("report serializes") + "\n"
    }
}

const RESOURCE_TAG: &str = "resource limit: ";

struct Collector {
    results: Vec<CheckResult>,
}

impl Collector {
    fn record(&mut self, check: &str, instance: &str, outcome: Result<std::result::Result<(), String>>) {
        let (verdict, witness) = match outcome {
            Ok(Ok(())) => (Verdict::Pass, None),
            Ok(Err(w)) => (Verdict::Fail, Some(w)),
            Err(e @ Error::VerificationFailed(_)) => (Verdict::Fail, Some(e.to_string())),
            Err(e) if e.is_resource_limit() => (Verdict::Error, Some(format!("{RESOURCE_TAG}{e}"))),
            Err(e) => (Verdict::Error, Some(e.to_string())),
        };
        self.results.push(CheckResult {
            check: check.to_string(),
            instance: instance.to_string(),
            verdict,
            witness,
        });
    }
}

fn ok_if(cond: bool, witness: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

/// A configuration under test: from a file, or `E_A` of an algebra.
struct Configuration {
    name: String,
    fbc: Fbc,
    expect_type_s: Option<bool>,
}

fn in_cut_setting(fbc: &Fbc) -> bool {
    fbc.check_axioms().all_hold()
        && fbc.is_symmetric()
        && fbc.has_trivial_degree()
        && check_sf7(fbc).map(|v| v.holds).unwrap_or(false)
}

fn cut_label(pres: &QuiverPresentation, d: &BTreeSet<ArrowId>) -> String {
    let q = pres.quiver();
    let names: Vec<&str> = d.iter().map(|&a| q.arrow(a).name.as_str()).collect();
    format!("{{{}}}", names.join(","))
}

pub fn run_suite(inputs: &[SuiteInput], options: &SuiteOptions) -> Result<SuiteReport> {
    let mut algebras: Vec<(String, MonomialAlgebra)> = Vec::new();
    let mut configurations: Vec<Configuration> = Vec::new();
    let mut presentations: Vec<(String, QuiverPresentation, Option<String>, Option<String>)> = Vec::new();
    for si in inputs {
        match &si.input {
            Input::Algebra { name, algebra } => algebras.push((name.clone(), algebra.clone())),
            Input::Fbc { name, fbc, expect_type_s } => configurations.push(Configuration {
                name: name.clone(),
                fbc: fbc.clone(),
                expect_type_s: options.expect_type_s.or(*expect_type_s),
            }),
            Input::Presentation { name, presentation, for_fbc, for_algebra } => {
                presentations.push((name.clone(), presentation.clone(), for_fbc.clone(), for_algebra.clone()))
            }
        }
    }
    if let Some(config) = &options.fuzz {
        for i in 0..config.count {
            algebras.push((format!("fuzz-{i}"), generate_monomial_algebra(config, i)?));
        }
    }
    let by_file = |file: &Option<String>| -> Option<&Input> {
        file.as_ref()
            .and_then(|f| inputs.iter().find(|si| &si.file == f || si.input.name() == f))
            .map(|si| &si.input)
    };

    // configurations of algebras join the file configurations for the
    // configuration-level checks
    let mut all_configurations: Vec<Configuration> = Vec::new();
    for c in &configurations {
        all_configurations.push(Configuration { name: c.name.clone(), fbc: c.fbc.clone(), expect_type_s: c.expect_type_s });
    }
    for (name, a) in &algebras {
        if let Ok(ea) = build_ea(a) {
            all_configurations.push(Configuration {
                name: format!("E_A({name})"),
                fbc: ea.fbc().clone(),
                expect_type_s: Some(true),
            });
        }
    }

    let mut out = Collector { results: Vec::new() };

    // fbc-axioms
    for c in &configurations {
        let fbc = &c.fbc;
        let report = fbc.check_axioms();
        let outcome = (|| -> Result<std::result::Result<(), String>> {
            if let Some(v) = report.first_failure() {
                return Ok(Err(format!("{} fails: {}", v.axiom, v.witness.iter().map(|&e| fbc.name(e)).collect::<Vec<_>>().join(", "))));
            }
            let Some(expected) = c.expect_type_s else { return Ok(Ok(())) };
            let f7 = fbc.check_f7();
            if f7.holds != expected {
                let witness = f7
                    .witness
                    .map(|(p, q)| format!("({}, {})", fbc.display_sequence(p), fbc.display_sequence(q)))
                    .unwrap_or_default();
                return Ok(Err(format!("f7 = {}, expected {expected} {witness}", f7.holds)));
            }
            if fbc.is_symmetric() {
                let sf7 = check_sf7(fbc)?;
                if sf7.holds != expected {
                    let q = presentation::build_quiver(fbc)?;
                    let witness = sf7
                        .witness
                        .map(|w| {
                            let show = |p: &crate::quiver::Path| q.display_path(p);
                            format!("(p={}, q={}, p'={}, q'={})", show(&w.p), show(&w.q), show(&w.p2), show(&w.q2))
                        })
                        .unwrap_or_default();
                    return Ok(Err(format!("sf7 = {}, expected {expected} {witness}", sf7.holds)));
                }
            }
            Ok(Ok(()))
        })();
        out.record("fbc-axioms", &c.name, outcome);
    }

    // ideal-equality
    for c in &all_configurations {
        if !c.fbc.check_axioms().quiver_axioms_hold() {
            continue;
        }
        let outcome = (|| {
            let a = presentation::presentation_unchecked(&c.fbc)?;
            let b = presentation::primed_presentation(&c.fbc)?;
            let cmp = ideals_equal(&a, &b)?;
            Ok(ok_if(cmp.equal(), || comparison_witness(&a, &cmp, "primed")))
        })();
        out.record("ideal-equality", &c.name, outcome);
    }
    for (name, pres, for_fbc, _) in &presentations {
        let Some(Input::Fbc { fbc, .. }) = by_file(for_fbc) else { continue };
        let outcome = (|| {
            let own = presentation::presentation_unchecked(fbc)?;
            let listed = pres.rebase(own.quiver())?;
            let cmp = ideals_equal(&own, &listed)?;
            Ok(ok_if(cmp.equal(), || comparison_witness(&own, &cmp, "listed")))
        })();
        out.record("ideal-equality", name, outcome);
    }

    // sf7-f7-agreement
    for c in &all_configurations {
        if !c.fbc.is_symmetric() || !c.fbc.check_axioms().all_hold() {
            continue;
        }
        let outcome = (|| {
            let sf7 = check_sf7(&c.fbc)?.holds;
            let f7 = c.fbc.check_f7().holds;
            Ok(ok_if(sf7 == f7, || format!("sf7 = {sf7}, f7 = {f7}")))
        })();
        out.record("sf7-f7-agreement", &c.name, outcome);
    }

    // ea-symmetric-type-s
    for (name, a) in &algebras {
        let outcome = (|| {
            let ea = build_ea(a)?;
            let report = ea.verify()?;
            let angles: usize = a.maximal_paths().iter().map(|m| m.len() + 1).sum();
            let arrows = a.quiver().arrow_count() + a.maximal_paths().len();
            Ok(ok_if(report.angles == angles && report.arrows == arrows, || {
                format!("{} angles, {} arrows; expected {angles}, {arrows}", report.angles, report.arrows)
            }))
        })();
        out.record("ea-symmetric-type-s", name, outcome);
    }

    // trivial-extension-iso
    for (name, a) in &algebras {
        let outcome = verify_trivial_extension_iso(a).map(|r| {
            ok_if(r.dim_presentation == 2 * r.dim_a, || format!("dimension {} vs 2·{}", r.dim_presentation, r.dim_a))
        });
        out.record("trivial-extension-iso", name, outcome);
    }
    for (name, pres, _, for_algebra) in &presentations {
        let Some(Input::Algebra { algebra, .. }) = by_file(for_algebra) else { continue };
        let outcome = (|| {
            let ea = build_ea(algebra)?;
            let found = presentations_isomorphic(&ea.presentation()?, pres, None)?;
            Ok(ok_if(found.is_some(), || "no isomorphism with the algebra of E_A".to_string()))
        })();
        out.record("trivial-extension-iso", name, outcome);
    }

    // cut-recovers-algebra
    for (name, a) in &algebras {
        out.record("cut-recovers-algebra", name, verify_cut_recovers_algebra(a).map(|_| Ok(())));
    }

    // trivial-extension-of-cut
    let mut pairs: Vec<(String, Fbc, BTreeSet<ArrowId>)> = Vec::new();
    for c in &configurations {
        if !in_cut_setting(&c.fbc) {
            continue;
        }
        let choices = match enumerate_cut_choices(&c.fbc) {
            Ok(ch) => ch,
            Err(e) => {
                out.record("trivial-extension-of-cut", &c.name, Err(e));
                continue;
            }
        };
        let pres = presentation::presentation_unchecked(&c.fbc)?;
        let mut seen = BTreeSet::new();
        for choice in choices.into_iter().filter(|ch| ch.admissible) {
            if !seen.insert(choice.arrows.clone()) {
                continue;
            }
            let instance = format!("{}{}", c.name, cut_label(&pres, &choice.arrows));
            out.record("trivial-extension-of-cut", &instance, verify_cut_round_trip(&c.fbc, &choice.arrows).map(|_| Ok(())));
            pairs.push((instance, c.fbc.clone(), choice.arrows));
        }
    }

    // pair-bijection
    match bijection_harness(&algebras, &pairs) {
        Ok(entries) => {
            for e in entries {
                out.record("pair-bijection", &e.instance, Ok(ok_if(e.passed, || e.detail.clone())));
            }
        }
        Err(e) => out.record("pair-bijection", "harness", Err(e)),
    }

    // cartan-symmetry
    for c in &all_configurations {
        if !in_cut_setting(&c.fbc) {
            continue;
        }
        let outcome = (|| {
            let pres = presentation::presentation_unchecked(&c.fbc)?;
            let m = PathSpaceModel::new(&pres)?;
            let cartan = m.cartan_matrix();
            let n = cartan.len();
            let bad = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| cartan[i][j] != cartan[j][i]);
            Ok(ok_if(bad.is_none(), || {
                let (i, j) = bad.unwrap();
                format!("C[{i}][{j}] = {} but C[{j}][{i}] = {}", cartan[i][j], cartan[j][i])
            }))
        })();
        out.record("cartan-symmetry", &c.name, outcome);
    }

    Ok(SuiteReport { results: out.results })
}

fn comparison_witness(pres: &QuiverPresentation, cmp: &crate::engine::IdealComparison, other: &str) -> String {
    let q = pres.quiver();
    let dims = format!("dimensions {} and {}", cmp.dim_a, cmp.dim_b);
    if let Some(r) = &cmp.missing_in_b {
        format!("{dims}; {} is not in the {other} ideal", r.display(q))
    } else if let Some(r) = &cmp.missing_in_a {
        format!("{dims}; {} is missing from the configuration's ideal", r.display(q))
    } else {
        dims
    }
}
