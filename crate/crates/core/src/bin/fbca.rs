use std::collections::BTreeSet;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fbca::cuts::{self, CutOutcome};
use fbca::ea::build_ea;
use fbca::engine::PathSpaceModel;
use fbca::error::{Error, Result};
use fbca::fuzz::{self, FuzzConfig};
use fbca::io::{self, AlgebraFile, FbcFile, Input, PresentationFile};
use fbca::iso::presentations_isomorphic;
use fbca::presentation::{self, check_sf7, parse_element, QuiverPresentation};
use fbca::quiver::ArrowId;
use fbca::suite::{run_suite, SuiteInput, SuiteOptions};
use fbca::trivext::verify_trivial_extension_iso;

#[derive(Parser)]
#[command(name = "fbca", version, about = "Fractional Brauer configuration algebras, trivial extensions and cuts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    count: Option<usize>,
    /// Dimension cap for fuzzed algebras, or basis cap when reading algebras.
    #[arg(long, global = true)]
    cap: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms and the type-S condition of a configuration.
    CheckFbc {
        file: PathBuf,
        #[arg(long)]
        expect_type_s: Option<bool>,
    },
    /// Quiver and relations of a configuration.
    Present {
        file: PathBuf,
        /// Use the special-path description of the relations.
        #[arg(long)]
        primed: bool,
    },
    /// The configuration attached to a monomial algebra.
    Ea { file: PathBuf },
    /// Verify that the algebra of `E_A` is the trivial extension of `A`.
    Trivext { file: PathBuf },
    /// Dimension, basis and Cartan matrix of any input.
    Dim { file: PathBuf },
    /// Ideal membership of an element such as `x·y - y·x`.
    Member { file: PathBuf, element: String },
    /// Isomorphism of two presentations by a permutation of arrows.
    Iso { first: PathBuf, second: PathBuf },
    /// Enumerate cutting sets of a configuration.
    Cuts { file: PathBuf },
    /// The cut algebra of a configuration at the given arrows.
    Cut {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        arrows: Vec<String>,
    },
    /// Cut the trivial extension of an algebra at its dual arrows.
    Roundtrip { file: PathBuf },
    /// Cut a configuration and re-extend the cut algebra.
    RoundtripFbc {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        arrows: Vec<String>,
    },
    /// Seeded random monomial algebras.
    Fuzz {
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value_t = 8)]
        max_arrows: usize,
        #[arg(long, default_value_t = 4)]
        max_generator_len: usize,
    },
    /// Run every check on the given files and directories.
    Suite {
        paths: Vec<PathBuf>,
        #[arg(long)]
        expect_type_s: Option<bool>,
    },
    /// Graphviz rendering of the quiver of any input.
    Dot { file: PathBuf },
}

/// A command's result: the rendered output and whether its check passed.
struct Outcome {
    body: String,
    passed: bool,
    /// Overrides the status derived from `passed`.
    code: Option<u8>,
}

fn json_out(v: Value, passed: bool) -> Outcome {
    Outcome { body: serde_json::to_string_pretty(&v).expect("json") + "\n", passed, code: None }
}

fn read(file: &FsPath, cap: Option<usize>) -> Result<Input> {
    match (io::read_input(file)?, cap) {
        (Input::Algebra { name, .. }, Some(cap)) => {
            let text = std::fs::read_to_string(file)?;
            let spec: AlgebraFile = serde_json::from_str(&text)?;
            Ok(Input::Algebra { name, algebra: spec.build_with_cap(cap)? })
        }
        (input, _) => Ok(input),
    }
}

fn algebra_of(file: &FsPath, cap: Option<usize>) -> Result<fbca::MonomialAlgebra> {
    match read(file, cap)? {
        Input::Algebra { algebra, .. } => Ok(algebra),
        _ => Err(Error::InvalidInput(format!("{} is not an algebra file", file.display()))),
    }
}

fn fbc_of(file: &FsPath) -> Result<(String, fbca::Fbc, Option<bool>)> {
    match io::read_input(file)? {
        Input::Fbc { name, fbc, expect_type_s } => Ok((name, fbc, expect_type_s)),
        _ => Err(Error::InvalidInput(format!("{} is not a configuration file", file.display()))),
    }
}

fn presentation_of(file: &FsPath, cap: Option<usize>) -> Result<QuiverPresentation> {
    match read(file, cap)? {
        Input::Algebra { algebra, .. } => Ok(algebra.presentation()),
        Input::Presentation { presentation, .. } => Ok(presentation),
        Input::Fbc { fbc, .. } => presentation::presentation_unchecked(&fbc),
    }
}

fn arrow_set(pres: &QuiverPresentation, names: &[String]) -> Result<BTreeSet<ArrowId>> {
    names
        .iter()
        .map(|n| {
            pres.quiver()
                .arrow_by_name(n.trim())
                .ok_or_else(|| Error::InvalidInput(format!("unknown arrow `{n}`")))
        })
        .collect()
}

fn collect_json_files(paths: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut inner: Vec<PathBuf> = std::fs::read_dir(p)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.extension().is_some_and(|x| x == "json"))
                .collect();
            inner.sort();
            files.extend(inner);
        } else {
            files.push(p.clone());
        }
    }
    Ok(files)
}

fn fuzz_config(common: &Common, default_count: usize) -> FuzzConfig {
    let d = FuzzConfig::default();
    FuzzConfig {
        seed: common.seed.unwrap_or(d.seed),
        count: common.count.unwrap_or(default_count),
        dim_cap: common.cap.unwrap_or(d.dim_cap),
        ..d
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let common = &cli.common;
    let text = common.format == Format::Text;
    match &cli.command {
        Command::CheckFbc { file, expect_type_s } => {
            let (name, fbc, file_expect) = fbc_of(file)?;
            let expect = expect_type_s.or(file_expect);
            let report = fbc.check_axioms();
            let axioms: Vec<Value> = report
                .verdicts
                .iter()
                .map(|v| {
                    json!({
                        "axiom": v.axiom.to_string(),
                        "holds": v.holds,
                        "witness": v.witness.iter().map(|&e| fbc.name(e)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let f7 = fbc.check_f7();
            let sf7 = if fbc.is_symmetric() && report.quiver_axioms_hold() {
                Some(check_sf7(&fbc)?.holds)
            } else {
                None
            };
            let degrees: Vec<String> = (0..fbc.orbits().len()).map(|o| fbc.f_degree(o).to_string()).collect();
            let mut passed = report.all_hold();
            if let Some(want) = expect {
                passed &= f7.holds == want && sf7.is_none_or(|s| s == want);
            }
            let witness = f7
                .witness
                .map(|(p, q)| vec![fbc.display_sequence(p), fbc.display_sequence(q)]);
            if text {
                let mut body = format!("{name}: axioms {}\n", if report.all_hold() { "hold" } else { "fail" });
                for v in report.verdicts {
                    body.push_str(&format!("  {} {}\n", v.axiom, if v.holds { "ok" } else { "FAILS" }));
                }
                body.push_str(&format!(
                    "  symmetric {}, trivial degree {}, f7 {}, sf7 {}\n",
                    fbc.is_symmetric(),
                    fbc.has_trivial_degree(),
                    f7.holds,
                    sf7.map_or("n/a".to_string(), |s| s.to_string())
                ));
                return Ok(Outcome { body, passed, code: None });
            }
            Ok(json_out(
                json!({
                    "instance": name,
                    "axioms": axioms,
                    "symmetric": fbc.is_symmetric(),
                    "f_degrees": degrees,
                    "trivial_degree": fbc.has_trivial_degree(),
                    "f7": f7.holds,
                    "f7_witness": witness,
                    "sf7": sf7,
                    "expect_type_s": expect,
                    "passed": passed,
                }),
                passed,
            ))
        }
        Command::Present { file, primed } => {
            let (name, fbc, _) = fbc_of(file)?;
            let pres = if *primed {
                presentation::primed_presentation(&fbc)?
            } else {
                presentation::presentation_unchecked(&fbc)?
            };
            presentation_output(common.format, &pres, &name)
        }
        Command::Ea { file } => {
            let a = algebra_of(file, common.cap)?;
            let ea = build_ea(&a)?;
            match common.format {
                Format::Dot => {
                    let duals: BTreeSet<ArrowId> = ea.dual_arrows().into_iter().collect();
                    let marks: Vec<bool> = ea.quiver().arrow_ids().map(|x| duals.contains(&x)).collect();
                    Ok(Outcome { body: io::quiver_to_dot(ea.quiver(), "E_A", &marks), passed: true, code: None })
                }
                _ => {
                    let report = ea.verify();
                    let passed = report.is_ok();
                    let pres = ea.presentation()?;
                    Ok(json_out(
                        json!({
                            "configuration": FbcFile::from_fbc(ea.fbc(), None),
                            "presentation": PresentationFile::from_presentation(&pres, None),
                            "verified": report.as_ref().map(|_| true).unwrap_or(false),
                            "error": report.err().map(|e| e.to_string()),
                        }),
                        passed,
                    ))
                }
            }
        }
        Command::Trivext { file } => {
            let a = algebra_of(file, common.cap)?;
            let r = verify_trivial_extension_iso(&a)?;
            Ok(json_out(
                json!({
                    "dim_a": r.dim_a,
                    "dim_presentation": r.dim_presentation,
                    "rank_of_images": r.rank,
                    "relations_checked": r.relations_checked,
                    "basis_without_dual": r.reps_without_dual,
                    "basis_with_one_dual": r.reps_with_one_dual,
                    "basis_with_more_duals": r.reps_with_more_duals,
                    "passed": true,
                }),
                true,
            ))
        }
        Command::Dim { file } => {
            let pres = presentation_of(file, common.cap)?;
            let m = PathSpaceModel::new(&pres)?;
            let q = pres.quiver();
            let basis: Vec<String> = m.basis().iter().map(|p| q.display_path(p)).collect();
            if text {
                return Ok(Outcome { body: format!("{}\n", m.dimension()), passed: true, code: None });
            }
            Ok(json_out(
                json!({
                    "dimension": m.dimension(),
                    "length_bound": m.bound(),
                    "basis": basis,
                    "cartan": m.cartan_matrix(),
                    "vertices": q.vertex_names(),
                }),
                true,
            ))
        }
        Command::Member { file, element } => {
            let pres = presentation_of(file, common.cap)?;
            let terms = parse_element(pres.quiver(), element)?;
            let m = PathSpaceModel::new(&pres)?;
            let member = m.contains(&terms);
            if text {
                return Ok(Outcome { body: format!("{member}\n"), passed: true, code: None });
            }
            Ok(json_out(json!({"element": element, "member": member}), true))
        }
        Command::Iso { first, second } => {
            let a = presentation_of(first, common.cap)?;
            let b = presentation_of(second, common.cap)?;
            let found = presentations_isomorphic(&a, &b, None)?;
            let mapping = found.as_ref().map(|iso| {
                let (qa, qb) = (a.quiver(), b.quiver());
                let arrows: serde_json::Map<String, Value> = qa
                    .arrow_ids()
                    .map(|x| (qa.arrow(x).name.clone(), json!(qb.arrow(iso.arrow_map[x.0]).name)))
                    .collect();
                let vertices: serde_json::Map<String, Value> = qa
                    .vertices()
                    .map(|v| (qa.vertex_name(v).to_string(), json!(qb.vertex_name(iso.vertex_map[v.0]))))
                    .collect();
                json!({"vertices": vertices, "arrows": arrows})
            });
            Ok(json_out(json!({"isomorphic": found.is_some(), "map": mapping}), found.is_some()))
        }
        Command::Cuts { file } => {
            let (_, fbc, _) = fbc_of(file)?;
            let q = presentation::build_quiver(&fbc)?;
            let classes = cuts::special_cycle_classes(&fbc)?;
            let choices = cuts::enumerate_cut_choices(&fbc)?;
            let names = |s: &mut dyn Iterator<Item = &ArrowId>| s.map(|&a| q.arrow(a).name.clone()).collect::<Vec<_>>();
            Ok(json_out(
                json!({
                    "classes": classes.iter().map(|c| json!({
                        "representative": q.display_path(&c.representative),
                        "members": c.members.len(),
                    })).collect::<Vec<_>>(),
                    "choices": choices.iter().map(|c| json!({
                        "choice": names(&mut c.choice.iter()),
                        "arrows": names(&mut c.arrows.iter()),
                        "cutting_set": c.cutting_set,
                        "admissible": c.admissible,
                    })).collect::<Vec<_>>(),
                }),
                true,
            ))
        }
        Command::Cut { file, arrows } => {
            let (_, fbc, _) = fbc_of(file)?;
            let pres = presentation::presentation_unchecked(&fbc)?;
            let d = arrow_set(&pres, arrows)?;
            let classes = cuts::special_cycle_classes(&fbc)?;
            let admissible = cuts::is_admissible(&classes, &d);
            match cuts::cut_algebra(&pres, &d)? {
                CutOutcome::Monomial { algebra, dim_cut } => Ok(json_out(
                    json!({
                        "admissible": admissible,
                        "monomial": true,
                        "dimension": dim_cut,
                        "algebra": AlgebraFile::from_algebra(&algebra, None),
                    }),
                    true,
                )),
                CutOutcome::NonMonomial { dim_cut, monomial_dim, witness, subquiver } => Ok(json_out(
                    json!({
                        "admissible": admissible,
                        "monomial": false,
                        "dimension": dim_cut,
                        "monomial_part_dimension": monomial_dim,
                        "witness": witness.map(|(p, q)| vec![subquiver.display_path(&p), subquiver.display_path(&q)]),
                    }),
                    true,
                )),
            }
        }
        Command::Roundtrip { file } => {
            let a = algebra_of(file, common.cap)?;
            let r = cuts::verify_cut_recovers_algebra(&a)?;
            Ok(json_out(
                json!({
                    "dim_a": r.dim_a,
                    "dim_trivial_extension": r.dim_trivial_extension,
                    "dim_cut": r.dim_cut,
                    "passed": true,
                }),
                true,
            ))
        }
        Command::RoundtripFbc { file, arrows } => {
            let (_, fbc, _) = fbc_of(file)?;
            let pres = presentation::presentation_unchecked(&fbc)?;
            let d = arrow_set(&pres, arrows)?;
            let r = cuts::verify_cut_round_trip(&fbc, &d)?;
            Ok(json_out(
                json!({
                    "cut": AlgebraFile::from_algebra(&r.cut, None),
                    "dim_cut": r.dim_cut,
                    "dim_original": r.dim_original,
                    "passed": true,
                }),
                true,
            ))
        }
        Command::Fuzz { max_vertices, max_arrows, max_generator_len } => {
            let config = FuzzConfig {
                max_vertices: *max_vertices,
                max_arrows: *max_arrows,
                max_generator_len: *max_generator_len,
                ..fuzz_config(common, FuzzConfig::default().count)
            };
            let algebras = fuzz::generate_all(&config)?;
            let files: Vec<AlgebraFile> = algebras
                .iter()
                .enumerate()
                .map(|(i, a)| AlgebraFile::from_algebra(a, Some(format!("fuzz-{i}"))))
                .collect();
            Ok(json_out(serde_json::to_value(files)?, true))
        }
        Command::Suite { paths, expect_type_s } => {
            let mut inputs = Vec::new();
            for f in collect_json_files(paths)? {
                let file = f.file_name().and_then(|s| s.to_str()).unwrap_or_default().to_string();
                inputs.push(SuiteInput { file, input: read(&f, common.cap)? });
            }
            let count = common.count.unwrap_or(0);
            let options = SuiteOptions {
                fuzz: (count > 0).then(|| fuzz_config(common, count)),
                expect_type_s: *expect_type_s,
            };
            let report = run_suite(&inputs, &options)?;
            Ok(Outcome { body: report.to_json(), passed: true, code: Some(report.exit_code() as u8) })
        }
        Command::Dot { file } => {
            let (name, q, marks) = match read(file, common.cap)? {
                Input::Algebra { name, algebra } => {
                    let n = algebra.quiver().arrow_count();
                    (name, algebra.quiver().clone(), vec![false; n])
                }
                Input::Presentation { name, presentation, .. } => {
                    let q = presentation.quiver().clone();
                    let marks = q.arrows().iter().map(|a| a.name.ends_with("^∨")).collect();
                    (name, q, marks)
                }
                Input::Fbc { name, fbc, .. } => {
                    let q = presentation::build_quiver(&fbc)?;
                    let n = q.arrow_count();
                    (name, q, vec![false; n])
                }
            };
            Ok(Outcome { body: io::quiver_to_dot(&q, &name, &marks), passed: true, code: None })
        }
    }
}

fn presentation_output(format: Format, pres: &QuiverPresentation, name: &str) -> Result<Outcome> {
    match format {
        Format::Dot => {
            let marks = vec![false; pres.quiver().arrow_count()];
            Ok(Outcome { body: io::quiver_to_dot(pres.quiver(), name, &marks), passed: true, code: None })
        }
        Format::Text => {
            let q = pres.quiver();
            let mut body = String::new();
            for r in pres.relations() {
                body.push_str(&format!("{:<10} {}\n", r.kind.to_string(), r.display(q)));
            }
            Ok(Outcome { body, passed: true, code: None })
        }
        Format::Json => Ok(json_out(
            serde_json::to_value(PresentationFile::from_presentation(pres, Some(name.to_string())))?,
            true,
        )),
    }
}

/// Runs a parsed command line. Returns what goes to stdout and the exit
/// status; errors are reported on stderr.
fn execute(cli: &Cli) -> (String, u8) {
    match run(cli) {
        Ok(outcome) => {
            let code = outcome.code.unwrap_or(if outcome.passed { 0 } else { 1 });
            match &cli.common.out {
                Some(path) => match std::fs::write(path, &outcome.body) {
                    Ok(()) => (String::new(), code),
                    Err(e) => {
                        eprintln!("error: {e}");
                        (String::new(), 2)
                    }
                },
                None => (outcome.body, code),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = if e.is_resource_limit() {
                3
            } else if matches!(e, Error::VerificationFailed(_)) {
                1
            } else {
                2
            };
            (String::new(), code)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (stdout, code) = execute(&cli);
    print!("{stdout}");
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(name: &str) -> String {
        FsPath::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
    }

    fn fbca(args: &[&str]) -> (String, u8) {
        let cli = Cli::try_parse_from(std::iter::once("fbca").chain(args.iter().copied())).unwrap();
        execute(&cli)
    }

    fn json(out: &(String, u8)) -> Value {
        serde_json::from_str(&out.0).unwrap_or_else(|e| panic!("{e}: {}", out.0))
    }

    #[test]
    fn check_fbc_reports_type_s_failure() {
        let out = fbca(&["check-fbc", &path("twelve_angle_not_type_s.fbc.json")]);
        assert_eq!(out.1, (0));
        let v = json(&out);
        assert_eq!(v["f7"], false);
        assert_eq!(v["sf7"], false);
        assert!(v["f7_witness"].is_array());

        let out = fbca(&["check-fbc", &path("twelve_angle_not_type_s.fbc.json"), "--expect-type-s", "true"]);
        assert_eq!(out.1, (1));
    }

    #[test]
    fn dimension_and_membership() {
        let out = fbca(&["dim", &path("diamond_path_relation.algebra.json"), "--format", "text"]);
        assert_eq!(out.0.as_str().trim(), "13");
        let out = fbca(&["member", &path("two_loop_commutative.pres.json"), "x·y - y·x"]);
        assert_eq!(json(&out)["member"], true);
        let out = fbca(&["member", &path("two_loop_commutative.pres.json"), "x·x"]);
        assert_eq!(json(&out)["member"], false);
    }

    #[test]
    fn ea_and_dot() {
        let out = fbca(&["ea", &path("diamond_path_relation.algebra.json")]);
        assert_eq!(out.1, (0));
        let v = json(&out);
        assert_eq!(v["verified"], true);
        assert_eq!(v["presentation"]["arrows"].as_array().unwrap().len(), 8);

        let out = fbca(&["ea", &path("truncated_loop_x3.algebra.json"), "--format", "dot"]);
        let dot = out.0.as_str();
        assert!(dot.contains("(x·x)^∨"));
        assert!(dot.contains("style=dashed"));
    }

    #[test]
    fn cuts_and_round_trips() {
        let file = path("shared_arrow_two_cycles.fbc.json");
        let v = json(&fbca(&["cuts", &file]));
        let choices = v["choices"].as_array().unwrap();
        assert_eq!(choices.len(), 9);
        assert_eq!(choices.iter().filter(|c| c["admissible"] == true).count(), 4);

        let v = json(&fbca(&["cut", &file, "--arrows", "L(4)"]));
        assert_eq!(v["monomial"], false);
        assert_eq!(v["admissible"], false);

        let out = fbca(&["roundtrip-fbc", &file, "--arrows", "L(1),L(3)"]);
        assert_eq!(out.1, (0));
        assert_eq!(json(&out)["dim_original"], 18);

        let out = fbca(&["roundtrip-fbc", &file, "--arrows", "L(1),L(4)"]);
        assert_eq!(out.1, (2), "not an admissible cut");

        let out = fbca(&["roundtrip", &path("diamond_path_relation.algebra.json")]);
        assert_eq!(json(&out)["dim_trivial_extension"], 26);
    }

    #[test]
    fn iso_between_trivial_extension_and_two_loops() {
        let dir = tempfile::tempdir().unwrap();
        let ea = dir.path().join("ea.json");
        let out = fbca(&["ea", &path("truncated_loop_x3.algebra.json"), "--out", ea.to_str().unwrap()]);
        assert!(out.1 == 0);
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&ea).unwrap()).unwrap();
        let pres = dir.path().join("pres.json");
        std::fs::write(&pres, v["presentation"].to_string()).unwrap();
        let out = fbca(&["iso", pres.to_str().unwrap(), &path("two_loop_commutative.pres.json")]);
        assert_eq!(out.1, (0));
        assert_eq!(json(&out)["isomorphic"], true);
    }

    #[test]
    fn fuzz_is_deterministic() {
        let a = fbca(&["fuzz", "--seed", "42", "--count", "5"]);
        let b = fbca(&["fuzz", "--seed", "42", "--count", "5"]);
        assert_eq!(a.0, b.0);
        assert_eq!(json(&a).as_array().unwrap().len(), 5);
        let c = fbca(&["fuzz", "--seed", "43", "--count", "5"]);
        assert_ne!(a.0, c.0);
    }

    #[test]
    fn suite_exit_codes() {
        let out = fbca(&["suite"]);
        assert_eq!(out.1, (0));
        assert_eq!(out.0.as_str(), "[]\n");

        let out = fbca(&["suite", &path("shared_arrow_two_cycles.fbc.json"), &path("diamond_path_relation.algebra.json")]);
        assert_eq!(out.1, (0));
        let report = json(&out);
        assert!(report.as_array().unwrap().iter().all(|r| r["verdict"] == "pass"));

        let out = fbca(&["suite", &path("twelve_angle_not_type_s.fbc.json"), "--expect-type-s", "true"]);
        assert_eq!(out.1, (1));
        let report = json(&out);
        let first = &report[0];
        assert_eq!(first["check"], "fbc-axioms");
        assert_eq!(first["verdict"], "fail");
        assert!(first["witness"].as_str().unwrap().contains("f7 = false"));
    }

    #[test]
    fn suite_report_schema() {
        let out = fbca(&["suite", &path("truncated_loop_x3.algebra.json")]);
        let report = json(&out);
        let checks: Vec<&str> = report.as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap()).collect();
        assert_eq!(
            checks,
            [
                "ideal-equality",
                "sf7-f7-agreement",
                "ea-symmetric-type-s",
                "trivial-extension-iso",
                "cut-recovers-algebra",
                "pair-bijection",
                "cartan-symmetry",
            ]
        );
        for r in report.as_array().unwrap() {
            let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
            assert_eq!(keys, ["check", "instance", "verdict"]);
        }
    }

    #[test]
    fn input_errors_exit_with_two() {
        let dir = tempfile::tempdir().unwrap();
        let bad = dir.path().join("bad.json");
        std::fs::write(&bad, "{\"angles\": [\"a\"], \"g\": {\"a\": \"b\"}, \"P\": [[\"a\"]], \"L\": [[\"a\"]], \"d\": \"trivial\"}").unwrap();
        assert_eq!(fbca(&["check-fbc", bad.to_str().unwrap()]).1, (2));
        std::fs::write(&bad, "not json").unwrap();
        assert_eq!(fbca(&["dim", bad.to_str().unwrap()]).1, (2));
        assert_eq!(fbca(&["dim", "/nonexistent.json"]).1, (2));
    }

    #[test]
    fn resource_caps_exit_with_three() {
        let dir = tempfile::tempdir().unwrap();
        let free = dir.path().join("free.json");
        std::fs::write(
            &free,
            r#"{"vertices":["1"],"arrows":[{"name":"x","source":"1","target":"1"}],"relations":[]}"#,
        )
        .unwrap();
        assert_eq!(fbca(&["dim", free.to_str().unwrap()]).1, (3));
    }
}
