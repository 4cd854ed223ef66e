//! JSON file formats and DOT export.

use std::collections::{BTreeMap, HashMap};
use std::path::Path as FsPath;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fbc::Fbc;
use crate::monomial::MonomialAlgebra;
use crate::presentation::{parse_rational, QuiverPresentation, RelationElement, RelationKind};
use crate::quiver::{Arrow, Path, Quiver, VertexId};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationSpec {
    pub kind: RelationKind,
    pub terms: Vec<TermSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub for_fbc: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub for_algebra: Option<String>,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<RelationSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FbcFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect_type_s: Option<bool>,
    pub angles: Vec<String>,
    pub g: BTreeMap<String, String>,
    #[serde(rename = "P")]
    pub polygons: Vec<Vec<String>>,
    #[serde(rename = "L")]
    pub arrow_classes: Vec<Vec<String>>,
    pub d: Value,
}

fn quiver_from_specs(vertices: &[String], arrows: &[ArrowSpec]) -> Result<Quiver> {
    let triples: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str()))
        .collect();
    let vs: Vec<&str> = vertices.iter().map(|s| s.as_str()).collect();
    Quiver::from_names(&vs, &triples)
}

fn arrow_specs(q: &Quiver) -> Vec<ArrowSpec> {
    q.arrows()
        .iter()
        .map(|a| ArrowSpec {
            name: a.name.clone(),
            source: q.vertex_name(a.source).to_string(),
            target: q.vertex_name(a.target).to_string(),
        })
        .collect()
}

impl AlgebraFile {
    pub fn build(&self) -> Result<MonomialAlgebra> {
        self.build_with_cap(crate::monomial::DEFAULT_BASIS_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<MonomialAlgebra> {
        let q = quiver_from_specs(&self.vertices, &self.arrows)?;
        let gens = self
            .relations
            .iter()
            .map(|w| q.path_from_names(w))
            .collect::<Result<Vec<_>>>()?;
        MonomialAlgebra::with_cap(q, gens, cap)
    }

    pub fn from_algebra(a: &MonomialAlgebra, name: Option<String>) -> Self {
        let q = a.quiver();
        AlgebraFile {
            name,
            vertices: q.vertex_names().to_vec(),
            arrows: arrow_specs(q),
            relations: a.generators().iter().map(|g| q.arrow_names(g)).collect(),
        }
    }
}

impl PresentationFile {
    pub fn build(&self) -> Result<QuiverPresentation> {
        let q = quiver_from_specs(&self.vertices, &self.arrows)?;
        let mut rels = Vec::new();
        for r in &self.relations {
            let terms = r
                .terms
                .iter()
                .map(|t| Ok((parse_rational(&t.coeff)?, q.path_from_names(&t.path)?)))
                .collect::<Result<Vec<_>>>()?;
            rels.push(RelationElement::from_terms(r.kind, terms)?);
        }
        QuiverPresentation::new(q, rels)
    }

    pub fn from_presentation(p: &QuiverPresentation, name: Option<String>) -> Self {
        let q = p.quiver();
        PresentationFile {
            name,
            for_fbc: None,
            for_algebra: None,
            vertices: q.vertex_names().to_vec(),
            arrows: arrow_specs(q),
            relations: p
                .relations()
                .iter()
                .map(|r| RelationSpec {
                    kind: r.kind,
                    terms: r
                        .terms
                        .iter()
                        .map(|t| TermSpec { coeff: t.coeff.to_string(), path: q.arrow_names(&t.path) })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl FbcFile {
    pub fn build(&self) -> Result<Fbc> {
        let index: HashMap<&str, usize> = self.angles.iter().enumerate().map(|(i, a)| (a.as_str(), i)).collect();
        let look = |name: &str| -> Result<usize> {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::MalformedFbc(format!("unknown angle `{name}`")))
        };
        let mut g = vec![usize::MAX; self.angles.len()];
        for (from, to) in &self.g {
            g[look(from)?] = look(to)?;
        }
        if g.contains(&usize::MAX) {
            return Err(Error::MalformedFbc("g is not defined on every angle".into()));
        }
        let blocks = |bs: &[Vec<String>]| -> Result<Vec<Vec<usize>>> {
            bs.iter().map(|b| b.iter().map(|n| look(n)).collect()).collect()
        };
        let polygons = blocks(&self.polygons)?;
        let classes = blocks(&self.arrow_classes)?;
        match &self.d {
            Value::String(s) if s == "trivial" => {
                Fbc::with_trivial_degree(self.angles.clone(), g, polygons, classes)
            }
            Value::Object(map) => {
                let mut d = vec![0u64; self.angles.len()];
                for (k, v) in map {
                    d[look(k)?] = v
                        .as_u64()
                        .ok_or_else(|| Error::MalformedFbc(format!("degree of `{k}` is not a natural number")))?;
                }
                Fbc::new(self.angles.clone(), g, polygons, classes, d)
            }
            _ => Err(Error::MalformedFbc("d must be a map or \"trivial\"".into())),
        }
    }

    pub fn from_fbc(f: &Fbc, name: Option<String>) -> Self {
        let names = |b: &[usize]| b.iter().map(|&e| f.name(e).to_string()).collect::<Vec<_>>();
        let d = if f.has_trivial_degree() {
            Value::String("trivial".into())
        } else {
            Value::Object(f.angles().map(|e| (f.name(e).to_string(), json!(f.degree(e)))).collect())
        };
        FbcFile {
            name,
            expect_type_s: None,
            angles: f.names().to_vec(),
            g: f.angles().map(|e| (f.name(e).to_string(), f.name(f.g(e)).to_string())).collect(),
            polygons: f.polygons().iter().map(|b| names(b)).collect(),
            arrow_classes: f.arrow_classes().iter().map(|b| names(b)).collect(),
            d,
        }
    }
}

/// A parsed input file of any of the three kinds.
#[derive(Clone, Debug)]
pub enum Input {
    Algebra { name: String, algebra: MonomialAlgebra },
    Fbc { name: String, fbc: Fbc, expect_type_s: Option<bool> },
    /// `for_fbc` and `for_algebra` name the file whose algebra this
    /// presentation is expected to describe.
    Presentation {
        name: String,
        presentation: QuiverPresentation,
        for_fbc: Option<String>,
        for_algebra: Option<String>,
    },
}

impl Input {
    pub fn name(&self) -> &str {
        match self {
            Input::Algebra { name, .. } | Input::Fbc { name, .. } | Input::Presentation { name, .. } => name,
        }
    }
}

fn default_name(path: &FsPath) -> String {
    let file = path.file_name().and_then(|s| s.to_str()).unwrap_or("input");
    file.split('.').next().unwrap_or(file).to_string()
}

/// Parses JSON text, telling the kinds apart by their fields.
pub fn parse_input(text: &str, fallback_name: &str) -> Result<Input> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::InvalidInput("expected a JSON object".into()))?;
    let name = obj
        .get("name")
        .and_then(|v| v.as_str())
        .unwrap_or(fallback_name)
        .to_string();
    if obj.contains_key("angles") {
        let file: FbcFile = serde_json::from_value(value)?;
        let expect_type_s = file.expect_type_s;
        return Ok(Input::Fbc { name, fbc: file.build()?, expect_type_s });
    }
    let is_presentation = obj
        .get("relations")
        .and_then(|r| r.as_array())
        .map(|rs| rs.iter().any(|r| r.is_object()))
        .unwrap_or(false)
        || obj.contains_key("for_fbc")
        || obj.contains_key("for_algebra");
    if is_presentation {
        let file: PresentationFile = serde_json::from_value(value)?;
        let (for_fbc, for_algebra) = (file.for_fbc.clone(), file.for_algebra.clone());
        return Ok(Input::Presentation { name, presentation: file.build()?, for_fbc, for_algebra });
    }
    if obj.contains_key("vertices") && obj.contains_key("arrows") {
        let file: AlgebraFile = serde_json::from_value(value)?;
        return Ok(Input::Algebra { name, algebra: file.build()? });
    }
    Err(Error::InvalidInput("unrecognised input file".into()))
}

pub fn read_input(path: &FsPath) -> Result<Input> {
    let text = std::fs::read_to_string(path)?;
    parse_input(&text, &default_name(path))
}

pub fn read_algebra(path: &FsPath) -> Result<MonomialAlgebra> {
    match read_input(path)? {
        Input::Algebra { algebra, .. } => Ok(algebra),
        _ => Err(Error::InvalidInput(format!("{} is not an algebra file", path.display()))),
    }
}

pub fn read_fbc(path: &FsPath) -> Result<Fbc> {
    match read_input(path)? {
        Input::Fbc { fbc, .. } => Ok(fbc),
        _ => Err(Error::InvalidInput(format!("{} is not a configuration file", path.display()))),
    }
}

/// A presentation file, or the relations of an algebra or configuration file.
pub fn read_presentation(path: &FsPath) -> Result<QuiverPresentation> {
    match read_input(path)? {
        Input::Presentation { presentation, .. } => Ok(presentation),
        Input::Algebra { algebra, .. } => Ok(algebra.presentation()),
        Input::Fbc { fbc, .. } => crate::presentation::presentation(&fbc),
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering; `dual` marks arrows drawn dashed.
pub fn quiver_to_dot(q: &Quiver, title: &str, dual: &[bool]) -> String {
    let mut out = format!("digraph \"{}\" {{\n", dot_escape(title));
    for v in q.vertices() {
        out.push_str(&format!("  \"{}\";\n", dot_escape(q.vertex_name(v))));
    }
    for (i, a) in q.arrows().iter().enumerate() {
        let style = if dual.get(i).copied().unwrap_or(false) { ", style=dashed" } else { "" };
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"{}];\n",
            dot_escape(q.vertex_name(a.source)),
            dot_escape(q.vertex_name(a.target)),
            dot_escape(&a.name),
            style
        ));
    }
    out.push_str("}\n");
    out
}

/// A path as JSON: arrow names in traversal order, or the vertex for a
/// trivial path.
pub fn path_json(q: &Quiver, p: &Path) -> Value {
    if p.is_trivial() {
        json!({"vertex": q.vertex_name(p.source())})
    } else {
        json!(q.arrow_names(p))
    }
}

pub fn quiver_json(q: &Quiver) -> Value {
    json!({
        "vertices": q.vertex_names(),
        "arrows": arrow_specs(q),
    })
}

pub fn vertex_names_of(q: &Quiver, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| q.vertex_name(v).to_string()).collect()
}

pub fn arrow_names_of(arrows: &[Arrow]) -> Vec<String> {
    arrows.iter().map(|a| a.name.clone()).collect()
}
