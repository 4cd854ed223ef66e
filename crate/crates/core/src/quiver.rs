//! Finite quivers and their paths.
//!
//! Paths are stored in traversal order (the first arrow walked is the first
//! entry) and displayed right to left, so the path that walks `a` and then
//! `b` prints as `b·a`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite directed multigraph. Loops and parallel arrows are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    out_arrows: Vec<Vec<ArrowId>>,
    in_arrows: Vec<Vec<ArrowId>>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.as_str(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex `{v}`")));
            }
        }
        let mut names = HashMap::new();
        let mut out_arrows = vec![Vec::new(); vertices.len()];
        let mut in_arrows = vec![Vec::new(); vertices.len()];
        for (i, a) in arrows.iter().enumerate() {
            if a.source.0 >= vertices.len() || a.target.0 >= vertices.len() {
                return Err(Error::InvalidInput(format!(
                    "arrow `{}` has an undeclared endpoint",
                    a.name
                )));
            }
            if names.insert(a.name.as_str(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate arrow `{}`", a.name)));
            }
            out_arrows[a.source.0].push(ArrowId(i));
            in_arrows[a.target.0].push(ArrowId(i));
        }
        Ok(Quiver {
            vertices,
            arrows,
            out_arrows,
            in_arrows,
        })
    }

    /// Builds a quiver from vertex names and `(name, source, target)` triples
    /// given by vertex name.
    pub fn from_names<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let lookup = |name: &str| -> Result<VertexId> {
            vertices
                .iter()
                .position(|v| v == name)
                .map(VertexId)
                .ok_or_else(|| Error::InvalidInput(format!("unknown vertex `{name}`")))
        };
        let arrows = arrows
            .iter()
            .map(|(n, s, t)| {
                Ok(Arrow {
                    name: n.as_ref().to_string(),
                    source: lookup(s.as_ref())?,
                    target: lookup(t.as_ref())?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(vertices, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn out_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.out_arrows[v.0]
    }

    pub fn in_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.in_arrows[v.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name).map(VertexId)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name).map(ArrowId)
    }

    pub fn trivial_path(&self, v: VertexId) -> Path {
        Path::trivial(v)
    }

    /// Validates a word of arrows (traversal order) and turns it into a path.
    pub fn path(&self, arrows: &[ArrowId]) -> Result<Path> {
        let Some((&first, rest)) = arrows.split_first() else {
            return Err(Error::InvalidInput(
                "an empty arrow word needs an explicit vertex".into(),
            ));
        };
        let mut p = Path::arrow(self, first);
        for &a in rest {
            p = p.then(self, a).ok_or_else(|| {
                Error::InvalidInput(format!(
                    "arrow `{}` does not compose after `{}`",
                    self.arrow(a).name,
                    self.display_path(&p)
                ))
            })?;
        }
        Ok(p)
    }

    pub fn path_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Path> {
        let ids = names
            .iter()
            .map(|n| {
                self.arrow_by_name(n.as_ref())
                    .ok_or_else(|| Error::InvalidInput(format!("unknown arrow `{}`", n.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        self.path(&ids)
    }

    /// The product `later · earlier`: walk `earlier`, then `later`.
    pub fn compose(&self, later: &Path, earlier: &Path) -> Option<Path> {
        later.after(earlier)
    }

    /// Right-to-left rendering with `·` separators; trivial paths print as `e_v`.
    pub fn display_path(&self, p: &Path) -> String {
        if p.is_trivial() {
            return format!("e_{}", self.vertex_name(p.source()));
        }
        p.arrows()
            .iter()
            .rev()
            .map(|a| self.arrow(*a).name.as_str())
            .collect::<Vec<_>>()
            .join("·")
    }

    pub fn arrow_names(&self, p: &Path) -> Vec<String> {
        p.arrows()
            .iter()
            .map(|a| self.arrow(*a).name.clone())
            .collect()
    }

    pub fn loop_count(&self, v: VertexId) -> usize {
        self.out_arrows(v)
            .iter()
            .filter(|a| self.arrow(**a).target == v)
            .count()
    }
}

/// A path in some quiver. Equality includes the endpoints, so trivial paths
/// at different vertices are different.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Path {
        let arrow = q.arrow(a);
        Path {
            source: arrow.source,
            target: arrow.target,
            arrows: vec![a],
        }
    }

    /// Assembles a path from parts the caller has already checked.
    pub(crate) fn from_parts(source: VertexId, target: VertexId, arrows: Vec<ArrowId>) -> Path {
        Path {
            source,
            target,
            arrows,
        }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        self.source == self.target
    }

    /// Extends by one arrow walked after this path.
    pub fn then(&self, q: &Quiver, a: ArrowId) -> Option<Path> {
        let arrow = q.arrow(a);
        if arrow.source != self.target {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + 1);
        arrows.extend_from_slice(&self.arrows);
        arrows.push(a);
        Some(Path {
            source: self.source,
            target: arrow.target,
            arrows,
        })
    }

    /// Extends by one arrow walked before this path.
    pub fn preceded_by(&self, q: &Quiver, a: ArrowId) -> Option<Path> {
        let arrow = q.arrow(a);
        if arrow.target != self.source {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + 1);
        arrows.push(a);
        arrows.extend_from_slice(&self.arrows);
        Some(Path {
            source: arrow.source,
            target: self.target,
            arrows,
        })
    }

    /// `self · earlier`, defined when `earlier` ends where `self` starts.
    pub fn after(&self, earlier: &Path) -> Option<Path> {
        if earlier.target != self.source {
            return None;
        }
        let mut arrows = earlier.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path {
            source: earlier.source,
            target: self.target,
            arrows,
        })
    }

    /// True when `word` occurs as a contiguous block of arrows.
    pub fn has_factor(&self, word: &[ArrowId]) -> bool {
        if word.is_empty() {
            return true;
        }
        word.len() <= self.arrows.len() && self.arrows.windows(word.len()).any(|w| w == word)
    }

    /// For `self = s · p`, returns `s`.
    pub fn strip_earlier(&self, p: &Path) -> Option<Path> {
        if p.source != self.source || !self.arrows.starts_with(&p.arrows) {
            return None;
        }
        if p.is_trivial() {
            return Some(self.clone());
        }
        Some(Path {
            source: p.target,
            target: self.target,
            arrows: self.arrows[p.len()..].to_vec(),
        })
    }

    /// For `self = q · s`, returns `s`.
    pub fn strip_later(&self, q: &Path) -> Option<Path> {
        if q.target != self.target || !self.arrows.ends_with(&q.arrows) {
            return None;
        }
        if q.is_trivial() {
            return Some(self.clone());
        }
        Some(Path {
            source: self.source,
            target: q.source,
            arrows: self.arrows[..self.len() - q.len()].to_vec(),
        })
    }

    /// The sub-path made of arrows `start..end` in traversal order.
    pub fn slice(&self, q: &Quiver, start: usize, end: usize) -> Path {
        assert!(start <= end && end <= self.len());
        if start == end {
            let v = if start == 0 {
                self.source
            } else {
                q.arrow(self.arrows[start - 1]).target
            };
            return Path::trivial(v);
        }
        Path {
            source: q.arrow(self.arrows[start]).source,
            target: q.arrow(self.arrows[end - 1]).target,
            arrows: self.arrows[start..end].to_vec(),
        }
    }
}

/// Canonical order: by length, then lexicographically on arrow ids, then by
/// base vertex (only relevant for trivial paths).
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "e{}", self.source.0);
        }
        let parts: Vec<String> = self.arrows.iter().rev().map(|a| a.0.to_string()).collect();
        write!(f, "{}", parts.join("·"))
    }
}
