//! Fractional Brauer configurations `(E, P, L, d)` on a finite angle set.
//!
//! The cyclic group action is stored as a single permutation `g`; powers are
//! computed inside each `g`-orbit with modular arithmetic. The associated
//! quiver `Q_E` has one vertex per polygon (`P`-block) and one arrow per
//! `L`-block, and both are numbered by block index, so words over `L`-block
//! indices are paths in `Q_E` directly.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Path, VertexId};

pub type AngleId = usize;

#[derive(Clone, Debug)]
pub struct Fbc {
    names: Vec<String>,
    g: Vec<AngleId>,
    polygon_of: Vec<usize>,
    polygons: Vec<Vec<AngleId>>,
    class_of: Vec<usize>,
    classes: Vec<Vec<AngleId>>,
    degree: Vec<u64>,
    orbit_of: Vec<usize>,
    orbit_pos: Vec<usize>,
    orbits: Vec<Vec<AngleId>>,
}

fn normalize_blocks(n: usize, blocks: Vec<Vec<AngleId>>, what: &str) -> Result<(Vec<usize>, Vec<Vec<AngleId>>)> {
    let mut blocks: Vec<Vec<AngleId>> = blocks
        .into_iter()
        .map(|mut b| {
            b.sort_unstable();
            b
        })
        .collect();
    if blocks.iter().any(|b| b.is_empty()) {
        return Err(Error::MalformedFbc(format!("{what} has an empty block")));
    }
    blocks.sort();
    let mut owner = vec![usize::MAX; n];
    for (i, b) in blocks.iter().enumerate() {
        for &e in b {
            if e >= n {
                return Err(Error::MalformedFbc(format!("{what} mentions an unknown angle")));
            }
            if owner[e] != usize::MAX {
                return Err(Error::MalformedFbc(format!("{what} covers an angle twice")));
            }
            owner[e] = i;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(Error::MalformedFbc(format!("{what} does not cover every angle")));
    }
    Ok((owner, blocks))
}

impl Fbc {
    /// Builds a configuration. Blocks are reordered canonically (each block
    /// sorted, blocks sorted by their least angle), so block indices do not
    /// depend on input order.
    pub fn new(
        names: Vec<String>,
        g: Vec<AngleId>,
        polygons: Vec<Vec<AngleId>>,
        arrow_classes: Vec<Vec<AngleId>>,
        degree: Vec<u64>,
    ) -> Result<Self> {
        let n = names.len();
        if g.len() != n || degree.len() != n {
            return Err(Error::MalformedFbc("g and d must be defined on every angle".into()));
        }
        let mut hit = vec![false; n];
        for &t in &g {
            if t >= n || hit[t] {
                return Err(Error::MalformedFbc("g is not a bijection on angles".into()));
            }
            hit[t] = true;
        }
        if degree.contains(&0) {
            return Err(Error::MalformedFbc("degrees must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name) {
                return Err(Error::MalformedFbc(format!("duplicate angle `{name}`")));
            }
        }
        let (polygon_of, polygons) = normalize_blocks(n, polygons, "P")?;
        let (class_of, classes) = normalize_blocks(n, arrow_classes, "L")?;

        let mut orbit_of = vec![usize::MAX; n];
        let mut orbit_pos = vec![0; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut cycle = Vec::new();
            let mut e = start;
            loop {
                orbit_of[e] = id;
                orbit_pos[e] = cycle.len();
                cycle.push(e);
                e = g[e];
                if e == start {
                    break;
                }
            }
            orbits.push(cycle);
        }
        Ok(Fbc {
            names,
            g,
            polygon_of,
            polygons,
            class_of,
            classes,
            degree,
            orbit_of,
            orbit_pos,
            orbits,
        })
    }

    /// Same as [`Fbc::new`] with `d(e)` set to the size of the orbit of `e`.
    pub fn with_trivial_degree(
        names: Vec<String>,
        g: Vec<AngleId>,
        polygons: Vec<Vec<AngleId>>,
        arrow_classes: Vec<Vec<AngleId>>,
    ) -> Result<Self> {
        let n = names.len();
        let mut fbc = Fbc::new(names, g, polygons, arrow_classes, vec![1; n])?;
        for e in 0..n {
            fbc.degree[e] = fbc.orbits[fbc.orbit_of[e]].len() as u64;
        }
        Ok(fbc)
    }

    pub fn angle_count(&self) -> usize {
        self.names.len()
    }

    pub fn angles(&self) -> std::ops::Range<AngleId> {
        0..self.names.len()
    }

    pub fn name(&self, e: AngleId) -> &str {
        &self.names[e]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn angle_by_name(&self, name: &str) -> Option<AngleId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn g(&self, e: AngleId) -> AngleId {
        self.g[e]
    }

    /// `g^k(e)` for any integer `k`.
    pub fn g_pow(&self, e: AngleId, k: i64) -> AngleId {
        let orbit = &self.orbits[self.orbit_of[e]];
        let len = orbit.len() as i64;
        let pos = (self.orbit_pos[e] as i64 + k).rem_euclid(len);
        orbit[pos as usize]
    }

    pub fn polygon(&self, e: AngleId) -> usize {
        self.polygon_of[e]
    }

    pub fn polygons(&self) -> &[Vec<AngleId>] {
        &self.polygons
    }

    /// Index of the `L`-block of `e`, which is also its arrow id in `Q_E`.
    pub fn arrow_class(&self, e: AngleId) -> usize {
        self.class_of[e]
    }

    pub fn arrow_classes(&self) -> &[Vec<AngleId>] {
        &self.classes
    }

    pub fn degree(&self, e: AngleId) -> u64 {
        self.degree[e]
    }

    pub fn max_degree(&self) -> u64 {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    pub fn orbit_of(&self, e: AngleId) -> usize {
        self.orbit_of[e]
    }

    pub fn orbits(&self) -> &[Vec<AngleId>] {
        &self.orbits
    }

    /// The Nakayama permutation `e ↦ g^{d(e)}(e)`.
    pub fn nakayama(&self) -> Vec<AngleId> {
        self.angles()
            .map(|e| self.g_pow(e, self.degree[e] as i64))
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.nakayama().iter().enumerate().all(|(e, &s)| e == s)
    }

    /// `d(v) / |v|` for the orbit with index `orbit`.
    pub fn f_degree(&self, orbit: usize) -> Ratio<u64> {
        let rep = self.orbits[orbit][0];
        Ratio::new(self.degree[rep], self.orbits[orbit].len() as u64)
    }

    pub fn has_trivial_degree(&self) -> bool {
        self.angles()
            .all(|e| self.degree[e] == self.orbits[self.orbit_of[e]].len() as u64)
    }

    /// Target polygon of the arrow `L(e)`, i.e. `P(g(e))`.
    fn arrow_target(&self, class: usize) -> usize {
        self.polygon_of[self.g[self.classes[class][0]]]
    }

    /// The path `L(g^{n-1}(e))⋯L(g(e))L(e)` in `Q_E`; trivial at `P(e)` when `n = 0`.
    pub fn run_word(&self, e: AngleId, n: u64) -> Path {
        let source = VertexId(self.polygon_of[e]);
        if n == 0 {
            return Path::trivial(source);
        }
        let mut arrows = Vec::with_capacity(n as usize);
        let mut a = e;
        for _ in 0..n {
            arrows.push(ArrowId(self.class_of[a]));
            a = self.g[a];
        }
        let target = VertexId(self.arrow_target(*arrows.last().map(|x| &x.0).unwrap()));
        Path::from_parts(source, target, arrows)
    }

    /// The special path of `e`, of length `d(e)`.
    pub fn special_path(&self, e: AngleId) -> Path {
        self.run_word(e, self.degree[e])
    }

    /// Runs (as arrow-class words) of the raw `L` labels, independent of
    /// whether `(f2)` holds.
    fn class_word(&self, e: AngleId, n: u64) -> Vec<usize> {
        let mut out = Vec::with_capacity(n as usize);
        let mut a = e;
        for _ in 0..n {
            out.push(self.class_of[a]);
            a = self.g[a];
        }
        out
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.angle_count();
        let sigma = self.nakayama();
        let first_pair = |pred: &dyn Fn(AngleId, AngleId) -> bool| -> Option<Vec<AngleId>> {
            for a in 0..n {
                for b in a + 1..n {
                    if pred(a, b) {
                        return Some(vec![a, b]);
                    }
                }
            }
            None
        };

        let f1 = first_pair(&|a, b| self.class_of[a] == self.class_of[b] && self.polygon_of[a] != self.polygon_of[b]);
        let f2 = first_pair(&|a, b| {
            self.class_of[a] == self.class_of[b]
                && self.polygon_of[self.g[a]] != self.polygon_of[self.g[b]]
        });
        let f3 = self
            .orbits
            .iter()
            .find(|orbit| orbit.iter().any(|&e| self.degree[e] != self.degree[orbit[0]]))
            .map(|orbit| {
                let mut o = orbit.clone();
                o.sort_unstable();
                o
            });
        let f4 = first_pair(&|a, b| {
            (self.polygon_of[a] == self.polygon_of[b])
                != (self.polygon_of[sigma[a]] == self.polygon_of[sigma[b]])
        });
        let f5 = first_pair(&|a, b| {
            (self.class_of[a] == self.class_of[b]) != (self.class_of[sigma[a]] == self.class_of[sigma[b]])
        });
        let words: Vec<Vec<usize>> = self
            .angles()
            .map(|e| self.class_word(e, self.degree[e]))
            .collect();
        let mut f6 = None;
        'outer: for e in 0..n {
            for h in 0..n {
                let (we, wh) = (&words[e], &words[h]);
                if we.len() < wh.len() && wh.windows(we.len()).any(|w| w == we.as_slice()) {
                    f6 = Some(vec![e, h]);
                    break 'outer;
                }
            }
        }
        let verdicts = [
            (Axiom::F1, f1),
            (Axiom::F2, f2),
            (Axiom::F3, f3),
            (Axiom::F4, f4),
            (Axiom::F5, f5),
            (Axiom::F6, f6),
        ]
        .into_iter()
        .map(|(axiom, w)| AxiomVerdict {
            axiom,
            holds: w.is_none(),
            witness: w.unwrap_or_default(),
        })
        .collect();
        AxiomReport { verdicts }
    }

    /// All standard sequences, ordered by base angle then length.
    pub fn standard_sequences(&self) -> Vec<StandardSequence> {
        self.angles()
            .flat_map(|e| (0..=self.degree[e]).map(move |len| StandardSequence { base: e, len }))
            .collect()
    }

    pub fn is_full(&self, p: StandardSequence) -> bool {
        p.len == self.degree[p.base]
    }

    /// Angles of the sequence in walking order: `e, g(e), …, g^{n-1}(e)`.
    pub fn sequence_angles(&self, p: StandardSequence) -> Vec<AngleId> {
        (0..p.len).map(|k| self.g_pow(p.base, k as i64)).collect()
    }

    /// `^p`: the standard sequence that completes `p` on the left to a full
    /// sequence.
    pub fn wedge_left(&self, p: StandardSequence) -> StandardSequence {
        let d = self.degree[p.base];
        let e = p.base;
        if p.len == 0 {
            StandardSequence { base: e, len: d }
        } else if p.len == d {
            StandardSequence { base: self.g_pow(e, d as i64), len: 0 }
        } else {
            StandardSequence { base: self.g_pow(e, p.len as i64), len: d - p.len }
        }
    }

    /// `p^`: the standard sequence that completes `p` on the right to a full
    /// sequence.
    pub fn wedge_right(&self, p: StandardSequence) -> StandardSequence {
        let d = self.degree[p.base];
        let e = p.base;
        if p.len == 0 {
            StandardSequence { base: self.g_pow(e, -(d as i64)), len: d }
        } else if p.len == d {
            StandardSequence { base: e, len: 0 }
        } else {
            StandardSequence { base: self.g_pow(e, p.len as i64 - d as i64), len: d - p.len }
        }
    }

    /// `L(p)` as a path in `Q_E`.
    pub fn l_word(&self, p: StandardSequence) -> Path {
        self.run_word(p.base, p.len)
    }

    /// Groups every standard sequence by its `L`-word. Classes are ordered by
    /// the canonical order of their words.
    pub fn sequence_classes(&self) -> Vec<SequenceClass> {
        let mut by_word: BTreeMap<Path, Vec<StandardSequence>> = BTreeMap::new();
        for p in self.standard_sequences() {
            by_word.entry(self.l_word(p)).or_default().push(p);
        }
        by_word
            .into_iter()
            .map(|(word, members)| SequenceClass { word, members })
            .collect()
    }

    /// Checks the type-S condition directly: for identical sequences `p ≡ q`
    /// the closures `[[^p]^]` and `[[^q]^]` agree.
    pub fn check_f7(&self) -> F7Verdict {
        let classes = SequenceIndex::new(self);
        for class in &classes.classes {
            if class.len() < 2 {
                continue;
            }
            let reference = classes.left_then_right(self, class[0]);
            for &q in &class[1..] {
                if classes.left_then_right(self, q) != reference {
                    return F7Verdict { holds: false, witness: Some((class[0], q)) };
                }
            }
        }
        F7Verdict { holds: true, witness: None }
    }

    /// `[[^p]^]` as a set of sequences.
    pub fn left_then_right_closure(&self, p: StandardSequence) -> BTreeSet<StandardSequence> {
        SequenceIndex::new(self).left_then_right(self, p)
    }

    /// `[^[p^]]` as a set of sequences.
    pub fn right_then_left_closure(&self, p: StandardSequence) -> BTreeSet<StandardSequence> {
        SequenceIndex::new(self).right_then_left(self, p)
    }

    pub fn display_sequence(&self, p: StandardSequence) -> String {
        if p.len == 0 {
            return format!("()_{}", self.names[p.base]);
        }
        let parts: Vec<&str> = self
            .sequence_angles(p)
            .into_iter()
            .rev()
            .map(|a| self.names[a].as_str())
            .collect();
        format!("({})", parts.join(","))
    }

    /// Name of `Q_E`'s vertex for polygon `i`: `P(e)` with `e` its least angle.
    pub fn polygon_name(&self, i: usize) -> String {
        format!("P({})", self.names[self.polygons[i][0]])
    }

    /// Name of `Q_E`'s arrow for `L`-block `j`: `L(e)` with `e` its least angle.
    pub fn class_name(&self, j: usize) -> String {
        format!("L({})", self.names[self.classes[j][0]])
    }
}

struct SequenceIndex {
    classes: Vec<Vec<StandardSequence>>,
    class_of: HashMap<StandardSequence, usize>,
}

impl SequenceIndex {
    fn new(fbc: &Fbc) -> Self {
        let mut classes = Vec::new();
        let mut class_of = HashMap::new();
        for c in fbc.sequence_classes() {
            let id = classes.len();
            for &m in &c.members {
                class_of.insert(m, id);
            }
            classes.push(c.members);
        }
        SequenceIndex { classes, class_of }
    }

    fn close(&self, seqs: impl IntoIterator<Item = StandardSequence>) -> BTreeSet<StandardSequence> {
        let ids: BTreeSet<usize> = seqs.into_iter().map(|s| self.class_of[&s]).collect();
        ids.into_iter()
            .flat_map(|i| self.classes[i].iter().copied())
            .collect()
    }

    fn left_then_right(&self, fbc: &Fbc, p: StandardSequence) -> BTreeSet<StandardSequence> {
        let inner = self.close([fbc.wedge_left(p)]);
        self.close(inner.into_iter().map(|s| fbc.wedge_right(s)))
    }

    fn right_then_left(&self, fbc: &Fbc, p: StandardSequence) -> BTreeSet<StandardSequence> {
        let inner = self.close([fbc.wedge_right(p)]);
        self.close(inner.into_iter().map(|s| fbc.wedge_left(s)))
    }
}

/// `(g^{n-1}(e), …, g(e), e)` stored as the base angle `e` and length `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardSequence {
    pub base: AngleId,
    pub len: u64,
}

#[derive(Clone, Debug)]
pub struct SequenceClass {
    pub word: Path,
    pub members: Vec<StandardSequence>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = *self as usize + 1;
        write!(f, "f{n}")
    }
}

#[derive(Clone, Debug)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub holds: bool,
    /// Offending angles: a pair, or the whole orbit for `(f3)`.
    pub witness: Vec<AngleId>,
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub verdicts: Vec<AxiomVerdict>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn verdict(&self, axiom: Axiom) -> &AxiomVerdict {
        &self.verdicts[axiom as usize]
    }

    pub fn first_failure(&self) -> Option<&AxiomVerdict> {
        self.verdicts.iter().find(|v| !v.holds)
    }

    /// Only `(f1)`–`(f3)` are needed to build `Q_E`.
    pub fn quiver_axioms_hold(&self) -> bool {
        self.verdicts[..3].iter().all(|v| v.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F7Verdict {
    pub holds: bool,
    pub witness: Option<(StandardSequence, StandardSequence)>,
}
