//! Exact linear algebra on truncated path spaces.
//!
//! A [`PathSpaceModel`] fixes a length bound `N` and works in
//! `kQ / (monomial relations + paths longer than N)`, whose basis is the set
//! of paths of length at most `N` avoiding every monomial relation as a
//! factor. The ideal generated by the remaining relations is computed as the
//! smallest subspace containing them and closed under multiplication by
//! arrows on both sides. The bound is accepted only when every path of
//! length `N` lies in that subspace.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{row_from_entries, row_from_rationals, Echelon, SparseRow};
use crate::presentation::{QuiverPresentation, RelationElement};
use crate::quiver::{ArrowId, Path, Quiver};

pub const DEFAULT_BOUND_CAP: usize = 64;
pub const DEFAULT_COLUMN_LIMIT: usize = 400_000;

#[derive(Clone, Copy, Debug)]
pub struct EngineLimits {
    pub bound_cap: usize,
    pub column_limit: usize,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits {
            bound_cap: DEFAULT_BOUND_CAP,
            column_limit: DEFAULT_COLUMN_LIMIT,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PathSpaceModel {
    presentation: QuiverPresentation,
    bound: usize,
    columns: Vec<Path>,
    index: HashMap<Path, usize>,
    /// `then[c]`: columns reached by appending an out-arrow of `c`'s target.
    then: Vec<Vec<(ArrowId, usize)>>,
    /// `before[c]`: columns reached by prepending an in-arrow of `c`'s source.
    before: Vec<Vec<(ArrowId, usize)>>,
    monomials: HashSet<Vec<ArrowId>>,
    monomial_lengths: Vec<usize>,
    span: Echelon,
    basis: Vec<usize>,
}

impl PathSpaceModel {
    pub fn new(presentation: &QuiverPresentation) -> Result<Self> {
        Self::with_limits(presentation, EngineLimits::default())
    }

    pub fn with_limits(presentation: &QuiverPresentation, limits: EngineLimits) -> Result<Self> {
        let mut bound = (presentation.max_relation_len() + 1).max(1);
        loop {
            if bound > limits.bound_cap {
                return Err(Error::BoundCapExceeded { cap: limits.bound_cap });
            }
            let model = Self::at_bound(presentation, bound, limits.column_limit)?;
            if model.certified() {
                return Ok(model);
            }
            if bound == limits.bound_cap {
                return Err(Error::BoundCapExceeded { cap: limits.bound_cap });
            }
            bound = (bound * 2).min(limits.bound_cap);
        }
    }

    /// Builds the model at a fixed bound without checking the certificate.
    pub fn at_bound(presentation: &QuiverPresentation, bound: usize, column_limit: usize) -> Result<Self> {
        let quiver = presentation.quiver();
        let mut monomials = HashSet::new();
        let mut lengths = Vec::new();
        for r in presentation.relations() {
            if r.is_monomial() {
                let w = r.terms[0].path.arrows().to_vec();
                if !lengths.contains(&w.len()) {
                    lengths.push(w.len());
                }
                monomials.insert(w);
            }
        }
        lengths.sort_unstable();

        let mut model = PathSpaceModel {
            presentation: presentation.clone(),
            bound,
            columns: Vec::new(),
            index: HashMap::new(),
            then: Vec::new(),
            before: Vec::new(),
            monomials,
            monomial_lengths: lengths,
            span: Echelon::new(),
            basis: Vec::new(),
        };
        model.enumerate_columns(quiver, column_limit)?;
        model.close_ideal();
        model.basis = (0..model.columns.len()).filter(|&c| !model.span.is_pivot(c)).collect();
        Ok(model)
    }

    fn ends_in_monomial(&self, arrows: &[ArrowId]) -> bool {
        self.monomial_lengths
            .iter()
            .take_while(|&&l| l <= arrows.len())
            .any(|&l| self.monomials.contains(&arrows[arrows.len() - l..]))
    }

    fn enumerate_columns(&mut self, quiver: &Quiver, limit: usize) -> Result<()> {
        let mut found: Vec<Path> = Vec::new();
        let mut layer: Vec<Path> = quiver.vertices().map(Path::trivial).collect();
        for len in 0..=self.bound {
            let mut next = Vec::new();
            for p in &layer {
                if len < self.bound {
                    for &a in quiver.out_arrows(p.target()) {
                        let q = p.then(quiver, a).expect("out arrow composes");
                        if !self.ends_in_monomial(q.arrows()) {
                            next.push(q);
                        }
                    }
                }
            }
            found.append(&mut layer);
            if found.len() + next.len() > limit {
                return Err(Error::PathSpaceTooLarge { limit });
            }
            layer = next;
        }
        found.sort();
        self.index = found.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        self.then = vec![Vec::new(); found.len()];
        self.before = vec![Vec::new(); found.len()];
        for (i, p) in found.iter().enumerate() {
            if p.len() >= self.bound {
                continue;
            }
            for &a in quiver.out_arrows(p.target()) {
                if let Some(&j) = self.index.get(&p.then(quiver, a).unwrap()) {
                    self.then[i].push((a, j));
                }
            }
            for &a in quiver.in_arrows(p.source()) {
                if let Some(&j) = self.index.get(&p.preceded_by(quiver, a).unwrap()) {
                    self.before[i].push((a, j));
                }
            }
        }
        self.columns = found;
        Ok(())
    }

    /// Row of a rational combination of paths; zero paths are dropped.
    fn row_of(&self, terms: &[(BigRational, Path)]) -> SparseRow {
        let entries = terms
            .iter()
            .filter_map(|(c, p)| self.index.get(p).map(|&i| (i, c.clone())))
            .collect();
        row_from_rationals(entries)
    }

    fn relation_row(&self, r: &RelationElement) -> SparseRow {
        let terms: Vec<(BigRational, Path)> = r.terms.iter().map(|t| (t.coeff.clone(), t.path.clone())).collect();
        self.row_of(&terms)
    }

    fn shift(&self, row: &SparseRow, table: &[Vec<(ArrowId, usize)>], a: ArrowId) -> SparseRow {
        let entries = row
            .iter()
            .filter_map(|(c, v)| {
                table[*c]
                    .iter()
                    .find(|(b, _)| *b == a)
                    .map(|&(_, j)| (j, v.clone()))
            })
            .collect();
        row_from_entries(entries)
    }

    fn close_ideal(&mut self) {
        let quiver = self.presentation.quiver().clone();
        let mut queue: VecDeque<SparseRow> = VecDeque::new();
        for r in self.presentation.relations() {
            if r.is_monomial() {
                continue;
            }
            let row = self.relation_row(r);
            if let Some(inserted) = self.span.insert(row) {
                queue.push_back(inserted);
            }
        }
        while let Some(row) = queue.pop_front() {
            let (first, _) = row[0];
            let src = self.columns[first].source();
            let tgt = self.columns[first].target();
            let mut products = Vec::new();
            for &a in quiver.out_arrows(tgt) {
                products.push(self.shift(&row, &self.then, a));
            }
            for &a in quiver.in_arrows(src) {
                products.push(self.shift(&row, &self.before, a));
            }
            for p in products {
                if p.is_empty() {
                    continue;
                }
                if let Some(inserted) = self.span.insert(p) {
                    queue.push_back(inserted);
                }
            }
        }
    }

    fn certified(&self) -> bool {
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, p)| p.len() == self.bound)
            .all(|(i, _)| self.span.is_pivot(i) && self.span.contains(vec![(i, BigInt::from(1))]))
    }

    pub fn presentation(&self) -> &QuiverPresentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        self.presentation.quiver()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Greedy basis representatives in canonical path order.
    pub fn basis(&self) -> Vec<Path> {
        self.basis.iter().map(|&c| self.columns[c].clone()).collect()
    }

    pub fn contains(&self, terms: &[(BigRational, Path)]) -> bool {
        self.span.contains(self.row_of(terms))
    }

    pub fn contains_relation(&self, r: &RelationElement) -> bool {
        self.span.contains(self.relation_row(r))
    }

    pub fn is_zero_path(&self, p: &Path) -> bool {
        match self.index.get(p) {
            None => true,
            Some(&i) => self.span.contains(vec![(i, BigInt::from(1))]),
        }
    }

    /// Coordinates of the residue class over [`PathSpaceModel::basis`].
    pub fn normal_form(&self, terms: &[(BigRational, Path)]) -> Vec<(usize, BigRational)> {
        let mut l = BigInt::one();
        for (q, _) in terms {
            l = l.lcm(q.denom());
        }
        let entries = terms
            .iter()
            .filter_map(|(c, p)| self.index.get(p).map(|&i| (i, c.numer() * (&l / c.denom()))))
            .collect();
        let (row, den) = self.span.reduce_full(row_from_entries(entries));
        let den = den * l;
        let position: HashMap<usize, usize> = self.basis.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        row.into_iter()
            .map(|(c, v)| (position[&c], BigRational::new(v, den.clone())))
            .collect()
    }

    /// `C[i][j]`: number of basis representatives from vertex `j` to vertex `i`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.quiver().vertex_count();
        let mut c = vec![vec![0; n]; n];
        for &b in &self.basis {
            let p = &self.columns[b];
            c[p.target().0][p.source().0] += 1;
        }
        c
    }

    /// Paths inside the arrow subset that are zero in the quotient while every
    /// proper factor is nonzero, in canonical order.
    pub fn minimal_zero_paths(&self, arrows: &[ArrowId]) -> Vec<Path> {
        let quiver = self.quiver();
        let allowed: HashSet<ArrowId> = arrows.iter().copied().collect();
        let mut out = Vec::new();
        let mut layer: Vec<Path> = quiver
            .vertices()
            .map(Path::trivial)
            .filter(|p| !self.is_zero_path(p))
            .collect();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for p in &layer {
                for &a in quiver.out_arrows(p.target()) {
                    if !allowed.contains(&a) {
                        continue;
                    }
                    let q = p.then(quiver, a).unwrap();
                    if !self.is_zero_path(&q) {
                        next.push(q);
                    } else {
                        let tail = q.strip_earlier(&Path::arrow(quiver, q.arrows()[0])).unwrap();
                        if q.len() == 1 || !self.is_zero_path(&tail) {
                            out.push(q);
                        }
                    }
                }
            }
            layer = next;
        }
        out.sort();
        out
    }
}

pub fn dimension(pres: &QuiverPresentation) -> Result<usize> {
    Ok(PathSpaceModel::new(pres)?.dimension())
}

pub fn contains(pres: &QuiverPresentation, terms: &[(BigRational, Path)]) -> Result<bool> {
    Ok(PathSpaceModel::new(pres)?.contains(terms))
}

/// Checks that every generator of one presentation lies in the ideal of the
/// other and vice versa, over the same quiver.
pub fn ideals_equal(a: &QuiverPresentation, b: &QuiverPresentation) -> Result<IdealComparison> {
    let ma = PathSpaceModel::new(a)?;
    let mb = PathSpaceModel::new(b)?;
    let missing_in_b = a.relations().iter().find(|r| !mb.contains_relation(r)).cloned();
    let missing_in_a = b.relations().iter().find(|r| !ma.contains_relation(r)).cloned();
    Ok(IdealComparison {
        dim_a: ma.dimension(),
        dim_b: mb.dimension(),
        missing_in_b,
        missing_in_a,
    })
}

#[derive(Clone, Debug)]
pub struct IdealComparison {
    pub dim_a: usize,
    pub dim_b: usize,
    pub missing_in_b: Option<RelationElement>,
    pub missing_in_a: Option<RelationElement>,
}

impl IdealComparison {
    pub fn equal(&self) -> bool {
        self.dim_a == self.dim_b && self.missing_in_a.is_none() && self.missing_in_b.is_none()
    }
}
