//! The trivial extension `T(A) = A ⋉ D(A)` of a monomial algebra, given by
//! structure constants on the basis `{Prim(p)} ∪ {Dual(p)}`, and the
//! comparison with the algebra of `E_A`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ea::{build_ea, dual_arrow_name, AlgebraConfiguration, ArrowRole};
use crate::engine::PathSpaceModel;
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::monomial::MonomialAlgebra;
use crate::presentation::RelationElement;
use crate::quiver::{Arrow, Path, Quiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Prim(usize),
    Dual(usize),
}

/// A rational combination of basis symbols; absent symbols have coefficient 0.
pub type Element = BTreeMap<Symbol, BigRational>;

#[derive(Clone, Debug)]
pub struct TrivialExtension {
    algebra: MonomialAlgebra,
}

impl TrivialExtension {
    pub fn new(algebra: &MonomialAlgebra) -> Self {
        TrivialExtension { algebra: algebra.clone() }
    }

    pub fn algebra(&self) -> &MonomialAlgebra {
        &self.algebra
    }

    pub fn dimension(&self) -> usize {
        2 * self.algebra.dimension()
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let n = self.algebra.dimension();
        (0..n).map(Symbol::Prim).chain((0..n).map(Symbol::Dual)).collect()
    }

    pub fn symbol_index(&self, s: Symbol) -> usize {
        match s {
            Symbol::Prim(i) => i,
            Symbol::Dual(i) => self.algebra.dimension() + i,
        }
    }

    fn path(&self, i: usize) -> &Path {
        &self.algebra.basis()[i]
    }

    pub fn prim(&self, p: &Path) -> Option<Symbol> {
        self.algebra.basis_index(p).map(Symbol::Prim)
    }

    pub fn dual(&self, p: &Path) -> Option<Symbol> {
        self.algebra.basis_index(p).map(Symbol::Dual)
    }

    /// Product of two basis symbols, `x · y`, with `x · y` read as "`y`
    /// first, then `x`" on paths.
    pub fn multiply_symbols(&self, x: Symbol, y: Symbol) -> Option<Symbol> {
        match (x, y) {
            (Symbol::Prim(p), Symbol::Prim(q)) => {
                let pq = self.path(p).after(self.path(q))?;
                self.algebra.basis_index(&pq).map(Symbol::Prim)
            }
            // s · p = r
            (Symbol::Prim(p), Symbol::Dual(r)) => {
                let s = self.path(r).strip_earlier(self.path(p))?;
                self.algebra.basis_index(&s).map(Symbol::Dual)
            }
            // q · s = r
            (Symbol::Dual(r), Symbol::Prim(q)) => {
                let s = self.path(r).strip_later(self.path(q))?;
                self.algebra.basis_index(&s).map(Symbol::Dual)
            }
            (Symbol::Dual(_), Symbol::Dual(_)) => None,
        }
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::new();
        for (a, ca) in x {
            for (b, cb) in y {
                if let Some(s) = self.multiply_symbols(*a, *b) {
                    *out.entry(s).or_insert_with(BigRational::zero) += ca * cb;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn element(s: Symbol) -> Element {
        Element::from([(s, BigRational::one())])
    }

    pub fn display_symbol(&self, s: Symbol) -> String {
        let q = self.algebra.quiver();
        match s {
            Symbol::Prim(i) => q.display_path(self.path(i)),
            Symbol::Dual(i) => format!("({})^∨", q.display_path(self.path(i))),
        }
    }

    /// The quiver of `T(A)`: the arrows of `A` plus one arrow `t(m) → s(m)`
    /// per maximal path `m`.
    pub fn quiver(&self) -> Quiver {
        let q = self.algebra.quiver();
        let mut arrows: Vec<Arrow> = q.arrows().to_vec();
        for (m, p) in self.algebra.maximal_paths().iter().enumerate() {
            arrows.push(Arrow {
                name: dual_arrow_name(&self.algebra, m),
                source: p.target(),
                target: p.source(),
            });
        }
        Quiver::new(q.vertex_names().to_vec(), arrows).expect("dual arrow names are fresh")
    }

    /// `Prim(q)·Dual(prq)·Prim(p) = Dual(r)` for every factorisation of a
    /// basis path. Returns the first failing `(q, r, p)` as basis indices.
    pub fn check_sandwich_identity(&self) -> std::result::Result<usize, (usize, usize, usize)> {
        let quiver = self.algebra.quiver();
        let mut checked = 0;
        for (w, path) in self.algebra.basis().iter().enumerate() {
            // traversal order: q first, then r, then p
            for i in 0..=path.len() {
                for j in i..=path.len() {
                    let q = path.slice(quiver, 0, i);
                    let r = path.slice(quiver, i, j);
                    let p = path.slice(quiver, j, path.len());
                    let (qi, ri, pi) = (
                        self.algebra.basis_index(&q).unwrap(),
                        self.algebra.basis_index(&r).unwrap(),
                        self.algebra.basis_index(&p).unwrap(),
                    );
                    let left = self
                        .multiply_symbols(Symbol::Prim(qi), Symbol::Dual(w))
                        .and_then(|x| self.multiply_symbols(x, Symbol::Prim(pi)));
                    if left != Some(Symbol::Dual(ri)) {
                        return Err((qi, ri, pi));
                    }
                    checked += 1;
                }
            }
        }
        Ok(checked)
    }

    /// Exhaustive associativity on symbol triples.
    pub fn check_associativity(&self) -> std::result::Result<usize, (Symbol, Symbol, Symbol)> {
        let symbols = self.symbols();
        let mut checked = 0;
        for &a in &symbols {
            for &b in &symbols {
                let ab = self.multiply_symbols(a, b);
                for &c in &symbols {
                    let left = ab.and_then(|x| self.multiply_symbols(x, c));
                    let right = self.multiply_symbols(b, c).and_then(|x| self.multiply_symbols(a, x));
                    if left != right {
                        return Err((a, b, c));
                    }
                    checked += 1;
                }
            }
        }
        Ok(checked)
    }

    /// The symbols reached from vertices, arrows and duals of maximal paths
    /// by repeated multiplication.
    pub fn generated_symbols(&self) -> BTreeSet<Symbol> {
        let q = self.algebra.quiver();
        let mut gens: Vec<Symbol> = Vec::new();
        for v in q.vertices() {
            gens.extend(self.prim(&Path::trivial(v)));
        }
        for a in q.arrow_ids() {
            gens.extend(self.prim(&Path::arrow(q, a)));
        }
        for m in self.algebra.maximal_paths() {
            gens.extend(self.dual(m));
        }
        let mut reached: BTreeSet<Symbol> = gens.iter().copied().collect();
        let mut frontier: Vec<Symbol> = gens.clone();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                for s in [self.multiply_symbols(x, g), self.multiply_symbols(g, x)].into_iter().flatten() {
                    if reached.insert(s) {
                        frontier.push(s);
                    }
                }
            }
        }
        reached
    }
}

/// `ψ`: sends an arrow of `Q_{E_A}` to `Prim(α)` or to `Dual(m)`, and a path
/// to the product of its arrows' images.
pub fn psi_path(te: &TrivialExtension, ea: &AlgebraConfiguration, p: &Path) -> Option<Symbol> {
    let aq = te.algebra().quiver();
    let v = ea.polygon_vertex(p.source().0);
    let mut acc = te.prim(&Path::trivial(v))?;
    for &a in p.arrows() {
        let image = match ea.role(a) {
            ArrowRole::Original(x) => te.prim(&Path::arrow(aq, x))?,
            ArrowRole::Dual(m) => te.dual(&te.algebra().maximal_paths()[m])?,
        };
        acc = te.multiply_symbols(image, acc)?;
    }
    Some(acc)
}

pub fn psi_relation(te: &TrivialExtension, ea: &AlgebraConfiguration, r: &RelationElement) -> Element {
    let mut out = Element::new();
    for t in &r.terms {
        if let Some(s) = psi_path(te, ea, &t.path) {
            *out.entry(s).or_insert_with(BigRational::zero) += &t.coeff;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivextReport {
    pub dim_a: usize,
    pub dim_presentation: usize,
    pub rank: usize,
    pub relations_checked: usize,
    pub reps_without_dual: usize,
    pub reps_with_one_dual: usize,
    pub reps_with_more_duals: usize,
}

/// Compares the algebra of `E_A` with `T(A)`: matching quivers with tagging,
/// every relation of either generating set killed by `ψ`, equal dimension,
/// and `ψ` of a basis of the quotient spanning `T(A)`.
pub fn verify_trivial_extension_iso(algebra: &MonomialAlgebra) -> Result<TrivextReport> {
    let ea = build_ea(algebra)?;
    let te = TrivialExtension::new(algebra);
    let fail = |m: String| Err(Error::VerificationFailed(m));

    // quivers with tagging
    let tq = te.quiver();
    let eq = ea.quiver();
    if tq.vertex_count() != eq.vertex_count() || tq.arrow_count() != eq.arrow_count() {
        return fail("quiver sizes differ".into());
    }
    let aq = algebra.quiver();
    let mut roles_seen = BTreeSet::new();
    for a in eq.arrow_ids() {
        let arrow = eq.arrow(a);
        let s = ea.polygon_vertex(arrow.source.0);
        let t = ea.polygon_vertex(arrow.target.0);
        let role = ea.role(a);
        let (want_s, want_t) = match role {
            ArrowRole::Original(x) => (aq.arrow(x).source, aq.arrow(x).target),
            ArrowRole::Dual(m) => {
                let p = &algebra.maximal_paths()[m];
                (p.target(), p.source())
            }
        };
        if (s, t) != (want_s, want_t) || !roles_seen.insert(role) {
            return fail(format!("arrow {} does not match its tag", arrow.name));
        }
    }

    let pres = ea.presentation()?;
    let primed = ea.primed_presentation()?;
    let mut checked = 0;
    for r in pres.relations().iter().chain(primed.relations()) {
        let image = psi_relation(&te, &ea, r);
        if !image.is_empty() {
            return fail(format!("relation {} is not killed", r.display(eq)));
        }
        checked += 1;
    }

    let model = PathSpaceModel::new(&pres)?;
    let dim = model.dimension();
    if dim != te.dimension() {
        return fail(format!("dimension {} vs 2·{}", dim, algebra.dimension()));
    }

    let mut span = Echelon::new();
    let duals: BTreeSet<_> = ea.dual_arrows().into_iter().collect();
    let (mut none, mut one, mut more) = (0, 0, 0);
    for b in model.basis() {
        match b.arrows().iter().filter(|a| duals.contains(a)).count() {
            0 => none += 1,
            1 => one += 1,
            _ => more += 1,
        }
        if let Some(s) = psi_path(&te, &ea, &b) {
            span.insert(vec![(te.symbol_index(s), BigInt::one())]);
        }
    }
    if span.rank() != te.dimension() {
        return fail(format!("images of basis span {} of {}", span.rank(), te.dimension()));
    }
    Ok(TrivextReport {
        dim_a: algebra.dimension(),
        dim_presentation: dim,
        rank: span.rank(),
        relations_checked: checked,
        reps_without_dual: none,
        reps_with_one_dual: one,
        reps_with_more_duals: more,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sym(te: &TrivialExtension, names: &[&str], dual: bool) -> Symbol {
        let q = te.algebra().quiver();
        let p = if names.is_empty() {
            Path::trivial(crate::quiver::VertexId(0))
        } else {
            q.path_from_names(names).unwrap()
        };
        if dual {
            te.dual(&p).unwrap()
        } else {
            te.prim(&p).unwrap()
        }
    }

    #[test]
    fn multiplication_examples() {
        let te = TrivialExtension::new(&fixtures::truncated_loop_x3());
        let x = sym(&te, &["x"], false);
        let xx_dual = sym(&te, &["x", "x"], true);
        let x_dual = sym(&te, &["x"], true);
        assert_eq!(te.multiply_symbols(x, xx_dual), Some(x_dual));
        assert_eq!(te.multiply_symbols(xx_dual, x), Some(x_dual));
        assert_eq!(te.multiply_symbols(x, x), Some(sym(&te, &["x", "x"], false)));
        assert_eq!(te.multiply_symbols(sym(&te, &["x", "x"], false), x), None);
        for a in te.symbols() {
            for b in te.symbols() {
                if matches!(a, Symbol::Dual(_)) && matches!(b, Symbol::Dual(_)) {
                    assert_eq!(te.multiply_symbols(a, b), None);
                }
                for c in te.symbols() {
                    if let (Symbol::Dual(_), Symbol::Prim(_), Symbol::Dual(_)) = (a, b, c) {
                        let v = te.multiply_symbols(a, b).and_then(|x| te.multiply_symbols(x, c));
                        assert_eq!(v, None);
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonal_idempotents() {
        let te = TrivialExtension::new(&fixtures::diamond());
        let q = te.algebra().quiver();
        for u in q.vertices() {
            for v in q.vertices() {
                let eu = te.prim(&Path::trivial(u)).unwrap();
                let ev = te.prim(&Path::trivial(v)).unwrap();
                let want = if u == v { Some(eu) } else { None };
                assert_eq!(te.multiply_symbols(eu, ev), want);
            }
        }
    }

    #[test]
    fn element_multiplication_is_bilinear() {
        let te = TrivialExtension::new(&fixtures::truncated_loop_x3());
        let x = sym(&te, &["x"], false);
        let e = sym(&te, &[], false);
        let two = BigRational::from_integer(2.into());
        let a = Element::from([(e, BigRational::one()), (x, two.clone())]);
        let sq = te.multiply(&a, &a);
        // (1 + 2x)^2 = 1 + 4x + 4x^2
        assert_eq!(sq.len(), 3);
        assert_eq!(sq[&x], BigRational::from_integer(4.into()));
    }

    #[test]
    fn quiver_of_trivial_extension() {
        let te = TrivialExtension::new(&fixtures::diamond());
        let q = te.quiver();
        assert_eq!(q.vertex_count(), 5);
        assert_eq!(q.arrow_count(), 8);
        let d = q.arrow(q.arrow_by_name("(a3·a2)^∨").unwrap());
        assert_eq!((q.vertex_name(d.source), q.vertex_name(d.target)), ("5", "2"));
        let point = MonomialAlgebra::new(Quiver::from_names::<&str>(&["1"], &[]).unwrap(), vec![]).unwrap();
        let q = TrivialExtension::new(&point).quiver();
        assert_eq!(q.loop_count(crate::quiver::VertexId(0)), 1);
    }

    #[test]
    fn identities_hold_on_fixtures() {
        for a in [fixtures::truncated_loop_x3(), fixtures::diamond()] {
            let te = TrivialExtension::new(&a);
            assert!(te.check_sandwich_identity().is_ok());
            assert!(te.check_associativity().is_ok());
            assert_eq!(te.generated_symbols().len(), te.dimension());
        }
    }

    #[test]
    fn trivial_extension_iso_on_fixtures() {
        let r = verify_trivial_extension_iso(&fixtures::truncated_loop_x3()).unwrap();
        assert_eq!((r.dim_a, r.dim_presentation, r.rank), (3, 6, 6));
        assert_eq!((r.reps_without_dual, r.reps_with_one_dual, r.reps_with_more_duals), (3, 3, 0));
        let r = verify_trivial_extension_iso(&fixtures::diamond()).unwrap();
        assert_eq!((r.dim_a, r.dim_presentation), (13, 26));
        let point = MonomialAlgebra::new(Quiver::from_names::<&str>(&["1"], &[]).unwrap(), vec![]).unwrap();
        let r = verify_trivial_extension_iso(&point).unwrap();
        assert_eq!(r.dim_presentation, 2);
    }
}
