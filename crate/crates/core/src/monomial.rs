//! Monomial algebras `kQ/I` with `I` generated by paths.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::presentation::{QuiverPresentation, RelationElement, RelationKind};
use crate::quiver::{Path, Quiver};

pub const DEFAULT_BASIS_CAP: usize = 100_000;
/// Longest nonzero path the enumeration will store.
pub const MAX_PATH_LEN: usize = 2048;

/// A finite-dimensional monomial algebra together with its nonzero-path
/// basis and its maximal paths.
#[derive(Clone, Debug)]
pub struct MonomialAlgebra {
    quiver: Quiver,
    generators: Vec<Path>,
    basis: Vec<Path>,
    maximal: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl MonomialAlgebra {
    pub fn new(quiver: Quiver, generators: Vec<Path>) -> Result<Self> {
        Self::with_cap(quiver, generators, DEFAULT_BASIS_CAP)
    }

    pub fn with_cap(quiver: Quiver, generators: Vec<Path>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.len() < 2 {
                return Err(Error::InvalidInput(format!(
                    "monomial relation `{}` has length {} (at least 2 required)",
                    quiver.display_path(g),
                    g.len()
                )));
            }
        }
        let generators = minimize_generators(generators);
        let basis = enumerate_basis(&quiver, &generators, cap)?;
        let maximal = maximal_paths(&quiver, &basis);
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(MonomialAlgebra {
            quiver,
            generators,
            basis,
            maximal,
            index,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn generators(&self) -> &[Path] {
        &self.generators
    }

    /// Nonzero paths in canonical order.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn maximal_paths(&self) -> &[Path] {
        &self.maximal
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_zero_path(&self, p: &Path) -> bool {
        is_zero_path(&self.generators, p)
    }

    /// The algebra as a quiver presentation with one monomial relation per
    /// generator.
    pub fn presentation(&self) -> QuiverPresentation {
        let relations = self
            .generators
            .iter()
            .map(|g| RelationElement::monomial(RelationKind::External, g.clone()))
            .collect();
        QuiverPresentation::new_unchecked(self.quiver.clone(), relations)
    }
}

/// Drops duplicates and any generator that has another generator as a factor.
fn minimize_generators(mut gens: Vec<Path>) -> Vec<Path> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Path> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| g.has_factor(k.arrows())) {
            kept.push(g);
        }
    }
    kept
}

/// True iff some generator occurs as a contiguous factor of `p`.
pub fn is_zero_path(generators: &[Path], p: &Path) -> bool {
    generators.iter().any(|g| p.has_factor(g.arrows()))
}

/// Breadth-first enumeration of all paths avoiding every generator as a
/// factor, in canonical order.
pub fn enumerate_basis(quiver: &Quiver, generators: &[Path], cap: usize) -> Result<Vec<Path>> {
    let mut found: Vec<Path> = Vec::new();
    let mut queue: VecDeque<Path> = quiver.vertices().map(Path::trivial).collect();
    while let Some(p) = queue.pop_front() {
        found.push(p.clone());
        // a nonzero path of length L has L + 1 nonzero prefixes
        if found.len() > cap || p.len() >= cap {
            return Err(Error::NotFiniteDimensional { cap });
        }
        if p.len() > MAX_PATH_LEN {
            return Err(Error::PathLengthExceeded { limit: MAX_PATH_LEN });
        }
        for &a in quiver.out_arrows(p.target()) {
            let q = p.then(quiver, a).expect("out arrow composes");
            // p already avoids every generator, so only suffixes can match
            let killed = generators
                .iter()
                .any(|g| q.arrows().ends_with(g.arrows()));
            if !killed {
                queue.push_back(q);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// Paths of the basis that every one-arrow extension on either side kills.
pub fn maximal_paths(quiver: &Quiver, basis: &[Path]) -> Vec<Path> {
    let set: HashSet<&Path> = basis.iter().collect();
    basis
        .iter()
        .filter(|p| {
            let right_dead = quiver
                .out_arrows(p.target())
                .iter()
                .all(|&a| !set.contains(&p.then(quiver, a).unwrap()));
            let left_dead = quiver
                .in_arrows(p.source())
                .iter()
                .all(|&a| !set.contains(&p.preceded_by(quiver, a).unwrap()));
            right_dead && left_dead
        })
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::VertexId;

    fn truncated_loop(n: usize) -> MonomialAlgebra {
        let q = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
        let g = q.path_from_names(&vec!["x"; n]).unwrap();
        MonomialAlgebra::new(q, vec![g]).unwrap()
    }

    fn diamond() -> MonomialAlgebra {
        let q = Quiver::from_names(
            &["1", "2", "3", "4", "5"],
            &[
                ("a1", "1", "2"),
                ("a2", "2", "3"),
                ("a3", "3", "5"),
                ("b1", "1", "4"),
                ("b2", "4", "5"),
            ],
        )
        .unwrap();
        let g = q.path_from_names(&["a1", "a2", "a3"]).unwrap();
        MonomialAlgebra::new(q, vec![g]).unwrap()
    }

    fn shown(a: &MonomialAlgebra, ps: &[Path]) -> Vec<String> {
        ps.iter().map(|p| a.quiver().display_path(p)).collect()
    }

    #[test]
    fn truncated_loop_basis() {
        let a = truncated_loop(3);
        assert_eq!(shown(&a, a.basis()), ["e_1", "x", "x·x"]);
        assert_eq!(a.dimension(), 3);
        assert_eq!(shown(&a, a.maximal_paths()), ["x·x"]);
    }

    /// Brute force: every composable word up to a length, filtered by the
    /// factor test directly.
    fn brute_force_dimension(q: &Quiver, gens: &[Path], max_len: usize) -> usize {
        let mut layer: Vec<Path> = q.vertices().map(Path::trivial).collect();
        let mut count = layer.len();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &layer {
                for a in q.arrow_ids() {
                    if let Some(x) = p.then(q, a) {
                        next.push(x);
                    }
                }
            }
            count += next.iter().filter(|p| !is_zero_path(gens, p)).count();
            layer = next;
        }
        count
    }

    #[test]
    fn diamond_dimension_matches_brute_force() {
        let a = diamond();
        assert_eq!(a.dimension(), 13);
        assert_eq!(
            brute_force_dimension(a.quiver(), a.generators(), 6),
            a.dimension()
        );
        assert_eq!(
            shown(&a, a.maximal_paths()),
            ["a2·a1", "a3·a2", "b2·b1"]
        );
    }

    #[test]
    fn isolated_vertex() {
        let q = Quiver::from_names::<&str>(&["1"], &[]).unwrap();
        let a = MonomialAlgebra::new(q, vec![]).unwrap();
        assert_eq!(a.dimension(), 1);
        assert_eq!(a.maximal_paths().len(), 1);
        assert!(a.maximal_paths()[0].is_trivial());
    }

    #[test]
    fn zero_path_detection() {
        let a = truncated_loop(3);
        let q = a.quiver();
        assert!(a.is_zero_path(&q.path_from_names(&["x", "x", "x"]).unwrap()));
        assert!(!a.is_zero_path(&q.path_from_names(&["x", "x"]).unwrap()));
        let d = diamond();
        let p = d.quiver().path_from_names(&["a1", "a2", "a3"]).unwrap();
        assert!(d.is_zero_path(&p));
    }

    #[test]
    fn infinite_dimension_is_detected() {
        let q = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
        let err = MonomialAlgebra::with_cap(q, vec![], 50).unwrap_err();
        assert!(matches!(err, Error::NotFiniteDimensional { cap: 50 }));
    }

    #[test]
    fn short_generators_rejected() {
        let q = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
        let x = q.path_from_names(&["x"]).unwrap();
        assert!(MonomialAlgebra::new(q.clone(), vec![x]).is_err());
        assert!(MonomialAlgebra::new(q, vec![Path::trivial(VertexId(0))]).is_err());
    }

    #[test]
    fn generators_are_minimized() {
        let q = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
        let g2 = q.path_from_names(&["x", "x"]).unwrap();
        let g3 = q.path_from_names(&["x", "x", "x"]).unwrap();
        let a = MonomialAlgebra::new(q, vec![g3, g2.clone(), g2.clone()]).unwrap();
        assert_eq!(a.generators(), &[g2]);
        assert_eq!(a.dimension(), 2);
    }
}
