//! The configuration `E_A` of a monomial algebra: one angle per position
//! along each maximal path, including the endpoint.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fbc::{AngleId, Fbc};
use crate::monomial::MonomialAlgebra;
use crate::presentation::{self, QuiverPresentation};
use crate::quiver::{Arrow, ArrowId, Quiver, VertexId};

/// What an arrow of `Q_{E_A}` stands for in the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowRole {
    Original(ArrowId),
    /// Dual arrow of the maximal path with this index.
    Dual(usize),
}

#[derive(Clone, Debug)]
pub struct AlgebraConfiguration {
    algebra: MonomialAlgebra,
    fbc: Fbc,
    polygon_vertex: Vec<VertexId>,
    roles: Vec<ArrowRole>,
    quiver: Quiver,
}

/// Name of the dual arrow attached to a maximal path.
pub fn dual_arrow_name(algebra: &MonomialAlgebra, m: usize) -> String {
    format!("({})^∨", algebra.quiver().display_path(&algebra.maximal_paths()[m]))
}

pub fn build_ea(algebra: &MonomialAlgebra) -> Result<AlgebraConfiguration> {
    let q = algebra.quiver();
    let mut names = Vec::new();
    let mut g = Vec::new();
    let mut vertex_of: Vec<VertexId> = Vec::new();
    let mut by_vertex: BTreeMap<VertexId, Vec<AngleId>> = BTreeMap::new();
    let mut by_role: BTreeMap<ArrowRole, Vec<AngleId>> = BTreeMap::new();
    for (m, p) in algebra.maximal_paths().iter().enumerate() {
        let shown = q.display_path(p);
        let start = names.len();
        let n = p.len() + 1;
        for i in 0..n {
            let id = start + i;
            names.push(format!("({},{})", i + 1, shown));
            g.push(if i + 1 == n { start } else { id + 1 });
            let (v, role) = if i < p.len() {
                let a = p.arrows()[i];
                (q.arrow(a).source, ArrowRole::Original(a))
            } else {
                (p.target(), ArrowRole::Dual(m))
            };
            vertex_of.push(v);
            by_vertex.entry(v).or_default().push(id);
            by_role.entry(role).or_default().push(id);
        }
    }
    if by_vertex.len() != q.vertex_count() {
        return Err(Error::VerificationFailed("a vertex lies on no maximal path".into()));
    }
    let fbc = Fbc::with_trivial_degree(
        names,
        g,
        by_vertex.values().cloned().collect(),
        by_role.values().cloned().collect(),
    )?;

    // block indices are canonical inside the Fbc; map them back to the algebra
    let polygon_vertex: Vec<VertexId> = fbc.polygons().iter().map(|b| vertex_of[b[0]]).collect();
    let role_of_angle: BTreeMap<AngleId, ArrowRole> = by_role
        .iter()
        .flat_map(|(r, angles)| angles.iter().map(move |&a| (a, *r)))
        .collect();
    let roles: Vec<ArrowRole> = fbc.arrow_classes().iter().map(|b| role_of_angle[&b[0]]).collect();

    let vertices = polygon_vertex.iter().map(|&v| q.vertex_name(v).to_string()).collect();
    let arrows = fbc
        .arrow_classes()
        .iter()
        .zip(&roles)
        .map(|(block, role)| Arrow {
            name: match role {
                ArrowRole::Original(a) => q.arrow(*a).name.clone(),
                ArrowRole::Dual(m) => dual_arrow_name(algebra, *m),
            },
            source: VertexId(fbc.polygon(block[0])),
            target: VertexId(fbc.polygon(fbc.g(block[0]))),
        })
        .collect();
    let quiver = Quiver::new(vertices, arrows)?;
    Ok(AlgebraConfiguration {
        algebra: algebra.clone(),
        fbc,
        polygon_vertex,
        roles,
        quiver,
    })
}

impl AlgebraConfiguration {
    pub fn algebra(&self) -> &MonomialAlgebra {
        &self.algebra
    }

    pub fn fbc(&self) -> &Fbc {
        &self.fbc
    }

    /// `Q_{E_A}` with vertices and arrows named after the algebra.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn polygon_vertex(&self, polygon: usize) -> VertexId {
        self.polygon_vertex[polygon]
    }

    pub fn role(&self, arrow: ArrowId) -> ArrowRole {
        self.roles[arrow.0]
    }

    pub fn roles(&self) -> &[ArrowRole] {
        &self.roles
    }

    pub fn dual_arrows(&self) -> Vec<ArrowId> {
        (0..self.roles.len())
            .filter(|&i| matches!(self.roles[i], ArrowRole::Dual(_)))
            .map(ArrowId)
            .collect()
    }

    fn renamed(&self, pres: QuiverPresentation) -> QuiverPresentation {
        QuiverPresentation::new_unchecked(self.quiver.clone(), pres.relations().to_vec())
    }

    /// Relations of types 1–3 over the algebra-named quiver.
    pub fn presentation(&self) -> Result<QuiverPresentation> {
        Ok(self.renamed(presentation::presentation_unchecked(&self.fbc)?))
    }

    pub fn primed_presentation(&self) -> Result<QuiverPresentation> {
        Ok(self.renamed(presentation::primed_presentation(&self.fbc)?))
    }

    /// Checks that `E_A` is a symmetric configuration of type S.
    pub fn verify(&self) -> Result<EaReport> {
        let axioms = self.fbc.check_axioms();
        if let Some(v) = axioms.first_failure() {
            return Err(Error::VerificationFailed(format!("E_A fails ({})", v.axiom)));
        }
        if !self.fbc.is_symmetric() {
            return Err(Error::VerificationFailed("E_A is not symmetric".into()));
        }
        if !self.fbc.has_trivial_degree() {
            return Err(Error::VerificationFailed("E_A does not have trivial degree".into()));
        }
        let sf7 = presentation::check_sf7(&self.fbc)?.holds;
        let f7 = self.fbc.check_f7().holds;
        if !sf7 || !f7 {
            return Err(Error::VerificationFailed(format!("E_A type-S checks: sf7={sf7}, f7={f7}")));
        }
        Ok(EaReport {
            angles: self.fbc.angle_count(),
            polygons: self.fbc.polygons().len(),
            arrows: self.roles.len(),
            sf7,
            f7,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EaReport {
    pub angles: usize,
    pub polygons: usize,
    pub arrows: usize,
    pub sf7: bool,
    pub f7: bool,
}
