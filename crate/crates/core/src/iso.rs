//! Isomorphism search between presentations that sends arrows to arrows.
//!
//! A candidate is a bijection on vertices and arrows compatible with
//! endpoints. It induces an algebra isomorphism exactly when every relation
//! of one side maps into the ideal of the other, in both directions. The
//! search backtracks over arrow assignments, pruned by vertex invariants
//! taken from the quotients (Cartan entries) and by checking each relation as
//! soon as all its arrows are assigned.

use std::collections::HashSet;

use num_rational::BigRational;

use crate::engine::PathSpaceModel;
use crate::error::{Error, Result};
use crate::presentation::{QuiverPresentation, RelationElement};
use crate::quiver::{ArrowId, Path, Quiver, VertexId};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertex_map: Vec<VertexId>,
    pub arrow_map: Vec<ArrowId>,
}

impl Isomorphism {
    pub fn inverse(&self) -> Isomorphism {
        let mut v = vec![VertexId(0); self.vertex_map.len()];
        for (i, t) in self.vertex_map.iter().enumerate() {
            v[t.0] = VertexId(i);
        }
        let mut a = vec![ArrowId(0); self.arrow_map.len()];
        for (i, t) in self.arrow_map.iter().enumerate() {
            a[t.0] = ArrowId(i);
        }
        Isomorphism { vertex_map: v, arrow_map: a }
    }

    pub fn map_path(&self, target: &Quiver, p: &Path) -> Path {
        if p.is_trivial() {
            return Path::trivial(self.vertex_map[p.source().0]);
        }
        let arrows: Vec<ArrowId> = p.arrows().iter().map(|a| self.arrow_map[a.0]).collect();
        target.path(&arrows).expect("isomorphism preserves composability")
    }
}

/// Pins a set of arrows of the first presentation onto a set of arrows of the
/// second.
#[derive(Clone, Debug, Default)]
pub struct ArrowConstraint {
    pub first: Vec<ArrowId>,
    pub second: Vec<ArrowId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct VertexInvariant {
    out_degree: usize,
    in_degree: usize,
    loops: usize,
    from: usize,
    to: usize,
    diagonal: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct ArrowInvariant {
    source: VertexInvariant,
    target: VertexInvariant,
    is_loop: bool,
    zero: bool,
    pinned: bool,
}

struct Side<'a> {
    model: &'a PathSpaceModel,
    cartan: Vec<Vec<usize>>,
    vinv: Vec<VertexInvariant>,
    ainv: Vec<ArrowInvariant>,
    /// Non-redundant relations by the arrows they use.
    relations: Vec<(RelationElement, Vec<ArrowId>)>,
}

impl<'a> Side<'a> {
    fn new(model: &'a PathSpaceModel, pinned: &[ArrowId]) -> Self {
        let q = model.quiver();
        let cartan = model.cartan_matrix();
        let vinv: Vec<VertexInvariant> = q
            .vertices()
            .map(|v| VertexInvariant {
                out_degree: q.out_arrows(v).len(),
                in_degree: q.in_arrows(v).len(),
                loops: q.loop_count(v),
                from: (0..cartan.len()).map(|i| cartan[i][v.0]).sum(),
                to: cartan[v.0].iter().sum(),
                diagonal: cartan[v.0][v.0],
            })
            .collect();
        let pinned: HashSet<ArrowId> = pinned.iter().copied().collect();
        let ainv = q
            .arrow_ids()
            .map(|a| {
                let arrow = q.arrow(a);
                ArrowInvariant {
                    source: vinv[arrow.source.0].clone(),
                    target: vinv[arrow.target.0].clone(),
                    is_loop: arrow.source == arrow.target,
                    zero: model.is_zero_path(&Path::arrow(q, a)),
                    pinned: pinned.contains(&a),
                }
            })
            .collect();
        let relations = model
            .presentation()
            .relations()
            .iter()
            .map(|r| {
                let mut arrows: Vec<ArrowId> = r.paths().flat_map(|p| p.arrows().iter().copied()).collect();
                arrows.sort();
                arrows.dedup();
                (r.clone(), arrows)
            })
            .collect();
        Side { model, cartan, vinv, ainv, relations }
    }
}

fn map_relation(r: &RelationElement, arrow_map: &[Option<ArrowId>], target: &Quiver) -> Vec<(BigRational, Path)> {
    r.terms
        .iter()
        .map(|t| {
            let arrows: Vec<ArrowId> = t.path.arrows().iter().map(|a| arrow_map[a.0].unwrap()).collect();
            (t.coeff.clone(), target.path(&arrows).expect("endpoint-compatible map"))
        })
        .collect()
}

struct Search<'a> {
    one: Side<'a>,
    two: Side<'a>,
    order: Vec<ArrowId>,
    /// Relations of side one to check once the arrow at this depth is set.
    check_one: Vec<Vec<usize>>,
    fwd_arrow: Vec<Option<ArrowId>>,
    back_arrow: Vec<Option<ArrowId>>,
    fwd_vertex: Vec<Option<VertexId>>,
    back_vertex: Vec<Option<VertexId>>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn assign_vertex(&mut self, v1: VertexId, v2: VertexId, trail: &mut Vec<VertexId>) -> bool {
        match (self.fwd_vertex[v1.0], self.back_vertex[v2.0]) {
            (Some(x), _) => x == v2,
            (None, Some(_)) => false,
            (None, None) => {
                if self.one.vinv[v1.0] != self.two.vinv[v2.0] {
                    return false;
                }
                for (u1, u2) in self.fwd_vertex.iter().enumerate() {
                    if let Some(u2) = u2 {
                        if self.one.cartan[v1.0][u1] != self.two.cartan[v2.0][u2.0]
                            || self.one.cartan[u1][v1.0] != self.two.cartan[u2.0][v2.0]
                        {
                            return false;
                        }
                    }
                }
                self.fwd_vertex[v1.0] = Some(v2);
                self.back_vertex[v2.0] = Some(v1);
                trail.push(v1);
                true
            }
        }
    }

    fn relations_hold(&self, depth: usize, a2: ArrowId) -> bool {
        let q2 = self.two.model.quiver();
        for &i in &self.check_one[depth] {
            let mapped = map_relation(&self.one.relations[i].0, &self.fwd_arrow, q2);
            if !self.two.model.contains(&mapped) {
                return false;
            }
        }
        let q1 = self.one.model.quiver();
        for (r, arrows) in &self.two.relations {
            if !arrows.contains(&a2) || arrows.iter().any(|a| self.back_arrow[a.0].is_none()) {
                continue;
            }
            let mapped = map_relation(r, &self.back_arrow, q1);
            if !self.one.model.contains(&mapped) {
                return false;
            }
        }
        true
    }

    fn run(&mut self, depth: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded { budget: self.budget });
        }
        if depth == self.order.len() {
            return Ok(self.finish_vertices());
        }
        let a1 = self.order[depth];
        let q1 = self.one.model.quiver();
        let q2 = self.two.model.quiver();
        let (s1, t1) = (q1.arrow(a1).source, q1.arrow(a1).target);
        for a2 in q2.arrow_ids() {
            if self.back_arrow[a2.0].is_some() || self.one.ainv[a1.0] != self.two.ainv[a2.0] {
                continue;
            }
            let (s2, t2) = (q2.arrow(a2).source, q2.arrow(a2).target);
            let mut trail = Vec::new();
            let ok = self.assign_vertex(s1, s2, &mut trail) && self.assign_vertex(t1, t2, &mut trail);
            if ok {
                self.fwd_arrow[a1.0] = Some(a2);
                self.back_arrow[a2.0] = Some(a1);
                if self.relations_hold(depth, a2) && self.run(depth + 1)? {
                    return Ok(true);
                }
                self.fwd_arrow[a1.0] = None;
                self.back_arrow[a2.0] = None;
            }
            for v1 in trail {
                let v2 = self.fwd_vertex[v1.0].take().unwrap();
                self.back_vertex[v2.0] = None;
            }
        }
        Ok(false)
    }

    /// Vertices without arrows are interchangeable; pair them in order.
    fn finish_vertices(&mut self) -> bool {
        let free1: Vec<usize> = (0..self.fwd_vertex.len()).filter(|&v| self.fwd_vertex[v].is_none()).collect();
        let free2: Vec<usize> = (0..self.back_vertex.len()).filter(|&v| self.back_vertex[v].is_none()).collect();
        if free1.len() != free2.len() {
            return false;
        }
        for (&v1, &v2) in free1.iter().zip(&free2) {
            if self.one.vinv[v1] != self.two.vinv[v2] {
                return false;
            }
        }
        for (&v1, &v2) in free1.iter().zip(&free2) {
            self.fwd_vertex[v1] = Some(VertexId(v2));
            self.back_vertex[v2] = Some(VertexId(v1));
        }
        true
    }
}

/// Arrow order for the search: each next arrow touches as many already
/// reached vertices as possible.
fn search_order(q: &Quiver) -> Vec<ArrowId> {
    let mut reached = vec![false; q.vertex_count()];
    let mut used = vec![false; q.arrow_count()];
    let mut order = Vec::new();
    for _ in 0..q.arrow_count() {
        let best = q
            .arrow_ids()
            .filter(|a| !used[a.0])
            .max_by_key(|a| {
                let arr = q.arrow(*a);
                let score = reached[arr.source.0] as usize + reached[arr.target.0] as usize;
                (score, std::cmp::Reverse(a.0))
            })
            .unwrap();
        used[best.0] = true;
        reached[q.arrow(best).source.0] = true;
        reached[q.arrow(best).target.0] = true;
        order.push(best);
    }
    order
}

pub fn presentations_isomorphic(
    p1: &QuiverPresentation,
    p2: &QuiverPresentation,
    constraint: Option<&ArrowConstraint>,
) -> Result<Option<Isomorphism>> {
    let m1 = PathSpaceModel::new(p1)?;
    let m2 = PathSpaceModel::new(p2)?;
    models_isomorphic(&m1, &m2, constraint, DEFAULT_NODE_BUDGET)
}

pub fn models_isomorphic(
    m1: &PathSpaceModel,
    m2: &PathSpaceModel,
    constraint: Option<&ArrowConstraint>,
    budget: u64,
) -> Result<Option<Isomorphism>> {
    let (q1, q2) = (m1.quiver(), m2.quiver());
    if q1.vertex_count() != q2.vertex_count()
        || q1.arrow_count() != q2.arrow_count()
        || m1.dimension() != m2.dimension()
    {
        return Ok(None);
    }
    let empty = ArrowConstraint::default();
    let c = constraint.unwrap_or(&empty);
    if c.first.len() != c.second.len() {
        return Ok(None);
    }
    let one = Side::new(m1, &c.first);
    let two = Side::new(m2, &c.second);
    let mut a = one.vinv.clone();
    let mut b = two.vinv.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }

    let order = search_order(q1);
    let mut depth_of = vec![0; q1.arrow_count()];
    for (d, x) in order.iter().enumerate() {
        depth_of[x.0] = d;
    }
    let mut check_one = vec![Vec::new(); order.len().max(1)];
    for (i, (_, arrows)) in one.relations.iter().enumerate() {
        if let Some(d) = arrows.iter().map(|x| depth_of[x.0]).max() {
            check_one[d].push(i);
        }
    }
    let mut search = Search {
        one,
        two,
        order,
        check_one,
        fwd_arrow: vec![None; q1.arrow_count()],
        back_arrow: vec![None; q2.arrow_count()],
        fwd_vertex: vec![None; q1.vertex_count()],
        back_vertex: vec![None; q2.vertex_count()],
        nodes: 0,
        budget,
    };
    if !search.run(0)? {
        return Ok(None);
    }
    Ok(Some(Isomorphism {
        vertex_map: search.fwd_vertex.iter().map(|v| v.unwrap()).collect(),
        arrow_map: search.fwd_arrow.iter().map(|a| a.unwrap()).collect(),
    }))
}
