//! Structural properties every maximal plane subgraph has, as checkers that
//! return witnesses, plus the two statements about diagonals of plane cycles.

use std::fmt;

use crate::connectivity::{
    adjacent_degree_two, essentially_3ec_violation, is_two_connected, separation_pair_violation,
};
use crate::drawing::{Drawing, Edge, VertexId};
use crate::error::{precondition, Result};
use crate::faces::{locate_edge, trace_faces, EdgeLocation};
use crate::optimize::{exact_max, MAX_EXACT_N};
use crate::plane::PlaneSubgraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureViolation {
    NotMaximal(Edge),
    NotSpanning(VertexId),
    NotTwoConnected,
    NotEssentially3ec(Edge, Edge),
    AdjacentDegreeTwo(Edge),
    /// Deleting the degree-2 vertex leaves a subgraph that is not maximal in
    /// the smaller drawing; the edge could be added there.
    DegreeTwoDeletion(VertexId, Edge),
    SeparationPair(VertexId, VertexId),
    TooFewEdges { edges: usize, bound: usize },
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use StructureViolation::*;
        match self {
            NotMaximal(e) => write!(f, "not maximal: {e} can be added"),
            NotSpanning(v) => write!(f, "not spanning: vertex {v} is isolated"),
            NotTwoConnected => write!(f, "not 2-connected"),
            NotEssentially3ec(a, b) => write!(f, "removing {a} and {b} disconnects it"),
            AdjacentDegreeTwo(e) => write!(f, "both ends of {e} have degree 2"),
            DegreeTwoDeletion(v, e) => {
                write!(f, "without degree-2 vertex {v} the edge {e} can be added")
            }
            SeparationPair(a, b) => {
                write!(f, "separation pair {a} {b} has no 2-connected side")
            }
            TooFewEdges { edges, bound } => write!(f, "{edges} edges, below {bound}"),
        }
    }
}

/// `min(ceil(3n/2), 2n - 3)`: no maximal plane subgraph of a drawing of
/// `K_n` has fewer edges, and the bound is attained.
pub fn edge_lower_bound(n: usize) -> usize {
    n.div_ceil(2).saturating_add(n).min((2 * n).saturating_sub(3))
}

/// A degree-2 vertex whose removal breaks maximality, with the edge that
/// becomes addable (in the original labels).
pub fn degree_two_deletion_violation(f: &PlaneSubgraph<'_>) -> Option<(VertexId, Edge)> {
    let d = f.drawing();
    if d.n() <= 3 {
        return None;
    }
    for v in d.vertices().filter(|&v| f.degree(v) == 2) {
        let keep: Vec<VertexId> = d.vertices().filter(|&w| w != v).collect();
        let local = |w: VertexId| VertexId::from_index(w.index() - usize::from(w > v));
        let sub = d.induced(&keep);
        let edges = f
            .edges()
            .iter()
            .filter(|e| !e.contains(v))
            .map(|e| Edge::new(local(e.u()), local(e.v())));
        let g = PlaneSubgraph::new_unchecked(&sub, edges).expect("ids in range");
        if let Some(e) = g.addable_edge() {
            return Some((v, Edge::new(keep[e.u().index()], keep[e.v().index()])));
        }
    }
    None
}

/// Every violated property of a maximal plane subgraph. Empty means `f` is
/// maximal and has all of them.
pub fn structure_violations(f: &PlaneSubgraph<'_>) -> Vec<StructureViolation> {
    use StructureViolation::*;
    let d = f.drawing();
    let mut out = Vec::new();
    if let Some(e) = f.addable_edge() {
        out.push(NotMaximal(e));
    }
    if let Some(v) = d.vertices().find(|&v| !f.has_vertex(v)) {
        out.push(NotSpanning(v));
    }
    if !is_two_connected(f) {
        out.push(NotTwoConnected);
    }
    if let Some((a, b)) = essentially_3ec_violation(f) {
        out.push(NotEssentially3ec(a, b));
    }
    // in a triangle every vertex has degree 2
    if let Some(e) = adjacent_degree_two(f).filter(|_| d.n() > 3) {
        out.push(AdjacentDegreeTwo(e));
    }
    if let Some((v, e)) = degree_two_deletion_violation(f) {
        out.push(DegreeTwoDeletion(v, e));
    }
    if let Some((a, b)) = separation_pair_violation(f) {
        out.push(SeparationPair(a, b));
    }
    let bound = edge_lower_bound(d.n());
    if f.edge_count() < bound {
        out.push(TooFewEdges { edges: f.edge_count(), bound });
    }
    out
}

fn cycle_edges(cycle: &[VertexId]) -> Vec<Edge> {
    (0..cycle.len()).map(|i| Edge::new(cycle[i], cycle[(i + 1) % cycle.len()])).collect()
}

fn check_cycle<'d>(d: &'d Drawing, cycle: &[VertexId]) -> Result<PlaneSubgraph<'d>> {
    let k = cycle.len();
    if k < 3 {
        return precondition(format!("a cycle needs 3 vertices, got {k}"));
    }
    let mut seen = vec![false; d.n()];
    for v in cycle {
        if v.index() >= d.n() || std::mem::replace(&mut seen[v.index()], true) {
            return precondition(format!("bad or repeated cycle vertex {v}"));
        }
    }
    PlaneSubgraph::new(d, cycle_edges(cycle))
}

/// Largest number of pairwise non-crossing diagonals that can be added to
/// the plane cycle, computed exactly on the sub-drawing its vertices induce.
pub fn max_compatible_diagonals(d: &Drawing, cycle: &[VertexId]) -> Result<usize> {
    check_cycle(d, cycle)?;
    let k = cycle.len();
    if k > MAX_EXACT_N {
        return precondition(format!("cycle longer than {MAX_EXACT_N}"));
    }
    let sub = d.induced(cycle);
    let ring: Vec<VertexId> = (0..k).map(VertexId::from_index).collect();
    Ok(exact_max(&sub, &cycle_edges(&ring), k)?.edge_count() - k)
}

/// How the diagonals of a plane cycle sit relative to its two faces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagonalCensus {
    /// Diagonals entirely inside each face, indexed by face id.
    pub inside: [Vec<Edge>; 2],
    /// Diagonals crossing the cycle.
    pub crossing: Vec<Edge>,
}

impl DiagonalCensus {
    /// If one face has no diagonal, every diagonal must lie in the other,
    /// so none crosses the cycle. Returns a crossing diagonal that breaks
    /// this.
    pub fn empty_face_violation(&self) -> Option<Edge> {
        let some_face_empty = self.inside.iter().any(Vec::is_empty);
        if some_face_empty {
            self.crossing.first().copied()
        } else {
            None
        }
    }
}

pub fn diagonal_census(d: &Drawing, cycle: &[VertexId]) -> Result<DiagonalCensus> {
    let c = check_cycle(d, cycle)?;
    let faces = trace_faces(&c)?;
    let k = cycle.len();
    let mut out = DiagonalCensus::default();
    for i in 0..k {
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            let e = Edge::new(cycle[i], cycle[j]);
            match locate_edge(&c, &faces, e)? {
                EdgeLocation::CrossesSubgraph(_) => out.crossing.push(e),
                EdgeLocation::InsideFace { face, .. } => out.inside[face].push(e),
                EdgeLocation::Member => unreachable!("diagonals are not cycle edges"),
            }
        }
    }
    Ok(out)
}
