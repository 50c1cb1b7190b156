//! Plane (crossing-free) subgraphs of a drawing.

use crate::drawing::{Drawing, Edge, VertexId};
use crate::error::{precondition, Result};

/// True iff no two of `edges` cross in `d`.
pub fn is_plane<'a, I>(d: &Drawing, edges: I) -> bool
where
    I: IntoIterator<Item = &'a Edge>,
{
    let edges: Vec<Edge> = edges.into_iter().copied().collect();
    first_crossing_pair(d, &edges).is_none()
}

fn first_crossing_pair(d: &Drawing, edges: &[Edge]) -> Option<(Edge, Edge)> {
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if d.crosses(e, f) {
                return Some((e, f));
            }
        }
    }
    None
}

/// A set of pairwise non-crossing edges together with, at each vertex, its
/// neighbours in clockwise rotation order.
#[derive(Clone, Debug)]
pub struct PlaneSubgraph<'d> {
    d: &'d Drawing,
    edges: Vec<Edge>,
    adj: Vec<Vec<VertexId>>,
}

impl PartialEq for PlaneSubgraph<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges
    }
}

impl<'d> PlaneSubgraph<'d> {
    /// Checks that the edges lie in `d` and are pairwise non-crossing.
    pub fn new<I: IntoIterator<Item = Edge>>(d: &'d Drawing, edges: I) -> Result<Self> {
        let g = Self::new_unchecked(d, edges)?;
        if let Some((e, f)) = first_crossing_pair(d, &g.edges) {
            return precondition(format!("edges {e} and {f} cross"));
        }
        Ok(g)
    }

    /// Skips the quadratic crossing check; ids are still range-checked.
    pub(crate) fn new_unchecked<I: IntoIterator<Item = Edge>>(
        d: &'d Drawing,
        edges: I,
    ) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort();
        edges.dedup();
        if let Some(e) = edges.iter().find(|e| e.v().index() >= d.n()) {
            return precondition(format!("edge {e} has a vertex outside 1..{}", d.n()));
        }
        let mut adj = vec![Vec::new(); d.n()];
        for e in &edges {
            adj[e.u().index()].push(e.v());
            adj[e.v().index()].push(e.u());
        }
        for (i, list) in adj.iter_mut().enumerate() {
            let v = VertexId::from_index(i);
            list.sort_by_key(|&w| d.position(v, w));
        }
        Ok(PlaneSubgraph { d, edges, adj })
    }

    pub fn empty(d: &'d Drawing) -> Self {
        PlaneSubgraph { d, edges: Vec::new(), adj: vec![Vec::new(); d.n()] }
    }

    pub fn drawing(&self) -> &'d Drawing {
        self.d
    }

    /// Member edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    /// Is `v` an endpoint of some member edge?
    pub fn has_vertex(&self, v: VertexId) -> bool {
        !self.adj[v.index()].is_empty()
    }

    /// Neighbours of `v`, clockwise in the rotation of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    /// Some member edge crossed by `e`, if any.
    pub fn crossed_by(&self, e: Edge) -> Option<Edge> {
        self.edges.iter().copied().find(|&f| self.d.crosses(e, f))
    }

    /// Would `e` keep the subgraph plane (and is it new)?
    pub fn can_add(&self, e: Edge) -> bool {
        !self.contains(e) && self.crossed_by(e).is_none()
    }

    /// Adds `e` without checking crossings.
    pub(crate) fn insert_unchecked(&mut self, e: Edge) {
        let Err(at) = self.edges.binary_search(&e) else {
            return;
        };
        self.edges.insert(at, e);
        for (a, b) in [(e.u(), e.v()), (e.v(), e.u())] {
            let d = self.d;
            let list = &mut self.adj[a.index()];
            let p = d.position(a, b);
            let at = list.partition_point(|&w| d.position(a, w) < p);
            list.insert(at, b);
        }
    }

    /// Adds `e` if it crosses no member; returns whether it was added.
    pub fn try_add(&mut self, e: Edge) -> bool {
        if !self.can_add(e) {
            return false;
        }
        self.insert_unchecked(e);
        true
    }

    /// The first non-member edge (canonical order) crossing no member.
    pub fn addable_edge(&self) -> Option<Edge> {
        self.d.edges().find(|&e| self.can_add(e))
    }

    /// Maximal iff no edge of the drawing can be added. Plain definition
    /// check, cubic in `n`; used as a test oracle.
    pub fn is_maximal(&self) -> bool {
        self.addable_edge().is_none()
    }

    /// Vertices incident to at least one member edge.
    pub fn touched_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.d.vertices().filter(|&v| self.has_vertex(v))
    }

    /// Every vertex of the drawing is an endpoint of some member edge.
    pub fn is_spanning(&self) -> bool {
        self.d.vertices().all(|v| self.has_vertex(v))
    }

    /// Connected components of the touched vertices; isolated vertices of the
    /// drawing are not counted.
    pub fn component_count(&self) -> usize {
        let n = self.d.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in self.touched_vertices() {
            if seen[s.index()] {
                continue;
            }
            count += 1;
            seen[s.index()] = true;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x.index()] {
                    if !seen[y.index()] {
                        seen[y.index()] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// Nonempty and its edges form one connected graph.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }
}
