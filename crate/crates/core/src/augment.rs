//! Uncrossed rays and maximal augmentation.

use std::collections::VecDeque;

use crate::drawing::{Drawing, Edge, VertexId};
use crate::error::{precondition, Error, Result};
use crate::faces::{trace_faces, Corner, FaceId, FaceStructure, HalfEdge};
use crate::plane::PlaneSubgraph;

/// Edges from `v` to vertices of `f` that cross no member of `f`, by testing
/// every ray against every member. Works for any plane `f`.
///
/// There is deliberately no early exit: every pair is tested, so the cost is
/// the same on every input of a given size.
pub fn uncrossed_rays_brute(f: &PlaneSubgraph<'_>, v: VertexId) -> Vec<Edge> {
    let d = f.drawing();
    let mut out: Vec<Edge> = d
        .rotation(v)
        .filter(|&w| f.has_vertex(w))
        .map(|w| Edge::new(v, w))
        .filter(|&e| f.edges().iter().filter(|&&h| d.crosses(e, h)).count() == 0)
        .collect();
    out.sort();
    out
}

/// Same answer as [`uncrossed_rays_brute`] for a connected `f`, in time
/// linear in `n` plus the size of `f` (up to a logarithmic factor for
/// corner lookups).
///
/// The rays of `v` are swept clockwise against the boundary walk of the
/// face containing `v`, collecting candidates; a counterclockwise sweep
/// over the candidates then discards the false ones.
pub fn uncrossed_rays_fast(f: &PlaneSubgraph<'_>, v: VertexId) -> Result<Vec<Edge>> {
    if !f.is_connected() {
        return precondition("fast uncrossed rays need a connected subgraph");
    }
    let faces = trace_faces(f)?;
    let out = rays_with_faces(f, &faces, v)?;
    if cfg!(debug_assertions) && f.drawing().n() <= 32 {
        let brute = uncrossed_rays_brute(f, v);
        if brute != out {
            return Err(Error::Inconsistent(format!(
                "fast rays at {v} disagree with brute force"
            )));
        }
    }
    Ok(out)
}

/// One step of a boundary sweep: rays crossing `edge` are dropped; a ray
/// arriving at `target` is accepted and the sweep moves on.
#[derive(Clone, Copy, Debug)]
struct Step {
    edge: Edge,
    target: Option<Corner>,
}

fn end(h: HalfEdge) -> Corner {
    Corner { at: h.to, from: h.from }
}

struct Sweep<'a, 'd> {
    f: &'a PlaneSubgraph<'d>,
    faces: &'a FaceStructure<'d>,
    v: VertexId,
    face: FaceId,
}

impl Sweep<'_, '_> {
    fn run<I: IntoIterator<Item = VertexId>>(&self, rays: I, steps: &[Step], out: &mut Vec<VertexId>) {
        let d = self.f.drawing();
        let mut k = 0;
        for w in rays {
            if k == steps.len() {
                break;
            }
            if !self.f.has_vertex(w) {
                continue;
            }
            let Some(arrival) = self.faces.corner_of_ray(w, self.v) else {
                continue;
            };
            if self.faces.corner_face(arrival) != self.face {
                continue;
            }
            let ray = Edge::new(self.v, w);
            loop {
                let step = steps[k];
                if d.crosses(ray, step.edge) {
                    break;
                }
                if step.target == Some(arrival) {
                    out.push(w);
                    k += 1;
                    break;
                }
                if k + 1 == steps.len() {
                    break;
                }
                k += 1;
            }
        }
    }

    /// Steps walking the boundary backwards from `h`, ending at `stop`.
    fn backward(&self, h: HalfEdge, stop: HalfEdge) -> Vec<Step> {
        let mut steps = Vec::new();
        let mut g = h;
        loop {
            steps.push(Step { edge: g.edge(), target: Some(end(self.faces.prev(g))) });
            if g == stop {
                return steps;
            }
            g = self.faces.prev(g);
        }
    }

    /// Steps walking the boundary forwards from `h`, ending at `stop`.
    fn forward(&self, h: HalfEdge, stop: HalfEdge) -> Vec<Step> {
        let mut steps = Vec::new();
        let mut g = h;
        loop {
            steps.push(Step { edge: g.edge(), target: Some(end(g)) });
            if g == stop {
                return steps;
            }
            g = self.faces.next(g);
        }
    }
}

/// Rays of `v` strictly clockwise after `from` and strictly before `to`.
fn cw_between(d: &Drawing, v: VertexId, from: VertexId, to: VertexId) -> Vec<VertexId> {
    let start = d.position(v, from);
    let len = match d.cw_offset(v, from, to) {
        0 => d.n() - 2,
        k => k - 1,
    };
    (1..=len).map(|i| d.rotation_at(v, start + i)).collect()
}

fn rays_with_faces(f: &PlaneSubgraph<'_>, faces: &FaceStructure<'_>, v: VertexId) -> Result<Vec<Edge>> {
    let d = f.drawing();
    let mut out = Vec::new();
    if f.has_vertex(v) {
        out.extend_from_slice(f.neighbors(v));
        for c in faces.corners_at(v) {
            let h_in = HalfEdge::new(c.from, v);
            let sweep = Sweep { f, faces, v, face: faces.face_of(h_in) };
            let next = faces.next(h_in);
            let mut sigma = Vec::new();
            sweep.run(cw_between(d, v, c.from, next.to), &sweep.backward(h_in, next), &mut sigma);
            sweep.run(sigma.into_iter().rev(), &sweep.forward(next, h_in), &mut out);
        }
    } else {
        let w1 = d.rotation(v).find(|&w| f.has_vertex(w)).expect("connected subgraph is nonempty");
        let after_w1 = cw_between(d, v, w1, w1);
        match d.first_crossed_edge(v, w1, f.edges().iter().copied()) {
            None => {
                let c = faces.corner_of_ray(w1, v).expect("v is off the subgraph");
                let h_in = HalfEdge::new(c.from, c.at);
                let sweep = Sweep { f, faces, v, face: faces.face_of(h_in) };
                let next = faces.next(h_in);
                let mut sigma = vec![w1];
                sweep.run(after_w1, &sweep.backward(h_in, next), &mut sigma);
                sweep.run(sigma.into_iter().rev(), &sweep.forward(next, h_in), &mut out);
            }
            Some(e) => {
                let (p, q) = (e.u(), e.v());
                let h = if d.in_cw_arc(v, q, p, w1) { HalfEdge::new(p, q) } else { HalfEdge::new(q, p) };
                let sweep = Sweep { f, faces, v, face: faces.face_of(h) };
                let tail = Step { edge: h.edge(), target: None };
                let mut steps = sweep.backward(h, faces.next(h));
                steps.push(tail);
                let mut sigma = Vec::new();
                sweep.run(after_w1, &steps, &mut sigma);
                let mut steps = sweep.forward(h, faces.prev(h));
                steps.push(tail);
                sweep.run(sigma.into_iter().rev(), &steps, &mut out);
            }
        }
    }
    let mut edges: Vec<Edge> = out.into_iter().map(|w| Edge::new(v, w)).collect();
    edges.sort();
    edges.dedup();
    Ok(edges)
}

/// The two ray ranges around the first crossing of a probe ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayRanges {
    pub v: VertexId,
    pub r: VertexId,
    /// First member edge crossed by `vr`, with `vr, vp, vq` clockwise at `v`.
    pub e: Edge,
    pub p: VertexId,
    pub q: VertexId,
    /// The ray in `(vp, vq)` crossing the `xp` part of `e` nearest `x`, which
    /// then ends the clockwise range instead of `vp`.
    pub l: Option<VertexId>,
    /// Counterpart of `l` for the `xq` part.
    pub l_prime: Option<VertexId>,
    /// Rays clockwise from `vr` (exclusive) to `vl` or `vp`.
    pub cw: Vec<Edge>,
    /// Rays counterclockwise from `vr` (exclusive) to `vl'` or `vq`.
    pub ccw: Vec<Edge>,
}

/// Ranges for the probe ray `vr`, which must cross `f`. `f` may be
/// disconnected.
pub fn fr_ranges(f: &PlaneSubgraph<'_>, v: VertexId, r: VertexId) -> Result<RayRanges> {
    let d = f.drawing();
    if v == r {
        return precondition("probe ray needs two distinct vertices");
    }
    let Some(e) = d.first_crossed_edge(v, r, f.edges().iter().copied()) else {
        return precondition(format!("ray {v} {r} crosses no edge of the subgraph"));
    };
    let (p, q) = if d.in_cw_arc(v, r, e.v(), e.u()) { (e.u(), e.v()) } else { (e.v(), e.u()) };
    let probe = Edge::new(v, r);
    // Rays crossing e between x = e ∩ vr and `end`, paired with the ray of
    // that kind crossing nearest x.
    let nearest_x = |candidates: Vec<VertexId>, end: VertexId| -> Option<VertexId> {
        let far = e.other(end);
        let mut best: Option<VertexId> = None;
        for w in candidates {
            let ray = Edge::new(v, w);
            if w == end || w == far || !d.crosses(ray, e) || !d.f_first(end, far, ray, probe) {
                continue;
            }
            best = match best {
                Some(b) if d.f_first(end, far, Edge::new(v, b), ray) => Some(w),
                None => Some(w),
                keep => keep,
            };
        }
        best
    };
    let l = nearest_x(cw_between(d, v, p, q), p);
    let mut ccw_pq = cw_between(d, v, p, q);
    ccw_pq.reverse();
    let l_prime = nearest_x(ccw_pq, q);
    let cw_end = l.unwrap_or(p);
    let ccw_end = l_prime.unwrap_or(q);
    let cw: Vec<Edge> = cw_between(d, v, r, cw_end)
        .into_iter()
        .chain([cw_end])
        .map(|w| Edge::new(v, w))
        .collect();
    let mut ccw_rays = cw_between(d, v, ccw_end, r);
    ccw_rays.reverse();
    let ccw: Vec<Edge> = ccw_rays.into_iter().chain([ccw_end]).map(|w| Edge::new(v, w)).collect();
    Ok(RayRanges { v, r, e, p, q, l, l_prime, cw, ccw })
}

fn triangle(d: &Drawing) -> Vec<Edge> {
    d.edges().collect()
}

/// A maximal plane subgraph containing `seed`: one pass over the vertices
/// in ascending order, each time adding every ray that crosses nothing.
pub fn greedy_maximal<'d>(d: &'d Drawing, seed: &[Edge]) -> Result<PlaneSubgraph<'d>> {
    if d.n() == 3 {
        return PlaneSubgraph::new(d, triangle(d));
    }
    let mut f = if seed.is_empty() {
        PlaneSubgraph::new(d, [Edge::of(1, 2)])?
    } else {
        PlaneSubgraph::new(d, seed.iter().copied())?
    };
    for v in d.vertices() {
        for e in uncrossed_rays_brute(&f, v) {
            f.insert_unchecked(e);
        }
    }
    Ok(f)
}

/// A maximal plane superset of a connected `f`, using the linear ray
/// computation once per vertex.
pub fn maximal_connected_fast<'d>(f: &PlaneSubgraph<'d>) -> Result<PlaneSubgraph<'d>> {
    let d = f.drawing();
    if !f.is_connected() {
        return precondition("subgraph must be connected and nonempty");
    }
    if d.n() == 3 {
        return PlaneSubgraph::new(d, triangle(d));
    }
    let mut g = f.clone();
    for v in d.vertices() {
        for e in uncrossed_rays_fast(&g, v)? {
            g.insert_unchecked(e);
        }
    }
    Ok(g)
}

/// The star at `v` plus a breadth-first spanning tree of the other vertices,
/// taken from a maximal plane subgraph containing the star: `2n - 3` edges.
pub fn star_plus_tree<'d>(d: &'d Drawing, v: VertexId) -> Result<PlaneSubgraph<'d>> {
    if v.index() >= d.n() {
        return precondition(format!("vertex {v} out of range"));
    }
    let star = PlaneSubgraph::new_unchecked(d, d.star(v))?;
    let full = maximal_connected_fast(&star)?;
    let root = d.vertices().find(|&w| w != v).expect("n >= 3");
    let mut seen = vec![false; d.n()];
    seen[v.index()] = true;
    seen[root.index()] = true;
    let mut edges: Vec<Edge> = d.star(v).collect();
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in full.neighbors(x) {
            if !seen[y.index()] {
                seen[y.index()] = true;
                edges.push(Edge::new(x, y));
                queue.push_back(y);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::Inconsistent(format!(
            "maximal subgraph minus {v} is disconnected"
        )));
    }
    PlaneSubgraph::new_unchecked(d, edges)
}
