#![allow(dead_code)]

pub mod curved;

use kn_plane::generators::SegmentInstance;
use kn_plane::geometry::{orient, Point};
use kn_plane::{Drawing, Edge, PlaneSubgraph, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;

/// A random connected plane subgraph grown from a random edge, with at most
/// `max_edges` edges.
pub fn random_connected<'d, R: Rng>(d: &'d Drawing, rng: &mut R, max_edges: usize) -> PlaneSubgraph<'d> {
    let mut edges: Vec<Edge> = d.edges().collect();
    edges.shuffle(rng);
    let mut f = PlaneSubgraph::new(d, [edges[0]]).unwrap();
    loop {
        let before = f.edge_count();
        for &e in &edges {
            if f.edge_count() >= max_edges {
                return f;
            }
            if (f.has_vertex(e.u()) || f.has_vertex(e.v())) && f.can_add(e) {
                f.try_add(e);
            }
        }
        if f.edge_count() == before {
            return f;
        }
    }
}

/// A random plane subgraph with no connectivity requirement.
pub fn random_plane<'d, R: Rng>(d: &'d Drawing, rng: &mut R, max_edges: usize) -> PlaneSubgraph<'d> {
    let mut edges: Vec<Edge> = d.edges().collect();
    edges.shuffle(rng);
    let mut f = PlaneSubgraph::empty(d);
    for e in edges {
        if f.edge_count() >= max_edges {
            break;
        }
        f.try_add(e);
    }
    f
}

/// A random spanning tree, grown by attaching random vertices through
/// uncrossed edges.
pub fn random_spanning_tree<'d, R: Rng>(d: &'d Drawing, rng: &mut R) -> PlaneSubgraph<'d> {
    loop {
        let mut edges: Vec<Edge> = d.edges().collect();
        edges.shuffle(rng);
        let mut f = PlaneSubgraph::new(d, [edges[0]]).unwrap();
        let mut grew = true;
        while grew {
            grew = false;
            for &e in &edges {
                if f.has_vertex(e.u()) != f.has_vertex(e.v()) && f.try_add(e) {
                    grew = true;
                }
            }
        }
        if f.is_spanning() {
            return f;
        }
    }
}

/// Every plane edge set of `d` whose edges form a connected graph.
pub fn all_connected_plane(d: &Drawing) -> Vec<Vec<Edge>> {
    let edges: Vec<Edge> = d.edges().collect();
    let m = edges.len();
    let mut cross = vec![0u64; m];
    for i in 0..m {
        for j in 0..m {
            if d.crosses(edges[i], edges[j]) {
                cross[i] |= 1 << j;
            }
        }
    }
    let mut out = Vec::new();
    for mask in 1u64..(1 << m) {
        if (0..m).any(|i| mask >> i & 1 == 1 && cross[i] & mask != 0) {
            continue;
        }
        let set: Vec<Edge> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        if connected(&set) {
            out.push(set);
        }
    }
    out
}

fn connected(edges: &[Edge]) -> bool {
    let mut reached: Vec<VertexId> = vec![edges[0].u()];
    let mut changed = true;
    while changed {
        changed = false;
        for e in edges {
            let (a, b) = (reached.contains(&e.u()), reached.contains(&e.v()));
            if a != b {
                reached.push(if a { e.v() } else { e.u() });
                changed = true;
            }
        }
    }
    edges.iter().all(|e| reached.contains(&e.u()))
}

/// A random plane cycle of length `k`, grown as a path whose new edge
/// crosses none of the path so far, then closed. `None` after `tries`
/// failed attempts.
pub fn random_plane_cycle<R: Rng>(d: &Drawing, rng: &mut R, k: usize, tries: usize) -> Option<Vec<VertexId>> {
    'attempt: for _ in 0..tries {
        let mut order: Vec<VertexId> = d.vertices().collect();
        order.shuffle(rng);
        let mut path = vec![order[0]];
        let mut edges: Vec<Edge> = Vec::new();
        for &x in &order[1..] {
            if path.len() == k {
                break;
            }
            let e = Edge::new(*path.last().unwrap(), x);
            if edges.iter().all(|&h| !d.crosses(e, h)) {
                edges.push(e);
                path.push(x);
            }
        }
        if path.len() < k {
            continue 'attempt;
        }
        let close = Edge::new(path[k - 1], path[0]);
        if edges.iter().all(|&h| !d.crosses(close, h)) {
            return Some(path);
        }
    }
    None
}

/// Every plane edge set of `d` that is maximal.
pub fn all_maximal_plane(d: &Drawing) -> Vec<Vec<Edge>> {
    let edges: Vec<Edge> = d.edges().collect();
    let m = edges.len();
    assert!(m <= 21, "too many edges to enumerate");
    let cross: Vec<u32> = (0..m)
        .map(|i| (0..m).filter(|&j| d.crosses(edges[i], edges[j])).fold(0, |c, j| c | 1 << j))
        .collect();
    (1u32..1 << m)
        .filter(|&mask| (0..m).all(|i| mask >> i & 1 == 0 || cross[i] & mask == 0))
        .filter(|&mask| (0..m).all(|i| mask >> i & 1 == 1 || cross[i] & mask != 0))
        .map(|mask| (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect())
        .collect()
}

/// Points on a circle, each nudged by a small random amount. They stay in
/// angular order around the origin, so the cycle through them is plane.
pub fn perturbed_convex<R: Rng>(rng: &mut R, n: usize) -> Vec<Point> {
    (0..n)
        .map(|k| {
            let a = std::f64::consts::TAU * (k as f64 + rng.gen_range(-0.3..0.3)) / n as f64;
            let r = 1.0 + rng.gen_range(-0.05..0.05);
            Point::new(r * a.cos(), -r * a.sin())
        })
        .collect()
}

pub fn seg(a: (f64, f64), b: (f64, f64)) -> (Point, Point) {
    (Point::new(a.0, a.1), Point::new(b.0, b.1))
}

pub fn instance(segments: Vec<(Point, Point)>) -> SegmentInstance {
    let mut inst = SegmentInstance { segments, k: 0 };
    inst.k = inst.max_disjoint();
    inst
}

/// One instance per crossing pattern with at most three segments. The
/// three-segment ones have all their gadget points inside a triangle
/// spanned by three endpoints.
pub fn instances() -> Vec<SegmentInstance> {
    let (a, b, c) = ((0.0, 0.0), (10.0, 0.0), (5.0, 9.0));
    vec![
        instance(vec![seg((0.1, 0.2), (0.9, 0.7))]),
        instance(vec![
            seg((0.4993906021118164, 0.5888833999633789), (0.15294265747070313, 0.7001466751098633)),
            seg((0.7406978607177734, 0.7142162322998047), (0.9171628952026367, 0.43336963653564453)),
        ]),
        instance(vec![seg((0.0, 0.0), (1.0, 1.0)), seg((0.0, 1.0), (1.0, 0.1))]),
        instance(vec![seg(a, (3.0, 1.5)), seg(b, (7.0, 1.2)), seg(c, (5.2, 6.0))]),
        instance(vec![seg(a, (6.0, 2.0)), seg(b, (4.0, 2.5)), seg(c, (5.2, 6.0))]),
        instance(vec![seg(a, (6.0, 2.0)), seg(b, (4.0, 2.5)), seg(c, (4.5, 2.0))]),
        instance(vec![seg(a, (6.0, 2.0)), seg(b, (4.0, 2.5)), seg(c, (5.0, 1.0))]),
    ]
}

pub fn crossing_count(inst: &SegmentInstance) -> usize {
    let s = inst.segments.len();
    (0..s).flat_map(|i| (i + 1..s).map(move |j| (i, j))).filter(|&(i, j)| inst.crossing(i, j)).count()
}

/// Number of points on the convex hull.
pub fn hull_size(p: &[Point]) -> usize {
    use std::cmp::Ordering::Greater;
    (0..p.len())
        .filter(|&i| {
            (0..p.len()).any(|j| j != i && (0..p.len()).all(|k| k == i || k == j || orient(p[i], p[j], p[k]) == Greater))
        })
        .count()
}
