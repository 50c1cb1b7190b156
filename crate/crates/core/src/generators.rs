use std::f64::consts::PI;

use crate::augment::uncrossed_rays_brute;
use crate::drawing::{Drawing, Edge, VertexId};
use crate::plane::PlaneSubgraph;
use crate::error::{precondition, Error, Result};
use crate::geometry::{clockwise_order, collinear, in_general_position, segments_cross, Point};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `n` points on the unit circle, clockwise starting at the top.
pub fn circle_points(n: usize) -> Vec<Point> {
    (0..n)
        .map(|k| {
            let a = PI / 2.0 - 2.0 * PI * k as f64 / n as f64;
            Point::new(a.cos(), a.sin())
        })
        .collect()
}

pub fn gen_convex(n: usize) -> Result<Drawing> {
    if n < 3 {
        return precondition(format!("convex drawing needs n >= 3, got {n}"));
    }
    Drawing::from_points(&circle_points(n))
}

/// `n` random points on a fine grid in the unit square, redrawn until no
/// three are collinear. Grid coordinates are exact in `f64`.
pub fn random_points(n: usize, seed: u64) -> Vec<Point> {
    const GRID: u32 = 1 << 20;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = Point::new(
            rng.gen_range(0..GRID) as f64 / GRID as f64,
            rng.gen_range(0..GRID) as f64 / GRID as f64,
        );
        let clash = pts.iter().enumerate().any(|(i, &a)| {
            a == p || pts[i + 1..].iter().any(|&b| collinear(a, b, p))
        });
        if !clash {
            pts.push(p);
        }
    }
    pts
}

/// Rectilinear drawing on [`random_points`]; deterministic per seed.
pub fn gen_random(n: usize, seed: u64) -> Result<Drawing> {
    if n < 3 {
        return precondition(format!("random drawing needs n >= 3, got {n}"));
    }
    Drawing::from_points(&random_points(n, seed))
}

/// A random plane spanning tree: vertices join in random order, each through
/// a random uncrossed edge to the tree built so far. Such an edge always
/// exists in a good drawing.
pub fn random_plane_tree(d: &Drawing, seed: u64) -> Result<PlaneSubgraph<'_>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<VertexId> = d.vertices().collect();
    order.shuffle(&mut rng);
    let mut f = PlaneSubgraph::empty(d);
    f.try_add(Edge::new(order[0], order[1]));
    for &x in &order[2..] {
        let rays = uncrossed_rays_brute(&f, x);
        let Some(&e) = rays.choose(&mut rng) else {
            return Err(Error::Inconsistent(format!("no uncrossed edge from {x} to the tree")));
        };
        f.try_add(e);
    }
    Ok(f)
}

/// Rectilinear drawing on `points`: clockwise angular orders.
pub fn rotation_from_points(points: &[Point]) -> Result<Drawing> {
    Drawing::from_points(points)
}

/// Rotate each cyclic list to start at the first vertex after its owner in
/// cyclic id order, the convention used for coordinate-derived rotations.
fn normalized(mut rot: Vec<Vec<u32>>) -> Drawing {
    let n = rot.len();
    for (v, r) in rot.iter_mut().enumerate() {
        let start = (0..r.len())
            .min_by_key(|&i| (r[i] as usize + n - v) % n)
            .unwrap_or(0);
        r.rotate_left(start);
    }
    Drawing::from_raw(rot, None)
}

/// A drawing whose designated maximal plane subgraph has only
/// `ceil(3n/2)` edges.
#[derive(Clone, Debug)]
pub struct TightDrawing {
    pub drawing: Drawing,
    pub designated: Vec<Edge>,
    /// Name of each vertex (`u0`, `u0'`, `u1`, ..., `v1`), by index.
    pub names: Vec<String>,
}

/// Points `u0, (u0'), u1..uk, v(k+1), vk..v1` clockwise on a circle. Edges
/// are chords inside the circle, except the quadrilateral diagonals
/// `ui v(i+1)`, `vi u(i+1)` and the edge `u0 v(k+1)`, which run outside it.
/// Chords on the same side cross iff their endpoints interleave; chords on
/// opposite sides never cross.
pub fn gen_tight(n: usize) -> Result<TightDrawing> {
    if n < 8 {
        return precondition(format!("tight family needs n >= 8, got {n}"));
    }
    let odd = n % 2 == 1;
    let k = (n - 2 - usize::from(odd)) / 2;
    let mut names = vec!["u0".to_string()];
    if odd {
        names.push("u0'".to_string());
    }
    names.extend((1..=k).map(|i| format!("u{i}")));
    names.extend((1..=k + 1).rev().map(|i| format!("v{i}")));
    let idx = |name: String| names.iter().position(|x| *x == name).expect("named vertex");
    let u = |i: usize| idx(format!("u{i}"));
    let v = |i: usize| idx(format!("v{i}"));

    let mut outside = vec![false; n * n];
    let mut mark = |a: usize, b: usize| {
        outside[a * n + b] = true;
        outside[b * n + a] = true;
    };
    for i in 1..k {
        mark(u(i), v(i + 1));
        mark(v(i), u(i + 1));
    }
    mark(u(0), v(k + 1));

    let rot = (0..n)
        .map(|p| {
            let inner = (1..n).map(|t| (p + t) % n).filter(|&q| !outside[p * n + q]);
            let outer = (2..n - 1).map(|t| (p + n - t) % n).filter(|&q| outside[p * n + q]);
            inner.chain(outer).map(|q| q as u32).collect()
        })
        .collect();
    let drawing = normalized(rot);

    let e = |a: usize, b: usize| Edge::new(VertexId::from_index(a), VertexId::from_index(b));
    let mut designated: Vec<Edge> = (0..n).map(|p| e(p, (p + 1) % n)).collect();
    designated.extend((1..=k).map(|i| e(u(i), v(i))));
    designated.push(e(u(0), v(k + 1)));
    if odd {
        designated.push(e(u(0), u(1)));
    }
    designated.sort();
    Ok(TightDrawing { drawing, designated, names })
}

/// Segments, pairwise disjoint or properly crossing, and a target number of
/// pairwise disjoint ones.
#[derive(Clone, Debug, PartialEq)]
pub struct SegmentInstance {
    /// `(v_i, t_i)` endpoint pairs.
    pub segments: Vec<(Point, Point)>,
    pub k: usize,
}

impl SegmentInstance {
    pub fn endpoints(&self) -> Vec<Point> {
        self.segments.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    pub fn check(&self) -> Result<()> {
        if self.segments.is_empty() {
            return precondition("segment instance is empty");
        }
        if !in_general_position(&self.endpoints()) {
            return precondition("segment endpoints must be distinct with no three collinear");
        }
        Ok(())
    }

    pub fn crossing(&self, i: usize, j: usize) -> bool {
        let (a, b) = self.segments[i];
        let (c, d) = self.segments[j];
        segments_cross(a, b, c, d)
    }

    /// Largest number of pairwise disjoint segments, over all subsets.
    pub fn max_disjoint(&self) -> usize {
        let s = self.segments.len();
        (0u32..1 << s)
            .filter(|&m| {
                (0..s).all(|i| {
                    m >> i & 1 == 0 || (i + 1..s).all(|j| m >> j & 1 == 0 || !self.crossing(i, j))
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

/// `s` random segments on grid points in general position, with `k` set
/// to the true maximum number of pairwise disjoint ones.
pub fn random_segments(s: usize, seed: u64) -> Result<SegmentInstance> {
    if s == 0 || s > MAX_SEGMENTS {
        return precondition(format!("segment count must be in 1..={MAX_SEGMENTS}, got {s}"));
    }
    let p = random_points(2 * s, seed);
    let mut inst = SegmentInstance { segments: p.chunks(2).map(|c| (c[0], c[1])).collect(), k: 0 };
    inst.k = inst.max_disjoint();
    Ok(inst)
}

/// Limit for the subset enumeration in [`SegmentInstance::max_disjoint`].
pub const MAX_SEGMENTS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    V(usize),
    U(usize),
    W(usize),
    T(usize),
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    /// Rotation-only drawing on `4s` vertices.
    pub drawing: Drawing,
    /// Role of each vertex, by index; segment `i` owns vertices `4i+1..=4i+4`
    /// as `v, u, w, t`.
    pub roles: Vec<Role>,
    /// Positions used before the rerouting.
    pub points: Vec<Point>,
    pub k_prime: usize,
}

impl ReductionOutput {
    pub fn vertex(&self, role: Role) -> VertexId {
        VertexId::from_index(self.roles.iter().position(|&r| r == role).expect("role"))
    }

    /// The edges `u_i v_i` and `w_i v_i`.
    pub fn guard_edges(&self) -> Vec<Edge> {
        let s = self.roles.len() / 4;
        (0..s)
            .flat_map(|i| {
                let v = self.vertex(Role::V(i));
                [Edge::new(v, self.vertex(Role::U(i))), Edge::new(v, self.vertex(Role::W(i)))]
            })
            .collect()
    }
}

fn angle(from: Point, to: Point) -> f64 {
    (to.y - from.y).atan2(to.x - from.x)
}

fn line_distance(p: Point, a: Point, b: Point) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    ((p.x - a.x) * dy - (p.y - a.y) * dx).abs() / dx.hypot(dy)
}

/// Gadget points: `u_i`, `w_i` flank the segment `v_i t_i` inside a small
/// disc around `v_i`, so that clockwise at `v_i` they read `u_i, t_i, w_i`.
fn gadget_points(inst: &SegmentInstance) -> Result<Vec<Point>> {
    let s = inst.segments.len();
    let ends = inst.endpoints();
    let mut scale = 1.0;
    for _ in 0..40 {
        let mut pts = Vec::with_capacity(4 * s);
        for (i, &(v, t)) in inst.segments.iter().enumerate() {
            let others: Vec<Point> =
                ends.iter().enumerate().filter(|&(j, _)| j != 2 * i).map(|(_, &p)| p).collect();
            let mut r = f64::INFINITY;
            for a in 0..others.len() {
                for b in a + 1..others.len() {
                    r = r.min(line_distance(v, others[a], others[b]));
                }
            }
            if !r.is_finite() {
                r = v.x.hypot(v.y).max(1.0);
            }
            r /= 2.0;
            let rho = r / 2.0 * scale;
            let theta = angle(v, t);
            let gap = others
                .iter()
                .filter(|&&p| p != t)
                .map(|&p| {
                    let d = (angle(v, p) - theta).rem_euclid(std::f64::consts::TAU);
                    d.min(std::f64::consts::TAU - d)
                })
                .fold(std::f64::consts::PI, f64::min);
            let eps = (1.0 / (8.0 * s as f64)).min(gap / 2.0) * scale;
            let at = |a: f64| Point::new(v.x + rho * a.cos(), v.y + rho * a.sin());
            pts.extend([v, at(theta + eps), at(theta - eps), t]);
        }
        if in_general_position(&pts) && wedges_ok(&pts, s) && detours_stable(&pts, s) {
            return Ok(pts);
        }
        scale *= 0.5;
    }
    Err(Error::Inconsistent("could not place gadget points in general position".into()))
}

/// Clockwise at each `v_i`: `u_i`, `t_i`, `w_i` consecutive.
fn wedges_ok(pts: &[Point], s: usize) -> bool {
    (0..s).all(|i| {
        let order = clockwise_order(pts, 4 * i);
        let at = |x: usize| order.iter().position(|&j| j == x).expect("present");
        let m = order.len();
        let (pu, pt, pw) = (at(4 * i + 1), at(4 * i + 3), at(4 * i + 2));
        (pu + 1) % m == pt && (pt + 1) % m == pw
    })
}

/// Whether an edge from `u_i` or `w_i` needs a detour must not change when
/// its far end `u_j` or `w_j` is replaced by `v_j`: after its own detour that
/// end runs along a line through `v_j`.
fn detours_stable(pts: &[Point], s: usize) -> bool {
    (0..s).all(|i| {
        let (v, u, w) = (pts[4 * i], pts[4 * i + 1], pts[4 * i + 2]);
        (0..s).filter(|&j| j != i).all(|j| {
            let c = pts[4 * j];
            [pts[4 * j + 1], pts[4 * j + 2]].into_iter().all(|x| {
                segments_cross(u, x, v, w) == segments_cross(u, c, v, w)
                    && segments_cross(w, x, v, u) == segments_cross(w, c, v, u)
            })
        })
    })
}

/// The reduction drawing: the rectilinear drawing on the gadget points,
/// with every edge `u_i p` crossing `v_i w_i` rerouted along `u_i v_i`,
/// counterclockwise around `v_i` and out along `v_i p`, and symmetrically
/// every `w_i q` crossing `u_i v_i` rerouted clockwise around `v_i`. The edge
/// `u_i w_i` is rerouted like the first kind. Afterwards no edge crosses
/// `u_i v_i` or `w_i v_i`.
pub fn gen_seg_reduction(inst: &SegmentInstance) -> Result<ReductionOutput> {
    inst.check()?;
    let s = inst.segments.len();
    let pts = gadget_points(inst)?;
    let base = Drawing::from_points(&pts)?;
    let n = 4 * s;
    let id = VertexId::from_index;
    let mut rot: Vec<Vec<u32>> =
        base.rotations().into_iter().map(|r| r.into_iter().map(|w| w.index() as u32).collect()).collect();

    // Which ends take a detour: `u_i p` crossing `v_i w_i`, plus `u_i w_i`,
    // and `w_i q` crossing `u_i v_i`.
    let mut u_detour = vec![false; n * n];
    let mut w_detour = vec![false; n * n];
    for i in 0..s {
        let (v, u, w) = (4 * i, 4 * i + 1, 4 * i + 2);
        for p in (0..n).filter(|&p| p != u && p != v && p != w) {
            u_detour[u * n + p] = base.crosses(Edge::new(id(u), id(p)), Edge::new(id(v), id(w)));
            w_detour[w * n + p] = base.crosses(Edge::new(id(w), id(p)), Edge::new(id(v), id(u)));
        }
        u_detour[u * n + w] = true;
    }
    // A far end with its own detour really ends in a small loop around its
    // `v_j`: just counterclockwise of `v_j` (seen from here) after a `u`
    // detour, just clockwise after a `w` detour.
    let anchor = |src: usize, p: usize| -> (usize, i64) {
        if u_detour[p * n + src] {
            (p - 1, 1)
        } else if w_detour[p * n + src] {
            (p - 2, -1)
        } else {
            (p, 0)
        }
    };

    // (source, pivot, tracks innermost first, counterclockwise?)
    let mut sources: Vec<(usize, usize, Vec<usize>, bool)> = Vec::new();
    for i in 0..s {
        let (v, u, w) = (4 * i, 4 * i + 1, 4 * i + 2);
        let ccw_key = |p: usize| {
            let (a, side) = anchor(u, p);
            3 * (n - 1 - base.cw_offset(id(v), id(u), id(a))) as i64 + side
        };
        let mut u_tracks: Vec<usize> = (0..n).filter(|&p| u_detour[u * n + p]).collect();
        u_tracks.sort_by_key(|&p| std::cmp::Reverse(ccw_key(p)));
        let cw_key = |q: usize| {
            let (a, side) = anchor(w, q);
            3 * base.cw_offset(id(v), id(w), id(a)) as i64 - side
        };
        let mut w_tracks: Vec<usize> = (0..n).filter(|&q| w_detour[w * n + q]).collect();
        w_tracks.sort_by_key(|&q| std::cmp::Reverse(cw_key(q)));
        sources.push((u, v, u_tracks, true));
        sources.push((w, v, w_tracks, false));
    }
    let is_source_end = |a: usize, b: usize| u_detour[a * n + b] || w_detour[a * n + b];

    let place = |r: &mut Vec<u32>, moved: &[usize], pivot: usize, after: bool| {
        r.retain(|x| !moved.contains(&(*x as usize)));
        let at = r.iter().position(|&x| x as usize == pivot).expect("pivot present");
        let at = if after { at + 1 } else { at };
        for (j, &m) in moved.iter().enumerate() {
            r.insert(at + j, m as u32);
        }
    };
    // Far ends: the track arrives along v p, just before v (counterclockwise
    // sweep) or just after v (clockwise sweep).
    for (src, v, tracks, ccw) in &sources {
        for &p in tracks {
            if is_source_end(p, *src) {
                continue;
            }
            place(&mut rot[p], &[*src], *v, !ccw);
        }
    }
    // Source ends: tracks hug the edge to v, innermost nearest it. For `w_i`
    // the rerouted `u_i w_i` arrives innermost of all.
    for (src, v, tracks, ccw) in &sources {
        if *ccw {
            place(&mut rot[*src], tracks, *v, true);
        } else {
            let u = src - 1;
            let mut order: Vec<usize> = tracks.iter().rev().copied().collect();
            order.push(u);
            place(&mut rot[*src], &order, *v, false);
        }
    }

    let drawing = normalized(rot);
    let report = drawing.validate();
    if !report.is_ok() {
        return Err(Error::Inconsistent(format!(
            "rerouted drawing fails validation: {}",
            report.violations[0]
        )));
    }
    let roles = (0..s).flat_map(|i| [Role::V(i), Role::U(i), Role::W(i), Role::T(i)]).collect();
    Ok(ReductionOutput { drawing, roles, points: pts, k_prime: 11 * s - 6 + inst.k })
}
