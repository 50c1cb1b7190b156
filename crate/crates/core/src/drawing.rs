//! Rotation systems of simple drawings of complete graphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{clockwise_order, in_general_position, Point};
use crate::k4::{cyclic_bit, k4_table, K4Kind, SignPattern};
use crate::k5::is_realizable_k5;

/// Largest `n` for which [`Drawing::validate`] also checks every 5-subset.
pub const K5_CHECK_MAX_N: usize = 32;

/// A vertex label, 1-based as in the file formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(u32);

impl VertexId {
    /// # Panics
    /// If `label` is zero.
    pub fn new(label: u32) -> Self {
        assert!(label >= 1, "vertex labels are 1-based");
        VertexId(label)
    }

    pub fn from_index(index: usize) -> Self {
        VertexId(index as u32 + 1)
    }

    pub fn label(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An undirected edge stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// # Panics
    /// If `a == b`.
    pub fn new(a: VertexId, b: VertexId) -> Self {
        assert_ne!(a, b, "loops are not edges");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    /// Shorthand over 1-based labels.
    pub fn of(a: u32, b: u32) -> Self {
        Edge::new(VertexId::new(a), VertexId::new(b))
    }

    pub fn u(self) -> VertexId {
        self.u
    }

    pub fn v(self) -> VertexId {
        self.v
    }

    pub fn ends(self) -> [VertexId; 2] {
        [self.u, self.v]
    }

    pub fn contains(self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    pub fn other(self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }

    pub fn shares_vertex(self, f: Edge) -> bool {
        self.contains(f.u) || self.contains(f.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

/// A simple drawing of K_n given by its rotation system.
///
/// Rotations list the other vertices in clockwise order; the inverse table
/// gives constant-time position lookups. Immutable after construction.
#[derive(Clone, Debug)]
pub struct Drawing {
    n: usize,
    rot: Vec<Vec<u32>>,
    pos: Vec<u32>,
    coords: Option<Vec<Point>>,
}

impl PartialEq for Drawing {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rot == other.rot
    }
}

/// A problem found by [`validate_rotations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooFewVertices(usize),
    NotPermutation(VertexId),
    InverseMismatch(VertexId, VertexId),
    NonRealizableK4([VertexId; 4]),
    NonRealizableK5([VertexId; 5]),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewVertices(n) => write!(f, "need at least 3 vertices, got {n}"),
            Violation::NotPermutation(v) => write!(f, "not a permutation at vertex {v}"),
            Violation::InverseMismatch(v, w) => {
                write!(f, "inverse rotation inconsistent at vertex {v} for {w}")
            }
            Violation::NonRealizableK4(q) => {
                write!(f, "non-realizable K4 on {} {} {} {}", q[0], q[1], q[2], q[3])
            }
            Violation::NonRealizableK5(q) => {
                write!(f, "non-realizable K5 on {} {} {} {} {}", q[0], q[1], q[2], q[3], q[4])
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn is_permutation(n: usize, v: usize, rot: &[VertexId]) -> bool {
    if rot.len() != n - 1 {
        return false;
    }
    let mut seen = vec![false; n];
    for w in rot {
        let i = w.label() as usize;
        if i == 0 || i > n || i - 1 == v || seen[i - 1] {
            return false;
        }
        seen[i - 1] = true;
    }
    true
}

/// Full validation of raw rotations: permutation property, then the K4
/// necessary condition on every 4-subset.
pub fn validate_rotations(rotations: &[Vec<VertexId>]) -> ValidationReport {
    let n = rotations.len();
    let mut report = ValidationReport::default();
    if n < 3 {
        report.violations.push(Violation::TooFewVertices(n));
        return report;
    }
    for (v, r) in rotations.iter().enumerate() {
        if !is_permutation(n, v, r) {
            report.violations.push(Violation::NotPermutation(VertexId::from_index(v)));
        }
    }
    if !report.is_ok() {
        return report;
    }
    let d = Drawing::from_rotations(rotations.to_vec()).expect("permutations checked");
    d.validate()
}

impl Drawing {
    /// Build from clockwise rotations; rotation `i` belongs to vertex `i + 1`.
    pub fn from_rotations(rotations: Vec<Vec<VertexId>>) -> Result<Self> {
        let n = rotations.len();
        if n < 3 {
            return Err(Error::InvalidDrawing(format!("need at least 3 vertices, got {n}")));
        }
        for (v, r) in rotations.iter().enumerate() {
            if !is_permutation(n, v, r) {
                return Err(Error::InvalidDrawing(
                    Violation::NotPermutation(VertexId::from_index(v)).to_string(),
                ));
            }
        }
        let rot: Vec<Vec<u32>> = rotations
            .into_iter()
            .map(|r| r.into_iter().map(|w| w.index() as u32).collect())
            .collect();
        Ok(Self::from_raw(rot, None))
    }

    pub(crate) fn from_raw(rot: Vec<Vec<u32>>, coords: Option<Vec<Point>>) -> Self {
        let n = rot.len();
        let mut pos = vec![u32::MAX; n * n];
        for (v, r) in rot.iter().enumerate() {
            for (i, &w) in r.iter().enumerate() {
                pos[v * n + w as usize] = i as u32;
            }
        }
        Drawing { n, rot, pos, coords }
    }

    /// Rectilinear drawing on points in general position.
    pub fn from_points(points: &[Point]) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidDrawing(format!(
                "need at least 3 points, got {}",
                points.len()
            )));
        }
        if !in_general_position(points) {
            return Err(Error::InvalidDrawing(
                "points must be distinct with no three collinear".into(),
            ));
        }
        let rot = (0..points.len())
            .map(|i| clockwise_order(points, i).into_iter().map(|j| j as u32).collect())
            .collect();
        Ok(Self::from_raw(rot, Some(points.to_vec())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId::from_index)
    }

    /// All C(n,2) edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |i| {
            (i + 1..self.n).map(move |j| Edge::new(VertexId::from_index(i), VertexId::from_index(j)))
        })
    }

    pub fn coords(&self) -> Option<&[Point]> {
        self.coords.as_deref()
    }

    /// Clockwise rotation of `v`.
    pub fn rotation(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rot[v.index()].iter().map(|&w| VertexId::from_index(w as usize))
    }

    pub fn rotations(&self) -> Vec<Vec<VertexId>> {
        self.vertices().map(|v| self.rotation(v).collect()).collect()
    }

    /// Vertex at position `i` (taken cyclically) in the rotation of `v`.
    pub fn rotation_at(&self, v: VertexId, i: usize) -> VertexId {
        let r = &self.rot[v.index()];
        VertexId::from_index(r[i % r.len()] as usize)
    }

    /// Position of `w` in the rotation of `v`.
    #[inline]
    pub fn position(&self, v: VertexId, w: VertexId) -> usize {
        self.pos[v.index() * self.n + w.index()] as usize
    }

    /// Clockwise offset of `w` from `from` in the rotation of `v`.
    #[inline]
    pub fn cw_offset(&self, v: VertexId, from: VertexId, w: VertexId) -> usize {
        let m = self.n - 1;
        (self.position(v, w) + m - self.position(v, from)) % m
    }

    /// Is `x` strictly inside the clockwise arc from `from` to `to` at `v`?
    #[inline]
    pub fn in_cw_arc(&self, v: VertexId, from: VertexId, to: VertexId, x: VertexId) -> bool {
        let ox = self.cw_offset(v, from, x);
        ox != 0 && ox < self.cw_offset(v, from, to)
    }

    /// Sign pattern of the sorted quadruple `q`.
    pub fn k4_pattern(&self, q: [VertexId; 4]) -> SignPattern {
        let mut pattern = 0;
        for k in 0..4 {
            let x = q[k];
            let mut others = [q[0]; 3];
            let mut j = 0;
            for (i, &y) in q.iter().enumerate() {
                if i != k {
                    others[j] = y;
                    j += 1;
                }
            }
            let p = others.map(|y| self.position(x, y));
            if cyclic_bit(p[0], p[1], p[2]) {
                pattern |= 1 << k;
            }
        }
        pattern
    }

    /// Crossing test that reports a broken K4 instead of panicking.
    pub fn try_crosses(&self, e: Edge, f: Edge) -> Result<bool> {
        if e.shares_vertex(f) {
            return Ok(false);
        }
        let mut q = [e.u, e.v, f.u, f.v];
        q.sort();
        match k4_table().kind(self.k4_pattern(q)) {
            K4Kind::Crossing(m) => {
                let [(a, b), _] = m.pairs();
                let first = Edge::new(q[a], q[b]);
                Ok(first == e || first == f)
            }
            K4Kind::Planar => Ok(false),
            K4Kind::NonRealizable => Err(Error::Inconsistent(format!(
                "non-realizable K4 on {} {} {} {}",
                q[0], q[1], q[2], q[3]
            ))),
        }
    }

    /// Do `e` and `f` cross? Edges sharing a vertex never do.
    ///
    /// # Panics
    /// If the four endpoints induce a non-realizable K4, i.e. the drawing
    /// fails [`Drawing::validate`].
    #[inline]
    pub fn crosses(&self, e: Edge, f: Edge) -> bool {
        self.try_crosses(e, f).expect("drawing is not a good drawing")
    }

    /// Inverse consistency, the K4 condition on all 4-subsets and, for
    /// `n <= K5_CHECK_MAX_N`, the K5 condition on all 5-subsets.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for v in self.vertices() {
            for (i, w) in self.rotation(v).enumerate() {
                if self.position(v, w) != i {
                    report.violations.push(Violation::InverseMismatch(v, w));
                }
            }
        }
        let table = k4_table();
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let q = [a, b, c, d].map(VertexId::from_index);
                        if table.kind(self.k4_pattern(q)) == K4Kind::NonRealizable {
                            report.violations.push(Violation::NonRealizableK4(q));
                        }
                    }
                }
            }
        }
        if report.is_ok() && n <= K5_CHECK_MAX_N {
            self.check_k5(&mut report);
        }
        report
    }

    fn check_k5(&self, report: &mut ValidationReport) {
        let n = self.n;
        let mut q = [0usize; 5];
        fn go(d: &Drawing, q: &mut [usize; 5], k: usize, from: usize, report: &mut ValidationReport) {
            if k == 5 {
                let ids = q.map(VertexId::from_index);
                if !is_realizable_k5(&d.sub_rotation5(ids)) {
                    report.violations.push(Violation::NonRealizableK5(ids));
                }
                return;
            }
            for x in from..d.n {
                q[k] = x;
                go(d, q, k + 1, x + 1, report);
            }
        }
        if n >= 5 {
            go(self, &mut q, 0, 0, report);
        }
    }

    /// Rotations restricted to `q`, over local indices `0..5`.
    pub fn sub_rotation5(&self, q: [VertexId; 5]) -> [[u8; 4]; 5] {
        let mut out = [[0u8; 4]; 5];
        for (x, &v) in q.iter().enumerate() {
            let mut others: Vec<u8> = (0..5u8).filter(|&y| y as usize != x).collect();
            others.sort_by_key(|&y| self.position(v, q[y as usize]));
            out[x].copy_from_slice(&others);
        }
        out
    }

    /// Sub-drawing induced by `keep` (in the given order): vertex `keep[i]`
    /// becomes vertex `i + 1`.
    pub fn induced(&self, keep: &[VertexId]) -> Drawing {
        let mut new_index = vec![u32::MAX; self.n];
        for (i, v) in keep.iter().enumerate() {
            new_index[v.index()] = i as u32;
        }
        let rot = keep
            .iter()
            .map(|&v| {
                self.rot[v.index()]
                    .iter()
                    .filter_map(|&w| {
                        let j = new_index[w as usize];
                        (j != u32::MAX).then_some(j)
                    })
                    .collect()
            })
            .collect();
        let coords = self
            .coords
            .as_ref()
            .map(|c| keep.iter().map(|v| c[v.index()]).collect());
        Drawing::from_raw(rot, coords)
    }

    /// Same drawing with vertex `v` renamed to `perm[v.index()]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Drawing {
        let mut rot = vec![Vec::new(); self.n];
        for v in 0..self.n {
            rot[perm[v].index()] = self.rot[v]
                .iter()
                .map(|&w| perm[w as usize].index() as u32)
                .collect();
        }
        let coords = self.coords.as_ref().map(|c| {
            let mut out = c.clone();
            for v in 0..self.n {
                out[perm[v].index()] = c[v];
            }
            out
        });
        Drawing::from_raw(rot, coords)
    }

    /// Mirror image: every rotation reversed.
    pub fn mirrored(&self) -> Drawing {
        let rot = self
            .rot
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let coords = self
            .coords
            .as_ref()
            .map(|c| c.iter().map(|p| Point::new(-p.x, p.y)).collect());
        Drawing::from_raw(rot, coords)
    }

    /// Drop the coordinate backing (e.g. after rotation surgery).
    pub fn without_coords(mut self) -> Drawing {
        self.coords = None;
        self
    }

    /// Edges of `S(v)` in clockwise order.
    pub fn star(&self, v: VertexId) -> impl Iterator<Item = Edge> + '_ {
        self.rotation(v).map(move |w| Edge::new(v, w))
    }
}
