//! Faces of a plane subgraph on the sphere.
//!
//! A face walk keeps its face on the left: arriving at `w` along `u -> w`,
//! the walk leaves along `w -> z` where `z` follows `u` clockwise among the
//! neighbours of `w`. The corner at `w` entered along `u -> w` holds the rays
//! of `w` strictly clockwise between `u` and `z`. Faces are told apart by
//! corners, so repeated boundary vertices need no special handling.

use crate::drawing::{Drawing, Edge, VertexId};
use crate::error::{precondition, Error, Result};
use crate::plane::PlaneSubgraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge {
    pub from: VertexId,
    pub to: VertexId,
}

impl HalfEdge {
    pub fn new(from: VertexId, to: VertexId) -> Self {
        HalfEdge { from, to }
    }

    pub fn reversed(self) -> Self {
        HalfEdge { from: self.to, to: self.from }
    }

    pub fn edge(self) -> Edge {
        Edge::new(self.from, self.to)
    }
}

pub type FaceId = usize;

/// The corner at `at` entered along `from -> at`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Corner {
    pub at: VertexId,
    pub from: VertexId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeLocation {
    /// Crosses this member edge (possibly among others).
    CrossesSubgraph(Edge),
    Member,
    /// Lies inside `face`; `corners[i]` is where endpoint `i` (canonical
    /// order) attaches, or `None` for an endpoint that is not in the subgraph.
    InsideFace { face: FaceId, corners: [Option<Corner>; 2] },
}

#[derive(Clone, Debug)]
pub struct FaceStructure<'d> {
    d: &'d Drawing,
    /// Half-edges out of vertex `i` occupy `offsets[i]..offsets[i + 1]`.
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    /// Rotation position of each target, ascending per vertex.
    keys: Vec<u32>,
    face_of: Vec<FaceId>,
    faces: Vec<Vec<HalfEdge>>,
    vertex_count: usize,
    edge_count: usize,
    components: usize,
}

/// Trace all face walks of `f`.
pub fn trace_faces<'d>(f: &PlaneSubgraph<'d>) -> Result<FaceStructure<'d>> {
    let d = f.drawing();
    let n = d.n();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut targets = Vec::with_capacity(2 * f.edge_count());
    let mut keys = Vec::with_capacity(2 * f.edge_count());
    offsets.push(0);
    for v in d.vertices() {
        for &w in f.neighbors(v) {
            targets.push(w);
            keys.push(d.position(v, w) as u32);
        }
        offsets.push(targets.len());
    }
    let mut fs = FaceStructure {
        d,
        offsets,
        targets,
        keys,
        face_of: Vec::new(),
        faces: Vec::new(),
        vertex_count: f.touched_vertices().count(),
        edge_count: f.edge_count(),
        components: f.component_count(),
    };
    const UNSET: FaceId = FaceId::MAX;
    fs.face_of = vec![UNSET; fs.targets.len()];
    for start in 0..fs.targets.len() {
        if fs.face_of[start] != UNSET {
            continue;
        }
        let face = fs.faces.len();
        let mut walk = Vec::new();
        let mut h = fs.half_edge_at(start);
        loop {
            let id = fs.id(h).expect("half-edge of the subgraph");
            if fs.face_of[id] != UNSET {
                if id == start {
                    break;
                }
                return Err(Error::Inconsistent(format!(
                    "half-edge {}->{} visited twice while tracing faces",
                    h.from, h.to
                )));
            }
            fs.face_of[id] = face;
            walk.push(h);
            h = fs.next(h);
        }
        fs.faces.push(walk);
    }
    Ok(fs)
}

impl<'d> FaceStructure<'d> {
    fn half_edge_at(&self, id: usize) -> HalfEdge {
        let from = self.offsets.partition_point(|&o| o <= id) - 1;
        HalfEdge::new(VertexId::from_index(from), self.targets[id])
    }

    fn out_range(&self, v: VertexId) -> std::ops::Range<usize> {
        self.offsets[v.index()]..self.offsets[v.index() + 1]
    }

    /// Index of `h` among all half-edges, if it belongs to the subgraph.
    pub fn id(&self, h: HalfEdge) -> Option<usize> {
        let r = self.out_range(h.from);
        let key = self.d.position(h.from, h.to) as u32;
        let i = self.keys[r.clone()].binary_search(&key).ok()?;
        Some(r.start + i)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.out_range(v).len()
    }

    /// Neighbour of `at` clockwise after `from`.
    pub fn succ(&self, at: VertexId, from: VertexId) -> VertexId {
        let r = self.out_range(at);
        let i = self.id(HalfEdge::new(at, from)).expect("neighbour") - r.start;
        self.targets[r.start + (i + 1) % r.len()]
    }

    /// Neighbour of `at` clockwise before `from`.
    pub fn pred(&self, at: VertexId, from: VertexId) -> VertexId {
        let r = self.out_range(at);
        let i = self.id(HalfEdge::new(at, from)).expect("neighbour") - r.start;
        self.targets[r.start + (i + r.len() - 1) % r.len()]
    }

    /// The half-edge after `h` on its face walk.
    pub fn next(&self, h: HalfEdge) -> HalfEdge {
        HalfEdge::new(h.to, self.succ(h.to, h.from))
    }

    /// The half-edge before `h` on its face walk.
    pub fn prev(&self, h: HalfEdge) -> HalfEdge {
        HalfEdge::new(self.pred(h.from, h.to), h.from)
    }

    pub fn faces(&self) -> &[Vec<HalfEdge>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// # Panics
    /// If `h` is not a half-edge of the subgraph.
    pub fn face_of(&self, h: HalfEdge) -> FaceId {
        self.face_of[self.id(h).expect("half-edge of the subgraph")]
    }

    pub fn corner_face(&self, c: Corner) -> FaceId {
        self.face_of(HalfEdge::new(c.from, c.at))
    }

    /// Is the ray `c.at -> x` inside corner `c`?
    pub fn corner_contains(&self, c: Corner, x: VertexId) -> bool {
        if x == c.from || x == c.at {
            return false;
        }
        let z = self.succ(c.at, c.from);
        z == c.from || self.d.in_cw_arc(c.at, c.from, z, x)
    }

    /// The corner at `at` holding the ray towards `x`; `None` if `at` is not
    /// in the subgraph or `x` is one of its neighbours.
    pub fn corner_of_ray(&self, at: VertexId, x: VertexId) -> Option<Corner> {
        let r = self.out_range(at);
        if r.is_empty() {
            return None;
        }
        let key = self.d.position(at, x) as u32;
        let keys = &self.keys[r.clone()];
        match keys.binary_search(&key) {
            Ok(_) => None,
            Err(i) => {
                let j = (i + keys.len() - 1) % keys.len();
                Some(Corner { at, from: self.targets[r.start + j] })
            }
        }
    }

    /// All corners whose vertex is `at`, clockwise.
    pub fn corners_at(&self, at: VertexId) -> impl Iterator<Item = Corner> + '_ {
        self.targets[self.out_range(at)].iter().map(move |&from| Corner { at, from })
    }

    /// V - E + F = 2 per component, with V counting touched vertices and F
    /// counting face walks. Equivalent to V - E + F = 1 + C once the faces
    /// shared between components are merged.
    pub fn euler_holds(&self) -> bool {
        self.vertex_count + self.faces.len() == self.edge_count + 2 * self.components
    }

    pub fn component_count(&self) -> usize {
        self.components
    }
}

/// Face of a connected subgraph containing a vertex `v` that is not in it.
pub fn face_containing_vertex(
    f: &PlaneSubgraph<'_>,
    faces: &FaceStructure<'_>,
    v: VertexId,
) -> Result<FaceId> {
    if f.has_vertex(v) {
        return precondition(format!("vertex {v} lies on the subgraph"));
    }
    if !f.is_connected() {
        return precondition("subgraph must be connected");
    }
    let d = f.drawing();
    let w = d.rotation(v).find(|&w| f.has_vertex(w)).expect("connected subgraph has a vertex");
    Ok(match d.first_crossed_edge(v, w, f.edges().iter().copied()) {
        None => faces.corner_face(faces.corner_of_ray(w, v).expect("non-member ray")),
        Some(h) => {
            let (p, q) = (h.u(), h.v());
            if d.in_cw_arc(v, q, p, w) {
                faces.face_of(HalfEdge::new(p, q))
            } else {
                faces.face_of(HalfEdge::new(q, p))
            }
        }
    })
}

/// Classify an edge of the drawing against a plane subgraph.
pub fn locate_edge(
    f: &PlaneSubgraph<'_>,
    faces: &FaceStructure<'_>,
    e: Edge,
) -> Result<EdgeLocation> {
    if let Some(h) = f.crossed_by(e) {
        return Ok(EdgeLocation::CrossesSubgraph(h));
    }
    if f.contains(e) {
        return Ok(EdgeLocation::Member);
    }
    let mut corners = [None; 2];
    let mut found = [0; 2];
    for (i, (a, b)) in [(e.u(), e.v()), (e.v(), e.u())].into_iter().enumerate() {
        if f.has_vertex(a) {
            let c = faces.corner_of_ray(a, b).expect("non-member ray");
            corners[i] = Some(c);
            found[i] = faces.corner_face(c);
        } else {
            found[i] = face_containing_vertex(f, faces, a)?;
        }
    }
    if found[0] != found[1] {
        return Err(Error::Inconsistent(format!(
            "uncrossed edge {e} has its endpoints in faces {} and {}",
            found[0], found[1]
        )));
    }
    Ok(EdgeLocation::InsideFace { face: found[0], corners })
}
