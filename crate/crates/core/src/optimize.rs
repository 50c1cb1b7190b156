//! Maximum plane subgraphs: the per-face triangulation DP for connected
//! spanning inputs and an exact branch-and-bound solver for small drawings.

use std::collections::HashMap;

use crate::augment::greedy_maximal;
use crate::drawing::{Drawing, Edge};
use crate::error::{precondition, Error, Result};
use crate::faces::{locate_edge, trace_faces, Corner, EdgeLocation, FaceId};
use crate::plane::PlaneSubgraph;

/// Crossing graph on all edges of a drawing: plane subgraphs are exactly
/// its independent sets.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    pub nodes: Vec<Edge>,
    pub adj: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Each crossing pair once, as node indices `i < j`.
    pub fn conflicts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, a)| a.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn conflict_count(&self) -> usize {
        self.conflicts().count()
    }

    pub fn index_of(&self, e: Edge) -> Option<usize> {
        self.nodes.binary_search(&e).ok()
    }
}

pub fn build_conflict_graph(d: &Drawing) -> ConflictGraph {
    let nodes: Vec<Edge> = d.edges().collect();
    let mut adj = vec![Vec::new(); nodes.len()];
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if d.crosses(nodes[i], nodes[j]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    ConflictGraph { nodes, adj }
}

pub const DEFAULT_LIMIT_N: usize = 12;
/// Largest `n` whose edge set fits the 128-bit node masks.
pub const MAX_EXACT_N: usize = 16;

type Mask = u128;

fn bit(i: usize) -> Mask {
    1 << i
}

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

struct Search {
    nbr: Vec<Mask>,
    /// Maximum possible size of any solution (Euler bound).
    cap: usize,
    best: Mask,
    best_size: usize,
}

impl Search {
    /// Greedy clique cover of `cand`: an upper bound on its independence number.
    fn clique_cover(&self, mut cand: Mask) -> usize {
        let mut cliques = 0;
        while cand != 0 {
            let mut common = cand;
            let mut i = cand.trailing_zeros() as usize;
            loop {
                cand &= !bit(i);
                common &= self.nbr[i];
                if common & cand == 0 {
                    break;
                }
                i = (common & cand).trailing_zeros() as usize;
            }
            cliques += 1;
        }
        cliques
    }

    fn go(&mut self, mut cand: Mask, mut chosen: Mask) {
        // Vertices of degree at most one in `cand` belong to some optimum.
        loop {
            let mut changed = false;
            for i in bits(cand) {
                if cand & bit(i) != 0 && (self.nbr[i] & cand).count_ones() <= 1 {
                    chosen |= bit(i);
                    cand &= !(bit(i) | self.nbr[i]);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let size = chosen.count_ones() as usize;
        if cand == 0 {
            if size > self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        if self.best_size >= self.cap {
            return;
        }
        let bound = (size + self.clique_cover(cand)).min(self.cap);
        if bound <= self.best_size {
            return;
        }
        let v = bits(cand)
            .max_by_key(|&i| ((self.nbr[i] & cand).count_ones(), std::cmp::Reverse(i)))
            .expect("nonempty");
        self.go(cand & !(bit(v) | self.nbr[v]), chosen | bit(v));
        self.go(cand & !bit(v), chosen);
    }
}

/// Maximum plane subgraph containing `must_include`, for `n <= limit_n`.
pub fn exact_max<'d>(
    d: &'d Drawing,
    must_include: &[Edge],
    limit_n: usize,
) -> Result<PlaneSubgraph<'d>> {
    if limit_n > MAX_EXACT_N {
        return precondition(format!("limit_n above {MAX_EXACT_N} is not supported"));
    }
    if d.n() > limit_n {
        return precondition(format!("exact solver limited to n <= {limit_n}, got {}", d.n()));
    }
    let seed = PlaneSubgraph::new(d, must_include.iter().copied())?;
    let g = build_conflict_graph(d);
    let nbr: Vec<Mask> =
        g.adj.iter().map(|a| a.iter().fold(0, |m, &j| m | bit(j))).collect();
    let mut chosen: Mask = 0;
    let mut cand: Mask = (0..g.node_count()).fold(0, |m, i| m | bit(i));
    for &e in seed.edges() {
        let i = g.index_of(e).expect("edge of the drawing");
        chosen |= bit(i);
        cand &= !(bit(i) | nbr[i]);
    }
    let greedy = greedy_maximal(d, seed.edges())?;
    let best = greedy
        .edges()
        .iter()
        .fold(0, |m, &e| m | bit(g.index_of(e).expect("edge of the drawing")));
    let n = d.n();
    let mut search = Search {
        nbr,
        cap: if n >= 3 { 3 * n - 6 } else { 1 },
        best,
        best_size: best.count_ones() as usize,
    };
    search.go(cand, chosen);
    PlaneSubgraph::new_unchecked(d, bits(search.best).map(|i| g.nodes[i]))
}

/// One face of a connected spanning plane subgraph, prepared for the
/// triangulation DP: corners of the boundary walk become polygon slots.
#[derive(Clone, Debug)]
pub struct FaceDPInstance {
    pub face: FaceId,
    /// Vertex at each slot, in walk order.
    pub slots: Vec<crate::drawing::VertexId>,
    /// Available edges inside the face as slot pairs `i < j`.
    pub chords: Vec<(usize, usize, Edge)>,
}

impl FaceDPInstance {
    pub fn k(&self) -> usize {
        self.slots.len()
    }

    /// Chords of a minimum-weight triangulation where available chords cost
    /// 0 and all other diagonals cost 1: a largest set of pairwise
    /// non-interleaving available chords.
    pub fn solve(&self) -> Vec<Edge> {
        let k = self.k();
        if k < 4 || self.chords.is_empty() {
            return Vec::new();
        }
        let mut avail: Vec<Option<Edge>> = vec![None; k * k];
        for &(i, j, e) in &self.chords {
            avail[i * k + j] = Some(e);
        }
        let w = |i: usize, j: usize| usize::from(avail[i * k + j].is_none());
        // m[i][j]: cost of triangulating slots i..=j below the chord (i, j),
        // not counting (i, j) itself. split[i][j]: the apex.
        let mut m = vec![0usize; k * k];
        let mut split = vec![0usize; k * k];
        for len in 2..k {
            for i in 0..k - len {
                let j = i + len;
                let (mut best, mut arg) = (usize::MAX, 0);
                for t in i + 1..j {
                    let c = m[i * k + t] + m[t * k + j] + if t - i >= 2 { w(i, t) } else { 0 }
                        + if j - t >= 2 { w(t, j) } else { 0 };
                    if c < best {
                        best = c;
                        arg = t;
                    }
                }
                m[i * k + j] = best;
                split[i * k + j] = arg;
            }
        }
        let mut out = Vec::new();
        let mut stack = vec![(0usize, k - 1)];
        while let Some((i, j)) = stack.pop() {
            if j - i < 2 {
                continue;
            }
            let t = split[i * k + j];
            for (a, b) in [(i, t), (t, j)] {
                if b - a >= 2 {
                    if let Some(e) = avail[a * k + b] {
                        out.push(e);
                    }
                    stack.push((a, b));
                }
            }
        }
        out
    }
}

/// The face instances of a connected spanning plane subgraph.
pub fn face_instances(f: &PlaneSubgraph<'_>) -> Result<Vec<FaceDPInstance>> {
    let d = f.drawing();
    if !f.is_connected() || !f.is_spanning() {
        return precondition("subgraph must be connected and spanning");
    }
    let faces = trace_faces(f)?;
    let mut slot_of: HashMap<Corner, (FaceId, usize)> = HashMap::new();
    let mut out: Vec<FaceDPInstance> = faces
        .faces()
        .iter()
        .enumerate()
        .map(|(id, walk)| {
            let k = walk.len();
            for (i, h) in walk.iter().enumerate() {
                slot_of.insert(Corner { at: h.to, from: h.from }, (id, (i + 1) % k));
            }
            let mut slots = vec![walk[0].from; k];
            for (i, h) in walk.iter().enumerate() {
                slots[(i + 1) % k] = h.to;
            }
            FaceDPInstance { face: id, slots, chords: Vec::new() }
        })
        .collect();
    for e in d.edges() {
        if let EdgeLocation::InsideFace { face, corners } = locate_edge(f, &faces, e)? {
            let [Some(a), Some(b)] = corners else {
                return Err(Error::Inconsistent(format!("edge {e} lacks an attachment corner")));
            };
            let (fa, i) = slot_of[&a];
            let (fb, j) = slot_of[&b];
            debug_assert!(fa == face && fb == face);
            out[face].chords.push((i.min(j), i.max(j), e));
        }
    }
    Ok(out)
}

/// Largest plane superset of a connected spanning `f`.
pub fn maximize_connected<'d>(f: &PlaneSubgraph<'d>) -> Result<PlaneSubgraph<'d>> {
    let mut g = f.clone();
    for inst in face_instances(f)? {
        for e in inst.solve() {
            g.insert_unchecked(e);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_convex;

    fn hull(n: u32) -> Vec<Edge> {
        (1..=n).map(|i| Edge::of(i, i % n + 1)).collect()
    }

    #[test]
    fn conflict_graph_counts() {
        let g4 = build_conflict_graph(&gen_convex(4).unwrap());
        assert_eq!(g4.node_count(), 6);
        let pairs: Vec<(Edge, Edge)> = g4.conflicts().map(|(i, j)| (g4.nodes[i], g4.nodes[j])).collect();
        assert_eq!(pairs, vec![(Edge::of(1, 3), Edge::of(2, 4))]);
        assert_eq!(build_conflict_graph(&gen_convex(5).unwrap()).conflict_count(), 5);
        for n in 3..9 {
            assert_eq!(build_conflict_graph(&gen_convex(n).unwrap()).node_count(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn exact_on_four_points() {
        let convex = gen_convex(4).unwrap();
        assert_eq!(exact_max(&convex, &[], DEFAULT_LIMIT_N).unwrap().edge_count(), 5);
        let inner = Drawing::from_points(&[
            crate::geometry::Point::new(0.0, 0.0),
            crate::geometry::Point::new(4.0, 0.0),
            crate::geometry::Point::new(2.0, 3.0),
            crate::geometry::Point::new(2.0, 1.0),
        ])
        .unwrap();
        assert_eq!(exact_max(&inner, &[], DEFAULT_LIMIT_N).unwrap().edge_count(), 6);
    }

    #[test]
    fn exact_guards() {
        let d = gen_convex(13).unwrap();
        assert!(matches!(exact_max(&d, &[], DEFAULT_LIMIT_N), Err(Error::Precondition(_))));
        let d = gen_convex(6).unwrap();
        assert!(exact_max(&d, &[Edge::of(1, 4), Edge::of(2, 5)], 12).is_err());
        let m = exact_max(&d, &[Edge::of(1, 4)], 12).unwrap();
        assert_eq!(m.edge_count(), 9);
        assert!(m.contains(Edge::of(1, 4)));
    }

    #[test]
    fn dp_triangulates_hull() {
        let d = gen_convex(6).unwrap();
        let f = PlaneSubgraph::new(&d, hull(6)).unwrap();
        let m = maximize_connected(&f).unwrap();
        assert_eq!(m.edge_count(), 9);
        assert!(m.is_maximal());
        assert_eq!(maximize_connected(&m).unwrap().edge_count(), 9);
    }

    #[test]
    fn dp_needs_spanning_connected() {
        let d = gen_convex(6).unwrap();
        let f = PlaneSubgraph::new(&d, [Edge::of(1, 2), Edge::of(2, 3)]).unwrap();
        assert!(maximize_connected(&f).is_err());
    }
}
