//! Connectivity checks on plane subgraphs: 2-connectivity, essential
//! 3-edge-connectivity and separation pairs.

use crate::drawing::{Edge, VertexId};
use crate::plane::PlaneSubgraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub spanning: bool,
    pub connected: bool,
    pub two_connected: bool,
    pub essentially_3ec: bool,
    pub min_degree: usize,
    pub edge_count: usize,
}

/// Plain adjacency over vertex indices `0..n`, with optional vertex and edge
/// deletions applied on the fly.
struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    fn from_edges(n: usize, edges: &[Edge]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in edges {
            adj[e.u().index()].push(e.v().index());
            adj[e.v().index()].push(e.u().index());
        }
        Graph { n, adj }
    }

    /// Component labels of the vertices with `alive[v]`, skipping the edges in
    /// `dropped`. Dead vertices get `usize::MAX`.
    fn components(&self, alive: &[bool], dropped: &[(usize, usize)]) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let skip = |a: usize, b: usize| {
            dropped.iter().any(|&(x, y)| (x == a && y == b) || (x == b && y == a))
        };
        for s in 0..self.n {
            if !alive[s] || label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if alive[y] && label[y] == usize::MAX && !skip(x, y) {
                        label[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Articulation points among the vertices with `alive[v]`.
    fn articulation_points(&self, alive: &[bool]) -> Vec<usize> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut time = 0;
        for root in 0..n {
            if !alive[root] || disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, parent, next neighbour index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            while let Some(&mut (x, parent, ref mut i)) = stack.last_mut() {
                if *i < self.adj[x].len() {
                    let y = self.adj[x][*i];
                    *i += 1;
                    if !alive[y] || y == parent {
                        continue;
                    }
                    if disc[y] == usize::MAX {
                        disc[y] = time;
                        low[y] = time;
                        time += 1;
                        if x == root {
                            root_children += 1;
                        }
                        stack.push((y, x, 0));
                    } else {
                        low[x] = low[x].min(disc[y]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[x]);
                        if parent != root && low[x] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }
}

fn touched(f: &PlaneSubgraph<'_>) -> Vec<bool> {
    f.drawing().vertices().map(|v| f.has_vertex(v)).collect()
}

/// Connected, at least three vertices, and no cut vertex. Only vertices that
/// carry edges are considered.
pub fn is_two_connected(f: &PlaneSubgraph<'_>) -> bool {
    let alive = touched(f);
    let g = Graph::from_edges(f.drawing().n(), f.edges());
    alive.iter().filter(|&&a| a).count() >= 3
        && g.components(&alive, &[]).1 == 1
        && g.articulation_points(&alive).is_empty()
}

/// Stays connected after deleting any two edges, unless the two edges share
/// a vertex of degree 2 or the deletion only cuts off a single vertex.
pub fn is_essentially_3ec(f: &PlaneSubgraph<'_>) -> bool {
    essentially_3ec_violation(f).is_none()
}

/// An edge pair breaking essential 3-edge-connectivity, if any.
pub fn essentially_3ec_violation(f: &PlaneSubgraph<'_>) -> Option<(Edge, Edge)> {
    let alive = touched(f);
    let g = Graph::from_edges(f.drawing().n(), f.edges());
    if g.components(&alive, &[]).1 != 1 {
        return f.edges().first().map(|&e| (e, e));
    }
    let edges = f.edges();
    let ix = |e: Edge| (e.u().index(), e.v().index());
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            let shared = e1.ends().into_iter().find(|&x| e2.contains(x));
            if shared.is_some_and(|x| f.degree(x) == 2) {
                continue;
            }
            let (label, count) = g.components(&alive, &[ix(e1), ix(e2)]);
            if count == 1 {
                continue;
            }
            let mut sizes = vec![0usize; count];
            label.iter().filter(|&&l| l != usize::MAX).for_each(|&l| sizes[l] += 1);
            if count == 2 && sizes.contains(&1) {
                continue;
            }
            return Some((e1, e2));
        }
    }
    None
}

pub fn connectivity_report(f: &PlaneSubgraph<'_>) -> ConnectivityReport {
    let d = f.drawing();
    ConnectivityReport {
        spanning: f.is_spanning(),
        connected: f.is_connected(),
        two_connected: is_two_connected(f),
        essentially_3ec: f.is_connected() && is_essentially_3ec(f),
        min_degree: d.vertices().map(|v| f.degree(v)).min().unwrap_or(0),
        edge_count: f.edge_count(),
    }
}

/// Vertex pairs whose removal disconnects the subgraph, each with the
/// vertex sets of the resulting components.
pub fn separation_pairs(f: &PlaneSubgraph<'_>) -> Vec<((VertexId, VertexId), Vec<Vec<VertexId>>)> {
    let n = f.drawing().n();
    let base = touched(f);
    let g = Graph::from_edges(n, f.edges());
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !base[a] || !base[b] {
                continue;
            }
            let mut alive = base.clone();
            alive[a] = false;
            alive[b] = false;
            let (label, count) = g.components(&alive, &[]);
            if count < 2 {
                continue;
            }
            let mut parts = vec![Vec::new(); count];
            for (v, &l) in label.iter().enumerate() {
                if l != usize::MAX {
                    parts[l].push(VertexId::from_index(v));
                }
            }
            out.push(((VertexId::from_index(a), VertexId::from_index(b)), parts));
        }
    }
    out
}

/// For every separation pair some side, induced together with the pair, is
/// 2-connected. Returns the first pair where this fails.
pub fn separation_pair_violation(f: &PlaneSubgraph<'_>) -> Option<(VertexId, VertexId)> {
    let d = f.drawing();
    for ((a, b), parts) in separation_pairs(f) {
        let ok = parts.iter().any(|part| {
            let mut keep = vec![false; d.n()];
            for v in part.iter().chain([&a, &b]) {
                keep[v.index()] = true;
            }
            let side = f
                .edges()
                .iter()
                .copied()
                .filter(|e| keep[e.u().index()] && keep[e.v().index()]);
            let side = PlaneSubgraph::new_unchecked(d, side).expect("subset of valid edges");
            is_two_connected(&side) && part.len() + 2 == side.touched_vertices().count()
        });
        if !ok {
            return Some((a, b));
        }
    }
    None
}

/// A pair of adjacent vertices that both have degree 2.
pub fn adjacent_degree_two(f: &PlaneSubgraph<'_>) -> Option<Edge> {
    f.edges().iter().copied().find(|e| f.degree(e.u()) == 2 && f.degree(e.v()) == 2)
}
