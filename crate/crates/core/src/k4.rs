//! Crossing behaviour of four-vertex rotation systems.
//!
//! Each vertex of an abstract K4 sees the other three in one of two cyclic
//! orders, giving 16 sign patterns. The table below is not transcribed from
//! anywhere: it is derived once from straight-line K4 samples and frozen.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::geometry::{clockwise_order, segments_cross, Point};

/// The three perfect matchings of a sorted quadruple `a < b < c < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Matching {
    AbCd,
    AcBd,
    AdBc,
}

impl Matching {
    pub const ALL: [Matching; 3] = [Matching::AbCd, Matching::AcBd, Matching::AdBc];

    /// Positions (into the sorted quadruple) of the two edges.
    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Matching::AbCd => [(0, 1), (2, 3)],
            Matching::AcBd => [(0, 2), (1, 3)],
            Matching::AdBc => [(0, 3), (1, 2)],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum K4Kind {
    Crossing(Matching),
    Planar,
    NonRealizable,
}

/// Sign pattern: bit `i` is set when vertex `i` of the sorted quadruple sees
/// the other three, in ascending order, clockwise.
pub type SignPattern = u8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K4Table {
    kinds: [K4Kind; 16],
}

impl K4Table {
    pub fn kind(&self, pattern: SignPattern) -> K4Kind {
        self.kinds[pattern as usize & 0xf]
    }

    pub fn iter(&self) -> impl Iterator<Item = (SignPattern, K4Kind)> + '_ {
        self.kinds.iter().enumerate().map(|(p, &k)| (p as SignPattern, k))
    }
}

/// Cyclic orientation bit: do positions `p1, p2, p3` read clockwise in order?
pub(crate) fn cyclic_bit(p1: usize, p2: usize, p3: usize) -> bool {
    (p1 < p2 && p2 < p3) || (p2 < p3 && p3 < p1) || (p3 < p1 && p1 < p2)
}

/// Sign pattern and crossing matching of a straight-line K4 where point `i`
/// carries label `labels[i]`.
fn sample(points: &[Point; 4], labels: [usize; 4]) -> (SignPattern, Option<Matching>) {
    // slot[k] = index of the point with the k-th smallest label
    let mut slot = [0usize; 4];
    for (i, &l) in labels.iter().enumerate() {
        slot[l] = i;
    }
    let mut pattern = 0u8;
    for k in 0..4 {
        let order = clockwise_order(points, slot[k]);
        let pos_of = |label: usize| order.iter().position(|&p| p == slot[label]).unwrap();
        let others: Vec<usize> = (0..4).filter(|&o| o != k).collect();
        if cyclic_bit(pos_of(others[0]), pos_of(others[1]), pos_of(others[2])) {
            pattern |= 1 << k;
        }
    }
    let crossing = Matching::ALL.into_iter().find(|m| {
        let [(a, b), (c, d)] = m.pairs();
        segments_cross(points[slot[a]], points[slot[b]], points[slot[c]], points[slot[d]])
    });
    (pattern, crossing)
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&x| seen[x] = true);
                    if seen.iter().all(|&s| s) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Derive the table from straight-line samples: every labelling of a convex
/// quadrilateral and of a triangle with an inner point, plus mirror images.
pub fn build_k4_table() -> K4Table {
    let convex = [
        Point::new(0.0, 0.0),
        Point::new(3.0, 0.5),
        Point::new(2.5, 3.0),
        Point::new(-0.5, 2.0),
    ];
    let inner = [
        Point::new(0.0, 0.0),
        Point::new(4.0, 0.3),
        Point::new(1.7, 3.5),
        Point::new(1.9, 1.1),
    ];
    let mirror = |pts: &[Point; 4]| pts.map(|p| Point::new(-p.x, p.y));
    let configs = [convex, mirror(&convex), inner, mirror(&inner)];

    let mut seen: BTreeMap<SignPattern, Option<Matching>> = BTreeMap::new();
    for pts in &configs {
        for labels in permutations4() {
            let (pattern, crossing) = sample(pts, labels);
            let prev = seen.insert(pattern, crossing);
            assert!(
                prev.is_none() || prev == Some(crossing),
                "sign pattern {pattern:04b} sampled with two different crossing answers"
            );
        }
    }
    assert_eq!(seen.len(), 8, "straight-line sampling must reach all 8 realizable K4 patterns");

    let mut kinds = [K4Kind::NonRealizable; 16];
    for (pattern, crossing) in seen {
        kinds[pattern as usize] = match crossing {
            Some(m) => K4Kind::Crossing(m),
            None => K4Kind::Planar,
        };
    }
    K4Table { kinds }
}

/// The process-wide table.
pub fn k4_table() -> &'static K4Table {
    static TABLE: OnceLock<K4Table> = OnceLock::new();
    TABLE.get_or_init(build_k4_table)
}
