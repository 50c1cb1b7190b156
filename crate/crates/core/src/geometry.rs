//! Exact planar predicates on `f64` points.
//!
//! Orientation tests go through Shewchuk's adaptive predicates so that the
//! rotation systems derived from coordinates are exact.

use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

/// Sign of the turn `a -> b -> c`: positive when counterclockwise.
pub fn orient(a: Point, b: Point, c: Point) -> Ordering {
    let det = robust::orient2d(
        robust::Coord { x: a.x, y: a.y },
        robust::Coord { x: b.x, y: b.y },
        robust::Coord { x: c.x, y: c.y },
    );
    det.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
}

pub fn collinear(a: Point, b: Point, c: Point) -> bool {
    orient(a, b, c) == Ordering::Equal
}

/// Proper crossing of the open segments `ab` and `cd`.
///
/// Segments sharing an endpoint never cross. Assumes general position.
pub fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
        && o1 != o2
        && o3 != o4
}

/// Parameter `t` along `ab` of its intersection with line `cd`.
pub fn intersection_param(a: Point, b: Point, c: Point, d: Point) -> f64 {
    let (rx, ry) = (b.x - a.x, b.y - a.y);
    let (sx, sy) = (d.x - c.x, d.y - c.y);
    let denom = rx * sy - ry * sx;
    ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom
}

// Upper half-plane (including the positive x axis) first.
fn half(dx: f64, dy: f64) -> u8 {
    if dy > 0.0 || (dy == 0.0 && dx > 0.0) {
        0
    } else {
        1
    }
}

/// Counterclockwise angular comparison of directions `a - o` and `b - o`,
/// starting from the positive x axis.
fn ccw_angle_cmp(o: Point, a: Point, b: Point) -> Ordering {
    let ha = half(a.x - o.x, a.y - o.y);
    let hb = half(b.x - o.x, b.y - o.y);
    if ha != hb {
        return ha.cmp(&hb);
    }
    // Same half-plane: a before b iff b is to the left of o->a.
    match orient(o, a, b) {
        Ordering::Greater => Ordering::Less,
        Ordering::Less => Ordering::Greater,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Indices of `points` other than `center`, sorted clockwise around it.
///
/// The cyclic start is the first index after `center` in cyclic id order,
/// which makes convex-position rotations read `i+1, i+2, ..., i-1`.
pub fn clockwise_order(points: &[Point], center: usize) -> Vec<usize> {
    let o = points[center];
    let mut others: Vec<usize> = (0..points.len()).filter(|&j| j != center).collect();
    others.sort_by(|&a, &b| ccw_angle_cmp(o, points[b], points[a]));
    let n = points.len();
    let start = others
        .iter()
        .enumerate()
        .min_by_key(|(_, &j)| (j + n - center) % n)
        .map(|(i, _)| i)
        .unwrap_or(0);
    others.rotate_left(start);
    others
}

/// True if no three of the points are collinear and no two coincide.
pub fn in_general_position(points: &[Point]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return false;
            }
            for k in j + 1..n {
                if collinear(points[i], points[j], points[k]) {
                    return false;
                }
            }
        }
    }
    true
}
