//! Order of crossings along an edge, decided from the rotation system alone.
//!
//! Two non-crossing edges `f`, `g` that both cross `e = ab` meet `e` in an
//! order that is invariant under triangle flips, so the rotation system fixes
//! it. The rules below are checked against straight-line and curved
//! polyline drawings in the test suite.

use crate::drawing::{Drawing, Edge, VertexId};
use crate::error::{precondition, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingOrder {
    FFirst,
    GFirst,
}

impl Drawing {
    /// Which of `e ∩ f`, `e ∩ g` lies closer to `from` along `e`.
    pub fn crossing_order(
        &self,
        e: Edge,
        from: VertexId,
        f: Edge,
        g: Edge,
    ) -> Result<CrossingOrder> {
        if !e.contains(from) {
            return precondition(format!("{from} is not an endpoint of {e}"));
        }
        if f == g {
            return precondition("f and g must differ");
        }
        if !self.try_crosses(e, f)? || !self.try_crosses(e, g)? {
            return precondition("both f and g must cross e");
        }
        if self.try_crosses(f, g)? {
            return precondition("f and g must not cross each other");
        }
        let first = self.try_f_first(from, e.other(from), f, g)?;
        Ok(if first { CrossingOrder::FFirst } else { CrossingOrder::GFirst })
    }

    /// Unchecked core: is `f` crossed before `g` walking from `a` to `b`?
    pub(crate) fn f_first(&self, a: VertexId, b: VertexId, f: Edge, g: Edge) -> bool {
        self.try_f_first(a, b, f, g).expect("drawing is not a good drawing")
    }

    fn try_f_first(&self, a: VertexId, b: VertexId, f: Edge, g: Edge) -> Result<bool> {
        if let Some(w) = shared_vertex(f, g) {
            self.shared_f_first(a, b, w, f.other(w), g.other(w))
        } else {
            self.disjoint_f_first(a, b, f, g)
        }
    }

    /// `f = wc`, `g = wd`. Works on the triangle `w -> a -> b`; a ray lies on
    /// its left side at a corner iff it is in the clockwise arc from the
    /// predecessor to the successor.
    fn shared_f_first(
        &self,
        a: VertexId,
        b: VertexId,
        w: VertexId,
        c: VertexId,
        d: VertexId,
    ) -> Result<bool> {
        let c_left = self.in_cw_arc(w, b, a, c);
        let d_left = self.in_cw_arc(w, b, a, d);
        if c_left == d_left {
            // Both start into the same side; angular order at w matches the
            // order of the crossings along ab.
            let oc = self.cw_offset(w, a, c);
            let od = self.cw_offset(w, a, d);
            return Ok(if c_left { oc > od } else { oc < od });
        }
        // wc starts on side X and ends on the other; wd ends on side X. The
        // first part of wc cuts X into a piece at a and a piece at b, and d is
        // in the piece at a iff g is crossed first.
        let x_left = c_left;
        let wc = Edge::new(w, c);
        if self.in_cw_arc(a, w, b, d) == x_left {
            return self.try_crosses(Edge::new(a, d), wc);
        }
        if self.in_cw_arc(b, a, w, d) == x_left {
            return Ok(!self.try_crosses(Edge::new(b, d), wc)?);
        }
        // Both ad and bd would have to cross the triangle: two crossings in
        // one K4.
        Err(Error::Inconsistent(format!(
            "edges {a}-{d} and {b}-{d} both leave the triangle {w} {a} {b}"
        )))
    }

    /// Vertex-disjoint `f = cd`, `g = pq`: closed curve through `a`, along `e`
    /// to `e ∩ f`, along `f` to `c`, back along the edge `ca`. `g` crosses
    /// the `e`-part iff its endpoints are separated XOR it crosses `ca`.
    fn disjoint_f_first(&self, a: VertexId, b: VertexId, f: Edge, g: Edge) -> Result<bool> {
        let c = f.u();
        let ab = Edge::new(a, b);
        let side = |z: VertexId| -> Result<bool> {
            let arc = self.in_cw_arc(a, b, c, z);
            let za = Edge::new(z, a);
            // Does the edge za cross the f-part between e ∩ f and c?
            let flips = self.try_crosses(za, f)? && self.try_f_first(c, f.other(c), za, ab)?;
            Ok(arc ^ flips)
        };
        let separated = side(g.u())? != side(g.v())?;
        let through_ca = self.try_crosses(g, Edge::new(c, a))?;
        // g crosses e before f iff g meets the e-part of the curve.
        Ok(!(separated ^ through_ca))
    }

    /// The edge of `subgraph` that the edge `from`-`to` crosses first, if any.
    ///
    /// `subgraph` must be pairwise non-crossing.
    pub fn first_crossed_edge<I>(&self, from: VertexId, to: VertexId, subgraph: I) -> Option<Edge>
    where
        I: IntoIterator<Item = Edge>,
    {
        let ray = Edge::new(from, to);
        let mut best: Option<Edge> = None;
        for h in subgraph {
            if !self.crosses(ray, h) {
                continue;
            }
            best = match best {
                Some(b) if !self.f_first(from, to, h, b) => Some(b),
                _ => Some(h),
            };
        }
        best
    }
}

fn shared_vertex(f: Edge, g: Edge) -> Option<VertexId> {
    f.ends().into_iter().find(|&x| g.contains(x))
}
