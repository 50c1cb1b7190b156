//! SVG output for drawings that come with coordinates. Every edge is a
//! straight segment, so rotation-only drawings are refused rather than laid
//! out with invented positions.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::drawing::{Drawing, Edge};
use crate::error::{precondition, Result};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

/// Straight-line picture of `d` with the edges of `highlight` drawn thick.
pub fn render_svg(d: &Drawing, highlight: &[Edge]) -> Result<String> {
    let Some(pts) = d.coords() else {
        return precondition("drawing has no coordinates to render");
    };
    if let Some(e) = highlight.iter().find(|e| e.v().index() >= d.n()) {
        return precondition(format!("highlighted edge {e} is not in the drawing"));
    }
    let hl: BTreeSet<Edge> = highlight.iter().copied().collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in pts {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    let scale = (SIZE - 2.0 * MARGIN) / (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    // flip y so the picture has the usual orientation
    let at = |i: usize| (MARGIN + (pts[i].x - x0) * scale, SIZE - MARGIN - (pts[i].y - y0) * scale);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r##"<g stroke="#b0b0b0" stroke-width="1">"##);
    for e in d.edges().filter(|e| !hl.contains(e)) {
        line(&mut out, e, at(e.u().index()), at(e.v().index()), "edge");
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r##"<g stroke="#c0392b" stroke-width="3">"##);
    for &e in &hl {
        line(&mut out, e, at(e.u().index()), at(e.v().index()), "edge highlight");
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g font-family="sans-serif" font-size="12">"#);
    for v in d.vertices() {
        let (x, y) = at(v.index());
        let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="4" fill="black"/>"#);
        let _ = writeln!(out, r#"<text x="{:.3}" y="{:.3}">{v}</text>"#, x + 6.0, y - 6.0);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

fn line(out: &mut String, e: Edge, a: (f64, f64), b: (f64, f64), class: &str) {
    let _ = writeln!(
        out,
        r#"<line class="{class}" data-edge="{} {}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
        e.u(),
        e.v(),
        a.0,
        a.1,
        b.0,
        b.1
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_convex;

    #[test]
    fn rotation_only_is_refused() {
        let d = gen_convex(5).unwrap().without_coords();
        assert!(render_svg(&d, &[]).is_err());
    }

    #[test]
    fn counts_and_determinism() {
        let d = gen_convex(6).unwrap();
        let hl: Vec<Edge> = (1..=6)
            .map(|i| Edge::of(i, i % 6 + 1))
            .chain([Edge::of(1, 3), Edge::of(1, 4), Edge::of(1, 5)])
            .collect();
        let svg = render_svg(&d, &hl).unwrap();
        assert_eq!(svg.matches("<line ").count(), 15);
        assert_eq!(svg.matches(r#"class="edge highlight""#).count(), 9);
        assert_eq!(svg, render_svg(&d, &hl).unwrap());
    }
}
