//! Text formats: rotation systems (`.rot`), edge sets (`.edg`), segments
//! (`.seg`) and points (`.pts`). `#` starts a comment everywhere.

use std::fmt::Write as _;

use crate::drawing::{Drawing, Edge, VertexId};
use crate::error::{Error, Result};
use crate::geometry::Point;

/// Lines with comments stripped, paired with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_label(line: usize, tok: &str) -> Result<VertexId> {
    match tok.parse::<u32>() {
        Ok(x) if x >= 1 => Ok(VertexId::new(x)),
        _ => Err(parse_err(line, format!("bad vertex id `{tok}`"))),
    }
}

fn parse_f64(line: usize, tok: &str) -> Result<f64> {
    tok.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| parse_err(line, format!("bad number `{tok}`")))
}

/// Raw rotations from `.rot` text, before any validity checks beyond shape.
pub fn parse_rotations(text: &str) -> Result<Vec<Vec<VertexId>>> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or_else(|| parse_err(1, "empty rotation file"))?;
    let n: usize = first
        .parse()
        .map_err(|_| parse_err(line, format!("expected vertex count, got `{first}`")))?;
    if n < 3 {
        return Err(parse_err(line, format!("need at least 3 vertices, got {n}")));
    }
    let mut rots: Vec<Option<Vec<VertexId>>> = vec![None; n];
    for (line, body) in lines {
        let (head, rest) = body
            .split_once(':')
            .ok_or_else(|| parse_err(line, "expected `i: a1 a2 ...`"))?;
        let v = parse_label(line, head.trim())?;
        if v.index() >= n {
            return Err(parse_err(line, format!("vertex {v} out of range 1..{n}")));
        }
        if rots[v.index()].is_some() {
            return Err(parse_err(line, format!("duplicate rotation for vertex {v}")));
        }
        let rot = rest
            .split_whitespace()
            .map(|t| parse_label(line, t))
            .collect::<Result<Vec<_>>>()?;
        rots[v.index()] = Some(rot);
    }
    rots.into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| parse_err(0, format!("missing rotation for vertex {}", i + 1))))
        .collect()
}

pub fn parse_drawing(text: &str) -> Result<Drawing> {
    Drawing::from_rotations(parse_rotations(text)?)
}

pub fn write_drawing(d: &Drawing) -> String {
    let mut out = format!("{}\n", d.n());
    for v in d.vertices() {
        let _ = write!(out, "{v}:");
        for w in d.rotation(v) {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_edges(text: &str) -> Result<Vec<Edge>> {
    content_lines(text)
        .map(|(line, body)| {
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(parse_err(line, "expected `i j`"));
            }
            let (a, b) = (parse_label(line, toks[0])?, parse_label(line, toks[1])?);
            if a == b {
                return Err(parse_err(line, "loop edge"));
            }
            Ok(Edge::new(a, b))
        })
        .collect()
}

/// Edges sorted, deduplicated, one canonical `i j` per line.
pub fn write_edges<I: IntoIterator<Item = Edge>>(edges: I) -> String {
    let mut v: Vec<Edge> = edges.into_iter().collect();
    v.sort();
    v.dedup();
    v.iter().map(|e| format!("{e}\n")).collect()
}

pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    content_lines(text)
        .map(|(line, body)| {
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(parse_err(line, "expected `x y`"));
            }
            Ok(Point::new(parse_f64(line, toks[0])?, parse_f64(line, toks[1])?))
        })
        .collect()
}

pub fn write_points(points: &[Point]) -> String {
    points.iter().map(|p| format!("{} {}\n", p.x, p.y)).collect()
}

pub fn parse_segments(text: &str) -> Result<Vec<(Point, Point)>> {
    content_lines(text)
        .map(|(line, body)| {
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.len() != 4 {
                return Err(parse_err(line, "expected `x1 y1 x2 y2`"));
            }
            let v: Vec<f64> = toks.iter().map(|t| parse_f64(line, t)).collect::<Result<_>>()?;
            Ok((Point::new(v[0], v[1]), Point::new(v[2], v[3])))
        })
        .collect()
}

pub fn write_segments(segments: &[(Point, Point)]) -> String {
    segments
        .iter()
        .map(|(a, b)| format!("{} {} {} {}\n", a.x, a.y, b.x, b.y))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_convex;

    #[test]
    fn rot_round_trip_ignores_comments_and_spacing() {
        let text = "# convex 4\n4\n1: 2 3 4\n2:   3 4 1  # note\n\n3: 4 1 2\n4: 1 2 3\n";
        let d = parse_drawing(text).unwrap();
        assert_eq!(d, gen_convex(4).unwrap());
        assert_eq!(write_drawing(&d), "4\n1: 2 3 4\n2: 3 4 1\n3: 4 1 2\n4: 1 2 3\n");
        assert_eq!(parse_drawing(&write_drawing(&d)).unwrap(), d);
    }

    #[test]
    fn rot_errors() {
        assert!(matches!(parse_rotations(""), Err(Error::Parse { .. })));
        assert!(parse_rotations("2\n1: 2\n2: 1\n").is_err());
        assert!(parse_rotations("3\n1: 2 3\n1: 2 3\n3: 1 2\n").is_err());
        assert!(parse_rotations("3\n1: 2 x\n2: 3 1\n3: 1 2\n").is_err());
        // shape is fine, permutation is not: parse succeeds, drawing fails
        let raw = parse_rotations("3\n1: 2 2\n2: 3 1\n3: 1 2\n").unwrap();
        assert!(Drawing::from_rotations(raw).is_err());
    }

    #[test]
    fn edges_written_canonically() {
        let e = parse_edges("3 1\n2 1 # c\n1 3\n").unwrap();
        assert_eq!(write_edges(e), "1 2\n1 3\n");
        assert!(parse_edges("1 1\n").is_err());
        assert!(parse_edges("1 2 3\n").is_err());
    }

    #[test]
    fn floats_round_trip() {
        let pts = vec![Point::new(0.1, -2.5e-7), Point::new(1.0 / 3.0, 7.0)];
        assert_eq!(parse_points(&write_points(&pts)).unwrap(), pts);
        let segs = vec![(pts[0], pts[1])];
        assert_eq!(parse_segments(&write_segments(&segs)).unwrap(), segs);
    }
}
