use kn_plane::generators::{gen_random, gen_tight};
use kn_plane::geometry::Point;
use kn_plane::io::{
    parse_drawing, parse_edges, parse_points, parse_segments, write_drawing, write_edges, write_points,
    write_segments,
};
use kn_plane::{Edge, VertexId};
use proptest::prelude::*;

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![-1e6..1e6f64, any::<i32>().prop_map(f64::from), Just(0.0), Just(-0.0)]
}

fn point() -> impl Strategy<Value = Point> {
    (finite(), finite()).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #[test]
    fn rotations_round_trip(n in 3usize..24, seed in any::<u64>()) {
        let d = gen_random(n, seed).unwrap().without_coords();
        let text = write_drawing(&d);
        prop_assert_eq!(parse_drawing(&text).unwrap(), d);
    }

    #[test]
    fn edges_round_trip(pairs in prop::collection::vec((1u32..60, 1u32..60), 0..40)) {
        let edges: Vec<Edge> = pairs.into_iter().filter(|(a, b)| a != b).map(|(a, b)| Edge::of(a, b)).collect();
        let text = write_edges(edges.iter().copied());
        let back = parse_edges(&text).unwrap();
        let mut want = edges.clone();
        want.sort();
        want.dedup();
        prop_assert_eq!(&back, &want);
        prop_assert_eq!(write_edges(back), text);
    }

    #[test]
    fn points_round_trip(pts in prop::collection::vec(point(), 0..30)) {
        prop_assert_eq!(parse_points(&write_points(&pts)).unwrap(), pts);
    }

    #[test]
    fn segments_round_trip(segs in prop::collection::vec((point(), point()), 0..20)) {
        prop_assert_eq!(parse_segments(&write_segments(&segs)).unwrap(), segs);
    }
}

#[test]
fn tight_drawing_round_trips() {
    let t = gen_tight(11).unwrap();
    let d = parse_drawing(&write_drawing(&t.drawing)).unwrap();
    assert_eq!(d, t.drawing);
    assert_eq!(d.rotation(VertexId::new(1)).count(), 10);
}
