//! Random good drawings of K5 with curved edges. Each edge is a polyline
//! sweeping around the origin with a bulging radius; samples that are not
//! good drawings are thrown away.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

pub type P = (f64, f64);

const STEPS: usize = 32;

pub struct Curved {
    pub rot: [[u8; 4]; 5],
    pub paths: BTreeMap<(usize, usize), Vec<P>>,
}

fn cross_params(a: P, b: P, c: P, d: P) -> Option<f64> {
    let r = (b.0 - a.0, b.1 - a.1);
    let s = (d.0 - c.0, d.1 - c.1);
    let den = r.0 * s.1 - r.1 * s.0;
    if den.abs() < 1e-14 {
        return None;
    }
    let t = ((c.0 - a.0) * s.1 - (c.1 - a.1) * s.0) / den;
    let u = ((c.0 - a.0) * r.1 - (c.1 - a.1) * r.0) / den;
    (t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0).then_some(t)
}

/// Positions along `p` (segment index plus fraction) where `q` crosses it.
pub fn crossings(p: &[P], q: &[P]) -> Vec<f64> {
    let mut out = Vec::new();
    for i in 0..p.len() - 1 {
        let (lo, hi) = (p[i].0.min(p[i + 1].0), p[i].0.max(p[i + 1].0));
        for j in 0..q.len() - 1 {
            if q[j].0.max(q[j + 1].0) < lo || q[j].0.min(q[j + 1].0) > hi {
                continue;
            }
            if let Some(t) = cross_params(p[i], p[i + 1], q[j], q[j + 1]) {
                out.push(i as f64 + t);
            }
        }
    }
    out
}

pub fn sample(rng: &mut ChaCha8Rng) -> Option<Curved> {
    let ang: Vec<f64> = (0..5).map(|_| rng.gen_range(0.0..TAU)).collect();
    let rad: Vec<f64> = (0..5).map(|_| rng.gen_range(1.0..3.0)).collect();
    let mut paths = BTreeMap::new();
    for i in 0..5 {
        for j in i + 1..5 {
            let mut sweep = (ang[j] - ang[i]).rem_euclid(TAU);
            if rng.gen_bool(0.5) {
                sweep -= TAU;
            }
            let bulge = rng.gen_range(-0.4..0.4);
            let pts = (0..=STEPS)
                .map(|s| {
                    let t = s as f64 / STEPS as f64;
                    let a = ang[i] + sweep * t;
                    let r = rad[i] + (rad[j] - rad[i]) * t + bulge * (PI * t).sin().powi(3);
                    let r = r.max(0.2);
                    (r * a.cos(), r * a.sin())
                })
                .collect::<Vec<P>>();
            paths.insert((i, j), pts);
        }
    }
    let keys: Vec<(usize, usize)> = paths.keys().copied().collect();
    for (x, &e) in keys.iter().enumerate() {
        for &f in &keys[x + 1..] {
            let adjacent = e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
            let k = crossings(&paths[&e], &paths[&f]).len();
            if k > 1 || (adjacent && k > 0) {
                return None;
            }
        }
    }
    let mut rot = [[0u8; 4]; 5];
    for (v, slot) in rot.iter_mut().enumerate() {
        let mut dirs: Vec<(f64, usize)> = (0..5)
            .filter(|&w| w != v)
            .map(|w| {
                let p = &paths[&(v.min(w), v.max(w))];
                let (o, q) = if v < w { (p[0], p[1]) } else { (p[STEPS], p[STEPS - 1]) };
                ((q.1 - o.1).atan2(q.0 - o.0), w)
            })
            .collect();
        // clockwise: decreasing angle
        dirs.sort_by(|a, b| b.0.total_cmp(&a.0));
        for (k, &(_, w)) in dirs.iter().enumerate() {
            slot[k] = w as u8;
        }
    }
    Some(Curved { rot, paths })
}

pub fn samples(seed: u64, want: usize) -> Vec<Curved> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::iter::from_fn(|| loop {
        if let Some(c) = sample(&mut rng) {
            return Some(c);
        }
    })
    .take(want)
    .collect()
}
