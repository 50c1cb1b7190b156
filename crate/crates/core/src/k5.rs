//! Realizability of five-vertex rotation systems.
//!
//! Good drawings of K5 fall into five classes up to relabelling and mirror
//! image. Realizable K4s are not enough: two further classes pass every K4
//! test and still cannot be drawn.

use std::sync::OnceLock;

/// One rotation system per class, over vertices `0..5`, each rotation
/// starting at its smallest entry. Crossing numbers 5, 5, 3, 3, 1. The
/// second is the twisted drawing; the others come from straight-line
/// point sets.
pub const CLASSES: [[[u8; 4]; 5]; 5] = [
    [[1, 2, 3, 4], [0, 2, 3, 4], [0, 1, 3, 4], [0, 1, 2, 4], [0, 1, 2, 3]],
    [[1, 2, 3, 4], [0, 2, 3, 4], [0, 1, 3, 4], [0, 1, 4, 2], [0, 1, 3, 2]],
    [[1, 2, 3, 4], [0, 2, 3, 4], [0, 1, 4, 3], [0, 1, 2, 4], [0, 1, 3, 2]],
    [[1, 2, 3, 4], [0, 2, 4, 3], [0, 1, 3, 4], [0, 1, 4, 2], [0, 3, 1, 2]],
    [[1, 2, 3, 4], [0, 3, 4, 2], [0, 1, 4, 3], [0, 2, 4, 1], [0, 3, 2, 1]],
];

/// Index of a five-vertex rotation system: per vertex, the cyclic order of
/// the other four read from the smallest, as a base-6 digit.
pub fn code(rot: &[[u8; 4]; 5]) -> usize {
    let mut code = 0;
    for x in (0..5).rev() {
        let r = rot[x];
        let m = (0..4).min_by_key(|&i| r[i]).expect("four entries");
        let tail = [r[(m + 1) % 4], r[(m + 2) % 4], r[(m + 3) % 4]];
        let mut sorted = tail;
        sorted.sort_unstable();
        let rank = |y: u8| sorted.iter().position(|&s| s == y).expect("present");
        let (a, b) = (rank(tail[0]), rank(tail[1]));
        let digit = 2 * a + usize::from(b > if a == 0 { 1 } else { 0 });
        code = code * 6 + digit;
    }
    code
}

fn permutations5() -> Vec<[u8; 5]> {
    let mut out = Vec::with_capacity(120);
    let mut p = [0u8, 1, 2, 3, 4];
    fn go(k: usize, p: &mut [u8; 5], out: &mut Vec<[u8; 5]>) {
        if k == 5 {
            out.push(*p);
            return;
        }
        for i in k..5 {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

/// Class index of every labelled system, `None` for the non-realizable
/// ones. Built by closing the class representatives under relabelling and
/// mirroring.
pub fn build_k5_table() -> Vec<Option<u8>> {
    let mut table = vec![None; 6usize.pow(5)];
    for (i, class) in CLASSES.iter().enumerate() {
        for perm in permutations5() {
            for mirror in [false, true] {
                let mut rot = [[0u8; 4]; 5];
                for x in 0..5 {
                    let mut r = class[x].map(|y| perm[y as usize]);
                    if mirror {
                        r.reverse();
                    }
                    rot[perm[x] as usize] = r;
                }
                table[code(&rot)] = Some(i as u8);
            }
        }
    }
    table
}

pub fn k5_table() -> &'static [Option<u8>] {
    static TABLE: OnceLock<Vec<Option<u8>>> = OnceLock::new();
    TABLE.get_or_init(build_k5_table)
}

/// Index into `CLASSES` of the class containing `rot`.
pub fn class_of(rot: &[[u8; 4]; 5]) -> Option<usize> {
    k5_table()[code(rot)].map(usize::from)
}

pub fn is_realizable_k5(rot: &[[u8; 4]; 5]) -> bool {
    class_of(rot).is_some()
}
