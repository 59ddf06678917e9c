//! Shared fixtures for unit tests.

use crate::group::GroupTable;
use crate::perm::Permutation;

pub fn s3() -> GroupTable {
    let r = Permutation::new(vec![1, 2, 0]).unwrap();
    let t = Permutation::new(vec![1, 0, 2]).unwrap();
    GroupTable::from_generators(3, &[r, t]).unwrap()
}

pub fn s4() -> GroupTable {
    let c = Permutation::new(vec![1, 2, 3, 0]).unwrap();
    let t = Permutation::new(vec![1, 0, 2, 3]).unwrap();
    GroupTable::from_generators(4, &[c, t]).unwrap()
}

pub fn d8() -> GroupTable {
    let r = Permutation::new(vec![1, 2, 3, 0]).unwrap();
    let s = Permutation::new(vec![1, 0, 3, 2]).unwrap();
    GroupTable::from_generators(4, &[r, s]).unwrap()
}

/// Q8 as a hand-written Cayley table over {1, -1, i, -i, j, -j, k, -k},
/// independent of the catalog's dicyclic construction.
pub fn q8() -> GroupTable {
    // index = 2 * unit + sign, units 0:1, 1:i, 2:j, 3:k; sign 1 means negated
    let table = |a: usize, b: usize| -> usize {
        let (ua, sa) = (a / 2, a % 2 == 1);
        let (ub, sb) = (b / 2, b % 2 == 1);
        let (unit, flip) = match (ua, ub) {
            (0, u) => (u, false),
            (u, 0) => (u, false),
            (u, v) if u == v => (0, true), // i² = j² = k² = -1
            (1, 2) => (3, false),          // i·j = k
            (2, 1) => (3, true),           // j·i = -k
            (2, 3) => (1, false),          // j·k = i
            (3, 2) => (1, true),           // k·j = -i
            (3, 1) => (2, false),          // k·i = j
            (1, 3) => (2, true),           // i·k = -j
            _ => unreachable!(),
        };
        2 * unit + usize::from(flip ^ sa ^ sb)
    };
    let rows: Vec<Vec<usize>> =
        (0..8).map(|i| (0..8).map(|j| table(i, j)).collect()).collect();
    GroupTable::from_cayley(&rows).unwrap()
}

/// The Heisenberg group of order p³ built from explicit unitriangular
/// matrix triples, independent of the catalog construction.
pub fn heisenberg_oracle(p: usize) -> GroupTable {
    let enc = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let rows: Vec<Vec<usize>> = (0..p * p * p)
        .map(|x| {
            let (a1, b1, c1) = (x / (p * p), (x / p) % p, x % p);
            (0..p * p * p)
                .map(|y| {
                    let (a2, b2, c2) = (y / (p * p), (y / p) % p, y % p);
                    enc((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p)
                })
                .collect()
        })
        .collect();
    GroupTable::from_cayley(&rows).unwrap()
}
