//! Finite groups as dense multiplication tables.
//!
//! A [`GroupTable`] stores a finite group of order `n` as an indexed element
//! list with its full `n x n` multiplication table. Index 0 is always the
//! identity. Conventions used throughout the crate:
//!
//! * conjugation: `g^y = y⁻¹ g y`
//! * commutator: `[g, x] = g⁻¹ x⁻¹ g x`
//!
//! Groups are built either from permutation generators (deterministic
//! breadth-first closure: identity first, generators applied by right
//! multiplication in input order, new elements appended in discovery order)
//! or from an explicit Cayley table.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the order of constructed groups. The dense table costs
/// `order²` memory, so the cap guards against runaway closures.
pub const DEFAULT_ORDER_CAP: usize = 5000;

/// Default RNG seed for every seeded computation in the crate.
pub const DEFAULT_SEED: u64 = 0x4E45_5354;

/// Tables up to this order get the full `O(n³)` associativity check;
/// larger tables are spot-checked on `10·n` seeded random triples.
const FULL_ASSOC_CHECK_LIMIT: usize = 512;

/// A finite group: element indices `0..order` with full multiplication and
/// inverse tables. Index 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_names: Option<Vec<String>>,
}

impl GroupTable {
    /// The group generated by `gens` acting on `{0..degree-1}`.
    ///
    /// Elements are enumerated by breadth-first closure from the identity,
    /// right-multiplying by the generators in input order, so element indices
    /// are reproducible across runs.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::from_generators_capped(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_capped(
        degree: usize,
        gens: &[Permutation],
        cap: usize,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator degree {} does not match declared degree {}",
                    g.degree(),
                    degree
                )));
            }
        }

        let mut elems: Vec<Permutation> = vec![Permutation::identity(degree)];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(elems[0].images().to_vec(), 0);

        let mut next = 0;
        while next < elems.len() {
            for g in gens {
                let prod = elems[next].compose(g);
                if !index.contains_key(prod.images()) {
                    if elems.len() >= cap {
                        return Err(Error::OrderCapExceeded { order: elems.len() + 1, cap });
                    }
                    index.insert(prod.images().to_vec(), elems.len());
                    elems.push(prod);
                }
            }
            next += 1;
        }

        let order = elems.len();
        let mut mul = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                let prod = elems[i].compose(&elems[j]);
                mul[i * order + j] = index[prod.images()] as u32;
            }
        }
        let inv: Vec<u32> =
            elems.iter().map(|p| index[p.inverse().images()] as u32).collect();
        let elem_names = Some(elems.iter().map(|p| p.cycle_string()).collect());

        Ok(GroupTable { order, mul, inv, elem_names })
    }

    /// Builds and validates a group from an explicit Cayley table.
    ///
    /// The table must be a Latin square with a two-sided identity and must be
    /// associative. If the identity is not at index 0 the elements are
    /// relabeled so that it is.
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidTable("table is empty".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {i} has length {}, expected {order}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= order {
                    return Err(Error::InvalidTable(format!(
                        "entry {v} in row {i} out of range"
                    )));
                }
            }
        }

        // Latin square: each row and column is a permutation.
        for i in 0..order {
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for j in 0..order {
                if std::mem::replace(&mut row_seen[rows[i][j]], true) {
                    return Err(Error::InvalidTable(format!("row {i} is not a permutation")));
                }
                if std::mem::replace(&mut col_seen[rows[j][i]], true) {
                    return Err(Error::InvalidTable(format!(
                        "column {i} is not a permutation"
                    )));
                }
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|i| rows[e][i] == i && rows[i][e] == i))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;

        // Relabel so the identity sits at index 0 (swap labels 0 <-> identity).
        let relabel = |x: usize| -> usize {
            if x == 0 {
                identity
            } else if x == identity {
                0
            } else {
                x
            }
        };
        let mut mul = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                mul[i * order + j] = relabel(rows[relabel(i)][relabel(j)]) as u32;
            }
        }

        let table = GroupTable { order, mul, inv: vec![0; order], elem_names: None };
        table.check_associativity(rows.len())?;

        let mut inv = vec![u32::MAX; order];
        for i in 0..order {
            let j = (0..order)
                .find(|&j| table.mul(i, j) == 0)
                .ok_or_else(|| Error::InvalidTable(format!("element {i} has no inverse")))?;
            if table.mul(j, i) != 0 {
                return Err(Error::InvalidTable(format!(
                    "element {i} has no two-sided inverse"
                )));
            }
            inv[i] = j as u32;
        }

        Ok(GroupTable { inv, ..table })
    }

    fn check_associativity(&self, order: usize) -> Result<()> {
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if order <= FULL_ASSOC_CHECK_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !assoc(a, b, c) {
                            return Err(Error::InvalidTable(format!(
                                "associativity fails on ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha20Rng::seed_from_u64(DEFAULT_SEED);
            for _ in 0..10 * order {
                let (a, b, c) = (
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                );
                if !assoc(a, b, c) {
                    return Err(Error::InvalidTable(format!(
                        "associativity fails on ({a}, {b}, {c})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Internal constructor for tables that are correct by construction
    /// (catalog families, direct products, quotients). Checks the identity
    /// and inverse structure but skips the cubic associativity scan.
    pub(crate) fn from_fn_trusted(
        order: usize,
        f: impl Fn(usize, usize) -> usize,
        elem_names: Option<Vec<String>>,
    ) -> Self {
        assert!(order > 0);
        let mut mul = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                let v = f(i, j);
                debug_assert!(v < order);
                mul[i * order + j] = v as u32;
            }
        }
        let mut inv = vec![u32::MAX; order];
        for i in 0..order {
            assert_eq!(mul[i], i as u32, "identity must sit at index 0");
            assert_eq!(mul[i * order], i as u32, "identity must sit at index 0");
            let j = (0..order)
                .find(|&j| mul[i * order + j] == 0)
                .expect("every element must have an inverse");
            assert_eq!(mul[j * order + i], 0, "inverse must be two-sided");
            inv[i] = j as u32;
        }
        GroupTable { order, mul, inv, elem_names }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g^y = y⁻¹ g y`.
    #[inline]
    pub fn conj(&self, g: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), g), y)
    }

    /// `[g, x] = g⁻¹ x⁻¹ g x`.
    #[inline]
    pub fn commutator(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(g), self.inv(x)), self.mul(g, x))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order)
            .all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Multiplicative order of element `g`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    /// Exponent of the group: least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1usize, |acc, g| {
            let o = self.element_order(g);
            acc / gcd(acc, o) * o
        })
    }

    pub fn element_name(&self, i: usize) -> String {
        match &self.elem_names {
            Some(names) => names[i].clone(),
            None => format!("g{i}"),
        }
    }

    pub fn has_element_names(&self) -> bool {
        self.elem_names.is_some()
    }

    /// The multiplication table as rows, e.g. for JSON export.
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    /// The raw table bytes; identical groups compare equal byte for byte.
    pub fn table_bytes(&self) -> &[u32] {
        &self.mul
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupTable(order={})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> GroupTable {
        let r = Permutation::new(vec![1, 2, 0]).unwrap();
        let t = Permutation::new(vec![1, 0, 2]).unwrap();
        GroupTable::from_generators(3, &[r, t]).unwrap()
    }

    #[test]
    fn s3_from_generators() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.mul(0, 3), 3);
        assert_eq!(g.mul(g.inv(4), 4), 0);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = GroupTable::from_generators(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.mul(0, 0), 0);
    }

    #[test]
    fn order_cap_is_enforced() {
        let r = Permutation::new(vec![1, 2, 3, 4, 0]).unwrap();
        let t = Permutation::new(vec![1, 0, 2, 3, 4]).unwrap();
        // S5 has order 120 > 100.
        match GroupTable::from_generators_capped(5, &[r, t], 100) {
            Err(Error::OrderCapExceeded { cap: 100, .. }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn dihedral_of_order_8_on_vertices() {
        // Square symmetries acting on 4 vertices + 4 edge midpoints.
        let r = Permutation::new(vec![1, 2, 3, 0, 5, 6, 7, 4]).unwrap();
        let s = Permutation::new(vec![1, 0, 3, 2, 4, 7, 6, 5]).unwrap();
        let g = GroupTable::from_generators(8, &[r, s]).unwrap();
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn cayley_c2() {
        let g = GroupTable::from_cayley(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn cayley_identity_relocation() {
        // C3 with labels 0 = a, 1 = a², 2 = e, so the identity sits at index 2.
        let val = [1usize, 2, 0];
        let lab = [2usize, 0, 1]; // lab[v] = label of residue v
        let rows: Vec<Vec<usize>> = (0..3)
            .map(|i| (0..3).map(|j| lab[(val[i] + val[j]) % 3]).collect())
            .collect();
        let g = GroupTable::from_cayley(&rows).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.element_order(1), 3);
        assert_eq!(g.element_order(2), 3);
    }

    #[test]
    fn cayley_rejects_non_associative() {
        // A 6x6 Latin square with two-sided identity that is not associative.
        // Rows 1..6 form a Latin square on {1..5} chosen to break (1*1)*2 = 1*(1*2).
        let rows = vec![
            vec![0, 1, 2, 3, 4, 5],
            vec![1, 0, 3, 4, 5, 2],
            vec![2, 3, 0, 5, 1, 4],
            vec![3, 4, 5, 0, 2, 1],
            vec![4, 5, 1, 2, 0, 3],
            vec![5, 2, 4, 1, 3, 0],
        ];
        match GroupTable::from_cayley(&rows) {
            Err(Error::InvalidTable(msg)) => assert!(msg.contains("associativity")),
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn cayley_rejects_missing_identity() {
        // A Latin square whose only left identity (row 0) is not a right identity.
        let rows = vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]];
        match GroupTable::from_cayley(&rows) {
            Err(Error::InvalidTable(msg)) => assert!(msg.contains("identity")),
            other => panic!("expected missing identity, got {other:?}"),
        }
    }

    #[test]
    fn cayley_round_trip_matches() {
        let g = s3();
        let h = GroupTable::from_cayley(&g.cayley_rows()).unwrap();
        assert_eq!(g.table_bytes(), h.table_bytes());
    }

    #[test]
    fn exponent_and_element_order() {
        let g = s3();
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.exponent(), 6);
    }
}
