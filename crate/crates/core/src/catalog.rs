//! Named group families and the standard test corpus.
//!
//! Group expressions follow the grammar `FAMILY(params)` joined by `x` for
//! direct products, whitespace-insensitive, family names case-sensitive:
//!
//! * `C(n)` — cyclic of order n
//! * `Ab(n1,n2,…)` — direct product of cyclics
//! * `D(2n)` — dihedral of order 2n
//! * `Dic(4n)` — dicyclic of order 4n; `Q(2^k)` is the generalized
//!   quaternion alias (`Q(8) = Dic(8)`)
//! * `S(n)`, `A(n)` — symmetric and alternating on n points
//! * `Heis(p)` — upper unitriangular 3x3 matrices over the integers mod a
//!   prime p (order p³, exponent p for odd p)
//! * `ES+(p³)`, `ES-(p³)` — the two extraspecial groups of order p³:
//!   for odd p the plus type is `Heis(p)` and the minus type is the
//!   semidirect product C(p²)⋊C(p) with the action x ↦ x^(1+p); for p = 2
//!   they are D(8) and Q(8)
//!
//! Every construction is deterministic: the same expression always yields
//! the identical multiplication table.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{GroupTable, DEFAULT_ORDER_CAP};
use crate::perm::Permutation;

/// One family instance inside a product expression.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Family {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Dihedral(usize),
    /// Stored by order; `quaternion_alias` only affects the display name.
    Dicyclic { order: usize, quaternion_alias: bool },
    Symmetric(usize),
    Alternating(usize),
    Heisenberg(usize),
    ExtraspecialPlus(usize),
    ExtraspecialMinus(usize),
}

impl Family {
    fn order(&self) -> Option<usize> {
        match self {
            Family::Cyclic(n) => Some(*n),
            Family::Abelian(ns) => ns.iter().try_fold(1usize, |a, &n| a.checked_mul(n)),
            Family::Dihedral(m) => Some(*m),
            Family::Dicyclic { order, .. } => Some(*order),
            Family::Symmetric(n) => factorial(*n),
            Family::Alternating(n) => {
                if *n < 2 {
                    Some(1)
                } else {
                    factorial(*n).map(|f| f / 2)
                }
            }
            Family::Heisenberg(p) | Family::ExtraspecialPlus(p) | Family::ExtraspecialMinus(p) => {
                p.checked_pow(3)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "C({n})"),
            Family::Abelian(ns) => {
                let parts: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
                write!(f, "Ab({})", parts.join(","))
            }
            Family::Dihedral(m) => write!(f, "D({m})"),
            Family::Dicyclic { order, quaternion_alias } => {
                if *quaternion_alias {
                    write!(f, "Q({order})")
                } else {
                    write!(f, "Dic({order})")
                }
            }
            Family::Symmetric(n) => write!(f, "S({n})"),
            Family::Alternating(n) => write!(f, "A({n})"),
            Family::Heisenberg(p) => write!(f, "Heis({p})"),
            Family::ExtraspecialPlus(p) => write!(f, "ES+({})", p.pow(3)),
            Family::ExtraspecialMinus(p) => write!(f, "ES-({})", p.pow(3)),
        }
    }
}

/// A parsed group expression: one or more family factors joined by `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    factors: Vec<Family>,
}

impl GroupSpec {
    pub fn parse(input: &str) -> Result<GroupSpec> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::SpecParse("empty expression".into()));
        }
        let factors = compact
            .split('x')
            .map(parse_family)
            .collect::<Result<Vec<Family>>>()?;
        Ok(GroupSpec { factors })
    }

    /// The canonical expression string (whitespace removed).
    pub fn expression(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(|f| f.to_string()).collect();
        parts.join("x")
    }

    /// Order of the group the spec describes, without building it.
    pub fn order(&self) -> Result<usize> {
        self.factors
            .iter()
            .try_fold(1usize, |acc, f| {
                f.order().and_then(|o| acc.checked_mul(o))
            })
            .ok_or_else(|| Error::SpecParse("order overflows".into()))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expression())
    }
}

fn parse_family(token: &str) -> Result<Family> {
    let open = token
        .find('(')
        .ok_or_else(|| Error::SpecParse(format!("missing '(' in `{token}`")))?;
    if !token.ends_with(')') {
        return Err(Error::SpecParse(format!("missing ')' in `{token}`")));
    }
    let name = &token[..open];
    let args: Vec<usize> = token[open + 1..token.len() - 1]
        .split(',')
        .map(|a| {
            a.parse::<usize>()
                .map_err(|_| Error::SpecParse(format!("bad parameter `{a}` in `{token}`")))
        })
        .collect::<Result<_>>()?;
    let single = || -> Result<usize> {
        if args.len() == 1 {
            Ok(args[0])
        } else {
            Err(Error::SpecParse(format!("`{name}` takes one parameter")))
        }
    };
    match name {
        "C" => {
            let n = single()?;
            if n == 0 {
                return Err(Error::SpecParse("C(n) needs n >= 1".into()));
            }
            Ok(Family::Cyclic(n))
        }
        "Ab" => {
            if args.is_empty() || args.iter().any(|&n| n == 0) {
                return Err(Error::SpecParse("Ab needs positive factors".into()));
            }
            Ok(Family::Abelian(args))
        }
        "D" => {
            let m = single()?;
            if m < 2 || m % 2 != 0 {
                return Err(Error::SpecParse("D(m) needs even m >= 2".into()));
            }
            Ok(Family::Dihedral(m))
        }
        "Dic" => {
            let m = single()?;
            if m < 8 || m % 4 != 0 {
                return Err(Error::SpecParse("Dic(m) needs m >= 8 divisible by 4".into()));
            }
            Ok(Family::Dicyclic { order: m, quaternion_alias: false })
        }
        "Q" => {
            let m = single()?;
            if m < 8 || !m.is_power_of_two() {
                return Err(Error::SpecParse(
                    "Q(m) needs a power of two m >= 8 (generalized quaternion)".into(),
                ));
            }
            Ok(Family::Dicyclic { order: m, quaternion_alias: true })
        }
        "S" => Ok(Family::Symmetric(single()?.max(1))),
        "A" => Ok(Family::Alternating(single()?.max(1))),
        "Heis" => {
            let p = single()?;
            require_prime(p)?;
            Ok(Family::Heisenberg(p))
        }
        "ES+" | "ES-" => {
            let m = single()?;
            let p = cube_root(m).ok_or_else(|| {
                Error::SpecParse(format!("extraspecial parameter {m} is not a prime cube"))
            })?;
            require_prime(p)?;
            if name == "ES+" {
                Ok(Family::ExtraspecialPlus(p))
            } else {
                Ok(Family::ExtraspecialMinus(p))
            }
        }
        _ => Err(Error::SpecParse(format!("unknown family `{name}`"))),
    }
}

fn require_prime(p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::SpecParse(format!("{p} is not prime")))
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn cube_root(m: usize) -> Option<usize> {
    let mut p = 1;
    while p * p * p < m {
        p += 1;
    }
    (p * p * p == m).then_some(p)
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |a, k| a.checked_mul(k))
}

/// Builds the group a spec describes, under the default order cap.
pub fn build(spec: &GroupSpec) -> Result<GroupTable> {
    build_capped(spec, DEFAULT_ORDER_CAP)
}

pub fn build_capped(spec: &GroupSpec, cap: usize) -> Result<GroupTable> {
    let order = spec.order()?;
    if order > cap {
        return Err(Error::OrderCapExceeded { order, cap });
    }
    let mut tables = spec.factors.iter().map(|f| build_family(f, cap));
    let first = tables.next().expect("parser guarantees at least one factor")?;
    tables.try_fold(first, |acc, t| Ok(direct_product(&acc, &t?)))
}

fn build_family(family: &Family, cap: usize) -> Result<GroupTable> {
    match family {
        Family::Cyclic(n) => Ok(cyclic(*n)),
        Family::Abelian(ns) => {
            let mut t = cyclic(ns[0]);
            for &n in &ns[1..] {
                t = direct_product(&t, &cyclic(n));
            }
            Ok(t)
        }
        Family::Dihedral(m) => Ok(dihedral(*m)),
        Family::Dicyclic { order, .. } => Ok(dicyclic(*order)),
        Family::Symmetric(n) => symmetric(*n, cap),
        Family::Alternating(n) => alternating(*n, cap),
        Family::Heisenberg(p) => Ok(heisenberg(*p)),
        Family::ExtraspecialPlus(p) => {
            if *p == 2 {
                Ok(dihedral(8))
            } else {
                Ok(heisenberg(*p))
            }
        }
        Family::ExtraspecialMinus(p) => {
            if *p == 2 {
                Ok(dicyclic(8))
            } else {
                Ok(extraspecial_minus(*p))
            }
        }
    }
}

/// Z_n under addition.
fn cyclic(n: usize) -> GroupTable {
    GroupTable::from_fn_trusted(n, |a, b| (a + b) % n, None)
}

/// Order-m dihedral group; element `2a + s` is the rotation `r^a` times the
/// reflection `s^s`.
fn dihedral(m: usize) -> GroupTable {
    let k = m / 2;
    GroupTable::from_fn_trusted(
        m,
        |x, y| {
            let (a, s) = (x / 2, x % 2);
            let (c, d) = (y / 2, y % 2);
            if s == 0 {
                ((a + c) % k) * 2 + d
            } else {
                ((a + k - c % k) % k) * 2 + (1 - d)
            }
        },
        None,
    )
}

/// Order-m dicyclic group ⟨a, b | a^(m/2) = 1, b² = a^(m/4), aᵇ = a⁻¹⟩; the
/// order-8 case is the quaternion group Q8.
fn dicyclic(m: usize) -> GroupTable {
    let q = m / 2;
    let t = m / 4;
    GroupTable::from_fn_trusted(
        m,
        |x, y| {
            let (i, s) = (x / 2, x % 2);
            let (c, d) = (y / 2, y % 2);
            if s == 0 {
                ((i + c) % q) * 2 + d
            } else if d == 0 {
                ((i + q - c) % q) * 2 + 1
            } else {
                ((i + q - c + t) % q) * 2
            }
        },
        None,
    )
}

fn symmetric(n: usize, cap: usize) -> Result<GroupTable> {
    match n {
        0 | 1 => GroupTable::from_generators_capped(1, &[], cap),
        2 => {
            let t = Permutation::new(vec![1, 0]).unwrap();
            GroupTable::from_generators_capped(2, &[t], cap)
        }
        _ => {
            let t = Permutation::from_cycles(n, &[vec![0, 1]]).unwrap();
            let c = Permutation::new((1..n).chain([0]).collect()).unwrap();
            GroupTable::from_generators_capped(n, &[t, c], cap)
        }
    }
}

fn alternating(n: usize, cap: usize) -> Result<GroupTable> {
    match n {
        0..=2 => GroupTable::from_generators_capped(n.max(1), &[], cap),
        3 => {
            let c = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
            GroupTable::from_generators_capped(3, &[c], cap)
        }
        _ => {
            let c3 = Permutation::from_cycles(n, &[vec![0, 1, 2]]).unwrap();
            // an n-cycle is even only for odd n; use an (n-1)-cycle otherwise
            let long = if n % 2 == 1 {
                Permutation::new((1..n).chain([0]).collect()).unwrap()
            } else {
                Permutation::from_cycles(n, &[(1..n).collect()]).unwrap()
            };
            GroupTable::from_generators_capped(n, &[c3, long], cap)
        }
    }
}

/// Upper unitriangular 3x3 matrices over Z_p: triples (a, b, c) with
/// (a,b,c)·(a',b',c') = (a+a', b+b', c+c'+a·b').
fn heisenberg(p: usize) -> GroupTable {
    let n = p * p * p;
    GroupTable::from_fn_trusted(
        n,
        |x, y| {
            let (a1, b1, c1) = (x / (p * p), (x / p) % p, x % p);
            let (a2, b2, c2) = (y / (p * p), (y / p) % p, y % p);
            ((a1 + a2) % p) * p * p + ((b1 + b2) % p) * p + (c1 + c2 + a1 * b2) % p
        },
        None,
    )
}

/// C(p²) ⋊ C(p) with the generator acting as x ↦ x^(1+p); the exponent-p²
/// extraspecial group of order p³ for odd p.
fn extraspecial_minus(p: usize) -> GroupTable {
    let p2 = p * p;
    // (1+p)^j mod p² for j in 0..p
    let act: Vec<usize> = (0..p)
        .scan(1usize, |acc, _| {
            let cur = *acc;
            *acc = (*acc * (1 + p)) % p2;
            Some(cur)
        })
        .collect();
    GroupTable::from_fn_trusted(
        p2 * p,
        |x, y| {
            let (i, j) = (x / p, x % p);
            let (c, d) = (y / p, y % p);
            ((i + c * act[j]) % p2) * p + (j + d) % p
        },
        None,
    )
}

/// Direct product with lexicographic pair indexing: (a, b) ↦ a·|B| + b.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let (na, nb) = (a.order(), b.order());
    GroupTable::from_fn_trusted(
        na * nb,
        |x, y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb),
        None,
    )
}

/// The fixed test corpus filtered by `max_order`: cyclics, abelian
/// invariant-factor chains with up to three factors, dihedral and dicyclic
/// families, S(n≤5), A(n≤5), odd-prime Heisenberg and minus-type
/// extraspecial groups (the p = 2 extraspecials are D(8) and Q(8), and the
/// odd plus type equals Heis(p), so those would only duplicate entries), and
/// all pairwise direct products of the nonabelian entries.
pub fn standard_corpus(max_order: usize) -> Vec<GroupSpec> {
    let mut specs: Vec<GroupSpec> = Vec::new();
    let mut push = |f: Vec<Family>| specs.push(GroupSpec { factors: f });

    for n in 2..=max_order {
        push(vec![Family::Cyclic(n)]);
    }
    // invariant-factor chains n1 | n2 (| n3), so each group appears once
    for n1 in 2..=max_order {
        for n2 in (n1..=max_order / n1).step_by(n1) {
            if n1 * n2 <= max_order {
                push(vec![Family::Abelian(vec![n1, n2])]);
            }
        }
    }
    for n1 in 2..=max_order {
        for n2 in (n1..=max_order).step_by(n1) {
            for n3 in (n2..=max_order).step_by(n2) {
                if n1.checked_mul(n2).and_then(|m| m.checked_mul(n3)).is_some_and(|m| m <= max_order)
                    && n3 % n2 == 0
                {
                    push(vec![Family::Abelian(vec![n1, n2, n3])]);
                }
            }
        }
    }

    let mut nonabelian: Vec<Family> = Vec::new();
    for m in (8..=max_order).step_by(2) {
        nonabelian.push(Family::Dihedral(m));
    }
    for m in (8..=max_order).step_by(4) {
        nonabelian.push(Family::Dicyclic { order: m, quaternion_alias: m == 8 });
    }
    for n in 3..=5 {
        if factorial(n).is_some_and(|f| f <= max_order) {
            nonabelian.push(Family::Symmetric(n));
        }
    }
    for n in 4..=5 {
        if factorial(n).is_some_and(|f| f / 2 <= max_order) {
            nonabelian.push(Family::Alternating(n));
        }
    }
    for p in [3, 5] {
        if p * p * p <= max_order {
            nonabelian.push(Family::Heisenberg(p));
            nonabelian.push(Family::ExtraspecialMinus(p));
        }
    }

    for f in &nonabelian {
        push(vec![f.clone()]);
    }
    for (i, f) in nonabelian.iter().enumerate() {
        for g in &nonabelian[i..] {
            let product = f.order().unwrap() * g.order().unwrap();
            if product <= max_order {
                push(vec![f.clone(), g.clone()]);
            }
        }
    }
    specs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup;

    fn build_str(s: &str) -> GroupTable {
        build(&GroupSpec::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["C(6)", "Ab(2,4)", "D(8)", "Q(8)", "Dic(12)", "S(4)", "A(5)",
                  "Heis(3)", "ES+(27)", "ES-(125)", "D(8)xQ(8)", "S(3)xS(3)xC(2)"] {
            let spec = GroupSpec::parse(s).unwrap();
            assert_eq!(spec.expression(), s);
        }
        // whitespace-insensitive
        let spec = GroupSpec::parse(" D(8) x Q(8) ").unwrap();
        assert_eq!(spec.expression(), "D(8)xQ(8)");
    }

    #[test]
    fn parse_errors() {
        assert!(GroupSpec::parse("").is_err());
        assert!(GroupSpec::parse("Z(5)").is_err());
        assert!(GroupSpec::parse("C(0)").is_err());
        assert!(GroupSpec::parse("D(7)").is_err());
        assert!(GroupSpec::parse("Dic(6)").is_err());
        assert!(GroupSpec::parse("Q(12)").is_err());
        assert!(GroupSpec::parse("Heis(4)").is_err());
        assert!(GroupSpec::parse("ES-(26)").is_err());
        assert!(GroupSpec::parse("ES-(64)").is_err(), "4³ is not a prime cube");
        assert!(GroupSpec::parse("C(x)").is_err());
        assert!(GroupSpec::parse("C(3").is_err());
    }

    #[test]
    fn orders_of_families() {
        for (s, order) in [
            ("S(3)", 6),
            ("D(8)xQ(8)", 64),
            ("Heis(5)", 125),
            ("A(5)", 60),
            ("Ab(2,2,2)", 8),
            ("Dic(12)", 12),
        ] {
            let spec = GroupSpec::parse(s).unwrap();
            assert_eq!(spec.order().unwrap(), order, "{s}");
            assert_eq!(build(&spec).unwrap().order(), order, "{s}");
        }
    }

    #[test]
    fn order_cap_enforced_before_building() {
        let spec = GroupSpec::parse("S(5)xS(5)").unwrap();
        assert!(matches!(
            build(&spec),
            Err(Error::OrderCapExceeded { order: 14400, .. })
        ));
    }

    #[test]
    fn heisenberg_3_shape() {
        let g = build_str("Heis(3)");
        assert_eq!(g.order(), 27);
        assert_eq!(subgroup::center(&g).order(), 3);
        assert_eq!(g.exponent(), 3);
    }

    #[test]
    fn extraspecial_property() {
        // center = derived subgroup, both of order p
        for (s, p) in [
            ("Heis(2)", 2),
            ("Heis(3)", 3),
            ("ES+(8)", 2),
            ("ES-(8)", 2),
            ("ES+(27)", 3),
            ("ES-(27)", 3),
            ("ES-(125)", 5),
            ("Heis(5)", 5),
        ] {
            let g = build_str(s);
            let z = subgroup::center(&g);
            let d = crate::commutator::derived_subgroup(&g);
            assert_eq!(z.order(), p, "{s} center");
            assert_eq!(z.members(), d.members(), "{s} center = derived");
        }
    }

    #[test]
    fn es_minus_27_has_exponent_9() {
        let g = build_str("ES-(27)");
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 9);
        // not isomorphic to Heis(3), which has exponent 3
        assert_eq!(build_str("Heis(3)").exponent(), 3);
    }

    #[test]
    fn p2_extraspecials_are_d8_and_q8() {
        let count_order_4 = |g: &GroupTable| (0..8).filter(|&x| g.element_order(x) == 4).count();
        assert_eq!(count_order_4(&build_str("ES+(8)")), 2); // D8
        assert_eq!(count_order_4(&build_str("ES-(8)")), 6); // Q8
        assert_eq!(count_order_4(&build_str("Heis(2)")), 2); // Heis(2) ≅ D8
        assert_eq!(count_order_4(&build_str("Q(8)")), 6);
    }

    #[test]
    fn dihedral_8_structure() {
        let g = build_str("D(8)");
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        assert_eq!(subgroup::center(&g).order(), 2);
    }

    #[test]
    fn symmetric_and_alternating_small() {
        assert_eq!(build_str("S(1)").order(), 1);
        assert_eq!(build_str("S(2)").order(), 2);
        assert_eq!(build_str("A(3)").order(), 3);
        assert_eq!(build_str("A(4)").order(), 12);
        assert_eq!(build_str("A(5)").order(), 60);
        assert!(!build_str("A(5)").is_abelian());
    }

    #[test]
    fn build_is_deterministic() {
        for s in ["S(4)", "Heis(3)", "D(8)xQ(8)"] {
            let spec = GroupSpec::parse(s).unwrap();
            let a = build(&spec).unwrap();
            let b = build(&spec).unwrap();
            assert_eq!(a.table_bytes(), b.table_bytes(), "{s}");
        }
    }

    #[test]
    fn product_center_is_product_of_centers() {
        let a = build_str("D(8)");
        let b = build_str("S(3)");
        let prod = direct_product(&a, &b);
        assert_eq!(prod.order(), 48);
        let za = subgroup::center(&a);
        let zb = subgroup::center(&b);
        let zp = subgroup::center(&prod);
        assert_eq!(zp.order(), za.order() * zb.order());
        for x in za.iter() {
            for y in zb.iter() {
                assert!(zp.contains(x * b.order() + y));
            }
        }
    }

    #[test]
    fn corpus_at_8_is_exactly_the_expected_set() {
        let specs: Vec<String> =
            standard_corpus(8).iter().map(|s| s.expression()).collect();
        let expected = [
            "C(2)", "C(3)", "C(4)", "C(5)", "C(6)", "C(7)", "C(8)",
            "Ab(2,2)", "Ab(2,4)", "Ab(2,2,2)", "D(8)", "Q(8)", "S(3)",
        ];
        assert_eq!(specs.len(), expected.len());
        for e in expected {
            assert!(specs.contains(&e.to_string()), "missing {e}");
        }
    }

    #[test]
    fn corpus_at_27_includes_the_newcomers() {
        let specs: Vec<String> =
            standard_corpus(27).iter().map(|s| s.expression()).collect();
        for e in ["S(4)", "A(4)", "Heis(3)", "ES-(27)", "Dic(12)",
                  "D(10)", "D(12)", "D(14)", "D(16)", "D(18)", "D(20)",
                  "D(22)", "D(24)", "D(26)"] {
            assert!(specs.contains(&e.to_string()), "missing {e}");
        }
        assert!(!specs.contains(&"ES+(27)".to_string()), "ES+(27) duplicates Heis(3)");
    }

    #[test]
    fn corpus_at_64_includes_products() {
        let specs: Vec<String> =
            standard_corpus(64).iter().map(|s| s.expression()).collect();
        for e in ["D(8)xD(8)", "D(8)xQ(8)", "Q(8)xQ(8)", "S(3)xS(3)"] {
            assert!(specs.contains(&e.to_string()), "missing {e}");
        }
    }

    #[test]
    fn corpus_orders_respect_the_filter() {
        for spec in standard_corpus(50) {
            assert!(spec.order().unwrap() <= 50, "{} too large", spec.expression());
        }
    }
}
