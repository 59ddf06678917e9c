//! Complex irreducible character tables via the class-algebra eigenvector
//! method.
//!
//! The class sums of a finite group span a commutative algebra whose
//! structure constants `a[i][j][k]` count the ways a fixed element of class
//! `k` factors as a product of elements from classes `i` and `j`. For every
//! irreducible character χ, the vector of central character values
//! `ω(i) = |C_i|·χ(g_i)/χ(1)` is a simultaneous eigenvector of the structure
//! matrices `M_i`. The table is recovered by:
//!
//! 1. conjugating each `M_i` by `D = diag(1/√|C_i|)`, which turns the
//!    transpose into the inverse-class matrix, so `Σ t_i (N_i + N_iᵀ)` is a
//!    real *symmetric* matrix for any real weights `t`;
//! 2. eigendecomposing one seeded random symmetric combination — its
//!    eigenspaces are one-dimensional (real characters) or two-dimensional
//!    (complex-conjugate pairs, which share every symmetric eigenvalue);
//! 3. splitting each plane into the conjugate pair `(q₁ ± i·q₂)/√2` — for a
//!    genuine pair any orthonormal basis of the plane yields the two
//!    eigenvectors this way;
//! 4. validating every candidate against the exact integer structure
//!    constants and retrying with a fresh combination on any failure.
//!
//! Degrees come from `χ(1)² = |G| / Σ_k |ω(k)|²/|C_k|`, which must be a
//! perfect square of an integer; values follow as `χ(g_k) = χ(1)·ω(k)/|C_k|`.
//! The finished table must then pass row orthogonality and the degree sum
//! `Σ χ(1)² = |G|` exactly — otherwise computation fails loudly rather than
//! returning a doubtful table.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::commutator::element_commutator_subgroup;
use crate::conjugacy::{conjugacy_classes, ConjClasses};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{GroupTable, DEFAULT_SEED};
use crate::subgroup::{self, Subgroup};

/// Structure constants of the class algebra, stored sparsely per first
/// index: `triples[i]` lists `(j, k, a[i][j][k])` for the nonzero entries.
pub struct ClassMatrices {
    count: usize,
    triples: Vec<Vec<(u32, u32, u32)>>,
}

/// Exact integer structure constants `a[i][j][k]`: the number of ways a
/// fixed element of class `k` factors as (element of class i)·(element of
/// class j).
pub fn class_matrices(group: &GroupTable, classes: &ConjClasses) -> ClassMatrices {
    let r = classes.count();
    let n = group.order();
    let mut triples: Vec<Vec<(u32, u32, u32)>> = vec![Vec::new(); r];
    let mut counts = vec![0u32; r * r];
    let mut touched: Vec<usize> = Vec::new();
    for k in 0..r {
        let z = classes.rep(k);
        for x in 0..n {
            let i = classes.class_of(x);
            let j = classes.class_of(group.mul(group.inv(x), z));
            let cell = i * r + j;
            if counts[cell] == 0 {
                touched.push(cell);
            }
            counts[cell] += 1;
        }
        touched.sort_unstable();
        for &cell in &touched {
            triples[cell / r].push((
                (cell % r) as u32,
                k as u32,
                std::mem::take(&mut counts[cell]),
            ));
        }
        touched.clear();
    }
    for t in &mut triples {
        t.sort_unstable();
    }
    ClassMatrices { count: r, triples }
}

impl ClassMatrices {
    pub fn count(&self) -> usize {
        self.count
    }

    /// `a[i][j][k]`, zero if absent.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> u32 {
        let t = &self.triples[i];
        match t.binary_search_by(|&(tj, tk, _)| (tj, tk).cmp(&(j as u32, k as u32))) {
            Ok(pos) => t[pos].2,
            Err(_) => 0,
        }
    }

    /// Checks the pair-counting identity `Σ_k a[i][j][k]·|C_k| = |C_i|·|C_j|`
    /// and `a[0][j][k] = δ_jk`.
    pub fn validate(&self, classes: &ConjClasses) -> Result<()> {
        let r = self.count;
        let mut sums = vec![0u64; r * r];
        for (i, t) in self.triples.iter().enumerate() {
            for &(j, k, a) in t {
                sums[i * r + j as usize] += a as u64 * classes.size(k as usize) as u64;
            }
        }
        for i in 0..r {
            for j in 0..r {
                let expect = (classes.size(i) * classes.size(j)) as u64;
                if sums[i * r + j] != expect {
                    return Err(Error::Internal(format!(
                        "class matrix pair count fails at ({i}, {j})"
                    )));
                }
            }
        }
        for j in 0..r {
            for k in 0..r {
                let expect = u32::from(j == k);
                if self.coeff(0, j, k) != expect {
                    return Err(Error::Internal(format!(
                        "identity class matrix is not the identity at ({j}, {k})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// One irreducible character: complex values indexed by conjugacy class.
#[derive(Clone, Debug)]
pub struct Character {
    values: Vec<Complex64>,
    degree: usize,
}

impl Character {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, class: usize) -> Complex64 {
        self.values[class]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }
}

/// The full table of irreducible characters of a group.
#[derive(Clone, Debug)]
pub struct CharTable {
    order: usize,
    classes: ConjClasses,
    chars: Vec<Character>,
}

impl CharTable {
    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn classes(&self) -> &ConjClasses {
        &self.classes
    }

    pub fn count(&self) -> usize {
        self.chars.len()
    }

    pub fn char(&self, i: usize) -> &Character {
        &self.chars[i]
    }

    pub fn chars(&self) -> &[Character] {
        &self.chars
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.chars.iter().map(|c| c.degree).collect()
    }

    /// Maximum row-orthogonality residual over all pairs of characters:
    /// `|(1/|G|)·Σ_k |C_k|·χ(k)·conj(ψ(k)) − δ_χψ|`.
    pub fn orthogonality_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for (a, x) in self.chars.iter().enumerate() {
            for (b, y) in self.chars.iter().enumerate().skip(a) {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..self.classes.count() {
                    acc += self.classes.size(k) as f64 * x.values[k] * y.values[k].conj();
                }
                acc /= self.order as f64;
                let expect = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((acc - Complex64::new(expect, 0.0)).norm());
            }
        }
        worst
    }
}

/// Numeric knobs for table computation.
#[derive(Clone, Debug)]
pub struct CharTableOptions {
    /// Seed for the random class-matrix combinations.
    pub seed: u64,
    /// Tolerance for orthogonality and membership predicates.
    pub tolerance: f64,
    /// Tolerance for eigenvector residuals against the integer structure
    /// constants (relative to the entry scale).
    pub eig_tol: f64,
    /// Retry budget for degenerate random combinations.
    pub max_attempts: usize,
}

impl Default for CharTableOptions {
    fn default() -> Self {
        CharTableOptions {
            seed: DEFAULT_SEED,
            tolerance: 1e-6,
            eig_tol: 1e-8,
            max_attempts: 5,
        }
    }
}

pub fn character_table(group: &GroupTable) -> Result<CharTable> {
    character_table_with(group, &CharTableOptions::default())
}

pub fn character_table_with(group: &GroupTable, opts: &CharTableOptions) -> Result<CharTable> {
    let classes = conjugacy_classes(group);
    character_table_for(group, classes, opts)
}

/// Computes the table for already-known conjugacy classes.
pub fn character_table_for(
    group: &GroupTable,
    classes: ConjClasses,
    opts: &CharTableOptions,
) -> Result<CharTable> {
    let cm = class_matrices(group, &classes);
    cm.validate(&classes)?;
    let r = classes.count();
    let order = group.order();
    let sizes: Vec<f64> = classes.sizes().iter().map(|&s| s as f64).collect();

    let mut last_failure = String::new();
    for attempt in 0..opts.max_attempts {
        let mut rng = ChaCha20Rng::seed_from_u64(opts.seed.wrapping_add(attempt as u64));
        let weights: Vec<f64> = (0..r).map(|_| rng.random_range(-1.0..1.0)).collect();

        // A = Σ_i t_i (N_i + N_iᵀ) with N_i = D M_i D⁻¹, D = diag(1/√|C_i|).
        let mut a = DMatrix::<f64>::zeros(r, r);
        for (i, t) in cm.triples.iter().enumerate() {
            for &(j, k, c) in t {
                let (j, k) = (j as usize, k as usize);
                let w = weights[i] * c as f64 * (sizes[k] / sizes[j]).sqrt();
                a[(j, k)] += w;
                a[(k, j)] += w;
            }
        }

        let eig = nalgebra::linalg::SymmetricEigen::new(a);
        let mut idx: Vec<usize> = (0..r).collect();
        idx.sort_by(|&x, &y| eig.eigenvalues[x].total_cmp(&eig.eigenvalues[y]));
        let scale = idx
            .iter()
            .map(|&i| eig.eigenvalues[i].abs())
            .fold(1.0f64, f64::max);
        let gap_tol = 1e-7 * scale;

        match split_eigenspaces(&eig, &idx, gap_tol, &cm, &sizes, order, opts) {
            Ok(mut chars) => {
                sort_characters(&mut chars);
                let table = CharTable { order, classes: classes.clone(), chars };
                match validate_table(&table, opts) {
                    Ok(()) => return Ok(table),
                    Err(e) => last_failure = e.to_string(),
                }
            }
            Err(e) => last_failure = e.to_string(),
        }
    }
    Err(Error::Numeric(format!(
        "no valid character table after {} attempts: {last_failure}",
        opts.max_attempts
    )))
}

/// Walks the sorted eigenvalues, groups them by `gap_tol`, and converts each
/// eigenspace into one character (dimension 1) or a conjugate pair
/// (dimension 2). Larger eigenspaces mean the random combination collided
/// and the caller should retry.
fn split_eigenspaces(
    eig: &nalgebra::linalg::SymmetricEigen<f64, nalgebra::Dyn>,
    idx: &[usize],
    gap_tol: f64,
    cm: &ClassMatrices,
    sizes: &[f64],
    order: usize,
    opts: &CharTableOptions,
) -> Result<Vec<Character>> {
    let r = idx.len();
    let mut chars = Vec::with_capacity(r);
    let mut start = 0;
    while start < r {
        let mut end = start + 1;
        while end < r
            && eig.eigenvalues[idx[end]] - eig.eigenvalues[idx[end - 1]] <= gap_tol
        {
            end += 1;
        }
        match end - start {
            1 => {
                let q = eig.eigenvectors.column(idx[start]);
                let u: Vec<Complex64> =
                    q.iter().map(|&x| Complex64::new(x, 0.0)).collect();
                chars.push(character_from_eigenvector(&u, cm, sizes, order, opts)?);
            }
            2 => {
                let q1 = eig.eigenvectors.column(idx[start]);
                let q2 = eig.eigenvectors.column(idx[start + 1]);
                for sign in [1.0f64, -1.0] {
                    let u: Vec<Complex64> = q1
                        .iter()
                        .zip(q2.iter())
                        .map(|(&x, &y)| Complex64::new(x, sign * y))
                        .collect();
                    chars.push(character_from_eigenvector(&u, cm, sizes, order, opts)?);
                }
            }
            m => {
                return Err(Error::Numeric(format!(
                    "eigenvalue collision of multiplicity {m}"
                )))
            }
        }
        start = end;
    }
    Ok(chars)
}

/// Converts a candidate eigenvector `u` (in the D-conjugated frame) into a
/// character, verifying `M_i ω = ω_i ω` against the exact integer structure
/// constants for every class and integrality of the degree.
fn character_from_eigenvector(
    u: &[Complex64],
    cm: &ClassMatrices,
    sizes: &[f64],
    order: usize,
    opts: &CharTableOptions,
) -> Result<Character> {
    let r = u.len();
    // ω_k = u_k √|C_k| / u_0; for a real eigenvector u_0 = χ(1)/√|G| ≠ 0.
    let u0 = u[0];
    if u0.norm() < 1e-12 {
        return Err(Error::Numeric("identity coordinate of eigenvector vanished".into()));
    }
    let omega: Vec<Complex64> =
        (0..r).map(|k| u[k] * sizes[k].sqrt() / u0).collect();

    let omega_max = omega.iter().map(|w| w.norm()).fold(1.0f64, f64::max);
    for (i, t) in cm.triples.iter().enumerate() {
        let mut lhs = vec![Complex64::new(0.0, 0.0); r];
        for &(j, k, c) in t {
            lhs[j as usize] += c as f64 * omega[k as usize];
        }
        let wi = omega[i];
        let allowed = opts.eig_tol * omega_max * wi.norm().max(1.0);
        for j in 0..r {
            if (lhs[j] - wi * omega[j]).norm() > allowed {
                return Err(Error::Numeric(format!(
                    "eigenvector residual too large on class matrix {i}"
                )));
            }
        }
    }

    // χ(1)² = |G| / Σ_k |ω_k|²/|C_k|
    let h: f64 = (0..r).map(|k| omega[k].norm_sqr() / sizes[k]).sum();
    let degree_f = (order as f64 / h).sqrt();
    let degree = degree_f.round();
    if degree < 1.0 || (degree_f - degree).abs() > 1e-6 * degree {
        return Err(Error::Numeric(format!("non-integral degree {degree_f}")));
    }

    let values: Vec<Complex64> =
        (0..r).map(|k| degree * omega[k] / sizes[k]).collect();
    Ok(Character { values, degree: degree as usize })
}

/// Deterministic character order: by degree, then by values compared on a
/// nanoscale grid.
fn sort_characters(chars: &mut [Character]) {
    let key = |c: &Character| -> (usize, Vec<(i64, i64)>) {
        let grid = |x: f64| (x * 1e9).round() as i64;
        (c.degree, c.values.iter().map(|v| (grid(v.re), grid(v.im))).collect())
    };
    chars.sort_by(|a, b| key(a).cmp(&key(b)));
}

fn validate_table(table: &CharTable, opts: &CharTableOptions) -> Result<()> {
    let r = table.classes.count();
    if table.chars.len() != r {
        return Err(Error::Numeric(format!(
            "{} characters recovered for {r} classes",
            table.chars.len()
        )));
    }
    let degree_sq_sum: usize = table.chars.iter().map(|c| c.degree * c.degree).sum();
    if degree_sq_sum != table.order {
        return Err(Error::Numeric(format!(
            "degree squares sum to {degree_sq_sum}, group order is {}",
            table.order
        )));
    }
    for c in &table.chars {
        let d = c.degree as f64;
        if (c.values[0] - Complex64::new(d, 0.0)).norm() > opts.tolerance * d {
            return Err(Error::Numeric("character value at identity is not the degree".into()));
        }
        if c.values.iter().any(|v| v.norm() > d + opts.tolerance) {
            return Err(Error::Numeric("character value exceeds the degree".into()));
        }
    }
    let residual = table.orthogonality_residual();
    if residual > opts.tolerance {
        return Err(Error::Numeric(format!(
            "row orthogonality residual {residual:e} above tolerance"
        )));
    }
    Ok(())
}

/// `ker(χ) = {g : χ(g) = χ(1)}`, always a normal subgroup.
pub fn char_kernel(
    group: &GroupTable,
    table: &CharTable,
    chi: &Character,
    tolerance: f64,
) -> Result<Subgroup> {
    let classes = table.classes();
    let d = chi.degree as f64;
    let target = Complex64::new(d, 0.0);
    let n = group.order();
    let members = ElemSet::from_indices(
        n,
        (0..n).filter(|&g| (chi.value(classes.class_of(g)) - target).norm() < tolerance),
    );
    // Closure failure means the tolerance misclassified some element.
    let elems: Vec<usize> = members.iter().collect();
    for &x in &elems {
        for &y in &elems {
            if !members.contains(group.mul(x, y)) {
                return Err(Error::Numeric(
                    "character kernel set is not closed under multiplication".into(),
                ));
            }
        }
    }
    let sub = Subgroup::from_members(group, members);
    if !subgroup::is_normal(group, &sub) {
        return Err(Error::Internal("character kernel is not normal".into()));
    }
    Ok(sub)
}

/// `Z(χ) = {g : |χ(g)| = χ(1)}`, computed from the table and cross-checked
/// against the exact characterization `{g : [g,G] ≤ ker(χ)}`.
pub fn char_center(
    group: &GroupTable,
    table: &CharTable,
    chi: &Character,
    tolerance: f64,
) -> Result<Subgroup> {
    let egs: Vec<Subgroup> = table
        .classes()
        .reps()
        .iter()
        .map(|&rep| element_commutator_subgroup(group, rep))
        .collect::<Result<_>>()?;
    char_center_with_egs(group, table, chi, tolerance, &egs)
}

/// As [`char_center`], with the per-class `[g,G]` subgroups supplied by the
/// caller (they only depend on the class, so analysis pipelines share them).
pub fn char_center_with_egs(
    group: &GroupTable,
    table: &CharTable,
    chi: &Character,
    tolerance: f64,
    egs_by_class: &[Subgroup],
) -> Result<Subgroup> {
    let classes = table.classes();
    let d = chi.degree as f64;
    let n = group.order();
    let members = ElemSet::from_indices(
        n,
        (0..n).filter(|&g| (chi.value(classes.class_of(g)).norm() - d).abs() < tolerance),
    );

    let kernel = char_kernel(group, table, chi, tolerance)?;
    let exact = ElemSet::from_indices(
        n,
        (0..n).filter(|&g| {
            egs_by_class[classes.class_of(g)].members().is_subset(kernel.members())
        }),
    );
    if members != exact {
        return Err(Error::Internal(format!(
            "character center routes disagree: modulus route has {} members, \
             commutator route has {}",
            members.len(),
            exact.len()
        )));
    }
    let sub = Subgroup::from_members(group, members);
    if !subgroup::is_normal(group, &sub) {
        return Err(Error::Internal("character center is not normal".into()));
    }
    Ok(sub)
}

/// Indices of the characters whose kernel does not contain `n`
/// (classically written Irr(G | N)).
pub fn irr_over(
    group: &GroupTable,
    table: &CharTable,
    n: &Subgroup,
    tolerance: f64,
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, chi) in table.chars.iter().enumerate() {
        let ker = char_kernel(group, table, chi, tolerance)?;
        if !n.members().is_subset(ker.members()) {
            out.push(i);
        }
    }
    Ok(out)
}
