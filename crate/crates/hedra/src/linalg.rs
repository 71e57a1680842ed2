//! Exact rational matrices and the elimination kernel.
//!
//! Determinants use fraction-free Bareiss elimination over scaled integer
//! rows so intermediate values stay bounded by subdeterminant sizes.
//! Kernels, ranks and affine solves run ordinary Gaussian elimination over
//! the rationals; everything is exact.

use std::collections::BTreeSet;

use itertools::Itertools;
use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{encoding_length, Rat};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dim(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dim("ragged row lengths".to_string()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds from integer literals; test and example convenience.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| Rat::from_integer(BigInt::from(v))))
            .collect();
        let c = rows.first().map_or(0, |r| r.len());
        Self::new(rows.len(), c, data).expect("literal rows must be rectangular")
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.entry_mut(j, i) = self.entry(i, j).clone();
            }
        }
        t
    }

    /// Submatrix on the given row and column index sets, preserving order.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let data = row_idx
            .iter()
            .flat_map(|&i| col_idx.iter().map(move |&j| self.entry(i, j).clone()))
            .collect();
        Self {
            rows: row_idx.len(),
            cols: col_idx.len(),
            data,
        }
    }

    pub fn mat_vec(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.cols {
            return Err(Error::dim(format!(
                "matrix has {} columns, vector has {} entries",
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), x)).collect())
    }

    pub fn mat_mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::dim("inner dimensions differ".to_string()));
        }
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.entry(k, j);
                    *out.entry_mut(i, j) += add;
                }
            }
        }
        Ok(out)
    }

    /// Bit size of the matrix: `mn + Σ Σ ⟨M_ij⟩`.
    pub fn encoding_length(&self) -> u64 {
        (self.rows * self.cols) as u64 + self.data.iter().map(encoding_length).sum::<u64>()
    }

    /// Largest entry encoding length (0 for an empty matrix).
    pub fn max_encoding_length(&self) -> u64 {
        self.data.iter().map(encoding_length).max().unwrap_or(0)
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn scale(a: &[Rat], s: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * s).collect()
}

pub fn add_scaled(a: &[Rat], b: &[Rat], s: &Rat) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y * s).collect()
}

pub fn neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(Rat::is_zero)
}

/// Scales a nonzero rational vector to the primitive integer vector with
/// the same direction: entries integral with gcd 1. Returns the positive
/// scale factor applied. The zero vector is returned unchanged.
pub fn to_primitive(v: &[Rat]) -> (Vec<Rat>, Rat) {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut gcd = BigInt::zero();
    for x in v {
        gcd = gcd.gcd(&(x.numer() * &lcm / x.denom()));
    }
    if gcd.is_zero() {
        return (v.to_vec(), Rat::one());
    }
    let factor = Rat::new(lcm, gcd);
    (scale(v, &factor), factor)
}

/// Primitive form with the first nonzero entry positive. Only meaningful
/// for sign-invariant data (kernel vectors, equation rows).
pub fn to_primitive_signed(v: &[Rat]) -> Vec<Rat> {
    let (mut p, _) = to_primitive(v);
    if let Some(first) = p.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            p = neg(&p);
        }
    }
    p
}

/// Exact determinant by fraction-free Bareiss elimination on the
/// row-scaled integer matrix. The 0x0 determinant is 1.
pub fn determinant(m: &RatMatrix) -> Result<Rat> {
    if !m.is_square() {
        return Err(Error::dim(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Rat::one());
    }
    // Scale each row to integers, remembering the factors.
    let mut z: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut denom_product = BigInt::one();
    for i in 0..n {
        let mut lcm = BigInt::one();
        for x in m.row(i) {
            lcm = lcm.lcm(x.denom());
        }
        z.push(
            m.row(i)
                .iter()
                .map(|x| x.numer() * &lcm / x.denom())
                .collect(),
        );
        denom_product *= lcm;
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if z[k][k].is_zero() {
            match (k + 1..n).find(|&i| !z[i][k].is_zero()) {
                Some(p) => {
                    z.swap(k, p);
                    sign = -sign;
                }
                None => return Ok(Rat::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &z[i][j] * &z[k][k] - &z[i][k] * &z[k][j];
                z[i][j] = num / &prev;
            }
            z[i][k] = BigInt::zero();
        }
        prev = z[k][k].clone();
    }
    let det_int = if sign < 0 { -&z[n - 1][n - 1] } else { z[n - 1][n - 1].clone() };
    Ok(Rat::new(det_int, denom_product))
}

/// Row echelon data produced by exact Gaussian elimination.
struct Echelon {
    /// Reduced rows (RREF), zero rows removed.
    rows: Vec<Vec<Rat>>,
    /// Pivot column of each reduced row.
    pivots: Vec<usize>,
}

fn rref(m: &RatMatrix) -> Echelon {
    let mut rows: Vec<Vec<Rat>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..m.cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        rows[r] = scale(&rows[r], &inv);
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = -rows[i][col].clone();
                rows[i] = add_scaled(&rows[i], &rows[r], &f);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

pub fn rank(m: &RatMatrix) -> usize {
    rref(m).pivots.len()
}

/// Linearly independent spanning set of `ker(M)`, each vector primitive
/// with its first nonzero entry positive. Cardinality is `n - rank(M)`.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rat>> {
    let ech = rref(m);
    let pivot_set: BTreeSet<usize> = ech.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Rat::zero(); m.cols];
        v[free] = Rat::one();
        for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(to_primitive_signed(&v));
    }
    basis
}

/// Solves `Ax = b` for regular square `A` by exact elimination. The result
/// satisfies `Ax = b` exactly (equivalently, Cramer's quotients).
pub fn cramer_solve(a: &RatMatrix, b: &[Rat]) -> Result<Vec<Rat>> {
    if !a.is_square() {
        return Err(Error::dim(format!("solve with {}x{} matrix", a.rows, a.cols)));
    }
    if b.len() != a.rows {
        return Err(Error::dim(format!(
            "matrix is {0}x{0} but right-hand side has {1} entries",
            a.rows,
            b.len()
        )));
    }
    match solve_affine(a, b)? {
        AffineSolution::Solution { point, kernel } if kernel.is_empty() => Ok(point),
        _ => Err(Error::Singular("matrix is not regular".to_string())),
    }
}

/// Outcome of an affine solve `Ax = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    /// One particular solution plus a basis of `ker(A)`.
    Solution {
        point: Vec<Rat>,
        kernel: Vec<Vec<Rat>>,
    },
    /// The equations are contradictory.
    Infeasible,
}

/// Solves the linear equation system `Ax = b`, reporting infeasibility
/// rather than erring on it.
pub fn solve_affine(a: &RatMatrix, b: &[Rat]) -> Result<AffineSolution> {
    if b.len() != a.rows {
        return Err(Error::dim(format!(
            "matrix has {} rows but right-hand side has {} entries",
            a.rows,
            b.len()
        )));
    }
    // Eliminate on the augmented matrix.
    let mut aug_rows: Vec<Vec<Rat>> = (0..a.rows)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let aug = RatMatrix::from_rows(std::mem::take(&mut aug_rows))?;
    let ech = rref(&aug);
    let n = a.cols;
    for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
        if pc == n {
            debug_assert!(!row[n].is_zero());
            return Ok(AffineSolution::Infeasible);
        }
    }
    let mut point = vec![Rat::zero(); n];
    for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
        point[pc] = row[n].clone();
    }
    Ok(AffineSolution::Solution {
        point,
        kernel: kernel_basis(a),
    })
}

/// Exact inverse of a regular square matrix.
pub fn invert(m: &RatMatrix) -> Result<RatMatrix> {
    if !m.is_square() {
        return Err(Error::dim(format!("inverse of a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut aug = RatMatrix::zero(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            *aug.entry_mut(i, j) = m.entry(i, j).clone();
        }
        *aug.entry_mut(i, n + i) = Rat::one();
    }
    let ech = rref(&aug);
    if ech.pivots.len() < n || ech.pivots.iter().take(n).any(|&p| p >= n) {
        return Err(Error::Singular("matrix is not invertible".to_string()));
    }
    let mut inv = RatMatrix::zero(n, n);
    for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
        for j in 0..n {
            *inv.entry_mut(pc, j) = row[n + j].clone();
        }
    }
    Ok(inv)
}

/// All quotients p/q of subdeterminants of `m` (orders 0 through
/// `max_order`, the empty determinant counting as 1), closed under sign.
///
/// `max_submatrices` caps the enumeration; exceeding it is a resource
/// error, never a silent truncation.
pub fn delta_set(m: &RatMatrix, max_order: usize, max_submatrices: usize) -> Result<BTreeSet<Rat>> {
    let max_order = max_order.min(m.rows).min(m.cols);
    let mut count: usize = 0;
    let mut dets: BTreeSet<Rat> = BTreeSet::new();
    dets.insert(Rat::one());
    for order in 1..=max_order {
        for row_idx in (0..m.rows).combinations(order) {
            for col_idx in (0..m.cols).combinations(order) {
                count += 1;
                if count > max_submatrices {
                    return Err(Error::cap(format!(
                        "more than {max_submatrices} submatrices up to order {max_order}"
                    )));
                }
                dets.insert(determinant(&m.submatrix(&row_idx, &col_idx))?);
            }
        }
    }
    let signed: Vec<Rat> = dets
        .iter()
        .flat_map(|d| [d.clone(), -d.clone()])
        .collect();
    let mut quotients = BTreeSet::new();
    for p in &signed {
        for q in &signed {
            if !q.is_zero() {
                quotients.insert(p / q);
            }
        }
    }
    Ok(quotients)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use num::Zero;
    use rand::{Rng, SeedableRng};

    #[test]
    fn determinant_base_cases() {
        assert_eq!(determinant(&RatMatrix::zero(0, 0)).unwrap(), rat_int(1));
        assert_eq!(determinant(&RatMatrix::identity(3)).unwrap(), rat_int(1));
        let m = RatMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(determinant(&m).unwrap(), rat_int(-2));
        assert!(determinant(&RatMatrix::zero(2, 3)).is_err());
    }

    #[test]
    fn determinant_is_multiplicative_and_alternating() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let rand_mat = |rng: &mut rand_chacha::ChaCha8Rng| {
                RatMatrix::new(
                    3,
                    3,
                    (0..9)
                        .map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
                        .collect(),
                )
                .unwrap()
            };
            let a = rand_mat(&mut rng);
            let b = rand_mat(&mut rng);
            let prod = a.mat_mul(&b).unwrap();
            assert_eq!(
                determinant(&prod).unwrap(),
                determinant(&a).unwrap() * determinant(&b).unwrap()
            );
            // Swapping two rows negates the determinant.
            let mut swapped = a.row_vecs();
            swapped.swap(0, 2);
            let swapped = RatMatrix::from_rows(swapped).unwrap();
            assert_eq!(determinant(&swapped).unwrap(), -determinant(&a).unwrap());
        }
    }

    #[test]
    fn cramer_solve_examples() {
        let id = RatMatrix::identity(2);
        assert_eq!(
            cramer_solve(&id, &[rat_int(5), rat_int(-7)]).unwrap(),
            vec![rat_int(5), rat_int(-7)]
        );
        let diag = RatMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(
            cramer_solve(&diag, &[rat_int(1), rat_int(1)]).unwrap(),
            vec![rat(1, 2), rat(1, 3)]
        );
        let a = RatMatrix::from_i64(&[&[1, 1], &[1, -1]]);
        let b = [rat_int(1), rat_int(0)];
        let x = cramer_solve(&a, &b).unwrap();
        assert_eq!(x, vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(a.mat_vec(&x).unwrap(), b.to_vec());
        let sing = RatMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert!(matches!(cramer_solve(&sing, &b), Err(Error::Singular(_))));
    }

    #[test]
    fn kernel_basis_examples() {
        let m = RatMatrix::from_i64(&[&[1, 1]]);
        assert_eq!(kernel_basis(&m), vec![vec![rat_int(1), rat_int(-1)]]);
        assert!(kernel_basis(&RatMatrix::identity(2)).is_empty());
        let wide = RatMatrix::from_i64(&[&[1, 2, 3]]);
        let basis = kernel_basis(&wide);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(is_zero_vec(&wide.mat_vec(v).unwrap()));
            let first = v.iter().find(|x| !x.is_zero()).unwrap();
            assert!(first > &Rat::zero());
        }
        assert_eq!(rank(&wide), 1);
    }

    #[test]
    fn kernel_dimension_matches_rank() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            let m = RatMatrix::new(
                rows,
                cols,
                (0..rows * cols)
                    .map(|_| rat_int(rng.gen_range(-3..=3)))
                    .collect(),
            )
            .unwrap();
            let basis = kernel_basis(&m);
            assert_eq!(basis.len(), cols - rank(&m));
            for v in &basis {
                assert!(is_zero_vec(&m.mat_vec(v).unwrap()));
            }
        }
    }

    #[test]
    fn solve_affine_examples() {
        assert_eq!(rank(&RatMatrix::identity(3)), 3);
        let m = RatMatrix::from_i64(&[&[1, 1]]);
        match solve_affine(&m, &[rat_int(2)]).unwrap() {
            AffineSolution::Solution { point, kernel } => {
                assert_eq!(point, vec![rat_int(2), rat_int(0)]);
                assert_eq!(kernel, vec![vec![rat_int(1), rat_int(-1)]]);
            }
            AffineSolution::Infeasible => panic!("solvable system"),
        }
        let contradictory = RatMatrix::from_i64(&[&[1], &[1]]);
        assert_eq!(
            solve_affine(&contradictory, &[rat_int(0), rat_int(1)]).unwrap(),
            AffineSolution::Infeasible
        );
    }

    #[test]
    fn invert_round_trips() {
        let a = RatMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = invert(&a).unwrap();
        assert_eq!(a.mat_mul(&inv).unwrap(), RatMatrix::identity(2));
        assert!(invert(&RatMatrix::from_i64(&[&[1, 1], &[2, 2]])).is_err());
    }

    #[test]
    fn delta_set_examples() {
        let one = RatMatrix::from_i64(&[&[1]]);
        let d = delta_set(&one, 1, 1000).unwrap();
        assert_eq!(d, BTreeSet::from([rat_int(1), rat_int(-1)]));

        let two = RatMatrix::from_i64(&[&[2]]);
        let d = delta_set(&two, 1, 1000).unwrap();
        let expect = BTreeSet::from([
            rat_int(1),
            rat_int(-1),
            rat_int(2),
            rat_int(-2),
            rat(1, 2),
            rat(-1, 2),
        ]);
        assert_eq!(d, expect);

        let m = RatMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let d = delta_set(&m, 2, 1000).unwrap();
        assert!(d.contains(&rat_int(-2)));
        assert!(d.contains(&rat(1, 2)));
        // Contains every entry and its negation, and ±1.
        for v in [1, -1, 2, -2, 3, -3, 4, -4] {
            assert!(d.contains(&rat_int(v)));
        }
    }

    #[test]
    fn delta_set_cap_is_enforced() {
        let m = RatMatrix::identity(4);
        assert!(matches!(delta_set(&m, 4, 3), Err(Error::Resource(_))));
    }

    #[test]
    fn primitive_normalization() {
        let (p, f) = to_primitive(&[rat(1, 2), rat(-3, 4)]);
        assert_eq!(p, vec![rat_int(2), rat_int(-3)]);
        assert_eq!(f, rat_int(4));
        let signed = to_primitive_signed(&[rat(-1, 2), rat(3, 4)]);
        assert_eq!(signed, vec![rat_int(2), rat_int(-3)]);
    }
}
