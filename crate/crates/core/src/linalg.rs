//! Dense matrices over exact rings: integer diagonalization with transforms,
//! integer kernels and solves, and rational row reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Ring element usable as a matrix entry.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
}

macro_rules! scalar_impl {
    ($t:ty) => {
        impl Scalar for $t {
            fn add_ref(&self, o: &Self) -> Self {
                self + o
            }
            fn sub_ref(&self, o: &Self) -> Self {
                self - o
            }
            fn mul_ref(&self, o: &Self) -> Self {
                self * o
            }
        }
    };
}

scalar_impl!(BigInt);
scalar_impl!(BigRational);

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.cols.max(1))).finish()
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; `None` if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        let n = rows.len();
        Some(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Columns `range` of `self`.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Self {
        Self::from_fn(self.rows, range.len(), |i, j| self[(i, range.start + j)].clone())
    }

    /// Rows `range` of `self`.
    pub fn row_block(&self, range: std::ops::Range<usize>) -> Self {
        Self::from_fn(range.len(), self.cols, |i, j| self[(range.start + i, j)].clone())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add_ref(&a.mul_ref(b));
                    }
                }
                acc
            })
            .collect()
    }

    /// `row_a += c * row_b`.
    pub fn add_row_multiple(&mut self, a: usize, b: usize, c: &T) {
        for j in 0..self.cols {
            let t = self[(b, j)].mul_ref(c);
            if !t.is_zero() {
                self[(a, j)] = self[(a, j)].add_ref(&t);
            }
        }
    }

    /// `col_a += c * col_b`.
    pub fn add_col_multiple(&mut self, a: usize, b: usize, c: &T) {
        for i in 0..self.rows {
            let t = self[(i, b)].mul_ref(c);
            if !t.is_zero() {
                self[(i, a)] = self[(i, a)].add_ref(&t);
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let rows: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_rows(rows).expect("ragged integer matrix")
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }
}

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal.
///
/// The first `rank` diagonal entries of `D` are nonzero; the rest vanish.
/// No divisibility is imposed between diagonal entries.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub diag: Vec<BigInt>,
    pub rank: usize,
}

pub fn diagonalize(a: &IntMatrix) -> Diagonalization {
    let (r, c) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut t = 0;
    while t < r.min(c) {
        let Some((pi, pj)) = min_abs_entry(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // Move the smallest remainder in row or column t to the pivot.
            let mut best: Option<(usize, usize)> = None;
            let mut best_abs: Option<BigInt> = None;
            let cands = (t + 1..r).map(|i| (i, t)).chain((t + 1..c).map(|j| (t, j)));
            for (i, j) in cands {
                if !d[(i, j)].is_zero() {
                    let a = d[(i, j)].abs();
                    if best_abs.as_ref().is_none_or(|b| &a < b) {
                        best_abs = Some(a);
                        best = Some((i, j));
                    }
                }
            }
            let (i, j) = best.expect("unclean pivot without remainder");
            if i != t {
                d.swap_rows(t, i);
                u.swap_rows(t, i);
            } else {
                d.swap_cols(t, j);
                v.swap_cols(t, j);
            }
        }
        t += 1;
    }
    let diag = (0..r.min(c)).map(|i| d[(i, i)].clone()).collect();
    Diagonalization { u, v, diag, rank: t }
}

fn min_abs_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if a.is_one() {
                return Some((i, j));
            }
            if best.as_ref().is_none_or(|(_, b)| &a < b) {
                best = Some(((i, j), a));
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Columns form a ℤ-basis of the integer kernel of `a`.
pub fn int_kernel(a: &IntMatrix) -> IntMatrix {
    let dz = diagonalize(a);
    dz.v.columns(dz.rank..a.cols())
}

/// An integer solution of `a x = b`, if one exists.
pub fn int_solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let dz = diagonalize(a);
    let ub = dz.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, rhs) in ub.iter().enumerate() {
        if i < dz.rank {
            let (q, rem) = rhs.div_rem(&dz.diag[i]);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !rhs.is_zero() {
            return None;
        }
    }
    Some(dz.v.mul_vec(&y))
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(a: &mut RatMatrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let Some(p) = (row..a.rows()).find(|&i| !a[(i, col)].is_zero()) else { continue };
        a.swap_rows(row, p);
        let inv = a[(row, col)].recip();
        for j in col..a.cols() {
            a[(row, j)] = &a[(row, j)] * &inv;
        }
        for i in 0..a.rows() {
            if i != row && !a[(i, col)].is_zero() {
                let f = -a[(i, col)].clone();
                a.add_row_multiple(i, row, &f);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rational_rank(a: &RatMatrix) -> usize {
    rref(&mut a.clone()).len()
}

/// Columns form a basis of the rational kernel of `a`.
pub fn rational_kernel(a: &RatMatrix) -> RatMatrix {
    let mut r = a.clone();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..a.cols()).filter(|j| !pivots.contains(j)).collect();
    let mut k = RatMatrix::zeros(a.cols(), free.len());
    for (n, &f) in free.iter().enumerate() {
        k[(f, n)] = BigRational::one();
        for (row, &p) in pivots.iter().enumerate() {
            k[(p, n)] = -r[(row, f)].clone();
        }
    }
    k
}

/// A rational solution of `a x = b`, if the system is consistent.
pub fn rational_solve(a: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let cols: Vec<Vec<BigRational>> = vec![b.to_vec()];
    let aug = a.hstack(&RatMatrix::from_columns(a.rows(), &cols));
    let mut r = aug;
    let pivots = rref(&mut r);
    if pivots.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); a.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, a.cols())].clone();
    }
    Some(x)
}

/// Exact determinant by fraction arithmetic.
pub fn rational_det(a: &RatMatrix) -> BigRational {
    assert!(a.is_square());
    let mut m = a.clone();
    let n = m.rows();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[(i, col)].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap_rows(p, col);
            det = -det;
        }
        det = &det * &m[(col, col)];
        let inv = m[(col, col)].recip();
        for i in col + 1..n {
            if !m[(i, col)].is_zero() {
                let f = -(&m[(i, col)] * &inv);
                m.add_row_multiple(i, col, &f);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn diagonalization_reconstructs() {
        let a = IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let dz = diagonalize(&a);
        let d = &(&dz.u * &a) * &dz.v;
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!(d[(i, j)].is_zero());
                }
            }
        }
        assert_eq!(dz.rank, 3);
        let prod: BigInt = dz.diag.iter().product();
        assert_eq!(prod.abs(), BigInt::from(144));
    }

    #[test]
    fn integer_kernel_is_saturated() {
        let a = IntMatrix::from_i64(&[vec![2, 4, 6]]);
        let k = int_kernel(&a);
        assert_eq!(k.cols(), 2);
        assert!((&a * &k).is_zero());
        assert!(int_solve(&k, &[BigInt::from(1), BigInt::from(1), BigInt::from(-1)]).is_some());
    }

    #[test]
    fn integer_solve_detects_inconsistency() {
        let a = IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]]);
        assert!(int_solve(&a, &[BigInt::from(1), BigInt::from(3)]).is_none());
        let x = int_solve(&a, &[BigInt::from(4), BigInt::from(3)]).unwrap();
        assert_eq!(x, vec![BigInt::from(2), BigInt::from(1)]);
    }

    #[test]
    fn rational_kernel_and_solve() {
        let a = RatMatrix::from_rows(vec![vec![rat(1), rat(2), rat(3)], vec![rat(2), rat(4), rat(7)]])
            .unwrap();
        let k = rational_kernel(&a);
        assert_eq!(k.cols(), 1);
        assert!((&a * &k).is_zero());
        let x = rational_solve(&a, &[rat(1), rat(3)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![rat(1), rat(3)]);
        assert_eq!(rational_det(&RatMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]).unwrap()), rat(-1));
    }
}
