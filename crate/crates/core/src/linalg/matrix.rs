use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::bareiss::{bareiss_det, bareiss_rank, integer_rows};
use super::echelon::RowEchelon;
use super::{Polynomial, Rational};

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Option<Self> {
        (entries.len() == rows * cols).then_some(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    /// Builds from row vectors; all rows must share a length. `cols` is used
    /// when there are no rows.
    pub fn from_rows(rows: &[Vec<Rational>], cols: usize) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().cloned());
        }
        Matrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn from_columns(columns: &[Vec<Rational>], rows: usize) -> Self {
        Matrix::from_rows(columns, rows).transpose()
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
            .collect();
        Matrix::from_rows(&data, cols)
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

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// `self + c * I`
    pub fn add_scaled_identity(mut self, c: &Rational) -> Matrix {
        if !c.is_zero() {
            for i in 0..self.rows.min(self.cols) {
                let k = i * self.cols + i;
                self.entries[k] += c;
            }
        }
        self
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Rank by fraction-free Bareiss elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        bareiss_rank(integer_rows(self.rows, self.cols, &self.entries), self.cols)
    }

    pub fn determinant(&self) -> Option<Rational> {
        if !self.is_square() {
            return None;
        }
        let mut denom = num_bigint::BigInt::from(1);
        let rows = integer_rows(self.rows, self.cols, &self.entries);
        for i in 0..self.rows {
            // Undo the per-row integer scaling.
            let r = &self.entries[i * self.cols..(i + 1) * self.cols];
            if let Some((k, v)) = r.iter().enumerate().find(|(_, v)| !v.is_zero()) {
                let scaled = &rows[i][k];
                denom *= scaled / v.numer() * v.denom();
            }
        }
        Rational::new(bareiss_det(rows), denom)
    }

    /// Right null space basis, free variables set to 1 in increasing column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        self.echelon().kernel_basis()
    }

    /// Row echelon structure of the rows of this matrix.
    pub fn echelon(&self) -> RowEchelon {
        let mut e = RowEchelon::new(self.cols);
        for i in 0..self.rows {
            if e.is_full() {
                break;
            }
            e.insert_dense(self.row(i));
        }
        e
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&i| !a.get(i, c).is_zero())?;
            if p != c {
                for j in 0..n {
                    a.entries.swap(p * n + j, c * n + j);
                    inv.entries.swap(p * n + j, c * n + j);
                }
            }
            let pinv = a.get(c, c).recip().expect("pivot");
            for j in 0..n {
                a.entries[c * n + j] *= &pinv;
                inv.entries[c * n + j] *= &pinv;
            }
            for i in 0..n {
                if i == c || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..n {
                    let da = a.get(c, j) * &f;
                    let di = inv.get(c, j) * &f;
                    a.entries[i * n + j] -= da;
                    inv.entries[i * n + j] -= di;
                }
            }
        }
        Some(inv)
    }

    /// Monic minimal polynomial from the first linear dependency among the
    /// powers `I, T, T^2, ...`.
    pub fn minimal_polynomial(&self) -> Polynomial {
        assert!(self.is_square(), "minimal polynomial of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Polynomial::new(vec![Rational::one()]);
        }
        let mut span = RowEchelon::new(n * n);
        let mut powers = vec![Matrix::identity(n)];
        span.insert_dense(&powers[0].entries);
        loop {
            let next = &powers[powers.len() - 1] * self;
            if !span.contains_dense(&next.entries) {
                span.insert_dense(&next.entries);
                powers.push(next);
                continue;
            }
            powers.push(next);
            let d = powers.len();
            // Columns are vec(T^k); the unique kernel vector has its free
            // (last) coordinate equal to 1, hence is already monic.
            let mut e = RowEchelon::new(d);
            for idx in 0..n * n {
                let row: Vec<Rational> = powers.iter().map(|p| p.entries[idx].clone()).collect();
                e.insert_dense(&row);
            }
            let kernel = e.kernel_basis();
            debug_assert_eq!(kernel.len(), 1);
            return Polynomial::new(kernel.into_iter().next().expect("dependency"));
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Coordinates with respect to a fixed linearly independent family.
///
/// Picks pivot positions so the family restricted to them is invertible;
/// coordinates of a vector are then read off those positions and checked
/// against the full vector.
#[derive(Clone, Debug)]
pub struct Coordinates {
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    inverse: Matrix,
}

impl Coordinates {
    pub fn new(basis: &[Vec<Rational>]) -> Option<Self> {
        let d = basis.len();
        let n = basis.first().map_or(0, |b| b.len());
        let mut e = RowEchelon::new(n);
        for b in basis {
            if !e.insert_dense(b) {
                return None;
            }
        }
        let pivots = e.pivot_columns();
        let mut sub = Matrix::zeros(d, d);
        for (r, &p) in pivots.iter().enumerate() {
            for (c, b) in basis.iter().enumerate() {
                sub.set(r, c, b[p].clone());
            }
        }
        let inverse = sub.inverse()?;
        Some(Coordinates {
            basis: basis.to_vec(),
            pivots,
            inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Coordinates assuming `v` lies in the span.
    pub fn coords_unchecked(&self, v: &[Rational]) -> Vec<Rational> {
        let picked: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        self.inverse.mul_vec(&picked)
    }

    /// Coordinates, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let c = self.coords_unchecked(v);
        let mut back = vec![Rational::zero(); v.len()];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in back.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x += ci * y;
                }
            }
        }
        (back.as_slice() == v).then_some(c)
    }
}

/// `Σ c_i v_i`
pub fn combine(coeffs: &[Rational], vectors: &[Vec<Rational>], dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{q, qi};

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zeros(2, 2).rank(), 0);
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(2).kernel_basis().is_empty());
        assert_eq!(Matrix::from_i64(&[&[1, 1]]).kernel_basis(), vec![vec![qi(-1), qi(1)]]);
        assert_eq!(
            Matrix::from_i64(&[&[1, 2], &[2, 4]]).kernel_basis(),
            vec![vec![qi(-2), qi(1)]]
        );
    }

    #[test]
    fn minimal_polynomial_examples() {
        let p = Matrix::identity(4).minimal_polynomial();
        assert_eq!(p.to_string(), "x - 1");
        let p = Matrix::from_i64(&[&[0, -1], &[1, 0]]).minimal_polynomial();
        assert_eq!(p.to_string(), "x^2 + 1");
        let p = Matrix::from_i64(&[&[0, 1], &[0, 0]]).minimal_polynomial();
        assert_eq!(p.to_string(), "x^2");
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_rows(&[vec![q(1, 2), qi(1)], vec![qi(3), qi(4)]], 2);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(m.determinant(), Some(qi(-1)));
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse(), None);
    }

    #[test]
    fn coordinates_roundtrip() {
        let basis = vec![vec![qi(1), qi(1), qi(0)], vec![qi(0), qi(1), qi(1)]];
        let c = Coordinates::new(&basis).unwrap();
        assert_eq!(c.coords(&[qi(2), qi(5), qi(3)]), Some(vec![qi(2), qi(3)]));
        assert_eq!(c.coords(&[qi(1), qi(0), qi(0)]), None);
    }
}
