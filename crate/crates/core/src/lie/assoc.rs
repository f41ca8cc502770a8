//! Finite-dimensional associative algebras of matrices (centroids, commutants).

use super::forms::{inertia, Inertia};
use crate::linalg::{combine, Coordinates, Matrix, Polynomial, Rational};

/// Subalgebra of a full matrix algebra, given by a basis, with its
/// multiplication table `e_a e_b = Σ_c table[a][b][c] e_c`.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    basis: Vec<Matrix>,
    table: Vec<Vec<Vec<Rational>>>,
    identity: Vec<Rational>,
}

impl MatrixAlgebra {
    /// `None` if the span is not closed under products or does not contain the identity.
    pub fn new(basis: Vec<Matrix>) -> Option<Self> {
        let n = basis.first().map_or(0, |m| m.rows());
        let flat: Vec<Vec<Rational>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        let coords = Coordinates::new(&flat)?;
        let mut table = Vec::with_capacity(basis.len());
        for a in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for b in &basis {
                row.push(coords.coords((a * b).entries())?);
            }
            table.push(row);
        }
        let identity = coords.coords(Matrix::identity(n).entries())?;
        Some(MatrixAlgebra { basis, table, identity })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn table(&self) -> &[Vec<Vec<Rational>>] {
        &self.table
    }

    pub fn identity(&self) -> &[Rational] {
        &self.identity
    }

    pub fn element(&self, x: &[Rational]) -> Matrix {
        let n = self.basis[0].rows();
        let mut m = Matrix::zeros(n, n);
        for (c, b) in x.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = &m + &b.scale(c);
            }
        }
        m
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for a in 0..d {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..d {
                if y[b].is_zero() {
                    continue;
                }
                let s = &x[a] * &y[b];
                for c in 0..d {
                    if !self.table[a][b][c].is_zero() {
                        out[c] += &s * &self.table[a][b][c];
                    }
                }
            }
        }
        out
    }

    /// Left multiplication by `x` in the regular representation.
    pub fn left_mult(&self, x: &[Rational]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for b in 0..d {
            let mut e = vec![Rational::zero(); d];
            e[b] = Rational::one();
            for (c, v) in self.mul(x, &e).into_iter().enumerate() {
                m.set(c, b, v);
            }
        }
        m
    }

    /// Minimal polynomial of `x` (the algebra is unital, so it equals that of `L_x`).
    pub fn minimal_polynomial(&self, x: &[Rational]) -> Polynomial {
        self.left_mult(x).minimal_polynomial()
    }

    /// Evaluates `p(x)` inside the algebra.
    pub fn eval_poly(&self, p: &Polynomial, x: &[Rational]) -> Vec<Rational> {
        let l = p.eval_matrix(&self.left_mult(x));
        l.mul_vec(&self.identity)
    }

    /// Gram matrix of `(x, y) -> tr(L_{xy})`.
    pub fn trace_form(&self) -> Matrix {
        let d = self.dim();
        let traces: Vec<Rational> = (0..d)
            .map(|c| {
                let mut e = vec![Rational::zero(); d];
                e[c] = Rational::one();
                self.left_mult(&e).trace()
            })
            .collect();
        let mut g = Matrix::zeros(d, d);
        for a in 0..d {
            for b in 0..d {
                let v: Rational = self.table[a][b].iter().zip(&traces).map(|(x, t)| x * t).sum();
                g.set(a, b, v);
            }
        }
        g
    }

    pub fn trace_form_inertia(&self) -> Inertia {
        inertia(&self.trace_form())
    }

    /// Whether the algebra is a real division algebra. The trace form of a
    /// real semisimple algebra has exactly one positive direction precisely
    /// for R, C and H; a nonzero radical makes it degenerate.
    pub fn is_division(&self) -> bool {
        let i = self.trace_form_inertia();
        i.zero == 0 && i.positive == 1
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|a| (0..d).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// A nontrivial idempotent found from a simple rational root `r` of a
    /// basis element's minimal polynomial `f`: with `g = f / (x - r)`,
    /// `g(x) / g(r)` is idempotent.
    pub fn find_idempotent(&self) -> Option<Vec<Rational>> {
        let d = self.dim();
        let mut candidates: Vec<Vec<Rational>> = (0..d)
            .map(|a| {
                let mut e = vec![Rational::zero(); d];
                e[a] = Rational::one();
                e
            })
            .collect();
        for a in 0..d {
            for b in (a + 1)..d {
                let mut e = vec![Rational::zero(); d];
                e[a] = Rational::one();
                e[b] = Rational::from(2);
                candidates.push(e);
            }
        }
        for x in candidates {
            let f = self.minimal_polynomial(&x);
            if f.degree().unwrap_or(0) < 2 {
                continue;
            }
            for r in f.rational_roots() {
                let (g, rem) = f.divide_linear(&r);
                debug_assert!(rem.is_zero());
                let gr = g.eval(&r);
                if gr.is_zero() {
                    continue;
                }
                let e: Vec<Rational> = self.eval_poly(&g, &x).iter().map(|v| v / &gr).collect();
                if e != self.identity && e.iter().any(|v| !v.is_zero()) {
                    debug_assert_eq!(self.mul(&e, &e), e);
                    return Some(e);
                }
            }
        }
        None
    }

    pub fn combine(&self, x: &[Rational]) -> Vec<Rational> {
        let flat: Vec<Vec<Rational>> = self.basis.iter().map(|m| m.entries().to_vec()).collect();
        combine(x, &flat, flat.first().map_or(0, |f| f.len()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;

    #[test]
    fn complex_numbers_are_division() {
        let j = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let a = MatrixAlgebra::new(vec![Matrix::identity(2), j]).unwrap();
        assert!(a.is_division());
        assert!(a.find_idempotent().is_none());
        assert_eq!(a.minimal_polynomial(&[qi(0), qi(1)]).to_string(), "x^2 + 1");
    }

    #[test]
    fn diagonal_pair_splits() {
        let e = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let a = MatrixAlgebra::new(vec![Matrix::identity(2), e]).unwrap();
        assert!(!a.is_division());
        let idem = a.find_idempotent().unwrap();
        assert_eq!(a.mul(&idem, &idem), idem);
    }
}
