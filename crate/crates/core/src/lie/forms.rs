use std::collections::HashMap;

use serde::Serialize;

use super::LieAlgebra;
use crate::linalg::{Matrix, Rational};

/// Bilinear form on a Lie algebra, stored as its Gram matrix in the algebra basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    pub gram: Matrix,
}

/// Sylvester inertia.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.positive, self.negative, self.zero)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.negative == 0 && self.zero == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.positive == 0 && self.zero == 0
    }
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Self {
        BilinearForm { gram }
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let gy = self.gram.mul_vec(y);
        x.iter()
            .zip(&gy)
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Gram matrix of the restriction to the span of `basis`.
    pub fn restrict(&self, basis: &[Vec<Rational>]) -> Matrix {
        let d = basis.len();
        let images: Vec<Vec<Rational>> = basis.iter().map(|b| self.gram.mul_vec(b)).collect();
        let mut m = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let v: Rational = basis[i]
                    .iter()
                    .zip(&images[j])
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum();
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram.is_symmetric()
    }

    /// `B([x,y],z) + B(y,[x,z]) = 0` on all basis triples.
    pub fn is_invariant(&self, g: &LieAlgebra) -> bool {
        let n = g.dim();
        // (ad x)^T G + G (ad x) = 0
        (0..n).all(|i| {
            let ad = g.ad(i);
            let m = &(&ad.transpose() * &self.gram) + &(&self.gram * ad);
            m.is_zero()
        })
    }

    pub fn inertia(&self) -> Inertia {
        inertia(&self.gram)
    }
}

/// Killing form `B(e_i, e_j) = tr(ad e_i ad e_j)`.
pub fn killing_form(g: &LieAlgebra) -> BilinearForm {
    let n = g.dim();
    // coefficient of e_k in [e_j, e_l], indexed by (l, k)
    let mut by_lk: HashMap<(usize, usize), Vec<(usize, Rational)>> = HashMap::new();
    for j in 0..n {
        for l in 0..n {
            for (k, v) in g.bracket_basis(j, l) {
                by_lk.entry((l, *k)).or_default().push((j, v.clone()));
            }
        }
    }
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        let mut row = vec![Rational::zero(); n];
        // tr(ad_i ad_j) = sum_{k,l} c[i][k][l] c[j][l][k]
        for k in 0..n {
            for (l, a) in g.bracket_basis(i, k) {
                if let Some(list) = by_lk.get(&(*l, k)) {
                    for (j, b) in list {
                        row[*j] += a * b;
                    }
                }
            }
        }
        for (j, v) in row.into_iter().enumerate() {
            gram.set(i, j, v);
        }
    }
    BilinearForm { gram }
}

pub fn killing_signature(g: &LieAlgebra) -> Inertia {
    killing_form(g).inertia()
}

/// Inertia of a symmetric rational matrix by exact symmetric pivoting.
///
/// A nonzero diagonal entry (lowest index first) is eliminated by a congruence;
/// when the diagonal vanishes, the lowest off-diagonal pair (i, j) is folded
/// into a diagonal entry via `row_i += row_j`, `col_i += col_j`.
pub fn inertia(m: &Matrix) -> Inertia {
    assert!(m.is_symmetric(), "inertia of a non-symmetric matrix");
    let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut res = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    loop {
        let n = a.len();
        if n == 0 {
            return res;
        }
        let pivot = (0..n).find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = (0..n)
                    .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                match pair {
                    None => {
                        res.zero += n;
                        return res;
                    }
                    Some((i, j)) => {
                        for c in 0..n {
                            let v = a[j][c].clone();
                            a[i][c] += v;
                        }
                        for r in 0..n {
                            let v = a[r][j].clone();
                            a[r][i] += v;
                        }
                        i
                    }
                }
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            res.positive += 1;
        } else {
            res.negative += 1;
        }
        let col: Vec<Rational> = (0..n).map(|r| a[r][p].clone()).collect();
        let inv = d.recip().expect("nonzero pivot");
        let mut next = Vec::with_capacity(n - 1);
        for r in (0..n).filter(|&r| r != p) {
            let f = &col[r] * &inv;
            let row: Vec<Rational> = (0..n)
                .filter(|&c| c != p)
                .map(|c| {
                    if f.is_zero() || col[c].is_zero() {
                        a[r][c].clone()
                    } else {
                        &a[r][c] - &(&f * &col[c])
                    }
                })
                .collect();
            next.push(row);
        }
        a = next;
    }
}
