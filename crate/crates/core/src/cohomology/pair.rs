use serde::Serialize;

use crate::cartan::CartanDecomposition;
use crate::error::CohomologyError;
use crate::lie::{killing_form, unit, LieAlgebra};
use crate::linalg::{Coordinates, Matrix, Rational, RowEchelon, SparseVec};

use super::forms::MAX_SPACE_DIM;

/// A subalgebra `m` of `g` together with an `m`-stable complement `p`.
#[derive(Clone, Debug)]
pub struct ReductivePair {
    pub g: LieAlgebra,
    pub m_basis: Vec<Vec<Rational>>,
    pub p_basis: Vec<Vec<Rational>>,
    /// `p_dim x g_dim`: p-coordinates of the p-component along m.
    pub projection: Matrix,
    label: String,
    coords: Coordinates,
    // p_bracket[a][b]: p-coordinates of the p-component of [p_a, p_b]
    p_bracket: Vec<Vec<SparseVec>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairDescription {
    pub g: String,
    pub m: String,
    pub g_dim: usize,
    pub m_dim: usize,
    pub p_dim: usize,
}

impl ReductivePair {
    pub fn new(
        g: &LieAlgebra,
        m_basis: Vec<Vec<Rational>>,
        p_basis: Vec<Vec<Rational>>,
        label: &str,
    ) -> Result<Self, CohomologyError> {
        let n = g.dim();
        if m_basis.len() + p_basis.len() != n || m_basis.iter().chain(&p_basis).any(|v| v.len() != n) {
            return Err(CohomologyError::DimensionMismatch(format!(
                "m ({}) and p ({}) do not fill g ({n})",
                m_basis.len(),
                p_basis.len()
            )));
        }
        if p_basis.len() > MAX_SPACE_DIM {
            return Err(CohomologyError::DimensionMismatch(format!("dim p > {MAX_SPACE_DIM}")));
        }
        let mut all = m_basis.clone();
        all.extend(p_basis.iter().cloned());
        let coords = Coordinates::new(&all)
            .ok_or_else(|| CohomologyError::DimensionMismatch("m + p is not a direct sum".into()))?;
        if !g.is_subalgebra(&m_basis) {
            return Err(CohomologyError::NotReductive);
        }
        let md = m_basis.len();
        for x in &m_basis {
            for y in &p_basis {
                let c = coords.coords_unchecked(&g.bracket(x, y));
                if c[..md].iter().any(|v| !v.is_zero()) {
                    return Err(CohomologyError::NotReductive);
                }
            }
        }
        let pd = p_basis.len();
        let mut projection = Matrix::zeros(pd, n);
        for i in 0..n {
            let c = coords.coords_unchecked(&unit(n, i));
            for a in 0..pd {
                projection.set(a, i, c[md + a].clone());
            }
        }
        let p_bracket = (0..pd)
            .map(|a| {
                (0..pd)
                    .map(|b| {
                        let c = coords.coords_unchecked(&g.bracket(&p_basis[a], &p_basis[b]));
                        c[md..]
                            .iter()
                            .enumerate()
                            .filter(|(_, v)| !v.is_zero())
                            .map(|(i, v)| (i, v.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(ReductivePair {
            g: g.clone(),
            m_basis,
            p_basis,
            projection,
            label: label.to_string(),
            coords,
            p_bracket,
        })
    }

    /// `(g, k)` for a Cartan decomposition.
    pub fn symmetric(d: &CartanDecomposition) -> Self {
        Self::new(&d.algebra, d.k_basis.clone(), d.p_basis.clone(), "k").expect("Cartan decompositions are reductive")
    }

    /// `(g, 0)`: the absolute Chevalley-Eilenberg complex.
    pub fn absolute(g: &LieAlgebra) -> Result<Self, CohomologyError> {
        let n = g.dim();
        Self::new(g, Vec::new(), (0..n).map(|i| unit(n, i)).collect(), "0")
    }

    /// `p` = Killing-orthogonal complement of `m`.
    pub fn orthogonal_complement(
        g: &LieAlgebra,
        m_basis: Vec<Vec<Rational>>,
        label: &str,
    ) -> Result<Self, CohomologyError> {
        let n = g.dim();
        let b = killing_form(g);
        let mut e = RowEchelon::new(n);
        for x in &m_basis {
            e.insert_dense(&b.gram.mul_vec(x));
        }
        let p_basis = e.kernel_basis();
        Self::new(g, m_basis, p_basis, label)
    }

    pub fn g_dim(&self) -> usize {
        self.g.dim()
    }

    pub fn m_dim(&self) -> usize {
        self.m_basis.len()
    }

    pub fn p_dim(&self) -> usize {
        self.p_basis.len()
    }

    pub fn describe(&self) -> PairDescription {
        PairDescription {
            g: self.g.name().to_string(),
            m: self.label.clone(),
            g_dim: self.g_dim(),
            m_dim: self.m_dim(),
            p_dim: self.p_dim(),
        }
    }

    /// p-coordinates of the p-component of `v`.
    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        self.projection.mul_vec(v)
    }

    pub fn contains_in_m(&self, x: &[Rational]) -> bool {
        match self.coords.coords(x) {
            Some(c) => c[self.m_dim()..].iter().all(|v| v.is_zero()),
            None => false,
        }
    }

    /// Matrix of `pi_p ad x` on p (column `i` is the image of `p_i`).
    pub fn action(&self, x: &[Rational]) -> Matrix {
        let pd = self.p_dim();
        let cols: Vec<Vec<Rational>> = self
            .p_basis
            .iter()
            .map(|y| self.project(&self.g.bracket(x, y)))
            .collect();
        Matrix::from_columns(&cols, pd)
    }

    pub(crate) fn p_bracket(&self, a: usize, b: usize) -> &SparseVec {
        &self.p_bracket[a][b]
    }

    /// `[p, p]` has no p-component.
    pub fn is_symmetric(&self) -> bool {
        self.p_bracket.iter().all(|row| row.iter().all(|v| v.is_empty()))
    }
}
