use super::structure::generating_set;
use super::LieAlgebra;
use crate::error::LieError;
use crate::linalg::{Matrix, Rational};

/// Injective homomorphism `sub -> ambient`, stored as an
/// `ambient.dim x sub.dim` matrix whose columns are images of basis vectors.
#[derive(Clone, Debug)]
pub struct SubalgebraEmbedding {
    pub sub: LieAlgebra,
    pub ambient: LieAlgebra,
    pub inclusion: Matrix,
}

impl SubalgebraEmbedding {
    pub fn new(sub: LieAlgebra, ambient: LieAlgebra, inclusion: Matrix) -> Result<Self, LieError> {
        if inclusion.rows() != ambient.dim() || inclusion.cols() != sub.dim() {
            return Err(LieError::DimensionMismatch(format!(
                "inclusion is {}x{}, expected {}x{}",
                inclusion.rows(),
                inclusion.cols(),
                ambient.dim(),
                sub.dim()
            )));
        }
        if inclusion.rank() != sub.dim() {
            return Err(LieError::NotInjective);
        }
        let e = SubalgebraEmbedding {
            sub,
            ambient,
            inclusion,
        };
        let cols = e.image_basis();
        for i in 0..e.sub.dim() {
            for j in (i + 1)..e.sub.dim() {
                let mut v = vec![Rational::zero(); e.sub.dim()];
                for (k, c) in e.sub.bracket_basis(i, j) {
                    v[*k] = c.clone();
                }
                let lhs = e.map(&v);
                let rhs = e.ambient.bracket(&cols[i], &cols[j]);
                if lhs != rhs {
                    return Err(LieError::NotHomomorphism);
                }
            }
        }
        Ok(e)
    }

    /// Induced subalgebra on the span of `basis`.
    pub fn from_basis(
        ambient: &LieAlgebra,
        name: &str,
        basis: &[Vec<Rational>],
        labels: Vec<String>,
    ) -> Result<Self, LieError> {
        let sub = ambient.subalgebra(name, basis, labels)?;
        let inclusion = Matrix::from_columns(basis, ambient.dim());
        SubalgebraEmbedding::new(sub, ambient.clone(), inclusion)
    }

    pub fn image_basis(&self) -> Vec<Vec<Rational>> {
        self.inclusion.columns()
    }

    /// Image of a vector in sub coordinates.
    pub fn map(&self, x: &[Rational]) -> Vec<Rational> {
        self.inclusion.mul_vec(x)
    }

    /// Images of a Lie generating set of `sub`.
    pub fn generators(&self) -> Vec<Vec<Rational>> {
        let cols = self.image_basis();
        generating_set(&self.sub).into_iter().map(|i| cols[i].clone()).collect()
    }
}
