use super::{build, CMat, CartanType, CatalogEntry, Family};
use crate::error::{CatalogError, LieError};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Rational};

/// Lie algebra homomorphism given by its matrix in the two bases.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    pub source: LieAlgebra,
    pub target: LieAlgebra,
    pub matrix: Matrix,
    pub source_type: Option<CartanType>,
    pub target_type: Option<CartanType>,
}

impl Homomorphism {
    /// Checks `phi[x, y] = [phi x, phi y]` on all basis pairs.
    pub fn new(source: LieAlgebra, target: LieAlgebra, matrix: Matrix) -> Result<Self, LieError> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(LieError::DimensionMismatch(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let cols = matrix.columns();
        for i in 0..source.dim() {
            for j in (i + 1)..source.dim() {
                let mut v = vec![Rational::zero(); source.dim()];
                for (k, c) in source.bracket_basis(i, j) {
                    v[*k] = c.clone();
                }
                if matrix.mul_vec(&v) != target.bracket(&cols[i], &cols[j]) {
                    return Err(LieError::NotHomomorphism);
                }
            }
        }
        Ok(Homomorphism {
            source,
            target,
            matrix,
            source_type: None,
            target_type: None,
        })
    }

    pub fn with_types(mut self, source: Option<CartanType>, target: Option<CartanType>) -> Self {
        self.source_type = source;
        self.target_type = target;
        self
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    /// `other ∘ self`
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism, LieError> {
        if other.source != self.target {
            return Err(LieError::NotHomomorphism);
        }
        Ok(
            Homomorphism::new(self.source.clone(), other.target.clone(), &other.matrix * &self.matrix)?
                .with_types(self.source_type, other.target_type),
        )
    }

    pub fn identity(entry: &CatalogEntry) -> Homomorphism {
        let n = entry.dim();
        Homomorphism::new(entry.algebra.clone(), entry.algebra.clone(), Matrix::identity(n))
            .expect("identity is a homomorphism")
            .with_types(entry.cartan_type, entry.cartan_type)
    }
}

fn from_images(source: &CatalogEntry, target: &CatalogEntry, images: &[CMat]) -> Result<Homomorphism, CatalogError> {
    let cols: Vec<Vec<Rational>> = images
        .iter()
        .map(|m| target.coordinates_of(m).ok_or(LieError::NotHomomorphism))
        .collect::<Result<_, _>>()?;
    let matrix = Matrix::from_columns(&cols, target.dim());
    Ok(
        Homomorphism::new(source.algebra.clone(), target.algebra.clone(), matrix)?
            .with_types(source.cartan_type, target.cartan_type),
    )
}

/// Splits a weight multiset into su(2) strings `w, w-2, ..., -w`, largest first.
fn weight_strings(weights: &[i64]) -> Result<Vec<i64>, CatalogError> {
    let mut rest: Vec<i64> = weights.to_vec();
    rest.sort_unstable();
    let mut neg: Vec<i64> = weights.iter().map(|w| -w).collect();
    neg.sort_unstable();
    if rest != neg {
        return Err(CatalogError::WeightsNotSymmetric);
    }
    let mut strings = Vec::new();
    while let Some(&top) = rest.last() {
        let mut w = top;
        while w >= -top {
            let pos = rest
                .iter()
                .position(|&x| x == w)
                .ok_or(CatalogError::NotAWeightSystem)?;
            rest.remove(pos);
            w -= 2;
        }
        strings.push(top);
    }
    Ok(strings)
}

/// The su(2) -> su(n) homomorphism whose defining representation has the
/// given weights (`2m` convention: `{1, -1}` is the spin-1/2 block).
pub fn su2_embedding(target: &CatalogEntry, weights: &[i64]) -> Result<Homomorphism, CatalogError> {
    if target.family != Family::Sun {
        return Err(CatalogError::WrongFamily(target.name.clone()));
    }
    let n = target.params[0];
    if weights.len() != n {
        return Err(CatalogError::SizeMismatch {
            expected: n,
            got: weights.len(),
        });
    }
    let strings = weight_strings(weights)?;
    if let Some(&w) = strings.iter().find(|&&w| w > 2) {
        return Err(CatalogError::UnsupportedSpin(w));
    }
    let su2 = build("su2", 3)?;
    let images: Vec<CMat> = (0..3)
        .map(|a| {
            let mut img = CMat::zeros(n);
            let mut at = 0;
            for &w in &strings {
                let block = match w {
                    1 => su2.matrices[a].clone(),
                    // ad is antisymmetric here because the su(2) Killing gram is -2I.
                    2 => {
                        let ad = su2.algebra.ad(a);
                        let mut m = CMat::zeros(3);
                        for i in 0..3 {
                            for j in 0..3 {
                                m.set(i, j, ad.get(i, j).clone(), Rational::zero());
                            }
                        }
                        m
                    }
                    _ => CMat::zeros(1),
                };
                img = img.add(&block.embed(n, at));
                at += block.n;
            }
            img
        })
        .collect();
    from_images(&su2, target, &images)
}

/// Upper-left block inclusion su(m) -> su(n).
pub fn sun_block_embedding(source: &CatalogEntry, target: &CatalogEntry) -> Result<Homomorphism, CatalogError> {
    for e in [source, target] {
        if e.family != Family::Sun {
            return Err(CatalogError::WrongFamily(e.name.clone()));
        }
    }
    let (m, n) = (source.params[0], target.params[0]);
    if m > n {
        return Err(CatalogError::SizeMismatch { expected: n, got: m });
    }
    let images: Vec<CMat> = source.matrices.iter().map(|x| x.embed(n, 0)).collect();
    from_images(source, target, &images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_strings_decompose() {
        assert_eq!(weight_strings(&[1, -1, 0]).unwrap(), vec![1, 0]);
        assert_eq!(weight_strings(&[2, 0, -2]).unwrap(), vec![2]);
        assert_eq!(weight_strings(&[1, 2]).unwrap_err(), CatalogError::WeightsNotSymmetric);
        assert_eq!(weight_strings(&[2, -2]).unwrap_err(), CatalogError::NotAWeightSystem);
    }
}
