use std::collections::BTreeMap;

use serde::Serialize;

use super::assoc::MatrixAlgebra;
use super::subalgebra::SubalgebraEmbedding;
use crate::error::LieError;
use crate::linalg::{Coordinates, Matrix, Rational, RowEchelon, SparseVec};

/// Intertwiners of a module.
#[derive(Clone, Debug, Serialize)]
pub struct Commutant {
    pub dim: usize,
    #[serde(skip)]
    pub basis: Vec<Matrix>,
    pub irreducible: bool,
}

/// Endomorphisms of `k^dim` commuting with every action matrix.
///
/// Irreducibility is read off the commutant: the module is reported
/// irreducible iff the commutant is a real division algebra. This is exact
/// for semisimple actions (compact subalgebras, in particular).
pub fn commutant_of_actions(actions: &[Matrix], dim: usize) -> Commutant {
    let mut e = RowEchelon::new(dim * dim);
    for a in actions {
        for r in 0..dim {
            for c in 0..dim {
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                for k in 0..dim {
                    let akc = a.get(k, c);
                    if !akc.is_zero() {
                        *row.entry(r * dim + k).or_insert_with(Rational::zero) += akc;
                    }
                    let ark = a.get(r, k);
                    if !ark.is_zero() {
                        *row.entry(k * dim + c).or_insert_with(Rational::zero) -= ark;
                    }
                }
                let row: SparseVec = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    e.insert_sparse(&row);
                }
            }
        }
    }
    let basis: Vec<Matrix> = e
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::new(dim, dim, v).expect("square"))
        .collect();
    let irreducible = dim > 0
        && MatrixAlgebra::new(basis.clone())
            .map(|a| a.is_division())
            .unwrap_or(false);
    Commutant {
        dim: basis.len(),
        basis,
        irreducible,
    }
}

/// Matrices of `ad x` on the span of `module_basis`, for each `x` in `elements`.
pub fn action_matrices(
    ambient: &crate::lie::LieAlgebra,
    elements: &[Vec<Rational>],
    module_basis: &[Vec<Rational>],
) -> Result<Vec<Matrix>, LieError> {
    let d = module_basis.len();
    if d == 0 {
        return Ok(vec![Matrix::zeros(0, 0); elements.len()]);
    }
    let coords = Coordinates::new(module_basis).ok_or(LieError::NotInjective)?;
    elements
        .iter()
        .map(|x| {
            let cols: Vec<Vec<Rational>> = module_basis
                .iter()
                .map(|w| coords.coords(&ambient.bracket(x, w)).ok_or(LieError::ModuleNotClosed))
                .collect::<Result<_, _>>()?;
            Ok(Matrix::from_columns(&cols, d))
        })
        .collect()
}

/// Commutant of the adjoint action of an embedded subalgebra on an invariant subspace.
pub fn commutant(action: &SubalgebraEmbedding, module_basis: &[Vec<Rational>]) -> Result<Commutant, LieError> {
    // Closure is checked on the whole subalgebra, the solve uses generators.
    action_matrices(&action.ambient, &action.image_basis(), module_basis)?;
    let mats = action_matrices(&action.ambient, &action.generators(), module_basis)?;
    Ok(commutant_of_actions(&mats, module_basis.len()))
}
