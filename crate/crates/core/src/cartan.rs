//! Cartan involutions, k + p splittings and compact duals.

use serde::Serialize;

use crate::error::{CartanError, LieError};
use crate::lie::{
    center, derived_subalgebra, inertia, killing_form, killing_signature, structure_analysis, LieAlgebra, StructureKind,
};
use crate::linalg::{combine, Coordinates, Matrix, Rational};

/// A verified Cartan decomposition `g = k + p`.
#[derive(Clone, Debug)]
pub struct CartanDecomposition {
    pub algebra: LieAlgebra,
    pub theta: Matrix,
    pub k_basis: Vec<Vec<Rational>>,
    pub p_basis: Vec<Vec<Rational>>,
    /// Induced structure on k, in the coordinates of `k_basis`.
    pub k: LieAlgebra,
    pub z_k_dim: usize,
    /// Center of k, in g coordinates.
    pub z_k_basis: Vec<Vec<Rational>>,
    /// `m = [k, k]`, in g coordinates.
    pub m_basis: Vec<Vec<Rational>>,
}

impl CartanDecomposition {
    pub fn k_dim(&self) -> usize {
        self.k_basis.len()
    }

    pub fn p_dim(&self) -> usize {
        self.p_basis.len()
    }

    /// Labels of the adapted basis (k first, then p).
    pub fn adapted_labels(&self) -> (Vec<String>, Vec<String>) {
        let labels = self.algebra.labels();
        let name = |v: &Vec<Rational>, fallback: String| -> String {
            let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
            if nz.len() == 1 && v[nz[0]].is_one() {
                labels[nz[0]].clone()
            } else {
                fallback
            }
        };
        let k = self
            .k_basis
            .iter()
            .enumerate()
            .map(|(i, v)| name(v, format!("k{}", i + 1)))
            .collect();
        let p = self
            .p_basis
            .iter()
            .enumerate()
            .map(|(i, v)| name(v, format!("p{}", i + 1)))
            .collect();
        (k, p)
    }
}

fn check_involutive_automorphism(g: &LieAlgebra, theta: &Matrix) -> Result<(), CartanError> {
    let n = g.dim();
    if theta.rows() != n || theta.cols() != n {
        return Err(CartanError::ShapeMismatch(theta.rows(), theta.cols(), n));
    }
    if theta * theta != Matrix::identity(n) {
        return Err(CartanError::NotInvolutive);
    }
    let cols = theta.columns();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut b = vec![Rational::zero(); n];
            for (k, v) in g.bracket_basis(i, j) {
                b[*k] = v.clone();
            }
            if theta.mul_vec(&b) != g.bracket(&cols[i], &cols[j]) {
                return Err(CartanError::NotAutomorphism(i, j));
            }
        }
    }
    Ok(())
}

fn eigenspace(theta: &Matrix, sign: i64) -> Vec<Vec<Rational>> {
    theta.clone().add_scaled_identity(&Rational::from(-sign)).kernel_basis()
}

/// Verifies `theta` and returns the decomposition with the induced k.
pub fn verify_cartan_involution(g: &LieAlgebra, theta: &Matrix) -> Result<CartanDecomposition, CartanError> {
    let n = g.dim();
    check_involutive_automorphism(g, theta)?;
    let k_basis = eigenspace(theta, 1);
    let p_basis = eigenspace(theta, -1);
    if k_basis.len() + p_basis.len() != n {
        return Err(CartanError::EigenspaceDimMismatch {
            k: k_basis.len(),
            p: p_basis.len(),
            dim: n,
        });
    }
    let b = killing_form(g);
    let b_theta = (&b.gram * theta).scale(&Rational::from(-1));
    if !b_theta.is_symmetric() || !inertia(&b_theta).is_positive_definite() {
        return Err(CartanError::BThetaNotPositiveDefinite);
    }
    // Symmetric pair relations; implied by theta being an automorphism.
    let mut all = k_basis.clone();
    all.extend(p_basis.iter().cloned());
    let coords = Coordinates::new(&all).ok_or(CartanError::EigenspaceDimMismatch {
        k: k_basis.len(),
        p: p_basis.len(),
        dim: n,
    })?;
    let kd = k_basis.len();
    for (i, x) in all.iter().enumerate() {
        for (j, y) in all.iter().enumerate().skip(i + 1) {
            let c = coords.coords_unchecked(&g.bracket(x, y));
            let lands_in_k = (i < kd) == (j < kd);
            let bad = if lands_in_k {
                c[kd..].iter().any(|v| !v.is_zero())
            } else {
                c[..kd].iter().any(|v| !v.is_zero())
            };
            if bad {
                return Err(CartanError::NotAutomorphism(i, j));
            }
        }
    }
    let mut d = CartanDecomposition {
        algebra: g.clone(),
        theta: theta.clone(),
        k_basis: k_basis.clone(),
        p_basis,
        k: g.subalgebra("k", &k_basis, vec![String::new(); kd])?,
        z_k_dim: 0,
        z_k_basis: Vec::new(),
        m_basis: Vec::new(),
    };
    let (kl, _) = d.adapted_labels();
    d.k = d.k.with_labels(kl).with_name(&format!("k({})", g.name()));
    let z = center(&d.k);
    let m = derived_subalgebra(&d.k);
    d.z_k_dim = z.len();
    d.z_k_basis = z.iter().map(|v| combine(v, &k_basis, n)).collect();
    d.m_basis = m.iter().map(|v| combine(v, &k_basis, n)).collect();
    Ok(d)
}

/// Compact dual `g_u = k + ip`.
#[derive(Clone, Debug)]
pub struct CompactDual {
    pub algebra: LieAlgebra,
    pub k_dim: usize,
    pub ip_labels: Vec<String>,
}

/// Structure constants of `g` in the adapted basis `(k, p)` of an involutive
/// automorphism, with the `p x p -> k` block negated. Applying it twice
/// returns the original constants in the adapted basis.
pub fn sign_flip_dual(
    g: &LieAlgebra,
    k_basis: &[Vec<Rational>],
    p_basis: &[Vec<Rational>],
    name: &str,
    labels: Vec<String>,
) -> Result<LieAlgebra, LieError> {
    let mut all = k_basis.to_vec();
    all.extend(p_basis.iter().cloned());
    let coords = Coordinates::new(&all).ok_or(LieError::NotInjective)?;
    let kd = k_basis.len();
    let mut brackets = Vec::new();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            let c = coords
                .coords(&g.bracket(&all[i], &all[j]))
                .ok_or(LieError::NotSubalgebra)?;
            let flip = i >= kd && j >= kd;
            for (k, v) in c.into_iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                brackets.push((i, j, k, if flip { -v } else { v }));
            }
        }
    }
    LieAlgebra::from_brackets(name, labels, &brackets)
}

pub fn compact_dual(d: &CartanDecomposition) -> Result<CompactDual, CartanError> {
    let (kl, pl) = d.adapted_labels();
    let ip_labels: Vec<String> = pl.iter().map(|l| format!("i{l}")).collect();
    let mut labels = kl;
    labels.extend(ip_labels.iter().cloned());
    let algebra = sign_flip_dual(
        &d.algebra,
        &d.k_basis,
        &d.p_basis,
        &format!("{}_u", d.algebra.name()),
        labels,
    )?;
    if !killing_signature(&algebra).is_negative_definite() {
        return Err(CartanError::BThetaNotPositiveDefinite);
    }
    Ok(CompactDual {
        algebra,
        k_dim: d.k_dim(),
        ip_labels,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KClass {
    KAbelian {
        p_dim: usize,
    },
    Hermitian {
        z_dim: usize,
        m_dim: usize,
        m_description: String,
    },
    KSemisimple {
        k_dim: usize,
        m_description: String,
    },
    /// Center of dimension at least 2 (only for non-simple input).
    KReductive {
        z_dim: usize,
        m_dim: usize,
    },
}

/// Short description of a semisimple algebra's simple factors.
pub fn describe_semisimple(g: &LieAlgebra) -> Result<String, LieError> {
    Ok(match structure_analysis(g)? {
        StructureKind::Abelian => format!("abelian dim {}", g.dim()),
        StructureKind::NotSemisimple => format!("not semisimple dim {}", g.dim()),
        StructureKind::SimpleReal => format!("simple dim {}", g.dim()),
        StructureKind::SimpleComplex => format!("simple complex dim {}", g.dim()),
        StructureKind::SemisimpleSplit(ideals) => {
            let dims: Vec<String> = ideals.iter().map(|i| i.dim.to_string()).collect();
            format!("semisimple dims {}", dims.join("+"))
        }
    })
}

pub fn classify_k(d: &CartanDecomposition) -> Result<KClass, CartanError> {
    if d.p_dim() == 0 {
        return Err(CartanError::CompactInput);
    }
    let m_dim = d.m_basis.len();
    if m_dim == 0 {
        return Ok(KClass::KAbelian { p_dim: d.p_dim() });
    }
    let describe = || -> Result<String, CartanError> {
        let m = d
            .algebra
            .subalgebra("m", &d.m_basis, (0..m_dim).map(|i| format!("m{}", i + 1)).collect())?;
        Ok(describe_semisimple(&m)?)
    };
    Ok(match d.z_k_dim {
        0 => KClass::KSemisimple {
            k_dim: d.k_dim(),
            m_description: describe()?,
        },
        1 => KClass::Hermitian {
            z_dim: 1,
            m_dim,
            m_description: describe()?,
        },
        z => KClass::KReductive { z_dim: z, m_dim },
    })
}
