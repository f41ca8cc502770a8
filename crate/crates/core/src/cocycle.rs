//! The invariant 3-form of a complex simple algebra, the map from invariant
//! symmetric forms to invariant 3-forms, and Dynkin indices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cartan::verify_cartan_involution;
use crate::catalog::Homomorphism;
use crate::cohomology::{
    differential, invariant_forms, invariant_symmetric_forms, invariants, lie_derivative, AlternatingForm,
    ReductivePair,
};
use crate::error::CocycleError;
use crate::lie::{
    generating_set, killing_form, structure_analysis, BilinearForm, LieAlgebra, StructureKind, SubalgebraEmbedding,
};
use crate::linalg::{Matrix, Rational, RowEchelon};

/// `ω(X, Y, Z) = B(X, J[Y, Z])` on `p = J(k)`, in the basis `J k_i`.
#[derive(Clone, Debug, Serialize)]
pub struct OmegaForm {
    pub form: AlternatingForm,
    pub algebra: String,
    pub k_dim: usize,
    /// Dimension of `(Λ³ p*)^k`.
    pub invariant_dim: usize,
    #[serde(skip)]
    pub p_basis: Vec<Vec<Rational>>,
}

fn is_complex_structure(g: &LieAlgebra, j: &Matrix) -> bool {
    let n = g.dim();
    j.rows() == n
        && j.cols() == n
        && j * j == Matrix::scalar(n, &Rational::from(-1))
        && g.ad_all().iter().all(|a| (j * a) == (a * j))
}

pub fn build_omega(g: &LieAlgebra, j: &Matrix, k: &SubalgebraEmbedding) -> Result<OmegaForm, CocycleError> {
    if !is_complex_structure(g, j) {
        return Err(CocycleError::NotComplexStructure);
    }
    let n = g.dim();
    let k_basis = k.image_basis();
    let p_basis: Vec<Vec<Rational>> = k_basis.iter().map(|v| j.mul_vec(v)).collect();
    let mut all = k_basis.clone();
    all.extend(p_basis.iter().cloned());
    if all.len() != n {
        return Err(CocycleError::NotCartanComplement);
    }
    // theta = +1 on k, -1 on Jk, written in the standard basis
    let kd = k_basis.len();
    let mut diag = Matrix::zeros(n, n);
    for i in 0..n {
        diag.set(i, i, Rational::from(if i < kd { 1 } else { -1 }));
    }
    let change = Matrix::from_columns(&all, n);
    let inverse = change.inverse().ok_or(CocycleError::NotCartanComplement)?;
    let theta = &(&change * &diag) * &inverse;
    let d = verify_cartan_involution(g, &theta).map_err(|_| CocycleError::NotCartanComplement)?;
    debug_assert_eq!(d.k_dim(), kd);

    let b = killing_form(g);
    let p_dim = p_basis.len();
    let mut coefficients = BTreeMap::new();
    for a in 0..p_dim {
        for bb in (a + 1)..p_dim {
            for c in (bb + 1)..p_dim {
                let v = b.eval(&p_basis[a], &j.mul_vec(&g.bracket(&p_basis[bb], &p_basis[c])));
                if !v.is_zero() {
                    coefficients.insert(vec![a, bb, c], v);
                }
            }
        }
    }
    let form = AlternatingForm::from_coefficients(p_dim, 3, coefficients)?;

    // alternation: ω(X,Y,Z) = -ω(Y,X,Z) = -ω(X,Z,Y) on basis triples
    for a in 0..p_dim {
        for bb in 0..p_dim {
            for c in 0..p_dim {
                let raw = b.eval(&p_basis[a], &j.mul_vec(&g.bracket(&p_basis[bb], &p_basis[c])));
                if raw != form.coefficient(&[a, bb, c]) {
                    return Err(CocycleError::Check(format!(
                        "omega is not alternating at ({a}, {bb}, {c})"
                    )));
                }
            }
        }
    }
    if form.is_zero() {
        return Err(CocycleError::Check("omega vanishes".into()));
    }
    let pair = ReductivePair::new(g, k_basis.clone(), p_basis.clone(), "k")?;
    for x in &k_basis {
        if !lie_derivative(&pair, x, &form)?.is_zero() {
            return Err(CocycleError::NotInvariant);
        }
    }
    if !differential(&pair, &form)?.is_zero() {
        return Err(CocycleError::Check("omega is not closed".into()));
    }
    let space = invariant_forms(&pair, 3)?;
    let mut e = RowEchelon::new(form.to_vector().len());
    for w in &space {
        e.insert_dense(&w.to_vector());
    }
    if !e.contains_dense(&form.to_vector()) {
        return Err(CocycleError::Check("omega is not in the invariant space".into()));
    }
    Ok(OmegaForm {
        form,
        algebra: g.name().to_string(),
        k_dim: kd,
        invariant_dim: space.len(),
        p_basis,
    })
}

/// `Φ_B(X, Y, Z) = B(X, [Y, Z])`.
pub fn phi_map(k: &LieAlgebra, b: &BilinearForm) -> Result<AlternatingForm, CocycleError> {
    let n = k.dim();
    if b.gram.rows() != n || b.gram.cols() != n || !b.is_symmetric() {
        return Err(CocycleError::NotSymmetric);
    }
    if !b.is_invariant(k) {
        return Err(CocycleError::NotInvariant);
    }
    let mut coefficients = BTreeMap::new();
    for x in 0..n {
        for y in (x + 1)..n {
            for z in (y + 1)..n {
                let v: Rational = k.bracket_basis(y, z).iter().map(|(l, c)| b.gram.get(x, *l) * c).sum();
                if !v.is_zero() {
                    coefficients.insert(vec![x, y, z], v);
                }
            }
        }
    }
    Ok(AlternatingForm::from_coefficients(n, 3, coefficients)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub algebra: String,
    pub symmetric_dim: usize,
    pub alternating_dim: usize,
    pub phi_rank: usize,
    pub injective: bool,
}

/// Dimensions of `(V²k*)^k` and `(Λ³k*)^k` and the rank of `Φ` between them.
pub fn phi_report(k: &LieAlgebra) -> Result<PhiReport, CocycleError> {
    let sym = invariant_symmetric_forms(k);
    let actions: Vec<Matrix> = generating_set(k).into_iter().map(|i| k.ad(i).clone()).collect();
    let alt = invariants(&actions, k.dim(), 3.min(k.dim()))?;
    let mut e = RowEchelon::new(crate::cohomology::form_basis(k.dim(), 3.min(k.dim()))?.len());
    for b in &sym {
        e.insert_dense(&phi_map(k, b)?.to_vector());
    }
    Ok(PhiReport {
        algebra: k.name().to_string(),
        symmetric_dim: sym.len(),
        alternating_dim: alt.len(),
        phi_rank: e.rank(),
        injective: e.rank() == sym.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynkinIndexResult {
    pub raw_killing_ratio: Rational,
    pub dual_coxeter_source: usize,
    pub dual_coxeter_target: usize,
    pub index: Rational,
}

fn compact_simple(g: &LieAlgebra) -> Result<(), CocycleError> {
    let b = killing_form(g);
    if !b.inertia().is_negative_definite() || structure_analysis(g)? != StructureKind::SimpleReal {
        return Err(CocycleError::NotCompactSimple);
    }
    Ok(())
}

/// Dynkin index of a homomorphism between compact simple algebras: the
/// Killing ratio `c` (with `φ*B_target = c B_source`) times `h∨_source / h∨_target`.
pub fn dynkin_index(phi: &Homomorphism) -> Result<DynkinIndexResult, CocycleError> {
    compact_simple(&phi.source)?;
    compact_simple(&phi.target)?;
    let (st, tt) = match (phi.source_type, phi.target_type) {
        (Some(s), Some(t)) => (s, t),
        _ => return Err(CocycleError::MissingCartanType),
    };
    let b1 = killing_form(&phi.source).gram;
    let b2 = killing_form(&phi.target).gram;
    let pulled = &(&phi.matrix.transpose() * &b2) * &phi.matrix;
    let n = b1.rows();
    let (i, j) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !b1.get(i, j).is_zero())
        .ok_or(CocycleError::NotCompactSimple)?;
    let c = pulled.get(i, j) / b1.get(i, j);
    if pulled != b1.scale(&c) {
        return Err(CocycleError::InconsistentRatio);
    }
    let hs = st.dual_coxeter();
    let ht = tt.dual_coxeter();
    let index = &c * &Rational::new(hs as i64, ht as i64).expect("positive dual Coxeter number");
    if !index.is_integer() || index.is_negative() {
        return Err(CocycleError::NonIntegerIndex(index.to_string()));
    }
    Ok(DynkinIndexResult {
        raw_killing_ratio: c,
        dual_coxeter_source: hs,
        dual_coxeter_target: ht,
        index,
    })
}
