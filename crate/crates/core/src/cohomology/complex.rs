use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::forms::{below, AlternatingForm, Mask, SubsetIndex};
use super::pair::{PairDescription, ReductivePair};
use crate::error::CohomologyError;
use crate::lie::generating_set;
use crate::linalg::{Matrix, Rational, RowEchelon, SparseVec};

fn sparse_rows(a: &Matrix) -> Vec<SparseVec> {
    (0..a.rows())
        .map(|j| {
            a.row(j)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect()
        })
        .collect()
}

fn collect(acc: HashMap<usize, Rational>) -> SparseVec {
    let mut v: SparseVec = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    v.sort_by_key(|e| e.0);
    v
}

fn add_into(acc: &mut HashMap<usize, Rational>, key: usize, v: Rational) {
    match acc.get_mut(&key) {
        Some(x) => *x += v,
        None => {
            acc.insert(key, v);
        }
    }
}

/// Derivation extension to `Λ^k V*` of the dual action `e^j -> -Σ_i a[j][i] e^i`.
struct DerivationAction<'a> {
    index: &'a SubsetIndex,
    rows: Vec<SparseVec>,
}

impl<'a> DerivationAction<'a> {
    fn new(index: &'a SubsetIndex, a: &Matrix) -> Self {
        DerivationAction {
            index,
            rows: sparse_rows(a),
        }
    }

    fn apply_basis(&self, mask: Mask, scale: &Rational, acc: &mut HashMap<usize, Rational>) {
        let mut m = mask;
        while m != 0 {
            let it = m.trailing_zeros() as usize;
            m &= m - 1;
            let rest = mask & !(1 << it);
            let pos = below(rest, it);
            for (i, a) in &self.rows[it] {
                if rest & (1 << i) != 0 {
                    continue;
                }
                let mut c = -(a * scale);
                if (pos + below(rest, *i)) % 2 == 1 {
                    c = -c;
                }
                add_into(acc, self.index.rank(rest | (1 << i)), c);
            }
        }
    }

    fn apply(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut acc = HashMap::new();
        for (i, c) in v {
            self.apply_basis(self.index.subsets[*i], c, &mut acc);
        }
        collect(acc)
    }
}

/// `L_A ω` for the action of the matrix `a` on the underlying space.
pub fn lie_derivative_by(a: &Matrix, omega: &AlternatingForm) -> Result<AlternatingForm, CohomologyError> {
    if a.rows() != omega.space_dim || a.cols() != omega.space_dim {
        return Err(CohomologyError::DimensionMismatch(format!(
            "{}x{} action on a {}-dimensional space",
            a.rows(),
            a.cols(),
            omega.space_dim
        )));
    }
    let index = SubsetIndex::new(omega.space_dim, omega.degree);
    let act = DerivationAction::new(&index, a);
    Ok(AlternatingForm::from_sparse(
        &index,
        &act.apply(&omega.to_sparse(&index)),
    ))
}

/// `L_X ω` for `X` in m acting on forms on p.
pub fn lie_derivative(
    pair: &ReductivePair,
    x: &[Rational],
    omega: &AlternatingForm,
) -> Result<AlternatingForm, CohomologyError> {
    if x.len() != pair.g_dim() || omega.space_dim != pair.p_dim() {
        return Err(CohomologyError::DimensionMismatch(
            "vector or form does not fit the pair".into(),
        ));
    }
    if !pair.contains_in_m(x) {
        return Err(CohomologyError::DimensionMismatch("X is not in m".into()));
    }
    lie_derivative_by(&pair.action(x), omega)
}

fn combine_sparse(coeffs: &[(usize, Rational)], vectors: &[SparseVec]) -> SparseVec {
    let mut acc = HashMap::new();
    for (s, c) in coeffs {
        for (i, v) in &vectors[*s] {
            add_into(&mut acc, *i, c * v);
        }
    }
    collect(acc)
}

/// Reduced echelon basis (sparse, over the lexicographic `Λ^degree` basis) of
/// the forms annihilated by every derivation induced from `actions`.
pub(crate) fn invariant_vectors(index: &SubsetIndex, actions: &[Matrix]) -> Vec<SparseVec> {
    let n = index.len();
    let mut current: Option<Vec<SparseVec>> = None;
    for a in actions {
        let act = DerivationAction::new(index, a);
        let next = match &current {
            None => {
                let mut rows: Vec<SparseVec> = vec![Vec::new(); n];
                for (i, &mask) in index.subsets.iter().enumerate() {
                    let mut acc = HashMap::new();
                    act.apply_basis(mask, &Rational::one(), &mut acc);
                    for (j, c) in collect(acc) {
                        rows[j].push((i, c));
                    }
                }
                let mut e = RowEchelon::new(n);
                for r in rows.iter().filter(|r| !r.is_empty()) {
                    e.insert_sparse(r);
                }
                e.kernel_basis_sparse()
            }
            Some(basis) => {
                let d = basis.len();
                let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
                for (s, v) in basis.iter().enumerate() {
                    for (j, c) in act.apply(v) {
                        rows[j].push((s, c));
                    }
                }
                let mut e = RowEchelon::new(d);
                for r in rows.iter().filter(|r| !r.is_empty()) {
                    e.insert_sparse(r);
                    if e.is_full() {
                        break;
                    }
                }
                e.kernel_basis_sparse()
                    .iter()
                    .map(|c| combine_sparse(c, basis))
                    .collect()
            }
        };
        let empty = next.is_empty();
        current = Some(next);
        if empty {
            break;
        }
    }
    let vectors = current.unwrap_or_else(|| (0..n).map(|i| vec![(i, Rational::one())]).collect());
    let mut e = RowEchelon::new(n);
    for v in &vectors {
        e.insert_sparse(v);
    }
    e.rref_sparse()
}

/// Basis of `(Λ^degree V*)^a` for matrices `a` acting on `V = Q^dim`, as
/// alternating forms in reduced echelon order.
pub fn invariants(actions: &[Matrix], dim: usize, degree: usize) -> Result<Vec<AlternatingForm>, CohomologyError> {
    if degree > dim {
        return Err(CohomologyError::DegreeOutOfRange { degree, dim });
    }
    if actions.iter().any(|a| a.rows() != dim || a.cols() != dim) {
        return Err(CohomologyError::DimensionMismatch("action matrix size".into()));
    }
    let index = SubsetIndex::new(dim, degree);
    Ok(invariant_vectors(&index, actions)
        .iter()
        .map(|v| AlternatingForm::from_sparse(&index, v))
        .collect())
}

/// Matrices of `pi_p ad X` on p for a generating set of m.
pub fn m_actions(pair: &ReductivePair) -> Vec<Matrix> {
    if pair.m_dim() == 0 {
        return Vec::new();
    }
    let labels = (0..pair.m_dim()).map(|i| format!("m{i}")).collect();
    let m = pair
        .g
        .subalgebra("m", &pair.m_basis, labels)
        .expect("m is a subalgebra");
    generating_set(&m)
        .into_iter()
        .map(|i| pair.action(&pair.m_basis[i]))
        .collect()
}

pub fn invariant_forms(pair: &ReductivePair, degree: usize) -> Result<Vec<AlternatingForm>, CohomologyError> {
    invariants(&m_actions(pair), pair.p_dim(), degree)
}

/// Invariant cochains of one degree, as reduced echelon rows.
struct InvariantSpace {
    index: SubsetIndex,
    basis: Vec<SparseVec>,
}

impl InvariantSpace {
    fn compute(pair: &ReductivePair, actions: &[Matrix], degree: usize) -> Self {
        let index = SubsetIndex::new(pair.p_dim(), degree.min(pair.p_dim()));
        let basis = if degree > pair.p_dim() {
            Vec::new()
        } else {
            invariant_vectors(&index, actions)
        };
        InvariantSpace { index, basis }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `w` in the basis, if `w` lies in the span.
    fn coordinates(&self, w: &[(usize, Rational)]) -> Option<Vec<Rational>> {
        let lookup: HashMap<usize, &Rational> = w.iter().map(|(i, v)| (*i, v)).collect();
        let c: Vec<Rational> = self
            .basis
            .iter()
            .map(|r| lookup.get(&r[0].0).map(|v| (*v).clone()).unwrap_or_else(Rational::zero))
            .collect();
        let nz: Vec<(usize, Rational)> = c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        let back = combine_sparse(&nz, &self.basis);
        if back.as_slice() == w {
            Some(c)
        } else {
            None
        }
    }
}

/// Sparse differential `Λ^k p* -> Λ^{k+1} p*` built from the p-projected bracket.
fn apply_differential(
    from: &SubsetIndex,
    to: &SubsetIndex,
    table: &[Vec<(usize, usize, Rational)>],
    v: &[(usize, Rational)],
) -> SparseVec {
    let mut acc = HashMap::new();
    for (idx, scale) in v {
        let mask = from.subsets[*idx];
        let mut m = mask;
        while m != 0 {
            let it = m.trailing_zeros() as usize;
            m &= m - 1;
            let rest = mask & !(1 << it);
            let pos = below(rest, it);
            for (b, c, coef) in &table[it] {
                if rest & ((1 << b) | (1 << c)) != 0 {
                    continue;
                }
                let mut x = -(coef * scale);
                if (pos + below(rest, *b) + below(rest, *c)) % 2 == 1 {
                    x = -x;
                }
                add_into(&mut acc, to.rank(rest | (1 << b) | (1 << c)), x);
            }
        }
    }
    collect(acc)
}

/// `table[a]` lists `(b, c, C)` with `b < c` and `C` the `p_a`-coefficient of `pi_p [p_b, p_c]`.
fn differential_table(pair: &ReductivePair) -> Vec<Vec<(usize, usize, Rational)>> {
    let pd = pair.p_dim();
    let mut table = vec![Vec::new(); pd];
    for b in 0..pd {
        for c in (b + 1)..pd {
            for (a, v) in pair.p_bracket(b, c) {
                table[*a].push((b, c, v.clone()));
            }
        }
    }
    table
}

fn differential_between(
    pair: &ReductivePair,
    table: &[Vec<(usize, usize, Rational)>],
    from: &InvariantSpace,
    to: &InvariantSpace,
    degree: usize,
) -> Result<Matrix, CohomologyError> {
    let mut m = Matrix::zeros(to.dim(), from.dim());
    if degree + 1 > pair.p_dim() {
        return Ok(m);
    }
    for (j, v) in from.basis.iter().enumerate() {
        let image = apply_differential(&from.index, &to.index, table, v);
        let c = to
            .coordinates(&image)
            .ok_or(CohomologyError::ImageNotInvariant(degree))?;
        for (i, x) in c.into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    Ok(m)
}

/// `dω` for a form on p, using the p-projected bracket.
pub fn differential(pair: &ReductivePair, omega: &AlternatingForm) -> Result<AlternatingForm, CohomologyError> {
    let pd = pair.p_dim();
    if omega.space_dim != pd {
        return Err(CohomologyError::DimensionMismatch("form does not live on p".into()));
    }
    if omega.degree + 1 > pd {
        return Ok(AlternatingForm::zero(pd, omega.degree + 1));
    }
    let from = SubsetIndex::new(pd, omega.degree);
    let to = SubsetIndex::new(pd, omega.degree + 1);
    let image = apply_differential(&from, &to, &differential_table(pair), &omega.to_sparse(&from));
    Ok(AlternatingForm::from_sparse(&to, &image))
}

/// Matrix of `d_k` on invariant cochains, in the reduced echelon bases of
/// `(Λ^k p*)^m` and `(Λ^{k+1} p*)^m`.
pub fn relative_differential(pair: &ReductivePair, degree: usize) -> Result<Matrix, CohomologyError> {
    let actions = m_actions(pair);
    let from = InvariantSpace::compute(pair, &actions, degree);
    let to = InvariantSpace::compute(pair, &actions, degree + 1);
    differential_between(pair, &differential_table(pair), &from, &to, degree)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub k: usize,
    pub invariant_dim: usize,
    pub d_rank: usize,
    pub h_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub pair: PairDescription,
    pub degrees: Vec<DegreeReport>,
    pub symmetric_pair: bool,
}

impl CohomologyReport {
    pub fn h(&self, k: usize) -> Option<usize> {
        self.degrees.get(k).map(|d| d.h_dim)
    }

    pub fn h_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.h_dim).collect()
    }
}

/// Dimensions of `H^k(g, m)` for `k = 0..=max_degree`. Degrees above `dim p`
/// have no cochains and report zero.
pub fn cohomology_dims(pair: &ReductivePair, max_degree: usize) -> Result<CohomologyReport, CohomologyError> {
    let actions = m_actions(pair);
    let spaces: Vec<InvariantSpace> = (0..=max_degree + 1)
        .into_par_iter()
        .map(|k| InvariantSpace::compute(pair, &actions, k))
        .collect();
    let table = differential_table(pair);
    let ds: Vec<Matrix> = (0..=max_degree)
        .into_par_iter()
        .map(|k| differential_between(pair, &table, &spaces[k], &spaces[k + 1], k))
        .collect::<Result<_, _>>()?;
    for k in 0..max_degree {
        if !(&ds[k + 1] * &ds[k]).is_zero() {
            return Err(CohomologyError::DSquaredNonzero(k));
        }
    }
    let ranks: Vec<usize> = ds.iter().map(Matrix::rank).collect();
    let degrees = (0..=max_degree)
        .map(|k| {
            let dim = spaces[k].dim();
            let prev = if k == 0 { 0 } else { ranks[k - 1] };
            DegreeReport {
                k,
                invariant_dim: dim,
                d_rank: ranks[k],
                h_dim: dim - ranks[k] - prev,
            }
        })
        .collect();
    Ok(CohomologyReport {
        pair: pair.describe(),
        degrees,
        symmetric_pair: pair.is_symmetric(),
    })
}
