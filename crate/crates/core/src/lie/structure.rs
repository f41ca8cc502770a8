use std::collections::BTreeMap;

use serde::Serialize;

use super::algebra::unit;
use super::assoc::MatrixAlgebra;
use super::forms::killing_form;
use super::LieAlgebra;
use crate::error::LieError;
use crate::linalg::{canonical_span, combine, Matrix, Polynomial, Rational, RowEchelon, SparseVec};

/// Center: common kernel of all `ad e_i`, in canonical form.
pub fn center(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = g.dim();
    let mut rows: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for (k, v) in g.bracket_basis(i, j) {
                rows.entry((i, *k)).or_default().push((j, v.clone()));
            }
        }
    }
    let mut e = RowEchelon::new(n);
    for r in rows.values() {
        if e.is_full() {
            break;
        }
        e.insert_sparse(r);
    }
    e.kernel_basis()
}

/// Derived subalgebra `[g, g]`, in canonical form.
pub fn derived_subalgebra(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = g.dim();
    let mut e = RowEchelon::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let b = g.bracket_basis(i, j);
            if !b.is_empty() {
                e.insert_sparse(b);
            }
        }
    }
    e.rref_rows()
}

/// Closes `list` under brackets; pairs `(j, i)` with `i < *cursor` are done.
fn close_under_brackets(g: &LieAlgebra, list: &mut Vec<Vec<Rational>>, span: &mut RowEchelon, cursor: &mut usize) {
    while *cursor < list.len() {
        let i = *cursor;
        for j in 0..i {
            if span.is_full() {
                break;
            }
            let b = g.bracket(&list[j], &list[i]);
            if span.insert_dense(&b) {
                list.push(b);
            }
        }
        *cursor += 1;
    }
}

/// Subalgebra generated by the given vectors, in canonical form.
pub fn subalgebra_generated(g: &LieAlgebra, vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut span = RowEchelon::new(g.dim());
    let mut list = Vec::new();
    for v in vectors {
        if span.insert_dense(v) {
            list.push(v.clone());
        }
    }
    let mut cursor = 0;
    close_under_brackets(g, &mut list, &mut span, &mut cursor);
    span.rref_rows()
}

/// Ideal generated by `v`, in canonical form.
pub fn ideal_generated(g: &LieAlgebra, v: &[Rational]) -> Vec<Vec<Rational>> {
    let n = g.dim();
    let mut span = RowEchelon::new(n);
    let mut list = Vec::new();
    if span.insert_dense(v) {
        list.push(v.to_vec());
    }
    let mut head = 0;
    while head < list.len() && !span.is_full() {
        for i in 0..n {
            let b = g.bracket(&unit(n, i), &list[head]);
            if span.insert_dense(&b) {
                list.push(b);
            }
        }
        head += 1;
    }
    span.rref_rows()
}

/// Basis indices forming a Lie generating set, chosen greedily in basis order.
pub fn generating_set(g: &LieAlgebra) -> Vec<usize> {
    let n = g.dim();
    let mut span = RowEchelon::new(n);
    let mut list = Vec::new();
    let mut cursor = 0;
    let mut gens = Vec::new();
    for b in 0..n {
        if span.is_full() {
            break;
        }
        let e = unit(n, b);
        if span.contains_dense(&e) {
            continue;
        }
        span.insert_dense(&e);
        list.push(e);
        gens.push(b);
        close_under_brackets(g, &mut list, &mut span, &mut cursor);
    }
    gens
}

/// Associative algebra of endomorphisms commuting with every `ad x`.
#[derive(Clone, Debug)]
pub struct Centroid {
    pub algebra: MatrixAlgebra,
}

impl Centroid {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn basis(&self) -> &[Matrix] {
        self.algebra.basis()
    }

    pub fn multiplication_table(&self) -> &[Vec<Vec<Rational>>] {
        self.algebra.table()
    }
}

/// Centroid of `g`, recomputed with a verification that every basis element
/// commutes with every `ad e_i`.
pub fn centroid(g: &LieAlgebra) -> Centroid {
    let n = g.dim();
    let gens: Vec<Vec<Rational>> = generating_set(g).into_iter().map(|i| unit(n, i)).collect();
    let raw = centroid_via_cyclic_vector(g, &gens).unwrap_or_else(|| centroid_full_system(g, &gens));
    let flat: Vec<Vec<Rational>> = raw.iter().map(|m| m.entries().to_vec()).collect();
    let basis: Vec<Matrix> = canonical_span(&flat, n * n)
        .into_iter()
        .map(|e| Matrix::new(n, n, e).expect("square"))
        .collect();
    for t in &basis {
        for ad in g.ad_all() {
            assert!((t * ad) == (ad * t), "centroid element fails to commute");
        }
    }
    Centroid {
        algebra: MatrixAlgebra::new(basis).expect("centroid is a unital algebra"),
    }
}

/// Solves `T ad x = ad x T` for `T` directly, `n^2` unknowns.
pub fn centroid_full_system(g: &LieAlgebra, gens: &[Vec<Rational>]) -> Vec<Matrix> {
    let n = g.dim();
    let mut e = RowEchelon::new(n * n);
    for x in gens {
        let a = g.ad_vec(x);
        for r in 0..n {
            for c in 0..n {
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                for k in 0..n {
                    let akc = a.get(k, c);
                    if !akc.is_zero() {
                        *row.entry(r * n + k).or_insert_with(Rational::zero) += akc;
                    }
                    let ark = a.get(r, k);
                    if !ark.is_zero() {
                        *row.entry(k * n + c).or_insert_with(Rational::zero) -= ark;
                    }
                }
                let row: SparseVec = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    e.insert_sparse(&row);
                }
            }
        }
    }
    e.kernel_basis()
        .into_iter()
        .map(|v| Matrix::new(n, n, v).expect("square"))
        .collect()
}

/// For semisimple `g` any vector with nonzero components in every simple
/// ideal is cyclic for the adjoint action, and a centroid element `T` is
/// determined by `w = T v`. This leaves `n` unknowns instead of `n^2`.
/// Returns `None` when no cyclic vector is found.
pub fn centroid_via_cyclic_vector(g: &LieAlgebra, gens: &[Vec<Rational>]) -> Option<Vec<Matrix>> {
    let n = g.dim();
    if n == 0 {
        return None;
    }
    let adg: Vec<Matrix> = gens.iter().map(|x| g.ad_vec(x)).collect();
    for attempt in 0..3u32 {
        let v: Vec<Rational> = (0..n).map(|i| Rational::from(((i + 1) as i64).pow(attempt))).collect();
        let mut span = RowEchelon::new(n);
        span.insert_dense(&v);
        let mut basis = vec![v];
        let mut words: Vec<(usize, usize)> = vec![(0, 0)];
        let mut head = 0;
        while head < basis.len() && basis.len() < n {
            for (gi, a) in adg.iter().enumerate() {
                let w = a.mul_vec(&basis[head]);
                if span.insert_dense(&w) {
                    basis.push(w);
                    words.push((head, gi));
                    if basis.len() == n {
                        break;
                    }
                }
            }
            head += 1;
        }
        if basis.len() < n {
            continue;
        }
        let binv = Matrix::from_columns(&basis, n).inverse()?;
        let ts: Vec<Matrix> = (0..n)
            .map(|k| {
                let mut cols = vec![unit(n, k)];
                for &(p, gi) in words.iter().skip(1) {
                    let next = adg[gi].mul_vec(&cols[p]);
                    cols.push(next);
                }
                &Matrix::from_columns(&cols, n) * &binv
            })
            .collect();
        let mut e = RowEchelon::new(n);
        for a in &adg {
            let comms: Vec<Matrix> = ts.iter().map(|t| &(t * a) - &(a * t)).collect();
            for idx in 0..n * n {
                let row: SparseVec = comms
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.entries()[idx].is_zero())
                    .map(|(k, c)| (k, c.entries()[idx].clone()))
                    .collect();
                if !row.is_empty() {
                    e.insert_sparse(&row);
                }
            }
        }
        let kernel = e.kernel_basis();
        return Some(
            kernel
                .iter()
                .map(|w| {
                    let mut m = Matrix::zeros(n, n);
                    for (c, t) in w.iter().zip(&ts) {
                        if !c.is_zero() {
                            m = &m + &t.scale(c);
                        }
                    }
                    m
                })
                .collect(),
        );
    }
    None
}

/// Output of [`complex_structure`].
#[derive(Clone, Debug, PartialEq)]
pub enum ComplexStructure {
    /// A rational `J` with `J^2 = -1` commuting with the adjoint action.
    Rational(Matrix),
    /// The centroid is a copy of C but no rational `J` exists; the minimal
    /// polynomial of the centroid generator certifies existence.
    Certificate { minimal_polynomial: Polynomial },
}

fn is_semisimple(g: &LieAlgebra) -> bool {
    g.dim() > 0 && killing_form(g).gram.rank() == g.dim()
}

/// Complex structure of a simple algebra, if any.
pub fn complex_structure(g: &LieAlgebra) -> Result<Option<ComplexStructure>, LieError> {
    if !is_semisimple(g) {
        return Err(LieError::NotSimple);
    }
    let c = centroid(g);
    complex_structure_from_centroid(g.dim(), &c)
}

pub(crate) fn complex_structure_from_centroid(n: usize, c: &Centroid) -> Result<Option<ComplexStructure>, LieError> {
    match c.dim() {
        1 => Ok(None),
        2 => {
            let id = Matrix::identity(n);
            let t = c
                .basis()
                .iter()
                .find(|m| {
                    let flat = vec![m.entries().to_vec(), id.entries().to_vec()];
                    canonical_span(&flat, n * n).len() == 2
                })
                .expect("two-dimensional centroid has a non-scalar element");
            let f = t.minimal_polynomial();
            let disc = f.discriminant().ok_or(LieError::NotSimple)?;
            if !disc.is_negative() {
                return Err(LieError::NotSimple);
            }
            let half_b = f.coeff(1) / Rational::from(2);
            let radicand = f.coeff(0) - &half_b * &half_b;
            match radicand.sqrt_exact() {
                Some(s) => {
                    let j = t
                        .clone()
                        .add_scaled_identity(&half_b)
                        .scale(&s.recip().expect("positive"));
                    debug_assert_eq!(&j * &j, Matrix::scalar(n, &Rational::from(-1)));
                    Ok(Some(ComplexStructure::Rational(j)))
                }
                None => Ok(Some(ComplexStructure::Certificate { minimal_polynomial: f })),
            }
        }
        _ => Err(LieError::NotSimple),
    }
}

/// Simple ideal found by [`structure_analysis`], in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimpleIdeal {
    pub dim: usize,
    pub complex: bool,
    #[serde(skip)]
    pub basis: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "ideals", rename_all = "snake_case")]
pub enum StructureKind {
    Abelian,
    NotSemisimple,
    SimpleReal,
    SimpleComplex,
    SemisimpleSplit(Vec<SimpleIdeal>),
}

/// Classifies `g` via its Killing form and centroid, splitting semisimple
/// algebras along centroid idempotents.
pub fn structure_analysis(g: &LieAlgebra) -> Result<StructureKind, LieError> {
    if g.is_abelian() {
        return Ok(StructureKind::Abelian);
    }
    if !is_semisimple(g) {
        return Ok(StructureKind::NotSemisimple);
    }
    let ideals = split_semisimple(g)?;
    if ideals.len() == 1 {
        return Ok(if ideals[0].complex {
            StructureKind::SimpleComplex
        } else {
            StructureKind::SimpleReal
        });
    }
    Ok(StructureKind::SemisimpleSplit(ideals))
}

fn split_semisimple(g: &LieAlgebra) -> Result<Vec<SimpleIdeal>, LieError> {
    let n = g.dim();
    let c = centroid(g);
    match complex_structure_from_centroid(n, &c) {
        Ok(cs) => {
            let all: Vec<Vec<Rational>> = (0..n).map(|i| unit(n, i)).collect();
            return Ok(vec![SimpleIdeal {
                dim: n,
                complex: cs.is_some(),
                basis: all,
            }]);
        }
        Err(LieError::NotSimple) => {}
        Err(e) => return Err(e),
    }
    let e = c.algebra.find_idempotent().ok_or(LieError::Undecided(c.dim()))?;
    let em = c.algebra.element(&e);
    let fm = &Matrix::identity(n) - &em;
    let mut out = Vec::new();
    for proj in [em, fm] {
        let basis = canonical_span(&proj.columns(), n);
        let labels = (0..basis.len()).map(|i| format!("v{i}")).collect();
        let sub = g.subalgebra("ideal", &basis, labels)?;
        for ideal in split_semisimple(&sub)? {
            let mapped: Vec<Vec<Rational>> = ideal.basis.iter().map(|v| combine(v, &basis, n)).collect();
            out.push(SimpleIdeal {
                dim: ideal.dim,
                complex: ideal.complex,
                basis: mapped,
            });
        }
    }
    Ok(out)
}
