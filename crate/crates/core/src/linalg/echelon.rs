//! Incremental fraction-free row reduction over sparse integer rows.
//!
//! Rows arrive as sparse rational vectors, are scaled to primitive integer
//! rows and reduced against the current pivots by cross-multiplication, so no
//! fractions appear during elimination. Every stored row has a positive
//! leading entry and content 1. Pivots are always leading columns, so the
//! pivot set equals the pivot set of the reduced row echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::int::ExactInt;
use super::Rational;

pub type SparseVec = Vec<(usize, Rational)>;

type IntRow<I> = Vec<(usize, I)>;

const NO_PIVOT: usize = usize::MAX;

#[derive(Clone, Debug)]
struct Echelon<I> {
    cols: usize,
    rows: Vec<IntRow<I>>,
    pivot_row: Vec<usize>,
}

fn normalize<I: ExactInt>(row: &mut IntRow<I>) -> Option<()> {
    let Some(first) = row.first() else {
        return Some(());
    };
    let mut g = first.1.gcd(&first.1)?;
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v)?;
    }
    let negate = row[0].1.is_negative();
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g)?;
        }
    }
    if negate {
        for (_, v) in row.iter_mut() {
            *v = v.neg()?;
        }
    }
    Some(())
}

/// `alpha * r - beta * p`, merged by column, zeros dropped.
fn combine<I: ExactInt>(r: &IntRow<I>, alpha: &I, p: &IntRow<I>, beta: &I) -> Option<IntRow<I>> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let take_r = j >= p.len() || (i < r.len() && r[i].0 < p[j].0);
        let take_p = i >= r.len() || (j < p.len() && p[j].0 < r[i].0);
        if take_r {
            out.push((r[i].0, r[i].1.mul(alpha)?));
            i += 1;
        } else if take_p {
            out.push((p[j].0, p[j].1.mul(beta)?.neg()?));
            j += 1;
        } else {
            let v = r[i].1.mul(alpha)?.sub(&p[j].1.mul(beta)?)?;
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Eliminates column `col` of `r` using pivot row `p` whose leading column is `col`.
fn eliminate<I: ExactInt>(r: &IntRow<I>, p: &IntRow<I>, col: usize) -> Option<IntRow<I>> {
    let b = match r.binary_search_by_key(&col, |e| e.0) {
        Ok(idx) => r[idx].1.clone(),
        Err(_) => return Some(r.clone()),
    };
    let a = &p[0].1;
    let g = a.gcd(&b)?;
    let alpha = a.div_exact(&g)?;
    let beta = b.div_exact(&g)?;
    let mut out = combine(r, &alpha, p, &beta)?;
    normalize(&mut out)?;
    Some(out)
}

impl<I: ExactInt> Echelon<I> {
    fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; cols],
        }
    }

    fn reduce(&self, mut row: IntRow<I>) -> Option<IntRow<I>> {
        loop {
            let Some(&(c, _)) = row.first() else {
                return Some(row);
            };
            let pr = self.pivot_row[c];
            if pr == NO_PIVOT {
                return Some(row);
            }
            row = eliminate(&row, &self.rows[pr], c)?;
        }
    }

    fn insert(&mut self, row: IntRow<I>) -> Option<bool> {
        let mut row = self.reduce(row)?;
        if row.is_empty() {
            return Some(false);
        }
        normalize(&mut row)?;
        let lead = row[0].0;
        self.pivot_row[lead] = self.rows.len();
        self.rows.push(row);
        Some(true)
    }

    /// Fully reduced rows sorted by pivot column.
    fn rref(&self) -> Option<Vec<IntRow<I>>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.rows[i][0].0);
        let mut rows: Vec<IntRow<I>> = order.iter().map(|&i| self.rows[i].clone()).collect();
        for pi in (0..rows.len()).rev() {
            let col = rows[pi][0].0;
            let (above, rest) = rows.split_at_mut(pi);
            let p = &rest[0];
            for r in above.iter_mut() {
                if r.binary_search_by_key(&col, |e| e.0).is_ok() {
                    *r = eliminate(r, p, col)?;
                }
            }
        }
        Some(rows)
    }

    fn promote(&self) -> Echelon<BigInt> {
        Echelon {
            cols: self.cols,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|(c, v)| (*c, v.to_big())).collect())
                .collect(),
            pivot_row: self.pivot_row.clone(),
        }
    }
}

#[derive(Clone, Debug)]
enum Backend {
    Small(Echelon<i128>),
    Big(Echelon<BigInt>),
}

/// Row space of a rational matrix, built one row at a time.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    backend: Backend,
}

/// Primitive integer row proportional to a sparse rational row.
fn integer_row(row: &[(usize, Rational)]) -> IntRow<BigInt> {
    let mut lcm = BigInt::one();
    for (_, v) in row {
        if !v.is_zero() {
            lcm = lcm.lcm(v.denom());
        }
    }
    let mut out: IntRow<BigInt> = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    out.sort_by_key(|e| e.0);
    debug_assert!(
        out.windows(2).all(|w| w[0].0 < w[1].0),
        "duplicate column in sparse row"
    );
    let mut g = <BigInt as Zero>::zero();
    for (_, v) in &out {
        g = Integer::gcd(&g, v);
    }
    if !Zero::is_zero(&g) && !One::is_one(&g) {
        for (_, v) in out.iter_mut() {
            *v = &*v / &g;
        }
    }
    out
}

fn narrow(row: &IntRow<BigInt>) -> Option<IntRow<i128>> {
    row.iter()
        .map(|(c, v)| <i128 as ExactInt>::from_big(v).map(|x| (*c, x)))
        .collect()
}

fn to_rational_rows<I: ExactInt>(rows: &[IntRow<I>]) -> Vec<IntRow<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|(c, v)| (*c, v.to_big())).collect())
        .collect()
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        RowEchelon {
            backend: Backend::Small(Echelon::new(cols)),
        }
    }

    pub fn cols(&self) -> usize {
        match &self.backend {
            Backend::Small(e) => e.cols,
            Backend::Big(e) => e.cols,
        }
    }

    pub fn rank(&self) -> usize {
        match &self.backend {
            Backend::Small(e) => e.rows.len(),
            Backend::Big(e) => e.rows.len(),
        }
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.cols()
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert_sparse(&mut self, row: &[(usize, Rational)]) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.cols()));
        let big = integer_row(row);
        if let Backend::Small(e) = &mut self.backend {
            if let Some(small) = narrow(&big) {
                if let Some(added) = e.insert(small) {
                    return added;
                }
            }
            let promoted = e.promote();
            self.backend = Backend::Big(promoted);
        }
        match &mut self.backend {
            Backend::Big(e) => e.insert(big).expect("bigint elimination cannot overflow"),
            Backend::Small(_) => unreachable!(),
        }
    }

    pub fn insert_dense(&mut self, row: &[Rational]) -> bool {
        self.insert_sparse(&to_sparse(row))
    }

    /// Whether the row lies in the current row space.
    pub fn contains_sparse(&self, row: &[(usize, Rational)]) -> bool {
        let big = integer_row(row);
        if let Backend::Small(e) = &self.backend {
            if let Some(small) = narrow(&big) {
                if let Some(r) = e.reduce(small) {
                    return r.is_empty();
                }
            }
            return e.promote().reduce(big).expect("bigint").is_empty();
        }
        match &self.backend {
            Backend::Big(e) => e.reduce(big).expect("bigint").is_empty(),
            Backend::Small(_) => unreachable!(),
        }
    }

    pub fn contains_dense(&self, row: &[Rational]) -> bool {
        self.contains_sparse(&to_sparse(row))
    }

    fn reduced_int_rows(&self) -> Vec<IntRow<BigInt>> {
        match &self.backend {
            Backend::Small(e) => match e.rref() {
                Some(rows) => to_rational_rows(&rows),
                None => e.promote().rref().expect("bigint"),
            },
            Backend::Big(e) => e.rref().expect("bigint"),
        }
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = match &self.backend {
            Backend::Small(e) => e.rows.iter().map(|r| r[0].0).collect(),
            Backend::Big(e) => e.rows.iter().map(|r| r[0].0).collect(),
        };
        cols.sort_unstable();
        cols
    }

    /// Reduced row echelon form as sparse rational rows with unit pivots.
    pub fn rref_sparse(&self) -> Vec<SparseVec> {
        self.reduced_int_rows()
            .into_iter()
            .map(|r| {
                let lead = r[0].1.clone();
                r.into_iter()
                    .map(|(c, v)| (c, Rational::new(v, lead.clone()).expect("nonzero pivot")))
                    .collect()
            })
            .collect()
    }

    /// Reduced row echelon form as dense rational rows with unit pivots.
    pub fn rref_rows(&self) -> Vec<Vec<Rational>> {
        let cols = self.cols();
        self.rref_sparse().into_iter().map(|r| to_dense(&r, cols)).collect()
    }

    /// Basis of the right null space of the accumulated rows: one vector per
    /// free column, ascending, with that free variable set to 1 and the other
    /// free variables set to 0.
    pub fn kernel_basis_sparse(&self) -> Vec<SparseVec> {
        let cols = self.cols();
        let rows = self.reduced_int_rows();
        let mut is_pivot = vec![false; cols];
        for r in &rows {
            is_pivot[r[0].0] = true;
        }
        let free: Vec<usize> = (0..cols).filter(|c| !is_pivot[*c]).collect();
        let mut slot = vec![usize::MAX; cols];
        for (k, f) in free.iter().enumerate() {
            slot[*f] = k;
        }
        let mut basis: Vec<SparseVec> = free.iter().map(|&f| vec![(f, Rational::one())]).collect();
        for r in &rows {
            let (pc, lead) = (&r[0].0, &r[0].1);
            for (c, v) in r.iter().skip(1) {
                let k = slot[*c];
                debug_assert!(k != usize::MAX, "reduced row touches another pivot");
                basis[k].push((*pc, Rational::new(-v, lead.clone()).expect("nonzero pivot")));
            }
        }
        for b in basis.iter_mut() {
            b.sort_by_key(|e| e.0);
        }
        basis
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let cols = self.cols();
        self.kernel_basis_sparse()
            .into_iter()
            .map(|r| to_dense(&r, cols))
            .collect()
    }

    #[cfg(test)]
    fn is_big(&self) -> bool {
        matches!(self.backend, Backend::Big(_))
    }
}

pub fn to_dense(v: &[(usize, Rational)], dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (c, x) in v {
        out[*c] = x.clone();
    }
    out
}

pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Reduced echelon basis of the span of the given vectors, in canonical order.
pub fn canonical_span(vectors: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    let mut e = RowEchelon::new(dim);
    for v in vectors {
        e.insert_dense(v);
    }
    e.rref_rows()
}
