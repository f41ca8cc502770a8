use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::CohomologyError;
use crate::linalg::{Rational, SparseVec};

/// Largest space dimension supported by the bitmask indexing.
pub const MAX_SPACE_DIM: usize = 128;

pub type Mask = u128;

/// All strictly increasing `degree`-tuples in `0..space_dim`, lexicographic.
pub fn form_basis(space_dim: usize, degree: usize) -> Result<Vec<Vec<usize>>, CohomologyError> {
    if degree > space_dim {
        return Err(CohomologyError::DegreeOutOfRange { degree, dim: space_dim });
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(degree);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=(n - (k - cur.len())) {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, space_dim, degree, &mut cur, &mut out);
    Ok(out)
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub(crate) fn mask_of(tuple: &[usize]) -> Mask {
    tuple.iter().fold(0, |m, &i| m | (1 << i))
}

pub(crate) fn indices_of(mut mask: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        out.push(i);
        mask &= mask - 1;
    }
    out
}

/// Number of set bits of `mask` strictly below position `i`.
#[inline]
pub(crate) fn below(mask: Mask, i: usize) -> u32 {
    (mask & ((1 << i) - 1)).count_ones()
}

/// Lexicographic ranking of `k`-subsets of `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct SubsetIndex {
    pub n: usize,
    pub k: usize,
    pub subsets: Vec<Mask>,
    // cum[r][j] = sum_{t < j} C(n - 1 - t, r)
    cum: Vec<Vec<usize>>,
}

impl SubsetIndex {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= MAX_SPACE_DIM && k <= n);
        let subsets = form_basis(n, k).expect("k <= n").iter().map(|t| mask_of(t)).collect();
        let cum = (0..k.max(1))
            .map(|r| {
                let mut c = vec![0; n + 1];
                for t in 0..n {
                    c[t + 1] = c[t] + binomial(n - 1 - t, r);
                }
                c
            })
            .collect();
        SubsetIndex { n, k, subsets, cum }
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn rank(&self, mask: Mask) -> usize {
        let mut rank = 0;
        let mut lo = 0;
        let mut m = mask;
        let mut i = 0;
        while m != 0 {
            let a = m.trailing_zeros() as usize;
            let r = self.k - 1 - i;
            rank += self.cum[r][a] - self.cum[r][lo];
            lo = a + 1;
            m &= m - 1;
            i += 1;
        }
        rank
    }
}

/// Alternating multilinear form on an `n`-dimensional space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlternatingForm {
    pub space_dim: usize,
    pub degree: usize,
    /// Keys are strictly increasing index tuples; absent keys are zero.
    #[serde(serialize_with = "coefficient_list")]
    pub coefficients: BTreeMap<Vec<usize>, Rational>,
}

fn coefficient_list<S: serde::Serializer>(map: &BTreeMap<Vec<usize>, Rational>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(map.iter())
}

/// Sign of the permutation sorting `t`, or `None` if an index repeats.
fn sort_sign(t: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = t.to_vec();
    let mut odd = false;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, odd))
}

impl AlternatingForm {
    pub fn zero(space_dim: usize, degree: usize) -> Self {
        AlternatingForm {
            space_dim,
            degree,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn from_coefficients(
        space_dim: usize,
        degree: usize,
        coefficients: BTreeMap<Vec<usize>, Rational>,
    ) -> Result<Self, CohomologyError> {
        for key in coefficients.keys() {
            let ok = key.len() == degree && key.windows(2).all(|w| w[0] < w[1]) && key.iter().all(|&i| i < space_dim);
            if !ok {
                return Err(CohomologyError::DimensionMismatch(format!("bad index tuple {key:?}")));
            }
        }
        let coefficients = coefficients.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(AlternatingForm {
            space_dim,
            degree,
            coefficients,
        })
    }

    pub(crate) fn from_sparse(index: &SubsetIndex, v: &[(usize, Rational)]) -> Self {
        let coefficients = v
            .iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (indices_of(index.subsets[*i]), x.clone()))
            .collect();
        AlternatingForm {
            space_dim: index.n,
            degree: index.k,
            coefficients,
        }
    }

    pub(crate) fn to_sparse(&self, index: &SubsetIndex) -> SparseVec {
        let mut v: SparseVec = self
            .coefficients
            .iter()
            .map(|(t, x)| (index.rank(mask_of(t)), x.clone()))
            .collect();
        v.sort_by_key(|e| e.0);
        v
    }

    /// Value on basis vectors `e_{t_0}, ..., e_{t_{k-1}}` in any order.
    pub fn coefficient(&self, t: &[usize]) -> Rational {
        match sort_sign(t) {
            None => Rational::zero(),
            Some((sorted, odd)) => {
                let v = self.coefficients.get(&sorted).cloned().unwrap_or_else(Rational::zero);
                if odd {
                    -v
                } else {
                    v
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.values().all(|v| v.is_zero())
    }

    /// Dense coefficient vector in `form_basis` order.
    pub fn to_vector(&self) -> Vec<Rational> {
        let basis = form_basis(self.space_dim, self.degree).unwrap_or_default();
        basis
            .iter()
            .map(|t| self.coefficients.get(t).cloned().unwrap_or_else(Rational::zero))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let coefficients = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.coefficients.iter().map(|(t, v)| (t.clone(), v * c)).collect()
        };
        AlternatingForm {
            space_dim: self.space_dim,
            degree: self.degree,
            coefficients,
        }
    }

    /// Evaluates on `degree` vectors: `sum_I c_I det(v_a[i_b])`.
    pub fn eval(&self, vectors: &[Vec<Rational>]) -> Result<Rational, CohomologyError> {
        if vectors.len() != self.degree || vectors.iter().any(|v| v.len() != self.space_dim) {
            return Err(CohomologyError::DimensionMismatch(format!(
                "expected {} vectors of length {}",
                self.degree, self.space_dim
            )));
        }
        let mut total = Rational::zero();
        for (t, c) in &self.coefficients {
            total += c * &minor_det(vectors, t);
        }
        Ok(total)
    }
}

fn minor_det(vectors: &[Vec<Rational>], cols: &[usize]) -> Rational {
    let k = cols.len();
    if k == 0 {
        return Rational::one();
    }
    // Laplace expansion along the first vector; degrees here are small.
    let mut total = Rational::zero();
    for (b, &c) in cols.iter().enumerate() {
        let x = &vectors[0][c];
        if x.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != b)
            .map(|(_, &c)| c)
            .collect();
        let m = x * &minor_det(&vectors[1..], &rest);
        if b % 2 == 0 {
            total += m;
        } else {
            total -= m;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;

    #[test]
    fn basis_examples() {
        assert_eq!(form_basis(3, 3).unwrap(), vec![vec![0, 1, 2]]);
        assert_eq!(form_basis(4, 2).unwrap().len(), 6);
        assert_eq!(form_basis(5, 0).unwrap(), vec![Vec::<usize>::new()]);
        assert!(form_basis(2, 3).is_err());
    }

    #[test]
    fn ranks_match_enumeration() {
        for n in 0..9 {
            for k in 0..=n {
                let idx = SubsetIndex::new(n, k);
                assert_eq!(idx.len(), binomial(n, k));
                for (i, m) in idx.subsets.iter().enumerate() {
                    assert_eq!(idx.rank(*m), i);
                }
            }
        }
    }

    #[test]
    fn alternation() {
        let mut c = BTreeMap::new();
        c.insert(vec![0, 1], qi(1));
        let w = AlternatingForm::from_coefficients(2, 2, c).unwrap();
        assert_eq!(w.coefficient(&[1, 0]), qi(-1));
        assert_eq!(w.coefficient(&[1, 1]), qi(0));
        let v = vec![qi(1), qi(2)];
        assert_eq!(w.eval(&[v.clone(), v]).unwrap(), qi(0));
        assert_eq!(w.eval(&[vec![qi(1), qi(0)], vec![qi(0), qi(1)]]).unwrap(), qi(1));
    }
}
