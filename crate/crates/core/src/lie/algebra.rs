use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::LieError;
use crate::linalg::{Coordinates, Matrix, Rational, RowEchelon, SparseVec};

struct Data {
    name: String,
    labels: Vec<String>,
    /// `table[i][j]` is `[e_i, e_j]` as a sparse vector.
    table: Vec<Vec<SparseVec>>,
    ad: OnceLock<Vec<Matrix>>,
}

/// Finite-dimensional real Lie algebra given by exact structure constants.
///
/// Cheap to clone; the structure tensor is shared.
#[derive(Clone)]
pub struct LieAlgebra {
    data: Arc<Data>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.data.name, self.dim())
    }
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.data.labels == other.data.labels && self.data.table == other.data.table
    }
}

/// Validates a dense structure tensor `c[i][j][k]`.
pub fn make_lie_algebra(
    dim: usize,
    labels: Vec<String>,
    structure: &[Vec<Vec<Rational>>],
) -> Result<LieAlgebra, LieError> {
    if labels.len() != dim || structure.len() != dim {
        return Err(LieError::DimensionMismatch(format!(
            "dim {dim}, {} labels, {} tensor slices",
            labels.len(),
            structure.len()
        )));
    }
    let mut table = vec![vec![SparseVec::new(); dim]; dim];
    for i in 0..dim {
        if structure[i].len() != dim || structure[i].iter().any(|r| r.len() != dim) {
            return Err(LieError::DimensionMismatch(format!("slice {i} is not {dim}x{dim}")));
        }
        for j in 0..dim {
            table[i][j] = structure[i][j]
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (k, v.clone()))
                .collect();
        }
    }
    LieAlgebra::from_table("g".to_string(), labels, table)
}

fn sparse_add(acc: &mut BTreeMap<usize, Rational>, v: &[(usize, Rational)], c: &Rational) {
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(Rational::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

impl LieAlgebra {
    fn from_table(name: String, labels: Vec<String>, table: Vec<Vec<SparseVec>>) -> Result<Self, LieError> {
        let dim = labels.len();
        for i in 0..dim {
            if !table[i][i].is_empty() {
                return Err(LieError::AntisymmetryViolation(i, i));
            }
            for j in (i + 1)..dim {
                let neg: SparseVec = table[j][i].iter().map(|(k, v)| (*k, -v)).collect();
                if table[i][j] != neg {
                    return Err(LieError::AntisymmetryViolation(i, j));
                }
            }
        }
        let g = LieAlgebra {
            data: Arc::new(Data {
                name,
                labels,
                table,
                ad: OnceLock::new(),
            }),
        };
        g.check_jacobi()?;
        Ok(g)
    }

    /// Builds from the `i < j` bracket list; the rest follows by antisymmetry.
    pub fn from_brackets(
        name: &str,
        labels: Vec<String>,
        brackets: &[(usize, usize, usize, Rational)],
    ) -> Result<Self, LieError> {
        let dim = labels.len();
        let mut acc: Vec<Vec<BTreeMap<usize, Rational>>> = vec![vec![BTreeMap::new(); dim]; dim];
        for (i, j, k, v) in brackets {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(LieError::DimensionMismatch(format!(
                    "index out of range in ({i},{j},{k})"
                )));
            }
            if i >= j {
                return Err(LieError::AntisymmetryViolation(i, j));
            }
            *acc[i][j].entry(k).or_insert_with(Rational::zero) += v;
            *acc[j][i].entry(k).or_insert_with(Rational::zero) -= v;
        }
        let table = acc
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                    .collect()
            })
            .collect();
        LieAlgebra::from_table(name.to_string(), labels, table)
    }

    /// Induced structure on the span of `basis`, a subalgebra of `self`.
    pub fn subalgebra(&self, name: &str, basis: &[Vec<Rational>], labels: Vec<String>) -> Result<LieAlgebra, LieError> {
        let d = basis.len();
        if d == 0 {
            return LieAlgebra::from_table(name.to_string(), Vec::new(), Vec::new());
        }
        let coords = Coordinates::new(basis).ok_or(LieError::NotInjective)?;
        let mut table = vec![vec![SparseVec::new(); d]; d];
        for i in 0..d {
            for j in (i + 1)..d {
                let b = self.bracket(&basis[i], &basis[j]);
                let c = coords.coords(&b).ok_or(LieError::NotSubalgebra)?;
                let sv: SparseVec = c.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
                table[j][i] = sv.iter().map(|(k, v)| (*k, -v)).collect();
                table[i][j] = sv;
            }
        }
        LieAlgebra::from_table(name.to_string(), labels, table)
    }

    pub fn with_name(&self, name: &str) -> LieAlgebra {
        LieAlgebra {
            data: Arc::new(Data {
                name: name.to_string(),
                labels: self.data.labels.clone(),
                table: self.data.table.clone(),
                ad: OnceLock::new(),
            }),
        }
    }

    pub fn with_labels(&self, labels: Vec<String>) -> LieAlgebra {
        assert_eq!(labels.len(), self.dim());
        LieAlgebra {
            data: Arc::new(Data {
                name: self.data.name.clone(),
                labels,
                table: self.data.table.clone(),
                ad: OnceLock::new(),
            }),
        }
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> LieAlgebra {
        let labels = (0..dim).map(|i| format!("a{i}")).collect();
        LieAlgebra::from_table(format!("R{dim}"), labels, vec![vec![SparseVec::new(); dim]; dim])
            .expect("abelian algebra is valid")
    }

    /// Direct sum, basis of `self` first.
    pub fn direct_sum(&self, other: &LieAlgebra, name: &str) -> LieAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let mut table = vec![vec![SparseVec::new(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = self.data.table[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                table[n + i][n + j] = other.data.table[i][j].iter().map(|(k, v)| (n + k, v.clone())).collect();
            }
        }
        let mut labels: Vec<String> = self.labels().iter().map(|l| format!("{l}.0")).collect();
        labels.extend(other.labels().iter().map(|l| format!("{l}.1")));
        LieAlgebra::from_table(name.to_string(), labels, table).expect("direct sum is valid")
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut acc = BTreeMap::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (l, v) in &self.data.table[b][c] {
                            sparse_add(&mut acc, &self.data.table[a][*l], v);
                        }
                    }
                    if !acc.is_empty() {
                        return Err(LieError::JacobiViolation(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn dim(&self) -> usize {
        self.data.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }

    /// `[e_i, e_j]` as a sparse vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.data.table[i][j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.data.table[i][j]
            .iter()
            .find(|(l, _)| *l == k)
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    }

    pub fn is_abelian(&self) -> bool {
        self.data.table.iter().all(|r| r.iter().all(|v| v.is_empty()))
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.data.table[i][j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// `ad e_i` with `(ad e_i)[k][j] = c[i][j][k]`.
    pub fn ad(&self, i: usize) -> &Matrix {
        &self.ad_all()[i]
    }

    pub fn ad_all(&self) -> &[Matrix] {
        self.data.ad.get_or_init(|| {
            let n = self.dim();
            (0..n)
                .map(|i| {
                    let mut m = Matrix::zeros(n, n);
                    for j in 0..n {
                        for (k, v) in &self.data.table[i][j] {
                            m.set(*k, j, v.clone());
                        }
                    }
                    m
                })
                .collect()
        })
    }

    pub fn ad_vec(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, v) in &self.data.table[i][j] {
                    let cur = m.get(*k, j) + &(a * v);
                    m.set(*k, j, cur);
                }
            }
        }
        m
    }

    /// Whether the span of `basis` is closed under brackets.
    pub fn is_subalgebra(&self, basis: &[Vec<Rational>]) -> bool {
        let mut e = RowEchelon::new(self.dim());
        for b in basis {
            e.insert_dense(b);
        }
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                if !e.contains_dense(&self.bracket(&basis[i], &basis[j])) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> AlgebraJson {
        let mut brackets = Vec::new();
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                for (k, v) in &self.data.table[i][j] {
                    brackets.push((i, j, *k, v.clone()));
                }
            }
        }
        AlgebraJson {
            name: self.data.name.clone(),
            dim: self.dim(),
            labels: self.data.labels.clone(),
            brackets,
        }
    }

    pub fn from_json(json: &AlgebraJson) -> Result<Self, LieError> {
        if json.labels.len() != json.dim {
            return Err(LieError::DimensionMismatch(format!(
                "dim {} with {} labels",
                json.dim,
                json.labels.len()
            )));
        }
        LieAlgebra::from_brackets(&json.name, json.labels.clone(), &json.brackets)
    }

    pub fn from_json_str(s: &str) -> Result<Self, LieError> {
        let json: AlgebraJson = serde_json::from_str(s).map_err(|e| LieError::Parse(e.to_string()))?;
        LieAlgebra::from_json(&json)
    }
}

/// Wire format shared by the catalog and the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<(usize, usize, usize, Rational)>,
}

/// Basis vector `e_i` of length `n`.
pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
