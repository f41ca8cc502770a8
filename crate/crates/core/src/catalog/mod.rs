//! Classical simple real Lie algebras with rational structure constants and
//! their standard Cartan involutions.

mod cmat;
mod embedding;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use cmat::CMat;
pub use embedding::{su2_embedding, sun_block_embedding, Homomorphism};

use crate::error::CatalogError;
use crate::lie::LieAlgebra;
use crate::linalg::{q, Coordinates, Matrix, Rational, RowEchelon};

pub const DEFAULT_MAX_DIM: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "slnR")]
    SlnR,
    #[serde(rename = "sun")]
    Sun,
    #[serde(rename = "supq")]
    Supq,
    #[serde(rename = "sonR")]
    SonR,
    #[serde(rename = "sopq")]
    Sopq,
    #[serde(rename = "sp2nR")]
    Sp2nR,
    #[serde(rename = "slnC")]
    SlnC,
    #[serde(rename = "sonC")]
    SonC,
    #[serde(rename = "sp2nC")]
    Sp2nC,
    #[serde(rename = "compact_simple")]
    CompactSimple,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::SlnR => "slnR",
            Family::Sun => "sun",
            Family::Supq => "supq",
            Family::SonR => "sonR",
            Family::Sopq => "sopq",
            Family::Sp2nR => "sp2nR",
            Family::SlnC => "slnC",
            Family::SonC => "sonC",
            Family::Sp2nC => "sp2nC",
            Family::CompactSimple => "compact_simple",
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, Family::SlnC | Family::SonC | Family::Sp2nC)
    }

    pub fn is_compact(&self) -> bool {
        matches!(self, Family::Sun | Family::SonR | Family::CompactSimple)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Killing-Cartan type of a compact simple algebra, used for dual Coxeter numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
}

impl CartanType {
    /// Identifies low-rank coincidences: B1 = C1 = A1, D3 = A3.
    pub fn normalized(self) -> CartanType {
        match self {
            CartanType::B(1) | CartanType::C(1) => CartanType::A(1),
            CartanType::D(3) => CartanType::A(3),
            t => t,
        }
    }

    pub fn dual_coxeter(self) -> usize {
        match self.normalized() {
            CartanType::A(n) => n + 1,
            CartanType::B(n) => 2 * n - 1,
            CartanType::C(n) => n + 1,
            CartanType::D(n) => 2 * n - 2,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub family: Family,
    pub params: Vec<usize>,
    pub algebra: LieAlgebra,
    pub cartan_involution: Matrix,
    pub expects_complex_structure: bool,
    /// Type of the algebra when compact, or of its compact real form for
    /// complex families.
    pub cartan_type: Option<CartanType>,
    /// Complex matrix realization of each basis vector.
    pub matrices: Vec<CMat>,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn descriptor(&self) -> EntryDescriptor {
        EntryDescriptor {
            name: self.name.clone(),
            family: self.family,
            dim: self.dim(),
            expects_complex_structure: self.expects_complex_structure,
        }
    }

    /// Coordinates of a complex matrix in this entry's basis.
    pub fn coordinates_of(&self, m: &CMat) -> Option<Vec<Rational>> {
        let basis: Vec<Vec<Rational>> = self.matrices.iter().map(|x| x.to_real_vector()).collect();
        Coordinates::new(&basis)?.coords(&m.to_real_vector())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDescriptor {
    pub name: String,
    pub family: Family,
    pub dim: usize,
    pub expects_complex_structure: bool,
}

/// Entries of the default catalog, in report order.
pub const CATALOG: &[&str] = &[
    "su2", "so3", "su3", "so5", "usp4", "su4", "sl2R", "su11", "so21", "sp2R", "sl3R", "su21", "sl4R", "su31", "su22",
    "sl5R", "su32", "su33", "so31", "so32", "so41", "so42", "so51", "so33", "sp4R", "sp6R", "sl2C", "so3C", "sl3C",
    "sl4C", "so5C", "sp4C",
];

/// Parses a catalog name into family and parameters (`su21` is su(2,1),
/// `sp4R` is sp(4,R); rank digits are single digits).
pub fn parse_name(name: &str) -> Result<(Family, Vec<usize>), CatalogError> {
    let unknown = || CatalogError::UnknownFamily(name.to_string());
    let digits = |s: &str| -> Option<Vec<usize>> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        Some(s.bytes().map(|b| (b - b'0') as usize).collect())
    };
    let parse = |prefix: &str, suffix: &str| -> Option<Vec<usize>> {
        name.strip_prefix(prefix)?.strip_suffix(suffix).and_then(digits)
    };
    if let Some(d) = parse("usp", "") {
        return match d.as_slice() {
            [n] => Ok((Family::CompactSimple, vec![*n])),
            _ => Err(unknown()),
        };
    }
    for (prefix, suffix, fam) in [
        ("sl", "R", Family::SlnR),
        ("sl", "C", Family::SlnC),
        ("so", "C", Family::SonC),
        ("sp", "R", Family::Sp2nR),
        ("sp", "C", Family::Sp2nC),
    ] {
        if let Some(d) = parse(prefix, suffix) {
            return match d.as_slice() {
                [n] => Ok((fam, vec![*n])),
                _ => Err(unknown()),
            };
        }
    }
    for (prefix, one, two) in [("su", Family::Sun, Family::Supq), ("so", Family::SonR, Family::Sopq)] {
        if let Some(d) = parse(prefix, "") {
            return match d.as_slice() {
                [n] => Ok((one, vec![*n])),
                [p, q] => Ok((two, vec![*p, *q])),
                _ => Err(unknown()),
            };
        }
    }
    Err(unknown())
}

/// Real dimension, or an error when the parameters do not give a simple algebra.
pub fn expected_dim(family: Family, params: &[usize], name: &str) -> Result<usize, CatalogError> {
    let bad = |reason: &str| CatalogError::RankOutOfBounds {
        name: name.to_string(),
        reason: reason.to_string(),
    };
    let n = params[0];
    Ok(match family {
        Family::SlnR | Family::Sun => {
            if n < 2 {
                return Err(bad("need n >= 2"));
            }
            n * n - 1
        }
        Family::SlnC => {
            if n < 2 {
                return Err(bad("need n >= 2"));
            }
            2 * (n * n - 1)
        }
        Family::Supq => {
            let (p, q) = (params[0], params[1]);
            if q < 1 || p < q {
                return Err(bad("need p >= q >= 1"));
            }
            (p + q) * (p + q) - 1
        }
        Family::SonR | Family::SonC => {
            if n < 3 || n == 4 {
                return Err(bad("need n >= 3 and n != 4"));
            }
            let d = n * (n - 1) / 2;
            if family == Family::SonC {
                2 * d
            } else {
                d
            }
        }
        Family::Sopq => {
            let (p, q) = (params[0], params[1]);
            if q < 1 || p < q || p + q < 3 || (p, q) == (2, 2) {
                return Err(bad("need p >= q >= 1, p + q >= 3 and (p, q) != (2, 2)"));
            }
            (p + q) * (p + q - 1) / 2
        }
        Family::Sp2nR | Family::Sp2nC | Family::CompactSimple => {
            if n < 2 || !n.is_multiple_of(2) {
                return Err(bad("need an even size >= 2"));
            }
            let h = n / 2;
            let d = h * (2 * h + 1);
            if family == Family::Sp2nC {
                2 * d
            } else {
                d
            }
        }
    })
}

fn matrix_size(family: Family, params: &[usize]) -> usize {
    match family {
        Family::Supq | Family::Sopq => params[0] + params[1],
        _ => params[0],
    }
}

fn cartan_type(family: Family, params: &[usize]) -> Option<CartanType> {
    let n = matrix_size(family, params);
    let so = |n: usize| {
        if n % 2 == 1 {
            CartanType::B((n - 1) / 2)
        } else {
            CartanType::D(n / 2)
        }
    };
    match family {
        Family::Sun | Family::SlnC => Some(CartanType::A(n - 1)),
        Family::SonR | Family::SonC => Some(so(n)),
        Family::CompactSimple | Family::Sp2nC => Some(CartanType::C(n / 2)),
        _ => None,
    }
    .map(CartanType::normalized)
}

/// Linear conditions cutting the algebra out of `gl(n, C)`, as real components.
fn defect(family: Family, params: &[usize], x: &CMat) -> Vec<Rational> {
    let n = x.n;
    let mut out = Vec::new();
    let push_mat = |out: &mut Vec<Rational>, m: &CMat| out.extend(m.to_real_vector());
    let push_trace = |out: &mut Vec<Rational>, m: &CMat| {
        let (r, i) = m.trace();
        out.push(r);
        out.push(i);
    };
    let real = |out: &mut Vec<Rational>| out.extend(x.im.iter().cloned());
    let signature = |p: usize, q: usize| {
        let mut d = vec![1i64; p];
        d.extend(vec![-1i64; q]);
        CMat::diag(&d)
    };
    match family {
        Family::SlnR => {
            real(&mut out);
            push_trace(&mut out, x);
        }
        Family::Sun => {
            push_mat(&mut out, &x.conj_transpose().add(x));
            push_trace(&mut out, x);
        }
        Family::Supq => {
            let i = signature(params[0], params[1]);
            push_mat(&mut out, &x.conj_transpose().mul(&i).add(&i.mul(x)));
            push_trace(&mut out, x);
        }
        Family::SonR => {
            real(&mut out);
            push_mat(&mut out, &x.transpose().add(x));
        }
        Family::Sopq => {
            real(&mut out);
            let i = signature(params[0], params[1]);
            push_mat(&mut out, &x.transpose().mul(&i).add(&i.mul(x)));
        }
        Family::Sp2nR => {
            real(&mut out);
            let w = CMat::symplectic(n / 2);
            push_mat(&mut out, &x.transpose().mul(&w).add(&w.mul(x)));
        }
        Family::SlnC => push_trace(&mut out, x),
        Family::SonC => push_mat(&mut out, &x.transpose().add(x)),
        Family::Sp2nC => {
            let w = CMat::symplectic(n / 2);
            push_mat(&mut out, &x.transpose().mul(&w).add(&w.mul(x)));
        }
        Family::CompactSimple => {
            let w = CMat::symplectic(n / 2);
            push_mat(&mut out, &x.transpose().mul(&w).add(&w.mul(x)));
            push_mat(&mut out, &x.conj_transpose().add(x));
        }
    }
    out
}

/// Real kernel of the defect map plus `X* = sign X`, scaled by 1/2.
fn solve_subspace(family: Family, params: &[usize], n: usize, hermitian_sign: i64) -> Vec<CMat> {
    let rd = CMat::real_dim(n);
    let units: Vec<CMat> = (0..rd)
        .map(|b| {
            let mut v = vec![Rational::zero(); rd];
            v[b] = Rational::one();
            CMat::from_real_vector(n, &v)
        })
        .collect();
    // Columns are images of unit vectors; feed rows of the transposed system.
    let images: Vec<Vec<Rational>> = units
        .iter()
        .map(|x| {
            let mut d = defect(family, params, x);
            let s = x.conj_transpose();
            let extra = if hermitian_sign > 0 { s.sub(x) } else { s.add(x) };
            d.extend(extra.to_real_vector());
            d
        })
        .collect();
    let m = images[0].len();
    let mut e = RowEchelon::new(rd);
    for r in 0..m {
        let row: Vec<Rational> = images.iter().map(|col| col[r].clone()).collect();
        e.insert_dense(&row);
    }
    e.kernel_basis()
        .into_iter()
        .map(|v| CMat::from_real_vector(n, &v).scale(&q(1, 2)))
        .collect()
}

/// Builds a catalog entry by name with the given dimension bound.
pub fn build(name: &str, max_dim: usize) -> Result<CatalogEntry, CatalogError> {
    let (family, params) = parse_name(name)?;
    let dim = expected_dim(family, &params, name)?;
    if dim > max_dim {
        return Err(CatalogError::RankOutOfBounds {
            name: name.to_string(),
            reason: format!("real dimension {dim} exceeds bound {max_dim}"),
        });
    }
    let n = matrix_size(family, &params);
    let k = solve_subspace(family, &params, n, -1);
    let (matrices, labels, theta_diag): (Vec<CMat>, Vec<String>, Vec<i64>) = if family.is_complex() {
        let mut mats = Vec::new();
        let mut labels = Vec::new();
        let mut diag = Vec::new();
        for (a, x) in k.iter().enumerate() {
            mats.push(x.clone());
            mats.push(x.times_i());
            labels.push(format!("X{}", a + 1));
            labels.push(format!("iX{}", a + 1));
            diag.extend([1, -1]);
        }
        (mats, labels, diag)
    } else {
        let p = solve_subspace(family, &params, n, 1);
        let mut labels: Vec<String> = (0..k.len()).map(|a| format!("k{}", a + 1)).collect();
        labels.extend((0..p.len()).map(|a| format!("p{}", a + 1)));
        let mut diag = vec![1; k.len()];
        diag.extend(vec![-1; p.len()]);
        let mut mats = k;
        mats.extend(p);
        (mats, labels, diag)
    };
    assert_eq!(
        matrices.len(),
        dim,
        "dimension formula disagrees with construction for {name}"
    );
    let algebra = algebra_from_matrices(name, &matrices, labels)?;
    let mut theta = Matrix::zeros(dim, dim);
    for (i, s) in theta_diag.iter().enumerate() {
        theta.set(i, i, Rational::from(*s));
    }
    // so(3,1) is sl(2,C) viewed as a real algebra.
    let expects_complex_structure = family.is_complex() || (family == Family::Sopq && params == [3, 1]);
    Ok(CatalogEntry {
        name: name.to_string(),
        family,
        params,
        algebra,
        cartan_involution: theta,
        expects_complex_structure,
        cartan_type: cartan_type(family, &parse_name(name)?.1),
        matrices,
    })
}

/// Structure constants of the real span of the given complex matrices.
pub fn algebra_from_matrices(name: &str, matrices: &[CMat], labels: Vec<String>) -> Result<LieAlgebra, CatalogError> {
    let basis: Vec<Vec<Rational>> = matrices.iter().map(|m| m.to_real_vector()).collect();
    let coords =
        Coordinates::new(&basis).ok_or_else(|| CatalogError::UnknownFamily(format!("{name}: dependent basis")))?;
    let mut brackets = Vec::new();
    for i in 0..matrices.len() {
        for j in (i + 1)..matrices.len() {
            let c = coords
                .coords(&matrices[i].commutator(&matrices[j]).to_real_vector())
                .ok_or(crate::error::LieError::NotSubalgebra)?;
            for (k, v) in c.into_iter().enumerate() {
                if !v.is_zero() {
                    brackets.push((i, j, k, v));
                }
            }
        }
    }
    Ok(LieAlgebra::from_brackets(name, labels, &brackets)?)
}

/// Descriptors of the default catalog entries with `dim <= max_dim`.
pub fn list(max_dim: usize) -> Vec<EntryDescriptor> {
    CATALOG
        .iter()
        .filter_map(|name| {
            let (family, params) = parse_name(name).ok()?;
            let dim = expected_dim(family, &params, name).ok()?;
            (dim <= max_dim).then(|| EntryDescriptor {
                name: name.to_string(),
                family,
                dim,
                expects_complex_structure: family.is_complex() || (family == Family::Sopq && params == [3, 1]),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        assert_eq!(parse_name("su21").unwrap(), (Family::Supq, vec![2, 1]));
        assert_eq!(parse_name("sp4R").unwrap(), (Family::Sp2nR, vec![4]));
        assert_eq!(parse_name("usp4").unwrap(), (Family::CompactSimple, vec![4]));
        assert_eq!(parse_name("so5C").unwrap(), (Family::SonC, vec![5]));
        assert!(parse_name("g2").is_err());
        assert!(matches!(build("so4", 64), Err(CatalogError::RankOutOfBounds { .. })));
        assert!(matches!(build("sl4C", 20), Err(CatalogError::RankOutOfBounds { .. })));
    }

    #[test]
    fn dual_coxeter_table() {
        assert_eq!(CartanType::A(2).dual_coxeter(), 3);
        assert_eq!(CartanType::B(1).dual_coxeter(), 2);
        assert_eq!(CartanType::B(2).dual_coxeter(), 3);
        assert_eq!(CartanType::C(2).dual_coxeter(), 3);
        assert_eq!(CartanType::D(3).dual_coxeter(), 4);
    }
}
