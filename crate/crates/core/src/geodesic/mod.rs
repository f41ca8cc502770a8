//! Geodesic simplices in hyperbolic 3-space `SL(2,C)/SU(2)` and numerical
//! integration of the invariant 3-form over them.
//!
//! Points live on the hyperboloid `-x0² + x1² + x2² + x3² = -1`, `x0 > 0`,
//! identified with positive Hermitian matrices of determinant one on which
//! `SL(2,C)` acts by `X -> g X g*`.

mod dual;
mod quadrature;

pub use dual::{Dual3, Scalar};
pub use quadrature::gauss_legendre;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan::verify_cartan_involution;
use crate::catalog::{build, CMat};
use crate::cocycle::build_omega;
use crate::lie::{complex_structure, ComplexStructure, SubalgebraEmbedding};

#[derive(Debug, Error)]
pub enum GeodesicError {
    #[error("determinant differs from 1 by {0:e}")]
    NotUnimodular(f64),
    #[error("quadrature order must be at least 1")]
    ZeroOrder,
    #[error("expected {expected} vertices, got {got}")]
    VertexCount { expected: usize, got: usize },
    #[error("barycentric coordinates must be non-negative and sum to 1")]
    BadBarycentric,
    #[error("exact form: {0}")]
    Exact(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    HyperboloidH3,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymmetricSpacePoint {
    pub model: Model,
    pub coordinates: [f64; 4],
}

fn minkowski<S: Scalar>(a: &[S; 4], b: &[S; 4]) -> S {
    -(a[0] * b[0]) + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

fn normalize<S: Scalar>(p: [S; 4]) -> [S; 4] {
    let r = (-minkowski(&p, &p)).sqrt();
    p.map(|x| x / r)
}

fn lift<S: Scalar>(p: &[f64; 4]) -> [S; 4] {
    p.map(S::constant)
}

/// `sinh(a s) / sinh(s)`, by its series for small `s`.
fn sinh_ratio<S: Scalar>(a: S, s: S) -> S {
    if s.value().abs() < 1e-4 {
        let one = S::constant(1.0);
        let a2 = a * a;
        let s2 = s * s;
        a * (one
            + (a2 - one) * s2 / S::constant(6.0)
            + (a2 - one) * (S::constant(3.0) * a2 - S::constant(7.0)) * s2 * s2 / S::constant(360.0))
    } else {
        (a * s).sinh() / s.sinh()
    }
}

/// Point at fraction `t` of the geodesic from `x` to `y`.
fn geodesic_generic<S: Scalar>(x: &[S; 4], y: &[S; 4], t: S) -> [S; 4] {
    let diff = [x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]];
    let q = minkowski(&diff, &diff);
    if q.value() < 1e-300 {
        let p = [0, 1, 2, 3].map(|i| x[i] + t * (y[i] - x[i]));
        return normalize(p);
    }
    // chord length w = 2 sinh(s/2)
    let s = S::constant(2.0) * (q.sqrt() / S::constant(2.0)).asinh();
    let a = sinh_ratio(S::constant(1.0) - t, s);
    let b = sinh_ratio(t, s);
    normalize([0, 1, 2, 3].map(|i| a * x[i] + b * y[i]))
}

impl SymmetricSpacePoint {
    pub fn origin() -> Self {
        SymmetricSpacePoint {
            model: Model::HyperboloidH3,
            coordinates: [1.0, 0.0, 0.0, 0.0],
        }
    }

    /// Projects onto the hyperboloid.
    pub fn new(coordinates: [f64; 4]) -> Self {
        SymmetricSpacePoint {
            model: Model::HyperboloidH3,
            coordinates: normalize(coordinates),
        }
    }

    pub fn norm_defect(&self) -> f64 {
        (minkowski(&self.coordinates, &self.coordinates) + 1.0).abs()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        let d = [0, 1, 2, 3].map(|i| self.coordinates[i] - other.coordinates[i]);
        let q = minkowski(&d, &d).max(0.0);
        2.0 * (q.sqrt() / 2.0).asinh()
    }

    /// The point as a positive Hermitian matrix of determinant one.
    pub fn to_hermitian(&self) -> [[Complex64; 2]; 2] {
        let [x0, x1, x2, x3] = self.coordinates;
        [
            [Complex64::new(x0 + x3, 0.0), Complex64::new(x1, -x2)],
            [Complex64::new(x1, x2), Complex64::new(x0 - x3, 0.0)],
        ]
    }

    pub fn from_hermitian(m: &[[Complex64; 2]; 2]) -> Self {
        let x0 = 0.5 * (m[0][0].re + m[1][1].re);
        let x3 = 0.5 * (m[0][0].re - m[1][1].re);
        let x1 = 0.5 * (m[1][0].re + m[0][1].re);
        let x2 = 0.5 * (m[1][0].im - m[0][1].im);
        SymmetricSpacePoint::new([x0, x1, x2, x3])
    }
}

pub fn geodesic(x: &SymmetricSpacePoint, y: &SymmetricSpacePoint, t: f64) -> SymmetricSpacePoint {
    SymmetricSpacePoint {
        model: Model::HyperboloidH3,
        coordinates: geodesic_generic::<f64>(&x.coordinates, &y.coordinates, t),
    }
}

type C2 = [[Complex64; 2]; 2];

fn mul2(a: &C2, b: &C2) -> C2 {
    let mut c = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn adjoint2(a: &C2) -> C2 {
    [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]]
}

/// Element of `SL(2,C)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupElement {
    pub matrix: C2,
}

impl GroupElement {
    pub fn new(matrix: C2) -> Result<Self, GeodesicError> {
        let det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
        let err = (det - Complex64::new(1.0, 0.0)).norm();
        if err >= 1e-12 {
            return Err(GeodesicError::NotUnimodular(err));
        }
        Ok(GroupElement { matrix })
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        GroupElement {
            matrix: [[one, zero], [zero, one]],
        }
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            matrix: mul2(&self.matrix, &other.matrix),
        }
    }

    pub fn act(&self, p: &SymmetricSpacePoint) -> SymmetricSpacePoint {
        let x = p.to_hermitian();
        SymmetricSpacePoint::from_hermitian(&mul2(&mul2(&self.matrix, &x), &adjoint2(&self.matrix)))
    }

    pub fn base_point(&self) -> SymmetricSpacePoint {
        self.act(&SymmetricSpacePoint::origin())
    }

    /// A random element of SU(2), the stabilizer of the origin.
    pub fn random_rotation(rng: &mut ChaCha8Rng) -> Self {
        let q = loop {
            let v: [f64; 4] = [0; 4].map(|_| rng.gen_range(-1.0..1.0));
            let n = v.iter().map(|x| x * x).sum::<f64>();
            if n > 1e-3 && n <= 1.0 {
                let r = n.sqrt();
                break v.map(|x| x / r);
            }
        };
        GroupElement {
            matrix: [
                [Complex64::new(q[0], q[3]), Complex64::new(q[2], q[1])],
                [Complex64::new(-q[2], q[1]), Complex64::new(q[0], -q[3])],
            ],
        }
    }

    /// `exp(H) U` with `H` traceless Hermitian of spectral radius at most
    /// `max_radius` and `U` in SU(2). Its base point lies within distance
    /// `2 max_radius` of the origin.
    pub fn random(rng: &mut ChaCha8Rng, max_radius: f64) -> Self {
        let a = rng.gen_range(0.0..=max_radius);
        let z: f64 = rng.gen_range(-1.0..=1.0);
        let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let r = (1.0 - z * z).max(0.0).sqrt();
        let n = [r * phi.cos(), r * phi.sin(), z];
        let (c, s) = (a.cosh(), a.sinh());
        let h = [
            [Complex64::new(c + s * n[2], 0.0), Complex64::new(s * n[0], -s * n[1])],
            [Complex64::new(s * n[0], s * n[1]), Complex64::new(c - s * n[2], 0.0)],
        ];
        let u = Self::random_rotation(rng);
        GroupElement {
            matrix: mul2(&h, &u.matrix),
        }
    }
}

/// Geodesic simplex, coned in vertex order.
#[derive(Clone, Debug, PartialEq)]
pub struct GeodesicSimplex {
    pub vertices: Vec<SymmetricSpacePoint>,
}

impl GeodesicSimplex {
    pub fn new(vertices: Vec<SymmetricSpacePoint>) -> Self {
        GeodesicSimplex { vertices }
    }

    pub fn dimension(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    fn cone_generic<S: Scalar>(&self, u: &[S]) -> [S; 4] {
        let mut p = lift::<S>(&self.vertices[0].coordinates);
        for (i, v) in self.vertices.iter().enumerate().skip(1) {
            p = geodesic_generic(&p, &lift(&v.coordinates), u[i - 1]);
        }
        p
    }

    /// Point with cone coordinates `u` in `[0,1]^k`: `u_i` moves from the
    /// cone over the first `i` vertices towards vertex `i`.
    pub fn cone_map(&self, u: &[f64]) -> SymmetricSpacePoint {
        SymmetricSpacePoint {
            model: Model::HyperboloidH3,
            coordinates: self.cone_generic::<f64>(u),
        }
    }

    /// Point with barycentric weights `λ_0, ..., λ_k`.
    pub fn simplex_map(&self, barycentric: &[f64]) -> Result<SymmetricSpacePoint, GeodesicError> {
        if barycentric.len() != self.vertices.len() {
            return Err(GeodesicError::VertexCount {
                expected: self.vertices.len(),
                got: barycentric.len(),
            });
        }
        let total: f64 = barycentric.iter().sum();
        if barycentric.iter().any(|&l| l < 0.0) || (total - 1.0).abs() > 1e-12 {
            return Err(GeodesicError::BadBarycentric);
        }
        let k = self.dimension();
        let mut u = vec![0.0; k];
        let mut rest = 1.0;
        for i in (1..=k).rev() {
            u[i - 1] = if rest > 0.0 {
                (barycentric[i] / rest).min(1.0)
            } else {
                0.0
            };
            rest -= barycentric[i];
        }
        Ok(self.cone_map(&u))
    }

    /// `det[P, ∂_1 P, ∂_2 P, ∂_3 P]` at cone coordinates `u`.
    fn volume_density(&self, u: [f64; 3]) -> f64 {
        let vars = [
            Dual3::variable(u[0], 0),
            Dual3::variable(u[1], 1),
            Dual3::variable(u[2], 2),
        ];
        let p = self.cone_generic(&vars);
        let m = [p.map(|c| c.v), p.map(|c| c.d[0]), p.map(|c| c.d[1]), p.map(|c| c.d[2])];
        det4(&m)
    }
}

fn det4(m: &[[f64; 4]; 4]) -> f64 {
    let minor = |r: [usize; 3], c: [usize; 3]| -> f64 {
        m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]])
            - m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]])
            + m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]])
    };
    let rows = [1, 2, 3];
    m[0][0] * minor(rows, [1, 2, 3]) - m[0][1] * minor(rows, [0, 2, 3]) + m[0][2] * minor(rows, [0, 1, 3])
        - m[0][3] * minor(rows, [0, 1, 2])
}

/// `scale · ∫ vol` over a geodesic 3-simplex, by Gauss-Legendre product
/// quadrature of the given order on the cone coordinates.
pub fn integrate_form(scale: f64, s: &GeodesicSimplex, order: usize) -> Result<f64, GeodesicError> {
    if order == 0 {
        return Err(GeodesicError::ZeroOrder);
    }
    if s.vertices.len() != 4 {
        return Err(GeodesicError::VertexCount {
            expected: 4,
            got: s.vertices.len(),
        });
    }
    let (x, w) = gauss_legendre(order);
    // partial sums per outer node, added in a fixed order
    let partial: Vec<f64> = (0..order)
        .into_par_iter()
        .map(|i| {
            let mut acc = 0.0;
            for j in 0..order {
                let mut inner = 0.0;
                for l in 0..order {
                    inner += w[l] * s.volume_density([x[i], x[j], x[l]]);
                }
                acc += w[j] * inner;
            }
            w[i] * acc
        })
        .collect();
    Ok(scale * partial.iter().sum::<f64>())
}

/// Integral over the simplex spanned by `g_i · o`.
pub fn cochain(gs: &[GroupElement], scale: f64, order: usize) -> Result<f64, GeodesicError> {
    let s = GeodesicSimplex::new(gs.iter().map(GroupElement::base_point).collect());
    integrate_form(scale, &s, order)
}

/// `Σ_i (-1)^i I(g_0, ..., ĝ_i, ..., g_4)`.
pub fn cocycle_defect(gs: &[GroupElement; 5], scale: f64, order: usize) -> Result<f64, GeodesicError> {
    let mut total = 0.0;
    for i in 0..5 {
        let face: Vec<GroupElement> = gs
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| *g)
            .collect();
        let v = cochain(&face, scale, order)?;
        total += if i % 2 == 0 { v } else { -v };
    }
    Ok(total)
}

fn tangent_vector(m: &CMat) -> [f64; 4] {
    // d/dt exp(tX) exp(tX)* at t = 0 is 2X for Hermitian X
    let p = |i: usize, j: usize| -> Complex64 {
        let (re, im) = m.get(i, j);
        Complex64::new(2.0 * re.to_f64(), 2.0 * im.to_f64())
    };
    [
        0.5 * (p(0, 0).re + p(1, 1).re),
        0.5 * (p(1, 0).re + p(0, 1).re),
        0.5 * (p(1, 0).im - p(0, 1).im),
        0.5 * (p(0, 0).re - p(1, 1).re),
    ]
}

/// Ratio between the exact invariant 3-form of `sl(2,C)` (built from its
/// Killing form and complex structure) and the unit-curvature volume form
/// of hyperbolic 3-space, evaluated on the first three basis vectors of p.
pub fn omega_scale() -> Result<f64, GeodesicError> {
    let exact = |e: &dyn std::fmt::Display| GeodesicError::Exact(e.to_string());
    let entry = build("sl2C", 64).map_err(|e| exact(&e))?;
    let j = match complex_structure(&entry.algebra).map_err(|e| exact(&e))? {
        Some(ComplexStructure::Rational(j)) => j,
        _ => return Err(GeodesicError::Exact("sl2C has no rational complex structure".into())),
    };
    let d = verify_cartan_involution(&entry.algebra, &entry.cartan_involution).map_err(|e| exact(&e))?;
    let labels = (0..d.k_dim()).map(|i| format!("k{}", i + 1)).collect();
    let k = SubalgebraEmbedding::from_basis(&entry.algebra, "k", &d.k_basis, labels).map_err(|e| exact(&e))?;
    let omega = build_omega(&entry.algebra, &j, &k).map_err(|e| exact(&e))?;
    let n = entry.matrices[0].n;
    let tangents: Vec<[f64; 4]> = omega
        .p_basis
        .iter()
        .map(|v| {
            let mut m = CMat::zeros(n);
            for (c, b) in v.iter().zip(&entry.matrices) {
                if !c.is_zero() {
                    m = m.add(&b.scale(c));
                }
            }
            tangent_vector(&m)
        })
        .collect();
    let vol = det4(&[[1.0, 0.0, 0.0, 0.0], tangents[0], tangents[1], tangents[2]]);
    Ok(omega.form.coefficient(&[0, 1, 2]).to_f64() / vol)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimplexReport {
    pub model: Model,
    pub order: usize,
    pub seed: u64,
    pub tuples: usize,
    pub scale: f64,
    pub omega_scale: f64,
    pub max_defect: f64,
    pub max_invariance_residual: f64,
    pub degenerate_value: f64,
    pub max_abs_value: f64,
    pub first_value: f64,
}

pub const RANDOM_RADIUS: f64 = 0.69;

/// Random 5-tuples of group elements, reproducible from the seed.
pub fn random_tuples(seed: u64, count: usize) -> Vec<[GroupElement; 5]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| [0; 5].map(|_| GroupElement::random(&mut rng, RANDOM_RADIUS)))
        .collect()
}

/// Runs the cocycle, invariance and degeneracy checks on seeded random tuples.
pub fn simplex_suite(seed: u64, tuples: usize, order: usize, scale: f64) -> Result<SimplexReport, GeodesicError> {
    let sets = random_tuples(seed, tuples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut max_defect: f64 = 0.0;
    let mut max_residual: f64 = 0.0;
    let mut max_abs: f64 = 0.0;
    let mut first = 0.0;
    for (t, gs) in sets.iter().enumerate() {
        max_defect = max_defect.max(cocycle_defect(gs, scale, order)?.abs());
        let h = GroupElement::random(&mut rng, RANDOM_RADIUS);
        let v = cochain(&gs[..4], scale, order)?;
        let moved: Vec<GroupElement> = gs[..4].iter().map(|g| h.mul(g)).collect();
        max_residual = max_residual.max((cochain(&moved, scale, order)? - v).abs());
        for i in 0..5 {
            let face: Vec<GroupElement> = gs
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| *g)
                .collect();
            max_abs = max_abs.max(cochain(&face, scale, order)?.abs());
        }
        if t == 0 {
            first = v;
        }
    }
    let degenerate_value = match sets.first() {
        Some(gs) => cochain(&[gs[0], gs[1], gs[2], gs[0]], scale, order)?
            .abs()
            .max(cochain(&[gs[0], gs[0], gs[1], gs[2]], scale, order)?.abs()),
        None => 0.0,
    };
    Ok(SimplexReport {
        model: Model::HyperboloidH3,
        order,
        seed,
        tuples,
        scale,
        omega_scale: omega_scale()?,
        max_defect,
        max_invariance_residual: max_residual,
        degenerate_value,
        max_abs_value: max_abs,
        first_value: first,
    })
}
