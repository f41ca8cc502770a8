use std::collections::BTreeMap;

use liecohom::cartan::verify_cartan_involution;
use liecohom::catalog::{build, DEFAULT_MAX_DIM};
use liecohom::cohomology::{
    cohomology_dims, differential, form_basis, invariant_forms, invariant_symmetric_forms, invariants, lie_derivative,
    lie_derivative_by, relative_differential, AlternatingForm, ReductivePair,
};
use liecohom::lie::{killing_form, unit, LieAlgebra};
use liecohom::linalg::{combine, qi, Matrix, Rational};
use proptest::prelude::*;

fn su2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        "su2",
        vec!["e1".into(), "e2".into(), "e3".into()],
        &[(0, 1, 2, qi(1)), (1, 2, 0, qi(1)), (0, 2, 1, qi(-1))],
    )
    .unwrap()
}

fn sl2r() -> LieAlgebra {
    LieAlgebra::from_brackets(
        "sl2R",
        vec!["H".into(), "E".into(), "F".into()],
        &[(0, 1, 1, qi(2)), (0, 2, 2, qi(-2)), (1, 2, 0, qi(1))],
    )
    .unwrap()
}

/// Rank of the absolute differential `Λ^k g* -> Λ^{k+1} g*` computed by
/// evaluating `dω(x_0..x_k) = Σ_{i<j} (-1)^{i+j} ω([x_i,x_j], x_0..^i..^j..x_k)`
/// on basis tuples, directly from the bracket.
fn brute_force_rank(g: &LieAlgebra, k: usize) -> usize {
    let n = g.dim();
    let src = form_basis(n, k).unwrap();
    let dst = form_basis(n, k + 1).unwrap();
    let mut cols = Vec::new();
    for s in &src {
        let mut c = BTreeMap::new();
        c.insert(s.clone(), qi(1));
        let w = AlternatingForm::from_coefficients(n, k, c).unwrap();
        let col: Vec<Rational> = dst
            .iter()
            .map(|t| {
                let xs: Vec<Vec<Rational>> = t.iter().map(|&i| unit(n, i)).collect();
                let mut total = qi(0);
                for i in 0..=k {
                    for j in (i + 1)..=k {
                        let mut args = vec![g.bracket(&xs[i], &xs[j])];
                        args.extend((0..=k).filter(|&l| l != i && l != j).map(|l| xs[l].clone()));
                        let v = w.eval(&args).unwrap();
                        if (i + j) % 2 == 0 {
                            total += v;
                        } else {
                            total -= v;
                        }
                    }
                }
                total
            })
            .collect();
        cols.push(col);
    }
    if cols.is_empty() || dst.is_empty() {
        return 0;
    }
    Matrix::from_columns(&cols, dst.len()).rank()
}

fn pair_of(name: &str) -> ReductivePair {
    let e = build(name, DEFAULT_MAX_DIM).unwrap();
    let d = verify_cartan_involution(&e.algebra, &e.cartan_involution).unwrap();
    ReductivePair::symmetric(&d)
}

#[test]
fn su2_absolute() {
    let p = ReductivePair::absolute(&su2()).unwrap();
    let r = cohomology_dims(&p, 3).unwrap();
    assert_eq!(r.h_dims(), vec![1, 0, 0, 1]);
    let d1 = relative_differential(&p, 1).unwrap();
    assert_eq!(d1.rank(), 3);
    assert_eq!(brute_force_rank(&su2(), 1), 3);
}

#[test]
fn differential_matches_brute_force() {
    for g in [
        su2(),
        sl2r(),
        build("su3", 64).unwrap().algebra,
        build("sl3R", 64).unwrap().algebra,
    ] {
        let p = ReductivePair::absolute(&g).unwrap();
        let r = cohomology_dims(&p, 3).unwrap();
        for k in 0..3 {
            assert_eq!(r.degrees[k].d_rank, brute_force_rank(&g, k), "{} degree {k}", g.name());
        }
    }
}

#[test]
fn abelian_differential_vanishes() {
    let p = ReductivePair::absolute(&LieAlgebra::abelian(3)).unwrap();
    for k in 0..3 {
        assert!(relative_differential(&p, k).unwrap().is_zero());
    }
    assert_eq!(cohomology_dims(&p, 3).unwrap().h_dims(), vec![1, 3, 3, 1]);
}

#[test]
fn su3_poincare_duality() {
    let g = build("su3", 64).unwrap().algebra;
    let r = cohomology_dims(&ReductivePair::absolute(&g).unwrap(), 8).unwrap();
    let h = r.h_dims();
    assert_eq!(h, vec![1, 0, 0, 1, 0, 1, 0, 0, 1]);
    for k in 0..=8 {
        assert_eq!(h[k], h[8 - k]);
    }
}

#[test]
fn sl2r_area_form() {
    let p = pair_of("sl2R");
    let inv = invariant_forms(&p, 2).unwrap();
    assert_eq!(inv.len(), 1);
    let x = p.m_basis[0].clone();
    assert!(lie_derivative(&p, &x, &inv[0]).unwrap().is_zero());
    assert!(lie_derivative(&p, &vec![qi(0); 3], &inv[0]).unwrap().is_zero());
    assert_eq!(invariant_forms(&p, 0).unwrap().len(), 1);
}

#[test]
fn su2_top_form_is_adjoint_invariant() {
    let g = su2();
    let mut c = BTreeMap::new();
    c.insert(vec![0, 1, 2], qi(1));
    let top = AlternatingForm::from_coefficients(3, 3, c).unwrap();
    for i in 0..3 {
        assert!(lie_derivative_by(g.ad(i), &top).unwrap().is_zero());
    }
    assert_eq!(invariants(g.ad_all(), 3, 3).unwrap().len(), 1);
}

#[test]
fn symmetric_pairs_have_zero_differential() {
    for name in ["sl2R", "sl2C", "su21", "so31", "sl3R"] {
        let p = pair_of(name);
        assert!(p.is_symmetric());
        let r = cohomology_dims(&p, 3).unwrap();
        assert!(r.degrees.iter().all(|d| d.d_rank == 0), "{name}");
        assert_eq!(r.h(0), Some(1));
    }
}

#[test]
fn complex_entries_have_h3() {
    assert_eq!(cohomology_dims(&pair_of("sl2C"), 3).unwrap().h(3), Some(1));
    assert_eq!(cohomology_dims(&pair_of("sl2R"), 3).unwrap().h(3), Some(0));
    assert_eq!(cohomology_dims(&pair_of("sl2R"), 2).unwrap().h(2), Some(1));
}

#[test]
fn su21_relative_to_derived_k() {
    let e = build("su21", 64).unwrap();
    let d = verify_cartan_involution(&e.algebra, &e.cartan_involution).unwrap();
    let p = ReductivePair::orthogonal_complement(&e.algebra, d.m_basis.clone(), "m").unwrap();
    assert_eq!(p.p_dim(), 5);
    let r = cohomology_dims(&p, 3).unwrap();
    assert_eq!(r.h(3), Some(0));
    assert!(!r.symmetric_pair);
}

#[test]
fn not_reductive_is_rejected() {
    // span{E} in sl2R: [E, H] = -2E stays in m, but [E, F] = H leaves p = span{H, F} only partly
    let g = sl2r();
    let m = vec![unit(3, 1)];
    let p = vec![unit(3, 0), unit(3, 2)];
    assert!(ReductivePair::new(&g, m, p, "b").is_err());
}

#[test]
fn symmetric_forms() {
    let k = su2();
    let forms = invariant_symmetric_forms(&k);
    assert_eq!(forms.len(), 1);
    let kf = killing_form(&k).gram;
    let ratio = kf.get(0, 0) / forms[0].gram.get(0, 0);
    assert_eq!(forms[0].gram.scale(&ratio), kf);
    assert_eq!(invariant_symmetric_forms(&LieAlgebra::abelian(3)).len(), 6);
    assert_eq!(invariant_symmetric_forms(&su2().direct_sum(&su2(), "su2+su2")).len(), 2);
}

#[test]
fn su2_squared_has_two_cubic_classes() {
    let g = su2().direct_sum(&su2(), "su2+su2");
    let r = cohomology_dims(&ReductivePair::absolute(&g).unwrap(), 6).unwrap();
    // Poincare polynomial (1 + t^3)^2
    assert_eq!(r.h_dims(), vec![1, 0, 0, 2, 0, 0, 1]);
}

fn random_form(dim: usize, degree: usize) -> impl Strategy<Value = AlternatingForm> {
    let n = form_basis(dim, degree).unwrap().len();
    prop::collection::vec(prop_oneof![2 => Just(0i64), 1 => -3i64..=3], n).prop_map(move |c| {
        let basis = form_basis(dim, degree).unwrap();
        let coefficients: BTreeMap<Vec<usize>, Rational> =
            basis.into_iter().zip(c).map(|(t, v)| (t, Rational::from(v))).collect();
        AlternatingForm::from_coefficients(dim, degree, coefficients).unwrap()
    })
}

fn su21_relative_m() -> ReductivePair {
    let e = build("su21", DEFAULT_MAX_DIM).unwrap();
    let d = verify_cartan_involution(&e.algebra, &e.cartan_involution).unwrap();
    ReductivePair::orthogonal_complement(&e.algebra, d.m_basis.clone(), "m").unwrap()
}

fn sub(a: &AlternatingForm, b: &AlternatingForm) -> AlternatingForm {
    let mut c = a.coefficients.clone();
    for (t, v) in &b.coefficients {
        *c.entry(t.clone()).or_insert_with(Rational::zero) -= v;
    }
    AlternatingForm::from_coefficients(a.space_dim, a.degree, c).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn d_squared_vanishes_on_cochains(w in random_form(8, 2)) {
        let e = build("su21", DEFAULT_MAX_DIM).unwrap();
        let pair = ReductivePair::absolute(&e.algebra).unwrap();
        let dw = differential(&pair, &w).unwrap();
        prop_assert!(differential(&pair, &dw).unwrap().is_zero());
    }

    #[test]
    fn lie_derivative_is_a_representation(w in random_form(5, 2), a in prop::collection::vec(-2i64..=2, 3), b in prop::collection::vec(-2i64..=2, 3)) {
        let pair = su21_relative_m();
        let n = pair.g_dim();
        let x = combine(&a.into_iter().map(Rational::from).collect::<Vec<_>>(), &pair.m_basis, n);
        let y = combine(&b.into_iter().map(Rational::from).collect::<Vec<_>>(), &pair.m_basis, n);
        let lxy = lie_derivative(&pair, &pair.g.bracket(&x, &y), &w).unwrap();
        let lx_ly = lie_derivative(&pair, &x, &lie_derivative(&pair, &y, &w).unwrap()).unwrap();
        let ly_lx = lie_derivative(&pair, &y, &lie_derivative(&pair, &x, &w).unwrap()).unwrap();
        prop_assert_eq!(sub(&lx_ly, &ly_lx), lxy);
    }

    #[test]
    fn differential_commutes_with_m(w in random_form(5, 2), a in prop::collection::vec(-2i64..=2, 3)) {
        let pair = su21_relative_m();
        let x = combine(&a.into_iter().map(Rational::from).collect::<Vec<_>>(), &pair.m_basis, pair.g_dim());
        let left = differential(&pair, &lie_derivative(&pair, &x, &w).unwrap()).unwrap();
        let right = lie_derivative(&pair, &x, &differential(&pair, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
