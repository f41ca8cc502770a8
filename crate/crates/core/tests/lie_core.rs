use liecohom::cartan::{compact_dual, verify_cartan_involution};
use liecohom::catalog::{build, list, CATALOG, DEFAULT_MAX_DIM};
use liecohom::lie::{
    action_matrices, center, centroid, centroid_full_system, centroid_via_cyclic_vector, commutant_of_actions,
    complex_structure, derived_subalgebra, generating_set, ideal_generated, killing_form, killing_signature,
    make_lie_algebra, structure_analysis, unit, ComplexStructure, LieAlgebra, StructureKind,
};
use liecohom::linalg::{canonical_span, qi, Matrix, Rational};
use liecohom::LieError;
use proptest::prelude::*;

fn alg(name: &str) -> LieAlgebra {
    build(name, DEFAULT_MAX_DIM).unwrap().algebra
}

fn sl2_hef() -> LieAlgebra {
    let labels = ["H", "E", "F"].map(String::from).to_vec();
    LieAlgebra::from_brackets("sl2", labels, &[(0, 1, 1, qi(2)), (0, 2, 2, qi(-2)), (1, 2, 0, qi(1))]).unwrap()
}

// 2x2 matrices of H, E, F
fn hef_matrices() -> [[[i64; 2]; 2]; 3] {
    [[[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]]
}

#[test]
fn sl2_killing_from_trace_form() {
    // on sl(2) the Killing form is 4 tr(XY) in the defining representation
    let b = killing_form(&sl2_hef());
    let m = hef_matrices();
    for i in 0..3 {
        for j in 0..3 {
            let mut tr = 0;
            for r in 0..2 {
                for c in 0..2 {
                    tr += m[i][r][c] * m[j][c][r];
                }
            }
            assert_eq!(b.gram.get(i, j), &qi(4 * tr), "({i}, {j})");
        }
    }
    assert_eq!(b.gram.get(0, 0), &qi(8));
    assert_eq!(b.gram.get(1, 2), &qi(4));
    assert_eq!(killing_signature(&sl2_hef()).as_tuple(), (2, 1, 0));
}

#[test]
fn rejects_invalid_tensors() {
    let z = || vec![vec![qi(0); 3]; 3];
    let mut c = vec![z(), z(), z()];
    c[0][1][2] = qi(1);
    let labels = || ["a", "b", "c"].map(String::from).to_vec();
    assert_eq!(
        make_lie_algebra(3, labels(), &c).unwrap_err(),
        LieError::AntisymmetryViolation(0, 1)
    );
    assert!(matches!(
        make_lie_algebra(2, labels(), &c),
        Err(LieError::DimensionMismatch(_))
    ));
    // [a,b] = c, [a,c] = a, [b,c] = a: the Jacobi sum on (a, b, c) is c
    let bad = [(0, 1, 2, qi(1)), (0, 2, 0, qi(1)), (1, 2, 0, qi(1))];
    assert!(matches!(
        LieAlgebra::from_brackets("bad", labels(), &bad),
        Err(LieError::JacobiViolation(..))
    ));
    assert!(LieAlgebra::from_brackets("bad", labels(), &[(1, 0, 2, qi(1))]).is_err());
}

#[test]
fn center_and_derived_algebra() {
    let g = alg("su2").direct_sum(&LieAlgebra::abelian(2), "u");
    assert_eq!(center(&g).len(), 2);
    assert_eq!(derived_subalgebra(&g).len(), 3);
    assert!(center(&alg("su3")).is_empty());
    assert_eq!(derived_subalgebra(&alg("sl3R")).len(), 8);
    let abelian = LieAlgebra::abelian(4);
    assert_eq!(center(&abelian).len(), 4);
    assert!(derived_subalgebra(&abelian).is_empty());
    assert_eq!(structure_analysis(&abelian).unwrap(), StructureKind::Abelian);
    assert_eq!(structure_analysis(&g).unwrap(), StructureKind::NotSemisimple);
}

#[test]
fn centroid_examples() {
    assert_eq!(centroid(&alg("sl2R")).dim(), 1);
    assert_eq!(centroid(&alg("su21")).dim(), 1);
    let c = centroid(&alg("sl2C"));
    assert_eq!(c.dim(), 2);
    assert!(c.algebra.find_idempotent().is_none());
    for t in c.basis() {
        let f = t.minimal_polynomial();
        if f.degree() == Some(2) {
            assert!(f.discriminant().unwrap().is_negative());
        }
    }
    let su2 = alg("su2");
    let c = centroid(&su2.direct_sum(&su2, "su2+su2"));
    assert_eq!(c.dim(), 2);
    let e = c.algebra.find_idempotent().expect("product has an idempotent");
    assert_eq!(c.algebra.mul(&e, &e), e);
}

#[test]
fn centroid_methods_agree() {
    for name in ["sl2C", "su3", "so31", "sl3C", "su21"] {
        let g = alg(name);
        let n = g.dim();
        let gens: Vec<Vec<Rational>> = generating_set(&g).into_iter().map(|i| unit(n, i)).collect();
        let flat = |ms: &[Matrix]| canonical_span(&ms.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>(), n * n);
        let full = flat(&centroid_full_system(&g, &gens));
        let cyclic = flat(&centroid_via_cyclic_vector(&g, &gens).expect("simple algebras have cyclic vectors"));
        assert_eq!(full, cyclic, "{name}");
    }
}

#[test]
fn complex_structure_commutes_with_ad() {
    for name in ["sl2C", "so3C", "sl3C", "so31"] {
        let g = alg(name);
        let j = match complex_structure(&g).unwrap() {
            Some(ComplexStructure::Rational(j)) => j,
            other => panic!("{name}: {other:?}"),
        };
        assert_eq!(&j * &j, Matrix::scalar(g.dim(), &qi(-1)));
        for a in g.ad_all() {
            assert_eq!(&j * a, a * &j);
        }
        // J is complex linear: [Jx, y] = J[x, y]
        let x = unit(g.dim(), 0);
        let y = unit(g.dim(), 1);
        assert_eq!(g.bracket(&j.mul_vec(&x), &y), j.mul_vec(&g.bracket(&x, &y)));
    }
    assert_eq!(complex_structure(&alg("sl3R")).unwrap(), None);
    assert_eq!(
        complex_structure(&LieAlgebra::abelian(2)).unwrap_err(),
        LieError::NotSimple
    );
}

#[test]
fn structure_of_compact_duals() {
    let e = build("sl2C", DEFAULT_MAX_DIM).unwrap();
    let d = verify_cartan_involution(&e.algebra, &e.cartan_involution).unwrap();
    let dual = compact_dual(&d).unwrap();
    match structure_analysis(&dual.algebra).unwrap() {
        StructureKind::SemisimpleSplit(ideals) => {
            let dims: Vec<usize> = ideals.iter().map(|i| i.dim).collect();
            assert_eq!(dims, vec![3, 3]);
            assert!(ideals.iter().all(|i| !i.complex));
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(structure_analysis(&alg("sl2C")).unwrap(), StructureKind::SimpleComplex);
    assert_eq!(structure_analysis(&alg("su4")).unwrap(), StructureKind::SimpleReal);
}

#[test]
fn isotropy_commutants() {
    // (name, dim of the commutant of k on p)
    for (name, dim) in [("sl2C", 1), ("sl3R", 1), ("su21", 2), ("sp4R", 2), ("so41", 1)] {
        let e = build(name, DEFAULT_MAX_DIM).unwrap();
        let d = verify_cartan_involution(&e.algebra, &e.cartan_involution).unwrap();
        let acts = action_matrices(&e.algebra, &d.k_basis, &d.p_basis).unwrap();
        let c = commutant_of_actions(&acts, d.p_dim());
        assert_eq!(c.dim, dim, "{name}");
        assert!(c.irreducible, "{name}");
    }
    // su(2) acting on two copies of its adjoint representation
    let su2 = alg("su2");
    let g = su2.direct_sum(&su2, "pair");
    let diag: Vec<Vec<Rational>> = (0..3)
        .map(|i| {
            let mut v = unit(6, i);
            v[i + 3] = qi(1);
            v
        })
        .collect();
    let acts = action_matrices(&g, &diag, &(0..6).map(|i| unit(6, i)).collect::<Vec<_>>()).unwrap();
    let c = commutant_of_actions(&acts, 6);
    assert_eq!(c.dim, 4);
    assert!(!c.irreducible);
}

#[test]
fn killing_invariance_on_catalog() {
    for name in CATALOG {
        let g = alg(name);
        assert!(killing_form(&g).is_invariant(&g), "{name}");
    }
}

#[test]
fn json_round_trip() {
    for d in list(DEFAULT_MAX_DIM) {
        let g = alg(&d.name);
        let text = serde_json::to_string(&g.to_json()).unwrap();
        let back = LieAlgebra::from_json_str(&text).unwrap();
        assert_eq!(back.to_json(), g.to_json(), "{}", d.name);
    }
    let err = LieAlgebra::from_json_str("{\"name\": \"x\",\n \"dim\": }").unwrap_err();
    match err {
        LieError::Parse(msg) => assert!(msg.contains("line 2"), "{msg}"),
        other => panic!("{other:?}"),
    }
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-3i64..=3, n).prop_map(|v| v.into_iter().map(Rational::from).collect())
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_axioms(x in vector(8), y in vector(8), z in vector(8)) {
        let g = alg("su21");
        let neg: Vec<Rational> = g.bracket(&y, &x).iter().map(|v| -v).collect();
        prop_assert_eq!(g.bracket(&x, &y), neg);
        let jac = add(
            &add(&g.bracket(&x, &g.bracket(&y, &z)), &g.bracket(&y, &g.bracket(&z, &x))),
            &g.bracket(&z, &g.bracket(&x, &y)),
        );
        prop_assert!(jac.iter().all(Rational::is_zero));
        prop_assert_eq!(g.bracket(&add(&x, &y), &z), add(&g.bracket(&x, &z), &g.bracket(&y, &z)));
    }

    #[test]
    fn ad_is_a_representation(x in vector(8), y in vector(8)) {
        let g = alg("sl3R");
        prop_assert_eq!(g.ad_vec(&x).mul_vec(&y), g.bracket(&x, &y));
        prop_assert_eq!(g.ad_vec(&g.bracket(&x, &y)), g.ad_vec(&x).commutator(&g.ad_vec(&y)));
    }

    #[test]
    fn killing_is_invariant_on_vectors(x in vector(8), y in vector(8), z in vector(8)) {
        let g = alg("su21");
        let b = killing_form(&g);
        prop_assert_eq!(b.eval(&g.bracket(&x, &y), &z), -b.eval(&y, &g.bracket(&x, &z)));
        prop_assert_eq!(b.eval(&x, &y), b.eval(&y, &x));
    }

    #[test]
    fn simple_algebras_have_no_proper_ideals(x in vector(8)) {
        prop_assume!(x.iter().any(|v| !v.is_zero()));
        prop_assert_eq!(ideal_generated(&alg("su3"), &x).len(), 8);
        prop_assert_eq!(ideal_generated(&alg("su21"), &x).len(), 8);
    }
}
