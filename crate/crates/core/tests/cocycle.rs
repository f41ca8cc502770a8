use liecohom::cartan::verify_cartan_involution;
use liecohom::catalog::{build, su2_embedding, CatalogEntry, Homomorphism, CATALOG};
use liecohom::cocycle::{build_omega, dynkin_index, phi_map, phi_report};
use liecohom::lie::{complex_structure, killing_form, unit, BilinearForm, ComplexStructure, SubalgebraEmbedding};
use liecohom::linalg::{q, qi, Matrix, Rational};
use liecohom::CocycleError;

fn entry(name: &str) -> CatalogEntry {
    build(name, 64).unwrap()
}

fn omega_inputs(e: &CatalogEntry) -> (Matrix, SubalgebraEmbedding) {
    let j = match complex_structure(&e.algebra).unwrap() {
        Some(ComplexStructure::Rational(j)) => j,
        other => panic!("{}: no rational J: {other:?}", e.name),
    };
    let d = verify_cartan_involution(&e.algebra, &e.cartan_involution).unwrap();
    let labels = (0..d.k_dim()).map(|i| format!("k{i}")).collect();
    let k = SubalgebraEmbedding::from_basis(&e.algebra, "k", &d.k_basis, labels).unwrap();
    (j, k)
}

#[test]
fn omega_for_every_complex_entry() {
    for name in CATALOG {
        let e = entry(name);
        if !e.expects_complex_structure {
            continue;
        }
        let (j, k) = omega_inputs(&e);
        let w = build_omega(&e.algebra, &j, &k).unwrap_or_else(|err| panic!("{name}: {err}"));
        assert_eq!(w.invariant_dim, 1, "{name}");
        assert!(!w.form.is_zero());
    }
}

#[test]
fn omega_is_alternating_on_vectors() {
    let e = entry("sl2C");
    let (j, k) = omega_inputs(&e);
    let w = build_omega(&e.algebra, &j, &k).unwrap();
    let v = vec![qi(1), q(1, 2), qi(-3)];
    let u = vec![qi(0), qi(2), qi(1)];
    assert!(w.form.eval(&[v.clone(), v.clone(), u.clone()]).unwrap().is_zero());
    let a = w.form.eval(&[unit(3, 0), unit(3, 1), unit(3, 2)]).unwrap();
    let b = w.form.eval(&[unit(3, 1), unit(3, 0), unit(3, 2)]).unwrap();
    assert_eq!(a, -b);
    assert!(!a.is_zero());
}

#[test]
fn omega_rejects_bad_inputs() {
    let e = entry("sl2C");
    let (_, k) = omega_inputs(&e);
    assert!(matches!(
        build_omega(&e.algebra, &Matrix::identity(6), &k),
        Err(CocycleError::NotComplexStructure)
    ));
    let sl2r = entry("sl2R");
    let labels = vec!["k".to_string()];
    let d = verify_cartan_involution(&sl2r.algebra, &sl2r.cartan_involution).unwrap();
    let kk = SubalgebraEmbedding::from_basis(&sl2r.algebra, "k", &d.k_basis, labels).unwrap();
    assert!(build_omega(&sl2r.algebra, &Matrix::identity(3), &kk).is_err());
}

#[test]
fn phi_on_su2() {
    let su2 = entry("su2").algebra;
    let b = killing_form(&su2);
    let w = phi_map(&su2, &b).unwrap();
    // B(e1, [e2, e3]) with gram -2I and [e2, e3] a unit vector up to sign
    let expected: Rational = (0..3)
        .map(|l| b.gram.get(0, l) * &su2.structure_constant(1, 2, l))
        .sum();
    assert_eq!(w.coefficient(&[0, 1, 2]), expected);
    assert_eq!(w.coefficient(&[0, 1, 2]).abs(), qi(2));
    let zero = BilinearForm::new(Matrix::zeros(3, 3));
    assert!(phi_map(&su2, &zero).unwrap().is_zero());
    let bad = BilinearForm::new(Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]));
    assert!(matches!(phi_map(&su2, &bad), Err(CocycleError::NotSymmetric)));
    let bad = BilinearForm::new(Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]));
    assert!(matches!(phi_map(&su2, &bad), Err(CocycleError::NotInvariant)));
}

#[test]
fn phi_is_an_isomorphism_for_compact_simple() {
    for name in ["su2", "su3", "so5"] {
        let k = entry(name).algebra;
        let r = phi_report(&k).unwrap();
        assert_eq!((r.symmetric_dim, r.alternating_dim, r.phi_rank), (1, 1, 1), "{name}");
        assert!(r.injective);
        assert!(!phi_map(&k, &killing_form(&k)).unwrap().is_zero());
    }
}

fn weight_oracle(weights: &[i64]) -> Rational {
    // (1/2) Σ m² over the defining representation
    let s: i64 = weights.iter().map(|w| w * w).sum();
    q(s, 2)
}

#[test]
fn dynkin_indices() {
    let su2 = entry("su2");
    let su3 = entry("su3");
    let su4 = entry("su4");
    assert_eq!(dynkin_index(&Homomorphism::identity(&su2)).unwrap().index, qi(1));
    for (target, weights, expected) in [
        (&su3, vec![1, -1, 0], 1),
        (&su3, vec![2, 0, -2], 4),
        (&su4, vec![1, -1, 1, -1], 2),
        (&su4, vec![2, 0, -2, 0], 4),
        (&su2, vec![1, -1], 1),
    ] {
        let h = su2_embedding(target, &weights).unwrap();
        let r = dynkin_index(&h).unwrap();
        assert_eq!(r.index, qi(expected), "{weights:?}");
        assert_eq!(r.index, weight_oracle(&weights));
    }
}

#[test]
fn dynkin_index_is_multiplicative() {
    let su2 = entry("su2");
    let su3 = entry("su3");
    let a = su2_embedding(&su2, &[1, -1]).unwrap();
    let b = su2_embedding(&su3, &[2, 0, -2]).unwrap();
    let ab = a.then(&b).unwrap();
    let ia = dynkin_index(&a).unwrap().index;
    let ib = dynkin_index(&b).unwrap().index;
    assert_eq!(dynkin_index(&ab).unwrap().index, &ia * &ib);
}

#[test]
fn dynkin_rejects_noncompact() {
    let sl2 = entry("sl2R");
    let h = Homomorphism::identity(&sl2);
    assert!(matches!(dynkin_index(&h), Err(CocycleError::NotCompactSimple)));
}
