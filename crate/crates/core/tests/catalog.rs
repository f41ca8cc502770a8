use liecohom::cartan::{classify_k, compact_dual, verify_cartan_involution, KClass};
use liecohom::catalog::{self, build, list, CATALOG, DEFAULT_MAX_DIM};
use liecohom::lie::{complex_structure, killing_signature, ComplexStructure};
use liecohom::linalg::{qi, Matrix};
use liecohom::CatalogError;

#[test]
fn su2_killing_is_minus_two() {
    let e = build("su2", DEFAULT_MAX_DIM).unwrap();
    let b = liecohom::lie::killing_form(&e.algebra);
    assert_eq!(b.gram, Matrix::scalar(3, &qi(-2)));
}

#[test]
fn signatures() {
    let sig = |n: &str| killing_signature(&build(n, DEFAULT_MAX_DIM).unwrap().algebra).as_tuple();
    assert_eq!(sig("su21"), (4, 4, 0));
    assert_eq!(sig("sl2R"), (2, 1, 0));
    assert_eq!(sig("su3"), (0, 8, 0));
    assert_eq!(sig("sl2C"), (3, 3, 0));
    assert_eq!(sig("so31"), (3, 3, 0));
    assert_eq!(sig("sp4R"), (6, 4, 0));
}

#[test]
fn every_entry_has_a_cartan_involution() {
    for name in CATALOG {
        let e = build(name, DEFAULT_MAX_DIM).unwrap();
        let d =
            verify_cartan_involution(&e.algebra, &e.cartan_involution).unwrap_or_else(|err| panic!("{name}: {err}"));
        let p_dim = killing_signature(&e.algebra).positive;
        assert_eq!(d.p_dim(), p_dim, "{name}");
        if e.family.is_compact() {
            assert_eq!(d.p_dim(), 0);
        }
    }
}

#[test]
fn complex_structures_match_flag() {
    for name in CATALOG {
        let e = build(name, DEFAULT_MAX_DIM).unwrap();
        let j = complex_structure(&e.algebra).unwrap();
        assert_eq!(j.is_some(), e.expects_complex_structure, "{name}");
        if let Some(ComplexStructure::Rational(j)) = j {
            assert_eq!(&j * &j, Matrix::scalar(e.dim(), &qi(-1)), "{name}");
        }
    }
}

#[test]
fn hermitian_entries() {
    let herm = ["su11", "so21", "sp2R", "su21", "su31", "su22", "so32", "sp4R"];
    let not_herm = ["sl3R", "so31", "so41", "sl2C", "sl4R"];
    for name in herm {
        let e = build(name, DEFAULT_MAX_DIM).unwrap();
        let d = verify_cartan_involution(&e.algebra, &e.cartan_involution).unwrap();
        assert_eq!(d.z_k_dim, 1, "{name}");
        assert!(matches!(
            classify_k(&d).unwrap(),
            KClass::KAbelian { .. } | KClass::Hermitian { .. }
        ));
    }
    for name in not_herm {
        let e = build(name, DEFAULT_MAX_DIM).unwrap();
        let d = verify_cartan_involution(&e.algebra, &e.cartan_involution).unwrap();
        assert_eq!(d.z_k_dim, 0, "{name}");
    }
}

#[test]
fn compact_dual_of_su21_is_compact() {
    let e = build("su21", DEFAULT_MAX_DIM).unwrap();
    let d = verify_cartan_involution(&e.algebra, &e.cartan_involution).unwrap();
    let u = compact_dual(&d).unwrap();
    assert_eq!(killing_signature(&u.algebra).as_tuple(), (0, 8, 0));
    assert!(u.ip_labels.iter().all(|l| l.starts_with('i')));
}

#[test]
fn list_respects_bounds() {
    let names: Vec<String> = list(DEFAULT_MAX_DIM).into_iter().map(|d| d.name).collect();
    assert!(names.contains(&"su2".to_string()));
    assert!(names.contains(&"sl4C".to_string()));
    let small: Vec<String> = list(10).into_iter().map(|d| d.name).collect();
    assert!(small.iter().all(|n| build(n, 10).unwrap().dim() <= 10));
    assert!(!small.contains(&"su4".to_string()));
}

#[test]
fn rejects_bad_names() {
    assert!(matches!(build("so4", 64), Err(CatalogError::RankOutOfBounds { .. })));
    assert!(matches!(build("foo3", 64), Err(CatalogError::UnknownFamily(_))));
}

#[test]
fn su2_embeddings() {
    let su3 = build("su3", 64).unwrap();
    let h = catalog::su2_embedding(&su3, &[1, -1, 0]).unwrap();
    assert!(h.is_injective());
    let h = catalog::su2_embedding(&su3, &[2, 0, -2]).unwrap();
    assert!(h.is_injective());
    assert!(matches!(
        catalog::su2_embedding(&su3, &[1, 0]),
        Err(CatalogError::SizeMismatch { .. })
    ));
    assert!(matches!(
        catalog::su2_embedding(&su3, &[1, 1, 0]),
        Err(CatalogError::WeightsNotSymmetric)
    ));
}
