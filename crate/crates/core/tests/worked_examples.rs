use std::collections::BTreeMap;

use num::Zero;

use vaisman_core::catalog::{catalog_default, catalog_get, kodaira_complex_structure, omega_psi};
use vaisman_core::constructions::{
    centralize, classify_vaisman, modify, modify_pair, validate_modification, ModificationMap,
    VaismanType,
};
use vaisman_core::exterior::{solve_lee_form, KForm};
use vaisman_core::lie::LieAlgebra;
use vaisman_core::linalg::{Matrix, Subspace, Vector};
use vaisman_core::scalar::{frac, int, Scalar};
use vaisman_core::structures::{check_lck, koszul_form, nijenhuis_defect, ricci_form};

/// `φ(T) = ad_S = −ad_Z`, zero on `sl(2, ℝ)`.
fn s_map(n: usize, g: &LieAlgebra) -> ModificationMap {
    let sigma = g.ad_basis(3).scale(&int(-1));
    let mut form = vec![Scalar::zero(); n];
    form[0] = int(1);
    ModificationMap::single(sigma, &form).unwrap()
}

#[test]
fn s_map_is_compatible_only_for_vaisman_metrics() {
    for (a, b, c) in [(0, 0, 1), (0, 0, 3)] {
        let h = omega_psi(&int(a), &int(b), &int(c)).unwrap();
        let r = validate_modification(&h, &s_map(4, h.algebra()));
        assert!(r.pass, "{r}");
    }
    for (a, b, c) in [(1, 0, 2), (0, 1, 2), (1, 1, 3)] {
        let h = omega_psi(&int(a), &int(b), &int(c)).unwrap();
        let r = validate_modification(&h, &s_map(4, h.algebra()));
        assert_eq!(r.failing(), vec!["skew"]);
        // U = bX − aY: g([Z, U], Z) = a² + b², and ad_S = −ad_Z since W = Z + S is central
        let u = Vector(vec![int(0), int(b), int(-a), int(0)]);
        let z = Vector::basis(4, 3);
        let zu = h.algebra().bracket(&z, &u).unwrap();
        assert_eq!(h.metric().bilinear(&zu, &z), int(a * a + b * b));
        let s = s_map(4, h.algebra()).phi(&Vector::basis(4, 0));
        let val = h.metric().bilinear(&s.apply(&u), &z) + h.metric().bilinear(&u, &s.apply(&z));
        assert_eq!(val, int(-(a * a + b * b)));
    }
}

#[test]
fn pair_modification_gives_r_times_gl2() {
    let h = omega_psi(&int(0), &int(0), &int(1)).unwrap();
    let g = h.algebra();
    let sigma = g.ad_basis(3).scale(&int(-1));
    let pair = modify_pair(g, &Subspace::zero(4), h.complex_structure(), &[sigma], &["S".into()]).unwrap();
    assert_eq!(pair.algebra.dim(), 5);
    assert_eq!(pair.isotropy.dim(), 1);
    // W = Z + S; rebase (T, X, Y, Z, S) → (T, X, Y, Z, W)
    let mut p = Matrix::identity(5);
    p.set(3, 4, int(1));
    let inv = p.inverse().unwrap();
    let mut table = BTreeMap::new();
    for i in 0..5 {
        for j in i + 1..5 {
            let v = pair.algebra.bracket(&p.column(i), &p.column(j)).unwrap();
            table.insert((i, j), inv.apply(&v));
        }
    }
    let names = ["T", "X", "Y", "Z", "W"].map(String::from).to_vec();
    let rebased = LieAlgebra::new(names, table).unwrap();
    let gl2 = catalog_default("gl2r_mod").unwrap();
    assert_eq!(rebased, gl2.algebra);
    let s_new = Subspace::span(5, &[inv.apply(&Vector::basis(5, 4))]);
    assert_eq!(&s_new, &gl2.subspaces["h"]);
    assert_eq!(gl2.algebra.center().dim(), 2);
}

#[test]
fn modifying_by_s_map_keeps_vaisman() {
    let h = omega_psi(&int(0), &int(0), &int(1)).unwrap();
    let out = modify(&h, &s_map(4, h.algebra())).unwrap();
    assert!(check_lck(&out).vaisman);
    assert_eq!(out.algebra().is_unimodular(), h.algebra().is_unimodular());
}

#[test]
fn omega_psi_lee_data() {
    let samples = [
        (int(1), int(0), int(2)),
        (frac(1, 2), int(-1), int(3)),
        (int(0), int(0), int(1)),
    ];
    for (a, b, c) in samples {
        let h = omega_psi(&a, &b, &c).unwrap();
        let d = &c * &c - &(&a * &a + &b * &b);
        let lck = check_lck(&h);
        assert_eq!(lck.theta, Some(KForm::dual(4, 0)));
        let xi = Vector(vec![&c / &d, &b / &d, -&a / &d, int(0)]);
        assert_eq!(lck.xi.as_ref(), Some(&xi));
        assert_eq!(lck.xi_norm, Some(&c / &d));
        let zz = lck.killing_defects.iter().find(|k| (k.i, k.j) == (3, 3));
        let want = -(int(2) / &d) * (&a * &a + &b * &b);
        if want.is_zero() {
            assert!(zz.is_none());
            assert!(lck.vaisman);
        } else {
            assert_eq!(zz.unwrap().value, want);
            assert!(!lck.vaisman);
        }
    }
}

#[test]
fn kodaira_surfaces() {
    let j = kodaira_complex_structure();
    let omega = KForm::from_terms(4, 2, [(vec![0, 1], int(1)), (vec![2, 3], int(1))]).unwrap();
    for name in ["kodaira_primary", "kodaira_secondary"] {
        let e = catalog_default(name).unwrap();
        let h = e.hermitian.unwrap();
        assert_eq!(h.complex_structure(), &j);
        assert_eq!(h.fundamental_form().unwrap(), omega);
        assert_eq!(solve_lee_form(h.algebra(), &omega).unwrap(), KForm::dual(4, 3));
        assert!(nijenhuis_defect(h.algebra(), &j, None).unwrap().is_empty());
        assert!(check_lck(&h).vaisman);
    }
    let secondary = catalog_default("kodaira_secondary").unwrap().hermitian.unwrap();
    let c = centralize(&secondary).unwrap();
    assert_eq!(&c.algebra, catalog_default("kodaira_primary").unwrap().hermitian.unwrap().algebra());
    assert_eq!(classify_vaisman(&secondary).unwrap().kind, VaismanType::Heisenberg(1));
}

#[test]
fn centralize_r_times_su2() {
    let h = catalog_default("r_times_su2").unwrap().hermitian.unwrap();
    let c = centralize(&h).unwrap();
    // T, e1, e2, e3, ad_eta: ad_eta acts as ad_{e3} and e3 - ad_eta is central
    assert_eq!(c.algebra.dim(), 5);
    let center = c.algebra.center();
    assert_eq!(center.dim(), 2);
    assert!(center.contains(&Vector::basis(5, 0)));
    assert!(center.contains(&(&Vector::basis(5, 3) - &Vector::basis(5, 4))));
    assert_eq!(c.eta, Vector::basis(5, 3));
}

#[test]
fn koszul_forms_of_three_dimensional_pairs() {
    // sl(2, ℝ): κ = −2z and 𝔯 = −2ω; su(2): κ(e3) = 2
    let k = catalog_default("sl2r").unwrap().kahler.unwrap();
    assert_eq!(koszul_form(&k).unwrap(), KForm::dual(3, 2).scale(&int(-2)));
    assert_eq!(ricci_form(&k).unwrap(), k.omega().scale(&int(-2)));
    let k = catalog_default("su2").unwrap().kahler.unwrap();
    assert_eq!(koszul_form(&k).unwrap().coeff(&[2]), int(2));
}

#[test]
fn classifier_on_catalog() {
    let mut p = BTreeMap::new();
    p.insert("k".to_string(), int(2));
    let cases = [
        (catalog_default("r_times_heisenberg").unwrap(), VaismanType::Heisenberg(1)),
        (catalog_get("r_times_heisenberg", &p).unwrap(), VaismanType::Heisenberg(2)),
        (catalog_default("r_times_su2").unwrap(), VaismanType::Su2),
        (catalog_default("r_times_sl2r").unwrap(), VaismanType::Sl2r),
        (catalog_default("omega_psi").unwrap(), VaismanType::Sl2r),
    ];
    for (e, want) in cases {
        let v = classify_vaisman(e.hermitian.as_ref().unwrap()).unwrap();
        assert_eq!(v.kind, want, "{}", e.name);
    }
}
