use std::collections::BTreeMap;

use num::{One, Zero};
use proptest::prelude::*;

use vaisman_core::catalog::{
    all_default_entries, catalog_default, catalog_get, heisenberg_sasaki, omega_psi,
    sl2r_sasaki, su2_sasaki,
};
use vaisman_core::constructions::{
    admissible_forms, canonical_vaisman, centralize, classify_vaisman, compatible_derivations,
    flat_kahler, kahler_quotient, modify, quantize, validate_modification, ModificationMap,
    VaismanType,
};
use vaisman_core::exterior::{ce_d, increasing_tuples, KForm};
use vaisman_core::lie::LieAlgebra;
use vaisman_core::linalg::{Matrix, Vector};
use vaisman_core::scalar::{frac, int, Scalar};
use vaisman_core::structures::{check_lck, lee_field, HermitianData};

fn small() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn algebras() -> Vec<LieAlgebra> {
    all_default_entries().into_iter().map(|e| e.algebra).collect()
}

fn random_form(dim: usize, degree: usize, coeffs: &[Scalar]) -> KForm {
    let terms = increasing_tuples(dim, degree)
        .into_iter()
        .zip(coeffs.iter().cycle())
        .map(|(t, c)| (t, c.clone()));
    KForm::from_terms(dim, degree, terms).unwrap()
}

/// Transports the bracket of `g` along the basis change `p`.
fn rebased(g: &LieAlgebra, p: &Matrix) -> LieAlgebra {
    let n = g.dim();
    let inv = p.inverse().unwrap();
    let cols: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
    let mut table = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            table.insert((i, j), inv.apply(&g.bracket(&cols[i], &cols[j]).unwrap()));
        }
    }
    LieAlgebra::new(g.names().to_vec(), table).unwrap()
}

fn unit_lower(n: usize, entries: &[Scalar]) -> Matrix {
    let mut m = Matrix::identity(n);
    let mut it = entries.iter().cycle();
    for i in 0..n {
        for j in 0..i {
            m.set(i, j, it.next().unwrap().clone());
        }
    }
    m
}

fn d_squared_on_one_forms_vanishes(g: &LieAlgebra) -> bool {
    (0..g.dim()).all(|i| {
        let d = ce_d(g, &KForm::dual(g.dim(), i)).unwrap();
        ce_d(g, &d).unwrap().is_zero()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_squared_is_zero(idx in 0usize..12, degree in 0usize..4, coeffs in prop::collection::vec(small(), 1..8)) {
        let gs = algebras();
        let g = &gs[idx % gs.len()];
        let a = random_form(g.dim(), degree.min(g.dim()), &coeffs);
        let d = ce_d(g, &a).unwrap();
        prop_assert!(ce_d(g, &d).unwrap().is_zero());
    }

    #[test]
    fn d_is_an_antiderivation(
        idx in 0usize..12,
        p in 0usize..3,
        q in 0usize..3,
        c1 in prop::collection::vec(small(), 1..6),
        c2 in prop::collection::vec(small(), 1..6),
    ) {
        let gs = algebras();
        let g = &gs[idx % gs.len()];
        let n = g.dim();
        let (a, b) = (random_form(n, p.min(n), &c1), random_form(n, q.min(n), &c2));
        let lhs = ce_d(g, &a.wedge(&b)).unwrap();
        let sign = if a.degree() % 2 == 0 { int(1) } else { int(-1) };
        let rhs = &ce_d(g, &a).unwrap().wedge(&b) + &a.wedge(&ce_d(g, &b).unwrap()).scale(&sign);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn interior_is_an_antiderivation(
        n in 2usize..6,
        p in 1usize..3,
        q in 1usize..3,
        c1 in prop::collection::vec(small(), 1..6),
        c2 in prop::collection::vec(small(), 1..6),
        v in prop::collection::vec(small(), 6),
    ) {
        let (a, b) = (random_form(n, p.min(n), &c1), random_form(n, q.min(n), &c2));
        let v = Vector(v[..n].to_vec());
        let sign = if a.degree() % 2 == 0 { int(1) } else { int(-1) };
        let lhs = a.wedge(&b).interior(&v).unwrap();
        let rhs = &a.interior(&v).unwrap().wedge(&b) + &a.wedge(&b.interior(&v).unwrap()).scale(&sign);
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.interior(&v).unwrap().interior(&v).map_or(true, |f| f.is_zero()));
    }

    #[test]
    fn jacobi_iff_d_squared(idx in 0usize..12, lower in prop::collection::vec(small(), 1..10), bump in small(), slot in 0usize..64) {
        let gs = algebras();
        let g = &gs[idx % gs.len()];
        let n = g.dim();
        prop_assume!(n >= 3);
        let h = rebased(g, &unit_lower(n, &lower));
        prop_assert!(h.jacobi_defect().is_empty());
        prop_assert!(d_squared_on_one_forms_vanishes(&h));
        let mut table = h.bracket_table().clone();
        let i = slot % (n - 1);
        let j = i + 1 + slot % (n - 1 - i);
        let mut v = table.get(&(i, j)).cloned().unwrap_or_else(|| Vector::zeros(n));
        let k = slot % n;
        v.0[k] = &v.0[k] + &bump;
        table.insert((i, j), v);
        let broken = LieAlgebra::new_unchecked(h.names().to_vec(), table).unwrap();
        prop_assert_eq!(broken.jacobi_defect().is_empty(), d_squared_on_one_forms_vanishes(&broken));
    }

    #[test]
    fn modification_laws(
        idx in 0usize..4,
        mix in prop::collection::vec(small(), 1..6),
        l1 in prop::collection::vec(small(), 1..6),
        l2 in prop::collection::vec(small(), 1..6),
    ) {
        let names = ["kodaira_primary", "kodaira_secondary", "r_times_su2", "r_times_sl2r"];
        let h = catalog_default(names[idx]).unwrap().hermitian.unwrap();
        let n = h.dim();
        let ds = compatible_derivations(&h);
        prop_assume!(!ds.is_empty());
        let mut sigma = Matrix::zeros(n, n);
        for (d, c) in ds.iter().zip(mix.iter().cycle()) {
            sigma = &sigma + &d.scale(c);
        }
        let forms = admissible_forms(h.algebra(), std::slice::from_ref(&sigma));
        let pick = |cs: &[Scalar]| -> Vec<Scalar> {
            let mut out = vec![Scalar::zero(); n];
            for (b, c) in forms.basis().iter().zip(cs.iter().cycle()) {
                for k in 0..n {
                    out[k] = &out[k] + &(&b.0[k] * c);
                }
            }
            out
        };
        let m1 = ModificationMap::single(sigma.clone(), &pick(&l1)).unwrap();
        let m2 = ModificationMap::single(sigma, &pick(&l2)).unwrap();
        prop_assert!(validate_modification(&h, &m1).pass);
        let once = modify(&h, &m1).unwrap();
        prop_assert_eq!(once.algebra().is_unimodular(), h.algebra().is_unimodular());
        prop_assert_eq!(&modify(&once, &m1.negated()).unwrap(), &h);
        let twice = modify(&once, &m2).unwrap();
        prop_assert_eq!(twice, modify(&h, &m1.sum(&m2).unwrap()).unwrap());
    }

    #[test]
    fn canonical_vaisman_lee_data(b in small(), which in 0usize..4) {
        let s = match which {
            0 => heisenberg_sasaki(1),
            1 => heisenberg_sasaki(2),
            2 => su2_sasaki(),
            _ => sl2r_sasaki(),
        };
        let h = canonical_vaisman(&s, &b).unwrap();
        let n = h.dim();
        let lck = check_lck(&h);
        prop_assert!(lck.vaisman);
        prop_assert_eq!(lck.theta.clone(), Some(KForm::dual(n, 0)));
        let (xi, _) = lee_field(&h, &KForm::dual(n, 0)).unwrap();
        let mut eta = Vector::zeros(1);
        eta.0.extend(s.eta().0.iter().cloned());
        prop_assert_eq!(xi, &Vector::basis(n, 0) + &eta.scale(&b));
        let kind = classify_vaisman(&h).unwrap().kind;
        let want = match which {
            0 => VaismanType::Heisenberg(1),
            1 => VaismanType::Heisenberg(2),
            2 => VaismanType::Su2,
            _ => VaismanType::Sl2r,
        };
        prop_assert_eq!(kind, want);
        prop_assert_eq!(centralize(&h).unwrap().algebra.center().dim(), 2);
    }

    #[test]
    fn omega_psi_positivity(a in small(), b in small(), c in small()) {
        let h = omega_psi(&a, &b, &c).unwrap();
        let d = &c * &c - &(&a * &a + &b * &b);
        let expected = c > Scalar::zero() && d > Scalar::zero();
        prop_assert_eq!(h.metric().is_positive_definite(), Some(expected));
    }

    #[test]
    fn quantization_round_trip(k in 1usize..4, scale in small()) {
        prop_assume!(!scale.is_zero());
        let base = flat_kahler(k);
        let q = quantize(&base, "Z").unwrap();
        prop_assert!(q.total.center().contains(&q.eta));
        prop_assert_eq!(q.total.is_unimodular(), base.algebra().is_unimodular());
        let back = kahler_quotient(&q.sasaki().unwrap()).unwrap();
        prop_assert_eq!(&back, &base);
        // the Reeb field scaled by a constant is no longer normalized
        let s = q.sasaki().unwrap();
        let scaled = s.with_eta(s.eta().scale(&scale)).unwrap();
        prop_assert_eq!(kahler_quotient(&scaled).is_ok(), scale.is_one());
    }
}

#[test]
fn catalog_verdicts_hold_over_parameters() {
    let p = |kv: &[(&str, Scalar)]| -> BTreeMap<String, Scalar> {
        kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    };
    for b in [int(-2), frac(1, 2), int(3)] {
        for name in ["r_times_su2", "r_times_sl2r"] {
            let e = catalog_get(name, &p(&[("b", b.clone())])).unwrap();
            assert!(vaisman_core::catalog::mismatches(&e).is_empty());
        }
    }
}

#[test]
fn non_compact_kahler_pair_has_nonzero_koszul_form() {
    let e = catalog_default("sl2r").unwrap();
    let k = e.kahler.unwrap();
    let r = vaisman_core::structures::check_kahler_algebra(&k);
    assert!(r.pass, "{r}");
    assert_eq!(r.properties["j_algebra"], "true");
    assert_ne!(r.properties["ricci_form"], "0");
}

#[test]
fn zero_metric_is_not_hermitian() {
    let g = LieAlgebra::abelian(2);
    let h = HermitianData::new(g, Matrix::zeros(2, 2), Matrix::from_ints(&[&[0, -1], &[1, 0]])).unwrap();
    assert!(!h.check().pass);
}
