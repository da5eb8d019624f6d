use std::collections::BTreeMap;

use proptest::prelude::*;

use vaisman_cli::format::{export_entry, parse, serialize};
use vaisman_core::catalog::catalog_get;
use vaisman_core::scalar::{frac, Scalar};

fn rational() -> impl Strategy<Value = Scalar> {
    (-50i64..=50, 1i64..=12).prop_map(|(p, q)| frac(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn omega_psi_exports_round_trip(a in rational(), b in rational(), c in rational()) {
        let p = BTreeMap::from([("a".to_string(), a), ("b".to_string(), b), ("c".to_string(), c)]);
        let b = export_entry(&catalog_get("omega_psi", &p).unwrap());
        let text = serialize(&b);
        let back = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert_eq!(back, b);
    }

    #[test]
    fn canonical_vaisman_exports_round_trip(b in rational(), which in 0usize..3) {
        let name = ["r_times_heisenberg", "r_times_su2", "r_times_sl2r"][which];
        let p = BTreeMap::from([("b".to_string(), b)]);
        let e = catalog_get(name, &p).unwrap();
        let back = parse(&serialize(&export_entry(&e))).unwrap();
        prop_assert_eq!(&back.algebra, &e.algebra);
        prop_assert_eq!(back.metric.as_ref(), Some(e.hermitian.as_ref().unwrap().metric()));
    }
}
