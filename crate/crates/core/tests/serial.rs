use flagj_core::algebra::{rat_frac, HLaurent, Monomial, Poly};
use flagj_core::serial::*;
use flagj_core::Error;
use proptest::prelude::*;

fn poly_strategy(nvars: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..4, nvars), -20i64..20, 1i64..7), 0..6).prop_map(move |terms| {
        Poly::from_terms(nvars, terms.into_iter().map(|(e, n, d)| (Monomial(e), rat_frac(n, d)))).unwrap()
    })
}

fn laurent_strategy(nvars: usize) -> impl Strategy<Value = HLaurent> {
    prop::collection::vec((-8i64..2, poly_strategy(nvars)), 0..5).prop_map(move |terms| {
        let mut h = HLaurent::zero(nvars);
        for (e, p) in terms {
            h.add_term(e, p);
        }
        h
    })
}

#[test]
fn wire_layout() {
    let p =
        Poly::from_terms(2, [(Monomial(vec![0, 1]), rat_frac(3, 1)), (Monomial(vec![2, 0]), rat_frac(-1, 2))]).unwrap();
    let mut h = HLaurent::zero(2);
    h.add_term(-3, p.clone());
    h.add_term(-2, Poly::one(2));
    let json = serde_json::to_string(&laurent_to_wire(&h)).unwrap();
    assert_eq!(
        json,
        r#"[{"hbar":-2,"poly":[{"exponents":[0,0],"coeff":"1/1"}]},{"hbar":-3,"poly":[{"exponents":[2,0],"coeff":"-1/2"},{"exponents":[0,1],"coeff":"3/1"}]}]"#
    );
}

#[test]
fn malformed_input() {
    let bad = vec![TermWire { exponents: vec![1], coeff: "1/0".into() }];
    assert!(matches!(poly_from_wire(1, &bad), Err(Error::Malformed(_))));
    let wrong_arity = vec![TermWire { exponents: vec![1, 2], coeff: "1".into() }];
    assert_eq!(poly_from_wire(1, &wrong_arity), Err(Error::ArityMismatch(2, 1)));
    let empty = vec![LaurentTermWire { hbar: 0, poly: vec![] }];
    assert!(laurent_from_wire(1, &empty).is_err());
}

proptest! {
    #[test]
    fn laurent_round_trip(h in laurent_strategy(3)) {
        let json = serde_json::to_string(&laurent_to_wire(&h)).unwrap();
        let back: Vec<LaurentTermWire> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(laurent_from_wire(3, &back).unwrap(), h);
    }

    #[test]
    fn poly_round_trip(p in poly_strategy(2)) {
        let json = serde_json::to_string(&poly_to_wire(&p)).unwrap();
        let back: Vec<TermWire> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(poly_from_wire(2, &back).unwrap(), p);
    }
}
