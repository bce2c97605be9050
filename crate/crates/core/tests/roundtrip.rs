use knotrep::exactmath::Fraction;
use knotrep::{parse_expr, print_expr, PretzelTriple, TangleExpr};
use proptest::prelude::*;

fn slope() -> impl Strategy<Value = Fraction> {
    (-60i64..=60, 1i64..=60).prop_map(|(n, d)| Fraction::new(n, d).unwrap())
}

fn tangle() -> impl Strategy<Value = TangleExpr> {
    let leaf = prop_oneof![
        slope().prop_map(TangleExpr::Rational),
        (-20i64..=20, -20i64..=20, -20i64..=20)
            .prop_map(|(p, q, r)| TangleExpr::Pretzel(PretzelTriple::new(p, q, r))),
        prop::collection::vec(slope(), 1..5).prop_map(TangleExpr::Montesinos),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| TangleExpr::sum(l, r))
    })
}

fn expr() -> impl Strategy<Value = TangleExpr> {
    prop_oneof![tangle(), tangle().prop_map(TangleExpr::closure)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        prop_assert!(e.is_well_formed());
        let text = print_expr(&e);
        prop_assert_eq!(parse_expr(&text).unwrap(), e);
    }

    #[test]
    fn whitespace_is_ignored(e in expr()) {
        let mut spaced = String::from("\t");
        for c in print_expr(&e).chars() {
            if "(),/+".contains(c) {
                spaced.push_str(&format!("  {c}\n"));
            } else {
                spaced.push(c);
            }
        }
        prop_assert_eq!(parse_expr(&spaced).unwrap(), e);
    }
}
