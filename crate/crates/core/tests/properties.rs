use std::collections::{BTreeSet, HashMap};

use knotrep::exactmath::Fraction;
use knotrep::linktrace::is_knot;
use knotrep::repclassify::{replay, EXCEPTIONAL};
use knotrep::slopelemma::{brute_force_solutions, enumerate_solutions, type_b_slope};
use knotrep::surfacescan::{cell_counts, classify_family, Family};
use knotrep::{
    normalize_pretzel, representativity_bounds, scan_assignments, slope_condition, PretzelTriple,
    SlopeCondition, TangleExpr, TangleType,
};
use num_integer::Integer;

type Params = (u64, u64, u64);

/// Sorted knot triples with every entry in `[-n, n]` and `|entry| >= 2`.
fn knot_multisets(n: i64) -> Vec<PretzelTriple> {
    let vals: Vec<i64> = (-n..=n).filter(|x| x.abs() >= 2).collect();
    let mut out = Vec::new();
    for (i, &p) in vals.iter().enumerate() {
        for (j, &q) in vals.iter().enumerate().skip(i) {
            for &r in &vals[j..] {
                let t = PretzelTriple::new(p, q, r);
                if is_knot(t).unwrap() {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[test]
fn closed_form_chi_and_reconstruction() {
    for t in knot_multisets(20) {
        let scan = scan_assignments(t).unwrap();
        for p in scan.patterns() {
            let neg = p.negative_slope();
            assert!(neg < 0);
            // chi = N (2/|p'| - 1)
            let closed = Fraction::from_integer(p.arcs as i64)
                .checked_mul(
                    Fraction::new(2, -neg)
                        .unwrap()
                        .checked_sub(Fraction::ONE)
                        .unwrap(),
                )
                .unwrap();
            assert_eq!(closed, Fraction::from_integer(p.chi), "{t}");
            assert_eq!(cell_counts(p).unwrap().euler(), p.chi);
            assert_eq!(p.reconstruct_triple(), scan.normalized.triple);
            assert_eq!(p.longitudes, 2 * p.arcs);
            for i in 0..3 {
                assert_eq!(p.sheets[i] * p.slopes[i].unsigned_abs(), p.arcs);
                assert_eq!(p.types[i] == TangleType::B, p.sheets[i] == 1);
            }
            assert!(p.chi <= 2 && p.chi % 2 == 0);
            if p.chi == 0 {
                assert_eq!(p.genus, 1);
            }
        }
    }
}

#[test]
fn accepted_patterns_are_exactly_the_exceptional_triples() {
    let mut accepted = BTreeSet::new();
    for t in knot_multisets(50) {
        let scan = scan_assignments(t).unwrap();
        let has_accepted = scan.patterns().any(|p| p.verdict.is_accepted());
        let normalized = normalize_pretzel(t).triple;
        assert_eq!(has_accepted, EXCEPTIONAL.contains(&normalized), "{t}");
        if has_accepted {
            accepted.insert(normalized);
        }

        for p in scan.patterns() {
            if p.chi == 0 && p.negative_slope() == -2 {
                let fam = classify_family(p);
                assert!(
                    matches!(
                        fam,
                        Some(Family::TypeOne { d: 2 }) | Some(Family::TypeTwo { k: 2, d: 1 })
                    ),
                    "{t}: {fam:?}"
                );
            }
        }
    }
    assert_eq!(
        accepted.into_iter().collect::<Vec<_>>(),
        EXCEPTIONAL.to_vec()
    );
}

#[test]
fn classification_agrees_with_surface_scan() {
    for t in knot_multisets(50) {
        let report = representativity_bounds(&TangleExpr::Pretzel(t)).unwrap();
        let accepted = report
            .surfaces
            .iter()
            .any(|row| row.verdict().is_accepted());
        assert_eq!(report.exact == Some(3), accepted, "{t}");
        assert!(report.upper >= if accepted { 3 } else { 1 });
        assert!(report.lower <= report.upper);
        assert_eq!(
            replay(&report.rules),
            (report.lower, Some(report.upper), report.exact)
        );
    }
}

#[test]
fn reports_are_mirror_and_permutation_invariant() {
    let vals: Vec<i64> = (-7..=7).filter(|x| *x != 0).collect();
    for &p in &vals {
        for &q in &vals {
            for &r in &vals {
                let t = PretzelTriple::new(p, q, r);
                let base = representativity_bounds(&TangleExpr::Pretzel(t));
                let variants = [
                    t.mirror(),
                    PretzelTriple::new(q, r, p),
                    PretzelTriple::new(r, q, p),
                ];
                for v in variants {
                    let other = representativity_bounds(&TangleExpr::Pretzel(v));
                    match (&base, &other) {
                        (Ok(a), Ok(b)) => {
                            assert_eq!(
                                (a.lower, a.upper, a.exact),
                                (b.lower, b.upper, b.exact),
                                "{t} vs {v}"
                            );
                            assert_eq!(a.normalized, b.normalized);
                            assert_eq!(a.rules.len(), b.rules.len());
                        }
                        (Err(a), Err(b)) => assert_eq!(a, b),
                        _ => panic!("{t} and {v} disagree on success"),
                    }
                }
            }
        }
    }
}

#[test]
fn lemma_enumeration_matches_brute_force_at_300() {
    let fast = enumerate_solutions(300).unwrap();
    let fast_set: BTreeSet<_> = fast.iter().map(|s| s.triple()).collect();
    let slow: BTreeSet<_> = brute_force_solutions(300).unwrap().into_iter().collect();
    assert_eq!(fast_set, slow);
    assert_eq!(fast.len(), fast_set.len());

    // Exhaustive (k,l,d) scan: each solution with a >= 2 has exactly one.
    let mut params: HashMap<Params, Vec<Params>> = HashMap::new();
    for k in 1..=300u64 {
        for l in (k + 1)..=(2 * k) {
            if k.gcd(&l) != 1 {
                continue;
            }
            for d in 1..=300u64 {
                let c = k * l * d;
                if c > 300 {
                    break;
                }
                let key = (k * (l - k) * d, l * (l - k) * d, c);
                params.entry(key).or_default().push((k, l, d));
            }
        }
    }
    for (a, b, c) in &slow {
        if *a >= 2 {
            assert_eq!(
                params.get(&(*a, *b, *c)).map(Vec::len),
                Some(1),
                "{a} {b} {c}"
            );
        }
    }
    for s in &fast {
        assert_eq!(params[&s.triple()], vec![(s.k, s.l, s.d)]);
    }
}

#[test]
fn type_b_boundary_slope_is_condition_one() {
    for m in 1..=1000 {
        let s = type_b_slope(m).unwrap();
        assert_eq!(s.numer(), 1);
        assert_eq!(slope_condition(m, s), SlopeCondition::ConditionI);
    }
}
