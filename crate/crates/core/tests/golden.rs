use apolar::binomial::{classify, cross_validate_report, normalize, Reason};
use apolar::field::FieldSpec;
use apolar::inverse::{hilbert_function, is_complete_intersection_oracle};
use apolar::parse::parse_polynomial;
use apolar::poly::Polynomial;

const Q: FieldSpec = FieldSpec::Rationals;

fn parse(src: &str) -> Polynomial {
    parse_polynomial(src, Q, None).unwrap().poly
}

#[test]
fn six_variable_ci_example() {
    let f = parse("X^3YZ^4TU^2V^6(X^2YZT^2U-V^7)");
    let nf = normalize(&f).unwrap();
    assert_eq!(nf.a, vec![3, 1, 4, 1, 2, 6]);
    assert_eq!(nf.b, vec![2, 1, 1, 2, 1, 7]);
    assert_eq!(nf.r, 5);
    let report = classify(&nf);
    assert!(report.is_ci);
    assert_eq!((report.q, report.m, report.witness_index), (Some(1), Some(1), Some(4)));
    let cv = cross_validate_report(&f).unwrap();
    assert!(cv.agrees());
    assert_eq!(cv.oracle_mu, 6);
}

#[test]
fn six_variable_hilbert_function() {
    let f = parse("X^3YZ^4TU^2V^6(X^2YZT^2U-V^7)");
    let h = hilbert_function(&f).unwrap();
    assert_eq!(h.socle_degree, 24);
    assert!(h.is_palindromic());
    assert_eq!(h.total_dimension(), 6 * 3 * 6 * 4 * 4 * 7);
    assert_eq!(h.h_vector.iter().max(), Some(&1290));
}

#[test]
fn non_ci_examples() {
    let f = parse("XYZTUV^2(XYZ-V^3)");
    let report = classify(&normalize(&f).unwrap());
    assert!(!report.is_ci);
    assert_eq!(report.reason, Reason::NoIndexSatisfiesALtQb);
    let v = is_complete_intersection_oracle(&f).unwrap();
    assert_eq!(v.mu, 9);
    assert_eq!(v.presentation.generator_degrees(), vec![2, 2, 3, 3, 3, 4, 4, 4, 6]);

    let f = parse("XYZTUV(XYZ-TV^2)");
    let report = classify(&normalize(&f).unwrap());
    assert_eq!(report.reason, Reason::RTooSmall);
    let v = is_complete_intersection_oracle(&f).unwrap();
    assert_eq!(v.mu, 15);
    let mut expected = vec![2, 3, 3, 3, 3];
    expected.extend([4; 10]);
    assert_eq!(v.presentation.generator_degrees(), expected);
}

#[test]
fn six_variable_example_has_slp() {
    use apolar::lefschetz::{check_slp, LefschetzSearchStrategy};
    let f = parse("X^3YZ^4TU^2V^6(X^2YZT^2U-V^7)");
    let r = check_slp(&f, &LefschetzSearchStrategy::default()).unwrap();
    assert_eq!(r.slp, Some(true));
    assert!(r.wlp && r.certified);
    assert_eq!(r.trials, 1);
}
