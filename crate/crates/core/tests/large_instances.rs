use std::time::Instant;

use lpl_core::connectivity::LambdaPrimeOptions;
use lpl_core::group::shift_semidirect_input;
use lpl_core::verify::{build_degree_gap_cayley, build_non_optimal_cayley, check_optimality_criterion, ClaimStatus, ClaimValue};

#[test]
fn seven_fold_non_optimal_cayley() {
    let t = Instant::now();
    let out = build_non_optimal_cayley(7, &[1, 2], &LambdaPrimeOptions::transitive()).unwrap();
    assert_eq!(out.order, 896);
    assert_eq!((out.lambda, out.lambda_prime), (5, 7));
    assert!(out.report.all_hold(), "{:#?}", out.report.failures().collect::<Vec<_>>());
    eprintln!("n = 7: {:?}", t.elapsed());
}

#[test]
fn degree_gap_with_s_two() {
    let out = build_degree_gap_cayley(5, 2, &LambdaPrimeOptions::transitive()).unwrap();
    assert_eq!(out.order, 896);
    assert_eq!(out.lambda_prime, 7);
    assert!(2 * out.lambda_prime < out.order);
    assert!(out.report.all_hold());
}

#[test]
fn criterion_holds_at_order_2048() {
    let t = Instant::now();
    let input = shift_semidirect_input(8, &[1, 2]).unwrap();
    let rep = check_optimality_criterion("n=8", &input, &LambdaPrimeOptions::transitive(), 0).unwrap();
    let rec = rep.find("n=8", "optimality-criterion").unwrap();
    assert_eq!(rec.status, ClaimStatus::Holds);
    assert_eq!(rec.left, ClaimValue::Bool(true));
    eprintln!("n = 8: {:?}", t.elapsed());
}

#[test]
fn criterion_detects_non_optimality_at_order_384() {
    let input = shift_semidirect_input(6, &[1, 2]).unwrap();
    let rep = check_optimality_criterion("n=6", &input, &LambdaPrimeOptions::transitive(), 0).unwrap();
    let rec = rep.find("n=6", "optimality-criterion").unwrap();
    assert_eq!(rec.status, ClaimStatus::Holds);
    assert_eq!(rec.left, ClaimValue::Bool(false));
    assert!(rep.all_hold());
}
