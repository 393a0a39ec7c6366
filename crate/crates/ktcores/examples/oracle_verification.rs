//! A tour of the verification oracle: every claimed equality
//! (g_1, ..., g_n) = phi·S ∩ R is checked independently of how the
//! generators were produced, and each possible verdict is demonstrated
//! here, including the three refutation kinds and the inconclusive case.
//!
//! ```text
//! cargo run --example oracle_verification
//! ```

use ktcores::{
    default_verify_bound, ideal_span, intersection_phi_s_r, parse_poly, verify_ideal_equality,
    CoreAlgebra, FieldSpec, NumericalSemigroup, Verdict,
};

fn main() {
    let q = FieldSpec::rationals();
    let h = NumericalSemigroup::new(&[3, 5, 7]).unwrap();
    let r = CoreAlgebra::from_semigroup(&h, q);
    let phi = parse_poly("1 - t", q).unwrap();

    let good = [parse_poly("t^5 - t^6", q).unwrap(), parse_poly("1 - t^5", q).unwrap()];
    let bound = default_verify_bound(&r, &phi, &good);
    println!("R = k[<3, 5, 7>], phi = {phi}");
    println!("claim: (t^5 - t^6, 1 - t^5) = phi S ∩ R");
    println!("chosen degree bound: {bound}");
    match verify_ideal_equality(&r, &phi, &good, bound).unwrap() {
        Verdict::Proven => println!("verdict: Proven"),
        other => println!("verdict: {other:?}"),
    }
    println!();

    println!("three ways a claim can fail, each with a concrete witness:");
    let cases: [(&str, Vec<&str>); 3] = [
        ("a generator phi does not divide", vec!["t^5 - t^6", "1 + t^5"]),
        ("a generator outside R", vec!["t - t^2", "1 - t^5"]),
        ("a list too small to reach the contraction", vec!["t^5 - t^6"]),
    ];
    for (label, strs) in cases {
        let gens: Vec<_> = strs.iter().map(|s| parse_poly(s, q).unwrap()).collect();
        match verify_ideal_equality(&r, &phi, &gens, 60).unwrap() {
            Verdict::Refuted(refutation) => println!("  {label}: refuted, {refutation}"),
            other => println!("  {label}: {other:?}"),
        }
    }
    println!();

    let lone = [parse_poly("t^5 - t^6", q).unwrap()];
    let verdict = verify_ideal_equality(&r, &phi, &lone, 9).unwrap();
    println!("the same short list at a bound too small to separate: {verdict:?}");
    println!("(raise the bound and the oracle finds the missing element instead)");
    println!();

    println!("the certificates are echelon bases of truncated subspaces:");
    let slice = intersection_phi_s_r(&r, &phi, 20);
    let span = ideal_span(&r, &good, 20).unwrap();
    println!("  (phi S ∩ R)_<=20: dim {}, pivots {:?}", slice.dim(), slice.pivots());
    println!("  ideal span_<=20:  dim {}, pivots {:?}", span.dim(), span.pivots());
    let probe = parse_poly("1 - t^7", q).unwrap();
    println!("  slice contains {probe}: {}", slice.contains(&probe));
}
