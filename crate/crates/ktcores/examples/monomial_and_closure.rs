//! Monomial contractions t^q S ∩ R and the integral closure of fS ∩ R.
//! The closure admits two generator systems: a short difference list
//! when f = 1 - t, and a sum-with-monomials form for arbitrary units.
//! The oracle confirms both describe the same ideal.
//!
//! ```text
//! cargo run --example monomial_and_closure
//! ```

use ktcores::{
    integral_closure_general, integral_closure_one_minus_t, monomial_ideal, mu_at_origin_of,
    parse_poly, verify_ideal_equality, CoreAlgebra, FieldSpec, NumericalSemigroup,
};

fn main() {
    let q = FieldSpec::rationals();
    let h = NumericalSemigroup::new(&[4, 11, 13]).unwrap();
    let r = CoreAlgebra::from_semigroup(&h, q);
    println!("R = k[<4, 11, 13>], conductor {}", h.conductor());
    println!();

    let mono = monomial_ideal(&h, q, 12);
    let gens: Vec<String> = mono.generators().iter().map(|g| g.to_string()).collect();
    println!("t^12 S ∩ R = ({})", gens.join(", "));
    let exps: Vec<usize> = mono.generators().iter().map(|g| g.order().unwrap()).collect();
    let bound = 2 * r.c0() + 2;
    let mu = mu_at_origin_of(&r, &mono.phi(), mono.generators(), bound).unwrap();
    println!("mu = {mu} (one generator per exponent in {exps:?})");
    println!();

    let closure = integral_closure_one_minus_t(&h, q, 12).unwrap();
    let gens: Vec<String> = closure.generators().iter().map(|g| g.to_string()).collect();
    println!("integral closure of t^12 (1 - t) S ∩ R, difference-list form:");
    println!("  ({})", gens.join(", "));
    println!("  provenance: {}", closure.provenance());
    println!("  verdict {:?}", closure.verify(Some(60)).unwrap());
    println!();

    let f = parse_poly("1 - t", q).unwrap();
    let sum = integral_closure_general(&r, 12, &f, Some(19), Some(19)).unwrap();
    let gens: Vec<String> = sum.generators().iter().map(|g| g.to_string()).collect();
    println!("the same ideal in sum-with-monomials form:");
    println!("  ({})", gens.join(", "));
    println!("  provenance: {}", sum.provenance());
    println!("  verdict {:?}", sum.verify(Some(60)).unwrap());
    println!();

    println!("cross-check: each list verifies against the other's phi");
    let against_sum = verify_ideal_equality(&r, &sum.phi(), closure.generators(), 60);
    println!("  difference list vs phi of sum form: {:?}", against_sum.unwrap());

    let f2 = parse_poly("1 + t^2", q).unwrap();
    let general = integral_closure_general(&r, 8, &f2, None, None).unwrap();
    let gens: Vec<String> = general.generators().iter().map(|g| g.to_string()).collect();
    println!();
    println!("a non-linear unit, closure of t^8 (1 + t^2) S ∩ R:");
    println!("  ({})", gens.join(", "));
    println!("  verdict {:?}", general.verify(Some(60)).unwrap());
}
