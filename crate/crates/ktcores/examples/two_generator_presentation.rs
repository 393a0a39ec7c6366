//! The central construction: for a unit polynomial f, the contraction
//! fS ∩ R is generated by the two elements t^c·f and f·g, with g a
//! truncated inverse of f. The oracle then certifies the equality.
//!
//! ```text
//! cargo run --example two_generator_presentation
//! ```

use ktcores::{parse_poly, two_generator_ideal, CoreAlgebra, FieldSpec, NumericalSemigroup};

fn main() {
    let gf2 = FieldSpec::prime(2).unwrap();
    let h = NumericalSemigroup::new(&(10..=19).collect::<Vec<_>>()).unwrap();
    let r = CoreAlgebra::from_semigroup(&h, gf2);
    let f = parse_poly("1 + t^2 + t^3 + t^5 + t^6", gf2).unwrap();

    println!("R = k[H] over GF(2) with H = <10, ..., 19>, c0 = {}", r.c0());
    println!("f = {f}");
    let g = f.inverse_mod_power(10).unwrap();
    println!("g = {g} (inverse of f mod t^10)");
    println!("f*g = {}", f.mul(&g).unwrap());
    println!();

    let pres = two_generator_ideal(&r, &f, None, None).unwrap();
    print_and_verify(&pres);

    let shifted = two_generator_ideal(&r, &f, Some(14), Some(12)).unwrap();
    println!("the same ideal with c = 14, ell = 12:");
    print_and_verify(&shifted);

    let q = FieldSpec::rationals();
    let r = CoreAlgebra::from_semigroup(&NumericalSemigroup::new(&[3, 5, 7]).unwrap(), q);
    let f = parse_poly("1 - 2*t + 1/3*t^2", q).unwrap();
    println!("rational coefficients work the same way, R = k[<3, 5, 7>]:");
    print_and_verify(&two_generator_ideal(&r, &f, None, None).unwrap());
}

fn print_and_verify(pres: &ktcores::IdealPresentation) {
    let gens: Vec<String> = pres.generators().iter().map(|g| g.to_string()).collect();
    println!("I = ({})", gens.join(", "));
    println!("provenance: {}", pres.provenance());
    println!("oracle verdict: {:?}", pres.verify(None).unwrap());
    println!();
}
