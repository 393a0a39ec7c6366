//! Core algebras beyond semigroup rings: canonical degree-echelon bases,
//! exact membership by subduction, and the monomiality test.
//!
//! ```text
//! cargo run --example membership_and_basis
//! ```

use ktcores::{parse_poly, CoreAlgebra, FieldSpec, NumericalSemigroup, Poly};

fn main() {
    let q = FieldSpec::rationals();

    let cusp = CoreAlgebra::new(q, 4, vec![parse_poly("t^2 + t^3", q).unwrap()]).unwrap();
    println!("R = k[t^2 + t^3] + t^4*k[t], c0 = {}", cusp.c0());
    let basis = cusp.canonical_basis(8);
    println!("basis up to degree 8:");
    for d in basis.keys() {
        println!("  {d}: {}", basis.element(d).unwrap());
    }
    println!("semigroup ring: {}", cusp.is_semigroup_ring());
    println!();

    for text in ["t^2 + t^3", "t^2", "t^3", "t^4", "t^4 + 7*t^5", "1 + t^2 + t^3"] {
        let f = parse_poly(text, q).unwrap();
        let side = if cusp.contains(&f) { "in R" } else { "not in R" };
        println!("  {text:>16}  {side}");
    }
    println!();

    let h = NumericalSemigroup::new(&[2, 5]).unwrap();
    let r = CoreAlgebra::from_semigroup(&h, q);
    println!("k[H] for H = <2, 5> is a semigroup ring: {}", r.is_semigroup_ring());

    let f = parse_poly("1 + t^2 + t^4", q).unwrap();
    let g = f.inverse_mod_power(2 * r.c0()).unwrap();
    println!("f = {f}");
    println!("truncated inverse g = {g}");
    println!(
        "f*g = 1 mod t^{}: {}",
        2 * r.c0(),
        f.mul(&g).unwrap().truncated(2 * r.c0()) == Poly::one(q)
    );
    println!("f in R: {}, g in R: {} (always equal)", r.contains(&f), r.contains(&g));
}
