//! Maximal ideals of rational points on a monomial curve: for alpha in
//! the ground field and a coprime pair a, b in H, the point t = alpha
//! gives M_alpha = (alpha^a - t^a, alpha^b - t^b).
//!
//! ```text
//! cargo run --example rational_points
//! ```

use ktcores::{
    mu_at_origin, parse_scalar, rational_point_ideal, CoreAlgebra, FieldSpec, NumericalSemigroup,
};

fn main() {
    let h = NumericalSemigroup::new(&[3, 5, 7]).unwrap();
    println!("H = <3, 5, 7>, coprime pair (a, b) = {:?}", h.coprime_pair());
    println!();

    for p in [2u64, 3, 5] {
        let field = FieldSpec::prime(p).unwrap();
        println!("over GF({p}):");
        for a in 1..p {
            let alpha = field.integer(a as i64);
            let point = rational_point_ideal(&h, field, &alpha).unwrap();
            let gens: Vec<String> = point.generators().iter().map(|g| g.to_string()).collect();
            println!(
                "  alpha = {a}: M = ({}), mu <= {}, verdict {:?}",
                gens.join(", "),
                point.mu_upper_bound(),
                point.verify(None).unwrap()
            );
        }
        println!();
    }

    let q = FieldSpec::rationals();
    let alpha = parse_scalar("2/3", q).unwrap();
    let point = rational_point_ideal(&h, q, &alpha).unwrap();
    let gens: Vec<String> = point.generators().iter().map(|g| g.to_string()).collect();
    println!("over Q with alpha = 2/3:");
    println!("  M = ({})", gens.join(", "));
    println!("  verdict {:?}", point.verify(None).unwrap());
    println!();

    let origin = rational_point_ideal(&h, q, &q.zero()).unwrap();
    let gens: Vec<String> = origin.generators().iter().map(|g| g.to_string()).collect();
    let r = CoreAlgebra::from_semigroup(&h, q);
    println!("alpha = 0 is the singular point; its ideal needs mu(H) generators:");
    println!("  P0 = ({})", gens.join(", "));
    println!("  mu(P0) = {} = mu(H) = {}", mu_at_origin(&r, 2 * r.c0() + 2).unwrap(), h.mu());
}
