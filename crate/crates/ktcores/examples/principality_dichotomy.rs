//! Whether fS ∩ R needs one generator or two depends on the ring, not
//! just on f: the same quadratic unit is principal in one semigroup
//! ring and two-generated in another.
//!
//! ```text
//! cargo run --example principality_dichotomy
//! ```

use ktcores::{
    classify_principality, parse_poly, CoreAlgebra, FieldSpec, NumericalSemigroup, Principality,
};

fn main() {
    let q = FieldSpec::rationals();
    let f = parse_poly("1 + t^2", q).unwrap();

    for gens in [vec![2, 5], vec![4, 5, 6, 7]] {
        let h = NumericalSemigroup::new(&gens).unwrap();
        let r = CoreAlgebra::from_semigroup(&h, q);
        let label: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        println!("R = k[<{}>], f = {f}", label.join(", "));
        match classify_principality(&r, &f).unwrap() {
            Principality::Principal(pres) => {
                println!("  principal: I = ({})R, so f itself lies in R", pres.generators()[0]);
            }
            Principality::TwoGenerated(pres) => {
                let gs: Vec<String> = pres.generators().iter().map(|g| g.to_string()).collect();
                println!("  two-generated: I = ({})", gs.join(", "));
                println!("  oracle verdict: {:?}", pres.verify(None).unwrap());
            }
        }
        println!();
    }

    println!("a one-parameter family over k[<2, 5>]: f = 1 + a*t + t^2");
    for a in 0..4 {
        let f = parse_poly(&format!("1 + {a}*t + t^2"), q).unwrap();
        let h = NumericalSemigroup::new(&[2, 5]).unwrap();
        let r = CoreAlgebra::from_semigroup(&h, q);
        let verdict = match classify_principality(&r, &f).unwrap() {
            Principality::Principal(_) => "principal",
            Principality::TwoGenerated(_) => "two-generated",
        };
        println!("  a = {a}: {verdict}");
    }
}
