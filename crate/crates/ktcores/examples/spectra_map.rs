//! The normalization map Spec S -> Spec R is a bijection on closed
//! points: distinct monic irreducibles over GF(p) contract to distinct
//! slices of R, and each slice's codimension recovers the degree of the
//! point. This example sweeps the low-degree points and prints the
//! correspondence report.
//!
//! ```text
//! cargo run --example spectra_map
//! ```

use ktcores::{
    monic_irreducibles, point_to_r, spec_correspondence_check, CoreAlgebra, FieldSpec,
    NumericalSemigroup,
};

fn main() {
    let gf2 = FieldSpec::prime(2).unwrap();
    let h = NumericalSemigroup::new(&[2, 3]).unwrap();
    let r = CoreAlgebra::from_semigroup(&h, gf2);

    println!("monic irreducibles over GF(2) of degree <= 3:");
    for point in monic_irreducibles(2, 3).unwrap() {
        println!("  deg {}: {}", point.degree(), point.pi());
    }
    println!();

    println!("contracting each point into R = k[<2, 3>]:");
    for point in monic_irreducibles(2, 3).unwrap() {
        let contracted = point_to_r(&r, &point, 20).unwrap();
        let codim = r.canonical_basis(20).dim() - contracted.slice.dim();
        print!("  pi = {}: slice codim {codim}", point.pi());
        match contracted.presentation {
            Some(pres) => {
                let gens: Vec<String> = pres.generators().iter().map(|g| g.to_string()).collect();
                println!(", presentation ({})", gens.join(", "));
            }
            None => println!(", the origin (no unit normalization)"),
        }
    }
    println!();

    for (p, gens) in [(2u64, vec![2usize, 3]), (3, vec![3, 5, 7])] {
        let field = FieldSpec::prime(p).unwrap();
        let h = NumericalSemigroup::new(&gens).unwrap();
        let r = CoreAlgebra::from_semigroup(&h, field);
        let report = spec_correspondence_check(&r, if p == 2 { 3 } else { 2 }, 30).unwrap();
        let label: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        println!(
            "GF({p}), R = k[<{}>]: {} points, {} collisions, correspondence {}",
            label.join(", "),
            report.points.len(),
            report.collisions.len(),
            if report.passes() { "holds" } else { "FAILS" }
        );
        for pr in &report.points {
            println!(
                "  pi = {} (deg {}): stabilized codim {:?}",
                pr.point.pi(),
                pr.point.degree(),
                pr.stabilized_codim
            );
        }
    }
}
