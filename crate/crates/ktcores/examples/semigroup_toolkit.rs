//! Numerical semigroup invariants: membership, conductor, Frobenius
//! number, gaps, Apéry sets, and minimal generators.
//!
//! ```text
//! cargo run --example semigroup_toolkit
//! ```

use ktcores::NumericalSemigroup;

fn main() {
    for gens in [&[2usize, 3][..], &[3, 5, 7], &[4, 11, 13], &[4, 5, 6, 7]] {
        let h = NumericalSemigroup::new(gens).expect("gcd 1");
        println!("H = <{}>", join(h.generators()));
        println!("  multiplicity:       {}", h.multiplicity());
        println!("  conductor:          {}", h.conductor());
        println!("  frobenius number:   {}", h.frobenius());
        println!("  gaps:               {}", join(h.gaps()));
        println!("  minimal generators: {}", join(h.min_generators()));
        println!("  mu(H):              {}", h.mu());
        let apery = h.apery(h.multiplicity()).expect("multiplicity is a member");
        println!("  apery set mod {}:    {}", h.multiplicity(), join(&apery));

        let probes = [1usize, 6, 12, 14, 30];
        let members: Vec<String> = probes
            .iter()
            .map(|&m| format!("{m} {}", if h.contains(m) { "in" } else { "out" }))
            .collect();
        println!("  membership:         {}", members.join(", "));
        println!();
    }

    let redundant = NumericalSemigroup::new(&[4, 6, 10, 11, 21]).expect("gcd 1");
    println!(
        "redundant input <4, 6, 10, 11, 21> minimizes to <{}>",
        join(redundant.min_generators())
    );
}

fn join(values: &[usize]) -> String {
    values.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")
}
