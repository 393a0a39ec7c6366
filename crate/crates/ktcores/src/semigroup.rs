//! Numerical semigroups: cofinite additive submonoids of the naturals.
//!
//! A numerical semigroup H is given by generators with gcd 1. All
//! invariants (conductor, gaps, minimal generators) are computed eagerly
//! at construction from a boolean membership table, so a built value is
//! immutable and cheap to query.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<usize>,
    conductor: usize,
    gaps: Vec<usize>,
    min_generators: Vec<usize>,
    /// Exact membership for 0..conductor; everything above is a member.
    members: Vec<bool>,
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`; order and duplicates are
    /// irrelevant.
    pub fn new(gens: &[usize]) -> Result<NumericalSemigroup> {
        let g = gens.iter().fold(0, |acc, &n| gcd(acc, n));
        if g != 1 {
            let mut shown = gens.to_vec();
            shown.sort_unstable();
            return Err(Error::GcdNotOne(shown));
        }
        let mut generators: Vec<usize> = gens.iter().copied().filter(|&n| n > 0).collect();
        generators.sort_unstable();
        generators.dedup();

        let e = generators[0];
        let max_gen = *generators.last().unwrap();
        // Grow the table until the last gap is followed by e consecutive
        // members; from there on everything is reachable by adding e.
        let mut bound = (2 * max_gen).max(16);
        let (members, conductor) = loop {
            let mut table = vec![false; bound + 1];
            table[0] = true;
            for n in 1..=bound {
                table[n] = generators.iter().any(|&g| g <= n && table[n - g]);
            }
            match table.iter().rposition(|&m| !m) {
                None => break (table, 0),
                Some(f) if f + e <= bound => break (table, f + 1),
                Some(_) => bound *= 2,
            }
        };

        let gaps: Vec<usize> = (1..conductor).filter(|&n| !members[n]).collect();
        let mut sgp =
            NumericalSemigroup { generators, conductor, gaps, min_generators: Vec::new(), members };
        sgp.min_generators = sgp.compute_min_generators();
        Ok(sgp)
    }

    /// A member is minimal when it is not the sum of two nonzero members.
    /// Nothing past conductor + multiplicity can be minimal.
    fn compute_min_generators(&self) -> Vec<usize> {
        let e = self.multiplicity();
        (1..=self.conductor + e)
            .filter(|&n| {
                self.contains(n)
                    && !(1..n).any(|a| 2 * a <= n && self.contains(a) && self.contains(n - a))
            })
            .collect()
    }

    /// The sorted, deduplicated generators as given.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, m: usize) -> bool {
        m >= self.conductor || self.members[m]
    }

    /// Least n with every integer ≥ n a member (0 for the full naturals).
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// Largest non-member, or -1 when there is none.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    /// The non-members, ascending.
    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> usize {
        self.generators[0]
    }

    /// The unique minimal generating set, ascending.
    pub fn min_generators(&self) -> &[usize] {
        &self.min_generators
    }

    /// Size of the minimal generating set.
    pub fn mu(&self) -> usize {
        self.min_generators.len()
    }

    /// The m smallest members in each residue class mod m, ascending.
    /// `m` must be a positive member.
    pub fn apery(&self, m: usize) -> Result<Vec<usize>> {
        if m == 0 || !self.contains(m) {
            return Err(Error::NotInSemigroup(m));
        }
        let mut set: Vec<usize> = (0..m)
            .map(|r| {
                (0..)
                    .map(|k| r + k * m)
                    .find(|&n| self.contains(n))
                    .expect("every residue class meets a cofinite set")
            })
            .collect();
        set.sort_unstable();
        Ok(set)
    }

    /// Lexicographically smallest (a, b) with a < b, both nonzero members,
    /// and gcd(a, b) = 1.
    pub fn coprime_pair(&self) -> (usize, usize) {
        let e = self.multiplicity();
        let b = (e + 1..)
            .find(|&b| self.contains(b) && gcd(e, b) == 1)
            .expect("members coprime to the multiplicity are cofinal");
        (e, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sgp(gens: &[usize]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn construction_validates_gcd() {
        assert_eq!(NumericalSemigroup::new(&[2, 4]), Err(Error::GcdNotOne(vec![2, 4])));
        assert_eq!(NumericalSemigroup::new(&[]), Err(Error::GcdNotOne(vec![])));
        assert!(NumericalSemigroup::new(&[4, 11, 13]).is_ok());
        assert_eq!(sgp(&[5, 3, 3, 7]).generators(), &[3, 5, 7]);
    }

    #[test]
    fn full_naturals() {
        let n = sgp(&[1]);
        assert_eq!(n.conductor(), 0);
        assert_eq!(n.frobenius(), -1);
        assert!(n.gaps().is_empty());
        assert_eq!(n.min_generators(), &[1]);
        assert_eq!(n.apery(1).unwrap(), vec![0]);
        assert_eq!(n.coprime_pair(), (1, 2));
    }

    #[test]
    fn four_eleven_thirteen_invariants() {
        let h = sgp(&[4, 11, 13]);
        assert_eq!(h.conductor(), 19);
        assert_eq!(h.frobenius(), 18);
        assert_eq!(h.gaps(), &[1, 2, 3, 5, 6, 7, 9, 10, 14, 18]);
        assert_eq!(h.multiplicity(), 4);
        assert_eq!(h.min_generators(), &[4, 11, 13]);
        assert!(h.contains(15));
        assert!(!h.contains(18));
        assert!(h.contains(0));
        assert_eq!(h.coprime_pair(), (4, 11));
    }

    #[test]
    fn small_conductors() {
        assert_eq!(sgp(&[2, 5]).conductor(), 4);
        assert_eq!(sgp(&[5, 6, 7, 8, 9]).conductor(), 5);
        assert_eq!(sgp(&[3, 5, 7]).conductor(), 5);
    }

    #[test]
    fn minimal_generators_drop_redundancy() {
        assert_eq!(sgp(&[2, 4, 5]).min_generators(), &[2, 5]);
        assert_eq!(sgp(&[4, 5, 6, 7]).min_generators(), &[4, 5, 6, 7]);
        assert_eq!(sgp(&[4, 5, 6, 7]).mu(), 4);
        assert_eq!(sgp(&[3, 5, 7]).mu(), 3);
    }

    #[test]
    fn apery_sets() {
        assert_eq!(sgp(&[3, 5, 7]).apery(3).unwrap(), vec![0, 5, 7]);
        assert_eq!(sgp(&[2, 5]).apery(2).unwrap(), vec![0, 5]);
        assert_eq!(sgp(&[4, 11, 13]).apery(4).unwrap(), vec![0, 11, 13, 22]);
        assert_eq!(sgp(&[4, 11, 13]).apery(18), Err(Error::NotInSemigroup(18)));
        assert_eq!(sgp(&[2, 5]).apery(0), Err(Error::NotInSemigroup(0)));
    }

    fn random_semigroup(rng: &mut ChaCha8Rng) -> NumericalSemigroup {
        loop {
            let count = rng.gen_range(1..=5);
            let gens: Vec<usize> = (0..count).map(|_| rng.gen_range(2..=40)).collect();
            if let Ok(h) = NumericalSemigroup::new(&gens) {
                return h;
            }
        }
    }

    #[test]
    fn conductor_is_exact_on_random_family() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5e11);
        for _ in 0..60 {
            let h = random_semigroup(&mut rng);
            let c = h.conductor();
            for m in c..=c + 100 {
                assert!(h.contains(m), "{m} missing past conductor {c}");
            }
            if c > 0 {
                assert!(!h.contains(c - 1), "conductor {c} is not tight");
            }
        }
    }

    #[test]
    fn minimal_generators_regenerate_the_semigroup() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x9e4);
        for _ in 0..40 {
            let h = random_semigroup(&mut rng);
            let again = sgp(h.min_generators());
            assert_eq!(again.conductor(), h.conductor());
            assert_eq!(again.gaps(), h.gaps());
            assert_eq!(again.min_generators(), h.min_generators());
        }
    }

    #[test]
    fn apery_properties_on_random_family() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xa9e);
        for _ in 0..40 {
            let h = random_semigroup(&mut rng);
            let m = h.min_generators()[rng.gen_range(0..h.mu())];
            let ap = h.apery(m).unwrap();
            assert_eq!(ap.len(), m);
            let mut residues: Vec<usize> = ap.iter().map(|w| w % m).collect();
            residues.sort_unstable();
            assert_eq!(residues, (0..m).collect::<Vec<_>>());
            for &w in &ap {
                assert!(h.contains(w));
                assert!(w < m || !h.contains(w - m), "{w} is not minimal in its class");
            }
        }
    }

    #[test]
    fn coprime_pair_is_lex_minimal() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
        for _ in 0..40 {
            let h = random_semigroup(&mut rng);
            let (a, b) = h.coprime_pair();
            assert!(a < b && gcd(a, b) == 1);
            assert!(h.contains(a) && h.contains(b) && a > 0);
            // Exhaustive lex check inside a window that must contain the
            // optimum.
            let bound = h.conductor() + 2 * h.multiplicity() + 2;
            let brute = (1..=bound)
                .flat_map(|x| (x + 1..=bound).map(move |y| (x, y)))
                .find(|&(x, y)| h.contains(x) && h.contains(y) && gcd(x, y) == 1)
                .unwrap();
            assert_eq!((a, b), brute);
        }
    }
}
