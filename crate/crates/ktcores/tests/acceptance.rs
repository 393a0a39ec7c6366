//! End-to-end acceptance gate: each test replays one headline capability
//! with pinned inputs, asserts the exact expected values, enforces its
//! time budget, and prints one labelled pass line.

use std::time::{Duration, Instant};

use ktcores::{
    choose_b0, classify_principality, integral_closure_one_minus_t, monomial_ideal_min_gens,
    mu_at_origin, mu_at_origin_of, mu_of_s, mu_of_s_oracle, rational_point_ideal,
    spec_correspondence_check, two_generator_ideal, verify_ideal_equality, CoreAlgebra, FieldSpec,
    NumericalSemigroup, Poly, Principality, Refutation, RefutationKind, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn semigroup_ring(gens: &[usize], field: FieldSpec) -> CoreAlgebra {
    let h = NumericalSemigroup::new(gens).unwrap();
    CoreAlgebra::from_semigroup(&h, field)
}

fn assert_proven(r: &CoreAlgebra, phi: &Poly, gens: &[Poly], bound: usize) {
    let verdict = verify_ideal_equality(r, phi, gens, bound).unwrap();
    assert_eq!(verdict, Verdict::Proven, "phi = {phi}, gens = {gens:?}");
}

fn finish(criterion: usize, start: Instant, budget: Duration, what: &str) {
    let elapsed = start.elapsed();
    assert!(elapsed < budget, "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}");
    println!("criterion {criterion}: PASS ({what}, {} ms)", elapsed.as_millis());
}

#[test]
fn sextic_unit_inverse_and_pair_proven() {
    let start = Instant::now();
    let f2 = gf(2);
    let f = Poly::from_ints(f2, &[1, 0, 1, 1, 0, 1, 1]);
    let g = f.inverse_mod_power(10).unwrap();
    assert_eq!(g, Poly::from_ints(f2, &[1, 0, 1, 1, 1, 1, 1, 1]));
    let fg = f.mul(&g).unwrap();
    let mut expected = vec![0i64; 14];
    expected[0] = 1;
    expected[10] = 1;
    expected[13] = 1;
    assert_eq!(fg, Poly::from_ints(f2, &expected));

    let gens: Vec<usize> = (10..=19).collect();
    let r = semigroup_ring(&gens, f2);
    assert_proven(&r, &f, &[f.shift(10), fg], 40);
    finish(1, start, Duration::from_secs(1), "truncated inverse and pair proven over GF(2)");
}

#[test]
fn default_pair_proven_for_minimal_multiplicity_rings() {
    let start = Instant::now();
    let f = Poly::from_ints(q(), &[1, -1]);
    for c0 in [2usize, 3, 5] {
        let gens: Vec<usize> = (c0..=2 * c0 - 1).collect();
        let r = semigroup_ring(&gens, q());
        let ell = c0.max(2);
        let pres = two_generator_ideal(&r, &f, None, None).unwrap();
        let mut first = vec![0i64; c0 + 2];
        first[c0] = 1;
        first[c0 + 1] = -1;
        let mut second = vec![0i64; ell + 1];
        second[0] = 1;
        second[ell] = -1;
        assert_eq!(
            pres.generators(),
            &[Poly::from_ints(q(), &first), Poly::from_ints(q(), &second)]
        );
        assert_eq!(pres.verify(None).unwrap(), Verdict::Proven);

        let other = two_generator_ideal(&r, &f, Some(c0 + 3), Some(ell + 2)).unwrap();
        assert_ne!(other.generators(), pres.generators());
        assert_eq!(other.verify(None).unwrap(), Verdict::Proven);
    }
    finish(2, start, Duration::from_secs(2), "default and shifted pairs both proven");
}

#[test]
fn principality_dichotomy_for_the_quadratic_unit() {
    let start = Instant::now();
    let f = Poly::from_ints(q(), &[1, 0, 1]);
    let flat = semigroup_ring(&[2, 5], q());
    match classify_principality(&flat, &f).unwrap() {
        Principality::Principal(pres) => {
            assert_eq!(pres.generators(), std::slice::from_ref(&f));
            assert_eq!(pres.verify(None).unwrap(), Verdict::Proven);
        }
        other => panic!("expected a principal ideal, got {other:?}"),
    }
    let steep = semigroup_ring(&[4, 5, 6, 7], q());
    match classify_principality(&steep, &f).unwrap() {
        Principality::TwoGenerated(pres) => assert_eq!(pres.mu_upper_bound(), 2),
        other => panic!("expected two generators, got {other:?}"),
    }
    finish(
        3,
        start,
        Duration::from_secs(1),
        "principal over k[2,5], two generators over k[4,5,6,7]",
    );
}

#[test]
fn pairwise_point_presentations_are_equal() {
    let start = Instant::now();
    let r = semigroup_ring(&[3, 5, 7], q());
    let phi = Poly::from_ints(q(), &[1, -1]);
    let binomial = |n: usize| {
        let mut coeffs = vec![0i64; n + 1];
        coeffs[0] = 1;
        coeffs[n] = -1;
        Poly::from_ints(q(), &coeffs)
    };
    for (a, b) in [(3usize, 5usize), (3, 7), (5, 7)] {
        assert_proven(&r, &phi, &[binomial(a), binomial(b)], 40);
    }
    finish(4, start, Duration::from_secs(1), "three pairwise presentations all proven");
}

#[test]
fn closure_generators_proven_and_alternative_adjudicated() {
    let start = Instant::now();
    let h = NumericalSemigroup::new(&[4, 11, 13]).unwrap();
    let r = CoreAlgebra::from_semigroup(&h, q());
    let bs = monomial_ideal_min_gens(&h, 12);
    assert_eq!(bs, vec![12, 13, 15, 22]);
    assert_eq!(choose_b0(&h, &bs).unwrap(), 13);

    let closure = integral_closure_one_minus_t(&h, q(), 12).unwrap();
    let phi = Poly::from_ints(q(), &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1]);
    assert_proven(&r, &phi, closure.generators(), 60);

    let alternative = vec![
        Poly::t_power(q(), 12),
        Poly::from_ints(q(), &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1]),
        Poly::t_power(q(), 15),
        Poly::t_power(q(), 22),
    ];
    let verdict = verify_ideal_equality(&r, &phi, &alternative, 60).unwrap();
    let rendered = match &verdict {
        Verdict::Proven => "proven".to_string(),
        Verdict::Refuted(refutation) => format!("refuted ({refutation})"),
        Verdict::Inconclusive => "inconclusive".to_string(),
    };
    println!("    recorded verdict for the alternative generator list: {rendered}");
    assert_eq!(
        verdict,
        Verdict::Refuted(Refutation {
            witness: Poly::t_power(q(), 12),
            kind: RefutationKind::GeneratorNotMultiple,
        })
    );
    finish(
        5,
        start,
        Duration::from_secs(5),
        "closure proven at bound 60, alternative list adjudicated",
    );
}

#[test]
fn origin_and_module_generator_counts() {
    let start = Instant::now();
    for gens in [&[3usize, 5, 7][..], &[2, 5], &[4, 5, 6, 7], &[4, 11, 13]] {
        let h = NumericalSemigroup::new(gens).unwrap();
        let r = CoreAlgebra::from_semigroup(&h, q());
        assert_eq!(mu_at_origin(&r, 2 * r.c0() + 2).unwrap(), h.mu(), "H = {gens:?}");
    }
    for e in [2usize, 3, 4] {
        let gens: Vec<usize> = (e..=2 * e - 1).collect();
        let h = NumericalSemigroup::new(&gens).unwrap();
        let r = CoreAlgebra::from_semigroup(&h, q());
        assert_eq!(mu_of_s(&h).unwrap(), e);
        assert_eq!(mu_of_s_oracle(&r, 2 * r.c0()).unwrap(), e);
    }
    finish(6, start, Duration::from_secs(3), "origin counts match μ(H), module counts match e");
}

#[test]
fn rational_point_sweep_over_prime_fields() {
    let start = Instant::now();
    for p in [2u64, 3, 5] {
        let field = gf(p);
        for gens in [&[2usize, 3][..], &[3, 5, 7]] {
            let h = NumericalSemigroup::new(gens).unwrap();
            let r = CoreAlgebra::from_semigroup(&h, field);
            for a in 1..p {
                let alpha = field.integer(a as i64);
                let point = rational_point_ideal(&h, field, &alpha).unwrap();
                assert_eq!(point.mu_upper_bound(), 2);
                assert_eq!(point.verify(None).unwrap(), Verdict::Proven);
                let f = point.phi();
                assert!(
                    matches!(classify_principality(&r, &f).unwrap(), Principality::TwoGenerated(_)),
                    "p = {p}, H = {gens:?}, alpha = {a}"
                );
            }
            let origin = rational_point_ideal(&h, field, &field.zero()).unwrap();
            assert_eq!(origin.mu_upper_bound(), h.mu());
            let mu = mu_at_origin(&r, 2 * r.c0() + 2).unwrap();
            assert_eq!(mu, h.mu(), "p = {p}, H = {gens:?}, alpha = 0");
        }
    }
    finish(
        7,
        start,
        Duration::from_secs(5),
        "every nonzero point needs 2 generators, origin needs μ(H)",
    );
}

#[test]
fn monomial_contractions_never_drop_to_one_generator() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e32);
    for _ in 0..20 {
        let h = random_semigroup(&mut rng, 40);
        let r = CoreAlgebra::from_semigroup(&h, q());
        for qexp in 1..=h.conductor() + 20 {
            if !h.contains(qexp) {
                continue;
            }
            let bs = monomial_ideal_min_gens(&h, qexp);
            let gens: Vec<Poly> = bs.iter().map(|&b| Poly::t_power(q(), b)).collect();
            let mu = mu_at_origin_of(&r, &Poly::t_power(q(), qexp), &gens, 2 * r.c0() + 2).unwrap();
            assert_eq!(mu, bs.len(), "H = {:?}, q = {qexp}", h.generators());
            assert!(mu >= 2, "H = {:?}, q = {qexp}", h.generators());
        }
    }
    finish(8, start, Duration::from_secs(10), "μ(t^qS ∩ R) ≥ 2 across 20 random semigroups");
}

#[test]
fn property_suites_with_fixed_seeds() {
    let start = Instant::now();
    let fields = [q(), gf(2), gf(5)];

    let mut rng = ChaCha8Rng::seed_from_u64(0x91a1);
    for i in 0..200 {
        let field = fields[i % fields.len()];
        let f = random_unit_poly(&mut rng, field, 8);
        let ell = rng.gen_range(2..=12);
        let fg = f.mul(&f.inverse_mod_power(ell).unwrap()).unwrap();
        assert_eq!(fg.truncated(ell), Poly::one(field));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x91a2);
    for i in 0..50 {
        let field = fields[i % fields.len()];
        let r = if i % 2 == 0 {
            CoreAlgebra::from_semigroup(&random_semigroup(&mut rng, 20), field)
        } else {
            random_explicit_core(&mut rng, field)
        };
        let f = random_unit_poly(&mut rng, field, 2 * r.c0());
        let g = f.inverse_mod_power(2 * r.c0()).unwrap();
        assert_eq!(r.contains(&f), r.contains(&g), "f = {f}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x91a3);
    for i in 0..50 {
        let field = fields[i % fields.len()];
        let h = random_semigroup(&mut rng, 10);
        let r = CoreAlgebra::from_semigroup(&h, field);
        let f = random_unit_poly(&mut rng, field, 6);
        let c0 = r.c0();
        let c = c0.max(2) + rng.gen_range(0..=2);
        let ell = c0.max(2) + rng.gen_range(0..=2);
        let pres = two_generator_ideal(&r, &f, Some(c), Some(ell)).unwrap();
        let bound = 4 * c0 + 4 * f.degree().unwrap_or(0) + 8;
        let verdict = verify_ideal_equality(&r, &f, pres.generators(), bound).unwrap();
        assert_eq!(
            verdict,
            Verdict::Proven,
            "H = {:?}, f = {f}, c = {c}, ell = {ell}",
            h.generators()
        );
    }

    for (p, d, gens, bound) in [(2u64, 3usize, &[2usize, 3][..], 24), (3, 2, &[3, 5, 7], 30)] {
        let r = semigroup_ring(gens, gf(p));
        let report = spec_correspondence_check(&r, d, bound).unwrap();
        assert!(report.passes(), "p = {p}, degree {d}");
    }
    finish(
        9,
        start,
        Duration::from_secs(60),
        "inverse, membership, agreement, and spectrum suites",
    );
}

fn random_semigroup(rng: &mut ChaCha8Rng, max_conductor: usize) -> NumericalSemigroup {
    loop {
        let n = rng.gen_range(2..=4);
        let gens: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=25)).collect();
        let Ok(h) = NumericalSemigroup::new(&gens) else { continue };
        if h.conductor() < 2 || h.conductor() > max_conductor {
            continue;
        }
        return h;
    }
}

fn random_unit_poly(rng: &mut ChaCha8Rng, field: FieldSpec, max_deg: usize) -> Poly {
    loop {
        let deg = rng.gen_range(1..=max_deg);
        let mut coeffs = vec![0i64; deg + 1];
        coeffs[0] = 1;
        for c in coeffs.iter_mut().skip(1) {
            *c = rng.gen_range(-3..=3);
        }
        let f = Poly::from_ints(field, &coeffs);
        if f.degree() > Some(0) {
            return f;
        }
    }
}

fn random_explicit_core(rng: &mut ChaCha8Rng, field: FieldSpec) -> CoreAlgebra {
    loop {
        let c0 = rng.gen_range(2..=7);
        let n = rng.gen_range(1..=2);
        let gens: Vec<Poly> = (0..n)
            .map(|_| {
                let deg = rng.gen_range(1..=(2 * c0 - 1).max(2));
                let mut coeffs = vec![0i64; deg + 1];
                coeffs[deg] = rng.gen_range(1..=2);
                for c in coeffs.iter_mut().take(deg).skip(1) {
                    *c = rng.gen_range(-2..=2);
                }
                Poly::from_ints(field, &coeffs)
            })
            .collect();
        if gens.iter().any(|g| g.degree().unwrap_or(0) == 0) {
            continue;
        }
        return CoreAlgebra::new(field, c0, gens).unwrap();
    }
}
