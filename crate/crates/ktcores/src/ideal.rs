//! Closed-form generator constructions: the two-generator presentation
//! of fS ∩ R, principality classification, rational-point maximal
//! ideals, minimal monomial generators of t^qS ∩ R, and the integral
//! closure formulas that combine them.
//!
//! Every constructor returns an [`IdealPresentation`] tagged with its
//! provenance, and every presentation can be replayed through the
//! oracle via [`IdealPresentation::verify`]. The constructions and the
//! oracle share no generator logic, so agreement between them is a
//! genuine cross-check.

use crate::corealg::CoreAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::oracle::{default_verify_bound, verify_ideal_equality, Verdict};
use crate::poly::Poly;
use crate::semigroup::{gcd, NumericalSemigroup};

/// A finitely generated ideal of a core R together with the recipe that
/// produced its generators.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    ambient: CoreAlgebra,
    gens: Vec<Poly>,
    provenance: Provenance,
}

/// The construction an [`IdealPresentation`] came from.
#[derive(Clone, Debug)]
pub enum Provenance {
    TwoGenerator { f: Poly, c: usize, ell: usize },
    Principal { f: Poly },
    RationalPoint { alpha: Scalar, pair: Option<(usize, usize)> },
    Monomial { q: usize },
    Closure { q: usize, f: Poly, variant: ClosureVariant },
}

/// Which of the closure formulas produced the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureVariant {
    /// q ≥ c0: the closure is φS, listed by module generators of S.
    ModuleGenerators,
    /// c ≥ q: the sum (t^c f) + fg·(t^qS ∩ R).
    SumWithMonomials,
    /// The n-element difference list built from a coprime exponent b0.
    DifferenceList,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::TwoGenerator { f, c, ell } => {
                write!(out, "two-generator(f = {f}, c = {c}, ell = {ell})")
            }
            Provenance::Principal { f } => write!(out, "principal(f = {f})"),
            Provenance::RationalPoint { alpha, pair: Some((a, b)) } => {
                write!(out, "rational-point(alpha = {alpha}, a = {a}, b = {b})")
            }
            Provenance::RationalPoint { alpha, pair: None } => {
                write!(out, "rational-point(alpha = {alpha}, origin)")
            }
            Provenance::Monomial { q } => write!(out, "monomial(q = {q})"),
            Provenance::Closure { q, f, variant } => {
                let name = match variant {
                    ClosureVariant::ModuleGenerators => "module-generators",
                    ClosureVariant::SumWithMonomials => "sum-with-monomials",
                    ClosureVariant::DifferenceList => "difference-list",
                };
                write!(out, "closure(q = {q}, f = {f}, {name})")
            }
        }
    }
}

impl IdealPresentation {
    fn new(ambient: CoreAlgebra, gens: Vec<Poly>, provenance: Provenance) -> IdealPresentation {
        assert!(!gens.is_empty(), "presentations carry at least one generator");
        for g in &gens {
            assert!(!g.is_zero(), "zero generator");
            assert!(ambient.contains(g), "generator {g} escapes the ring");
        }
        IdealPresentation { ambient, gens, provenance }
    }

    pub fn ambient(&self) -> &CoreAlgebra {
        &self.ambient
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Number of generators, which bounds μ_R of the ideal from above.
    pub fn mu_upper_bound(&self) -> usize {
        self.gens.len()
    }

    /// The polynomial φ for which this presentation claims to generate
    /// φS ∩ R (for principal presentations, fR = fS ∩ R).
    pub fn phi(&self) -> Poly {
        let field = self.ambient.field();
        match &self.provenance {
            Provenance::TwoGenerator { f, .. } | Provenance::Principal { f } => f.clone(),
            Provenance::RationalPoint { alpha, pair: Some(_) } => {
                let inv = field.inv(alpha).expect("nonzero alpha");
                let minus = field.neg(&inv).expect("same field");
                Poly::from_coeffs(field, vec![field.one(), minus]).expect("unit poly")
            }
            Provenance::RationalPoint { pair: None, .. } => Poly::t_power(field, 1),
            Provenance::Monomial { q } => Poly::t_power(field, *q),
            Provenance::Closure { q, f, .. } => f.shift(*q),
        }
    }

    /// Replays the presentation through the truncation oracle, deciding
    /// whether the generators really produce φS ∩ R. With no explicit
    /// bound, a bound sufficient for every built-in construction is used.
    pub fn verify(&self, bound: Option<usize>) -> Result<Verdict> {
        let phi = self.phi();
        let bound = bound.unwrap_or_else(|| default_verify_bound(&self.ambient, &phi, &self.gens));
        verify_ideal_equality(&self.ambient, &phi, &self.gens, bound)
    }
}

fn require_unit_constant(f: &Poly) -> Result<()> {
    if f.field().is_one(&f.coeff(0)) {
        Ok(())
    } else {
        Err(Error::BadConstantTerm)
    }
}

/// The presentation fS ∩ R = (t^c·f, f·g) with g the inverse of f mod
/// t^ell. Omitted c and ell default to max(2, c0).
///
/// Requires f(0) = 1, c ≥ c0, and ell ≥ max(2, c0). The product f·g is
/// congruent to 1 mod t^ell with ell ≥ c0, so both generators lie in R.
pub fn two_generator_ideal(
    r: &CoreAlgebra,
    f: &Poly,
    c: Option<usize>,
    ell: Option<usize>,
) -> Result<IdealPresentation> {
    require_unit_constant(f)?;
    let c0 = r.c0();
    let c = c.unwrap_or(c0.max(2));
    let ell = ell.unwrap_or(c0.max(2));
    if c < c0 {
        return Err(Error::BoundTooSmall { required: c0, got: c });
    }
    if ell < c0.max(2) {
        return Err(Error::BoundTooSmall { required: c0.max(2), got: ell });
    }
    let g = f.inverse_mod_power(ell)?;
    let fg = f.mul(&g)?;
    assert!(r.contains(&fg), "f*g is 1 mod t^ell with ell >= c0");
    let gens = vec![f.shift(c), fg];
    let provenance = Provenance::TwoGenerator { f: f.clone(), c, ell };
    Ok(IdealPresentation::new(r.clone(), gens, provenance))
}

/// Whether fS ∩ R is principal, together with a presentation either way.
#[derive(Clone, Debug)]
pub enum Principality {
    Principal(IdealPresentation),
    TwoGenerated(IdealPresentation),
}

impl Principality {
    pub fn presentation(&self) -> &IdealPresentation {
        match self {
            Principality::Principal(p) | Principality::TwoGenerated(p) => p,
        }
    }

    /// Exact minimal number of generators: 1 iff f ∈ R, else 2.
    pub fn mu(&self) -> usize {
        match self {
            Principality::Principal(_) => 1,
            Principality::TwoGenerated(_) => 2,
        }
    }
}

/// Decides whether fS ∩ R is a principal ideal of R. It is if and only
/// if f ∈ R, in which case fS ∩ R = fR; otherwise the two-generator
/// presentation with default bounds is returned and μ is exactly 2.
pub fn classify_principality(r: &CoreAlgebra, f: &Poly) -> Result<Principality> {
    require_unit_constant(f)?;
    if r.contains(f) {
        let provenance = Provenance::Principal { f: f.clone() };
        let pres = IdealPresentation::new(r.clone(), vec![f.clone()], provenance);
        Ok(Principality::Principal(pres))
    } else {
        let pres = two_generator_ideal(r, f, None, None)?;
        Ok(Principality::TwoGenerated(pres))
    }
}

/// The maximal ideal of k[H] at the rational point t = α.
///
/// For α ≠ 0 this is the two-element presentation (α^a − t^a, α^b − t^b)
/// with (a, b) the canonical coprime pair of H; for α = 0 it is the
/// origin ideal P0 listed by the minimal monomial generators of H.
pub fn rational_point_ideal(
    h: &NumericalSemigroup,
    field: FieldSpec,
    alpha: &Scalar,
) -> Result<IdealPresentation> {
    let r = CoreAlgebra::from_semigroup(h, field);
    if field.is_zero(alpha) {
        let gens: Vec<Poly> = h.min_generators().iter().map(|&a| Poly::t_power(field, a)).collect();
        let provenance = Provenance::RationalPoint { alpha: alpha.clone(), pair: None };
        return Ok(IdealPresentation::new(r, gens, provenance));
    }
    let (a, b) = h.coprime_pair();
    let binomial = |n: usize| -> Result<Poly> {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[0] = field.pow(alpha, n as u64)?;
        coeffs[n] = field.neg(&field.one())?;
        Poly::from_coeffs(field, coeffs)
    };
    let gens = vec![binomial(a)?, binomial(b)?];
    let provenance = Provenance::RationalPoint { alpha: alpha.clone(), pair: Some((a, b)) };
    Ok(IdealPresentation::new(r, gens, provenance))
}

/// Exponents of the minimal monomial generators of t^qS ∩ k[H]: the
/// elements h ∈ H with h ≥ q such that h − h′ ∉ H for every other
/// listed h′. For q ∈ H ∪ {0} these generate t^qS ∩ R exactly.
pub fn monomial_ideal_min_gens(h: &NumericalSemigroup, q: usize) -> Vec<usize> {
    let stop = q.max(h.conductor()) + h.conductor();
    let mut minimal: Vec<usize> = Vec::new();
    for m in q..=stop {
        if !h.contains(m) {
            continue;
        }
        if minimal.iter().any(|&b| h.contains(m - b)) {
            continue;
        }
        minimal.push(m);
    }
    minimal
}

/// The ideal t^qS ∩ k[H] presented by its minimal monomial generators.
pub fn monomial_ideal(h: &NumericalSemigroup, field: FieldSpec, q: usize) -> IdealPresentation {
    let r = CoreAlgebra::from_semigroup(h, field);
    let gens: Vec<Poly> =
        monomial_ideal_min_gens(h, q).iter().map(|&b| Poly::t_power(field, b)).collect();
    IdealPresentation::new(r, gens, Provenance::Monomial { q })
}

/// Minimal number of generators of S = k[t] as a module over k[H]: the
/// multiplicity e of H. Requires 1 ∉ H; for H = ℕ the module is free
/// and the question is trivial.
pub fn mu_of_s(h: &NumericalSemigroup) -> Result<usize> {
    if h.contains(1) {
        return Err(Error::TrivialCore);
    }
    Ok(h.multiplicity())
}

/// Integral closure of an ideal I of k[H] with IS = t^q·f·S, by the
/// closed formulas: for q ≥ c0 the closure is φS, listed through the e
/// monomial module generators of S; for 0 < q < c0 it is the sum
/// (t^c f) + fg·(t^qS ∩ R); q = 0 reduces to the two-generator
/// presentation of fS ∩ R. Requires a semigroup-ring core, f(0) = 1,
/// c ≥ max(c0, q), and ell ≥ max(2, c0); omitted bounds take the
/// smallest admissible value.
pub fn integral_closure_general(
    r: &CoreAlgebra,
    q: usize,
    f: &Poly,
    c: Option<usize>,
    ell: Option<usize>,
) -> Result<IdealPresentation> {
    let Some(h) = r.semigroup() else {
        return Err(Error::NonMonomialCore);
    };
    require_unit_constant(f)?;
    if q == 0 {
        return two_generator_ideal(r, f, c, ell);
    }
    let c0 = r.c0();
    let c = c.unwrap_or(c0.max(2).max(q));
    let ell = ell.unwrap_or(c0.max(2));
    if c < c0.max(q) {
        return Err(Error::BoundTooSmall { required: c0.max(q), got: c });
    }
    if ell < c0.max(2) {
        return Err(Error::BoundTooSmall { required: c0.max(2), got: ell });
    }

    let gens = if q >= c0 {
        let phi = f.shift(q);
        (0..h.multiplicity()).map(|j| phi.shift(j)).collect()
    } else {
        let g = f.inverse_mod_power(ell)?;
        let fg = f.mul(&g)?;
        let mut gens = vec![f.shift(c)];
        gens.extend(monomial_ideal_min_gens(h, q).iter().map(|&b| fg.shift(b)));
        gens
    };
    let variant =
        if q >= c0 { ClosureVariant::ModuleGenerators } else { ClosureVariant::SumWithMonomials };
    let provenance = Provenance::Closure { q, f: f.clone(), variant };
    Ok(IdealPresentation::new(r.clone(), gens, provenance))
}

/// The smallest exponent b in ⋃_{i≥2}(b_i + H) with gcd(b_1, b) = 1,
/// used to deform the monomial generators into closure generators.
/// A single-element list means the minimality hypothesis (0 < q ∈ H,
/// 1 ∉ H) failed, which the caller must treat as an error.
pub fn choose_b0(h: &NumericalSemigroup, bs: &[usize]) -> Result<usize> {
    if bs.len() < 2 {
        return Err(Error::SingleGenerator);
    }
    let b1 = bs[0];
    for b in bs[1]..=bs[1] + h.conductor() + b1 {
        if gcd(b1, b) != 1 {
            continue;
        }
        if bs[1..].iter().any(|&bi| b >= bi && h.contains(b - bi)) {
            return Ok(b);
        }
    }
    unreachable!("some b ≡ 1 mod b1 lies in b2 + H within the scanned window");
}

/// Integral closure of an ideal with IS = t^q(1 − t)S over k[H], as the
/// n-element difference list (t^{b_1} − t^{b_0}, {t^{b_i} − t^{b_0+b_i}})
/// built on the minimal monomial exponents b_i and the coprime exponent
/// b_0. Requires 0 < q ∈ H.
pub fn integral_closure_one_minus_t(
    h: &NumericalSemigroup,
    field: FieldSpec,
    q: usize,
) -> Result<IdealPresentation> {
    if q == 0 || !h.contains(q) {
        return Err(Error::NotInSemigroup(q));
    }
    let bs = monomial_ideal_min_gens(h, q);
    let b0 = choose_b0(h, &bs)?;
    let minus_one = field.neg(&field.one()).expect("same field");
    let difference = |lead: usize, trail: usize| -> Poly {
        let mut coeffs = vec![field.zero(); trail + 1];
        coeffs[lead] = field.one();
        coeffs[trail] = field.add(&coeffs[trail], &minus_one).expect("same field");
        Poly::from_coeffs(field, coeffs).expect("difference of monomials")
    };
    let mut gens = vec![difference(bs[0], b0)];
    gens.extend(bs[1..].iter().map(|&bi| difference(bi, b0 + bi)));
    let f = Poly::from_ints(field, &[1, -1]);
    let provenance = Provenance::Closure { q, f, variant: ClosureVariant::DifferenceList };
    let r = CoreAlgebra::from_semigroup(h, field);
    Ok(IdealPresentation::new(r, gens, provenance))
}
