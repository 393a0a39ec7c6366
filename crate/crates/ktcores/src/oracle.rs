//! Brute-force verification layer: exact truncated slices of φS ∩ R,
//! ideal spans, a sound equality decision for ideal presentations, and
//! Nakayama-style generator counts at the origin.
//!
//! Everything here is plain linear algebra over the coefficient field, so
//! the verdicts are independent of the closed-form constructions they
//! check. `Proven` and `Refuted` are both certificates; `Inconclusive`
//! only ever means the degree bound was too small to capture a conductor
//! multiple, and raising the bound resolves it.

use crate::corealg::CoreAlgebra;
use crate::echelon::{nullspace, Echelon};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::Poly;

/// A finite-dimensional slice of an ideal or module: the span of its
/// elements of degree ≤ bound, held as a reduced echelon.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSubspace {
    bound: usize,
    space: Echelon,
}

impl TruncatedSubspace {
    fn new(bound: usize, mut space: Echelon) -> TruncatedSubspace {
        space.inter_reduce();
        TruncatedSubspace { bound, space }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Leading degrees of the basis rows, ascending.
    pub fn pivots(&self) -> Vec<usize> {
        self.space.pivots().collect()
    }

    /// The reduced basis rows, by ascending leading degree.
    pub fn rows(&self) -> Vec<&Poly> {
        self.space.iter_rows().map(|(_, p)| p).collect()
    }

    /// Exact membership for polynomials of degree ≤ bound; anything larger
    /// is outside the slice by definition.
    pub fn contains(&self, p: &Poly) -> bool {
        match p.degree() {
            Some(d) if d > self.bound => false,
            _ => self.space.contains(p),
        }
    }
}

/// The slice (φS ∩ R)_{≤ bound}: every multiple of φ that lies in R and
/// has degree ≤ bound. Exact by construction: membership in R only
/// constrains the residue mod t^{c0}, which is linear in the cofactor.
pub fn intersection_phi_s_r(r: &CoreAlgebra, phi: &Poly, bound: usize) -> TruncatedSubspace {
    let field = r.field();
    let mut space = Echelon::new(field);
    let Some(dphi) = phi.degree() else {
        return TruncatedSubspace::new(bound, space);
    };
    if bound < dphi {
        return TruncatedSubspace::new(bound, space);
    }
    let n = bound - dphi;
    // Unknown cofactor s = s_0 + … + s_n t^n; the residue of φ·s mod
    // t^{c0} must reduce to zero against the image subalgebra of R.
    let c0 = r.c0();
    let reduced: Vec<Poly> = (0..=n).map(|j| r.low_reduce(&phi.shift(j))).collect();
    let mat: Vec<Vec<Scalar>> =
        (0..c0).map(|d| reduced.iter().map(|p| p.coeff(d)).collect()).collect();
    for sol in nullspace(field, &mat, n + 1) {
        let s = Poly::from_coeffs(field, sol).expect("solution over the field");
        space.insert(&phi.mul(&s).expect("same field"));
    }
    TruncatedSubspace::new(bound, space)
}

/// The span of {β_d · g : g ∈ gens, d + deg g ≤ bound} over the canonical
/// basis β of R: a degree-bounded under-approximation of the ideal (gens).
pub fn ideal_span(r: &CoreAlgebra, gens: &[Poly], bound: usize) -> Result<TruncatedSubspace> {
    for g in gens {
        if !r.contains(g) {
            return Err(Error::GeneratorNotInRing(g.clone()));
        }
    }
    let mut space = Echelon::new(r.field());
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        for (d, row) in r.low_rows() {
            if d + dg <= bound {
                space.insert(&row.mul(g).expect("same field"));
            }
        }
        for d in r.c0()..=bound.saturating_sub(dg) {
            space.insert(&g.shift(d));
        }
    }
    Ok(TruncatedSubspace::new(bound, space))
}

/// Outcome of `verify_ideal_equality`.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Proven,
    Refuted(Refutation),
    Inconclusive,
}

impl Verdict {
    pub fn is_proven(&self) -> bool {
        matches!(self, Verdict::Proven)
    }
}

/// A counterexample: a concrete polynomial separating the two ideals.
#[derive(Clone, Debug, PartialEq)]
pub struct Refutation {
    pub witness: Poly,
    pub kind: RefutationKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefutationKind {
    /// A claimed generator is not a multiple of φ, so (gens) ⊄ φS.
    GeneratorNotMultiple,
    /// A claimed generator lies outside R.
    GeneratorOutsideRing,
    /// An element of φS ∩ R is not in the ideal the generators produce.
    MissingElement,
}

impl std::fmt::Display for Refutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            RefutationKind::GeneratorNotMultiple => {
                write!(f, "generator {} is not a multiple of phi", self.witness)
            }
            RefutationKind::GeneratorOutsideRing => {
                write!(f, "generator {} lies outside the ring", self.witness)
            }
            RefutationKind::MissingElement => {
                write!(f, "{} is in the contraction but not in the ideal", self.witness)
            }
        }
    }
}

/// Decides (gens) = φS ∩ R as ideals of R. Sound in both directions.
///
/// Step 1 checks (gens) ⊆ φS ∩ R generator by generator. Step 2 searches
/// for M with t^M φ t^j in the degree-bounded span of the ideal for all
/// j < c0; success certifies t^M φ S ⊆ (gens) because higher monomial
/// tails multiply in from R. Step 3 then compares exactly: with
/// M′ = max(M, c0), both ideals decompose as a finite low piece plus
/// t^{M′}φS, so (gens) equals the span of {β_d·g : d < M′} plus the tail,
/// and φS ∩ R equals its slice below M′ + deg φ plus the same tail.
/// Every slice basis vector must land in the generated side; the first
/// one that does not is a genuine counterexample.
///
/// `Inconclusive` means step 2 found no M ≤ bound − deg φ − c0; retry
/// with a larger bound.
pub fn verify_ideal_equality(
    r: &CoreAlgebra,
    phi: &Poly,
    gens: &[Poly],
    bound: usize,
) -> Result<Verdict> {
    if phi.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let dphi = phi.degree().expect("nonzero");
    for g in gens {
        if !g.divisible_by(phi)? {
            return Ok(Verdict::Refuted(Refutation {
                witness: g.clone(),
                kind: RefutationKind::GeneratorNotMultiple,
            }));
        }
        if !r.contains(g) {
            return Ok(Verdict::Refuted(Refutation {
                witness: g.clone(),
                kind: RefutationKind::GeneratorOutsideRing,
            }));
        }
    }

    let c0 = r.c0();
    let span = ideal_span(r, gens, bound)?;
    let mut capture = None;
    'search: for m in 0..=bound.saturating_sub(dphi + c0) {
        for j in 0..c0 {
            if !span.contains(&phi.shift(m + j)) {
                continue 'search;
            }
        }
        capture = Some(m);
        break;
    }
    let Some(m) = capture else {
        return Ok(Verdict::Inconclusive);
    };

    let mp = m.max(c0);
    let max_gen_deg = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let delta = (mp + dphi - 1).max((mp + max_gen_deg).saturating_sub(1));
    let mut generated = Echelon::new(r.field());
    for g in gens {
        if g.is_zero() {
            continue;
        }
        for (d, row) in r.low_rows() {
            if d < mp {
                generated.insert(&row.mul(g).expect("same field"));
            }
        }
        for d in c0..mp {
            generated.insert(&g.shift(d));
        }
    }
    for j in 0..=delta.saturating_sub(mp + dphi) {
        generated.insert(&phi.shift(mp + j));
    }

    let slice = intersection_phi_s_r(r, phi, mp + dphi - 1);
    for row in slice.rows() {
        if !generated.contains(row) {
            return Ok(Verdict::Refuted(Refutation {
                witness: row.clone(),
                kind: RefutationKind::MissingElement,
            }));
        }
    }
    Ok(Verdict::Proven)
}

/// A bound that lets step 2 capture a conductor multiple for every
/// presentation produced by the closed-form constructors.
pub fn default_verify_bound(r: &CoreAlgebra, phi: &Poly, gens: &[Poly]) -> usize {
    let dphi = phi.degree().unwrap_or(0);
    let max_gen_deg = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let c0 = r.c0();
    dphi + 2 * c0 + c0.max(max_gen_deg.saturating_sub(dphi)) + 2
}

/// Minimal number of generators of the origin ideal P0 = tS ∩ R, as the
/// exact dimension of P0/P0².
///
/// Both spaces split off the tail t^{2c0}S, leaving finite pieces: P0 is
/// spanned by the basis rows of degree 1..2c0−1 plus the tail, and P0² by
/// their pairwise products plus the tail. The result is exact for every
/// bound ≥ 2c0 + 2 (the computation saturates internally).
pub fn mu_at_origin(r: &CoreAlgebra, bound: usize) -> Result<usize> {
    let c0 = r.c0();
    let floor = 2 * c0 + 2;
    if bound < floor {
        return Err(Error::BoundTooSmall { required: floor, got: bound });
    }
    let field = r.field();
    let delta = 4 * c0;
    let mut rows: Vec<Poly> =
        r.low_rows().filter(|&(d, _)| d >= 1).map(|(_, p)| p.clone()).collect();
    for d in c0..2 * c0 {
        rows.push(Poly::t_power(field, d));
    }

    let mut origin = Echelon::new(field);
    let mut squared = Echelon::new(field);
    for row in &rows {
        origin.insert(row);
    }
    for d in 2 * c0..=delta {
        let m = Poly::t_power(field, d);
        origin.insert(&m);
        squared.insert(&m);
    }
    for (i, x) in rows.iter().enumerate() {
        for y in &rows[i..] {
            squared.insert(&x.mul(y).expect("same field"));
        }
    }
    Ok(origin.dim() - squared.dim())
}

/// Nakayama dimension dim_k J/(P0·J) at the origin for J = (gens),
/// assuming the generators satisfy (gens)·S = φS (they do whenever the
/// presentation was oracle-verified against φ). Exact: J splits as
/// span{β_d·g : d < c0} + t^{c0}φS and P0·J as the same with d ≥ 1.
pub fn mu_at_origin_of(r: &CoreAlgebra, phi: &Poly, gens: &[Poly], bound: usize) -> Result<usize> {
    if phi.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let c0 = r.c0();
    let floor = 2 * c0 + 2;
    if bound < floor {
        return Err(Error::BoundTooSmall { required: floor, got: bound });
    }
    let dphi = phi.degree().expect("nonzero");
    let max_gen_deg = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let delta = (c0 + dphi - 1).max((c0 + max_gen_deg).saturating_sub(1));

    let field = r.field();
    let mut full = Echelon::new(field);
    let mut scaled = Echelon::new(field);
    for g in gens {
        if g.is_zero() {
            continue;
        }
        for (d, row) in r.low_rows() {
            if d < c0 {
                let p = row.mul(g).expect("same field");
                full.insert(&p);
                if d >= 1 {
                    scaled.insert(&p);
                }
            }
        }
    }
    for j in 0..=delta.saturating_sub(c0 + dphi) {
        let tail = phi.shift(c0 + j);
        full.insert(&tail);
        scaled.insert(&tail);
    }
    Ok(full.dim() - scaled.dim())
}

/// Minimal number of generators of S as an R-module, measured as the
/// codimension of the span of {β_d · t^j : d ≥ 1} inside S, both sliced
/// at a degree bound. The span is all of (P0·S)_{≤D} once the bound
/// clears the Bézout overhead, so the measurement is certified by
/// agreement with the minimal order of the basis rows and the bound is
/// raised internally until the two meet.
pub fn mu_of_s_oracle(r: &CoreAlgebra, bound: usize) -> Result<usize> {
    let c0 = r.c0();
    let floor = 2 * c0;
    if bound < floor {
        return Err(Error::BoundTooSmall { required: floor, got: bound });
    }
    let field = r.field();
    let min_order =
        r.low_rows().filter(|&(d, _)| d >= 1).filter_map(|(_, p)| p.order()).min().unwrap_or(c0);
    let mut d = bound;
    loop {
        let mut span = Echelon::new(field);
        for m in c0..=d {
            span.insert(&Poly::t_power(field, m));
        }
        for (p, row) in r.low_rows() {
            if p == 0 {
                continue;
            }
            for j in 0..=d - p {
                span.insert(&row.shift(j));
            }
        }
        let measured = (d + 1) - span.dim();
        if measured == min_order {
            return Ok(measured);
        }
        d *= 2;
    }
}
