//! Closed points of Spec S over a finite prime field and their images
//! in Spec R: enumeration of monic irreducibles, contraction of a point
//! ideal to a truncated slice of R, and the injectivity and
//! residue-degree checks for the correspondence Q ↦ Q ∩ R.

use crate::corealg::CoreAlgebra;
use crate::error::{Error, Result};
use crate::ideal::{two_generator_ideal, IdealPresentation};
use crate::oracle::{intersection_phi_s_r, TruncatedSubspace};
use crate::poly::Poly;

/// A closed point of Spec S = Spec k[t] over GF(p): a monic irreducible
/// polynomial π, with π = t marking the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedPoint {
    pi: Poly,
    degree: usize,
    is_origin: bool,
}

impl ClosedPoint {
    /// Validates that π is monic and irreducible over its finite field
    /// by trial division against every smaller-degree monic polynomial.
    pub fn new(pi: Poly) -> Result<ClosedPoint> {
        let field = pi.field();
        if field.modulus().is_none() {
            return Err(Error::InfiniteField);
        }
        let Some(degree) = pi.degree() else {
            return Err(Error::NotIrreducible(pi));
        };
        if degree == 0 || !field.is_one(pi.leading_coeff().expect("nonzero")) {
            return Err(Error::NotIrreducible(pi));
        }
        for divisor in monic_polys_of_degree(&pi, degree / 2) {
            if pi.divisible_by(&divisor)? {
                return Err(Error::NotIrreducible(pi));
            }
        }
        let is_origin = pi == Poly::t_power(field, 1);
        Ok(ClosedPoint { pi, degree, is_origin })
    }

    pub fn pi(&self) -> &Poly {
        &self.pi
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_origin(&self) -> bool {
        self.is_origin
    }
}

impl std::fmt::Display for ClosedPoint {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(out, "({})", self.pi)
    }
}

/// All monic polynomials of degree 1..=max_degree over the field of the
/// sample polynomial, in base-p counting order.
fn monic_polys_of_degree(sample: &Poly, max_degree: usize) -> Vec<Poly> {
    let field = sample.field();
    let p = field.modulus().expect("finite field") as i64;
    let mut out = Vec::new();
    for deg in 1..=max_degree {
        let count = (p as u64).pow(deg as u32);
        for code in 0..count {
            let mut coeffs = vec![0i64; deg + 1];
            coeffs[deg] = 1;
            let mut rest = code;
            for c in coeffs.iter_mut().take(deg) {
                *c = (rest % p as u64) as i64;
                rest /= p as u64;
            }
            out.push(Poly::from_ints(field, &coeffs));
        }
    }
    out
}

/// All monic irreducibles of degree ≤ max_degree over GF(p), sorted by
/// degree and then by coefficient vector.
pub fn monic_irreducibles(p: u64, max_degree: usize) -> Result<Vec<ClosedPoint>> {
    let field = crate::field::FieldSpec::prime(p)?;
    if max_degree == 0 {
        return Err(Error::BoundTooSmall { required: 1, got: 0 });
    }
    let sample = Poly::t_power(field, 1);
    let mut points = Vec::new();
    for candidate in monic_polys_of_degree(&sample, max_degree) {
        if let Ok(point) = ClosedPoint::new(candidate) {
            points.push(point);
        }
    }
    Ok(points)
}

/// The image of a closed point of Spec S inside R: the truncated slice
/// (πS ∩ R)_{≤bound}, plus a two-generator presentation whenever the
/// point is away from the origin (π(0) ≠ 0, so π normalizes to a unit
/// polynomial).
#[derive(Clone, Debug)]
pub struct ContractedPoint {
    pub slice: TruncatedSubspace,
    pub presentation: Option<IdealPresentation>,
}

pub fn point_to_r(r: &CoreAlgebra, point: &ClosedPoint, bound: usize) -> Result<ContractedPoint> {
    let field = r.field();
    if field != point.pi().field() {
        return Err(Error::FieldMismatch(field, point.pi().field()));
    }
    let slice = intersection_phi_s_r(r, point.pi(), bound);
    let constant = point.pi().coeff(0);
    let presentation = if field.is_zero(&constant) {
        None
    } else {
        let unit = field.inv(&constant)?;
        let f = point.pi().scale(&unit)?;
        Some(two_generator_ideal(r, &f, None, None)?)
    };
    Ok(ContractedPoint { slice, presentation })
}

/// Per-point outcome of the correspondence check.
#[derive(Clone, Debug)]
pub struct PointReport {
    pub point: ClosedPoint,
    /// Codimension of the contracted slice in R, once three consecutive
    /// truncation degrees agree on it; None if it never stabilized.
    pub stabilized_codim: Option<usize>,
    pub codim_matches_degree: bool,
}

/// Result of sweeping every closed point of degree ≤ d through R.
#[derive(Clone, Debug)]
pub struct SpecReport {
    pub points: Vec<PointReport>,
    /// Pairs of distinct irreducibles whose contracted slices coincide.
    pub collisions: Vec<(ClosedPoint, ClosedPoint)>,
}

impl SpecReport {
    pub fn passes(&self) -> bool {
        self.collisions.is_empty() && self.points.iter().all(|p| p.codim_matches_degree)
    }
}

/// Checks the two finite certificates of the Spec correspondence for R
/// over GF(p): distinct closed points of Spec S of degree ≤ max_irr_degree
/// contract to distinct slices of R (injectivity), and the codimension
/// of each slice stabilizes to deg π (residue degrees transfer, so
/// rational points correspond to rational points).
pub fn spec_correspondence_check(
    r: &CoreAlgebra,
    max_irr_degree: usize,
    bound: usize,
) -> Result<SpecReport> {
    let Some(p) = r.field().modulus() else {
        return Err(Error::InfiniteField);
    };
    let irreducibles = monic_irreducibles(p, max_irr_degree)?;
    let mut slices = Vec::new();
    let mut points = Vec::new();
    for point in &irreducibles {
        let mut stabilized = None;
        let mut run: Vec<usize> = Vec::new();
        for d in point.degree()..=bound {
            let codim = r.canonical_basis(d).dim() - intersection_phi_s_r(r, point.pi(), d).dim();
            run.push(codim);
            let n = run.len();
            if n >= 3 && run[n - 1] == run[n - 2] && run[n - 2] == run[n - 3] {
                stabilized = Some(codim);
                break;
            }
        }
        points.push(PointReport {
            point: point.clone(),
            stabilized_codim: stabilized,
            codim_matches_degree: stabilized == Some(point.degree()),
        });
        slices.push(intersection_phi_s_r(r, point.pi(), bound));
    }
    let mut collisions = Vec::new();
    for i in 0..slices.len() {
        for j in i + 1..slices.len() {
            if slices[i] == slices[j] {
                collisions.push((irreducibles[i].clone(), irreducibles[j].clone()));
            }
        }
    }
    Ok(SpecReport { points, collisions })
}
