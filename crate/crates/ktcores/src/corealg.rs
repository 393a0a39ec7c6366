//! Cores of S = k[t]: subalgebras R with t^{c0}·S ⊆ R.
//!
//! A core is described by a conductor exponent c0 and algebra generators;
//! R is the k-algebra generated by the generators together with all
//! monomials t^{c0}, …, t^{2c0−1}. Since t^{c0}S ⊆ R, membership in R
//! depends only on the residue mod t^{c0}, so the whole ring is captured
//! by one finite object: the image subalgebra in k[t]/t^{c0}, held as a
//! reduced echelon. Every computation here (canonical bases, membership,
//! monomiality) reads off that image.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::echelon::Echelon;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::semigroup::NumericalSemigroup;

/// How a core was described; fixes which closed-form constructions apply.
#[derive(Clone, Debug)]
pub enum CoreOrigin {
    SemigroupRing(NumericalSemigroup),
    Explicit,
}

#[derive(Clone, Debug)]
pub struct CoreAlgebra {
    field: FieldSpec,
    c0: usize,
    gens: Vec<Poly>,
    origin: CoreOrigin,
    /// Reduced echelon of the image of R in k[t]/t^{c0}; rows are genuine
    /// elements of R of degree < c0 (their tails vanish).
    low: Echelon,
}

impl CoreAlgebra {
    /// The core generated by `gens` plus all monomials of degree ≥ `c0`.
    pub fn new(field: FieldSpec, c0: usize, gens: Vec<Poly>) -> Result<CoreAlgebra> {
        if c0 == 0 {
            return Err(Error::BoundTooSmall { required: 1, got: 0 });
        }
        for g in &gens {
            if g.degree().unwrap_or(0) == 0 {
                return Err(Error::ConstantGenerator);
            }
            if g.field() != field {
                return Err(Error::FieldMismatch(field, g.field()));
            }
        }
        let low = close_image(field, c0, &gens)?;
        Ok(CoreAlgebra { field, c0, gens, origin: CoreOrigin::Explicit, low })
    }

    /// The semigroup ring k[H], generated by the monomials t^a for the
    /// minimal generators a of H, with c0 the conductor of H.
    pub fn from_semigroup(h: &NumericalSemigroup, field: FieldSpec) -> CoreAlgebra {
        let c0 = h.conductor().max(1);
        let gens: Vec<Poly> = h.min_generators().iter().map(|&a| Poly::t_power(field, a)).collect();
        let low = close_image(field, c0, &gens).expect("validated generators");
        CoreAlgebra { field, c0, gens, origin: CoreOrigin::SemigroupRing(h.clone()), low }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// The conductor exponent: t^{c0}·S ⊆ R.
    pub fn c0(&self) -> usize {
        self.c0
    }

    /// The declared algebra generators (monomials t^{c0..2c0-1} are implied).
    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn origin(&self) -> &CoreOrigin {
        &self.origin
    }

    /// The semigroup when the core was built as k[H].
    pub fn semigroup(&self) -> Option<&NumericalSemigroup> {
        match &self.origin {
            CoreOrigin::SemigroupRing(h) => Some(h),
            CoreOrigin::Explicit => None,
        }
    }

    /// Exact membership: f ∈ R iff its residue mod t^{c0} lies in the
    /// image subalgebra.
    pub fn contains(&self, f: &Poly) -> bool {
        self.low.contains(&f.truncated(self.c0))
    }

    /// Normal form of the residue of `p` mod t^{c0} against the image
    /// subalgebra; zero means p ∈ R.
    pub(crate) fn low_reduce(&self, p: &Poly) -> Poly {
        self.low.reduce(&p.truncated(self.c0))
    }

    pub(crate) fn low_rows(&self) -> impl Iterator<Item = (usize, &Poly)> {
        self.low.iter_rows()
    }

    /// The degree-echelon basis of R up to `bound`: one reduced row per
    /// degree d < c0 realized by R, and t^d for every c0 ≤ d ≤ bound.
    pub fn canonical_basis(&self, bound: usize) -> EchelonBasis {
        let low: BTreeMap<usize, Poly> = self
            .low
            .iter_rows()
            .filter(|&(d, _)| d <= bound)
            .map(|(d, p)| (d, p.clone()))
            .collect();
        EchelonBasis { field: self.field, bound, c0: self.c0, low }
    }

    /// True when R is spanned by the monomials it contains, i.e. R = k[H]
    /// for the semigroup H of realized degrees. Membership is decided
    /// below c0, so this one check certifies all degrees.
    pub fn is_semigroup_ring(&self) -> bool {
        self.low.iter_rows().all(|(_, row)| row.is_monomial())
    }

    /// The degrees realized by R below c0 (pivots of the image echelon).
    pub fn low_degrees(&self) -> Vec<usize> {
        self.low.pivots().collect()
    }

    /// Loads a core description file; `.json` parses as JSON, anything
    /// else as TOML. See `from_toml`.
    pub fn load(path: &Path) -> Result<CoreAlgebra> {
        let text =
            fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        match path.extension().and_then(|s| s.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => CoreAlgebra::from_json(&text),
            _ => CoreAlgebra::from_toml(&text),
        }
    }

    /// Builds from a TOML description with either explicit generators
    ///
    /// ```toml
    /// field = "Q"
    /// c0 = 4
    /// generators = ["t^2 + t^3"]
    /// ```
    ///
    /// or a semigroup:
    ///
    /// ```toml
    /// field = "Fp:2"
    /// semigroup = [4, 11, 13]
    /// ```
    pub fn from_toml(text: &str) -> Result<CoreAlgebra> {
        let data: CoreFileData =
            toml::from_str(text).map_err(|e| Error::CoreFile(e.to_string()))?;
        data.build()
    }

    /// Builds from the JSON form of the same description.
    pub fn from_json(text: &str) -> Result<CoreAlgebra> {
        let data: CoreFileData =
            serde_json::from_str(text).map_err(|e| Error::CoreFile(e.to_string()))?;
        data.build()
    }
}

/// Closes the images of the generators mod t^{c0} under multiplication,
/// yielding the reduced echelon of the image subalgebra (1 included).
fn close_image(field: FieldSpec, c0: usize, gens: &[Poly]) -> Result<Echelon> {
    let mut space = Echelon::new(field);
    space.insert(&Poly::one(field));
    let images: Vec<Poly> = gens.iter().map(|g| g.truncated(c0)).filter(|g| !g.is_zero()).collect();
    let mut worklist = vec![Poly::one(field)];
    while let Some(w) = worklist.pop() {
        for g in &images {
            let p = w.mul(g)?.truncated(c0);
            if p.is_zero() {
                continue;
            }
            if let Some(d) = space.insert(&p) {
                worklist.push(space.row(d).expect("just inserted").clone());
            }
        }
    }
    space.inter_reduce();
    Ok(space)
}

/// Degree-echelon basis of a core up to a bound. Rows below c0 are the
/// reduced image rows; from c0 up every degree is realized by the pure
/// monomial, kept implicit to stay small at large bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct EchelonBasis {
    field: FieldSpec,
    bound: usize,
    c0: usize,
    low: BTreeMap<usize, Poly>,
}

impl EchelonBasis {
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// The realized degrees ≤ bound, ascending.
    pub fn keys(&self) -> Vec<usize> {
        let mut keys: Vec<usize> = self.low.keys().copied().collect();
        keys.extend(self.c0..=self.bound);
        keys
    }

    /// The basis element of leading degree d, if d is a key.
    pub fn element(&self, d: usize) -> Option<Poly> {
        if d >= self.c0 && d <= self.bound {
            return Some(Poly::t_power(self.field, d));
        }
        self.low.get(&d).cloned()
    }

    /// Number of keys, i.e. dim of R truncated at the bound.
    pub fn dim(&self) -> usize {
        self.low.len() + (self.bound + 1).saturating_sub(self.c0)
    }

    /// Membership in the span, exact for any polynomial of degree ≤ bound.
    pub fn contains(&self, p: &Poly) -> bool {
        match p.degree() {
            None => true,
            Some(d) if d > self.bound => false,
            Some(_) => {
                let mut r = p.truncated(self.c0);
                for (&d, row) in self.low.iter().rev() {
                    let c = r.coeff(d);
                    if !self.field.is_zero(&c) {
                        r = r.sub(&row.scale(&c).expect("same field")).expect("same field");
                    }
                }
                r.is_zero()
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CoreFileData {
    field: String,
    c0: Option<usize>,
    generators: Option<Vec<String>>,
    semigroup: Option<Vec<usize>>,
}

impl CoreFileData {
    fn build(self) -> Result<CoreAlgebra> {
        let field: FieldSpec = self
            .field
            .parse()
            .map_err(|_| Error::CoreFile(format!("unknown field {:?}", self.field)))?;
        match (self.c0, self.generators, self.semigroup) {
            (None, None, Some(sgp)) => {
                let h = NumericalSemigroup::new(&sgp)?;
                Ok(CoreAlgebra::from_semigroup(&h, field))
            }
            (Some(c0), Some(gens), None) => {
                let gens =
                    gens.iter().map(|s| parse_poly(s, field)).collect::<Result<Vec<Poly>>>()?;
                CoreAlgebra::new(field, c0, gens)
            }
            _ => {
                Err(Error::CoreFile("need either `semigroup` or both `c0` and `generators`".into()))
            }
        }
    }
}
