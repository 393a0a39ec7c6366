//! Crate-wide error type.

use std::fmt;

use crate::field::FieldSpec;
use crate::poly::Poly;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong at the library boundary.
///
/// Internal invariant violations (a coefficient escaping its field, an
/// echelon row losing its pivot) are bugs and panic instead.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The modulus handed to `FieldSpec::prime` failed the primality check.
    NonPrimeModulus(u64),
    /// Two operands live in different fields.
    FieldMismatch(FieldSpec, FieldSpec),
    /// Inversion of zero, or division by the zero polynomial.
    DivisionByZero,
    /// Truncated inversion needs constant term exactly 1.
    NonUnitConstantTerm,
    /// Ideal constructions need f(0) = 1.
    BadConstantTerm,
    /// A degree bound or truncation parameter is below the documented floor.
    BoundTooSmall { required: usize, got: usize },
    /// Semigroup generators with gcd > 1 generate no numerical semigroup.
    GcdNotOne(Vec<usize>),
    /// The element is not in the semigroup (Apéry sets, closure exponents).
    NotInSemigroup(usize),
    /// Core generators must be nonconstant polynomials.
    ConstantGenerator,
    /// The operation is only defined for semigroup rings k[H].
    NonMonomialCore,
    /// Exponent selection needs at least two minimal generators.
    SingleGenerator,
    /// The core is all of k[t]; the requested quantity degenerates.
    TrivialCore,
    /// A claimed ideal generator does not lie in the ambient ring.
    GeneratorNotInRing(Poly),
    /// Closed points of Spec S must be monic irreducible polynomials.
    NotIrreducible(Poly),
    /// Point enumeration only works over finite prime fields.
    InfiniteField,
    /// Polynomial or scalar text failed to parse.
    Syntax { position: usize, expected: String },
    /// `t^-k` and friends.
    NegativeExponent { position: usize },
    /// A coefficient token that is not a valid scalar for the field.
    BadScalar { position: usize, text: String },
    /// A core description file is structurally invalid.
    CoreFile(String),
    /// File I/O while loading a core description.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrimeModulus(p) => write!(f, "{p} is not prime"),
            Error::FieldMismatch(a, b) => write!(f, "field mismatch: {a} vs {b}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NonUnitConstantTerm => {
                write!(f, "constant term must be 1 for truncated inversion")
            }
            Error::BadConstantTerm => write!(f, "constant term must be 1"),
            Error::BoundTooSmall { required, got } => {
                write!(f, "bound {got} is too small (need at least {required})")
            }
            Error::GcdNotOne(gens) => {
                write!(f, "generators {gens:?} have gcd > 1")
            }
            Error::NotInSemigroup(m) => write!(f, "{m} is not in the semigroup"),
            Error::ConstantGenerator => write!(f, "core generators must be nonconstant"),
            Error::NonMonomialCore => {
                write!(f, "operation requires a semigroup ring k[H]")
            }
            Error::SingleGenerator => {
                write!(f, "need at least two minimal generators")
            }
            Error::TrivialCore => write!(f, "core is all of k[t]"),
            Error::GeneratorNotInRing(p) => {
                write!(f, "generator {p} does not lie in the ring")
            }
            Error::NotIrreducible(p) => {
                write!(f, "{p} is not a monic irreducible polynomial")
            }
            Error::InfiniteField => {
                write!(f, "operation requires a finite prime field")
            }
            Error::Syntax { position, expected } => {
                write!(f, "syntax error at position {position}: expected {expected}")
            }
            Error::NegativeExponent { position } => {
                write!(f, "negative exponent at position {position}")
            }
            Error::BadScalar { position, text } => {
                write!(f, "bad scalar {text:?} at position {position}")
            }
            Error::CoreFile(msg) => write!(f, "invalid core description: {msg}"),
            Error::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
