//! Text forms for scalars and polynomials.
//!
//! Grammar, whitespace-insensitive:
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := scalar | scalar '*' factor | factor
//! factor := 't' | 't' '^' digits
//! scalar := digits ('/' digits)?            over the rationals
//! scalar := digits                          over a prime field
//! ```
//!
//! `sign` is `+`, `-`, or the minus sign U+2212. Repeated exponents are
//! summed, so `t + t` parses to `2*t`. Error positions are byte offsets
//! into the input.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::poly::Poly;

/// Parses a polynomial in `t` over the given field.
pub fn parse_poly(text: &str, field: FieldSpec) -> Result<Poly> {
    let mut p = Parser::new(text, field);
    let mut coeffs: Vec<Scalar> = Vec::new();
    let mut negate = p.sign()?.unwrap_or(false);
    loop {
        let (c, k) = p.term(negate)?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, field.zero());
        }
        coeffs[k] = field.add(&coeffs[k], &c)?;
        p.skip_ws();
        if p.at_end() {
            break;
        }
        match p.sign()? {
            Some(n) => negate = n,
            None => return Err(Error::Syntax { position: p.pos, expected: "'+' or '-'".into() }),
        }
    }
    Poly::from_coeffs(field, coeffs)
}

/// Parses a standalone scalar; a leading sign is accepted over any field.
pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar> {
    let mut p = Parser::new(text, field);
    let negate = p.sign()?.unwrap_or(false);
    let start = p.pos;
    let c = p.rational_scalar(start)?;
    p.skip_ws();
    if !p.at_end() {
        return Err(Error::Syntax { position: p.pos, expected: "end of input".into() });
    }
    if negate {
        field.neg(&c)
    } else {
        Ok(c)
    }
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    /// Index into `chars`; error positions use the byte offset instead.
    idx: usize,
    pos: usize,
    field: FieldSpec,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, field: FieldSpec) -> Parser<'a> {
        Parser { text, chars: text.char_indices().collect(), idx: 0, pos: 0, field }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn bump(&mut self) {
        self.idx += 1;
        self.pos = self.chars.get(self.idx).map(|&(b, _)| b).unwrap_or(self.text.len());
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    /// Consumes a sign if present; `Some(true)` means negate.
    fn sign(&mut self) -> Result<Option<bool>> {
        self.skip_ws();
        match self.peek() {
            Some('+') => {
                self.bump();
                Ok(Some(false))
            }
            Some('-') | Some('\u{2212}') => {
                self.bump();
                Ok(Some(true))
            }
            _ => Ok(None),
        }
    }

    /// One term, returned as (coefficient, exponent).
    fn term(&mut self, negate: bool) -> Result<(Scalar, usize)> {
        self.skip_ws();
        let start = self.pos;
        let (c, k) = match self.peek() {
            Some('t') => (self.field.one(), self.factor()?),
            Some(c) if c.is_ascii_digit() => {
                let scalar = self.scalar(start)?;
                self.skip_ws();
                if self.peek() == Some('*') {
                    self.bump();
                    self.skip_ws();
                    if self.peek() != Some('t') {
                        return Err(Error::Syntax { position: self.pos, expected: "'t'".into() });
                    }
                    (scalar, self.factor()?)
                } else {
                    (scalar, 0)
                }
            }
            _ => {
                return Err(Error::Syntax {
                    position: self.pos,
                    expected: "coefficient or 't'".into(),
                })
            }
        };
        let c = if negate { self.field.neg(&c)? } else { c };
        Ok((c, k))
    }

    /// `t` or `t^k`; the caller has already seen the `t`.
    fn factor(&mut self) -> Result<usize> {
        self.bump();
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.bump();
        self.skip_ws();
        if matches!(self.peek(), Some('-') | Some('\u{2212}')) {
            return Err(Error::NegativeExponent { position: self.pos });
        }
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(Error::Syntax { position: start, expected: "exponent".into() });
        }
        digits
            .parse::<usize>()
            .map_err(|_| Error::Syntax { position: start, expected: "exponent".into() })
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        s
    }

    /// Field-appropriate scalar: `digits(/digits)?` over ℚ, bare residue
    /// over GF(p). The sign was consumed by the caller.
    fn scalar(&mut self, start: usize) -> Result<Scalar> {
        if self.field.modulus().is_some() {
            let digits = self.digits();
            let n: BigInt = digits
                .parse()
                .map_err(|_| Error::BadScalar { position: start, text: digits.clone() })?;
            Ok(self.field.big_integer(&n))
        } else {
            self.rational_scalar(start)
        }
    }

    fn rational_scalar(&mut self, start: usize) -> Result<Scalar> {
        let num_digits = self.digits();
        let num: BigInt = num_digits
            .parse()
            .map_err(|_| Error::BadScalar { position: start, text: num_digits.clone() })?;
        if self.peek() != Some('/') {
            return Ok(self.field.big_integer(&num));
        }
        self.bump();
        let den_start = self.pos;
        let den_digits = self.digits();
        let den: BigInt = den_digits
            .parse()
            .map_err(|_| Error::BadScalar { position: den_start, text: den_digits.clone() })?;
        self.field.fraction(&num, &den).map_err(|_| Error::BadScalar {
            position: start,
            text: format!("{num_digits}/{den_digits}"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn basic_forms() {
        assert_eq!(parse_poly("1 - t", q()).unwrap(), Poly::from_ints(q(), &[1, -1]));
        assert_eq!(parse_poly("t", q()).unwrap(), Poly::from_ints(q(), &[0, 1]));
        assert_eq!(parse_poly("3", q()).unwrap(), Poly::from_ints(q(), &[3]));
        assert_eq!(parse_poly("2*t^3 + 1", q()).unwrap(), Poly::from_ints(q(), &[1, 0, 0, 2]));
        assert_eq!(
            parse_poly("-t^2 + 1/2", q()).unwrap(),
            Poly::from_coeffs(
                q(),
                vec![q().fraction(&1.into(), &2.into()).unwrap(), q().zero(), q().integer(-1),],
            )
            .unwrap()
        );
    }

    #[test]
    fn gf2_generator_string() {
        let f = parse_poly("1 + t^2 + t^3 + t^5 + t^6", gf(2)).unwrap();
        assert_eq!(f, Poly::from_ints(gf(2), &[1, 0, 1, 1, 0, 1, 1]));
    }

    #[test]
    fn whitespace_and_unicode_minus() {
        assert_eq!(
            parse_poly("  1\t\u{2212}  t ^ 2 ", q()).unwrap(),
            Poly::from_ints(q(), &[1, 0, -1])
        );
    }

    #[test]
    fn repeated_exponents_are_summed() {
        assert_eq!(parse_poly("t + t", q()).unwrap(), Poly::from_ints(q(), &[0, 2]));
        assert_eq!(parse_poly("t^2 - t^2", q()).unwrap(), Poly::zero(q()));
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse_poly("t^-1", q()), Err(Error::NegativeExponent { position: 2 }));
        assert_eq!(
            parse_poly("", q()),
            Err(Error::Syntax { position: 0, expected: "coefficient or 't'".into() })
        );
        assert_eq!(
            parse_poly("1 + x", q()),
            Err(Error::Syntax { position: 4, expected: "coefficient or 't'".into() })
        );
        assert_eq!(
            parse_poly("2*s", q()),
            Err(Error::Syntax { position: 2, expected: "'t'".into() })
        );
        assert_eq!(
            parse_poly("1 t", q()),
            Err(Error::Syntax { position: 2, expected: "'+' or '-'".into() })
        );
        assert_eq!(
            parse_poly("t^", q()),
            Err(Error::Syntax { position: 2, expected: "exponent".into() })
        );
        assert!(matches!(parse_poly("1/0", q()), Err(Error::BadScalar { position: 0, .. })));
        // Fractions are not residues.
        assert!(parse_poly("1/2", gf(5)).is_err());
    }

    #[test]
    fn standalone_scalars() {
        assert_eq!(parse_scalar("-3", q()).unwrap(), q().integer(-3));
        assert_eq!(
            parse_scalar(" 7/2 ", q()).unwrap(),
            q().fraction(&7.into(), &2.into()).unwrap()
        );
        assert_eq!(parse_scalar("9", gf(5)).unwrap(), gf(5).integer(4));
        assert_eq!(parse_scalar("-1", gf(5)).unwrap(), gf(5).integer(4));
        assert!(parse_scalar("2 3", q()).is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x70a57);
        for field in [q(), gf(2), gf(5), gf(31)] {
            for _ in 0..1000 {
                let deg = rng.gen_range(0..=10);
                let coeffs: Vec<Scalar> = (0..=deg)
                    .map(|_| crate::field::tests::random_scalar(&field, &mut rng))
                    .collect();
                let p = Poly::from_coeffs(field, coeffs).unwrap();
                let back = parse_poly(&p.to_string(), field).unwrap();
                assert_eq!(back, p, "text was {p}");
            }
        }
    }
}
