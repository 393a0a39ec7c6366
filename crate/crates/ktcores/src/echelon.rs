//! Degree-echelon collections of polynomials and a dense nullspace solver.
//!
//! An `Echelon` holds at most one row per leading degree (the pivot), each
//! row scaled to leading coefficient 1. Reduction against the rows is a
//! normal form: the result has zero coefficient at every pivot degree.
//! This is the workhorse behind subalgebra membership, ideal truncations,
//! and dimension counts.

use std::collections::BTreeMap;

use crate::field::{FieldSpec, Scalar};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Echelon {
    field: FieldSpec,
    rows: BTreeMap<usize, Poly>,
}

impl Echelon {
    pub(crate) fn new(field: FieldSpec) -> Echelon {
        Echelon { field, rows: BTreeMap::new() }
    }

    /// Normal form: subtracts row multiples descending, so every pivot
    /// degree ends with coefficient zero. The zero result means membership.
    pub(crate) fn reduce(&self, p: &Poly) -> Poly {
        let mut r = p.clone();
        let Some(top) = r.degree() else { return r };
        for d in (0..=top).rev() {
            let c = r.coeff(d);
            if self.field.is_zero(&c) {
                continue;
            }
            if let Some(row) = self.rows.get(&d) {
                let scaled = row.scale(&c).expect("same field");
                r = r.sub(&scaled).expect("same field");
            }
        }
        r
    }

    /// Reduces and adopts the remainder as a new row. Returns the new pivot
    /// degree, or `None` when the polynomial was already in the span.
    pub(crate) fn insert(&mut self, p: &Poly) -> Option<usize> {
        let r = self.reduce(p);
        let d = r.degree()?;
        let lead = r.leading_coeff().expect("nonzero").clone();
        let inv = self.field.inv(&lead).expect("nonzero leading coefficient");
        self.rows.insert(d, r.scale(&inv).expect("same field"));
        Some(d)
    }

    /// Rewrites every row to its normal form against the others, giving the
    /// unique reduced basis of the span.
    pub(crate) fn inter_reduce(&mut self) {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        for d in pivots {
            let row = self.rows.remove(&d).expect("pivot present");
            let reduced = self.reduce(&row);
            debug_assert_eq!(reduced.degree(), Some(d));
            self.rows.insert(d, reduced);
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub(crate) fn row(&self, d: usize) -> Option<&Poly> {
        self.rows.get(&d)
    }

    pub(crate) fn iter_rows(&self) -> impl Iterator<Item = (usize, &Poly)> {
        self.rows.iter().map(|(&d, p)| (d, p))
    }

    pub(crate) fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }
}

/// Basis of the solution space of `mat · x = 0`. Each row of `mat` is one
/// equation over `ncols` unknowns; rows shorter than `ncols` are padded
/// with zeros conceptually (callers always pass full rows).
#[allow(clippy::needless_range_loop)]
pub(crate) fn nullspace(field: FieldSpec, mat: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = mat.to_vec();
    let nrows = m.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0;
    for col in 0..ncols {
        let Some(src) = (rank..nrows).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(rank, src);
        let inv = field.inv(&m[rank][col].clone()).expect("nonzero pivot");
        for c in 0..ncols {
            m[rank][c] = field.mul(&m[rank][c], &inv).expect("same field");
        }
        for r in 0..nrows {
            if r != rank && !field.is_zero(&m[r][col]) {
                let factor = m[r][col].clone();
                for c in 0..ncols {
                    let s = field.mul(&m[rank][c], &factor).expect("same field");
                    m[r][c] = field.sub(&m[r][c], &s).expect("same field");
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for col in 0..ncols {
            if let Some(r) = pivot_of_col[col] {
                v[col] = field.neg(&m[r][free]).expect("same field");
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn insert_and_reduce() {
        let mut e = Echelon::new(q());
        assert_eq!(e.insert(&Poly::from_ints(q(), &[1, 0, 1])), Some(2));
        assert_eq!(e.insert(&Poly::from_ints(q(), &[0, 1])), Some(1));
        // 2 + t + 2t^2 = 2(1 + t^2) + t: already in the span.
        assert_eq!(e.insert(&Poly::from_ints(q(), &[2, 1, 2])), None);
        assert_eq!(e.dim(), 2);
        assert!(e.contains(&Poly::from_ints(q(), &[3, 5, 3])));
        assert!(!e.contains(&Poly::one(q())));
        let r = e.reduce(&Poly::from_ints(q(), &[0, 0, 7]));
        assert_eq!(r, Poly::from_ints(q(), &[-7]));
    }

    #[test]
    fn inter_reduce_clears_pivot_columns() {
        let mut e = Echelon::new(q());
        e.insert(&Poly::from_ints(q(), &[1, 1]));
        e.insert(&Poly::from_ints(q(), &[1, 0, 1]));
        e.insert(&Poly::from_ints(q(), &[1, 1, 1, 1]));
        e.inter_reduce();
        for (d, row) in e.iter_rows() {
            assert_eq!(row.degree(), Some(d));
            assert!(q().is_one(row.leading_coeff().unwrap()));
            for (other, _) in e.iter_rows() {
                if other != d {
                    assert!(q().is_zero(&row.coeff(other)), "row {d} dirty at {other}");
                }
            }
        }
    }

    #[test]
    fn span_membership_is_order_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xec4e);
        let field = FieldSpec::prime(5).unwrap();
        for _ in 0..20 {
            let polys: Vec<Poly> = (0..6)
                .map(|_| {
                    let coeffs: Vec<Scalar> = (0..rng.gen_range(1..=7))
                        .map(|_| crate::field::tests::random_scalar(&field, &mut rng))
                        .collect();
                    Poly::from_coeffs(field, coeffs).unwrap()
                })
                .collect();
            let mut fwd = Echelon::new(field);
            let mut rev = Echelon::new(field);
            for p in &polys {
                fwd.insert(p);
            }
            for p in polys.iter().rev() {
                rev.insert(p);
            }
            assert_eq!(fwd.dim(), rev.dim());
            fwd.inter_reduce();
            rev.inter_reduce();
            assert_eq!(fwd, rev, "reduced bases are canonical");
        }
    }

    #[test]
    fn nullspace_of_small_system() {
        // x + y + z = 0 and y - z = 0 over Q: solutions span (-2, 1, 1).
        let field = q();
        let mat = vec![
            vec![field.one(), field.one(), field.one()],
            vec![field.zero(), field.one(), field.integer(-1)],
        ];
        let basis = nullspace(field, &mat, 3);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        let ratio = field.div(&v[0], &v[1]).unwrap();
        assert_eq!(ratio, field.integer(-2));
        assert_eq!(v[1], v[2]);
    }

    #[test]
    fn nullspace_dimension_and_kernel_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x22);
        for field in [q(), FieldSpec::prime(7).unwrap()] {
            for _ in 0..20 {
                let nrows = rng.gen_range(1..=5);
                let ncols = rng.gen_range(1..=6);
                let mat: Vec<Vec<Scalar>> = (0..nrows)
                    .map(|_| {
                        (0..ncols)
                            .map(|_| crate::field::tests::random_scalar(&field, &mut rng))
                            .collect()
                    })
                    .collect();
                let basis = nullspace(field, &mat, ncols);
                // Every basis vector is a genuine solution.
                for v in &basis {
                    for row in &mat {
                        let mut acc = field.zero();
                        for (a, x) in row.iter().zip(v) {
                            acc = field.add(&acc, &field.mul(a, x).unwrap()).unwrap();
                        }
                        assert!(field.is_zero(&acc));
                    }
                }
                // Rank-nullity against an echelon of the row space.
                let mut rows = Echelon::new(field);
                for row in &mat {
                    rows.insert(&Poly::from_coeffs(field, row.clone()).unwrap());
                }
                assert_eq!(basis.len(), ncols - rows.dim());
            }
        }
    }
}
