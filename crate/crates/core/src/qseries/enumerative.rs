//! Brute-force generating functions: sum over all partitions of weight below
//! the order of `q^|pi|` times a monomial in the chosen statistics.

use crate::cores::is_t_core;
use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::stanley::{bijection1, stcrank};

use super::laurent::LaurentPoly;
use super::series::Series;

/// Largest order accepted by [`enumerative_series`] (`p(79)` is about 2.4e7).
pub const ENUMERATION_BUDGET: usize = 80;

/// Which statistics become exponents of `x` and `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weighting {
    /// `x^stcrank y^srank`.
    StcrankSrank,
    /// `x^O(pi) y^O(pi')`, odd parts of the partition and of its conjugate.
    OddParts,
    /// `x^crank`, except that `(1)` contributes `x + 1/x - 1`.
    Crank,
    /// `y^srank`.
    Srank,
    /// `+1` when srank is `0 mod 4`, `-1` when it is `2 mod 4`.
    SrankSign,
    /// `y^srank`, restricted to partitions with no repeated even part.
    SrankDistinctEvens,
    /// `x^(srank/2) y^srank`, restricted to partitions with no repeated even part.
    HalfSrankDistinctEvens,
    /// `1` for every t-core.
    Cores(u32),
    /// `1` for every partition.
    Count,
}

/// `w(x, pi)`: `x + 1/x - 1` for `pi = (1)`, otherwise `x^crank(pi)`.
pub fn crank_weight(pi: &Partition) -> LaurentPoly {
    if pi.parts() == [1] {
        let mut w = LaurentPoly::monomial(1, 1, 0);
        w.add_term(-1, 0, 1.into());
        w.add_term(0, 0, (-1).into());
        w
    } else {
        LaurentPoly::monomial(1, pi.ag_crank() as i32, 0)
    }
}

fn no_repeated_even(pi: &Partition) -> bool {
    bijection1(pi).pi1.is_empty()
}

impl Weighting {
    /// The monomial contributed by `pi`, or `None` if it is excluded.
    pub fn weight(&self, pi: &Partition) -> Option<LaurentPoly> {
        let mono = |c: i64, x: i64, y: i64| Some(LaurentPoly::monomial(c, x as i32, y as i32));
        match *self {
            Weighting::StcrankSrank => mono(1, stcrank(pi), pi.srank()),
            Weighting::OddParts => {
                mono(1, pi.odd_parts() as i64, pi.conjugate().odd_parts() as i64)
            }
            Weighting::Crank => Some(crank_weight(pi)),
            Weighting::Srank => mono(1, 0, pi.srank()),
            Weighting::SrankSign => {
                let sign = if pi.srank().rem_euclid(4) == 0 { 1 } else { -1 };
                mono(sign, 0, 0)
            }
            Weighting::SrankDistinctEvens => {
                no_repeated_even(pi).then(|| LaurentPoly::monomial(1, 0, pi.srank() as i32))
            }
            Weighting::HalfSrankDistinctEvens => no_repeated_even(pi).then(|| {
                let s = pi.srank();
                LaurentPoly::monomial(1, (s / 2) as i32, s as i32)
            }),
            Weighting::Cores(t) => is_t_core(pi, t).unwrap_or(false).then(LaurentPoly::one),
            Weighting::Count => Some(LaurentPoly::one()),
        }
    }
}

/// `sum_{|pi| < order} q^|pi| weighting(pi)`.
pub fn enumerative_series(order: usize, weighting: Weighting) -> Result<Series> {
    enumerative_series_with(order, |pi| weighting.weight(pi))
}

/// Like [`enumerative_series`] with an arbitrary per-partition weight.
pub fn enumerative_series_with(
    order: usize,
    weight: impl Fn(&Partition) -> Option<LaurentPoly>,
) -> Result<Series> {
    if order > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded {
            order,
            budget: ENUMERATION_BUDGET,
        });
    }
    let mut coeffs = Vec::with_capacity(order);
    for n in 0..order {
        let mut c = LaurentPoly::zero();
        for pi in partitions(n as u32) {
            if let Some(w) = weight(&pi) {
                c += &w;
            }
        }
        coeffs.push(c);
    }
    Ok(Series::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn g_series_low_terms() {
        let g = enumerative_series(6, Weighting::StcrankSrank).unwrap();
        assert_eq!(g.coeff(0), LaurentPoly::one());
        assert_eq!(g.coeff(1), LaurentPoly::one());
    }

    #[test]
    fn odd_parts_table_entry() {
        let s = enumerative_series(6, Weighting::OddParts).unwrap();
        assert_eq!(s.coeff(4).coeff(2, 2), BigInt::from(2));
    }

    #[test]
    fn crank_weight_of_one() {
        let s = enumerative_series(3, Weighting::Crank).unwrap();
        assert_eq!(s.coeff(1).to_string(), "x^-1 - 1 + x");
    }

    #[test]
    fn budget() {
        assert!(matches!(
            enumerative_series(ENUMERATION_BUDGET + 1, Weighting::Count),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
