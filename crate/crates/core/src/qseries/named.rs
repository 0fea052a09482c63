//! Closed forms: infinite products, theta-type lattice sums and the
//! classical series they are compared against.

use std::fmt;
use std::str::FromStr;

use crate::cores::{isqrt, nvectors_up_to};
use crate::error::{Error, Result};

use super::series::{QMonomial, Series};

/// Every closed-form series that can be built by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedSeries {
    /// `(q;q)_inf`.
    Euler,
    /// `1/(q;q)_inf`.
    Partitions,
    /// `(q^4;q^4)(-q;q^2) / (xq^4, q^4/x, xy^2q^2, q^2/(xy^2); q^4)`.
    StcrankProduct,
    /// `(-xyq;q^2) / ((q^4;q^4)(x^2q^2;q^4)(y^2q^2;q^4))`.
    OddPartsProduct,
    /// `(q;q) / ((xq;q)(q/x;q))`.
    CrankProduct,
    /// `(-q;q^2) / ((q^4;q^4)(-q^2;q^4)^2)`.
    StanleyProduct,
    /// `(-q;q^2) / ((y^2q^2;q^4)(q^2/y^2;q^4))`.
    SrankProduct,
    /// `(q^t;q^t)^t / (q;q)`.
    CoreProduct(u32),
    /// `sum q^((t/2)|n|^2 + b.n)` over zero-sum integer t-vectors.
    CoreLattice(u32),
    /// `sum q^Q(alpha)` over integer 5-vectors with unit sum.
    AlphaLattice,
    /// `5 (q^5;q^5)^5 / (q;q)^6`.
    RamanujanProduct,
    /// `sum_n x^n q^(n^2)`.
    TripleSum,
    /// `(q^2, -xq, -q/x; q^2)`.
    TripleProduct,
    /// `(q^4;q^4)(-q;q^2)`.
    TriangularProduct,
    /// `(q^4, -q^3, -q; q^4)`.
    TriangularTriple,
    /// `sum_n q^(2n^2 + n)`.
    TriangularQuadratic,
    /// `sum_k q^(k(k+1)/2)`.
    Triangular,
    /// `(1 - x^2)(x^2q^2, q^2/x^2, q^2; q^2)`.
    EvenProduct,
    /// `sum_m (-1)^m q^(m(m+1)) (x^(-2m) - x^(2m+2))`.
    EvenSum,
}

impl NamedSeries {
    /// Representatives of every variant (parametrized ones at `t = 5`).
    pub fn all() -> Vec<NamedSeries> {
        use NamedSeries::*;
        vec![
            Euler,
            Partitions,
            StcrankProduct,
            OddPartsProduct,
            CrankProduct,
            StanleyProduct,
            SrankProduct,
            CoreProduct(5),
            CoreLattice(5),
            AlphaLattice,
            RamanujanProduct,
            TripleSum,
            TripleProduct,
            TriangularProduct,
            TriangularTriple,
            TriangularQuadratic,
            Triangular,
            EvenProduct,
            EvenSum,
        ]
    }

    /// Builds the series truncated to `order`.
    pub fn build(&self, order: usize) -> Result<Series> {
        use NamedSeries::*;
        let mut s = Series::one(order);
        match *self {
            Euler => s.mul_pochhammer(QMonomial::q(1), 1)?,
            Partitions => s.div_pochhammer(QMonomial::q(1), 1)?,
            StcrankProduct => {
                s.mul_pochhammer(QMonomial::q(4), 4)?;
                s.mul_pochhammer(QMonomial::neg_q(1), 2)?;
                for a in [
                    QMonomial::new(1, 1, 0, 4),
                    QMonomial::new(1, -1, 0, 4),
                    QMonomial::new(1, 1, 2, 2),
                    QMonomial::new(1, -1, -2, 2),
                ] {
                    s.div_pochhammer(a, 4)?;
                }
            }
            OddPartsProduct => {
                s.mul_pochhammer(QMonomial::new(-1, 1, 1, 1), 2)?;
                s.div_pochhammer(QMonomial::q(4), 4)?;
                s.div_pochhammer(QMonomial::new(1, 2, 0, 2), 4)?;
                s.div_pochhammer(QMonomial::new(1, 0, 2, 2), 4)?;
            }
            CrankProduct => {
                s.mul_pochhammer(QMonomial::q(1), 1)?;
                s.div_pochhammer(QMonomial::new(1, 1, 0, 1), 1)?;
                s.div_pochhammer(QMonomial::new(1, -1, 0, 1), 1)?;
            }
            StanleyProduct => {
                s.mul_pochhammer(QMonomial::neg_q(1), 2)?;
                s.div_pochhammer(QMonomial::q(4), 4)?;
                s.div_pochhammer(QMonomial::neg_q(2), 4)?;
                s.div_pochhammer(QMonomial::neg_q(2), 4)?;
            }
            SrankProduct => {
                s.mul_pochhammer(QMonomial::neg_q(1), 2)?;
                s.div_pochhammer(QMonomial::new(1, 0, 2, 2), 4)?;
                s.div_pochhammer(QMonomial::new(1, 0, -2, 2), 4)?;
            }
            CoreProduct(t) => {
                crate::cores::check_t(t)?;
                for _ in 0..t {
                    s.mul_pochhammer(QMonomial::q(t as i64), t as i64)?;
                }
                s.div_pochhammer(QMonomial::q(1), 1)?;
            }
            CoreLattice(t) => return core_lattice(t, order),
            AlphaLattice => return Ok(alpha_lattice(order)),
            RamanujanProduct => {
                for _ in 0..5 {
                    s.mul_pochhammer(QMonomial::q(5), 5)?;
                }
                for _ in 0..6 {
                    s.div_pochhammer(QMonomial::q(1), 1)?;
                }
                s = s.scale(5);
            }
            TripleSum => {
                s = Series::zero(order);
                let r = isqrt(order as i64);
                for n in -r..=r {
                    s.add_term((n * n) as usize, n as i32, 0, 1);
                }
            }
            TripleProduct => {
                s.mul_pochhammer(QMonomial::q(2), 2)?;
                s.mul_pochhammer(QMonomial::new(-1, 1, 0, 1), 2)?;
                s.mul_pochhammer(QMonomial::new(-1, -1, 0, 1), 2)?;
            }
            TriangularProduct => {
                s.mul_pochhammer(QMonomial::q(4), 4)?;
                s.mul_pochhammer(QMonomial::neg_q(1), 2)?;
            }
            TriangularTriple => {
                s.mul_pochhammer(QMonomial::q(4), 4)?;
                s.mul_pochhammer(QMonomial::neg_q(3), 4)?;
                s.mul_pochhammer(QMonomial::neg_q(1), 4)?;
            }
            TriangularQuadratic => {
                let r = isqrt(order as i64) + 1;
                return Ok(Series::from_exponents(
                    order,
                    (-r..=r).map(|n| 2 * n * n + n),
                ));
            }
            Triangular => {
                return Ok(Series::from_exponents(
                    order,
                    (0..)
                        .map(|k: i64| k * (k + 1) / 2)
                        .take_while(|&e| e < order as i64),
                ));
            }
            EvenProduct => {
                s.mul_pochhammer(QMonomial::new(1, 2, 0, 2), 2)?;
                s.mul_pochhammer(QMonomial::new(1, -2, 0, 2), 2)?;
                s.mul_pochhammer(QMonomial::q(2), 2)?;
                s.mul_binomial(QMonomial::new(1, 2, 0, 0));
            }
            EvenSum => {
                s = Series::zero(order);
                let mut m = 0i64;
                while m * (m + 1) < order as i64 {
                    let sign = if m % 2 == 0 { 1 } else { -1 };
                    let k = (m * (m + 1)) as usize;
                    s.add_term(k, -2 * m as i32, 0, sign);
                    s.add_term(k, 2 * m as i32 + 2, 0, -sign);
                    m += 1;
                }
            }
        }
        Ok(s)
    }
}

/// Lattice side of the t-core generating function.
fn core_lattice(t: u32, order: usize) -> Result<Series> {
    let max = order.saturating_sub(1) as u64;
    Ok(Series::from_exponents(
        order,
        nvectors_up_to(t, max)?.iter().map(|v| v.weight()),
    ))
}

/// `sum q^Q(alpha)` over `alpha` in `Z^5` with unit sum and `Q(alpha) < order`.
///
/// With `d_i = alpha_i - alpha_(i+1)` (cyclic), `Q = (1/2) sum d_i^2`, so each of
/// `d_0..d_3` is bounded by `sqrt(2 (order - 1))`, and `alpha_0` is recovered
/// from the unit sum.
fn alpha_lattice(order: usize) -> Series {
    let mut s = Series::zero(order);
    if order == 0 {
        return s;
    }
    let r = isqrt(2 * (order as i64 - 1));
    for d0 in -r..=r {
        for d1 in -r..=r {
            for d2 in -r..=r {
                for d3 in -r..=r {
                    let num = 1 + 4 * d0 + 3 * d1 + 2 * d2 + d3;
                    if num.rem_euclid(5) != 0 {
                        continue;
                    }
                    let d4 = -(d0 + d1 + d2 + d3);
                    let twice_q = d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3 + d4 * d4;
                    let q = twice_q / 2;
                    if (q as usize) < order {
                        s.add_term(q as usize, 0, 0, 1);
                    }
                }
            }
        }
    }
    s
}

impl fmt::Display for NamedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedSeries::*;
        match self {
            Euler => write!(f, "euler"),
            Partitions => write!(f, "partitions"),
            StcrankProduct => write!(f, "stcrank_product"),
            OddPartsProduct => write!(f, "odd_parts_product"),
            CrankProduct => write!(f, "crank_product"),
            StanleyProduct => write!(f, "stanley_product"),
            SrankProduct => write!(f, "srank_product"),
            CoreProduct(t) => write!(f, "core_product:{t}"),
            CoreLattice(t) => write!(f, "core_lattice:{t}"),
            AlphaLattice => write!(f, "alpha_lattice"),
            RamanujanProduct => write!(f, "ramanujan_product"),
            TripleSum => write!(f, "triple_sum"),
            TripleProduct => write!(f, "triple_product"),
            TriangularProduct => write!(f, "triangular_product"),
            TriangularTriple => write!(f, "triangular_triple"),
            TriangularQuadratic => write!(f, "triangular_quadratic"),
            Triangular => write!(f, "triangular"),
            EvenProduct => write!(f, "even_product"),
            EvenSum => write!(f, "even_sum"),
        }
    }
}

impl FromStr for NamedSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownSeries(s.to_string());
        if let Some((head, t)) = s.split_once(':') {
            let t: u32 = t.parse().map_err(|_| unknown())?;
            return match head {
                "core_product" => Ok(NamedSeries::CoreProduct(t)),
                "core_lattice" => Ok(NamedSeries::CoreLattice(t)),
                _ => Err(unknown()),
            };
        }
        NamedSeries::all()
            .into_iter()
            .find(|n| n.to_string() == s)
            .ok_or_else(unknown)
    }
}

/// Builds the series called `name` (see [`NamedSeries`]) to `order`.
pub fn build_named_series(name: &str, order: usize) -> Result<Series> {
    name.parse::<NamedSeries>()?.build(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn names_round_trip() {
        for n in NamedSeries::all() {
            assert_eq!(n.to_string().parse::<NamedSeries>().unwrap(), n);
        }
        assert!(matches!(
            build_named_series("nope", 5),
            Err(Error::UnknownSeries(_))
        ));
        assert!("core_product:x".parse::<NamedSeries>().is_err());
    }

    #[test]
    fn spot_values() {
        let r = build_named_series("ramanujan_product", 3).unwrap();
        assert_eq!(r.constant_coeff(0), BigInt::from(5));
        let tri = build_named_series("triangular_product", 11).unwrap();
        let expected = Series::from_exponents(11, [0, 1, 3, 6, 10]);
        assert_eq!(tri, expected);
        let c = build_named_series("core_product:5", 10).unwrap();
        assert_eq!(c.constant_coeff(9), BigInt::from(5));
    }

    #[test]
    fn alpha_lattice_low_terms() {
        let s = alpha_lattice(3);
        // q^1 counts 5-cores of 4, q^2 those of 9.
        assert_eq!(s.constant_coeff(0), BigInt::from(0));
        assert_eq!(s.constant_coeff(1), BigInt::from(5));
        assert_eq!(s.constant_coeff(2), BigInt::from(5));
    }
}
