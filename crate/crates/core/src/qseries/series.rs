use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::laurent::LaurentPoly;

/// `c * x^x * y^y * q^q`, the argument of a Pochhammer factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QMonomial {
    pub coeff: i64,
    pub x: i32,
    pub y: i32,
    pub q: i64,
}

impl QMonomial {
    pub const fn new(coeff: i64, x: i32, y: i32, q: i64) -> Self {
        Self { coeff, x, y, q }
    }

    /// `q^k`.
    pub const fn q(k: i64) -> Self {
        Self::new(1, 0, 0, k)
    }

    /// `-q^k`.
    pub const fn neg_q(k: i64) -> Self {
        Self::new(-1, 0, 0, k)
    }
}

/// A power series in `q` with [`LaurentPoly`] coefficients, tracked for
/// `q^0 .. q^(order-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<LaurentPoly>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = LaurentPoly::one();
        }
        s
    }

    /// Builds a series from coefficients; the order is their count.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        Self { coeffs }
    }

    /// Integer series `sum c_k q^k`.
    pub fn from_integers<I, T>(order: usize, values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (k, v) in values.into_iter().take(order).enumerate() {
            s.coeffs[k] = LaurentPoly::constant(v);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `q^k`; zero past the truncation.
    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Adds `c * x^ex * y^ey * q^k`; ignored when `k` is past the truncation.
    pub fn add_term(&mut self, k: usize, ex: i32, ey: i32, c: impl Into<BigInt>) {
        if let Some(slot) = self.coeffs.get_mut(k) {
            slot.add_term(ex, ey, c.into());
        }
    }

    /// Integer coefficient of `q^k x^0 y^0`.
    pub fn constant_coeff(&self, k: usize) -> BigInt {
        self.coeff(k).coeff(0, 0)
    }

    /// Multiplies by `(1 - a)` in place.
    pub fn mul_binomial(&mut self, a: QMonomial) {
        if a.q < 0 {
            panic!("negative q-power in binomial factor");
        }
        let shift = a.q as usize;
        let c = BigInt::from(-a.coeff);
        if shift == 0 {
            let old = self.coeffs.clone();
            for (slot, o) in self.coeffs.iter_mut().zip(&old) {
                slot.add_shifted(o, &c, a.x, a.y);
            }
            return;
        }
        for n in (shift..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_shifted(&lo[n - shift], &c, a.x, a.y);
        }
    }

    /// Divides by `(1 - a)` in place; `a` must carry a positive power of `q`.
    pub fn div_binomial(&mut self, a: QMonomial) -> Result<()> {
        if a.q <= 0 {
            return Err(Error::NonPositiveShift(a.q));
        }
        let shift = a.q as usize;
        let c = BigInt::from(a.coeff);
        for n in shift..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_shifted(&lo[n - shift], &c, a.x, a.y);
        }
        Ok(())
    }

    /// Multiplies by `(a; q^step)_inf = prod_{j>=0} (1 - a q^(j step))`.
    pub fn mul_pochhammer(&mut self, a: QMonomial, step: i64) -> Result<()> {
        for f in pochhammer_factors(a, step, self.order())? {
            self.mul_binomial(f);
        }
        Ok(())
    }

    /// Divides by `(a; q^step)_inf`.
    pub fn div_pochhammer(&mut self, a: QMonomial, step: i64) -> Result<()> {
        for f in pochhammer_factors(a, step, self.order())? {
            self.div_binomial(f)?;
        }
        Ok(())
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Series {
        let c = c.into();
        Series {
            coeffs: self.coeffs.iter().map(|p| p.shifted(&c, 0, 0)).collect(),
        }
    }

    /// Multiplies by `q^k`, dropping what falls past the truncation.
    pub fn shift_q(&self, k: usize) -> Series {
        let mut out = Series::zero(self.order());
        for (n, p) in self.coeffs.iter().enumerate() {
            if n + k < out.coeffs.len() {
                out.coeffs[n + k] = p.clone();
            }
        }
        out
    }

    /// Keeps the coefficients of `q^(step n + r)` as a series in `q^n`.
    pub fn dissect(&self, step: usize, r: usize, order: usize) -> Series {
        Series {
            coeffs: (0..order).map(|n| self.coeff(step * n + r)).collect(),
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Truncates (or zero-extends) to `order`.
    pub fn truncate(&self, order: usize) -> Series {
        Series {
            coeffs: (0..order).map(|k| self.coeff(k)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }
}

/// The factors `a q^(j step)` of `(a; q^step)_inf` below `order`.
fn pochhammer_factors(a: QMonomial, step: i64, order: usize) -> Result<Vec<QMonomial>> {
    if a.q <= 0 {
        return Err(Error::NonPositiveShift(a.q));
    }
    if step <= 0 {
        return Err(Error::NonPositiveShift(step));
    }
    let mut out = Vec::new();
    let mut q = a.q;
    while (q as usize) < order {
        out.push(QMonomial { q, ..a });
        q += step;
    }
    Ok(out)
}

/// `(a; q^step)_inf` truncated to `order`.
pub fn pochhammer_inf(a: QMonomial, step: i64, order: usize) -> Result<Series> {
    let mut s = Series::one(order);
    s.mul_pochhammer(a, step)?;
    Ok(s)
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({p})")?,
                1 => write!(f, "({p})*q")?,
                _ => write!(f, "({p})*q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

fn check_orders(a: &Series, b: &Series) {
    assert_eq!(a.order(), b.order(), "series orders differ");
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        check_orders(self, rhs);
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        check_orders(self, rhs);
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

/// Truncated product; the result has the smaller of the two orders.
impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = Series::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &(a * b);
            }
        }
        out
    }
}

impl Default for Series {
    fn default() -> Self {
        Series::zero(0)
    }
}

impl Series {
    /// Sum of `q^k` over the given exponents (repeats add up).
    pub fn from_exponents(order: usize, exponents: impl IntoIterator<Item = i64>) -> Series {
        let mut s = Series::zero(order);
        for e in exponents {
            if e >= 0 {
                s.add_term(e as usize, 0, 0, 1);
            }
        }
        s
    }

    /// Whether all coefficients are integers (no `x` or `y` dependence).
    pub fn is_scalar(&self) -> bool {
        self.coeffs
            .iter()
            .all(|p| p.terms().all(|(a, b, _)| a == 0 && b == 0))
    }

    /// The integer coefficients, or `None` if some coefficient depends on `x` or `y`.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.is_scalar()
            .then(|| self.coeffs.iter().map(|p| p.coeff(0, 0)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn euler_product_low_order() {
        let s = pochhammer_inf(QMonomial::q(1), 1, 8).unwrap();
        assert_eq!(ints(&s), vec![1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn pochhammer_edge_cases() {
        let s = pochhammer_inf(QMonomial::neg_q(1), 2, 10).unwrap();
        assert_eq!(s.constant_coeff(0), BigInt::from(1));
        let s = pochhammer_inf(QMonomial::new(1, 1, 0, 4), 4, 10).unwrap();
        assert_eq!(s.coeff(4), LaurentPoly::monomial(-1, 1, 0));
        assert!(matches!(
            pochhammer_inf(QMonomial::q(0), 1, 10),
            Err(Error::NonPositiveShift(0))
        ));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = QMonomial::new(3, 1, -2, 2);
        let mut s = pochhammer_inf(QMonomial::q(1), 1, 20).unwrap();
        let before = s.clone();
        s.mul_binomial(a);
        s.div_binomial(a).unwrap();
        assert_eq!(s, before);
    }

    #[test]
    fn partition_generating_function() {
        let mut s = Series::one(10);
        s.div_pochhammer(QMonomial::q(1), 1).unwrap();
        assert_eq!(ints(&s), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn dissection_and_shift() {
        let s = Series::from_integers(10, 0..10);
        assert_eq!(ints(&s.dissect(5, 4, 2)), vec![4, 9]);
        assert_eq!(ints(&s.shift_q(8)), vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
    }
}
