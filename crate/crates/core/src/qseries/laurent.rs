use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A formal variable of a [`LaurentPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Sparse Laurent polynomial in `x` and `y` with exact integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * x^ex * y^ey`.
    pub fn monomial(c: impl Into<BigInt>, ex: i32, ey: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(ex, ey, c.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^ex y^ey`.
    pub fn coeff(&self, ex: i32, ey: i32) -> BigInt {
        self.terms.get(&(ex, ey)).cloned().unwrap_or_default()
    }

    /// Terms in increasing `(x, y)` exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &BigInt)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn add_term(&mut self, ex: i32, ey: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((ex, ey)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c * x^dx * y^dy * other` to `self`.
    pub fn add_shifted(&mut self, other: &LaurentPoly, c: &BigInt, dx: i32, dy: i32) {
        for (&(a, b), v) in &other.terms {
            self.add_term(a + dx, b + dy, v * c);
        }
    }

    /// `c * x^dx * y^dy * self`.
    pub fn shifted(&self, c: &BigInt, dx: i32, dy: i32) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_shifted(self, c, dx, dy);
        out
    }

    /// Sum of all coefficients (evaluation at `x = y = 1`).
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes `var = 1`, leaving a polynomial in the other variable.
    pub fn set_one(&self, var: Var) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            match var {
                Var::X => out.add_term(0, b, c.clone()),
                Var::Y => out.add_term(a, 0, c.clone()),
            }
        }
        out
    }

    /// Min and max exponent of `var`, if nonzero.
    pub fn degree_range(&self, var: Var) -> Option<(i32, i32)> {
        let it = self.terms.keys().map(|&(a, b)| match var {
            Var::X => a,
            Var::Y => b,
        });
        let (mut lo, mut hi) = (i32::MAX, i32::MIN);
        for e in it {
            lo = lo.min(e);
            hi = hi.max(e);
        }
        (lo <= hi).then_some((lo, hi))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&(a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("x", a), ("y", b)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            out.add_shifted(rhs, c, a, b);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = LaurentPoly::monomial(3, 1, -2);
        p.add_term(1, -2, BigInt::from(-3));
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn arithmetic() {
        let x = LaurentPoly::monomial(1, 1, 0);
        let xinv = LaurentPoly::monomial(1, -1, 0);
        let one = LaurentPoly::one();
        let w = &(&x + &xinv) - &one;
        assert_eq!(w.to_string(), "x^-1 - 1 + x");
        let sq = &w * &w;
        assert_eq!(sq.coeff(0, 0), BigInt::from(3));
        assert_eq!(sq.coeff(2, 0), BigInt::from(1));
        assert_eq!(sq.coeff(1, 0), BigInt::from(-2));
        assert_eq!(sq.value_at_one(), BigInt::from(1));
        assert_eq!(sq.degree_range(Var::X), Some((-2, 2)));
        assert!((&sq + &(-&sq)).is_zero());
    }

    #[test]
    fn substitution() {
        let p = &LaurentPoly::monomial(2, 1, 2) + &LaurentPoly::monomial(-1, 3, 2);
        assert_eq!(p.set_one(Var::X), LaurentPoly::monomial(1, 0, 2));
        assert_eq!(p.set_one(Var::Y).coeff(3, 0), BigInt::from(-1));
    }
}
