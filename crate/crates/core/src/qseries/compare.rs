//! Exact comparison of truncated series, and the cyclic-reduction test that
//! stands in for evaluation at roots of unity.

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::laurent::{LaurentPoly, Var};
use super::series::Series;

/// Outcome of [`assert_equal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    /// The lowest power of `q` where the sides differ, with both coefficients.
    Differs {
        power: usize,
        lhs: LaurentPoly,
        rhs: LaurentPoly,
    },
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }

    /// `lhs - rhs` at the first differing power, if any.
    pub fn delta(&self) -> Option<LaurentPoly> {
        match self {
            Comparison::Equal => None,
            Comparison::Differs { lhs, rhs, .. } => Some(lhs - rhs),
        }
    }
}

/// Coefficientwise comparison; both sides must have the same order.
pub fn assert_equal(lhs: &Series, rhs: &Series) -> Result<Comparison> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch(lhs.order(), rhs.order()));
    }
    for (k, (a, b)) in lhs.coeffs().iter().zip(rhs.coeffs()).enumerate() {
        if a != b {
            return Ok(Comparison::Differs {
                power: k,
                lhs: a.clone(),
                rhs: b.clone(),
            });
        }
    }
    Ok(Comparison::Equal)
}

/// The q-exponents `residue, residue + step, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progression {
    pub residue: usize,
    pub step: usize,
}

impl Progression {
    pub const fn new(residue: usize, step: usize) -> Self {
        Self { residue, step }
    }

    pub const fn all() -> Self {
        Self::new(0, 1)
    }
}

/// Optional split of each coefficient by the class of the other variable's
/// exponent before reducing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Split {
    pub var: Var,
    pub modulus: u32,
}

/// A coefficient whose residue totals are not all equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicFailure {
    pub power: usize,
    /// Class of the split variable, when splitting.
    pub class: Option<u32>,
    /// Totals per residue `0..m` of the reduced variable.
    pub totals: Vec<BigInt>,
}

/// Outcome of [`cyclic_reduce_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicVerdict {
    /// Number of q-coefficients examined.
    pub checked: usize,
    /// The first failing coefficient, if any.
    pub failure: Option<CyclicFailure>,
}

impl CyclicVerdict {
    pub fn all_equal(&self) -> bool {
        self.failure.is_none()
    }
}

fn exponent(var: Var, a: i32, b: i32) -> i32 {
    match var {
        Var::X => a,
        Var::Y => b,
    }
}

/// Reduces `var` modulo `var^m - 1` and returns the `m` residue totals,
/// restricted to terms whose `split` exponent lies in `class`.
pub fn residue_totals(
    p: &LaurentPoly,
    var: Var,
    m: u32,
    split: Option<(Split, u32)>,
) -> Vec<BigInt> {
    let mut totals = vec![BigInt::from(0); m as usize];
    for (a, b, c) in p.terms() {
        if let Some((sp, class)) = split {
            if exponent(sp.var, a, b).rem_euclid(sp.modulus as i32) as u32 != class {
                continue;
            }
        }
        let r = exponent(var, a, b).rem_euclid(m as i32) as usize;
        totals[r] += c;
    }
    totals
}

/// For every tracked power of `q` in the progression, reduces `var` modulo
/// `var^m - 1` and checks that all `m` residue totals coincide, which for
/// prime `m` is the same as the coefficient vanishing at a primitive `m`-th
/// root of unity. With a split, each class of the other variable is checked
/// separately.
pub fn cyclic_reduce_check(
    s: &Series,
    var: Var,
    m: u32,
    progression: Progression,
    split: Option<Split>,
) -> Result<CyclicVerdict> {
    if m == 0 || split.is_some_and(|sp| sp.modulus == 0) || progression.step == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut checked = 0;
    for k in (progression.residue..s.order()).step_by(progression.step) {
        checked += 1;
        let coeff = &s.coeffs()[k];
        let classes: Vec<Option<u32>> = match split {
            None => vec![None],
            Some(sp) => (0..sp.modulus).map(Some).collect(),
        };
        for class in classes {
            let totals = residue_totals(coeff, var, m, split.zip(class));
            if totals.iter().any(|t| *t != totals[0]) {
                return Ok(CyclicVerdict {
                    checked,
                    failure: Some(CyclicFailure {
                        power: k,
                        class,
                        totals,
                    }),
                });
            }
        }
    }
    Ok(CyclicVerdict {
        checked,
        failure: None,
    })
}
