//! Integer coordinates for t-cores: residue vectors, n-vectors and (for t = 5)
//! alpha-vectors.

use crate::error::{Error, Result};
use crate::partition::Partition;

use super::abacus::{self, check_t};

/// Number of cells of each residue `(column - row) mod t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RVector {
    counts: Vec<u64>,
}

impl RVector {
    pub fn of(pi: &Partition, t: u32) -> Result<Self> {
        Ok(Self {
            counts: abacus::residue_vector(pi, t)?,
        })
    }

    pub fn t(&self) -> u32 {
        self.counts.len() as u32
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Total number of cells.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `n_i = r_i - r_{i+1}`, indices mod t.
    pub fn differences(&self) -> NVector {
        let t = self.counts.len();
        let coords = (0..t)
            .map(|i| self.counts[i] as i64 - self.counts[(i + 1) % t] as i64)
            .collect();
        NVector { coords }
    }
}

/// An integer vector with zero coordinate sum, coordinatizing a t-core.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NVector {
    coords: Vec<i64>,
}

impl NVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        check_t(coords.len() as u32)?;
        if coords.iter().sum::<i64>() != 0 {
            return Err(Error::NVectorSum(coords));
        }
        Ok(Self { coords })
    }

    pub fn zero(t: u32) -> Self {
        Self {
            coords: vec![0; t as usize],
        }
    }

    pub fn t(&self) -> u32 {
        self.coords.len() as u32
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// `b . n` with `b = (0, 1, ..., t-1)`.
    pub fn dot_b(&self) -> i64 {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, &x)| i as i64 * x)
            .sum()
    }

    /// `||n||^2`.
    pub fn norm_sq(&self) -> i64 {
        self.coords.iter().map(|x| x * x).sum()
    }

    /// Weight of the corresponding core: `(t/2) ||n||^2 + b . n`.
    pub fn weight(&self) -> i64 {
        // ||n||^2 = sum n_i = 0 (mod 2), so the halving is exact.
        self.t() as i64 * self.norm_sq() / 2 + self.dot_b()
    }
}

/// `phi2`: the n-vector of a t-core, `n_i = r_i - r_{i+1}` from its residue vector.
pub fn phi2(core: &Partition, t: u32) -> Result<NVector> {
    if !abacus::is_t_core(core, t)? {
        return Err(Error::NotCore {
            partition: core.to_string(),
            t,
        });
    }
    Ok(RVector::of(core, t)?.differences())
}

/// The t-core with the given n-vector.
pub fn phi2_inverse(n: &NVector) -> Partition {
    abacus::core_from_charges(n)
}

/// Coordinates on 5-cores of weight `4 mod 5` with unit coordinate sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlphaVector(pub [i64; 5]);

impl AlphaVector {
    pub fn new(alpha: [i64; 5]) -> Result<Self> {
        if alpha.iter().sum::<i64>() != 1 {
            return Err(Error::AlphaSum(alpha));
        }
        Ok(Self(alpha))
    }

    /// `Q(alpha) = ||alpha||^2 - sum alpha_i alpha_{i+1}` (cyclic).
    pub fn q(&self) -> i64 {
        let a = &self.0;
        let sq: i64 = a.iter().map(|x| x * x).sum();
        let cross: i64 = (0..5).map(|i| a[i] * a[(i + 1) % 5]).sum();
        sq - cross
    }

    /// Weight `5 Q - 1` of the 5-core with this alpha-vector.
    pub fn core_weight(&self) -> i64 {
        5 * self.q() - 1
    }

    /// The cyclic shift `(a4, a0, a1, a2, a3)`.
    pub fn rotate(&self) -> Self {
        let a = self.0;
        Self([a[4], a[0], a[1], a[2], a[3]])
    }
}

/// The linear change of variables from alpha-vectors to n-vectors.
pub fn n_from_alpha(alpha: &AlphaVector) -> NVector {
    let [a0, a1, a2, a3, a4] = alpha.0;
    NVector {
        coords: vec![a0 + a4, -a0 + a1 + a4, -a1 + a2, -a2 + a3 - a4, -a3 - a4],
    }
}

/// Inverse of [`n_from_alpha`]; defined when `t = 5` and `n . b = 4 (mod 5)`.
pub fn alpha_from_n(n: &NVector) -> Result<AlphaVector> {
    if n.t() != 5 {
        return Err(Error::BadT(n.t()));
    }
    if n.dot_b().rem_euclid(5) != 4 {
        return Err(Error::AlphaResidue(n.coords.clone()));
    }
    let c = &n.coords;
    let a4 = (c[0] - c[2] - 2 * c[3] - 3 * c[4] - 1).div_euclid(5);
    let a3 = -c[4] - a4;
    let a2 = -c[4] - c[3] - 2 * a4;
    let a1 = -c[4] - c[3] - c[2] - 2 * a4;
    let a0 = c[0] - a4;
    Ok(AlphaVector([a0, a1, a2, a3, a4]))
}

/// Every n-vector (zero sum) of length `t` whose core weight is at most `max_weight`.
///
/// Completing the square, `sum (t n_i + i)^2 = 2 t W + sum i^2`, which bounds
/// each coordinate; the enumeration is exhaustive.
pub fn nvectors_up_to(t: u32, max_weight: u64) -> Result<Vec<NVector>> {
    check_t(t)?;
    let tt = t as i64;
    let offset: i64 = (0..tt).map(|i| i * i).sum();
    let budget = 2 * tt * max_weight as i64 + offset;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t as usize);
    fn rec(
        t: i64,
        budget: i64,
        max_weight: i64,
        cur: &mut Vec<i64>,
        used: i64,
        out: &mut Vec<NVector>,
    ) {
        let i = cur.len() as i64;
        if i == t - 1 {
            let last = -cur.iter().sum::<i64>();
            let s = t * last + i;
            if used + s * s <= budget {
                cur.push(last);
                let v = NVector {
                    coords: cur.clone(),
                };
                if v.weight() <= max_weight {
                    out.push(v);
                }
                cur.pop();
            }
            return;
        }
        let room = budget - used;
        // |t x + i| <= sqrt(room)
        let r = isqrt(room);
        let lo = (-r - i).div_euclid(t) - 1;
        let hi = (r - i).div_euclid(t) + 1;
        for x in lo..=hi {
            let s = t * x + i;
            if s * s <= room {
                cur.push(x);
                rec(t, budget, max_weight, cur, used + s * s, out);
                cur.pop();
            }
        }
    }
    rec(tt, budget, max_weight as i64, &mut cur, 0, &mut out);
    Ok(out)
}

pub(crate) fn isqrt(x: i64) -> i64 {
    if x <= 0 {
        return 0;
    }
    let mut r = (x as f64).sqrt() as i64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// All t-cores of `n`, sorted in decreasing lexicographic order of parts.
pub fn t_cores(n: u32, t: u32) -> Result<Vec<Partition>> {
    let mut cores: Vec<Partition> = nvectors_up_to(t, n as u64)?
        .iter()
        .filter(|v| v.weight() == n as i64)
        .map(phi2_inverse)
        .collect();
    cores.sort_unstable_by(|a, b| b.cmp(a));
    Ok(cores)
}
