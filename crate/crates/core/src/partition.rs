//! The canonical partition type and the classical statistics on it.
//!
//! A [`Partition`] stores its parts in nonincreasing order; the frequency view
//! `(1^f1, 2^f2, ...)` is computed on demand.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition of a nonnegative integer: a nonincreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition, the unique partition of zero.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts that are already positive and nonincreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParts(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary positive parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// Builds a partition from `(part, frequency)` pairs in any order.
    pub fn from_frequencies<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut parts = Vec::new();
        for (part, freq) in pairs {
            parts.extend(std::iter::repeat_n(part, freq as usize));
        }
        Self::from_unsorted(parts)
    }

    /// Internal constructor for callers that already guarantee the invariant.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th largest part (1-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        i.checked_sub(1)
            .and_then(|k| self.parts.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn largest(&self) -> u32 {
        self.part(1)
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of times `i` occurs as a part.
    pub fn frequency(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// Frequencies indexed by part; index 0 is unused and always zero.
    pub fn frequencies(&self) -> Vec<u32> {
        let mut f = vec![0; self.largest() as usize + 1];
        for &p in &self.parts {
            f[p as usize] += 1;
        }
        f
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition::from_sorted_unchecked(parts)
    }

    /// Number of odd parts.
    pub fn odd_parts(&self) -> u32 {
        self.parts.iter().filter(|&&p| p % 2 == 1).count() as u32
    }

    /// Stanley's rank: odd parts of the partition minus odd parts of its conjugate.
    pub fn srank(&self) -> i64 {
        self.odd_parts() as i64 - self.conjugate().odd_parts() as i64
    }

    /// Dyson's rank: largest part minus number of parts; zero for the empty partition.
    pub fn dyson_rank(&self) -> i64 {
        self.largest() as i64 - self.len() as i64
    }

    /// The Andrews-Garvan crank.
    ///
    /// With `mu` the number of ones, the crank is the largest part when `mu = 0`
    /// and otherwise the number of parts larger than `mu`, minus `mu`.
    pub fn ag_crank(&self) -> i64 {
        let ones = self.frequency(1);
        if ones == 0 {
            self.largest() as i64
        } else {
            let larger = self.parts.iter().filter(|&&p| p > ones).count() as i64;
            larger - ones as i64
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Frequency notation token `1^a.2^b...` used by CSV output; empty for `()`.
    pub fn to_token(&self) -> String {
        self.frequency_pairs()
            .map(|(p, f)| format!("{p}^{f}"))
            .collect::<Vec<_>>()
            .join(".")
    }

    /// `(part, frequency)` pairs in increasing part order.
    pub fn frequency_pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let mut i = self.parts.len();
        std::iter::from_fn(move || {
            if i == 0 {
                return None;
            }
            let p = self.parts[i - 1];
            let mut f = 0;
            while i > 0 && self.parts[i - 1] == p {
                i -= 1;
                f += 1;
            }
            Some((p, f))
        })
    }
}

/// Frequency notation, e.g. `(1^4,5^1)`; the empty partition prints as `()`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .frequency_pairs()
            .map(|(p, m)| format!("{p}^{m}"))
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "({body})")
    }
}

/// Parses `(1^4,5^1)`, the CSV token `1^4.5^1`, or plain parts `5,1,1,1,1`
/// (in any order). `()` and the empty string give the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body)
            .trim();
        let mut parts = Vec::new();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        for item in body.split([',', '.', ' ']).filter(|t| !t.is_empty()) {
            let (p, f) = match item.split_once('^') {
                Some((p, f)) => (p, f.parse::<u32>().map_err(|_| bad())?),
                None => (item, 1),
            };
            let p: u32 = p.parse().map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(p, f as usize));
        }
        Partition::from_unsorted(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// All partitions of `n` in lexicographically decreasing order of their parts:
/// `(n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1^n)`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Self {
            current: Some(first),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::from_sorted_unchecked(cur.clone());
        // Rightmost part exceeding 1; everything after it is a run of ones.
        if let Some(k) = cur.iter().rposition(|&p| p > 1) {
            let mut next = cur;
            let mut rest = (next.len() - k - 1) as u32 + 1;
            next[k] -= 1;
            let cap = next[k];
            next.truncate(k + 1);
            while rest >= cap {
                next.push(cap);
                rest -= cap;
            }
            if rest > 0 {
                next.push(rest);
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Iterates over every partition of `n`.
pub fn partitions(n: u32) -> Partitions {
    Partitions::new(n)
}

/// `p(0..=n)` via Euler's pentagonal-number recurrence (no enumeration).
pub fn partition_counts_upto(n: usize) -> Vec<BigUint> {
    let mut p: Vec<BigUint> = Vec::with_capacity(n + 1);
    p.push(BigUint::one());
    for m in 1..=n {
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_plus = k % 2 == 1;
            let mut add = |idx: usize| {
                if sign_plus {
                    plus += &p[m - idx];
                } else {
                    minus += &p[m - idx];
                }
            };
            add(g1);
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                add(g2);
            }
        }
        p.push(plus - minus);
    }
    p
}

/// `p(n)` via the pentagonal-number recurrence.
pub fn partition_count(n: usize) -> BigUint {
    partition_counts_upto(n).pop().expect("nonempty table")
}
