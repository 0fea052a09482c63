//! The stcrank statistic and the two bijections it is built from.
//!
//! Even-part extraction splits `pi` into `(pi1, pi2)` where `pi2` has no
//! repeated even parts and `|pi| = 4|pi1| + |pi2|`. Partitions with
//! `pi1 = (1)` (type A) are paired with a family of partitions having
//! `pi1 = ()` (type B), and the crank of `pi1` is corrected on type B so that
//! the generating function factors as a crank product times an srank product.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};

/// Image of even-part extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bijection1Image {
    /// Part `i` occurs `floor(f_{2i} / 2)` times.
    pub pi1: Partition,
    /// `pi` with each even frequency reduced to its parity.
    pub pi2: Partition,
}

/// Removes the maximal even number of copies of each even part.
pub fn bijection1(pi: &Partition) -> Bijection1Image {
    let mut pi1 = Vec::new();
    let mut pi2 = Vec::new();
    for (part, freq) in pi.frequency_pairs() {
        if part % 2 == 0 {
            pi1.extend(std::iter::repeat_n(part / 2, (freq / 2) as usize));
            if freq % 2 == 1 {
                pi2.push(part);
            }
        } else {
            pi2.extend(std::iter::repeat_n(part, freq as usize));
        }
    }
    Bijection1Image {
        pi1: Partition::from_unsorted(pi1).expect("positive parts"),
        pi2: Partition::from_unsorted(pi2).expect("positive parts"),
    }
}

/// Inverse of [`bijection1`]. Fails if `pi2` repeats an even part.
pub fn bijection1_inverse(image: &Bijection1Image) -> Result<Partition> {
    if image
        .pi2
        .frequency_pairs()
        .any(|(p, f)| p % 2 == 0 && f > 1)
    {
        return Err(Error::InvalidParts(image.pi2.parts().to_vec()));
    }
    let mut parts = image.pi2.parts().to_vec();
    for &p in image.pi1.parts() {
        parts.push(2 * p);
        parts.push(2 * p);
    }
    Partition::from_unsorted(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeClass {
    TypeA,
    TypeB,
    Other,
}

fn has_repeated_even_part(pi: &Partition) -> bool {
    pi.frequency_pairs().any(|(p, f)| p % 2 == 0 && f > 1)
}

/// Type A iff `pi1 = (1)`. Type B iff `pi = (3,1)`, or all of: `|pi| != 4`,
/// `l1 - l2 >= 2`, `l1' - l2' >= 2`, not (`l1 - 2 = l2` with `l2` even),
/// and no repeated even parts. A missing second part counts as `l2 = 0`.
pub fn classify(pi: &Partition) -> TypeClass {
    if bijection1(pi).pi1.parts() == [1] {
        return TypeClass::TypeA;
    }
    if pi.parts() == [3, 1] {
        return TypeClass::TypeB;
    }
    let l1 = pi.largest() as i64;
    let l2 = pi.part(2) as i64;
    // l1' - l2' is the number of ones.
    let conj_gap = pi.frequency(1) as i64;
    let clash = l1 - 2 == l2 && l2 % 2 == 0;
    if pi.weight() != 4 && l1 - l2 >= 2 && conj_gap >= 2 && !clash && !has_repeated_even_part(pi) {
        TypeClass::TypeB
    } else {
        TypeClass::Other
    }
}

/// Sends a type-A partition to its type-B partner, preserving weight and srank.
pub fn bijection2(pi_a: &Partition) -> Result<Partition> {
    if classify(pi_a) != TypeClass::TypeA {
        return Err(Error::NotTypeA(pi_a.to_string()));
    }
    let m = pi_a.largest();
    let f2 = pi_a.frequency(2);
    let mut parts = pi_a.parts().to_vec();
    let remove = |parts: &mut Vec<u32>, value: u32, count: usize| {
        for _ in 0..count {
            let at = parts
                .iter()
                .position(|&p| p == value)
                .expect("part present");
            parts.remove(at);
        }
    };
    if m > 2 {
        remove(&mut parts, 2, 2);
        remove(&mut parts, m, 1);
        parts.extend([1, 1, m + 2]);
    } else if f2 == 3 {
        remove(&mut parts, 2, 3);
        parts.extend([1, 1, 4]);
    } else {
        remove(&mut parts, 2, 2);
        parts.extend([1, 3]);
    }
    Partition::from_unsorted(parts)
}

/// Inverse of [`bijection2`].
pub fn bijection2_inverse(pi_b: &Partition) -> Result<Partition> {
    if classify(pi_b) != TypeClass::TypeB {
        return Err(Error::NotTypeB(pi_b.to_string()));
    }
    let top = pi_b.largest();
    let mut parts = pi_b.parts()[1..].to_vec();
    let drop_ones = |parts: &mut Vec<u32>, count: usize| {
        for _ in 0..count {
            let last = parts.pop();
            debug_assert_eq!(last, Some(1));
        }
    };
    match top {
        3 => {
            drop_ones(&mut parts, 1);
            parts.extend([2, 2]);
        }
        4 if pi_b.part(2) <= 1 => {
            drop_ones(&mut parts, 2);
            parts.extend([2, 2, 2]);
        }
        _ => {
            drop_ones(&mut parts, 2);
            parts.extend([2, 2, top - 2]);
        }
    }
    Partition::from_unsorted(parts)
}

/// `Psi(pi)`: 1 on type B, 0 elsewhere.
pub fn psi(pi: &Partition) -> i64 {
    i64::from(classify(pi) == TypeClass::TypeB)
}

/// `crank(pi1) + srank(pi)/2 + Psi(pi)`.
pub fn stcrank(pi: &Partition) -> i64 {
    stcrank_with(pi, psi)
}

/// stcrank with a caller-supplied correction term in place of `Psi`.
pub fn stcrank_with(pi: &Partition, correction: impl Fn(&Partition) -> i64) -> i64 {
    let srank = pi.srank();
    assert!(srank % 2 == 0, "srank of {pi} is odd");
    bijection1(pi).pi1.ag_crank() + srank / 2 + correction(pi)
}

/// `P_i(k, m, n)` for `i in {0, 2}` (srank mod 4) and `k in 0..m` (stcrank mod m).
pub fn refined_counts(n: u32, m: u32) -> Result<BTreeMap<(u32, u32), BigUint>> {
    refined_counts_by(n, m, stcrank)
}

/// Like [`refined_counts`] but with any integer statistic in place of stcrank.
pub fn refined_counts_by(
    n: u32,
    m: u32,
    stat: impl Fn(&Partition) -> i64,
) -> Result<BTreeMap<(u32, u32), BigUint>> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut out: BTreeMap<(u32, u32), BigUint> = [0, 2]
        .into_iter()
        .flat_map(|i| (0..m).map(move |k| ((i, k), BigUint::default())))
        .collect();
    for pi in partitions(n) {
        let i = pi.srank().rem_euclid(4) as u32;
        let k = stat(&pi).rem_euclid(m as i64) as u32;
        *out.entry((i, k)).or_default() += 1u32;
    }
    Ok(out)
}

/// `S(n, r, s)`: partitions of `n` with `r` odd parts whose conjugate has `s` odd parts.
pub fn joint_srs_table(n: u32) -> BTreeMap<(u32, u32), BigUint> {
    let mut out: BTreeMap<(u32, u32), BigUint> = BTreeMap::new();
    for pi in partitions(n) {
        let key = (pi.odd_parts(), pi.conjugate().odd_parts());
        *out.entry(key).or_default() += 1u32;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn bijection1_examples() {
        let img = bijection1(&p(&[2, 2, 1, 1, 1, 1, 1]));
        assert_eq!(img.pi1, p(&[1]));
        assert_eq!(img.pi2, p(&[1, 1, 1, 1, 1]));
        let img = bijection1(&p(&[3, 3, 3]));
        assert_eq!(img.pi1, Partition::empty());
        assert_eq!(img.pi2, p(&[3, 3, 3]));
        let img = bijection1(&p(&[4, 4, 4, 2, 2]));
        assert_eq!(img.pi1, p(&[2, 1]));
        assert_eq!(img.pi2, p(&[4]));
        assert_eq!(bijection1_inverse(&img).unwrap(), p(&[4, 4, 4, 2, 2]));
    }

    #[test]
    fn bijection1_inverse_rejects_repeated_evens() {
        let bad = Bijection1Image {
            pi1: Partition::empty(),
            pi2: p(&[2, 2]),
        };
        assert!(bijection1_inverse(&bad).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&p(&[2, 2])), TypeClass::TypeA);
        assert_eq!(classify(&p(&[3, 1])), TypeClass::TypeB);
        assert_eq!(classify(&p(&[5, 1, 1])), TypeClass::TypeB);
        assert_eq!(classify(&p(&[1])), TypeClass::Other);
        assert_eq!(classify(&p(&[9])), TypeClass::Other);
        // l1 - 2 = l2 = 4, both even
        assert_eq!(classify(&p(&[6, 4, 1, 1])), TypeClass::Other);
        // l1 - 2 = l2 = 3 is odd
        assert_eq!(classify(&p(&[5, 3, 1, 1])), TypeClass::TypeB);
    }

    #[test]
    fn bijection2_examples() {
        assert_eq!(bijection2(&p(&[2, 2])).unwrap(), p(&[3, 1]));
        assert_eq!(bijection2(&p(&[2, 2, 2])).unwrap(), p(&[4, 1, 1]));
        assert_eq!(bijection2(&p(&[3, 2, 2])).unwrap(), p(&[5, 1, 1]));
        assert_eq!(p(&[3, 2, 2]).srank(), -2);
        assert_eq!(p(&[5, 1, 1]).srank(), -2);
        for b in [p(&[3, 1]), p(&[4, 1, 1]), p(&[5, 1, 1])] {
            assert_eq!(bijection2(&bijection2_inverse(&b).unwrap()).unwrap(), b);
        }
    }

    #[test]
    fn bijection2_domain_errors() {
        assert!(matches!(bijection2(&p(&[3, 1])), Err(Error::NotTypeA(_))));
        assert!(matches!(
            bijection2_inverse(&p(&[2, 2])),
            Err(Error::NotTypeB(_))
        ));
    }

    #[test]
    fn stcrank_examples() {
        assert_eq!(stcrank(&p(&[3, 3, 3])), 0);
        assert_eq!(stcrank(&p(&[1; 9])), 4);
        assert_eq!(stcrank(&p(&[9])), -4);
        assert_eq!(stcrank(&p(&[1])), 0);
        assert_eq!(stcrank(&Partition::empty()), 0);
    }

    #[test]
    fn refined_counts_examples() {
        let t = refined_counts(9, 5).unwrap();
        for k in 0..5 {
            assert_eq!(t[&(0, k)], BigUint::from(4u32));
            assert_eq!(t[&(2, k)], BigUint::from(2u32));
        }
        let t = refined_counts(0, 5).unwrap();
        assert_eq!(t[&(0, 0)], BigUint::from(1u32));
        let rest: BigUint = t
            .iter()
            .filter(|(k, _)| **k != (0, 0))
            .map(|(_, v)| v)
            .sum();
        assert_eq!(rest, BigUint::default());
        let total: BigUint = refined_counts(4, 5).unwrap().values().sum();
        assert_eq!(total, BigUint::from(5u32));
    }

    #[test]
    fn joint_table_examples() {
        assert_eq!(joint_srs_table(0)[&(0, 0)], BigUint::from(1u32));
        assert_eq!(joint_srs_table(4)[&(2, 2)], BigUint::from(2u32));
        let total: BigUint = joint_srs_table(9).values().sum();
        assert_eq!(total, BigUint::from(30u32));
    }
}
