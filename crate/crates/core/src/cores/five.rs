//! The 5-core crank and the maps built on 5-core coordinates.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};

use super::abacus::{assemble, littlewood_decompose, CoreQuotient};
use super::vectors::{
    alpha_from_n, n_from_alpha, nvectors_up_to, phi2, phi2_inverse, AlphaVector, NVector, RVector,
};

fn require_4_mod_5(pi: &Partition, stat: &'static str) -> Result<()> {
    let w = pi.weight();
    if w % 5 == 4 {
        Ok(())
    } else {
        Err(Error::StatisticDomain { stat, weight: w })
    }
}

/// `Phi(pi) = (alpha, quotient)` for `|pi| = 4 (mod 5)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaQuotient {
    pub alpha: AlphaVector,
    pub quotient: Vec<Partition>,
}

pub fn alpha_decompose(pi: &Partition) -> Result<AlphaQuotient> {
    require_4_mod_5(pi, "alpha decomposition")?;
    let cq = littlewood_decompose(pi, 5)?;
    let n = phi2(&cq.core, 5)?;
    Ok(AlphaQuotient {
        alpha: alpha_from_n(&n)?,
        quotient: cq.quotient,
    })
}

pub fn alpha_compose(aq: &AlphaQuotient) -> Partition {
    let n = n_from_alpha(&aq.alpha);
    assemble(n.coords(), &aq.quotient, 5)
}

/// `c5(pi) = 1 + sum i alpha_i (mod 5)`.
pub fn five_core_crank(pi: &Partition) -> Result<u32> {
    let aq = alpha_decompose(pi)?;
    Ok(crank_of_alpha(&aq.alpha))
}

fn crank_of_alpha(alpha: &AlphaVector) -> u32 {
    let s: i64 = alpha.0.iter().enumerate().map(|(i, &a)| i as i64 * a).sum();
    (1 + s).rem_euclid(5) as u32
}

/// The three expressions for the 5-core crank: alpha form,
/// `2(1 + n0 - n1 - n2 + n3)`, and `2 + sum_{i=-2}^{2} i r_{2-i}`.
///
/// The n- and r-forms are read from `pi` directly; adding a 5-rim hook adds one
/// cell of every residue, which leaves both unchanged.
pub fn five_core_crank_forms(pi: &Partition) -> Result<[u32; 3]> {
    let alpha_form = five_core_crank(pi)?;
    let r = RVector::of(pi, 5)?;
    let n = r.differences();
    let c = n.coords();
    let n_form = (2 * (1 + c[0] - c[1] - c[2] + c[3])).rem_euclid(5) as u32;
    let rc = r.counts();
    let r_sum: i64 = (-2i64..=2).map(|i| i * rc[(2 - i) as usize] as i64).sum();
    let r_form = (2 + r_sum).rem_euclid(5) as u32;
    Ok([alpha_form, n_form, r_form])
}

/// Which orbit operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitVariant {
    /// Rotate the alpha-vector, keep the quotient.
    Plain,
    /// Rotate the alpha-vector and permute the quotient as `(q4, q2, q3, q0, q1)`.
    SrankPreserving,
}

/// `(q4, q2, q3, q0, q1)`.
pub fn shift_quotient(q: &[Partition]) -> Vec<Partition> {
    vec![
        q[4].clone(),
        q[2].clone(),
        q[3].clone(),
        q[0].clone(),
        q[1].clone(),
    ]
}

/// One step of the orbit operator; raises the 5-core crank by one.
pub fn orbit_op(pi: &Partition, variant: OrbitVariant) -> Result<Partition> {
    let aq = alpha_decompose(pi)?;
    let quotient = match variant {
        OrbitVariant::Plain => aq.quotient,
        OrbitVariant::SrankPreserving => shift_quotient(&aq.quotient),
    };
    Ok(alpha_compose(&AlphaQuotient {
        alpha: aq.alpha.rotate(),
        quotient,
    }))
}

/// One orbit, members indexed by their 5-core crank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub members: [Partition; 5],
}

impl Orbit {
    /// Lexicographically least member (by parts).
    pub fn canonical(&self) -> &Partition {
        self.members.iter().min().expect("five members")
    }

    pub fn contains_core(&self) -> bool {
        self.members
            .iter()
            .any(|m| super::abacus::is_t_core(m, 5).unwrap_or(false))
    }
}

/// The orbit through `pi`. Fails if the five iterates do not have distinct
/// cranks or the fifth iterate is not `pi`.
pub fn orbit_of(pi: &Partition, variant: OrbitVariant) -> Result<Orbit> {
    let mut seq = vec![pi.clone()];
    for _ in 0..4 {
        let next = orbit_op(seq.last().expect("nonempty"), variant)?;
        seq.push(next);
    }
    let back = orbit_op(&seq[4], variant)?;
    assert_eq!(
        &back, pi,
        "fifth iterate of the orbit operator is not the identity"
    );
    let mut slots: [Option<Partition>; 5] = Default::default();
    for m in seq {
        let c = five_core_crank(&m)? as usize;
        assert!(
            slots[c].is_none(),
            "orbit of {pi} repeats crank residue {c}"
        );
        slots[c] = Some(m);
    }
    Ok(Orbit {
        members: slots.map(|s| s.expect("all residues present")),
    })
}

/// All orbits of partitions of `n` (with `n = 4 mod 5`).
///
/// Rows: the orbit containing 5-cores first, then by the srank class of the
/// crank-0 member, then by canonical member.
pub fn orbits(n: u32, variant: OrbitVariant) -> Result<Vec<Orbit>> {
    if n % 5 != 4 {
        return Err(Error::WeightResidue {
            weight: n,
            modulus: 5,
            residue: 4,
        });
    }
    let mut seen: HashSet<Partition> = HashSet::new();
    let mut out = Vec::new();
    for pi in partitions(n) {
        if seen.contains(&pi) {
            continue;
        }
        let orbit = orbit_of(&pi, variant)?;
        seen.extend(orbit.members.iter().cloned());
        out.push(orbit);
    }
    out.sort_by_cached_key(|o| {
        (
            !o.contains_core(),
            o.members[0].srank().rem_euclid(4),
            o.canonical().clone(),
        )
    });
    Ok(out)
}

fn require_five_core(core: &Partition) -> Result<NVector> {
    phi2(core, 5)
}

/// `n -> (n1+2n2+2n4+1, -n1-n2+n3+n4+1, 2n1+n2+2n3, -2n2-2n3-n4-1, -2n1-n3-2n4-1)`.
pub fn theta_nvector(n: &NVector) -> NVector {
    let c = n.coords();
    let (n1, n2, n3, n4) = (c[1], c[2], c[3], c[4]);
    NVector::new(vec![
        n1 + 2 * n2 + 2 * n4 + 1,
        -n1 - n2 + n3 + n4 + 1,
        2 * n1 + n2 + 2 * n3,
        -2 * n2 - 2 * n3 - n4 - 1,
        -2 * n1 - n3 - 2 * n4 - 1,
    ])
    .expect("image has zero sum")
}

/// Sends a 5-core of `n` to a crank-0 5-core of `5n + 4`.
pub fn theta_map(core: &Partition) -> Result<Partition> {
    let n = require_five_core(core)?;
    Ok(phi2_inverse(&theta_nvector(&n)))
}

/// `n -> (2n1, 1+2n4, 2n2, -1+2n0, 2n3)`.
pub fn quadrupling_nvector(n: &NVector) -> NVector {
    let c = n.coords();
    NVector::new(vec![
        2 * c[1],
        1 + 2 * c[4],
        2 * c[2],
        -1 + 2 * c[0],
        2 * c[3],
    ])
    .expect("image has zero sum")
}

/// Sends a 5-core of `n` to a 5-core of `4n + 3` with srank `0 mod 4`.
pub fn quadrupling_map(core: &Partition) -> Result<Partition> {
    let n = require_five_core(core)?;
    Ok(phi2_inverse(&quadrupling_nvector(&n)))
}

/// `sum (n_i + i)^3 mod 4`; equals the srank of the core mod 4.
pub fn srank_from_nvector(n: &NVector) -> u32 {
    n.coords()
        .iter()
        .enumerate()
        .map(|(i, &x)| (x + i as i64).pow(3))
        .sum::<i64>()
        .rem_euclid(4) as u32
}

/// `sum alpha_i alpha_{i+1} (alpha_i - alpha_{i+1}) mod 4`.
pub fn srank_from_alpha(alpha: &AlphaVector) -> u32 {
    let a = &alpha.0;
    (0..5)
        .map(|i| {
            let (x, y) = (a[i], a[(i + 1) % 5]);
            x * y * (x - y)
        })
        .sum::<i64>()
        .rem_euclid(4) as u32
}

/// `srank(core) + sum srank(q_i) + 2 sum |q_i| (n_i + i) (mod 4)` with the core
/// term taken from [`srank_from_nvector`].
pub fn srank_decompose(pi: &Partition) -> Result<u32> {
    let CoreQuotient { core, quotient, .. } = littlewood_decompose(pi, 5)?;
    let n = phi2(&core, 5)?;
    let mut s = srank_from_nvector(&n) as i64;
    for (i, (q, &ni)) in quotient.iter().zip(n.coords()).enumerate() {
        s += q.srank() + 2 * q.weight() as i64 * (ni + i as i64);
    }
    Ok(s.rem_euclid(4) as u32)
}

/// The alpha-vector form of [`srank_decompose`], for `|pi| = 4 (mod 5)`.
pub fn srank_decompose_alpha(pi: &Partition) -> Result<u32> {
    let AlphaQuotient { alpha, quotient } = alpha_decompose(pi)?;
    let a = alpha.0;
    let w: Vec<i64> = quotient.iter().map(|q| q.weight() as i64).collect();
    let mut s = srank_from_alpha(&alpha) as i64;
    s += quotient.iter().map(Partition::srank).sum::<i64>();
    s += 2
        * ((a[0] + a[4]) * w[0]
            + (a[2] + a[3]) * w[1]
            + (a[1] + a[2]) * w[2]
            + (a[0] + a[1]) * w[3]
            + (a[3] + a[4]) * w[4]);
    Ok(s.rem_euclid(4) as u32)
}

/// Optional restrictions for [`core_counts`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CoreFilter {
    /// 5-core crank residue; requires `t = 5` and `n = 4 (mod 5)`.
    pub crank: Option<u32>,
    /// srank residue mod 4.
    pub srank: Option<u32>,
}

/// The t-cores of `n` passing `filter`, in decreasing lexicographic order.
pub fn cores_matching(n: u32, t: u32, filter: CoreFilter) -> Result<Vec<Partition>> {
    if let Some(j) = filter.crank {
        if t != 5 || n % 5 != 4 {
            return Err(Error::IncompatibleFilter(format!(
                "crank residue needs t = 5 and n = 4 mod 5 (t = {t}, n = {n})"
            )));
        }
        if j >= 5 {
            return Err(Error::IncompatibleFilter(format!(
                "crank residue {j} out of range"
            )));
        }
    }
    if let Some(i) = filter.srank {
        if i >= 4 {
            return Err(Error::IncompatibleFilter(format!(
                "srank residue {i} out of range"
            )));
        }
    }
    let mut out = Vec::new();
    for n_vec in nvectors_up_to(t, n as u64)? {
        if n_vec.weight() != n as i64 {
            continue;
        }
        let core = phi2_inverse(&n_vec);
        if let Some(i) = filter.srank {
            if core.srank().rem_euclid(4) as u32 != i {
                continue;
            }
        }
        if let Some(j) = filter.crank {
            if crank_of_alpha(&alpha_from_n(&n_vec)?) != j {
                continue;
            }
        }
        out.push(core);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `a_t(n)`, optionally refined by 5-core crank and srank class.
pub fn core_counts(n: u32, t: u32, filter: CoreFilter) -> Result<u64> {
    Ok(cores_matching(n, t, filter)?.len() as u64)
}
