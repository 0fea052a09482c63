//! Littlewood decomposition on the t-abacus.
//!
//! A partition with at most `N` parts (`N` a multiple of `t`) is encoded by
//! the beta-numbers `lambda_k + N - k`. Bead `b` sits on runner `b mod t` at
//! level `b div t`. The core is obtained by pushing every runner's beads to
//! the top; the quotient component `i` is the partition read off the gaps on
//! runner `i`. With `N` a multiple of `t`, runner `i` carries `N/t + n_i`
//! beads, where `n` is the n-vector of the core.

use crate::error::{Error, Result};
use crate::partition::Partition;

use super::vectors::NVector;

/// A t-core together with its t-quotient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoreQuotient {
    pub t: u32,
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl CoreQuotient {
    /// `|core| + t * sum |quotient_i|`.
    pub fn weight(&self) -> u32 {
        self.core.weight() + self.t * self.quotient.iter().map(Partition::weight).sum::<u32>()
    }
}

pub(crate) fn check_t(t: u32) -> Result<()> {
    if t < 2 {
        Err(Error::BadT(t))
    } else {
        Ok(())
    }
}

fn from_beta(mut beta: Vec<i64>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let n = beta.len() as i64;
    let parts = beta
        .iter()
        .enumerate()
        .map(|(k, &b)| b - (n - 1 - k as i64))
        .filter(|&x| x > 0)
        .map(|x| x as u32)
        .collect();
    Partition::from_sorted_unchecked(parts)
}

/// Bead levels per runner (descending) and the bead count `N`.
fn runners(pi: &Partition, t: u32) -> (Vec<Vec<i64>>, i64) {
    let t = t as usize;
    let len = pi.len();
    let n = (len + (t - len % t) % t) as i64;
    let mut levels = vec![Vec::new(); t];
    for k in 0..n as usize {
        let beta = pi.part(k + 1) as i64 + n - 1 - k as i64;
        levels[(beta % t as i64) as usize].push(beta / t as i64);
    }
    (levels, n)
}

fn runner_partition(levels: &[i64]) -> Partition {
    let c = levels.len() as i64;
    let parts = levels
        .iter()
        .enumerate()
        .map(|(s, &l)| l - (c - 1 - s as i64))
        .filter(|&x| x > 0)
        .map(|x| x as u32)
        .collect();
    Partition::from_sorted_unchecked(parts)
}

/// The abacus charges `beads on runner i - N/t`; for a t-core this is its n-vector.
pub(crate) fn charges(pi: &Partition, t: u32) -> Vec<i64> {
    let (levels, n) = runners(pi, t);
    let base = n / t as i64;
    levels.iter().map(|r| r.len() as i64 - base).collect()
}

/// Splits `pi` into its t-core and t-quotient.
pub fn littlewood_decompose(pi: &Partition, t: u32) -> Result<CoreQuotient> {
    check_t(t)?;
    let (levels, _) = runners(pi, t);
    let beta: Vec<i64> = levels
        .iter()
        .enumerate()
        .flat_map(|(j, r)| (0..r.len() as i64).map(move |l| j as i64 + t as i64 * l))
        .collect();
    Ok(CoreQuotient {
        t,
        core: from_beta(beta),
        quotient: levels.iter().map(|r| runner_partition(r)).collect(),
    })
}

/// Reassembles a partition from a t-core and a t-quotient.
pub fn littlewood_compose(cq: &CoreQuotient) -> Result<Partition> {
    check_t(cq.t)?;
    if cq.quotient.len() != cq.t as usize {
        return Err(Error::QuotientLength {
            got: cq.quotient.len(),
            t: cq.t,
        });
    }
    if !is_t_core(&cq.core, cq.t)? {
        return Err(Error::NotCore {
            partition: cq.core.to_string(),
            t: cq.t,
        });
    }
    let n = charges(&cq.core, cq.t);
    Ok(assemble(&n, &cq.quotient, cq.t))
}

/// Builds the partition whose runner `i` has charge `n_i` and quotient `quotient[i]`.
pub(crate) fn assemble(n: &[i64], quotient: &[Partition], t: u32) -> Partition {
    let base = n
        .iter()
        .zip(quotient)
        .map(|(&ni, q)| q.len() as i64 - ni)
        .chain(n.iter().map(|&ni| -ni))
        .max()
        .unwrap_or(0)
        .max(0);
    let mut beta = Vec::new();
    for (j, (&ni, q)) in n.iter().zip(quotient).enumerate() {
        let c = base + ni;
        for s in 0..c {
            let level = q.part(s as usize + 1) as i64 + c - 1 - s;
            beta.push(j as i64 + t as i64 * level);
        }
    }
    from_beta(beta)
}

/// The t-core with the given n-vector.
pub(crate) fn core_from_charges(n: &NVector) -> Partition {
    let empty = vec![Partition::empty(); n.t() as usize];
    assemble(n.coords(), &empty, n.t())
}

/// True iff no rim hook of length `t` can be removed, i.e. every runner is justified.
pub fn is_t_core(pi: &Partition, t: u32) -> Result<bool> {
    check_t(t)?;
    let (levels, _) = runners(pi, t);
    Ok(levels.iter().all(|r| {
        r.iter()
            .enumerate()
            .all(|(s, &l)| l == (r.len() - 1 - s) as i64)
    }))
}

/// Counts cells by residue `(column - row) mod t`.
pub fn residue_vector(pi: &Partition, t: u32) -> Result<Vec<u64>> {
    check_t(t)?;
    let t = t as i64;
    let mut r = vec![0u64; t as usize];
    for (i, &len) in pi.parts().iter().enumerate() {
        let row = i as i64 + 1;
        for col in 1..=len as i64 {
            r[(col - row).rem_euclid(t) as usize] += 1;
        }
    }
    Ok(r)
}

/// Removes one rim hook of length `t` from `pi`, if the diagram has one.
///
/// A cell `(i, j)` with hook length `t` determines the hook; removing it sets
/// rows `i..last` to `lambda_{r+1} - 1` and the last row of column `j` to `j - 1`.
pub fn strip_rim_hook(pi: &Partition, t: u32) -> Option<Partition> {
    let parts = pi.parts();
    let conj = pi.conjugate();
    for (i, &row_len) in parts.iter().enumerate() {
        for j in 0..row_len as usize {
            let arm = row_len as usize - j - 1;
            let leg = conj.part(j + 1) as usize - i - 1;
            if arm + leg + 1 == t as usize {
                let last = i + leg;
                let mut next = parts.to_vec();
                for r in i..last {
                    next[r] = parts[r + 1] - 1;
                }
                next[last] = j as u32;
                next.retain(|&x| x > 0);
                return Some(Partition::from_sorted_unchecked(next));
            }
        }
    }
    None
}

/// The t-core computed by repeatedly stripping rim hooks of length `t`.
/// Independent of the abacus; used as an oracle for [`littlewood_decompose`].
pub fn core_by_rim_hooks(pi: &Partition, t: u32) -> Result<Partition> {
    check_t(t)?;
    let mut cur = pi.clone();
    while let Some(next) = strip_rim_hook(&cur, t) {
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn residue_vectors() {
        assert_eq!(residue_vector(&Partition::empty(), 5).unwrap(), vec![0; 5]);
        assert_eq!(
            residue_vector(&p(&[5, 1, 1, 1, 1]), 5).unwrap(),
            vec![1, 2, 2, 2, 2]
        );
        assert_eq!(residue_vector(&p(&[1]), 5).unwrap(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn core_membership() {
        assert!(is_t_core(&p(&[2, 2, 2]), 5).unwrap());
        assert!(!is_t_core(&p(&[2, 2, 2, 2]), 5).unwrap());
        assert!(is_t_core(&p(&[5, 1, 1, 1, 1]), 5).unwrap());
        for n in 0..5 {
            for pi in partitions(n) {
                assert!(is_t_core(&pi, 5).unwrap());
            }
        }
        assert!(is_t_core(&p(&[1]), 1).is_err());
    }

    #[test]
    fn rim_hook_removal() {
        assert_eq!(strip_rim_hook(&p(&[2, 2]), 3), Some(p(&[1])));
        assert_eq!(strip_rim_hook(&p(&[5]), 5), Some(Partition::empty()));
        assert_eq!(strip_rim_hook(&p(&[5, 1, 1, 1, 1]), 5), None);
        assert_eq!(core_by_rim_hooks(&p(&[3, 3, 3]), 5).unwrap(), p(&[2, 2]));
    }

    #[test]
    fn decompose_known() {
        let cq = littlewood_decompose(&p(&[3, 3, 3]), 5).unwrap();
        assert_eq!(cq.core, p(&[2, 2]));
        assert_eq!(cq.weight(), 9);
        let core = p(&[5, 1, 1, 1, 1]);
        let cq = littlewood_decompose(&core, 5).unwrap();
        assert_eq!(cq.core, core);
        assert!(cq.quotient.iter().all(Partition::is_empty));
    }

    #[test]
    fn compose_rejects_non_core() {
        let cq = CoreQuotient {
            t: 5,
            core: p(&[2, 2, 2, 2]),
            quotient: vec![Partition::empty(); 5],
        };
        assert!(matches!(
            littlewood_compose(&cq),
            Err(Error::NotCore { .. })
        ));
        let short = CoreQuotient {
            t: 5,
            core: Partition::empty(),
            quotient: vec![Partition::empty(); 4],
        };
        assert!(littlewood_compose(&short).is_err());
    }

    #[test]
    fn round_trip_small() {
        for t in [2, 3, 5] {
            for n in 0..=14 {
                for pi in partitions(n) {
                    let cq = littlewood_decompose(&pi, t).unwrap();
                    assert_eq!(cq.weight(), n);
                    assert_eq!(littlewood_compose(&cq).unwrap(), pi);
                    assert_eq!(cq.core, core_by_rim_hooks(&pi, t).unwrap());
                }
            }
        }
    }
}
