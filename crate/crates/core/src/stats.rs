//! Named integer statistics and residue-class counters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::cores::five_core_crank;
use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::stanley::stcrank;

/// A statistic that can be tabulated by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    Rank,
    Crank,
    Srank,
    Stcrank,
    /// The 5-core crank, defined only for weights `4 mod 5`.
    C5Core,
}

impl Statistic {
    pub const ALL: [Statistic; 5] = [
        Statistic::Rank,
        Statistic::Crank,
        Statistic::Srank,
        Statistic::Stcrank,
        Statistic::C5Core,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Statistic::Rank => "rank",
            Statistic::Crank => "crank",
            Statistic::Srank => "srank",
            Statistic::Stcrank => "stcrank",
            Statistic::C5Core => "c5core",
        }
    }

    /// Whether the statistic is defined on partitions of `n`.
    pub fn check_weight(&self, n: u32) -> Result<()> {
        if *self == Statistic::C5Core && n % 5 != 4 {
            return Err(Error::StatisticDomain {
                stat: "c5core",
                weight: n,
            });
        }
        Ok(())
    }

    pub fn value(&self, pi: &Partition) -> Result<i64> {
        Ok(match self {
            Statistic::Rank => pi.dyson_rank(),
            Statistic::Crank => pi.ag_crank(),
            Statistic::Srank => pi.srank(),
            Statistic::Stcrank => stcrank(pi),
            Statistic::C5Core => five_core_crank(pi)? as i64,
        })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

/// Number of partitions of `n` in each residue class of `stat` mod `m`.
/// Every residue `0..m` is present, possibly with count zero.
pub fn residue_counts(n: u32, stat: Statistic, m: u32) -> Result<BTreeMap<u32, BigUint>> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    stat.check_weight(n)?;
    let mut out: BTreeMap<u32, BigUint> = (0..m).map(|k| (k, BigUint::default())).collect();
    for pi in partitions(n) {
        let k = stat.value(&pi)?.rem_euclid(m as i64) as u32;
        *out.get_mut(&k).expect("residue in range") += 1u32;
    }
    Ok(out)
}
