use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Result;
use crate::partition::{partition_counts_upto, partitions};
use crate::stats::{residue_counts, Statistic};

use super::{fail, pass, Check, Outcome, Params};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "partition-count",
            statement: "the number of enumerated partitions of n equals p(n) from the pentagonal recurrence",
            max_n: Some(60),
            order: None,
            run: partition_count,
        },
        Check {
            name: "conjugation",
            statement: "conjugation is an involution; srank is even, changes sign under conjugation, and vanishes on self-conjugate partitions",
            max_n: Some(30),
            order: None,
            run: conjugation,
        },
        Check {
            name: "rank-equidistribution",
            statement: "Dyson's rank splits the partitions of 5n+4 (mod 5) and of 7n+5 (mod 7) into equal classes",
            max_n: Some(49),
            order: None,
            run: rank_equidistribution,
        },
        Check {
            name: "crank-equidistribution",
            statement: "the crank splits the partitions of 5n+4, 7n+5 and 11n+6 into equal classes mod 5, 7 and 11",
            max_n: Some(49),
            order: None,
            run: crank_equidistribution,
        },
        Check {
            name: "crank-mod10",
            statement: "M(2k+a, 10, 5n+4) = M(a, 2, 5n+4)/5 for a in {0, 1} and all k",
            max_n: Some(49),
            order: None,
            run: crank_mod10,
        },
        Check {
            name: "congruences",
            statement: "p(5n+4), p_0(5n+4) and p_2(5n+4) are divisible by 5, p_2(5n+4) by 10, p(7n+5) by 7 and p(11n+6) by 11",
            max_n: Some(49),
            order: None,
            run: congruences,
        },
    ]
}

fn partition_count(p: &Params) -> Result<Outcome> {
    let expected = partition_counts_upto(p.max_n as usize);
    for n in 0..=p.max_n {
        let got = partitions(n).count();
        if BigUint::from(got) != expected[n as usize] {
            return fail(format!("n={n}"), &expected[n as usize], got);
        }
    }
    pass(format!(
        "p(n) for n <= {}, p({}) = {}",
        p.max_n, p.max_n, expected[p.max_n as usize]
    ))
}

fn conjugation(p: &Params) -> Result<Outcome> {
    let mut total = 0u64;
    for n in 0..=p.max_n {
        for pi in partitions(n) {
            total += 1;
            let c = pi.conjugate();
            if c.conjugate() != pi {
                return fail(&pi, &pi, c.conjugate());
            }
            let s = pi.srank();
            if s % 2 != 0 {
                return fail(&pi, "even srank", s);
            }
            if c.srank() != -s {
                return fail(format!("{pi} conjugate"), -s, c.srank());
            }
            if c == pi && s != 0 {
                return fail(format!("{pi} self-conjugate"), 0, s);
            }
        }
    }
    pass(format!("{total} partitions"))
}

/// Checks that `stat` mod `m` is constant on partitions of `r, r+m, ... <= max_n`.
fn equidistributed(stat: Statistic, m: u32, r: u32, max_n: u32) -> Result<Option<Outcome>> {
    let mut n = r;
    while n <= max_n {
        let counts = residue_counts(n, stat, m)?;
        let first = &counts[&0];
        if let Some((k, c)) = counts.iter().find(|(_, c)| *c != first) {
            return fail(
                format!("{stat} mod {m} on partitions of {n}, residue {k}"),
                first,
                c,
            )
            .map(Some);
        }
        n += m;
    }
    Ok(None)
}

fn rank_equidistribution(p: &Params) -> Result<Outcome> {
    for (m, r) in [(5, 4), (7, 5)] {
        if let Some(f) = equidistributed(Statistic::Rank, m, r, p.max_n)? {
            return Ok(f);
        }
    }
    pass(format!("moduli 5 and 7 up to weight {}", p.max_n))
}

fn crank_equidistribution(p: &Params) -> Result<Outcome> {
    for (m, r) in [(5, 4), (7, 5), (11, 6)] {
        if let Some(f) = equidistributed(Statistic::Crank, m, r, p.max_n)? {
            return Ok(f);
        }
    }
    pass(format!("moduli 5, 7 and 11 up to weight {}", p.max_n))
}

fn crank_mod10(p: &Params) -> Result<Outcome> {
    let mut n = 4;
    while n <= p.max_n {
        let m10 = residue_counts(n, Statistic::Crank, 10)?;
        let m2 = residue_counts(n, Statistic::Crank, 2)?;
        for a in 0..2u32 {
            if !(&m2[&a] % 5u32).is_zero() {
                return fail(format!("M({a},2,{n})"), "a multiple of 5", &m2[&a]);
            }
            let expected = &m2[&a] / 5u32;
            for k in 0..5u32 {
                let got = &m10[&(2 * k + a)];
                if *got != expected {
                    return fail(format!("M({},10,{n})", 2 * k + a), &expected, got);
                }
            }
        }
        n += 5;
    }
    pass(format!("5n+4 <= {}", p.max_n))
}

fn congruences(p: &Params) -> Result<Outcome> {
    let mut n = 4;
    while n <= p.max_n {
        let by_class = residue_counts(n, Statistic::Srank, 4)?;
        let (p0, p2) = (&by_class[&0], &by_class[&2]);
        let total = p0 + p2;
        for (label, value, modulus) in [
            ("p", &total, 5u32),
            ("p_0", p0, 5),
            ("p_2", p2, 5),
            ("p_2", p2, 10),
        ] {
            if !(value % modulus).is_zero() {
                return fail(format!("{label}({n}) mod {modulus}"), 0, value % modulus);
            }
        }
        n += 5;
    }
    let counts = partition_counts_upto(p.max_n as usize);
    for (m, r) in [(7u32, 5u32), (11, 6)] {
        let mut n = r;
        while n <= p.max_n {
            let v = &counts[n as usize];
            if !(v % m).is_zero() {
                return fail(format!("p({n}) mod {m}"), 0, v % m);
            }
            n += m;
        }
    }
    pass(format!("arguments <= {}", p.max_n))
}
