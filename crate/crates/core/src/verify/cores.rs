use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::cores::{
    alpha_from_n, core_by_rim_hooks, five_core_crank, five_core_crank_forms, is_t_core,
    littlewood_compose, littlewood_decompose, nvectors_up_to, orbit_op, orbits, phi2, phi2_inverse,
    quadrupling_map, quadrupling_nvector, srank_decompose, srank_decompose_alpha, srank_from_alpha,
    srank_from_nvector, strip_rim_hook, theta_map, theta_nvector, NVector, OrbitVariant,
};
use crate::error::Result;
use crate::partition::{partition_count, partitions, Partition};
use crate::stats::{residue_counts, Statistic};

use super::golden::TABLE_ORBITS_NINE;
use super::{fail, pass, Check, Outcome, Params};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "abacus-vs-rim-hooks",
            statement: "the abacus t-core equals the core left by repeatedly removing rim t-hooks, for t in {2, 3, 5}",
            max_n: Some(20),
            order: None,
            run: abacus_vs_rim_hooks,
        },
        Check {
            name: "littlewood",
            statement: "pi -> (t-core, t-quotient) is invertible and |pi| = |core| + t * sum |quotient_i|, for t in {2, 3, 5}",
            max_n: Some(25),
            order: None,
            run: littlewood,
        },
        Check {
            name: "nvector-bijection",
            statement: "zero-sum n-vectors correspond to t-cores with |core| = (t/2)|n|^2 + b.n, for t in {2, 3, 5}",
            max_n: Some(40),
            order: None,
            run: nvector_bijection,
        },
        Check {
            name: "five-core-crank-forms",
            statement: "1 + sum i alpha_i, 2(1 + n0 - n1 - n2 + n3) and 2 + sum i r_(2-i) agree mod 5 on partitions of 5n+4",
            max_n: Some(49),
            order: None,
            run: crank_forms,
        },
        Check {
            name: "orbits-plain",
            statement: "rotating the alpha-vector splits the partitions of 5n+4 into orbits of size 5, one member per 5-core crank residue",
            max_n: Some(49),
            order: None,
            run: orbits_plain,
        },
        Check {
            name: "orbits-srank",
            statement: "rotating the alpha-vector and permuting the quotient as (q4,q2,q3,q0,q1) gives orbits of size 5 with constant srank mod 4; each srank class i has p_i(5n+4)/5 orbits",
            max_n: Some(49),
            order: None,
            run: orbits_srank,
        },
        Check {
            name: "orbits-table",
            statement: "the srank-preserving orbits of the partitions of 9 match the published table row for row",
            max_n: None,
            order: None,
            run: orbits_table,
        },
        Check {
            name: "core-multiplication",
            statement: "a_5(5n+4) = 5 a_5(n)",
            max_n: Some(40),
            order: None,
            run: core_multiplication,
        },
        Check {
            name: "theta-map",
            statement: "theta maps the 5-cores of n bijectively onto the 5-cores of 5n+4 with 5-core crank 0, preserving srank mod 4",
            max_n: Some(30),
            order: None,
            run: theta,
        },
        Check {
            name: "refined-core-counts",
            statement: "a_{5,i}(5n+4) = 5 a_{5,i}(n), a_{5,i}(n) = a^0_{5,i}(5n+4) and a^j_{5,i}(5n+4) = a_{5,i}(5n+4)/5 for i in {0, 2}",
            max_n: Some(30),
            order: None,
            run: refined_counts,
        },
        Check {
            name: "srank-zero-cores",
            statement: "a_{5,0}(4n) = a_5(4n), a_{5,0}(4n+1) = a_5(4n+1), a_{5,0}(4n+2) = 0 and a_{5,0}(4n+3) = a_5(n), the last witnessed by the quadrupling map",
            max_n: Some(60),
            order: None,
            run: srank_zero,
        },
        Check {
            name: "elegant-core",
            statement: "srank of a 5-core = sum (n_i + i)^3 mod 4, and = sum alpha_i alpha_(i+1) (alpha_i - alpha_(i+1)) mod 4 when its weight is 4 mod 5",
            max_n: Some(40),
            order: None,
            run: elegant_core,
        },
        Check {
            name: "elegant-decomposition",
            statement: "srank(pi) = srank(core) + sum srank(q_i) + 2 sum |q_i| (n_i + i) mod 4, with the alpha form when |pi| = 4 mod 5",
            max_n: Some(25),
            order: None,
            run: elegant_decomposition,
        },
    ]
}

/// 5-cores of every weight up to `max`, with their n-vectors.
fn five_cores_by_weight(max: u32) -> Result<Vec<Vec<(NVector, Partition)>>> {
    let mut out = vec![Vec::new(); max as usize + 1];
    for v in nvectors_up_to(5, max as u64)? {
        let w = v.weight() as usize;
        let core = phi2_inverse(&v);
        out[w].push((v, core));
    }
    Ok(out)
}

fn abacus_vs_rim_hooks(p: &Params) -> Result<Outcome> {
    let mut total = 0u64;
    for t in [2, 3, 5] {
        for n in 0..=p.max_n {
            for pi in partitions(n) {
                total += 1;
                let abacus = littlewood_decompose(&pi, t)?.core;
                let stripped = core_by_rim_hooks(&pi, t)?;
                if abacus != stripped {
                    return fail(format!("{t}-core of {pi}"), stripped, abacus);
                }
                let core = is_t_core(&pi, t)?;
                let no_hook = strip_rim_hook(&pi, t).is_none();
                if core != no_hook {
                    return fail(format!("is {pi} a {t}-core"), no_hook, core);
                }
            }
        }
    }
    pass(format!("{total} (partition, t) pairs"))
}

fn littlewood(p: &Params) -> Result<Outcome> {
    for t in [2, 3, 5] {
        for n in 0..=p.max_n {
            for pi in partitions(n) {
                let cq = littlewood_decompose(&pi, t)?;
                if cq.weight() != n {
                    return fail(
                        format!("weight of the {t}-decomposition of {pi}"),
                        n,
                        cq.weight(),
                    );
                }
                if !is_t_core(&cq.core, t)? {
                    return fail(format!("{t}-core of {pi}"), "a t-core", &cq.core);
                }
                let back = littlewood_compose(&cq)?;
                if back != pi {
                    return fail(format!("{t}-round trip"), &pi, back);
                }
            }
        }
    }
    pass(format!("weights <= {}", p.max_n))
}

fn nvector_bijection(p: &Params) -> Result<Outcome> {
    let mut total = 0usize;
    for t in [2, 3, 5] {
        let vectors = nvectors_up_to(t, p.max_n as u64)?;
        let mut seen = HashSet::new();
        for v in &vectors {
            let core = phi2_inverse(v);
            if core.weight() as i64 != v.weight() {
                return fail(
                    format!("t={t} n={:?}", v.coords()),
                    v.weight(),
                    core.weight(),
                );
            }
            let back = phi2(&core, t)?;
            if &back != v {
                return fail(
                    format!("t={t} phi2({core})"),
                    format!("{:?}", v.coords()),
                    format!("{:?}", back.coords()),
                );
            }
            if !seen.insert(core.clone()) {
                return fail(format!("t={t}"), "distinct cores", format!("{core} twice"));
            }
        }
        for n in 0..=p.max_n.min(20) {
            let by_filter = partitions(n)
                .filter(|pi| is_t_core(pi, t).unwrap_or(false))
                .count();
            let by_lattice = vectors.iter().filter(|v| v.weight() == n as i64).count();
            if by_filter != by_lattice {
                return fail(format!("number of {t}-cores of {n}"), by_filter, by_lattice);
            }
        }
        total += vectors.len();
    }
    pass(format!("{total} n-vectors"))
}

fn crank_forms(p: &Params) -> Result<Outcome> {
    let mut n = 4;
    while n <= p.max_n {
        for pi in partitions(n) {
            let f = five_core_crank_forms(&pi)?;
            if f[1] != f[0] || f[2] != f[0] {
                return fail(format!("c5{pi}"), f[0], format!("{:?}", f));
            }
        }
        n += 5;
    }
    pass(format!("5n+4 <= {}", p.max_n))
}

/// Validates the orbit decomposition of the partitions of `n` independently
/// of how it was built. Returns the orbit count per srank class when every
/// orbit has constant srank mod 4.
fn check_orbits(
    n: u32,
    variant: OrbitVariant,
) -> Result<std::result::Result<BTreeMap<u32, u64>, Outcome>> {
    let list = orbits(n, variant)?;
    let mut covered = HashSet::new();
    let mut per_class: BTreeMap<u32, u64> = BTreeMap::new();
    let mut constant = true;
    for o in &list {
        for (k, m) in o.members.iter().enumerate() {
            if m.weight() != n {
                return fail(format!("orbit member {m}"), n, m.weight()).map(Err);
            }
            let c = five_core_crank(m)?;
            if c as usize != k {
                return fail(format!("c5{m}"), k, c).map(Err);
            }
            let next = orbit_op(m, variant)?;
            let want = &o.members[(k + 1) % 5];
            if &next != want {
                return fail(format!("operator on {m}"), want, next).map(Err);
            }
            if !covered.insert(m.clone()) {
                return fail(
                    format!("weight {n}"),
                    "disjoint orbits",
                    format!("{m} twice"),
                )
                .map(Err);
            }
        }
        let s = o.members[0].srank().rem_euclid(4) as u32;
        if o.members
            .iter()
            .any(|m| m.srank().rem_euclid(4) as u32 != s)
        {
            constant = false;
            if variant == OrbitVariant::SrankPreserving {
                let ranks: Vec<i64> = o.members.iter().map(Partition::srank).collect();
                return fail(
                    format!("srank along the orbit of {}", o.members[0]),
                    "constant mod 4",
                    format!("{ranks:?}"),
                )
                .map(Err);
            }
        }
        *per_class.entry(s).or_default() += 1;
    }
    let p_n = partition_count(n as usize);
    if num_bigint::BigUint::from(covered.len()) != p_n {
        return fail(format!("partitions of {n} in orbits"), p_n, covered.len()).map(Err);
    }
    if !constant {
        per_class.clear();
    }
    Ok(Ok(per_class))
}

fn orbits_plain(p: &Params) -> Result<Outcome> {
    let mut n = 4;
    let mut total = 0u64;
    while n <= p.max_n {
        match check_orbits(n, OrbitVariant::Plain)? {
            Ok(_) => total += u64::try_from(partition_count(n as usize)).unwrap_or(0) / 5,
            Err(f) => return Ok(f),
        }
        n += 5;
    }
    pass(format!("{total} orbits for 5n+4 <= {}", p.max_n))
}

fn orbits_srank(p: &Params) -> Result<Outcome> {
    let mut n = 4;
    let mut total = 0u64;
    while n <= p.max_n {
        let per_class = match check_orbits(n, OrbitVariant::SrankPreserving)? {
            Ok(c) => c,
            Err(f) => return Ok(f),
        };
        let by_srank = residue_counts(n, Statistic::Srank, 4)?;
        for i in [0u32, 2] {
            let want = &by_srank[&i] / 5u32;
            let got = per_class.get(&i).copied().unwrap_or(0);
            if num_bigint::BigUint::from(got) != want {
                return fail(format!("orbits of {n} in srank class {i}"), want, got);
            }
            total += got;
        }
        n += 5;
    }
    pass(format!("{total} orbits for 5n+4 <= {}", p.max_n))
}

fn orbits_table(_: &Params) -> Result<Outcome> {
    let mut expected = BTreeSet::new();
    for (s, row) in TABLE_ORBITS_NINE {
        let members = row
            .iter()
            .map(|m| m.parse())
            .collect::<Result<Vec<Partition>>>()?;
        expected.insert((*s, members));
    }
    let got: BTreeSet<(u32, Vec<Partition>)> = orbits(9, OrbitVariant::SrankPreserving)?
        .into_iter()
        .map(|o| {
            (
                o.members[0].srank().rem_euclid(4) as u32,
                o.members.to_vec(),
            )
        })
        .collect();
    let show = |row: &(u32, Vec<Partition>)| {
        let ms: Vec<String> = row.1.iter().map(ToString::to_string).collect();
        format!("srank {}: {}", row.0, ms.join(" "))
    };
    if let Some(missing) = expected.difference(&got).next() {
        let extra = got
            .difference(&expected)
            .next()
            .map(show)
            .unwrap_or_default();
        return fail("orbits of 9", show(missing), extra);
    }
    if let Some(extra) = got.difference(&expected).next() {
        return fail("orbits of 9", "no further rows", show(extra));
    }
    pass("6 orbits")
}

fn core_multiplication(p: &Params) -> Result<Outcome> {
    let cores = five_cores_by_weight(5 * p.max_n + 4)?;
    for n in 0..=p.max_n as usize {
        let (small, big) = (cores[n].len(), cores[5 * n + 4].len());
        if big != 5 * small {
            return fail(
                format!("a_5({})", 5 * n + 4),
                format!("5 * a_5({n}) = {}", 5 * small),
                big,
            );
        }
    }
    pass(format!("n <= {}", p.max_n))
}

fn theta(p: &Params) -> Result<Outcome> {
    let cores = five_cores_by_weight(5 * p.max_n + 4)?;
    for n in 0..=p.max_n as usize {
        let mut image = BTreeSet::new();
        for (v, core) in &cores[n] {
            let img = theta_map(core)?;
            if img.weight() as usize != 5 * n + 4 {
                return fail(format!("|theta{core}|"), 5 * n + 4, img.weight());
            }
            let c5 = five_core_crank(&img)?;
            if c5 != 0 {
                return fail(format!("c5(theta{core}) = c5{img}"), 0, c5);
            }
            if (img.srank() - core.srank()).rem_euclid(4) != 0 {
                return fail(
                    format!("srank mod 4 of {core} and theta = {img}"),
                    core.srank().rem_euclid(4),
                    img.srank().rem_euclid(4),
                );
            }
            let w = theta_nvector(v);
            let cubes = |x: &NVector| -> i64 {
                x.coords()
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| (c + i as i64).pow(3))
                    .sum()
            };
            if (cubes(v) - cubes(&w)).rem_euclid(4) != 0 {
                return fail(
                    format!("cube sums for n={:?}", v.coords()),
                    0,
                    (cubes(v) - cubes(&w)).rem_euclid(4),
                );
            }
            if !image.insert(img.clone()) {
                return fail(
                    format!("theta on 5-cores of {n}"),
                    "injective",
                    format!("{img} twice"),
                );
            }
        }
        let mut target = BTreeSet::new();
        for (_, c) in &cores[5 * n + 4] {
            if five_core_crank(c)? == 0 {
                target.insert(c.clone());
            }
        }
        if image != target {
            return fail(
                format!("crank-0 5-cores of {}", 5 * n + 4),
                target.len(),
                format!("{} in the image of theta", image.len()),
            );
        }
    }
    pass(format!("n <= {}", p.max_n))
}

/// `a^j_{5,i}(n)` keyed by `(srank class, crank residue)`; crank residue 5
/// collects weights not `4 mod 5`.
fn refined(cores: &[(NVector, Partition)]) -> Result<BTreeMap<(u32, u32), usize>> {
    let mut out = BTreeMap::new();
    for (_, core) in cores {
        let i = core.srank().rem_euclid(4) as u32;
        let j = if core.weight() % 5 == 4 {
            five_core_crank(core)?
        } else {
            5
        };
        *out.entry((i, j)).or_default() += 1;
    }
    Ok(out)
}

fn refined_counts(p: &Params) -> Result<Outcome> {
    let cores = five_cores_by_weight(5 * p.max_n + 4)?;
    for n in 0..=p.max_n as usize {
        let small = refined(&cores[n])?;
        let big = refined(&cores[5 * n + 4])?;
        for i in [0u32, 2] {
            let a_small: usize = small
                .iter()
                .filter(|((s, _), _)| *s == i)
                .map(|(_, c)| c)
                .sum();
            let per_j: Vec<usize> = (0..5)
                .map(|j| big.get(&(i, j)).copied().unwrap_or(0))
                .collect();
            let a_big: usize = per_j.iter().sum();
            if a_big != 5 * a_small {
                return fail(format!("a_5,{i}({})", 5 * n + 4), 5 * a_small, a_big);
            }
            if per_j[0] != a_small {
                return fail(format!("a^0_5,{i}({})", 5 * n + 4), a_small, per_j[0]);
            }
            if let Some(j) = (0..5).find(|&j| per_j[j] != a_small) {
                return fail(format!("a^{j}_5,{i}({})", 5 * n + 4), a_small, per_j[j]);
            }
        }
    }
    pass(format!("n <= {}", p.max_n))
}

fn srank_zero(p: &Params) -> Result<Outcome> {
    let cores = five_cores_by_weight(p.max_n)?;
    let zero = |m: usize| {
        cores[m]
            .iter()
            .filter(|(_, c)| c.srank().rem_euclid(4) == 0)
            .count()
    };
    for m in 0..=p.max_n as usize {
        let (a, a0) = (cores[m].len(), zero(m));
        let expected = match m % 4 {
            0 | 1 => a,
            2 => 0,
            _ => cores[(m - 3) / 4].len(),
        };
        if a0 != expected {
            return fail(format!("a_5,0({m})"), expected, a0);
        }
        if m % 4 == 3 {
            let n = (m - 3) / 4;
            let mut image = BTreeSet::new();
            for (v, core) in &cores[n] {
                let img = quadrupling_map(core)?;
                if img.weight() as usize != m || img.srank().rem_euclid(4) != 0 {
                    return fail(
                        format!("quadrupling{core}"),
                        format!("weight {m}, srank 0 mod 4"),
                        format!("{img}: weight {}, srank {}", img.weight(), img.srank()),
                    );
                }
                if phi2(&img, 5)? != quadrupling_nvector(v) {
                    return fail(
                        format!("n-vector of quadrupling{core}"),
                        format!("{:?}", quadrupling_nvector(v).coords()),
                        format!("{:?}", phi2(&img, 5)?.coords()),
                    );
                }
                image.insert(img);
            }
            let target: BTreeSet<Partition> = cores[m]
                .iter()
                .filter(|(_, c)| c.srank().rem_euclid(4) == 0)
                .map(|(_, c)| c.clone())
                .collect();
            if image != target {
                return fail(
                    format!("srank-0 5-cores of {m}"),
                    target.len(),
                    format!("{} in the image", image.len()),
                );
            }
        }
    }
    pass(format!("arguments <= {}", p.max_n))
}

fn elegant_core(p: &Params) -> Result<Outcome> {
    let cores = five_cores_by_weight(p.max_n)?;
    let mut total = 0;
    for (v, core) in cores.iter().flatten() {
        total += 1;
        let direct = core.srank().rem_euclid(4) as u32;
        let cubes = srank_from_nvector(v);
        if cubes != direct {
            return fail(
                format!("srank{core} via n = {:?}", v.coords()),
                direct,
                cubes,
            );
        }
        if core.weight() % 5 == 4 {
            let a = alpha_from_n(v)?;
            let via_alpha = srank_from_alpha(&a);
            if via_alpha != direct {
                return fail(
                    format!("srank{core} via alpha = {:?}", a.0),
                    direct,
                    via_alpha,
                );
            }
        }
    }
    pass(format!("{total} 5-cores"))
}

fn elegant_decomposition(p: &Params) -> Result<Outcome> {
    let mut total = 0u64;
    for n in 0..=p.max_n {
        for pi in partitions(n) {
            total += 1;
            let direct = pi.srank().rem_euclid(4) as u32;
            let via = srank_decompose(&pi)?;
            if via != direct {
                return fail(format!("srank{pi} from core and quotient"), direct, via);
            }
            if n % 5 == 4 {
                let via_alpha = srank_decompose_alpha(&pi)?;
                if via_alpha != direct {
                    return fail(
                        format!("srank{pi} from alpha and quotient"),
                        direct,
                        via_alpha,
                    );
                }
            }
        }
    }
    pass(format!("{total} partitions"))
}
