//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::{Duration, Instant};

use rpl::cores::{core_by_rim_hooks, five_core_crank, littlewood_decompose, orbits, OrbitVariant};
use rpl::qseries::{cyclic_reduce_check, NamedSeries, Progression, Split, Var};
use rpl::stanley::stcrank;
use rpl::verify::{find_check, Overrides};
use rpl::{partition_count, partitions, Partition};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const TABLE_1: &[(u32, u32, &[&str])] = &[
    (
        0,
        0,
        &["(3^3)", "(1^3,2^1,4^1)", "(1^1,3^1,5^1)", "(4^1,5^1)"],
    ),
    (0, 1, &["(1^5,2^2)", "(1^4,5^1)", "(1^2,2^1,5^1)", "(9^1)"]),
    (
        0,
        2,
        &["(1^4,2^1,3^1)", "(1^3,3^2)", "(1^1,4^2)", "(2^2,5^1)"],
    ),
    (
        0,
        3,
        &["(1^1,2^4)", "(1^6,3^1)", "(1^1,2^1,6^1)", "(2^1,7^1)"],
    ),
    (0, 4, &["(1^9)", "(1^2,2^2,3^1)", "(2^3,3^1)", "(1^2,7^1)"]),
    (2, 0, &["(1^3,2^3)", "(1^3,6^1)"]),
    (2, 1, &["(1^1,2^1,3^2)", "(1^2,3^1,4^1)"]),
    (2, 2, &["(1^5,4^1)", "(1^1,8^1)"]),
    (2, 3, &["(1^7,2^1)", "(1^1,2^2,4^1)"]),
    (2, 4, &["(2^1,3^1,4^1)", "(3^1,6^1)"]),
];

const TABLE_2: &[[&str; 5]] = &[
    [
        "(1^4,5^1)",
        "(1^3,3^2)",
        "(1^4,2^1,3^1)",
        "(1^1,2^1,6^1)",
        "(2^2,5^1)",
    ],
    [
        "(1^5,2^2)",
        "(2^3,3^1)",
        "(1^2,7^1)",
        "(4^1,5^1)",
        "(1^3,2^1,4^1)",
    ],
    ["(3^3)", "(1^9)", "(1^1,3^1,5^1)", "(1^2,2^2,3^1)", "(9^1)"],
    [
        "(2^1,7^1)",
        "(1^2,2^1,5^1)",
        "(1^1,2^4)",
        "(1^6,3^1)",
        "(1^1,4^2)",
    ],
    [
        "(1^3,2^3)",
        "(1^3,6^1)",
        "(2^1,3^1,4^1)",
        "(1^1,8^1)",
        "(1^2,3^1,4^1)",
    ],
    [
        "(3^1,6^1)",
        "(1^1,2^2,4^1)",
        "(1^7,2^1)",
        "(1^1,2^1,3^2)",
        "(1^5,4^1)",
    ],
];

fn parse(s: &str) -> Partition {
    s.parse().expect("golden partition")
}

/// p(n) for n <= max by the coin-change recurrence, independent of the
/// library's pentagonal recurrence.
fn partition_numbers(max: usize) -> Vec<u128> {
    let mut p = vec![0u128; max + 1];
    p[0] = 1;
    for part in 1..=max {
        for n in part..=max {
            p[n] += p[n - part];
        }
    }
    p
}

/// t-core test by hook lengths: no cell has a hook of length divisible by t.
fn is_core_by_hooks(pi: &Partition, t: u32) -> bool {
    let conj = pi.conjugate();
    for (i, &row) in pi.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row - j as u32 - 1;
            let leg = conj.parts()[j] - i as u32 - 1;
            if (arm + leg + 1).is_multiple_of(t) {
                return false;
            }
        }
    }
    true
}

fn rpl(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_rpl"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("rpl {args:?} exited with {}", out.status));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.records()
        .map(|rec| rec.expect("csv row").iter().map(String::from).collect())
        .collect()
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    if took <= limit {
        Ok(())
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn run_check(name: &str, max_n: Option<u32>, order: Option<usize>) -> Result<String, String> {
    let check = find_check(name).map_err(|e| e.to_string())?;
    let report = check
        .run(&Overrides {
            max_n,
            order,
            mutation: None,
        })
        .map_err(|e| format!("{name}: {e}"))?;
    match report.counterexample {
        None => Ok(format!("{name} ok")),
        Some(c) => Err(format!(
            "{name}: {} expected {} got {}",
            c.input, c.expected, c.actual
        )),
    }
}

fn table_1() -> Outcome {
    let start = Instant::now();
    let out = rpl(&["classify", "--n", "9", "--format", "csv"])?;
    let mut cells: BTreeMap<(u32, u32), BTreeSet<Partition>> = BTreeMap::new();
    for row in csv_rows(&out) {
        let key = (row[0].parse().unwrap(), row[1].parse().unwrap());
        cells.entry(key).or_default().insert(parse(&row[2]));
    }
    let expected: BTreeMap<(u32, u32), BTreeSet<Partition>> = TABLE_1
        .iter()
        .map(|&(r, c, ps)| ((r, c), ps.iter().map(|s| parse(s)).collect()))
        .collect();
    if cells != expected {
        return Err("cells differ from the published table".into());
    }
    for ((r, _), ps) in &cells {
        let size = if *r == 0 { 4 } else { 2 };
        if ps.len() != size {
            return Err(format!("cell size {} in row {r}", ps.len()));
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("30 partitions in 10 cells, {:?}", start.elapsed()))
}

fn table_2() -> Outcome {
    let start = Instant::now();
    let out = rpl(&[
        "orbits",
        "--n",
        "9",
        "--operator",
        "srank",
        "--format",
        "csv",
    ])?;
    let mut rows: BTreeMap<u32, Vec<Partition>> = BTreeMap::new();
    for row in csv_rows(&out) {
        let orbit: u32 = row[0].parse().unwrap();
        let c5: usize = row[1].parse().unwrap();
        let pi = parse(&row[3]);
        let members = rows.entry(orbit).or_default();
        if members.len() != c5 {
            return Err(format!("orbit {orbit}: column {c5} out of order"));
        }
        if five_core_crank(&pi).unwrap() as usize != c5 {
            return Err(format!("{pi} listed under crank residue {c5}"));
        }
        members.push(pi);
    }
    let got: BTreeSet<Vec<Partition>> = rows.into_values().collect();
    let expected: BTreeSet<Vec<Partition>> = TABLE_2
        .iter()
        .map(|r| r.iter().map(|s| parse(s)).collect())
        .collect();
    if got != expected {
        return Err("orbit rows differ from the published table".into());
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("6 orbits, {:?}", start.elapsed()))
}

fn theorem_1() -> Outcome {
    let start = Instant::now();
    let p = partition_numbers(49);
    for n in (4..=49).step_by(5) {
        let mut counts = [[0u64; 5]; 4];
        let mut total = 0u128;
        for pi in partitions(n) {
            let s = pi.srank().rem_euclid(4) as usize;
            let k = stcrank(&pi).rem_euclid(5) as usize;
            counts[s][k] += 1;
            total += 1;
        }
        if total != p[n as usize] {
            return Err(format!("enumerated {total} partitions of {n}"));
        }
        if counts[1].iter().chain(&counts[3]).any(|&c| c != 0) {
            return Err(format!("odd srank at weight {n}"));
        }
        for i in [0, 2] {
            let p_i: u64 = counts[i].iter().sum();
            if counts[i].iter().any(|&c| 5 * c != p_i) {
                return Err(format!("P_{i}(k,5,{n}) = {:?}", counts[i]));
            }
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!(
        "5n+4 <= 49, p(49) = {}, {:?}",
        p[49],
        start.elapsed()
    ))
}

fn theorem_2() -> Outcome {
    let start = Instant::now();
    let p = partition_numbers(49);
    let mut total = 0usize;
    for n in (4..=49).step_by(5) {
        let list = orbits(n, OrbitVariant::SrankPreserving).map_err(|e| e.to_string())?;
        let mut per_class = [0u128; 4];
        let mut seen = BTreeSet::new();
        for o in &list {
            let s = o.members[0].srank().rem_euclid(4);
            let mut residues = BTreeSet::new();
            for m in &o.members {
                if m.srank().rem_euclid(4) != s {
                    return Err(format!("srank varies along the orbit of {}", o.members[0]));
                }
                residues.insert(five_core_crank(m).unwrap());
                seen.insert(m.clone());
            }
            if residues.len() != 5 {
                return Err(format!(
                    "orbit of {} has residues {residues:?}",
                    o.members[0]
                ));
            }
            per_class[s as usize] += 1;
        }
        if seen.len() as u128 != p[n as usize] {
            return Err(format!("orbits of {n} cover {} partitions", seen.len()));
        }
        let mut p_i = [0u128; 4];
        for pi in partitions(n) {
            p_i[pi.srank().rem_euclid(4) as usize] += 1;
        }
        for i in [0, 2] {
            if 5 * per_class[i] != p_i[i] {
                return Err(format!(
                    "{} orbits in class {i} at {n}, p_{i} = {}",
                    per_class[i], p_i[i]
                ));
            }
        }
        total += list.len();
    }
    Ok(format!("{total} orbits, {:?}", start.elapsed()))
}

fn equidistributed(n: u32, m: i64, stat: impl Fn(&Partition) -> i64) -> bool {
    let mut counts = vec![0u64; m as usize];
    for pi in partitions(n) {
        counts[stat(&pi).rem_euclid(m) as usize] += 1;
    }
    counts.iter().all(|&c| c == counts[0])
}

fn congruences() -> Outcome {
    let p = partition_numbers(49);
    for n in (4..=49).step_by(5) {
        let (mut p0, mut p2) = (0u64, 0u64);
        for pi in partitions(n as u32) {
            match pi.srank().rem_euclid(4) {
                0 => p0 += 1,
                _ => p2 += 1,
            }
        }
        if !p[n].is_multiple_of(5) || p0 % 5 != 0 || p2 % 10 != 0 {
            return Err(format!("n={n}: p={} p0={p0} p2={p2}", p[n]));
        }
        if !equidistributed(n as u32, 5, Partition::dyson_rank) {
            return Err(format!("rank mod 5 at {n}"));
        }
        if !equidistributed(n as u32, 5, Partition::ag_crank) {
            return Err(format!("crank mod 5 at {n}"));
        }
    }
    for n in (5..=47).step_by(7) {
        if !p[n].is_multiple_of(7) || !equidistributed(n as u32, 7, Partition::dyson_rank) {
            return Err(format!("mod 7 at {n}"));
        }
    }
    for n in (6..=39).step_by(11) {
        if !equidistributed(n as u32, 11, Partition::ag_crank) {
            return Err(format!("crank mod 11 at {n}"));
        }
    }
    Ok(format!("p(39) = {}", p[39]))
}

fn series_identities() -> Outcome {
    let start = Instant::now();
    for (name, order) in [
        ("g-product", 25),
        ("odd-parts-product", 25),
        ("crank-product", 25),
        ("stanley-product", 30),
        ("srank-product", 30),
        ("triangular-series", 200),
        ("triple-product", 100),
        ("core-product", 40),
        ("alpha-lattice", 30),
        ("ramanujan-product", 40),
    ] {
        run_check(name, None, Some(order))?;
    }
    let tri = NamedSeries::TriangularProduct
        .build(200)
        .map_err(|e| e.to_string())?;
    for k in 0..200usize {
        let triangular = (0..20).any(|j| j * (j + 1) / 2 == k);
        if tri.constant_coeff(k) != (triangular as i32).into() {
            return Err(format!("coefficient of q^{k} in (q^4;q^4)(-q;q^2)"));
        }
    }
    let ram = NamedSeries::RamanujanProduct
        .build(40)
        .map_err(|e| e.to_string())?;
    let p = partition_numbers(5 * 39 + 4);
    for n in 0..40 {
        if ram.constant_coeff(n) != p[5 * n + 4].into() {
            return Err(format!("p({}) from the product", 5 * n + 4));
        }
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("10 identities, {:?}", start.elapsed()))
}

fn roots_of_unity() -> Outcome {
    run_check("roots-of-unity", None, Some(30))?;
    let g = NamedSeries::StcrankProduct
        .build(30)
        .map_err(|e| e.to_string())?;
    let split = Split {
        var: Var::Y,
        modulus: 4,
    };
    let v = cyclic_reduce_check(&g, Var::X, 5, Progression::new(4, 5), Some(split))
        .map_err(|e| e.to_string())?;
    if let Some(f) = v.failure {
        return Err(format!("product side at q^{}: {:?}", f.power, f.totals));
    }
    Ok(format!("{} coefficients, both srank classes", v.checked))
}

fn five_cores() -> Outcome {
    run_check("core-multiplication", Some(40), None)?;
    run_check("theta-map", Some(30), None)?;
    run_check("refined-core-counts", Some(30), None)?;
    run_check("srank-zero-cores", Some(60), None)?;
    for n in 0..=5u32 {
        let small = partitions(n).filter(|pi| is_core_by_hooks(pi, 5)).count();
        let big = partitions(5 * n + 4)
            .filter(|pi| is_core_by_hooks(pi, 5))
            .count();
        if big != 5 * small {
            return Err(format!(
                "hook count: a5({}) = {big}, a5({n}) = {small}",
                5 * n + 4
            ));
        }
    }
    Ok("a5 relations, theta, refined counts, a5,0 forms".into())
}

fn elegant() -> Outcome {
    run_check("elegant-core", Some(40), None)?;
    run_check("elegant-decomposition", Some(25), None)?;
    Ok("all 5-cores of n <= 40, all partitions of n <= 25".into())
}

fn oracles() -> Outcome {
    let p = partition_numbers(60);
    for n in 0..=60u32 {
        let count = partitions(n).count() as u128;
        let recurrence = partition_count(n as usize);
        if count != p[n as usize] || recurrence != p[n as usize].into() {
            return Err(format!(
                "p({n}): enumerated {count}, recurrence {recurrence}"
            ));
        }
    }
    let mut pairs = 0;
    for t in [2, 3, 5] {
        for n in 0..=20 {
            for pi in partitions(n) {
                let abacus = littlewood_decompose(&pi, t).unwrap().core;
                let stripped = core_by_rim_hooks(&pi, t).unwrap();
                if abacus != stripped || !is_core_by_hooks(&abacus, t) {
                    return Err(format!("{t}-core of {pi}: {abacus} vs {stripped}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("p(n) for n <= 60, {pairs} core comparisons"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("table 1 reproduction", table_1),
        ("table 2 reproduction", table_2),
        ("stcrank equidistribution", theorem_1),
        ("srank-preserving orbits", theorem_2),
        ("congruences and rank/crank equidistribution", congruences),
        ("series identities", series_identities),
        ("roots-of-unity vanishing", roots_of_unity),
        ("5-core structure", five_cores),
        ("srank formulas via cores and quotients", elegant),
        ("oracle consistency", oracles),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {:>2} {label}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {label}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
