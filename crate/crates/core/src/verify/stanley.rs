use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Result;
use crate::partition::{partitions, Partition};
use crate::qseries::{
    assert_equal, enumerative_series, enumerative_series_with, Comparison, LaurentPoly, Series,
    Weighting,
};
use crate::stanley::{
    bijection1, bijection1_inverse, bijection2, bijection2_inverse, classify, refined_counts_by,
    TypeClass,
};

use super::golden::TABLE_STCRANK_NINE;
use super::{fail, pass, Check, Outcome, Params};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "bijection1",
            statement: "pi -> (pi1, pi2) is invertible with |pi| = 4|pi1| + |pi2| and srank(pi) = srank(pi2)",
            max_n: Some(30),
            order: None,
            run: bijection1_check,
        },
        Check {
            name: "bijection2",
            statement: "type A and type B partitions of n are disjoint and matched by a weight- and srank-preserving bijection",
            max_n: Some(30),
            order: None,
            run: bijection2_check,
        },
        Check {
            name: "stcrank-type-shift",
            statement: "stcrank = srank/2 - 1 on type A and srank/2 + 1 on type B",
            max_n: Some(30),
            order: None,
            run: type_shift,
        },
        Check {
            name: "stcrank-equidistribution",
            statement: "P_i(k, 5, 5n+4) = p_i(5n+4)/5 for i in {0, 2} and every residue k of stcrank mod 5",
            max_n: Some(49),
            order: None,
            run: stcrank_equidistribution,
        },
        Check {
            name: "stcrank-factorization",
            statement: "sum x^stcrank y^srank q^|pi| = (sum over pi1 of w(x,pi1) q^(4|pi1|)) * (sum over pi2 with no repeated even part of (xy^2)^(srank/2) q^|pi2|)",
            max_n: None,
            order: Some(25),
            run: factorization,
        },
        Check {
            name: "stcrank-table",
            statement: "the partitions of 9 by srank mod 4 and stcrank mod 5 match the published table cell for cell",
            max_n: None,
            order: None,
            run: table,
        },
    ]
}

fn bijection1_check(p: &Params) -> Result<Outcome> {
    let mut total = 0u64;
    for n in 0..=p.max_n {
        for pi in partitions(n) {
            total += 1;
            let img = bijection1(&pi);
            let back = bijection1_inverse(&img)?;
            if back != pi {
                return fail(&pi, &pi, back);
            }
            let w = 4 * img.pi1.weight() + img.pi2.weight();
            if w != n {
                return fail(format!("4|pi1| + |pi2| for {pi}"), n, w);
            }
            if img.pi2.srank() != pi.srank() {
                return fail(format!("srank(pi2) for {pi}"), pi.srank(), img.pi2.srank());
            }
        }
    }
    pass(format!("{total} partitions"))
}

/// Type A by frequencies: `f_2` in {2, 3} and every larger even part at most once.
fn type_a_by_frequencies(pi: &Partition) -> bool {
    let f = pi.frequencies();
    let freq = |i: usize| f.get(i).copied().unwrap_or(0);
    matches!(freq(2), 2 | 3) && (4..f.len()).step_by(2).all(|i| freq(i) <= 1)
}

fn bijection2_check(p: &Params) -> Result<Outcome> {
    let mut pairs = 0usize;
    for n in 0..=p.max_n {
        let mut type_a = Vec::new();
        let mut type_b = BTreeSet::new();
        for pi in partitions(n) {
            let class = classify(&pi);
            if (class == TypeClass::TypeA) != type_a_by_frequencies(&pi) {
                return fail(
                    format!("type A test on {pi}"),
                    type_a_by_frequencies(&pi),
                    class == TypeClass::TypeA,
                );
            }
            match class {
                TypeClass::TypeA => type_a.push(pi),
                TypeClass::TypeB => {
                    type_b.insert(pi);
                }
                TypeClass::Other => {}
            }
        }
        let mut image = BTreeSet::new();
        for a in &type_a {
            let b = bijection2(a)?;
            if classify(&b) != TypeClass::TypeB {
                return fail(format!("bijection2({a})"), "a type B partition", &b);
            }
            if b.weight() != a.weight() || b.srank() != a.srank() {
                return fail(
                    format!("bijection2({a}) = {b}"),
                    format!("weight {} srank {}", a.weight(), a.srank()),
                    format!("weight {} srank {}", b.weight(), b.srank()),
                );
            }
            let back = bijection2_inverse(&b)?;
            if &back != a {
                return fail(format!("inverse of {b}"), a, back);
            }
            if !image.insert(b.clone()) {
                return fail(
                    format!("bijection2 on weight {n}"),
                    "injective",
                    format!("{b} hit twice"),
                );
            }
        }
        if image != type_b {
            let missing = type_b.difference(&image).next().map(ToString::to_string);
            return fail(
                format!("type B partitions of {n}"),
                type_b.len(),
                format!(
                    "{} in the image, first missed {}",
                    image.len(),
                    missing.unwrap_or_default()
                ),
            );
        }
        pairs += type_a.len();
    }
    pass(format!("{pairs} type A/B pairs up to weight {}", p.max_n))
}

fn type_shift(p: &Params) -> Result<Outcome> {
    for n in 0..=p.max_n {
        for pi in partitions(n) {
            let shift = match classify(&pi) {
                TypeClass::TypeA => -1,
                TypeClass::TypeB => 1,
                TypeClass::Other => continue,
            };
            let expected = pi.srank() / 2 + shift;
            let got = p.stcrank(&pi);
            if got != expected {
                return fail(format!("stcrank{pi}"), expected, got);
            }
        }
    }
    pass(format!("weights <= {}", p.max_n))
}

fn stcrank_equidistribution(p: &Params) -> Result<Outcome> {
    let mut n = 4;
    let mut checked = Vec::new();
    while n <= p.max_n {
        let counts = refined_counts_by(n, 5, |pi| p.stcrank(pi))?;
        for i in [0u32, 2] {
            let p_i: BigUint = (0..5).map(|k| &counts[&(i, k)]).sum();
            if !(&p_i % 5u32).is_zero() {
                return fail(format!("p_{i}({n})"), "a multiple of 5", &p_i);
            }
            let expected = &p_i / 5u32;
            for k in 0..5 {
                let got = &counts[&(i, k)];
                if *got != expected {
                    return fail(format!("P_{i}({k},5,{n})"), &expected, got);
                }
            }
        }
        checked.push(n);
        n += 5;
    }
    pass(format!("weights {:?}", checked))
}

fn factorization(p: &Params) -> Result<Outcome> {
    let order = p.order;
    let lhs = enumerative_series_with(order, |pi| {
        Some(LaurentPoly::monomial(
            1,
            p.stcrank(pi) as i32,
            pi.srank() as i32,
        ))
    })?;
    let crank = enumerative_series(order.div_ceil(4), Weighting::Crank)?;
    let mut first = Series::zero(order);
    for (k, c) in crank.coeffs().iter().enumerate() {
        for (a, b, v) in c.terms() {
            first.add_term(4 * k, a, b, v.clone());
        }
    }
    let second = enumerative_series(order, Weighting::HalfSrankDistinctEvens)?;
    let rhs = &first * &second;
    match assert_equal(&lhs, &rhs)? {
        Comparison::Equal => pass(format!("order {order}")),
        Comparison::Differs { power, lhs, rhs } => {
            fail(format!("coefficient of q^{power}"), rhs, lhs)
        }
    }
}

fn table(p: &Params) -> Result<Outcome> {
    let mut cells: BTreeMap<(u32, u32), BTreeSet<Partition>> = BTreeMap::new();
    for pi in partitions(9) {
        let r = pi.srank().rem_euclid(4) as u32;
        let c = p.stcrank(&pi).rem_euclid(5) as u32;
        cells.entry((r, c)).or_default().insert(pi);
    }
    let mut expected: BTreeMap<(u32, u32), BTreeSet<Partition>> = BTreeMap::new();
    for &(r, c, parts) in TABLE_STCRANK_NINE {
        let set = parts
            .iter()
            .map(|s| s.parse())
            .collect::<Result<BTreeSet<_>>>()?;
        expected.insert((r, c), set);
    }
    for key in expected.keys().chain(cells.keys()) {
        let want = expected.get(key).cloned().unwrap_or_default();
        let got = cells.get(key).cloned().unwrap_or_default();
        if want != got {
            let show = |s: &BTreeSet<Partition>| {
                s.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            return fail(
                format!("cell srank={} stcrank={}", key.0, key.1),
                show(&want),
                show(&got),
            );
        }
    }
    pass("30 partitions in 10 cells")
}
