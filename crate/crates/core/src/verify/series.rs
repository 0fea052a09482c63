use num_bigint::BigInt;

use crate::cores::{core_counts, CoreFilter};
use crate::error::Result;
use crate::partition::partition_counts_upto;
use crate::qseries::{
    assert_equal, cyclic_reduce_check, enumerative_series, enumerative_series_with, Comparison,
    LaurentPoly, NamedSeries, Progression, Series, Split, Var, Weighting,
};

use super::{fail, pass, Check, Outcome, Params};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "pentagonal",
            statement: "(q;q)_inf = sum over k of (-1)^k q^(k(3k-1)/2)",
            max_n: None,
            order: Some(200),
            run: pentagonal,
        },
        Check {
            name: "g-product",
            statement: "sum x^stcrank y^srank q^|pi| = (q^4;q^4)(-q;q^2) / (xq^4, q^4/x, xy^2q^2, q^2/(xy^2); q^4)",
            max_n: None,
            order: Some(25),
            run: g_product,
        },
        Check {
            name: "odd-parts-product",
            statement: "sum x^O(pi) y^O(pi') q^|pi| = (-xyq;q^2) / ((q^4;q^4)(x^2q^2;q^4)(y^2q^2;q^4))",
            max_n: None,
            order: Some(25),
            run: odd_parts_product,
        },
        Check {
            name: "crank-product",
            statement: "sum w(x,pi) q^|pi| = (q;q) / ((xq;q)(q/x;q)), where (1) is weighted x + 1/x - 1",
            max_n: None,
            order: Some(25),
            run: crank_product,
        },
        Check {
            name: "stanley-product",
            statement: "sum (p_0(n) - p_2(n)) q^n = (-q;q^2) / ((q^4;q^4)(-q^2;q^4)^2)",
            max_n: None,
            order: Some(30),
            run: stanley_product,
        },
        Check {
            name: "srank-product",
            statement: "sum y^srank q^|pi| over partitions with no repeated even part = (-q;q^2) / ((y^2q^2;q^4)(q^2/y^2;q^4))",
            max_n: None,
            order: Some(30),
            run: srank_product,
        },
        Check {
            name: "triangular-series",
            statement: "(q^4;q^4)(-q;q^2) = (q^4,-q^3,-q;q^4) = sum q^(2n^2+n) = sum q^(k(k+1)/2)",
            max_n: None,
            order: Some(200),
            run: triangular,
        },
        Check {
            name: "triple-product",
            statement: "sum x^n q^(n^2) = (q^2, -xq, -q/x; q^2)",
            max_n: None,
            order: Some(100),
            run: triple_product,
        },
        Check {
            name: "even-product",
            statement: "(1 - x^2)(x^2q^2, q^2/x^2, q^2; q^2) = sum_{m>=0} (-1)^m q^(m(m+1)) (x^(-2m) - x^(2m+2))",
            max_n: None,
            order: Some(100),
            run: even_product,
        },
        Check {
            name: "core-product",
            statement: "(q^t;q^t)^t / (q;q) = sum over zero-sum n in Z^t of q^((t/2)|n|^2 + b.n) = sum a_t(n) q^n for t in {2, 3, 5, 7}",
            max_n: None,
            order: Some(40),
            run: core_product,
        },
        Check {
            name: "alpha-lattice",
            statement: "sum over alpha in Z^5 with unit sum of q^Q(alpha) = sum a_5(5n+4) q^(n+1)",
            max_n: None,
            order: Some(30),
            run: alpha_lattice,
        },
        Check {
            name: "ramanujan-product",
            statement: "sum p(5n+4) q^n = 5 (q^5;q^5)^5 / (q;q)^6 = 5 (sum a_5(n) q^n) / (q;q)^5, and sum p(5n+4) q^(n+1) = (alpha lattice sum) / (q;q)^5",
            max_n: None,
            order: Some(40),
            run: ramanujan,
        },
        Check {
            name: "roots-of-unity",
            statement: "the coefficient of q^(5n+4) in sum x^stcrank y^srank q^|pi| has equal totals over x-exponent classes mod 5, overall and within each srank class mod 4",
            max_n: None,
            order: Some(30),
            run: roots_of_unity,
        },
    ]
}

fn compare(label: &str, lhs: &Series, rhs: &Series) -> Result<Option<Outcome>> {
    match assert_equal(lhs, rhs)? {
        Comparison::Equal => Ok(None),
        Comparison::Differs { power, lhs, rhs } => {
            fail(format!("{label}: coefficient of q^{power}"), rhs, lhs).map(Some)
        }
    }
}

macro_rules! compare_or_return {
    ($label:expr, $lhs:expr, $rhs:expr) => {
        if let Some(f) = compare($label, $lhs, $rhs)? {
            return Ok(f);
        }
    };
}

fn pentagonal(p: &Params) -> Result<Outcome> {
    let product = NamedSeries::Euler.build(p.order)?;
    let mut sparse = Series::zero(p.order);
    let mut k: i64 = 0;
    loop {
        let e1 = k * (3 * k - 1) / 2;
        let e2 = k * (3 * k + 1) / 2;
        if e1 >= p.order as i64 {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        sparse.add_term(e1 as usize, 0, 0, sign);
        if k > 0 {
            sparse.add_term(e2 as usize, 0, 0, sign);
        }
        k += 1;
    }
    compare_or_return!("(q;q)", &product, &sparse);
    pass(format!("order {}", p.order))
}

fn g_product(p: &Params) -> Result<Outcome> {
    let lhs = enumerative_series_with(p.order, |pi| {
        Some(LaurentPoly::monomial(
            1,
            p.stcrank(pi) as i32,
            pi.srank() as i32,
        ))
    })?;
    let rhs = NamedSeries::StcrankProduct.build(p.order)?;
    compare_or_return!("g(x,y,q)", &lhs, &rhs);
    pass(format!("order {}", p.order))
}

fn against(p: &Params, weighting: Weighting, named: NamedSeries, label: &str) -> Result<Outcome> {
    let lhs = enumerative_series(p.order, weighting)?;
    let rhs = named.build(p.order)?;
    compare_or_return!(label, &lhs, &rhs);
    pass(format!("order {}", p.order))
}

fn odd_parts_product(p: &Params) -> Result<Outcome> {
    against(
        p,
        Weighting::OddParts,
        NamedSeries::OddPartsProduct,
        "odd parts",
    )
}

fn crank_product(p: &Params) -> Result<Outcome> {
    against(p, Weighting::Crank, NamedSeries::CrankProduct, "crank")
}

fn stanley_product(p: &Params) -> Result<Outcome> {
    against(
        p,
        Weighting::SrankSign,
        NamedSeries::StanleyProduct,
        "p_0 - p_2",
    )
}

fn srank_product(p: &Params) -> Result<Outcome> {
    against(
        p,
        Weighting::SrankDistinctEvens,
        NamedSeries::SrankProduct,
        "srank",
    )
}

fn triangular(p: &Params) -> Result<Outcome> {
    let base = NamedSeries::TriangularProduct.build(p.order)?;
    for other in [
        NamedSeries::TriangularTriple,
        NamedSeries::TriangularQuadratic,
        NamedSeries::Triangular,
    ] {
        compare_or_return!(&other.to_string(), &other.build(p.order)?, &base);
    }
    pass(format!("four forms, order {}", p.order))
}

fn triple_product(p: &Params) -> Result<Outcome> {
    let lhs = NamedSeries::TripleSum.build(p.order)?;
    let rhs = NamedSeries::TripleProduct.build(p.order)?;
    compare_or_return!("triple product", &lhs, &rhs);
    pass(format!("order {}", p.order))
}

fn even_product(p: &Params) -> Result<Outcome> {
    let lhs = NamedSeries::EvenProduct.build(p.order)?;
    let rhs = NamedSeries::EvenSum.build(p.order)?;
    compare_or_return!("even product", &lhs, &rhs);
    pass(format!("order {}", p.order))
}

fn core_product(p: &Params) -> Result<Outcome> {
    for t in [2, 3, 5, 7] {
        let product = NamedSeries::CoreProduct(t).build(p.order)?;
        let lattice = NamedSeries::CoreLattice(t).build(p.order)?;
        compare_or_return!(&format!("t={t} product vs lattice"), &lattice, &product);
        let small = p.order.min(30);
        let counted = enumerative_series(small, Weighting::Cores(t))?;
        compare_or_return!(
            &format!("t={t} product vs enumerated cores"),
            &counted,
            &product.truncate(small)
        );
    }
    pass(format!("t in {{2,3,5,7}}, order {}", p.order))
}

fn alpha_lattice(p: &Params) -> Result<Outcome> {
    let lattice = NamedSeries::AlphaLattice.build(p.order)?;
    let cores = NamedSeries::CoreProduct(5).build(5 * p.order)?;
    let sifted = cores.dissect(5, 4, p.order).shift_q(1);
    compare_or_return!("alpha lattice", &lattice, &sifted);
    pass(format!("order {}", p.order))
}

fn ramanujan(p: &Params) -> Result<Outcome> {
    let order = p.order;
    let counts = partition_counts_upto(5 * order + 4);
    let sifted = Series::from_integers(
        order,
        (0..order).map(|n| BigInt::from(counts[5 * n + 4].clone())),
    );
    let product = NamedSeries::RamanujanProduct.build(order)?;
    compare_or_return!("5 (q^5;q^5)^5/(q;q)^6", &product, &sifted);

    let a5 = Series::from_integers(
        order,
        (0..order as u32)
            .map(|n| core_counts(n, 5, CoreFilter::default()))
            .collect::<Result<Vec<_>>>()?,
    );
    let mut chained = a5.scale(5);
    for _ in 0..5 {
        chained = &chained * &NamedSeries::Partitions.build(order)?;
    }
    compare_or_return!("5 a_5-series / (q;q)^5", &chained, &sifted);

    let mut lattice = NamedSeries::AlphaLattice.build(order)?;
    for _ in 0..5 {
        lattice = &lattice * &NamedSeries::Partitions.build(order)?;
    }
    compare_or_return!("alpha lattice / (q;q)^5", &lattice, &sifted.shift_q(1));
    pass(format!("order {order}"))
}

fn roots_of_unity(p: &Params) -> Result<Outcome> {
    let g = enumerative_series_with(p.order, |pi| {
        Some(LaurentPoly::monomial(
            1,
            p.stcrank(pi) as i32,
            pi.srank() as i32,
        ))
    })?;
    let prog = Progression::new(4, 5);
    let at_one = g.map_coeffs(|c| c.set_one(Var::Y));
    for (label, series, split) in [
        ("y = 1", &at_one, None),
        (
            "by srank class",
            &g,
            Some(Split {
                var: Var::Y,
                modulus: 4,
            }),
        ),
    ] {
        let v = cyclic_reduce_check(series, Var::X, 5, prog, split)?;
        if let Some(f) = v.failure {
            let totals: Vec<String> = f.totals.iter().map(ToString::to_string).collect();
            let class = f
                .class
                .map(|c| format!(", srank class {c}"))
                .unwrap_or_default();
            return fail(
                format!("{label}: q^{}{class}", f.power),
                "equal totals over x-exponent classes mod 5",
                totals.join(" "),
            );
        }
    }
    let powers: Vec<usize> = (4..p.order).step_by(5).collect();
    pass(format!("q-powers {:?}", powers))
}
