//! Exact truncated q-series in two extra variables.

use rpl::qseries::{
    assert_equal, cyclic_reduce_check, enumerative_series, Comparison, NamedSeries, Progression,
    Split, Var, Weighting,
};

fn main() -> rpl::Result<()> {
    let order = 12;
    let product = NamedSeries::StcrankProduct.build(order)?;
    let counted = enumerative_series(order, Weighting::StcrankSrank)?;
    match assert_equal(&counted, &product)? {
        Comparison::Equal => println!("generating function agrees to q^{}", order - 1),
        Comparison::Differs { power, .. } => println!("first difference at q^{power}"),
    }
    for k in [4, 9] {
        println!("q^{k}: {}", product.coeff(k));
    }

    let split = Split {
        var: Var::Y,
        modulus: 4,
    };
    let v = cyclic_reduce_check(&product, Var::X, 5, Progression::new(4, 5), Some(split))?;
    println!(
        "x-classes mod 5 balanced at {} powers: {}",
        v.checked,
        v.all_equal()
    );

    let ramanujan = NamedSeries::RamanujanProduct.build(8)?;
    let values: Vec<String> = (0..8)
        .map(|n| ramanujan.constant_coeff(n).to_string())
        .collect();
    println!("5 (q^5;q^5)^5/(q;q)^6 = {} ...", values.join(", "));

    for name in ["triangular_product", "core_lattice:5"] {
        println!("{name}: {}", rpl::qseries::build_named_series(name, 15)?);
    }
    Ok(())
}
