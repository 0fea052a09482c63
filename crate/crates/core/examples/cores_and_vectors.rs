//! Cores, quotients and the vector coordinates on t-cores.

use rpl::cores::{
    alpha_decompose, core_by_rim_hooks, littlewood_compose, littlewood_decompose, phi2,
    phi2_inverse, quadrupling_map, srank_decompose, t_cores, theta_map,
};
use rpl::Partition;

fn main() -> rpl::Result<()> {
    let pi: Partition = "(1^2,3^1,4^2,7^1,9^1)".parse()?;
    for t in [2, 3, 5] {
        let cq = littlewood_decompose(&pi, t)?;
        assert_eq!(cq.core, core_by_rim_hooks(&pi, t)?);
        assert_eq!(littlewood_compose(&cq)?, pi);
        let q: Vec<String> = cq.quotient.iter().map(ToString::to_string).collect();
        println!("t={t}: core {} quotient [{}]", cq.core, q.join(" "));
    }

    println!("\n5-cores of 14 with their n-vectors:");
    for core in t_cores(14, 5)? {
        let n = phi2(&core, 5)?;
        assert_eq!(phi2_inverse(&n), core);
        println!("  {:?}  weight {}  {}", n.coords(), n.weight(), core);
    }

    let aq = alpha_decompose(&pi)?;
    println!("\nalpha vector of {pi}: {:?}", aq.alpha.0);
    println!(
        "srank {} from the decomposition, {} directly",
        srank_decompose(&pi)?,
        pi.srank()
    );

    let core: Partition = "(1^4,5^1)".parse()?;
    println!("\ntheta({core}) = {}", theta_map(&core)?);
    println!("quadrupling({core}) = {}", quadrupling_map(&core)?);
    Ok(())
}
