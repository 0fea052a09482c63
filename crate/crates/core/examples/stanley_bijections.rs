//! Even-part extraction and the type A to type B swap that underlie stcrank.

use rpl::stanley::{bijection1, bijection2, bijection2_inverse, classify, psi, stcrank, TypeClass};
use rpl::{partitions, Partition};

fn main() -> rpl::Result<()> {
    let pi: Partition = "(1^3,2^4,4^3,5^1)".parse()?;
    let image = bijection1(&pi);
    println!("{pi}");
    println!("  pi1 = {}  (halved pairs of even parts)", image.pi1);
    println!("  pi2 = {}  (no repeated even part)", image.pi2);
    println!(
        "  srank {} = srank of pi2 {}",
        pi.srank(),
        image.pi2.srank()
    );

    let n = 10;
    println!("\ntype A partitions of {n} and their type B partners:");
    for a in partitions(n).filter(|p| classify(p) == TypeClass::TypeA) {
        let b = bijection2(&a)?;
        assert_eq!(bijection2_inverse(&b)?, a);
        println!(
            "  {:<20} -> {:<20} srank {:>3}  stcrank {:>3} -> {:>3} (psi {})",
            a.to_string(),
            b.to_string(),
            a.srank(),
            stcrank(&a),
            stcrank(&b),
            psi(&b)
        );
    }
    Ok(())
}
