//! The four partition statistics side by side, then their residue counts.
//!
//! cargo run --example statistics -- 14

use rpl::stats::{residue_counts, Statistic};
use rpl::{partitions, Partition};

fn main() -> rpl::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(9);

    let stats = [
        Statistic::Rank,
        Statistic::Crank,
        Statistic::Srank,
        Statistic::Stcrank,
    ];
    print!("{:<22}", "partition");
    for s in stats {
        print!("{:>8}", s.name());
    }
    println!();
    for pi in partitions(n) {
        print!("{:<22}", pi.to_string());
        for s in stats {
            print!("{:>8}", s.value(&pi)?);
        }
        println!();
    }

    println!();
    for (stat, m) in [
        (Statistic::Rank, 5),
        (Statistic::Crank, 5),
        (Statistic::Stcrank, 5),
    ] {
        let counts = residue_counts(n, stat, m)?;
        let shown: Vec<String> = counts.values().map(ToString::to_string).collect();
        println!("{stat} mod {m}: {}", shown.join(" "));
    }

    // Parsing accepts both the display form and the compact token form.
    let pi: Partition = "(1^2,3^1,4^1)".parse()?;
    assert_eq!(pi, "1^2.3^1.4^1".parse()?);
    println!(
        "\n{pi} has conjugate {} and srank {}",
        pi.conjugate(),
        pi.srank()
    );
    Ok(())
}
