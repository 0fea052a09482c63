//! The partitions of 5n+4 classified by srank mod 4 and stcrank mod 5.
//! Every nonempty row splits into five equal cells.
//!
//! cargo run --example stcrank_table -- 14

use rpl::stats::Statistic;
use rpl::tables::{classify, Format};

fn main() -> rpl::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(9);
    let table = classify(n, Statistic::Srank, 4, Statistic::Stcrank, 5)?;
    if n <= 9 {
        print!("{}", table.render(Format::Text));
    }
    for row in table.rows() {
        let sizes: Vec<usize> = (0..5).map(|c| table.cell(row, c).len()).collect();
        println!("srank = {row} (mod 4): cell sizes {sizes:?}");
    }
    Ok(())
}
