//! Runs part of the check catalog from library code.

use rpl::tables::Format;
use rpl::verify::{render_reports, run_checks, select, Overrides};

fn main() -> rpl::Result<()> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names = if names.is_empty() {
        vec![
            "stcrank-table".to_string(),
            "orbits-table".into(),
            "elegant-core".into(),
        ]
    } else {
        names
    };
    let checks = select(&names)?;
    let overrides = Overrides {
        max_n: Some(24),
        ..Overrides::default()
    };
    let reports = run_checks(&checks, &overrides)?;
    print!("{}", render_reports(&reports, Format::Text, false));
    Ok(())
}
