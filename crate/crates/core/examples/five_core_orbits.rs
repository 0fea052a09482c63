//! Orbits of the 5-core operator on the partitions of 5n+4. Each orbit has
//! one member in every 5-core crank class, so the classes are equinumerous.

use rpl::cores::{five_core_crank, five_core_crank_forms, orbit_of, OrbitVariant};
use rpl::tables::{orbit_table, Format};
use rpl::Partition;

fn main() -> rpl::Result<()> {
    print!(
        "{}",
        orbit_table(9, OrbitVariant::SrankPreserving)?.render(Format::Text)
    );

    let pi: Partition = "(2^3,4^2,5^2)".parse()?;
    for variant in [OrbitVariant::Plain, OrbitVariant::SrankPreserving] {
        println!("\n{variant:?} orbit of {pi}:");
        for m in orbit_of(&pi, variant)?.members.iter() {
            println!(
                "  c5 {}  forms {:?}  srank {:>3}  {}",
                five_core_crank(m)?,
                five_core_crank_forms(m)?,
                m.srank(),
                m
            );
        }
    }
    Ok(())
}
