// (s,t)-cores for coprime s, t: count and largest size against the classical formulas.

use core_partitions::enumeration::{anderson_count, olsson_stanton_max};
use core_partitions::oracle::ideal_totals;
use core_partitions::poset::build_poset;
use core_partitions::CoreTuple;

fn main() -> core_partitions::Result<()> {
    for (s, t) in [(2, 5), (3, 5), (3, 7), (4, 7), (5, 6), (5, 8)] {
        let poset = build_poset(&CoreTuple::new(vec![s, t])?)?;
        let totals = ideal_totals(&poset, poset.enumerate_ideals())?;
        println!(
            "({s},{t}): {} cores (formula {}), max size {} (formula {})",
            totals.count,
            anderson_count(s.into(), t.into())?,
            totals.max_size,
            olsson_stanton_max(s.into(), t.into())?
        );
    }
    Ok(())
}
