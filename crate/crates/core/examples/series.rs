// Leading coefficients of the generating functions M, F, G and H.

use core_partitions::enumeration::{series, SeriesName};

fn main() -> core_partitions::Result<()> {
    for name in [SeriesName::M, SeriesName::F, SeriesName::G, SeriesName::H] {
        let table = series(name, 12)?;
        let shown: Vec<String> = table.coeffs.iter().map(ToString::to_string).collect();
        println!("{name:?}: {}", shown.join(", "));
    }
    Ok(())
}
