// Total size h(s) of all (s,s+1,s+2)-cores, computed four independent ways.

use core_partitions::enumeration::{series, sum_h, sum_h_closed, sum_h_rec3, SeriesName};

fn main() -> core_partitions::Result<()> {
    let n = 40;
    let coeffs = series(SeriesName::H, n + 1)?.coeffs;
    for s in (3..=n).step_by(5) {
        let rec = sum_h(s as u64);
        let (motzkin_sum, binomial_sum) = sum_h_closed(s as u64);
        let rec3 = sum_h_rec3(s as u64)?;
        let agree = [&motzkin_sum, &binomial_sum, &rec3, &coeffs[s]].iter().all(|v| **v == rec);
        println!("h({s}) = {rec}{}", if agree { "" } else { "  MISMATCH" });
    }
    Ok(())
}
