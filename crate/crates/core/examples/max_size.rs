// Largest (s,s+1,s+2)-core: closed form, the witness κ_s, and whether it is self-conjugate.

use core_partitions::extremal::{extremal_report, kappa, max_size_l};

fn main() -> core_partitions::Result<()> {
    for s in 3..=10 {
        let k = kappa(s);
        println!("s={s:<2} l(s)={:<4} κ_s={k}", max_size_l(s));
    }
    // Odd s has two maximizers, κ_s and its conjugate.
    let report = extremal_report(7)?;
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
    Ok(())
}
