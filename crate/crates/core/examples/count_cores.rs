// Number of (s,s+1,s+2)-cores: ideal count, recurrence and Motzkin number side by side.

use core_partitions::enumeration::{count_r, motzkin};
use core_partitions::poset::build_t;

fn main() {
    println!("{:>3} {:>8} {:>8} {:>8}", "s", "ideals", "r(s)", "M_s");
    for s in 0..=12u32 {
        let ideals = build_t(s).count_ideals();
        println!("{s:>3} {ideals:>8} {:>8} {:>8}", count_r(s.into()), motzkin(s.into()));
    }
}
