// Compares the hook-length brute force against the ideal enumeration for small s.

use std::collections::BTreeSet;

use core_partitions::enumeration::{small, sum_h};
use core_partitions::extremal::max_size_l;
use core_partitions::oracle::{cores_by_size_scan, summarize};
use core_partitions::poset::build_t;
use core_partitions::{CoreTuple, Partition};

fn main() -> core_partitions::Result<()> {
    for s in 1..=9u32 {
        let tuple = CoreTuple::consecutive(s);
        let bound = small(&max_size_l(s)) as u32;
        let scanned: BTreeSet<Partition> = cores_by_size_scan(&tuple, bound).into_iter().collect();
        let t = build_t(s);
        let mut images = BTreeSet::new();
        for ideal in t.enumerate_ideals() {
            images.insert(t.partition_of_ideal(&ideal)?);
        }
        let summary = summarize(&tuple, bound);
        println!(
            "s={s}: {} cores, total size {} (h = {}), sets {}",
            scanned.len(),
            summary.total_size,
            sum_h(s.into()),
            if scanned == images { "equal" } else { "DIFFER" }
        );
    }
    Ok(())
}
