use core_partitions::enumeration::{average_size, decimal_string};

fn main() {
    for s in [3u64, 5, 10, 20, 50, 100] {
        let avg = average_size(s);
        println!("s={s:<4} {avg}  ≈ {}", decimal_string(&avg, 6));
    }
}
