// Prints the Hasse diagram of T_s in Graphviz DOT. Pass s as the first argument (default 6).
//
// cargo run --example hasse_diagram -- 8 | dot -Tsvg > t8.svg

use core_partitions::poset::build_t;

fn main() {
    let s = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let t = build_t(s);
    eprintln!("T_{s}: {} elements, {} cover relations", t.len(), t.covers().len());
    print!("{}", t.hasse_dot());
}
