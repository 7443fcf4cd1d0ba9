//! The Bernoulli-number expression for B_k, checked over a range of k.
//!
//! `cargo run --release --example bernoulli_relation -- 1000`

use brousseau::identities::ShannonOllerton;
use brousseau::CoeffTable;
use std::time::Instant;

fn main() {
    let k_max: usize = std::env::args().nth(1).map_or(200, |s| s.parse().expect("k_max"));
    let start = Instant::now();
    let table = CoeffTable::recursion(k_max);
    let so = ShannonOllerton::new(k_max, &table).unwrap();
    println!("k = 5: rhs = {}, B_5 = {}", so.rhs(5), table.b()[5]);
    match so.check_range(2..=k_max) {
        None => println!("verified for 2 <= k <= {k_max} in {:.2?}", start.elapsed()),
        Some(f) => {
            println!("mismatch at {}: {} vs {}", f.index_string(), f.lhs, f.rhs);
            std::process::exit(1);
        }
    }
}
