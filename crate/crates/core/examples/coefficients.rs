//! Print the A_k / B_k coefficient table produced by the recursion.
//!
//! `cargo run --example coefficients -- 12`

use brousseau::CoeffTable;

fn main() {
    let k_max: usize = std::env::args().nth(1).map_or(10, |s| s.parse().expect("k_max"));
    let table = CoeffTable::recursion(k_max);
    println!("{:>3}  {:>24}  {:>24}", "k", "A_k", "B_k");
    for k in 0..=k_max {
        println!("{k:>3}  {:>24}  {:>24}", table.a()[k], table.b()[k]);
    }
}
