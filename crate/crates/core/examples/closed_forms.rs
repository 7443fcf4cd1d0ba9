//! Closed forms for the power-weighted Fibonacci sum and convolution,
//! checked against the naive sums at a few points.

use brousseau::{brousseau_closed, brute_convolution, brute_sum, convolution_closed, eval_closed, CoeffTable};

fn main() {
    let table = CoeffTable::recursion(6);
    for p in 0..=4 {
        let sum = brousseau_closed(p, &table).unwrap();
        let conv = convolution_closed(p, &table).unwrap();
        println!("p = {p}");
        println!("  sum_{{i=1}}^n i^{p} F_i          = {sum}");
        println!("  sum_{{i=1}}^n i^{p} F_{{n-i}}    = {conv}");
        for n in [5u64, 20, 100] {
            assert_eq!(eval_closed(&sum, n), brute_sum(p, n));
            assert_eq!(eval_closed(&conv, n), brute_convolution(p, n));
        }
    }
    let big = brousseau_closed(6, &table).unwrap();
    println!("\np = 6, n = 1000: {}", eval_closed(&big, 1000));
}
