//! Brute-force evaluation of the sums straight from their definitions.

use brousseau::{brute_convolution, brute_sum};

fn main() {
    println!("sum_{{i=1}}^4 i^3 F_i      = {}", brute_sum(3, 4));
    println!("sum_{{i=1}}^10 F_i         = {}", brute_sum(0, 10));
    println!("sum_{{i=1}}^0 i^3 F_{{-i}}  = {}", brute_convolution(3, 0));
    println!("sum_{{i=1}}^30 i^2 F_{{30-i}} = {}", brute_convolution(2, 30));
}
