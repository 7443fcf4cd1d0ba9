//! Cubic-weight sums over Pell and general second-order recurrences, and
//! solving for the summand polynomial of any degree.

use brousseau::extensions::{derive_summand, general_cubic_check, general_cubic_summand, pell_cubic_check, pell_cubic_summand};
use brousseau::RecurrenceSpec;

fn main() {
    println!("Pell summand: {}", pell_cubic_summand());
    println!("{}", pell_cubic_check(60));

    let spec = RecurrenceSpec::new(3, 2);
    println!("a=3, b=2 cubic summand: {}", general_cubic_summand(&spec));
    println!("{}", general_cubic_check(&spec, 40));

    for p in 1..=5 {
        let d = derive_summand(&spec, p, 40).unwrap();
        let shown = d.as_int_poly().map_or_else(|| format!("{:?}", d.coeffs), |q| q.to_string());
        println!("degree {p}: {shown}  (verified to n = {})", d.verified_to);
    }
}
