//! Extract A_k and B_k from their exponential generating functions using
//! exact rational power series.

use brousseau::identities::{egf_coefficients, Which};
use brousseau::{ExactInt, RatSeries};

fn main() {
    let order = 8;
    // 1 / (e^x - e^{2x} + 1), whose coefficients are A_k / k!.
    let one = RatSeries::one(order);
    let d = &(&RatSeries::exp_scaled(&ExactInt::from(1), order) - &RatSeries::exp_scaled(&ExactInt::from(2), order)) + &one;
    let inv = d.inverse().unwrap();
    println!("1/(e^x - e^(2x) + 1) = {:?}", inv.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());

    println!("A: {:?}", egf_coefficients(Which::A, 12).unwrap().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("B: {:?}", egf_coefficients(Which::B, 12).unwrap().iter().map(|c| c.to_string()).collect::<Vec<_>>());
}
