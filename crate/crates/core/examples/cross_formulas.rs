//! Recompute A_k and B_k with every independent formula and compare with
//! the recursion.

use brousseau::identities::{
    cross_formula_check, egf_check, erbacher_fuchs_check, zeitlin_firstkind_report, AltMethod, Which,
};
use brousseau::CoeffTable;

fn main() {
    let k_max = 30;
    let table = CoeffTable::recursion(k_max);
    for method in AltMethod::ALL {
        for which in [Which::A, Which::B] {
            if method.supports(which) {
                println!("{}", cross_formula_check(method, which, k_max, &table).unwrap());
            }
        }
    }
    println!("{}", egf_check(Which::A, k_max, &table).unwrap());
    println!("{}", egf_check(Which::B, k_max, &table).unwrap());
    println!("{}", zeitlin_firstkind_report(k_max, &table).unwrap());
    println!("{}", erbacher_fuchs_check(200));
}
