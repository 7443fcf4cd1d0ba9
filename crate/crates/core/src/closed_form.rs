//! Closed forms for the weighted Fibonacci sums `S_n^(p) = sum_{i=0}^n i^p F_i`
//! and convolutions `C_n^(p) = sum_{i=0}^n i^p F_{n-i}`.
//!
//! Both reduce to the integer sequences `A_k` (OEIS A000556) and `B_k`
//! (OEIS A000557), defined by
//!
//! ```text
//! A_0 = 1,  A_p = (-1)^p + 2 sum_{j=0}^{floor(p/2)} C(p, 2j+1) A_{p-2j-1}
//! B_0 = 1,  B_p =          2 sum_{j=0}^{floor(p/2)} C(p, 2j+1) B_{p-2j-1}
//! ```
//!
//! and then
//!
//! ```text
//! C_n^(p) = A_p F_n + B_p F_{n+1} - sum_k C(p,k) B_k n^{p-k}
//! S_n^(p) = (sum_k C(p,k)(-1)^k A_k n^{p-k}) F_n
//!         + (sum_k C(p,k)(-1)^k B_k n^{p-k}) F_{n+1} - (-1)^p B_p
//! ```
//!
//! In both sums the `i = 0` term with `p = 0` is weighted by 1.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{pow_u, IntPoly};
use crate::error::{domain, Result};
use crate::sequences::{binomial, fibonacci_table};

/// Polynomial `w(i) = i^p - 2 sum_{j=0}^{floor(p/2)} C(p, 2j+1) i^{p-2j-1}`
/// for which `F_n - n^p = sum_{i=1}^n w(i) F_{n-i}`.
pub fn summand_coeffs(p: u32) -> Result<IntPoly> {
    if p == 0 {
        return Err(domain("summand polynomial is defined for p >= 1"));
    }
    let mut coeffs = vec![BigInt::zero(); p as usize + 1];
    coeffs[p as usize] = BigInt::one();
    for j in 0..=(p / 2) {
        let odd = 2 * j + 1;
        if odd > p {
            break;
        }
        coeffs[(p - odd) as usize] -= binomial(p as u64, odd as i64) * 2u32;
    }
    Ok(IntPoly::new(coeffs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableMethod {
    /// Filled by the binomial recursions.
    Recursion,
    /// Read back from a cache file.
    Cache,
}

impl fmt::Display for TableMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableMethod::Recursion => "recursion",
            TableMethod::Cache => "cache",
        })
    }
}

/// `A_0..=A_K` and `B_0..=B_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
    method: TableMethod,
}

impl CoeffTable {
    /// Computes the table by the binomial recursions.
    pub fn recursion(k_max: usize) -> Self {
        let mut table = CoeffTable {
            a: vec![BigInt::one()],
            b: vec![BigInt::one()],
            method: TableMethod::Recursion,
        };
        table.extend_to(k_max);
        table
    }

    /// Wraps externally supplied values. Lengths must agree and be nonzero;
    /// the values themselves are not checked.
    pub fn from_parts(a: Vec<BigInt>, b: Vec<BigInt>, method: TableMethod) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() {
            return Err(domain(format!(
                "coefficient lists must be nonempty and of equal length (got {} and {})",
                a.len(),
                b.len()
            )));
        }
        Ok(CoeffTable { a, b, method })
    }

    /// Extends the table in place with further recursion steps.
    pub fn extend_to(&mut self, k_max: usize) {
        for p in self.a.len()..=k_max {
            let mut sa = BigInt::zero();
            let mut sb = BigInt::zero();
            for j in 0..=(p / 2) {
                let odd = 2 * j + 1;
                if odd > p {
                    break;
                }
                let c = binomial(p as u64, odd as i64);
                sa += &c * &self.a[p - odd];
                sb += &c * &self.b[p - odd];
            }
            let sign = if p % 2 == 0 { 1 } else { -1 };
            self.a.push(sa * 2u32 + sign);
            self.b.push(sb * 2u32);
        }
    }

    pub fn k_max(&self) -> usize {
        self.a.len() - 1
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn method(&self) -> TableMethod {
        self.method
    }

    pub(crate) fn require(&self, k: usize) -> Result<()> {
        if k > self.k_max() {
            return Err(domain(format!(
                "coefficient table holds k <= {} but index {k} is needed",
                self.k_max()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// `sum_{i=0}^n i^p F_i`
    Sum,
    /// `sum_{i=0}^n i^p F_{n-i}`
    Convolution,
}

/// `f_n(n) F_n + f_n1(n) F_{n+1} + free(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub kind: FormKind,
    pub p: u32,
    pub f_n: IntPoly,
    pub f_n1: IntPoly,
    pub free: IntPoly,
}

/// Closed form of the convolution `C_n^(p)`.
pub fn convolution_closed(p: u32, table: &CoeffTable) -> Result<ClosedForm> {
    let pu = p as usize;
    table.require(pu)?;
    let free = (0..=pu)
        .map(|k| -binomial(p as u64, k as i64) * &table.b()[k])
        .rev()
        .collect();
    Ok(ClosedForm {
        kind: FormKind::Convolution,
        p,
        f_n: IntPoly::constant(table.a()[pu].clone()),
        f_n1: IntPoly::constant(table.b()[pu].clone()),
        free: IntPoly::new(free),
    })
}

/// Closed form of the weighted sum `S_n^(p)`.
pub fn brousseau_closed(p: u32, table: &CoeffTable) -> Result<ClosedForm> {
    let pu = p as usize;
    table.require(pu)?;
    let alternating = |seq: &[BigInt]| {
        IntPoly::new(
            (0..=pu)
                .map(|k| {
                    let c = binomial(p as u64, k as i64) * &seq[k];
                    if k % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .rev()
                .collect(),
        )
    };
    let bp = &table.b()[pu];
    let free = if p % 2 == 0 { -bp.clone() } else { bp.clone() };
    Ok(ClosedForm {
        kind: FormKind::Sum,
        p,
        f_n: alternating(table.a()),
        f_n1: alternating(table.b()),
        free: IntPoly::constant(free),
    })
}

impl ClosedForm {
    /// Evaluates using `fib[n]` and `fib[n + 1]`.
    pub fn eval_with(&self, n: u64, fib: &[BigInt]) -> BigInt {
        let nn = BigInt::from(n);
        self.f_n.eval(&nn) * &fib[n as usize]
            + self.f_n1.eval(&nn) * &fib[n as usize + 1]
            + self.free.eval(&nn)
    }

    /// Renders e.g. `(n^3-3n^2+15n-31)F_n + (n^3-6n^2+24n-50)F_{n+1} + 50`.
    /// With `latex` set, multi-digit exponents are braced.
    pub fn render(&self, latex: bool) -> String {
        let mut out = String::new();
        push_fib_term(&mut out, &self.f_n, "F_n", latex);
        push_fib_term(&mut out, &self.f_n1, "F_{n+1}", latex);
        if !self.free.is_zero() {
            let negative = self.free.leading().is_some_and(|c| c < &BigInt::zero());
            let mag = if negative { -&self.free } else { self.free.clone() };
            let body = mag.render("n", latex);
            let body = if mag.is_constant() { body } else { format!("({body})") };
            push_signed(&mut out, negative, &body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn push_signed(out: &mut String, negative: bool, body: &str) {
    match (out.is_empty(), negative) {
        (true, false) => {}
        (true, true) => out.push('-'),
        (false, false) => out.push_str(" + "),
        (false, true) => out.push_str(" - "),
    }
    out.push_str(body);
}

fn push_fib_term(out: &mut String, poly: &IntPoly, fib: &str, latex: bool) {
    if poly.is_zero() {
        return;
    }
    if poly.is_constant() {
        let c = &poly.coeffs()[0];
        let negative = c < &BigInt::zero();
        let mag = if negative { -c } else { c.clone() };
        let body = if mag.is_one() {
            fib.to_string()
        } else {
            format!("{mag}{fib}")
        };
        push_signed(out, negative, &body);
    } else {
        push_signed(out, false, &format!("({}){fib}", poly.render("n", latex)));
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Evaluates a closed form at `n` with freshly computed Fibonacci numbers.
pub fn eval_closed(form: &ClosedForm, n: u64) -> BigInt {
    form.eval_with(n, &fibonacci_table(n as usize + 1))
}

/// Weight of index `i`: 1 when `p = 0` (including `i = 0`), else `i^p`.
pub fn weight(i: u64, p: u32) -> BigInt {
    if p == 0 {
        BigInt::one()
    } else {
        pow_u(&BigInt::from(i), p)
    }
}

/// `sum_{i=0}^n w(i) F_{n-i}` evaluated term by term.
pub fn brute_convolution(p: u32, n: u64) -> BigInt {
    brute_convolution_with(p, n, &fibonacci_table(n as usize))
}

pub fn brute_convolution_with(p: u32, n: u64, fib: &[BigInt]) -> BigInt {
    (0..=n)
        .map(|i| weight(i, p) * &fib[(n - i) as usize])
        .sum()
}

/// `sum_{i=0}^n w(i) F_i` evaluated term by term.
pub fn brute_sum(p: u32, n: u64) -> BigInt {
    brute_sum_with(p, n, &fibonacci_table(n as usize))
}

pub fn brute_sum_with(p: u32, n: u64, fib: &[BigInt]) -> BigInt {
    (0..=n).map(|i| weight(i, p) * &fib[i as usize]).sum()
}

/// `C_n^(p)` through the lower-order relation
/// `C_n^(p) = (-1)^p F_n - n^p + 2 sum_j C(p,2j+1) C_n^(p-2j-1)`,
/// bottoming out at `C_n^(0) = sum_{i<=n} F_i` computed directly.
/// Returns the values for orders `0..=p_max`.
pub fn convolution_by_lower_orders(p_max: u32, n: u64, fib: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = vec![brute_convolution_with(0, n, fib)];
    let f_n = &fib[n as usize];
    for p in 1..=p_max {
        let mut v = if p % 2 == 0 { f_n.clone() } else { -f_n.clone() };
        v -= pow_u(&BigInt::from(n), p);
        for j in 0..=(p / 2) {
            let odd = 2 * j + 1;
            if odd > p {
                break;
            }
            v += binomial(p as u64, odd as i64) * &out[(p - odd) as usize] * 2u32;
        }
        out.push(v);
    }
    out
}
