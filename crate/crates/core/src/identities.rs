//! Independent recomputations of `A_k` and `B_k`, and range checks of the
//! identities that tie them to Fibonacci numbers.
//!
//! Every check produces an [`IdentityReport`]. Ranges are scanned in
//! parallel, but the reported failure is always the first one in scan
//! order, so results match a sequential run.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{pow_u, rat_from_int, RatSeries};
use crate::closed_form::{
    brousseau_closed, brute_convolution_with, brute_sum_with, convolution_by_lower_orders,
    convolution_closed, summand_coeffs, ClosedForm, CoeffTable, FormKind,
};
use crate::error::{domain, Error, Result};
use crate::sequences::{bernoulli_plus_table, factorial, fibonacci_table, Triangle};

/// One side of a failed comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Rat(BigRational),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Rat(v) => write!(f, "{v}"),
        }
    }
}

impl From<BigInt> for Value {
    fn from(v: BigInt) -> Self {
        Value::Int(v)
    }
}

impl From<BigRational> for Value {
    fn from(v: BigRational) -> Self {
        Value::Rat(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Named coordinates of the failing instance, e.g. `[("p", 3), ("n", 7)]`.
    pub index: Vec<(&'static str, i64)>,
    pub lhs: Value,
    pub rhs: Value,
}

impl Failure {
    pub fn index_string(&self) -> String {
        self.index
            .iter()
            .map(|(name, v)| format!("{name}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_id: String,
    pub range_checked: String,
    pub first_failure: Option<Failure>,
}

impl IdentityReport {
    pub fn new(
        identity_id: impl Into<String>,
        range_checked: impl Into<String>,
        first_failure: Option<Failure>,
    ) -> Self {
        IdentityReport {
            identity_id: identity_id.into(),
            range_checked: range_checked.into(),
            first_failure,
        }
    }

    pub fn status(&self) -> Status {
        match self.first_failure {
            None => Status::Verified,
            Some(_) => Status::Failed,
        }
    }

    pub fn verified(&self) -> bool {
        self.status() == Status::Verified
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_failure {
            None => write!(f, "verified  {}  [{}]", self.identity_id, self.range_checked),
            Some(fail) => write!(
                f,
                "FAILED    {}  [{}]  first failure at {}: lhs = {}, rhs = {}",
                self.identity_id,
                self.range_checked,
                fail.index_string(),
                fail.lhs,
                fail.rhs
            ),
        }
    }
}

fn compare<T: PartialEq + Into<Value>>(
    index: Vec<(&'static str, i64)>,
    lhs: T,
    rhs: T,
) -> Option<Failure> {
    if lhs == rhs {
        None
    } else {
        Some(Failure {
            index,
            lhs: lhs.into(),
            rhs: rhs.into(),
        })
    }
}

/// First failure in `items` order, evaluated in parallel.
fn scan<T, F>(items: &[T], check: F) -> Option<Failure>
where
    T: Sync,
    F: Fn(&T) -> Option<Failure> + Sync + Send,
{
    items.par_iter().find_map_first(check)
}

fn sign(k: usize) -> i32 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    A,
    B,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::A => "A",
            Which::B => "B",
        })
    }
}

/// Alternative formulas for `A_k` / `B_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AltMethod {
    /// `(-1)^k A_k = sum_j C(k,j) (-1)^j B_j` and `B_k = sum_j C(k,j) A_j`.
    Ledin,
    /// `A_k = sum_{j<k} C(k,j) B_j`, A only.
    DresdenInverse,
    /// `A_k = sum_{j<k} (2^{k-j}-1) C(k,j) A_j`, and the same for `B_k` plus 1.
    Hoggatt,
    /// `A_k = sum_j j! F_{j+1} {k j}`, `B_k = sum_j j! F_{j+2} {k j}`.
    ZeitlinStirling2,
    /// `A_k = sum_j <k j> F_{k+j+1}`, `B_k = sum_j <k j> F_{k+j+2}`.
    KmtEulerian,
    /// `B_k = (-1)^k [1 - sum_{j<k} C(k,j) (2^{k-j}+1) (-1)^j B_j]`, B only.
    Adegoke,
}

impl AltMethod {
    pub const ALL: [AltMethod; 6] = [
        AltMethod::Ledin,
        AltMethod::DresdenInverse,
        AltMethod::Hoggatt,
        AltMethod::ZeitlinStirling2,
        AltMethod::KmtEulerian,
        AltMethod::Adegoke,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AltMethod::Ledin => "ledin",
            AltMethod::DresdenInverse => "dresden_inverse",
            AltMethod::Hoggatt => "hoggatt",
            AltMethod::ZeitlinStirling2 => "zeitlin_stirling2",
            AltMethod::KmtEulerian => "kmt_eulerian",
            AltMethod::Adegoke => "adegoke",
        }
    }

    pub fn supports(self, which: Which) -> bool {
        !matches!(
            (self, which),
            (AltMethod::DresdenInverse, Which::B) | (AltMethod::Adegoke, Which::A)
        )
    }

    /// Smallest `k` at which the formula is defined.
    pub fn min_k(self) -> usize {
        match self {
            AltMethod::DresdenInverse | AltMethod::Hoggatt | AltMethod::Adegoke => 1,
            _ => 0,
        }
    }

    /// Largest table index the formula reads when evaluated at `k`.
    fn table_need(self, k: usize) -> Option<usize> {
        match self {
            AltMethod::Ledin => Some(k),
            AltMethod::DresdenInverse | AltMethod::Hoggatt | AltMethod::Adegoke => Some(k - 1),
            AltMethod::ZeitlinStirling2 | AltMethod::KmtEulerian => None,
        }
    }
}

/// Shared ingredient tables for evaluating alternative formulas up to `k_max`.
struct AltContext {
    fib: Vec<BigInt>,
    pascal: Triangle,
    stirling2: Triangle,
    eulerian: Triangle,
}

impl AltContext {
    fn new(k_max: usize) -> Self {
        AltContext {
            fib: fibonacci_table(2 * k_max + 2),
            pascal: Triangle::binomial(k_max),
            stirling2: Triangle::stirling2(k_max),
            eulerian: Triangle::eulerian(k_max),
        }
    }

    fn value(&self, method: AltMethod, which: Which, k: usize, table: &CoeffTable) -> Result<BigInt> {
        if !method.supports(which) {
            return Err(domain(format!("{} has no formula for {which}_k", method.name())));
        }
        if k < method.min_k() {
            return Err(domain(format!("{} is defined for k >= {}", method.name(), method.min_k())));
        }
        if let Some(need) = method.table_need(k) {
            table.require(need)?;
        }
        let c = |j: usize| self.pascal.get(k, j as i64);
        let seq = match which {
            Which::A => table.a(),
            Which::B => table.b(),
        };
        let two_pow = |e: usize| BigInt::one() << e;
        let v = match (method, which) {
            (AltMethod::Ledin, Which::A) => {
                let s: BigInt = (0..=k).map(|j| c(j) * &table.b()[j] * sign(j)).sum();
                s * sign(k)
            }
            (AltMethod::Ledin, Which::B) => (0..=k).map(|j| c(j) * &table.a()[j]).sum(),
            (AltMethod::DresdenInverse, _) => (0..k).map(|j| c(j) * &table.b()[j]).sum(),
            (AltMethod::Hoggatt, _) => {
                let s: BigInt = (0..k).map(|j| (two_pow(k - j) - 1u32) * c(j) * &seq[j]).sum();
                if which == Which::B {
                    s + 1u32
                } else {
                    s
                }
            }
            (AltMethod::ZeitlinStirling2, _) => {
                let shift = if which == Which::A { 1 } else { 2 };
                (0..=k)
                    .map(|j| factorial(j as u64) * &self.fib[j + shift] * self.stirling2.get(k, j as i64))
                    .sum()
            }
            (AltMethod::KmtEulerian, _) => {
                // For k >= 1 the Eulerian row vanishes at j = k, so this is the
                // sum over 0 <= j <= k-1; for k = 0 it keeps <0 0> = 1.
                let shift = if which == Which::A { 1 } else { 2 };
                (0..=k)
                    .map(|j| self.eulerian.get(k, j as i64) * &self.fib[k + j + shift])
                    .sum()
            }
            (AltMethod::Adegoke, _) => {
                let s: BigInt = (0..k)
                    .map(|j| c(j) * (two_pow(k - j) + 1u32) * &table.b()[j] * sign(j))
                    .sum();
                (BigInt::one() - s) * sign(k)
            }
        };
        Ok(v)
    }
}

/// Value of `which_k` by the given alternative formula, reading lower
/// entries from `table` where the formula needs them.
pub fn alt_value(method: AltMethod, which: Which, k: usize, table: &CoeffTable) -> Result<BigInt> {
    AltContext::new(k).value(method, which, k, table)
}

/// Compares an alternative formula against `table` for `min_k <= k <= k_max`.
pub fn cross_formula_check(
    method: AltMethod,
    which: Which,
    k_max: usize,
    table: &CoeffTable,
) -> Result<IdentityReport> {
    table.require(k_max)?;
    if !method.supports(which) {
        return Err(domain(format!("{} has no formula for {which}_k", method.name())));
    }
    let ctx = AltContext::new(k_max);
    let expected = match which {
        Which::A => table.a(),
        Which::B => table.b(),
    };
    let values: Vec<BigInt> = (method.min_k()..=k_max)
        .into_par_iter()
        .map(|k| ctx.value(method, which, k, table))
        .collect::<Result<_>>()?;
    let first = values.into_iter().enumerate().find_map(|(offset, v)| {
        let k = method.min_k() + offset;
        compare(vec![("k", k as i64)], v, expected[k].clone())
    });
    Ok(IdentityReport::new(
        format!("{}:{which}", method.name()),
        format!("{} <= k <= {k_max}", method.min_k()),
        first,
    ))
}

/// `k! [x^k]` of `1/(e^x - e^{2x} + 1) - 1` (for A) or
/// `e^x/(e^x - e^{2x} + 1)` (for B), for `0 <= k <= k_max`.
///
/// The A series has constant term 0 while `A_0 = 1`; entry 0 of the A list
/// is reported as 1 and the series is only informative for `k >= 1`.
pub fn egf_coefficients(which: Which, k_max: usize) -> Result<Vec<BigInt>> {
    let one = BigInt::one();
    let e1 = RatSeries::exp_scaled(&one, k_max);
    let e2 = RatSeries::exp_scaled(&BigInt::from(2), k_max);
    let denom = &(&e1 - &e2) + &RatSeries::one(k_max);
    let inv = denom.inverse()?;
    let series = match which {
        Which::A => &inv - &RatSeries::one(k_max),
        Which::B => &e1 * &inv,
    };
    let mut out = Vec::with_capacity(k_max + 1);
    let mut fact = BigInt::one();
    for (k, c) in series.coeffs().iter().enumerate() {
        if k > 0 {
            fact *= k;
        }
        let scaled = c * rat_from_int(fact.clone());
        if !scaled.is_integer() {
            return Err(Error::Internal(format!(
                "{k}! times coefficient {k} of the {which} generating function is {scaled}"
            )));
        }
        out.push(scaled.to_integer());
    }
    if which == Which::A {
        out[0] = BigInt::one();
    }
    Ok(out)
}

pub fn egf_check(which: Which, k_max: usize, table: &CoeffTable) -> Result<IdentityReport> {
    table.require(k_max)?;
    let expected = match which {
        Which::A => table.a(),
        Which::B => table.b(),
    };
    let first = egf_coefficients(which, k_max)?
        .into_iter()
        .enumerate()
        .find_map(|(k, v)| compare(vec![("k", k as i64)], v, expected[k].clone()));
    Ok(IdentityReport::new(format!("egf:{which}"), format!("0 <= k <= {k_max}"), first))
}

/// `(n! F_{n+1} == sum_k s(n,k) A_k, n! F_{n+2} == sum_k s(n,k) B_k)` with
/// signed Stirling numbers of the first kind.
pub fn zeitlin_firstkind_check(n: usize, table: &CoeffTable) -> Result<(bool, bool)> {
    let (a, b) = zeitlin_firstkind_sides(n, table, &Triangle::stirling1_signed(n))?;
    Ok((a.0 == a.1, b.0 == b.1))
}

type Sides = (BigInt, BigInt);

fn zeitlin_firstkind_sides(n: usize, table: &CoeffTable, s1: &Triangle) -> Result<(Sides, Sides)> {
    if n == 0 {
        return Err(domain("first-kind identities are stated for n >= 1"));
    }
    table.require(n)?;
    let fib = fibonacci_table(n + 2);
    let fact = factorial(n as u64);
    let rhs = |seq: &[BigInt]| -> BigInt { (1..=n).map(|k| s1.get(n, k as i64) * &seq[k]).sum() };
    Ok((
        (&fact * &fib[n + 1], rhs(table.a())),
        (&fact * &fib[n + 2], rhs(table.b())),
    ))
}

pub fn zeitlin_firstkind_report(n_max: usize, table: &CoeffTable) -> Result<IdentityReport> {
    table.require(n_max)?;
    let s1 = Triangle::stirling1_signed(n_max);
    let mut first = None;
    for n in 1..=n_max {
        let ((la, ra), (lb, rb)) = zeitlin_firstkind_sides(n, table, &s1)?;
        first = compare(vec![("n", n as i64), ("which", 0)], la, ra)
            .or_else(|| compare(vec![("n", n as i64), ("which", 1)], lb, rb));
        if first.is_some() {
            break;
        }
    }
    Ok(IdentityReport::new("zeitlin_firstkind", format!("1 <= n <= {n_max}"), first))
}

/// Right-hand side of the conjectured Bernoulli relation
///
/// ```text
/// B_k = k (5/2 B_{k-1} + (-1)^{k-1})
///     - sum_{j=1}^{k-2} (-1)^{k+j} B_j sum_{r=j}^{k} C(k,r) C(r,j) B+_{k-r}
/// ```
///
/// evaluated exactly. Bernoulli numbers are held over a common denominator
/// so the double sum runs in integers.
pub struct ShannonOllerton<'t> {
    table: &'t CoeffTable,
    pascal: Triangle,
    bern_scaled: Vec<BigInt>,
    denom: BigInt,
}

impl<'t> ShannonOllerton<'t> {
    pub fn new(k_max: usize, table: &'t CoeffTable) -> Result<Self> {
        if k_max < 2 {
            return Err(domain("the Bernoulli relation is stated for k >= 2"));
        }
        table.require(k_max)?;
        let bern = bernoulli_plus_table(k_max);
        let denom = bern.iter().fold(BigInt::one(), |acc, b| acc.lcm(b.denom()));
        let bern_scaled = bern
            .iter()
            .map(|b| b.numer() * (&denom / b.denom()))
            .collect();
        Ok(ShannonOllerton {
            table,
            pascal: Triangle::binomial(k_max),
            bern_scaled,
            denom,
        })
    }

    pub fn rhs(&self, k: usize) -> BigRational {
        assert!(k >= 2 && k <= self.pascal.max_n());
        let b = self.table.b();
        // Scaled by `denom`.
        let mut tail = BigInt::zero();
        for j in 1..=k - 2 {
            let mut inner = BigInt::zero();
            for r in j..=k {
                let w = &self.bern_scaled[k - r];
                if w.is_zero() {
                    continue;
                }
                inner += self.pascal.get(k, r as i64) * self.pascal.get(r, j as i64) * w;
            }
            let term = &b[j] * inner;
            if (k + j) % 2 == 0 {
                tail += term;
            } else {
                tail -= term;
            }
        }
        // k (5/2 B_{k-1} + (-1)^{k-1}) - tail/denom over 2 denom.
        let head = (&b[k - 1] * 5u32 + 2 * sign(k - 1)) * k;
        BigRational::new(head * &self.denom - tail * 2u32, &self.denom * 2u32)
    }

    pub fn check_range(&self, ks: std::ops::RangeInclusive<usize>) -> Option<Failure> {
        let ks: Vec<usize> = ks.collect();
        scan(&ks, |&k| {
            compare(vec![("k", k as i64)], rat_from_int(self.table.b()[k].clone()), self.rhs(k))
        })
    }
}

/// Checks the Bernoulli relation for every `2 <= k <= k_max`.
pub fn shannon_ollerton_check(k_max: usize, table: &CoeffTable) -> Result<IdentityReport> {
    let so = ShannonOllerton::new(k_max, table)?;
    Ok(IdentityReport::new(
        "shannon_ollerton",
        format!("2 <= k <= {k_max}"),
        so.check_range(2..=k_max),
    ))
}

/// `(n^3 + 6n - 12) F_{n+2} + (-3n^2 + 9n - 19) F_{n+3} + 50`.
pub fn erbacher_fuchs_value(n: u64, fib: &[BigInt]) -> BigInt {
    let n_i = n as i64;
    let n = n as usize;
    BigInt::from(n_i.pow(3) + 6 * n_i - 12) * &fib[n + 2]
        + BigInt::from(-3 * n_i * n_i + 9 * n_i - 19) * &fib[n + 3]
        + 50
}

pub fn erbacher_fuchs_check(n_max: u64) -> IdentityReport {
    let fib = fibonacci_table(n_max as usize + 3);
    let ns: Vec<u64> = (0..=n_max).collect();
    let first = scan(&ns, |&n| {
        compare(vec![("n", n as i64)], brute_sum_with(3, n, &fib), erbacher_fuchs_value(n, &fib))
    });
    IdentityReport::new("erbacher_fuchs", format!("0 <= n <= {n_max}"), first)
}

fn grid(p_range: std::ops::RangeInclusive<u32>, n_max: u64) -> Vec<(u32, u64)> {
    p_range.flat_map(|p| (0..=n_max).map(move |n| (p, n))).collect()
}

/// `F_n - n^p = sum_{i=1}^n w_p(i) F_{n-i}` for `1 <= p <= p_max`, `0 <= n <= n_max`.
pub fn theorem1_check(p_max: u32, n_max: u64) -> IdentityReport {
    let fib = fibonacci_table(n_max as usize);
    let polys: Vec<_> = (0..=p_max)
        .map(|p| if p == 0 { None } else { summand_coeffs(p).ok() })
        .collect();
    let first = scan(&grid(1..=p_max, n_max), |&(p, n)| {
        let w = polys[p as usize].as_ref().expect("p >= 1");
        let lhs = &fib[n as usize] - pow_u(&BigInt::from(n), p);
        let rhs: BigInt = (1..=n).map(|i| w.eval_i64(i as i64) * &fib[(n - i) as usize]).sum();
        compare(vec![("p", p as i64), ("n", n as i64)], lhs, rhs)
    });
    IdentityReport::new("theorem1", format!("1 <= p <= {p_max}, 0 <= n <= {n_max}"), first)
}

/// `(n-1)^p + n^p - (n+1)^p = n^p - 2 sum_j C(p,2j+1) n^{p-2j-1}` for
/// `1 <= p <= p_max`, `|n| <= n_abs`.
pub fn auxiliary_power_check(p_max: u32, n_abs: i64) -> IdentityReport {
    let mut first = None;
    'outer: for p in 1..=p_max {
        let w = summand_coeffs(p).expect("p >= 1");
        for n in -n_abs..=n_abs {
            let nn = BigInt::from(n);
            let lhs = pow_u(&(&nn - 1), p) + pow_u(&nn, p) - pow_u(&(&nn + 1), p);
            first = compare(vec![("p", p as i64), ("n", n)], lhs, w.eval(&nn));
            if first.is_some() {
                break 'outer;
            }
        }
    }
    IdentityReport::new("power_difference", format!("1 <= p <= {p_max}, |n| <= {n_abs}"), first)
}

/// Evaluates closed forms of `kind` at the given `(p, n)` points against
/// the brute-force sums.
pub fn closed_form_points_check(
    kind: FormKind,
    points: &[(u32, u64)],
    table: &CoeffTable,
    range_checked: impl Into<String>,
) -> Result<IdentityReport> {
    let p_max = points.iter().map(|&(p, _)| p).max().unwrap_or(0);
    let n_max = points.iter().map(|&(_, n)| n).max().unwrap_or(0);
    table.require(p_max as usize)?;
    let fib = fibonacci_table(n_max as usize + 1);
    let forms: Vec<ClosedForm> = (0..=p_max)
        .map(|p| match kind {
            FormKind::Sum => brousseau_closed(p, table),
            FormKind::Convolution => convolution_closed(p, table),
        })
        .collect::<Result<_>>()?;
    let first = scan(points, |&(p, n)| {
        let oracle = match kind {
            FormKind::Sum => brute_sum_with(p, n, &fib),
            FormKind::Convolution => brute_convolution_with(p, n, &fib),
        };
        compare(
            vec![("p", p as i64), ("n", n as i64)],
            forms[p as usize].eval_with(n, &fib),
            oracle,
        )
    });
    let id = match kind {
        FormKind::Sum => "theorem3",
        FormKind::Convolution => "theorem2",
    };
    Ok(IdentityReport::new(id, range_checked, first))
}

/// Convolution closed forms against brute force on the full grid.
pub fn theorem2_check(p_max: u32, n_max: u64, table: &CoeffTable) -> Result<IdentityReport> {
    closed_form_points_check(
        FormKind::Convolution,
        &grid(0..=p_max, n_max),
        table,
        format!("0 <= p <= {p_max}, 0 <= n <= {n_max}"),
    )
}

/// Sum closed forms against brute force on the full grid.
pub fn theorem3_check(p_max: u32, n_max: u64, table: &CoeffTable) -> Result<IdentityReport> {
    closed_form_points_check(
        FormKind::Sum,
        &grid(0..=p_max, n_max),
        table,
        format!("0 <= p <= {p_max}, 0 <= n <= {n_max}"),
    )
}

/// The lower-order convolution relation against brute force.
pub fn lower_order_check(p_max: u32, n_max: u64) -> IdentityReport {
    let fib = fibonacci_table(n_max as usize);
    let ns: Vec<u64> = (0..=n_max).collect();
    let first = scan(&ns, |&n| {
        let rec = convolution_by_lower_orders(p_max, n, &fib);
        (0..=p_max).find_map(|p| {
            compare(
                vec![("p", p as i64), ("n", n as i64)],
                rec[p as usize].clone(),
                brute_convolution_with(p, n, &fib),
            )
        })
    });
    IdentityReport::new("convolution_recursion", format!("0 <= p <= {p_max}, 0 <= n <= {n_max}"), first)
}
