//! Integer and rational sequences: second-order linear recurrences,
//! binomial coefficients, factorials, Stirling numbers of both kinds,
//! Eulerian numbers and Bernoulli numbers with `B_1 = +1/2`.
//!
//! Triangles are built row by row up to a caller-chosen bound and then
//! read by index; nothing grows beyond what the caller asks for.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `R_0 = 0, R_1 = 1, R_n = a R_{n-1} + b R_{n-2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RecurrenceSpec {
    pub a: BigInt,
    pub b: BigInt,
}

impl RecurrenceSpec {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        RecurrenceSpec {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn fibonacci() -> Self {
        Self::new(1, 1)
    }

    pub fn pell() -> Self {
        Self::new(2, 1)
    }

    /// `R_0..=R_n_max` by linear iteration.
    pub fn values(&self, n_max: usize) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(BigInt::zero());
        if n_max >= 1 {
            out.push(BigInt::one());
        }
        for n in 2..=n_max {
            let next = &self.a * &out[n - 1] + &self.b * &out[n - 2];
            out.push(next);
        }
        out
    }

    pub fn value(&self, n: usize) -> BigInt {
        let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
        if n == 0 {
            return prev;
        }
        for _ in 1..n {
            let next = &self.a * &cur + &self.b * &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }
}

/// `R_n` for the given recurrence.
pub fn rec_value(spec: &RecurrenceSpec, n: usize) -> BigInt {
    spec.value(n)
}

/// `F_0..=F_n_max`.
pub fn fibonacci_table(n_max: usize) -> Vec<BigInt> {
    RecurrenceSpec::fibonacci().values(n_max)
}

pub fn fibonacci(n: usize) -> BigInt {
    RecurrenceSpec::fibonacci().value(n)
}

/// Fibonacci by fast doubling, `F_{2k} = F_k (2F_{k+1} - F_k)`,
/// `F_{2k+1} = F_k^2 + F_{k+1}^2`. Independent of the linear iteration.
pub fn fibonacci_fast_doubling(n: u64) -> BigInt {
    fn pair(n: u64) -> (BigInt, BigInt) {
        if n == 0 {
            return (BigInt::zero(), BigInt::one());
        }
        let (f, g) = pair(n / 2);
        let even = &f * (&g * 2u32 - &f);
        let odd = &f * &f + &g * &g;
        if n % 2 == 0 {
            (even, odd)
        } else {
            let next = &even + &odd;
            (odd, next)
        }
    }
    pair(n).0
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Lower-triangular table of integers indexed `(n, k)` with `0 <= k <= n`.
/// Reads outside the stored rows or outside `0..=n` return zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    fn build(max_n: usize, step: impl Fn(&[BigInt], usize, usize) -> BigInt) -> Self {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=max_n {
            let row = (0..=n).map(|k| step(&rows[n - 1], n, k)).collect();
            rows.push(row);
        }
        Triangle { rows }
    }

    /// Pascal's triangle.
    pub fn binomial(max_n: usize) -> Self {
        Self::build(max_n, |prev, _, k| at(prev, k as i64) + at(prev, k as i64 - 1))
    }

    /// Stirling numbers of the second kind, `{n k} = k{n-1 k} + {n-1 k-1}`.
    pub fn stirling2(max_n: usize) -> Self {
        Self::build(max_n, |prev, _, k| {
            at(prev, k as i64) * k + at(prev, k as i64 - 1)
        })
    }

    /// Signed Stirling numbers of the first kind,
    /// `s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)`.
    pub fn stirling1_signed(max_n: usize) -> Self {
        Self::build(max_n, |prev, n, k| {
            at(prev, k as i64 - 1) - at(prev, k as i64) * (n - 1)
        })
    }

    /// Eulerian numbers, `<n k> = (k+1)<n-1 k> + (n-k)<n-1 k-1>`, with
    /// `<0 0> = 1`.
    pub fn eulerian(max_n: usize) -> Self {
        Self::build(max_n, |prev, n, k| {
            at(prev, k as i64) * (k + 1) + at(prev, k as i64 - 1) * (n - k)
        })
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    /// Panics if `n` is beyond the stored rows.
    pub fn get(&self, n: usize, k: i64) -> BigInt {
        assert!(n <= self.max_n(), "row {n} beyond table bound {}", self.max_n());
        at(&self.rows[n], k)
    }
}

fn at(row: &[BigInt], k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

pub fn stirling2(n: usize, k: usize) -> BigInt {
    Triangle::stirling2(n).get(n, k as i64)
}

pub fn stirling1_signed(n: usize, k: usize) -> BigInt {
    Triangle::stirling1_signed(n).get(n, k as i64)
}

pub fn eulerian(n: usize, k: i64) -> BigInt {
    Triangle::eulerian(n).get(n, k)
}

/// `B+_0..=B+_n_max` by the Akiyama–Tanigawa transform, which yields the
/// `B_1 = +1/2` convention directly.
pub fn bernoulli_plus_table(n_max: usize) -> Vec<BigRational> {
    let mut work: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    let mut out = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        work.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &work[j - 1] - &work[j];
            work[j - 1] = diff * BigInt::from(j);
        }
        out.push(work[0].clone());
    }
    out
}

fn bernoulli_memo() -> &'static Mutex<Vec<BigRational>> {
    static MEMO: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(Vec::new()))
}

/// `B+_n`, memoized process-wide.
pub fn bernoulli_plus(n: usize) -> BigRational {
    let mut memo = bernoulli_memo().lock().unwrap_or_else(|e| e.into_inner());
    if memo.len() <= n {
        *memo = bernoulli_plus_table(n);
    }
    memo[n].clone()
}
