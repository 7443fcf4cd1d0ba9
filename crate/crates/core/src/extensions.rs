//! Summand identities for general second-order recurrences
//! `R_n = a R_{n-1} + b R_{n-2}`: fixed cubic formulas, and a solver that
//! recovers the degree-`p` summand `w` with `R_n - n^p = sum_{i=1}^n w(i) R_{n-i}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{pow_u, rat_from_int, IntPoly};
use crate::error::{domain, Error, Result};
use crate::identities::{IdentityReport, Failure, Value};
use crate::sequences::RecurrenceSpec;

/// `(a+b-1) i^3 - 3(b+1) i^2 + 3(b-1) i - (b+1)`.
pub fn general_cubic_summand(spec: &RecurrenceSpec) -> IntPoly {
    let (a, b) = (&spec.a, &spec.b);
    IntPoly::new(vec![
        -(b + 1u32),
        (b - 1u32) * 3u32,
        -(b + 1u32) * 3u32,
        a + b - 1u32,
    ])
}

/// `2(i^3 - 3 i^2 - 1)`.
pub fn pell_cubic_summand() -> IntPoly {
    IntPoly::from_i64s(&[-2, 0, -6, 2])
}

fn summand_identity_check(
    id: &str,
    spec: &RecurrenceSpec,
    summand: &IntPoly,
    p: u32,
    n_max: u64,
) -> IdentityReport {
    let r = spec.values(n_max as usize);
    let weights: Vec<BigInt> = (0..=n_max).map(|i| summand.eval_i64(i as i64)).collect();
    let first = (0..=n_max).find_map(|n| {
        let lhs = &r[n as usize] - pow_u(&BigInt::from(n), p);
        let rhs: BigInt = (1..=n).map(|i| &weights[i as usize] * &r[(n - i) as usize]).sum();
        (lhs != rhs).then(|| Failure {
            index: vec![("n", n as i64)],
            lhs: Value::Int(lhs),
            rhs: Value::Int(rhs),
        })
    });
    IdentityReport::new(id, format!("a={}, b={}, 0 <= n <= {n_max}", spec.a, spec.b), first)
}

/// `P_n - n^3 = 2 sum_{i=1}^n (i^3 - 3 i^2 - 1) P_{n-i}` for Pell numbers.
pub fn pell_cubic_check(n_max: u64) -> IdentityReport {
    summand_identity_check("pell_cubic", &RecurrenceSpec::pell(), &pell_cubic_summand(), 3, n_max)
}

/// The cubic summand identity for an arbitrary `(a, b)` recurrence.
pub fn general_cubic_check(spec: &RecurrenceSpec, n_max: u64) -> IdentityReport {
    summand_identity_check("general_cubic", spec, &general_cubic_summand(spec), 3, n_max)
}

/// A summand polynomial with rational coefficients, verified up to
/// `verified_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSummand {
    pub spec: RecurrenceSpec,
    pub p: u32,
    /// Ascending powers of `i`.
    pub coeffs: Vec<BigRational>,
    pub verified_to: u64,
}

impl DerivedSummand {
    /// The summand as an integer polynomial, if every coefficient is integral.
    pub fn as_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    pub fn eval(&self, i: &BigInt) -> BigRational {
        let x = rat_from_int(i.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }
}

/// Solves for the degree-`p` summand from the instances `n = 2..=p+2` and
/// checks it for every `n <= verify_to`.
pub fn derive_summand(spec: &RecurrenceSpec, p: u32, verify_to: u64) -> Result<DerivedSummand> {
    if p == 0 {
        return Err(domain("summand degree must be at least 1"));
    }
    if verify_to < p as u64 + 3 {
        return Err(domain(format!("verify_to must be at least p + 3 = {}", p + 3)));
    }
    let size = p as usize + 1;
    let r = spec.values(verify_to as usize);

    // Row for instance n: sum_j c_j (sum_{i=1}^n i^j R_{n-i}) = R_n - n^p.
    let mut system: Vec<Vec<BigInt>> = (2..=p as u64 + 2)
        .map(|n| {
            let mut row: Vec<BigInt> = (0..size)
                .map(|j| {
                    (1..=n)
                        .map(|i| pow_u(&BigInt::from(i), j as u32) * &r[(n - i) as usize])
                        .sum()
                })
                .collect();
            row.push(&r[n as usize] - pow_u(&BigInt::from(n), p));
            row
        })
        .collect();
    let coeffs = solve_fraction_free(&mut system)?;

    let candidate = DerivedSummand {
        spec: spec.clone(),
        p,
        coeffs,
        verified_to: verify_to,
    };
    verify_summand(&candidate, &r)?;
    Ok(candidate)
}

/// Checks `R_n - n^p = sum_{i=1}^n w(i) R_{n-i}` for `n <= verified_to`.
fn verify_summand(candidate: &DerivedSummand, r: &[BigInt]) -> Result<()> {
    let weights: Vec<BigRational> = (0..=candidate.verified_to)
        .map(|i| candidate.eval(&BigInt::from(i)))
        .collect();
    for n in 0..=candidate.verified_to {
        let lhs = rat_from_int(&r[n as usize] - pow_u(&BigInt::from(n), candidate.p));
        let rhs = (1..=n).fold(BigRational::zero(), |acc, i| {
            acc + &weights[i as usize] * rat_from_int(r[(n - i) as usize].clone())
        });
        if lhs != rhs {
            return Err(Error::VerificationFailed {
                n,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    Ok(())
}

/// Solves a square system given as augmented integer rows by Bareiss
/// elimination, then back-substitutes over the rationals.
fn solve_fraction_free(m: &mut [Vec<BigInt>]) -> Result<Vec<BigRational>> {
    let size = m.len();
    let mut prev = BigInt::one();
    for k in 0..size {
        let pivot = (k..size)
            .find(|&row| !m[row][k].is_zero())
            .ok_or(Error::SingularSystem)?;
        m.swap(k, pivot);
        for i in k + 1..size {
            for j in k + 1..=size {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x = vec![BigRational::zero(); size];
    for i in (0..size).rev() {
        let mut acc = rat_from_int(m[i][size].clone());
        for j in i + 1..size {
            acc -= rat_from_int(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / rat_from_int(m[i][i].clone());
    }
    Ok(x)
}
