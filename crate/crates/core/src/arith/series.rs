use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Truncated power series `c_0 + c_1 x + ... + c_K x^K` with exact rational
/// coefficients. The order `K` is fixed at construction and binary
/// operations require both operands to share it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<BigRational>,
}

impl RatSeries {
    /// Builds a series of the given order from leading coefficients,
    /// padding with zeros or truncating as needed.
    pub fn new(order: usize, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        RatSeries { coeffs }
    }

    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Self::new(
            order,
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![BigRational::one()])
    }

    /// `e^{cx}`: coefficient of `x^j` is `c^j / j!`.
    pub fn exp_scaled(c: &BigInt, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigRational::one();
        coeffs.push(term.clone());
        for j in 1..=order {
            term *= BigRational::new(c.clone(), BigInt::from(j));
            coeffs.push(term.clone());
        }
        RatSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &BigRational {
        &self.coeffs[j]
    }

    fn check_order(&self, other: &RatSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RatSeries) -> Result<RatSeries> {
        self.check_order(other)?;
        Ok(RatSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Cauchy product truncated to the common order.
    pub fn try_mul(&self, other: &RatSeries) -> Result<RatSeries> {
        self.check_order(other)?;
        let order = self.order();
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k).fold(BigRational::zero(), |acc, i| {
                    if self.coeffs[i].is_zero() || other.coeffs[k - i].is_zero() {
                        acc
                    } else {
                        acc + &self.coeffs[i] * &other.coeffs[k - i]
                    }
                })
            })
            .collect();
        Ok(RatSeries { coeffs })
    }

    /// Multiplicative inverse to the stored order.
    pub fn inverse(&self) -> Result<RatSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for k in 1..self.coeffs.len() {
            let s = (1..=k).fold(BigRational::zero(), |acc, i| {
                acc + &self.coeffs[i] * &out[k - i]
            });
            out.push(-(s * &inv0));
        }
        Ok(RatSeries { coeffs: out })
    }
}

impl Add for &RatSeries {
    type Output = RatSeries;
    fn add(self, rhs: &RatSeries) -> RatSeries {
        self.try_add(rhs).expect("series orders must match")
    }
}

impl Neg for &RatSeries {
    type Output = RatSeries;
    fn neg(self) -> RatSeries {
        RatSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &RatSeries {
    type Output = RatSeries;
    fn sub(self, rhs: &RatSeries) -> RatSeries {
        self + &(-rhs)
    }
}

impl Mul for &RatSeries {
    type Output = RatSeries;
    fn mul(self, rhs: &RatSeries) -> RatSeries {
        self.try_mul(rhs).expect("series orders must match")
    }
}
