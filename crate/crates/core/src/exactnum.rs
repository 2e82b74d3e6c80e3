//! Exact rational and Gaussian-rational arithmetic, Bernoulli numbers and
//! even zeta values.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator, so structural equality is value
//! equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num/den` as a canonical rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Parses `"num/den"` or `"num"` (the serialized form). A denominator of
/// zero is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => BigInt::from_str(t).map(Rational::from_integer).map_err(|_| err()),
    }
}

/// Canonical `"num/den"` string, denominator omitted when it is 1.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Nearest double. `BigRational::to_f64` rounds correctly; anything that
/// lands on ±inf is reported as out of range.
pub fn rational_to_f64(q: &Rational) -> Result<f64> {
    match q.to_f64() {
        Some(v) if v.is_finite() => Ok(v),
        _ => Err(Error::OutOfRange),
    }
}

/// Serde adapter for rationals as `"num/den"` strings.
pub mod rational_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// `re + im·i` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl From<Rational> for GaussRational {
    fn from(re: Rational) -> Self {
        Self::real(re)
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        Self::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

static BERNOULLI: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// Bernoulli number `B_n` with `B_1 = -1/2`.
///
/// Computed with the Akiyama–Tanigawa triangle and memoized; the table only
/// ever grows, so concurrent callers see consistent prefixes.
pub fn bernoulli(n: usize) -> Rational {
    let table = BERNOULLI.get_or_init(|| Mutex::new(Vec::new()));
    let mut memo = table.lock().unwrap_or_else(|e| e.into_inner());
    if memo.len() <= n {
        *memo = akiyama_tanigawa(n.max(2 * memo.len()).max(16));
    }
    memo[n].clone()
}

// The triangle yields B_1 = +1/2; every other entry matches the usual
// convention.
fn akiyama_tanigawa(upto: usize) -> Vec<Rational> {
    let mut row: Vec<Rational> = Vec::with_capacity(upto + 1);
    let mut out = Vec::with_capacity(upto + 1);
    for m in 0..=upto {
        row.push(rat(1, m as i64 + 1));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * int(j as i64);
        }
        out.push(row[0].clone());
    }
    if upto >= 1 {
        out[1] = rat(-1, 2);
    }
    out
}

/// Coefficient of `u^(2k-1)` in the Taylor series of `tan u`:
/// `(-1)^(k-1) 4^k (4^k - 1) B_2k / (2k)!`, for `k >= 1`.
pub fn tan_coefficient(k: usize) -> Rational {
    assert!(k >= 1, "tan series starts at u^1");
    let four_k = BigInt::from(4u32).pow(k as u32);
    let num = &four_k * (&four_k - BigInt::one());
    let mut c = bernoulli(2 * k) * Rational::from_integer(num)
        / Rational::from_integer(factorial(2 * k as u64));
    if k.is_multiple_of(2) {
        c = -c;
    }
    c
}

/// `rational_part · π^pi_power`, exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaEven {
    pub rational_part: Rational,
    pub pi_power: u32,
}

impl ZetaEven {
    pub fn to_f64(&self) -> Result<f64> {
        let v = rational_to_f64(&self.rational_part)? * std::f64::consts::PI.powi(self.pi_power as i32);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::OutOfRange)
        }
    }
}

impl fmt::Display for ZetaEven {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·π^{}", self.rational_part, self.pi_power)
    }
}

/// `ζ(2k) = (-1)^(k+1) B_2k (2π)^(2k) / (2 (2k)!)` with π kept symbolic.
pub fn zeta_even(arg: u32) -> Result<ZetaEven> {
    if arg < 2 || arg.is_odd() {
        return Err(Error::ZetaArgument(arg));
    }
    let k = arg / 2;
    let two_pow = Rational::from_integer(BigInt::from(2u32).pow(arg));
    let mut r = bernoulli(arg as usize) * two_pow
        / (int(2) * Rational::from_integer(factorial(arg as u64)));
    if k.is_multiple_of(2) {
        r = -r;
    }
    Ok(ZetaEven { rational_part: r, pi_power: arg })
}
