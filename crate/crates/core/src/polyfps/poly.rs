use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::{format_rational, int, parse_rational, GaussRational, Rational};

/// Coefficient ring for [`Poly`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;
}

impl Coeff for Rational {
    fn from_int(n: i64) -> Self {
        int(n)
    }
}

impl Coeff for GaussRational {
    fn from_int(n: i64) -> Self {
        GaussRational::real(int(n))
    }
}

/// Dense polynomial, ascending degree, trailing zeros trimmed. The zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C = Rational> {
    coeffs: Vec<C>,
}

pub type GaussPoly = Poly<GaussRational>;

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x + a`.
    pub fn linear(a: C) -> Self {
        Self::new(vec![a, C::one()])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(C::zero());
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    /// `p / x` when the constant term vanishes.
    pub fn div_x(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(Self::zero()),
            Some(c0) if c0.is_zero() => Some(Self { coeffs: self.coeffs[1..].to_vec() }),
            Some(_) => None,
        }
    }

    /// Horner evaluation in the coefficient ring.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Exact `k`-th derivative; zero once `k` exceeds the degree.
    pub fn derivative(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= k {
            return Self::zero();
        }
        let coeffs = (k..self.coeffs.len())
            .map(|j| {
                // j!/(j-k)!, one factor at a time so nothing overflows
                ((j - k + 1)..=j).fold(self.coeffs[j].clone(), |acc, m| acc * C::from_int(m as i64))
            })
            .collect();
        Self::new(coeffs)
    }

    /// `p(x + a)` by Horner's scheme on `(x + a)`.
    pub fn shift(&self, a: &C) -> Self {
        let lin = Self::linear(a.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    /// `p(c·x)`.
    pub fn scale_arg(&self, c: &C) -> Self {
        let mut pow = C::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * pow.clone());
            pow = pow * c.clone();
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Odd/even part of the coefficient array: true when every coefficient
    /// whose index has the wrong parity relative to `parity` vanishes.
    pub fn has_parity(&self, parity: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == parity % 2 || c.is_zero())
    }
}

impl Poly<Rational> {
    /// Lifts to Gaussian-rational coefficients.
    pub fn to_gauss(&self) -> GaussPoly {
        Poly::new(self.coeffs.iter().cloned().map(GaussRational::real).collect())
    }

    pub fn eval_gauss(&self, z: &GaussRational) -> GaussRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussRational::zero(), |acc, c| acc * z.clone() + GaussRational::real(c.clone()))
    }

    /// Horner in double precision after rounding each coefficient.
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> crate::Result<Self> {
        items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<crate::Result<Vec<_>>>()
            .map(Self::new)
    }

    /// Builds from small integer numerators over a common denominator.
    pub fn from_ints(nums: &[i64], den: i64) -> Self {
        Self::new(nums.iter().map(|&n| crate::exactnum::rat(n, den)).collect())
    }
}

impl GaussPoly {
    /// Real part, if every coefficient is real.
    pub fn to_real(&self) -> Option<Poly> {
        self.coeffs
            .iter()
            .map(|c| c.is_real().then(|| c.re.clone()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, o: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: &Poly<C>) -> Poly<C> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { coeffs: self.coeffs.iter().cloned().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, o: Poly<C>) -> Poly<C> {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        Poly::from_strings(&items).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    #[test]
    fn high_order_derivative_does_not_overflow() {
        let p = Poly::monomial(int(1), 30);
        assert_eq!(p.derivative(30), Poly::constant(Rational::from_integer(crate::exactnum::factorial(30))));
        assert_eq!(p.derivative(25).degree(), Some(5));
    }

    fn phi_monic_4() -> Poly {
        Poly::new(vec![rat(3, 2), int(0), int(-5), int(0), int(1)])
    }

    #[test]
    fn trimming_and_degree() {
        let p = Poly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::<Rational>::new(vec![int(0)]).degree(), None);
        assert!(Poly::<Rational>::zero().is_zero());
    }

    #[test]
    fn eval_exact_and_gauss() {
        assert_eq!(phi_monic_4().eval(&int(0)), rat(3, 2));
        assert_eq!(Poly::<Rational>::x().eval_gauss(&GaussRational::i()), GaussRational::i());
        // x^4 - 5x^2 + 3/2 at i: 1 + 5 + 3/2
        assert_eq!(phi_monic_4().eval_gauss(&GaussRational::i()), GaussRational::real(rat(15, 2)));
        assert!((phi_monic_4().eval_f64(2.0) - (16.0 - 20.0 + 1.5)).abs() < 1e-15);
    }

    #[test]
    fn derivatives() {
        let d = phi_monic_4().derivative(1);
        assert_eq!(d, Poly::new(vec![int(0), int(-10), int(0), int(4)]));
        assert!(phi_monic_4().derivative(5).is_zero());
        assert_eq!(Poly::monomial(int(1), 3).derivative(2), Poly::monomial(int(6), 1));
        assert_eq!(phi_monic_4().derivative(4), Poly::constant(int(24)));
    }

    #[test]
    fn shifts() {
        let p = Poly::monomial(int(2), 2);
        assert_eq!(p.shift(&int(1)), Poly::new(vec![int(2), int(4), int(2)]));
        let x = Poly::<Rational>::x().to_gauss();
        assert_eq!(x.shift(&GaussRational::i()), Poly::linear(GaussRational::i()));
        assert_eq!(phi_monic_4().shift(&int(0)), phi_monic_4());
    }

    #[test]
    fn div_x_requires_zero_constant() {
        assert!(phi_monic_4().div_x().is_none());
        let p = phi_monic_4().mul_x();
        assert_eq!(p.div_x().unwrap(), phi_monic_4());
    }

    #[test]
    fn serde_form() {
        let s = serde_json::to_string(&phi_monic_4()).unwrap();
        assert_eq!(s, r#"["3/2","0","-5","0","1"]"#);
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, phi_monic_4());
        assert_eq!(serde_json::to_string(&Poly::<Rational>::zero()).unwrap(), "[]");
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-50i64..50, 1i64..12), 0..8)
            .prop_map(|v| Poly::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn shift_round_trip(p in arb_poly(), n in -20i64..20, d in 1i64..9) {
            let a = rat(n, d);
            prop_assert_eq!(p.shift(&a).shift(&-a.clone()), p.clone());
        }

        #[test]
        fn gauss_shift_round_trip(p in arb_poly(), re in -5i64..5, im in -5i64..5) {
            let a = GaussRational::new(int(re), int(im));
            let g = p.to_gauss();
            prop_assert_eq!(g.shift(&a).shift(&-a), g);
        }

        #[test]
        fn product_rule(p in arb_poly(), q in arb_poly()) {
            let lhs = (&p * &q).derivative(1);
            let rhs = &(&p.derivative(1) * &q) + &(&p * &q.derivative(1));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
