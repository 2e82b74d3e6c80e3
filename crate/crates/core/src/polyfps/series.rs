use std::str::FromStr;

use num_traits::{One, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, tan_coefficient, Rational};

/// Power series in `t` truncated below `t^order`, with polynomial-in-`x`
/// coefficients. Binary operations take the smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeries {
    order: usize,
    coeffs: Vec<Poly>,
}

impl PolySeries {
    pub fn new(order: usize, mut coeffs: Vec<Poly>) -> Self {
        coeffs.resize(order, Poly::zero());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![Poly::one()])
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::new(order, vec![Poly::zero(), Poly::one()])
    }

    pub fn from_constants(order: usize, cs: Vec<Rational>) -> Self {
        Self::new(order, cs.into_iter().map(Poly::constant).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; reading at or past the order is an error.
    pub fn coeff(&self, n: usize) -> Result<&Poly> {
        self.coeffs.get(n).ok_or(Error::BeyondOrder { index: n, order: self.order })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::new(order, self.coeffs[..order].to_vec())
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        Self::new(order, (0..order).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        Self::new(order, (0..order).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let mut out = vec![Poly::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(order - i) {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Self::new(order, out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul_by_poly(&self, p: &Poly) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| c * p).collect())
    }

    /// `s(c·t)`.
    pub fn scale_t(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.order);
        for p in &self.coeffs {
            out.push(p.scale(&pow));
            pow *= c;
        }
        Self::new(self.order, out)
    }

    /// Multiplicative inverse; the constant term must be a nonzero constant.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = match self.coeffs.first() {
            Some(p) if p.degree() == Some(0) => p.coeff(0),
            _ => return Err(Error::NonInvertibleSeries),
        };
        let inv0 = c0.recip();
        let mut out: Vec<Poly> = Vec::with_capacity(self.order);
        out.push(Poly::constant(inv0.clone()));
        for n in 1..self.order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                acc = &acc + &(&self.coeffs[k] * &out[n - k]);
            }
            out.push(acc.scale(&-inv0.clone()));
        }
        Ok(Self::new(self.order, out))
    }

    /// `self / q`.
    pub fn scalar_div(&self, q: &Self) -> Result<Self> {
        Ok(self.mul(&q.inverse()?))
    }

    /// `Σ_k outer_k · inner^k`, requiring `inner` to have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::NonZeroConstantTerm);
        }
        let order = self.order.min(inner.order);
        let mut acc = Self::zero(order);
        let mut pow = Self::one(order);
        for k in 0..order {
            if !self.coeffs[k].is_zero() {
                acc = acc.add(&pow.mul_by_poly(&self.coeffs[k]));
            }
            pow = pow.mul(inner);
        }
        Ok(acc)
    }

    /// `exp(self) = Σ self^m / m!`; finite because the constant term is zero.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::NonZeroConstantTerm);
        }
        let mut fact = Rational::one();
        let taylor = (0..self.order)
            .map(|m| {
                if m > 0 {
                    fact *= int(m as i64);
                }
                fact.recip()
            })
            .collect();
        Self::from_constants(self.order, taylor).compose(self)
    }

    /// Coefficient-wise `∂^k/∂x^k`.
    pub fn derivative_x(&self, k: usize) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|p| p.derivative(k)).collect())
    }

    /// Exact division by `t`; the constant term must vanish. The order drops
    /// by one.
    pub fn div_t(&self) -> Result<Self> {
        match self.coeffs.first() {
            Some(c) if !c.is_zero() => Err(Error::Divisibility(format!(
                "constant term {c} is not divisible by t"
            ))),
            None => Ok(Self::zero(0)),
            Some(_) => Ok(Self::new(self.order - 1, self.coeffs[1..].to_vec())),
        }
    }

    /// Exact division of every coefficient by `x`.
    pub fn div_x(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, p)| {
                p.div_x().ok_or_else(|| {
                    Error::Divisibility(format!("coefficient of t^{n} ({p}) is not divisible by x"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(self.order, coeffs))
    }
}

/// Elementary series with constant coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// `2·arctan(t/2)`
    ArctanHalf,
    /// `2·artanh(t)`
    Artanh,
    /// `2·tan(t/2)`
    TanHalf,
    /// `log((1+t)/(1-t))`
    LogRatio,
}

impl SeriesKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::ArctanHalf => "arctan_half",
            Self::Artanh => "artanh",
            Self::TanHalf => "tan_half",
            Self::LogRatio => "log_ratio",
        }
    }
}

impl FromStr for SeriesKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "arctan_half" => Ok(Self::ArctanHalf),
            "artanh" => Ok(Self::Artanh),
            "tan_half" => Ok(Self::TanHalf),
            "log_ratio" => Ok(Self::LogRatio),
            _ => Err(Error::UnknownSeriesKind(s.to_string())),
        }
    }
}

pub fn series_elementary(kind: SeriesKind, order: usize) -> Result<PolySeries> {
    if order == 0 {
        return Err(Error::InvalidParameter("series order must be >= 1".into()));
    }
    let mut cs = vec![Rational::zero(); order];
    match kind {
        SeriesKind::ArctanHalf => {
            // (-1)^k t^(2k+1) / (4^k (2k+1))
            let mut four_k = Rational::one();
            for k in 0.. {
                let j = 2 * k + 1;
                if j >= order {
                    break;
                }
                let c = (four_k.clone() * int(j as i64)).recip();
                cs[j] = if k % 2 == 0 { c } else { -c };
                four_k *= int(4);
            }
        }
        SeriesKind::Artanh => {
            for j in (1..order).step_by(2) {
                cs[j] = rat(2, j as i64);
            }
        }
        SeriesKind::TanHalf => {
            // 2·tan(u) at u = t/2 gives 2·θ_(2k-1) / 2^(2k-1)
            let mut half_pow = rat(1, 2);
            for k in 1.. {
                let j = 2 * k - 1;
                if j >= order {
                    break;
                }
                cs[j] = tan_coefficient(k) * &half_pow * int(2);
                half_pow /= int(4);
            }
        }
        SeriesKind::LogRatio => {
            // log(1+t) - log(1-t), termwise
            for j in 1..order {
                let plus = if j % 2 == 1 { rat(1, j as i64) } else { rat(-1, j as i64) };
                let minus = rat(-1, j as i64);
                cs[j] = plus - minus;
            }
        }
    }
    Ok(PolySeries::from_constants(order, cs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn consts(s: &PolySeries) -> Vec<Rational> {
        s.coeffs().iter().map(|p| p.coeff(0)).collect()
    }

    #[test]
    fn elementary_series_values() {
        let a = series_elementary(SeriesKind::ArctanHalf, 6).unwrap();
        assert_eq!(consts(&a), vec![int(0), int(1), int(0), rat(-1, 12), int(0), rat(1, 80)]);
        let t = series_elementary(SeriesKind::TanHalf, 6).unwrap();
        assert_eq!(consts(&t), vec![int(0), int(1), int(0), rat(1, 12), int(0), rat(1, 120)]);
        let l = series_elementary(SeriesKind::LogRatio, 6).unwrap();
        assert_eq!(consts(&l), vec![int(0), int(2), int(0), rat(2, 3), int(0), rat(2, 5)]);
        assert_eq!(series_elementary(SeriesKind::Artanh, 9).unwrap(), series_elementary(SeriesKind::LogRatio, 9).unwrap());
        assert!(series_elementary(SeriesKind::Artanh, 0).is_err());
        assert!("arcsin".parse::<SeriesKind>().is_err());
        assert_eq!("tan-half".parse::<SeriesKind>().unwrap(), SeriesKind::TanHalf);
    }

    #[test]
    fn arctan_half_and_tan_half_are_inverse() {
        let a = series_elementary(SeriesKind::ArctanHalf, 13).unwrap();
        let t = series_elementary(SeriesKind::TanHalf, 13).unwrap();
        assert_eq!(t.compose(&a).unwrap(), PolySeries::t(13));
        assert_eq!(a.compose(&t).unwrap(), PolySeries::t(13));
    }

    #[test]
    fn exp_of_x_log_ratio_gives_g2() {
        let l = series_elementary(SeriesKind::LogRatio, 5).unwrap();
        let e = l.mul_by_poly(&Poly::x()).exp().unwrap();
        assert_eq!(e.coeff(2).unwrap(), &Poly::monomial(int(2), 2));
        assert!(e.coeff(5).is_err());
    }

    #[test]
    fn egf_assembly_first_coefficients() {
        let a = series_elementary(SeriesKind::ArctanHalf, 6).unwrap();
        let num = a.mul_by_poly(&Poly::x()).exp().unwrap();
        let den = PolySeries::from_constants(6, vec![int(1), int(0), rat(1, 4)]);
        let g = num.scalar_div(&den).unwrap();
        assert_eq!(g.coeff(0).unwrap(), &Poly::one());
        assert_eq!(g.coeff(1).unwrap(), &Poly::x());
    }

    #[test]
    fn error_paths() {
        let z = PolySeries::t(4);
        assert_eq!(z.inverse(), Err(Error::NonInvertibleSeries));
        assert_eq!(PolySeries::one(4).exp(), Err(Error::NonZeroConstantTerm));
        assert!(PolySeries::one(4).div_t().is_err());
        assert!(PolySeries::one(4).div_x().is_err());
        let xs = PolySeries::new(3, vec![Poly::x()]);
        assert!(PolySeries::one(3).scalar_div(&xs).is_err());
    }

    #[test]
    fn order_propagates_as_minimum() {
        let a = PolySeries::one(5);
        let b = PolySeries::t(3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.add(&b).order(), 3);
    }

    fn arb_series(order: usize) -> impl Strategy<Value = PolySeries> {
        prop::collection::vec(prop::collection::vec((-9i64..9, 1i64..5), 0..3), order)
            .prop_map(move |cs| {
                let polys = cs
                    .into_iter()
                    .map(|v| Poly::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
                    .collect();
                PolySeries::new(order, polys)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn exp_times_exp_neg_is_one(s in arb_series(7)) {
            let u = PolySeries::new(7, std::iter::once(Poly::zero()).chain(s.coeffs()[1..].iter().cloned()).collect());
            let prod = u.exp().unwrap().mul(&u.neg().exp().unwrap());
            prop_assert_eq!(prod, PolySeries::one(7));
        }

        #[test]
        fn coeff_is_linear(a in arb_series(6), b in arb_series(6), n in 0usize..6) {
            let sum = a.add(&b);
            prop_assert_eq!(sum.coeff(n).unwrap(), &(a.coeff(n).unwrap() + b.coeff(n).unwrap()));
        }
    }
}
