//! Differential identities of the monic reduced sequence `φ̂_n`, all checked
//! exactly. Operator series (`cos D`, `sin D`, `tan(D/2)`) are cut at the
//! degree of the polynomial they act on, which is exact since `D` is
//! nilpotent there.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::exactnum::{binomial, factorial, int, rat, tan_coefficient, Rational};
use crate::mlpseq::{egf_phi_monic, generate, monic_recurrence_coeff, SeqKind};
use crate::polyfps::{Poly, PolySeries};
use crate::report::{AuditDetail, CheckReport, Status};

fn monic(n_max: usize) -> Vec<Poly> {
    generate(SeqKind::PhiMonic, n_max).polys
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

/// `α_k = cos(kπ/2)`, `β_k = sin(kπ/2)` for `k = 1..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct OdeCoeffs {
    pub n: usize,
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
}

impl OdeCoeffs {
    pub fn new(n: usize) -> Self {
        let (alpha, beta) = (1..=n)
            .map(|k| match k % 4 {
                0 => (int(1), int(0)),
                1 => (int(0), int(1)),
                2 => (int(-1), int(0)),
                _ => (int(0), int(-1)),
            })
            .unzip();
        Self { n, alpha, beta }
    }

    pub fn alpha(&self, k: usize) -> &Rational {
        &self.alpha[k - 1]
    }

    pub fn beta(&self, k: usize) -> &Rational {
        &self.beta[k - 1]
    }

    /// `Σ_{k=1}^{n} (α_k + β_k x) p^(k)/k!`.
    pub fn apply(&self, p: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for k in 1..=self.n {
            let lin = Poly::new(vec![self.alpha(k).clone(), self.beta(k).clone()]);
            let dk = p.derivative(k).scale(&fact(k).recip());
            acc = &acc + &(&lin * &dk);
        }
        acc
    }
}

/// `Σ_{k=1}^{n} (α_k + β_k x) φ̂_n^(k)/k! - n φ̂_n`; zero for every `n >= 1`.
pub fn ode_residual(n: usize) -> Poly {
    let p = monic(n).pop().unwrap_or_else(Poly::zero);
    &OdeCoeffs::new(n).apply(&p) - &p.scale(&int(n as i64))
}

/// `(cos D + x sin D) p`, both series truncated at `deg p`.
pub fn trig_operator_apply(p: &Poly) -> Poly {
    let deg = p.degree().unwrap_or(0);
    let mut cos_part = Poly::zero();
    let mut sin_part = Poly::zero();
    for j in 0..=deg {
        let c = fact(j).recip();
        let c = if (j / 2) % 2 == 0 { c } else { -c };
        let term = p.derivative(j).scale(&c);
        if j % 2 == 0 {
            cos_part = &cos_part + &term;
        } else {
            sin_part = &sin_part + &term;
        }
    }
    &cos_part + &(&Poly::x() * &sin_part)
}

/// Checks `(cos D + x sin D) φ̂_n = (n+1) φ̂_n`.
pub fn trig_operator_eigencheck(n: usize) -> CheckReport {
    CheckReport::exact_range("trig-operator-eigenvalue", n as u64, n as u64, |_| {
        let p = monic(n).pop().unwrap_or_else(Poly::zero);
        &trig_operator_apply(&p) - &p.scale(&int(n as i64 + 1))
    })
}

fn monic_expansion_residual(phi: &[Poly], n: usize) -> Poly {
    let mut rhs = Poly::zero();
    for k in 0..=n / 2 {
        let c = Rational::new(
            binomial(n as u64 + 1, 2 * k as u64 + 1) * factorial(2 * k as u64),
            BigInt::from(4u32).pow(k as u32),
        );
        let c = if k % 2 == 0 { c } else { -c };
        rhs = &rhs + &phi[n - 2 * k].scale(&c);
    }
    &phi[n + 1].derivative(1) - &rhs
}

/// `φ̂'_{n+1} = Σ_{k=0}^{⌊n/2⌋} (-1)^k C(n+1, 2k+1) (2k)!/4^k φ̂_{n-2k}`.
pub fn derivative_expansion_monic(n: usize) -> CheckReport {
    let phi = monic(n + 1);
    CheckReport::exact_range("monic-derivative-expansion", n as u64, n as u64, |_| {
        monic_expansion_residual(&phi, n)
    })
}

/// `φ'_n - 2 Σ_{k=0}^{⌊n/2⌋} (-1)^k/(2k+1) φ_{n-2k}`, the reduced-sequence
/// expansion in the form that does not hold.
pub fn reduced_expansion_stated_residual(phi: &[Poly], n: usize) -> Poly {
    let mut rhs = Poly::zero();
    for k in 0..=n / 2 {
        let c = rat(if k % 2 == 0 { 2 } else { -2 }, 2 * k as i64 + 1);
        rhs = &rhs + &phi[n - 2 * k].scale(&c);
    }
    &phi[n].derivative(1) - &rhs
}

/// `φ'_{n+1} - (2/(n+2)) Σ_{k=0}^{⌊n/2⌋} (-1)^k (n-2k+1)/(2k+1) φ_{n-2k}`,
/// obtained from the monic expansion through `φ̂_m = (m+1)!/2^(m+1) φ_m`.
pub fn reduced_expansion_derived_residual(phi: &[Poly], n: usize) -> Poly {
    let mut rhs = Poly::zero();
    for k in 0..=n / 2 {
        let c = rat((n - 2 * k + 1) as i64, 2 * k as i64 + 1);
        let c = if k % 2 == 0 { c } else { -c };
        rhs = &rhs + &phi[n - 2 * k].scale(&c);
    }
    &phi[n + 1].derivative(1) - &rhs.scale(&rat(2, n as i64 + 2))
}

/// Evaluates both forms of the reduced expansion for `1 <= n <= n_max` and
/// reports which one holds.
pub fn derivative_expansion_reduced_audit(n_max: usize) -> CheckReport {
    let phi = generate(SeqKind::Phi, n_max + 1).polys;
    let identity = "reduced-derivative-expansion";
    let stated_fail = (1..=n_max).find_map(|n| {
        let r = reduced_expansion_stated_residual(&phi, n);
        (!r.is_zero()).then_some((n, r))
    });
    let derived_fail = (0..=n_max).find(|&n| !reduced_expansion_derived_residual(&phi, n).is_zero());
    let report = CheckReport::new(identity, 1, n_max as u64);
    match (stated_fail, derived_fail) {
        (_, Some(n)) => {
            let mut r = report.fail(format!("derived form fails at n = {n}"));
            r.residual = Some(reduced_expansion_derived_residual(&phi, n));
            r
        }
        (None, None) => report.with_note("stated form holds exactly"),
        (Some((n, residual)), None) => {
            let mut r = report.audited(AuditDetail {
                stated: "φ'_n = 2 Σ_{k=0}^{⌊n/2⌋} (-1)^k/(2k+1) φ_{n-2k}".into(),
                derived: "φ'_{n+1} = (2/(n+2)) Σ_{k=0}^{⌊n/2⌋} (-1)^k (n-2k+1)/(2k+1) φ_{n-2k}".into(),
                deciding: format!(
                    "stated residual at n = {n} is {residual}; derived residual is exactly zero for 0 <= n <= {n_max}"
                ),
                verdict: format!(
                    "stated form fails at n = {n}; index-shifted derived identity passes n <= {n_max}"
                ),
            });
            r.residual = Some(residual);
            r
        }
    }
}

/// `Σ_k [p''_k p_{n-k} - p'_k p'_{n-k}] / (k!(n-k)!)` for any sequence.
pub fn convolution_residual_of(p: &[Poly], n: usize) -> Poly {
    let mut acc = Poly::zero();
    for k in 0..=n {
        let w = (fact(k) * fact(n - k)).recip();
        let term = &(&p[k].derivative(2) * &p[n - k]) - &(&p[k].derivative(1) * &p[n - k].derivative(1));
        acc = &acc + &term.scale(&w);
    }
    acc
}

pub fn convolution_residual(n: usize) -> Poly {
    convolution_residual_of(&monic(n), n)
}

/// `S · ∂²S/∂x² - (∂S/∂x)²` for any series.
pub fn pde_residual_of(s: &PolySeries) -> PolySeries {
    s.mul(&s.derivative_x(2)).sub(&s.derivative_x(1).mul(&s.derivative_x(1)))
}

/// The log-linear property of the exponential generating function of `φ̂_n`;
/// the zero series through `order`.
pub fn egf_pde_residual(order: usize) -> Result<PolySeries> {
    Ok(pde_residual_of(&egf_phi_monic(order)?))
}

/// `φ̂_n² - φ̂_{n-1} φ̂_{n+1}` (with `φ̂_{-1} = 0`).
#[derive(Clone, Debug, PartialEq)]
pub struct TuranValue {
    pub n: usize,
    pub delta: Poly,
}

fn turan_delta(phi: &[Poly], n: usize) -> Poly {
    let sq = &phi[n] * &phi[n];
    if n == 0 {
        sq
    } else {
        &sq - &(&phi[n - 1] * &phi[n + 1])
    }
}

pub fn turan(n: usize) -> TuranValue {
    let phi = monic(n + 1);
    TuranValue { n, delta: turan_delta(&phi, n) }
}

/// Verifies `T_{n+1} = c_n T_n + ((n+1)/2) φ̂_n²` exactly for `0 <= n <= n_max`,
/// then evaluates each `T_n` (`1 <= n <= n_max`) exactly at 101 equispaced
/// rationals in `[-n, n]` and requires every value to be nonnegative.
pub fn turan_recurrence_check(n_max: usize) -> CheckReport {
    let phi = monic(n_max + 2);
    let mut report = CheckReport::exact_range("turan-recurrence", 0, n_max as u64, |n| {
        let n = n as usize;
        let lhs = turan_delta(&phi, n + 1);
        let rhs = &turan_delta(&phi, n).scale(&monic_recurrence_coeff(n))
            + &(&phi[n] * &phi[n]).scale(&rat(n as i64 + 1, 2));
        &lhs - &rhs
    });
    if report.status != Status::Pass {
        return report;
    }
    for n in 1..=n_max {
        let delta = turan_delta(&phi, n);
        if !delta.has_parity(0) {
            return report.fail(format!("delta at n = {n} is not even"));
        }
        for j in 0..=100i64 {
            let x = rat(-(n as i64) * 100 + 2 * n as i64 * j, 100);
            let v = delta.eval(&x);
            if v < Rational::zero() {
                return report.fail(format!("delta at n = {n} is {v} < 0 at x = {x}"));
            }
        }
    }
    report.note = format!("exact recurrence; delta >= 0 at 101 exact samples in [-n, n] for 1 <= n <= {n_max}");
    report
}

/// `2 tan(D/2) p = Σ_k 2 θ_{2k-1} (D/2)^(2k-1) p`, with the tangent
/// coefficients built from Bernoulli numbers.
pub fn lowering_apply(p: &Poly) -> Poly {
    let deg = p.degree().unwrap_or(0);
    let mut acc = Poly::zero();
    let mut half_pow = rat(1, 2);
    for k in 1.. {
        let j = 2 * k - 1;
        if j > deg {
            break;
        }
        let c = tan_coefficient(k) * &half_pow * int(2);
        acc = &acc + &p.derivative(j).scale(&c);
        half_pow /= int(4);
    }
    acc
}

/// `L φ̂_n = n φ̂_{n-1}` for `1 <= n <= n_max`.
pub fn lowering_check(n_max: usize) -> CheckReport {
    let phi = monic(n_max);
    CheckReport::exact_range("lowering-operator", 1, n_max as u64, |n| {
        let n = n as usize;
        &lowering_apply(&phi[n]) - &phi[n - 1].scale(&int(n as i64))
    })
}

pub fn ode_check(n_max: usize) -> CheckReport {
    CheckReport::exact_range("ode-nth-order", 1, n_max as u64, |n| ode_residual(n as usize))
}

pub fn trig_operator_check(n_max: usize) -> CheckReport {
    let phi = monic(n_max);
    CheckReport::exact_range("trig-operator-eigenvalue", 0, n_max as u64, |n| {
        let p = &phi[n as usize];
        &trig_operator_apply(p) - &p.scale(&int(n as i64 + 1))
    })
}

pub fn derivative_expansion_monic_check(n_max: usize) -> CheckReport {
    let phi = monic(n_max + 1);
    CheckReport::exact_range("monic-derivative-expansion", 0, n_max as u64, |n| {
        monic_expansion_residual(&phi, n as usize)
    })
}

pub fn convolution_check(n_max: usize) -> CheckReport {
    let phi = monic(n_max);
    CheckReport::exact_range("egf-convolution", 1, n_max as u64, |n| {
        convolution_residual_of(&phi, n as usize)
    })
}

/// Every coefficient of the PDE residual through `t^(order-1)`.
pub fn egf_pde_check(order: usize) -> Result<CheckReport> {
    let r = egf_pde_residual(order)?;
    let hi = order.saturating_sub(1) as u64;
    Ok(CheckReport::exact_range("egf-log-linear-pde", 0, hi, |n| r.coeffs()[n as usize].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    #[test]
    fn ode_coefficient_patterns() {
        let c = OdeCoeffs::new(8);
        let a: Vec<i64> = vec![0, -1, 0, 1, 0, -1, 0, 1];
        let b: Vec<i64> = vec![1, 0, -1, 0, 1, 0, -1, 0];
        assert_eq!(c.alpha, a.into_iter().map(int).collect::<Vec<_>>());
        assert_eq!(c.beta, b.into_iter().map(int).collect::<Vec<_>>());
    }

    #[test]
    fn ode_degree_four_example() {
        // (1/24)p'''' - (1/6)x p''' - (1/2)p'' + x p' - 4p
        let p = monic(4).pop().unwrap();
        let x = Poly::x();
        let lhs = &(&(&p.derivative(4).scale(&rat(1, 24)) - &(&x * &p.derivative(3)).scale(&rat(1, 6)))
            - &p.derivative(2).scale(&rat(1, 2)))
            + &(&(&x * &p.derivative(1)) - &p.scale(&int(4)));
        assert!(lhs.is_zero());
        assert!(ode_residual(4).is_zero());
        assert!(ode_residual(1).is_zero());
        assert!(ode_residual(2).is_zero());
    }

    #[test]
    fn trig_operator_matches_series_form_at_four() {
        let p = monic(4).pop().unwrap();
        let x = Poly::x();
        let cos4 = &(&p - &p.derivative(2).scale(&rat(1, 2))) + &p.derivative(4).scale(&rat(1, 24));
        let sin3 = &p.derivative(1) - &p.derivative(3).scale(&rat(1, 6));
        assert_eq!(trig_operator_apply(&p), &cos4 + &(&x * &sin3));
        for n in [0, 4, 7] {
            assert!(trig_operator_eigencheck(n).passed());
        }
    }

    #[test]
    fn monic_expansion_small() {
        let phi = monic(4);
        assert_eq!(phi[2].derivative(1), phi[1].scale(&int(2)));
        assert_eq!(phi[4].derivative(1), &phi[3].scale(&int(4)) - &Poly::monomial(int(2), 1));
        for n in 0..=3 {
            assert!(derivative_expansion_monic(n).passed());
        }
    }

    #[test]
    fn reduced_expansion_forms() {
        let phi = generate(SeqKind::Phi, 3).polys;
        // stated at n = 1: φ'_1 = 2 vs 2 φ_1 = 4x
        assert_eq!(reduced_expansion_stated_residual(&phi, 1), Poly::from_ints(&[2, -4], 1));
        assert_eq!(phi[2].derivative(1), Poly::from_ints(&[0, 8], 3));
        assert!(reduced_expansion_derived_residual(&phi, 1).is_zero());
        let r = derivative_expansion_reduced_audit(20);
        assert_eq!(r.status, Status::Audited);
        assert!(r.note.contains("fails at n = 1"));
    }

    #[test]
    fn convolution_and_pde() {
        assert!(convolution_residual(1).is_zero());
        assert!(convolution_residual(2).is_zero());
        assert!(convolution_residual(12).is_zero());
        assert!(egf_pde_residual(2).unwrap().is_zero());
        let r = egf_pde_residual(8).unwrap();
        assert!(r.coeff(5).unwrap().is_zero());
    }

    #[test]
    fn turan_values() {
        assert_eq!(turan(1).delta, Poly::constant(rat(1, 2)));
        assert_eq!(turan(0).delta, Poly::one());
        assert_eq!(turan(2).delta, Poly::new(vec![rat(1, 4), int(0), int(1)]));
        assert!(turan_recurrence_check(6).passed());
    }

    #[test]
    fn lowering_small() {
        let phi = monic(5);
        assert_eq!(lowering_apply(&phi[2]), Poly::monomial(int(2), 1));
        assert_eq!(lowering_apply(&phi[1]), Poly::one());
        assert_eq!(lowering_apply(&phi[5]), phi[4].scale(&int(5)));
        assert!(lowering_apply(&Poly::constant(int(7))).is_zero());
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((-20i64..20, 1i64..6), 1..max_len)
            .prop_map(|v| Poly::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        // The truncated trig operator and the α/β form agree on any
        // polynomial of degree <= n.
        #[test]
        fn trig_operator_equals_ode_form(p in arb_poly(10)) {
            let n = p.degree().unwrap_or(0);
            let lhs = &trig_operator_apply(&p) - &p;
            prop_assert_eq!(lhs, OdeCoeffs::new(n).apply(&p));
        }

        // The t^n coefficient of S·S_xx - S_x² equals the convolution sum
        // for S = Σ p_k t^k / k!, for arbitrary polynomials p_k.
        #[test]
        fn pde_coefficient_is_convolution(ps in prop::collection::vec(arb_poly(4), 5)) {
            let s = PolySeries::new(5, ps.iter().enumerate().map(|(k, p)| p.scale(&fact(k).recip())).collect());
            let r = pde_residual_of(&s);
            for n in 0..5 {
                prop_assert_eq!(r.coeff(n).unwrap(), &convolution_residual_of(&ps, n));
            }
        }

        // L = D + D³/12 + ..., so the leading term is d·a_d x^(d-1).
        #[test]
        fn lowering_lowers_degree(p in arb_poly(8)) {
            let l = lowering_apply(&p);
            match p.degree() {
                None | Some(0) => prop_assert!(l.is_zero()),
                Some(d) => {
                    prop_assert_eq!(l.degree(), Some(d - 1));
                    prop_assert_eq!(l.leading().unwrap(), &(p.leading().unwrap() * int(d as i64)));
                }
            }
        }
    }

    #[test]
    fn one_is_fixed_by_cos() {
        assert_eq!(trig_operator_apply(&Poly::one()), Poly::one());
    }
}
