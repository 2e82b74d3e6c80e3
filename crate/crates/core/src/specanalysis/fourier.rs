use std::f64::consts::PI;

use super::{float_coeffs, horner, integrate, weight, QuadConfig};
use crate::error::Result;
use crate::mlpseq::{generate, SeqKind};

/// Fourier transform value `Φ_n(s) = i^n · value`: the phase is always
/// `i^n`, so only the real factor is stored.
#[derive(Clone, Debug, PartialEq)]
pub struct FtValue {
    pub n: usize,
    pub s: f64,
    pub value: f64,
}

impl FtValue {
    /// Exponent `k` of the phase `i^k`, in `0..4`.
    pub fn phase(&self) -> usize {
        self.n % 4
    }

    /// `(re, im)` of the full complex value.
    pub fn complex(&self) -> (f64, f64) {
        match self.phase() {
            0 => (self.value, 0.0),
            1 => (0.0, self.value),
            2 => (-self.value, 0.0),
            _ => (0.0, -self.value),
        }
    }
}

fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `(n+1)! / (2^(n+1) √(2π)) · tanh^n(s/2) · sech²(s/2)`.
pub fn ft_closed(n: usize, s: f64) -> FtValue {
    let th = (s / 2.0).tanh();
    let sech = 1.0 / (s / 2.0).cosh();
    let c = factorial_f64(n + 1) / (2f64.powi(n as i32 + 1) * (2.0 * PI).sqrt());
    FtValue { n, s, value: c * th.powi(n as i32) * sech * sech }
}

/// `(n+1)! √(2/π) · sinh^(2n+2)(s/2) / sinh^(n+2)(s)`; undefined at `s = 0`.
pub fn ft_closed_sinh_form(n: usize, s: f64) -> FtValue {
    let num = (s / 2.0).sinh().powi(2 * n as i32 + 2);
    let den = s.sinh().powi(n as i32 + 2);
    FtValue { n, s, value: factorial_f64(n + 1) * (2.0 / PI).sqrt() * num / den }
}

/// The tanh form with constant `(n+1)!/(2^n √(2π))`, kept for auditing.
pub fn ft_tanh_form_stated(n: usize, s: f64) -> FtValue {
    let th = (s / 2.0).tanh();
    let c = factorial_f64(n + 1) / (2f64.powi(n as i32) * (2.0 * PI).sqrt());
    FtValue { n, s, value: c * th.powi(n as i32) * (1.0 - th * th) }
}

/// `(1/√(2π)) / (1 + cosh s)`.
pub fn phi0_display_cosh(s: f64) -> f64 {
    1.0 / ((2.0 * PI).sqrt() * (1.0 + s.cosh()))
}

/// `(1/2) √(2/π) sinh²(s/2) / sinh²(s)`.
pub fn phi0_display_sinh_ratio(s: f64) -> f64 {
    0.5 * (2.0 / PI).sqrt() * (s / 2.0).sinh().powi(2) / s.sinh().powi(2)
}

/// `(1/√(2π)) ∫ φ̂_n(t) w(t) e^{ist} dt` by quadrature. By parity only the
/// cosine part survives for even `n` and only the sine part for odd `n`.
pub fn ft_numeric(n: usize, s: f64, cfg: &QuadConfig) -> Result<FtValue> {
    let p = generate(SeqKind::PhiMonic, n).polys.pop().map(|p| float_coeffs(&p)).unwrap_or_default();
    let norm = 1.0 / (2.0 * PI).sqrt();
    let value = if n.is_multiple_of(2) {
        let c = integrate(|t| horner(&p, t) * weight(t) * (s * t).cos(), cfg)?;
        // divide by i^n = (-1)^(n/2)
        if (n / 2).is_multiple_of(2) { c } else { -c }
    } else {
        let sn = integrate(|t| horner(&p, t) * weight(t) * (s * t).sin(), cfg)?;
        // i·S / i^n = S / (-1)^((n-1)/2)
        if ((n - 1) / 2).is_multiple_of(2) { sn } else { -sn }
    };
    Ok(FtValue { n, s, value: norm * value })
}
