//! Double-precision analysis: zeros, quadrature against `t/sinh(πt)`,
//! moments, Fourier transforms, and the erratum audit.

mod audit;
mod fourier;
mod quad;
mod zeros;

pub use audit::erratum_audit;
pub use fourier::{
    ft_closed, ft_closed_sinh_form, ft_numeric, ft_tanh_form_stated, phi0_display_cosh,
    phi0_display_sinh_ratio, FtValue,
};
pub use quad::{
    gauss_legendre, integrate, moment, orthogonality_matrix, weight, Moment, MomentClosed,
    QuadConfig,
};
pub use zeros::{interlaces, zero_bound, zeros, JacobiMatrix};

/// Coefficients rounded to double once, for repeated Horner evaluation.
pub(crate) fn float_coeffs(p: &crate::polyfps::Poly) -> Vec<f64> {
    use num_traits::ToPrimitive;
    p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
}

pub(crate) fn horner(cs: &[f64], x: f64) -> f64 {
    cs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}
