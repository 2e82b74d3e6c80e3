use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{float_coeffs, horner};
use crate::error::{Error, Result};
use crate::exactnum::{factorial, rational_to_f64, zeta_even, Rational};
use crate::mlpseq::{generate, SeqKind};

/// `t / sinh(πt)`, with the removable singularity filled in as `1/π`.
pub fn weight(t: f64) -> f64 {
    if t == 0.0 {
        1.0 / PI
    } else {
        t / (PI * t).sinh()
    }
}

/// Composite Gauss–Legendre over `[-truncation, truncation]`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadConfig {
    pub truncation: f64,
    pub nodes_per_panel: usize,
    pub panel_width: f64,
    pub abs_tol: f64,
}

impl QuadConfig {
    /// Integrands bounded by `C |t|^degree e^{-decay |t|}`: the truncation is
    /// the first whole number of panels with `2 T^degree e^{-decay T}/decay`
    /// below `abs_tol`.
    pub fn for_envelope(degree: usize, decay: f64, abs_tol: f64) -> Self {
        let d = degree as f64;
        let tail = |t: f64| 2.0 * (d * t.ln() - decay * t).exp() / decay;
        let mut t = (d / decay).ceil().max(1.0);
        while tail(t) >= abs_tol {
            t += 1.0;
        }
        Self { truncation: t, nodes_per_panel: 20, panel_width: 1.0, abs_tol }
    }

    /// Polynomial of degree `degree` times the weight `t/sinh(πt)`.
    pub fn for_weighted_degree(degree: usize, abs_tol: f64) -> Self {
        Self::for_envelope(degree + 1, PI, abs_tol)
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// `∫_{-T}^{T} f` on fixed panels. Deterministic; a non-finite sample aborts.
pub fn integrate<F: Fn(f64) -> f64>(f: F, cfg: &QuadConfig) -> Result<f64> {
    if !(cfg.truncation > 0.0 && cfg.panel_width > 0.0 && cfg.nodes_per_panel > 0) {
        return Err(Error::InvalidParameter(format!("bad quadrature config {cfg:?}")));
    }
    let (nodes, weights) = gauss_legendre(cfg.nodes_per_panel);
    let panels = (2.0 * cfg.truncation / cfg.panel_width).ceil() as usize;
    let h = 2.0 * cfg.truncation / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = -cfg.truncation + (p as f64 + 0.5) * h;
        let mut acc = 0.0;
        for (x, w) in nodes.iter().zip(&weights) {
            let t = mid + 0.5 * h * x;
            let v = f(t);
            if !v.is_finite() {
                return Err(Error::NonFiniteSample { t, value: v });
            }
            acc += w * v;
        }
        total += 0.5 * h * acc;
    }
    Ok(total)
}

/// `∫ φ_n φ_m t/sinh(πt) dt` for `0 <= n, m <= n_max` (reduced, not monic).
pub fn orthogonality_matrix(n_max: usize, cfg: &QuadConfig) -> Result<Vec<Vec<f64>>> {
    let table: Vec<Vec<f64>> = generate(SeqKind::Phi, n_max).polys.iter().map(float_coeffs).collect();
    let mut m = vec![vec![0.0; n_max + 1]; n_max + 1];
    for i in 0..=n_max {
        for j in 0..=n_max {
            let (a, b) = (&table[i], &table[j]);
            m[i][j] = integrate(|t| horner(a, t) * horner(b, t) * weight(t), cfg)?;
        }
    }
    Ok(m)
}

/// `rational_part · π^pi_power`; zero is `(0, 0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentClosed {
    pub rational_part: Rational,
    pub pi_power: u32,
}

impl MomentClosed {
    pub fn to_f64(&self) -> Result<f64> {
        Ok(rational_to_f64(&self.rational_part)? * PI.powi(self.pi_power as i32))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Moment {
    pub n: usize,
    pub closed: MomentClosed,
    pub numeric: f64,
}

impl Moment {
    pub fn closed_value(&self) -> Result<f64> {
        self.closed.to_f64()
    }
}

/// `∫ t^n / sinh t dt = (1-(-1)^n)(2^(n+1)-1)/2^n · n! · ζ(n+1)`, exactly
/// and by quadrature. Use a config from `QuadConfig::for_envelope(n, 1.0, _)`.
pub fn moment(n: usize, cfg: &QuadConfig) -> Result<Moment> {
    if n == 0 {
        return Err(Error::InvalidParameter("moment requires n >= 1".into()));
    }
    let closed = if n.is_multiple_of(2) {
        MomentClosed { rational_part: Rational::zero(), pi_power: 0 }
    } else {
        let z = zeta_even(n as u32 + 1)?;
        let two_pow = BigInt::from(2u32).pow(n as u32);
        let c = Rational::new(BigInt::from(2u32) * (&two_pow * 2u32 - 1u32) * factorial(n as u64), two_pow);
        MomentClosed { rational_part: c * z.rational_part, pi_power: z.pi_power }
    };
    let numeric = integrate(
        |t| {
            let core = if t == 0.0 { 1.0 } else { t / t.sinh() };
            t.powi(n as i32 - 1) * core
        },
        cfg,
    )?;
    Ok(Moment { n, closed, numeric })
}
