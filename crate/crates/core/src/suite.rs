//! The exact and numeric verification suites behind `verify`.

use crate::diffident::{
    convolution_check, derivative_expansion_monic_check, derivative_expansion_reduced_audit,
    egf_pde_check, lowering_check, ode_check, trig_operator_check, turan_recurrence_check,
};
use crate::exactnum::{int, rat};
use crate::mlpseq::{
    difference_relation_checks, generate, oracle_gf, oracle_hypergeometric_g, oracle_meixner_g,
    phi_monic_scale, reduce_from_g, rel_dev, rodrigues_audit, SeqKind,
};
use crate::polyfps::Poly;
use crate::report::{CheckReport, Status};
use crate::specanalysis::{
    ft_closed, ft_numeric, interlaces, moment, orthogonality_matrix, zero_bound, zeros, QuadConfig,
};

pub const DEFAULT_EXACT_MAX_N: usize = 20;
pub const DEFAULT_NUMERIC_MAX_N: usize = 12;

pub const ORTHOGONALITY_TOL: f64 = 1e-8;
pub const MOMENT_REL_TOL: f64 = 1e-8;
pub const FT_ABS_TOL: f64 = 1e-6;
pub const ZERO_REFERENCE_TOL: f64 = 1e-3;
pub const FT_S_VALUES: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];
pub const FT_MAX_N: usize = 8;
pub const MOMENT_MAX_N: usize = 9;

/// Largest zeros of `φ̂_2..φ̂_5` as published to three decimals.
pub const REFERENCE_LARGEST_ZEROS: [(usize, f64); 4] = [(2, 0.707), (3, 1.414), (4, 2.163), (5, 2.945)];

/// `φ̂_0..φ̂_5` written out coefficient by coefficient.
pub fn reference_first_members() -> Vec<Poly> {
    vec![
        Poly::one(),
        Poly::x(),
        Poly::new(vec![rat(-1, 2), int(0), int(1)]),
        Poly::new(vec![int(0), int(-2), int(0), int(1)]),
        Poly::new(vec![rat(3, 2), int(0), int(-5), int(0), int(1)]),
        Poly::new(vec![int(0), rat(23, 2), int(0), int(-10), int(0), int(1)]),
    ]
}

fn residual_or_error(r: crate::Result<Poly>) -> Poly {
    // an oracle error is reported as a nonzero residual
    r.unwrap_or_else(|_| Poly::one())
}

/// Structural-equality checks, in a fixed order.
pub fn exact_suite(max_n: usize) -> Vec<CheckReport> {
    let n_hi = max_n as u64;
    let g = generate(SeqKind::G, max_n).polys;
    let phi = generate(SeqKind::Phi, max_n).polys;
    let monic = generate(SeqKind::PhiMonic, max_n).polys;
    let order = max_n + 1;

    let mut out = Vec::new();
    let first = reference_first_members();
    let upto = first.len().min(monic.len()) as u64;
    out.push(CheckReport::exact_range("phi-monic-first-members", 0, upto.saturating_sub(1), |n| {
        &monic[n as usize] - &first[n as usize]
    }));
    out.push(CheckReport::exact_range("g-oracle-hypergeometric", 1, n_hi, |n| {
        &g[n as usize] - &oracle_hypergeometric_g(n as usize)
    }));
    out.push(CheckReport::exact_range("g-oracle-meixner", 1, n_hi, |n| {
        &g[n as usize] - &oracle_meixner_g(n as usize)
    }));
    out.push(CheckReport::exact_range("g-oracle-series", 0, n_hi, |n| {
        &g[n as usize] - &residual_or_error(oracle_gf(SeqKind::G, n as usize, order))
    }));
    out.push(CheckReport::exact_range("phi-oracle-series", 0, n_hi, |n| {
        &phi[n as usize] - &residual_or_error(oracle_gf(SeqKind::Phi, n as usize, order))
    }));
    out.push(CheckReport::exact_range("phi-reduction-from-g", 0, n_hi, |n| {
        &phi[n as usize] - &residual_or_error(reduce_from_g(n as usize))
    }));
    out.push(CheckReport::exact_range("phi-monic-scaling", 0, n_hi, |n| {
        &phi[n as usize].scale(&phi_monic_scale(n as usize)) - &monic[n as usize]
    }));
    out.push(CheckReport::exact_range("phi-monic-oracle-egf", 0, n_hi, |n| {
        &monic[n as usize] - &residual_or_error(oracle_gf(SeqKind::PhiMonic, n as usize, order))
    }));
    out.push(CheckReport::exact_range("phi-monic-parity", 0, n_hi, |n| {
        // the wrong-parity coefficients
        let p = &monic[n as usize];
        Poly::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| if (k + n as usize) % 2 == 1 { c.clone() } else { int(0) })
                .collect(),
        )
    }));
    out.push(CheckReport::exact_range("g-values-at-0-and-1", 1, n_hi, |n| {
        let p = &g[n as usize];
        Poly::new(vec![p.eval(&int(0)), p.eval(&int(1)) - int(2)])
    }));
    out.extend(difference_relation_checks(max_n));
    out.push(ode_check(max_n));
    out.push(trig_operator_check(max_n));
    out.push(derivative_expansion_monic_check(max_n));
    out.push(derivative_expansion_reduced_audit(max_n));
    out.push(convolution_check(max_n));
    out.push(match egf_pde_check(order) {
        Ok(r) => r,
        Err(e) => CheckReport::new("egf-log-linear-pde", 0, max_n as u64).fail(e.to_string()),
    });
    out.push(turan_recurrence_check(max_n));
    out.push(lowering_check(max_n));
    out
}

fn orthogonality_report(max_n: usize) -> CheckReport {
    let report = CheckReport::new("orthogonality-matrix", 0, max_n as u64);
    let cfg = QuadConfig::for_weighted_degree(2 * max_n, 1e-12);
    let m = match orthogonality_matrix(max_n, &cfg) {
        Ok(m) => m,
        Err(e) => return report.fail(e.to_string()),
    };
    let mut dev = 0.0f64;
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let target = if i == j { 2.0 / (i as f64 + 1.0) } else { 0.0 };
            dev = dev.max((v - target).abs());
        }
    }
    let report = report.with_deviation(dev);
    if dev < ORTHOGONALITY_TOL {
        report.with_note(format!("entrywise within {ORTHOGONALITY_TOL:e} of diag(2/(n+1))"))
    } else {
        report.fail(format!("max entrywise deviation {dev:.3e} exceeds {ORTHOGONALITY_TOL:e}"))
    }
}

fn moments_report(max_n: usize) -> CheckReport {
    let hi = max_n.min(MOMENT_MAX_N);
    let report = CheckReport::new("sinh-moments", 1, hi as u64);
    let mut dev = 0.0f64;
    for n in (1..=hi).step_by(2) {
        let cfg = QuadConfig::for_envelope(n, 1.0, 1e-12);
        let m = match moment(n, &cfg) {
            Ok(m) => m,
            Err(e) => return report.fail(e.to_string()),
        };
        let closed = match m.closed_value() {
            Ok(v) => v,
            Err(e) => return report.fail(e.to_string()),
        };
        dev = dev.max(rel_dev(m.numeric, closed));
    }
    let report = report.with_deviation(dev);
    if dev < MOMENT_REL_TOL {
        report.with_note(format!("odd n: quadrature within {MOMENT_REL_TOL:e} relative of the zeta closed form"))
    } else {
        report.fail(format!("max relative deviation {dev:.3e}"))
    }
}

fn fourier_report(max_n: usize) -> CheckReport {
    let hi = max_n.min(FT_MAX_N);
    let report = CheckReport::new("fourier-transform", 0, hi as u64);
    let cfg = QuadConfig::for_weighted_degree(hi, 1e-12);
    let mut dev = 0.0f64;
    for n in 0..=hi {
        for s in FT_S_VALUES {
            match ft_numeric(n, s, &cfg) {
                Ok(v) => dev = dev.max((v.value - ft_closed(n, s).value).abs()),
                Err(e) => return report.fail(e.to_string()),
            }
        }
    }
    let report = report.with_deviation(dev);
    if dev < FT_ABS_TOL {
        report.with_note(format!("quadrature within {FT_ABS_TOL:e} of the closed form at s in {FT_S_VALUES:?}"))
    } else {
        report.fail(format!("max deviation {dev:.3e}"))
    }
}

fn reference_zeros_report() -> CheckReport {
    let report = CheckReport::new("largest-zeros-reference", 2, 5);
    let mut dev = 0.0f64;
    for (n, expect) in REFERENCE_LARGEST_ZEROS {
        let z = zeros(n, 1e-12).expect("n >= 1");
        dev = dev.max((z[n - 1] - expect).abs());
    }
    let report = report.with_deviation(dev);
    if dev <= ZERO_REFERENCE_TOL {
        report.with_note("largest zeros within 0.001 of 0.707, 1.414, 2.163, 2.945")
    } else {
        report.fail(format!("max deviation {dev:.3e}"))
    }
}

fn zero_structure_report(n_max: usize) -> CheckReport {
    let report = CheckReport::new("zeros-bound-interlacing", 2, n_max as u64);
    let mut prev = zeros(1, 1e-13).expect("n >= 1");
    for n in 2..=n_max {
        let z = zeros(n, 1e-13).expect("n >= 1");
        if let Some(v) = z.iter().find(|v| v.abs() >= zero_bound(n)) {
            return report.fail(format!("zero {v} of degree {n} violates |x| < √(n(n-1))"));
        }
        if !interlaces(&prev, &z) {
            return report.fail(format!("zeros of degrees {} and {n} do not interlace", n - 1));
        }
        prev = z;
    }
    report.with_note("|x| < √(n(n-1)) and strict interlacing with the previous degree")
}

fn rodrigues_reports() -> Vec<CheckReport> {
    (1..=3)
        .map(|n| {
            rodrigues_audit(n, &[0.1, 0.3]).unwrap_or_else(|e| {
                CheckReport::new("rodrigues-formula", n as u64, n as u64).fail(e.to_string())
            })
        })
        .collect()
}

/// Floating-point checks, in a fixed order. Zeros are checked up to
/// `2·max_n`; Fourier transforms and moments are capped at degree 8 and 9.
pub fn numeric_suite(max_n: usize) -> Vec<CheckReport> {
    let mut out = vec![
        orthogonality_report(max_n),
        moments_report(max_n),
        fourier_report(max_n),
        reference_zeros_report(),
        zero_structure_report((2 * max_n).max(2)),
    ];
    out.extend(rodrigues_reports());
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub audited: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Self::default();
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Audited => s.audited += 1,
            }
        }
        s
    }
}
