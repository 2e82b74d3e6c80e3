use crate::error::{Error, Result};

/// Symmetric tridiagonal matrix of the monic recurrence: zero diagonal,
/// off-diagonal `b_k = √(k(k+1))/2`. Its eigenvalues are the zeros of `φ̂_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiMatrix {
    pub diagonal: Vec<f64>,
    pub off_diagonal: Vec<f64>,
}

impl JacobiMatrix {
    pub fn new(n: usize) -> Self {
        Self {
            diagonal: vec![0.0; n],
            off_diagonal: (1..n).map(|k| ((k * (k + 1)) as f64).sqrt() / 2.0).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.diagonal.len()
    }

    /// Number of eigenvalues strictly below `lambda`: the count of negative
    /// pivots in the LDLᵀ recurrence.
    pub fn sturm_count(&self, lambda: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0f64;
        for i in 0..self.size() {
            let b2 = if i == 0 { 0.0 } else { self.off_diagonal[i - 1].powi(2) };
            q = self.diagonal[i] - lambda - if i == 0 { 0.0 } else { b2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * (lambda.abs() + 1.0);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin radius; every eigenvalue lies in `[-r, r]`.
    fn gershgorin(&self) -> f64 {
        (0..self.size())
            .map(|i| {
                let left = if i > 0 { self.off_diagonal[i - 1] } else { 0.0 };
                let right = self.off_diagonal.get(i).copied().unwrap_or(0.0);
                self.diagonal[i].abs() + left + right
            })
            .fold(0.0, f64::max)
    }

    /// The `k`-th smallest eigenvalue bracketed to width `tol`.
    pub fn eigenvalue(&self, k: usize, tol: f64) -> f64 {
        let r = self.gershgorin() + 1.0;
        let (mut lo, mut hi) = (-r, r);
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.sturm_count(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

/// Zeros of `φ̂_n` in ascending order. Only the nonnegative half is bisected;
/// the rest is mirrored, and the middle zero of odd `n` is exactly 0.
pub fn zeros(n: usize, tol: f64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidParameter("zeros requires n >= 1".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tol must be positive, got {tol}")));
    }
    let m = JacobiMatrix::new(n);
    let upper: Vec<f64> = (n.div_ceil(2)..n).map(|k| m.eigenvalue(k, tol)).collect();
    let mut out: Vec<f64> = upper.iter().rev().map(|z| -z).collect();
    if n % 2 == 1 {
        out.push(0.0);
    }
    out.extend(upper);
    Ok(out)
}

/// `√(n(n-1))`.
pub fn zero_bound(n: usize) -> f64 {
    ((n * n.saturating_sub(1)) as f64).sqrt()
}

/// `inner` (length `n`) strictly interlaces `outer` (length `n+1`).
pub fn interlaces(inner: &[f64], outer: &[f64]) -> bool {
    outer.len() == inner.len() + 1
        && inner
            .iter()
            .enumerate()
            .all(|(k, &z)| outer[k] < z && z < outer[k + 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mlpseq::{generate, SeqKind};

    #[test]
    fn small_zeros() {
        let z2 = zeros(2, 1e-14).unwrap();
        assert!((z2[1] - 0.5f64.sqrt()).abs() < 1e-13);
        assert_eq!(z2[0], -z2[1]);
        let z3 = zeros(3, 1e-14).unwrap();
        assert_eq!(z3[1], 0.0);
        assert!((z3[2] - 2f64.sqrt()).abs() < 1e-13);
        let z5 = zeros(5, 1e-12).unwrap();
        assert!((z5[4] - 2.945).abs() < 1e-3);
        // x² = 5 + √13.5 is the largest root of x⁴ - 10x² + 23/2
        assert!((z5[4] - (5.0 + 13.5f64.sqrt()).sqrt()).abs() < 1e-11);
    }

    #[test]
    fn parameter_checks() {
        assert!(zeros(0, 1e-9).is_err());
        assert!(zeros(3, 0.0).is_err());
        assert!(zeros(3, f64::NAN).is_err());
    }

    #[test]
    fn trace_and_frobenius() {
        for n in 1..=24 {
            let z = zeros(n, 1e-14).unwrap();
            let sum: f64 = z.iter().sum();
            let sq: f64 = z.iter().map(|v| v * v).sum();
            let expect: f64 = (1..n).map(|k| (k * (k + 1)) as f64 / 2.0).sum();
            assert!(sum.abs() < 1e-12, "n={n}");
            assert!((sq - expect).abs() < 1e-10 * expect.max(1.0), "n={n}: {sq} vs {expect}");
        }
    }

    #[test]
    fn zeros_are_roots() {
        let table = generate(SeqKind::PhiMonic, 12).polys;
        for n in 1..=12 {
            let p = &table[n];
            let dp = p.derivative(1);
            for z in zeros(n, 1e-14).unwrap() {
                let scale = dp.eval_f64(z).abs().max(1.0);
                assert!(p.eval_f64(z).abs() < 1e-8 * scale, "n={n} z={z}");
            }
        }
    }

    #[test]
    fn bound_and_interlacing() {
        let mut prev = zeros(1, 1e-14).unwrap();
        for n in 2..=25 {
            let z = zeros(n, 1e-14).unwrap();
            assert!(z.iter().all(|v| v.abs() < zero_bound(n)), "n={n}");
            assert!(interlaces(&prev, &z), "n={n}");
            prev = z;
        }
    }
}
