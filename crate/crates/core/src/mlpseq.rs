//! The polynomial families: generation by three-term recurrence, and the
//! independent oracles they are checked against.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, int, rat, GaussRational, Rational};
use crate::polyfps::{series_elementary, GaussPoly, Poly, PolySeries, SeriesKind};
use crate::report::{AuditDetail, CheckReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeqKind {
    /// Mittag-Leffler `g_n`
    #[serde(rename = "G")]
    G,
    /// reduced `φ_n`
    #[serde(rename = "PHI")]
    Phi,
    /// monic reduced `φ̂_n`
    #[serde(rename = "PHI_MONIC")]
    PhiMonic,
    /// monic `ĝ_n = n!/2^n · g_n`
    #[serde(rename = "G_MONIC")]
    GMonic,
    /// Pidduck `P_n = (g_n(x+1) + g_n(x))/2`
    #[serde(rename = "PIDDUCK")]
    Pidduck,
}

impl SeqKind {
    pub const ALL: [SeqKind; 5] = [Self::G, Self::Phi, Self::PhiMonic, Self::GMonic, Self::Pidduck];

    pub fn tag(self) -> &'static str {
        match self {
            Self::G => "G",
            Self::Phi => "PHI",
            Self::PhiMonic => "PHI_MONIC",
            Self::GMonic => "G_MONIC",
            Self::Pidduck => "PIDDUCK",
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            Self::G => "g",
            Self::Phi => "phi",
            Self::PhiMonic => "phi-monic",
            Self::GMonic => "g-monic",
            Self::Pidduck => "pidduck",
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SeqKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.cli_name() == s || k.tag() == s)
            .ok_or_else(|| Error::UnknownSeqKind(s.to_string()))
    }
}

/// One serialized row of a [`SeqTable`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeqRow {
    pub kind: SeqKind,
    pub n: usize,
    pub coeffs: Poly,
}

/// `polys[n]` for `n = 0..=N`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeqTable {
    pub kind: SeqKind,
    pub polys: Vec<Poly>,
}

impl SeqTable {
    pub fn row(&self, n: usize) -> SeqRow {
        SeqRow { kind: self.kind, n, coeffs: self.polys[n].clone() }
    }

    pub fn rows(&self) -> Vec<SeqRow> {
        (0..self.polys.len()).map(|n| self.row(n)).collect()
    }

    pub fn from_rows(rows: Vec<SeqRow>) -> Result<Self> {
        let kind = rows
            .first()
            .map(|r| r.kind)
            .ok_or_else(|| Error::InvalidParameter("empty table".into()))?;
        let mut polys = Vec::with_capacity(rows.len());
        for (i, r) in rows.into_iter().enumerate() {
            if r.kind != kind || r.n != i {
                return Err(Error::InvalidParameter(format!("row {i} out of sequence")));
            }
            polys.push(r.coeffs);
        }
        Ok(Self { kind, polys })
    }
}

impl Serialize for SeqTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SeqTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<SeqRow>::deserialize(d)?;
        Self::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// `(n+1)!/2^(n+1)`, the factor taking `φ_n` to the monic `φ̂_n`.
pub fn phi_monic_scale(n: usize) -> Rational {
    Rational::new(factorial(n as u64 + 1), BigInt::from(2u32).pow(n as u32 + 1))
}

/// `n!/2^n`, the factor taking `g_n` to `ĝ_n`.
pub fn g_monic_scale(n: usize) -> Rational {
    Rational::new(factorial(n as u64), BigInt::from(2u32).pow(n as u32))
}

/// `c_n = n(n+1)/4` in the monic recurrence.
pub fn monic_recurrence_coeff(n: usize) -> Rational {
    rat((n * (n + 1)) as i64, 4)
}

// (n+1) g_{n+1} = 2x g_n + sign·(n-1) g_{n-1}
fn g_recurrence(n_max: usize, sign: i64) -> Vec<Poly> {
    let two_x = Poly::monomial(int(2), 1);
    let mut out = vec![Poly::one()];
    if n_max >= 1 {
        out.push(two_x.clone());
    }
    for n in 1..n_max {
        let next = &(&two_x * &out[n]) + &out[n - 1].scale(&int(sign * (n as i64 - 1)));
        out.push(next.scale(&rat(1, n as i64 + 1)));
    }
    out
}

/// `g_n` from the recurrence with the minus sign on the `g_{n-1}` term, kept
/// only so that the sign can be audited against the oracles.
pub fn g_stated_recurrence(n_max: usize) -> Vec<Poly> {
    g_recurrence(n_max, -1)
}

pub fn generate(kind: SeqKind, n_max: usize) -> SeqTable {
    let polys = match kind {
        SeqKind::G => g_recurrence(n_max, 1),
        SeqKind::Phi => {
            let two_x = Poly::monomial(int(2), 1);
            let mut out = vec![Poly::constant(int(2))];
            if n_max >= 1 {
                out.push(two_x.clone());
            }
            for n in 1..n_max {
                let next = &(&two_x * &out[n]) - &out[n - 1].scale(&int(n as i64));
                out.push(next.scale(&rat(1, n as i64 + 2)));
            }
            out
        }
        SeqKind::PhiMonic => {
            let x = Poly::x();
            let mut out = vec![Poly::one()];
            if n_max >= 1 {
                out.push(x.clone());
            }
            for n in 1..n_max {
                let next = &(&x * &out[n]) - &out[n - 1].scale(&monic_recurrence_coeff(n));
                out.push(next);
            }
            out
        }
        SeqKind::GMonic => g_recurrence(n_max, 1)
            .into_iter()
            .enumerate()
            .map(|(n, g)| g.scale(&g_monic_scale(n)))
            .collect(),
        SeqKind::Pidduck => g_recurrence(n_max, 1)
            .into_iter()
            .map(|g| (&g.shift(&int(1)) + &g).scale(&rat(1, 2)))
            .collect(),
    };
    SeqTable { kind, polys }
}

/// Rising factorial `(a)_j` of a rational.
fn pochhammer(a: &Rational, j: usize) -> Rational {
    (0..j).fold(Rational::one(), |acc, m| acc * (a + int(m as i64)))
}

/// Rising factorial `(a + b·x)_j` as a polynomial in `x`.
fn pochhammer_poly(a: &Rational, b: &Rational, j: usize) -> Poly {
    (0..j).fold(Poly::one(), |acc, m| {
        &acc * &Poly::new(vec![a + int(m as i64), b.clone()])
    })
}

/// `g_n = 2x · ₂F₁(1-n, 1-x; 2; 2)`, the terminating sum expanded exactly.
pub fn oracle_hypergeometric_g(n: usize) -> Poly {
    assert!(n >= 1, "hypergeometric form holds for n >= 1");
    let a = int(1 - n as i64);
    let mut sum = Poly::zero();
    for j in 0..n {
        let scalar = pochhammer(&a, j) * Rational::from_integer(BigInt::from(2u32).pow(j as u32))
            / Rational::from_integer(factorial(j as u64 + 1) * factorial(j as u64));
        sum = &sum + &pochhammer_poly(&int(1), &int(-1), j).scale(&scalar);
    }
    &Poly::monomial(int(2), 1) * &sum
}

/// Meixner polynomial `M_m(y; β, c) = ₂F₁(-m, -y; β; 1 - 1/c)` in `y`.
pub fn meixner(m: usize, beta: u64, c: &Rational) -> Poly {
    let z = int(1) - c.recip();
    let beta = int(beta as i64);
    let a = int(-(m as i64));
    let mut sum = Poly::zero();
    let mut zj = Rational::one();
    for j in 0..=m {
        let scalar = pochhammer(&a, j) * &zj
            / (pochhammer(&beta, j) * Rational::from_integer(factorial(j as u64)));
        sum = &sum + &pochhammer_poly(&int(0), &int(-1), j).scale(&scalar);
        zj *= &z;
    }
    sum
}

/// `g_n(x) = 2x · M_{n-1}(x - 1; 2, -1)`.
pub fn oracle_meixner_g(n: usize) -> Poly {
    assert!(n >= 1, "Meixner relation holds for n >= 1");
    let m = meixner(n - 1, 2, &int(-1)).shift(&int(-1));
    &Poly::monomial(int(2), 1) * &m
}

/// `((1+t)/(1-t))^x = exp(x · log((1+t)/(1-t)))`, ordinary generating
/// function of `g_n`.
pub fn gf_g(order: usize) -> Result<PolySeries> {
    series_elementary(SeriesKind::LogRatio, order)?.mul_by_poly(&Poly::x()).exp()
}

/// `(exp(2x·arctan t) - 1)/(t x)`, ordinary generating function of `φ_n`.
/// Both divisions are checked exactly.
pub fn gf_phi(order: usize) -> Result<PolySeries> {
    let arctan2 = series_elementary(SeriesKind::ArctanHalf, order + 1)?.scale_t(&int(2));
    let e = arctan2.mul_by_poly(&Poly::x()).exp()?;
    e.sub(&PolySeries::one(order + 1)).div_t()?.div_x()
}

/// `4 exp(2x·arctan(t/2)) / (t² + 4)`, exponential generating function of
/// `φ̂_n`.
pub fn egf_phi_monic(order: usize) -> Result<PolySeries> {
    let num = series_elementary(SeriesKind::ArctanHalf, order)?.mul_by_poly(&Poly::x()).exp()?;
    let den = PolySeries::from_constants(order, vec![int(1), int(0), rat(1, 4)]);
    num.scalar_div(&den)
}

/// Coefficient extraction from the exact generating functions. The Pidduck
/// case uses `(1 + (1+t)/(1-t))/2 · G = G/(1-t)`.
pub fn oracle_gf(kind: SeqKind, n: usize, order: usize) -> Result<Poly> {
    if order <= n {
        return Err(Error::InvalidParameter(format!("order {order} must exceed n = {n}")));
    }
    match kind {
        SeqKind::G => Ok(gf_g(order)?.coeff(n)?.clone()),
        SeqKind::GMonic => Ok(gf_g(order)?.coeff(n)?.scale(&g_monic_scale(n))),
        SeqKind::Pidduck => {
            let geometric = PolySeries::from_constants(order, vec![int(1); order]);
            Ok(gf_g(order)?.mul(&geometric).coeff(n)?.clone())
        }
        SeqKind::Phi => Ok(gf_phi(order)?.coeff(n)?.clone()),
        SeqKind::PhiMonic => {
            let nf = Rational::from_integer(factorial(n as u64));
            Ok(egf_phi_monic(order)?.coeff(n)?.scale(&nf))
        }
    }
}

/// `g(ix) / (i^(n+1) x)` for a polynomial `g` of nominal index `n+1`: the
/// coefficient `a_k` lands on `x^(k-1)` multiplied by `i^(k-n-1)`.
pub fn reduce_poly(g: &Poly, n: usize) -> Result<Poly> {
    if !g.coeff(0).is_zero() {
        return Err(Error::ImaginaryResidue(format!("constant term {} in g_{}", g.coeff(0), n + 1)));
    }
    let coeffs: Vec<GaussRational> = g
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, a)| GaussRational::real(a.clone()) * GaussRational::i_pow(k as i64 - n as i64 - 1))
        .collect();
    GaussPoly::new(coeffs)
        .to_real()
        .ok_or_else(|| Error::ImaginaryResidue(format!("non-real coefficient reducing g_{}", n + 1)))
}

pub fn reduce_from_g(n: usize) -> Result<Poly> {
    let g = generate(SeqKind::G, n + 1);
    reduce_poly(&g.polys[n + 1], n)
}

/// The two real difference relations of `g_n` and the complex one of
/// `φ̂_n`, each checked as an exact zero polynomial for `n <= n_max`.
pub fn difference_relation_checks(n_max: usize) -> Vec<CheckReport> {
    let g = generate(SeqKind::G, n_max).polys;
    let x = Poly::x();
    let hi = n_max as u64;

    let difference = CheckReport::exact_range("g-difference-relation", 0, hi, |n| {
        let p = &g[n as usize];
        let lhs = &x * &p.shift(&int(1));
        let mid = p.scale(&int(2 * n as i64));
        let rhs = &x * &p.shift(&int(-1));
        &(&lhs - &mid) - &rhs
    });

    let recurrence_difference = CheckReport::exact_range("g-recurrence-difference", 1, hi, |n| {
        let (p, q) = (&g[n as usize], &g[n as usize - 1]);
        let lhs = &p.shift(&int(1)) - &q.shift(&int(1));
        &lhs - &(p + q)
    });

    let phi = generate(SeqKind::PhiMonic, n_max).polys;
    let i = GaussRational::i();
    let xg = Poly::x().to_gauss();
    let mut complex = CheckReport::new("phi-monic-complex-difference", 0, hi);
    complex.note = "exact zero residual".into();
    for (n, p) in phi.iter().enumerate() {
        let p = p.to_gauss();
        let plus = &xg.shift(&i) * &p.shift(&i);
        let minus = &xg.shift(&-i.clone()) * &p.shift(&-i.clone());
        let mid = p.scale(&(GaussRational::real(int(2 * (n as i64 + 1))) * i.clone()));
        let r = &(&plus - &mid) - &minus;
        if !r.is_zero() {
            complex = complex.fail(format!("nonzero Gaussian residual at n = {n}: {r}"));
            break;
        }
    }

    vec![difference, recurrence_difference, complex]
}

/// Relative deviation used by the numeric audits; zero when both sides are.
pub(crate) fn rel_dev(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn ln_gamma_signed(v: f64, x: f64) -> Result<(f64, i32)> {
    if v <= 0.0 && v.fract() == 0.0 {
        return Err(Error::GammaPole(x));
    }
    Ok(libm::lgamma_r(v))
}

/// `w(y, n) = Γ((n+1)/2 - y) Γ((n+1)/2 + y)` through log-gamma. `x` is the
/// sample point reported on a pole.
fn rodrigues_weight(y: f64, n: usize, x: f64) -> Result<f64> {
    let a = (n as f64 + 1.0) / 2.0;
    let (l1, s1) = ln_gamma_signed(a - y, x)?;
    let (l2, s2) = ln_gamma_signed(a + y, x)?;
    Ok((s1 * s2) as f64 * (l1 + l2).exp())
}

/// Right-hand side `(2/n!) (x / w(x,1)) δⁿ w(x,n)` with the central
/// difference `δⁿf(x) = Σ_j (-1)^j C(n,j) f(x + n/2 - j)`.
pub fn rodrigues_rhs(n: usize, x: f64) -> Result<f64> {
    let mut diff = 0.0;
    for j in 0..=n {
        let c = binomial(n as u64, j as u64);
        let c: f64 = num_traits::ToPrimitive::to_f64(&c).unwrap_or(f64::INFINITY);
        let term = c * rodrigues_weight(x + n as f64 / 2.0 - j as f64, n, x)?;
        diff += if j % 2 == 0 { term } else { -term };
    }
    let w1 = rodrigues_weight(x, 1, x)?;
    let nf: f64 = (1..=n).map(|k| k as f64).product();
    Ok(2.0 / nf * x / w1 * diff)
}

/// Evaluates the Rodrigues-type formula against `g_n` at each sample point.
/// Agreement within `1e-9` relative at every point is a PASS; otherwise the
/// report is AUDITED with the per-point deviations.
pub fn rodrigues_audit(n: usize, sample_points: &[f64]) -> Result<CheckReport> {
    const TOL: f64 = 1e-9;
    let g = generate(SeqKind::G, n).polys.pop().unwrap_or_else(Poly::zero);
    let mut max_dev = 0.0f64;
    let mut lines = Vec::new();
    for &x in sample_points {
        let rhs = rodrigues_rhs(n, x)?;
        let lhs = g.eval_f64(x);
        let dev = rel_dev(rhs, lhs);
        max_dev = max_dev.max(dev);
        lines.push(format!("x={x}: formula={rhs:.12e}, g_n={lhs:.12e}, rel_dev={dev:.3e}"));
    }
    let report = CheckReport::new("rodrigues-formula", n as u64, n as u64).with_deviation(max_dev);
    if max_dev < TOL {
        Ok(report.with_note(format!("MATCH; {}", lines.join("; "))))
    } else {
        Ok(report.audited(AuditDetail {
            stated: "g_n(x) = (2/n!)(x/w(x,1)) δⁿ w(x,n), w(x,n) = Γ((n+1)/2 - x)Γ((n+1)/2 + x)".into(),
            derived: "g_n from the three-term recurrence".into(),
            deciding: lines.join("; "),
            verdict: format!("MISMATCH at n = {n}: max relative deviation {max_dev:.3e}"),
        }))
    }
}
