//! Truncated complex power-series arithmetic.
//!
//! Every analytic quantity in this crate (maps, drivers, log-derivatives,
//! Schwarzians) is carried as a Taylor polynomial of fixed truncation degree
//! `N` on the unit disk. All operations close at degree `N`: coefficients of
//! the true result up to `N` are produced exactly (in exact arithmetic), the
//! tail is dropped.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::MapState;

/// Division guard on the constant term of [`PowerSeries::reciprocal`].
/// Below this the map is treated as degenerate rather than producing
/// huge coefficients.
pub const EPS_DIV: f64 = 1e-14;

/// Taylor coefficients `c_0..c_N` of an analytic function on the unit disk.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Wraps a coefficient vector `c_0..c_N`. Panics on empty or non-finite input;
    /// series are produced by trusted numeric paths, not by untrusted decoding
    /// (the CLI validates raw input before it gets here).
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least c_0");
        assert!(
            coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite()),
            "power series coefficients must be finite"
        );
        Self { coeffs }
    }

    pub fn zeros(degree: usize) -> Self {
        Self { coeffs: vec![Complex64::new(0.0, 0.0); degree + 1] }
    }

    /// The unit series `1 + 0·ζ + …`.
    pub fn one(degree: usize) -> Self {
        let mut s = Self::zeros(degree);
        s.coeffs[0] = Complex64::new(1.0, 0.0);
        s
    }

    /// Truncation degree `N` (the series stores `N + 1` coefficients).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient `c_k`; zero beyond the truncation degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// Same coefficients re-truncated (or zero-padded) to degree `degree`.
    pub fn resized(&self, degree: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(degree + 1, Complex64::new(0.0, 0.0));
        Self { coeffs }
    }

    /// Term-by-term derivative, zero-padded back to degree `N`.
    pub fn derivative(&self) -> Self {
        let n = self.degree();
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in 0..n {
            coeffs.push((k as f64 + 1.0) * self.coeffs[k + 1]);
        }
        coeffs.push(Complex64::new(0.0, 0.0));
        Self { coeffs }
    }

    /// Term-by-term antiderivative with zero constant term. The degree-`N`
    /// coefficient of the input falls off the truncated result.
    pub fn antiderivative(&self) -> Self {
        let n = self.degree();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        for k in 1..=n {
            coeffs[k] = self.coeffs[k - 1] / k as f64;
        }
        Self { coeffs }
    }

    /// Cauchy product truncated at the common degree.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let n = self.degree();
        if n != other.degree() {
            return Err(Error::DegreeMismatch(n, other.degree()));
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..=k {
                acc += self.coeffs[i] * other.coeffs[k - i];
            }
            *c = acc;
        }
        Ok(Self { coeffs })
    }

    /// Multiplicative inverse as a truncated series: `multiply(self, result)`
    /// is the unit series up to degree `N`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0.norm() <= EPS_DIV {
            return Err(Error::VanishingConstantTerm { abs: c0.norm(), eps: EPS_DIV });
        }
        let n = self.degree();
        let mut r = vec![Complex64::new(0.0, 0.0); n + 1];
        r[0] = 1.0 / c0;
        for k in 1..=n {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 1..=k {
                acc += self.coeffs[i] * r[k - i];
            }
            r[k] = -acc / c0;
        }
        Ok(Self { coeffs: r })
    }

    /// Horner evaluation of the truncated polynomial at `ζ`.
    pub fn evaluate(&self, zeta: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * zeta + c;
        }
        acc
    }

    /// Multiplication by `ζ` (shift up by one index), truncated at `N`.
    pub fn shift_up(&self) -> Self {
        let n = self.degree();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        for k in 1..=n {
            coeffs[k] = self.coeffs[k - 1];
        }
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.degree();
        if n != other.degree() {
            return Err(Error::DegreeMismatch(n, other.degree()));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let n = self.degree();
        if n != other.degree() {
            return Err(Error::DegreeMismatch(n, other.degree()));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }
}

/// Log-derivative `b(ζ) = f″(ζ)/f′(ζ)` of an arbitrary series with
/// non-degenerate `f′(0)`. Exact at truncation: coefficient `k ≤ N` of the
/// true rational function is reproduced.
pub fn prelog_derivative_series(s: &PowerSeries) -> Result<PowerSeries> {
    let fp = s.derivative();
    let fpp = fp.derivative();
    fpp.multiply(&fp.reciprocal()?)
}

/// Schwarzian derivative `S_f = (f″/f′)′ − ½(f″/f′)²` as a series,
/// truncated at `N − 2` and zero-padded back to `N`.
pub fn schwarzian_series(s: &PowerSeries) -> Result<PowerSeries> {
    let b = prelog_derivative_series(s)?;
    let bsq = b.multiply(&b)?;
    let mut out = b.derivative().sub(&bsq.scale(Complex64::new(0.5, 0.0)))?;
    let n = out.degree();
    // Coefficients above N-2 depend on series data beyond the truncation
    // window of f; drop them.
    for k in n.saturating_sub(1)..=n {
        out.coeffs[k] = Complex64::new(0.0, 0.0);
    }
    Ok(out)
}

/// `f″/f′` of a map state. Scale-invariant: identical for `f` and `f/α`.
pub fn prelog_derivative(f: &MapState) -> Result<PowerSeries> {
    prelog_derivative_series(f.series())
}

/// Schwarzian derivative of a map state on the disk.
pub fn schwarzian(f: &MapState) -> Result<PowerSeries> {
    schwarzian_series(f.series())
}
