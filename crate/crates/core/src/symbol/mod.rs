//! Bounded analytic symbols as truncated Taylor series.
//!
//! A [`TaylorSymbol`] stores `c_0..c_N` and is treated as the polynomial with
//! exactly those coefficients. Expressions in the symbol DSL are parsed into a
//! [`SymbolExpr`] and lowered to a `TaylorSymbol` at a chosen truncation order.

mod blaschke;
mod expr;
mod lower;
mod parse;
pub mod roots;

pub use blaschke::BlaschkeProduct;
pub use expr::SymbolExpr;
pub use lower::{lower, COMPOSITION_RADIUS};
pub use parse::parse_symbol;

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficients at or below this magnitude are treated as zero by support detection.
pub const NOISE_FLOOR: f64 = 1e-9;
pub const DEFAULT_ORDER: usize = 256;
pub const MAX_ORDER: usize = 512;

/// A truncated power series `c_0 + c_1 z + ... + c_N z^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorSymbol {
    coeffs: Vec<Complex64>,
    label: String,
}

impl TaylorSymbol {
    /// Builds a symbol from its coefficients; at least two entries (order ≥ 1) are required.
    pub fn new(coeffs: Vec<Complex64>, label: impl Into<String>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "a symbol needs truncation order >= 1, got {} coefficients",
                coeffs.len()
            )));
        }
        if coeffs
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::InvalidArgument("non-finite coefficient".into()));
        }
        Ok(TaylorSymbol {
            coeffs,
            label: label.into(),
        })
    }

    /// Pads (or truncates) `coeffs` to exactly `order + 1` entries.
    pub fn from_coeffs(coeffs: &[Complex64], order: usize, label: impl Into<String>) -> Self {
        let order = order.max(1);
        let mut c = vec![Complex64::new(0.0, 0.0); order + 1];
        for (dst, src) in c.iter_mut().zip(coeffs) {
            *dst = *src;
        }
        TaylorSymbol {
            coeffs: c,
            label: label.into(),
        }
    }

    pub fn from_real(coeffs: &[f64], order: usize, label: impl Into<String>) -> Self {
        let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_coeffs(&c, order, label)
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        Self::from_coeffs(&[c], order, "const")
    }

    pub fn identity(order: usize) -> Self {
        Self::monomial(1, order)
    }

    /// `z^k` truncated at `order` (which must be at least `k`).
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut c = vec![Complex64::new(0.0, 0.0); order.max(k).max(1) + 1];
        c[k] = Complex64::new(1.0, 0.0);
        TaylorSymbol {
            coeffs: c,
            label: if k == 1 { "z".into() } else { format!("z^{k}") },
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Coefficient of `z^k`, zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// Horner evaluation of the truncated series.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    /// Values at `r·e^{2πij/M}`, `j = 0..M`, computed with one FFT.
    pub fn eval_circle(&self, nodes: usize, radius: f64) -> Result<Vec<Complex64>> {
        let needed = 2 * self.order();
        if nodes < needed {
            return Err(Error::Resolution {
                nodes,
                order: self.order(),
                needed,
            });
        }
        if !(radius > 0.0 && radius <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "circle radius must lie in (0, 1], got {radius}"
            )));
        }
        Ok(circle_values(&self.coeffs, nodes, radius))
    }

    /// Maximum of `|s|` over `nodes` equispaced points of the unit circle.
    pub fn sup_norm_grid(&self, nodes: usize) -> f64 {
        circle_values(&self.coeffs, nodes, 1.0)
            .iter()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }

    /// Termwise derivative, truncation order `N - 1`.
    pub fn derivative(&self) -> TaylorSymbol {
        let d: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * k as f64)
            .collect();
        TaylorSymbol::from_coeffs(&d, self.order() - 1, format!("d({})", self.label))
    }

    /// Largest index whose coefficient exceeds [`NOISE_FLOOR`].
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| c.norm() > NOISE_FLOOR)
    }

    /// True when no coefficient of positive index exceeds the noise floor.
    pub fn is_constant(&self) -> bool {
        self.degree().map_or(true, |d| d == 0)
    }

    /// The coefficients up to the effective degree, when that degree is small
    /// enough for companion-matrix root finding.
    pub fn polynomial_coeffs(&self) -> Option<&[Complex64]> {
        let d = self.degree()?;
        (d <= roots::ROOT_DEGREE_CAP).then(|| &self.coeffs[..=d])
    }

    /// Zero-pads or truncates to a new order.
    pub fn resized(&self, order: usize) -> TaylorSymbol {
        TaylorSymbol::from_coeffs(&self.coeffs, order, self.label.clone())
    }

    pub fn add(&self, other: &TaylorSymbol) -> TaylorSymbol {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &TaylorSymbol) -> TaylorSymbol {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: Complex64) -> TaylorSymbol {
        TaylorSymbol {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
            label: self.label.clone(),
        }
    }

    /// Cauchy product truncated at the larger of the two orders.
    pub fn mul(&self, other: &TaylorSymbol) -> TaylorSymbol {
        let order = self.order().max(other.order());
        TaylorSymbol {
            coeffs: truncated_product(&self.coeffs, &other.coeffs, order + 1),
            label: format!("({})*({})", self.label, other.label),
        }
    }

    pub fn pow(&self, n: u32) -> TaylorSymbol {
        let len = self.coeffs.len();
        let mut acc = vec![Complex64::new(0.0, 0.0); len];
        acc[0] = Complex64::new(1.0, 0.0);
        let mut base = self.coeffs.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = truncated_product(&acc, &base, len);
            }
            e >>= 1;
            if e > 0 {
                base = truncated_product(&base, &base, len);
            }
        }
        TaylorSymbol {
            coeffs: acc,
            label: format!("({})^{n}", self.label),
        }
    }

    fn zip_with(
        &self,
        other: &TaylorSymbol,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> TaylorSymbol {
        let len = self.coeffs.len().max(other.coeffs.len());
        TaylorSymbol {
            coeffs: (0..len).map(|k| f(self.coeff(k), other.coeff(k))).collect(),
            label: self.label.clone(),
        }
    }

    pub fn into_shared(self) -> Arc<TaylorSymbol> {
        Arc::new(self)
    }
}

pub(crate) fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// Evaluates `Σ c_k r^k ω^{jk}` at all `M`-th roots of unity. Coefficients past
/// `M` are folded, which is exact aliasing on the node set.
pub(crate) fn circle_values(coeffs: &[Complex64], nodes: usize, radius: f64) -> Vec<Complex64> {
    let mut buf = vec![Complex64::new(0.0, 0.0); nodes];
    let mut rk = 1.0;
    for (k, c) in coeffs.iter().enumerate() {
        buf[k % nodes] += c * rk;
        rk *= radius;
    }
    let mut planner = FftPlanner::<f64>::new();
    planner.plan_fft_inverse(nodes).process(&mut buf);
    buf
}

/// Inverse of [`circle_values`] at radius 1: returns `M` coefficients from `M` samples.
pub(crate) fn coefficients_from_samples(samples: &[Complex64]) -> Vec<Complex64> {
    let m = samples.len();
    let mut buf = samples.to_vec();
    let mut planner = FftPlanner::<f64>::new();
    planner.plan_fft_forward(m).process(&mut buf);
    let inv = 1.0 / m as f64;
    buf.iter_mut().for_each(|c| *c *= inv);
    buf
}

pub(crate) fn truncated_product(a: &[Complex64], b: &[Complex64], len: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if *x == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Unit-circle node `e^{2πij/M}`.
pub fn circle_node(j: usize, nodes: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / nodes as f64)
}

#[derive(Serialize, Deserialize)]
struct SymbolJson {
    label: String,
    order: usize,
    #[serde(with = "crate::complex_json::vec")]
    coeffs: Vec<Complex64>,
}

impl Serialize for TaylorSymbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymbolJson {
            label: self.label.clone(),
            order: self.order(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TaylorSymbol {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SymbolJson::deserialize(d)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} requires {} coefficients, found {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        TaylorSymbol::new(raw.coeffs, raw.label).map_err(D::Error::custom)
    }
}
