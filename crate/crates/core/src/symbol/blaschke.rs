use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{truncated_product, TaylorSymbol};
use crate::error::{Error, Result};

/// Finite Blaschke product `λ ∏ (|a_j|/a_j)(a_j − z)/(1 − ā_j z)`, with the
/// factor `z` used for zeros at the origin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlaschkeProduct {
    #[serde(with = "crate::complex_json::vec")]
    zeros: Vec<Complex64>,
    #[serde(with = "crate::complex_json")]
    constant: Complex64,
}

impl BlaschkeProduct {
    pub fn new(zeros: Vec<Complex64>, constant: Complex64) -> Result<Self> {
        if let Some(a) = zeros.iter().find(|a| !(a.norm() < 1.0)) {
            return Err(Error::InvalidArgument(format!(
                "Blaschke zero {a} is not inside the unit disk"
            )));
        }
        if (constant.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnimodular {
                modulus: constant.norm(),
            });
        }
        Ok(BlaschkeProduct { zeros, constant })
    }

    /// Product with unimodular constant 1.
    pub fn from_zeros(zeros: Vec<Complex64>) -> Result<Self> {
        Self::new(zeros, Complex64::new(1.0, 0.0))
    }

    /// `z^n` as a Blaschke product.
    pub fn power(n: usize) -> Self {
        BlaschkeProduct {
            zeros: vec![Complex64::new(0.0, 0.0); n],
            constant: Complex64::new(1.0, 0.0),
        }
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn constant(&self) -> Complex64 {
        self.constant
    }

    pub fn order(&self) -> usize {
        self.zeros.len()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.zeros
            .iter()
            .fold(self.constant, |acc, &a| acc * factor(a, z))
    }

    /// Taylor coefficients up to `order`, built by convolving the geometric
    /// expansion of each factor.
    pub fn to_taylor(&self, order: usize) -> TaylorSymbol {
        let len = order.max(1) + 1;
        let mut acc = vec![Complex64::new(0.0, 0.0); len];
        acc[0] = self.constant;
        for &a in &self.zeros {
            acc = truncated_product(&acc, &factor_series(a, len), len);
        }
        let label = format!("blaschke[{}]", fmt_zeros(&self.zeros));
        TaylorSymbol::from_coeffs(&acc, order, label)
    }
}

fn factor(a: Complex64, z: Complex64) -> Complex64 {
    if a == Complex64::new(0.0, 0.0) {
        z
    } else {
        (a.norm() / a) * (a - z) / (Complex64::new(1.0, 0.0) - a.conj() * z)
    }
}

/// Coefficients of one factor: `(|a|/a)[a − (1 − |a|²) Σ_{k≥1} ā^{k−1} z^k]`.
fn factor_series(a: Complex64, len: usize) -> Vec<Complex64> {
    let mut s = vec![Complex64::new(0.0, 0.0); len];
    if a == Complex64::new(0.0, 0.0) {
        if len > 1 {
            s[1] = Complex64::new(1.0, 0.0);
        }
        return s;
    }
    let unit = a.norm() / a;
    let damp = 1.0 - a.norm_sqr();
    s[0] = unit * a;
    let mut p = Complex64::new(1.0, 0.0);
    for c in s.iter_mut().skip(1) {
        *c = -unit * damp * p;
        p *= a.conj();
    }
    s
}

fn fmt_zeros(zeros: &[Complex64]) -> String {
    zeros
        .iter()
        .map(|z| {
            if z.im == 0.0 {
                format!("{}", z.re)
            } else {
                format!("{}{:+}i", z.re, z.im)
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}
