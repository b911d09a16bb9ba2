use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::{inner, norm, TruncatedOperator};
use crate::error::{Error, Result};
use crate::symbol::{BlaschkeProduct, TaylorSymbol};

const UNIMODULAR_TOL: f64 = 1e-12;
const MAX_PERIOD: usize = 64;

/// Splits `f = Σ_j z^j F_{j+1}(z^n)`; `F_{j+1}` collects the coefficients at
/// indices `≡ j (mod n)`.
pub fn wold_components(f: &TaylorSymbol, n: usize) -> Result<Vec<TaylorSymbol>> {
    if n == 0 {
        return Err(Error::InvalidArgument("Wold split needs n >= 1".into()));
    }
    let len = f.order() + 1;
    let order = ((len - 1) / n).max(1);
    Ok((0..n)
        .map(|j| {
            let c: Vec<Complex64> = f.coeffs().iter().skip(j).step_by(n).copied().collect();
            TaylorSymbol::from_coeffs(&c, order, format!("F{}[{}]", j + 1, f.label()))
        })
        .collect())
}

/// Inverse of [`wold_components`], truncated at `order`.
pub fn wold_reconstruct(parts: &[TaylorSymbol], order: usize) -> TaylorSymbol {
    let n = parts.len().max(1);
    let mut c = vec![Complex64::new(0.0, 0.0); order.max(1) + 1];
    for (j, part) in parts.iter().enumerate() {
        for (i, x) in part.coeffs().iter().enumerate() {
            if let Some(dst) = c.get_mut(j + n * i) {
                *dst = *x;
            }
        }
    }
    TaylorSymbol::from_coeffs(&c, order, "wold")
}

/// Diagonal projection `f ↦ F_1(z^n)` onto indices `≡ 0 (mod n)`.
pub fn wold_projection_matrix(n: usize, dim: usize) -> Result<TruncatedOperator> {
    if n == 0 || dim == 0 {
        return Err(Error::InvalidArgument(
            "projection needs n >= 1 and N >= 1".into(),
        ));
    }
    let m = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j && i % n == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    TruncatedOperator::new(m, format!("P{n}"))
}

/// `f(z) ↦ f(λ̄ z)`: the diagonal `diag(λ̄^j)`.
///
/// When `λ` is a root of unity of order `p ≤ 64` the diagonal repeats a single
/// table of `p` values, so entries whose indices agree mod `p` are bitwise equal.
pub fn dilation_matrix(lambda: Complex64, dim: usize) -> Result<TruncatedOperator> {
    if (lambda.norm() - 1.0).abs() > UNIMODULAR_TOL {
        return Err(Error::NotUnimodular {
            modulus: lambda.norm(),
        });
    }
    if dim == 0 {
        return Err(Error::InvalidArgument("dilation needs N >= 1".into()));
    }
    let bar = lambda.conj();
    let mut table = Vec::with_capacity(MAX_PERIOD);
    let mut p = Complex64::new(1.0, 0.0);
    let mut period = None;
    for k in 1..=MAX_PERIOD {
        table.push(p);
        p *= bar;
        if (p - 1.0).norm() <= UNIMODULAR_TOL {
            period = Some(k);
            break;
        }
    }
    let diag: Vec<Complex64> = match period {
        Some(k) => (0..dim).map(|j| table[j % k]).collect(),
        None => {
            let mut v = Vec::with_capacity(dim);
            let mut q = Complex64::new(1.0, 0.0);
            for _ in 0..dim {
                v.push(q);
                q *= bar;
            }
            v
        }
    };
    let m = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            diag[i]
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    TruncatedOperator::new(m, format!("L[{lambda}]"))
}

/// Takenaka–Malmquist vectors `e_j = √(1−|a_j|²)/(1−ā_j z) ∏_{i<j} b_{a_i}`,
/// truncated at degree `N`; an orthonormal basis of `H² ⊖ B H²`.
pub fn malmquist_basis(b: &BlaschkeProduct, degree: usize) -> Result<Vec<Vec<Complex64>>> {
    let d = b.order();
    if d == 0 {
        return Err(Error::InvalidArgument(
            "Malmquist basis needs order(B) >= 1".into(),
        ));
    }
    if degree < 4 * d {
        return Err(Error::InvalidArgument(format!(
            "degree {degree} is below 4 * order(B) = {}",
            4 * d
        )));
    }
    let zeros = b.zeros();
    let len = degree + 1;
    let mut out = Vec::with_capacity(d);
    for j in 0..d {
        let a = zeros[j];
        let head = BlaschkeProduct::from_zeros(zeros[..j].to_vec())?.to_taylor(degree);
        let scale = (1.0 - a.norm_sqr()).sqrt();
        let mut kernel = Vec::with_capacity(len);
        let mut p = Complex64::new(scale, 0.0);
        for _ in 0..len {
            kernel.push(p);
            p *= a.conj();
        }
        let kernel = TaylorSymbol::from_coeffs(&kernel, degree, "k");
        out.push(head.mul(&kernel).coeffs().to_vec());
    }
    Ok(out)
}

/// `max |⟨e_i, e_j⟩ − δ_ij|` over a family of coefficient vectors.
pub fn gram_residual(vectors: &[Vec<Complex64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in vectors.iter().enumerate() {
        for (j, b) in vectors.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((inner(a, b) - want).norm());
        }
    }
    worst
}

/// Coefficients `α_{i,j} = ⟨f, e_i B^j⟩` for `i < order(B)`, `j ≤ m`.
#[derive(Debug, Clone, Serialize)]
pub struct ModelExpansion {
    /// `alpha[i][j]` pairs with `e_{i+1} B^j`.
    #[serde(serialize_with = "serialize_table")]
    pub alpha: Vec<Vec<Complex64>>,
    pub reconstruction_error: f64,
}

fn serialize_table<S: serde::Serializer>(
    t: &[Vec<Complex64>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<[f64; 2]>> = t
        .iter()
        .map(|r| r.iter().map(|z| [z.re, z.im]).collect())
        .collect();
    rows.serialize(s)
}

/// Expands `f` in the family `{e_i B^j}` of the orthogonal decomposition
/// `H² = ⊕_j B^j (H² ⊖ B H²)`.
pub fn model_expand(f: &TaylorSymbol, b: &BlaschkeProduct, m: usize) -> Result<ModelExpansion> {
    let degree = f.order();
    let d = b.order();
    if degree < (m + 2) * d {
        return Err(Error::InvalidArgument(format!(
            "order {degree} is below (m + 2) * order(B) = {}",
            (m + 2) * d
        )));
    }
    let basis = malmquist_basis(b, degree.max(4 * d))?;
    let bt = b.to_taylor(degree);
    let fc = f.coeffs();
    let mut alpha = vec![vec![Complex64::new(0.0, 0.0); m + 1]; d];
    let mut approx = vec![Complex64::new(0.0, 0.0); degree + 1];
    for (i, e) in basis.iter().enumerate() {
        let mut v = TaylorSymbol::from_coeffs(e, degree, "e");
        for j in 0..=m {
            let coef = inner(fc, v.coeffs());
            alpha[i][j] = coef;
            for (dst, x) in approx.iter_mut().zip(v.coeffs()) {
                *dst += coef * x;
            }
            v = v.mul(&bt);
        }
    }
    let diff: Vec<Complex64> = fc.iter().zip(&approx).map(|(a, b)| a - b).collect();
    Ok(ModelExpansion {
        alpha,
        reconstruction_error: norm(&diff),
    })
}
