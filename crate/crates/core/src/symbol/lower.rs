use num_complex::Complex64;

use super::{
    coefficients_from_samples, truncated_product, BlaschkeProduct, SymbolExpr, TaylorSymbol,
    MAX_ORDER,
};
use crate::error::{Error, Result};

/// Radius of the circle on which compositions are sampled.
pub const COMPOSITION_RADIUS: f64 = 0.999;

const DOMAIN_SLACK: f64 = 1e-9;

/// Lowers an expression to its Taylor coefficients up to degree `order`.
///
/// Compositions are sampled at `8·order` nodes on the circle of radius
/// [`COMPOSITION_RADIUS`]; the recovered coefficient `k` is rescaled by `ρ^{-k}`.
pub fn lower(expr: &SymbolExpr, order: usize) -> Result<TaylorSymbol> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::InvalidArgument(format!(
            "truncation order must lie in 1..={MAX_ORDER}, got {order}"
        )));
    }
    let coeffs = lower_coeffs(expr, order + 1)?;
    TaylorSymbol::new(coeffs, expr.to_string())
}

fn lower_coeffs(expr: &SymbolExpr, len: usize) -> Result<Vec<Complex64>> {
    let zero = Complex64::new(0.0, 0.0);
    Ok(match expr {
        SymbolExpr::Var => {
            let mut c = vec![zero; len];
            c[1] = Complex64::new(1.0, 0.0);
            c
        }
        SymbolExpr::Lit(v) => {
            let mut c = vec![zero; len];
            c[0] = *v;
            c
        }
        SymbolExpr::Add(a, b) => {
            let (a, b) = (lower_coeffs(a, len)?, lower_coeffs(b, len)?);
            a.iter().zip(&b).map(|(x, y)| x + y).collect()
        }
        SymbolExpr::Sub(a, b) => {
            let (a, b) = (lower_coeffs(a, len)?, lower_coeffs(b, len)?);
            a.iter().zip(&b).map(|(x, y)| x - y).collect()
        }
        SymbolExpr::Mul(a, b) => {
            truncated_product(&lower_coeffs(a, len)?, &lower_coeffs(b, len)?, len)
        }
        SymbolExpr::Pow(a, n) => {
            let base = lower_coeffs(a, len)?;
            let s = TaylorSymbol::from_coeffs(&base, len - 1, "");
            s.pow(*n).coeffs().to_vec()
        }
        SymbolExpr::Blaschke(zeros) => BlaschkeProduct::from_zeros(zeros.clone())?
            .to_taylor(len - 1)
            .coeffs()
            .to_vec(),
        SymbolExpr::Compose(outer, inner) => {
            // sub-expressions are validated even though sampling uses direct evaluation
            lower_coeffs(outer, len)?;
            lower_coeffs(inner, len)?;
            compose_by_sampling(outer, inner, len)?
        }
    })
}

fn compose_by_sampling(
    outer: &SymbolExpr,
    inner: &SymbolExpr,
    len: usize,
) -> Result<Vec<Complex64>> {
    let order = len - 1;
    let nodes = 8 * order.max(1);
    let step = 2.0 * std::f64::consts::PI / nodes as f64;

    let sup = (0..nodes)
        .map(|j| {
            inner
                .eval(Complex64::from_polar(1.0, step * j as f64))
                .norm()
        })
        .fold(0.0, f64::max);
    if !(sup <= 1.0 + DOMAIN_SLACK) {
        return Err(Error::CompositionDomain { sup });
    }

    let samples: Vec<Complex64> = (0..nodes)
        .map(|j| {
            let z = Complex64::from_polar(COMPOSITION_RADIUS, step * j as f64);
            outer.eval(inner.eval(z))
        })
        .collect();
    let raw = coefficients_from_samples(&samples);
    let mut scale = 1.0;
    Ok(raw
        .into_iter()
        .take(len)
        .map(|c| {
            let v = c / scale;
            scale *= COMPOSITION_RADIUS;
            v
        })
        .collect())
}
