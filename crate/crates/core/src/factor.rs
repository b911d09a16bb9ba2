//! Factorizations `φ = h(z^k)` and `φ = h(B)` for finite Blaschke products `B`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::curve::{minimal_winding, winding_profile};
use crate::error::{Error, Result};
use crate::symbol::roots::polynomial_roots;
use crate::symbol::{circle_node, BlaschkeProduct, TaylorSymbol, NOISE_FLOOR};

/// Circle nodes used for residuals and least-squares fits.
pub const FIT_NODES: usize = 4096;
/// Grid size of the winding profile behind [`bdu_crosscheck`].
pub const CROSSCHECK_GRID: usize = 24;
const BOUNDARY_BAND: f64 = 1e-8;
const CONDITION_CAP: f64 = 1e12;

#[derive(Debug, Clone, Serialize)]
pub struct BduFactorization {
    pub k: usize,
    pub h: TaylorSymbol,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TcFactorization {
    #[serde(rename = "B")]
    pub b: BlaschkeProduct,
    pub h: TaylorSymbol,
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub k_gcd: usize,
    pub k_wind: usize,
    pub agree: bool,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// gcd of the indices `j ≥ 1` with `|c_j| > tol`.
pub fn support_gcd(s: &TaylorSymbol, tol: f64) -> Result<usize> {
    s.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| c.norm() > tol)
        .map(|(j, _)| j)
        .reduce(gcd)
        .ok_or(Error::ConstantSymbol)
}

/// Writes `φ(z) = h(z^k)` with `k` the support gcd, so that `h` has gcd 1.
pub fn bdu_factor(s: &TaylorSymbol) -> Result<BduFactorization> {
    let k = support_gcd(s, NOISE_FLOOR)?;
    let h_coeffs: Vec<Complex64> = s.coeffs().iter().step_by(k).copied().collect();
    let h_order = (h_coeffs.len() - 1).max(1);
    let h = TaylorSymbol::from_coeffs(&h_coeffs, h_order, format!("h[{}]", s.label()));

    let nodes = FIT_NODES.max(2 * s.order()).next_power_of_two();
    let phi = s.eval_circle(nodes, 1.0)?;
    let hv = h.eval_circle(nodes, 1.0)?;
    // node j of z^k lands on node jk mod M of the circle
    let residual = phi
        .iter()
        .enumerate()
        .map(|(j, v)| (v - hv[(j * k) % nodes]).norm())
        .fold(0.0, f64::max);
    Ok(BduFactorization { k, h, residual })
}

/// Compares the algebraic exponent (support gcd) with the geometric one
/// (smallest nonzero winding over a `24×24` profile).
pub fn bdu_crosscheck(s: &TaylorSymbol) -> Result<Crosscheck> {
    bdu_crosscheck_with(s, CROSSCHECK_GRID)
}

pub fn bdu_crosscheck_with(s: &TaylorSymbol, grid: usize) -> Result<Crosscheck> {
    let k_gcd = support_gcd(s, NOISE_FLOOR)?;
    let profile = winding_profile(s, grid)?;
    let k_wind = minimal_winding(&profile)?.unsigned_abs() as usize;
    Ok(Crosscheck {
        k_gcd,
        k_wind,
        agree: k_gcd == k_wind,
    })
}

/// Inner part of `φ − φ(λ)` for polynomial `φ`: the Blaschke product over its
/// zeros in the disk.
pub fn tc_inner_part(s: &TaylorSymbol, lambda: Complex64) -> Result<BlaschkeProduct> {
    let coeffs = s.polynomial_coeffs().ok_or(Error::UnsupportedSymbol {
        cap: crate::symbol::roots::ROOT_DEGREE_CAP,
    })?;
    let mut shifted = coeffs.to_vec();
    shifted[0] -= s.eval(lambda);
    let roots = polynomial_roots(&shifted);
    if let Some(r) = roots
        .iter()
        .find(|r| (r.norm() - 1.0).abs() <= BOUNDARY_BAND)
    {
        return Err(Error::BoundaryZero { modulus: r.norm() });
    }
    let mut inside: Vec<Complex64> = roots.into_iter().filter(|r| r.norm() < 1.0).collect();
    inside.sort_by(|a, b| {
        a.norm()
            .total_cmp(&b.norm())
            .then(a.arg().total_cmp(&b.arg()))
    });
    BlaschkeProduct::from_zeros(inside)
}

/// Degree used by [`fit_through_blaschke`] when none is given.
pub fn default_fit_degree(s: &TaylorSymbol, b: &BlaschkeProduct) -> usize {
    let deg = s.degree().unwrap_or(0);
    let order = b.order().max(1);
    deg.div_ceil(order) + 2
}

/// Least-squares `h` of degree `≤ d` minimizing `Σ |φ − h(B)|²` over the circle
/// nodes; the residual reported is the sup-norm on those nodes.
pub fn fit_through_blaschke(
    s: &TaylorSymbol,
    b: &BlaschkeProduct,
    d: usize,
) -> Result<TcFactorization> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "fit degree must be at least 1".into(),
        ));
    }
    let nodes = FIT_NODES.max(2 * s.order()).next_power_of_two();
    let phi = s.eval_circle(nodes, 1.0)?;
    let bv: Vec<Complex64> = (0..nodes).map(|j| b.eval(circle_node(j, nodes))).collect();

    let cols = d + 1;
    let mut v = DMatrix::<Complex64>::zeros(nodes, cols);
    for (row, &x) in bv.iter().enumerate() {
        let mut p = Complex64::new(1.0, 0.0);
        for col in 0..cols {
            v[(row, col)] = p;
            p *= x;
        }
    }
    let svd = v.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    // condition of the normal equations is the square of that of V
    let condition = if smin > 0.0 {
        (smax / smin).powi(2)
    } else {
        f64::INFINITY
    };
    if condition > CONDITION_CAP {
        return Err(Error::IllConditioned { condition });
    }
    let rhs = DVector::from_vec(phi.clone());
    let sol = svd
        .solve(&rhs, 0.0)
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let fitted = &v * &sol;
    let residual = phi
        .iter()
        .zip(fitted.iter())
        .map(|(a, f)| (a - f).norm())
        .fold(0.0, f64::max);
    let h = TaylorSymbol::from_coeffs(sol.as_slice(), d, format!("psi[{}]", s.label()));
    Ok(TcFactorization {
        b: b.clone(),
        h,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::{lower, parse_symbol};

    fn sym(text: &str) -> TaylorSymbol {
        lower(&parse_symbol(text).unwrap(), 64).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn support_gcd_examples() {
        assert_eq!(support_gcd(&sym("z^6"), 1e-9).unwrap(), 6);
        assert_eq!(support_gcd(&sym("(z+0.5)^2"), 1e-9).unwrap(), 1);
        assert_eq!(support_gcd(&sym("z^2+z^4"), 1e-9).unwrap(), 2);
        assert_eq!(support_gcd(&sym("3"), 1e-9), Err(Error::ConstantSymbol));
    }

    #[test]
    fn bdu_examples() {
        let f = bdu_factor(&sym("z^2+z^4")).unwrap();
        assert_eq!(f.k, 2);
        assert_eq!(f.h.coeff(1), c(1.0, 0.0));
        assert_eq!(f.h.coeff(2), c(1.0, 0.0));
        assert_eq!(f.h.degree(), Some(2));
        assert!(f.residual < 1e-12);

        let card = sym("(z+0.5)^2");
        let f = bdu_factor(&card).unwrap();
        assert_eq!(f.k, 1);
        assert_eq!(f.h.coeffs(), card.coeffs());

        let f = bdu_factor(&sym("z^6")).unwrap();
        assert_eq!(f.k, 6);
        assert_eq!(f.h.degree(), Some(1));
        assert_eq!(f.h.coeff(1), c(1.0, 0.0));
        assert!(matches!(
            bdu_factor(&sym("0.5")),
            Err(Error::ConstantSymbol)
        ));
    }

    #[test]
    fn crosscheck_examples() {
        for (text, k) in [("z^6", 6), ("(z+0.5)^2", 1), ("z^2*(1+z^2/4)", 2)] {
            let text = text.replace("/4", "*0.25");
            let x = bdu_crosscheck(&sym(&text)).unwrap();
            assert_eq!(
                x,
                Crosscheck {
                    k_gcd: k,
                    k_wind: k,
                    agree: true
                },
                "{text}"
            );
        }
    }

    #[test]
    fn inner_part_examples() {
        let b = tc_inner_part(&sym("(z+0.5)^2"), c(-0.5, 0.0)).unwrap();
        assert_eq!(b.order(), 2);
        for z in b.zeros() {
            assert!((z - c(-0.5, 0.0)).norm() < 1e-9);
        }
        let b = tc_inner_part(&sym("z^4"), c(0.0, 0.0)).unwrap();
        assert_eq!(b.zeros(), &[c(0.0, 0.0); 4]);
        let b = tc_inner_part(&sym("z+0.5"), c(0.0, 0.0)).unwrap();
        assert_eq!(b.order(), 1);
        assert!(b.zeros()[0].norm() < 1e-15);
    }

    #[test]
    fn inner_part_errors() {
        // z^2 - 1 vanishes on the circle
        assert!(matches!(
            tc_inner_part(&sym("z^2"), c(1.0, 0.0)),
            Err(Error::BoundaryZero { .. })
        ));
        let long = lower(&parse_symbol("blaschke[0.9]").unwrap(), 256).unwrap();
        assert!(matches!(
            tc_inner_part(&long, c(0.0, 0.0)),
            Err(Error::UnsupportedSymbol { .. })
        ));
    }

    #[test]
    fn fits_through_powers() {
        let z6 = sym("z^6");
        let f = fit_through_blaschke(&z6, &BlaschkeProduct::power(6), 1).unwrap();
        assert!(f.residual < 1e-10);
        assert!((f.h.coeff(1) - c(1.0, 0.0)).norm() < 1e-10);
        assert!(f.h.coeff(0).norm() < 1e-10);

        let f = fit_through_blaschke(&z6, &BlaschkeProduct::power(3), 4).unwrap();
        assert!(f.residual < 1e-10);
        assert!((f.h.coeff(2) - c(1.0, 0.0)).norm() < 1e-10);
        for k in [0, 1, 3, 4] {
            assert!(f.h.coeff(k).norm() < 1e-10);
        }

        let f = fit_through_blaschke(&sym("(z+0.5)^2"), &BlaschkeProduct::power(2), 4).unwrap();
        assert!(f.residual > 0.01);
    }

    #[test]
    fn ill_conditioned_fit() {
        let b = BlaschkeProduct::power(1);
        assert!(fit_through_blaschke(&sym("z"), &b, 0).is_err());
        // z^2048 takes only the values ±1 on the 4096 fit nodes, so 1 and B^2 coincide
        let flat = BlaschkeProduct::power(2048);
        assert!(matches!(
            fit_through_blaschke(&sym("z"), &flat, 2),
            Err(Error::IllConditioned { .. })
        ));
    }

    #[test]
    fn default_degree() {
        assert_eq!(
            default_fit_degree(&sym("z^6"), &BlaschkeProduct::power(3)),
            4
        );
        assert_eq!(
            default_fit_degree(&sym("z^6"), &BlaschkeProduct::power(6)),
            3
        );
    }
}
