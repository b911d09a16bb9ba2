use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symbol::TaylorSymbol;

/// Boundary nodes used by [`fejer_supnorm_check`].
pub const SUPNORM_NODES: usize = 4096;

/// Cesàro mean `σ_n(h) = Σ_{k≤n} (1 − k/(n+1)) c_k z^k`.
pub fn fejer_polynomial(h: &TaylorSymbol, n: usize) -> TaylorSymbol {
    let w = (n + 1) as f64;
    let coeffs: Vec<Complex64> = (0..=h.order())
        .map(|k| {
            if k <= n {
                h.coeff(k) * (1.0 - k as f64 / w)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    TaylorSymbol::from_coeffs(&coeffs, h.order(), format!("fejer{n}[{}]", h.label()))
}

/// `|σ_n(h)(a) f(a) − h(a) f(a)|`, the weak-operator gap of `σ_n(M_z) → M_h`
/// tested against `f` and the kernel at `a`.
pub fn fejer_wot_gap(h: &TaylorSymbol, n: usize, a: Complex64, f: &TaylorSymbol) -> Result<f64> {
    if !(a.norm() < 1.0) {
        return Err(Error::InvalidArgument(format!("{a} is not in the disk")));
    }
    let fa = f.eval(a);
    Ok((fejer_polynomial(h, n).eval(a) * fa - h.eval(a) * fa).norm())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupNormCheck {
    pub fejer_norm: f64,
    pub symbol_norm: f64,
    pub ok: bool,
}

/// Compares grid sup-norms of `σ_n(h)` and `h`.
pub fn fejer_supnorm_check(h: &TaylorSymbol, n: usize) -> SupNormCheck {
    let nodes = SUPNORM_NODES.max(2 * h.order()).next_power_of_two();
    let fejer_norm = fejer_polynomial(h, n).sup_norm_grid(nodes);
    let symbol_norm = h.sup_norm_grid(nodes);
    SupNormCheck {
        fejer_norm,
        symbol_norm,
        ok: fejer_norm <= symbol_norm * (1.0 + 1e-9),
    }
}
