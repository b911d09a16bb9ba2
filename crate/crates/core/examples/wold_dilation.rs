//! Operators commuting with `M_{z^n}`: the Wold projections and the rotation dilation.

use std::f64::consts::PI;

use hardylab::opspace::{
    dilation_matrix, toeplitz_truncation, wold_components, wold_projection_matrix, wold_reconstruct,
};
use hardylab::symbol::{lower, parse_symbol, SymbolExpr, TaylorSymbol, NOISE_FLOOR};
use hardylab::Complex64;

fn main() -> hardylab::Result<()> {
    let f = lower(&parse_symbol("1 + 2*z + 3*z^2 + 4*z^3 + 5*z^4")?, 8)?;
    let parts = wold_components(&f, 2)?;
    for (j, p) in parts.iter().enumerate() {
        println!(
            "F_{} = {}",
            j + 1,
            SymbolExpr::polynomial(p.coeffs(), NOISE_FLOOR)
        );
    }
    println!(
        "reconstruction exact: {}",
        wold_reconstruct(&parts, f.order()).coeffs() == f.coeffs()
    );

    for n in 2..=4 {
        let t = toeplitz_truncation(&TaylorSymbol::monomial(n, 12), 12)?;
        let p = wold_projection_matrix(n, 12)?;
        let l = dilation_matrix(Complex64::from_polar(1.0, 2.0 * PI / n as f64), 12)?;
        println!(
            "z^{n}: ‖[P, T]‖ = {:e}, ‖[L, T]‖ = {:e}",
            p.commutator(&t).norm(),
            l.commutator(&t).norm()
        );
    }
    Ok(())
}
