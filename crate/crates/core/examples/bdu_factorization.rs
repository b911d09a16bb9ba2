//! Splits `φ = h(z^k)` with `k` maximal, checked against the minimal boundary winding.

use hardylab::factor::{bdu_crosscheck, bdu_factor};
use hardylab::symbol::{lower, parse_symbol, SymbolExpr, NOISE_FLOOR};

fn main() -> hardylab::Result<()> {
    for text in ["z^2+z^4", "(z^3+0.5)^2", "z^6", "(z+0.5)^2"] {
        let s = lower(&parse_symbol(text)?, 128)?;
        let f = bdu_factor(&s)?;
        let x = bdu_crosscheck(&s)?;
        println!(
            "{text:>12}: k = {}, h = {}, residual = {:.1e}, winding k = {} (agree: {})",
            f.k,
            SymbolExpr::polynomial(f.h.coeffs(), NOISE_FLOOR),
            f.residual,
            x.k_wind,
            x.agree
        );
    }
    Ok(())
}
