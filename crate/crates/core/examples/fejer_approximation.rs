//! Cesàro means of a geometric series: sup-norm control and the kernel gap at a point.

use hardylab::opspace::{fejer_polynomial, fejer_supnorm_check, fejer_wot_gap};
use hardylab::symbol::TaylorSymbol;
use hardylab::Complex64;

fn main() -> hardylab::Result<()> {
    let c: Vec<f64> = (0..=1024).map(|k| 0.5f64.powi(k)).collect();
    let h = TaylorSymbol::from_real(&c, 1024, "Σ 2^-k z^k");
    let one = TaylorSymbol::constant(Complex64::new(1.0, 0.0), 1);
    let a = Complex64::new(0.5, 0.0);

    println!(
        "{:>5} {:>12} {:>12} {:>14}",
        "n", "‖σ_n h‖∞", "‖h‖∞", "gap at a=0.5"
    );
    for p in 2..=9 {
        let n = 1usize << p;
        let check = fejer_supnorm_check(&h, n);
        let gap = fejer_wot_gap(&h, n, a, &one)?;
        println!(
            "{n:>5} {:>12.6} {:>12.6} {gap:>14.3e}",
            check.fejer_norm, check.symbol_norm
        );
    }
    let s4 = fejer_polynomial(&h, 4);
    println!(
        "σ_4 coefficients: {:.4?}",
        &s4.coeffs()[..5].iter().map(|z| z.re).collect::<Vec<_>>()
    );
    Ok(())
}
