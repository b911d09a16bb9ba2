//! Fits `φ ≈ h(B)` through finite Blaschke products, including the inner part of `φ − φ(λ)`.

use hardylab::factor::{default_fit_degree, fit_through_blaschke, tc_inner_part};
use hardylab::symbol::{lower, parse_symbol, BlaschkeProduct, SymbolExpr};
use hardylab::Complex64;

fn round(c: Complex64) -> Complex64 {
    let r = |x: f64| (x * 1e8).round() / 1e8;
    Complex64::new(r(c.re), r(c.im))
}

fn main() -> hardylab::Result<()> {
    let z6 = lower(&parse_symbol("z^6")?, 64)?;
    for (b, d) in [
        (BlaschkeProduct::power(6), 1),
        (BlaschkeProduct::power(3), 2),
        (BlaschkeProduct::power(2), 3),
    ] {
        let fit = fit_through_blaschke(&z6, &b, d)?;
        let rounded: Vec<Complex64> = fit.h.coeffs().iter().map(|c| round(*c)).collect();
        println!(
            "z^6 through z^{}: h = {}, residual {:.1e}",
            b.order(),
            SymbolExpr::polynomial(&rounded, 0.0),
            fit.residual
        );
    }

    let cardioid = lower(&parse_symbol("(z+0.5)^2")?, 64)?;
    let b2 = BlaschkeProduct::power(2);
    let fit = fit_through_blaschke(&cardioid, &b2, default_fit_degree(&cardioid, &b2))?;
    println!("cardioid through z^2: residual {:.3}", fit.residual);

    let s = lower(&parse_symbol("z^2+z^4")?, 64)?;
    let b = tc_inner_part(&s, Complex64::new(0.5, 0.0))?;
    let zeros: Vec<String> = b
        .zeros()
        .iter()
        .map(|z| format!("{:.4}", round(*z)))
        .collect();
    println!("inner part of φ − φ(0.5) has zeros {}", zeros.join(", "));
    let fit = fit_through_blaschke(&s, &b, 24)?;
    println!("φ through that inner part: residual {:.1e}", fit.residual);
    Ok(())
}
