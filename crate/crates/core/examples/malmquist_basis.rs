//! Takenaka–Malmquist basis of a Blaschke model space and the expansion of a symbol in `{e_i B^j}`.

use hardylab::opspace::{gram_residual, malmquist_basis, model_expand};
use hardylab::symbol::{lower, parse_symbol, BlaschkeProduct};
use hardylab::Complex64;

fn main() -> hardylab::Result<()> {
    let b = BlaschkeProduct::from_zeros(vec![Complex64::new(0.5, 0.0), Complex64::new(-0.3, 0.4)])?;
    let e = malmquist_basis(&b, 128)?;
    println!("Gram residual of e_1, e_2: {:.2e}", gram_residual(&e));

    let f = lower(&parse_symbol("z^3")?, 128)?;
    let m = model_expand(&f, &b, 16)?;
    for (i, row) in m.alpha.iter().enumerate() {
        let mags: Vec<String> = row
            .iter()
            .take(8)
            .map(|a| format!("{:.4}", a.norm()))
            .collect();
        println!("|α_{},j| = {}", i + 1, mags.join(" "));
    }
    println!("reconstruction error {:.2e}", m.reconstruction_error);
    Ok(())
}
