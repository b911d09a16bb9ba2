//! Commutant, double commutant and algebra dimensions of Toeplitz compressions.

use hardylab::opspace::{
    commutant_basis, double_commutant_basis, polynomial_algebra_dim, toeplitz_truncation, RANK_TOL,
};
use hardylab::symbol::{lower, parse_symbol};

fn main() -> hardylab::Result<()> {
    println!(
        "{:>12} {:>3} {:>10} {:>17} {:>14}",
        "symbol", "N", "commutant", "double commutant", "algebra C[T]"
    );
    for (text, n) in [
        ("z", 8),
        ("z^2", 4),
        ("z^2", 8),
        ("z^3", 9),
        ("(z+0.5)^2", 8),
    ] {
        let t = toeplitz_truncation(&lower(&parse_symbol(text)?, 16)?, n)?;
        let comm = commutant_basis(&t, RANK_TOL)?;
        let double = double_commutant_basis(&comm.basis, RANK_TOL)?;
        println!(
            "{text:>12} {n:>3} {:>10} {:>17} {:>14}",
            comm.dim(),
            double.dim(),
            polynomial_algebra_dim(&t)
        );
    }
    Ok(())
}
