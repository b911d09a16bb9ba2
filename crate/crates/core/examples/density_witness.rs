//! A vector orthogonal to the first powers of the cardioid symbol that a
//! dictionary function still sees.

use hardylab::opspace::{density_witness, DensityOutcome};
use hardylab::symbol::{lower, parse_symbol};

fn main() -> hardylab::Result<()> {
    for text in ["(z+0.5)^2", "z"] {
        let s = lower(&parse_symbol(text)?, 64)?;
        match density_witness(&s, 16, 6)? {
            DensityOutcome::Witness(w) => println!(
                "{text}: rank {} of 16, max |<φ^j, f0>| = {:.2e}, |<{}, f0>| = {:.3}",
                w.rank, w.max_pairing, w.separating, w.pairing
            ),
            DensityOutcome::DenseAtThisTruncation { rank, .. } => {
                println!("{text}: the powers already span C^16 (rank {rank})")
            }
            DensityOutcome::Inconclusive {
                max_pairing,
                pairing,
                ..
            } => {
                println!("{text}: inconclusive (max pairing {max_pairing:.2e}, best pairing {pairing:.2e})")
            }
        }
    }
    Ok(())
}
