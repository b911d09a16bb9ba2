//! Boundary windings, valence and the self-intersection of `φ(∂𝔻)` for the cardioid.

use hardylab::curve::{jordan_test, valence, winding_number, winding_profile, BoundaryCurve};
use hardylab::symbol::{lower, parse_symbol};
use hardylab::Complex64;

fn main() -> hardylab::Result<()> {
    let s = lower(&parse_symbol("(z+0.5)^2")?, 256)?;
    let curve = BoundaryCurve::with_default_nodes(&s);

    for w in [
        Complex64::new(0.0, 0.0),
        Complex64::new(1.21, 0.0),
        Complex64::new(3.0, 0.0),
    ] {
        println!(
            "n(φ(γ), {w}) = {}   preimages = {}",
            winding_number(&curve, w)?,
            valence(&s, w)?
        );
    }

    let profile = winding_profile(&s, 16)?;
    println!(
        "distinct windings over a 16×16 polar grid: {:?}",
        profile.distinct_windings()
    );

    for x in jordan_test(&BoundaryCurve::from_symbol(&s, 4096)?) {
        println!(
            "self-crossing of segments {:?} at {:.6}",
            x.segments, x.point
        );
    }
    Ok(())
}
