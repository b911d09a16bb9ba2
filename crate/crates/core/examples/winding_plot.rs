//! Writes an SVG of the cardioid's winding-number regions to the path given
//! as the first argument (default `cardioid.svg`).

use hardylab::cli::plot::{plot_svg, DEFAULT_RASTER};
use hardylab::curve::BoundaryCurve;
use hardylab::symbol::{lower, parse_symbol};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "cardioid.svg".into());
    let s = lower(&parse_symbol("(z+0.5)^2")?, 256)?.with_label("(z+0.5)^2");
    let svg = plot_svg(&BoundaryCurve::with_default_nodes(&s), DEFAULT_RASTER);
    std::fs::write(&path, svg)?;
    println!("wrote {path}");
    Ok(())
}
