//! SVG winding-number plots.

use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::curve::{crossing_winding, BoundaryCurve};

pub const DEFAULT_RASTER: usize = 200;
const PIXELS: usize = 600;

/// Fill colour for a winding class; `None` marks on-curve cells.
fn palette(n: Option<i64>) -> &'static str {
    match n {
        None => "#bdbdbd",
        Some(n) if n <= 0 => "#ffffff",
        Some(1) => "#c6dbef",
        Some(2) => "#6baed6",
        Some(_) => "#08519c",
    }
}

/// Winding class of each raster cell, row-major from the top edge, and the
/// padded box `(min re, min im, max re, max im)` it covers.
pub fn winding_raster(
    curve: &BoundaryCurve,
    res: usize,
) -> (Vec<Option<i64>>, (f64, f64, f64, f64)) {
    let (x0, y0, x1, y1) = curve.bounding_box();
    let padx = 0.1 * (x1 - x0).max(1e-12);
    let pady = 0.1 * (y1 - y0).max(1e-12);
    let bbox = (x0 - padx, y0 - pady, x1 + padx, y1 + pady);
    let (bx0, by0, bx1, by1) = bbox;
    let dx = (bx1 - bx0) / res as f64;
    let dy = (by1 - by0) / res as f64;
    let half_diag = 0.5 * dx.hypot(dy);
    let cells = (0..res * res)
        .into_par_iter()
        .map(|idx| {
            let (row, col) = (idx / res, idx % res);
            let w = Complex64::new(bx0 + (col as f64 + 0.5) * dx, by1 - (row as f64 + 0.5) * dy);
            if curve.distance_to(w) < half_diag {
                None
            } else {
                Some(crossing_winding(curve.nodes(), w))
            }
        })
        .collect();
    (cells, bbox)
}

/// SVG document with the winding raster and the boundary polyline on top.
pub fn plot_svg(curve: &BoundaryCurve, res: usize) -> String {
    let res = res.max(1);
    let (cells, (bx0, by0, bx1, by1)) = winding_raster(curve, res);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{PIXELS}" height="{PIXELS}" viewBox="0 0 {res} {res}" shape-rendering="crispEdges">"#
    );
    let _ = writeln!(
        svg,
        "<title>winding numbers of {}</title>",
        escape(curve.source())
    );
    for row in 0..res {
        let mut col = 0;
        while col < res {
            let class = cells[row * res + col];
            let start = col;
            while col < res && cells[row * res + col] == class {
                col += 1;
            }
            let fill = palette(class);
            if fill != "#ffffff" {
                let _ = writeln!(
                    svg,
                    r#"<rect x="{start}" y="{row}" width="{}" height="1" fill="{fill}"/>"#,
                    col - start
                );
            }
        }
    }
    let sx = res as f64 / (bx1 - bx0);
    let sy = res as f64 / (by1 - by0);
    let points: Vec<String> = curve
        .nodes()
        .iter()
        .chain(curve.nodes().first())
        .map(|z| format!("{:.4},{:.4}", (z.re - bx0) * sx, (by1 - z.im) * sy))
        .collect();
    let _ = writeln!(
        svg,
        r#"<polyline points="{}" fill="none" stroke="black" stroke-width="{:.4}"/>"#,
        points.join(" "),
        res as f64 / 400.0
    );
    svg.push_str("</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
