//! Argument-principle geometry on the boundary image curve `φ(γ)`.

mod jordan;
mod profile;

pub use jordan::{jordan_test, Crossing};
pub use profile::{
    is_winding_constant, minimal_winding, single_cover_probe, univalence_probe,
    univalence_probe_with, valence, winding_profile, ExcludedSample, ProfileEntry, SingleCover,
    Univalence, WindingProfile,
};

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::symbol::TaylorSymbol;

pub const MIN_NODES: usize = 256;
pub const MAX_NODES: usize = 1 << 20;
/// Direct winding queries closer than this to the polyline are rejected.
pub const ON_CURVE_DISTANCE: f64 = 1e-6;
/// Profile samples closer than this to the polyline are set aside.
pub const PROFILE_EXCLUSION: f64 = 1e-4;
const MAX_STEP: f64 = PI / 2.0;
const MAX_RESIDUAL: f64 = 0.01;

/// Closed polyline through `φ(e^{2πij/M})`, `j = 0..M`.
#[derive(Debug, Clone)]
pub struct BoundaryCurve {
    nodes: Vec<Complex64>,
    source: String,
    symbol: Option<Arc<TaylorSymbol>>,
}

/// Smallest admissible power-of-two node count for a symbol of the given order.
pub fn default_nodes(order: usize) -> usize {
    (2 * order).next_power_of_two().max(MIN_NODES)
}

fn check_node_count(m: usize) -> Result<()> {
    if m < MIN_NODES || !m.is_power_of_two() || m > MAX_NODES {
        return Err(Error::InvalidArgument(format!(
            "curve node count must be a power of two in {MIN_NODES}..={MAX_NODES}, got {m}"
        )));
    }
    Ok(())
}

impl BoundaryCurve {
    /// Samples the symbol's boundary values. The curve keeps the symbol so that
    /// winding queries can refine it.
    pub fn from_symbol(s: &TaylorSymbol, nodes: usize) -> Result<Self> {
        Self::from_shared(Arc::new(s.clone()), nodes)
    }

    pub fn with_default_nodes(s: &TaylorSymbol) -> Self {
        Self::from_symbol(s, default_nodes(s.order())).expect("default node count is admissible")
    }

    fn from_shared(s: Arc<TaylorSymbol>, nodes: usize) -> Result<Self> {
        check_node_count(nodes)?;
        let values = s.eval_circle(nodes, 1.0)?;
        Ok(BoundaryCurve {
            nodes: values,
            source: s.label().to_string(),
            symbol: Some(s),
        })
    }

    /// A fixed polyline with no generating symbol; it is never refined.
    pub fn from_nodes(nodes: Vec<Complex64>, source: impl Into<String>) -> Result<Self> {
        check_node_count(nodes.len())?;
        Ok(BoundaryCurve {
            nodes,
            source: source.into(),
            symbol: None,
        })
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// The same curve at twice the resolution, when a generating symbol is known.
    pub fn refined(&self) -> Option<Result<BoundaryCurve>> {
        let s = self.symbol.as_ref()?;
        let m = self.nodes.len() * 2;
        if m > MAX_NODES {
            return None;
        }
        Some(Self::from_shared(Arc::clone(s), m))
    }

    /// Segments `(node_j, node_{j+1})`, closing back to node 0.
    pub fn segments(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        let m = self.nodes.len();
        (0..m).map(move |j| (self.nodes[j], self.nodes[(j + 1) % m]))
    }

    /// Euclidean distance from `w` to the polyline.
    pub fn distance_to(&self, w: Complex64) -> f64 {
        self.segments()
            .map(|(p, q)| segment_distance(w, p, q))
            .fold(f64::INFINITY, f64::min)
    }

    /// `(min re, min im, max re, max im)` of the nodes.
    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        self.nodes.iter().fold(
            (
                f64::INFINITY,
                f64::INFINITY,
                f64::NEG_INFINITY,
                f64::NEG_INFINITY,
            ),
            |(a, b, c, d), z| (a.min(z.re), b.min(z.im), c.max(z.re), d.max(z.im)),
        )
    }
}

pub(crate) fn segment_distance(w: Complex64, p: Complex64, q: Complex64) -> f64 {
    let d = q - p;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (w - p).norm();
    }
    let t = ((w - p).re * d.re + (w - p).im * d.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (w - (p + d * t)).norm()
}

/// Summed argument increments in turns, plus the largest single increment.
fn argument_sum(nodes: &[Complex64], w: Complex64) -> (f64, f64) {
    let m = nodes.len();
    let mut total = 0.0;
    let mut max_step: f64 = 0.0;
    for j in 0..m {
        let a = nodes[j] - w;
        let b = nodes[(j + 1) % m] - w;
        let step = (b * a.conj()).arg();
        total += step;
        max_step = max_step.max(step.abs());
    }
    (total / (2.0 * PI), max_step)
}

/// Integer winding number of the curve around `w`.
///
/// Any argument increment above π/2 triggers dyadic refinement of the curve
/// (up to [`MAX_NODES`]) when the generating symbol is known.
pub fn winding_number(c: &BoundaryCurve, w: Complex64) -> Result<i64> {
    let mut refined: Option<BoundaryCurve> = None;
    loop {
        let cur = refined.as_ref().unwrap_or(c);
        let distance = cur.distance_to(w);
        if distance <= ON_CURVE_DISTANCE {
            return Err(Error::OnCurve { distance });
        }
        let (turns, max_step) = argument_sum(cur.nodes(), w);
        let n = turns.round();
        let residual = (turns - n).abs();
        if max_step > MAX_STEP {
            if let Some(next) = cur.refined() {
                refined = Some(next?);
                continue;
            }
        }
        if residual >= MAX_RESIDUAL {
            return Err(Error::ResolutionExhausted { residual });
        }
        return Ok(n as i64);
    }
}

/// Winding number of the polyline by signed crossings of the ray `w + t`, `t > 0`.
///
/// Exact for the polyline itself and independent of [`winding_number`].
pub fn crossing_winding(nodes: &[Complex64], w: Complex64) -> i64 {
    let m = nodes.len();
    let mut n = 0i64;
    for j in 0..m {
        let a = nodes[j] - w;
        let b = nodes[(j + 1) % m] - w;
        if a.im <= 0.0 {
            if b.im > 0.0 && cross(a, b) > 0.0 {
                n += 1;
            }
        } else if b.im <= 0.0 && cross(a, b) < 0.0 {
            n -= 1;
        }
    }
    n
}

pub(crate) fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}
