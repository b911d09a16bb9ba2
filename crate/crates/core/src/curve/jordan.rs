//! Self-intersection search for closed polylines.

use num_complex::Complex64;
use serde::Serialize;

use super::{cross, segment_distance, BoundaryCurve};

const GRAZING: f64 = 1e-9;

/// A crossing between segments `i` and `j` (`i < j`, not adjacent).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Crossing {
    pub segments: (usize, usize),
    #[serde(with = "crate::complex_json")]
    pub point: Complex64,
    /// Set for near misses within `1e-9` that do not cross transversally.
    pub grazing: bool,
}

struct Seg {
    idx: usize,
    p: Complex64,
    q: Complex64,
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

/// All crossings between non-adjacent segments of the closed polyline.
///
/// Segments are swept in order of their left edge; only pairs whose bounding
/// boxes overlap (padded by the grazing tolerance) are tested.
pub fn jordan_test(c: &BoundaryCurve) -> Vec<Crossing> {
    let m = c.len();
    let mut segs: Vec<Seg> = c
        .segments()
        .enumerate()
        .map(|(idx, (p, q))| Seg {
            idx,
            p,
            q,
            x0: p.re.min(q.re) - GRAZING,
            x1: p.re.max(q.re) + GRAZING,
            y0: p.im.min(q.im) - GRAZING,
            y1: p.im.max(q.im) + GRAZING,
        })
        .collect();
    segs.sort_by(|a, b| a.x0.total_cmp(&b.x0).then(a.idx.cmp(&b.idx)));

    let mut out = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    for (k, s) in segs.iter().enumerate() {
        active.retain(|&a| segs[a].x1 >= s.x0);
        for &a in &active {
            let t = &segs[a];
            if t.y1 < s.y0 || s.y1 < t.y0 {
                continue;
            }
            let (i, j) = if t.idx < s.idx {
                (t.idx, s.idx)
            } else {
                (s.idx, t.idx)
            };
            if j - i <= 1 || (i == 0 && j == m - 1) {
                continue;
            }
            let (si, sj) = if t.idx < s.idx { (t, s) } else { (s, t) };
            if let Some(x) = intersect(si, sj) {
                out.push(x);
            }
        }
        active.push(k);
    }
    out.sort_by(|a, b| a.segments.cmp(&b.segments));
    out
}

fn intersect(a: &Seg, b: &Seg) -> Option<Crossing> {
    let r = a.q - a.p;
    let s = b.q - b.p;
    let denom = cross(r, s);
    let qp = b.p - a.p;
    if denom != 0.0 {
        let t = cross(qp, s) / denom;
        let u = cross(qp, r) / denom;
        // half-open parameters so that a crossing through a node is counted once
        if (0.0..1.0).contains(&t) && (0.0..1.0).contains(&u) {
            return Some(Crossing {
                segments: (a.idx, b.idx),
                point: a.p + r * t,
                grazing: false,
            });
        }
    }
    let gap = [
        segment_distance(a.p, b.p, b.q),
        segment_distance(a.q, b.p, b.q),
        segment_distance(b.p, a.p, a.q),
        segment_distance(b.q, a.p, a.q),
    ];
    let (k, d) = gap
        .iter()
        .copied()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .unwrap();
    if d <= GRAZING {
        let point = [a.p, a.q, b.p, b.q][k];
        // endpoints shared with a transversal crossing already counted elsewhere are skipped
        if denom != 0.0 && d == 0.0 {
            return None;
        }
        return Some(Crossing {
            segments: (a.idx, b.idx),
            point,
            grazing: true,
        });
    }
    None
}
