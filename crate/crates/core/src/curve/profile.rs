use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{winding_number, BoundaryCurve, PROFILE_EXCLUSION};
use crate::error::{Error, Result};
use crate::symbol::roots::{count_inside, polynomial_roots};
use crate::symbol::TaylorSymbol;

/// One interior sample `a`, its image `w = φ(a)` and the winding `n(φ(γ), w)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileEntry {
    #[serde(with = "crate::complex_json")]
    pub a: Complex64,
    #[serde(with = "crate::complex_json")]
    pub w: Complex64,
    pub n: i64,
    /// Distance from `w` to the sampled curve.
    #[serde(skip)]
    pub clearance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExcludedSample {
    #[serde(with = "crate::complex_json")]
    pub a: Complex64,
    #[serde(with = "crate::complex_json")]
    pub w: Complex64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindingProfile {
    #[serde(rename = "samples")]
    pub entries: Vec<ProfileEntry>,
    pub excluded: Vec<ExcludedSample>,
}

impl WindingProfile {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct winding values in increasing order.
    pub fn distinct_windings(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.entries.iter().map(|e| e.n).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Grid point `(i, j)` of the `K×K` polar grid: radius `(i+½)/K`, angle `2πj/K`.
fn grid_point(i: usize, j: usize, k: usize) -> Complex64 {
    let r = (i as f64 + 0.5) / k as f64;
    Complex64::from_polar(r, 2.0 * std::f64::consts::PI * j as f64 / k as f64)
}

/// Windings at the images of a `K×K` polar grid of the disk.
///
/// Output order is the grid enumeration order (radius-major) regardless of
/// how the samples are evaluated.
pub fn winding_profile(s: &TaylorSymbol, k: usize) -> Result<WindingProfile> {
    if k < 8 {
        return Err(Error::InvalidArgument(format!(
            "profile grid size must be at least 8, got {k}"
        )));
    }
    let curve = BoundaryCurve::with_default_nodes(s);
    let samples: Vec<(Complex64, Complex64, Option<(i64, f64)>)> = (0..k * k)
        .into_par_iter()
        .map(|idx| {
            let a = grid_point(idx / k, idx % k, k);
            let w = s.eval(a);
            let d = curve.distance_to(w);
            if d < PROFILE_EXCLUSION {
                return (a, w, None);
            }
            (a, w, winding_number(&curve, w).ok().map(|n| (n, d)))
        })
        .collect();

    let mut profile = WindingProfile {
        entries: Vec::new(),
        excluded: Vec::new(),
    };
    for (a, w, res) in samples {
        match res {
            Some((n, clearance)) => profile.entries.push(ProfileEntry { a, w, n, clearance }),
            None => profile.excluded.push(ExcludedSample { a, w }),
        }
    }
    if profile.entries.is_empty() {
        return Err(Error::EmptyProfile);
    }
    Ok(profile)
}

/// Number of solutions of `φ(z) = w` in the disk, with multiplicity.
///
/// Computed as a winding number; polynomial symbols are cross-checked against
/// the companion-matrix roots of `φ − w`.
pub fn valence(s: &TaylorSymbol, w: Complex64) -> Result<i64> {
    let curve = BoundaryCurve::with_default_nodes(s);
    let n = winding_number(&curve, w)?;
    if let Some(p) = s.polynomial_coeffs() {
        let mut shifted = p.to_vec();
        shifted[0] -= w;
        let roots = count_inside(&polynomial_roots(&shifted), 1.0);
        if roots as i64 != n {
            return Err(Error::OracleMismatch { winding: n, roots });
        }
    }
    Ok(n)
}

/// `k(φ)`: the smallest nonzero winding recorded in the profile.
pub fn minimal_winding(p: &WindingProfile) -> Result<i64> {
    p.entries
        .iter()
        .map(|e| e.n)
        .filter(|&n| n != 0)
        .min()
        .ok_or(Error::EmptyProfile)
}

/// Whether all recorded windings agree; otherwise a witness pair
/// `(higher winding, lower winding)`.
pub fn is_winding_constant(p: &WindingProfile) -> (bool, Option<(ProfileEntry, ProfileEntry)>) {
    let hi = p.entries.iter().max_by_key(|e| e.n);
    let lo = p.entries.iter().min_by_key(|e| e.n);
    match (hi, lo) {
        (Some(h), Some(l)) if h.n != l.n => {
            // prefer the best-separated representatives of each value
            let pick = |n: i64| {
                p.entries
                    .iter()
                    .filter(|e| e.n == n)
                    .max_by(|x, y| x.clearance.total_cmp(&y.clearance))
                    .cloned()
                    .unwrap()
            };
            (false, Some((pick(h.n), pick(l.n))))
        }
        _ => (true, None),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Univalence {
    /// Two distinct points of the disk with the same image.
    CertifiedNonUnivalent {
        a: Complex64,
        b: Complex64,
        w: Complex64,
    },
    /// No collision found; sampling cannot prove injectivity.
    PlausiblyUnivalent,
}

impl Univalence {
    pub fn is_certified_non_univalent(&self) -> bool {
        matches!(self, Univalence::CertifiedNonUnivalent { .. })
    }
}

const DISTINCT: f64 = 1e-6;
const COLLISION: f64 = 1e-10;

pub fn univalence_probe(s: &TaylorSymbol, k: usize) -> Result<Univalence> {
    let p = winding_profile(s, k)?;
    Ok(univalence_probe_with(s, &p, k))
}

/// Univalence probe on an existing profile built with grid size `k`.
pub fn univalence_probe_with(s: &TaylorSymbol, p: &WindingProfile, k: usize) -> Univalence {
    let multi: Vec<&ProfileEntry> = p.entries.iter().filter(|e| e.n >= 2).collect();
    if !multi.is_empty() {
        let found = match s.polynomial_coeffs() {
            Some(coeffs) => witness_from_roots(s, coeffs, &multi),
            None => witness_by_newton(s, &multi, k),
        };
        if let Some(v) = found {
            return v;
        }
    }
    grid_collision(s, k).unwrap_or(Univalence::PlausiblyUnivalent)
}

fn interior_pair(
    s: &TaylorSymbol,
    w: Complex64,
    inside: &[Complex64],
) -> Option<(f64, Univalence)> {
    let mut best: Option<(f64, Complex64, Complex64)> = None;
    for (i, &a) in inside.iter().enumerate() {
        for &b in &inside[i + 1..] {
            let sep = (a - b).norm();
            if sep > DISTINCT && best.map_or(true, |(d, _, _)| sep > d) {
                best = Some((sep, a, b));
            }
        }
    }
    let (sep, a, b) = best?;
    let tol = 1e-9 * (1.0 + w.norm());
    if (s.eval(a) - w).norm() > tol || (s.eval(b) - w).norm() > tol {
        return None;
    }
    Some((sep, Univalence::CertifiedNonUnivalent { a, b, w }))
}

fn witness_from_roots(
    s: &TaylorSymbol,
    coeffs: &[Complex64],
    multi: &[&ProfileEntry],
) -> Option<Univalence> {
    multi
        .iter()
        .filter_map(|e| {
            let mut shifted = coeffs.to_vec();
            shifted[0] -= e.w;
            let inside: Vec<Complex64> = polynomial_roots(&shifted)
                .into_iter()
                .filter(|z| z.norm() < 1.0)
                .collect();
            interior_pair(s, e.w, &inside)
        })
        .max_by(|x, y| x.0.total_cmp(&y.0))
        .map(|(_, v)| v)
}

fn witness_by_newton(s: &TaylorSymbol, multi: &[&ProfileEntry], k: usize) -> Option<Univalence> {
    let ds = s.derivative();
    let starts: Vec<Complex64> = (0..k * k).map(|i| grid_point(i / k, i % k, k)).collect();
    for e in multi.iter().take(8) {
        let mut inside = vec![e.a];
        for &z0 in &starts {
            if let Some(r) = newton(s, &ds, e.w, z0) {
                if r.norm() < 1.0 && inside.iter().all(|q| (q - r).norm() > DISTINCT) {
                    inside.push(r);
                    if let Some((_, v)) = interior_pair(s, e.w, &inside) {
                        return Some(v);
                    }
                }
            }
        }
    }
    None
}

fn newton(
    s: &TaylorSymbol,
    ds: &TaylorSymbol,
    w: Complex64,
    mut z: Complex64,
) -> Option<Complex64> {
    for _ in 0..60 {
        let f = s.eval(z) - w;
        if f.norm() < 1e-13 * (1.0 + w.norm()) {
            return Some(z);
        }
        let d = ds.eval(z);
        if d.norm() < 1e-300 {
            return None;
        }
        z -= f / d;
        // the truncated series is only trusted inside the disk
        if !(z.norm() < 1.0) {
            return None;
        }
    }
    None
}

/// Two grid points whose images coincide to within [`COLLISION`].
fn grid_collision(s: &TaylorSymbol, k: usize) -> Option<Univalence> {
    let mut pts: Vec<(Complex64, Complex64)> = (0..k * k)
        .map(|i| {
            let a = grid_point(i / k, i % k, k);
            (a, s.eval(a))
        })
        .collect();
    pts.sort_by(|x, y| x.1.re.total_cmp(&y.1.re));
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[j].1.re - pts[i].1.re > COLLISION {
                break;
            }
            if (pts[j].1 - pts[i].1).norm() <= COLLISION && (pts[j].0 - pts[i].0).norm() > DISTINCT
            {
                return Some(Univalence::CertifiedNonUnivalent {
                    a: pts[i].0,
                    b: pts[j].0,
                    w: pts[i].1,
                });
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq)]
pub enum SingleCover {
    /// `w` has exactly one preimage `a`; winding is locally constant, so a
    /// neighbourhood of `w` is single covered.
    SingleCovers {
        a: Complex64,
        w: Complex64,
    },
    NoSingleSheetFound,
}

/// Looks for a winding-1 sample, preferring the one farthest from the curve.
pub fn single_cover_probe(_s: &TaylorSymbol, p: &WindingProfile) -> SingleCover {
    p.entries
        .iter()
        .filter(|e| e.n == 1)
        .max_by(|x, y| x.clearance.total_cmp(&y.clearance))
        .map_or(SingleCover::NoSingleSheetFound, |e| {
            SingleCover::SingleCovers { a: e.a, w: e.w }
        })
}
