use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::{inner, malmquist_basis, norm, RANK_TOL};
use crate::error::{Error, Result};
use crate::symbol::{truncated_product, BlaschkeProduct, TaylorSymbol};

/// A witness must be orthogonal to every power `φ^j` to this accuracy.
pub const WITNESS_PAIRING_CAP: f64 = 1e-8;
/// The separating dictionary element must pair with the witness at least this much.
pub const WITNESS_SEPARATION_FLOOR: f64 = 0.1;

const MALMQUIST_DICTIONARY_MIN: usize = 16;

/// A unit vector `f0` orthogonal to `span{1, φ, …, φ^m}` in `C^N`, together
/// with a dictionary function `h` that sees it.
#[derive(Debug, Clone, Serialize)]
pub struct DensityWitness {
    #[serde(with = "crate::complex_json::vec")]
    pub f0: Vec<Complex64>,
    pub n: usize,
    pub depth: usize,
    /// Dimension of the power span.
    pub rank: usize,
    /// `max_j |⟨φ^j, f0⟩|`.
    pub max_pairing: f64,
    pub separating: String,
    #[serde(with = "crate::complex_json::vec")]
    pub separating_coeffs: Vec<Complex64>,
    /// `|⟨h, f0⟩|`.
    pub pairing: f64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DensityOutcome {
    Witness(DensityWitness),
    /// The powers already span `C^N`.
    DenseAtThisTruncation {
        n: usize,
        depth: usize,
        rank: usize,
    },
    /// A complement exists but no witness met the pairing thresholds.
    Inconclusive {
        n: usize,
        depth: usize,
        rank: usize,
        max_pairing: f64,
        pairing: f64,
    },
}

impl DensityOutcome {
    pub fn witness(&self) -> Option<&DensityWitness> {
        match self {
            DensityOutcome::Witness(w) => Some(w),
            _ => None,
        }
    }
}

/// Searches for a vector orthogonal to the first `m + 1` powers of `φ`
/// compressed to `N` coefficients.
pub fn density_witness(s: &TaylorSymbol, n: usize, m: usize) -> Result<DensityOutcome> {
    if m == 0 || n < 2 {
        return Err(Error::InvalidArgument(
            "density witness needs m >= 1 and N >= 2".into(),
        ));
    }
    let polynomial = s.polynomial_coeffs().is_some() && s.degree().unwrap_or(0) < s.order();
    if let (true, Some(d)) = (polynomial, s.degree()) {
        if n < m * d {
            return Err(Error::InvalidArgument(format!(
                "N = {n} is below m * deg = {}",
                m * d
            )));
        }
    } else if n - 1 > s.order() {
        return Err(Error::OrderMismatch {
            requested: n,
            order: s.order(),
        });
    }

    let base: Vec<Complex64> = (0..n).map(|k| s.coeff(k)).collect();
    let mut powers: Vec<Vec<Complex64>> = Vec::with_capacity(m + 1);
    let mut p = vec![Complex64::new(0.0, 0.0); n];
    p[0] = Complex64::new(1.0, 0.0);
    for _ in 0..=m {
        let next = truncated_product(&p, &base, n);
        powers.push(p);
        p = next;
    }

    let mut a = DMatrix::<Complex64>::zeros(n, m + 1);
    for (j, col) in powers.iter().enumerate() {
        let scale = norm(col);
        if scale > 0.0 {
            for i in 0..n {
                a[(i, j)] = col[i] / scale;
            }
        }
    }
    let svd = a.svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let smax = svd.singular_values.max();
    let span: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&k| svd.singular_values[k] > RANK_TOL * smax)
        .collect();
    let rank = span.len();
    if rank >= n {
        return Ok(DensityOutcome::DenseAtThisTruncation { n, depth: m, rank });
    }

    // project the unit vectors onto the orthocomplement, first good one wins
    let project = |i: usize| -> Vec<Complex64> {
        let mut g = vec![Complex64::new(0.0, 0.0); n];
        g[i] = Complex64::new(1.0, 0.0);
        for &k in &span {
            let coef = u[(i, k)].conj();
            for r in 0..n {
                g[r] -= u[(r, k)] * coef;
            }
        }
        g
    };
    let mut best: Option<Vec<Complex64>> = None;
    let mut best_norm = -1.0;
    for i in 0..n {
        let g = project(i);
        let gn = norm(&g);
        if gn >= 0.5 {
            best = Some(g);
            best_norm = gn;
            break;
        }
        if gn > best_norm {
            best_norm = gn;
            best = Some(g);
        }
    }
    let f0: Vec<Complex64> = best
        .expect("N >= 2")
        .iter()
        .map(|x| x / best_norm)
        .collect();

    let max_pairing = powers
        .iter()
        .map(|col| inner(col, &f0).norm())
        .fold(0.0, f64::max);

    let mut dictionary: Vec<(String, Vec<Complex64>)> = (1..n)
        .map(|k| {
            let mut e = vec![Complex64::new(0.0, 0.0); n];
            e[k] = Complex64::new(1.0, 0.0);
            (
                if k == 1 {
                    "z".to_string()
                } else {
                    format!("z^{k}")
                },
                e,
            )
        })
        .collect();
    if n >= MALMQUIST_DICTIONARY_MIN {
        let zeros = vec![
            Complex64::new(0.5, 0.0),
            Complex64::new(-0.5, 0.0),
            Complex64::new(0.0, 0.5),
            Complex64::new(0.0, -0.5),
        ];
        let b = BlaschkeProduct::from_zeros(zeros)?;
        for (i, mut e) in malmquist_basis(&b, (n - 1).max(4 * b.order()))?
            .into_iter()
            .enumerate()
        {
            e.truncate(n);
            dictionary.push((format!("malmquist[{}]", i + 1), e));
        }
    }
    let mut pick = 0;
    let mut pairing = -1.0;
    for (k, (_, h)) in dictionary.iter().enumerate() {
        let v = inner(h, &f0).norm();
        if v > pairing {
            pairing = v;
            pick = k;
        }
    }
    let (name, h) = dictionary.swap_remove(pick);

    if max_pairing <= WITNESS_PAIRING_CAP && pairing >= WITNESS_SEPARATION_FLOOR {
        Ok(DensityOutcome::Witness(DensityWitness {
            f0,
            n,
            depth: m,
            rank,
            max_pairing,
            separating: name,
            separating_coeffs: h,
            pairing,
        }))
    } else {
        Ok(DensityOutcome::Inconclusive {
            n,
            depth: m,
            rank,
            max_pairing,
            pairing,
        })
    }
}
