//! Compressions of Hardy-space operators to `span{1, z, …, z^{N−1}}`.
//!
//! Products of lower-triangular Toeplitz matrices are exact compressions of
//! products of analytic Toeplitz operators, and the Wold and dilation
//! commutators vanish exactly. The reproducing-kernel eigenrelation only holds
//! up to a tail that decays like `|a|^N`.

mod commutant;
mod density;
mod fejer;
mod wold;

pub use commutant::{
    commutant_basis, double_commutant_basis, polynomial_algebra_dim, NullSpace, COMMUTANT_DIM_CAP,
    RANK_TOL,
};
pub use density::{
    density_witness, DensityOutcome, DensityWitness, WITNESS_PAIRING_CAP, WITNESS_SEPARATION_FLOOR,
};
pub use fejer::{
    fejer_polynomial, fejer_supnorm_check, fejer_wot_gap, SupNormCheck, SUPNORM_NODES,
};
pub use wold::{
    dilation_matrix, gram_residual, malmquist_basis, model_expand, wold_components,
    wold_projection_matrix, wold_reconstruct, ModelExpansion,
};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symbol::TaylorSymbol;

/// An `N×N` matrix acting on Taylor coefficient vectors of length `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedOperator {
    pub matrix: DMatrix<Complex64>,
    pub label: String,
}

impl TruncatedOperator {
    pub fn new(matrix: DMatrix<Complex64>, label: impl Into<String>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() || matrix.nrows() == 0 {
            return Err(Error::InvalidArgument(format!(
                "operator matrix must be square and nonempty, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        Ok(TruncatedOperator {
            matrix,
            label: label.into(),
        })
    }

    pub fn identity(n: usize) -> Self {
        TruncatedOperator {
            matrix: DMatrix::identity(n, n),
            label: "I".into(),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `XT − TX`.
    pub fn commutator(&self, other: &TruncatedOperator) -> DMatrix<Complex64> {
        &self.matrix * &other.matrix - &other.matrix * &self.matrix
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[(i, j)] * v[j]).sum())
            .collect()
    }
}

impl Serialize for TruncatedOperator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.dim();
        let rows: Vec<Vec<[f64; 2]>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| [self.matrix[(i, j)].re, self.matrix[(i, j)].im])
                    .collect()
            })
            .collect();
        let mut st = s.serialize_struct("TruncatedOperator", 2)?;
        st.serialize_field("n", &n)?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

/// Lower-triangular Toeplitz compression of `M_φ`: entry `(i, j)` is `c_{i−j}`.
pub fn toeplitz_truncation(s: &TaylorSymbol, n: usize) -> Result<TruncatedOperator> {
    if n == 0 || n - 1 > s.order() {
        return Err(Error::OrderMismatch {
            requested: n,
            order: s.order(),
        });
    }
    let m = DMatrix::from_fn(n, n, |i, j| {
        if i >= j {
            s.coeff(i - j)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok(TruncatedOperator {
        matrix: m,
        label: format!("T[{}]", s.label()),
    })
}

/// Truncated reproducing kernel `k_a = (1, ā, ā², …)`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelVector {
    pub a: Complex64,
    pub entries: Vec<Complex64>,
}

impl KernelVector {
    pub fn new(a: Complex64, n: usize) -> Result<Self> {
        if !(a.norm() < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "kernel point {a} is not in the disk"
            )));
        }
        let mut entries = Vec::with_capacity(n);
        let mut p = Complex64::new(1.0, 0.0);
        for _ in 0..n {
            entries.push(p);
            p *= a.conj();
        }
        Ok(KernelVector { a, entries })
    }

    pub fn norm(&self) -> f64 {
        norm(&self.entries)
    }

    /// `⟨g, k_a⟩ = Σ g_j a^j`, i.e. point evaluation of the truncated `g` at `a`.
    pub fn pair(&self, g: &[Complex64]) -> Complex64 {
        inner(g, &self.entries)
    }
}

/// `⟨g, f⟩ = Σ g_j conj(f_j)`.
pub fn inner(g: &[Complex64], f: &[Complex64]) -> Complex64 {
    g.iter().zip(f).map(|(x, y)| x * y.conj()).sum()
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// `‖Tᴴ k_a − conj(φ(a)) k_a‖ / ‖k_a‖` with `T` the `N×N` compression.
pub fn adjoint_eigen_residual(s: &TaylorSymbol, a: Complex64, n: usize) -> Result<f64> {
    let t = toeplitz_truncation(s, n)?;
    let k = KernelVector::new(a, n)?;
    let lambda = s.eval(a).conj();
    let th = t.matrix.adjoint();
    let diff: Vec<Complex64> = (0..n)
        .map(|i| {
            let row: Complex64 = (0..n).map(|j| th[(i, j)] * k.entries[j]).sum();
            row - lambda * k.entries[i]
        })
        .collect();
    Ok(norm(&diff) / k.norm())
}

/// `max_j |(X z^j)(a) − (X1)(a)·a^j|` over `j < N/2`, with point values taken
/// as kernel pairings. `X` must commute with the compression of `M_φ`.
pub fn deddens_wong_identity_residual(
    s: &TaylorSymbol,
    x: &TruncatedOperator,
    a: Complex64,
) -> Result<f64> {
    let n = x.dim();
    let t = toeplitz_truncation(s, n)?;
    let defect = x.commutator(&t).norm();
    if defect > 1e-8 {
        return Err(Error::NotACommutantElement { defect });
    }
    let k = KernelVector::new(a, n)?;
    let x1: Vec<Complex64> = x.matrix.column(0).iter().copied().collect();
    let x1_at_a = k.pair(&x1);
    let mut worst: f64 = 0.0;
    let mut aj = Complex64::new(1.0, 0.0);
    for j in 0..n / 2 {
        let col: Vec<Complex64> = x.matrix.column(j).iter().copied().collect();
        worst = worst.max((k.pair(&col) - x1_at_a * aj).norm());
        aj *= a;
    }
    Ok(worst)
}
