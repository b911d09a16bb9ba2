use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::TruncatedOperator;
use crate::error::{Error, Result};

/// Dense `N²×N²` solves are limited to this matrix size.
pub const COMMUTANT_DIM_CAP: usize = 24;
/// Relative singular-value threshold for rank and null-space decisions.
pub const RANK_TOL: f64 = 1e-10;

/// Orthonormal null-space basis together with the singular values it was cut from.
#[derive(Debug, Clone, Serialize)]
pub struct NullSpace {
    pub basis: Vec<TruncatedOperator>,
    /// All singular values, descending.
    pub singular_values: Vec<f64>,
}

impl NullSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The `count` smallest singular values, for audit reports.
    pub fn tail(&self, count: usize) -> &[f64] {
        let n = self.singular_values.len();
        &self.singular_values[n.saturating_sub(count)..]
    }
}

/// Matrix of `X ↦ XB − BX` acting on column-major `vec(X)`.
fn commutation_map(b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = b.nrows();
    let mut k = DMatrix::<Complex64>::zeros(n * n, n * n);
    // vec(XB) = (Bᵀ ⊗ I) vec X, vec(BX) = (I ⊗ B) vec X
    for j in 0..n {
        for i in 0..n {
            let row = i + n * j;
            for l in 0..n {
                k[(row, i + n * l)] += b[(l, j)];
            }
            for kk in 0..n {
                k[(row, kk + n * j)] -= b[(i, kk)];
            }
        }
    }
    k
}

fn null_space(map: DMatrix<Complex64>, n: usize, tol: f64, label: &str) -> NullSpace {
    let cols = map.ncols();
    let svd = map.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut order: Vec<(usize, f64)> = svd.singular_values.iter().copied().enumerate().collect();
    order.sort_by(|a, b| b.1.total_cmp(&a.1));
    let smax = order.first().map_or(0.0, |x| x.1);
    let cut = tol * smax;

    let mut basis = Vec::new();
    let mut seen = vec![false; cols];
    for &(idx, sv) in &order {
        if sv <= cut {
            seen[idx] = true;
            basis.push(reshape(
                v_t.row(idx).iter().map(|x| x.conj()),
                n,
                label,
                basis.len(),
            ));
        }
    }
    // a wide map has fewer singular values than unknowns; the rest of V is null too
    for idx in order.len()..v_t.nrows() {
        basis.push(reshape(
            v_t.row(idx).iter().map(|x| x.conj()),
            n,
            label,
            basis.len(),
        ));
    }
    NullSpace {
        basis,
        singular_values: order.into_iter().map(|x| x.1).collect(),
    }
}

fn reshape(
    v: impl Iterator<Item = Complex64>,
    n: usize,
    label: &str,
    k: usize,
) -> TruncatedOperator {
    let data: Vec<Complex64> = v.collect();
    TruncatedOperator {
        matrix: DMatrix::from_column_slice(n, n, &data),
        label: format!("{label}[{k}]"),
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > COMMUTANT_DIM_CAP {
        return Err(Error::DimensionCap {
            dim: n,
            cap: COMMUTANT_DIM_CAP,
        });
    }
    Ok(())
}

/// Orthonormal basis of `{X : XT = TX}`.
pub fn commutant_basis(t: &TruncatedOperator, tol: f64) -> Result<NullSpace> {
    let n = t.dim();
    check_cap(n)?;
    Ok(null_space(commutation_map(&t.matrix), n, tol, "X"))
}

/// Orthonormal basis of `{X : XB = BX for every B in basis}`.
pub fn double_commutant_basis(basis: &[TruncatedOperator], tol: f64) -> Result<NullSpace> {
    let Some(first) = basis.first() else {
        return Err(Error::InvalidArgument(
            "double commutant of an empty family".into(),
        ));
    };
    let n = first.dim();
    check_cap(n)?;
    if basis.iter().any(|b| b.dim() != n) {
        return Err(Error::InvalidArgument(
            "commutant basis has mixed dimensions".into(),
        ));
    }
    let blocks: Vec<DMatrix<Complex64>> =
        basis.iter().map(|b| commutation_map(&b.matrix)).collect();
    let rows = n * n * blocks.len();
    let mut stacked = DMatrix::<Complex64>::zeros(rows, n * n);
    for (k, blk) in blocks.iter().enumerate() {
        stacked
            .view_mut((k * n * n, 0), (n * n, n * n))
            .copy_from(blk);
    }
    Ok(null_space(stacked, n, tol, "Y"))
}

/// Dimension of the unital algebra generated by `T`: the rank of
/// `[vec I, vec T, vec T², …, vec T^N]` (the degree of the minimal polynomial).
pub fn polynomial_algebra_dim(t: &TruncatedOperator) -> usize {
    let n = t.dim();
    let mut krylov = DMatrix::<Complex64>::zeros(n * n, n + 1);
    let mut p = DMatrix::<Complex64>::identity(n, n);
    for col in 0..=n {
        let scale = p.norm();
        if scale > 0.0 {
            for (r, x) in p.iter().enumerate() {
                krylov[(r, col)] = x / scale;
            }
        }
        p = &p * &t.matrix;
    }
    let sv = krylov.singular_values();
    let smax = sv.max();
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > RANK_TOL * smax).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opspace::toeplitz_truncation;
    use crate::symbol::TaylorSymbol;

    fn shift_power(k: usize, n: usize) -> TruncatedOperator {
        toeplitz_truncation(&TaylorSymbol::monomial(k, n), n).unwrap()
    }

    /// Brute-force oracle: rank of the commutation map by Gaussian elimination
    /// with partial pivoting on the explicit constraint system.
    fn brute_commutant_dim(t: &DMatrix<Complex64>) -> usize {
        let n = t.nrows();
        let mut rows: Vec<Vec<Complex64>> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                // (XT - TX)_{ij} = Σ_l X_il T_lj − Σ_l T_il X_lj
                let mut r = vec![Complex64::new(0.0, 0.0); n * n];
                for l in 0..n {
                    r[i * n + l] += t[(l, j)];
                    r[l * n + j] -= t[(i, l)];
                }
                rows.push(r);
            }
        }
        let mut rank = 0;
        let cols = n * n;
        for c in 0..cols {
            let piv =
                (rank..rows.len()).max_by(|&a, &b| rows[a][c].norm().total_cmp(&rows[b][c].norm()));
            let Some(p) = piv else { break };
            if rows[p][c].norm() < 1e-12 {
                continue;
            }
            rows.swap(rank, p);
            for r in 0..rows.len() {
                if r != rank {
                    let f = rows[r][c] / rows[rank][c];
                    if f.norm() != 0.0 {
                        for k in 0..cols {
                            let v = rows[rank][k];
                            rows[r][k] -= f * v;
                        }
                    }
                }
            }
            rank += 1;
        }
        cols - rank
    }

    #[test]
    fn commutant_dimensions() {
        let s = shift_power(1, 4);
        assert_eq!(brute_commutant_dim(&s.matrix), 4);
        assert_eq!(commutant_basis(&s, RANK_TOL).unwrap().dim(), 4);

        let s2 = shift_power(2, 4);
        assert_eq!(brute_commutant_dim(&s2.matrix), 8);
        assert_eq!(commutant_basis(&s2, RANK_TOL).unwrap().dim(), 8);

        let id = TruncatedOperator::identity(3);
        assert_eq!(commutant_basis(&id, RANK_TOL).unwrap().dim(), 9);
    }

    #[test]
    fn basis_elements_commute_and_are_orthonormal() {
        let t =
            toeplitz_truncation(&TaylorSymbol::from_real(&[0.25, 1.0, 1.0], 8, "c"), 6).unwrap();
        let ns = commutant_basis(&t, RANK_TOL).unwrap();
        assert_eq!(ns.dim(), 6);
        for (i, x) in ns.basis.iter().enumerate() {
            assert!(x.commutator(&t).norm() < 1e-12);
            for (j, y) in ns.basis.iter().enumerate() {
                let ip: Complex64 = x
                    .matrix
                    .iter()
                    .zip(y.matrix.iter())
                    .map(|(a, b)| a * b.conj())
                    .sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((ip - want).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn double_commutant_dimensions() {
        let cases = [
            (shift_power(1, 4), 4),
            (shift_power(2, 4), 2),
            (TruncatedOperator::identity(3), 1),
        ];
        for (t, want) in cases {
            let c = commutant_basis(&t, RANK_TOL).unwrap();
            let dc = double_commutant_basis(&c.basis, RANK_TOL).unwrap();
            assert_eq!(dc.dim(), want, "{}", t.label);
            assert_eq!(dc.dim(), polynomial_algebra_dim(&t));
        }
    }

    #[test]
    fn polynomial_algebra_examples() {
        assert_eq!(polynomial_algebra_dim(&shift_power(1, 5)), 5);
        assert_eq!(polynomial_algebra_dim(&shift_power(2, 4)), 2);
        assert_eq!(polynomial_algebra_dim(&TruncatedOperator::identity(4)), 1);
    }

    #[test]
    fn polynomials_in_t_lie_in_the_commutant() {
        let t =
            toeplitz_truncation(&TaylorSymbol::from_real(&[0.1, 0.5, -0.3], 8, "p"), 7).unwrap();
        let ns = commutant_basis(&t, RANK_TOL).unwrap();
        let p = &t.matrix * &t.matrix * Complex64::new(2.0, -1.0)
            + &t.matrix * Complex64::new(0.5, 0.0)
            + DMatrix::identity(7, 7);
        // project onto the basis and check the residual
        let mut proj = DMatrix::<Complex64>::zeros(7, 7);
        for x in &ns.basis {
            let coef: Complex64 = p
                .iter()
                .zip(x.matrix.iter())
                .map(|(a, b)| a * b.conj())
                .sum();
            proj += &x.matrix * coef;
        }
        assert!((p - proj).norm() <= 1e-9);
    }

    #[test]
    fn dimension_cap() {
        assert!(matches!(
            commutant_basis(&TruncatedOperator::identity(25), RANK_TOL),
            Err(Error::DimensionCap { .. })
        ));
    }
}
