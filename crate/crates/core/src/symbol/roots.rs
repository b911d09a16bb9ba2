//! Polynomial roots from the eigenvalues of a balanced companion matrix.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

/// Largest degree handed to the companion-matrix solver.
pub const ROOT_DEGREE_CAP: usize = 64;

/// Roots closer than this (relative) are merged and replaced by their mean.
const CLUSTER_TOL: f64 = 1e-5;

/// All roots of `Σ c_k z^k`, with multiplicity.
///
/// Trailing coefficients that vanish relative to the largest are dropped, exact
/// zero roots are deflated, and nearby eigenvalues (the usual splitting of a
/// multiple root) are replaced by their centroid.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Vec::new();
    }
    let negligible = scale * 1e-15;
    let Some(top) = coeffs.iter().rposition(|c| c.norm() > negligible) else {
        return Vec::new();
    };
    let low = coeffs
        .iter()
        .position(|c| c.norm() > negligible)
        .unwrap_or(0);
    let mut roots = vec![Complex64::new(0.0, 0.0); low];
    let p = &coeffs[low..=top];
    let degree = p.len() - 1;
    if degree == 0 {
        return roots;
    }
    if degree == 1 {
        roots.push(-p[0] / p[1]);
        return roots;
    }
    // a polynomial in z^g has a spectrum symmetric under rotation by 2π/g, which
    // stalls the shifted QR iteration; solve for u = z^g instead
    let g = (1..=degree)
        .filter(|&k| p[k].norm() > negligible)
        .fold(0, gcd);
    if g > 1 {
        let q: Vec<Complex64> = p.iter().step_by(g).copied().collect();
        for u in polynomial_roots(&q) {
            let r = u.powf(1.0 / g as f64);
            for j in 0..g {
                let z = r * Complex64::from_polar(
                    1.0,
                    2.0 * std::f64::consts::PI * j as f64 / g as f64,
                );
                roots.push(if u == Complex64::new(0.0, 0.0) {
                    u
                } else {
                    polish(p, z)
                });
            }
        }
        return roots;
    }

    let lead = p[degree];
    let mut m = DMatrix::<Complex64>::zeros(degree, degree);
    for i in 1..degree {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..degree {
        m[(i, degree - 1)] = -p[i] / lead;
    }
    balance(&mut m);

    let eig = Schur::try_new(m.clone(), 1e-15, 10_000)
        .or_else(|| Schur::try_new(m, 1e-13, 100_000))
        .and_then(|s| s.eigenvalues());
    let Some(eig) = eig else {
        return roots;
    };
    let mut raw: Vec<Complex64> = eig.iter().copied().collect();
    raw.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    for cluster in clusters(&raw) {
        let mean = cluster.iter().sum::<Complex64>() / cluster.len() as f64;
        let r = if cluster.len() == 1 {
            polish(p, mean)
        } else {
            mean
        };
        roots.extend(std::iter::repeat(r).take(cluster.len()));
    }
    roots
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Parlett–Reinsch balancing with radix-2 scaling.
fn balance(m: &mut DMatrix<Complex64>) {
    let n = m.nrows();
    let l1 = |z: Complex64| z.re.abs() + z.im.abs();
    loop {
        let mut converged = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += l1(m[(j, i)]);
                    r += l1(m[(i, j)]);
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / 2.0;
            while c < g {
                f *= 2.0;
                c *= 4.0;
            }
            g = r * 2.0;
            while c >= g {
                f /= 2.0;
                c /= 4.0;
            }
            if (c + r) / f < 0.95 * s {
                converged = false;
                for j in 0..n {
                    m[(i, j)] /= f;
                    m[(j, i)] *= f;
                }
            }
        }
        if converged {
            break;
        }
    }
}

fn clusters(sorted: &[Complex64]) -> Vec<Vec<Complex64>> {
    let mut groups: Vec<Vec<Complex64>> = Vec::new();
    for &z in sorted {
        let tol = CLUSTER_TOL * (1.0 + z.norm());
        match groups
            .iter_mut()
            .find(|g| g.iter().any(|w| (w - z).norm() < tol))
        {
            Some(g) => g.push(z),
            None => groups.push(vec![z]),
        }
    }
    groups
}

fn polish(p: &[Complex64], mut z: Complex64) -> Complex64 {
    let dp: Vec<Complex64> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();
    for _ in 0..3 {
        let f = super::horner(p, z);
        let d = super::horner(&dp, z);
        if d.norm() == 0.0 {
            break;
        }
        let step = f / d;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
    }
    z
}

/// Number of roots (with multiplicity) satisfying `|z| < radius`.
pub fn count_inside(roots: &[Complex64], radius: f64) -> usize {
    roots.iter().filter(|z| z.norm() < radius).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn expand(roots: &[Complex64]) -> Vec<Complex64> {
        let mut p = vec![c(1.0, 0.0)];
        for r in roots {
            let mut q = vec![c(0.0, 0.0); p.len() + 1];
            for (k, a) in p.iter().enumerate() {
                q[k + 1] += a;
                q[k] -= a * r;
            }
            p = q;
        }
        p
    }

    #[test]
    fn double_root_of_cardioid() {
        let r = polynomial_roots(&[c(0.25, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(r.len(), 2);
        for z in r {
            assert!((z - c(-0.5, 0.0)).norm() < 1e-10, "{z}");
        }
    }

    #[test]
    fn monomial_roots_are_deflated() {
        let mut p = vec![c(0.0, 0.0); 7];
        p[6] = c(1.0, 0.0);
        let r = polynomial_roots(&p);
        assert_eq!(r, vec![c(0.0, 0.0); 6]);
    }

    #[test]
    fn cardioid_level_set() {
        // (z + 1/2)^2 = 1.21 → z = 0.6, -1.6
        let r = polynomial_roots(&[c(0.25 - 1.21, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(count_inside(&r, 1.0), 1);
        assert!(r.iter().any(|z| (z - c(0.6, 0.0)).norm() < 1e-12));
        assert!(r.iter().any(|z| (z - c(-1.6, 0.0)).norm() < 1e-12));
    }

    #[test]
    fn recovers_random_roots() {
        let want = [
            c(0.3, 0.1),
            c(-0.7, 0.2),
            c(0.1, -0.9),
            c(1.5, 0.5),
            c(-2.0, 0.0),
        ];
        let mut got = polynomial_roots(&expand(&want));
        assert_eq!(got.len(), want.len());
        for w in want {
            let (i, d) = got
                .iter()
                .enumerate()
                .map(|(i, g)| (i, (g - w).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            assert!(d < 1e-10, "{w}: {d}");
            got.remove(i);
        }
    }
}
