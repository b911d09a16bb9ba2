//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` still run and still print FAIL when
//! they fail; they do not change the exit status.

use std::f64::consts::PI;
use std::process::Command;

use hardylab::classify::{classify, Answer, ClassifyConfig, Confidence};
use hardylab::cli::registry;
use hardylab::curve::{jordan_test, winding_number, BoundaryCurve};
use hardylab::factor::{
    bdu_crosscheck, bdu_factor, default_fit_degree, fit_through_blaschke, support_gcd,
};
use hardylab::opspace::{
    adjoint_eigen_residual, commutant_basis, density_witness, dilation_matrix,
    double_commutant_basis, fejer_supnorm_check, fejer_wot_gap, gram_residual, malmquist_basis,
    polynomial_algebra_dim, toeplitz_truncation, wold_projection_matrix, TruncatedOperator,
    RANK_TOL,
};
use hardylab::symbol::{lower, parse_symbol, BlaschkeProduct, TaylorSymbol, NOISE_FLOOR};
use hardylab::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KNOWN_UNATTAINABLE: &[u32] = &[8];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn sym(text: &str, order: usize) -> TaylorSymbol {
    lower(&parse_symbol(text).expect("valid DSL"), order)
        .expect("lowerable")
        .with_label(text)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let s = sym("(z+0.5)^2", 256);
    let cfg = ClassifyConfig {
        probes: vec![c(0.0, 0.0), c(1.21, 0.0)],
        ..Default::default()
    };
    let v = match classify(&s, &cfg) {
        Ok(v) => v,
        Err(e) => return outcome(false, format!("classify failed: {e}")),
    };
    let verdict = v.mcp == Answer::No
        && v.dcp == Answer::No
        && v.confidence.mcp == Some(Confidence::Certified)
        && v.confidence.dcp == Some(Confidence::Certified);
    let curve = BoundaryCurve::with_default_nodes(&s);
    let n0 = winding_number(&curve, c(0.0, 0.0));
    let n1 = winding_number(&curve, c(1.21, 0.0));
    let r2 = v.rules.iter().find(|r| r.id == "R2");
    let reported = r2.map(|r| {
        (
            r.evidence["probes"][0]["n"].as_i64(),
            r.evidence["probes"][1]["n"].as_i64(),
        )
    });
    let windings = n0.as_ref().ok() == Some(&2)
        && n1.as_ref().ok() == Some(&1)
        && reported == Some((Some(2), Some(1)));
    let r3 = v.rules.iter().any(|r| r.id == "R3");
    let w = density_witness(&s, 16, 6);
    let (mp, pr) = match w.as_ref().ok().and_then(|o| o.witness()) {
        Some(w) => (w.max_pairing, w.pairing),
        None => (f64::INFINITY, 0.0),
    };
    let witness = mp <= 1e-8 && pr >= 0.1;
    outcome(
        verdict && windings && r3 && witness,
        format!(
            "mcp={:?}/{:?} dcp={:?}/{:?}; n(0)={n0:?} n(1.21)={n1:?}; witness max_pairing={mp:.3e} pairing={pr:.3}",
            v.mcp, v.confidence.mcp, v.dcp, v.confidence.dcp
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 2..=4usize {
        let s = sym(&format!("z^{n}"), 256);
        match classify(&s, &ClassifyConfig::default()) {
            Ok(v) => {
                ok &= v.dcp == Answer::Yes && v.mcp == Answer::No;
                notes.push(format!("z^{n}: mcp={:?} dcp={:?}", v.mcp, v.dcp));
            }
            Err(e) => {
                ok = false;
                notes.push(format!("z^{n}: {e}"));
            }
        }
        let t = toeplitz_truncation(&TaylorSymbol::monomial(n, 12), 12).unwrap();
        let p = wold_projection_matrix(n, 12).unwrap();
        let l = dilation_matrix(Complex64::from_polar(1.0, 2.0 * PI / n as f64), 12).unwrap();
        let zero = |x: &TruncatedOperator| x.commutator(&t).iter().all(|v| *v == c(0.0, 0.0));
        ok &= zero(&p) && zero(&l);
    }
    notes.push("projection and dilation commutators exactly zero at N=12".into());
    outcome(ok, notes.join("; "))
}

fn criterion_3() -> Outcome {
    let s = sym("z+0.5", 256);
    let v = classify(&s, &ClassifyConfig::default());
    let crossings = jordan_test(&BoundaryCurve::from_symbol(&s, 4096).unwrap()).len();
    match v {
        Ok(v) => outcome(
            v.mcp == Answer::Yes
                && v.confidence.mcp == Some(Confidence::Heuristic)
                && v.dcp == Answer::Yes
                && crossings == 0,
            format!(
                "mcp={:?}/{:?} dcp={:?}; crossings at M=4096: {crossings}",
                v.mcp, v.confidence.mcp, v.dcp
            ),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn criterion_4() -> Outcome {
    let s = sym("(z+0.5)^2", 256);
    let x = jordan_test(&BoundaryCurve::from_symbol(&s, 4096).unwrap());
    let dist = x
        .first()
        .map_or(f64::INFINITY, |k| (k.point - c(-0.75, 0.0)).norm());
    outcome(
        x.len() == 1 && dist <= 1e-3,
        format!("{} crossing(s), distance to -0.75 = {dist:.3e}", x.len()),
    )
}

/// `q(z^k)` with `q(0)` arbitrary, `q'(0) ≠ 0` and `Σ_{j≥2} j|q_j| ≤ 0.9 |q_1|`.
fn random_bdu_symbol(rng: &mut ChaCha8Rng) -> (TaylorSymbol, usize) {
    let k = rng.gen_range(1..=5usize);
    let deg = rng.gen_range(1..=4usize);
    let phase = |rng: &mut ChaCha8Rng| Complex64::from_polar(1.0, rng.gen_range(0.0..2.0 * PI));
    let q1 = phase(rng) * rng.gen_range(1.0..2.0);
    let mut q = vec![phase(rng) * rng.gen_range(0.0..0.5), q1];
    let budget = 0.9 * q1.norm();
    let weights: Vec<f64> = (2..=deg).map(|_| rng.gen_range(0.1..1.0)).collect();
    let total: f64 = weights.iter().sum::<f64>().max(1.0);
    for (j, w) in (2..=deg).zip(&weights) {
        q.push(phase(rng) * (budget * w / total / j as f64));
    }
    let mut coeffs = vec![c(0.0, 0.0); k * deg + 1];
    for (j, qj) in q.iter().enumerate() {
        coeffs[j * k] = *qj;
    }
    (
        TaylorSymbol::from_coeffs(&coeffs, 64, format!("q(z^{k})")),
        k,
    )
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_bd0);
    let mut agree = 0;
    let mut worst_residual: f64 = 0.0;
    let mut gcd_one = 0;
    let mut k_match = 0;
    for _ in 0..50 {
        let (s, k) = random_bdu_symbol(&mut rng);
        if let Ok(x) = bdu_crosscheck(&s) {
            if x.agree {
                agree += 1;
            }
        }
        match bdu_factor(&s) {
            Ok(f) => {
                worst_residual = worst_residual.max(f.residual);
                if support_gcd(&f.h, NOISE_FLOOR) == Ok(1) {
                    gcd_one += 1;
                }
                if f.k == k {
                    k_match += 1;
                }
            }
            Err(_) => worst_residual = f64::INFINITY,
        }
    }
    outcome(
        agree == 50 && worst_residual <= 1e-8 && gcd_one == 50,
        format!(
            "agreement {agree}/50, max residual {worst_residual:.3e}, gcd(h)=1 in {gcd_one}/50, k recovered in {k_match}/50"
        ),
    )
}

fn criterion_6() -> Outcome {
    let z6 = sym("z^6", 256);
    let coeff_err = |h: &TaylorSymbol, k: usize| {
        (0..=h.order())
            .map(|j| (h.coeff(j) - if j == k { c(1.0, 0.0) } else { c(0.0, 0.0) }).norm())
            .fold(0.0, f64::max)
    };
    let a = fit_through_blaschke(&z6, &BlaschkeProduct::power(6), 1);
    let b = fit_through_blaschke(&z6, &BlaschkeProduct::power(3), 2);
    let card = sym("(z+0.5)^2", 256);
    let b2 = BlaschkeProduct::power(2);
    let cfit = fit_through_blaschke(&card, &b2, default_fit_degree(&card, &b2));
    match (a, b, cfit) {
        (Ok(a), Ok(b), Ok(cf)) => {
            let ea = coeff_err(&a.h, 1);
            let eb = coeff_err(&b.h, 2);
            outcome(
                a.residual <= 1e-10 && ea <= 1e-8 && b.residual <= 1e-10 && eb <= 1e-8 && cf.residual > 0.01,
                format!(
                    "z^6 via z^6: residual {:.3e}, |h - z| {ea:.1e}; via z^3: residual {:.3e}, |h - z^2| {eb:.1e}; cardioid via z^2: residual {:.3}",
                    a.residual, b.residual, cf.residual
                ),
            )
        }
        (a, b, cf) => outcome(
            false,
            format!("fit failed: {:?} {:?} {:?}", a.err(), b.err(), cf.err()),
        ),
    }
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut bad = Vec::new();
    for n in 2..=12 {
        let t = toeplitz_truncation(&TaylorSymbol::monomial(1, n), n).unwrap();
        let d = commutant_basis(&t, RANK_TOL).map(|b| b.dim()).unwrap_or(0);
        if d != n {
            ok = false;
            bad.push(format!("shift N={n}: {d}"));
        }
    }
    let s2 = toeplitz_truncation(&TaylorSymbol::monomial(2, 4), 4).unwrap();
    let d2 = commutant_basis(&s2, RANK_TOL).map(|b| b.dim()).unwrap_or(0);
    ok &= d2 == 8;

    let mut family: Vec<TruncatedOperator> = Vec::new();
    for n in [2, 4, 6, 8] {
        family.push(toeplitz_truncation(&TaylorSymbol::monomial(1, n), n).unwrap());
    }
    for (k, n) in [(2, 4), (2, 8), (3, 9)] {
        family.push(toeplitz_truncation(&TaylorSymbol::monomial(k, n), n).unwrap());
    }
    family.push(TruncatedOperator::identity(3));
    family.push(toeplitz_truncation(&sym("(z+0.5)^2", 16), 8).unwrap());
    family.push(toeplitz_truncation(&sym("z+0.5", 16), 6).unwrap());
    family.push(toeplitz_truncation(&sym("z^2+z^4", 16), 8).unwrap());
    let mut matched = 0;
    for t in &family {
        let pa = polynomial_algebra_dim(t);
        let dc = commutant_basis(t, RANK_TOL)
            .and_then(|c| double_commutant_basis(&c.basis, RANK_TOL))
            .map(|d| d.dim());
        if dc.as_ref().ok() == Some(&pa) {
            matched += 1;
        } else {
            ok = false;
            bad.push(format!("{}: double {dc:?} vs algebra {pa}", t.label));
        }
    }
    outcome(
        ok,
        format!(
            "shift N=2..12 ok={}, shift^2 N=4: {d2}, double commutant = algebra in {matched}/{} {}",
            bad.iter().all(|b| !b.starts_with("shift")),
            family.len(),
            bad.join("; ")
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xfe3e7);
    let mut bound_ok = 0;
    for _ in 0..200 {
        let deg = rng.gen_range(1..=12usize);
        let coeffs: Vec<Complex64> = (0..=deg)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let h = TaylorSymbol::from_coeffs(&coeffs, deg.max(1), "p");
        let n = rng.gen_range(0..=2 * deg);
        if fejer_supnorm_check(&h, n).ok {
            bound_ok += 1;
        }
    }
    let order = 1024;
    let geo: Vec<f64> = (0..=order).map(|k| 0.5f64.powi(k as i32)).collect();
    let h = TaylorSymbol::from_real(&geo, order, "geom");
    let one = TaylorSymbol::constant(c(1.0, 0.0), 1);
    let ns: Vec<usize> = (2..=9).map(|p| 1usize << p).collect();
    let gaps: Vec<f64> = ns
        .iter()
        .map(|&n| fejer_wot_gap(&h, n, c(0.5, 0.0), &one).unwrap_or(f64::INFINITY))
        .collect();
    let monotone = gaps.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    let last = *gaps.last().unwrap();
    outcome(
        bound_ok == 200 && monotone && last < 1e-10,
        format!(
            "sup-norm bound {bound_ok}/200; gap monotone={monotone}; gap(512) = {last:.3e} (threshold 1e-10)"
        ),
    )
}

fn criterion_9() -> Outcome {
    let z = TaylorSymbol::identity(64);
    let a = c(0.5, 0.0);
    let rs: Vec<f64> = (8..=32)
        .map(|n| adjoint_eigen_residual(&z, a, n).unwrap())
        .collect();
    let ratios: Vec<f64> = rs.windows(2).map(|w| w[1] / w[0]).collect();
    let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().copied().fold(0.0, f64::max);
    outcome(
        lo >= 0.45 && hi <= 0.55,
        format!("ratio range [{lo:.4}, {hi:.4}] over N = 8..32"),
    )
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3a1);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let d = rng.gen_range(1..=5usize);
        let zeros: Vec<Complex64> = (0..d)
            .map(|_| Complex64::from_polar(rng.gen_range(0.0..=0.9), rng.gen_range(0.0..2.0 * PI)))
            .collect();
        let b = BlaschkeProduct::from_zeros(zeros).unwrap();
        let e = malmquist_basis(&b, 400).unwrap();
        worst = worst.max(gram_residual(&e));
    }
    outcome(
        worst <= 1e-9,
        format!("max Gram residual {worst:.3e} over 20 products"),
    )
}

fn criterion_11() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_hardylab");
    let run = |name: &str| {
        Command::new(exe)
            .args(["classify", "--example", name, "--format", "json"])
            .output()
            .map(|o| (o.status.code(), o.stdout))
    };
    let mut identical = 0;
    let mut failures = Vec::new();
    for name in registry::SUITE {
        match (run(name), run(name)) {
            (Ok((Some(0), a)), Ok((Some(0), b))) if a == b && !a.is_empty() => identical += 1,
            (a, _) => failures.push(format!("{name}: {:?}", a.map(|x| x.0))),
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{identical}/{} suite members byte-identical {}",
            registry::SUITE.len(),
            failures.join("; ")
        ),
    )
}

fn main() {
    let criteria: &[(u32, &str, fn() -> Outcome)] = &[
        (1, "cardioid case study", criterion_1),
        (2, "power symbols", criterion_2),
        (3, "half-shift", criterion_3),
        (4, "Jordan detector", criterion_4),
        (5, "BDU consistency", criterion_5),
        (6, "z^6 factorizations", criterion_6),
        (7, "commutant linear algebra", criterion_7),
        (8, "Fejer numerics", criterion_8),
        (9, "adjoint eigenrelation", criterion_9),
        (10, "Malmquist orthonormality", criterion_10),
        (11, "determinism", criterion_11),
    ];
    let mut blocking = 0;
    let mut passed = 0;
    for (id, name, f) in criteria {
        let o = f();
        let known = KNOWN_UNATTAINABLE.contains(id);
        let tag = match (o.pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("{tag} criterion {id:>2} {name}: {}", o.detail);
        if o.pass {
            passed += 1;
        } else if !known {
            blocking += 1;
        }
    }
    println!("{passed}/{} criteria passed", criteria.len());
    if blocking > 0 {
        std::process::exit(1);
    }
}
