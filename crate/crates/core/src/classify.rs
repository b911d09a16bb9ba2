//! Rule engine turning geometric and algebraic measurements into verdicts on
//! the minimal commutant property (MCP) and the double commutant property (DCP).
//!
//! Sampling can certify negative facts (a collision, two different windings)
//! but only suggest positive ones, so every conclusion carries a confidence.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complex_json::to_value as cval;
use crate::curve::{
    is_winding_constant, jordan_test, minimal_winding, single_cover_probe, univalence_probe_with,
    winding_number, winding_profile, BoundaryCurve, SingleCover, Univalence, WindingProfile,
};
use crate::error::{Error, Result};
use crate::factor::{bdu_crosscheck_with, bdu_factor};
use crate::opspace::{density_witness, DensityOutcome};
use crate::symbol::{SymbolExpr, TaylorSymbol, NOISE_FLOOR};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Confidence {
    Certified,
    Heuristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Mcp,
    Dcp,
}

/// What a fired rule concludes, if anything.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub property: Property,
    pub answer: Answer,
    pub confidence: Confidence,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RuleFiring {
    pub id: String,
    pub cite: String,
    pub evidence: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub concludes: Option<Conclusion>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfidenceReport {
    pub mcp: Option<Confidence>,
    pub dcp: Option<Confidence>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub symbol: String,
    pub mcp: Answer,
    pub dcp: Answer,
    pub rules: Vec<RuleFiring>,
    pub confidence: ConfidenceReport,
    /// Measurements that failed, or conflicts between certified rules.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifyConfig {
    /// Polar grid size of the winding profile.
    pub grid: usize,
    /// Boundary nodes for the Jordan test.
    pub jordan_nodes: usize,
    /// Truncation `N` of the density witness.
    pub witness_dim: usize,
    /// Krylov depth `m` of the density witness.
    pub witness_depth: usize,
    /// Extra image points whose windings are reported alongside the profile.
    pub probes: Vec<Complex64>,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            grid: 24,
            jordan_nodes: 4096,
            witness_dim: 16,
            witness_depth: 6,
            probes: Vec::new(),
        }
    }
}

const INNER_NODES: usize = 4096;
const INNER_TOL: f64 = 1e-9;

mod cite {
    pub const R1: &str = "univalence is necessary for the minimal commutant property";
    pub const R2: &str =
        "different winding numbers of the boundary curve rule out the double commutant property";
    pub const R3: &str =
        "a single-covered region of a non-univalent symbol rules out the double commutant property (Deddens-Wong)";
    pub const R4: &str =
        "powers of z and inner functions have the double commutant property (Shields-Wallen, Thomson-Cowen)";
    pub const R5: &str = "Walsh: polynomials are dense over a Jordan domain, so a univalent symbol has a minimal commutant";
    pub const R6: &str =
        "Baker-Deddens-Ullman factorization through z^k with univalent Jordan factor";
    pub const R7: &str = "minimal winding number property k(phi) = b(phi)";
    pub const C1: &str = "a minimal commutant is trivially a double commutant";
}

fn yes(property: Property, confidence: Confidence) -> Option<Conclusion> {
    Some(Conclusion {
        property,
        answer: Answer::Yes,
        confidence,
    })
}

fn no(property: Property) -> Option<Conclusion> {
    Some(Conclusion {
        property,
        answer: Answer::No,
        confidence: Confidence::Certified,
    })
}

/// `Some(n)` when `φ = z^n` up to the noise floor.
fn monomial_power(s: &TaylorSymbol) -> Option<usize> {
    let mut hit = None;
    for (k, c) in s.coeffs().iter().enumerate() {
        if c.norm() > NOISE_FLOOR {
            if hit.is_some() || k == 0 || (c - 1.0).norm() > NOISE_FLOOR {
                return None;
            }
            hit = Some(k);
        }
    }
    hit
}

/// `Some(order)` when `|φ| = 1` on the boundary nodes, the order being the
/// winding around 0.
fn inner_order(s: &TaylorSymbol) -> Result<Option<(usize, f64)>> {
    let nodes = INNER_NODES.max(2 * s.order()).next_power_of_two();
    let dev = s
        .eval_circle(nodes, 1.0)?
        .iter()
        .map(|v| (v.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    if dev > INNER_TOL {
        return Ok(None);
    }
    let curve = BoundaryCurve::from_symbol(s, nodes)?;
    let n = winding_number(&curve, Complex64::new(0.0, 0.0))?;
    Ok((n >= 1).then_some((n as usize, dev)))
}

fn entry_json(a: Complex64, w: Complex64, n: i64) -> Value {
    json!({"a": cval(a), "w": cval(w), "n": n})
}

fn poly_string(s: &TaylorSymbol) -> String {
    SymbolExpr::polynomial(s.coeffs(), NOISE_FLOOR).to_string()
}

/// Univalence probe, followed by the Jordan test when univalence is plausible.
fn univalent_jordan(
    s: &TaylorSymbol,
    p: &WindingProfile,
    cfg: &ClassifyConfig,
) -> Result<(Univalence, Option<usize>)> {
    let u = univalence_probe_with(s, p, cfg.grid);
    if u.is_certified_non_univalent() {
        return Ok((u, None));
    }
    let nodes = cfg.jordan_nodes.max(2 * s.order()).next_power_of_two();
    let crossings = jordan_test(&BoundaryCurve::from_symbol(s, nodes)?).len();
    Ok((u, Some(crossings)))
}

struct Engine<'a> {
    s: &'a TaylorSymbol,
    cfg: &'a ClassifyConfig,
    rules: Vec<RuleFiring>,
    diagnostics: Vec<String>,
}

impl Engine<'_> {
    fn fire(&mut self, id: &str, cite: &str, evidence: Value, concludes: Option<Conclusion>) {
        self.rules.push(RuleFiring {
            id: id.into(),
            cite: cite.into(),
            evidence,
            concludes,
        });
    }

    fn note(&mut self, what: &str, e: &Error) {
        self.diagnostics.push(format!("{what}: {e}"));
    }

    fn run(mut self) -> Verdict {
        let s = self.s;
        let cfg = self.cfg;
        let profile = match winding_profile(s, cfg.grid) {
            Ok(p) => Some(p),
            Err(e) => {
                self.note("winding profile", &e);
                None
            }
        };

        // R1
        let univalence = profile
            .as_ref()
            .map(|p| univalence_probe_with(s, p, cfg.grid));
        let r1 = matches!(univalence, Some(Univalence::CertifiedNonUnivalent { .. }));
        if let Some(Univalence::CertifiedNonUnivalent { a, b, w }) = univalence {
            self.fire(
                "R1",
                cite::R1,
                json!({"a": cval(a), "b": cval(b), "w": cval(w), "separation": (a - b).norm()}),
                no(Property::Mcp),
            );
        }

        // R2
        let probes: Vec<Value> = cfg
            .probes
            .iter()
            .map(|&w| {
                let curve = BoundaryCurve::with_default_nodes(s);
                match winding_number(&curve, w) {
                    Ok(n) => json!({"w": cval(w), "n": n}),
                    Err(e) => json!({"w": cval(w), "error": e.to_string()}),
                }
            })
            .collect();
        if let Some(p) = &profile {
            if let (false, Some((hi, lo))) = is_winding_constant(p) {
                self.fire(
                    "R2",
                    cite::R2,
                    json!({
                        "high": entry_json(hi.a, hi.w, hi.n),
                        "low": entry_json(lo.a, lo.w, lo.n),
                        "windings": p.distinct_windings(),
                        "probes": probes,
                    }),
                    no(Property::Dcp),
                );
            }
        }

        // R3
        if let (Some(p), true) = (&profile, r1) {
            if let SingleCover::SingleCovers { a, w } = single_cover_probe(s, p) {
                let witness = match density_witness(s, cfg.witness_dim, cfg.witness_depth) {
                    Ok(DensityOutcome::Witness(wit)) => json!({
                        "n": wit.n,
                        "depth": wit.depth,
                        "rank": wit.rank,
                        "max_pairing": wit.max_pairing,
                        "separating": wit.separating,
                        "pairing": wit.pairing,
                        "f0": crate::complex_json::vec_to_value(&wit.f0),
                    }),
                    Ok(other) => serde_json::to_value(other).unwrap_or(Value::Null),
                    Err(e) => json!({"error": e.to_string()}),
                };
                self.fire(
                    "R3",
                    cite::R3,
                    json!({"a": cval(a), "w": cval(w), "density_witness": witness}),
                    no(Property::Dcp),
                );
            }
        }

        // R4
        let inner = match monomial_power(s) {
            Some(n) => Some((n, 0.0, true)),
            None => match inner_order(s) {
                Ok(x) => x.map(|(n, dev)| (n, dev, false)),
                Err(e) => {
                    self.note("inner test", &e);
                    None
                }
            },
        };
        if let Some((order, dev, monomial)) = inner {
            let ev =
                json!({"order": order, "monomial": monomial, "boundary_modulus_deviation": dev});
            self.fire(
                "R4",
                cite::R4,
                ev.clone(),
                yes(Property::Dcp, Confidence::Certified),
            );
            if order == 1 {
                self.fire(
                    "R4",
                    cite::R4,
                    ev,
                    yes(Property::Mcp, Confidence::Certified),
                );
            } else if !r1 {
                self.fire("R4", cite::R4, ev, no(Property::Mcp));
            }
        }

        // R5
        let mut plausible = false;
        if let Some(p) = &profile {
            match univalent_jordan(s, p, cfg) {
                Ok((u, crossings)) => {
                    plausible = !u.is_certified_non_univalent();
                    if crossings == Some(0) {
                        self.fire(
                            "R5",
                            cite::R5,
                            json!({"univalence": "plausible", "crossings": 0, "nodes": cfg.jordan_nodes}),
                            yes(Property::Mcp, Confidence::Heuristic),
                        );
                    }
                }
                Err(e) => self.note("Jordan test", &e),
            }
        }

        // R6 and R7
        let mut r7: Option<Value> = None;
        match bdu_factor(s) {
            Ok(f) => {
                let cross = bdu_crosscheck_with(s, cfg.grid);
                let h_prof = winding_profile(&f.h, cfg.grid);
                match (&cross, &h_prof) {
                    (Ok(x), Ok(hp)) => {
                        let h_ok = univalent_jordan(&f.h, hp, cfg);
                        if let Ok((u, crossings)) = &h_ok {
                            if x.agree && !u.is_certified_non_univalent() && *crossings == Some(0) {
                                self.fire(
                                    "R6",
                                    cite::R6,
                                    json!({"k": f.k, "h": poly_string(&f.h), "residual": f.residual,
                                           "k_gcd": x.k_gcd, "k_wind": x.k_wind}),
                                    yes(Property::Dcp, Confidence::Heuristic),
                                );
                            }
                        }
                        if let Err(e) = h_ok {
                            self.note("factor Jordan test", &e);
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => self.note("BDU cross-check", e),
                }
                if let Some(p) = &profile {
                    if let Ok(kphi) = minimal_winding(p) {
                        r7 = Some(
                            json!({"k_phi": kphi, "b": f.k, "h": poly_string(&f.h), "equal": kphi == f.k as i64}),
                        );
                    }
                }
            }
            Err(e) => self.note("BDU factor", &e),
        }
        if let Some(ev) = r7 {
            self.fire("R7", cite::R7, ev, None);
        }

        let (mcp, mcp_conf) = self.aggregate(Property::Mcp);
        if mcp == Answer::Yes && plausible {
            let conf = mcp_conf.unwrap_or(Confidence::Heuristic);
            self.fire(
                "C1",
                cite::C1,
                json!({"mcp": "Yes", "univalence": "plausible"}),
                yes(Property::Dcp, conf),
            );
        }
        let (dcp, dcp_conf) = self.aggregate(Property::Dcp);
        Verdict {
            symbol: s.label().to_string(),
            mcp,
            dcp,
            rules: self.rules,
            confidence: ConfidenceReport {
                mcp: mcp_conf,
                dcp: dcp_conf,
            },
            diagnostics: self.diagnostics,
        }
    }

    fn aggregate(&mut self, property: Property) -> (Answer, Option<Confidence>) {
        let found: Vec<Conclusion> = self
            .rules
            .iter()
            .filter_map(|r| r.concludes)
            .filter(|c| c.property == property)
            .collect();
        let certified = |a: Answer| {
            found
                .iter()
                .any(|c| c.answer == a && c.confidence == Confidence::Certified)
        };
        let heuristic = |a: Answer| found.iter().any(|c| c.answer == a);
        let name = match property {
            Property::Mcp => "mcp",
            Property::Dcp => "dcp",
        };
        if certified(Answer::No) && certified(Answer::Yes) {
            self.diagnostics.push(format!(
                "{name}: certified rules disagree; see attached evidence"
            ));
            return (Answer::Unknown, None);
        }
        if certified(Answer::No) {
            (Answer::No, Some(Confidence::Certified))
        } else if certified(Answer::Yes) {
            (Answer::Yes, Some(Confidence::Certified))
        } else if heuristic(Answer::Yes) {
            (Answer::Yes, Some(Confidence::Heuristic))
        } else {
            (Answer::Unknown, None)
        }
    }
}

/// Applies rules R1 to R7 to `s`.
///
/// Measurement failures never become verdicts: they are recorded in
/// `diagnostics` and leave the affected property `Unknown`.
pub fn classify(s: &TaylorSymbol, cfg: &ClassifyConfig) -> Result<Verdict> {
    if s.is_constant() {
        return Err(Error::ConstantSymbol);
    }
    Ok(Engine {
        s,
        cfg,
        rules: Vec::new(),
        diagnostics: Vec::new(),
    }
    .run())
}

fn answer_str(a: Answer, c: Option<Confidence>) -> String {
    match c {
        Some(c) => format!("{a:?} ({c:?})"),
        None => format!("{a:?}"),
    }
}

pub(crate) fn render_value(v: &Value) -> String {
    match v {
        Value::Array(xs) if xs.len() == 2 && xs.iter().all(Value::is_f64) => {
            let re = xs[0].as_f64().unwrap_or(0.0);
            let im = xs[1].as_f64().unwrap_or(0.0);
            if im == 0.0 {
                format!("{re}")
            } else {
                format!("{re}{}{}i", if im < 0.0 { '-' } else { '+' }, im.abs())
            }
        }
        Value::Array(xs) => format!(
            "[{}]",
            xs.iter().map(render_value).collect::<Vec<_>>().join(", ")
        ),
        Value::Object(m) => format!(
            "{{{}}}",
            m.iter()
                .map(|(k, v)| format!("{k}: {}", render_value(v)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Human-readable report of a verdict.
pub fn explain(v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "symbol: {}", v.symbol);
    let _ = writeln!(
        out,
        "minimal commutant: {}",
        answer_str(v.mcp, v.confidence.mcp)
    );
    let _ = writeln!(
        out,
        "double commutant:  {}",
        answer_str(v.dcp, v.confidence.dcp)
    );
    for r in &v.rules {
        let head = match r.concludes {
            Some(c) => format!("{:?} {:?} {:?}", c.confidence, c.answer, c.property).to_uppercase(),
            None => "REPORT".into(),
        };
        let _ = writeln!(out, "{} [{}] {}", r.id, head, r.cite);
        if let Value::Object(m) = &r.evidence {
            for (k, val) in m {
                if k == "density_witness" {
                    if let Value::Object(w) = val {
                        for (wk, wv) in w {
                            if wk != "f0" {
                                let _ = writeln!(out, "    witness.{wk} = {}", render_value(wv));
                            }
                        }
                        continue;
                    }
                }
                let _ = writeln!(out, "    {k} = {}", render_value(val));
            }
        }
    }
    for d in &v.diagnostics {
        let _ = writeln!(out, "note: {d}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::{lower, parse_symbol, DEFAULT_ORDER};

    fn sym(text: &str) -> TaylorSymbol {
        lower(&parse_symbol(text).unwrap(), 64)
            .unwrap()
            .with_label(text)
    }

    fn fired(v: &Verdict, id: &str) -> bool {
        v.rules.iter().any(|r| r.id == id)
    }

    #[test]
    fn cardioid() {
        let cfg = ClassifyConfig {
            probes: vec![Complex64::new(0.0, 0.0), Complex64::new(1.21, 0.0)],
            ..Default::default()
        };
        let v = classify(&sym("(z+0.5)^2"), &cfg).unwrap();
        assert_eq!((v.mcp, v.dcp), (Answer::No, Answer::No));
        assert_eq!(v.confidence.mcp, Some(Confidence::Certified));
        assert_eq!(v.confidence.dcp, Some(Confidence::Certified));
        assert!(fired(&v, "R1") && fired(&v, "R2") && fired(&v, "R3"));
        let r2 = v.rules.iter().find(|r| r.id == "R2").unwrap();
        assert_eq!(r2.evidence["probes"][0]["n"], 2);
        assert_eq!(r2.evidence["probes"][1]["n"], 1);
        let r3 = v.rules.iter().find(|r| r.id == "R3").unwrap();
        assert!(
            r3.evidence["density_witness"]["max_pairing"]
                .as_f64()
                .unwrap()
                <= 1e-8
        );
        let text = explain(&v);
        assert!(text.contains("w = 1.21") && text.contains("witness.pairing"));
    }

    #[test]
    fn half_shift() {
        let v = classify(&sym("z+0.5"), &ClassifyConfig::default()).unwrap();
        assert_eq!(v.mcp, Answer::Yes);
        assert_eq!(v.confidence.mcp, Some(Confidence::Heuristic));
        assert_eq!(v.dcp, Answer::Yes);
        assert!(fired(&v, "R5") && fired(&v, "R6"));
    }

    #[test]
    fn powers() {
        for n in 2..=4 {
            let v = classify(&sym(&format!("z^{n}")), &ClassifyConfig::default()).unwrap();
            assert_eq!((v.mcp, v.dcp), (Answer::No, Answer::Yes), "z^{n}");
            assert_eq!(v.confidence.dcp, Some(Confidence::Certified));
        }
        let v = classify(&sym("z^6"), &ClassifyConfig::default()).unwrap();
        let text = explain(&v);
        assert!(text.contains("k = 6") && text.contains("h = z\n"), "{text}");
    }

    #[test]
    fn identity_and_blaschke() {
        let v = classify(&sym("z"), &ClassifyConfig::default()).unwrap();
        assert_eq!((v.mcp, v.dcp), (Answer::Yes, Answer::Yes));
        assert!(explain(&v).contains("Walsh"));
        let b = lower(&parse_symbol("blaschke[0.5, -0.5]").unwrap(), DEFAULT_ORDER).unwrap();
        let v = classify(&b, &ClassifyConfig::default()).unwrap();
        assert_eq!((v.mcp, v.dcp), (Answer::No, Answer::Yes));
        let m = lower(&parse_symbol("blaschke[0.3]").unwrap(), DEFAULT_ORDER).unwrap();
        let v = classify(&m, &ClassifyConfig::default()).unwrap();
        assert_eq!((v.mcp, v.dcp), (Answer::Yes, Answer::Yes));
        assert_eq!(v.confidence.mcp, Some(Confidence::Certified));
    }

    #[test]
    fn constant_is_rejected() {
        assert!(matches!(
            classify(&sym("0.5"), &ClassifyConfig::default()),
            Err(Error::ConstantSymbol)
        ));
    }

    #[test]
    fn deterministic() {
        let a = serde_json::to_string(
            &classify(&sym("(z+0.5)^2"), &ClassifyConfig::default()).unwrap(),
        )
        .unwrap();
        let b = serde_json::to_string(
            &classify(&sym("(z+0.5)^2"), &ClassifyConfig::default()).unwrap(),
        )
        .unwrap();
        assert_eq!(a, b);
    }
}
