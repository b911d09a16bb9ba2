//! Named example symbols.

use num_complex::Complex64;

/// A registry entry resolved to DSL text plus reference image points.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedExample {
    pub name: String,
    pub dsl: String,
    /// Image points whose windings are reported by `classify`.
    pub probes: Vec<Complex64>,
}

/// `(name, description)` for the `examples` listing.
pub const LISTING: &[(&str, &str)] = &[
    ("identity", "z"),
    ("halfshift", "z+0.5"),
    ("cardioid", "(z+0.5)^2"),
    ("power:n", "z^n for n >= 1"),
    (
        "blaschke:[...]",
        "finite Blaschke product with the listed zeros, e.g. blaschke:[0.5, -0.5]",
    ),
    ("zsquare-plus-z4", "z^2+z^4"),
];

/// Names making up the suite used by determinism checks.
pub const SUITE: &[&str] = &[
    "identity",
    "halfshift",
    "cardioid",
    "power:2",
    "power:3",
    "power:4",
    "power:6",
    "blaschke:[0.5, -0.5]",
    "zsquare-plus-z4",
];

pub fn resolve(name: &str) -> Option<NamedExample> {
    let c = |re| Complex64::new(re, 0.0);
    let (dsl, probes) = match name {
        "identity" => ("z".to_string(), vec![]),
        "halfshift" => ("z+0.5".to_string(), vec![]),
        "cardioid" => ("(z+0.5)^2".to_string(), vec![c(0.0), c(1.21)]),
        "zsquare-plus-z4" => ("z^2+z^4".to_string(), vec![]),
        _ => {
            if let Some(n) = name.strip_prefix("power:") {
                let n: u32 = n.parse().ok().filter(|&n| n >= 1)?;
                (
                    if n == 1 {
                        "z".to_string()
                    } else {
                        format!("z^{n}")
                    },
                    vec![],
                )
            } else if let Some(list) = name.strip_prefix("blaschke:") {
                let inner = list.strip_prefix('[')?.strip_suffix(']')?;
                (format!("blaschke[{inner}]"), vec![])
            } else {
                return None;
            }
        }
    };
    Some(NamedExample {
        name: name.to_string(),
        dsl,
        probes,
    })
}
