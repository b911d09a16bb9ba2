//! Classifies the cardioid symbol `(z + 1/2)^2` and prints the rule trace.

use hardylab::classify::{classify, explain, ClassifyConfig};
use hardylab::symbol::{lower, parse_symbol, DEFAULT_ORDER};
use hardylab::Complex64;

fn main() -> hardylab::Result<()> {
    let s = lower(&parse_symbol("(z+0.5)^2")?, DEFAULT_ORDER)?.with_label("(z+0.5)^2");
    let cfg = ClassifyConfig {
        probes: vec![Complex64::new(0.0, 0.0), Complex64::new(1.21, 0.0)],
        ..ClassifyConfig::default()
    };
    let verdict = classify(&s, &cfg)?;
    print!("{}", explain(&verdict));
    Ok(())
}
