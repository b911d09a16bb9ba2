use std::fmt;

use num_complex::Complex64;

use super::BlaschkeProduct;

/// Abstract syntax of the symbol DSL.
#[derive(Debug, Clone, PartialEq)]
pub enum SymbolExpr {
    Var,
    Lit(Complex64),
    Add(Box<SymbolExpr>, Box<SymbolExpr>),
    Sub(Box<SymbolExpr>, Box<SymbolExpr>),
    Mul(Box<SymbolExpr>, Box<SymbolExpr>),
    Pow(Box<SymbolExpr>, u32),
    /// `compose(outer, inner)` is `outer ∘ inner`.
    Compose(Box<SymbolExpr>, Box<SymbolExpr>),
    Blaschke(Vec<Complex64>),
}

impl SymbolExpr {
    pub fn lit(re: f64, im: f64) -> Self {
        SymbolExpr::Lit(Complex64::new(re, im))
    }

    pub fn add(a: SymbolExpr, b: SymbolExpr) -> Self {
        SymbolExpr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: SymbolExpr, b: SymbolExpr) -> Self {
        SymbolExpr::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: SymbolExpr, b: SymbolExpr) -> Self {
        SymbolExpr::Mul(Box::new(a), Box::new(b))
    }

    pub fn pow(a: SymbolExpr, n: u32) -> Self {
        SymbolExpr::Pow(Box::new(a), n)
    }

    pub fn compose(outer: SymbolExpr, inner: SymbolExpr) -> Self {
        SymbolExpr::Compose(Box::new(outer), Box::new(inner))
    }

    /// `Σ c_k z^k` over the coefficients above `floor`; unit coefficients are omitted.
    pub fn polynomial(coeffs: &[Complex64], floor: f64) -> Self {
        let one = Complex64::new(1.0, 0.0);
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > floor)
            .map(|(k, &c)| {
                let mono = match k {
                    0 => None,
                    1 => Some(SymbolExpr::Var),
                    _ => Some(SymbolExpr::pow(SymbolExpr::Var, k as u32)),
                };
                match mono {
                    None => SymbolExpr::Lit(c),
                    Some(m) if c == one => m,
                    Some(m) => SymbolExpr::mul(SymbolExpr::Lit(c), m),
                }
            });
        terms
            .reduce(SymbolExpr::add)
            .unwrap_or(SymbolExpr::lit(0.0, 0.0))
    }

    /// Direct recursive evaluation of the expression at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            SymbolExpr::Var => z,
            SymbolExpr::Lit(c) => *c,
            SymbolExpr::Add(a, b) => a.eval(z) + b.eval(z),
            SymbolExpr::Sub(a, b) => a.eval(z) - b.eval(z),
            SymbolExpr::Mul(a, b) => a.eval(z) * b.eval(z),
            SymbolExpr::Pow(a, n) => a.eval(z).powu(*n),
            SymbolExpr::Compose(outer, inner) => outer.eval(inner.eval(z)),
            SymbolExpr::Blaschke(zeros) => blaschke_eval(zeros, z),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            SymbolExpr::Add(..) | SymbolExpr::Sub(..) => 1,
            SymbolExpr::Mul(..) => 2,
            SymbolExpr::Pow(..) => 3,
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        if self.precedence() < min_prec {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            SymbolExpr::Var => f.write_str("z"),
            SymbolExpr::Lit(c) => write_atom_literal(f, *c),
            SymbolExpr::Add(a, b) | SymbolExpr::Sub(a, b) => {
                let op = if matches!(self, SymbolExpr::Add(..)) {
                    "+"
                } else {
                    "-"
                };
                // `(2+3i)` would read back as one literal, so a bare literal on the
                // left of a literal gets its own parentheses.
                if matches!(**a, SymbolExpr::Lit(_)) && matches!(**b, SymbolExpr::Lit(_)) {
                    f.write_str("(")?;
                    a.write_at(f, 1)?;
                    f.write_str(")")?;
                } else {
                    a.write_at(f, 1)?;
                }
                f.write_str(op)?;
                b.write_at(f, 2)
            }
            SymbolExpr::Mul(a, b) => {
                a.write_at(f, 2)?;
                f.write_str("*")?;
                b.write_at(f, 3)
            }
            SymbolExpr::Pow(a, n) => {
                a.write_at(f, 4)?;
                write!(f, "^{n}")
            }
            SymbolExpr::Compose(outer, inner) => {
                f.write_str("compose(")?;
                outer.write_at(f, 0)?;
                f.write_str(", ")?;
                inner.write_at(f, 0)?;
                f.write_str(")")
            }
            SymbolExpr::Blaschke(zeros) => {
                f.write_str("blaschke[")?;
                for (i, a) in zeros.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write_signed_literal(f, *a)?;
                }
                f.write_str("]")
            }
        }
    }
}

pub(super) fn blaschke_eval(zeros: &[Complex64], z: Complex64) -> Complex64 {
    BlaschkeProduct::from_zeros(zeros.to_vec())
        .map(|b| b.eval(z))
        .unwrap_or_else(|_| Complex64::new(f64::NAN, f64::NAN))
}

/// Unsigned literals print bare; anything else is parenthesized.
fn write_atom_literal(f: &mut fmt::Formatter<'_>, c: Complex64) -> fmt::Result {
    let re_zero = c.re == 0.0 && !c.re.is_sign_negative();
    let im_zero = c.im == 0.0;
    if im_zero && !c.re.is_sign_negative() {
        write!(f, "{}", c.re)
    } else if re_zero && !c.im.is_sign_negative() {
        write!(f, "{}i", c.im)
    } else {
        f.write_str("(")?;
        write_signed_literal(f, c)?;
        f.write_str(")")
    }
}

fn write_signed_literal(f: &mut fmt::Formatter<'_>, c: Complex64) -> fmt::Result {
    if c.im == 0.0 {
        write!(f, "{}", c.re)
    } else if c.re == 0.0 && !c.re.is_sign_negative() {
        write!(f, "{}i", c.im)
    } else {
        let sign = if c.im.is_sign_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", c.re, sign, c.im.abs())
    }
}

impl fmt::Display for SymbolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
