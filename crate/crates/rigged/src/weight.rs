//! Formal integer weights: combinations of fundamental weights and simple roots.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::cartan::Label;

/// A weight written as `sum_a lambda[a] * La_a + sum_a alpha[a] * al_a`.
///
/// Both parts are stored sparsely with zero coefficients omitted, so equality
/// of the stored maps is equality of weights in the free presentation. Two
/// weights with the same fundamental part are equal as lattice elements iff
/// their root parts agree, which is the comparison used throughout.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Weight {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lambda: BTreeMap<Label, i64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub alpha: BTreeMap<Label, i64>,
}

impl Weight {
    pub fn zero() -> Self {
        Weight::default()
    }

    pub fn fundamental(a: Label) -> Self {
        let mut w = Weight::zero();
        w.lambda.insert(a, 1);
        w
    }

    pub fn simple_root(a: Label) -> Self {
        let mut w = Weight::zero();
        w.alpha.insert(a, 1);
        w
    }

    pub fn from_lambda(coeffs: impl IntoIterator<Item = (Label, i64)>) -> Self {
        let mut w = Weight::zero();
        for (a, c) in coeffs {
            w.add_lambda(a, c);
        }
        w
    }

    pub fn from_alpha(coeffs: impl IntoIterator<Item = (Label, i64)>) -> Self {
        let mut w = Weight::zero();
        for (a, c) in coeffs {
            w.add_alpha(a, c);
        }
        w
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_empty() && self.alpha.is_empty()
    }

    pub fn lambda_coeff(&self, a: Label) -> i64 {
        self.lambda.get(&a).copied().unwrap_or(0)
    }

    pub fn alpha_coeff(&self, a: Label) -> i64 {
        self.alpha.get(&a).copied().unwrap_or(0)
    }

    pub fn add_lambda(&mut self, a: Label, c: i64) {
        let entry = self.lambda.entry(a).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.lambda.remove(&a);
        }
    }

    pub fn add_alpha(&mut self, a: Label, c: i64) {
        let entry = self.alpha.entry(a).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.alpha.remove(&a);
        }
    }

    /// True when the root part is absent (a pure fundamental-weight combination).
    pub fn is_pure_lambda(&self) -> bool {
        self.alpha.is_empty()
    }

    /// True when the fundamental part is absent and all root coefficients are <= 0.
    pub fn in_negative_root_lattice(&self) -> bool {
        self.lambda.is_empty() && self.alpha.values().all(|&c| c <= 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        let mut w = Weight::zero();
        for (&a, &c) in &self.lambda {
            w.add_lambda(a, k * c);
        }
        for (&a, &c) in &self.alpha {
            w.add_alpha(a, k * c);
        }
        w
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        for (&a, &c) in &rhs.lambda {
            out.add_lambda(a, c);
        }
        for (&a, &c) in &rhs.alpha {
            out.add_alpha(a, c);
        }
        out
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self + &(-rhs.clone())
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut write_term = |f: &mut fmt::Formatter<'_>, coeff: i64, sym: String| -> fmt::Result {
            if coeff == 0 {
                return Ok(());
            }
            let mag = coeff.abs();
            if first {
                first = false;
                if coeff < 0 {
                    write!(f, "-")?;
                }
            } else if coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag == 1 {
                write!(f, "{sym}")
            } else {
                write!(f, "{mag}*{sym}")
            }
        };
        for (&a, &c) in &self.lambda {
            write_term(f, c, format!("La[{a}]"))?;
        }
        for (&a, &c) in &self.alpha {
            write_term(f, c, format!("alpha[{a}]"))?;
        }
        Ok(())
    }
}

/// Parses expressions like `La[0]+2*La[3]`, `-7*Lambda[0] - 4*Lambda[1]`, or
/// `La[1]-alpha[2]`. Accepts `La`, `Lambda`, and `alpha` as symbols.
pub fn parse_weight(input: &str) -> Result<Weight, crate::Error> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() || s == "0" {
        return Ok(Weight::zero());
    }
    let bad = |msg: &str| crate::Error::Parse(format!("weight `{input}`: {msg}"));
    let mut w = Weight::zero();
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('+') {
            if first {
                return Err(bad("leading '+'"));
            }
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if !first {
            return Err(bad("expected '+' or '-' between terms"));
        }
        first = false;
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        let mut coeff = 1i64;
        if !digits.is_empty() {
            coeff = digits.parse().map_err(|_| bad("bad coefficient"))?;
            rest = &rest[digits.len()..];
            rest = rest.strip_prefix('*').unwrap_or(rest);
        }
        let (is_lambda, r) = if let Some(r) = rest.strip_prefix("Lambda") {
            (true, r)
        } else if let Some(r) = rest.strip_prefix("La") {
            (true, r)
        } else if let Some(r) = rest.strip_prefix("alpha") {
            (false, r)
        } else {
            return Err(bad("expected La[..], Lambda[..], or alpha[..]"));
        };
        let r = r.strip_prefix('[').ok_or_else(|| bad("expected '['"))?;
        let close = r.find(']').ok_or_else(|| bad("expected ']'"))?;
        let label: Label = r[..close].parse().map_err(|_| bad("bad node label"))?;
        rest = &r[close + 1..];
        if is_lambda {
            w.add_lambda(label, sign * coeff);
        } else {
            w.add_alpha(label, sign * coeff);
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_normalizes_zero_entries() {
        let w = Weight::fundamental(1) + Weight::simple_root(2);
        let v = &w - &w;
        assert!(v.is_zero());
        let u = Weight::fundamental(1) - Weight::fundamental(1);
        assert!(u.lambda.is_empty());
    }

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["La[0]", "-7*La[0] - 4*La[1] - La[2] - La[3]", "La[1] + 2*La[3]", "0"] {
            let w = parse_weight(s).unwrap();
            assert_eq!(parse_weight(&w.to_string()).unwrap(), w);
        }
        let w = parse_weight("-7*Lambda[0] - 4*Lambda[1]").unwrap();
        assert_eq!(w.lambda_coeff(0), -7);
        assert_eq!(w.lambda_coeff(1), -4);
        let w = parse_weight("La[1]-alpha[2]").unwrap();
        assert_eq!(w.alpha_coeff(2), -1);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_weight("La[").is_err());
        assert!(parse_weight("2La[1]x").is_err());
        assert!(parse_weight("+La[1]").is_err());
    }
}
