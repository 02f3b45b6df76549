//! Text and JSON output for polynomials and relation systems.

use crate::coefficient::{fmt_complex, fmt_params};
use crate::polynomial::NCPolynomial;
use crate::relations::RelationSystem;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Terms in degree-then-lex order, e.g. `z3 z4 + 1i*hbar*z1 z2`.
pub fn render_text(p: &NCPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (m, c) in p.terms() {
        let coeff = format!("{}{}", fmt_complex(c.value), fmt_params(c.hbar_power, c.mu_twice));
        let word = m.labels().join(" ");
        let s = if word.is_empty() {
            coeff
        } else if coeff == "1" {
            word
        } else if coeff == "-1" {
            format!("-{word}")
        } else {
            format!("{coeff}*{word}")
        };
        parts.push(s);
    }
    parts.join(" + ")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub word: Vec<String>,
    pub re: f64,
    pub im: f64,
    pub hbar_pow: u32,
    /// Integer when the μ exponent is whole, otherwise a float.
    pub mu_pow: Value,
}

pub fn json_terms(p: &NCPolynomial) -> Vec<JsonTerm> {
    p.terms()
        .map(|(m, c)| JsonTerm {
            word: m.labels(),
            re: c.value.re,
            im: c.value.im,
            hbar_pow: c.hbar_power,
            mu_pow: match c.mu_power() {
                Some(n) => json!(n),
                None => json!(c.mu_twice as f64 / 2.0),
            },
        })
        .collect()
}

pub fn render_json(p: &NCPolynomial) -> Value {
    json!({ "terms": json_terms(p) })
}

/// One line `g h = rhs` per rule.
pub fn render_relations_text(rel: &RelationSystem) -> String {
    let mut out = String::new();
    for ((g, h), rhs) in rel.rules() {
        out.push_str(&format!("{} {} = {}\n", g, h, render_text(rhs)));
    }
    out
}

pub fn render_relations_json(rel: &RelationSystem) -> Value {
    let rules: Vec<Value> = rel
        .rules()
        .into_iter()
        .map(|((g, h), rhs)| json!({ "lhs": [g.label(), h.label()], "rhs": render_json(rhs) }))
        .collect();
    json!({
        "name": rel.name,
        "generators": rel.generators().iter().map(|g| g.label()).collect::<Vec<_>>(),
        "rules": rules,
    })
}
