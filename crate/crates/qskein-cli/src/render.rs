//! Presentation-only output formats (plain text and LaTeX); the JSON format
//! comes straight from the library's `to_json` methods.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use qskein::laurent::{LaurentPoly, RationalFunction};

/// Exponents are stored in the twelfth root `t` with `t^12 = q`.
const T_PER_Q: i64 = 12;

pub fn plain_rf(r: &RationalFunction) -> String {
    r.to_string()
}

fn latex_q_power(t_exp: i64) -> String {
    if t_exp == 0 {
        return String::new();
    }
    let g = t_exp.gcd(&T_PER_Q);
    let (num, den) = (t_exp / g, T_PER_Q / g);
    if den == 1 {
        if num == 1 {
            "q".into()
        } else {
            format!("q^{{{num}}}")
        }
    } else {
        format!("q^{{{num}/{den}}}")
    }
}

pub fn latex_poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.iter_terms().enumerate() {
        let mag: BigInt = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let pow = latex_q_power(e);
        if pow.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&pow);
        } else {
            out.push_str(&format!("{mag} {pow}"));
        }
    }
    out
}

pub fn latex_rf(r: &RationalFunction) -> String {
    if r.denominator().is_one() {
        latex_poly(r.numerator())
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            latex_poly(r.numerator()),
            latex_poly(r.denominator())
        )
    }
}
