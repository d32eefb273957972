//! Quantum integers and q-combinatorics.
//!
//! Conventions (all exact in `t` with `t^12 = q`):
//!
//! - `{k} = q^{k/2} − q^{−k/2}`
//! - `[k] = {k}/{1}` (the balanced quantum integer)
//! - `{k}! = ∏_{l=1}^{k} {l}`,  `[k]! = ∏_{l=1}^{k} [l]`
//! - `(q;q)_k = ∏_{l=1}^{k} (1 − q^l)`
//! - `[n brack k] = [n]! / ([k]! [n−k]!)` (0 outside `0 ≤ k ≤ n`)
//! - `(n choose k)_q = (q;q)_n / ((q;q)_k (q;q)_{n−k})` (0 outside range)
//! - `(n choose n_1,…,n_r)_q = (q;q)_n / ∏ (q;q)_{n_i}`
//!
//! `partition_box_sum(k, l)` enumerates partitions inside a `k × l` box and
//! sums `q^{|λ|}`; it equals `(k+l choose k)_q` and serves as a brute-force
//! cross-check of the Gaussian binomial.

use crate::laurent::LaurentPoly;
use num_bigint::BigInt;
use once_cell::sync::Lazy;
use std::sync::Mutex;

/// Errors from q-combinatorial operations.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum QCombError {
    /// `gauss_multinomial` was called with parts not summing to `n`.
    #[error("multinomial parts sum to {got}, expected {expected}")]
    PartsMismatch { expected: u32, got: u32 },
}

/// `{k} = q^{k/2} − q^{−k/2}` (odd in `k`).
pub fn quantum_brace(k: i64) -> LaurentPoly {
    // q^{k/2} = t^{6k}.
    LaurentPoly::monomial(6 * k, BigInt::from(1))
        .sub(&LaurentPoly::monomial(-6 * k, BigInt::from(1)))
}

/// `[k] = {k}/{1} = q^{(k−1)/2} + q^{(k−3)/2} + … + q^{−(k−1)/2}` for k > 0;
/// `[−k] = −[k]`, `[0] = 0`.
pub fn quantum_integer(k: i64) -> LaurentPoly {
    let sign = k.signum();
    let k = k.abs();
    let mut p = LaurentPoly::zero();
    for i in 0..k {
        // exponent (k − 1 − 2i)/2 in q, i.e. 6(k − 1 − 2i) in t.
        p = p.add(&LaurentPoly::monomial(6 * (k - 1 - 2 * i), BigInt::from(1)));
    }
    if sign < 0 {
        p.neg()
    } else {
        p
    }
}

static FACTORIAL_CACHE: Lazy<Mutex<Vec<(LaurentPoly, LaurentPoly)>>> =
    Lazy::new(|| Mutex::new(vec![(LaurentPoly::one(), LaurentPoly::one())]));

/// `({k}!, [k]!)`.
pub fn quantum_factorials(k: u32) -> (LaurentPoly, LaurentPoly) {
    let mut cache = FACTORIAL_CACHE.lock().unwrap();
    while cache.len() <= k as usize {
        let l = cache.len() as i64;
        let (prev_brace, prev_bracket) = cache.last().unwrap().clone();
        cache.push((
            prev_brace.mul(&quantum_brace(l)),
            prev_bracket.mul(&quantum_integer(l)),
        ));
    }
    cache[k as usize].clone()
}

static POCHHAMMER_CACHE: Lazy<Mutex<Vec<LaurentPoly>>> =
    Lazy::new(|| Mutex::new(vec![LaurentPoly::one()]));

/// `(q;q)_k = ∏_{l=1}^{k} (1 − q^l)`.
pub fn pochhammer(k: u32) -> LaurentPoly {
    let mut cache = POCHHAMMER_CACHE.lock().unwrap();
    while cache.len() <= k as usize {
        let l = cache.len() as i64;
        let factor = LaurentPoly::one().sub(&LaurentPoly::q_int_power(l));
        let next = cache.last().unwrap().mul(&factor);
        cache.push(next);
    }
    cache[k as usize].clone()
}

/// Gaussian binomial `(n choose k)_q`; 0 for `k < 0` or `k > n`.
pub fn gauss_binomial(n: u32, k: i64) -> LaurentPoly {
    if k < 0 || k > n as i64 {
        return LaurentPoly::zero();
    }
    let k = k as u32;
    LaurentPoly::exact_div(
        &pochhammer(n),
        &pochhammer(k).mul(&pochhammer(n - k)),
    )
    .expect("Gaussian binomial is a polynomial")
}

/// Balanced binomial `[n brack k] = [n]!/([k]![n−k]!)`; 0 outside `0 ≤ k ≤ n`.
pub fn bracket_binomial(n: u32, k: i64) -> LaurentPoly {
    if k < 0 || k > n as i64 {
        return LaurentPoly::zero();
    }
    let k = k as u32;
    let num = quantum_factorials(n).1;
    let den = quantum_factorials(k).1.mul(&quantum_factorials(n - k).1);
    LaurentPoly::exact_div(&num, &den).expect("bracket binomial is a polynomial")
}

/// q-multinomial `(q;q)_n / ∏ (q;q)_{n_i}`; the parts must sum to `n`.
pub fn gauss_multinomial(n: u32, parts: &[u32]) -> Result<LaurentPoly, QCombError> {
    let got: u32 = parts.iter().sum();
    if got != n {
        return Err(QCombError::PartsMismatch { expected: n, got });
    }
    let mut den = LaurentPoly::one();
    for &p in parts {
        den = den.mul(&pochhammer(p));
    }
    Ok(LaurentPoly::exact_div(&pochhammer(n), &den)
        .expect("q-multinomial is a polynomial"))
}

/// Sum of `q^{|λ|}` over all partitions `λ` fitting in a `k × l` box
/// (at most `k` parts, each at most `l`), by brute-force enumeration.
pub fn partition_box_sum(k: u32, l: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut parts: Vec<u32> = Vec::new();
    enumerate_partitions(k, l, 0, &mut parts, &mut acc);
    acc
}

fn enumerate_partitions(
    rows_left: u32,
    max_part: u32,
    weight: i64,
    parts: &mut Vec<u32>,
    acc: &mut LaurentPoly,
) {
    *acc = acc.add(&LaurentPoly::q_int_power(weight));
    if rows_left == 0 {
        return;
    }
    for next in 1..=max_part {
        parts.push(next);
        enumerate_partitions(rows_left - 1, next, weight + next as i64, parts, acc);
        parts.pop();
    }
}

/// Convenience: `(q^ε;q^ε)_k` — the Pochhammer symbol with `q → q^{−1}`
/// applied when `eps < 0`.
pub fn pochhammer_signed(k: u32, eps: i64) -> LaurentPoly {
    let p = pochhammer(k);
    if eps < 0 {
        p.substitute_inverse()
    } else {
        p
    }
}

/// Convenience: `(n choose k)_{q^ε}`.
pub fn gauss_binomial_signed(n: u32, k: i64, eps: i64) -> LaurentPoly {
    let b = gauss_binomial(n, k);
    if eps < 0 {
        b.substitute_inverse()
    } else {
        b
    }
}
