//! Closed-form twist, clasp, slide, closure and bubble coefficients.
//!
//! Every coefficient is exact in `t = q^{1/12}`. Conventions:
//!
//! - sl2 half twist: `c_k = q^{(−n²+2k²)/4}·C(n,k)_q`
//! - sl2 full twist: `c_k = (−1)^{n−k} q^{(2k²−n²+k−n)/2} (q)_n/(q)_k C(n,k)_q`
//! - sl2 m half twists: prefactor `(−1)^{mn} q^{−m(n²+2n)/4}`, chain sum over
//!   `n = k_0 ≥ k_1 ≥ … ≥ k_m` with summand
//!   `(−1)^{n−k_m} q^{(n−k_m)/2} (−1)^{Σk_i} q^{Σ(k_i²+k_i)/2} ∏ C(k_{i−1},k_i)_q`
//! - sl2 m full twists: prefactor `q^{−m(n²+2n)/2}`, summand
//!   `(−1)^{n−k_m} q^{(n−k_m)/2} q^{Σ(k_i²+k_i)} (q)_n/(q)_{k_m} ∏ C(k_{i−1},k_i)_q`
//! - sl3 half twists: `(−1)^k q^{(2n²−6nk+3k²)/6}·C(n,k)_q` (positive) and
//!   `(−1)^k q^{(−2n²+3k²)/6}·C(n,k)_q` (negative)
//! - sl3 full twist: `q^{n²/3} q^{k²−n²+k−n} (q)_n/(q)_k C(n,k)_q`
//! - sl3 m full twists: prefactor `q^{−2m(n²+3n)/3}`, summand
//!   `q^{n−k_m} q^{Σ(k_i²+2k_i)} (q)_n/(q)_{k_m} ∏ C(k_{i−1},k_i)_q`
//!
//! plus the clasp scalars (crossing eigenvalue, partial trace, curl, loop),
//! the slide scalars, the partial-closure scalars, and both bubble skein
//! expansion coefficients. Left-handed variants substitute `q → q^{−1}`.
//!
//! Chain sums are evaluated by a lower-triangular dynamic program (one
//! single-twist transfer per twist); the literal chain enumeration is kept
//! as a test-only cross-check.

use crate::jones_2bridge::Algebra;
use crate::laurent::{LaurentPoly, RationalFunction};
use crate::qcombinatorics::{bracket_binomial, gauss_binomial, pochhammer, quantum_integer};
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Errors raised by the coefficient formulas.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    /// An index argument is outside its documented range.
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

/// Handedness of a twist region or curl.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Handedness {
    Right,
    Left,
}

/// sl2 twist kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistKindSl2 {
    Half,
    Full,
}

/// sl3 twist kinds (antiparallel half twists come in two crossing signs).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistKindSl3 {
    HalfPos,
    HalfNeg,
    Full,
}

/// Clasp scalars of the two clasp lemmas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaspScalarKind {
    /// Eigenvalue of the k/(n−k) band crossing on a clasped bundle.
    Crossing,
    /// Partial trace of k strands of the n-clasp.
    PartialTrace,
    /// The clasped curl.
    Curl,
    /// The clasped loop value.
    Loop,
}

/// A twist expansion: coefficient of the k-labeled basis web, `0 ≤ k ≤ n`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistExpansion {
    pub n: u32,
    pub coefficients: BTreeMap<u32, RationalFunction>,
}

impl TwistExpansion {
    pub fn coefficient(&self, k: u32) -> RationalFunction {
        self.coefficients
            .get(&k)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    /// Deterministic JSON: `{"n": n, "coefficients": {"k": poly, …}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (k, c) in &self.coefficients {
            map.insert(k.to_string(), c.to_json());
        }
        serde_json::json!({ "n": self.n, "coefficients": map })
    }
}

fn t_mono(exp: i64, negative: bool) -> RationalFunction {
    RationalFunction::from_poly(LaurentPoly::monomial(
        exp,
        BigInt::from(if negative { -1 } else { 1 }),
    ))
}

fn check_range(n: u32, k: u32) -> Result<(), TwistError> {
    if k > n {
        return Err(TwistError::OutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}

fn pochhammer_ratio(n: u32, k: u32) -> RationalFunction {
    // (q)_n/(q)_k = ∏_{j=k+1}^n (1 − q^j), a polynomial.
    RationalFunction::new(pochhammer(n), pochhammer(k)).expect("(q)_k is nonzero")
}

fn apply_handed(c: RationalFunction, handed: Handedness) -> RationalFunction {
    match handed {
        Handedness::Right => c,
        Handedness::Left => c.substitute_inverse(),
    }
}

/// The sl2 (colored Kauffman) twist coefficient of the k-basis web.
pub fn twist_coeff_sl2(
    n: u32,
    k: u32,
    kind: TwistKindSl2,
    handed: Handedness,
) -> Result<RationalFunction, TwistError> {
    check_range(n, k)?;
    let (n_i, k_i) = (n as i64, k as i64);
    let binom = RationalFunction::from_poly(gauss_binomial(n, k_i));
    let c = match kind {
        TwistKindSl2::Half => {
            // q^{(−n²+2k²)/4} = t^{3(−n²+2k²)}
            t_mono(3 * (-n_i * n_i + 2 * k_i * k_i), false).mul(&binom)
        }
        TwistKindSl2::Full => {
            // (−1)^{n−k} q^{(2k²−n²+k−n)/2} (q)_n/(q)_k C(n,k)_q
            let sign = (n_i - k_i) % 2 != 0;
            t_mono(6 * (2 * k_i * k_i - n_i * n_i + k_i - n_i), sign)
                .mul(&pochhammer_ratio(n, k))
                .mul(&binom)
        }
    };
    Ok(apply_handed(c, handed))
}

/// The sl3 (colored A2) twist coefficient of the k-basis web.
pub fn twist_coeff_sl3(
    n: u32,
    k: u32,
    kind: TwistKindSl3,
    handed: Handedness,
) -> Result<RationalFunction, TwistError> {
    check_range(n, k)?;
    let (n_i, k_i) = (n as i64, k as i64);
    let binom = RationalFunction::from_poly(gauss_binomial(n, k_i));
    let c = match kind {
        TwistKindSl3::HalfPos => {
            // (−1)^k q^{(2n²−6nk+3k²)/6} = (−1)^k t^{2(2n²−6nk+3k²)}
            let sign = k % 2 != 0;
            t_mono(2 * (2 * n_i * n_i - 6 * n_i * k_i + 3 * k_i * k_i), sign).mul(&binom)
        }
        TwistKindSl3::HalfNeg => {
            let sign = k % 2 != 0;
            t_mono(2 * (-2 * n_i * n_i + 3 * k_i * k_i), sign).mul(&binom)
        }
        TwistKindSl3::Full => {
            // q^{n²/3} q^{k²−n²+k−n} (q)_n/(q)_k C(n,k)_q
            t_mono(
                4 * n_i * n_i + 12 * (k_i * k_i - n_i * n_i + k_i - n_i),
                false,
            )
            .mul(&pochhammer_ratio(n, k))
            .mul(&binom)
        }
    };
    Ok(apply_handed(c, handed))
}

/// Per-step transfer and terminal weights of the collapsed chain sums.
struct ChainWeights {
    /// Global prefactor.
    prefactor: RationalFunction,
    /// Transfer weight of the step `k_prev → k`.
    step: fn(i64) -> RationalFunction,
    /// Terminal weight at `k_m = k` for color `n`.
    terminal: fn(i64, i64) -> RationalFunction,
}

fn chain_expansion(n: u32, m: u32, w: &ChainWeights) -> TwistExpansion {
    let mut coefficients = BTreeMap::new();
    if m == 0 {
        coefficients.insert(n, RationalFunction::one());
        return TwistExpansion { n, coefficients };
    }
    // Lower-triangular dynamic program over k_i.
    let mut state: Vec<RationalFunction> = vec![RationalFunction::zero(); n as usize + 1];
    state[n as usize] = RationalFunction::one();
    for _ in 0..m {
        let mut next = vec![RationalFunction::zero(); n as usize + 1];
        for prev in 0..=n {
            if state[prev as usize].is_zero() {
                continue;
            }
            for k in 0..=prev {
                let t = (w.step)(k as i64)
                    .mul(&RationalFunction::from_poly(gauss_binomial(prev, k as i64)));
                next[k as usize] = next[k as usize].add(&state[prev as usize].mul(&t));
            }
        }
        state = next;
    }
    for k in 0..=n {
        let c = state[k as usize]
            .mul(&(w.terminal)(n as i64, k as i64))
            .mul(&w.prefactor);
        if !c.is_zero() {
            coefficients.insert(k, c);
        }
    }
    TwistExpansion { n, coefficients }
}

/// The collapsed m-twist expansion for sl2, keyed by the terminal chain
/// label `k_m`.
pub fn multi_twist_expansion_sl2(
    n: u32,
    m: u32,
    kind: TwistKindSl2,
    handed: Handedness,
) -> TwistExpansion {
    let n_i = n as i64;
    let weights = match kind {
        TwistKindSl2::Half => ChainWeights {
            // (−1)^{mn} q^{−m(n²+2n)/4}
            prefactor: t_mono(
                -3 * (m as i64) * (n_i * n_i + 2 * n_i),
                (m as u64 * n as u64) % 2 != 0,
            ),
            // (−1)^k q^{(k²+k)/2}
            step: |k| t_mono(6 * (k * k + k), k % 2 != 0),
            // (−1)^{n−k} q^{(n−k)/2}
            terminal: |n, k| t_mono(6 * (n - k), (n - k) % 2 != 0),
        },
        TwistKindSl2::Full => ChainWeights {
            // q^{−m(n²+2n)/2}
            prefactor: t_mono(-6 * (m as i64) * (n_i * n_i + 2 * n_i), false),
            // q^{k²+k}
            step: |k| t_mono(12 * (k * k + k), false),
            // (−1)^{n−k} q^{(n−k)/2} (q)_n/(q)_k
            terminal: |n, k| {
                t_mono(6 * (n - k), (n - k) % 2 != 0)
                    .mul(&pochhammer_ratio(n as u32, k as u32))
            },
        },
    };
    let mut e = chain_expansion(n, m, &weights);
    if handed == Handedness::Left {
        for c in e.coefficients.values_mut() {
            *c = c.substitute_inverse();
        }
    }
    e
}

/// The collapsed m-full-twist expansion for sl3.
pub fn multi_twist_expansion_sl3(n: u32, m: u32, handed: Handedness) -> TwistExpansion {
    let n_i = n as i64;
    let weights = ChainWeights {
        // q^{−2m(n²+3n)/3}
        prefactor: t_mono(-8 * (m as i64) * (n_i * n_i + 3 * n_i), false),
        // q^{k²+2k}
        step: |k| t_mono(12 * (k * k + 2 * k), false),
        // q^{n−k} (q)_n/(q)_k
        terminal: |n, k| t_mono(12 * (n - k), false).mul(&pochhammer_ratio(n as u32, k as u32)),
    };
    let mut e = chain_expansion(n, m, &weights);
    if handed == Handedness::Left {
        for c in e.coefficients.values_mut() {
            *c = c.substitute_inverse();
        }
    }
    e
}

/// Test-only reference path: the literal chain enumeration of the collapsed
/// expansion (multinomial summand per chain). Must agree with the dynamic
/// program.
pub fn multi_twist_expansion_sl2_chains(
    n: u32,
    m: u32,
    kind: TwistKindSl2,
    handed: Handedness,
) -> TwistExpansion {
    let mut coefficients: BTreeMap<u32, RationalFunction> = BTreeMap::new();
    if m == 0 {
        coefficients.insert(n, RationalFunction::one());
        return TwistExpansion { n, coefficients };
    }
    let n_i = n as i64;
    let mut chain = vec![n; m as usize];
    loop {
        // Weight of the chain n = k_0 ≥ k_1 ≥ … ≥ k_m.
        let km = chain[m as usize - 1] as i64;
        let sum_k: i64 = chain.iter().map(|&k| k as i64).sum();
        let sum_sq: i64 = chain.iter().map(|&k| (k as i64) * (k as i64)).sum();
        let mut weight = RationalFunction::one();
        let mut prev = n;
        for &k in &chain {
            weight = weight.mul(&RationalFunction::from_poly(gauss_binomial(prev, k as i64)));
            prev = k;
        }
        let (sign, t_exp) = match kind {
            TwistKindSl2::Half => (
                (m as i64 * n_i + (n_i - km) + sum_k) % 2 != 0,
                -3 * (m as i64) * (n_i * n_i + 2 * n_i) + 6 * (n_i - km) + 6 * (sum_sq + sum_k),
            ),
            TwistKindSl2::Full => (
                (n_i - km) % 2 != 0,
                -6 * (m as i64) * (n_i * n_i + 2 * n_i) + 6 * (n_i - km) + 12 * (sum_sq + sum_k),
            ),
        };
        weight = weight.mul(&t_mono(t_exp, sign));
        if kind == TwistKindSl2::Full {
            weight = weight.mul(&pochhammer_ratio(n, km as u32));
        }
        let entry = coefficients
            .entry(km as u32)
            .or_insert_with(RationalFunction::zero);
        *entry = entry.add(&weight);
        // Next weakly decreasing chain.
        let mut i = m as usize;
        loop {
            if i == 0 {
                let mut e = TwistExpansion { n, coefficients };
                e.coefficients.retain(|_, c| !c.is_zero());
                if handed == Handedness::Left {
                    for c in e.coefficients.values_mut() {
                        *c = c.substitute_inverse();
                    }
                }
                return e;
            }
            i -= 1;
            if chain[i] > 0 {
                chain[i] -= 1;
                let v = chain[i];
                for slot in chain.iter_mut().skip(i + 1) {
                    *slot = v;
                }
                break;
            }
        }
    }
}

/// Clasp scalars from the two clasp lemmas. `k` is ignored for curl/loop.
pub fn clasp_scalar(
    algebra: Algebra,
    which: ClaspScalarKind,
    n: u32,
    k: u32,
    handed: Handedness,
) -> Result<RationalFunction, TwistError> {
    let (n_i, k_i) = (n as i64, k as i64);
    match (algebra, which) {
        (Algebra::Sl2, ClaspScalarKind::Crossing) => {
            check_range(n, k)?;
            // q^{k(n−k)/4}, inverse for the other handedness.
            Ok(apply_handed(t_mono(3 * k_i * (n_i - k_i), false), handed))
        }
        (Algebra::Sl2, ClaspScalarKind::PartialTrace) => {
            check_range(n, k)?;
            let c = RationalFunction::new(quantum_integer(n_i + 1), quantum_integer(n_i - k_i + 1))
                .expect("[n−k+1] is nonzero");
            Ok(if k % 2 != 0 { c.neg() } else { c })
        }
        (Algebra::Sl2, ClaspScalarKind::Curl) => {
            // (−1)^n q^{(n²+2n)/4}
            Ok(apply_handed(
                t_mono(3 * (n_i * n_i + 2 * n_i), n % 2 != 0),
                handed,
            ))
        }
        (Algebra::Sl2, ClaspScalarKind::Loop) => {
            let c = RationalFunction::from_poly(quantum_integer(n_i + 1));
            Ok(if n % 2 != 0 { c.neg() } else { c })
        }
        (Algebra::Sl3, ClaspScalarKind::Crossing) => {
            check_range(n, k)?;
            // q^{k(n−k)/3}
            Ok(apply_handed(t_mono(4 * k_i * (n_i - k_i), false), handed))
        }
        (Algebra::Sl3, ClaspScalarKind::PartialTrace) => {
            check_range(n, k)?;
            Ok(RationalFunction::new(
                quantum_integer(n_i + 1).mul(&quantum_integer(n_i + 2)),
                quantum_integer(n_i - k_i + 1).mul(&quantum_integer(n_i - k_i + 2)),
            )
            .expect("[n−k+1][n−k+2] is nonzero"))
        }
        (Algebra::Sl3, ClaspScalarKind::Curl) => {
            // q^{(n²+3n)/3}
            Ok(apply_handed(t_mono(4 * (n_i * n_i + 3 * n_i), false), handed))
        }
        (Algebra::Sl3, ClaspScalarKind::Loop) => Ok(RationalFunction::new(
            quantum_integer(n_i + 1).mul(&quantum_integer(n_i + 2)),
            quantum_integer(2),
        )
        .expect("[2] is nonzero")),
    }
}

/// The clasp slide scalars.
pub fn slide_scalar(algebra: Algebra, n: u32, k: u32) -> Result<RationalFunction, TwistError> {
    check_range(n, k)?;
    let (n_i, k_i) = (n as i64, k as i64);
    Ok(match algebra {
        // (−1)^{n−k} q^{−(n²−k²+2n−2k)/4}
        Algebra::Sl2 => t_mono(
            -3 * (n_i * n_i - k_i * k_i + 2 * n_i - 2 * k_i),
            (n_i - k_i) % 2 != 0,
        ),
        // q^{−(n²−k²+3n−3k)/3}
        Algebra::Sl3 => t_mono(-4 * (n_i * n_i - k_i * k_i + 3 * n_i - 3 * k_i), false),
    })
}

/// The bubble skein expansion coefficient of the t-labeled basis web in the
/// (n,m)-bubble with side arcs k, l. Returns 0 when `t` is outside
/// `[max(k,l), min(k+l, n, m)]`.
pub fn bubble_coeff(
    algebra: Algebra,
    n: u32,
    m: u32,
    k: u32,
    l: u32,
    t: u32,
) -> Result<RationalFunction, TwistError> {
    let cap = n.min(m);
    if k > cap || l > cap {
        return Err(TwistError::OutOfRange(format!(
            "bubble arcs k = {k}, l = {l} exceed min(n,m) = {cap}"
        )));
    }
    if t < k.max(l) || t > (k + l).min(cap) {
        return Ok(RationalFunction::zero());
    }
    let shift = match algebra {
        Algebra::Sl2 => 1,
        Algebra::Sl3 => 2,
    };
    let br = |a: u32, b: u32| bracket_binomial(a, b as i64);
    let num = br(n, t)
        .mul(&br(m, t))
        .mul(&br(t, k))
        .mul(&br(t, l))
        .mul(&br(n + m - t + shift, n + m - k - l + shift));
    let den = br(n, k).mul(&br(m, k)).mul(&br(n, l)).mul(&br(m, l));
    let mut c = RationalFunction::new(num, den).expect("denominator brackets are nonzero");
    if algebra == Algebra::Sl2 && (t as i64 - k as i64 - l as i64) % 2 != 0 {
        c = c.neg();
    }
    Ok(c)
}

/// The partial-closure scalar: the value of the n-clasp with n−k strands
/// closed off, relative to the k-colored basis.
pub fn closure_scalar(algebra: Algebra, n: u32, k: u32) -> Result<RationalFunction, TwistError> {
    check_range(n, k)?;
    let (n_i, k_i) = (n as i64, k as i64);
    let one_minus_q = |j: i64| {
        LaurentPoly::from_int(1).sub(&LaurentPoly::monomial(12 * j, BigInt::from(1)))
    };
    Ok(match algebra {
        Algebra::Sl2 => {
            // (−1)^{n−k} q^{(k−n)/2} (1−q^{n+1})/(1−q^{k+1})
            let c = RationalFunction::new(one_minus_q(n_i + 1), one_minus_q(k_i + 1))
                .expect("1−q^{k+1} is nonzero")
                .mul(&t_mono(6 * (k_i - n_i), false));
            if (n_i - k_i) % 2 != 0 {
                c.neg()
            } else {
                c
            }
        }
        Algebra::Sl3 => {
            // q^{−(n−k)} (1−q^{n+1})(1−q^{n+2})/((1−q^{k+1})(1−q^{k+2}))
            RationalFunction::new(
                one_minus_q(n_i + 1).mul(&one_minus_q(n_i + 2)),
                one_minus_q(k_i + 1).mul(&one_minus_q(k_i + 2)),
            )
            .expect("denominator is nonzero")
            .mul(&t_mono(-12 * (n_i - k_i), false))
        }
    })
}
