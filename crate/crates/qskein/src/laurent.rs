//! Exact Laurent-polynomial arithmetic in one variable `t` with `t^12 = q`.
//!
//! All fractional powers of `q` that occur in the A1 and A2 skein relations
//! (`q^{1/4}`, `q^{1/3}`, `q^{1/6}`, `q^{1/2}`) become integer powers of `t`
//! because 12 = lcm(4, 6). Coefficients are arbitrary-precision integers;
//! every division in scope is exact at the polynomial level, so rational
//! coefficients never arise.
//!
//! [`RationalFunction`] is a reduced quotient of two [`LaurentPoly`], kept in
//! a canonical form: gcd(num, den) is a unit, the denominator has minimal
//! exponent 0 and positive leading coefficient.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Number of `t`-units per power of `q`: `t^12 = q`.
pub const T_PER_Q: i64 = 12;

/// Errors raised by exact Laurent arithmetic.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    /// A q-exponent `num/den` was requested whose `t`-exponent `12·num/den`
    /// is not an integer.
    #[error("q-exponent {num}/{den} is not an integer multiple of 1/12")]
    FractionalExponent { num: i64, den: i64 },
    /// `exact_div` found a nonzero remainder.
    #[error("polynomials do not divide exactly")]
    NotDivisible,
    /// `as_laurent` was called on a value whose reduced denominator is not a
    /// unit monomial.
    #[error("rational function is not a Laurent polynomial")]
    NotPolynomial,
    /// A rational function was constructed with denominator zero.
    #[error("zero denominator")]
    ZeroDenominator,
}

/// An exponent in `t`-units; the q-exponent it denotes is `value / 12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(pub i64);

impl Exponent {
    /// Builds an exponent from a rational q-exponent `num/den`, verifying
    /// that `12·num/den` is an integer.
    pub fn from_q_ratio(num: i64, den: i64) -> Result<Exponent, LaurentError> {
        assert!(den != 0, "exponent denominator must be nonzero");
        let scaled = num
            .checked_mul(T_PER_Q)
            .expect("q-exponent overflow");
        if scaled % den != 0 {
            return Err(LaurentError::FractionalExponent { num, den });
        }
        Ok(Exponent(scaled / den))
    }

    /// The q-exponent as a `(numerator, 12)` pair, unreduced.
    pub fn q_ratio(self) -> (i64, i64) {
        (self.0, T_PER_Q)
    }
}

/// A Laurent polynomial in `t` with arbitrary-precision integer coefficients.
///
/// Terms are stored sorted by exponent; zero coefficients are never stored,
/// so structural equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    /// `coeff · t^t_exp`.
    pub fn monomial(t_exp: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(t_exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// `q^{num/den}` as a monomial in `t`; errors if the exponent does not
    /// live in (1/12)·Z.
    pub fn q_power(num: i64, den: i64) -> Result<Self, LaurentError> {
        Ok(LaurentPoly::monomial(
            Exponent::from_q_ratio(num, den)?.0,
            BigInt::one(),
        ))
    }

    /// `q^k` for integer `k`.
    pub fn q_int_power(k: i64) -> Self {
        LaurentPoly::monomial(k * T_PER_Q, BigInt::one())
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::monomial(0, BigInt::from(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    /// Iterates `(t-exponent, coefficient)` in ascending exponent order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest-exponent term (zero polynomial → 0).
    pub fn leading_coeff(&self) -> BigInt {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, t_exp: i64) -> BigInt {
        self.terms.get(&t_exp).cloned().unwrap_or_else(BigInt::zero)
    }

    fn insert_add(terms: &mut BTreeMap<i64, BigInt>, e: i64, c: BigInt) {
        use std::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_add(&mut terms, *e, c.clone());
        }
        LaurentPoly { terms }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                Self::insert_add(&mut terms, e1 + e2, c1 * c2);
            }
        }
        LaurentPoly { terms }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `t → t^{-1}` (equivalently `q → q^{-1}`).
    pub fn substitute_inverse(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluates at `t = 1` (the classical specialization `q = 1`).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact division: returns `c` with `c · b = a`, or [`LaurentError::NotDivisible`].
    pub fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        assert!(!b.is_zero(), "division by the zero polynomial");
        if a.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both to ordinary polynomials, long-divide, shift back.
        let (amin, bmin) = (a.min_exp().unwrap(), b.min_exp().unwrap());
        let mut rem = a.shift(-amin);
        let div = b.shift(-bmin);
        let div_deg = div.max_exp().unwrap();
        let div_lead = div.leading_coeff();
        let mut quot = BTreeMap::new();
        while !rem.is_zero() {
            let rem_deg = rem.max_exp().unwrap();
            if rem_deg < div_deg {
                return Err(LaurentError::NotDivisible);
            }
            let rem_lead = rem.leading_coeff();
            if (&rem_lead % &div_lead) != BigInt::zero() {
                return Err(LaurentError::NotDivisible);
            }
            let c = &rem_lead / &div_lead;
            let e = rem_deg - div_deg;
            rem = rem.sub(&div.shift(e).mul_scalar(&c));
            quot.insert(e, c);
        }
        Ok(LaurentPoly { terms: quot }.shift(amin - bmin))
    }

    /// GCD of the integer coefficients (zero polynomial → 0).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// GCD over Z[t, t^{-1}]: shift to ordinary polynomials and run a
    /// content-and-primitive-part subresultant PRS. The result is primitive
    /// up to the common content, with positive leading coefficient and
    /// minimal exponent 0.
    pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        if a.is_zero() {
            return Self::normalize_gcd(b);
        }
        if b.is_zero() {
            return Self::normalize_gcd(a);
        }
        let content = num_integer::Integer::gcd(&a.content(), &b.content());
        let mut p = a.shift(-a.min_exp().unwrap());
        let mut q = b.shift(-b.min_exp().unwrap());
        p = p.div_content();
        q = q.div_content();
        // Primitive Euclidean loop with pseudo-division.
        while !q.is_zero() {
            let r = Self::pseudo_rem(&p, &q);
            p = q;
            q = r.div_content();
        }
        Self::normalize_gcd(&p.mul_scalar(&content))
    }

    fn div_content(&self) -> LaurentPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k / &c)).collect(),
        }
    }

    /// Pseudo-remainder of ordinary polynomials (min exponent 0 assumed).
    fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let db = b.max_exp().unwrap();
        let lb = b.leading_coeff();
        let mut rem = a.clone();
        while !rem.is_zero() {
            let dr = rem.max_exp().unwrap();
            if dr < db {
                break;
            }
            let lr = rem.leading_coeff();
            rem = rem.mul_scalar(&lb).sub(&b.shift(dr - db).mul_scalar(&lr));
        }
        rem
    }

    fn normalize_gcd(g: &LaurentPoly) -> LaurentPoly {
        if g.is_zero() {
            return LaurentPoly::zero();
        }
        let mut g = g.shift(-g.min_exp().unwrap());
        if g.leading_coeff().is_negative() {
            g = g.neg();
        }
        g
    }

    /// Serializes per the stable JSON schema:
    /// `{"var":"q^(1/12)","terms":[[exponent, "coeff"], …]}` ascending.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "var": "q^(1/12)",
            "terms": self
                .terms
                .iter()
                .map(|(e, c)| serde_json::json!([e, c.to_string()]))
                .collect::<Vec<_>>(),
        })
    }

    /// Parses the schema emitted by [`LaurentPoly::to_json`].
    pub fn from_json(v: &serde_json::Value) -> Option<LaurentPoly> {
        if v.get("var")?.as_str()? != "q^(1/12)" {
            return None;
        }
        let mut terms = BTreeMap::new();
        for pair in v.get("terms")?.as_array()? {
            let e = pair.get(0)?.as_i64()?;
            let c: BigInt = pair.get(1)?.as_str()?.parse().ok()?;
            if !c.is_zero() {
                terms.insert(e, c);
            }
        }
        Some(LaurentPoly { terms })
    }

    /// Human-readable form in powers of `q` (fractional exponents reduced).
    pub fn format_q(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let pow = format_q_power(*e);
            if pow.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&pow);
            } else {
                out.push_str(&format!("{}*{}", mag, pow));
            }
        }
        out
    }
}

fn format_q_power(t_exp: i64) -> String {
    if t_exp == 0 {
        return String::new();
    }
    let g = num_integer::Integer::gcd(&t_exp, &T_PER_Q);
    let (num, den) = (t_exp / g, T_PER_Q / g);
    if den == 1 {
        if num == 1 {
            "q".into()
        } else {
            format!("q^{}", num)
        }
    } else {
        format!("q^({}/{})", num, den)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_q())
    }
}

/// A reduced quotient of Laurent polynomials.
///
/// Canonical form: `gcd(num, den)` is a unit, `den` has minimal exponent 0
/// and positive leading coefficient. Structural equality is semantic
/// equality for canonical values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        Ok(Self::canonicalize(num, den))
    }

    fn canonicalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            };
        }
        let g = LaurentPoly::gcd(&num, &den);
        let mut num = LaurentPoly::exact_div(&num, &g).expect("gcd divides numerator");
        let mut den = LaurentPoly::exact_div(&den, &g).expect("gcd divides denominator");
        // Make the denominator an ordinary polynomial with unit-free shift
        // and positive leading coefficient; absorb the adjustment in num.
        let shift = den.min_exp().unwrap();
        den = den.shift(-shift);
        num = num.shift(-shift);
        if den.leading_coeff().is_negative() {
            den = den.neg();
            num = num.neg();
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    /// `q^{num/den}`.
    pub fn q_power(num: i64, den: i64) -> Result<Self, LaurentError> {
        Ok(Self::from_poly(LaurentPoly::q_power(num, den)?))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::canonicalize(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::canonicalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self, LaurentError> {
        if other.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        Ok(Self::canonicalize(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn inverse(&self) -> Result<Self, LaurentError> {
        RationalFunction::one().div(self)
    }

    pub fn pow(&self, k: i64) -> Result<Self, LaurentError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = RationalFunction::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Substitutes `t → t^{-1}`, re-canonicalized.
    pub fn substitute_inverse(&self) -> Self {
        Self::canonicalize(self.num.substitute_inverse(), self.den.substitute_inverse())
    }

    /// Returns the exact Laurent polynomial equal to `self`, or
    /// [`LaurentError::NotPolynomial`] when the reduced denominator is not a
    /// unit monomial. Used as a correctness tripwire for non-cancelling sums.
    /// Serializes as the bare polynomial JSON when the denominator is 1,
    /// otherwise `{"numerator": …, "denominator": …}`.
    pub fn to_json(&self) -> serde_json::Value {
        if self.den.is_one() {
            self.num.to_json()
        } else {
            serde_json::json!({
                "numerator": self.num.to_json(),
                "denominator": self.den.to_json(),
            })
        }
    }

    /// Parses the schema emitted by [`RationalFunction::to_json`].
    pub fn from_json(v: &serde_json::Value) -> Option<RationalFunction> {
        if let Some(num) = v.get("numerator") {
            let num = LaurentPoly::from_json(num)?;
            let den = LaurentPoly::from_json(v.get("denominator")?)?;
            RationalFunction::new(num, den).ok()
        } else {
            Some(RationalFunction::from_poly(LaurentPoly::from_json(v)?))
        }
    }

    pub fn as_laurent(&self) -> Result<LaurentPoly, LaurentError> {
        // Canonical form puts the denominator at minimal exponent 0 with
        // positive leading coefficient, so a unit denominator is exactly 1.
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(LaurentError::NotPolynomial)
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
