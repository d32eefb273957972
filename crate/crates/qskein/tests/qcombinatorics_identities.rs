//! Identity suite for quantum integers, factorials, Pochhammer symbols and
//! the q-binomial variants.

use num_bigint::BigInt;
use qskein::laurent::LaurentPoly;
use qskein::qcombinatorics::*;

fn t_pow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(e, BigInt::from(1))
}

fn signed(p: LaurentPoly, negative: bool) -> LaurentPoly {
    if negative {
        p.neg()
    } else {
        p
    }
}

#[test]
fn quantum_integer_basics() {
    assert!(quantum_integer(0).is_zero());
    assert_eq!(quantum_integer(-5), quantum_integer(5).neg());
    // [2] = q^{1/2} + q^{−1/2}
    assert_eq!(quantum_integer(2), t_pow(6).add(&t_pow(-6)));
    // [2][2] = [3] + [1]
    assert_eq!(
        quantum_integer(2).mul(&quantum_integer(2)),
        quantum_integer(3).add(&quantum_integer(1))
    );
    // Palindromic under q → q^{−1}.
    for k in -10..=10 {
        assert_eq!(quantum_integer(k).substitute_inverse(), quantum_integer(k));
    }
}

#[test]
fn product_expansion_identity() {
    // [a][b] = Σ_{i=1..a} [a+b−(2i−1)] = Σ_{i=1..b} [a+b−(2i−1)]
    for a in 1..=10i64 {
        for b in 1..=10i64 {
            let lhs = quantum_integer(a).mul(&quantum_integer(b));
            let mut sum_a = LaurentPoly::zero();
            for i in 1..=a {
                sum_a = sum_a.add(&quantum_integer(a + b - (2 * i - 1)));
            }
            let mut sum_b = LaurentPoly::zero();
            for i in 1..=b {
                sum_b = sum_b.add(&quantum_integer(a + b - (2 * i - 1)));
            }
            assert_eq!(lhs, sum_a, "a={a} b={b}");
            assert_eq!(lhs, sum_b, "a={a} b={b}");
        }
    }
}

#[test]
fn three_term_identities() {
    for a in -10..=10i64 {
        for b in -10..=10i64 {
            for c in -10..=10i64 {
                // [a][b] − [a−c][b−c] = [a+b−c][c]
                let lhs = quantum_integer(a)
                    .mul(&quantum_integer(b))
                    .sub(&quantum_integer(a - c).mul(&quantum_integer(b - c)));
                let rhs = quantum_integer(a + b - c).mul(&quantum_integer(c));
                assert_eq!(lhs, rhs, "identity 2 at a={a} b={b} c={c}");
                // [a][b−c] + [c][a−b] = [b][a−c]
                let lhs = quantum_integer(a)
                    .mul(&quantum_integer(b - c))
                    .add(&quantum_integer(c).mul(&quantum_integer(a - b)));
                let rhs = quantum_integer(b).mul(&quantum_integer(a - c));
                assert_eq!(lhs, rhs, "identity 3 at a={a} b={b} c={c}");
            }
        }
    }
}

#[test]
fn transformation_formulas() {
    for k in 0..=10u32 {
        let ki = k as i64;
        let (brace_fact, _) = quantum_factorials(k);
        // {k}! = (−1)^k q^{−k(k+1)/4} (q;q)_k
        assert_eq!(
            brace_fact,
            signed(t_pow(-3 * ki * (ki + 1)).mul(&pochhammer(k)), k % 2 != 0),
            "brace factorial at k={k}"
        );
        // (q;q)_k = (−1)^k q'^{−k(k+1)/2} (q';q')_k with q' = q^{−1}
        assert_eq!(
            pochhammer(k),
            signed(
                t_pow(6 * ki * (ki + 1)).mul(&pochhammer(k).substitute_inverse()),
                k % 2 != 0
            ),
            "pochhammer inversion at k={k}"
        );
        for n in k..=10u32 {
            let ni = n as i64;
            // [n br k] = q^{−(n−k)k/2} (n choose k)_q
            assert_eq!(
                bracket_binomial(n, ki),
                t_pow(-6 * (ni - ki) * ki).mul(&gauss_binomial(n, ki)),
                "bracket bridge at n={n} k={k}"
            );
            // (n choose k)_q = q'^{k²−nk} (n choose k)_{q'}
            assert_eq!(
                gauss_binomial(n, ki),
                t_pow(-12 * (ki * ki - ni * ki))
                    .mul(&gauss_binomial(n, ki).substitute_inverse()),
                "binomial inversion at n={n} k={k}"
            );
        }
    }
}

#[test]
fn binomial_conventions() {
    for n in 0..=10u32 {
        assert_eq!(gauss_binomial(n, 0), LaurentPoly::one());
        assert_eq!(gauss_binomial(n, n as i64), LaurentPoly::one());
        assert!(gauss_binomial(n, n as i64 + 1).is_zero());
        assert!(gauss_binomial(n, -1).is_zero());
        assert!(bracket_binomial(n, n as i64 + 3).is_zero());
        for k in 0..=n as i64 {
            assert_eq!(
                gauss_binomial(n, k),
                gauss_binomial(n, n as i64 - k),
                "symmetry at n={n} k={k}"
            );
        }
    }
    assert_eq!(gauss_binomial(2, 1), LaurentPoly::one().add(&LaurentPoly::q_int_power(1)));
    assert_eq!(bracket_binomial(2, 1), quantum_integer(2));
}

#[test]
fn multinomial_telescopes() {
    // (n choose n1,…,nm)_q equals the telescoping product of binomials.
    let cases: &[(u32, &[u32])] = &[(3, &[1, 1, 1]), (5, &[2, 2, 1]), (6, &[3, 2, 1]), (4, &[4])];
    for &(n, parts) in cases {
        let multi = gauss_multinomial(n, parts).unwrap();
        let mut prod = LaurentPoly::one();
        let mut rest = n;
        for &p in parts {
            prod = prod.mul(&gauss_binomial(rest, p as i64));
            rest -= p;
        }
        assert_eq!(multi, prod, "n={n} parts={parts:?}");
    }
    assert!(gauss_multinomial(4, &[2, 1]).is_err());
}

#[test]
fn partition_box_identity() {
    for k in 0..=8u32 {
        for l in 0..=8u32 {
            assert_eq!(
                partition_box_sum(k, l),
                gauss_binomial(k + l, k as i64),
                "box at k={k} l={l}"
            );
        }
    }
}
