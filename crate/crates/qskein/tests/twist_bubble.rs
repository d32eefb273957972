//! Twist-expansion and bubble-coefficient tests at module scale (the full
//! acceptance ranges run in the `acceptance` target).

mod common;

use common::*;
use qskein::a1_skein::tl_compose;
use qskein::a2_skein::glue_elements_scalar;
use qskein::jones_2bridge::Algebra;
use qskein::laurent::RationalFunction;
use qskein::qcombinatorics::quantum_integer;
use qskein::twist_formulas::*;

#[test]
fn single_twist_examples() {
    // Kauffman relation at n = 1: coefficients q^{1/4} (k=1), q^{−1/4} (k=0).
    let e = multi_twist_expansion_sl2(1, 1, TwistKindSl2::Half, Handedness::Right);
    assert_eq!(e.coefficient(1), q_t(3));
    assert_eq!(e.coefficient(0), q_t(-3));
    // m = 0 is the delta at k = n.
    let e = multi_twist_expansion_sl2(2, 0, TwistKindSl2::Half, Handedness::Right);
    assert_eq!(e.coefficient(2), RationalFunction::one());
    assert_eq!(e.coefficient(1), RationalFunction::zero());
    // Out-of-range k errors.
    assert!(twist_coeff_sl2(2, 3, TwistKindSl2::Half, Handedness::Right).is_err());
    assert!(twist_coeff_sl3(2, 3, TwistKindSl3::Full, Handedness::Right).is_err());
}

#[test]
fn multi_twist_reductions() {
    for n in 0..=5u32 {
        let half1 = multi_twist_expansion_sl2(n, 1, TwistKindSl2::Half, Handedness::Right);
        let half2 = multi_twist_expansion_sl2(n, 2, TwistKindSl2::Half, Handedness::Right);
        let full1 = multi_twist_expansion_sl2(n, 1, TwistKindSl2::Full, Handedness::Right);
        let full1_sl3 = multi_twist_expansion_sl3(n, 1, Handedness::Right);
        for k in 0..=n {
            let h = twist_coeff_sl2(n, k, TwistKindSl2::Half, Handedness::Right).unwrap();
            let f = twist_coeff_sl2(n, k, TwistKindSl2::Full, Handedness::Right).unwrap();
            assert_eq!(half1.coefficient(k), h, "m-half(1) n={n} k={k}");
            assert_eq!(half2.coefficient(k), f, "m-half(2) n={n} k={k}");
            assert_eq!(full1.coefficient(k), f, "m-full(1) n={n} k={k}");
            let f3 = twist_coeff_sl3(n, k, TwistKindSl3::Full, Handedness::Right).unwrap();
            assert_eq!(full1_sl3.coefficient(k), f3, "sl3 m-full(1) n={n} k={k}");
            let hp = twist_coeff_sl3(n, k, TwistKindSl3::HalfPos, Handedness::Right).unwrap();
            let hn = twist_coeff_sl3(n, k, TwistKindSl3::HalfNeg, Handedness::Right).unwrap();
            assert_eq!(hp, hn.substitute_inverse(), "sl3 half inversion n={n} k={k}");
            let hl = twist_coeff_sl2(n, k, TwistKindSl2::Half, Handedness::Left).unwrap();
            assert_eq!(hl, h.substitute_inverse(), "left hand n={n} k={k}");
        }
    }
}

#[test]
fn dp_matches_chain_enumeration() {
    for (n, m) in [(3u32, 3u32), (4, 2), (2, 4), (5, 1), (0, 3)] {
        for kind in [TwistKindSl2::Half, TwistKindSl2::Full] {
            let dp = multi_twist_expansion_sl2(n, m, kind, Handedness::Right);
            let chain = multi_twist_expansion_sl2_chains(n, m, kind, Handedness::Right);
            assert_eq!(dp, chain, "n={n} m={m} kind={kind:?}");
        }
    }
}

#[test]
fn bubble_coefficient_examples() {
    assert_eq!(
        bubble_coeff(Algebra::Sl2, 1, 1, 1, 1, 1).unwrap(),
        rf_poly(quantum_integer(2)).neg()
    );
    assert_eq!(
        bubble_coeff(Algebra::Sl3, 1, 1, 1, 1, 1).unwrap(),
        rf_poly(quantum_integer(3))
    );
    // Zero outside the t-range; error outside the argument range.
    assert!(bubble_coeff(Algebra::Sl2, 2, 2, 1, 1, 0).unwrap().is_zero());
    assert!(bubble_coeff(Algebra::Sl2, 3, 3, 2, 2, 1).unwrap().is_zero());
    assert!(bubble_coeff(Algebra::Sl2, 2, 2, 3, 1, 1).is_err());
    // Symmetry in k ↔ l.
    for t in 2..=3u32 {
        assert_eq!(
            bubble_coeff(Algebra::Sl2, 3, 3, 2, 1, t).unwrap(),
            bubble_coeff(Algebra::Sl2, 3, 3, 1, 2, t).unwrap()
        );
    }
}

#[test]
fn bubble_vs_oracle_small() {
    // Gram-pairing check at reduced scale (full ranges in acceptance).
    for n in 0..=2usize {
        for m in 0..=2usize {
            for k in 0..=n.min(m) {
                for l in 0..=n.min(m) {
                    let t_lo = k.max(l);
                    let t_hi = (k + l).min(n).min(m);
                    let b1 = bubble_a1(n, m, k, l);
                    let b2 = bubble_a2(n, m, k, l);
                    for s in t_lo..=t_hi {
                        let sbar = sigma_bar_a1(n, m, k, l, s);
                        let lhs1 = trace_close_tl(&tl_compose(&b1, &sbar).unwrap());
                        let sig_s2 = sigma_a2(n, m, k, l, s);
                        let lhs2 = glue_elements_scalar(&b2, &sig_s2).unwrap();
                        let mut rhs1 = RationalFunction::zero();
                        let mut rhs2 = RationalFunction::zero();
                        for t in t_lo..=t_hi {
                            let c1 = bubble_coeff(
                                Algebra::Sl2,
                                n as u32,
                                m as u32,
                                k as u32,
                                l as u32,
                                t as u32,
                            )
                            .unwrap();
                            let c2 = bubble_coeff(
                                Algebra::Sl3,
                                n as u32,
                                m as u32,
                                k as u32,
                                l as u32,
                                t as u32,
                            )
                            .unwrap();
                            let g1 = trace_close_tl(
                                &tl_compose(&sigma_a1(n, m, k, l, t), &sbar).unwrap(),
                            );
                            let g2 = glue_elements_scalar(&sigma_a2(n, m, k, l, t), &sig_s2)
                                .unwrap();
                            rhs1 = rhs1.add(&c1.mul(&g1));
                            rhs2 = rhs2.add(&c2.mul(&g2));
                        }
                        assert_eq!(lhs1, rhs1, "A1 bubble n={n} m={m} k={k} l={l} s={s}");
                        assert_eq!(lhs2, rhs2, "A2 bubble n={n} m={m} k={k} l={l} s={s}");
                    }
                }
            }
        }
    }
}

#[test]
fn slide_and_closure_scalars() {
    // Slide scalars at k = n are trivial.
    for n in 0..=5u32 {
        assert_eq!(
            slide_scalar(Algebra::Sl2, n, n).unwrap(),
            RationalFunction::one()
        );
        assert_eq!(
            slide_scalar(Algebra::Sl3, n, n).unwrap(),
            RationalFunction::one()
        );
        // Closure at K = n is trivial.
        assert_eq!(
            closure_scalar(Algebra::Sl2, n, n).unwrap(),
            RationalFunction::one()
        );
        assert_eq!(
            closure_scalar(Algebra::Sl3, n, n).unwrap(),
            RationalFunction::one()
        );
    }
    // Closure at K = 0 recovers the full loop ratio.
    let c = closure_scalar(Algebra::Sl2, 2, 0).unwrap();
    let expect = rf_poly(quantum_integer(3))
        .div(&rf_poly(quantum_integer(1)))
        .unwrap();
    // (−1)^2 q^{−1} (1−q^3)/(1−q) = q^{−1}(1+q+q^2) = [3].
    assert_eq!(c, expect);
    assert!(closure_scalar(Algebra::Sl2, 2, 3).is_err());
}
