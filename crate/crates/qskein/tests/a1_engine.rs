//! Temperley–Lieb engine tests: loop rules, crossing relations, and the
//! Jones–Wenzl projectors.

mod common;

use common::*;
use qskein::a1_skein::*;
use qskein::jones_2bridge::Algebra;
use qskein::laurent::RationalFunction;
use qskein::qcombinatorics::quantum_integer;
use qskein::twist_formulas::{clasp_scalar, ClaspScalarKind, Handedness};

#[test]
fn loop_rules() {
    assert_eq!(loop_value(), rf_poly(quantum_integer(2)).neg());
    // cap ∘ cup = one loop = −[2].
    let circle = tl_compose(&nested_cups_tl(1), &nested_caps_tl(1)).unwrap();
    assert_eq!(circle.scalar(), loop_value());
    // e ∘ e = −[2]·e for the hook.
    let e = TLElement::hook();
    assert_eq!(tl_compose(&e, &e).unwrap(), e.scale(&loop_value()));
    // k disjoint circles.
    for k in 1..=4usize {
        let mut word = CompositionWord { layers: Vec::new() };
        for _ in 0..k {
            word.layers.push(Layer::Cup { position: 0 });
            word.layers.push(Layer::Cap { position: 0 });
        }
        let mut expect = RationalFunction::one();
        for _ in 0..k {
            expect = expect.mul(&loop_value());
        }
        assert_eq!(evaluate_closed_sl2(&word).unwrap(), expect);
    }
}

#[test]
fn crossing_relations() {
    // Reidemeister II.
    let r2 = tl_compose(&crossing_expand(true), &crossing_expand(false)).unwrap();
    assert_eq!(r2, TLElement::identity(2));
    // Reidemeister III.
    let pos = |i: usize| crossing_at(3, i, true);
    let lhs = chain_compose(&[pos(0), pos(1), pos(0)]);
    let rhs = chain_compose(&[pos(1), pos(0), pos(1)]);
    assert_eq!(lhs, rhs);
    // Positive curl: cap off one side of a positive crossing → −q^{3/4}·strand.
    // (side closure: the crossing's left strand is traced around the cup,
    // so the identity smoothing forms the loop)
    let curl = chain_compose(&[
        mid_cups_tl(0, 1, 1),
        crossing_at(3, 1, true),
        mid_caps_tl(0, 1, 1),
    ]);
    assert_eq!(curl, TLElement::identity(1).scale(&q_t(9).neg()));
    // Mirror symmetry of the coefficients.
    let minus = crossing_expand(false);
    for (m, c) in crossing_expand(true).iter_terms() {
        let mirrored = minus
            .iter_terms()
            .find(|(m2, _)| *m2 == m)
            .map(|(_, c2)| c2.clone())
            .unwrap();
        assert_eq!(c.substitute_inverse(), mirrored);
    }
}

#[test]
fn jones_wenzl_suite_small() {
    for n in 1..=4usize {
        let p = jones_wenzl(n);
        assert_eq!(tl_compose(&p, &p).unwrap(), p, "idempotence n={n}");
        for i in 0..n.saturating_sub(1) {
            let capped = tl_compose(&p, &mid_caps_tl(i, 1, n - i - 2)).unwrap();
            assert_eq!(capped.num_terms(), 0, "turnback n={n} i={i}");
        }
        let trace = trace_close_tl(&p);
        let expect = rf_poly(quantum_integer(n as i64 + 1));
        let expect = if n % 2 != 0 { expect.neg() } else { expect };
        assert_eq!(trace, expect, "trace n={n}");
    }
}

#[test]
fn clasp_crossing_eigenvalues_small() {
    for n in 2..=4usize {
        let base = bent_clasp_tl(n);
        for k in 1..n {
            for positive in [true, false] {
                let mut braided = base.clone();
                for r in 0..k {
                    for i in 0..(n - k) {
                        braided =
                            tl_compose(&braided, &crossing_at(2 * n, (k - 1 - r) + i, positive))
                                .unwrap();
                    }
                }
                let handed = if positive {
                    Handedness::Right
                } else {
                    Handedness::Left
                };
                let lambda = clasp_scalar(
                    Algebra::Sl2,
                    ClaspScalarKind::Crossing,
                    n as u32,
                    k as u32,
                    handed,
                )
                .unwrap();
                assert_eq!(
                    braided,
                    base.scale(&lambda),
                    "eigenvalue n={n} k={k} positive={positive}"
                );
            }
        }
    }
}

#[test]
fn clasp_partial_trace_and_curl() {
    // Partial trace of one strand: cap the last strand of P_n around.
    for n in 2..=4usize {
        let p = jones_wenzl(n);
        // id_{n−1} ⊗ cup, then p ⊗ id, then id ⊗ cap: closes strand n−1.
        let closed = chain_compose(&[
            mid_cups_tl(n - 1, 1, 0),
            tl_tensor(&p, &TLElement::identity(1)),
            mid_caps_tl(n - 1, 1, 0),
        ]);
        let lambda = clasp_scalar(
            Algebra::Sl2,
            ClaspScalarKind::PartialTrace,
            n as u32,
            1,
            Handedness::Right,
        )
        .unwrap();
        assert_eq!(closed, jones_wenzl(n - 1).scale(&lambda), "partial trace n={n}");
    }
    // Clasped curl on one strand (n = 1): positive curl scalar −q^{3/4}.
    let lambda = clasp_scalar(Algebra::Sl2, ClaspScalarKind::Curl, 1, 0, Handedness::Right)
        .unwrap();
    assert_eq!(lambda, q_t(9).neg());
}
