//! Acceptance suite: the ten headline criteria, one test (and one pass/fail
//! line) each, at full documented scale.

mod common;

use common::*;
use qskein::a1_skein::*;
use qskein::a2_skein::*;
use qskein::jones_2bridge::*;
use qskein::laurent::{LaurentPoly, RationalFunction};
use qskein::qcombinatorics::*;
use qskein::twist_formulas::*;

use num_bigint::BigInt;
use std::time::Instant;

fn finish(name: &str, start: Instant, limit_secs: u64) {
    let elapsed = start.elapsed();
    eprintln!("PASS {name} ({elapsed:.2?})");
    assert!(
        elapsed.as_secs() < limit_secs,
        "{name} exceeded the {limit_secs}s budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_q_identity_suite() {
    let start = Instant::now();
    // Quantum-integer product identities.
    for a in 1..=10i64 {
        for b in 1..=10i64 {
            let lhs = quantum_integer(a).mul(&quantum_integer(b));
            let mut sum = LaurentPoly::zero();
            for i in 1..=a {
                sum = sum.add(&quantum_integer(a + b - (2 * i - 1)));
            }
            assert_eq!(lhs, sum, "product identity a={a} b={b}");
        }
    }
    for a in -10..=10i64 {
        for b in -10..=10i64 {
            for c in -10..=10i64 {
                assert_eq!(
                    quantum_integer(a)
                        .mul(&quantum_integer(b))
                        .sub(&quantum_integer(a - c).mul(&quantum_integer(b - c))),
                    quantum_integer(a + b - c).mul(&quantum_integer(c)),
                    "three-term identity (2) a={a} b={b} c={c}"
                );
                assert_eq!(
                    quantum_integer(a)
                        .mul(&quantum_integer(b - c))
                        .add(&quantum_integer(c).mul(&quantum_integer(a - b))),
                    quantum_integer(b).mul(&quantum_integer(a - c)),
                    "three-term identity (3) a={a} b={b} c={c}"
                );
            }
        }
    }
    // The four transformation formulas.
    let t_pow = |e: i64| LaurentPoly::monomial(e, BigInt::from(1));
    for k in 0..=10u32 {
        let ki = k as i64;
        let (brace_fact, _) = quantum_factorials(k);
        let mut rhs = t_pow(-3 * ki * (ki + 1)).mul(&pochhammer(k));
        if k % 2 != 0 {
            rhs = rhs.neg();
        }
        assert_eq!(brace_fact, rhs, "{{k}}! transformation at k={k}");
        let mut rhs = t_pow(6 * ki * (ki + 1)).mul(&pochhammer(k).substitute_inverse());
        if k % 2 != 0 {
            rhs = rhs.neg();
        }
        assert_eq!(pochhammer(k), rhs, "(q;q)_k inversion at k={k}");
        for n in k..=10u32 {
            let ni = n as i64;
            assert_eq!(
                bracket_binomial(n, ki),
                t_pow(-6 * (ni - ki) * ki).mul(&gauss_binomial(n, ki)),
                "bracket/gauss bridge at n={n} k={k}"
            );
            assert_eq!(
                gauss_binomial(n, ki),
                t_pow(-12 * (ki * ki - ni * ki))
                    .mul(&gauss_binomial(n, ki).substitute_inverse()),
                "gauss binomial inversion at n={n} k={k}"
            );
        }
    }
    // Partition-box identity.
    for k in 0..=8u32 {
        for l in 0..=8u32 {
            assert_eq!(
                partition_box_sum(k, l),
                gauss_binomial(k + l, k as i64),
                "partition box at k={k} l={l}"
            );
        }
    }
    finish("criterion 1: q-identity suite", start, 5);
}

#[test]
fn criterion_02_jones_wenzl_suite() {
    let start = Instant::now();
    for n in 1..=6usize {
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
        // Crossing eigenvalues q^{±k(n−k)/4} on the clasped bundle: the
        // block-transposition braid absorbed into P_n acts by a scalar.
        for k in 1..n {
            for positive in [true, false] {
                let mut braided = p.clone();
                for r in 0..k {
                    for i in 0..(n - k) {
                        braided =
                            tl_compose(&braided, &crossing_at(n, (k - 1 - r) + i, positive))
                                .unwrap();
                    }
                }
                let exp = 3 * (k as i64) * ((n - k) as i64);
                let lambda = if positive { q_t(exp) } else { q_t(-exp) };
                assert_eq!(
                    braided,
                    p.scale(&lambda),
                    "eigenvalue n={n} k={k} positive={positive}"
                );
            }
        }
    }
    finish("criterion 2: Jones-Wenzl suite (n <= 6)", start, 60);
}

#[test]
fn criterion_03_a2_clasp_suite() {
    let start = Instant::now();
    for n in 1..=3usize {
        let base = bent_clasp_a2(n);
        let mut twice = base.clone();
        twice
            .apply_layer(WebLayer::Clasp {
                position: 0,
                strands: n,
            })
            .unwrap();
        assert!(twice.equals(&base), "idempotence n={n}");
        for p in 0..n.saturating_sub(1) {
            let mut y = base.clone();
            y.apply_layer(WebLayer::Vertex {
                position: p,
                consume: 2,
                kind: VertexKind::Sink,
            })
            .unwrap();
            assert_eq!(y.num_terms(), 0, "Y-annihilation n={n} p={p}");
        }
        let mut closed = base.clone();
        for i in (0..n).rev() {
            closed.apply_layer(WebLayer::Cap { position: i }).unwrap();
        }
        assert_eq!(closed.scalar(), colored_loop_value_sl3(n), "loop n={n}");
        for k in 1..n {
            for positive in [true, false] {
                let mut braided = base.clone();
                for r in 0..k {
                    for i in 0..(n - k) {
                        braided
                            .apply_layer(WebLayer::Crossing {
                                position: (k - 1 - r) + i,
                                positive,
                            })
                            .unwrap();
                    }
                }
                let exp = 4 * (k as i64) * ((n - k) as i64);
                let lambda = if positive { q_t(exp) } else { q_t(-exp) };
                let mut expect = base.clone();
                expect.scale(&lambda);
                assert!(
                    braided.equals(&expect),
                    "eigenvalue n={n} k={k} positive={positive}"
                );
            }
        }
        // Colored trivalent vertex paired with the dual honeycomb: scalar
        // [n+1] relative to the colored loop.
        let e = colored_vertex(ColoredVertexKind::Trivalent, n, 0).unwrap();
        let s = glue_element_scalar(&e, &honeycomb_source(n)).unwrap();
        let expect = rf_poly(quantum_integer(n as i64 + 1)).mul(&colored_loop_value_sl3(n));
        assert_eq!(s, expect, "colored trivalent vertex n={n}");
    }
    finish("criterion 3: A2 clasp suite (n <= 3)", start, 300);
}

#[test]
fn criterion_04_twist_formula_consistency() {
    let start = Instant::now();
    for n in 0..=6u32 {
        let half1 = multi_twist_expansion_sl2(n, 1, TwistKindSl2::Half, Handedness::Right);
        let half2 = multi_twist_expansion_sl2(n, 2, TwistKindSl2::Half, Handedness::Right);
        let full1 = multi_twist_expansion_sl2(n, 1, TwistKindSl2::Full, Handedness::Right);
        for k in 0..=n {
            let h = twist_coeff_sl2(n, k, TwistKindSl2::Half, Handedness::Right).unwrap();
            let f = twist_coeff_sl2(n, k, TwistKindSl2::Full, Handedness::Right).unwrap();
            assert_eq!(half1.coefficient(k), h, "m-half(1) n={n} k={k}");
            assert_eq!(half2.coefficient(k), f, "m-half(2) n={n} k={k}");
            assert_eq!(full1.coefficient(k), f, "m-full(1) n={n} k={k}");
            let hp = twist_coeff_sl3(n, k, TwistKindSl3::HalfPos, Handedness::Right).unwrap();
            let hn = twist_coeff_sl3(n, k, TwistKindSl3::HalfNeg, Handedness::Right).unwrap();
            assert_eq!(hp, hn.substitute_inverse(), "sl3 half inversion n={n} k={k}");
        }
    }
    // region_transfer internally asserts closed-sum = matrix-product and
    // fails with InternalMismatch on disagreement; run it over all corpus
    // regions and colors.
    for algebra in [Algebra::Sl2, Algebra::Sl3] {
        let corpus: &[&[i64]] = if algebra == Algebra::Sl2 {
            SL2_SPECS
        } else {
            SL3_SPECS
        };
        for entries in corpus {
            for &a in *entries {
                for big_k in 0..=3u32 {
                    region_transfer(algebra, big_k, a).unwrap();
                }
            }
        }
    }
    finish("criterion 4: twist-formula consistency", start, 60);
}

#[test]
fn criterion_05_bubble_expansions_vs_oracle() {
    let start = Instant::now();
    // A1, all n,m <= 3.
    for n in 0..=3usize {
        for m in 0..=3usize {
            for k in 0..=n.min(m) {
                for l in 0..=n.min(m) {
                    let b = bubble_a1(n, m, k, l);
                    let t_lo = k.max(l);
                    let t_hi = (k + l).min(n).min(m);
                    for s in t_lo..=t_hi {
                        let sbar = sigma_bar_a1(n, m, k, l, s);
                        let lhs = trace_close_tl(&tl_compose(&b, &sbar).unwrap());
                        let mut rhs = RationalFunction::zero();
                        for t in t_lo..=t_hi {
                            let c = bubble_coeff(
                                Algebra::Sl2,
                                n as u32,
                                m as u32,
                                k as u32,
                                l as u32,
                                t as u32,
                            )
                            .unwrap();
                            let g = trace_close_tl(
                                &tl_compose(&sigma_a1(n, m, k, l, t), &sbar).unwrap(),
                            );
                            rhs = rhs.add(&c.mul(&g));
                        }
                        assert_eq!(lhs, rhs, "A1 bubble n={n} m={m} k={k} l={l} s={s}");
                    }
                }
            }
        }
    }
    // A2, all n,m <= 2.
    for n in 0..=2usize {
        for m in 0..=2usize {
            for k in 0..=n.min(m) {
                for l in 0..=n.min(m) {
                    let b = bubble_a2(n, m, k, l);
                    let t_lo = k.max(l);
                    let t_hi = (k + l).min(n).min(m);
                    for s in t_lo..=t_hi {
                        let sig_s = sigma_a2(n, m, k, l, s);
                        let lhs = glue_elements_scalar(&b, &sig_s).unwrap();
                        let mut rhs = RationalFunction::zero();
                        for t in t_lo..=t_hi {
                            let c = bubble_coeff(
                                Algebra::Sl3,
                                n as u32,
                                m as u32,
                                k as u32,
                                l as u32,
                                t as u32,
                            )
                            .unwrap();
                            let g = glue_elements_scalar(&sigma_a2(n, m, k, l, t), &sig_s)
                                .unwrap();
                            rhs = rhs.add(&c.mul(&g));
                        }
                        assert_eq!(lhs, rhs, "A2 bubble n={n} m={m} k={k} l={l} s={s}");
                    }
                }
            }
        }
    }
    finish("criterion 5: bubble expansions vs oracle", start, 600);
}

#[test]
fn criterion_06_sl2_oracle_agreement() {
    let start = Instant::now();
    for entries in SL2_SPECS {
        let s = spec(entries);
        for n in 0..=3usize {
            let oracle = oracle_bracket_two_bridge_sl2(&s, n).unwrap();
            let formula = colored_jones(&s, n as u32, Algebra::Sl2).unwrap();
            assert_eq!(
                oracle,
                RationalFunction::from_poly(formula.polynomial),
                "sl2 {entries:?} n={n}"
            );
        }
    }
    finish("criterion 6: sl2 formula = oracle", start, 600);
}

#[test]
fn criterion_07_sl3_oracle_agreement() {
    let start = Instant::now();
    for entries in SL3_SPECS {
        let s = spec(entries);
        for n in 0..=2usize {
            let oracle = oracle_bracket_two_bridge_sl3(&s, n).unwrap();
            let formula = colored_jones(&s, n as u32, Algebra::Sl3).unwrap();
            assert_eq!(
                oracle,
                RationalFunction::from_poly(formula.polynomial),
                "sl3 {entries:?} n={n}"
            );
        }
    }
    finish("criterion 7: sl3 formula = oracle", start, 1800);
}

#[test]
fn criterion_08_mirror_symmetry() {
    let start = Instant::now();
    for (corpus, algebra, max_n) in [
        (SL2_SPECS, Algebra::Sl2, 3u32),
        (SL3_SPECS, Algebra::Sl3, 2u32),
    ] {
        for entries in corpus {
            let s = spec(entries);
            for n in 0..=max_n {
                let j = colored_jones(&s, n, algebra).unwrap().polynomial;
                let jm = colored_jones(&s.mirror(), n, algebra).unwrap().polynomial;
                assert_eq!(
                    jm,
                    j.substitute_inverse(),
                    "{algebra:?} {entries:?} n={n}"
                );
            }
        }
    }
    finish("criterion 8: mirror symmetry", start, 120);
}

#[test]
fn criterion_09_polynomiality_tripwire() {
    let start = Instant::now();
    for (corpus, algebra, max_n) in [
        (SL2_SPECS, Algebra::Sl2, 3u32),
        (SL3_SPECS, Algebra::Sl3, 2u32),
    ] {
        for entries in corpus {
            let s = spec(entries);
            for n in 0..=max_n {
                // colored_jones runs as_laurent internally and returns
                // NotPolynomial on any rational-function residue.
                let r = colored_jones(&s, n, algebra);
                assert!(r.is_ok(), "{algebra:?} {entries:?} n={n}: {r:?}");
            }
        }
    }
    finish("criterion 9: polynomiality tripwire", start, 120);
}

#[test]
fn criterion_10_sl2_specialization_at_one() {
    let start = Instant::now();
    for entries in SL2_SPECS {
        let s = spec(entries);
        let c = s.component_count();
        for n in 0..=3u32 {
            let j = colored_jones(&s, n, Algebra::Sl2).unwrap().polynomial;
            let v = j.eval_at_one();
            let expect = BigInt::from(n + 1).pow(c as u32 - 1);
            assert!(
                v == expect || v == -expect.clone(),
                "|J(q=1)| at {entries:?} n={n}: got {v}, want ±{expect}"
            );
        }
    }
    finish("criterion 10: sl2 specialization at q=1", start, 120);
}
