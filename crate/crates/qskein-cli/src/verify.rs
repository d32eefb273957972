//! `qskein verify`: formula-vs-oracle suites at configurable scale.
//!
//! Each suite emits a machine-readable report (one entry per grouped check)
//! on stdout and PASS/FAIL lines on stderr. A failing check names the first
//! failing instance. Exit code 0 iff every check passes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qskein::a1_skein::*;
use qskein::a2_skein::*;
use qskein::diagrams::*;
use qskein::jones_2bridge::*;
use qskein::laurent::{LaurentPoly, RationalFunction};
use qskein::qcombinatorics::*;
use qskein::twist_formulas::*;

use num_bigint::BigInt;

use crate::SuiteArg;

struct Report {
    checks: Vec<(String, Result<(), String>)>,
}

impl Report {
    fn new() -> Report {
        Report { checks: Vec::new() }
    }

    fn group(&mut self, name: &str, run: impl FnOnce() -> Result<(), String>) {
        let outcome = run();
        match &outcome {
            Ok(()) => eprintln!("PASS {name}"),
            Err(d) => eprintln!("FAIL {name}: {d}"),
        }
        self.checks.push((name.to_string(), outcome));
    }

    fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, r)| r.is_ok())
    }

    fn to_json(&self, suite: &str, max_n: u32, seed: u64, max_terms: usize) -> serde_json::Value {
        let checks: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|(name, r)| match r {
                Ok(()) => serde_json::json!({"name": name, "pass": true}),
                Err(d) => serde_json::json!({"name": name, "pass": false, "detail": d}),
            })
            .collect();
        serde_json::json!({
            "suite": suite,
            "max_n": max_n,
            "seed": seed,
            "max_terms": max_terms,
            "checks": checks,
            "passed": self.checks.iter().filter(|(_, r)| r.is_ok()).count(),
            "failed": self.checks.iter().filter(|(_, r)| r.is_err()).count(),
        })
    }
}

fn ensure(cond: bool, instance: impl Fn() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(instance())
    }
}

pub fn cmd_verify(suite: SuiteArg, max_n: Option<u32>, seed: u64, max_terms: usize) -> u8 {
    let (name, default_n) = match suite {
        SuiteArg::Qident => ("qident", 10),
        SuiteArg::Jw => ("jw", 4),
        SuiteArg::Clasp => ("clasp", 2),
        SuiteArg::Twist => ("twist", 6),
        SuiteArg::Bubble => ("bubble", 2),
        SuiteArg::Jones => ("jones", 2),
    };
    let max_n = max_n.unwrap_or(default_n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let report = match suite {
        SuiteArg::Qident => suite_qident(max_n, &mut rng),
        SuiteArg::Jw => suite_jw(max_n),
        SuiteArg::Clasp => suite_clasp(max_n, max_terms),
        SuiteArg::Twist => suite_twist(max_n, &mut rng),
        SuiteArg::Bubble => suite_bubble(max_n),
        SuiteArg::Jones => suite_jones(max_n, max_terms),
    };
    let json = report.to_json(name, max_n, seed, max_terms);
    println!("{}", serde_json::to_string(&json).unwrap());
    if report.all_pass() {
        0
    } else {
        crate::EXIT_VERIFY_FAILED
    }
}

// ---------------------------------------------------------------------------
// qident: quantum-integer and q-binomial identities
// ---------------------------------------------------------------------------

fn three_term_pair(a: i64, b: i64, c: i64) -> Result<(), String> {
    let diff_lhs = quantum_integer(a)
        .mul(&quantum_integer(b))
        .sub(&quantum_integer(a - c).mul(&quantum_integer(b - c)));
    let diff_rhs = quantum_integer(a + b - c).mul(&quantum_integer(c));
    ensure(diff_lhs == diff_rhs, || {
        format!("difference form at a={a} b={b} c={c}")
    })?;
    let ex_lhs = quantum_integer(a)
        .mul(&quantum_integer(b - c))
        .add(&quantum_integer(c).mul(&quantum_integer(a - b)));
    let ex_rhs = quantum_integer(b).mul(&quantum_integer(a - c));
    ensure(ex_lhs == ex_rhs, || {
        format!("exchange form at a={a} b={b} c={c}")
    })
}

fn suite_qident(max_n: u32, rng: &mut ChaCha8Rng) -> Report {
    let n = max_n as i64;
    let mut r = Report::new();
    r.group("quantum-integer product expansion", || {
        for a in 1..=n {
            for b in 1..=n {
                let lhs = quantum_integer(a).mul(&quantum_integer(b));
                let mut sum = LaurentPoly::zero();
                for i in 1..=a {
                    sum = sum.add(&quantum_integer(a + b - (2 * i - 1)));
                }
                ensure(lhs == sum, || format!("a={a} b={b}"))?;
            }
        }
        Ok(())
    });
    r.group("three-term identities (exhaustive cube)", || {
        let cube = n.min(6);
        for a in -cube..=cube {
            for b in -cube..=cube {
                for c in -cube..=cube {
                    three_term_pair(a, b, c)?;
                }
            }
        }
        Ok(())
    });
    r.group("three-term identities (randomized)", || {
        for _ in 0..200 {
            let a = rng.gen_range(-3 * n..=3 * n);
            let b = rng.gen_range(-3 * n..=3 * n);
            let c = rng.gen_range(-3 * n..=3 * n);
            three_term_pair(a, b, c)?;
        }
        Ok(())
    });
    r.group("factorial and binomial transformations", || {
        let t_pow = |e: i64| LaurentPoly::monomial(e, BigInt::from(1));
        for k in 0..=max_n {
            let ki = k as i64;
            let (brace_fact, _) = quantum_factorials(k);
            let mut rhs = t_pow(-3 * ki * (ki + 1)).mul(&pochhammer(k));
            if k % 2 != 0 {
                rhs = rhs.neg();
            }
            ensure(brace_fact == rhs, || format!("{{k}}! form at k={k}"))?;
            let mut rhs = t_pow(6 * ki * (ki + 1)).mul(&pochhammer(k).substitute_inverse());
            if k % 2 != 0 {
                rhs = rhs.neg();
            }
            ensure(pochhammer(k) == rhs, || format!("(q;q)_k inversion at k={k}"))?;
            for nn in k..=max_n {
                let ni = nn as i64;
                ensure(
                    bracket_binomial(nn, ki) == t_pow(-6 * (ni - ki) * ki).mul(&gauss_binomial(nn, ki)),
                    || format!("bracket/gauss bridge at n={nn} k={k}"),
                )?;
                ensure(
                    gauss_binomial(nn, ki)
                        == t_pow(-12 * (ki * ki - ni * ki))
                            .mul(&gauss_binomial(nn, ki).substitute_inverse()),
                    || format!("gauss inversion at n={nn} k={k}"),
                )?;
            }
        }
        Ok(())
    });
    r.group("partition-box generating identity", || {
        let cap = max_n.min(8);
        for k in 0..=cap {
            for l in 0..=cap {
                ensure(
                    partition_box_sum(k, l) == gauss_binomial(k + l, k as i64),
                    || format!("k={k} l={l}"),
                )?;
            }
        }
        Ok(())
    });
    r
}

// ---------------------------------------------------------------------------
// jw: Jones-Wenzl projector axioms and crossing eigenvalues
// ---------------------------------------------------------------------------

fn suite_jw(max_n: u32) -> Report {
    let max_n = max_n as usize;
    let mut r = Report::new();
    r.group("projector idempotence", || {
        for n in 1..=max_n {
            let p = jones_wenzl(n);
            ensure(tl_compose(&p, &p).unwrap() == p, || format!("n={n}"))?;
        }
        Ok(())
    });
    r.group("turnback annihilation", || {
        for n in 2..=max_n {
            let p = jones_wenzl(n);
            for i in 0..n - 1 {
                let capped = tl_compose(&p, &mid_caps_tl(i, 1, n - i - 2)).unwrap();
                ensure(capped.num_terms() == 0, || format!("n={n} i={i}"))?;
            }
        }
        Ok(())
    });
    r.group("Markov trace", || {
        for n in 1..=max_n {
            let trace = trace_close_tl(&jones_wenzl(n));
            let mut expect = rf_poly(quantum_integer(n as i64 + 1));
            if n % 2 != 0 {
                expect = expect.neg();
            }
            ensure(trace == expect, || format!("n={n}"))?;
        }
        Ok(())
    });
    r.group("crossing eigenvalues", || {
        for n in 2..=max_n {
            let p = jones_wenzl(n);
            for k in 1..n {
                for positive in [true, false] {
                    let mut braided = p.clone();
                    for rr in 0..k {
                        for i in 0..(n - k) {
                            braided =
                                tl_compose(&braided, &crossing_at(n, (k - 1 - rr) + i, positive))
                                    .unwrap();
                        }
                    }
                    let exp = 3 * (k as i64) * ((n - k) as i64);
                    let lambda = if positive { q_t(exp) } else { q_t(-exp) };
                    ensure(braided == p.scale(&lambda), || {
                        format!("n={n} k={k} positive={positive}")
                    })?;
                }
            }
        }
        Ok(())
    });
    r
}

// ---------------------------------------------------------------------------
// clasp: A2 clasp axioms
// ---------------------------------------------------------------------------

fn suite_clasp(max_n: u32, max_terms: usize) -> Report {
    let max_n = max_n as usize;
    let mut r = Report::new();
    let clasp = |n: usize| a2_clasp_capped(n, max_terms).map_err(|e| format!("clasp n={n}: {e}"));
    r.group("clasp idempotence", || {
        for n in 1..=max_n {
            let base = clasp(n)?;
            let mut twice = base.clone();
            twice
                .apply_layer(WebLayer::Clasp {
                    position: 0,
                    strands: n,
                })
                .map_err(|e| format!("n={n}: {e}"))?;
            ensure(twice.equals(&base), || format!("n={n}"))?;
        }
        Ok(())
    });
    r.group("Y-annihilation", || {
        for n in 2..=max_n {
            let base = clasp(n)?;
            for p in 0..n - 1 {
                let mut y = base.clone();
                y.apply_layer(WebLayer::Vertex {
                    position: p,
                    consume: 2,
                    kind: VertexKind::Sink,
                })
                .map_err(|e| format!("n={n} p={p}: {e}"))?;
                ensure(y.num_terms() == 0, || format!("n={n} p={p}"))?;
            }
        }
        Ok(())
    });
    r.group("colored loop value", || {
        for n in 1..=max_n {
            let mut closed = clasp(n)?;
            for i in (0..n).rev() {
                closed
                    .apply_layer(WebLayer::Cap { position: i })
                    .map_err(|e| format!("n={n}: {e}"))?;
            }
            ensure(closed.scalar() == colored_loop_value_sl3(n), || format!("n={n}"))?;
        }
        Ok(())
    });
    r.group("crossing eigenvalues", || {
        for n in 2..=max_n {
            let base = clasp(n)?;
            for k in 1..n {
                for positive in [true, false] {
                    let mut braided = base.clone();
                    for rr in 0..k {
                        for i in 0..(n - k) {
                            braided
                                .apply_layer(WebLayer::Crossing {
                                    position: (k - 1 - rr) + i,
                                    positive,
                                })
                                .map_err(|e| format!("n={n} k={k}: {e}"))?;
                        }
                    }
                    let exp = 4 * (k as i64) * ((n - k) as i64);
                    let lambda = if positive { q_t(exp) } else { q_t(-exp) };
                    let mut expect = base.clone();
                    expect.scale(&lambda);
                    ensure(braided.equals(&expect), || {
                        format!("n={n} k={k} positive={positive}")
                    })?;
                }
            }
        }
        Ok(())
    });
    r.group("colored trivalent vertex pairing", || {
        for n in 1..=max_n {
            let e = colored_vertex_capped(ColoredVertexKind::Trivalent, n, 0, max_terms)
                .map_err(|e| format!("n={n}: {e}"))?;
            let s = glue_element_scalar(&e, &honeycomb_source(n))
                .map_err(|e| format!("n={n}: {e}"))?;
            let expect = rf_poly(quantum_integer(n as i64 + 1)).mul(&colored_loop_value_sl3(n));
            ensure(s == expect, || format!("n={n}"))?;
        }
        Ok(())
    });
    r
}

// ---------------------------------------------------------------------------
// twist: closed-form twist coefficient consistency
// ---------------------------------------------------------------------------

fn suite_twist(max_n: u32, rng: &mut ChaCha8Rng) -> Report {
    let mut r = Report::new();
    r.group("multi-twist reductions (m = 1, 2)", || {
        for n in 0..=max_n {
            let half1 = multi_twist_expansion_sl2(n, 1, TwistKindSl2::Half, Handedness::Right);
            let half2 = multi_twist_expansion_sl2(n, 2, TwistKindSl2::Half, Handedness::Right);
            let full1 = multi_twist_expansion_sl2(n, 1, TwistKindSl2::Full, Handedness::Right);
            let full1_sl3 = multi_twist_expansion_sl3(n, 1, Handedness::Right);
            for k in 0..=n {
                let h = twist_coeff_sl2(n, k, TwistKindSl2::Half, Handedness::Right).unwrap();
                let f = twist_coeff_sl2(n, k, TwistKindSl2::Full, Handedness::Right).unwrap();
                ensure(half1.coefficient(k) == h, || format!("m-half(1) n={n} k={k}"))?;
                ensure(half2.coefficient(k) == f, || format!("m-half(2) n={n} k={k}"))?;
                ensure(full1.coefficient(k) == f, || format!("m-full(1) n={n} k={k}"))?;
                let f3 = twist_coeff_sl3(n, k, TwistKindSl3::Full, Handedness::Right).unwrap();
                ensure(full1_sl3.coefficient(k) == f3, || {
                    format!("sl3 m-full(1) n={n} k={k}")
                })?;
                let hp = twist_coeff_sl3(n, k, TwistKindSl3::HalfPos, Handedness::Right).unwrap();
                let hn = twist_coeff_sl3(n, k, TwistKindSl3::HalfNeg, Handedness::Right).unwrap();
                ensure(hp == hn.substitute_inverse(), || {
                    format!("sl3 half inversion n={n} k={k}")
                })?;
            }
        }
        Ok(())
    });
    r.group("DP vs literal chain enumeration (randomized)", || {
        for _ in 0..6 {
            let n = rng.gen_range(0..=max_n.min(5));
            let m = rng.gen_range(0..=4u32);
            for kind in [TwistKindSl2::Half, TwistKindSl2::Full] {
                let dp = multi_twist_expansion_sl2(n, m, kind, Handedness::Right);
                let chain = multi_twist_expansion_sl2_chains(n, m, kind, Handedness::Right);
                ensure(dp == chain, || format!("n={n} m={m} kind={kind:?}"))?;
            }
        }
        Ok(())
    });
    r.group("region-transfer internal cross-check", || {
        for algebra in [Algebra::Sl2, Algebra::Sl3] {
            for a in [-3i64, -1, 1, 2, 3] {
                for big_k in 0..=3u32 {
                    let w = region_transfer(algebra, big_k, a)
                        .map_err(|e| format!("{algebra:?} K={big_k} a={a}: {e}"))?;
                    ensure(w.len() == big_k as usize + 1, || {
                        format!("{algebra:?} K={big_k} a={a}: wrong length")
                    })?;
                }
            }
        }
        Ok(())
    });
    r
}

// ---------------------------------------------------------------------------
// bubble: closed-form bubble coefficients vs diagram oracles
// ---------------------------------------------------------------------------

fn bubble_check_a1(n: usize, m: usize, k: usize, l: usize) -> Result<(), String> {
    let t_lo = k.max(l);
    let t_hi = (k + l).min(n).min(m);
    let b = bubble_a1(n, m, k, l);
    for s in t_lo..=t_hi {
        let sbar = sigma_bar_a1(n, m, k, l, s);
        let lhs = trace_close_tl(&tl_compose(&b, &sbar).unwrap());
        let mut rhs = RationalFunction::zero();
        for t in t_lo..=t_hi {
            let c = bubble_coeff(Algebra::Sl2, n as u32, m as u32, k as u32, l as u32, t as u32)
                .unwrap();
            let g = trace_close_tl(&tl_compose(&sigma_a1(n, m, k, l, t), &sbar).unwrap());
            rhs = rhs.add(&c.mul(&g));
        }
        if lhs != rhs {
            return Err(format!("A1 n={n} m={m} k={k} l={l} s={s}"));
        }
    }
    Ok(())
}

fn bubble_check_a2(n: usize, m: usize, k: usize, l: usize) -> Result<(), String> {
    let t_lo = k.max(l);
    let t_hi = (k + l).min(n).min(m);
    let b = bubble_a2(n, m, k, l);
    for s in t_lo..=t_hi {
        let sig_s = sigma_a2(n, m, k, l, s);
        let lhs = glue_elements_scalar(&b, &sig_s).unwrap();
        let mut rhs = RationalFunction::zero();
        for t in t_lo..=t_hi {
            let c = bubble_coeff(Algebra::Sl3, n as u32, m as u32, k as u32, l as u32, t as u32)
                .unwrap();
            let g = glue_elements_scalar(&sigma_a2(n, m, k, l, t), &sig_s).unwrap();
            rhs = rhs.add(&c.mul(&g));
        }
        if lhs != rhs {
            return Err(format!("A2 n={n} m={m} k={k} l={l} s={s}"));
        }
    }
    Ok(())
}

fn suite_bubble(max_n: u32) -> Report {
    let mut r = Report::new();
    let a1_cap = max_n as usize;
    r.group("A1 bubble expansion vs Temperley-Lieb oracle", || {
        for n in 0..=a1_cap {
            for m in 0..=a1_cap {
                for k in 0..=n.min(m) {
                    for l in 0..=n.min(m) {
                        bubble_check_a1(n, m, k, l)?;
                    }
                }
            }
        }
        Ok(())
    });
    // The A2 oracle cost grows steeply with the clasp size; cap at 2.
    let a2_cap = (max_n as usize).min(2);
    r.group("A2 bubble expansion vs web oracle (n, m <= min(max_n, 2))", || {
        for n in 0..=a2_cap {
            for m in 0..=a2_cap {
                for k in 0..=n.min(m) {
                    for l in 0..=n.min(m) {
                        bubble_check_a2(n, m, k, l)?;
                    }
                }
            }
        }
        Ok(())
    });
    r
}

// ---------------------------------------------------------------------------
// jones: 2-bridge invariant corpus vs brute-force oracles
// ---------------------------------------------------------------------------

fn suite_jones(max_n: u32, max_terms: usize) -> Report {
    let mut r = Report::new();
    r.group("sl2 corpus vs Temperley-Lieb oracle", || {
        for entries in SL2_SPECS {
            let s = spec(entries);
            for n in 0..=max_n {
                let oracle = oracle_bracket_two_bridge_sl2_capped(&s, n as usize, max_terms)
                    .map_err(|e| format!("sl2 {entries:?} n={n}: oracle: {e}"))?;
                let formula = colored_jones(&s, n, Algebra::Sl2)
                    .map_err(|e| format!("sl2 {entries:?} n={n}: formula: {e}"))?;
                ensure(
                    oracle == RationalFunction::from_poly(formula.polynomial),
                    || format!("sl2 {entries:?} n={n}"),
                )?;
            }
        }
        Ok(())
    });
    let sl3_cap = max_n.min(2);
    r.group("sl3 corpus vs web oracle (n <= min(max_n, 2))", || {
        for entries in SL3_SPECS {
            let s = spec(entries);
            for n in 0..=sl3_cap {
                let oracle = oracle_bracket_two_bridge_sl3_capped(&s, n as usize, max_terms)
                    .map_err(|e| format!("sl3 {entries:?} n={n}: oracle: {e}"))?;
                let formula = colored_jones(&s, n, Algebra::Sl3)
                    .map_err(|e| format!("sl3 {entries:?} n={n}: formula: {e}"))?;
                ensure(
                    oracle == RationalFunction::from_poly(formula.polynomial),
                    || format!("sl3 {entries:?} n={n}"),
                )?;
            }
        }
        Ok(())
    });
    r.group("mirror symmetry", || {
        for (corpus, algebra, cap) in [
            (SL2_SPECS, Algebra::Sl2, max_n),
            (SL3_SPECS, Algebra::Sl3, sl3_cap),
        ] {
            for entries in corpus {
                let s = spec(entries);
                for n in 0..=cap {
                    let j = colored_jones(&s, n, algebra)
                        .map_err(|e| format!("{algebra:?} {entries:?} n={n}: {e}"))?
                        .polynomial;
                    let jm = colored_jones(&s.mirror(), n, algebra)
                        .map_err(|e| format!("{algebra:?} mirror {entries:?} n={n}: {e}"))?
                        .polynomial;
                    ensure(jm == j.substitute_inverse(), || {
                        format!("{algebra:?} {entries:?} n={n}")
                    })?;
                }
            }
        }
        Ok(())
    });
    r.group("sl2 specialization at q = 1", || {
        for entries in SL2_SPECS {
            let s = spec(entries);
            let c = s.component_count();
            for n in 0..=max_n {
                let j = colored_jones(&s, n, Algebra::Sl2)
                    .map_err(|e| format!("{entries:?} n={n}: {e}"))?
                    .polynomial;
                let v = j.eval_at_one();
                let expect = BigInt::from(n + 1).pow(c as u32 - 1);
                ensure(v == expect || v == -expect.clone(), || {
                    format!("{entries:?} n={n}: got {v}, want +-{expect}")
                })?;
            }
        }
        Ok(())
    });
    r
}
