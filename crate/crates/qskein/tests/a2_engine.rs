//! Kuperberg web engine tests: local relations, curls, clasps and colored
//! vertices.

mod common;

use common::*;
use qskein::a2_skein::*;
use qskein::jones_2bridge::Algebra;
use qskein::qcombinatorics::quantum_integer;
use qskein::twist_formulas::{clasp_scalar, ClaspScalarKind, Handedness};

#[test]
fn local_relations() {
    // Circle = [3].
    let w = WebWord {
        layers: vec![
            WebLayer::Cup {
                position: 0,
                top_east: true,
            },
            WebLayer::Cap { position: 0 },
        ],
    };
    assert_eq!(evaluate_closed_sl3(&w).unwrap(), rf_poly(quantum_integer(3)));
    // Theta web (bigon between two vertices) = [2][3], built directly and
    // via cup + H + cap.
    let theta = rf_poly(quantum_integer(2).mul(&quantum_integer(3)));
    assert_eq!(web_reduce_closed(Web::theta()).unwrap(), theta);
    let w = WebWord {
        layers: vec![
            WebLayer::Cup {
                position: 0,
                top_east: true,
            },
            WebLayer::H { position: 0 },
            WebLayer::Cap { position: 0 },
        ],
    };
    assert_eq!(evaluate_closed_sl3(&w).unwrap(), theta);
    // Reidemeister II (antiparallel), both orders.
    for first in [true, false] {
        let w = WebWord {
            layers: vec![
                WebLayer::Cup {
                    position: 0,
                    top_east: true,
                },
                WebLayer::Crossing {
                    position: 0,
                    positive: first,
                },
                WebLayer::Crossing {
                    position: 0,
                    positive: !first,
                },
                WebLayer::Cap { position: 0 },
            ],
        };
        assert_eq!(
            evaluate_closed_sl3(&w).unwrap(),
            rf_poly(quantum_integer(3)),
            "R2 with first={first}"
        );
    }
}

#[test]
fn curl_values() {
    for positive in [true, false] {
        for top in [true, false] {
            let w = WebWord {
                layers: vec![
                    WebLayer::Cup {
                        position: 0,
                        top_east: top,
                    },
                    WebLayer::Crossing { position: 0, positive },
                    WebLayer::Cap { position: 0 },
                ],
            };
            let v = evaluate_closed_sl3(&w).unwrap();
            let curl = v.div(&rf_poly(quantum_integer(3))).unwrap();
            let handed = if positive {
                Handedness::Right
            } else {
                Handedness::Left
            };
            // Single-strand curl: q^{±(1+3)/3} = q^{±4/3}.
            let expect =
                clasp_scalar(Algebra::Sl3, ClaspScalarKind::Curl, 1, 0, handed).unwrap();
            assert_eq!(curl, expect, "curl positive={positive} top={top}");
        }
    }
}

#[test]
fn clasp_suite_small() {
    for n in 2..=2usize {
        let base = bent_clasp_a2(n);
        let mut twice = base.clone();
        twice
            .apply_layer(WebLayer::Clasp {
                position: 0,
                strands: n,
            })
            .unwrap();
        assert!(twice.equals(&base), "idempotence n={n}");
        for p in 0..n - 1 {
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
    }
}

#[test]
fn clasp_crossing_eigenvalues_small() {
    let n = 2usize;
    let base = bent_clasp_a2(n);
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
            let handed = if positive {
                Handedness::Right
            } else {
                Handedness::Left
            };
            let lambda = clasp_scalar(
                Algebra::Sl3,
                ClaspScalarKind::Crossing,
                n as u32,
                k as u32,
                handed,
            )
            .unwrap();
            let mut expect = base.clone();
            expect.scale(&lambda);
            assert!(
                braided.equals(&expect),
                "eigenvalue n={n} k={k} positive={positive}"
            );
        }
    }
}

#[test]
fn colored_vertex_pairing_small() {
    for n in 1..=2usize {
        let e = colored_vertex(ColoredVertexKind::Trivalent, n, 0).unwrap();
        let s = glue_element_scalar(&e, &honeycomb_source(n)).unwrap();
        let expect = rf_poly(quantum_integer(n as i64 + 1)).mul(&colored_loop_value_sl3(n));
        assert_eq!(s, expect, "colored trivalent vertex n={n}");
    }
}
