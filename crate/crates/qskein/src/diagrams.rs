//! Shared diagram constructions used by the cross-validation suites: bent
//! clasps, Markov-trace closures, and the bubble/basis webs that the
//! `twist_formulas` coefficients are checked against.

use crate::a1_skein::*;
use crate::a2_skein::*;
use crate::jones_2bridge::TwoBridgeSpec;
use crate::laurent::{LaurentPoly, RationalFunction};

use num_bigint::BigInt;

/// The sl2 headline corpus (values of `a_j`; the diagram is `[2a_1, …]`).
pub const SL2_SPECS: &[&[i64]] = &[
    &[1],
    &[-1],
    &[2],
    &[1, 1],
    &[1, -1],
    &[1, 1, 1],
    &[-1, 2],
];

/// The sl3 headline corpus.
pub const SL3_SPECS: &[&[i64]] = &[&[1], &[-1], &[2], &[1, -1]];

pub fn spec(a: &[i64]) -> TwoBridgeSpec {
    TwoBridgeSpec::new(a.to_vec()).unwrap()
}

pub fn rf_poly(p: LaurentPoly) -> RationalFunction {
    RationalFunction::from_poly(p)
}

/// The monomial `t^exp` as a rational function.
pub fn q_t(exp: i64) -> RationalFunction {
    rf_poly(LaurentPoly::monomial(exp, BigInt::from(1)))
}

// ---------------------------------------------------------------------------
// Temperley–Lieb building blocks
// ---------------------------------------------------------------------------

pub fn jw_t(n: usize) -> TLElement {
    if n == 0 {
        TLElement::identity(0)
    } else {
        jones_wenzl(n)
    }
}

pub fn nested_cups_tl(w: usize) -> TLElement {
    let partner = (0..2 * w).map(|i| 2 * w - 1 - i).collect();
    TLElement::from_matching(
        PlanarMatching::new(0, 2 * w, partner),
        RationalFunction::one(),
    )
}

pub fn nested_caps_tl(w: usize) -> TLElement {
    let partner = (0..2 * w).map(|i| 2 * w - 1 - i).collect();
    TLElement::from_matching(
        PlanarMatching::new(2 * w, 0, partner),
        RationalFunction::one(),
    )
}

pub fn mid_cups_tl(a: usize, c: usize, b: usize) -> TLElement {
    tl_tensor(
        &tl_tensor(&TLElement::identity(a), &nested_cups_tl(c)),
        &TLElement::identity(b),
    )
}

pub fn mid_caps_tl(a: usize, c: usize, b: usize) -> TLElement {
    tl_tensor(
        &tl_tensor(&TLElement::identity(a), &nested_caps_tl(c)),
        &TLElement::identity(b),
    )
}

pub fn chain_compose(parts: &[TLElement]) -> TLElement {
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        out = tl_compose(&out, p).unwrap();
    }
    out
}

/// A single elementary crossing acting on strands `pos`, `pos+1` of `w`.
pub fn crossing_at(w: usize, pos: usize, positive: bool) -> TLElement {
    tl_tensor(
        &tl_tensor(&TLElement::identity(pos), &crossing_expand(positive)),
        &TLElement::identity(w - pos - 2),
    )
}

/// The Markov trace closure of an endomorphism.
pub fn trace_close_tl(e: &TLElement) -> RationalFunction {
    let w = e.domain();
    assert_eq!(w, e.codomain());
    chain_compose(&[
        nested_cups_tl(w),
        tl_tensor(e, &TLElement::identity(w)),
        nested_caps_tl(w),
    ])
    .scalar()
}

/// The n-clasp as a bent state (0 → 2n): the projector sits on the first
/// n boundary points, its other side is bent around to points n..2n.
pub fn bent_clasp_tl(n: usize) -> TLElement {
    chain_compose(&[
        nested_cups_tl(n),
        tl_tensor(&jw_t(n), &TLElement::identity(n)),
    ])
}

// ---------------------------------------------------------------------------
// Bubble diagrams (rotated 90°: both clasped lines run vertically; the
// k-band becomes a block of middle cups, the l-band a block of middle caps).
// ---------------------------------------------------------------------------

/// The bubble element, bottom (m−k)+(n−k) → top (m−l)+(n−l).
pub fn bubble_a1(n: usize, m: usize, k: usize, l: usize) -> TLElement {
    chain_compose(&[
        tl_tensor(&jw_t(m - k), &jw_t(n - k)),
        mid_cups_tl(m - k, k, n - k),
        tl_tensor(&jw_t(m), &jw_t(n)),
        mid_caps_tl(m - l, l, n - l),
        tl_tensor(&jw_t(m - l), &jw_t(n - l)),
    ])
}

/// The basis web σ_t with a band of t strands, same boundary as the bubble.
pub fn sigma_a1(n: usize, m: usize, k: usize, l: usize, t: usize) -> TLElement {
    chain_compose(&[
        tl_tensor(&jw_t(m - k), &jw_t(n - k)),
        mid_caps_tl(m - t, t - k, n - t),
        mid_cups_tl(m - t, t - l, n - t),
        tl_tensor(&jw_t(m - l), &jw_t(n - l)),
    ])
}

/// σ_s reflected, bottom (m−l)+(n−l) → top (m−k)+(n−k).
pub fn sigma_bar_a1(n: usize, m: usize, k: usize, l: usize, s: usize) -> TLElement {
    chain_compose(&[
        tl_tensor(&jw_t(m - l), &jw_t(n - l)),
        mid_caps_tl(m - s, s - l, n - s),
        mid_cups_tl(m - s, s - k, n - s),
        tl_tensor(&jw_t(m - k), &jw_t(n - k)),
    ])
}

/// A2 bubble states: the full boundary is bent to the top row (the domain
/// strands arrive reversed through nested cups), so two states pair through
/// `glue_elements_scalar`. The m-line carries flag true, the n-line false.
pub fn bubble_a2_base(n: usize, m: usize, k: usize) -> WebElement {
    let a = (m - k) + (n - k);
    let mut e = WebElement::empty(usize::MAX);
    for i in 0..a {
        e.apply_layer(WebLayer::Cup {
            position: i,
            top_east: i < n - k,
        })
        .unwrap();
    }
    e.apply_layer(WebLayer::Clasp {
        position: a,
        strands: m - k,
    })
    .unwrap();
    e.apply_layer(WebLayer::Clasp {
        position: a + (m - k),
        strands: n - k,
    })
    .unwrap();
    e
}

pub fn bubble_a2(n: usize, m: usize, k: usize, l: usize) -> WebElement {
    let a = (m - k) + (n - k);
    let mut e = bubble_a2_base(n, m, k);
    for i in 0..k {
        e.apply_layer(WebLayer::Cup {
            position: a + (m - k) + i,
            top_east: true,
        })
        .unwrap();
    }
    e.apply_layer(WebLayer::Clasp {
        position: a,
        strands: m,
    })
    .unwrap();
    e.apply_layer(WebLayer::Clasp {
        position: a + m,
        strands: n,
    })
    .unwrap();
    for j in 0..l {
        e.apply_layer(WebLayer::Cap {
            position: a + m - 1 - j,
        })
        .unwrap();
    }
    e.apply_layer(WebLayer::Clasp {
        position: a,
        strands: m - l,
    })
    .unwrap();
    e.apply_layer(WebLayer::Clasp {
        position: a + (m - l),
        strands: n - l,
    })
    .unwrap();
    e
}

pub fn sigma_a2(n: usize, m: usize, k: usize, l: usize, t: usize) -> WebElement {
    let a = (m - k) + (n - k);
    let mut e = bubble_a2_base(n, m, k);
    for j in 0..(t - k) {
        e.apply_layer(WebLayer::Cap {
            position: a + (m - k) - 1 - j,
        })
        .unwrap();
    }
    for i in 0..(t - l) {
        e.apply_layer(WebLayer::Cup {
            position: a + (m - t) + i,
            top_east: true,
        })
        .unwrap();
    }
    e.apply_layer(WebLayer::Clasp {
        position: a,
        strands: m - l,
    })
    .unwrap();
    e.apply_layer(WebLayer::Clasp {
        position: a + (m - l),
        strands: n - l,
    })
    .unwrap();
    e
}

/// The A2 n-clasp as a bent state, rows 0..n flag true and n..2n flag false.
pub fn bent_clasp_a2(n: usize) -> WebElement {
    a2_clasp(n).unwrap()
}
