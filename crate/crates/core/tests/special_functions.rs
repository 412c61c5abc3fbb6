//! Reference-grid and property checks for the normal CDF/quantile pair.
//!
//! The grid values were computed independently with SciPy (ndtri/ndtr) and
//! frozen here, so a regression in either rational approximation shows up
//! as a diff against an external oracle, not just self-consistency.

use crest_core::stochastic::{norm_cdf, norm_ppf};

const PPF_REF: &[(f64, f64)] = &[
    (1e-300, -37.0470962993612),
    (1e-100, -21.273453560965322),
    (1e-30, -11.464024688443613),
    (1e-16, -8.222082216130435),
    (1e-12, -7.034483825301131),
    (1e-09, -5.9978070150076865),
    (1e-06, -4.753424308822899),
    (0.0001, -3.7190164854556804),
    (0.001, -3.090232306167813),
    (0.01, -2.3263478740408408),
    (0.025, -1.9599639845400545),
    (0.05, -1.6448536269514729),
    (0.1, -1.2815515655446004),
    (0.2, -0.8416212335729142),
    (0.3, -0.5244005127080409),
    (0.4, -0.2533471031357997),
    (0.425, -0.18911842627279252),
    (0.5, 0.0),
    (0.575, 0.18911842627279238),
    (0.6, 0.2533471031357997),
    (0.7, 0.5244005127080407),
    (0.8, 0.8416212335729143),
    (0.9, 1.2815515655446004),
    (0.95, 1.6448536269514722),
    (0.975, 1.959963984540054),
    (0.99, 2.3263478740408408),
    (0.999, 3.090232306167813),
    (0.9999, 3.719016485455709),
    (0.999999, 4.753424308817087),
    (0.999999999, 5.997807019601637),
    (0.999999999999, 7.0344869100478356),
    (0.999999999999999, 7.941444487415979),
];

const CDF_REF: &[(f64, f64)] = &[
    (-37.0, 5.7255712225239266e-300),
    (-30.0, 4.906713927147908e-198),
    (-20.0, 2.7536241186061556e-89),
    (-10.0, 7.61985302416047e-24),
    (-8.0, 6.22096057427174e-16),
    (-6.0, 9.865876450376946e-10),
    (-5.0, 2.866515718791933e-07),
    (-4.0, 3.167124183311986e-05),
    (-3.0, 0.0013498980316300933),
    (-2.5, 0.006209665325776132),
    (-2.0, 0.022750131948179195),
    (-1.5, 0.06680720126885807),
    (-1.0, 0.15865525393145707),
    (-0.6745, 0.24999674286369916),
    (-0.5, 0.3085375387259869),
    (-0.25, 0.4012936743170763),
    (-0.1, 0.460172162722971),
    (0.0, 0.5),
    (0.1, 0.539827837277029),
    (0.25, 0.5987063256829237),
    (0.5, 0.6914624612740131),
    (0.6745, 0.7500032571363009),
    (1.0, 0.8413447460685429),
    (1.5, 0.9331927987311419),
    (2.0, 0.9772498680518208),
    (2.5, 0.9937903346742238),
    (3.0, 0.9986501019683699),
    (4.0, 0.9999683287581669),
    (5.0, 0.9999997133484281),
    (6.0, 0.9999999990134123),
    (8.0, 0.9999999999999993),
];

fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

#[test]
fn ppf_matches_reference_grid() {
    for &(p, want) in PPF_REF {
        let got = norm_ppf(p);
        assert!(
            rel_err(got, want) < 1e-13,
            "norm_ppf({p}) = {got}, want {want}"
        );
    }
}

#[test]
fn cdf_matches_reference_grid() {
    for &(x, want) in CDF_REF {
        let got = norm_cdf(x);
        // far-tail reference values themselves carry a few hundred ulps of
        // error, so the band below |x| = 10 is held tighter
        let tol = if x.abs() <= 10.0 { 1e-13 } else { 1e-12 };
        assert!(
            rel_err(got, want) < tol,
            "norm_cdf({x}) = {got}, want {want}"
        );
    }
}

#[test]
fn cdf_and_ppf_invert_each_other() {
    let mut p = 1e-12;
    while p < 0.5 {
        for q in [p, 1.0 - p] {
            let x = norm_ppf(q);
            let back = norm_cdf(x);
            assert!(
                rel_err(back, q) < 1e-9 || (back - q).abs() < 1e-15,
                "round trip p={q}: x={x}, back={back}"
            );
        }
        p *= 1.31;
    }
}

#[test]
fn ppf_is_antisymmetric_and_monotone() {
    let mut prev = f64::NEG_INFINITY;
    for i in 1..2000 {
        let p = i as f64 / 2000.0;
        let x = norm_ppf(p);
        assert!(x > prev, "monotonicity broken at p={p}");
        prev = x;
        let neg = norm_ppf(1.0 - p);
        assert!((x + neg).abs() < 2e-13, "antisymmetry broken at p={p}");
    }
}

#[test]
fn cdf_is_monotone_and_bounded() {
    let mut prev = -1.0;
    for i in -400..=400 {
        let x = i as f64 * 0.025;
        let c = norm_cdf(x);
        assert!((0.0..=1.0).contains(&c));
        assert!(c >= prev);
        prev = c;
    }
}
