//! Lambert W₀, the positive quartic roots G±, and the gamma function.
//!
//! These are the special-function ingredients of the closed-form solutions:
//! W₀ for the Gaussian pair interaction, G±(Y) (the positive root of
//! 4x⁴ ± 8x − 3Y = 0) for harmonic confinement with Coulomb repulsion, and
//! Γ for the correlation-function normalisation.

use crate::error::{Error, Result};
use crate::math;

/// Branch point of the principal Lambert branch: the f64 nearest to −1/e.
/// W₀ is real for arguments at or above this value.
pub const LAMBERT_BRANCH_POINT: f64 = -0.36787944117144233;

/// The f64 nearest to −1/(2√e), where 1 + 2 W₀(z) changes sign. For the
/// Gaussian-pair closed form the energy crosses zero exactly here: binding
/// requires the Lambert argument to stay above this threshold.
pub const BINDING_THRESHOLD: f64 = -0.3032653298563167;

/// Principal branch of the Lambert function: the w ≥ −1 with w e^w = z.
///
/// Initial guess from the branch-point series near −1/e and from the
/// logarithmic asymptote elsewhere, refined by Halley iteration until the
/// defect w e^w − z reaches rounding level. Arguments below the branch
/// point (the complex regime) are a domain error.
pub fn lambert_w0(z: f64) -> Result<f64> {
    if !z.is_finite() || z < LAMBERT_BRANCH_POINT {
        return Err(Error::Domain("Lambert W0 requires z >= -1/e"));
    }
    if z == 0.0 {
        return Ok(0.0);
    }

    // Series in p = sqrt(2(ez + 1)) around the branch point.
    let p2 = (2.0 * (core::f64::consts::E * z + 1.0)).max(0.0);
    let p = math::sqrt(p2);
    let mut w = if z < -0.30 {
        -1.0 + p - p2 / 3.0 + 11.0 / 72.0 * p2 * p
    } else if z < core::f64::consts::E {
        math::ln(1.0 + z)
    } else {
        let l = math::ln(z);
        l - math::ln(l)
    };
    if p < 1e-4 {
        // So close to the branch point that the series is already at
        // rounding level and Halley's denominator (1 + w) is unusable.
        return Ok(w.max(-1.0));
    }

    let scale = z.abs().max(1.0);
    for _ in 0..20 {
        let ew = math::exp(w);
        let f = w * ew - z;
        if f.abs() <= 4e-16 * scale {
            break;
        }
        // Halley step for f(w) = w e^w − z.
        let w1 = w + 1.0;
        let denom = ew * w1 - (w + 2.0) * f / (2.0 * w1);
        let step = f / denom;
        w -= step;
        if step.abs() <= 1e-16 * (1.0 + w.abs()) {
            break;
        }
    }
    Ok(w.max(-1.0))
}

/// Selects which quartic 4x⁴ ± 8x − 3Y = 0 the root [`g_root`] solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuarticSign {
    Plus,
    Minus,
}

/// The unique non-negative root G±(Y) of 4x⁴ ± 8x − 3Y = 0 for Y ≥ 0.
///
/// The quartic is solved by bracketed Newton iteration; the closed-form
/// radical expression for G± cancels catastrophically at large Y and is
/// kept only as a test oracle.
pub fn g_root(sign: QuarticSign, y: f64) -> Result<f64> {
    if !y.is_finite() || y < 0.0 {
        return Err(Error::Domain("quartic root requires Y >= 0"));
    }
    let s = match sign {
        QuarticSign::Plus => 8.0,
        QuarticSign::Minus => -8.0,
    };
    let f = |x: f64| 4.0 * x * x * x * x + s * x - 3.0 * y;
    let fp = |x: f64| 16.0 * x * x * x + s;

    // f(lo) = −3Y ≤ 0 at both starting points: x = 0 for the plus sign and
    // x = 2^(1/3) for the minus sign (where 4x⁴ = 8x).
    let lo = match sign {
        QuarticSign::Plus => 0.0,
        QuarticSign::Minus => math::cbrt(2.0),
    };
    if y == 0.0 {
        return Ok(lo);
    }
    let mut hi = lo + 1.0 + math::powf(0.75 * y, 0.25);
    while f(hi) <= 0.0 {
        hi *= 2.0;
    }

    // f is convex and increasing on [lo, hi], so Newton from the right
    // endpoint descends monotonically onto the root.
    let mut x = hi;
    let tol = 1e-13 * (3.0 * y).max(1.0);
    for _ in 0..100 {
        let fx = f(x);
        if fx.abs() <= tol {
            break;
        }
        let step = fx / fp(x);
        let next = x - step;
        x = if next > lo { next } else { 0.5 * (x + lo) };
        if step.abs() <= 2.0 * f64::EPSILON * x.abs() {
            break;
        }
    }
    Ok(x)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for real arguments by the Lanczos approximation
/// (g = 7, 9 coefficients; relative error well below 1e−12 on the range
/// used here). Non-positive integers return NaN.
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection Γ(x) Γ(1−x) = π / sin(πx)
        let s = math::sin(core::f64::consts::PI * x);
        if s == 0.0 {
            return f64::NAN;
        }
        return core::f64::consts::PI / (s * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut acc = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    math::sqrt(2.0 * core::f64::consts::PI) * math::powf(t, x + 0.5) * math::exp(-t) * acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_constants_are_correctly_rounded() {
        // Nearest f64 to −1/e and −1/(2√e), checked against exp at runtime.
        assert_eq!(LAMBERT_BRANCH_POINT, -(-1.0f64).exp());
        assert_eq!(BINDING_THRESHOLD, -0.5 * (-0.5f64).exp());
    }

    #[test]
    fn lambert_w0_exact_points() {
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        assert_eq!(lambert_w0(LAMBERT_BRANCH_POINT).unwrap(), -1.0);
        let w = lambert_w0(core::f64::consts::E).unwrap();
        assert!((w - 1.0).abs() < 1e-15);
    }

    #[test]
    fn lambert_w0_reference_values() {
        // Frozen from an independent multiprecision evaluation.
        let cases = [
            (-0.25, -0.3574029561813889),
            (-0.1, -0.11183255915896297),
            (0.25, 0.20388835470224016),
            (0.5, 0.35173371124919584),
            (1.0, 0.5671432904097838),
            (3.0, 1.04990889496404),
            (10.0, 1.7455280027406994),
            (100.0, 3.3856301402900502),
            (1e6, 11.383358086140053),
        ];
        for (z, expected) in cases {
            let w = lambert_w0(z).unwrap();
            assert!((w - expected).abs() <= 1e-14 * expected.abs().max(1.0), "W0({z}) = {w}");
        }
    }

    #[test]
    fn lambert_w0_round_trip_and_monotone() {
        // 500 points linear on [-1/e, 1], 500 log-spaced on [1, 1e6],
        // branch point included as the first sample.
        let mut prev = f64::NEG_INFINITY;
        for i in 0..1000u32 {
            let z = if i < 500 {
                LAMBERT_BRANCH_POINT + (1.0 - LAMBERT_BRANCH_POINT) * i as f64 / 499.0
            } else {
                10f64.powf(6.0 * (i - 500) as f64 / 499.0)
            };
            let w = lambert_w0(z).unwrap();
            let defect = (w * w.exp() - z).abs();
            assert!(defect <= 1e-13 * z.abs().max(1.0), "z={z}: defect {defect:.3e}");
            assert!(w >= -1.0);
            if i != 500 {
                assert!(w > prev, "not monotone at z={z}");
            }
            prev = w;
        }
    }

    #[test]
    fn lambert_w0_domain_error_below_branch() {
        assert!(lambert_w0(-0.368).is_err());
        assert!(lambert_w0(-1.0).is_err());
        assert!(lambert_w0(f64::NAN).is_err());
    }

    #[test]
    fn g_root_special_values() {
        let r = g_root(QuarticSign::Minus, 0.0).unwrap();
        assert!((r - 1.2599210498948732).abs() <= 1e-12, "G-(0) = {r}");
        let r = g_root(QuarticSign::Plus, 4.0).unwrap();
        assert!((r - 1.0).abs() <= 1e-12, "G+(4) = {r}");
        assert_eq!(g_root(QuarticSign::Plus, 0.0).unwrap(), 0.0);
        assert!(g_root(QuarticSign::Minus, -1.0).is_err());
    }

    /// Plain bisection oracle for the quartic root, independent of the
    /// Newton implementation.
    fn g_root_bisect(s: f64, y: f64) -> f64 {
        let f = |x: f64| 4.0 * x * x * x * x + s * x - 3.0 * y;
        let (mut lo, mut hi) = (0.0, 1.0 + (0.75 * y).powf(0.25) + 2.0);
        if s < 0.0 {
            lo = 2f64.cbrt();
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn g_root_matches_bisection_oracle() {
        let r = g_root(QuarticSign::Minus, 30.238).unwrap();
        let b = g_root_bisect(-8.0, 30.238);
        assert!((r - b).abs() < 1e-12, "{r} vs {b}");
        assert!((r - 2.2848).abs() < 1e-4);
        for i in 0..60 {
            let y = i as f64 * 1.7 + 0.01;
            for (sign, s) in [(QuarticSign::Plus, 8.0), (QuarticSign::Minus, -8.0)] {
                let r = g_root(sign, y).unwrap();
                let b = g_root_bisect(s, y);
                assert!((r - b).abs() <= 1e-11 * b.max(1.0), "Y={y} {sign:?}: {r} vs {b}");
            }
        }
    }

    #[test]
    fn g_root_residuals_and_monotonicity() {
        let mut prev = 0.0;
        for i in 0..=1000 {
            let y = 0.1 * i as f64;
            let rm = g_root(QuarticSign::Minus, y).unwrap();
            let rp = g_root(QuarticSign::Plus, y).unwrap();
            for (x, s) in [(rm, -8.0), (rp, 8.0)] {
                let res = (4.0 * x * x * x * x + s * x - 3.0 * y).abs();
                assert!(res <= 1e-10 * (3.0 * y).max(1.0), "Y={y}: residual {res:.3e}");
            }
            assert!(rm >= 1.2599210498948732 - 1e-12);
            assert!(rm >= prev);
            prev = rm;
        }
    }

    /// Radical closed form from the quartic's solution by radicals; cancels
    /// badly at large Y, so it serves as an oracle only.
    fn g_closed(sign: f64, y: f64) -> f64 {
        let c = (2.0 + (4.0 + y * y * y).sqrt()).cbrt();
        let v = c - y / c;
        -sign * 0.5 * v.sqrt() + 0.5 * (4.0 / v.sqrt() - v).sqrt()
    }

    #[test]
    fn g_root_matches_radical_closed_form() {
        for i in 1..=100 {
            let y = i as f64;
            for (sign, s) in [(QuarticSign::Plus, 1.0), (QuarticSign::Minus, -1.0)] {
                let r = g_root(sign, y).unwrap();
                let c = g_closed(s, y);
                assert!((r - c).abs() <= 1e-9 * c.abs(), "Y={y} {sign:?}: {r} vs {c}");
            }
        }
    }

    #[test]
    fn gamma_exact_integer_and_half_integer_values() {
        let sqrt_pi = core::f64::consts::PI.sqrt();
        let cases = [
            (1.0, 1.0),
            (2.0, 1.0),
            (3.0, 2.0),
            (4.0, 6.0),
            (6.0, 120.0),
            (10.0, 362880.0),
            (0.5, sqrt_pi),
            (1.5, sqrt_pi / 2.0),
            (2.5, 0.75 * sqrt_pi),
            (3.5, 15.0 / 8.0 * sqrt_pi),
            (4.5, 105.0 / 16.0 * sqrt_pi),
            (5.5, 945.0 / 32.0 * sqrt_pi),
        ];
        for (x, expected) in cases {
            let g = gamma(x);
            assert!((g - expected).abs() <= 1e-12 * expected, "gamma({x}) = {g}");
        }
        assert!(gamma(0.0).is_nan());
        assert!(gamma(-1.0).is_nan());
    }
}
