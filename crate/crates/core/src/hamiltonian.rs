//! Kinetic and potential terms of the N-body Hamiltonian
//!
//! ```text
//! H = Σ T(|p_i|) + Σ U(|r_i − R|) + Σ_{i<j} V(|r_i − r_j|),
//! ```
//!
//! with each term represented as a [`TermKind`] carrying its analytic value
//! and first derivative. Derivatives are analytic per kind so the solver
//! residuals stay at machine precision; finite differences appear only in
//! the tests.

use crate::error::{Error, Result};
use crate::math;

/// One term shape of the Hamiltonian, kinetic or potential.
///
/// `PowerLaw` goes beyond the built-in reference systems; it is provided so
/// the generic solver can be exercised on additional shapes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TermKind {
    /// T(p) = p²/(2m)
    NonrelativisticKinetic { mass: f64 },
    /// T(p) = p (massless particles)
    UltrarelativisticKinetic,
    /// V(r) = −V₀ e^(−r²/R²), attractive by construction (V₀ > 0)
    Gaussian { depth: f64, range: f64 },
    /// V(r) = g/r with signed coupling (g < 0 attracts)
    Coulomb { coupling: f64 },
    /// U(s) = λ s with tension λ > 0
    Linear { tension: f64 },
    /// U(s) = ½ m ω² s²
    Harmonic { mass: f64, omega: f64 },
    /// V(x) = a x^b
    PowerLaw { coeff: f64, exponent: f64 },
    /// Identically zero term.
    Zero,
}

impl TermKind {
    /// Checks the parameter sign domains of the kind.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            TermKind::NonrelativisticKinetic { mass } => mass > 0.0 && mass.is_finite(),
            TermKind::UltrarelativisticKinetic => true,
            TermKind::Gaussian { depth, range } => {
                depth > 0.0 && range > 0.0 && depth.is_finite() && range.is_finite()
            }
            TermKind::Coulomb { coupling } => coupling.is_finite(),
            TermKind::Linear { tension } => tension > 0.0 && tension.is_finite(),
            TermKind::Harmonic { mass, omega } => {
                mass > 0.0 && omega > 0.0 && mass.is_finite() && omega.is_finite()
            }
            TermKind::PowerLaw { coeff, exponent } => coeff.is_finite() && exponent.is_finite(),
            TermKind::Zero => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain("term parameter outside its sign domain"))
        }
    }

    pub fn is_kinetic(&self) -> bool {
        matches!(
            self,
            TermKind::NonrelativisticKinetic { .. } | TermKind::UltrarelativisticKinetic
        )
    }

    pub fn is_potential(&self) -> bool {
        !self.is_kinetic()
    }

    fn check_argument(&self, x: f64) -> Result<()> {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::Domain("term argument must be finite and non-negative"));
        }
        if x == 0.0 {
            match *self {
                TermKind::Coulomb { .. } => return Err(Error::Singularity { x }),
                TermKind::PowerLaw { exponent, .. } if exponent < 0.0 => {
                    return Err(Error::Singularity { x })
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// Evaluates the term at `x` (a momentum for kinetic kinds, a length
    /// otherwise).
    pub fn value(&self, x: f64) -> Result<f64> {
        self.check_argument(x)?;
        let v = match *self {
            TermKind::NonrelativisticKinetic { mass } => x * x / (2.0 * mass),
            TermKind::UltrarelativisticKinetic => x,
            TermKind::Gaussian { depth, range } => {
                let u = x / range;
                -depth * math::exp(-u * u)
            }
            TermKind::Coulomb { coupling } => coupling / x,
            TermKind::Linear { tension } => tension * x,
            TermKind::Harmonic { mass, omega } => 0.5 * mass * omega * omega * x * x,
            TermKind::PowerLaw { coeff, exponent } => coeff * math::powf(x, exponent),
            TermKind::Zero => 0.0,
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { x })
        }
    }

    /// Analytic first derivative of the term at `x`.
    pub fn derivative(&self, x: f64) -> Result<f64> {
        self.check_argument(x)?;
        let v = match *self {
            TermKind::NonrelativisticKinetic { mass } => x / mass,
            TermKind::UltrarelativisticKinetic => 1.0,
            TermKind::Gaussian { depth, range } => {
                let u = x / range;
                2.0 * depth * x / (range * range) * math::exp(-u * u)
            }
            TermKind::Coulomb { coupling } => -coupling / (x * x),
            TermKind::Linear { tension } => tension,
            TermKind::Harmonic { mass, omega } => mass * omega * omega * x,
            TermKind::PowerLaw { coeff, exponent } => {
                coeff * exponent * math::powf(x, exponent - 1.0)
            }
            TermKind::Zero => 0.0,
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { x })
        }
    }

    /// Analytic second derivative, used by the safeguarded Newton polish of
    /// the solver.
    pub fn second_derivative(&self, x: f64) -> Result<f64> {
        self.check_argument(x)?;
        let v = match *self {
            TermKind::NonrelativisticKinetic { mass } => 1.0 / mass,
            TermKind::UltrarelativisticKinetic => 0.0,
            TermKind::Gaussian { depth, range } => {
                let r2 = range * range;
                let u = x / range;
                2.0 * depth / r2 * (1.0 - 2.0 * u * u) * math::exp(-u * u)
            }
            TermKind::Coulomb { coupling } => 2.0 * coupling / (x * x * x),
            TermKind::Linear { .. } => 0.0,
            TermKind::Harmonic { mass, omega } => mass * omega * omega,
            TermKind::PowerLaw { coeff, exponent } => {
                coeff * exponent * (exponent - 1.0) * math::powf(x, exponent - 2.0)
            }
            TermKind::Zero => 0.0,
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { x })
        }
    }
}

/// An N-body Hamiltonian: particle count, dimension, kinetic term, one-body
/// term U and pairwise term V.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSpec {
    n: u32,
    d: u32,
    kinetic: TermKind,
    one_body: TermKind,
    pairwise: TermKind,
}

impl HamiltonianSpec {
    /// Validates and assembles a Hamiltonian. The kinetic slot only accepts
    /// kinetic kinds, the potential slots only potential kinds (or `Zero`).
    pub fn new(
        n: u32,
        d: u32,
        kinetic: TermKind,
        one_body: TermKind,
        pairwise: TermKind,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("particle count must be at least 2"));
        }
        if d < 2 {
            return Err(Error::Domain("dimension must satisfy D >= 2"));
        }
        if !kinetic.is_kinetic() {
            return Err(Error::Domain("kinetic slot requires a kinetic term kind"));
        }
        if !one_body.is_potential() || !pairwise.is_potential() {
            return Err(Error::Domain("potential slots require potential term kinds"));
        }
        kinetic.validate()?;
        one_body.validate()?;
        pairwise.validate()?;
        Ok(HamiltonianSpec { n, d, kinetic, one_body, pairwise })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn kinetic(&self) -> &TermKind {
        &self.kinetic
    }

    pub fn one_body(&self) -> &TermKind {
        &self.one_body
    }

    pub fn pairwise(&self) -> &TermKind {
        &self.pairwise
    }

    /// Same Hamiltonian with a different particle count (used by scans).
    pub fn with_n(&self, n: u32) -> Result<Self> {
        HamiltonianSpec::new(n, self.d, self.kinetic, self.one_body, self.pairwise)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_examples() {
        let g = TermKind::Gaussian { depth: 1.227, range: 10.03 };
        assert_eq!(g.value(0.0).unwrap(), -1.227);
        let c = TermKind::Coulomb { coupling: -1.0 };
        assert_eq!(c.value(2.0).unwrap(), -0.5);
        let h = TermKind::Harmonic { mass: 1.0, omega: 0.5 };
        assert_eq!(h.value(2.0).unwrap(), 0.5);
    }

    #[test]
    fn derivative_examples() {
        let lin = TermKind::Linear { tension: 0.2 };
        for x in [0.1, 1.0, 50.0] {
            assert_eq!(lin.derivative(x).unwrap(), 0.2);
        }
        let t = TermKind::NonrelativisticKinetic { mass: 2.0 };
        assert_eq!(t.derivative(3.0).unwrap(), 1.5);
        let g = TermKind::Gaussian { depth: 1.0, range: 1.0 };
        let d = g.derivative(1.0).unwrap();
        assert!((d - 2.0 * (-1.0f64).exp()).abs() < 1e-15, "d = {d}");
        assert!((d - 0.735759).abs() < 1e-6);
    }

    #[test]
    fn coulomb_is_singular_at_origin() {
        let c = TermKind::Coulomb { coupling: 1.0 };
        assert_eq!(c.value(0.0), Err(Error::Singularity { x: 0.0 }));
        assert_eq!(c.derivative(0.0), Err(Error::Singularity { x: 0.0 }));
    }

    fn all_kinds() -> [TermKind; 8] {
        [
            TermKind::NonrelativisticKinetic { mass: 0.7 },
            TermKind::UltrarelativisticKinetic,
            TermKind::Gaussian { depth: 1.227, range: 10.03 },
            TermKind::Coulomb { coupling: -0.4 },
            TermKind::Linear { tension: 0.2 },
            TermKind::Harmonic { mass: 1.0, omega: 0.5 },
            TermKind::PowerLaw { coeff: 1.3, exponent: 1.7 },
            TermKind::Zero,
        ]
    }

    #[test]
    fn derivatives_match_central_differences() {
        // |analytic − central difference| ≤ 1e−6 (1 + |analytic|),
        // step 1e−5 · max(1, x).
        for kind in all_kinds() {
            for &x in &[0.05, 0.3, 1.0, 2.5, 7.0, 25.0] {
                let h = 1e-5 * x.max(1.0);
                let fd = (kind.value(x + h).unwrap() - kind.value(x - h).unwrap()) / (2.0 * h);
                let an = kind.derivative(x).unwrap();
                assert!(
                    (an - fd).abs() <= 1e-6 * (1.0 + an.abs()),
                    "{kind:?} at x={x}: analytic {an} vs fd {fd}"
                );
            }
        }
    }

    #[test]
    fn second_derivatives_match_central_differences() {
        for kind in all_kinds() {
            for &x in &[0.3, 1.0, 2.5, 7.0] {
                let h = 1e-4 * x.max(1.0);
                let fd = (kind.derivative(x + h).unwrap() - kind.derivative(x - h).unwrap())
                    / (2.0 * h);
                let an = kind.second_derivative(x).unwrap();
                assert!(
                    (an - fd).abs() <= 1e-5 * (1.0 + an.abs()),
                    "{kind:?} at x={x}: analytic {an} vs fd {fd}"
                );
            }
        }
    }

    #[test]
    fn spec_construction_rules() {
        let kin = TermKind::NonrelativisticKinetic { mass: 1.0 };
        let gauss = TermKind::Gaussian { depth: 1.0, range: 1.0 };
        assert!(HamiltonianSpec::new(2, 3, kin, TermKind::Zero, gauss).is_ok());
        // misuse of kinds is rejected
        assert!(HamiltonianSpec::new(2, 3, gauss, TermKind::Zero, gauss).is_err());
        assert!(HamiltonianSpec::new(2, 3, kin, kin, gauss).is_err());
        // parameter domains
        let bad = TermKind::Gaussian { depth: -1.0, range: 1.0 };
        assert!(HamiltonianSpec::new(2, 3, kin, TermKind::Zero, bad).is_err());
        assert!(HamiltonianSpec::new(1, 3, kin, TermKind::Zero, gauss).is_err());
        assert!(HamiltonianSpec::new(2, 1, kin, TermKind::Zero, gauss).is_err());
    }
}
