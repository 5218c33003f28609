//! Generic solver for the envelope-theory equation set
//!
//! ```text
//! E = N T(p0) + N U(r0/N) + C_N V(r0/√C_N)          (energy)
//! r0 p0 = Q                                          (quantisation)
//! N p0 T'(p0) = r0 U'(r0/N) + √C_N r0 V'(r0/√C_N)    (stationarity)
//! ```
//!
//! with C_N = N(N−1)/2. Substituting p0 = Q/r0 turns the stationarity
//! condition into a single transcendental equation in r0, whose roots are
//! exactly the stationary points of E(r0). The solver scans log-spaced radii
//! for sign changes, refines every bracket by bisection safeguarded with
//! Newton steps, and returns the stationary point of lowest energy, with the
//! number of roots surfaced in the solution for diagnostics.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hamiltonian::{HamiltonianSpec, TermKind};
use crate::math;
use crate::quantum_numbers::{self, StateSpec};

/// Outcome class of a solve: `Ok` for a usable (negative-energy where it
/// must be) solution, `Irrelevant` for a stationary point with E ≥ 0 in a
/// purely attractive pairwise system, `NoSolution` when the stationarity
/// equation has no positive root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Ok,
    Irrelevant,
    NoSolution,
}

impl core::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            SolveStatus::Ok => "Ok",
            SolveStatus::Irrelevant => "Irrelevant",
            SolveStatus::NoSolution => "NoSolution",
        })
    }
}

/// Variational character of the approximate eigenvalue. Guaranteed only for
/// the genuine quantum number (φ = 2) and the tabulated term combinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundTag {
    UpperBound,
    LowerBound,
    Unknown,
}

impl core::fmt::Display for BoundTag {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            BoundTag::UpperBound => "UpperBound",
            BoundTag::LowerBound => "LowerBound",
            BoundTag::Unknown => "Unknown",
        })
    }
}

/// Result of one envelope-theory solve.
///
/// When `status` is `NoSolution` the numeric fields are NaN; otherwise
/// `r0 > 0`, `p0 = q_phi / r0` exactly as computed, and the stationarity
/// residual at `r0` is at rounding level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtSolution {
    pub energy: f64,
    pub r0: f64,
    pub p0: f64,
    pub q_phi: f64,
    pub bound_tag: BoundTag,
    pub status: SolveStatus,
    /// Number of stationary points found by the scan. More than one root is
    /// legitimate (the Gaussian system has two); the lowest-energy one is
    /// reported.
    pub root_count: usize,
}

fn check_q(q_phi: f64) -> Result<()> {
    if !(q_phi > 0.0) || !q_phi.is_finite() {
        return Err(Error::Domain("the global quantum number must be finite and positive"));
    }
    Ok(())
}

/// Stationarity residual N p0 T'(p0) − r0 U'(r0/N) − √C_N r0 V'(r0/√C_N)
/// with p0 = q_phi/r0 substituted; zero at a stationary point of the energy.
pub fn residual(h: &HamiltonianSpec, q_phi: f64, r0: f64) -> Result<f64> {
    check_q(q_phi)?;
    if !(r0 > 0.0) || !r0.is_finite() {
        return Err(Error::Domain("r0 must be finite and positive"));
    }
    let n = h.n() as f64;
    let c = quantum_numbers::pair_count(h.n())? as f64;
    let sqrt_c = math::sqrt(c);
    let p0 = q_phi / r0;
    let kin = n * p0 * h.kinetic().derivative(p0)?;
    let one = r0 * h.one_body().derivative(r0 / n)?;
    let pair = sqrt_c * r0 * h.pairwise().derivative(r0 / sqrt_c)?;
    let res = kin - one - pair;
    if res.is_finite() {
        Ok(res)
    } else {
        Err(Error::NonFinite { x: r0 })
    }
}

/// d(residual)/d(r0), analytic. Used to polish roots with Newton steps.
fn residual_derivative(h: &HamiltonianSpec, q_phi: f64, r0: f64) -> Result<f64> {
    let n = h.n() as f64;
    let c = quantum_numbers::pair_count(h.n())? as f64;
    let sqrt_c = math::sqrt(c);
    let p0 = q_phi / r0;
    let kin = -n * q_phi / (r0 * r0)
        * (h.kinetic().derivative(p0)? + p0 * h.kinetic().second_derivative(p0)?);
    let one = h.one_body().derivative(r0 / n)? + r0 / n * h.one_body().second_derivative(r0 / n)?;
    let pair = sqrt_c * h.pairwise().derivative(r0 / sqrt_c)?
        + r0 * h.pairwise().second_derivative(r0 / sqrt_c)?;
    Ok(kin - one - pair)
}

/// Energy of the auxiliary problem at radius `r0` with p0 = q_phi/r0.
pub fn energy(h: &HamiltonianSpec, q_phi: f64, r0: f64) -> Result<f64> {
    check_q(q_phi)?;
    let n = h.n() as f64;
    let c = quantum_numbers::pair_count(h.n())? as f64;
    let p0 = q_phi / r0;
    let e = n * h.kinetic().value(p0)?
        + n * h.one_body().value(r0 / n)?
        + c * h.pairwise().value(r0 / math::sqrt(c))?;
    if e.is_finite() {
        Ok(e)
    } else {
        Err(Error::NonFinite { x: r0 })
    }
}

/// Variational tag for the genuine quantum number (φ = 2), looked up from
/// the known kinetic/one-body/pairwise combinations: Gaussian or Coulomb
/// attraction are upper bounds, harmonic confinement with Coulomb repulsion
/// is a lower bound, and linear confinement with Coulomb attraction under
/// ultrarelativistic kinematics is an upper bound. Everything else is
/// `Unknown`.
pub fn form_bound_tag(h: &HamiltonianSpec) -> BoundTag {
    match (h.kinetic(), h.one_body(), h.pairwise()) {
        (TermKind::NonrelativisticKinetic { .. }, TermKind::Zero, TermKind::Gaussian { .. }) => {
            BoundTag::UpperBound
        }
        (
            TermKind::NonrelativisticKinetic { .. },
            TermKind::Zero,
            TermKind::Coulomb { coupling },
        ) if *coupling < 0.0 => BoundTag::UpperBound,
        (
            TermKind::NonrelativisticKinetic { .. },
            TermKind::Harmonic { .. },
            TermKind::Coulomb { coupling },
        ) if *coupling > 0.0 => BoundTag::LowerBound,
        (
            TermKind::UltrarelativisticKinetic,
            TermKind::Linear { .. },
            TermKind::Coulomb { coupling },
        ) if *coupling < 0.0 => BoundTag::UpperBound,
        _ => BoundTag::Unknown,
    }
}

/// True when the system has no one-body term and a pairwise attraction that
/// can only bind with E < 0; a stationary point with E ≥ 0 is then flagged
/// as irrelevant rather than kept as a physical estimate.
fn purely_attractive_pairwise(h: &HamiltonianSpec) -> bool {
    if !matches!(h.one_body(), TermKind::Zero) {
        return false;
    }
    match *h.pairwise() {
        TermKind::Gaussian { .. } => true,
        TermKind::Coulomb { coupling } => coupling < 0.0,
        TermKind::PowerLaw { coeff, exponent } => coeff < 0.0 && exponent < 0.0,
        _ => false,
    }
}

/// Characteristic length assembled from the term parameters: the Gaussian
/// range, 1/(m g) for Coulomb (Q/g under ultrarelativistic kinematics),
/// (m ω)^(−1/2) for harmonic confinement and Q/√λ for linear confinement.
/// The geometric mean of the collected scales centres the scan window; the
/// ±8 decades around it absorb the remaining spread.
fn characteristic_length(h: &HamiltonianSpec, q_phi: f64) -> f64 {
    let mass = match *h.kinetic() {
        TermKind::NonrelativisticKinetic { mass } => Some(mass),
        _ => None,
    };
    let mut log_sum = 0.0;
    let mut count = 0u32;
    let mut push = |len: f64| {
        if len.is_finite() && len > 0.0 {
            log_sum += math::ln(len);
            count += 1;
        }
    };
    for term in [h.one_body(), h.pairwise()] {
        match *term {
            TermKind::Gaussian { range, .. } => push(range),
            TermKind::Coulomb { coupling } => {
                let g = coupling.abs();
                if g > 0.0 {
                    match mass {
                        Some(m) => push(1.0 / (m * g)),
                        None => push(q_phi / g),
                    }
                }
            }
            TermKind::Harmonic { mass: m, omega } => push(1.0 / math::sqrt(m * omega)),
            TermKind::Linear { tension } => match mass {
                Some(m) => push(math::powf(m * tension, -1.0 / 3.0)),
                None => push(q_phi / math::sqrt(tension)),
            },
            _ => {}
        }
    }
    if count == 0 {
        1.0
    } else {
        math::exp(log_sum / count as f64)
    }
}

/// Bisection with Newton polish inside a sign-changing bracket. `f_lo` is
/// the residual at `lo`. Converges the bracket width to ~1e−15 relative.
fn refine_root(h: &HamiltonianSpec, q_phi: f64, lo0: f64, hi0: f64, f_lo0: f64) -> Result<f64> {
    let (mut lo, mut hi, mut f_lo) = (lo0, hi0, f_lo0);
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let fx = residual(h, q_phi, x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx > 0.0) == (f_lo > 0.0) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
        }
        if hi - lo <= 1e-15 * hi.abs() {
            break;
        }
        // Prefer the Newton step when it stays inside the bracket.
        let mut next = 0.5 * (lo + hi);
        if let Ok(d) = residual_derivative(h, q_phi, x) {
            if d != 0.0 {
                let newton = x - fx / d;
                if newton > lo && newton < hi {
                    next = newton;
                }
            }
        }
        x = next;
    }
    Ok(0.5 * (lo + hi))
}

const SCAN_DECADES: f64 = 8.0;
const SCAN_POINTS_PER_DECADE: usize = 48;

/// Solves the envelope-theory equations for the given modified quantum
/// number, returning the lowest-energy stationary point.
///
/// A `bracket_hint` with a sign change short-circuits the scan; otherwise
/// radii spanning sixteen decades around the characteristic length are
/// scanned and every sign change is refined. The reported `bound_tag` is the
/// form-combination tag of [`form_bound_tag`], which is only meaningful for
/// the genuine quantum number; use [`solve_for_state`] to have φ ≠ 2
/// downgrade it automatically.
pub fn solve(
    h: &HamiltonianSpec,
    q_phi: f64,
    bracket_hint: Option<(f64, f64)>,
) -> Result<EtSolution> {
    check_q(q_phi)?;
    let tag = form_bound_tag(h);

    let mut brackets: Vec<(f64, f64, f64)> = Vec::new();
    let mut hinted = false;
    if let Some((lo, hi)) = bracket_hint {
        if lo > 0.0 && hi > lo {
            if let (Ok(f_lo), Ok(f_hi)) = (residual(h, q_phi, lo), residual(h, q_phi, hi)) {
                if f_lo == 0.0 || f_hi == 0.0 || (f_lo > 0.0) != (f_hi > 0.0) {
                    brackets.push((lo, hi, f_lo));
                    hinted = true;
                }
            }
        }
    }

    if !hinted {
        let scale = characteristic_length(h, q_phi);
        let total = (2.0 * SCAN_DECADES * SCAN_POINTS_PER_DECADE as f64) as usize;
        let mut prev: Option<(f64, f64)> = None;
        for i in 0..=total {
            let exponent = -SCAN_DECADES + i as f64 / SCAN_POINTS_PER_DECADE as f64;
            let r = scale * math::powf(10.0, exponent);
            let f = match residual(h, q_phi, r) {
                Ok(f) => f,
                Err(_) => {
                    prev = None;
                    continue;
                }
            };
            if let Some((rp, fp)) = prev {
                if fp == 0.0 || (fp > 0.0) != (f > 0.0) {
                    brackets.push((rp, r, fp));
                }
            }
            prev = Some((r, f));
        }
    }

    if brackets.is_empty() {
        return Ok(EtSolution {
            energy: f64::NAN,
            r0: f64::NAN,
            p0: f64::NAN,
            q_phi,
            bound_tag: tag,
            status: SolveStatus::NoSolution,
            root_count: 0,
        });
    }

    let mut best: Option<(f64, f64)> = None; // (energy, r0)
    let root_count = brackets.len();
    for (lo, hi, f_lo) in brackets {
        let r0 = refine_root(h, q_phi, lo, hi, f_lo)?;
        let e = energy(h, q_phi, r0)?;
        if best.map_or(true, |(eb, _)| e < eb) {
            best = Some((e, r0));
        }
    }
    let (energy, r0) = best.expect("at least one bracket was refined");
    let status = if purely_attractive_pairwise(h) && energy >= 0.0 {
        SolveStatus::Irrelevant
    } else {
        SolveStatus::Ok
    };
    Ok(EtSolution {
        energy,
        r0,
        p0: q_phi / r0,
        q_phi,
        bound_tag: tag,
        status,
        root_count,
    })
}

/// Convenience wrapper computing Q_φ from a state and weight φ. For φ ≠ 2
/// the variational character is not guaranteed, so the bound tag is forced
/// to `Unknown`.
pub fn solve_for_state(
    h: &HamiltonianSpec,
    state: &StateSpec,
    phi: f64,
    bracket_hint: Option<(f64, f64)>,
) -> Result<EtSolution> {
    if state.particle_count() != h.n() {
        return Err(Error::Domain("state length does not match the Hamiltonian's N"));
    }
    let q_phi = quantum_numbers::global_q_phi(state, h.d(), phi)?;
    let mut sol = solve(h, q_phi, bracket_hint)?;
    if phi != 2.0 {
        sol.bound_tag = BoundTag::Unknown;
    }
    Ok(sol)
}
