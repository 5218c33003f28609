//! Global quantum numbers of the N-body oscillator basis.
//!
//! A state of N identical particles is labelled by N−1 internal oscillator
//! pairs (n_i, l_i). The genuine global quantum number is
//!
//! ```text
//! Q = Σ (2 n_i + l_i) + (N−1) D/2,
//! ```
//!
//! and its modified form weights radial excitations by a parameter φ > 0:
//!
//! ```text
//! Q_φ = Σ (φ n_i + l_i) + (N−1)(D+φ−2)/2,
//! ```
//!
//! which reduces to Q at φ = 2. Both are conveniently written as
//! Q_φ = (a·φ + b)/2 with integers a = 2Σn_i + (N−1) and
//! b = 2Σl_i + (N−1)(D−2); comparisons that must be exact should go through
//! [`global_q_phi_split`] rather than the rounded float values.
//!
//! Parity is computed from Σ l_i for any φ. For the genuine Q this equals
//! (−1)^(Q−(N−1)D/2); for φ ≠ 2 it is kept as a label without claiming a
//! physical interpretation.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Internal oscillator quantum numbers of an N-body state: N−1 pairs
/// (n_i, l_i) of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpec {
    pairs: Vec<(u32, u32)>,
}

impl StateSpec {
    /// Builds a state from its (n_i, l_i) pairs. The list length fixes the
    /// particle count as N = len + 1, so it must not be empty.
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Domain("a state needs at least one oscillator pair (N >= 2)"));
        }
        Ok(StateSpec { pairs })
    }

    /// The ground state (all n_i = l_i = 0) for `n_particles` particles.
    pub fn ground(n_particles: u32) -> Result<Self> {
        if n_particles < 2 {
            return Err(Error::Domain("particle count must be at least 2"));
        }
        StateSpec::new(alloc::vec![(0, 0); (n_particles - 1) as usize])
    }

    /// Parses the text form `"n,l;n,l;..."`, e.g. `"1,0;0,0"` for N = 3.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (i, chunk) in text.split(';').enumerate() {
            let chunk = chunk.trim();
            let (n_txt, l_txt) = chunk.split_once(',').ok_or_else(|| {
                Error::Parse(alloc::format!("pair {} ({chunk:?}) is not of the form \"n,l\"", i + 1))
            })?;
            let n = n_txt.trim().parse::<u32>().map_err(|_| {
                Error::Parse(alloc::format!("invalid radial number {:?}", n_txt.trim()))
            })?;
            let l = l_txt.trim().parse::<u32>().map_err(|_| {
                Error::Parse(alloc::format!("invalid orbital number {:?}", l_txt.trim()))
            })?;
            pairs.push((n, l));
        }
        StateSpec::new(pairs)
    }

    /// Number of particles N (one more than the number of internal pairs).
    pub fn particle_count(&self) -> u32 {
        self.pairs.len() as u32 + 1
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Σ n_i over the internal oscillators.
    pub fn radial_sum(&self) -> u32 {
        self.pairs.iter().map(|&(n, _)| n).sum()
    }

    /// Σ l_i over the internal oscillators.
    pub fn orbital_sum(&self) -> u32 {
        self.pairs.iter().map(|&(_, l)| l).sum()
    }

    pub fn is_ground(&self) -> bool {
        self.pairs.iter().all(|&(n, l)| n == 0 && l == 0)
    }
}

impl core::fmt::Display for StateSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let parts: Vec<_> = self.pairs.iter().map(|(n, l)| alloc::format!("{n},{l}")).collect();
        write!(f, "{}", parts.join(";"))
    }
}

fn check_dimension(d: u32) -> Result<()> {
    if d < 2 {
        return Err(Error::Domain("dimension must satisfy D >= 2"));
    }
    Ok(())
}

/// Validates a quantum-number weight φ (must be finite and positive; φ = 2
/// recovers the genuine global quantum number).
pub fn check_phi(phi: f64) -> Result<()> {
    if !(phi > 0.0) || !phi.is_finite() {
        return Err(Error::Domain("phi must be a finite positive number"));
    }
    Ok(())
}

/// Integer split (a, b) of the modified quantum number, Q_φ = (a·φ + b)/2.
///
/// a = 2 Σ n_i + (N−1) and b = 2 Σ l_i + (N−1)(D−2) are exact, so identities
/// such as "raising one n_i by 1 raises Q_φ by exactly φ" hold on the split
/// even when they are blurred by rounding in the assembled float.
pub fn global_q_phi_split(state: &StateSpec, d: u32) -> Result<(u64, u64)> {
    check_dimension(d)?;
    let m = state.pairs().len() as u64; // N − 1
    let a = 2 * state.radial_sum() as u64 + m;
    let b = 2 * state.orbital_sum() as u64 + m * (d as u64 - 2);
    Ok((a, b))
}

/// Modified global quantum number Q_φ = Σ(φ n_i + l_i) + (N−1)(D+φ−2)/2.
pub fn global_q_phi(state: &StateSpec, d: u32, phi: f64) -> Result<f64> {
    check_phi(phi)?;
    let (a, b) = global_q_phi_split(state, d)?;
    Ok((a as f64 * phi + b as f64) / 2.0)
}

/// Genuine global quantum number Q = Σ(2 n_i + l_i) + (N−1) D/2.
///
/// Computed as `global_q_phi` at φ = 2, so the two agree bit for bit.
pub fn global_q(state: &StateSpec, d: u32) -> Result<f64> {
    global_q_phi(state, d, 2.0)
}

/// Parity (−1)^(Σ l_i) of the state.
pub fn parity(state: &StateSpec) -> i32 {
    if state.orbital_sum() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of particle pairs C_N = N(N−1)/2.
pub fn pair_count(n: u32) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain("particle count must be at least 2"));
    }
    Ok(n as u64 * (n as u64 - 1) / 2)
}
