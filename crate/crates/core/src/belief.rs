//! Mass functions on the binary frame `{Ac, NotAc}`.
//!
//! A [`MassFunction`] spreads one unit of belief over the four subsets of the
//! frame: `{Ac}`, `{NotAc}`, `Ω = {Ac, NotAc}` and `∅`. Mass on `∅` only
//! appears after conjunctive combination and records conflict between
//! sources. Combination is the unnormalized (transferable belief model) rule,
//! so conflict stays on `∅` until the pignistic transform divides it out.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Tolerance used when checking that masses sum to one.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// Inputs this far below zero are treated as rounding noise and clamped.
const NEGATIVE_NOISE: f64 = 1e-12;

/// Conflict at or above `1 - TOTAL_CONFLICT_MARGIN` leaves nothing to decide on.
const TOTAL_CONFLICT_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BeliefError {
    #[error("negative mass {0}")]
    NegativeMass(f64),

    #[error("masses sum to {0}, expected 1")]
    NotNormalized(f64),

    #[error("cannot discount a mass function carrying conflict (m(empty) = {0})")]
    ConflictPresent(f64),

    #[error("no sources to combine")]
    EmptySourceSet,

    #[error("total conflict between sources (m(empty) = {0}), no decision possible")]
    TotalConflict(f64),

    #[error("reliability {0} outside [0, 1]")]
    InvalidReliability(f64),
}

/// Basic belief assignment over `{∅, Ac, NotAc, Ω}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MassFunction {
    ac: f64,
    nac: f64,
    omega: f64,
    empty: f64,
}

impl MassFunction {
    /// Validated constructor for a pre-fusion mass function (no conflict).
    ///
    /// Drift up to [`NORMALIZATION_TOLERANCE`] is renormalized away so the
    /// stored components sum to one.
    pub fn new(ac: f64, nac: f64, omega: f64) -> Result<Self, BeliefError> {
        let [ac, nac, omega] = clamp_noise([ac, nac, omega])?;
        let sum = ac + nac + omega;
        if !sum.is_finite() || (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(BeliefError::NotNormalized(sum));
        }
        Ok(Self {
            ac: ac / sum,
            nac: nac / sum,
            omega: omega / sum,
            empty: 0.0,
        })
    }

    /// Like [`MassFunction::new`] but also accepts mass on `∅`.
    ///
    /// Used when reloading fused results.
    pub fn with_conflict(ac: f64, nac: f64, omega: f64, empty: f64) -> Result<Self, BeliefError> {
        let [ac, nac, omega, empty] = clamp_noise([ac, nac, omega, empty])?;
        let sum = ac + nac + omega + empty;
        if !sum.is_finite() || (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(BeliefError::NotNormalized(sum));
        }
        Ok(Self {
            ac: ac / sum,
            nac: nac / sum,
            omega: omega / sum,
            empty: empty / sum,
        })
    }

    /// Total ignorance: all mass on `Ω`.
    pub const fn vacuous() -> Self {
        Self {
            ac: 0.0,
            nac: 0.0,
            omega: 1.0,
            empty: 0.0,
        }
    }

    pub fn ac(&self) -> f64 {
        self.ac
    }

    pub fn nac(&self) -> f64 {
        self.nac
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Conflict mass, `m(∅)`.
    pub fn empty(&self) -> f64 {
        self.empty
    }

    pub fn sum(&self) -> f64 {
        self.ac + self.nac + self.omega + self.empty
    }

    pub fn is_vacuous(&self) -> bool {
        self.omega == 1.0
    }

    /// Components in `[ac, nac, omega, empty]` order.
    pub fn to_array(&self) -> [f64; 4] {
        [self.ac, self.nac, self.omega, self.empty]
    }

    /// Reliability discounting: committed mass shrinks by `δ`, the rest goes to `Ω`.
    pub fn discount(&self, reliability: Reliability) -> Result<Self, BeliefError> {
        if self.empty > 0.0 {
            return Err(BeliefError::ConflictPresent(self.empty));
        }
        let delta = reliability.value();
        if delta == 1.0 {
            return Ok(*self);
        }
        let ac = delta * self.ac;
        let nac = delta * self.nac;
        let omega = 1.0 - delta * (1.0 - self.omega);
        Self::new(ac, nac, omega)
    }

    /// Unnormalized conjunctive combination.
    ///
    /// Products of intersecting focal sets accumulate on the intersection;
    /// disjoint pairs and anything meeting `∅` accumulate on `∅`.
    pub fn combine(&self, other: &Self) -> Self {
        let (a, b) = (self, other);
        let ac = a.ac * b.ac + a.ac * b.omega + a.omega * b.ac;
        let nac = a.nac * b.nac + a.nac * b.omega + a.omega * b.nac;
        let omega = a.omega * b.omega;
        let empty = a.ac * b.nac
            + a.nac * b.ac
            + a.empty * (b.ac + b.nac + b.omega + b.empty)
            + (a.ac + a.nac + a.omega) * b.empty;
        Self {
            ac,
            nac,
            omega,
            empty,
        }
    }

    /// Pignistic probability of `Ac`.
    pub fn pignistic(&self) -> Result<f64, BeliefError> {
        self.pignistic_parts().map(|(ac, _)| ac)
    }

    /// Pignistic probability of `NotAc`.
    pub fn pignistic_not_ac(&self) -> Result<f64, BeliefError> {
        self.pignistic_parts().map(|(_, nac)| nac)
    }

    fn pignistic_parts(&self) -> Result<(f64, f64), BeliefError> {
        if self.empty >= 1.0 - TOTAL_CONFLICT_MARGIN {
            return Err(BeliefError::TotalConflict(self.empty));
        }
        let scale = 1.0 - self.empty;
        let half_omega = self.omega / 2.0;
        Ok((
            ((self.ac + half_omega) / scale).clamp(0.0, 1.0),
            ((self.nac + half_omega) / scale).clamp(0.0, 1.0),
        ))
    }
}

impl Default for MassFunction {
    fn default() -> Self {
        Self::vacuous()
    }
}

fn clamp_noise<const N: usize>(values: [f64; N]) -> Result<[f64; N], BeliefError> {
    let mut out = values;
    for v in out.iter_mut() {
        if v.is_nan() || *v < -NEGATIVE_NOISE {
            return Err(BeliefError::NegativeMass(*v));
        }
        if *v < 0.0 {
            *v = 0.0;
        }
    }
    Ok(out)
}

/// Source reliability coefficient `δ ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Reliability(f64);

impl Reliability {
    pub const FULL: Reliability = Reliability(1.0);

    pub fn new(delta: f64) -> Result<Self, BeliefError> {
        if (0.0..=1.0).contains(&delta) {
            Ok(Self(delta))
        } else {
            Err(BeliefError::InvalidReliability(delta))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for Reliability {
    fn default() -> Self {
        Self::FULL
    }
}

impl TryFrom<f64> for Reliability {
    type Error = BeliefError;

    fn try_from(value: f64) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl From<Reliability> for f64 {
    fn from(r: Reliability) -> f64 {
        r.0
    }
}

pub fn make_mass(ac: f64, nac: f64, omega: f64) -> Result<MassFunction, BeliefError> {
    MassFunction::new(ac, nac, omega)
}

pub fn vacuous() -> MassFunction {
    MassFunction::vacuous()
}

pub fn discount(m: &MassFunction, reliability: Reliability) -> Result<MassFunction, BeliefError> {
    m.discount(reliability)
}

pub fn combine_conjunctive(a: &MassFunction, b: &MassFunction) -> MassFunction {
    a.combine(b)
}

/// Left fold of [`combine_conjunctive`] over `sources`.
pub fn combine_all<'a, I>(sources: I) -> Result<MassFunction, BeliefError>
where
    I: IntoIterator<Item = &'a MassFunction>,
{
    let mut iter = sources.into_iter();
    let first = *iter.next().ok_or(BeliefError::EmptySourceSet)?;
    Ok(iter.fold(first, |acc, m| acc.combine(m)))
}

pub fn pignistic(m: &MassFunction) -> Result<f64, BeliefError> {
    m.pignistic()
}
