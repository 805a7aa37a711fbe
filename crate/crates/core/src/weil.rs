//! Tempered L-parameters of the Weil groups `W_R = C^x ⋊ Z/2` and `W_C = C^x`.
//!
//! A tempered parameter is a multiset of unitary characters: one-dimensional
//! summands `x -> sgn(x)^ε |x|^{it}` of `W_R^ab = R^x` and two-dimensional
//! summands induced from `z -> (z/|z|)^l |z|^{it}` on `C^x`. On the complex
//! side every summand is a character of `C^x`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::levi::{SigmaOrbit, Sign};
use crate::param_space::{ComplexComponent, ComplexTemperedPoint, Component, RealTemperedPoint};

/// `x -> sgn(x)^ε |x|^{it}` on `R^x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealCharacter {
    pub epsilon: Sign,
    pub t: f64,
}

/// `z -> (z/|z|)^l |z|^{it}` on `C^x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexCharacter {
    pub ell: i64,
    pub t: f64,
}

impl ComplexCharacter {
    pub fn new(ell: i64, t: f64) -> Self {
        Self { ell, t }
    }

    /// `χ^σ = χ ∘ conj`: the circle exponent flips sign.
    pub fn conjugate(self) -> Self {
        Self {
            ell: -self.ell,
            t: self.t,
        }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.ell.cmp(&other.ell).then(self.t.total_cmp(&other.t))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RealSummand {
    OneDim(RealCharacter),
    /// Induced from `C^x`; the label is kept `>= 1` since `ind χ ≅ ind χ^σ`.
    TwoDimInduced(ComplexCharacter),
}

impl RealSummand {
    pub fn one_dim(epsilon: Sign, t: f64) -> Self {
        RealSummand::OneDim(RealCharacter { epsilon, t })
    }

    /// Induced summand from `(ell, t)`; `ell = 0` is rejected because the
    /// induced representation is then reducible.
    pub fn induced(ell: i64, t: f64) -> Result<Self> {
        let label = ell.unsigned_abs();
        if label == 0 || label > u32::MAX as u64 {
            return Err(Error::InvalidLabel(format!(
                "induced summands need 1 <= |l| <= {}, got {ell}",
                u32::MAX
            )));
        }
        Ok(RealSummand::TwoDimInduced(ComplexCharacter {
            ell: label as i64,
            t,
        }))
    }

    pub fn dimension(&self) -> usize {
        match self {
            RealSummand::OneDim(_) => 1,
            RealSummand::TwoDimInduced(_) => 2,
        }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RealSummand::TwoDimInduced(a), RealSummand::TwoDimInduced(b)) => a.canonical_cmp(b),
            (RealSummand::TwoDimInduced(_), RealSummand::OneDim(_)) => Ordering::Less,
            (RealSummand::OneDim(_), RealSummand::TwoDimInduced(_)) => Ordering::Greater,
            (RealSummand::OneDim(a), RealSummand::OneDim(b)) => {
                a.epsilon.cmp(&b.epsilon).then(a.t.total_cmp(&b.t))
            }
        }
    }
}

/// A tempered L-parameter of `GL(n, R)`, summands in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct LParameterR {
    summands: Vec<RealSummand>,
}

impl LParameterR {
    pub fn new(mut summands: Vec<RealSummand>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::ZeroRank);
        }
        summands.sort_by(RealSummand::canonical_cmp);
        Ok(Self { summands })
    }

    pub fn summands(&self) -> &[RealSummand] {
        &self.summands
    }

    pub fn dimension(&self) -> usize {
        self.summands.iter().map(RealSummand::dimension).sum()
    }
}

/// A tempered L-parameter of `GL(n, C)`: `n` characters of `C^x`.
#[derive(Debug, Clone, PartialEq)]
pub struct LParameterC {
    summands: Vec<ComplexCharacter>,
}

impl LParameterC {
    pub fn new(mut summands: Vec<ComplexCharacter>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::ZeroRank);
        }
        summands.sort_by(ComplexCharacter::canonical_cmp);
        Ok(Self { summands })
    }

    pub fn summands(&self) -> &[ComplexCharacter] {
        &self.summands
    }

    pub fn dimension(&self) -> usize {
        self.summands.len()
    }
}

/// Restriction from `W_R` to `W_C = C^x`.
///
/// A character of `R^x` pulls back along the norm `z -> |z|^2`, doubling `t`;
/// an induced summand splits as `χ ⊕ χ^σ`.
pub fn restrict(parameter: &LParameterR) -> LParameterC {
    let summands = parameter
        .summands
        .iter()
        .flat_map(|summand| match *summand {
            RealSummand::OneDim(chi) => vec![ComplexCharacter::new(0, 2.0 * chi.t)],
            RealSummand::TwoDimInduced(chi) => vec![chi, chi.conjugate()],
        })
        .collect();
    LParameterC::new(summands).expect("restriction of a nonempty parameter is nonempty")
}

/// Local Langlands bookkeeping for `GL(n, R)`: induced summands become
/// discrete-series blocks, characters become `GL(1)` blocks.
pub fn langlands_real(parameter: &LParameterR) -> RealTemperedPoint {
    let mut gl2 = Vec::new();
    let mut gl1 = Vec::new();
    for summand in &parameter.summands {
        match *summand {
            RealSummand::TwoDimInduced(chi) => gl2.push((chi.ell as u32, chi.t)),
            RealSummand::OneDim(chi) => gl1.push((chi.epsilon, chi.t)),
        }
    }
    // canonical summand order already sorts each block by (label, t)
    let orbit = SigmaOrbit::new(
        gl2.iter().map(|(l, _)| *l).collect(),
        gl1.iter().map(|(e, _)| *e).collect(),
    )
    .expect("validated labels");
    let params = gl2
        .iter()
        .map(|(_, t)| *t)
        .chain(gl1.iter().map(|(_, t)| *t))
        .collect();
    RealTemperedPoint::new(Component::new(orbit), params).expect("one parameter per block")
}

/// Inverse of [`langlands_real`].
pub fn real_parameter(point: &RealTemperedPoint) -> LParameterR {
    let orbit = &point.component.orbit;
    let q = orbit.gl2_labels().len();
    let induced = orbit
        .gl2_labels()
        .iter()
        .zip(&point.params[..q])
        .map(|(&ell, &t)| RealSummand::TwoDimInduced(ComplexCharacter::new(ell as i64, t)));
    let characters = orbit
        .gl1_labels()
        .iter()
        .zip(&point.params[q..])
        .map(|(&epsilon, &t)| RealSummand::one_dim(epsilon, t));
    LParameterR::new(induced.chain(characters).collect()).expect("points are nonempty")
}

/// Langlands bookkeeping for `GL(n, C)`: principal series from the torus.
pub fn langlands_complex(parameter: &LParameterC) -> ComplexTemperedPoint {
    ComplexTemperedPoint::from_pairs(parameter.summands.iter().map(|chi| (chi.ell, chi.t)))
        .expect("nonempty parameter")
}

/// Inverse of [`langlands_complex`].
pub fn complex_parameter(point: &ComplexTemperedPoint) -> LParameterC {
    let summands = point
        .component
        .labels()
        .iter()
        .zip(&point.params)
        .map(|(&ell, &t)| ComplexCharacter::new(ell, t))
        .collect();
    LParameterC::new(summands).expect("points are nonempty")
}

/// The complex component a complex parameter lands in.
pub fn complex_component_of(parameter: &LParameterC) -> ComplexComponent {
    langlands_complex(parameter).component
}
