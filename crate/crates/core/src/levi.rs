//! Levi shapes of `GL(n, R)` and the discrete-series data living on them.
//!
//! Over the reals only blocks of size one and two carry discrete series, so a
//! Levi subgroup up to conjugacy is a partition `n = 2q + r`. A discrete-series
//! datum on it is a multiset of `GL(2)` labels `l >= 1` together with a
//! multiset of signs for the `GL(1)` blocks.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition `n = 2q + r` into `q` blocks of size two and `r` of size one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeviShape {
    pub q: usize,
    pub r: usize,
}

impl LeviShape {
    pub fn new(q: usize, r: usize) -> Result<Self> {
        if 2 * q + r == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self { q, r })
    }

    pub fn n(&self) -> usize {
        2 * self.q + self.r
    }

    /// Dimension of the unramified characters `X(M)`.
    pub fn dimension(&self) -> usize {
        self.q + self.r
    }
}

impl Ord for LeviShape {
    /// Shapes of one rank are ordered by descending number of 2-blocks.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n().cmp(&other.n()).then_with(|| other.q.cmp(&self.q))
    }
}

impl PartialOrd for LeviShape {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LeviShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", 2 * self.q, self.r)
    }
}

/// All `floor(n/2) + 1` shapes of rank `n`, descending in `q`.
pub fn enumerate_levi_shapes(n: usize) -> Result<Vec<LeviShape>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    Ok((0..=n / 2)
        .rev()
        .map(|q| LeviShape { q, r: n - 2 * q })
        .collect())
}

/// The Weyl group `W(M) = S_q x S_r` as a list of symmetric-group degrees.
///
/// Trivial factors `S_0` and `S_1` are dropped, so the trivial group is the
/// empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylDescriptor {
    pub factor_degrees: Vec<usize>,
}

impl WeylDescriptor {
    pub fn is_trivial(&self) -> bool {
        self.factor_degrees.is_empty()
    }

    pub fn order(&self) -> u128 {
        self.factor_degrees
            .iter()
            .map(|&d| (1..=d as u128).product::<u128>())
            .product()
    }
}

impl fmt::Display for WeylDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let factors = self
            .factor_degrees
            .iter()
            .map(|d| format!("S{d}"))
            .join(" x ");
        f.write_str(&factors)
    }
}

pub fn weyl_group(shape: LeviShape) -> WeylDescriptor {
    WeylDescriptor {
        factor_degrees: [shape.q, shape.r].into_iter().filter(|&d| d >= 2).collect(),
    }
}

/// Character of `SL±(1, R) = Z/2` carried by a 1-block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    /// `x -> x`, encoded as 0.
    Trivial,
    /// `x -> x/|x|`, encoded as 1.
    Sign,
}

impl Sign {
    pub fn from_exponent(epsilon: u8) -> Result<Self> {
        match epsilon {
            0 => Ok(Sign::Trivial),
            1 => Ok(Sign::Sign),
            other => Err(Error::InvalidLabel(format!(
                "sign exponent must be 0 or 1, got {other}"
            ))),
        }
    }

    pub fn exponent(self) -> u8 {
        match self {
            Sign::Trivial => 0,
            Sign::Sign => 1,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.exponent())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = u8::deserialize(deserializer)?;
        Sign::from_exponent(raw).map_err(serde::de::Error::custom)
    }
}

/// One representative of a `W(M)`-orbit of discrete-series data.
///
/// Both label blocks are kept sorted ascending, so structural equality is
/// orbit equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SigmaOrbit {
    gl2_labels: Vec<u32>,
    gl1_labels: Vec<Sign>,
}

impl SigmaOrbit {
    pub fn new(mut gl2_labels: Vec<u32>, mut gl1_labels: Vec<Sign>) -> Result<Self> {
        if gl2_labels.is_empty() && gl1_labels.is_empty() {
            return Err(Error::ZeroRank);
        }
        if gl2_labels.contains(&0) {
            return Err(Error::InvalidLabel(
                "discrete-series labels start at 1".to_string(),
            ));
        }
        gl2_labels.sort_unstable();
        gl1_labels.sort_unstable();
        Ok(Self {
            gl2_labels,
            gl1_labels,
        })
    }

    pub fn gl2_labels(&self) -> &[u32] {
        &self.gl2_labels
    }

    pub fn gl1_labels(&self) -> &[Sign] {
        &self.gl1_labels
    }

    pub fn shape(&self) -> LeviShape {
        LeviShape {
            q: self.gl2_labels.len(),
            r: self.gl1_labels.len(),
        }
    }

    /// Positions (into the concatenated parameter vector) of each run of
    /// equal labels, gl2 block first.
    pub(crate) fn label_runs(&self) -> Vec<std::ops::Range<usize>> {
        let mut runs = runs_of(&self.gl2_labels);
        let offset = self.gl2_labels.len();
        runs.extend(
            runs_of(&self.gl1_labels)
                .into_iter()
                .map(|run| run.start + offset..run.end + offset),
        );
        runs
    }
}

impl fmt::Display for SigmaOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "gl2:{}|gl1:{}",
            self.gl2_labels.iter().join(","),
            self.gl1_labels.iter().map(|s| s.exponent()).join(",")
        )
    }
}

/// Maximal runs of equal adjacent entries in a sorted slice.
pub(crate) fn runs_of<T: PartialEq>(sorted: &[T]) -> Vec<std::ops::Range<usize>> {
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i] != sorted[start] {
            runs.push(start..i);
            start = i;
        }
    }
    runs
}

/// The stabilizer `W_σ(M)`, a product of symmetric groups on repeated labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IsotropyDescriptor {
    /// Multiplicities `>= 2`, gl2 block first, each block in label order.
    pub multiplicities: Vec<usize>,
}

impl IsotropyDescriptor {
    pub(crate) fn from_sorted<T: PartialEq>(blocks: &[&[T]]) -> Self {
        let multiplicities = blocks
            .iter()
            .flat_map(|block| runs_of(block))
            .map(|run| run.len())
            .filter(|&m| m >= 2)
            .collect();
        Self { multiplicities }
    }

    pub fn is_generic(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// `Σ (m_i - 1)`, the number of half-line factors of the orbit space.
    pub fn defect(&self) -> usize {
        self.multiplicities.iter().map(|m| m - 1).sum()
    }

    pub fn order(&self) -> u128 {
        self.multiplicities
            .iter()
            .map(|&m| (1..=m as u128).product::<u128>())
            .product()
    }
}

pub fn isotropy(orbit: &SigmaOrbit) -> IsotropyDescriptor {
    let gl2 = IsotropyDescriptor::from_sorted(&[orbit.gl2_labels()]);
    let gl1 = IsotropyDescriptor::from_sorted(&[orbit.gl1_labels()]);
    IsotropyDescriptor {
        multiplicities: gl2
            .multiplicities
            .into_iter()
            .chain(gl1.multiplicities)
            .collect(),
    }
}

/// All orbits on `shape` with gl2 labels in `1..=cutoff`, in lexicographic
/// order of their canonical forms.
pub fn enumerate_orbits(shape: LeviShape, cutoff: usize) -> Result<Vec<SigmaOrbit>> {
    if cutoff == 0 {
        return Err(Error::ZeroCutoff);
    }
    let label_max = u32::try_from(cutoff)
        .map_err(|_| Error::InvalidLabel(format!("cutoff {cutoff} exceeds label range")))?;
    let gl2_choices: Vec<Vec<u32>> = if shape.q == 0 {
        vec![Vec::new()]
    } else {
        (1..=label_max)
            .combinations_with_replacement(shape.q)
            .collect()
    };
    // a sorted sign multiset is fixed by its number of signs
    let gl1_choices: Vec<Vec<Sign>> = (0..=shape.r)
        .map(|signs| {
            let mut labels = vec![Sign::Trivial; shape.r - signs];
            labels.extend(std::iter::repeat_n(Sign::Sign, signs));
            labels
        })
        .collect();

    gl2_choices
        .iter()
        .cartesian_product(gl1_choices.iter())
        .map(|(gl2, gl1)| SigmaOrbit::new(gl2.clone(), gl1.clone()))
        .collect()
}

/// Number of size-`k` multisets over `m` symbols.
pub fn multiset_count(m: usize, k: usize) -> u128 {
    if k == 0 {
        return 1;
    }
    if m == 0 {
        return 0;
    }
    binomial(m + k - 1, k)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
