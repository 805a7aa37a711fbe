//! Harish-Chandra parameter spaces of `GL(n, R)` and `GL(n, C)`.
//!
//! The tempered dual is a disjoint union of orbit spaces `X(M)/W_σ(M)`. Each
//! piece is either a Euclidean space (trivial isotropy) or a closed cone
//! `R^d / (S_{m_1} x ... x S_{m_k})`. A catalog lists the pieces whose
//! discrete labels fit under a cutoff.

use std::fmt;
use std::ops::Range;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::levi::{
    enumerate_levi_shapes, enumerate_orbits, isotropy, runs_of, IsotropyDescriptor, LeviShape,
    SigmaOrbit,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    Free,
    Cone(IsotropyDescriptor),
}

impl ComponentKind {
    fn from_isotropy(iso: IsotropyDescriptor) -> Self {
        if iso.is_generic() {
            ComponentKind::Free
        } else {
            ComponentKind::Cone(iso)
        }
    }

    pub fn is_free(&self) -> bool {
        matches!(self, ComponentKind::Free)
    }

    pub fn multiplicities(&self) -> &[usize] {
        match self {
            ComponentKind::Free => &[],
            ComponentKind::Cone(iso) => &iso.multiplicities,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ComponentKind::Free => "free",
            ComponentKind::Cone(_) => "cone",
        }
    }
}

/// Common surface of real and complex components.
pub trait OrbitSpace {
    fn dimension(&self) -> usize;
    fn kind(&self) -> &ComponentKind;
    /// Stable string identifier, used as a generator reference.
    fn key(&self) -> String;

    fn is_free(&self) -> bool {
        self.kind().is_free()
    }
}

/// A connected component of the tempered dual of `GL(n, R)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub shape: LeviShape,
    pub orbit: SigmaOrbit,
    pub dimension: usize,
    pub kind: ComponentKind,
}

impl Component {
    pub fn new(orbit: SigmaOrbit) -> Self {
        let shape = orbit.shape();
        Self {
            shape,
            dimension: shape.dimension(),
            kind: ComponentKind::from_isotropy(isotropy(&orbit)),
            orbit,
        }
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }
}

impl OrbitSpace for Component {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn kind(&self) -> &ComponentKind {
        &self.kind
    }

    fn key(&self) -> String {
        format!("shape:{},{}|{}", self.shape.q, self.shape.r, self.orbit)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// A connected component of the tempered dual of `GL(n, C)`: a multiset of
/// `n` circle exponents, one per torus coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexComponent {
    labels: Vec<i64>,
    pub dimension: usize,
    pub kind: ComponentKind,
}

impl ComplexComponent {
    pub fn new(mut labels: Vec<i64>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::ZeroRank);
        }
        labels.sort_unstable();
        let kind = ComponentKind::from_isotropy(IsotropyDescriptor::from_sorted(&[&labels]));
        Ok(Self {
            dimension: labels.len(),
            labels,
            kind,
        })
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }
}

impl OrbitSpace for ComplexComponent {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn kind(&self) -> &ComponentKind {
        &self.kind
    }

    fn key(&self) -> String {
        format!("labels:{}", self.labels.iter().join(","))
    }
}

impl fmt::Display for ComplexComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// Components of the tempered dual of `GL(n, R)` with discrete-series labels
/// at most `cutoff`, shape-major then orbit order.
pub fn real_components(n: usize, cutoff: usize) -> Result<Vec<Component>> {
    let mut catalog = Vec::new();
    for shape in enumerate_levi_shapes(n)? {
        catalog.extend(
            enumerate_orbits(shape, cutoff)?
                .into_iter()
                .map(Component::new),
        );
    }
    Ok(catalog)
}

/// Components of the tempered dual of `GL(n, C)` with labels in
/// `[-cutoff, cutoff]`, lexicographic in the sorted label vector.
pub fn complex_components(n: usize, cutoff: usize) -> Result<Vec<ComplexComponent>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if cutoff == 0 {
        return Err(Error::ZeroCutoff);
    }
    let bound = i64::try_from(cutoff)
        .map_err(|_| Error::InvalidLabel(format!("cutoff {cutoff} exceeds label range")))?;
    (-bound..=bound)
        .combinations_with_replacement(n)
        .map(ComplexComponent::new)
        .collect()
}

/// Shape of the canonical chart `R^d / ∏ S_{m_i} ≅ R^lines x [0, ∞)^rays`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConeChart {
    pub num_lines: usize,
    pub num_rays: usize,
}

pub fn cone_chart<C: OrbitSpace + ?Sized>(component: &C) -> ConeChart {
    let multiplicities = component.kind().multiplicities();
    let num_rays: usize = multiplicities.iter().map(|m| m - 1).sum();
    ConeChart {
        num_lines: component.dimension() - num_rays,
        num_rays,
    }
}

/// Mean-and-gaps coordinates of a point in a cone chart.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartCoordinates {
    /// One block mean per run of equal labels.
    pub lines: Vec<f64>,
    /// Consecutive gaps inside each run, all non-negative.
    pub rays: Vec<f64>,
}

fn chart_coordinates(runs: &[Range<usize>], params: &[f64]) -> ChartCoordinates {
    let mut lines = Vec::with_capacity(runs.len());
    let mut rays = Vec::new();
    for run in runs {
        let block = &params[run.clone()];
        lines.push(block.iter().sum::<f64>() / block.len() as f64);
        rays.extend(block.windows(2).map(|w| w[1] - w[0]));
    }
    ChartCoordinates { lines, rays }
}

fn params_from_chart(runs: &[Range<usize>], coords: &ChartCoordinates) -> Result<Vec<f64>> {
    let num_rays: usize = runs.iter().map(|run| run.len() - 1).sum();
    if coords.lines.len() != runs.len() || coords.rays.len() != num_rays {
        return Err(Error::LengthMismatch {
            expected: runs.len() + num_rays,
            got: coords.lines.len() + coords.rays.len(),
        });
    }
    if !coords.rays.iter().all(|g| *g >= 0.0) {
        return Err(Error::InvalidLabel(
            "chart gaps must be non-negative".to_string(),
        ));
    }
    let mut params = Vec::with_capacity(runs.last().map_or(0, |r| r.end));
    let mut gaps = coords.rays.iter().copied();
    for (run, &mean) in runs.iter().zip(&coords.lines) {
        let m = run.len();
        let block_gaps: Vec<f64> = gaps.by_ref().take(m - 1).collect();
        // x_1 = mean - (1/m) Σ_j (m - j) g_j
        let offset: f64 = block_gaps
            .iter()
            .enumerate()
            .map(|(j, g)| (m - 1 - j) as f64 * g)
            .sum::<f64>()
            / m as f64;
        let mut x = mean - offset;
        params.push(x);
        for g in block_gaps {
            x += g;
            params.push(x);
        }
    }
    Ok(params)
}

fn sort_runs(runs: &[Range<usize>], params: &mut [f64]) {
    for run in runs {
        params[run.clone()].sort_by(f64::total_cmp);
    }
}

/// Points with a canonical representative per isotropy orbit.
pub trait TemperedPoint: Sized {
    fn canonicalize(&self) -> Result<Self>;
}

pub fn canonicalize_point<P: TemperedPoint>(point: &P) -> Result<P> {
    point.canonicalize()
}

/// A point of a real component: the continuous parameters `t_i`, gl2 blocks
/// first, aligned with the canonical label order.
#[derive(Debug, Clone, PartialEq)]
pub struct RealTemperedPoint {
    pub component: Component,
    pub params: Vec<f64>,
}

impl RealTemperedPoint {
    pub fn new(component: Component, params: Vec<f64>) -> Result<Self> {
        Self { component, params }.canonicalize()
    }

    pub fn chart_coordinates(&self) -> ChartCoordinates {
        chart_coordinates(&self.component.orbit.label_runs(), &self.params)
    }

    pub fn from_chart_coordinates(component: Component, coords: &ChartCoordinates) -> Result<Self> {
        let params = params_from_chart(&component.orbit.label_runs(), coords)?;
        Self::new(component, params)
    }
}

impl TemperedPoint for RealTemperedPoint {
    fn canonicalize(&self) -> Result<Self> {
        check_len(self.component.dimension, self.params.len())?;
        let mut params = self.params.clone();
        sort_runs(&self.component.orbit.label_runs(), &mut params);
        Ok(Self {
            component: self.component.clone(),
            params,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexTemperedPoint {
    pub component: ComplexComponent,
    pub params: Vec<f64>,
}

impl ComplexTemperedPoint {
    pub fn new(component: ComplexComponent, params: Vec<f64>) -> Result<Self> {
        Self { component, params }.canonicalize()
    }

    /// Builds a point from unsorted `(label, t)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, f64)>) -> Result<Self> {
        let mut pairs: Vec<(i64, f64)> = pairs.into_iter().collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
        let (labels, params): (Vec<i64>, Vec<f64>) = pairs.into_iter().unzip();
        Self::new(ComplexComponent::new(labels)?, params)
    }

    pub fn chart_coordinates(&self) -> ChartCoordinates {
        chart_coordinates(&runs_of(self.component.labels()), &self.params)
    }
}

impl TemperedPoint for ComplexTemperedPoint {
    fn canonicalize(&self) -> Result<Self> {
        check_len(self.component.dimension, self.params.len())?;
        let mut params = self.params.clone();
        sort_runs(&runs_of(self.component.labels()), &mut params);
        Ok(Self {
            component: self.component.clone(),
            params,
        })
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::LengthMismatch { expected, got });
    }
    Ok(())
}
