//! Archimedean base change from `GL(n, R)` to `GL(n, C)`.
//!
//! On points, a discrete-series block `(l, t)` goes to the pair of torus
//! characters `(l, t), (-l, t)` and a `GL(1)` block `(ε, t')` goes to
//! `(0, 2t')`. On a component this is a linear map of parameter spaces
//! `(t, t') -> (t, t, 2t')`, injective and hence proper. On K-theory the
//! pullback of a generator survives only when source and target are both
//! Euclidean of the same dimension; otherwise the map factors through a
//! cone or is nullhomotopic on one-point compactifications.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ktheory::{present_complex, present_real, Degree, GeneratorRef, KClass, KGroups};
use crate::param_space::{
    real_components, ComplexComponent, ComplexTemperedPoint, Component, OrbitSpace,
    RealTemperedPoint,
};

pub fn bc_point_real(point: &RealTemperedPoint) -> ComplexTemperedPoint {
    let orbit = &point.component.orbit;
    let q = orbit.gl2_labels().len();
    let discrete = orbit
        .gl2_labels()
        .iter()
        .zip(&point.params[..q])
        .flat_map(|(&ell, &t)| [(ell as i64, t), (-(ell as i64), t)]);
    let characters = point.params[q..].iter().map(|&t| (0, 2.0 * t));
    ComplexTemperedPoint::from_pairs(discrete.chain(characters))
        .expect("base change of a nonempty point")
}

/// The linear map `X(M) -> X(T)` that base change induces on one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterMap {
    /// `2q + r` rows by `q + r` columns, rows in block order.
    pub matrix: Vec<Vec<i64>>,
    /// Torus label fed by each row.
    pub row_labels: Vec<i64>,
    pub source: Component,
    pub target: ComplexComponent,
}

impl ParameterMap {
    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.source.dimension
    }
}

pub fn bc_component(component: &Component) -> ParameterMap {
    let q = component.shape.q;
    let cols = component.dimension;
    let mut matrix = Vec::with_capacity(component.n());
    let mut row_labels = Vec::with_capacity(component.n());

    for (i, &ell) in component.orbit.gl2_labels().iter().enumerate() {
        for label in [ell as i64, -(ell as i64)] {
            let mut row = vec![0; cols];
            row[i] = 1;
            matrix.push(row);
            row_labels.push(label);
        }
    }
    for j in 0..component.shape.r {
        let mut row = vec![0; cols];
        row[q + j] = 2;
        matrix.push(row);
        row_labels.push(0);
    }

    let target = ComplexComponent::new(row_labels.clone()).expect("n >= 1 rows");
    ParameterMap {
        matrix,
        row_labels,
        source: component.clone(),
        target,
    }
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn integer_rank(matrix: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev_pivot = 1i128;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col];
        for r in rank + 1..rows {
            for c in col + 1..cols {
                // Bareiss step: exact division by the previous pivot
                a[r][c] = (pivot * a[r][c] - a[r][col] * a[rank][c]) / prev_pivot;
            }
            a[r][col] = 0;
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// A linear map of parameter spaces is proper iff it is injective.
pub fn is_proper(map: &ParameterMap) -> bool {
    matrix_is_proper(&map.matrix)
}

pub fn matrix_is_proper(matrix: &[Vec<i64>]) -> bool {
    let cols = matrix.first().map_or(0, Vec::len);
    integer_rank(matrix) == cols
}

/// Base change on K-theory, as images of complex generators in the real
/// K-groups. Generators without an entry map to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedKMap {
    pub real: KGroups,
    pub complex: KGroups,
    pub assignments: BTreeMap<GeneratorRef, KClass>,
}

impl InducedKMap {
    pub fn is_zero(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &GeneratorRef> {
        self.assignments.keys()
    }

    /// Image of a complex generator, or an error if it is not one.
    pub fn image(&self, generator: &GeneratorRef) -> Result<KClass> {
        let degree = Degree::BOTH
            .into_iter()
            .find(|&d| self.complex.degree(d).contains(generator))
            .ok_or_else(|| Error::UnknownGenerator {
                generator: generator.to_string(),
                presentation: format!("K*(GL({},C))", self.complex.k0.id.n),
            })?;
        Ok(self
            .assignments
            .get(generator)
            .cloned()
            .unwrap_or_else(|| self.real.degree(degree).zero()))
    }
}

pub fn induced_k_map(n: usize, cutoff: usize) -> Result<InducedKMap> {
    let real = present_real(n, cutoff)?;
    let complex = present_complex(n, cutoff)?;
    let mut assignments: BTreeMap<GeneratorRef, KClass> = BTreeMap::new();

    for source in real_components(n, cutoff)?.iter().filter(|c| c.is_free()) {
        let map = bc_component(source);
        let target = &map.target;
        let survives =
            target.is_free() && source.shape.q == 0 && source.dimension == target.dimension;
        if !survives {
            continue;
        }
        // t -> 2t is homotopic to the identity through injective maps
        let degree = Degree::of_dimension(target.dimension);
        let y = GeneratorRef::of(target);
        debug_assert!(complex.degree(degree).contains(&y));
        assignments
            .entry(y)
            .or_insert_with(|| real.degree(degree).zero())
            .add_term(&GeneratorRef::of(source), 1);
    }
    assignments.retain(|_, class| !class.is_zero());

    Ok(InducedKMap {
        real,
        complex,
        assignments,
    })
}

/// Linear extension of `map` to a complex K-class.
pub fn pullback(map: &InducedKMap, class: &KClass) -> Result<KClass> {
    let degree = class.presentation.degree;
    let expected = map.complex.degree(degree).id;
    if class.presentation != expected {
        return Err(Error::PresentationMismatch {
            left: class.presentation.to_string(),
            right: expected.to_string(),
        });
    }
    let mut image = map.real.degree(degree).zero();
    for (generator, &coefficient) in class.coefficients() {
        if let Some(assigned) = map.assignments.get(generator) {
            image = image.add(&assigned.scale(coefficient))?;
        }
    }
    Ok(image)
}
