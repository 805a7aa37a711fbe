//! K-theory of the tempered duals as presented abelian groups.
//!
//! Compactly supported K-theory of `R^d` is `Z` in degree `d mod 2` and zero
//! otherwise; a closed cone has vanishing K-theory. The K-groups of a
//! component catalog are therefore free on its free components, bucketed by
//! dimension parity. Each presentation also carries the closed-form index
//! family that describes the untruncated group.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::levi::binomial;
use crate::param_space::{complex_components, real_components, OrbitSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Zero,
    One,
}

impl Serialize for Degree {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.index() as u8)
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        match u8::deserialize(deserializer)? {
            0 => Ok(Degree::Zero),
            1 => Ok(Degree::One),
            other => Err(serde::de::Error::custom(format!(
                "K-degree must be 0 or 1, got {other}"
            ))),
        }
    }
}

impl Degree {
    pub const BOTH: [Degree; 2] = [Degree::Zero, Degree::One];

    pub fn of_dimension(d: usize) -> Self {
        if d.is_multiple_of(2) {
            Degree::Zero
        } else {
            Degree::One
        }
    }

    pub fn index(self) -> usize {
        match self {
            Degree::Zero => 0,
            Degree::One => 1,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Degree::Zero => Degree::One,
            Degree::One => Degree::Zero,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Real => "R",
            Field::Complex => "C",
        })
    }
}

/// Ranks of `K^0` and `K^1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct KRanks {
    pub k0: usize,
    pub k1: usize,
}

impl KRanks {
    pub fn degree(&self, degree: Degree) -> usize {
        match degree {
            Degree::Zero => self.k0,
            Degree::One => self.k1,
        }
    }
}

/// Bott periodicity for `R^d`.
pub fn k_of_euclidean(d: usize) -> KRanks {
    match Degree::of_dimension(d) {
        Degree::Zero => KRanks { k0: 1, k1: 0 },
        Degree::One => KRanks { k0: 0, k1: 1 },
    }
}

pub fn k_of_component<C: OrbitSpace + ?Sized>(component: &C) -> KRanks {
    if component.is_free() {
        k_of_euclidean(component.dimension())
    } else {
        KRanks::default()
    }
}

/// Closed-form description of a generator family.
///
/// Generators are indexed by unordered tuples of distinct labels, so the
/// families are subsets rather than ordered tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum IndexFamily {
    /// A free group of fixed finite rank.
    Rank { rank: u64 },
    /// `size`-element subsets of `{1, 2, ...}`.
    SubsetsOfNaturals { size: usize },
    /// `size`-element subsets of `{1, 2, ...}` times a sign.
    SubsetsOfNaturalsTimesZ2 { size: usize },
    /// `size`-element subsets of `Z`.
    SubsetsOfIntegers { size: usize },
}

impl IndexFamily {
    /// Number of indices whose labels fit under `cutoff`.
    pub fn count_at(&self, cutoff: usize) -> u128 {
        match *self {
            IndexFamily::Rank { rank } => rank as u128,
            IndexFamily::SubsetsOfNaturals { size } => binomial(cutoff, size),
            IndexFamily::SubsetsOfNaturalsTimesZ2 { size } => 2 * binomial(cutoff, size),
            IndexFamily::SubsetsOfIntegers { size } => binomial(2 * cutoff + 1, size),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, IndexFamily::Rank { .. })
    }
}

impl fmt::Display for IndexFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexFamily::Rank { rank } => write!(f, "rank {rank}"),
            IndexFamily::SubsetsOfNaturals { size } => write!(f, "{size}-subsets of N"),
            IndexFamily::SubsetsOfNaturalsTimesZ2 { size } => {
                write!(f, "{size}-subsets of N x Z/2")
            }
            IndexFamily::SubsetsOfIntegers { size } => write!(f, "{size}-subsets of Z"),
        }
    }
}

/// Closed forms for `(K_0, K_1)` of `C*_r GL(n, R)`.
pub fn closed_form_real(n: usize) -> Result<[IndexFamily; 2]> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let q = n / 2;
    let mut forms = [IndexFamily::Rank { rank: 0 }; 2];
    if n.is_multiple_of(2) {
        let main = Degree::of_dimension(q);
        forms[main.index()] = IndexFamily::SubsetsOfNaturals { size: q };
        forms[main.other().index()] = if q == 1 {
            IndexFamily::Rank { rank: 1 }
        } else {
            IndexFamily::SubsetsOfNaturals { size: q - 1 }
        };
    } else {
        let main = Degree::of_dimension(q + 1);
        forms[main.index()] = if q == 0 {
            IndexFamily::Rank { rank: 2 }
        } else {
            IndexFamily::SubsetsOfNaturalsTimesZ2 { size: q }
        };
    }
    Ok(forms)
}

/// Closed forms for `(K_0, K_1)` of `C*_r GL(n, C)`.
pub fn closed_form_complex(n: usize) -> Result<[IndexFamily; 2]> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut forms = [IndexFamily::Rank { rank: 0 }; 2];
    forms[Degree::of_dimension(n).index()] = IndexFamily::SubsetsOfIntegers { size: n };
    Ok(forms)
}

/// Identifies one presented K-group: field, rank, truncation and degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PresentationId {
    pub field: Field,
    pub n: usize,
    pub cutoff: usize,
    pub degree: Degree,
}

impl fmt::Display for PresentationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "K{}(GL({},{}), cutoff {})",
            self.degree, self.n, self.field, self.cutoff
        )
    }
}

/// Reference to a generator: the key of the free component it comes from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratorRef(pub String);

impl GeneratorRef {
    pub fn of<C: OrbitSpace + ?Sized>(component: &C) -> Self {
        GeneratorRef(component.key())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for GeneratorRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KGroupPresentation {
    pub id: PresentationId,
    /// Free generators in catalog order.
    pub generators: Vec<GeneratorRef>,
    pub closed_form: IndexFamily,
}

impl KGroupPresentation {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn degree(&self) -> Degree {
        self.id.degree
    }

    pub fn contains(&self, generator: &GeneratorRef) -> bool {
        self.generators.contains(generator)
    }

    pub fn zero(&self) -> KClass {
        KClass::zero(self.id)
    }

    /// `coefficient` times the named generator.
    pub fn class(&self, generator: &GeneratorRef, coefficient: i64) -> Result<KClass> {
        if !self.contains(generator) {
            return Err(Error::UnknownGenerator {
                generator: generator.to_string(),
                presentation: self.id.to_string(),
            });
        }
        let mut class = KClass::zero(self.id);
        if coefficient != 0 {
            class.coefficients.insert(generator.clone(), coefficient);
        }
        Ok(class)
    }
}

/// `K_0` and `K_1` of one tempered dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KGroups {
    pub k0: KGroupPresentation,
    pub k1: KGroupPresentation,
}

impl KGroups {
    pub fn degree(&self, degree: Degree) -> &KGroupPresentation {
        match degree {
            Degree::Zero => &self.k0,
            Degree::One => &self.k1,
        }
    }

    pub fn ranks(&self) -> KRanks {
        KRanks {
            k0: self.k0.rank(),
            k1: self.k1.rank(),
        }
    }
}

fn present<C: OrbitSpace>(
    field: Field,
    n: usize,
    cutoff: usize,
    catalog: &[C],
    closed_forms: [IndexFamily; 2],
) -> KGroups {
    let mut generators: [Vec<GeneratorRef>; 2] = [Vec::new(), Vec::new()];
    for component in catalog {
        let ranks = k_of_component(component);
        for degree in Degree::BOTH {
            if ranks.degree(degree) > 0 {
                generators[degree.index()].push(GeneratorRef::of(component));
            }
        }
    }
    let [g0, g1] = generators;
    let build = |degree: Degree, generators: Vec<GeneratorRef>| KGroupPresentation {
        id: PresentationId {
            field,
            n,
            cutoff,
            degree,
        },
        generators,
        closed_form: closed_forms[degree.index()],
    };
    KGroups {
        k0: build(Degree::Zero, g0),
        k1: build(Degree::One, g1),
    }
}

/// Presentation of the real K-groups with no visibility requirement on the
/// cutoff; some generator families may be empty.
pub(crate) fn present_real(n: usize, cutoff: usize) -> Result<KGroups> {
    let catalog = real_components(n, cutoff)?;
    Ok(present(
        Field::Real,
        n,
        cutoff,
        &catalog,
        closed_form_real(n)?,
    ))
}

pub(crate) fn present_complex(n: usize, cutoff: usize) -> Result<KGroups> {
    let catalog = complex_components(n, cutoff)?;
    Ok(present(
        Field::Complex,
        n,
        cutoff,
        &catalog,
        closed_form_complex(n)?,
    ))
}

/// `K_*(C*_r GL(n, R))` truncated at `cutoff`.
///
/// The cutoff must allow `q = floor(n/2)` distinct discrete-series labels so
/// that the leading generator family is visible.
pub fn k_real(n: usize, cutoff: usize) -> Result<KGroups> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let q = n / 2;
    let required = q.max(1);
    if cutoff < required {
        return Err(Error::CutoffTooSmall {
            n,
            cutoff,
            required,
            labels: q,
        });
    }
    present_real(n, cutoff)
}

/// `K_*(C*_r GL(n, C))` truncated at `cutoff`; needs `2 * cutoff + 1 >= n`.
pub fn k_complex(n: usize, cutoff: usize) -> Result<KGroups> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let required = (n / 2).max(1);
    if cutoff < required {
        return Err(Error::CutoffTooSmall {
            n,
            cutoff,
            required,
            labels: n,
        });
    }
    present_complex(n, cutoff)
}

/// An element of a presented K-group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KClass {
    pub presentation: PresentationId,
    coefficients: BTreeMap<GeneratorRef, i64>,
}

impl KClass {
    pub fn zero(presentation: PresentationId) -> Self {
        Self {
            presentation,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficients(&self) -> &BTreeMap<GeneratorRef, i64> {
        &self.coefficients
    }

    pub fn coefficient(&self, generator: &GeneratorRef) -> i64 {
        self.coefficients.get(generator).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &KClass) -> Result<KClass> {
        if self.presentation != other.presentation {
            return Err(Error::PresentationMismatch {
                left: self.presentation.to_string(),
                right: other.presentation.to_string(),
            });
        }
        let mut sum = self.clone();
        for (generator, &c) in &other.coefficients {
            sum.add_term(generator, c);
        }
        Ok(sum)
    }

    pub fn scale(&self, factor: i64) -> KClass {
        let mut scaled = KClass::zero(self.presentation);
        if factor != 0 {
            scaled.coefficients = self
                .coefficients
                .iter()
                .map(|(g, c)| (g.clone(), c * factor))
                .collect();
        }
        scaled
    }

    pub fn neg(&self) -> KClass {
        self.scale(-1)
    }

    pub(crate) fn add_term(&mut self, generator: &GeneratorRef, coefficient: i64) {
        let entry = self.coefficients.entry(generator.clone()).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.coefficients.remove(generator);
        }
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .map(|(g, c)| format!("{c}*[{g}]"))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

pub fn kclass_add(a: &KClass, b: &KClass) -> Result<KClass> {
    a.add(b)
}

pub fn kclass_scale(a: &KClass, factor: i64) -> KClass {
    a.scale(factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levi::{SigmaOrbit, Sign};
    use crate::param_space::{ComplexComponent, Component};

    #[test]
    fn euclidean_spaces() {
        assert_eq!(k_of_euclidean(0), KRanks { k0: 1, k1: 0 });
        assert_eq!(k_of_euclidean(1), KRanks { k0: 0, k1: 1 });
        assert_eq!(k_of_euclidean(2), KRanks { k0: 1, k1: 0 });
    }

    #[test]
    fn components() {
        let cone = Component::new(SigmaOrbit::new(vec![], vec![Sign::Trivial; 2]).unwrap());
        assert_eq!(k_of_component(&cone), KRanks::default());

        let free = Component::new(SigmaOrbit::new(vec![1, 2], vec![Sign::Sign]).unwrap());
        assert_eq!(k_of_component(&free), KRanks { k0: 0, k1: 1 });

        let cone = ComplexComponent::new(vec![1, 1, 2, 2, 3]).unwrap();
        assert_eq!(k_of_component(&cone), KRanks::default());
    }

    #[test]
    fn gl1_real() {
        let k = k_real(1, 1).unwrap();
        assert_eq!(k.ranks(), KRanks { k0: 0, k1: 2 });
    }

    #[test]
    fn gl3_and_gl4_real() {
        assert_eq!(k_real(3, 4).unwrap().ranks(), KRanks { k0: 8, k1: 0 });
        assert_eq!(k_real(4, 5).unwrap().ranks(), KRanks { k0: 10, k1: 5 });
    }

    #[test]
    fn real_cutoff_too_small() {
        assert_eq!(
            k_real(6, 2),
            Err(Error::CutoffTooSmall {
                n: 6,
                cutoff: 2,
                required: 3,
                labels: 3
            })
        );
        assert!(k_real(6, 3).is_ok());
    }

    #[test]
    fn complex_groups() {
        assert_eq!(k_complex(2, 1).unwrap().ranks(), KRanks { k0: 3, k1: 0 });
        assert_eq!(k_complex(1, 2).unwrap().ranks(), KRanks { k0: 0, k1: 5 });
        let k = k_complex(3, 1).unwrap();
        assert_eq!(k.ranks(), KRanks { k0: 0, k1: 1 });
        assert_eq!(k.k1.generators, vec![GeneratorRef("labels:-1,0,1".into())]);
        assert!(matches!(k_complex(4, 1), Err(Error::CutoffTooSmall { .. })));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            closed_form_real(6).unwrap(),
            [
                IndexFamily::SubsetsOfNaturals { size: 2 },
                IndexFamily::SubsetsOfNaturals { size: 3 }
            ]
        );
        assert_eq!(
            closed_form_real(1).unwrap(),
            [IndexFamily::Rank { rank: 0 }, IndexFamily::Rank { rank: 2 }]
        );
        assert_eq!(
            closed_form_real(2).unwrap(),
            [
                IndexFamily::Rank { rank: 1 },
                IndexFamily::SubsetsOfNaturals { size: 1 }
            ]
        );
        assert_eq!(
            closed_form_real(5).unwrap(),
            [
                IndexFamily::Rank { rank: 0 },
                IndexFamily::SubsetsOfNaturalsTimesZ2 { size: 2 }
            ]
        );
        assert_eq!(closed_form_real(0), Err(Error::ZeroRank));
        assert_eq!(
            IndexFamily::SubsetsOfNaturalsTimesZ2 { size: 1 }.to_string(),
            "1-subsets of N x Z/2"
        );
    }

    #[test]
    fn class_arithmetic() {
        let k = k_real(1, 1).unwrap();
        let g1 = &k.k1.generators[0];
        let g2 = &k.k1.generators[1];
        let a = k.k1.class(g1, 1).unwrap();
        let b = k.k1.class(g2, 1).unwrap();

        assert!(kclass_add(&a, &kclass_scale(&a, -1)).unwrap().is_zero());

        let sum = kclass_add(&a, &b).unwrap();
        assert_eq!(sum.coefficient(g1), 1);
        assert_eq!(sum.coefficient(g2), 1);
        assert_eq!(sum.coefficients().len(), 2);

        let three = k.k1.class(g1, 3).unwrap();
        assert_eq!(three.scale(2).coefficient(g1), 6);
        assert!(three.scale(0).is_zero());
        assert!(k.k1.class(g1, 0).unwrap().is_zero());
    }

    #[test]
    fn mixed_presentations_do_not_add() {
        let k = k_real(2, 2).unwrap();
        let a = k.k1.class(&k.k1.generators[0], 1).unwrap();
        let b = k.k0.class(&k.k0.generators[0], 1).unwrap();
        assert!(matches!(a.add(&b), Err(Error::PresentationMismatch { .. })));
    }

    #[test]
    fn unknown_generator() {
        let k = k_real(2, 2).unwrap();
        let cone = GeneratorRef("shape:0,2|gl2:|gl1:0,0".into());
        assert!(matches!(
            k.k0.class(&cone, 1),
            Err(Error::UnknownGenerator { .. })
        ));
    }
}
