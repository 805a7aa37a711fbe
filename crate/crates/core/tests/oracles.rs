//! Independent oracles checked against the engine.
//!
//! Nothing here calls into the code path being checked to produce expected
//! values: restriction is recomputed from the explicit induced representation
//! of the Weil group, ranks by rational Gaussian elimination, and catalogs by
//! brute-force enumeration of ordered tuples.

mod common;

use std::collections::BTreeSet;

use common::induced::{character_pairs_of_induced, character_pairs_of_one_dim};
use common::rational_rank;
use proptest::prelude::*;
use tempered_dual::base_change::{bc_component, integer_rank};
use tempered_dual::levi::{enumerate_levi_shapes, enumerate_orbits, Sign};
use tempered_dual::param_space::{complex_components, real_components, OrbitSpace};
use tempered_dual::weil::{restrict, LParameterR, RealSummand};

#[test]
fn induced_restriction_matches_brute_force() {
    for ell in 1..=10 {
        for &t in &[0.0, 0.5, -1.25, 2.0] {
            let oracle = character_pairs_of_induced(ell, t);
            let parameter = LParameterR::new(vec![RealSummand::induced(ell, t).unwrap()]).unwrap();
            let engine: Vec<(i64, f64)> = restrict(&parameter)
                .summands()
                .iter()
                .map(|c| (c.ell, c.t))
                .collect();
            assert_eq!(engine.len(), 2);
            for ((le, te), (lo, to)) in engine.iter().zip(&oracle) {
                assert_eq!(le, lo, "ell = {ell}, t = {t}");
                assert!((te - to).abs() < 1e-9, "ell = {ell}, t = {t}: {te} vs {to}");
            }
        }
    }
}

#[test]
fn one_dimensional_restriction_matches_brute_force() {
    for epsilon in [Sign::Trivial, Sign::Sign] {
        for &t in &[0.0, 0.75, -1.5] {
            let (lo, to) = character_pairs_of_one_dim(epsilon.exponent(), t);
            let parameter = LParameterR::new(vec![RealSummand::one_dim(epsilon, t)]).unwrap();
            let c = restrict(&parameter).summands()[0];
            assert_eq!(c.ell, lo);
            assert!((c.t - to).abs() < 1e-9);
        }
    }
}

#[test]
fn real_catalog_matches_ordered_tuple_enumeration() {
    for n in 1..=6 {
        for cutoff in 1..=3u32 {
            let mut expected: BTreeSet<(Vec<u32>, Vec<u8>)> = BTreeSet::new();
            for q in 0..=n / 2 {
                let r = n - 2 * q;
                // every ordered tuple, sorted per block, then deduplicated
                let gl2_tuples = product((1..=cutoff).collect(), q);
                let gl1_tuples = product(vec![0u8, 1], r);
                for a in &gl2_tuples {
                    for b in &gl1_tuples {
                        let mut a = a.clone();
                        let mut b = b.clone();
                        a.sort();
                        b.sort();
                        expected.insert((a, b));
                    }
                }
            }
            let got: BTreeSet<(Vec<u32>, Vec<u8>)> = real_components(n, cutoff as usize)
                .unwrap()
                .iter()
                .map(|c| {
                    (
                        c.orbit.gl2_labels().to_vec(),
                        c.orbit.gl1_labels().iter().map(|s| s.exponent()).collect(),
                    )
                })
                .collect();
            assert_eq!(got, expected, "n = {n}, cutoff = {cutoff}");

            // free iff both blocks have pairwise distinct labels
            for c in real_components(n, cutoff as usize).unwrap() {
                let gl2: BTreeSet<_> = c.orbit.gl2_labels().iter().collect();
                let gl1: BTreeSet<_> = c.orbit.gl1_labels().iter().collect();
                let distinct = gl2.len() == c.shape.q && gl1.len() == c.shape.r;
                assert_eq!(c.is_free(), distinct, "{c}");
            }
        }
    }
}

#[test]
fn complex_catalog_matches_ordered_tuple_enumeration() {
    for n in 1..=4 {
        for cutoff in 1..=3i64 {
            let expected: BTreeSet<Vec<i64>> = product((-cutoff..=cutoff).collect(), n)
                .into_iter()
                .map(|mut v| {
                    v.sort();
                    v
                })
                .collect();
            let catalog = complex_components(n, cutoff as usize).unwrap();
            let got: Vec<Vec<i64>> = catalog.iter().map(|c| c.labels().to_vec()).collect();
            assert_eq!(got, expected.into_iter().collect::<Vec<_>>());
        }
    }
}

#[test]
fn orbit_order_is_deterministic_and_sorted() {
    for n in 1..=7 {
        for shape in enumerate_levi_shapes(n).unwrap() {
            let a = enumerate_orbits(shape, 4).unwrap();
            let b = enumerate_orbits(shape, 4).unwrap();
            assert_eq!(a, b);
            assert!(a.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn parameter_map_ranks_match_rational_elimination() {
    for n in 1..=7 {
        for c in real_components(n, 3).unwrap() {
            let m = bc_component(&c);
            assert_eq!(integer_rank(&m.matrix), rational_rank(&m.matrix), "{c}");
        }
    }
}

proptest! {
    #[test]
    fn integer_rank_matches_rational_rank(
        rows in 1usize..6,
        cols in 1usize..6,
        entries in proptest::collection::vec(-4i64..=4, 36),
    ) {
        let matrix: Vec<Vec<i64>> = (0..rows)
            .map(|i| entries[i * 6..i * 6 + cols].to_vec())
            .collect();
        prop_assert_eq!(integer_rank(&matrix), rational_rank(&matrix));
    }
}

fn product<T: Clone>(alphabet: Vec<T>, k: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x.clone());
                    next
                })
            })
            .collect();
    }
    out
}
