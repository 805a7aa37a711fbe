#![allow(dead_code)]

pub mod induced;

use num_rational::Ratio;

/// Rank by Gaussian elimination over the rationals.
pub fn rational_rank(matrix: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Ratio<i128>>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| Ratio::from_integer(x as i128))
                .collect()
        })
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][col] != Ratio::from_integer(0)) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][col] != Ratio::from_integer(0) {
                let factor = a[r][col] / a[rank][col];
                let pivot_row = a[rank].clone();
                for (entry, pivot_entry) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                    *entry -= factor * pivot_entry;
                }
            }
        }
        rank += 1;
    }
    rank
}
