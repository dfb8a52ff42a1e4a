//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperbolic_rank::rootsys::{cartan_matrix, LieType};
use hyperbolic_rank::satake::SatakeDiagram;
use num_rational::Rational64;

/// Rank of a rational matrix by Gaussian elimination.
pub fn matrix_rank(mut rows: Vec<Vec<Rational64>>) -> usize {
    let zero = Rational64::from_integer(0);
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != zero) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c];
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != zero {
                let f = rows[r][c] / pivot;
                let pivot_row = rows[rank].clone();
                for (x, v) in rows[r].iter_mut().zip(pivot_row).skip(c) {
                    *x -= f * v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn unit(n: usize, i: usize) -> Vec<Rational64> {
    let mut v = vec![Rational64::from_integer(0); n];
    v[i] = Rational64::from_integer(1);
    v
}

fn difference(n: usize, i: usize, j: usize) -> Vec<Rational64> {
    let mut v = unit(n, i);
    v[j] -= Rational64::from_integer(1);
    v
}

/// Dimension of the span of weightings with black nodes at zero, equal
/// weights across arrows and, when `iota` is given, invariant under it.
pub fn cone_span_dimension(d: &SatakeDiagram, iota: Option<&[usize]>) -> usize {
    let n = d.node_count();
    let mut rows: Vec<Vec<Rational64>> = d.black().iter().map(|&b| unit(n, b)).collect();
    rows.extend(d.arrows().iter().map(|&(i, j)| difference(n, i, j)));
    if let Some(iota) = iota {
        rows.extend((0..n).filter(|&i| iota[i] != i).map(|i| difference(n, i, iota[i])));
    }
    if rows.is_empty() {
        return n;
    }
    n - matrix_rank(rows)
}

/// Positive roots via root strings: `beta + alpha_i` is a root exactly when
/// the alpha_i-string through `beta` extends upward.
pub fn positive_roots_by_strings(t: LieType) -> BTreeSet<Vec<i32>> {
    let a = cartan_matrix(t);
    let n = t.rank();
    let mut roots: BTreeSet<Vec<i32>> = (0..n).map(|i| (0..n).map(|j| i32::from(i == j)).collect()).collect();
    let mut layer: Vec<Vec<i32>> = roots.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                // <beta, alpha_i^vee>
                let pairing: i32 = (0..n).map(|j| beta[j] * a.get(j, i)).sum();
                let mut q = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if roots.contains(&down) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !roots.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    roots
}

pub fn t(s: &str) -> LieType {
    s.parse().unwrap()
}
