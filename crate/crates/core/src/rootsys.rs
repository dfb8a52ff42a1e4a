//! Root systems of the simple complex Lie algebras.
//!
//! Node numbering follows Bourbaki everywhere in this crate. Indices are
//! 0-based in the API and 1-based whenever they are printed.
//!
//! ```text
//! A_n   1---2---3-- ... --n
//! B_n   1---2-- ... --(n-1)=>=n          (n short)
//! C_n   1---2-- ... --(n-1)=<=n          (n long)
//! D_n   1---2-- ... --(n-2)---(n-1)
//!                       |
//!                       n
//! E_n   1---3---4---5-- ... --n          (n = 6, 7, 8)
//!               |
//!               2
//! F_4   1---2=>=3---4                    (1, 2 long)
//! G_2   1<<<2                            (1 short)
//! ```

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest rank for which positive roots are generated.
pub const MAX_ROOT_RANK: usize = 8;
/// Largest rank for which the Weyl group is enumerated explicitly.
pub const MAX_WEYL_RANK: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("invalid Lie type {letter}{rank}: {reason}")]
    InvalidType {
        letter: Letter,
        rank: usize,
        reason: &'static str,
    },
    #[error("unsupported rank {rank} for {operation} (limit {limit})")]
    UnsupportedRank {
        operation: &'static str,
        rank: usize,
        limit: usize,
    },
    #[error("cannot parse Lie type from {0:?}")]
    Unparseable(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// Type of a simple complex Lie algebra, e.g. `A5` or `E6`.
///
/// `D2` and `D3` are accepted (they are `A1 x A1` and `A3` in disguise) so
/// that `so(p,q)` can be handled uniformly for every `p + q >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LieType {
    letter: Letter,
    rank: usize,
}

impl LieType {
    pub fn new(letter: Letter, rank: usize) -> Result<Self, RootSystemError> {
        let bad = |reason| RootSystemError::InvalidType { letter, rank, reason };
        if rank == 0 {
            return Err(bad("rank must be positive"));
        }
        match letter {
            Letter::E if !(6..=8).contains(&rank) => Err(bad("E requires rank 6, 7 or 8")),
            Letter::F if rank != 4 => Err(bad("F requires rank 4")),
            Letter::G if rank != 2 => Err(bad("G requires rank 2")),
            Letter::D if rank < 2 => Err(bad("D requires rank at least 2")),
            _ => Ok(LieType { letter, rank }),
        }
    }

    pub fn letter(self) -> Letter {
        self.letter
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// `D2` and `D3` coincide with other types; they are still usable.
    pub fn is_canonical(self) -> bool {
        !(self.letter == Letter::D && self.rank < 4)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

impl FromStr for LieType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Letter::A,
            Some('B') => Letter::B,
            Some('C') => Letter::C,
            Some('D') => Letter::D,
            Some('E') => Letter::E,
            Some('F') => Letter::F,
            Some('G') => Letter::G,
            _ => return Err(RootSystemError::Unparseable(s.to_string())),
        };
        let rank = chars
            .as_str()
            .parse()
            .map_err(|_| RootSystemError::Unparseable(s.to_string()))?;
        LieType::new(letter, rank)
    }
}

/// Cartan matrix with entries `a_ij = <alpha_i, alpha_j^vee>`, so that the
/// simple reflection `s_j` sends `alpha_i` to `alpha_i - a_ij alpha_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i32>,
}

impl CartanMatrix {
    pub fn from_rows(rows: &[Vec<i32>]) -> Self {
        let rank = rows.len();
        let mut entries = Vec::with_capacity(rank * rank);
        for row in rows {
            assert_eq!(row.len(), rank, "Cartan matrix must be square");
            entries.extend_from_slice(row);
        }
        CartanMatrix { rank, entries }
    }

    fn identity_like(rank: usize) -> Self {
        let mut entries = vec![0; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 2;
        }
        CartanMatrix { rank, entries }
    }

    fn set_bond(&mut self, i: usize, j: usize, a_ij: i32, a_ji: i32) {
        self.entries[i * self.rank + j] = a_ij;
        self.entries[j * self.rank + i] = a_ji;
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.entries.chunks(self.rank).map(<[i32]>::to_vec).collect()
    }

    /// Block-diagonal sum, used for doubled diagrams.
    pub fn direct_sum(&self, other: &CartanMatrix) -> CartanMatrix {
        let n = self.rank + other.rank;
        let mut out = CartanMatrix::identity_like(n);
        for i in 0..self.rank {
            for j in 0..self.rank {
                out.entries[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.rank {
            for j in 0..other.rank {
                out.entries[(self.rank + i) * n + self.rank + j] = other.get(i, j);
            }
        }
        out
    }

    /// Pairing `<beta, alpha_j^vee>` for a root given in simple-root coordinates.
    pub fn pairing(&self, beta: &[i32], j: usize) -> i32 {
        beta.iter().enumerate().map(|(i, c)| c * self.get(i, j)).sum()
    }

    /// Simple reflection `s_j` applied to `beta`.
    pub fn reflect(&self, beta: &[i32], j: usize) -> Vec<i32> {
        let p = self.pairing(beta, j);
        let mut out = beta.to_vec();
        out[j] -= p;
        out
    }
}

pub fn cartan_matrix(t: LieType) -> CartanMatrix {
    let n = t.rank;
    let mut m = CartanMatrix::identity_like(n);
    match t.letter {
        Letter::A => {
            for i in 1..n {
                m.set_bond(i - 1, i, -1, -1);
            }
        }
        Letter::B => {
            for i in 1..n {
                m.set_bond(i - 1, i, -1, -1);
            }
            if n >= 2 {
                m.set_bond(n - 2, n - 1, -2, -1);
            }
        }
        Letter::C => {
            for i in 1..n {
                m.set_bond(i - 1, i, -1, -1);
            }
            if n >= 2 {
                m.set_bond(n - 2, n - 1, -1, -2);
            }
        }
        Letter::D => {
            // chain 1..n-1, node n hangs off n-2
            if n >= 3 {
                for i in 1..n - 1 {
                    m.set_bond(i - 1, i, -1, -1);
                }
                m.set_bond(n - 3, n - 1, -1, -1);
            }
        }
        Letter::E => {
            m.set_bond(0, 2, -1, -1);
            m.set_bond(1, 3, -1, -1);
            for i in 3..n {
                m.set_bond(i - 1, i, -1, -1);
            }
        }
        Letter::F => {
            m.set_bond(0, 1, -1, -1);
            m.set_bond(1, 2, -2, -1);
            m.set_bond(2, 3, -1, -1);
        }
        Letter::G => {
            m.set_bond(0, 1, -1, -3);
        }
    }
    m
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub Vec<i32>);

impl RootVector {
    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }
}

fn simple_root(rank: usize, i: usize) -> Vec<i32> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

/// Positive roots, generated from the simple roots by simple reflections
/// (`s_j` permutes the positive roots other than `alpha_j`). Sorted by
/// height, then lexicographically.
pub fn positive_roots(t: LieType) -> Result<Vec<RootVector>, RootSystemError> {
    if t.rank > MAX_ROOT_RANK {
        return Err(RootSystemError::UnsupportedRank {
            operation: "positive_roots",
            rank: t.rank,
            limit: MAX_ROOT_RANK,
        });
    }
    let cartan = cartan_matrix(t);
    let n = t.rank;
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    for i in 0..n {
        let a = simple_root(n, i);
        seen.insert(a.clone());
        queue.push_back(a);
    }
    while let Some(beta) = queue.pop_front() {
        for j in 0..n {
            if beta == simple_root(n, j) {
                continue;
            }
            let gamma = cartan.reflect(&beta, j);
            if seen.insert(gamma.clone()) {
                queue.push_back(gamma);
            }
        }
    }
    let mut roots: Vec<RootVector> = seen.into_iter().map(RootVector).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    Ok(roots)
}

/// Permutation of the nodes of a Dynkin diagram, `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodePermutation {
    images: Vec<usize>,
}

impl NodePermutation {
    pub fn identity(n: usize) -> Self {
        NodePermutation {
            images: (0..n).collect(),
        }
    }

    /// Panics if `images` is not a permutation of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut hit = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !hit[i], "not a permutation: {images:?}");
            hit[i] = true;
        }
        NodePermutation { images }
    }

    pub fn from_swaps(n: usize, swaps: &[(usize, usize)]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for &(i, j) in swaps {
            images.swap(i, j);
        }
        NodePermutation::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn compose(&self, inner: &NodePermutation) -> NodePermutation {
        NodePermutation {
            images: inner.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    pub fn preserves(&self, cartan: &CartanMatrix) -> bool {
        let n = cartan.rank();
        self.len() == n && (0..n).all(|i| (0..n).all(|j| cartan.get(self.image(i), self.image(j)) == cartan.get(i, j)))
    }

    /// Direct sum `self ⊕ other`, with `other` acting on the shifted nodes.
    pub fn direct_sum(&self, other: &NodePermutation) -> NodePermutation {
        let shift = self.len();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&i| i + shift));
        NodePermutation { images }
    }
}

impl fmt::Display for NodePermutation {
    /// Cycle notation with 1-based indices; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut done = vec![false; self.len()];
        let mut any = false;
        for start in 0..self.len() {
            if done[start] || self.image(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !done[i] {
                done[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.image(i);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Weyl group elements, each stored as the images of the simple roots.
fn weyl_group(t: LieType) -> Vec<Vec<Vec<i32>>> {
    let cartan = cartan_matrix(t);
    let n = t.rank;
    let identity: Vec<Vec<i32>> = (0..n).map(|i| simple_root(n, i)).collect();
    let mut seen: HashSet<Vec<Vec<i32>>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    let mut elements = Vec::new();
    while let Some(w) = queue.pop_front() {
        for j in 0..n {
            let sw: Vec<Vec<i32>> = w.iter().map(|v| cartan.reflect(v, j)).collect();
            if seen.insert(sw.clone()) {
                queue.push_back(sw);
            }
        }
        elements.push(w);
    }
    elements
}

/// Order of the Weyl group, by explicit enumeration.
pub fn weyl_group_order(t: LieType) -> Result<usize, RootSystemError> {
    check_weyl_rank(t, "weyl_group_order")?;
    Ok(weyl_group(t).len())
}

fn check_weyl_rank(t: LieType, operation: &'static str) -> Result<(), RootSystemError> {
    if t.rank > MAX_WEYL_RANK {
        Err(RootSystemError::UnsupportedRank {
            operation,
            rank: t.rank,
            limit: MAX_WEYL_RANK,
        })
    } else {
        Ok(())
    }
}

/// The node permutation induced by `X -> -(w0 X)`, found by enumerating the
/// Weyl group and locating the element that sends every simple root to a
/// negative root.
pub fn longest_element_negation(t: LieType) -> Result<NodePermutation, RootSystemError> {
    check_weyl_rank(t, "longest_element_negation")?;
    let n = t.rank;
    let w0 = weyl_group(t)
        .into_iter()
        .find(|w| w.iter().all(|v| v.iter().all(|&c| c <= 0)))
        .expect("a finite Weyl group has a longest element");
    let images = w0
        .iter()
        .map(|v| {
            (0..n)
                .find(|&k| v.iter().enumerate().all(|(i, &c)| c == -((i == k) as i32)))
                .expect("-w0 permutes the simple roots")
        })
        .collect();
    Ok(NodePermutation::from_images(images))
}

/// Closed form of the opposition involution: nontrivial only for `A_n`,
/// `D_n` with `n` odd, and `E6`.
pub fn iota(t: LieType) -> NodePermutation {
    let n = t.rank;
    match t.letter {
        Letter::A => NodePermutation::from_images((0..n).rev().collect()),
        Letter::D if n % 2 == 1 => NodePermutation::from_swaps(n, &[(n - 2, n - 1)]),
        Letter::E if n == 6 => NodePermutation::from_swaps(6, &[(0, 5), (2, 4)]),
        _ => NodePermutation::identity(n),
    }
}

/// Every type that may be passed to the explicit Weyl group routines.
pub fn weyl_enumerable_types() -> Vec<LieType> {
    let mut out = Vec::new();
    for n in 1..=MAX_WEYL_RANK {
        out.push(LieType {
            letter: Letter::A,
            rank: n,
        });
    }
    for n in 2..=MAX_WEYL_RANK {
        out.push(LieType {
            letter: Letter::B,
            rank: n,
        });
    }
    for n in 3..=MAX_WEYL_RANK {
        out.push(LieType {
            letter: Letter::C,
            rank: n,
        });
        out.push(LieType {
            letter: Letter::D,
            rank: n,
        });
    }
    out.push(LieType {
        letter: Letter::G,
        rank: 2,
    });
    out.push(LieType {
        letter: Letter::F,
        rank: 4,
    });
    out
}
