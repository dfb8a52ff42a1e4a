//! Weighted Dynkin diagrams and the cones of hyperbolic and antipodal
//! hyperbolic orbits.
//!
//! A weighted diagram matches a Satake diagram when black nodes carry weight
//! zero and arrow-joined nodes carry equal weights. The matching diagrams
//! form the cone `a+`; those also fixed by the opposition involution form
//! `b+`. Both cones are described exactly by a partition of the nodes: every
//! class carries a single common weight, and classes containing a black node
//! are forced to zero. The dimension of each cone is its number of free
//! classes.

use std::fmt;

use num_rational::Rational64;
use serde::Serialize;
use thiserror::Error;

use crate::satake::{self, RealFormSpec, SatakeDiagram, SatakeError};

/// Disjoint-set forest with path compression and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        a
    }

    /// Classes as sorted node lists, ordered by their smallest node.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot: Vec<Option<usize>> = vec![None; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let r = self.find(i);
            match slot[r] {
                Some(k) => out[k].push(i),
                None => {
                    slot[r] = Some(out.len());
                    out.push(vec![i]);
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodePartition {
    classes: Vec<Vec<usize>>,
    forced_zero: Vec<bool>,
}

impl NodePartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn is_forced_zero(&self, class: usize) -> bool {
        self.forced_zero[class]
    }

    pub fn free_classes(&self) -> impl Iterator<Item = &[usize]> {
        self.classes
            .iter()
            .zip(&self.forced_zero)
            .filter(|(_, &z)| !z)
            .map(|(c, _)| c.as_slice())
    }

    pub fn forced_classes(&self) -> impl Iterator<Item = &[usize]> {
        self.classes
            .iter()
            .zip(&self.forced_zero)
            .filter(|(_, &z)| z)
            .map(|(c, _)| c.as_slice())
    }

    pub fn free_count(&self) -> usize {
        self.forced_zero.iter().filter(|&&z| !z).count()
    }
}

fn partition(d: &SatakeDiagram, uf: &mut UnionFind) -> NodePartition {
    let classes = uf.classes();
    let forced_zero = classes.iter().map(|c| c.iter().any(|&i| d.is_black(i))).collect();
    NodePartition { classes, forced_zero }
}

/// Classes of weighted diagrams matching `d`: arrow orbits, with black
/// nodes forced to zero. The free classes span `a+`.
pub fn matching_classes(d: &SatakeDiagram) -> NodePartition {
    let mut uf = UnionFind::new(d.node_count());
    for &(i, j) in d.arrows() {
        uf.union(i, j);
    }
    partition(d, &mut uf)
}

/// Classes generated jointly by the arrows and the opposition involution.
/// The free classes span `b+`.
pub fn antipodal_classes(d: &SatakeDiagram) -> NodePartition {
    let mut uf = UnionFind::new(d.node_count());
    for &(i, j) in d.arrows() {
        uf.union(i, j);
    }
    let iota = d.shape().iota();
    for i in 0..d.node_count() {
        uf.union(i, iota.image(i));
    }
    partition(d, &mut uf)
}

pub fn a_hyperbolic_rank(d: &SatakeDiagram) -> usize {
    antipodal_classes(d).free_count()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("weights must be nonnegative")]
pub struct NegativeWeight;

/// Nonnegative rational weights on the nodes, in Bourbaki order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedDynkinDiagram {
    weights: Vec<Rational64>,
}

impl WeightedDynkinDiagram {
    pub fn new(weights: Vec<Rational64>) -> Result<Self, NegativeWeight> {
        if weights.iter().any(|w| *w < Rational64::from_integer(0)) {
            return Err(NegativeWeight);
        }
        Ok(WeightedDynkinDiagram { weights })
    }

    pub fn indicator(n: usize, support: &[usize]) -> Self {
        let mut weights = vec![Rational64::from_integer(0); n];
        for &i in support {
            weights[i] = Rational64::from_integer(1);
        }
        WeightedDynkinDiagram { weights }
    }

    pub fn weights(&self) -> &[Rational64] {
        &self.weights
    }

    /// Black nodes weigh 0 and arrow-joined nodes weigh the same.
    pub fn matches(&self, d: &SatakeDiagram) -> bool {
        self.weights.len() == d.node_count()
            && d.black()
                .iter()
                .all(|&b| self.weights[b] == Rational64::from_integer(0))
            && d.arrows().iter().all(|&(i, j)| self.weights[i] == self.weights[j])
    }

    pub fn is_iota_invariant(&self, d: &SatakeDiagram) -> bool {
        let iota = d.shape().iota();
        (0..self.weights.len()).all(|i| self.weights[i] == self.weights[iota.image(i)])
    }

    /// Weights read along the longest chain and then the remaining node.
    /// Differs from Bourbaki order only for type E, whose chain is
    /// `1,3,4,...,n` with node `2` last.
    pub fn chain_order(&self, d: &SatakeDiagram) -> Vec<Rational64> {
        let t = d.shape().lie_type();
        let r = t.rank();
        let copy_order: Vec<usize> = match t.letter() {
            crate::rootsys::Letter::E => {
                let mut c = vec![0];
                c.extend(2..r);
                c.push(1);
                c
            }
            _ => (0..r).collect(),
        };
        (0..d.node_count() / r)
            .flat_map(|copy| copy_order.iter().map(move |&i| copy * r + i))
            .map(|i| self.weights[i])
            .collect()
    }
}

/// Formats weights as a tuple, e.g. `(1,0,0,0,0,1)`.
pub fn format_weights(weights: &[Rational64]) -> String {
    let parts: Vec<String> = weights.iter().map(Rational64::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for WeightedDynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_weights(&self.weights))
    }
}

/// Extreme rays of `b+`: the 0/1 indicator of each free antipodal class,
/// ordered by smallest node.
pub fn b_plus_generators(d: &SatakeDiagram) -> Vec<WeightedDynkinDiagram> {
    antipodal_classes(d)
        .free_classes()
        .map(|c| WeightedDynkinDiagram::indicator(d.node_count(), c))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RankProfile {
    pub real_rank: usize,
    pub a_hyperbolic_rank: usize,
}

impl RankProfile {
    pub fn new(real_rank: usize, a_hyperbolic_rank: usize) -> Self {
        debug_assert!(a_hyperbolic_rank <= real_rank);
        RankProfile {
            real_rank,
            a_hyperbolic_rank,
        }
    }

    pub fn of_diagram(d: &SatakeDiagram) -> Self {
        RankProfile::new(satake::real_rank(d), a_hyperbolic_rank(d))
    }
}

impl std::ops::Add for RankProfile {
    type Output = RankProfile;

    fn add(self, rhs: RankProfile) -> RankProfile {
        RankProfile::new(
            self.real_rank + rhs.real_rank,
            self.a_hyperbolic_rank + rhs.a_hyperbolic_rank,
        )
    }
}

impl fmt::Display for RankProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.real_rank, self.a_hyperbolic_rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("a reductive algebra needs a simple factor or a nonzero center")]
pub struct ZeroAlgebra;

/// Simple factors plus an abelian center split into its compact part (a
/// torus, contributes to neither rank) and its split part (adds to the real
/// rank only).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReductiveAlgebra {
    pub simple_factors: Vec<RealFormSpec>,
    pub compact_center_dim: usize,
    pub split_center_dim: usize,
}

impl ReductiveAlgebra {
    pub fn new(
        simple_factors: Vec<RealFormSpec>,
        compact_center_dim: usize,
        split_center_dim: usize,
    ) -> Result<Self, ZeroAlgebra> {
        if simple_factors.is_empty() && compact_center_dim == 0 && split_center_dim == 0 {
            return Err(ZeroAlgebra);
        }
        Ok(ReductiveAlgebra {
            simple_factors,
            compact_center_dim,
            split_center_dim,
        })
    }

    pub fn simple(spec: RealFormSpec) -> Self {
        ReductiveAlgebra {
            simple_factors: vec![spec],
            compact_center_dim: 0,
            split_center_dim: 0,
        }
    }

    /// Direct sum.
    pub fn concat(&self, other: &ReductiveAlgebra) -> ReductiveAlgebra {
        let mut simple_factors = self.simple_factors.clone();
        simple_factors.extend_from_slice(&other.simple_factors);
        ReductiveAlgebra {
            simple_factors,
            compact_center_dim: self.compact_center_dim + other.compact_center_dim,
            split_center_dim: self.split_center_dim + other.split_center_dim,
        }
    }

    pub fn is_simple(&self) -> bool {
        self.simple_factors.len() == 1 && self.compact_center_dim == 0 && self.split_center_dim == 0
    }
}

/// Ranks of a reductive algebra: simple factors add up, the split center
/// adds to the real rank only.
pub fn rank_profile(alg: &ReductiveAlgebra) -> Result<RankProfile, SatakeError> {
    let mut profile = RankProfile::new(alg.split_center_dim, 0);
    for spec in &alg.simple_factors {
        profile = profile + RankProfile::of_diagram(&satake::satake_of(spec)?);
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::LieType;
    use crate::satake::{satake_of, Exceptional, RealFormSpec::*};

    fn t(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn diagram(spec: RealFormSpec) -> SatakeDiagram {
        satake_of(&spec).unwrap()
    }

    fn free(p: &NodePartition) -> Vec<Vec<usize>> {
        p.free_classes().map(<[usize]>::to_vec).collect()
    }

    #[test]
    fn union_find_basics() {
        let mut uf = UnionFind::new(5);
        uf.union(3, 1);
        uf.union(4, 3);
        assert_eq!(uf.find(4), uf.find(1));
        assert_eq!(uf.classes(), vec![vec![0], vec![1, 3, 4], vec![2]]);
    }

    #[test]
    fn matching_classes_examples() {
        let p = matching_classes(&diagram(SlReal(6)));
        assert_eq!(free(&p), vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);

        let p = matching_classes(&diagram(Exceptional(Exceptional::E6IV)));
        assert_eq!(free(&p), vec![vec![0], vec![5]]);
        let forced: Vec<Vec<usize>> = p.forced_classes().map(<[usize]>::to_vec).collect();
        assert_eq!(forced, vec![vec![1], vec![2], vec![3], vec![4]]);

        let p = matching_classes(&diagram(SuPq(1, 2)));
        assert_eq!(free(&p), vec![vec![0, 1]]);
    }

    #[test]
    fn antipodal_classes_examples() {
        let p = antipodal_classes(&diagram(Exceptional(Exceptional::E6IV)));
        assert_eq!(free(&p), vec![vec![0, 5]]);
        assert!(p.forced_classes().flatten().count() == 4);

        let p = antipodal_classes(&diagram(SoPq(5, 5)));
        assert_eq!(free(&p), vec![vec![0], vec![1], vec![2], vec![3, 4]]);

        let p = antipodal_classes(&diagram(Compact(t("E7"))));
        assert_eq!(p.free_count(), 0);
    }

    #[test]
    fn a_hyperbolic_rank_examples() {
        assert_eq!(a_hyperbolic_rank(&diagram(SlReal(10))), 5);
        assert_eq!(a_hyperbolic_rank(&diagram(SuStar(14))), 3);
        assert_eq!(a_hyperbolic_rank(&diagram(Exceptional(Exceptional::E6I))), 4);
        assert_eq!(a_hyperbolic_rank(&diagram(Complex(t("A2")))), 1);
    }

    #[test]
    fn generators() {
        let d = diagram(Exceptional(Exceptional::E6IV));
        let g = b_plus_generators(&d);
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].to_string(), "(1,0,0,0,0,1)");
        assert_eq!(format_weights(&g[0].chain_order(&d)), "(1,0,0,0,1,0)");

        assert!(b_plus_generators(&diagram(Compact(t("A4")))).is_empty());

        let g: Vec<String> = b_plus_generators(&diagram(SlReal(4)))
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(g, vec!["(1,0,1)", "(0,1,0)"]);
    }

    #[test]
    fn generators_match_and_are_invariant() {
        for (_, d) in satake::database(9, true).unwrap() {
            let gens = b_plus_generators(&d);
            assert_eq!(gens.len(), a_hyperbolic_rank(&d));
            for g in gens {
                assert!(g.matches(&d) && g.is_iota_invariant(&d));
            }
        }
    }

    #[test]
    fn negative_weights_rejected() {
        assert!(WeightedDynkinDiagram::new(vec![Rational64::new(-1, 2)]).is_err());
        assert!(WeightedDynkinDiagram::new(vec![Rational64::new(3, 2)]).is_ok());
    }

    #[test]
    fn reductive_profiles() {
        let h = ReductiveAlgebra::new(vec![SlReal(3), SlReal(7)], 0, 0).unwrap();
        assert_eq!(rank_profile(&h).unwrap(), RankProfile::new(8, 4));
        let u21 = ReductiveAlgebra::new(vec![SuPq(2, 1)], 1, 0).unwrap();
        assert_eq!(rank_profile(&u21).unwrap(), RankProfile::new(1, 1));
        let abelian = ReductiveAlgebra::new(vec![], 0, 2).unwrap();
        assert_eq!(rank_profile(&abelian).unwrap(), RankProfile::new(2, 0));
        assert_eq!(ReductiveAlgebra::new(vec![], 0, 0), Err(ZeroAlgebra));
    }
}
