//! Rank-level decision procedure for discontinuous actions on `G/H`.
//!
//! Three conditions are evaluated in order, stopping at the first that holds:
//!
//! * (A) `rank_R g = rank_R h`: no infinite discrete subgroup acts
//!   discontinuously.
//! * (B) `rank_ahyp g = rank_ahyp h`: no non virtually-abelian discrete
//!   subgroup acts discontinuously.
//! * (C) `rank_ahyp g > rank_R h`: some non virtually-abelian discrete
//!   subgroup acts discontinuously.
//!
//! When none holds the verdict is `Undetermined`. The engine sees only the
//! two rank profiles; it never checks that `h` embeds in `g`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cones::RankProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    NoInfiniteDiscontinuous,
    NoNonVirtuallyAbelian,
    AdmitsNonVirtuallyAbelian,
    Undetermined,
}

impl Verdict {
    pub fn from_name(s: &str) -> Option<Verdict> {
        [
            Verdict::NoInfiniteDiscontinuous,
            Verdict::NoNonVirtuallyAbelian,
            Verdict::AdmitsNonVirtuallyAbelian,
            Verdict::Undetermined,
        ]
        .into_iter()
        .find(|v| v.to_string() == s)
    }

    /// True for the two verdicts that rule out non virtually-abelian actions.
    pub fn is_non_existence(self) -> bool {
        matches!(self, Verdict::NoInfiniteDiscontinuous | Verdict::NoNonVirtuallyAbelian)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">")]
    Greater,
}

impl Relation {
    fn holds(self, lhs: usize, rhs: usize) -> bool {
        match self {
            Relation::Equal => lhs == rhs,
            Relation::Greater => lhs > rhs,
        }
    }
}

/// One evaluated comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub condition: Condition,
    pub lhs: usize,
    pub op: Relation,
    pub rhs: usize,
    pub holds: bool,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (quantity, op) = match (self.condition, self.op, self.holds) {
            (Condition::A, _, true) => ("rank_R g = rank_R h", "="),
            (Condition::A, _, false) => ("rank_R g = rank_R h", "!="),
            (Condition::B, _, true) => ("rank_ahyp g = rank_ahyp h", "="),
            (Condition::B, _, false) => ("rank_ahyp g = rank_ahyp h", "!="),
            (Condition::C, _, true) => ("rank_ahyp g > rank_R h", ">"),
            (Condition::C, _, false) => ("rank_ahyp g > rank_R h", "<="),
        };
        write!(
            f,
            "({:?}) {quantity}: {} {op} {} -> {}",
            self.condition,
            self.lhs,
            self.rhs,
            if self.holds { "holds" } else { "fails" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub trace: Vec<TraceStep>,
}

impl Decision {
    /// The condition that fixed the verdict, if any.
    pub fn deciding_condition(&self) -> Option<Condition> {
        self.trace.iter().find(|s| s.holds).map(|s| s.condition)
    }
}

/// A rank inequality that a closed reductive subgroup must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "inequality")]
pub enum Witness {
    /// `rank_ahyp h > rank_ahyp g`
    AHyperbolicRank { h: usize, g: usize },
    /// `rank_R h > rank_R g`
    RealRank { h: usize, g: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::AHyperbolicRank { h, g } => {
                write!(f, "a-hyperbolic rank of h ({h}) exceeds that of g ({g})")
            }
            Witness::RealRank { h, g } => write!(f, "real rank of h ({h}) exceeds that of g ({g})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub obstructed: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecisionError {
    #[error("not a reductive subgroup pair: {0}")]
    NotASubgroupPair(Witness),
}

/// A closed reductive subgroup satisfies `rank_ahyp h <= rank_ahyp g` and
/// `rank_R h <= rank_R g`. The a-hyperbolic inequality is reported first.
pub fn embed_obstruction(g: RankProfile, h: RankProfile) -> Obstruction {
    let witness = if h.a_hyperbolic_rank > g.a_hyperbolic_rank {
        Some(Witness::AHyperbolicRank {
            h: h.a_hyperbolic_rank,
            g: g.a_hyperbolic_rank,
        })
    } else if h.real_rank > g.real_rank {
        Some(Witness::RealRank {
            h: h.real_rank,
            g: g.real_rank,
        })
    } else {
        None
    };
    Obstruction {
        obstructed: witness.is_some(),
        witness,
    }
}

pub fn decide(g: RankProfile, h: RankProfile) -> Result<Decision, DecisionError> {
    if let Some(w) = embed_obstruction(g, h).witness {
        return Err(DecisionError::NotASubgroupPair(w));
    }
    let steps = [
        (
            Condition::A,
            g.real_rank,
            Relation::Equal,
            h.real_rank,
            Verdict::NoInfiniteDiscontinuous,
        ),
        (
            Condition::B,
            g.a_hyperbolic_rank,
            Relation::Equal,
            h.a_hyperbolic_rank,
            Verdict::NoNonVirtuallyAbelian,
        ),
        (
            Condition::C,
            g.a_hyperbolic_rank,
            Relation::Greater,
            h.real_rank,
            Verdict::AdmitsNonVirtuallyAbelian,
        ),
    ];
    let mut trace = Vec::with_capacity(3);
    for (condition, lhs, op, rhs, verdict) in steps {
        let holds = op.holds(lhs, rhs);
        trace.push(TraceStep {
            condition,
            lhs,
            op,
            rhs,
            holds,
        });
        if holds {
            return Ok(Decision { verdict, trace });
        }
    }
    Ok(Decision {
        verdict: Verdict::Undetermined,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(real: usize, ahyp: usize) -> RankProfile {
        RankProfile::new(real, ahyp)
    }

    #[test]
    fn worked_pairs() {
        let d = decide(p(9, 5), p(5, 4)).unwrap();
        assert_eq!(d.verdict, Verdict::Undetermined);
        let holds: Vec<bool> = d.trace.iter().map(|s| s.holds).collect();
        assert_eq!(holds, vec![false, false, false]);
        assert_eq!((d.trace[2].lhs, d.trace[2].rhs), (5, 5));

        assert_eq!(decide(p(9, 5), p(8, 4)).unwrap().verdict, Verdict::Undetermined);

        let d = decide(p(5, 3), p(2, 2)).unwrap();
        assert_eq!(d.verdict, Verdict::AdmitsNonVirtuallyAbelian);
        assert_eq!(d.deciding_condition(), Some(Condition::C));

        let d = decide(p(2, 2), p(2, 1)).unwrap();
        assert_eq!(d.verdict, Verdict::NoInfiniteDiscontinuous);
        assert_eq!(d.trace.len(), 1);
    }

    #[test]
    fn obstructions() {
        let e6iv = p(2, 1);
        let o = embed_obstruction(e6iv, p(2, 2));
        assert!(o.obstructed);
        assert_eq!(o.witness, Some(Witness::AHyperbolicRank { h: 2, g: 1 }));
        assert!(!embed_obstruction(p(5, 3), p(2, 2)).obstructed);
        assert_eq!(
            embed_obstruction(p(2, 2), p(3, 1)).witness,
            Some(Witness::RealRank { h: 3, g: 2 })
        );
        assert!(matches!(decide(e6iv, p(2, 2)), Err(DecisionError::NotASubgroupPair(_))));
    }

    #[test]
    fn json_shape() {
        let d = decide(p(9, 5), p(5, 4)).unwrap();
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["verdict"], "Undetermined");
        assert_eq!(v["trace"][0]["condition"], "A");
        assert_eq!(v["trace"][0]["op"], "=");
        assert_eq!(v["trace"][2]["op"], ">");
        assert_eq!(Verdict::from_name("Undetermined"), Some(Verdict::Undetermined));
    }

    fn pair() -> impl Strategy<Value = (RankProfile, RankProfile)> {
        (0usize..12, 0usize..12, 0usize..12, 0usize..12).prop_filter_map("subgroup pair", |(a, b, c, d)| {
            let (gr, ga) = (a.max(b), a.min(b));
            let (hr, ha) = (c.max(d), c.min(d));
            (hr <= gr && ha <= ga).then(|| (p(gr, ga), p(hr, ha)))
        })
    }

    proptest! {
        #[test]
        fn first_holding_condition_decides((g, h) in pair()) {
            let d = decide(g, h).unwrap();
            let last = d.trace.last().unwrap();
            prop_assert!(d.trace[..d.trace.len() - 1].iter().all(|s| !s.holds));
            if d.verdict == Verdict::Undetermined {
                prop_assert_eq!(d.trace.len(), 3);
                prop_assert!(!last.holds);
            } else {
                prop_assert!(last.holds);
            }
        }

        #[test]
        fn b_excludes_admission((g, h) in pair()) {
            if g.a_hyperbolic_rank == h.a_hyperbolic_rank {
                prop_assert_ne!(decide(g, h).unwrap().verdict, Verdict::AdmitsNonVirtuallyAbelian);
            }
        }

        #[test]
        fn compact_h_admits((g, _) in pair()) {
            if g.real_rank > 0 && g.a_hyperbolic_rank > 0 {
                prop_assert_eq!(decide(g, p(0, 0)).unwrap().verdict, Verdict::AdmitsNonVirtuallyAbelian);
            }
        }
    }
}
