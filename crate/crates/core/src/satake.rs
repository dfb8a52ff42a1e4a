//! Satake diagrams of real forms of the simple complex Lie algebras.
//!
//! Every family is generated by a parameterized constructor. A diagram
//! consists of a Dynkin diagram (possibly doubled, for a complex simple
//! algebra viewed as a real one), a set of black nodes and an involution on
//! the white nodes given as a list of arrows.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::rootsys::{self, CartanMatrix, Letter, LieType, NodePermutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatakeError {
    #[error("{form}: {constraint}")]
    Domain { form: String, constraint: String },
    #[error("invalid Satake diagram: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(Violation::to_string).collect::<Vec<_>>().join("; ")
}

/// Exceptional noncompact real forms, in Cartan's labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exceptional {
    E6I,
    E6II,
    E6III,
    E6IV,
    E7V,
    E7VI,
    E7VII,
    E8VIII,
    E8IX,
    F4I,
    F4II,
    G2Split,
}

impl Exceptional {
    pub const ALL: [Exceptional; 12] = [
        Exceptional::E6I,
        Exceptional::E6II,
        Exceptional::E6III,
        Exceptional::E6IV,
        Exceptional::E7V,
        Exceptional::E7VI,
        Exceptional::E7VII,
        Exceptional::E8VIII,
        Exceptional::E8IX,
        Exceptional::F4I,
        Exceptional::F4II,
        Exceptional::G2Split,
    ];

    pub fn lie_type(self) -> LieType {
        use Exceptional::*;
        let (letter, rank) = match self {
            E6I | E6II | E6III | E6IV => (Letter::E, 6),
            E7V | E7VI | E7VII => (Letter::E, 7),
            E8VIII | E8IX => (Letter::E, 8),
            F4I | F4II => (Letter::F, 4),
            G2Split => (Letter::G, 2),
        };
        LieType::new(letter, rank).expect("exceptional types are valid")
    }

    /// Label inside the parentheses, e.g. `IV` in `e6(IV)`.
    pub fn label(self) -> &'static str {
        use Exceptional::*;
        match self {
            E6I | F4I => "I",
            E6II | F4II => "II",
            E6III => "III",
            E6IV => "IV",
            E7V => "V",
            E7VI => "VI",
            E7VII => "VII",
            E8VIII => "VIII",
            E8IX => "IX",
            G2Split => "split",
        }
    }

    pub fn from_label(t: LieType, label: &str) -> Option<Exceptional> {
        Exceptional::ALL
            .into_iter()
            .find(|e| e.lie_type() == t && e.label().eq_ignore_ascii_case(label))
    }

    /// Black nodes (0-based Bourbaki). None of these forms carries arrows
    /// except E6 II and E6 III.
    fn black(self) -> &'static [usize] {
        use Exceptional::*;
        match self {
            E6I | E6II | E7V | E8VIII | F4I | G2Split => &[],
            E6III => &[2, 3, 4],
            E6IV => &[1, 2, 3, 4],
            E7VI => &[1, 4, 6],
            E7VII => &[1, 2, 3, 4],
            E8IX => &[1, 2, 3, 4],
            F4II => &[0, 1, 2],
        }
    }

    fn arrows(self) -> &'static [(usize, usize)] {
        match self {
            Exceptional::E6II => &[(0, 5), (2, 4)],
            Exceptional::E6III => &[(0, 5)],
            _ => &[],
        }
    }
}

/// A real simple Lie algebra (or a complex simple one viewed as real).
///
/// Parameters are kept exactly as written: `su(2,1)` and `su(1,2)` are
/// distinct values with identical diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RealFormSpec {
    /// `sl(n,R)`
    SlReal(usize),
    /// `su*(n)`, `n` even; equals `sl(n/2,H)`
    SuStar(usize),
    SuPq(usize, usize),
    SoPq(usize, usize),
    /// `sp(n,R)`, rank `n`
    SpReal(usize),
    SpPq(usize, usize),
    /// `so*(n)`, `n` even
    SoStar(usize),
    Exceptional(Exceptional),
    Compact(LieType),
    Complex(LieType),
}

fn type_of(letter: Letter, rank: usize) -> LieType {
    LieType::new(letter, rank).expect("constructor guarantees a valid type")
}

impl RealFormSpec {
    fn domain_error(&self, constraint: &str) -> SatakeError {
        SatakeError::Domain {
            form: self.to_string(),
            constraint: constraint.to_string(),
        }
    }

    /// Checks the family's parameter constraints.
    pub fn check(&self) -> Result<(), SatakeError> {
        use RealFormSpec::*;
        let fail = |c: &str| Err(self.domain_error(c));
        match *self {
            SlReal(n) if n < 2 => fail("sl(n,R) requires n >= 2"),
            SuStar(n) if n % 2 != 0 => fail("su*(n) requires n even"),
            SuStar(n) if n < 4 => fail("su*(n) requires n >= 4 (su*(2) is compact)"),
            SuPq(p, q) if p == 0 || q == 0 => fail("su(p,q) requires p, q >= 1"),
            SoPq(p, q) if p == 0 || q == 0 => fail("so(p,q) requires p, q >= 1"),
            SoPq(p, q) if p + q < 3 => fail("so(p,q) requires p + q >= 3"),
            SpReal(0) => fail("sp(n,R) requires n >= 1"),
            SpPq(p, q) if p == 0 || q == 0 => fail("sp(p,q) requires p, q >= 1"),
            SoStar(n) if n % 2 != 0 => fail("so*(n) requires n even"),
            SoStar(n) if n < 4 => fail("so*(n) requires n >= 4"),
            _ => Ok(()),
        }
    }

    /// Type of the complexification (of one copy, for `Complex`).
    pub fn lie_type(&self) -> Result<LieType, SatakeError> {
        use RealFormSpec::*;
        self.check()?;
        Ok(match *self {
            SlReal(n) => type_of(Letter::A, n - 1),
            SuStar(n) => type_of(Letter::A, n - 1),
            SuPq(p, q) => type_of(Letter::A, p + q - 1),
            SoPq(p, q) if (p + q) % 2 == 1 => type_of(Letter::B, (p + q - 1) / 2),
            SoPq(p, q) => type_of(Letter::D, (p + q) / 2),
            SpReal(n) => type_of(Letter::C, n),
            SpPq(p, q) => type_of(Letter::C, p + q),
            SoStar(n) => type_of(Letter::D, n / 2),
            Exceptional(e) => e.lie_type(),
            Compact(t) | Complex(t) => t,
        })
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, RealFormSpec::Complex(_))
    }
}

impl fmt::Display for RealFormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RealFormSpec::*;
        match *self {
            SlReal(n) => write!(f, "sl({n},R)"),
            SuStar(n) => write!(f, "su*({n})"),
            SuPq(p, q) => write!(f, "su({p},{q})"),
            SoPq(p, q) => write!(f, "so({p},{q})"),
            SpReal(n) => write!(f, "sp({n},R)"),
            SpPq(p, q) => write!(f, "sp({p},{q})"),
            SoStar(n) => write!(f, "so*({n})"),
            Exceptional(e) => {
                let t = e.lie_type();
                write!(
                    f,
                    "{}{}({})",
                    t.letter().to_string().to_lowercase(),
                    t.rank(),
                    e.label()
                )
            }
            Compact(t) => match t.letter() {
                Letter::A => write!(f, "su({})", t.rank() + 1),
                Letter::B => write!(f, "so({})", 2 * t.rank() + 1),
                Letter::C => write!(f, "sp({})", t.rank()),
                Letter::D => write!(f, "so({})", 2 * t.rank()),
                l => write!(f, "{}{}", l.to_string().to_lowercase(), t.rank()),
            },
            Complex(t) => match t.letter() {
                Letter::A => write!(f, "sl({},C)", t.rank() + 1),
                Letter::B => write!(f, "so({},C)", 2 * t.rank() + 1),
                Letter::C => write!(f, "sp({},C)", t.rank()),
                Letter::D => write!(f, "so({},C)", 2 * t.rank()),
                l => write!(f, "{}{}(C)", l.to_string().to_lowercase(), t.rank()),
            },
        }
    }
}

/// Underlying Dynkin diagram: a single one, or two copies of the same type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagramShape {
    Simple(LieType),
    /// Nodes `0..r` form the first copy, `r..2r` the second.
    Doubled(LieType),
}

impl DiagramShape {
    pub fn lie_type(self) -> LieType {
        match self {
            DiagramShape::Simple(t) | DiagramShape::Doubled(t) => t,
        }
    }

    pub fn node_count(self) -> usize {
        match self {
            DiagramShape::Simple(t) => t.rank(),
            DiagramShape::Doubled(t) => 2 * t.rank(),
        }
    }

    pub fn cartan(self) -> CartanMatrix {
        match self {
            DiagramShape::Simple(t) => rootsys::cartan_matrix(t),
            DiagramShape::Doubled(t) => {
                let m = rootsys::cartan_matrix(t);
                m.direct_sum(&m)
            }
        }
    }

    /// Opposition involution, applied to each copy separately.
    pub fn iota(self) -> NodePermutation {
        match self {
            DiagramShape::Simple(t) => rootsys::iota(t),
            DiagramShape::Doubled(t) => {
                let i = rootsys::iota(t);
                i.direct_sum(&i)
            }
        }
    }
}

impl fmt::Display for DiagramShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramShape::Simple(t) => write!(f, "{t}"),
            DiagramShape::Doubled(t) => write!(f, "{t}x{t}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    NodeOutOfRange(usize),
    ArrowEndpointBlack(usize, usize),
    ArrowToSelf(usize),
    NodeInTwoArrows(usize),
    ArrowNotAutomorphism,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NodeOutOfRange(i) => write!(f, "node index {} out of range", i + 1),
            Violation::ArrowEndpointBlack(i, j) => {
                write!(f, "arrow endpoint is black ({}<->{})", i + 1, j + 1)
            }
            Violation::ArrowToSelf(i) => write!(f, "arrow joins node {} to itself", i + 1),
            Violation::NodeInTwoArrows(i) => write!(f, "node {} lies on two arrows", i + 1),
            Violation::ArrowNotAutomorphism => write!(f, "arrow not an automorphism"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SatakeDiagram {
    shape: DiagramShape,
    black: BTreeSet<usize>,
    /// Each pair stored as `(min, max)`, sorted.
    arrows: Vec<(usize, usize)>,
}

impl SatakeDiagram {
    /// Builds a diagram without checking it; see [`SatakeDiagram::validate`].
    pub fn new(
        shape: DiagramShape,
        black: impl IntoIterator<Item = usize>,
        arrows: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut arrows: Vec<(usize, usize)> = arrows.into_iter().map(|(i, j)| (i.min(j), i.max(j))).collect();
        arrows.sort_unstable();
        arrows.dedup();
        SatakeDiagram {
            shape,
            black: black.into_iter().collect(),
            arrows,
        }
    }

    pub fn shape(&self) -> DiagramShape {
        self.shape
    }

    pub fn node_count(&self) -> usize {
        self.shape.node_count()
    }

    pub fn black(&self) -> &BTreeSet<usize> {
        &self.black
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn is_black(&self, i: usize) -> bool {
        self.black.contains(&i)
    }

    pub fn white_count(&self) -> usize {
        self.node_count() - self.black.len()
    }

    /// Checks every structural invariant and reports all violations found.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let n = self.node_count();
        let mut out = Vec::new();
        for &b in &self.black {
            if b >= n {
                out.push(Violation::NodeOutOfRange(b));
            }
        }
        let mut partner: Vec<Option<usize>> = vec![None; n];
        for &(i, j) in &self.arrows {
            if i >= n || j >= n {
                out.push(Violation::NodeOutOfRange(i.max(j)));
                continue;
            }
            if i == j {
                out.push(Violation::ArrowToSelf(i));
                continue;
            }
            if self.is_black(i) || self.is_black(j) {
                out.push(Violation::ArrowEndpointBlack(i, j));
            }
            for (a, b) in [(i, j), (j, i)] {
                if partner[a].is_some() {
                    out.push(Violation::NodeInTwoArrows(a));
                }
                partner[a] = Some(b);
            }
        }
        if out.is_empty() && !self.arrows_extend_to_automorphism(&partner) {
            out.push(Violation::ArrowNotAutomorphism);
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// Searches for a Cartan-matrix automorphism that agrees with the arrow
    /// involution on white nodes and maps black nodes to black nodes.
    fn arrows_extend_to_automorphism(&self, partner: &[Option<usize>]) -> bool {
        let n = self.node_count();
        let cartan = self.shape.cartan();
        let mut image: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        for i in 0..n {
            if !self.is_black(i) {
                let j = partner[i].unwrap_or(i);
                image[i] = Some(j);
                used[j] = true;
            }
        }
        let consistent = |image: &[Option<usize>], i: usize| {
            let Some(pi) = image[i] else { return true };
            (0..n).all(|k| match image[k] {
                Some(pk) => cartan.get(pi, pk) == cartan.get(i, k),
                None => true,
            })
        };
        if !(0..n).all(|i| consistent(&image, i)) {
            return false;
        }
        let blacks: Vec<usize> = self.black.iter().copied().collect();

        fn extend(
            k: usize,
            blacks: &[usize],
            image: &mut Vec<Option<usize>>,
            used: &mut Vec<bool>,
            consistent: &dyn Fn(&[Option<usize>], usize) -> bool,
        ) -> bool {
            let Some(&b) = blacks.get(k) else { return true };
            for &target in blacks {
                if used[target] {
                    continue;
                }
                image[b] = Some(target);
                used[target] = true;
                if consistent(image, b) && extend(k + 1, blacks, image, used, consistent) {
                    return true;
                }
                image[b] = None;
                used[target] = false;
            }
            false
        }
        extend(0, &blacks, &mut image, &mut used, &consistent)
    }

    /// Arrow partner of a white node, if any.
    pub fn partner(&self, i: usize) -> Option<usize> {
        self.arrows.iter().find_map(|&(a, b)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn export(&self) -> DiagramExport {
        DiagramExport {
            r#type: self.shape.to_string(),
            rank: self.node_count(),
            black: self.black.iter().map(|i| i + 1).collect(),
            arrows: self.arrows.iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
            numbering: "bourbaki",
        }
    }
}

/// Structured export of a diagram, 1-based indices, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramExport {
    pub r#type: String,
    pub rank: usize,
    pub black: Vec<usize>,
    pub arrows: Vec<[usize; 2]>,
    pub numbering: &'static str,
}

/// Real rank: number of arrow-orbits of white nodes.
pub fn real_rank(d: &SatakeDiagram) -> usize {
    d.white_count() - d.arrows().len()
}

/// Doubled diagram of a complex simple algebra viewed as a real one.
pub fn complex_as_real(t: LieType) -> SatakeDiagram {
    let r = t.rank();
    SatakeDiagram::new(DiagramShape::Doubled(t), [], (0..r).map(|i| (i, i + r)))
}

pub fn satake_of(spec: &RealFormSpec) -> Result<SatakeDiagram, SatakeError> {
    use RealFormSpec::*;
    let t = spec.lie_type()?;
    let n = t.rank();
    let simple = DiagramShape::Simple(t);
    let none = Vec::<(usize, usize)>::new;
    let d = match *spec {
        SlReal(_) => SatakeDiagram::new(simple, [], none()),
        SuStar(_) => SatakeDiagram::new(simple, (0..n).step_by(2), none()),
        SuPq(p, q) => {
            // white ends 1..p and n+1-p..n joined by arrows, black middle;
            // for p = q the middle node is white and fixed
            let p = p.min(q);
            let black = p..n - p;
            let arrows = (0..p).filter(|&i| i != n - 1 - i).map(|i| (i, n - 1 - i));
            SatakeDiagram::new(simple, black, arrows)
        }
        SoPq(p, q) => {
            let p = p.min(q);
            match t.letter() {
                Letter::B => SatakeDiagram::new(simple, p..n, none()),
                _ if p + 1 < n => SatakeDiagram::new(simple, p..n, none()),
                _ if p + 1 == n => SatakeDiagram::new(simple, [], [(n - 2, n - 1)]),
                _ => SatakeDiagram::new(simple, [], none()),
            }
        }
        SpReal(_) => SatakeDiagram::new(simple, [], none()),
        SpPq(p, q) => {
            let p = p.min(q);
            let black = (0..n).filter(|&i| i >= 2 * p || i % 2 == 0);
            SatakeDiagram::new(simple, black, none())
        }
        SoStar(_) => {
            if n % 2 == 0 {
                SatakeDiagram::new(simple, (0..n).step_by(2), none())
            } else {
                SatakeDiagram::new(simple, (0..n - 2).step_by(2), [(n - 2, n - 1)])
            }
        }
        Exceptional(e) => SatakeDiagram::new(simple, e.black().iter().copied(), e.arrows().iter().copied()),
        Compact(_) => SatakeDiagram::new(simple, 0..n, none()),
        Complex(t) => complex_as_real(t),
    };
    d.validate().map_err(SatakeError::Invalid)?;
    Ok(d)
}

/// Simple types without repetition up to `max_rank`:
/// `A1.., B2.., C3.., D4..`, then the exceptional types.
pub fn scan_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(type_of(Letter::A, n));
    }
    for n in 2..=max_rank {
        out.push(type_of(Letter::B, n));
    }
    for n in 3..=max_rank {
        out.push(type_of(Letter::C, n));
    }
    for n in 4..=max_rank {
        out.push(type_of(Letter::D, n));
    }
    for (letter, rank) in [
        (Letter::G, 2),
        (Letter::F, 4),
        (Letter::E, 6),
        (Letter::E, 7),
        (Letter::E, 8),
    ] {
        if rank <= max_rank {
            out.push(type_of(letter, rank));
        }
    }
    out
}

/// Real forms of a simple complex type (compact one last). Forms with the
/// same diagram, e.g. `sl(2,R)` and `su(1,1)`, appear once.
pub fn real_forms(t: LieType) -> Vec<RealFormSpec> {
    use RealFormSpec::*;
    let n = t.rank();
    let mut forms = Vec::new();
    match t.letter() {
        Letter::A => {
            forms.push(SlReal(n + 1));
            if (n + 1).is_multiple_of(2) && n + 1 >= 4 {
                forms.push(SuStar(n + 1));
            }
            for p in 1..=n.div_ceil(2) {
                forms.push(SuPq(p, n + 1 - p));
            }
        }
        Letter::B => forms.extend((1..=n).map(|p| SoPq(p, 2 * n + 1 - p))),
        Letter::C => {
            forms.push(SpReal(n));
            forms.extend((1..=n / 2).map(|p| SpPq(p, n - p)));
        }
        Letter::D => {
            forms.extend((1..=n).map(|p| SoPq(p, 2 * n - p)));
            forms.push(SoStar(2 * n));
        }
        Letter::E | Letter::F | Letter::G => forms.extend(
            crate::satake::Exceptional::ALL
                .into_iter()
                .filter(|e| e.lie_type() == t)
                .map(Exceptional),
        ),
    }
    forms.push(Compact(t));
    let mut seen = Vec::new();
    forms.retain(|f| {
        let d = satake_of(f).expect("database forms are in their domain");
        if seen.contains(&d) {
            false
        } else {
            seen.push(d);
            true
        }
    });
    forms
}

/// Every entry of the database up to `max_rank`, validated.
pub fn database(max_rank: usize, include_complex: bool) -> Result<Vec<(RealFormSpec, SatakeDiagram)>, SatakeError> {
    let mut out = Vec::new();
    for t in scan_types(max_rank) {
        for spec in real_forms(t) {
            let d = satake_of(&spec)?;
            out.push((spec, d));
        }
        if include_complex {
            let spec = RealFormSpec::Complex(t);
            out.push((spec, satake_of(&spec)?));
        }
    }
    Ok(out)
}

/// ASCII picture of a diagram: `o` white, `*` black, 1-based indices below,
/// arrows listed underneath.
pub fn render_ascii(d: &SatakeDiagram) -> String {
    let mut out = String::new();
    match d.shape() {
        DiagramShape::Simple(t) => draw_copy(&mut out, d, t, 0),
        DiagramShape::Doubled(t) => {
            draw_copy(&mut out, d, t, 0);
            out.push('\n');
            draw_copy(&mut out, d, t, t.rank());
        }
    }
    if d.arrows().is_empty() {
        out.push_str("arrows: none\n");
    } else {
        let list: Vec<String> = d
            .arrows()
            .iter()
            .map(|(i, j)| format!("{}<->{}", i + 1, j + 1))
            .collect();
        out.push_str(&format!("arrows: {}\n", list.join(", ")));
    }
    out
}

fn draw_copy(out: &mut String, d: &SatakeDiagram, t: LieType, offset: usize) {
    let n = t.rank();
    // main chain, bonds between consecutive chain nodes, optional hanging node
    let (chain, hang): (Vec<usize>, Option<(usize, usize)>) = match t.letter() {
        Letter::D if n >= 3 => ((0..n - 1).collect(), Some((n - 1, n - 3))),
        Letter::D => ((0..n).collect(), None),
        Letter::E => {
            let mut c = vec![0];
            c.extend(2..n);
            (c, Some((1, 3)))
        }
        _ => ((0..n).collect(), None),
    };
    let cartan = rootsys::cartan_matrix(t);
    let symbol = |i: usize| if d.is_black(i + offset) { '*' } else { 'o' };
    let mut top = String::new();
    let mut labels = String::new();
    let mut column_of = vec![0; n];
    for (k, &i) in chain.iter().enumerate() {
        column_of[i] = top.chars().count();
        top.push(symbol(i));
        labels.push_str(&format!("{:<4}", i + offset + 1));
        if let Some(&next) = chain.get(k + 1) {
            let bond = match (cartan.get(i, next), cartan.get(next, i)) {
                (0, 0) => "   ",
                (-1, -1) => "---",
                (-2, -1) => "=>=",
                (-1, -2) => "=<=",
                (-1, -3) => "<<<",
                _ => ">>>",
            };
            top.push_str(bond);
        }
    }
    out.push_str(top.trim_end());
    out.push('\n');
    out.push_str(labels.trim_end());
    out.push('\n');
    if let Some((node, attach)) = hang {
        let col = column_of[attach];
        out.push_str(&format!("{}|\n", " ".repeat(col)));
        out.push_str(&format!("{}{}\n", " ".repeat(col), symbol(node)));
        out.push_str(&format!("{}{}\n", " ".repeat(col), node + offset + 1));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use RealFormSpec::*;

    fn t(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn rank_of(spec: RealFormSpec) -> usize {
        real_rank(&satake_of(&spec).unwrap())
    }

    #[test]
    fn e6_iv_diagram() {
        let d = satake_of(&Exceptional(super::Exceptional::E6IV)).unwrap();
        // letters a..f are Bourbaki 1,3,4,5,6,2; black b,c,d,f
        assert_eq!(d.black().iter().copied().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert!(d.arrows().is_empty());
        assert_eq!(real_rank(&d), 2);
    }

    #[test]
    fn split_and_quaternionic_a_type() {
        let d = satake_of(&SlReal(6)).unwrap();
        assert!(d.black().is_empty() && d.arrows().is_empty());
        let d = satake_of(&SuStar(10)).unwrap();
        assert_eq!(d.black().iter().copied().collect::<Vec<_>>(), vec![0, 2, 4, 6, 8]);
        assert_eq!(real_rank(&d), 4);
    }

    #[test]
    fn complex_doubling() {
        let d = complex_as_real(t("A2"));
        assert_eq!(d.arrows(), &[(0, 2), (1, 3)]);
        assert_eq!(real_rank(&d), 2);
        assert!(d.validate().is_ok());
    }

    #[test]
    fn validation_failures() {
        let shape = DiagramShape::Simple(t("A3"));
        let d = SatakeDiagram::new(shape, [0], [(0, 2)]);
        assert!(d.validate().unwrap_err().contains(&Violation::ArrowEndpointBlack(0, 2)));
        assert_eq!(
            Violation::ArrowEndpointBlack(0, 2).to_string(),
            "arrow endpoint is black (1<->3)"
        );
        // 1<->2 in A3 cannot extend to a diagram automorphism
        let d = SatakeDiagram::new(shape, [], [(0, 1)]);
        assert_eq!(d.validate().unwrap_err(), vec![Violation::ArrowNotAutomorphism]);
        let d = SatakeDiagram::new(shape, [5], []);
        assert_eq!(d.validate().unwrap_err(), vec![Violation::NodeOutOfRange(5)]);
        let d = SatakeDiagram::new(DiagramShape::Simple(t("A4")), [], [(0, 2), (0, 3)]);
        assert!(
            d.validate().unwrap_err().contains(&Violation::NodeInTwoArrows(0)),
            "{:?}",
            d.validate()
        );
        // E6 flip on white ends only, with the middle colored asymmetrically
        let d = SatakeDiagram::new(DiagramShape::Simple(t("E6")), [2, 3], [(0, 5)]);
        assert_eq!(d.validate().unwrap_err(), vec![Violation::ArrowNotAutomorphism]);
    }

    #[test]
    fn classical_real_ranks() {
        assert_eq!(rank_of(SuPq(2, 5)), 2);
        assert_eq!(rank_of(SoPq(3, 3)), 3);
        for n in 2..=10 {
            for p in 1..n {
                assert_eq!(rank_of(SuPq(p, n - p)), p.min(n - p));
            }
        }
        for n in 3..=19 {
            for p in 1..n {
                assert_eq!(rank_of(SoPq(p, n - p)), p.min(n - p), "so({p},{})", n - p);
            }
        }
        for n in 2..=9 {
            for p in 1..n {
                assert_eq!(rank_of(SpPq(p, n - p)), p.min(n - p));
            }
            assert_eq!(rank_of(SoStar(2 * n)), n / 2);
        }
    }

    #[test]
    fn compact_and_split_extremes() {
        for ty in scan_types(9) {
            assert_eq!(rank_of(Compact(ty)), 0);
            assert_eq!(rank_of(Complex(ty)), ty.rank());
        }
        for spec in [
            SlReal(7),
            SoPq(4, 5),
            SoPq(4, 4),
            SpReal(5),
            Exceptional(super::Exceptional::E8VIII),
        ] {
            let d = satake_of(&spec).unwrap();
            assert_eq!(real_rank(&d), d.node_count(), "{spec}");
        }
    }

    #[test]
    fn exceptional_real_ranks() {
        let expect = [2 * 3, 4, 2, 2, 7, 4, 3, 8, 4, 4, 1, 2];
        for (e, r) in super::Exceptional::ALL.into_iter().zip(expect) {
            assert_eq!(rank_of(Exceptional(e)), r, "{e:?}");
        }
    }

    #[test]
    fn domain_errors_name_constraint() {
        let err = satake_of(&SuStar(7)).unwrap_err();
        assert_eq!(err.to_string(), "su*(7): su*(n) requires n even");
        assert!(satake_of(&SoPq(1, 1)).is_err());
        assert!(satake_of(&SoStar(2)).is_err());
        assert!(satake_of(&SlReal(1)).is_err());
    }

    #[test]
    fn database_is_valid() {
        let db = database(9, true).unwrap();
        assert!(db.len() > 100);
        for (_, d) in &db {
            assert!(d.validate().is_ok());
        }
    }

    #[test]
    fn duplicate_diagrams_dropped() {
        assert_eq!(real_forms(t("A1")), vec![SlReal(2), Compact(t("A1"))]);
        assert_eq!(real_forms(t("A3")).len(), 5);
    }

    #[test]
    fn export_is_sorted_one_based() {
        let d = satake_of(&SuPq(1, 3)).unwrap();
        let json = serde_json::to_string(&d.export()).unwrap();
        assert_eq!(
            json,
            r#"{"type":"A3","rank":3,"black":[2],"arrows":[[1,3]],"numbering":"bourbaki"}"#
        );
    }

    #[test]
    fn ascii_e6() {
        let d = satake_of(&Exceptional(super::Exceptional::E6IV)).unwrap();
        let pic = render_ascii(&d);
        assert_eq!(
            pic,
            "o---*---*---*---o\n1   3   4   5   6\n        |\n        *\n        2\narrows: none\n"
        );
    }
}
