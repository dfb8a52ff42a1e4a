//! Parser and printer for reductive Lie algebra expressions.
//!
//! Grammar (case-insensitive, whitespace ignored):
//!
//! ```text
//! expr     := product
//! product  := term (SEP term)*            SEP = x | × | *
//! term     := (group | atom) quotient*
//! group    := '{' product '}' | '[' product ']' | '(' product ')'
//! quotient := '/' Z_n | '/' '{' Z_m x Z_n ... '}'
//! atom     := sl(n,R) | sl(n,C) | sl(n,H) | su*(2n) | su(p,q) | su(n)
//!           | so(p,q) | so(n) | so(n,C) | so*(2n) | spin(..)
//!           | sp(n,R) | sp(n,C) | sp(p,q) | sp(n) | u(p,q) | u(n)
//!           | S(U(..) x U(..) ...)
//!           | e6(I..IV) | e7(V..VII) | e8(VIII..IX) | f4(I..II) | g2(split)
//!           | e6 | e7 | e8 | f4 | g2 | e6(C) ...
//!           | T^k | R^k
//! ```
//!
//! Group-level decorations (quotients, `Spin`) are discarded since only the
//! Lie algebra matters; the result records that something was dropped.
//! Low-rank coincidences are normalized, e.g. `so(2,2)` becomes
//! `sl(2,R) x sl(2,R)` and `u(p,q)` becomes `su(p,q) x T^1`.

use std::fmt;

use thiserror::Error;

use crate::cones::ReductiveAlgebra;
use crate::rootsys::{Letter, LieType};
use crate::satake::{Exceptional, RealFormSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub message: String,
}

/// A parsed expression together with its normalized algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraExpression {
    pub source: String,
    pub normalized: ReductiveAlgebra,
    /// Set when quotients or covering-group names were stripped.
    pub group_data_discarded: bool,
}

pub fn parse(s: &str) -> Result<ReductiveAlgebra, ParseError> {
    parse_expression(s).map(|e| e.normalized)
}

pub fn parse_expression(s: &str) -> Result<AlgebraExpression, ParseError> {
    let mut p = Parser::new(s);
    p.skip_ws();
    let pieces = p.product()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected {:?}", p.chars[p.pos])));
    }
    let mut factors = Vec::new();
    let (mut compact, mut split) = (0, 0);
    for piece in pieces {
        match piece {
            Piece::Simple(f) => factors.push(f),
            Piece::Torus(k) => compact += k,
            Piece::Split(k) => split += k,
        }
    }
    factors.sort();
    let normalized = ReductiveAlgebra::new(factors, compact, split).map_err(|_| ParseError {
        position: 0,
        message: "expression denotes the zero algebra".into(),
    })?;
    Ok(AlgebraExpression {
        source: s.to_string(),
        normalized,
        group_data_discarded: p.discarded,
    })
}

/// Canonical text: factors sorted, then `T^k` and `R^k`.
pub fn render(alg: &ReductiveAlgebra) -> String {
    let mut factors = alg.simple_factors.clone();
    factors.sort();
    let mut parts: Vec<String> = factors.iter().map(RealFormSpec::to_string).collect();
    if alg.compact_center_dim > 0 {
        parts.push(format!("T^{}", alg.compact_center_dim));
    }
    if alg.split_center_dim > 0 {
        parts.push(format!("R^{}", alg.split_center_dim));
    }
    parts.join(" x ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Piece {
    Simple(RealFormSpec),
    Torus(usize),
    Split(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Arg {
    Num(usize),
    Word(String),
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Num(n) => write!(f, "{n}"),
            Arg::Word(w) => write!(f, "{w}"),
        }
    }
}

/// Maps notation variants onto ASCII, one char to one char so positions
/// survive.
fn fold_char(c: char) -> char {
    match c {
        'ℝ' => 'r',
        'ℂ' => 'c',
        'ℍ' => 'h',
        'ℤ' => 'z',
        '−' | '–' => '-',
        '₀'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10).unwrap(),
        '⁰' => '0',
        '¹' => '1',
        '²' => '2',
        '³' => '3',
        '⁴'..='⁹' => char::from_digit(c as u32 - '⁴' as u32 + 4, 10).unwrap(),
        c => c.to_ascii_lowercase(),
    }
}

const KEYWORDS: [&str; 16] = [
    "spin", "sl", "su", "so", "sp", "gl", "e6", "e7", "e8", "f4", "g2", "u", "s", "t", "r", "z",
];

struct Parser {
    chars: Vec<char>,
    pos: usize,
    discarded: bool,
}

impl Parser {
    fn new(s: &str) -> Self {
        Parser {
            chars: s.chars().map(fold_char).collect(),
            pos: 0,
            discarded: false,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn error_at(&self, position: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            position,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn eat_separator(&mut self) -> bool {
        self.skip_ws();
        match self.peek() {
            Some('x' | '×' | '*' | '⊕') => {
                self.pos += 1;
                true
            }
            _ => false,
        }
    }

    fn product(&mut self) -> Result<Vec<Piece>, ParseError> {
        let mut pieces = self.term()?;
        while self.eat_separator() {
            pieces.extend(self.term()?);
        }
        Ok(pieces)
    }

    fn term(&mut self) -> Result<Vec<Piece>, ParseError> {
        self.skip_ws();
        let pieces = match self.peek() {
            Some(open @ ('{' | '[' | '(')) => {
                self.pos += 1;
                let inner = self.product()?;
                self.expect(match open {
                    '{' => '}',
                    '[' => ']',
                    _ => ')',
                })?;
                inner
            }
            _ => self.atom()?,
        };
        while self.eat('/') {
            self.quotient()?;
            self.discarded = true;
        }
        Ok(pieces)
    }

    /// Skips a discrete group: `Z_n`, `Z3`, `Z_{n}` or a bracketed product of those.
    fn quotient(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(open @ ('{' | '(' | '[')) => {
                self.pos += 1;
                self.cyclic()?;
                while self.eat_separator() {
                    self.cyclic()?;
                }
                self.expect(match open {
                    '{' => '}',
                    '(' => ')',
                    _ => ']',
                })
            }
            _ => self.cyclic(),
        }
    }

    fn cyclic(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() != Some('z') {
            return Err(self.error("expected a discrete quotient such as Z_2"));
        }
        self.pos += 1;
        if self.peek() == Some('_') {
            self.pos += 1;
        }
        if self.peek() == Some('{') {
            while let Some(c) = self.peek() {
                self.pos += 1;
                if c == '}' {
                    return Ok(());
                }
            }
            return Err(self.error("unclosed '{'"));
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() && c != 'x') {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected the order of the cyclic group"));
        }
        Ok(())
    }

    fn keyword(&mut self) -> Result<&'static str, ParseError> {
        self.skip_ws();
        let rest: String = self.chars[self.pos..].iter().take(4).collect();
        let Some(&kw) = KEYWORDS.iter().find(|k| rest.starts_with(**k)) else {
            return Err(self.error("unknown atom"));
        };
        self.pos += kw.chars().count();
        Ok(kw)
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn args(&mut self) -> Result<Vec<Arg>, ParseError> {
        self.expect('(')?;
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let start = self.pos;
            if let Some(n) = self.number() {
                out.push(Arg::Num(n));
            } else {
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                if self.pos == start {
                    return Err(self.error("malformed parameter"));
                }
                out.push(Arg::Word(self.chars[start..self.pos].iter().collect()));
            }
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.error("malformed parameters: expected ',' or ')'")),
            }
        }
    }

    /// `^k`, `^{k}`, or a bare `k`; defaults to 1.
    fn exponent(&mut self) -> Result<usize, ParseError> {
        if self.peek() != Some('^') {
            return Ok(self.number().unwrap_or(1));
        }
        self.pos += 1;
        let braced = self.peek() == Some('{');
        if braced {
            self.pos += 1;
        }
        let Some(k) = self.number() else {
            return Err(self.error("expected a dimension after '^'"));
        };
        if braced {
            self.expect('}')?;
        }
        Ok(k)
    }

    fn star(&mut self) -> bool {
        // `su*(`: a star directly followed by an argument list
        if self.peek() != Some('*') {
            return false;
        }
        let mut k = self.pos + 1;
        while self.chars.get(k).is_some_and(|c| c.is_whitespace()) {
            k += 1;
        }
        if self.chars.get(k) == Some(&'(') {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn atom(&mut self) -> Result<Vec<Piece>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let kw = self.keyword()?;
        let malformed = |p: &Parser, args: &[Arg]| {
            let list: Vec<String> = args.iter().map(Arg::to_string).collect();
            p.error_at(start, format!("malformed parameters for {kw}({})", list.join(",")))
        };
        match kw {
            "t" => Ok(vec![Piece::Torus(self.exponent()?)]),
            "r" => Ok(vec![Piece::Split(self.exponent()?)]),
            "gl" => Err(self.error_at(start, "gl is not semisimple modulo its center; write sl(n,R) x R^1")),
            "z" => Err(self.error_at(start, "discrete group outside a quotient")),
            "s" => {
                // S(U(..) x U(..) ...)
                self.expect('(')?;
                let mut us = vec![self.unitary()?];
                while self.eat_separator() {
                    us.push(self.unitary()?);
                }
                self.expect(')')?;
                let mut pieces = Vec::new();
                for (p, q) in &us {
                    pieces.extend(special_unitary(*p, *q));
                }
                if us.len() > 1 {
                    pieces.push(Piece::Torus(us.len() - 1));
                }
                Ok(pieces)
            }
            "u" => {
                let args = self.args()?;
                let (p, q) = match args.as_slice() {
                    [Arg::Num(n)] => (*n, 0),
                    [Arg::Num(p), Arg::Num(q)] => (*p, *q),
                    _ => return Err(malformed(self, &args)),
                };
                let mut pieces = special_unitary(p, q);
                if p + q > 0 {
                    pieces.push(Piece::Torus(1));
                }
                Ok(pieces)
            }
            "sl" => {
                let args = self.args()?;
                match args.as_slice() {
                    [Arg::Num(n), Arg::Word(f)] if f == "r" => Ok(special_linear_real(*n)),
                    [Arg::Num(n), Arg::Word(f)] if f == "c" => Ok(complex(Letter::A, n.saturating_sub(1))),
                    [Arg::Num(n), Arg::Word(f)] if f == "h" => Ok(quaternionic(2 * n)),
                    _ => Err(malformed(self, &args)),
                }
            }
            "su" => {
                let star = self.star();
                let args = self.args()?;
                match (star, args.as_slice()) {
                    (true, [Arg::Num(n)]) if n % 2 == 0 => Ok(quaternionic(*n)),
                    (false, [Arg::Num(n)]) => Ok(special_unitary(*n, 0)),
                    (false, [Arg::Num(p), Arg::Num(q)]) => Ok(special_unitary(*p, *q)),
                    _ => Err(malformed(self, &args)),
                }
            }
            "so" | "spin" => {
                if kw == "spin" {
                    self.discarded = true;
                }
                let star = kw == "so" && self.star();
                let args = self.args()?;
                match (star, args.as_slice()) {
                    (true, [Arg::Num(n)]) if n % 2 == 0 => Ok(orthogonal_star(*n)),
                    (false, [Arg::Num(n)]) => Ok(orthogonal(*n, 0)),
                    (false, [Arg::Num(p), Arg::Num(q)]) => Ok(orthogonal(*p, *q)),
                    (false, [Arg::Num(n), Arg::Word(f)]) if f == "c" => Ok(orthogonal_complex(*n)),
                    _ => Err(malformed(self, &args)),
                }
            }
            "sp" => {
                let args = self.args()?;
                match args.as_slice() {
                    [Arg::Num(n)] => Ok(symplectic(*n, 0)),
                    [Arg::Num(p), Arg::Num(q)] => Ok(symplectic(*p, *q)),
                    [Arg::Num(n), Arg::Word(f)] if f == "r" => Ok(symplectic_real(*n)),
                    [Arg::Num(n), Arg::Word(f)] if f == "c" => Ok(match n {
                        0 => vec![],
                        1 => complex(Letter::A, 1),
                        _ => complex(Letter::C, *n),
                    }),
                    _ => Err(malformed(self, &args)),
                }
            }
            _ => self.exceptional(kw, start),
        }
    }

    fn exceptional(&mut self, kw: &str, start: usize) -> Result<Vec<Piece>, ParseError> {
        let ty: LieType = kw.parse().expect("keyword names a valid exceptional type");
        let label = match self.peek() {
            Some('(') => {
                let args = self.args()?;
                match args.as_slice() {
                    [Arg::Word(w)] => Some(w.clone()),
                    _ => return Err(self.error_at(start, format!("malformed label for {kw}"))),
                }
            }
            Some('^') => {
                self.pos += 1;
                let braced = self.peek() == Some('{');
                if braced {
                    self.pos += 1;
                }
                let s = self.pos;
                while self.peek().is_some_and(|c| matches!(c, 'i' | 'v' | 'x')) {
                    self.pos += 1;
                }
                // a trailing 'x' is the product separator, not a numeral
                let mut word: String = self.chars[s..self.pos].iter().collect();
                while word.ends_with('x') && Exceptional::from_label(ty, &word).is_none() {
                    word.pop();
                    self.pos -= 1;
                }
                if braced {
                    self.expect('}')?;
                }
                Some(word)
            }
            _ => None,
        };
        match label {
            None => Ok(vec![Piece::Simple(RealFormSpec::Compact(ty))]),
            Some(l) if l == "c" => Ok(vec![Piece::Simple(RealFormSpec::Complex(ty))]),
            Some(l) => match Exceptional::from_label(ty, &l) {
                Some(e) => Ok(vec![Piece::Simple(RealFormSpec::Exceptional(e))]),
                None => Err(self.error_at(start, format!("{kw} has no real form labelled {}", l.to_uppercase()))),
            },
        }
    }

    fn unitary(&mut self) -> Result<(usize, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.keyword()? != "u" {
            return Err(self.error_at(start, "expected U(..) inside S(..)"));
        }
        let args = self.args()?;
        match args.as_slice() {
            [Arg::Num(n)] => Ok((*n, 0)),
            [Arg::Num(p), Arg::Num(q)] => Ok((*p, *q)),
            _ => Err(self.error_at(start, "malformed parameters for u")),
        }
    }
}

fn simple(spec: RealFormSpec) -> Vec<Piece> {
    vec![Piece::Simple(spec)]
}

fn ty(letter: Letter, rank: usize) -> LieType {
    LieType::new(letter, rank).expect("normalization keeps types valid")
}

fn compact(letter: Letter, rank: usize) -> Vec<Piece> {
    simple(RealFormSpec::Compact(ty(letter, rank)))
}

fn complex(letter: Letter, rank: usize) -> Vec<Piece> {
    if rank == 0 {
        return vec![];
    }
    simple(RealFormSpec::Complex(ty(letter, rank)))
}

fn special_linear_real(n: usize) -> Vec<Piece> {
    if n < 2 {
        vec![]
    } else {
        simple(RealFormSpec::SlReal(n))
    }
}

fn quaternionic(n: usize) -> Vec<Piece> {
    match n {
        0 => vec![],
        2 => compact(Letter::A, 1),
        _ => simple(RealFormSpec::SuStar(n)),
    }
}

fn special_unitary(p: usize, q: usize) -> Vec<Piece> {
    match (p, q) {
        _ if p + q < 2 => vec![],
        (0, n) | (n, 0) => compact(Letter::A, n - 1),
        _ => simple(RealFormSpec::SuPq(p, q)),
    }
}

fn orthogonal(p: usize, q: usize) -> Vec<Piece> {
    let n = p + q;
    let (lo, _) = (p.min(q), p.max(q));
    match n {
        0 | 1 => vec![],
        2 if lo == 0 => vec![Piece::Torus(1)],
        2 => vec![Piece::Split(1)],
        4 => match lo {
            0 => [compact(Letter::A, 1), compact(Letter::A, 1)].concat(),
            1 => complex(Letter::A, 1),
            _ => [special_linear_real(2), special_linear_real(2)].concat(),
        },
        _ if lo == 0 && n % 2 == 1 => compact(Letter::B, n / 2),
        _ if lo == 0 => compact(Letter::D, n / 2),
        _ => simple(RealFormSpec::SoPq(p, q)),
    }
}

fn orthogonal_star(n: usize) -> Vec<Piece> {
    match n {
        0 => vec![],
        2 => vec![Piece::Torus(1)],
        4 => [compact(Letter::A, 1), special_linear_real(2)].concat(),
        _ => simple(RealFormSpec::SoStar(n)),
    }
}

fn orthogonal_complex(n: usize) -> Vec<Piece> {
    match n {
        0 | 1 => vec![],
        2 => vec![Piece::Torus(1), Piece::Split(1)],
        3 => complex(Letter::A, 1),
        4 => [complex(Letter::A, 1), complex(Letter::A, 1)].concat(),
        _ if n % 2 == 1 => complex(Letter::B, n / 2),
        _ => complex(Letter::D, n / 2),
    }
}

fn symplectic_real(n: usize) -> Vec<Piece> {
    match n {
        0 => vec![],
        1 => special_linear_real(2),
        _ => simple(RealFormSpec::SpReal(n)),
    }
}

fn symplectic(p: usize, q: usize) -> Vec<Piece> {
    match (p, q) {
        (0, 0) => vec![],
        (0, n) | (n, 0) => compact(Letter::C, n),
        _ => simple(RealFormSpec::SpPq(p, q)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::rank_profile;
    use RealFormSpec::*;

    fn alg(mut factors: Vec<RealFormSpec>, t: usize, r: usize) -> ReductiveAlgebra {
        factors.sort();
        ReductiveAlgebra::new(factors, t, r).unwrap()
    }

    fn lt(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn direct_tokens() {
        assert_eq!(parse("SU*(14)").unwrap(), alg(vec![SuStar(14)], 0, 0));
        assert_eq!(parse("sl(5,H)").unwrap(), alg(vec![SuStar(10)], 0, 0));
        assert_eq!(
            parse("e6(IV)").unwrap(),
            alg(vec![Exceptional(crate::satake::Exceptional::E6IV)], 0, 0)
        );
        assert_eq!(parse("E6^{IV}").unwrap(), parse("e6(iv)").unwrap());
        assert_eq!(
            parse("g2(split)").unwrap(),
            alg(vec![Exceptional(crate::satake::Exceptional::G2Split)], 0, 0)
        );
        assert_eq!(parse("G2").unwrap(), alg(vec![Compact(lt("G2"))], 0, 0));
        assert_eq!(parse("e7(C)").unwrap(), alg(vec![Complex(lt("E7"))], 0, 0));
    }

    #[test]
    fn quotients_and_braces() {
        let e = parse_expression("{SL(3,C) x SU(2,1)}/Z3").unwrap();
        assert_eq!(e.normalized, alg(vec![SuPq(2, 1), Complex(lt("A2"))], 0, 0));
        assert!(e.group_data_discarded);
        let e = parse_expression("{SU(2,1) x SU(3) x SU(3)}/{Z_2 x Z_3}").unwrap();
        assert_eq!(e.normalized.simple_factors.len(), 3);
        assert!(!parse_expression("su(2,1)").unwrap().group_data_discarded);
        assert_eq!(parse("[SU(5,1)/Z_3] x T^1").unwrap(), alg(vec![SuPq(5, 1)], 1, 0));
    }

    #[test]
    fn unitary_groups() {
        assert_eq!(
            parse("U(1,1) x SO(3,3)").unwrap(),
            alg(vec![SoPq(3, 3), SuPq(1, 1)], 1, 0)
        );
        assert_eq!(
            parse("S(U(4,1) x U(1)) x SU(1,1)").unwrap(),
            alg(vec![SuPq(1, 1), SuPq(4, 1)], 1, 0)
        );
        assert_eq!(parse("U(1)").unwrap(), alg(vec![], 1, 0));
        assert_eq!(parse("U(3,0)").unwrap(), alg(vec![Compact(lt("A2"))], 1, 0));
    }

    #[test]
    fn low_rank_normalizations() {
        assert_eq!(parse("so(2)").unwrap(), alg(vec![], 1, 0));
        assert_eq!(parse("so(1,1)").unwrap(), alg(vec![], 0, 1));
        assert_eq!(parse("so(2,2)").unwrap(), alg(vec![SlReal(2), SlReal(2)], 0, 0));
        assert_eq!(parse("so(3,1)").unwrap(), alg(vec![Complex(lt("A1"))], 0, 0));
        assert_eq!(
            parse("so(4)").unwrap(),
            alg(vec![Compact(lt("A1")), Compact(lt("A1"))], 0, 0)
        );
        assert_eq!(parse("so(2,1)").unwrap(), alg(vec![SoPq(2, 1)], 0, 0));
        assert_eq!(parse("sp(1,R)").unwrap(), alg(vec![SlReal(2)], 0, 0));
        assert_eq!(parse("so*(4)").unwrap(), alg(vec![SlReal(2), Compact(lt("A1"))], 0, 0));
        assert_eq!(parse("Spin(7,1)").unwrap(), alg(vec![SoPq(7, 1)], 0, 0));
    }

    #[test]
    fn profile_preserved_by_normalization() {
        let p = rank_profile(&parse("so(2,2)").unwrap()).unwrap();
        assert_eq!((p.real_rank, p.a_hyperbolic_rank), (2, 2));
    }

    #[test]
    fn separators() {
        let a = parse("su(2)xso(3)").unwrap();
        let b = parse("su(2) × so(3)").unwrap();
        let c = parse("su(2)*so(3)").unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(parse("T x su*(6)").unwrap(), alg(vec![SuStar(6)], 1, 0));
        assert_eq!(
            parse("e6^IVxT^2").unwrap(),
            alg(vec![Exceptional(crate::satake::Exceptional::E6IV)], 2, 0)
        );
        assert_eq!(
            parse("SL(3,ℝ) × SO(3,3)").unwrap(),
            alg(vec![SlReal(3), SoPq(3, 3)], 0, 0)
        );
    }

    #[test]
    fn errors_carry_position() {
        let e = parse("su(2) x foo(3)").unwrap_err();
        assert_eq!(e.position, 8);
        let e = parse("gl(3,R)").unwrap_err();
        assert_eq!(e.position, 0);
        assert!(parse("su(2,").is_err());
        assert!(parse("su*(7)").is_err());
        assert!(parse("e6(V)").is_err());
        assert!(parse("su(2) su(3)").is_err());
        assert!(parse("su(1)").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn render_canonical() {
        assert_eq!(render(&alg(vec![SlReal(7), SlReal(3)], 0, 0)), "sl(3,R) x sl(7,R)");
        assert_eq!(render(&alg(vec![SuPq(2, 1)], 1, 0)), "su(2,1) x T^1");
        assert_eq!(render(&parse("R^2 x e6 x so(3,C)").unwrap()), "e6 x sl(2,C) x R^2");
    }
}
