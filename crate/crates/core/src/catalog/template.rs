//! Integer templates for parameterized family rows.
//!
//! Arithmetic uses single-letter lowercase parameters, integer literals,
//! `+ - * /`, parentheses and implicit multiplication (`2k+1`). Division
//! floors. Constraints are comparison chains such as `1<=a<=n` or `s!=0`.

use std::collections::BTreeMap;

use thiserror::Error;

pub type Params = BTreeMap<char, i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemplateError {
    #[error("unbound parameter '{0}'")]
    Unbound(char),
    #[error("malformed arithmetic {0:?}")]
    Malformed(String),
    #[error("division by zero in {0:?}")]
    DivisionByZero(String),
    #[error("argument {expr:?} evaluates to {value}")]
    Negative { expr: String, value: i64 },
}

struct Expr<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    params: &'a Params,
}

impl<'a> Expr<'a> {
    fn new(src: &'a str, params: &'a Params) -> Self {
        Expr {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            params,
        }
    }

    fn malformed(&self) -> TemplateError {
        TemplateError::Malformed(self.src.to_string())
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<i64, TemplateError> {
        let mut v = self.product()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            v = if op == '+' { v + rhs } else { v - rhs };
        }
        Ok(v)
    }

    fn product(&mut self) -> Result<i64, TemplateError> {
        let mut v = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    v *= self.unary()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if d == 0 {
                        return Err(TemplateError::DivisionByZero(self.src.to_string()));
                    }
                    v = v.div_euclid(d);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '(' => v *= self.unary()?,
                _ => return Ok(v),
            }
        }
    }

    fn unary(&mut self) -> Result<i64, TemplateError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.malformed());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                s.parse().map_err(|_| self.malformed())
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                self.params.get(&c).copied().ok_or(TemplateError::Unbound(c))
            }
            _ => Err(self.malformed()),
        }
    }
}

pub fn eval(expr: &str, params: &Params) -> Result<i64, TemplateError> {
    let mut e = Expr::new(expr, params);
    let v = e.sum()?;
    if e.pos != e.chars.len() {
        return Err(e.malformed());
    }
    Ok(v)
}

const COMPARATORS: [&str; 6] = ["<=", ">=", "!=", "<", ">", "="];

/// Evaluates a comparison chain; every adjacent pair must hold.
pub fn check(constraint: &str, params: &Params) -> Result<bool, TemplateError> {
    let mut operands = Vec::new();
    let mut ops = Vec::new();
    let mut rest = constraint;
    loop {
        let next = COMPARATORS
            .iter()
            .filter_map(|op| rest.find(op).map(|i| (i, *op)))
            .min_by_key(|&(i, op)| (i, std::cmp::Reverse(op.len())));
        match next {
            Some((i, op)) => {
                operands.push(eval(&rest[..i], params)?);
                ops.push(op);
                rest = &rest[i + op.len()..];
            }
            None => {
                operands.push(eval(rest, params)?);
                break;
            }
        }
    }
    if ops.is_empty() {
        return Err(TemplateError::Malformed(constraint.to_string()));
    }
    Ok(ops.iter().enumerate().all(|(i, op)| {
        let (l, r) = (operands[i], operands[i + 1]);
        match *op {
            "<=" => l <= r,
            ">=" => l >= r,
            "!=" => l != r,
            "<" => l < r,
            ">" => l > r,
            _ => l == r,
        }
    }))
}

fn is_arithmetic(piece: &str) -> bool {
    let piece = piece.trim();
    if piece.is_empty() {
        return false;
    }
    if !piece
        .chars()
        .all(|c| c.is_ascii_digit() || c.is_ascii_lowercase() || "+-*/() ".contains(c))
    {
        return false;
    }
    // words such as `split` are labels, not products of parameters
    piece.split(|c: char| !c.is_ascii_lowercase()).all(|run| run.len() <= 1)
}

fn eval_argument(piece: &str, params: &Params) -> Result<String, TemplateError> {
    if !is_arithmetic(piece) {
        return Ok(piece.to_string());
    }
    let v = eval(piece, params)?;
    if v < 0 {
        return Err(TemplateError::Negative {
            expr: piece.trim().to_string(),
            value: v,
        });
    }
    Ok(v.to_string())
}

fn matching_close(chars: &[char], open: usize) -> Option<usize> {
    let mut depth = 0;
    for (k, &c) in chars.iter().enumerate().skip(open) {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(k);
                }
            }
            _ => {}
        }
    }
    None
}

/// Substitutes parameters into argument lists and `^{..}` exponents.
pub fn instantiate(template: &str, params: &Params) -> Result<String, TemplateError> {
    let chars: Vec<char> = template.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '(' {
            let close = matching_close(&chars, i).ok_or_else(|| TemplateError::Malformed(template.into()))?;
            let inner: String = chars[i + 1..close].iter().collect();
            let prev = out.trim_end().chars().last();
            let is_arg_list = prev.is_some_and(|p| p.is_ascii_alphanumeric() || p == '*') && !inner.contains('(');
            out.push('(');
            if is_arg_list {
                let args: Result<Vec<String>, _> = inner.split(',').map(|a| eval_argument(a, params)).collect();
                out.push_str(&args?.join(","));
            } else {
                out.push_str(&instantiate(&inner, params)?);
            }
            out.push(')');
            i = close + 1;
        } else if c == '^' && chars.get(i + 1) == Some(&'{') {
            let close = chars[i..]
                .iter()
                .position(|&c| c == '}')
                .map(|k| k + i)
                .ok_or_else(|| TemplateError::Malformed(template.into()))?;
            let inner: String = chars[i + 2..close].iter().collect();
            out.push('^');
            out.push_str(&eval_argument(&inner, params)?);
            i = close + 1;
        } else {
            out.push(c);
            i += 1;
        }
    }
    Ok(out)
}
