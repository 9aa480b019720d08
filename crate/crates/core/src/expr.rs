//! Object expressions such as `L2+2*L3` or `J5 + 3*(L1+L2)`.
//!
//! Grammar: `sum := term ('+' term)*`, `term := [k '*'] atom`,
//! `atom := ('L'|'J') m | '(' sum ')'`. `J<m>` may name any block size
//! `1 ≤ m ≤ p`; `J<p>` is projective and contributes nothing to the class.

use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::rep::{jordan_sum, RepObject};
use crate::ss::VerClass;

/// A parsed expression: the multiset of Jordan block sizes it names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectExpr {
    p: Prime,
    blocks: Vec<usize>,
}

impl ObjectExpr {
    pub fn parse(p: Prime, s: &str) -> Result<ObjectExpr> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty object expression".into()));
        }
        let mut parser = Parser { p, s: &chars, pos: 0 };
        let blocks = parser.sum()?;
        if parser.pos != chars.len() {
            return Err(Error::Parse(format!(
                "unexpected '{}' at position {} in {s:?}",
                chars[parser.pos], parser.pos
            )));
        }
        Ok(ObjectExpr { p, blocks })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Block sizes in nondecreasing order.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut b = self.blocks.clone();
        b.sort_unstable();
        b
    }

    pub fn class(&self) -> VerClass {
        let mut c = VerClass::zero(self.p);
        for &m in &self.blocks {
            if m < self.p.usize() {
                c.set(m, c.get(m) + 1);
            }
        }
        c
    }

    /// The direct sum of Jordan blocks as a Z/p-representation.
    pub fn lift(&self) -> Result<RepObject> {
        jordan_sum(self.p, &self.block_sizes())
    }
}

struct Parser<'a> {
    p: Prime,
    s: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected a number at position {start}")));
        }
        let text: String = self.s[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| Error::Parse(format!("number {text} is too large")))
    }

    fn sum(&mut self) -> Result<Vec<usize>> {
        let mut out = self.term()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            out.extend(self.term()?);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Vec<usize>> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let k = self.number()?;
            if self.peek() != Some('*') {
                return Err(Error::Parse(format!("expected '*' after multiplicity {k}")));
            }
            self.pos += 1;
            let a = self.atom()?;
            return Ok((0..k).flat_map(|_| a.iter().copied()).collect());
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Vec<usize>> {
        match self.peek() {
            Some('L') | Some('J') => {
                let kind = self.peek().unwrap_or('L');
                self.pos += 1;
                let m = self.number()?;
                let max = if kind == 'L' { self.p.usize() - 1 } else { self.p.usize() };
                if m == 0 || m > max {
                    return Err(Error::Parse(format!("{kind}{m} is not defined at p = {}", self.p)));
                }
                Ok(vec![m])
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) => Err(Error::Parse(format!("unexpected '{c}' at position {}", self.pos))),
            None => Err(Error::Parse("expression ends early".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sums_and_repetition() {
        let p = Prime::new(5).unwrap();
        let e = ObjectExpr::parse(p, "L2 + 2*L3").unwrap();
        assert_eq!(e.block_sizes(), vec![2, 3, 3]);
        assert_eq!(e.class().mults(), &[0, 1, 2, 0]);
        let e = ObjectExpr::parse(p, "J5+2*(L1+J2)").unwrap();
        assert_eq!(e.block_sizes(), vec![1, 1, 2, 2, 5]);
        assert_eq!(e.class().mults(), &[2, 2, 0, 0]);
        assert_eq!(e.lift().unwrap().dim(), 11);
    }

    #[test]
    fn rejects_bad_input() {
        let p = Prime::new(5).unwrap();
        for bad in ["", "L", "L5", "J6", "2L2", "L2+", "(L2", "X1", "L2)"] {
            assert!(ObjectExpr::parse(p, bad).is_err(), "{bad}");
        }
    }
}
