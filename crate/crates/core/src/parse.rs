//! Recursive-descent parser for the ASCII formula syntax.
//!
//! Binary operators, loosest first: `(v)`, `(^)`, `(.^)`, `\/`, `\./`, `/\`;
//! all associate to the right.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;
use crate::formula::{Atom, AtomKind, BinOp, Formula, LitBase, Literal};
use crate::translate::sugar;

/// Operator levels from loosest to tightest.
const LEVELS: [BinOp; 6] = [
    BinOp::BoolOr,
    BinOp::CoAnd,
    BinOp::StrictCoAnd,
    BinOp::Or,
    BinOp::StrictOr,
    BinOp::And,
];

pub fn parse(text: &str) -> Result<Formula, Error> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let f = p.formula(0)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(f)
}

/// Parses a whitespace-separated list of purely propositional formulas.
pub fn parse_tuple(text: &str) -> Result<Vec<Formula>, Error> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let mut out = Vec::new();
    loop {
        p.skip_ws();
        if p.pos == p.src.len() {
            return Ok(out);
        }
        out.push(p.pure()?);
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, message: &str) -> Result<T, Error> {
        Err(Error::Parse {
            pos: self.pos,
            message: message.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    /// Consumes `token` if the input continues with it.
    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), Error> {
        if self.eat(token) {
            Ok(())
        } else {
            self.fail(&alloc::format!("expected `{token}`"))
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return None,
        }
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn formula(&mut self, level: usize) -> Result<Formula, Error> {
        if level == LEVELS.len() {
            return self.unary();
        }
        let left = self.formula(level + 1)?;
        let op = LEVELS[level];
        if self.eat(op.symbol()) {
            let right = self.formula(level)?;
            Ok(Formula::bin(op, left, right))
        } else {
            Ok(left)
        }
    }

    fn unary(&mut self) -> Result<Formula, Error> {
        match self.peek() {
            Some(b'~') => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(b'-') => {
                self.pos += 1;
                self.pure_primary()?.dual()
            }
            Some(b'(') => {
                self.pos += 1;
                let f = self.formula(0)?;
                self.expect(")")?;
                Ok(f)
            }
            Some(_) => self.word(),
            None => self.fail("unexpected end of input"),
        }
    }

    fn word(&mut self) -> Result<Formula, Error> {
        let start = self.pos;
        let Some(word) = self.ident() else {
            return self.fail("expected a formula");
        };
        match word.as_str() {
            "top" => Ok(Formula::top()),
            "bot" => Ok(Formula::bot()),
            "NE" => Ok(sugar::ne()),
            "E" => {
                self.expect("(")?;
                let a = self.pure()?;
                self.expect(")")?;
                Ok(sugar::e(a))
            }
            "hook" => {
                self.expect("(")?;
                let a = self.pure()?;
                self.expect(",")?;
                let f = self.formula(0)?;
                self.expect(")")?;
                sugar::hook(a, f, false)
            }
            "iff" => {
                self.expect("(")?;
                let groups = self.groups()?;
                if groups.len() != 2 || groups[0].len() != groups[1].len() {
                    self.pos = start;
                    return self.fail("iff takes two tuples of equal length");
                }
                sugar::iff(&groups[0], &groups[1])
            }
            w => {
                if let Some(kind) = AtomKind::from_keyword(w) {
                    self.expect("(")?;
                    let mut groups = self.groups()?;
                    if kind == AtomKind::Dependence && groups.len() == 1 {
                        groups.insert(0, Vec::new());
                    }
                    Atom::new(kind, groups).map(Formula::Atom).map_err(|e| match e {
                        Error::Arity(m) => Error::Parse { pos: start, message: m },
                        e => e,
                    })
                } else if crate::domain::is_valid_prop_name(w) {
                    Ok(Formula::prop(w))
                } else {
                    self.pos = start;
                    self.fail(&alloc::format!("invalid proposition `{w}`"))
                }
            }
        }
    }

    /// `;`-separated tuples of pure formulas, consuming the closing `)`.
    fn groups(&mut self) -> Result<Vec<Vec<Formula>>, Error> {
        let mut groups = alloc::vec![Vec::new()];
        loop {
            match self.peek() {
                Some(b')') => {
                    self.pos += 1;
                    return Ok(groups);
                }
                Some(b';') => {
                    self.pos += 1;
                    groups.push(Vec::new());
                }
                Some(_) => {
                    let f = self.pure()?;
                    groups.last_mut().expect("nonempty").push(f);
                }
                None => return self.fail("unterminated argument list"),
            }
        }
    }

    /// Purely propositional formula: `\/` over `/\` over primaries.
    fn pure(&mut self) -> Result<Formula, Error> {
        let left = self.pure_conj()?;
        if self.eat("\\/") {
            Ok(Formula::or(left, self.pure()?))
        } else {
            Ok(left)
        }
    }

    fn pure_conj(&mut self) -> Result<Formula, Error> {
        let left = self.pure_primary()?;
        if self.eat("/\\") {
            Ok(Formula::and(left, self.pure_conj()?))
        } else {
            Ok(left)
        }
    }

    fn pure_primary(&mut self) -> Result<Formula, Error> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.pure_primary()?.dual()
            }
            Some(b'(') => {
                self.pos += 1;
                let f = self.pure()?;
                self.expect(")")?;
                Ok(f)
            }
            Some(_) => {
                let start = self.pos;
                match self.ident() {
                    Some(w) if w == "top" => Ok(Formula::top()),
                    Some(w) if w == "bot" => Ok(Formula::bot()),
                    Some(w) if crate::domain::is_valid_prop_name(&w) => {
                        Ok(Formula::Lit(Literal::new(LitBase::Pos(w), false)))
                    }
                    _ => {
                        self.pos = start;
                        self.fail("expected a purely propositional formula")
                    }
                }
            }
            None => self.fail("unexpected end of input"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Formula {
        Formula::prop(s)
    }

    #[test]
    fn examples() {
        assert_eq!(
            parse("dep(p;q)").unwrap(),
            Formula::Atom(Atom::dep(vec![p("p")], vec![p("q")]).unwrap())
        );
        assert_eq!(
            parse("p \\/ (q /\\ ~bot)").unwrap(),
            Formula::or(p("p"), Formula::and(p("q"), sugar::ne()))
        );
        assert_eq!(parse("p \\./ q").unwrap(), Formula::strict_or(p("p"), p("q")));
    }

    #[test]
    fn precedence_and_associativity() {
        let f = parse("a (v) b /\\ c \\/ d").unwrap();
        assert_eq!(
            f,
            Formula::bor(p("a"), Formula::or(Formula::and(p("b"), p("c")), p("d")))
        );
        let g = parse("a \\/ b \\/ c").unwrap();
        assert_eq!(g, Formula::or(p("a"), Formula::or(p("b"), p("c"))));
        let h = parse("a (^) b (.^) c (v) d").unwrap();
        assert_eq!(
            h,
            Formula::bor(
                Formula::co_and(p("a"), Formula::strict_co_and(p("b"), p("c"))),
                p("d")
            )
        );
    }

    #[test]
    fn literals_and_negations() {
        assert_eq!(parse("~-p").unwrap(), Formula::not(Formula::neg_prop("p")));
        assert_eq!(parse("-(p /\\ top)").unwrap(), Formula::or(Formula::neg_prop("p"), Formula::bot()));
        assert_eq!(parse("~~p").unwrap(), Formula::Not(alloc::boxed::Box::new(Formula::not(p("p")))));
        assert!(parse("-(p (v) q)").is_err());
    }

    #[test]
    fn atoms_and_sugar() {
        assert_eq!(parse("dep(q)").unwrap().to_string(), "dep(;q)");
        assert_eq!(parse("perpc(a;c;b)").unwrap().to_string(), "perpc(a;c;b)");
        assert_eq!(parse("dep(a (b /\\ -c);d)").unwrap().to_string(), "dep(a (b /\\ -c);d)");
        assert_eq!(parse("E(p)").unwrap().to_string(), "(top \\/ (~bot /\\ p))");
        assert_eq!(parse("hook(p, q)").unwrap().to_string(), "(-p \\/ (p /\\ q))");
        assert_eq!(
            parse("iff(p;q)").unwrap().to_string(),
            "((p /\\ q) \\/ (-p /\\ -q))"
        );
        assert!(parse("inc(p;q r)").is_err());
        assert!(parse("dep(p ~q;r)").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        match parse("p /\\ ") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse("(p").is_err());
        assert!(parse("p q").is_err());
        assert!(parse("top_x").is_ok());
        assert!(parse("Top").is_err());
    }
}
