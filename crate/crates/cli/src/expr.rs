use std::fmt;

use icosa::chartab::IrrepName;
use icosa::{ClassFn, Table};

use crate::CliError;

/// A representation of `SL2(F5)` written in terms of the nine irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepExpr {
    Irrep(IrrepName),
    Sym(u32, Box<RepExpr>),
    Dual(Box<RepExpr>),
    Tensor(Box<RepExpr>, Box<RepExpr>),
    Sum(Box<RepExpr>, Box<RepExpr>),
}

impl RepExpr {
    /// The character, after checking that every `sym^n` is applied to a
    /// 2-dimensional argument.
    pub fn eval(&self, table: &Table) -> Result<ClassFn, CliError> {
        Ok(match self {
            RepExpr::Irrep(n) => table.row(*n).clone(),
            RepExpr::Sym(n, e) => {
                let f = e.eval(table)?;
                let dim = f.degree().to_integer();
                if dim != Some(2) {
                    return Err(CliError::Semantic(format!(
                        "sym^{n} needs a 2-dimensional argument, but {e} has dimension {}",
                        f.degree()
                    )));
                }
                table.sym_power(&f, *n)?
            }
            RepExpr::Dual(e) => table.dual_char(&e.eval(table)?),
            RepExpr::Tensor(a, b) => &a.eval(table)? * &b.eval(table)?,
            RepExpr::Sum(a, b) => &a.eval(table)? + &b.eval(table)?,
        })
    }
}

impl fmt::Display for RepExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepExpr::Irrep(n) => write!(f, "{n}"),
            RepExpr::Sym(n, e) => write!(f, "sym^{n}({e})"),
            RepExpr::Dual(e) => write!(f, "dual({e})"),
            RepExpr::Sum(a, b) => match **b {
                RepExpr::Sum(..) => write!(f, "{a} + ({b})"),
                _ => write!(f, "{a} + {b}"),
            },
            RepExpr::Tensor(a, b) => {
                let wrap = |e: &RepExpr, right: bool| match e {
                    RepExpr::Sum(..) => format!("({e})"),
                    RepExpr::Tensor(..) if right => format!("({e})"),
                    _ => e.to_string(),
                };
                write!(f, "{} * {}", wrap(a, false), wrap(b, true))
            }
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for c in self.chars.iter().take(pos) {
            if *c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn error(&self, pos: usize, message: impl Into<String>) -> CliError {
        let (line, column) = self.location(pos);
        CliError::Syntax {
            line,
            column,
            message: message.into(),
            text: self.text.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<(), CliError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(self.pos, format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(self.pos, format!("expected `{want}`, found end of input"))),
        }
    }

    fn sum(&mut self) -> Result<RepExpr, CliError> {
        let mut lhs = self.product()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            lhs = RepExpr::Sum(Box::new(lhs), Box::new(self.product()?));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<RepExpr, CliError> {
        let mut lhs = self.primary()?;
        while matches!(self.peek(), Some('*' | '⊗')) {
            self.pos += 1;
            lhs = RepExpr::Tensor(Box::new(lhs), Box::new(self.primary()?));
        }
        Ok(lhs)
    }

    fn word(&mut self) -> String {
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_alphanumeric() || matches!(c, '\'' | '′' | '″'))
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn primary(&mut self) -> Result<RepExpr, CliError> {
        let start = match self.peek() {
            None => return Err(self.error(self.pos, "unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(')')?;
                return Ok(e);
            }
            Some(_) => self.pos,
        };
        let word = self.word();
        match word.as_str() {
            "" => Err(self.error(start, format!("unexpected `{}`", self.chars[start]))),
            "sym" => {
                self.expect('^')?;
                self.skip_ws();
                let digits = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let n: String = self.chars[digits..self.pos].iter().collect();
                let n = n
                    .parse::<u32>()
                    .map_err(|_| self.error(digits, "expected a non-negative integer after `sym^`"))?;
                self.expect('(')?;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(RepExpr::Sym(n, Box::new(e)))
            }
            "dual" => {
                self.expect('(')?;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(RepExpr::Dual(Box::new(e)))
            }
            name => name
                .parse::<IrrepName>()
                .map(RepExpr::Irrep)
                .map_err(|_| self.error(start, format!("unknown irreducible `{name}`"))),
        }
    }
}

/// Parses the grammar `sum := product ('+' product)*`,
/// `product := primary ('*' primary)*`,
/// `primary := name | sym^n(sum) | dual(sum) | (sum)`.
pub fn parse_rep_expr(text: &str) -> Result<RepExpr, CliError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        text,
    };
    let e = p.sum()?;
    if let Some(c) = p.peek() {
        return Err(p.error(p.pos, format!("unexpected `{c}` after expression")));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn irrep(n: IrrepName) -> Box<RepExpr> {
        Box::new(RepExpr::Irrep(n))
    }

    #[test]
    fn parses_examples() {
        assert_eq!(parse_rep_expr("sym^6(X')").unwrap(), RepExpr::Sym(6, irrep(IrrepName::XPrime)));
        assert_eq!(
            parse_rep_expr("W' * X''").unwrap(),
            RepExpr::Tensor(irrep(IrrepName::WPrime), irrep(IrrepName::XDoublePrime))
        );
        assert_eq!(parse_rep_expr("W′ ⊗ X″").unwrap(), parse_rep_expr("W' * X''").unwrap());
    }

    #[test]
    fn product_binds_tighter() {
        let e = parse_rep_expr("U + V * W").unwrap();
        assert!(matches!(e, RepExpr::Sum(_, ref b) if matches!(**b, RepExpr::Tensor(..))));
        let e = parse_rep_expr("(U + V) * W").unwrap();
        assert!(matches!(e, RepExpr::Tensor(..)));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_rep_expr("U +\n  sym^(X')") {
            Err(CliError::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("{other:?}"),
        }
        match parse_rep_expr("X3") {
            Err(CliError::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 1)),
            other => panic!("{other:?}"),
        }
        assert!(parse_rep_expr("U V").is_err());
        assert!(parse_rep_expr("").is_err());
    }

    #[test]
    fn sym_needs_dimension_two() {
        let t = Table::standard().unwrap();
        let e = parse_rep_expr("sym^2(W)").unwrap();
        assert!(matches!(e.eval(&t), Err(CliError::Semantic(_))));
        let e = parse_rep_expr("sym^3(dual(X''))").unwrap();
        assert_eq!(t.decompose(&e.eval(&t).unwrap()).unwrap().to_string(), "X1");
    }
}
