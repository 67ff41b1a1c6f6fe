//! Infix expressions over Boolean, rational and lattice values.
//!
//! Precedence, tightest first: `¬ !`, then `∧ & · *`, then `⊕ ^`, then
//! `∨ |`, then `+ −  -`. Binary operators associate to the left. `min`,
//! `max` (two or more arguments) and `med` (three arguments) use call
//! syntax. Variables are `x1, x2, ...`.
//!
//! | sort     | operators                     | literals              |
//! |----------|-------------------------------|-----------------------|
//! | Boolean  | `¬ ∧ ⊕ ∨`, min, max, med      | `0`, `1`              |
//! | rational | `∧ · ∨ + −`, min, max, med    | `3`, `1/2`, `0.25`    |
//! | lattice  | `∧ ∨`, min, max, med          | element names         |

use std::fmt;

use pivotal::scalar::parse_rational;
use pivotal::{Elem, FiniteLattice, FunctionTable, Order, Rational, Sort, TotalOrder};
use thiserror::Error;

/// Sort an expression is read and evaluated in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Boolean,
    /// Rational values; variables range over the sort (Boolean or a grid).
    Rational(Sort),
    /// Values and variables in a finite lattice.
    Lattice(Sort),
}

impl Domain {
    pub fn sort(&self) -> Sort {
        match self {
            Domain::Boolean => Sort::Boolean,
            Domain::Rational(s) | Domain::Lattice(s) => s.clone(),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Domain::Boolean => "Boolean",
            Domain::Rational(_) => "rational",
            Domain::Lattice(_) => "lattice",
        }
    }

    fn allows(&self, op: BinOp) -> bool {
        match self {
            Domain::Boolean => matches!(op, BinOp::And | BinOp::Xor | BinOp::Or),
            Domain::Rational(_) => matches!(op, BinOp::And | BinOp::Mul | BinOp::Or | BinOp::Add | BinOp::Sub),
            Domain::Lattice(_) => matches!(op, BinOp::And | BinOp::Or),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    And,
    Mul,
    Xor,
    Or,
    Add,
    Sub,
}

impl BinOp {
    fn level(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Or => 2,
            BinOp::Xor => 3,
            BinOp::And | BinOp::Mul => 4,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BinOp::And => "&",
            BinOp::Mul => "*",
            BinOp::Xor => "^",
            BinOp::Or => "|",
            BinOp::Add => "+",
            BinOp::Sub => "-",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Min,
    Max,
    Med,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Min => "min",
            Func::Max => "max",
            Func::Med => "med",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Literal {
    Bool(bool),
    Rat(Rational),
    Elem(Elem),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// 0-based variable index; `x1` is `Var(0)`.
    Var(usize),
    Lit(Literal),
    Not(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

const UNARY_LEVEL: u8 = 5;

impl Expr {
    fn level(&self) -> u8 {
        match self {
            Expr::Binary(op, ..) => op.level(),
            _ => UNARY_LEVEL + 1,
        }
    }

    /// Number of variables needed: the largest index plus one.
    pub fn max_var(&self) -> usize {
        match self {
            Expr::Var(i) => i + 1,
            Expr::Lit(_) => 0,
            Expr::Not(e) => e.max_var(),
            Expr::Binary(_, a, b) => a.max_var().max(b.max_var()),
            Expr::Call(_, args) => args.iter().map(Expr::max_var).max().unwrap_or(0),
        }
    }

    /// ASCII rendering that parses back to the same tree.
    pub fn display<'a>(&'a self, sort: &'a Sort) -> impl fmt::Display + 'a {
        Printer { expr: self, sort }
    }
}

struct Printer<'a> {
    expr: &'a Expr,
    sort: &'a Sort,
}

impl Printer<'_> {
    fn child<'b>(&'b self, expr: &'b Expr) -> Printer<'b> {
        Printer { expr, sort: self.sort }
    }
}

impl fmt::Display for Printer<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.expr {
            Expr::Var(i) => write!(f, "x{}", i + 1),
            Expr::Lit(Literal::Bool(b)) => write!(f, "{}", u8::from(*b)),
            Expr::Lit(Literal::Rat(q)) => write!(f, "{q}"),
            Expr::Lit(Literal::Elem(e)) => write!(f, "{}", self.sort.label(*e)),
            Expr::Not(e) => {
                if e.level() <= UNARY_LEVEL {
                    write!(f, "!({})", self.child(e))
                } else {
                    write!(f, "!{}", self.child(e))
                }
            }
            Expr::Binary(op, a, b) => {
                let level = op.level();
                if a.level() < level {
                    write!(f, "({})", self.child(a))?;
                } else {
                    write!(f, "{}", self.child(a))?;
                }
                write!(f, " {} ", op.symbol())?;
                if b.level() <= level {
                    write!(f, "({})", self.child(b))
                } else {
                    write!(f, "{}", self.child(b))
                }
            }
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", self.child(a))?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("column {column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("column {column}: {message}")]
    Sort { column: usize, message: String },
    #[error("variable x{index} exceeds the declared arity {arity}")]
    Unbound { index: usize, arity: usize },
    #[error(transparent)]
    Table(#[from] pivotal::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Op(BinOp),
    Not,
    LParen,
    RParen,
    Comma,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Number(s) => write!(f, "`{s}`"),
            Tok::Op(op) => write!(f, "`{}`", op.symbol()),
            Tok::Not => write!(f, "`!`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

/// Tokens with 1-based character columns.
fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '¬' | '!' | '~' => Some(Tok::Not),
            '∧' | '&' => Some(Tok::Op(BinOp::And)),
            '·' | '*' => Some(Tok::Op(BinOp::Mul)),
            '⊕' | '^' => Some(Tok::Op(BinOp::Xor)),
            '∨' | '|' => Some(Tok::Op(BinOp::Or)),
            '+' => Some(Tok::Op(BinOp::Add)),
            '−' | '-' => Some(Tok::Op(BinOp::Sub)),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((column, tok));
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/' || chars[i] == '.') {
                i += 1;
            }
            out.push((column, Tok::Number(chars[start..i].iter().collect())));
        } else if c.is_alphanumeric() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push((column, Tok::Ident(chars[start..i].iter().collect())));
        } else {
            return Err(ExprError::Syntax {
                column,
                expected: vec!["an operand or operator".into()],
                found: format!("`{c}`"),
            });
        }
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    domain: &'a Domain,
}

impl Parser<'_> {
    fn peek(&self) -> &(usize, Tok) {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> ExprError {
        let (column, tok) = self.peek();
        ExprError::Syntax {
            column: *column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ExprError> {
        if self.peek().1 == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&[name]))
        }
    }

    fn binary(&mut self, level: u8) -> Result<Expr, ExprError> {
        if level > 4 {
            return self.unary();
        }
        let mut lhs = self.binary(level + 1)?;
        loop {
            let (column, tok) = self.peek().clone();
            let op = match tok {
                Tok::Op(op) if op.level() == level => op,
                _ => return Ok(lhs),
            };
            if !self.domain.allows(op) {
                return Err(ExprError::Sort {
                    column,
                    message: format!("operator `{}` is not available for {} values", op.symbol(), self.domain.name()),
                });
            }
            self.bump();
            let rhs = self.binary(level + 1)?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        let (column, tok) = self.peek().clone();
        if tok == Tok::Not {
            if *self.domain != Domain::Boolean {
                return Err(ExprError::Sort {
                    column,
                    message: format!("negation is not available for {} values", self.domain.name()),
                });
            }
            self.bump();
            return Ok(Expr::Not(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        const OPERAND: [&str; 4] = ["a variable", "a constant", "`(`", "`!`"];
        let (column, tok) = self.peek().clone();
        match tok {
            Tok::LParen => {
                self.bump();
                let e = self.binary(1)?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Number(text) => {
                self.bump();
                self.literal(column, &text)
            }
            Tok::Ident(name) => {
                self.bump();
                let func = match name.as_str() {
                    "min" => Some(Func::Min),
                    "max" => Some(Func::Max),
                    "med" => Some(Func::Med),
                    _ => None,
                };
                if let Some(func) = func {
                    return self.call(column, func);
                }
                if let Some(index) = variable(&name) {
                    return Ok(Expr::Var(index));
                }
                self.literal(column, &name)
            }
            _ => Err(self.unexpected(&OPERAND)),
        }
    }

    fn call(&mut self, column: usize, func: Func) -> Result<Expr, ExprError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut args = vec![self.binary(1)?];
        while self.peek().1 == Tok::Comma {
            self.bump();
            args.push(self.binary(1)?);
        }
        self.expect(Tok::RParen, "`,` or `)`")?;
        let ok = match func {
            Func::Med => args.len() == 3,
            Func::Min | Func::Max => args.len() >= 2,
        };
        if !ok {
            let wanted = if func == Func::Med { "exactly 3" } else { "at least 2" };
            return Err(ExprError::Syntax {
                column,
                expected: vec![format!("{wanted} arguments to `{}`", func.name())],
                found: format!("{} arguments", args.len()),
            });
        }
        Ok(Expr::Call(func, args))
    }

    fn literal(&self, column: usize, text: &str) -> Result<Expr, ExprError> {
        let lit = match self.domain {
            Domain::Boolean => match text {
                "0" => Some(Literal::Bool(false)),
                "1" => Some(Literal::Bool(true)),
                _ => None,
            },
            Domain::Rational(_) => parse_rational(text).map(Literal::Rat),
            Domain::Lattice(sort) => sort.parse_elem(text).map(Literal::Elem),
        };
        lit.map(Expr::Lit).ok_or_else(|| ExprError::Sort {
            column,
            message: format!("`{text}` is not a {} constant", self.domain.name()),
        })
    }
}

/// `x<k>` with `k >= 1`, as a 0-based index.
fn variable(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    digits.parse::<usize>().ok().map(|k| k - 1)
}

pub fn parse(text: &str, domain: &Domain) -> Result<Expr, ExprError> {
    let mut p = Parser {
        tokens: lex(text)?,
        pos: 0,
        domain,
    };
    let e = p.binary(1)?;
    if p.peek().1 != Tok::End {
        return Err(p.unexpected(&["an operator", "end of input"]));
    }
    Ok(e)
}

/// Arity of the table for `expr`: the largest variable index, or `arity`
/// when given (which must cover every variable). Constant expressions get
/// arity 1.
pub fn arity_of(expr: &Expr, arity: Option<usize>) -> Result<usize, ExprError> {
    let needed = expr.max_var();
    match arity {
        Some(n) if n < needed => Err(ExprError::Unbound { index: needed, arity: n }),
        Some(0) => Err(ExprError::Table(pivotal::Error::ZeroArity)),
        Some(n) => Ok(n),
        None => Ok(needed.max(1)),
    }
}

/// Tabulated expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Table {
    Bool(FunctionTable<bool>),
    Rat(FunctionTable<Rational>),
    Lat(FunctionTable<Elem>),
}

impl Table {
    pub fn arity(&self) -> usize {
        match self {
            Table::Bool(f) => f.arity(),
            Table::Rat(f) => f.arity(),
            Table::Lat(f) => f.arity(),
        }
    }

    pub fn sort(&self) -> &Sort {
        match self {
            Table::Bool(f) => f.sort(),
            Table::Rat(f) => f.sort(),
            Table::Lat(f) => f.sort(),
        }
    }
}

fn eval_bool(e: &Expr, x: &[Elem]) -> bool {
    match e {
        Expr::Var(i) => x[*i] == 1,
        Expr::Lit(Literal::Bool(b)) => *b,
        Expr::Lit(_) => unreachable!("checked at parse time"),
        Expr::Not(a) => !eval_bool(a, x),
        Expr::Binary(op, a, b) => {
            let (a, b) = (eval_bool(a, x), eval_bool(b, x));
            match op {
                BinOp::And => a && b,
                BinOp::Xor => a != b,
                BinOp::Or => a || b,
                _ => unreachable!("checked at parse time"),
            }
        }
        Expr::Call(func, args) => {
            let v: Vec<bool> = args.iter().map(|a| eval_bool(a, x)).collect();
            match func {
                Func::Min => v.iter().all(|&b| b),
                Func::Max => v.iter().any(|&b| b),
                Func::Med => TotalOrder.median(&v[0], &v[1], &v[2]),
            }
        }
    }
}

fn eval_rat(e: &Expr, x: &[Rational]) -> Rational {
    match e {
        Expr::Var(i) => x[*i].clone(),
        Expr::Lit(Literal::Rat(q)) => q.clone(),
        Expr::Lit(_) | Expr::Not(_) => unreachable!("checked at parse time"),
        Expr::Binary(op, a, b) => {
            let (a, b) = (eval_rat(a, x), eval_rat(b, x));
            match op {
                BinOp::And => a.min(b),
                BinOp::Or => a.max(b),
                BinOp::Mul => a * b,
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Xor => unreachable!("checked at parse time"),
            }
        }
        Expr::Call(func, args) => {
            let v: Vec<Rational> = args.iter().map(|a| eval_rat(a, x)).collect();
            match func {
                Func::Min => v.into_iter().min().expect("two or more arguments"),
                Func::Max => v.into_iter().max().expect("two or more arguments"),
                Func::Med => TotalOrder.median(&v[0], &v[1], &v[2]),
            }
        }
    }
}

fn eval_lat(e: &Expr, x: &[Elem], l: &FiniteLattice) -> Elem {
    match e {
        Expr::Var(i) => x[*i],
        Expr::Lit(Literal::Elem(a)) => *a,
        Expr::Lit(_) | Expr::Not(_) => unreachable!("checked at parse time"),
        Expr::Binary(op, a, b) => {
            let (a, b) = (eval_lat(a, x, l), eval_lat(b, x, l));
            match op {
                BinOp::And => l.meet_of(a, b),
                BinOp::Or => l.join_of(a, b),
                _ => unreachable!("checked at parse time"),
            }
        }
        Expr::Call(func, args) => {
            let v: Vec<Elem> = args.iter().map(|a| eval_lat(a, x, l)).collect();
            match func {
                Func::Min => v.into_iter().reduce(|a, b| l.meet_of(a, b)).expect("arguments"),
                Func::Max => v.into_iter().reduce(|a, b| l.join_of(a, b)).expect("arguments"),
                Func::Med => Order::median(l, &v[0], &v[1], &v[2]),
            }
        }
    }
}

/// Exhaustive evaluation of `expr` on `X^arity`.
pub fn tabulate(expr: &Expr, arity: usize, domain: &Domain) -> Result<Table, ExprError> {
    if expr.max_var() > arity {
        return Err(ExprError::Unbound {
            index: expr.max_var(),
            arity,
        });
    }
    Ok(match domain {
        Domain::Boolean => Table::Bool(FunctionTable::boolean(arity, |x| eval_bool(expr, x))?),
        Domain::Rational(sort) => {
            let coords: Vec<Rational> = (0..sort.size())
                .map(|e| sort.coordinate(e).ok_or_else(|| pivotal::Error::SortMismatch("rational values need a Boolean or grid sort".into())))
                .collect::<Result<_, _>>()?;
            Table::Rat(FunctionTable::from_fn(sort.clone(), arity, |x| {
                let q: Vec<Rational> = x.iter().map(|&e| coords[e].clone()).collect();
                eval_rat(expr, &q)
            })?)
        }
        Domain::Lattice(sort) => {
            let l = sort
                .as_lattice()
                .ok_or_else(|| pivotal::Error::SortMismatch("lattice values need a lattice sort".into()))?;
            Table::Lat(FunctionTable::from_fn(sort.clone(), arity, |x| eval_lat(expr, x, &l))?)
        }
    })
}

/// Parses and tabulates in one step.
pub fn parse_expression(text: &str, domain: &Domain, arity: Option<usize>) -> Result<(Expr, Table), ExprError> {
    let expr = parse(text, domain)?;
    let n = arity_of(&expr, arity)?;
    let table = tabulate(&expr, n, domain)?;
    Ok((expr, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use pivotal::scalar::ratio;

    fn bool_table(text: &str) -> FunctionTable<bool> {
        match parse_expression(text, &Domain::Boolean, None).unwrap().1 {
            Table::Bool(f) => f,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn and_table() {
        assert_eq!(bool_table("x1 & x2").to_bits(), Some(0b1000));
        assert_eq!(bool_table("x1 ∧ x2"), bool_table("x1 & x2"));
    }

    #[test]
    fn median_with_constants_is_projection() {
        assert_eq!(bool_table("med(x1, 1, 0)"), bool_table("x1"));
    }

    #[test]
    fn precedence() {
        assert_eq!(bool_table("!x1 & x2 | x3"), bool_table("((!x1) & x2) | x3"));
        assert_eq!(bool_table("x1 ^ x2 & x3"), bool_table("x1 ^ (x2 & x3)"));
        assert_eq!(bool_table("x1 | x2 ^ x3"), bool_table("x1 | (x2 ^ x3)"));
        let grid = Domain::Rational(Sort::unit_grid(2));
        let (a, _) = parse_expression("x1 + x2 | x1 * x2", &grid, None).unwrap();
        let (b, _) = parse_expression("x1 + (x2 | (x1 * x2))", &grid, None).unwrap();
        assert_eq!(a, b);
        let (c, _) = parse_expression("x1 - x2 - x1", &grid, None).unwrap();
        let (d, _) = parse_expression("(x1 - x2) - x1", &grid, None).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn lovasz_table_on_grid() {
        let grid = Domain::Rational(Sort::unit_grid(4));
        let (_, t) = parse_expression("min(x1,x2) + min(x2,x3)", &grid, None).unwrap();
        let Table::Rat(f) = t else { panic!() };
        let e = |q: Rational| f.sort().elem_at(&q).unwrap();
        let half = [e(ratio(1, 2)); 3];
        assert_eq!(f.evaluate(&half).unwrap(), &ratio(1, 1));
        let b = [e(ratio(1, 4)), e(ratio(1, 2)), e(ratio(3, 4))];
        assert_eq!(f.evaluate(&b).unwrap(), &ratio(3, 4));
    }

    #[test]
    fn errors_carry_columns() {
        match parse("x1 & ", &Domain::Boolean) {
            Err(ExprError::Syntax { column, expected, found }) => {
                assert_eq!(column, 6);
                assert!(expected.contains(&"a variable".to_string()));
                assert_eq!(found, "end of input");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("x1 + x2", &Domain::Boolean), Err(ExprError::Sort { column: 4, .. })));
        assert!(matches!(parse("!x1", &Domain::Rational(Sort::Boolean)), Err(ExprError::Sort { column: 1, .. })));
        assert!(matches!(parse("x1 & 2", &Domain::Boolean), Err(ExprError::Sort { column: 6, .. })));
        assert!(matches!(parse("med(x1, x2)", &Domain::Boolean), Err(ExprError::Syntax { column: 1, .. })));
        assert!(matches!(parse("x1 x2", &Domain::Boolean), Err(ExprError::Syntax { column: 4, .. })));
        assert!(matches!(parse("x0", &Domain::Boolean), Err(ExprError::Sort { .. })));
        assert!(matches!(
            parse_expression("x3", &Domain::Boolean, Some(2)),
            Err(ExprError::Unbound { index: 3, arity: 2 })
        ));
    }

    #[test]
    fn lattice_names() {
        let l = FiniteLattice::product(&FiniteLattice::chain(2), &FiniteLattice::chain(2));
        let sort = Sort::lattice(l.clone());
        let name = l.name(1).to_string();
        let domain = Domain::Lattice(sort.clone());
        let (e, t) = parse_expression(&format!("x1 | {name}"), &domain, None).unwrap();
        assert_eq!(e.display(&sort).to_string(), format!("x1 | {name}"));
        let Table::Lat(f) = t else { panic!() };
        assert_eq!(f.evaluate(&[l.bottom()]).unwrap(), &1);
    }

    #[test]
    fn printing_round_trips() {
        for text in ["!(x1 & x2) | x3", "x1 ^ x2 ^ x3", "x1 ^ (x2 ^ x3)", "!!x1", "med(x1, !x2, x3 | 0)"] {
            let e = parse(text, &Domain::Boolean).unwrap();
            let printed = e.display(&Sort::Boolean).to_string();
            assert_eq!(parse(&printed, &Domain::Boolean).unwrap(), e, "{printed}");
        }
    }
}
