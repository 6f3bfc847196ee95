//! Lexer and recursive-descent parser for the set expression language.
//!
//! ```text
//! expr    := setlit | "ord" "(" nat ")" | "pair" "(" expr "," expr ")"
//!          | "pow" "(" expr ")" | "union" "(" expr ")"
//!          | "im" "(" lambda "," expr ")" | "order" "(" expr ";" [tuple {"," tuple}] ")"
//!          | "#" word "." nat | ident
//! setlit  := "{" [expr {"," expr}] "}"
//! lambda  := "fun" ident "->" expr
//! tuple   := "(" expr "," expr ")"
//! ```
//!
//! Commands add `let x = e` and the verbs `card`, `ordinal?`, `woord`,
//! `zorn`, `bcs` and `chain`. A `#` that does not start a tag literal starts
//! a comment running to the end of the line.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    SetLit(Vec<Expr>),
    Ord(usize),
    Pair(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>),
    Union(Box<Expr>),
    Im(Lambda, Box<Expr>),
    Tag(String, usize),
    Order(Box<Expr>, Vec<(Expr, Expr)>),
    Ident(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lambda {
    pub param: String,
    pub body: Box<Expr>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepName {
    Id,
    Succ,
    Const(Expr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Blank or comment-only line.
    Nothing,
    Let(String, Expr),
    Eval(Expr),
    Card(Expr),
    IsOrdinal(Expr),
    WoOrd(Expr),
    Zorn(Expr),
    Bcs(Expr, Expr, Expr, Expr),
    Chain(StepName, Option<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at line {}, column {}: expected {}, found {}",
            self.line,
            self.column,
            self.expected.join(" or "),
            self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Semi,
    Arrow,
    Equals,
    Nat(usize),
    Ident(String),
    Tag(String, usize),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::LBrace => f.write_str("'{'"),
            Tok::RBrace => f.write_str("'}'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Comma => f.write_str("','"),
            Tok::Semi => f.write_str("';'"),
            Tok::Arrow => f.write_str("'->'"),
            Tok::Equals => f.write_str("'='"),
            Tok::Nat(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "identifier '{s}'"),
            Tok::Tag(w, n) => write!(f, "tag #{w}.{n}"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    let err = |line, column, expected: &str, found: String| SyntaxError {
        line,
        column,
        expected: vec![expected.to_owned()],
        found,
    };
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        let run = |from: usize, pred: fn(&char) -> bool| chars[from..].iter().take_while(|c| pred(c)).count();
        let (tok, len) = match c {
            '{' => (Some(Tok::LBrace), 1),
            '}' => (Some(Tok::RBrace), 1),
            '(' => (Some(Tok::LParen), 1),
            ')' => (Some(Tok::RParen), 1),
            ',' => (Some(Tok::Comma), 1),
            ';' => (Some(Tok::Semi), 1),
            '=' => (Some(Tok::Equals), 1),
            '-' if chars.get(i + 1) == Some(&'>') => (Some(Tok::Arrow), 2),
            c if c.is_whitespace() => (None, 1),
            '#' => {
                let word_len = run(i + 1, char::is_ascii_lowercase);
                let dot = i + 1 + word_len;
                let digits = if chars.get(dot) == Some(&'.') {
                    run(dot + 1, char::is_ascii_digit)
                } else {
                    0
                };
                if word_len > 0 && digits > 0 {
                    let word: String = chars[i + 1..dot].iter().collect();
                    let num: String = chars[dot + 1..dot + 1 + digits].iter().collect();
                    let arity = num.parse().map_err(|_| err(line, column, "arity", num.clone()))?;
                    (Some(Tok::Tag(word, arity)), dot + 1 + digits - i)
                } else {
                    (None, run(i, |c| *c != '\n'))
                }
            }
            c if c.is_ascii_digit() => {
                let len = run(i, char::is_ascii_digit);
                let num: String = chars[i..i + len].iter().collect();
                let n = num
                    .parse()
                    .map_err(|_| err(line, column, "natural number", num.clone()))?;
                (Some(Tok::Nat(n)), len)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut len = run(i, |c| c.is_ascii_alphanumeric() || *c == '_');
                if chars.get(i + len) == Some(&'?') {
                    len += 1;
                }
                (Some(Tok::Ident(chars[i..i + len].iter().collect())), len)
            }
            other => return Err(err(line, column, "a token", format!("'{other}'"))),
        };
        if let Some(tok) = tok {
            out.push(Spanned { tok, line, column });
        }
        i += len;
        column += len;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

const KEYWORDS: &[&str] = &["ord", "pair", "pow", "union", "im", "fun", "order", "let"];

const EXPR_START: &[&str] = &[
    "'{'",
    "ord",
    "pair",
    "pow",
    "union",
    "im",
    "order",
    "tag",
    "identifier",
];

const NESTING_LIMIT: &[&str] = &["at most 512 levels of nesting"];

/// Deeper nesting is rejected before the recursive parser can exhaust the
/// stack.
pub const MAX_NESTING: usize = 512;

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, SyntaxError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            depth: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error(&self, expected: &[&str]) -> SyntaxError {
        let t = &self.toks[self.pos];
        SyntaxError {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| (*s).to_owned()).collect(),
            found: t.tok.to_string(),
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&tok.to_string()]))
        }
    }

    fn nat(&mut self) -> Result<usize, SyntaxError> {
        match self.peek() {
            Tok::Nat(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            _ => Err(self.error(&["natural number"])),
        }
    }

    fn ident(&mut self) -> Result<String, SyntaxError> {
        match self.peek() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) && !s.ends_with('?') => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), SyntaxError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => Err(self.error(&[kw])),
        }
    }

    fn unary(&mut self) -> Result<Box<Expr>, SyntaxError> {
        self.expect(Tok::LParen)?;
        let e = self.expr()?;
        self.expect(Tok::RParen)?;
        Ok(Box::new(e))
    }

    fn tuple(&mut self) -> Result<(Expr, Expr), SyntaxError> {
        self.expect(Tok::LParen)?;
        let a = self.expr()?;
        self.expect(Tok::Comma)?;
        let b = self.expr()?;
        self.expect(Tok::RParen)?;
        Ok((a, b))
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        if self.depth == MAX_NESTING {
            return Err(self.error(NESTING_LIMIT));
        }
        self.depth += 1;
        let e = self.nested_expr();
        self.depth -= 1;
        e
    }

    // Kept apart from the literal and keyword parsers: unoptimised builds give
    // each function one frame big enough for all of its arms.
    fn nested_expr(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek() {
            Tok::LBrace => self.set_literal(),
            Tok::Tag(..) | Tok::Ident(_) => self.named(),
            _ => Err(self.error(EXPR_START)),
        }
    }

    fn set_literal(&mut self) -> Result<Expr, SyntaxError> {
        self.bump();
        let mut elems = Vec::new();
        if *self.peek() == Tok::RBrace {
            self.bump();
            return Ok(Expr::SetLit(elems));
        }
        loop {
            elems.push(self.expr()?);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBrace => {
                    self.bump();
                    return Ok(Expr::SetLit(elems));
                }
                _ => return Err(self.error(&["','", "'}'"])),
            }
        }
    }

    fn named(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek().clone() {
            Tok::Tag(w, n) => {
                self.bump();
                Ok(Expr::Tag(w, n))
            }
            Tok::Ident(name) => match name.as_str() {
                "ord" => {
                    self.bump();
                    self.expect(Tok::LParen)?;
                    let n = self.nat()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Ord(n))
                }
                "pair" => {
                    self.bump();
                    let (a, b) = self.tuple()?;
                    Ok(Expr::Pair(Box::new(a), Box::new(b)))
                }
                "pow" => {
                    self.bump();
                    Ok(Expr::Pow(self.unary()?))
                }
                "union" => {
                    self.bump();
                    Ok(Expr::Union(self.unary()?))
                }
                "im" => {
                    self.bump();
                    self.expect(Tok::LParen)?;
                    self.keyword("fun")?;
                    let param = self.ident()?;
                    self.expect(Tok::Arrow)?;
                    let body = Box::new(self.expr()?);
                    self.expect(Tok::Comma)?;
                    let over = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Im(Lambda { param, body }, Box::new(over)))
                }
                "order" => {
                    self.bump();
                    self.expect(Tok::LParen)?;
                    let carrier = self.expr()?;
                    self.expect(Tok::Semi)?;
                    let mut pairs = Vec::new();
                    if *self.peek() != Tok::RParen {
                        loop {
                            pairs.push(self.tuple()?);
                            if *self.peek() == Tok::Comma {
                                self.bump();
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Order(Box::new(carrier), pairs))
                }
                _ => Ok(Expr::Ident(self.ident()?)),
            },
            _ => Err(self.error(EXPR_START)),
        }
    }

    fn end(&mut self) -> Result<(), SyntaxError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }

    fn command(&mut self) -> Result<Command, SyntaxError> {
        let verb = match self.peek() {
            Tok::Eof => return Ok(Command::Nothing),
            Tok::Ident(s) => s.clone(),
            _ => return Ok(Command::Eval(self.expr()?)),
        };
        let cmd = match verb.as_str() {
            "let" => {
                self.bump();
                let name = self.ident()?;
                self.expect(Tok::Equals)?;
                Command::Let(name, self.expr()?)
            }
            "card" => {
                self.bump();
                Command::Card(self.expr()?)
            }
            "ordinal?" => {
                self.bump();
                Command::IsOrdinal(self.expr()?)
            }
            "woord" => {
                self.bump();
                Command::WoOrd(self.expr()?)
            }
            "zorn" => {
                self.bump();
                Command::Zorn(self.expr()?)
            }
            "bcs" => {
                self.bump();
                let x = self.expr()?;
                let y = self.expr()?;
                let f = self.expr()?;
                let g = self.expr()?;
                Command::Bcs(x, y, f, g)
            }
            "chain" => {
                self.bump();
                let step = match self.peek().clone() {
                    Tok::Ident(s) if s == "id" => {
                        self.bump();
                        StepName::Id
                    }
                    Tok::Ident(s) if s == "succ" => {
                        self.bump();
                        StepName::Succ
                    }
                    Tok::Ident(s) if s == "const" => {
                        self.bump();
                        StepName::Const(*self.unary()?)
                    }
                    _ => return Err(self.error(&["id", "succ", "const"])),
                };
                let fuel = match self.peek() {
                    Tok::Nat(_) => Some(self.nat()?),
                    _ => None,
                };
                Command::Chain(step, fuel)
            }
            _ => Command::Eval(self.expr()?),
        };
        Ok(cmd)
    }
}

/// Parses a single expression.
pub fn parse(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.end()?;
    Ok(e)
}

/// Parses one line of a session: an expression, `let`, or a verb.
pub fn parse_command(text: &str) -> Result<Command, SyntaxError> {
    let mut p = Parser::new(text)?;
    let c = p.command()?;
    p.end()?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_literals() {
        assert_eq!(parse("{}").unwrap(), Expr::SetLit(vec![]));
        assert_eq!(
            parse("{{},{{}}}").unwrap(),
            Expr::SetLit(vec![
                Expr::SetLit(vec![]),
                Expr::SetLit(vec![Expr::SetLit(vec![])])
            ])
        );
        assert_eq!(parse("  { }  ").unwrap(), Expr::SetLit(vec![]));
    }

    #[test]
    fn nesting_is_bounded() {
        let deep = |n: usize| format!("{}{}", "{".repeat(n), "}".repeat(n));
        assert!(parse(&deep(MAX_NESTING)).is_ok());
        let e = parse(&deep(200_000)).unwrap_err();
        assert_eq!(e.column, MAX_NESTING + 1);
    }

    #[test]
    fn error_positions() {
        let e = parse("{,}").unwrap_err();
        assert_eq!((e.line, e.column), (1, 2));
        assert_eq!(e.found, "','");
        assert!(e.expected.contains(&"'{'".to_owned()));
        let e = parse("{{}").unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
        assert_eq!(e.expected, vec!["','", "'}'"]);
        let e = parse("ord(x)").unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse("{}\n {} ").unwrap_err();
        assert_eq!((e.line, e.column), (2, 2));
        assert!(parse("{} $").is_err());
    }

    #[test]
    fn constructors() {
        assert_eq!(parse("ord(3)").unwrap(), Expr::Ord(3));
        assert_eq!(
            parse("pair({}, x)").unwrap(),
            Expr::Pair(Box::new(Expr::SetLit(vec![])), Box::new(Expr::Ident("x".into())))
        );
        assert!(matches!(parse("pow(ord(1))").unwrap(), Expr::Pow(_)));
        assert!(matches!(parse("union(ord(3))").unwrap(), Expr::Union(_)));
        let im = parse("im(fun e -> {e}, ord(2))").unwrap();
        match im {
            Expr::Im(l, over) => {
                assert_eq!(l.param, "e");
                assert_eq!(*l.body, Expr::SetLit(vec![Expr::Ident("e".into())]));
                assert_eq!(*over, Expr::Ord(2));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(parse("#undrl.0").unwrap(), Expr::Tag("undrl".into(), 0));
        assert_eq!(parse("#plus.2").unwrap(), Expr::Tag("plus".into(), 2));
        let o = parse("order(ord(2); (ord(0),ord(0)), (ord(0),ord(1)))").unwrap();
        assert!(matches!(o, Expr::Order(_, ref ps) if ps.len() == 2));
        assert!(matches!(parse("order({};)").unwrap(), Expr::Order(_, ref ps) if ps.is_empty()));
    }

    #[test]
    fn keywords_are_not_identifiers() {
        assert!(parse("im(fun ord -> ord, {})").is_err());
        assert!(parse("let").is_err());
    }

    #[test]
    fn comments() {
        assert_eq!(parse_command("# a comment").unwrap(), Command::Nothing);
        assert_eq!(parse_command("").unwrap(), Command::Nothing);
        assert_eq!(
            parse_command("{} # trailing").unwrap(),
            Command::Eval(Expr::SetLit(vec![]))
        );
        assert_eq!(parse_command("#comment").unwrap(), Command::Nothing);
    }

    #[test]
    fn commands() {
        assert_eq!(
            parse_command("let x = ord(2)").unwrap(),
            Command::Let("x".into(), Expr::Ord(2))
        );
        assert_eq!(parse_command("card ord(3)").unwrap(), Command::Card(Expr::Ord(3)));
        assert_eq!(
            parse_command("ordinal? {}").unwrap(),
            Command::IsOrdinal(Expr::SetLit(vec![]))
        );
        assert!(matches!(parse_command("bcs a b f g").unwrap(), Command::Bcs(..)));
        assert_eq!(
            parse_command("chain id 4").unwrap(),
            Command::Chain(StepName::Id, Some(4))
        );
        assert_eq!(
            parse_command("chain succ").unwrap(),
            Command::Chain(StepName::Succ, None)
        );
        assert_eq!(
            parse_command("chain const(ord(1)) 3").unwrap(),
            Command::Chain(StepName::Const(Expr::Ord(1)), Some(3))
        );
        assert!(parse_command("chain foo 3").is_err());
        assert!(parse_command("card").is_err());
    }
}
