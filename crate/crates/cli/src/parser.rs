//! Parser for the formula DSL and for definition source files.
//!
//! Formula grammar (variables are identifiers, bound to dense indices in
//! order of first appearance):
//!
//! ```text
//! formula := quantified | iff
//! quantified := ("exists" | "forall") IDENT "." formula
//! iff     := implies ("<->" implies)*
//! implies := or ("->" or)*            (right associative)
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | "(" formula ")" | atom
//! atom    := term (("sub" | "in") term | "=s" term)
//! term    := factor (("+" | "-") factor)*
//! factor  := prim ("*" prim)*
//! prim    := "-" prim | "0" | "1" | IDENT | "(" term ")"
//! ```
//!
//! `t1 in t2` is a synonym for `t1 sub t2` (the usual way to write
//! membership `0 in t`); `t1 =s t2` expands to the two containments.
//!
//! A definition source file mixes structure blocks (see
//! [`multalg_core::textfmt`]) with polynomial and formula bindings:
//!
//! ```text
//! poly p over K = 1 + X
//! formula valid = exists y. 0 in (y - x)
//! ```

use multalg_core::poly::MultiPoly;
use multalg_core::textfmt;
use multalg_core::{Formula, Term};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error(transparent)]
    Structure(#[from] textfmt::TextError),
    #[error("line {0}: {1}")]
    Binding(usize, String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown structure `{0}` referenced by binding `{1}`")]
    UnknownStructure(String, String),
}

#[derive(Clone, Debug, PartialEq)]
struct Token {
    kind: Tok,
    line: usize,
    col: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    LPar,
    RPar,
    Bang,
    Amp,
    Pipe,
    Arrow,
    DArrow,
    Dot,
    Plus,
    Minus,
    Star,
    Sub,
    In,
    StrongEq,
    Exists,
    Forall,
    End,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, co) = (line, col);
        let bump = |chars: &mut std::iter::Peekable<std::str::Chars>, col: &mut usize| {
            chars.next();
            *col += 1;
        };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => bump(&mut chars, &mut col),
            '(' => {
                bump(&mut chars, &mut col);
                out.push(Token { kind: Tok::LPar, line: l, col: co });
            }
            ')' => {
                bump(&mut chars, &mut col);
                out.push(Token { kind: Tok::RPar, line: l, col: co });
            }
            '!' => {
                bump(&mut chars, &mut col);
                out.push(Token { kind: Tok::Bang, line: l, col: co });
            }
            '&' => {
                bump(&mut chars, &mut col);
                out.push(Token { kind: Tok::Amp, line: l, col: co });
            }
            '|' => {
                bump(&mut chars, &mut col);
                out.push(Token { kind: Tok::Pipe, line: l, col: co });
            }
            '.' => {
                bump(&mut chars, &mut col);
                out.push(Token { kind: Tok::Dot, line: l, col: co });
            }
            '+' => {
                bump(&mut chars, &mut col);
                out.push(Token { kind: Tok::Plus, line: l, col: co });
            }
            '*' => {
                bump(&mut chars, &mut col);
                out.push(Token { kind: Tok::Star, line: l, col: co });
            }
            '-' => {
                bump(&mut chars, &mut col);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars, &mut col);
                    out.push(Token { kind: Tok::Arrow, line: l, col: co });
                } else {
                    out.push(Token { kind: Tok::Minus, line: l, col: co });
                }
            }
            '<' => {
                bump(&mut chars, &mut col);
                if chars.peek() == Some(&'-') {
                    bump(&mut chars, &mut col);
                    if chars.peek() == Some(&'>') {
                        bump(&mut chars, &mut col);
                        out.push(Token { kind: Tok::DArrow, line: l, col: co });
                    } else {
                        return Err(ParseError::Syntax {
                            line: l,
                            col: co,
                            msg: "expected `<->`".into(),
                        });
                    }
                } else {
                    return Err(ParseError::Syntax {
                        line: l,
                        col: co,
                        msg: "expected `<->`".into(),
                    });
                }
            }
            '=' => {
                bump(&mut chars, &mut col);
                if chars.peek() == Some(&'s') {
                    bump(&mut chars, &mut col);
                    out.push(Token { kind: Tok::StrongEq, line: l, col: co });
                } else {
                    return Err(ParseError::Syntax {
                        line: l,
                        col: co,
                        msg: "expected `=s`".into(),
                    });
                }
            }
            '0' => {
                bump(&mut chars, &mut col);
                out.push(Token { kind: Tok::Zero, line: l, col: co });
            }
            '1' => {
                bump(&mut chars, &mut col);
                out.push(Token { kind: Tok::One, line: l, col: co });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        word.push(d);
                        bump(&mut chars, &mut col);
                    } else {
                        break;
                    }
                }
                let kind = match word.as_str() {
                    "sub" => Tok::Sub,
                    "in" => Tok::In,
                    "exists" => Tok::Exists,
                    "forall" => Tok::Forall,
                    _ => Tok::Ident(word),
                };
                out.push(Token { kind, line: l, col: co });
            }
            other => {
                return Err(ParseError::Syntax {
                    line: l,
                    col: co,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    out.push(Token { kind: Tok::End, line, col });
    Ok(out)
}

/// A parsed formula together with the variable-name table (index order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedFormula {
    pub formula: Formula,
    pub var_names: Vec<String>,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let t = self.peek();
        Err(ParseError::Syntax { line: t.line, col: t.col, msg: msg.into() })
    }

    fn expect(&mut self, kind: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek().kind == kind {
            self.next();
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn var_index(&mut self, name: &str) -> u32 {
        match self.vars.iter().position(|v| v == name) {
            Some(i) => i as u32,
            None => {
                self.vars.push(name.to_string());
                (self.vars.len() - 1) as u32
            }
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        match self.peek().kind.clone() {
            Tok::Exists | Tok::Forall => self.quantified(),
            _ => self.iff(),
        }
    }

    fn quantified(&mut self) -> Result<Formula, ParseError> {
        let is_exists = matches!(self.peek().kind, Tok::Exists);
        self.next();
        let name = match self.peek().kind.clone() {
            Tok::Ident(name) => {
                self.next();
                name
            }
            _ => return self.err("expected a variable name after the quantifier"),
        };
        self.expect(Tok::Dot, "`.` after the quantified variable")?;
        let idx = self.var_index(&name);
        let body = self.formula()?;
        Ok(if is_exists { Formula::exists(idx, body) } else { Formula::forall(idx, body) })
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.implies()?;
        while self.peek().kind == Tok::DArrow {
            self.next();
            let rhs = self.implies()?;
            acc = Formula::iff(acc, rhs);
        }
        Ok(acc)
    }

    fn implies(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.peek().kind == Tok::Arrow {
            self.next();
            let rhs = self.implies()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and()?;
        while self.peek().kind == Tok::Pipe {
            self.next();
            let rhs = self.and()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while self.peek().kind == Tok::Amp {
            self.next();
            let rhs = self.unary()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().kind.clone() {
            Tok::Bang => {
                self.next();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Exists | Tok::Forall => self.quantified(),
            Tok::LPar => {
                // parenthesized formula or an atom starting with a
                // parenthesized term: decide by scanning for the balance
                // point and looking at what follows
                if self.paren_wraps_formula() {
                    self.next();
                    let f = self.formula()?;
                    self.expect(Tok::RPar, "`)`")?;
                    Ok(f)
                } else {
                    self.atom()
                }
            }
            _ => self.atom(),
        }
    }

    /// At an `(`: does the matching `)` end a formula (next token is a
    /// connective or end) rather than continue a term?
    fn paren_wraps_formula(&self) -> bool {
        let mut depth = 0usize;
        let mut i = self.pos;
        loop {
            match &self.tokens[i].kind {
                Tok::LPar => depth += 1,
                Tok::RPar => {
                    depth -= 1;
                    if depth == 0 {
                        return !matches!(
                            self.tokens[i + 1].kind,
                            Tok::Plus
                                | Tok::Minus
                                | Tok::Star
                                | Tok::Sub
                                | Tok::In
                                | Tok::StrongEq
                        );
                    }
                }
                Tok::End => return true,
                _ => {}
            }
            i += 1;
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let t1 = self.term()?;
        match self.peek().kind.clone() {
            Tok::Sub | Tok::In => {
                self.next();
                let t2 = self.term()?;
                Ok(Formula::atom(t1, t2))
            }
            Tok::StrongEq => {
                self.next();
                let t2 = self.term()?;
                Ok(Formula::strong_eq(t1, t2))
            }
            _ => self.err("expected `sub`, `in` or `=s` after the left term"),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().kind {
                Tok::Plus => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = Term::add(acc, rhs);
                }
                Tok::Minus => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = Term::sub(acc, rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.prim()?;
        while self.peek().kind == Tok::Star {
            self.next();
            let rhs = self.prim()?;
            acc = Term::mul(acc, rhs);
        }
        Ok(acc)
    }

    fn prim(&mut self) -> Result<Term, ParseError> {
        match self.peek().kind.clone() {
            Tok::Minus => {
                self.next();
                Ok(Term::neg(self.prim()?))
            }
            Tok::Zero => {
                self.next();
                Ok(Term::zero())
            }
            Tok::One => {
                self.next();
                Ok(Term::one())
            }
            Tok::Ident(name) => {
                self.next();
                Ok(Term::var(self.var_index(&name)))
            }
            Tok::LPar => {
                self.next();
                let t = self.term()?;
                self.expect(Tok::RPar, "`)`")?;
                Ok(t)
            }
            _ => self.err("expected a term"),
        }
    }
}

/// Parses one formula; variable indices follow first appearance.
pub fn parse_formula(text: &str) -> Result<NamedFormula, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, vars: Vec::new() };
    let formula = p.formula()?;
    if p.peek().kind != Tok::End {
        return p.err("trailing input after the formula");
    }
    Ok(NamedFormula { formula, var_names: p.vars })
}

/// A parsed definition file.
#[derive(Debug, Default)]
pub struct SourceFile {
    pub structures: Vec<multalg_core::FiniteMultiring>,
    /// name -> (structure name, polynomial)
    pub polys: BTreeMap<String, (String, MultiPoly)>,
    pub formulas: BTreeMap<String, NamedFormula>,
}

impl SourceFile {
    pub fn structure(&self, name: &str) -> Option<&multalg_core::FiniteMultiring> {
        self.structures.iter().find(|s| s.name() == name)
    }
}

/// Parses a definition file: structure blocks plus `poly`/`formula`
/// bindings. Names must be unique per file and references must resolve.
pub fn parse_source(text: &str) -> Result<SourceFile, ParseError> {
    let mut structure_lines: Vec<String> = Vec::new();
    let mut out = SourceFile::default();
    let mut pending: Vec<(usize, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let stripped = raw.split('#').next().unwrap_or("").trim();
        if stripped.starts_with("poly ") || stripped.starts_with("formula ") {
            pending.push((lineno, stripped.to_string()));
        } else {
            structure_lines.push(raw.to_string());
        }
    }
    out.structures = textfmt::parse_structures(&structure_lines.join("\n"))?;
    {
        let mut names: Vec<&str> = out.structures.iter().map(|s| s.name()).collect();
        names.sort();
        names.dedup();
        if names.len() != out.structures.len() {
            let dup = out
                .structures
                .iter()
                .map(|s| s.name().to_string())
                .find(|n| out.structures.iter().filter(|s| s.name() == n).count() > 1)
                .unwrap_or_default();
            return Err(ParseError::DuplicateName(dup));
        }
    }

    for (lineno, line) in pending {
        if let Some(rest) = line.strip_prefix("poly ") {
            // poly <name> over <structure> = <text>
            let (head, body) = rest
                .split_once('=')
                .ok_or_else(|| ParseError::Binding(lineno, "expected `=`".into()))?;
            let head_tokens: Vec<&str> = head.split_whitespace().collect();
            if head_tokens.len() != 3 || head_tokens[1] != "over" {
                return Err(ParseError::Binding(
                    lineno,
                    "expected `poly <name> over <structure> = <text>`".into(),
                ));
            }
            let name = head_tokens[0].to_string();
            let sname = head_tokens[2].to_string();
            let structure = out
                .structure(&sname)
                .cloned()
                .or_else(|| {
                    multalg_core::builtins::parse_builtin(&sname)
                        .and_then(|b| multalg_core::builtins::make_builtin(b).ok())
                })
                .ok_or_else(|| ParseError::UnknownStructure(sname.clone(), name.clone()))?;
            let poly = textfmt::parse_poly(&structure, body.trim())
                .map_err(|e| ParseError::Binding(lineno, e.to_string()))?;
            if out.polys.insert(name.clone(), (sname, poly)).is_some() {
                return Err(ParseError::DuplicateName(name));
            }
        } else if let Some(rest) = line.strip_prefix("formula ") {
            let (name, body) = rest
                .split_once('=')
                .ok_or_else(|| ParseError::Binding(lineno, "expected `=`".into()))?;
            let name = name.trim().to_string();
            let parsed = parse_formula(body.trim())?;
            if out.formulas.insert(name.clone(), parsed).is_some() {
                return Err(ParseError::DuplicateName(name));
            }
        }
    }
    Ok(out)
}

/// Canonical printing of a formula with variable names.
pub fn print_formula(phi: &Formula, names: &[String]) -> String {
    use multalg_core::formula::FormulaNode;
    fn term(t: &Term, names: &[String]) -> String {
        use multalg_core::term::TermNode;
        match t.node() {
            TermNode::Var(i) => names
                .get(*i as usize)
                .cloned()
                .unwrap_or_else(|| format!("x{i}")),
            TermNode::Zero => "0".into(),
            TermNode::One => "1".into(),
            TermNode::Lit(e) => format!("#{e}"),
            TermNode::Neg(u) => format!("-{}", wrap_term(u, names)),
            TermNode::Add(u, v) => format!("{} + {}", wrap_term(u, names), wrap_term(v, names)),
            TermNode::Mul(u, v) => format!("{} * {}", wrap_term(u, names), wrap_term(v, names)),
        }
    }
    fn wrap_term(t: &Term, names: &[String]) -> String {
        use multalg_core::term::TermNode;
        match t.node() {
            TermNode::Add(_, _) | TermNode::Mul(_, _) => format!("({})", term(t, names)),
            _ => term(t, names),
        }
    }
    fn go(phi: &Formula, names: &[String]) -> String {
        match phi.node() {
            FormulaNode::Atom(a, b) => format!("{} sub {}", term(a, names), term(b, names)),
            FormulaNode::Not(f) => format!("!({})", go(f, names)),
            FormulaNode::And(a, b) => format!("({} & {})", go(a, names), go(b, names)),
            FormulaNode::Or(a, b) => format!("({} | {})", go(a, names), go(b, names)),
            FormulaNode::Implies(a, b) => format!("({} -> {})", go(a, names), go(b, names)),
            FormulaNode::Iff(a, b) => format!("({} <-> {})", go(a, names), go(b, names)),
            FormulaNode::Forall(i, f) => {
                let n = names.get(*i as usize).cloned().unwrap_or_else(|| format!("x{i}"));
                format!("forall {n}. ({})", go(f, names))
            }
            FormulaNode::Exists(i, f) => {
                let n = names.get(*i as usize).cloned().unwrap_or_else(|| format!("x{i}"));
                format!("exists {n}. ({})", go(f, names))
            }
        }
    }
    go(phi, names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use multalg_core::formula::FormulaNode;
    use multalg_core::term::TermNode;

    #[test]
    fn parses_the_membership_example() {
        let f = parse_formula("exists y. 0 in (y - x)").unwrap();
        assert_eq!(f.var_names, vec!["y", "x"]);
        match f.formula.node() {
            FormulaNode::Exists(0, body) => match body.node() {
                FormulaNode::Atom(zero, t) => {
                    assert!(matches!(zero.node(), TermNode::Zero));
                    assert!(matches!(t.node(), TermNode::Add(_, _)));
                }
                other => panic!("unexpected body {other:?}"),
            },
            other => panic!("unexpected node {other:?}"),
        }
    }

    #[test]
    fn parses_nested_product_atom() {
        let f = parse_formula("x * (y + z) sub w").unwrap();
        assert_eq!(f.var_names, vec!["x", "y", "z", "w"]);
        match f.formula.node() {
            FormulaNode::Atom(t1, t2) => {
                assert!(matches!(t1.node(), TermNode::Mul(_, _)));
                assert!(matches!(t2.node(), TermNode::Var(3)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn strong_equality_desugars() {
        let f = parse_formula("x =s 1").unwrap();
        assert!(matches!(f.formula.node(), FormulaNode::And(_, _)));
    }

    #[test]
    fn connective_precedence() {
        let f = parse_formula("0 in x & 0 in y | 0 in z").unwrap();
        // & binds tighter than |
        assert!(matches!(f.formula.node(), FormulaNode::Or(_, _)));
        let g = parse_formula("0 in x -> 0 in y <-> 0 in z").unwrap();
        assert!(matches!(g.formula.node(), FormulaNode::Iff(_, _)));
    }

    #[test]
    fn parenthesized_formulas_and_terms_disambiguate() {
        let f = parse_formula("(0 in x) & (0 in y)").unwrap();
        assert!(matches!(f.formula.node(), FormulaNode::And(_, _)));
        let g = parse_formula("(x + y) * z sub w").unwrap();
        assert!(matches!(g.formula.node(), FormulaNode::Atom(_, _)));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_formula("exists . 0 in x").unwrap_err() {
            ParseError::Syntax { line: 1, col, .. } => assert_eq!(col, 8),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_formula("0 in x &").is_err());
        assert!(parse_formula("x + y").is_err()); // a term is not a formula
    }

    #[test]
    fn quantifier_scopes_to_the_right() {
        let f = parse_formula("forall x. 0 in x & 0 in y").unwrap();
        match f.formula.node() {
            FormulaNode::Forall(_, body) => {
                assert!(matches!(body.node(), FormulaNode::And(_, _)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip_through_printer() {
        let cases = [
            "exists y. (0 sub (y + -x))",
            "((0 sub x & 0 sub y) | !(1 sub z))",
            "forall a. ((a sub b -> 0 sub (a * b)))",
        ];
        for text in cases {
            let f1 = parse_formula(text).unwrap();
            let printed = print_formula(&f1.formula, &f1.var_names);
            let f2 = parse_formula(&printed).unwrap();
            assert_eq!(f1.formula, f2.formula, "`{text}` -> `{printed}`");
        }
    }

    #[test]
    fn source_file_with_bindings() {
        let text = "\
structure K carrier 2
names 0 1
zero 0
one 1
add 0 0 = {0}
add 0 1 = {1}
add 1 0 = {1}
add 1 1 = {0,1}
mul strict
mul 0 0 = 0
mul 0 1 = 0
mul 1 0 = 0
mul 1 1 = 1

poly p over K = 1 + X
formula valid = exists y. 0 in (y - x)
";
        let src = parse_source(text).unwrap();
        assert!(src.structure("K").is_some());
        assert_eq!(src.polys["p"].1.coeffs(), &[1, 1]);
        assert!(src.formulas.contains_key("valid"));
    }

    #[test]
    fn duplicate_binding_names_are_rejected() {
        let text = "poly p over K = 1\npoly p over K = X\n";
        assert_eq!(parse_source(text).unwrap_err(), ParseError::DuplicateName("p".into()));
    }
}
