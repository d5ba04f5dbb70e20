//! The structure-definition text format and the polynomial text syntax.
//!
//! A structure file is line-oriented:
//!
//! ```text
//! structure Q2 carrier 3
//! names 0 1 -1
//! zero 0
//! one 1
//! neg 1 = -1
//! add 1 -1 = {-1,0,1}
//! mul strict
//! mul 1 -1 = -1
//! ```
//!
//! Elements are referred to by display name everywhere. Unlisted `neg`
//! lines default to the identity; every `add`/`mul` cell must be listed.
//! `mul strict` (default) or `mul multi` selects the multiplication
//! kind; strict cells are written bare, multivalued cells in braces.
//! Addition cells always use braces. The canonical printer emits blocks
//! in a fixed order with ascending indices and ascending cell elements,
//! so `parse ∘ print` is the identity on canonical files.

use crate::structure::{FiniteMultiring, OpTable};
use crate::subset::{Elem, Subset};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TextError {
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("structure is incomplete: {0}")]
    Incomplete(String),
    #[error("line {0}: unknown element name `{1}`")]
    UnknownElement(usize, String),
    #[error("invalid structure: {0}")]
    Invalid(String),
}

/// Canonical serialization of a structure.
pub fn structure_to_text(s: &FiniteMultiring) -> String {
    let mut out = String::new();
    let name = |e: Elem| s.display_name(e).to_string();
    out.push_str(&format!("structure {} carrier {}\n", s.name(), s.carrier_size()));
    out.push_str(&format!("names {}\n", s.display_names().join(" ")));
    out.push_str(&format!("zero {}\n", name(s.zero())));
    out.push_str(&format!("one {}\n", name(s.one())));
    for a in s.elements() {
        out.push_str(&format!("neg {} = {}\n", name(a), name(s.neg(a))));
    }
    for a in s.elements() {
        for b in s.elements() {
            let cell: Vec<String> = s.add(a, b).iter().map(name).collect();
            out.push_str(&format!("add {} {} = {{{}}}\n", name(a), name(b), cell.join(",")));
        }
    }
    out.push_str(if s.mul_strict() { "mul strict\n" } else { "mul multi\n" });
    for a in s.elements() {
        for b in s.elements() {
            if s.mul_strict() {
                let c = s.mul(a, b).the_element().expect("strict cell");
                out.push_str(&format!("mul {} {} = {}\n", name(a), name(b), name(c)));
            } else {
                let cell: Vec<String> = s.mul(a, b).iter().map(name).collect();
                out.push_str(&format!("mul {} {} = {{{}}}\n", name(a), name(b), cell.join(",")));
            }
        }
    }
    out
}

struct Builder {
    name: String,
    names: Vec<String>,
    zero: Option<Elem>,
    one: Option<Elem>,
    neg: Vec<Option<Elem>>,
    add: Vec<Option<Subset>>,
    mul: Vec<Option<Subset>>,
    mul_strict: bool,
}

impl Builder {
    fn lookup(&self, lineno: usize, token: &str) -> Result<Elem, TextError> {
        self.names
            .iter()
            .position(|n| n == token)
            .ok_or_else(|| TextError::UnknownElement(lineno, token.to_string()))
    }

    fn parse_cell(&self, lineno: usize, text: &str) -> Result<Subset, TextError> {
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| {
                TextError::Parse(lineno, format!("expected a braced set, got `{text}`"))
            })?;
        let mut elems = Vec::new();
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            elems.push(self.lookup(lineno, tok)?);
        }
        Subset::from_elems(self.names.len(), &elems)
            .ok_or_else(|| TextError::Parse(lineno, "empty cell".into()))
    }

    fn finish(self, lineno: usize) -> Result<FiniteMultiring, TextError> {
        let n = self.names.len();
        let missing = |what: &str| TextError::Incomplete(format!("{} `{}`", what, self.name));
        let zero = self.zero.ok_or_else(|| missing("missing zero in"))?;
        let one = self.one.ok_or_else(|| missing("missing one in"))?;
        // unlisted negations default to the identity
        let neg: Vec<Elem> =
            self.neg.iter().enumerate().map(|(i, slot)| slot.unwrap_or(i)).collect();
        let mut add_cells = Vec::with_capacity(n * n);
        let mut mul_cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add_cells.push(self.add[a * n + b].ok_or_else(|| {
                    TextError::Parse(
                        lineno,
                        format!("missing add cell {} {}", self.names[a], self.names[b]),
                    )
                })?);
                mul_cells.push(self.mul[a * n + b].ok_or_else(|| {
                    TextError::Parse(
                        lineno,
                        format!("missing mul cell {} {}", self.names[a], self.names[b]),
                    )
                })?);
            }
        }
        FiniteMultiring::new(
            self.name,
            self.names,
            zero,
            one,
            neg,
            OpTable::from_cells(n, add_cells),
            OpTable::from_cells(n, mul_cells),
            self.mul_strict,
        )
        .map_err(|e| TextError::Invalid(e.to_string()))
    }
}

/// Parses every structure in a definition file. `#` starts a comment.
pub fn parse_structures(text: &str) -> Result<Vec<FiniteMultiring>, TextError> {
    let mut out = Vec::new();
    let mut builder: Option<Builder> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "structure" {
            if let Some(b) = builder.take() {
                out.push(b.finish(lineno)?);
            }
            if tokens.len() != 4 || tokens[2] != "carrier" {
                return Err(TextError::Parse(
                    lineno,
                    "expected `structure <name> carrier <n>`".into(),
                ));
            }
            let n: usize = tokens[3]
                .parse()
                .map_err(|_| TextError::Parse(lineno, "bad carrier size".into()))?;
            if n == 0 || n > crate::subset::MAX_CARRIER {
                return Err(TextError::Parse(lineno, format!("carrier size {n} out of range")));
            }
            builder = Some(Builder {
                name: tokens[1].to_string(),
                names: Vec::new(),
                zero: None,
                one: None,
                neg: vec![None; n],
                add: vec![None; n * n],
                mul: vec![None; n * n],
                mul_strict: true,
            });
            continue;
        }
        let b = builder
            .as_mut()
            .ok_or_else(|| TextError::Parse(lineno, "no structure header yet".into()))?;
        let n = b.neg.len();
        match tokens[0] {
            "names" => {
                if tokens.len() != n + 1 {
                    return Err(TextError::Parse(
                        lineno,
                        format!("expected {n} names, got {}", tokens.len() - 1),
                    ));
                }
                b.names = tokens[1..].iter().map(|t| t.to_string()).collect();
            }
            "zero" if tokens.len() == 2 => b.zero = Some(b.lookup(lineno, tokens[1])?),
            "one" if tokens.len() == 2 => b.one = Some(b.lookup(lineno, tokens[1])?),
            "neg" if tokens.len() == 4 && tokens[2] == "=" => {
                let a = b.lookup(lineno, tokens[1])?;
                let v = b.lookup(lineno, tokens[3])?;
                b.neg[a] = Some(v);
            }
            "add" if tokens.len() >= 5 && tokens[3] == "=" => {
                let a = b.lookup(lineno, tokens[1])?;
                let c = b.lookup(lineno, tokens[2])?;
                let cell = b.parse_cell(lineno, &tokens[4..].join(""))?;
                b.add[a * n + c] = Some(cell);
            }
            "mul" if tokens.len() == 2 => {
                b.mul_strict = match tokens[1] {
                    "strict" => true,
                    "multi" => false,
                    other => {
                        return Err(TextError::Parse(
                            lineno,
                            format!("expected strict|multi, got `{other}`"),
                        ))
                    }
                };
            }
            "mul" if tokens.len() >= 5 && tokens[3] == "=" => {
                let a = b.lookup(lineno, tokens[1])?;
                let c = b.lookup(lineno, tokens[2])?;
                let rest = tokens[4..].join("");
                let cell = if rest.starts_with('{') {
                    b.parse_cell(lineno, &rest)?
                } else {
                    Subset::singleton(n, b.lookup(lineno, &rest)?)
                };
                b.mul[a * n + c] = Some(cell);
            }
            other => {
                return Err(TextError::Parse(lineno, format!("unknown directive `{other}`")))
            }
        }
    }
    if let Some(b) = builder.take() {
        out.push(b.finish(last_line)?);
    }
    Ok(out)
}

/// Parses polynomial text like `3 + 2*X + X^2`, coefficients given by the
/// structure's display names.
pub fn parse_poly(s: &FiniteMultiring, text: &str) -> Result<crate::poly::MultiPoly, TextError> {
    let mut coeffs: Vec<Elem> = Vec::new();
    let mut seen: Vec<bool> = Vec::new();
    for part in text.split('+').map(str::trim) {
        if part.is_empty() {
            return Err(TextError::Parse(0, "empty summand".into()));
        }
        // forms: NAME | NAME*X | NAME*X^k | X | X^k
        let (coeff_text, var_text) = match part.split_once('*') {
            Some((c, v)) => (Some(c.trim()), Some(v.trim())),
            None if part.starts_with('X') => (None, Some(part)),
            None => (Some(part), None),
        };
        let coeff = match coeff_text {
            Some(c) => {
                s.element_by_name(c).ok_or_else(|| TextError::UnknownElement(0, c.to_string()))?
            }
            None => s.one(),
        };
        let power: usize = match var_text {
            None => 0,
            Some("X") => 1,
            Some(v) => v
                .strip_prefix("X^")
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| TextError::Parse(0, format!("bad monomial `{v}`")))?,
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, s.zero());
            seen.resize(power + 1, false);
        }
        if seen[power] {
            return Err(TextError::Parse(0, format!("coefficient of X^{power} given twice")));
        }
        seen[power] = true;
        coeffs[power] = coeff;
    }
    Ok(crate::poly::MultiPoly::from_coeffs(s, coeffs))
}
