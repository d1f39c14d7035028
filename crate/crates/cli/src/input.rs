//! Exponent-set text formats: one `x y` pair per line with `#` comments, or
//! a JSON array `[[x, y], …]`.

use std::iter::Peekable;
use std::str::CharIndices;

use num_bigint::BigInt;
use toric_nash::lattice::{ExponentSet, LatticePoint};

use crate::error::{CliError, CliResult};

pub fn parse_exponents(text: &str) -> CliResult<ExponentSet> {
    let points = if text.trim_start().starts_with('[') {
        parse_json(text)?
    } else {
        parse_lines(text)?
    };
    if points.is_empty() {
        return Err(CliError::EmptyInput);
    }
    Ok(ExponentSet::new(points)?)
}

fn parse_int(token: &str, line: usize) -> CliResult<BigInt> {
    token
        .parse()
        .map_err(|_| CliError::syntax(line, format!("expected an integer, found {token:?}")))
}

fn parse_lines(text: &str) -> CliResult<Vec<LatticePoint>> {
    text.lines()
        .enumerate()
        .filter_map(|(k, raw)| {
            let content = raw.split('#').next().unwrap_or_default().trim();
            (!content.is_empty()).then_some((k + 1, content))
        })
        .map(|(line, content)| {
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match tokens.as_slice() {
                [x, y] => Ok(LatticePoint::new(parse_int(x, line)?, parse_int(y, line)?)),
                _ => Err(CliError::syntax(
                    line,
                    format!("expected two integers, found {content:?}"),
                )),
            }
        })
        .collect()
}

/// Hand-rolled reader for the array-of-pairs subset of JSON, so integers keep
/// arbitrary size and errors carry line numbers.
struct JsonReader<'a> {
    text: &'a str,
    chars: Peekable<CharIndices<'a>>,
    line: usize,
}

impl<'a> JsonReader<'a> {
    fn skip_ws(&mut self) {
        while let Some(&(_, c)) = self.chars.peek() {
            if !c.is_whitespace() {
                break;
            }
            if c == '\n' {
                self.line += 1;
            }
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn expect(&mut self, want: char) -> CliResult<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.chars.next();
                Ok(())
            }
            Some(c) => Err(CliError::syntax(
                self.line,
                format!("expected '{want}', found '{c}'"),
            )),
            None => Err(CliError::syntax(
                self.line,
                format!("expected '{want}', found end of input"),
            )),
        }
    }

    fn integer(&mut self) -> CliResult<BigInt> {
        self.skip_ws();
        let start = self.chars.peek().map_or(self.text.len(), |&(i, _)| i);
        let mut end = start;
        while let Some(&(i, c)) = self.chars.peek() {
            if !(c.is_ascii_digit() || (c == '-' && i == start)) {
                break;
            }
            end = i + c.len_utf8();
            self.chars.next();
        }
        parse_int(&self.text[start..end], self.line)
    }

    fn pair(&mut self) -> CliResult<LatticePoint> {
        self.expect('[')?;
        let x = self.integer()?;
        self.expect(',')?;
        let y = self.integer()?;
        self.expect(']')?;
        Ok(LatticePoint::new(x, y))
    }

    fn document(mut self) -> CliResult<Vec<LatticePoint>> {
        self.expect('[')?;
        let mut out = Vec::new();
        if self.peek() == Some(']') {
            self.chars.next();
        } else {
            loop {
                out.push(self.pair()?);
                match self.peek() {
                    Some(',') => {
                        self.chars.next();
                    }
                    _ => {
                        self.expect(']')?;
                        break;
                    }
                }
            }
        }
        match self.peek() {
            None => Ok(out),
            Some(c) => Err(CliError::syntax(
                self.line,
                format!("unexpected '{c}' after the array"),
            )),
        }
    }
}

fn parse_json(text: &str) -> CliResult<Vec<LatticePoint>> {
    JsonReader {
        text,
        chars: text.char_indices().peekable(),
        line: 1,
    }
    .document()
}

/// The line format, one point per line.
pub fn emit_lines(xs: &ExponentSet) -> String {
    xs.iter().map(|p| format!("{} {}\n", p.x, p.y)).collect()
}

/// The JSON array format.
pub fn emit_json(xs: &ExponentSet) -> String {
    let body: Vec<String> = xs.iter().map(|p| format!("[{},{}]", p.x, p.y)).collect();
    format!("[{}]", body.join(","))
}
