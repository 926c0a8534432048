//! Line-oriented parsing shared by the text formats.

use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error on line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, msg: impl Into<String>) -> Self {
        ParseError { line, msg: msg.into() }
    }
}

/// Non-empty lines with their 1-based line numbers. Text after `#` is ignored.
pub(crate) struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    pub fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate(), last_line: 0 }
    }

    /// The next content line split into whitespace-separated tokens.
    pub fn next_tokens(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, raw) in self.inner.by_ref() {
            self.last_line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if !tokens.is_empty() {
                return Some((i + 1, tokens));
            }
        }
        None
    }

    pub fn expect_tokens(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), ParseError> {
        self.next_tokens()
            .ok_or_else(|| ParseError::new(self.last_line + 1, format!("unexpected end of input, expected {what}")))
    }

    /// Fails if any content remains.
    pub fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.next_tokens() {
            None => Ok(()),
            Some((line, _)) => Err(ParseError::new(line, "trailing content")),
        }
    }
}

pub(crate) fn parse_num<T: FromStr>(token: &str, line: usize) -> Result<T, ParseError> {
    token.parse().map_err(|_| ParseError::new(line, format!("invalid number `{token}`")))
}

pub(crate) fn parse_all<T: FromStr>(tokens: &[&str], line: usize) -> Result<Vec<T>, ParseError> {
    tokens.iter().map(|t| parse_num(t, line)).collect()
}

/// Checks the header keyword and returns the remaining numeric fields.
pub(crate) fn header(lines: &mut Lines<'_>, keyword: &str, fields: usize) -> Result<(usize, Vec<usize>), ParseError> {
    let (line, tokens) = lines.expect_tokens(&format!("`{keyword}` header"))?;
    if tokens[0] != keyword {
        return Err(ParseError::new(line, format!("expected `{keyword}` header, found `{}`", tokens[0])));
    }
    if tokens.len() != fields + 1 {
        return Err(ParseError::new(line, format!("`{keyword}` header takes {fields} fields")));
    }
    Ok((line, parse_all(&tokens[1..], line)?))
}

pub(crate) fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
