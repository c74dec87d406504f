//! Shared reader/writer for the `3/2*x1^2*y1 - z + 1` style of polynomial text.

use crate::error::Error;
use crate::scalars::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Number(String),
    Ident(String),
}

fn tokenize(s: &str) -> Result<Vec<Token>, Error> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' => i += 1,
            b'+' => {
                out.push(Token::Plus);
                i += 1;
            }
            b'-' => {
                out.push(Token::Minus);
                i += 1;
            }
            b'*' => {
                out.push(Token::Star);
                i += 1;
            }
            b'^' => {
                out.push(Token::Caret);
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    let den_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if den_start == i {
                        return Err(Error::Parse(format!("dangling '/' in {s:?}")));
                    }
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    return Err(Error::Parse(format!("decimal literal in {s:?}")));
                }
                out.push(Token::Number(s[start..i].to_string()));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Token::Ident(s[start..i].to_string()));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "unexpected character {:?} in {s:?}",
                    c as char
                )))
            }
        }
    }
    Ok(out)
}

/// A parsed term: coefficient and a list of `(variable, exponent)` factors.
pub(crate) type RawTerm = (Rational, Vec<(String, u32)>);

pub(crate) fn parse_terms(s: &str) -> Result<Vec<RawTerm>, Error> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pos = 0;
    let mut terms = Vec::new();
    loop {
        let mut sign = Rational::one();
        match tokens.get(pos) {
            Some(Token::Minus) => {
                sign = -sign;
                pos += 1;
            }
            Some(Token::Plus) if !terms.is_empty() => pos += 1,
            _ if terms.is_empty() => {}
            Some(t) => return Err(Error::Parse(format!("expected '+' or '-', found {t:?}"))),
            None => unreachable!(),
        }
        let mut coeff = sign;
        let mut vars = Vec::new();
        loop {
            match tokens.get(pos) {
                Some(Token::Number(n)) => {
                    coeff = &coeff * &n.parse::<Rational>()?;
                    pos += 1;
                }
                Some(Token::Ident(name)) => {
                    pos += 1;
                    let mut exp = 1u32;
                    if tokens.get(pos) == Some(&Token::Caret) {
                        pos += 1;
                        match tokens.get(pos) {
                            Some(Token::Number(e)) if !e.contains('/') => {
                                exp = e
                                    .parse()
                                    .map_err(|_| Error::Parse(format!("bad exponent {e}")))?;
                                pos += 1;
                            }
                            other => return Err(Error::Parse(format!("bad exponent {other:?}"))),
                        }
                    }
                    vars.push((name.clone(), exp));
                }
                other => return Err(Error::Parse(format!("expected factor, found {other:?}"))),
            }
            if tokens.get(pos) == Some(&Token::Star) {
                pos += 1;
            } else {
                break;
            }
        }
        terms.push((coeff, vars));
        if pos == tokens.len() {
            break;
        }
    }
    Ok(terms)
}

/// Joins `(coefficient, monomial)` pairs as `a*m - b*n + c`; an empty monomial is a constant.
pub(crate) fn format_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Rational, String)>,
{
    let mut out = String::new();
    for (coeff, mono) in terms {
        let neg = coeff.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = coeff.abs();
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
