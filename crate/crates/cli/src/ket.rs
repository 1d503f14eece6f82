//! Bra-ket input syntax: a signed sum of kets with optional rational
//! prefactors.
//!
//! Grammar (whitespace allowed between tokens):
//!   state := ['-'] term (('+'|'-') term)*
//!   term  := [rational ['*']] ket
//!   ket   := '|' digit digit digit '>'
//!   rational := digits ['/' digits]

use slocc_core::polyalgebra::{parse_rational, Rational};
use slocc_core::Error;

pub struct KetTerm {
    pub coeff: Rational,
    pub indices: [usize; 3],
}

pub fn parse_ket_expression(input: &str) -> Result<Vec<KetTerm>, Error> {
    let mut chars = input.chars().peekable();
    let mut terms = Vec::new();
    skip_ws(&mut chars);
    let mut negative = match chars.peek() {
        Some('-') => {
            chars.next();
            true
        }
        Some('+') => {
            chars.next();
            false
        }
        _ => false,
    };
    loop {
        skip_ws(&mut chars);
        let term = parse_term(&mut chars, negative)?;
        terms.push(term);
        skip_ws(&mut chars);
        match chars.next() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(c) => {
                return Err(Error::Parse(format!("unexpected `{c}` in ket expression")));
            }
        }
    }
    if terms.is_empty() {
        return Err(Error::Parse("empty ket expression".into()));
    }
    Ok(terms)
}

fn skip_ws(chars: &mut std::iter::Peekable<std::str::Chars>) {
    while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
        chars.next();
    }
}

fn parse_term(
    chars: &mut std::iter::Peekable<std::str::Chars>,
    negative: bool,
) -> Result<KetTerm, Error> {
    // optional rational prefactor
    let mut num = String::new();
    while matches!(chars.peek(), Some(c) if c.is_ascii_digit() || *c == '/') {
        num.push(chars.next().unwrap());
    }
    skip_ws(chars);
    if chars.peek() == Some(&'*') {
        chars.next();
        skip_ws(chars);
    }
    let mut coeff = if num.is_empty() {
        Rational::from_integer(1.into())
    } else {
        parse_rational(&num)?
    };
    if negative {
        coeff = -coeff;
    }
    if chars.next() != Some('|') {
        return Err(Error::Parse("expected `|` to open a ket".into()));
    }
    let mut digits = Vec::new();
    loop {
        match chars.next() {
            Some('>') => break,
            Some(c) if c.is_ascii_digit() => digits.push(c.to_digit(10).unwrap() as usize),
            Some(c) => return Err(Error::Parse(format!("unexpected `{c}` inside ket"))),
            None => return Err(Error::Parse("unterminated ket".into())),
        }
    }
    if digits.len() != 3 {
        return Err(Error::Parse(format!(
            "kets carry exactly three indices, got {}",
            digits.len()
        )));
    }
    Ok(KetTerm { coeff, indices: [digits[0], digits[1], digits[2]] })
}
