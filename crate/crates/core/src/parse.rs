//! Element expressions.
//!
//! ```text
//! expr := term { "+" term }
//! term := integer [ word ] | word
//! word := generator { generator } | "1"
//! ```
//!
//! Generators are basis labels (table rings), the matrix units `E11 … Ekk`
//! (matrix rings with `k ≤ 9`), or `1`. Juxtaposed generators are multiplied
//! left to right and separated by whitespace; a coefficient may be written
//! directly in front of a label (`2a`). Coefficients reduce modulo the
//! characteristic. Matrix rings also accept the row-major text form
//! `"1,0;0,1"`.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring, RingKind};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Plus,
    Int(&'a str),
    Ident(&'a str),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token<'_>)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = text[i..].chars().next().expect("in bounds");
        if c.is_whitespace() {
            i += c.len_utf8();
        } else if c == '+' {
            out.push((i, Token::Plus));
            i += 1;
        } else if c.is_ascii_digit() {
            let end = text[i..].find(|ch: char| !ch.is_ascii_digit()).map_or(text.len(), |n| i + n);
            out.push((i, Token::Int(&text[i..end])));
            i = end;
        } else if c.is_alphabetic() || c == '_' {
            let end = text[i..]
                .find(|ch: char| !(ch.is_alphanumeric() || ch == '_' || ch == '\''))
                .map_or(text.len(), |n| i + n);
            out.push((i, Token::Ident(&text[i..end])));
            i = end;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

/// Element denoted by `label`, if it names a generator of `ring`.
fn generator(ring: &Ring, label: &str) -> Option<Elem> {
    if label == "1" {
        return Some(ring.one());
    }
    match ring.kind() {
        RingKind::Modular => None,
        RingKind::Matrix => {
            let (k, q) = ring.matrix_params()?;
            let digits = label.strip_prefix('E')?.as_bytes();
            if k > 9 || digits.len() != 2 {
                return None;
            }
            let pos = |d: u8| (b'1'..=b'9').contains(&d).then(|| usize::from(d - b'1')).filter(|&i| i < k);
            let (i, j) = (pos(digits[0])?, pos(digits[1])?);
            ring.from_matrix(&Matrix::unit(k, q, i, j)).ok()
        }
        RingKind::Table => {
            let t = ring.table_algebra()?;
            let i = t.labels().iter().position(|l| l == label)?;
            let mut coords = vec![0; t.dim()];
            coords[i] = 1;
            ring.elem(&coords).ok()
        }
    }
}

fn parse_coefficient(ring: &Ring, pos: usize, digits: &str) -> Result<u64> {
    let value: u128 = digits
        .parse()
        .map_err(|_| Error::Parse { pos, msg: format!("coefficient {digits} is too large") })?;
    Ok((value % u128::from(ring.characteristic())) as u64)
}

/// Parses `text` as an element of `ring`.
pub fn parse_element(ring: &Ring, text: &str) -> Result<Elem> {
    if ring.kind() == RingKind::Matrix && (text.contains(',') || text.contains(';')) {
        let (k, q) = ring.matrix_params().expect("matrix ring");
        return ring.from_matrix(&Matrix::parse(k, q, text.trim())?);
    }
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut sum = ring.zero();
    let mut pos = 0;
    loop {
        let (term, next) = parse_term(ring, &tokens, pos, text.len())?;
        sum = ring.add(&sum, &term)?;
        match tokens.get(next) {
            None => return Ok(sum),
            Some((_, Token::Plus)) => pos = next + 1,
            Some((at, tok)) => return Err(Error::Parse { pos: *at, msg: format!("expected '+', found {tok:?}") }),
        }
    }
}

fn parse_term(ring: &Ring, tokens: &[(usize, Token<'_>)], start: usize, end_pos: usize) -> Result<(Elem, usize)> {
    let mut i = start;
    let mut coefficient = None;
    match tokens.get(i) {
        None => return Err(Error::Parse { pos: end_pos, msg: "expected a term".into() }),
        Some((at, Token::Plus)) => return Err(Error::Parse { pos: *at, msg: "expected a term, found '+'".into() }),
        Some((at, Token::Int(d))) => {
            coefficient = Some(parse_coefficient(ring, *at, d)?);
            i += 1;
        }
        Some((_, Token::Ident(_))) => {}
    }
    let mut word: Option<Elem> = None;
    while let Some((at, tok)) = tokens.get(i) {
        let label = match tok {
            Token::Plus => break,
            Token::Ident(name) => *name,
            Token::Int("1") => "1",
            Token::Int(_) => {
                return Err(Error::Parse { pos: *at, msg: "a coefficient may only start a term".into() });
            }
        };
        let g = generator(ring, label).ok_or_else(|| Error::UnknownGenerator { pos: *at, name: label.to_string() })?;
        word = Some(match word {
            None => g,
            Some(w) => ring.mul(&w, &g)?,
        });
        i += 1;
    }
    let word = word.unwrap_or_else(|| ring.one());
    let term = match coefficient {
        Some(c) => ring.mul(&ring.scalar(c), &word)?,
        None => word,
    };
    Ok((term, i))
}

/// Canonical text for `x`; `parse_element(ring, &render(ring, x)) == x`.
pub fn render(ring: &Ring, x: &Elem) -> String {
    match ring.kind() {
        RingKind::Modular => x.coords()[0].to_string(),
        RingKind::Matrix => ring.to_matrix(x).expect("matrix ring").to_string(),
        RingKind::Table => {
            let t = ring.table_algebra().expect("table ring");
            let terms: Vec<String> = x
                .coords()
                .iter()
                .zip(t.labels())
                .filter(|(&c, _)| c != 0)
                .map(|(&c, label)| if c == 1 { label.clone() } else { format!("{c} {label}") })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::example::build_example_ring;
    use crate::ring::TableSpec;
    use proptest::prelude::*;

    fn basis(ring: &Ring, label: &str) -> Elem {
        generator(ring, label).unwrap()
    }

    #[test]
    fn example_ring_expressions() {
        let r = build_example_ring();
        assert_eq!(parse_element(&r, "x").unwrap(), basis(&r, "x"));
        let sum = r.add(&basis(&r, "axb"), &basis(&r, "bxa")).unwrap();
        assert_eq!(parse_element(&r, "a x b + b x a").unwrap(), sum);
        assert_eq!(parse_element(&r, "a a").unwrap(), r.zero());
        assert_eq!(parse_element(&r, "ax").unwrap(), parse_element(&r, "a x").unwrap());
        assert_eq!(parse_element(&r, "3x").unwrap(), basis(&r, "x"));
        assert_eq!(parse_element(&r, "2 x + 1").unwrap(), r.one());
    }

    #[test]
    fn modular_and_matrix_expressions() {
        let z6 = Ring::zmod(6).unwrap();
        assert_eq!(parse_element(&z6, "3").unwrap(), z6.elem(&[3]).unwrap());
        assert_eq!(parse_element(&z6, "5 + 4").unwrap(), z6.elem(&[3]).unwrap());
        assert_eq!(parse_element(&z6, "0").unwrap(), z6.zero());
        let m = Ring::matrix(2, 3).unwrap();
        assert_eq!(parse_element(&m, "1,2;0,1").unwrap(), m.elem(&[1, 2, 0, 1]).unwrap());
        assert_eq!(parse_element(&m, "2 E12 + E21 E12").unwrap(), m.elem(&[0, 2, 0, 1]).unwrap());
        assert_eq!(parse_element(&m, "1").unwrap(), m.one());
    }

    #[test]
    fn errors_carry_positions() {
        let r = build_example_ring();
        assert_eq!(parse_element(&r, "a y").unwrap_err(), Error::UnknownGenerator { pos: 2, name: "y".into() });
        assert!(matches!(parse_element(&r, "a + "), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_element(&r, "a ++ b"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_element(&r, "a * b"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_element(&r, "a 2 b"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_element(&r, "   "), Err(Error::Parse { pos: 0, .. })));
        let m = Ring::matrix(2, 2).unwrap();
        assert_eq!(parse_element(&m, "E13").unwrap_err(), Error::UnknownGenerator { pos: 0, name: "E13".into() });
        let z6 = Ring::zmod(6).unwrap();
        assert!(matches!(parse_element(&z6, "x"), Err(Error::UnknownGenerator { .. })));
    }

    #[test]
    fn renders_canonically() {
        let r = build_example_ring();
        assert_eq!(render(&r, &r.zero()), "0");
        assert_eq!(render(&r, &parse_element(&r, "bxa + 1 + a").unwrap()), "1 + a + bxa");
        let t = Ring::table(&TableSpec {
            p: 3,
            basis: vec!["e".into(), "z".into()],
            unity: vec![1, 0],
            constants: vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
        })
        .unwrap();
        assert_eq!(render(&t, &t.elem(&[2, 1]).unwrap()), "2 e + z");
    }

    fn test_rings() -> Vec<Ring> {
        vec![
            Ring::zmod(6).unwrap(),
            Ring::zmod(30).unwrap(),
            Ring::matrix(2, 2).unwrap(),
            Ring::matrix(2, 3).unwrap(),
            build_example_ring(),
        ]
    }

    #[test]
    fn every_element_round_trips() {
        for ring in test_rings() {
            for x in ring.elements().unwrap() {
                assert_eq!(parse_element(&ring, &render(&ring, &x)).unwrap(), x);
            }
        }
    }

    proptest! {
        #[test]
        fn sums_of_rendered_elements_parse_to_the_sum(i in 0u64..1024, j in 0u64..1024) {
            let ring = build_example_ring();
            let (x, y) = (ring.elem_at(i), ring.elem_at(j));
            let text = format!("{} + {}", render(&ring, &x), render(&ring, &y));
            prop_assert_eq!(parse_element(&ring, &text).unwrap(), ring.add(&x, &y).unwrap());
        }
    }
}
