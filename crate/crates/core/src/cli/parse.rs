//! Divisor expressions.
//!
//! ```text
//! expr := '0' | sign? term (sign term)*
//! term := uint? gen
//! gen  := 's' | 'f' | 'l' | 'e' uint | 'E' uint | 'E' uint '.' uint
//! sign := '+' | '-'
//! ```
//!
//! Whitespace is ignored. `s`, `f` and `e` belong to `R(n)`, `l` and `e` to
//! `P(n)`, and the `E` generators to the isotropic lattice. Printing a parsed
//! value gives the canonical form, and parsing a canonical form returns the
//! same value.

use crate::error::ParseError;
use crate::lattice::{DivClass, Generator, IsoExpr, Side, Surface, SurfaceModel};

/// A parsed expression.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Div(DivClass),
    Iso(IsoExpr),
}

impl std::fmt::Display for Parsed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parsed::Div(d) => d.fmt(f),
            Parsed::Iso(e) => e.fmt(f),
        }
    }
}

fn err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        offset,
        message: message.into(),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn uint(&mut self) -> Result<Option<(usize, i64)>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits
            .parse::<i64>()
            .map(|v| Some((start, v)))
            .map_err(|_| err(start, format!("integer {digits} too large")))
    }

    fn required_uint(&mut self, what: &str) -> Result<(usize, i64), ParseError> {
        let at = self.pos;
        self.uint()?.ok_or_else(|| err(at, format!("expected {what}")))
    }
}

#[allow(clippy::large_enum_variant)]
enum Target {
    Div(DivClass),
    Iso(IsoExpr),
}

/// A surface model: `R(n)`, `P(n)`, `X(a,b)` or `E`.
pub fn parse_model(text: &str) -> Result<SurfaceModel, ParseError> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "E" {
        return Ok(SurfaceModel::EnriquesIso);
    }
    let bad = || err(0, format!("unknown model '{text}'; expected R(n), P(n), X(a,b) or E"));
    let inner = t
        .get(2..t.len().saturating_sub(1))
        .filter(|_| t.len() >= 3 && t.as_bytes()[1] == b'(' && t.ends_with(')'))
        .ok_or_else(bad)?;
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match t.as_bytes()[0] {
        b'R' => Ok(SurfaceModel::R(num(inner)?)),
        b'P' => Ok(SurfaceModel::P(num(inner)?)),
        b'X' => {
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            Ok(SurfaceModel::X {
                n_r: num(a)?,
                n_p: num(b)?,
            })
        }
        _ => Err(bad()),
    }
}

pub fn parse_divisor(text: &str, model: SurfaceModel) -> Result<Parsed, ParseError> {
    let mut acc = match model {
        SurfaceModel::R(n) => Target::Div(DivClass::zero(Surface::r(n))),
        SurfaceModel::P(n) => Target::Div(DivClass::zero(Surface::p(n))),
        SurfaceModel::EnriquesIso => Target::Iso(IsoExpr::zero()),
        SurfaceModel::X { .. } => {
            return Err(err(0, "classes on X are pairs; give the R- and P-parts separately"));
        }
    };
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(err(cur.pos, "empty expression"));
    }
    // A lone 0 is the zero class.
    let mut probe = Cursor::new(text);
    if let Ok(Some((_, 0))) = probe.uint() {
        if probe.peek().is_none() {
            return Ok(finish(acc));
        }
    }

    let mut first = true;
    loop {
        let sign = match cur.peek() {
            Some(b'+') => {
                cur.bump();
                1
            }
            Some(b'-') => {
                cur.bump();
                -1
            }
            Some(_) if first => 1,
            Some(c) => return Err(err(cur.pos, format!("expected '+' or '-', found '{}'", c as char))),
            None => break,
        };
        first = false;
        let coeff = cur.uint()?.map_or(1, |(_, v)| v);
        term(&mut cur, &mut acc, sign * coeff)?;
    }
    Ok(finish(acc))
}

fn finish(acc: Target) -> Parsed {
    match acc {
        Target::Div(d) => Parsed::Div(d),
        Target::Iso(e) => Parsed::Iso(e),
    }
}

fn term(cur: &mut Cursor<'_>, acc: &mut Target, coeff: i64) -> Result<(), ParseError> {
    let at = {
        cur.skip_ws();
        cur.pos
    };
    let Some(g) = cur.bump() else {
        return Err(err(at, "expected a generator"));
    };
    match acc {
        Target::Div(d) => {
            let surface = d.surface();
            let basis = match (g, surface.side) {
                (b's', Side::R) => DivClass::section(surface.n),
                (b'f', Side::R) => DivClass::fibre(surface.n),
                (b'l', Side::P) => DivClass::line(surface.n),
                (b'e', _) => {
                    let (pos, i) = cur.required_uint("an exceptional index")?;
                    DivClass::exceptional(surface, i as usize)
                        .map_err(|_| err(pos, format!("index {i} out of range for {surface}")))?
                }
                (b's' | b'f' | b'l' | b'E', _) => {
                    return Err(err(at, format!("generator '{}' is not valid on {surface}", g as char)));
                }
                _ => return Err(err(at, format!("unknown generator '{}'", g as char))),
            };
            *d = d.checked_add(&basis.scaled(coeff)).expect("same surface");
        }
        Target::Iso(e) => {
            if g != b'E' {
                let msg = if matches!(g, b's' | b'f' | b'l' | b'e') {
                    format!("generator '{}' is not valid on the isotropic lattice", g as char)
                } else {
                    format!("unknown generator '{}'", g as char)
                };
                return Err(err(at, msg));
            }
            let (pos, i) = cur.required_uint("a generator index")?;
            let gen = if cur.peek() == Some(b'.') {
                cur.bump();
                let (pos_j, j) = cur.required_uint("a second index after '.'")?;
                if i == j {
                    return Err(err(pos_j, format!("E{i}.{j} needs two distinct indices")));
                }
                let idx = |v: i64, p: usize| u8::try_from(v).map_err(|_| err(p, format!("index {v} out of range 1..10")));
                Generator::eij(idx(i, pos)?, idx(j, pos_j)?)
                    .map_err(|_| err(pos, format!("indices {i}.{j} out of range 1..10")))?
            } else {
                let v = u8::try_from(i).map_err(|_| err(pos, format!("index {i} out of range 1..10")))?;
                Generator::e(v).map_err(|_| err(pos, format!("index {i} out of range 1..10")))?
            };
            e.add_term(coeff, gen);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::t_class;

    fn div(text: &str, model: SurfaceModel) -> DivClass {
        match parse_divisor(text, model).unwrap() {
            Parsed::Div(d) => d,
            Parsed::Iso(_) => panic!("expected a divisor class"),
        }
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(div("2s-f-e1-e2-e3-e4", SurfaceModel::R(4)), t_class(Surface::r(4)));
        assert_eq!(div("3l", SurfaceModel::P(0)), t_class(Surface::p(0)));
        let Parsed::Iso(e) = parse_divisor("E9.10+E9", SurfaceModel::EnriquesIso).unwrap() else {
            panic!()
        };
        assert_eq!(e.square(), 4);
    }

    #[test]
    fn whitespace_signs_and_zero() {
        assert_eq!(div(" 2 s - f ", SurfaceModel::R(0)), DivClass::on_r(2, -1, &[]));
        assert_eq!(div("-3l+e1", SurfaceModel::P(1)), DivClass::on_p(-3, &[-1]));
        assert_eq!(div("0", SurfaceModel::P(2)), DivClass::zero(Surface::p(2)));
        assert_eq!(div("s-s", SurfaceModel::R(0)), DivClass::zero(Surface::r(0)));
    }

    #[test]
    fn error_offsets() {
        let e = parse_divisor("2s+e5", SurfaceModel::R(4)).unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.message.contains("out of range"));
        let e = parse_divisor("s+l", SurfaceModel::R(1)).unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_divisor("s f", SurfaceModel::R(1)).unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_divisor("E1.1", SurfaceModel::EnriquesIso).unwrap_err();
        assert_eq!(e.offset, 3);
        let e = parse_divisor("E11", SurfaceModel::EnriquesIso).unwrap_err();
        assert_eq!(e.offset, 1);
        let e = parse_divisor("3x", SurfaceModel::P(0)).unwrap_err();
        assert_eq!((e.offset, e.message.as_str()), (1, "unknown generator 'x'"));
        assert!(parse_divisor("", SurfaceModel::P(0)).is_err());
        assert!(parse_divisor("s+", SurfaceModel::R(0)).is_err());
        assert_eq!(
            parse_divisor("s+", SurfaceModel::R(0)).unwrap_err().to_string(),
            "expected a generator at byte 2"
        );
    }

    #[test]
    fn print_parse_round_trip() {
        for text in ["2s-f-e1-e2-e3-e4", "-3l+e1+e2", "0", "E9+E9.10", "3E1-2E5.6"] {
            let model = if text.contains('E') {
                SurfaceModel::EnriquesIso
            } else if text.contains('l') || text == "0" {
                SurfaceModel::P(2)
            } else {
                SurfaceModel::R(4)
            };
            assert_eq!(parse_divisor(text, model).unwrap().to_string(), text);
        }
    }

    #[test]
    fn models() {
        assert_eq!(parse_model("R(4)").unwrap(), SurfaceModel::R(4));
        assert_eq!(parse_model("P(0)").unwrap(), SurfaceModel::P(0));
        assert_eq!(parse_model("X(4,5)").unwrap(), SurfaceModel::X { n_r: 4, n_p: 5 });
        assert_eq!(parse_model("E").unwrap(), SurfaceModel::EnriquesIso);
        assert!(parse_model("Q(1)").is_err());
        assert!(parse_model("R4").is_err());
    }
}
