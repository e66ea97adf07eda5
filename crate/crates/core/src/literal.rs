//! Text literals for group, ring and tower elements.
//!
//! ```text
//! group   := '[' int (',' int)* ']'
//! ring    := '0' | ['-'] rterm (('+' | '-') rterm)*
//! rterm   := uint ['*' group] | group
//! frac    := '(' ring ')' ['/' uint] | ring ['/' uint]
//! tower   := '0' | ['-'] tterm (('+' | '-') tterm)*
//! tterm   := ('e' | 'g') uint ['*' factor] ['/' uint]
//! factor  := '(' ring ')' | rterm
//! ```
//!
//! A bare integer `n` in a ring literal means `n` times the identity. The
//! printers in this crate emit literals that parse back to the same value.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::frac::{SFraction, SValue};
use crate::group::{GroupElement, GroupKind};
use crate::module::ModuleVector;
use crate::ring::RingElement;
use crate::tower::{Tower, TowerElement};

pub fn parse_group_element(kind: &GroupKind, src: &str) -> Result<GroupElement> {
    let mut p = Parser::new(src);
    let g = p.group(kind)?;
    p.finish()?;
    Ok(g)
}

pub fn parse_ring(kind: &GroupKind, src: &str) -> Result<RingElement> {
    let mut p = Parser::new(src);
    let r = p.ring(kind)?;
    p.finish()?;
    Ok(r)
}

/// Parses `ring` or `(ring)/s`; the denominator must lie in the tower's `S`.
pub fn parse_frac(tower: &Tower, src: &str) -> Result<SFraction> {
    let mut p = Parser::new(src);
    let numerator = if p.eat('(') {
        let r = p.ring(tower.group())?;
        p.expect(')')?;
        r
    } else {
        p.ring(tower.group())?
    };
    let denominator = p.denominator(tower)?;
    p.finish()?;
    Ok(SFraction::new(numerator, denominator))
}

/// Parses a tower literal. The element is placed at the lowest stage that
/// contains every generator it mentions and is validated against `tower`.
pub fn parse_tower(tower: &Tower, src: &str) -> Result<TowerElement> {
    let mut p = Parser::new(src);
    let y = p.tower(tower)?;
    p.finish()?;
    tower.validate(&y)?;
    Ok(y)
}

/// Whether a literal mentions module or generator symbols (`e<i>`, `g<k>`).
pub fn is_tower_literal(src: &str) -> bool {
    let b = src.as_bytes();
    b.iter().enumerate().any(|(i, c)| {
        (*c == b'e' || *c == b'g') && b.get(i + 1).is_some_and(u8::is_ascii_digit)
    })
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos, message))
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected `{c}`")),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let n = rest.bytes().take_while(u8::is_ascii_digit).count();
        if n == 0 {
            return None;
        }
        self.pos += n;
        Some(&rest[..n])
    }

    fn uint(&mut self) -> Result<BigInt> {
        match self.digits() {
            Some(d) => Ok(d.parse().expect("ascii digits")),
            None => self.err("expected integer"),
        }
    }

    fn index(&mut self) -> Result<usize> {
        let start = self.pos;
        match self.digits() {
            Some(d) => d.parse().map_err(|_| Error::parse(start, "index out of range")),
            None => self.err("expected index"),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let v = self.uint()?;
        Ok(if negative { -v } else { v })
    }

    fn group(&mut self, kind: &GroupKind) -> Result<GroupElement> {
        let start = self.pos;
        self.expect('[')?;
        let mut coords = vec![self.int()?];
        while self.eat(',') {
            coords.push(self.int()?);
        }
        self.expect(']')?;
        kind.element(&coords).map_err(|e| Error::parse(start, e.to_string()))
    }

    fn rterm(&mut self, kind: &GroupKind) -> Result<RingElement> {
        match self.peek() {
            Some('[') => Ok(RingElement::term(self.group(kind)?, BigInt::one())),
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.uint()?;
                if self.eat('*') {
                    Ok(RingElement::term(self.group(kind)?, coeff))
                } else {
                    Ok(RingElement::integer(kind, coeff))
                }
            }
            _ => self.err("expected ring term"),
        }
    }

    fn ring(&mut self, kind: &GroupKind) -> Result<RingElement> {
        let mut acc = RingElement::zero(kind);
        let mut negative = self.eat('-');
        loop {
            let t = self.rterm(kind)?;
            acc = if negative { acc.sub(&t)? } else { acc.add(&t)? };
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn denominator(&mut self, tower: &Tower) -> Result<SValue> {
        if !self.eat('/') {
            return Ok(SValue::one());
        }
        let start = self.pos;
        let d = self.uint()?;
        let d: u64 = d.try_into().map_err(|_| Error::parse(start, "denominator out of range"))?;
        tower
            .sconfig()
            .value(d)
            .map_err(|e| Error::parse(start, e.to_string()))
    }

    fn tower(&mut self, tower: &Tower) -> Result<TowerElement> {
        let kind = tower.group();
        let mut coords = vec![RingElement::zero(kind); tower.rank()];
        let mut fracs: Vec<SFraction> = Vec::new();
        if self.peek() == Some('0') {
            let save = self.pos;
            self.pos += 1;
            if self.peek().is_none() {
                return Ok(tower.zero(0));
            }
            self.pos = save;
        }
        let mut negative = self.eat('-');
        loop {
            let start = self.pos;
            let symbol = match self.peek() {
                Some(c @ ('e' | 'g')) => {
                    self.pos += 1;
                    c
                }
                _ => return self.err("expected `e<i>` or `g<k>`"),
            };
            let idx = self.index()?;
            let mut value = if self.eat('*') {
                if self.eat('(') {
                    let r = self.ring(kind)?;
                    self.expect(')')?;
                    r
                } else {
                    self.rterm(kind)?
                }
            } else {
                RingElement::one(kind)
            };
            if negative {
                value = value.neg();
            }
            match symbol {
                'e' => {
                    if idx >= tower.rank() {
                        return Err(Error::parse(start, format!("e{idx} exceeds module rank {}", tower.rank())));
                    }
                    if self.peek() == Some('/') {
                        return self.err("module coordinates take no denominator");
                    }
                    coords[idx] = coords[idx].add(&value)?;
                }
                _ => {
                    if idx >= tower.height() {
                        return Err(Error::parse(start, format!("g{idx} exceeds tower height {}", tower.height())));
                    }
                    let den = self.denominator(tower)?;
                    if fracs.len() <= idx {
                        fracs.resize(idx + 1, SFraction::zero(kind));
                    }
                    fracs[idx] = fracs[idx].add(&SFraction::new(value, den))?;
                }
            }
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        let base = ModuleVector::new(coords)?;
        let y = TowerElement::from_parts(base, fracs);
        let stage = y.minimal_stage();
        y.embed_to(stage)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::Tower;
    use crate::Sign;

    #[test]
    fn ring_literals() {
        let k = GroupKind::FreeAbelian { rank: 2 };
        let r = parse_ring(&k, "3*[1,0] - 2*[0,1] + 1*[0,0]").unwrap();
        assert_eq!(r.to_string(), "3*[1,0] - 2*[0,1] + 1*[0,0]");
        assert_eq!(parse_ring(&k, "[1,0]").unwrap(), RingElement::term(k.elem(&[1, 0]).unwrap(), 1));
        assert!(parse_ring(&k, "0").unwrap().is_zero());
        assert_eq!(parse_ring(&k, "-[0,-1] + 5").unwrap().to_string(), "5*[0,0] - 1*[0,-1]");
        assert!(parse_ring(&k, "[1,0] - [1,0]").unwrap().is_zero());
    }

    #[test]
    fn parse_errors_report_position() {
        let k = GroupKind::Heisenberg;
        assert!(matches!(parse_ring(&k, "1*[0,0]"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_ring(&k, "1*[0,0,0] +"), Err(Error::Parse { position: 11, .. })));
        assert!(matches!(parse_ring(&k, "1*[0,0,0] x"), Err(Error::Parse { position: 10, .. })));
        assert!(parse_ring(&k, "").is_err());
        assert!(parse_group_element(&k, "[1,2,3").is_err());
    }

    #[test]
    fn tower_literals() {
        let t = Tower::standard(GroupKind::FreeAbelian { rank: 2 });
        let y = parse_tower(&t, "e0*[1,0] + g0*(1*[0,0])/2").unwrap();
        assert_eq!(y.stage(), 1);
        assert_eq!(y.frac().unwrap().denominator().value(), BigInt::from(2));
        assert_eq!(y.to_string(), "e0*(1*[1,0]) + g0*(1*[0,0])/2");
        assert_eq!(parse_tower(&t, &y.to_string()).unwrap(), y);
        assert_eq!(parse_tower(&t, "g2").unwrap(), t.generator(2));
        assert_eq!(parse_tower(&t, "-g0 + e1").unwrap().sign(), Sign::Negative);
        assert!(parse_tower(&t, "0").unwrap().is_zero());
    }

    #[test]
    fn tower_literal_errors() {
        let t = Tower::standard(GroupKind::FreeAbelian { rank: 1 });
        assert!(matches!(parse_tower(&t, "g1*(1*[0])/2"), Err(Error::FlavorViolation { stage: 1, .. })));
        assert!(parse_tower(&t, "g0/5").is_err());
        assert!(parse_tower(&t, "e2").is_err());
        assert!(parse_tower(&t, "g4").is_err());
        assert!(parse_tower(&t, "e0/2").is_err());
    }

    #[test]
    fn frac_literals() {
        let t = Tower::standard(GroupKind::FreeAbelian { rank: 1 });
        let f = parse_frac(&t, "(2*[1])/6").unwrap();
        assert_eq!(f.numerator().to_string(), "1*[1]");
        assert_eq!(f.denominator().value(), BigInt::from(3));
        assert!(parse_frac(&t, "1*[0]/7").is_err());
    }

    #[test]
    fn detects_tower_literals() {
        assert!(is_tower_literal("e0*[1]"));
        assert!(is_tower_literal("1*[0] + g3"));
        assert!(!is_tower_literal("3*[1,0] - 2*[0,1]"));
    }
}
