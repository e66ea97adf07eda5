//! Concrete right-orderable groups.
//!
//! Every group here carries a total order given by a positive cone `P`:
//! `g < h` iff `h * g^-1` lies in `P`, equivalently `cmp(g, h)` is the position
//! of `g * h^-1` relative to the identity. Defining the comparison through
//! `g * h^-1` makes it invariant under right multiplication for every kind.
//! Invariance under left multiplication holds only when the cone is closed
//! under conjugation, which is what [`OrderClass`] records.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Sign;

/// Default upper bound on the radius accepted by [`GroupKind::ball`].
pub const DEFAULT_BALL_LIMIT: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    /// `Z^rank` with the lexicographic order, coordinate 0 most significant.
    FreeAbelian { rank: usize },
    /// Integer Heisenberg group in Mal'cev coordinates `(a, b, c)`.
    Heisenberg,
    /// Fundamental group of the Klein bottle, `(m, n)` with
    /// `(m, n)(m', n') = (m + (-1)^n m', n + n')`.
    KleinBottle,
    /// Direct product ordered with the left factor dominant.
    LexProduct(Box<GroupKind>, Box<GroupKind>),
}

/// Which invariance the group's order enjoys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum OrderClass {
    BiOrder,
    RightOrderOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    FreeAbelian(Vec<BigInt>),
    Heisenberg { a: BigInt, b: BigInt, c: BigInt },
    KleinBottle { m: BigInt, n: BigInt },
    LexProduct(Box<GroupElement>, Box<GroupElement>),
}

fn sign_of(x: &BigInt) -> Sign {
    if x.is_positive() {
        Sign::Positive
    } else if x.is_negative() {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

fn neg_one_pow_times(n: &BigInt, m: &BigInt) -> BigInt {
    if n.is_odd() {
        -m
    } else {
        m.clone()
    }
}

impl GroupKind {
    pub fn free_abelian(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Invalid("free abelian rank must be at least 1".into()));
        }
        Ok(GroupKind::FreeAbelian { rank })
    }

    pub fn lex_product(left: GroupKind, right: GroupKind) -> Self {
        GroupKind::LexProduct(Box::new(left), Box::new(right))
    }

    /// Number of integer coordinates in an element literal.
    pub fn dim(&self) -> usize {
        match self {
            GroupKind::FreeAbelian { rank } => *rank,
            GroupKind::Heisenberg => 3,
            GroupKind::KleinBottle => 2,
            GroupKind::LexProduct(l, r) => l.dim() + r.dim(),
        }
    }

    pub fn order_class(&self) -> OrderClass {
        match self {
            GroupKind::FreeAbelian { .. } | GroupKind::Heisenberg => OrderClass::BiOrder,
            GroupKind::KleinBottle => OrderClass::RightOrderOnly,
            GroupKind::LexProduct(l, r) => {
                if l.order_class() == OrderClass::BiOrder && r.order_class() == OrderClass::BiOrder {
                    OrderClass::BiOrder
                } else {
                    OrderClass::RightOrderOnly
                }
            }
        }
    }

    pub fn is_bi_ordered(&self) -> bool {
        self.order_class() == OrderClass::BiOrder
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupKind::FreeAbelian { rank } => GroupElement::FreeAbelian(vec![BigInt::zero(); *rank]),
            GroupKind::Heisenberg => GroupElement::Heisenberg {
                a: BigInt::zero(),
                b: BigInt::zero(),
                c: BigInt::zero(),
            },
            GroupKind::KleinBottle => GroupElement::KleinBottle { m: BigInt::zero(), n: BigInt::zero() },
            GroupKind::LexProduct(l, r) => {
                GroupElement::LexProduct(Box::new(l.identity()), Box::new(r.identity()))
            }
        }
    }

    /// Builds an element from its flattened coordinate list.
    pub fn element(&self, coords: &[BigInt]) -> Result<GroupElement> {
        if coords.len() != self.dim() {
            return Err(Error::Arity {
                kind: self.to_string(),
                expected: self.dim(),
                got: coords.len(),
            });
        }
        Ok(match self {
            GroupKind::FreeAbelian { .. } => GroupElement::FreeAbelian(coords.to_vec()),
            GroupKind::Heisenberg => GroupElement::Heisenberg {
                a: coords[0].clone(),
                b: coords[1].clone(),
                c: coords[2].clone(),
            },
            GroupKind::KleinBottle => GroupElement::KleinBottle {
                m: coords[0].clone(),
                n: coords[1].clone(),
            },
            GroupKind::LexProduct(l, r) => {
                let (lc, rc) = coords.split_at(l.dim());
                GroupElement::LexProduct(Box::new(l.element(lc)?), Box::new(r.element(rc)?))
            }
        })
    }

    /// Convenience constructor from machine integers.
    pub fn elem(&self, coords: &[i64]) -> Result<GroupElement> {
        let big: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c)).collect();
        self.element(&big)
    }

    /// All elements whose coordinates lie in `[-radius, radius]`, in
    /// coordinate-lexicographic order (coordinate 0 varies slowest).
    pub fn ball(&self, radius: u32) -> Result<Vec<GroupElement>> {
        self.ball_with_limit(radius, DEFAULT_BALL_LIMIT)
    }

    pub fn ball_with_limit(&self, radius: u32, limit: u32) -> Result<Vec<GroupElement>> {
        if radius > limit {
            return Err(Error::RadiusTooLarge { radius, limit });
        }
        let dim = self.dim();
        let r = i64::from(radius);
        let mut coords = vec![-r; dim];
        let mut out = Vec::new();
        loop {
            out.push(self.elem(&coords)?);
            let mut i = dim;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                if coords[i] < r {
                    coords[i] += 1;
                    break;
                }
                coords[i] = -r;
            }
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::FreeAbelian { rank } => write!(f, "free_abelian:{rank}"),
            GroupKind::Heisenberg => write!(f, "heisenberg"),
            GroupKind::KleinBottle => write!(f, "klein"),
            GroupKind::LexProduct(l, r) => write!(f, "lexprod({l},{r})"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = KindParser { src: s, pos: 0 };
        let kind = p.kind()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(Error::parse(p.pos, "trailing input after group kind"));
        }
        Ok(kind)
    }
}

struct KindParser<'a> {
    src: &'a str,
    pos: usize,
}

impl KindParser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{token}`")))
        }
    }

    fn kind(&mut self) -> Result<GroupKind> {
        if self.eat("free_abelian:") {
            let start = self.pos;
            let digits = self.src[start..].chars().take_while(char::is_ascii_digit).count();
            if digits == 0 {
                return Err(Error::parse(start, "expected rank"));
            }
            self.pos += digits;
            let rank: usize = self.src[start..self.pos]
                .parse()
                .map_err(|_| Error::parse(start, "rank out of range"))?;
            GroupKind::free_abelian(rank).map_err(|_| Error::parse(start, "rank must be at least 1"))
        } else if self.eat("heisenberg") {
            Ok(GroupKind::Heisenberg)
        } else if self.eat("klein") {
            Ok(GroupKind::KleinBottle)
        } else if self.eat("lexprod") {
            self.expect("(")?;
            let left = self.kind()?;
            self.expect(",")?;
            let right = self.kind()?;
            self.expect(")")?;
            Ok(GroupKind::lex_product(left, right))
        } else {
            Err(Error::parse(self.pos, "unknown group kind"))
        }
    }
}

impl GroupElement {
    pub fn kind(&self) -> GroupKind {
        match self {
            GroupElement::FreeAbelian(v) => GroupKind::FreeAbelian { rank: v.len() },
            GroupElement::Heisenberg { .. } => GroupKind::Heisenberg,
            GroupElement::KleinBottle { .. } => GroupKind::KleinBottle,
            GroupElement::LexProduct(l, r) => GroupKind::lex_product(l.kind(), r.kind()),
        }
    }

    pub fn same_kind(&self, other: &GroupElement) -> bool {
        match (self, other) {
            (GroupElement::FreeAbelian(x), GroupElement::FreeAbelian(y)) => x.len() == y.len(),
            (GroupElement::Heisenberg { .. }, GroupElement::Heisenberg { .. }) => true,
            (GroupElement::KleinBottle { .. }, GroupElement::KleinBottle { .. }) => true,
            (GroupElement::LexProduct(a, b), GroupElement::LexProduct(c, d)) => {
                a.same_kind(c) && b.same_kind(d)
            }
            _ => false,
        }
    }

    pub fn belongs_to(&self, kind: &GroupKind) -> bool {
        match (self, kind) {
            (GroupElement::FreeAbelian(x), GroupKind::FreeAbelian { rank }) => x.len() == *rank,
            (GroupElement::Heisenberg { .. }, GroupKind::Heisenberg) => true,
            (GroupElement::KleinBottle { .. }, GroupKind::KleinBottle) => true,
            (GroupElement::LexProduct(a, b), GroupKind::LexProduct(l, r)) => {
                a.belongs_to(l) && b.belongs_to(r)
            }
            _ => false,
        }
    }

    fn check_kind(&self, other: &GroupElement) -> Result<()> {
        if self.same_kind(other) {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                left: self.kind().to_string(),
                right: other.kind().to_string(),
            })
        }
    }

    /// Flattened coordinates, in literal order.
    pub fn coords(&self) -> Vec<BigInt> {
        match self {
            GroupElement::FreeAbelian(v) => v.clone(),
            GroupElement::Heisenberg { a, b, c } => vec![a.clone(), b.clone(), c.clone()],
            GroupElement::KleinBottle { m, n } => vec![m.clone(), n.clone()],
            GroupElement::LexProduct(l, r) => {
                let mut v = l.coords();
                v.extend(r.coords());
                v
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::FreeAbelian(v) => v.iter().all(Zero::is_zero),
            GroupElement::Heisenberg { a, b, c } => a.is_zero() && b.is_zero() && c.is_zero(),
            GroupElement::KleinBottle { m, n } => m.is_zero() && n.is_zero(),
            GroupElement::LexProduct(l, r) => l.is_identity() && r.is_identity(),
        }
    }

    /// Group law. Fails when the operands belong to different groups.
    pub fn mul(&self, rhs: &GroupElement) -> Result<GroupElement> {
        self.check_kind(rhs)?;
        Ok(self.compose(rhs))
    }

    /// Group law for operands already known to share a kind.
    pub(crate) fn compose(&self, rhs: &GroupElement) -> GroupElement {
        match (self, rhs) {
            (GroupElement::FreeAbelian(x), GroupElement::FreeAbelian(y)) => {
                GroupElement::FreeAbelian(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (
                GroupElement::Heisenberg { a, b, c },
                GroupElement::Heisenberg { a: a2, b: b2, c: c2 },
            ) => GroupElement::Heisenberg {
                a: a + a2,
                b: b + b2,
                c: c + c2 + a * b2,
            },
            (GroupElement::KleinBottle { m, n }, GroupElement::KleinBottle { m: m2, n: n2 }) => {
                GroupElement::KleinBottle {
                    m: m + neg_one_pow_times(n, m2),
                    n: n + n2,
                }
            }
            (GroupElement::LexProduct(a, b), GroupElement::LexProduct(c, d)) => {
                GroupElement::LexProduct(Box::new(a.compose(c)), Box::new(b.compose(d)))
            }
            _ => unreachable!("compose called on elements of different groups"),
        }
    }

    pub fn inv(&self) -> GroupElement {
        match self {
            GroupElement::FreeAbelian(v) => GroupElement::FreeAbelian(v.iter().map(|x| -x).collect()),
            GroupElement::Heisenberg { a, b, c } => GroupElement::Heisenberg {
                a: -a,
                b: -b,
                c: a * b - c,
            },
            GroupElement::KleinBottle { m, n } => GroupElement::KleinBottle {
                m: -neg_one_pow_times(n, m),
                n: -n,
            },
            GroupElement::LexProduct(l, r) => GroupElement::LexProduct(Box::new(l.inv()), Box::new(r.inv())),
        }
    }

    /// `self^exp` for any integer exponent.
    pub fn pow(&self, exp: i64) -> GroupElement {
        let base = if exp < 0 { self.inv() } else { self.clone() };
        let mut acc = self.kind().identity();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// Position of `self` relative to the identity under the positive cone.
    pub fn cone_sign(&self) -> Sign {
        match self {
            GroupElement::FreeAbelian(v) => {
                v.iter().map(sign_of).find(|s| *s != Sign::Zero).unwrap_or(Sign::Zero)
            }
            GroupElement::Heisenberg { a, b, c } => [a, b, c]
                .into_iter()
                .map(sign_of)
                .find(|s| *s != Sign::Zero)
                .unwrap_or(Sign::Zero),
            GroupElement::KleinBottle { m, n } => match sign_of(n) {
                Sign::Zero => sign_of(m),
                s => s,
            },
            GroupElement::LexProduct(l, r) => match l.cone_sign() {
                Sign::Zero => r.cone_sign(),
                s => s,
            },
        }
    }

    pub fn is_positive(&self) -> bool {
        self.cone_sign() == Sign::Positive
    }

    /// Order comparison; fails on a kind mismatch.
    pub fn try_cmp(&self, other: &GroupElement) -> Result<Ordering> {
        self.check_kind(other)?;
        Ok(self.order_cmp(other))
    }

    fn order_cmp(&self, other: &GroupElement) -> Ordering {
        self.compose(&other.inv()).cone_sign().as_ordering()
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The group order. Elements of different groups (never mixed by this
/// crate's checked APIs) fall back to a structural comparison of their kinds
/// so that `Ord` stays total.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.same_kind(other) {
            self.order_cmp(other)
        } else {
            self.kind().cmp(&other.kind())
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Searches `ball` for `g < h` whose order flips under left multiplication by
/// some `k`, returning `(g, h, k)`. Triples are scanned in ball order.
pub fn find_left_invariance_violation(
    ball: &[GroupElement],
) -> Option<(GroupElement, GroupElement, GroupElement)> {
    for k in ball {
        for g in ball {
            for h in ball {
                if g.cmp(h) == Ordering::Less && k.compose(g).cmp(&k.compose(h)) != Ordering::Less {
                    return Some((g.clone(), h.clone(), k.clone()));
                }
            }
        }
    }
    None
}

/// Smallest `n` in `1..=max_exp` with `g^n = 1`, if any.
pub fn torsion_exponent(g: &GroupElement, max_exp: u32) -> Option<u32> {
    let mut acc = g.clone();
    for n in 1..=max_exp {
        if acc.is_identity() {
            return Some(n);
        }
        acc = acc.compose(g);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(a: i64, b: i64, c: i64) -> GroupElement {
        GroupKind::Heisenberg.elem(&[a, b, c]).unwrap()
    }

    fn k(m: i64, n: i64) -> GroupElement {
        GroupKind::KleinBottle.elem(&[m, n]).unwrap()
    }

    #[test]
    fn free_abelian_mul_is_coordinate_sum() {
        let g = GroupKind::FreeAbelian { rank: 2 };
        let x = g.elem(&[1, 2]).unwrap();
        let y = g.elem(&[3, -1]).unwrap();
        assert_eq!(x.mul(&y).unwrap(), g.elem(&[4, 1]).unwrap());
    }

    #[test]
    fn heisenberg_and_klein_products() {
        assert_eq!(h(1, 0, 0).mul(&h(0, 1, 0)).unwrap(), h(1, 1, 1));
        assert_eq!(h(0, 1, 0).mul(&h(1, 0, 0)).unwrap(), h(1, 1, 0));
        assert_eq!(k(0, 1).mul(&k(1, 0)).unwrap(), k(-1, 1));
    }

    #[test]
    fn inverses() {
        for kind in [GroupKind::Heisenberg, GroupKind::KleinBottle, GroupKind::FreeAbelian { rank: 3 }] {
            assert_eq!(kind.identity().inv(), kind.identity());
        }
        assert_eq!(h(1, 1, 0).inv(), h(-1, -1, 1));
        assert_eq!(k(2, 1).inv(), k(2, -1));
    }

    // Exhaustive group-axiom oracle over the {-1,0,1} coordinate grid.
    #[test]
    fn group_axioms_on_unit_grid() {
        let kinds = [
            GroupKind::Heisenberg,
            GroupKind::KleinBottle,
            GroupKind::lex_product(GroupKind::KleinBottle, GroupKind::FreeAbelian { rank: 1 }),
        ];
        for kind in kinds {
            let ball = kind.ball(1).unwrap();
            let e = kind.identity();
            for x in &ball {
                assert_eq!(x.compose(&e), *x);
                assert_eq!(e.compose(x), *x);
                assert!(x.compose(&x.inv()).is_identity());
                assert!(x.inv().compose(x).is_identity());
                for y in &ball {
                    for z in &ball {
                        assert_eq!(x.compose(y).compose(z), x.compose(&y.compose(z)), "{kind}");
                    }
                }
            }
        }
    }

    #[test]
    fn comparison_examples() {
        let g = GroupKind::FreeAbelian { rank: 2 };
        assert_eq!(g.elem(&[0, 5]).unwrap().try_cmp(&g.elem(&[1, -100]).unwrap()).unwrap(), Ordering::Less);
        assert_eq!(h(0, 0, 1).try_cmp(&h(0, 0, 0)).unwrap(), Ordering::Greater);
        assert_eq!(h(0, 0, 1).try_cmp(&h(0, 1, -100)).unwrap(), Ordering::Less);
        assert_eq!(k(5, 0).try_cmp(&k(0, 1)).unwrap(), Ordering::Less);
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        assert!(matches!(h(0, 0, 0).mul(&k(0, 0)), Err(Error::KindMismatch { .. })));
        assert!(h(0, 0, 0).try_cmp(&k(0, 0)).is_err());
        let fa1 = GroupKind::FreeAbelian { rank: 1 }.elem(&[1]).unwrap();
        let fa2 = GroupKind::FreeAbelian { rank: 2 }.elem(&[1, 0]).unwrap();
        assert!(fa1.mul(&fa2).is_err());
    }

    #[test]
    fn ball_sizes_and_contents() {
        let fa1 = GroupKind::FreeAbelian { rank: 1 };
        let ball = fa1.ball(1).unwrap();
        assert_eq!(ball, vec![fa1.elem(&[-1]).unwrap(), fa1.elem(&[0]).unwrap(), fa1.elem(&[1]).unwrap()]);
        assert_eq!(GroupKind::Heisenberg.ball(1).unwrap().len(), 27);
        assert_eq!(GroupKind::KleinBottle.ball(2).unwrap().len(), 25);
        assert!(GroupKind::KleinBottle.ball(2).unwrap().contains(&GroupKind::KleinBottle.identity()));
        assert_eq!(
            GroupKind::Heisenberg.ball(5),
            Err(Error::RadiusTooLarge { radius: 5, limit: DEFAULT_BALL_LIMIT })
        );
        let b = GroupKind::Heisenberg.ball(2).unwrap();
        let mut dedup = b.iter().map(|x| x.coords()).collect::<Vec<_>>();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), b.len());
    }

    #[test]
    fn order_classes() {
        assert_eq!(GroupKind::Heisenberg.order_class(), OrderClass::BiOrder);
        assert_eq!(GroupKind::FreeAbelian { rank: 4 }.order_class(), OrderClass::BiOrder);
        assert_eq!(GroupKind::KleinBottle.order_class(), OrderClass::RightOrderOnly);
        let mixed = GroupKind::lex_product(GroupKind::Heisenberg, GroupKind::KleinBottle);
        assert_eq!(mixed.order_class(), OrderClass::RightOrderOnly);
        let both = GroupKind::lex_product(GroupKind::Heisenberg, GroupKind::FreeAbelian { rank: 1 });
        assert_eq!(both.order_class(), OrderClass::BiOrder);
    }

    #[test]
    fn klein_left_multiplication_flips_order() {
        let (g, hh, kk) = (k(1, 0), k(0, 0), k(0, 1));
        assert_eq!(g.cmp(&hh), Ordering::Greater);
        assert_eq!(kk.compose(&g).cmp(&kk.compose(&hh)), Ordering::Less);
        let ball = GroupKind::KleinBottle.ball(1).unwrap();
        assert!(find_left_invariance_violation(&ball).is_some());
        assert!(find_left_invariance_violation(&GroupKind::Heisenberg.ball(1).unwrap()).is_none());
    }

    #[test]
    fn kind_literals_round_trip() {
        for s in ["free_abelian:3", "heisenberg", "klein", "lexprod(free_abelian:1,lexprod(klein,heisenberg))"] {
            let kind: GroupKind = s.parse().unwrap();
            assert_eq!(kind.to_string(), s);
        }
        assert!("free_abelian:0".parse::<GroupKind>().is_err());
        assert!("lexprod(klein)".parse::<GroupKind>().is_err());
        assert!("torus".parse::<GroupKind>().is_err());
    }

    #[test]
    fn no_torsion_near_identity() {
        for kind in [GroupKind::Heisenberg, GroupKind::KleinBottle] {
            for g in kind.ball(2).unwrap().into_iter().filter(|g| !g.is_identity()) {
                assert_eq!(torsion_exponent(&g, 12), None);
            }
        }
    }

    #[test]
    fn pow_matches_repeated_product() {
        let g = h(1, -1, 2);
        assert_eq!(g.pow(3), g.compose(&g).compose(&g));
        assert!(g.pow(-2).compose(&g.pow(2)).is_identity());
    }
}
