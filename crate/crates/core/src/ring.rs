//! The integral group ring `ZH` with its leading-term order.
//!
//! Elements are finitely supported integer combinations of group elements,
//! stored as `(element, coefficient)` pairs sorted in descending group order
//! with no zero coefficients. The first stored term is therefore the maximal
//! support element, and an element is positive exactly when that term's
//! coefficient is positive.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupKind, OrderClass};
use crate::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    group: GroupKind,
    terms: Vec<(GroupElement, BigInt)>,
}

/// Maximal support element `h*` together with its coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingTerm {
    pub element: GroupElement,
    pub coefficient: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NonUnitReason {
    ZeroElement,
    NonSingletonSupport,
    CoefficientNotUnit,
}

impl fmt::Display for NonUnitReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NonUnitReason::ZeroElement => "ZeroElement",
            NonUnitReason::NonSingletonSupport => "NonSingletonSupport",
            NonUnitReason::CoefficientNotUnit => "CoefficientNotUnit",
        };
        f.write_str(s)
    }
}

/// Outcome of [`RingElement::try_invert`].
///
/// `justified_by_biorder` is set when the group is bi-ordered, the setting in
/// which multiplying leading terms of a product is known to give the leading
/// term of the product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitVerdict {
    Unit { inverse: RingElement },
    NonUnit { reason: NonUnitReason, justified_by_biorder: bool },
}

impl UnitVerdict {
    pub fn is_unit(&self) -> bool {
        matches!(self, UnitVerdict::Unit { .. })
    }
}

impl RingElement {
    pub fn zero(group: &GroupKind) -> Self {
        RingElement { group: group.clone(), terms: Vec::new() }
    }

    pub fn one(group: &GroupKind) -> Self {
        Self::term(group.identity(), BigInt::one())
    }

    /// `n` times the identity.
    pub fn integer(group: &GroupKind, n: impl Into<BigInt>) -> Self {
        Self::term(group.identity(), n.into())
    }

    pub fn term(element: GroupElement, coefficient: impl Into<BigInt>) -> Self {
        let coefficient = coefficient.into();
        let group = element.kind();
        if coefficient.is_zero() {
            return RingElement { group, terms: Vec::new() };
        }
        RingElement { group, terms: vec![(element, coefficient)] }
    }

    /// Collects arbitrary terms, merging repeated elements and dropping zeros.
    pub fn from_terms<I>(group: &GroupKind, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, BigInt)>,
    {
        let mut acc: BTreeMap<GroupElement, BigInt> = BTreeMap::new();
        for (g, c) in terms {
            if !g.belongs_to(group) {
                return Err(Error::KindMismatch {
                    left: group.to_string(),
                    right: g.kind().to_string(),
                });
            }
            *acc.entry(g).or_insert_with(BigInt::zero) += c;
        }
        Ok(Self::from_map(group, acc))
    }

    fn from_map(group: &GroupKind, acc: BTreeMap<GroupElement, BigInt>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        RingElement { group: group.clone(), terms }
    }

    pub fn group(&self) -> &GroupKind {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_identity() && self.terms[0].1.is_one()
    }

    /// Terms in descending group order.
    pub fn terms(&self) -> &[(GroupElement, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &GroupElement) -> BigInt {
        self.terms
            .binary_search_by(|(h, _)| g.cmp(h))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    pub fn support(&self) -> BTreeSet<GroupElement> {
        self.terms.iter().map(|(g, _)| g.clone()).collect()
    }

    fn check_group(&self, other: &RingElement) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                left: self.group.to_string(),
                right: other.group.to_string(),
            })
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_group(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.check_group(other)?;
        Ok(self.merge(other, true))
    }

    // Merge of two descending term lists.
    fn merge(&self, other: &RingElement, negate_other: bool) -> RingElement {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut left = self.terms.iter().peekable();
        let mut right = other.terms.iter().peekable();
        let flip = |c: &BigInt| if negate_other { -c } else { c.clone() };
        loop {
            match (left.peek(), right.peek()) {
                (Some((g, c)), Some((h, d))) => match g.cmp(h) {
                    Ordering::Greater => {
                        terms.push((g.clone(), c.clone()));
                        left.next();
                    }
                    Ordering::Less => {
                        terms.push((h.clone(), flip(d)));
                        right.next();
                    }
                    Ordering::Equal => {
                        let s = c + flip(d);
                        if !s.is_zero() {
                            terms.push((g.clone(), s));
                        }
                        left.next();
                        right.next();
                    }
                },
                (Some((g, c)), None) => {
                    terms.push((g.clone(), c.clone()));
                    left.next();
                }
                (None, Some((h, d))) => {
                    terms.push((h.clone(), flip(d)));
                    right.next();
                }
                (None, None) => break,
            }
        }
        RingElement { group: self.group.clone(), terms }
    }

    pub fn neg(&self) -> RingElement {
        RingElement {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }

    /// Multiplication by an integer.
    pub fn scale(&self, n: &BigInt) -> RingElement {
        if n.is_zero() {
            return RingElement::zero(&self.group);
        }
        RingElement {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c * n)).collect(),
        }
    }

    /// Convolution `(r r')_k = sum over h h' = k of r_h r'_h'`, with `self` on the left.
    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_group(other)?;
        let mut acc: BTreeMap<GroupElement, BigInt> = BTreeMap::new();
        for (g, c) in &self.terms {
            for (h, d) in &other.terms {
                *acc.entry(g.compose(h)).or_insert_with(BigInt::zero) += c * d;
            }
        }
        Ok(Self::from_map(&self.group, acc))
    }

    /// Right multiplication by a single group element. Right translation
    /// preserves the order of any right-ordered group, so the term list stays
    /// sorted without a re-sort.
    pub fn mul_group_right(&self, h: &GroupElement) -> Result<RingElement> {
        if !h.belongs_to(&self.group) {
            return Err(Error::KindMismatch {
                left: self.group.to_string(),
                right: h.kind().to_string(),
            });
        }
        Ok(RingElement {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(g, c)| (g.compose(h), c.clone())).collect(),
        })
    }

    pub fn leading(&self) -> Result<LeadingTerm> {
        self.terms
            .first()
            .map(|(g, c)| LeadingTerm { element: g.clone(), coefficient: c.clone() })
            .ok_or(Error::ZeroElement)
    }

    pub fn sign(&self) -> Sign {
        match self.terms.first() {
            None => Sign::Zero,
            Some((_, c)) if c.is_positive() => Sign::Positive,
            Some(_) => Sign::Negative,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    /// `self` versus `other`: the sign of `self - other`.
    pub fn cmp_ring(&self, other: &RingElement) -> Result<Ordering> {
        Ok(self.sub(other)?.sign().as_ordering())
    }

    /// Decides invertibility syntactically: units are exactly `+-h`.
    pub fn try_invert(&self) -> UnitVerdict {
        let justified_by_biorder = self.group.order_class() == OrderClass::BiOrder;
        let non_unit = |reason| UnitVerdict::NonUnit { reason, justified_by_biorder };
        match self.terms.as_slice() {
            [] => non_unit(NonUnitReason::ZeroElement),
            [(h, c)] if c.abs().is_one() => UnitVerdict::Unit {
                inverse: RingElement::term(h.inv(), c.clone()),
            },
            [_] => non_unit(NonUnitReason::CoefficientNotUnit),
            _ => non_unit(NonUnitReason::NonSingletonSupport),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, _) => write!(f, "{c}*{g}")?,
                (_, false) => write!(f, " + {c}*{g}")?,
                (_, true) => write!(f, " - {}*{g}", -c)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for LeadingTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{}", self.coefficient, self.element)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz() -> GroupKind {
        GroupKind::FreeAbelian { rank: 1 }
    }

    /// `c * x^e` in the Laurent ring `Z[x, x^-1]`.
    fn x(e: i64, c: i64) -> RingElement {
        RingElement::term(zz().elem(&[e]).unwrap(), c)
    }

    fn sum(parts: &[RingElement]) -> RingElement {
        parts.iter().fold(RingElement::zero(&zz()), |a, b| a.add(b).unwrap())
    }

    #[test]
    fn laurent_arithmetic() {
        let r = sum(&[x(1, 1), x(0, 1)]);
        let s = sum(&[x(1, 1), x(0, -1)]);
        assert_eq!(r.add(&s).unwrap(), x(1, 2));
        assert_eq!(s.mul(&r).unwrap(), sum(&[x(2, 1), x(0, -1)]));
        assert!(r.add(&r.neg()).unwrap().is_zero());
        assert!(r.sub(&r).unwrap().support().is_empty());
    }

    #[test]
    fn heisenberg_products_do_not_commute() {
        let h = GroupKind::Heisenberg;
        let a = RingElement::term(h.elem(&[1, 0, 0]).unwrap(), 1);
        let b = RingElement::term(h.elem(&[0, 1, 0]).unwrap(), 1);
        assert_eq!(a.mul(&b).unwrap(), RingElement::term(h.elem(&[1, 1, 1]).unwrap(), 1));
        assert_eq!(b.mul(&a).unwrap(), RingElement::term(h.elem(&[1, 1, 0]).unwrap(), 1));
        assert_ne!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn klein_convolution() {
        let k = GroupKind::KleinBottle;
        let b = RingElement::term(k.elem(&[0, 1]).unwrap(), 1);
        let a_minus_1 = RingElement::term(k.elem(&[1, 0]).unwrap(), 1)
            .sub(&RingElement::one(&k))
            .unwrap();
        let expected = RingElement::term(k.elem(&[-1, 1]).unwrap(), 1)
            .sub(&RingElement::term(k.elem(&[0, 1]).unwrap(), 1))
            .unwrap();
        assert_eq!(b.mul(&a_minus_1).unwrap(), expected);
    }

    #[test]
    fn support_and_leading() {
        assert!(RingElement::zero(&zz()).support().is_empty());
        let r = sum(&[x(2, 1), x(0, -1)]);
        let support: Vec<_> = r.support().into_iter().collect();
        assert_eq!(support, vec![zz().elem(&[0]).unwrap(), zz().elem(&[2]).unwrap()]);

        let p = sum(&[x(2, 3), x(1, -5), x(0, 1)]);
        let lead = p.leading().unwrap();
        assert_eq!((lead.element, lead.coefficient), (zz().elem(&[2]).unwrap(), BigInt::from(3)));
        assert_eq!(x(-4, 7).leading().unwrap().coefficient, BigInt::from(7));
        assert_eq!(RingElement::zero(&zz()).leading(), Err(Error::ZeroElement));
    }

    #[test]
    fn signs() {
        assert_eq!(RingElement::one(&GroupKind::Heisenberg).sign(), Sign::Positive);
        assert_eq!(sum(&[x(1, 1), x(0, -5)]).sign(), Sign::Positive);
        assert_eq!(sum(&[x(1, -1), x(0, 5)]).sign(), Sign::Negative);
        assert_eq!(RingElement::zero(&zz()).sign(), Sign::Zero);
        assert_eq!(x(1, 1).cmp_ring(&x(0, 100)).unwrap(), Ordering::Greater);
    }

    #[test]
    fn units() {
        match x(3, 1).try_invert() {
            UnitVerdict::Unit { inverse } => assert_eq!(inverse, x(-3, 1)),
            other => panic!("{other:?}"),
        }
        match x(2, -1).try_invert() {
            UnitVerdict::Unit { inverse } => {
                assert!(inverse.mul(&x(2, -1)).unwrap().is_one());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            x(0, 2).try_invert(),
            UnitVerdict::NonUnit { reason: NonUnitReason::CoefficientNotUnit, justified_by_biorder: true }
        );
        assert_eq!(
            sum(&[x(1, 1), x(0, 1)]).try_invert(),
            UnitVerdict::NonUnit { reason: NonUnitReason::NonSingletonSupport, justified_by_biorder: true }
        );
        assert_eq!(
            RingElement::zero(&GroupKind::KleinBottle).try_invert(),
            UnitVerdict::NonUnit { reason: NonUnitReason::ZeroElement, justified_by_biorder: false }
        );
    }

    #[test]
    fn kind_mismatch() {
        let a = RingElement::one(&GroupKind::Heisenberg);
        let b = RingElement::one(&GroupKind::KleinBottle);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
        assert!(a.cmp_ring(&b).is_err());
        assert!(RingElement::from_terms(&GroupKind::Heisenberg, [(GroupKind::KleinBottle.identity(), BigInt::one())]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(sum(&[x(2, 3), x(1, -5), x(0, 1)]).to_string(), "3*[2] - 5*[1] + 1*[0]");
        assert_eq!(x(0, -2).to_string(), "-2*[0]");
        assert_eq!(RingElement::zero(&zz()).to_string(), "0");
    }
}
