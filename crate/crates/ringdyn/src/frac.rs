//! The field of fractions K of a supported ring and the group K⋊K^×.
//!
//! Group elements are pairs (u, w) with w ≠ 0, multiplied by
//! (u,w)(u',w') = (u + u'w, ww'). Every element can be written as
//! (n/m', m/m') with a single denominator; `normal_form` computes the
//! canonical such triple (least common denominator, unit-normalized), the
//! presentation the partial-map and dynamics layers consume.

use crate::error::{Error, Result};
use crate::ring::{RingElement, RingId};
use std::fmt;

/// A reduced fraction with unit-normalized denominator. Structural equality
/// equals equality in K.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frac {
    num: RingElement,
    den: RingElement,
}

impl Frac {
    /// Build and reduce `num/den`. Panics if `den` is zero (callers parsing
    /// user input must check first).
    pub fn new(num: &RingElement, den: &RingElement) -> Frac {
        assert!(!den.is_zero(), "fraction with zero denominator");
        if num.is_zero() {
            return Frac { num: num.clone(), den: num.ring().one() };
        }
        let g = num.gcd(den).expect("den nonzero");
        let mut n = num.exact_div(&g);
        let d = den.exact_div(&g);
        let (d, u) = d.unit_normalize();
        n = n.mul(&u);
        Frac { num: n, den: d }
    }

    pub fn from_ring(x: &RingElement) -> Frac {
        Frac { num: x.clone(), den: x.ring().one() }
    }

    pub fn zero(ring: RingId) -> Frac {
        Frac::from_ring(&ring.zero())
    }

    pub fn one(ring: RingId) -> Frac {
        Frac::from_ring(&ring.one())
    }

    pub fn ring(&self) -> RingId {
        self.num.ring()
    }

    pub fn num(&self) -> &RingElement {
        &self.num
    }

    pub fn den(&self) -> &RingElement {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Frac) -> Frac {
        Frac::new(
            &self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            &self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Frac) -> Frac {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Frac {
        Frac { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Frac) -> Frac {
        Frac::new(&self.num.mul(&other.num), &self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Frac) -> Result<Frac> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Frac::new(&self.num.mul(&other.den), &self.den.mul(&other.num)))
    }

    pub fn inv(&self) -> Result<Frac> {
        Frac::one(self.ring()).div(self)
    }

    /// Parse "p/q" or "p" in the ring's element syntax; the split is at the
    /// first '/'.
    pub fn parse(ring: RingId, input: &str) -> Result<Frac> {
        let s = input.trim();
        match s.find('/') {
            None => Ok(Frac::from_ring(&RingElement::parse(ring, s)?)),
            Some(idx) => {
                let num = RingElement::parse(ring, &s[..idx])?;
                let den = RingElement::parse(ring, &s[idx + 1..])?;
                if den.is_zero() {
                    return Err(Error::parse(input, idx + 1, "zero denominator"));
                }
                Ok(Frac::new(&num, &den))
            }
        }
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// An element (u, w) of K⋊K^×, acting on K by x ↦ u + wx.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    u: Frac,
    w: Frac,
}

impl GroupElement {
    pub fn new(u: Frac, w: Frac) -> GroupElement {
        assert!(!w.is_zero(), "group element with w = 0");
        GroupElement { u, w }
    }

    pub fn identity(ring: RingId) -> GroupElement {
        GroupElement { u: Frac::zero(ring), w: Frac::one(ring) }
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_zero() && self.w.is_one()
    }

    pub fn ring(&self) -> RingId {
        self.u.ring()
    }

    pub fn u(&self) -> &Frac {
        &self.u
    }

    pub fn w(&self) -> &Frac {
        &self.w
    }

    /// (u,w)(u',w') = (u + u'w, ww').
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            u: self.u.add(&other.u.mul(&self.w)),
            w: self.w.mul(&other.w),
        }
    }

    /// (u,w)^{-1} = (-u/w, 1/w).
    pub fn inv(&self) -> GroupElement {
        let w_inv = self.w.inv().expect("w nonzero");
        GroupElement { u: self.u.neg().mul(&w_inv), w: w_inv }
    }

    /// Parse "(p/q, a/b)".
    pub fn parse(ring: RingId, input: &str) -> Result<GroupElement> {
        let s = input.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(input, 0, "expected (u, w)"))?;
        let comma = inner
            .find(',')
            .ok_or_else(|| Error::parse(input, 1, "expected ',' between u and w"))?;
        let u = Frac::parse(ring, &inner[..comma])?;
        let w = Frac::parse(ring, &inner[comma + 1..])?;
        if w.is_zero() {
            return Err(Error::parse(input, comma + 2, "w must be nonzero"));
        }
        Ok(GroupElement::new(u, w))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.w)
    }
}

/// The canonical single-denominator presentation (n, m, m') of a group
/// element: u = n/m', w = m/m', with m' the unit-normalized least common
/// denominator of u and w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub n: RingElement,
    pub m: RingElement,
    pub mp: RingElement,
}

pub fn normal_form(g: &GroupElement) -> NormalForm {
    let du = g.u().den();
    let dw = g.w().den();
    let gc = du.gcd(dw).expect("denominators nonzero");
    let (mp, _) = du.mul(dw).exact_div(&gc).unit_normalize();
    let n = g.u().num().mul(&mp.exact_div(du));
    let m = g.w().num().mul(&mp.exact_div(dw));
    NormalForm { n, m, mp }
}

/// The group element denoted by the (not necessarily reduced) triple
/// (n, m, m'), i.e. (n/m', m/m').
pub fn to_group(n: &RingElement, m: &RingElement, mp: &RingElement) -> Result<GroupElement> {
    if m.is_zero() || mp.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(GroupElement::new(Frac::new(n, mp), Frac::new(m, mp)))
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.m, self.mp)
    }
}
