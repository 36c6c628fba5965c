//! Exact arithmetic for the supported Euclidean domains and the field F₂.
//!
//! Four coefficient rings are supported: the integers Z, the Gaussian
//! integers Z[i], the polynomial ring F₂[t], and the two-element field F₂.
//! The first three are Euclidean domains with finite quotients; F₂ exists to
//! exercise the degenerate field branch of the dynamics certifiers.
//!
//! Division is deterministic per ring: truncation toward zero for Z,
//! round-half-down on both coordinates for Z[i], and polynomial long
//! division for F₂[t]. Canonical residues and unit normalization are derived
//! from those choices, so every quotient enumeration and every reduced
//! fraction in the crate is reproducible.

pub mod poly2;
pub mod quotient;

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use poly2::F2Poly;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingId {
    /// The rational integers Z.
    Z,
    /// The Gaussian integers Z[i].
    Zi,
    /// Polynomials over the two-element field, F₂[t].
    F2t,
    /// The two-element field F₂ (a field, so its completion degenerates).
    F2,
}

impl RingId {
    pub fn token(self) -> &'static str {
        match self {
            RingId::Z => "Z",
            RingId::Zi => "Zi",
            RingId::F2t => "F2t",
            RingId::F2 => "F2",
        }
    }

    pub fn from_token(s: &str) -> Option<RingId> {
        match s {
            "Z" => Some(RingId::Z),
            "Zi" => Some(RingId::Zi),
            "F2t" => Some(RingId::F2t),
            "F2" => Some(RingId::F2),
            _ => None,
        }
    }

    pub fn is_field(self) -> bool {
        matches!(self, RingId::F2)
    }

    pub fn zero(self) -> RingElement {
        match self {
            RingId::Z => RingElement::Int(BigInt::zero()),
            RingId::Zi => RingElement::Gauss(BigInt::zero(), BigInt::zero()),
            RingId::F2t => RingElement::Poly(F2Poly::zero()),
            RingId::F2 => RingElement::Bit(false),
        }
    }

    pub fn one(self) -> RingElement {
        match self {
            RingId::Z => RingElement::Int(BigInt::one()),
            RingId::Zi => RingElement::Gauss(BigInt::one(), BigInt::zero()),
            RingId::F2t => RingElement::Poly(F2Poly::one()),
            RingId::F2 => RingElement::Bit(true),
        }
    }

    /// A fixed non-unit of smallest norm, used by the freeness certifier to
    /// deepen refinements. `None` for fields (every nonzero element is a
    /// unit).
    pub fn smallest_nonunit(self) -> Option<RingElement> {
        match self {
            RingId::Z => Some(RingElement::int(2)),
            RingId::Zi => Some(RingElement::gauss(1, 1)),
            RingId::F2t => Some(RingElement::Poly(F2Poly::t())),
            RingId::F2 => None,
        }
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// An exact element of one of the supported rings. Arithmetic between
/// elements of different rings is a programming error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElement {
    Int(BigInt),
    Gauss(BigInt, BigInt),
    Poly(F2Poly),
    Bit(bool),
}

fn assert_same_ring(a: &RingElement, b: &RingElement) {
    assert_eq!(a.ring(), b.ring(), "ring mismatch: {} vs {}", a.ring(), b.ring());
}

/// floor((2n + d - 1) / (2d)) for d > 0: nearest integer to n/d with exact
/// halves rounded down.
fn round_half_down(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let two = BigInt::from(2);
    (n * &two + d - BigInt::one()).div_floor(&(d * &two))
}

impl RingElement {
    pub fn int(v: i64) -> RingElement {
        RingElement::Int(BigInt::from(v))
    }

    pub fn gauss(re: i64, im: i64) -> RingElement {
        RingElement::Gauss(BigInt::from(re), BigInt::from(im))
    }

    /// F₂[t] element from a coefficient bitmask (bit i = coefficient of t^i).
    pub fn poly(bits: u64) -> RingElement {
        RingElement::Poly(F2Poly::from_bits(bits))
    }

    pub fn bit(v: bool) -> RingElement {
        RingElement::Bit(v)
    }

    pub fn ring(&self) -> RingId {
        match self {
            RingElement::Int(_) => RingId::Z,
            RingElement::Gauss(_, _) => RingId::Zi,
            RingElement::Poly(_) => RingId::F2t,
            RingElement::Bit(_) => RingId::F2,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Int(v) => v.is_zero(),
            RingElement::Gauss(a, b) => a.is_zero() && b.is_zero(),
            RingElement::Poly(p) => p.is_zero(),
            RingElement::Bit(v) => !v,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring().one()
    }

    pub fn is_unit(&self) -> bool {
        match self {
            RingElement::Int(v) => v.magnitude() == &BigUint::one(),
            RingElement::Gauss(a, b) => {
                (a.magnitude() == &BigUint::one() && b.is_zero())
                    || (a.is_zero() && b.magnitude() == &BigUint::one())
            }
            RingElement::Poly(p) => p.0.is_one(),
            RingElement::Bit(v) => *v,
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        assert_same_ring(self, other);
        match (self, other) {
            (RingElement::Int(x), RingElement::Int(y)) => RingElement::Int(x + y),
            (RingElement::Gauss(a, b), RingElement::Gauss(c, d)) => {
                RingElement::Gauss(a + c, b + d)
            }
            (RingElement::Poly(p), RingElement::Poly(q)) => RingElement::Poly(p.add(q)),
            (RingElement::Bit(x), RingElement::Bit(y)) => RingElement::Bit(x ^ y),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RingElement {
        match self {
            RingElement::Int(v) => RingElement::Int(-v),
            RingElement::Gauss(a, b) => RingElement::Gauss(-a, -b),
            RingElement::Poly(p) => RingElement::Poly(p.clone()),
            RingElement::Bit(v) => RingElement::Bit(*v),
        }
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        assert_same_ring(self, other);
        match (self, other) {
            (RingElement::Int(x), RingElement::Int(y)) => RingElement::Int(x * y),
            (RingElement::Gauss(a, b), RingElement::Gauss(c, d)) => {
                RingElement::Gauss(a * c - b * d, a * d + b * c)
            }
            (RingElement::Poly(p), RingElement::Poly(q)) => RingElement::Poly(p.mul(q)),
            (RingElement::Bit(x), RingElement::Bit(y)) => RingElement::Bit(*x && *y),
            _ => unreachable!(),
        }
    }

    pub fn pow(&self, mut e: u32) -> RingElement {
        let mut acc = self.ring().one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// The Euclidean size: |n| for Z, a² + b² for Z[i], 2^deg for F₂[t],
    /// 0/1 for F₂. `norm(m)` equals |R/(m)| for every nonzero m in the three
    /// non-field rings.
    pub fn norm(&self) -> BigUint {
        match self {
            RingElement::Int(v) => v.magnitude().clone(),
            RingElement::Gauss(a, b) => (a * a + b * b).magnitude().clone(),
            RingElement::Poly(p) => match p.degree() {
                None => BigUint::zero(),
                Some(d) => BigUint::one() << d,
            },
            RingElement::Bit(v) => {
                if *v {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            }
        }
    }

    /// Euclidean division with the canonical rounding per ring: a = q·b + r
    /// with r = 0 or norm(r) < norm(b).
    pub fn divmod(&self, b: &RingElement) -> Result<(RingElement, RingElement)> {
        assert_same_ring(self, b);
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, b) {
            (RingElement::Int(x), RingElement::Int(y)) => {
                let q = x / y;
                let r = x % y;
                (RingElement::Int(q), RingElement::Int(r))
            }
            (RingElement::Gauss(_, _), RingElement::Gauss(c, d)) => {
                // a/b = a·conj(b)/norm(b); round each coordinate half-down.
                let nb = c * c + d * d;
                let conj = RingElement::Gauss(c.clone(), -d);
                let prod = self.mul(&conj);
                let (pr, pi) = match &prod {
                    RingElement::Gauss(x, y) => (x, y),
                    _ => unreachable!(),
                };
                let q = RingElement::Gauss(round_half_down(pr, &nb), round_half_down(pi, &nb));
                let r = self.sub(&q.mul(b));
                (q, r)
            }
            (RingElement::Poly(p), RingElement::Poly(m)) => {
                let (q, r) = p.divmod(m);
                (RingElement::Poly(q), RingElement::Poly(r))
            }
            (RingElement::Bit(x), RingElement::Bit(_)) => {
                (RingElement::Bit(*x), RingElement::Bit(false))
            }
            _ => unreachable!(),
        })
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &RingElement) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        let (_, r) = other.divmod(self).expect("nonzero divisor");
        r.is_zero()
    }

    /// Quotient `self / b`, panicking unless b divides self exactly.
    /// Used where divisibility is already established.
    pub fn exact_div(&self, b: &RingElement) -> RingElement {
        let (q, r) = self.divmod(b).expect("exact_div by zero");
        assert!(r.is_zero(), "exact_div: {} does not divide {}", b, self);
        q
    }

    /// Unit-normalized gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &RingElement) -> Result<RingElement> {
        assert_same_ring(self, other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.unit_normalize().0)
    }

    /// Extended Euclid: returns (g, s, t) with s·self + t·other = g and g the
    /// unit-normalized gcd.
    pub fn egcd(&self, other: &RingElement) -> Result<(RingElement, RingElement, RingElement)> {
        assert_same_ring(self, other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let one = self.ring().one();
        let zero = self.ring().zero();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero.clone(), one);
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let (g, u) = r0.unit_normalize();
        Ok((g, s0.mul(&u), t0.mul(&u)))
    }

    /// Returns `(canonical, u)` with `canonical = u·self` and `u` a unit.
    /// Canonical associates: nonnegative (Z); re > 0 and im ≥ 0 (Z[i],
    /// nonzero); monic, which is automatic (F₂[t]); unchanged (F₂).
    pub fn unit_normalize(&self) -> (RingElement, RingElement) {
        let one = self.ring().one();
        match self {
            RingElement::Int(v) => {
                if v.is_negative() {
                    (self.neg(), RingElement::int(-1))
                } else {
                    (self.clone(), one)
                }
            }
            RingElement::Gauss(a, b) => {
                if a.is_zero() && b.is_zero() {
                    return (self.clone(), one);
                }
                for u in [
                    RingElement::gauss(1, 0),
                    RingElement::gauss(0, 1),
                    RingElement::gauss(-1, 0),
                    RingElement::gauss(0, -1),
                ] {
                    let cand = u.mul(self);
                    if let RingElement::Gauss(re, im) = &cand {
                        if re.is_positive() && !im.is_negative() {
                            return (cand, u);
                        }
                    }
                }
                unreachable!("one associate lies in the canonical quadrant")
            }
            RingElement::Poly(_) | RingElement::Bit(_) => (self.clone(), one),
        }
    }

    /// The canonical representative of `self + (m)`: least nonnegative (Z),
    /// the `divmod` remainder (Z[i], F₂[t]), 0 (F₂). Idempotent; for Z[i]
    /// the representative depends on the associate class of m only after m
    /// is unit-normalized, which callers holding moduli are expected to do.
    pub fn reduce_mod(&self, m: &RingElement) -> Result<RingElement> {
        assert_same_ring(self, m);
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        Ok(match (self, m) {
            (RingElement::Int(x), RingElement::Int(y)) => {
                RingElement::Int(x.mod_floor(&y.abs()))
            }
            _ => self.divmod(m)?.1,
        })
    }

    /// A canonical complete residue system for R/(m) in a deterministic
    /// order. Every element of the list reduces to itself.
    pub fn residues(m: &RingElement) -> Result<Vec<RingElement>> {
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        match m {
            RingElement::Int(v) => {
                let n = v.abs();
                let mut out = Vec::new();
                let mut k = BigInt::zero();
                while k < n {
                    out.push(RingElement::Int(k.clone()));
                    k += 1;
                }
                Ok(out)
            }
            RingElement::Gauss(_, _) => {
                // The divmod remainder satisfies norm(r) <= norm(m)/2 per
                // coordinate of r/m, so both coordinates of r are bounded by
                // sqrt(norm(m)/2) rounded up.
                let nm = m.norm();
                let bound = BigInt::from((nm.clone() / 2u8).sqrt() + BigUint::one());
                let mut out = Vec::new();
                let mut re = -bound.clone();
                while re <= bound {
                    let mut im = -bound.clone();
                    while im <= bound {
                        let x = RingElement::Gauss(re.clone(), im.clone());
                        if x.reduce_mod(m)? == x {
                            out.push(x);
                        }
                        im += 1;
                    }
                    re += 1;
                }
                out.sort();
                assert_eq!(
                    BigUint::from(out.len()),
                    nm,
                    "residue scan must find exactly norm(m) classes"
                );
                Ok(out)
            }
            RingElement::Poly(p) => {
                let d = p.degree().expect("nonzero modulus");
                assert!(d <= 24, "residue enumeration is only for small moduli");
                let count: u64 = 1 << d;
                Ok((0..count).map(RingElement::poly).collect())
            }
            RingElement::Bit(_) => Ok(vec![RingElement::Bit(false)]),
        }
    }

    /// Parse an element of `ring` from the documented literal syntax.
    /// Accepts an ASCII '-' or a Unicode minus sign.
    pub fn parse(ring: RingId, input: &str) -> Result<RingElement> {
        let s = input.trim();
        if s.is_empty() {
            return Err(Error::parse(input, 0, "empty element literal"));
        }
        match ring {
            RingId::Z => parse_int(input, s).map(RingElement::Int),
            RingId::Zi => parse_gauss(input, s),
            RingId::F2t => parse_poly(input, s),
            RingId::F2 => match s {
                "0" => Ok(RingElement::Bit(false)),
                "1" => Ok(RingElement::Bit(true)),
                _ => Err(Error::parse(input, 0, "expected 0 or 1")),
            },
        }
    }
}

fn normalize_minus(s: &str) -> String {
    s.replace('\u{2212}', "-")
}

fn parse_int(orig: &str, s: &str) -> Result<BigInt> {
    let cleaned = normalize_minus(s);
    cleaned
        .parse::<BigInt>()
        .map_err(|_| Error::parse(orig, 0, "expected an integer literal"))
}

/// Gaussian literals: "7", "-3", "i", "-i", "2i", "3-1i", "1+i", "0+1i".
fn parse_gauss(orig: &str, s: &str) -> Result<RingElement> {
    let cleaned = normalize_minus(s);
    let bytes = cleaned.as_bytes();
    // Split into at most two signed terms at a '+'/'-' that is not leading.
    let mut split = None;
    for (idx, &b) in bytes.iter().enumerate().skip(1) {
        if b == b'+' || b == b'-' {
            if split.is_some() {
                return Err(Error::parse(orig, idx, "too many terms"));
            }
            split = Some(idx);
        }
    }
    let (first, second) = match split {
        Some(idx) => (&cleaned[..idx], &cleaned[idx..]),
        None => (&cleaned[..], ""),
    };
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    let mut seen_re = false;
    let mut seen_im = false;
    for (term, offset) in [(first, 0usize), (second, first.len())] {
        if term.is_empty() {
            continue;
        }
        let t = term.strip_prefix('+').unwrap_or(term);
        if let Some(coeff) = t.strip_suffix('i') {
            if seen_im {
                return Err(Error::parse(orig, offset, "duplicate imaginary term"));
            }
            seen_im = true;
            im = match coeff {
                "" => BigInt::one(),
                "-" => -BigInt::one(),
                c => c
                    .parse::<BigInt>()
                    .map_err(|_| Error::parse(orig, offset, "bad imaginary coefficient"))?,
            };
        } else {
            if seen_re {
                return Err(Error::parse(orig, offset, "duplicate real term"));
            }
            seen_re = true;
            re = t
                .parse::<BigInt>()
                .map_err(|_| Error::parse(orig, offset, "bad real coefficient"))?;
        }
    }
    if !seen_re && !seen_im {
        return Err(Error::parse(orig, 0, "empty Gaussian literal"));
    }
    Ok(RingElement::Gauss(re, im))
}

/// F₂[t] literals: '+'-separated terms "t^k", "t", "1", "0"; repeated terms
/// cancel (coefficients live in F₂).
fn parse_poly(orig: &str, s: &str) -> Result<RingElement> {
    let mut acc = F2Poly::zero();
    let mut offset = 0usize;
    for term in s.split('+') {
        let t = term.trim();
        let here = offset;
        offset += term.len() + 1;
        let bit = if t == "0" {
            continue;
        } else if t == "1" {
            F2Poly::one()
        } else if t == "t" {
            F2Poly::t()
        } else if let Some(exp) = t.strip_prefix("t^") {
            let e: u64 = exp
                .parse()
                .map_err(|_| Error::parse(orig, here, "bad exponent"))?;
            let mut p = num_bigint::BigUint::zero();
            p.set_bit(e, true);
            F2Poly(p)
        } else {
            return Err(Error::parse(orig, here, "expected term 0, 1, t, or t^k"));
        };
        acc = acc.add(&bit);
    }
    Ok(RingElement::Poly(acc))
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Int(v) => write!(f, "{}", v),
            RingElement::Gauss(a, b) => {
                if b.is_zero() {
                    write!(f, "{}", a)
                } else if b.is_negative() {
                    write!(f, "{}-{}i", a, b.magnitude())
                } else {
                    write!(f, "{}+{}i", a, b)
                }
            }
            RingElement::Poly(p) => write!(f, "{}", p),
            RingElement::Bit(v) => write!(f, "{}", u8::from(*v)),
        }
    }
}

/// All canonical (unit-normalized) nonzero moduli m with |R/(m)| ≤ `bound`,
/// sorted by (norm, element order). For F₂ that is just the unit 1.
pub fn canonical_moduli(ring: RingId, bound: u64) -> Vec<RingElement> {
    let mut out = Vec::new();
    match ring {
        RingId::Z => {
            for m in 1..=bound {
                out.push(RingElement::int(m as i64));
            }
        }
        RingId::Zi => {
            let b = (bound as f64).sqrt() as i64 + 1;
            for re in 1..=b {
                for im in 0..=b {
                    let x = RingElement::gauss(re, im);
                    if x.norm() <= BigUint::from(bound) {
                        out.push(x);
                    }
                }
            }
        }
        RingId::F2t => {
            let mut deg = 0u32;
            while 1u64 << deg <= bound {
                for bits in (1u64 << deg)..(1u64 << (deg + 1)) {
                    out.push(RingElement::poly(bits));
                }
                deg += 1;
            }
        }
        RingId::F2 => out.push(RingElement::Bit(true)),
    }
    out.sort_by(|a, b| a.norm().cmp(&b.norm()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: i64) -> RingElement {
        RingElement::int(v)
    }

    #[test]
    fn divmod_zero_numerator() {
        let (q, r) = z(0).divmod(&z(5)).unwrap();
        assert!(q.is_zero() && r.is_zero());
        assert!(matches!(z(1).divmod(&z(0)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn divmod_truncates_toward_zero() {
        let (q, r) = z(-7).divmod(&z(2)).unwrap();
        assert_eq!((q, r), (z(-3), z(-1)));
        let (q, r) = z(7).divmod(&z(-2)).unwrap();
        assert_eq!((q, r), (z(-3), z(1)));
    }

    #[test]
    fn divmod_gaussian_example() {
        let a = RingElement::gauss(7, 2);
        let b = RingElement::gauss(2, 1);
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(q, RingElement::gauss(3, -1));
        assert_eq!(r, RingElement::gauss(0, 1));
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.norm() < b.norm());
    }

    #[test]
    fn divmod_poly_example() {
        let a = RingElement::poly(0b1011); // t^3+t+1
        let b = RingElement::poly(0b101); // t^2+1
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(q, RingElement::poly(0b10));
        assert_eq!(r, RingElement::poly(0b1));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(z(12).gcd(&z(18)).unwrap(), z(6));
        assert_eq!(z(-4).gcd(&z(0)).unwrap(), z(4));
        assert!(matches!(z(0).gcd(&z(0)), Err(Error::UndefinedGcd)));
        // 2 = -i(1+i)^2, so 1+i divides 2.
        let g = RingElement::gauss(1, 1).gcd(&RingElement::gauss(2, 0)).unwrap();
        assert_eq!(g, RingElement::gauss(1, 1));
        assert!(g.divides(&RingElement::gauss(2, 0)));
        assert!(g.divides(&RingElement::gauss(1, 1)));
    }

    #[test]
    fn egcd_bezout_identity() {
        let cases = [
            (z(12), z(18)),
            (z(-35), z(21)),
            (RingElement::gauss(7, 2), RingElement::gauss(2, 1)),
            (RingElement::gauss(3, 0), RingElement::gauss(0, 3)),
            (RingElement::poly(0b1011), RingElement::poly(0b110)),
        ];
        for (a, b) in cases {
            let (g, s, t) = a.egcd(&b).unwrap();
            assert_eq!(s.mul(&a).add(&t.mul(&b)), g, "bezout for {} {}", a, b);
            assert_eq!(a.gcd(&b).unwrap(), g);
        }
    }

    #[test]
    fn residues_integers() {
        assert_eq!(RingElement::residues(&z(3)).unwrap(), vec![z(0), z(1), z(2)]);
        assert_eq!(RingElement::residues(&z(-3)).unwrap().len(), 3);
        assert!(matches!(RingElement::residues(&z(0)), Err(Error::ZeroModulus)));
    }

    #[test]
    fn residues_gaussian_one_plus_i() {
        // |Z[i]/(1+i)| = 2: the classes of 0 and 1 are distinct and exhaust.
        let m = RingElement::gauss(1, 1);
        let rs = RingElement::residues(&m).unwrap();
        assert_eq!(rs.len(), 2);
        let r0 = RingElement::gauss(0, 0).reduce_mod(&m).unwrap();
        let r1 = RingElement::gauss(1, 0).reduce_mod(&m).unwrap();
        assert_ne!(r0, r1);
        assert!(rs.contains(&r0) && rs.contains(&r1));
    }

    #[test]
    fn residues_poly() {
        let m = RingElement::poly(0b110); // t^2+t
        assert_eq!(
            RingElement::residues(&m).unwrap(),
            vec![
                RingElement::poly(0),
                RingElement::poly(1),
                RingElement::poly(2),
                RingElement::poly(3)
            ]
        );
    }

    #[test]
    fn residues_reduce_to_themselves() {
        for m in [z(7), RingElement::gauss(2, 1), RingElement::poly(0b1011)] {
            for r in RingElement::residues(&m).unwrap() {
                assert_eq!(r.reduce_mod(&m).unwrap(), r);
            }
        }
    }

    #[test]
    fn unit_normalization() {
        let (c, u) = z(-5).unit_normalize();
        assert_eq!((c.clone(), u.clone()), (z(5), z(-1)));
        assert_eq!(u.mul(&z(-5)), c);
        let (c, u) = RingElement::gauss(0, 1).unit_normalize();
        assert_eq!(c, RingElement::gauss(1, 0));
        assert_eq!(u, RingElement::gauss(0, -1));
        let (c, u) = RingElement::gauss(-2, 2).unit_normalize();
        assert_eq!(c, RingElement::gauss(2, 2));
        assert_eq!(u.mul(&RingElement::gauss(-2, 2)), c);
        let (c, _) = RingElement::poly(0b11).unit_normalize();
        assert_eq!(c, RingElement::poly(0b11));
    }

    #[test]
    fn norm_values() {
        assert_eq!(z(-6).norm(), BigUint::from(6u8));
        assert_eq!(RingElement::gauss(2, 1).norm(), BigUint::from(5u8));
        assert_eq!(RingElement::poly(0b101).norm(), BigUint::from(4u8));
    }

    #[test]
    fn parse_display_roundtrip() {
        let cases: Vec<(RingId, &str, RingElement)> = vec![
            (RingId::Z, "-12", z(-12)),
            (RingId::Z, "\u{2212}12", z(-12)),
            (RingId::Zi, "3-1i", RingElement::gauss(3, -1)),
            (RingId::Zi, "1+i", RingElement::gauss(1, 1)),
            (RingId::Zi, "-i", RingElement::gauss(0, -1)),
            (RingId::Zi, "7", RingElement::gauss(7, 0)),
            (RingId::Zi, "2i", RingElement::gauss(0, 2)),
            (RingId::F2t, "t^3+t+1", RingElement::poly(0b1011)),
            (RingId::F2t, "0", RingElement::poly(0)),
            (RingId::F2, "1", RingElement::Bit(true)),
        ];
        for (ring, text, want) in cases {
            let got = RingElement::parse(ring, text).unwrap();
            assert_eq!(got, want, "parsing {}", text);
            let reparsed = RingElement::parse(ring, &got.to_string()).unwrap();
            assert_eq!(reparsed, got, "roundtrip of {}", got);
        }
        assert!(RingElement::parse(RingId::Z, "abc").is_err());
        assert!(RingElement::parse(RingId::Zi, "1+2i+3").is_err());
        assert!(RingElement::parse(RingId::F2t, "t^x").is_err());
    }

    #[test]
    fn canonical_moduli_counts() {
        assert_eq!(canonical_moduli(RingId::Z, 64).len(), 64);
        let zi = canonical_moduli(RingId::Zi, 64);
        for m in &zi {
            assert_eq!(m.unit_normalize().0, *m);
            assert!(m.norm() <= BigUint::from(64u8));
        }
        assert!(zi.contains(&RingElement::gauss(1, 1)));
        assert!(!zi.contains(&RingElement::gauss(0, 1)));
        assert_eq!(canonical_moduli(RingId::F2t, 64).len(), 127);
        assert_eq!(canonical_moduli(RingId::F2, 64), vec![RingElement::Bit(true)]);
    }

    #[test]
    fn euclidean_contract_sampled() {
        // a = q b + r with r = 0 or norm(r) < norm(b), across all rings.
        let mut cases: Vec<(RingElement, RingElement)> = Vec::new();
        for a in -20i64..=20 {
            for b in [-7i64, -2, 1, 3, 10] {
                cases.push((z(a), z(b)));
            }
        }
        for (ar, ai) in [(5i64, -3), (-4, 7), (0, 9), (13, 13)] {
            for (br, bi) in [(1i64, 1), (2, 1), (-3, 0), (0, 2)] {
                cases.push((RingElement::gauss(ar, ai), RingElement::gauss(br, bi)));
            }
        }
        for a in 0u64..32 {
            for b in 1u64..16 {
                cases.push((RingElement::poly(a), RingElement::poly(b)));
            }
        }
        for (a, b) in cases {
            let (q, r) = a.divmod(&b).unwrap();
            assert_eq!(q.mul(&b).add(&r), a, "reconstruction for {} / {}", a, b);
            assert!(
                r.is_zero() || r.norm() < b.norm(),
                "remainder norm for {} / {}: {} vs {}",
                a,
                b,
                r.norm(),
                b.norm()
            );
        }
    }

    #[test]
    fn divides_antisymmetry_up_to_units() {
        let pairs = [
            (z(6), z(-6)),
            (RingElement::gauss(1, 1), RingElement::gauss(-1, 1)),
            (RingElement::poly(0b11), RingElement::poly(0b11)),
        ];
        for (a, b) in pairs {
            assert!(a.divides(&b) && b.divides(&a));
            assert_eq!(a.unit_normalize().0, b.unit_normalize().0);
        }
    }
}
