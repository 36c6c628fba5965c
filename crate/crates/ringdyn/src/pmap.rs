//! Affine partial injections of a ring: the concrete model of monomials in
//! the generating isometries S_m and unitaries U^n.
//!
//! A map sends r to (a·r + c)/d on a clopen domain contained in the set
//! where d divides a·r + c. This family is closed under composition and
//! adjoint, so every generator monomial is an exact, finite piece of data;
//! operator identities become decidable equalities of normalized triples
//! plus semantic domain equality.

use crate::clopen::{solve_congruence, ClopenSet};
use crate::error::{Error, Result};
use crate::frac::{normal_form, GroupElement, NormalForm};
use crate::ring::{RingElement, RingId};
use std::fmt;

#[derive(Debug, Clone)]
pub struct AffinePartialMap {
    a: RingElement,
    c: RingElement,
    d: RingElement,
    domain: ClopenSet,
}

impl AffinePartialMap {
    /// Normalizing constructor: intersects the domain with the divisibility
    /// constraint, divides (a, c, d) by their gcd, and unit-normalizes so
    /// that d is canonical. An empty domain collapses to the zero map.
    pub fn new(
        a: &RingElement,
        c: &RingElement,
        d: &RingElement,
        domain: &ClopenSet,
    ) -> AffinePartialMap {
        assert!(!a.is_zero() && !d.is_zero(), "degenerate affine data");
        let ring = a.ring();
        let divisible = match solve_congruence(a, &c.neg(), d) {
            None => ClopenSet::empty(ring),
            Some((x0, step)) => ClopenSet::from_coset(&x0, &step).expect("nonzero step"),
        };
        let dom = domain.intersect(&divisible);
        if dom.is_empty() {
            return AffinePartialMap::zero(ring);
        }
        let g = a.gcd(c).expect("a nonzero").gcd(d).expect("nonzero");
        let mut a = a.exact_div(&g);
        let mut c = c.exact_div(&g);
        let d = d.exact_div(&g);
        let (d, u) = d.unit_normalize();
        a = a.mul(&u);
        c = c.mul(&u);
        AffinePartialMap { a, c, d, domain: dom }
    }

    /// The zero operator: the nowhere-defined map, stored canonically.
    pub fn zero(ring: RingId) -> AffinePartialMap {
        AffinePartialMap {
            a: ring.one(),
            c: ring.zero(),
            d: ring.one(),
            domain: ClopenSet::empty(ring),
        }
    }

    pub fn identity(ring: RingId) -> AffinePartialMap {
        AffinePartialMap {
            a: ring.one(),
            c: ring.zero(),
            d: ring.one(),
            domain: ClopenSet::full(ring),
        }
    }

    /// S_m: r ↦ m·r on the whole ring (an isometry).
    pub fn gen_s(m: &RingElement) -> Result<AffinePartialMap> {
        if m.is_zero() {
            return Err(Error::ZeroMultiplier);
        }
        Ok(AffinePartialMap::new(m, &m.ring().zero(), &m.ring().one(), &ClopenSet::full(m.ring())))
    }

    /// U^n: r ↦ r + n on the whole ring (a unitary).
    pub fn gen_u(n: &RingElement) -> AffinePartialMap {
        AffinePartialMap::new(&n.ring().one(), n, &n.ring().one(), &ClopenSet::full(n.ring()))
    }

    pub fn ring(&self) -> RingId {
        self.a.ring()
    }

    pub fn coeffs(&self) -> (&RingElement, &RingElement, &RingElement) {
        (&self.a, &self.c, &self.d)
    }

    pub fn domain(&self) -> &ClopenSet {
        &self.domain
    }

    pub fn range(&self) -> ClopenSet {
        self.domain.affine_image(&self.a, &self.c, &self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.is_projection() && self.domain.is_full()
    }

    /// A projection is exactly a normalized (1, 0, 1) map; its data is its
    /// domain. The zero map is the projection onto the empty set.
    pub fn is_projection(&self) -> bool {
        self.a.is_one() && self.c.is_zero() && self.d.is_one()
    }

    pub fn as_projection(&self) -> Result<ClopenSet> {
        if self.is_projection() {
            Ok(self.domain.clone())
        } else {
            Err(Error::NotAProjection)
        }
    }

    /// Evaluate at a ring point; None when r is outside the domain.
    pub fn eval(&self, r: &RingElement) -> Option<RingElement> {
        if !self.domain.contains(r) {
            return None;
        }
        Some(self.a.mul(r).add(&self.c).exact_div(&self.d))
    }

    /// Operator composition (self ∘ other)(r) = self(other(r)).
    pub fn compose(&self, other: &AffinePartialMap) -> AffinePartialMap {
        assert_eq!(self.ring(), other.ring(), "ring mismatch");
        let dom = other
            .domain
            .intersect(&self.domain.affine_preimage(&other.a, &other.c, &other.d));
        AffinePartialMap::new(
            &self.a.mul(&other.a),
            &self.a.mul(&other.c).add(&self.c.mul(&other.d)),
            &other.d.mul(&self.d),
            &dom,
        )
    }

    /// The inverse partial injection s ↦ (d·s - c)/a on the range.
    pub fn adjoint(&self) -> AffinePartialMap {
        AffinePartialMap::new(&self.d, &self.c.neg(), &self.a, &self.range())
    }
}

impl PartialEq for AffinePartialMap {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
            && self.c == other.c
            && self.d == other.d
            && self.domain.equals(&other.domain)
    }
}

impl Eq for AffinePartialMap {}

impl fmt::Display for AffinePartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r ↦ ({}·r + {})/{} on {}", self.a, self.c, self.d, self.domain)
    }
}

/// π(g) = S*(m') ∘ U(n) ∘ S(m) for (n, m, m') the normal form of g. Its
/// domain is the congruence set attached to g⁻¹ and its range the one
/// attached to g.
pub fn pi_of(g: &GroupElement) -> AffinePartialMap {
    let NormalForm { n, m, mp } = normal_form(g);
    let s_m = AffinePartialMap::gen_s(&m).expect("m nonzero");
    let s_mp = AffinePartialMap::gen_s(&mp).expect("m' nonzero");
    s_mp.adjoint().compose(&AffinePartialMap::gen_u(&n).compose(&s_m))
}

/// The range projection of π applied to the integral pair (n, m):
/// e_{(n,m)} = π((n,m)) π((n,m))*, the projection onto n + (m).
pub fn coset_projection(n: &RingElement, m: &RingElement) -> AffinePartialMap {
    let g = GroupElement::new(
        crate::frac::Frac::from_ring(n),
        crate::frac::Frac::from_ring(m),
    );
    let p = pi_of(&g);
    p.compose(&p.adjoint())
}
