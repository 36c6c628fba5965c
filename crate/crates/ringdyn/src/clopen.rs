//! The Boolean algebra of congruence sets: finite unions of cosets of a
//! single modulus, representing clopen subsets of the profinite completion.
//!
//! A set stores one modulus and the canonical representatives of its classes.
//! Refining the modulus by any multiple preserves the denoted set, so
//! equality and the Boolean operations reduce to finite set computations at
//! a common refinement; intersection avoids refinement entirely by solving
//! one congruence per class pair, which keeps every operator-domain
//! computation on single cosets.

use crate::error::{Error, Result};
use crate::frac::{normal_form, GroupElement, NormalForm};
use crate::ring::{RingElement, RingId};
use num_bigint::BigUint;
use std::collections::BTreeSet;
use std::fmt;

/// Solutions x of a·x ≡ b (mod m) as a single coset: returns (x₀, step)
/// with solution set x₀ + (step), or None when unsolvable. Requires a ≠ 0 or
/// m ∤ b ... precisely: m ≠ 0, and not both a = 0, b ≢ 0.
pub fn solve_congruence(
    a: &RingElement,
    b: &RingElement,
    m: &RingElement,
) -> Option<(RingElement, RingElement)> {
    assert!(!m.is_zero(), "zero modulus in congruence");
    if a.is_zero() {
        // 0·x ≡ b: either every x or none.
        return if m.divides(b) { Some((a.ring().zero(), a.ring().one())) } else { None };
    }
    let (g, s, _) = a.egcd(m).expect("a nonzero");
    if !g.divides(b) {
        return None;
    }
    let (step, _) = m.exact_div(&g).unit_normalize();
    let x0 = s.mul(&b.exact_div(&g)).reduce_mod(&step).expect("step nonzero");
    Some((x0, step))
}

/// A finite union of cosets `c + (modulus)`, with canonical class
/// representatives. Denotes a clopen subset of the completion.
#[derive(Debug, Clone)]
pub struct ClopenSet {
    ring: RingId,
    modulus: RingElement,
    classes: BTreeSet<RingElement>,
}

impl ClopenSet {
    pub fn empty(ring: RingId) -> ClopenSet {
        ClopenSet { ring, modulus: ring.one(), classes: BTreeSet::new() }
    }

    pub fn full(ring: RingId) -> ClopenSet {
        let mut classes = BTreeSet::new();
        classes.insert(ring.zero());
        ClopenSet { ring, modulus: ring.one(), classes }
    }

    /// The single coset n + (m).
    pub fn from_coset(n: &RingElement, m: &RingElement) -> Result<ClopenSet> {
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let (modulus, _) = m.unit_normalize();
        let mut classes = BTreeSet::new();
        classes.insert(n.reduce_mod(&modulus)?);
        Ok(ClopenSet { ring: n.ring(), modulus, classes })
    }

    pub fn from_classes<I: IntoIterator<Item = RingElement>>(
        m: &RingElement,
        reps: I,
    ) -> Result<ClopenSet> {
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let (modulus, _) = m.unit_normalize();
        let mut classes = BTreeSet::new();
        for r in reps {
            classes.insert(r.reduce_mod(&modulus)?);
        }
        Ok(ClopenSet { ring: modulus.ring(), modulus, classes })
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn modulus(&self) -> &RingElement {
        &self.modulus
    }

    pub fn classes(&self) -> &BTreeSet<RingElement> {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_full(&self) -> bool {
        BigUint::from(self.classes.len()) == self.modulus.norm()
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        match x.reduce_mod(&self.modulus) {
            Ok(r) => self.classes.contains(&r),
            Err(_) => false,
        }
    }

    /// The same set presented at the finer modulus `target`; requires the
    /// current modulus to divide `target`.
    pub fn refine_to(&self, target: &RingElement) -> ClopenSet {
        let (target, _) = target.unit_normalize();
        assert!(
            self.modulus.divides(&target),
            "refinement target {} not a multiple of {}",
            target,
            self.modulus
        );
        if target == self.modulus {
            return self.clone();
        }
        let ratio = target.exact_div(&self.modulus);
        let lifts = RingElement::residues(&ratio).expect("nonzero ratio");
        let mut classes = BTreeSet::new();
        for c in &self.classes {
            for t in &lifts {
                classes
                    .insert(c.add(&self.modulus.mul(t)).reduce_mod(&target).expect("nonzero"));
            }
        }
        debug_assert_eq!(
            BigUint::from(classes.len()),
            BigUint::from(self.classes.len()) * ratio.norm()
        );
        ClopenSet { ring: self.ring, modulus: target, classes }
    }

    fn lcm_modulus(&self, other: &ClopenSet) -> RingElement {
        let g = self.modulus.gcd(&other.modulus).expect("nonzero moduli");
        self.modulus.mul(&other.modulus).exact_div(&g).unit_normalize().0
    }

    /// Pairwise Chinese-remainder intersection; the result lives at the lcm
    /// of the two moduli and each class pair contributes at most one class.
    pub fn intersect(&self, other: &ClopenSet) -> ClopenSet {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let target = self.lcm_modulus(other);
        let mut classes = BTreeSet::new();
        for c1 in &self.classes {
            for c2 in &other.classes {
                // x = c1 + modulus·s with x ≡ c2 (mod other.modulus)
                if let Some((s0, _)) =
                    solve_congruence(&self.modulus, &c2.sub(c1), &other.modulus)
                {
                    let x = c1.add(&self.modulus.mul(&s0));
                    classes.insert(x.reduce_mod(&target).expect("nonzero"));
                }
            }
        }
        ClopenSet { ring: self.ring, modulus: target, classes }
    }

    pub fn union(&self, other: &ClopenSet) -> ClopenSet {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let target = self.lcm_modulus(other);
        let mut a = self.refine_to(&target);
        let b = other.refine_to(&target);
        a.classes.extend(b.classes);
        a
    }

    pub fn complement(&self) -> ClopenSet {
        let all = RingElement::residues(&self.modulus).expect("nonzero modulus");
        let classes =
            all.into_iter().filter(|r| !self.classes.contains(r)).collect::<BTreeSet<_>>();
        ClopenSet { ring: self.ring, modulus: self.modulus.clone(), classes }
    }

    pub fn minus(&self, other: &ClopenSet) -> ClopenSet {
        self.intersect(&other.complement_at(&self.lcm_modulus(other)))
    }

    fn complement_at(&self, target: &RingElement) -> ClopenSet {
        self.refine_to(target).complement()
    }

    /// Semantic equality, decided structurally where possible and by common
    /// refinement otherwise.
    pub fn equals(&self, other: &ClopenSet) -> bool {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        if self.is_empty() || other.is_empty() {
            return self.is_empty() && other.is_empty();
        }
        if self.modulus == other.modulus {
            return self.classes == other.classes;
        }
        if self.classes.len() == 1 && other.classes.len() == 1 {
            // Single cosets are equal iff the moduli are associates (already
            // normalized) and the canonical representatives agree.
            return false; // moduli differ and are normalized
        }
        let target = self.lcm_modulus(other);
        self.refine_to(&target).classes == other.refine_to(&target).classes
    }

    pub fn subset_of(&self, other: &ClopenSet) -> bool {
        self.intersect(other).equals(self)
    }

    /// Image under the partial affine map x ↦ (a·x + c)/d, restricted to
    /// the points where d divides a·x + c.
    pub fn affine_image(
        &self,
        a: &RingElement,
        c: &RingElement,
        d: &RingElement,
    ) -> ClopenSet {
        assert!(!a.is_zero() && !d.is_zero(), "degenerate affine map");
        if self.is_empty() {
            return ClopenSet::empty(self.ring);
        }
        let am = a.mul(&self.modulus);
        let mut classes = BTreeSet::new();
        let mut modulus = None;
        for r in &self.classes {
            // x = r + M·t with d | a·x + c: solve aM·t ≡ -(a·r+c) (mod d).
            let rhs = a.mul(r).add(c).neg();
            if let Some((t0, _)) = solve_congruence(&am, &rhs, d) {
                let y0 = a.mul(&r.add(&self.modulus.mul(&t0))).add(c).exact_div(d);
                let g = am.gcd(d).expect("nonzero");
                let (step, _) = am.exact_div(&g).unit_normalize();
                let m = modulus.get_or_insert(step);
                classes.insert(y0.reduce_mod(m).expect("nonzero"));
            }
        }
        match modulus {
            None => ClopenSet::empty(self.ring),
            Some(m) => ClopenSet { ring: self.ring, modulus: m, classes },
        }
    }

    /// Preimage under x ↦ (a·x + c)/d: the x with d | a·x + c and
    /// (a·x + c)/d in this set.
    pub fn affine_preimage(
        &self,
        a: &RingElement,
        c: &RingElement,
        d: &RingElement,
    ) -> ClopenSet {
        assert!(!a.is_zero() && !d.is_zero(), "degenerate affine map");
        if self.is_empty() {
            return ClopenSet::empty(self.ring);
        }
        let dm = d.mul(&self.modulus);
        let mut classes = BTreeSet::new();
        let mut modulus = None;
        for y in &self.classes {
            // (a·x+c)/d ≡ y (mod M) and d | a·x+c  ⟺  a·x ≡ d·y - c (mod dM)
            let rhs = d.mul(y).sub(c);
            if let Some((x0, step)) = solve_congruence(a, &rhs, &dm) {
                let m = modulus.get_or_insert(step);
                classes.insert(x0.reduce_mod(m).expect("nonzero"));
            }
        }
        match modulus {
            None => ClopenSet::empty(self.ring),
            Some(m) => ClopenSet { ring: self.ring, modulus: m, classes },
        }
    }
}

impl PartialEq for ClopenSet {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for ClopenSet {}

impl fmt::Display for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        if self.is_full() {
            return write!(f, "full");
        }
        write!(f, "{{")?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "}} mod {}", self.modulus)
    }
}

/// Parse the report syntax: "∅" / "empty" / "full" / "{c,...} mod m".
pub fn parse_clopen(ring: RingId, input: &str) -> Result<ClopenSet> {
    let s = input.trim();
    match s {
        "∅" | "empty" => return Ok(ClopenSet::empty(ring)),
        "full" => return Ok(ClopenSet::full(ring)),
        _ => {}
    }
    let idx = s
        .rfind(" mod ")
        .ok_or_else(|| Error::parse(input, 0, "expected '{classes} mod m', '∅', or 'full'"))?;
    let m = RingElement::parse(ring, &s[idx + 5..])?;
    if m.is_zero() {
        return Err(Error::parse(input, idx + 5, "zero modulus"));
    }
    let body = s[..idx].trim();
    let inner = body
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::parse(input, 0, "expected '{c1,c2,...}'"))?;
    let mut reps = Vec::new();
    for part in inner.split(',') {
        if part.trim().is_empty() {
            continue;
        }
        reps.push(RingElement::parse(ring, part)?);
    }
    ClopenSet::from_classes(&m, reps)
}

/// Classification of the domain of the partial transformation attached to a
/// group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainClass {
    Empty,
    Full,
    Proper(ClopenSet),
}

/// The set {x : m'·x ≡ n (mod m)} for (n, m, m') the normal form of g: the
/// clopen domain on which the action of g is defined (as the target of g;
/// the domain of the map x ↦ u + wx is the set attached to g⁻¹).
pub fn domain_classify(g: &GroupElement) -> DomainClass {
    let NormalForm { n, m, mp } = normal_form(g);
    if m.divides(&mp) && m.divides(&n) {
        return DomainClass::Full;
    }
    match solve_congruence(&mp, &n, &m) {
        None => DomainClass::Empty,
        Some((x0, step)) => DomainClass::Proper(
            ClopenSet::from_coset(&x0, &step).expect("nonzero step"),
        ),
    }
}

pub fn domain_set(g: &GroupElement) -> ClopenSet {
    match domain_classify(g) {
        DomainClass::Empty => ClopenSet::empty(g.ring()),
        DomainClass::Full => ClopenSet::full(g.ring()),
        DomainClass::Proper(s) => s,
    }
}

impl fmt::Display for DomainClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainClass::Empty => write!(f, "Empty (u ∉ R+(w))"),
            DomainClass::Full => write!(f, "Full (R ⊆ u+(w))"),
            DomainClass::Proper(s) => write!(f, "Proper: {}", s),
        }
    }
}
