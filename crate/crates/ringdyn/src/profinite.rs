//! Truncated profinite points r + (N), three-valued membership for the
//! spectrum correspondence, the induced partial dynamics on cylinders, and
//! the dynamical certifiers (non-fixed witnesses, orbit translations,
//! coherent-family counting).

use crate::clopen::{solve_congruence, ClopenSet};
use crate::error::{Error, Result};
use crate::frac::{normal_form, Frac, GroupElement};
use crate::ring::{RingElement, RingId};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// A cylinder r + (N): a point of the profinite completion known to
/// precision N. The precision is a nonzero canonical modulus and the
/// residue is reduced mod N.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProfiniteApprox {
    residue: RingElement,
    precision: RingElement,
}

impl ProfiniteApprox {
    pub fn new(residue: RingElement, precision: RingElement) -> Result<ProfiniteApprox> {
        if precision.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let (precision, _) = precision.unit_normalize();
        let residue = residue.reduce_mod(&precision)?;
        Ok(ProfiniteApprox { residue, precision })
    }

    pub fn ring(&self) -> RingId {
        self.precision.ring()
    }

    pub fn residue(&self) -> &RingElement {
        &self.residue
    }

    pub fn precision(&self) -> &RingElement {
        &self.precision
    }

    /// The same point known to precision N·k (keeps the current residue as
    /// the chosen lift).
    pub fn refine(&self, k: &RingElement) -> Result<ProfiniteApprox> {
        ProfiniteApprox::new(self.residue.clone(), self.precision.mul(k))
    }

    /// The component r + (m) at a divisor m of the precision.
    pub fn component(&self, m: &RingElement) -> Result<RingElement> {
        if !m.divides(&self.precision) {
            return Err(Error::NotDivisible);
        }
        self.residue.reduce_mod(m)
    }

    /// Whether this cylinder is contained in `other`.
    pub fn refines(&self, other: &ProfiniteApprox) -> bool {
        other.precision.divides(&self.precision)
            && self.residue.reduce_mod(&other.precision).expect("precision nonzero")
                == other.residue
    }

    pub fn as_clopen(&self) -> ClopenSet {
        ClopenSet::from_coset(&self.residue, &self.precision).expect("precision nonzero")
    }

    /// Parse "r mod N".
    pub fn parse(ring: RingId, input: &str) -> Result<ProfiniteApprox> {
        let s = input.trim();
        let at = s
            .rfind(" mod ")
            .ok_or_else(|| Error::parse(input, 0, "expected 'r mod N'"))?;
        let residue = RingElement::parse(ring, &s[..at])?;
        let precision = RingElement::parse(ring, &s[at + 5..])?;
        if precision.is_zero() {
            return Err(Error::parse(input, at + 5, "precision must be nonzero"));
        }
        ProfiniteApprox::new(residue, precision)
    }
}

impl fmt::Display for ProfiniteApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.precision)
    }
}

/// Three-valued answer of a cylinder-level membership test: In and Out are
/// decisions valid for every point of the cylinder; InsufficientPrecision
/// means the cylinder meets both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership3 {
    In,
    Out,
    InsufficientPrecision,
}

impl Membership3 {
    pub fn as_str(self) -> &'static str {
        match self {
            Membership3::In => "in",
            Membership3::Out => "out",
            Membership3::InsufficientPrecision => "unknown",
        }
    }
}

impl fmt::Display for Membership3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Decide whether g belongs to the relation set of every point of the
/// cylinder x, i.e. whether x ⊆ {y : m'·y ≡ n (mod m)} with
/// (n, m, m') = normal_form(g). In iff the congruence holds identically on
/// the cylinder, Out iff it fails on all of it.
pub fn rho_contains(x: &ProfiniteApprox, g: &GroupElement) -> Membership3 {
    assert_eq!(x.ring(), g.ring(), "ring mismatch");
    let nf = normal_form(g);
    let diff = nf.n.sub(&nf.mp.mul(&x.residue));
    let spread = nf.mp.mul(&x.precision);
    let g0 = spread.gcd(&nf.m).expect("modulus nonzero");
    if !g0.divides(&diff) {
        Membership3::Out
    } else if nf.m.divides(&spread) {
        Membership3::In
    } else {
        Membership3::InsufficientPrecision
    }
}

/// Apply the partial action of g to a cylinder. With (n, m, m') =
/// normal_form(g) and x = r + (N), the image is (n + m·r)/m' + (m·N/m');
/// x must lie in the domain (rho_contains(x, g⁻¹) = In), which guarantees
/// both divisions are exact.
pub fn theta_apply(g: &GroupElement, x: &ProfiniteApprox) -> Result<ProfiniteApprox> {
    assert_eq!(x.ring(), g.ring(), "ring mismatch");
    match rho_contains(x, &g.inv()) {
        Membership3::Out => return Err(Error::NotInDomain),
        Membership3::InsufficientPrecision => return Err(Error::InsufficientPrecision),
        Membership3::In => {}
    }
    let nf = normal_form(g);
    let scaled = nf.m.mul(&x.precision);
    if !nf.mp.divides(&scaled) {
        return Err(Error::InsufficientPrecision);
    }
    let num = nf.n.add(&nf.m.mul(&x.residue));
    debug_assert!(nf.mp.divides(&num), "In-certificate must force exact division");
    ProfiniteApprox::new(num.exact_div(&nf.mp), scaled.exact_div(&nf.mp))
}

/// Count the coherent choice functions over a divisor-closed family: one
/// residue class per listed modulus such that classes project onto each
/// other along divisibility. The list must contain 1, a top element every
/// entry divides, and all pairwise gcds.
pub fn coherent_family_count(divisors: &[RingElement]) -> Result<BigUint> {
    if divisors.is_empty() {
        return Err(Error::NotDivisorClosed("empty divisor list".into()));
    }
    let ring = divisors[0].ring();
    let mut ds: Vec<RingElement> = Vec::with_capacity(divisors.len());
    for d in divisors {
        assert_eq!(d.ring(), ring, "ring mismatch");
        if d.is_zero() {
            return Err(Error::NotDivisorClosed("zero divisor".into()));
        }
        ds.push(d.unit_normalize().0);
    }
    let distinct: BTreeSet<RingElement> = ds.iter().cloned().collect();
    if distinct.len() != ds.len() {
        return Err(Error::NotDivisorClosed(
            "repeated divisor (up to units)".into(),
        ));
    }
    ds.sort_by_key(|d| (d.norm(), d.clone()));
    if !ds[0].is_one() {
        return Err(Error::NotDivisorClosed("missing unit 1".into()));
    }
    let top = ds.last().unwrap().clone();
    for d in &ds {
        if !d.divides(&top) {
            return Err(Error::NotDivisorClosed(format!(
                "no top element: {} does not divide {}",
                d, top
            )));
        }
    }
    for i in 0..ds.len() {
        for j in (i + 1)..ds.len() {
            let g = ds[i].gcd(&ds[j]).expect("nonzero").unit_normalize().0;
            if !distinct.contains(&g) {
                return Err(Error::NotDivisorClosed(format!(
                    "missing gcd({}, {}) = {}",
                    ds[i], ds[j], g
                )));
            }
        }
    }

    let residues: Vec<Vec<RingElement>> = ds
        .iter()
        .map(RingElement::residues)
        .collect::<Result<_>>()?;

    fn count_from(
        ds: &[RingElement],
        residues: &[Vec<RingElement>],
        assigned: &mut Vec<RingElement>,
    ) -> BigUint {
        let idx = assigned.len();
        if idx == ds.len() {
            return BigUint::one();
        }
        let mut total = BigUint::zero();
        for c in &residues[idx] {
            let coherent = (0..idx)
                .filter(|&j| ds[j].divides(&ds[idx]))
                .all(|j| c.reduce_mod(&ds[j]).expect("divisor nonzero") == assigned[j]);
            if coherent {
                assigned.push(c.clone());
                total += count_from(ds, residues, assigned);
                assigned.pop();
            }
        }
        total
    }

    Ok(count_from(&ds, &residues, &mut Vec::new()))
}

/// A certified non-fixed point: a refinement of the queried cylinder whose
/// image under the group element is a disjoint cylinder, plus the number of
/// extra refinement levels that were needed beyond the prescribed modulus.
#[derive(Debug, Clone)]
pub struct FreenessWitness {
    pub refined: ProfiniteApprox,
    pub image: ProfiniteApprox,
    pub level: u32,
}

fn cylinders_disjoint(a: &ProfiniteApprox, b: &ProfiniteApprox) -> bool {
    let g = a.precision.gcd(&b.precision).expect("precisions nonzero");
    !g.divides(&a.residue.sub(&b.residue))
}

/// Produce a refinement of `cyl` that the action of g moves to a disjoint
/// cylinder. The caller must pass a nonempty cylinder inside the domain of
/// the action of g. For a translation (w = 1) one refinement by u·p over a
/// fixed non-unit p always separates; otherwise refine by (m − m')·m', where
/// the sub-cylinders colliding with their image form a single residue coset,
/// and pick the smallest residue outside it, deepening by p up to three
/// times when every sub-cylinder collides.
pub fn certify_not_fixed(g: &GroupElement, cyl: &ProfiniteApprox) -> Result<FreenessWitness> {
    let ring = cyl.ring();
    assert_eq!(g.ring(), ring, "ring mismatch");
    if ring.is_field() {
        return Err(Error::FieldDegenerate);
    }
    if g.is_identity() {
        return Err(Error::IsIdentity);
    }
    let pbar = ring.smallest_nonunit().expect("not a field");

    if g.w().is_one() {
        if !g.u().is_integral() {
            return Err(Error::NoWitnessAtDepth(format!(
                "domain of {} is empty; nothing to certify",
                g
            )));
        }
        let u = g.u().num().clone();
        let refined = ProfiniteApprox::new(
            cyl.residue.clone(),
            cyl.precision.mul(&u).mul(&pbar).unit_normalize().0,
        )?;
        let image = theta_apply(g, &refined)?;
        if cylinders_disjoint(&refined, &image) {
            return Ok(FreenessWitness { refined, image, level: 0 });
        }
        return Err(Error::NoWitnessAtDepth(format!(
            "translation by {} fixed its refined cylinder",
            u
        )));
    }

    let nf = normal_form(g);
    let k0 = nf.m.sub(&nf.mp).mul(&nf.mp).unit_normalize().0;
    debug_assert!(!k0.is_zero(), "w ≠ 1 forces m ≠ m'");
    let g_inv = g.inv();
    for level in 0..=3u32 {
        let k = k0.mul(&pbar.pow(level));
        let modulus = cyl.precision.mul(&k).unit_normalize().0;
        let scaled = nf.m.mul(&modulus);
        debug_assert!(nf.mp.divides(&scaled), "m' | k forces exact image precision");
        let image_precision = scaled.exact_div(&nf.mp).unit_normalize().0;
        let overlap = modulus.gcd(&image_precision).expect("nonzero");
        // A sub-cylinder r + N·j + (M) meets its own image exactly when
        // (m' − m)·N·j ≡ n − (m' − m)·r modulo gcd(M, M_image)·m', so the
        // colliding j form at most one coset; take the smallest j outside it.
        let diff = nf.mp.sub(&nf.m);
        let j = match solve_congruence(
            &diff.mul(&cyl.precision),
            &nf.n.sub(&diff.mul(&cyl.residue)),
            &overlap.mul(&nf.mp),
        ) {
            None => ring.zero(),
            Some((j0, step)) => {
                if step.is_one() {
                    continue;
                }
                if j0.is_zero() {
                    ring.one()
                } else {
                    ring.zero()
                }
            }
        };
        let candidate =
            ProfiniteApprox::new(cyl.residue.add(&cyl.precision.mul(&j)), modulus)?;
        if rho_contains(&candidate, &g_inv) != Membership3::In {
            continue;
        }
        let image = theta_apply(g, &candidate)?;
        if cylinders_disjoint(&candidate, &image) {
            return Ok(FreenessWitness { refined: candidate, image, level });
        }
    }
    Err(Error::NoWitnessAtDepth(format!(
        "no disjoint refinement of {} within 3 levels for g = {}",
        cyl, g
    )))
}

/// The translation moving the cylinder x into the target clopen set:
/// g = (u' − u_w, 1) where u_w is x's component at the target's modulus and
/// u' is a class of the target (x's own component when it already lies
/// inside). Requires the target modulus to divide x's precision.
pub fn orbit_translation(x: &ProfiniteApprox, target: &ClopenSet) -> Result<GroupElement> {
    let ring = x.ring();
    assert_eq!(target.ring(), ring, "ring mismatch");
    if target.is_empty() {
        return Err(Error::EmptyTarget);
    }
    if !target.modulus().divides(&x.precision) {
        return Err(Error::InsufficientPrecision);
    }
    let u_w = x.residue.reduce_mod(target.modulus())?;
    let u_p = if target.classes().contains(&u_w) {
        u_w.clone()
    } else {
        target.classes().iter().next().expect("nonempty").clone()
    };
    Ok(GroupElement::new(
        Frac::from_ring(&u_p.sub(&u_w)),
        Frac::one(ring),
    ))
}
