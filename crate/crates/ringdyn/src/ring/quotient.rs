//! Residue classes and the canonical projections between quotients.

use super::RingElement;
use crate::error::{Error, Result};
use std::fmt;

/// A class `representative + (modulus)`. The modulus is stored
/// unit-normalized and the representative canonically reduced, so structural
/// equality coincides with equality of classes up to associate moduli.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotientClass {
    representative: RingElement,
    modulus: RingElement,
}

impl QuotientClass {
    pub fn new(representative: &RingElement, modulus: &RingElement) -> Result<QuotientClass> {
        if modulus.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let (m, _) = modulus.unit_normalize();
        let rep = representative.reduce_mod(&m)?;
        Ok(QuotientClass { representative: rep, modulus: m })
    }

    pub fn representative(&self) -> &RingElement {
        &self.representative
    }

    pub fn modulus(&self) -> &RingElement {
        &self.modulus
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        x.reduce_mod(&self.modulus).map(|r| r == self.representative).unwrap_or(false)
    }

    /// Canonical projection to the coarser quotient mod `m`; requires m to
    /// divide this class's modulus.
    pub fn project(&self, m: &RingElement) -> Result<QuotientClass> {
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        if !m.divides(&self.modulus) {
            return Err(Error::NotDivisible);
        }
        QuotientClass::new(&self.representative, m)
    }
}

impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.representative, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingElement as E;

    #[test]
    fn identity_projection() {
        let c = QuotientClass::new(&E::int(7), &E::int(12)).unwrap();
        assert_eq!(c.project(&E::int(12)).unwrap(), c);
        assert_eq!(c.project(&E::int(-12)).unwrap(), c);
    }

    #[test]
    fn project_reduces() {
        let c = QuotientClass::new(&E::int(7), &E::int(12)).unwrap();
        let p = c.project(&E::int(4)).unwrap();
        assert_eq!(p.representative(), &E::int(3));
        assert_eq!(p.modulus(), &E::int(4));
        assert!(matches!(c.project(&E::int(5)), Err(Error::NotDivisible)));
    }

    #[test]
    fn project_gaussian() {
        // (2) is contained in (1+i) because 2 = -i(1+i)^2.
        let c = QuotientClass::new(&E::gauss(1, 1), &E::gauss(2, 0)).unwrap();
        let p = c.project(&E::gauss(1, 1)).unwrap();
        assert!(p.representative().is_zero());
    }

    #[test]
    fn projection_composes() {
        // project(project(x, m2), m1) = project(x, m1) whenever m1 | m2 | m'.
        let chains = [
            (E::int(60), E::int(12), E::int(3)),
            (E::int(48), E::int(8), E::int(2)),
            (E::gauss(2, 2), E::gauss(2, 0), E::gauss(1, 1)),
            (E::poly(0b1100), E::poly(0b110), E::poly(0b10)),
        ];
        for (mtop, m2, m1) in chains {
            for x in sample_points(&mtop) {
                let c = QuotientClass::new(&x, &mtop).unwrap();
                let two_step = c.project(&m2).unwrap().project(&m1).unwrap();
                let one_step = c.project(&m1).unwrap();
                assert_eq!(two_step, one_step, "chain {} | {} | {}", m1, m2, mtop);
            }
        }
    }

    fn sample_points(m: &E) -> Vec<E> {
        let mut out = E::residues(m).unwrap();
        out.push(m.clone().mul(m).add(m));
        out
    }

    #[test]
    fn equality_up_to_associate_modulus() {
        let a = QuotientClass::new(&E::int(5), &E::int(6)).unwrap();
        let b = QuotientClass::new(&E::int(-1), &E::int(-6)).unwrap();
        assert_eq!(a, b);
    }
}
