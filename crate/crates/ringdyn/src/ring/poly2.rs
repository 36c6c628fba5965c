use num_bigint::BigUint;
use num_traits::{One, Zero};

/// A polynomial over F₂, stored as a bit vector: bit `i` is the coefficient
/// of `t^i`. Addition is XOR; multiplication is carryless.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Poly(pub BigUint);

impl F2Poly {
    pub fn zero() -> Self {
        F2Poly(BigUint::zero())
    }

    pub fn one() -> Self {
        F2Poly(BigUint::one())
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        F2Poly(BigUint::from(2u8))
    }

    pub fn from_bits(bits: u64) -> Self {
        F2Poly(BigUint::from(bits))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        if self.0.is_zero() {
            None
        } else {
            Some(self.0.bits() - 1)
        }
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        F2Poly(&self.0 ^ &other.0)
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        let mut acc = BigUint::zero();
        let b = &other.0;
        for i in 0..self.0.bits() {
            if self.0.bit(i) {
                acc ^= b << i;
            }
        }
        F2Poly(acc)
    }

    /// Long division: returns `(q, r)` with `self = q·b + r` and
    /// `deg r < deg b`. Panics if `b` is zero.
    pub fn divmod(&self, b: &F2Poly) -> (F2Poly, F2Poly) {
        let db = b.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        let mut q = BigUint::zero();
        while !r.is_zero() && r.bits() > db {
            let shift = (r.bits() - 1) - db;
            q.set_bit(shift, true);
            r ^= &b.0 << shift;
        }
        (F2Poly(q), F2Poly(r))
    }
}

impl std::fmt::Display for F2Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.0.bits()).rev() {
            if !self.0.bit(i) {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "t")?,
                _ => write!(f, "t^{}", i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(bits: u64) -> F2Poly {
        F2Poly::from_bits(bits)
    }

    #[test]
    fn divmod_t3_t_1_by_t2_1() {
        // t^3+t+1 = 0b1011, t^2+1 = 0b101; long division gives q = t, r = 1.
        let (q, r) = p(0b1011).divmod(&p(0b101));
        assert_eq!(q, p(0b10));
        assert_eq!(r, p(0b1));
        // multiply back
        assert_eq!(q.mul(&p(0b101)).add(&r), p(0b1011));
    }

    #[test]
    fn mul_is_carryless() {
        // (t+1)^2 = t^2+1 over F2
        assert_eq!(p(0b11).mul(&p(0b11)), p(0b101));
    }

    #[test]
    fn display_roundtrip_forms() {
        assert_eq!(p(0b1011).to_string(), "t^3+t+1");
        assert_eq!(p(0).to_string(), "0");
        assert_eq!(p(2).to_string(), "t");
    }
}
