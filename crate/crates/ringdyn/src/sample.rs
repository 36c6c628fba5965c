//! Seeded sample streams for the verification suites. Each suite opens its
//! own stream keyed by (seed, suite name, ring), so suites draw identical
//! values whether run alone or as part of `all`.

use crate::frac::{Frac, GroupElement};
use crate::ring::{RingElement, RingId};
use crate::words::CLMonomial;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fold_bytes(acc: u64, bytes: &[u8]) -> u64 {
    let mut h = acc ^ 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub struct Sampler {
    ring: RingId,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, suite: &str, ring: RingId) -> Sampler {
        let tag = fold_bytes(fold_bytes(0, suite.as_bytes()), ring.token().as_bytes());
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&tag.to_le_bytes());
        key[16..24].copy_from_slice(&seed.rotate_left(17).to_le_bytes());
        key[24..32].copy_from_slice(&tag.rotate_left(31).to_le_bytes());
        Sampler { ring, rng: ChaCha8Rng::from_seed(key) }
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    /// An element with small coefficients; every sampled value has norm at
    /// most 64, so sampled moduli stay within the exhaustive test bound.
    pub fn element(&mut self) -> RingElement {
        match self.ring {
            RingId::Z => RingElement::int(self.rng.gen_range(-12..=12)),
            RingId::Zi => {
                RingElement::gauss(self.rng.gen_range(-5..=5), self.rng.gen_range(-5..=5))
            }
            RingId::F2t => RingElement::poly(self.rng.gen_range(0..64)),
            RingId::F2 => RingElement::bit(self.rng.gen_bool(0.5)),
        }
    }

    pub fn nonzero(&mut self) -> RingElement {
        loop {
            let x = self.element();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn frac(&mut self) -> Frac {
        Frac::new(&self.element(), &self.nonzero())
    }

    pub fn nonzero_frac(&mut self) -> Frac {
        loop {
            let f = self.frac();
            if !f.is_zero() {
                return f;
            }
        }
    }

    pub fn group(&mut self) -> GroupElement {
        GroupElement::new(self.frac(), self.nonzero_frac())
    }

    /// Over F₂ the only candidates are (0,1) and (1,1), so the loop still
    /// terminates.
    pub fn group_nonidentity(&mut self) -> GroupElement {
        loop {
            let g = self.group();
            if !g.is_identity() {
                return g;
            }
        }
    }

    /// Monomials with a biased shape: about half satisfy the delta
    /// conditions exactly, one quarter differ only by a unit on the outer
    /// modulus (where the ring has nontrivial units), the rest are free.
    pub fn monomial(&mut self) -> CLMonomial {
        let mpp = self.nonzero();
        let m = self.nonzero();
        let n = self.element();
        match self.rng.gen_range(0..4u8) {
            0 | 1 => CLMonomial::new(mpp.clone(), n.clone(), m, n, mpp).expect("nonzero moduli"),
            2 => {
                let assoc = match self.ring {
                    RingId::Z => mpp.neg(),
                    RingId::Zi => RingElement::gauss(0, 1).mul(&mpp),
                    RingId::F2t | RingId::F2 => self.nonzero(),
                };
                CLMonomial::new(assoc, n.clone(), m, n, mpp).expect("nonzero moduli")
            }
            _ => {
                let np = self.element();
                let mp = self.nonzero();
                CLMonomial::new(mpp, n, m, np, mp).expect("nonzero moduli")
            }
        }
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        assert!(!xs.is_empty(), "cannot pick from an empty slice");
        &xs[self.rng.gen_range(0..xs.len())]
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_deterministic() {
        for ring in [RingId::Z, RingId::Zi, RingId::F2t, RingId::F2] {
            let mut a = Sampler::new(7, "relations", ring);
            let mut b = Sampler::new(7, "relations", ring);
            for _ in 0..20 {
                assert_eq!(a.element(), b.element());
                assert_eq!(a.group(), b.group());
            }
        }
    }

    #[test]
    fn streams_differ_by_suite_and_seed() {
        let mut a = Sampler::new(7, "relations", RingId::Z);
        let mut b = Sampler::new(7, "spectrum", RingId::Z);
        let mut c = Sampler::new(8, "relations", RingId::Z);
        let first: Vec<_> = (0..8).map(|_| a.element()).collect();
        let second: Vec<_> = (0..8).map(|_| b.element()).collect();
        let third: Vec<_> = (0..8).map(|_| c.element()).collect();
        assert_ne!(first, second);
        assert_ne!(first, third);
    }

    #[test]
    fn sampled_values_respect_bounds() {
        for ring in [RingId::Z, RingId::Zi, RingId::F2t, RingId::F2] {
            let mut s = Sampler::new(1, "bounds", ring);
            for _ in 0..200 {
                assert!(s.element().norm() <= 64u32.into());
                assert!(!s.nonzero().is_zero());
                assert!(!s.group_nonidentity().is_identity());
            }
        }
    }

    #[test]
    fn monomials_cover_matched_and_mismatched_deltas() {
        let mut s = Sampler::new(3, "expectation", RingId::Z);
        let mut matched = 0;
        let mut mismatched = 0;
        for _ in 0..200 {
            let x = s.monomial();
            if x.mp == x.mpp && x.n == x.np {
                matched += 1;
            } else {
                mismatched += 1;
            }
        }
        assert!(matched >= 50, "matched {}", matched);
        assert!(mismatched >= 50, "mismatched {}", mismatched);
    }
}
