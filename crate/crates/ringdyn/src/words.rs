//! Words in the generators, formal group words, and the two conditional
//! expectations (the group-side delta expectation E and the monomial-side
//! expectation on five-parameter monomials), together with the intertwining
//! check connecting them.

use crate::error::{Error, Result};
use crate::frac::{Frac, GroupElement};
use crate::pmap::{pi_of, AffinePartialMap};
use crate::ring::{RingElement, RingId};
use std::fmt;

/// One letter of a generator word: S(m) = r ↦ m·r, its adjoint S*(m), or
/// the translation U(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Letter {
    S(RingElement),
    SStar(RingElement),
    U(RingElement),
}

impl Letter {
    pub fn map(&self) -> Result<AffinePartialMap> {
        Ok(match self {
            Letter::S(m) => AffinePartialMap::gen_s(m)?,
            Letter::SStar(m) => AffinePartialMap::gen_s(m)?.adjoint(),
            Letter::U(n) => AffinePartialMap::gen_u(n),
        })
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::S(m) => write!(f, "S({})", m),
            Letter::SStar(m) => write!(f, "S*({})", m),
            Letter::U(n) => write!(f, "U({})", n),
        }
    }
}

/// Evaluate a generator word as an operator product, rightmost letter
/// applied first. The empty word is the identity.
pub fn eval_letters(ring: RingId, letters: &[Letter]) -> Result<AffinePartialMap> {
    let mut acc = AffinePartialMap::identity(ring);
    for letter in letters {
        acc = acc.compose(&letter.map()?);
    }
    Ok(acc)
}

/// A formal product of group letters [g₁][g₂]⋯[g_k], evaluated through π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupWord {
    pub letters: Vec<GroupElement>,
}

impl GroupWord {
    pub fn new(letters: Vec<GroupElement>) -> GroupWord {
        GroupWord { letters }
    }

    pub fn product(&self, ring: RingId) -> GroupElement {
        self.letters
            .iter()
            .fold(GroupElement::identity(ring), |acc, g| acc.mul(g))
    }

    pub fn eval(&self, ring: RingId) -> AffinePartialMap {
        self.letters
            .iter()
            .fold(AffinePartialMap::identity(ring), |acc, g| acc.compose(&pi_of(g)))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "[]");
        }
        for g in &self.letters {
            write!(f, "[{}]", g)?;
        }
        Ok(())
    }
}

/// The five-parameter monomial S*(m'') U(n) S(m) S*(m) U(-n') S(m'), the
/// general word shape the monomial expectation acts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CLMonomial {
    pub mpp: RingElement,
    pub n: RingElement,
    pub m: RingElement,
    pub np: RingElement,
    pub mp: RingElement,
}

impl CLMonomial {
    pub fn new(
        mpp: RingElement,
        n: RingElement,
        m: RingElement,
        np: RingElement,
        mp: RingElement,
    ) -> Result<CLMonomial> {
        if mpp.is_zero() || m.is_zero() || mp.is_zero() {
            return Err(Error::ZeroModulus);
        }
        Ok(CLMonomial { mpp, n, m, np, mp })
    }

    pub fn ring(&self) -> RingId {
        self.m.ring()
    }

    pub fn word(&self) -> Vec<Letter> {
        vec![
            Letter::SStar(self.mpp.clone()),
            Letter::U(self.n.clone()),
            Letter::S(self.m.clone()),
            Letter::SStar(self.m.clone()),
            Letter::U(self.np.neg()),
            Letter::S(self.mp.clone()),
        ]
    }

    pub fn eval(&self) -> AffinePartialMap {
        eval_letters(self.ring(), &self.word()).expect("moduli nonzero")
    }

    /// The two-letter group word this monomial maps to on the group side:
    /// [(n/m'', m/m'')] [(-n'/m, m'/m)].
    pub fn group_word(&self) -> GroupWord {
        let g1 = GroupElement::new(
            Frac::new(&self.n, &self.mpp),
            Frac::new(&self.m, &self.mpp),
        );
        let g2 = GroupElement::new(
            Frac::new(&self.np.neg(), &self.m),
            Frac::new(&self.mp, &self.m),
        );
        GroupWord::new(vec![g1, g2])
    }

    /// Parse the comma tuple "m'',n,m,n',m'" in the ring's element syntax.
    pub fn parse(ring: RingId, input: &str) -> Result<CLMonomial> {
        let parts: Vec<&str> = input.split(',').collect();
        if parts.len() != 5 {
            return Err(Error::parse(input, 0, "expected five comma-separated entries"));
        }
        let vals: Vec<RingElement> = parts
            .iter()
            .map(|p| RingElement::parse(ring, p))
            .collect::<Result<_>>()?;
        CLMonomial::new(
            vals[0].clone(),
            vals[1].clone(),
            vals[2].clone(),
            vals[3].clone(),
            vals[4].clone(),
        )
    }
}

impl fmt::Display for CLMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.mpp, self.n, self.m, self.np, self.mp)
    }
}

/// E on formal words: keep the word exactly when the group product of its
/// letters is the identity, otherwise the result is zero (None).
pub fn expectation_e(ring: RingId, w: &GroupWord) -> Option<GroupWord> {
    if w.product(ring).is_identity() {
        Some(w.clone())
    } else {
        None
    }
}

/// The monomial expectation: keep the monomial exactly when m' = m'' and
/// n = n' as ring elements, else zero. Literal equality (not equality up to
/// units) is required: on the group side the product of the two word letters
/// is ((n-n')/m'', m'/m''), which is the identity only under literal
/// equality, and associate-but-distinct moduli must be sent to zero for the
/// two expectations to intertwine.
pub fn expectation_theta(x: &CLMonomial) -> Option<CLMonomial> {
    if x.mp == x.mpp && x.n == x.np {
        Some(x.clone())
    } else {
        None
    }
}

/// Result of evaluating both expectation routes on one monomial.
pub struct IntertwineOutcome {
    pub pass: bool,
    pub delta_matched: bool,
    pub lhs: AffinePartialMap,
    pub rhs: AffinePartialMap,
}

/// Evaluate E after the group-side image of the monomial and the monomial
/// expectation followed by word evaluation, and compare the resulting maps.
pub fn check_ce_intertwine(x: &CLMonomial) -> IntertwineOutcome {
    let ring = x.ring();
    let lhs = match expectation_e(ring, &x.group_word()) {
        None => AffinePartialMap::zero(ring),
        Some(w) => w.eval(ring),
    };
    let (rhs, delta_matched) = match expectation_theta(x) {
        None => (AffinePartialMap::zero(ring), false),
        Some(y) => (y.eval(), true),
    };
    IntertwineOutcome { pass: lhs == rhs, delta_matched, lhs, rhs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clopen::ClopenSet;
    use crate::frac::to_group;

    fn z(v: i64) -> RingElement {
        RingElement::int(v)
    }

    fn zmono(mpp: i64, n: i64, m: i64, np: i64, mp: i64) -> CLMonomial {
        CLMonomial::new(z(mpp), z(n), z(m), z(np), z(mp)).unwrap()
    }

    #[test]
    fn empty_word_is_identity() {
        assert!(eval_letters(RingId::Z, &[]).unwrap().is_identity());
        let e = GroupWord::new(vec![]);
        assert!(e.product(RingId::Z).is_identity());
        assert!(expectation_e(RingId::Z, &e).is_some());
    }

    #[test]
    fn word_evaluation_examples() {
        let w = [Letter::SStar(z(2)), Letter::U(z(1)), Letter::S(z(3))];
        let m = eval_letters(RingId::Z, &w).unwrap();
        assert_eq!(m.coeffs(), (&z(3), &z(1), &z(2)));
        assert!(m.domain().equals(&ClopenSet::from_coset(&z(1), &z(2)).unwrap()));
        let e2 = eval_letters(RingId::Z, &[Letter::S(z(2)), Letter::SStar(z(2))]).unwrap();
        assert!(e2.is_projection());
        assert!(e2.as_projection().unwrap().equals(&ClopenSet::from_coset(&z(0), &z(2)).unwrap()));
    }

    #[test]
    fn group_word_matches_generator_word() {
        let g = to_group(&z(1), &z(3), &z(2)).unwrap();
        let via_pi = GroupWord::new(vec![g]).eval(RingId::Z);
        let via_letters =
            eval_letters(RingId::Z, &[Letter::SStar(z(2)), Letter::U(z(1)), Letter::S(z(3))])
                .unwrap();
        assert_eq!(via_pi, via_letters);
    }

    #[test]
    fn expectation_e_examples() {
        let g = to_group(&z(2), &z(1), &z(1)).unwrap(); // (2, 1)
        let w = GroupWord::new(vec![g.clone(), g.inv()]);
        assert!(expectation_e(RingId::Z, &w).is_some());
        let alone = GroupWord::new(vec![g]);
        assert!(expectation_e(RingId::Z, &alone).is_none());
    }

    #[test]
    fn expectation_theta_examples() {
        assert!(expectation_theta(&zmono(1, 0, 1, 0, 1)).is_some());
        assert!(expectation_theta(&zmono(2, 1, 3, 1, 2)).is_some());
        assert!(expectation_theta(&zmono(2, 1, 3, 1, 5)).is_none());
        assert!(expectation_theta(&zmono(2, 1, 3, 2, 2)).is_none());
    }

    #[test]
    fn intertwine_identity_monomial() {
        let out = check_ce_intertwine(&zmono(1, 0, 1, 0, 1));
        assert!(out.pass);
        assert!(out.lhs.is_identity() && out.rhs.is_identity());
    }

    #[test]
    fn intertwine_projection_case() {
        // Both routes produce the projection onto {r : 2r ≡ 1 (mod 3)}.
        let out = check_ce_intertwine(&zmono(2, 1, 3, 1, 2));
        assert!(out.pass);
        let expected = ClopenSet::from_coset(&z(2), &z(3)).unwrap();
        assert!(out.lhs.as_projection().unwrap().equals(&expected));
        assert!(out.rhs.as_projection().unwrap().equals(&expected));
    }

    #[test]
    fn intertwine_mismatch_is_zero_on_both_sides() {
        let out = check_ce_intertwine(&zmono(2, 1, 3, 1, 5));
        assert!(out.pass);
        assert!(out.lhs.is_zero() && out.rhs.is_zero());
        assert!(!out.delta_matched);
    }

    #[test]
    fn associate_moduli_are_distinct_for_the_delta() {
        // m' = 2 and m'' = -2 are associates but not equal; the group-side
        // product is (0, -1) ≠ e, so both routes must give zero even though
        // the monomial itself evaluates to a nonzero map (r ↦ -r on 2+(3)).
        let x = zmono(-2, 1, 3, 1, 2);
        let direct = x.eval();
        assert!(!direct.is_zero());
        assert_eq!(direct.coeffs().0, &z(-1));
        let out = check_ce_intertwine(&x);
        assert!(out.pass);
        assert!(out.lhs.is_zero() && out.rhs.is_zero());
    }

    #[test]
    fn parse_monomial_tuple() {
        let x = CLMonomial::parse(RingId::Z, "2,1,3,1,5").unwrap();
        assert_eq!(x, zmono(2, 1, 3, 1, 5));
        assert!(CLMonomial::parse(RingId::Z, "2,1,3").is_err());
        assert!(CLMonomial::parse(RingId::Z, "0,1,3,1,5").is_err());
        let gi = CLMonomial::parse(RingId::Zi, "1+i,0,2,0,1+i").unwrap();
        assert_eq!(gi.mpp, RingElement::gauss(1, 1));
    }

    #[test]
    fn e_is_idempotent_on_samples() {
        let g = to_group(&z(1), &z(3), &z(2)).unwrap();
        let words = [
            GroupWord::new(vec![g.clone(), g.inv()]),
            GroupWord::new(vec![g.clone()]),
            GroupWord::new(vec![g.clone(), g.clone(), g.mul(&g).inv()]),
        ];
        for w in words {
            let once = expectation_e(RingId::Z, &w);
            match once {
                None => {}
                Some(kept) => {
                    assert_eq!(expectation_e(RingId::Z, &kept), Some(kept.clone()));
                    assert_eq!(kept, w);
                }
            }
        }
    }

    #[test]
    fn direct_monomial_evaluation_check() {
        // S*(2) U(1) S(3) S*(3) U(-1) S(2) acts as the identity on the
        // solutions of 3 | 2r - 1 ... stepwise: r ↦ 2r ↦ 2r-1, divide by 3
        // where possible, multiply back, add 1, halve.
        let x = zmono(2, 1, 3, 1, 2);
        let m = x.eval();
        assert!(m.is_projection());
        assert!(m
            .as_projection()
            .unwrap()
            .equals(&ClopenSet::from_coset(&z(2), &z(3)).unwrap()));
    }
}
