//! The two conditional expectations onto the diagonal: the word-level one
//! keeps a group word exactly when its product is the identity, the
//! monomial-level one keeps a five-parameter monomial exactly when its halves
//! match literally, and evaluation intertwines them.

use super::{Suite, SuiteContext};
use crate::frac::GroupElement;
use crate::report::{ReportBuilder, SuiteReport};
use crate::ring::{RingElement, RingId};
use crate::sample::Sampler;
use crate::words::{check_ce_intertwine, expectation_e, expectation_theta, CLMonomial, GroupWord};

pub struct Expectation;

impl Suite for Expectation {
    fn name(&self) -> &'static str {
        "expectation"
    }

    fn description(&self) -> &'static str {
        "diagonal conditional expectations and their intertwining law"
    }

    fn run(&self, ctx: &SuiteContext) -> SuiteReport {
        let cfg = ctx.config;
        let ring = cfg.ring;
        let mut rb = ReportBuilder::new(self.name(), ring);
        rb.param("samples", cfg.samples);
        rb.param("seed", cfg.seed);
        rb.param("delta_convention", "literal modulus equality; associate pairs fall to zero");
        let mut smp = Sampler::new(cfg.seed, self.name(), ring);

        // E keeps a word exactly when its product is the identity, and is
        // idempotent on what it keeps.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_light() {
            let mut letters = vec![smp.group()];
            for _ in 0..smp.index(3) {
                letters.push(smp.group());
            }
            if smp.coin() {
                let inverses: Vec<GroupElement> =
                    letters.iter().rev().map(GroupElement::inv).collect();
                letters.extend(inverses);
            }
            let w = GroupWord::new(letters);
            let product_is_identity = w.product(ring).is_identity();
            let kept = expectation_e(ring, &w);
            checked += 1;
            if kept.is_some() != product_is_identity {
                witness = Some(format!("word {w}"));
                break;
            }
            if let Some(kw) = kept {
                checked += 1;
                if expectation_e(ring, &kw).as_ref() != Some(&kw) {
                    witness = Some(format!("not idempotent on {w}"));
                    break;
                }
            }
        }
        rb.tally("E-diagonal", checked, witness);

        // The monomial expectation keeps exactly the literally matched
        // monomials and is idempotent on them.
        let mut checked = 0;
        let mut witness = None;
        let mut kept_count = 0u64;
        for _ in 0..cfg.n_light() {
            let x = smp.monomial();
            let matched = x.mp == x.mpp && x.n == x.np;
            checked += 1;
            match expectation_theta(&x) {
                Some(kept) => {
                    kept_count += 1;
                    checked += 1;
                    if !matched || expectation_theta(&kept) != Some(kept.clone()) {
                        witness = Some(format!("monomial {x}"));
                        break;
                    }
                }
                None => {
                    if matched {
                        witness = Some(format!("monomial {x}"));
                        break;
                    }
                }
            }
        }
        rb.param("theta_kept", kept_count);
        rb.tally("Theta-diagonal", checked, witness);

        // Associate canary: halves that differ by a non-identity unit are
        // dropped, and both intertwine routes then agree on zero.
        let unit = match ring {
            RingId::Z => Some(ring.one().neg()),
            RingId::Zi => Some(RingElement::gauss(0, 1)),
            RingId::F2t | RingId::F2 => None,
        };
        match unit {
            Some(u) => {
                let mut checked = 0;
                let mut witness = None;
                for _ in 0..cfg.n_light() {
                    let n = smp.element();
                    let m = smp.nonzero();
                    let mp = smp.nonzero();
                    let x = CLMonomial::new(mp.mul(&u), n.clone(), m, n, mp)
                        .expect("nonzero moduli");
                    let out = check_ce_intertwine(&x);
                    checked += 1;
                    if expectation_theta(&x).is_some()
                        || !out.pass
                        || !out.lhs.is_zero()
                        || !out.rhs.is_zero()
                    {
                        witness = Some(format!("monomial {x}"));
                        break;
                    }
                }
                rb.tally("associate-canary", checked, witness);
            }
            None => {
                rb.check(
                    "associate-canary",
                    true,
                    0,
                    None,
                    Some("vacuous: the only unit is 1".into()),
                );
            }
        }

        // Intertwine on sampled monomials, drawing until both the total and
        // the modulus-mismatch quotas are met.
        let need = cfg.n_pairs();
        let need_mismatch = need / 4;
        let mut checked = 0;
        let mut witness = None;
        let mut mismatched = 0u64;
        let mut draws = 0u64;
        while (checked < need || mismatched < need_mismatch) && draws < need * 20 {
            draws += 1;
            let x = smp.monomial();
            let out = check_ce_intertwine(&x);
            checked += 1;
            if !out.delta_matched {
                mismatched += 1;
            }
            if !out.pass {
                witness = Some(format!("monomial {x}"));
                break;
            }
        }
        if witness.is_none() && mismatched < need_mismatch {
            witness = Some(format!(
                "only {mismatched} modulus-mismatched monomials in {draws} draws"
            ));
        }
        rb.param("delta_mismatched", mismatched);
        rb.tally("CE-intertwine", checked, witness);

        rb.finish()
    }
}
