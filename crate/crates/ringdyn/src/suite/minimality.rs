//! Minimality of the action on the completed ring: from any approximation a
//! pure translation reaches any nonempty congruence target, so every orbit
//! is dense among the cylinders the precision can see.

use super::{Suite, SuiteContext};
use crate::clopen::ClopenSet;
use crate::error::Error;
use crate::profinite::{orbit_translation, theta_apply, ProfiniteApprox};
use crate::report::{ReportBuilder, SuiteReport};
use crate::ring::RingElement;
use crate::sample::Sampler;

pub struct Minimality;

impl Suite for Minimality {
    fn name(&self) -> &'static str {
        "minimality"
    }

    fn description(&self) -> &'static str {
        "dense orbits: translations alone reach every congruence target"
    }

    fn run(&self, ctx: &SuiteContext) -> SuiteReport {
        let cfg = ctx.config;
        let ring = cfg.ring;
        let mut rb = ReportBuilder::new(self.name(), ring);
        rb.param("samples", cfg.samples);
        rb.param("seed", cfg.seed);
        let mut smp = Sampler::new(cfg.seed, self.name(), ring);

        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_spot() {
            let d = smp.pick(&cfg.divisors).clone();
            let mut chosen = RingElement::residues(&d).expect("nonzero divisor");
            let keep = 1 + smp.index(chosen.len());
            while chosen.len() > keep {
                let i = smp.index(chosen.len());
                chosen.remove(i);
            }
            let target = ClopenSet::from_classes(&d, chosen).expect("nonzero divisor");
            let x = ProfiniteApprox::new(smp.element(), d.mul(&smp.nonzero())).unwrap();
            checked += 1;
            let g = match orbit_translation(&x, &target) {
                Ok(g) => g,
                Err(e) => {
                    witness = Some(format!("x = {x}, target {target}: {e}"));
                    break;
                }
            };
            if !g.w().is_one() {
                witness = Some(format!("x = {x}, target {target}: non-translation {g}"));
                break;
            }
            let y = match theta_apply(&g, &x) {
                Ok(y) => y,
                Err(e) => {
                    witness = Some(format!("x = {x}, g = {g}: {e}"));
                    break;
                }
            };
            if y.precision() != x.precision() || !y.as_clopen().subset_of(&target) {
                witness = Some(format!("x = {x}, g = {g}: image {y} misses {target}"));
                break;
            }
        }
        rb.tally("orbit-reaches-target", checked, witness);

        // Declared failure modes: an empty target is refused outright, and a
        // target finer than the precision reports insufficiency.
        let coarse = ProfiniteApprox::new(ring.zero(), ring.one()).unwrap();
        let empty_refused =
            matches!(orbit_translation(&coarse, &ClopenSet::empty(ring)), Err(Error::EmptyTarget));
        rb.check(
            "empty-target-refused",
            empty_refused,
            1,
            (!empty_refused).then(|| "empty target was not refused".to_string()),
            None,
        );

        if cfg.depth.is_unit() {
            rb.check(
                "insufficient-precision-reported",
                true,
                0,
                None,
                Some("vacuous: unit depth, every precision is compatible".into()),
            );
        } else {
            let fine = ClopenSet::from_coset(&ring.zero(), &cfg.depth).expect("nonzero depth");
            let reported = matches!(
                orbit_translation(&coarse, &fine),
                Err(Error::InsufficientPrecision)
            );
            rb.check(
                "insufficient-precision-reported",
                reported,
                1,
                (!reported).then(|| "coarse point was not refused".to_string()),
                None,
            );
        }

        rb.finish()
    }
}
