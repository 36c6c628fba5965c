//! Topological freeness of the action: every non-identity group element is
//! certified to move some refined cylinder inside each basic cylinder that
//! meets its domain, and the certificates are re-verified independently.

use super::{Suite, SuiteContext};
use crate::clopen::{domain_set, ClopenSet};
use crate::error::Error;
use crate::frac::{Frac, GroupElement};
use crate::profinite::{certify_not_fixed, theta_apply, FreenessWitness, ProfiniteApprox};
use crate::report::{ReportBuilder, SuiteReport};
use crate::ring::RingElement;
use crate::sample::Sampler;

pub struct Freeness;

/// Re-derive the witness claims without trusting the search: containment in
/// the base cylinder and its coset, the exact θ image, and disjointness of
/// source and image read off from the gcd of the two precisions.
fn recheck_witness(
    g: &GroupElement,
    base: &ProfiniteApprox,
    coset: (&RingElement, &RingElement),
    w: &FreenessWitness,
) -> std::result::Result<(), String> {
    if !w.refined.refines(base) {
        return Err("refined cylinder left the base cylinder".into());
    }
    let (c, d) = coset;
    match w.refined.component(d) {
        Ok(r) if &r == c => {}
        Ok(r) => return Err(format!("refined cylinder sits in {r} + ({d})")),
        Err(e) => return Err(e.to_string()),
    }
    match theta_apply(g, &w.refined) {
        Ok(img) if img == w.image => {}
        Ok(img) => return Err(format!("θ image is {img}, witness claims {}", w.image)),
        Err(e) => return Err(format!("θ undefined on the witness: {e}")),
    }
    let g0 = w.refined.precision().gcd(w.image.precision()).expect("nonzero precisions");
    if g0.divides(&w.refined.residue().sub(w.image.residue())) {
        return Err("witness cylinders are not provably disjoint".into());
    }
    Ok(())
}

impl Suite for Freeness {
    fn name(&self) -> &'static str {
        "freeness"
    }

    fn description(&self) -> &'static str {
        "certified moved cylinders inside every basic cylinder, per non-identity element"
    }

    fn run(&self, ctx: &SuiteContext) -> SuiteReport {
        let cfg = ctx.config;
        let ring = cfg.ring;
        let mut rb = ReportBuilder::new(self.name(), ring);
        rb.param("samples", cfg.samples);
        rb.param("seed", cfg.seed);
        rb.param("depth", &cfg.depth);
        let mut smp = Sampler::new(cfg.seed, self.name(), ring);

        if ring.is_field() {
            let g = GroupElement::new(Frac::one(ring), Frac::one(ring));
            let x = ProfiniteApprox::new(ring.zero(), ring.one()).unwrap();
            let refused = matches!(certify_not_fixed(&g, &x), Err(Error::FieldDegenerate));
            rb.check(
                "freeness-degenerate",
                refused,
                1,
                (!refused).then(|| "expected the field-degenerate refusal".to_string()),
                Some("degenerate: field, R-hat is a point".into()),
            );
            return rb.finish();
        }

        let mut checked = 0;
        let mut witness = None;
        let mut trivially_free = 0u64;
        let mut max_level = 0u32;
        'outer: for _ in 0..cfg.n_spot() {
            let g = smp.group_nonidentity();
            let dom = domain_set(&g.inv());
            for d in &cfg.divisors {
                for c in RingElement::residues(d).expect("nonzero divisor") {
                    let cyl = ClopenSet::from_coset(&c, d).expect("nonzero divisor");
                    let v = cyl.intersect(&dom);
                    if v.is_empty() {
                        trivially_free += 1;
                        continue;
                    }
                    let base = ProfiniteApprox::new(
                        v.classes().iter().next().unwrap().clone(),
                        v.modulus().clone(),
                    )
                    .expect("nonzero modulus");
                    checked += 1;
                    match certify_not_fixed(&g, &base) {
                        Ok(w) => {
                            max_level = max_level.max(w.level);
                            if let Err(msg) = recheck_witness(&g, &base, (&c, d), &w) {
                                witness = Some(format!("g = {g}, cylinder {c} + ({d}): {msg}"));
                                break 'outer;
                            }
                        }
                        Err(e) => {
                            witness = Some(format!("g = {g}, cylinder {c} + ({d}): {e}"));
                            break 'outer;
                        }
                    }
                }
            }
        }
        rb.param("trivially_free_cylinders", trivially_free);
        rb.param("max_refinement_level", max_level);
        let note = (max_level > 1).then(|| format!("deepest witness search used level {max_level}"));
        rb.check("freeness-witness", witness.is_none(), checked, witness, note);
        rb.finish()
    }
}
