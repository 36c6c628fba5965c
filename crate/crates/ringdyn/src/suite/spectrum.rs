//! The completed-ring model: counting coherent residue families against the
//! residue count of the depth modulus, separating distinct cylinders by
//! group translates, and coherence of the point action with the affine maps.

use super::{Suite, SuiteContext};
use crate::clopen::domain_set;
use crate::frac::{normal_form, Frac, GroupElement};
use crate::pmap::pi_of;
use crate::profinite::{
    coherent_family_count, rho_contains, theta_apply, Membership3, ProfiniteApprox,
};
use crate::report::{ReportBuilder, SuiteReport};
use crate::ring::RingElement;
use crate::sample::Sampler;

pub struct Spectrum;

impl Suite for Spectrum {
    fn name(&self) -> &'static str {
        "spectrum"
    }

    fn description(&self) -> &'static str {
        "coherent family counts, cylinder separation, and point-map coherence"
    }

    fn run(&self, ctx: &SuiteContext) -> SuiteReport {
        let cfg = ctx.config;
        let ring = cfg.ring;
        let mut rb = ReportBuilder::new(self.name(), ring);
        rb.param("samples", cfg.samples);
        rb.param("seed", cfg.seed);
        rb.param("depth", &cfg.depth);
        rb.param("divisors", cfg.divisors.len());
        let mut smp = Sampler::new(cfg.seed, self.name(), ring);

        // Coherent residue families over the divisor lattice are counted by
        // the residues of the depth modulus itself.
        let expected = cfg.depth.norm();
        match coherent_family_count(&cfg.divisors) {
            Ok(count) => {
                let pass = count == expected;
                rb.check(
                    "coherent-count",
                    pass,
                    1,
                    (!pass).then(|| format!("counted {count}, residue count is {expected}")),
                    None,
                );
            }
            Err(e) => rb.check("coherent-count", false, 1, Some(e.to_string()), None),
        }

        // Distinct cylinders at a shared precision are separated by the
        // integral pair naming one of them.
        if ring.is_field() {
            rb.check(
                "cylinder-separation",
                true,
                0,
                None,
                Some("vacuous: every nonzero modulus is a unit".into()),
            );
        } else {
            let mut checked = 0;
            let mut witness = None;
            for _ in 0..cfg.n_spot() {
                let mut m = smp.nonzero();
                while m.is_unit() {
                    m = smp.nonzero();
                }
                let classes = RingElement::residues(&m).expect("nonzero modulus");
                let i = smp.index(classes.len());
                let mut j = smp.index(classes.len());
                while j == i {
                    j = smp.index(classes.len());
                }
                let x = ProfiniteApprox::new(classes[i].clone(), m.clone()).unwrap();
                let y = ProfiniteApprox::new(classes[j].clone(), m.clone()).unwrap();
                let g =
                    GroupElement::new(Frac::from_ring(&classes[i]), Frac::from_ring(&m));
                checked += 2;
                if rho_contains(&x, &g) != Membership3::In
                    || rho_contains(&y, &g) != Membership3::Out
                {
                    witness = Some(format!("x = {x}, y = {y}, g = {g}"));
                    break;
                }
            }
            rb.tally("cylinder-separation", checked, witness);
        }

        // θ agrees with the affine map on integer points: the image cylinder
        // contains the mapped point.
        let mut checked = 0;
        let mut witness = None;
        let mut draws = 0u64;
        while checked < cfg.n_full() && draws < cfg.n_full() * 12 {
            draws += 1;
            let g = smp.group_nonidentity();
            let p = pi_of(&g);
            if p.domain().is_empty() {
                continue;
            }
            let nf = normal_form(&g);
            let base = p.domain().classes().iter().next().unwrap().clone();
            let r = base.add(&p.domain().modulus().mul(&smp.element()));
            let spread = p.domain().modulus().mul(&nf.m).mul(&nf.mp);
            let x = ProfiniteApprox::new(r.clone(), spread).unwrap();
            let y = p.eval(&r).expect("r lies in the domain");
            checked += 1;
            match theta_apply(&g, &x) {
                Ok(img) => {
                    if !img.as_clopen().contains(&y) {
                        witness =
                            Some(format!("g = {g}, r = {r}: image {img} misses the point {y}"));
                        break;
                    }
                }
                Err(e) => {
                    witness = Some(format!("g = {g}, x = {x}: {e}"));
                    break;
                }
            }
        }
        rb.param("theta_pi_draws", draws);
        rb.tally("theta-pi-coherence", checked, witness);

        // PA1: the identity acts as the identity.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_light() {
            let x = ProfiniteApprox::new(smp.element(), smp.nonzero()).unwrap();
            checked += 1;
            match theta_apply(&GroupElement::identity(ring), &x) {
                Ok(y) if y == x => {}
                _ => {
                    witness = Some(format!("x = {x}"));
                    break;
                }
            }
        }
        rb.tally("PA1", checked, witness);

        // PA2: the domain of a composite action is contained in the domain
        // of the product element's action.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_pairs() {
            let g = smp.group();
            let h = smp.group();
            let nfh = normal_form(&h);
            let inner = domain_set(&h).intersect(&domain_set(&g.inv()));
            let pulled = inner.affine_preimage(&nfh.m, &nfh.n, &nfh.mp);
            let lhs = domain_set(&h.inv()).intersect(&pulled);
            checked += 1;
            if !lhs.subset_of(&domain_set(&g.mul(&h).inv())) {
                witness = Some(format!("g = {g}, h = {h}"));
                break;
            }
        }
        rb.tally("PA2", checked, witness);

        // PA3: acting in two steps refines acting by the product, on points
        // carried with enough precision to decide all three actions.
        let mut checked = 0;
        let mut witness = None;
        let mut draws = 0u64;
        while checked < cfg.n_full() && draws < cfg.n_full() * 20 {
            draws += 1;
            // Unconditioned pairs rarely have a composable domain, so half
            // the draws take an integral g, whose action is defined
            // everywhere.
            let g = if draws.is_multiple_of(2) {
                smp.group()
            } else {
                GroupElement::new(Frac::from_ring(&smp.element()), Frac::from_ring(&smp.nonzero()))
            };
            let h = smp.group();
            let composite = pi_of(&g).compose(&pi_of(&h));
            if composite.domain().is_empty() {
                continue;
            }
            let r = composite.domain().classes().iter().next().unwrap().clone();
            let gh = g.mul(&h);
            let mut boost = composite.domain().modulus().clone();
            for e in [&g, &h, &gh] {
                let nf = normal_form(e);
                boost = boost.mul(&nf.m).mul(&nf.mp);
            }
            let x = ProfiniteApprox::new(r, boost).unwrap();
            checked += 1;
            let stepped = theta_apply(&h, &x).and_then(|y| theta_apply(&g, &y));
            match (stepped, theta_apply(&gh, &x)) {
                (Ok(two), Ok(one)) => {
                    if !two.refines(&one) {
                        witness = Some(format!("g = {g}, h = {h}, x = {x}"));
                        break;
                    }
                }
                (Err(e), _) | (_, Err(e)) => {
                    witness = Some(format!("g = {g}, h = {h}, x = {x}: {e}"));
                    break;
                }
            }
        }
        rb.param("pa3_draws", draws);
        rb.tally("PA3", checked, witness);

        // Membership is natural for the action: after moving the point by g,
        // membership of h matches membership of g^-1 h at the source.
        let mut checked = 0;
        let mut witness = None;
        let mut undecided = 0u64;
        let mut draws = 0u64;
        while checked < cfg.n_pairs() && draws < cfg.n_pairs() * 8 {
            draws += 1;
            let g = smp.group();
            let h = smp.group();
            let p = pi_of(&g);
            if p.domain().is_empty() {
                continue;
            }
            let nf = normal_form(&g);
            let r = p.domain().classes().iter().next().unwrap().clone();
            let prec = p.domain().modulus().mul(&nf.m).mul(&nf.mp).mul(&smp.nonzero());
            let x = ProfiniteApprox::new(r, prec).unwrap();
            let y = match theta_apply(&g, &x) {
                Ok(y) => y,
                Err(e) => {
                    checked += 1;
                    witness = Some(format!("g = {g}, x = {x}: {e}"));
                    break;
                }
            };
            let lhs = rho_contains(&y, &h);
            let rhs = rho_contains(&x, &g.inv().mul(&h));
            if lhs == Membership3::InsufficientPrecision
                || rhs == Membership3::InsufficientPrecision
            {
                undecided += 1;
                continue;
            }
            checked += 1;
            if lhs != rhs {
                witness = Some(format!("g = {g}, h = {h}, x = {x}"));
                break;
            }
        }
        rb.param("undecided_naturality_draws", undecided);
        rb.tally("rho-naturality", checked, witness);

        rb.finish()
    }
}
