//! Axioms of the partial representation of the affine group by partial
//! isometries, and the single-generator relations it restricts to.

use super::{Suite, SuiteContext, MODULUS_NORM_BOUND};
use crate::clopen::ClopenSet;
use crate::frac::{normal_form, to_group, Frac, GroupElement};
use crate::pmap::{coset_projection, pi_of, AffinePartialMap};
use crate::report::{ReportBuilder, SuiteReport};
use crate::ring::{canonical_moduli, RingElement};
use crate::sample::Sampler;
use crate::words::{eval_letters, Letter};

pub struct PartialRep;

impl Suite for PartialRep {
    fn name(&self) -> &'static str {
        "partial-rep"
    }

    fn description(&self) -> &'static str {
        "partial representation axioms PR1-PR3 and the relations R1-R3"
    }

    fn run(&self, ctx: &SuiteContext) -> SuiteReport {
        let cfg = ctx.config;
        let ring = cfg.ring;
        let mut rb = ReportBuilder::new(self.name(), ring);
        rb.param("samples", cfg.samples);
        rb.param("seed", cfg.seed);
        let mut smp = Sampler::new(cfg.seed, self.name(), ring);

        // PR1: the identity maps to the identity.
        let pr1 = pi_of(&GroupElement::identity(ring)).is_identity();
        rb.check(
            "PR1",
            pr1,
            1,
            (!pr1).then(|| "identity element maps to a non-identity map".into()),
            None,
        );

        // PR2: inverses map to adjoints.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_full() {
            let g = smp.group();
            checked += 1;
            if pi_of(&g.inv()) != pi_of(&g).adjoint() {
                witness = Some(format!("g = {g}"));
                break;
            }
        }
        rb.tally("PR2", checked, witness);

        // PR3: the composition law against a right inverse factor.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_full() {
            let g = smp.group();
            let h = smp.group();
            let hinv = pi_of(&h.inv());
            checked += 1;
            let lhs = pi_of(&g).compose(&pi_of(&h)).compose(&hinv);
            let rhs = pi_of(&g.mul(&h)).compose(&hinv);
            if lhs != rhs {
                witness = Some(format!("g = {g}, h = {h}"));
                break;
            }
        }
        rb.tally("PR3", checked, witness);

        // R1: the unit-modulus coset projection is the identity.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_light() {
            let n = smp.element();
            checked += 1;
            if !coset_projection(&n, &ring.one()).is_identity() {
                witness = Some(format!("n = {n}"));
                break;
            }
        }
        rb.tally("R1", checked, witness);

        // R2: pure inverse scalings are coisometries, the image of (0, 1/m)
        // composed with its adjoint is the identity.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_light() {
            let m = smp.nonzero();
            let g = GroupElement::new(Frac::zero(ring), Frac::new(&ring.one(), &m));
            let p = pi_of(&g);
            checked += 1;
            if !p.compose(&p.adjoint()).is_identity() {
                witness = Some(format!("m = {m}"));
                break;
            }
        }
        rb.tally("R2", checked, witness);

        // R3: for a fixed modulus the coset projections are orthogonal and
        // sum to the identity, i.e. their ranges partition the ring.
        let moduli = canonical_moduli(ring, MODULUS_NORM_BOUND);
        let mut checked = 0;
        let mut witness = None;
        'r3: for _ in 0..cfg.n_light() {
            let m = smp.pick(&moduli).clone();
            let classes = RingElement::residues(&m).expect("nonzero modulus");
            let mut union = ClopenSet::empty(ring);
            let mut projections = Vec::new();
            for l in &classes {
                let p = coset_projection(l, &m);
                match p.as_projection() {
                    Ok(set) => {
                        union = union.union(&set);
                        projections.push(p);
                    }
                    Err(e) => {
                        witness = Some(format!("m = {m}, l = {l}: {e}"));
                        break 'r3;
                    }
                }
            }
            checked += 1;
            if !union.is_full() {
                witness = Some(format!("m = {m}: union misses the ring"));
                break;
            }
            if projections.len() >= 2 {
                checked += 1;
                if !projections[0].compose(&projections[1]).is_zero() {
                    witness = Some(format!("m = {m}: distinct cosets overlap"));
                    break;
                }
            }
        }
        rb.tally("R3", checked, witness);

        // The five-letter word built from any pair of scaled fraction
        // representations collapses to the map of the group element.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_spot() {
            let g = smp.group();
            let nf = normal_form(&g);
            let k1 = smp.nonzero();
            let k2 = smp.nonzero();
            let word = [
                Letter::SStar(k1.mul(&nf.mp)),
                Letter::U(k1.mul(&nf.n)),
                Letter::SStar(k2.mul(&nf.mp)),
                Letter::S(k1.mul(&nf.mp)),
                Letter::S(k2.mul(&nf.m)),
            ];
            checked += 1;
            if eval_letters(ring, &word).expect("nonzero letters") != pi_of(&g) {
                witness = Some(format!("g = {g}, k1 = {k1}, k2 = {k2}"));
                break;
            }
        }
        rb.tally("pi-well-defined", checked, witness);

        // Every image is a partial isometry.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_pairs() {
            let g = smp.group();
            let p = pi_of(&g);
            checked += 1;
            if p.compose(&p.adjoint()).compose(&p) != p {
                witness = Some(format!("g = {g}"));
                break;
            }
        }
        rb.tally("partial-isometry", checked, witness);

        // Restricting to integral translations, pure scalings, and reduced
        // triples recovers the single generators and the three-letter word.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_pairs() {
            let n = smp.element();
            let m = smp.nonzero();
            let mp = smp.nonzero();
            checked += 1;
            let u_ok = pi_of(&GroupElement::new(Frac::from_ring(&n), Frac::one(ring)))
                == AffinePartialMap::gen_u(&n);
            let s_ok = pi_of(&GroupElement::new(Frac::zero(ring), Frac::from_ring(&m)))
                == AffinePartialMap::gen_s(&m).expect("m nonzero");
            let g = to_group(&n, &m, &mp).expect("nonzero denominators");
            let word = [Letter::SStar(mp.clone()), Letter::U(n.clone()), Letter::S(m.clone())];
            let w_ok = eval_letters(ring, &word).expect("nonzero letters") == pi_of(&g);
            if !(u_ok && s_ok && w_ok) {
                witness = Some(format!("n = {n}, m = {m}, m' = {mp}"));
                break;
            }
        }
        rb.tally("generator-roundtrip", checked, witness);

        rb.finish()
    }
}
