//! Relations among the generating maps: multiplicativity of the scaling
//! isometries, additivity of the translations, the twist law between them,
//! and the coset partition carried by the conjugated range projections.

use super::{Suite, SuiteContext, MODULUS_NORM_BOUND};
use crate::clopen::ClopenSet;
use crate::pmap::{coset_projection, AffinePartialMap};
use crate::report::{ReportBuilder, SuiteReport};
use crate::ring::{canonical_moduli, RingElement};
use crate::sample::Sampler;
use crate::words::{eval_letters, Letter};

pub struct Relations;

impl Suite for Relations {
    fn name(&self) -> &'static str {
        "relations"
    }

    fn description(&self) -> &'static str {
        "generator relations CL1-CL4 and the coset projection algebra"
    }

    fn run(&self, ctx: &SuiteContext) -> SuiteReport {
        let cfg = ctx.config;
        let ring = cfg.ring;
        let mut rb = ReportBuilder::new(self.name(), ring);
        rb.param("samples", cfg.samples);
        rb.param("seed", cfg.seed);
        rb.param("modulus_norm_bound", MODULUS_NORM_BOUND);
        let mut smp = Sampler::new(cfg.seed, self.name(), ring);
        let moduli = canonical_moduli(ring, MODULUS_NORM_BOUND);
        rb.param("moduli", moduli.len());

        let gen_s = |m: &RingElement| AffinePartialMap::gen_s(m).expect("nonzero modulus");

        // CL1: the scaling maps multiply, S_m S_m' = S_mm'.
        let mut checked = 0;
        let mut witness = None;
        'cl1: for m in &moduli {
            let sm = gen_s(m);
            for m2 in &moduli {
                checked += 1;
                if sm.compose(&gen_s(m2)) != gen_s(&m.mul(m2)) {
                    witness = Some(format!("m = {m}, m' = {m2}"));
                    break 'cl1;
                }
            }
        }
        rb.tally("CL1", checked, witness);

        // CL2: the translations add, U^n U^n' = U^(n+n').
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_light() {
            let n = smp.element();
            let n2 = smp.element();
            checked += 1;
            let lhs = AffinePartialMap::gen_u(&n).compose(&AffinePartialMap::gen_u(&n2));
            if lhs != AffinePartialMap::gen_u(&n.add(&n2)) {
                witness = Some(format!("n = {n}, n' = {n2}"));
                break;
            }
        }
        rb.tally("CL2", checked, witness);

        // CL3: scaling twists translation, S_m U^n = U^(mn) S_m.
        let mut checked = 0;
        let mut witness = None;
        'cl3: for m in &moduli {
            let sm = gen_s(m);
            for _ in 0..cfg.n_light() {
                let n = smp.element();
                checked += 1;
                let lhs = sm.compose(&AffinePartialMap::gen_u(&n));
                let rhs = AffinePartialMap::gen_u(&m.mul(&n)).compose(&sm);
                if lhs != rhs {
                    witness = Some(format!("m = {m}, n = {n}"));
                    break 'cl3;
                }
            }
        }
        rb.tally("CL3", checked, witness);

        // CL4: for each modulus, the conjugates U^l S_m S_m* U^(-l) are the
        // coset projections onto l + (m), and those cosets partition the ring.
        let mut checked = 0;
        let mut witness = None;
        'cl4: for m in &moduli {
            let classes = RingElement::residues(m).expect("nonzero modulus");
            let mut sets = Vec::new();
            for l in &classes {
                let word = [
                    Letter::U(l.clone()),
                    Letter::S(m.clone()),
                    Letter::SStar(m.clone()),
                    Letter::U(l.neg()),
                ];
                let p = eval_letters(ring, &word).expect("nonzero letters");
                checked += 1;
                let set = match p.as_projection() {
                    Ok(set) => set,
                    Err(e) => {
                        witness = Some(format!("m = {m}, l = {l}: {e}"));
                        break 'cl4;
                    }
                };
                let coset = ClopenSet::from_coset(l, m).expect("nonzero modulus");
                if !set.equals(&coset) {
                    witness = Some(format!("m = {m}, l = {l}"));
                    break 'cl4;
                }
                sets.push(set);
            }
            checked += 1;
            let union =
                ClopenSet::from_classes(m, classes.iter().cloned()).expect("nonzero modulus");
            if !union.is_full() {
                witness = Some(format!("m = {m}: classes do not cover the ring"));
                break 'cl4;
            }
            let probe = sets.len().min(4);
            for i in 0..probe {
                for j in (i + 1)..probe {
                    checked += 1;
                    if !sets[i].intersect(&sets[j]).is_empty() {
                        witness = Some(format!("m = {m}: {} meets {}", sets[i], sets[j]));
                        break 'cl4;
                    }
                }
            }
        }
        rb.tally("CL4", checked, witness);

        // The same projections through the two-sided product route: the range
        // projection of the (l, m) pair is the coset set, exhaustively.
        let mut checked = 0;
        let mut witness = None;
        'proj: for m in &moduli {
            for l in RingElement::residues(m).expect("nonzero modulus") {
                checked += 1;
                let ok = coset_projection(&l, m)
                    .as_projection()
                    .map(|set| {
                        set.equals(&ClopenSet::from_coset(&l, m).expect("nonzero modulus"))
                    })
                    .unwrap_or(false);
                if !ok {
                    witness = Some(format!("m = {m}, l = {l}"));
                    break 'proj;
                }
            }
        }
        rb.tally("coset-projection", checked, witness);

        // Coset sets depend only on the coset, not the written representative.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_light() {
            let m = smp.nonzero();
            let l = smp.element();
            let k = smp.element();
            checked += 1;
            let shifted = ClopenSet::from_coset(&l.add(&k.mul(&m)), &m).expect("m nonzero");
            if !shifted.equals(&ClopenSet::from_coset(&l, &m).expect("m nonzero")) {
                witness = Some(format!("l = {l}, k = {k}, m = {m}"));
                break;
            }
        }
        rb.tally("coset-rep-independence", checked, witness);

        // Coset projections commute.
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..cfg.n_pairs() {
            let (n1, m1) = (smp.element(), smp.nonzero());
            let (n2, m2) = (smp.element(), smp.nonzero());
            let p = coset_projection(&n1, &m1);
            let q = coset_projection(&n2, &m2);
            checked += 1;
            if p.compose(&q) != q.compose(&p) {
                witness = Some(format!("({n1}, {m1}) vs ({n2}, {m2})"));
                break;
            }
        }
        rb.tally("projections-commute", checked, witness);

        rb.finish()
    }
}
