//! Run configuration: ring, depth modulus (kept with its factorization as
//! written so the divisor lattice can be enumerated without factoring),
//! sample scaling, seed, and output mode.

use crate::error::{Error, Result};
use crate::ring::{RingElement, RingId};
use std::collections::BTreeSet;

const DIVISOR_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Json,
    Text,
}

impl OutputMode {
    pub fn from_token(s: &str) -> Option<OutputMode> {
        match s {
            "json" => Some(OutputMode::Json),
            "text" => Some(OutputMode::Text),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub ring: RingId,
    /// Product of `depth_factors`, unit-normalized.
    pub depth: RingElement,
    pub depth_factors: Vec<RingElement>,
    /// Unit-normalized, divisor-closed, sorted by (norm, value). Falls back
    /// to {1, depth} when the written factorization does not yield a
    /// gcd-closed lattice.
    pub divisors: Vec<RingElement>,
    pub samples: u64,
    pub seed: u64,
    pub output: OutputMode,
}

pub fn default_depth(ring: RingId) -> &'static str {
    match ring {
        RingId::Z => "2^3*3^2*5",
        RingId::Zi => "(1+i)^3*3",
        RingId::F2t => "t^3*(t+1)^2",
        RingId::F2 => "1",
    }
}

impl RunConfig {
    pub fn build(
        ring: RingId,
        depth_expr: Option<&str>,
        samples: u64,
        seed: u64,
        output: OutputMode,
    ) -> Result<RunConfig> {
        if samples == 0 {
            return Err(Error::parse("--samples", 0, "samples must be positive"));
        }
        let expr = depth_expr.unwrap_or_else(|| default_depth(ring));
        let depth_factors = parse_depth(ring, expr)?;
        let mut depth = ring.one();
        for f in &depth_factors {
            depth = depth.mul(f);
        }
        let depth = depth.unit_normalize().0;
        let divisors = derive_divisors(ring, &depth_factors, &depth);
        Ok(RunConfig { ring, depth, depth_factors, divisors, samples, seed, output })
    }

    pub fn n_full(&self) -> u64 {
        self.samples
    }

    pub fn n_pairs(&self) -> u64 {
        (self.samples * 2 / 5).max(1)
    }

    pub fn n_spot(&self) -> u64 {
        (self.samples / 5).max(1)
    }

    pub fn n_light(&self) -> u64 {
        self.samples.div_ceil(10)
    }
}

/// Parse a depth expression: factors separated by top-level '*', each either
/// an element literal, a parenthesized literal, or base^k with a decimal
/// exponent (expanded to k copies). A '^' that does not announce a decimal
/// exponent falls back to the ring's own literal syntax, so "t^3+t" is one
/// factor while "t^3" is three.
pub fn parse_depth(ring: RingId, expr: &str) -> Result<Vec<RingElement>> {
    let s = expr.trim();
    if s.is_empty() {
        return Err(Error::parse(expr, 0, "empty depth expression"));
    }
    let mut factors = Vec::new();
    for piece in split_top_level(s, '*') {
        let piece_trim = piece.trim();
        if piece_trim.is_empty() {
            return Err(Error::parse(expr, 0, "empty factor in depth expression"));
        }
        let (base, count) = match split_power(piece_trim) {
            Some((base, exp)) => (base, exp),
            None => (piece_trim, 1),
        };
        let literal = base
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(base)
            .trim();
        let elem = RingElement::parse(ring, literal)?;
        if elem.is_zero() {
            return Err(Error::parse(expr, 0, "zero depth"));
        }
        for _ in 0..count {
            factors.push(elem.clone());
        }
    }
    Ok(factors)
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn split_power(piece: &str) -> Option<(&str, u32)> {
    let mut depth = 0usize;
    for (i, ch) in piece.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '^' if depth == 0 => {
                let exp = piece[i + 1..].trim();
                if let Ok(k) = exp.parse::<u32>() {
                    if k >= 1 {
                        return Some((&piece[..i], k));
                    }
                }
                return None;
            }
            _ => {}
        }
    }
    None
}

/// All distinct unit-normalized subproducts of the factor multiset, when
/// they form a gcd-closed lattice; otherwise the trivial chain {1, depth}.
fn derive_divisors(
    ring: RingId,
    factors: &[RingElement],
    depth: &RingElement,
) -> Vec<RingElement> {
    let mut grouped: Vec<(RingElement, u32)> = Vec::new();
    for f in factors {
        let c = f.unit_normalize().0;
        match grouped.iter_mut().find(|(g, _)| *g == c) {
            Some((_, k)) => *k += 1,
            None => grouped.push((c, 1)),
        }
    }
    let mut set: BTreeSet<RingElement> = BTreeSet::new();
    set.insert(ring.one());
    for (base, count) in &grouped {
        let snapshot: Vec<RingElement> = set.iter().cloned().collect();
        for d in snapshot {
            let mut acc = d;
            for _ in 0..*count {
                acc = acc.mul(base).unit_normalize().0;
                set.insert(acc.clone());
                if set.len() > DIVISOR_CAP {
                    return fallback(ring, depth);
                }
            }
        }
    }
    let divisors: Vec<RingElement> = {
        let mut v: Vec<RingElement> = set.iter().cloned().collect();
        v.sort_by_key(|d| (d.norm(), d.clone()));
        v
    };
    for i in 0..divisors.len() {
        for j in (i + 1)..divisors.len() {
            let g = divisors[i]
                .gcd(&divisors[j])
                .expect("nonzero divisors")
                .unit_normalize()
                .0;
            if !set.contains(&g) {
                return fallback(ring, depth);
            }
        }
    }
    divisors
}

fn fallback(ring: RingId, depth: &RingElement) -> Vec<RingElement> {
    let mut v = vec![ring.one()];
    if !depth.is_one() {
        v.push(depth.clone());
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(ring: RingId, depth: &str) -> RunConfig {
        RunConfig::build(ring, Some(depth), 500, 7, OutputMode::Json).unwrap()
    }

    #[test]
    fn default_depth_z_yields_full_divisor_lattice() {
        let c = RunConfig::build(RingId::Z, None, 500, 7, OutputMode::Json).unwrap();
        assert_eq!(c.depth, RingElement::int(360));
        assert_eq!(c.depth_factors.len(), 6);
        assert_eq!(c.divisors.len(), 24);
        assert_eq!(c.divisors.first(), Some(&RingElement::int(1)));
        assert_eq!(c.divisors.last(), Some(&RingElement::int(360)));
    }

    #[test]
    fn default_depth_zi() {
        let c = RunConfig::build(RingId::Zi, None, 500, 7, OutputMode::Json).unwrap();
        assert_eq!(c.depth, RingElement::gauss(6, 6));
        let expected: Vec<RingElement> = [
            (1, 0),
            (1, 1),
            (2, 0),
            (2, 2),
            (3, 0),
            (3, 3),
            (6, 0),
            (6, 6),
        ]
        .iter()
        .map(|&(a, b)| RingElement::gauss(a, b))
        .collect();
        assert_eq!(c.divisors, expected);
    }

    #[test]
    fn default_depth_poly() {
        let c = RunConfig::build(RingId::F2t, None, 500, 7, OutputMode::Json).unwrap();
        assert_eq!(c.divisors.len(), 12);
        assert_eq!(c.depth.to_string(), "t^5+t^3");
    }

    #[test]
    fn plain_number_depth_gives_trivial_chain() {
        let c = cfg(RingId::Z, "360");
        assert_eq!(c.depth_factors, vec![RingElement::int(360)]);
        assert_eq!(c.divisors, vec![RingElement::int(1), RingElement::int(360)]);
    }

    #[test]
    fn non_gcd_closed_factorization_falls_back() {
        let c = cfg(RingId::Z, "4*6");
        assert_eq!(c.depth, RingElement::int(24));
        assert_eq!(c.divisors, vec![RingElement::int(1), RingElement::int(24)]);
    }

    #[test]
    fn poly_literal_with_caret_is_one_factor() {
        let c = cfg(RingId::F2t, "t^3+t");
        assert_eq!(c.depth_factors.len(), 1);
        assert_eq!(c.depth.to_string(), "t^3+t");
        assert_eq!(c.divisors.len(), 2);
    }

    #[test]
    fn field_depth_is_unit() {
        let c = cfg(RingId::F2, "1");
        assert_eq!(c.divisors, vec![RingElement::bit(true)]);
    }

    #[test]
    fn rejects_zero_depth_and_zero_samples() {
        assert!(RunConfig::build(RingId::Z, Some("0"), 500, 7, OutputMode::Json).is_err());
        assert!(RunConfig::build(RingId::Z, Some("2*0"), 500, 7, OutputMode::Json).is_err());
        assert!(RunConfig::build(RingId::Z, None, 0, 7, OutputMode::Json).is_err());
    }

    #[test]
    fn sample_scaling() {
        let c = cfg(RingId::Z, "12");
        assert_eq!(c.n_full(), 500);
        assert_eq!(c.n_pairs(), 200);
        assert_eq!(c.n_spot(), 100);
        assert_eq!(c.n_light(), 50);
        let small = RunConfig::build(RingId::Z, Some("12"), 3, 7, OutputMode::Json).unwrap();
        assert_eq!(small.n_pairs(), 1);
        assert_eq!(small.n_light(), 1);
    }

    #[test]
    fn negative_factor_normalizes() {
        let c = cfg(RingId::Z, "-2^3*9");
        assert_eq!(c.depth, RingElement::int(72));
        assert!(c.divisors.contains(&RingElement::int(8)));
    }
}
