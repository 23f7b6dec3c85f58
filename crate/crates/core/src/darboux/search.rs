use std::collections::BTreeSet;

use num::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{discriminant, rational_roots, GPoly, Poly, Rational};
use crate::quasi::{wronskian, QuasiFunction, SeedKind, SeedSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub seeds: Vec<SeedSpec>,
    #[serde(serialize_with = "super::export::ser_rational")]
    pub g: Rational,
    #[serde(serialize_with = "super::export::ser_rational")]
    pub eta0: Rational,
    pub m: usize,
}

impl SearchHit {
    pub fn degrees(&self) -> Vec<usize> {
        self.seeds.iter().map(|s| s.v).collect()
    }
}

/// Degree tuples in `1..=vmax`, lexicographic. Adjacent seeds of the same
/// kind take increasing degrees, since a repeat gives a vanishing Wronskian
/// and a swap only flips its sign.
pub fn degree_tuples(kinds: &[SeedKind], vmax: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for (i, k) in kinds.iter().enumerate() {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                let lo = if i > 0 && kinds[i - 1] == *k { t[i - 1] + 1 } else { 1 };
                (lo..=vmax).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// The g-parametric Wronskian of the seeds.
pub fn generic_wronskian(seeds: &[SeedSpec]) -> QuasiFunction<Poly> {
    let g = Poly::var();
    let fs: Vec<QuasiFunction<Poly>> = seeds.iter().map(|s| s.solution(&g)).collect();
    wronskian(&fs)
}

/// Rational g at which the η-polynomial can acquire a multiple root: zeros
/// of its discriminant and of its leading coefficient.
pub fn candidate_couplings(p: &GPoly) -> BTreeSet<Rational> {
    let mut out = BTreeSet::new();
    if p.degree().unwrap_or(0) < 2 {
        return out;
    }
    let mut sources = vec![p.leading().cloned().unwrap_or_else(Poly::zero)];
    if let Ok(d) = discriminant(p) {
        sources.push(d);
    }
    for s in sources.into_iter().filter(|s| !s.is_zero()) {
        if let Ok(roots) = rational_roots(&s) {
            out.extend(roots.into_iter().map(|(r, _)| r));
        }
    }
    out
}

fn scan_tuple(seeds: Vec<SeedSpec>, target_m: usize) -> Vec<SearchHit> {
    let w = generic_wronskian(&seeds);
    if w.is_zero() {
        return vec![];
    }
    let prim = w.poly().primitive_part();
    let mut hits = Vec::new();
    for g in candidate_couplings(&prim) {
        let wg = w.at_g(&g);
        if wg.is_zero() {
            continue;
        }
        let Ok(roots) = rational_roots(wg.poly()) else { continue };
        for (eta0, m) in roots {
            if m >= target_m {
                hits.push(SearchHit { seeds: seeds.clone(), g: g.clone(), eta0, m });
            }
        }
    }
    hits
}

/// All `(seeds, g, η0, m)` with a rational root η0 ≠ 0 of multiplicity at
/// least `target_m`, over degree tuples with entries up to `vmax`.
///
/// Ordered by degree tuple, then g, then η0, independent of scheduling.
pub fn search_multiple_zeros(kinds: &[SeedKind], vmax: usize, target_m: usize) -> Vec<SearchHit> {
    let tuples = degree_tuples(kinds, vmax);
    let mut hits: Vec<SearchHit> = tuples
        .into_par_iter()
        .map(|vs| {
            let seeds = kinds.iter().zip(vs).map(|(&k, v)| SeedSpec::new(k, v)).collect();
            scan_tuple(seeds, target_m)
        })
        .flatten()
        .collect();
    hits.sort_by(|a, b| (a.degrees(), &a.g, &a.eta0).cmp(&(b.degrees(), &b.g, &b.eta0)));
    hits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use SeedKind::*;

    #[test]
    fn tuples_respect_repeated_kinds() {
        assert_eq!(degree_tuples(&[I, II], 2).len(), 4);
        assert_eq!(degree_tuples(&[I, II, II], 2), vec![vec![1, 1, 2], vec![2, 1, 2]]);
    }

    #[test]
    fn finds_cases_a_and_b() {
        let hits = search_multiple_zeros(&[III, I], 2, 3);
        let key: Vec<_> = hits.iter().map(|h| (h.degrees(), h.g.clone(), h.eta0.clone(), h.m)).collect();
        assert!(key.contains(&(vec![1, 2], rat(3, 4), rat(-3, 4), 3)));
        assert!(key.contains(&(vec![2, 1], rat(1, 4), rat(-3, 4), 3)));
    }

    #[test]
    fn finds_case_h() {
        let hits = search_multiple_zeros(&[I, II, II], 2, 3);
        assert!(hits.iter().any(|h| h.degrees() == vec![1, 1, 2] && h.g == rat(53, 2) && h.eta0 == int(-30)));
    }
}
