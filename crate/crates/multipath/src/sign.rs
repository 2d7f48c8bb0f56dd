//! Sign assignments on path posets.
//!
//! A sign assignment labels every covering relation with an element of Z/2 so
//! that around every square x ⋖ y,y' ⋖ z the four labels sum to 1 (mod 2).
//! On a path poset the canonical choice counts, for the cover H ≺ H ∪ e, the
//! edges of H preceding e in the graph's edge order; all sign assignments on
//! a path poset give isomorphic complexes, so this one is used throughout.

use std::collections::HashMap;

use crate::digraph::Digraph;
use crate::error::Error;
use crate::poset::PathPoset;
use crate::Result;

/// A Z/2 label per cover, aligned with `PathPoset::covers`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignAssignment {
    signs: Vec<u8>,
}

impl SignAssignment {
    pub fn from_signs(signs: Vec<u8>) -> SignAssignment {
        assert!(signs.iter().all(|&s| s <= 1));
        SignAssignment { signs }
    }

    pub fn zeros(count: usize) -> SignAssignment {
        SignAssignment { signs: vec![0; count] }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Sign of cover `id` as an element of {0, 1}.
    pub fn sign(&self, id: usize) -> u8 {
        self.signs[id]
    }

    /// Sign of cover `id` as a factor (-1)^ε.
    pub fn factor(&self, id: usize) -> i64 {
        if self.signs[id] == 0 {
            1
        } else {
            -1
        }
    }
}

/// The canonical sign: for H ≺ H ∪ e, count the edges of H before e.
pub fn canonical_sign(p: &PathPoset, g: &Digraph) -> SignAssignment {
    debug_assert_eq!(p.graph(), g);
    let signs = p
        .covers()
        .iter()
        .map(|c| (p.edge_set(c.lower).count_below(c.added_edge) % 2) as u8)
        .collect();
    SignAssignment { signs }
}

/// A square of the poset with the four participating covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareViolation {
    pub bottom: usize,
    pub mid_a: usize,
    pub mid_b: usize,
    pub top: usize,
}

/// Squares on which Eq. (sign) fails; valid iff empty.
#[derive(Debug, Clone, Default)]
pub struct SignReport {
    pub violations: Vec<SquareViolation>,
}

impl SignReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the square condition on every square of the poset.
pub fn verify_sign(p: &PathPoset, s: &SignAssignment) -> Result<SignReport> {
    if s.len() != p.covers().len() {
        return Err(Error::MissingCover { expected: p.covers().len(), got: s.len() });
    }
    let mut by_lower: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut cover_id: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, c) in p.covers().iter().enumerate() {
        by_lower.entry(c.lower).or_default().push(i);
        cover_id.insert((c.lower, c.upper), i);
    }

    let mut report = SignReport::default();
    for (&x, lows) in &by_lower {
        for (a, &ca) in lows.iter().enumerate() {
            for &cb in &lows[a + 1..] {
                let (ya, yb) = (p.covers()[ca].upper, p.covers()[cb].upper);
                let top = p
                    .edge_set(x)
                    .insert(p.covers()[ca].added_edge)
                    .insert(p.covers()[cb].added_edge);
                let Some(z) = p.id_of(top) else { continue };
                let (Some(&ua), Some(&ub)) = (cover_id.get(&(ya, z)), cover_id.get(&(yb, z)))
                else {
                    continue;
                };
                let total = s.sign(ca) + s.sign(ua) + s.sign(cb) + s.sign(ub);
                if total % 2 != 1 {
                    report.violations.push(SquareViolation {
                        bottom: x,
                        mid_a: ya,
                        mid_b: yb,
                        top: z,
                    });
                }
            }
        }
    }
    report.violations.sort_by_key(|v| (v.bottom, v.mid_a, v.mid_b));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{family, EdgeSet, GraphFamily};
    use crate::poset::enumerate_path_poset;

    #[test]
    fn empty_lower_gives_zero() {
        let g = family(GraphFamily::Polygon(3)).unwrap();
        let p = enumerate_path_poset(&g).unwrap();
        let s = canonical_sign(&p, &g);
        for (i, c) in p.covers().iter().enumerate() {
            if p.edge_set(c.lower).is_empty() {
                assert_eq!(s.sign(i), 0);
            }
        }
    }

    #[test]
    fn square_of_i2() {
        let g = family(GraphFamily::Linear(2)).unwrap();
        let p = enumerate_path_poset(&g).unwrap();
        let s = canonical_sign(&p, &g);
        let id = |bits: &[usize]| p.id_of(EdgeSet::from_indices(bits.iter().copied())).unwrap();
        let cover = |lo: usize, up: usize| {
            p.covers().iter().position(|c| c.lower == lo && c.upper == up).unwrap()
        };
        // {e0} ≺ {e0,e1} counts one earlier edge; {e1} ≺ {e0,e1} counts none.
        assert_eq!(s.sign(cover(id(&[0]), id(&[0, 1]))), 1);
        assert_eq!(s.sign(cover(id(&[1]), id(&[0, 1]))), 0);
    }

    #[test]
    fn canonical_is_valid() {
        for spec in [
            GraphFamily::Linear(3),
            GraphFamily::Polygon(3),
            GraphFamily::Dandelion(2, 3),
            GraphFamily::Alternating(6),
        ] {
            let g = family(spec).unwrap();
            let p = enumerate_path_poset(&g).unwrap();
            let report = verify_sign(&p, &canonical_sign(&p, &g)).unwrap();
            assert!(report.is_valid());
        }
    }

    #[test]
    fn canonical_is_valid_on_random_graphs() {
        let mut rng = crate::random::seeded_rng(9);
        for _ in 0..40 {
            let g = crate::random::random_digraph(&mut rng, 6, 6);
            let p = enumerate_path_poset(&g).unwrap();
            assert!(verify_sign(&p, &canonical_sign(&p, &g)).unwrap().is_valid());
        }
    }

    #[test]
    fn canonical_survives_edge_reorder() {
        let g = family(GraphFamily::Polygon(3)).unwrap();
        let mut rng = crate::random::seeded_rng(4);
        for _ in 0..5 {
            let perm = crate::random::random_permutation(&mut rng, g.edge_count());
            let h = g.permute_edges(&perm);
            let p = enumerate_path_poset(&h).unwrap();
            assert!(verify_sign(&p, &canonical_sign(&p, &h)).unwrap().is_valid());
        }
    }

    #[test]
    fn all_zero_fails_on_one_square() {
        let g = family(GraphFamily::Linear(2)).unwrap();
        let p = enumerate_path_poset(&g).unwrap();
        let zeros = SignAssignment::zeros(p.covers().len());
        let report = verify_sign(&p, &zeros).unwrap();
        assert_eq!(report.violations.len(), 1);
    }

    #[test]
    fn missing_cover_detected() {
        let g = family(GraphFamily::Linear(2)).unwrap();
        let p = enumerate_path_poset(&g).unwrap();
        let short = SignAssignment::zeros(p.covers().len() - 1);
        assert!(matches!(verify_sign(&p, &short), Err(Error::MissingCover { .. })));
    }
}
