//! Seeded random digraphs for cross-validation corpora.
//!
//! Every generator takes an explicit RNG so that verification runs are
//! reproducible byte for byte.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Digraph, GraphMode};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random simple digraph with 1..=max_vertices vertices and at most
/// `max_edges` edges (no self-loops, no duplicates).
pub fn random_digraph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Digraph {
    assert!(max_vertices >= 1);
    let n = rng.gen_range(1..=max_vertices);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|s| (0..n).map(move |t| (s, t)))
        .filter(|&(s, t)| s != t)
        .collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(0..=max_edges.min(pairs.len()));
    pairs.truncate(m);
    Digraph::new(n, pairs, GraphMode::Simple).expect("generated edges are valid")
}

/// Like [`random_digraph`] but guaranteed to contain a univalent vertex.
pub fn random_digraph_with_univalent_vertex<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
) -> Digraph {
    loop {
        let g = random_digraph(rng, max_vertices, max_edges);
        if g.edge_count() == 0 {
            continue;
        }
        if (0..g.vertex_count()).any(|v| g.valence(v) == 1) {
            return g;
        }
    }
}

/// A uniformly random permutation of 0..n.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Brute-force digraph isomorphism over vertex permutations. Intended for
/// small diagnostic checks; refuses graphs with more than 9 vertices.
pub fn are_isomorphic(g1: &Digraph, g2: &Digraph) -> bool {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let n = g1.vertex_count();
    assert!(n <= 9, "brute-force isomorphism is limited to 9 vertices");
    let mut sorted2: Vec<(usize, usize)> = g2.edges().to_vec();
    sorted2.sort_unstable();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |perm| {
        let mut mapped: Vec<(usize, usize)> =
            g1.edges().iter().map(|&(s, t)| (perm[s], perm[t])).collect();
        mapped.sort_unstable();
        mapped == sorted2
    })
}

fn permutations(perm: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return check(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations(perm, k + 1, check) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{family, GraphFamily};

    #[test]
    fn generation_is_reproducible() {
        let a = random_digraph(&mut seeded_rng(7), 6, 6);
        let b = random_digraph(&mut seeded_rng(7), 6, 6);
        assert_eq!(a, b);
    }

    #[test]
    fn isomorphism_examples() {
        let i3 = family(GraphFamily::Linear(3)).unwrap();
        assert!(are_isomorphic(&i3, &i3.reverse_orientation().relabel(&[3, 2, 1, 0])));
        let a3 = family(GraphFamily::Alternating(3)).unwrap();
        assert!(!are_isomorphic(&i3, &a3));
    }
}
