//! Seeded random diagrams for exercising the structural laws.
//!
//! A diagram is drawn by pairing the `4m` crossing ports of `m` crossings
//! uniformly at random, one edge per pair, plus a few free circles. Such
//! pairings need not be planar; the census identities for disjoint union
//! and connected sum are combinatorial and hold regardless.

use kstates_core::ShadowDiagram;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_diagram(rng: &mut impl Rng, crossings: usize, max_free_circles: usize) -> ShadowDiagram {
    let mut ports: Vec<usize> = (0..4 * crossings).collect();
    ports.shuffle(rng);
    let mut grid = vec![[0usize; 4]; crossings];
    for (edge, pair) in ports.chunks_exact(2).enumerate() {
        for &p in pair {
            grid[p / 4][p % 4] = edge;
        }
    }
    let free_circles = rng.gen_range(0..=max_free_circles);
    ShadowDiagram::new(2 * crossings, grid, free_circles)
        .expect("a perfect matching of ports gives every edge two ports")
}
