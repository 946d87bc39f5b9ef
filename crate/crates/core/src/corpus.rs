//! Deterministic instance generation for exhaustive and seeded sweeps.

use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All C(n, 2) vertex pairs in the fixed order (0,1), (0,2), ..., (1,2), ...
fn pair_table(n: usize) -> Vec<(u32, u32)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Every labeled graph on `n` vertices, enumerated over all edge subsets.
///
/// # Panics
/// Panics for `n > 7` (2^28 graphs and up is no longer a sweep).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "exhaustive sweep is limited to n <= 7");
    let pairs = pair_table(n);
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

/// Every labeled triangle-free graph on `n` vertices.
pub fn labeled_triangle_free_graphs(n: usize) -> impl Iterator<Item = Graph> {
    labeled_graphs(n).filter(|g| g.find_triangle().is_none())
}

/// A seeded random graph. The edge density itself is drawn from the seed
/// (between 0.15 and 0.85), so a corpus of these mixes sparse and dense
/// instances.
pub fn random_graph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p: f64 = rng.random_range(0.15..0.85);
    let edges: Vec<(u32, u32)> =
        pair_table(n).into_iter().filter(|_| rng.random_bool(p)).collect();
    Graph::new(n, edges).unwrap()
}

/// The complete t-sun: hub `0..t` is a clique, ear `t + i` sees hub vertices
/// `i` and `(i + 1) % t` and nothing else.
pub fn complete_sun(t: usize) -> Graph {
    assert!(t >= 3, "suns start at order 3");
    let t32 = t as u32;
    let mut edges = Vec::new();
    for i in 0..t32 {
        for j in i + 1..t32 {
            edges.push((i, j));
        }
    }
    for i in 0..t32 {
        edges.push((i, t32 + i));
        edges.push(((i + 1) % t32, t32 + i));
    }
    Graph::new(2 * t, edges).unwrap()
}
