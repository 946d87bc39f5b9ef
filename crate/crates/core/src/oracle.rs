//! Independent exact solvers anchoring the equivalence tests.
//!
//! These are intentionally naive and share no code with the production
//! searches: the stable-set solver is a plain branch-and-bound, and the sun
//! check enumerates vertex subsets and reads the sun structure off the
//! induced degree profile. A bug would have to be invented twice to slip
//! through the agreement tests.

use crate::bits::BitSet;
use crate::graph::{Graph, VertexSet};
use itertools::Itertools;

/// Outcome of an exact optimization run.
#[derive(Clone, Debug)]
pub struct OracleResult {
    pub best: VertexSet,
    pub size: usize,
    pub nodes_explored: u64,
}

/// Exact maximum stable set by branch-and-bound: branch on the
/// highest-degree remaining vertex (in/out), prune when the remaining
/// vertices cannot beat the incumbent.
pub fn max_stable_set(g: &Graph) -> OracleResult {
    let mut search = StableSearch { g, best: Vec::new(), nodes: 0, target: None };
    let mut current = Vec::new();
    search.run(BitSet::full(g.vertex_count()), &mut current);
    OracleResult {
        size: search.best.len(),
        best: VertexSet::new(search.best),
        nodes_explored: search.nodes,
    }
}

/// Decision version: does `g` contain a stable set with `k` vertices?
pub fn has_stable_set(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if k > g.vertex_count() {
        return false;
    }
    let mut search = StableSearch { g, best: Vec::new(), nodes: 0, target: Some(k) };
    let mut current = Vec::new();
    search.run(BitSet::full(g.vertex_count()), &mut current);
    search.best.len() >= k
}

/// Decision version for cliques, by complement duality.
pub fn has_clique(g: &Graph, k: usize) -> bool {
    has_stable_set(&g.complement(), k)
}

struct StableSearch<'g> {
    g: &'g Graph,
    best: Vec<u32>,
    nodes: u64,
    target: Option<usize>,
}

impl StableSearch<'_> {
    /// Returns true when the target size has been reached and the search can
    /// stop early.
    fn run(&mut self, cand: BitSet, current: &mut Vec<u32>) -> bool {
        self.nodes += 1;
        if let Some(k) = self.target {
            if self.best.len() >= k {
                return true;
            }
        }
        if current.len() + cand.count() <= self.best.len() {
            return false;
        }
        // Highest degree within the remaining graph, ties to the least index.
        let mut pick = None;
        let mut pick_deg = 0;
        for v in cand.iter() {
            let d = self.g.row(v as u32).intersection_count(&cand);
            if pick.is_none() || d > pick_deg {
                pick = Some(v);
                pick_deg = d;
            }
        }
        let Some(v) = pick else {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            return self.target.is_some_and(|k| self.best.len() >= k);
        };

        // Take v: drop its closed neighborhood from the candidates.
        let mut taken = cand.clone();
        taken.remove(v);
        for &u in self.g.neighbors(v as u32) {
            taken.remove(u as usize);
        }
        current.push(v as u32);
        if self.run(taken, current) {
            current.pop();
            return true;
        }
        current.pop();

        // Skip v.
        let mut skipped = cand;
        skipped.remove(v);
        self.run(skipped, current)
    }
}

/// Brute-force induced t-sun decision, independent of the production search.
///
/// Enumerates every 2t-subset. For t >= 4 the hub/ear split is forced by the
/// induced degrees (hub vertices have degree t+1, ears degree 2); for t = 3
/// all hub choices are tried. Returns false when 2t exceeds the vertex count
/// or t < 3, where no t-sun can exist.
pub fn brute_force_sun_check(g: &Graph, t: usize) -> bool {
    let n = g.vertex_count();
    if t < 3 || 2 * t > n {
        return false;
    }
    for subset in (0..n as u32).combinations(2 * t) {
        // Local adjacency matrix of the induced subgraph.
        let size = 2 * t;
        let mut adj = vec![false; size * size];
        for i in 0..size {
            for j in i + 1..size {
                if g.has_edge(subset[i], subset[j]) {
                    adj[i * size + j] = true;
                    adj[j * size + i] = true;
                }
            }
        }
        let degree =
            |i: usize| -> usize { (0..size).filter(|&j| adj[i * size + j]).count() };

        if t >= 4 {
            let hub: Vec<usize> = (0..size).filter(|&i| degree(i) == t + 1).collect();
            let ears: Vec<usize> = (0..size).filter(|&i| degree(i) == 2).collect();
            if hub.len() == t && ears.len() == t && is_sun_labeling(&adj, size, &hub, &ears) {
                return true;
            }
        } else {
            for hub in (0..size).combinations(3) {
                let ears: Vec<usize> = (0..size).filter(|i| !hub.contains(i)).collect();
                if is_sun_labeling(&adj, size, &hub, &ears) {
                    return true;
                }
            }
        }
    }
    false
}

/// Validates one hub/ear split: hub is a clique, ears are stable, every ear
/// sees exactly two hub vertices, and those pairs chain into a single cycle
/// through the whole hub.
fn is_sun_labeling(adj: &[bool], size: usize, hub: &[usize], ears: &[usize]) -> bool {
    let t = hub.len();
    for (i, &a) in hub.iter().enumerate() {
        for &b in &hub[i + 1..] {
            if !adj[a * size + b] {
                return false;
            }
        }
    }
    for (i, &a) in ears.iter().enumerate() {
        for &b in &ears[i + 1..] {
            if adj[a * size + b] {
                return false;
            }
        }
    }
    // Each ear contributes one hub pair; the pairs must form one t-cycle.
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); t];
    for &e in ears {
        let seen: Vec<usize> =
            (0..t).filter(|&h| adj[e * size + hub[h]]).collect();
        if seen.len() != 2 || (0..size).filter(|&j| adj[e * size + j]).count() != 2 {
            return false;
        }
        incident[seen[0]].push(seen[1]);
        incident[seen[1]].push(seen[0]);
    }
    if incident.iter().any(|nb| nb.len() != 2) {
        return false;
    }
    // Walk the pair cycle from hub 0; it must return after exactly t steps.
    let mut visited = vec![false; t];
    let mut prev = usize::MAX;
    let mut at = 0usize;
    for _ in 0..t {
        visited[at] = true;
        let next = if incident[at][0] != prev { incident[at][0] } else { incident[at][1] };
        prev = at;
        at = next;
    }
    at == 0 && visited.iter().all(|&v| v)
}
