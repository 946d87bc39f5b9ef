//! Chordal and strongly chordal recognition via greedy elimination
//! orderings, plus hole / antihole certificate search.
//!
//! Both graph classes are hereditary and every nonempty member contains a
//! qualifying vertex (simplicial for chordal, simple for strongly chordal),
//! so greedily removing the least qualifying vertex either builds a full
//! ordering or certifies non-membership when some residual graph has no
//! qualifying vertex.

use crate::bits::BitSet;
use crate::graph::Graph;

/// Which per-vertex predicate an ordering eliminates by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EliminationKind {
    /// Neighborhood induces a clique.
    Simplicial,
    /// Closed neighborhoods of the neighbors form an inclusion chain.
    Simple,
}

/// A vertex permutation where each vertex satisfies its kind's predicate in
/// the graph induced by itself and its successors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering {
    order: Vec<u32>,
    kind: EliminationKind,
}

impl EliminationOrdering {
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn kind(&self) -> EliminationKind {
        self.kind
    }

    /// Re-checks the defining property against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if self.order.len() != n {
            return false;
        }
        let mut alive = BitSet::full(n);
        for &v in &self.order {
            if v as usize >= n || !alive.contains(v as usize) {
                return false;
            }
            if !qualifies(g, &alive, v, self.kind) {
                return false;
            }
            alive.remove(v as usize);
        }
        true
    }
}

/// True iff the neighborhood of `v` induces a clique.
pub fn is_simplicial(g: &Graph, v: u32) -> bool {
    qualifies(g, &BitSet::full(g.vertex_count()), v, EliminationKind::Simplicial)
}

/// True iff the closed neighborhoods of `v`'s neighbors can be ordered into
/// an inclusion chain. Every simple vertex is simplicial.
pub fn is_simple_vertex(g: &Graph, v: u32) -> bool {
    qualifies(g, &BitSet::full(g.vertex_count()), v, EliminationKind::Simple)
}

fn qualifies(g: &Graph, alive: &BitSet, v: u32, kind: EliminationKind) -> bool {
    let nbrs: Vec<u32> =
        g.neighbors(v).iter().copied().filter(|&u| alive.contains(u as usize)).collect();
    match kind {
        EliminationKind::Simplicial => nbrs
            .iter()
            .enumerate()
            .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.has_edge(a, b))),
        EliminationKind::Simple => {
            // Closed neighborhoods within the residual graph. An inclusion
            // chain sorted by size must have each set contained in the next;
            // equal-sized sets only chain when identical.
            let mut closed: Vec<(usize, u32, BitSet)> = nbrs
                .iter()
                .map(|&y| {
                    let mut s = g.row(y).clone();
                    s.intersect_with(alive);
                    s.insert(y as usize);
                    (s.count(), y, s)
                })
                .collect();
            closed.sort_by_key(|&(count, y, _)| (count, y));
            closed.windows(2).all(|w| w[0].2.is_subset(&w[1].2))
        }
    }
}

/// Greedy elimination: repeatedly remove the least-index vertex that
/// qualifies in the residual graph. Returns the full ordering, or `None`
/// when some residual graph has no qualifying vertex, which certifies that
/// no ordering of this kind exists.
pub fn find_elimination_ordering(g: &Graph, kind: EliminationKind) -> Option<EliminationOrdering> {
    let n = g.vertex_count();
    let mut alive = BitSet::full(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive.iter().map(|v| v as u32).find(|&v| qualifies(g, &alive, v, kind))?;
        order.push(v);
        alive.remove(v as usize);
    }
    Some(EliminationOrdering { order, kind })
}

/// A graph is chordal iff it admits a simplicial elimination ordering.
pub fn is_chordal(g: &Graph) -> bool {
    find_elimination_ordering(g, EliminationKind::Simplicial).is_some()
}

/// A graph is strongly chordal iff it admits a simple elimination ordering;
/// equivalently, iff it is chordal and contains no induced sun.
pub fn is_strongly_chordal(g: &Graph) -> bool {
    find_elimination_ordering(g, EliminationKind::Simple).is_some()
}

/// Whether a certificate cycle lives in the graph or in its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    Hole,
    Antihole,
}

/// An induced cycle certificate: consecutive vertices adjacent and all other
/// pairs nonadjacent, read in the host graph (hole) or its complement
/// (antihole).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoleCertificate {
    cycle: Vec<u32>,
    kind: CertificateKind,
}

impl HoleCertificate {
    pub fn cycle(&self) -> &[u32] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn kind(&self) -> CertificateKind {
        self.kind
    }

    /// Re-checks the certificate against `g` without building the complement.
    pub fn verify(&self, g: &Graph) -> bool {
        let l = self.cycle.len();
        let min_len = match self.kind {
            CertificateKind::Hole => 4,
            CertificateKind::Antihole => 5,
        };
        if l < min_len {
            return false;
        }
        let mut distinct = self.cycle.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != l || distinct.iter().any(|&v| v as usize >= g.vertex_count()) {
            return false;
        }
        let want_edge = |consecutive: bool| match self.kind {
            CertificateKind::Hole => consecutive,
            CertificateKind::Antihole => !consecutive,
        };
        for i in 0..l {
            for j in i + 1..l {
                let consecutive = j == i + 1 || (i == 0 && j == l - 1);
                if g.has_edge(self.cycle[i], self.cycle[j]) != want_edge(consecutive) {
                    return false;
                }
            }
        }
        true
    }
}

/// First induced cycle of length >= 4, or `None` iff the graph is chordal.
pub fn find_hole(g: &Graph) -> Option<HoleCertificate> {
    find_induced_cycle_geq(g, 4)
        .map(|cycle| HoleCertificate { cycle, kind: CertificateKind::Hole })
}

/// First induced cycle of length >= `t_min` in the complement, reported as
/// an antihole of `g`.
///
/// # Panics
/// Panics when `t_min < 5`; shorter antiholes coincide with holes.
pub fn find_antihole_geq(g: &Graph, t_min: usize) -> Option<HoleCertificate> {
    assert!(t_min >= 5, "antihole search starts at length 5");
    find_induced_cycle_geq(&g.complement(), t_min)
        .map(|cycle| HoleCertificate { cycle, kind: CertificateKind::Antihole })
}

/// Complete search for an induced cycle with at least `min_len` vertices.
///
/// Anchors each candidate cycle at its minimum vertex `v0` and its two
/// cycle-neighbors `a < b`, then extends induced paths from `a` through
/// vertices above `v0` until one closes at `b`. Each cycle is therefore
/// visited exactly once up to direction.
fn find_induced_cycle_geq(g: &Graph, min_len: usize) -> Option<Vec<u32>> {
    let n = g.vertex_count() as u32;
    for v0 in 0..n {
        let above: Vec<u32> = g.neighbors(v0).iter().copied().filter(|&x| x > v0).collect();
        for (ai, &a) in above.iter().enumerate() {
            for &b in &above[ai + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut path = vec![a];
                if let Some(cycle) = extend_path(g, v0, b, &mut path, min_len) {
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// Depth-first induced-path extension. `path` runs from a neighbor of `v0`;
/// interior vertices must avoid `v0` and `b`; a vertex adjacent to `b`
/// closes the cycle `v0, path..., b` if it is long enough.
fn extend_path(
    g: &Graph,
    v0: u32,
    b: u32,
    path: &mut Vec<u32>,
    min_len: usize,
) -> Option<Vec<u32>> {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= v0 || w == b || g.has_edge(w, v0) || path.contains(&w) {
            continue;
        }
        if path[..path.len() - 1].iter().any(|&p| g.has_edge(w, p)) {
            continue;
        }
        if g.has_edge(w, b) {
            // Closing here yields the cycle v0, path..., w, b.
            if path.len() + 3 >= min_len {
                let mut cycle = Vec::with_capacity(path.len() + 3);
                cycle.push(v0);
                cycle.extend_from_slice(path);
                cycle.push(w);
                cycle.push(b);
                return Some(cycle);
            }
            // Too short, and an interior vertex may not touch b.
            continue;
        }
        path.push(w);
        if let Some(cycle) = extend_path(g, v0, b, path, min_len) {
            return Some(cycle);
        }
        path.pop();
    }
    None
}
