//! Sun witnesses and budgeted exhaustive sun search.
//!
//! Deciding whether an arbitrary graph contains an induced sun is
//! NP-complete, so the searches here are exponential by design. Every search
//! carries an explicit node budget and reports exhaustion as a distinct
//! outcome instead of pretending the answer is "absent".

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashSet;
use std::ops::ControlFlow;

/// An explicit induced t-sun: hub vertices `c_1..c_t` (a clique) and ears
/// `e_1..e_t` (a stable set), with `e_i` adjacent to exactly `c_i` and
/// `c_{i+1}` (indices cyclic) among the witness vertices.
///
/// Witnesses are canonical by construction: `c_1` is the minimum hub vertex
/// and the orientation makes `c_2` the smaller of the two hub neighbors of
/// `e_1`'s position, so all rotations and reflections of one sun construct
/// the same value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SunWitness {
    hub: Vec<u32>,
    ears: Vec<u32>,
}

impl SunWitness {
    /// Builds a witness from hub and ear lists in cyclic order, validating
    /// shape (equal lengths, t >= 3, all 2t vertices distinct) and
    /// normalizing to canonical form. Adjacency is checked separately by
    /// [`verify_sun_witness`].
    pub fn new(hub: Vec<u32>, ears: Vec<u32>) -> Result<SunWitness> {
        let t = hub.len();
        if t < 3 {
            return Err(Error::OrderTooSmall { t });
        }
        if ears.len() != t {
            return Err(Error::InvalidWitness(format!(
                "hub has {t} vertices but there are {} ears",
                ears.len()
            )));
        }
        let mut seen = HashSet::with_capacity(2 * t);
        for &v in hub.iter().chain(&ears) {
            if !seen.insert(v) {
                return Err(Error::InvalidWitness(format!("vertex {v} repeated in witness")));
            }
        }
        let mut w = SunWitness { hub, ears };
        w.canonicalize();
        Ok(w)
    }

    /// Rotate so the minimum hub vertex sits first, then pick the
    /// orientation with the smaller second hub vertex. Pure index shuffling:
    /// the ear between `c_i` and `c_{i+1}` stays between them.
    fn canonicalize(&mut self) {
        let t = self.hub.len();
        let p = (0..t).min_by_key(|&i| self.hub[i]).unwrap();
        self.hub.rotate_left(p);
        self.ears.rotate_left(p);
        if self.hub[t - 1] < self.hub[1] {
            self.hub[1..].reverse();
            self.ears.reverse();
        }
    }

    /// The sun order t.
    pub fn order(&self) -> usize {
        self.hub.len()
    }

    /// Hub vertices in witness order.
    pub fn hub(&self) -> &[u32] {
        &self.hub
    }

    /// Ears in witness order; `ears()[i]` sits between `hub()[i]` and
    /// `hub()[(i + 1) % t]`.
    pub fn ears(&self) -> &[u32] {
        &self.ears
    }

    /// All 2t witness vertices, hub first.
    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.hub.iter().chain(&self.ears).copied()
    }
}

/// Node cap for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    max_nodes: u64,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    /// At least one node is always allowed.
    pub fn new(max_nodes: u64) -> SearchBudget {
        SearchBudget { max_nodes: max_nodes.max(1) }
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(Self::DEFAULT_NODES)
    }
}

/// Result of a budgeted sun search. Exhausting the budget is reported as
/// [`SearchOutcome::Indeterminate`], never coerced to `Absent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(SunWitness),
    Absent,
    Indeterminate { nodes_used: u64 },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&SunWitness> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, SearchOutcome::Absent)
    }
}

/// How an enumeration ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationStatus {
    /// The whole search space was swept; the list is every sun in the graph.
    Complete,
    /// Stopped because `limit` distinct witnesses were collected.
    LimitReached,
    /// Stopped because the node budget ran out; the list may be incomplete.
    BudgetExhausted,
}

/// Distinct canonical witnesses in discovery order, plus how the sweep ended.
#[derive(Clone, Debug)]
pub struct SunEnumeration {
    pub witnesses: Vec<SunWitness>,
    pub status: EnumerationStatus,
    pub nodes_used: u64,
}

/// Checks that `w` is an induced t-sun of `g`: hub pairwise adjacent, ears
/// pairwise nonadjacent, and each ear adjacent to its two consecutive hub
/// vertices and to no other witness vertex.
pub fn verify_sun_witness(g: &Graph, w: &SunWitness) -> Result<bool> {
    let n = g.vertex_count();
    for v in w.vertices() {
        if v as usize >= n {
            return Err(Error::VertexOutOfRange { vertex: v as usize, n });
        }
    }
    let t = w.order();
    let hub = w.hub();
    let ears = w.ears();
    for i in 0..t {
        for j in i + 1..t {
            if !g.has_edge(hub[i], hub[j]) {
                return Ok(false);
            }
            if g.has_edge(ears[i], ears[j]) {
                return Ok(false);
            }
        }
    }
    for i in 0..t {
        for j in 0..t {
            let consecutive = j == i || j == (i + 1) % t;
            if g.has_edge(ears[i], hub[j]) != consecutive {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Exhausted;

struct SearchCtx {
    nodes: u64,
    max_nodes: u64,
}

impl SearchCtx {
    fn new(budget: SearchBudget) -> SearchCtx {
        SearchCtx { nodes: 0, max_nodes: budget.max_nodes() }
    }

    #[inline]
    fn tick(&mut self) -> std::result::Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }
}

/// Searches for an induced t-sun. Hub cliques are enumerated in
/// lexicographic order; within a hub, cyclic orderings and ears are assigned
/// depth-first with the least vertex tried first, so the reported witness is
/// reproducible.
pub fn find_k_sun(g: &Graph, t: usize, budget: SearchBudget) -> Result<SearchOutcome> {
    if t < 3 {
        return Err(Error::OrderTooSmall { t });
    }
    let mut ctx = SearchCtx::new(budget);
    let mut found = None;
    let status = search_order(g, t, &mut ctx, &mut |w| {
        found = Some(w);
        ControlFlow::Break(())
    });
    Ok(outcome_from(status, found, &ctx))
}

/// Searches orders t = 3, 4, ..., floor(n/2) under one shared budget and
/// reports the first sun found.
pub fn find_any_sun(g: &Graph, budget: SearchBudget) -> SearchOutcome {
    let mut ctx = SearchCtx::new(budget);
    let mut found = None;
    for t in 3..=g.vertex_count() / 2 {
        let status = search_order(g, t, &mut ctx, &mut |w| {
            found = Some(w);
            ControlFlow::Break(())
        });
        match status {
            Err(Exhausted) => return SearchOutcome::Indeterminate { nodes_used: ctx.nodes },
            Ok(ControlFlow::Break(())) => break,
            Ok(ControlFlow::Continue(())) => {}
        }
    }
    match found {
        Some(w) => SearchOutcome::Found(w),
        None => SearchOutcome::Absent,
    }
}

/// Collects up to `limit` distinct canonical witnesses over every order,
/// in discovery order.
///
/// # Panics
/// Panics if `limit == 0`.
pub fn enumerate_suns(g: &Graph, limit: usize, budget: SearchBudget) -> SunEnumeration {
    assert!(limit >= 1, "enumeration limit must be at least 1");
    let mut ctx = SearchCtx::new(budget);
    let mut seen: HashSet<SunWitness> = HashSet::new();
    let mut witnesses = Vec::new();
    let mut status = EnumerationStatus::Complete;
    'orders: for t in 3..=g.vertex_count() / 2 {
        let flow = search_order(g, t, &mut ctx, &mut |w| {
            if seen.insert(w.clone()) {
                witnesses.push(w);
            }
            if witnesses.len() >= limit {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        match flow {
            Err(Exhausted) => {
                status = EnumerationStatus::BudgetExhausted;
                break 'orders;
            }
            Ok(ControlFlow::Break(())) => {
                status = EnumerationStatus::LimitReached;
                break 'orders;
            }
            Ok(ControlFlow::Continue(())) => {}
        }
    }
    SunEnumeration { witnesses, status, nodes_used: ctx.nodes }
}

fn outcome_from(
    status: std::result::Result<ControlFlow<()>, Exhausted>,
    found: Option<SunWitness>,
    ctx: &SearchCtx,
) -> SearchOutcome {
    match (status, found) {
        (_, Some(w)) => SearchOutcome::Found(w),
        (Err(Exhausted), None) => SearchOutcome::Indeterminate { nodes_used: ctx.nodes },
        (Ok(_), None) => SearchOutcome::Absent,
    }
}

/// Full sweep for one order t: every t-clique hub in lexicographic order,
/// every completion into a sun. `emit` receives each completed (canonical)
/// witness and decides whether to keep searching.
fn search_order(
    g: &Graph,
    t: usize,
    ctx: &mut SearchCtx,
    emit: &mut dyn FnMut(SunWitness) -> ControlFlow<()>,
) -> std::result::Result<ControlFlow<()>, Exhausted> {
    let n = g.vertex_count();
    if 2 * t > n {
        return Ok(ControlFlow::Continue(()));
    }
    let mut chosen = Vec::with_capacity(t);
    clique_dfs(g, t, &mut chosen, &BitSet::full(n), ctx, emit)
}

fn clique_dfs(
    g: &Graph,
    t: usize,
    chosen: &mut Vec<u32>,
    cand: &BitSet,
    ctx: &mut SearchCtx,
    emit: &mut dyn FnMut(SunWitness) -> ControlFlow<()>,
) -> std::result::Result<ControlFlow<()>, Exhausted> {
    ctx.tick()?;
    if chosen.len() == t {
        return sun_on_hub(g, chosen, ctx, emit);
    }
    if chosen.len() + cand.count() < t {
        return Ok(ControlFlow::Continue(()));
    }
    let members: Vec<usize> = cand.iter().collect();
    for v in members {
        let mut next = cand.clone();
        next.intersect_with(g.row(v as u32));
        next.remove_below(v + 1);
        chosen.push(v as u32);
        let flow = clique_dfs(g, t, chosen, &next, ctx, emit)?;
        chosen.pop();
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Given a hub clique (ascending), assigns a cyclic order and ears
/// depth-first. An ear candidate for consecutive hub vertices must see
/// exactly those two hub vertices, and must miss every ear already placed.
fn sun_on_hub(
    g: &Graph,
    hub: &[u32],
    ctx: &mut SearchCtx,
    emit: &mut dyn FnMut(SunWitness) -> ControlFlow<()>,
) -> std::result::Result<ControlFlow<()>, Exhausted> {
    let t = hub.len();
    let n = g.vertex_count();

    // Ear candidates per unordered position pair. A vertex with any other
    // number of hub neighbors can never be an ear of this hub.
    let mut pair_cands: Vec<Vec<u32>> = vec![Vec::new(); t * t];
    let mut pair_degree = vec![0usize; t];
    'verts: for v in 0..n as u32 {
        if hub.contains(&v) {
            continue;
        }
        let mut first = usize::MAX;
        let mut second = usize::MAX;
        for (p, &h) in hub.iter().enumerate() {
            if g.has_edge(v, h) {
                if first == usize::MAX {
                    first = p;
                } else if second == usize::MAX {
                    second = p;
                } else {
                    continue 'verts;
                }
            }
        }
        if second != usize::MAX {
            let slot = first * t + second;
            if pair_cands[slot].is_empty() {
                pair_degree[first] += 1;
                pair_degree[second] += 1;
            }
            pair_cands[slot].push(v);
        }
    }
    // Every hub vertex needs two flanking ears from distinct pairs.
    if pair_degree.iter().any(|&d| d < 2) {
        return Ok(ControlFlow::Continue(()));
    }

    let mut order = Vec::with_capacity(t);
    order.push(0usize);
    let mut used = vec![false; t];
    used[0] = true;
    let mut ears = Vec::with_capacity(t);
    hub_order_dfs(g, hub, &pair_cands, &mut order, &mut used, &mut ears, ctx, emit)
}

#[allow(clippy::too_many_arguments)]
fn hub_order_dfs(
    g: &Graph,
    hub: &[u32],
    pair_cands: &[Vec<u32>],
    order: &mut Vec<usize>,
    used: &mut [bool],
    ears: &mut Vec<u32>,
    ctx: &mut SearchCtx,
    emit: &mut dyn FnMut(SunWitness) -> ControlFlow<()>,
) -> std::result::Result<ControlFlow<()>, Exhausted> {
    let t = hub.len();
    let last = *order.last().unwrap();
    if order.len() == t {
        // Close the cycle with the final ear between order[t-1] and order[0].
        let slot = pair_slot(last, 0, t);
        for &e in &pair_cands[slot] {
            ctx.tick()?;
            if ears.iter().any(|&f| g.has_edge(e, f)) {
                continue;
            }
            ears.push(e);
            let hub_vertices = order.iter().map(|&p| hub[p]).collect();
            let w = SunWitness::new(hub_vertices, ears.clone())
                .expect("search assembles only well-shaped witnesses");
            ears.pop();
            if emit(w).is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        return Ok(ControlFlow::Continue(()));
    }
    for q in 1..t {
        if used[q] || pair_cands[pair_slot(last, q, t)].is_empty() {
            continue;
        }
        let slot = pair_slot(last, q, t);
        for ci in 0..pair_cands[slot].len() {
            let e = pair_cands[slot][ci];
            ctx.tick()?;
            if ears.iter().any(|&f| g.has_edge(e, f)) {
                continue;
            }
            used[q] = true;
            order.push(q);
            ears.push(e);
            let flow = hub_order_dfs(g, hub, pair_cands, order, used, ears, ctx, emit)?;
            ears.pop();
            order.pop();
            used[q] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

#[inline]
fn pair_slot(a: usize, b: usize, t: usize) -> usize {
    if a < b {
        a * t + b
    } else {
        b * t + a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::complete_sun;
    use crate::graph::Graph;

    #[test]
    fn canonical_form_is_rotation_and_reflection_invariant() {
        let hub = vec![10, 4, 7, 9, 2];
        let ears = vec![20, 21, 22, 23, 24];
        let reference = SunWitness::new(hub.clone(), ears.clone()).unwrap();
        let t = hub.len();
        for r in 0..t {
            let mut h = hub.clone();
            let mut e = ears.clone();
            h.rotate_left(r);
            e.rotate_left(r);
            assert_eq!(SunWitness::new(h.clone(), e.clone()).unwrap(), reference);
            // Reflection: reverse the cycle direction.
            let mut rh = h.clone();
            rh[1..].reverse();
            let mut re = e.clone();
            re.reverse();
            assert_eq!(SunWitness::new(rh, re).unwrap(), reference);
        }
        assert_eq!(reference.hub()[0], 2);
        assert!(reference.hub()[1] < *reference.hub().last().unwrap());
    }

    #[test]
    fn witness_shape_validation() {
        assert!(matches!(
            SunWitness::new(vec![0, 1], vec![2, 3]),
            Err(Error::OrderTooSmall { t: 2 })
        ));
        assert!(SunWitness::new(vec![0, 1, 2], vec![3, 4]).is_err());
        assert!(SunWitness::new(vec![0, 1, 2], vec![3, 4, 0]).is_err());
    }

    #[test]
    fn verify_accepts_the_natural_witness() {
        let g = complete_sun(5);
        let w = SunWitness::new(vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]).unwrap();
        assert_eq!(verify_sun_witness(&g, &w), Ok(true));
    }

    #[test]
    fn verify_rejects_broken_structures() {
        // Ears made adjacent.
        let base = complete_sun(3);
        let mut edges: Vec<(u32, u32)> = base.edges().to_vec();
        edges.push((3, 4));
        let broken = Graph::new(6, edges).unwrap();
        let w = SunWitness::new(vec![0, 1, 2], vec![3, 4, 5]).unwrap();
        assert_eq!(verify_sun_witness(&base, &w), Ok(true));
        assert_eq!(verify_sun_witness(&broken, &w), Ok(false));

        // An ear seeing a third hub vertex.
        let base5 = complete_sun(5);
        let mut edges: Vec<(u32, u32)> = base5.edges().to_vec();
        edges.push((5, 2));
        let broken5 = Graph::new(10, edges).unwrap();
        let w5 = SunWitness::new((0..5).collect(), (5..10).collect()).unwrap();
        assert_eq!(verify_sun_witness(&broken5, &w5), Ok(false));

        // Out-of-range vertex is an error, not "false".
        assert!(matches!(
            verify_sun_witness(&Graph::empty(3), &w),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn finds_the_five_sun() {
        let g = complete_sun(5);
        let outcome = find_k_sun(&g, 5, SearchBudget::default()).unwrap();
        let w = outcome.found().expect("the 5-sun contains itself");
        assert_eq!(w.order(), 5);
        assert_eq!(verify_sun_witness(&g, w), Ok(true));

        // find_any_sun lands on the same order: no smaller sun embeds.
        match find_any_sun(&g, SearchBudget::default()) {
            SearchOutcome::Found(w) => assert_eq!(w.order(), 5),
            other => panic!("expected a sun, got {other:?}"),
        }
    }

    #[test]
    fn absent_cases() {
        assert_eq!(
            find_k_sun(&Graph::cycle(6), 3, SearchBudget::default()).unwrap(),
            SearchOutcome::Absent
        );
        let tree = Graph::new(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        assert!(find_any_sun(&tree, SearchBudget::default()).is_absent());
        assert!(matches!(
            find_k_sun(&Graph::empty(6), 2, SearchBudget::default()),
            Err(Error::OrderTooSmall { t: 2 })
        ));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = crate::corpus::random_graph(12, 7);
        match find_any_sun(&g, SearchBudget::new(1)) {
            SearchOutcome::Indeterminate { nodes_used } => assert!(nodes_used >= 1),
            other => panic!("a one-node budget cannot finish, got {other:?}"),
        }
    }

    #[test]
    fn budget_growth_only_resolves_indeterminate() {
        for seed in 0..30 {
            let g = crate::corpus::random_graph(9, seed);
            let small = find_any_sun(&g, SearchBudget::new(200));
            let large = find_any_sun(&g, SearchBudget::new(10_000_000));
            match small {
                SearchOutcome::Indeterminate { .. } => {}
                ref done => assert_eq!(done, &large, "seed {seed}"),
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let none = enumerate_suns(&Graph::cycle(4), 10, SearchBudget::default());
        assert!(none.witnesses.is_empty());
        assert!(matches!(none.status, EnumerationStatus::Complete));

        // The 3-sun contains exactly one sun; rotations and reflections all
        // canonicalize to it.
        let one = enumerate_suns(&complete_sun(3), 10, SearchBudget::default());
        assert_eq!(one.witnesses.len(), 1);
        assert!(matches!(one.status, EnumerationStatus::Complete));
        assert_eq!(
            one.witnesses[0],
            SunWitness::new(vec![0, 1, 2], vec![3, 4, 5]).unwrap()
        );

        let limited = enumerate_suns(&complete_sun(5), 1, SearchBudget::default());
        assert_eq!(limited.witnesses.len(), 1);
        assert!(matches!(limited.status, EnumerationStatus::LimitReached));
    }

    #[test]
    fn every_found_witness_verifies() {
        for seed in 100..130 {
            let g = crate::corpus::random_graph(10, seed);
            if let SearchOutcome::Found(w) = find_any_sun(&g, SearchBudget::default()) {
                assert_eq!(verify_sun_witness(&g, &w), Ok(true), "seed {seed}");
            }
        }
    }
}
