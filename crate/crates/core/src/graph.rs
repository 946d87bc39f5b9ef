//! Immutable simple undirected graphs with contiguous 0-based vertices,
//! the edge-list text format, and elementary queries.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// An immutable simple undirected graph.
///
/// Vertices are `0..n`. Edges are stored as ascending `(u, v)` pairs with
/// `u < v`, and every vertex carries a sorted neighbor list, so iteration
/// order is canonical: every "first found" result downstream is
/// deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    rows: Vec<BitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Graph> {
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a as usize >= n {
                return Err(Error::VertexOutOfRange { vertex: a as usize, n });
            }
            if b as usize >= n {
                return Err(Error::VertexOutOfRange { vertex: b as usize, n });
            }
            if a == b {
                return Err(Error::InvalidInput(format!("self-loop at vertex {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();

        let mut adj = vec![Vec::new(); n];
        let mut rows = vec![BitSet::new(n); n];
        for &(u, v) in &list {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
            rows[u as usize].insert(v as usize);
            rows[v as usize].insert(u as usize);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj, rows })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::new(n, []).unwrap()
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let edges = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
        Graph::new(n, edges).unwrap()
    }

    /// The path 0 - 1 - ... - (n-1).
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n as u32).map(|v| (v - 1, v))).unwrap()
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges = (0..n as u32).map(|u| (u, (u + 1) % n as u32));
        Graph::new(n, edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as ascending `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.rows[u as usize].contains(v as usize)
    }

    pub(crate) fn row(&self, v: u32) -> &BitSet {
        &self.rows[v as usize]
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v as usize, n: self.n })
        }
    }

    /// The complement graph: `ab` is an edge iff `a != b` and `ab` is not an
    /// edge here. An involution.
    pub fn complement(&self) -> Graph {
        let n = self.n as u32;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::new(self.n, edges).unwrap()
    }

    /// The subgraph induced by `s`, plus the map from new indices back to the
    /// members of `s` (ascending).
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<u32>)> {
        for &v in s.iter() {
            self.check_vertex(v)?;
        }
        let map: Vec<u32> = s.iter().copied().collect();
        let mut edges = Vec::new();
        for i in 0..map.len() {
            for j in i + 1..map.len() {
                if self.has_edge(map[i], map[j]) {
                    edges.push((i as u32, j as u32));
                }
            }
        }
        Ok((Graph::new(map.len(), edges)?, map))
    }

    /// True iff every pair inside `s` is an edge.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let m = s.as_slice();
        m.iter()
            .enumerate()
            .all(|(i, &u)| m[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True iff no pair inside `s` is an edge.
    pub fn is_stable(&self, s: &VertexSet) -> bool {
        let m = s.as_slice();
        m.iter()
            .enumerate()
            .all(|(i, &u)| m[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// The lexicographically least triangle, or `None` iff the graph is
    /// triangle-free.
    pub fn find_triangle(&self) -> Option<VertexSet> {
        for u in 0..self.n as u32 {
            for &v in self.neighbors(u) {
                if v <= u {
                    continue;
                }
                for &w in self.neighbors(u) {
                    if w > v && self.has_edge(v, w) {
                        return Some(VertexSet::new(vec![u, v, w]));
                    }
                }
            }
        }
        None
    }
}

/// A sorted duplicate-free set of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<u32>,
}

impl VertexSet {
    /// Sorts and deduplicates.
    pub fn new(mut members: Vec<u32>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.members
    }
}

impl From<Vec<u32>> for VertexSet {
    fn from(v: Vec<u32>) -> Self {
        VertexSet::new(v)
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// Parses the edge-list text format.
///
/// Line 1 is `"n m"`; the next `m` non-comment lines are `"u v"` edges.
/// Lines starting with `#` are skipped anywhere in the document. Duplicate
/// edge lines collapse to one edge; endpoint order within a line is
/// tolerated. Self-loops and out-of-range endpoints are rejected with the
/// offending 1-based line number.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "missing header line \"n m\"".into() })?;
    let mut it = header.split_whitespace();
    let parse_count = |tok: Option<&str>, what: &str| -> Result<usize> {
        tok.ok_or_else(|| Error::Parse {
            line: header_no,
            msg: format!("missing {what} in header"),
        })?
        .parse::<usize>()
        .map_err(|_| Error::Parse { line: header_no, msg: format!("invalid {what} in header") })
    };
    let n = parse_count(it.next(), "vertex count")?;
    let m = parse_count(it.next(), "edge count")?;
    if it.next().is_some() {
        return Err(Error::Parse { line: header_no, msg: "trailing tokens in header".into() });
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("expected {m} edge lines, found {}", edges.len()),
        })?;
        let mut it = line.split_whitespace();
        let mut endpoint = |what: &str| -> Result<u32> {
            it.next()
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    msg: format!("missing {what} endpoint"),
                })?
                .parse::<u32>()
                .map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("invalid {what} endpoint"),
                })
        };
        let u = endpoint("first")?;
        let v = endpoint("second")?;
        if it.next().is_some() {
            return Err(Error::Parse { line: line_no, msg: "trailing tokens on edge line".into() });
        }
        if u == v {
            return Err(Error::Parse { line: line_no, msg: format!("self-loop at vertex {u}") });
        }
        for w in [u, v] {
            if w as usize >= n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("endpoint {w} out of range for n={n}"),
                });
            }
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse { line: line_no, msg: "content after the last edge".into() });
    }
    Graph::new(n, edges)
}

/// Emits the canonical edge-list document: header, then edges in ascending
/// `(u, v)` order, newline-terminated. `parse_graph(emit_graph(g)) == g`.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(8 + 8 * g.edge_count());
    out.push_str(&format!("{} {}\n", g.vertex_count(), g.edge_count()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Draws a seeded triangle-free graph on `n` vertices.
///
/// Candidate pairs are drawn uniformly; a pair is accepted iff it is new and
/// closes no triangle. The draw stops after `target_edges` acceptances or
/// `50 * target_edges` attempts, whichever comes first, so the edge count may
/// fall short of the target. Identical `(n, target_edges, seed)` give an
/// identical graph.
pub fn random_triangle_free(n: usize, target_edges: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n < 2 {
        return Graph::empty(n);
    }
    let mut rows = vec![BitSet::new(n); n];
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for _ in 0..target_edges.saturating_mul(50) {
        if edges.len() == target_edges {
            break;
        }
        let u = rng.random_range(0..n);
        let mut v = rng.random_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        if rows[u].contains(v) {
            continue;
        }
        // Adding uv closes a triangle iff u and v share a neighbor.
        if rows[u].intersection_count(&rows[v]) > 0 {
            continue;
        }
        rows[u].insert(v);
        rows[v].insert(u);
        edges.push((u as u32, v as u32));
    }
    Graph::new(n, edges).unwrap()
}
