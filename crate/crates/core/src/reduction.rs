//! The two reduction gadgets tying sun detection to NP-complete problems,
//! with per-vertex role labels and witness translation in both directions.
//!
//! `build_f(g, k)` maps a triangle-free graph to a graph containing a sun
//! iff `g` has a stable set of size `k`. `build_h(g)` attaches a pendant
//! degree-two vertex to every edge so that k-cliques become k-suns. Both
//! translators re-validate the structural consequences the constructions
//! guarantee and fail loudly with [`Error::TheoremViolation`] if one ever
//! breaks, because a counterexample is exactly what this crate exists to
//! surface.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::sun::{verify_sun_witness, SunWitness};

/// Role of one vertex of a constructed product graph.
///
/// All fields are 0-based; the label file format prints the block subscripts
/// 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    /// Copy `copy` inside the clique substituted for source vertex `source`.
    Sub { source: u32, copy: u32 },
    /// `u_{index+1}` in the central clique.
    U { index: u32 },
    /// `w_{index+1}` in the central clique.
    W { index: u32 },
    /// `x_{index+1}` in the stable set wired to the central clique.
    X { index: u32 },
    /// An original vertex kept by the edge-subdivision gadget.
    Orig { vertex: u32 },
    /// The pendant vertex attached to source edge `(a, b)`, `a < b`.
    Ear { a: u32, b: u32 },
}

/// Per-vertex role annotation of a product graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMap {
    roles: Vec<VertexRole>,
}

impl LabelMap {
    pub fn len(&self) -> usize {
        self.roles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roles.is_empty()
    }

    pub fn role(&self, v: u32) -> VertexRole {
        self.roles[v as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, VertexRole)> + '_ {
        self.roles.iter().enumerate().map(|(i, &r)| (i as u32, r))
    }
}

/// Emits the label file: one `"<index> <ROLE> ..."` line per vertex, in
/// vertex order. Block subscripts print 1-based, vertex indices 0-based.
pub fn emit_labels(labels: &LabelMap) -> String {
    let mut out = String::new();
    for (v, role) in labels.iter() {
        let line = match role {
            VertexRole::Sub { source, copy } => {
                format!("{v} SUB {} {}", source + 1, copy + 1)
            }
            VertexRole::U { index } => format!("{v} U {}", index + 1),
            VertexRole::W { index } => format!("{v} W {}", index + 1),
            VertexRole::X { index } => format!("{v} X {}", index + 1),
            VertexRole::Orig { vertex } => format!("{v} ORIG {vertex}"),
            VertexRole::Ear { a, b } => format!("{v} EAR {a} {b}"),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Parses a label file back into a [`LabelMap`]. Lines must cover vertices
/// `0..len` in order.
pub fn parse_labels(text: &str) -> Result<LabelMap> {
    let mut roles = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: &str| Error::Parse { line: line_no, msg: msg.into() };
        let num = |s: &str| s.parse::<u32>().map_err(|_| err("invalid number"));
        if toks.len() < 2 {
            return Err(err("expected \"<index> <ROLE> ...\""));
        }
        let index = num(toks[0])?;
        if index as usize != roles.len() {
            return Err(err("vertex indices must be consecutive from 0"));
        }
        let arg = |i: usize| -> Result<u32> {
            num(toks.get(i).copied().ok_or_else(|| err("missing role argument"))?)
        };
        let one_based = |i: usize| -> Result<u32> {
            let raw = arg(i)?;
            if raw == 0 {
                return Err(err("block subscripts are 1-based"));
            }
            Ok(raw - 1)
        };
        let role = match (toks[1], toks.len()) {
            ("SUB", 4) => VertexRole::Sub { source: one_based(2)?, copy: one_based(3)? },
            ("U", 3) => VertexRole::U { index: one_based(2)? },
            ("W", 3) => VertexRole::W { index: one_based(2)? },
            ("X", 3) => VertexRole::X { index: one_based(2)? },
            ("ORIG", 3) => VertexRole::Orig { vertex: arg(2)? },
            ("EAR", 4) => VertexRole::Ear { a: arg(2)?, b: arg(3)? },
            _ => return Err(err("unknown role or wrong argument count")),
        };
        roles.push(role);
    }
    Ok(LabelMap { roles })
}

/// The stable-set gadget: product graph, labels, and the parameters that
/// built it.
#[derive(Clone, Debug)]
pub struct FReduction {
    source: Graph,
    k: usize,
    product: Graph,
    labels: LabelMap,
}

/// Builds the stable-set gadget from a triangle-free graph and `k >= 4`.
///
/// Layout on `n*k + 3k` vertices:
/// - vertex `i*k + j` is copy `j` of source vertex `i`; each such block is a
///   clique, and two blocks are completely joined iff their source vertices
///   are adjacent;
/// - the next `2k` vertices are `u_1, w_1, ..., u_k, w_k`, one clique;
/// - the last `k` vertices are the stable set `x_1..x_k`, with `x_i` seeing
///   `w_i` and `u_{i+1}` (cyclically);
/// - the j-th copy inside every block additionally sees `u_j` and `w_j`.
pub fn build_f(g: &Graph, k: usize) -> Result<FReduction> {
    if k < 4 {
        return Err(Error::KTooSmall { k });
    }
    if let Some(tri) = g.find_triangle() {
        let m = tri.as_slice();
        return Err(Error::NotTriangleFree { a: m[0], b: m[1], c: m[2] });
    }
    let n = g.vertex_count();
    let k32 = k as u32;
    let sub = |i: u32, j: u32| i * k32 + j;
    let u = |i: u32| (n * k) as u32 + 2 * i;
    let w = |i: u32| (n * k) as u32 + 2 * i + 1;
    let x = |i: u32| (n * k + 2 * k) as u32 + i;

    let mut edges: Vec<(u32, u32)> = Vec::new();
    // Substituted cliques.
    for i in 0..n as u32 {
        for j1 in 0..k32 {
            for j2 in j1 + 1..k32 {
                edges.push((sub(i, j1), sub(i, j2)));
            }
        }
    }
    // Complete joins between blocks of adjacent source vertices.
    for &(a, b) in g.edges() {
        for j1 in 0..k32 {
            for j2 in 0..k32 {
                edges.push((sub(a, j1), sub(b, j2)));
            }
        }
    }
    // The central clique u_1, w_1, ..., u_k, w_k.
    let central: Vec<u32> = (0..k32).flat_map(|i| [u(i), w(i)]).collect();
    for (idx, &a) in central.iter().enumerate() {
        for &b in &central[idx + 1..] {
            edges.push((a, b));
        }
    }
    // x_i sees w_i and u_{i+1}.
    for i in 0..k32 {
        edges.push((x(i), w(i)));
        edges.push((x(i), u((i + 1) % k32)));
    }
    // Copy j of every block sees its column of the central clique.
    for i in 0..n as u32 {
        for j in 0..k32 {
            edges.push((sub(i, j), u(j)));
            edges.push((sub(i, j), w(j)));
        }
    }

    let product = Graph::new(n * k + 3 * k, edges)?;
    let mut roles = Vec::with_capacity(n * k + 3 * k);
    for i in 0..n as u32 {
        for j in 0..k32 {
            roles.push(VertexRole::Sub { source: i, copy: j });
        }
    }
    for i in 0..k32 {
        roles.push(VertexRole::U { index: i });
        roles.push(VertexRole::W { index: i });
    }
    for i in 0..k32 {
        roles.push(VertexRole::X { index: i });
    }
    Ok(FReduction { source: g.clone(), k, product, labels: LabelMap { roles } })
}

impl FReduction {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn product(&self) -> &Graph {
        &self.product
    }

    pub fn labels(&self) -> &LabelMap {
        &self.labels
    }

    /// Product index of copy `copy` of source vertex `source`.
    pub fn sub_vertex(&self, source: u32, copy: u32) -> u32 {
        source * self.k as u32 + copy
    }

    pub fn u_vertex(&self, i: u32) -> u32 {
        (self.source.vertex_count() * self.k) as u32 + 2 * i
    }

    pub fn w_vertex(&self, i: u32) -> u32 {
        (self.source.vertex_count() * self.k) as u32 + 2 * i + 1
    }

    pub fn x_vertex(&self, i: u32) -> u32 {
        (self.source.vertex_count() * self.k + 2 * self.k) as u32 + i
    }

    /// Executable check: no triangle of the product has its three vertices
    /// in three distinct substituted blocks. Scans every such triple.
    pub fn check_block_triangles(&self) -> Result<()> {
        let subs: Vec<(u32, u32)> = self
            .labels
            .iter()
            .filter_map(|(v, r)| match r {
                VertexRole::Sub { source, .. } => Some((v, source)),
                _ => None,
            })
            .collect();
        for (ai, &(a, sa)) in subs.iter().enumerate() {
            for (bi, &(b, sb)) in subs.iter().enumerate().skip(ai + 1) {
                if sa == sb || !self.product.has_edge(a, b) {
                    continue;
                }
                for &(c, sc) in &subs[bi + 1..] {
                    if sc != sa
                        && sc != sb
                        && self.product.has_edge(a, c)
                        && self.product.has_edge(b, c)
                    {
                        return Err(Error::TheoremViolation(format!(
                            "triangle {a},{b},{c} spans three distinct blocks"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Executable check: block vertices from different blocks with a common
    /// neighbor in the central clique have identical central-clique
    /// neighborhoods. Scans every such pair.
    pub fn check_central_neighborhood_alignment(&self) -> Result<()> {
        let central: Vec<u32> = self
            .labels
            .iter()
            .filter_map(|(v, r)| match r {
                VertexRole::U { .. } | VertexRole::W { .. } => Some(v),
                _ => None,
            })
            .collect();
        let subs: Vec<(u32, u32)> = self
            .labels
            .iter()
            .filter_map(|(v, r)| match r {
                VertexRole::Sub { source, .. } => Some((v, source)),
                _ => None,
            })
            .collect();
        let central_nbhd = |v: u32| -> Vec<u32> {
            central.iter().copied().filter(|&c| self.product.has_edge(v, c)).collect()
        };
        for (ai, &(a, sa)) in subs.iter().enumerate() {
            let na = central_nbhd(a);
            for &(b, sb) in &subs[ai + 1..] {
                if sa == sb {
                    continue;
                }
                let nb = central_nbhd(b);
                let share = na.iter().any(|v| nb.contains(v));
                if share && na != nb {
                    return Err(Error::TheoremViolation(format!(
                        "block vertices {a} and {b} share a central neighbor \
                         but have different central neighborhoods"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Executable check of the shape every sun of the product must have:
    /// order `2k`, hub inside the central clique, and ears alternating
    /// between block copies and the stable set, `k` of each.
    pub fn check_sun_shape(&self, w: &SunWitness) -> Result<()> {
        let k = self.k;
        if w.order() != 2 * k {
            return Err(Error::TheoremViolation(format!(
                "sun of order {} in a gadget built with k = {k}",
                w.order()
            )));
        }
        for &c in w.hub() {
            match self.labels.role(c) {
                VertexRole::U { .. } | VertexRole::W { .. } => {}
                r => {
                    return Err(Error::TheoremViolation(format!(
                        "hub vertex {c} has role {r:?}, expected the central clique"
                    )))
                }
            }
        }
        let mut sub_ears = 0usize;
        let mut x_ears = 0usize;
        let mut is_sub = Vec::with_capacity(w.ears().len());
        for &e in w.ears() {
            match self.labels.role(e) {
                VertexRole::Sub { .. } => {
                    sub_ears += 1;
                    is_sub.push(true);
                }
                VertexRole::X { .. } => {
                    x_ears += 1;
                    is_sub.push(false);
                }
                r => {
                    return Err(Error::TheoremViolation(format!(
                        "ear {e} has role {r:?}, expected a block copy or stable-set vertex"
                    )))
                }
            }
        }
        if sub_ears != k || x_ears != k {
            return Err(Error::TheoremViolation(format!(
                "expected {k} block ears and {k} stable-set ears, got {sub_ears} and {x_ears}"
            )));
        }
        for i in 0..is_sub.len() {
            if is_sub[i] == is_sub[(i + 1) % is_sub.len()] {
                return Err(Error::TheoremViolation(
                    "ears do not alternate between blocks and the stable set".into(),
                ));
            }
        }
        Ok(())
    }

    #[cfg(test)]
    pub(crate) fn forge_labels_for_test(&mut self, roles: Vec<VertexRole>) {
        self.labels = LabelMap { roles };
    }
}

/// Translates a stable set of the source into the sun it induces in the
/// product: hub `u_1, w_1, ..., u_k, w_k`, ears alternating between the
/// diagonal block copies of the chosen vertices and the stable set `X`.
pub fn witness_from_stable_set(inst: &FReduction, s: &VertexSet) -> Result<SunWitness> {
    let k = inst.k;
    if s.len() != k {
        return Err(Error::InvalidInput(format!(
            "need a stable set of exactly {k} vertices, got {}",
            s.len()
        )));
    }
    let n = inst.source.vertex_count();
    if let Some(&v) = s.iter().find(|&&v| v as usize >= n) {
        return Err(Error::VertexOutOfRange { vertex: v as usize, n });
    }
    if !inst.source.is_stable(s) {
        return Err(Error::InvalidInput("the chosen vertices are not a stable set".into()));
    }
    let mut hub = Vec::with_capacity(2 * k);
    let mut ears = Vec::with_capacity(2 * k);
    for (i, &v) in s.iter().enumerate() {
        let i = i as u32;
        hub.push(inst.u_vertex(i));
        hub.push(inst.w_vertex(i));
        ears.push(inst.sub_vertex(v, i));
        ears.push(inst.x_vertex(i));
    }
    let w = SunWitness::new(hub, ears)?;
    debug_assert_eq!(verify_sun_witness(&inst.product, &w), Ok(true));
    Ok(w)
}

/// Reads a stable set of the source off a verified sun of the product.
///
/// Re-validates what the construction guarantees — the sun has order `2k`,
/// its ears split into `k` block copies (one per distinct source vertex) and
/// `k` stable-set vertices, and the recovered source vertices are stable —
/// and reports [`Error::TheoremViolation`] if any of it fails.
pub fn stable_set_from_witness(inst: &FReduction, w: &SunWitness) -> Result<VertexSet> {
    if !verify_sun_witness(&inst.product, w)? {
        return Err(Error::InvalidWitness(
            "witness does not verify as a sun of the product".into(),
        ));
    }
    let k = inst.k;
    if w.order() != 2 * k {
        return Err(Error::TheoremViolation(format!(
            "verified sun of order {} instead of {}",
            w.order(),
            2 * k
        )));
    }
    let mut sources = Vec::new();
    let mut x_ears = 0usize;
    for &e in w.ears() {
        match inst.labels.role(e) {
            VertexRole::Sub { source, .. } => sources.push(source),
            VertexRole::X { .. } => x_ears += 1,
            r => {
                return Err(Error::TheoremViolation(format!(
                    "ear {e} has role {r:?}; ears must be block copies or stable-set vertices"
                )))
            }
        }
    }
    if sources.len() != k || x_ears != k {
        return Err(Error::TheoremViolation(format!(
            "expected {k} block ears and {k} stable-set ears, got {} and {x_ears}",
            sources.len()
        )));
    }
    let set = VertexSet::new(sources);
    if set.len() != k {
        return Err(Error::TheoremViolation(
            "two ears fell in the same substituted block".into(),
        ));
    }
    if !inst.source.is_stable(&set) {
        return Err(Error::TheoremViolation(
            "recovered source vertices are not a stable set".into(),
        ));
    }
    Ok(set)
}

/// The clique gadget: every source edge gains a pendant vertex seeing
/// exactly its two endpoints.
#[derive(Clone, Debug)]
pub struct HReduction {
    source: Graph,
    product: Graph,
    labels: LabelMap,
}

/// Builds the clique gadget on `n + m` vertices: originals keep their
/// indices, pendant vertices follow in ascending edge order.
pub fn build_h(g: &Graph) -> HReduction {
    let n = g.vertex_count();
    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    let mut roles: Vec<VertexRole> =
        (0..n as u32).map(|vertex| VertexRole::Orig { vertex }).collect();
    for (rank, &(a, b)) in g.edges().iter().enumerate() {
        let pendant = (n + rank) as u32;
        edges.push((a, pendant));
        edges.push((b, pendant));
        roles.push(VertexRole::Ear { a, b });
    }
    let product = Graph::new(n + g.edge_count(), edges).unwrap();
    HReduction { source: g.clone(), product, labels: LabelMap { roles } }
}

impl HReduction {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn product(&self) -> &Graph {
        &self.product
    }

    pub fn labels(&self) -> &LabelMap {
        &self.labels
    }

    /// Product index of the pendant vertex of source edge `(a, b)`.
    pub fn ear_vertex(&self, a: u32, b: u32) -> Option<u32> {
        let key = (a.min(b), a.max(b));
        self.source
            .edges()
            .binary_search(&key)
            .ok()
            .map(|rank| (self.source.vertex_count() + rank) as u32)
    }
}

/// Translates a source clique of size t >= 3 into the t-sun it induces in
/// the product: the clique is the hub, the pendant vertices of consecutive
/// clique edges are the ears.
pub fn sun_from_clique(inst: &HReduction, c: &VertexSet) -> Result<SunWitness> {
    let t = c.len();
    if t < 3 {
        return Err(Error::OrderTooSmall { t });
    }
    let n = inst.source.vertex_count();
    if let Some(&v) = c.iter().find(|&&v| v as usize >= n) {
        return Err(Error::VertexOutOfRange { vertex: v as usize, n });
    }
    if !inst.source.is_clique(c) {
        return Err(Error::InvalidInput("the chosen vertices are not a clique".into()));
    }
    let hub: Vec<u32> = c.iter().copied().collect();
    let ears: Vec<u32> = (0..t)
        .map(|i| {
            inst.ear_vertex(hub[i], hub[(i + 1) % t])
                .expect("every clique edge has a pendant vertex")
        })
        .collect();
    let w = SunWitness::new(hub, ears)?;
    debug_assert_eq!(verify_sun_witness(&inst.product, &w), Ok(true));
    Ok(w)
}

/// Reads a source clique off a verified sun of the product: the hub must
/// consist of original vertices (pendants have degree two and cannot sit in
/// a hub) and be a clique of the source.
pub fn clique_from_sun(inst: &HReduction, w: &SunWitness) -> Result<VertexSet> {
    if !verify_sun_witness(&inst.product, w)? {
        return Err(Error::InvalidWitness(
            "witness does not verify as a sun of the product".into(),
        ));
    }
    let mut members = Vec::with_capacity(w.order());
    for &c in w.hub() {
        match inst.labels.role(c) {
            VertexRole::Orig { vertex } => members.push(vertex),
            r => {
                return Err(Error::TheoremViolation(format!(
                    "hub vertex {c} has role {r:?}; a degree-two pendant cannot be a hub vertex"
                )))
            }
        }
    }
    let set = VertexSet::new(members);
    if set.len() != w.order() || !inst.source.is_clique(&set) {
        return Err(Error::TheoremViolation(
            "recovered hub is not a clique of the source".into(),
        ));
    }
    Ok(set)
}
