//! Simple graphs, the Hamming graphs `G_{n,r}` / `G^c_{n,r}` on `Q_n`, and
//! DIMACS edge-format I/O.
//!
//! Vertices of a Hamming graph are indexed by their bit patterns, so vertex
//! `v` carries the label `VertexLabel(v)`. Small graphs keep one bit-packed
//! adjacency row per vertex; Hamming graphs above [`DENSE_MAX_DIMENSION`]
//! answer adjacency from the distance predicate and enumerate neighbors by
//! XOR with a shared mask list.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Largest `n` for which `build_hamming_graph` materializes anything.
pub const MATERIALIZATION_CEILING: u32 = 24;
/// Largest `n` stored as explicit adjacency rows (2^13 rows of 2^13 bits).
pub const DENSE_MAX_DIMENSION: u32 = 13;
/// Largest vertex count accepted for general (row-stored) graphs.
pub const MAX_GENERAL_ORDER: usize = 1 << 16;

/// A vertex of `Q_n`: a length-`n` binary string stored in the low bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexLabel(pub u64);

impl VertexLabel {
    /// Renders the label as an `n`-character binary string.
    pub fn to_bit_string(self, n: u32) -> String {
        (0..n).rev().map(|i| if self.0 >> i & 1 == 1 { '1' } else { '0' }).collect()
    }

    pub fn fits(self, n: u32) -> bool {
        n >= 64 || self.0 >> n == 0
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[inline]
pub fn hamming_distance(a: VertexLabel, b: VertexLabel) -> u32 {
    (a.0 ^ b.0).count_ones()
}

/// Bitwise complement of `v` within `n` bits.
#[inline]
pub fn antipode(v: VertexLabel, n: u32) -> VertexLabel {
    VertexLabel(!v.0 & low_mask(n))
}

#[inline]
fn low_mask(n: u32) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// `G_{n,r}` (edges at distance `1..=r`) or, when `complemented`,
/// `G^c_{n,r}` (edges at distance `> r`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HammingGraphSpec {
    pub n: u32,
    pub r: u32,
    pub complemented: bool,
}

impl HammingGraphSpec {
    pub fn new(n: u32, r: u32, complemented: bool) -> Self {
        Self { n, r, complemented }
    }

    #[inline]
    pub fn adjacent(&self, a: VertexLabel, b: VertexLabel) -> bool {
        let d = hamming_distance(a, b);
        d != 0 && ((d <= self.r) != self.complemented)
    }

    fn weight_range(&self) -> (u32, u32) {
        if self.complemented {
            (self.r.saturating_add(1), self.n)
        } else {
            (1, self.r.min(self.n))
        }
    }

    /// All nonzero XOR masks joining a vertex to a neighbor, by ascending weight.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        let (lo, hi) = self.weight_range();
        let mut out = Vec::new();
        for w in lo..=hi {
            masks_of_weight(self.n, w, &mut out);
        }
        out
    }
}

/// Appends every `n`-bit mask of popcount `w` in increasing order (Gosper's hack).
fn masks_of_weight(n: u32, w: u32, out: &mut Vec<u64>) {
    if w == 0 || w > n {
        return;
    }
    let last = low_mask(w) << (n - w);
    let mut x = low_mask(w);
    loop {
        out.push(x);
        if x == last {
            break;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

#[derive(Clone)]
enum Storage {
    Rows(Vec<BitSet>),
    Implicit { spec: HammingGraphSpec, masks: Vec<u64> },
}

/// Finite simple graph on vertices `0..order`. Immutable once built.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    storage: Storage,
    degrees: Vec<u32>,
    max_degree: usize,
    edge_count: usize,
    hamming: Option<HammingGraphSpec>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edge_count)
            .field("max_degree", &self.max_degree)
            .field("hamming", &self.hamming)
            .finish()
    }
}

impl Graph {
    fn from_rows(rows: Vec<BitSet>, hamming: Option<HammingGraphSpec>) -> Self {
        let degrees: Vec<u32> = rows.iter().map(|r| r.count() as u32).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0) as usize;
        let edge_count = degrees.iter().map(|&d| d as usize).sum::<usize>() / 2;
        Self { order: rows.len(), storage: Storage::Rows(rows), degrees, max_degree, edge_count, hamming }
    }

    /// Builds a graph from 0-indexed edges. Loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order > MAX_GENERAL_ORDER {
            return Err(Error::TooLarge { what: "graph order", size: order as u64, cap: MAX_GENERAL_ORDER as u64 });
        }
        let mut rows = vec![BitSet::new(order); order];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x as u64, bound: order as u64 });
                }
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            if !rows[u].insert(v) {
                return Err(Error::InvalidArgument(format!("duplicate edge {u}-{v}")));
            }
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows, None))
    }

    pub fn empty(order: usize) -> Self {
        Self::from_rows(vec![BitSet::new(order); order], None)
    }

    pub fn complete(order: usize) -> Self {
        let rows = (0..order)
            .map(|v| {
                let mut r = BitSet::full(order);
                r.remove(v);
                r
            })
            .collect();
        Self::from_rows(rows, None)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: usize) -> usize {
        match &self.storage {
            Storage::Rows(_) => self.degrees[v] as usize,
            Storage::Implicit { masks, .. } => masks.len(),
        }
    }

    /// The defining spec, for graphs produced by [`build_hamming_graph`].
    pub fn hamming_spec(&self) -> Option<HammingGraphSpec> {
        self.hamming
    }

    pub fn label(&self, v: usize) -> Option<VertexLabel> {
        self.hamming.map(|_| VertexLabel(v as u64))
    }

    /// Hamming graphs are vertex-transitive (XOR translations are automorphisms).
    pub fn is_vertex_transitive(&self) -> bool {
        self.hamming.is_some()
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        match &self.storage {
            Storage::Rows(rows) => rows[u].contains(v),
            Storage::Implicit { spec, .. } => spec.adjacent(VertexLabel(u as u64), VertexLabel(v as u64)),
        }
    }

    /// Neighbors of `v`. Row-stored graphs yield them in increasing order.
    pub fn neighbors(&self, v: usize) -> Box<dyn Iterator<Item = usize> + '_> {
        match &self.storage {
            Storage::Rows(rows) => Box::new(rows[v].iter()),
            Storage::Implicit { masks, .. } => Box::new(masks.iter().map(move |&m| (v as u64 ^ m) as usize)),
        }
    }

    /// Open neighborhood of `v` as a bit set over all vertices.
    pub fn neighbor_set(&self, v: usize) -> BitSet {
        match &self.storage {
            Storage::Rows(rows) => rows[v].clone(),
            Storage::Implicit { .. } => BitSet::from_indices(self.order, self.neighbors(v)),
        }
    }

    pub fn first_isolated_vertex(&self) -> Option<usize> {
        (0..self.order).find(|&v| self.degree(v) == 0)
    }

    pub fn ensure_no_isolated(&self) -> Result<()> {
        match self.first_isolated_vertex() {
            Some(v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.order {
            let mut nb: Vec<usize> = self.neighbors(u).filter(|&v| v > u).collect();
            nb.sort_unstable();
            out.extend(nb.into_iter().map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        match &self.storage {
            Storage::Implicit { spec, .. } => {
                let spec = HammingGraphSpec { complemented: !spec.complemented, ..*spec };
                build_hamming_graph(spec).expect("complement of a materialized Hamming graph")
            }
            Storage::Rows(rows) => {
                let full = BitSet::full(self.order);
                let rows = rows
                    .iter()
                    .enumerate()
                    .map(|(v, row)| {
                        let mut c = full.clone();
                        c.difference_with(row);
                        c.remove(v);
                        c
                    })
                    .collect();
                let hamming = self.hamming.map(|s| HammingGraphSpec { complemented: !s.complemented, ..s });
                Graph::from_rows(rows, hamming)
            }
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.order;
        let edges = self.edges().into_iter().chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.order + other.order, edges)
    }
}

pub fn build_hamming_graph(spec: HammingGraphSpec) -> Result<Graph> {
    if spec.n == 0 {
        return Err(Error::InvalidArgument("hypercube dimension must be at least 1".into()));
    }
    if spec.n > MATERIALIZATION_CEILING {
        return Err(Error::DimensionTooLarge { n: spec.n, max: MATERIALIZATION_CEILING });
    }
    let order = 1usize << spec.n;
    let masks = spec.neighbor_masks();
    if spec.n > DENSE_MAX_DIMENSION {
        let degree = masks.len() as u32;
        return Ok(Graph {
            order,
            degrees: Vec::new(),
            max_degree: degree as usize,
            edge_count: order / 2 * degree as usize,
            storage: Storage::Implicit { spec, masks },
            hamming: Some(spec),
        });
    }
    let mut rows = vec![BitSet::new(order); order];
    for (v, row) in rows.iter_mut().enumerate() {
        for u in 0..order {
            if spec.adjacent(VertexLabel(v as u64), VertexLabel(u as u64)) {
                row.insert(u);
            }
        }
    }
    Ok(Graph::from_rows(rows, Some(spec)))
}

/// Histogram `degree -> number of vertices`.
pub fn degree_profile(g: &Graph) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for v in 0..g.order() {
        *hist.entry(g.degree(v)).or_insert(0) += 1;
    }
    hist
}

/// Parses the DIMACS edge format (`c` comments, one `p edge <m> <e>`
/// header, `e <u> <v>` lines with 1-indexed endpoints).
pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut rows: Vec<BitSet> = Vec::new();
    let mut found = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "second problem line"));
                }
                if parts.next() != Some("edge") {
                    return Err(Error::parse(line_no, "expected `p edge <vertices> <edges>`"));
                }
                let m = parse_count(parts.next(), line_no, "vertex count")?;
                let e = parse_count(parts.next(), line_no, "edge count")?;
                if parts.next().is_some() {
                    return Err(Error::parse(line_no, "trailing tokens on problem line"));
                }
                if m > MAX_GENERAL_ORDER {
                    return Err(Error::TooLarge { what: "graph order", size: m as u64, cap: MAX_GENERAL_ORDER as u64 });
                }
                header = Some((m, e));
                rows = vec![BitSet::new(m); m];
            }
            Some("e") => {
                let Some((m, _)) = header else {
                    return Err(Error::parse(line_no, "edge before problem line"));
                };
                let u = parse_count(parts.next(), line_no, "endpoint")?;
                let v = parse_count(parts.next(), line_no, "endpoint")?;
                if parts.next().is_some() {
                    return Err(Error::parse(line_no, "trailing tokens on edge line"));
                }
                for x in [u, v] {
                    if x == 0 || x > m {
                        return Err(Error::parse(line_no, format!("endpoint {x} outside 1..={m}")));
                    }
                }
                if u == v {
                    return Err(Error::parse(line_no, format!("loop at vertex {u}")));
                }
                if !rows[u - 1].insert(v - 1) {
                    return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
                }
                rows[v - 1].insert(u - 1);
                found += 1;
            }
            Some(tok) => return Err(Error::parse(line_no, format!("unknown line type `{tok}`"))),
            None => unreachable!(),
        }
    }
    let Some((_, declared)) = header else {
        return Err(Error::parse(0, "missing problem line"));
    };
    if declared != found {
        return Err(Error::InconsistentHeader { declared, found });
    }
    Ok(Graph::from_rows(rows, None))
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))
}

/// Canonical DIMACS text: header plus edges `u < v` in sorted order.
pub fn write_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::with_capacity(16 + edges.len() * 12);
    let _ = writeln!(out, "p edge {} {}", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
