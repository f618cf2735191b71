//! Total domination: verification, bounds, an exact branch-and-bound solver
//! and an exhaustive oracle.
//!
//! A set `S` is totally dominating when every vertex, members of `S`
//! included, has a neighbor in `S`. Neighborhoods are open: a vertex never
//! dominates itself.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`gamma_t_exhaustive`].
pub const EXHAUSTIVE_MAX_ORDER: usize = 20;
/// Largest order accepted by [`exact_gamma_t`].
pub const EXACT_MAX_ORDER: usize = 4096;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolverStatus {
    Exact,
    BoundsOnly { time_limit_hit: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub witness: VertexSet,
    pub status: SolverStatus,
    /// Search nodes expanded by the branch-and-bound.
    pub nodes: u64,
}

impl DominationResult {
    pub fn is_exact(&self) -> bool {
        self.status == SolverStatus::Exact
    }
}

pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.ensure_no_isolated()?;
    for v in s.iter() {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: v as u64, bound: g.order() as u64 });
        }
    }
    Ok((0..g.order()).all(|v| g.neighbors(v).any(|u| s.contains(u))))
}

/// `ceil(m / Δ)`.
pub fn trivial_lower_bound(g: &Graph) -> Result<usize> {
    g.ensure_no_isolated()?;
    Ok(g.order().div_ceil(g.max_degree()).max(usize::from(g.order() > 0)))
}

/// Greedy total dominating set: repeatedly take the vertex whose open
/// neighborhood holds the most vertices that are neither dominated nor
/// chosen, then give every chosen vertex without a chosen neighbor its
/// highest-degree neighbor.
pub fn greedy_upper_bound(g: &Graph) -> Result<VertexSet> {
    g.ensure_no_isolated()?;
    let m = g.order();
    let mut chosen = vec![false; m];
    let mut dominated = vec![false; m];
    loop {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..m {
            let gain = g.neighbors(v).filter(|&u| !dominated[u] && !chosen[u]).count();
            if gain > 0 && best.map_or(true, |(b, _)| gain > b) {
                best = Some((gain, v));
            }
        }
        let Some((_, v)) = best else { break };
        chosen[v] = true;
        for u in g.neighbors(v) {
            dominated[u] = true;
        }
    }
    // Repair chosen vertices that nothing chosen dominates.
    while let Some(v) = (0..m).find(|&v| chosen[v] && !dominated[v]) {
        let w = g.neighbors(v).max_by_key(|&u| (g.degree(u), std::cmp::Reverse(u))).expect("no isolated vertices");
        chosen[w] = true;
        for u in g.neighbors(w) {
            dominated[u] = true;
        }
    }
    let set = VertexSet::new((0..m).filter(|&v| chosen[v]));
    debug_assert!(is_total_dominating(g, &set).unwrap());
    Ok(set)
}

/// Drops members whose removal keeps the set totally dominating.
fn prune_redundant(g: &Graph, set: &VertexSet) -> VertexSet {
    let m = g.order();
    let mut inset = vec![false; m];
    let mut hits = vec![0usize; m];
    for v in set.iter() {
        inset[v] = true;
        for u in g.neighbors(v) {
            hits[u] += 1;
        }
    }
    for v in set.iter().rev() {
        if g.neighbors(v).all(|u| hits[u] > 1) {
            inset[v] = false;
            for u in g.neighbors(v) {
                hits[u] -= 1;
            }
        }
    }
    VertexSet::new((0..m).filter(|&v| inset[v]))
}

/// Ground-truth total domination number by subsets of increasing size.
pub fn gamma_t_exhaustive(g: &Graph) -> Result<usize> {
    g.ensure_no_isolated()?;
    let m = g.order();
    if m > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::TooLarge {
            what: "exhaustive oracle order",
            size: m as u64,
            cap: EXHAUSTIVE_MAX_ORDER as u64,
        });
    }
    if m == 0 {
        return Err(Error::InvalidArgument("graph has no vertices".into()));
    }
    let nbr: Vec<u32> = (0..m).map(|v| g.neighbors(v).fold(0u32, |acc, u| acc | 1 << u)).collect();
    for k in 1..=m {
        let last: u32 = (((1u64 << k) - 1) << (m - k)) as u32;
        let mut s: u32 = ((1u64 << k) - 1) as u32;
        loop {
            if nbr.iter().all(|&n| n & s != 0) {
                return Ok(k);
            }
            if s == last {
                break;
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set dominates a graph without isolated vertices")
}

/// Two adjacent centers per component, each with `delta - 1` private
/// leaves. `m = 2 * delta * pairs` and `γ_t = 2 * pairs = m / Δ`.
pub fn tight_example_graph(delta: usize, pairs: usize) -> Result<Graph> {
    if delta < 2 || pairs == 0 {
        return Err(Error::InvalidArgument(format!("need delta >= 2 and pairs >= 1, got delta={delta} pairs={pairs}")));
    }
    let size = 2 * delta;
    let mut edges = Vec::with_capacity(pairs * (size - 1));
    for p in 0..pairs {
        let base = p * size;
        let (a, b) = (base, base + 1);
        edges.push((a, b));
        for i in 0..delta - 1 {
            edges.push((a, base + 2 + i));
            edges.push((b, base + 1 + delta + i));
        }
    }
    Graph::from_edges(pairs * size, edges)
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub time_limit: Option<Duration>,
    /// Worker threads; `1` runs the search on the calling thread.
    pub threads: usize,
    /// Fix vertex 0 into the solution on vertex-transitive graphs.
    pub symmetry: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { time_limit: None, threads: 1, symmetry: true }
    }
}

pub fn exact_gamma_t(g: &Graph, time_limit: Option<Duration>) -> Result<DominationResult> {
    exact_gamma_t_with(g, &SolveOptions { time_limit, ..SolveOptions::default() })
}

pub fn exact_gamma_t_with(g: &Graph, opts: &SolveOptions) -> Result<DominationResult> {
    g.ensure_no_isolated()?;
    let m = g.order();
    if m == 0 {
        return Err(Error::InvalidArgument("graph has no vertices".into()));
    }
    match m {
        0..=64 => solve::<1>(g, opts),
        65..=128 => solve::<2>(g, opts),
        129..=256 => solve::<4>(g, opts),
        257..=512 => solve::<8>(g, opts),
        513..=1024 => solve::<16>(g, opts),
        1025..=EXACT_MAX_ORDER => solve::<64>(g, opts),
        _ => Err(Error::TooLarge { what: "exact solver order", size: m as u64, cap: EXACT_MAX_ORDER as u64 }),
    }
}

type Bits<const W: usize> = [u64; W];

#[inline]
fn set_bit<const W: usize>(b: &mut Bits<W>, i: usize) {
    b[i >> 6] |= 1 << (i & 63);
}

#[inline]
fn or<const W: usize>(a: &Bits<W>, b: &Bits<W>) -> Bits<W> {
    std::array::from_fn(|i| a[i] | b[i])
}

#[inline]
fn and<const W: usize>(a: &Bits<W>, b: &Bits<W>) -> Bits<W> {
    std::array::from_fn(|i| a[i] & b[i])
}

#[inline]
fn andnot<const W: usize>(a: &Bits<W>, b: &Bits<W>) -> Bits<W> {
    std::array::from_fn(|i| a[i] & !b[i])
}

#[inline]
fn count<const W: usize>(a: &Bits<W>) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
fn is_zero<const W: usize>(a: &Bits<W>) -> bool {
    a.iter().all(|&w| w == 0)
}

#[inline]
fn and_count<const W: usize>(a: &Bits<W>, b: &Bits<W>) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

fn ones<const W: usize>(a: &Bits<W>) -> impl Iterator<Item = usize> + '_ {
    a.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + t)
        })
    })
}

#[derive(Clone, Copy)]
struct Node<const W: usize> {
    chosen: Bits<W>,
    count: usize,
    dominated: Bits<W>,
    forbidden: Bits<W>,
}

enum Expansion<const W: usize> {
    Solution,
    Pruned,
    Children(Vec<Node<W>>),
}

const CHECK_INTERVAL: u64 = 1 << 12;

struct Shared {
    best: AtomicUsize,
    best_set: Mutex<Vec<usize>>,
    abort: AtomicBool,
    deadline: Option<Instant>,
    nodes: AtomicUsize,
}

impl Shared {
    fn offer(&self, count: usize, members: Vec<usize>) {
        let mut guard = self.best_set.lock().expect("incumbent lock");
        if count < self.best.load(Ordering::Acquire) {
            *guard = members;
            self.best.store(count, Ordering::Release);
        }
    }
}

struct Searcher<'a, const W: usize> {
    nbr: &'a [Bits<W>],
    all: Bits<W>,
    shared: &'a Shared,
    nodes: u64,
    cov: Vec<u32>,
}

impl<'a, const W: usize> Searcher<'a, W> {
    fn new(nbr: &'a [Bits<W>], all: Bits<W>, shared: &'a Shared) -> Self {
        Self { nbr, all, shared, nodes: 0, cov: vec![0; nbr.len()] }
    }

    /// Lower bound on additional vertices needed to dominate `undominated`
    /// from the allowed vertices, or `None` if some vertex can no longer be
    /// dominated. Also returns the branching vertex (fewest candidates).
    fn bound(&mut self, undominated: &Bits<W>, allowed: &Bits<W>) -> Option<(usize, usize)> {
        let need = count(undominated);
        let mut hist = [0usize; 65];
        let mut hist_big: Vec<usize> = Vec::new();
        for d in ones(allowed) {
            let c = and_count(&self.nbr[d], undominated);
            self.cov[d] = c as u32;
            if c < hist.len() {
                hist[c] += 1;
            } else {
                hist_big.push(c);
            }
        }

        let mut branch = (usize::MAX, usize::MAX);
        let mut dual = 0.0f64;
        for u in ones(undominated) {
            let cands = and(&self.nbr[u], allowed);
            let k = count(&cands);
            if k == 0 {
                return None;
            }
            if k < branch.0 {
                branch = (k, u);
            }
            let best_cov = ones(&cands).map(|d| self.cov[d]).max().unwrap_or(1);
            dual += 1.0 / f64::from(best_cov);
        }
        let dual_bound = (dual - 1e-6).ceil().max(0.0) as usize;

        // Fewest vertices whose coverages could sum to `need`.
        hist_big.sort_unstable_by(|a, b| b.cmp(a));
        let mut covered = 0usize;
        let mut taken = 0usize;
        for &c in &hist_big {
            if covered >= need {
                break;
            }
            covered += c;
            taken += 1;
        }
        for c in (1..hist.len()).rev() {
            if covered >= need {
                break;
            }
            let want = (need - covered).div_ceil(c).min(hist[c]);
            covered += want * c;
            taken += want;
        }
        if covered < need {
            return None;
        }
        Some((taken.max(dual_bound), branch.1))
    }

    fn expand(&mut self, node: &Node<W>) -> Expansion<W> {
        self.nodes += 1;
        let undominated = andnot(&self.all, &node.dominated);
        if is_zero(&undominated) {
            return Expansion::Solution;
        }
        let best = self.shared.best.load(Ordering::Relaxed);
        if node.count + 1 >= best {
            return Expansion::Pruned;
        }
        let allowed = andnot(&self.all, &node.forbidden);
        let Some((lb, u)) = self.bound(&undominated, &allowed) else {
            return Expansion::Pruned;
        };
        if node.count + lb >= best {
            return Expansion::Pruned;
        }
        let cands = and(&self.nbr[u], &allowed);
        let mut order: Vec<(u32, usize)> = ones(&cands).map(|c| (self.cov[c], c)).collect();
        order.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut forbidden = node.forbidden;
        let children = order
            .into_iter()
            .map(|(_, c)| {
                let mut chosen = node.chosen;
                set_bit(&mut chosen, c);
                set_bit(&mut forbidden, c);
                Node { chosen, count: node.count + 1, dominated: or(&node.dominated, &self.nbr[c]), forbidden }
            })
            .collect();
        Expansion::Children(children)
    }

    fn should_stop(&mut self) -> bool {
        if self.shared.abort.load(Ordering::Relaxed) {
            return true;
        }
        if self.nodes % CHECK_INTERVAL == 0 {
            if let Some(deadline) = self.shared.deadline {
                if Instant::now() >= deadline {
                    self.shared.abort.store(true, Ordering::Relaxed);
                    return true;
                }
            }
        }
        false
    }

    fn dfs(&mut self, node: &Node<W>) {
        if self.should_stop() {
            return;
        }
        match self.expand(node) {
            Expansion::Solution => {
                if node.count < self.shared.best.load(Ordering::Acquire) {
                    self.shared.offer(node.count, ones(&node.chosen).collect());
                }
            }
            Expansion::Pruned => {}
            Expansion::Children(children) => {
                for child in &children {
                    self.dfs(child);
                    if self.shared.abort.load(Ordering::Relaxed) {
                        return;
                    }
                }
            }
        }
    }

    fn root_bound(&mut self, node: &Node<W>) -> usize {
        let undominated = andnot(&self.all, &node.dominated);
        let allowed = andnot(&self.all, &node.forbidden);
        match self.bound(&undominated, &allowed) {
            Some((lb, _)) => node.count + lb,
            None => usize::MAX,
        }
    }
}

fn solve<const W: usize>(g: &Graph, opts: &SolveOptions) -> Result<DominationResult> {
    let m = g.order();
    let nbr: Vec<Bits<W>> = (0..m)
        .map(|v| {
            let mut b = [0u64; W];
            for u in g.neighbors(v) {
                set_bit(&mut b, u);
            }
            b
        })
        .collect();
    let mut all = [0u64; W];
    for v in 0..m {
        set_bit(&mut all, v);
    }

    let incumbent = prune_redundant(g, &greedy_upper_bound(g)?);
    let trivial = trivial_lower_bound(g)?;
    let shared = Shared {
        best: AtomicUsize::new(incumbent.len()),
        best_set: Mutex::new(incumbent.as_slice().to_vec()),
        abort: AtomicBool::new(false),
        deadline: opts.time_limit.map(|d| Instant::now() + d),
        nodes: AtomicUsize::new(0),
    };

    let mut root = Node { chosen: [0; W], count: 0, dominated: [0; W], forbidden: [0; W] };
    if opts.symmetry && g.is_vertex_transitive() {
        // Some automorphism moves any optimal set onto one containing vertex 0.
        set_bit(&mut root.chosen, 0);
        set_bit(&mut root.forbidden, 0);
        root.dominated = nbr[0];
        root.count = 1;
    }

    let mut searcher = Searcher::new(&nbr, all, &shared);
    let lower = trivial.max(searcher.root_bound(&root)).min(incumbent.len());

    if lower < incumbent.len() {
        if opts.threads <= 1 {
            searcher.dfs(&root);
            shared.nodes.fetch_add(searcher.nodes as usize, Ordering::Relaxed);
        } else {
            let frontier = split_frontier(&mut searcher, root, opts.threads * 16);
            shared.nodes.fetch_add(searcher.nodes as usize, Ordering::Relaxed);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
            pool.install(|| {
                frontier.par_iter().for_each(|node| {
                    let mut s = Searcher::new(&nbr, all, &shared);
                    s.dfs(node);
                    shared.nodes.fetch_add(s.nodes as usize, Ordering::Relaxed);
                });
            });
        }
    }

    let timed_out = shared.abort.load(Ordering::Relaxed);
    let upper = shared.best.load(Ordering::Acquire);
    let witness = VertexSet::new(shared.best_set.into_inner().expect("incumbent lock"));
    debug_assert_eq!(witness.len(), upper);
    debug_assert!(is_total_dominating(g, &witness).unwrap());
    let nodes = shared.nodes.load(Ordering::Relaxed) as u64;
    Ok(if timed_out {
        DominationResult {
            lower,
            upper,
            exact: None,
            witness,
            status: SolverStatus::BoundsOnly { time_limit_hit: true },
            nodes,
        }
    } else {
        DominationResult { lower: upper, upper, exact: Some(upper), witness, status: SolverStatus::Exact, nodes }
    })
}

/// Expands the tree breadth-first until at least `target` open nodes exist.
/// Solutions met on the way are offered to the incumbent.
fn split_frontier<const W: usize>(s: &mut Searcher<'_, W>, root: Node<W>, target: usize) -> Vec<Node<W>> {
    let mut frontier = vec![root];
    for _ in 0..8 {
        if frontier.len() >= target {
            break;
        }
        let mut next = Vec::new();
        for node in &frontier {
            match s.expand(node) {
                Expansion::Solution => s.shared.offer(node.count, ones(&node.chosen).collect()),
                Expansion::Pruned => {}
                Expansion::Children(children) => next.extend(children),
            }
        }
        if next.is_empty() {
            return next;
        }
        frontier = next;
    }
    frontier
}
