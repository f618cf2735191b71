//! Clique, Vietoris-Rips and independence complexes, truncated at a
//! requested dimension, plus the cross-polytope witness checker.
//!
//! Simplices are strictly increasing vertex lists. Each dimension is stored
//! as one flat buffer in lexicographic order, which fixes the row and column
//! order of every boundary matrix built from the complex.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{build_hamming_graph, hamming_distance, Graph, HammingGraphSpec, VertexLabel};

/// Default cap on the number of simplices a construction may produce.
pub const DEFAULT_MAX_SIMPLICES: u64 = 100_000_000;

/// Largest dimension for which the witness checker enumerates `Q_n` to
/// decide domination in `G^c_{n,r}`.
pub const WITNESS_DOMINATION_MAX_N: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    max_dim: usize,
    by_dim: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    fn with_capacity(n_vertices: usize, max_dim: usize) -> Self {
        Self { n_vertices, max_dim, by_dim: vec![Vec::new(); max_dim + 1] }
    }

    /// Downward closure of `facets`, truncated at `max_dim`.
    pub fn from_facets<F, I>(n_vertices: usize, max_dim: usize, facets: F) -> Result<Self>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = u32>,
    {
        let mut sets: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); max_dim + 1];
        for facet in facets {
            let mut f: Vec<u32> = facet.into_iter().collect();
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v as usize >= n_vertices) {
                return Err(Error::VertexOutOfRange { vertex: v.into(), bound: n_vertices as u64 });
            }
            if f.len() > 24 {
                return Err(Error::TooLarge { what: "facet size for closure", size: f.len() as u64, cap: 24 });
            }
            for mask in 1u32..(1 << f.len()) {
                let k = mask.count_ones() as usize;
                if k > max_dim + 1 {
                    continue;
                }
                let face: Vec<u32> =
                    f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
                sets[k - 1].insert(face);
            }
        }
        let mut k = Self::with_capacity(n_vertices, max_dim);
        for (d, set) in sets.into_iter().enumerate() {
            for s in set {
                k.by_dim[d].extend(s);
            }
        }
        Ok(k)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Highest dimension that was built (simplices above it were not enumerated).
    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn count(&self, d: usize) -> usize {
        self.by_dim.get(d).map_or(0, |v| v.len() / (d + 1))
    }

    pub fn simplices(&self, d: usize) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        let flat: &[u32] = self.by_dim.get(d).map_or(&[], |v| v.as_slice());
        flat.chunks_exact(d + 1)
    }

    pub fn simplex(&self, d: usize, i: usize) -> &[u32] {
        &self.by_dim[d][i * (d + 1)..(i + 1) * (d + 1)]
    }

    /// Position of `s` within its dimension, by binary search.
    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        let d = s.len() - 1;
        let flat = self.by_dim.get(d)?;
        let len = flat.len() / (d + 1);
        let (mut lo, mut hi) = (0usize, len);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match flat[mid * (d + 1)..(mid + 1) * (d + 1)].cmp(s) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn total(&self) -> usize {
        (0..=self.max_dim).map(|d| self.count(d)).sum()
    }

    /// Every listed simplex has all of its facets listed.
    pub fn is_closed(&self) -> bool {
        (1..=self.max_dim).all(|d| {
            self.simplices(d).all(|s| {
                (0..s.len()).all(|skip| {
                    let facet: Vec<u32> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    self.index_of(&facet).is_some()
                })
            })
        })
    }
}

pub fn f_vector(k: &SimplicialComplex) -> Vec<usize> {
    (0..=k.max_dim).map(|d| k.count(d)).collect()
}

pub fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    f_vector(k).iter().enumerate().map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) }).sum()
}

/// Clique complex of `g` up to dimension `max_dim`, built by ordered clique
/// extension: a simplex grows only by a larger vertex adjacent to all members.
pub fn clique_complex(g: &Graph, max_dim: usize, max_simplices: u64) -> Result<SimplicialComplex> {
    let mut k = SimplicialComplex::with_capacity(g.order(), max_dim);
    let mut produced = 0u64;
    let mut clique: Vec<u32> = Vec::with_capacity(max_dim + 1);
    for v in 0..g.order() {
        let mut cands: Vec<u32> = g.neighbors(v).filter(|&u| u > v).map(|u| u as u32).collect();
        cands.sort_unstable();
        clique.push(v as u32);
        extend(g, &mut k, &mut clique, &cands, &mut produced, max_simplices)?;
        clique.pop();
    }
    Ok(k)
}

fn extend(
    g: &Graph,
    k: &mut SimplicialComplex,
    clique: &mut Vec<u32>,
    cands: &[u32],
    produced: &mut u64,
    cap: u64,
) -> Result<()> {
    *produced += 1;
    if *produced > cap {
        return Err(Error::TooLarge { what: "simplex count", size: *produced, cap });
    }
    let d = clique.len() - 1;
    k.by_dim[d].extend_from_slice(clique);
    if d == k.max_dim {
        return Ok(());
    }
    for (i, &w) in cands.iter().enumerate() {
        let next: Vec<u32> =
            cands[i + 1..].iter().copied().filter(|&x| g.is_adjacent(w as usize, x as usize)).collect();
        clique.push(w);
        extend(g, k, clique, &next, produced, cap)?;
        clique.pop();
    }
    Ok(())
}

/// `VR(Q_n; r)` truncated at `max_dim`: the clique complex of `G_{n,r}`.
pub fn vietoris_rips(n: u32, r: u32, max_dim: usize) -> Result<SimplicialComplex> {
    vietoris_rips_capped(n, r, max_dim, DEFAULT_MAX_SIMPLICES)
}

pub fn vietoris_rips_capped(n: u32, r: u32, max_dim: usize, max_simplices: u64) -> Result<SimplicialComplex> {
    let g = build_hamming_graph(HammingGraphSpec::new(n, r, false))?;
    clique_complex(&g, max_dim, max_simplices)
}

/// Independence complex of `g`: the clique complex of its complement.
pub fn independence_complex(g: &Graph, max_dim: usize) -> Result<SimplicialComplex> {
    independence_complex_capped(g, max_dim, DEFAULT_MAX_SIMPLICES)
}

pub fn independence_complex_capped(g: &Graph, max_dim: usize, max_simplices: u64) -> Result<SimplicialComplex> {
    clique_complex(&g.complement(), max_dim, max_simplices)
}

/// Writes the complex file format: a `dim <max_dim> vertices <n>` header,
/// then one simplex per line grouped by ascending dimension.
pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dim {} vertices {}", k.max_dim, k.n_vertices);
    for d in 0..=k.max_dim {
        for s in k.simplices(d) {
            let mut first = true;
            for v in s {
                if !first {
                    out.push(' ');
                }
                first = false;
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
    }
    out
}

pub fn read_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "empty complex file"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (max_dim, n_vertices) = match toks.as_slice() {
        ["dim", d, "vertices", n] => (
            d.parse::<usize>().map_err(|_| Error::parse(hl + 1, format!("invalid dimension `{d}`")))?,
            n.parse::<usize>().map_err(|_| Error::parse(hl + 1, format!("invalid vertex count `{n}`")))?,
        ),
        _ => return Err(Error::parse(hl + 1, "expected `dim <max_dim> vertices <n_vertices>`")),
    };
    if max_dim > 64 {
        return Err(Error::TooLarge { what: "complex dimension", size: max_dim as u64, cap: 64 });
    }
    let mut k = SimplicialComplex::with_capacity(n_vertices, max_dim);
    let mut last_dim = 0usize;
    for (idx, line) in lines {
        let line_no = idx + 1;
        let s: Vec<u32> = line
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|_| Error::parse(line_no, format!("invalid vertex `{t}`"))))
            .collect::<Result<_>>()?;
        let d = s.len() - 1;
        if d > max_dim {
            return Err(Error::parse(line_no, format!("simplex of dimension {d} above declared {max_dim}")));
        }
        if d < last_dim {
            return Err(Error::parse(line_no, "simplices not grouped by ascending dimension"));
        }
        last_dim = d;
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::parse(line_no, "vertices must be strictly increasing"));
        }
        if let Some(&v) = s.last().filter(|&&v| v as usize >= n_vertices) {
            return Err(Error::parse(line_no, format!("vertex {v} outside 0..{n_vertices}")));
        }
        let flat = &mut k.by_dim[d];
        if let Some(prev) = flat.len().checked_sub(d + 1).map(|at| &flat[at..]) {
            if prev >= s.as_slice() {
                return Err(Error::parse(line_no, "simplices must be listed in increasing lexicographic order"));
            }
        }
        flat.extend_from_slice(&s);
    }
    if !k.is_closed() {
        return Err(Error::parse(0, "complex is not closed under taking faces"));
    }
    Ok(k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairViolation {
    /// The vertex has no partner at distance above `r`; the pair names its farthest vertex.
    NoFarPartner,
    /// The vertex has several partners at distance above `r`.
    ExtraFarPartner,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MissingPair {
    pub a: VertexLabel,
    pub b: VertexLabel,
    pub distance: u32,
    pub kind: PairViolation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub is_matching_complement: bool,
    pub is_cross_polytope_boundary: bool,
    /// `None` when `n` is above the enumeration limit.
    pub is_total_dominating_in_complement: Option<bool>,
    /// Recovered antipodal-style pairs, when every vertex has a unique far partner.
    pub pairs: Vec<(VertexLabel, VertexLabel)>,
    pub missing_pairs: Vec<MissingPair>,
}

/// Checks whether `vertices` span the boundary of a cross-polytope in
/// `VR(Q_n; r)` (pairs at distance above `r`, all other distances at most
/// `r`) and, separately, whether they totally dominate `G^c_{n,r}`.
pub fn cross_polytope_witness_check(n: u32, r: u32, vertices: &[VertexLabel]) -> Result<WitnessReport> {
    if n == 0 || n > 64 {
        return Err(Error::InvalidArgument(format!("dimension {n} outside 1..=64")));
    }
    if vertices.len() % 2 == 1 {
        return Err(Error::OddCount(vertices.len()));
    }
    if vertices.is_empty() {
        return Err(Error::InvalidArgument("witness has no vertices".into()));
    }
    let mut seen = BTreeSet::new();
    for &v in vertices {
        if !v.fits(n) {
            return Err(Error::VertexOutOfRange { vertex: v.0, bound: if n >= 64 { u64::MAX } else { 1 << n } });
        }
        if !seen.insert(v) {
            return Err(Error::DuplicateVertex(v.0));
        }
    }

    let far: Vec<Vec<usize>> = vertices
        .iter()
        .map(|&a| (0..vertices.len()).filter(|&j| hamming_distance(a, vertices[j]) > r).collect())
        .collect();
    let mut missing = Vec::new();
    let mut partner = vec![usize::MAX; vertices.len()];
    for (i, &a) in vertices.iter().enumerate() {
        match far[i].as_slice() {
            [j] => partner[i] = *j,
            [] => {
                let (j, d) = (0..vertices.len())
                    .map(|j| (j, hamming_distance(a, vertices[j])))
                    .max_by_key(|&(j, d)| (d, std::cmp::Reverse(j)))
                    .expect("nonempty");
                missing.push(MissingPair { a, b: vertices[j], distance: d, kind: PairViolation::NoFarPartner });
            }
            many => {
                // Each offending pair once: from the lower index, unless that end has a unique partner.
                for &j in many {
                    if i < j || far[j].len() == 1 {
                        missing.push(MissingPair {
                            a,
                            b: vertices[j],
                            distance: hamming_distance(a, vertices[j]),
                            kind: PairViolation::ExtraFarPartner,
                        });
                    }
                }
            }
        }
    }
    // Far-ness is symmetric, so unique partners pair up into a perfect matching.
    let is_matching = missing.is_empty();
    let pairs = if is_matching {
        (0..vertices.len()).filter(|&i| i < partner[i]).map(|i| (vertices[i], vertices[partner[i]])).collect()
    } else {
        Vec::new()
    };

    let dominating = (n <= WITNESS_DOMINATION_MAX_N)
        .then(|| (0..1u64 << n).all(|u| vertices.iter().any(|&c| hamming_distance(VertexLabel(u), c) > r)));

    Ok(WitnessReport {
        is_matching_complement: is_matching,
        is_cross_polytope_boundary: is_matching,
        is_total_dominating_in_complement: dominating,
        pairs,
        missing_pairs: missing,
    })
}

/// The `(m-1)`-simplices of the cross-polytope on `pairs`: one vertex from
/// each pair, sorted. Their sum is the fundamental cycle mod 2.
pub fn cross_polytope_top_simplices(pairs: &[(VertexLabel, VertexLabel)]) -> Vec<Vec<u32>> {
    let m = pairs.len();
    (0u64..1 << m)
        .map(|pick| {
            let mut s: Vec<u32> = pairs
                .iter()
                .enumerate()
                .map(|(i, &(v, w))| if pick >> i & 1 == 0 { v.0 as u32 } else { w.0 as u32 })
                .collect();
            s.sort_unstable();
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;
    use crate::graph::antipode;
    use num_traits::ToPrimitive;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn lbl(s: &str) -> VertexLabel {
        VertexLabel(u64::from_str_radix(s, 2).unwrap())
    }

    /// Subsets of `Q_n` with diameter at most `r`, counted by size.
    fn brute_force_f_vector(n: u32, r: u32, max_dim: usize) -> Vec<usize> {
        let mut f = vec![0usize; max_dim + 1];
        for set in 1u64..1 << (1 << n) {
            let k = set.count_ones() as usize;
            if k > max_dim + 1 {
                continue;
            }
            let members: Vec<u64> = (0..1u64 << n).filter(|&v| set >> v & 1 == 1).collect();
            let ok = members.iter().all(|&a| members.iter().all(|&b| (a ^ b).count_ones() <= r));
            if ok {
                f[k - 1] += 1;
            }
        }
        f
    }

    #[test]
    fn vr_examples() {
        let c4 = vietoris_rips(2, 1, 2).unwrap();
        assert_eq!(f_vector(&c4), vec![4, 4, 0]);
        assert_eq!(euler_characteristic(&vietoris_rips(2, 1, 1).unwrap()), 0);

        let full = vietoris_rips(3, 3, 7).unwrap();
        let expected: Vec<usize> = (0..8).map(|i| binomial(8, i + 1).to_usize().unwrap()).collect();
        assert_eq!(f_vector(&full), expected);
        assert_eq!(euler_characteristic(&full), 1);

        let s3 = vietoris_rips(3, 2, 3).unwrap();
        assert_eq!(f_vector(&s3), vec![8, 24, 32, 16]);
        assert_eq!(f_vector(&s3), brute_force_f_vector(3, 2, 3));
        assert_eq!(euler_characteristic(&s3), 0);
    }

    #[test]
    fn vr_matches_brute_force_subsets() {
        for n in 1..=3u32 {
            for r in 0..=n {
                let max_dim = (1usize << n) - 1;
                let k = vietoris_rips(n, r, max_dim).unwrap();
                assert_eq!(f_vector(&k), brute_force_f_vector(n, r, max_dim), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn independence_examples() {
        let matching = build_hamming_graph(HammingGraphSpec::new(3, 2, true)).unwrap();
        assert_eq!(independence_complex(&matching, 3).unwrap(), vietoris_rips(3, 2, 3).unwrap());
        let k = independence_complex(&Graph::complete(5), 3).unwrap();
        assert_eq!(f_vector(&k), vec![5, 0, 0, 0]);
        let k = independence_complex(&Graph::empty(5), 4).unwrap();
        assert_eq!(f_vector(&k), vec![5, 10, 10, 5, 1]);
    }

    #[test]
    fn clique_identity_and_closure_small_n() {
        for n in 1..=4u32 {
            for r in 0..n {
                for d in 0..=4usize {
                    let vr = vietoris_rips(n, r, d).unwrap();
                    let gc = build_hamming_graph(HammingGraphSpec::new(n, r, true)).unwrap();
                    assert_eq!(independence_complex(&gc, d).unwrap(), vr, "n={n} r={r} d={d}");
                    assert!(vr.is_closed());
                }
            }
        }
    }

    #[test]
    fn sampled_simplices_have_small_diameter() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let cases = [(4u32, 2u32, 4usize), (5, 2, 4), (6, 3, 3), (5, 3, 5)];
        let complexes: Vec<_> = cases.iter().map(|&(n, r, d)| (r, vietoris_rips(n, r, d).unwrap())).collect();
        for _ in 0..10_000 {
            let (r, k) = &complexes[rng.gen_range(0..complexes.len())];
            let d = rng.gen_range(0..=k.max_dim());
            if k.count(d) == 0 {
                continue;
            }
            let s = k.simplex(d, rng.gen_range(0..k.count(d)));
            for &a in s {
                for &b in s {
                    assert!((a ^ b).count_ones() <= *r);
                }
            }
        }
    }

    #[test]
    fn simplex_cap_enforced() {
        let err = vietoris_rips_capped(4, 3, 8, 100).unwrap_err();
        assert!(matches!(err, Error::TooLarge { what: "simplex count", .. }));
    }

    #[test]
    fn complex_file_round_trip() {
        let k = vietoris_rips(3, 2, 3).unwrap();
        let text = write_complex(&k);
        assert!(text.starts_with("dim 3 vertices 8\n0\n1\n"));
        assert_eq!(read_complex(&text).unwrap(), k);
    }

    #[test]
    fn complex_file_errors() {
        assert!(matches!(read_complex(""), Err(Error::Parse { .. })));
        assert!(matches!(read_complex("dim 1 vertices 2\n0\n1\n0 1 1\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(read_complex("dim 1 vertices 2\n0\n1\n1 0\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(read_complex("dim 1 vertices 2\n0 1\n0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(read_complex("dim 1 vertices 2\n0\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_complex("dim 1 vertices 2\n0\n1\n0 2\n"), Err(Error::Parse { line: 4, .. })));
    }

    #[test]
    fn from_facets_closes() {
        let k = SimplicialComplex::from_facets(4, 2, [vec![0, 1, 2], vec![2, 3]]).unwrap();
        assert_eq!(f_vector(&k), vec![4, 4, 1]);
        assert!(k.is_closed());
        assert_eq!(k.index_of(&[1, 2]), Some(2));
        assert_eq!(k.index_of(&[1, 3]), None);
    }

    #[test]
    fn witness_examples() {
        let q2: Vec<_> = (0..4).map(VertexLabel).collect();
        let rep = cross_polytope_witness_check(2, 1, &q2).unwrap();
        assert!(rep.is_cross_polytope_boundary && rep.is_matching_complement);
        assert_eq!(rep.is_total_dominating_in_complement, Some(true));
        assert_eq!(rep.pairs, vec![(VertexLabel(0), VertexLabel(3)), (VertexLabel(1), VertexLabel(2))]);

        let q3: Vec<_> = (0..8).map(VertexLabel).collect();
        let rep = cross_polytope_witness_check(3, 2, &q3).unwrap();
        assert!(rep.is_cross_polytope_boundary);
        assert_eq!(rep.is_total_dominating_in_complement, Some(true));
        assert!(rep.pairs.iter().all(|&(a, b)| b == antipode(a, 3)));

        let even = [lbl("000"), lbl("011"), lbl("101"), lbl("110")];
        let rep = cross_polytope_witness_check(3, 2, &even).unwrap();
        assert!(!rep.is_cross_polytope_boundary);
        assert_eq!(rep.missing_pairs.len(), 4);
        assert!(rep.missing_pairs.iter().all(|p| p.kind == PairViolation::NoFarPartner && p.distance == 2));
    }

    #[test]
    fn witness_errors_and_ambiguity() {
        assert_eq!(cross_polytope_witness_check(3, 1, &[VertexLabel(0)]).unwrap_err(), Error::OddCount(1));
        assert_eq!(
            cross_polytope_witness_check(3, 1, &[VertexLabel(1), VertexLabel(1)]).unwrap_err(),
            Error::DuplicateVertex(1)
        );
        assert!(cross_polytope_witness_check(3, 1, &[VertexLabel(0), VertexLabel(8)]).is_err());
        // 000 is far (> 1) from both 011 and 101 at r = 1.
        let rep = cross_polytope_witness_check(3, 1, &[lbl("000"), lbl("011"), lbl("101"), lbl("001")]).unwrap();
        assert!(!rep.is_cross_polytope_boundary);
        assert!(rep.missing_pairs.iter().any(|p| p.kind == PairViolation::ExtraFarPartner));
        // Large n: pattern only.
        let big = [VertexLabel(0), VertexLabel(u64::MAX)];
        let rep = cross_polytope_witness_check(64, 10, &big).unwrap();
        assert!(rep.is_cross_polytope_boundary);
        assert_eq!(rep.is_total_dominating_in_complement, None);
    }

    #[test]
    fn pattern_matches_unique_far_partner_rule() {
        for (n, r) in [(2u32, 0u32), (2, 1), (3, 0), (3, 1), (3, 2), (4, 1), (4, 2)] {
            let size = 1u64 << n;
            for set in 1u64..1 << size {
                if set.count_ones() % 2 == 1 {
                    continue;
                }
                let vs: Vec<VertexLabel> = (0..size).filter(|&v| set >> v & 1 == 1).map(VertexLabel).collect();
                let expected = vs.iter().all(|&a| vs.iter().filter(|&&b| hamming_distance(a, b) > r).count() == 1);
                let rep = cross_polytope_witness_check(n, r, &vs).unwrap();
                assert_eq!(rep.is_cross_polytope_boundary, expected, "n={n} r={r} {vs:?}");
                assert_eq!(rep.pairs.len(), if expected { vs.len() / 2 } else { 0 });
                assert_eq!(rep.missing_pairs.is_empty(), expected);
            }
        }
    }

    #[test]
    fn top_simplices_of_cross_polytope() {
        let pairs = [(VertexLabel(0), VertexLabel(7)), (VertexLabel(1), VertexLabel(6))];
        let tops = cross_polytope_top_simplices(&pairs);
        assert_eq!(tops, vec![vec![0, 1], vec![1, 7], vec![0, 6], vec![6, 7]]);
    }
}
