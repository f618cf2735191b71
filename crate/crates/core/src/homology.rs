//! Reduced simplicial homology of truncated complexes.
//!
//! GF(2) ranks come from column reduction on bit-packed columns. Integer
//! homology uses a Smith normal form that first strips unit pivots sparsely
//! and finishes the remainder densely, in `i64` with a `BigInt` restart on
//! overflow. Reduced homology uses the augmentation map as `∂_0`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::bitset::BitSet;
use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};

/// Default cap on either dimension of a matrix fed to Smith normal form.
pub const DEFAULT_SNF_CAP: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficients {
    Gf2,
    #[serde(rename = "z")]
    Integers,
}

/// Matrix of `∂_p`: rows are `(p-1)`-simplices, columns `p`-simplices, both
/// in the complex's canonical order. Entries are `±1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub p: usize,
    pub rows: usize,
    pub cols: usize,
    /// Sparse columns as `(row, sign)`, rows increasing.
    pub columns: Vec<Vec<(u32, i8)>>,
}

impl BoundaryMatrix {
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, s) in col {
                m[i as usize][j] = s.into();
            }
        }
        m
    }

    fn gf2_columns(&self) -> impl Iterator<Item = BitSet> + '_ {
        self.columns.iter().map(|c| BitSet::from_indices(self.rows, c.iter().map(|&(i, _)| i as usize)))
    }
}

/// `∂_p` for `1 <= p <= max_dim`. Removing vertex `i` of a simplex gives
/// the facet with sign `(-1)^i`.
pub fn boundary_matrix(k: &SimplicialComplex, p: usize) -> Result<BoundaryMatrix> {
    if p == 0 || p > k.max_dim() {
        return Err(Error::DimensionOutOfRange { p, max: k.max_dim() });
    }
    let mut facet = Vec::with_capacity(p);
    let columns = k
        .simplices(p)
        .map(|s| {
            let mut col: Vec<(u32, i8)> = (0..s.len())
                .map(|skip| {
                    facet.clear();
                    facet.extend(s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                    let row = k.index_of(&facet).expect("complex is closed under faces");
                    (row as u32, if skip % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect();
    Ok(BoundaryMatrix { p, rows: k.count(p - 1), cols: k.count(p), columns })
}

/// The augmentation `C_0 -> Z`, a single row of ones.
pub fn augmentation(k: &SimplicialComplex) -> BoundaryMatrix {
    BoundaryMatrix { p: 0, rows: 1, cols: k.count(0), columns: vec![vec![(0, 1)]; k.count(0)] }
}

/// Column-echelon basis of a GF(2) column space, keyed by lowest pivot row.
#[derive(Debug, Clone, Default)]
pub struct Gf2Reducer {
    pivots: BTreeMap<usize, BitSet>,
}

impl Gf2Reducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_matrix(m: &BoundaryMatrix) -> Self {
        let mut r = Self::new();
        for col in m.gf2_columns() {
            r.insert(col);
        }
        r
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `col` against the basis; the result is zero iff `col` lies in the span.
    pub fn reduce(&self, mut col: BitSet) -> BitSet {
        while let Some(low) = col.last() {
            match self.pivots.get(&low) {
                Some(p) => col.xor_with(p),
                None => break,
            }
        }
        col
    }

    /// Adds `col` to the span; returns whether the rank grew.
    pub fn insert(&mut self, col: BitSet) -> bool {
        let col = self.reduce(col);
        match col.last() {
            Some(low) => {
                self.pivots.insert(low, col);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, col: BitSet) -> bool {
        self.reduce(col).is_empty()
    }
}

pub fn gf2_rank(m: &BoundaryMatrix) -> usize {
    Gf2Reducer::from_matrix(m).rank()
}

/// True when the mod-2 chain made of the listed `p`-simplices is a boundary.
pub fn is_boundary_gf2(k: &SimplicialComplex, p: usize, chain: &[Vec<u32>]) -> Result<bool> {
    let space = BoundarySpace::new(k, p)?;
    space.contains(k, chain)
}

/// Image of `∂_{p+1}` over GF(2), reusable across many membership queries.
#[derive(Debug, Clone)]
pub struct BoundarySpace {
    p: usize,
    rows: usize,
    reducer: Gf2Reducer,
}

impl BoundarySpace {
    pub fn new(k: &SimplicialComplex, p: usize) -> Result<Self> {
        if p + 1 > k.max_dim() {
            return Err(Error::TruncationTooShallow { up_to: p, needed: p + 1, max_dim: k.max_dim() });
        }
        let m = boundary_matrix(k, p + 1)?;
        Ok(Self { p, rows: m.rows, reducer: Gf2Reducer::from_matrix(&m) })
    }

    pub fn contains(&self, k: &SimplicialComplex, chain: &[Vec<u32>]) -> Result<bool> {
        let mut col = BitSet::new(self.rows);
        for s in chain {
            if s.len() != self.p + 1 {
                return Err(Error::InvalidArgument(format!("chain simplex {s:?} is not {}-dimensional", self.p)));
            }
            let idx =
                k.index_of(s).ok_or_else(|| Error::InvalidArgument(format!("simplex {s:?} is not in the complex")))?;
            col.toggle(idx);
        }
        Ok(self.reducer.contains(col))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiProfile {
    pub dims: Vec<usize>,
    pub reduced_betti: Vec<usize>,
    #[serde(serialize_with = "ser_torsion")]
    pub torsion: Option<Vec<Vec<BigInt>>>,
    pub coefficients: Coefficients,
    pub truncation_dim: usize,
}

fn ser_torsion<S: Serializer>(t: &Option<Vec<Vec<BigInt>>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    #[serde(untagged)]
    enum Num {
        Small(i64),
        Big(String),
    }
    let conv = t.as_ref().map(|dims| {
        dims.iter()
            .map(|fs| {
                fs.iter().map(|f| f.to_i64().map_or_else(|| Num::Big(f.to_string()), Num::Small)).collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    });
    conv.serialize(s)
}

impl BettiProfile {
    pub fn all_zero(&self) -> bool {
        self.reduced_betti.iter().all(|&b| b == 0)
            && self.torsion.as_ref().map_or(true, |t| t.iter().all(Vec::is_empty))
    }

    /// Zero free rank and torsion in every dimension `0..=upto`.
    pub fn vanishes_through(&self, upto: usize) -> bool {
        (0..=upto.min(self.truncation_dim))
            .all(|i| self.reduced_betti[i] == 0 && self.torsion.as_ref().map_or(true, |t| t[i].is_empty()))
    }
}

fn check_truncation(k: &SimplicialComplex, up_to: usize) -> Result<()> {
    if k.max_dim() < up_to + 1 {
        return Err(Error::TruncationTooShallow { up_to, needed: up_to + 1, max_dim: k.max_dim() });
    }
    Ok(())
}

fn boundary_or_augmentation(k: &SimplicialComplex, p: usize) -> Result<BoundaryMatrix> {
    if p == 0 {
        Ok(augmentation(k))
    } else {
        boundary_matrix(k, p)
    }
}

/// Reduced Betti numbers over GF(2) for dimensions `0..=up_to`.
pub fn betti_gf2(k: &SimplicialComplex, up_to: usize) -> Result<BettiProfile> {
    check_truncation(k, up_to)?;
    let ranks: Vec<usize> =
        (0..=up_to + 1).map(|p| boundary_or_augmentation(k, p).map(|m| gf2_rank(&m))).collect::<Result<_>>()?;
    let reduced_betti = (0..=up_to).map(|i| k.count(i) - ranks[i] - ranks[i + 1]).collect();
    Ok(BettiProfile {
        dims: (0..=up_to).collect(),
        reduced_betti,
        torsion: None,
        coefficients: Coefficients::Gf2,
        truncation_dim: up_to,
    })
}

/// Free ranks and torsion of reduced integral homology in `0..=up_to`.
pub fn betti_integer(k: &SimplicialComplex, up_to: usize, snf_cap: usize) -> Result<BettiProfile> {
    check_truncation(k, up_to)?;
    let factors: Vec<Vec<BigInt>> = (0..=up_to + 1)
        .map(|p| boundary_or_augmentation(k, p).and_then(|m| smith_normal_form(&m, snf_cap)))
        .collect::<Result<_>>()?;
    let mut reduced_betti = Vec::new();
    let mut torsion = Vec::new();
    for i in 0..=up_to {
        reduced_betti.push(k.count(i) - factors[i].len() - factors[i + 1].len());
        torsion.push(factors[i + 1].iter().filter(|f| !f.is_one()).cloned().collect());
    }
    Ok(BettiProfile {
        dims: (0..=up_to).collect(),
        reduced_betti,
        torsion: Some(torsion),
        coefficients: Coefficients::Integers,
        truncation_dim: up_to,
    })
}

pub fn reduced_homology(k: &SimplicialComplex, up_to: usize, coefficients: Coefficients) -> Result<BettiProfile> {
    match coefficients {
        Coefficients::Gf2 => betti_gf2(k, up_to),
        Coefficients::Integers => betti_integer(k, up_to, DEFAULT_SNF_CAP),
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix.
pub fn smith_normal_form(m: &BoundaryMatrix, cap: usize) -> Result<Vec<BigInt>> {
    let columns: Vec<Vec<(usize, i64)>> =
        m.columns.iter().map(|c| c.iter().map(|&(r, s)| (r as usize, i64::from(s))).collect()).collect();
    invariant_factors(m.rows, columns, cap)
}

/// Invariant factors of a dense integer matrix.
pub fn smith_normal_form_dense(rows: &[Vec<i64>], cap: usize) -> Result<Vec<BigInt>> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let columns =
        (0..ncols).map(|j| (0..nrows).filter(|&i| rows[i][j] != 0).map(|i| (i, rows[i][j])).collect()).collect();
    invariant_factors(nrows, columns, cap)
}

fn invariant_factors(nrows: usize, columns: Vec<Vec<(usize, i64)>>, cap: usize) -> Result<Vec<BigInt>> {
    let ncols = columns.len();
    if nrows > cap || ncols > cap {
        return Err(Error::TooLarge {
            what: "Smith normal form dimension",
            size: nrows.max(ncols) as u64,
            cap: cap as u64,
        });
    }
    match snf::<i64>(nrows, &columns) {
        Some(f) => Ok(f.into_iter().map(BigInt::from).collect()),
        None => {
            let wide: Vec<Vec<(usize, BigInt)>> =
                columns.iter().map(|c| c.iter().map(|(r, v)| (*r, BigInt::from(*v))).collect()).collect();
            Ok(snf::<BigInt>(nrows, &wide).expect("unbounded integers cannot overflow"))
        }
    }
}

/// Integer ring operations with overflow reporting.
trait Entry: Clone + PartialEq + std::fmt::Debug {
    fn zero_entry() -> Self;
    fn one_entry() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_cmp_key(&self) -> BigInt;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    /// Truncating quotient; `self - q * d` is smaller in magnitude than `d`.
    fn quot(&self, d: &Self) -> Self;
    fn rem_is_zero(&self, d: &Self) -> bool;
    fn abs(&self) -> Self;
}

impl Entry for i64 {
    fn zero_entry() -> Self {
        0
    }
    fn one_entry() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_cmp_key(&self) -> BigInt {
        Signed::abs(&BigInt::from(*self))
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn rem_is_zero(&self, d: &Self) -> bool {
        self % d == 0
    }
    fn abs(&self) -> Self {
        i64::abs(*self)
    }
}

impl Entry for BigInt {
    fn zero_entry() -> Self {
        Zero::zero()
    }
    fn one_entry() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn abs_cmp_key(&self) -> BigInt {
        Signed::abs(self)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn rem_is_zero(&self, d: &Self) -> bool {
        Zero::is_zero(&(self % d))
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

/// `None` on `i64` overflow.
fn snf<T: Entry>(nrows: usize, columns: &[Vec<(usize, T)>]) -> Option<Vec<T>> {
    // Sparse phase: eliminate unit pivots. A unit at (i, j) lets column
    // operations clear row i; column j is then zero off row i, so both can be
    // dropped while contributing an invariant factor of 1.
    let mut cols: Vec<BTreeMap<usize, T>> = columns.iter().map(|c| c.iter().cloned().collect()).collect();
    let mut row_cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nrows];
    for (j, c) in cols.iter().enumerate() {
        for &i in c.keys() {
            row_cols[i].insert(j);
        }
    }
    let mut alive = vec![true; cols.len()];
    let mut units = 0usize;
    let mut progress = true;
    while progress {
        progress = false;
        for j in 0..cols.len() {
            if !alive[j] {
                continue;
            }
            let Some((pi, pv)) = cols[j].iter().find(|(_, v)| v.is_unit()).map(|(i, v)| (*i, v.clone())) else {
                continue;
            };
            let others: Vec<usize> = row_cols[pi].iter().copied().filter(|&k| k != j).collect();
            for k in others {
                // col_k -= (a_ik * a_ij) * col_j, using a_ij^{-1} = a_ij for units.
                let factor = cols[k][&pi].mul(&pv)?;
                let pivot_col: Vec<(usize, T)> = cols[j].iter().map(|(r, v)| (*r, v.clone())).collect();
                for (r, v) in pivot_col {
                    let delta = factor.mul(&v)?;
                    let entry = cols[k].remove(&r).unwrap_or_else(T::zero_entry);
                    let new = entry.sub(&delta)?;
                    if new.is_zero() {
                        row_cols[r].remove(&k);
                    } else {
                        cols[k].insert(r, new);
                        row_cols[r].insert(k);
                    }
                }
            }
            for &r in cols[j].keys() {
                row_cols[r].remove(&j);
            }
            cols[j].clear();
            alive[j] = false;
            units += 1;
            progress = true;
        }
    }

    // Dense phase on what is left.
    let live_cols: Vec<usize> = (0..cols.len()).filter(|&j| alive[j] && !cols[j].is_empty()).collect();
    let live_rows: Vec<usize> = (0..nrows).filter(|&i| !row_cols[i].is_empty()).collect();
    let row_pos: BTreeMap<usize, usize> = live_rows.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let mut a: Vec<Vec<T>> = vec![vec![T::zero_entry(); live_cols.len()]; live_rows.len()];
    for (cj, &j) in live_cols.iter().enumerate() {
        for (r, v) in &cols[j] {
            a[row_pos[r]][cj] = v.clone();
        }
    }
    let mut diag = snf_dense(&mut a)?;
    let mut out: Vec<T> = std::iter::repeat_with(T::one_entry).take(units).collect();
    out.append(&mut diag);
    Some(out)
}

/// Classic dense Smith reduction. Returns the nonzero diagonal with the
/// divisibility chain enforced.
#[allow(clippy::needless_range_loop)]
fn snf_dense<T: Entry>(a: &mut [Vec<T>]) -> Option<Vec<T>> {
    let nr = a.len();
    let nc = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // Smallest nonzero magnitude in the trailing block.
        let Some((pi, pj)) = min_entry(a, t, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if !a[i][t].is_zero() {
                    let q = a[i][t].quot(&a[t][t]);
                    for j in t..nc {
                        let d = q.mul(&a[t][j])?;
                        a[i][j] = a[i][j].sub(&d)?;
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..nc {
                if !a[t][j].is_zero() {
                    let q = a[t][j].quot(&a[t][t]);
                    for row in a.iter_mut() {
                        let d = q.mul(&row[t])?;
                        row[j] = row[j].sub(&d)?;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // A smaller remainder appeared in row or column t; make it the pivot.
                let mut best = (a[t][t].abs_cmp_key(), t, t);
                for i in t + 1..nr {
                    if !a[i][t].is_zero() && a[i][t].abs_cmp_key() < best.0 {
                        best = (a[i][t].abs_cmp_key(), i, t);
                    }
                }
                for j in t + 1..nc {
                    if !a[t][j].is_zero() && a[t][j].abs_cmp_key() < best.0 {
                        best = (a[t][j].abs_cmp_key(), t, j);
                    }
                }
                a.swap(t, best.1);
                for row in a.iter_mut() {
                    row.swap(t, best.2);
                }
                continue;
            }
            // Enforce that the pivot divides the rest of the block.
            let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !a[i][j].rem_is_zero(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..nc {
                        a[t][j] = a[t][j].add(&a[i][j])?;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    Some(diag)
}

fn min_entry<T: Entry>(a: &[Vec<T>], r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(r0) {
        for (j, v) in row.iter().enumerate().skip(c0) {
            if !v.is_zero() {
                let key = v.abs_cmp_key();
                if best.as_ref().map_or(true, |b| key < b.0) {
                    best = Some((key, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{euler_characteristic, vietoris_rips};
    use num_integer::Integer;
    use proptest::prelude::*;

    fn rp2() -> SimplicialComplex {
        let facets = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        SimplicialComplex::from_facets(6, 3, facets).unwrap()
    }

    #[allow(clippy::needless_range_loop)]
    fn dense_rank_gf2(m: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<u8>> = m.iter().map(|r| r.iter().map(|&v| (v.rem_euclid(2)) as u8).collect()).collect();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..a.len()).find(|&i| a[i][c] == 1) else { continue };
            a.swap(rank, p);
            for i in 0..a.len() {
                if i != rank && a[i][c] == 1 {
                    for j in 0..cols {
                        a[i][j] ^= a[rank][j];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn det(m: &[Vec<BigInt>]) -> BigInt {
        if m.is_empty() {
            return BigInt::one();
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let t = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
            .collect()
    }

    /// Invariant factors from determinantal divisors: d_1...d_k = gcd of k x k minors.
    fn factors_by_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
        let (nr, nc) = (m.len(), m.first().map_or(0, Vec::len));
        let mut prev = BigInt::one();
        let mut out = Vec::new();
        for k in 1..=nr.min(nc) {
            let mut g = BigInt::zero();
            for rs in subsets(nr, k) {
                for cs in subsets(nc, k) {
                    let sub: Vec<Vec<BigInt>> =
                        rs.iter().map(|&i| cs.iter().map(|&j| BigInt::from(m[i][j])).collect()).collect();
                    g = g.gcd(&det(&sub));
                }
            }
            if Zero::is_zero(&g) {
                break;
            }
            out.push(&g / &prev);
            prev = g;
        }
        out
    }

    fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let inner = b.len();
        a.iter()
            .map(|row| (0..b.first().map_or(0, Vec::len)).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect())
            .collect()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn boundary_matrix_examples() {
        let c4 = SimplicialComplex::from_facets(4, 1, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        let d1 = boundary_matrix(&c4, 1).unwrap();
        assert_eq!((d1.rows, d1.cols), (4, 4));
        assert!(d1.columns.iter().all(|c| c.len() == 2));
        assert!(matches!(boundary_matrix(&c4, 2), Err(Error::DimensionOutOfRange { p: 2, max: 1 })));
        assert!(matches!(boundary_matrix(&c4, 0), Err(Error::DimensionOutOfRange { .. })));

        let tet = SimplicialComplex::from_facets(4, 2, [[0, 1, 2, 3]]).unwrap();
        let d2 = boundary_matrix(&tet, 2).unwrap();
        assert_eq!((d2.rows, d2.cols), (6, 4));
        let prod = mul(&boundary_matrix(&tet, 1).unwrap().to_dense(), &d2.to_dense());
        assert!(prod.iter().flatten().all(|&v| v == 0));

        let vr = vietoris_rips(3, 2, 3).unwrap();
        let d3 = boundary_matrix(&vr, 3).unwrap();
        assert_eq!((d3.rows, d3.cols), (32, 16));
        assert!(d3.columns.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn signs_alternate_by_omitted_position() {
        let tri = SimplicialComplex::from_facets(3, 2, [[0, 1, 2]]).unwrap();
        let d = boundary_matrix(&tri, 2).unwrap();
        // faces in order [0,1], [0,2], [1,2] are omissions of 2, 1, 0
        assert_eq!(d.columns[0], vec![(0, 1), (1, -1), (2, 1)]);
    }

    #[test]
    fn betti_examples() {
        let b = |n, r, up_to| betti_gf2(&vietoris_rips(n, r, up_to + 1).unwrap(), up_to).unwrap().reduced_betti;
        assert_eq!(b(2, 1, 1), vec![0, 1]);
        assert_eq!(b(3, 1, 1), vec![0, 5]);
        assert_eq!(b(3, 2, 3), vec![0, 0, 0, 1]);
        assert_eq!(b(3, 3, 3), vec![0; 4]);
        assert_eq!(b(4, 3, 7), vec![0, 0, 0, 0, 0, 0, 0, 1]);

        let z = reduced_homology(&vietoris_rips(2, 1, 2).unwrap(), 1, Coefficients::Integers).unwrap();
        assert_eq!(z.reduced_betti, vec![0, 1]);
        assert_eq!(z.torsion, Some(vec![vec![], vec![]]));
    }

    #[test]
    fn truncation_is_enforced() {
        let k = vietoris_rips(3, 2, 2).unwrap();
        assert!(matches!(betti_gf2(&k, 2), Err(Error::TruncationTooShallow { up_to: 2, needed: 3, max_dim: 2 })));
        assert!(betti_integer(&k, 2, DEFAULT_SNF_CAP).is_err());
        assert!(betti_gf2(&k, 1).is_ok());
    }

    #[test]
    fn projective_plane_torsion() {
        let k = rp2();
        assert_eq!(euler_characteristic(&k), 1);
        let z = reduced_homology(&k, 2, Coefficients::Integers).unwrap();
        assert_eq!(z.reduced_betti, vec![0, 0, 0]);
        assert_eq!(z.torsion, Some(vec![vec![], vec![BigInt::from(2)], vec![]]));
        let f2 = reduced_homology(&k, 2, Coefficients::Gf2).unwrap();
        assert_eq!(f2.reduced_betti, vec![0, 1, 1]);
        assert_eq!(
            smith_normal_form(&boundary_matrix(&k, 2).unwrap(), 100).unwrap(),
            vec![BigInt::one(); 9].into_iter().chain([BigInt::from(2)]).collect::<Vec<_>>()
        );
    }

    #[test]
    fn snf_examples() {
        assert!(smith_normal_form_dense(&[vec![0, 0], vec![0, 0]], 10).unwrap().is_empty());
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(smith_normal_form_dense(&id, 10).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(smith_normal_form_dense(&[vec![2, 4], vec![6, 8]], 10).unwrap(), ints(&[2, 4]));
        assert_eq!(smith_normal_form_dense(&[vec![2, 0], vec![0, 3]], 10).unwrap(), ints(&[1, 6]));
        assert!(matches!(smith_normal_form_dense(&id, 2), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn snf_overflow_falls_back_to_bigint() {
        let big = 1i64 << 62;
        let m = vec![vec![big, 3], vec![5, big]];
        let expected = vec![BigInt::one(), Signed::abs(&(BigInt::from(big) * big - 15))];
        assert_eq!(smith_normal_form_dense(&m, 10).unwrap(), expected);
        assert_eq!(factors_by_minors(&m), expected);
    }

    #[test]
    fn gf2_membership() {
        let k = vietoris_rips(2, 1, 2).unwrap();
        // the 4-cycle is not a boundary in the circle
        let cycle = vec![vec![0, 1], vec![1, 3], vec![2, 3], vec![0, 2]];
        assert!(!is_boundary_gf2(&k, 1, &cycle).unwrap());
        let tet = SimplicialComplex::from_facets(4, 2, [[0, 1, 2, 3]]).unwrap();
        assert!(is_boundary_gf2(&tet, 1, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap());
        assert!(is_boundary_gf2(&tet, 1, &[vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn profile_serializes_expected_fields() {
        let p = reduced_homology(&rp2(), 1, Coefficients::Integers).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["coefficients"], "z");
        assert_eq!(v["torsion"][1][0], 2);
        assert_eq!(v["truncation_dim"], 1);
    }

    fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
        (3usize..=8).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::btree_set(0..n as u32, 1..=4), 1..=10)
                .prop_map(move |facets| SimplicialComplex::from_facets(n, 4, facets).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn chain_identity(k in complex_strategy()) {
            for p in 1..k.max_dim() {
                let a = boundary_matrix(&k, p).unwrap().to_dense();
                let b = boundary_matrix(&k, p + 1).unwrap().to_dense();
                if a.is_empty() || b.first().map_or(true, Vec::is_empty) {
                    continue;
                }
                prop_assert!(mul(&a, &b).iter().flatten().all(|&v| v == 0));
            }
        }

        #[test]
        fn gf2_rank_matches_dense_oracle(k in complex_strategy()) {
            for p in 1..=k.max_dim() {
                let m = boundary_matrix(&k, p).unwrap();
                prop_assert_eq!(gf2_rank(&m), dense_rank_gf2(&m.to_dense()));
            }
        }

        #[test]
        fn euler_and_coherence(k in complex_strategy()) {
            let f2 = betti_gf2(&k, 3).unwrap();
            let z = betti_integer(&k, 3, DEFAULT_SNF_CAP).unwrap();
            let alt = |v: &[usize]| v.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum::<i64>();
            prop_assert_eq!(k.count(4), 0);
            prop_assert_eq!(alt(&f2.reduced_betti), euler_characteristic(&k) - 1);
            let tors = z.torsion.as_ref().unwrap();
            let even = |i: usize| tors[i].iter().filter(|f| f.is_even()).count();
            for i in 0..=3 {
                let expected = z.reduced_betti[i] + even(i) + if i > 0 { even(i - 1) } else { 0 };
                prop_assert_eq!(f2.reduced_betti[i], expected);
            }
        }

        #[test]
        fn snf_matches_determinantal_divisors(
            m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
        ) {
            prop_assert_eq!(smith_normal_form_dense(&m, 10).unwrap(), factors_by_minors(&m));
        }

        #[test]
        fn bigint_path_agrees(
            m in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 5)
        ) {
            let cols: Vec<Vec<(usize, i64)>> = (0..5).map(|j| (0..5).filter(|&i| m[i][j] != 0).map(|i| (i, m[i][j])).collect()).collect();
            let wide: Vec<Vec<(usize, BigInt)>> = cols.iter().map(|c| c.iter().map(|(r, v)| (*r, BigInt::from(*v))).collect()).collect();
            let small: Vec<BigInt> = snf::<i64>(5, &cols).unwrap().into_iter().map(BigInt::from).collect();
            prop_assert_eq!(small, snf::<BigInt>(5, &wide).unwrap());
        }
    }
}
