//! Exact evaluation of the hypercube connectivity bound.
//!
//! The complement graph `G^c_{n,r}` joins two strings of `Q_n` when they
//! differ in more than `r` coordinates, so it is regular of degree
//! `tail_degree(n, r) = sum_{i>r} C(n, i)`. Its total domination number is at
//! least `2^n / tail_degree`, and a total domination number above `2k` makes
//! the independence complex `(k-1)`-connected. Everything here is computed
//! with unbounded integers; nothing overflows for any `n`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Dimension and scale of a Vietoris-Rips complex `VR(Q_n; r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoundQuery {
    pub n: u32,
    pub r: u32,
}

impl BoundQuery {
    pub fn new(n: u32, r: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("hypercube dimension must be at least 1".into()));
        }
        Ok(Self { n, r })
    }
}

/// `2^{n-1} / tail_degree(n, r)`, kept unreduced.
#[derive(Debug, Clone)]
pub struct ExactRatio {
    pub numerator: BigUint,
    pub denominator: BigUint,
}

impl ExactRatio {
    pub fn is_integer(&self) -> bool {
        self.numerator.is_multiple_of(&self.denominator)
    }

    pub fn floor(&self) -> BigUint {
        &self.numerator / &self.denominator
    }

    /// Compares `self` against `a / b` by cross-multiplication.
    pub fn cmp_fraction(&self, a: &BigUint, b: &BigUint) -> std::cmp::Ordering {
        (&self.numerator * b).cmp(&(a * &self.denominator))
    }
}

impl PartialEq for ExactRatio {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for ExactRatio {}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Guaranteed connectivity of `VR(Q_n; r)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConnectivityBound {
    /// `c`-connected is guaranteed; `c = -1` only asserts non-emptiness.
    LowerBound(BigInt),
    /// `r >= n`: the complex is the full simplex on `2^n` vertices.
    Contractible,
}

impl ConnectivityBound {
    pub fn lower_bound(&self) -> Option<&BigInt> {
        match self {
            ConnectivityBound::LowerBound(c) => Some(c),
            ConnectivityBound::Contractible => None,
        }
    }

    /// The bound as an `i64`, if it is finite and fits.
    pub fn as_i64(&self) -> Option<i64> {
        self.lower_bound().and_then(|c| c.to_i64())
    }

    /// True when every reduced homology group of dimension `i` must vanish.
    pub fn forces_vanishing(&self, i: u64) -> bool {
        match self {
            ConnectivityBound::Contractible => true,
            ConnectivityBound::LowerBound(c) => BigInt::from(i) <= *c,
        }
    }
}

impl fmt::Display for ConnectivityBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectivityBound::LowerBound(c) => write!(f, "{c}"),
            ConnectivityBound::Contractible => f.write_str("contractible"),
        }
    }
}

/// `C(n, i)`, zero when `i > n`.
pub fn binomial(n: u64, i: u64) -> BigUint {
    if i > n {
        return BigUint::zero();
    }
    let i = i.min(n - i);
    let mut acc = BigUint::one();
    for j in 0..i {
        // Each prefix product is itself a binomial coefficient, so the division is exact.
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Degree of every vertex of `G^c_{n,r}`: `sum_{i=r+1}^{n} C(n, i)`.
pub fn tail_degree(n: u32, r: u32) -> BigUint {
    let n = u64::from(n);
    let mut sum = BigUint::zero();
    if u64::from(r) >= n {
        return sum;
    }
    let mut term = binomial(n, u64::from(r) + 1);
    for i in (u64::from(r) + 1)..=n {
        sum += &term;
        // C(n, i+1) = C(n, i) * (n - i) / (i + 1)
        term = term * (n - i) / (i + 1);
    }
    sum
}

/// `tail_degree` as a machine integer, for graph-sized `n`.
pub fn tail_degree_u64(n: u32, r: u32) -> Option<u64> {
    tail_degree(n, r).to_u64()
}

pub fn alpha(q: BoundQuery) -> Result<ExactRatio> {
    if q.r >= q.n {
        return Err(Error::DegenerateScale { n: q.n, r: q.r });
    }
    Ok(ExactRatio { numerator: BigUint::one() << (q.n - 1), denominator: tail_degree(q.n, q.r) })
}

/// The largest integer strictly below `alpha`.
pub fn strict_floor(ratio: &ExactRatio) -> BigUint {
    let fl = ratio.floor();
    if ratio.is_integer() {
        fl - 1u32
    } else {
        fl
    }
}

pub fn connectivity_lower_bound(q: BoundQuery) -> ConnectivityBound {
    match alpha(q) {
        Err(_) => ConnectivityBound::Contractible,
        Ok(ratio) => {
            let k = BigInt::from(strict_floor(&ratio));
            ConnectivityBound::LowerBound(k - 1)
        }
    }
}

/// The eight `(n, r)` rows of the published table with their printed connectivity.
pub const PUBLISHED_TABLE: [(u32, u32, i64); 8] =
    [(7, 5, 6), (8, 6, 13), (9, 7, 24), (12, 10, 156), (18, 15, 761), (18, 16, 6897), (20, 16, 387), (20, 18, 24964)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub r: u32,
    pub connectivity: i64,
    pub printed: i64,
    pub agrees: bool,
}

/// Looks up the printed value for `(n, r)` in the published table.
pub fn published_value(n: u32, r: u32) -> Option<i64> {
    PUBLISHED_TABLE.iter().find(|&&(pn, pr, _)| pn == n && pr == r).map(|&(_, _, c)| c)
}

pub fn paper_table() -> Vec<TableRow> {
    PUBLISHED_TABLE
        .iter()
        .map(|&(n, r, printed)| {
            let connectivity =
                connectivity_lower_bound(BoundQuery { n, r }).as_i64().expect("table rows are finite and small");
            TableRow { n, r, connectivity, printed, agrees: connectivity == printed }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: u32,
    pub r: u32,
    #[serde(serialize_with = "ser_bigint")]
    pub bound: BigInt,
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

/// Pairs with `n >= r + 2` whose bound is at least `r + 1`, forcing
/// `H_{r+1}` to vanish. Sorted by `(n, r)`.
pub fn counterexample_scan(n_max: u32) -> Vec<Counterexample> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for r in 0..=n - 2 {
            if let ConnectivityBound::LowerBound(c) = connectivity_lower_bound(BoundQuery { n, r }) {
                if c > BigInt::from(r) {
                    out.push(Counterexample { n, r, bound: c });
                }
            }
        }
    }
    out
}

/// Pairs where the bound would exceed `2^r - 2`, contradicting the known
/// nonvanishing of `H_{2^r - 1}`. Expected to be empty.
pub fn consistency_check_2r(n_max: u32) -> Vec<Counterexample> {
    let mut out = Vec::new();
    for n in 3..=n_max {
        for r in 1..=n - 2 {
            if let ConnectivityBound::LowerBound(c) = connectivity_lower_bound(BoundQuery { n, r }) {
                let cap = (BigInt::one() << r) - 2;
                if c > cap {
                    out.push(Counterexample { n, r, bound: c });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Row-by-row Pascal triangle, independent of the multiplicative formula.
    fn pascal(rows: usize) -> Vec<Vec<BigUint>> {
        let mut tri: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
        for n in 1..=rows {
            let prev = &tri[n - 1];
            let mut row = vec![BigUint::one(); n + 1];
            for i in 1..n {
                row[i] = &prev[i - 1] + &prev[i];
            }
            tri.push(row);
        }
        tri
    }

    fn q(n: u32, r: u32) -> BoundQuery {
        BoundQuery::new(n, r).unwrap()
    }

    fn lb(c: i64) -> ConnectivityBound {
        ConnectivityBound::LowerBound(BigInt::from(c))
    }

    #[test]
    fn binomial_examples() {
        let tri = pascal(20);
        assert_eq!(binomial(7, 0), BigUint::one());
        assert_eq!(binomial(8, 7), BigUint::from(8u32));
        assert_eq!(tri[20][17], BigUint::from(1140u32));
        assert_eq!(binomial(20, 17), tri[20][17]);
        assert_eq!(binomial(3, 5), BigUint::zero());
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let tri = pascal(96);
        for (n, row) in tri.iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as u64, i as u64), v, "C({n},{i})");
            }
        }
    }

    #[test]
    fn tail_degree_examples() {
        assert_eq!(tail_degree(7, 5), BigUint::from(8u32));
        assert_eq!(tail_degree(6, 4), BigUint::from(7u32));
        for n in 1..40 {
            assert!(tail_degree(n, n).is_zero());
            assert!(tail_degree(n, n + 3).is_zero());
        }
    }

    #[test]
    fn tail_degree_matches_complementary_sum() {
        for n in 1..=64u32 {
            let total = BigUint::one() << n;
            for r in 0..n {
                let head: BigUint = (0..=r).map(|i| binomial(n.into(), i.into())).sum();
                assert_eq!(tail_degree(n, r), &total - head, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn alpha_examples() {
        let a = alpha(q(7, 5)).unwrap();
        assert_eq!(a.numerator, BigUint::from(64u32));
        assert_eq!(a.denominator, BigUint::from(8u32));
        assert!(a.is_integer());
        assert_eq!(a.floor(), BigUint::from(8u32));

        let a = alpha(q(8, 6)).unwrap();
        assert_eq!(a.to_string(), "128/9");
        assert!(!a.is_integer());

        let a = alpha(q(2, 1)).unwrap();
        assert_eq!(a.to_string(), "2/1");

        assert_eq!(alpha(q(4, 4)).unwrap_err(), Error::DegenerateScale { n: 4, r: 4 });
    }

    #[test]
    fn bound_examples() {
        assert_eq!(connectivity_lower_bound(q(7, 5)), lb(6));
        assert_eq!(connectivity_lower_bound(q(8, 6)), lb(13));
        assert_eq!(connectivity_lower_bound(q(2, 1)), lb(0));
        for n in 2..30 {
            assert_eq!(connectivity_lower_bound(q(n, 0)), lb(-1), "n={n}");
        }
        assert_eq!(connectivity_lower_bound(q(20, 18)), lb(24965));
        assert_eq!(connectivity_lower_bound(q(3, 3)), ConnectivityBound::Contractible);
        assert_eq!(connectivity_lower_bound(q(3, 9)), ConnectivityBound::Contractible);
    }

    #[test]
    fn published_table_rows() {
        let rows = paper_table();
        assert_eq!(rows.len(), 8);
        let disagree: Vec<_> = rows.iter().filter(|r| !r.agrees).collect();
        assert_eq!(disagree.len(), 1);
        assert_eq!((disagree[0].n, disagree[0].r, disagree[0].connectivity), (20, 18, 24965));
        assert_eq!(disagree[0].printed, 24964);
        let row = rows.iter().find(|r| (r.n, r.r) == (9, 7)).unwrap();
        assert!(row.agrees && row.connectivity == 24);
        let row = rows.iter().find(|r| (r.n, r.r) == (18, 16)).unwrap();
        assert!(row.agrees && row.connectivity == 6897);
    }

    #[test]
    fn counterexample_examples() {
        assert!(counterexample_scan(6).is_empty());
        let seven = counterexample_scan(7);
        assert!(seven.iter().any(|c| (c.n, c.r, c.bound.clone()) == (7, 5, BigInt::from(6))));
        let eight = counterexample_scan(8);
        assert!(eight.iter().any(|c| (c.n, c.r, c.bound.clone()) == (8, 6, BigInt::from(13))));
        let mut sorted = eight.clone();
        sorted.sort_by_key(|c| (c.n, c.r));
        assert_eq!(sorted, eight);
    }

    #[test]
    fn no_two_power_violations() {
        assert!(consistency_check_2r(8).is_empty());
        assert!(consistency_check_2r(20).is_empty());
        let c = connectivity_lower_bound(q(7, 5)).as_i64().unwrap();
        assert!(c <= (1 << 5) - 2);
    }

    #[test]
    fn closed_form_at_top_scale() {
        for n in 1..=200u32 {
            let expected = (BigInt::one() << (n - 1)) - 2;
            assert_eq!(connectivity_lower_bound(q(n, n - 1)), ConnectivityBound::LowerBound(expected));
        }
    }

    #[test]
    fn exact_up_to_1024() {
        let a = alpha(q(1024, 1000)).unwrap();
        assert_eq!(a.numerator, BigUint::one() << 1023u32);
        assert_eq!(a.denominator, tail_degree(1024, 1000));
        assert!(matches!(connectivity_lower_bound(q(1024, 1023)), ConnectivityBound::LowerBound(_)));
    }

    proptest! {
        #[test]
        fn k_is_largest_integer_below_alpha(n in 1u32..300, r_frac in 0.0f64..1.0) {
            let r = ((n as f64) * r_frac) as u32 % n;
            let a = alpha(q(n, r)).unwrap();
            let k = strict_floor(&a);
            // k < alpha <= k + 1
            prop_assert_eq!(a.cmp_fraction(&k, &BigUint::one()), std::cmp::Ordering::Greater);
            prop_assert_ne!(a.cmp_fraction(&(&k + 1u32), &BigUint::one()), std::cmp::Ordering::Greater);
        }

        #[test]
        fn monotone_in_scale(n in 1u32..120) {
            let bounds: Vec<_> = (0..n).map(|r| connectivity_lower_bound(q(n, r))).collect();
            for w in bounds.windows(2) {
                prop_assert!(w[0] <= w[1]);
            }
            for r in 0..n.saturating_sub(1) {
                prop_assert!(tail_degree(n, r) > tail_degree(n, r + 1));
            }
        }
    }
}
