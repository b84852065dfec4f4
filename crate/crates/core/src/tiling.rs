//! Allowed subsets of `Z/NZ` and the unit-coefficient polynomials `P_A`.
//!
//! Given a mark set `A`, the generating subsets are the singletons `{a}` with
//! `a` in `A` and the pairs `{k, k+1}` with `k` not in `A`. A proper subset is
//! allowed when it splits into disjoint generating subsets, and
//! `P_A = sum over allowed B of prod_{i not in B} X_i`.
//!
//! Subsets are bit masks, so the modulus is capped at [`MAX_VARIABLES`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::SigmaWord;

pub const MAX_VARIABLES: usize = 24;

/// A subset of `Z/NZ` as a bit mask (bit `i` set iff `i` is a member).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARIABLES);
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Subset(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    /// Shifts every member by `by` modulo `n`.
    pub fn rotate(self, n: usize, by: usize) -> Subset {
        Subset::from_indices(self.indices().into_iter().map(|i| (i + by) % n))
    }

    /// Shifts every member up by `by` without wrapping.
    pub fn shift(self, by: usize) -> Subset {
        Subset(self.0 << by)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.indices().into_iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(s)
    }
}

/// The mark set `A` inside `Z/NZ`, `N >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkSet {
    modulus: usize,
    members: Subset,
}

impl MarkSet {
    pub fn new(modulus: usize, members: &[usize]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::NoSingularParts);
        }
        if modulus > MAX_VARIABLES {
            return Err(Error::TooManyVariables { count: modulus, max: MAX_VARIABLES });
        }
        if let Some(&index) = members.iter().find(|&&m| m >= modulus) {
            return Err(Error::OutOfRange { index, modulus });
        }
        Ok(Self { modulus, members: Subset::from_indices(members.iter().copied()) })
    }

    pub fn from_subset(modulus: usize, members: Subset) -> Result<Self> {
        Self::new(modulus, &members.indices())
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn members(&self) -> Subset {
        self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    /// `A + by` in `Z/NZ`.
    pub fn rotate(&self, by: usize) -> MarkSet {
        MarkSet { modulus: self.modulus, members: self.members.rotate(self.modulus, by) }
    }

    /// Disjoint union: `other` is placed after `self`, shifted by `self.modulus()`.
    pub fn disjoint_union(&self, other: &MarkSet) -> Result<MarkSet> {
        let modulus = self.modulus + other.modulus;
        if modulus > MAX_VARIABLES {
            return Err(Error::TooManyVariables { count: modulus, max: MAX_VARIABLES });
        }
        Ok(MarkSet { modulus, members: self.members.union(other.members.shift(self.modulus)) })
    }
}

impl fmt::Display for MarkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Z/{}Z", self.members, self.modulus)
    }
}

/// `A(sigma)`: singular part `j` (counted in word order) is marked when the
/// part cyclically following it is regular.
pub fn mark_set(w: &SigmaWord) -> Result<MarkSet> {
    let parts = w.parts();
    let len = parts.len();
    let mut marks = Vec::new();
    let mut j = 0;
    for (i, p) in parts.iter().enumerate() {
        if p.is_singular() {
            if parts[(i + 1) % len].is_regular() {
                marks.push(j);
            }
            j += 1;
        }
    }
    if j == 0 {
        return Err(Error::NoSingularParts);
    }
    MarkSet::new(j, &marks)
}

/// Singletons of marks, then pairs `{k, k+1}` with `k` unmarked that are
/// proper two-element subsets. The singleton of a one-element modulus is
/// listed even though it can never be part of an allowed subset.
pub fn generating_subsets(a: &MarkSet) -> Vec<Subset> {
    let n = a.modulus;
    let mut out: Vec<Subset> = a.members.indices().into_iter().map(Subset::singleton).collect();
    if n >= 3 {
        out.extend((0..n).filter(|&k| !a.contains(k)).map(|k| Subset::from_indices([k, (k + 1) % n])));
    }
    out
}

/// Maximal cyclic runs of consecutive members of a proper subset, each in
/// cyclic order, ordered by their first element.
fn runs(b: Subset, n: usize) -> Vec<Vec<usize>> {
    debug_assert!(b != Subset::full(n));
    let mut out = Vec::new();
    for start in b.indices() {
        if b.contains((start + n - 1) % n) {
            continue;
        }
        let mut run = vec![start];
        let mut x = (start + 1) % n;
        while b.contains(x) {
            run.push(x);
            x = (x + 1) % n;
        }
        out.push(run);
    }
    out
}

/// Can this linear run be tiled by marked singletons and pairs starting at an
/// unmarked element?
fn run_is_tileable(run: &[usize], a: &MarkSet) -> bool {
    let mut reach = vec![false; run.len() + 1];
    reach[0] = true;
    for i in 1..=run.len() {
        reach[i] = (reach[i - 1] && a.contains(run[i - 1]))
            || (i >= 2 && reach[i - 2] && !a.contains(run[i - 2]));
    }
    reach[run.len()]
}

pub fn is_allowed(b: Subset, a: &MarkSet) -> bool {
    let n = a.modulus;
    if !b.is_subset_of(Subset::full(n)) || b == Subset::full(n) {
        return false;
    }
    runs(b, n).iter().all(|r| run_is_tileable(r, a))
}

/// Every allowed subset, in increasing mask order.
pub fn allowed_subsets(a: &MarkSet) -> Vec<Subset> {
    (0..1u32 << a.modulus).map(Subset).filter(|&b| is_allowed(b, a)).collect()
}

/// A polynomial with unit coefficients, stored as its set of tiles: tile `B`
/// stands for the monomial `prod_{i not in B} X_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilePolynomial {
    nvars: usize,
    tiles: Vec<Subset>,
    marks: Option<Subset>,
}

impl TilePolynomial {
    /// The zero polynomial in no variables.
    pub fn zero() -> Self {
        Self { nvars: 0, tiles: Vec::new(), marks: None }
    }

    /// Builds a polynomial from arbitrary tiles; duplicates are merged.
    pub fn from_tiles(nvars: usize, tiles: impl IntoIterator<Item = Subset>) -> Result<Self> {
        if nvars > MAX_VARIABLES {
            return Err(Error::TooManyVariables { count: nvars, max: MAX_VARIABLES });
        }
        let full = Subset::full(nvars);
        let mut tiles: Vec<Subset> = tiles.into_iter().collect();
        if let Some(t) = tiles.iter().find(|t| !t.is_subset_of(full)) {
            return Err(Error::OutOfRange { index: t.indices().last().copied().unwrap_or(0), modulus: nvars });
        }
        tiles.sort_by_key(|&t| Self::sort_key(t, nvars));
        tiles.dedup();
        Ok(Self { nvars, tiles, marks: None })
    }

    // Degree descending, then monomials by their variable lists.
    fn sort_key(tile: Subset, nvars: usize) -> (usize, Vec<usize>) {
        (tile.len(), tile.complement(nvars).indices())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn tiles(&self) -> &[Subset] {
        &self.tiles
    }

    pub fn marks(&self) -> Option<MarkSet> {
        self.marks.map(|m| MarkSet { modulus: self.nvars, members: m })
    }

    pub fn contains_tile(&self, b: Subset) -> bool {
        self.tiles.binary_search_by_key(&Self::sort_key(b, self.nvars), |&t| Self::sort_key(t, self.nvars)).is_ok()
    }

    /// Variable index lists of the monomials, in display order.
    pub fn monomials(&self) -> Vec<Vec<usize>> {
        self.tiles.iter().map(|t| t.complement(self.nvars).indices()).collect()
    }

    /// `sum over tiles of prod_{i not in B} k_i`.
    pub fn eval(&self, values: &[i64]) -> Result<BigInt> {
        if values.len() != self.nvars {
            return Err(Error::Arity { expected: self.nvars, actual: values.len() });
        }
        let values: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
        Ok(self.eval_big(&values))
    }

    pub fn eval_big(&self, values: &[BigInt]) -> BigInt {
        debug_assert_eq!(values.len(), self.nvars);
        self.tiles
            .iter()
            .map(|t| {
                (0..self.nvars)
                    .filter(|&i| !t.contains(i))
                    .fold(BigInt::one(), |acc, i| acc * &values[i])
            })
            .fold(BigInt::zero(), |acc, m| acc + m)
    }

    /// Renames `X_i` to `X_{i+by}` cyclically.
    pub fn rotate_variables(&self, by: usize) -> TilePolynomial {
        let n = self.nvars;
        let mut p = Self::from_tiles(n, self.tiles.iter().map(|t| t.rotate(n, by))).expect("same size");
        p.marks = self.marks.map(|m| m.rotate(n, by));
        p
    }

    /// Sets `X_i = 0` for every `i` in `b` and renumbers the surviving
    /// variables by their order in the complement of `b`.
    pub fn specialize_zero(&self, b: Subset) -> TilePolynomial {
        let keep = b.complement(self.nvars).indices();
        let relabel = |t: Subset| {
            Subset::from_indices(keep.iter().enumerate().filter(|&(_, &i)| t.contains(i)).map(|(r, _)| r))
        };
        Self::from_tiles(keep.len(), self.tiles.iter().filter(|t| b.is_subset_of(**t)).map(|&t| relabel(t)))
            .expect("fewer variables")
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Export<'a> {
            #[serde(rename = "N")]
            n: usize,
            #[serde(rename = "A")]
            a: Option<Subset>,
            tiles: &'a [Subset],
        }
        serde_json::to_string(&Export { n: self.nvars, a: self.marks, tiles: &self.tiles })
            .expect("plain data serializes")
    }
}

impl fmt::Display for TilePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tiles.is_empty() {
            return f.write_str("0");
        }
        for (n, vars) in self.monomials().into_iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if vars.is_empty() {
                f.write_str("1")?;
            }
            for (m, i) in vars.into_iter().enumerate() {
                if m > 0 {
                    f.write_str("*")?;
                }
                write!(f, "X{i}")?;
            }
        }
        Ok(())
    }
}

pub fn poly(a: &MarkSet) -> TilePolynomial {
    let mut p = TilePolynomial::from_tiles(a.modulus, allowed_subsets(a)).expect("modulus checked by MarkSet");
    p.marks = Some(a.members);
    p
}

pub fn eval_poly(p: &TilePolynomial, k: &[i64]) -> Result<BigInt> {
    p.eval(k)
}

/// A run of an allowed subset ending at a mark, with the index just before it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedRun {
    pub run: Vec<usize>,
    pub spring: usize,
}

/// The unique split of an allowed subset into fixed runs and even, mark-free
/// wandering runs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CanonicalTiling {
    pub fixed_runs: Vec<FixedRun>,
    pub wandering_runs: Vec<Vec<usize>>,
}

impl CanonicalTiling {
    pub fn springs(&self) -> Subset {
        Subset::from_indices(self.fixed_runs.iter().map(|f| f.spring))
    }
}

pub fn canonical_tiling(b: Subset, a: &MarkSet) -> Result<CanonicalTiling> {
    if !is_allowed(b, a) {
        return Err(Error::NotAllowed { subset: b.to_string() });
    }
    let n = a.modulus;
    let mut tiling = CanonicalTiling::default();
    for run in runs(b, n) {
        match run.iter().rposition(|&x| a.contains(x)) {
            Some(last_mark) => {
                let spring = (run[0] + n - 1) % n;
                tiling.fixed_runs.push(FixedRun { run: run[..=last_mark].to_vec(), spring });
                if last_mark + 1 < run.len() {
                    tiling.wandering_runs.push(run[last_mark + 1..].to_vec());
                }
            }
            None => tiling.wandering_runs.push(run),
        }
    }
    Ok(tiling)
}

/// The mark set `A'` on the complement of `b` with
/// `P_A(X_i = 0, i in b) = P_{A'}`: surviving marks plus the springs of `b`,
/// renumbered in increasing order.
pub fn specialize_zero(a: &MarkSet, b: Subset) -> Result<MarkSet> {
    let tiling = canonical_tiling(b, a)?;
    let n = a.modulus;
    let keep = b.complement(n).indices();
    let marked = a.members.intersection(b.complement(n)).union(tiling.springs());
    let members: Vec<usize> = keep.iter().enumerate().filter(|&(_, &i)| marked.contains(i)).map(|(r, _)| r).collect();
    MarkSet::new(keep.len(), &members)
}

/// `P' P'' + P' + P''`, with the variables of `second` placed after those of `first`.
///
/// This is `poly(A' ⊔ A'')` whenever the last index of each mark set is
/// marked (always the case for simple words). Otherwise a generating pair
/// straddles a seam and the two differ.
pub fn compose(first: &TilePolynomial, second: &TilePolynomial) -> Result<TilePolynomial> {
    let n1 = first.nvars;
    let n2 = second.nvars;
    let shifted: Vec<Subset> = second.tiles.iter().map(|t| t.shift(n1)).collect();
    let full_first = Subset::full(n1);
    let full_second = Subset::full(n2).shift(n1);
    let mut tiles = Vec::with_capacity(first.tiles.len() * (shifted.len() + 1) + shifted.len());
    for &t1 in &first.tiles {
        tiles.extend(shifted.iter().map(|&t2| t1.union(t2)));
        tiles.push(t1.union(full_second));
    }
    tiles.extend(shifted.iter().map(|&t2| full_first.union(t2)));
    let mut p = TilePolynomial::from_tiles(n1 + n2, tiles)?;
    p.marks = match (first.marks, second.marks) {
        (Some(a1), Some(a2)) => Some(a1.union(a2.shift(n1))),
        _ => None,
    };
    Ok(p)
}

/// Singular lengths as evaluation points.
pub fn singular_values(w: &SigmaWord) -> Vec<i64> {
    w.singular_lengths().into_iter().map(|k| k as i64).collect()
}

/// The twisting coefficient `P_{A(w)}(k) + 1`.
pub fn delta(w: &SigmaWord) -> Result<BigInt> {
    let a = mark_set(w)?;
    Ok(poly(&a).eval(&singular_values(w))? + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::parse_sigma;

    fn marks(n: usize, a: &[usize]) -> MarkSet {
        MarkSet::new(n, a).unwrap()
    }
    fn set(i: &[usize]) -> Subset {
        Subset::from_indices(i.iter().copied())
    }
    fn text(n: usize, a: &[usize]) -> String {
        poly(&marks(n, a)).to_string()
    }

    #[test]
    fn mark_set_examples() {
        let a = mark_set(&parse_sigma("s2 r1 s3").unwrap()).unwrap();
        assert_eq!((a.modulus(), a.members()), (2, set(&[0])));
        let a = mark_set(&parse_sigma("s2 s3").unwrap()).unwrap();
        assert_eq!((a.modulus(), a.members()), (2, Subset::EMPTY));
        let a = mark_set(&parse_sigma("s1 r1 s1 r1").unwrap()).unwrap();
        assert_eq!(a.members(), set(&[0, 1]));
        assert_eq!(mark_set(&parse_sigma("r3").unwrap()), Err(Error::NoSingularParts));
        // the mark of the last singular part wraps to the first part
        let a = mark_set(&parse_sigma("r2 s1 s4").unwrap()).unwrap();
        assert_eq!(a.members(), set(&[1]));
    }

    #[test]
    fn generating_examples() {
        assert_eq!(generating_subsets(&marks(3, &[])), vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 0])]);
        assert_eq!(generating_subsets(&marks(3, &[0, 1])), vec![set(&[0]), set(&[1]), set(&[2, 0])]);
        assert_eq!(generating_subsets(&marks(1, &[0])), vec![set(&[0])]);
        assert_eq!(generating_subsets(&marks(2, &[])), vec![]);
    }

    #[test]
    fn allowed_examples() {
        let a = marks(3, &[0]);
        assert!(is_allowed(Subset::EMPTY, &a));
        assert!(!is_allowed(Subset::full(3), &a));
        assert!(!is_allowed(set(&[0, 1]), &a));
        assert!(is_allowed(set(&[1, 2]), &a));
        assert!(is_allowed(set(&[2, 0]), &a));
        assert_eq!(allowed_subsets(&a), vec![Subset::EMPTY, set(&[0]), set(&[0, 2]), set(&[1, 2])]);
        assert!(!is_allowed(set(&[0]), &marks(1, &[0])));
        assert!(!is_allowed(set(&[5]), &a));
    }

    #[test]
    fn small_families() {
        assert_eq!(text(1, &[]), "X0");
        assert_eq!(text(1, &[0]), "X0");
        assert_eq!(text(2, &[]), "X0*X1");
        assert_eq!(text(2, &[0]), "X0*X1 + X1");
        assert_eq!(text(2, &[1]), "X0*X1 + X0");
        assert_eq!(text(2, &[0, 1]), "X0*X1 + X0 + X1");
        assert_eq!(text(3, &[]), "X0*X1*X2 + X0 + X1 + X2");
        assert_eq!(text(3, &[0]), "X0*X1*X2 + X1*X2 + X0 + X1");
        assert_eq!(text(3, &[0, 1]), "X0*X1*X2 + X0*X2 + X1*X2 + X1 + X2");
        assert_eq!(poly(&marks(3, &[0, 1, 2])).tiles().len(), 7);
    }

    #[test]
    fn evaluation() {
        let p = poly(&marks(2, &[]));
        assert_eq!(p.eval(&[3, 5]).unwrap(), BigInt::from(15));
        assert_eq!(p.eval(&[0, 0]).unwrap(), BigInt::zero());
        assert_eq!(poly(&marks(2, &[0, 1])).eval(&[2, 1]).unwrap(), BigInt::from(5));
        assert_eq!(p.eval(&[1]), Err(Error::Arity { expected: 2, actual: 1 }));
        assert_eq!(poly(&marks(3, &[0])).eval(&[1, 2, 1]).unwrap(), BigInt::from(7));
    }

    #[test]
    fn canonical_tiling_examples() {
        let t = canonical_tiling(set(&[2, 0]), &marks(3, &[0])).unwrap();
        assert_eq!(t.fixed_runs, vec![FixedRun { run: vec![2, 0], spring: 1 }]);
        assert!(t.wandering_runs.is_empty());
        let t = canonical_tiling(set(&[0, 1]), &marks(3, &[])).unwrap();
        assert_eq!(t, CanonicalTiling { fixed_runs: vec![], wandering_runs: vec![vec![0, 1]] });
        assert_eq!(canonical_tiling(Subset::EMPTY, &marks(4, &[1])).unwrap(), CanonicalTiling::default());
        // fixed part then a wandering tail inside one run
        let t = canonical_tiling(set(&[0, 1, 2]), &marks(5, &[0])).unwrap();
        assert_eq!(t.fixed_runs, vec![FixedRun { run: vec![0], spring: 4 }]);
        assert_eq!(t.wandering_runs, vec![vec![1, 2]]);
        assert!(canonical_tiling(set(&[0, 1]), &marks(3, &[0])).is_err());
    }

    #[test]
    fn specialization_examples() {
        let a = marks(3, &[0]);
        let a2 = specialize_zero(&a, set(&[0])).unwrap();
        assert_eq!((a2.modulus(), a2.members()), (2, set(&[1])));
        assert_eq!(poly(&a).specialize_zero(set(&[0])).to_string(), "X0*X1 + X0");
        assert_eq!(poly(&a).specialize_zero(set(&[0])).tiles(), poly(&a2).tiles());
        assert_eq!(specialize_zero(&a, Subset::EMPTY).unwrap(), a);
        let e = specialize_zero(&marks(3, &[]), set(&[0, 1])).unwrap();
        assert_eq!((e.modulus(), e.members()), (1, Subset::EMPTY));
    }

    #[test]
    fn composition() {
        let x = poly(&marks(1, &[0]));
        let c = compose(&x, &x).unwrap();
        assert_eq!(c.to_string(), "X0*X1 + X0 + X1");
        assert_eq!(c, poly(&marks(2, &[0, 1])));
        let z = compose(&x, &TilePolynomial::zero()).unwrap();
        assert_eq!(z.tiles(), x.tiles());
        assert_eq!(z.nvars(), 1);
    }

    #[test]
    fn delta_examples() {
        let d = |s: &str| delta(&parse_sigma(s).unwrap()).unwrap();
        assert_eq!(d("s1 r1"), BigInt::from(2));
        assert_eq!(d("s2 r1 s1 r1"), BigInt::from(6));
        assert_eq!(d("s2 s1 s1 r1"), BigInt::from(8));
        assert!(delta(&parse_sigma("r2").unwrap()).is_err());
    }

    #[test]
    fn json_export() {
        assert_eq!(poly(&marks(2, &[0])).to_json(), r#"{"N":2,"A":[0],"tiles":[[],[0]]}"#);
    }

    #[test]
    fn mark_set_bounds() {
        assert!(matches!(MarkSet::new(25, &[]), Err(Error::TooManyVariables { .. })));
        assert_eq!(MarkSet::new(3, &[3]), Err(Error::OutOfRange { index: 3, modulus: 3 }));
        assert!(MarkSet::new(0, &[]).is_err());
    }
}
