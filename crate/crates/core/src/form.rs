//! The symmetric integer form `M(sigma)` written on the torus `Z/nZ`.
//!
//! Adjacency comes from one jump edge per index: with `k_i = a_i - 2`, index
//! `i` meets `i + k_i + 1 (mod n)`. A jump landing on `i` itself is a node of
//! the curve and lowers the diagonal entry by 2.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::sequence::{AWord, SigmaWord};

/// Which sign convention to export: the positive form `M(sigma)` or the
/// surface intersection matrix `M(S) = -M(sigma)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sign {
    #[default]
    Form,
    Surface,
}

/// One edge `{i, target}` per index `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMultiset {
    n: usize,
    targets: Vec<usize>,
}

impl EdgeMultiset {
    pub fn from_aword(a: &AWord) -> Self {
        let n = a.len();
        let targets = a
            .entries()
            .iter()
            .enumerate()
            .map(|(i, &ai)| (i + ai as usize - 1) % n)
            .collect();
        Self { n, targets }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Edges as `(source, target)` pairs, one per source index.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.targets.iter().copied().enumerate()
    }

    /// Multiplicity of the unordered pair `{i, j}`.
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.edges()
            .filter(|&(s, t)| (s == i && t == j) || (s == j && t == i))
            .count()
    }

    pub fn self_loops(&self, i: usize) -> usize {
        usize::from(self.targets[i] == i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    n: usize,
    entries: Vec<i64>,
}

impl IntersectionForm {
    /// Builds `M(sigma)` from the jump edges of the expanded word.
    pub fn build(w: &SigmaWord) -> Self {
        let a = w.expand();
        let n = a.len();
        let mut entries = vec![0i64; n * n];
        for (i, &ai) in a.entries().iter().enumerate() {
            entries[i * n + i] = ai as i64;
        }
        for (i, t) in EdgeMultiset::from_aword(&a).edges() {
            if i == t {
                entries[i * n + i] -= 2;
            } else {
                entries[i * n + t] -= 1;
                entries[t * n + i] -= 1;
            }
        }
        Self { n, entries }
    }

    /// Wraps a square matrix given by rows. Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, entries: rows.concat() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.n).map(|i| self.entry(i, i)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    pub fn with_sign(&self, sign: Sign) -> Self {
        match sign {
            Sign::Form => self.clone(),
            Sign::Surface => Self { n: self.n, entries: self.entries.iter().map(|x| -x).collect() },
        }
    }

    pub fn determinant(&self) -> BigInt {
        det_exact(self)
    }

    pub fn is_positive_definite(&self) -> bool {
        is_positive_definite(self)
    }

    pub fn to_json(&self, sign: Sign) -> String {
        serde_json::to_string(&self.with_sign(sign).rows()).expect("integer rows serialize")
    }

    pub fn to_csv(&self, sign: Sign) -> String {
        let mut out = String::new();
        for row in self.with_sign(sign).rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_latex(&self, sign: Sign) -> String {
        let mut out = String::from("\\begin{pmatrix}\n");
        let rows = self.with_sign(sign).rows();
        for (r, row) in rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&cells.join(" & "));
            if r + 1 < rows.len() {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{pmatrix}\n");
        out
    }
}

impl Serialize for IntersectionForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

pub fn build_form(w: &SigmaWord) -> IntersectionForm {
    IntersectionForm::build(w)
}

fn to_big_rows(m: &IntersectionForm) -> Vec<Vec<BigInt>> {
    (0..m.n).map(|i| (0..m.n).map(|j| BigInt::from(m.entry(i, j))).collect()).collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination with row swaps.
pub fn det_exact(m: &IntersectionForm) -> BigInt {
    let n = m.n;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = to_big_rows(m);
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Sylvester's criterion: every leading principal minor is positive.
///
/// Bareiss elimination without pivoting leaves the `k`-th leading minor in
/// the `k`-th pivot position, so the check stops at the first pivot `<= 0`.
pub fn is_positive_definite(m: &IntersectionForm) -> bool {
    let n = m.n;
    let mut a = to_big_rows(m);
    let mut prev = BigInt::one();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    true
}

/// Determinant of the path matrix with `weights` on the diagonal and `-1`
/// between neighbours, by the recurrence `d_j = w_j d_{j-1} - d_{j-2}`.
/// The empty chain has determinant 1.
pub fn chain_det(weights: &[i64]) -> BigInt {
    let mut before = BigInt::zero();
    let mut current = BigInt::one();
    for &w in weights {
        let next = BigInt::from(w) * &current - &before;
        before = std::mem::replace(&mut current, next);
    }
    current
}

/// Determinant of the cycle matrix with `weights` on the diagonal.
///
/// A cycle of length 1 is a vertex with a node (diagonal `w - 2`); a cycle of
/// length 2 carries a double edge (off-diagonal `-2`). Computed as
/// `trace(T_0 ... T_{m-1}) - 2` with transfer matrices `T = [[w, -1], [1, 0]]`,
/// which covers the degenerate lengths without special cases.
pub fn cycle_det(weights: &[i64]) -> BigInt {
    let mut p = [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]];
    for &w in weights {
        let w = BigInt::from(w);
        // p * [[w, -1], [1, 0]]
        let row = |r: &[BigInt; 2]| [&r[0] * &w + &r[1], -&r[0]];
        p = [row(&p[0]), row(&p[1])];
    }
    &p[0][0] + &p[1][1] - 2
}

/// Matrix of a cycle using the same conventions as [`cycle_det`].
pub fn cycle_matrix(weights: &[i64]) -> IntersectionForm {
    let m = weights.len();
    let mut rows = vec![vec![0i64; m]; m];
    for (i, &w) in weights.iter().enumerate() {
        rows[i][i] = w;
    }
    match m {
        0 => {}
        1 => rows[0][0] -= 2,
        _ => {
            for (i, j) in (0..m).map(|i| (i, (i + 1) % m)) {
                rows[i][j] -= 1;
                rows[j][i] -= 1;
            }
        }
    }
    IntersectionForm::from_rows(&rows)
}

/// Renders a sign-adjusted matrix in the requested export format.
pub fn render(m: &IntersectionForm, format: MatrixFormat, sign: Sign) -> String {
    match format {
        MatrixFormat::Json => m.to_json(sign) + "\n",
        MatrixFormat::Csv => m.to_csv(sign),
        MatrixFormat::Latex => m.to_latex(sign),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Json,
    Csv,
    Latex,
}
