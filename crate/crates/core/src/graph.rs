//! Weighted dual graphs: one or two cycles, plus branch chains in the
//! intermediate case.
//!
//! Weights are opposite self-intersections. A cycle of length 1 is a curve
//! with a node and a cycle of length 2 has a double edge; see
//! [`cycle_det`](crate::form::cycle_det).

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::form::{chain_det, cycle_det, IntersectionForm};
use crate::sequence::{ClassTag, SequencePart, SigmaWord, SurfaceClass};

/// A chain hanging off the cycle. `weights` run from the top (free end) down
/// to the vertex that meets the cycle at position `root` of the first cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub weights: Vec<i64>,
    pub root: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub cycles: Vec<Vec<i64>>,
    pub branches: Vec<Branch>,
    #[serde(skip)]
    pub class: SurfaceClass,
}

/// Branch and cycle piece for one block `r_l s_{k_1} ... s_{k_p}`.
///
/// Odd-numbered singular lengths contribute a run of `k - 1` twos to the
/// branch and a heavy vertex `k + 2` to the cycle; even-numbered ones the
/// other way round. The trailing 2 (the first curve of the next regular
/// block) lands on the branch when `p` is odd and on the cycle when `p` is even.
fn block_piece(regular: usize, singular: &[usize]) -> (Vec<i64>, Vec<i64>) {
    let mut branch = Vec::new();
    let mut cycle = vec![2; regular - 1];
    for (idx, &k) in singular.iter().enumerate() {
        let heavy = k as i64 + 2;
        let twos = std::iter::repeat_n(2, k - 1);
        if idx % 2 == 0 {
            branch.extend(twos);
            cycle.push(heavy);
        } else {
            branch.push(heavy);
            cycle.extend(twos);
        }
    }
    if singular.len() % 2 == 1 {
        branch.push(2);
    } else {
        cycle.push(2);
    }
    (branch, cycle)
}

/// Alternating heavy vertices and runs of twos over the singular lengths,
/// starting with a heavy vertex when `heavy_first`.
fn alternating(lengths: &[usize], heavy_first: bool) -> Vec<i64> {
    let mut out = Vec::new();
    for (idx, &k) in lengths.iter().enumerate() {
        if (idx % 2 == 0) == heavy_first {
            out.push(k as i64 + 2);
        } else {
            out.extend(std::iter::repeat_n(2, k - 1));
        }
    }
    out
}

pub fn build_dual_graph(w: &SigmaWord) -> DualGraph {
    let class = w.classify();
    let (cycles, branches) = match class.tag {
        ClassTag::Enoki => (vec![vec![2; w.total_length()]], Vec::new()),
        ClassTag::EvenInoueHirzebruch => {
            let k = w.singular_lengths();
            (vec![alternating(&k, true), alternating(&k, false)], Vec::new())
        }
        ClassTag::OddInoueHirzebruch => {
            let k = w.singular_lengths();
            let mut cycle = alternating(&k, true);
            cycle.extend(alternating(&k, false));
            (vec![cycle], Vec::new())
        }
        ClassTag::Intermediate => intermediate(w),
    };
    DualGraph { cycles, branches, class }
}

fn intermediate(w: &SigmaWord) -> (Vec<Vec<i64>>, Vec<Branch>) {
    let canonical = w.canonical();
    let first_regular = canonical.parts().iter().position(SequencePart::is_regular).expect("intermediate");
    let rotated = canonical.rotate(first_regular);

    let mut blocks: Vec<(usize, Vec<usize>)> = Vec::new();
    for p in rotated.parts() {
        if p.is_regular() {
            blocks.push((p.length(), Vec::new()));
        } else {
            blocks.last_mut().expect("starts with a regular part").1.push(p.length());
        }
    }

    let mut cycle = Vec::new();
    let mut starts = Vec::with_capacity(blocks.len());
    let mut tops = Vec::with_capacity(blocks.len());
    for (regular, singular) in &blocks {
        let (branch, piece) = block_piece(*regular, singular);
        starts.push(cycle.len());
        cycle.extend(piece);
        tops.push(branch);
    }
    let rho = blocks.len();
    let branches = tops
        .into_iter()
        .enumerate()
        .map(|(s, weights)| Branch { weights, root: starts[(s + 1) % rho] })
        .collect();
    (vec![cycle], branches)
}

impl DualGraph {
    pub fn vertex_count(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum::<usize>() + self.branches.iter().map(|b| b.weights.len()).sum::<usize>()
    }

    /// All vertex weights, cycles first, then branches.
    pub fn weights(&self) -> Vec<i64> {
        self.cycles.iter().flatten().chain(self.branches.iter().flat_map(|b| &b.weights)).copied().collect()
    }

    /// Intersection form of the graph (positive convention), vertices ordered
    /// as in [`DualGraph::weights`].
    pub fn to_form(&self) -> IntersectionForm {
        let n = self.vertex_count();
        let mut rows = vec![vec![0i64; n]; n];
        let link = |rows: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            if i == j {
                rows[i][i] -= 2;
            } else {
                rows[i][j] -= 1;
                rows[j][i] -= 1;
            }
        };
        let mut offset = 0;
        let mut cycle_offsets = Vec::new();
        for cycle in &self.cycles {
            cycle_offsets.push(offset);
            let m = cycle.len();
            for (i, &wt) in cycle.iter().enumerate() {
                rows[offset + i][offset + i] = wt;
            }
            match m {
                1 => link(&mut rows, offset, offset),
                2 => {
                    link(&mut rows, offset, offset + 1);
                    link(&mut rows, offset + 1, offset);
                }
                _ => (0..m).for_each(|i| link(&mut rows, offset + i, offset + (i + 1) % m)),
            }
            offset += m;
        }
        for b in &self.branches {
            let m = b.weights.len();
            for (i, &wt) in b.weights.iter().enumerate() {
                rows[offset + i][offset + i] = wt;
            }
            for i in 1..m {
                link(&mut rows, offset + i - 1, offset + i);
            }
            link(&mut rows, offset + m - 1, cycle_offsets[0] + b.root);
            offset += m;
        }
        IntersectionForm::from_rows(&rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

pub fn branch_determinants(g: &DualGraph) -> Vec<BigInt> {
    g.branches.iter().map(|b| chain_det(&b.weights)).collect()
}

pub fn cycle_determinants(g: &DualGraph) -> Vec<BigInt> {
    g.cycles.iter().map(|c| cycle_det(c)).collect()
}

/// Graphviz text. Cycle edges are undirected; branch edges point down towards
/// the cycle vertex they attach to.
pub fn to_dot(g: &DualGraph) -> String {
    let mut out = String::new();
    out.push_str("digraph dual_graph {\n");
    out.push_str("  node [shape=circle];\n");
    for (c, cycle) in g.cycles.iter().enumerate() {
        for (i, wt) in cycle.iter().enumerate() {
            let _ = writeln!(out, "  c{c}_{i} [label=\"{wt}\"];");
        }
        let m = cycle.len();
        let edges: Vec<(usize, usize)> = match m {
            1 => vec![(0, 0)],
            2 => vec![(0, 1), (1, 0)],
            _ => (0..m).map(|i| (i, (i + 1) % m)).collect(),
        };
        for (i, j) in edges {
            let _ = writeln!(out, "  c{c}_{i} -> c{c}_{j} [dir=none];");
        }
    }
    for (b, branch) in g.branches.iter().enumerate() {
        for (i, wt) in branch.weights.iter().enumerate() {
            let _ = writeln!(out, "  b{b}_{i} [label=\"{wt}\", shape=box];");
        }
        for i in 1..branch.weights.len() {
            let _ = writeln!(out, "  b{b}_{} -> b{b}_{i};", i - 1);
        }
        let _ = writeln!(out, "  b{b}_{} -> c0_{};", branch.weights.len() - 1, branch.root);
    }
    out.push_str("}\n");
    out
}
