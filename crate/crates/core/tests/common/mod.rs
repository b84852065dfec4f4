//! Brute-force references used by the integration tests. None of these call
//! into the elimination or tiling code they are compared against.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use gss_core::{PartKind, SequencePart, SigmaWord};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns already used. Exponential, fine up to about 16.
pub fn cofactor_det(rows: &[Vec<i64>]) -> BigInt {
    fn go(rows: &[Vec<i64>], row: usize, used: u32, memo: &mut HashMap<u32, BigInt>) -> BigInt {
        let n = rows.len();
        if row == n {
            return BigInt::from(1);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut total = BigInt::from(0);
        let mut sign = 1i64;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            let entry = rows[row][col];
            if entry != 0 {
                total += go(rows, row + 1, used | (1 << col), memo) * (sign * entry);
            }
            sign = -sign;
        }
        memo.insert(used, total.clone());
        total
    }
    go(rows, 0, 0, &mut HashMap::new())
}

/// All leading principal minors positive (Sylvester), each by cofactor expansion.
pub fn sylvester_positive(rows: &[Vec<i64>]) -> bool {
    (1..=rows.len()).all(|k| {
        let minor: Vec<Vec<i64>> = rows[..k].iter().map(|r| r[..k].to_vec()).collect();
        cofactor_det(&minor) > BigInt::from(0)
    })
}

/// The matrix straight from the a-word: index i is joined to i + a_i - 1.
pub fn naive_form(a: &[u32]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] += a[i] as i64;
        let j = (i + a[i] as usize - 1) % n;
        if i == j {
            m[i][i] -= 2;
        } else {
            m[i][j] -= 1;
            m[j][i] -= 1;
        }
    }
    m
}

/// Generating blocks written out as sorted index lists.
fn generating_blocks(n: usize, marks: &BTreeSet<usize>) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for &a in marks {
        out.insert(vec![a]);
    }
    if n >= 3 {
        for k in 0..n {
            if !marks.contains(&k) {
                let mut pair = vec![k, (k + 1) % n];
                pair.sort();
                out.insert(pair);
            }
        }
    }
    out
}

/// Does `b` split into generating blocks? Tries every set partition of `b`:
/// the smallest remaining element goes into a block with any subset of the rest.
pub fn oracle_allowed(n: usize, marks: &BTreeSet<usize>, b: &BTreeSet<usize>) -> bool {
    if b.len() == n {
        return false;
    }
    let blocks = generating_blocks(n, marks);
    fn partition(rest: &[usize], blocks: &BTreeSet<Vec<usize>>) -> bool {
        let Some((&first, others)) = rest.split_first() else {
            return true;
        };
        for mask in 0u32..(1 << others.len()) {
            let mut block = vec![first];
            let mut remaining = Vec::new();
            for (i, &x) in others.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    block.push(x);
                } else {
                    remaining.push(x);
                }
            }
            block.sort();
            if blocks.contains(&block) && partition(&remaining, blocks) {
                return true;
            }
        }
        false
    }
    let elems: Vec<usize> = b.iter().copied().collect();
    partition(&elems, &blocks)
}

/// Polynomial value as a sum over oracle-allowed subsets.
pub fn oracle_poly_value(n: usize, marks: &BTreeSet<usize>, k: &[i64]) -> BigInt {
    let mut total = BigInt::from(0);
    for bits in 0u32..(1 << n) {
        let b: BTreeSet<usize> = (0..n).filter(|i| bits & (1 << i) != 0).collect();
        if oracle_allowed(n, marks, &b) {
            let mut term = BigInt::from(1);
            for (i, &v) in k.iter().enumerate() {
                if !b.contains(&i) {
                    term *= v;
                }
            }
            total += term;
        }
    }
    total
}

pub fn set_of_bits(bits: u32, n: usize) -> BTreeSet<usize> {
    (0..n).filter(|i| bits & (1 << i) != 0).collect()
}

/// Canonical words of total length `n` found by listing every cyclic part
/// sequence and keeping the smallest rotation, without the library enumerator.
pub fn brute_force_words(n: usize) -> BTreeSet<String> {
    fn extend(parts: &mut Vec<(bool, usize)>, left: usize, out: &mut BTreeSet<String>) {
        if left == 0 {
            let len = parts.len();
            let regular = |i: usize| parts[i % len].0;
            let valid = if len == 1 {
                true
            } else {
                (0..len).all(|i| !(regular(i) && regular(i + 1)))
            };
            if valid {
                let rotations = (0..len).map(|r| {
                    (0..len).map(|i| parts[(i + r) % len]).collect::<Vec<_>>()
                });
                let best = rotations
                    .min_by_key(|p| p.iter().map(|&(reg, l)| (reg, l)).collect::<Vec<_>>())
                    .expect("nonempty");
                let text: Vec<String> = best
                    .iter()
                    .map(|&(reg, l)| format!("{}{l}", if reg { 'r' } else { 's' }))
                    .collect();
                out.insert(text.join(" "));
            }
            return;
        }
        for l in 1..=left {
            for reg in [false, true] {
                parts.push((reg, l));
                extend(parts, left - l, out);
                parts.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    extend(&mut Vec::new(), n, &mut out);
    out
}

fn assemble(raw: Vec<(bool, usize)>) -> SigmaWord {
    let mut parts: Vec<SequencePart> = Vec::new();
    for (regular, len) in raw {
        let prev_regular = parts.last().is_some_and(|p| p.kind() == PartKind::Regular);
        if regular && prev_regular {
            continue;
        }
        parts.push(if regular { SequencePart::regular(len) } else { SequencePart::singular(len) });
    }
    while parts.len() > 1 && parts[0].is_regular() && parts[parts.len() - 1].is_regular() {
        parts.pop();
    }
    SigmaWord::new(parts).expect("assembled word is valid")
}

/// Any valid word, including pure `r_n`.
pub fn any_word(max_parts: usize, max_len: usize) -> impl Strategy<Value = SigmaWord> {
    prop::collection::vec((any::<bool>(), 1..=max_len), 1..=max_parts).prop_map(assemble)
}

/// Words with at least one singular part.
pub fn singular_word(max_parts: usize, max_len: usize) -> impl Strategy<Value = SigmaWord> {
    ((1..=max_len), prop::collection::vec((any::<bool>(), 1..=max_len), 0..max_parts)).prop_map(|(k, rest)| {
        let mut raw = vec![(false, k)];
        raw.extend(rest);
        assemble(raw)
    })
}

/// `s_{k_0} ... s_{k_{N-1}} r_m`.
pub fn simple_word(max_singular: usize, max_len: usize) -> impl Strategy<Value = SigmaWord> {
    (prop::collection::vec(1..=max_len, 1..=max_singular), 1..=max_len).prop_map(|(ks, m)| {
        let mut parts: Vec<SequencePart> = ks.into_iter().map(SequencePart::singular).collect();
        parts.push(SequencePart::regular(m));
        SigmaWord::new(parts).expect("simple word")
    })
}
