//! Cross-checks between the matrix path (jump edges, exact determinant) and
//! the tiling path (mark set, allowed subsets, evaluation), plus the word
//! enumerator and the atlas built on top of them.

use std::collections::BTreeMap;
use std::io::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::form::build_form;
use crate::graph::{branch_determinants, build_dual_graph, cycle_determinants};
use crate::sequence::{ClassTag, SequencePart, SigmaWord};
use crate::tiling::{self, mark_set, poly, singular_values};

fn big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    let n: serde_json::Number = v.to_string().parse().expect("decimal integers parse");
    n.serialize(s)
}

fn big_opt<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => big(v, s),
        None => s.serialize_none(),
    }
}

fn big_vec<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    let nums: Vec<serde_json::Number> = v.iter().map(|x| x.to_string().parse().expect("decimal")).collect();
    nums.serialize(s)
}

/// Everything computed for one word, with the outcome of each identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub word: SigmaWord,
    pub n: usize,
    #[serde(rename = "N")]
    pub singular: usize,
    pub rho: usize,
    pub sigma_n: u64,
    pub class: ClassTag,
    #[serde(serialize_with = "big")]
    pub det: BigInt,
    #[serde(serialize_with = "big_opt")]
    pub index: Option<BigInt>,
    #[serde(serialize_with = "big_opt")]
    pub delta: Option<BigInt>,
    #[serde(serialize_with = "big_vec")]
    pub branch_dets: Vec<BigInt>,
    #[serde(serialize_with = "big_vec")]
    pub cycle_dets: Vec<BigInt>,
    pub poly: Option<String>,
    pub checks: BTreeMap<String, bool>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, &ok)| !ok).map(|(k, _)| k.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn to_text(&self) -> String {
        let opt = |v: &Option<BigInt>| v.as_ref().map_or_else(|| "-".to_string(), BigInt::to_string);
        let list = |v: &[BigInt]| v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", ");
        let mut out = String::new();
        out.push_str(&format!("word:        {}\n", self.word));
        out.push_str(&format!("n, N, rho:   {}, {}, {}\n", self.n, self.singular, self.rho));
        out.push_str(&format!("sigma_n:     {}\n", self.sigma_n));
        out.push_str(&format!("class:       {}\n", self.class));
        out.push_str(&format!("det:         {}\n", self.det));
        out.push_str(&format!("index:       {}\n", opt(&self.index)));
        out.push_str(&format!("delta:       {}\n", opt(&self.delta)));
        out.push_str(&format!("branch dets: [{}]\n", list(&self.branch_dets)));
        out.push_str(&format!("cycle dets:  [{}]\n", list(&self.cycle_dets)));
        out.push_str(&format!("polynomial:  {}\n", self.poly.as_deref().unwrap_or("-")));
        for (name, ok) in &self.checks {
            out.push_str(&format!("check {name}: {}\n", if *ok { "ok" } else { "FAILED" }));
        }
        out
    }
}

/// `det M(sigma)` by exact elimination.
pub fn discriminant(w: &SigmaWord) -> BigInt {
    build_form(w).determinant()
}

/// `P_{A(w)}(k_0, ..., k_{N-1})`, computed on the tiling side only.
pub fn lattice_index(w: &SigmaWord) -> Result<BigInt> {
    let a = mark_set(w)?;
    poly(&a).eval(&singular_values(w))
}

/// Product of the branch determinants of the dual graph.
pub fn twisting_coefficient(w: &SigmaWord) -> Result<BigInt> {
    let class = w.classify();
    if class.tag != ClassTag::Intermediate {
        return Err(Error::NotIntermediate { class: class.tag.to_string() });
    }
    Ok(branch_determinants(&build_dual_graph(w)).into_iter().product())
}

/// Computes the invariants of `w` along independent paths and records every
/// identity that should relate them. Words without singular parts get the
/// checks that apply to them (vanishing determinant, indefinite form).
pub fn verify_main_theorem(w: &SigmaWord) -> InvariantReport {
    verify_with_fault(w, false)
}

pub(crate) fn verify_with_fault(w: &SigmaWord, inject_fault: bool) -> InvariantReport {
    let word = w.canonical();
    let class = word.classify();
    let form = build_form(&word);
    let mut det = form.determinant();
    if inject_fault {
        det = -det;
    }
    let graph = build_dual_graph(&word);
    let branch_dets = branch_determinants(&graph);
    let cycle_dets = cycle_determinants(&graph);
    let mut checks = BTreeMap::new();
    let mut check = |name: &str, ok: bool| {
        checks.insert(name.to_string(), ok);
    };

    check("positive_definite", form.is_positive_definite() == (class.tag != ClassTag::Enoki));
    check("graph_determinant", graph.to_form().determinant() == det);
    check("vertex_count", graph.vertex_count() == word.total_length());

    let (index, delta, poly_text) = match mark_set(&word) {
        Ok(a) => {
            let p = poly(&a);
            let index = p.eval(&singular_values(&word)).expect("one value per singular part");
            let delta = &index + 1;
            check("det_is_index_squared", det == &index * &index);
            check("index_positive", index.is_positive());
            (Some(index), Some(delta), Some(p.to_string()))
        }
        Err(_) => {
            check("det_is_zero", det.is_zero());
            (None, None, None)
        }
    };

    match class.tag {
        ClassTag::Intermediate => {
            let product: BigInt = branch_dets.iter().product();
            let delta = delta.as_ref().expect("intermediate words have singular parts");
            check("branch_product_is_delta", &product == delta);
            check("twisting_at_least_two", product >= BigInt::from(2));
            check("branch_count_is_rho", branch_dets.len() == word.regular_count());
            let factors = word.split_simple().expect("intermediate words have regular parts");
            let factor_product = factors
                .iter()
                .map(|f| tiling::delta(f).expect("simple words have singular parts"))
                .fold(BigInt::one(), |acc, d| acc * d);
            check("delta_multiplicative", &factor_product == delta);
        }
        ClassTag::EvenInoueHirzebruch => {
            let index = index.as_ref().expect("IH words have singular parts");
            check("cycle_dets_equal", cycle_dets[0] == cycle_dets[1]);
            check("cycle_product_is_det", &cycle_dets[0] * &cycle_dets[1] == det);
            check("cycle_det_is_index", &cycle_dets[0] == index);
        }
        ClassTag::OddInoueHirzebruch | ClassTag::Enoki => {}
    }

    InvariantReport {
        n: word.total_length(),
        singular: word.singular_count(),
        rho: word.regular_count(),
        sigma_n: word.sigma_n(),
        class: class.tag,
        det,
        index,
        delta,
        branch_dets,
        cycle_dets,
        poly: poly_text,
        checks,
        word,
    }
}

/// Is the discriminant unchanged when the regular lengths are replaced?
pub fn verify_reduction(w: &SigmaWord, alt_lengths: &[usize]) -> Result<bool> {
    if w.regular_count() == 0 {
        return Err(Error::NoRegularParts);
    }
    let other = w.with_regular_lengths(alt_lengths)?;
    Ok(discriminant(w) == discriminant(&other))
}

/// Every valid word with `n <= max_n`, once per rotation class, as its
/// canonical representative. Ordered by `n`, then by part list.
pub fn enumerate_words(max_n: usize) -> impl Iterator<Item = SigmaWord> {
    (1..=max_n).flat_map(words_of_length)
}

fn words_of_length(n: usize) -> Vec<SigmaWord> {
    let mut out = vec![SigmaWord::new(vec![SequencePart::regular(n)]).expect("r_n is valid")];
    let mut stack = Vec::new();
    // canonical words with a singular part start with one
    extend_words(n, &mut stack, &mut out);
    out.sort();
    out
}

fn extend_words(remaining: usize, parts: &mut Vec<SequencePart>, out: &mut Vec<SigmaWord>) {
    if remaining == 0 {
        if let Ok(w) = SigmaWord::new(parts.clone()) {
            if w.is_canonical() {
                out.push(w);
            }
        }
        return;
    }
    let last_regular = parts.last().is_some_and(SequencePart::is_regular);
    for length in 1..=remaining {
        parts.push(SequencePart::singular(length));
        extend_words(remaining - length, parts, out);
        parts.pop();
        if !parts.is_empty() && !last_regular {
            parts.push(SequencePart::regular(length));
            extend_words(remaining - length, parts, out);
            parts.pop();
        }
    }
}

/// Outcome of an exhaustive verification run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifySummary {
    pub words: usize,
    pub reductions: usize,
    /// Failing words (canonical form) with the names of the failed checks, sorted by word.
    pub failures: Vec<(SigmaWord, Vec<String>)>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs [`verify_main_theorem`] on every enumerated word, plus a reduction
/// check that swaps the regular lengths for `1, 2, ...` cyclically.
pub fn verify_all(max_n: usize) -> VerifySummary {
    verify_all_with_fault(max_n, false)
}

pub(crate) fn verify_all_with_fault(max_n: usize, inject_fault: bool) -> VerifySummary {
    let words: Vec<SigmaWord> = enumerate_words(max_n).collect();
    let results: Vec<(SigmaWord, Vec<String>, bool)> = words
        .par_iter()
        .map(|w| {
            let report = verify_with_fault(w, inject_fault);
            let mut failed: Vec<String> = report.failed_checks().into_iter().map(str::to_string).collect();
            let reduced = w.regular_count() > 0 && w.singular_count() > 0;
            if reduced {
                let alt: Vec<usize> = (0..w.regular_count()).map(|i| 1 + i % 3).collect();
                if !verify_reduction(w, &alt).expect("arity matches") {
                    failed.push("reduction".to_string());
                }
            }
            (w.clone(), failed, reduced)
        })
        .collect();
    let mut summary = VerifySummary { words: results.len(), ..Default::default() };
    for (w, failed, reduced) in results {
        summary.reductions += usize::from(reduced);
        if !failed.is_empty() {
            summary.failures.push((w, failed));
        }
    }
    summary.failures.sort();
    summary
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtlasFormat {
    Csv,
    JsonLines,
}

pub const ATLAS_HEADER: [&str; 11] =
    ["word", "n", "N", "rho", "sigma_n", "class", "det", "index", "delta", "branch_dets", "poly"];

/// Writes one row per canonical word with `n <= max_n`.
pub fn atlas<W: Write>(max_n: usize, format: AtlasFormat, out: W) -> Result<()> {
    let reports: Vec<InvariantReport> =
        enumerate_words(max_n).collect::<Vec<_>>().par_iter().map(verify_main_theorem).collect();
    match format {
        AtlasFormat::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(ATLAS_HEADER).map_err(csv_error)?;
            for r in &reports {
                let opt = |v: &Option<BigInt>| v.as_ref().map_or_else(String::new, BigInt::to_string);
                let dets = r.branch_dets.iter().map(BigInt::to_string).collect::<Vec<_>>().join(";");
                writer
                    .write_record([
                        r.word.to_string(),
                        r.n.to_string(),
                        r.singular.to_string(),
                        r.rho.to_string(),
                        r.sigma_n.to_string(),
                        r.class.to_string(),
                        r.det.to_string(),
                        opt(&r.index),
                        opt(&r.delta),
                        dets,
                        r.poly.clone().unwrap_or_default(),
                    ])
                    .map_err(csv_error)?;
            }
            writer.flush()?;
        }
        AtlasFormat::JsonLines => {
            #[derive(Serialize)]
            struct Row<'a> {
                word: &'a SigmaWord,
                n: usize,
                #[serde(rename = "N")]
                singular: usize,
                rho: usize,
                sigma_n: u64,
                class: ClassTag,
                #[serde(serialize_with = "big")]
                det: &'a BigInt,
                #[serde(serialize_with = "big_opt")]
                index: &'a Option<BigInt>,
                #[serde(serialize_with = "big_opt")]
                delta: &'a Option<BigInt>,
                #[serde(serialize_with = "big_vec")]
                branch_dets: &'a [BigInt],
                poly: &'a Option<String>,
            }
            let mut out = out;
            for r in &reports {
                let row = Row {
                    word: &r.word,
                    n: r.n,
                    singular: r.singular,
                    rho: r.rho,
                    sigma_n: r.sigma_n,
                    class: r.class,
                    det: &r.det,
                    index: &r.index,
                    delta: &r.delta,
                    branch_dets: &r.branch_dets,
                    poly: &r.poly,
                };
                serde_json::to_writer(&mut out, &row).map_err(|e| Error::Io(e.to_string()))?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}
