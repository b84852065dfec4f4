//! Cyclic words of singular blocks `s_k = (k+2, 2, ..., 2)` and regular
//! blocks `r_m = (2, ..., 2)`.
//!
//! A [`SigmaWord`] is read cyclically: the last part is followed by the
//! first. Two regular parts may never be neighbours, and a word without
//! singular parts is exactly one regular part `r_n`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PartKind {
    Singular,
    Regular,
}

/// One block of a word. Ordering is singular-before-regular, then by length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SequencePart {
    kind: PartKind,
    length: usize,
}

impl SequencePart {
    pub fn singular(length: usize) -> Self {
        Self { kind: PartKind::Singular, length }
    }

    pub fn regular(length: usize) -> Self {
        Self { kind: PartKind::Regular, length }
    }

    pub fn kind(&self) -> PartKind {
        self.kind
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_singular(&self) -> bool {
        self.kind == PartKind::Singular
    }

    pub fn is_regular(&self) -> bool {
        self.kind == PartKind::Regular
    }

    /// The opposite self-intersections contributed by this block.
    pub fn expansion(&self) -> impl Iterator<Item = u32> {
        let head = match self.kind {
            PartKind::Singular => self.length as u32 + 2,
            PartKind::Regular => 2,
        };
        std::iter::once(head).chain(std::iter::repeat_n(2, self.length.saturating_sub(1)))
    }
}

impl fmt::Display for SequencePart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            PartKind::Singular => 's',
            PartKind::Regular => 'r',
        };
        write!(f, "{c}{}", self.length)
    }
}

impl Serialize for SequencePart {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A validated cyclic word of singular and regular parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SigmaWord {
    parts: Vec<SequencePart>,
}

impl SigmaWord {
    pub fn new(parts: Vec<SequencePart>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(index) = parts.iter().position(|p| p.length == 0) {
            return Err(Error::ZeroLength { index });
        }
        // with two or more parts this also rules out words made only of regulars
        let len = parts.len();
        for i in 0..len {
            let j = (i + 1) % len;
            if i != j && parts[i].is_regular() && parts[j].is_regular() {
                return Err(Error::AdjacentRegular { first: i, second: j });
            }
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[SequencePart] {
        &self.parts
    }

    /// `n`: the number of curves, i.e. the sum of all part lengths.
    pub fn total_length(&self) -> usize {
        self.parts.iter().map(|p| p.length).sum()
    }

    /// `N`: the number of singular parts.
    pub fn singular_count(&self) -> usize {
        self.parts.iter().filter(|p| p.is_singular()).count()
    }

    /// `rho`: the number of regular parts.
    pub fn regular_count(&self) -> usize {
        self.parts.iter().filter(|p| p.is_regular()).count()
    }

    /// Lengths `k_0, ..., k_{N-1}` of the singular parts, in word order.
    pub fn singular_lengths(&self) -> Vec<usize> {
        self.parts.iter().filter(|p| p.is_singular()).map(|p| p.length).collect()
    }

    pub fn regular_lengths(&self) -> Vec<usize> {
        self.parts.iter().filter(|p| p.is_regular()).map(|p| p.length).collect()
    }

    /// Replaces the regular lengths, in word order.
    pub fn with_regular_lengths(&self, lengths: &[usize]) -> Result<Self> {
        let rho = self.regular_count();
        if lengths.len() != rho {
            return Err(Error::Arity { expected: rho, actual: lengths.len() });
        }
        let mut it = lengths.iter();
        let parts = self
            .parts
            .iter()
            .map(|p| match p.kind {
                PartKind::Regular => SequencePart::regular(*it.next().unwrap()),
                PartKind::Singular => *p,
            })
            .collect();
        Self::new(parts)
    }

    pub fn rotate(&self, by: usize) -> Self {
        let mut parts = self.parts.clone();
        let len = parts.len();
        parts.rotate_left(by % len);
        Self { parts }
    }

    pub fn expand(&self) -> AWord {
        AWord(self.parts.iter().flat_map(SequencePart::expansion).collect())
    }

    /// Lexicographically least rotation of the part list.
    pub fn canonical(&self) -> Self {
        (0..self.parts.len())
            .map(|r| self.rotate(r))
            .min()
            .expect("words are nonempty")
    }

    pub fn is_canonical(&self) -> bool {
        (1..self.parts.len()).all(|r| self.rotate(r).parts >= self.parts)
    }

    /// Appends the parts of `other`; fails if the result is not a valid cyclic word.
    pub fn concat(&self, other: &SigmaWord) -> Result<Self> {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::new(parts)
    }

    /// Cuts the word after every regular part, after rotating the least amount
    /// needed so that it ends with one. Each factor is `s_{k_0} ... s_{k_{p-1}} r_m`.
    pub fn split_simple(&self) -> Result<Vec<SigmaWord>> {
        let last_regular = self
            .parts
            .iter()
            .rposition(SequencePart::is_regular)
            .ok_or(Error::NoRegularParts)?;
        if self.singular_count() == 0 {
            return Err(Error::NoSingularParts);
        }
        let rotated = self.rotate(last_regular + 1);
        let mut out = Vec::new();
        let mut current = Vec::new();
        for p in rotated.parts {
            current.push(p);
            if p.is_regular() {
                out.push(SigmaWord { parts: std::mem::take(&mut current) });
            }
        }
        debug_assert!(current.is_empty());
        Ok(out)
    }

    /// True for words of the form `s_{k_0} ... s_{k_{p-1}} r_m` with `p >= 1`.
    pub fn is_simple(&self) -> bool {
        let len = self.parts.len();
        len >= 2
            && self.parts[len - 1].is_regular()
            && self.parts[..len - 1].iter().all(SequencePart::is_singular)
    }

    pub fn classify(&self) -> SurfaceClass {
        let singular = self.singular_count();
        let regular = self.regular_count();
        let tag = if singular == 0 {
            ClassTag::Enoki
        } else if regular > 0 {
            ClassTag::Intermediate
        } else if singular.is_multiple_of(2) {
            ClassTag::EvenInoueHirzebruch
        } else {
            ClassTag::OddInoueHirzebruch
        };
        let cycles = if tag == ClassTag::EvenInoueHirzebruch { 2 } else { 1 };
        let branches = if tag == ClassTag::Intermediate { regular } else { 0 };
        SurfaceClass { tag, cycles, branches }
    }

    /// Sum of the a-word over one period, `2n + sum k_i`.
    pub fn sigma_n(&self) -> u64 {
        self.expand().0.iter().map(|&a| a as u64).sum()
    }
}

impl fmt::Display for SigmaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for SigmaWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for SigmaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sigma(s)
    }
}

/// Parses the block notation `s3 r2 s1` (separators: whitespace and/or a comma).
pub fn parse_sigma(text: &str) -> Result<SigmaWord> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut parts = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(Error::Empty);
    }
    loop {
        let kind = match bytes.get(pos) {
            Some(b's') => PartKind::Singular,
            Some(b'r') => PartKind::Regular,
            _ => {
                return Err(Error::Syntax { position: pos, message: "expected 's' or 'r'".into() })
            }
        };
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let digits = &text[start..pos];
        if digits.is_empty() {
            return Err(Error::Syntax { position: start, message: "expected a length".into() });
        }
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(Error::Syntax { position: start, message: "leading zero".into() });
        }
        let length: usize = digits
            .parse()
            .map_err(|_| Error::Syntax { position: start, message: "length too large".into() })?;
        parts.push(SequencePart { kind, length });

        let before_sep = pos;
        skip_ws(&mut pos);
        if bytes.get(pos) == Some(&b',') {
            pos += 1;
            skip_ws(&mut pos);
        }
        if pos == bytes.len() {
            if bytes[before_sep..].contains(&b',') {
                return Err(Error::Syntax { position: pos, message: "trailing separator".into() });
            }
            break;
        }
        if pos == before_sep {
            return Err(Error::Syntax { position: pos, message: "expected a separator".into() });
        }
    }
    SigmaWord::new(parts)
}

/// A cyclic word of opposite self-intersections `a_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AWord(Vec<u32>);

impl AWord {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(position) = entries.iter().position(|&a| a < 2) {
            return Err(Error::Inadmissible { position, message: "entries must be at least 2".into() });
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Is `other` a cyclic rotation of this word?
    pub fn is_rotation_of(&self, other: &AWord) -> bool {
        let n = self.0.len();
        n == other.0.len() && (0..n).any(|r| (0..n).all(|i| self.0[(i + r) % n] == other.0[i]))
    }

    /// Recovers the unique singular/regular partition. The result starts at
    /// the first entry greater than 2, so its expansion is a rotation of `self`.
    pub fn factor(&self) -> Result<SigmaWord> {
        factor_aword(self)
    }
}

impl fmt::Display for AWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

pub fn factor_aword(a: &AWord) -> Result<SigmaWord> {
    let entries = &a.0;
    let n = entries.len();
    let Some(start) = entries.iter().position(|&x| x > 2) else {
        return SigmaWord::new(vec![SequencePart::regular(n)]);
    };
    let mut parts = Vec::new();
    let mut offset = 0;
    while offset < n {
        let position = (start + offset) % n;
        let head = entries[position];
        if head > 2 {
            let k = (head - 2) as usize;
            if offset + k > n {
                return Err(Error::Inadmissible {
                    position,
                    message: format!("singular block of length {k} does not fit in the period"),
                });
            }
            if let Some(bad) = (1..k).find(|&j| entries[(position + j) % n] != 2) {
                return Err(Error::Inadmissible {
                    position: (position + bad) % n,
                    message: format!("entry {head} must be followed by {} twos", k - 1),
                });
            }
            parts.push(SequencePart::singular(k));
            offset += k;
        } else {
            let mut m = 0;
            while offset + m < n && entries[(start + offset + m) % n] == 2 {
                m += 1;
            }
            parts.push(SequencePart::regular(m));
            offset += m;
        }
    }
    SigmaWord::new(parts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassTag {
    Enoki,
    OddInoueHirzebruch,
    EvenInoueHirzebruch,
    Intermediate,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassTag::Enoki => "Enoki",
            ClassTag::OddInoueHirzebruch => "OddInoueHirzebruch",
            ClassTag::EvenInoueHirzebruch => "EvenInoueHirzebruch",
            ClassTag::Intermediate => "Intermediate",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceClass {
    pub tag: ClassTag,
    pub cycles: usize,
    pub branches: usize,
}
