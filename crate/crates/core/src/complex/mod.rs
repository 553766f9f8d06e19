//! The simplicial complex `Δ` whose Stanley–Reisner ideal is the
//! lexicographic initial ideal of `J_G`, for the order
//! `x_0 > … > x_{n-1} > y_0 > … > y_{n-1}`.
//!
//! Symbol sets are `u128` masks: bit `i` is `x_i`, bit `n + i` is `y_i`.

mod counts;
mod paths;
mod s2;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use counts::{f_vector, h_vector, multiplicity};
pub use paths::{admissible_initial_generators, admissible_paths, AdmissiblePath};
pub use s2::{is_s2, link, s2_report, FaceStrategy, S2Options, S2Report, S2Verdict};

use crate::error::ComplexError;
use crate::graph::{Graph, VertexSet};
use crate::ideal::{cutsets, CutsetFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    X(usize),
    Y(usize),
}

impl Symbol {
    /// Bit position in a symbol mask over `n` vertices. Larger variables in
    /// the term order sit at lower bits.
    pub fn bit(self, n: usize) -> usize {
        match self {
            Symbol::X(i) => i,
            Symbol::Y(i) => n + i,
        }
    }

    pub fn from_bit(bit: usize, n: usize) -> Symbol {
        if bit < n {
            Symbol::X(bit)
        } else {
            Symbol::Y(bit - n)
        }
    }

    pub fn parse(s: &str) -> Option<Symbol> {
        let (kind, idx) = s.split_at_checked(1)?;
        let i = idx.parse().ok()?;
        match kind {
            "x" => Some(Symbol::X(i)),
            "y" => Some(Symbol::Y(i)),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::X(i) => write!(f, "x{i}"),
            Symbol::Y(i) => write!(f, "y{i}"),
        }
    }
}

/// A squarefree monomial or a face, as a set of symbols.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct SymbolSet(pub u128);

impl SymbolSet {
    pub const EMPTY: SymbolSet = SymbolSet(0);

    pub fn from_symbols(n: usize, symbols: &[Symbol]) -> SymbolSet {
        SymbolSet(symbols.iter().fold(0u128, |m, s| m | 1u128 << s.bit(n)))
    }

    /// Parses `"x0 y2 x3"`.
    pub fn parse(n: usize, text: &str) -> Option<SymbolSet> {
        let mut m = 0u128;
        for tok in text.split_whitespace() {
            let s = Symbol::parse(tok)?;
            let (Symbol::X(i) | Symbol::Y(i)) = s;
            if i >= n {
                return None;
            }
            m |= 1u128 << s.bit(n);
        }
        Some(SymbolSet(m))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, s: Symbol, n: usize) -> bool {
        self.0 >> s.bit(n) & 1 == 1
    }

    pub fn is_subset(self, other: SymbolSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Symbols in term order, largest first.
    pub fn symbols(self, n: usize) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.len());
        let mut m = self.0;
        while m != 0 {
            out.push(Symbol::from_bit(m.trailing_zeros() as usize, n));
            m &= m - 1;
        }
        out
    }

    /// Vertices `i` with `x_i` in the set.
    pub fn x_support(self, n: usize) -> VertexSet {
        VertexSet((self.0 & low_mask(n)) as u64)
    }

    /// Vertices `i` with `y_i` in the set.
    pub fn y_support(self, n: usize) -> VertexSet {
        VertexSet((self.0 >> n & low_mask(n)) as u64)
    }

    pub fn display(self, n: usize) -> String {
        self.symbols(n)
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Orders symbol sets the way their text lines sort: symbol by symbol in
/// term order, a proper prefix first.
fn text_order(a: SymbolSet, b: SymbolSet) -> std::cmp::Ordering {
    let (mut x, mut y) = (a.0, b.0);
    loop {
        match (x == 0, y == 0) {
            (true, true) => return std::cmp::Ordering::Equal,
            (true, false) => return std::cmp::Ordering::Less,
            (false, true) => return std::cmp::Ordering::Greater,
            _ => {}
        }
        let (bx, by) = (x.trailing_zeros(), y.trailing_zeros());
        if bx != by {
            return bx.cmp(&by);
        }
        x &= x - 1;
        y &= y - 1;
    }
}

fn write_lines(n: usize, sets: &[SymbolSet]) -> String {
    let mut sorted = sets.to_vec();
    sorted.sort_by(|a, b| text_order(*a, *b));
    let mut out = String::new();
    for s in sorted {
        out.push_str(&s.display(n));
        out.push('\n');
    }
    out
}

fn read_lines(n: usize, text: &str) -> Result<Vec<SymbolSet>, ComplexError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| SymbolSet::parse(n, l).ok_or_else(|| ComplexError::Parse(l.to_owned())))
        .collect()
}

/// Facets of a simplicial complex on the `2n` symbols: pairwise
/// incomparable, sorted by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetComplex {
    pub n: usize,
    pub facets: Vec<SymbolSet>,
}

impl FacetComplex {
    /// Keeps the inclusion-maximal sets, deduplicated and sorted.
    pub fn from_sets(n: usize, mut sets: Vec<SymbolSet>) -> FacetComplex {
        sets.sort_unstable_by_key(|s| std::cmp::Reverse((s.len(), s.0)));
        sets.dedup();
        let mut kept: Vec<SymbolSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !kept.iter().any(|k| k.len() > s.len() && s.is_subset(*k)) {
                kept.push(s);
            }
        }
        kept.sort_unstable();
        FacetComplex { n, facets: kept }
    }

    pub fn is_face(&self, f: SymbolSet) -> bool {
        self.facets.iter().any(|&k| f.is_subset(k))
    }

    /// Largest facet size `d` (so `dim = d - 1`).
    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.max_facet_size();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// Every face, each once, in no particular order.
    pub fn faces(&self) -> Vec<SymbolSet> {
        let mut seen: HashSet<u128> = HashSet::new();
        for &facet in &self.facets {
            let mut sub = facet.0;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet.0;
            }
        }
        seen.into_iter().map(SymbolSet).collect()
    }

    pub fn to_text(&self) -> String {
        write_lines(self.n, &self.facets)
    }

    pub fn from_text(n: usize, text: &str) -> Result<FacetComplex, ComplexError> {
        Ok(FacetComplex::from_sets(n, read_lines(n, text)?))
    }
}

/// An antichain of squarefree monomials, sorted by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSet {
    pub n: usize,
    pub monomials: Vec<SymbolSet>,
}

impl MonomialSet {
    /// Keeps the inclusion-minimal supports, deduplicated and sorted.
    pub fn minimal(n: usize, mut sets: Vec<SymbolSet>) -> MonomialSet {
        sets.sort_unstable_by_key(|s| (s.len(), s.0));
        sets.dedup();
        let mut kept: Vec<SymbolSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !kept.iter().any(|k| k.is_subset(s)) {
                kept.push(s);
            }
        }
        kept.sort_unstable();
        MonomialSet { n, monomials: kept }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn to_text(&self) -> String {
        write_lines(self.n, &self.monomials)
    }

    pub fn from_text(n: usize, text: &str) -> Result<MonomialSet, ComplexError> {
        Ok(MonomialSet::minimal(n, read_lines(n, text)?))
    }
}

/// The facets `F(T, v)` over all cutsets `T` and all choices of one vertex
/// `v_k` per component `G_k` of `G \ T`:
/// `F(T, v) = ∪_k {y_j : j ∈ G_k, j ≤ v_k} ∪ {x_j : j ∈ G_k, j ≥ v_k}`.
pub fn delta_facets(g: &Graph, cuts: &CutsetFamily) -> FacetComplex {
    let n = g.n();
    let mut all = Vec::new();
    for cut in cuts.iter() {
        let choices: Vec<Vec<u128>> = cut
            .parts
            .iter()
            .map(|part| part.iter().map(|v| component_face(part, v, n)).collect())
            .collect();
        let expected = n - cut.set.len() + cut.c();
        let mut idx = vec![0usize; choices.len()];
        loop {
            let face: u128 = idx
                .iter()
                .zip(&choices)
                .fold(0, |m, (&i, opts)| m | opts[i]);
            assert_eq!(
                face.count_ones() as usize,
                expected,
                "facet size for cutset {}",
                cut.set
            );
            all.push(SymbolSet(face));
            // odometer over the product of components
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    FacetComplex::from_sets(n, all)
}

/// `{y_j : j ∈ part, j ≤ v} ∪ {x_j : j ∈ part, j ≥ v}`.
fn component_face(part: VertexSet, v: usize, n: usize) -> u128 {
    let upto = if v >= 63 {
        u64::MAX
    } else {
        (1u64 << (v + 1)) - 1
    };
    let ys = part.0 & upto;
    let xs = part.0 & !(upto >> 1);
    (xs as u128) | (ys as u128) << n
}

/// `Δ` for `g`, from its cutsets.
pub fn initial_complex(g: &Graph) -> FacetComplex {
    delta_facets(g, &cutsets(g))
}

/// Inclusion-minimal nonfaces, grown level by level: a set of size `k + 1`
/// is a candidate only when all of its `k`-subsets are faces.
pub fn minimal_nonfaces(c: &FacetComplex) -> MonomialSet {
    let width = 2 * c.n;
    let mut level: Vec<u128> = vec![0];
    let mut nonfaces = Vec::new();
    while !level.is_empty() {
        let faces: HashSet<u128> = level.iter().copied().collect();
        let mut next = Vec::new();
        for &f in &level {
            let start = if f == 0 {
                0
            } else {
                128 - f.leading_zeros() as usize
            };
            for b in start..width {
                let cand = f | 1u128 << b;
                let mut rest = f;
                let mut all_faces = true;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    if !faces.contains(&(cand & !low)) {
                        all_faces = false;
                        break;
                    }
                    rest &= rest - 1;
                }
                if !all_faces {
                    continue;
                }
                if c.is_face(SymbolSet(cand)) {
                    next.push(cand);
                } else {
                    nonfaces.push(SymbolSet(cand));
                }
            }
        }
        level = next;
    }
    MonomialSet::minimal(c.n, nonfaces)
}
