//! Permutations of `{1, …, n}` and their three interchangeable
//! representations: image tables, words in the adjacent transpositions
//! `τ_1, …, τ_{n-1}`, and cycle lists.
//!
//! # Conventions
//!
//! Everything in this crate composes **right to left**:
//!
//! * A generator word `w = w_1 w_2 … w_k` denotes `τ_{w_1} ∘ τ_{w_2} ∘ … ∘
//!   τ_{w_k}`, so the **rightmost** letter acts first.
//! * A cycle list denotes the product of its cycles with the rightmost
//!   cycle applied first. Cycle lists need not be disjoint.
//! * A cycle `(i_1 i_2 … i_k)` maps `i_1 ↦ i_2 ↦ … ↦ i_k ↦ i_1`.
//! * [`Permutation::compose`]`(p, q)` is `p ∘ q`: `q` acts first.
//!
//! Points are 1-based throughout; the degree `n` is always explicit.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ops;

/// A permutation of `{1, …, n}` stored as an image table:
/// `images[i - 1] = σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation of degree `n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Build a permutation from its image table (`images[i - 1] = σ(i)`).
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] if the table is not a bijection on
    /// `{1, …, n}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidInput(format!(
                    "image {v} out of range for degree {n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidInput(format!("image {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Degree `n` of the symmetric group this permutation lives in.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of point `i` (1-based).
    ///
    /// # Panics
    ///
    /// Panics if `i` is `0` or exceeds the degree.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// The image table `[σ(1), …, σ(n)]`.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Compose `self ∘ other`: `other` acts first.
    ///
    /// # Panics
    ///
    /// Panics if the degrees differ.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composition requires equal degrees"
        );
        ops::bump(self.degree() as u64);
        Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    /// The inverse permutation.
    pub fn invert(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        ops::bump(self.degree() as u64);
        Permutation { images }
    }

    /// `true` if the permutation is even (a product of an even number of
    /// transpositions).
    pub fn is_even(&self) -> bool {
        // Parity = (-1)^(n - number of cycles), counted over all cycles
        // including fixed points.
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i - 1] {
                seen[i - 1] = true;
                i = self.apply(i);
            }
        }
        (n - cycles).is_multiple_of(2)
    }

    /// `true` if the permutation is a single cycle through all `n` points.
    pub fn is_n_cycle(&self) -> bool {
        let n = self.degree();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut j = 1;
        let mut len = 0;
        while !seen[j - 1] {
            seen[j - 1] = true;
            len += 1;
            j = self.apply(j);
        }
        len == n
    }
}

impl fmt::Display for Permutation {
    /// Renders the disjoint cycle form with fixed points elided, e.g.
    /// `(1 2 3)(4 5)`; the identity renders as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dec = cycle_decomposition(self);
        let mut wrote = false;
        for cycle in dec.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            for (k, v) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

/// A word in the adjacent transpositions `τ_1, …, τ_{n-1}` of `S_n`.
///
/// Letters are the subscripts (`1 ≤ letter ≤ n-1`). The empty word denotes
/// the identity and prints as `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GenWord {
    degree: usize,
    letters: Vec<usize>,
}

impl GenWord {
    /// Build a word over the generators of `S_degree`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] if any letter falls outside
    /// `1..=degree-1`.
    pub fn new(degree: usize, letters: Vec<usize>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l + 1 > degree {
                return Err(Error::InvalidInput(format!(
                    "letter {l} out of range for degree {degree}"
                )));
            }
        }
        Ok(GenWord { degree, letters })
    }

    /// The empty word (identity) of the given degree.
    pub fn empty(degree: usize) -> Self {
        GenWord {
            degree,
            letters: Vec::new(),
        }
    }

    /// Degree of the ambient symmetric group.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The letters, leftmost first. The rightmost letter acts first.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Word length.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// `true` for the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The reversed word. Because each generator is an involution, the
    /// reversal of a word is a word for the inverse permutation.
    pub fn reverse(&self) -> GenWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        GenWord {
            degree: self.degree,
            letters,
        }
    }

    /// Concatenation `self · other` (so `other` acts first).
    ///
    /// # Panics
    ///
    /// Panics if the degrees differ.
    pub fn concat(&self, other: &GenWord) -> GenWord {
        assert_eq!(self.degree, other.degree, "concat requires equal degrees");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GenWord {
            degree: self.degree,
            letters,
        }
    }

    /// Parse a word from whitespace-separated letters; `e` (or an empty
    /// string) denotes the empty word.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Parse`] on non-numeric tokens and
    /// [`Error::InvalidInput`] on out-of-range letters.
    pub fn parse(degree: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(GenWord::empty(degree));
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let l: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator letter {tok:?}")))?;
            letters.push(l);
        }
        GenWord::new(degree, letters)
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Evaluate a generator word to the permutation it denotes.
///
/// The rightmost letter acts first: `w_1 … w_k` denotes
/// `τ_{w_1} ∘ … ∘ τ_{w_k}`.
///
/// # Examples
///
/// ```
/// use scpp::perm::{word_to_permutation, GenWord};
///
/// let w = GenWord::parse(3, "1 2").unwrap();
/// let p = word_to_permutation(&w);
/// // τ_2 first sends 2 ↦ 3, then τ_1 fixes 3: overall 1 ↦ 2, 2 ↦ 3, 3 ↦ 1.
/// assert_eq!(p.images(), &[2, 3, 1]);
/// ```
pub fn word_to_permutation(w: &GenWord) -> Permutation {
    let mut images: Vec<usize> = (1..=w.degree()).collect();
    // Folding letters left to right as (acc ∘ τ_i) swaps the images at
    // positions i, i+1 and yields exactly the right-to-left product.
    for &l in w.letters() {
        images.swap(l - 1, l);
        ops::bump(1);
    }
    Permutation { images }
}

/// A list of cycles over `{1, …, degree}`, applied right to left.
///
/// Cycles are **not** required to be disjoint; the `disjoint` flag records
/// whether they happen to be. The wire format separates cycles with `0` and
/// terminates the list with an extra `0`:
/// `1 2 3 0 4 5 0 0` is `(1 2 3)(4 5)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleList {
    degree: usize,
    cycles: Vec<Vec<usize>>,
    disjoint: bool,
}

impl CycleList {
    /// Build a cycle list, validating entry ranges and that no cycle
    /// repeats an entry internally.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] on empty cycles, out-of-range
    /// entries, or an entry repeated within one cycle.
    pub fn new(degree: usize, cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut global_seen = vec![false; degree];
        let mut disjoint = true;
        for cycle in &cycles {
            if cycle.is_empty() {
                return Err(Error::InvalidInput("empty cycle".into()));
            }
            let mut seen = vec![false; degree];
            for &v in cycle {
                if v == 0 || v > degree {
                    return Err(Error::InvalidInput(format!(
                        "cycle entry {v} out of range for degree {degree}"
                    )));
                }
                if seen[v - 1] {
                    return Err(Error::InvalidInput(format!(
                        "entry {v} repeated within a cycle"
                    )));
                }
                seen[v - 1] = true;
                if global_seen[v - 1] {
                    disjoint = false;
                }
                global_seen[v - 1] = true;
            }
        }
        Ok(CycleList {
            degree,
            cycles,
            disjoint,
        })
    }

    /// Degree of the ambient symmetric group.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The cycles, leftmost first. The rightmost cycle acts first.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// `true` if no point appears in two different cycles.
    pub fn is_disjoint(&self) -> bool {
        self.disjoint
    }

    /// Total number of entries across all cycles.
    pub fn entry_count(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// Parse the `0`-separated wire format, e.g. `1 2 3 0 4 5 0 0`.
    ///
    /// Each cycle is a run of nonzero entries closed by a `0`; a final
    /// extra `0` terminates the list. The bare string `0` is the empty
    /// list (identity).
    ///
    /// # Errors
    ///
    /// Returns [`Error::Parse`] on non-numeric tokens or a missing
    /// terminator, and [`Error::InvalidInput`] on out-of-range entries.
    pub fn parse(degree: usize, s: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut current = Vec::new();
        let mut terminated = false;
        for tok in s.split_whitespace() {
            if terminated {
                return Err(Error::Parse(format!(
                    "unexpected token {tok:?} after list terminator"
                )));
            }
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad cycle entry {tok:?}")))?;
            if v == 0 {
                if current.is_empty() {
                    terminated = true;
                } else {
                    cycles.push(std::mem::take(&mut current));
                }
            } else {
                current.push(v);
            }
        }
        if !terminated || !current.is_empty() {
            return Err(Error::Parse(
                "cycle list must end with a 0 terminator".into(),
            ));
        }
        CycleList::new(degree, cycles)
    }
}

impl fmt::Display for CycleList {
    /// Renders the `0`-separated wire format: each cycle's entries, a `0`
    /// after each cycle, and a final `0`. The empty list renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            for v in cycle {
                write!(f, "{v} ")?;
            }
            write!(f, "0 ")?;
        }
        write!(f, "0")
    }
}

/// Decompose a permutation into disjoint cycles, fixed points included.
///
/// Canonical form: each cycle starts at its smallest entry and follows
/// `i ↦ σ(i)`; cycles are sorted by smallest entry.
///
/// # Examples
///
/// ```
/// use scpp::perm::{cycle_decomposition, Permutation};
///
/// let p = Permutation::from_images(vec![2, 3, 1, 5, 4, 7, 6]).unwrap();
/// let d = cycle_decomposition(&p);
/// assert_eq!(
///     d.cycles(),
///     &[vec![1, 2, 3], vec![4, 5], vec![6, 7]],
/// );
/// ```
pub fn cycle_decomposition(p: &Permutation) -> CycleList {
    let n = p.degree();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 1..=n {
        if seen[start - 1] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i - 1] {
            seen[i - 1] = true;
            cycle.push(i);
            i = p.apply(i);
            ops::bump(1);
        }
        cycles.push(cycle);
    }
    CycleList {
        degree: n,
        cycles,
        disjoint: true,
    }
}

/// The permutation denoted by a single cycle (all other points fixed).
fn cycle_to_permutation(degree: usize, cycle: &[usize]) -> Permutation {
    let mut images: Vec<usize> = (1..=degree).collect();
    for k in 0..cycle.len() {
        images[cycle[k] - 1] = cycle[(k + 1) % cycle.len()];
        ops::bump(1);
    }
    Permutation { images }
}

/// Evaluate a cycle list to the permutation it denotes (rightmost cycle
/// first).
///
/// # Examples
///
/// ```
/// use scpp::perm::{cycles_to_permutation, CycleList};
///
/// // (1 2)(2 3), rightmost first: 1 ↦ 2, 2 ↦ 3 ↦ 3, 3 ↦ 2 ↦ 1.
/// let c = CycleList::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
/// assert_eq!(cycles_to_permutation(&c).images(), &[2, 3, 1]);
/// ```
pub fn cycles_to_permutation(c: &CycleList) -> Permutation {
    let mut acc = Permutation::identity(c.degree());
    for cycle in c.cycles().iter().rev() {
        acc = cycle_to_permutation(c.degree(), cycle).compose(&acc);
    }
    acc
}

/// A single cycle through **all** `n` points of `{1, …, n}`, kept as the
/// explicit sequence of its entries (no canonical rotation is imposed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NCycle {
    degree: usize,
    entries: Vec<usize>,
}

impl NCycle {
    /// Build an `n`-cycle from the full sequence of its entries.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] unless `entries` is a permutation
    /// of `1..=degree` of length `degree`.
    pub fn new(degree: usize, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != degree {
            return Err(Error::InvalidInput(format!(
                "an n-cycle of degree {degree} needs {degree} entries, got {}",
                entries.len()
            )));
        }
        let mut seen = vec![false; degree];
        for &v in &entries {
            if v == 0 || v > degree {
                return Err(Error::InvalidInput(format!(
                    "entry {v} out of range for degree {degree}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidInput(format!("entry {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(NCycle { degree, entries })
    }

    /// Extract the `n`-cycle listing (starting at 1) of a permutation.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] if `p` is not a single `n`-cycle.
    pub fn from_permutation(p: &Permutation) -> Result<Self> {
        if !p.is_n_cycle() {
            return Err(Error::InvalidInput(format!(
                "{p} is not an n-cycle of degree {}",
                p.degree()
            )));
        }
        let mut entries = Vec::with_capacity(p.degree());
        let mut i = 1;
        for _ in 0..p.degree() {
            entries.push(i);
            i = p.apply(i);
        }
        Ok(NCycle {
            degree: p.degree(),
            entries,
        })
    }

    /// Degree `n`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The entries in cycle order.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// View as a one-cycle [`CycleList`].
    pub fn as_cycle_list(&self) -> CycleList {
        CycleList {
            degree: self.degree,
            cycles: vec![self.entries.clone()],
            disjoint: true,
        }
    }

    /// The permutation this cycle denotes.
    pub fn to_permutation(&self) -> Permutation {
        cycle_to_permutation(self.degree, &self.entries)
    }
}

impl fmt::Display for NCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Reverse the listing of an `n`-cycle, producing its inverse.
///
/// The reversal is literal: `(1 3 4 6 5 7 2)` becomes `(2 7 5 6 4 3 1)`.
pub fn reverse_ncycle(c: &NCycle) -> NCycle {
    let mut entries = c.entries.clone();
    entries.reverse();
    NCycle {
        degree: c.degree,
        entries,
    }
}

/// A conjugator carrying one `n`-cycle onto another, paired positionally.
///
/// Writing `c1 = (a_1 … a_n)` and `c2 = (b_1 … b_n)` exactly as listed, the
/// permutation `τ` with `τ(a_j) = b_j` satisfies `τ c1 τ⁻¹ = c2`. The result
/// is returned as the disjoint cycle decomposition of `τ`, fixed points
/// included.
///
/// # Errors
///
/// Returns [`Error::InvalidInput`] if the degrees differ.
///
/// # Examples
///
/// ```
/// use scpp::perm::{conjugator_of_ncycles, NCycle};
///
/// let c1 = NCycle::new(3, vec![1, 2, 3]).unwrap();
/// let c2 = NCycle::new(3, vec![2, 1, 3]).unwrap();
/// let tau = conjugator_of_ncycles(&c1, &c2).unwrap();
/// assert_eq!(tau.cycles(), &[vec![1, 2], vec![3]]);
/// ```
pub fn conjugator_of_ncycles(c1: &NCycle, c2: &NCycle) -> Result<CycleList> {
    if c1.degree() != c2.degree() {
        return Err(Error::InvalidInput(format!(
            "degree mismatch: {} vs {}",
            c1.degree(),
            c2.degree()
        )));
    }
    let n = c1.degree();
    let mut images = vec![0; n];
    for j in 0..n {
        images[c1.entries[j] - 1] = c2.entries[j];
        ops::bump(1);
    }
    let tau = Permutation { images };
    Ok(cycle_decomposition(&tau))
}

/// Expand a cycle list into a generator word evaluating to the same
/// permutation.
///
/// Each transposition `(m p)` with `m < p` expands to the palindrome
/// `τ_m τ_{m+1} … τ_{p-1} τ_{p-2} … τ_m`, which walks `m` up to `p` and
/// shuffles the points in between back down. A longer cycle
/// `(i_1 i_2 … i_k)` is the product of transpositions
/// `(i_1 i_k)(i_1 i_{k-1})…(i_1 i_2)` reading right to left, and the word
/// concatenates those transposition words in that order. Cycles keep their
/// list order.
///
/// # Examples
///
/// ```
/// use scpp::perm::{cycles_to_genword, cycles_to_permutation, word_to_permutation, CycleList};
///
/// let c = CycleList::new(3, vec![vec![1, 3]]).unwrap();
/// let w = cycles_to_genword(&c);
/// assert_eq!(w.letters(), &[1, 2, 1]);
/// assert_eq!(word_to_permutation(&w), cycles_to_permutation(&c));
/// ```
pub fn cycles_to_genword(c: &CycleList) -> GenWord {
    let mut letters = Vec::new();
    for cycle in c.cycles() {
        // (i_1 … i_k) = (i_1 i_k)(i_1 i_{k-1})…(i_1 i_2), rightmost factor
        // acting first.
        for j in (1..cycle.len()).rev() {
            let (m, p) = if cycle[0] < cycle[j] {
                (cycle[0], cycle[j])
            } else {
                (cycle[j], cycle[0])
            };
            for t in m..p {
                letters.push(t);
                ops::bump(1);
            }
            for t in (m..p - 1).rev() {
                letters.push(t);
                ops::bump(1);
            }
        }
    }
    GenWord {
        degree: c.degree(),
        letters,
    }
}
