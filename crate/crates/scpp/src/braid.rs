//! Braid words over the Artin generators, projection to `S_n`, permutation
//! braids, inversion sets with their lattice meet, the Garside element, and
//! the right-greedy normal form giving a word-problem decision procedure.
//!
//! Conventions match the rest of the crate: words act right-to-left (the
//! rightmost letter is applied first), so a word `σ_a σ_b` evaluates to the
//! permutation `τ_a ∘ τ_b`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ops;
use crate::perm::{word_to_permutation, GenWord, Permutation};

/// A word in the braid group `B_n`: signed Artin generators, `i` for `σ_i`
/// and `-i` for `σ_i⁻¹`, applied right-to-left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Build a braid word, validating `strands ≥ 2` and every letter index
    /// in `1..=strands-1`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] on a zero letter, an out-of-range
    /// index, or fewer than two strands.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidInput(format!(
                "a braid group needs at least 2 strands, got {strands}"
            )));
        }
        for &l in &letters {
            let idx = l.unsigned_abs() as usize;
            if idx == 0 || idx >= strands {
                return Err(Error::InvalidInput(format!(
                    "letter {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The empty word in `B_strands`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] for fewer than two strands.
    pub fn empty(strands: usize) -> Result<Self> {
        BraidWord::new(strands, Vec::new())
    }

    /// Number of strands `n` of the ambient group `B_n`.
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The signed letters, leftmost first.
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Word length (number of letters).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether the word has no letters.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether every letter is a positive generator.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// Concatenation `self · other` (self acts later).
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] on a strand-count mismatch.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::InvalidInput(format!(
                "cannot concatenate words on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord::new(self.strands, letters)
    }

    /// The formal inverse: letters reversed with signs flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Parse the wire format: space-separated signed integers, `e` (or an
    /// empty string) for the empty word. `"1 2 -1 -2"` is
    /// `σ1 σ2 σ1⁻¹ σ2⁻¹`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Parse`] on non-integer tokens and
    /// [`Error::InvalidInput`] on range violations.
    pub fn parse(strands: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return BraidWord::empty(strands);
        }
        let letters = s
            .split_whitespace()
            .map(|tok| {
                tok.parse()
                    .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))
            })
            .collect::<Result<Vec<i32>>>()?;
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    /// The wire format: `"1 2 -1 -2"`, or `"e"` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let text = self
            .letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        write!(f, "{text}")
    }
}

/// Erase signs: the image of a braid word under the projection
/// `B_n → S_n`, as a generator word of the same length.
pub fn project(b: &BraidWord) -> GenWord {
    let letters = b
        .letters
        .iter()
        .map(|&l| l.unsigned_abs() as usize)
        .collect();
    GenWord::new(b.strands, letters).expect("projection preserves letter ranges")
}

/// Sum of letter signs, a homomorphism `B_n → Z` invariant under all braid
/// relations and free cancellation.
pub fn exponent_sum(b: &BraidWord) -> i64 {
    b.letters.iter().map(|&l| i64::from(l.signum())).sum()
}

/// The inversion set of a permutation: all pairs `(i, j)` with `i < j`
/// whose values are out of order, `σ(j) < σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RSet {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl RSet {
    /// Build an `RSet`, validating `1 ≤ i < j ≤ n` for every pair.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] on a malformed pair.
    pub fn new(n: usize, pairs: BTreeSet<(usize, usize)>) -> Result<Self> {
        for &(i, j) in &pairs {
            if i == 0 || i >= j || j > n {
                return Err(Error::InvalidInput(format!(
                    "pair ({i}, {j}) is not 1 ≤ i < j ≤ {n}"
                )));
            }
        }
        Ok(RSet { n, pairs })
    }

    /// Ambient degree `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The pairs, in increasing order.
    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    /// Number of inversions.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// Whether the set is empty (the identity's inversion set).
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Containment, the partial order under which the meet is computed.
    pub fn is_subset(&self, other: &RSet) -> bool {
        self.n == other.n && self.pairs.is_subset(&other.pairs)
    }
}

/// The inversion set `R_σ = {(i, j) : i < j and σ(j) < σ(i)}`.
pub fn r_set(p: &Permutation) -> RSet {
    let n = p.degree();
    let mut pairs = BTreeSet::new();
    for i in 1..=n {
        for j in i + 1..=n {
            ops::bump(1);
            if p.apply(j) < p.apply(i) {
                pairs.insert((i, j));
            }
        }
    }
    RSet { n, pairs }
}

/// The meet `σ ∧ τ` on inversion sets: the largest inversion set of an
/// actual permutation contained in both, computed as the least fixed point
/// of the betweenness-closure seeded by the adjacent pairs `(i, i+1)` of
/// the intersection. A pair `(i, k)` of the intersection joins once every
/// intermediate `j` has `(i, j)` or `(j, k)` already present.
///
/// # Errors
///
/// Returns [`Error::InvalidInput`] on a degree mismatch.
pub fn meet(a: &RSet, b: &RSet) -> Result<RSet> {
    if a.n != b.n {
        return Err(Error::InvalidInput(format!(
            "meet of inversion sets over degrees {} and {}",
            a.n, b.n
        )));
    }
    let common: Vec<(usize, usize)> = a.pairs.intersection(&b.pairs).copied().collect();
    let mut closed: BTreeSet<(usize, usize)> = BTreeSet::new();
    loop {
        let mut changed = false;
        for &(i, k) in &common {
            if closed.contains(&(i, k)) {
                continue;
            }
            ops::bump(1);
            let witnessed =
                (i + 1..k).all(|j| closed.contains(&(i, j)) || closed.contains(&(j, k)));
            if witnessed {
                closed.insert((i, k));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(RSet {
        n: a.n,
        pairs: closed,
    })
}

/// Reconstruct the unique permutation with the given inversion set, if one
/// exists: read off the Lehmer code `c_i = #{k > i : (i, k) ∈ R}`, take
/// `σ(i)` as the `(c_i + 1)`-th smallest unused value, then verify.
///
/// # Errors
///
/// Returns [`Error::InvalidInput`] if the set is not the inversion set of
/// any permutation.
pub fn permutation_of_r_set(r: &RSet) -> Result<Permutation> {
    let n = r.n;
    let mut unused: Vec<usize> = (1..=n).collect();
    let mut images = Vec::with_capacity(n);
    for i in 1..=n {
        let code = (i + 1..=n).filter(|&k| r.pairs.contains(&(i, k))).count();
        if code >= unused.len() {
            return Err(Error::InvalidInput(
                "pair set is not the inversion set of any permutation".into(),
            ));
        }
        images.push(unused.remove(code));
        ops::bump(1);
    }
    let p = Permutation::from_images(images)?;
    if r_set(&p).pairs != r.pairs {
        return Err(Error::InvalidInput(
            "pair set is not the inversion set of any permutation".into(),
        ));
    }
    Ok(p)
}

/// The order-reversing permutation `i ↦ n + 1 - i`, the projection of the
/// Garside element.
fn reversal(n: usize) -> Permutation {
    Permutation::from_images((1..=n).map(|i| n + 1 - i).collect())
        .expect("reversal images form a bijection")
}

/// Conjugate by the reversal: the projection-level effect of replacing
/// every `σ_i` by `σ_{n-i}`.
fn flipped(p: &Permutation) -> Permutation {
    let w0 = reversal(p.degree());
    w0.compose(p).compose(&w0)
}

/// The ShortLex-least word evaluating to `p`: greedily take the smallest
/// generator in the left descent set. Agrees with reduction in the
/// completed rewrite system (both name the ShortLex-least representative;
/// asserted against [`crate::rewrite::canonical_form_sn`] in tests) while
/// needing no completion, so lifts stay cheap at any degree.
fn shortlex_geodesic(p: &Permutation) -> GenWord {
    let n = p.degree();
    // pos[v] = the point that maps to value v (1-based, index 0 unused).
    let mut pos = vec![0usize; n + 1];
    for i in 1..=n {
        pos[p.apply(i)] = i;
    }
    let mut letters = Vec::new();
    loop {
        // Left descents of the current residue q: values i, i+1 appearing
        // in inverted positions; prepending τ_i removes that inversion.
        let mut descent = None;
        for i in 1..n {
            ops::bump(1);
            if pos[i] > pos[i + 1] {
                descent = Some(i);
                break;
            }
        }
        match descent {
            None => break,
            Some(i) => {
                letters.push(i);
                pos.swap(i, i + 1);
            }
        }
    }
    GenWord::new(n, letters).expect("descent letters lie in 1..degree")
}

/// A positive braid in which no two strands cross twice, stored by its
/// canonical positive word: the sign-lift of the ShortLex canonical form
/// of its projection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermutationBraid {
    strands: usize,
    word: GenWord,
}

impl PermutationBraid {
    /// Accept a positive word if it is a permutation braid (its length
    /// equals the inversion count of its projection, so no pair of strands
    /// crosses twice), and store the canonical word of its braid.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] for non-positive words, words with
    /// a double crossing, or fewer than two strands.
    pub fn from_positive_word(b: &BraidWord) -> Result<Self> {
        if !b.is_positive() {
            return Err(Error::InvalidInput(format!(
                "permutation braids are positive; {b} has a negative letter"
            )));
        }
        let p = word_to_permutation(&project(b));
        if r_set(&p).len() != b.len() {
            return Err(Error::InvalidInput(format!(
                "two strands of {b} cross twice"
            )));
        }
        Ok(PermutationBraid {
            strands: b.strands,
            word: shortlex_geodesic(&p),
        })
    }

    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The canonical positive word, as an unsigned generator word.
    pub fn word(&self) -> &GenWord {
        &self.word
    }

    /// The canonical positive word, as a braid word.
    pub fn canonical_word(&self) -> BraidWord {
        let letters = self.word.letters().iter().map(|&l| l as i32).collect();
        BraidWord::new(self.strands, letters).expect("canonical letters lie in range")
    }

    /// The projection to `S_n`.
    pub fn permutation(&self) -> Permutation {
        word_to_permutation(&self.word)
    }

    /// Geodesic length (equal to the inversion count of the projection).
    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Whether this is the empty braid.
    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

impl fmt::Display for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.word, f)
    }
}

/// The unique permutation braid projecting to `p`.
///
/// # Errors
///
/// Returns [`Error::InvalidInput`] for degree below 2 (no braid group).
pub fn lift_permutation(p: &Permutation) -> Result<PermutationBraid> {
    if p.degree() < 2 {
        return Err(Error::InvalidInput(format!(
            "no braid group on {} strand(s)",
            p.degree()
        )));
    }
    Ok(PermutationBraid {
        strands: p.degree(),
        word: shortlex_geodesic(p),
    })
}

/// The Garside element `Ω` of `B_n`: the half twist
/// `(σ_1 σ_2 ⋯ σ_{n-1})(σ_1 ⋯ σ_{n-2}) ⋯ (σ_1)`, the maximal permutation
/// braid, stored canonically. Satisfies the exchange law
/// `Ω σ_i = σ_{n-i} Ω`.
///
/// # Errors
///
/// Returns [`Error::InvalidInput`] for `n < 2`.
pub fn garside(n: usize) -> Result<PermutationBraid> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "no braid group on {n} strand(s)"
        )));
    }
    lift_permutation(&reversal(n))
}

/// A braid in right-greedy normal form: permutation-braid factors, none
/// empty and none the Garside element, with each factor the maximal
/// permutation-braid tail of what precedes it, followed by a power of `Ω`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyNormalForm {
    strands: usize,
    factors: Vec<PermutationBraid>,
    omega_power: i64,
}

impl GreedyNormalForm {
    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The permutation-braid factors, leftmost first.
    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    /// The exponent of the trailing Garside power (the infimum).
    pub fn omega_power(&self) -> i64 {
        self.omega_power
    }

    /// The canonical length: the number of factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Concatenate the factors and append `Ω^p`, yielding a braid word
    /// equal to the original input of [`rgnf`].
    pub fn reassemble(&self) -> BraidWord {
        let mut letters: Vec<i32> = Vec::new();
        for f in &self.factors {
            letters.extend(f.word.letters().iter().map(|&l| l as i32));
        }
        let omega = shortlex_geodesic(&reversal(self.strands));
        for _ in 0..self.omega_power.unsigned_abs() {
            if self.omega_power >= 0 {
                letters.extend(omega.letters().iter().map(|&l| l as i32));
            } else {
                letters.extend(omega.letters().iter().rev().map(|&l| -(l as i32)));
            }
        }
        BraidWord::new(self.strands, letters).expect("factor letters lie in range")
    }
}

impl fmt::Display for GreedyNormalForm {
    /// `[f1][f2]...[fm] OMEGA^p`, each factor in positive-word format;
    /// `OMEGA^p` alone when there are no factors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for factor in &self.factors {
            write!(f, "[{factor}]")?;
        }
        if !self.factors.is_empty() {
            write!(f, " ")?;
        }
        write!(f, "OMEGA^{}", self.omega_power)
    }
}

/// The positive word for `Ω σ_j⁻¹`, used to eliminate a negative letter at
/// the cost of one `Ω⁻¹`.
fn omega_complement(n: usize, j: usize) -> GenWord {
    let tau = Permutation::from_images(
        (1..=n)
            .map(|i| match i {
                _ if i == j => j + 1,
                _ if i == j + 1 => j,
                _ => i,
            })
            .collect(),
    )
    .expect("transposition images form a bijection");
    shortlex_geodesic(&reversal(n).compose(&tau))
}

/// Eliminate negative letters: rewrite `b` as a positive word followed by
/// a power of `Ω`, using `σ_j⁻¹ = Ω⁻¹ (Ω σ_j⁻¹)` and the exchange law to
/// carry every `Ω⁻¹` to the right end (flipping the letters it crosses).
fn positive_with_power(b: &BraidWord) -> (Vec<usize>, i64) {
    let n = b.strands;
    let complements: Vec<GenWord> = (1..n).map(|j| omega_complement(n, j)).collect();
    let mut letters: Vec<usize> = Vec::new();
    let mut power: i64 = 0;
    for &l in &b.letters {
        ops::bump(1);
        let flip = |x: usize, times: i64| if times % 2 == 0 { x } else { n - x };
        if l > 0 {
            letters.push(flip(l as usize, power));
        } else {
            power -= 1;
            let a = &complements[(-l) as usize - 1];
            letters.extend(a.letters().iter().map(|&x| flip(x, power)));
        }
    }
    (letters, power)
}

/// Factor a positive word into maximal permutation-braid tails, scanning
/// right to left: extend the current factor leftward while no pair of
/// strands comes to cross twice.
fn factor_tails(n: usize, letters: &[usize]) -> Vec<PermutationBraid> {
    let mut factors_rev: Vec<PermutationBraid> = Vec::new();
    // pos[v] = preimage of value v under the current factor's projection.
    let mut pos: Vec<usize> = (0..=n).collect();
    let mut current: Permutation = Permutation::identity(n);
    let mut empty = true;

    let close = |p: &Permutation, out: &mut Vec<PermutationBraid>| {
        out.push(lift_permutation(p).expect("factor degree matches strand count"));
    };

    for &i in letters.iter().rev() {
        ops::bump(1);
        if !empty && pos[i] > pos[i + 1] {
            // Prepending σ_i would cross strands i, i+1 a second time.
            close(&current, &mut factors_rev);
            pos = (0..=n).collect();
            current = Permutation::identity(n);
        }
        // current := τ_i ∘ current.
        let mut images = current.images().to_vec();
        images[pos[i] - 1] = i + 1;
        images[pos[i + 1] - 1] = i;
        pos.swap(i, i + 1);
        current = Permutation::from_images(images).expect("swap preserves bijection");
        empty = false;
    }
    if !empty {
        close(&current, &mut factors_rev);
    }
    factors_rev.reverse();
    factors_rev
}

/// The maximal tail `m(a, b)` of `a` that still forms a permutation braid
/// when prepended to `b`: the lift of `ρ(a) ∧ (ρ(Ω) ρ(b)⁻¹)`.
fn maximal_movable_tail(a: &PermutationBraid, b: &PermutationBraid) -> Result<Permutation> {
    let w0 = reversal(a.strands());
    let bound = w0.compose(&b.permutation().invert());
    let wedge = meet(&r_set(&a.permutation()), &r_set(&bound))?;
    permutation_of_r_set(&wedge)
        .map_err(|_| Error::Internal("meet produced a non-realizable inversion set".into()))
}

/// Compute the right-greedy normal form of a braid word.
///
/// Proceeds in three phases: eliminate negative letters against powers of
/// `Ω`, factor the positive remainder into permutation-braid tails right
/// to left, then slide letters rightward (moving `m(w_k, w_{k+1})` across
/// each adjacent boundary) and absorb any `Ω` factors into the power,
/// repeating until every adjacent pair is greedy.
///
/// # Errors
///
/// Returns [`Error::Internal`] if the normalization fails to stabilize or
/// an intermediate meet is not realizable (both indicate a bug, not bad
/// input).
pub fn rgnf(b: &BraidWord) -> Result<GreedyNormalForm> {
    let n = b.strands;
    let w0 = reversal(n);
    let (letters, mut power) = positive_with_power(b);
    let mut factors = factor_tails(n, &letters);

    // Each full pass either absorbs an Ω factor (shortening the factor
    // list), drops empty factors, or slides letters strictly rightward;
    // all three are bounded, so the generous cap only guards bugs.
    let cap = 4 * (letters.len() + n + 4) * (letters.len() + n + 4);
    let mut rounds = 0usize;
    loop {
        rounds += 1;
        if rounds > cap {
            return Err(Error::Internal(
                "right-greedy normalization did not stabilize".into(),
            ));
        }

        if let Some(k) = factors.iter().position(|f| f.permutation() == w0) {
            // Move this Ω to the right end, flipping what it crosses.
            factors.remove(k);
            for f in factors.iter_mut().skip(k) {
                *f = lift_permutation(&flipped(&f.permutation()))?;
            }
            power += 1;
            continue;
        }

        if factors.iter().any(PermutationBraid::is_empty) {
            factors.retain(|f| !f.is_empty());
            continue;
        }

        let mut moved = false;
        for i in 0..factors.len().saturating_sub(1) {
            ops::bump(1);
            let m = maximal_movable_tail(&factors[i], &factors[i + 1])?;
            if m == Permutation::identity(n) {
                continue;
            }
            let head = factors[i].permutation().compose(&m.invert());
            let tail = m.compose(&factors[i + 1].permutation());
            let head_braid = lift_permutation(&head)?;
            let tail_braid = lift_permutation(&tail)?;
            if head_braid.len() + tail_braid.len() != factors[i].len() + factors[i + 1].len() {
                return Err(Error::Internal(
                    "sliding a tail changed the total positive length".into(),
                ));
            }
            factors[i] = head_braid;
            factors[i + 1] = tail_braid;
            moved = true;
        }
        if !moved {
            break;
        }
    }

    Ok(GreedyNormalForm {
        strands: n,
        factors,
        omega_power: power,
    })
}

/// Decide braid equality by comparing right-greedy normal forms, which are
/// unique per braid.
///
/// # Errors
///
/// Returns [`Error::InvalidInput`] on a strand-count mismatch and
/// propagates [`rgnf`] failures.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands != b.strands {
        return Err(Error::InvalidInput(format!(
            "cannot compare words on {} and {} strands",
            a.strands, b.strands
        )));
    }
    Ok(rgnf(a)? == rgnf(b)?)
}
