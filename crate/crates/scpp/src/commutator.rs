//! Writing even permutations as commutators.
//!
//! Every even permutation `σ ∈ S_n` factors as a product of two `n`-cycles,
//! and any two `n`-cycles are conjugate; combining the two facts yields an
//! explicit commutator: if `σ = C₁ C₂` with both factors `n`-cycles and
//! `τ C₁⁻¹ τ⁻¹ = C₂`, then `σ = C₁ τ C₁⁻¹ τ⁻¹ = [C₁, τ]`.
//!
//! [`two_ncycle_product`] performs the first step by structural recursion
//! on the disjoint cycle decomposition, and [`scpp_solve`] assembles the
//! full solution as a pair of generator words.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ops;
use crate::perm::{
    conjugator_of_ncycles, cycle_decomposition, cycles_to_genword, cycles_to_permutation,
    reverse_ncycle, CycleList, GenWord, NCycle, Permutation,
};

/// The case applied at one step of the two-`n`-cycle recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// A single cycle of odd length `k`, split as two copies of its
    /// `((k+1)/2)`-th power.
    OddFullCycle,
    /// Exactly two even cycles of equal length, merged by interleaving.
    EqualEvenPair,
    /// Exactly two even cycles of unequal lengths, merged by relabeling.
    UnequalEvenPair,
    /// An odd cycle peeled off; the remainder is handled recursively and
    /// the parts are joined with a bridging transposition.
    PeelOddCycle,
    /// Two even cycles peeled off as a pair; the remainder is handled
    /// recursively and the parts are joined with a bridging transposition.
    PeelEvenPair,
}

/// One step of the recursion: which branch fired, how deep, and how many
/// points the sub-decomposition covered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchRecord {
    /// Recursion depth, starting at 0 for the whole decomposition.
    pub depth: usize,
    /// Branch applied at this step.
    pub branch: Branch,
    /// Number of points in the sub-decomposition at this step.
    pub points: usize,
}

/// Result of [`two_ncycle_product`]: two cycle lists, each evaluating to an
/// `n`-cycle, whose product is the input permutation, plus the recursion
/// trace.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwoCycleProduct {
    /// First factor (applied second: the product is `c1 ∘ c2`).
    pub c1: CycleList,
    /// Second factor (applied first).
    pub c2: CycleList,
    /// Which branches fired, in execution order.
    pub trace: Vec<BranchRecord>,
}

impl fmt::Display for TwoCycleProduct {
    /// Renders both factors in the cycle-list wire format, separated by a
    /// newline: first `c1`, then `c2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.c1)?;
        write!(f, "{}", self.c2)
    }
}

/// Express an even permutation, given by its full disjoint cycle
/// decomposition, as a product of two `n`-cycles.
///
/// The decomposition must cover every point of `{1, …, n}` — fixed points
/// appear as 1-cycles — exactly once. The returned cycle lists are usually
/// not disjoint; evaluated right to left, each is a single `n`-cycle, and
/// `c1 ∘ c2` equals the input permutation. Both facts are re-checked on
/// every call and a failure reports [`Error::Internal`].
///
/// # Errors
///
/// * [`Error::InvalidInput`] if the list is not a covering disjoint
///   decomposition or the degree is 0.
/// * [`Error::PromiseViolation`] if the permutation is odd (odd
///   permutations are never products of two `n`-cycles of the same parity
///   pattern, and never commutators).
///
/// # Examples
///
/// ```
/// use scpp::commutator::two_ncycle_product;
/// use scpp::perm::{cycles_to_permutation, CycleList};
///
/// let d = CycleList::parse(7, "1 2 3 0 4 5 0 6 7 0 0").unwrap();
/// let product = two_ncycle_product(&d).unwrap();
/// let p1 = cycles_to_permutation(&product.c1);
/// let p2 = cycles_to_permutation(&product.c2);
/// assert!(p1.is_n_cycle() && p2.is_n_cycle());
/// assert_eq!(p1.compose(&p2), cycles_to_permutation(&d));
/// ```
pub fn two_ncycle_product(d: &CycleList) -> Result<TwoCycleProduct> {
    let n = d.degree();
    if n == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    if !d.is_disjoint() {
        return Err(Error::InvalidInput(
            "decomposition must consist of disjoint cycles".into(),
        ));
    }
    if d.entry_count() != n {
        return Err(Error::InvalidInput(format!(
            "decomposition must cover all {n} points (write fixed points as 1-cycles)"
        )));
    }
    // Parity: each cycle of length k contributes k - 1 transpositions.
    let transpositions: usize = d.cycles().iter().map(|c| c.len() - 1).sum();
    if !transpositions.is_multiple_of(2) {
        return Err(Error::PromiseViolation(
            "the permutation is odd, hence not a product of two n-cycles of equal degree parity"
                .into(),
        ));
    }

    let mut trace = Vec::new();
    let (c1, c2) = split_cycles(n, d.cycles(), 0, &mut trace)?;
    let c1 = CycleList::new(n, c1)?;
    let c2 = CycleList::new(n, c2)?;

    let p1 = cycles_to_permutation(&c1);
    let p2 = cycles_to_permutation(&c2);
    if !p1.is_n_cycle() || !p2.is_n_cycle() {
        return Err(Error::Internal(format!(
            "two-cycle product factors are not both n-cycles for input {d}"
        )));
    }
    if p1.compose(&p2) != cycles_to_permutation(d) {
        return Err(Error::Internal(format!(
            "two-cycle product does not reproduce its input {d}"
        )));
    }
    Ok(TwoCycleProduct { c1, c2, trace })
}

/// A pair of cycle listings, each evaluating to a single cycle through the
/// same support.
type CyclePair = (Vec<Vec<usize>>, Vec<Vec<usize>>);

/// Recursive worker: split a disjoint sub-decomposition (of even parity
/// over its own support) into two cycle lists, each evaluating to a single
/// cycle through the whole support.
fn split_cycles(
    degree: usize,
    cycles: &[Vec<usize>],
    depth: usize,
    trace: &mut Vec<BranchRecord>,
) -> Result<CyclePair> {
    let points: usize = cycles.iter().map(Vec::len).sum();
    ops::bump(points as u64);
    let record = |branch: Branch, trace: &mut Vec<BranchRecord>| {
        trace.push(BranchRecord {
            depth,
            branch,
            points,
        });
    };

    if cycles.len() == 1 {
        let cycle = &cycles[0];
        let k = cycle.len();
        if k.is_multiple_of(2) {
            return Err(Error::Internal(
                "single even cycle reached the splitter; parity precondition broken".into(),
            ));
        }
        record(Branch::OddFullCycle, trace);
        // σ odd of length k: σ = σ^(k+1) = σ^m · σ^m with m = (k+1)/2, and
        // gcd(m, k) = 1 keeps each power a full k-cycle.
        let m = k.div_ceil(2);
        let half: Vec<Vec<usize>> = std::iter::repeat_n(cycle.clone(), m).collect();
        return Ok((half.clone(), half));
    }

    let all_even = cycles.iter().all(|c| c.len().is_multiple_of(2));
    if cycles.len() == 2 && all_even {
        let (d1, d2) = if cycles[0].len() <= cycles[1].len() {
            (&cycles[0], &cycles[1])
        } else {
            (&cycles[1], &cycles[0])
        };
        let (branch, c1, c2) = if d1.len() == d2.len() {
            (Branch::EqualEvenPair, interleave_equal(d1, d2), None)
        } else {
            let (a, b) = relabel_unequal(d1, d2);
            (Branch::UnequalEvenPair, a, Some(b))
        };
        record(branch, trace);
        let first = vec![c1];
        let second = vec![c2.unwrap_or_else(|| first[0].clone())];
        validate_pair(degree, cycles, &first, &second)?;
        return Ok((first, second));
    }

    // Mixed case: peel either the first odd cycle or a leading pair of even
    // cycles, recurse on both parts, and join with a bridge transposition.
    let (head, tail): (Vec<Vec<usize>>, Vec<Vec<usize>>) =
        match cycles.iter().position(|c| c.len() % 2 == 1) {
            Some(i) => {
                record(Branch::PeelOddCycle, trace);
                let head = vec![cycles[i].clone()];
                let tail = cycles
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, c)| c.clone())
                    .collect();
                (head, tail)
            }
            None => {
                record(Branch::PeelEvenPair, trace);
                (cycles[..2].to_vec(), cycles[2..].to_vec())
            }
        };

    let (c11, c12) = split_cycles(degree, &head, depth + 1, trace)?;
    let (c21, c22) = split_cycles(degree, &tail, depth + 1, trace)?;

    let u = *head.iter().flatten().max().expect("head is nonempty");
    let v = *tail.iter().flatten().max().expect("tail is nonempty");

    // With s = [c11 c12] and r = [c21 c22] cycles on disjoint supports,
    // (c11 c21 (u v)) ∘ ((u v) c12 c22) = s ∘ r, and the bridge (u v) welds
    // the two supports into single cycles on both sides.
    let mut c1 = c11;
    c1.extend(c21);
    c1.push(vec![u, v]);
    let mut c2 = vec![vec![u, v]];
    c2.extend(c12);
    c2.extend(c22);
    Ok((c1, c2))
}

/// Merge two even cycles of equal length into one cycle whose square is
/// their product: interleave the listings.
fn interleave_equal(d1: &[usize], d2: &[usize]) -> Vec<usize> {
    let mut c = Vec::with_capacity(d1.len() * 2);
    for j in 0..d1.len() {
        c.push(d1[j]);
        c.push(d2[j]);
        ops::bump(1);
    }
    c
}

/// Merge two even cycles of unequal lengths `2s < 2t` into two cycles on
/// the combined support whose product is `d1 ∘ d2`.
///
/// The construction labels the `n = 2s + 2t` support points `i_1, …, i_n`
/// so that `d1 = (i_1 i_3 … i_{4s-1})` and
/// `d2 = (i_2 i_4 … i_{2s+2t} i_{4s+1} i_{4s+3} … i_{2s+2t-1})`, and then
/// returns the cycles
/// `c1 = (i_1 i_{4s+1} … i_{2s+2t} i_2 … i_{4s})` and
/// `c2 = (i_1 i_2 … i_n)`.
fn relabel_unequal(d1: &[usize], d2: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let s = d1.len() / 2;
    let t = d2.len() / 2;
    let n = 2 * s + 2 * t;
    // label[j] holds i_{j+1}.
    let mut label = vec![0usize; n];
    for (j, &a) in d1.iter().enumerate() {
        // d1's entries occupy the odd labels i_1, i_3, …, i_{4s-1}.
        label[2 * j] = a;
        ops::bump(1);
    }
    for (j, &b) in d2.iter().enumerate() {
        // d2's first s+t entries occupy the even labels i_2, i_4, …; the
        // remaining t-s entries occupy the odd labels i_{4s+1}, i_{4s+3}, ….
        if j < s + t {
            label[2 * j + 1] = b;
        } else {
            label[4 * s + 2 * (j - (s + t))] = b;
        }
        ops::bump(1);
    }

    let mut c1 = Vec::with_capacity(n);
    c1.push(label[0]);
    c1.extend_from_slice(&label[4 * s..]);
    c1.extend_from_slice(&label[1..4 * s]);
    let c2 = label;
    (c1, c2)
}

/// Check that a pair branch produced two full cycles on the support whose
/// product matches the input pair.
fn validate_pair(
    degree: usize,
    input: &[Vec<usize>],
    c1: &[Vec<usize>],
    c2: &[Vec<usize>],
) -> Result<()> {
    let eval = |cycles: &[Vec<usize>]| -> Result<Permutation> {
        cycles_to_permutation_slices(degree, cycles)
    };
    let p1 = eval(c1)?;
    let p2 = eval(c2)?;
    let d = eval(input)?;
    let support: usize = input.iter().map(Vec::len).sum();
    if cycle_length_through(&p1, c1[0][0]) != support
        || cycle_length_through(&p2, c2[0][0]) != support
    {
        return Err(Error::Internal(
            "pair merge did not produce full cycles on the support".into(),
        ));
    }
    if p1.compose(&p2) != d {
        return Err(Error::Internal(
            "pair merge does not reproduce the input product".into(),
        ));
    }
    Ok(())
}

fn cycles_to_permutation_slices(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
    let list = CycleList::new(degree, cycles.to_vec())?;
    Ok(cycles_to_permutation(&list))
}

/// Length of the cycle of `p` through the point `start`.
fn cycle_length_through(p: &Permutation, start: usize) -> usize {
    let mut len = 0;
    let mut i = start;
    loop {
        len += 1;
        i = p.apply(i);
        if i == start {
            return len;
        }
    }
}

/// A commutator witness: generator words `x`, `y` with `σ = x y x⁻¹ y⁻¹`,
/// along with the intermediate objects the construction passed through.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScppSolution {
    /// First word of the commutator; evaluates to the `n`-cycle `c1`.
    pub x: GenWord,
    /// Second word; evaluates to the conjugator `tau`.
    pub y: GenWord,
    /// The two-`n`-cycle factorization `σ = c1 ∘ c2` with its trace.
    pub product: TwoCycleProduct,
    /// Listing of the first factor as an `n`-cycle (started at 1).
    pub c1: NCycle,
    /// Listing of the second factor as an `n`-cycle (started at 1).
    pub c2: NCycle,
    /// The reversal of `c1`'s listing; denotes `c1⁻¹`.
    pub c3: NCycle,
    /// Disjoint cycle form (fixed points included) of the conjugator `τ`
    /// with `τ c1⁻¹ τ⁻¹ = c2`, paired positionally from `c3` onto `c2`.
    pub tau: CycleList,
}

impl fmt::Display for ScppSolution {
    /// Renders `x 0 y 0 x⁻¹ 0 y⁻¹ 0 0`: the four words separated by `0`,
    /// with a final extra `0`. Inverse words are the reversals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for word in [&self.x, &self.y, &self.x.reverse(), &self.y.reverse()] {
            for l in word.letters() {
                write!(f, "{l} ")?;
            }
            write!(f, "0 ")?;
        }
        write!(f, "0")
    }
}

/// Solve the simple commutator promise problem in `S_n`: given an even
/// permutation `σ`, produce generator words `x`, `y` with
/// `σ = x y x⁻¹ y⁻¹`.
///
/// The construction factors `σ` into two `n`-cycles `c1 ∘ c2`
/// ([`two_ncycle_product`]), reverses `c1`'s listing to get a listing `c3`
/// of `c1⁻¹`, reads off the conjugator `τ` carrying `c3` onto `c2`
/// positionally, and expands `x = c1`, `y = τ` into generator words. The
/// identity `σ = c1 (τ c1⁻¹ τ⁻¹) = [c1, τ]` is re-checked on every call;
/// failure reports [`Error::Internal`].
///
/// # Errors
///
/// [`Error::PromiseViolation`] if `σ` is odd: the promise that `σ` is a
/// commutator cannot hold (commutators of permutations are even).
///
/// # Examples
///
/// ```
/// use scpp::commutator::scpp_solve;
/// use scpp::perm::{word_to_permutation, GenWord, Permutation};
///
/// let sigma = word_to_permutation(&GenWord::parse(4, "1 2").unwrap());
/// let sol = scpp_solve(&sigma).unwrap();
/// let x = word_to_permutation(&sol.x);
/// let y = word_to_permutation(&sol.y);
/// assert_eq!(x.compose(&y).compose(&x.invert()).compose(&y.invert()), sigma);
/// ```
pub fn scpp_solve(sigma: &Permutation) -> Result<ScppSolution> {
    if sigma.degree() == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    if !sigma.is_even() {
        return Err(Error::PromiseViolation(
            "the permutation is odd; only even permutations are commutators".into(),
        ));
    }
    let d = cycle_decomposition(sigma);
    let product = two_ncycle_product(&d)?;
    let p1 = cycles_to_permutation(&product.c1);
    let p2 = cycles_to_permutation(&product.c2);
    let c1 = NCycle::from_permutation(&p1)?;
    let c2 = NCycle::from_permutation(&p2)?;
    let c3 = reverse_ncycle(&c1);
    let tau = conjugator_of_ncycles(&c3, &c2)?;
    let x = cycles_to_genword(&c1.as_cycle_list());
    let y = cycles_to_genword(&tau);

    let xp = p1;
    let yp = cycles_to_permutation(&tau);
    let commutator = xp.compose(&yp).compose(&xp.invert()).compose(&yp.invert());
    if &commutator != sigma {
        return Err(Error::Internal(format!(
            "commutator witness failed verification for {sigma}"
        )));
    }
    Ok(ScppSolution {
        x,
        y,
        product,
        c1,
        c2,
        c3,
        tau,
    })
}
