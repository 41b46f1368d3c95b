//! Commutator decompositions in braid groups: the canonical
//! permutation-braid lift of a symmetric-group solution, the resulting
//! membership test, factorization through the pure-braid kernel, and a
//! seeded randomized rewrite search for literal commutator shape.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{braid_equal, exponent_sum, lift_permutation, project, BraidWord};
use crate::commutator::scpp_solve;
use crate::error::{Error, Result};
use crate::ops;
use crate::perm::word_to_permutation;

/// A claimed decomposition `b = x y x⁻¹ y⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutatorCandidate {
    x: BraidWord,
    y: BraidWord,
}

impl CommutatorCandidate {
    /// Pair two words on the same strand count.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] on a strand mismatch.
    pub fn new(x: BraidWord, y: BraidWord) -> Result<Self> {
        if x.strands() != y.strands() {
            return Err(Error::InvalidInput(format!(
                "commutator parts on {} and {} strands",
                x.strands(),
                y.strands()
            )));
        }
        Ok(CommutatorCandidate { x, y })
    }

    /// The left part `x`.
    pub fn x(&self) -> &BraidWord {
        &self.x
    }

    /// The right part `y`.
    pub fn y(&self) -> &BraidWord {
        &self.y
    }

    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.x.strands()
    }

    /// The literal word `x y x⁻¹ y⁻¹` (exponent sum zero by shape).
    pub fn assembled(&self) -> BraidWord {
        self.x
            .concat(&self.y)
            .and_then(|w| w.concat(&self.x.inverse()))
            .and_then(|w| w.concat(&self.y.inverse()))
            .expect("parts share a strand count")
    }
}

impl fmt::Display for CommutatorCandidate {
    /// `x` and `y` in braid wire format, separated by `" | "`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.x, self.y)
    }
}

/// The canonical commutator candidate for the projection of `b`: solve the
/// symmetric-group problem for `ρ(b)` and lift both parts to their
/// canonical permutation braids.
fn canonical_lift_candidate(b: &BraidWord) -> Result<CommutatorCandidate> {
    let sigma = word_to_permutation(&project(b));
    let solution = scpp_solve(&sigma)?;
    let x = lift_permutation(&word_to_permutation(&solution.x))?;
    let y = lift_permutation(&word_to_permutation(&solution.y))?;
    CommutatorCandidate::new(x.canonical_word(), y.canonical_word())
}

/// Decide whether `b` is a commutator of permutation braids with the
/// canonical construction, returning the decomposition when it is.
///
/// The projection is solved in `S_n`, both parts are lifted canonically,
/// and the candidate is returned exactly when the assembled commutator is
/// braid-equal to `b` — membership in the set of braids with a canonical
/// commutator representative. `None` is an answer, not an error.
///
/// # Errors
///
/// Returns [`Error::PromiseViolation`] when the exponent sum is nonzero
/// (no commutator has one).
///
/// # Examples
///
/// ```
/// use scpp::braid::BraidWord;
/// use scpp::braid_scpp::scpp_permutation_braids;
///
/// // [σ2σ1, Ω] in B_3.
/// let b = BraidWord::parse(3, "2 1 1 2 1 -1 -2 -1 -2 -1").unwrap();
/// let c = scpp_permutation_braids(&b).unwrap().unwrap();
/// assert_eq!(c.x().to_string(), "2 1");
/// ```
pub fn scpp_permutation_braids(b: &BraidWord) -> Result<Option<CommutatorCandidate>> {
    if exponent_sum(b) != 0 {
        return Err(Error::PromiseViolation(format!(
            "exponent sum {} is nonzero, so {b} is not a commutator",
            exponent_sum(b)
        )));
    }
    let candidate = canonical_lift_candidate(b)?;
    if braid_equal(b, &candidate.assembled())? {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

/// Factor `b` as a pure braid times a canonical commutator: `p` is the
/// literal word `b · (x y x⁻¹ y⁻¹)⁻¹`, whose projection evaluates to the
/// identity because the commutator's projection equals `ρ(b)`.
///
/// # Errors
///
/// Returns [`Error::PromiseViolation`] when `ρ(b)` is odd (elements of the
/// commutator subgroup project into the alternating group).
pub fn pure_braid_factorization(b: &BraidWord) -> Result<(BraidWord, CommutatorCandidate)> {
    let sigma = word_to_permutation(&project(b));
    if !sigma.is_even() {
        return Err(Error::PromiseViolation(format!(
            "projection {sigma} is odd, so {b} is not in the commutator subgroup"
        )));
    }
    let candidate = canonical_lift_candidate(b)?;
    let p = b.concat(&candidate.assembled().inverse())?;
    Ok((p, candidate))
}

/// One recorded step of a search: the whole working word and the number of
/// rewrite moves applied so far.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Milestone {
    /// The working word at this milestone.
    pub word: BraidWord,
    /// Rewrite moves applied before reaching it.
    pub steps: u64,
}

/// How a search ended.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SearchOutcome {
    /// A literal commutator shape was reached.
    Success {
        /// The decomposition read off the final word.
        candidate: CommutatorCandidate,
    },
    /// All rounds exhausted their budgets.
    Failure,
}

/// A deterministic record of one randomized search run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchTrace {
    seed: u64,
    rng: &'static str,
    budget_rounds: u32,
    milestones: Vec<Milestone>,
    outcome: SearchOutcome,
}

impl SearchTrace {
    /// The seed the run was started with.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Identifier of the generator algorithm (`"chacha8"`).
    pub fn rng(&self) -> &str {
        self.rng
    }

    /// The round budget `M` the search was given.
    pub fn budget_rounds(&self) -> u32 {
        self.budget_rounds
    }

    /// All recorded milestones, oldest first; the first is the starting
    /// word at step 0.
    pub fn milestones(&self) -> &[Milestone] {
        &self.milestones
    }

    /// The outcome.
    pub fn outcome(&self) -> &SearchOutcome {
        &self.outcome
    }

    /// Whether the run succeeded.
    pub fn succeeded(&self) -> bool {
        matches!(self.outcome, SearchOutcome::Success { .. })
    }

    /// The machine-readable export: one JSON document with fixed field
    /// order, byte-identical across identical runs.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}

impl fmt::Display for SearchTrace {
    /// One line per milestone, `-> <braid word> (<step count>)`, then an
    /// outcome line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.milestones {
            writeln!(f, "-> {} ({})", m.word, m.steps)?;
        }
        match &self.outcome {
            SearchOutcome::Success { candidate } => write!(f, "success: {candidate}"),
            SearchOutcome::Failure => write!(f, "failure"),
        }
    }
}

/// Letterwise formal inverse of a slice of signed letters.
fn formal_inverse(letters: &[i32]) -> Vec<i32> {
    letters.iter().rev().map(|&l| -l).collect()
}

/// If `letters` is literally `x y x⁻¹ y⁻¹` with both parts nonempty,
/// return the cut `(|x|, |y|)`, preferring the smallest `|x|`.
fn commutator_cut(letters: &[i32]) -> Option<(usize, usize)> {
    let len = letters.len();
    if !len.is_multiple_of(2) || len < 4 {
        return None;
    }
    let half = len / 2;
    for s in 1..half {
        ops::bump(1);
        // Cheap endpoint probes before comparing whole slices: the
        // formal inverse of x starts with -x[s-1] and ends with -x[0].
        if letters[half] != -letters[s - 1] || letters[half + s - 1] != -letters[0] {
            continue;
        }
        let t = half - s;
        let x = &letters[..s];
        let y = &letters[s..half];
        if letters[half..half + s] == formal_inverse(x)[..]
            && letters[half + s..] == formal_inverse(y)[..]
        {
            return Some((s, t));
        }
    }
    None
}

/// The length of the shortest prefix `h`, strictly below `bound`, such
/// that the remainder of the word is literally a commutator with nonempty
/// parts, if any.
fn commutator_suffix_prefix_len(letters: &[i32], bound: usize) -> Option<usize> {
    (0..letters.len().min(bound)).find(|&q| commutator_cut(&letters[q..]).is_some())
}

/// All applicable single-substitution rewrites of one kind.
#[derive(Clone, Copy)]
enum MoveKind {
    /// `(a, b, a) → (b, a, b)` for adjacent-index, same-sign triples.
    Relation,
    /// Swap two adjacent letters with far-apart indices.
    Commutation,
    /// Delete an adjacent `x, -x` pair.
    Cancellation,
    /// Insert `x, -x` at any position.
    Insertion,
}

fn relation_sites(letters: &[i32]) -> Vec<usize> {
    (0..letters.len().saturating_sub(2))
        .filter(|&q| {
            let (a, b, c) = (letters[q], letters[q + 1], letters[q + 2]);
            a == c
                && a.signum() == b.signum()
                && (a.unsigned_abs() as i64 - b.unsigned_abs() as i64).abs() == 1
        })
        .collect()
}

fn commutation_sites(letters: &[i32]) -> Vec<usize> {
    (0..letters.len().saturating_sub(1))
        .filter(|&q| {
            (letters[q].unsigned_abs() as i64 - letters[q + 1].unsigned_abs() as i64).abs() >= 2
        })
        .collect()
}

fn cancellation_sites(letters: &[i32]) -> Vec<usize> {
    (0..letters.len().saturating_sub(1))
        .filter(|&q| letters[q] == -letters[q + 1])
        .collect()
}

/// Apply one uniformly random legal move: pick uniformly among the move
/// kinds with at least one site (insertion always qualifies), then
/// uniformly among that kind's instances.
fn random_move(letters: &mut Vec<i32>, strands: usize, rng: &mut ChaCha8Rng) {
    let relations = relation_sites(letters);
    let commutations = commutation_sites(letters);
    let cancellations = cancellation_sites(letters);

    let mut kinds = Vec::with_capacity(4);
    if !relations.is_empty() {
        kinds.push(MoveKind::Relation);
    }
    if !commutations.is_empty() {
        kinds.push(MoveKind::Commutation);
    }
    if !cancellations.is_empty() {
        kinds.push(MoveKind::Cancellation);
    }
    kinds.push(MoveKind::Insertion);

    ops::bump(1);
    match kinds[rng.gen_range(0..kinds.len())] {
        MoveKind::Relation => {
            let q = relations[rng.gen_range(0..relations.len())];
            let (a, b) = (letters[q], letters[q + 1]);
            letters[q] = b;
            letters[q + 1] = a;
            letters[q + 2] = b;
        }
        MoveKind::Commutation => {
            let q = commutations[rng.gen_range(0..commutations.len())];
            letters.swap(q, q + 1);
        }
        MoveKind::Cancellation => {
            let q = cancellations[rng.gen_range(0..cancellations.len())];
            letters.drain(q..q + 2);
        }
        MoveKind::Insertion => {
            let pos = rng.gen_range(0..=letters.len());
            let index = rng.gen_range(1..strands) as i32;
            let letter = if rng.gen::<bool>() { index } else { -index };
            letters.splice(pos..pos, [letter, -letter]);
        }
    }
}

/// Search for a literal commutator spelling of `b` by randomized
/// rewriting, deterministically in `(b, M, seed)`.
///
/// The start word is `p · x y x⁻¹ y⁻¹` from [`pure_braid_factorization`],
/// with `p` dropped when it is braid-equal to the identity — in that case
/// the start word is already literally a commutator and the search
/// succeeds after zero moves. Each round `i` applies up to `N_i` random
/// moves (`N_0` uniform in `[max(4, |b|), 4·max(4, |b|)]`, doubling each
/// round); finding a word of the form `h · [x, y]` with nonempty parts and
/// a strictly shorter `h` than any seen before records a milestone and
/// resets the round's step budget. After `M` exhausted rounds the search
/// reports failure, which is a value, not an error.
///
/// # Errors
///
/// Returns [`Error::PromiseViolation`] if `ρ(b)` is odd, and
/// [`Error::Internal`] if a claimed success is not braid-equal to the
/// input (checked, never assumed).
pub fn probabilistic_scpp_search(b: &BraidWord, rounds: u32, seed: u64) -> Result<SearchTrace> {
    let strands = b.strands();
    let (p, candidate) = pure_braid_factorization(b)?;
    let p = if braid_equal(&p, &BraidWord::empty(strands)?)? {
        BraidWord::empty(strands)?
    } else {
        p
    };
    let start = p.concat(&candidate.assembled())?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut letters: Vec<i32> = start.letters().to_vec();
    let mut steps: u64 = 0;
    let mut milestones = vec![Milestone {
        word: start.clone(),
        steps: 0,
    }];
    // Milestones must strictly shrink the prefix before the commutator
    // suffix, starting from the pure part's length.
    let mut prefix_bound = p.len();

    let finish = |letters: &[i32],
                  steps: u64,
                  milestones: &mut Vec<Milestone>|
     -> Result<Option<SearchOutcome>> {
        if let Some((s, t)) = commutator_cut(letters) {
            let word = BraidWord::new(strands, letters.to_vec())?;
            if !braid_equal(&word, b)? {
                return Err(Error::Internal(
                    "search reached a word not braid-equal to its input".into(),
                ));
            }
            if milestones.last().map(|m| &m.word) != Some(&word) {
                milestones.push(Milestone {
                    word: word.clone(),
                    steps,
                });
            }
            let x = BraidWord::new(strands, letters[..s].to_vec())?;
            let y = BraidWord::new(strands, letters[s..s + t].to_vec())?;
            return Ok(Some(SearchOutcome::Success {
                candidate: CommutatorCandidate::new(x, y)?,
            }));
        }
        Ok(None)
    };

    if let Some(outcome) = finish(&letters, steps, &mut milestones)? {
        return Ok(SearchTrace {
            seed,
            rng: "chacha8",
            budget_rounds: rounds,
            milestones,
            outcome,
        });
    }

    let base = start.len().max(4) as u64;
    let mut budget = rng.gen_range(base..=4 * base);
    for _round in 0..rounds {
        let mut in_round: u64 = 0;
        while in_round < budget {
            random_move(&mut letters, strands, &mut rng);
            steps += 1;
            in_round += 1;

            if let Some(outcome) = finish(&letters, steps, &mut milestones)? {
                return Ok(SearchTrace {
                    seed,
                    rng: "chacha8",
                    budget_rounds: rounds,
                    milestones,
                    outcome,
                });
            }
            if let Some(h) = commutator_suffix_prefix_len(&letters, prefix_bound) {
                prefix_bound = h;
                in_round = 0;
                milestones.push(Milestone {
                    word: BraidWord::new(strands, letters.clone())?,
                    steps,
                });
            }
        }
        budget *= 2;
    }

    Ok(SearchTrace {
        seed,
        rng: "chacha8",
        budget_rounds: rounds,
        milestones,
        outcome: SearchOutcome::Failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::garside;

    fn bw(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    fn commutator(x: &BraidWord, y: &BraidWord) -> BraidWord {
        CommutatorCandidate::new(x.clone(), y.clone())
            .unwrap()
            .assembled()
    }

    #[test]
    fn candidate_assembly_has_exponent_sum_zero() {
        let c = CommutatorCandidate::new(bw(3, "1 2"), bw(3, "2 -1")).unwrap();
        assert_eq!(exponent_sum(&c.assembled()), 0);
        assert_eq!(c.assembled().to_string(), "1 2 2 -1 -2 -1 1 -2");
        assert!(CommutatorCandidate::new(bw(3, "1"), bw(4, "1")).is_err());
    }

    #[test]
    fn commutator_of_garside_matches_the_worked_decomposition() {
        // [σ2σ1, Ω] in B_3: the canonical construction recovers x = σ2σ1
        // literally; the assembled candidate is braid-equal to the input.
        let x = bw(3, "2 1");
        let omega = garside(3).unwrap().canonical_word();
        let b = commutator(&x, &omega);
        let c = scpp_permutation_braids(&b).unwrap().expect("b lies in K");
        assert_eq!(c.x().to_string(), "2 1");
        assert!(braid_equal(&c.assembled(), &b).unwrap());
    }

    #[test]
    fn empty_word_is_its_own_commutator() {
        let b = BraidWord::empty(3).unwrap();
        let c = scpp_permutation_braids(&b)
            .unwrap()
            .expect("identity is [c, c]");
        assert!(braid_equal(&c.assembled(), &b).unwrap());
    }

    #[test]
    fn nonzero_exponent_sum_violates_the_promise() {
        let err = scpp_permutation_braids(&bw(3, "1 1")).unwrap_err();
        assert!(matches!(err, Error::PromiseViolation(_)));
    }

    #[test]
    fn non_members_get_none() {
        // σ1²σ2⁻² has exponent sum zero and identity projection, but is a
        // nontrivial pure braid; the identity's canonical candidate
        // assembles to the trivial braid, so membership fails.
        let b = bw(3, "1 1 -2 -2");
        assert!(scpp_permutation_braids(&b).unwrap().is_none());
    }

    #[test]
    fn factorization_is_pure_times_commutator() {
        let b = commutator(&bw(3, "1 2"), &bw(3, "2 1 2"));
        let (p, c) = pure_braid_factorization(&b).unwrap();
        assert_eq!(
            word_to_permutation(&project(&p)),
            crate::perm::Permutation::identity(3)
        );
        let reassembled = p.concat(&c.assembled()).unwrap();
        assert!(braid_equal(&b, &reassembled).unwrap());
    }

    #[test]
    fn factorization_of_a_k_member_has_trivial_pure_part() {
        let b = commutator(&bw(3, "2 1"), &garside(3).unwrap().canonical_word());
        let (p, _) = pure_braid_factorization(&b).unwrap();
        assert!(braid_equal(&p, &BraidWord::empty(3).unwrap()).unwrap());
    }

    #[test]
    fn odd_projection_violates_the_factorization_promise() {
        let err = pure_braid_factorization(&bw(3, "1 -2 -2")).unwrap_err();
        assert!(matches!(err, Error::PromiseViolation(_)));
    }

    #[test]
    fn literal_commutator_cut_detection() {
        assert_eq!(commutator_cut(&[1, 2, -1, -2]), Some((1, 1)));
        assert_eq!(commutator_cut(&[1, 2, 2, -1, -2, -2]), Some((1, 2)));
        assert_eq!(commutator_cut(&[1, 2, 1, -2]), None);
        assert_eq!(commutator_cut(&[1, -1]), None);
        assert_eq!(commutator_cut(&[]), None);
        let all = usize::MAX;
        assert_eq!(
            commutator_suffix_prefix_len(&[2, 2, 1, 2, -1, -2], all),
            Some(2)
        );
        assert_eq!(commutator_suffix_prefix_len(&[1, 1], all), None);
        assert_eq!(commutator_suffix_prefix_len(&[2, 2, 1, 2, -1, -2], 2), None);
    }

    #[test]
    fn search_succeeds_immediately_on_a_k_member() {
        let b = commutator(&bw(3, "1 2"), &garside(3).unwrap().canonical_word());
        let trace = probabilistic_scpp_search(&b, 4, 7).unwrap();
        assert!(trace.succeeded());
        assert_eq!(trace.milestones()[0].steps, 0);
        assert_eq!(trace.milestones().len(), 1);
        if let SearchOutcome::Success { candidate } = trace.outcome() {
            assert!(braid_equal(&candidate.assembled(), &b).unwrap());
        }
    }

    #[test]
    fn search_is_deterministic_per_seed() {
        let b = bw(3, "1 2 -1 -2");
        let a = probabilistic_scpp_search(&b, 3, 41).unwrap();
        let c = probabilistic_scpp_search(&b, 3, 41).unwrap();
        assert_eq!(a, c);
        assert_eq!(a.to_json(), c.to_json());
        assert_eq!(a.rng(), "chacha8");
        let d = probabilistic_scpp_search(&b, 3, 42).unwrap();
        assert_eq!(d.seed(), 42);
    }

    #[test]
    fn search_traces_chain_braid_equal_milestones() {
        let b = bw(3, "1 2 -1 -2");
        let trace = probabilistic_scpp_search(&b, 3, 5).unwrap();
        let ms = trace.milestones();
        assert!(!ms.is_empty());
        for pair in ms.windows(2) {
            assert!(braid_equal(&pair[0].word, &pair[1].word).unwrap());
        }
        assert!(braid_equal(&ms[0].word, &b).unwrap());
    }

    #[test]
    fn search_rejects_odd_projections() {
        let err = probabilistic_scpp_search(&bw(3, "1 2 2"), 2, 1).unwrap_err();
        assert!(matches!(err, Error::PromiseViolation(_)));
    }

    #[test]
    fn search_failure_is_a_value() {
        // σ1² has exponent sum 2 and even projection; every move preserves
        // the exponent sum and every literal commutator has sum zero, so
        // the search must exhaust its rounds and report failure.
        let b = bw(3, "1 1");
        let trace = probabilistic_scpp_search(&b, 2, 3).unwrap();
        assert!(!trace.succeeded());
        assert!(trace.to_string().ends_with("failure"));
        for pair in trace.milestones().windows(2) {
            assert!(braid_equal(&pair[0].word, &pair[1].word).unwrap());
        }
    }

    #[test]
    fn trace_display_follows_the_arrow_format() {
        let b = commutator(&bw(3, "1 2"), &bw(3, "2"));
        let trace = probabilistic_scpp_search(&b, 2, 11).unwrap();
        let text = trace.to_string();
        assert!(text.starts_with("-> "));
        assert!(text.contains("(0)"));
    }
}
