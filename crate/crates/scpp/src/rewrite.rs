//! ShortLex rewriting for `S_n`: the three relation families, the greedy
//! reduction strategy, and Knuth–Bendix completion to a confluent system
//! producing canonical representatives.
//!
//! Words here are plain letter sequences over the alphabet `{1, …, n-1}`
//! ordered by `1 < 2 < … < n-1`; [`GenWord`] values wrap them at the API
//! boundary. ShortLex compares by length first and by the first differing
//! letter at equal length.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ops;
use crate::perm::{cycle_decomposition, cycles_to_genword, GenWord, Permutation};

/// Maximum number of rules completion may add before diagnosing
/// non-termination.
pub const COMPLETION_CAP: usize = 100_000;

/// Compare two words in ShortLex order: shorter words come first, and words
/// of equal length compare by the first differing letter.
///
/// # Examples
///
/// ```
/// use std::cmp::Ordering;
/// use scpp::rewrite::shortlex_compare;
///
/// assert_eq!(shortlex_compare(&[1, 2], &[1, 1, 1]), Ordering::Less);
/// assert_eq!(
///     shortlex_compare(&[1, 3, 2, 4, 3], &[1, 3, 2, 4, 5]),
///     Ordering::Less
/// );
/// ```
pub fn shortlex_compare(u: &[usize], v: &[usize]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

/// A single oriented rewrite rule `lhs → rhs` with `rhs` ShortLex-smaller
/// than `lhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Rule {
    /// Pattern to replace (never empty).
    pub lhs: Vec<usize>,
    /// Replacement, strictly ShortLex-smaller than `lhs`.
    pub rhs: Vec<usize>,
}

impl Rule {
    /// Build a rule, checking orientation.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] unless `rhs` is strictly
    /// ShortLex-smaller than `lhs`.
    pub fn new(lhs: Vec<usize>, rhs: Vec<usize>) -> Result<Self> {
        if shortlex_compare(&rhs, &lhs) != Ordering::Less {
            return Err(Error::InvalidInput(format!(
                "rule is not ShortLex-oriented: {} -> {}",
                fmt_word(&lhs),
                fmt_word(&rhs)
            )));
        }
        Ok(Rule { lhs, rhs })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", fmt_word(&self.lhs), fmt_word(&self.rhs))
    }
}

fn fmt_word(w: &[usize]) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::Parse(format!("bad letter {tok:?} in rule word")))
        })
        .collect()
}

/// An ordered alphabet `{1, …, degree-1}` together with ShortLex-oriented
/// rewrite rules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteSystem {
    degree: usize,
    rules: Vec<Rule>,
}

impl RewriteSystem {
    /// Build a system over the generators of `S_degree`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidInput`] if any rule uses letters outside
    /// `1..=degree-1` or is mis-oriented.
    pub fn new(degree: usize, rules: Vec<Rule>) -> Result<Self> {
        for rule in &rules {
            for &l in rule.lhs.iter().chain(rule.rhs.iter()) {
                if l == 0 || l + 1 > degree {
                    return Err(Error::InvalidInput(format!(
                        "letter {l} out of range for degree {degree} in rule {rule}"
                    )));
                }
            }
            // Re-check orientation (rules may arrive via struct literal).
            Rule::new(rule.lhs.clone(), rule.rhs.clone())?;
        }
        Ok(RewriteSystem { degree, rules })
    }

    /// Degree of the ambient symmetric group.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The rules, in deterministic order.
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Parse a rule file: one rule per line, `lhs -> rhs`, letters
    /// space-separated, `e` for the empty word. Blank lines and lines
    /// starting with `#` are skipped.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Parse`] on malformed lines and
    /// [`Error::InvalidInput`] on out-of-range letters or mis-orientation.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let mut rules = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("missing '->' in rule line {line:?}")))?;
            rules.push(Rule::new(parse_word(lhs)?, parse_word(rhs)?)?);
        }
        RewriteSystem::new(degree, rules)
    }
}

impl fmt::Display for RewriteSystem {
    /// One rule per line, `lhs -> rhs`, `e` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, rule) in self.rules.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{rule}")?;
        }
        Ok(())
    }
}

/// The defining rewrite rules of `S_n` over `τ_1, …, τ_{n-1}`:
/// `i i → e`, `(i+1) i (i+1) → i (i+1) i`, and `(i+k) i → i (i+k)` for
/// `k > 1`.
///
/// # Errors
///
/// Returns [`Error::InvalidInput`] for `n < 2` (no generators to relate).
///
/// # Examples
///
/// ```
/// use scpp::rewrite::sn_presentation;
///
/// let s = sn_presentation(4).unwrap();
/// assert!(s.rules().iter().any(|r| r.lhs == [3, 1] && r.rhs == [1, 3]));
/// ```
pub fn sn_presentation(n: usize) -> Result<RewriteSystem> {
    if n < 2 {
        return Err(Error::InvalidInput(
            "the presentation needs degree at least 2".into(),
        ));
    }
    let mut rules = Vec::new();
    for i in 1..n {
        rules.push(Rule::new(vec![i, i], vec![])?);
    }
    for i in 1..n.saturating_sub(1) {
        rules.push(Rule::new(vec![i + 1, i, i + 1], vec![i, i + 1, i])?);
    }
    for i in 1..n {
        for k in 2..n - i {
            rules.push(Rule::new(vec![i + k, i], vec![i, i + k])?);
        }
    }
    RewriteSystem::new(n, rules)
}

/// First position at which `pattern` occurs in `word`, if any.
fn find_subword(word: &[usize], pattern: &[usize]) -> Option<usize> {
    if pattern.len() > word.len() {
        return None;
    }
    (0..=word.len() - pattern.len()).find(|&p| &word[p..p + pattern.len()] == pattern)
}

/// Core reduction loop on raw letter vectors.
fn reduce_letters(rules: &[Rule], w: &[usize]) -> Vec<usize> {
    let mut word = w.to_vec();
    loop {
        // Candidates: (position of leftmost match, rule). Selection is the
        // three-stage tie-break: leftmost position, then ShortLex-smallest
        // lhs, then ShortLex-smallest rhs.
        let mut best: Option<(usize, &Rule)> = None;
        for rule in rules {
            if let Some(pos) = find_subword(&word, &rule.lhs) {
                let better = match best {
                    None => true,
                    Some((bp, br)) => {
                        pos < bp
                            || (pos == bp
                                && shortlex_compare(&rule.lhs, &br.lhs)
                                    .then_with(|| shortlex_compare(&rule.rhs, &br.rhs))
                                    == Ordering::Less)
                    }
                };
                if better {
                    best = Some((pos, rule));
                }
            }
        }
        match best {
            None => return word,
            Some((pos, rule)) => {
                word.splice(pos..pos + rule.lhs.len(), rule.rhs.iter().copied());
                ops::bump(1);
            }
        }
    }
}

/// Reduce a word to an irreducible word by repeatedly applying the
/// ShortLex-smallest rule at the leftmost matching position.
///
/// On a completed system the result is the unique canonical representative
/// of the word's permutation; on an incomplete system it is merely
/// deterministic and irreducible.
///
/// # Errors
///
/// Returns [`Error::InvalidInput`] on a degree mismatch between the word
/// and the system.
///
/// # Examples
///
/// ```
/// use scpp::perm::GenWord;
/// use scpp::rewrite::{reduce, sn_presentation};
///
/// let s = sn_presentation(5).unwrap();
/// let w = GenWord::parse(5, "3 1").unwrap();
/// assert_eq!(reduce(&s, &w).unwrap().to_string(), "1 3");
/// let w = GenWord::parse(5, "2 1 2").unwrap();
/// assert_eq!(reduce(&s, &w).unwrap().to_string(), "1 2 1");
/// ```
pub fn reduce(system: &RewriteSystem, w: &GenWord) -> Result<GenWord> {
    if w.degree() != system.degree() {
        return Err(Error::InvalidInput(format!(
            "word degree {} does not match system degree {}",
            w.degree(),
            system.degree()
        )));
    }
    GenWord::new(system.degree(), reduce_letters(&system.rules, w.letters()))
}

/// All critical pairs arising from `r1` overlapping `r2`.
///
/// Covered cases: a nonempty suffix of `r1.lhs` equal to a prefix of
/// `r2.lhs` (including whole-word overlap for distinct rules with equal
/// lhs), and `r2.lhs` occurring strictly inside `r1.lhs`. The symmetric
/// cases come from the caller visiting pairs in both orders.
fn critical_pairs(r1: &Rule, r2: &Rule, same_rule: bool) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (u1, v1) = (&r1.lhs, &r1.rhs);
    let (u2, v2) = (&r2.lhs, &r2.rhs);
    let mut out = Vec::new();

    for l in 1..=u1.len().min(u2.len()) {
        if u1[u1.len() - l..] != u2[..l] {
            continue;
        }
        if l == u1.len() && l == u2.len() {
            // Identical left-hand sides.
            if !same_rule {
                out.push((v1.clone(), v2.clone()));
            }
            continue;
        }
        // Overlap word u1[..len-l] · u2: reduce the left occurrence with
        // r1 or the right occurrence with r2.
        let mut a = v1.clone();
        a.extend_from_slice(&u2[l..]);
        let mut b = u1[..u1.len() - l].to_vec();
        b.extend_from_slice(v2);
        out.push((a, b));
    }

    if u2.len() < u1.len() {
        // Strict interior inclusions; the boundary positions p = 0 and
        // p = |u1| - |u2| are covered by the overlap loop in one order or
        // the other.
        for p in 1..u1.len() - u2.len() {
            if &u1[p..p + u2.len()] == u2.as_slice() {
                let mut b = u1[..p].to_vec();
                b.extend_from_slice(v2);
                b.extend_from_slice(&u1[p + u2.len()..]);
                out.push((v1.clone(), b));
            }
        }
    }
    out
}

/// Orient a resolved-but-unequal critical pair into a rule.
fn orient(a: Vec<usize>, b: Vec<usize>) -> Rule {
    match shortlex_compare(&a, &b) {
        Ordering::Greater => Rule { lhs: a, rhs: b },
        Ordering::Less => Rule { lhs: b, rhs: a },
        Ordering::Equal => unreachable!("caller filters equal pairs"),
    }
}

/// Normalize right-hand sides, drop duplicates, and collapse rules whose
/// lhs the other rules already reduce. Returns `true` if anything changed.
fn inter_reduce(rules: &mut Vec<Rule>) -> bool {
    let mut changed = false;

    // Normalize each rhs against the full system. A rule's own lhs can
    // never occur in its rhs (the rhs is strictly smaller), so
    // self-application is impossible.
    let snapshot = rules.clone();
    for rule in rules.iter_mut() {
        let r = reduce_letters(&snapshot, &rule.rhs);
        if r != rule.rhs {
            rule.rhs = r;
            changed = true;
        }
    }

    let before = rules.len();
    rules.sort();
    rules.dedup();
    changed |= rules.len() != before;

    // Collapse: a rule whose sides the remaining rules already join is
    // redundant.
    let mut i = 0;
    while i < rules.len() {
        let mut others: Vec<Rule> = rules.clone();
        others.remove(i);
        let l = reduce_letters(&others, &rules[i].lhs);
        if l != rules[i].lhs && l == reduce_letters(&others, &rules[i].rhs) {
            rules.remove(i);
            changed = true;
        } else {
            i += 1;
        }
    }
    changed
}

/// Complete a ShortLex-oriented rewrite system by the Knuth–Bendix
/// procedure: resolve every critical pair, orient disagreements into new
/// rules, and inter-reduce, until every overlap is joinable.
///
/// The result is confluent and terminating, so reduction in it computes
/// canonical representatives. The rule list is sorted for determinism.
///
/// # Errors
///
/// Returns [`Error::CompletionCap`] after [`COMPLETION_CAP`] rule
/// additions (the procedure always terminates for finite groups, so the
/// cap signals a mis-use, not a resource limit to tune).
///
/// # Examples
///
/// ```
/// use scpp::rewrite::{knuth_bendix_complete, sn_presentation};
///
/// let complete = knuth_bendix_complete(&sn_presentation(3).unwrap()).unwrap();
/// // 11 → e, 22 → e, 212 → 121, plus the completion-derived rules.
/// assert!(complete.rules().len() >= 3);
/// ```
pub fn knuth_bendix_complete(system: &RewriteSystem) -> Result<RewriteSystem> {
    let mut rules: Vec<Rule> = system.rules.clone();
    rules.sort();
    rules.dedup();
    let mut additions = 0usize;

    loop {
        let mut added = false;
        let snapshot = rules.clone();
        for (i, r1) in snapshot.iter().enumerate() {
            for (j, r2) in snapshot.iter().enumerate() {
                for (a, b) in critical_pairs(r1, r2, i == j) {
                    let a = reduce_letters(&rules, &a);
                    let b = reduce_letters(&rules, &b);
                    if a == b {
                        continue;
                    }
                    let rule = orient(a, b);
                    if !rules.contains(&rule) {
                        rules.push(rule);
                        added = true;
                        additions += 1;
                        if additions > COMPLETION_CAP {
                            return Err(Error::CompletionCap(COMPLETION_CAP));
                        }
                        // Dedup and inter-reduce after each addition to keep
                        // the live system small.
                        inter_reduce(&mut rules);
                    }
                }
            }
        }
        let cleaned = inter_reduce(&mut rules);
        if !added && !cleaned {
            break;
        }
    }

    rules.sort();
    RewriteSystem::new(system.degree, rules)
}

static COMPLETED: Lazy<Mutex<HashMap<usize, Arc<RewriteSystem>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The completed (confluent) system for `S_n`, built once per degree and
/// cached for the process lifetime.
///
/// # Errors
///
/// Propagates [`sn_presentation`] and [`knuth_bendix_complete`] errors;
/// degree 1 yields the empty system (no generators).
pub fn completed_sn_system(n: usize) -> Result<Arc<RewriteSystem>> {
    if n == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    let mut cache = COMPLETED.lock().expect("completed-system cache poisoned");
    if let Some(sys) = cache.get(&n) {
        return Ok(Arc::clone(sys));
    }
    let sys = if n == 1 {
        Arc::new(RewriteSystem::new(1, Vec::new())?)
    } else {
        Arc::new(knuth_bendix_complete(&sn_presentation(n)?)?)
    };
    cache.insert(n, Arc::clone(&sys));
    Ok(sys)
}

/// Canonical form of a generator word: the unique ShortLex-least word
/// evaluating to the same permutation, computed by reduction in the cached
/// completed system for the word's degree.
///
/// # Errors
///
/// Propagates completion errors (degree 0, cap).
///
/// # Examples
///
/// ```
/// use scpp::perm::GenWord;
/// use scpp::rewrite::canonical_form_sn;
///
/// let w = GenWord::parse(3, "2 1 2").unwrap();
/// assert_eq!(canonical_form_sn(&w).unwrap().to_string(), "1 2 1");
/// ```
pub fn canonical_form_sn(w: &GenWord) -> Result<GenWord> {
    let sys = completed_sn_system(w.degree())?;
    reduce(&sys, w)
}

/// Canonical word of a permutation: expand any cycle decomposition into a
/// word and reduce it to canonical form.
///
/// # Errors
///
/// Propagates completion errors.
pub fn canonical_word_of_permutation(p: &Permutation) -> Result<GenWord> {
    let w = cycles_to_genword(&cycle_decomposition(p));
    canonical_form_sn(&w)
}

/// Enumerate every irreducible word of a system, shortest first, stopping
/// with an error if more than `limit` exist.
///
/// Only meaningful on completed systems for finite groups, where the
/// irreducible words are exactly the canonical representatives.
///
/// # Errors
///
/// Returns [`Error::StepLimit`] if the count exceeds `limit` (for
/// non-confluent or infinite-language systems).
pub fn irreducible_words(system: &RewriteSystem, limit: usize) -> Result<Vec<Vec<usize>>> {
    let mut found: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for l in 1..system.degree() {
                let mut cand = w.clone();
                cand.push(l);
                // The prefix is irreducible, so any match must end at the
                // last letter: check suffixes only.
                let reducible = system.rules.iter().any(|r| {
                    r.lhs.len() <= cand.len() && cand[cand.len() - r.lhs.len()..] == r.lhs[..]
                });
                if !reducible {
                    found.push(cand.clone());
                    if found.len() > limit {
                        return Err(Error::StepLimit(limit as u64));
                    }
                    next.push(cand);
                }
            }
        }
        frontier = next;
    }
    Ok(found)
}
