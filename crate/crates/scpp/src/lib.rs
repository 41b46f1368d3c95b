//! Constructive commutator decompositions in symmetric and braid groups.
//!
//! Every element of the alternating group `A_n` is a commutator: given an
//! even permutation `σ`, this crate produces explicit words `x`, `y` in the
//! adjacent transpositions with `σ = x y x⁻¹ y⁻¹`. The same construction
//! lifts to the braid group `B_n`, where the crate recognizes commutators
//! of permutation braids, factors suitable braids through the pure braid
//! group, and runs a seeded probabilistic search for general commutator
//! witnesses. Supporting machinery — ShortLex rewriting with Knuth–Bendix
//! completion, right-greedy braid normal forms, and a small deterministic
//! Turing-machine interpreter used for cost narratives — is exposed as
//! ordinary library modules.
//!
//! # Orientation conventions
//!
//! All products compose **right to left**: in a generator word the
//! rightmost letter acts first, and in a cycle list the rightmost cycle
//! acts first. Permutations store images (`σ(i)` for point `i`), points are
//! 1-based, and cycles are written `i ↦ σ(i)`. See [`perm`] for details.
//!
//! # Quick start
//!
//! ```
//! use scpp::commutator::scpp_solve;
//! use scpp::perm::{word_to_permutation, GenWord};
//!
//! // The permutation of the word 6 4 1 2 in S_7 (rightmost letter first).
//! let sigma = word_to_permutation(&GenWord::parse(7, "6 4 1 2").unwrap());
//! let sol = scpp_solve(&sigma).unwrap();
//! let x = word_to_permutation(&sol.x);
//! let y = word_to_permutation(&sol.y);
//! let commutator = x.compose(&y).compose(&x.invert()).compose(&y.invert());
//! assert_eq!(commutator, sigma);
//! ```

pub mod bench;
pub mod braid;
pub mod braid_scpp;
pub mod commutator;
pub mod error;
pub mod ops;
pub mod perm;
pub mod rewrite;
pub mod turing;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    //! Keeps the guide's code samples compiling: every fenced Rust block in
    //! `book/src` runs as a doctest here.
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(permutations, "../../../book/src/permutations.md");
    chapter!(commutators, "../../../book/src/commutators.md");
    chapter!(rewriting, "../../../book/src/rewriting.md");
    chapter!(braids, "../../../book/src/braids.md");
    chapter!(braid_commutators, "../../../book/src/braid-commutators.md");
    chapter!(turing, "../../../book/src/turing.md");
    chapter!(cli, "../../../book/src/cli.md");
}
