//! Property-based tests: group laws, homomorphisms, round-trips, and
//! normal-form invariants over randomly generated inputs with shrinking.

use proptest::prelude::*;

use scpp::braid::{braid_equal, exponent_sum, project, rgnf, BraidWord};
use scpp::commutator::scpp_solve;
use scpp::perm::{
    cycle_decomposition, cycles_to_permutation, word_to_permutation, GenWord, Permutation,
};
use scpp::rewrite::{canonical_form_sn, shortlex_compare};

/// A random permutation of a degree in `2..=8`.
fn permutations() -> impl Strategy<Value = Permutation> {
    (2usize..=8)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

/// A pair of same-degree random permutations.
fn permutation_pairs() -> impl Strategy<Value = (Permutation, Permutation)> {
    (2usize..=8).prop_flat_map(|n| {
        let one = Just((1..=n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::from_images(images).unwrap());
        (one.clone(), one)
    })
}

/// A random generator word: degree in `2..=8`, length up to 24.
fn gen_words() -> impl Strategy<Value = GenWord> {
    (2usize..=8).prop_flat_map(|n| {
        proptest::collection::vec(1usize..n, 0..=24)
            .prop_map(move |letters| GenWord::new(n, letters).unwrap())
    })
}

/// A pair of same-degree generator words.
fn gen_word_pairs() -> impl Strategy<Value = (GenWord, GenWord)> {
    (2usize..=8).prop_flat_map(|n| {
        let one = proptest::collection::vec(1usize..n, 0..=16)
            .prop_map(move |letters| GenWord::new(n, letters).unwrap());
        (one.clone(), one)
    })
}

/// A random signed braid word: strand count in `2..=5`, length up to 20.
fn braid_words() -> impl Strategy<Value = BraidWord> {
    (2usize..=5).prop_flat_map(|n| {
        proptest::collection::vec((1i32..n as i32, proptest::bool::ANY), 0..=20).prop_map(
            move |pairs| {
                let letters = pairs
                    .into_iter()
                    .map(|(m, neg)| if neg { -m } else { m })
                    .collect();
                BraidWord::new(n, letters).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn composition_is_associative((p, q) in permutation_pairs(), seed in 0usize..1000) {
        // Derive a third same-degree permutation from the pair.
        let r = p.compose(&q).invert();
        let _ = seed;
        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
    }

    #[test]
    fn inverses_cancel_on_both_sides(p in permutations()) {
        let id = Permutation::identity(p.degree());
        prop_assert_eq!(p.compose(&p.invert()), id.clone());
        prop_assert_eq!(p.invert().compose(&p), id);
    }

    #[test]
    fn parity_is_a_homomorphism((p, q) in permutation_pairs()) {
        prop_assert_eq!(p.compose(&q).is_even(), p.is_even() == q.is_even());
    }

    #[test]
    fn word_concatenation_is_composition((u, v) in gen_word_pairs()) {
        // The right word acts first, so concatenation composes left-after-right.
        let concat = u.concat(&v);
        prop_assert_eq!(
            word_to_permutation(&concat),
            word_to_permutation(&u).compose(&word_to_permutation(&v))
        );
    }

    #[test]
    fn reversal_inverts_generator_words(w in gen_words()) {
        prop_assert_eq!(
            word_to_permutation(&w.reverse()),
            word_to_permutation(&w).invert()
        );
    }

    #[test]
    fn cycle_decomposition_round_trips(p in permutations()) {
        let cycles = cycle_decomposition(&p);
        prop_assert!(cycles.is_disjoint());
        prop_assert_eq!(cycles_to_permutation(&cycles), p);
    }

    #[test]
    fn canonical_forms_preserve_the_element_and_never_grow(w in gen_words()) {
        let canonical = canonical_form_sn(&w).unwrap();
        prop_assert_eq!(word_to_permutation(&canonical), word_to_permutation(&w));
        prop_assert!(canonical.len() <= w.len());
        // Canonical means: no strictly ShortLex-smaller equivalent came out.
        prop_assert_ne!(
            shortlex_compare(w.letters(), canonical.letters()),
            std::cmp::Ordering::Less
        );
    }

    #[test]
    fn scpp_solves_every_squared_permutation(p in permutations()) {
        // p² is always even, and squares range over all of A_n as p varies.
        let sigma = p.compose(&p);
        let solution = scpp_solve(&sigma).unwrap();
        let x = word_to_permutation(&solution.x);
        let y = word_to_permutation(&solution.y);
        let commutator = x
            .compose(&y)
            .compose(&x.invert())
            .compose(&y.invert());
        prop_assert_eq!(commutator, sigma);
        prop_assert!(x.is_n_cycle());
    }

    #[test]
    fn rgnf_is_stable_under_free_insertion(
        b in braid_words(),
        pos_pick in 0usize..1000,
        magnitude_pick in 0usize..1000,
        negate in proptest::bool::ANY,
    ) {
        let mut letters = b.letters().to_vec();
        let pos = pos_pick % (letters.len() + 1);
        let magnitude = (1 + magnitude_pick % (b.strands() - 1)) as i32;
        let letter = if negate { -magnitude } else { magnitude };
        letters.splice(pos..pos, [letter, -letter]);
        let padded = BraidWord::new(b.strands(), letters).unwrap();
        prop_assert_eq!(rgnf(&padded).unwrap(), rgnf(&b).unwrap());
    }

    #[test]
    fn rgnf_reassembly_preserves_element_and_exponent_sum(b in braid_words()) {
        let back = rgnf(&b).unwrap().reassemble();
        prop_assert_eq!(exponent_sum(&back), exponent_sum(&b));
        prop_assert!(braid_equal(&back, &b).unwrap());
        // Projection commutes with everything above.
        prop_assert_eq!(
            word_to_permutation(&project(&back)),
            word_to_permutation(&project(&b))
        );
    }

    #[test]
    fn braid_inverses_cancel(b in braid_words()) {
        let empty = BraidWord::empty(b.strands()).unwrap();
        prop_assert!(braid_equal(&b.concat(&b.inverse()).unwrap(), &empty).unwrap());
        prop_assert!(braid_equal(&b.inverse().concat(&b).unwrap(), &empty).unwrap());
    }

    #[test]
    fn braid_words_round_trip_wire_format(b in braid_words()) {
        prop_assert_eq!(BraidWord::parse(b.strands(), &b.to_string()).unwrap(), b);
    }

    #[test]
    fn gen_words_round_trip_wire_format(w in gen_words()) {
        prop_assert_eq!(GenWord::parse(w.degree(), &w.to_string()).unwrap(), w);
    }
}
