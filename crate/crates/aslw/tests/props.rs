//! Randomized property suite for the word-combinatorics layer.
//!
//! Every structural law exported from [`aslw::words::laws`] is exercised here
//! over random alphabets (2–5 letters), random total orders on those letters,
//! and random words up to length 12. Preconditions are established by
//! rotating random words into Lyndon position (`lyndon_rotation`) and by
//! `prop_assume!` filters, so each law is tested on the full variety of
//! inputs it is stated for — not just on hand-picked fixtures.
//!
//! The factorization routines are additionally cross-checked against
//! definition-level reimplementations: `is_lyndon` against the raw
//! every-proper-suffix comparison, and Duval's algorithm against the greedy
//! longest-Lyndon-prefix factorizer (exhaustively on short ternary words,
//! randomly elsewhere).

use std::cmp::Ordering;

use proptest::prelude::*;

use aslw::words::{
    canonical_factorization, compare, costandard_factorization, is_lyndon, laws, lyndon_rotation,
    standard_factorization, AlphabetOrder, Word,
};

// ============================================================================
// Strategies
// ============================================================================

/// A uniformly random total order on the letters `0..n`.
fn shuffled_order(n: usize) -> impl Strategy<Value = AlphabetOrder> {
    Just((0..n as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|seq| AlphabetOrder::from_ascending(&seq).expect("a permutation of 0..n"))
}

/// A nonempty random word over the letters `0..n`.
fn word_over(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..n as u8, 1..=max_len)
        .prop_map(|ids| Word::from_ids(&ids).expect("nonempty"))
}

/// An alphabet size, an order on it, and one word over it.
fn scenario(max_len: usize) -> impl Strategy<Value = (AlphabetOrder, Word)> {
    (2usize..=5).prop_flat_map(move |n| (shuffled_order(n), word_over(n, max_len)))
}

/// An alphabet size, an order on it, and two independent words over it.
fn scenario_pair(max_len: usize) -> impl Strategy<Value = (AlphabetOrder, Word, Word)> {
    (2usize..=5)
        .prop_flat_map(move |n| (shuffled_order(n), word_over(n, max_len), word_over(n, max_len)))
}

/// An alphabet size, an order, three words over it.
fn scenario_triple(max_len: usize) -> impl Strategy<Value = (AlphabetOrder, Word, Word, Word)> {
    (2usize..=5).prop_flat_map(move |n| {
        (shuffled_order(n), word_over(n, max_len), word_over(n, max_len), word_over(n, max_len))
    })
}

/// Rotates both words into Lyndon position and returns them in strictly
/// increasing order, or `None` when either word is periodic or the rotations
/// coincide.
fn increasing_lyndon_pair(a: &Word, b: &Word, order: &AlphabetOrder) -> Option<(Word, Word)> {
    let (la, _) = lyndon_rotation(a, order)?;
    let (lb, _) = lyndon_rotation(b, order)?;
    match compare(&la, &lb, order) {
        Ordering::Less => Some((la, lb)),
        Ordering::Greater => Some((lb, la)),
        Ordering::Equal => None,
    }
}

/// The greedy longest-Lyndon-prefix factorizer: a definition-level
/// alternative to Duval's algorithm (quadratic, but independent of it).
fn longest_lyndon_prefix_factorization(w: &Word, order: &AlphabetOrder) -> Vec<Word> {
    let mut factors = Vec::new();
    let mut rest = w.clone();
    loop {
        let cut = (1..=rest.len())
            .rev()
            .find(|&c| is_lyndon(&rest.subword(0..c), order))
            .expect("single letters are Lyndon");
        factors.push(rest.subword(0..cut));
        if cut == rest.len() {
            return factors;
        }
        rest = rest.subword(cut..rest.len());
    }
}

// ============================================================================
// Order and Lyndon-test fundamentals
// ============================================================================

proptest! {
    #[test]
    fn compare_is_a_total_order((order, a, b, c) in scenario_triple(12)) {
        prop_assert_eq!(compare(&a, &a, &order), Ordering::Equal);
        prop_assert_eq!(compare(&a, &b, &order), compare(&b, &a, &order).reverse());
        if compare(&a, &b, &order) != Ordering::Greater
            && compare(&b, &c, &order) != Ordering::Greater
        {
            prop_assert_ne!(compare(&a, &c, &order), Ordering::Greater);
        }
    }

    #[test]
    fn proper_prefixes_compare_smaller((order, w) in scenario(12)) {
        for cut in 1..w.len() {
            prop_assert_eq!(compare(&w.subword(0..cut), &w, &order), Ordering::Less);
        }
    }

    #[test]
    fn lyndon_test_agrees_with_the_suffix_definition((order, w) in scenario(12)) {
        let by_definition = (1..w.len())
            .all(|s| compare(&w, &w.subword(s..w.len()), &order) == Ordering::Less);
        prop_assert_eq!(is_lyndon(&w, &order), by_definition);
    }

    #[test]
    fn lyndon_words_start_with_their_smallest_letter((order, w) in scenario(12)) {
        let Some((l, offset)) = lyndon_rotation(&w, &order) else {
            // Periodic words have no Lyndon rotation; nothing to check.
            return Ok(());
        };
        prop_assert_eq!(&l, &w.rotated_left(offset));
        prop_assert!(is_lyndon(&l, &order));
        let smallest = *w
            .letters()
            .iter()
            .min_by(|&&x, &&y| order.cmp_letters(x, y))
            .expect("w is nonempty");
        prop_assert_eq!(l.letters()[0], smallest);
    }
}

// ============================================================================
// Duval's algorithm
// ============================================================================

proptest! {
    #[test]
    fn duval_factors_are_nonincreasing_lyndon_and_rebuild_the_word(
        (order, w) in scenario(12),
    ) {
        let factors = canonical_factorization(&w, &order);
        prop_assert!(factors.iter().all(|f| is_lyndon(f, &order)));
        prop_assert!(factors
            .windows(2)
            .all(|p| compare(&p[0], &p[1], &order) != Ordering::Less));
        let rebuilt = factors
            .iter()
            .skip(1)
            .fold(factors[0].clone(), |acc, f| acc.concat(f));
        prop_assert_eq!(rebuilt, w);
    }

    #[test]
    fn duval_matches_the_greedy_longest_prefix_factorizer((order, w) in scenario(12)) {
        prop_assert_eq!(
            canonical_factorization(&w, &order),
            longest_lyndon_prefix_factorization(&w, &order),
        );
    }
}

/// Exhaustive cross-check of Duval against the greedy factorizer: every word
/// of length ≤ 6 over three letters, under all six orders.
#[test]
fn duval_agrees_with_brute_force_on_short_ternary_words() {
    let orders = AlphabetOrder::all(3);
    let mut checked = 0usize;
    for len in 1..=6usize {
        for code in 0..3usize.pow(len as u32) {
            let mut ids = Vec::with_capacity(len);
            let mut c = code;
            for _ in 0..len {
                ids.push((c % 3) as u8);
                c /= 3;
            }
            let w = Word::from_ids(&ids).unwrap();
            for order in &orders {
                assert_eq!(
                    canonical_factorization(&w, order),
                    longest_lyndon_prefix_factorization(&w, order),
                    "Duval disagreed on {w} under {}",
                    order.descriptor(),
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 6 * (3 + 9 + 27 + 81 + 243 + 729));
}

// ============================================================================
// Factorization laws: single Lyndon words
// ============================================================================

proptest! {
    #[test]
    fn costandard_right_factor_is_the_smallest_suffix((order, w) in scenario(12)) {
        let Some((l, _)) = lyndon_rotation(&w, &order) else { return Ok(()) };
        prop_assume!(l.len() >= 2);
        prop_assert!(laws::right_factor_is_smallest_proper_suffix(&l, &order));
    }

    #[test]
    fn costandard_nesting_dominates((order, w) in scenario(12)) {
        let Some((l, _)) = lyndon_rotation(&w, &order) else { return Ok(()) };
        prop_assume!(l.len() >= 2);
        let (left, _) = costandard_factorization(&l, &order).unwrap();
        prop_assume!(left.len() > 1);
        prop_assert!(laws::right_factor_of_left_part_dominates(&l, &order));
    }

    #[test]
    fn standard_left_factor_is_the_longest_lyndon_prefix((order, w) in scenario(12)) {
        let Some((l, _)) = lyndon_rotation(&w, &order) else { return Ok(()) };
        prop_assume!(l.len() >= 2);
        prop_assert!(laws::left_factor_is_biggest_lyndon_prefix(&l, &order));
    }

    #[test]
    fn standard_nesting_shrinks((order, w) in scenario(12)) {
        let Some((l, _)) = lyndon_rotation(&w, &order) else { return Ok(()) };
        prop_assume!(l.len() >= 2);
        let (_, right) = standard_factorization(&l, &order).unwrap();
        prop_assume!(right.len() > 1);
        prop_assert!(laws::left_factor_of_right_part_shrinks(&l, &order));
    }
}

// ============================================================================
// Factorization laws: concatenations of Lyndon pairs
// ============================================================================

proptest! {
    #[test]
    fn increasing_concatenations_are_lyndon((order, a, b) in scenario_pair(10)) {
        let Some((l1, l2)) = increasing_lyndon_pair(&a, &b, &order) else { return Ok(()) };
        prop_assert!(laws::concat_of_increasing_lyndon_pair_is_lyndon(&l1, &l2, &order));
    }

    #[test]
    fn the_right_factor_lies_on_the_suffix_ladder((order, a, b) in scenario_pair(10)) {
        let Some((l1, l2)) = increasing_lyndon_pair(&a, &b, &order) else { return Ok(()) };
        prop_assert!(laws::right_factor_lies_on_suffix_ladder(&l1, &l2, &order));
    }

    #[test]
    fn the_ladder_alternative_characterizes_costandard_splits(
        (order, a, b) in scenario_pair(10),
    ) {
        let Some((l1, l2)) = increasing_lyndon_pair(&a, &b, &order) else { return Ok(()) };
        prop_assume!(l1.len() > 1);
        prop_assert!(laws::right_factor_ladder_alternative(&l1, &l2, &order));
    }

    #[test]
    fn rotated_splits_exceed_the_concatenation((order, a, b) in scenario_pair(10)) {
        let Some((l1, l2)) = increasing_lyndon_pair(&a, &b, &order) else { return Ok(()) };
        prop_assume!(l1.len() > 1);
        let l = l1.concat(&l2);
        let (_, right) = costandard_factorization(&l, &order).unwrap();
        prop_assume!(right != l2);
        prop_assert!(laws::rotated_splits_exceed(&l1, &l2, &order));
    }

    #[test]
    fn the_prefix_ladder_reaches_the_standard_left_factor(
        (order, a, b) in scenario_pair(10),
    ) {
        let Some((l1, l2)) = increasing_lyndon_pair(&a, &b, &order) else { return Ok(()) };
        prop_assert!(laws::prefix_ladder_reaches_left_factor(&l1, &l2, &order));
    }
}

// ============================================================================
// Factorization laws: splitting one Lyndon word
// ============================================================================

proptest! {
    #[test]
    fn canonical_tail_factors_dominate_the_head(
        (order, w) in scenario(12),
        cut_seed in 0usize..64,
    ) {
        let Some((l, _)) = lyndon_rotation(&w, &order) else { return Ok(()) };
        prop_assume!(l.len() >= 2);
        let cut = 1 + cut_seed % (l.len() - 1);
        let head = l.subword(0..cut);
        let tail = l.subword(cut..l.len());
        prop_assume!(is_lyndon(&head, &order));
        prop_assert!(laws::canonical_tail_factors_dominate_head(&head, &tail, &order));
        prop_assert!(laws::growing_prefixes_stay_lyndon(&head, &tail, &order));
    }

    #[test]
    fn growing_suffixes_stay_lyndon(
        (order, w) in scenario(12),
        cut_seed in 0usize..64,
    ) {
        let Some((l, _)) = lyndon_rotation(&w, &order) else { return Ok(()) };
        prop_assume!(l.len() >= 2);
        let cut = 1 + cut_seed % (l.len() - 1);
        let head = l.subword(0..cut);
        let tail = l.subword(cut..l.len());
        prop_assume!(is_lyndon(&tail, &order));
        prop_assert!(laws::growing_suffixes_stay_lyndon(&head, &tail, &order));
    }
}

// ============================================================================
// Rotation laws
// ============================================================================

proptest! {
    #[test]
    fn lyndon_rotations_cut_at_factor_boundaries((order, w) in scenario(12)) {
        prop_assert!(laws::lyndon_rotation_cuts_at_factor_boundary(&w, &order));
    }

    #[test]
    fn rotations_of_powers_telescope((order, w) in scenario(8), k in 1usize..=4) {
        prop_assert!(laws::rotation_of_power_telescopes(&w, k, &order));
    }
}

// ============================================================================
// Comparison shortcuts
// ============================================================================

proptest! {
    #[test]
    fn comparisons_are_decided_by_the_first_factor((order, a, b) in scenario_pair(12)) {
        let Some((l, _)) = lyndon_rotation(&a, &order) else { return Ok(()) };
        prop_assert!(laws::comparison_decided_by_first_factor(&l, &b, &order));
    }

    #[test]
    fn longer_lyndon_comparisons_are_decided_by_the_left_factor(
        (order, a, b) in scenario_pair(12),
    ) {
        let Some((la, _)) = lyndon_rotation(&a, &order) else { return Ok(()) };
        let Some((lb, _)) = lyndon_rotation(&b, &order) else { return Ok(()) };
        let (short, long) = if la.len() < lb.len() { (la, lb) } else { (lb, la) };
        prop_assume!(short.len() < long.len() && long.len() >= 2);
        prop_assert!(laws::longer_lyndon_decided_by_left_factor(&short, &long, &order));
    }
}
