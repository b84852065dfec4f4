mod common;

use common::{any_word, brute_force_words};
use gss_core::invariants::enumerate_words;
use gss_core::{factor_aword, parse_sigma, ClassTag, Error};
use proptest::prelude::*;

proptest! {
    #[test]
    fn expand_then_factor_is_a_rotation(w in any_word(6, 5)) {
        let back = factor_aword(&w.expand()).unwrap();
        prop_assert_eq!(back.canonical(), w.canonical());
    }

    #[test]
    fn display_parse_round_trip(w in any_word(6, 9)) {
        prop_assert_eq!(parse_sigma(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn canonical_is_rotation_invariant(w in any_word(6, 4), r in 0usize..6) {
        let rotated = w.rotate(r);
        prop_assert_eq!(rotated.canonical(), w.canonical());
        prop_assert!(w.canonical().is_canonical());
        prop_assert!(rotated.expand().is_rotation_of(&w.expand()));
    }

    #[test]
    fn sigma_n_counts_lengths(w in any_word(6, 6)) {
        let k: usize = w.singular_lengths().iter().sum();
        prop_assert_eq!(w.sigma_n(), (2 * w.total_length() + k) as u64);
        prop_assert_eq!(w.expand().len(), w.total_length());
    }

    #[test]
    fn class_follows_part_counts(w in any_word(6, 4)) {
        let tag = w.classify().tag;
        prop_assert_eq!(tag == ClassTag::Enoki, w.sigma_n() == 2 * w.total_length() as u64);
        let ih = matches!(tag, ClassTag::EvenInoueHirzebruch | ClassTag::OddInoueHirzebruch);
        prop_assert_eq!(ih, w.sigma_n() == 3 * w.total_length() as u64);
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=9 {
        let ours: std::collections::BTreeSet<String> =
            enumerate_words(n).filter(|w| w.total_length() == n).map(|w| w.to_string()).collect();
        assert_eq!(ours, brute_force_words(n), "n = {n}");
    }
}

#[test]
fn enumeration_is_sorted_by_length_and_canonical() {
    let words: Vec<_> = enumerate_words(8).collect();
    assert!(words.windows(2).all(|p| p[0].total_length() <= p[1].total_length()));
    assert!(words.iter().all(|w| w.is_canonical()));
}

#[test]
fn parse_errors() {
    assert!(matches!(parse_sigma(""), Err(Error::Empty)));
    assert!(matches!(parse_sigma("s0"), Err(Error::ZeroLength { .. })));
    assert!(matches!(parse_sigma("r2 s1 r1"), Err(Error::AdjacentRegular { .. })));
    assert!(matches!(parse_sigma("s1 x2"), Err(Error::Syntax { position: 3, .. })));
    assert_eq!(parse_sigma("s1,r2").unwrap(), parse_sigma(" s1  r2 ").unwrap());
}
