//! Serialization round-trips over seeded random deals, plus property checks
//! on the flat encoding.

use bridge_core::{
    flat::{flat_encode, FLAT_WIDTH},
    predicates, Card, Deal, Hand, Label, LabeledExample, Seat, Suit, Vulnerability,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_deal(seed: u64) -> Deal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cards: Vec<Card> = (0..52).map(Card::from_index).collect();
    cards.shuffle(&mut rng);
    let hands = [
        Hand::from_cards(&cards[0..13]).unwrap(),
        Hand::from_cards(&cards[13..26]).unwrap(),
        Hand::from_cards(&cards[26..39]).unwrap(),
        Hand::from_cards(&cards[39..52]).unwrap(),
    ];
    let vul = Vulnerability::ALL[(seed % 4) as usize];
    Deal::new(hands, vul).unwrap()
}

#[test]
fn deal_line_roundtrip_over_seeded_deals() {
    for seed in 0..1000u64 {
        let deal = random_deal(seed);
        let line = deal.to_string();
        let parsed: Deal = line.parse().unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(parsed, deal, "seed {seed}");
    }
}

#[test]
fn suit_lengths_partition_the_deck() {
    for seed in 0..200u64 {
        let deal = random_deal(seed);
        for suit in Suit::ALL {
            let total: u8 = Seat::ALL.iter().map(|&s| deal.hand(s).suit_len(suit)).sum();
            assert_eq!(total, 13);
        }
        let hcp_total: u32 = Seat::ALL
            .iter()
            .map(|&s| predicates::hcp(&deal.hand(s)) as u32)
            .sum();
        assert_eq!(hcp_total, 40);
    }
}

proptest! {
    #[test]
    fn hand_roundtrip(seed in 0u64..10_000) {
        let deal = random_deal(seed);
        let hand = deal.hand(Seat::South);
        let reparsed: Hand = hand.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, hand);
    }

    #[test]
    fn flat_row_shape(seed in 0u64..10_000) {
        let deal = random_deal(seed);
        let example = LabeledExample::new(deal.hand(Seat::West), deal.vul, Label::Bid);
        let row = flat_encode(&example);
        prop_assert_eq!(row.len(), FLAT_WIDTH);
        // 13 rank slots are non-zero, class code is 1, vul code varies.
        let rank_nonzero = row[2..].iter().filter(|&&v| v != 0).count();
        prop_assert_eq!(rank_nonzero, 13);
        prop_assert_eq!(row[1], 1u8);
        // Within each suit block the non-zero prefix is strictly decreasing.
        for si in 0..4 {
            let block = &row[2 + si * 13..2 + (si + 1) * 13];
            let held: Vec<u8> = block.iter().copied().take_while(|&v| v != 0).collect();
            for w in held.windows(2) {
                prop_assert!(w[0] > w[1]);
            }
            for &v in &block[held.len()..] {
                prop_assert_eq!(v, 0u8);
            }
        }
    }
}
