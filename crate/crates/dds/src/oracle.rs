//! Exhaustive reference solver: plain minimax over every legal play sequence,
//! with no pruning, no caching, and no equivalence reasoning. Exponential in
//! the number of cards, so only usable on small endings (five cards per hand
//! or fewer) — which is exactly its job: an independent path for checking the
//! real solver. Deliberately shares no search code with [`crate::Solver`].

use bridge_core::{Seat, Side, Strain};

/// A card on the table: seat index and dense card index (suit*13 + rank-2).
type Play = (usize, u32);

/// Exact tricks the leader's side can take from an ending with equal hand
/// sizes, both sides playing perfectly.
pub fn max_tricks(hands: [u64; 4], strain: Strain, leader: Seat) -> u8 {
    let n = hands[0].count_ones();
    assert!(hands.iter().all(|h| h.count_ones() == n));
    assert!(n <= 5, "oracle is exponential; refuse more than 5 cards per hand");
    let trump = strain.trump().map(|s| s.index());
    let mut hands = hands;
    minimax(&mut hands, trump, &mut Vec::new(), leader.index(), leader.side())
}

/// Future tricks `max_side` wins from here under optimal play by both sides.
fn minimax(
    hands: &mut [u64; 4],
    trump: Option<usize>,
    trick: &mut Vec<Play>,
    to_play: usize,
    max_side: Side,
) -> u8 {
    if hands.iter().all(|&h| h == 0) {
        return 0;
    }
    let legal = legal_cards(hands[to_play], trick);
    let maximizing = Seat::from_index(to_play).side() == max_side;
    let mut best: Option<u8> = None;
    for card in legal {
        hands[to_play] &= !(1u64 << card);
        trick.push((to_play, card));
        let value = if trick.len() == 4 {
            let winner = trick_winner(trick, trump);
            let won = (Seat::from_index(winner).side() == max_side) as u8;
            let mut rest = Vec::new();
            std::mem::swap(trick, &mut rest);
            let v = won + minimax(hands, trump, trick, winner, max_side);
            std::mem::swap(trick, &mut rest);
            v
        } else {
            minimax(hands, trump, trick, (to_play + 1) % 4, max_side)
        };
        trick.pop();
        hands[to_play] |= 1u64 << card;
        best = Some(match best {
            None => value,
            Some(b) if maximizing => b.max(value),
            Some(b) => b.min(value),
        });
    }
    best.expect("a player with cards always has a legal move")
}

fn legal_cards(hand: u64, trick: &[Play]) -> Vec<u32> {
    if let Some(&(_, led)) = trick.first() {
        let suit = led / 13;
        let in_suit: Vec<u32> = (suit * 13..(suit + 1) * 13)
            .filter(|&c| hand & (1u64 << c) != 0)
            .collect();
        if !in_suit.is_empty() {
            return in_suit;
        }
    }
    (0..52).filter(|&c| hand & (1u64 << c) != 0).collect()
}

fn trick_winner(trick: &[Play], trump: Option<usize>) -> usize {
    // The running winner is always of the led suit or a trump, so a card
    // takes over iff it out-ranks the winner in the same suit or trumps a
    // non-trump winner.
    let mut winner = trick[0];
    for &(seat, card) in &trick[1..] {
        let (c_suit, w_suit) = (card as usize / 13, winner.1 as usize / 13);
        let takes = if c_suit == w_suit { card > winner.1 } else { trump == Some(c_suit) };
        if takes {
            winner = (seat, card);
        }
    }
    winner.0
}
