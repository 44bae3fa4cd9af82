//! Predicate goldens on two fully worked boards (a 4♠ opening by West with
//! the same South hand in both).

use bridge_core::predicates::{
    balance_class, distribution, hcp, longest_suit, nb, nbs, suit_representation, BalanceClass,
};
use bridge_core::{Deal, Rank, Seat, Suit, Vulnerability};

fn board_one() -> Deal {
    "n N:6.AQ93.KQT42.A94 E:T3.J84.A7.QJ8762 S:Q94.KT652.95.KT3 W:AKJ8752.7.J863.5"
        .parse()
        .unwrap()
}

fn board_two() -> Deal {
    "n N:J2.AJ73.AKT6.AJ9 E:7.Q98.QJ74.Q7652 S:Q94.KT652.95.KT3 W:AKT8653.4.832.84"
        .parse()
        .unwrap()
}

#[test]
fn board_one_south_predicates() {
    let south = board_one().hand(Seat::South);
    assert_eq!(hcp(&south), 8);
    assert_eq!(nb(&south, Suit::Hearts), 5);
    assert_eq!(nbs(&south), 3);
    assert_eq!(distribution(&south).lengths(), [5, 3, 3, 2]);
    let rep = suit_representation(&south, Suit::Spades);
    assert_eq!((rep.honors.as_slice(), rep.count), ([Rank::QUEEN].as_slice(), 3));
    assert_eq!(longest_suit(&south), Suit::Hearts);
    assert_eq!(balance_class(&south), BalanceClass::Balanced);
}

#[test]
fn board_one_other_seats() {
    let deal = board_one();
    let west = deal.hand(Seat::West);
    assert_eq!(nbs(&west), 7);
    assert_eq!(hcp(&west), 9);
    assert_eq!(distribution(&west).lengths(), [7, 4, 1, 1]);
    let north = deal.hand(Seat::North);
    assert_eq!(hcp(&north), 15);
    assert_eq!(nbs(&north), 1);
    let rep = suit_representation(&north, Suit::Diamonds);
    assert_eq!(rep.honors, vec![Rank::KING, Rank::QUEEN]);
    assert_eq!(rep.count, 5);
    assert_eq!(deal.vul, Vulnerability::NsOnly);
}

#[test]
fn board_two_west_shape() {
    let deal = board_two();
    let west = deal.hand(Seat::West);
    assert_eq!(nbs(&west), 7);
    assert_eq!(hcp(&west), 7);
    assert_eq!(nb(&west, Suit::Hearts), 1);
    assert_eq!(distribution(&west).lengths(), [7, 3, 2, 1]);
    // Both boards share the same South hand.
    assert_eq!(deal.hand(Seat::South), board_one().hand(Seat::South));
}

#[test]
fn board_two_north_shape() {
    let north = board_two().hand(Seat::North);
    assert_eq!(hcp(&north), 18);
    assert_eq!(nbs(&north), 2);
    assert_eq!(nb(&north, Suit::Hearts), 4);
    assert_eq!(nb(&north, Suit::Diamonds), 4);
    assert_eq!(nb(&north, Suit::Clubs), 3);
}
