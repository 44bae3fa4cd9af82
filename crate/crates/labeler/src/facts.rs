//! Ground-fact rendering of labelled examples.
//!
//! Each example becomes a block of Prolog-style facts: one `decision/5` fact
//! recording the hand, auction context, and label, followed by facts for the
//! derived hand features a rule body can test — high-card points, number of
//! spades, per-suit lengths, the sorted length distribution, and per-suit
//! honour pictures. The hand itself is a list of card constants such as
//! `sq` (spade queen) or `h10` (heart ten), spades down to clubs and
//! descending within each suit.

use bridge_core::{Dataset, Hand, LabeledExample, Rank, Suit};
use bridge_dealgen::sorted_lengths;

/// Suits in fact order: spades down to clubs, mirroring hand notation.
pub const FACT_SUITS: [Suit; 4] = [Suit::Spades, Suit::Hearts, Suit::Diamonds, Suit::Clubs];

/// Constant naming a rank in fact text: `a`, `k`, `q`, `j`, `10`, `9`, …
pub fn rank_atom(rank: Rank) -> String {
    match rank.to_char() {
        'T' => "10".to_string(),
        c => c.to_ascii_lowercase().to_string(),
    }
}

/// The hand as a list term: `[sq,s9,s4,hk,h10,…]`.
pub fn hand_term(hand: Hand) -> String {
    let cards: Vec<String> = hand
        .cards()
        .iter()
        .map(|c| format!("{}{}", c.suit.letter().to_ascii_lowercase(), rank_atom(c.rank)))
        .collect();
    format!("[{}]", cards.join(","))
}

/// The example as a ground `decision/5` fact.
pub fn decision_fact(example: &LabeledExample) -> String {
    format!(
        "decision({},{},{},{},{}).",
        hand_term(example.south),
        LabeledExample::POSITION,
        example.vul.code(),
        LabeledExample::DEALER.name(),
        example.label,
    )
}

/// Facts for the derived features of a hand, each referring to the hand by
/// its list term.
pub fn derived_facts(hand: Hand) -> Vec<String> {
    let term = hand_term(hand);
    let mut facts = vec![
        format!("hcp({},{}).", term, hand.hcp()),
        format!("nbs({},{}).", term, hand.suit_len(Suit::Spades)),
    ];
    for suit in FACT_SUITS {
        facts.push(format!("nb({},{},{}).", term, suit.name(), hand.suit_len(suit)));
    }
    let [a, b, c, d] = sorted_lengths(hand);
    facts.push(format!("distribution({},[{a},{b},{c},{d}]).", term));
    for suit in FACT_SUITS {
        let mut ranks = hand.suit_ranks(suit);
        ranks.sort_unstable_by(|x, y| y.cmp(x));
        let honors: Vec<String> =
            ranks.into_iter().filter(|r| r.is_honor()).map(rank_atom).collect();
        facts.push(format!(
            "suit_representation({},{},[{}],{}).",
            term,
            suit.name(),
            honors.join(","),
            hand.suit_len(suit),
        ));
    }
    facts
}

/// Render a whole dataset as fact blocks separated by blank lines.
pub fn dataset_to_facts(dataset: &Dataset) -> String {
    let mut out = String::new();
    for (i, ex) in dataset.examples.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&decision_fact(ex));
        out.push('\n');
        for fact in derived_facts(ex.south) {
            out.push_str(&fact);
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bridge_core::{Label, Vulnerability};

    fn south() -> Hand {
        "Q94.KT652.95.KT3".parse().unwrap()
    }

    #[test]
    fn hand_terms_list_cards_high_to_low() {
        assert_eq!(hand_term(south()), "[sq,s9,s4,hk,h10,h6,h5,h2,d9,d5,ck,c10,c3]");
    }

    #[test]
    fn decision_facts_carry_the_full_context() {
        let ex = LabeledExample::new(south(), Vulnerability::NsOnly, Label::Bid);
        assert_eq!(
            decision_fact(&ex),
            "decision([sq,s9,s4,hk,h10,h6,h5,h2,d9,d5,ck,c10,c3],4,n,west,bid)."
        );
    }

    #[test]
    fn derived_facts_describe_the_hand() {
        let facts = derived_facts(south());
        let term = "[sq,s9,s4,hk,h10,h6,h5,h2,d9,d5,ck,c10,c3]";
        assert!(facts.contains(&format!("hcp({term},8).")));
        assert!(facts.contains(&format!("nbs({term},3).")));
        assert!(facts.contains(&format!("nb({term},heart,5).")));
        assert!(facts.contains(&format!("nb({term},club,3).")));
        assert!(facts.contains(&format!("distribution({term},[5,3,3,2]).")));
        assert!(facts.contains(&format!("suit_representation({term},spade,[q],3).")));
        // A suit with no honours gets an empty list, not a missing fact.
        assert!(facts.contains(&format!("suit_representation({term},diamond,[],2).")));
    }

    #[test]
    fn honours_list_high_to_low() {
        let hand: Hand = "AKJ8752.7.J863.5".parse().unwrap();
        let facts = derived_facts(hand);
        let term = hand_term(hand);
        assert!(facts.contains(&format!("suit_representation({term},spade,[a,k,j],7).")));
        assert!(facts.contains(&format!("hcp({term},9).")));
        assert!(facts.contains(&format!("distribution({term},[7,4,1,1]).")));
    }

    #[test]
    fn datasets_render_as_blocks() {
        let ex = LabeledExample::new(south(), Vulnerability::Neither, Label::Pass);
        let dataset = Dataset::new(vec![ex.clone(), ex]);
        let text = dataset_to_facts(&dataset);
        assert_eq!(text.matches("decision(").count(), 2);
        assert_eq!(text.matches("\n\n").count(), 1);
        assert!(text.starts_with("decision("));
        assert!(text.ends_with(".\n"));
        // Twelve facts per example: the decision, hcp, nbs, four lengths,
        // the distribution, and four honour pictures.
        assert_eq!(text.lines().filter(|l| !l.is_empty()).count(), 2 * 12);
    }
}
