//! Duplicate bridge scoring for a single board.

use bridge_core::{Contract, Doubling, Strain, Vulnerability};

/// Points from the declaring side's perspective for taking `tricks` of 13 in
/// `contract` (negative when the contract goes down). Vulnerability of the
/// declaring side is taken from the board's `vul`.
pub fn score_contract(contract: Contract, vul: Vulnerability, tricks: u8) -> i32 {
    let vulnerable = vul.is_vulnerable(contract.declarer.side());
    let need = contract.required_tricks();
    if tricks >= need {
        made_score(contract, vulnerable, tricks - need)
    } else {
        -undertrick_penalty(contract.doubling, vulnerable, need - tricks)
    }
}

/// Per-trick value of the strain; notrump's first trick carries 10 extra.
fn trick_value(strain: Strain) -> i32 {
    match strain {
        Strain::Clubs | Strain::Diamonds => 20,
        Strain::Hearts | Strain::Spades | Strain::NoTrump => 30,
    }
}

fn made_score(contract: Contract, vulnerable: bool, overtricks: u8) -> i32 {
    let level = contract.level as i32;
    let base = trick_value(contract.strain) * level
        + if contract.strain == Strain::NoTrump { 10 } else { 0 };
    let trick_points = base * contract.doubling.factor();

    let mut total = trick_points;
    total += if trick_points >= 100 {
        if vulnerable {
            500
        } else {
            300
        }
    } else {
        50
    };
    total += match (contract.level, vulnerable) {
        (6, false) => 500,
        (6, true) => 750,
        (7, false) => 1000,
        (7, true) => 1500,
        _ => 0,
    };
    total += match contract.doubling {
        Doubling::Undoubled => 0,
        Doubling::Doubled => 50,
        Doubling::Redoubled => 100,
    };
    total += overtricks as i32
        * match contract.doubling {
            Doubling::Undoubled => trick_value(contract.strain),
            Doubling::Doubled => {
                if vulnerable {
                    200
                } else {
                    100
                }
            }
            Doubling::Redoubled => {
                if vulnerable {
                    400
                } else {
                    200
                }
            }
        };
    total
}

fn undertrick_penalty(doubling: Doubling, vulnerable: bool, down: u8) -> i32 {
    let down = down as i32;
    match doubling {
        Doubling::Undoubled => down * if vulnerable { 100 } else { 50 },
        Doubling::Doubled => doubled_penalty(vulnerable, down),
        Doubling::Redoubled => 2 * doubled_penalty(vulnerable, down),
    }
}

/// Doubled undertricks: non-vul 100, 200, 200, then 300 each; vul 200 then
/// 300 each.
fn doubled_penalty(vulnerable: bool, down: i32) -> i32 {
    if vulnerable {
        200 + (down - 1) * 300
    } else {
        match down {
            1 => 100,
            2 => 300,
            3 => 500,
            d => 500 + (d - 3) * 300,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bridge_core::Seat;

    fn score(spec: (u8, Strain, Doubling, Seat), vul: Vulnerability, tricks: u8) -> i32 {
        let c = Contract::new(spec.0, spec.1, spec.2, spec.3).unwrap();
        score_contract(c, vul, tricks)
    }

    #[test]
    fn hand_checked_cases() {
        use Doubling::{Doubled, Redoubled, Undoubled};
        use Strain::*;
        let w = Seat::West;
        let n = Seat::North;
        // (level, strain, doubling, declarer, board vul, tricks, points)
        let cases: [(u8, Strain, Doubling, Seat, Vulnerability, u8, i32); 20] = [
            // 240 trick points + 300 game + 50 insult.
            (4, Spades, Doubled, w, Vulnerability::Neither, 10, 590),
            // 200 + 300 for the second doubled vulnerable undertrick.
            (4, Spades, Doubled, w, Vulnerability::Both, 8, -500),
            // 20 trick points + 50 part-score.
            (1, Clubs, Undoubled, n, Vulnerability::Neither, 7, 70),
            // 100 trick points + 300 game.
            (3, NoTrump, Undoubled, n, Vulnerability::Neither, 9, 400),
            // Game + one 30-point overtrick, vulnerable.
            (3, NoTrump, Undoubled, n, Vulnerability::NsOnly, 10, 630),
            // Grand slam in notrump, vulnerable: 220 + 500 + 1500.
            (7, NoTrump, Undoubled, n, Vulnerability::Both, 13, 2220),
            // Small slam, non-vul: 180 + 300 + 500.
            (6, Hearts, Undoubled, n, Vulnerability::Neither, 12, 980),
            // Small slam in a minor, vulnerable: 120 + 500 + 750.
            (6, Diamonds, Undoubled, n, Vulnerability::NsOnly, 12, 1370),
            // Part-score: 60 + 50.
            (2, Spades, Undoubled, n, Vulnerability::Neither, 8, 110),
            // Part-score with an overtrick: 60 + 30 + 50.
            (2, Spades, Undoubled, n, Vulnerability::Neither, 9, 140),
            // 1NT exactly: 40 + 50.
            (1, NoTrump, Undoubled, n, Vulnerability::Neither, 7, 90),
            // Vulnerable major game with an overtrick: 120 + 500 + 30.
            (4, Hearts, Undoubled, n, Vulnerability::Both, 11, 650),
            // Minor game: 100 + 300.
            (5, Clubs, Undoubled, n, Vulnerability::Neither, 11, 400),
            // Down one undoubled, non-vul.
            (2, Clubs, Undoubled, n, Vulnerability::Neither, 7, -50),
            // Down two undoubled, vulnerable.
            (3, Diamonds, Undoubled, n, Vulnerability::NsOnly, 7, -200),
            // Doubling lifts 2H from part-score to game: 120 + 300 + 50.
            (2, Hearts, Doubled, n, Vulnerability::Neither, 8, 470),
            // Same plus one doubled non-vul overtrick at 100.
            (2, Hearts, Doubled, n, Vulnerability::Neither, 9, 570),
            // Redoubled minor part-score becomes game: 240 + 500 + 100.
            (3, Clubs, Redoubled, n, Vulnerability::NsOnly, 9, 840),
            // Doubled non-vul down three: 100 + 200 + 200.
            (4, Spades, Doubled, w, Vulnerability::Neither, 7, -500),
            // Doubled vulnerable down five: 200 + 4 * 300.
            (4, Spades, Doubled, w, Vulnerability::Both, 5, -1400),
        ];
        for (level, strain, doubling, declarer, vul, tricks, want) in cases {
            let got = score((level, strain, doubling, declarer), vul, tricks);
            assert_eq!(
                got, want,
                "{level}{strain:?}{doubling:?} by {declarer:?}, vul {vul:?}, {tricks} tricks"
            );
        }
    }

    #[test]
    fn declarer_side_vulnerability_is_what_counts() {
        // NS-only vulnerability: West (EW) is not vulnerable.
        let c = (4, Strain::Spades, Doubling::Doubled, Seat::West);
        assert_eq!(score(c, Vulnerability::NsOnly, 10), 590);
        assert_eq!(score(c, Vulnerability::EwOnly, 10), 790);
        // Down one doubled: 100 non-vul, 200 vul.
        assert_eq!(score(c, Vulnerability::NsOnly, 9), -100);
        assert_eq!(score(c, Vulnerability::EwOnly, 9), -200);
    }

    #[test]
    fn deep_doubled_undertricks() {
        let c = (3, Strain::NoTrump, Doubling::Doubled, Seat::North);
        // Non-vul: 100, 300, 500, 800, 1100, 1400, 1700.
        let nv: Vec<i32> = (1..=7).map(|d| -score(c, Vulnerability::Neither, 9 - d)).collect();
        assert_eq!(nv, vec![100, 300, 500, 800, 1100, 1400, 1700]);
        // Vul: 200, 500, 800, 1100, ...
        let v: Vec<i32> = (1..=4).map(|d| -score(c, Vulnerability::Both, 9 - d)).collect();
        assert_eq!(v, vec![200, 500, 800, 1100]);
        // Redoubled doubles the doubled schedule.
        let cr = (3, Strain::NoTrump, Doubling::Redoubled, Seat::North);
        assert_eq!(score(cr, Vulnerability::Neither, 8), -200);
        assert_eq!(score(cr, Vulnerability::Both, 7), -1000);
    }

    #[test]
    fn more_worked_scores() {
        // 5Dx vul with an overtrick: 200 + 500 + 50 + 200.
        let c = (5, Strain::Diamonds, Doubling::Doubled, Seat::North);
        assert_eq!(score(c, Vulnerability::Both, 12), 950);
        // Grand slam in spades, non-vul: 210 + 300 + 1000.
        let g = (7, Strain::Spades, Doubling::Undoubled, Seat::North);
        assert_eq!(score(g, Vulnerability::Neither, 13), 1510);
        // 4NT with no overtricks: 130 + 300.
        let nt = (4, Strain::NoTrump, Doubling::Undoubled, Seat::North);
        assert_eq!(score(nt, Vulnerability::Neither, 10), 430);
        // Redoubled down one, non-vul: twice the doubled 100.
        let rx = (1, Strain::Spades, Doubling::Redoubled, Seat::North);
        assert_eq!(score(rx, Vulnerability::Neither, 6), -200);
    }

    #[test]
    fn redoubled_game_threshold() {
        // 1NTxx = 160 trick points: game bonus applies.
        let c = (1, Strain::NoTrump, Doubling::Redoubled, Seat::North);
        assert_eq!(score(c, Vulnerability::Neither, 7), 160 + 300 + 100);
        // 1NTx = 80: still a part-score.
        let cx = (1, Strain::NoTrump, Doubling::Doubled, Seat::North);
        assert_eq!(score(cx, Vulnerability::Neither, 7), 80 + 50 + 50);
    }
}
