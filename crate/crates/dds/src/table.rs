//! Per-deal score tables: double-dummy tricks and North-South-signed scores
//! for the defended contract and every candidate North-South contract.

use bridge_core::{Contract, Deal, Doubling, Seat, Strain};

use crate::score::score_contract;
use crate::solver::{Solver, SolverConfig};

/// The (level, strain) pairs evaluated on the North-South side of a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractSet {
    excluded: Vec<(u8, Strain)>,
}

impl ContractSet {
    /// The standard candidate list: every pair from 1C through 7NT except
    /// 4NT, 5NT, 5S, 6S and 7S.
    pub fn standard() -> ContractSet {
        ContractSet {
            excluded: vec![
                (4, Strain::NoTrump),
                (5, Strain::NoTrump),
                (5, Strain::Spades),
                (6, Strain::Spades),
                (7, Strain::Spades),
            ],
        }
    }

    pub fn new(excluded: Vec<(u8, Strain)>) -> ContractSet {
        ContractSet { excluded }
    }

    pub fn excluded(&self) -> &[(u8, Strain)] {
        &self.excluded
    }

    /// Candidate (level, strain) pairs in table order: by level, then club
    /// to notrump within a level.
    pub fn ns_pairs(&self) -> Vec<(u8, Strain)> {
        let mut pairs = Vec::new();
        for level in 1..=7 {
            for strain in Strain::ALL {
                if !self.excluded.contains(&(level, strain)) {
                    pairs.push((level, strain));
                }
            }
        }
        pairs
    }
}

impl Default for ContractSet {
    fn default() -> ContractSet {
        ContractSet::standard()
    }
}

/// One table row: a contract, its double-dummy tricks for the declaring
/// side, and its score signed from North-South's perspective.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub contract: Contract,
    pub tricks: u8,
    pub ns_score: i32,
}

/// All evaluated contracts for one deal: the defended 4SX by West first,
/// then the North-South candidates in (level, strain) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoreTable {
    pub entries: Vec<TableEntry>,
}

impl ScoreTable {
    /// The defended contract's row (always present, always first).
    pub fn defense(&self) -> &TableEntry {
        &self.entries[0]
    }

    /// The North-South candidate rows.
    pub fn ns_entries(&self) -> &[TableEntry] {
        &self.entries[1..]
    }

    /// The best North-South row by ns_score; ties keep the earlier (lower)
    /// contract.
    pub fn best_ns(&self) -> &TableEntry {
        let mut best = &self.entries[1];
        for entry in &self.entries[2..] {
            if entry.ns_score > best.ns_score {
                best = entry;
            }
        }
        best
    }

    /// Looks up the North-South row for a (level, strain) pair.
    pub fn ns_entry(&self, level: u8, strain: Strain) -> Option<&TableEntry> {
        self.ns_entries()
            .iter()
            .find(|e| e.contract.level == level && e.contract.strain == strain)
    }
}

/// One double-dummy solver per strain, so cached positions keep paying off
/// across declarers and across deals. Each (strain, declarer) slot also
/// remembers its last result as the opening guess for the next deal: deals
/// from one batch tend to make similar trick counts.
pub struct StrainSolvers {
    solvers: [Solver; 5],
    last: [[Option<u8>; 4]; 5],
}

impl StrainSolvers {
    pub fn new(config: SolverConfig) -> StrainSolvers {
        StrainSolvers {
            solvers: Strain::ALL.map(|s| Solver::new(s, config)),
            last: [[None; 4]; 5],
        }
    }

    /// Double-dummy tricks for the declaring side.
    pub fn tricks(&mut self, deal: &Deal, strain: Strain, declarer: Seat) -> u8 {
        self.tricks_from(deal, strain, declarer, None)
    }

    /// `tricks`, seeded with a guess (see [`Solver::solve_deal_from`]); falls
    /// back on the slot's previous result.
    pub fn tricks_from(
        &mut self,
        deal: &Deal,
        strain: Strain,
        declarer: Seat,
        guess: Option<u8>,
    ) -> u8 {
        let slot = &mut self.last[strain as usize][declarer.index()];
        let tricks =
            self.solvers[strain as usize].solve_deal_from(deal, declarer, guess.or(*slot));
        *slot = Some(tricks);
        tricks
    }
}

/// The contract every table defends: 4 spades doubled, declared by West.
pub fn defended_contract() -> Contract {
    Contract::new(4, Strain::Spades, Doubling::Doubled, Seat::West).unwrap()
}

/// Builds the score table for one deal with throwaway solvers. Prefer
/// [`score_table_with`] when tabulating many deals.
pub fn score_table(deal: &Deal, set: &ContractSet) -> ScoreTable {
    score_table_with(deal, set, &mut StrainSolvers::new(SolverConfig::default()))
}

/// Builds the score table for one deal, reusing the caller's solvers.
///
/// Eleven solves cover every row: the defended contract, plus each strain
/// declared by North and by South (trick counts do not depend on the level).
/// Each candidate pair keeps whichever of the North or South declaration
/// scores better for North-South, North on ties.
pub fn score_table_with(deal: &Deal, set: &ContractSet, solvers: &mut StrainSolvers) -> ScoreTable {
    let defended = defended_contract();
    let ew_tricks = solvers.tricks(deal, Strain::Spades, Seat::West);
    let mut entries = vec![TableEntry {
        contract: defended,
        tricks: ew_tricks,
        ns_score: -score_contract(defended, deal.vul, ew_tricks),
    }];

    let mut solved: [[Option<u8>; 2]; 5] = [[None; 2]; 5];
    for (level, strain) in set.ns_pairs() {
        // Related solves make good first guesses: the defense solve hints at
        // North-South's own spade tricks, and each North result at South's.
        if solved[strain as usize][0].is_none() {
            let guess = (strain == Strain::Spades).then_some(13 - ew_tricks);
            solved[strain as usize][0] =
                Some(solvers.tricks_from(deal, strain, Seat::North, guess));
        }
        if solved[strain as usize][1].is_none() {
            let guess = solved[strain as usize][0];
            solved[strain as usize][1] =
                Some(solvers.tricks_from(deal, strain, Seat::South, guess));
        }
        let scored = |seat: Seat, tricks: u8| {
            let contract = Contract::new(level, strain, Doubling::Undoubled, seat).unwrap();
            TableEntry {
                contract,
                tricks,
                ns_score: score_contract(contract, deal.vul, tricks),
            }
        };
        let north = scored(Seat::North, solved[strain as usize][0].unwrap());
        let south = scored(Seat::South, solved[strain as usize][1].unwrap());
        entries.push(if south.ns_score > north.ns_score { south } else { north });
    }
    ScoreTable { entries }
}

/// Renders tables as CSV, one row per (board, contract).
pub fn tables_to_csv(tables: &[ScoreTable]) -> String {
    let mut out = String::from("board,contract,declarer,tricks,ns_score\n");
    for (board, table) in tables.iter().enumerate() {
        for entry in &table.entries {
            let c = entry.contract;
            out.push_str(&format!(
                "{},{}{}{},{},{},{}\n",
                board,
                c.level,
                c.strain.token(),
                c.doubling.token(),
                c.declarer.letter(),
                entry.tricks,
                entry.ns_score
            ));
        }
    }
    out
}
