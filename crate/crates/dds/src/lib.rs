//! Exact double-dummy trick computation and duplicate-bridge scoring.
//!
//! The solver ([`Solver`]) runs a depth-first alpha-beta search over tricks
//! with a zero-window iteration on the trick target, a transposition table
//! keyed on rank-normalized positions, and equivalent-card move collapsing.
//! Every optimization can be switched off via [`SolverConfig`] without
//! changing any result; [`oracle`] holds an independent exhaustive minimax
//! used to cross-check the solver on small endings.

pub mod oracle;
pub mod score;
mod solver;
pub mod table;

pub use score::score_contract;
pub use solver::{deal_hands, solve, Solver, SolverConfig};
pub use table::{
    defended_contract, score_table, score_table_with, tables_to_csv, ContractSet, ScoreTable,
    StrainSolvers, TableEntry,
};
