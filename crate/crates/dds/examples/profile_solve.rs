// Temporary profiling harness: one hard solve, suitable for callgrind.

use bridge_core::{Deal, Seat, Strain};
use bridge_dds::{Solver, SolverConfig};

const BOARD_ONE: &str =
    "n N:6.AQ93.KQT42.A94 E:T3.J84.A7.QJ8762 S:Q94.KT652.95.KT3 W:AKJ8752.7.J863.5";

fn main() {
    let deal: Deal = BOARD_ONE.parse().unwrap();
    let mut solver = Solver::new(Strain::Hearts, SolverConfig::default());
    let tricks = solver.solve_deal(&deal, Seat::West);
    println!("{tricks} tricks, {} nodes", solver.node_count());
}
