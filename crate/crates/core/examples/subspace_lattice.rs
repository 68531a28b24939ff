//! The projector lattice: meets, joins, orthocomplements, the orthomodular
//! law, and the triple of lines in C² on which distributivity fails.
//!
//! cargo run --example subspace_lattice

use fuzzybit::linalg::{
    distributivity_witness, orthocomplement, orthomodular_check, subspace_join, subspace_meet,
    Projector,
};
use fuzzybit::sampling::DEFAULT_SEED;
use fuzzybit::Tolerances;

fn main() -> fuzzybit::Result<()> {
    let p = Projector::onto_real_line(&[0.6, 0.8])?;
    let pc = orthocomplement(&p);
    println!(
        "rank(P ∧ P⊥) = {}, rank(P ∨ P⊥) = {}",
        subspace_meet(&p, &pc)?.rank(),
        subspace_join(&p, &pc)?.rank()
    );

    let w = distributivity_witness();
    println!(
        "a ∧ (b ∨ c) has rank {}, (a ∧ b) ∨ (a ∧ c) has rank {}, gap {}",
        w.lhs.rank(),
        w.rhs.rank(),
        w.gap
    );

    let tol = Tolerances::DEFAULT;
    for dim in [2, 4] {
        let c = orthomodular_check(dim, 1000, DEFAULT_SEED, &tol);
        println!("{} {} margin={:e}", c.name, if c.passed { "PASS" } else { "FAIL" }, c.margin);
    }
    Ok(())
}
