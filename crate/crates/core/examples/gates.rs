//! NOT, √NOT and CNOT as exact maps on Bloch coordinates, and why NOT is not
//! the fuzzy complement.
//!
//! cargo run --example gates

use fuzzybit::borel::QubitClass;
use fuzzybit::fuzzylogic::{MembershipFunctional as F, State};
use fuzzybit::gates::{
    apply_cnot, apply_not, apply_sqrt_not, continuity_table, membership_after_gate, Gate, CNOT_TABLE,
};
use fuzzybit::qubit::{membership_qubit, QubitState};
use fuzzybit::sampling::{rng_for, DEFAULT_SEED};
use fuzzybit::twoqubit::random_bloch;

fn main() -> fuzzybit::Result<()> {
    let q = QubitState::new([0.3, 0.0, 0.2])?;
    println!("rho          = {q}");
    println!("NOT rho      = {}", apply_not(&q));
    println!("sqrtNOT rho  = {}", apply_sqrt_not(&q));
    println!("sqrtNOT^2    = {}", apply_sqrt_not(&apply_sqrt_not(&q)));

    for axis in [[0.0, 0.0, 1.0], [1.0, 0.0, 0.0]] {
        let after = membership_qubit(&axis, &apply_not(&q), QubitClass::Plus)?;
        let complement = 1.0 - membership_qubit(&axis, &q, QubitClass::Plus)?;
        println!("axis {axis:?}: f(NOT rho) = {after:.3}, 1 - f(rho) = {complement:.3}");
    }

    let bm = random_bloch(&mut rng_for(DEFAULT_SEED, 0));
    let state = State::TwoQubit(bm);
    let z = [0.0, 0.0, 1.0];
    println!("\nCNOT permutes the z-memberships of a random state:");
    for ((a, b), (a2, b2)) in CNOT_TABLE {
        let before = F::two_qubit(z, z, a2, b2).evaluate(&state)?;
        let after = membership_after_gate(Gate::Cnot, &F::two_qubit(z, z, a, b), &state)?;
        println!(
            "  f'{}{} = {after:.6}   f{}{} = {before:.6}",
            a.symbol(),
            b.symbol(),
            a2.symbol(),
            b2.symbol()
        );
    }
    assert_eq!(apply_cnot(&apply_cnot(&bm)), bm);

    println!("\nrotation about x from identity (0) through sqrtNOT (pi/2) to NOT (pi):");
    for row in continuity_table(&z, &QubitState::new([0.0, 0.0, 0.5])?, 8)? {
        println!("  theta = {:.4}  f_z = {:.6}", row.theta, row.membership);
    }
    Ok(())
}
