//! Two qubits in Bloch-matrix form: local vectors, correlation matrix,
//! factorizable memberships and the necessary inequalities.
//!
//! cargo run --example two_qubit_bloch

use fuzzybit::borel::{QubitClass, TwoQubitType};
use fuzzybit::qubit::QubitState;
use fuzzybit::twoqubit::{
    inequality_suite, membership_two, membership_two_oracle, trace_out, Bell, BlochMatrix,
    Subsystem,
};

fn main() -> fuzzybit::Result<()> {
    let z = [0.0, 0.0, 1.0];
    let x = [1.0, 0.0, 0.0];

    let bell = Bell::PhiPlus.bloch();
    print!("Bloch matrix of Phi+:\n{bell}");
    println!(
        "tr(R^T R) = {}, marginal = {}",
        bell.corr_frobenius_sq(),
        trace_out(&bell, Subsystem::First)
    );

    let product = BlochMatrix::product(&QubitState::new([0.0, 0.0, 0.5])?, &QubitState::new([0.3, 0.0, 0.0])?);
    use QubitClass::*;
    println!("\nclass pair   type   Phi+      product |0>(x)(0.3,0,0)");
    for (ca, cb) in [(Plus, Plus), (Plus, Minus), (Minus, Minus), (Plus, Both), (Both, Empty), (Both, Both)] {
        let ty = TwoQubitType::from_classes(ca, cb).number();
        let f = membership_two(&z, &x, &bell, ca, cb)?;
        let g = membership_two(&z, &x, &product, ca, cb)?;
        assert!((f - membership_two_oracle(&z, &x, &bell, ca, cb)?).abs() < 1e-12);
        println!("{:>3},{:<3}      {ty}     {f:.4}    {g:.4}", ca.symbol(), cb.symbol());
    }

    println!("\ninequalities on Phi+ (the equality case):");
    print!("{}", inequality_suite(&bell));
    Ok(())
}
