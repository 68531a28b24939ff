//! Membership functions of a single qubit: `f_â(ρ) = ½ + â·ρ` and its
//! relatives for the four Borel classes, checked against `tr(P·ρ)`.
//!
//! cargo run --example qubit_membership

use fuzzybit::borel::{BorelSet, QubitClass};
use fuzzybit::qubit::{
    membership_pure_angle, membership_qubit, membership_qubit_oracle, pure_state_at_angle,
    Observable2, QubitState,
};

fn main() -> fuzzybit::Result<()> {
    let x = [1.0, 0.0, 0.0];
    let rho: QubitState = "0.3,0,0.2".parse()?;

    println!("state rho = {rho}, |rho| = {:.4}", rho.radius());
    for class in QubitClass::ALL {
        let f = membership_qubit(&x, &rho, class)?;
        let oracle = membership_qubit_oracle(&x, &rho, class)?;
        println!("  class {:>2}: f = {f:.6}   tr(P rho) = {oracle:.6}", class.symbol());
    }

    // the class comes from where the Borel set puts the eigenvalues
    let a = Observable2::new(2.0, [1.0, 2.0, 2.0])?;
    for text in ["[0,6)", "[-2,0)", "[10,11)", "(-inf,inf)"] {
        let e: BorelSet = text.parse()?;
        let class = a.classify(&e);
        let axis = a.axis().expect("non-degenerate");
        println!(
            "A = 2 + (1,2,2)·σ, E = {text:<11} -> class {:>2}, p = {:.6}",
            class.symbol(),
            membership_qubit(&axis, &rho, class)?
        );
    }

    println!("\npure states cos a|0> + sin a|1> measured along z:");
    for k in 0..=4 {
        let alpha = std::f64::consts::FRAC_PI_8 * k as f64;
        let q = pure_state_at_angle(alpha);
        let f = membership_qubit(&[0.0, 0.0, 1.0], &q, QubitClass::Plus)?;
        println!("  a = {alpha:.4}: f = {f:.6}, cos^2 a = {:.6}", membership_pure_angle(alpha));
    }
    Ok(())
}
