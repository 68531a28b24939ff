//! The qutrit nested in two qubits and the non-local torus
//! `exp(i/2(α σ11 + β σ22 + γ σ33))` acting on its Bloch coordinates.
//! The closed form is compared against conjugation, and the literature's
//! printed formulas are shown next to it.
//!
//! cargo run --example qutrit_torus

use fuzzybit::qutrit::{
    is_qutrit, nonlocal_transform, nonlocal_transform_oracle, printed_nonlocal_transform,
    random_qutrit, vector_field_check, COORD_NAMES,
};
use fuzzybit::sampling::{rng_for, DEFAULT_SEED};
use fuzzybit::twoqubit::BlochMatrix;
use fuzzybit::Tolerances;

fn main() -> fuzzybit::Result<()> {
    let mixed = is_qutrit(&BlochMatrix::maximally_mixed());
    println!(
        "I/4: Bloch condition {}, entangled-basis condition {}, singlet weight {}",
        mixed.bloch_condition, mixed.entangled_condition, mixed.singlet_weight
    );

    let q = random_qutrit(&mut rng_for(DEFAULT_SEED, 0));
    let (t1, t2) = (0.7, -0.3);
    let closed = nonlocal_transform(&q, t1, t2).coords();
    let oracle = nonlocal_transform_oracle(&q, 0.25, t1, t2)?.coords();
    let printed = printed_nonlocal_transform(&q, t1, t2);
    println!("\ntheta1 = {t1}, theta2 = {t2}");
    println!("coord   before      closed      oracle      printed");
    for (k, name) in COORD_NAMES.iter().enumerate() {
        println!(
            "{name:<5} {:>10.6}  {:>10.6}  {:>10.6}  {:>10.6}{}",
            q.coords()[k],
            closed[k],
            oracle[k],
            printed[k],
            if (printed[k] - oracle[k]).abs() > 1e-10 { "  *" } else { "" }
        );
    }

    println!("\nvector fields at the identity:");
    print!("{}", vector_field_check(&q, &Tolerances::DEFAULT));
    Ok(())
}
