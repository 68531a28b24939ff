//! Bold and Zadeh connectives on qubit membership functions: which classical
//! laws survive, and the family {0, 1, f, 1-f} as a fuzzy-set logic.
//!
//! cargo run --example fuzzy_connectives

use fuzzybit::fuzzylogic::{
    law_survey, pykacz_family_check, qubit_logic_family, weakly_disjoint, MembershipFunctional as F,
    State, StateUniverse, System,
};
use fuzzybit::qubit::QubitState;
use fuzzybit::sampling::DEFAULT_SEED;

fn main() -> fuzzybit::Result<()> {
    let (x, z) = ([1.0, 0.0, 0.0], [0.0, 0.0, 1.0]);
    let (f, g) = (F::qubit(x), F::qubit([0.0, 1.0, 0.0]));
    let s = State::Qubit(QubitState::new([0.2, 0.0, 0.0])?);
    println!("at {s}: f = {}, g = {}", f.evaluate(&s)?, g.evaluate(&s)?);
    for h in [f.bold_union(&g), f.bold_intersection(&g), f.zadeh_union(&g), f.zadeh_intersection(&g)] {
        println!("  {h} = {:.3}", h.evaluate(&s)?);
    }

    let universe = StateUniverse::new(System::Qubit, 1000, DEFAULT_SEED);
    for (a, b) in [(z, [0.0, 0.0, -1.0]), (z, z), (z, x)] {
        let d = weakly_disjoint(&F::qubit(a), &F::qubit(b), &universe)?;
        println!(
            "f{a:?} and f{b:?} weakly disjoint: {} (analytic {:?}, worst f+g-1 = {:.3})",
            d.holds, d.analytic, d.worst
        );
    }

    println!();
    print!("{}", law_survey(&universe)?);
    print!("{}", pykacz_family_check(&qubit_logic_family(z), &universe)?);
    Ok(())
}
