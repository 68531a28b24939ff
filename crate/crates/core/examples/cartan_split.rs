//! The split su(4) = u ⊕ p induced by the Bell basis, with a ⊂ p the
//! abelian span of the diagonal generators.
//!
//! cargo run --example cartan_split

use fuzzybit::qutrit::{cartan_check, cartan_split, tau_realness};
use fuzzybit::Tolerances;

fn main() {
    let split = cartan_split();
    println!(
        "dim u = {}, dim p = {}, dim a = {}",
        split.u_basis.len(),
        split.p_basis.len(),
        split.a_basis.len()
    );
    println!("\nBell-basis generators: max |Re| / max |Im| of each entry, then the block");
    for mu in 0..4 {
        for nu in 0..4 {
            if mu + nu == 0 {
                continue;
            }
            let (re, im) = tau_realness(mu, nu);
            let block = if mu == nu { "p,a" } else if mu == 0 || nu == 0 { "u" } else { "p" };
            print!("({mu}{nu}) {re:.1}/{im:.1} {block}  ");
        }
        println!();
    }
    println!();
    print!("{}", cartan_check(&Tolerances::DEFAULT));
}
