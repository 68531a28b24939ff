//! Invariants as properties over generated states, axes and angles.

use proptest::prelude::*;

use fuzzybit::borel::QubitClass;
use fuzzybit::fuzzylogic::{MembershipFunctional as F, State};
use fuzzybit::gates::{apply_cnot, apply_not, apply_sqrt_not, rotation_about_x};
use fuzzybit::qubit::{membership_qubit, membership_qubit_oracle, QubitState};
use fuzzybit::qutrit::{is_qutrit, nonlocal_transform, nonlocal_transform_oracle, random_qutrit};
use fuzzybit::sampling;
use fuzzybit::twoqubit::{inequality_suite, membership_two, membership_two_oracle, random_bloch, trace_out, Subsystem};
use fuzzybit::vec3;

fn unit() -> impl Strategy<Value = [f64; 3]> {
    any::<u64>().prop_map(|s| sampling::unit_vector(&mut sampling::rng_for(s, 0)))
}

fn ball() -> impl Strategy<Value = QubitState> {
    any::<u64>().prop_map(|s| QubitState::new(sampling::bloch_ball_point(&mut sampling::rng_for(s, 1))).unwrap())
}

fn class() -> impl Strategy<Value = QubitClass> {
    prop::sample::select(QubitClass::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn qubit_membership_in_unit_interval_and_matches_trace(a in unit(), q in ball(), c in class()) {
        let f = membership_qubit(&a, &q, c).unwrap();
        prop_assert!((-1e-15..=1.0 + 1e-15).contains(&f));
        prop_assert!((f - membership_qubit_oracle(&a, &q, c).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn complementary_classes_sum_to_one(a in unit(), q in ball(), c in class()) {
        let f = membership_qubit(&a, &q, c).unwrap();
        let g = membership_qubit(&a, &q, c.complement()).unwrap();
        prop_assert!((f + g - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn two_qubit_membership_matches_trace(a in unit(), b in unit(), seed in any::<u64>(), ca in class(), cb in class()) {
        let bm = random_bloch(&mut sampling::rng_for(seed, 2));
        let f = membership_two(&a, &b, &bm, ca, cb).unwrap();
        prop_assert!((f - membership_two_oracle(&a, &b, &bm, ca, cb).unwrap()).abs() <= 1e-12);
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&f));
    }

    #[test]
    fn tracing_out_gives_subsystem_membership(a in unit(), seed in any::<u64>()) {
        // type 5 with the second factor full reduces to the first marginal
        let bm = random_bloch(&mut sampling::rng_for(seed, 3));
        let f = membership_two(&a, &a, &bm, QubitClass::Plus, QubitClass::Both).unwrap();
        let m = trace_out(&bm, Subsystem::First);
        prop_assert!((f - membership_qubit(&a, &m, QubitClass::Plus).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn sampled_states_satisfy_inequalities(seed in any::<u64>()) {
        let bm = random_bloch(&mut sampling::rng_for(seed, 4));
        prop_assert!(inequality_suite(&bm).all_passed());
    }

    #[test]
    fn complement_is_involutive_and_order_reversing(a in unit(), q in ball()) {
        let s = State::Qubit(q);
        let f = F::qubit(a);
        let ff = f.complement().complement();
        prop_assert!((ff.evaluate(&s).unwrap() - f.evaluate(&s).unwrap()).abs() <= 1e-15);
        // f ⊓ g ≤ f, hence ¬f ≤ ¬(f ⊓ g)
        let g = F::qubit(vec3::neg(&a));
        let meet = f.bold_intersection(&g);
        prop_assert!(meet.evaluate(&s).unwrap() <= f.evaluate(&s).unwrap());
        prop_assert!(f.complement().evaluate(&s).unwrap() <= meet.complement().evaluate(&s).unwrap() + 1e-15);
    }

    #[test]
    fn bold_de_morgan(a in unit(), b in unit(), q in ball()) {
        let s = State::Qubit(q);
        let (f, g) = (F::qubit(a), F::qubit(b));
        let lhs = 1.0 - f.bold_union(&g).evaluate(&s).unwrap();
        let rhs = f.complement().bold_intersection(&g.complement()).evaluate(&s).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-15);
    }

    #[test]
    fn bold_union_adds_on_antipodal_pairs(a in unit(), q in ball()) {
        let s = State::Qubit(q);
        let (f, g) = (F::qubit(a), F::qubit(vec3::neg(&a)));
        let sum = f.evaluate(&s).unwrap() + g.evaluate(&s).unwrap();
        prop_assert!((f.bold_union(&g).evaluate(&s).unwrap() - sum).abs() <= 1e-15);
    }

    #[test]
    fn gate_maps_are_exact_involutions(q in ball(), seed in any::<u64>()) {
        prop_assert_eq!(apply_not(&apply_not(&q)), q);
        prop_assert_eq!(apply_sqrt_not(&apply_sqrt_not(&q)), apply_not(&q));
        let bm = random_bloch(&mut sampling::rng_for(seed, 5));
        prop_assert_eq!(apply_cnot(&apply_cnot(&bm)), bm);
    }

    #[test]
    fn rotation_preserves_radius(q in ball(), t in -10.0..10.0f64) {
        prop_assert!((rotation_about_x(t, &q).radius() - q.radius()).abs() <= 1e-15);
    }

    #[test]
    fn torus_is_a_group_action(seed in any::<u64>(), t in prop::array::uniform4(-3.0..3.0f64)) {
        let q = random_qutrit(&mut sampling::rng_for(seed, 6));
        let once = nonlocal_transform(&q, t[0] + t[2], t[1] + t[3]);
        let twice = nonlocal_transform(&nonlocal_transform(&q, t[0], t[1]), t[2], t[3]);
        prop_assert!(once.max_abs_diff(&twice) <= 1e-12);
        let oracle = nonlocal_transform_oracle(&q, 0.4, t[0], t[1]).unwrap();
        prop_assert!(nonlocal_transform(&q, t[0], t[1]).max_abs_diff(&oracle) <= 1e-10);
        let test = is_qutrit(oracle.bloch());
        prop_assert!(test.bloch_condition && test.entangled_condition);
    }
}
