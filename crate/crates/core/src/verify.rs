//! Named verification suites: each bundles the module checks for one theme
//! into a single [`Report`].

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::borel::{QubitClass, TwoQubitType};
use crate::error::{Error, Result};
use crate::fuzzylogic::{
    law_survey, orthogonality_postulate_check, pykacz_family_check, qubit_logic_family,
    qubit_orthogonal_families, two_qubit_logic_family, two_qubit_resolution, weakly_disjoint,
    MembershipFunctional, StateUniverse, System,
};
use crate::gates::{cnot_table_check, continuity_check, gate_oracle_check, not_vs_complement_check};
use crate::linalg::{distributivity_witness, orthomodular_check};
use crate::qubit::{membership_qubit, membership_qubit_oracle, QubitState};
use crate::qutrit::{cartan_check, is_qutrit, random_qutrit, torus_check, vector_field_check};
use crate::report::{format_number, Check, Report};
use crate::sampling;
use crate::tolerance::Tolerances;
use crate::twoqubit::{membership_two, membership_two_oracle, positivity_sweep, random_bloch, Bell, BlochMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lattice,
    Positivity,
    Orthogonality,
    Pykacz,
    Laws,
    Cartan,
    Qutrit,
    Gates,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Lattice,
        Suite::Positivity,
        Suite::Orthogonality,
        Suite::Pykacz,
        Suite::Laws,
        Suite::Cartan,
        Suite::Qutrit,
        Suite::Gates,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lattice => "lattice",
            Suite::Positivity => "positivity",
            Suite::Orthogonality => "orthogonality",
            Suite::Pykacz => "pykacz",
            Suite::Laws => "laws",
            Suite::Cartan => "cartan",
            Suite::Qutrit => "qutrit",
            Suite::Gates => "gates",
            Suite::Oracle => "oracle",
        }
    }

    /// Sample count used when none is given.
    pub fn default_samples(self) -> usize {
        match self {
            Suite::Positivity | Suite::Oracle | Suite::Gates => 10_000,
            _ => 1_000,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Runs one suite. `system` selects the universe for the fuzzy-logic suites
/// and is ignored by the others.
pub fn run_suite(suite: Suite, system: System, samples: Option<usize>, seed: u64) -> Result<Report> {
    run_suite_with(suite, system, samples, seed, &Tolerances::DEFAULT)
}

/// [`run_suite`] with caller-chosen tolerances for the checks that take them.
pub fn run_suite_with(
    suite: Suite,
    system: System,
    samples: Option<usize>,
    seed: u64,
    tol: &Tolerances,
) -> Result<Report> {
    let n = samples.unwrap_or_else(|| suite.default_samples());
    if n == 0 {
        return Err(Error::Parse("--samples must be positive".into()));
    }
    let tol = *tol;
    let mut report = Report::with_seed(seed);
    match suite {
        Suite::Lattice => report.extend(lattice(n, seed, &tol)),
        Suite::Positivity => report.extend(positivity(n, seed)),
        Suite::Orthogonality => report.extend(orthogonality(system, n, seed)?),
        Suite::Pykacz => report.extend(pykacz(system, n, seed)?),
        Suite::Laws => report.extend(law_survey(&StateUniverse::new(system, n, seed))?),
        Suite::Cartan => report.extend(cartan_check(&tol)),
        Suite::Qutrit => report.extend(qutrit(n, seed, &tol)),
        Suite::Gates => {
            report.extend(gate_oracle_check(n, seed, &tol));
            report.extend(cnot_table_check(n, seed));
            report.extend(not_vs_complement_check(n.min(1_000), seed));
            report.extend(continuity_check(n.min(1_000), seed, 64, &tol));
        }
        Suite::Oracle => {
            report.extend(qubit_oracle(n, seed, &tol));
            report.extend(two_qubit_oracle(n, seed, &tol));
            report.extend(resolution_of_identity(n, seed, &tol));
        }
    }
    Ok(report)
}

/// Orthomodular law in dims 2 and 4, and the expected distributivity failure.
pub fn lattice(samples: usize, seed: u64, tol: &Tolerances) -> Report {
    let mut report = Report::with_seed(seed);
    report.push(orthomodular_check(2, samples, seed, tol));
    report.push(orthomodular_check(4, samples, seed, tol));
    let w = distributivity_witness();
    // an expected failure: passes when the gap is found
    report.push(
        Check::new("distributivity-fails", w.gap >= 0.99, w.gap - 0.99)
            .with_witness(format!("gap={}", format_number(w.gap, false))),
    );
    report
}

/// Inequality sweep plus the Bell-state equality case.
pub fn positivity(samples: usize, seed: u64) -> Report {
    let mut report = positivity_sweep(samples, seed);
    let mut trace_err = 0.0_f64;
    let mut local = 0.0_f64;
    for b in Bell::ALL {
        let bm = b.bloch();
        trace_err = trace_err.max((bm.corr_frobenius_sq() - 3.0).abs());
        local = local.max(crate::vec3::norm(&bm.s)).max(crate::vec3::norm(&bm.r));
    }
    report.push(Check::from_margin("bell-trace-equality", 1e-12 - trace_err));
    report.push(Check::from_margin("bell-locally-maximally-mixed", 1e-12 - local));
    report
}

fn orthogonality(system: System, samples: usize, seed: u64) -> Result<Report> {
    let universe = StateUniverse::new(system, samples, seed);
    let mut report = Report::with_seed(seed);
    match system {
        System::Qubit => {
            let mut rng = sampling::rng_for(seed, u64::MAX - 1);
            let axis = sampling::unit_vector(&mut rng);
            for (label, family) in qubit_orthogonal_families(axis) {
                report.extend(orthogonality_postulate_check(label, &family, &universe)?);
            }
            let f = MembershipFunctional::qubit(axis);
            let g = MembershipFunctional::qubit(crate::vec3::neg(&axis));
            let d = weakly_disjoint(&f, &g, &universe)?;
            report.push(Check::new(
                "antipodal-weakly-disjoint",
                d.holds && d.analytic == Some(true),
                Tolerances::DEFAULT.fuzzy - d.worst,
            ));
        }
        System::TwoQubit => {
            let z = [0.0, 0.0, 1.0];
            let family = two_qubit_resolution(z, z);
            report.extend(orthogonality_postulate_check("resolution", &family, &universe)?);
            let pp = &family[0];
            let mm = &family[3];
            let d = weakly_disjoint(pp, mm, &universe)?;
            let mut check = Check::from_margin("plusplus-minusminus-weakly-disjoint", Tolerances::DEFAULT.fuzzy - d.worst);
            if let Some(w) = d.witness {
                check = check.with_witness(w.to_string());
            }
            report.push(check);
        }
    }
    Ok(report)
}

fn pykacz(system: System, samples: usize, seed: u64) -> Result<Report> {
    let universe = StateUniverse::new(system, samples, seed);
    let z = [0.0, 0.0, 1.0];
    let family = match system {
        System::Qubit => qubit_logic_family(z),
        System::TwoQubit => two_qubit_logic_family(z, [1.0, 0.0, 0.0]),
    };
    pykacz_family_check(&family, &universe)
}

fn qutrit(samples: usize, seed: u64, tol: &Tolerances) -> Report {
    let mut report = torus_check(samples, seed, tol);
    let mut rng = sampling::rng_for(seed, u64::MAX - 2);
    let q = random_qutrit(&mut rng);
    report.extend(vector_field_check(&q, tol));

    let mixed = is_qutrit(&BlochMatrix::maximally_mixed());
    let expected = mixed.bloch_condition
        && !mixed.entangled_condition
        && (mixed.singlet_weight - 0.25).abs() <= tol.qutrit;
    report.push(
        Check::new("qutrit-conditions-differ", expected, if expected { 0.0 } else { -1.0 }).with_witness(
            format!(
                "mixed: bloch={} entangled={} alpha={}",
                mixed.bloch_condition,
                mixed.entangled_condition,
                format_number(mixed.singlet_weight, false)
            ),
        ),
    );
    let nested = is_qutrit(q.bloch());
    report.push(Check::new(
        "qutrit-nested-both-conditions",
        nested.bloch_condition && nested.entangled_condition,
        tol.qutrit - nested.singlet_weight.abs(),
    ));
    report
}

fn random_class<R: Rng + ?Sized>(rng: &mut R) -> QubitClass {
    QubitClass::ALL[rng.random_range(0..4)]
}

/// Closed-form qubit membership against `tr(P·ρ)` over all four classes.
pub fn qubit_oracle(samples: usize, seed: u64, tol: &Tolerances) -> Report {
    let mut worst = 0.0_f64;
    let mut at = 0;
    let mut seen = [false; 4];
    for i in 0..samples {
        let mut rng = sampling::rng_for(seed, i as u64);
        let axis = sampling::unit_vector(&mut rng);
        let rho = QubitState::new(sampling::bloch_ball_point(&mut rng)).expect("inside the ball");
        let class = random_class(&mut rng);
        seen[QubitClass::ALL.iter().position(|&c| c == class).expect("listed")] = true;
        let d = (membership_qubit(&axis, &rho, class).expect("unit axis")
            - membership_qubit_oracle(&axis, &rho, class).expect("unit axis"))
        .abs();
        if d > worst {
            worst = d;
            at = i;
        }
    }
    let mut report = Report::with_seed(seed);
    let mut check = Check::from_margin("oracle-qubit", tol.oracle - worst);
    if worst > tol.oracle {
        check = check.with_witness(format!("sample={at}"));
    }
    report.push(check);
    report.push(Check::new(
        "oracle-qubit-classes-covered",
        seen.iter().all(|&s| s) || samples < 4,
        0.0,
    ));
    report
}

/// Closed-form two-qubit membership against `tr((P_A⊗P_B)·ρ)`, one line per
/// Borel type.
pub fn two_qubit_oracle(samples: usize, seed: u64, tol: &Tolerances) -> Report {
    let mut worst = [f64::NAN; 6];
    for i in 0..samples {
        let mut rng = sampling::rng_for(seed ^ 0x2, i as u64);
        let a = sampling::unit_vector(&mut rng);
        let b = sampling::unit_vector(&mut rng);
        let bm = random_bloch(&mut rng);
        let (ca, cb) = (random_class(&mut rng), random_class(&mut rng));
        let d = (membership_two(&a, &b, &bm, ca, cb).expect("unit axes")
            - membership_two_oracle(&a, &b, &bm, ca, cb).expect("unit axes"))
        .abs();
        let k = TwoQubitType::from_classes(ca, cb).number() as usize - 1;
        worst[k] = if worst[k].is_nan() { d } else { worst[k].max(d) };
    }
    let mut report = Report::with_seed(seed);
    for (k, w) in worst.iter().enumerate() {
        let name = format!("oracle-two-type{}", k + 1);
        if w.is_nan() {
            report.push(Check::new(name, false, f64::NAN).with_witness("no samples"));
        } else {
            report.push(Check::from_margin(name, tol.oracle - w));
        }
    }
    report
}

/// `Σ f^{εε′} = 1` for random axes and states.
pub fn resolution_of_identity(samples: usize, seed: u64, tol: &Tolerances) -> Report {
    use QubitClass::{Minus, Plus};
    let mut worst = 0.0_f64;
    for i in 0..samples {
        let mut rng = sampling::rng_for(seed ^ 0x3, i as u64);
        let a = sampling::unit_vector(&mut rng);
        let b = sampling::unit_vector(&mut rng);
        let bm = random_bloch(&mut rng);
        let sum: f64 = [(Plus, Plus), (Plus, Minus), (Minus, Plus), (Minus, Minus)]
            .iter()
            .map(|&(x, y)| membership_two(&a, &b, &bm, x, y).expect("unit axes"))
            .sum();
        worst = worst.max((sum - 1.0).abs());
    }
    let mut report = Report::with_seed(seed);
    report.push(Check::from_margin("resolution-of-identity", tol.oracle - worst));
    report
}
