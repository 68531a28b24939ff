//! Membership functionals over a universe of density matrices, the bold
//! (Łukasiewicz) and Zadeh connectives, and the family-level checks.
//!
//! "For all states" is checked on a finite universe: fixed anchor states plus
//! a seeded sample. Where a closed-form criterion exists (qubit orthogonality
//! iff `â = −b̂`) it is reported next to the sampled result.

use std::fmt;

use crate::borel::QubitClass;
use crate::error::{Error, Result};
use crate::qubit::{membership_qubit, orthogonal_pair, QubitState};
use crate::report::{format_number, format_vector, Check, Report};
use crate::sampling;
use crate::tolerance::Tolerances;
use crate::twoqubit::{membership_two, random_bloch, Bell, BlochMatrix, PureTwoQubit};
use crate::vec3::{self, Vec3};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum System {
    Qubit,
    TwoQubit,
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            System::Qubit => "qubit",
            System::TwoQubit => "twoqubit",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum State {
    Qubit(QubitState),
    TwoQubit(BlochMatrix),
}

impl State {
    pub fn system(&self) -> System {
        match self {
            State::Qubit(_) => System::Qubit,
            State::TwoQubit(_) => System::TwoQubit,
        }
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            State::Qubit(q) => write!(f, "rho={}", format_vector(&q.bloch(), false)),
            State::TwoQubit(bm) => {
                let rows: Vec<String> = bm.rows().iter().map(|r| format_vector(r, false)).collect();
                write!(f, "bloch=[{}]", rows.join(";"))
            }
        }
    }
}

/// A fuzzy set on the states of one system, tagged by how it was built.
#[derive(Debug, Clone, PartialEq)]
pub enum MembershipFunctional {
    /// The empty set (`false`) or the whole universe (`true`).
    Constant(bool),
    Qubit { axis: Vec3, class: QubitClass },
    TwoQubit {
        a: Vec3,
        b: Vec3,
        class_a: QubitClass,
        class_b: QubitClass,
    },
    Complement(Box<MembershipFunctional>),
    /// `min(Σμ, 1)` over any number of arguments.
    BoldUnion(Vec<MembershipFunctional>),
    /// `max(μ + ν − 1, 0)`.
    BoldIntersection(Box<MembershipFunctional>, Box<MembershipFunctional>),
    ZadehUnion(Box<MembershipFunctional>, Box<MembershipFunctional>),
    ZadehIntersection(Box<MembershipFunctional>, Box<MembershipFunctional>),
}

use MembershipFunctional as F;

impl MembershipFunctional {
    pub fn zero() -> Self {
        F::Constant(false)
    }

    pub fn one() -> Self {
        F::Constant(true)
    }

    /// `f_â = 1/2 + â·ρ`.
    pub fn qubit(axis: Vec3) -> Self {
        F::Qubit {
            axis,
            class: QubitClass::Plus,
        }
    }

    pub fn two_qubit(a: Vec3, b: Vec3, class_a: QubitClass, class_b: QubitClass) -> Self {
        F::TwoQubit {
            a,
            b,
            class_a,
            class_b,
        }
    }

    pub fn complement(&self) -> Self {
        F::Complement(Box::new(self.clone()))
    }

    pub fn bold_union(&self, other: &Self) -> Self {
        F::BoldUnion(vec![self.clone(), other.clone()])
    }

    pub fn bold_intersection(&self, other: &Self) -> Self {
        F::BoldIntersection(Box::new(self.clone()), Box::new(other.clone()))
    }

    pub fn zadeh_union(&self, other: &Self) -> Self {
        F::ZadehUnion(Box::new(self.clone()), Box::new(other.clone()))
    }

    pub fn zadeh_intersection(&self, other: &Self) -> Self {
        F::ZadehIntersection(Box::new(self.clone()), Box::new(other.clone()))
    }

    /// The system this functional is defined on; `None` for pure constants.
    pub fn system(&self) -> Result<Option<System>> {
        let merge = |a: Option<System>, b: Option<System>| match (a, b) {
            (Some(x), Some(y)) if x != y => Err(Error::UniverseMismatch),
            (x, y) => Ok(x.or(y)),
        };
        match self {
            F::Constant(_) => Ok(None),
            F::Qubit { .. } => Ok(Some(System::Qubit)),
            F::TwoQubit { .. } => Ok(Some(System::TwoQubit)),
            F::Complement(f) => f.system(),
            F::BoldUnion(fs) => fs
                .iter()
                .try_fold(None, |acc, f| merge(acc, f.system()?)),
            F::BoldIntersection(f, g)
            | F::ZadehUnion(f, g)
            | F::ZadehIntersection(f, g) => merge(f.system()?, g.system()?),
        }
    }

    /// `μ(ρ)`, also read as the probability measure `m_ρ` applied to this set.
    pub fn evaluate(&self, state: &State) -> Result<f64> {
        match (self, state) {
            (F::Constant(c), _) => Ok(if *c { 1.0 } else { 0.0 }),
            (F::Qubit { axis, class }, State::Qubit(q)) => membership_qubit(axis, q, *class),
            (F::Qubit { .. }, _) => Err(Error::UniverseMismatch),
            (
                F::TwoQubit {
                    a,
                    b,
                    class_a,
                    class_b,
                },
                State::TwoQubit(bm),
            ) => membership_two(a, b, bm, *class_a, *class_b),
            (F::TwoQubit { .. }, _) => Err(Error::UniverseMismatch),
            (F::Complement(f), s) => Ok(1.0 - f.evaluate(s)?),
            (F::BoldUnion(fs), s) => {
                let mut sum = 0.0;
                for f in fs {
                    sum += f.evaluate(s)?;
                }
                Ok(sum.min(1.0))
            }
            (F::BoldIntersection(f, g), s) => Ok((f.evaluate(s)? + g.evaluate(s)? - 1.0).max(0.0)),
            (F::ZadehUnion(f, g), s) => Ok(f.evaluate(s)?.max(g.evaluate(s)?)),
            (F::ZadehIntersection(f, g), s) => Ok(f.evaluate(s)?.min(g.evaluate(s)?)),
        }
    }

    /// Values on every state of the universe.
    pub fn values(&self, universe: &StateUniverse) -> Result<Vec<f64>> {
        if let Some(sys) = self.system()? {
            if sys != universe.system {
                return Err(Error::UniverseMismatch);
            }
        }
        universe.states.iter().map(|s| self.evaluate(s)).collect()
    }
}

impl fmt::Display for MembershipFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            F::Constant(c) => write!(f, "{}", if *c { 1 } else { 0 }),
            F::Qubit { axis, class } => write!(f, "f[{}]{class}", format_vector(axis, false)),
            F::TwoQubit {
                a,
                b,
                class_a,
                class_b,
            } => write!(
                f,
                "f[{};{}]{class_a}{class_b}",
                format_vector(a, false),
                format_vector(b, false)
            ),
            F::Complement(g) => write!(f, "~{g}"),
            F::BoldUnion(gs) => {
                let parts: Vec<String> = gs.iter().map(|g| g.to_string()).collect();
                write!(f, "({})", parts.join(" (+) "))
            }
            F::BoldIntersection(g, h) => write!(f, "({g} (.) {h})"),
            F::ZadehUnion(g, h) => write!(f, "({g} v {h})"),
            F::ZadehIntersection(g, h) => write!(f, "({g} ^ {h})"),
        }
    }
}

/// Finite stand-in for the set of all density matrices of one system.
#[derive(Debug, Clone)]
pub struct StateUniverse {
    pub system: System,
    pub states: Vec<State>,
    pub seed: u64,
}

pub const DEFAULT_UNIVERSE_SIZE: usize = 1000;

impl StateUniverse {
    /// Anchor states followed by `samples` seeded random states.
    pub fn new(system: System, samples: usize, seed: u64) -> Self {
        let mut states = anchors(system);
        for i in 0..samples {
            let mut rng = sampling::rng_for(seed, i as u64);
            states.push(match system {
                System::Qubit => {
                    let v = if i % 2 == 0 {
                        sampling::bloch_ball_point(&mut rng)
                    } else {
                        sampling::bloch_sphere_point(&mut rng)
                    };
                    State::Qubit(QubitState::new(v).expect("sampled inside the ball"))
                }
                System::TwoQubit => {
                    if i % 2 == 0 {
                        State::TwoQubit(random_bloch(&mut rng))
                    } else {
                        let psi = PureTwoQubit::from_vector(&sampling::pure_state(&mut rng, 4))
                            .expect("normalized");
                        State::TwoQubit(psi.bloch())
                    }
                }
            });
        }
        Self {
            system,
            states,
            seed,
        }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

const AXES: [Vec3; 6] = [
    [1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0],
    [0.0, 1.0, 0.0],
    [0.0, -1.0, 0.0],
    [0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0],
];

fn anchors(system: System) -> Vec<State> {
    match system {
        System::Qubit => std::iter::once(QubitState::maximally_mixed())
            .chain(AXES.iter().map(|a| QubitState::new(vec3::scale(a, 0.5)).expect("pure")))
            .map(State::Qubit)
            .collect(),
        System::TwoQubit => {
            let mut v = vec![State::TwoQubit(BlochMatrix::maximally_mixed())];
            v.extend(Bell::ALL.iter().map(|b| State::TwoQubit(b.bloch())));
            for a in &AXES {
                for b in &AXES {
                    let qa = QubitState::new(vec3::scale(a, 0.5)).expect("pure");
                    let qb = QubitState::new(vec3::scale(b, 0.5)).expect("pure");
                    v.push(State::TwoQubit(BlochMatrix::product(&qa, &qb)));
                }
            }
            v
        }
    }
}

/// Outcome of a weak-disjointness test.
#[derive(Debug, Clone, PartialEq)]
pub struct Disjointness {
    pub holds: bool,
    /// `max (f + g − 1)` over the universe.
    pub worst: f64,
    pub witness: Option<State>,
    /// For two `E₊` qubit functionals: whether `â = −b̂`.
    pub analytic: Option<bool>,
}

/// `f ⊓ g = ∅` on the universe, i.e. `f + g ≤ 1` everywhere.
pub fn weakly_disjoint(
    f: &MembershipFunctional,
    g: &MembershipFunctional,
    universe: &StateUniverse,
) -> Result<Disjointness> {
    let tol = Tolerances::DEFAULT.fuzzy;
    let fv = f.values(universe)?;
    let gv = g.values(universe)?;
    let (mut worst, mut at) = (f64::NEG_INFINITY, 0);
    for (i, (x, y)) in fv.iter().zip(&gv).enumerate() {
        if x + y - 1.0 > worst {
            worst = x + y - 1.0;
            at = i;
        }
    }
    let holds = worst <= tol;
    let analytic = match (f, g) {
        (
            F::Qubit {
                axis: a,
                class: QubitClass::Plus,
            },
            F::Qubit {
                axis: b,
                class: QubitClass::Plus,
            },
        ) => Some(orthogonal_pair(a, b)),
        _ => None,
    };
    Ok(Disjointness {
        holds,
        worst,
        witness: (!holds).then(|| universe.states[at]),
        analytic,
    })
}

/// Sup-norm distance between two functionals on the universe.
pub fn sup_distance(
    f: &MembershipFunctional,
    g: &MembershipFunctional,
    universe: &StateUniverse,
) -> Result<f64> {
    let fv = f.values(universe)?;
    let gv = g.values(universe)?;
    Ok(fv.iter().zip(&gv).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
}

/// Same tag, or within the fuzzy tolerance on every state of the universe.
pub fn equivalent(
    f: &MembershipFunctional,
    g: &MembershipFunctional,
    universe: &StateUniverse,
) -> Result<bool> {
    if f == g {
        return Ok(true);
    }
    Ok(sup_distance(f, g, universe)? <= Tolerances::DEFAULT.fuzzy)
}

/// Pairwise orthogonality (`fᵢ + fⱼ ≤ 1`), orthogonality (`Σfᵢ ≤ 1`) and the
/// postulate that the first implies the second, for one family.
pub fn orthogonality_postulate_check(
    label: &str,
    family: &[MembershipFunctional],
    universe: &StateUniverse,
) -> Result<Report> {
    let tol = Tolerances::DEFAULT.fuzzy;
    let values: Vec<Vec<f64>> = family
        .iter()
        .map(|f| f.values(universe))
        .collect::<Result<_>>()?;
    let n = universe.len();

    // a one-element family is pairwise orthogonal vacuously
    let mut pair_worst = f64::NEG_INFINITY;
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            for (x, y) in values[i].iter().zip(&values[j]) {
                pair_worst = pair_worst.max(x + y - 1.0);
            }
        }
    }
    let (mut sum_worst, mut sum_at) = (f64::NEG_INFINITY, 0);
    let (mut sum_min, mut sum_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for k in 0..n {
        let s: f64 = values.iter().map(|v| v[k]).sum();
        sum_min = sum_min.min(s);
        sum_max = sum_max.max(s);
        if s - 1.0 > sum_worst {
            sum_worst = s - 1.0;
            sum_at = k;
        }
    }
    let pairwise = pair_worst <= tol;
    let orthogonal = family.len() <= 1 || sum_worst <= tol;

    let mut report = Report::with_seed(universe.seed);
    let pair_margin = if family.len() < 2 { 1.0 } else { tol - pair_worst };
    report.push(Check::new(format!("{label}-pairwise"), pairwise, pair_margin));
    let mut ortho = Check::new(
        format!("{label}-orthogonal"),
        orthogonal,
        if family.len() <= 1 { 1.0 } else { tol - sum_worst },
    );
    if !orthogonal {
        ortho = ortho.with_witness(universe.states[sum_at].to_string());
    } else if family.len() > 1 && sum_max - sum_min <= tol && (sum_max - 1.0).abs() <= tol {
        ortho = ortho.with_witness("sum=1");
    }
    report.push(ortho);
    report.push(Check::new(
        format!("{label}-postulate"),
        !pairwise || orthogonal,
        if !pairwise || orthogonal { 0.0 } else { -1.0 },
    ));
    Ok(report)
}

/// Properties 1–4 of a family of fuzzy sets representing a logic, plus
/// order reversal by the complement.
pub fn pykacz_family_check(
    family: &[MembershipFunctional],
    universe: &StateUniverse,
) -> Result<Report> {
    let tol = Tolerances::DEFAULT.fuzzy;
    let values: Vec<Vec<f64>> = family
        .iter()
        .map(|f| f.values(universe))
        .collect::<Result<_>>()?;
    let dist = |a: &[f64], b: &[f64]| -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    };
    let member = |v: &[f64]| -> f64 {
        values.iter().map(|m| dist(m, v)).fold(f64::INFINITY, f64::min)
    };
    let mut report = Report::with_seed(universe.seed);

    // 1. the empty set belongs to the family
    let zero = vec![0.0; universe.len()];
    let d = member(&zero);
    report.push(Check::from_margin("pykacz-1-empty", tol - d));

    // 2. closed under complement
    let mut worst = 0.0_f64;
    let mut witness = None;
    for (f, v) in family.iter().zip(&values) {
        let comp: Vec<f64> = v.iter().map(|x| 1.0 - x).collect();
        let d = member(&comp);
        if d > worst {
            worst = d;
            witness = Some(format!("~{f}"));
        }
    }
    push_with_witness(&mut report, "pykacz-2-complement", tol - worst, witness);

    // 3. bold unions of pairwise weakly disjoint members belong to the family
    let n = family.len();
    let disjoint: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| values[i].iter().zip(&values[j]).all(|(x, y)| x + y - 1.0 <= tol))
                .collect()
        })
        .collect();
    assert!(n <= 20, "subset enumeration is exponential in the family size");
    let mut worst = 0.0_f64;
    let mut witness = None;
    for mask in 1u32..(1 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let pairwise = idx
            .iter()
            .enumerate()
            .all(|(p, &i)| idx[p + 1..].iter().all(|&j| disjoint[i][j]));
        if !pairwise {
            continue;
        }
        let union: Vec<f64> = (0..universe.len())
            .map(|k| idx.iter().map(|&i| values[i][k]).sum::<f64>().min(1.0))
            .collect();
        let d = member(&union);
        if d > worst {
            worst = d;
            let names: Vec<String> = idx.iter().map(|&i| family[i].to_string()).collect();
            witness = Some(names.join("(+)"));
        }
    }
    push_with_witness(&mut report, "pykacz-3-bold-union", tol - worst, witness);

    // 4. f ⊓ f = ∅ only for f = ∅
    let mut worst = 0.0_f64;
    let mut witness = None;
    for (f, v) in family.iter().zip(&values) {
        let self_disjoint = v.iter().all(|x| 2.0 * x - 1.0 <= tol);
        let sup = v.iter().copied().fold(0.0, f64::max);
        if self_disjoint && sup > worst {
            worst = sup;
            witness = Some(f.to_string());
        }
    }
    push_with_witness(&mut report, "pykacz-4-self-disjoint", tol - worst, witness);

    // f ≤ g implies g' ≤ f'
    let mut worst = 0.0_f64;
    for a in &values {
        for b in &values {
            if a.iter().zip(b).all(|(x, y)| x <= &(y + tol)) {
                for (x, y) in a.iter().zip(b) {
                    worst = worst.max((1.0 - y) - (1.0 - x) - tol);
                }
            }
        }
    }
    report.push(Check::from_margin("pykacz-order-reversing", -worst.max(0.0)));
    Ok(report)
}

fn push_with_witness(report: &mut Report, name: &str, margin: f64, witness: Option<String>) {
    let mut check = Check::from_margin(name, margin);
    if margin < 0.0 {
        if let Some(w) = witness {
            check = check.with_witness(w);
        }
    }
    report.push(check);
}

/// Functionals used by the law survey for one system.
pub fn survey_functionals(system: System, seed: u64) -> Vec<MembershipFunctional> {
    let mut rng = sampling::rng_for(seed, u64::MAX);
    match system {
        System::Qubit => {
            let mut fs: Vec<_> = AXES.iter().map(|a| F::qubit(*a)).collect();
            fs.extend((0..4).map(|_| F::qubit(sampling::unit_vector(&mut rng))));
            fs
        }
        System::TwoQubit => {
            use QubitClass::*;
            let z = [0.0, 0.0, 1.0];
            let x = [1.0, 0.0, 0.0];
            let mut fs = vec![
                F::two_qubit(z, z, Plus, Plus),
                F::two_qubit(z, z, Minus, Minus),
                F::two_qubit(z, x, Plus, Minus),
                F::two_qubit(x, z, Plus, Both),
                F::two_qubit(x, x, Both, Minus),
            ];
            for _ in 0..4 {
                let a = sampling::unit_vector(&mut rng);
                let b = sampling::unit_vector(&mut rng);
                fs.push(F::two_qubit(a, b, Plus, Plus));
            }
            fs
        }
    }
}

/// Which classical laws the bold and the Zadeh connectives keep.
///
/// Bold keeps excluded middle and contradiction and loses distributivity;
/// Zadeh keeps distributivity and loses excluded middle. Each expected failure
/// passes when a witness is found.
pub fn law_survey(universe: &StateUniverse) -> Result<Report> {
    let fs = survey_functionals(universe.system, universe.seed);
    let vals: Vec<Vec<f64>> = fs.iter().map(|f| f.values(universe)).collect::<Result<_>>()?;
    let bold_or = |x: f64, y: f64| (x + y).min(1.0);
    let bold_and = |x: f64, y: f64| (x + y - 1.0).max(0.0);
    let n = universe.len();
    let mut report = Report::with_seed(universe.seed);

    let mut em = 0.0_f64;
    let mut contra = 0.0_f64;
    for v in &vals {
        for &x in v {
            em = em.max((bold_or(x, 1.0 - x) - 1.0).abs());
            contra = contra.max(bold_and(x, 1.0 - x));
        }
    }
    report.push(Check::from_margin("bold-excluded-middle", -em));
    report.push(Check::from_margin("bold-contradiction", -contra));

    let mut zd = 0.0_f64;
    let mut bold_gap = (0.0_f64, String::new());
    for a in &vals {
        for b in &vals {
            for c in &vals {
                for k in 0..n {
                    let (x, y, z) = (a[k], b[k], c[k]);
                    let lhs = x.min(y.max(z));
                    let rhs = x.min(y).max(x.min(z));
                    zd = zd.max((lhs - rhs).abs());
                    let lhs = bold_and(x, bold_or(y, z));
                    let rhs = bold_or(bold_and(x, y), bold_and(x, z));
                    if (lhs - rhs).abs() > bold_gap.0 {
                        bold_gap = (
                            (lhs - rhs).abs(),
                            format!(
                                "values={},{},{} lhs={} rhs={}",
                                format_number(x, false),
                                format_number(y, false),
                                format_number(z, false),
                                format_number(lhs, false),
                                format_number(rhs, false)
                            ),
                        );
                    }
                }
            }
        }
    }
    report.push(Check::from_margin("zadeh-distributivity", -zd));

    // excluded middle for Zadeh: max(f, 1 − f) < 1 somewhere
    let (mut zem, mut zem_at) = (1.0_f64, 0);
    for v in &vals {
        for (k, &x) in v.iter().enumerate() {
            let u = x.max(1.0 - x);
            if u < zem {
                zem = u;
                zem_at = k;
            }
        }
    }
    let fails = 1.0 - zem > Tolerances::DEFAULT.fuzzy;
    let mut check = Check::new("zadeh-excluded-middle-fails", fails, 1.0 - zem);
    if fails {
        check = check.with_witness(format!(
            "{} value={}",
            universe.states[zem_at],
            format_number(zem, false)
        ));
    }
    report.push(check);

    let fails = bold_gap.0 > Tolerances::DEFAULT.fuzzy;
    let mut check = Check::new("bold-distributivity-fails", fails, bold_gap.0);
    if fails {
        check = check.with_witness(bold_gap.1);
    }
    report.push(check);
    Ok(report)
}

/// The four pairwise orthogonal qubit families `{0,1}`, `{0,f_â}`,
/// `{f_â,f_−â}`, `{0,f_â,f_−â}`.
pub fn qubit_orthogonal_families(axis: Vec3) -> Vec<(&'static str, Vec<MembershipFunctional>)> {
    let f = F::qubit(axis);
    let g = F::qubit(vec3::neg(&axis));
    vec![
        ("family-0-1", vec![F::zero(), F::one()]),
        ("family-0-f", vec![F::zero(), f.clone()]),
        ("family-f-notf", vec![f.clone(), g.clone()]),
        ("family-0-f-notf", vec![F::zero(), f, g]),
    ]
}

/// `{0, 1, f_â, f_−â}`.
pub fn qubit_logic_family(axis: Vec3) -> Vec<MembershipFunctional> {
    vec![F::zero(), F::one(), F::qubit(axis), F::qubit(vec3::neg(&axis))]
}

/// The 16 bold unions of the four `εε′` atoms at fixed axes: a Boolean
/// family closed under complement.
pub fn two_qubit_logic_family(a: Vec3, b: Vec3) -> Vec<MembershipFunctional> {
    let atoms = two_qubit_resolution(a, b);
    (0u32..16)
        .map(|mask| {
            let parts: Vec<_> = (0..4)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| atoms[i].clone())
                .collect();
            match parts.len() {
                0 => F::zero(),
                1 => parts[0].clone(),
                _ => F::BoldUnion(parts),
            }
        })
        .collect()
}

/// The four `εε′` memberships at fixed axes.
pub fn two_qubit_resolution(a: Vec3, b: Vec3) -> Vec<MembershipFunctional> {
    use QubitClass::*;
    [(Plus, Plus), (Plus, Minus), (Minus, Plus), (Minus, Minus)]
        .iter()
        .map(|&(x, y)| F::two_qubit(a, b, x, y))
        .collect()
}
