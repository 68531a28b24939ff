//! Finite Borel sets and their classification against eigenvalue lists.
//!
//! A yes-no question "the measured value lies in E" only depends on which
//! eigenvalues E contains, so finite unions of half-open intervals and points
//! cover every case that can occur.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::dedup_sorted;
use crate::tolerance::Tolerances;

/// Half-open interval `[lo, hi)`. `lo` may be `-∞`, `hi` may be `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x < self.hi
    }
}

/// Finite union of disjoint half-open intervals and isolated points, kept in
/// a unique normal form: intervals sorted with touching ones merged, points
/// sorted and never inside an interval.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BorelSet {
    intervals: Vec<Interval>,
    points: Vec<f64>,
}

impl BorelSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The whole real line.
    pub fn reals() -> Self {
        Self::interval(f64::NEG_INFINITY, f64::INFINITY)
    }

    /// `[lo, hi)`; empty when `hi <= lo`.
    pub fn interval(lo: f64, hi: f64) -> Self {
        Self::from_parts(vec![Interval { lo, hi }], vec![])
    }

    pub fn point(x: f64) -> Self {
        Self::from_parts(vec![], vec![x])
    }

    pub fn from_parts(intervals: Vec<Interval>, points: Vec<f64>) -> Self {
        let mut ivs: Vec<Interval> = intervals.into_iter().filter(|i| i.hi > i.lo).collect();
        ivs.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        let mut merged: Vec<Interval> = Vec::with_capacity(ivs.len());
        for iv in ivs {
            match merged.last_mut() {
                Some(last) if iv.lo <= last.hi => last.hi = last.hi.max(iv.hi),
                _ => merged.push(iv),
            }
        }
        let mut pts: Vec<f64> = points
            .into_iter()
            .filter(|p| !p.is_nan() && !merged.iter().any(|iv| iv.contains(*p)))
            .collect();
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        Self {
            intervals: merged,
            points: pts,
        }
    }

    pub fn union(&self, other: &BorelSet) -> BorelSet {
        let mut ivs = self.intervals.clone();
        ivs.extend_from_slice(&other.intervals);
        let mut pts = self.points.clone();
        pts.extend_from_slice(&other.points);
        Self::from_parts(ivs, pts)
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty() && self.points.is_empty()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.intervals.iter().any(|iv| iv.contains(x)) || self.points.contains(&x)
    }

    /// Complement in ℝ, for sets without isolated points.
    ///
    /// Returns `None` when the set has points, since the complement of a
    /// point is not a finite union of half-open intervals.
    pub fn complement(&self) -> Option<BorelSet> {
        if !self.points.is_empty() {
            return None;
        }
        let mut out = Vec::new();
        let mut cursor = f64::NEG_INFINITY;
        for iv in &self.intervals {
            if iv.lo > cursor {
                out.push(Interval {
                    lo: cursor,
                    hi: iv.lo,
                });
            }
            cursor = iv.hi;
        }
        if cursor < f64::INFINITY {
            out.push(Interval {
                lo: cursor,
                hi: f64::INFINITY,
            });
        }
        Some(Self::from_parts(out, vec![]))
    }

    /// Is `self ⊆ other`? Decided exactly on the normal forms.
    pub fn is_subset(&self, other: &BorelSet) -> bool {
        let points_ok = self.points.iter().all(|&p| other.contains(p));
        let intervals_ok = self.intervals.iter().all(|iv| {
            other
                .intervals
                .iter()
                .any(|o| o.lo <= iv.lo && iv.hi <= o.hi)
        });
        points_ok && intervals_ok
    }
}

impl fmt::Display for BorelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let mut parts: Vec<String> = self
            .intervals
            .iter()
            .map(|iv| {
                let open = if iv.lo == f64::NEG_INFINITY { '(' } else { '[' };
                format!("{open}{},{})", iv.lo, iv.hi)
            })
            .collect();
        parts.extend(self.points.iter().map(|p| format!("{{{p}}}")));
        write!(f, "{}", parts.join("u"))
    }
}

fn parse_endpoint(s: &str) -> Result<f64> {
    let t = s.trim();
    match t {
        "inf" | "+inf" => Ok(f64::INFINITY),
        "-inf" => Ok(f64::NEG_INFINITY),
        _ => t
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Error::Parse(format!("bad interval endpoint `{t}`"))),
    }
}

impl FromStr for BorelSet {
    type Err = Error;

    /// Parses `[lo,hi)` intervals and `{p}` points joined by `u` or `|`,
    /// e.g. `[0,1)u{5}`; `(-inf,x)` for a left-unbounded interval, `R` for
    /// the real line and `{}` for the empty set.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty Borel set text".into()));
        }
        if text == "R" {
            return Ok(Self::reals());
        }
        let mut intervals = Vec::new();
        let mut points = Vec::new();
        for part in text.split(['u', '|']) {
            let part = part.trim();
            if part == "{}" {
                continue;
            }
            if let Some(inner) = part.strip_prefix('{').and_then(|p| p.strip_suffix('}')) {
                points.push(parse_endpoint(inner)?);
                continue;
            }
            let (open, rest) = part.split_at(part.chars().next().map_or(0, char::len_utf8));
            let body = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("interval `{part}` must end with `)`")))?;
            let (lo, hi) = body
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("interval `{part}` needs two endpoints")))?;
            let lo = parse_endpoint(lo)?;
            let hi = parse_endpoint(hi)?;
            match open {
                "[" if lo.is_finite() => {}
                "(" if lo == f64::NEG_INFINITY => {}
                _ => {
                    return Err(Error::Parse(format!(
                        "interval `{part}` must be `[lo,hi)` or `(-inf,hi)`"
                    )))
                }
            }
            if hi < lo {
                return Err(Error::Parse(format!("interval `{part}` has hi < lo")));
            }
            intervals.push(Interval { lo, hi });
        }
        Ok(Self::from_parts(intervals, points))
    }
}

/// Which of the distinct eigenvalues (ascending) a Borel set contains.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSelection {
    pub values: Vec<f64>,
    pub mask: Vec<bool>,
}

impl EigenSelection {
    pub fn selected_count(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    /// The four qubit classes; a degenerate observable only yields `Empty` or `Both`.
    pub fn qubit_class(&self) -> QubitClass {
        match self.mask.as_slice() {
            [false] | [false, false] => QubitClass::Empty,
            [true] | [true, true] => QubitClass::Both,
            [false, true] => QubitClass::Plus,
            [true, false] => QubitClass::Minus,
            other => panic!("qubit observables have at most two eigenvalues, got {}", other.len()),
        }
    }

    /// Pointwise `self ≤ other`.
    pub fn is_below(&self, other: &EigenSelection) -> bool {
        self.mask.len() == other.mask.len()
            && self.mask.iter().zip(&other.mask).all(|(a, b)| !a || *b)
    }
}

/// Classifies `e` against `eigenvalues`, after sorting and merging values
/// closer than the dedup tolerance.
pub fn classify(e: &BorelSet, eigenvalues: &[f64]) -> EigenSelection {
    let mut sorted = eigenvalues.to_vec();
    sorted.sort_by(f64::total_cmp);
    let values = dedup_sorted(&sorted, Tolerances::DEFAULT.eigen_dedup);
    let mask = values.iter().map(|&l| e.contains(l)).collect();
    EigenSelection { values, mask }
}

/// Qubit Borel classes relative to `λ₋ ≤ λ₊`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QubitClass {
    /// Neither eigenvalue (`E₀`).
    Empty,
    /// Only `λ₊` (`E₊`).
    Plus,
    /// Only `λ₋` (`E₋`).
    Minus,
    /// Both eigenvalues (`E±`).
    Both,
}

impl QubitClass {
    pub const ALL: [QubitClass; 4] = [
        QubitClass::Empty,
        QubitClass::Plus,
        QubitClass::Minus,
        QubitClass::Both,
    ];

    /// True for the classes that separate `λ₊` from `λ₋`.
    pub fn separates(self) -> bool {
        matches!(self, QubitClass::Plus | QubitClass::Minus)
    }

    /// Number of eigenvalues selected, counting a degenerate eigenvalue twice.
    pub fn count(self) -> usize {
        match self {
            QubitClass::Empty => 0,
            QubitClass::Plus | QubitClass::Minus => 1,
            QubitClass::Both => 2,
        }
    }

    /// The class of the complementary question.
    pub fn complement(self) -> QubitClass {
        match self {
            QubitClass::Empty => QubitClass::Both,
            QubitClass::Both => QubitClass::Empty,
            QubitClass::Plus => QubitClass::Minus,
            QubitClass::Minus => QubitClass::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            QubitClass::Empty => "0",
            QubitClass::Plus => "+",
            QubitClass::Minus => "-",
            QubitClass::Both => "+-",
        }
    }
}

impl FromStr for QubitClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "0" | "E0" | "none" => Ok(QubitClass::Empty),
            "+" | "E+" | "plus" => Ok(QubitClass::Plus),
            "-" | "E-" | "minus" => Ok(QubitClass::Minus),
            "+-" | "±" | "E+-" | "both" => Ok(QubitClass::Both),
            other => Err(Error::Parse(format!("unknown qubit class `{other}`"))),
        }
    }
}

impl fmt::Display for QubitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// The six two-qubit Borel types, by how many of `λ±` (first qubit) and
/// `μ±` (second qubit) the set contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwoQubitType {
    /// No eigenvalue.
    NoEigenvalue,
    /// Exactly one eigenvalue.
    OneEigenvalue,
    /// Both eigenvalues of one subsystem and none of the other.
    OneSubsystem,
    /// One eigenvalue of each subsystem.
    OnePerSubsystem,
    /// Three eigenvalues.
    ThreeEigenvalues,
    /// All four eigenvalues.
    All,
}

impl TwoQubitType {
    pub fn from_classes(a: QubitClass, b: QubitClass) -> Self {
        match (a.count(), b.count()) {
            (0, 0) => TwoQubitType::NoEigenvalue,
            (1, 0) | (0, 1) => TwoQubitType::OneEigenvalue,
            (2, 0) | (0, 2) => TwoQubitType::OneSubsystem,
            (1, 1) => TwoQubitType::OnePerSubsystem,
            (2, 1) | (1, 2) => TwoQubitType::ThreeEigenvalues,
            _ => TwoQubitType::All,
        }
    }

    /// Numbering 1 to 6.
    pub fn number(self) -> u8 {
        match self {
            TwoQubitType::NoEigenvalue => 1,
            TwoQubitType::OneEigenvalue => 2,
            TwoQubitType::OneSubsystem => 3,
            TwoQubitType::OnePerSubsystem => 4,
            TwoQubitType::ThreeEigenvalues => 5,
            TwoQubitType::All => 6,
        }
    }
}

/// Classifies one Borel set against the eigenvalues of both factors of `A ⊗ B`.
pub fn classify_pair(
    e: &BorelSet,
    eigen_a: &[f64],
    eigen_b: &[f64],
) -> (EigenSelection, EigenSelection) {
    (classify(e, eigen_a), classify(e, eigen_b))
}
