//! Weighted Schroeder sequences and the path-enumeration oracle behind them.
//!
//! A t-large Schroeder path of length `ell` runs from (0,0) to (2*ell,0) with
//! steps U=(1,1), D=(1,-1), L=(2,0), never below the x-axis; each L carries
//! weight `t`, so a path's weight is the monomial `t^(#L)`. A t-small path is
//! a t-large path with no L step on the x-axis.
//!
//! Sequence values come from the first-return convolution recurrences
//!   large(ell) = t*large(ell-1) + sum_j large(j)*large(ell-1-j)
//!   small(ell) = sum_j large(j)*small(ell-1-j)
//! and are cross-checked against exhaustive enumeration: summing the weights
//! of `enumerate_paths(kind, ell)` must reproduce `seq_poly(kind, ell)`.

use std::collections::HashSet;
use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::report::{Check, VerificationReport};

/// Which of the two weighted sequences: large admits level steps on the
/// x-axis, small does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Large,
    Small,
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceKind::Large => write!(f, "large"),
            SequenceKind::Small => write!(f, "small"),
        }
    }
}

/// Default cap on `enumerate_paths` length; large-path counts grow roughly
/// 5.8x per step, so the cap bounds test runtime.
pub const DEFAULT_PATH_CAP: usize = 10;

pub type Point = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
    Level,
}

impl Step {
    fn apply(self, (x, y): Point) -> Point {
        match self {
            Step::Up => (x + 1, y + 1),
            Step::Down => (x + 1, y - 1),
            Step::Level => (x + 2, y),
        }
    }
}

/// A single weighted path: a start point plus its step sequence. The
/// degenerate length-0 path is valid and occupies just its start point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchroederPath {
    pub start: Point,
    pub steps: Vec<Step>,
}

impl SchroederPath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        SchroederPath { start, steps }
    }

    pub fn end(&self) -> Point {
        self.steps.iter().fold(self.start, |p, s| s.apply(p))
    }

    /// Every lattice point the path visits, start included. A level step
    /// contributes only its two endpoints, not the skipped-over point.
    pub fn points(&self) -> Vec<Point> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        pts.push(p);
        for s in &self.steps {
            p = s.apply(p);
            pts.push(p);
        }
        pts
    }

    pub fn level_steps(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::Level).count()
    }

    /// The weight monomial `t^(#level steps)`.
    pub fn weight(&self) -> Poly {
        Poly::monomial(BigInt::one(), self.level_steps())
    }

    /// Independent validity check, used by tests to audit enumerated paths:
    /// never below the x-axis, and for small paths no level step at height 0.
    pub fn is_valid_for(&self, kind: SequenceKind) -> bool {
        let mut p = self.start;
        if p.1 < 0 {
            return false;
        }
        for s in &self.steps {
            if kind == SequenceKind::Small && *s == Step::Level && p.1 == 0 {
                return false;
            }
            p = s.apply(p);
            if p.1 < 0 {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for SchroederPath {
    /// Debug dump format: the step string over {U,D,L}, e.g. "UULDD".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
                Step::Level => "L",
            })?;
        }
        Ok(())
    }
}

struct Caches {
    large: Vec<Poly>,
    small: Vec<Poly>,
}

impl Caches {
    fn extend_to(&mut self, ell: usize) {
        while self.large.len() <= ell {
            let n = self.large.len();
            let mut next = &Poly::t() * &self.large[n - 1];
            for j in 0..n {
                next = &next + &(&self.large[j] * &self.large[n - 1 - j]);
            }
            self.large.push(next);
        }
        while self.small.len() <= ell {
            let n = self.small.len();
            let mut next = Poly::zero();
            for j in 0..n {
                next = &next + &(&self.large[j] * &self.small[n - 1 - j]);
            }
            self.small.push(next);
        }
    }

    fn get(&self, kind: SequenceKind, ell: usize) -> Option<&Poly> {
        match kind {
            SequenceKind::Large => self.large.get(ell),
            SequenceKind::Small => self.small.get(ell),
        }
    }
}

static CACHE: LazyLock<RwLock<Caches>> = LazyLock::new(|| {
    RwLock::new(Caches {
        large: vec![Poly::one()],
        small: vec![Poly::one()],
    })
});

/// The exact total weight of all paths of the given kind and length,
/// computed by the first-return recurrences and memoized.
pub fn seq_poly(kind: SequenceKind, ell: usize) -> Poly {
    if let Some(p) = CACHE.read().expect("cache poisoned").get(kind, ell) {
        return p.clone();
    }
    let mut cache = CACHE.write().expect("cache poisoned");
    cache.extend_to(ell);
    cache.get(kind, ell).expect("just extended").clone()
}

/// Depth-first generation of every path from `start` to `(end_x, 0)` subject
/// to the model constraints. `occupied` and `forbidden` support the
/// non-intersecting family models: a path may not visit an occupied or
/// forbidden lattice point (level steps occupy only their endpoints).
///
/// The caller gets each completed step sequence exactly once.
pub(crate) fn for_each_path(
    start: Point,
    end_x: i64,
    small: bool,
    occupied: &HashSet<Point>,
    forbidden: Option<Point>,
    f: &mut impl FnMut(&[Step]),
) {
    let blocked = |p: Point| occupied.contains(&p) || forbidden == Some(p);
    if start.1 < 0 || end_x - start.0 < start.1 || blocked(start) {
        return;
    }
    let mut steps = Vec::new();
    dfs(start, end_x, small, &blocked, &mut steps, f);
}

fn dfs(
    at: Point,
    end_x: i64,
    small: bool,
    blocked: &impl Fn(Point) -> bool,
    steps: &mut Vec<Step>,
    f: &mut impl FnMut(&[Step]),
) {
    if at == (end_x, 0) {
        f(steps);
        return;
    }
    for step in [Step::Up, Step::Down, Step::Level] {
        if small && step == Step::Level && at.1 == 0 {
            continue;
        }
        let next = step.apply(at);
        // reachability: y never negative and the remaining x-span must
        // accommodate the descent back to the axis
        if next.1 < 0 || end_x - next.0 < next.1 || blocked(next) {
            continue;
        }
        steps.push(step);
        dfs(next, end_x, small, blocked, steps, f);
        steps.pop();
    }
}

/// Every path of the given kind from (0,0) to (2*ell,0), each exactly once,
/// under the default enumeration cap.
pub fn enumerate_paths(kind: SequenceKind, ell: usize) -> Result<Vec<SchroederPath>> {
    enumerate_paths_capped(kind, ell, DEFAULT_PATH_CAP)
}

pub fn enumerate_paths_capped(
    kind: SequenceKind,
    ell: usize,
    cap: usize,
) -> Result<Vec<SchroederPath>> {
    if ell > cap {
        return Err(Error::CapExceeded {
            what: "path length",
            requested: ell,
            cap,
        });
    }
    let mut paths = Vec::new();
    let empty = HashSet::new();
    for_each_path(
        (0, 0),
        2 * ell as i64,
        kind == SequenceKind::Small,
        &empty,
        None,
        &mut |steps| paths.push(SchroederPath::new((0, 0), steps.to_vec())),
    );
    Ok(paths)
}

/// Catalan number by the binomial formula, the independent oracle for the
/// t=0 specialization (level steps vanish, leaving Dyck paths).
fn catalan(ell: usize) -> BigInt {
    let mut binom = BigInt::one();
    for k in 0..ell {
        binom = binom * BigInt::from(2 * ell - k) / BigInt::from(k + 1);
    }
    binom / BigInt::from(ell + 1)
}

/// Reference values at t=1 for both sequences, indices 0..=6.
pub const LARGE_AT_ONE: [i64; 7] = [1, 2, 6, 22, 90, 394, 1806];
pub const SMALL_AT_ONE: [i64; 7] = [1, 1, 3, 11, 45, 197, 903];

/// Checks the t=1 sequence values against the published lists.
pub fn verify_reference_values() -> Vec<VerificationReport> {
    let one = BigInt::one();
    let mut reports = Vec::new();
    for (kind, expected) in [
        (SequenceKind::Large, &LARGE_AT_ONE),
        (SequenceKind::Small, &SMALL_AT_ONE),
    ] {
        for (ell, &want) in expected.iter().enumerate() {
            let got = seq_poly(kind, ell).eval(&one);
            reports.push(
                Check::new("seq.reference_values_t1")
                    .param("kind", kind)
                    .param("len", ell)
                    .finish(Poly::constant(got), Poly::from_ints(&[want])),
            );
        }
    }
    reports
}

/// The module's own acceptance oracle: exhaustive enumeration totals must
/// reproduce the recurrence-computed polynomials.
pub fn verify_enumeration_matches_recurrence(
    max_len: usize,
    cap: usize,
) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for kind in [SequenceKind::Large, SequenceKind::Small] {
        for ell in 0..=max_len {
            let check = Check::new("seq.enumeration_matches_recurrence")
                .param("kind", kind)
                .param("len", ell);
            let total: Poly = enumerate_paths_capped(kind, ell, cap)?
                .iter()
                .map(SchroederPath::weight)
                .sum();
            reports.push(check.finish(total, seq_poly(kind, ell)));
        }
    }
    Ok(reports)
}

/// large(ell) == (1+t) * small(ell) for ell >= 1.
pub fn verify_large_small_relation(max_len: usize) -> Vec<VerificationReport> {
    (1..=max_len)
        .map(|ell| {
            Check::new("seq.large_equals_one_plus_t_small")
                .param("len", ell)
                .finish(
                    seq_poly(SequenceKind::Large, ell),
                    &Poly::one_plus_t() * &seq_poly(SequenceKind::Small, ell),
                )
        })
        .collect()
}

/// large(0) at t=0 is the Catalan sequence, computed here from the binomial
/// formula rather than any path machinery.
pub fn verify_catalan_specialization(max_len: usize) -> Vec<VerificationReport> {
    let zero = BigInt::from(0);
    (0..=max_len)
        .map(|ell| {
            let at_zero = seq_poly(SequenceKind::Large, ell).eval(&zero);
            Check::new("seq.catalan_at_t0").param("len", ell).finish(
                Poly::constant(at_zero),
                Poly::constant(catalan(ell)),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    #[test]
    fn base_cases_agree() {
        assert_eq!(seq_poly(SequenceKind::Large, 0), Poly::one());
        assert_eq!(seq_poly(SequenceKind::Small, 0), Poly::one());
    }

    #[test]
    fn small_length_two_is_two_plus_t() {
        // enumerate_paths lists UUDD, ULD (weight t), UDUD
        assert_eq!(seq_poly(SequenceKind::Small, 2), Poly::from_ints(&[2, 1]));
        let paths = enumerate_paths(SequenceKind::Small, 2).unwrap();
        assert_eq!(paths.len(), 3);
        let dumps: HashSet<String> = paths.iter().map(|p| p.to_string()).collect();
        assert!(dumps.contains("UUDD") && dumps.contains("ULD") && dumps.contains("UDUD"));
    }

    #[test]
    fn large_length_one_paths() {
        let paths = enumerate_paths(SequenceKind::Large, 1).unwrap();
        let dumps: HashSet<String> = paths.iter().map(|p| p.to_string()).collect();
        assert_eq!(dumps, HashSet::from(["UD".to_owned(), "L".to_owned()]));
        let total: Poly = paths.iter().map(SchroederPath::weight).sum();
        assert_eq!(total, Poly::one_plus_t());
    }

    #[test]
    fn small_length_one_is_single_path() {
        let paths = enumerate_paths(SequenceKind::Small, 1).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].to_string(), "UD");
    }

    #[test]
    fn empty_path_enumeration() {
        let paths = enumerate_paths(SequenceKind::Large, 0).unwrap();
        assert_eq!(paths.len(), 1);
        assert!(paths[0].steps.is_empty());
        assert_eq!(paths[0].weight(), Poly::one());
        assert_eq!(paths[0].points(), vec![(0, 0)]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_paths_capped(SequenceKind::Large, 5, 4),
            Err(Error::CapExceeded { requested: 5, cap: 4, .. })
        ));
    }

    #[test]
    fn enumeration_matches_recurrence_up_to_eight() {
        let reports = verify_enumeration_matches_recurrence(8, 10).unwrap();
        assert!(all_pass(&reports), "{reports:#?}");
    }

    #[test]
    fn enumerated_paths_are_valid_and_distinct() {
        for kind in [SequenceKind::Large, SequenceKind::Small] {
            let paths = enumerate_paths(kind, 4).unwrap();
            let distinct: HashSet<_> = paths.iter().cloned().collect();
            assert_eq!(distinct.len(), paths.len());
            for p in &paths {
                assert!(p.is_valid_for(kind));
                assert_eq!(p.end(), (8, 0));
            }
        }
    }

    #[test]
    fn reference_values_hold() {
        assert!(all_pass(&verify_reference_values()));
    }

    #[test]
    fn large_small_relation_holds_to_ten() {
        assert!(all_pass(&verify_large_small_relation(10)));
    }

    #[test]
    fn catalan_specialization_holds_to_eight() {
        assert!(all_pass(&verify_catalan_specialization(8)));
    }

    #[test]
    fn catalan_oracle_reference_values() {
        let expected = [1i64, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (ell, &want) in expected.iter().enumerate() {
            assert_eq!(catalan(ell), BigInt::from(want));
        }
    }
}
