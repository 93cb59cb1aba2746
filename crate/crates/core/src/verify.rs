//! Seeded verification suites producing deterministic JSON reports.
//!
//! Each suite checks a family of identities on random inputs (exact
//! rationals) and, where the state space is finite, exhaustively on order
//! ideals. Work is spread over a rayon pool but results are collected in
//! input order, so a seed and configuration always give the same report.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::birational::{
    cyclic_shift_check, file_toggle_swap_check, period_check, reciprocity_check, recombination_conjugacy_check,
    three_step, Axis, QuotientSequence, Violation,
};
use crate::dynamics::{
    apply_map, promotion, rowmotion, toggle, toggle_sequence, vertex_of_ideal, Birational, MapKind, PArray,
    PiecewiseLinear, Regime, ToggleAlgebra,
};
use crate::error::{Error, Result};
use crate::homomesy::{combinatorial_file_homomesy, homomesy_batch, standard_functionals, FunctionalKind};
use crate::ideal::{
    enumerate_ideals, promotion_ideal, rowmotion_by_complement, rowmotion_ideal, toggle_ideal, OrderIdeal,
};
use crate::orbit::iterate;
use crate::polytope::{contains, pl_three_step, Polytope};
use crate::poset::{Poset, Shape};
use crate::rational::{format_list, format_rational, int, Rational};
use crate::sample::{samples, seeded_rng};
use crate::tableaux::{
    bender_knuth_file_check, bridge_check, promotion as tableau_promotion, random_ssyt, Orientation, Ssyt,
};

/// Violations kept per theorem.
const MAX_VIOLATIONS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Order,
    Recombination,
    Reciprocity,
    Quotient,
    Homomesy,
    ThreeStep,
    Bridge,
    Vertex,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Order,
        Suite::Recombination,
        Suite::Reciprocity,
        Suite::Quotient,
        Suite::Homomesy,
        Suite::ThreeStep,
        Suite::Bridge,
        Suite::Vertex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Order => "order",
            Suite::Recombination => "recombination",
            Suite::Reciprocity => "reciprocity",
            Suite::Quotient => "quotient",
            Suite::Homomesy => "homomesy",
            Suite::ThreeStep => "three-step",
            Suite::Bridge => "bridge",
            Suite::Vertex => "vertex",
        }
    }

    pub fn default_samples(self) -> usize {
        match self {
            Suite::Homomesy => 50,
            _ => 100,
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
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite {s:?}")))
    }
}

/// Which regimes a suite exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Combinatorial,
    #[serde(rename = "pl")]
    PiecewiseLinear,
    Birational,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "combinatorial" => Ok(Mode::Combinatorial),
            "pl" => Ok(Mode::PiecewiseLinear),
            "birational" => Ok(Mode::Birational),
            _ => Err(Error::Config(format!("unknown regime {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub poset: Arc<Poset>,
    pub samples: usize,
    pub seed: u64,
    pub cap: usize,
    /// `None` runs every regime the suite supports.
    pub mode: Option<Mode>,
    /// Used as the first sample in each numeric regime.
    pub start: Option<Vec<Rational>>,
}

impl VerifyConfig {
    pub fn new(poset: Arc<Poset>, samples: usize, seed: u64) -> Self {
        VerifyConfig { poset, samples, seed, cap: crate::orbit::DEFAULT_CAP, mode: None, start: None }
    }

    fn runs(&self, mode: Mode) -> bool {
        self.mode.is_none_or(|m| m == mode)
    }

    fn inputs(&self, regime: Regime) -> Result<Vec<PArray>> {
        let mut out = Vec::with_capacity(self.samples);
        if let Some(start) = &self.start {
            out.push(PArray::new(self.poset.clone(), start.clone())?);
        }
        let rest = self.samples.saturating_sub(out.len());
        out.extend(samples(self.seed, regime, &self.poset, rest));
        Ok(out)
    }

    fn rectangle(&self, suite: Suite) -> Result<(usize, usize)> {
        self.poset.rectangle_dims().ok_or_else(|| Error::Config(format!("suite {suite} needs a rectangle poset")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub samples: usize,
    pub pass: bool,
    pub violations: Vec<Violation>,
}

impl TheoremReport {
    fn from_outcomes(theorem: impl Into<String>, outcomes: Vec<Option<Violation>>) -> Self {
        let samples = outcomes.len();
        let violations: Vec<Violation> = outcomes.into_iter().flatten().take(MAX_VIOLATIONS).collect();
        TheoremReport { theorem: theorem.into(), samples, pass: violations.is_empty(), violations }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub poset: String,
    pub seed: u64,
    pub pass: bool,
    pub theorems: Vec<TheoremReport>,
}

pub fn describe(poset: &Poset) -> String {
    match poset.shape() {
        Shape::Rectangle { a, b } => format!("{a}x{b}"),
        Shape::Triangle { n } => format!("triangle {n}"),
        Shape::Custom => format!("custom ({} elements)", poset.len()),
    }
}

/// Runs `check` on every input in parallel; errors become violations.
fn check_all<T, F>(
    theorem: impl Into<String>,
    inputs: &[T],
    describe_input: impl Fn(&T) -> Vec<String> + Sync,
    check: F,
) -> TheoremReport
where
    T: Sync,
    F: Fn(&T) -> Result<Option<String>> + Sync,
{
    let outcomes = inputs
        .par_iter()
        .map(|x| match check(x) {
            Ok(None) => None,
            Ok(Some(detail)) => Some(Violation { input: describe_input(x), detail }),
            Err(e) => Some(Violation { input: describe_input(x), detail: e.to_string() }),
        })
        .collect();
    TheoremReport::from_outcomes(theorem, outcomes)
}

fn check_arrays<F>(theorem: impl Into<String>, inputs: &[PArray], check: F) -> TheoremReport
where
    F: Fn(&PArray) -> Result<Option<Violation>> + Sync,
{
    let outcomes = inputs
        .par_iter()
        .map(|f| match check(f) {
            Ok(v) => v,
            Err(e) => Some(Violation::new(f, e.to_string())),
        })
        .collect();
    TheoremReport::from_outcomes(theorem, outcomes)
}

fn check_ideals<F>(theorem: impl Into<String>, poset: &Poset, ideals: &[OrderIdeal], check: F) -> TheoremReport
where
    F: Fn(&OrderIdeal) -> Result<Option<String>> + Sync,
{
    check_all(theorem, ideals, |i| vec![i.display(poset)], check)
}

fn numeric_regimes(config: &VerifyConfig) -> Vec<(Regime, Box<dyn ToggleAlgebra>)> {
    let mut out: Vec<(Regime, Box<dyn ToggleAlgebra>)> = Vec::new();
    if config.runs(Mode::PiecewiseLinear) {
        out.push((Regime::PiecewiseLinear, Box::new(PiecewiseLinear::default())));
    }
    if config.runs(Mode::Birational) {
        out.push((Regime::Birational, Box::new(Birational::default())));
    }
    out
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<SuiteReport> {
    let theorems = match suite {
        Suite::Order => order_suite(config)?,
        Suite::Recombination => recombination_suite(config)?,
        Suite::Reciprocity => reciprocity_suite(config)?,
        Suite::Quotient => quotient_suite(config)?,
        Suite::Homomesy => homomesy_suite(config)?,
        Suite::ThreeStep => three_step_suite(config)?,
        Suite::Bridge => bridge_suite(config)?,
        Suite::Vertex => vertex_suite(config)?,
    };
    Ok(SuiteReport {
        suite,
        poset: describe(&config.poset),
        seed: config.seed,
        pass: theorems.iter().all(|t| t.pass),
        theorems,
    })
}

fn order_suite(config: &VerifyConfig) -> Result<Vec<TheoremReport>> {
    let (a, b) = config.rectangle(Suite::Order)?;
    let n = a + b;
    let poset = &config.poset;
    let mut out = Vec::new();
    if config.runs(Mode::Combinatorial) {
        let ideals = enumerate_ideals(poset);
        for map in [MapKind::Rowmotion, MapKind::Promotion] {
            out.push(check_ideals(format!("combinatorial {map}^{n} = id on J(P)"), poset, &ideals, |i| {
                let step = |j: &OrderIdeal| match map {
                    MapKind::Rowmotion => rowmotion_ideal(poset, j),
                    MapKind::Promotion => promotion_ideal(poset, j),
                };
                let end = iterate(i, n, step)?;
                Ok((end != *i).then(|| format!("returns {}", end.display(poset))))
            }));
        }
    }
    for (regime, alg) in numeric_regimes(config) {
        let inputs = config.inputs(regime)?;
        out.push(check_arrays(format!("{regime} rowmotion^{n} = promotion^{n} = id"), &inputs, |f| {
            period_check(alg.as_ref(), f, n)
        }));
        if regime == Regime::PiecewiseLinear {
            let inside: Vec<PArray> = inputs.iter().filter(|f| contains(Polytope::Order, f)).cloned().collect();
            out.push(check_arrays("pl maps preserve the order polytope", &inside, |f| {
                for map in [MapKind::Rowmotion, MapKind::Promotion] {
                    let g = apply_map(alg.as_ref(), map, f)?;
                    if !contains(Polytope::Order, &g) {
                        return Ok(Some(Violation::new(f, format!("{map} leaves the polytope: {}", g.display()))));
                    }
                }
                Ok(None)
            }));
        }
    }
    Ok(out)
}

fn recombination_suite(config: &VerifyConfig) -> Result<Vec<TheoremReport>> {
    config.rectangle(Suite::Recombination)?;
    let mut out = Vec::new();
    for (regime, alg) in numeric_regimes(config) {
        let inputs = config.inputs(regime)?;
        out.push(check_arrays(format!("{regime} π ∘ E = E ∘ ρ (column recombination)"), &inputs, |f| {
            recombination_conjugacy_check(alg.as_ref(), f, Axis::Column, false)
        }));
        out.push(check_arrays(format!("{regime} π⁻¹ ∘ D = D ∘ ρ (row recombination)"), &inputs, |f| {
            recombination_conjugacy_check(alg.as_ref(), f, Axis::Row, false)
        }));
    }
    Ok(out)
}

fn reciprocity_suite(config: &VerifyConfig) -> Result<Vec<TheoremReport>> {
    config.rectangle(Suite::Reciprocity)?;
    let mut out = Vec::new();
    for (regime, alg) in numeric_regimes(config) {
        let inputs = config.inputs(regime)?;
        let target = match regime {
            Regime::PiecewiseLinear => "1 - f(i,j)",
            Regime::Birational => "1/f(i,j)",
        };
        out.push(check_arrays(
            format!("{regime} reciprocal symmetry: ρ^(a+b+1-i-j) f at (a-i+1,b-j+1) = {target}"),
            &inputs,
            |f| reciprocity_check(alg.as_ref(), f),
        ));
    }
    Ok(out)
}

fn quotient_suite(config: &VerifyConfig) -> Result<Vec<TheoremReport>> {
    config.rectangle(Suite::Quotient)?;
    let files = config.poset.files()?.len();
    let mut out = Vec::new();
    let mut algebras: Vec<(Regime, Box<dyn ToggleAlgebra>)> = Vec::new();
    if config.runs(Mode::PiecewiseLinear) {
        algebras.push((Regime::PiecewiseLinear, Box::new(PiecewiseLinear { bottom: int(0), top: int(0) })));
    }
    if config.runs(Mode::Birational) {
        algebras.push((Regime::Birational, Box::new(Birational::default())));
    }
    for (regime, alg) in algebras {
        let alg = alg.as_ref();
        let inputs = config.inputs(regime)?;
        let boundary = format!("boundary ({},{})", format_rational(alg.bottom()), format_rational(alg.top()));
        out.push(check_arrays(format!("{regime} Q(τ*_i f) swaps q_i and q_(i+1), {boundary}"), &inputs, |f| {
            for i in 1..files {
                if let Some(v) = file_toggle_swap_check(alg, f, i)? {
                    return Ok(Some(v));
                }
            }
            Ok(None)
        }));
        out.push(check_arrays(format!("{regime} Q(π f) is the cyclic shift of Q(f), {boundary}"), &inputs, |f| {
            cyclic_shift_check(alg, f)
        }));
        out.push(check_arrays(format!("{regime} product of Q(f) is the unit, {boundary}"), &inputs, |f| {
            let q = QuotientSequence::new(alg, f)?;
            let p = q.product(alg);
            Ok((p != alg.unit())
                .then(|| Violation::new(f, format!("Q = {} has product {}", q.display(), format_rational(&p)))))
        }));
    }
    Ok(out)
}

fn homomesy_suite(config: &VerifyConfig) -> Result<Vec<TheoremReport>> {
    config.rectangle(Suite::Homomesy)?;
    let poset = &config.poset;
    let mut out = Vec::new();
    for (regime, alg) in numeric_regimes(config) {
        let inputs = config.inputs(regime)?;
        let functionals = standard_functionals(poset, FunctionalKind::for_regime(regime))?;
        for map in [MapKind::Rowmotion, MapKind::Promotion] {
            for (report, _) in homomesy_batch(alg.as_ref(), map, &functionals, &inputs, config.cap)? {
                // reciprocal symmetry pins the constant of each antipodal pair
                let expected = report.functional.starts_with("F(").then_some(match regime {
                    Regime::PiecewiseLinear => "1",
                    Regime::Birational => "product 1",
                });
                let mut violations: Vec<Violation> = report.counterexample.into_iter().collect();
                if let Some(e) = expected.filter(|e| *e != report.constant && report.samples > 0) {
                    violations
                        .push(Violation::new(&inputs[0], format!("constant {} but expected {e}", report.constant)));
                }
                out.push(TheoremReport {
                    theorem: format!(
                        "{regime} {} homomesic under {map}, constant {}",
                        report.functional, report.constant
                    ),
                    samples: report.samples,
                    pass: violations.is_empty(),
                    violations,
                });
            }
        }
    }
    if config.runs(Mode::Combinatorial) {
        for map in [MapKind::Rowmotion, MapKind::Promotion] {
            for file in combinatorial_file_homomesy(poset, map, config.cap)? {
                out.push(TheoremReport {
                    theorem: format!(
                        "combinatorial file {} count outside the ideal homomesic under {map}, constant {}",
                        file.file,
                        format_rational(&file.constant)
                    ),
                    samples: file.orbits,
                    pass: file.pass,
                    violations: Vec::new(),
                });
            }
        }
    }
    Ok(out)
}

fn three_step_suite(config: &VerifyConfig) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for (regime, alg) in numeric_regimes(config) {
        let inputs = config.inputs(regime)?;
        out.push(check_arrays(format!("{regime} α₁ ∘ α₃ ∘ α₂ = ρ"), &inputs, |f| {
            let lhs = three_step(alg.as_ref(), f)?;
            let rhs = rowmotion(alg.as_ref(), f)?;
            Ok((lhs != rhs).then(|| Violation::new(f, format!("three-step {} vs ρ {}", lhs.display(), rhs.display()))))
        }));
        if regime == Regime::PiecewiseLinear {
            out.push(check_arrays("pl (1 - chain sums to 1̂) ∘ Φ = ρ on the order polytope", &inputs, |f| {
                let lhs = pl_three_step(f)?;
                let rhs = rowmotion(alg.as_ref(), f)?;
                Ok((lhs != rhs)
                    .then(|| Violation::new(f, format!("factorization {} vs ρ {}", lhs.display(), rhs.display()))))
            }));
        }
    }
    Ok(out)
}

fn bridge_suite(config: &VerifyConfig) -> Result<Vec<TheoremReport>> {
    let (a, rest) = config.rectangle(Suite::Bridge)?;
    let n = (a + rest) as u32;
    let mut rng = seeded_rng(config.seed);
    let mut tableaux = Vec::with_capacity(config.samples * 3);
    for cols in 1..=3 {
        for _ in 0..config.samples {
            tableaux.push(random_ssyt(&mut rng, a, cols, n)?);
        }
    }
    let show = |t: &Ssyt| t.rows().iter().map(|r| format!("{r:?}")).collect::<Vec<_>>();
    let mut out = Vec::new();
    out.push(check_all(
        format!("v(π_S T) = π_P v(T), T of shape {a}xB with entries ≤ {n}, B ≤ 3"),
        &tableaux,
        show,
        |t| {
            let r = bridge_check(t, Orientation::Transposed)?;
            Ok((!r.equal).then(|| format!("v(π_S T) = ({}) but π_P v(T) = ({})", r.left.join(","), r.right.join(","))))
        },
    ));
    out.push(check_all("v(BK_i T) = τ*_i v(T) for every i", &tableaux, show, |t| {
        Ok(bender_knuth_file_check(t, Orientation::Transposed)?.map(|i| format!("fails at i = {i}")))
    }));
    out.push(check_all(format!("π_S^{n} = id"), &tableaux, show, |t| {
        let end = iterate(t, n as usize, tableau_promotion)?;
        Ok((end != *t).then(|| format!("returns {:?}", end.rows())))
    }));
    out.push(check_all(
        "displayed orientation: v(BK_i T) = τ*_(n-i) v(T) and v(π_S T) = π_P⁻¹ v(T)",
        &tableaux,
        show,
        |t| {
            if let Some(i) = bender_knuth_file_check(t, Orientation::Displayed)? {
                return Ok(Some(format!("file pairing fails at i = {i}")));
            }
            let r = bridge_check(t, Orientation::Displayed)?;
            Ok((!r.equal)
                .then(|| format!("v(π_S T) = ({}) but π_P⁻¹ v(T) = ({})", r.left.join(","), r.right.join(","))))
        },
    ));
    Ok(out)
}

fn vertex_suite(config: &VerifyConfig) -> Result<Vec<TheoremReport>> {
    let poset = &config.poset;
    let embedded = poset.has_embedding();
    let mut out = Vec::new();
    for (regime, alg) in numeric_regimes(config) {
        let alg = alg.as_ref();
        let inputs = config.inputs(regime)?;
        out.push(check_arrays(format!("{regime} toggles are involutions"), &inputs, |f| {
            for x in 0..poset.len() {
                let back = toggle(alg, &toggle(alg, f, x)?, x)?;
                if back != *f {
                    return Ok(Some(Violation::new(
                        f,
                        format!("toggling {} twice gives {}", poset.label(x), back.display()),
                    )));
                }
            }
            Ok(None)
        }));
        out.push(check_arrays(format!("{regime} toggles at non-covering pairs commute"), &inputs, |f| {
            for x in 0..poset.len() {
                for y in x + 1..poset.len() {
                    if poset.covers_either(x, y) {
                        continue;
                    }
                    let xy = toggle(alg, &toggle(alg, f, x)?, y)?;
                    let yx = toggle(alg, &toggle(alg, f, y)?, x)?;
                    if xy != yx {
                        return Ok(Some(Violation::new(
                            f,
                            format!("{} and {} do not commute", poset.label(x), poset.label(y)),
                        )));
                    }
                }
            }
            Ok(None)
        }));
        out.push(check_arrays(format!("{regime} rowmotion is independent of the order within ranks"), &inputs, |f| {
            let reversed: Vec<usize> = poset.ranks().iter().rev().flat_map(|r| r.iter().rev().copied()).collect();
            let lhs = toggle_sequence(alg, f, &reversed)?;
            let rhs = rowmotion(alg, f)?;
            Ok((lhs != rhs).then(|| Violation::new(f, format!("reversed ranks give {}", lhs.display()))))
        }));
        if embedded {
            out.push(check_arrays(
                format!("{regime} promotion is independent of the order within files"),
                &inputs,
                |f| {
                    let reversed: Vec<usize> = poset.files()?.iter().flat_map(|r| r.iter().rev().copied()).collect();
                    let lhs = toggle_sequence(alg, f, &reversed)?;
                    let rhs = promotion(alg, f)?;
                    Ok((lhs != rhs).then(|| Violation::new(f, format!("reversed files give {}", lhs.display()))))
                },
            ));
        }
    }
    if config.runs(Mode::Combinatorial) || config.runs(Mode::PiecewiseLinear) {
        let ideals = enumerate_ideals(poset);
        let pl = PiecewiseLinear::default();
        out.push(check_ideals("pl toggles on vertices are ideal toggles", poset, &ideals, |i| {
            let v = vertex_of_ideal(poset.clone(), i);
            for x in 0..poset.len() {
                let lhs = toggle(&pl, &v, x)?;
                let rhs = vertex_of_ideal(poset.clone(), &toggle_ideal(poset, i, x)?);
                if lhs != rhs {
                    return Ok(Some(format!("at {}: {} vs {}", poset.label(x), lhs.display(), rhs.display())));
                }
            }
            Ok(None)
        }));
        let mut maps = vec![MapKind::Rowmotion];
        if embedded {
            maps.push(MapKind::Promotion);
        }
        for map in maps {
            out.push(check_ideals(format!("pl {map} on vertices is combinatorial {map}"), poset, &ideals, |i| {
                let lhs = apply_map(&pl, map, &vertex_of_ideal(poset.clone(), i))?;
                let next = match map {
                    MapKind::Rowmotion => rowmotion_ideal(poset, i)?,
                    MapKind::Promotion => promotion_ideal(poset, i)?,
                };
                let rhs = vertex_of_ideal(poset.clone(), &next);
                Ok((lhs != rhs).then(|| format!("{} vs {}", format_list(lhs.values()).join(","), next.display(poset))))
            }));
        }
        out.push(check_ideals("combinatorial toggles are involutions", poset, &ideals, |i| {
            for x in 0..poset.len() {
                if toggle_ideal(poset, &toggle_ideal(poset, i, x)?, x)? != *i {
                    return Ok(Some(format!("toggling {} twice", poset.label(x))));
                }
            }
            Ok(None)
        }));
        out.push(check_ideals(
            "toggle-composed rowmotion = complement, minimal elements, down-saturation",
            poset,
            &ideals,
            |i| {
                let lhs = rowmotion_ideal(poset, i)?;
                let rhs = rowmotion_by_complement(poset, i)?;
                Ok((lhs != rhs).then(|| format!("{} vs {}", lhs.display(poset), rhs.display(poset))))
            },
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn config(a: usize, b: usize, samples: usize) -> VerifyConfig {
        VerifyConfig::new(Arc::new(Poset::rectangle(a, b).unwrap()), samples, 7)
    }

    #[test]
    fn every_suite_passes_on_small_rectangles() {
        for suite in Suite::ALL {
            for (a, b) in [(1, 1), (2, 2), (2, 3)] {
                let r = run_suite(suite, &config(a, b, 8)).unwrap();
                assert!(r.pass, "{suite} on {a}x{b}: {r:?}");
                assert!(!r.theorems.is_empty());
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let c = config(2, 3, 10);
        let one = serde_json::to_string(&run_suite(Suite::Homomesy, &c).unwrap()).unwrap();
        let two = serde_json::to_string(&run_suite(Suite::Homomesy, &c).unwrap()).unwrap();
        assert_eq!(one, two);
    }

    #[test]
    fn start_is_first_sample() {
        let mut c = config(2, 2, 1);
        c.mode = Some(Mode::Birational);
        c.start = Some(vec![rat(1, 1), rat(2, 1), rat(3, 1), rat(4, 1)]);
        let r = run_suite(Suite::Reciprocity, &c).unwrap();
        assert!(r.pass);
        assert_eq!(r.theorems.len(), 1);
        assert_eq!(r.theorems[0].samples, 1);
    }

    #[test]
    fn failures_carry_the_input() {
        let c = config(2, 2, 3);
        let report =
            check_arrays("always fails", &c.inputs(Regime::Birational).unwrap(), |f| Ok(Some(Violation::new(f, "no"))));
        assert!(!report.pass);
        assert_eq!(report.violations.len(), 3);
        assert_eq!(report.violations[0].input.len(), 4);
    }

    #[test]
    fn triangles_run_generic_suites() {
        let c = VerifyConfig::new(Arc::new(Poset::triangle(3).unwrap()), 10, 1);
        for suite in [Suite::ThreeStep, Suite::Vertex] {
            assert!(run_suite(suite, &c).unwrap().pass, "{suite}");
        }
        for suite in [Suite::Order, Suite::Quotient, Suite::Bridge] {
            assert!(matches!(run_suite(suite, &c), Err(Error::Config(_))));
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{}\"", s.name()));
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
