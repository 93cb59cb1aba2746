//! Structure of rowmotion and promotion beyond the toggle definitions: the
//! three-step factorization of rowmotion, the recombination map `D`,
//! reciprocal symmetry on rectangles, and quotient sequences of file
//! products.
//!
//! Everything is generic over [`ToggleAlgebra`], so each birational
//! identity has a piecewise-linear twin obtained by running it with
//! [`crate::dynamics::PiecewiseLinear`].

use serde::{Deserialize, Serialize};

use crate::dynamics::{file_toggle, promotion, promotion_inverse, rowmotion, Birational, PArray, ToggleAlgebra};
use crate::error::{Error, Result};
use crate::orbit::iterate;
use crate::poset::Poset;
use crate::rational::{format_list, format_rational, Rational};

/// α₂: `x ↦ ⨁_upper { f(x) ⊘ f(y) : y ⋖ x }` with `f(0̂)` the bottom value.
/// Birationally a parallel sum of ratios; piecewise-linearly the transfer map.
pub fn alpha2<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<PArray> {
    alg.validate(f.values())?;
    let poset = f.poset();
    let v = f.values();
    let mut out = Vec::with_capacity(poset.len());
    for x in 0..poset.len() {
        let covers = poset.lower_covers(x);
        let mut acc = match covers.first() {
            None => alg.div(&v[x], alg.bottom())?,
            Some(&y) => alg.div(&v[x], &v[y])?,
        };
        for &y in covers.iter().skip(1) {
            acc = alg.upper_aggregate(&acc, &alg.div(&v[x], &v[y])?)?;
        }
        out.push(acc);
    }
    f.with_values(out)
}

/// α₃: `g(x) ⊗ ⨁_lower { α₃(g)(y) : y ⋗ x }`, with the unit at `1̂`.
pub fn alpha3<A: ToggleAlgebra + ?Sized>(alg: &A, g: &PArray) -> Result<PArray> {
    let poset = g.poset();
    let mut out = vec![alg.unit(); poset.len()];
    for &x in poset.linear_extension().iter().rev() {
        let covers = poset.upper_covers(x);
        let mut above = match covers.first() {
            None => alg.unit(),
            Some(&y) => out[y].clone(),
        };
        for &y in covers.iter().skip(1) {
            above = alg.lower_aggregate(&above, &out[y])?;
        }
        out[x] = alg.mul(g.get(x), &above);
    }
    g.with_values(out)
}

/// α₁: `f ↦ reflect(f)`, i.e. `1/f` or `1 - f`.
pub fn alpha1<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<PArray> {
    let values = f.values().iter().map(|v| alg.reflect(v)).collect::<Result<Vec<_>>>()?;
    f.with_values(values)
}

/// `α₁ ∘ α₃ ∘ α₂`.
pub fn three_step<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<PArray> {
    alpha1(alg, &alpha3(alg, &alpha2(alg, f)?)?)
}

pub fn birational_three_step(f: &PArray) -> Result<PArray> {
    three_step(&Birational::default(), f)
}

/// Which coordinate picks the rowmotion iterate in a recombination map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    /// Entry `(i, j)` comes from `ρ^{i-1}(f)`.
    Row,
    /// Entry `(i, j)` comes from `ρ^{j-1}(f)`.
    Column,
}

/// For each element, which rowmotion iterate the recombination map reads
/// it from.
///
/// On `[a]×[b]` this is `i - 1` (row) or `j - 1` (column) for `(i, j)`.
/// With `experimental`, any rc-embedded poset is accepted and the index is
/// `(rank ∓ column) / 2`, shifted so that its minimum is 0.
pub fn recombination_rows(poset: &Poset, axis: Axis, experimental: bool) -> Result<Vec<usize>> {
    if poset.rectangle_dims().is_none() && !experimental {
        return Err(Error::NotRectangle);
    }
    let rc = poset.embedding().ok_or(Error::MissingEmbedding)?;
    let raw: Vec<i64> = rc
        .iter()
        .map(|p| match axis {
            Axis::Row => (p.rank - p.column).div_euclid(2),
            Axis::Column => (p.rank + p.column).div_euclid(2),
        })
        .collect();
    let min = raw.iter().copied().min().unwrap_or(0);
    Ok(raw.iter().map(|&r| (r - min) as usize).collect())
}

/// A recombination map together with the rowmotion iterates it reads.
#[derive(Clone, Debug)]
pub struct RecombinationMap {
    pub source: PArray,
    /// `ρ⁰(f), ρ¹(f), …` up to the largest index needed.
    pub iterates: Vec<PArray>,
    rows: Vec<usize>,
}

impl RecombinationMap {
    pub fn new<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray, axis: Axis, experimental: bool) -> Result<Self> {
        let rows = recombination_rows(f.poset(), axis, experimental)?;
        let depth = rows.iter().copied().max().unwrap_or(0);
        let mut iterates = vec![f.clone()];
        for _ in 0..depth {
            let next = rowmotion(alg, iterates.last().unwrap())?;
            iterates.push(next);
        }
        Ok(RecombinationMap { source: f.clone(), iterates, rows })
    }

    pub fn image(&self) -> PArray {
        let values = self.rows.iter().enumerate().map(|(x, &k)| self.iterates[k].get(x).clone()).collect();
        self.source.with_values(values).expect("same poset")
    }
}

/// `D(f)`: entry `(i, j)` is entry `(i, j)` of `ρ^{i-1}(f)`.
pub fn recombine<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<PArray> {
    Ok(RecombinationMap::new(alg, f, Axis::Row, false)?.image())
}

/// A failed identity, with the offending input verbatim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub input: Vec<String>,
    pub detail: String,
}

impl Violation {
    pub fn new(f: &PArray, detail: impl Into<String>) -> Self {
        Violation { input: f.to_strings(), detail: detail.into() }
    }
}

/// Checks `D ∘ π = ρ ∘ D` at `f`, with `D` the row recombination map.
///
/// This composition order does not hold in general; see
/// [`recombination_conjugacy_check`] for the forms that do.
pub fn recombination_check<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<Option<Violation>> {
    let lhs = recombine(alg, &promotion(alg, f)?)?;
    let rhs = rowmotion(alg, &recombine(alg, f)?)?;
    Ok((lhs != rhs).then(|| Violation::new(f, format!("D(π f) = {} but ρ(D f) = {}", lhs.display(), rhs.display()))))
}

/// Checks that the recombination map carries rowmotion to promotion:
///
/// * [`Axis::Column`]: `π ∘ E = E ∘ ρ`;
/// * [`Axis::Row`]: `π⁻¹ ∘ D = D ∘ ρ`.
pub fn recombination_conjugacy_check<A: ToggleAlgebra + ?Sized>(
    alg: &A,
    f: &PArray,
    axis: Axis,
    experimental: bool,
) -> Result<Option<Violation>> {
    let image = RecombinationMap::new(alg, f, axis, experimental)?.image();
    let lhs = match axis {
        Axis::Column => promotion(alg, &image)?,
        Axis::Row => promotion_inverse(alg, &image)?,
    };
    let rhs = RecombinationMap::new(alg, &rowmotion(alg, f)?, axis, experimental)?.image();
    let name = match axis {
        Axis::Column => "π(E f)",
        Axis::Row => "π⁻¹(D f)",
    };
    Ok((lhs != rhs)
        .then(|| Violation::new(f, format!("{name} = {} but recombined ρ f = {}", lhs.display(), rhs.display()))))
}

/// Checks that entry `(a-i+1, b-j+1)` of `ρ^{a+b+1-i-j}(f)` is
/// `reflect(f(i, j))` for every `(i, j)`; returns the first failure.
pub fn reciprocity_check<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<Option<Violation>> {
    let (a, b) = f.poset().rectangle_dims().ok_or(Error::NotRectangle)?;
    let mut iterates = vec![f.clone()];
    for _ in 1..(a + b) {
        let next = rowmotion(alg, iterates.last().unwrap())?;
        iterates.push(next);
    }
    for i in 1..=a {
        for j in 1..=b {
            let k = a + b + 1 - i - j;
            let expected = alg.reflect(f.at(i, j).expect("in range"))?;
            let got = iterates[k].at(a - i + 1, b - j + 1).expect("in range");
            if *got != expected {
                return Ok(Some(Violation::new(
                    f,
                    format!(
                        "entry ({},{}) of iterate {k} is {}, expected {} from ({i},{j})",
                        a - i + 1,
                        b - j + 1,
                        format_rational(got),
                        format_rational(&expected)
                    ),
                )));
            }
        }
    }
    Ok(None)
}

/// Checks `ρ^{a+b}(f) = f`.
pub fn period_check<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray, steps: usize) -> Result<Option<Violation>> {
    let g = iterate(f, steps, |x| rowmotion(alg, x))?;
    let h = iterate(f, steps, |x| promotion(alg, x))?;
    Ok(if g != *f {
        Some(Violation::new(f, format!("ρ^{steps} gives {}", g.display())))
    } else if h != *f {
        Some(Violation::new(f, format!("π^{steps} gives {}", h.display())))
    } else {
        None
    })
}

/// `q_i = p_i ⊘ p_{i-1}` where `p_i` is the ⊗-product of file `i` and
/// `p_0 = p_n` is the unit.
///
/// Toggling a file multiplies its new product by the `0̂` value if the file
/// holds the minimum and by the `1̂` value if it holds the maximum, so the
/// swap and shift identities need both boundary values equal to the unit:
/// `(1, 1)` birationally, `(0, 0)` piecewise-linearly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSequence {
    pub entries: Vec<Rational>,
}

impl QuotientSequence {
    pub fn new<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<Self> {
        alg.validate(f.values())?;
        let unit = alg.unit();
        if *alg.bottom() != unit || *alg.top() != unit {
            return Err(Error::WrongKind {
                expected: "boundary values equal to the unit",
                detail: format!("({}, {})", format_rational(alg.bottom()), format_rational(alg.top())),
            });
        }
        let files = f.poset().files()?;
        let mut p = Vec::with_capacity(files.len() + 2);
        p.push(alg.unit());
        for file in files {
            p.push(file.iter().fold(alg.unit(), |acc, &x| alg.mul(&acc, f.get(x))));
        }
        p.push(alg.unit());
        let entries = p.windows(2).map(|w| alg.div(&w[1], &w[0])).collect::<Result<_>>()?;
        Ok(QuotientSequence { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// ⊗-product of all entries.
    pub fn product<A: ToggleAlgebra + ?Sized>(&self, alg: &A) -> Rational {
        self.entries.iter().fold(alg.unit(), |acc, q| alg.mul(&acc, q))
    }

    /// σ_i: swaps entries `i` and `i + 1` (1-based).
    pub fn swapped(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.entries.len() {
            return Err(Error::FileOutOfRange { index: i, files: self.entries.len().saturating_sub(1) });
        }
        let mut entries = self.entries.clone();
        entries.swap(i - 1, i);
        Ok(QuotientSequence { entries })
    }

    pub fn shifted_left(&self) -> Self {
        let mut entries = self.entries.clone();
        if !entries.is_empty() {
            entries.rotate_left(1);
        }
        QuotientSequence { entries }
    }

    pub fn display(&self) -> String {
        format!("({})", format_list(&self.entries).join(","))
    }
}

pub fn quotient_sequence<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<QuotientSequence> {
    QuotientSequence::new(alg, f)
}

/// Checks `Q(τ*_i f) = σ_i Q(f)`.
pub fn file_toggle_swap_check<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray, i: usize) -> Result<Option<Violation>> {
    let expected = QuotientSequence::new(alg, f)?.swapped(i)?;
    let got = QuotientSequence::new(alg, &file_toggle(alg, f, i)?)?;
    Ok((got != expected)
        .then(|| Violation::new(f, format!("Q(τ*_{i} f) = {} but σ_{i} Q(f) = {}", got.display(), expected.display()))))
}

/// Checks that `Q(π f)` is the leftward cyclic shift of `Q(f)`.
pub fn cyclic_shift_check<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<Option<Violation>> {
    let expected = QuotientSequence::new(alg, f)?.shifted_left();
    let got = QuotientSequence::new(alg, &promotion(alg, f)?)?;
    Ok((got != expected)
        .then(|| Violation::new(f, format!("Q(π f) = {} but shift Q(f) = {}", got.display(), expected.display()))))
}
