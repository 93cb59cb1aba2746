//! Order and chain polytopes, Stanley's transfer map, and the
//! three-step description of piecewise-linear rowmotion.
//!
//! All maps here use the piecewise-linear boundary `0̂ ↦ 0`, `1̂ ↦ 1`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dynamics::PArray;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Polytope {
    /// Order-preserving maps into `[0, 1]`.
    Order,
    /// Order-reversing maps into `[0, 1]`.
    OrderReversing,
    /// Nonnegative maps whose sum along every chain is at most 1.
    Chain,
}

impl Polytope {
    fn name(self) -> &'static str {
        match self {
            Polytope::Order => "order polytope",
            Polytope::OrderReversing => "order-reversing polytope",
            Polytope::Chain => "chain polytope",
        }
    }
}

pub fn contains(kind: Polytope, f: &PArray) -> bool {
    let poset = f.poset();
    let v = f.values();
    match kind {
        Polytope::Order => (0..poset.len()).all(|x| {
            (!poset.is_minimal(x) || !v[x].is_negative())
                && (!poset.is_maximal(x) || v[x] <= Rational::one())
                && poset.upper_covers(x).iter().all(|&y| v[x] <= v[y])
        }),
        Polytope::OrderReversing => (0..poset.len()).all(|x| {
            (!poset.is_maximal(x) || !v[x].is_negative())
                && (!poset.is_minimal(x) || v[x] <= Rational::one())
                && poset.upper_covers(x).iter().all(|&y| v[x] >= v[y])
        }),
        Polytope::Chain => {
            v.iter().all(|q| !q.is_negative())
                && chain_maxima_from_bottom(poset, v).iter().all(|m| *m <= Rational::one())
        }
    }
}

fn require(kind: Polytope, f: &PArray) -> Result<()> {
    if contains(kind, f) {
        Ok(())
    } else {
        Err(Error::OutsidePolytope(kind.name()))
    }
}

/// `g(x)` plus the largest accumulated value over lower covers (0 at `0̂`).
fn chain_maxima_from_bottom(poset: &Poset, g: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); poset.len()];
    for &x in poset.linear_extension() {
        let below = poset.lower_covers(x).iter().map(|&y| &out[y]).max().cloned().unwrap_or_else(Rational::zero);
        out[x] = &g[x] + below;
    }
    out
}

/// `g(x)` plus the largest accumulated value over upper covers (0 at `1̂`).
fn chain_maxima_from_top(poset: &Poset, g: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); poset.len()];
    for &x in poset.linear_extension().iter().rev() {
        let above = poset.upper_covers(x).iter().map(|&y| &out[y]).max().cloned().unwrap_or_else(Rational::zero);
        out[x] = &g[x] + above;
    }
    out
}

/// Stanley's transfer map Φ: `Φ(f)(x) = min { f(x) - f(y) : y ⋖ x in P̂ }`.
pub fn transfer(f: &PArray) -> Result<PArray> {
    require(Polytope::Order, f)?;
    Ok(transfer_unchecked(f))
}

fn transfer_unchecked(f: &PArray) -> PArray {
    let poset = f.poset();
    let v = f.values();
    let values = (0..poset.len())
        .map(|x| {
            let below = poset.lower_covers(x).iter().map(|&y| &v[y]).max().cloned().unwrap_or_else(Rational::zero);
            &v[x] - below
        })
        .collect();
    f.with_values(values).expect("same poset")
}

/// Ψ = Φ⁻¹: the largest sum of `g` along a saturated chain from `0̂` up to
/// `x`, computed by the recursion over lower covers.
pub fn transfer_inverse(g: &PArray) -> Result<PArray> {
    require(Polytope::Chain, g)?;
    g.with_values(chain_maxima_from_bottom(g.poset(), g.values()))
}

/// α₁: `f ↦ 1 - f`.
pub fn complement_map(f: &PArray) -> PArray {
    let one = int(1);
    f.map(|v| &one - v)
}

/// α₃: the largest sum of `f` along a saturated chain from `x` up to `1̂`,
/// via `α₃(f)(x) = f(x) + max { α₃(f)(y) : y ⋗ x }` with 0 at `1̂`.
pub fn chain_sums_to_top(f: &PArray) -> PArray {
    f.with_values(chain_maxima_from_top(f.poset(), f.values())).expect("same poset")
}

/// Piecewise-linear rowmotion as α₁ ∘ α₃ ∘ α₂ with α₂ the transfer map.
pub fn pl_three_step(f: &PArray) -> Result<PArray> {
    let chain = transfer(f)?;
    Ok(complement_map(&chain_sums_to_top(&chain)))
}
