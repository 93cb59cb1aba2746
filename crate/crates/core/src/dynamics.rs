//! The toggle engine shared by the piecewise-linear and birational regimes.
//!
//! A toggle at `x` replaces `f(x)` by `L ⊗ R ⊘ f(x)`, where `L` aggregates
//! the values at the lower covers of `x` (with `0̂` standing in below
//! minimal elements) and `R` aggregates the upper covers (with `1̂` above
//! maximal elements). A [`ToggleAlgebra`] supplies the operations:
//!
//! | operation          | piecewise-linear | birational     |
//! |--------------------|------------------|----------------|
//! | lower aggregate    | `max`            | `+`            |
//! | upper aggregate    | `min`            | parallel sum   |
//! | multiply           | `+`              | `×`            |
//! | divide             | `-`              | `÷`            |
//! | unit               | `0`              | `1`            |
//! | boundary `(0̂, 1̂)`  | `(0, 1)`         | `(1, 1)`       |
//!
//! so the piecewise-linear maps are the tropicalization of the birational
//! ones by construction.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::OrderIdeal;
use crate::poset::{Poset, PosetDoc};
use crate::rational::{format_rational, int, parse_rational, serde_rational_vec, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    #[serde(rename = "pl")]
    PiecewiseLinear,
    Birational,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::PiecewiseLinear => "pl",
            Regime::Birational => "birational",
        })
    }
}

/// Arithmetic context for toggling.
pub trait ToggleAlgebra: Send + Sync {
    fn regime(&self) -> Regime;

    /// Value at `0̂`.
    fn bottom(&self) -> &Rational;

    /// Value at `1̂`.
    fn top(&self) -> &Rational;

    /// Combines values of lower covers.
    fn lower_aggregate(&self, x: &Rational, y: &Rational) -> Result<Rational>;

    /// Combines values of upper covers.
    fn upper_aggregate(&self, x: &Rational, y: &Rational) -> Result<Rational>;

    fn mul(&self, x: &Rational, y: &Rational) -> Rational;

    fn div(&self, x: &Rational, y: &Rational) -> Result<Rational>;

    fn unit(&self) -> Rational;

    /// The new value at a toggled element: `L ⊗ R ⊘ v`. An involution in
    /// `v` for fixed `L`, `R`.
    fn recombine(&self, lower: &Rational, upper: &Rational, v: &Rational) -> Result<Rational> {
        self.div(&self.mul(lower, upper), v)
    }

    /// `(0̂ ⊗ 1̂) ⊘ v`: `1/v` birationally, `1 - v` piecewise-linearly at the
    /// default boundary. The target value of reciprocal symmetry.
    fn reflect(&self, v: &Rational) -> Result<Rational> {
        self.div(&self.mul(self.bottom(), self.top()), v)
    }

    /// Checks that an array is in the domain of this algebra.
    fn validate(&self, values: &[Rational]) -> Result<()>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinear {
    pub bottom: Rational,
    pub top: Rational,
}

impl Default for PiecewiseLinear {
    fn default() -> Self {
        PiecewiseLinear { bottom: int(0), top: int(1) }
    }
}

impl ToggleAlgebra for PiecewiseLinear {
    fn regime(&self) -> Regime {
        Regime::PiecewiseLinear
    }

    fn bottom(&self) -> &Rational {
        &self.bottom
    }

    fn top(&self) -> &Rational {
        &self.top
    }

    fn lower_aggregate(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        Ok(x.max(y).clone())
    }

    fn upper_aggregate(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        Ok(x.min(y).clone())
    }

    fn mul(&self, x: &Rational, y: &Rational) -> Rational {
        x + y
    }

    fn div(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        Ok(x - y)
    }

    fn unit(&self) -> Rational {
        Rational::zero()
    }

    fn validate(&self, _values: &[Rational]) -> Result<()> {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Birational {
    pub bottom: Rational,
    pub top: Rational,
}

impl Default for Birational {
    fn default() -> Self {
        Birational { bottom: int(1), top: int(1) }
    }
}

/// `xy / (x + y)`.
pub fn parallel_sum(x: &Rational, y: &Rational) -> Result<Rational> {
    let s = x + y;
    if s.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x * y / s)
}

impl ToggleAlgebra for Birational {
    fn regime(&self) -> Regime {
        Regime::Birational
    }

    fn bottom(&self) -> &Rational {
        &self.bottom
    }

    fn top(&self) -> &Rational {
        &self.top
    }

    fn lower_aggregate(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        Ok(x + y)
    }

    fn upper_aggregate(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        parallel_sum(x, y)
    }

    fn mul(&self, x: &Rational, y: &Rational) -> Rational {
        x * y
    }

    fn div(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        if y.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(x / y)
    }

    fn unit(&self) -> Rational {
        Rational::one()
    }

    fn validate(&self, values: &[Rational]) -> Result<()> {
        match values.iter().position(|v| !v.is_positive()) {
            Some(x) => Err(Error::NonPositive(x)),
            None => Ok(()),
        }
    }
}

/// An assignment of rationals to the elements of a poset, in element-index
/// order. The boundary values live in the algebra, not the array.
#[derive(Clone, Debug)]
pub struct PArray {
    poset: Arc<Poset>,
    values: Vec<Rational>,
}

impl PartialEq for PArray {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.poset, &other.poset) || self.poset == other.poset) && self.values == other.values
    }
}

impl Eq for PArray {}

impl Hash for PArray {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

impl PArray {
    pub fn new(poset: Arc<Poset>, values: Vec<Rational>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::LengthMismatch { expected: poset.len(), got: values.len() });
        }
        Ok(PArray { poset, values })
    }

    pub fn from_ints(poset: Arc<Poset>, values: &[i64]) -> Result<Self> {
        PArray::new(poset, values.iter().map(|&v| int(v)).collect())
    }

    pub fn constant(poset: Arc<Poset>, value: Rational) -> Self {
        let values = vec![value; poset.len()];
        PArray { poset, values }
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    pub fn get(&self, x: usize) -> &Rational {
        &self.values[x]
    }

    /// The value at coordinate `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> Option<&Rational> {
        self.poset.index_of_coord(i, j).map(|x| &self.values[x])
    }

    pub fn with_values(&self, values: Vec<Rational>) -> Result<Self> {
        PArray::new(self.poset.clone(), values)
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        PArray { poset: self.poset.clone(), values: self.values.iter().map(f).collect() }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(format_rational).collect()
    }

    /// `(v1,v2,...)` with reduced rationals.
    pub fn display(&self) -> String {
        format!("({})", self.to_strings().join(","))
    }

    pub fn to_doc(&self, alg: &dyn ToggleAlgebra) -> PArrayDoc {
        PArrayDoc {
            poset: self.poset.to_doc(),
            values: self.values.clone(),
            boundary: [format_rational(alg.bottom()), format_rational(alg.top())],
        }
    }

    pub fn from_doc(doc: &PArrayDoc) -> Result<Self> {
        let poset = Arc::new(Poset::from_doc(&doc.poset)?);
        PArray::new(poset, doc.values.clone())
    }
}

/// JSON form of a P-array.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PArrayDoc {
    pub poset: PosetDoc,
    #[serde(with = "serde_rational_vec")]
    pub values: Vec<Rational>,
    pub boundary: [String; 2],
}

impl PArrayDoc {
    pub fn boundary_values(&self) -> Result<(Rational, Rational)> {
        Ok((parse_rational(&self.boundary[0])?, parse_rational(&self.boundary[1])?))
    }
}

fn toggle_in_place<A: ToggleAlgebra + ?Sized>(alg: &A, poset: &Poset, values: &mut [Rational], x: usize) -> Result<()> {
    let lower = aggregate(poset.lower_covers(x), values, alg.bottom(), |a, b| alg.lower_aggregate(a, b))?;
    let upper = aggregate(poset.upper_covers(x), values, alg.top(), |a, b| alg.upper_aggregate(a, b))?;
    values[x] = alg.recombine(&lower, &upper, &values[x])?;
    Ok(())
}

fn aggregate(
    covers: &[usize],
    values: &[Rational],
    boundary: &Rational,
    op: impl Fn(&Rational, &Rational) -> Result<Rational>,
) -> Result<Rational> {
    let mut it = covers.iter();
    let Some(&first) = it.next() else { return Ok(boundary.clone()) };
    let mut acc = values[first].clone();
    for &y in it {
        acc = op(&acc, &values[y])?;
    }
    Ok(acc)
}

/// Applies toggles at `order[0]`, then `order[1]`, and so on.
pub fn toggle_sequence<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray, order: &[usize]) -> Result<PArray> {
    alg.validate(&f.values)?;
    let mut values = f.values.clone();
    for &x in order {
        f.poset.check_element(x)?;
        toggle_in_place(alg, &f.poset, &mut values, x)?;
    }
    Ok(PArray { poset: f.poset.clone(), values })
}

pub fn toggle<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray, x: usize) -> Result<PArray> {
    toggle_sequence(alg, f, &[x])
}

/// Toggles from the top rank to the bottom rank.
pub fn rowmotion<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<PArray> {
    toggle_sequence(alg, f, &f.poset.rowmotion_order())
}

/// Toggles from the leftmost file to the rightmost file.
pub fn promotion<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<PArray> {
    toggle_sequence(alg, f, &f.poset.promotion_order()?)
}

/// Toggles from the rightmost file to the leftmost file.
pub fn promotion_inverse<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray) -> Result<PArray> {
    let mut order = f.poset.promotion_order()?;
    order.reverse();
    toggle_sequence(alg, f, &order)
}

/// Toggles every element of file `i` (1-based); the toggles commute.
pub fn file_toggle<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray, i: usize) -> Result<PArray> {
    let file = f.poset.file(i)?.to_vec();
    toggle_sequence(alg, f, &file)
}

/// Toggles every element of rank `r` (0-based from the bottom).
pub fn rank_toggle<A: ToggleAlgebra + ?Sized>(alg: &A, f: &PArray, r: usize) -> Result<PArray> {
    let rank = f.poset.ranks().get(r).cloned().unwrap_or_default();
    toggle_sequence(alg, f, &rank)
}

/// Which composite map to iterate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Rowmotion,
    Promotion,
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapKind::Rowmotion => "rowmotion",
            MapKind::Promotion => "promotion",
        })
    }
}

pub fn apply_map<A: ToggleAlgebra + ?Sized>(alg: &A, map: MapKind, f: &PArray) -> Result<PArray> {
    match map {
        MapKind::Rowmotion => rowmotion(alg, f),
        MapKind::Promotion => promotion(alg, f),
    }
}

/// The order ideal `S_down` cut out by a vertex of the order polytope
/// (the indicator of the complementary filter `S_up`).
pub fn restrict_to_vertex(f: &PArray) -> Result<OrderIdeal> {
    let poset = f.poset();
    let mut zeros = Vec::new();
    for (x, v) in f.values.iter().enumerate() {
        if v.is_zero() {
            zeros.push(x);
        } else if !v.is_one() {
            return Err(Error::WrongKind {
                expected: "a 0/1 array",
                detail: format!("value {} at {x}", format_rational(v)),
            });
        }
    }
    OrderIdeal::new(poset, zeros)
        .map_err(|_| Error::WrongKind { expected: "the indicator of a filter", detail: f.display() })
}

/// Inverse of [`restrict_to_vertex`]: 0 on the ideal, 1 on its complement.
pub fn vertex_of_ideal(poset: Arc<Poset>, ideal: &OrderIdeal) -> PArray {
    let values = (0..poset.len()).map(|x| if ideal.contains(x) { int(0) } else { int(1) }).collect();
    PArray { poset, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{enumerate_ideals, toggle_ideal};
    use crate::rational::rat;

    fn square() -> Arc<Poset> {
        Arc::new(Poset::rectangle(2, 2).unwrap())
    }

    fn tenths(p: &Arc<Poset>, v: &[i64]) -> PArray {
        PArray::new(p.clone(), v.iter().map(|&k| rat(k, 10)).collect()).unwrap()
    }

    #[test]
    fn pl_toggle_at_top() {
        let p = square();
        let f = tenths(&p, &[1, 2, 3, 4]);
        assert_eq!(toggle(&PiecewiseLinear::default(), &f, 3).unwrap(), tenths(&p, &[1, 2, 3, 9]));
    }

    #[test]
    fn birational_toggle_at_top() {
        let p = square();
        let f = PArray::from_ints(p.clone(), &[1, 2, 3, 4]).unwrap();
        let g = toggle(&Birational::default(), &f, 3).unwrap();
        assert_eq!(g.values(), &[int(1), int(2), int(3), rat(5, 4)]);
    }

    #[test]
    fn toggles_are_involutions() {
        let p = square();
        let f = tenths(&p, &[1, 2, 3, 4]);
        let g = PArray::from_ints(p.clone(), &[1, 2, 3, 4]).unwrap();
        for x in 0..4 {
            let pl = PiecewiseLinear::default();
            assert_eq!(toggle(&pl, &toggle(&pl, &f, x).unwrap(), x).unwrap(), f);
            let b = Birational::default();
            assert_eq!(toggle(&b, &toggle(&b, &g, x).unwrap(), x).unwrap(), g);
        }
    }

    #[test]
    fn pl_rowmotion_and_promotion_examples() {
        let p = square();
        let pl = PiecewiseLinear::default();
        let v = tenths(&p, &[1, 2, 3, 4]);
        assert_eq!(rowmotion(&pl, &v).unwrap(), tenths(&p, &[6, 8, 7, 9]));
        assert_eq!(promotion(&pl, &v).unwrap(), tenths(&p, &[2, 3, 8, 9]));
        assert_eq!(promotion_inverse(&pl, &promotion(&pl, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn birational_examples() {
        let p = square();
        let b = Birational::default();
        let v = PArray::from_ints(p.clone(), &[1, 2, 3, 4]).unwrap();
        let rho = rowmotion(&b, &v).unwrap();
        assert_eq!(rho.values(), &[rat(1, 4), rat(5, 8), rat(5, 12), rat(5, 4)]);
        let w = PArray::new(p.clone(), vec![int(1), int(2), rat(5, 12), rat(5, 4)]).unwrap();
        let pi = promotion(&b, &w).unwrap();
        assert_eq!(pi.values(), &[rat(1, 4), rat(5, 8), rat(1, 2), rat(5, 6)]);
    }

    #[test]
    fn birational_rejects_nonpositive() {
        let p = square();
        let v = PArray::from_ints(p, &[1, 0, 3, 4]).unwrap();
        assert_eq!(rowmotion(&Birational::default(), &v).unwrap_err(), Error::NonPositive(1));
    }

    #[test]
    fn file_toggle_errors() {
        let p = square();
        let v = tenths(&p, &[1, 2, 3, 4]);
        let pl = PiecewiseLinear::default();
        assert!(matches!(file_toggle(&pl, &v, 0), Err(Error::FileOutOfRange { .. })));
        assert!(matches!(file_toggle(&pl, &v, 4), Err(Error::FileOutOfRange { .. })));
        let chain = Arc::new(
            Poset::new(
                vec![crate::poset::Label::Name("a".into()), crate::poset::Label::Name("b".into())],
                &[(0, 1)],
                None,
            )
            .unwrap(),
        );
        let c = PArray::from_ints(chain, &[0, 1]).unwrap();
        assert_eq!(promotion(&pl, &c).unwrap_err(), Error::MissingEmbedding);
    }

    #[test]
    fn vertex_examples() {
        let p = square();
        let zero = PArray::from_ints(p.clone(), &[0, 0, 0, 0]).unwrap();
        assert_eq!(restrict_to_vertex(&zero).unwrap(), OrderIdeal::full(&p));
        let one = PArray::from_ints(p.clone(), &[1, 1, 1, 1]).unwrap();
        assert_eq!(restrict_to_vertex(&one).unwrap(), OrderIdeal::empty(&p));
        let xz = PArray::from_ints(p.clone(), &[0, 1, 0, 1]).unwrap();
        assert_eq!(restrict_to_vertex(&xz).unwrap().members(), vec![0, 2]);
        assert!(restrict_to_vertex(&PArray::from_ints(p.clone(), &[1, 0, 0, 0]).unwrap()).is_err());
        assert!(restrict_to_vertex(&tenths(&p, &[0, 0, 0, 5])).is_err());
    }

    #[test]
    fn vertex_toggles_match_ideal_toggles() {
        // all 6 vertices x all 4 elements
        let p = square();
        let pl = PiecewiseLinear::default();
        for ideal in enumerate_ideals(&p) {
            let v = vertex_of_ideal(p.clone(), &ideal);
            assert_eq!(restrict_to_vertex(&v).unwrap(), ideal);
            for x in 0..4 {
                let lhs = restrict_to_vertex(&toggle(&pl, &v, x).unwrap()).unwrap();
                assert_eq!(lhs, toggle_ideal(&p, &ideal, x).unwrap());
            }
        }
    }

    #[test]
    fn recombine_is_an_involution() {
        let pl = PiecewiseLinear::default();
        let b = Birational::default();
        let (l, r, v) = (rat(3, 7), rat(5, 2), rat(11, 13));
        assert_eq!(pl.recombine(&l, &r, &pl.recombine(&l, &r, &v).unwrap()).unwrap(), v);
        assert_eq!(b.recombine(&l, &r, &b.recombine(&l, &r, &v).unwrap()).unwrap(), v);
        assert_eq!(pl.reflect(&rat(1, 10)).unwrap(), rat(9, 10));
        assert_eq!(b.reflect(&rat(2, 3)).unwrap(), rat(3, 2));
    }

    #[test]
    fn parallel_sum_values() {
        assert_eq!(parallel_sum(&int(2), &rat(4, 3)).unwrap(), rat(4, 5));
        assert_eq!(parallel_sum(&int(1), &int(-1)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn doc_round_trip() {
        let p = square();
        let v = tenths(&p, &[1, 2, 3, 4]);
        let doc = v.to_doc(&PiecewiseLinear::default());
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.contains("\"1/10\""));
        let back: PArrayDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(PArray::from_doc(&back).unwrap(), v);
        assert_eq!(back.boundary_values().unwrap(), (int(0), int(1)));
    }
}
