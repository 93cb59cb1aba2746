//! Homomesy: functionals whose average over every orbit is the same.
//!
//! Linear functionals are averaged directly. Log-monomial functionals
//! `log ∏ f(x)^{c_x}` are handled multiplicatively: an orbit is summarized
//! by the product of the monomial over it, so "0-mesic" reads "orbit
//! product 1" and no logarithm is ever taken.

use std::collections::HashSet;

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::birational::Violation;
use crate::dynamics::{apply_map, MapKind, PArray, PiecewiseLinear, Regime, ToggleAlgebra};
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, promotion_ideal, rowmotion_ideal, OrderIdeal};
use crate::linalg::{nullspace, rank};
use crate::orbit::orbit;
use crate::poset::Poset;
use crate::rational::{format_rational, int, Rational};
use crate::sample::samples;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionalKind {
    /// `f ↦ Σ c_x f(x)`.
    Linear,
    /// `f ↦ log ∏ f(x)^{c_x}` with integer exponents.
    LogMonomial,
}

impl FunctionalKind {
    pub fn for_regime(regime: Regime) -> Self {
        match regime {
            Regime::PiecewiseLinear => FunctionalKind::Linear,
            Regime::Birational => FunctionalKind::LogMonomial,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Functional {
    pub id: String,
    pub kind: FunctionalKind,
    #[serde(with = "crate::rational::serde_rational_vec")]
    pub coefficients: Vec<Rational>,
}

impl Functional {
    pub fn new(id: impl Into<String>, kind: FunctionalKind, coefficients: Vec<Rational>) -> Result<Self> {
        let id = id.into();
        if kind == FunctionalKind::LogMonomial && coefficients.iter().any(|c| !c.is_integer()) {
            return Err(Error::BadFunctional("exponents must be integers", id));
        }
        Ok(Functional { id, kind, coefficients })
    }

    /// The linear value, or the monomial itself for log-monomials.
    pub fn evaluate(&self, f: &PArray) -> Result<Rational> {
        if f.values().len() != self.coefficients.len() {
            return Err(Error::LengthMismatch { expected: self.coefficients.len(), got: f.values().len() });
        }
        Ok(match self.kind {
            FunctionalKind::Linear => self.coefficients.iter().zip(f.values()).map(|(c, v)| c * v).sum(),
            FunctionalKind::LogMonomial => {
                let mut acc = Rational::one();
                for (c, v) in self.coefficients.iter().zip(f.values()) {
                    let e = c
                        .to_integer()
                        .to_i32()
                        .ok_or_else(|| Error::BadFunctional("exponent too large", self.id.clone()))?;
                    if e != 0 {
                        if v.is_zero() {
                            return Err(Error::DivisionByZero);
                        }
                        acc *= v.pow(e);
                    }
                }
                acc
            }
        })
    }

    /// `Σ w_k F_k`; weights on log-monomials must be integers.
    pub fn linear_combination(id: impl Into<String>, terms: &[(Rational, &Functional)]) -> Result<Self> {
        let id = id.into();
        let Some((_, first)) = terms.first() else { return Err(Error::BadFunctional("empty combination", id)) };
        let kind = first.kind;
        let mut coefficients = vec![Rational::zero(); first.coefficients.len()];
        for (w, f) in terms {
            if f.kind != kind || f.coefficients.len() != coefficients.len() {
                return Err(Error::BadFunctional("mixed functionals", id));
            }
            for (c, fc) in coefficients.iter_mut().zip(&f.coefficients) {
                *c += w * fc;
            }
        }
        Functional::new(id, kind, coefficients)
    }
}

/// `F(i,j) = f(i,j) + f(a+1-i, b+1-j)` for every `(i, j)`, then the file
/// sums `F_k` for `k = 1..n-1`, as coefficient vectors.
pub fn standard_functionals(poset: &Poset, kind: FunctionalKind) -> Result<Vec<Functional>> {
    let (a, b) = poset.rectangle_dims().ok_or(Error::NotRectangle)?;
    let mut out = Vec::new();
    for i in 1..=a {
        for j in 1..=b {
            let mut c = vec![Rational::zero(); poset.len()];
            c[poset.index_of_coord(i, j).expect("in range")] += int(1);
            c[poset.index_of_coord(a + 1 - i, b + 1 - j).expect("in range")] += int(1);
            out.push(Functional::new(format!("F({i},{j})"), kind, c)?);
        }
    }
    for (k, file) in poset.files()?.iter().enumerate() {
        let mut c = vec![Rational::zero(); poset.len()];
        for &x in file {
            c[x] = int(1);
        }
        out.push(Functional::new(format!("F_{}", k + 1), kind, c)?);
    }
    Ok(out)
}

/// Orbit mean (linear) or orbit product (log-monomial), with the period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitStatistic {
    pub value: Rational,
    pub period: usize,
}

impl OrbitStatistic {
    /// Whether two statistics have the same per-step average: equal means,
    /// or `c₁^{p₂} = c₂^{p₁}` for products.
    pub fn same_average(&self, other: &Self, kind: FunctionalKind) -> bool {
        match kind {
            FunctionalKind::Linear => self.value == other.value,
            FunctionalKind::LogMonomial => self.value.pow(other.period as i32) == other.value.pow(self.period as i32),
        }
    }

    pub fn display(&self, kind: FunctionalKind) -> String {
        match kind {
            FunctionalKind::Linear => format_rational(&self.value),
            FunctionalKind::LogMonomial => format!("product {}", format_rational(&self.value)),
        }
    }
}

fn statistic_on(states: &[PArray], functional: &Functional) -> Result<OrbitStatistic> {
    let period = states.len();
    let mut values = states.iter().map(|s| functional.evaluate(s));
    let value = match functional.kind {
        FunctionalKind::Linear => values.try_fold(Rational::zero(), |acc, v| v.map(|v| acc + v))? / int(period as i64),
        FunctionalKind::LogMonomial => values.try_fold(Rational::one(), |acc, v| v.map(|v| acc * v))?,
    };
    Ok(OrbitStatistic { value, period })
}

pub fn orbit_statistic<A: ToggleAlgebra + ?Sized>(
    alg: &A,
    map: MapKind,
    functional: &Functional,
    f: &PArray,
    cap: usize,
) -> Result<OrbitStatistic> {
    let rec = orbit(f.clone(), cap, |g| apply_map(alg, map, g))?;
    statistic_on(&rec.states, functional)
}

/// JSON report for one functional under one map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomesyReport {
    pub functional: String,
    pub map: MapKind,
    pub regime: Regime,
    pub constant: String,
    pub samples: usize,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Violation>,
}

/// The discovered constant and verdict per functional, computing each
/// sample's orbit once. The constant comes from the first sample.
pub fn homomesy_batch<A: ToggleAlgebra + ?Sized>(
    alg: &A,
    map: MapKind,
    functionals: &[Functional],
    samples: &[PArray],
    cap: usize,
) -> Result<Vec<(HomomesyReport, Option<OrbitStatistic>)>> {
    let orbits: Vec<Vec<PArray>> = samples
        .par_iter()
        .map(|f| orbit(f.clone(), cap, |g| apply_map(alg, map, g)).map(|r| r.states))
        .collect::<Result<_>>()?;
    functionals
        .iter()
        .map(|func| {
            let stats = orbits.iter().map(|states| statistic_on(states, func)).collect::<Result<Vec<_>>>()?;
            let first = stats.first().cloned();
            let bad = first.as_ref().and_then(|c| stats.iter().position(|s| !s.same_average(c, func.kind)));
            let counterexample = bad.map(|k| {
                Violation::new(
                    &samples[k],
                    format!(
                        "orbit statistic {} differs from {}",
                        stats[k].display(func.kind),
                        first.as_ref().unwrap().display(func.kind)
                    ),
                )
            });
            let report = HomomesyReport {
                functional: func.id.clone(),
                map,
                regime: alg.regime(),
                constant: first.as_ref().map_or_else(|| "none".into(), |c| c.display(func.kind)),
                samples: samples.len(),
                pass: counterexample.is_none(),
                counterexample,
            };
            Ok((report, first))
        })
        .collect()
}

pub fn homomesy_check<A: ToggleAlgebra + ?Sized>(
    alg: &A,
    map: MapKind,
    functional: &Functional,
    samples: &[PArray],
    cap: usize,
) -> Result<HomomesyReport> {
    Ok(homomesy_batch(alg, map, std::slice::from_ref(functional), samples, cap)?.remove(0).0)
}

/// Element-wise mean of `f` over its orbit.
pub fn orbit_average<A: ToggleAlgebra + ?Sized>(
    alg: &A,
    map: MapKind,
    f: &PArray,
    cap: usize,
) -> Result<Vec<Rational>> {
    let rec = orbit(f.clone(), cap, |g| apply_map(alg, map, g))?;
    let n = int(rec.period() as i64);
    Ok((0..f.poset().len()).map(|x| rec.states.iter().map(|s| s.get(x).clone()).sum::<Rational>() / &n).collect())
}

/// Dimension of `{ u : u · A(f_s) is the same for every sample }`, where
/// `A` is the orbit-average vector.
pub fn homomesic_space_dimension<A: ToggleAlgebra + ?Sized>(
    alg: &A,
    map: MapKind,
    samples: &[PArray],
    cap: usize,
) -> Result<usize> {
    if samples.len() < 2 {
        return Err(Error::DegenerateSamples(format!("{} sample(s), need at least 2", samples.len())));
    }
    let averages: Vec<Vec<Rational>> =
        samples.par_iter().map(|f| orbit_average(alg, map, f, cap)).collect::<Result<_>>()?;
    let rows: Vec<Vec<Rational>> =
        averages[1..].iter().map(|a| a.iter().zip(&averages[0]).map(|(x, y)| x - y).collect()).collect();
    Ok(nullspace(&rows, samples[0].poset().len()).len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceRankReport {
    pub shape: [usize; 2],
    pub map: MapKind,
    pub samples: usize,
    pub nullspace_dim: usize,
    pub doubled_nullspace_dim: usize,
    pub standard_rank: usize,
    pub stable: bool,
    pub pass: bool,
}

/// Compares the dimension of the space of piecewise-linear homomesic
/// linear functionals, estimated from `count` seeded order-polytope samples
/// and again from `2 * count`, with the rank of the standard functionals.
pub fn homomesy_space_rank(
    poset: &std::sync::Arc<Poset>,
    map: MapKind,
    count: usize,
    seed: u64,
    cap: usize,
) -> Result<SpaceRankReport> {
    let (a, b) = poset.rectangle_dims().ok_or(Error::NotRectangle)?;
    let pl = PiecewiseLinear::default();
    let all = samples(seed, Regime::PiecewiseLinear, poset, 2 * count);
    let nullspace_dim = homomesic_space_dimension(&pl, map, &all[..count], cap)?;
    let doubled_nullspace_dim = homomesic_space_dimension(&pl, map, &all, cap)?;
    let standard: Vec<Vec<Rational>> =
        standard_functionals(poset, FunctionalKind::Linear)?.into_iter().map(|f| f.coefficients).collect();
    let standard_rank = rank(&standard);
    let stable = nullspace_dim == doubled_nullspace_dim;
    Ok(SpaceRankReport {
        shape: [a, b],
        map,
        samples: count,
        nullspace_dim,
        doubled_nullspace_dim,
        standard_rank,
        stable,
        pass: stable && nullspace_dim == standard_rank,
    })
}

/// Combinatorial file homomesy on `J(P)`: the number of elements of file
/// `k` outside the ideal, averaged over each orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileHomomesy {
    pub file: usize,
    #[serde(with = "crate::rational::serde_rational")]
    pub constant: Rational,
    pub orbits: usize,
    pub pass: bool,
}

pub fn combinatorial_file_homomesy(poset: &Poset, map: MapKind, cap: usize) -> Result<Vec<FileHomomesy>> {
    let files = poset.files()?;
    let step = |i: &OrderIdeal| match map {
        MapKind::Rowmotion => rowmotion_ideal(poset, i),
        MapKind::Promotion => promotion_ideal(poset, i),
    };
    let mut seen: HashSet<OrderIdeal> = HashSet::new();
    let mut orbit_means: Vec<Vec<Rational>> = Vec::new();
    for ideal in enumerate_ideals(poset) {
        if seen.contains(&ideal) {
            continue;
        }
        let rec = orbit(ideal, cap, step)?;
        let n = int(rec.period() as i64);
        orbit_means.push(
            files
                .iter()
                .map(|file| {
                    let outside: usize =
                        rec.states.iter().map(|s| file.iter().filter(|&&x| !s.contains(x)).count()).sum();
                    int(outside as i64) / &n
                })
                .collect(),
        );
        seen.extend(rec.states);
    }
    Ok((0..files.len())
        .map(|k| {
            let constant = orbit_means[0][k].clone();
            let pass = orbit_means.iter().all(|m| m[k] == constant);
            FileHomomesy { file: k + 1, constant, orbits: orbit_means.len(), pass }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::Birational;
    use crate::orbit::DEFAULT_CAP;
    use crate::rational::rat;
    use std::sync::Arc;

    fn square() -> Arc<Poset> {
        Arc::new(Poset::rectangle(2, 2).unwrap())
    }

    fn find<'a>(fs: &'a [Functional], id: &str) -> &'a Functional {
        fs.iter().find(|f| f.id == id).unwrap()
    }

    #[test]
    fn standard_functionals_on_the_square() {
        let p = square();
        let fs = standard_functionals(&p, FunctionalKind::Linear).unwrap();
        assert_eq!(fs.len(), 7);
        assert_eq!(find(&fs, "F_2").coefficients, vec![int(1), int(0), int(0), int(1)]);
        assert_eq!(find(&fs, "F(1,1)").coefficients, find(&fs, "F_2").coefficients);
        assert_eq!(find(&fs, "F(2,1)").coefficients, vec![int(0), int(1), int(1), int(0)]);
        let one = Poset::rectangle(1, 1).unwrap();
        let f11 = &standard_functionals(&one, FunctionalKind::Linear).unwrap()[0];
        assert_eq!(f11.coefficients, vec![int(2)]);
        assert!(standard_functionals(&Poset::triangle(3).unwrap(), FunctionalKind::Linear).is_err());
    }

    #[test]
    fn middle_file_product() {
        let p = square();
        let b = Birational::default();
        let fs = standard_functionals(&p, FunctionalKind::LogMonomial).unwrap();
        let f = PArray::from_ints(p.clone(), &[1, 2, 3, 4]).unwrap();
        let mid = find(&fs, "F_2");
        let rec = orbit(f.clone(), DEFAULT_CAP, |g| apply_map(&b, MapKind::Rowmotion, g)).unwrap();
        let vals: Vec<Rational> = rec.states.iter().map(|s| mid.evaluate(s).unwrap()).collect();
        assert_eq!(vals, vec![int(4), rat(5, 16), rat(2, 3), rat(6, 5)]);
        let st = orbit_statistic(&b, MapKind::Rowmotion, mid, &f, DEFAULT_CAP).unwrap();
        assert_eq!(st, OrbitStatistic { value: int(1), period: 4 });
        assert_eq!(st.display(mid.kind), "product 1");
        let left = find(&fs, "F_1");
        let vals: Vec<Rational> = rec.states.iter().map(|s| left.evaluate(s).unwrap()).collect();
        assert_eq!(vals, vec![int(2), rat(5, 8), rat(1, 3), rat(12, 5)]);
    }

    #[test]
    fn pl_middle_file_mean() {
        let p = square();
        let pl = PiecewiseLinear::default();
        let fs = standard_functionals(&p, FunctionalKind::Linear).unwrap();
        let v = PArray::new(p.clone(), vec![rat(1, 10), rat(2, 10), rat(3, 10), rat(4, 10)]).unwrap();
        let st = orbit_statistic(&pl, MapKind::Rowmotion, find(&fs, "F_2"), &v, DEFAULT_CAP).unwrap();
        assert_eq!(st, OrbitStatistic { value: int(1), period: 4 });
    }

    #[test]
    fn fixed_point_statistic_is_the_value() {
        let p = Arc::new(Poset::rectangle(1, 1).unwrap());
        let pl = PiecewiseLinear::default();
        let f = PArray::new(p.clone(), vec![rat(1, 2)]).unwrap();
        let fs = standard_functionals(&p, FunctionalKind::Linear).unwrap();
        let st = orbit_statistic(&pl, MapKind::Rowmotion, &fs[0], &f, DEFAULT_CAP).unwrap();
        assert_eq!(st, OrbitStatistic { value: int(1), period: 1 });
    }

    #[test]
    fn batch_reports_and_schema() {
        let p = Arc::new(Poset::rectangle(2, 3).unwrap());
        let pl = PiecewiseLinear::default();
        let fs = standard_functionals(&p, FunctionalKind::Linear).unwrap();
        let xs = samples(4, Regime::PiecewiseLinear, &p, 20);
        for (r, _) in homomesy_batch(&pl, MapKind::Promotion, &fs, &xs, DEFAULT_CAP).unwrap() {
            assert!(r.pass, "{r:?}");
            if r.functional.starts_with("F(") {
                assert_eq!(r.constant, "1");
            }
            let json = serde_json::to_value(&r).unwrap();
            assert_eq!(json["map"], "promotion");
            assert_eq!(json["regime"], "pl");
            assert!(json.get("counterexample").is_none());
        }
    }

    #[test]
    fn non_homomesic_functional_fails() {
        let p = square();
        let pl = PiecewiseLinear::default();
        let w = Functional::new("w", FunctionalKind::Linear, vec![int(1), int(0), int(0), int(0)]).unwrap();
        let xs = samples(1, Regime::PiecewiseLinear, &p, 10);
        let r = homomesy_check(&pl, MapKind::Rowmotion, &w, &xs, DEFAULT_CAP).unwrap();
        assert!(!r.pass);
        assert!(r.counterexample.is_some());
    }

    #[test]
    fn log_monomials_need_integer_exponents() {
        assert!(Functional::new("bad", FunctionalKind::LogMonomial, vec![rat(1, 2)]).is_err());
    }

    #[test]
    fn products_compare_per_step() {
        let a = OrbitStatistic { value: int(4), period: 2 };
        let b = OrbitStatistic { value: int(16), period: 4 };
        assert!(a.same_average(&b, FunctionalKind::LogMonomial));
        assert!(!a.same_average(&b, FunctionalKind::Linear));
    }

    #[test]
    fn space_rank_on_the_square() {
        let p = square();
        let r = homomesy_space_rank(&p, MapKind::Rowmotion, 16, 3, DEFAULT_CAP).unwrap();
        assert_eq!(r.standard_rank, 3);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn degenerate_sample_set() {
        let p = square();
        let xs = samples(1, Regime::PiecewiseLinear, &p, 1);
        let err =
            homomesic_space_dimension(&PiecewiseLinear::default(), MapKind::Rowmotion, &xs, DEFAULT_CAP).unwrap_err();
        assert!(matches!(err, Error::DegenerateSamples(_)));
    }

    #[test]
    fn combinatorial_files_on_the_square() {
        let p = square();
        for map in [MapKind::Rowmotion, MapKind::Promotion] {
            let r = combinatorial_file_homomesy(&p, map, DEFAULT_CAP).unwrap();
            assert_eq!(r.len(), 3);
            assert!(r.iter().all(|f| f.pass));
            assert_eq!(r[1].constant, int(1));
        }
    }
}
