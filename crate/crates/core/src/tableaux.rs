//! Rectangular semistandard tableaux, Gelfand–Tsetlin patterns,
//! Bender–Knuth involutions, and the bridge to piecewise-linear promotion.
//!
//! Row `r` of the pattern of an `A × B` tableau with entries at most `n`
//! counts, for each tableau row, the entries `≤ n - r + 1`. Stripping the
//! forced triangle of `B`s and triangle of `0`s leaves an `(n-A) × A`
//! rectangle of free entries, which becomes a P-array after dividing by
//! `B`. Two placements of that rectangle are offered:
//!
//! * [`Orientation::Displayed`]: the rectangle flipped across `x + y = 0`,
//!   a P-array on `[n-A] × [A]`. Pattern row `r` lands in file `r - 1`, so
//!   `BK_i` acts as the file toggle `τ*_{n-i}`.
//! * [`Orientation::Transposed`]: its transpose on `[A] × [n-A]`, where
//!   `BK_i` acts as `τ*_i` and [`promotion`] acts as piecewise-linear
//!   promotion.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dynamics::{file_toggle, promotion as pl_promotion, promotion_inverse, PArray, PiecewiseLinear};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::rational::{rat, Rational};

/// A semistandard tableau of rectangular shape `A × B` with entries in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ssyt {
    n: u32,
    rows: Vec<Vec<u32>>,
}

/// JSON form: `{"shape": [A, B], "n": n, "rows": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauDoc {
    pub shape: [usize; 2],
    pub n: u32,
    pub rows: Vec<Vec<u32>>,
}

impl Ssyt {
    pub fn new(n: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |why: String| Err(Error::InvalidTableau(why));
        let Some(first) = rows.first() else { return bad("no rows".into()) };
        let b = first.len();
        if b == 0 {
            return bad("empty rows".into());
        }
        if rows.len() > n as usize {
            return bad(format!("{} rows but entries at most {n}", rows.len()));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != b {
                return bad(format!("row {} has length {}, expected {b}", k + 1, row.len()));
            }
            if let Some(&v) = row.iter().find(|&&v| v == 0 || v > n) {
                return bad(format!("entry {v} outside 1..={n}"));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {} is not weakly increasing", k + 1));
            }
            if k > 0 && rows[k - 1].iter().zip(row).any(|(up, down)| up >= down) {
                return bad(format!("a column is not strictly increasing at row {}", k + 1));
            }
        }
        Ok(Ssyt { n, rows })
    }

    pub fn from_doc(doc: &TableauDoc) -> Result<Self> {
        let t = Ssyt::new(doc.n, doc.rows.clone())?;
        if t.shape() != (doc.shape[0], doc.shape[1]) {
            return Err(Error::InvalidTableau(format!("shape {:?} does not match rows", doc.shape)));
        }
        Ok(t)
    }

    pub fn to_doc(&self) -> TableauDoc {
        let (a, b) = self.shape();
        TableauDoc { shape: [a, b], n: self.n, rows: self.rows.clone() }
    }

    /// `(A, B)`: rows and columns.
    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.rows[0].len())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&lines.join("\n"))
    }
}

/// A Gelfand–Tsetlin pattern: row `r` (from 1) has `n - r + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GtPattern {
    rows: Vec<Vec<u32>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        let bad = |why: String| Err(Error::InvalidPattern(why));
        if n == 0 {
            return bad("no rows".into());
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n - r {
                return bad(format!("row {} has length {}, expected {}", r + 1, row.len(), n - r));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return bad(format!("row {} is not weakly decreasing", r + 1));
            }
            if r > 0 {
                let up = &rows[r - 1];
                if row.iter().enumerate().any(|(k, &v)| v > up[k] || v < up[k + 1]) {
                    return bad(format!("rows {} and {} do not interlace", r, r + 1));
                }
            }
        }
        Ok(GtPattern { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `k` of row `r`, both from 1.
    pub fn get(&self, r: usize, k: usize) -> u32 {
        self.rows[r - 1][k - 1]
    }

    /// `(A, B)` if the top row is `B` repeated `A` times then zeros.
    pub fn rectangle(&self) -> Result<(usize, u32)> {
        let top = &self.rows[0];
        let b = top[0];
        let a = top.iter().take_while(|&&v| v == b && v > 0).count();
        if b == 0 || top[a..].iter().any(|&v| v != 0) {
            return Err(Error::InvalidPattern(format!("top row {top:?} is not of rectangular type")));
        }
        Ok((a, b))
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("({})", r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

pub fn ssyt_to_gt(t: &Ssyt) -> GtPattern {
    let n = t.n as usize;
    let rows = (1..=n)
        .map(|r| {
            let bound = (n - r + 1) as u32;
            (1..=n - r + 1)
                .map(|k| t.rows.get(k - 1).map_or(0, |row| row.iter().filter(|&&v| v <= bound).count() as u32))
                .collect()
        })
        .collect();
    GtPattern { rows }
}

pub fn gt_to_ssyt(g: &GtPattern) -> Result<Ssyt> {
    let n = g.n();
    let (a, b) = g.rectangle()?;
    // entries of row k that are <= m
    let count = |k: usize, m: usize| if m == 0 || k > m { 0 } else { g.get(n - m + 1, k) };
    let mut rows = Vec::with_capacity(a);
    for k in 1..=a {
        let mut row = Vec::with_capacity(b as usize);
        for m in 1..=n {
            let c = count(k, m)
                .checked_sub(count(k, m - 1))
                .ok_or_else(|| Error::InvalidPattern("counts decrease".into()))?;
            row.extend(std::iter::repeat_n(m as u32, c as usize));
        }
        if row.len() != b as usize {
            return Err(Error::InvalidPattern(format!("row {k} recovers {} entries, expected {b}", row.len())));
        }
        rows.push(row);
    }
    Ssyt::new(n as u32, rows)
}

/// Where the free rectangle of a pattern goes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `[n-A] × [A]`, reproducing the flip across `x + y = 0`.
    #[default]
    Displayed,
    /// `[A] × [n-A]`.
    Transposed,
}

impl Orientation {
    pub fn dims(self, a: usize, n: usize) -> (usize, usize) {
        match self {
            Orientation::Displayed => (n - a, a),
            Orientation::Transposed => (a, n - a),
        }
    }

    /// The pattern cell `(r, k)` feeding element `(i, j)`.
    fn cell(self, a: usize, n: usize, i: usize, j: usize) -> (usize, usize) {
        let (i, j) = match self {
            Orientation::Displayed => (i, j),
            Orientation::Transposed => (j, i),
        };
        (n - a + 1 - i + j, a + 1 - j)
    }

    /// The file toggle matching `BK_i`.
    pub fn file_for_bender_knuth(self, i: usize, n: usize) -> usize {
        match self {
            Orientation::Displayed => n - i,
            Orientation::Transposed => i,
        }
    }
}

pub fn gt_to_parray(g: &GtPattern, orientation: Orientation) -> Result<PArray> {
    let n = g.n();
    let (a, b) = g.rectangle()?;
    if a == n {
        return Err(Error::InvalidPattern("no free entries when A = n".into()));
    }
    let (pa, pb) = orientation.dims(a, n);
    let poset = Arc::new(Poset::rectangle(pa, pb)?);
    let values = (0..poset.len())
        .map(|x| {
            let (i, j) = poset.coord(x).expect("rectangle");
            let (r, k) = orientation.cell(a, n, i, j);
            rat(g.get(r, k) as i64, b as i64)
        })
        .collect();
    PArray::new(poset, values)
}

/// Inverse of [`gt_to_parray`] for `B` columns.
pub fn parray_to_gt(f: &PArray, b: u32, orientation: Orientation) -> Result<GtPattern> {
    let (pa, pb) = f.poset().rectangle_dims().ok_or(Error::NotRectangle)?;
    let (a, n) = match orientation {
        Orientation::Displayed => (pb, pa + pb),
        Orientation::Transposed => (pa, pa + pb),
    };
    let mut rows: Vec<Vec<u32>> = (1..=n).map(|r| vec![0; n - r + 1]).collect();
    for (r, row) in rows.iter_mut().enumerate() {
        for (k, v) in row.iter_mut().enumerate() {
            if r + k + 2 <= a + 1 {
                *v = b;
            }
        }
    }
    let scale = Rational::from_integer(b.into());
    for x in 0..f.poset().len() {
        let (i, j) = f.poset().coord(x).expect("rectangle");
        let (r, k) = orientation.cell(a, n, i, j);
        let v = f.get(x) * &scale;
        if !v.is_integer() || v < Rational::from_integer(0.into()) || v > scale {
            return Err(Error::InvalidPattern(format!("value at ({i},{j}) is not a multiple of 1/{b} in [0,1]")));
        }
        rows[r - 1][k - 1] = u32::try_from(v.to_integer()).expect("bounded by b");
    }
    GtPattern::new(rows)
}

/// `v(T)`.
pub fn tableau_to_parray(t: &Ssyt, orientation: Orientation) -> Result<PArray> {
    gt_to_parray(&ssyt_to_gt(t), orientation)
}

pub fn parray_to_tableau(f: &PArray, b: u32, orientation: Orientation) -> Result<Ssyt> {
    gt_to_ssyt(&parray_to_gt(f, b, orientation)?)
}

/// `BK_i`: in each row, the `i`s and `i+1`s not stacked over one another
/// form a block of `r` `i`s then `s` `(i+1)`s; it becomes `s` `i`s then
/// `r` `(i+1)`s.
pub fn bender_knuth(t: &Ssyt, i: u32) -> Result<Ssyt> {
    if i == 0 || i >= t.n {
        return Err(Error::BenderKnuthOutOfRange { index: i as usize, max: t.n.saturating_sub(1) as usize });
    }
    let rows = &t.rows;
    let mut out = rows.clone();
    for (k, row) in rows.iter().enumerate() {
        let free: Vec<usize> = (0..row.len())
            .filter(|&c| match row[c] {
                v if v == i => rows.get(k + 1).is_none_or(|below| below[c] != i + 1),
                v if v == i + 1 => k == 0 || rows[k - 1][c] != i,
                _ => false,
            })
            .collect();
        let ones = free.iter().filter(|&&c| row[c] == i).count();
        let twos = free.len() - ones;
        for (pos, &c) in free.iter().enumerate() {
            out[k][c] = if pos < twos { i } else { i + 1 };
        }
    }
    Ssyt::new(t.n, out)
}

/// Schützenberger promotion `BK_{n-1} ∘ ⋯ ∘ BK_1` (`BK_1` applied first).
///
/// Equivalently: delete the 1s, slide the remaining entries into the
/// vacated cells by jeu de taquin, subtract 1 from every entry, and fill
/// the cells freed at the end with `n`.
pub fn promotion(t: &Ssyt) -> Result<Ssyt> {
    let mut cur = t.clone();
    for i in 1..t.n {
        cur = bender_knuth(&cur, i)?;
    }
    Ok(cur)
}

/// A tableau filled cell by cell in reading order, each entry uniform in
/// its feasible range.
pub fn random_ssyt<R: Rng>(rng: &mut R, a: usize, b: usize, n: u32) -> Result<Ssyt> {
    if a == 0 || b == 0 || a > n as usize {
        return Err(Error::InvalidTableau(format!("shape {a}x{b} with n = {n}")));
    }
    let mut rows = vec![vec![0u32; b]; a];
    for k in 0..a {
        for c in 0..b {
            let mut lo = k as u32 + 1;
            if c > 0 {
                lo = lo.max(rows[k][c - 1]);
            }
            if k > 0 {
                lo = lo.max(rows[k - 1][c] + 1);
            }
            let hi = n - (a - 1 - k) as u32;
            rows[k][c] = rng.gen_range(lo..=hi);
        }
    }
    Ssyt::new(n, rows)
}

/// Both sides of a tableau/P-array identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeReport {
    pub orientation: Orientation,
    pub tableau: Vec<Vec<u32>>,
    /// `v(π_S T)`.
    pub left: Vec<String>,
    /// `π_P v(T)` (transposed) or `π_P⁻¹ v(T)` (displayed).
    pub right: Vec<String>,
    pub equal: bool,
}

/// Compares `v(π_S T)` with piecewise-linear promotion of `v(T)` in the
/// transposed orientation, or its inverse in the displayed one.
pub fn bridge_check(t: &Ssyt, orientation: Orientation) -> Result<BridgeReport> {
    let pl = PiecewiseLinear::default();
    let left = tableau_to_parray(&promotion(t)?, orientation)?;
    let v = tableau_to_parray(t, orientation)?;
    let right = match orientation {
        Orientation::Transposed => pl_promotion(&pl, &v)?,
        Orientation::Displayed => promotion_inverse(&pl, &v)?,
    };
    Ok(BridgeReport {
        orientation,
        tableau: t.rows.clone(),
        left: left.to_strings(),
        right: right.to_strings(),
        equal: left == right,
    })
}

/// Checks `v(BK_i T) = τ*_j v(T)` with `j` the file paired with `BK_i`;
/// returns the first `i` that fails.
pub fn bender_knuth_file_check(t: &Ssyt, orientation: Orientation) -> Result<Option<usize>> {
    let pl = PiecewiseLinear::default();
    let v = tableau_to_parray(t, orientation)?;
    for i in 1..t.n as usize {
        let lhs = tableau_to_parray(&bender_knuth(t, i as u32)?, orientation)?;
        let rhs = file_toggle(&pl, &v, orientation.file_for_bender_knuth(i, t.n as usize))?;
        if lhs != rhs {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{contains, Polytope};
    use crate::sample::seeded_rng;
    use std::collections::HashSet;

    fn example() -> Ssyt {
        Ssyt::new(5, vec![vec![1, 2, 2], vec![3, 5, 5]]).unwrap()
    }

    // jeu-de-taquin promotion as an independent oracle
    fn jdt_promotion(t: &Ssyt) -> Ssyt {
        let n = t.n();
        let (a, b) = t.shape();
        let mut cells: Vec<Vec<Option<u32>>> = t.rows().iter().map(|r| r.iter().map(|&v| Some(v)).collect()).collect();
        let holes: Vec<usize> = (0..b).filter(|&c| t.rows()[0][c] == 1).collect();
        for &c in &holes {
            cells[0][c] = None;
        }
        // slide holes out, rightmost first
        for &c0 in holes.iter().rev() {
            let (mut r, mut c) = (0, c0);
            loop {
                let right = if c + 1 < b { cells[r][c + 1] } else { None };
                let below = if r + 1 < a { cells[r + 1][c] } else { None };
                match (right, below) {
                    (None, None) => break,
                    (Some(x), Some(y)) if y <= x => {
                        cells[r][c] = Some(y);
                        r += 1;
                    }
                    (Some(x), _) => {
                        cells[r][c] = Some(x);
                        c += 1;
                    }
                    (None, Some(y)) => {
                        cells[r][c] = Some(y);
                        r += 1;
                    }
                }
                cells[r][c] = None;
            }
        }
        let rows = cells.into_iter().map(|row| row.into_iter().map(|v| v.map_or(n, |v| v - 1)).collect()).collect();
        Ssyt::new(n, rows).unwrap()
    }

    #[test]
    fn example_pattern() {
        let g = ssyt_to_gt(&example());
        let expected: Vec<Vec<u32>> = vec![vec![3, 3, 0, 0, 0], vec![3, 1, 0, 0], vec![3, 1, 0], vec![3, 0], vec![1]];
        assert_eq!(g.rows(), expected.as_slice());
        assert_eq!(GtPattern::new(expected).unwrap(), g);
        assert_eq!(gt_to_ssyt(&g).unwrap(), example());
        assert_eq!(g.rectangle().unwrap(), (2, 3));
    }

    #[test]
    fn example_parray_by_ranks() {
        let v = tableau_to_parray(&example(), Orientation::Displayed).unwrap();
        assert_eq!(v.poset().rectangle_dims(), Some((3, 2)));
        let ranks: Vec<Vec<Rational>> =
            v.poset().ranks().iter().rev().map(|r| r.iter().map(|&x| v.get(x) * rat(3, 1)).collect()).collect();
        let ints = |xs: &[i64]| xs.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>();
        assert_eq!(ranks, vec![ints(&[3]), ints(&[1, 3]), ints(&[1, 1]), ints(&[0])]);
        assert!(contains(Polytope::Order, &v));
        let w = tableau_to_parray(&example(), Orientation::Transposed).unwrap();
        assert_eq!(w.poset().rectangle_dims(), Some((2, 3)));
        assert!(contains(Polytope::Order, &w));
    }

    #[test]
    fn single_cell() {
        let t = Ssyt::new(1, vec![vec![1]]).unwrap();
        assert_eq!(ssyt_to_gt(&t).rows(), &[vec![1]]);
        assert!(tableau_to_parray(&t, Orientation::Displayed).is_err());
        // the minimal tableau sits at the top vertex, the maximal one at 0
        let t = Ssyt::new(2, vec![vec![1]]).unwrap();
        let v = tableau_to_parray(&t, Orientation::Displayed).unwrap();
        assert_eq!(v.values(), &[rat(1, 1)]);
        let t = Ssyt::new(2, vec![vec![2]]).unwrap();
        let v = tableau_to_parray(&t, Orientation::Displayed).unwrap();
        assert_eq!(v.values(), &[rat(0, 1)]);
        let min = Ssyt::new(5, vec![vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
        let v = tableau_to_parray(&min, Orientation::Displayed).unwrap();
        assert!(v.values().iter().all(|x| *x == rat(1, 1)));
    }

    #[test]
    fn invalid_inputs() {
        assert!(Ssyt::new(5, vec![vec![2, 1]]).is_err());
        assert!(Ssyt::new(5, vec![vec![1, 2], vec![1, 3]]).is_err());
        assert!(Ssyt::new(5, vec![vec![1, 6]]).is_err());
        assert!(Ssyt::new(5, vec![vec![1, 2], vec![3]]).is_err());
        assert!(Ssyt::new(1, vec![vec![1], vec![2]]).is_err());
        assert!(GtPattern::new(vec![vec![3, 3], vec![0]]).is_err());
        assert!(GtPattern::new(vec![vec![3, 1], vec![2]]).is_ok());
        assert!(GtPattern::new(vec![vec![3, 1], vec![2]]).unwrap().rectangle().is_err());
        assert!(bender_knuth(&example(), 0).is_err());
        assert!(bender_knuth(&example(), 5).is_err());
    }

    #[test]
    fn doc_round_trip() {
        let doc = example().to_doc();
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(text, r#"{"shape":[2,3],"n":5,"rows":[[1,2,2],[3,5,5]]}"#);
        let back: TableauDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(Ssyt::from_doc(&back).unwrap(), example());
        let wrong = TableauDoc { shape: [3, 2], ..doc };
        assert!(Ssyt::from_doc(&wrong).is_err());
    }

    #[test]
    fn bender_knuth_example() {
        // 1 2 2 / 3 5 5 under BK_1: the lone free 1 and two free 2s -> 1 1 2
        assert_eq!(bender_knuth(&example(), 1).unwrap().rows(), &[vec![1, 1, 2], vec![3, 5, 5]]);
        // BK_4: row 2 has two free 5s and no 4s -> 4 4
        assert_eq!(bender_knuth(&example(), 4).unwrap().rows(), &[vec![1, 2, 2], vec![3, 4, 4]]);
    }

    #[test]
    fn random_tableaux_properties() {
        let mut rng = seeded_rng(17);
        for (a, b, n) in [(2, 3, 5), (2, 2, 4), (1, 3, 4), (3, 2, 6)] {
            let mut images = HashSet::new();
            let mut tabs = HashSet::new();
            for _ in 0..100 {
                let t = random_ssyt(&mut rng, a, b, n).unwrap();
                let g = ssyt_to_gt(&t);
                assert_eq!(gt_to_ssyt(&g).unwrap(), t);
                for o in [Orientation::Displayed, Orientation::Transposed] {
                    let v = tableau_to_parray(&t, o).unwrap();
                    assert!(contains(Polytope::Order, &v));
                    assert!(v.values().iter().all(|x| (b as i64 % x.denom().to_string().parse::<i64>().unwrap()) == 0));
                    assert_eq!(parray_to_tableau(&v, b as u32, o).unwrap(), t);
                    assert_eq!(bender_knuth_file_check(&t, o).unwrap(), None);
                    assert!(bridge_check(&t, o).unwrap().equal);
                }
                for i in 1..n {
                    assert_eq!(bender_knuth(&bender_knuth(&t, i).unwrap(), i).unwrap(), t);
                }
                assert_eq!(promotion(&t).unwrap(), jdt_promotion(&t));
                let mut p = t.clone();
                for _ in 0..n {
                    p = promotion(&p).unwrap();
                }
                assert_eq!(p, t);
                images.insert(tableau_to_parray(&t, Orientation::Displayed).unwrap().to_strings());
                tabs.insert(t);
            }
            assert_eq!(images.len(), tabs.len());
        }
    }

    #[test]
    fn displayed_orientation_pairs_bk_with_mirrored_files() {
        // In the displayed orientation the literal pairing BK_i <-> τ*_i
        // fails away from the middle file.
        let t = example();
        let pl = PiecewiseLinear::default();
        let v = tableau_to_parray(&t, Orientation::Displayed).unwrap();
        let lhs = tableau_to_parray(&bender_knuth(&t, 1).unwrap(), Orientation::Displayed).unwrap();
        assert_ne!(lhs, file_toggle(&pl, &v, 1).unwrap());
        assert_eq!(lhs, file_toggle(&pl, &v, 4).unwrap());
    }

    #[test]
    fn example_bridge() {
        let r = bridge_check(&example(), Orientation::Transposed).unwrap();
        assert!(r.equal);
        assert_eq!(r.left, r.right);
    }
}
