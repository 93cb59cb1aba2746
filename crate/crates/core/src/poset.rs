//! Finite posets given by irredundant cover relations, optionally with an
//! rc-embedding that places every element at an integer (column, rank)
//! position so that covers are edges of slope ±1.
//!
//! Element indices are the canonical order for all vector I/O. The
//! rectangle and triangle constructors emit elements sorted by rank, then by
//! column; posets read from JSON keep the order they were given in.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Coord(usize, usize),
    Name(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Coord(i, j) => write!(f, "({i},{j})"),
            Label::Name(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    /// `[a] x [b]` with elements `(i, j)`.
    Rectangle {
        a: usize,
        b: usize,
    },
    /// Gelfand-Tsetlin triangle with elements `(i, j)`, `1 <= i <= j <= n`.
    Triangle {
        n: usize,
    },
    Custom,
}

/// An rc-embedding position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RcPosition {
    pub column: i64,
    pub rank: i64,
}

#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<Label>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    rc: Option<Vec<RcPosition>>,
    shape: Shape,

    index: HashMap<Label, usize>,
    ranks: Vec<Vec<usize>>,
    rank_of: Vec<usize>,
    files: Vec<Vec<usize>>,
    file_of: Vec<usize>,
    // principal down-sets, reflexive
    down: Vec<FixedBitSet>,
    linear_extension: Vec<usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.lower == other.lower && self.rc == other.rc
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from labels and `(lower, upper)` cover pairs.
    ///
    /// Rejects out-of-range indices, cycles, and redundant covers (a pair
    /// that is implied by a longer chain). An rc-embedding, when given, must
    /// satisfy: `x` covers `y` iff `pos(x) - pos(y)` is `(1,1)` or `(-1,1)`.
    pub fn new(labels: Vec<Label>, covers: &[(usize, usize)], rc: Option<Vec<RcPosition>>) -> Result<Self> {
        let mut poset = Self::build(labels, covers, rc, Shape::Custom)?;
        poset.shape = poset.detect_shape();
        Ok(poset)
    }

    /// The product poset `[a] x [b]`, embedded at `(j - i, i + j - 2)`.
    pub fn rectangle(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::EmptyShape(format!("{a}x{b}")));
        }
        let mut coords: Vec<(usize, usize)> = (1..=a).flat_map(|i| (1..=b).map(move |j| (i, j))).collect();
        let pos = |&(i, j): &(usize, usize)| RcPosition { column: j as i64 - i as i64, rank: (i + j) as i64 - 2 };
        coords.sort_by_key(|c| {
            let p = pos(c);
            (p.rank, p.column)
        });
        let index: HashMap<(usize, usize), usize> = coords.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut covers = Vec::new();
        for &(i, j) in &coords {
            let lo = index[&(i, j)];
            if i < a {
                covers.push((lo, index[&(i + 1, j)]));
            }
            if j < b {
                covers.push((lo, index[&(i, j + 1)]));
            }
        }
        let rc = coords.iter().map(pos).collect();
        let labels = coords.iter().map(|&(i, j)| Label::Coord(i, j)).collect();
        Self::build(labels, &covers, Some(rc), Shape::Rectangle { a, b })
    }

    /// The triangle poset on `{(i, j) : 1 <= i <= j <= n}` with covers
    /// `(i, j-1) < (i, j)` and `(i+1, j+1) < (i, j)`.
    ///
    /// Embedded at column `j`, rank `j - 2i + n`.
    pub fn triangle(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyShape(format!("triangle {n}")));
        }
        let mut coords: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
        let pos = |&(i, j): &(usize, usize)| RcPosition { column: j as i64, rank: j as i64 - 2 * i as i64 + n as i64 };
        coords.sort_by_key(|c| {
            let p = pos(c);
            (p.rank, p.column)
        });
        let index: HashMap<(usize, usize), usize> = coords.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut covers = Vec::new();
        for &(i, j) in &coords {
            let hi = index[&(i, j)];
            if j > i {
                covers.push((index[&(i, j - 1)], hi));
            }
            if j < n {
                covers.push((index[&(i + 1, j + 1)], hi));
            }
        }
        let rc = coords.iter().map(pos).collect();
        let labels = coords.iter().map(|&(i, j)| Label::Coord(i, j)).collect();
        Self::build(labels, &covers, Some(rc), Shape::Triangle { n })
    }

    fn build(labels: Vec<Label>, covers: &[(usize, usize)], rc: Option<Vec<RcPosition>>, shape: Shape) -> Result<Self> {
        let p = labels.len();
        let mut lower = vec![Vec::new(); p];
        let mut upper = vec![Vec::new(); p];
        for &(lo, hi) in covers {
            for x in [lo, hi] {
                if x >= p {
                    return Err(Error::UnknownElement { index: x, size: p });
                }
            }
            if lo == hi {
                return Err(Error::InvalidCover(format!("self-cover at {lo}")));
            }
            if upper[lo].contains(&hi) {
                return Err(Error::InvalidCover(format!("duplicate cover {lo} < {hi}")));
            }
            upper[lo].push(hi);
            lower[hi].push(lo);
        }
        for v in lower.iter_mut().chain(upper.iter_mut()) {
            v.sort_unstable();
        }

        let mut index = HashMap::with_capacity(p);
        for (k, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), k).is_some() {
                return Err(Error::InvalidCover(format!("duplicate label {l}")));
            }
        }

        // Kahn's algorithm, smallest index first.
        let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> = (0..p).filter(|&x| indegree[x] == 0).map(Reverse).collect();
        let mut linear_extension = Vec::with_capacity(p);
        while let Some(Reverse(x)) = heap.pop() {
            linear_extension.push(x);
            for &y in &upper[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    heap.push(Reverse(y));
                }
            }
        }
        if linear_extension.len() != p {
            return Err(Error::CyclicCovers);
        }

        let mut down = vec![FixedBitSet::with_capacity(p); p];
        for &x in &linear_extension {
            let mut set = FixedBitSet::with_capacity(p);
            set.insert(x);
            for &y in &lower[x] {
                set.union_with(&down[y]);
            }
            down[x] = set;
        }
        for (hi, below) in lower.iter().enumerate() {
            for &lo in below {
                if below.iter().any(|&z| z != lo && down[z].contains(lo)) {
                    return Err(Error::RedundantCover { lower: lo, upper: hi });
                }
            }
        }

        if let Some(rc) = &rc {
            check_embedding(rc, &upper)?;
        }

        let rank_key: Vec<i64> = match &rc {
            Some(rc) => rc.iter().map(|q| q.rank).collect(),
            None => {
                let mut height = vec![0i64; p];
                for &x in &linear_extension {
                    height[x] = lower[x].iter().map(|&y| height[y] + 1).max().unwrap_or(0);
                }
                height
            }
        };
        let (ranks, rank_of) = group_by_key(&rank_key);
        let (files, file_of) = match &rc {
            Some(rc) => group_by_key(&rc.iter().map(|q| q.column).collect::<Vec<_>>()),
            None => (Vec::new(), Vec::new()),
        };

        Ok(Poset { labels, lower, upper, rc, shape, index, ranks, rank_of, files, file_of, down, linear_extension })
    }

    fn detect_shape(&self) -> Shape {
        let coords: Option<Vec<(usize, usize)>> = self
            .labels
            .iter()
            .map(|l| match l {
                Label::Coord(i, j) => Some((*i, *j)),
                Label::Name(_) => None,
            })
            .collect();
        let Some(coords) = coords else { return Shape::Custom };
        let a = coords.iter().map(|c| c.0).max().unwrap_or(0);
        let b = coords.iter().map(|c| c.1).max().unwrap_or(0);
        let mut candidates = Vec::new();
        if let Ok(r) = Poset::rectangle(a, b) {
            candidates.push(r);
        }
        if coords.iter().all(|c| c.0 <= c.1) {
            if let Ok(t) = Poset::triangle(b) {
                candidates.push(t);
            }
        }
        candidates
            .into_iter()
            .find(|c| c.labels == self.labels && c.lower == self.lower)
            .map(|c| c.shape)
            .unwrap_or(Shape::Custom)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// `(a, b)` when this is `[a] x [b]`.
    pub fn rectangle_dims(&self) -> Option<(usize, usize)> {
        match self.shape {
            Shape::Rectangle { a, b } => Some((a, b)),
            _ => None,
        }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &Label {
        &self.labels[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        self.lower[x].is_empty()
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        self.upper[x].is_empty()
    }

    /// All cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|lo| self.upper[lo].iter().map(move |&hi| (lo, hi))).collect()
    }

    pub fn covers_either(&self, x: usize, y: usize) -> bool {
        self.upper[x].contains(&y) || self.upper[y].contains(&x)
    }

    /// `x <= y`.
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    /// The principal down-set of `x` (including `x`).
    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownElement { index: x, size: self.len() })
        }
    }

    pub fn embedding(&self) -> Option<&[RcPosition]> {
        self.rc.as_deref()
    }

    pub fn has_embedding(&self) -> bool {
        self.rc.is_some()
    }

    /// Ranks from bottom to top, each listing element indices ascending.
    ///
    /// Uses the rc-embedding when present, otherwise the height (length of
    /// the longest chain below an element).
    pub fn ranks(&self) -> &[Vec<usize>] {
        &self.ranks
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.rank_of[x]
    }

    /// Files from left to right; file `i` (1-based) is `files()[i - 1]`.
    pub fn files(&self) -> Result<&[Vec<usize>]> {
        if self.rc.is_some() {
            Ok(&self.files)
        } else {
            Err(Error::MissingEmbedding)
        }
    }

    pub fn file(&self, i: usize) -> Result<&[usize]> {
        let files = self.files()?;
        if i == 0 || i > files.len() {
            return Err(Error::FileOutOfRange { index: i, files: files.len() });
        }
        Ok(&files[i - 1])
    }

    /// 1-based file index of `x`.
    pub fn file_of(&self, x: usize) -> Result<usize> {
        self.files()?;
        Ok(self.file_of[x] + 1)
    }

    pub fn linear_extension(&self) -> &[usize] {
        &self.linear_extension
    }

    /// Elements in the order they are toggled for rowmotion: top rank
    /// first, ascending index within a rank.
    pub fn rowmotion_order(&self) -> Vec<usize> {
        self.ranks.iter().rev().flatten().copied().collect()
    }

    /// Elements in the order they are toggled for promotion: leftmost file
    /// first, ascending index within a file.
    pub fn promotion_order(&self) -> Result<Vec<usize>> {
        Ok(self.files()?.iter().flatten().copied().collect())
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn index_of_coord(&self, i: usize, j: usize) -> Option<usize> {
        self.index_of(&Label::Coord(i, j))
    }

    /// `(i, j)` of a coordinate-labelled element.
    pub fn coord(&self, x: usize) -> Option<(usize, usize)> {
        match self.labels[x] {
            Label::Coord(i, j) => Some((i, j)),
            Label::Name(_) => None,
        }
    }

    /// Resolves an element written as a label name, `(i,j)`, `i:j`, or a
    /// bare element index.
    pub fn resolve(&self, token: &str) -> Result<usize> {
        let t = token.trim();
        if let Some(x) = self.index_of(&Label::Name(t.to_string())) {
            return Ok(x);
        }
        let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
        if let Some((i, j)) = inner.split_once(',').or_else(|| inner.split_once(':')) {
            if let (Ok(i), Ok(j)) = (i.trim().parse(), j.trim().parse()) {
                return self.index_of_coord(i, j).ok_or_else(|| Error::UnknownLabel(t.to_string()));
            }
        }
        if let Ok(x) = t.parse::<usize>() {
            self.check_element(x)?;
            return Ok(x);
        }
        Err(Error::UnknownLabel(t.to_string()))
    }

    /// Every maximal chain, each listed bottom to top. Exponential in
    /// general; meant for small posets and test oracles.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        fn extend(poset: &Poset, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let last = *chain.last().unwrap();
            if poset.is_maximal(last) {
                out.push(chain.clone());
                return;
            }
            for &y in poset.upper_covers(last) {
                chain.push(y);
                extend(poset, chain, out);
                chain.pop();
            }
        }
        let mut out = Vec::new();
        for x in (0..self.len()).filter(|&x| self.is_minimal(x)) {
            extend(self, &mut vec![x], &mut out);
        }
        out
    }

    pub fn to_doc(&self) -> PosetDoc {
        PosetDoc {
            elements: self.labels.clone(),
            covers: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
            rc: self.rc.as_ref().map(|rc| rc.iter().map(|q| [q.column, q.rank]).collect()),
        }
    }

    pub fn from_doc(doc: &PosetDoc) -> Result<Self> {
        let covers: Vec<(usize, usize)> = doc.covers.iter().map(|c| (c[0], c[1])).collect();
        let rc = doc.rc.as_ref().map(|rc| rc.iter().map(|q| RcPosition { column: q[0], rank: q[1] }).collect());
        Poset::new(doc.elements.clone(), &covers, rc)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Poset::from_doc(&serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("poset serializes")
    }
}

/// JSON form: `{"elements": [...], "covers": [[lo, hi], ...], "rc": [[col, rank], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub elements: Vec<Label>,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rc: Option<Vec<[i64; 2]>>,
}

fn check_embedding(rc: &[RcPosition], upper: &[Vec<usize>]) -> Result<()> {
    let p = upper.len();
    if rc.len() != p {
        return Err(Error::InvalidEmbedding(format!("{} positions for {} elements", rc.len(), p)));
    }
    let slope_one = |lo: usize, hi: usize| {
        let dc = rc[hi].column - rc[lo].column;
        let dr = rc[hi].rank - rc[lo].rank;
        dr == 1 && dc.abs() == 1
    };
    for (lo, above) in upper.iter().enumerate() {
        for &hi in above {
            if !slope_one(lo, hi) {
                return Err(Error::InvalidEmbedding(format!("cover {lo} < {hi} is not an edge of slope ±1")));
            }
        }
    }
    for (lo, above) in upper.iter().enumerate() {
        for hi in 0..p {
            if lo != hi && slope_one(lo, hi) && !above.contains(&hi) {
                return Err(Error::InvalidEmbedding(format!("{lo} and {hi} are diagonal neighbours but not a cover")));
            }
        }
    }
    let mut seen = HashMap::new();
    for (x, q) in rc.iter().enumerate() {
        if let Some(y) = seen.insert(*q, x) {
            return Err(Error::InvalidEmbedding(format!("elements {y} and {x} share a position")));
        }
    }
    Ok(())
}

/// Groups indices by key, keys ascending, indices ascending within a group.
fn group_by_key(keys: &[i64]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut distinct: Vec<i64> = keys.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let slot: HashMap<i64, usize> = distinct.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut groups = vec![Vec::new(); distinct.len()];
    let mut group_of = vec![0; keys.len()];
    for (x, key) in keys.iter().enumerate() {
        groups[slot[key]].push(x);
        group_of[x] = slot[key];
    }
    (groups, group_of)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels_of(p: &Poset, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| p.label(x).to_string()).collect()
    }

    #[test]
    fn two_by_two_running_example() {
        let p = Poset::rectangle(2, 2).unwrap();
        // w, x, y, z
        assert_eq!(labels_of(&p, &[0, 1, 2, 3]), ["(1,1)", "(2,1)", "(1,2)", "(2,2)"]);
        let ranks: Vec<_> = p.ranks().iter().map(|r| labels_of(&p, r)).collect();
        assert_eq!(ranks, vec![vec!["(1,1)"], vec!["(2,1)", "(1,2)"], vec!["(2,2)"]]);
        let files: Vec<_> = p.files().unwrap().iter().map(|f| labels_of(&p, f)).collect();
        assert_eq!(files, vec![vec!["(2,1)"], vec!["(1,1)", "(2,2)"], vec!["(1,2)"]]);
        let rc = p.embedding().unwrap();
        assert_eq!((rc[1].column, rc[1].rank), (-1, 1));
        assert_eq!((rc[3].column, rc[3].rank), (0, 2));
    }

    #[test]
    fn single_element() {
        let p = Poset::rectangle(1, 1).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.covers().is_empty());
    }

    #[test]
    fn two_by_three_counts() {
        let p = Poset::rectangle(2, 3).unwrap();
        assert_eq!(p.len(), 6);
        // brute force over the product order
        let mut covers = 0;
        for x in 0..6 {
            for y in 0..6 {
                let (i, j) = p.coord(x).unwrap();
                let (k, l) = p.coord(y).unwrap();
                if (k == i + 1 && l == j) || (k == i && l == j + 1) {
                    covers += 1;
                }
            }
        }
        assert_eq!(covers, 7);
        assert_eq!(p.covers().len(), 7);
        let sizes: Vec<_> = p.ranks().iter().map(Vec::len).collect();
        assert_eq!(sizes, [1, 2, 2, 1]);
        // file index j - i + a
        for x in 0..6 {
            let (i, j) = p.coord(x).unwrap();
            assert_eq!(p.file_of(x).unwrap(), j + 2 - i);
        }
    }

    #[test]
    fn rejects_empty_shapes() {
        assert!(Poset::rectangle(0, 3).is_err());
        assert!(Poset::rectangle(2, 0).is_err());
        assert!(Poset::triangle(0).is_err());
    }

    #[test]
    fn triangles() {
        assert_eq!(Poset::triangle(1).unwrap().len(), 1);
        let t2 = Poset::triangle(2).unwrap();
        assert_eq!(t2.len(), 3);
        let covers: Vec<_> =
            t2.covers().into_iter().map(|(a, b)| (t2.coord(a).unwrap(), t2.coord(b).unwrap())).collect();
        let mut covers = covers;
        covers.sort();
        assert_eq!(covers, vec![((1, 1), (1, 2)), ((2, 2), (1, 1))]);

        let t3 = Poset::triangle(3).unwrap();
        assert_eq!(t3.len(), 6);
        // count pairs satisfying the two cover rules directly
        let mut expected = 0;
        for x in 0..6 {
            for y in 0..6 {
                let (i, j) = t3.coord(x).unwrap();
                let (k, l) = t3.coord(y).unwrap();
                if (k == i && l == j + 1) || (i == k + 1 && j == l + 1) {
                    expected += 1;
                }
            }
        }
        assert_eq!(expected, 6);
        assert_eq!(t3.covers().len(), 6);
        assert_eq!(t3.shape(), Shape::Triangle { n: 3 });
    }

    #[test]
    fn rejects_redundant_and_cyclic_covers() {
        let names = |n: usize| (0..n).map(|k| Label::Name(format!("e{k}"))).collect::<Vec<_>>();
        assert_eq!(
            Poset::new(names(3), &[(0, 1), (1, 2), (0, 2)], None).unwrap_err(),
            Error::RedundantCover { lower: 0, upper: 2 }
        );
        assert_eq!(Poset::new(names(2), &[(0, 1), (1, 0)], None).unwrap_err(), Error::CyclicCovers);
        assert!(Poset::new(names(2), &[(0, 5)], None).is_err());
        assert!(Poset::new(names(2), &[(0, 0)], None).is_err());
    }

    #[test]
    fn rejects_bad_embedding() {
        let names = (0..2).map(|k| Label::Name(format!("e{k}"))).collect::<Vec<_>>();
        let rc = vec![RcPosition { column: 0, rank: 0 }, RcPosition { column: 0, rank: 1 }];
        assert!(matches!(Poset::new(names, &[(0, 1)], Some(rc)), Err(Error::InvalidEmbedding(_))));
    }

    #[test]
    fn heights_without_embedding() {
        let names = (0..4).map(|k| Label::Name(format!("e{k}"))).collect::<Vec<_>>();
        let p = Poset::new(names, &[(0, 1), (1, 2), (0, 3)], None).unwrap();
        assert_eq!(p.ranks(), &[vec![0], vec![1, 3], vec![2]]);
        assert_eq!(p.files().unwrap_err(), Error::MissingEmbedding);
    }

    #[test]
    fn json_round_trip_keeps_shape() {
        let p = Poset::rectangle(2, 3).unwrap();
        let q = Poset::from_json(&p.to_json()).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.shape(), Shape::Rectangle { a: 2, b: 3 });
        let t = Poset::triangle(3).unwrap();
        assert_eq!(Poset::from_json(&t.to_json()).unwrap().shape(), Shape::Triangle { n: 3 });
    }

    #[test]
    fn resolves_tokens() {
        let p = Poset::rectangle(2, 2).unwrap();
        assert_eq!(p.resolve("(2,1)").unwrap(), 1);
        assert_eq!(p.resolve("1:2").unwrap(), 2);
        assert_eq!(p.resolve("3").unwrap(), 3);
        assert!(p.resolve("9").is_err());
        assert!(p.resolve("q").is_err());
    }

    #[test]
    fn partial_order_axioms() {
        for p in [Poset::rectangle(3, 3).unwrap(), Poset::triangle(4).unwrap()] {
            let n = p.len();
            for x in 0..n {
                assert!(p.le(x, x));
                for y in 0..n {
                    if x != y && p.le(x, y) {
                        assert!(!p.le(y, x));
                    }
                    for z in 0..n {
                        if p.le(x, y) && p.le(y, z) {
                            assert!(p.le(x, z));
                        }
                    }
                }
            }
            // linear extension respects the order
            let pos: Vec<usize> = {
                let mut v = vec![0; n];
                for (k, &x) in p.linear_extension().iter().enumerate() {
                    v[x] = k;
                }
                v
            };
            for (lo, hi) in p.covers() {
                assert!(pos[lo] < pos[hi]);
            }
        }
    }
}
