//! Reference values computed by a separate brute-force implementation
//! (exact fractions, chains enumerated explicitly), frozen here.

use std::sync::Arc;

use togglekit::birational::{alpha2, alpha3, quotient_sequence, recombination_check, recombine};
use togglekit::dynamics::{promotion, rowmotion, Birational, MapKind, PArray, PiecewiseLinear};
use togglekit::homomesy::homomesy_space_rank;
use togglekit::ideal::{brouwer_schrijver, promotion_ideal, Antichain, OrderIdeal};
use togglekit::polytope::{chain_sums_to_top, complement_map, contains, transfer, Polytope};
use togglekit::poset::Poset;
use togglekit::rational::{format_list, parse_rational_list};
use togglekit::tableaux::{promotion as tableau_promotion, ssyt_to_gt, Ssyt};

fn square() -> Arc<Poset> {
    Arc::new(Poset::rectangle(2, 2).unwrap())
}

fn arr(p: &Arc<Poset>, s: &str) -> PArray {
    PArray::new(p.clone(), parse_rational_list(s).unwrap()).unwrap()
}

fn idx(p: &Poset, names: &str) -> Vec<usize> {
    names
        .chars()
        .map(|c| match c {
            'w' => p.index_of_coord(1, 1),
            'x' => p.index_of_coord(2, 1),
            'y' => p.index_of_coord(1, 2),
            'z' => p.index_of_coord(2, 2),
            _ => None,
        })
        .map(Option::unwrap)
        .collect()
}

#[test]
fn poset_counts() {
    let p = Poset::rectangle(2, 3).unwrap();
    assert_eq!((p.len(), p.covers().len()), (6, 7));
    assert_eq!(p.ranks().iter().map(Vec::len).collect::<Vec<_>>(), [1, 2, 2, 1]);
    assert_eq!(Poset::triangle(3).unwrap().covers().len(), 6);
}

#[test]
fn combinatorial_square() {
    let p = square();
    let i = OrderIdeal::new(&p, idx(&p, "wx")).unwrap();
    assert!(promotion_ideal(&p, &i).unwrap().is_empty());
    let a = Antichain::new(&p, idx(&p, "y")).unwrap();
    assert_eq!(brouwer_schrijver(&p, &a).members(), idx(&p, "x"));
}

#[test]
fn polytope_values() {
    let p = square();
    assert!(contains(Polytope::Chain, &arr(&p, "1/10,1/10,2/10,1/10")));
    let v = arr(&p, "1/10,2/10,3/10,4/10");
    let phi = transfer(&v).unwrap();
    assert_eq!(phi, arr(&p, "1/10,1/10,1/5,1/10"));
    let a3 = chain_sums_to_top(&phi);
    assert_eq!(a3, arr(&p, "2/5,1/5,3/10,1/10"));
    assert_eq!(complement_map(&a3), arr(&p, "3/5,4/5,7/10,9/10"));
    let pl = PiecewiseLinear::default();
    assert_eq!(promotion(&pl, &v).unwrap(), arr(&p, "1/5,3/10,4/5,9/10"));
    // the filter {y,z} goes to the antichain {y}
    assert_eq!(transfer(&arr(&p, "0,0,1,1")).unwrap(), arr(&p, "0,0,1,0"));
}

#[test]
fn pl_orbit() {
    let p = square();
    let pl = PiecewiseLinear::default();
    let mut f = arr(&p, "1/10,2/10,3/10,4/10");
    let want = ["1/10,1/5,3/10,2/5", "3/5,4/5,7/10,9/10", "1/10,7/10,4/5,9/10", "1/10,3/10,1/5,9/10"];
    for w in want {
        assert_eq!(f, arr(&p, w));
        f = rowmotion(&pl, &f).unwrap();
    }
    assert_eq!(f, arr(&p, want[0]));
}

#[test]
fn birational_values() {
    let p = square();
    let b = Birational::default();
    let f = arr(&p, "1,2,3,4");
    let a2 = alpha2(&b, &f).unwrap();
    assert_eq!(a2, arr(&p, "1,2,3,4/5"));
    assert_eq!(alpha3(&b, &a2).unwrap(), arr(&p, "4,8/5,12/5,4/5"));
    assert_eq!(recombine(&b, &f).unwrap(), arr(&p, "1,5/8,3,5/4"));
    assert_eq!(promotion(&b, &f).unwrap(), arr(&p, "6/5,2,1/2,5/4"));
    let v = recombination_check(&b, &f).unwrap().unwrap();
    assert!(v.detail.contains("(6/5,6/5,1/2,2)") && v.detail.contains("(4/5,116/25,29/30,29/10)"), "{}", v.detail);
    assert_eq!(format_list(&quotient_sequence(&b, &f).unwrap().entries).join(","), "2,2,3/4,1/3");
    let q = quotient_sequence(&b, &promotion(&b, &f).unwrap()).unwrap();
    assert_eq!(format_list(&q.entries).join(","), "2,3/4,1/3,2");
}

#[test]
fn homomesic_space_dimensions() {
    for ((a, b), dim) in [((2, 2), 3), ((2, 3), 5)] {
        for map in [MapKind::Rowmotion, MapKind::Promotion] {
            let r = homomesy_space_rank(&Arc::new(Poset::rectangle(a, b).unwrap()), map, 20, 1, 1000).unwrap();
            assert_eq!((r.nullspace_dim, r.standard_rank), (dim, dim), "{a}x{b} {map}");
        }
    }
}

#[test]
fn tableau_values() {
    let t = Ssyt::new(5, vec![vec![1, 2, 2], vec![3, 5, 5]]).unwrap();
    let gt: Vec<Vec<u32>> = vec![vec![3, 3, 0, 0, 0], vec![3, 1, 0, 0], vec![3, 1, 0], vec![3, 0], vec![1]];
    assert_eq!(ssyt_to_gt(&t).rows(), gt.as_slice());
    assert_eq!(tableau_promotion(&t).unwrap().rows(), &[vec![1, 1, 4], vec![2, 4, 5]]);
}
