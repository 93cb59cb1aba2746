//! Order ideals, filters and antichains, and the combinatorial toggles.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// A downward-closed subset, stored as a bitset over element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal(FixedBitSet);

/// An upward-closed subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filter(FixedBitSet);

/// A set of pairwise incomparable elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Antichain(FixedBitSet);

fn to_bits(poset: &Poset, members: impl IntoIterator<Item = usize>) -> Result<FixedBitSet> {
    let mut bits = FixedBitSet::with_capacity(poset.len());
    for x in members {
        poset.check_element(x)?;
        bits.insert(x);
    }
    Ok(bits)
}

pub fn is_ideal(poset: &Poset, set: &FixedBitSet) -> bool {
    set.ones().all(|x| poset.lower_covers(x).iter().all(|&y| set.contains(y)))
}

pub fn is_filter(poset: &Poset, set: &FixedBitSet) -> bool {
    set.ones().all(|x| poset.upper_covers(x).iter().all(|&y| set.contains(y)))
}

pub fn is_antichain(poset: &Poset, set: &FixedBitSet) -> bool {
    let members: Vec<usize> = set.ones().collect();
    members.iter().all(|&x| members.iter().all(|&y| x == y || !poset.le(x, y)))
}

macro_rules! element_set {
    ($ty:ident, $check:ident, $kind:literal) => {
        impl $ty {
            pub fn new(poset: &Poset, members: impl IntoIterator<Item = usize>) -> Result<Self> {
                Self::from_bits(poset, to_bits(poset, members)?)
            }

            pub fn from_bits(poset: &Poset, bits: FixedBitSet) -> Result<Self> {
                if bits.len() != poset.len() {
                    return Err(Error::LengthMismatch { expected: poset.len(), got: bits.len() });
                }
                if !$check(poset, &bits) {
                    return Err(Error::WrongKind {
                        expected: $kind,
                        detail: format!("{:?}", bits.ones().collect::<Vec<_>>()),
                    });
                }
                Ok($ty(bits))
            }

            pub fn contains(&self, x: usize) -> bool {
                self.0.contains(x)
            }

            pub fn len(&self) -> usize {
                self.0.count_ones(..)
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_clear()
            }

            /// Sorted element indices.
            pub fn members(&self) -> Vec<usize> {
                self.0.ones().collect()
            }

            pub fn bits(&self) -> &FixedBitSet {
                &self.0
            }
        }
    };
}

element_set!(OrderIdeal, is_ideal, "an order ideal");
element_set!(Filter, is_filter, "a filter");
element_set!(Antichain, is_antichain, "an antichain");

impl OrderIdeal {
    pub fn empty(poset: &Poset) -> Self {
        OrderIdeal(FixedBitSet::with_capacity(poset.len()))
    }

    pub fn full(poset: &Poset) -> Self {
        let mut bits = FixedBitSet::with_capacity(poset.len());
        bits.insert_range(..);
        OrderIdeal(bits)
    }

    /// Human-readable `{a,b,...}` using element labels.
    pub fn display(&self, poset: &Poset) -> String {
        let names: Vec<String> = self.0.ones().map(|x| poset.label(x).to_string()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Toggle at `x` on a raw ideal bitset, in place.
pub(crate) fn toggle_bits(poset: &Poset, bits: &mut FixedBitSet, x: usize) {
    if bits.contains(x) {
        if poset.upper_covers(x).iter().all(|&y| !bits.contains(y)) {
            bits.set(x, false);
        }
    } else if poset.lower_covers(x).iter().all(|&y| bits.contains(y)) {
        bits.insert(x);
    }
}

/// `I` toggled at `x`: `I △ {x}` when that is an ideal, otherwise `I`.
pub fn toggle_ideal(poset: &Poset, ideal: &OrderIdeal, x: usize) -> Result<OrderIdeal> {
    poset.check_element(x)?;
    check_ideal(poset, ideal)?;
    let mut bits = ideal.0.clone();
    toggle_bits(poset, &mut bits, x);
    Ok(OrderIdeal(bits))
}

fn check_ideal(poset: &Poset, ideal: &OrderIdeal) -> Result<()> {
    if ideal.0.len() != poset.len() {
        return Err(Error::LengthMismatch { expected: poset.len(), got: ideal.0.len() });
    }
    if !is_ideal(poset, &ideal.0) {
        return Err(Error::WrongKind { expected: "an order ideal", detail: format!("{:?}", ideal.members()) });
    }
    Ok(())
}

pub fn toggle_sequence(poset: &Poset, ideal: &OrderIdeal, order: &[usize]) -> Result<OrderIdeal> {
    check_ideal(poset, ideal)?;
    let mut bits = ideal.0.clone();
    for &x in order {
        poset.check_element(x)?;
        toggle_bits(poset, &mut bits, x);
    }
    Ok(OrderIdeal(bits))
}

/// Rowmotion by toggling ranks from the top down.
pub fn rowmotion_ideal(poset: &Poset, ideal: &OrderIdeal) -> Result<OrderIdeal> {
    toggle_sequence(poset, ideal, &poset.rowmotion_order())
}

/// Promotion by toggling files from left to right.
pub fn promotion_ideal(poset: &Poset, ideal: &OrderIdeal) -> Result<OrderIdeal> {
    toggle_sequence(poset, ideal, &poset.promotion_order()?)
}

/// Toggles every element of file `i` (1-based).
pub fn file_toggle_ideal(poset: &Poset, ideal: &OrderIdeal, i: usize) -> Result<OrderIdeal> {
    let file = poset.file(i)?.to_vec();
    toggle_sequence(poset, ideal, &file)
}

/// α₁: the complementary filter.
pub fn complement(poset: &Poset, ideal: &OrderIdeal) -> Result<Filter> {
    check_ideal(poset, ideal)?;
    let mut bits = ideal.0.clone();
    bits.toggle_range(..);
    Ok(Filter(bits))
}

/// α₂: the minimal elements of a filter.
pub fn minimal_elements(poset: &Poset, filter: &Filter) -> Antichain {
    let f = &filter.0;
    let mut bits = FixedBitSet::with_capacity(poset.len());
    for x in f.ones() {
        if poset.lower_covers(x).iter().all(|&y| !f.contains(y)) {
            bits.insert(x);
        }
    }
    Antichain(bits)
}

/// α₃: the downward saturation of an antichain.
pub fn down_saturation(poset: &Poset, antichain: &Antichain) -> OrderIdeal {
    let mut bits = FixedBitSet::with_capacity(poset.len());
    for x in antichain.0.ones() {
        bits.union_with(poset.down_set(x));
    }
    OrderIdeal(bits)
}

/// Rowmotion as α₃ ∘ α₂ ∘ α₁.
pub fn rowmotion_by_complement(poset: &Poset, ideal: &OrderIdeal) -> Result<OrderIdeal> {
    let filter = complement(poset, ideal)?;
    Ok(down_saturation(poset, &minimal_elements(poset, &filter)))
}

/// The Brouwer-Schrijver map α₂ ∘ α₁ ∘ α₃ on antichains.
pub fn brouwer_schrijver(poset: &Poset, antichain: &Antichain) -> Antichain {
    let ideal = down_saturation(poset, antichain);
    let filter = complement(poset, &ideal).expect("down-saturation is an ideal");
    minimal_elements(poset, &filter)
}

/// All order ideals, each exactly once, by depth-first extension along the
/// poset's linear extension.
pub fn enumerate_ideals(poset: &Poset) -> Vec<OrderIdeal> {
    fn extend(poset: &Poset, order: &[usize], depth: usize, bits: &mut FixedBitSet, out: &mut Vec<OrderIdeal>) {
        if depth == order.len() {
            out.push(OrderIdeal(bits.clone()));
            return;
        }
        let x = order[depth];
        extend(poset, order, depth + 1, bits, out);
        if poset.lower_covers(x).iter().all(|&y| bits.contains(y)) {
            bits.insert(x);
            extend(poset, order, depth + 1, bits, out);
            bits.set(x, false);
        }
    }
    let mut out = Vec::new();
    let mut bits = FixedBitSet::with_capacity(poset.len());
    extend(poset, poset.linear_extension(), 0, &mut bits, &mut out);
    out
}
