//! Orbits of invertible maps on finite (or at least periodic) points.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 1000;

/// The trajectory `start, T(start), ...` up to (not including) the first
/// return to `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord<T> {
    pub states: Vec<T>,
}

impl<T> OrbitRecord<T> {
    pub fn period(&self) -> usize {
        self.states.len()
    }
}

/// Iterates `step` from `start` until it returns.
///
/// Fails with [`Error::NotInvertible`] if some later state repeats before
/// the start does, and with [`Error::OrbitCapExceeded`] after `cap` steps.
pub fn orbit<T, F>(start: T, cap: usize, mut step: F) -> Result<OrbitRecord<T>>
where
    T: Clone + Eq + Hash,
    F: FnMut(&T) -> Result<T>,
{
    let mut seen: HashMap<T, usize> = HashMap::new();
    seen.insert(start.clone(), 0);
    let mut states = vec![start];
    loop {
        if states.len() > cap {
            return Err(Error::OrbitCapExceeded { cap });
        }
        let next = step(states.last().unwrap())?;
        match seen.get(&next) {
            Some(0) => return Ok(OrbitRecord { states }),
            Some(&k) => return Err(Error::NotInvertible { repeat: k }),
            None => {
                seen.insert(next.clone(), states.len());
                states.push(next);
            }
        }
    }
}

/// Applies `step` `k` times.
pub fn iterate<T, F>(start: &T, k: usize, mut step: F) -> Result<T>
where
    T: Clone,
    F: FnMut(&T) -> Result<T>,
{
    let mut cur = start.clone();
    for _ in 0..k {
        cur = step(&cur)?;
    }
    Ok(cur)
}

/// Sorted orbit sizes of a bijection on a finite set.
pub fn orbit_sizes<T, F>(points: &[T], cap: usize, mut step: F) -> Result<Vec<usize>>
where
    T: Clone + Eq + Hash,
    F: FnMut(&T) -> Result<T>,
{
    let mut done: std::collections::HashSet<T> = std::collections::HashSet::new();
    let mut sizes = Vec::new();
    for p in points {
        if done.contains(p) {
            continue;
        }
        let rec = orbit(p.clone(), cap, &mut step)?;
        sizes.push(rec.period());
        done.extend(rec.states);
    }
    sizes.sort_unstable();
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_shift_has_period_n() {
        let rec = orbit(0u32, 100, |x| Ok((x + 1) % 7)).unwrap();
        assert_eq!(rec.period(), 7);
        assert_eq!(rec.states[3], 3);
    }

    #[test]
    fn fixed_point() {
        assert_eq!(orbit(5u32, 10, |x| Ok(*x)).unwrap().period(), 1);
    }

    #[test]
    fn detects_non_invertible_map() {
        // 0 -> 1 -> 2 -> 1 -> ...
        let err = orbit(0u32, 100, |&x| Ok(if x == 2 { 1 } else { x + 1 })).unwrap_err();
        assert_eq!(err, Error::NotInvertible { repeat: 1 });
    }

    #[test]
    fn cap_exceeded() {
        let err = orbit(0u64, 50, |x| Ok(x + 1)).unwrap_err();
        assert_eq!(err, Error::OrbitCapExceeded { cap: 50 });
    }

    #[test]
    fn sizes_of_a_permutation() {
        let perm = [1usize, 0, 3, 4, 2, 5];
        let pts: Vec<usize> = (0..6).collect();
        assert_eq!(orbit_sizes(&pts, 10, |&x| Ok(perm[x])).unwrap(), vec![1, 2, 3]);
    }
}
