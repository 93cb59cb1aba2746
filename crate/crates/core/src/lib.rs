//! Toggle dynamics on finite posets in exact rational arithmetic.
//!
//! Three regimes share one vocabulary:
//!
//! * **combinatorial**: toggles on order ideals ([`ideal`]);
//! * **piecewise-linear**: toggles on the order polytope, `v ↦ L + R - v`
//!   with `L = max` over lower covers and `R = min` over upper covers;
//! * **birational**: toggles on positive arrays, `v ↦ L·R / v` with `L` a
//!   sum and `R` a parallel sum.
//!
//! The last two are one engine ([`dynamics`]) instantiated with different
//! [`dynamics::ToggleAlgebra`]s. On top of it sit the order/chain polytope
//! maps ([`polytope`]), birational rowmotion structure ([`birational`]),
//! homomesy checks ([`homomesy`]), the tableau bridge ([`tableaux`]) and
//! seeded verification suites ([`verify`]).
//!
//! ```
//! use std::sync::Arc;
//! use togglekit::dynamics::{rowmotion, Birational, PArray};
//! use togglekit::poset::Poset;
//!
//! let square = Arc::new(Poset::rectangle(2, 2).unwrap());
//! let f = PArray::from_ints(square, &[1, 2, 3, 4]).unwrap();
//! let g = rowmotion(&Birational::default(), &f).unwrap();
//! assert_eq!(g.display(), "(1/4,5/8,5/12,5/4)");
//! ```

pub mod birational;
pub mod dynamics;
pub mod error;
pub mod homomesy;
pub mod ideal;
pub mod linalg;
pub mod orbit;
pub mod polytope;
pub mod poset;
pub mod rational;
pub mod sample;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
