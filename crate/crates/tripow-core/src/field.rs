//! Field abstraction shared by the exact scalar types.
//!
//! The power-factor recursion runs unchanged over plain rationals and
//! over rational functions in the perturbation variable; this trait is
//! the bound that makes that generic.

use core::fmt::Debug;
use core::ops::{Div, Neg, Sub};

use num_traits::{One, Zero};

/// An exact field: clonable values with total add/sub/mul/neg and a
/// division that is only invoked on nonzero divisors.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Div<Output = Self>
{
}
