//! Numeric scalars used by the counting engine.
//!
//! Realization counts only ever need addition, multiplication by small
//! binomial coefficients, zero and one, so the engine is written against
//! [`Count`] and instantiated with an exact big integer by default. Fixed
//! width integers are fine for small instances (they panic on overflow in
//! debug builds); `f64` gives fast magnitude estimates.

use std::ops::{Add, AddAssign, Mul};

use num_traits::{FromPrimitive, One, Zero};

pub trait Count:
    Clone + Zero + One + Add<Output = Self> + AddAssign + Mul<Output = Self> + FromPrimitive
{
}

impl<T> Count for T where
    T: Clone + Zero + One + Add<Output = T> + AddAssign + Mul<Output = T> + FromPrimitive
{
}

/// Binomial coefficient `C(n, k)` in the target scalar.
pub(crate) fn binomial<C: Count>(n: usize, k: usize) -> C {
    if k > n {
        return C::zero();
    }
    let k = k.min(n - k);
    // exact in u128 for every n the engine accepts
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    C::from_u128(acc).expect("binomial coefficient representable in the count type")
}
