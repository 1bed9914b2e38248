use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, MulAssign};

use num_traits::{FromPrimitive, One, Zero};

/// Commutative semiring of nonnegative integers used by all counting code.
///
/// Blanket-implemented for every type with the required arithmetic, so
/// `u64`, `u128` and `BigUint` all qualify.
pub trait Counter:
    Clone
    + Debug
    + Display
    + Ord
    + Zero
    + One
    + FromPrimitive
    + Add<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
}

impl<T> Counter for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Zero
        + One
        + FromPrimitive
        + Add<Output = T>
        + Mul<Output = T>
        + for<'a> AddAssign<&'a T>
        + for<'a> MulAssign<&'a T>
{
}

/// Converts a machine integer into the counter type.
///
/// Panics only if the counter cannot represent `x`, which never happens for
/// the unbounded [`crate::Count`].
pub fn from_usize<C: Counter>(x: usize) -> C {
    C::from_usize(x).expect("counter type too narrow for value")
}

pub fn factorial<C: Counter>(k: usize) -> C {
    (2..=k).fold(C::one(), |acc, i| acc * from_usize::<C>(i))
}

pub(crate) fn power<C: Counter>(base: C, exp: usize) -> C {
    num_traits::pow(base, exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Count;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial::<u64>(0), 1);
        assert_eq!(factorial::<u64>(5), 120);
        assert_eq!(factorial::<Count>(21).to_string(), "51090942171709440000");
    }

    #[test]
    fn power_matches_u64() {
        assert_eq!(power::<u64>(4, 3), 64);
        assert_eq!(power::<Count>(from_usize(31), 30).to_string().len(), 45);
        assert_eq!(power::<u64>(0, 0), 1);
    }
}
