use std::fmt;

use num_traits::Signed;

/// Values a real-valued table may take.
///
/// Equality and order are taken literally: two values are equal iff `==`
/// says so, and apart iff `|a - b| > 0`. For [`crate::Rat`] that is the
/// exact arithmetic of the rationals.
pub trait Scalar:
    Clone + PartialOrd + Signed + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Gap `|a - b|` when positive.
    fn gap(&self, other: &Self) -> Option<Self> {
        let d = (self.clone() - other.clone()).abs();
        if d > Self::zero() {
            Some(d)
        } else {
            None
        }
    }
}

impl<T> Scalar for T where
    T: Clone + PartialOrd + Signed + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}
