//! Gap statistics of Farey fractions whose denominators lie in a residue class.

use num_rational::BigRational;

pub mod cli;
pub mod continuants;
pub mod empirical;
pub mod enumeration;
pub mod farey_triangle;
pub mod proportions;
pub mod reference;

/// `"p/q"`, with the denominator always present.
pub fn ratio_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}
