//! Bernoulli and Euler numbers and polynomials from their defining
//! recurrences, memoized in a [`SequenceCache`], plus the classical
//! conversion identities between them.

mod cache;
mod identities;

pub use cache::{SequenceCache, Table, TouchCount, TouchStats};
pub(crate) use identities::euler_poly_from_constants;
pub use identities::{
    euler_constants, euler_poly_from_numbers,
    bernoulli_forward_difference, bernoulli_translate, euler_number_identities,
    euler_poly_via_bernoulli, raabe_sum,
};
