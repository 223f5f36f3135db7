//! Exact arithmetic: half-integers, radicals `r·√s`, and factorial bookkeeping.

mod factorial;
mod halfint;
mod radical;

pub use factorial::{
    factorial, factorial_cache_cap, set_factorial_cache_cap, FactorialRatio, DEFAULT_FACTORIAL_CAP,
};
pub use halfint::HalfInt;
pub use radical::{radical_add, radical_mul, rat, ExactRadical, RadicalSum};
