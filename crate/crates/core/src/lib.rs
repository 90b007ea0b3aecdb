//! Exact computations in the type-B Hecke algebra `H_{1,n}(q)`: normal forms,
//! the Markov trace, the solid-torus invariant `X`, loop-monomial bases and
//! braid band move equation systems.

pub mod bbm;
pub mod braid;
pub mod coeff;
pub mod error;
pub mod hecke;
pub mod invariant;
pub mod linalg;
pub mod skein;
pub mod trace;

pub use error::{Result, SkeinError};

/// Family of looping generators: `t_i = g_i..g_1 t g_1..g_i` or
/// `t'_i = g_i..g_1 t g_1^-1..g_i^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    T,
    TPrime,
}

/// Orientation of a crossing or move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}
