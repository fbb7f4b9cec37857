//! Exact integer and rational arithmetic: factorization, valuations, residue
//! symbols, Hilbert symbols and square classes.

mod factor;
mod prime;
mod square_class;
mod symbols;

pub(crate) use factor::exact_sqrt;
pub use factor::{factorize, factorize_with_budget, FactorBudget, Factorization};
pub use prime::{is_prime, is_prime_u64, Place, Prime};
pub use square_class::{is_local_square, multiply_classes, squarefree_class, SquareClass};
pub use symbols::{hilbert_symbol, hilbert_symbol_int, legendre, valuation};
pub(crate) use symbols::{is_square_at, split_prime_power};
