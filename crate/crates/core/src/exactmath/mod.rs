//! Exact scalars over `Z[1/S]`, integer matrices, and finitely generated
//! abelian groups.

mod group;
mod scalar;
mod smith;

pub use group::{ext1_to, hom_to, ses_assemble, FinAbGroup};
pub use scalar::{int_pow, prime_factors, InvertedSet, LocalizedScalar};
pub use smith::{invariant_factors, smith_normal_form, IntMatrix, SmithDecomposition};
