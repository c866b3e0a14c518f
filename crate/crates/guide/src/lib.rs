//! Compiles and runs every Rust snippet in `book/src` as a doc-test, so the
//! book cannot drift from the library.

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/palindromes.md")]
pub mod palindromes {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/density.md")]
pub mod density {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/convergence.md")]
pub mod convergence {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/sampling.md")]
pub mod sampling {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
