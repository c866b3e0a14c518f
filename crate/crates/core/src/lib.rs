//! Palindromic density of multiset spaces.
//!
//! A multiset of `n` symbols drawn from a `b`-letter alphabet is *palindromic*
//! when its elements can be arranged into a word that reads the same in both
//! directions. This crate answers "what fraction of all such multisets is
//! palindromic?" three independent ways:
//!
//! * [`exact`]: closed forms, the product form, the step ratio between
//!   consecutive lengths, bounds and limits, all in exact rational arithmetic.
//! * [`oracle`]: brute-force enumeration of the space straight from the
//!   definitions, used to cross-check every closed form.
//! * [`sampler`]: Monte Carlo estimates with Wilson intervals, under both the
//!   uniform-multiset model and the contrasting uniform-picks model.
//!
//! ```
//! use palindensity::{exact, SpaceParams};
//! use num_rational::BigRational;
//!
//! let p = SpaceParams::new(5, 10)?;
//! assert_eq!(exact::space_size(p), 2002u32.into());
//! assert_eq!(exact::palindromic_count(p), 550u32.into());
//! assert_eq!(exact::pd_exact(p), BigRational::new(25.into(), 91.into()));
//! # Ok::<(), palindensity::Error>(())
//! ```

mod error;
mod params;

pub mod decimal;
pub mod exact;
pub mod oracle;
pub mod report;
pub mod sampler;

pub use error::Error;
pub use exact::DeltaFactor;
pub use oracle::{Multiset, Profile};
pub use params::{Parity, SpaceParams};
pub use report::{DensityReport, Provenance};
pub use sampler::{SampleReport, SamplingModel};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
