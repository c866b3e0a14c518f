//! Exact closed forms for multiset-space sizes and palindromic density.
//!
//! Everything here is a pure function returning arbitrary-precision values.
//! Rationals are [`BigRational`], which is always held in lowest terms with a
//! positive denominator, so `550/2002` and `25/91` compare equal.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Parity, SpaceParams};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
///
/// ```
/// use palindensity::exact::binomial;
/// assert_eq!(binomial(14, 9), 2002u32.into());
/// assert_eq!(binomial(3, 5), 0u32.into());
/// ```
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    // acc == C(n - k + i, i) after step i, so each division is exact.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Number of size-`n` multisets over `b` letters, `C(n + b - 1, b - 1)`.
pub fn space_size(p: SpaceParams) -> BigUint {
    multiset_count(p.n(), p.b())
}

// Also defined for n < 2, which the palindromic counts need at n = 2, 3.
fn multiset_count(n: u64, b: u64) -> BigUint {
    binomial(n + b - 1, b - 1)
}

/// Number of palindromic multisets in the space.
///
/// Even `n` doubles a size-`n/2` multiset; odd `n` additionally picks one of
/// `b` center symbols.
pub fn palindromic_count(p: SpaceParams) -> BigUint {
    let half = multiset_count(p.k(), p.b());
    match p.parity() {
        Parity::Even => half,
        Parity::Odd => half * p.b(),
    }
}

/// Palindromic density `palindromic_count / space_size`, reduced.
pub fn pd_exact(p: SpaceParams) -> BigRational {
    BigRational::new(
        BigInt::from(palindromic_count(p)),
        BigInt::from(space_size(p)),
    )
}

/// Evaluation strategy for [`pd_product`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductMode {
    Exact,
    Float,
}

/// Result of [`pd_product`].
#[derive(Debug, Clone, PartialEq)]
pub enum ProductValue {
    Exact(BigRational),
    Float(f64),
}

impl ProductValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            ProductValue::Exact(r) => crate::decimal::ratio_to_f64(r),
            ProductValue::Float(x) => *x,
        }
    }
}

/// Density via the telescoped product form.
///
/// For even `n` this is the product of `i / (i + b - 1)` over
/// `i = n/2 + 1 ..= n`; for odd `n` the product runs over
/// `i = (n + 1)/2 ..= n` and is scaled by `b`. Float mode multiplies the
/// factors in ascending `i` and applies the `b` scale last.
pub fn pd_product(p: SpaceParams, mode: ProductMode) -> ProductValue {
    let (n, b) = (p.n(), p.b());
    let first = match p.parity() {
        Parity::Even => (n + 2) / 2,
        Parity::Odd => (n + 1) / 2,
    };
    let scale = match p.parity() {
        Parity::Even => 1,
        Parity::Odd => b,
    };
    match mode {
        ProductMode::Exact => {
            let mut num = BigUint::from(scale);
            let mut den = BigUint::one();
            for i in first..=n {
                num *= i;
                den *= i + b - 1;
            }
            ProductValue::Exact(BigRational::new(num.into(), den.into()))
        }
        ProductMode::Float => {
            let mut acc = 1.0f64;
            for i in first..=n {
                acc *= i as f64 / (i + b - 1) as f64;
            }
            ProductValue::Float(acc * scale as f64)
        }
    }
}

/// Ratio between the densities at consecutive lengths of one parity:
/// `PD(2k + 2) / PD(2k)` (even) or `PD(2k + 3) / PD(2k + 1)` (odd).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaFactor {
    pub k: u64,
    pub b: u64,
    pub parity: Parity,
    pub alpha: BigUint,
    pub beta: BigUint,
    pub value: BigRational,
}

impl DeltaFactor {
    /// `beta - alpha`: `b(b - 1)` for even, `(b - 2)(b - 1)` for odd.
    pub fn gap(&self) -> BigUint {
        &self.beta - &self.alpha
    }
}

/// Computes the step ratio `alpha / beta` as quadratics in `k`.
///
/// For odd parity and `b = 2` the two quadratics coincide and the value is 1.
///
/// # Panics
///
/// If `k == 0` or `b < 2`.
pub fn delta_factor(k: u64, b: u64, parity: Parity) -> DeltaFactor {
    assert!(k >= 1, "delta_factor requires k >= 1");
    assert!(b >= 2, "delta_factor requires b >= 2");
    let kk = BigUint::from(k);
    let bb = BigUint::from(b);
    let four_k2 = BigUint::from(4u32) * &kk * &kk;
    let (alpha, beta) = match parity {
        Parity::Even => {
            let lin = (BigUint::from(4u32) * &bb + 2u32) * &kk;
            let alpha = &four_k2 + &lin + BigUint::from(2u32) * &bb;
            let beta = &four_k2 + &lin + &bb * &bb + &bb;
            (alpha, beta)
        }
        Parity::Odd => {
            let lin = (BigUint::from(4u32) * &bb + 6u32) * &kk;
            let alpha = &four_k2 + &lin + BigUint::from(6u32) * &bb;
            let beta = &four_k2 + &lin + &bb * &bb + BigUint::from(3u32) * &bb + 2u32;
            (alpha, beta)
        }
    };
    let value = BigRational::new(alpha.clone().into(), beta.clone().into());
    DeltaFactor {
        k,
        b,
        parity,
        alpha,
        beta,
        value,
    }
}

/// Limit of the density as `n` grows with fixed parity:
/// `1 / 2^(b-1)` (even) or `b / 2^(b-1)` (odd).
///
/// # Panics
///
/// If `b < 2`.
pub fn limit_value(b: u64, parity: Parity) -> BigRational {
    assert!(b >= 2, "limit_value requires b >= 2");
    let shift = usize::try_from(b - 1).expect("alphabet size fits in usize");
    let den = BigInt::one() << shift;
    let num = match parity {
        Parity::Even => BigInt::one(),
        Parity::Odd => BigInt::from(b),
    };
    BigRational::new(num, den)
}

/// Upper bound on the density used to show it vanishes as `b` grows.
///
/// Even `n`: `n / (n + b - 1)`, attained exactly at `n = 2`.
/// Odd `n`: `n^((n+1)/2) / b^((n-1)/2)`, which may exceed 1.
pub fn upper_bound(p: SpaceParams) -> BigRational {
    let (n, b) = (p.n(), p.b());
    match p.parity() {
        Parity::Even => BigRational::new(n.into(), (n + b - 1).into()),
        Parity::Odd => {
            let up = usize::try_from((n + 1) / 2).expect("exponent fits in usize");
            let down = usize::try_from((n - 1) / 2).expect("exponent fits in usize");
            BigRational::new(
                num_traits::pow(BigInt::from(n), up),
                num_traits::pow(BigInt::from(b), down),
            )
        }
    }
}

/// Distance from the density at `n = 2k` (even) or `n = 2k + 1` (odd) to its
/// large-`n` limit.
///
/// # Panics
///
/// If `k == 0` or `b < 2`.
pub fn tail_gap(k: u64, b: u64, parity: Parity) -> BigRational {
    assert!(k >= 1, "tail_gap requires k >= 1");
    let p = SpaceParams::new(parity.length(k), b).expect("b >= 2 and n >= 2");
    pd_exact(p) - limit_value(b, parity)
}
