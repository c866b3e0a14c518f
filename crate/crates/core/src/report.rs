use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::decimal::{format_ratio, format_sig17};
use crate::exact::{self, ProductMode, ProductValue};
use crate::oracle;
use crate::sampler::SampleReport;
use crate::{Error, SpaceParams};

/// Where a density value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Product,
    Oracle,
    Sampled,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::Product => "product",
            Provenance::Oracle => "oracle",
            Provenance::Sampled => "sampled",
        })
    }
}

/// A density together with how it was obtained.
///
/// `exact` and `counts` are absent for float-mode products and samples.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub params: SpaceParams,
    pub provenance: Provenance,
    /// `(palindromic, total)` before reduction.
    pub counts: Option<(BigUint, BigUint)>,
    pub exact: Option<BigRational>,
    pub approx: f64,
}

impl DensityReport {
    pub fn closed_form(p: SpaceParams) -> Self {
        let pal = exact::palindromic_count(p);
        let total = exact::space_size(p);
        let ratio = BigRational::new(BigInt::from(pal.clone()), BigInt::from(total.clone()));
        DensityReport {
            params: p,
            provenance: Provenance::ClosedForm,
            counts: Some((pal, total)),
            approx: crate::decimal::ratio_to_f64(&ratio),
            exact: Some(ratio),
        }
    }

    pub fn product(p: SpaceParams, mode: ProductMode) -> Self {
        let value = exact::pd_product(p, mode);
        let approx = value.to_f64();
        DensityReport {
            params: p,
            provenance: Provenance::Product,
            counts: None,
            exact: match value {
                ProductValue::Exact(r) => Some(r),
                ProductValue::Float(_) => None,
            },
            approx,
        }
    }

    pub fn oracle(p: SpaceParams, cap: u64) -> Result<Self, Error> {
        let c = oracle::brute_force_counts(p, cap)?;
        let ratio = BigRational::new(
            BigInt::from(c.palindromic.clone()),
            BigInt::from(c.total.clone()),
        );
        Ok(DensityReport {
            params: p,
            provenance: Provenance::Oracle,
            counts: Some((c.palindromic, c.total)),
            approx: crate::decimal::ratio_to_f64(&ratio),
            exact: Some(ratio),
        })
    }

    pub fn sampled(r: &SampleReport) -> Self {
        DensityReport {
            params: r.params,
            provenance: Provenance::Sampled,
            counts: None,
            exact: None,
            approx: r.estimate,
        }
    }

    /// The 17-significant-digit decimal.
    pub fn decimal(&self) -> String {
        match &self.exact {
            Some(r) => format_ratio(r),
            None => format_sig17(self.approx),
        }
    }
}

/// `550/2002 = 25/91 ≈ 0.27472527472527475`, dropping whichever exact parts
/// are unknown.
impl fmt::Display for DensityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((pal, total)) = &self.counts {
            write!(f, "{pal}/{total} = ")?;
        }
        if let Some(r) = &self.exact {
            write!(f, "{r} ")?;
        }
        write!(f, "≈ {}", self.decimal())
    }
}
