//! Monte Carlo estimates of palindromic density.
//!
//! Two models of "a random multiset" are supported. Under
//! [`SamplingModel::UniformMultiset`] every multiset in the space is equally
//! likely; estimates converge to [`crate::exact::pd_exact`]. Under
//! [`SamplingModel::UniformPicks`] the `n` elements are drawn independently,
//! which favours multisets with many distinct symbols and converges to a
//! different value.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{Multiset, SpaceParams};

/// Two-sided 99% standard normal quantile, `Phi^-1(0.995)`.
pub const Z_99: f64 = 2.575_829_303_548_900_4;

/// Draws per independently seeded stream. Fixed so results do not depend on
/// how many threads run the streams.
pub const CHUNK_DRAWS: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SamplingModel {
    UniformMultiset,
    UniformPicks,
}

impl fmt::Display for SamplingModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SamplingModel::UniformMultiset => "uniform-multiset",
            SamplingModel::UniformPicks => "uniform-picks",
        })
    }
}

impl FromStr for SamplingModel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "uniform-multiset" => Ok(SamplingModel::UniformMultiset),
            "uniform-picks" => Ok(SamplingModel::UniformPicks),
            other => Err(format!(
                "unknown model {other:?} (expected uniform-multiset or uniform-picks)"
            )),
        }
    }
}

/// Draws one multiset from the space of `p` under `model`.
pub fn sample_multiset<R: Rng + ?Sized>(p: SpaceParams, model: SamplingModel, rng: &mut R) -> Multiset {
    let mut scratch = Vec::new();
    let mut counts = vec![0u32; p.b() as usize];
    draw_into(p, model, rng, &mut scratch, &mut counts);
    Multiset::from_counts(counts)
}

// Fills `counts` with one draw. `scratch` is reused across draws to avoid
// reallocating the position table.
fn draw_into<R: Rng + ?Sized>(
    p: SpaceParams,
    model: SamplingModel,
    rng: &mut R,
    scratch: &mut Vec<u32>,
    counts: &mut [u32],
) {
    counts.fill(0);
    let (n, b) = (p.n() as usize, p.b() as usize);
    match model {
        SamplingModel::UniformPicks => {
            for _ in 0..n {
                counts[rng.random_range(0..b)] += 1;
            }
        }
        SamplingModel::UniformMultiset => {
            // Choose b - 1 of the n + b - 1 star/bar slots as bars with a
            // partial Fisher-Yates shuffle, then read star runs left to right.
            let slots = n + b - 1;
            scratch.clear();
            scratch.extend(0..slots as u32);
            for i in 0..b - 1 {
                let j = rng.random_range(i..slots);
                scratch.swap(i, j);
            }
            let mut is_bar = vec![false; slots];
            for &pos in &scratch[..b - 1] {
                is_bar[pos as usize] = true;
            }
            let mut symbol = 0;
            for bar in is_bar {
                if bar {
                    symbol += 1;
                } else {
                    counts[symbol] += 1;
                }
            }
        }
    }
}

fn is_palindromic_counts(counts: &[u32], n: u64) -> bool {
    let odd = counts.iter().filter(|&&c| c % 2 == 1).count() as u64;
    odd <= n % 2
}

/// A Monte Carlo density estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleReport {
    pub params: SpaceParams,
    pub model: SamplingModel,
    pub draws: u64,
    pub hits: u64,
    pub estimate: f64,
    /// 99% Wilson score interval.
    pub interval: (f64, f64),
    pub seed: u64,
}

impl SampleReport {
    pub fn contains(&self, x: f64) -> bool {
        self.interval.0 <= x && x <= self.interval.1
    }
}

/// Wilson score interval for `hits` successes out of `draws`, clamped to
/// `[0, 1]` and widened if needed so it contains `hits / draws`.
pub fn wilson_interval(hits: u64, draws: u64, z: f64) -> (f64, f64) {
    assert!(draws > 0, "wilson_interval requires at least one draw");
    let n = draws as f64;
    let p = hits as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = p + z2 / (2.0 * n);
    let rad = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    let lo = ((center - rad) / denom).clamp(0.0, 1.0);
    let hi = ((center + rad) / denom).clamp(0.0, 1.0);
    (lo.min(p), hi.max(p))
}

/// Hits among `draws` draws of the stream seeded with `seed`.
fn count_hits(p: SpaceParams, model: SamplingModel, draws: u64, seed: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut scratch = Vec::new();
    let mut counts = vec![0u32; p.b() as usize];
    let mut hits = 0;
    for _ in 0..draws {
        draw_into(p, model, &mut rng, &mut scratch, &mut counts);
        if is_palindromic_counts(&counts, p.n()) {
            hits += 1;
        }
    }
    hits
}

/// Estimates the palindromic density from `draws` samples.
///
/// Draws are split into chunks of [`CHUNK_DRAWS`]; chunk `i` uses its own
/// ChaCha8 stream seeded with `seed + i`. Chunks run in parallel and their
/// hit counts are summed, so the report depends only on the arguments.
///
/// # Panics
///
/// If `draws == 0`.
pub fn estimate_pd(p: SpaceParams, model: SamplingModel, draws: u64, seed: u64) -> SampleReport {
    assert!(draws > 0, "estimate_pd requires at least one draw");
    let chunks = draws.div_ceil(CHUNK_DRAWS);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let len = CHUNK_DRAWS.min(draws - i * CHUNK_DRAWS);
            count_hits(p, model, len, seed.wrapping_add(i))
        })
        .sum();
    SampleReport {
        params: p,
        model,
        draws,
        hits,
        estimate: hits as f64 / draws as f64,
        interval: wilson_interval(hits, draws, Z_99),
        seed,
    }
}
