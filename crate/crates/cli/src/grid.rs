//! Density surfaces over rectangular `(n, b)` grids, as CSV or JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use palindensity::decimal::{format_ratio, format_sig17};
use palindensity::exact::{palindromic_count, pd_exact, pd_product, space_size, ProductMode};
use palindensity::SpaceParams;
use rayon::prelude::*;

use crate::CliError;

pub const MAX_CELLS: u64 = 1_000_000;

/// Largest `n` or `b` accepted for exact evaluation.
pub const MAX_EXACT_PARAM: u64 = 1_000_000;

// 2^53 - 1, the largest integer every JSON reader holds exactly.
const JSON_SAFE_INT: u64 = (1 << 53) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(format!("unknown mode {other:?} (expected exact or float)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub n_min: u64,
    pub n_max: u64,
    pub b_min: u64,
    pub b_max: u64,
    pub mode: Mode,
    pub format: Format,
}

impl GridSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.n_min < 2 {
            return Err(CliError::Usage(format!("n must be at least 2 (got {})", self.n_min)));
        }
        if self.b_min < 2 {
            return Err(CliError::Usage(format!("b must be at least 2 (got {})", self.b_min)));
        }
        if self.n_min > self.n_max {
            return Err(CliError::Usage(format!(
                "empty n range {}..={}",
                self.n_min, self.n_max
            )));
        }
        if self.b_min > self.b_max {
            return Err(CliError::Usage(format!(
                "empty b range {}..={}",
                self.b_min, self.b_max
            )));
        }
        let cells = (self.n_max - self.n_min + 1).checked_mul(self.b_max - self.b_min + 1);
        match cells {
            Some(c) if c <= MAX_CELLS => {}
            _ => {
                return Err(CliError::Usage(format!(
                    "grid exceeds {MAX_CELLS} cells"
                )))
            }
        }
        if self.mode == Mode::Exact && (self.n_max > MAX_EXACT_PARAM || self.b_max > MAX_EXACT_PARAM) {
            return Err(CliError::Usage(format!(
                "exact mode is limited to n, b <= {MAX_EXACT_PARAM}; use --mode float"
            )));
        }
        Ok(())
    }

    pub fn cells(&self) -> usize {
        ((self.n_max - self.n_min + 1) * (self.b_max - self.b_min + 1)) as usize
    }
}

/// One evaluated cell. `num`/`den` are the palindromic count and the space
/// size, unreduced; both are absent in float mode.
#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub n: u64,
    pub b: u64,
    pub num: Option<BigInt>,
    pub den: Option<BigInt>,
    pub pd: String,
}

/// Evaluates every cell, ordered by `n` then `b`.
pub fn compute(spec: &GridSpec) -> Vec<Cell> {
    let bs = spec.b_max - spec.b_min + 1;
    (0..spec.cells() as u64)
        .into_par_iter()
        .map(|i| {
            let n = spec.n_min + i / bs;
            let b = spec.b_min + i % bs;
            let p = SpaceParams::new(n, b).expect("validated grid");
            match spec.mode {
                Mode::Exact => {
                    Cell {
                        n,
                        b,
                        pd: format_ratio(&pd_exact(p)),
                        num: Some(palindromic_count(p).into()),
                        den: Some(space_size(p).into()),
                    }
                }
                Mode::Float => Cell {
                    n,
                    b,
                    num: None,
                    den: None,
                    pd: format_sig17(pd_product(p, ProductMode::Float).to_f64()),
                },
            }
        })
        .collect()
}

pub fn render(cells: &[Cell], format: Format) -> String {
    match format {
        Format::Csv => render_csv(cells),
        Format::Json => render_json(cells),
    }
}

fn opt_int(x: &Option<BigInt>) -> String {
    x.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

fn render_csv(cells: &[Cell]) -> String {
    let mut out = String::from("n,b,pd_num,pd_den,pd_float\n");
    for c in cells {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            c.n,
            c.b,
            opt_int(&c.num),
            opt_int(&c.den),
            c.pd
        );
    }
    out
}

fn json_int(x: &Option<BigInt>) -> String {
    match x {
        None => "null".to_string(),
        Some(v) => match v.to_u64() {
            Some(small) if small <= JSON_SAFE_INT => small.to_string(),
            _ => format!("\"{v}\""),
        },
    }
}

fn render_json(cells: &[Cell]) -> String {
    let mut out = String::from("[");
    for (i, c) in cells.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "\n  {{\"n\": {}, \"b\": {}, \"num\": {}, \"den\": {}, \"pd\": {}}}",
            c.n,
            c.b,
            json_int(&c.num),
            json_int(&c.den),
            c.pd
        );
    }
    out.push_str("\n]\n");
    out
}
