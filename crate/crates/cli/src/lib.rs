//! File format and argument parsing for the `appbas` command line tool.

pub mod format;

use anyhow::{bail, Result};

pub use format::{parse, serialize, Document};

/// Shift from `uniform`, `hermite` or a comma separated list of integers.
/// `hermite` is `(sigma, 2 sigma, ..., m sigma)`.
pub fn parse_shift(spec: &str, m: usize, sigma: usize) -> Result<Vec<i64>> {
    match spec {
        "uniform" => Ok(vec![0; m]),
        "hermite" => Ok((1..=m as i64).map(|i| i * sigma as i64).collect()),
        _ => {
            let s = spec
                .split(',')
                .map(|w| w.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>();
            match s {
                Ok(s) if s.len() == m => Ok(s),
                Ok(s) => bail!("shift has {} entries, the instance has {m} rows", s.len()),
                Err(_) => bail!("shift must be `uniform`, `hermite` or comma separated integers, got `{spec}`"),
            }
        }
    }
}

/// Orders from a comma separated list, or a single value for every column.
pub fn parse_orders(spec: &str, n: usize) -> Result<Vec<usize>> {
    let d = spec
        .split(',')
        .map(|w| w.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>();
    match d {
        Ok(d) if d.len() == 1 => Ok(vec![d[0]; n]),
        Ok(d) if d.len() == n => Ok(d),
        Ok(d) => bail!("{} orders given for {n} columns", d.len()),
        Err(_) => bail!("malformed orders `{spec}`, expected comma separated integers"),
    }
}

/// `lo:hi`, the powers of two times `lo` up to `hi`.
pub fn parse_sizes(spec: &str) -> Result<Vec<usize>> {
    let Some((lo, hi)) = spec.split_once(':') else {
        bail!("sizes must look like `8:64`, got `{spec}`");
    };
    let (Ok(lo), Ok(hi)) = (lo.trim().parse::<usize>(), hi.trim().parse::<usize>()) else {
        bail!("sizes must look like `8:64`, got `{spec}`");
    };
    if lo == 0 || lo > hi {
        bail!("sizes need 0 < lo <= hi, got `{spec}`");
    }
    Ok(std::iter::successors(Some(lo), |&x| Some(2 * x)).take_while(|&x| x <= hi).collect())
}
