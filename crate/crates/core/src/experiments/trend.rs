use serde::Serialize;

use super::sweep::SweepResult;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrendStatistics {
    /// Spearman correlation between the parameter and `mean_log10_kappa`.
    pub spearman_rho: f64,
    /// Grid value with the largest `mean_log10_kappa`.
    pub argmax_parameter: f64,
    /// True when the slope over the last quarter of the defined points is
    /// below 10% (in magnitude) of the slope over the first quarter.
    pub saturation_flag: bool,
}

/// Ranks starting at 1; ties get the mean of the ranks they span.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && values[idx[j + 1]] == values[idx[i]] {
            j += 1;
        }
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = rank;
        }
        i = j + 1;
    }
    ranks
}

fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx).powi(2);
        syy += (b - my).powi(2);
    }
    if sxx == 0.0 || syy == 0.0 {
        return 0.0;
    }
    (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0)
}

/// Spearman rank correlation (Pearson correlation of average ranks).
/// Returns 0 when either side is constant.
pub fn spearman(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len(), "spearman needs paired samples");
    pearson(&average_ranks(x), &average_ranks(y))
}

fn slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

/// Trend summary over the grid points whose `mean_log10_kappa` is defined.
pub fn trend_statistics(result: &SweepResult) -> Result<TrendStatistics> {
    let mut pts: Vec<(f64, f64)> = result
        .points
        .iter()
        .filter_map(|a| a.mean_log10_kappa.map(|m| (a.parameter_value, m)))
        .collect();
    if pts.len() < 3 {
        return Err(Error::TooFewPoints(pts.len()));
    }
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    let x: Vec<f64> = pts.iter().map(|p| p.0).collect();
    let y: Vec<f64> = pts.iter().map(|p| p.1).collect();
    let argmax = pts
        .iter()
        .fold(pts[0], |best, &p| if p.1 > best.1 { p } else { best })
        .0;
    let q = pts.len().div_ceil(4).max(2);
    let first = slope(&pts[..q]);
    let last = slope(&pts[pts.len() - q..]);
    Ok(TrendStatistics {
        spearman_rho: spearman(&x, &y),
        argmax_parameter: argmax,
        saturation_flag: last.abs() < 0.1 * first.abs(),
    })
}
