//! Dimension estimates from point counts by least-squares slope fitting.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimensionFit {
    /// Least-squares slope of `ln N` against `ln q`.
    pub slope: f64,
    /// Rounded slope; `None` when some count is zero.
    pub dim: Option<i64>,
    /// Root-mean-square residual of the fit in `ln N`.
    pub residual: f64,
    /// Every subset of at least two primes rounds to the same dimension.
    pub stable: bool,
    /// Rounded slopes over all subsets of at least two primes.
    pub subset_dims: Vec<i64>,
    /// `N(q) / q^dim` per prime.
    pub leading_constants: Vec<f64>,
}

/// Least-squares slope and intercept of `ys` against `xs`.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = if sxx == 0.0 { 0.0 } else { sxy / sxx };
    (slope, my - slope * mx)
}

/// Fits `N(q) ~ c q^dim`. Needs at least two distinct primes.
pub fn fit_dimension(qs: &[u64], counts: &[u128]) -> DimensionFit {
    assert_eq!(qs.len(), counts.len());
    if counts.contains(&0) || qs.len() < 2 {
        return DimensionFit {
            slope: f64::NAN,
            dim: None,
            residual: f64::NAN,
            stable: counts.iter().all(|&c| c == 0),
            subset_dims: Vec::new(),
            leading_constants: Vec::new(),
        };
    }
    let xs: Vec<f64> = qs.iter().map(|&q| (q as f64).ln()).collect();
    let ys: Vec<f64> = counts.iter().map(|&c| (c as f64).ln()).collect();
    let (slope, icpt) = least_squares(&xs, &ys);
    let residual = (xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - slope * x - icpt).powi(2))
        .sum::<f64>()
        / xs.len() as f64)
        .sqrt();
    let dim = slope.round() as i64;
    let mut subset_dims = Vec::new();
    let k = qs.len();
    for mask in 1u32..(1 << k) {
        if mask.count_ones() < 2 {
            continue;
        }
        let (sx, sy): (Vec<f64>, Vec<f64>) = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (xs[i], ys[i]))
            .unzip();
        subset_dims.push(least_squares(&sx, &sy).0.round() as i64);
    }
    let stable = subset_dims.iter().all(|&d| d == dim);
    let leading_constants = qs
        .iter()
        .zip(counts)
        .map(|(&q, &c)| c as f64 / (q as f64).powi(dim as i32))
        .collect();
    DimensionFit {
        slope,
        dim: Some(dim),
        residual,
        stable,
        subset_dims,
        leading_constants,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_powers() {
        let qs = [3, 5, 7];
        let counts: Vec<u128> = qs.iter().map(|&q| (q as u128).pow(3)).collect();
        let fit = fit_dimension(&qs, &counts);
        assert_eq!(fit.dim, Some(3));
        assert!(fit.residual < 1e-9 && fit.stable);
        assert!(fit.leading_constants.iter().all(|c| (c - 1.0).abs() < 1e-12));
    }

    #[test]
    fn leading_constant_two() {
        let qs = [5, 7, 11];
        let counts: Vec<u128> = qs.iter().map(|&q| 2 * (q as u128).pow(2) - 1).collect();
        let fit = fit_dimension(&qs, &counts);
        assert_eq!(fit.dim, Some(2));
        assert!(fit.leading_constants.iter().all(|c| (c - 2.0).abs() < 0.05));
    }
}
