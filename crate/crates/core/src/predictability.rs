//! Predictability of the head and of its dependents.
//!
//! Once some dependents have been heard, the head becomes easier to guess;
//! once the head has been heard, the remaining dependents do.  With the head
//! at position `l` among `n + 1` constituents, the fraction of dependents
//! preceding the head measures head predictability and the fraction
//! following it measures dependent predictability.

use crate::error::{Error, Result};

/// Head and dependent predictability for one head placement.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PredictabilityScores {
    pub head_score: f64,
    pub dependent_score: f64,
}

fn check_range(n: usize, l: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("at least one dependent is required"));
    }
    if l == 0 || l > n + 1 {
        return Err(Error::domain(format!(
            "head position {l} outside 1..={} for {n} dependents",
            n + 1
        )));
    }
    Ok(())
}

/// Fraction of the `n` dependents heard before the head: `(l - 1) / n`.
pub fn head_predictability(n: usize, l: usize) -> Result<f64> {
    check_range(n, l)?;
    Ok((l - 1) as f64 / n as f64)
}

/// Fraction of the `n` dependents heard after the head: `(n + 1 - l) / n`.
pub fn dependent_predictability(n: usize, l: usize) -> Result<f64> {
    check_range(n, l)?;
    Ok((n + 1 - l) as f64 / n as f64)
}

/// Both predictability scores for one head placement.
pub fn scores(n: usize, l: usize) -> Result<PredictabilityScores> {
    Ok(PredictabilityScores {
        head_score: head_predictability(n, l)?,
        dependent_score: dependent_predictability(n, l)?,
    })
}
