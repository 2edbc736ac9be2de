//! Online memory cost of a head placement.
//!
//! With the head at position `l` among `n + 1` constituents, each dependent
//! at distance `d` contributes `g(d)` to the cost of keeping the pending
//! dependency in memory:
//!
//! ```text
//! cost(n, l) = g(1) + ... + g(l - 1)            (dependents before the head)
//!            + g(1) + ... + g(n + 1 - l)        (dependents after the head)
//! ```
//!
//! The word-level variant replaces constituent distances with distances
//! between head words, so multi-word constituents stretch every dependency
//! that spans them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::layout::{ConstituentLayout, Linearization};

/// Shape of the per-dependency cost function `g`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CostKind {
    /// `g(d) = d`.
    Linear,
    /// `g(d) = d^exponent` with `exponent > 0`.
    Power { exponent: f64 },
    /// `g(d) = ln(1 + d)`.
    Logarithmic,
    /// `g(d) = value` regardless of `d`.  Deliberately violates strict
    /// monotonicity; exists so the validators have something to catch.
    Constant { value: f64 },
}

/// A per-dependency cost function with an explicit evaluation domain
/// `1..=domain_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostFunction {
    kind: CostKind,
    domain_max: usize,
}

impl CostFunction {
    pub fn linear(domain_max: usize) -> Self {
        CostFunction { kind: CostKind::Linear, domain_max }
    }

    pub fn power(exponent: f64, domain_max: usize) -> Result<Self> {
        if !exponent.is_finite() || exponent <= 0.0 {
            return Err(Error::domain(format!(
                "power cost exponent must be positive and finite, got {exponent}"
            )));
        }
        Ok(CostFunction { kind: CostKind::Power { exponent }, domain_max })
    }

    pub fn logarithmic(domain_max: usize) -> Self {
        CostFunction { kind: CostKind::Logarithmic, domain_max }
    }

    /// Constant stub for exercising the monotonicity validators.
    pub fn constant(value: f64, domain_max: usize) -> Self {
        CostFunction { kind: CostKind::Constant { value }, domain_max }
    }

    pub fn kind(&self) -> CostKind {
        self.kind
    }

    pub fn domain_max(&self) -> usize {
        self.domain_max
    }

    /// Label used in tabular output.
    pub fn kind_label(&self) -> &'static str {
        match self.kind {
            CostKind::Linear => "linear",
            CostKind::Power { .. } => "power",
            CostKind::Logarithmic => "logarithmic",
            CostKind::Constant { .. } => "constant",
        }
    }

    /// Evaluates `g(d)`.  Distances start at 1; anything past `domain_max`
    /// is out of the declared domain.
    pub fn evaluate(&self, d: usize) -> Result<f64> {
        if d == 0 {
            return Err(Error::domain("dependency distance must be at least 1"));
        }
        if d > self.domain_max {
            return Err(Error::domain(format!(
                "distance {d} outside the cost function domain 1..={}",
                self.domain_max
            )));
        }
        Ok(match self.kind {
            CostKind::Linear => d as f64,
            CostKind::Power { exponent } => (d as f64).powf(exponent),
            CostKind::Logarithmic => (1.0 + d as f64).ln(),
            CostKind::Constant { value } => value,
        })
    }

    /// True iff `g(d + 1) > g(d)` across the whole declared domain.
    pub fn is_strictly_increasing(&self) -> bool {
        (1..self.domain_max).all(|d| match (self.evaluate(d), self.evaluate(d + 1)) {
            (Ok(lo), Ok(hi)) => hi > lo,
            _ => false,
        })
    }
}

/// Checks that `g` is strictly increasing over its declared domain.
pub fn validate_cost_function(g: &CostFunction) -> bool {
    g.is_strictly_increasing()
}

/// Memory cost of placing the head at position `l` among `n + 1` single-word
/// constituents.
///
/// `l` is 1-based and must lie in `1..=n + 1`.  Each side of the head
/// contributes `g(1) + ... + g(k)` for its `k` dependents; an empty side
/// contributes nothing.
pub fn memory_cost_constituents(n: usize, l: usize, g: &CostFunction) -> Result<f64> {
    if l == 0 || l > n + 1 {
        return Err(Error::domain(format!(
            "head position {l} outside 1..={} for {n} dependents",
            n + 1
        )));
    }
    // Summing each span separately keeps mirror positions bit-identical:
    // swapping l with n + 2 - l swaps the two partial sums, and two-operand
    // addition commutes exactly.
    let mut before = 0.0;
    for d in 1..l {
        before += g.evaluate(d)?;
    }
    let mut after = 0.0;
    for d in 1..=(n + 1 - l) {
        after += g.evaluate(d)?;
    }
    Ok(before + after)
}

/// Head positions minimizing the memory cost: the center of the sequence,
/// one position when `n` is even and the two middle positions when `n` is
/// odd.
pub fn optimal_head_positions(n: usize) -> Result<BTreeSet<usize>> {
    if n == 0 {
        return Err(Error::domain("at least one dependent is required"));
    }
    Ok(BTreeSet::from([(n + 2) / 2, (n + 3) / 2]))
}

/// Word-level memory cost of a linearization: sum of `g` over the distances
/// between each dependent's head word and the root's head word.
pub fn memory_cost_words(
    layout: &ConstituentLayout,
    lin: &Linearization,
    g: &CostFunction,
) -> Result<f64> {
    let positions = lin.head_word_positions(layout)?;
    let root_position = positions[layout.root_index()];
    let mut total = 0.0;
    for (index, &position) in positions.iter().enumerate() {
        if index == layout.root_index() {
            continue;
        }
        total += g.evaluate(position.abs_diff(root_position))?;
    }
    Ok(total)
}

/// Pairwise distances between head words, indexed by constituent index.
///
/// The matrix is symmetric with a zero diagonal, and every entry dominates
/// the rank distance: `d[i][j] >= |rank(i) - rank(j)|`.
pub fn word_distance_matrix(
    layout: &ConstituentLayout,
    lin: &Linearization,
) -> Result<Vec<Vec<usize>>> {
    let positions = lin.head_word_positions(layout)?;
    let k = positions.len();
    let mut matrix = vec![vec![0usize; k]; k];
    for i in 0..k {
        for j in 0..k {
            matrix[i][j] = positions[i].abs_diff(positions[j]);
        }
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::Constituent;

    fn bundled(domain_max: usize) -> Vec<CostFunction> {
        vec![
            CostFunction::linear(domain_max),
            CostFunction::power(0.5, domain_max).unwrap(),
            CostFunction::power(1.0, domain_max).unwrap(),
            CostFunction::power(2.0, domain_max).unwrap(),
            CostFunction::power(3.0, domain_max).unwrap(),
            CostFunction::logarithmic(domain_max),
        ]
    }

    #[test]
    fn evaluate_matches_closed_forms() {
        let linear = CostFunction::linear(10);
        assert_eq!(linear.evaluate(4).unwrap(), 4.0);
        let square = CostFunction::power(2.0, 10).unwrap();
        assert_eq!(square.evaluate(3).unwrap(), 9.0);
        let log = CostFunction::logarithmic(10);
        assert!((log.evaluate(1).unwrap() - 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn evaluate_rejects_out_of_domain_distances() {
        let g = CostFunction::linear(3);
        assert!(g.evaluate(0).is_err());
        assert!(g.evaluate(4).is_err());
        assert!(g.evaluate(3).is_ok());
    }

    #[test]
    fn power_requires_positive_exponent() {
        assert!(CostFunction::power(0.0, 5).is_err());
        assert!(CostFunction::power(-1.0, 5).is_err());
        assert!(CostFunction::power(f64::NAN, 5).is_err());
    }

    #[test]
    fn bundled_functions_are_strictly_increasing() {
        for g in bundled(12) {
            assert!(validate_cost_function(&g), "{} should be increasing", g.kind_label());
        }
    }

    #[test]
    fn constant_stub_fails_validation() {
        assert!(!validate_cost_function(&CostFunction::constant(1.0, 12)));
    }

    #[test]
    fn cost_table_for_two_dependents() {
        let g = CostFunction::linear(2);
        assert_eq!(memory_cost_constituents(2, 1, &g).unwrap(), 3.0);
        assert_eq!(memory_cost_constituents(2, 2, &g).unwrap(), 2.0);
        assert_eq!(memory_cost_constituents(2, 3, &g).unwrap(), 3.0);
    }

    #[test]
    fn cost_with_square_distances() {
        // n = 4, head central: two dependents on each side, 2 * (1 + 4).
        let g = CostFunction::power(2.0, 4).unwrap();
        assert_eq!(memory_cost_constituents(4, 3, &g).unwrap(), 10.0);
    }

    #[test]
    fn single_dependent_costs_the_same_on_either_side() {
        let g = CostFunction::linear(1);
        assert_eq!(memory_cost_constituents(1, 1, &g).unwrap(), 1.0);
        assert_eq!(memory_cost_constituents(1, 2, &g).unwrap(), 1.0);
    }

    #[test]
    fn head_position_out_of_range_is_rejected() {
        let g = CostFunction::linear(8);
        assert!(memory_cost_constituents(2, 0, &g).is_err());
        assert!(memory_cost_constituents(2, 4, &g).is_err());
    }

    #[test]
    fn undersized_domain_is_reported() {
        let g = CostFunction::linear(1);
        assert!(memory_cost_constituents(2, 1, &g).is_err());
    }

    #[test]
    fn cost_is_mirror_symmetric() {
        for n in 1..=12 {
            for g in bundled(n) {
                for l in 1..=(n + 1) {
                    let left = memory_cost_constituents(n, l, &g).unwrap();
                    let right = memory_cost_constituents(n, n + 2 - l, &g).unwrap();
                    assert_eq!(left, right, "asymmetry at n={n} l={l} for {}", g.kind_label());
                }
            }
        }
    }

    #[test]
    fn optimal_positions_sit_at_the_center() {
        assert_eq!(optimal_head_positions(1).unwrap(), BTreeSet::from([1, 2]));
        assert_eq!(optimal_head_positions(2).unwrap(), BTreeSet::from([2]));
        assert_eq!(optimal_head_positions(4).unwrap(), BTreeSet::from([3]));
        assert_eq!(optimal_head_positions(5).unwrap(), BTreeSet::from([3, 4]));
        assert!(optimal_head_positions(0).is_err());
    }

    #[test]
    fn word_cost_counts_head_word_distances() {
        // S spans 3 words; order S V O puts the verb 3 words from S's head
        // and 1 word from O's.
        let layout = ConstituentLayout::new(
            vec![
                Constituent::with_size(3).unwrap(),
                Constituent::atomic(),
                Constituent::atomic(),
            ],
            1,
        )
        .unwrap();
        let lin = Linearization::identity(3).unwrap();
        let g = CostFunction::linear(4);
        assert_eq!(memory_cost_words(&layout, &lin, &g).unwrap(), 4.0);
    }

    #[test]
    fn atomic_word_cost_reduces_to_constituent_cost() {
        let g = CostFunction::linear(5);
        let layout = ConstituentLayout::atomic(3, 2).unwrap();
        for order in [[0, 1, 2, 3], [3, 2, 1, 0], [1, 3, 0, 2]] {
            let lin = Linearization::new(order.to_vec()).unwrap();
            let l = lin.head_position(&layout).unwrap();
            let by_words = memory_cost_words(&layout, &lin, &g).unwrap();
            let by_constituents = memory_cost_constituents(3, l, &g).unwrap();
            assert_eq!(by_words, by_constituents, "mismatch for order {order:?}");
        }
    }

    #[test]
    fn distance_matrix_is_symmetric_and_dominates_rank_distance() {
        let layout = ConstituentLayout::new(
            vec![
                Constituent::new(3, 1).unwrap(),
                Constituent::atomic(),
                Constituent::with_size(2).unwrap(),
            ],
            1,
        )
        .unwrap();
        let lin = Linearization::new(vec![2, 0, 1]).unwrap();
        let matrix = word_distance_matrix(&layout, &lin).unwrap();
        for i in 0..3 {
            assert_eq!(matrix[i][i], 0);
            for j in 0..3 {
                assert_eq!(matrix[i][j], matrix[j][i]);
                let rank_gap = lin.rank(i).unwrap().abs_diff(lin.rank(j).unwrap());
                assert!(matrix[i][j] >= rank_gap, "entry ({i},{j}) below rank distance");
            }
        }
    }
}
