//! The six orders of {S, V, O}: scoring, Pareto fronts, and energies.
//!
//! Each order is scored on three objectives: word-level memory cost (lower
//! is better), head predictability, and dependent predictability (higher is
//! better).  [`pareto_front`] keeps the orders no other candidate strictly
//! dominates, and [`scalarized_energy`] collapses the objectives into a
//! single number so the dynamics module can run Metropolis chains over the
//! orders.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::cost::{memory_cost_constituents, memory_cost_words, CostFunction};
use crate::error::{Error, Result};
use crate::layout::{Constituent, ConstituentLayout, Linearization};
use crate::predictability;

/// Position of the verb within a three-constituent order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum VerbPosition {
    #[serde(rename = "initial")]
    Initial,
    #[serde(rename = "medial")]
    Medial,
    #[serde(rename = "final")]
    Final,
}

impl VerbPosition {
    pub fn label(&self) -> &'static str {
        match self {
            VerbPosition::Initial => "initial",
            VerbPosition::Medial => "medial",
            VerbPosition::Final => "final",
        }
    }
}

impl fmt::Display for VerbPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One of the six orders of subject, verb, and object.
///
/// Declaration order follows the transposition ring (each neighbor differs
/// by one swap of adjacent elements) and is the canonical iteration order
/// everywhere in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum WordOrder {
    #[serde(rename = "SOV")]
    Sov,
    #[serde(rename = "SVO")]
    Svo,
    #[serde(rename = "VSO")]
    Vso,
    #[serde(rename = "VOS")]
    Vos,
    #[serde(rename = "OVS")]
    Ovs,
    #[serde(rename = "OSV")]
    Osv,
}

impl WordOrder {
    pub const ALL: [WordOrder; 6] = [
        WordOrder::Sov,
        WordOrder::Svo,
        WordOrder::Vso,
        WordOrder::Vos,
        WordOrder::Ovs,
        WordOrder::Osv,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            WordOrder::Sov => "SOV",
            WordOrder::Svo => "SVO",
            WordOrder::Vso => "VSO",
            WordOrder::Vos => "VOS",
            WordOrder::Ovs => "OVS",
            WordOrder::Osv => "OSV",
        }
    }

    pub fn from_token(token: &str) -> Result<Self> {
        WordOrder::ALL
            .into_iter()
            .find(|order| order.token() == token)
            .ok_or_else(|| Error::domain(format!("unknown order token {token:?}")))
    }

    /// 1-based position of the verb in the order.
    pub fn verb_rank(&self) -> usize {
        self.token().find('V').expect("every order names the verb") + 1
    }

    pub fn verb_position(&self) -> VerbPosition {
        match self.verb_rank() {
            1 => VerbPosition::Initial,
            2 => VerbPosition::Medial,
            _ => VerbPosition::Final,
        }
    }

    /// Arrangement of the role-indexed constituents (S = 0, V = 1, O = 2).
    pub fn linearization(&self) -> Linearization {
        let order = self
            .token()
            .chars()
            .map(|role| match role {
                'S' => 0,
                'V' => 1,
                _ => 2,
            })
            .collect();
        Linearization::new(order).expect("role tokens are permutations")
    }
}

impl fmt::Display for WordOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for WordOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WordOrder::from_token(s)
    }
}

/// A dominant order: one of the six orders, or none at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DominantOrder {
    Order(WordOrder),
    None,
}

impl DominantOrder {
    pub fn token(&self) -> &'static str {
        match self {
            DominantOrder::Order(order) => order.token(),
            DominantOrder::None => "NONE",
        }
    }

    pub fn from_token(token: &str) -> Result<Self> {
        if token == "NONE" {
            Ok(DominantOrder::None)
        } else {
            WordOrder::from_token(token).map(DominantOrder::Order)
        }
    }
}

impl fmt::Display for DominantOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for DominantOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DominantOrder::from_token(s)
    }
}

impl serde::Serialize for DominantOrder {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.token())
    }
}

/// Role-indexed layout for the six orders: subject, verb, object, with the
/// verb as root.  Head words sit at the start of their constituents.
pub fn svo_layout(subject_words: usize, verb_words: usize, object_words: usize) -> Result<ConstituentLayout> {
    ConstituentLayout::new(
        vec![
            Constituent::with_size(subject_words)?,
            Constituent::with_size(verb_words)?,
            Constituent::with_size(object_words)?,
        ],
        1,
    )
}

/// Objective scores for one order within a candidate set.
///
/// `memory_normalized` rescales memory to `[0, 1]` by min-max over the
/// candidate set (all-equal memories map to 0).  `memory_scaled` is the
/// excess over the cheapest candidate in units of the single-word head-last
/// cost, so differences survive across layouts of different sizes; the
/// energy uses this term.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ObjectiveScores {
    pub memory: f64,
    pub memory_normalized: f64,
    pub memory_scaled: f64,
    pub head_pred: f64,
    pub dep_pred: f64,
}

/// An order together with its scores.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ScoredOrder {
    pub order: WordOrder,
    pub scores: ObjectiveScores,
}

/// Weights for the scalarized energy: `lambda` trades memory against
/// predictability, `mu` trades head against dependent predictability.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct EnergyParams {
    lambda: f64,
    mu: f64,
}

impl EnergyParams {
    pub fn new(lambda: f64, mu: f64) -> Result<Self> {
        for (name, value) in [("lambda", lambda), ("mu", mu)] {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(Error::domain(format!("{name} must lie in [0, 1], got {value}")));
            }
        }
        Ok(EnergyParams { lambda, mu })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }
}

fn check_labeled_layout(layout: &ConstituentLayout) -> Result<()> {
    if layout.len() != 3 || layout.root_index() != 1 {
        return Err(Error::domain(
            "labeled orders need a three-constituent layout with the verb as root",
        ));
    }
    Ok(())
}

/// Scores each candidate order on the shared layout, normalizing memory
/// within the candidate set.
pub fn score_orders(
    candidates: &[WordOrder],
    layout: &ConstituentLayout,
    g: &CostFunction,
) -> Result<Vec<ScoredOrder>> {
    check_labeled_layout(layout)?;
    if candidates.is_empty() {
        return Ok(Vec::new());
    }
    let n = layout.dependent_count();
    let mut raw = Vec::with_capacity(candidates.len());
    for &order in candidates {
        let lin = order.linearization();
        let memory = memory_cost_words(layout, &lin, g)?;
        let l = order.verb_rank();
        raw.push((order, memory, predictability::scores(n, l)?));
    }
    let min = raw.iter().map(|&(_, m, _)| m).fold(f64::INFINITY, f64::min);
    let max = raw.iter().map(|&(_, m, _)| m).fold(f64::NEG_INFINITY, f64::max);
    let range = max - min;
    let reference = memory_cost_constituents(n, n + 1, g)?;
    Ok(raw
        .into_iter()
        .map(|(order, memory, pred)| ScoredOrder {
            order,
            scores: ObjectiveScores {
                memory,
                memory_normalized: if range > 0.0 { (memory - min) / range } else { 0.0 },
                memory_scaled: (memory - min) / reference,
                head_pred: pred.head_score,
                dep_pred: pred.dependent_score,
            },
        })
        .collect())
}

/// Scores a single order (normalization degenerates to 0).
pub fn score_order(
    order: WordOrder,
    layout: &ConstituentLayout,
    g: &CostFunction,
) -> Result<ObjectiveScores> {
    Ok(score_orders(&[order], layout, g)?[0].scores)
}

/// True when `a` is at least as good as `b` on every objective and strictly
/// better on at least one (memory minimized, predictabilities maximized).
pub fn dominates(a: &ObjectiveScores, b: &ObjectiveScores) -> bool {
    let no_worse = a.memory <= b.memory && a.head_pred >= b.head_pred && a.dep_pred >= b.dep_pred;
    let better = a.memory < b.memory || a.head_pred > b.head_pred || a.dep_pred > b.dep_pred;
    no_worse && better
}

/// Front-membership flag for each scored candidate: true unless some other
/// candidate strictly dominates it.  Exact ties survive, so mirror-image
/// orders never eliminate each other.
pub fn front_flags(scored: &[ScoredOrder]) -> Vec<bool> {
    scored
        .iter()
        .map(|candidate| !scored.iter().any(|other| dominates(&other.scores, &candidate.scores)))
        .collect()
}

/// The candidates no other candidate strictly dominates.
pub fn pareto_front(
    candidates: &[WordOrder],
    layout: &ConstituentLayout,
    g: &CostFunction,
) -> Result<Vec<WordOrder>> {
    let scored = score_orders(candidates, layout, g)?;
    let flags = front_flags(&scored);
    Ok(scored
        .iter()
        .zip(flags)
        .filter_map(|(entry, keep)| keep.then_some(entry.order))
        .collect())
}

/// Collapses the objectives into one energy; lower is better.
///
/// `lambda` weights the memory excess, `1 - lambda` the predictability blend
/// `mu * head_pred + (1 - mu) * dep_pred`, which enters negatively.
pub fn scalarized_energy(scores: &ObjectiveScores, params: &EnergyParams) -> f64 {
    let predictability = params.mu() * scores.head_pred + (1.0 - params.mu()) * scores.dep_pred;
    params.lambda() * scores.memory_scaled - (1.0 - params.lambda()) * predictability
}

/// Scalarized energy of all six orders on the given layout.
pub fn energy_landscape(
    layout: &ConstituentLayout,
    g: &CostFunction,
    params: &EnergyParams,
) -> Result<BTreeMap<WordOrder, f64>> {
    let scored = score_orders(&WordOrder::ALL, layout, g)?;
    Ok(scored
        .into_iter()
        .map(|entry| (entry.order, scalarized_energy(&entry.scores, params)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atomic() -> ConstituentLayout {
        svo_layout(1, 1, 1).unwrap()
    }

    #[test]
    fn six_distinct_orders_with_balanced_verb_positions() {
        let mut tokens: Vec<&str> = WordOrder::ALL.iter().map(|o| o.token()).collect();
        tokens.sort_unstable();
        tokens.dedup();
        assert_eq!(tokens.len(), 6);
        for position in [VerbPosition::Initial, VerbPosition::Medial, VerbPosition::Final] {
            let count = WordOrder::ALL.iter().filter(|o| o.verb_position() == position).count();
            assert_eq!(count, 2, "expected two verb-{position} orders");
        }
    }

    #[test]
    fn tokens_round_trip() {
        for order in WordOrder::ALL {
            assert_eq!(WordOrder::from_token(order.token()).unwrap(), order);
        }
        assert!(WordOrder::from_token("SVV").is_err());
        assert_eq!(DominantOrder::from_token("NONE").unwrap(), DominantOrder::None);
        assert!(DominantOrder::from_token("none").is_err());
    }

    #[test]
    fn atomic_scores_match_hand_computation() {
        let g = CostFunction::linear(2);
        let svo = score_order(WordOrder::Svo, &atomic(), &g).unwrap();
        assert_eq!(svo.memory, 2.0);
        assert_eq!(svo.head_pred, 0.5);
        assert_eq!(svo.dep_pred, 0.5);
        let sov = score_order(WordOrder::Sov, &atomic(), &g).unwrap();
        assert_eq!(sov.memory, 3.0);
        assert_eq!(sov.head_pred, 1.0);
        assert_eq!(sov.dep_pred, 0.0);
        let vso = score_order(WordOrder::Vso, &atomic(), &g).unwrap();
        assert_eq!(vso.memory, 3.0);
        assert_eq!(vso.head_pred, 0.0);
        assert_eq!(vso.dep_pred, 1.0);
    }

    #[test]
    fn normalization_is_relative_to_the_candidate_set() {
        let g = CostFunction::linear(2);
        let scored = score_orders(&WordOrder::ALL, &atomic(), &g).unwrap();
        for entry in &scored {
            let expected = match entry.order.verb_position() {
                VerbPosition::Medial => 0.0,
                _ => 1.0,
            };
            assert_eq!(entry.scores.memory_normalized, expected, "{}", entry.order);
        }
        // A singleton candidate set has no spread to normalize against.
        let solo = score_order(WordOrder::Sov, &atomic(), &g).unwrap();
        assert_eq!(solo.memory_normalized, 0.0);
        assert_eq!(solo.memory_scaled, 0.0);
    }

    #[test]
    fn atomic_front_keeps_all_six() {
        let g = CostFunction::linear(2);
        let front = pareto_front(&WordOrder::ALL, &atomic(), &g).unwrap();
        assert_eq!(front.len(), 6);
    }

    #[test]
    fn heavy_subject_prunes_dominated_orders() {
        let g = CostFunction::power(2.0, 3).unwrap();
        let layout = svo_layout(2, 1, 1).unwrap();
        let front = pareto_front(&WordOrder::ALL, &layout, &g).unwrap();
        assert_eq!(front, vec![WordOrder::Sov, WordOrder::Vos, WordOrder::Ovs]);
    }

    #[test]
    fn pure_memory_weighting_zeroes_the_cheapest_orders() {
        let g = CostFunction::linear(2);
        let params = EnergyParams::new(1.0, 0.3).unwrap();
        let landscape = energy_landscape(&atomic(), &g, &params).unwrap();
        assert_eq!(landscape[&WordOrder::Svo], 0.0);
        assert_eq!(landscape[&WordOrder::Ovs], 0.0);
        for order in [WordOrder::Sov, WordOrder::Vso, WordOrder::Vos, WordOrder::Osv] {
            assert!(landscape[&order] > 0.0, "{order} should cost more than the medial orders");
        }
    }

    #[test]
    fn pure_head_weighting_rewards_late_verbs() {
        let g = CostFunction::linear(2);
        let params = EnergyParams::new(0.0, 1.0).unwrap();
        let landscape = energy_landscape(&atomic(), &g, &params).unwrap();
        assert_eq!(landscape[&WordOrder::Sov], -1.0);
        assert_eq!(landscape[&WordOrder::Osv], -1.0);
        let minimum = landscape.values().cloned().fold(f64::INFINITY, f64::min);
        assert_eq!(minimum, -1.0);
    }

    #[test]
    fn mirror_orders_share_energies_on_symmetric_layouts() {
        let g = CostFunction::linear(4);
        let layout = svo_layout(2, 1, 2).unwrap();
        let params = EnergyParams::new(0.7, 0.4).unwrap();
        let landscape = energy_landscape(&layout, &g, &params).unwrap();
        assert_eq!(landscape[&WordOrder::Sov], landscape[&WordOrder::Osv]);
        assert_eq!(landscape[&WordOrder::Svo], landscape[&WordOrder::Ovs]);
        assert_eq!(landscape[&WordOrder::Vso], landscape[&WordOrder::Vos]);
    }

    #[test]
    fn predictability_only_landscape_is_flat_at_even_blend() {
        let g = CostFunction::linear(2);
        let params = EnergyParams::new(0.0, 0.5).unwrap();
        let landscape = energy_landscape(&atomic(), &g, &params).unwrap();
        for (&order, &energy) in &landscape {
            assert_eq!(energy, -0.5, "{order} deviates from the flat landscape");
        }
    }

    #[test]
    fn params_outside_unit_interval_are_rejected() {
        assert!(EnergyParams::new(-0.1, 0.5).is_err());
        assert!(EnergyParams::new(0.5, 1.5).is_err());
        assert!(EnergyParams::new(f64::NAN, 0.5).is_err());
    }

    #[test]
    fn layouts_without_a_verb_root_are_rejected() {
        let g = CostFunction::linear(4);
        let wrong_root = ConstituentLayout::atomic(2, 0).unwrap();
        assert!(score_orders(&WordOrder::ALL, &wrong_root, &g).is_err());
        let too_many = ConstituentLayout::atomic(3, 1).unwrap();
        assert!(score_orders(&WordOrder::ALL, &too_many, &g).is_err());
    }
}
