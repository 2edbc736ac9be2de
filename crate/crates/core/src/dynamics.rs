//! Metropolis dynamics on the ring of {S, V, O} orders.
//!
//! Swapping two adjacent elements of an order string yields exactly two
//! neighbors per order, and the six orders form a single cycle:
//! SOV - SVO - VSO - VOS - OVS - OSV - SOV.  A [`ChainSpec`] attaches an
//! energy to each node; the chain proposes each ring neighbor with
//! probability 1/2 and accepts with the Metropolis rule
//! `min(1, exp(-beta * (E(v) - E(u))))`, which leaves the Boltzmann
//! distribution stationary.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::layout::ConstituentLayout;
use crate::ordering::{energy_landscape, DominantOrder, EnergyParams, WordOrder};

/// Row-stochastic transition matrix indexed by the canonical order of
/// [`WordOrder::ALL`].
pub type TransitionMatrix = [[f64; 6]; 6];

const NODES: usize = 6;

/// The cycle of six orders under adjacent transpositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingGraph {
    neighbors: [[WordOrder; 2]; NODES],
}

/// Derives the ring by swapping adjacent elements of each order string.
pub fn build_ring() -> RingGraph {
    let neighbors = WordOrder::ALL.map(|order| {
        let swap = |a: usize, b: usize| {
            let mut chars: Vec<char> = order.token().chars().collect();
            chars.swap(a, b);
            let token: String = chars.into_iter().collect();
            WordOrder::from_token(&token).expect("a transposition of a valid order is valid")
        };
        [swap(0, 1), swap(1, 2)]
    });
    RingGraph { neighbors }
}

impl RingGraph {
    pub fn nodes(&self) -> [WordOrder; NODES] {
        WordOrder::ALL
    }

    /// Canonical index of an order (its position in [`WordOrder::ALL`]).
    pub fn index(&self, order: WordOrder) -> usize {
        WordOrder::ALL.iter().position(|&o| o == order).expect("all orders are nodes")
    }

    /// The two orders one adjacent transposition away.
    pub fn neighbors(&self, order: WordOrder) -> [WordOrder; 2] {
        self.neighbors[self.index(order)]
    }

    /// Longest shortest path between any two nodes.
    pub fn diameter(&self) -> usize {
        let mut diameter = 0;
        for start in WordOrder::ALL {
            let mut distance = [usize::MAX; NODES];
            distance[self.index(start)] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(node) = queue.pop_front() {
                for next in self.neighbors(node) {
                    if distance[self.index(next)] == usize::MAX {
                        distance[self.index(next)] = distance[self.index(node)] + 1;
                        queue.push_back(next);
                    }
                }
            }
            diameter = diameter.max(*distance.iter().max().unwrap());
        }
        diameter
    }
}

/// Energy landscape, inverse temperature, and the weights that produced the
/// landscape.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSpec {
    energy: BTreeMap<WordOrder, f64>,
    beta: f64,
    params: EnergyParams,
}

impl ChainSpec {
    pub fn new(energy: BTreeMap<WordOrder, f64>, beta: f64, params: EnergyParams) -> Result<Self> {
        if !beta.is_finite() || beta < 0.0 {
            return Err(Error::domain(format!("beta must be finite and nonnegative, got {beta}")));
        }
        for order in WordOrder::ALL {
            match energy.get(&order) {
                Some(value) if value.is_finite() => {}
                Some(value) => {
                    return Err(Error::domain(format!("energy of {order} is not finite: {value}")))
                }
                None => return Err(Error::domain(format!("energy map is missing {order}"))),
            }
        }
        Ok(ChainSpec { energy, beta, params })
    }

    /// Builds the landscape from a layout via the scalarized energy.
    pub fn from_layout(
        layout: &ConstituentLayout,
        g: &CostFunction,
        params: &EnergyParams,
        beta: f64,
    ) -> Result<Self> {
        ChainSpec::new(energy_landscape(layout, g, params)?, beta, *params)
    }

    pub fn energy(&self, order: WordOrder) -> f64 {
        self.energy[&order]
    }

    pub fn energies(&self) -> &BTreeMap<WordOrder, f64> {
        &self.energy
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn params(&self) -> EnergyParams {
        self.params
    }
}

/// Metropolis transition matrix for the spec on the ring: each neighbor is
/// proposed with probability 1/2 and accepted with
/// `min(1, exp(-beta * dE))`; rejected mass stays on the diagonal.
pub fn transition_matrix(spec: &ChainSpec, ring: &RingGraph) -> TransitionMatrix {
    let mut matrix = [[0.0; NODES]; NODES];
    for (u, from) in WordOrder::ALL.into_iter().enumerate() {
        for to in ring.neighbors(from) {
            let delta = spec.energy(to) - spec.energy(from);
            let acceptance = (-spec.beta() * delta).exp().min(1.0);
            matrix[u][ring.index(to)] += 0.5 * acceptance;
        }
        matrix[u][u] = 1.0 - matrix[u].iter().sum::<f64>();
    }
    matrix
}

fn check_row_stochastic(matrix: &TransitionMatrix) -> Result<()> {
    for (row_index, row) in matrix.iter().enumerate() {
        let mut sum = 0.0;
        for &entry in row {
            if !(-1e-12..=1.0 + 1e-12).contains(&entry) {
                return Err(Error::domain(format!(
                    "transition probability {entry} out of [0, 1] in row {row_index}"
                )));
            }
            sum += entry;
        }
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::domain(format!("row {row_index} sums to {sum}, expected 1")));
        }
    }
    Ok(())
}

fn check_irreducible(matrix: &TransitionMatrix) -> Result<()> {
    let reachable = |forward: bool| {
        let mut seen = [false; NODES];
        seen[0] = true;
        let mut frontier = vec![0usize];
        while let Some(node) = frontier.pop() {
            for next in 0..NODES {
                let edge = if forward { matrix[node][next] } else { matrix[next][node] };
                if edge > 0.0 && !seen[next] {
                    seen[next] = true;
                    frontier.push(next);
                }
            }
        }
        seen
    };
    if reachable(true).iter().all(|&s| s) && reachable(false).iter().all(|&s| s) {
        Ok(())
    } else {
        Err(Error::domain(
            "transition matrix is reducible; the stationary distribution is not unique",
        ))
    }
}

fn solve_augmented(mut a: [[f64; NODES + 1]; NODES]) -> Result<[f64; NODES]> {
    for col in 0..NODES {
        let pivot_row = (col..NODES)
            .max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))
            .expect("row range is nonempty");
        if a[pivot_row][col].abs() < 1e-12 {
            return Err(Error::domain(
                "stationary system is singular; the chain is degenerate",
            ));
        }
        a.swap(col, pivot_row);
        for row in 0..NODES {
            if row == col {
                continue;
            }
            let factor = a[row][col] / a[col][col];
            if factor != 0.0 {
                for k in col..=NODES {
                    a[row][k] -= factor * a[col][k];
                }
            }
        }
    }
    let mut solution = [0.0; NODES];
    for i in 0..NODES {
        solution[i] = a[i][NODES] / a[i][i];
    }
    Ok(solution)
}

/// Exact stationary distribution of a row-stochastic matrix, by linear
/// solve of `pi P = pi` with the normalization `sum pi = 1`.
///
/// Degenerate inputs (reducible chains, non-stochastic rows) are reported
/// as errors rather than repaired.  The result satisfies
/// `max |(pi P - pi)_i| < 1e-10`.
pub fn stationary_distribution(matrix: &TransitionMatrix) -> Result<BTreeMap<WordOrder, f64>> {
    check_row_stochastic(matrix)?;
    check_irreducible(matrix)?;
    // Rows 0..5 hold (P^T - I) x = 0; the last row is replaced by the
    // normalization constraint.
    let mut system = [[0.0; NODES + 1]; NODES];
    for i in 0..NODES - 1 {
        for j in 0..NODES {
            system[i][j] = matrix[j][i] - if i == j { 1.0 } else { 0.0 };
        }
    }
    for j in 0..NODES {
        system[NODES - 1][j] = 1.0;
    }
    system[NODES - 1][NODES] = 1.0;
    let pi = solve_augmented(system)?;

    let mut residual: f64 = 0.0;
    for j in 0..NODES {
        let projected: f64 = (0..NODES).map(|i| pi[i] * matrix[i][j]).sum();
        residual = residual.max((projected - pi[j]).abs());
    }
    if residual >= 1e-10 {
        return Err(Error::domain(format!(
            "stationary solve left residual {residual:e}, above 1e-10"
        )));
    }
    if pi.iter().any(|&p| p < -1e-12) {
        return Err(Error::domain("stationary solve produced negative probabilities"));
    }
    Ok(WordOrder::ALL.into_iter().zip(pi).collect())
}

/// Boltzmann distribution `pi(o) proportional to exp(-beta * E(o))` for the
/// spec's landscape; the analytic form the Metropolis chain converges to.
pub fn boltzmann_distribution(spec: &ChainSpec) -> BTreeMap<WordOrder, f64> {
    let minimum = spec.energies().values().cloned().fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = WordOrder::ALL
        .iter()
        .map(|&order| (-spec.beta() * (spec.energy(order) - minimum)).exp())
        .collect();
    let total: f64 = weights.iter().sum();
    WordOrder::ALL.into_iter().zip(weights.into_iter().map(|w| w / total)).collect()
}

/// Half the L1 distance between two distributions over the six orders.
pub fn total_variation(a: &BTreeMap<WordOrder, f64>, b: &BTreeMap<WordOrder, f64>) -> f64 {
    0.5 * WordOrder::ALL
        .iter()
        .map(|order| {
            (a.get(order).copied().unwrap_or(0.0) - b.get(order).copied().unwrap_or(0.0)).abs()
        })
        .sum::<f64>()
}

/// Completed round trips SOV -> ... -> SVO -> ... -> SOV in a state
/// sequence.  Visits to other orders in between are allowed; a trip counts
/// once when the walk regains SOV after having reached SVO.
pub fn count_reversions(states: &[WordOrder]) -> u64 {
    let mut count = 0;
    let mut reached_svo = false;
    for &state in states {
        if !reached_svo && state == WordOrder::Svo {
            reached_svo = true;
        } else if reached_svo && state == WordOrder::Sov {
            count += 1;
            reached_svo = false;
        }
    }
    count
}

/// A simulated trajectory and its summary statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrajectoryStats {
    states: Vec<WordOrder>,
    visit_counts: BTreeMap<WordOrder, u64>,
    reversion_count: u64,
}

impl TrajectoryStats {
    /// The visited states, one entry per step (rejected proposals repeat
    /// the current state).
    pub fn states(&self) -> &[WordOrder] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Visits per order; the counts sum to the trajectory length.
    pub fn visit_counts(&self) -> &BTreeMap<WordOrder, u64> {
        &self.visit_counts
    }

    /// Completed SOV -> SVO -> SOV round trips.
    pub fn reversion_count(&self) -> u64 {
        self.reversion_count
    }

    /// Empirical visit frequencies.
    pub fn empirical_distribution(&self) -> BTreeMap<WordOrder, f64> {
        let total = self.states.len() as f64;
        self.visit_counts.iter().map(|(&order, &count)| (order, count as f64 / total)).collect()
    }

    /// Dominance classification of the whole run's visit frequencies.
    pub fn dominance(&self, theta: f64) -> Result<DominantOrder> {
        classify_dominance(&self.empirical_distribution(), theta)
    }

    /// Dominance classification per window of `window_len` steps (the last
    /// window may be shorter).  Early windows reflect the starting basin,
    /// later ones the equilibrium, so transitions show up as a change of
    /// label with `NONE` phases in between.
    pub fn windowed_dominance(&self, window_len: usize, theta: f64) -> Result<Vec<DominantOrder>> {
        if window_len == 0 {
            return Err(Error::domain("window length must be at least 1"));
        }
        self.states
            .chunks(window_len)
            .map(|window| {
                let total = window.len() as f64;
                let mut frequencies: BTreeMap<WordOrder, f64> =
                    WordOrder::ALL.into_iter().map(|order| (order, 0.0)).collect();
                for &state in window {
                    *frequencies.get_mut(&state).unwrap() += 1.0 / total;
                }
                classify_dominance(&frequencies, theta)
            })
            .collect()
    }
}

/// Runs the Metropolis chain for `steps` states starting at SOV.
///
/// The trajectory includes the initial state, so it makes `steps - 1`
/// proposals.  A fixed seed reproduces the identical trajectory.
pub fn simulate_trajectory(
    spec: &ChainSpec,
    ring: &RingGraph,
    steps: usize,
    seed: u64,
) -> Result<TrajectoryStats> {
    if steps == 0 {
        return Err(Error::domain("a trajectory needs at least one step"));
    }
    let energies = WordOrder::ALL.map(|order| spec.energy(order));
    let neighbor_indices =
        WordOrder::ALL.map(|order| ring.neighbors(order).map(|n| ring.index(n)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = ring.index(WordOrder::Sov);
    let mut states = Vec::with_capacity(steps);
    let mut counts = [0u64; NODES];
    states.push(WordOrder::ALL[current]);
    counts[current] += 1;
    for _ in 1..steps {
        let proposal = neighbor_indices[current][usize::from(rng.random_bool(0.5))];
        let acceptance = (-spec.beta() * (energies[proposal] - energies[current])).exp().min(1.0);
        if rng.random::<f64>() < acceptance {
            current = proposal;
        }
        states.push(WordOrder::ALL[current]);
        counts[current] += 1;
    }
    let reversion_count = count_reversions(&states);
    Ok(TrajectoryStats {
        states,
        visit_counts: WordOrder::ALL.into_iter().zip(counts).collect(),
        reversion_count,
    })
}

/// Number of local minima of the landscape on the ring.
///
/// A maximal run of equal energies flanked on both sides by strictly higher
/// energies counts as one minimum; a perfectly flat landscape has none.
pub fn count_local_minima(energy: &BTreeMap<WordOrder, f64>, ring: &RingGraph) -> Result<usize> {
    let values: Vec<f64> = ring
        .nodes()
        .iter()
        .map(|order| {
            energy
                .get(order)
                .copied()
                .ok_or_else(|| Error::domain(format!("energy map is missing {order}")))
        })
        .collect::<Result<_>>()?;
    let len = values.len();
    if values.iter().all(|&v| v == values[0]) {
        return Ok(0);
    }
    let mut minima = 0;
    for start in 0..len {
        // A plateau is scanned once, from its first node.
        if values[(start + len - 1) % len] == values[start] {
            continue;
        }
        let mut end = start;
        while values[(end + 1) % len] == values[start] {
            end = (end + 1) % len;
        }
        let before = values[(start + len - 1) % len];
        let after = values[(end + 1) % len];
        if before > values[start] && after > values[start] {
            minima += 1;
        }
    }
    Ok(minima)
}

/// The order holding at least `theta` of the probability mass, if any.
///
/// `theta` must lie in `(0.5, 1]`, which guarantees at most one qualifying
/// order.
pub fn classify_dominance(pi: &BTreeMap<WordOrder, f64>, theta: f64) -> Result<DominantOrder> {
    if !theta.is_finite() || theta <= 0.5 || theta > 1.0 {
        return Err(Error::domain(format!(
            "dominance threshold must lie in (0.5, 1], got {theta}"
        )));
    }
    for order in WordOrder::ALL {
        if !pi.contains_key(&order) {
            return Err(Error::domain(format!("distribution is missing {order}")));
        }
    }
    Ok(pi
        .iter()
        .find(|&(_, &mass)| mass >= theta)
        .map(|(&order, _)| DominantOrder::Order(order))
        .unwrap_or(DominantOrder::None))
}
