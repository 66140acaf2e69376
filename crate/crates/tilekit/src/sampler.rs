//! Markov-chain sampling of weighted `k`-tilings.
//!
//! The chain proposes a uniform (color, 2×2 block) pair and, if the block
//! holds two parallel dominos of that color, rotates it with Metropolis
//! probability `min(1, t^{ΔN})`, where `ΔN` is the change in the number of
//! interactions. Proposals are symmetric, so the stationary law is
//! proportional to `t^{N}` (all `x`, `y` set to 1). Interaction deltas are
//! computed from the four dominos that change, against the other colors'
//! grids, so a step costs `O(k)`.
//!
//! Acceptance uses an exact rational threshold: a uniform 64-bit integer
//! `U` is accepted when `U < ⌈t^{Δ}·2^{64}⌉`. For `|Δ|` above
//! [`EXACT_EXPONENT_LIMIT`] the threshold falls back to floating point.
//!
//! Joint connectivity of the chain at `t = 0` is checked for small ranks
//! only; for larger ranks it is an assumption.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::aztec::{enumerate_ktilings, AztecRegion, Domino, KTiling, KTilingJson, Tiling, TilingGrid};
use crate::bijections::t0_inverse;
use crate::encodings::{domino_interactions, interactions, ModelKind};
use crate::error::{Error, Result};
use crate::hexagon::{t0_target, HexRegion, HexTiling, KLozengeTiling};

/// Name of the pseudo-random generator, recorded in run metadata.
pub const RNG_NAME: &str = "ChaCha8 (rand_chacha 0.9)";

/// Largest `|Δ|` for which acceptance thresholds are computed exactly.
pub const EXACT_EXPONENT_LIMIT: i64 = 64;

/// The interaction model the chains weight by.
pub const CHAIN_MODEL: ModelKind = ModelKind::PurpleGray;

/// Parameters of a sampling run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplerConfig {
    pub rank: u32,
    pub colors: usize,
    /// Nonnegative rational, written `p/q` or as an integer.
    #[serde(with = "rational_text")]
    pub t: Rational,
    pub steps: u64,
    pub burn_in: u64,
    /// Record every `thinning`-th state after burn-in.
    pub thinning: u64,
    pub seed: u64,
}

impl SamplerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.colors == 0 || self.rank == 0 {
            return Err(Error::Invalid("rank and colors must be positive".into()));
        }
        if self.t.is_negative() {
            return Err(Error::Invalid("t must be nonnegative".into()));
        }
        if self.steps <= self.burn_in {
            return Err(Error::Invalid("steps must exceed burn_in".into()));
        }
        if self.thinning == 0 {
            return Err(Error::Invalid("thinning must be positive".into()));
        }
        Ok(())
    }
}

mod rational_text {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses `p/q`, an integer, or a decimal such as `0.5`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("not a rational number: {s}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let digits = frac.len() as u32;
        let n: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
        return Ok(Rational::new(n, BigInt::from(10).pow(digits)));
    }
    // Integers, including scientific forms like 2e9.
    if let Some((mant, exp)) = s.split_once(['e', 'E']) {
        let m: BigInt = mant.parse().map_err(|_| bad())?;
        let e: u32 = exp.parse().map_err(|_| bad())?;
        return Ok(Rational::from_integer(m * BigInt::from(10).pow(e)));
    }
    Ok(Rational::from_integer(s.parse().map_err(|_| bad())?))
}

/// Metropolis acceptance `min(1, t^Δ)` with cached exact thresholds.
#[derive(Debug, Clone)]
pub struct Acceptance {
    t: Rational,
    thresholds: HashMap<i64, Threshold>,
}

#[derive(Debug, Clone, Copy)]
enum Threshold {
    Always,
    Never,
    /// Accept when a uniform `u64` is below this value.
    Below(u64),
}

impl Acceptance {
    pub fn new(t: Rational) -> Acceptance {
        Acceptance { t, thresholds: HashMap::new() }
    }

    /// The exact probability `min(1, t^Δ)` (with `0^0 = 1`).
    pub fn probability(&self, delta: i64) -> Rational {
        if delta == 0 {
            return Rational::one();
        }
        if self.t.is_zero() {
            return if delta > 0 { Rational::zero() } else { Rational::one() };
        }
        let p = pow(&self.t, delta);
        if p > Rational::one() {
            Rational::one()
        } else {
            p
        }
    }

    fn threshold(&mut self, delta: i64) -> Threshold {
        if let Some(t) = self.thresholds.get(&delta) {
            return *t;
        }
        let th = if delta.abs() <= EXACT_EXPONENT_LIMIT {
            let p = self.probability(delta);
            if p.is_one() {
                Threshold::Always
            } else if p.is_zero() {
                Threshold::Never
            } else {
                // ⌈p·2^64⌉ ≤ 2^64 − 1 because p < 1 has a denominator ≥ 2.
                let scaled = p * Rational::from_integer(BigInt::one() << 64);
                let ceil = scaled.numer().div_ceil(scaled.denom());
                Threshold::Below(ceil.to_u64().unwrap_or(u64::MAX))
            }
        } else {
            let lt = self.t.to_f64().unwrap_or(0.0).ln();
            let p = (delta as f64 * lt).exp().min(1.0);
            if p >= 1.0 {
                Threshold::Always
            } else {
                Threshold::Below((p * 18446744073709551616.0) as u64)
            }
        };
        self.thresholds.insert(delta, th);
        th
    }

    /// Draws the accept/reject decision for a change of `delta`.
    pub fn accept<R: RngCore>(&mut self, delta: i64, rng: &mut R) -> bool {
        match self.threshold(delta) {
            Threshold::Always => true,
            Threshold::Never => false,
            Threshold::Below(b) => rng.next_u64() < b,
        }
    }
}

fn pow(t: &Rational, e: i64) -> Rational {
    let r = t.pow(e.unsigned_abs() as i32);
    if e < 0 {
        r.recip()
    } else {
        r
    }
}

/// A running chain over `k`-tilings of one diamond.
#[derive(Debug, Clone)]
pub struct AztecChain {
    rank: u32,
    grids: Vec<TilingGrid>,
    cells: Vec<(i32, i32)>,
    acceptance: Acceptance,
    interactions: i64,
    accepted: u64,
}

impl AztecChain {
    pub fn new(state: &KTiling, t: Rational) -> Result<AztecChain> {
        let n = interactions(state, CHAIN_MODEL) as i64;
        if t.is_zero() && n > 0 {
            return Err(Error::Interactions(format!("a t = 0 chain must start without interactions, not {n}")));
        }
        Ok(AztecChain {
            rank: state.rank(),
            grids: state.layers().iter().map(TilingGrid::from_tiling).collect(),
            cells: AztecRegion::new(state.rank()).cells(),
            acceptance: Acceptance::new(t),
            interactions: n,
            accepted: 0,
        })
    }

    pub fn k(&self) -> usize {
        self.grids.len()
    }

    pub fn interactions(&self) -> i64 {
        self.interactions
    }

    pub fn accepted(&self) -> u64 {
        self.accepted
    }

    pub fn grids(&self) -> &[TilingGrid] {
        &self.grids
    }

    pub fn state(&self) -> KTiling {
        KTiling::new(self.grids.iter().map(TilingGrid::to_tiling).collect()).expect("chain layers share a rank")
    }

    /// Interaction change of rotating block `(a, b)` of `color`, or `None`
    /// if the block is not flippable.
    pub fn flip_delta(&self, color: usize, a: i32, b: i32) -> Option<i64> {
        let (removed, added) = self.grids[color].flip_delta(a, b)?;
        let mut delta = 0i64;
        for (o, other) in self.grids.iter().enumerate() {
            if o == color {
                continue;
            }
            let count = |d: &Domino| domino_interactions(d, self.rank, color < o, other, CHAIN_MODEL) as i64;
            delta += added.iter().map(count).sum::<i64>() - removed.iter().map(count).sum::<i64>();
        }
        Some(delta)
    }

    /// One proposal; returns whether a flip happened.
    pub fn step<R: RngCore>(&mut self, rng: &mut R) -> bool {
        let color = (rng.next_u64() % self.grids.len() as u64) as usize;
        let (a, b) = self.cells[(rng.next_u64() % self.cells.len() as u64) as usize];
        let Some(delta) = self.flip_delta(color, a, b) else {
            return false;
        };
        if !self.acceptance.accept(delta, rng) {
            return false;
        }
        self.grids[color].flip(a, b).expect("flippable block");
        self.interactions += delta;
        self.accepted += 1;
        true
    }
}

/// One chain step from a given state.
pub fn mcmc_step(state: &KTiling, cfg: &SamplerConfig, rng: &mut ChaCha8Rng) -> Result<KTiling> {
    let mut chain = AztecChain::new(state, cfg.t.clone())?;
    chain.step(rng);
    Ok(chain.state())
}

/// Per cell and color, how often each domino type covered the cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellStatistics {
    pub rank: u32,
    pub colors: usize,
    pub samples: u64,
    /// `counts[color][cell]` in the order of [`AztecRegion::cells`].
    pub counts: Vec<Vec<[u64; 4]>>,
}

impl CellStatistics {
    pub fn new(rank: u32, colors: usize) -> CellStatistics {
        let n = AztecRegion::new(rank).cell_count();
        CellStatistics { rank, colors, samples: 0, counts: vec![vec![[0; 4]; n]; colors] }
    }

    /// Adds one state.
    pub fn record(&mut self, grids: &[TilingGrid]) {
        let cells = AztecRegion::new(self.rank).cells();
        for (c, g) in grids.iter().enumerate() {
            for (i, &(a, b)) in cells.iter().enumerate() {
                if let Some(d) = g.domino_covering(a, b) {
                    self.counts[c][i][d.kind(self.rank).index()] += 1;
                }
            }
        }
        self.samples += 1;
    }

    /// Adds another run's counts.
    pub fn merge(&mut self, other: &CellStatistics) -> Result<()> {
        if (self.rank, self.colors) != (other.rank, other.colors) {
            return Err(Error::Invalid("statistics of different shapes".into()));
        }
        for (mine, theirs) in self.counts.iter_mut().zip(&other.counts) {
            for (m, t) in mine.iter_mut().zip(theirs) {
                for i in 0..4 {
                    m[i] += t[i];
                }
            }
        }
        self.samples += other.samples;
        Ok(())
    }

    /// Empirical type frequencies of one cell and color.
    pub fn frequencies(&self, color: usize, cell: usize) -> [f64; 4] {
        let n = self.samples.max(1) as f64;
        self.counts[color][cell].map(|c| c as f64 / n)
    }
}

/// Output of [`run`].
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunOutput {
    pub config: SamplerConfig,
    pub rng: String,
    pub accepted: u64,
    pub statistics: CellStatistics,
    pub final_state: KTilingJson,
}

/// A starting state of positive weight: all horizontal when `t > 0`, the
/// `t = 0` preimage of the all-horizontal tiling otherwise.
pub fn initial_state(m: u32, k: usize, t: &Rational) -> Result<KTiling> {
    if t.is_zero() {
        t0_inverse(&Tiling::all_horizontal(m), k)
    } else {
        KTiling::new(vec![Tiling::all_horizontal(m); k])
    }
}

/// Runs a chain, recording post-burn-in states every `thinning` steps.
pub fn run(cfg: &SamplerConfig) -> Result<RunOutput> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut chain = AztecChain::new(&initial_state(cfg.rank, cfg.colors, &cfg.t)?, cfg.t.clone())?;
    let mut stats = CellStatistics::new(cfg.rank, cfg.colors);
    for s in 0..cfg.steps {
        chain.step(&mut rng);
        if s >= cfg.burn_in && (s - cfg.burn_in) % cfg.thinning == 0 {
            stats.record(chain.grids());
        }
    }
    Ok(RunOutput {
        config: cfg.clone(),
        rng: RNG_NAME.to_string(),
        accepted: chain.accepted(),
        statistics: stats,
        final_state: KTilingJson::from(&chain.state()),
    })
}

/// Visit counts of every state of a chain (for small ranks).
pub fn state_frequencies(cfg: &SamplerConfig) -> Result<BTreeMap<KTiling, u64>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut chain = AztecChain::new(&initial_state(cfg.rank, cfg.colors, &cfg.t)?, cfg.t.clone())?;
    let mut out = BTreeMap::new();
    for s in 0..cfg.steps {
        chain.step(&mut rng);
        if s >= cfg.burn_in && (s - cfg.burn_in) % cfg.thinning == 0 {
            *out.entry(chain.state()).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// `t^{N}` for every `k`-tiling (the unnormalized stationary law).
pub fn exact_weights(m: u32, k: usize, t: &Rational) -> Result<Vec<(KTiling, Rational)>> {
    let acc = Acceptance::new(t.clone());
    Ok(enumerate_ktilings(m, k)?
        .into_iter()
        .map(|kt| {
            let n = interactions(&kt, CHAIN_MODEL) as i64;
            let w = if n == 0 { Rational::one() } else if t.is_zero() { Rational::zero() } else { pow(&acc.t, n) };
            (kt, w)
        })
        .collect())
}

/// A draw from the exact law `∝ t^{N}` by enumeration.
pub fn exact_sample(m: u32, k: usize, t: &Rational, seed: u64) -> Result<KTiling> {
    let weights = exact_weights(m, k, t)?;
    // Clear denominators to draw with integers.
    let lcm = weights.iter().fold(BigInt::one(), |l, (_, w)| l.lcm(w.denom()));
    let ints: Vec<BigInt> = weights.iter().map(|(_, w)| (w * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let total: BigInt = ints.iter().sum();
    let total = total.to_u128().ok_or_else(|| Error::CapExceeded("weights too large to draw from".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut u = rng.random_range(0..total);
    for ((kt, _), w) in weights.iter().zip(&ints) {
        let w = w.to_u128().expect("each weight is below the total");
        if u < w {
            return Ok(kt.clone());
        }
        u -= w;
    }
    unreachable!("the draw is below the total weight")
}

/// The exact transition matrix of the chain on all `k`-tilings of rank `m`,
/// rows indexed like [`enumerate_ktilings`].
pub fn transition_matrix(m: u32, k: usize, t: &Rational) -> Result<(Vec<KTiling>, Vec<BTreeMap<usize, Rational>>)> {
    let states = enumerate_ktilings(m, k)?;
    let index: HashMap<&KTiling, usize> = states.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let cells = AztecRegion::new(m).cells();
    let proposals = Rational::from_integer(BigInt::from(k * cells.len()));
    let acc = Acceptance::new(t.clone());
    let mut rows = Vec::with_capacity(states.len());
    for s in &states {
        let chain = AztecChain::new(s, Rational::one())?;
        let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut stay = Rational::one();
        for color in 0..k {
            for &(a, b) in &cells {
                let Some(delta) = chain.flip_delta(color, a, b) else { continue };
                let p = acc.probability(delta) / &proposals;
                if p.is_zero() {
                    continue;
                }
                let mut next = chain.clone();
                next.grids[color].flip(a, b)?;
                let j = index[&next.state()];
                stay -= &p;
                *row.entry(j).or_insert_with(Rational::zero) += p;
            }
        }
        *row.entry(index[s]).or_insert_with(Rational::zero) += stay;
        rows.push(row);
    }
    Ok((states, rows))
}

/// Largest entry of `|πP − π|` for `π ∝ t^{N}`; zero when the law is
/// stationary.
pub fn stationarity_residual(m: u32, k: usize, t: &Rational) -> Result<Rational> {
    let (states, rows) = transition_matrix(m, k, t)?;
    let weights = exact_weights(m, k, t)?;
    debug_assert!(states.iter().zip(&weights).all(|(s, (w, _))| s == w));
    let mut image = vec![Rational::zero(); states.len()];
    for (i, row) in rows.iter().enumerate() {
        for (&j, p) in row {
            image[j] += &weights[i].1 * p;
        }
    }
    Ok(image.iter().zip(&weights).map(|(x, (_, w))| (x - w).abs()).max().unwrap_or_else(Rational::zero))
}

/// States reachable from `start` by moves the chain accepts with positive
/// probability.
pub fn reachable_states(start: &KTiling, t: &Rational) -> Result<usize> {
    let cells = AztecRegion::new(start.rank()).cells();
    let acc = Acceptance::new(t.clone());
    let mut seen = std::collections::HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(s) = queue.pop_front() {
        let chain = AztecChain::new(&s, Rational::one())?;
        for color in 0..s.k() {
            for &(a, b) in &cells {
                let Some(delta) = chain.flip_delta(color, a, b) else { continue };
                if acc.probability(delta).is_zero() {
                    continue;
                }
                let mut next = chain.clone();
                next.grids[color].flip(a, b)?;
                let st = next.state();
                if seen.insert(st.clone()) {
                    queue.push_back(st);
                }
            }
        }
    }
    Ok(seen.len())
}

/// A (near-)uniform tiling from `sweeps` sweeps of the `t = 1` chain on
/// one color, started at the all-horizontal tiling.
///
/// A sweep is a checkerboard heat-bath: blocks whose lower-left cells agree
/// mod 2 are disjoint, so each of the four classes is updated at once by
/// rotating every flippable block with probability ½. Each class update
/// preserves the uniform law.
pub fn uniform_tiling_mcmc(m: u32, sweeps: u64, seed: u64) -> Tiling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut grid = TilingGrid::from_tiling(&Tiling::all_horizontal(m));
    let region = AztecRegion::new(m);
    let mut classes: [Vec<(i32, i32)>; 4] = Default::default();
    for (a, b) in region.cells() {
        if region.contains(a + 1, b + 1) && region.contains(a + 1, b) && region.contains(a, b + 1) {
            classes[(a.rem_euclid(2) * 2 + b.rem_euclid(2)) as usize].push((a, b));
        }
    }
    for _ in 0..sweeps {
        for class in &classes {
            for chunk in class.chunks(64) {
                let bits = rng.next_u64();
                for (i, &(a, b)) in chunk.iter().enumerate() {
                    if bits >> i & 1 == 1 && grid.block_orientation(a, b).is_some() {
                        grid.flip(a, b).expect("flippable block");
                    }
                }
            }
        }
    }
    grid.to_tiling()
}

/// Default Chebyshev radius for [`frozen_cells`].
pub const FROZEN_RADIUS: i32 = 2;

/// Which cells of each color look frozen: no block within Chebyshev
/// distance `radius` can be rotated without changing the interaction
/// count. Rotations that keep the count are the moves available to every
/// chain, including the `t = 0` and `t → ∞` extremes, so a cell with none
/// nearby has no local freedom. Indexed `[color][cell]` like
/// [`AztecRegion::cells`].
pub fn frozen_cells(kt: &KTiling, radius: i32) -> Vec<Vec<bool>> {
    let m = kt.rank() as i32;
    let chain = AztecChain::new(kt, Rational::one()).expect("t = 1 accepts every state");
    let cells = AztecRegion::new(kt.rank()).cells();
    let side = (2 * m + 1) as usize;
    let at = |a: i32, b: i32| ((b + m) as usize) * side + (a + m) as usize;
    (0..kt.k())
        .map(|color| {
            let mut free = vec![false; side * side];
            for &(a, b) in &cells {
                if chain.flip_delta(color, a, b) == Some(0) {
                    free[at(a, b)] = true;
                }
            }
            cells
                .iter()
                .map(|&(a, b)| {
                    !(-radius..=radius).any(|da| {
                        (-radius..=radius).any(|db| {
                            let (x, y) = (a + da, b + db);
                            x >= -m && x < m && y >= -m && y < m && free[at(x, y)]
                        })
                    })
                })
                .collect()
        })
        .collect()
}

/// Rescaled centre of cell `(a, b)` in the rank-`m` diamond.
pub fn cell_center(m: u32, a: i32, b: i32) -> (f64, f64) {
    ((a as f64 + 0.5) / m as f64, (b as f64 + 0.5) / m as f64)
}

/// For each cell: `Some(true)` if its centre lies inside the curve (the
/// disordered region), `Some(false)` if outside, `None` if within `margin`.
pub fn expected_sides(m: u32, family: &crate::arctic::CurveFamily, margin: f64) -> Vec<Option<bool>> {
    use crate::arctic::{CurveFamily, Side};
    let outline = family.outline(512);
    AztecRegion::new(m)
        .cells()
        .into_iter()
        .map(|(a, b)| {
            let p = cell_center(m, a, b);
            if CurveFamily::distance_to_outline(p, &outline) <= margin {
                return None;
            }
            Some(family.classify_with_outline(p, 0.0, &outline) == Side::Inside)
        })
        .collect()
}

/// Fraction of cells (over all colors) away from the curve whose observed
/// frozen/disordered status agrees with the curve.
pub fn arctic_agreement(kt: &KTiling, expected: &[Option<bool>]) -> f64 {
    let (mut good, mut total) = (0usize, 0usize);
    for layer in frozen_cells(kt, FROZEN_RADIUS) {
        for (frozen, side) in layer.into_iter().zip(expected) {
            if let Some(inside) = side {
                total += 1;
                good += (frozen != *inside) as usize;
            }
        }
    }
    good as f64 / total.max(1) as f64
}

/// A zero-interaction `k`-tiling: the `t = 0` preimage of a near-uniform
/// 1-tiling from [`uniform_tiling_mcmc`].
pub fn zero_class_sample(m: u32, k: usize, sweeps: u64, seed: u64) -> Result<KTiling> {
    t0_inverse(&uniform_tiling_mcmc(m, sweeps, seed), k)
}

/// Default sweeps of [`uniform_tiling_mcmc`] per unit of `rank²`; rank 128
/// then gets about 30 000 sweeps.
pub const SWEEPS_PER_RANK_SQUARED: f64 = 1.85;

/// Compares large-rank samples with the `t = 0` and `t → ∞` curves.
///
/// Each trial draws a zero-interaction `k`-tiling through the `t = 0`
/// bijection, scores it against the `t = 0` family, then applies the
/// diagonal involution (which maps it to a maximal-interaction tiling) and
/// scores that against the `t → ∞` family.
#[derive(Debug, Clone)]
pub struct ArcticProtocol {
    pub rank: u32,
    pub colors: usize,
    pub sweeps: u64,
    t0_sides: Vec<Option<bool>>,
    tinf_sides: Vec<Option<bool>>,
}

/// Agreement fractions of one [`ArcticProtocol`] trial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArcticScore {
    pub seed: u64,
    pub t0: f64,
    pub tinf: f64,
}

impl ArcticProtocol {
    pub fn new(rank: u32, colors: usize, margin: f64) -> ArcticProtocol {
        use crate::arctic::{aztec_t0_curves, aztec_tinf_curves};
        ArcticProtocol {
            rank,
            colors,
            sweeps: (SWEEPS_PER_RANK_SQUARED * (rank as f64).powi(2)).ceil() as u64,
            t0_sides: expected_sides(rank, &aztec_t0_curves(colors), margin),
            tinf_sides: expected_sides(rank, &aztec_tinf_curves(colors), margin),
        }
    }

    pub fn trial(&self, seed: u64) -> Result<ArcticScore> {
        let kt = zero_class_sample(self.rank, self.colors, self.sweeps, seed)?;
        Ok(ArcticScore {
            seed,
            t0: arctic_agreement(&kt, &self.t0_sides),
            tinf: arctic_agreement(&kt.reflect_diagonal(), &self.tinf_sides),
        })
    }
}

/// A running chain over `k`-tuples of lozenge tilings. A move shifts one
/// right step of one path one row up or down (adding or removing a cube).
#[derive(Debug, Clone)]
pub struct HexChain {
    region: HexRegion,
    layers: Vec<HexTiling>,
    /// `lines[color][line][path]`: path columns on each horizontal line.
    lines: Vec<Vec<Vec<u32>>>,
    acceptance: Acceptance,
    interactions: i64,
    accepted: u64,
}

impl HexChain {
    pub fn new(state: &KLozengeTiling, t: Rational) -> Result<HexChain> {
        let n = crate::hexagon::lozenge_interactions(state) as i64;
        if t.is_zero() && n > 0 {
            return Err(Error::Interactions(format!("a t = 0 chain must start without interactions, not {n}")));
        }
        Ok(HexChain {
            region: state.region,
            lines: state.layers.iter().map(|l| l.lines()).collect(),
            layers: state.layers.clone(),
            acceptance: Acceptance::new(t),
            interactions: n,
            accepted: 0,
        })
    }

    pub fn state(&self) -> KLozengeTiling {
        KLozengeTiling { region: self.region, layers: self.layers.clone() }
    }

    pub fn interactions(&self) -> i64 {
        self.interactions
    }

    /// Interactions of 0-based row `row` between colors `c` and `o`.
    fn row_pair(&self, c: usize, o: usize, row: usize) -> i64 {
        let (blue, red) = if c < o { (c, o) } else { (o, c) };
        let spans = |color: usize| -> Vec<(u32, u32)> {
            let (lo, hi) = (&self.lines[color][row], &self.lines[color][row + 1]);
            lo.iter().zip(hi).map(|(&p, &q)| (p, q)).collect()
        };
        crate::hexagon::row_overlap(&spans(blue), &spans(red)) as i64
    }

    fn rows_against_others(&self, color: usize, rows: &[usize]) -> i64 {
        let mut n = 0;
        for o in 0..self.layers.len() {
            if o != color {
                n += rows.iter().map(|&r| self.row_pair(color, o, r)).sum::<i64>();
            }
        }
        n
    }

    /// Moves the `j`-th right step of path `i` of `color` one row up or
    /// down: the new row and the interaction change, or `None` if the
    /// result is not a valid tiling.
    pub fn propose(&mut self, color: usize, i: usize, j: usize, up: bool) -> Option<(u32, i64)> {
        let (a, b) = (self.region.a as usize, self.region.b as usize);
        let steps = &self.layers[color].steps;
        let r = steps[i][j];
        let new = if up { r + 1 } else { r.checked_sub(1)? };
        let ok = new >= 1
            && new <= self.region.rows()
            && (j == 0 || steps[i][j - 1] <= new)
            && (j + 1 == b || new <= steps[i][j + 1])
            && (i == 0 || steps[i - 1][j] > new)
            && (i + 1 == a || new > steps[i + 1][j]);
        if !ok {
            return None;
        }
        // The step crosses line min(r, new); only the rows on either side change.
        let line = r.min(new) as usize;
        let rows = [line - 1, line];
        let before = self.rows_against_others(color, &rows);
        self.shift_line(color, line, i, up);
        let delta = self.rows_against_others(color, &rows) - before;
        self.shift_line(color, line, i, !up);
        Some((new, delta))
    }

    fn shift_line(&mut self, color: usize, line: usize, i: usize, up: bool) {
        let p = &mut self.lines[color][line][i];
        // Raising a step removes it from the count below the line.
        *p = if up { *p - 1 } else { *p + 1 };
    }

    /// Applies a move returned by [`HexChain::propose`].
    fn commit(&mut self, color: usize, i: usize, j: usize, new: u32, delta: i64) {
        let r = self.layers[color].steps[i][j];
        self.shift_line(color, r.min(new) as usize, i, new > r);
        self.layers[color].steps[i][j] = new;
        self.interactions += delta;
        self.accepted += 1;
    }

    /// One proposal; returns whether the state changed.
    pub fn step<R: RngCore>(&mut self, rng: &mut R) -> bool {
        let (a, b) = (self.region.a as u64, self.region.b as u64);
        if a == 0 || b == 0 {
            return false;
        }
        let color = (rng.next_u64() % self.layers.len() as u64) as usize;
        let i = (rng.next_u64() % a) as usize;
        let j = (rng.next_u64() % b) as usize;
        let up = rng.next_u64() & 1 == 1;
        let Some((new, delta)) = self.propose(color, i, j, up) else {
            return false;
        };
        if !self.acceptance.accept(delta, rng) {
            return false;
        }
        self.commit(color, i, j, new, delta);
        true
    }
}

/// Largest entry of `|πP − π|` for the exact hexagon chain on all
/// `k`-tuples of tilings of `region`, with `π ∝ t^{N}`.
pub fn hex_stationarity_residual(region: HexRegion, k: usize, t: &Rational) -> Result<Rational> {
    let tilings = crate::hexagon::enumerate_lozenge(region)?;
    let mut states: Vec<Vec<HexTiling>> = vec![vec![]];
    for _ in 0..k {
        states = states
            .into_iter()
            .flat_map(|s| tilings.iter().map(move |t| [s.clone(), vec![t.clone()]].concat()))
            .collect();
    }
    let states: Vec<KLozengeTiling> = states.into_iter().map(KLozengeTiling::new).collect::<Result<_>>()?;
    let index: HashMap<&KLozengeTiling, usize> = states.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let acc = Acceptance::new(t.clone());
    let weights: Vec<Rational> = states
        .iter()
        .map(|s| {
            let n = crate::hexagon::lozenge_interactions(s) as i64;
            if n == 0 { Rational::one() } else if t.is_zero() { Rational::zero() } else { pow(t, n) }
        })
        .collect();
    let (a, b) = (region.a as usize, region.b as usize);
    let proposals = Rational::from_integer(BigInt::from(k * a * b * 2));
    let mut image = vec![Rational::zero(); states.len()];
    for (s, w) in states.iter().zip(&weights) {
        let chain = HexChain::new(s, Rational::one())?;
        let mut stay = Rational::one();
        for color in 0..k {
            for i in 0..a {
                for j in 0..b {
                    for up in [false, true] {
                        let mut next = chain.clone();
                        let Some((new, delta)) = next.propose(color, i, j, up) else { continue };
                        let p = acc.probability(delta) / &proposals;
                        if p.is_zero() {
                            continue;
                        }
                        next.commit(color, i, j, new, delta);
                        stay -= &p;
                        image[index[&next.state()]] += w * p;
                    }
                }
            }
        }
        image[index[s]] += w * stay;
    }
    Ok(image.iter().zip(&weights).map(|(x, w)| (x - w).abs()).max().unwrap_or_else(Rational::zero))
}

/// A starting hexagon state: the lowest tableau in every color when `t > 0`,
/// the preimage of the lowest merged tableau when `t = 0`.
pub fn hex_initial_state(region: HexRegion, k: usize, t: &Rational) -> Result<KLozengeTiling> {
    if t.is_zero() {
        let target = t0_target(region, k).ok_or_else(|| Error::Invalid(format!("{region} has no zero-interaction {k}-tilings")))?;
        crate::hexagon::hex_t0_inverse(&HexTiling::lowest(target), k, region)
    } else {
        KLozengeTiling::new(vec![HexTiling::lowest(region); k])
    }
}

/// One hexagon chain step from a given state.
pub fn hex_sampler_step(state: &KLozengeTiling, t: &Rational, rng: &mut ChaCha8Rng) -> Result<KLozengeTiling> {
    let mut chain = HexChain::new(state, t.clone())?;
    chain.step(rng);
    Ok(chain.state())
}
