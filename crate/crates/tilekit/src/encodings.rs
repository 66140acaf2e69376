//! The purple-gray and white-pink encodings of tilings as sequences of
//! partitions, the `x`/`y` weights, and interaction counting.
//!
//! # Slices and windows
//!
//! Slice `ℓ ∈ [0, 2m]` (see [`crate::aztec`]) is read south-west to
//! north-east as a truncated Maya diagram of `m` cells (even `ℓ`) or `m + 1`
//! cells (odd `ℓ`). The two models differ in the zero line and in which
//! dominos mark particles:
//!
//! | model       | zero line | left of zero | particle types |
//! |-------------|-----------|--------------|----------------|
//! | purple-gray | `y = 0`   | `b < 0`      | I, IV          |
//! | white-pink  | `x = 0`   | `a < 0`      | II, III        |
//!
//! Slice `ℓ` gives `λ^ℓ`. Purple-gray sequences satisfy
//! `∅ = λ⁰ ⪯′ λ¹ ⪰ λ² ⪯′ … ⪰ λ^{2m} = ∅` and white-pink ones
//! `∅ ⪯ λ¹ ⪰′ λ² ⪯ … ⪰′ ∅`.
//!
//! # Weights
//!
//! Purple-gray: a type IV domino whose top cell is on slice `2i−1`
//! contributes `x_i`, a type II domino whose bottom cell is on slice `2i−1`
//! contributes `y_i`. White-pink: a type I domino whose left cell is on
//! slice `2i−1` contributes `x_i`, a type III domino whose right cell is on
//! slice `2i−1` contributes `y_i`.
//!
//! # Interactions
//!
//! For colors `a < b` ("blue" and "red"), every occurrence of one of four
//! relative placements of a blue and a red domino contributes a factor `t`.
//! Each placement is stored as (blue type, red type, blue anchor minus red
//! anchor); two of the four placements per model are the same domino in
//! both colors.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, Poly, Var};
use crate::aztec::{enumerate_ktilings, enumerate_tilings, AztecRegion, Domino, DominoType, KTiling, Tiling, TilingGrid};
use crate::error::{Error, Result};
use crate::partitions::{co_interlaces, interlaces, MayaWindow, Partition, PartitionTuple};

/// Which of the two encodings to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    PurpleGray,
    WhitePink,
}

impl ModelKind {
    pub const ALL: [ModelKind; 2] = [ModelKind::PurpleGray, ModelKind::WhitePink];

    /// Whether a cell covered by a domino of type `ty` is a particle.
    pub fn is_particle(self, ty: DominoType) -> bool {
        match self {
            ModelKind::PurpleGray => matches!(ty, DominoType::I | DominoType::IV),
            ModelKind::WhitePink => matches!(ty, DominoType::II | DominoType::III),
        }
    }

    /// Width and zero position of the window on slice `ℓ`.
    pub fn window_shape(self, m: u32, l: u32) -> (usize, usize) {
        let width = if l % 2 == 0 { m } else { m + 1 } as usize;
        let zero = match self {
            ModelKind::PurpleGray => (m - l / 2) as usize,
            ModelKind::WhitePink => l.div_ceil(2) as usize,
        };
        (width, zero)
    }

    /// Whether consecutive entries `λ^ℓ`, `λ^{ℓ+1}` are related correctly.
    pub fn step_holds(self, l: usize, lower: &Partition, upper: &Partition) -> bool {
        match (self, l % 2 == 0) {
            (ModelKind::PurpleGray, true) => co_interlaces(upper, lower),
            (ModelKind::PurpleGray, false) => interlaces(lower, upper),
            (ModelKind::WhitePink, true) => interlaces(upper, lower),
            (ModelKind::WhitePink, false) => co_interlaces(lower, upper),
        }
    }

    /// The four interaction placements of this model.
    pub fn patterns(self) -> &'static [InteractionPattern; 4] {
        match self {
            ModelKind::PurpleGray => &PURPLE_GRAY_PATTERNS,
            ModelKind::WhitePink => &WHITE_PINK_PATTERNS,
        }
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ModelKind> {
        match s {
            "purple-gray" | "pg" => Ok(ModelKind::PurpleGray),
            "white-pink" | "wp" => Ok(ModelKind::WhitePink),
            _ => Err(Error::Invalid(format!("unknown model {s:?}"))),
        }
    }
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ModelKind::PurpleGray => "purple-gray",
            ModelKind::WhitePink => "white-pink",
        })
    }
}

/// A relative placement of a blue (smaller color) and a red domino that
/// counts as one interaction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InteractionPattern {
    pub blue: DominoType,
    pub red: DominoType,
    /// Blue anchor minus red anchor.
    pub offset: (i32, i32),
}

const fn pat(blue: DominoType, red: DominoType, dx: i32, dy: i32) -> InteractionPattern {
    InteractionPattern { blue, red, offset: (dx, dy) }
}

const PURPLE_GRAY_PATTERNS: [InteractionPattern; 4] = [
    // blue IV directly right of a red I
    pat(DominoType::IV, DominoType::I, 1, 0),
    // the same type II domino in both colors
    pat(DominoType::II, DominoType::II, 0, 0),
    // blue I resting on the top-left of a red II
    pat(DominoType::I, DominoType::II, -1, 1),
    // blue IV stacked on a red II
    pat(DominoType::IV, DominoType::II, 0, 1),
];

const WHITE_PINK_PATTERNS: [InteractionPattern; 4] = [
    // a blue I horizontal over the anchor of a red II
    pat(DominoType::I, DominoType::II, 0, 0),
    // the same type I domino in both colors
    pat(DominoType::I, DominoType::I, 0, 0),
    // blue II one step right of a red III
    pat(DominoType::II, DominoType::III, 1, 0),
    // blue I one step right of a red III
    pat(DominoType::I, DominoType::III, 1, 0),
];

/// A sequence `λ⁰, …, λ^{2m}` of `k`-tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionSequence {
    pub steps: Vec<PartitionTuple>,
}

impl PartitionSequence {
    /// Rank `m` (the sequence has `2m + 1` entries).
    pub fn rank(&self) -> u32 {
        (self.steps.len().saturating_sub(1) / 2) as u32
    }

    /// The single-color sequence of color `c` (1-based).
    pub fn color(&self, c: usize) -> Vec<Partition> {
        self.steps.iter().map(|t| t.0[c - 1].clone()).collect()
    }
}

/// Exponents of `x_1..x_m`, `y_1..y_m`, and `t` in a weight monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TilingWeight {
    pub x_exponents: Vec<u32>,
    pub y_exponents: Vec<u32>,
    pub t_exponent: u64,
}

impl TilingWeight {
    pub fn one(m: u32) -> TilingWeight {
        TilingWeight { x_exponents: vec![0; m as usize], y_exponents: vec![0; m as usize], t_exponent: 0 }
    }

    /// Componentwise product.
    pub fn mul(&self, other: &TilingWeight) -> TilingWeight {
        let add = |a: &[u32], b: &[u32]| a.iter().zip(b).map(|(p, q)| p + q).collect();
        TilingWeight {
            x_exponents: add(&self.x_exponents, &other.x_exponents),
            y_exponents: add(&self.y_exponents, &other.y_exponents),
            t_exponent: self.t_exponent + other.t_exponent,
        }
    }

    /// The weight as a monomial.
    pub fn to_monomial(&self) -> Monomial {
        let xs = self.x_exponents.iter().enumerate().map(|(i, &e)| (Var::x(i as u32 + 1), e as i64));
        let ys = self.y_exponents.iter().enumerate().map(|(i, &e)| (Var::y(i as u32 + 1), e as i64));
        Monomial::from_pairs(xs.chain(ys).chain(std::iter::once((Var::t(), self.t_exponent as i64))))
    }
}

/// The sequence `λ⁰, …, λ^{2m}` of a single tiling.
pub fn tiling_to_sequence(tiling: &Tiling, model: ModelKind) -> Vec<Partition> {
    let m = tiling.rank();
    let region = tiling.region();
    let grid = TilingGrid::from_tiling(tiling);
    (0..=2 * m)
        .map(|l| {
            let (width, zero) = model.window_shape(m, l);
            let bits = region
                .slice_cells(l as i32)
                .into_iter()
                .map(|(a, b)| {
                    let d = grid.domino_covering(a, b).expect("tiling covers the diamond");
                    model.is_particle(d.kind(m))
                })
                .collect();
            MayaWindow { width, zero_position: zero, bits }
                .to_partition()
                .expect("slices of a tiling are balanced")
        })
        .collect()
}

/// The sequence of `k`-tuples of a `k`-tiling.
pub fn ktiling_to_sequence(kt: &KTiling, model: ModelKind) -> PartitionSequence {
    let per_color: Vec<Vec<Partition>> = kt.layers().iter().map(|t| tiling_to_sequence(t, model)).collect();
    let steps = (0..per_color[0].len())
        .map(|l| PartitionTuple(per_color.iter().map(|s| s[l].clone()).collect()))
        .collect();
    PartitionSequence { steps }
}

/// Checks endpoints, window fit, and the alternating (co-)interlacing.
pub fn check_sequence(seq: &[Partition], model: ModelKind) -> Result<()> {
    if seq.len() < 3 || seq.len() % 2 == 0 {
        return Err(Error::Invalid(format!("a sequence must have 2m+1 ≥ 3 entries, got {}", seq.len())));
    }
    let m = (seq.len() / 2) as u32;
    if !seq[0].is_empty() || !seq[seq.len() - 1].is_empty() {
        return Err(Error::Invalid("a sequence must start and end at ∅".into()));
    }
    for (l, p) in seq.iter().enumerate() {
        let (w, z) = model.window_shape(m, l as u32);
        if !MayaWindow::fits(p, w, z) {
            return Err(Error::WindowFit(p.to_string(), w, z));
        }
    }
    for l in 0..seq.len() - 1 {
        if !model.step_holds(l, &seq[l], &seq[l + 1]) {
            return Err(Error::Invalid(format!(
                "entries {l} and {} ({} and {}) are not related as the {model} model requires",
                l + 1,
                seq[l],
                seq[l + 1]
            )));
        }
    }
    Ok(())
}

/// Rebuilds the unique tiling with the given sequence.
pub fn sequence_to_tiling(seq: &[Partition], model: ModelKind) -> Result<Tiling> {
    check_sequence(seq, model)?;
    let m = (seq.len() / 2) as u32;
    let region = AztecRegion::new(m);
    // Particle status of every cell, slice by slice.
    let mut status: HashMap<(i32, i32), bool> = HashMap::new();
    for (l, p) in seq.iter().enumerate() {
        let (w, z) = model.window_shape(m, l as u32);
        let window = MayaWindow::from_partition(p, w, z)?;
        for (cell, bit) in region.slice_cells(l as i32).into_iter().zip(window.bits) {
            status.insert(cell, bit);
        }
    }
    // A gray cell pairs with a white cell of the same status on the next
    // slice up (particles in purple-gray, holes in white-pink) or down.
    // Between two adjacent slices the candidate cells form a path, so the
    // pairing is consecutive once cells are keyed along it.
    let mut dominos = Vec::with_capacity((m * (m + 1)) as usize);
    for l in 0..2 * m as i32 {
        let (g, w) = if l % 2 == 0 { (l, l + 1) } else { (l + 1, l) };
        let upward = w == g + 1;
        let status_here = upward == (model == ModelKind::PurpleGray);
        let mut keyed: Vec<(i32, (i32, i32))> = Vec::new();
        for (a, b) in region.slice_cells(g) {
            if status[&(a, b)] == status_here {
                keyed.push((2 * a, (a, b)));
            }
        }
        for (a, b) in region.slice_cells(w) {
            if status[&(a, b)] == status_here {
                keyed.push((if upward { 2 * a + 1 } else { 2 * a - 1 }, (a, b)));
            }
        }
        keyed.sort();
        if keyed.len() % 2 != 0 {
            return Err(Error::Invalid(format!("slices {l} and {} cannot be paired", l + 1)));
        }
        for pair in keyed.chunks(2) {
            let ((k0, c0), (k1, c1)) = (pair[0], pair[1]);
            if k1 - k0 != 1 {
                return Err(Error::Invalid(format!("slices {l} and {} cannot be paired", l + 1)));
            }
            let d = if c0.1 == c1.1 {
                Domino::horizontal(c0.0.min(c1.0), c0.1)
            } else {
                Domino::vertical(c0.0, c0.1.min(c1.1))
            };
            dominos.push(d);
        }
    }
    let tiling = Tiling::new(m, dominos)?;
    if tiling_to_sequence(&tiling, model) != seq {
        return Err(Error::Invalid("sequence does not correspond to a tiling".into()));
    }
    Ok(tiling)
}

/// Rebuilds a `k`-tiling from its sequence of tuples.
pub fn sequence_to_ktiling(seq: &PartitionSequence, model: ModelKind) -> Result<KTiling> {
    let k = seq.steps.first().map_or(0, PartitionTuple::k);
    if k == 0 || seq.steps.iter().any(|t| t.k() != k) {
        return Err(Error::Invalid("all tuples must have the same k ≥ 1".into()));
    }
    KTiling::new((1..=k).map(|c| sequence_to_tiling(&seq.color(c), model)).collect::<Result<Vec<_>>>()?)
}

/// `i` for a cell on slice `2i − 1`.
fn odd_slice_index(region: &AztecRegion, cell: (i32, i32)) -> usize {
    let s = region.slice(cell.0, cell.1);
    debug_assert!(s % 2 == 1, "weight-carrying cell on an even slice");
    ((s + 1) / 2) as usize
}

/// The `x`/`y` weight of one tiling (`t` exponent 0).
pub fn xy_weight(tiling: &Tiling, model: ModelKind) -> TilingWeight {
    let m = tiling.rank();
    let region = tiling.region();
    let mut w = TilingWeight::one(m);
    for d in tiling.dominos() {
        let (is_x, cell) = match (model, d.kind(m)) {
            (ModelKind::PurpleGray, DominoType::IV) => (true, (d.x, d.y + 1)),
            (ModelKind::PurpleGray, DominoType::II) => (false, (d.x, d.y)),
            (ModelKind::WhitePink, DominoType::I) => (true, (d.x, d.y)),
            (ModelKind::WhitePink, DominoType::III) => (false, (d.x + 1, d.y)),
            _ => continue,
        };
        let i = odd_slice_index(&region, cell);
        if is_x {
            w.x_exponents[i - 1] += 1;
        } else {
            w.y_exponents[i - 1] += 1;
        }
    }
    w
}

/// Interactions between a blue layer and a red layer (blue the smaller
/// color).
pub fn pair_interactions(blue: &TilingGrid, red: &Tiling, model: ModelKind) -> u64 {
    let m = red.rank();
    let mut n = 0;
    for d in red.dominos() {
        let ty = d.kind(m);
        for p in model.patterns().iter().filter(|p| p.red == ty) {
            if blue.type_at_anchor(d.x + p.offset.0, d.y + p.offset.1) == Some(p.blue) {
                n += 1;
            }
        }
    }
    n
}

/// Interactions a single domino of one color takes part in against another
/// layer. `as_blue` says whether the domino's color is the smaller one.
pub fn domino_interactions(d: &Domino, m: u32, as_blue: bool, other: &TilingGrid, model: ModelKind) -> u64 {
    let ty = d.kind(m);
    let mut n = 0;
    for p in model.patterns() {
        let hit = if as_blue {
            p.blue == ty && other.type_at_anchor(d.x - p.offset.0, d.y - p.offset.1) == Some(p.red)
        } else {
            p.red == ty && other.type_at_anchor(d.x + p.offset.0, d.y + p.offset.1) == Some(p.blue)
        };
        n += hit as u64;
    }
    n
}

/// Interaction counts for every color pair `a < b`, keyed `(a, b)` 1-based.
pub fn interaction_matrix(kt: &KTiling, model: ModelKind) -> BTreeMap<(usize, usize), u64> {
    let grids: Vec<TilingGrid> = kt.layers().iter().map(TilingGrid::from_tiling).collect();
    let mut out = BTreeMap::new();
    for a in 0..kt.k() {
        for b in a + 1..kt.k() {
            out.insert((a + 1, b + 1), pair_interactions(&grids[a], &kt.layers()[b], model));
        }
    }
    out
}

/// Total number of interactions.
pub fn interactions(kt: &KTiling, model: ModelKind) -> u64 {
    interaction_matrix(kt, model).values().sum()
}

/// Full weight record of a `k`-tiling.
pub fn tiling_weight(kt: &KTiling, model: ModelKind) -> TilingWeight {
    let mut w = TilingWeight::one(kt.rank());
    for l in kt.layers() {
        w = w.mul(&xy_weight(l, model));
    }
    w.t_exponent = interactions(kt, model);
    w
}

/// `t^{interactions} · ∏ xy_weight(layer)` as a monomial polynomial.
pub fn weight(kt: &KTiling, model: ModelKind) -> Poly {
    Poly::monomial(tiling_weight(kt, model).to_monomial())
}

fn reject_k0(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Invalid("k must be at least 1".into()));
    }
    Ok(())
}

/// Histogram of full weight records over all `k`-tilings of rank `m`.
pub fn weight_histogram(m: u32, k: usize, model: ModelKind) -> Result<BTreeMap<TilingWeight, u64>> {
    reject_k0(k)?;
    let kts = enumerate_ktilings(m, k)?;
    Ok(kts
        .par_iter()
        .fold(BTreeMap::new, |mut acc, kt| {
            *acc.entry(tiling_weight(kt, model)).or_insert(0u64) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (w, c) in b {
                *a.entry(w).or_insert(0) += c;
            }
            a
        }))
}

/// `Σ weight` over all `k`-tilings, by brute force.
pub fn generating_polynomial(m: u32, k: usize, model: ModelKind) -> Result<Poly> {
    let h = weight_histogram(m, k, model)?;
    Ok(Poly::from_counts(h.into_iter().map(|(w, c)| (w.to_monomial(), c))))
}

/// Coefficients of `t^0, t^1, …` of the generating polynomial at
/// `x = y = 1`, by brute force.
pub fn t_distribution(m: u32, k: usize, model: ModelKind) -> Result<Vec<u64>> {
    reject_k0(k)?;
    let tilings = enumerate_tilings(m)?;
    let n = tilings.len();
    let total = n.checked_pow(k as u32).filter(|&t| t <= 1 << 26).ok_or_else(|| Error::CapExceeded(format!("{n}^{k} k-tilings")))?;
    let grids: Vec<TilingGrid> = tilings.iter().map(TilingGrid::from_tiling).collect();
    // Pairwise interaction table, then sum over tuples.
    let pair: Vec<u64> = (0..n * n)
        .into_par_iter()
        .map(|ij| pair_interactions(&grids[ij / n], &tilings[ij % n], model))
        .collect();
    let max = crate::aztec::binom2(k as u64) * crate::aztec::binom2(m as u64 + 1);
    let counts = (0..total)
        .into_par_iter()
        .fold(
            || vec![0u64; max as usize + 1],
            |mut acc, code| {
                let mut idx = Vec::with_capacity(k);
                let mut c = code;
                for _ in 0..k {
                    idx.push(c % n);
                    c /= n;
                }
                let mut e = 0;
                for a in 0..k {
                    for b in a + 1..k {
                        e += pair[idx[k - 1 - a] * n + idx[k - 1 - b]];
                    }
                }
                acc[e as usize] += 1;
                acc
            },
        )
        .reduce(|| vec![0u64; max as usize + 1], |a, b| a.iter().zip(&b).map(|(p, q)| p + q).collect());
    Ok(counts)
}

/// Key of the cross-model histogram: interactions and the summed `x` and
/// `y` exponent vectors.
pub type HistogramKey = (u64, Vec<u32>, Vec<u32>);

/// Number of `k`-tilings per (interactions, `x` exponents, `y` exponents)
/// in the given model; the two models give identical histograms.
pub fn cross_model_histogram(m: u32, k: usize, model: ModelKind) -> Result<BTreeMap<HistogramKey, u64>> {
    Ok(weight_histogram(m, k, model)?
        .into_iter()
        .map(|(w, c)| ((w.t_exponent, w.x_exponents, w.y_exponents), c))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{all_ones, aztec_product, Assignment};
    use crate::golden::{rank3_three_coloring, rank3_tiling};

    fn p(v: &[u32]) -> Partition {
        Partition::from(v)
    }

    fn mono(xs: &[u32], ys: &[u32]) -> TilingWeight {
        TilingWeight { x_exponents: xs.to_vec(), y_exponents: ys.to_vec(), t_exponent: 0 }
    }

    #[test]
    fn golden_sequences() {
        let t = rank3_tiling();
        let pg = tiling_to_sequence(&t, ModelKind::PurpleGray);
        assert_eq!(pg, vec![p(&[]), p(&[1, 1]), p(&[1, 1]), p(&[2, 1]), p(&[1]), p(&[2]), p(&[])]);
        let wp = tiling_to_sequence(&t, ModelKind::WhitePink);
        assert_eq!(wp, vec![p(&[]), p(&[1]), p(&[]), p(&[1]), p(&[1]), p(&[1]), p(&[])]);
    }

    #[test]
    fn golden_weights() {
        let t = rank3_tiling();
        assert_eq!(xy_weight(&t, ModelKind::PurpleGray), mono(&[2, 1, 1], &[0, 2, 2]));
        assert_eq!(xy_weight(&t, ModelKind::WhitePink), mono(&[1, 1, 0], &[1, 0, 1]));
    }

    #[test]
    fn golden_interactions() {
        let kt = rank3_three_coloring();
        let mat = interaction_matrix(&kt, ModelKind::PurpleGray);
        assert_eq!(mat.values().copied().collect::<Vec<_>>(), vec![4, 3, 4]);
        let w = tiling_weight(&kt, ModelKind::PurpleGray);
        assert_eq!(w, TilingWeight { x_exponents: vec![6, 2, 1], y_exponents: vec![2, 4, 3], t_exponent: 11 });
    }

    #[test]
    fn golden_tuples() {
        let seq = ktiling_to_sequence(&rank3_three_coloring(), ModelKind::PurpleGray);
        let tup = |v: [&[u32]; 3]| PartitionTuple(v.iter().map(|x| p(x)).collect());
        assert_eq!(seq.steps[1], tup([&[1, 1], &[1, 1, 1], &[1]]));
        assert_eq!(seq.steps[2], tup([&[1, 1], &[1, 1], &[]]));
        assert_eq!(seq.steps[3], tup([&[2, 1], &[1, 1], &[1]]));
        assert_eq!(seq.steps[4], tup([&[1], &[1], &[]]));
        assert_eq!(seq.steps[5], tup([&[2], &[1], &[]]));
        assert_eq!(seq.steps[6], PartitionTuple::empty(3));
        assert_eq!(sequence_to_ktiling(&seq, ModelKind::PurpleGray).unwrap(), rank3_three_coloring());
    }

    #[test]
    fn empty_sequences() {
        for model in ModelKind::ALL {
            let seq = vec![Partition::empty(); 7];
            let t = sequence_to_tiling(&seq, model).unwrap();
            assert_eq!(xy_weight(&t, model), TilingWeight::one(3));
        }
        let pg = sequence_to_tiling(&vec![Partition::empty(); 7], ModelKind::PurpleGray).unwrap();
        assert_eq!(pg, Tiling::all_horizontal(3));
    }

    #[test]
    fn round_trips() {
        for m in 1..=3 {
            for t in enumerate_tilings(m).unwrap() {
                for model in ModelKind::ALL {
                    let seq = tiling_to_sequence(&t, model);
                    check_sequence(&seq, model).unwrap();
                    assert_eq!(sequence_to_tiling(&seq, model).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn bad_sequences() {
        let e = Partition::empty();
        let seq = vec![e.clone(), p(&[2]), e.clone()];
        assert!(sequence_to_tiling(&seq, ModelKind::PurpleGray).is_err());
        let seq = vec![p(&[1]), e.clone(), e.clone()];
        assert!(sequence_to_tiling(&seq, ModelKind::PurpleGray).is_err());
    }

    #[test]
    fn generating_polynomials() {
        for model in ModelKind::ALL {
            assert_eq!(generating_polynomial(1, 1, model).unwrap(), aztec_product(1, 1));
            assert_eq!(generating_polynomial(2, 1, model).unwrap(), aztec_product(2, 1));
            assert_eq!(generating_polynomial(2, 2, model).unwrap(), aztec_product(2, 2));
            let mut a: Assignment = all_ones(2);
            a.remove(&Var::t());
            let z = generating_polynomial(2, 2, model).unwrap().specialize(&a).unwrap();
            assert_eq!(z.to_string(), "8 + 24*t + 24*t^2 + 8*t^3");
            assert_eq!(t_distribution(2, 2, model).unwrap(), vec![8, 24, 24, 8]);
        }
    }

    #[test]
    fn one_color_has_no_interactions() {
        for t in enumerate_tilings(2).unwrap() {
            let kt = KTiling::new(vec![t]).unwrap();
            assert_eq!(interactions(&kt, ModelKind::PurpleGray), 0);
        }
    }

    #[test]
    fn histograms_agree() {
        let a = cross_model_histogram(2, 2, ModelKind::PurpleGray).unwrap();
        let b = cross_model_histogram(2, 2, ModelKind::WhitePink).unwrap();
        assert_eq!(a, b);
        assert_eq!(cross_model_histogram(3, 1, ModelKind::WhitePink).unwrap().values().sum::<u64>(), 64);
    }

    #[test]
    fn k_zero_rejected() {
        assert!(generating_polynomial(2, 0, ModelKind::PurpleGray).is_err());
    }
}
