//! Lozenge `k`-tilings of the `a × b × c` hexagon.
//!
//! # Paths and tableaux
//!
//! A lozenge tiling is a configuration of the one-color white (`L`) vertex
//! model on `a + c` rows of `a + b` faces: `a` paths enter at the bottom in
//! the first `a` columns, travel up and right, and leave at the top in the
//! last `a` columns. Equivalently, the partitions on the horizontal lines
//! grow by horizontal strips from `∅` to `(b^a)`, i.e. a semistandard
//! tableau of shape `(b^a)` with entries at most `a + c`.
//!
//! The canonical representation is the right-step matrix: `r[i][j]` is the
//! row (1-based, from the bottom) in which path `i` (numbered from the left)
//! takes its `j`-th step to the right. Rows are weakly increasing, and path
//! `i` steps strictly later than path `i + 1` in every column.
//!
//! # Lozenges
//!
//! Each face of the path lattice is a unit rhombus cut along its
//! anti-diagonal into a lower-left (white) and an upper-right (gray)
//! triangle. The gray triangle of a face joins the white triangle of the
//! face above (type 1, the path leaves through the top), of the same face
//! (type 2, no path leaves), or of the face to the right (type 3, the path
//! leaves to the right). The hexagon is the parallelogram of faces minus
//! the triangles in the two corners cut off by `x + y ≤ a` and
//! `x + y ≥ a + b + c`, where every path is frozen vertical. A tiling has
//! `ac` lozenges of type 1, `bc` of type 2, and `ab` of type 3.
//!
//! # Interactions and weights
//!
//! For a `k`-tuple, interactions are the `t`-exponent of the `k`-color
//! white vertex model: for colors `α < β`, one per face where `α` leaves to
//! the right and `β` is present. Row `i` carries `x_i = q^{i−1}`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{int, Monomial, Poly, Rational, Var};
use crate::aztec::binom2;
use crate::error::{Error, Result};
use crate::partitions::{MayaWindow, Partition};
use crate::vertex::{box_exponents, Family, FaceConfig};

/// Largest number of tilings [`enumerate_lozenge`] will list.
pub const DEFAULT_LOZENGE_CAP: u128 = 1 << 22;

/// An `a × b × c` hexagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HexRegion {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl HexRegion {
    pub fn new(a: u32, b: u32, c: u32) -> HexRegion {
        HexRegion { a, b, c }
    }

    /// Faces per row of the path lattice.
    pub fn width(&self) -> u32 {
        self.a + self.b
    }

    /// Rows of the path lattice.
    pub fn rows(&self) -> u32 {
        self.a + self.c
    }

    /// Number of lozenge tilings, `∏_{i≤a, j≤b} (c+i+j−1)/(i+j−1)`.
    pub fn macmahon(&self) -> BigInt {
        let mut acc = Rational::one();
        for i in 1..=self.a as i64 {
            for j in 1..=self.b as i64 {
                acc *= Rational::new(BigInt::from(self.c as i64 + i + j - 1), BigInt::from(i + j - 1));
            }
        }
        acc.to_integer()
    }

    /// Whether the gray triangle of face `(col, row)` lies in the hexagon.
    pub fn contains_gray(&self, col: i64, row: i64) -> bool {
        self.in_parallelogram(col, row) && col + row + 2 > self.a as i64 && col + row + 1 < self.corner_sum()
    }

    /// Whether the white triangle of face `(col, row)` lies in the hexagon.
    pub fn contains_white(&self, col: i64, row: i64) -> bool {
        self.in_parallelogram(col, row) && col + row + 1 > self.a as i64 && col + row < self.corner_sum()
    }

    fn in_parallelogram(&self, col: i64, row: i64) -> bool {
        (0..self.width() as i64).contains(&col) && (0..self.rows() as i64).contains(&row)
    }

    fn corner_sum(&self) -> i64 {
        (self.a + self.b + self.c) as i64
    }
}

impl std::fmt::Display for HexRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}x{}", self.a, self.b, self.c)
    }
}

/// `r[i][j]`: row of the `j`-th right step of path `i` (both 0-based
/// indices into the vectors; rows are 1-based).
pub type RightStepMatrix = Vec<Vec<u32>>;

/// One lozenge tiling, stored as its right-step matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HexTiling {
    pub region: HexRegion,
    pub steps: RightStepMatrix,
}

impl HexTiling {
    /// Validates the tableau conditions.
    pub fn new(region: HexRegion, steps: RightStepMatrix) -> Result<HexTiling> {
        let (a, b) = (region.a as usize, region.b as usize);
        if steps.len() != a || steps.iter().any(|r| r.len() != b) {
            return Err(Error::Invalid(format!("right-step matrix must be {a} x {b}")));
        }
        for (i, row) in steps.iter().enumerate() {
            for (j, &r) in row.iter().enumerate() {
                if r < 1 || r > region.rows() {
                    return Err(Error::Invalid(format!("step row {r} outside 1..={}", region.rows())));
                }
                if j > 0 && row[j - 1] > r {
                    return Err(Error::Invalid(format!("path {} steps out of order", i + 1)));
                }
                if i + 1 < a && steps[i + 1][j] >= r {
                    return Err(Error::Invalid(format!("paths {} and {} collide", i + 1, i + 2)));
                }
            }
        }
        Ok(HexTiling { region, steps })
    }

    /// The tiling of least `q`-weight: path `i` takes all its right steps
    /// in row `a − i`.
    pub fn lowest(region: HexRegion) -> HexTiling {
        let (a, b) = (region.a as usize, region.b as usize);
        HexTiling { region, steps: (0..a).map(|i| vec![(a - i) as u32; b]).collect() }
    }

    /// Path columns on every horizontal line `0..=a+c`.
    pub fn lines(&self) -> Vec<Vec<u32>> {
        (0..=self.region.rows())
            .map(|line| {
                self.steps
                    .iter()
                    .enumerate()
                    .map(|(i, row)| i as u32 + row.iter().filter(|&&r| r <= line).count() as u32)
                    .collect()
            })
            .collect()
    }

    /// The partition chain `∅ = λ⁰ ⊆ … ⊆ λ^{a+c} = (b^a)`.
    pub fn partitions(&self) -> Vec<Partition> {
        (0..=self.region.rows())
            .map(|line| {
                let parts: Vec<u32> =
                    self.steps.iter().rev().map(|row| row.iter().filter(|&&r| r <= line).count() as u32).collect();
                Partition::new(parts).expect("tableau rows give a partition")
            })
            .collect()
    }

    /// Maya window of line `j` (width `a + b`, zero after `a` slots).
    pub fn window(&self, line: u32) -> Result<MayaWindow> {
        MayaWindow::from_partition(&self.partitions()[line as usize], self.region.width() as usize, self.region.a as usize)
    }

    /// Rebuilds a tiling from its partition chain.
    pub fn from_partitions(region: HexRegion, chain: &[Partition]) -> Result<HexTiling> {
        if chain.len() != region.rows() as usize + 1 {
            return Err(Error::Invalid(format!("expected {} partitions", region.rows() + 1)));
        }
        let (a, b) = (region.a as usize, region.b as usize);
        let mut steps = vec![vec![0u32; b]; a];
        for (line, pair) in chain.windows(2).enumerate() {
            for rho in 1..=a {
                let (lo, hi) = (pair[0].part(rho) as usize, pair[1].part(rho) as usize);
                if hi < lo || hi > b {
                    return Err(Error::Invalid("chain is not increasing inside the box".into()));
                }
                for slot in &mut steps[a - rho][lo..hi] {
                    *slot = line as u32 + 1;
                }
            }
        }
        if chain[0].size() != 0 || chain.last().map(|p| p.size()) != Some((a * b) as u32) {
            return Err(Error::Invalid("chain must run from the empty partition to the full box".into()));
        }
        HexTiling::new(region, steps)
    }

    /// Exponent of `q` in the weight `∏ x_i^{#right steps in row i}` with
    /// `x_i = q^{i−1}`.
    pub fn q_exponent(&self) -> u64 {
        self.steps.iter().flatten().map(|&r| (r - 1) as u64).sum()
    }

    /// The lozenges inside the hexagon.
    pub fn to_lozenges(&self) -> LozengeTiling {
        let region = self.region;
        let lines = self.lines();
        let mut lozenges = Vec::new();
        for row in 0..region.rows() as usize {
            let (below, above) = (&lines[row], &lines[row + 1]);
            let mut kind = vec![LozengeType::Two; region.width() as usize];
            for (p, q) in below.iter().zip(above) {
                for col in *p..*q {
                    kind[col as usize] = LozengeType::Three;
                }
                kind[*q as usize] = LozengeType::One;
            }
            for (col, k) in kind.into_iter().enumerate() {
                if region.contains_gray(col as i64, row as i64) {
                    lozenges.push(Lozenge { col: col as i32, row: row as i32, kind: k });
                }
            }
        }
        LozengeTiling { region, lozenges }
    }

    /// Rebuilds the paths from a lozenge tiling.
    pub fn from_lozenges(t: &LozengeTiling) -> Result<HexTiling> {
        let region = t.region;
        let placed: HashMap<(i32, i32), LozengeType> = t.lozenges.iter().map(|l| ((l.col, l.row), l.kind)).collect();
        let mut chain = vec![Partition::empty()];
        for row in 0..region.rows() as i32 {
            let mut bits = Vec::with_capacity(region.width() as usize);
            for col in 0..region.width() as i32 {
                let up = if region.contains_gray(col as i64, row as i64) {
                    match placed.get(&(col, row)) {
                        Some(k) => *k == LozengeType::One,
                        None => return Err(Error::Invalid(format!("face ({col},{row}) has no lozenge"))),
                    }
                } else {
                    // Corner faces are frozen vertical.
                    true
                };
                bits.push(up);
            }
            let w = MayaWindow { width: region.width() as usize, zero_position: region.a as usize, bits };
            chain.push(w.to_partition()?);
        }
        let tiling = HexTiling::from_partitions(region, &chain)?;
        if &tiling.to_lozenges() != t {
            return Err(Error::Invalid("lozenges do not form a tiling of the hexagon".into()));
        }
        Ok(tiling)
    }
}

/// The three lozenge orientations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LozengeType {
    /// Straddles a horizontal lattice edge (a path going up).
    One,
    /// One face of the path lattice (no path leaving it).
    Two,
    /// Straddles a vertical lattice edge (a path going right).
    Three,
}

/// A lozenge, named by the face whose gray triangle it contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lozenge {
    pub col: i32,
    pub row: i32,
    pub kind: LozengeType,
}

/// A lozenge tiling of a hexagon, lozenges sorted by row then column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LozengeTiling {
    pub region: HexRegion,
    pub lozenges: Vec<Lozenge>,
}

impl LozengeTiling {
    /// Counts of types 1, 2, 3.
    pub fn type_counts(&self) -> [usize; 3] {
        let mut out = [0; 3];
        for l in &self.lozenges {
            out[l.kind as usize] += 1;
        }
        out
    }
}

/// A `k`-tuple of tilings of one hexagon.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KLozengeTiling {
    pub region: HexRegion,
    pub layers: Vec<HexTiling>,
}

impl KLozengeTiling {
    pub fn new(layers: Vec<HexTiling>) -> Result<KLozengeTiling> {
        let region = layers.first().ok_or_else(|| Error::Invalid("no layers".into()))?.region;
        if layers.iter().any(|l| l.region != region) {
            return Err(Error::Invalid("layers tile different hexagons".into()));
        }
        Ok(KLozengeTiling { region, layers })
    }

    pub fn k(&self) -> usize {
        self.layers.len()
    }
}

/// Every tiling of the hexagon (tableaux listed in lexicographic order).
pub fn enumerate_lozenge(region: HexRegion) -> Result<Vec<HexTiling>> {
    let count = region.macmahon();
    if count > BigInt::from(DEFAULT_LOZENGE_CAP) {
        return Err(Error::CapExceeded(format!("{region} has {count} tilings")));
    }
    let (a, b) = (region.a as usize, region.b as usize);
    let mut out = Vec::new();
    let mut steps = vec![vec![0u32; b]; a];
    // Fill from the rightmost path (smallest entries) leftwards.
    fn fill(region: HexRegion, steps: &mut RightStepMatrix, pos: usize, out: &mut Vec<HexTiling>) {
        let (a, b) = (region.a as usize, region.b as usize);
        if pos == a * b {
            out.push(HexTiling { region, steps: steps.clone() });
            return;
        }
        let i = a - 1 - pos / b;
        let j = pos % b;
        let mut lo = if j > 0 { steps[i][j - 1] } else { 1 };
        if i + 1 < a {
            lo = lo.max(steps[i + 1][j] + 1);
        }
        // Leave room for the paths to the left.
        let hi = region.rows() - i as u32;
        for r in lo..=hi {
            steps[i][j] = r;
            fill(region, steps, pos + 1, out);
        }
    }
    if a == 0 || b == 0 {
        return Ok(vec![HexTiling { region, steps }]);
    }
    fill(region, &mut steps, 0, &mut out);
    out.sort();
    Ok(out)
}

/// Per-row interval data used for interaction counts.
fn row_spans(t: &HexTiling) -> Vec<Vec<(u32, u32)>> {
    let lines = t.lines();
    lines.windows(2).map(|w| w[0].iter().zip(&w[1]).map(|(&p, &q)| (p, q)).collect()).collect()
}

/// Interactions in one row between a blue and a red color (blue smaller):
/// faces where blue leaves to the right while red is present.
pub fn row_overlap(blue: &[(u32, u32)], red: &[(u32, u32)]) -> u64 {
    // Blue leaves right on faces [p, q); red occupies faces [p', q'].
    let mut n = 0u64;
    for &(p, q) in blue {
        for &(rp, rq) in red {
            let lo = p.max(rp);
            let hi = q.min(rq + 1);
            if hi > lo {
                n += (hi - lo) as u64;
            }
        }
    }
    n
}

/// Interactions between a blue and a red tiling (blue the smaller color).
pub fn pair_lozenge_interactions(blue: &HexTiling, red: &HexTiling) -> u64 {
    row_spans(blue).iter().zip(&row_spans(red)).map(|(b, r)| row_overlap(b, r)).sum()
}

/// Interactions of one row against the row spans of another color.
pub fn row_interactions_between(blue: &HexTiling, red: &HexTiling, row: usize) -> u64 {
    let (b, r) = (&row_spans(blue)[row], &row_spans(red)[row]);
    row_overlap(b, r)
}

/// Total interactions of a `k`-tuple.
pub fn lozenge_interactions(kl: &KLozengeTiling) -> u64 {
    let mut n = 0;
    for a in 0..kl.k() {
        for b in a + 1..kl.k() {
            n += pair_lozenge_interactions(&kl.layers[a], &kl.layers[b]);
        }
    }
    n
}

/// Interactions read from the `k`-color white vertex weights row by row;
/// the canonical definition the pattern count above must agree with.
pub fn lattice_interactions(kl: &KLozengeTiling) -> Result<u64> {
    let region = kl.region;
    let k = kl.k();
    let lines: Vec<Vec<Vec<u32>>> = kl.layers.iter().map(|l| l.lines()).collect();
    let mut total = 0i64;
    for row in 0..region.rows() as usize {
        let mut horiz = 0u32;
        for col in 0..region.width() {
            let mut face = FaceConfig::new(0, horiz, 0, 0);
            for (c, color_lines) in lines.iter().enumerate() {
                if color_lines[row].contains(&col) {
                    face.i |= 1 << c;
                }
                if color_lines[row + 1].contains(&col) {
                    face.k |= 1 << c;
                }
            }
            // Colors present leave right unless they leave on top.
            face.l = (face.i | face.j) & !face.k;
            let (_, b) = box_exponents(Family::L, k, face)
                .ok_or_else(|| Error::Invalid(format!("invalid face in row {row}, column {col}")))?;
            total += b;
            horiz = face.l;
        }
    }
    Ok(total as u64)
}

/// The `q`/`t` weight `q^{Σ q-exponents} t^{interactions}`.
pub fn lozenge_weight(kl: &KLozengeTiling) -> Monomial {
    let q: i64 = kl.layers.iter().map(|l| l.q_exponent() as i64).sum();
    Monomial::from_pairs([(Var::q(), q), (Var::t(), lozenge_interactions(kl) as i64)])
}

/// `Σ q^{weight} t^{interactions}` over all `k`-tuples, by row transfer over
/// the `k`-color white vertex model.
pub fn hex_generating_polynomial(region: HexRegion, k: usize) -> Result<Poly> {
    if k == 0 {
        return Err(Error::Invalid("at least one color is required".into()));
    }
    let width = region.width() as usize;
    if width > 31 {
        return Err(Error::CapExceeded(format!("{region} is too wide for the transfer")));
    }
    let low = (1u32 << region.a) - 1;
    let bottom = vec![low; k];
    let top = vec![low << region.b; k];
    let mut states: HashMap<Vec<u32>, Poly> = HashMap::from([(bottom, Poly::one())]);
    for r in 0..region.rows() {
        let row = crate::vertex::RowSpec { family: Family::L, var: Var::q(), left: 0, right: 0 };
        let mut next: HashMap<Vec<u32>, Poly> = HashMap::new();
        for (state, poly) in &states {
            for (line, a, b) in crate::vertex::row_transitions(&row, k, width, state) {
                let mono = Monomial::from_pairs([(Var::q(), a * r as i64), (Var::t(), b)]);
                *next.entry(line).or_insert_with(Poly::zero) += &poly.mul_monomial(&mono);
            }
        }
        states = next;
    }
    Ok(states.remove(&top).unwrap_or_else(Poly::zero))
}

/// Exhaustive sum for `k = 2` from the pair table (a cross-check of the
/// transfer).
pub fn hex_generating_polynomial_enumerated(region: HexRegion) -> Result<Poly> {
    let tilings = enumerate_lozenge(region)?;
    let counts: BTreeMap<(u64, u64), u64> = tilings
        .par_iter()
        .map(|b| {
            let mut local = BTreeMap::new();
            for r in &tilings {
                *local.entry((b.q_exponent() + r.q_exponent(), pair_lozenge_interactions(b, r))).or_insert(0) += 1;
            }
            local
        })
        .reduce(BTreeMap::new, |mut acc, m| {
            for (key, v) in m {
                *acc.entry(key).or_insert(0) += v;
            }
            acc
        });
    Ok(Poly::from_counts(
        counts
            .into_iter()
            .map(|((q, t), n)| (Monomial::from_pairs([(Var::q(), q as i64), (Var::t(), t as i64)]), n)),
    ))
}

/// Flip across the vertical axis and reverse the colors: a `k`-tiling of
/// `a × b × c` becomes one of `c × b × a`. Types 2 and 3 swap; the face of
/// a lozenge's gray triangle moves from column `x` to `a + b + c − x − row − 2`.
pub fn hex_flip_symmetry(kl: &KLozengeTiling) -> Result<KLozengeTiling> {
    let r = kl.region;
    let flipped = HexRegion::new(r.c, r.b, r.a);
    let s = (r.a + r.b + r.c) as i32;
    let layers = kl
        .layers
        .iter()
        .rev()
        .map(|layer| {
            let mut lozenges: Vec<Lozenge> = layer
                .to_lozenges()
                .lozenges
                .into_iter()
                .map(|l| Lozenge {
                    col: s - l.col - l.row - 2,
                    row: l.row,
                    kind: match l.kind {
                        LozengeType::One => LozengeType::One,
                        LozengeType::Two => LozengeType::Three,
                        LozengeType::Three => LozengeType::Two,
                    },
                })
                .collect();
            lozenges.sort_by_key(|l| (l.row, l.col));
            HexTiling::from_lozenges(&LozengeTiling { region: flipped, lozenges })
        })
        .collect::<Result<Vec<_>>>()?;
    KLozengeTiling::new(layers)
}

/// Interaction shift under [`hex_flip_symmetry`]: `C(k,2)(bc − ab)`.
pub fn flip_interaction_shift(region: HexRegion, k: usize) -> i64 {
    let (a, b, c) = (region.a as i64, region.b as i64, region.c as i64);
    binom2(k as u64) as i64 * (b * c - a * b)
}

/// Hexagon reached by the `t = 0` bijection: `ka × b × (c − (k−1)a)`.
pub fn t0_target(region: HexRegion, k: usize) -> Option<HexRegion> {
    let shrink = (k as u32 - 1) * region.a;
    (shrink <= region.c).then(|| HexRegion::new(k as u32 * region.a, region.b, region.c - shrink))
}

/// Merges a zero-interaction `k`-tiling: path `i` of color `α` moves right
/// by `(i−1)(k−1) + α − 1` columns and becomes path `(i−1)k + α`.
pub fn hex_t0_forward(kl: &KLozengeTiling) -> Result<HexTiling> {
    let n = lozenge_interactions(kl);
    if n != 0 {
        return Err(Error::Interactions(format!("input has {n} interactions")));
    }
    let k = kl.k();
    let target = t0_target(kl.region, k).ok_or_else(|| Error::Invalid("no zero-interaction tilings".into()))?;
    let a = kl.region.a as usize;
    let mut steps = vec![Vec::new(); a * k];
    for (alpha, layer) in kl.layers.iter().enumerate() {
        for (i, row) in layer.steps.iter().enumerate() {
            steps[i * k + alpha] = row.clone();
        }
    }
    HexTiling::new(target, steps)
}

/// Splits a tiling of `ka × b × (c − (k−1)a)` back into `k` colors.
pub fn hex_t0_inverse(t: &HexTiling, k: usize, region: HexRegion) -> Result<KLozengeTiling> {
    if t0_target(region, k) != Some(t.region) {
        return Err(Error::Invalid(format!("{} is not the t = 0 target of {region}", t.region)));
    }
    let a = region.a as usize;
    let layers = (0..k)
        .map(|alpha| HexTiling::new(region, (0..a).map(|i| t.steps[i * k + alpha].clone()).collect()))
        .collect::<Result<Vec<_>>>()?;
    KLozengeTiling::new(layers)
}

/// Merges a maximum-interaction `k`-tiling into a tiling of `a × kb × c` by
/// interleaving right steps: `r_{i,(j−1)k+α} = r^{(α)}_{i,j}`.
pub fn hex_tinf_forward(kl: &KLozengeTiling) -> Result<HexTiling> {
    let r = kl.region;
    let k = kl.k();
    let max = binom2(k as u64) * (r.a * r.b) as u64;
    let n = lozenge_interactions(kl);
    if n != max {
        return Err(Error::Interactions(format!("input has {n} of {max} interactions")));
    }
    let steps: RightStepMatrix = (0..r.a as usize)
        .map(|i| (0..(r.b as usize * k)).map(|s| kl.layers[s % k].steps[i][s / k]).collect())
        .collect();
    HexTiling::new(HexRegion::new(r.a, k as u32 * r.b, r.c), steps)
        .map_err(|e| Error::Invalid(format!("right steps do not interleave: {e}")))
}

/// De-interleaves a tiling of `a × kb × c` into `k` colors.
pub fn hex_tinf_inverse(t: &HexTiling, k: usize) -> Result<KLozengeTiling> {
    let r = t.region;
    if k == 0 || r.b % k as u32 != 0 {
        return Err(Error::Invalid(format!("{r} does not split into {k} colors")));
    }
    let region = HexRegion::new(r.a, r.b / k as u32, r.c);
    let layers = (0..k)
        .map(|alpha| {
            HexTiling::new(region, t.steps.iter().map(|row| row.iter().skip(alpha).step_by(k).copied().collect()).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    KLozengeTiling::new(layers)
}

/// One row of the table of 2-color generating polynomials at `q = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub region: HexRegion,
    /// Coefficients of `t^0, t^1, …`.
    pub coefficients: Vec<u64>,
}

/// The published 2-color generating polynomials at `q = 1`.
pub fn table1() -> Vec<TableRow> {
    let rows: [((u32, u32, u32), &[u64]); 18] = [
        ((1, 1, 1), &[1, 3]),
        ((1, 1, 2), &[3, 6]),
        ((1, 1, 3), &[6, 10]),
        ((1, 2, 1), &[1, 3, 5]),
        ((1, 2, 2), &[6, 15, 15]),
        ((1, 2, 3), &[20, 45, 35]),
        ((2, 1, 1), &[0, 3, 6]),
        ((2, 1, 2), &[1, 15, 20]),
        ((2, 1, 3), &[5, 45, 50]),
        ((2, 2, 1), &[0, 0, 6, 15, 15]),
        ((2, 2, 2), &[1, 15, 104, 175, 105]),
        ((2, 2, 3), &[15, 175, 770, 1050, 490]),
        ((3, 1, 1), &[0, 0, 6, 10]),
        ((3, 1, 2), &[0, 5, 45, 50]),
        ((3, 1, 3), &[1, 35, 189, 175]),
        ((3, 2, 1), &[0, 0, 0, 0, 20, 45, 35]),
        ((3, 2, 2), &[0, 0, 15, 175, 770, 1050, 490]),
        ((3, 2, 3), &[1, 35, 594, 3850, 10689, 11340, 4116]),
    ];
    rows.iter()
        .map(|&((a, b, c), coeffs)| TableRow { region: HexRegion::new(a, b, c), coefficients: coeffs.to_vec() })
        .collect()
}

/// Coefficients of `t^0, t^1, …` of a polynomial in `q, t` at `q = 1`.
pub fn t_coefficients_at_q_one(p: &Poly) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for (m, c) in p.terms() {
        let e = m.exponent(Var::t()) as usize;
        if out.len() <= e {
            out.resize(e + 1, 0);
        }
        out[e] += c.to_integer().try_into().unwrap_or(u64::MAX);
    }
    out
}

/// The coefficient of `t^e` as a polynomial in `q`.
pub fn t_coefficient(p: &Poly, e: i64) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        if m.exponent(Var::t()) == e {
            out.add_term(Monomial::var_pow(Var::q(), m.exponent(Var::q())), c.clone());
        }
    }
    out
}

/// `q^{shift} ∏_{i≤rows, j≤cols} (1 − q^{offset+i+j−1})/(1 − q^{i+j−1})` as a
/// polynomial in `q` (zero when some numerator factor is `1 − q^0`).
pub fn q_box_product(shift: i64, rows: u32, cols: u32, offset: i64) -> Poly {
    // Work with dense integer coefficient vectors; every quotient is exact.
    let mut coeffs: Vec<BigInt> = vec![BigInt::one()];
    let mut dens = Vec::new();
    for i in 1..=rows as i64 {
        for j in 1..=cols as i64 {
            let e = offset + i + j - 1;
            if e == 0 {
                return Poly::zero();
            }
            coeffs = mul_one_minus(&coeffs, e);
            dens.push(i + j - 1);
        }
    }
    for d in dens {
        coeffs = div_one_minus(&coeffs, d);
    }
    let mut out = Poly::zero();
    for (n, c) in coeffs.into_iter().enumerate() {
        if !c.is_zero() {
            out.add_term(Monomial::var_pow(Var::q(), n as i64 + shift), Rational::from_integer(c));
        }
    }
    out
}

fn mul_one_minus(p: &[BigInt], e: i64) -> Vec<BigInt> {
    // The exponent can be negative only when the whole product vanishes,
    // which the caller has already excluded by checking for e = 0 first;
    // negative exponents are folded in by multiplying by −q^{e}(1 − q^{−e}).
    if e < 0 {
        let shifted = mul_one_minus(p, -e);
        // (1 − q^{e}) = −q^{e}(1 − q^{−e}); track the q^{e} by dropping the
        // leading zeros, which must be present for the final product to be
        // a polynomial.
        let drop = (-e) as usize;
        return shifted.iter().skip(drop).map(|c| -c).collect();
    }
    let e = e as usize;
    let mut out = vec![BigInt::zero(); p.len() + e];
    for (n, c) in p.iter().enumerate() {
        out[n] += c;
        out[n + e] -= c;
    }
    out
}

fn div_one_minus(p: &[BigInt], d: i64) -> Vec<BigInt> {
    // c_n = p_n + c_{n−d}.
    let d = d as usize;
    let mut out: Vec<BigInt> = Vec::with_capacity(p.len());
    for n in 0..p.len() {
        let prev = if n >= d { out[n - d].clone() } else { BigInt::zero() };
        out.push(&p[n] + prev);
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// The `t = 1` specialization:
/// `q^{kC(a,2)b} (∏∏ (1 − q^{c+i+j−1})/(1 − q^{i+j−1}))^k`.
pub fn closed_form_t_one(region: HexRegion, k: usize) -> Poly {
    let one = q_box_product(0, region.a, region.b, region.c as i64);
    let mut acc = Poly::monomial(Monomial::var_pow(Var::q(), k as i64 * binom2(region.a as u64) as i64 * region.b as i64));
    for _ in 0..k {
        acc = &acc * &one;
    }
    acc
}

/// The `t^0` coefficient:
/// `q^{C(ka,2)b} ∏_{i≤ka, j≤b} (1 − q^{c−(k−1)a+i+j−1})/(1 − q^{i+j−1})`,
/// the `q`-count of tilings of the merged `ka × b × (c − (k−1)a)` hexagon.
/// The leading power is that hexagon's lowest weight.
pub fn closed_form_t_zero(region: HexRegion, k: usize) -> Poly {
    let shift = binom2(k as u64 * region.a as u64) as i64 * region.b as i64;
    let offset = region.c as i64 - (k as i64 - 1) * region.a as i64;
    if offset < 0 {
        return Poly::zero();
    }
    q_box_product(shift, k as u32 * region.a, region.b, offset)
}

/// The top coefficient (of `t^{C(k,2)ab}`):
/// `q^{kC(a,2)b} ∏_{i≤a, j≤kb} (1 − q^{c+i+j−1})/(1 − q^{i+j−1})`.
pub fn closed_form_t_top(region: HexRegion, k: usize) -> Poly {
    let shift = k as i64 * binom2(region.a as u64) as i64 * region.b as i64;
    q_box_product(shift, region.a, k as u32 * region.b, region.c as i64)
}

/// Integer value of a polynomial at `q = 1, t = 1`.
pub fn total_count(p: &Poly) -> BigInt {
    p.terms().map(|(_, c)| c.to_integer()).fold(BigInt::zero(), |a, b| a + b)
}

/// Helper for tests and the CLI: `int(n)` as a polynomial constant.
pub fn constant(n: i64) -> Poly {
    Poly::constant(int(n))
}
