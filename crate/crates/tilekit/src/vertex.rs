//! Colored vertex models: the five weight families, Yang–Baxter checks, and
//! lattice partition functions computed by row transfer.
//!
//! # Faces
//!
//! A face carries four color vectors in `{0,1}^k`, stored as bit masks
//! (bit `i−1` is color `i`). For the box families `L, L′, M, M′` they are
//! the bottom `I`, left `J`, top `K` and right `L` edges and paths travel
//! south-west to north-east. For the cross `R′` they are bottom-left `I`,
//! top-left `J`, top-right `K` and bottom-right `L`, with paths travelling
//! left to right. Every nonzero weight needs `I + J = K + L` colorwise.
//!
//! # Algebraic weights
//!
//! With `φ(A, B) = Σ_{i<j} A_i B_j` and `x̄ = 1/(x t^{k−1})`:
//!
//! | family | weight |
//! |--------|--------|
//! | `L_x`  | `∏ 1[I_i+J_i≠2] · x^{|L|} t^{φ(L, I+J)}` |
//! | `L′_x` | `∏ 1[K_i≥J_i] · x^{|L|} t^{φ(L, K−J)}` |
//! | `M_x`  | `x^k t^{C(k,2)} L_{x̄}` |
//! | `M′_x` | `x^k L′_{1/x}` |
//! | `R′`   | `∏ 1[I_i+J_i≠2] · w^{|L|} (−w; t)^{−1}_{|K|+|L|} t^{φ(L, K+L)}` with `w = x/y` |
//!
//! # Graphical weights
//!
//! Each family is also a product of one-color weights at shifted
//! parameters, one factor per color `i`, where the shift counts the colors
//! larger than `i` in some state ([`GraphicalCounters`]).
//!
//! # Lattices
//!
//! A [`LatticeSpec`] is a stack of rows of `n` faces with fixed boundary
//! labels. Horizontal line `j` (between rows `j` and `j+1`, line 0 at the
//! bottom) is a `k`-tuple of Maya windows of width `n` whose zero line sits
//! after `zero_markers[j]` columns. The partition function is computed by
//! transferring a map from line states to polynomials up through the rows.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{pochhammer, rat_pow, Monomial, Poly, Rational, Var};
use crate::error::{Error, Result};
use crate::partitions::{MayaWindow, Partition, PartitionTuple};

/// The five vertex families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    L,
    LPrime,
    M,
    MPrime,
    RPrime,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::L, Family::LPrime, Family::M, Family::MPrime, Family::RPrime];
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::L => "L",
            Family::LPrime => "L'",
            Family::M => "M",
            Family::MPrime => "M'",
            Family::RPrime => "R'",
        })
    }
}

/// A face: four color masks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FaceConfig {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

impl FaceConfig {
    pub fn new(i: u32, j: u32, k: u32, l: u32) -> FaceConfig {
        FaceConfig { i, j, k, l }
    }

    /// Builds a face from `0/1` vectors, color 1 first.
    pub fn from_vectors(i: &[u8], j: &[u8], k: &[u8], l: &[u8]) -> FaceConfig {
        FaceConfig::new(to_mask(i), to_mask(j), to_mask(k), to_mask(l))
    }

    /// Colorwise path conservation `I + J = K + L`.
    pub fn conserves(&self, k: usize) -> bool {
        (0..k).all(|c| bit(self.i, c) + bit(self.j, c) == bit(self.k, c) + bit(self.l, c))
    }

    /// All `2^{4k}` faces.
    pub fn all(k: usize) -> impl Iterator<Item = FaceConfig> {
        let n = 1u32 << k;
        (0..n.pow(4)).map(move |c| FaceConfig::new(c % n, (c / n) % n, (c / n / n) % n, c / n / n / n))
    }
}

/// Converts a `0/1` vector (color 1 first) to a mask.
pub fn to_mask(v: &[u8]) -> u32 {
    v.iter().enumerate().fold(0, |acc, (c, &b)| acc | ((b as u32 & 1) << c))
}

fn bit(mask: u32, c: usize) -> u32 {
    (mask >> c) & 1
}

fn size(mask: u32) -> i64 {
    mask.count_ones() as i64
}

/// `φ(A, B) = Σ_{i<j} A_i B_j`.
pub fn phi(a: u32, b: u32, k: usize) -> i64 {
    (0..k).filter(|&c| bit(a, c) == 1).map(|c| size(b >> (c + 1))).sum()
}

fn all_colors(k: usize) -> u32 {
    (1u32 << k) - 1
}

/// Exponents `(a, b)` with `weight = x^a t^b` for the monomial families, or
/// `None` when the weight is zero.
pub fn box_exponents(family: Family, k: usize, f: FaceConfig) -> Option<(i64, i64)> {
    if !f.conserves(k) {
        return None;
    }
    let kk = k as i64;
    match family {
        Family::L => (f.i & f.j == 0).then(|| (size(f.l), phi(f.l, f.i | f.j, k))),
        Family::LPrime => (f.j & !f.k == 0).then(|| (size(f.l), phi(f.l, f.k & !f.j, k))),
        Family::M => (f.i & f.j == 0)
            .then(|| (kk - size(f.l), kk * (kk - 1) / 2 - (kk - 1) * size(f.l) + phi(f.l, f.i | f.j, k))),
        Family::MPrime => (f.j & !f.k == 0).then(|| (kk - size(f.l), phi(f.l, f.k & !f.j, k))),
        Family::RPrime => None,
    }
}

/// Numeric parameters of a weight evaluation. `y` is used by `R′` only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexParams {
    pub x: Rational,
    pub y: Rational,
    pub t: Rational,
}

impl VertexParams {
    pub fn new(x: Rational, y: Rational, t: Rational) -> VertexParams {
        VertexParams { x, y, t }
    }
}

fn nonzero(r: &Rational, what: &str) -> Result<()> {
    if r.is_zero() {
        return Err(Error::DivisionByZero(what.into()));
    }
    Ok(())
}

/// `R′` with its `x/y` slot set to `w`.
pub fn r_prime_at(k: usize, w: &Rational, t: &Rational, f: FaceConfig) -> Result<Rational> {
    if !f.conserves(k) || f.i & f.j != 0 {
        return Ok(Rational::zero());
    }
    let den = pochhammer(&-w.clone(), t, (size(f.k) + size(f.l)) as u32);
    nonzero(&den, "(-w;t)_n vanishes")?;
    Ok(rat_pow(w, size(f.l))? * rat_pow(t, phi(f.l, f.k | f.l, k))? / den)
}

/// The algebraic weight of a face.
pub fn weight_algebraic(family: Family, k: usize, p: &VertexParams, f: FaceConfig) -> Result<Rational> {
    if family == Family::RPrime {
        nonzero(&p.y, "y = 0")?;
        return r_prime_at(k, &(&p.x / &p.y), &p.t, f);
    }
    match box_exponents(family, k, f) {
        None => Ok(Rational::zero()),
        Some((a, b)) => Ok(rat_pow(&p.x, a)? * rat_pow(&p.t, b)?),
    }
}

/// Per-color counters used by the graphical weights; entry `i−1` belongs to
/// color `i` and counts colors larger than `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphicalCounters {
    /// Colors present on the face.
    pub delta: Vec<u32>,
    /// Colors going straight from bottom to top.
    pub delta_prime: Vec<u32>,
    /// Colors not leaving on the right.
    pub alpha: Vec<u32>,
    /// Colors leaving on the top.
    pub beta: Vec<u32>,
    /// Colors going straight from bottom to top (for `M′`).
    pub gamma: Vec<u32>,
    /// Colors present on the cross.
    pub epsilon_prime: Vec<u32>,
}

impl GraphicalCounters {
    pub fn of(k: usize, f: FaceConfig) -> GraphicalCounters {
        let above = |mask: u32, c: usize| (mask >> (c + 1)).count_ones();
        let present = f.i | f.j | f.k | f.l;
        let vertical = f.i & f.k & !f.j & !f.l;
        let not_right = all_colors(k) & !f.l;
        let per = |mask: u32| (0..k).map(|c| above(mask, c)).collect::<Vec<_>>();
        GraphicalCounters {
            delta: per(present),
            delta_prime: per(vertical),
            alpha: per(not_right),
            beta: per(f.k),
            gamma: per(vertical),
            epsilon_prime: per(present),
        }
    }
}

/// One-color face of color `c`: `(i, j, k, l)` bits.
fn one_color(f: FaceConfig, c: usize) -> (u32, u32, u32, u32) {
    (bit(f.i, c), bit(f.j, c), bit(f.k, c), bit(f.l, c))
}

/// The one-color weights at parameter `z`.
fn one_color_weight(family: Family, z: &Rational, face: (u32, u32, u32, u32)) -> Result<Rational> {
    let (i, j, k, l) = face;
    if i + j != k + l {
        return Ok(Rational::zero());
    }
    let allowed = match family {
        Family::L | Family::M | Family::RPrime => i + j != 2,
        Family::LPrime | Family::MPrime => k >= j,
    };
    if !allowed {
        return Ok(Rational::zero());
    }
    match family {
        Family::L | Family::LPrime => rat_pow(z, l as i64),
        Family::M | Family::MPrime => rat_pow(z, 1 - l as i64),
        Family::RPrime => {
            let den = pochhammer(&-z.clone(), &Rational::one(), k + l);
            nonzero(&den, "1 + w = 0")?;
            Ok(rat_pow(z, l as i64)? / den)
        }
    }
}

/// The graphical (product-of-one-color) weight of a face.
pub fn weight_graphical(family: Family, k: usize, p: &VertexParams, f: FaceConfig) -> Result<Rational> {
    if !f.conserves(k) {
        return Ok(Rational::zero());
    }
    let g = GraphicalCounters::of(k, f);
    let t = &p.t;
    let mut acc = Rational::one();
    for c in 0..k {
        let face = one_color(f, c);
        let factor = match family {
            Family::L => one_color_weight(family, &(&p.x * rat_pow(t, g.delta[c] as i64)?), face)?,
            Family::LPrime => one_color_weight(family, &(&p.x * rat_pow(t, g.delta_prime[c] as i64)?), face)?,
            Family::M => {
                let shift = g.alpha[c] as i64 - g.beta[c] as i64;
                rat_pow(t, g.beta[c] as i64)? * one_color_weight(family, &(&p.x * rat_pow(t, shift)?), face)?
            }
            Family::MPrime => {
                let s = g.gamma[c] as i64;
                rat_pow(t, s)? * one_color_weight(family, &(&p.x * rat_pow(t, -s)?), face)?
            }
            Family::RPrime => {
                nonzero(&p.y, "y = 0")?;
                let w = &p.x / &p.y * rat_pow(t, g.epsilon_prime[c] as i64)?;
                one_color_weight(family, &w, face)?
            }
        };
        if factor.is_zero() {
            return Ok(factor);
        }
        acc *= factor;
    }
    Ok(acc)
}

/// Exact values that the Yang–Baxter contraction can run over.
pub trait Value: Clone + PartialEq + Send + Sync {
    fn zero_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn times(&self, other: &Self) -> Self;
    fn accumulate(&mut self, other: &Self);
}

impl Value for Rational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

impl Value for Poly {
    fn zero_value() -> Self {
        Poly::zero()
    }
    fn is_zero_value(&self) -> bool {
        Poly::is_zero(self)
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

/// Nonzero entries of one family at fixed parameters.
pub type WeightTable<T> = Vec<(FaceConfig, T)>;

/// Which Yang–Baxter identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum YbeTriple {
    /// `M_x` below, `L′_y` above, cross with `w = 1/(x y t^{k−1})`.
    MLPrime,
    /// `L_x` below, `M′_y` above, cross with `w = x y`.
    LMPrime,
}

impl YbeTriple {
    pub const ALL: [YbeTriple; 2] = [YbeTriple::MLPrime, YbeTriple::LMPrime];

    /// `(lower, upper)` box families.
    pub fn families(self) -> (Family, Family) {
        match self {
            YbeTriple::MLPrime => (Family::M, Family::LPrime),
            YbeTriple::LMPrime => (Family::L, Family::MPrime),
        }
    }

    /// The cross parameter `w` at numeric `(x, y, t)`.
    pub fn cross_parameter(self, k: usize, x: &Rational, y: &Rational, t: &Rational) -> Result<Rational> {
        match self {
            YbeTriple::MLPrime => {
                let d = x * y * rat_pow(t, k as i64 - 1)?;
                nonzero(&d, "x y t^{k-1} = 0")?;
                Ok(d.recip())
            }
            YbeTriple::LMPrime => Ok(x * y),
        }
    }

    /// The cross parameter as a monomial in `x = x_1`, `y = y_1`, `t`.
    pub fn cross_monomial(self, k: usize) -> Monomial {
        match self {
            YbeTriple::MLPrime => {
                Monomial::from_pairs([(Var::x(1), -1), (Var::y(1), -1), (Var::t(), 1 - k as i64)])
            }
            YbeTriple::LMPrime => Monomial::from_pairs([(Var::x(1), 1), (Var::y(1), 1)]),
        }
    }
}

/// Boundary of a Yang–Baxter diagram: `(I1, J1, K1, I3, J3, K3)`.
pub type YbeBoundary = [u32; 6];

/// Both sides of the identity as sparse maps from boundary to value.
///
/// Left: `Σ R(I1,J1,a,b) · lower(K1,b,c,J3) · upper(c,a,K3,I3)`.
/// Right: `Σ upper(K1,I1,c,b′) · lower(c,J1,K3,a′) · R(b′,a′,I3,J3)`.
pub fn ybe_sides<T: Value>(
    cross: &WeightTable<T>,
    lower: &WeightTable<T>,
    upper: &WeightTable<T>,
) -> (BTreeMap<YbeBoundary, T>, BTreeMap<YbeBoundary, T>) {
    let mut lower_by_j: HashMap<u32, Vec<&(FaceConfig, T)>> = HashMap::new();
    let mut lower_by_i: HashMap<u32, Vec<&(FaceConfig, T)>> = HashMap::new();
    for e in lower {
        lower_by_j.entry(e.0.j).or_default().push(e);
        lower_by_i.entry(e.0.i).or_default().push(e);
    }
    let mut upper_by_ij: HashMap<(u32, u32), Vec<&(FaceConfig, T)>> = HashMap::new();
    for e in upper {
        upper_by_ij.entry((e.0.i, e.0.j)).or_default().push(e);
    }
    let mut cross_by_ij: HashMap<(u32, u32), Vec<&(FaceConfig, T)>> = HashMap::new();
    for e in cross {
        cross_by_ij.entry((e.0.i, e.0.j)).or_default().push(e);
    }
    let add = |map: &mut BTreeMap<YbeBoundary, T>, key: YbeBoundary, v: T| {
        map.entry(key).or_insert_with(T::zero_value).accumulate(&v);
    };
    let mut lhs = BTreeMap::new();
    for (r, rw) in cross {
        for (lo, lw) in lower_by_j.get(&r.l).into_iter().flatten() {
            let rl = rw.times(lw);
            for (up, uw) in upper_by_ij.get(&(lo.k, r.k)).into_iter().flatten() {
                add(&mut lhs, [r.i, r.j, lo.i, up.l, lo.l, up.k], rl.times(uw));
            }
        }
    }
    let mut rhs = BTreeMap::new();
    for (up, uw) in upper {
        for (lo, lw) in lower_by_i.get(&up.k).into_iter().flatten() {
            let ul = uw.times(lw);
            for (r, rw) in cross_by_ij.get(&(up.l, lo.l)).into_iter().flatten() {
                add(&mut rhs, [up.j, lo.j, up.i, r.k, r.l, lo.k], ul.times(rw));
            }
        }
    }
    lhs.retain(|_, v| !v.is_zero_value());
    rhs.retain(|_, v| !v.is_zero_value());
    (lhs, rhs)
}

/// Boundaries on which the two sides differ.
pub fn ybe_mismatches<T: Value>(lhs: &BTreeMap<YbeBoundary, T>, rhs: &BTreeMap<YbeBoundary, T>) -> Vec<YbeBoundary> {
    let zero = T::zero_value();
    let mut keys: Vec<&YbeBoundary> = lhs.keys().chain(rhs.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter(|key| lhs.get(*key).unwrap_or(&zero) != rhs.get(*key).unwrap_or(&zero))
        .copied()
        .collect()
}

fn numeric_table(k: usize, f: impl Fn(FaceConfig) -> Result<Rational>) -> Result<WeightTable<Rational>> {
    let mut out = Vec::new();
    for face in FaceConfig::all(k).filter(|face| face.conserves(k)) {
        let w = f(face)?;
        if !Zero::is_zero(&w) {
            out.push((face, w));
        }
    }
    Ok(out)
}

/// Outcome of a Yang–Baxter check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YbeReport {
    pub k: usize,
    pub triple: YbeTriple,
    /// Boundaries with a nonzero side.
    pub nonzero_boundaries: usize,
    /// Boundaries where the sides differ.
    pub failures: Vec<YbeBoundary>,
}

impl YbeReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the identity over all `2^{6k}` boundaries at numeric `(x, y, t)`.
pub fn ybe_check(k: usize, triple: YbeTriple, x: &Rational, y: &Rational, t: &Rational) -> Result<YbeReport> {
    let (lo, up) = triple.families();
    let w = triple.cross_parameter(k, x, y, t)?;
    let px = VertexParams::new(x.clone(), Rational::one(), t.clone());
    let py = VertexParams::new(y.clone(), Rational::one(), t.clone());
    let lower = numeric_table(k, |f| weight_algebraic(lo, k, &px, f))?;
    let upper = numeric_table(k, |f| weight_algebraic(up, k, &py, f))?;
    let cross = numeric_table(k, |f| r_prime_at(k, &w, t, f))?;
    let (lhs, rhs) = ybe_sides(&cross, &lower, &upper);
    let failures = ybe_mismatches(&lhs, &rhs);
    let nonzero_boundaries = lhs.keys().chain(rhs.keys()).collect::<std::collections::BTreeSet<_>>().len();
    Ok(YbeReport { k, triple, nonzero_boundaries, failures })
}

/// Checks the identity as an exact identity of Laurent polynomials in
/// `x = x_1`, `y = y_1`, `t`. The cross weights are multiplied by the
/// common denominator `(−w; t)_{2k}`, which scales both sides equally.
pub fn ybe_check_symbolic(k: usize, triple: YbeTriple) -> YbeReport {
    let (lo, up) = triple.families();
    let mono_table = |family: Family, v: Var| -> WeightTable<Poly> {
        FaceConfig::all(k)
            .filter_map(|f| {
                box_exponents(family, k, f)
                    .map(|(a, b)| (f, Poly::monomial(Monomial::from_pairs([(v, a), (Var::t(), b)]))))
            })
            .collect()
    };
    let lower = mono_table(lo, Var::x(1));
    let upper = mono_table(up, Var::y(1));
    let w = triple.cross_monomial(k);
    let cross: WeightTable<Poly> = FaceConfig::all(k)
        .filter(|f| f.conserves(k) && f.i & f.j == 0)
        .map(|f| {
            let n = (size(f.k) + size(f.l)) as usize;
            let mut p = Poly::monomial(w.pow(size(f.l)).mul(&Monomial::var_pow(Var::t(), phi(f.l, f.k | f.l, k))));
            for e in n..2 * k {
                let factor = &Poly::one() + &Poly::monomial(w.mul(&Monomial::var_pow(Var::t(), e as i64)));
                p = &p * &factor;
            }
            (f, p)
        })
        .collect();
    let (lhs, rhs) = ybe_sides(&cross, &lower, &upper);
    let failures = ybe_mismatches(&lhs, &rhs);
    let nonzero_boundaries = lhs.keys().chain(rhs.keys()).collect::<std::collections::BTreeSet<_>>().len();
    YbeReport { k, triple, nonzero_boundaries, failures }
}

/// One row of a lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowSpec {
    /// One of `L, L′, M, M′`.
    pub family: Family,
    /// Row parameter.
    pub var: Var,
    /// Colors entering on the left edge.
    pub left: u32,
    /// Colors leaving on the right edge.
    pub right: u32,
}

/// A rectangular lattice with fixed boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub k: usize,
    /// Faces per row.
    pub width: usize,
    /// Rows from the bottom.
    pub rows: Vec<RowSpec>,
    /// Bottom boundary: per color, a mask over columns (bit `c` = column `c`).
    pub bottom: Vec<u32>,
    /// Top boundary, same layout.
    pub top: Vec<u32>,
    /// Zero-line position for each horizontal line `0..=rows.len()`.
    pub zero_markers: Vec<usize>,
}

/// Per-color column masks of one horizontal line.
pub type LineState = Vec<u32>;

/// Lattice model selector, mirroring the two tiling encodings.
pub use crate::encodings::ModelKind;

/// The lattice whose configurations correspond to `k`-tilings of the
/// rank-`m` diamond in the given model.
///
/// Purple-gray: rows `L′_{x_1}, M_{y_1}, …, L′_{x_m}, M_{y_m}` from the
/// bottom; all colors enter in the first `m` columns and leave through the
/// right edge of the `M` rows; line `j` has its zero after `m − ⌊j/2⌋`
/// columns.
///
/// White-pink: rows `L_{x_1}, M′_{y_1}, …`; all colors enter through the
/// left edge of the `M′` rows, sit in the first `m − 1` columns at the
/// bottom and fill the top; line `j` has its zero after `m − 1 + ⌊j/2⌋`
/// columns.
///
/// The width is `2m − 1`, widened by one column at rank 1 so the windows
/// hold every slice (on the right for purple-gray, on the left for
/// white-pink).
pub fn aztec_lattice_spec(m: u32, k: usize, model: ModelKind) -> Result<LatticeSpec> {
    if m == 0 || k == 0 {
        return Err(Error::Invalid("rank and k must be at least 1".into()));
    }
    let m_us = m as usize;
    let pad = usize::from(m == 1);
    let width = 2 * m_us - 1 + pad;
    if width * k > 32 * k || width > 31 {
        return Err(Error::CapExceeded(format!("lattice width {width}")));
    }
    let all = all_colors(k);
    let mut rows = Vec::with_capacity(2 * m_us);
    for i in 1..=m {
        match model {
            ModelKind::PurpleGray => {
                rows.push(RowSpec { family: Family::LPrime, var: Var::x(i), left: 0, right: 0 });
                rows.push(RowSpec { family: Family::M, var: Var::y(i), left: 0, right: all });
            }
            ModelKind::WhitePink => {
                rows.push(RowSpec { family: Family::L, var: Var::x(i), left: 0, right: 0 });
                rows.push(RowSpec { family: Family::MPrime, var: Var::y(i), left: all, right: 0 });
            }
        }
    }
    let low = |n: usize| ((1u64 << n) - 1) as u32;
    let (bottom, top, zero_markers) = match model {
        ModelKind::PurpleGray => {
            (vec![low(m_us); k], vec![0; k], (0..=2 * m_us).map(|j| m_us - j / 2).collect())
        }
        ModelKind::WhitePink => (
            vec![low(m_us - 1 + pad); k],
            vec![low(width); k],
            (0..=2 * m_us).map(|j| m_us - 1 + pad + j / 2).collect(),
        ),
    };
    Ok(LatticeSpec { k, width, rows, bottom, top, zero_markers })
}

/// All top states reachable through one row from `bottom`, with the
/// exponents `(a, b)` of `var^a t^b`.
pub fn row_transitions(spec_row: &RowSpec, k: usize, width: usize, bottom: &[u32]) -> Vec<(LineState, i64, i64)> {
    let mut out = Vec::new();
    let mut top = vec![0u32; k];
    row_dfs(spec_row, k, width, bottom, 0, spec_row.left, &mut top, 0, 0, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn row_dfs(
    row: &RowSpec,
    k: usize,
    width: usize,
    bottom: &[u32],
    col: usize,
    horiz: u32,
    top: &mut Vec<u32>,
    a: i64,
    b: i64,
    out: &mut Vec<(LineState, i64, i64)>,
) {
    if col == width {
        if horiz == row.right {
            out.push((top.clone(), a, b));
        }
        return;
    }
    let i_mask = (0..k).fold(0u32, |m, c| m | (((bottom[c] >> col) & 1) << c));
    let both = i_mask & horiz;
    let single = (i_mask | horiz) & !both;
    // Enumerate which single-occupancy colors go up.
    let mut sub = single;
    loop {
        let k_mask = both | sub;
        let l_mask = both | (single & !sub);
        let face = FaceConfig::new(i_mask, horiz, k_mask, l_mask);
        if let Some((da, db)) = box_exponents(row.family, k, face) {
            for c in 0..k {
                top[c] |= ((k_mask >> c) & 1) << col;
            }
            row_dfs(row, k, width, bottom, col + 1, l_mask, top, a + da, b + db, out);
            for c in 0..k {
                top[c] &= !(1 << col);
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & single;
    }
}

/// Exponents of the unique way (if any) to fill one row between fixed
/// bottom and top lines: with both fixed, each column's right edge is
/// forced.
pub fn row_between(row: &RowSpec, k: usize, width: usize, bottom: &[u32], top: &[u32]) -> Option<(i64, i64)> {
    let (mut a, mut b) = (0, 0);
    let mut horiz = row.left;
    for col in 0..width {
        let pick = |line: &[u32]| (0..k).fold(0u32, |m, c| m | (((line[c] >> col) & 1) << c));
        let (i_mask, k_mask) = (pick(bottom), pick(top));
        let both = i_mask & horiz;
        // Colors counted twice on the inflow must leave both ways; colors
        // leaving on top must have come in.
        if both & !k_mask != 0 || k_mask & !(i_mask | horiz) != 0 {
            return None;
        }
        let l_mask = both | ((i_mask ^ horiz) & !k_mask);
        let (da, db) = box_exponents(row.family, k, FaceConfig::new(i_mask, horiz, k_mask, l_mask))?;
        a += da;
        b += db;
        horiz = l_mask;
    }
    (horiz == row.right).then_some((a, b))
}

/// Largest number of line states [`lattice_partition_function`] keeps.
pub const DEFAULT_STATE_CAP: usize = 1 << 20;

/// Exact partition function by row transfer.
pub fn lattice_partition_function(spec: &LatticeSpec) -> Result<Poly> {
    let mut states: HashMap<LineState, Poly> = HashMap::new();
    states.insert(spec.bottom.clone(), Poly::one());
    for row in &spec.rows {
        let next: Vec<HashMap<LineState, Poly>> = states
            .par_iter()
            .map(|(state, poly)| {
                let mut local: HashMap<LineState, Poly> = HashMap::new();
                for (top, a, b) in row_transitions(row, spec.k, spec.width, state) {
                    let mono = Monomial::from_pairs([(row.var, a), (Var::t(), b)]);
                    *local.entry(top).or_insert_with(Poly::zero) += &poly.mul_monomial(&mono);
                }
                local
            })
            .collect();
        let mut merged: HashMap<LineState, Poly> = HashMap::new();
        for local in next {
            for (s, p) in local {
                *merged.entry(s).or_insert_with(Poly::zero) += &p;
            }
        }
        merged.retain(|_, p| !p.is_zero());
        if merged.len() > DEFAULT_STATE_CAP {
            return Err(Error::CapExceeded(format!("{} line states", merged.len())));
        }
        states = merged;
    }
    Ok(states.remove(&spec.top).unwrap_or_else(Poly::zero))
}

/// One lattice configuration, recorded by its horizontal lines.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeConfig {
    pub lines: Vec<LineState>,
}

/// Every configuration with its weight (small lattices only).
pub fn lattice_configurations(spec: &LatticeSpec) -> Result<Vec<(LatticeConfig, Poly)>> {
    let mut partial: Vec<(Vec<LineState>, Monomial)> = vec![(vec![spec.bottom.clone()], Monomial::one())];
    for row in &spec.rows {
        let mut next = Vec::new();
        for (lines, mono) in &partial {
            let last = lines.last().expect("nonempty");
            for (top, a, b) in row_transitions(row, spec.k, spec.width, last) {
                let mut l = lines.clone();
                l.push(top);
                next.push((l, mono.mul(&Monomial::from_pairs([(row.var, a), (Var::t(), b)]))));
            }
            if next.len() > DEFAULT_STATE_CAP {
                return Err(Error::CapExceeded("too many lattice configurations".into()));
            }
        }
        partial = next;
    }
    let mut out: Vec<(LatticeConfig, Poly)> = partial
        .into_iter()
        .filter(|(lines, _)| lines.last() == Some(&spec.top))
        .map(|(lines, mono)| (LatticeConfig { lines }, Poly::monomial(mono)))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Weight of the configuration with the given horizontal lines (zero if the
/// lines are not a configuration).
pub fn config_weight(spec: &LatticeSpec, config: &LatticeConfig) -> Result<Poly> {
    if config.lines.len() != spec.rows.len() + 1
        || config.lines.first() != Some(&spec.bottom)
        || config.lines.last() != Some(&spec.top)
    {
        return Ok(Poly::zero());
    }
    let mut acc = Poly::one();
    for (r, row) in spec.rows.iter().enumerate() {
        match row_between(row, spec.k, spec.width, &config.lines[r], &config.lines[r + 1]) {
            Some((a, b)) => acc = acc.mul_monomial(&Monomial::from_pairs([(row.var, a), (Var::t(), b)])),
            None => return Ok(Poly::zero()),
        }
    }
    Ok(acc)
}

/// Reads the `k`-tuples of partitions off the horizontal lines.
pub fn config_to_sequence(spec: &LatticeSpec, config: &LatticeConfig) -> Result<Vec<PartitionTuple>> {
    config
        .lines
        .iter()
        .zip(&spec.zero_markers)
        .map(|(line, &z)| {
            line.iter()
                .map(|&mask| {
                    let bits = (0..spec.width).map(|c| (mask >> c) & 1 == 1).collect();
                    MayaWindow { width: spec.width, zero_position: z, bits }.to_partition()
                })
                .collect::<Result<Vec<_>>>()
                .map(PartitionTuple)
        })
        .collect()
}

/// Writes `k`-tuples of partitions onto the horizontal lines.
pub fn sequence_to_config(spec: &LatticeSpec, seq: &[PartitionTuple]) -> Result<LatticeConfig> {
    if seq.len() != spec.zero_markers.len() {
        return Err(Error::Invalid(format!("expected {} tuples, got {}", spec.zero_markers.len(), seq.len())));
    }
    let lines = seq
        .iter()
        .zip(&spec.zero_markers)
        .map(|(tuple, &z)| {
            if tuple.k() != spec.k {
                return Err(Error::ColorMismatch(tuple.k(), spec.k));
            }
            tuple
                .0
                .iter()
                .map(|p| {
                    let w = MayaWindow::from_partition(p, spec.width, z)?;
                    Ok(w.bits.iter().enumerate().fold(0u32, |m, (c, &b)| m | ((b as u32) << c)))
                })
                .collect::<Result<LineState>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LatticeConfig { lines })
}

/// Weight of a single row of `width` faces between two `k`-tuples, with the
/// bottom zero line after `bottom_zero` columns. The top zero line moves
/// one column left for `M` rows (all colors leave on the right), one column
/// right for `M′` rows (all colors enter on the left), and stays otherwise.
pub fn row_weight(
    family: Family,
    var: &Rational,
    t: &Rational,
    width: usize,
    bottom_zero: usize,
    bottom: &PartitionTuple,
    top: &PartitionTuple,
) -> Result<Rational> {
    if bottom.k() != top.k() {
        return Err(Error::ColorMismatch(bottom.k(), top.k()));
    }
    let k = bottom.k();
    let all = all_colors(k);
    let (left, right, top_zero) = match family {
        Family::L | Family::LPrime => (0, 0, bottom_zero),
        Family::M => (0, all, bottom_zero.checked_sub(1).ok_or_else(|| Error::Invalid("zero line at 0".into()))?),
        Family::MPrime => (all, 0, bottom_zero + 1),
        Family::RPrime => return Err(Error::Invalid("R' is not a row family".into())),
    };
    let row = RowSpec { family, var: Var::x(1), left, right };
    let to_line = |tuple: &PartitionTuple, z: usize| -> Result<LineState> {
        tuple
            .0
            .iter()
            .map(|p| {
                let w = MayaWindow::from_partition(p, width, z)?;
                Ok(w.bits.iter().enumerate().fold(0u32, |m, (c, &b)| m | ((b as u32) << c)))
            })
            .collect()
    };
    let b_line = to_line(bottom, bottom_zero)?;
    let t_line = to_line(top, top_zero)?;
    match row_between(&row, k, width, &b_line, &t_line) {
        Some((a, b)) => Ok(rat_pow(var, a)? * rat_pow(t, b)?),
        None => Ok(Rational::zero()),
    }
}

/// `y^ρ = y_1^{m−1} y_2^{m−2} ⋯ y_m^0`.
pub fn y_rho(m: u32) -> Monomial {
    Monomial::from_pairs((1..=m).map(|i| (Var::y(i), (m - i) as i64)))
}

/// The factor relating the lattice partition function to the tiling
/// generating polynomial: `(y^ρ)^k t^{C(m,2)C(k,2)}` for purple-gray and
/// `(y_1⋯y_m)^k (y^ρ)^k` for white-pink.
pub fn lattice_constant(m: u32, k: usize, model: ModelKind) -> Monomial {
    let rho_k = y_rho(m).pow(k as i64);
    match model {
        ModelKind::PurpleGray => {
            let e = (m as i64 * (m as i64 - 1) / 2) * (k as i64 * (k as i64 - 1) / 2);
            rho_k.mul(&Monomial::var_pow(Var::t(), e))
        }
        ModelKind::WhitePink => rho_k.mul(&Monomial::from_pairs((1..=m).map(|i| (Var::y(i), k as i64)))),
    }
}

/// Partitions helper: the empty `k`-tuple.
pub fn empty_tuple(k: usize) -> PartitionTuple {
    PartitionTuple(vec![Partition::empty(); k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn params() -> VertexParams {
        VertexParams::new(rat(2, 3), rat(5, 7), rat(3, 11))
    }

    #[test]
    fn one_color_examples() {
        let p = params();
        let f = FaceConfig::from_vectors(&[1], &[0], &[0], &[1]);
        assert_eq!(weight_algebraic(Family::L, 1, &p, f).unwrap(), p.x);
        // With w = x/y in the cross slot, the bottom-left to bottom-right
        // face has weight w/(1+w).
        let w = &p.x / &p.y;
        assert_eq!(weight_algebraic(Family::RPrime, 1, &p, f).unwrap(), &w / (int(1) + &w));
    }

    #[test]
    fn two_color_l_example() {
        let p = params();
        let f = FaceConfig::from_vectors(&[1, 1], &[0, 0], &[0, 1], &[1, 0]);
        assert_eq!(weight_algebraic(Family::L, 2, &p, f).unwrap(), &p.x * &p.t);
    }

    #[test]
    fn empty_faces() {
        let p = params();
        let e = FaceConfig::new(0, 0, 0, 0);
        for k in 1..=3 {
            assert_eq!(weight_algebraic(Family::L, k, &p, e).unwrap(), int(1));
            let expected = rat_pow(&p.x, k as i64).unwrap() * rat_pow(&p.t, (k * (k - 1) / 2) as i64).unwrap();
            assert_eq!(weight_algebraic(Family::M, k, &p, e).unwrap(), expected);
            assert_eq!(weight_graphical(Family::M, k, &p, e).unwrap(), expected);
        }
    }

    #[test]
    fn non_conserving_faces_vanish() {
        let p = params();
        let f = FaceConfig::from_vectors(&[1, 0], &[0, 0], &[0, 0], &[0, 0]);
        for fam in Family::ALL {
            assert_eq!(weight_algebraic(fam, 2, &p, f).unwrap(), int(0));
            assert_eq!(weight_graphical(fam, 2, &p, f).unwrap(), int(0));
        }
    }

    #[test]
    fn graphical_matches_algebraic() {
        let p = params();
        for k in 1..=2 {
            for fam in Family::ALL {
                for f in FaceConfig::all(k) {
                    assert_eq!(
                        weight_algebraic(fam, k, &p, f).unwrap(),
                        weight_graphical(fam, k, &p, f).unwrap(),
                        "{fam} {f:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn ybe_numeric() {
        for k in 1..=2 {
            for triple in YbeTriple::ALL {
                let r = ybe_check(k, triple, &rat(2, 3), &rat(5, 7), &rat(3, 11)).unwrap();
                assert!(r.holds(), "{triple:?} k={k}: {:?} of {}", r.failures, r.nonzero_boundaries);
            }
        }
    }

    #[test]
    fn ybe_symbolic() {
        for triple in YbeTriple::ALL {
            let r = ybe_check_symbolic(1, triple);
            assert!(r.holds() && r.nonzero_boundaries > 0);
        }
    }

    #[test]
    fn ybe_wrong_parameter_fails() {
        let (lo, up) = YbeTriple::MLPrime.families();
        let (x, y, t) = (rat(2, 3), rat(5, 7), rat(3, 11));
        let px = VertexParams::new(x.clone(), int(1), t.clone());
        let py = VertexParams::new(y.clone(), int(1), t.clone());
        let lower = numeric_table(1, |f| weight_algebraic(lo, 1, &px, f)).unwrap();
        let upper = numeric_table(1, |f| weight_algebraic(up, 1, &py, f)).unwrap();
        let cross = numeric_table(1, |f| r_prime_at(1, &(&x / &y), &t, f)).unwrap();
        let (l, r) = ybe_sides(&cross, &lower, &upper);
        assert!(!ybe_mismatches(&l, &r).is_empty());
    }

    #[test]
    fn row_weights_at_t_one() {
        let one = int(1);
        let x = rat(3, 2);
        let tup = |v: &[u32]| PartitionTuple(vec![Partition::from(v)]);
        let w = row_weight(Family::L, &x, &one, 4, 2, &tup(&[1]), &tup(&[2, 1])).unwrap();
        assert_eq!(w, &x * &x);
        let w = row_weight(Family::L, &x, &one, 4, 2, &tup(&[2, 1]), &tup(&[2, 1])).unwrap();
        assert_eq!(w, one);
        let w = row_weight(Family::L, &x, &one, 4, 2, &tup(&[1, 1]), &tup(&[2])).unwrap();
        assert_eq!(w, int(0));
    }

    #[test]
    fn rank_two_one_color_lattices() {
        for model in ModelKind::ALL {
            let spec = aztec_lattice_spec(2, 1, model).unwrap();
            assert_eq!(lattice_configurations(&spec).unwrap().len(), 8, "{model}");
        }
    }
}
