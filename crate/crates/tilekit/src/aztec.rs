//! The Aztec diamond, dominos, tilings, `k`-tilings, flips, and exhaustive
//! enumeration.
//!
//! # Coordinates
//!
//! A cell is the unit square `[a, a+1] × [b, b+1]`, named by its lower-left
//! corner `(a, b)`. The rank-`m` diamond is the union of the cells inside
//! `|x| + |y| ≤ m + 1`; row `b ∈ [−m, m−1]` holds the cells
//! `a ∈ [−w, w−1]` with `w = m + 1 − max(|b|, |b+1|)`:
//!
//! ```text
//!   rank 2        b
//!      ▢▢          1
//!     ▢▢▢▢         0
//!     ▢▢▢▢        −1
//!      ▢▢         −2
//!  a: −2 … 1
//! ```
//!
//! Cell `(a, b)` is gray when `a + b + m` is even and white otherwise. A
//! domino is named by its lower-left cell and orientation, and its type is
//!
//! | type | orientation | gray cell |
//! |------|-------------|-----------|
//! | I    | horizontal  | right     |
//! | II   | vertical    | top       |
//! | III  | horizontal  | left      |
//! | IV   | vertical    | bottom    |
//!
//! The *slice* of cell `(a, b)` is `m − a + b ∈ [0, 2m]`; slice 0 is the
//! south-east boundary diagonal and gray cells lie on even slices.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank [`enumerate_tilings`] accepts unless a higher cap is passed.
pub const DEFAULT_ENUMERATION_CAP: u32 = 5;

/// The rank-`m` Aztec diamond.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AztecRegion {
    pub rank: u32,
}

impl AztecRegion {
    pub fn new(rank: u32) -> AztecRegion {
        AztecRegion { rank }
    }

    /// Half-width of row `b`, or 0 if the row is outside the diamond.
    pub fn half_width(&self, b: i32) -> i32 {
        let m = self.rank as i32;
        if b < -m || b >= m {
            return 0;
        }
        m + 1 - b.abs().max((b + 1).abs())
    }

    /// Whether the unit square with lower-left corner `(a, b)` lies inside.
    pub fn contains(&self, a: i32, b: i32) -> bool {
        let w = self.half_width(b);
        a >= -w && a < w
    }

    /// All cells, row by row from the bottom, left to right.
    pub fn cells(&self) -> Vec<(i32, i32)> {
        let m = self.rank as i32;
        let mut out = Vec::with_capacity(self.cell_count());
        for b in -m..m {
            let w = self.half_width(b);
            out.extend((-w..w).map(|a| (a, b)));
        }
        out
    }

    /// `2m(m+1)` cells.
    pub fn cell_count(&self) -> usize {
        let m = self.rank as usize;
        2 * m * (m + 1)
    }

    /// Whether cell `(a, b)` is gray.
    pub fn is_gray(&self, a: i32, b: i32) -> bool {
        (a + b + self.rank as i32).rem_euclid(2) == 0
    }

    /// Slice index `m − a + b` of a cell.
    pub fn slice(&self, a: i32, b: i32) -> i32 {
        self.rank as i32 - a + b
    }

    /// The cells of slice `ℓ`, ordered south-west to north-east.
    pub fn slice_cells(&self, l: i32) -> Vec<(i32, i32)> {
        let m = self.rank as i32;
        (-m - 1..=m)
            .map(|a| (a, a + l - m))
            .filter(|&(a, b)| self.contains(a, b))
            .collect()
    }
}

/// Domino orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "h")]
    Horizontal,
    #[serde(rename = "v")]
    Vertical,
}

/// The four shading/orientation classes of dominos.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DominoType {
    I,
    II,
    III,
    IV,
}

impl DominoType {
    pub const ALL: [DominoType; 4] = [DominoType::I, DominoType::II, DominoType::III, DominoType::IV];

    /// Position in [`DominoType::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }

    /// The type after reflecting across `y = x`.
    pub fn reflected(self) -> DominoType {
        match self {
            DominoType::I => DominoType::II,
            DominoType::II => DominoType::I,
            DominoType::III => DominoType::IV,
            DominoType::IV => DominoType::III,
        }
    }
}

impl fmt::Display for DominoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DominoType::I => "I",
            DominoType::II => "II",
            DominoType::III => "III",
            DominoType::IV => "IV",
        };
        f.write_str(s)
    }
}

/// A domino named by its lower-left cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Domino {
    pub x: i32,
    pub y: i32,
    pub o: Orientation,
}

impl Domino {
    pub fn horizontal(x: i32, y: i32) -> Domino {
        Domino { x, y, o: Orientation::Horizontal }
    }

    pub fn vertical(x: i32, y: i32) -> Domino {
        Domino { x, y, o: Orientation::Vertical }
    }

    /// The anchor cell and the second cell.
    pub fn cells(&self) -> [(i32, i32); 2] {
        match self.o {
            Orientation::Horizontal => [(self.x, self.y), (self.x + 1, self.y)],
            Orientation::Vertical => [(self.x, self.y), (self.x, self.y + 1)],
        }
    }

    /// Type in the rank-`m` diamond.
    pub fn kind(&self, m: u32) -> DominoType {
        let anchor_gray = (self.x + self.y + m as i32).rem_euclid(2) == 0;
        match (self.o, anchor_gray) {
            (Orientation::Horizontal, false) => DominoType::I,
            (Orientation::Horizontal, true) => DominoType::III,
            (Orientation::Vertical, false) => DominoType::II,
            (Orientation::Vertical, true) => DominoType::IV,
        }
    }

    /// Reflection across `y = x`.
    pub fn reflected(&self) -> Domino {
        match self.o {
            Orientation::Horizontal => Domino::vertical(self.y, self.x),
            Orientation::Vertical => Domino::horizontal(self.y, self.x),
        }
    }
}

/// A domino tiling of the rank-`m` diamond, dominos kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tiling {
    rank: u32,
    dominos: Vec<Domino>,
}

impl Tiling {
    /// Builds and validates a tiling.
    pub fn new(rank: u32, dominos: Vec<Domino>) -> Result<Tiling> {
        let mut dominos = dominos;
        dominos.sort();
        let t = Tiling { rank, dominos };
        t.validate()?;
        Ok(t)
    }

    fn from_sorted_unchecked(rank: u32, dominos: Vec<Domino>) -> Tiling {
        Tiling { rank, dominos }
    }

    /// The tiling with every domino horizontal.
    pub fn all_horizontal(rank: u32) -> Tiling {
        let region = AztecRegion::new(rank);
        let m = rank as i32;
        let mut dominos = Vec::new();
        for b in -m..m {
            let w = region.half_width(b);
            dominos.extend((-w..w).step_by(2).map(|a| Domino::horizontal(a, b)));
        }
        dominos.sort();
        Tiling::from_sorted_unchecked(rank, dominos)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn region(&self) -> AztecRegion {
        AztecRegion::new(self.rank)
    }

    /// Dominos in canonical (sorted) order.
    pub fn dominos(&self) -> &[Domino] {
        &self.dominos
    }

    /// Checks that every cell of the diamond is covered exactly once.
    pub fn validate(&self) -> Result<()> {
        let region = self.region();
        let mut seen = HashSet::with_capacity(region.cell_count());
        for d in &self.dominos {
            for (a, b) in d.cells() {
                if !region.contains(a, b) {
                    return Err(Error::Invalid(format!("domino {d:?} leaves the rank-{} diamond", self.rank)));
                }
                if !seen.insert((a, b)) {
                    return Err(Error::Invalid(format!("cell ({a},{b}) covered twice")));
                }
            }
        }
        if seen.len() != region.cell_count() {
            return Err(Error::Invalid(format!(
                "{} of {} cells covered",
                seen.len(),
                region.cell_count()
            )));
        }
        Ok(())
    }

    /// Number of dominos of each type, indexed by [`DominoType::index`].
    pub fn type_histogram(&self) -> [usize; 4] {
        let mut h = [0; 4];
        for d in &self.dominos {
            h[d.kind(self.rank).index()] += 1;
        }
        h
    }

    /// Lower-left cells of the 2×2 squares filled by two parallel dominos.
    pub fn flippable_blocks(&self) -> Vec<(i32, i32)> {
        TilingGrid::from_tiling(self).flippable_blocks()
    }

    /// Rotates the domino pair in the block at `block`.
    pub fn apply_flip(&self, block: (i32, i32)) -> Result<Tiling> {
        let mut g = TilingGrid::from_tiling(self);
        g.flip(block.0, block.1)?;
        Ok(g.to_tiling())
    }

    /// Reflection across `y = x`.
    pub fn reflect_diagonal(&self) -> Tiling {
        let mut dominos: Vec<Domino> = self.dominos.iter().map(Domino::reflected).collect();
        dominos.sort();
        Tiling::from_sorted_unchecked(self.rank, dominos)
    }

    /// The domino covering cell `(a, b)`, if any.
    pub fn domino_covering(&self, a: i32, b: i32) -> Option<Domino> {
        TilingGrid::from_tiling(self).domino_covering(a, b)
    }
}

/// A `k`-tuple of tilings of one diamond, color 1 first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KTiling {
    rank: u32,
    layers: Vec<Tiling>,
}

impl KTiling {
    /// Builds a `k`-tiling; all layers must share the rank and `k ≥ 1`.
    pub fn new(layers: Vec<Tiling>) -> Result<KTiling> {
        let rank = layers
            .first()
            .ok_or_else(|| Error::Invalid("a k-tiling needs at least one color".into()))?
            .rank;
        if layers.iter().any(|l| l.rank != rank) {
            return Err(Error::Invalid("layers of a k-tiling must share the rank".into()));
        }
        Ok(KTiling { rank, layers })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn k(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[Tiling] {
        &self.layers
    }

    /// Color `c` (1-based).
    pub fn layer(&self, c: usize) -> &Tiling {
        &self.layers[c - 1]
    }

    /// Every layer reflected across `y = x`.
    pub fn reflect_diagonal(&self) -> KTiling {
        KTiling { rank: self.rank, layers: self.layers.iter().map(Tiling::reflect_diagonal).collect() }
    }
}

/// Serialized form of a [`KTiling`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KTilingJson {
    pub rank: u32,
    pub layers: Vec<Vec<Domino>>,
}

impl From<&KTiling> for KTilingJson {
    fn from(kt: &KTiling) -> KTilingJson {
        KTilingJson { rank: kt.rank, layers: kt.layers.iter().map(|l| l.dominos.clone()).collect() }
    }
}

impl TryFrom<KTilingJson> for KTiling {
    type Error = Error;

    fn try_from(j: KTilingJson) -> Result<KTiling> {
        let layers = j.layers.into_iter().map(|ds| Tiling::new(j.rank, ds)).collect::<Result<Vec<_>>>()?;
        KTiling::new(layers)
    }
}

/// Role of a cell inside the domino covering it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
enum CellRole {
    Outside,
    HorizontalAnchor,
    VerticalAnchor,
    HorizontalRight,
    VerticalTop,
}

/// Mutable dense representation of a tiling: every cell of the bounding
/// square knows its role in the covering domino, so lookups and flips are
/// `O(1)`. This is the state the samplers mutate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingGrid {
    rank: u32,
    roles: Vec<CellRole>,
}

impl TilingGrid {
    fn index(&self, a: i32, b: i32) -> Option<usize> {
        let m = self.rank as i32;
        if a < -m || a >= m || b < -m || b >= m {
            return None;
        }
        Some(((b + m) * 2 * m + (a + m)) as usize)
    }

    fn role(&self, a: i32, b: i32) -> CellRole {
        self.index(a, b).map_or(CellRole::Outside, |i| self.roles[i])
    }

    fn set(&mut self, a: i32, b: i32, r: CellRole) {
        let i = self.index(a, b).expect("cell inside bounding square");
        self.roles[i] = r;
    }

    /// Builds the grid of a (valid) tiling.
    pub fn from_tiling(t: &Tiling) -> TilingGrid {
        let m = t.rank as usize;
        let mut g = TilingGrid { rank: t.rank, roles: vec![CellRole::Outside; 4 * m * m] };
        for d in &t.dominos {
            g.place(*d);
        }
        g
    }

    fn place(&mut self, d: Domino) {
        match d.o {
            Orientation::Horizontal => {
                self.set(d.x, d.y, CellRole::HorizontalAnchor);
                self.set(d.x + 1, d.y, CellRole::HorizontalRight);
            }
            Orientation::Vertical => {
                self.set(d.x, d.y, CellRole::VerticalAnchor);
                self.set(d.x, d.y + 1, CellRole::VerticalTop);
            }
        }
    }

    /// Back to the sorted-list representation.
    pub fn to_tiling(&self) -> Tiling {
        let mut dominos = Vec::with_capacity(self.rank as usize * (self.rank as usize + 1));
        for (a, b) in AztecRegion::new(self.rank).cells() {
            if let Some(o) = self.orientation_at_anchor(a, b) {
                dominos.push(Domino { x: a, y: b, o });
            }
        }
        dominos.sort();
        Tiling::from_sorted_unchecked(self.rank, dominos)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Orientation of the domino anchored at `(a, b)`, if one is.
    pub fn orientation_at_anchor(&self, a: i32, b: i32) -> Option<Orientation> {
        match self.role(a, b) {
            CellRole::HorizontalAnchor => Some(Orientation::Horizontal),
            CellRole::VerticalAnchor => Some(Orientation::Vertical),
            _ => None,
        }
    }

    /// Type of the domino anchored at `(a, b)`, if one is.
    pub fn type_at_anchor(&self, a: i32, b: i32) -> Option<DominoType> {
        self.orientation_at_anchor(a, b).map(|o| Domino { x: a, y: b, o }.kind(self.rank))
    }

    /// The domino covering `(a, b)`.
    pub fn domino_covering(&self, a: i32, b: i32) -> Option<Domino> {
        match self.role(a, b) {
            CellRole::Outside => None,
            CellRole::HorizontalAnchor => Some(Domino::horizontal(a, b)),
            CellRole::VerticalAnchor => Some(Domino::vertical(a, b)),
            CellRole::HorizontalRight => Some(Domino::horizontal(a - 1, b)),
            CellRole::VerticalTop => Some(Domino::vertical(a, b - 1)),
        }
    }

    /// If the 2×2 block with lower-left cell `(a, b)` holds two parallel
    /// dominos, their common orientation.
    pub fn block_orientation(&self, a: i32, b: i32) -> Option<Orientation> {
        if self.role(a, b) == CellRole::HorizontalAnchor && self.role(a, b + 1) == CellRole::HorizontalAnchor {
            Some(Orientation::Horizontal)
        } else if self.role(a, b) == CellRole::VerticalAnchor && self.role(a + 1, b) == CellRole::VerticalAnchor {
            Some(Orientation::Vertical)
        } else {
            None
        }
    }

    /// The two dominos a flip at `(a, b)` would remove and the two it would
    /// add, or `None` if the block is not flippable.
    pub fn flip_delta(&self, a: i32, b: i32) -> Option<([Domino; 2], [Domino; 2])> {
        match self.block_orientation(a, b)? {
            Orientation::Horizontal => Some((
                [Domino::horizontal(a, b), Domino::horizontal(a, b + 1)],
                [Domino::vertical(a, b), Domino::vertical(a + 1, b)],
            )),
            Orientation::Vertical => Some((
                [Domino::vertical(a, b), Domino::vertical(a + 1, b)],
                [Domino::horizontal(a, b), Domino::horizontal(a, b + 1)],
            )),
        }
    }

    /// Rotates the block at `(a, b)` in place.
    pub fn flip(&mut self, a: i32, b: i32) -> Result<()> {
        let (_, added) = self.flip_delta(a, b).ok_or(Error::NotFlippable(a, b))?;
        for d in added {
            self.place(d);
        }
        Ok(())
    }

    /// All flippable blocks, sorted.
    pub fn flippable_blocks(&self) -> Vec<(i32, i32)> {
        let mut out: Vec<(i32, i32)> = AztecRegion::new(self.rank)
            .cells()
            .into_iter()
            .filter(|&(a, b)| self.block_orientation(a, b).is_some())
            .collect();
        out.sort();
        out
    }
}

/// All tilings of the rank-`m` diamond, sorted; `m` at most
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_tilings(m: u32) -> Result<Vec<Tiling>> {
    enumerate_tilings_with_cap(m, DEFAULT_ENUMERATION_CAP)
}

/// All tilings of the rank-`m` diamond by breadth-first search over flips
/// from the all-horizontal tiling.
pub fn enumerate_tilings_with_cap(m: u32, cap: u32) -> Result<Vec<Tiling>> {
    if m > cap {
        return Err(Error::CapExceeded(format!("rank {m} exceeds the enumeration cap {cap}")));
    }
    let start = TilingGrid::from_tiling(&Tiling::all_horizontal(m));
    let mut seen: HashSet<Vec<CellRole>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(start.roles.clone());
    queue.push_back(start);
    while let Some(g) = queue.pop_front() {
        for (a, b) in g.flippable_blocks() {
            let mut h = g.clone();
            h.flip(a, b).expect("listed block is flippable");
            if seen.insert(h.roles.clone()) {
                queue.push_back(h);
            }
        }
        out.push(g.to_tiling());
    }
    out.sort();
    Ok(out)
}

/// All `k`-tuples of tilings of the rank-`m` diamond, in lexicographic order
/// of the canonical tiling list.
pub fn enumerate_ktilings(m: u32, k: usize) -> Result<Vec<KTiling>> {
    if k == 0 {
        return Err(Error::Invalid("k must be at least 1".into()));
    }
    let tilings = enumerate_tilings(m)?;
    let n = tilings.len();
    let total = n
        .checked_pow(k as u32)
        .filter(|&t| t <= 1 << 24)
        .ok_or_else(|| Error::CapExceeded(format!("{n}^{k} k-tilings")))?;
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0usize; k];
    for _ in 0..total {
        out.push(KTiling { rank: m, layers: idx.iter().map(|&i| tilings[i].clone()).collect() });
        for slot in idx.iter_mut().rev() {
            *slot += 1;
            if *slot < n {
                break;
            }
            *slot = 0;
        }
    }
    Ok(out)
}

/// `C(m+1, 2)`.
pub fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let c: Vec<usize> = (1..=4).map(|m| enumerate_tilings(m).unwrap().len()).collect();
        assert_eq!(c, vec![2, 8, 64, 1024]);
        assert!(matches!(enumerate_tilings(6), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn region_cells() {
        let r = AztecRegion::new(2);
        assert_eq!(r.cells().len(), 12);
        assert!(r.contains(-2, 0) && r.contains(1, -1) && !r.contains(-2, 1) && !r.contains(2, 0));
        assert_eq!(r.slice_cells(0), vec![(0, -2), (1, -1)]);
        assert_eq!(r.slice_cells(4), vec![(-2, 0), (-1, 1)]);
    }

    #[test]
    fn slice_sizes() {
        for m in 1..=4u32 {
            let r = AztecRegion::new(m);
            for l in 0..=2 * m as i32 {
                let n = r.slice_cells(l).len();
                assert_eq!(n, if l % 2 == 0 { m as usize } else { m as usize + 1 });
                assert!(r.slice_cells(l).iter().all(|&(a, b)| r.is_gray(a, b) == (l % 2 == 0)));
            }
        }
    }

    #[test]
    fn rank_one_blocks() {
        let t = Tiling::all_horizontal(1);
        assert_eq!(t.flippable_blocks(), vec![(-1, -1)]);
        let v = t.apply_flip((-1, -1)).unwrap();
        assert_eq!(v, t.reflect_diagonal());
        assert_eq!(v.apply_flip((-1, -1)).unwrap(), t);
    }

    #[test]
    fn rank_two_horizontal_blocks() {
        let t = Tiling::all_horizontal(2);
        assert_eq!(t.flippable_blocks(), vec![(-2, -1), (0, -1)]);
    }

    #[test]
    fn not_flippable() {
        let t = Tiling::all_horizontal(2);
        assert_eq!(t.apply_flip((-2, -2)), Err(Error::NotFlippable(-2, -2)));
    }

    #[test]
    fn type_one_two_count() {
        for m in 1..=4 {
            for t in enumerate_tilings(m).unwrap() {
                let h = t.type_histogram();
                assert_eq!((h[0] + h[1]) as u64, binom2(m as u64 + 1));
                let r = t.reflect_diagonal();
                assert_eq!(r.type_histogram(), [h[1], h[0], h[3], h[2]]);
                assert_eq!(r.reflect_diagonal(), t);
                r.validate().unwrap();
            }
        }
    }

    #[test]
    fn invalid_tilings_rejected() {
        assert!(Tiling::new(1, vec![Domino::horizontal(-1, -1)]).is_err());
        assert!(Tiling::new(1, vec![Domino::horizontal(-1, -1), Domino::horizontal(-1, -1)]).is_err());
        assert!(Tiling::new(1, vec![Domino::horizontal(-1, -1), Domino::horizontal(0, 0)]).is_err());
    }
}
