//! Schröder-path view of domino tilings.
//!
//! A tiling of the rank-`m` diamond is the same as `m` non-intersecting
//! paths made of north-east `(1,1)`, south-east `(1,−1)` and east `(2,0)`
//! steps, where path `i` runs from `(−m−1+i, −i+½)` to `(m+1−i, −i+½)`.
//! Paths cross dominos through the midpoints of their short sides:
//!
//! | domino | step |
//! |--------|------|
//! | I (horizontal, right cell gray) | E |
//! | II (vertical, top cell gray)    | NE |
//! | IV (vertical, bottom cell gray) | SE |
//! | III (horizontal, left cell gray) | none |
//!
//! Points are stored with doubled ordinates: a point `(x, y)` on a path has
//! `y = h/2` for an odd integer `h`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::aztec::{AztecRegion, Domino, DominoType, KTiling, Tiling, TilingGrid};
use crate::encodings::{ModelKind, TilingWeight};
use crate::error::{Error, Result};

/// One path step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchroderStep {
    NE,
    SE,
    E,
}

impl SchroderStep {
    /// Horizontal and (doubled) vertical displacement.
    pub fn delta(self) -> (i32, i32) {
        match self {
            SchroderStep::NE => (1, 2),
            SchroderStep::SE => (1, -2),
            SchroderStep::E => (2, 0),
        }
    }
}

impl fmt::Display for SchroderStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SchroderStep::NE => "NE",
            SchroderStep::SE => "SE",
            SchroderStep::E => "E",
        })
    }
}

impl FromStr for SchroderStep {
    type Err = Error;
    fn from_str(s: &str) -> Result<SchroderStep> {
        match s {
            "NE" => Ok(SchroderStep::NE),
            "SE" => Ok(SchroderStep::SE),
            "E" => Ok(SchroderStep::E),
            _ => Err(Error::Invalid(format!("unknown step {s:?}"))),
        }
    }
}

impl Serialize for SchroderStep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SchroderStep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The `m` paths of one tiling, path 1 (the top one) first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchroderPathFamily {
    pub rank: u32,
    pub paths: Vec<Vec<SchroderStep>>,
}

/// Start point `(x, doubled y)` of path `i` (1-based) at rank `m`.
pub fn path_start(m: u32, i: usize) -> (i32, i32) {
    (-(m as i32) - 1 + i as i32, -2 * i as i32 + 1)
}

/// End point `(x, doubled y)` of path `i` at rank `m`.
pub fn path_end(m: u32, i: usize) -> (i32, i32) {
    (m as i32 + 1 - i as i32, -2 * i as i32 + 1)
}

/// Cell whose left edge has the given point as its midpoint.
fn cell_right_of(p: (i32, i32)) -> (i32, i32) {
    (p.0, (p.1 - 1) / 2)
}

impl SchroderPathFamily {
    /// Vertices of path `i` (1-based), start included.
    pub fn vertices(&self, i: usize) -> Vec<(i32, i32)> {
        let mut p = path_start(self.rank, i);
        let mut out = Vec::with_capacity(self.paths[i - 1].len() + 1);
        out.push(p);
        for s in &self.paths[i - 1] {
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
            out.push(p);
        }
        out
    }

    /// Doubled height of path `i` at every integer abscissa it spans.
    pub fn heights(&self, i: usize) -> HashMap<i32, i32> {
        let mut out = HashMap::new();
        let mut p = path_start(self.rank, i);
        out.insert(p.0, p.1);
        for s in &self.paths[i - 1] {
            if *s == SchroderStep::E {
                out.insert(p.0 + 1, p.1);
            }
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
            out.insert(p.0, p.1);
        }
        out
    }

    /// Number of leading east steps of path `i`.
    pub fn leading_east_steps(&self, i: usize) -> usize {
        self.paths[i - 1].iter().take_while(|s| **s == SchroderStep::E).count()
    }

    /// The all-east family (the all-horizontal tiling).
    pub fn all_east(m: u32) -> SchroderPathFamily {
        let paths = (1..=m as usize).map(|i| vec![SchroderStep::E; m as usize + 1 - i]).collect();
        SchroderPathFamily { rank: m, paths }
    }
}

/// The paths of a tiling.
pub fn tiling_to_paths(tiling: &Tiling) -> SchroderPathFamily {
    let m = tiling.rank();
    let grid = TilingGrid::from_tiling(tiling);
    let mut paths = Vec::with_capacity(m as usize);
    for i in 1..=m as usize {
        let end = path_end(m, i);
        let mut p = path_start(m, i);
        let mut steps = Vec::new();
        while p != end {
            let (a, b) = cell_right_of(p);
            let d = grid.domino_covering(a, b).expect("path stays inside a valid tiling");
            let step = match d.kind(m) {
                DominoType::I => SchroderStep::E,
                DominoType::II => SchroderStep::NE,
                DominoType::IV => SchroderStep::SE,
                DominoType::III => unreachable!("paths never enter a type-III domino"),
            };
            let (dx, dy) = step.delta();
            p = (p.0 + dx, p.1 + dy);
            steps.push(step);
        }
        paths.push(steps);
    }
    SchroderPathFamily { rank: m, paths }
}

/// The tiling of a family of non-intersecting paths.
pub fn paths_to_tiling(family: &SchroderPathFamily) -> Result<Tiling> {
    let m = family.rank;
    if family.paths.len() != m as usize {
        return Err(Error::Invalid(format!("rank {m} needs {m} paths, got {}", family.paths.len())));
    }
    let region = AztecRegion::new(m);
    let mut used: HashMap<(i32, i32), usize> = HashMap::new();
    let mut dominos = Vec::new();
    for i in 1..=m as usize {
        let mut p = path_start(m, i);
        for s in &family.paths[i - 1] {
            let (a, b) = cell_right_of(p);
            let d = match s {
                SchroderStep::E => Domino::horizontal(a, b),
                SchroderStep::NE => Domino::vertical(a, b),
                SchroderStep::SE => Domino::vertical(a, b - 1),
            };
            for c in d.cells() {
                if !region.contains(c.0, c.1) {
                    return Err(Error::Invalid(format!("path {i} leaves the diamond at {c:?}")));
                }
                if let Some(j) = used.insert(c, i) {
                    return Err(Error::Invalid(format!("paths {j} and {i} intersect at {c:?}")));
                }
            }
            dominos.push(d);
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
        }
        if p != path_end(m, i) {
            return Err(Error::Invalid(format!("path {i} ends at {p:?}")));
        }
    }
    // The cells no path visits pair up into type-III dominos.
    let mut free: Vec<(i32, i32)> = region.cells().into_iter().filter(|c| !used.contains_key(c)).collect();
    free.sort_by_key(|&(a, b)| (b, a));
    let mut k = 0;
    while k < free.len() {
        let (a, b) = free[k];
        if k + 1 >= free.len() || free[k + 1] != (a + 1, b) || !region.is_gray(a, b) {
            return Err(Error::Invalid(format!("cell ({a},{b}) cannot be covered")));
        }
        dominos.push(Domino::horizontal(a, b));
        k += 2;
    }
    Tiling::new(m, dominos)
}

/// Odd slice index `i` (slice `2i − 1`) of the cell to the right of a
/// step's starting point.
fn start_slice_index(m: u32, p: (i32, i32)) -> usize {
    let (a, b) = cell_right_of(p);
    let s = m as i32 - a + b;
    ((s + 1) / 2) as usize
}

/// `x`/`y` weight in path language. Purple-gray: `x_i` counts south-east
/// steps and `y_i` north-east steps starting on slice `2i − 1`. White-pink:
/// `x_i` counts east steps starting on slice `2i − 1` and `y_i` counts
/// path-free dominos whose right cell is on slice `2i − 1`.
pub fn path_xy_weight(family: &SchroderPathFamily, model: ModelKind) -> Result<TilingWeight> {
    let m = family.rank;
    let mut w = TilingWeight::one(m);
    for i in 1..=m as usize {
        let mut p = path_start(m, i);
        for s in &family.paths[i - 1] {
            let idx = start_slice_index(m, p);
            match (model, s) {
                (ModelKind::PurpleGray, SchroderStep::SE) | (ModelKind::WhitePink, SchroderStep::E) => {
                    w.x_exponents[idx - 1] += 1
                }
                (ModelKind::PurpleGray, SchroderStep::NE) => w.y_exponents[idx - 1] += 1,
                _ => {}
            }
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
        }
    }
    if model == ModelKind::WhitePink {
        let tiling = paths_to_tiling(family)?;
        let region = tiling.region();
        for d in tiling.dominos().iter().filter(|d| d.kind(m) == DominoType::III) {
            let s = region.slice(d.x + 1, d.y);
            w.y_exponents[((s + 1) / 2) as usize - 1] += 1;
        }
    }
    Ok(w)
}

/// Precomputed vertices and heights of one family, for repeated
/// interaction counts.
#[derive(Debug, Clone)]
pub struct PathGeometry {
    /// Which path reaches each step endpoint (starts excluded).
    end_owner: HashMap<(i32, i32), usize>,
    /// North-east step starting points.
    ne_starts: Vec<(i32, i32)>,
    heights: Vec<HashMap<i32, i32>>,
}

impl PathGeometry {
    pub fn new(family: &SchroderPathFamily) -> PathGeometry {
        let mut end_owner = HashMap::new();
        let mut ne_starts = Vec::new();
        let mut heights = Vec::new();
        for i in 1..=family.paths.len() {
            let vs = family.vertices(i);
            for (w, s) in vs.windows(2).zip(&family.paths[i - 1]) {
                end_owner.insert(w[1], i - 1);
                if *s == SchroderStep::NE {
                    ne_starts.push(w[0]);
                }
            }
            heights.push(family.heights(i));
        }
        PathGeometry { end_owner, ne_starts, heights }
    }
}

/// Interactions between a blue family and a red family (blue the smaller
/// color): a blue path meets a red path from above — they share a step
/// endpoint and one unit to its left the blue path is strictly higher — or
/// the two take the same north-east step.
pub fn pair_path_interactions(blue: &PathGeometry, red: &PathGeometry) -> u64 {
    let mut n = 0;
    for (p, &bi) in &blue.end_owner {
        if let Some(&ri) = red.end_owner.get(p) {
            let hb = blue.heights[bi][&(p.0 - 1)];
            let hr = red.heights[ri][&(p.0 - 1)];
            n += (hb > hr) as u64;
        }
    }
    let red_ne: std::collections::HashSet<&(i32, i32)> = red.ne_starts.iter().collect();
    n += blue.ne_starts.iter().filter(|p| red_ne.contains(p)).count() as u64;
    n
}

/// Total purple-gray interactions of `k` families.
pub fn path_interactions(families: &[SchroderPathFamily]) -> u64 {
    let geo: Vec<PathGeometry> = families.iter().map(PathGeometry::new).collect();
    let mut n = 0;
    for a in 0..geo.len() {
        for b in a + 1..geo.len() {
            n += pair_path_interactions(&geo[a], &geo[b]);
        }
    }
    n
}

/// The families of every layer of a `k`-tiling.
pub fn ktiling_to_paths(kt: &KTiling) -> Vec<SchroderPathFamily> {
    kt.layers().iter().map(tiling_to_paths).collect()
}

/// Number of east steps path `i` of color `a` must start with in any
/// zero-interaction `k`-tiling of rank `m`: `min(i(k−1) − a + 1, m − i + 1)`.
pub fn frozen_prefix(i: usize, a: usize, k: usize, m: u32) -> usize {
    (i * (k - 1) + 1 - a).min(m as usize + 1 - i)
}
