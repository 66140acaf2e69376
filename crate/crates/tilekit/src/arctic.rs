//! Arctic curves: closed-form boundaries between the frozen corners and the
//! disordered middle of large random tilings, in rescaled coordinates.
//!
//! Every branch has the form `u(x,y)² + v(x,y)² = r` for affine forms `u`,
//! `v` whose coefficients lie in `ℚ(√3)`, together with linear inequalities
//! cutting out the arc. The Aztec diamond is scaled by `1/m` into
//! `|x| + |y| ≤ 1`, with the Schröder paths running west to east. Hexagons
//! are scaled by `1/a` and placed so that the regular `2 × 2 × 2` hexagon
//! has its centre at the origin (inscribed circle `x² + y² = 3`).
//!
//! Coefficients stay exact so that reductions (for example `k = 1`
//! collapsing to the circle) are checked symbolically; floats appear only
//! when points are evaluated.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{int, Rational};

/// An element `r + s√3` of `ℚ(√3)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    pub rational: Rational,
    pub root3: Rational,
}

impl Surd {
    pub fn rational(r: Rational) -> Surd {
        Surd { rational: r, root3: Rational::zero() }
    }

    /// `s√3`.
    pub fn root3(s: Rational) -> Surd {
        Surd { rational: Rational::zero(), root3: s }
    }

    /// `n/d`.
    pub fn frac(n: i64, d: i64) -> Surd {
        Surd::rational(Rational::new(n.into(), d.into()))
    }

    pub fn zero() -> Surd {
        Surd::rational(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.root3.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.rational.to_f64().unwrap_or(f64::NAN) + self.root3.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, o: &Surd) -> Surd {
        Surd { rational: &self.rational + &o.rational, root3: &self.root3 + &o.root3 }
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, o: &Surd) -> Surd {
        Surd { rational: &self.rational - &o.rational, root3: &self.root3 - &o.root3 }
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, o: &Surd) -> Surd {
        Surd {
            rational: &self.rational * &o.rational + int(3) * &self.root3 * &o.root3,
            root3: &self.rational * &o.root3 + &self.root3 * &o.rational,
        }
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { rational: -&self.rational, root3: -&self.root3 }
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.root3.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "{}·√3", self.root3),
            (false, false) => write!(f, "{} + {}·√3", self.rational, self.root3),
        }
    }
}

/// An affine form `x·X + y·Y + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine {
    pub x: Surd,
    pub y: Surd,
    pub c: Surd,
}

impl Affine {
    pub fn new(x: Surd, y: Surd, c: Surd) -> Affine {
        Affine { x, y, c }
    }

    /// `(xn·X + yn·Y + cn)/d` with integer data.
    pub fn ints(xn: i64, yn: i64, cn: i64, d: i64) -> Affine {
        Affine::new(Surd::frac(xn, d), Surd::frac(yn, d), Surd::frac(cn, d))
    }

    pub fn eval(&self, p: (f64, f64)) -> f64 {
        self.x.to_f64() * p.0 + self.y.to_f64() * p.1 + self.c.to_f64()
    }

    fn floats(&self) -> (f64, f64, f64) {
        (self.x.to_f64(), self.y.to_f64(), self.c.to_f64())
    }
}

/// Direction of a linear inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bound {
    AtLeast,
    AtMost,
}

/// `form ≥ 0` or `form ≤ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub form: Affine,
    pub bound: Bound,
}

impl Constraint {
    /// `X ≥ v` style constraints on a single coordinate.
    fn x_at_least(v: Surd) -> Constraint {
        Constraint { form: Affine::new(Surd::frac(1, 1), Surd::zero(), -&v), bound: Bound::AtLeast }
    }

    fn x_at_most(v: Surd) -> Constraint {
        Constraint { form: Affine::new(Surd::frac(1, 1), Surd::zero(), -&v), bound: Bound::AtMost }
    }

    fn y_at_least(v: Surd) -> Constraint {
        Constraint { form: Affine::new(Surd::zero(), Surd::frac(1, 1), -&v), bound: Bound::AtLeast }
    }

    fn y_at_most(v: Surd) -> Constraint {
        Constraint { form: Affine::new(Surd::zero(), Surd::frac(1, 1), -&v), bound: Bound::AtMost }
    }

    /// Whether the point satisfies the constraint up to `tol`.
    pub fn holds(&self, p: (f64, f64), tol: f64) -> bool {
        let v = self.form.eval(p);
        match self.bound {
            Bound::AtLeast => v >= -tol,
            Bound::AtMost => v <= tol,
        }
    }
}

/// One arc `u² + v² = rhs` with its domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveBranch {
    pub name: String,
    pub squares: [Affine; 2],
    pub rhs: Surd,
    pub domain: Vec<Constraint>,
}

impl CurveBranch {
    /// Coefficients of `x², xy, y², x, y, 1` in `u² + v² − rhs`.
    pub fn quadratic(&self) -> [Surd; 6] {
        let mut out: [Surd; 6] = std::array::from_fn(|_| Surd::zero());
        for f in &self.squares {
            let two = Surd::frac(2, 1);
            let terms = [
                &f.x * &f.x,
                &two * &(&f.x * &f.y),
                &f.y * &f.y,
                &two * &(&f.x * &f.c),
                &two * &(&f.y * &f.c),
                &f.c * &f.c,
            ];
            for (o, t) in out.iter_mut().zip(terms.iter()) {
                *o = &*o + t;
            }
        }
        out[5] = &out[5] - &self.rhs;
        out
    }

    /// `u² + v² − rhs` at a rational point, exactly.
    pub fn residual_exact(&self, x: &Rational, y: &Rational) -> Surd {
        let (x, y) = (Surd::rational(x.clone()), Surd::rational(y.clone()));
        let form = |f: &Affine| &(&(&f.x * &x) + &(&f.y * &y)) + &f.c;
        let (u, v) = (form(&self.squares[0]), form(&self.squares[1]));
        &(&(&u * &u) + &(&v * &v)) - &self.rhs
    }

    /// `u² + v² − rhs` at a point.
    pub fn residual(&self, p: (f64, f64)) -> f64 {
        let u = self.squares[0].eval(p);
        let v = self.squares[1].eval(p);
        u * u + v * v - self.rhs.to_f64()
    }

    /// Residual divided by the gradient norm: a first-order distance.
    pub fn distance_estimate(&self, p: (f64, f64)) -> f64 {
        let (ux, uy, _) = self.squares[0].floats();
        let (vx, vy, _) = self.squares[1].floats();
        let (u, v) = (self.squares[0].eval(p), self.squares[1].eval(p));
        let gx = 2.0 * (u * ux + v * vx);
        let gy = 2.0 * (u * uy + v * vy);
        let g = (gx * gx + gy * gy).sqrt();
        if g == 0.0 {
            return self.residual(p).abs().sqrt();
        }
        self.residual(p).abs() / g
    }

    pub fn in_domain(&self, p: (f64, f64), tol: f64) -> bool {
        self.domain.iter().all(|c| c.holds(p, tol))
    }

    /// The point of the full conic at angle `θ` of the `(u, v)` circle.
    pub fn point_at(&self, theta: f64) -> (f64, f64) {
        let r = self.rhs.to_f64().sqrt();
        let (a, b, c) = self.squares[0].floats();
        let (d, e, f) = self.squares[1].floats();
        let (u, v) = (r * theta.cos() - c, r * theta.sin() - f);
        let det = a * e - b * d;
        ((u * e - b * v) / det, (a * v - d * u) / det)
    }

    /// Points of the arc, in order along it.
    pub fn polyline(&self, samples: usize) -> Vec<(f64, f64)> {
        let n = samples.max(8);
        let pts: Vec<(f64, f64)> =
            (0..n).map(|s| self.point_at(2.0 * std::f64::consts::PI * s as f64 / n as f64)).collect();
        let inside: Vec<bool> = pts.iter().map(|&p| self.in_domain(p, 1e-12)).collect();
        // Start right after a point outside the domain so the arc is contiguous.
        let start = (0..n).find(|&s| !inside[s]).map_or(0, |s| s + 1);
        let mut out = Vec::new();
        for s in 0..n {
            let ix = (start + s) % n;
            if inside[ix] {
                out.push(pts[ix]);
            } else if !out.is_empty() {
                break;
            }
        }
        // Add exact endpoints at either end.
        let ends = self.endpoints();
        if let (Some(&first), Some(&last)) = (out.first(), out.last()) {
            let nearest = |q: (f64, f64)| {
                ends.iter().copied().min_by(|a, b| dist(*a, q).total_cmp(&dist(*b, q)))
            };
            if let Some(e) = nearest(first) {
                out.insert(0, e);
            }
            if let Some(e) = nearest(last) {
                out.push(e);
            }
        }
        out
    }

    /// Endpoints of the arc: intersections of the conic with the domain's
    /// boundary lines that satisfy every constraint.
    pub fn endpoints(&self) -> Vec<(f64, f64)> {
        let mut out: Vec<(f64, f64)> = Vec::new();
        for c in &self.domain {
            let (a, b, k) = c.form.floats();
            let n2 = a * a + b * b;
            let p0 = (-a * k / n2, -b * k / n2);
            let dir = (-b, a);
            let at = |s: f64| (p0.0 + s * dir.0, p0.1 + s * dir.1);
            // The residual along the line is quadratic in s.
            let (f0, f1, fm) = (self.residual(at(0.0)), self.residual(at(1.0)), self.residual(at(-1.0)));
            let qa = (f1 + fm) / 2.0 - f0;
            let qb = (f1 - fm) / 2.0;
            let disc = qb * qb - 4.0 * qa * f0;
            if qa.abs() < 1e-15 || disc < -1e-12 {
                continue;
            }
            // A tangent line gives a double root; rounding must not split it.
            let root = if disc.abs() < 1e-12 { 0.0 } else { disc.max(0.0).sqrt() };
            for s in [(-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)] {
                let p = at(s);
                if self.in_domain(p, 1e-9) && out.iter().all(|&q| dist(p, q) > 1e-9) {
                    out.push(p);
                }
            }
        }
        out
    }
}

fn dist(p: (f64, f64), q: (f64, f64)) -> f64 {
    ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt()
}

/// The region a family of curves lives in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Ambient {
    /// `|x| + |y| ≤ 1`.
    Diamond,
    /// A rescaled hexagon, vertices counter-clockwise.
    Hexagon { vertices: Vec<(f64, f64)> },
}

impl Ambient {
    pub fn contains(&self, p: (f64, f64), tol: f64) -> bool {
        match self {
            Ambient::Diamond => p.0.abs() + p.1.abs() <= 1.0 + tol,
            Ambient::Hexagon { vertices } => {
                let n = vertices.len();
                (0..n).all(|i| {
                    let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                    let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
                    cross >= -tol * dist(a, b)
                })
            }
        }
    }

    pub fn vertices(&self) -> Vec<(f64, f64)> {
        match self {
            Ambient::Diamond => vec![(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)],
            Ambient::Hexagon { vertices } => vertices.clone(),
        }
    }
}

/// A named set of branches forming one closed curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveFamily {
    pub name: String,
    pub branches: Vec<CurveBranch>,
    pub ambient: Ambient,
}

/// Where a point sits relative to a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// In the disordered region.
    Inside,
    /// In a frozen region.
    Outside,
    /// Within the tolerance of a branch.
    Near,
}

/// A branch exported as points, for renderers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polyline {
    pub branch: String,
    pub points: Vec<[f64; 2]>,
}

/// Samples per branch in exported polylines and in the closed outline.
pub const POLYLINE_SAMPLES: usize = 2048;

impl CurveFamily {
    /// Largest distance from a branch endpoint to the nearest endpoint of a
    /// different branch; zero for a curve whose arcs meet exactly.
    pub fn junction_gap(&self) -> f64 {
        let ends: Vec<Vec<(f64, f64)>> = self.branches.iter().map(|b| b.endpoints()).collect();
        let mut worst: f64 = 0.0;
        for (i, mine) in ends.iter().enumerate() {
            for &p in mine {
                let best = ends
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .flat_map(|(_, e)| e.iter().map(move |&q| dist(p, q)))
                    .fold(f64::INFINITY, f64::min);
                worst = worst.max(best);
            }
        }
        worst
    }

    /// One polyline per branch.
    pub fn polylines(&self, samples: usize) -> Vec<Polyline> {
        self.branches
            .iter()
            .map(|b| Polyline { branch: b.name.clone(), points: b.polyline(samples).into_iter().map(|(x, y)| [x, y]).collect() })
            .collect()
    }

    /// The whole curve as one closed polygon, ordered by angle about the
    /// centroid of the branch endpoints.
    pub fn outline(&self, samples: usize) -> Vec<(f64, f64)> {
        let ends: Vec<(f64, f64)> = self.branches.iter().flat_map(|b| b.endpoints()).collect();
        let n = ends.len().max(1) as f64;
        let c = (ends.iter().map(|p| p.0).sum::<f64>() / n, ends.iter().map(|p| p.1).sum::<f64>() / n);
        let mut pts: Vec<(f64, f64)> = self.branches.iter().flat_map(|b| b.polyline(samples)).collect();
        pts.sort_by(|p, q| (p.1 - c.1).atan2(p.0 - c.0).total_cmp(&(q.1 - c.1).atan2(q.0 - c.0)));
        pts
    }

    /// Classifies a point; `eps` is the tolerance for [`Side::Near`].
    pub fn classify(&self, p: (f64, f64), eps: f64) -> Side {
        self.classify_with_outline(p, eps, &self.outline(POLYLINE_SAMPLES))
    }

    /// [`CurveFamily::classify`] against a precomputed outline.
    pub fn classify_with_outline(&self, p: (f64, f64), eps: f64, outline: &[(f64, f64)]) -> Side {
        let near = self.branches.iter().any(|b| b.in_domain(p, eps) && b.distance_estimate(p) <= eps);
        if near {
            return Side::Near;
        }
        if point_in_polygon(p, outline) {
            Side::Inside
        } else {
            Side::Outside
        }
    }

    /// Distance from a point to the outline polygon.
    pub fn distance_to_outline(p: (f64, f64), outline: &[(f64, f64)]) -> f64 {
        let n = outline.len();
        (0..n).map(|i| segment_distance(p, outline[i], outline[(i + 1) % n])).fold(f64::INFINITY, f64::min)
    }

    /// The family with `x` and `y` exchanged.
    pub fn swap_axes(&self, name: &str) -> CurveFamily {
        let swap = |f: &Affine| Affine::new(f.y.clone(), f.x.clone(), f.c.clone());
        CurveFamily {
            name: name.to_string(),
            branches: self
                .branches
                .iter()
                .map(|b| CurveBranch {
                    name: b.name.clone(),
                    squares: [swap(&b.squares[0]), swap(&b.squares[1])],
                    rhs: b.rhs.clone(),
                    domain: b.domain.iter().map(|c| Constraint { form: swap(&c.form), bound: c.bound }).collect(),
                })
                .collect(),
            ambient: match &self.ambient {
                Ambient::Diamond => Ambient::Diamond,
                Ambient::Hexagon { vertices } => {
                    Ambient::Hexagon { vertices: vertices.iter().rev().map(|&(x, y)| (y, x)).collect() }
                }
            },
        }
    }
}

fn point_in_polygon(p: (f64, f64), poly: &[(f64, f64)]) -> bool {
    let n = poly.len();
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        if (a.1 > p.1) != (b.1 > p.1) {
            let x = a.0 + (p.1 - a.1) / (b.1 - a.1) * (b.0 - a.0);
            if p.0 < x {
                inside = !inside;
            }
        }
    }
    inside
}

fn segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let d = (b.0 - a.0, b.1 - a.1);
    let len2 = d.0 * d.0 + d.1 * d.1;
    let s = if len2 == 0.0 { 0.0 } else { (((p.0 - a.0) * d.0 + (p.1 - a.1) * d.1) / len2).clamp(0.0, 1.0) };
    dist(p, (a.0 + s * d.0, a.1 + s * d.1))
}

fn branch(name: &str, u: Affine, v: Affine, rhs: Surd, domain: Vec<Constraint>) -> CurveBranch {
    CurveBranch { name: name.to_string(), squares: [u, v], rhs, domain }
}

/// The circle `x² + y² = 1/2` of a single uniform tiling.
pub fn aztec_circle() -> CurveFamily {
    aztec_t0_curves(1)
}

/// Arctic curve of `k`-tilings at `t = 0` (the same for every color):
///
/// - north: `x² + y² = 1/2`, `|x| ≤ 1/2`, `y ≥ 1/2`;
/// - south: `(x + (k−1)y)² + (ky)² = 1/2`, `−1/(2k) ≤ x ≤ 1 − 1/(2k)`,
///   `y ≤ −1/(2k)`;
/// - east: `((k+1)x + (k−1)y − (k−1))²/4 + ((k−1)x + (k+1)y − (k−1))²/4 = 1/2`,
///   `−1/(2k) ≤ y ≤ 1/2`, `x ≥ (k − (k−1)y)/(k+1)`;
/// - west: `((k+1)x + (k−1)y − (k−1))²/(2k)² + ((3k−1)y − (k−1)x − (k−1))²/(2k)² = 1/2`,
///   `−1/(2k) ≤ y ≤ 1/2`, `x ≤ −((k−1)y + 1)/(k+1)`.
pub fn aztec_t0_curves(k: usize) -> CurveFamily {
    let k = k.max(1) as i64;
    let half = Surd::frac(1, 2);
    let low = Surd::frac(-1, 2 * k);
    let east_line = Affine::ints(k + 1, k - 1, -k, k + 1);
    let west_line = Affine::ints(k + 1, k - 1, 1, k + 1);
    let branches = vec![
        branch(
            "north",
            Affine::ints(1, 0, 0, 1),
            Affine::ints(0, 1, 0, 1),
            half.clone(),
            vec![
                Constraint::x_at_least(Surd::frac(-1, 2)),
                Constraint::x_at_most(half.clone()),
                Constraint::y_at_least(half.clone()),
            ],
        ),
        branch(
            "east",
            Affine::ints(k + 1, k - 1, -(k - 1), 2),
            Affine::ints(k - 1, k + 1, -(k - 1), 2),
            half.clone(),
            vec![
                Constraint::y_at_least(low.clone()),
                Constraint::y_at_most(half.clone()),
                Constraint { form: east_line, bound: Bound::AtLeast },
            ],
        ),
        branch(
            "south",
            Affine::ints(1, k - 1, 0, 1),
            Affine::ints(0, k, 0, 1),
            half.clone(),
            vec![
                Constraint::x_at_least(low.clone()),
                Constraint::x_at_most(Surd::frac(2 * k - 1, 2 * k)),
                Constraint::y_at_most(low.clone()),
            ],
        ),
        branch(
            "west",
            Affine::ints(k + 1, k - 1, -(k - 1), 2 * k),
            Affine::ints(-(k - 1), 3 * k - 1, -(k - 1), 2 * k),
            half.clone(),
            vec![
                Constraint::y_at_least(low),
                Constraint::y_at_most(half),
                Constraint { form: west_line, bound: Bound::AtMost },
            ],
        ),
    ];
    CurveFamily { name: format!("aztec-t0-k{k}"), branches, ambient: Ambient::Diamond }
}

/// Arctic curve at `t → ∞`: the `t = 0` curve reflected across `y = x`.
pub fn aztec_tinf_curves(k: usize) -> CurveFamily {
    aztec_t0_curves(k).swap_axes(&format!("aztec-tinf-k{}", k.max(1)))
}

/// Vertices of the rescaled `A × B × C` hexagon (sides in units of `a`).
pub fn hexagon_vertices(a: f64, b: f64, c: f64) -> Vec<(f64, f64)> {
    let r3 = 3f64.sqrt();
    let place = |x: f64, y: f64| (x + y / 2.0 - 3.0, r3 / 2.0 * y - r3);
    vec![place(a, 0.0), place(a + b, 0.0), place(a + b, c), place(b, a + c), place(0.0, a + c), place(0.0, a)]
}

/// `s·√3/t` as a [`Surd`].
fn r3(s: i64, t: i64) -> Surd {
    Surd::root3(Rational::new(s.into(), t.into()))
}

/// `u = p·x + q·√3/3·y + c` for the hexagon branches.
fn hex_u(p: i64, q: i64, c: i64) -> Affine {
    Affine::new(Surd::frac(p, 1), r3(q, 3), Surd::frac(c, 1))
}

fn y_form() -> Affine {
    Affine::ints(0, 1, 0, 1)
}

fn y_band(lo: Surd, hi: Surd) -> [Constraint; 2] {
    [Constraint::y_at_least(lo), Constraint::y_at_most(hi)]
}

/// Arctic curve of 2-tilings of the `a × 2a × 3a` hexagon at `t = 0`.
pub fn hexagon_t0_curves() -> CurveFamily {
    let three = Surd::frac(3, 1);
    let (mid, top) = (r3(1, 2), r3(1, 1));
    let with = |mut v: Vec<Constraint>, band: [Constraint; 2]| {
        v.extend(band);
        v
    };
    let branches = vec![
        branch(
            "1",
            hex_u(2, -1, 2),
            y_form(),
            three.clone(),
            with(vec![Constraint::x_at_most(Surd::frac(-3, 2))], y_band(-&mid, mid.clone())),
        ),
        branch("2", hex_u(1, 0, 0), y_form(), three.clone(), with(vec![Constraint::x_at_most(Surd::zero())], y_band(mid.clone(), top.clone()))),
        branch("3", hex_u(1, -1, 1), y_form(), three.clone(), with(vec![Constraint::x_at_least(Surd::zero())], y_band(mid.clone(), top.clone()))),
        branch("4", hex_u(2, -1, 0), y_form(), three.clone(), with(vec![Constraint::x_at_least(Surd::frac(1, 2))], y_band(-&mid, mid.clone()))),
        branch("5", hex_u(1, 0, 1), y_form(), three.clone(), with(vec![Constraint::x_at_least(Surd::frac(-1, 1))], y_band(-&top, -&mid))),
        branch("6", hex_u(1, -1, 0), y_form(), three, with(vec![Constraint::x_at_most(Surd::frac(-1, 1))], y_band(-&top, -&mid))),
    ];
    CurveFamily {
        name: "hexagon-t0".into(),
        branches,
        ambient: Ambient::Hexagon { vertices: hexagon_vertices(1.0, 2.0, 3.0) },
    }
}

/// Arctic curve of 2-tilings of the `2a × a × 2a` hexagon as `t → ∞`.
pub fn hexagon_tinf_curves() -> CurveFamily {
    let three = Surd::frac(3, 1);
    let (mid, top) = (r3(1, 2), r3(1, 1));
    let with = |mut v: Vec<Constraint>, band: [Constraint; 2]| {
        v.extend(band);
        v
    };
    let branches = vec![
        branch("1", hex_u(1, 0, 0), y_form(), three.clone(), with(vec![Constraint::x_at_most(Surd::frac(-3, 2))], y_band(-&mid, mid.clone()))),
        branch("2", hex_u(2, -1, 2), y_form(), three.clone(), with(vec![Constraint::x_at_most(Surd::frac(-1, 2))], y_band(mid.clone(), top.clone()))),
        branch("3", hex_u(2, 1, 0), y_form(), three.clone(), with(vec![Constraint::x_at_least(Surd::frac(-1, 2))], y_band(mid.clone(), top.clone()))),
        branch("4", hex_u(1, 0, 1), y_form(), three.clone(), with(vec![Constraint::x_at_least(Surd::frac(1, 2))], y_band(-&mid, mid.clone()))),
        branch("5", hex_u(2, -1, 0), y_form(), three.clone(), with(vec![Constraint::x_at_least(Surd::frac(-1, 2))], y_band(-&top, -&mid))),
        branch("6", hex_u(2, 1, 2), y_form(), three, with(vec![Constraint::x_at_most(Surd::frac(-1, 2))], y_band(-&top, -&mid))),
    ];
    CurveFamily {
        name: "hexagon-tinf".into(),
        branches,
        ambient: Ambient::Hexagon { vertices: hexagon_vertices(2.0, 1.0, 2.0) },
    }
}

/// Whether every branch of the family reduces to `x² + y² − 1/2` exactly.
pub fn is_unit_circle(f: &CurveFamily) -> bool {
    let circle = [
        Surd::frac(1, 1),
        Surd::zero(),
        Surd::frac(1, 1),
        Surd::zero(),
        Surd::zero(),
        Surd::frac(-1, 2),
    ];
    f.branches.iter().all(|b| b.quadratic() == circle)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_one_is_the_circle() {
        assert!(is_unit_circle(&aztec_t0_curves(1)));
        assert!(!is_unit_circle(&aztec_t0_curves(2)));
        assert!(is_unit_circle(&aztec_tinf_curves(1)));
    }

    #[test]
    fn classify_examples() {
        let c = aztec_circle();
        assert_eq!(c.classify((0.0, 0.0), 1e-9), Side::Inside);
        assert_eq!(c.classify((0.0, 0.71), 1e-9), Side::Outside);
        for b in &c.branches {
            for p in b.polyline(64) {
                assert_eq!(c.classify(p, 1e-9), Side::Near);
            }
        }
    }

    #[test]
    fn junctions_meet() {
        for k in 1..=5 {
            assert!(aztec_t0_curves(k).junction_gap() < 1e-9, "k={k}");
            assert!(aztec_tinf_curves(k).junction_gap() < 1e-9, "k={k}");
        }
        assert!(hexagon_t0_curves().junction_gap() < 1e-9);
        assert!(hexagon_tinf_curves().junction_gap() < 1e-9);
    }

    #[test]
    fn every_branch_has_two_endpoints() {
        for f in [aztec_t0_curves(2), aztec_t0_curves(3), hexagon_t0_curves(), hexagon_tinf_curves()] {
            for b in &f.branches {
                assert_eq!(b.endpoints().len(), 2, "{} {}", f.name, b.name);
            }
        }
    }
}
