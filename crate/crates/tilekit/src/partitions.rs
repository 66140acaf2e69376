//! Integer partitions, conjugation, (co-)interlacing, `k`-tuples, and
//! truncated Maya-diagram windows.
//!
//! # Maya convention
//!
//! The Maya diagram of `λ` has a particle `•` at content `i + ½` exactly when
//! `λ_j − j = i` for some `j ≥ 1`, and a hole `∘` elsewhere. So `∅` has
//! particles at every negative half-integer and holes at every positive one,
//! and `(4,3,2,2,1)` reads `…••∘•∘••|∘•∘•∘∘…` around the zero line.
//!
//! A [`MayaWindow`] keeps `width` consecutive slots; slot `s` (0-based, left
//! to right) sits at content `s − zero_position + ½`. Everything left of the
//! window is implicitly a particle and everything right of it a hole.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored as its nonzero parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The empty partition.
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Builds a partition, dropping trailing zeros.
    ///
    /// Fails if the parts are not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts known to be weakly decreasing.
    ///
    /// # Panics
    /// Panics on malformed input; intended for literals in tests and tables.
    pub fn from(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).expect("weakly decreasing parts")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based index, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest part (zero for `∅`).
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Size `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The conjugate partition `λ'`.
    pub fn conjugate(&self) -> Partition {
        let n = self.first() as usize;
        let mut out = Vec::with_capacity(n);
        for c in 1..=n as u32 {
            out.push(self.0.iter().filter(|&&p| p >= c).count() as u32);
        }
        Partition(out)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `λ ⪰ μ`: `λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ …`.
pub fn interlaces(lambda: &Partition, mu: &Partition) -> bool {
    let n = lambda.len().max(mu.len()) + 1;
    (1..=n).all(|i| lambda.part(i) >= mu.part(i) && mu.part(i) >= lambda.part(i + 1))
}

/// `λ ⪰′ μ`, i.e. `λ' ⪰ μ'`.
pub fn co_interlaces(lambda: &Partition, mu: &Partition) -> bool {
    interlaces(&lambda.conjugate(), &mu.conjugate())
}

/// Direct horizontal-strip test for `λ/μ` (used to cross-check
/// [`interlaces`]): `μ ⊆ λ` and no two boxes of `λ/μ` share a column.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    let n = lambda.len().max(mu.len());
    if (1..=n).any(|i| mu.part(i) > lambda.part(i)) {
        return false;
    }
    // Column c holds boxes of λ/μ in rows μ'_c+1..=λ'_c.
    let (lc, mc) = (lambda.conjugate(), mu.conjugate());
    (1..=lambda.first() as usize).all(|c| lc.part(c) - mc.part(c) <= 1)
}

/// A `k`-tuple of partitions, one per color.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartitionTuple(pub Vec<Partition>);

impl PartitionTuple {
    /// The tuple of `k` empty partitions.
    pub fn empty(k: usize) -> PartitionTuple {
        PartitionTuple(vec![Partition::empty(); k])
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Total size `Σ |λ^{(i)}|`.
    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

fn componentwise(a: &PartitionTuple, b: &PartitionTuple, f: fn(&Partition, &Partition) -> bool) -> Result<bool> {
    if a.k() != b.k() {
        return Err(Error::ColorMismatch(a.k(), b.k()));
    }
    Ok(a.0.iter().zip(&b.0).all(|(x, y)| f(x, y)))
}

/// Componentwise `λ⃗ ⪰ μ⃗`.
pub fn tuple_interlaces(lambda: &PartitionTuple, mu: &PartitionTuple) -> Result<bool> {
    componentwise(lambda, mu, interlaces)
}

/// Componentwise `λ⃗ ⪰′ μ⃗`.
pub fn tuple_co_interlaces(lambda: &PartitionTuple, mu: &PartitionTuple) -> Result<bool> {
    componentwise(lambda, mu, co_interlaces)
}

/// A truncated Maya diagram: `width` slots with the zero line after the
/// first `zero_position` of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MayaWindow {
    pub width: usize,
    pub zero_position: usize,
    /// `true` = particle `•`, `false` = hole `∘`.
    pub bits: Vec<bool>,
}

impl MayaWindow {
    /// Whether `λ` fits a window of the given shape: the `ℓ(λ)` particles
    /// that moved must stay inside the window on the left and `λ_1` must not
    /// exceed the slots on the right.
    pub fn fits(lambda: &Partition, width: usize, zero_position: usize) -> bool {
        zero_position <= width && lambda.len() <= zero_position && lambda.first() as usize <= width - zero_position
    }

    /// The window of `λ`.
    pub fn from_partition(lambda: &Partition, width: usize, zero_position: usize) -> Result<MayaWindow> {
        if !MayaWindow::fits(lambda, width, zero_position) {
            return Err(Error::WindowFit(lambda.to_string(), width, zero_position));
        }
        let mut bits = vec![false; width];
        // Particle j (1-based) sits at content λ_j − j + ½, i.e. slot
        // λ_j − j + zero_position. Particles with j > zero_position fall left
        // of the window and are implicit.
        for j in 1..=zero_position {
            let slot = lambda.part(j) as i64 - j as i64 + zero_position as i64;
            bits[slot as usize] = true;
        }
        Ok(MayaWindow { width, zero_position, bits })
    }

    /// Reads the partition back; fails if the particle/hole balance around
    /// the zero line is wrong.
    pub fn to_partition(&self) -> Result<Partition> {
        if self.bits.len() != self.width || self.zero_position > self.width {
            return Err(Error::Invalid("malformed Maya window".into()));
        }
        let holes_left = self.bits[..self.zero_position].iter().filter(|b| !**b).count();
        let particles_right = self.bits[self.zero_position..].iter().filter(|b| **b).count();
        if holes_left != particles_right {
            return Err(Error::Invalid(format!(
                "Maya window is unbalanced ({holes_left} holes left of zero, {particles_right} particles right)"
            )));
        }
        // Scanning right to left, the j-th particle at slot s gives
        // λ_j = s − zero_position + j.
        let mut parts = Vec::new();
        let mut j = 0i64;
        for s in (0..self.width).rev() {
            if self.bits[s] {
                j += 1;
                let p = s as i64 - self.zero_position as i64 + j;
                if p > 0 {
                    parts.push(p as u32);
                }
            }
        }
        Partition::new(parts)
    }
}

impl fmt::Display for MayaWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, &b) in self.bits.iter().enumerate() {
            if s == self.zero_position {
                write!(f, "|")?;
            }
            write!(f, "{}", if b { '•' } else { '∘' })?;
        }
        if self.zero_position == self.width {
            write!(f, "|")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::from(v)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 2, 2, 1]).conjugate(), p(&[5, 4, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 3, 2]).conjugate(), p(&[3, 3, 2]));
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&p(&[3, 1]), &p(&[2, 1])));
        assert!(!interlaces(&p(&[2, 2]), &p(&[1])));
        assert!(interlaces(&p(&[3, 2]), &p(&[3, 2])));
        assert!(co_interlaces(&p(&[2, 1]), &p(&[1, 1])));
        assert!(!co_interlaces(&p(&[1, 1]), &p(&[2])));
        assert!(co_interlaces(&p(&[2, 2, 1]), &p(&[2, 2, 1])));
    }

    #[test]
    fn tuple_interlacing() {
        let a = PartitionTuple(vec![p(&[3, 1]), p(&[2])]);
        let b = PartitionTuple(vec![p(&[2, 1]), p(&[1])]);
        assert!(tuple_interlaces(&a, &b).unwrap());
        assert!(tuple_interlaces(&PartitionTuple::empty(3), &PartitionTuple::empty(3)).unwrap());
        assert_eq!(
            tuple_interlaces(&PartitionTuple::empty(2), &PartitionTuple::empty(3)),
            Err(Error::ColorMismatch(2, 3))
        );
    }

    #[test]
    fn maya_example() {
        let w = MayaWindow::from_partition(&p(&[4, 3, 2, 2, 1]), 9, 5).unwrap();
        assert_eq!(w.to_string(), "∘•∘••|∘•∘•");
        let wide = MayaWindow::from_partition(&p(&[4, 3, 2, 2, 1]), 13, 7).unwrap();
        assert_eq!(wide.to_string(), "••∘•∘••|∘•∘•∘∘");
        assert_eq!(wide.to_partition().unwrap(), p(&[4, 3, 2, 2, 1]));
    }

    #[test]
    fn empty_window() {
        let w = MayaWindow::from_partition(&Partition::empty(), 6, 2).unwrap();
        assert_eq!(w.to_string(), "••|∘∘∘∘");
    }

    #[test]
    fn fit_violation() {
        assert!(MayaWindow::from_partition(&p(&[3]), 4, 2).is_err());
        assert!(MayaWindow::from_partition(&p(&[1, 1, 1]), 6, 2).is_err());
    }
}
