//! The `t = 0` shift bijection and the diagonal-reflection involution.
//!
//! At `t = 0` only `k`-tilings without purple-gray interactions survive, and
//! their Schröder paths are rigid: path `i` of color `a` starts with at
//! least `s = i(k−1) − a + 1` east steps, and the colors nest in a fixed
//! order. Shifting that path `s` steps down and `s` steps left pushes the
//! frozen prefix out of the diamond and lands the rest on global path
//! `j = ik − a + 1` of a single tiling (paths with `j > m` are frozen
//! entirely and disappear). East steps carry no weight and the shift
//! preserves slices, so the bijection preserves the `x`/`y` weight.
//!
//! Reflection across `y = x` maps a `k`-tiling with `j` interactions to one
//! with `C(k,2)·C(m+1,2) − j`, exchanging the `t = 0` and the top-degree
//! classes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::aztec::{binom2, enumerate_tilings, KTiling, Tiling, TilingGrid};
use crate::encodings::{interactions, pair_interactions, ModelKind};
use crate::error::{Error, Result};
use crate::schroder::{paths_to_tiling, tiling_to_paths, SchroderPathFamily, SchroderStep};

/// Where each colored path goes under the `t = 0` bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftPlan {
    pub rank: u32,
    pub colors: usize,
}

impl ShiftPlan {
    pub fn new(rank: u32, colors: usize) -> ShiftPlan {
        ShiftPlan { rank, colors }
    }

    /// Diagonal shift `i(k−1) − a + 1` of path `i` of color `a` (1-based).
    pub fn shift(&self, i: usize, a: usize) -> usize {
        i * (self.colors - 1) + 1 - a
    }

    /// Global path index `ik − a + 1` after the shift.
    pub fn target(&self, i: usize, a: usize) -> usize {
        i * self.colors + 1 - a
    }

    /// Whether the path survives the shift (its target is a path of the
    /// rank-`m` diamond).
    pub fn survives(&self, i: usize, a: usize) -> bool {
        self.target(i, a) <= self.rank as usize
    }
}

fn check_colors(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Invalid("at least one color is required".into()));
    }
    Ok(())
}

/// Merges a zero-interaction `k`-tiling into one tiling.
pub fn t0_forward(kt: &KTiling) -> Result<Tiling> {
    let (m, k) = (kt.rank(), kt.k());
    let n = interactions(kt, ModelKind::PurpleGray);
    if n != 0 {
        return Err(Error::Interactions(format!("input has {n} interactions")));
    }
    let plan = ShiftPlan::new(m, k);
    let mut merged: Vec<Option<Vec<SchroderStep>>> = vec![None; m as usize];
    for (a0, layer) in kt.layers().iter().enumerate() {
        let family = tiling_to_paths(layer);
        for i in 1..=m as usize {
            let a = a0 + 1;
            let s = plan.shift(i, a);
            let path = &family.paths[i - 1];
            let frozen = if plan.survives(i, a) { s } else { path.len() };
            if family.leading_east_steps(i) < frozen {
                return Err(Error::Invalid(format!("path {i} of color {a} is not frozen for {frozen} steps")));
            }
            if plan.survives(i, a) {
                merged[plan.target(i, a) - 1] = Some(path[s..].to_vec());
            }
        }
    }
    let paths = merged.into_iter().map(|p| p.expect("every target path is hit once")).collect();
    paths_to_tiling(&SchroderPathFamily { rank: m, paths })
}

/// Splits one tiling into the zero-interaction `k`-tiling it comes from.
pub fn t0_inverse(tiling: &Tiling, k: usize) -> Result<KTiling> {
    check_colors(k)?;
    let m = tiling.rank();
    let plan = ShiftPlan::new(m, k);
    let family = tiling_to_paths(tiling);
    let mut layers = Vec::with_capacity(k);
    for a in 1..=k {
        let mut paths = Vec::with_capacity(m as usize);
        for i in 1..=m as usize {
            if plan.survives(i, a) {
                let mut p = vec![SchroderStep::E; plan.shift(i, a)];
                p.extend_from_slice(&family.paths[plan.target(i, a) - 1]);
                paths.push(p);
            } else {
                paths.push(vec![SchroderStep::E; m as usize + 1 - i]);
            }
        }
        layers.push(paths_to_tiling(&SchroderPathFamily { rank: m, paths })?);
    }
    KTiling::new(layers)
}

/// Reflection across `y = x`, layer by layer.
pub fn phi_involution(kt: &KTiling) -> KTiling {
    kt.reflect_diagonal()
}

/// The largest possible interaction count `C(k,2)·C(m+1,2)`.
pub fn max_interactions(m: u32, k: usize) -> u64 {
    binom2(k as u64) * binom2(m as u64 + 1)
}

/// Every `k`-tiling with no interactions in the given model, built color by
/// color so that each new layer is checked only against the earlier ones.
pub fn zero_interaction_ktilings(m: u32, k: usize, model: ModelKind) -> Result<Vec<KTiling>> {
    check_colors(k)?;
    let tilings = enumerate_tilings(m)?;
    let grids: Vec<TilingGrid> = tilings.iter().map(TilingGrid::from_tiling).collect();
    let n = tilings.len();
    // compatible[b][r]: blue tiling b and red tiling r do not interact.
    let compatible: Vec<Vec<bool>> = (0..n)
        .into_par_iter()
        .map(|b| (0..n).map(|r| pair_interactions(&grids[b], &tilings[r], model) == 0).collect())
        .collect();
    let mut partial: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    for _ in 1..k {
        partial = partial
            .into_par_iter()
            .flat_map_iter(|prefix| {
                (0..n)
                    .filter(|&r| prefix.iter().all(|&b| compatible[b][r]))
                    .map(|r| {
                        let mut p = prefix.clone();
                        p.push(r);
                        p
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    partial
        .into_iter()
        .map(|ix| KTiling::new(ix.into_iter().map(|i| tilings[i].clone()).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aztec::enumerate_ktilings;
    use crate::encodings::tiling_weight;

    #[test]
    fn shift_plan_targets_cover_each_path_once() {
        for k in 1..=4 {
            let plan = ShiftPlan::new(6, k);
            let mut seen: Vec<usize> = (1..=6)
                .flat_map(|i| (1..=k).map(move |a| (i, a)))
                .filter(|&(i, a)| plan.survives(i, a))
                .map(|(i, a)| plan.target(i, a))
                .collect();
            seen.sort();
            assert_eq!(seen, (1..=6).collect::<Vec<_>>());
        }
    }

    #[test]
    fn all_horizontal_preimage() {
        for k in 1..=3 {
            let kt = t0_inverse(&Tiling::all_horizontal(3), k).unwrap();
            assert_eq!(interactions(&kt, ModelKind::PurpleGray), 0);
            assert_eq!(t0_forward(&kt).unwrap(), Tiling::all_horizontal(3));
        }
    }

    #[test]
    fn round_trip_rank_three() {
        for k in 2..=3 {
            for t in enumerate_tilings(3).unwrap() {
                let kt = t0_inverse(&t, k).unwrap();
                assert_eq!(interactions(&kt, ModelKind::PurpleGray), 0);
                assert_eq!(t0_forward(&kt).unwrap(), t);
                let w = tiling_weight(&kt, ModelKind::PurpleGray);
                let w1 = tiling_weight(&KTiling::new(vec![t.clone()]).unwrap(), ModelKind::PurpleGray);
                assert_eq!(w, w1);
            }
        }
    }

    #[test]
    fn forward_rejects_interacting_input() {
        let kt = enumerate_ktilings(2, 2)
            .unwrap()
            .into_iter()
            .find(|kt| interactions(kt, ModelKind::PurpleGray) > 0)
            .unwrap();
        assert!(matches!(t0_forward(&kt), Err(Error::Interactions(_))));
    }

    #[test]
    fn phi_complements_interactions_rank_two() {
        for kt in enumerate_ktilings(2, 2).unwrap() {
            let r = phi_involution(&kt);
            assert_eq!(phi_involution(&r), kt);
            for model in ModelKind::ALL {
                assert_eq!(interactions(&kt, model) + interactions(&r, model), 3);
            }
        }
    }
}
