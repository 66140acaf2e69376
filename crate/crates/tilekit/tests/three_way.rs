//! Interaction counts agree across the three descriptions: domino
//! patterns, Schröder paths, and the `t`-exponent of the vertex lattice.

use rayon::prelude::*;
use tilekit::algebra::Var;
use tilekit::aztec::{enumerate_ktilings, enumerate_tilings, KTiling, TilingGrid};
use tilekit::encodings::{interactions, ktiling_to_sequence, pair_interactions, xy_weight, ModelKind};
use tilekit::schroder::{pair_path_interactions, path_xy_weight, paths_to_tiling, tiling_to_paths, PathGeometry};
use tilekit::vertex::{aztec_lattice_spec, config_weight, lattice_constant, sequence_to_config};

#[test]
fn paths_round_trip_and_weights() {
    for m in 1..=4 {
        for t in enumerate_tilings(m).unwrap() {
            let f = tiling_to_paths(&t);
            assert_eq!(paths_to_tiling(&f).unwrap(), t);
            for model in ModelKind::ALL {
                assert_eq!(path_xy_weight(&f, model).unwrap(), xy_weight(&t, model));
            }
        }
    }
}

#[test]
fn pattern_and_path_interactions_agree_on_all_pairs() {
    for m in 1..=3 {
        let tilings = enumerate_tilings(m).unwrap();
        let grids: Vec<TilingGrid> = tilings.iter().map(TilingGrid::from_tiling).collect();
        let geo: Vec<PathGeometry> = tilings.iter().map(|t| PathGeometry::new(&tiling_to_paths(t))).collect();
        for b in 0..tilings.len() {
            for (r, red) in tilings.iter().enumerate() {
                assert_eq!(
                    pair_interactions(&grids[b], red, ModelKind::PurpleGray),
                    pair_path_interactions(&geo[b], &geo[r]),
                    "m={m} blue={b} red={r}"
                );
            }
        }
    }
}

fn lattice_t_exponent(kt: &KTiling, model: ModelKind) -> i64 {
    let (m, k) = (kt.rank(), kt.k());
    let spec = aztec_lattice_spec(m, k, model).unwrap();
    let config = sequence_to_config(&spec, &ktiling_to_sequence(kt, model).steps).unwrap();
    let w = config_weight(&spec, &config).unwrap();
    let (mono, _) = w.as_monomial().expect("a configuration has a monomial weight");
    mono.exponent(Var::t()) - lattice_constant(m, k, model).exponent(Var::t())
}

#[test]
fn lattice_t_exponent_is_interaction_count() {
    for model in ModelKind::ALL {
        for (m, k) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3)] {
            enumerate_ktilings(m, k).unwrap().par_iter().for_each(|kt| {
                assert_eq!(lattice_t_exponent(kt, model), interactions(kt, model) as i64, "{model} m={m} k={k}");
            });
        }
    }
}
