//! The `t = 0` bijection over whole zero-interaction classes, the frozen
//! structure of their paths, and the reflection involution.

use std::collections::BTreeSet;

use rayon::prelude::*;
use tilekit::algebra::{all_ones, Var};
use tilekit::aztec::{enumerate_ktilings, enumerate_tilings, KTiling};
use tilekit::bijections::{max_interactions, phi_involution, t0_forward, t0_inverse, zero_interaction_ktilings};
use tilekit::encodings::{generating_polynomial, interactions, tiling_weight, ModelKind};
use tilekit::schroder::{frozen_prefix, tiling_to_paths};

#[test]
fn t0_bijection_on_full_classes() {
    for m in 1..=4u32 {
        let tilings = enumerate_tilings(m).unwrap();
        let expected = 1usize << (m * (m + 1) / 2);
        for k in 1..=3 {
            let class = zero_interaction_ktilings(m, k, ModelKind::PurpleGray).unwrap();
            assert_eq!(class.len(), expected, "m={m} k={k}");
            let images: BTreeSet<_> = class
                .par_iter()
                .map(|kt| {
                    let t = t0_forward(kt).unwrap();
                    assert_eq!(&t0_inverse(&t, k).unwrap(), kt);
                    let single = KTiling::new(vec![t.clone()]).unwrap();
                    assert_eq!(tiling_weight(kt, ModelKind::PurpleGray), tiling_weight(&single, ModelKind::PurpleGray));
                    t
                })
                .collect();
            assert_eq!(images.len(), tilings.len());
        }
    }
}

#[test]
fn white_pink_zero_class_has_the_same_size() {
    for m in 1..=3u32 {
        for k in 2..=3 {
            let n = zero_interaction_ktilings(m, k, ModelKind::WhitePink).unwrap().len();
            assert_eq!(n, 1 << (m * (m + 1) / 2));
        }
    }
}

#[test]
fn frozen_prefixes_and_nesting() {
    for m in 1..=4u32 {
        for k in 2..=3 {
            for kt in zero_interaction_ktilings(m, k, ModelKind::PurpleGray).unwrap() {
                let families: Vec<_> = kt.layers().iter().map(tiling_to_paths).collect();
                for (a0, f) in families.iter().enumerate() {
                    for i in 1..=m as usize {
                        assert!(f.leading_east_steps(i) >= frozen_prefix(i, a0 + 1, k, m));
                    }
                }
                if k == 2 {
                    // The i-th blue path lies weakly below the i-th red path
                    // and strictly above the (i+1)-th.
                    let (blue, red) = (&families[0], &families[1]);
                    for i in 1..=m as usize {
                        let hb = blue.heights(i);
                        let hr = red.heights(i);
                        for (x, y) in &hb {
                            if let Some(yr) = hr.get(x) {
                                assert!(y <= yr);
                            }
                        }
                        if i < m as usize {
                            let below = red.heights(i + 1);
                            for (x, y) in &hb {
                                if let Some(yr) = below.get(x) {
                                    assert!(y > yr);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn frozen_prefix_two_colors() {
    // Blue: min(i, m−i+1); red: min(i−1, m−i+1).
    let m = 4;
    let blue: Vec<_> = (1..=4).map(|i| frozen_prefix(i, 1, 2, m)).collect();
    let red: Vec<_> = (1..=4).map(|i| frozen_prefix(i, 2, 2, m)).collect();
    assert_eq!(blue, vec![1, 2, 2, 1]);
    assert_eq!(red, vec![0, 1, 2, 1]);
}

#[test]
fn reflection_complements_interactions() {
    for m in 1..=3u32 {
        for k in 1..=3 {
            let top = max_interactions(m, k);
            enumerate_ktilings(m, k).unwrap().par_iter().for_each(|kt| {
                let r = phi_involution(kt);
                assert_eq!(&phi_involution(&r), kt);
                for model in ModelKind::ALL {
                    assert_eq!(interactions(kt, model) + interactions(&r, model), top);
                }
            });
        }
    }
}

#[test]
fn t_coefficients_are_palindromic() {
    for m in 1..=3u32 {
        for k in 1..=2 {
            let z = generating_polynomial(m, k, ModelKind::PurpleGray).unwrap();
            let c = z.specialize(&all_ones(m)).unwrap().univariate_coefficients(Var::t()).unwrap();
            let mut padded = c.clone();
            padded.resize(max_interactions(m, k) as usize + 1, Default::default());
            let rev: Vec<_> = padded.iter().rev().cloned().collect();
            assert_eq!(padded, rev, "m={m} k={k}");
        }
    }
}
