//! Colored lozenge tilings: the published table, closed forms for the
//! extreme coefficients, the flip symmetry, and both bijections.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;
use tilekit::algebra::{int, Poly, Var};
use tilekit::aztec::binom2;
use tilekit::hexagon::*;

fn pairs(region: HexRegion) -> Vec<KLozengeTiling> {
    let t = enumerate_lozenge(region).unwrap();
    t.iter()
        .flat_map(|b| t.iter().map(move |r| KLozengeTiling::new(vec![b.clone(), r.clone()]).unwrap()))
        .collect()
}

#[test]
fn table_one_matches_at_q_one() {
    for row in table1() {
        let p = hex_generating_polynomial(row.region, 2).unwrap();
        assert_eq!(t_coefficients_at_q_one(&p), row.coefficients, "{}", row.region);
        let mm = row.region.macmahon();
        assert_eq!(total_count(&p), &mm * &mm);
    }
}

#[test]
fn transfer_agrees_with_enumeration() {
    for (a, b, c) in [(1, 1, 1), (2, 1, 2), (2, 2, 2), (1, 2, 3), (3, 1, 1)] {
        let r = HexRegion::new(a, b, c);
        assert_eq!(hex_generating_polynomial(r, 2).unwrap(), hex_generating_polynomial_enumerated(r).unwrap(), "{r}");
    }
}

#[test]
fn pattern_count_equals_lattice_exponent() {
    for (a, b, c) in [(2, 2, 2), (3, 1, 2), (1, 3, 2)] {
        pairs(HexRegion::new(a, b, c)).par_iter().for_each(|kl| {
            assert_eq!(lozenge_interactions(kl), lattice_interactions(kl).unwrap());
        });
    }
    let t = enumerate_lozenge(HexRegion::new(1, 2, 1)).unwrap();
    for x in &t {
        for y in &t {
            for z in &t {
                let kl = KLozengeTiling::new(vec![x.clone(), y.clone(), z.clone()]).unwrap();
                assert_eq!(lozenge_interactions(&kl), lattice_interactions(&kl).unwrap());
            }
        }
    }
}

#[test]
fn closed_forms_for_every_table_row() {
    for row in table1() {
        let r = row.region;
        let p = hex_generating_polynomial(r, 2).unwrap();
        let t1 = p.specialize(&[(Var::t(), int(1))].into_iter().collect()).unwrap();
        assert_eq!(t1, closed_form_t_one(r, 2), "t = 1 at {r}");
        assert_eq!(t_coefficient(&p, 0), closed_form_t_zero(r, 2), "t^0 at {r}");
        let top = (binom2(2) * (r.a * r.b) as u64) as i64;
        assert_eq!(t_coefficient(&p, top), closed_form_t_top(r, 2), "top at {r}");
    }
}

#[test]
fn closed_forms_three_colors() {
    for (a, b, c) in [(1, 1, 2), (1, 2, 2), (2, 1, 1), (1, 1, 3)] {
        let r = HexRegion::new(a, b, c);
        let p = hex_generating_polynomial(r, 3).unwrap();
        assert_eq!(t_coefficient(&p, 0), closed_form_t_zero(r, 3), "{r}");
        assert_eq!(t_coefficient(&p, 3 * (a * b) as i64), closed_form_t_top(r, 3), "{r}");
    }
}

#[test]
fn flip_symmetry_shifts_interactions() {
    for (a, b, c) in [(2, 1, 1), (1, 2, 2), (2, 2, 1), (1, 1, 3)] {
        let r = HexRegion::new(a, b, c);
        let shift = flip_interaction_shift(r, 2);
        let mut seen = BTreeSet::new();
        for kl in pairs(r) {
            let f = hex_flip_symmetry(&kl).unwrap();
            assert_eq!(f.region, HexRegion::new(c, b, a));
            assert_eq!(lozenge_interactions(&f) as i64, lozenge_interactions(&kl) as i64 + shift);
            for (x, y) in kl.layers.iter().rev().zip(&f.layers) {
                let [t1, t2, t3] = x.to_lozenges().type_counts();
                assert_eq!(y.to_lozenges().type_counts(), [t1, t3, t2]);
            }
            assert_eq!(hex_flip_symmetry(&f).unwrap(), kl);
            seen.insert(f);
        }
        assert_eq!(BigInt::from(seen.len()), r.macmahon().pow(2));
    }
    // The example from the table: Z_{2,1,1} = t · Z_{1,1,2}.
    let z211 = hex_generating_polynomial(HexRegion::new(2, 1, 1), 2).unwrap();
    let z112 = hex_generating_polynomial(HexRegion::new(1, 1, 2), 2).unwrap();
    let mut shifted = vec![0];
    shifted.extend(t_coefficients_at_q_one(&z112));
    assert_eq!(t_coefficients_at_q_one(&z211), shifted);
    assert_eq!(flip_interaction_shift(HexRegion::new(1, 1, 2), 2), 1);
}

#[test]
fn t0_bijection_on_zero_classes() {
    for (a, b, c, k) in [(1, 1, 2, 2), (1, 2, 3, 2), (2, 2, 3, 2), (2, 1, 2, 2), (1, 2, 2, 3), (3, 1, 3, 2)] {
        let r = HexRegion::new(a, b, c);
        let tilings = enumerate_lozenge(r).unwrap();
        let mut class = Vec::new();
        let mut partial: Vec<Vec<HexTiling>> = tilings.iter().map(|t| vec![t.clone()]).collect();
        for _ in 1..k {
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    tilings.iter().filter_map(move |t| {
                        let mut q = p.clone();
                        q.push(t.clone());
                        (lozenge_interactions(&KLozengeTiling::new(q.clone()).unwrap()) == 0).then_some(q)
                    })
                })
                .collect();
        }
        for layers in partial {
            class.push(KLozengeTiling::new(layers).unwrap());
        }
        let target = t0_target(r, k).unwrap();
        assert_eq!(BigInt::from(class.len()), target.macmahon(), "{r} k={k}");
        let mut images = BTreeSet::new();
        for kl in &class {
            let t = hex_t0_forward(kl).unwrap();
            assert_eq!(&hex_t0_inverse(&t, k, r).unwrap(), kl);
            let q: u64 = kl.layers.iter().map(|l| l.q_exponent()).sum();
            assert_eq!(q, t.q_exponent());
            images.insert(t);
        }
        assert_eq!(images.len(), class.len());
    }
    assert!(t0_target(HexRegion::new(2, 1, 1), 2).is_none());
}

#[test]
fn tinf_bijection_on_top_classes() {
    for (a, b, c, k) in [(1, 1, 1, 2), (2, 2, 2, 2), (2, 1, 3, 2), (1, 2, 2, 3), (3, 1, 1, 2)] {
        let r = HexRegion::new(a, b, c);
        let top = binom2(k as u64) * (a * b) as u64;
        let target = HexRegion::new(a, k as u32 * b, c);
        let mut count = 0usize;
        for t in enumerate_lozenge(target).unwrap() {
            let kl = hex_tinf_inverse(&t, k).unwrap();
            assert_eq!(lozenge_interactions(&kl), top, "{r} k={k}");
            assert_eq!(hex_tinf_forward(&kl).unwrap(), t);
            count += 1;
        }
        // Every top-degree tuple is hit.
        let z = hex_generating_polynomial(r, k).unwrap();
        assert_eq!(total_count(&t_coefficient(&z, top as i64)), BigInt::from(count));
    }
}

#[test]
fn q_weights_match_the_lattice_rows() {
    let r = HexRegion::new(2, 2, 1);
    let mut direct = Poly::zero();
    for kl in pairs(r) {
        direct.add_term(lozenge_weight(&kl), int(1));
    }
    assert_eq!(direct, hex_generating_polynomial(r, 2).unwrap());
}
