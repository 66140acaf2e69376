//! Arctic-curve families: reductions, agreement of the general-`k` formula
//! with the two-color one, junction continuity, and containment.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tilekit::algebra::Rational;
use tilekit::arctic::*;

/// The two-color curve written out directly.
fn two_color_quadratics() -> Vec<[Surd; 6]> {
    let sq = |u: Affine, v: Affine| {
        CurveBranch { name: String::new(), squares: [u, v], rhs: Surd::frac(1, 2), domain: vec![] }.quadratic()
    };
    vec![
        sq(Affine::ints(1, 0, 0, 1), Affine::ints(0, 1, 0, 1)),
        sq(Affine::ints(3, 1, -1, 2), Affine::ints(1, 3, -1, 2)),
        sq(Affine::ints(1, 1, 0, 1), Affine::ints(0, 2, 0, 1)),
        sq(Affine::ints(3, 1, -1, 4), Affine::ints(-1, 5, -1, 4)),
    ]
}

#[test]
fn one_color_collapses_to_the_circle() {
    let f = aztec_t0_curves(1);
    assert!(is_unit_circle(&f));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let x = Rational::new(rng.random_range(-1000i64..=1000).into(), 997.into());
        let y = Rational::new(rng.random_range(-1000i64..=1000).into(), 991.into());
        let expected = Surd::rational(&x * &x + &y * &y - Rational::new(1.into(), 2.into()));
        for b in &f.branches {
            assert_eq!(b.residual_exact(&x, &y), expected);
        }
    }
}

#[test]
fn general_formula_at_two_colors() {
    let f = aztec_t0_curves(2);
    let direct = two_color_quadratics();
    for (b, q) in f.branches.iter().zip(&direct) {
        assert_eq!(&b.quadratic(), q, "{}", b.name);
    }
    // Junctions at (±1/2, 1/2), (3/4, −1/4), (−1/4, −1/4).
    let mut ends: Vec<(f64, f64)> = f.branches.iter().flat_map(|b| b.endpoints()).collect();
    ends.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ends.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9);
    let want = [(-0.5, 0.5), (-0.25, -0.25), (0.5, 0.5), (0.75, -0.25)];
    assert_eq!(ends.len(), 4);
    for (e, w) in ends.iter().zip(want) {
        assert!((e.0 - w.0).abs() < 1e-9 && (e.1 - w.1).abs() < 1e-9, "{e:?} vs {w:?}");
    }
}

#[test]
fn junctions_are_continuous() {
    for k in 1..=8 {
        assert!(aztec_t0_curves(k).junction_gap() < 1e-9);
        assert!(aztec_tinf_curves(k).junction_gap() < 1e-9);
    }
    assert!(hexagon_t0_curves().junction_gap() < 1e-9);
    assert!(hexagon_tinf_curves().junction_gap() < 1e-9);
}

#[test]
fn reflection_relates_the_two_limits() {
    for k in 1..=4 {
        let (t0, tinf) = (aztec_t0_curves(k), aztec_tinf_curves(k));
        let outline = tinf.outline(POLYLINE_SAMPLES);
        for b in &t0.branches {
            for (x, y) in b.polyline(200) {
                assert_eq!(tinf.classify_with_outline((y, x), 1e-9, &outline), Side::Near);
            }
        }
    }
    assert_eq!(aztec_tinf_curves(1).classify((0.3, 0.4), 1e-9), Side::Inside);
}

#[test]
fn curves_stay_in_their_regions() {
    for f in [aztec_t0_curves(2), aztec_t0_curves(3), aztec_tinf_curves(2), hexagon_t0_curves(), hexagon_tinf_curves()] {
        for line in f.polylines(400) {
            for p in line.points {
                assert!(f.ambient.contains((p[0], p[1]), 1e-9), "{} {:?}", f.name, p);
            }
        }
    }
}

#[test]
fn hexagon_families() {
    let t0 = hexagon_t0_curves();
    let b2 = &t0.branches[1];
    let circle = [Surd::frac(1, 1), Surd::zero(), Surd::frac(1, 1), Surd::zero(), Surd::zero(), Surd::frac(-3, 1)];
    assert_eq!(b2.quadratic(), circle);
    let tinf = hexagon_tinf_curves();
    assert_ne!(t0.branches, tinf.branches);
    assert_ne!(t0.ambient, tinf.ambient);
    // Both curves are tangent to the top and bottom sides of their hexagons.
    let r3 = 3f64.sqrt();
    for (f, top, bottom) in [(&t0, (0.0, r3), (-1.0, -r3)), (&tinf, (-0.5, r3), (-0.5, -r3))] {
        for p in [top, bottom] {
            assert_eq!(f.classify(p, 1e-9), Side::Near, "{} {p:?}", f.name);
            assert!(f.ambient.contains(p, 1e-9));
        }
    }
    assert_eq!(t0.classify((0.0, 0.0), 1e-9), Side::Inside);
    assert_eq!(t0.classify((0.0, -1.7), 1e-9), Side::Outside);
}
