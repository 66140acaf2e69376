//! Exhaustive checks of the vertex weights and the Yang–Baxter identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tilekit::algebra::{rat, Monomial, Poly, Rational, Var};
use tilekit::encodings::{ktiling_to_sequence, weight, ModelKind};
use tilekit::golden::rank3_three_coloring;
use tilekit::vertex::*;

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.random_range(1..=40), rng.random_range(1..=40))
}

#[test]
fn graphical_equals_algebraic_for_all_faces() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let p = VertexParams::new(random_rational(&mut rng), random_rational(&mut rng), random_rational(&mut rng));
        for k in 1..=3 {
            for family in Family::ALL {
                for f in FaceConfig::all(k) {
                    assert_eq!(
                        weight_algebraic(family, k, &p, f).unwrap(),
                        weight_graphical(family, k, &p, f).unwrap(),
                        "{family} k={k} {f:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn yang_baxter_numeric_up_to_three_colors() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 1..=3 {
        for triple in YbeTriple::ALL {
            let (x, y, t) = (random_rational(&mut rng), random_rational(&mut rng), random_rational(&mut rng));
            let report = ybe_check(k, triple, &x, &y, &t).unwrap();
            assert!(report.holds(), "{triple:?} k={k}: {:?}", report.failures);
        }
    }
}

#[test]
fn yang_baxter_symbolic_two_colors() {
    for triple in YbeTriple::ALL {
        let report = ybe_check_symbolic(2, triple);
        assert!(report.holds(), "{triple:?}: {:?}", report.failures);
    }
}

#[test]
fn unbalanced_boundaries_vanish() {
    let report_sides = |triple: YbeTriple| {
        let (lo, up) = triple.families();
        let (x, y, t) = (rat(2, 3), rat(5, 7), rat(3, 11));
        let w = triple.cross_parameter(2, &x, &y, &t).unwrap();
        let table = |fam: Family, v: &Rational| -> WeightTable<Rational> {
            let p = VertexParams::new(v.clone(), rat(1, 1), t.clone());
            FaceConfig::all(2)
                .map(|f| (f, weight_algebraic(fam, 2, &p, f).unwrap()))
                .filter(|(_, w)| *w != rat(0, 1))
                .collect()
        };
        let cross: WeightTable<Rational> = FaceConfig::all(2)
            .map(|f| (f, r_prime_at(2, &w, &t, f).unwrap()))
            .filter(|(_, w)| *w != rat(0, 1))
            .collect();
        ybe_sides(&cross, &table(lo, &x), &table(up, &y))
    };
    for triple in YbeTriple::ALL {
        let (lhs, rhs) = report_sides(triple);
        for [i1, j1, k1, i3, j3, k3] in lhs.keys().chain(rhs.keys()).copied() {
            for c in 0..2 {
                let inflow = (i1 >> c & 1) + (j1 >> c & 1) + (k1 >> c & 1);
                let outflow = (i3 >> c & 1) + (j3 >> c & 1) + (k3 >> c & 1);
                assert_eq!(inflow, outflow);
            }
        }
    }
}

#[test]
fn golden_three_coloring_configuration_weight() {
    let kt = rank3_three_coloring();
    let spec = aztec_lattice_spec(3, 3, ModelKind::PurpleGray).unwrap();
    let seq = ktiling_to_sequence(&kt, ModelKind::PurpleGray);
    let config = sequence_to_config(&spec, &seq.steps).unwrap();
    let expected = weight(&kt, ModelKind::PurpleGray).mul_monomial(&lattice_constant(3, 3, ModelKind::PurpleGray));
    assert_eq!(config_weight(&spec, &config).unwrap(), expected);
    let mono = Monomial::from_pairs([
        (Var::x(1), 6),
        (Var::x(2), 2),
        (Var::x(3), 1),
        (Var::y(1), 8),
        (Var::y(2), 7),
        (Var::y(3), 3),
        (Var::t(), 20),
    ]);
    assert_eq!(expected, Poly::monomial(mono));
}
