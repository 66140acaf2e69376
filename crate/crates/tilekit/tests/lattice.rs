//! Lattice partition functions against the tiling side: the configurations
//! are the particle sequences of the tilings, and the partition function is
//! a fixed monomial times the product formula.

use std::collections::BTreeMap;

use tilekit::algebra::{aztec_product, Poly};
use tilekit::aztec::enumerate_ktilings;
use tilekit::encodings::{ktiling_to_sequence, weight, ModelKind};
use tilekit::vertex::{
    aztec_lattice_spec, config_to_sequence, config_weight, lattice_configurations, lattice_constant,
    lattice_partition_function, sequence_to_config,
};

#[test]
fn partition_function_is_constant_times_product() {
    for model in ModelKind::ALL {
        for (m, k) in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2)] {
            let spec = aztec_lattice_spec(m, k, model).unwrap();
            let z = lattice_partition_function(&spec).unwrap();
            let expected = aztec_product(m, k as u32).mul_monomial(&lattice_constant(m, k, model));
            assert_eq!(z, expected, "{model} m={m} k={k}");
        }
    }
}

#[test]
fn configurations_are_tiling_sequences() {
    for model in ModelKind::ALL {
        for (m, k) in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2)] {
            let spec = aztec_lattice_spec(m, k, model).unwrap();
            let constant = lattice_constant(m, k, model);
            let configs: BTreeMap<_, Poly> = lattice_configurations(&spec).unwrap().into_iter().collect();
            let tilings = enumerate_ktilings(m, k).unwrap();
            assert_eq!(configs.len(), tilings.len(), "{model} m={m} k={k}");
            for kt in &tilings {
                let seq = ktiling_to_sequence(kt, model);
                let config = sequence_to_config(&spec, &seq.steps).unwrap();
                assert_eq!(config_to_sequence(&spec, &config).unwrap(), seq.steps);
                let expected = weight(kt, model).mul_monomial(&constant);
                assert_eq!(configs.get(&config), Some(&expected), "{model} m={m} k={k}");
                assert_eq!(config_weight(&spec, &config).unwrap(), expected);
            }
        }
    }
}

#[test]
fn three_colors_symbolic() {
    for model in ModelKind::ALL {
        for m in 1..=3 {
            let spec = aztec_lattice_spec(m, 3, model).unwrap();
            let z = lattice_partition_function(&spec).unwrap();
            let expected = aztec_product(m, 3).mul_monomial(&lattice_constant(m, 3, model));
            assert_eq!(z, expected, "{model} m={m}");
        }
    }
}
