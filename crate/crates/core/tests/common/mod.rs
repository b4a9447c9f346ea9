#![allow(dead_code)]
use std::sync::Arc;

use chaincp_core::algebra::{chain_structure, Family, MemberSpec};
use chaincp_core::chain::ChainAction;
use chaincp_core::group::{builtin_q8, builtin_s3};

fn member(label: &str, constituents: &[(&str, usize)]) -> MemberSpec {
    MemberSpec {
        label: label.into(),
        constituents: constituents.iter().map(|(l, m)| (l.to_string(), *m)).collect(),
    }
}

/// Q8 with the class of the two-dimensional irrep swapping a two-point spectrum.
pub fn q8_swap_family() -> Arc<Family> {
    let data = builtin_q8();
    let (_, partition, _) = chain_structure(&data).unwrap();
    let rho = data.index_of("rho2").unwrap();
    let mut perms = vec![vec![0, 1]; partition.num_classes()];
    perms[partition.class_of(&rho).unwrap()] = vec![1, 0];
    Family::from_group(
        data,
        ChainAction { omega: 2, perms },
        vec![member("rho2", &[("rho2", 1)]), member("chi_i+chi_i", &[("chi_i", 2)])],
    )
    .unwrap()
}

/// S3 with trivial chain action on a two-point spectrum.
pub fn s3_family() -> Arc<Family> {
    Family::from_group(
        builtin_s3(),
        ChainAction::trivial(2, 1),
        vec![member("std+sgn", &[("std", 1), ("sgn", 1)]), member("triv+triv", &[("triv", 2)])],
    )
    .unwrap()
}

/// Z3 with its chain group acting by rotations of a three-point spectrum, so
/// that `α` and `α⁻¹` differ.
pub fn z3_rotation_family() -> Arc<Family> {
    let data = chaincp_core::group::builtin_cyclic(3);
    let (_, partition, _) = chain_structure(&data).unwrap();
    let mut perms = vec![vec![0, 1, 2]; 3];
    perms[partition.class_of(&data.index_of("chi1").unwrap()).unwrap()] = vec![1, 2, 0];
    perms[partition.class_of(&data.index_of("chi2").unwrap()).unwrap()] = vec![2, 0, 1];
    Family::from_group(
        data,
        ChainAction { omega: 3, perms },
        vec![member("chi1+chi2", &[("chi1", 1), ("chi2", 1)]), member("chi1+chi0", &[("chi1", 1), ("chi0", 1)])],
    )
    .unwrap()
}
