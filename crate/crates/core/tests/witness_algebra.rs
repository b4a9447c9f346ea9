//! A candidate witness `(Z, Z_k)` verifies exactly when `φ = Σ_k ψ_k Z_k`
//! satisfies `φφ* = Z` in the generator algebra of the bimodule.

use chaincp_core::algebra::{AlgebraElement, Family};
use chaincp_core::bimodule::{
    exhaustive_indicator_witness, find_singularity_witness, verify_witness, CentralElement, DiagonalBimodule, Witness,
};
use chaincp_core::scalar::Cyclotomic;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn tuples(perms: &[Vec<usize>], rank: usize) -> Vec<Vec<Vec<usize>>> {
    (0..rank).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                perms.iter().map(move |p| {
                    let mut t = t.clone();
                    t.push(p.clone());
                    t
                })
            })
            .collect()
    })
}

fn phi_phi_star_is_z(b: &DiagonalBimodule, w: &Witness) -> bool {
    let family = Family::from_bimodule("H", b).unwrap();
    let mut phi = AlgebraElement::zero(&family);
    for (k, zk) in w.components.iter().enumerate() {
        let term = AlgebraElement::term(&family, vec![vec![k]], vec![vec![]], zk.clone()).unwrap();
        phi = phi.add(&term).unwrap();
    }
    let lhs = phi.multiply(&phi.adjoint()).unwrap();
    lhs.equals(&AlgebraElement::central(&family, w.z.clone())).unwrap()
}

fn indicator(mask: u32, omega: usize) -> CentralElement {
    CentralElement::new(
        (0..omega)
            .map(|i| if mask >> i & 1 == 1 { Cyclotomic::one() } else { Cyclotomic::zero() })
            .collect(),
    )
}

#[test]
fn witness_criterion_matches_rank_one_operator_identity() {
    for omega in 1..=3 {
        let perms = permutations(omega);
        for rank in 1..=3 {
            for t in tuples(&perms, rank) {
                let b = DiagonalBimodule::from_permutations(omega, t).unwrap();
                if let Some(w) = find_singularity_witness(&b) {
                    assert!(verify_witness(&b, &w));
                    assert!(phi_phi_star_is_z(&b, &w));
                }
                if let Some(w) = exhaustive_indicator_witness(&b) {
                    assert!(phi_phi_star_is_z(&b, &w));
                }
                // candidates that may fail, including non-indicator component choices
                for mask in 1u32..(1 << omega) {
                    let z = indicator(mask, omega);
                    let forced = Witness {
                        z: z.clone(),
                        components: (0..rank).map(|k| b.alpha(k, &z)).collect(),
                    };
                    assert_eq!(verify_witness(&b, &forced), phi_phi_star_is_z(&b, &forced));
                    let shifted = Witness {
                        z: z.clone(),
                        components: (0..rank).map(|k| indicator(mask.rotate_left(k as u32) & ((1 << omega) - 1), omega)).collect(),
                    };
                    assert_eq!(verify_witness(&b, &shifted), phi_phi_star_is_z(&b, &shifted));
                }
            }
        }
    }
}
