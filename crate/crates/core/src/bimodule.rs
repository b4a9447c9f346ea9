//! Free diagonal bimodules over the functions on a finite spectrum, with the
//! stated nonsingularity criterion, the pointwise separation predicate and
//! exact singularity witnesses.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::chain::{invert, is_permutation, ChainAction};
use crate::error::BimoduleError;
use crate::scalar::Cyclotomic;

/// Finite point set `{0, …, m−1}`, `m ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GelfandSpectrum {
    size: usize,
}

impl GelfandSpectrum {
    pub fn new(size: usize) -> Result<Self, BimoduleError> {
        if size == 0 {
            return Err(BimoduleError::EmptySpectrum);
        }
        Ok(GelfandSpectrum { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// Function on the spectrum with exact values; operations are pointwise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CentralElement(Vec<Cyclotomic>);

impl CentralElement {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        CentralElement(values)
    }

    pub fn constant(value: Cyclotomic, size: usize) -> Self {
        CentralElement(vec![value; size])
    }

    pub fn zero(size: usize) -> Self {
        Self::constant(Cyclotomic::zero(), size)
    }

    pub fn one(size: usize) -> Self {
        Self::constant(Cyclotomic::one(), size)
    }

    pub fn indicator(point: usize, size: usize) -> Self {
        let mut v = vec![Cyclotomic::zero(); size];
        v[point] = Cyclotomic::one();
        CentralElement(v)
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Cyclotomic::is_zero)
    }

    pub fn conjugate(&self) -> Self {
        CentralElement(self.0.iter().map(Cyclotomic::conjugate).collect())
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        CentralElement(self.0.iter().map(|x| x * c).collect())
    }

    /// `Z∘π`, that is `ω ↦ Z(π(ω))`.
    pub fn compose(&self, perm: &[usize]) -> Self {
        CentralElement(perm.iter().map(|&p| self.0[p].clone()).collect())
    }
}

impl fmt::Debug for CentralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter().map(|x| format!("{x}"))).finish()
    }
}

impl fmt::Display for CentralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl<'a> Add<&'a CentralElement> for &'a CentralElement {
    type Output = CentralElement;
    fn add(self, rhs: &'a CentralElement) -> CentralElement {
        CentralElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a CentralElement> for &'a CentralElement {
    type Output = CentralElement;
    fn sub(self, rhs: &'a CentralElement) -> CentralElement {
        CentralElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl<'a> Mul<&'a CentralElement> for &'a CentralElement {
    type Output = CentralElement;
    fn mul(self, rhs: &'a CentralElement) -> CentralElement {
        CentralElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a * b).collect())
    }
}

impl Neg for &CentralElement {
    type Output = CentralElement;
    fn neg(self) -> CentralElement {
        CentralElement(self.0.iter().map(|a| -a).collect())
    }
}

/// One adapted basis vector: its constituent, copy and internal index, its
/// chain class and the point map `f_k`, so that `(α_k⁻¹ Z)(ω) = Z(f_k(ω))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub constituent: String,
    pub copy: usize,
    pub internal: usize,
    pub chain_class: usize,
    pub point_map: Vec<usize>,
}

/// Constituent of a representation in adapted order: label, chain class,
/// dimension and multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstituentSpec {
    pub label: String,
    pub chain_class: usize,
    pub dim: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalBimodule {
    spectrum: GelfandSpectrum,
    basis: Vec<BasisVector>,
}

impl DiagonalBimodule {
    /// Bimodule whose `k`-th basis vector twists by `perms[k]`.
    pub fn from_permutations(omega: usize, perms: Vec<Vec<usize>>) -> Result<Self, BimoduleError> {
        let spectrum = GelfandSpectrum::new(omega)?;
        for (index, p) in perms.iter().enumerate() {
            if !is_permutation(p, omega) {
                return Err(BimoduleError::NotAPermutation { index, size: omega });
            }
        }
        let basis = perms
            .into_iter()
            .enumerate()
            .map(|(k, point_map)| BasisVector {
                constituent: format!("e{k}"),
                copy: 0,
                internal: 0,
                chain_class: k,
                point_map,
            })
            .collect();
        Ok(DiagonalBimodule { spectrum, basis })
    }

    pub fn spectrum(&self) -> GelfandSpectrum {
        self.spectrum
    }

    pub fn omega(&self) -> usize {
        self.spectrum.size
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn point_map(&self, k: usize) -> &[usize] {
        &self.basis[k].point_map
    }

    /// `α_k(Z) = Z∘f_k⁻¹`.
    pub fn alpha(&self, k: usize, z: &CentralElement) -> CentralElement {
        z.compose(&invert(&self.basis[k].point_map))
    }

    /// `α_k⁻¹(Z) = Z∘f_k`.
    pub fn alpha_inv(&self, k: usize, z: &CentralElement) -> CentralElement {
        z.compose(&self.basis[k].point_map)
    }
}

/// Lays out the adapted basis (constituent, then copy, then internal index)
/// and assigns to each vector the permutation of its chain class.
pub fn build_bimodule(constituents: &[ConstituentSpec], action: &ChainAction) -> Result<DiagonalBimodule, BimoduleError> {
    let spectrum = GelfandSpectrum::new(action.omega)?;
    let mut basis = Vec::new();
    for c in constituents {
        let perm = action
            .perm(c.chain_class)
            .ok_or_else(|| BimoduleError::MissingClass(c.label.clone()))?;
        if !is_permutation(perm, action.omega) {
            return Err(BimoduleError::NotAPermutation {
                index: c.chain_class,
                size: action.omega,
            });
        }
        for copy in 0..c.multiplicity {
            for internal in 0..c.dim {
                basis.push(BasisVector {
                    constituent: c.label.clone(),
                    copy,
                    internal,
                    chain_class: c.chain_class,
                    point_map: perm.to_vec(),
                });
            }
        }
    }
    Ok(DiagonalBimodule { spectrum, basis })
}

/// Stated criterion: two distinct basis vectors twist by the same map.
pub fn is_nonsingular_stated(b: &DiagonalBimodule) -> bool {
    let n = b.rank();
    (0..n).any(|h| (h + 1..n).any(|k| b.point_map(h) == b.point_map(k)))
}

/// First point `ω` at which all `f_h(ω)` are pairwise distinct.
pub fn separated_point(b: &DiagonalBimodule) -> Option<usize> {
    (0..b.omega()).find(|&w| {
        let mut seen = vec![false; b.omega()];
        b.basis().iter().all(|v| !core::mem::replace(&mut seen[v.point_map[w]], true))
    })
}

/// Pointwise criterion: every point has a collision `f_h(ω) = f_k(ω)`.
pub fn is_nonsingular_pointwise(b: &DiagonalBimodule) -> bool {
    separated_point(b).is_none()
}

/// `Z` with coefficient functions `Z_1 … Z_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub z: CentralElement,
    pub components: Vec<CentralElement>,
}

/// Indicator witness at a separated point: `Z = δ_ω`, `Z_k = δ_{f_k(ω)}`;
/// rank one gives `Z = Z_1 = 1`.
pub fn find_singularity_witness(b: &DiagonalBimodule) -> Option<Witness> {
    let m = b.omega();
    if b.rank() == 1 {
        return Some(Witness {
            z: CentralElement::one(m),
            components: vec![CentralElement::one(m)],
        });
    }
    let w = separated_point(b)?;
    Some(Witness {
        z: CentralElement::indicator(w, m),
        components: b
            .basis()
            .iter()
            .map(|v| CentralElement::indicator(v.point_map[w], m))
            .collect(),
    })
}

/// Exact check of `Z_h Z_k* = 0` for `h ≠ k` and `Z_k Z_k* = α_k(Z)`.
pub fn verify_witness(b: &DiagonalBimodule, w: &Witness) -> bool {
    let n = b.rank();
    if w.components.len() != n || w.z.len() != b.omega() || w.components.iter().any(|c| c.len() != b.omega()) {
        return false;
    }
    let orthogonal = (0..n).all(|h| {
        (0..n).all(|k| h == k || (&w.components[h] * &w.components[k].conjugate()).is_zero())
    });
    orthogonal && (0..n).all(|k| &w.components[k] * &w.components[k].conjugate() == b.alpha(k, &w.z))
}

/// Searches all nonzero indicator functions `Z` with `Z_k = α_k(Z)` forced
/// by the norm condition; returns the first that verifies.
pub fn exhaustive_indicator_witness(b: &DiagonalBimodule) -> Option<Witness> {
    let m = b.omega();
    assert!(m <= 20, "exhaustive search is limited to small spectra");
    (1u32..(1 << m)).find_map(|mask| {
        let z = CentralElement::new(
            (0..m)
                .map(|i| if mask >> i & 1 == 1 { Cyclotomic::one() } else { Cyclotomic::zero() })
                .collect(),
        );
        let components = (0..b.rank()).map(|k| b.alpha(k, &z)).collect();
        let w = Witness { z, components };
        verify_witness(b, &w).then_some(w)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::ChainAction;

    fn bimod(omega: usize, perms: Vec<Vec<usize>>) -> DiagonalBimodule {
        DiagonalBimodule::from_permutations(omega, perms).unwrap()
    }

    #[test]
    fn build_from_chain_action() {
        let action = ChainAction {
            omega: 2,
            perms: vec![vec![0, 1], vec![1, 0]],
        };
        let half = ConstituentSpec {
            label: "1/2".into(),
            chain_class: 1,
            dim: 2,
            multiplicity: 1,
        };
        let b = build_bimodule(&[half], &action).unwrap();
        assert_eq!(b.rank(), 2);
        assert!(b.basis().iter().all(|v| v.point_map == vec![1, 0]));
        assert!(is_nonsingular_stated(&b));
        let triv = ConstituentSpec {
            label: "0".into(),
            chain_class: 0,
            dim: 1,
            multiplicity: 2,
        };
        let b = build_bimodule(&[triv], &action).unwrap();
        assert!(b.basis().iter().all(|v| v.point_map == vec![0, 1]));
        let missing = ConstituentSpec {
            label: "x".into(),
            chain_class: 7,
            dim: 1,
            multiplicity: 1,
        };
        assert_eq!(
            build_bimodule(&[missing], &action),
            Err(BimoduleError::MissingClass("x".into()))
        );
    }

    #[test]
    fn stated_criterion_examples() {
        assert!(is_nonsingular_stated(&bimod(2, vec![vec![1, 0], vec![1, 0]])));
        assert!(!is_nonsingular_stated(&bimod(2, vec![vec![0, 1], vec![1, 0]])));
        assert!(!is_nonsingular_stated(&bimod(2, vec![vec![0, 1]])));
    }

    #[test]
    fn witness_examples() {
        let b = bimod(2, vec![vec![0, 1], vec![1, 0]]);
        let w = find_singularity_witness(&b).unwrap();
        assert_eq!(w.z, CentralElement::indicator(0, 2));
        assert_eq!(w.components, vec![CentralElement::indicator(0, 2), CentralElement::indicator(1, 2)]);
        assert!(verify_witness(&b, &w));
        assert!(find_singularity_witness(&bimod(2, vec![vec![1, 0], vec![1, 0]])).is_none());
        let r1 = bimod(3, vec![vec![0, 1, 2]]);
        let w = find_singularity_witness(&r1).unwrap();
        assert_eq!(w.z, CentralElement::one(3));
        assert!(verify_witness(&r1, &w));
    }

    #[test]
    fn verify_rejects_and_accepts() {
        let b = bimod(2, vec![vec![0, 1], vec![1, 0]]);
        let zero = Witness {
            z: CentralElement::zero(2),
            components: vec![CentralElement::zero(2); 2],
        };
        assert!(verify_witness(&b, &zero));
        let ones = Witness {
            z: CentralElement::one(2),
            components: vec![CentralElement::one(2); 2],
        };
        assert!(!verify_witness(&b, &ones));
    }

    #[test]
    fn pointwise_differs_from_stated() {
        // pairwise different maps, yet every point has a collision
        let b = bimod(3, vec![vec![0, 1, 2], vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]]);
        assert!(!is_nonsingular_stated(&b));
        assert!(is_nonsingular_pointwise(&b));
        assert!(exhaustive_indicator_witness(&b).is_none());
    }

    #[test]
    fn exhaustive_search_agrees_with_separation() {
        let perms2 = [vec![0, 1], vec![1, 0]];
        for a in &perms2 {
            for c in &perms2 {
                let b = bimod(2, vec![a.clone(), c.clone()]);
                assert_eq!(exhaustive_indicator_witness(&b).is_some(), separated_point(&b).is_some());
            }
        }
    }

    #[test]
    fn non_permutation_rejected() {
        assert_eq!(
            DiagonalBimodule::from_permutations(2, vec![vec![0, 0]]),
            Err(BimoduleError::NotAPermutation { index: 0, size: 2 })
        );
        assert_eq!(DiagonalBimodule::from_permutations(0, vec![]), Err(BimoduleError::EmptySpectrum));
    }
}
