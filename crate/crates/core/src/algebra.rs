//! The graded *-algebra generated by central functions on a finite spectrum
//! and orthonormal generators `ψ_{V,i}`, one family member `V` at a time.
//!
//! Relations:
//! - `Σ_i ψ_{V,i} ψ_{V,i}* = 1`
//! - `ψ_{V,i}* ψ_{V,j} = δ_ij`
//! - `ψ_{V,i} B = α_{[D_i]}(B) ψ_{V,i}` for central `B`
//! - generators and adjoints of distinct members commute.
//!
//! Every element is a finite sum of terms `ψ_L A ψ_M*` with `A` central,
//! where `L` and `M` are words per member (concatenated in family order and
//! read left to right), so `ψ_M* = (ψ_M)*`. Terms are grouped by the degree
//! `k(V) = |L_V| − |M_V|`; inside one degree all terms share the level
//! `r(V) = |M_V|`. Components are kept at the least level from which they
//! arise by the padding identity `A = Σ_i ψ_i α_{[D_i]}⁻¹(A) ψ_i*`.
//!
//! With `(α_c Z)(ω) = Z(π_c(ω))`, transport across a generator of class `c`
//! is composition with `π_c` or its inverse.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bimodule::{build_bimodule, CentralElement, ConstituentSpec, DiagonalBimodule};
use crate::chain::{
    chain_group_table, compose, compute_chain_partition, invert, validate_chain_action, ChainAction, ChainGroupTable,
    ChainPartition,
};
use crate::error::AlgebraError;
use crate::fusion::FiniteFusion;
use crate::group::{rep_from_constituents, GroupData, MatrixRep};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::scalar::{rational, sqrt_positive_integer, Cyclotomic};

pub const MAX_MEMBERS: usize = 3;
pub const MAX_MEMBER_DIM: usize = 3;
pub const MAX_OMEGA: usize = 6;
pub const MAX_GROUP_ORDER: usize = 24;
pub const MAX_LEVEL: usize = 3;
pub const MAX_INVARIANT_ENTRIES: usize = 4096;

/// One word of generator indices per family member.
pub type Word = Vec<Vec<usize>>;

/// Irreducible constituent of a member, in adapted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberConstituent {
    pub label: String,
    pub irrep: Option<usize>,
    pub chain_class: usize,
    pub dim: usize,
    pub multiplicity: usize,
    /// First basis index of this constituent.
    pub start: usize,
}

impl MemberConstituent {
    pub fn range(&self) -> core::ops::Range<usize> {
        self.start..self.start + self.dim * self.multiplicity
    }
}

#[derive(Clone, Debug)]
pub struct Member {
    pub label: String,
    pub constituents: Vec<MemberConstituent>,
    pub bimodule: DiagonalBimodule,
    pub rep: Option<MatrixRep>,
    forward: Vec<Vec<usize>>,
    backward: Vec<Vec<usize>>,
}

impl Member {
    pub fn dim(&self) -> usize {
        self.bimodule.rank()
    }

    pub fn chain_class(&self, i: usize) -> usize {
        self.bimodule.basis()[i].chain_class
    }
}

/// Member description: label and ordered constituents `(irrep label, mult)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberSpec {
    pub label: String,
    pub constituents: Vec<(String, usize)>,
}

/// Member of a family without group matrices: `(label, class, dim, mult)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractMemberSpec {
    pub label: String,
    pub constituents: Vec<ConstituentSpec>,
}

/// Finite family of representations over a shared spectrum and chain action.
#[derive(Debug)]
pub struct Family {
    omega: usize,
    members: Vec<Member>,
    table: Option<ChainGroupTable>,
    action: ChainAction,
    group: Option<GroupData>,
    partition: Option<ChainPartition<usize>>,
}

/// Chain structure of a finite group dual.
pub fn chain_structure(
    data: &GroupData,
) -> Result<(FiniteFusion, ChainPartition<usize>, ChainGroupTable), AlgebraError> {
    let ring = FiniteFusion::new(data.clone()).map_err(|e| AlgebraError::InvalidFamily(e.to_string()))?;
    let out = compute_chain_partition(&ring, &ring.labels()).map_err(|e| AlgebraError::InvalidFamily(e.to_string()))?;
    let table = chain_group_table(&ring, &out.partition).map_err(|e| AlgebraError::InvalidFamily(e.to_string()))?;
    Ok((ring, out.partition, table))
}

impl Family {
    /// Family over a finite group. `action.perms[c]` acts for chain class `c`
    /// in the order of [`chain_structure`].
    pub fn from_group(data: GroupData, action: ChainAction, members: Vec<MemberSpec>) -> Result<Arc<Family>, AlgebraError> {
        if data.group.order() > MAX_GROUP_ORDER {
            return Err(AlgebraError::SizeLimit(format!("group order {} > {MAX_GROUP_ORDER}", data.group.order())));
        }
        let (_, partition, table) = chain_structure(&data)?;
        let mut built = Vec::new();
        for spec in &members {
            let mut cs = Vec::new();
            let mut parts = Vec::new();
            for (label, mult) in &spec.constituents {
                let idx = data
                    .index_of(label)
                    .map_err(|_| AlgebraError::UnknownClass(label.clone()))?;
                cs.push(ConstituentSpec {
                    label: label.clone(),
                    chain_class: partition.class_of(&idx).expect("every irrep is classified"),
                    dim: data.irreps[idx].dim,
                    multiplicity: *mult,
                });
                parts.push((idx, *mult));
            }
            let rep = rep_from_constituents(&data, &spec.label, &parts);
            built.push((spec.label.clone(), cs, Some(rep), parts));
        }
        Self::assemble(action, Some(table), Some(data), Some(partition), built)
    }

    /// Family given only by chain classes; no group action is available.
    pub fn abstract_family(
        table: ChainGroupTable,
        action: ChainAction,
        members: Vec<AbstractMemberSpec>,
    ) -> Result<Arc<Family>, AlgebraError> {
        let built = members
            .into_iter()
            .map(|m| (m.label, m.constituents, None, Vec::new()))
            .collect();
        Self::assemble(action, Some(table), None, None, built)
    }

    /// Single-member family realizing a bimodule directly: basis vector `k`
    /// is its own class acting by `f_k`. No chain group is attached.
    pub fn from_bimodule(label: &str, bimodule: &DiagonalBimodule) -> Result<Arc<Family>, AlgebraError> {
        let action = ChainAction {
            omega: bimodule.omega(),
            perms: (0..bimodule.rank()).map(|k| bimodule.point_map(k).to_vec()).collect(),
        };
        let cs = (0..bimodule.rank())
            .map(|k| ConstituentSpec {
                label: format!("{k}"),
                chain_class: k,
                dim: 1,
                multiplicity: 1,
            })
            .collect();
        Self::assemble(action, None, None, None, vec![(label.to_string(), cs, None, Vec::new())])
    }

    #[allow(clippy::type_complexity)]
    fn assemble(
        action: ChainAction,
        table: Option<ChainGroupTable>,
        group: Option<GroupData>,
        partition: Option<ChainPartition<usize>>,
        built: Vec<(String, Vec<ConstituentSpec>, Option<MatrixRep>, Vec<(usize, usize)>)>,
    ) -> Result<Arc<Family>, AlgebraError> {
        if built.is_empty() || built.len() > MAX_MEMBERS {
            return Err(AlgebraError::SizeLimit(format!("family needs 1..={MAX_MEMBERS} members")));
        }
        if action.omega > MAX_OMEGA {
            return Err(AlgebraError::SizeLimit(format!("spectrum size {} > {MAX_OMEGA}", action.omega)));
        }
        if let Some(table) = &table {
            let violations = validate_chain_action(&action, table);
            if !violations.is_empty() {
                return Err(AlgebraError::InvalidFamily(violations.join("; ")));
            }
        }
        let mut labels = BTreeSet::new();
        let mut members = Vec::new();
        for (label, cs, rep, parts) in built {
            if !labels.insert(label.clone()) {
                return Err(AlgebraError::InvalidFamily(format!("duplicate member {label}")));
            }
            let bimodule = build_bimodule(&cs, &action)?;
            if bimodule.rank() == 0 || bimodule.rank() > MAX_MEMBER_DIM {
                return Err(AlgebraError::SizeLimit(format!(
                    "member {label} has dimension {}, allowed 1..={MAX_MEMBER_DIM}",
                    bimodule.rank()
                )));
            }
            let mut start = 0;
            let constituents = cs
                .iter()
                .enumerate()
                .map(|(n, c)| {
                    let mc = MemberConstituent {
                        label: c.label.clone(),
                        irrep: parts.get(n).map(|p| p.0),
                        chain_class: c.chain_class,
                        dim: c.dim,
                        multiplicity: c.multiplicity,
                        start,
                    };
                    start += c.dim * c.multiplicity;
                    mc
                })
                .collect();
            let forward: Vec<Vec<usize>> = bimodule.basis().iter().map(|b| b.point_map.clone()).collect();
            let backward = forward.iter().map(|p| invert(p)).collect();
            members.push(Member {
                label,
                constituents,
                bimodule,
                rep,
                forward,
                backward,
            });
        }
        Ok(Arc::new(Family {
            omega: action.omega,
            members,
            table,
            action,
            group,
            partition,
        }))
    }

    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn member_index(&self, label: &str) -> Option<usize> {
        self.members.iter().position(|m| m.label == label)
    }

    pub fn table(&self) -> Option<&ChainGroupTable> {
        self.table.as_ref()
    }

    pub fn action(&self) -> &ChainAction {
        &self.action
    }

    pub fn group(&self) -> Option<&GroupData> {
        self.group.as_ref()
    }

    pub fn partition(&self) -> Option<&ChainPartition<usize>> {
        self.partition.as_ref()
    }

    /// `α_c(Z) = Z∘π_c`.
    pub fn alpha_class(&self, class: usize, z: &CentralElement) -> CentralElement {
        z.compose(&self.action.perms[class])
    }

    fn empty_word(&self) -> Word {
        vec![Vec::new(); self.members.len()]
    }

    /// Point map of the composite `α⁻¹` over all indices of a word.
    fn backward_composite(&self, w: &Word) -> Option<Vec<usize>> {
        let mut acc: Option<Vec<usize>> = None;
        for (v, idxs) in w.iter().enumerate() {
            for &i in idxs {
                let p = &self.members[v].backward[i];
                acc = Some(match acc {
                    None => p.clone(),
                    Some(a) => compose(&a, p),
                });
            }
        }
        acc
    }
}

/// Terms of one degree, all at the same level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComponent {
    level: Vec<u32>,
    terms: BTreeMap<(Word, Word), CentralElement>,
}

impl GradedComponent {
    pub fn level(&self) -> &[u32] {
        &self.level
    }

    /// Map from `(L, M)` to the coefficient `A` of `ψ_L A ψ_M*`.
    pub fn terms(&self) -> &BTreeMap<(Word, Word), CentralElement> {
        &self.terms
    }

    fn insert(&mut self, key: (Word, Word), value: CentralElement) {
        if value.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + &value;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, value);
            }
        }
    }
}

/// Element of the algebra: at most one component per degree.
#[derive(Clone)]
pub struct AlgebraElement {
    family: Arc<Family>,
    components: BTreeMap<Vec<i32>, GradedComponent>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_word(w: &Word) -> String {
    let parts: Vec<String> = w
        .iter()
        .map(|idx| idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    parts.join("|")
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for comp in self.components.values() {
            for ((l, m), a) in &comp.terms {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "psi[{}] {} psi*[{}]", fmt_word(l), a, fmt_word(m))?;
            }
        }
        Ok(())
    }
}

fn same_family(a: &AlgebraElement, b: &AlgebraElement) -> Result<(), AlgebraError> {
    if Arc::ptr_eq(&a.family, &b.family) {
        Ok(())
    } else {
        Err(AlgebraError::FamilyMismatch)
    }
}

impl AlgebraElement {
    pub fn zero(family: &Arc<Family>) -> Self {
        AlgebraElement {
            family: family.clone(),
            components: BTreeMap::new(),
        }
    }

    pub fn family(&self) -> &Arc<Family> {
        &self.family
    }

    pub fn components(&self) -> &BTreeMap<Vec<i32>, GradedComponent> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    fn single(family: &Arc<Family>, l: Word, m: Word, a: CentralElement) -> Self {
        let mut out = Self::zero(family);
        let degree: Vec<i32> = l.iter().zip(&m).map(|(x, y)| x.len() as i32 - y.len() as i32).collect();
        let level = m.iter().map(|y| y.len() as u32).collect();
        let mut comp = GradedComponent {
            level,
            terms: BTreeMap::new(),
        };
        comp.insert((l, m), a);
        if !comp.terms.is_empty() {
            out.components.insert(degree, comp);
        }
        out.normalize();
        out
    }

    /// Degree zero, level zero, coefficient `z`.
    pub fn central(family: &Arc<Family>, z: CentralElement) -> Self {
        assert_eq!(z.len(), family.omega, "central element on the wrong spectrum");
        Self::single(family, family.empty_word(), family.empty_word(), z)
    }

    pub fn scalar(family: &Arc<Family>, c: Cyclotomic) -> Self {
        Self::central(family, CentralElement::constant(c, family.omega))
    }

    pub fn one(family: &Arc<Family>) -> Self {
        Self::scalar(family, Cyclotomic::one())
    }

    /// `ψ_{V,i}` as a term of degree `e_V`, level zero.
    pub fn generator(family: &Arc<Family>, member: usize, index: usize) -> Result<Self, AlgebraError> {
        Self::word(family, member, &[index])
    }

    /// `ψ_{V,i_1}⋯ψ_{V,i_n}`.
    pub fn word(family: &Arc<Family>, member: usize, indices: &[usize]) -> Result<Self, AlgebraError> {
        let Some(m) = family.members.get(member) else {
            return Err(AlgebraError::IndexOutOfRange {
                member,
                index: indices.first().copied().unwrap_or(0),
            });
        };
        if let Some(&bad) = indices.iter().find(|&&i| i >= m.dim()) {
            return Err(AlgebraError::IndexOutOfRange { member, index: bad });
        }
        let mut l = family.empty_word();
        l[member] = indices.to_vec();
        Ok(Self::single(family, l, family.empty_word(), CentralElement::one(family.omega)))
    }

    /// `ψ_L A ψ_M*` for explicit words.
    pub fn term(family: &Arc<Family>, l: Word, m: Word, a: CentralElement) -> Result<Self, AlgebraError> {
        for (member, w) in l.iter().chain(m.iter()).enumerate() {
            let v = member % family.members.len();
            if let Some(&bad) = w.iter().find(|&&i| i >= family.members[v].dim()) {
                return Err(AlgebraError::IndexOutOfRange { member: v, index: bad });
            }
        }
        if l.len() != family.members.len() || m.len() != family.members.len() {
            return Err(AlgebraError::InvalidFamily("word arity differs from family size".into()));
        }
        Ok(Self::single(family, l, m, a))
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        same_family(self, other)?;
        let mut out = self.clone();
        for (deg, comp) in &other.components {
            out.add_component(deg.clone(), comp.clone());
        }
        out.normalize();
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Cyclotomic::from_int(-1))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(&self.family);
        for (deg, comp) in &self.components {
            let mut nc = GradedComponent {
                level: comp.level.clone(),
                terms: BTreeMap::new(),
            };
            for (k, a) in &comp.terms {
                nc.insert(k.clone(), a.scale(c));
            }
            if !nc.terms.is_empty() {
                out.components.insert(deg.clone(), nc);
            }
        }
        out
    }

    fn add_component(&mut self, degree: Vec<i32>, comp: GradedComponent) {
        match self.components.remove(&degree) {
            None => {
                self.components.insert(degree, comp);
            }
            Some(existing) => {
                let level: Vec<u32> = existing.level.iter().zip(&comp.level).map(|(a, b)| *a.max(b)).collect();
                let mut a = pad_to(&self.family, &existing, &level);
                let b = pad_to(&self.family, &comp, &level);
                for (k, v) in b.terms {
                    a.insert(k, v);
                }
                if !a.terms.is_empty() {
                    self.components.insert(degree, a);
                }
            }
        }
    }

    /// Drops empty components and compresses each to its least level.
    fn normalize(&mut self) {
        let family = self.family.clone();
        let comps = core::mem::take(&mut self.components);
        for (deg, comp) in comps {
            if comp.terms.is_empty() {
                continue;
            }
            self.components.insert(deg, compress(&family, comp));
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        same_family(self, other)?;
        let fam = &self.family;
        let mut out = Self::zero(fam);
        for (d1, c1) in &self.components {
            for (d2, c2) in &other.components {
                let degree: Vec<i32> = d1.iter().zip(d2).map(|(a, b)| a + b).collect();
                // |M''_V| = r2 + max(0, r1 − |L2_V|)
                let level: Vec<u32> = (0..fam.members.len())
                    .map(|v| {
                        let l2 = (c2.level[v] as i32 + d2[v]) as u32;
                        c2.level[v] + c1.level[v].saturating_sub(l2)
                    })
                    .collect();
                let mut comp = GradedComponent {
                    level,
                    terms: BTreeMap::new(),
                };
                for ((l1, m1), a1) in &c1.terms {
                    for ((l2, m2), a2) in &c2.terms {
                        if let Some((l, m, a)) = multiply_terms(fam, l1, m1, a1, l2, m2, a2) {
                            comp.insert((l, m), a);
                        }
                    }
                }
                if !comp.terms.is_empty() {
                    out.add_component(degree, comp);
                }
            }
        }
        out.normalize();
        Ok(out)
    }

    /// Product of a list, left to right.
    pub fn product(items: &[&AlgebraElement]) -> Result<Self, AlgebraError> {
        let (first, rest) = items.split_first().expect("nonempty product");
        rest.iter().try_fold((*first).clone(), |acc, x| acc.multiply(x))
    }

    pub fn pow(&self, n: u32) -> Result<Self, AlgebraError> {
        let mut acc = Self::one(&self.family);
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `(ψ_L A ψ_M*)* = ψ_M A* ψ_L*`.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(&self.family);
        for comp in self.components.values() {
            for ((l, m), a) in &comp.terms {
                let t = Self::single(&self.family, m.clone(), l.clone(), a.conjugate());
                for (deg, c) in t.components {
                    out.add_component(deg, c);
                }
            }
        }
        out.normalize();
        out
    }

    /// Equality after padding matching degrees to a common level.
    pub fn equals(&self, other: &Self) -> Result<bool, AlgebraError> {
        Ok(self.first_difference(other)?.is_none())
    }

    /// First differing coefficient, as `(degree, L, M, lhs, rhs)` text.
    pub fn first_difference(&self, other: &Self) -> Result<Option<String>, AlgebraError> {
        same_family(self, other)?;
        let degrees: BTreeSet<&Vec<i32>> = self.components.keys().chain(other.components.keys()).collect();
        for deg in degrees {
            let (a, b) = (self.components.get(deg), other.components.get(deg));
            let level: Vec<u32> = match (a, b) {
                (Some(x), Some(y)) => x.level.iter().zip(&y.level).map(|(p, q)| *p.max(q)).collect(),
                (Some(x), None) | (None, Some(x)) => x.level.clone(),
                (None, None) => unreachable!(),
            };
            let empty = GradedComponent {
                level: level.clone(),
                terms: BTreeMap::new(),
            };
            let pa = pad_to(&self.family, a.unwrap_or(&empty), &level);
            let pb = pad_to(&self.family, b.unwrap_or(&empty), &level);
            if pa.terms != pb.terms {
                let keys: BTreeSet<&(Word, Word)> = pa.terms.keys().chain(pb.terms.keys()).collect();
                for key in keys {
                    let zero = CentralElement::zero(self.family.omega);
                    let x = pa.terms.get(key).unwrap_or(&zero);
                    let y = pb.terms.get(key).unwrap_or(&zero);
                    if x != y {
                        return Ok(Some(format!(
                            "degree {:?}, psi[{}] _ psi*[{}]: {} vs {}",
                            deg,
                            fmt_word(&key.0),
                            fmt_word(&key.1),
                            x,
                            y
                        )));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Degree-zero part.
    pub fn m0(&self) -> Self {
        let mut out = Self::zero(&self.family);
        let zero = vec![0; self.family.members.len()];
        if let Some(c) = self.components.get(&zero) {
            out.components.insert(zero, c.clone());
        }
        out
    }

    /// Component of one degree as an element.
    pub fn component(&self, degree: &[i32]) -> Self {
        let mut out = Self::zero(&self.family);
        if let Some(c) = self.components.get(degree) {
            out.components.insert(degree.to_vec(), c.clone());
        }
        out
    }

    /// Members with nonzero degree or positive level in some component.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for (deg, comp) in &self.components {
            for v in 0..self.family.members.len() {
                if deg[v] != 0 || comp.level[v] > 0 {
                    s.insert(v);
                }
            }
        }
        s
    }

    /// `β_g`: `U(g)` on generator positions, `conj U(g)` on adjoint
    /// positions, coefficients fixed.
    pub fn beta_act(&self, g: usize) -> Result<Self, AlgebraError> {
        let fam = &self.family;
        let reps: Vec<&MatrixRep> = fam
            .members
            .iter()
            .map(|m| m.rep.as_ref().ok_or(AlgebraError::NoMatrixData))
            .collect::<Result<_, _>>()?;
        // columns[v][i] = nonzero (j, U(g)_{ji})
        let columns: Vec<Vec<Vec<(usize, Cyclotomic)>>> = reps
            .iter()
            .map(|r| {
                let u = &r.matrices[g];
                (0..r.dim)
                    .map(|i| (0..r.dim).filter(|&j| !u.get(j, i).is_zero()).map(|j| (j, u.get(j, i).clone())).collect())
                    .collect()
            })
            .collect();
        let mut out = Self::zero(fam);
        for (deg, comp) in &self.components {
            let mut nc = GradedComponent {
                level: comp.level.clone(),
                terms: BTreeMap::new(),
            };
            for ((l, m), a) in &comp.terms {
                for (nl, cl) in expand_word(&columns, l, false) {
                    for (nm, cm) in expand_word(&columns, m, true) {
                        nc.insert((nl.clone(), nm), a.scale(&(&cl * &cm)));
                    }
                }
            }
            if !nc.terms.is_empty() {
                out.add_component(deg.clone(), nc);
            }
        }
        out.normalize();
        Ok(out)
    }

    /// `(1/|G|) Σ_g β_g`.
    pub fn group_mean(&self) -> Result<Self, AlgebraError> {
        let order = self.family.group.as_ref().ok_or(AlgebraError::NoMatrixData)?.group.order();
        self.character_average(&vec![Cyclotomic::one(); order])
    }

    /// `(1/|G|) Σ_g w(g) β_g`.
    fn character_average(&self, weights: &[Cyclotomic]) -> Result<Self, AlgebraError> {
        let order = weights.len();
        let mut acc = Self::zero(&self.family);
        for (g, w) in weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            acc = acc.add(&self.beta_act(g)?.scale(w))?;
        }
        Ok(acc.scale(&Cyclotomic::rational(rational(1, order as i64))))
    }

    /// `δ_z`: scales the degree-`k` component by `Π z(V)^{k(V)}`.
    pub fn delta_act(&self, z: &[Cyclotomic]) -> Result<Self, AlgebraError> {
        if z.len() != self.family.members.len() {
            return Err(AlgebraError::InvalidFamily("one torus coordinate per member required".into()));
        }
        let mut out = Self::zero(&self.family);
        for (deg, comp) in &self.components {
            let mut factor = Cyclotomic::one();
            for (k, zv) in deg.iter().zip(z) {
                let base = if *k < 0 {
                    zv.inv().map_err(|_| AlgebraError::InvalidFamily("torus coordinate is zero".into()))?
                } else {
                    zv.clone()
                };
                factor = &factor * &base.pow(k.unsigned_abs());
            }
            let scaled = Self {
                family: self.family.clone(),
                components: [(deg.clone(), comp.clone())].into_iter().collect(),
            }
            .scale(&factor);
            for (d, c) in scaled.components {
                out.components.insert(d, c);
            }
        }
        Ok(out)
    }

    /// `Σ_i ψ_{V,i} a ψ_{V,i}*`.
    pub fn rho(&self, member: usize) -> Result<Self, AlgebraError> {
        let dim = self
            .family
            .members
            .get(member)
            .ok_or(AlgebraError::IndexOutOfRange { member, index: 0 })?
            .dim();
        let mut acc = Self::zero(&self.family);
        for i in 0..dim {
            let g = Self::generator(&self.family, member, i)?;
            acc = acc.add(&g.multiply(self)?.multiply(&g.adjoint())?)?;
        }
        Ok(acc)
    }

    pub fn rho_power(&self, member: usize, n: u32) -> Result<Self, AlgebraError> {
        (0..n).try_fold(self.clone(), |acc, _| acc.rho(member))
    }

    /// Spectral projection `(1/|G|) Σ_g conj(χ_D(g)) β_g` with the modified
    /// character `χ_D = dim D · Tr U_D`.
    pub fn spectral_pi(&self, irrep: &str) -> Result<Self, AlgebraError> {
        let data = self.family.group.as_ref().ok_or(AlgebraError::NoMatrixData)?;
        let d = data.index_of(irrep).map_err(|_| AlgebraError::UnknownClass(irrep.to_string()))?;
        let dim = Cyclotomic::from_int(data.irreps[d].dim as i64);
        let weights: Vec<Cyclotomic> = data.characters()[d].values.iter().map(|x| &dim * &x.conjugate()).collect();
        self.character_average(&weights)
    }

    /// `(S^p)* a S^p` with `S = S_𝒲`.
    pub fn conj_by_s(&self, members: &[usize], p: u32) -> Result<Self, AlgebraError> {
        let s = s_w(&self.family, members, p)?;
        s.adjoint().multiply(self)?.multiply(&s)
    }
}

/// Expands the generator (or adjoint) positions of a word under `β_g`.
fn expand_word(columns: &[Vec<Vec<(usize, Cyclotomic)>>], w: &Word, conjugate: bool) -> Vec<(Word, Cyclotomic)> {
    let mut acc: Vec<(Word, Cyclotomic)> = vec![(vec![Vec::new(); w.len()], Cyclotomic::one())];
    for (v, idxs) in w.iter().enumerate() {
        for &i in idxs {
            let mut next = Vec::with_capacity(acc.len() * columns[v][i].len());
            for (word, c) in &acc {
                for (j, u) in &columns[v][i] {
                    let u = if conjugate { u.conjugate() } else { u.clone() };
                    let mut nw = word.clone();
                    nw[v].push(*j);
                    next.push((nw, c * &u));
                }
            }
            acc = next;
        }
    }
    acc
}

/// `(ψ_{L1} A1 ψ_{M1}*)(ψ_{L2} A2 ψ_{M2}*)`: contract `ψ_{M1}* ψ_{L2}` per
/// member, leaving `ψ_X` (surplus of `L2`) or `ψ_Y*` (surplus of `M1`), then
/// move `A1` right across `ψ_X` and `A2` left across `ψ_Y*`.
fn multiply_terms(
    fam: &Family,
    l1: &Word,
    m1: &Word,
    a1: &CentralElement,
    l2: &Word,
    m2: &Word,
    a2: &CentralElement,
) -> Option<(Word, Word, CentralElement)> {
    let n = fam.members.len();
    let mut x = vec![Vec::new(); n];
    let mut y = vec![Vec::new(); n];
    for v in 0..n {
        let (m, l) = (&m1[v], &l2[v]);
        let c = m.len().min(l.len());
        if m[..c] != l[..c] {
            return None;
        }
        if m.len() <= l.len() {
            x[v] = l[c..].to_vec();
        } else {
            y[v] = m[c..].to_vec();
        }
    }
    let t1 = match fam.backward_composite(&x) {
        Some(p) => a1.compose(&p),
        None => a1.clone(),
    };
    let t2 = match fam.backward_composite(&y) {
        Some(p) => a2.compose(&p),
        None => a2.clone(),
    };
    let coeff = &t1 * &t2;
    if coeff.is_zero() {
        return None;
    }
    let l: Word = l1.iter().zip(&x).map(|(a, b)| [a.as_slice(), b.as_slice()].concat()).collect();
    let m: Word = m2.iter().zip(&y).map(|(a, b)| [a.as_slice(), b.as_slice()].concat()).collect();
    Some((l, m, coeff))
}

/// Raises the level of member `v` by one: `ψ_L A ψ_M* = Σ_i ψ_{Li} α_{[D_i]}⁻¹(A) ψ_{Mi}*`.
fn pad_once(fam: &Family, comp: &GradedComponent, v: usize) -> GradedComponent {
    let member = &fam.members[v];
    let mut level = comp.level.clone();
    level[v] += 1;
    let mut out = GradedComponent {
        level,
        terms: BTreeMap::new(),
    };
    for ((l, m), a) in &comp.terms {
        for i in 0..member.dim() {
            let mut nl = l.clone();
            let mut nm = m.clone();
            nl[v].push(i);
            nm[v].push(i);
            out.insert((nl, nm), a.compose(&member.backward[i]));
        }
    }
    out
}

fn pad_to(fam: &Family, comp: &GradedComponent, level: &[u32]) -> GradedComponent {
    let mut c = comp.clone();
    for v in 0..level.len() {
        while c.level[v] < level[v] {
            c = pad_once(fam, &c, v);
        }
    }
    c
}

/// Public padding by a level increment per member.
pub fn pad(fam: &Family, comp: &GradedComponent, by: &[u32]) -> GradedComponent {
    let level: Vec<u32> = comp.level.iter().zip(by).map(|(a, b)| a + b).collect();
    pad_to(fam, comp, &level)
}

/// Inverse of one padding step for member `v`, if the component is in its
/// image.
fn unpad_once(fam: &Family, comp: &GradedComponent, v: usize) -> Option<GradedComponent> {
    if comp.level[v] == 0 {
        return None;
    }
    let member = &fam.members[v];
    let mut groups: BTreeMap<(Word, Word), Vec<Option<CentralElement>>> = BTreeMap::new();
    for ((l, m), a) in &comp.terms {
        let (Some(&i), Some(&j)) = (l[v].last(), m[v].last()) else {
            return None;
        };
        if i != j {
            return None;
        }
        let mut kl = l.clone();
        let mut km = m.clone();
        kl[v].pop();
        km[v].pop();
        let slot = groups.entry((kl, km)).or_insert_with(|| vec![None; member.dim()]);
        // a = α_{[D_i]}⁻¹(A) ⇒ A = a∘f_i
        slot[i] = Some(a.compose(&member.forward[i]));
    }
    let mut level = comp.level.clone();
    level[v] -= 1;
    let mut out = GradedComponent {
        level,
        terms: BTreeMap::new(),
    };
    for (key, vals) in groups {
        let first = vals[0].clone()?;
        if vals.iter().any(|x| x.as_ref() != Some(&first)) {
            return None;
        }
        out.terms.insert(key, first);
    }
    Some(out)
}

fn compress(fam: &Family, mut comp: GradedComponent) -> GradedComponent {
    loop {
        let mut changed = false;
        for v in 0..fam.members.len() {
            while let Some(c) = unpad_once(fam, &comp, v) {
                comp = c;
                changed = true;
            }
        }
        if !changed {
            return comp;
        }
    }
}

/// `E_D = Σ ψ_k ψ_k*` over the basis vectors of member `V` belonging to
/// constituent `D`.
pub fn isotypical_e(family: &Arc<Family>, member: usize, constituent: &str) -> Result<AlgebraElement, AlgebraError> {
    let m = family
        .members
        .get(member)
        .ok_or(AlgebraError::IndexOutOfRange { member, index: 0 })?;
    let mut any = false;
    let mut acc = AlgebraElement::zero(family);
    for c in m.constituents.iter().filter(|c| c.label == constituent) {
        any = true;
        for k in c.range() {
            let g = AlgebraElement::generator(family, member, k)?;
            acc = acc.add(&g.multiply(&g.adjoint())?)?;
        }
    }
    if !any {
        return Err(AlgebraError::UnknownClass(constituent.to_string()));
    }
    Ok(acc)
}

/// `E_{[D]}`: sum of `ψ_k ψ_k*` over basis vectors of chain class `c`.
pub fn class_projection(family: &Arc<Family>, member: usize, class: usize) -> Result<AlgebraElement, AlgebraError> {
    let m = family
        .members
        .get(member)
        .ok_or(AlgebraError::IndexOutOfRange { member, index: 0 })?;
    let mut acc = AlgebraElement::zero(family);
    for k in (0..m.dim()).filter(|&k| m.chain_class(k) == class) {
        let g = AlgebraElement::generator(family, member, k)?;
        acc = acc.add(&g.multiply(&g.adjoint())?)?;
    }
    Ok(acc)
}

/// Dimension of the invariants in `V^{⊗s} ⊗ conj(V)^{⊗r}` from characters.
pub fn invariant_dimension(family: &Family, member: usize, r: u32, s: u32) -> Result<usize, AlgebraError> {
    let data = family.group.as_ref().ok_or(AlgebraError::NoMatrixData)?;
    let rep = family.members[member].rep.as_ref().ok_or(AlgebraError::NoMatrixData)?;
    let chi = rep.character();
    let mut acc = Cyclotomic::zero();
    for x in &chi.values {
        acc += &(&x.pow(s) * &x.conjugate().pow(r));
    }
    let q = acc
        .scale(&rational(1, data.group.order() as i64))
        .as_rational()
        .filter(|q| q.is_integer())
        .ok_or_else(|| AlgebraError::InvalidFamily("non-integral invariant count".into()))?;
    usize::try_from(q.to_integer()).map_err(|_| AlgebraError::InvalidFamily("negative invariant count".into()))
}

/// Basis of the group-invariant elements `ψ_L ψ_M*` combinations with
/// `|L| = s`, `|M| = r` in member `V`, by averaging elementary tensors and
/// exact row reduction.
pub fn invariant_space(family: &Arc<Family>, member: usize, r: u32, s: u32) -> Result<Vec<AlgebraElement>, AlgebraError> {
    let m = family
        .members
        .get(member)
        .ok_or(AlgebraError::IndexOutOfRange { member, index: 0 })?;
    let d = m.dim();
    let entries = d.checked_pow(r + s).unwrap_or(usize::MAX);
    if entries > MAX_INVARIANT_ENTRIES {
        return Err(AlgebraError::SizeLimit(format!("{entries} matrix entries > {MAX_INVARIANT_ENTRIES}")));
    }
    let target = invariant_dimension(family, member, r, s)?;
    let mut level = vec![0u32; family.members.len()];
    level[member] = r;
    let mut degree = vec![0i32; family.members.len()];
    degree[member] = s as i32 - r as i32;
    let mut basis = EchelonBasis::new();
    let mut out = Vec::new();
    for code in 0..entries {
        if basis.rank() == target {
            break;
        }
        let digits = base_digits(code, d, (r + s) as usize);
        let mut l = family.empty_word();
        let mut mw = family.empty_word();
        l[member] = digits[..s as usize].to_vec();
        mw[member] = digits[s as usize..].to_vec();
        let x = AlgebraElement::single(family, l, mw, CentralElement::one(family.omega)).group_mean()?;
        let Some(comp) = x.components.get(&degree) else { continue };
        let padded = pad_to(family, comp, &level);
        let coords: SparseVec = padded
            .terms
            .iter()
            .map(|((l, mw), a)| {
                let idx = digits_code(&l[member], d) * d.pow(r) + digits_code(&mw[member], d);
                (idx, a.values()[0].clone())
            })
            .collect();
        if basis.insert(coords) {
            out.push(x);
        }
    }
    Ok(out)
}

fn base_digits(mut code: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = code % base;
        code /= base;
    }
    out
}

fn digits_code(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * base + x)
}

/// All permutations of `0..n` with their signs, in lexicographic order.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, n, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], n, &mut out);
    out
}

/// Normalized antisymmetrizer `(d!)^{-1/2} Σ_σ sgn(σ) ψ_{σ(1)}⋯ψ_{σ(d)}` of a
/// member of dimension `d`; requires a trivial determinant when group
/// matrices are present.
pub fn antisym_isometry(family: &Arc<Family>, member: usize) -> Result<AlgebraElement, AlgebraError> {
    let m = family
        .members
        .get(member)
        .ok_or(AlgebraError::IndexOutOfRange { member, index: 0 })?;
    if let Some(rep) = &m.rep {
        if !rep.det_rep().is_trivial() {
            return Err(AlgebraError::DeterminantNotTrivial(m.label.clone()));
        }
    }
    let d = m.dim();
    let factorial: u64 = (1..=d as u64).product();
    let root = sqrt_positive_integer(factorial).ok_or(AlgebraError::NormalizationNotRational(factorial))?;
    let norm = root.inv().map_err(|_| AlgebraError::NormalizationNotRational(factorial))?;
    let mut acc = AlgebraElement::zero(family);
    for (perm, sign) in signed_permutations(d) {
        let w = AlgebraElement::word(family, member, &perm)?;
        acc = acc.add(&w.scale(&Cyclotomic::from_int(sign)))?;
    }
    Ok(acc.scale(&norm))
}

/// `S_𝒲^p` with `S_𝒲 = Π_{W∈𝒲} S_W` in family order.
pub fn s_w(family: &Arc<Family>, members: &[usize], p: u32) -> Result<AlgebraElement, AlgebraError> {
    let mut set: Vec<usize> = members.to_vec();
    set.sort_unstable();
    set.dedup();
    let mut s = AlgebraElement::one(family);
    for v in set {
        s = s.multiply(&antisym_isometry(family, v)?)?;
    }
    s.pow(p)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::group::{builtin_q8, builtin_s3};

    pub(crate) fn q8_family() -> Arc<Family> {
        let data = builtin_q8();
        let (_, p, _) = chain_structure(&data).unwrap();
        let rho = data.index_of("rho2").unwrap();
        let mut perms = vec![vec![0, 1]; p.num_classes()];
        perms[p.class_of(&rho).unwrap()] = vec![1, 0];
        Family::from_group(
            data,
            ChainAction { omega: 2, perms },
            vec![
                MemberSpec {
                    label: "rho2".into(),
                    constituents: vec![("rho2".into(), 1)],
                },
                MemberSpec {
                    label: "chi_i+chi_i".into(),
                    constituents: vec![("chi_i".into(), 2)],
                },
            ],
        )
        .unwrap()
    }

    fn s3_family() -> Arc<Family> {
        Family::from_group(
            builtin_s3(),
            ChainAction::trivial(2, 1),
            vec![
                MemberSpec {
                    label: "std+sgn".into(),
                    constituents: vec![("std".into(), 1), ("sgn".into(), 1)],
                },
                MemberSpec {
                    label: "triv+triv".into(),
                    constituents: vec![("triv".into(), 2)],
                },
            ],
        )
        .unwrap()
    }

    fn z(values: &[i64]) -> CentralElement {
        CentralElement::new(values.iter().map(|&v| Cyclotomic::from_int(v)).collect())
    }

    fn eq(a: &AlgebraElement, b: &AlgebraElement) {
        assert!(a.equals(b).unwrap(), "{}", a.first_difference(b).unwrap().unwrap());
    }

    #[test]
    fn cuntz_relations() {
        let fam = q8_family();
        for v in 0..2 {
            let d = fam.members()[v].dim();
            let mut sum = AlgebraElement::zero(&fam);
            for i in 0..d {
                let g = AlgebraElement::generator(&fam, v, i).unwrap();
                sum = sum.add(&g.multiply(&g.adjoint()).unwrap()).unwrap();
                for j in 0..d {
                    let h = AlgebraElement::generator(&fam, v, j).unwrap();
                    let expected = if i == j { AlgebraElement::one(&fam) } else { AlgebraElement::zero(&fam) };
                    eq(&g.adjoint().multiply(&h).unwrap(), &expected);
                }
            }
            eq(&sum, &AlgebraElement::one(&fam));
        }
    }

    #[test]
    fn coefficient_transport() {
        let fam = q8_family();
        let b = z(&[3, -5]);
        let swapped = z(&[-5, 3]);
        let g = AlgebraElement::generator(&fam, 0, 1).unwrap();
        let lhs = g.multiply(&AlgebraElement::central(&fam, b.clone())).unwrap();
        let rhs = AlgebraElement::central(&fam, swapped).multiply(&g).unwrap();
        eq(&lhs, &rhs);
        // trivial class on the second member
        let h = AlgebraElement::generator(&fam, 1, 0).unwrap();
        let lhs = h.multiply(&AlgebraElement::central(&fam, b.clone())).unwrap();
        let rhs = AlgebraElement::central(&fam, b).multiply(&h).unwrap();
        eq(&lhs, &rhs);
    }

    #[test]
    fn cross_member_commutation() {
        let fam = q8_family();
        let a = AlgebraElement::generator(&fam, 0, 0).unwrap();
        let b = AlgebraElement::generator(&fam, 1, 1).unwrap();
        eq(&a.multiply(&b).unwrap(), &b.multiply(&a).unwrap());
        eq(&a.adjoint().multiply(&b).unwrap(), &b.multiply(&a.adjoint()).unwrap());
    }

    #[test]
    fn hand_contraction() {
        // (ψ_1 Z ψ_2*)(ψ_2 Z' ψ_1*) = ψ_1 Z Z' ψ_1* in the middle form;
        // moving the coefficient left gives α_1(Z Z') ψ_1 ψ_1*
        let fam = q8_family();
        let zz = z(&[2, 7]);
        let zp = z(&[-1, 4]);
        let w = |i: usize| vec![vec![i], vec![]];
        let t1 = AlgebraElement::term(&fam, w(0), w(1), zz.clone()).unwrap();
        let t2 = AlgebraElement::term(&fam, w(1), w(0), zp.clone()).unwrap();
        let prod = t1.multiply(&t2).unwrap();
        let expected = AlgebraElement::term(&fam, w(0), w(0), &zz * &zp).unwrap();
        eq(&prod, &expected);
        let g = AlgebraElement::generator(&fam, 0, 0).unwrap();
        let left = AlgebraElement::central(&fam, z(&[28, -2]))
            .multiply(&g)
            .unwrap()
            .multiply(&g.adjoint())
            .unwrap();
        eq(&prod, &left);
    }

    #[test]
    fn padding_identities() {
        let fam = q8_family();
        let c = AlgebraElement::central(&fam, z(&[1, 2]));
        let comp = c.components().values().next().unwrap();
        let padded = pad(&fam, comp, &[1, 0]);
        // α⁻¹ of the swap class swaps the values
        for ((l, _), a) in padded.terms() {
            let expected = if l[0] == vec![0] || l[0] == vec![1] { z(&[2, 1]) } else { unreachable!() };
            assert_eq!(a, &expected);
        }
        let twice = pad(&fam, &pad(&fam, comp, &[1, 1]), &[1, 0]);
        assert_eq!(twice, pad(&fam, comp, &[2, 1]));
        assert_eq!(compress(&fam, twice), comp.clone());
    }

    #[test]
    fn adjoint_reverses_products() {
        let fam = q8_family();
        let a = AlgebraElement::generator(&fam, 0, 0)
            .unwrap()
            .multiply(&AlgebraElement::central(&fam, z(&[1, 3])))
            .unwrap();
        let b = AlgebraElement::generator(&fam, 0, 1)
            .unwrap()
            .adjoint()
            .add(&AlgebraElement::generator(&fam, 1, 0).unwrap())
            .unwrap();
        let lhs = a.multiply(&b).unwrap().adjoint();
        let rhs = b.adjoint().multiply(&a.adjoint()).unwrap();
        eq(&lhs, &rhs);
    }

    #[test]
    fn grading_and_m0() {
        let fam = q8_family();
        let g = AlgebraElement::generator(&fam, 0, 0).unwrap();
        assert!(g.m0().is_zero());
        let c = AlgebraElement::central(&fam, z(&[5, 6]));
        eq(&c.m0(), &c);
        let zt = vec![Cyclotomic::parse("z4").unwrap(), Cyclotomic::parse("-1").unwrap()];
        eq(&g.delta_act(&zt).unwrap(), &g.scale(&zt[0]));
        assert_eq!(g.support(), [0].into_iter().collect());
        assert!(AlgebraElement::one(&fam).support().is_empty());
    }

    #[test]
    fn group_action() {
        let fam = s3_family();
        let c = AlgebraElement::central(&fam, z(&[1, -2]));
        for g in 0..6 {
            eq(&c.beta_act(g).unwrap(), &c);
        }
        let x = AlgebraElement::generator(&fam, 0, 0).unwrap();
        let m = x.group_mean().unwrap();
        eq(&m.group_mean().unwrap(), &m);
        eq(&x.spectral_pi("triv").unwrap(), &m);
    }

    #[test]
    fn isotypical_projections() {
        let fam = s3_family();
        let e_std = isotypical_e(&fam, 0, "std").unwrap();
        let e_sgn = isotypical_e(&fam, 0, "sgn").unwrap();
        eq(&e_std.add(&e_sgn).unwrap(), &AlgebraElement::one(&fam));
        eq(&e_std.multiply(&e_std).unwrap(), &e_std);
        assert!(e_std.multiply(&e_sgn).unwrap().is_zero());
        assert!(matches!(isotypical_e(&fam, 0, "triv"), Err(AlgebraError::UnknownClass(_))));
    }

    #[test]
    fn invariant_spaces() {
        let fam = s3_family();
        let zero = invariant_space(&fam, 0, 0, 0).unwrap();
        assert_eq!(zero.len(), 1);
        eq(&zero[0], &AlgebraElement::one(&fam));
        let std_only = Family::from_group(
            builtin_s3(),
            ChainAction::trivial(1, 1),
            vec![MemberSpec {
                label: "std".into(),
                constituents: vec![("std".into(), 1)],
            }],
        )
        .unwrap();
        let inv = invariant_space(&std_only, 0, 1, 1).unwrap();
        assert_eq!(inv.len(), 1);
        // Schur: the invariant is a multiple of the identity Σψψ* = 1
        assert_eq!(inv[0].support().len(), 0);
        assert!(matches!(antisym_isometry(&std_only, 0), Err(AlgebraError::DeterminantNotTrivial(_))));
    }

    #[test]
    fn antisymmetrizers() {
        let fam = s3_family();
        for v in 0..2 {
            let s = antisym_isometry(&fam, v).unwrap();
            eq(&s.adjoint().multiply(&s).unwrap(), &AlgebraElement::one(&fam));
            for g in 0..6 {
                eq(&s.beta_act(g).unwrap(), &s);
            }
        }
        let s = antisym_isometry(&fam, 0).unwrap();
        let inv = invariant_space(&fam, 0, 0, 3).unwrap();
        let mut span = EchelonBasis::new();
        let key = |x: &AlgebraElement| -> SparseVec {
            x.components()
                .values()
                .flat_map(|c| c.terms().iter())
                .map(|((l, _), a)| (digits_code(&l[0], 3), a.values()[0].clone()))
                .collect()
        };
        for x in &inv {
            span.insert(key(x));
        }
        assert!(span.contains(&key(&s)));
    }

    #[test]
    fn canonical_endomorphism_on_center() {
        let fam = q8_family();
        let zz = z(&[4, -9]);
        let rho = AlgebraElement::central(&fam, zz.clone()).rho(0).unwrap();
        let mut rhs = AlgebraElement::zero(&fam);
        for c in 0..fam.table().unwrap().order() {
            let e = class_projection(&fam, 0, c).unwrap();
            rhs = rhs
                .add(&AlgebraElement::central(&fam, fam.alpha_class(c, &zz)).multiply(&e).unwrap())
                .unwrap();
        }
        eq(&rho, &rhs);
    }

    #[test]
    fn family_mismatch() {
        let a = AlgebraElement::one(&q8_family());
        let b = AlgebraElement::one(&q8_family());
        assert!(matches!(a.multiply(&b), Err(AlgebraError::FamilyMismatch)));
    }
}
