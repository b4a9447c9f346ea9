//! Chain groups: the quotient of a dual object by co-membership in tensor
//! products, its product table, the comparison with the character group of
//! the center, and chain actions on a finite spectrum.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::ChainError;
use crate::fusion::{Diagram, FiniteFusion, FusionRing, Spin};
use crate::scalar::Cyclotomic;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` if two distinct sets were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }
}

/// Partition of a finite label universe into chain classes. Classes are
/// ordered by their least label; members within a class are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainPartition<L> {
    labels: Vec<L>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl<L: Clone + Ord> ChainPartition<L> {
    fn from_union_find(labels: Vec<L>, uf: &mut UnionFind) -> Self {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut root_to_class = BTreeMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; labels.len()];
        for i in order {
            let root = uf.find(i);
            let c = *root_to_class.entry(root).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(i);
            class_of[i] = c;
        }
        ChainPartition {
            labels,
            class_of,
            classes,
        }
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Member labels of class `c`, least first.
    pub fn members(&self, c: usize) -> Vec<&L> {
        self.classes[c].iter().map(|&i| &self.labels[i]).collect()
    }

    pub fn representative(&self, c: usize) -> &L {
        &self.labels[self.classes[c][0]]
    }

    pub fn class_of(&self, label: &L) -> Option<usize> {
        self.position(label).map(|i| self.class_of[i])
    }

    fn position(&self, label: &L) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Same blocks, irrespective of class numbering.
    pub fn same_blocks(&self, other: &ChainPartition<L>) -> bool {
        let blocks = |p: &ChainPartition<L>| -> BTreeSet<Vec<L>> {
            p.classes
                .iter()
                .map(|c| {
                    let mut v: Vec<L> = c.iter().map(|&i| p.labels[i].clone()).collect();
                    v.sort();
                    v
                })
                .collect()
        };
        blocks(self) == blocks(other)
    }
}

/// Result of the fixpoint closure together with the co-membership-only
/// partition, so that the two can be compared.
#[derive(Clone, Debug)]
pub struct PartitionOutcome<L> {
    pub partition: ChainPartition<L>,
    pub co_membership_only: ChainPartition<L>,
}

impl<L: Clone + Ord> PartitionOutcome<L> {
    /// Whether the transport rule merged anything beyond co-membership.
    pub fn transport_rule_needed(&self) -> bool {
        !self.partition.same_blocks(&self.co_membership_only)
    }
}

/// Smallest partition of a fuse- and conjugation-closed label set that
/// merges all members of every fusion product (co-membership) and merges
/// `A×B` with `A'×B` whenever `A ≈ A'` (transport), iterated to a fixpoint.
pub fn compute_chain_partition<R: FusionRing>(
    ring: &R,
    labels: &[R::Label],
) -> Result<PartitionOutcome<R::Label>, ChainError> {
    let mut labels: Vec<R::Label> = labels.to_vec();
    labels.sort();
    labels.dedup();
    let index: BTreeMap<R::Label, usize> = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    let n = labels.len();
    let mut products: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; n];
    for (i, a) in labels.iter().enumerate() {
        let c = ring.conj(a);
        if !index.contains_key(&c) {
            return Err(ChainError::NotClosed(format!("conjugate of {} missing", ring.format_label(a))));
        }
        for (j, b) in labels.iter().enumerate() {
            for (d, _) in ring.fuse(a, b) {
                let Some(&k) = index.get(&d) else {
                    return Err(ChainError::NotClosed(format!(
                        "{} occurs in {} x {}",
                        ring.format_label(&d),
                        ring.format_label(a),
                        ring.format_label(b)
                    )));
                };
                products[i][j].push(k);
            }
        }
    }
    let mut uf = UnionFind::new(n);
    co_membership(&products, &mut uf);
    let co_membership_only = ChainPartition::from_union_find(labels.clone(), &mut uf.clone());
    loop {
        let mut changed = false;
        for b in 0..n {
            for a in 0..n {
                let root = uf.find(a);
                if root == a {
                    continue;
                }
                // a ≈ root: merge a×b with root×b
                let (x, y) = (products[a][b][0], products[root][b][0]);
                changed |= uf.union(x, y);
            }
        }
        if !changed {
            break;
        }
    }
    Ok(PartitionOutcome {
        partition: ChainPartition::from_union_find(labels, &mut uf),
        co_membership_only,
    })
}

fn co_membership(products: &[Vec<Vec<usize>>], uf: &mut UnionFind) {
    for row in products {
        for members in row {
            for w in members.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    }
}

/// Finite abelian group given by its multiplication table on class indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainGroupTable {
    pub names: Vec<String>,
    pub product: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl ChainGroupTable {
    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a][b]
    }

    /// `Z_n` with class `k` named by `names[k]`.
    pub fn cyclic(names: Vec<String>) -> Self {
        let n = names.len();
        ChainGroupTable {
            product: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            identity: 0,
            inverse: (0..n).map(|a| (n - a) % n).collect(),
            names,
        }
    }

    /// Every violated abelian group axiom.
    pub fn violations(&self) -> Vec<String> {
        let n = self.order();
        let mut out = Vec::new();
        for a in 0..n {
            if self.mul(self.identity, a) != a {
                out.push(format!("identity fails on {}", self.names[a]));
            }
            if self.mul(a, self.inverse[a]) != self.identity {
                out.push(format!("inverse fails on {}", self.names[a]));
            }
            for b in 0..n {
                if self.mul(a, b) != self.mul(b, a) {
                    out.push(format!("{} and {} do not commute", self.names[a], self.names[b]));
                }
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        out.push(format!(
                            "associativity fails on ({}, {}, {})",
                            self.names[a], self.names[b], self.names[c]
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Invariant factors `d_1 | d_2 | …`, each `> 1`; empty for the trivial
    /// group. Read off from the counts of elements killed by prime powers.
    pub fn invariant_factors(&self) -> Vec<usize> {
        abelian_invariant_factors(&(0..self.order()).map(|a| self.element_order(a)).collect::<Vec<_>>())
    }

    /// `Z1`, `Z6`, `Z2xZ2`, … from the invariant factors.
    pub fn structure_name(&self) -> String {
        abelian_name(&self.invariant_factors())
    }
}

/// Invariant factors of a finite abelian group from its element orders.
pub fn abelian_invariant_factors(orders: &[usize]) -> Vec<usize> {
    let n = orders.len();
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m % p == 0 {
            primes.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    // per prime, exponents of cyclic p-factors in decreasing order
    let mut per_prime: Vec<(usize, Vec<u32>)> = Vec::new();
    for &p in &primes {
        let mut log_counts = vec![0u32];
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count();
            let mut e = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                e += 1;
            }
            if e == *log_counts.last().expect("nonempty") {
                break;
            }
            log_counts.push(e);
            k += 1;
        }
        // number of factors with exponent ≥ k
        let at_least: Vec<u32> = log_counts.windows(2).map(|w| w[1] - w[0]).collect();
        let factors = at_least.first().copied().unwrap_or(0) as usize;
        let exps: Vec<u32> = (0..factors)
            .map(|i| at_least.iter().filter(|&&c| c as usize > i).count() as u32)
            .collect();
        per_prime.push((p, exps));
    }
    let count = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors = vec![1usize; count];
    for (p, exps) in &per_prime {
        // exps are decreasing; the largest goes into the last factor
        for (i, e) in exps.iter().enumerate() {
            factors[count - 1 - i] *= p.pow(*e);
        }
    }
    factors
}

pub fn abelian_name(factors: &[usize]) -> String {
    if factors.is_empty() {
        return "Z1".to_string();
    }
    let parts: Vec<String> = factors.iter().map(|d| format!("Z{d}")).collect();
    parts.join("x")
}

/// `[c1]⊠[c2]`: the class of any member of `rep(c1) × rep(c2)`, checked over
/// all representatives of both classes.
pub fn chain_product<R: FusionRing>(
    ring: &R,
    p: &ChainPartition<R::Label>,
    c1: usize,
    c2: usize,
) -> Result<usize, ChainError> {
    let mut result = None;
    for a in p.members(c1) {
        for b in p.members(c2) {
            for (d, _) in ring.fuse(a, b) {
                let c = p
                    .class_of(&d)
                    .ok_or_else(|| ChainError::UnknownClass(ring.format_label(&d)))?;
                match result {
                    None => result = Some(c),
                    Some(prev) if prev != c => return Err(ChainError::IllDefinedProduct(c1, c2)),
                    _ => {}
                }
            }
        }
    }
    result.ok_or(ChainError::IllDefinedProduct(c1, c2))
}

/// Class name `[rep]`.
pub fn class_name<R: FusionRing>(ring: &R, p: &ChainPartition<R::Label>, c: usize) -> String {
    format!("[{}]", ring.format_label(p.representative(c)))
}

/// Product table of a fixpoint partition.
pub fn chain_group_table<R: FusionRing>(ring: &R, p: &ChainPartition<R::Label>) -> Result<ChainGroupTable, ChainError> {
    let n = p.num_classes();
    let mut product = vec![vec![0; n]; n];
    for (a, row) in product.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            *slot = chain_product(ring, p, a, b)?;
        }
    }
    let unit = ring.unit();
    let identity = p
        .class_of(&unit)
        .ok_or_else(|| ChainError::UnknownClass(ring.format_label(&unit)))?;
    let inverse = (0..n)
        .map(|c| {
            let conj = ring.conj(p.representative(c));
            p.class_of(&conj).ok_or_else(|| ChainError::UnknownClass(ring.format_label(&conj)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ChainGroupTable {
        names: (0..n).map(|c| class_name(ring, p, c)).collect(),
        product,
        identity,
        inverse,
    })
}

/// Chain class of an SU(2) spin: `2l mod 2`.
pub fn su2_chain_class(l: Spin) -> usize {
    (l.twice() % 2) as usize
}

/// Chain class of an SU(N) diagram: `|λ| mod N`.
pub fn sun_chain_class(lambda: &Diagram, n: usize) -> usize {
    lambda.iter().map(|&x| x as usize).sum::<usize>() % n
}

/// Closed-form chain group of SU(2): `{[0], [1/2]}`.
pub fn su2_chain_table() -> ChainGroupTable {
    ChainGroupTable::cyclic(vec!["[0]".to_string(), "[1/2]".to_string()])
}

/// Closed-form chain group of SU(N), class `k` named by the column of `k`
/// boxes.
pub fn sun_chain_table(n: usize) -> ChainGroupTable {
    let names = (0..n)
        .map(|k| {
            let col: Vec<String> = (0..k).map(|_| "1".to_string()).collect();
            format!("[[{}]]", col.join(","))
        })
        .collect();
    ChainGroupTable::cyclic(names)
}

/// Co-membership merging restricted to a finite, not necessarily closed,
/// truncation of the dual.
pub fn truncated_co_membership<R: FusionRing>(ring: &R, labels: &[R::Label]) -> ChainPartition<R::Label> {
    let mut labels = labels.to_vec();
    labels.sort();
    labels.dedup();
    let index: BTreeMap<R::Label, usize> = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    let mut uf = UnionFind::new(labels.len());
    for a in &labels {
        for b in &labels {
            let inside: Vec<usize> = ring.fuse(a, b).keys().filter_map(|d| index.get(d).copied()).collect();
            for w in inside.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    }
    ChainPartition::from_union_find(labels, &mut uf)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationReport {
    /// The closed-form class map is constant on every merged block.
    pub constant_on_blocks: bool,
    /// The merged blocks are exactly the fibres of the class map.
    pub blocks_equal_fibres: bool,
    pub blocks: usize,
}

/// Compares a closed-form class map with co-membership merging on a
/// truncation.
pub fn cross_check_truncation<R: FusionRing>(
    ring: &R,
    labels: &[R::Label],
    class_map: impl Fn(&R::Label) -> usize,
) -> TruncationReport {
    let p = truncated_co_membership(ring, labels);
    let constant_on_blocks = (0..p.num_classes()).all(|c| {
        let m = p.members(c);
        m.iter().all(|l| class_map(l) == class_map(m[0]))
    });
    let fibres: BTreeSet<usize> = p.labels().iter().map(&class_map).collect();
    TruncationReport {
        constant_on_blocks,
        blocks_equal_fibres: constant_on_blocks && fibres.len() == p.num_classes(),
        blocks: p.num_classes(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaReport {
    pub chain_order: usize,
    pub center_order: usize,
    pub well_defined: bool,
    pub homomorphism: bool,
    pub injective: bool,
    pub surjective: bool,
    pub counterexamples: Vec<String>,
}

impl EtaReport {
    pub fn pass(&self) -> bool {
        self.well_defined && self.homomorphism && self.injective && self.surjective
    }
}

/// Compares the chain group with the character group of the center via
/// `[D] ↦ Υ_D`, where `U_D(c) = Υ_D(c)·1` for central `c`.
pub fn eta_check(ring: &FiniteFusion, p: &ChainPartition<usize>, table: &ChainGroupTable) -> EtaReport {
    let data = ring.data();
    let center = data.group.center();
    let mut counterexamples = Vec::new();
    let mut upsilon: Vec<Option<Vec<Cyclotomic>>> = Vec::new();
    for rep in &data.irreps {
        match rep.restrict_to_center(&data.group) {
            Ok(v) => upsilon.push(Some(v.into_iter().map(|(_, x)| x).collect())),
            Err(e) => {
                counterexamples.push(e.to_string());
                upsilon.push(None);
            }
        }
    }
    // each Υ_D must be a character of the center
    let index_in_center = |g: usize| center.iter().position(|&c| c == g);
    for (d, u) in upsilon.iter().enumerate() {
        let Some(u) = u else { continue };
        for (i, &a) in center.iter().enumerate() {
            for (j, &b) in center.iter().enumerate() {
                let k = index_in_center(data.group.mul(a, b)).expect("center is a subgroup");
                if u[k] != &u[i] * &u[j] {
                    counterexamples.push(format!("Y_{} is not multiplicative on the center", data.irreps[d].label));
                }
            }
        }
    }
    let mut well_defined = counterexamples.is_empty();
    let mut class_value: Vec<Option<Vec<Cyclotomic>>> = vec![None; p.num_classes()];
    for c in 0..p.num_classes() {
        for &&d in &p.members(c) {
            let Some(u) = &upsilon[d] else { continue };
            match &class_value[c] {
                None => class_value[c] = Some(u.clone()),
                Some(prev) if prev != u => {
                    well_defined = false;
                    counterexamples.push(format!(
                        "Y differs within class {} at {}",
                        table.names[c], data.irreps[d].label
                    ));
                }
                _ => {}
            }
        }
    }
    let mut homomorphism = well_defined;
    if well_defined {
        for a in 0..table.order() {
            for b in 0..table.order() {
                let (Some(ua), Some(ub), Some(uab)) =
                    (&class_value[a], &class_value[b], &class_value[table.mul(a, b)])
                else {
                    homomorphism = false;
                    continue;
                };
                let prod: Vec<Cyclotomic> = ua.iter().zip(ub).map(|(x, y)| x * y).collect();
                if &prod != uab {
                    homomorphism = false;
                    counterexamples.push(format!("Y({}) Y({}) != Y({})", table.names[a], table.names[b], table.names[table.mul(a, b)]));
                }
            }
        }
    }
    let distinct: BTreeSet<String> = class_value
        .iter()
        .flatten()
        .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";"))
        .collect();
    let injective = well_defined && distinct.len() == p.num_classes();
    if well_defined && !injective {
        counterexamples.push("two chain classes share a central character".to_string());
    }
    // an injective map into a group of order |center| is onto iff orders agree
    let surjective = injective && p.num_classes() == center.len();
    if injective && !surjective {
        counterexamples.push(format!(
            "chain group has order {}, center has order {}",
            p.num_classes(),
            center.len()
        ));
    }
    EtaReport {
        chain_order: p.num_classes(),
        center_order: center.len(),
        well_defined,
        homomorphism,
        injective,
        surjective,
        counterexamples,
    }
}

/// Chain action on a finite spectrum: class `c` acts on central functions by
/// `(α_c Z)(ω) = Z(π_c(ω))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainAction {
    pub omega: usize,
    pub perms: Vec<Vec<usize>>,
}

impl ChainAction {
    pub fn trivial(omega: usize, classes: usize) -> Self {
        ChainAction {
            omega,
            perms: vec![(0..omega).collect(); classes],
        }
    }

    pub fn perm(&self, class: usize) -> Option<&[usize]> {
        self.perms.get(class).map(Vec::as_slice)
    }
}

pub fn is_permutation(p: &[usize], n: usize) -> bool {
    if p.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// `(p∘q)(ω) = p(q(ω))`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Every violated invariant: one bijection per class, identity for the unit
/// class, and `π_{a⊠b} = π_a∘π_b`.
pub fn validate_chain_action(action: &ChainAction, table: &ChainGroupTable) -> Vec<String> {
    let mut out = Vec::new();
    if action.perms.len() != table.order() {
        out.push(format!(
            "{} permutations for a chain group of order {}",
            action.perms.len(),
            table.order()
        ));
        return out;
    }
    for (c, p) in action.perms.iter().enumerate() {
        if !is_permutation(p, action.omega) {
            out.push(format!("{} is not a bijection of the spectrum", table.names[c]));
        }
    }
    if !out.is_empty() {
        return out;
    }
    let id: Vec<usize> = (0..action.omega).collect();
    if action.perms[table.identity] != id {
        out.push(format!("{} does not act trivially", table.names[table.identity]));
    }
    for a in 0..table.order() {
        for b in 0..table.order() {
            let ab = table.mul(a, b);
            if action.perms[ab] != compose(&action.perms[a], &action.perms[b]) {
                out.push(format!(
                    "action of {} differs from the composite of {} and {}",
                    table.names[ab], table.names[a], table.names[b]
                ));
            }
        }
    }
    out
}

/// Order of a permutation, handy for diagnostics.
pub fn permutation_order(p: &[usize]) -> usize {
    let mut order = 1;
    let mut seen = vec![false; p.len()];
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        order = order.lcm(&len);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{Su2, SuN};
    use crate::group::{builtin_cyclic, builtin_q8, builtin_s3};

    fn finite(data: crate::group::GroupData) -> (FiniteFusion, PartitionOutcome<usize>, ChainGroupTable) {
        let ring = FiniteFusion::new(data).unwrap();
        let out = compute_chain_partition(&ring, &ring.labels()).unwrap();
        let table = chain_group_table(&ring, &out.partition).unwrap();
        (ring, out, table)
    }

    #[test]
    fn abelian_duals_are_discrete() {
        for n in 1..=12 {
            let (_, out, table) = finite(builtin_cyclic(n));
            assert_eq!(out.partition.num_classes(), n);
            assert!(table.violations().is_empty());
            // chi_a ⊗ chi_b = chi_{a+b}
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(table.mul(a, b), (a + b) % n);
                }
            }
        }
    }

    #[test]
    fn s3_single_class() {
        let (ring, out, table) = finite(builtin_s3());
        assert_eq!(out.partition.num_classes(), 1);
        assert_eq!(table.structure_name(), "Z1");
        assert!(eta_check(&ring, &out.partition, &table).pass());
    }

    #[test]
    fn q8_two_classes() {
        let (ring, out, table) = finite(builtin_q8());
        let p = &out.partition;
        assert_eq!(p.num_classes(), 2);
        let one_dim: Vec<usize> = ["triv", "chi_i", "chi_j", "chi_k"]
            .iter()
            .map(|l| ring.parse_label(l).unwrap())
            .collect();
        let c = p.class_of(&one_dim[0]).unwrap();
        assert!(one_dim.iter().all(|d| p.class_of(d) == Some(c)));
        assert_ne!(p.class_of(&ring.parse_label("rho2").unwrap()), Some(c));
        assert_eq!(table.structure_name(), "Z2");
        let eta = eta_check(&ring, p, &table);
        assert!(eta.pass(), "{:?}", eta.counterexamples);
        assert_eq!((eta.chain_order, eta.center_order), (2, 2));
    }

    #[test]
    fn eta_on_cyclic_groups() {
        for n in 1..=12 {
            let (ring, out, table) = finite(builtin_cyclic(n));
            let eta = eta_check(&ring, &out.partition, &table);
            assert!(eta.pass(), "Z{n}: {:?}", eta.counterexamples);
        }
    }

    #[test]
    fn eta_detects_under_merging() {
        let (ring, _, _) = finite(builtin_q8());
        // discrete partition: not a chain partition; products are ill defined
        let mut uf = UnionFind::new(5);
        let discrete = ChainPartition::from_union_find(ring.labels(), &mut uf);
        assert!(matches!(
            chain_group_table(&ring, &discrete),
            Err(ChainError::IllDefinedProduct(..))
        ));
        let bogus = ChainGroupTable::cyclic((0..5).map(|k| format!("c{k}")).collect());
        let eta = eta_check(&ring, &discrete, &bogus);
        assert!(!eta.pass());
    }

    #[test]
    fn not_closed_is_rejected() {
        let labels = vec![Spin(0), Spin(1)];
        assert!(matches!(compute_chain_partition(&Su2, &labels), Err(ChainError::NotClosed(_))));
    }

    #[test]
    fn su2_closed_form() {
        let t = su2_chain_table();
        assert_eq!(t.mul(1, 1), 0);
        assert_eq!(t.structure_name(), "Z2");
        assert_eq!(su2_chain_class(Spin(3)), 1);
        assert_eq!(su2_chain_class(Spin(4)), 0);
        let labels: Vec<Spin> = (0..=20).map(Spin).collect();
        let r = cross_check_truncation(&Su2, &labels, |l| su2_chain_class(*l));
        assert!(r.blocks_equal_fibres);
        assert_eq!(r.blocks, 2);
    }

    #[test]
    fn sun_closed_form() {
        for n in 2..=4 {
            let ring = SuN::new(n).unwrap();
            let labels = ring.labels_up_to_dim(20);
            let r = cross_check_truncation(&ring, &labels, |l| sun_chain_class(l, n));
            assert!(r.constant_on_blocks, "SU({n})");
            assert!(r.blocks_equal_fibres, "SU({n})");
            let t = sun_chain_table(n);
            assert_eq!(t.structure_name(), format!("Z{n}"));
        }
        assert_eq!(sun_chain_class(&vec![1], 3), 1);
        assert_eq!(sun_chain_class(&vec![], 3), 0);
    }

    #[test]
    fn invariant_factor_names() {
        let z2z2 = [1, 2, 2, 2];
        assert_eq!(abelian_name(&abelian_invariant_factors(&z2z2)), "Z2xZ2");
        let z6: Vec<usize> = (0..6).map(|a| 6 / a.gcd(&6)).collect();
        assert_eq!(abelian_name(&abelian_invariant_factors(&z6)), "Z6");
        // Z2 x Z4
        let mut orders = Vec::new();
        for a in 0..2usize {
            for b in 0..4usize {
                orders.push((2 / a.gcd(&2)).lcm(&(4 / b.gcd(&4))));
            }
        }
        assert_eq!(abelian_name(&abelian_invariant_factors(&orders)), "Z2xZ4");
        assert_eq!(abelian_name(&abelian_invariant_factors(&[1])), "Z1");
    }

    #[test]
    fn chain_actions() {
        let t = su2_chain_table();
        assert!(validate_chain_action(&ChainAction::trivial(3, 2), &t).is_empty());
        let swap = ChainAction {
            omega: 2,
            perms: vec![vec![0, 1], vec![1, 0]],
        };
        assert!(validate_chain_action(&swap, &t).is_empty());
        let cycle = ChainAction {
            omega: 3,
            perms: vec![vec![0, 1, 2], vec![1, 2, 0]],
        };
        assert!(!validate_chain_action(&cycle, &t).is_empty());
        assert_eq!(permutation_order(&[1, 2, 0]), 3);
        let not_bijective = ChainAction {
            omega: 2,
            perms: vec![vec![0, 1], vec![0, 0]],
        };
        assert!(!validate_chain_action(&not_bijective, &t).is_empty());
    }

    #[test]
    fn transport_rule_report() {
        for data in [builtin_s3(), builtin_q8(), builtin_cyclic(4)] {
            let (_, out, _) = finite(data);
            // for group duals co-membership already reaches the fixpoint
            assert!(!out.transport_rule_needed());
        }
    }
}
