//! Fusion rings: label sets with a unit, conjugation and a tensor
//! decomposition map. Backends cover finite groups (via characters),
//! SU(2) (spin labels) and SU(N) (Young diagrams).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Debug;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::FusionError;
use crate::group::GroupData;

/// Multiset of labels with big-integer multiplicities; zero entries absent.
pub type Multiset<L> = BTreeMap<L, BigUint>;

pub trait FusionRing {
    type Label: Clone + Ord + Debug;

    fn unit(&self) -> Self::Label;
    fn conj(&self, a: &Self::Label) -> Self::Label;
    fn fuse(&self, a: &Self::Label, b: &Self::Label) -> Multiset<Self::Label>;
    fn dim(&self, a: &Self::Label) -> BigUint;
    fn format_label(&self, a: &Self::Label) -> String;
    fn parse_label(&self, s: &str) -> Result<Self::Label, FusionError>;
}

/// Fusion of two multisets, multiplicities multiplied out.
pub fn fuse_multisets<R: FusionRing>(
    ring: &R,
    a: &Multiset<R::Label>,
    b: &Multiset<R::Label>,
) -> Multiset<R::Label> {
    let mut out: Multiset<R::Label> = BTreeMap::new();
    for (x, mx) in a {
        for (y, my) in b {
            let w = mx * my;
            for (z, mz) in ring.fuse(x, y) {
                *out.entry(z).or_insert_with(BigUint::zero) += &w * mz;
            }
        }
    }
    out
}

/// Total dimension `Σ mult·dim` of a multiset.
pub fn total_dim<R: FusionRing>(ring: &R, m: &Multiset<R::Label>) -> BigUint {
    m.iter().map(|(l, k)| ring.dim(l) * k).sum()
}

/// Finite-dimensional representation as an ordered list of irreducible
/// constituents with positive multiplicities. The order fixes the adapted
/// basis layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpec<L> {
    constituents: Vec<(L, u64)>,
}

impl<L: Clone + Ord> RepSpec<L> {
    pub fn new(constituents: Vec<(L, u64)>) -> Result<Self, FusionError> {
        let constituents: Vec<(L, u64)> = constituents.into_iter().filter(|(_, m)| *m > 0).collect();
        if constituents.is_empty() {
            return Err(FusionError::EmptyRep);
        }
        Ok(RepSpec { constituents })
    }

    pub fn irreducible(label: L) -> Self {
        RepSpec {
            constituents: vec![(label, 1)],
        }
    }

    pub fn constituents(&self) -> &[(L, u64)] {
        &self.constituents
    }

    pub fn as_multiset(&self) -> Multiset<L> {
        let mut m = BTreeMap::new();
        for (l, k) in &self.constituents {
            *m.entry(l.clone()).or_insert_with(BigUint::zero) += BigUint::from(*k);
        }
        m
    }

    pub fn total_dim<R: FusionRing<Label = L>>(&self, ring: &R) -> BigUint {
        total_dim(ring, &self.as_multiset())
    }
}

/// Multiplicity of the unit in the `n`-fold fusion power of `v`.
pub fn trivial_multiplicity_in_power<R: FusionRing>(ring: &R, v: &RepSpec<R::Label>, n: u32) -> BigUint {
    assert!(n >= 1, "power must be positive");
    let base = v.as_multiset();
    let mut acc = base.clone();
    for _ in 1..n {
        acc = fuse_multisets(ring, &acc, &base);
    }
    acc.get(&ring.unit()).cloned().unwrap_or_default()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Least power containing the unit.
    Yes(u32),
    /// No constituent of dimension or multiplicity at least two.
    No,
    /// Constituent condition holds; no power up to the bound contains the unit.
    Unknown(u32),
}

/// Decides membership in the class of representations with a constituent of
/// dimension or multiplicity at least two and a tensor power containing the
/// unit, searching powers up to `n_max`.
pub fn g0_membership<R: FusionRing>(ring: &R, v: &RepSpec<R::Label>, n_max: u32) -> Membership {
    let two = BigUint::from(2u32);
    let big_constituent = v
        .constituents()
        .iter()
        .any(|(l, m)| *m >= 2 || ring.dim(l) >= two);
    if !big_constituent {
        return Membership::No;
    }
    let base = v.as_multiset();
    let unit = ring.unit();
    let mut acc = base.clone();
    for n in 1..=n_max {
        if n > 1 {
            acc = fuse_multisets(ring, &acc, &base);
        }
        if acc.get(&unit).is_some_and(|m| !m.is_zero()) {
            return Membership::Yes(n);
        }
    }
    Membership::Unknown(n_max)
}

/// Dual of a finite group, labels are irrep indices.
#[derive(Clone, Debug)]
pub struct FiniteFusion {
    data: GroupData,
    conj: Vec<usize>,
    table: Vec<Vec<Multiset<usize>>>,
}

impl FiniteFusion {
    pub fn new(data: GroupData) -> Result<Self, FusionError> {
        let k = data.irreps.len();
        let conj = (0..k).map(|i| data.conjugate_index(i)).collect();
        let ch = data.characters();
        let mut table = Vec::with_capacity(k);
        for a in 0..k {
            let mut row = Vec::with_capacity(k);
            for b in 0..k {
                let mult = data.decompose_tensor(&ch[a], &ch[b])?;
                row.push(
                    mult.into_iter()
                        .enumerate()
                        .filter(|(_, m)| *m > 0)
                        .map(|(d, m)| (d, BigUint::from(m)))
                        .collect(),
                );
            }
            table.push(row);
        }
        Ok(FiniteFusion { data, conj, table })
    }

    pub fn data(&self) -> &GroupData {
        &self.data
    }

    pub fn labels(&self) -> Vec<usize> {
        (0..self.data.irreps.len()).collect()
    }
}

impl FusionRing for FiniteFusion {
    type Label = usize;

    fn unit(&self) -> usize {
        self.data.trivial_index()
    }

    fn conj(&self, a: &usize) -> usize {
        self.conj[*a]
    }

    fn fuse(&self, a: &usize, b: &usize) -> Multiset<usize> {
        self.table[*a][*b].clone()
    }

    fn dim(&self, a: &usize) -> BigUint {
        BigUint::from(self.data.irreps[*a].dim)
    }

    fn format_label(&self, a: &usize) -> String {
        self.data.irreps[*a].label.clone()
    }

    fn parse_label(&self, s: &str) -> Result<usize, FusionError> {
        Ok(self.data.index_of(s)?)
    }
}

/// SU(2) spin `l`, stored as the nonnegative integer `2l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spin(pub u32);

impl Spin {
    pub fn twice(self) -> u32 {
        self.0
    }

    pub fn parse(s: &str) -> Option<Spin> {
        let s = s.trim();
        match s.split_once('/') {
            Some((num, "2")) => {
                let n: u32 = num.trim().parse().ok()?;
                (n % 2 == 1).then_some(Spin(n))
            }
            Some(_) => None,
            None => s.parse::<u32>().ok().and_then(|n| n.checked_mul(2)).map(Spin),
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Su2;

/// `l × l' = {|l−l'|, |l−l'|+1, …, l+l'}`, each once.
pub fn su2_fuse(a: Spin, b: Spin) -> Vec<Spin> {
    let lo = a.0.abs_diff(b.0);
    (lo..=a.0 + b.0).step_by(2).map(Spin).collect()
}

impl FusionRing for Su2 {
    type Label = Spin;

    fn unit(&self) -> Spin {
        Spin(0)
    }

    fn conj(&self, a: &Spin) -> Spin {
        *a
    }

    fn fuse(&self, a: &Spin, b: &Spin) -> Multiset<Spin> {
        su2_fuse(*a, *b).into_iter().map(|s| (s, BigUint::one())).collect()
    }

    fn dim(&self, a: &Spin) -> BigUint {
        BigUint::from(a.0 + 1)
    }

    fn format_label(&self, a: &Spin) -> String {
        a.to_string()
    }

    fn parse_label(&self, s: &str) -> Result<Spin, FusionError> {
        Spin::parse(s).ok_or_else(|| FusionError::InvalidLabel(s.to_string()))
    }
}

/// Young diagram as weakly decreasing positive row lengths.
pub type Diagram = Vec<u32>;

/// SU(N) with irreps labelled by diagrams with fewer than `N` rows.
#[derive(Clone, Copy, Debug)]
pub struct SuN {
    n: usize,
}

impl SuN {
    pub fn new(n: usize) -> Result<Self, FusionError> {
        if n < 2 {
            return Err(FusionError::InvalidLabel(format!("SU({n})")));
        }
        Ok(SuN { n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Drops full columns and trailing zeros; `None` if more than `N` rows.
    pub fn normalize(&self, d: &[u32]) -> Option<Diagram> {
        let rows: Vec<u32> = d.iter().copied().filter(|&x| x > 0).collect();
        if rows.len() > self.n {
            return None;
        }
        let full = if rows.len() == self.n { rows[self.n - 1] } else { 0 };
        Some(rows.into_iter().map(|x| x - full).filter(|&x| x > 0).collect())
    }

    pub fn is_valid(&self, d: &[u32]) -> bool {
        d.len() < self.n && d.windows(2).all(|w| w[0] >= w[1]) && d.iter().all(|&x| x > 0)
    }

    fn padded(&self, d: &[u32]) -> Vec<u32> {
        let mut p = d.to_vec();
        p.resize(self.n, 0);
        p
    }

    /// All valid diagrams whose dimension is at most `max_dim`, sorted.
    ///
    /// Dimension is not monotone in the number of boxes, so the search is
    /// bounded by `λ_1 ≤ (N−1)(max_dim−1)`, which follows from the factor
    /// `(λ_1 + N − 1)/(N − 1)` of the Weyl product.
    pub fn labels_up_to_dim(&self, max_dim: u64) -> Vec<Diagram> {
        let bound = BigUint::from(max_dim);
        let first = (self.n as u64 - 1) * max_dim.saturating_sub(1);
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.collect_rows(first as u32, &mut current, &bound, &mut out);
        out.sort();
        out
    }

    fn collect_rows(&self, cap: u32, current: &mut Diagram, bound: &BigUint, out: &mut Vec<Diagram>) {
        if self.dim(current) <= *bound {
            out.push(current.clone());
        }
        if current.len() == self.n - 1 {
            return;
        }
        for len in 1..=cap {
            current.push(len);
            self.collect_rows(len, current, bound, out);
            current.pop();
        }
    }
}

/// Littlewood–Richardson expansion of `s_λ · s_μ` restricted to diagrams with
/// at most `max_rows` rows.
pub fn littlewood_richardson(lambda: &[u32], mu: &[u32], max_rows: usize) -> BTreeMap<Diagram, u64> {
    let mut out = BTreeMap::new();
    // counts[r][j]: boxes labelled j in row r of the skew tableau
    let mut counts: Vec<Vec<u32>> = vec![vec![0; mu.len()]; lambda.len()];
    lr_recurse(lambda.to_vec(), mu, 0, &mut counts, max_rows, &mut out);
    out
}

fn lr_recurse(
    shape: Vec<u32>,
    mu: &[u32],
    j: usize,
    counts: &mut Vec<Vec<u32>>,
    max_rows: usize,
    out: &mut BTreeMap<Diagram, u64>,
) {
    if j == mu.len() {
        *out.entry(shape).or_insert(0) += 1;
        return;
    }
    let mut rows = shape.clone();
    if rows.len() < max_rows {
        rows.push(0);
    }
    let mut added = vec![0u32; rows.len()];
    distribute(&shape, &rows, 0, mu[j], &mut added, &mut |added: &[u32]| {
        let mut new_shape: Vec<u32> = rows.iter().zip(added).map(|(a, b)| a + b).collect();
        while new_shape.last() == Some(&0) {
            new_shape.pop();
        }
        let saved = counts.clone();
        counts.resize(new_shape.len(), vec![0; mu.len()]);
        for (r, &a) in added.iter().enumerate() {
            if a > 0 {
                counts[r][j] += a;
            }
        }
        if is_lattice(counts, j + 1) {
            lr_recurse(new_shape, mu, j + 1, counts, max_rows, out);
        }
        *counts = saved;
    });
}

/// Enumerates horizontal strips of `remaining` boxes added to `rows`: row `r`
/// may grow up to the original length of row `r-1`.
fn distribute(
    orig: &[u32],
    rows: &[u32],
    r: usize,
    remaining: u32,
    added: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if r == rows.len() {
        if remaining == 0 {
            visit(added);
        }
        return;
    }
    let cap = if r == 0 {
        remaining
    } else {
        (orig.get(r - 1).copied().unwrap_or(0) - rows[r]).min(remaining)
    };
    for a in (0..=cap).rev() {
        added[r] = a;
        distribute(orig, rows, r + 1, remaining - a, added, visit);
    }
    added[r] = 0;
}

/// Reading word (rows top to bottom, right to left) restricted to labels
/// `< upto` is a lattice word.
fn is_lattice(counts: &[Vec<u32>], upto: usize) -> bool {
    let mut seen = vec![0u32; upto];
    for row in counts {
        for k in (0..upto).rev() {
            seen[k] += row[k];
            if k > 0 && seen[k] > seen[k - 1] {
                return false;
            }
        }
    }
    true
}

impl FusionRing for SuN {
    type Label = Diagram;

    fn unit(&self) -> Diagram {
        Vec::new()
    }

    /// Complement diagram `λ̄_i = λ_1 − λ_{N+1−i}`.
    fn conj(&self, a: &Diagram) -> Diagram {
        let p = self.padded(a);
        let top = p[0];
        let c: Vec<u32> = (0..self.n).map(|i| top - p[self.n - 1 - i]).collect();
        self.normalize(&c).expect("at most N rows")
    }

    fn fuse(&self, a: &Diagram, b: &Diagram) -> Multiset<Diagram> {
        let mut out: Multiset<Diagram> = BTreeMap::new();
        for (d, m) in littlewood_richardson(a, b, self.n) {
            let d = self.normalize(&d).expect("row bound enforced");
            *out.entry(d).or_insert_with(BigUint::zero) += BigUint::from(m);
        }
        out
    }

    /// Weyl dimension `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)`.
    fn dim(&self, a: &Diagram) -> BigUint {
        let p = self.padded(a);
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for i in 0..self.n {
            for j in i + 1..self.n {
                num *= BigUint::from(p[i] - p[j] + (j - i) as u32);
                den *= BigUint::from((j - i) as u32);
            }
        }
        num / den
    }

    fn format_label(&self, a: &Diagram) -> String {
        let parts: Vec<String> = a.iter().map(u32::to_string).collect();
        format!("[{}]", parts.join(","))
    }

    /// Accepts `[3,1]`, `3,1`, `[]` and the empty string.
    fn parse_label(&self, s: &str) -> Result<Diagram, FusionError> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        let d: Diagram = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|x| x.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| FusionError::InvalidLabel(s.to_string()))?
        };
        let d: Diagram = d.into_iter().filter(|&x| x > 0).collect();
        if !self.is_valid(&d) {
            return Err(FusionError::InvalidLabel(s.to_string()));
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_cyclic, builtin_q8, builtin_s3};
    use alloc::collections::BTreeSet;

    fn ms<L: Ord>(items: Vec<(L, u32)>) -> Multiset<L> {
        items.into_iter().map(|(l, m)| (l, BigUint::from(m))).collect()
    }

    fn half(n: u32) -> Spin {
        Spin(n)
    }

    #[test]
    fn su2_examples() {
        assert_eq!(su2_fuse(half(1), half(1)), vec![Spin(0), Spin(2)]);
        assert_eq!(su2_fuse(Spin(0), Spin(5)), vec![Spin(5)]);
        assert_eq!(su2_fuse(Spin(2), half(1)), vec![half(1), half(3)]);
    }

    #[test]
    fn spin_text() {
        for (s, v) in [("0", 0), ("1/2", 1), ("1", 2), ("3/2", 3), ("10", 20)] {
            assert_eq!(Spin::parse(s), Some(Spin(v)));
            assert_eq!(Spin(v).to_string(), s);
        }
        assert_eq!(Spin::parse("2/2"), None);
        assert_eq!(Spin::parse("1/3"), None);
        assert_eq!(Spin::parse("-1"), None);
    }

    /// Weights of `s_λ` in three variables from semistandard tableaux.
    fn sl3_weights(lambda: &[u32]) -> BTreeMap<[u32; 3], u64> {
        fn fill(
            shape: &[u32],
            cells: &[(usize, usize)],
            idx: usize,
            t: &mut Vec<Vec<u32>>,
            out: &mut BTreeMap<[u32; 3], u64>,
        ) {
            if idx == cells.len() {
                let mut w = [0u32; 3];
                for row in t.iter() {
                    for &e in row {
                        w[(e - 1) as usize] += 1;
                    }
                }
                *out.entry(w).or_insert(0) += 1;
                return;
            }
            let (r, c) = cells[idx];
            let lo_row = if c > 0 { t[r][c - 1] } else { 1 };
            let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 1 };
            for e in lo_row.max(lo_col)..=3 {
                t[r][c] = e;
                fill(shape, cells, idx + 1, t, out);
            }
            t[r][c] = 0;
        }
        let cells: Vec<(usize, usize)> = lambda
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
            .collect();
        let mut t: Vec<Vec<u32>> = lambda.iter().map(|&l| vec![0; l as usize]).collect();
        let mut out = BTreeMap::new();
        fill(lambda, &cells, 0, &mut t, &mut out);
        out
    }

    /// Tensor product decomposition by peeling highest weights off the
    /// product weight multiset.
    fn sl3_oracle(a: &[u32], b: &[u32]) -> BTreeMap<Diagram, u64> {
        let wa = sl3_weights(a);
        let wb = sl3_weights(b);
        let mut prod: BTreeMap<[u32; 3], i64> = BTreeMap::new();
        for (x, m) in &wa {
            for (y, n) in &wb {
                let w = [x[0] + y[0], x[1] + y[1], x[2] + y[2]];
                *prod.entry(w).or_insert(0) += (m * n) as i64;
            }
        }
        let mut out = BTreeMap::new();
        loop {
            prod.retain(|_, m| *m != 0);
            let Some((&top, &mult)) = prod.iter().next_back() else {
                break;
            };
            assert!(mult > 0 && top[0] >= top[1] && top[1] >= top[2]);
            let diagram: Diagram = top.iter().copied().filter(|&x| x > 0).collect();
            for (w, m) in sl3_weights(&diagram) {
                *prod.entry(w).or_insert(0) -= mult * m as i64;
            }
            let reduced: Diagram = top.iter().map(|x| x - top[2]).filter(|&x| x > 0).collect();
            *out.entry(reduced).or_insert(0) += mult as u64;
        }
        out
    }

    fn to_u64(m: &Multiset<Diagram>) -> BTreeMap<Diagram, u64> {
        m.iter().map(|(d, k)| (d.clone(), u64::try_from(k).unwrap())).collect()
    }

    #[test]
    fn su3_fund_antifund() {
        let su3 = SuN::new(3).unwrap();
        let r = su3.fuse(&vec![1], &vec![1, 1]);
        assert_eq!(r, ms(vec![(vec![], 1), (vec![2, 1], 1)]));
        assert_eq!(su3.dim(&vec![2, 1]), BigUint::from(8u32));
    }

    #[test]
    fn su3_matches_weight_oracle() {
        let su3 = SuN::new(3).unwrap();
        let labels = su3.labels_up_to_dim(15);
        for a in &labels {
            for b in &labels {
                assert_eq!(to_u64(&su3.fuse(a, b)), sl3_oracle(a, b), "{a:?} x {b:?}");
            }
        }
    }

    #[test]
    fn su2_diagrams_match_spins() {
        let su2d = SuN::new(2).unwrap();
        for a in 0..8u32 {
            for b in 0..8u32 {
                let da: Diagram = if a == 0 { vec![] } else { vec![a] };
                let db: Diagram = if b == 0 { vec![] } else { vec![b] };
                let via_diagrams: BTreeSet<u32> =
                    su2d.fuse(&da, &db).keys().map(|d| d.first().copied().unwrap_or(0)).collect();
                let via_spins: BTreeSet<u32> = su2_fuse(Spin(a), Spin(b)).into_iter().map(Spin::twice).collect();
                assert_eq!(via_diagrams, via_spins);
            }
        }
    }

    #[test]
    fn unit_and_conjugates() {
        let su4 = SuN::new(4).unwrap();
        for d in su4.labels_up_to_dim(20) {
            assert_eq!(su4.fuse(&vec![], &d), ms(vec![(d.clone(), 1)]));
            let c = su4.conj(&d);
            assert_eq!(su4.dim(&c), su4.dim(&d));
            assert_eq!(su4.conj(&c), d);
            assert_eq!(su4.fuse(&d, &c).get(&vec![]), Some(&BigUint::one()));
        }
        assert_eq!(su4.conj(&vec![1]), vec![1, 1, 1]);
        assert_eq!(su4.conj(&vec![2, 1]), vec![2, 2, 1]);
    }

    #[test]
    fn labels_enumeration_is_complete() {
        let su3 = SuN::new(3).unwrap();
        let got = su3.labels_up_to_dim(15);
        let mut brute = Vec::new();
        for a in 0..15u32 {
            for b in 0..=a {
                let d: Diagram = [a, b].into_iter().filter(|&x| x > 0).collect();
                if su3.dim(&d) <= BigUint::from(15u32) {
                    brute.push(d);
                }
            }
        }
        brute.sort();
        assert_eq!(got, brute);
    }

    #[test]
    fn label_parsing() {
        let su3 = SuN::new(3).unwrap();
        assert_eq!(su3.parse_label("[2,1]").unwrap(), vec![2, 1]);
        assert_eq!(su3.parse_label("[]").unwrap(), Vec::<u32>::new());
        assert!(su3.parse_label("[1,2]").is_err());
        assert!(su3.parse_label("[1,1,1]").is_err());
        assert_eq!(su3.format_label(&vec![2, 1]), "[2,1]");
    }

    #[test]
    fn powers_containing_unit() {
        let v = RepSpec::irreducible(Spin(1));
        assert_eq!(trivial_multiplicity_in_power(&Su2, &v, 2), BigUint::one());
        assert_eq!(trivial_multiplicity_in_power(&Su2, &v, 1), BigUint::zero());
        for n in 2..=5usize {
            let sun = SuN::new(n).unwrap();
            let fund = RepSpec::irreducible(vec![1]);
            assert_eq!(trivial_multiplicity_in_power(&sun, &fund, n as u32), BigUint::one());
            for k in 1..n as u32 {
                assert!(trivial_multiplicity_in_power(&sun, &fund, k).is_zero());
            }
        }
    }

    #[test]
    fn membership() {
        assert_eq!(g0_membership(&Su2, &RepSpec::irreducible(Spin(1)), 4), Membership::Yes(2));
        let z5 = FiniteFusion::new(builtin_cyclic(5)).unwrap();
        assert_eq!(g0_membership(&z5, &RepSpec::irreducible(1), 10), Membership::No);
        let doubled = RepSpec::new(vec![(1, 2)]).unwrap();
        assert_eq!(g0_membership(&z5, &doubled, 10), Membership::Yes(5));
        assert_eq!(g0_membership(&z5, &doubled, 3), Membership::Unknown(3));
        let s3 = FiniteFusion::new(builtin_s3()).unwrap();
        let std = s3.parse_label("std").unwrap();
        assert_eq!(g0_membership(&s3, &RepSpec::irreducible(std), 4), Membership::Yes(2));
    }

    #[test]
    fn finite_backend_axioms() {
        for data in [builtin_s3(), builtin_q8(), builtin_cyclic(6)] {
            let ring = FiniteFusion::new(data).unwrap();
            let labels = ring.labels();
            let u = ring.unit();
            for &a in &labels {
                assert_eq!(ring.fuse(&u, &a), ms(vec![(a, 1)]));
                assert!(ring.fuse(&a, &ring.conj(&a)).contains_key(&u));
                for &b in &labels {
                    let ab = ring.fuse(&a, &b);
                    assert_eq!(ab, ring.fuse(&b, &a));
                    assert_eq!(total_dim(&ring, &ab), ring.dim(&a) * ring.dim(&b));
                    // multiplicity of d in a⊗b equals that of conj(b) in conj(d)⊗a
                    for &d in &labels {
                        let lhs = ab.get(&d).cloned().unwrap_or_default();
                        let rhs = ring
                            .fuse(&ring.conj(&d), &a)
                            .get(&ring.conj(&b))
                            .cloned()
                            .unwrap_or_default();
                        assert_eq!(lhs, rhs);
                    }
                    for &c in &labels {
                        let left = fuse_multisets(&ring, &ab, &ms(vec![(c, 1)]));
                        let right = fuse_multisets(&ring, &ms(vec![(a, 1)]), &ring.fuse(&b, &c));
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn empty_repspec_rejected() {
        assert_eq!(RepSpec::<usize>::new(vec![]), Err(FusionError::EmptyRep));
        assert_eq!(RepSpec::new(vec![(3usize, 0)]), Err(FusionError::EmptyRep));
    }
}
