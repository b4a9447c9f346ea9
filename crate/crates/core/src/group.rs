//! Finite groups given by multiplication tables, with exact unitary
//! representations and their characters.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::GroupError;
use crate::linalg::Matrix;
use crate::scalar::{rational, Cyclotomic, CyclotomicField, Rational};

/// Orders up to this bound get an exhaustive associativity check.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the table and derives identity and inverses.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let violations = Self::table_violations(&table);
        if !violations.is_empty() {
            return Err(GroupError::InvalidGroup(violations.join("; ")));
        }
        let m = table.len();
        let identity = (0..m)
            .find(|&e| (0..m).all(|g| table[e][g] == g && table[g][e] == g))
            .expect("checked above");
        let inverse = (0..m)
            .map(|g| (0..m).find(|&h| table[g][h] == identity).expect("checked above"))
            .collect();
        Ok(FiniteGroup {
            name: name.into(),
            table,
            identity,
            inverse,
        })
    }

    /// Every violated group axiom of a candidate table.
    pub fn table_violations(table: &[Vec<usize>]) -> Vec<String> {
        let m = table.len();
        let mut out = Vec::new();
        if m == 0 {
            out.push("empty table".to_string());
            return out;
        }
        for (g, row) in table.iter().enumerate() {
            if row.len() != m {
                out.push(format!("row {g} has length {} instead of {m}", row.len()));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= m) {
                out.push(format!("row {g} contains out-of-range element {bad}"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let Some(e) = (0..m).find(|&e| (0..m).all(|g| table[e][g] == g && table[g][e] == g)) else {
            out.push("no two-sided identity".to_string());
            return out;
        };
        for g in 0..m {
            let left = (0..m).find(|&h| table[h][g] == e);
            let right = (0..m).find(|&h| table[g][h] == e);
            if left.is_none() || left != right {
                out.push(format!("element {g} has no two-sided inverse"));
            }
        }
        let mut check = |a: usize, b: usize, c: usize| {
            if table[table[a][b]][c] != table[a][table[b][c]] {
                out.push(format!("associativity fails at ({a},{b},{c})"));
                true
            } else {
                false
            }
        };
        if m <= EXHAUSTIVE_ASSOCIATIVITY {
            'outer: for a in 0..m {
                for b in 0..m {
                    for c in 0..m {
                        if check(a, b, c) {
                            break 'outer;
                        }
                    }
                }
            }
        } else {
            // deterministic sample
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            for _ in 0..20_000 {
                let mut next = || {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 33) as usize) % m
                };
                let (a, b, c) = (next(), next(), next());
                if check(a, b, c) {
                    break;
                }
            }
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, g| acc.lcm(&self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        let m = self.order();
        (0..m).all(|a| (0..m).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `{c : cg = gc for all g}` in increasing index order.
    pub fn center(&self) -> Vec<usize> {
        let m = self.order();
        (0..m)
            .filter(|&c| (0..m).all(|g| self.mul(c, g) == self.mul(g, c)))
            .collect()
    }

    /// Conjugacy classes by orbit enumeration; each class sorted, classes
    /// ordered by their least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let m = self.order();
        let mut seen = vec![false; m];
        let mut classes = Vec::new();
        for x in 0..m {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..m)
                .map(|g| self.mul(self.mul(g, x), self.inv(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Cyclic group `Z_n` with elements `0..n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(format!("Z{n}"), table).expect("cyclic table")
    }
}

/// Exact matrix representation: one `d×d` matrix per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    pub label: String,
    pub dim: usize,
    pub matrices: Vec<Matrix>,
}

impl MatrixRep {
    /// Every violated representation invariant (shape, identity,
    /// homomorphism, unitarity).
    pub fn violations(&self, group: &FiniteGroup) -> Vec<String> {
        let mut out = Vec::new();
        let m = group.order();
        if self.matrices.len() != m {
            out.push(format!(
                "{}: {} matrices for a group of order {m}",
                self.label,
                self.matrices.len()
            ));
            return out;
        }
        for (g, mat) in self.matrices.iter().enumerate() {
            if mat.rows() != self.dim || mat.cols() != self.dim {
                out.push(format!("{}: matrix of element {g} is not {}x{}", self.label, self.dim, self.dim));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let id = Matrix::identity(self.dim);
        if self.matrices[group.identity()] != id {
            out.push(format!("{}: identity element is not represented by the identity matrix", self.label));
        }
        for a in 0..m {
            for b in 0..m {
                if self.matrices[a].mul(&self.matrices[b]) != self.matrices[group.mul(a, b)] {
                    out.push(format!("{}: U({a})U({b}) != U({})", self.label, group.mul(a, b)));
                }
            }
        }
        for (g, mat) in self.matrices.iter().enumerate() {
            if mat.conj_transpose().mul(mat) != id {
                out.push(format!("{}: U({g}) is not unitary", self.label));
            }
        }
        out
    }

    pub fn character(&self) -> Character {
        Character {
            label: self.label.clone(),
            values: self.matrices.iter().map(Matrix::trace).collect(),
        }
    }

    /// `g ↦ det U(g)`.
    pub fn det_rep(&self) -> MatrixRep {
        MatrixRep {
            label: format!("det({})", self.label),
            dim: 1,
            matrices: self
                .matrices
                .iter()
                .map(|m| Matrix::from_rows(vec![vec![m.determinant()]]).expect("1x1"))
                .collect(),
        }
    }

    /// Elementwise complex conjugate representation.
    pub fn conjugate(&self) -> MatrixRep {
        MatrixRep {
            label: format!("conj({})", self.label),
            dim: self.dim,
            matrices: self.matrices.iter().map(|m| m.map(Cyclotomic::conjugate)).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        let id = Matrix::identity(self.dim);
        self.matrices.iter().all(|m| *m == id)
    }

    /// Block diagonal direct sum in the given order.
    pub fn direct_sum(label: impl Into<String>, parts: &[&MatrixRep]) -> MatrixRep {
        let m = parts.first().map_or(0, |p| p.matrices.len());
        let matrices = (0..m)
            .map(|g| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.matrices[g]).collect();
                Matrix::direct_sum(&blocks)
            })
            .collect();
        MatrixRep {
            label: label.into(),
            dim: parts.iter().map(|p| p.dim).sum(),
            matrices,
        }
    }

    /// For every central element `c`, the scalar by which `U(c)` acts.
    pub fn restrict_to_center(&self, group: &FiniteGroup) -> Result<Vec<(usize, Cyclotomic)>, GroupError> {
        group
            .center()
            .into_iter()
            .map(|c| {
                self.matrices[c]
                    .scalar_value()
                    .map(|v| (c, v))
                    .ok_or_else(|| GroupError::NotScalarOnCenter {
                        label: self.label.clone(),
                        element: c,
                    })
            })
            .collect()
    }
}

/// Character values, one per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub label: String,
    pub values: Vec<Cyclotomic>,
}

impl Character {
    pub fn dim(&self, group: &FiniteGroup) -> Cyclotomic {
        self.values[group.identity()].clone()
    }

    /// `(1/|G|) Σ_g χ(g) conj(ψ(g))`.
    pub fn inner(&self, other: &Character) -> Cyclotomic {
        let m = self.values.len();
        let mut acc = Cyclotomic::zero();
        for (a, b) in self.values.iter().zip(other.values.iter()) {
            acc += &(a * &b.conjugate());
        }
        acc.scale(&rational(1, m as i64))
    }

    pub fn product(&self, other: &Character) -> Character {
        Character {
            label: format!("{}*{}", self.label, other.label),
            values: self.values.iter().zip(other.values.iter()).map(|(a, b)| a * b).collect(),
        }
    }

    pub fn conjugate(&self) -> Character {
        Character {
            label: format!("conj({})", self.label),
            values: self.values.iter().map(Cyclotomic::conjugate).collect(),
        }
    }

    pub fn is_class_function(&self, group: &FiniteGroup) -> bool {
        group
            .conjugacy_classes()
            .iter()
            .all(|cl| cl.iter().all(|&g| self.values[g] == self.values[cl[0]]))
    }
}

/// A finite group together with a complete list of its irreducible
/// unitary representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    pub group: FiniteGroup,
    pub irreps: Vec<MatrixRep>,
    characters: Vec<Character>,
    conductor: u32,
}

impl GroupData {
    /// Lifts all matrices to the working conductor (the group exponent) and
    /// checks every invariant, reporting all violations at once.
    pub fn new(group: FiniteGroup, irreps: Vec<MatrixRep>) -> Result<Self, GroupError> {
        let data = Self::assemble(group, irreps);
        let violations = data.violations();
        if violations.is_empty() {
            Ok(data)
        } else {
            Err(GroupError::InvalidGroup(violations.join("; ")))
        }
    }

    /// Every violated invariant of candidate data, without constructing it.
    pub fn validate(group: FiniteGroup, irreps: Vec<MatrixRep>) -> Vec<String> {
        Self::assemble(group, irreps).violations()
    }

    fn assemble(group: FiniteGroup, irreps: Vec<MatrixRep>) -> Self {
        let conductor = group.exponent() as u32;
        let field = CyclotomicField::new(conductor);
        let irreps: Vec<MatrixRep> = irreps
            .into_iter()
            .map(|r| MatrixRep {
                matrices: r.matrices.iter().map(|m| m.map(|x| lift_into(&field, x))).collect(),
                ..r
            })
            .collect();
        GroupData {
            characters: irreps.iter().map(MatrixRep::character).collect(),
            group,
            irreps,
            conductor,
        }
    }

    /// Every violated invariant: per-rep checks, distinct labels,
    /// orthogonality of characters and `Σ dim² = |G|`.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.irreps {
            out.extend(r.violations(&self.group));
        }
        if !out.is_empty() {
            return out;
        }
        let mut labels: Vec<&str> = self.irreps.iter().map(|r| r.label.as_str()).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            out.push("duplicate irrep labels".to_string());
        }
        for (i, a) in self.characters.iter().enumerate() {
            if !a.is_class_function(&self.group) {
                out.push(format!("character of {} is not a class function", a.label));
            }
            for (j, b) in self.characters.iter().enumerate() {
                let ip = a.inner(b);
                let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if ip != expected {
                    out.push(format!("<chi_{}, chi_{}> = {ip}", a.label, b.label));
                }
            }
        }
        let sum: usize = self.irreps.iter().map(|r| r.dim * r.dim).sum();
        if sum != self.group.order() {
            out.push(format!("sum of squared dimensions is {sum}, group order {}", self.group.order()));
        }
        out
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn index_of(&self, label: &str) -> Result<usize, GroupError> {
        self.irreps
            .iter()
            .position(|r| r.label == label)
            .ok_or_else(|| GroupError::UnknownLabel(label.to_string()))
    }

    /// Multiplicities of every irrep in `χ_a·χ_b`.
    pub fn decompose_tensor(&self, a: &Character, b: &Character) -> Result<Vec<u64>, GroupError> {
        let prod = a.product(b);
        self.decompose(&prod)
    }

    /// Multiplicity of each irrep in an arbitrary character.
    pub fn decompose(&self, chi: &Character) -> Result<Vec<u64>, GroupError> {
        self.characters
            .iter()
            .map(|d| {
                let m = chi.inner(d);
                nonnegative_integer(&m).ok_or_else(|| GroupError::NonIntegerMultiplicity {
                    label: d.label.clone(),
                    value: m.to_string(),
                })
            })
            .collect()
    }

    /// Index of the irrep whose character is the conjugate of irrep `i`.
    pub fn conjugate_index(&self, i: usize) -> usize {
        let c = self.characters[i].conjugate();
        self.characters
            .iter()
            .position(|d| d.values == c.values)
            .expect("complete irrep list is closed under conjugation")
    }

    /// Index of the trivial irrep.
    pub fn trivial_index(&self) -> usize {
        self.irreps
            .iter()
            .position(MatrixRep::is_trivial)
            .expect("complete irrep list contains the trivial rep")
    }
}

fn lift_into(field: &CyclotomicField, x: &Cyclotomic) -> Cyclotomic {
    if field.conductor() % x.conductor() == 0 {
        field.lift(x)
    } else {
        x.clone()
    }
}

fn nonnegative_integer(x: &Cyclotomic) -> Option<u64> {
    let q: Rational = x.as_rational()?;
    if !q.is_integer() || q.is_negative() {
        return None;
    }
    u64::try_from(q.to_integer()).ok().or(if q.is_zero() { Some(0) } else { None })
}

fn scalar_matrix(v: Cyclotomic) -> Matrix {
    Matrix::from_rows(vec![vec![v]]).expect("1x1")
}

fn mat(rows: Vec<Vec<Cyclotomic>>) -> Matrix {
    Matrix::from_rows(rows).expect("well-formed literal")
}

/// `Z_n` with its `n` characters `χ_k(g) = ζ_n^{kg}`, labelled `chi0…`.
pub fn builtin_cyclic(n: usize) -> GroupData {
    let group = FiniteGroup::cyclic(n);
    let f = CyclotomicField::new(n as u32);
    let irreps = (0..n)
        .map(|k| MatrixRep {
            label: format!("chi{k}"),
            dim: 1,
            matrices: (0..n).map(|g| scalar_matrix(f.root((k * g) as i64))).collect(),
        })
        .collect();
    GroupData::new(group, irreps).expect("cyclic group data")
}

/// Elements of `S_3` as permutations of `{0,1,2}` in a fixed order.
const S3_ELEMENTS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 2, 0],
    [2, 0, 1],
    [1, 0, 2],
    [0, 2, 1],
    [2, 1, 0],
];

/// `S_3` with irreps `triv`, `sgn`, `std`. The standard representation is
/// given in its unitary monomial form over `Q(ζ_3)`: the 3-cycle acts as
/// `diag(ω, ω²)` and transpositions as anti-diagonal matrices.
pub fn builtin_s3() -> GroupData {
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] { [p[q[0]], p[q[1]], p[q[2]]] };
    let index = |p: [usize; 3]| S3_ELEMENTS.iter().position(|&e| e == p).expect("closed");
    let table: Vec<Vec<usize>> = S3_ELEMENTS
        .iter()
        .map(|a| S3_ELEMENTS.iter().map(|b| index(compose(a, b))).collect())
        .collect();
    let group = FiniteGroup::from_table("S3", table).expect("S3 table");
    let f = CyclotomicField::new(3);
    let zero = f.zero();
    let w = f.root(1);
    let w2 = f.root(2);
    let one = f.one();
    // r = (0 1 2) cycle, s = transposition (0 1); other elements by products
    let r = mat(vec![vec![w.clone(), zero.clone()], vec![zero.clone(), w2.clone()]]);
    let s = mat(vec![vec![zero.clone(), one.clone()], vec![one.clone(), zero.clone()]]);
    let id = Matrix::identity(2);
    let r2 = r.mul(&r);
    // S3_ELEMENTS: e, r, r², s, and the remaining two transpositions.
    let mut std = vec![id, r.clone(), r2.clone(), s.clone(), Matrix::zeros(2, 2), Matrix::zeros(2, 2)];
    let (ir, is_) = (1usize, 3usize);
    for g in 4..6 {
        // find the word s·r^k realizing element g
        for (k, rk) in [(0usize, Matrix::identity(2)), (1, r.clone()), (2, r2.clone())] {
            let mut idx = is_;
            for _ in 0..k {
                idx = group.mul(idx, ir);
            }
            if idx == g {
                std[g] = s.mul(&rk);
            }
        }
    }
    let sign = |p: &[usize; 3]| {
        let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let irreps = vec![
        MatrixRep {
            label: "triv".into(),
            dim: 1,
            matrices: (0..6).map(|_| scalar_matrix(Cyclotomic::one())).collect(),
        },
        MatrixRep {
            label: "sgn".into(),
            dim: 1,
            matrices: S3_ELEMENTS.iter().map(|p| scalar_matrix(Cyclotomic::from_int(sign(p)))).collect(),
        },
        MatrixRep {
            label: "std".into(),
            dim: 2,
            matrices: std,
        },
    ];
    GroupData::new(group, irreps).expect("S3 data")
}

/// Non-unitary rational standard representation of `S_3` on the sum-zero
/// plane, basis `e0-e1, e1-e2`. Useful where only multiplicativity matters.
pub fn s3_rational_standard() -> MatrixRep {
    let matrices = S3_ELEMENTS
        .iter()
        .map(|p| {
            // image of basis vectors under the permutation
            let image = |a: usize, b: usize| {
                let mut v = [0i64; 3];
                v[p[a]] += 1;
                v[p[b]] -= 1;
                // express v = x(e0-e1) + y(e1-e2): x = v0, y = v0 + v1
                [v[0], v[0] + v[1]]
            };
            let c0 = image(0, 1);
            let c1 = image(1, 2);
            mat(vec![
                vec![Cyclotomic::from_int(c0[0]), Cyclotomic::from_int(c1[0])],
                vec![Cyclotomic::from_int(c0[1]), Cyclotomic::from_int(c1[1])],
            ])
        })
        .collect();
    MatrixRep {
        label: "std_rational".into(),
        dim: 2,
        matrices,
    }
}

/// Quaternion units, index = 4·sign + unit with unit ∈ {1, i, j, k}.
fn quaternion_mul(a: usize, b: usize) -> usize {
    let (sa, ua) = (a / 4, a % 4);
    let (sb, ub) = (b / 4, b % 4);
    // unit products: table[ua][ub] = (sign, unit)
    const T: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (s, u) = T[ua][ub];
    4 * ((sa + sb + s) % 2) + u
}

/// Quaternion group `Q_8`: elements `1,i,j,k,-1,-i,-j,-k` (indices 0…7),
/// irreps `triv`, `chi_i`, `chi_j`, `chi_k` and the 2-dimensional `rho2`.
pub fn builtin_q8() -> GroupData {
    let table: Vec<Vec<usize>> = (0..8).map(|a| (0..8).map(|b| quaternion_mul(a, b)).collect()).collect();
    let group = FiniteGroup::from_table("Q8", table).expect("Q8 table");
    let f = CyclotomicField::new(4);
    let (zero, one, i) = (f.zero(), f.one(), f.root(1));
    let unit_matrices = [
        Matrix::identity(2),
        mat(vec![vec![i.clone(), zero.clone()], vec![zero.clone(), -&i]]),
        mat(vec![vec![zero.clone(), one.clone()], vec![-&one, zero.clone()]]),
        mat(vec![vec![zero.clone(), i.clone()], vec![i.clone(), zero.clone()]]),
    ];
    let rho2: Vec<Matrix> = (0..8)
        .map(|g| {
            let m = unit_matrices[g % 4].clone();
            if g >= 4 {
                m.map(|x| -x)
            } else {
                m
            }
        })
        .collect();
    // kernel is {±1, ±unit}
    let one_dim = |label: &str, keep: usize| MatrixRep {
        label: label.into(),
        dim: 1,
        matrices: (0..8)
            .map(|g| {
                let u = g % 4;
                let v = if u == 0 || u == keep { 1 } else { -1 };
                scalar_matrix(Cyclotomic::from_int(v))
            })
            .collect(),
    };
    let irreps = vec![
        MatrixRep {
            label: "triv".into(),
            dim: 1,
            matrices: (0..8).map(|_| scalar_matrix(Cyclotomic::one())).collect(),
        },
        one_dim("chi_i", 1),
        one_dim("chi_j", 2),
        one_dim("chi_k", 3),
        MatrixRep {
            label: "rho2".into(),
            dim: 2,
            matrices: rho2,
        },
    ];
    GroupData::new(group, irreps).expect("Q8 data")
}

/// Looks up a bundled group by name: `S3`, `Q8` or `Z<n>`.
pub fn builtin(name: &str) -> Option<GroupData> {
    match name {
        "S3" | "s3" => Some(builtin_s3()),
        "Q8" | "q8" => Some(builtin_q8()),
        _ => {
            let n: usize = name.strip_prefix('Z').or_else(|| name.strip_prefix('z'))?.parse().ok()?;
            (n >= 1).then(|| builtin_cyclic(n))
        }
    }
}

/// Representation given by an ordered list of irreps with multiplicities,
/// realized block diagonally (adapted basis order).
pub fn rep_from_constituents(
    data: &GroupData,
    label: &str,
    constituents: &[(usize, usize)],
) -> MatrixRep {
    let mut parts = Vec::new();
    for &(idx, mult) in constituents {
        for _ in 0..mult {
            parts.push(&data.irreps[idx]);
        }
    }
    MatrixRep::direct_sum(label, &parts)
}

/// Counts elements per conjugacy class; handy for reports.
pub fn class_sizes(group: &FiniteGroup) -> BTreeMap<usize, usize> {
    group
        .conjugacy_classes()
        .into_iter()
        .map(|c| (c[0], c.len()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Multiplicity via the character inner product, written out directly.
    fn oracle_multiplicity(data: &GroupData, a: usize, b: usize, d: usize) -> Cyclotomic {
        let m = data.group.order();
        let ch = data.characters();
        let mut acc = Cyclotomic::zero();
        for g in 0..m {
            acc = &acc + &(&(&ch[a].values[g] * &ch[b].values[g]) * &ch[d].values[g].conjugate());
        }
        acc.scale(&rational(1, m as i64))
    }

    #[test]
    fn builtins_validate() {
        for data in [builtin_s3(), builtin_q8(), builtin_cyclic(1), builtin_cyclic(7), builtin_cyclic(12)] {
            assert!(data.violations().is_empty(), "{}", data.group.name());
        }
        assert_eq!(builtin_s3().conductor(), 6);
        assert_eq!(builtin_q8().conductor(), 4);
    }

    #[test]
    fn centers() {
        assert_eq!(builtin_s3().group.center(), vec![0]);
        let q8 = builtin_q8();
        assert_eq!(q8.group.center(), vec![0, 4]);
        assert_eq!(FiniteGroup::cyclic(5).center(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn center_is_abelian_and_matches_brute_force() {
        for data in [builtin_s3(), builtin_q8()] {
            let g = &data.group;
            let c = g.center();
            for &a in &c {
                for &b in &c {
                    assert_eq!(g.mul(a, b), g.mul(b, a));
                }
            }
            let m = g.order();
            let brute: Vec<usize> = (0..m)
                .filter(|&x| (0..m).all(|y| g.table()[x][y] == g.table()[y][x]))
                .collect();
            assert_eq!(c, brute);
        }
    }

    #[test]
    fn s3_std_squared() {
        let d = builtin_s3();
        let std = d.index_of("std").unwrap();
        let mult = d.decompose_tensor(&d.characters()[std], &d.characters()[std]).unwrap();
        for (k, m) in mult.iter().enumerate() {
            assert_eq!(Cyclotomic::from_int(*m as i64), oracle_multiplicity(&d, std, std, k));
        }
        assert_eq!(mult, vec![1, 1, 1]);
    }

    #[test]
    fn q8_rho2_squared() {
        let d = builtin_q8();
        let r = d.index_of("rho2").unwrap();
        let mult = d.decompose_tensor(&d.characters()[r], &d.characters()[r]).unwrap();
        assert_eq!(mult, vec![1, 1, 1, 1, 0]);
    }

    #[test]
    fn tensor_with_trivial() {
        for d in [builtin_s3(), builtin_q8(), builtin_cyclic(4)] {
            let t = d.trivial_index();
            for i in 0..d.irreps.len() {
                let mult = d.decompose_tensor(&d.characters()[i], &d.characters()[t]).unwrap();
                let mut expected = vec![0; d.irreps.len()];
                expected[i] = 1;
                assert_eq!(mult, expected);
            }
        }
    }

    #[test]
    fn dimension_count_and_orthogonality() {
        for d in [builtin_s3(), builtin_q8()] {
            let ch = d.characters();
            for i in 0..ch.len() {
                for j in 0..ch.len() {
                    let total: u64 = d
                        .decompose_tensor(&ch[i], &ch[j])
                        .unwrap()
                        .iter()
                        .zip(d.irreps.iter())
                        .map(|(m, r)| m * r.dim as u64)
                        .sum();
                    assert_eq!(total, (d.irreps[i].dim * d.irreps[j].dim) as u64);
                }
            }
        }
    }

    #[test]
    fn non_integer_multiplicity_rejected() {
        let d = builtin_s3();
        let mut bogus = d.characters()[2].clone();
        bogus.values[1] = Cyclotomic::from_int(0);
        assert!(matches!(d.decompose(&bogus), Err(GroupError::NonIntegerMultiplicity { .. })));
    }

    #[test]
    fn restriction_to_center() {
        let q8 = builtin_q8();
        let rho = &q8.irreps[q8.index_of("rho2").unwrap()];
        let r = rho.restrict_to_center(&q8.group).unwrap();
        assert_eq!(r, vec![(0, Cyclotomic::one()), (4, Cyclotomic::from_int(-1))]);
        let triv = &q8.irreps[q8.trivial_index()];
        assert!(triv.restrict_to_center(&q8.group).unwrap().iter().all(|(_, v)| v.is_one()));
        // a reducible rep that is not scalar on -1
        let mixed = MatrixRep::direct_sum("triv+rho2", &[triv, rho]);
        assert!(matches!(
            mixed.restrict_to_center(&q8.group),
            Err(GroupError::NotScalarOnCenter { element: 4, .. })
        ));
    }

    #[test]
    fn determinant_reps() {
        let s3 = builtin_s3();
        let sgn = &s3.irreps[s3.index_of("sgn").unwrap()];
        let rational_std = s3_rational_standard();
        assert_eq!(rational_std.det_rep().matrices, sgn.matrices);
        let std = &s3.irreps[s3.index_of("std").unwrap()];
        assert_eq!(std.det_rep().matrices, sgn.matrices);
        assert_eq!(sgn.det_rep().matrices, sgn.matrices);
        let q8 = builtin_q8();
        assert!(q8.irreps[q8.index_of("rho2").unwrap()].det_rep().is_trivial());
    }

    #[test]
    fn rational_std_is_a_homomorphism_but_not_unitary() {
        let s3 = builtin_s3();
        let v = s3_rational_standard().violations(&s3.group);
        assert!(!v.is_empty());
        assert!(v.iter().all(|s| s.contains("unitary")));
    }

    #[test]
    fn invalid_tables_report_violations() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(!FiniteGroup::table_violations(&bad).is_empty());
        assert!(FiniteGroup::from_table("bad", vec![vec![0, 5], vec![1, 0]]).is_err());
    }
}
