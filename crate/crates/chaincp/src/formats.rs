//! JSON input formats. Exact values travel as strings in the cyclotomic
//! grammar (`"1/2*z8^3 - z8"`).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use chaincp_core::algebra::{chain_structure, AbstractMemberSpec, Family, MemberSpec};
use chaincp_core::bimodule::{ConstituentSpec, DiagonalBimodule};
use chaincp_core::chain::{su2_chain_class, su2_chain_table, sun_chain_class, sun_chain_table, ChainAction, ChainGroupTable};
use chaincp_core::fusion::{FusionRing, Su2, SuN};
use chaincp_core::group::{builtin, FiniteGroup, GroupData, MatrixRep};
use chaincp_core::linalg::Matrix;
use chaincp_core::scalar::Cyclotomic;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrrepFile {
    pub label: String,
    pub dim: usize,
    /// Matrix of each group element, keyed by the element index.
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub irreps: Vec<IrrepFile>,
}

/// Group file parsed into a table and representations, before the
/// character-theoretic checks.
pub struct ParsedGroup {
    pub group: FiniteGroup,
    pub irreps: Vec<MatrixRep>,
}

impl GroupFile {
    pub fn from_data(data: &GroupData) -> Self {
        let m = data.group.order();
        GroupFile {
            name: Some(data.group.name().to_string()),
            order: m,
            table: data.group.table().to_vec(),
            irreps: data
                .irreps
                .iter()
                .map(|r| IrrepFile {
                    label: r.label.clone(),
                    dim: r.dim,
                    matrices: (0..m)
                        .map(|g| {
                            let mat = &r.matrices[g];
                            let rows = (0..mat.rows())
                                .map(|i| (0..mat.cols()).map(|j| mat.get(i, j).to_string()).collect())
                                .collect();
                            (g.to_string(), rows)
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// Schema-level parsing; group axioms and matrix shapes are errors
    /// naming the offending field.
    pub fn parse(&self) -> Result<ParsedGroup, CliError> {
        if self.table.len() != self.order {
            return Err(CliError::input(format!(
                "table: {} rows for order {}",
                self.table.len(),
                self.order
            )));
        }
        let group = FiniteGroup::from_table(self.name.clone().unwrap_or_else(|| "G".into()), self.table.clone())
            .map_err(|e| CliError::input(format!("table: {e}")))?;
        let mut irreps = Vec::new();
        for (n, irrep) in self.irreps.iter().enumerate() {
            let mut matrices = Vec::new();
            for g in 0..self.order {
                let field = format!("irreps[{n}].matrices.{g}");
                let rows = irrep
                    .matrices
                    .get(&g.to_string())
                    .ok_or_else(|| CliError::input(format!("{field}: missing")))?;
                let parsed: Vec<Vec<Cyclotomic>> = rows
                    .iter()
                    .map(|row| row.iter().map(|s| Cyclotomic::parse(s)).collect::<Result<_, _>>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| CliError::input(format!("{field}: {e}")))?;
                if parsed.len() != irrep.dim || parsed.iter().any(|r| r.len() != irrep.dim) {
                    return Err(CliError::input(format!("{field}: expected a {0}x{0} matrix", irrep.dim)));
                }
                matrices.push(Matrix::from_rows(parsed).ok_or_else(|| CliError::input(format!("{field}: ragged rows")))?);
            }
            if let Some(extra) = irrep.matrices.keys().find(|k| k.parse::<usize>().map_or(true, |g| g >= self.order)) {
                return Err(CliError::input(format!("irreps[{n}].matrices.{extra}: not a group element")));
            }
            irreps.push(MatrixRep {
                label: irrep.label.clone(),
                dim: irrep.dim,
                matrices,
            });
        }
        Ok(ParsedGroup { group, irreps })
    }

    pub fn to_data(&self) -> Result<GroupData, CliError> {
        let parsed = self.parse()?;
        GroupData::new(parsed.group, parsed.irreps).map_err(|e| CliError::input(format!("irreps: {e}")))
    }
}

/// Where a family takes its group from.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    /// Path relative to the family file.
    Path(String),
    Builtin { builtin: String },
    Inline(Box<GroupFile>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstituentFile {
    pub irrep: String,
    #[serde(default = "one")]
    pub mult: usize,
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberFile {
    pub label: String,
    pub constituents: Vec<ConstituentFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    /// Finite group source; exclusive with `ring`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupRef>,
    /// `"su2"` or `"suN"` (with `n`); exclusive with `group`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub omega: usize,
    /// Permutation of the spectrum for each chain class, keyed by class
    /// name; omitted classes act trivially.
    #[serde(default)]
    pub chain_action: BTreeMap<String, Vec<usize>>,
    /// Optional expected class name of each irrep label, cross-checked.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain_classes: Option<BTreeMap<String, String>>,
    pub members: Vec<MemberFile>,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub fn load_group(spec: &GroupRef, base: &Path) -> Result<GroupData, CliError> {
    match spec {
        GroupRef::Path(p) => {
            let path: PathBuf = base.join(p);
            read_json::<GroupFile>(&path)?.to_data()
        }
        GroupRef::Builtin { builtin: name } => {
            builtin(name).ok_or_else(|| CliError::input(format!("group.builtin: unknown group {name:?}")))
        }
        GroupRef::Inline(g) => g.to_data(),
    }
}

fn action_from_names(
    names: &[String],
    omega: usize,
    given: &BTreeMap<String, Vec<usize>>,
) -> Result<ChainAction, CliError> {
    let mut action = ChainAction::trivial(omega, names.len());
    for (key, perm) in given {
        let c = names
            .iter()
            .position(|n| n == key)
            .ok_or_else(|| CliError::input(format!("chain_action.{key}: unknown chain class (known: {})", names.join(", "))))?;
        action.perms[c] = perm.clone();
    }
    Ok(action)
}

pub struct LoadedFamily {
    pub family: Arc<Family>,
    pub table: ChainGroupTable,
}

impl FamilyFile {
    pub fn load(&self, base: &Path) -> Result<LoadedFamily, CliError> {
        match (&self.group, &self.ring) {
            (Some(g), None) => self.load_group_family(load_group(g, base)?),
            (None, Some(ring)) => self.load_ring_family(ring),
            _ => Err(CliError::input("group/ring: exactly one of the two is required")),
        }
    }

    fn load_group_family(&self, data: GroupData) -> Result<LoadedFamily, CliError> {
        let (_, partition, table) = chain_structure(&data).map_err(CliError::from_algebra)?;
        if let Some(expected) = &self.chain_classes {
            for (label, class) in expected {
                let idx = data
                    .index_of(label)
                    .map_err(|_| CliError::input(format!("chain_classes.{label}: unknown irrep")))?;
                let actual = &table.names[partition.class_of(&idx).expect("all irreps classified")];
                if actual != class {
                    return Err(CliError::input(format!(
                        "chain_classes.{label}: declared {class}, computed {actual}"
                    )));
                }
            }
        }
        let action = action_from_names(&table.names, self.omega, &self.chain_action)?;
        for (n, m) in self.members.iter().enumerate() {
            for (k, c) in m.constituents.iter().enumerate() {
                if data.index_of(&c.irrep).is_err() {
                    return Err(CliError::input(format!(
                        "members[{n}].constituents[{k}].irrep: unknown irrep {:?}",
                        c.irrep
                    )));
                }
            }
        }
        let members = self
            .members
            .iter()
            .map(|m| MemberSpec {
                label: m.label.clone(),
                constituents: m.constituents.iter().map(|c| (c.irrep.clone(), c.mult)).collect(),
            })
            .collect();
        let family = Family::from_group(data, action, members).map_err(CliError::from_algebra)?;
        Ok(LoadedFamily { family, table })
    }

    fn load_ring_family(&self, ring: &str) -> Result<LoadedFamily, CliError> {
        let (table, classify): (ChainGroupTable, Box<dyn Fn(&str) -> Option<(usize, usize)>>) = match ring {
            "su2" => (
                su2_chain_table(),
                Box::new(|s: &str| {
                    let l = Su2.parse_label(s).ok()?;
                    Some((su2_chain_class(l), Su2.dim(&l).to_usize()?))
                }),
            ),
            "suN" | "sun" => {
                let n = self.n.ok_or_else(|| CliError::input("n: required for ring suN"))?;
                let ring = SuN::new(n).map_err(|e| CliError::input(format!("n: {e}")))?;
                (
                    sun_chain_table(n),
                    Box::new(move |s: &str| {
                        let d = ring.parse_label(s).ok()?;
                        Some((sun_chain_class(&d, n), ring.dim(&d).to_usize()?))
                    }),
                )
            }
            other => return Err(CliError::input(format!("ring: unknown ring {other:?}"))),
        };
        let action = action_from_names(&table.names, self.omega, &self.chain_action)?;
        let mut members = Vec::new();
        for (n, m) in self.members.iter().enumerate() {
            let mut constituents = Vec::new();
            for (k, c) in m.constituents.iter().enumerate() {
                let (class, dim) = classify(&c.irrep).ok_or_else(|| {
                    CliError::input(format!("members[{n}].constituents[{k}].irrep: invalid label {:?}", c.irrep))
                })?;
                constituents.push(ConstituentSpec {
                    label: c.irrep.clone(),
                    chain_class: class,
                    dim,
                    multiplicity: c.mult,
                });
            }
            members.push(AbstractMemberSpec {
                label: m.label.clone(),
                constituents,
            });
        }
        let family = Family::abstract_family(table.clone(), action, members).map_err(CliError::from_algebra)?;
        Ok(LoadedFamily { family, table })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleFile {
    pub omega: usize,
    /// Point map `f_k` of each basis vector.
    pub point_maps: Vec<Vec<usize>>,
}

impl BimoduleFile {
    pub fn to_bimodule(&self) -> Result<DiagonalBimodule, CliError> {
        DiagonalBimodule::from_permutations(self.omega, self.point_maps.clone())
            .map_err(|e| CliError::input(format!("point_maps: {e}")))
    }
}
