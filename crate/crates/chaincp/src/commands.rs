use std::path::Path;

use chaincp_core::algebra::{AlgebraElement, Family};
use chaincp_core::bimodule::{
    exhaustive_indicator_witness, find_singularity_witness, is_nonsingular_pointwise, is_nonsingular_stated,
    separated_point, verify_witness, CentralElement, DiagonalBimodule,
};
use chaincp_core::chain::{
    chain_group_table, compute_chain_partition, cross_check_truncation, eta_check, su2_chain_class, su2_chain_table,
    sun_chain_class, sun_chain_table, ChainGroupTable, TruncationReport,
};
use chaincp_core::checks::{run_suite, Suite, SuiteConfig, SuiteReport};
use chaincp_core::error::AlgebraError;
use chaincp_core::fusion::{fuse_multisets, FiniteFusion, FusionRing, Multiset, Spin, Su2, SuN};
use chaincp_core::group::{builtin, FiniteGroup, GroupData};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::cli::GroupSource;
use crate::formats::{read_json, BimoduleFile, FamilyFile, GroupFile, LoadedFamily};
use crate::{CliError, Outcome};

pub fn group_from_source(source: &GroupSource) -> Result<GroupData, CliError> {
    match (&source.group, &source.builtin) {
        (Some(path), None) => read_json::<GroupFile>(path)?.to_data(),
        (None, Some(name)) => builtin(name).ok_or_else(|| CliError::input(format!("--builtin: unknown group {name:?}"))),
        _ => Err(CliError::input("one of --ring, --group or --builtin is required")),
    }
}

fn product_table(table: &ChainGroupTable) -> Value {
    let n = table.order();
    Value::from(
        (0..n)
            .map(|a| Value::from((0..n).map(|b| table.names[table.mul(a, b)].clone()).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
    )
}

fn truncation_json(labels: usize, max_label: String, t: &TruncationReport) -> Value {
    json!({
        "labels": labels,
        "max_label": max_label,
        "blocks": t.blocks,
        "constant_on_blocks": t.constant_on_blocks,
        "blocks_equal_fibres": t.blocks_equal_fibres,
    })
}

pub fn chain_group_su2(max_spin: &str) -> Result<Outcome, CliError> {
    let max = Spin::parse(max_spin).ok_or_else(|| CliError::input(format!("--max-spin: invalid spin {max_spin:?}")))?;
    let table = su2_chain_table();
    let labels: Vec<Spin> = (0..=max.twice()).map(Spin).collect();
    let t = cross_check_truncation(&Su2, &labels, |l| su2_chain_class(*l));
    let pass = table.violations().is_empty() && t.constant_on_blocks && t.blocks_equal_fibres;
    Ok(Outcome {
        json: json!({
            "ring": "su2",
            "classes": table.names,
            "group": table.structure_name(),
            "product_table": product_table(&table),
            "class_rule": "2l mod 2",
            "truncation": truncation_json(labels.len(), max.to_string(), &t),
            "eta": "not applicable",
        }),
        pass,
    })
}

pub fn chain_group_sun(n: usize, max_dim: u64) -> Result<Outcome, CliError> {
    let ring = SuN::new(n).map_err(|e| CliError::input(format!("--n: {e}")))?;
    let table = sun_chain_table(n);
    let labels = ring.labels_up_to_dim(max_dim);
    let t = cross_check_truncation(&ring, &labels, |l| sun_chain_class(l, n));
    let pass = table.violations().is_empty() && t.constant_on_blocks;
    Ok(Outcome {
        json: json!({
            "ring": format!("su{n}"),
            "classes": table.names,
            "group": table.structure_name(),
            "product_table": product_table(&table),
            "class_rule": format!("boxes mod {n}"),
            "truncation": truncation_json(labels.len(), format!("dim <= {max_dim}"), &t),
            "eta": "not applicable",
        }),
        pass,
    })
}

pub fn chain_group_finite(data: &GroupData) -> Result<Outcome, CliError> {
    let ring = FiniteFusion::new(data.clone()).map_err(|e| CliError::input(format!("group: {e}")))?;
    let outcome = compute_chain_partition(&ring, &ring.labels()).map_err(|e| CliError::input(format!("group: {e}")))?;
    let p = &outcome.partition;
    let table = chain_group_table(&ring, p).map_err(|e| CliError::input(format!("group: {e}")))?;
    let eta = eta_check(&ring, p, &table);
    let members: serde_json::Map<String, Value> = (0..p.num_classes())
        .map(|c| {
            let labels: Vec<String> = p.members(c).into_iter().map(|l| ring.format_label(l)).collect();
            (table.names[c].clone(), Value::from(labels))
        })
        .collect();
    let pass = eta.pass() && table.violations().is_empty();
    Ok(Outcome {
        json: json!({
            "group_name": data.group.name(),
            "classes": table.names,
            "class_members": members,
            "group": table.structure_name(),
            "product_table": product_table(&table),
            "transport_rule_needed": outcome.transport_rule_needed(),
            "center_order": eta.center_order,
            "eta": if eta.pass() { "pass" } else { "fail" },
            "eta_report": {
                "well_defined": eta.well_defined,
                "homomorphism": eta.homomorphism,
                "injective": eta.injective,
                "surjective": eta.surjective,
                "counterexamples": eta.counterexamples,
            },
        }),
        pass,
    })
}

fn big_to_json(x: &num_bigint::BigUint) -> Value {
    x.to_u64().map_or_else(|| Value::from(x.to_string()), Value::from)
}

pub fn fusion<R: FusionRing>(ring: &R, labels: &[String]) -> Result<Outcome, CliError> {
    let parsed: Vec<R::Label> = labels
        .iter()
        .map(|s| ring.parse_label(s).map_err(|e| CliError::input(format!("--fuse: {e}"))))
        .collect::<Result<_, _>>()?;
    let mut acc: Multiset<R::Label> = Multiset::new();
    acc.insert(parsed[0].clone(), 1u32.into());
    for l in &parsed[1..] {
        let mut single = Multiset::new();
        single.insert(l.clone(), 1u32.into());
        acc = fuse_multisets(ring, &acc, &single);
    }
    let result: Vec<Value> = acc
        .iter()
        .map(|(l, m)| json!({"label": ring.format_label(l), "mult": big_to_json(m), "dim": big_to_json(&ring.dim(l))}))
        .collect();
    // dimension count is a consistency check of the decomposition
    let lhs: num_bigint::BigUint = parsed.iter().map(|l| ring.dim(l)).product();
    let rhs: num_bigint::BigUint = acc.iter().map(|(l, m)| ring.dim(l) * m).sum();
    Ok(Outcome {
        json: json!({"result": result, "dim": big_to_json(&lhs), "dim_check": lhs == rhs}),
        pass: lhs == rhs,
    })
}

fn central_json(z: &CentralElement) -> Value {
    Value::from(z.values().iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

/// `φφ* = Z` for `φ = Σ_k ψ_k Z_k` in the generator algebra of `b`.
fn rank_one_identity(b: &DiagonalBimodule, z: &CentralElement, components: &[CentralElement]) -> Result<bool, AlgebraError> {
    let family = Family::from_bimodule("H", b)?;
    let mut phi = AlgebraElement::zero(&family);
    for (k, zk) in components.iter().enumerate() {
        phi = phi.add(&AlgebraElement::term(&family, vec![vec![k]], vec![vec![]], zk.clone())?)?;
    }
    phi.multiply(&phi.adjoint())?.equals(&AlgebraElement::central(&family, z.clone()))
}

pub fn bimodule_check(input: &Path) -> Result<Outcome, CliError> {
    let b = read_json::<BimoduleFile>(input)?.to_bimodule()?;
    let stated = is_nonsingular_stated(&b);
    let pointwise = is_nonsingular_pointwise(&b);
    let witness = find_singularity_witness(&b);
    let verified = witness.as_ref().map(|w| verify_witness(&b, w));
    let exhaustive = (b.omega() <= 20).then(|| exhaustive_indicator_witness(&b));
    let algebra = match &witness {
        Some(w) => match rank_one_identity(&b, &w.z, &w.components) {
            Ok(ok) => Some(ok),
            Err(AlgebraError::SizeLimit(_)) => None,
            Err(e) => return Err(CliError::from_algebra(e)),
        },
        None => None,
    };
    let exhaustive_found = exhaustive.as_ref().map(Option::is_some);
    let pass = verified != Some(false)
        && algebra != Some(false)
        && !(stated && exhaustive_found == Some(true))
        && !(stated && witness.is_some());
    Ok(Outcome {
        json: json!({
            "rank": b.rank(),
            "omega": b.omega(),
            "stated_nonsingular": stated,
            "pointwise_nonsingular": pointwise,
            "criteria_agree": stated == pointwise,
            "separated_point": separated_point(&b),
            "witness": witness.as_ref().map(|w| json!({
                "z": central_json(&w.z),
                "components": w.components.iter().map(central_json).collect::<Vec<_>>(),
            })),
            "witness_verified": verified,
            "rank_one_identity": algebra,
            "exhaustive_indicator_witness": exhaustive_found,
        }),
        pass,
    })
}

fn load_family(input: &Path) -> Result<LoadedFamily, CliError> {
    let file: FamilyFile = read_json(input)?;
    let base = input.parent().unwrap_or(Path::new("."));
    file.load(base)
}

fn report_json(r: &SuiteReport, config: &SuiteConfig) -> Value {
    json!({
        "suite": r.suite,
        "cases": r.cases,
        "level": config.level,
        "seed": config.seed,
        "samples": config.samples,
        "failures": r.failures.iter().map(|f| json!({
            "tag": f.tag,
            "lhs": f.lhs,
            "rhs": f.rhs,
            "diff_entry": f.diff_entry,
        })).collect::<Vec<_>>(),
    })
}

/// Suites that need group matrices or a chain group, by what the family
/// carries.
fn applicable(family: &Family, suite: Suite) -> Result<(), String> {
    match suite {
        Suite::ProRc | Suite::TeoHrs if family.group().is_none() => {
            Err("needs a finite group for group averaging".into())
        }
        Suite::ZMap if family.table().is_none() => Err("needs a chain group".into()),
        _ => Ok(()),
    }
}

pub fn algebra_verify(
    input: &Path,
    suite: Option<&str>,
    level: Option<u32>,
    seed: u64,
    samples: Option<usize>,
) -> Result<Outcome, CliError> {
    let loaded = load_family(input)?;
    let config = |s: Suite| SuiteConfig {
        level: level.unwrap_or(s.default_level()),
        seed,
        samples: samples.unwrap_or(s.default_samples()),
    };
    if let Some(name) = suite {
        let s = Suite::parse(name).ok_or_else(|| CliError::input(format!("--suite: unknown suite {name:?}")))?;
        applicable(&loaded.family, s).map_err(|r| CliError::input(format!("--suite {name}: {r}")))?;
        let cfg = config(s);
        let report = run_suite(&loaded.family, s, &cfg).map_err(CliError::from_algebra)?;
        return Ok(Outcome {
            json: report_json(&report, &cfg),
            pass: report.pass(),
        });
    }
    let (reports, skipped, pass) = run_all(&loaded.family, config)?;
    Ok(Outcome {
        json: json!({"reports": reports, "skipped": skipped}),
        pass,
    })
}

fn run_all(family: &std::sync::Arc<Family>, config: impl Fn(Suite) -> SuiteConfig) -> Result<(Vec<Value>, Vec<Value>, bool), CliError> {
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    let mut pass = true;
    for s in Suite::ALL {
        if let Err(reason) = applicable(family, s) {
            skipped.push(json!({"suite": s.name(), "reason": reason}));
            continue;
        }
        let cfg = config(s);
        match run_suite(family, s, &cfg) {
            Ok(r) => {
                pass &= r.pass();
                reports.push(report_json(&r, &cfg));
            }
            Err(e @ AlgebraError::DeterminantNotTrivial(_)) => {
                skipped.push(json!({"suite": s.name(), "reason": e.to_string()}));
            }
            Err(e) => return Err(CliError::from_algebra(e)),
        }
    }
    Ok((reports, skipped, pass))
}

pub fn report(input: &Path, seed: u64) -> Result<Outcome, CliError> {
    let loaded = load_family(input)?;
    let family = &loaded.family;
    let members: Vec<Value> = family
        .members()
        .iter()
        .map(|m| {
            let b = &m.bimodule;
            json!({
                "label": m.label,
                "dim": m.dim(),
                "constituents": m.constituents.iter().map(|c| json!({
                    "irrep": c.label,
                    "mult": c.multiplicity,
                    "dim": c.dim,
                    "chain_class": loaded.table.names[c.chain_class],
                })).collect::<Vec<_>>(),
                "point_maps": (0..b.rank()).map(|k| b.point_map(k).to_vec()).collect::<Vec<_>>(),
                "stated_nonsingular": is_nonsingular_stated(b),
                "pointwise_nonsingular": is_nonsingular_pointwise(b),
                "determinant_trivial": m.rep.as_ref().map(|r| r.det_rep().is_trivial()),
            })
        })
        .collect();
    let (reports, skipped, pass) = run_all(family, |s| SuiteConfig {
        seed,
        ..SuiteConfig::defaults(s)
    })?;
    let summary: Vec<Value> = reports
        .iter()
        .map(|r| json!({"suite": r["suite"], "cases": r["cases"], "failures": r["failures"].as_array().map_or(0, Vec::len)}))
        .collect();
    Ok(Outcome {
        json: json!({
            "omega": family.omega(),
            "chain_group": {
                "classes": loaded.table.names,
                "group": loaded.table.structure_name(),
                "action": loaded.table.names.iter().cloned().zip(family.action().perms.iter().cloned())
                    .map(|(n, p)| (n, Value::from(p))).collect::<serde_json::Map<_, _>>(),
            },
            "members": members,
            "suites": summary,
            "skipped": skipped,
            "pass": pass,
        }),
        pass,
    })
}

pub fn group_validate(source: &GroupSource) -> Result<Outcome, CliError> {
    let (group, irreps) = match (&source.group, &source.builtin) {
        (Some(path), None) => {
            let file: GroupFile = read_json(path)?;
            let table_violations = FiniteGroup::table_violations(&file.table);
            if !table_violations.is_empty() || file.table.len() != file.order {
                let mut v = table_violations;
                if file.table.len() != file.order {
                    v.insert(0, format!("table has {} rows for order {}", file.table.len(), file.order));
                }
                return Ok(Outcome {
                    json: json!({"valid": false, "violations": v}),
                    pass: false,
                });
            }
            let parsed = file.parse()?;
            (parsed.group, parsed.irreps)
        }
        _ => {
            let data = group_from_source(source)?;
            (data.group, data.irreps)
        }
    };
    let violations = GroupData::validate(group.clone(), irreps.clone());
    let labels: Vec<&str> = irreps.iter().map(|r| r.label.as_str()).collect();
    Ok(Outcome {
        json: json!({
            "valid": violations.is_empty(),
            "violations": violations,
            "order": group.order(),
            "exponent": group.exponent(),
            "abelian": group.is_abelian(),
            "center": group.center(),
            "conjugacy_classes": group.conjugacy_classes().len(),
            "irreps": labels,
        }),
        pass: violations.is_empty(),
    })
}

pub fn group_export(name: &str) -> Result<Outcome, CliError> {
    let data = builtin(name).ok_or_else(|| CliError::input(format!("--builtin: unknown group {name:?}")))?;
    let value = serde_json::to_value(GroupFile::from_data(&data)).expect("group files serialize");
    Ok(Outcome { json: value, pass: true })
}
