//! Seeded identity suites over a family. Each case compares two exactly
//! computed elements; failures record both sides and the first differing
//! coefficient.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{class_projection, invariant_dimension, invariant_space, s_w, AlgebraElement, Family, Word};
use crate::bimodule::CentralElement;
use crate::error::AlgebraError;
use crate::scalar::{root_of_unity, Cyclotomic};

pub const DEFAULT_SEED: u64 = 0x5eed_c4a1_2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    /// Generator relations: unit sum, orthonormality, coefficient transport,
    /// cross-member commutation, plus associativity and the adjoint.
    Relations,
    /// `X B = ρⁿ(B) X` for `X` in the `n`-th generator power.
    XnRho,
    /// Invariant vectors commute with central elements.
    ProRc,
    /// Invariant operators commute with central elements.
    TeoHrs,
    /// Action of `ρ` and `ρ²` on central elements through the chain group.
    ZMap,
    /// Invariant isometries and conjugation by `S_𝒲^p`.
    LemRv,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Relations,
        Suite::XnRho,
        Suite::ProRc,
        Suite::TeoHrs,
        Suite::ZMap,
        Suite::LemRv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::XnRho => "xnrho",
            Suite::ProRc => "prorc",
            Suite::TeoHrs => "teohrs",
            Suite::ZMap => "zmap",
            Suite::LemRv => "lemrv",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Default level: word length, `r, s` bound, `ρ` power or `p`.
    pub fn default_level(self) -> u32 {
        match self {
            Suite::Relations => 2,
            Suite::XnRho | Suite::ProRc => 3,
            Suite::TeoHrs | Suite::ZMap | Suite::LemRv => 2,
        }
    }

    /// Default number of random samples.
    pub fn default_samples(self) -> usize {
        match self {
            Suite::Relations => 200,
            Suite::XnRho => 10,
            Suite::ProRc | Suite::TeoHrs => 5,
            Suite::ZMap => 20,
            Suite::LemRv => 50,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub tag: String,
    pub lhs: String,
    pub rhs: String,
    pub diff_entry: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub level: u32,
    pub seed: u64,
    pub samples: usize,
}

impl SuiteConfig {
    pub fn defaults(suite: Suite) -> Self {
        SuiteConfig {
            level: suite.default_level(),
            seed: DEFAULT_SEED,
            samples: suite.default_samples(),
        }
    }
}

struct Runner {
    report: SuiteReport,
}

impl Runner {
    fn check(&mut self, tag: &str, lhs: &AlgebraElement, rhs: &AlgebraElement) -> Result<(), AlgebraError> {
        self.report.cases += 1;
        if let Some(diff) = lhs.first_difference(rhs)? {
            self.report.failures.push(Failure {
                tag: tag.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                diff_entry: diff,
            });
        }
        Ok(())
    }

    fn check_count(&mut self, tag: &str, got: usize, expected: usize) {
        self.report.cases += 1;
        if got != expected {
            self.report.failures.push(Failure {
                tag: tag.to_string(),
                lhs: got.to_string(),
                rhs: expected.to_string(),
                diff_entry: format!("dimension {got} vs {expected}"),
            });
        }
    }
}

/// Small random scalar in `Z[ζ]` for the family's group conductor.
pub fn random_scalar(rng: &mut ChaCha8Rng, conductor: u32) -> Cyclotomic {
    let a = Cyclotomic::from_int(rng.gen_range(-4..=4));
    if conductor <= 2 {
        return a;
    }
    let b = Cyclotomic::from_int(rng.gen_range(-2..=2));
    let zeta = root_of_unity(conductor, rng.gen_range(1..conductor as i64));
    &a + &(&b * &zeta)
}

pub fn random_central(family: &Family, rng: &mut ChaCha8Rng) -> CentralElement {
    let conductor = family.group().map_or(1, |g| g.conductor());
    CentralElement::new((0..family.omega()).map(|_| random_scalar(rng, conductor)).collect())
}

fn random_indices(family: &Family, member: usize, len: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let d = family.members()[member].dim();
    (0..len).map(|_| rng.gen_range(0..d)).collect()
}

/// Sum of `terms` random `ψ_L A ψ_M*` over `members`, word lengths at most
/// `max_len`.
pub fn random_element(
    family: &Arc<Family>,
    rng: &mut ChaCha8Rng,
    members: &[usize],
    terms: usize,
    max_len: usize,
) -> Result<AlgebraElement, AlgebraError> {
    let n = family.members().len();
    let mut acc = AlgebraElement::zero(family);
    for _ in 0..terms {
        let mut l: Word = vec![Vec::new(); n];
        let mut m: Word = vec![Vec::new(); n];
        for &v in members {
            let ll = rng.gen_range(0..=max_len);
            let ml = rng.gen_range(0..=max_len);
            l[v] = random_indices(family, v, ll, rng);
            m[v] = random_indices(family, v, ml, rng);
        }
        let t = AlgebraElement::term(family, l, m, random_central(family, rng))?;
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

/// Element of the `n`-th generator power `Σ ψ_L A` of one member.
fn random_vector(
    family: &Arc<Family>,
    rng: &mut ChaCha8Rng,
    member: usize,
    n: usize,
    terms: usize,
) -> Result<AlgebraElement, AlgebraError> {
    let mut acc = AlgebraElement::zero(family);
    let empty: Word = vec![Vec::new(); family.members().len()];
    for _ in 0..terms {
        let mut l = empty.clone();
        l[member] = random_indices(family, member, n, rng);
        let t = AlgebraElement::term(family, l, empty.clone(), random_central(family, rng))?;
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

fn sum_psi_psi_star(family: &Arc<Family>, member: usize) -> Result<AlgebraElement, AlgebraError> {
    let mut acc = AlgebraElement::zero(family);
    for i in 0..family.members()[member].dim() {
        let g = AlgebraElement::generator(family, member, i)?;
        acc = acc.add(&g.multiply(&g.adjoint())?)?;
    }
    Ok(acc)
}

pub fn run_suite(family: &Arc<Family>, suite: Suite, config: &SuiteConfig) -> Result<SuiteReport, AlgebraError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut runner = Runner {
        report: SuiteReport {
            suite: suite.name().to_string(),
            cases: 0,
            failures: Vec::new(),
        },
    };
    match suite {
        Suite::Relations => relations(family, config, &mut rng, &mut runner)?,
        Suite::XnRho => xn_rho(family, config, &mut rng, &mut runner)?,
        Suite::ProRc => invariant_vectors(family, config, &mut rng, &mut runner)?,
        Suite::TeoHrs => invariant_operators(family, config, &mut rng, &mut runner)?,
        Suite::ZMap => center_action(family, config, &mut rng, &mut runner)?,
        Suite::LemRv => isometry_reduction(family, config, &mut rng, &mut runner)?,
    }
    Ok(runner.report)
}

fn relations(family: &Arc<Family>, config: &SuiteConfig, rng: &mut ChaCha8Rng, run: &mut Runner) -> Result<(), AlgebraError> {
    let n = family.members().len();
    let all: Vec<usize> = (0..n).collect();
    let one = AlgebraElement::one(family);
    let max_len = config.level.max(1) as usize;
    for case in 0..config.samples {
        let v = rng.gen_range(0..n);
        let d = family.members()[v].dim();
        match case % 6 {
            0 => {
                let a = random_element(family, rng, &all, 2, max_len)?;
                let b = random_element(family, rng, &all, 2, max_len)?;
                let unit = sum_psi_psi_star(family, v)?;
                run.check("cuntz-sum", &unit, &one)?;
                let lhs = AlgebraElement::product(&[&a, &unit, &b])?;
                run.check("cuntz-sum", &lhs, &a.multiply(&b)?)?;
            }
            1 => {
                let (i, j) = (rng.gen_range(0..d), rng.gen_range(0..d));
                let a = random_element(family, rng, &all, 2, max_len)?;
                let gi = AlgebraElement::generator(family, v, i)?;
                let gj = AlgebraElement::generator(family, v, j)?;
                let lhs = AlgebraElement::product(&[&gi.adjoint(), &gj, &a])?;
                let rhs = if i == j { a } else { AlgebraElement::zero(family) };
                run.check("orthonormality", &lhs, &rhs)?;
            }
            2 => {
                let i = rng.gen_range(0..d);
                let b = random_central(family, rng);
                let class = family.members()[v].chain_class(i);
                let g = AlgebraElement::generator(family, v, i)?;
                let lhs = g.multiply(&AlgebraElement::central(family, b.clone()))?;
                let rhs = AlgebraElement::central(family, family.alpha_class(class, &b)).multiply(&g)?;
                run.check("coefficient-transport", &lhs, &rhs)?;
                let lhs = AlgebraElement::central(family, b.clone()).multiply(&g.adjoint())?;
                let rhs = g.adjoint().multiply(&AlgebraElement::central(family, family.alpha_class(class, &b)))?;
                run.check("coefficient-transport", &lhs, &rhs)?;
            }
            3 if n > 1 => {
                let w = (v + rng.gen_range(1..n)) % n;
                let gv = AlgebraElement::generator(family, v, rng.gen_range(0..d))?;
                let gw = AlgebraElement::generator(family, w, rng.gen_range(0..family.members()[w].dim()))?;
                run.check("cross-commutation", &gv.multiply(&gw)?, &gw.multiply(&gv)?)?;
                run.check(
                    "cross-commutation",
                    &gv.multiply(&gw.adjoint())?,
                    &gw.adjoint().multiply(&gv)?,
                )?;
            }
            3 | 4 => {
                let a = random_element(family, rng, &all, 2, max_len)?;
                let b = random_element(family, rng, &all, 2, max_len)?;
                let c = random_element(family, rng, &all, 2, max_len)?;
                run.check(
                    "associativity",
                    &a.multiply(&b)?.multiply(&c)?,
                    &a.multiply(&b.multiply(&c)?)?,
                )?;
            }
            _ => {
                let a = random_element(family, rng, &all, 2, max_len)?;
                let b = random_element(family, rng, &all, 2, max_len)?;
                run.check(
                    "adjoint-reverses-products",
                    &a.multiply(&b)?.adjoint(),
                    &b.adjoint().multiply(&a.adjoint())?,
                )?;
            }
        }
    }
    Ok(())
}

fn xn_rho(family: &Arc<Family>, config: &SuiteConfig, rng: &mut ChaCha8Rng, run: &mut Runner) -> Result<(), AlgebraError> {
    for v in 0..family.members().len() {
        for n in 1..=config.level {
            for _ in 0..config.samples {
                let x = random_vector(family, rng, v, n as usize, 3)?;
                let b = AlgebraElement::central(family, random_central(family, rng));
                let lhs = x.multiply(&b)?;
                let rhs = b.rho_power(v, n)?.multiply(&x)?;
                run.check("vector-transport", &lhs, &rhs)?;
            }
        }
    }
    Ok(())
}

fn commutes_with_center(
    family: &Arc<Family>,
    basis: &[AlgebraElement],
    tag: &str,
    samples: usize,
    rng: &mut ChaCha8Rng,
    run: &mut Runner,
) -> Result<(), AlgebraError> {
    for t in basis {
        run.check(&format!("{tag}-invariance"), &t.group_mean()?, t)?;
        for _ in 0..samples {
            let b = AlgebraElement::central(family, random_central(family, rng));
            run.check(tag, &t.multiply(&b)?, &b.multiply(t)?)?;
        }
    }
    Ok(())
}

fn invariant_vectors(family: &Arc<Family>, config: &SuiteConfig, rng: &mut ChaCha8Rng, run: &mut Runner) -> Result<(), AlgebraError> {
    for v in 0..family.members().len() {
        for n in 0..=config.level {
            let basis = invariant_space(family, v, 0, n)?;
            run.check_count("invariant-vector-count", basis.len(), invariant_dimension(family, v, 0, n)?);
            commutes_with_center(family, &basis, "invariant-vector-centrality", config.samples, rng, run)?;
        }
    }
    Ok(())
}

fn invariant_operators(family: &Arc<Family>, config: &SuiteConfig, rng: &mut ChaCha8Rng, run: &mut Runner) -> Result<(), AlgebraError> {
    for v in 0..family.members().len() {
        for r in 0..=config.level {
            for s in 0..=config.level {
                let basis = invariant_space(family, v, r, s)?;
                run.check_count("invariant-operator-count", basis.len(), invariant_dimension(family, v, r, s)?);
                commutes_with_center(family, &basis, "invariant-operator-centrality", config.samples, rng, run)?;
            }
        }
    }
    Ok(())
}

fn center_action(family: &Arc<Family>, config: &SuiteConfig, rng: &mut ChaCha8Rng, run: &mut Runner) -> Result<(), AlgebraError> {
    let table = family
        .table()
        .ok_or_else(|| AlgebraError::InvalidFamily("no chain group attached".into()))?;
    let classes = table.order();
    for v in 0..family.members().len() {
        let projections: Vec<AlgebraElement> =
            (0..classes).map(|c| class_projection(family, v, c)).collect::<Result<_, _>>()?;
        let rho_projections: Vec<AlgebraElement> =
            projections.iter().map(|e| e.rho(v)).collect::<Result<_, _>>()?;
        for _ in 0..config.samples {
            let z = random_central(family, rng);
            let lhs = AlgebraElement::central(family, z.clone()).rho(v)?;
            let mut rhs = AlgebraElement::zero(family);
            for (c, e) in projections.iter().enumerate() {
                rhs = rhs.add(&AlgebraElement::central(family, family.alpha_class(c, &z)).multiply(e)?)?;
            }
            run.check("center-action", &lhs, &rhs)?;
            if config.level < 2 {
                continue;
            }
            let lhs2 = lhs.rho(v)?;
            let mut rhs2 = AlgebraElement::zero(family);
            for c1 in 0..classes {
                for c2 in 0..classes {
                    let coeff = AlgebraElement::central(family, family.alpha_class(table.mul(c1, c2), &z));
                    let term = AlgebraElement::product(&[&coeff, &projections[c1], &rho_projections[c2]])?;
                    rhs2 = rhs2.add(&term)?;
                }
            }
            run.check("center-action-square", &lhs2, &rhs2)?;
        }
    }
    Ok(())
}

fn isometry_reduction(family: &Arc<Family>, config: &SuiteConfig, rng: &mut ChaCha8Rng, run: &mut Runner) -> Result<(), AlgebraError> {
    let n = family.members().len();
    let all: Vec<usize> = (0..n).collect();
    let one = AlgebraElement::one(family);
    let group_order = family.group().map(|g| g.group.order());
    for v in 0..n {
        let s = s_w(family, &[v], 1)?;
        run.check("isometry", &s.adjoint().multiply(&s)?, &one)?;
        if let Some(order) = group_order {
            for g in 0..order {
                run.check("isometry-invariance", &s.beta_act(g)?, &s)?;
            }
        }
        let z = AlgebraElement::central(family, random_central(family, rng));
        run.check("isometry-centrality", &s.multiply(&z)?, &z.multiply(&s)?)?;
        for w in (0..n).filter(|&w| w != v) {
            for i in 0..family.members()[w].dim() {
                let g = AlgebraElement::generator(family, w, i)?;
                run.check("isometry-commutation", &s.multiply(&g)?, &g.multiply(&s)?)?;
                run.check(
                    "isometry-commutation",
                    &s.multiply(&g.adjoint())?,
                    &g.adjoint().multiply(&s)?,
                )?;
            }
        }
    }
    for p in 1..=config.level {
        for case in 0..config.samples {
            // random nonempty subset of members for the terms
            let mask = rng.gen_range(1..(1u32 << n));
            let used: Vec<usize> = all.iter().copied().filter(|v| mask >> v & 1 == 1).collect();
            let r = random_element(family, rng, &used, 1 + case % 2, 1)?;
            let support: Vec<usize> = r.support().into_iter().collect();
            let extra: BTreeSet<usize> = all.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            let superset: Vec<usize> = support.iter().copied().chain(extra).collect::<BTreeSet<_>>().into_iter().collect();
            run.check(
                "isometry-reduction",
                &r.conj_by_s(&superset, p)?,
                &r.conj_by_s(&support, p)?,
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::q8_family;

    #[test]
    fn relations_small_run() {
        let fam = q8_family();
        let cfg = SuiteConfig {
            level: 1,
            seed: 7,
            samples: 12,
        };
        let report = run_suite(&fam, Suite::Relations, &cfg).unwrap();
        assert!(report.pass(), "{:?}", report.failures);
        assert!(report.cases >= 12);
        assert_eq!(report, run_suite(&fam, Suite::Relations, &cfg).unwrap());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("nope"), None);
    }
}
