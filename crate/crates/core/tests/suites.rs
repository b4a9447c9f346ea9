mod common;

use chaincp_core::algebra::antisym_isometry;
use chaincp_core::checks::{run_suite, Suite, SuiteConfig};
use chaincp_core::error::AlgebraError;

fn quick(suite: Suite) -> SuiteConfig {
    SuiteConfig {
        samples: 4,
        ..SuiteConfig::defaults(suite)
    }
}

#[test]
fn all_suites_pass_on_group_families() {
    for family in [common::s3_family(), common::q8_swap_family()] {
        for suite in Suite::ALL {
            let report = run_suite(&family, suite, &quick(suite)).unwrap();
            assert!(report.cases > 0);
            assert!(report.pass(), "{}: {:?}", suite.name(), report.failures.first());
        }
    }
}

#[test]
fn rotation_family_suites() {
    let family = common::z3_rotation_family();
    for suite in [Suite::Relations, Suite::XnRho, Suite::ProRc, Suite::TeoHrs, Suite::ZMap] {
        let report = run_suite(&family, suite, &quick(suite)).unwrap();
        assert!(report.pass(), "{}: {:?}", suite.name(), report.failures.first());
    }
    // the second member has determinant chi1
    assert!(antisym_isometry(&family, 0).is_ok());
    assert!(matches!(antisym_isometry(&family, 1), Err(AlgebraError::DeterminantNotTrivial(_))));
    assert!(run_suite(&family, Suite::LemRv, &quick(Suite::LemRv)).is_err());
}

#[test]
fn reports_are_reproducible() {
    let family = common::q8_swap_family();
    let cfg = SuiteConfig { seed: 99, ..quick(Suite::Relations) };
    assert_eq!(
        run_suite(&family, Suite::Relations, &cfg).unwrap(),
        run_suite(&family, Suite::Relations, &cfg).unwrap()
    );
}
