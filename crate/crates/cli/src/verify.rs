//! Cross-checks between the closed forms, the Burnside assembly and the
//! exhaustive oracle, over every perimeter up to a bound.

use polycensus::census::{self, CensusError};
use polycensus::fixcount::{self, FixCountError};
use polycensus::model::{self, GroupElement};
use polycensus::oracle::{self, TupleSet};
use polycensus::{CircularTuple, Count, ElementClass, Symmetry};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::CliError;

pub const VERIFY_SCHEMA: &str = "polycensus.verify/1";
pub const DEFAULT_SEED: u64 = 0x5eed_2017;
const PROBES_PER_N: usize = 64;

/// The formulas under test. The verifier only ever reaches them through
/// this trait, so a test fixture can swap in a deliberately wrong one.
pub trait Formulas: Sync {
    fn fix_polygons(&self, n: u64, class: ElementClass) -> Result<Count, FixCountError> {
        fixcount::fix_polygons(n, class)
    }
    fn fix_mgons(&self, n: u64, m: u64, class: ElementClass) -> Result<Count, FixCountError> {
        fixcount::fix_mgons(n, m, class)
    }
    fn count_polygons(&self, n: u64) -> Result<Count, CensusError> {
        census::count_polygons(n)
    }
    fn count_mgons(&self, n: u64, m: u64) -> Count {
        census::count_mgons(n, m)
    }
    fn count_polygons_cyclic(&self, n: u64) -> Result<Count, CensusError> {
        census::count_polygons_cyclic(n)
    }
    fn count_mgons_cyclic(&self, n: u64, m: u64) -> Count {
        census::count_mgons_cyclic(n, m)
    }
}

/// The library as shipped.
pub struct ClosedForms;

impl Formulas for ClosedForms {}

/// Adds one to the closed-form `p(m, n)` at a single point.
pub struct Perturbed {
    pub n: u64,
    pub m: u64,
}

impl Formulas for Perturbed {
    fn count_mgons(&self, n: u64, m: u64) -> Count {
        let value = census::count_mgons(n, m);
        if (n, m) == (self.n, self.m) {
            value + Count::from(1u32)
        } else {
            value
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    /// e.g. `closed-form/oracle`, or `fix-formula/oracle` with the element
    pub pair: String,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub max_n: u64,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.agree)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn summary(&self) -> String {
        match self.first_failure() {
            None => format!(
                "ok: {} checks agree for n = 3..={} (seed {})",
                self.checks.len(),
                self.max_n,
                self.seed
            ),
            Some(c) => {
                let m = c.m.map(|m| format!(", m = {m}")).unwrap_or_default();
                let detail = c.detail.as_deref().unwrap_or("");
                format!("FAIL: n = {}{m}, {}: {detail}", c.n, c.pair)
            }
        }
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn compare(&mut self, n: u64, m: Option<u64>, pair: impl Into<String>, a: &Count, b: &Count) {
        let agree = a == b;
        self.checks.push(Check {
            n,
            m,
            pair: pair.into(),
            agree,
            detail: (!agree).then(|| format!("{a} != {b}")),
        });
    }

    fn assert(&mut self, n: u64, m: Option<u64>, pair: impl Into<String>, ok: bool, why: String) {
        self.checks.push(Check {
            n,
            m,
            pair: pair.into(),
            agree: ok,
            detail: (!ok).then_some(why),
        });
    }
}

pub fn run(max_n: u64, seed: u64) -> Result<VerifyReport, CliError> {
    run_with(&ClosedForms, max_n, seed)
}

pub fn run_with<F: Formulas>(
    formulas: &F,
    max_n: u64,
    seed: u64,
) -> Result<VerifyReport, CliError> {
    if !(3..=oracle::ORACLE_MAX_N as u64).contains(&max_n) {
        return Err(CliError::Usage(format!(
            "--max-n must lie in 3..={} (the exhaustive oracle bound), got {max_n}",
            oracle::ORACLE_MAX_N
        )));
    }
    let mut rec = Recorder { checks: Vec::new() };
    let mut rng = StdRng::seed_from_u64(seed);
    for n in 3..=max_n {
        check_fix_sets(formulas, n, &mut rec)?;
        check_orbits(formulas, n, Symmetry::Dihedral, &mut rec)?;
        check_orbits(formulas, n, Symmetry::Cyclic, &mut rec)?;
        probe_action(n as usize, &mut rng, &mut rec)?;
    }
    let passed = rec.checks.iter().all(|c| c.agree);
    Ok(VerifyReport {
        schema: VERIFY_SCHEMA,
        max_n,
        seed,
        passed,
        checks: rec.checks,
    })
}

/// Fix formulas against a direct scan for every element, plus the
/// Good = All - Bad split of each scan.
fn check_fix_sets<F: Formulas>(f: &F, n: u64, rec: &mut Recorder) -> Result<(), CliError> {
    let nu = n as usize;
    for sigma in model::dihedral_group(nu) {
        let class = sigma.classify();
        let profile = oracle::fix_profile(&sigma)?;
        let pair = format!("fix-formula/oracle [{sigma}, {class}]");
        let direct = Count::from(profile.count(TupleSet::Good, None));
        rec.compare(n, None, pair.clone(), &f.fix_polygons(n, class)?, &direct);
        for m in 3..=n {
            let direct = Count::from(profile.count(TupleSet::Good, Some(m as usize)));
            rec.compare(
                n,
                Some(m),
                pair.clone(),
                &f.fix_mgons(n, m, class)?,
                &direct,
            );
        }
        let split = (0..=nu).all(|m| {
            profile.count(TupleSet::Good, Some(m)) + profile.count(TupleSet::Bad, Some(m))
                == profile.count(TupleSet::All, Some(m))
        });
        rec.assert(
            n,
            None,
            format!("good+bad/all [{sigma}]"),
            split,
            "split mismatch".into(),
        );
    }
    Ok(())
}

fn burnside<F: Formulas>(
    f: &F,
    n: u64,
    m: Option<u64>,
    symmetry: Symmetry,
    rec: &mut Recorder,
) -> Result<Count, CliError> {
    let mut sum = Count::zero();
    for sigma in symmetry.elements(n as usize) {
        let class = sigma.classify();
        let fix = match m {
            Some(m) => f.fix_mgons(n, m, class)?,
            None => f.fix_polygons(n, class)?,
        };
        sum += &fix;
    }
    let order = symmetry.group_order(n as usize) as u64;
    let sum = sum.into_biguint();
    let divisible = (&sum % order) == 0u32.into();
    rec.assert(
        n,
        m,
        format!("burnside-divisibility [{}]", symmetry.name()),
        divisible,
        format!("fix sum {sum} not divisible by {order}"),
    );
    Ok(Count::from(sum / order))
}

/// Closed form, Burnside assembly and orbit enumeration, pairwise.
fn check_orbits<F: Formulas>(
    f: &F,
    n: u64,
    symmetry: Symmetry,
    rec: &mut Recorder,
) -> Result<(), CliError> {
    let census = oracle::orbit_census(n as usize, symmetry)?;
    let name = symmetry.name();
    let cyclic = symmetry == Symmetry::Cyclic;
    let closed = if cyclic {
        f.count_polygons_cyclic(n)?
    } else {
        f.count_polygons(n)?
    };
    let assembled = burnside(f, n, None, symmetry, rec)?;
    let enumerated = Count::from(census.total());
    rec.compare(
        n,
        None,
        format!("closed-form/oracle [{name}]"),
        &closed,
        &enumerated,
    );
    rec.compare(
        n,
        None,
        format!("burnside/oracle [{name}]"),
        &assembled,
        &enumerated,
    );
    for m in 3..=n {
        let closed = if cyclic {
            f.count_mgons_cyclic(n, m)
        } else {
            f.count_mgons(n, m)
        };
        let assembled = burnside(f, n, Some(m), symmetry, rec)?;
        let enumerated = Count::from(census.weight(m as usize));
        rec.compare(
            n,
            Some(m),
            format!("closed-form/oracle [{name}]"),
            &closed,
            &enumerated,
        );
        rec.compare(
            n,
            Some(m),
            format!("burnside/oracle [{name}]"),
            &assembled,
            &enumerated,
        );
    }
    Ok(())
}

fn random_tuple(n: usize, rng: &mut StdRng) -> CircularTuple {
    CircularTuple::new((0..n).map(|_| rng.gen()).collect()).expect("n >= 3")
}

fn random_element(n: usize, rng: &mut StdRng) -> GroupElement {
    let q = rng.gen_range(0..n);
    if rng.gen() {
        GroupElement::rotation(n, q)
    } else {
        GroupElement::reflection(n, q)
    }
}

/// Seeded probes of the action law `(στ)·a = σ·(τ·a)` and of canonical
/// forms being constant on orbits.
fn probe_action(n: usize, rng: &mut StdRng, rec: &mut Recorder) -> Result<(), CliError> {
    let mut law = true;
    let mut canonical = true;
    let mut witness = String::new();
    for _ in 0..PROBES_PER_N {
        let a = random_tuple(n, rng);
        let sigma = random_element(n, rng);
        let tau = random_element(n, rng);
        let lhs = sigma.compose(&tau).apply(&a)?;
        let rhs = sigma.apply(&tau.apply(&a)?)?;
        if law && lhs != rhs {
            law = false;
            witness = format!("{sigma} * {tau} on {a}");
        }
        for symmetry in [Symmetry::Dihedral, Symmetry::Cyclic] {
            if symmetry == Symmetry::Cyclic && !sigma.is_rotation() {
                continue;
            }
            let moved = sigma.apply(&a)?;
            if oracle::canonical_form(&a, symmetry)? != oracle::canonical_form(&moved, symmetry)? {
                canonical = false;
                witness = format!("{a} and {moved} under {}", symmetry.name());
            }
        }
    }
    rec.assert(n as u64, None, "action-law probe", law, witness.clone());
    rec.assert(n as u64, None, "canonical-form probe", canonical, witness);
    Ok(())
}
