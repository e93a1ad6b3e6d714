//! Brute-force ground truth by exhaustive enumeration of `n`-tuples.
//!
//! Nothing here uses the closed forms. Tuples are packed into a `u32` with
//! position 0 in the most significant of the low `n` bits, so numeric order
//! on words is lexicographic order on tuples. Goodness is decided from the
//! gaps between consecutive corners rather than from runs of 0's, giving an
//! independent check on [`CircularTuple::is_good`].

use rayon::prelude::*;
use thiserror::Error;

use crate::model::{CircularTuple, ElementKind, GroupElement, Symmetry};
use crate::numtheory::Count;

/// Largest perimeter the oracle will enumerate.
pub const ORACLE_MAX_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle handles 3 <= n <= {max}, got n = {n}")]
    OutOfRange { n: usize, max: usize },
    #[error("weight filter m = {m} is outside 3..={n}")]
    WeightOutOfRange { n: usize, m: usize },
    #[error("group element acts on {group} points, expected {n}")]
    SizeMismatch { group: usize, n: usize },
}

fn check_n(n: usize) -> Result<(), OracleError> {
    if (3..=ORACLE_MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(OracleError::OutOfRange {
            n,
            max: ORACLE_MAX_N,
        })
    }
}

fn check_weight(n: usize, weight: Option<usize>) -> Result<(), OracleError> {
    match weight {
        Some(m) if !(3..=n).contains(&m) => Err(OracleError::WeightOutOfRange { n, m }),
        _ => Ok(()),
    }
}

/// Which tuples a direct fix count ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TupleSet {
    Good,
    Bad,
    All,
}

/// Lexicographically least member of a tuple's orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(CircularTuple);

impl CanonicalForm {
    pub fn tuple(&self) -> &CircularTuple {
        &self.0
    }

    pub fn into_tuple(self) -> CircularTuple {
        self.0
    }
}

pub fn pack(a: &CircularTuple) -> u32 {
    a.bits().iter().fold(0u32, |w, &b| (w << 1) | b as u32)
}

pub fn unpack(word: u32, n: usize) -> CircularTuple {
    let bits = (0..n).map(|x| word >> (n - 1 - x) & 1 == 1).collect();
    CircularTuple::new(bits).expect("n >= 3")
}

fn mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Rotation by `q`: position `x` of the result is position `x - q` of `w`.
fn rotate(w: u32, q: usize, n: usize) -> u32 {
    let q = q % n;
    if q == 0 {
        w
    } else {
        ((w >> q) | (w << (n - q))) & mask(n)
    }
}

/// Position `x` of the result is position `n - 1 - x` of `w`.
fn reverse(w: u32, n: usize) -> u32 {
    w.reverse_bits() >> (32 - n)
}

fn act(sigma: &GroupElement, w: u32, n: usize) -> u32 {
    match sigma.kind() {
        ElementKind::Rotation(q) => rotate(w, q, n),
        ElementKind::Reflection(q) => rotate(reverse(w, n), q + 1, n),
    }
}

/// True iff `w` has at least three corners and every gap between cyclically
/// consecutive corners is shorter than half the perimeter.
fn good_by_gaps(w: u32, n: usize) -> bool {
    if w.count_ones() < 3 {
        return false;
    }
    // corner positions are n - 1 - bit; walk the set bits from high to low
    let mut rest = w;
    let first = n - 1 - (31 - rest.leading_zeros() as usize);
    let mut prev = first;
    rest &= !(1u32 << (n - 1 - first));
    while rest != 0 {
        let pos = n - 1 - (31 - rest.leading_zeros() as usize);
        if 2 * (pos - prev) >= n {
            return false;
        }
        rest &= !(1u32 << (n - 1 - pos));
        prev = pos;
    }
    2 * (first + n - prev) < n
}

fn is_canonical(w: u32, n: usize, symmetry: Symmetry) -> bool {
    let mut r = w;
    for _ in 1..n {
        r = rotate(r, 1, n);
        if r < w {
            return false;
        }
    }
    if symmetry == Symmetry::Dihedral {
        let mut r = reverse(w, n);
        for _ in 0..n {
            if r < w {
                return false;
            }
            r = rotate(r, 1, n);
        }
    }
    true
}

fn canonical_word(w: u32, n: usize, symmetry: Symmetry) -> u32 {
    let mut best = w;
    let mut r = w;
    for _ in 1..n {
        r = rotate(r, 1, n);
        best = best.min(r);
    }
    if symmetry == Symmetry::Dihedral {
        let mut r = reverse(w, n);
        for _ in 0..n {
            best = best.min(r);
            r = rotate(r, 1, n);
        }
    }
    best
}

/// Oracle goodness test for a single tuple.
pub fn is_good_by_gaps(a: &CircularTuple) -> bool {
    a.len() <= 32 && good_by_gaps(pack(a), a.len())
}

/// Least element of the orbit of `a` under the chosen group.
pub fn canonical_form(a: &CircularTuple, symmetry: Symmetry) -> Result<CanonicalForm, OracleError> {
    let n = a.len();
    check_n(n)?;
    Ok(CanonicalForm(unpack(
        canonical_word(pack(a), n, symmetry),
        n,
    )))
}

/// Orbit counts over good `n`-tuples, in total and split by weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCensus {
    pub n: usize,
    pub symmetry: Symmetry,
    /// `by_weight[m]` is the number of orbits of good tuples with `m` corners.
    pub by_weight: Vec<u64>,
}

impl OrbitCensus {
    pub fn total(&self) -> u64 {
        self.by_weight.iter().sum()
    }

    pub fn weight(&self, m: usize) -> u64 {
        self.by_weight.get(m).copied().unwrap_or(0)
    }
}

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
    a
}

/// Counts orbits of good tuples by counting orbit representatives: each
/// orbit has exactly one member equal to its own canonical form.
pub fn orbit_census(n: usize, symmetry: Symmetry) -> Result<OrbitCensus, OracleError> {
    check_n(n)?;
    let by_weight = (0..1u32 << n)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut acc, w| {
                if good_by_gaps(w, n) && is_canonical(w, n, symmetry) {
                    acc[w.count_ones() as usize] += 1;
                }
                acc
            },
        )
        .reduce(|| vec![0u64; n + 1], merge);
    Ok(OrbitCensus {
        n,
        symmetry,
        by_weight,
    })
}

/// Number of orbits of good tuples, optionally restricted to weight `m`.
pub fn orbit_count(
    n: usize,
    symmetry: Symmetry,
    weight: Option<usize>,
) -> Result<Count, OracleError> {
    check_n(n)?;
    check_weight(n, weight)?;
    let census = orbit_census(n, symmetry)?;
    Ok(Count::from(match weight {
        Some(m) => census.weight(m),
        None => census.total(),
    }))
}

/// Sizes of the fix set of one group element, split by goodness and weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixProfile {
    pub sigma: GroupElement,
    pub good_by_weight: Vec<u64>,
    pub bad_by_weight: Vec<u64>,
    pub all_by_weight: Vec<u64>,
}

impl FixProfile {
    pub fn count(&self, set: TupleSet, weight: Option<usize>) -> u64 {
        let column = match set {
            TupleSet::Good => &self.good_by_weight,
            TupleSet::Bad => &self.bad_by_weight,
            TupleSet::All => &self.all_by_weight,
        };
        match weight {
            Some(m) => column.get(m).copied().unwrap_or(0),
            None => column.iter().sum(),
        }
    }
}

/// Scans every `n`-tuple once and tallies the ones fixed by `sigma`.
pub fn fix_profile(sigma: &GroupElement) -> Result<FixProfile, OracleError> {
    let n = sigma.n();
    check_n(n)?;
    let zero = || [vec![0u64; n + 1], vec![0u64; n + 1], vec![0u64; n + 1]];
    let [good, bad, all] = (0..1u32 << n)
        .into_par_iter()
        .fold(zero, |mut acc, w| {
            if act(sigma, w, n) == w {
                let m = w.count_ones() as usize;
                acc[2][m] += 1;
                if good_by_gaps(w, n) {
                    acc[0][m] += 1;
                } else {
                    acc[1][m] += 1;
                }
            }
            acc
        })
        .reduce(zero, |a, b| {
            let [a0, a1, a2] = a;
            let [b0, b1, b2] = b;
            [merge(a0, b0), merge(a1, b1), merge(a2, b2)]
        });
    Ok(FixProfile {
        sigma: *sigma,
        good_by_weight: good,
        bad_by_weight: bad,
        all_by_weight: all,
    })
}

/// `|{a in set : σ·a = a}|`, optionally restricted to weight `m`, by
/// exhaustive scan.
pub fn fix_count_direct(
    n: usize,
    sigma: &GroupElement,
    set: TupleSet,
    weight: Option<usize>,
) -> Result<Count, OracleError> {
    check_n(n)?;
    if sigma.n() != n {
        return Err(OracleError::SizeMismatch {
            group: sigma.n(),
            n,
        });
    }
    check_weight(n, weight)?;
    Ok(Count::from(fix_profile(sigma)?.count(set, weight)))
}
