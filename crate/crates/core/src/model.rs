//! Circular 0/1 tuples and the dihedral group acting on them.
//!
//! A polygon of perimeter `n` is modelled as a choice of corners among `n`
//! equally spaced points on a circle. Position `i` of a [`CircularTuple`] is
//! the `i`-th point, counted from zero. Group elements act on those
//! zero-based positions directly: `Rotation(q)` sends `i` to `i + q` and
//! `Reflection(q)` sends `i` to `q - i`, both mod `n`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a circular tuple needs n >= 3 positions, got {0}")]
    TooShort(usize),
    #[error("group element acts on {group} points but the tuple has {tuple}")]
    SizeMismatch { group: usize, tuple: usize },
    #[error("invalid character {0:?} in tuple text (expected '0' or '1')")]
    BadCharacter(char),
    #[error("tuple does not describe a polygon: {0}")]
    NotAPolygon(&'static str),
    #[error("invalid side lengths: {0}")]
    InvalidSides(String),
}

/// An `n`-tuple over `{0, 1}` marking polygon corners on the circle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularTuple {
    bits: Vec<bool>,
}

impl CircularTuple {
    pub fn new(bits: Vec<bool>) -> Result<Self, ModelError> {
        if bits.len() < 3 {
            return Err(ModelError::TooShort(bits.len()));
        }
        Ok(CircularTuple { bits })
    }

    pub fn zeros(n: usize) -> Result<Self, ModelError> {
        Self::new(vec![false; n])
    }

    pub fn ones(n: usize) -> Result<Self, ModelError> {
        Self::new(vec![true; n])
    }

    /// Tuple with 1's exactly at the given zero-based positions.
    pub fn from_corners(n: usize, corners: &[usize]) -> Result<Self, ModelError> {
        let mut bits = vec![false; n];
        for &c in corners {
            bits[c % n.max(1)] = true;
        }
        Self::new(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i % self.bits.len()]
    }

    /// Number of 1 entries.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Zero-based positions holding a 1, ascending.
    pub fn corners(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }

    /// Lengths of the maximal circular runs of 0's. A run that crosses the
    /// end of the tuple is merged with the one at the start.
    pub fn zero_blocks(&self) -> Vec<usize> {
        let n = self.bits.len();
        let Some(first_one) = self.bits.iter().position(|&b| b) else {
            return vec![n];
        };
        let mut blocks = Vec::new();
        let mut run = 0;
        // Start scanning just after a 1 so no run is split by the seam.
        for step in 1..=n {
            if self.bits[(first_one + step) % n] {
                if run > 0 {
                    blocks.push(run);
                }
                run = 0;
            } else {
                run += 1;
            }
        }
        blocks
    }

    /// True iff no block of 0's is long enough to force a side of length at
    /// least half the perimeter.
    pub fn is_good(&self) -> bool {
        let threshold = bad_block_threshold(self.len());
        self.zero_blocks().iter().all(|&l| l < threshold)
    }

    /// Side lengths of the polygon with corners at the 1-positions, read from
    /// the smallest corner onwards.
    pub fn to_sides(&self) -> Result<SideLengths, ModelError> {
        if self.weight() < 3 {
            return Err(ModelError::NotAPolygon("fewer than three corners"));
        }
        if !self.is_good() {
            return Err(ModelError::NotAPolygon("a side reaches half the perimeter"));
        }
        let n = self.len();
        let corners = self.corners();
        let sides = corners
            .iter()
            .zip(corners.iter().cycle().skip(1))
            .map(|(&a, &b)| (b + n - a - 1) % n + 1)
            .collect();
        SideLengths::new(n, sides)
    }
}

/// Minimum length of a bad block of 0's for an `n`-tuple: `floor(n/2) - 1`
/// for even `n`, `floor(n/2)` for odd `n`.
pub fn bad_block_threshold(n: usize) -> usize {
    let k = n / 2;
    if n.is_multiple_of(2) {
        k - 1
    } else {
        k
    }
}

impl fmt::Display for CircularTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for CircularTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CircularTuple({self})")
    }
}

impl FromStr for CircularTuple {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ModelError::BadCharacter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(bits)
    }
}

/// Cyclic list of `m >= 3` positive side lengths, each below half the
/// perimeter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SideLengths {
    perimeter: usize,
    sides: Vec<usize>,
}

impl SideLengths {
    pub fn new(perimeter: usize, sides: Vec<usize>) -> Result<Self, ModelError> {
        if sides.len() < 3 {
            return Err(ModelError::InvalidSides(format!(
                "need at least 3 sides, got {}",
                sides.len()
            )));
        }
        if sides.iter().sum::<usize>() != perimeter {
            return Err(ModelError::InvalidSides(format!(
                "sides {sides:?} do not sum to {perimeter}"
            )));
        }
        if let Some(&s) = sides.iter().find(|&&s| s == 0 || 2 * s >= perimeter) {
            return Err(ModelError::InvalidSides(format!(
                "side {s} is not in 1..{perimeter}/2"
            )));
        }
        Ok(SideLengths { perimeter, sides })
    }

    pub fn perimeter(&self) -> usize {
        self.perimeter
    }

    pub fn sides(&self) -> &[usize] {
        &self.sides
    }

    pub fn m(&self) -> usize {
        self.sides.len()
    }

    /// Corner tuple with the first corner at position `start`.
    pub fn to_tuple(&self, start: usize) -> CircularTuple {
        let n = self.perimeter;
        let mut bits = vec![false; n];
        let mut pos = start % n;
        for &s in &self.sides {
            bits[pos] = true;
            pos = (pos + s) % n;
        }
        CircularTuple { bits }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementKind {
    /// `i -> i + q (mod n)`
    Rotation(usize),
    /// `i -> q - i (mod n)`
    Reflection(usize),
}

/// An element of the dihedral group `D_n` acting on `n` circle positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    n: usize,
    kind: ElementKind,
}

impl GroupElement {
    pub fn rotation(n: usize, q: usize) -> Self {
        assert!(n > 0, "group on zero points");
        GroupElement {
            n,
            kind: ElementKind::Rotation(q % n),
        }
    }

    pub fn reflection(n: usize, q: usize) -> Self {
        assert!(n > 0, "group on zero points");
        GroupElement {
            n,
            kind: ElementKind::Reflection(q % n),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::rotation(n, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ElementKind {
        self.kind
    }

    pub fn is_rotation(&self) -> bool {
        matches!(self.kind, ElementKind::Rotation(_))
    }

    /// Image of position `x`.
    pub fn image(&self, x: usize) -> usize {
        let n = self.n;
        let x = x % n;
        match self.kind {
            ElementKind::Rotation(q) => (x + q) % n,
            ElementKind::Reflection(q) => (q + n - x) % n,
        }
    }

    pub fn inverse(&self) -> Self {
        match self.kind {
            ElementKind::Rotation(q) => Self::rotation(self.n, self.n - q),
            ElementKind::Reflection(_) => *self,
        }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &GroupElement) -> Self {
        assert_eq!(self.n, other.n, "composing elements of different groups");
        let n = self.n;
        match (self.kind, other.kind) {
            (ElementKind::Rotation(a), ElementKind::Rotation(b)) => Self::rotation(n, a + b),
            (ElementKind::Rotation(a), ElementKind::Reflection(b)) => Self::reflection(n, a + b),
            (ElementKind::Reflection(a), ElementKind::Rotation(b)) => {
                Self::reflection(n, a + n - b)
            }
            (ElementKind::Reflection(a), ElementKind::Reflection(b)) => {
                Self::rotation(n, a + n - b)
            }
        }
    }

    /// The permuted tuple: position `x` of the result holds position
    /// `σ⁻¹(x)` of `a`.
    pub fn apply(&self, a: &CircularTuple) -> Result<CircularTuple, ModelError> {
        if a.len() != self.n {
            return Err(ModelError::SizeMismatch {
                group: self.n,
                tuple: a.len(),
            });
        }
        let mut bits = vec![false; self.n];
        for (x, &b) in a.bits.iter().enumerate() {
            bits[self.image(x)] = b;
        }
        Ok(CircularTuple { bits })
    }

    /// Least `d >= 1` with `σ^d = id`.
    pub fn order(&self) -> usize {
        match self.kind {
            ElementKind::Rotation(q) => self.n / self.n.gcd(&q),
            ElementKind::Reflection(_) => {
                if self.n == 1 {
                    1
                } else {
                    2
                }
            }
        }
    }

    pub fn classify(&self) -> ElementClass {
        match self.kind {
            ElementKind::Rotation(0) => ElementClass::Identity,
            ElementKind::Rotation(_) => ElementClass::RotationOfOrder(self.order()),
            ElementKind::Reflection(q) => {
                if self.n % 2 == 1 {
                    ElementClass::ReflectionOdd
                } else if q % 2 == 0 {
                    // 2x ≡ q (mod n) is solvable exactly when q is even
                    ElementClass::ReflectionEvenTwoFixedPoints
                } else {
                    ElementClass::ReflectionEvenNoFixedPoint
                }
            }
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ElementKind::Rotation(q) => write!(f, "rot({q}) in D_{}", self.n),
            ElementKind::Reflection(q) => write!(f, "ref({q}) in D_{}", self.n),
        }
    }
}

/// Every element of `D_n`: the `n` rotations followed by the `n` reflections.
pub fn dihedral_group(n: usize) -> impl Iterator<Item = GroupElement> {
    (0..n)
        .map(move |q| GroupElement::rotation(n, q))
        .chain((0..n).map(move |q| GroupElement::reflection(n, q)))
}

/// The `n` rotations of `C_n`.
pub fn cyclic_group(n: usize) -> impl Iterator<Item = GroupElement> {
    (0..n).map(move |q| GroupElement::rotation(n, q))
}

/// Which group acts on the tuples: full dihedral symmetry (rotations and
/// reversals of the side list) or rotations only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Dihedral,
    Cyclic,
}

impl Symmetry {
    pub fn elements(self, n: usize) -> Vec<GroupElement> {
        match self {
            Symmetry::Dihedral => dihedral_group(n).collect(),
            Symmetry::Cyclic => cyclic_group(n).collect(),
        }
    }

    pub fn group_order(self, n: usize) -> usize {
        match self {
            Symmetry::Dihedral => 2 * n,
            Symmetry::Cyclic => n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Dihedral => "dihedral",
            Symmetry::Cyclic => "cyclic",
        }
    }
}

/// Classes of `D_n` elements that share a fix-set size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementClass {
    Identity,
    /// Non-identity rotation of order `d`, with `d | n`.
    RotationOfOrder(usize),
    /// Any reflection when `n` is odd (one fixed point).
    ReflectionOdd,
    /// Reflection without fixed points, `n` even.
    ReflectionEvenNoFixedPoint,
    /// Reflection with two fixed points, `n` even.
    ReflectionEvenTwoFixedPoints,
}

impl ElementClass {
    /// Whether the class can occur in `D_n`.
    pub fn is_valid_for(&self, n: usize) -> bool {
        match *self {
            ElementClass::Identity => n >= 1,
            ElementClass::RotationOfOrder(d) => d > 1 && n.is_multiple_of(d),
            ElementClass::ReflectionOdd => n % 2 == 1,
            ElementClass::ReflectionEvenNoFixedPoint
            | ElementClass::ReflectionEvenTwoFixedPoints => n.is_multiple_of(2),
        }
    }

    /// All classes present in `D_n` paired with their sizes.
    pub fn census(n: usize) -> Vec<(ElementClass, u64)> {
        let mut classes = vec![(ElementClass::Identity, 1)];
        let divisors = crate::numtheory::divisors(n as u64).expect("n >= 1");
        for d in divisors.into_iter().skip(1) {
            let phi = crate::numtheory::totient(d).expect("d >= 1");
            classes.push((ElementClass::RotationOfOrder(d as usize), phi));
        }
        if n % 2 == 1 {
            classes.push((ElementClass::ReflectionOdd, n as u64));
        } else {
            classes.push((ElementClass::ReflectionEvenNoFixedPoint, n as u64 / 2));
            classes.push((ElementClass::ReflectionEvenTwoFixedPoints, n as u64 / 2));
        }
        classes
    }
}

impl fmt::Display for ElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementClass::Identity => f.write_str("identity"),
            ElementClass::RotationOfOrder(d) => write!(f, "rotation of order {d}"),
            ElementClass::ReflectionOdd => f.write_str("reflection (odd n)"),
            ElementClass::ReflectionEvenNoFixedPoint => {
                f.write_str("reflection (even n, no fixed point)")
            }
            ElementClass::ReflectionEvenTwoFixedPoints => {
                f.write_str("reflection (even n, two fixed points)")
            }
        }
    }
}
