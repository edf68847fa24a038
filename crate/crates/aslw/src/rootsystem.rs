//! Untwisted affine root systems in the extended simple-root basis.
//!
//! An [`AffineSystem`] bundles a finite Cartan matrix of classical type
//! `A`–`G` (standard affine-table numbering), the classical positive roots
//! computed by root-string closure, the highest root `θ`, the null degree
//! `δ = α_0 + θ`, and a total order on the extended alphabet `{0, 1, …, n}`
//! that identifies letter `i` with the simple root `α_i` (letter `0` with the
//! affine node `α_0`).
//!
//! Degrees of affine roots are [`DegreeVector`]s over `(α_0, α_1, …, α_n)`.
//! The positive roots of the untwisted affine system are
//! `{β + kδ : β ∈ Δ⁺, k ≥ 0} ∪ {−β + kδ : β ∈ Δ⁺, k ≥ 1}` (real) together
//! with `{kδ : k ≥ 1}` (imaginary, each carrying `n` independent
//! directions — see [`ExtRoot::Imaginary`]).
//!
//! ```
//! use aslw::rootsystem::{AffineSystem, DegreeVector, RootClass};
//!
//! let sys = AffineSystem::from_descriptor("G2:0,1,2")?;
//! assert_eq!(sys.delta(), &DegreeVector(vec![1, 2, 3]));
//! // δ − α_1 is a (positive) real root, 2δ is imaginary, 2α_0 is no root.
//! assert_eq!(sys.classify(&DegreeVector(vec![1, 1, 3])), RootClass::Real);
//! assert_eq!(sys.classify(&DegreeVector(vec![2, 4, 6])), RootClass::Imaginary(2));
//! assert_eq!(sys.classify(&DegreeVector(vec![2, 0, 0])), RootClass::NotRoot);
//! # Ok::<(), aslw::rootsystem::RootSystemError>(())
//! ```

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num::rational::Rational64;
use num::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{AlphabetOrder, Word, WordError};

/// Errors produced by root-system construction and degree parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    /// The type letter is not one of `A`–`G`.
    #[error("unknown system type `{0}`")]
    UnknownType(String),
    /// The rank is not admissible for the type.
    #[error("type {kind} does not admit rank {rank}")]
    InvalidRank {
        /// Type letter.
        kind: char,
        /// Rejected rank.
        rank: usize,
    },
    /// A descriptor string could not be parsed.
    #[error("cannot parse `{0}` as a system descriptor (expected e.g. `G2:1,2,0`)")]
    Descriptor(String),
    /// The alphabet order does not list `0..=rank` exactly once each.
    #[error("alphabet order must be a permutation of 0..={rank}")]
    InvalidOrder {
        /// Classical rank of the system.
        rank: usize,
    },
    /// A degree-vector string could not be parsed.
    #[error("cannot parse `{0}` as a degree vector")]
    DegreeParse(String),
}

/// A degree in the affine root lattice: integer coordinates over
/// `(α_0, α_1, …, α_n)`.
///
/// The derived order is lexicographic on coordinates and is used only for
/// deterministic bookkeeping, never for root-theoretic comparisons.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(pub Vec<i64>);

impl DegreeVector {
    /// The zero degree with `len` coordinates.
    pub fn zero(len: usize) -> Self {
        Self(vec![0; len])
    }

    /// Number of coordinates (`rank + 1` when attached to a system).
    #[allow(clippy::len_without_is_empty)] // vectors always have rank+1 entries
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether all coordinates vanish.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Coordinate sum (the height of the degree).
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise sum.
    ///
    /// # Panics
    /// Panics when the lengths differ.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "degree length mismatch");
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, or `None` if any coordinate would become
    /// negative.
    ///
    /// # Panics
    /// Panics when the lengths differ.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.len(), other.len(), "degree length mismatch");
        let diff: Vec<i64> = self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect();
        if diff.iter().any(|&x| x < 0) {
            None
        } else {
            Some(Self(diff))
        }
    }

    /// The scalar multiple `k · self`.
    pub fn scaled(&self, k: i64) -> Self {
        Self(self.0.iter().map(|&x| k * x).collect())
    }

    /// Whether `self ≤ other` componentwise.
    ///
    /// # Panics
    /// Panics when the lengths differ.
    pub fn le_componentwise(&self, other: &Self) -> bool {
        assert_eq!(self.len(), other.len(), "degree length mismatch");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Parses the comma-separated coordinate form, e.g. `"1,2,3"`.
    pub fn parse(s: &str) -> Result<Self, RootSystemError> {
        let coords: Result<Vec<i64>, _> =
            s.split(',').map(|part| part.trim().parse::<i64>()).collect();
        match coords {
            Ok(v) if !v.is_empty() => Ok(Self(v)),
            _ => Err(RootSystemError::DegreeParse(s.to_string())),
        }
    }
}

impl fmt::Display for DegreeVector {
    /// Comma-separated coordinates over `(α_0, …, α_n)`, e.g. `"1,2,3"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", coords.join(","))
    }
}

impl FromStr for DegreeVector {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Classification of a degree vector within the positive affine roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootClass {
    /// A positive real root `±β + kδ`.
    Real,
    /// The imaginary degree `kδ` with the recorded `k ≥ 1`.
    Imaginary(i64),
    /// Not a positive affine root.
    NotRoot,
}

/// A positive affine root in the extended sense: real roots are their degree,
/// imaginary degrees `kδ` split into `rank` slots (one per independent
/// direction, numbered from 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtRoot {
    /// A real root, stored as its degree vector.
    Real(DegreeVector),
    /// The `slot`-th copy of the imaginary degree `kδ`.
    Imaginary {
        /// Multiple of `δ` (at least 1).
        k: i64,
        /// Direction slot, `1..=rank`.
        slot: usize,
    },
}

impl ExtRoot {
    /// The underlying degree vector (`kδ` for imaginary roots).
    pub fn degree(&self, sys: &AffineSystem) -> DegreeVector {
        match self {
            ExtRoot::Real(v) => v.clone(),
            ExtRoot::Imaginary { k, .. } => sys.delta().scaled(*k),
        }
    }

    /// Whether this is an imaginary slot.
    pub fn is_imaginary(&self) -> bool {
        matches!(self, ExtRoot::Imaginary { .. })
    }
}

/// An untwisted affine root system together with an alphabet order.
#[derive(Debug, Clone)]
pub struct AffineSystem {
    kind: char,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    root_set: HashSet<Vec<i64>>,
    theta: Vec<i64>,
    delta: DegreeVector,
    order: AlphabetOrder,
}

/// The Cartan matrix of a simply laced diagram given by its edge list.
fn simply_laced(rank: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in edges {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    a
}

fn chain_edges(rank: usize) -> Vec<(usize, usize)> {
    (0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect()
}

fn cartan_matrix(kind: char, rank: usize) -> Result<Vec<Vec<i64>>, RootSystemError> {
    let bad = RootSystemError::InvalidRank { kind, rank };
    Ok(match kind {
        'A' if rank >= 1 => simply_laced(rank, &chain_edges(rank)),
        'B' if rank >= 2 => {
            // α_n is the short end: ⟨α_{n−1}, α_n^∨⟩ = −2.
            let mut a = simply_laced(rank, &chain_edges(rank));
            a[rank - 1][rank - 2] = -2;
            a
        }
        'C' if rank >= 2 => {
            // α_n is the long end: ⟨α_n, α_{n−1}^∨⟩ = −2.
            let mut a = simply_laced(rank, &chain_edges(rank));
            a[rank - 2][rank - 1] = -2;
            a
        }
        'D' if rank >= 3 => {
            // Chain on α_1 … α_{n−1} with α_n attached to α_{n−2}.
            let mut edges = chain_edges(rank - 1);
            edges.push((rank - 3, rank - 1));
            simply_laced(rank, &edges)
        }
        'E' if (6..=8).contains(&rank) => {
            // Chain on α_1 … α_{n−1} with α_n attached to the branch node.
            let branch = match rank {
                6 => 2,
                7 => 2,
                _ => 4,
            };
            let mut edges = chain_edges(rank - 1);
            edges.push((branch, rank - 1));
            simply_laced(rank, &edges)
        }
        'F' if rank == 4 => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ],
        'G' if rank == 2 => vec![vec![2, -1], vec![-3, 2]],
        'A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G' => return Err(bad),
        _ => return Err(RootSystemError::UnknownType(kind.to_string())),
    })
}

/// Symmetrizing weights `d_i = (α_i, α_i)/2` (short roots have squared
/// length 2).
fn symmetrizer(kind: char, rank: usize) -> Vec<i64> {
    match kind {
        'B' => {
            let mut d = vec![2; rank];
            d[rank - 1] = 1;
            d
        }
        'C' => {
            let mut d = vec![1; rank];
            d[rank - 1] = 2;
            d
        }
        'F' => vec![2, 2, 1, 1],
        'G' => vec![3, 1],
        _ => vec![1; rank],
    }
}

/// All classical positive roots by root-string closure, sorted by height and
/// then lexicographically.
fn positive_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        })
        .collect();
    seen.extend(layer.iter().cloned());
    let mut all: Vec<Vec<i64>> = Vec::new();
    while !layer.is_empty() {
        all.extend(layer.iter().cloned());
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                // Walk down the α_i-string through β to find p, then use
                // q = p − ⟨β, α_i^∨⟩ to decide whether β + α_i is a root.
                let mut p = 0i64;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if down[i] >= 0 && seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !seen.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        seen.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    all.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    all
}

impl AffineSystem {
    /// Builds the system of the given type and rank with an explicit order on
    /// the extended alphabet `{0, …, rank}`.
    pub fn new(kind: char, rank: usize, order: AlphabetOrder) -> Result<Self, RootSystemError> {
        let kind = kind.to_ascii_uppercase();
        let cartan = cartan_matrix(kind, rank)?;
        let sym = symmetrizer(kind, rank);
        for i in 0..rank {
            for j in 0..rank {
                debug_assert_eq!(
                    sym[i] * cartan[i][j],
                    sym[j] * cartan[j][i],
                    "symmetrizer must symmetrize the Cartan matrix",
                );
            }
        }
        if order.size() != rank + 1 {
            return Err(RootSystemError::InvalidOrder { rank });
        }
        let positive_roots = positive_closure(&cartan);
        let theta = positive_roots.last().expect("at least one simple root").clone();
        debug_assert!(
            positive_roots.len() < 2
                || positive_roots[positive_roots.len() - 2].iter().sum::<i64>()
                    < theta.iter().sum::<i64>(),
            "the highest root must be unique",
        );
        let mut delta = vec![1i64];
        delta.extend_from_slice(&theta);
        let root_set: HashSet<Vec<i64>> = positive_roots
            .iter()
            .cloned()
            .chain(positive_roots.iter().map(|r| r.iter().map(|&x| -x).collect()))
            .collect();
        Ok(Self {
            kind,
            rank,
            cartan,
            sym,
            positive_roots,
            root_set,
            theta,
            delta: DegreeVector(delta),
            order,
        })
    }

    /// Builds the system with the natural order `0 < 1 < … < rank`.
    pub fn with_natural_order(kind: char, rank: usize) -> Result<Self, RootSystemError> {
        Self::new(kind, rank, AlphabetOrder::natural(rank + 1))
    }

    /// Parses a descriptor `"<Type><rank>:<ascending order>"`,
    /// e.g. `"G2:1,2,0"` for type G₂ under the order `1 < 2 < 0`.
    pub fn from_descriptor(desc: &str) -> Result<Self, RootSystemError> {
        let err = || RootSystemError::Descriptor(desc.to_string());
        let (head, tail) = desc.split_once(':').ok_or_else(err)?;
        let head = head.trim();
        let mut chars = head.chars();
        let kind = chars.next().ok_or_else(err)?;
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        let ids: Result<Vec<u8>, _> =
            tail.split(',').map(|part| part.trim().parse::<u8>()).collect();
        let ids = ids.map_err(|_| err())?;
        let order = AlphabetOrder::from_ascending(&ids)
            .map_err(|_| RootSystemError::InvalidOrder { rank })?;
        Self::new(kind, rank, order)
    }

    /// The descriptor `"<Type><rank>:<ascending order>"` of this system.
    pub fn descriptor(&self) -> String {
        format!("{}{}:{}", self.kind, self.rank, self.order.descriptor())
    }

    /// The same system under a different alphabet order.
    pub fn with_order(&self, order: AlphabetOrder) -> Result<Self, RootSystemError> {
        if order.size() != self.rank + 1 {
            return Err(RootSystemError::InvalidOrder { rank: self.rank });
        }
        let mut sys = self.clone();
        sys.order = order;
        Ok(sys)
    }

    /// Type letter (`'A'`–`'G'`).
    pub fn kind(&self) -> char {
        self.kind
    }

    /// Classical rank `n` (the extended alphabet has `n + 1` letters).
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The alphabet order on `{0, …, rank}`.
    pub fn order(&self) -> &AlphabetOrder {
        &self.order
    }

    /// The classical Cartan matrix, `cartan[i][j] = ⟨α_{j+1}, α_{i+1}^∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrizing weights `d_i = (α_i, α_i)/2`, indexed by `i−1`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    /// Classical positive roots in simple-root coordinates `(α_1, …, α_n)`,
    /// sorted by height then lexicographically; the last entry is `θ`.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// The highest classical root `θ` in coordinates `(α_1, …, α_n)`.
    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    /// The null degree `δ = α_0 + θ`.
    pub fn delta(&self) -> &DegreeVector {
        &self.delta
    }

    /// The height `|δ|` (one more than the height of `θ`).
    pub fn delta_height(&self) -> i64 {
        self.delta.height()
    }

    /// The degree of the simple root `α_i`, `i ∈ {0, …, rank}`.
    pub fn alpha(&self, i: usize) -> DegreeVector {
        assert!(i <= self.rank, "simple-root index out of range");
        let mut v = vec![0i64; self.rank + 1];
        v[i] = 1;
        DegreeVector(v)
    }

    /// The degree of a word: letter `i` contributes `α_i`.
    pub fn word_degree(&self, w: &Word) -> Result<DegreeVector, WordError> {
        Ok(DegreeVector(w.content(self.rank + 1)?))
    }

    /// The degree of the real root `c + kδ` for a signed classical root `c`.
    pub fn real_degree(&self, classical: &[i64], k: i64) -> DegreeVector {
        assert_eq!(classical.len(), self.rank, "classical length mismatch");
        let mut v = vec![k];
        for i in 0..self.rank {
            v.push(k * self.theta[i] + classical[i]);
        }
        DegreeVector(v)
    }

    /// The signed classical projection of a degree: `v − v_0 δ` restricted to
    /// `(α_1, …, α_n)` (the image under `α_0 ↦ −θ`, `α_i ↦ α_i`).
    pub fn classical_part(&self, v: &DegreeVector) -> Vec<i64> {
        assert_eq!(v.len(), self.rank + 1, "degree length mismatch");
        (0..self.rank).map(|i| v.0[i + 1] - v.0[0] * self.theta[i]).collect()
    }

    /// Whether `c` is a (positive or negative) classical root.
    pub fn is_classical_root(&self, c: &[i64]) -> bool {
        self.root_set.contains(c)
    }

    /// Classifies a degree vector within the positive affine roots.
    pub fn classify(&self, v: &DegreeVector) -> RootClass {
        assert_eq!(v.len(), self.rank + 1, "degree length mismatch");
        let k = v.0[0];
        let c = self.classical_part(v);
        if c.iter().all(|&x| x == 0) {
            return if k > 0 { RootClass::Imaginary(k) } else { RootClass::NotRoot };
        }
        if !self.root_set.contains(&c) {
            return RootClass::NotRoot;
        }
        let positive = c.iter().all(|&x| x >= 0);
        if (positive && k >= 0) || (!positive && k >= 1) {
            RootClass::Real
        } else {
            RootClass::NotRoot
        }
    }

    /// Strips as many whole copies of `δ` as fit componentwise:
    /// returns `(v − kδ, k)` with `k = min_i ⌊v_i / δ_i⌋`.
    ///
    /// For a real root this yields its classical-chain representative
    /// (`β` for `β + kδ`, `δ − β` for `−β + (k+1)δ`).
    ///
    /// ```
    /// use aslw::rootsystem::{AffineSystem, DegreeVector};
    ///
    /// let sys = AffineSystem::from_descriptor("G2:0,1,2")?;
    /// // 5δ + α_1 = (5, 11, 15).
    /// let (rep, k) = sys.mod_delta(&DegreeVector(vec![5, 11, 15]));
    /// assert_eq!((rep, k), (DegreeVector(vec![0, 1, 0]), 5));
    /// # Ok::<(), aslw::rootsystem::RootSystemError>(())
    /// ```
    pub fn mod_delta(&self, v: &DegreeVector) -> (DegreeVector, i64) {
        assert_eq!(v.len(), self.rank + 1, "degree length mismatch");
        let k = v
            .0
            .iter()
            .zip(&self.delta.0)
            .map(|(&x, &d)| x.div_euclid(d))
            .min()
            .expect("degrees are nonempty");
        (v.checked_sub(&self.delta.scaled(k)).expect("k is the componentwise minimum"), k)
    }

    /// All unordered pairs of positive affine roots (by degree) summing to
    /// `v`, each pair listed once with the lexicographically smaller degree
    /// first.
    pub fn decompositions(&self, v: &DegreeVector) -> Vec<(DegreeVector, DegreeVector)> {
        assert_eq!(v.len(), self.rank + 1, "degree length mismatch");
        let mut out: BTreeSet<(DegreeVector, DegreeVector)> = BTreeSet::new();
        let mut consider = |g1: DegreeVector, g2: DegreeVector| {
            let pair = if g1 <= g2 { (g1, g2) } else { (g2, g1) };
            out.insert(pair);
        };
        // Real first summands ±β + kδ with the degree bounded by v.
        for beta in &self.positive_roots {
            for sign in [1i64, -1] {
                let c: Vec<i64> = beta.iter().map(|&x| sign * x).collect();
                let kmin = if sign > 0 { 0 } else { 1 };
                let mut kmax = v.0[0];
                for i in 0..self.rank {
                    kmax = kmax.min((v.0[i + 1] - c[i]).div_euclid(self.theta[i]));
                }
                for k in kmin..=kmax {
                    let g1 = self.real_degree(&c, k);
                    let Some(g2) = v.checked_sub(&g1) else { continue };
                    if self.classify(&g2) != RootClass::NotRoot {
                        consider(g1, g2.clone());
                    }
                }
            }
        }
        // Imaginary first summands kδ.
        let (_, kmax) = self.mod_delta(v);
        for k in 1..=kmax {
            let g1 = self.delta.scaled(k);
            let Some(g2) = v.checked_sub(&g1) else { continue };
            if self.classify(&g2) != RootClass::NotRoot {
                consider(g1, g2);
            }
        }
        out.into_iter().collect()
    }

    /// All positive extended roots of height at most `max_k · |δ|`: every
    /// real root in that range and the imaginary slots `(kδ, i)` for
    /// `1 ≤ k ≤ max_k`, `1 ≤ i ≤ rank`. Sorted by height, reals before
    /// imaginaries of the same height, then by degree and slot.
    pub fn enumerate_ext(&self, max_k: i64) -> Vec<ExtRoot> {
        let dh = self.delta_height();
        let cap = max_k * dh;
        let mut out: Vec<ExtRoot> = Vec::new();
        for beta in &self.positive_roots {
            let h: i64 = beta.iter().sum();
            let mut k = 0;
            while k * dh + h <= cap {
                out.push(ExtRoot::Real(self.real_degree(beta, k)));
                k += 1;
            }
            let minus: Vec<i64> = beta.iter().map(|&x| -x).collect();
            let mut k = 1;
            while k * dh - h <= cap {
                out.push(ExtRoot::Real(self.real_degree(&minus, k)));
                k += 1;
            }
        }
        for k in 1..=max_k {
            for slot in 1..=self.rank {
                out.push(ExtRoot::Imaginary { k, slot });
            }
        }
        out.sort_by_key(|r| match r {
            ExtRoot::Real(v) => (v.height(), 0, v.clone(), 0),
            ExtRoot::Imaginary { k, slot } => {
                (k * dh, 1, self.delta.scaled(*k), *slot)
            }
        });
        out
    }

    /// The squared length `(c, c)` of a signed classical root expressed in
    /// simple-root coordinates (short roots come out as 2).
    pub fn length_sq(&self, classical: &[i64]) -> i64 {
        assert_eq!(classical.len(), self.rank, "classical length mismatch");
        let mut acc = 0i64;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += classical[i] * self.sym[i] * self.cartan[i][j] * classical[j];
            }
        }
        acc
    }

    /// The coroot `c^∨ = 2c/(c, c)` of a signed classical root, in coroot
    /// coordinates over `(α_1^∨, …, α_n^∨)`.
    pub fn coroot(&self, classical: &[i64]) -> Vec<Rational64> {
        let len_sq = self.length_sq(classical);
        assert!(len_sq > 0, "coroot of the zero vector");
        (0..self.rank)
            .map(|i| Rational64::new(2 * classical[i] * self.sym[i], len_sq))
            .collect()
    }

    /// The pairing `⟨c, h⟩` of a signed classical root `c` with a Cartan
    /// element `h = Σ h_i α_i^∨` given in coroot coordinates.
    pub fn cartan_pairing(&self, h: &[Rational64], classical: &[i64]) -> Rational64 {
        assert_eq!(h.len(), self.rank, "coroot-coordinate length mismatch");
        assert_eq!(classical.len(), self.rank, "classical length mismatch");
        let mut acc = Rational64::zero();
        for i in 0..self.rank {
            let row: i64 = (0..self.rank).map(|j| self.cartan[i][j] * classical[j]).sum();
            acc += h[i] * Rational64::from_integer(row);
        }
        acc
    }
}
