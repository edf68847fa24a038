//! Independent full-scalar cross-checks for the standard-Lyndon engine.
//!
//! The [`crate::slw`] engine evaluates bracketings in a *scalar-free* model:
//! it tracks only root directions and `t`-degrees, relying on structural
//! facts about when loop-algebra brackets vanish. This module rebuilds the
//! same objects with none of those shortcuts and compares the results.
//!
//! Two independent ingredients are provided.
//!
//! * [`MatrixModel`] represents the Chevalley generators by exact integer
//!   matrices in a faithful representation — the natural representation of
//!   `sl(n+1)` for type A and the 7-dimensional fundamental representation
//!   for G₂ — so every bracketing keeps its honest scalar. The constructor
//!   re-derives all positive root vectors and verifies the Serre
//!   presentation at runtime before handing the model out.
//! * [`brute_force_table`] re-derives the table of standard Lyndon words from
//!   the definition alone: it enumerates *all* Lyndon words of each degree,
//!   evaluates their bracketings as matrices, and picks maxima (real roots)
//!   or greedy independent families (imaginary levels). No part of the
//!   incremental pair recursion used by the engine is consulted.
//!
//! The comparison helpers [`compare_tables`], [`bracket_pattern_mismatches`]
//! and [`flag_rank_mismatches`] return lists of human-readable discrepancies;
//! agreement is an empty list.
//!
//! ```
//! use aslw::liealg::BracketingRecursion;
//! use aslw::oracle::{brute_force_table, compare_tables};
//! use aslw::rootsystem::AffineSystem;
//! use aslw::slw::SLTable;
//!
//! let sys = AffineSystem::from_descriptor("A2:0,1,2")?;
//! let mut table = SLTable::new(sys.clone());
//! table.generate_up_to(1)?;
//!
//! let brute = brute_force_table(&sys, 1, BracketingRecursion::Costandard)?;
//! assert!(compare_tables(&table, &brute).is_empty());
//! # Ok::<(), aslw::Error>(())
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num::integer::gcd;
use thiserror::Error;

use crate::liealg::{bracket, BracketingRecursion};
use crate::rootsystem::{AffineSystem, DegreeVector, ExtRoot};
use crate::slw::SLTable;
use crate::words::{
    compare, costandard_factorization, is_lyndon, standard_factorization, Letter, Word, WordError,
};

/// Errors from the matrix model and the brute-force derivations.
#[derive(Debug, Error)]
pub enum OracleError {
    /// A word-level failure while factorizing candidates.
    #[error(transparent)]
    Word(#[from] WordError),
    /// No matrix model is wired up for this type and rank.
    #[error("no matrix model available for type {kind}{rank}")]
    Unsupported {
        /// The type letter.
        kind: char,
        /// The rank of the classical part.
        rank: usize,
    },
    /// The candidate model failed a structural self-check.
    #[error("matrix model self-check failed: {0}")]
    Model(String),
    /// The brute-force derivation could not complete.
    #[error("brute-force derivation failed: {0}")]
    Derivation(String),
}

/// A square matrix with exact `i128` entries, stored row-major.
///
/// The sizes used here (at most 7×7, nested commutators of generators with
/// entries in `{0, ±1, ±2}` over word lengths ≤ ~20) keep every intermediate
/// entry far below the `i128` range, and the test profile carries overflow
/// checks.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<i128>,
}

impl Matrix {
    /// The `n × n` zero matrix.
    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![0; n * n] }
    }

    /// Builds `Σ c · E_{i,j}` from 0-indexed `(i, j, c)` triples.
    pub fn from_units(n: usize, units: &[(usize, usize, i128)]) -> Self {
        let mut m = Self::zero(n);
        for &(i, j, c) in units {
            m.entries[i * n + j] += c;
        }
        m
    }

    /// The side length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The entry at row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.entries[i * self.n + j]
    }

    /// Whether every entry vanishes.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// The commutator `self · other − other · self`.
    ///
    /// # Panics
    /// Panics when the sizes differ.
    pub fn commutator(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                let b = other.get(i, k);
                if a == 0 && b == 0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j) - b * self.get(k, j);
                }
            }
        }
        out
    }

    /// The scalar multiple `c · self`.
    pub fn scaled(&self, c: i128) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|&x| c * x).collect() }
    }

    /// The diagonal, provided every off-diagonal entry vanishes.
    pub fn diagonal(&self) -> Option<Vec<i128>> {
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.get(i, j) != 0 {
                    return None;
                }
            }
        }
        Some((0..self.n).map(|i| self.get(i, i)).collect())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// A loop-algebra element `m ⊗ t^tdeg` with an exact matrix coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopMatrix {
    /// The matrix coefficient.
    pub mat: Matrix,
    /// The power of `t`.
    pub tdeg: i64,
}

impl LoopMatrix {
    /// Whether the coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// The bracket `[x ⊗ t^s, y ⊗ t^u] = [x, y] ⊗ t^{s+u}`.
    pub fn commutator(&self, other: &Self) -> Self {
        Self { mat: self.mat.commutator(&other.mat), tdeg: self.tdeg + other.tdeg }
    }
}

/// Exact Chevalley generators of a finite simple Lie algebra acting in a
/// faithful representation, together with the derived lowest root vector.
///
/// Every positive root vector is rebuilt as a nested commutator
/// `x_γ = [x_i, x_{γ−α_i}]`, so each comes out as a *nonzero* integer
/// multiple of the true Chevalley vector. None of the oracle checks (zero
/// versus nonzero, ranks of diagonal families) are sensitive to those
/// scalars.
#[derive(Debug)]
pub struct MatrixModel {
    dim: usize,
    /// Raising generators `e_1, …, e_n` (index 0 holds `e_1`).
    e: Vec<Matrix>,
    /// Lowering generators `f_1, …, f_n`.
    f: Vec<Matrix>,
    /// Cartan elements `h_i = [e_i, f_i]`.
    h: Vec<Matrix>,
    /// The lowest root vector `f_θ`; the affine letter maps to `f_θ ⊗ t`.
    lowest: Matrix,
}

impl MatrixModel {
    /// Builds and self-checks the model for the classical part of `sys`.
    ///
    /// Supported types: A of any rank (natural representation of `sl(n+1)`)
    /// and G₂ (the 7-dimensional fundamental representation). Everything the
    /// oracle relies on — diagonal Cartan elements, the Chevalley relations
    /// `[h_i, e_j] = a_{ij} e_j`, `[e_i, f_j] = δ_{ij} h_i`, the Serre
    /// relations, and nonvanishing of every recursively built root vector —
    /// is verified at construction time.
    pub fn for_system(sys: &AffineSystem) -> Result<Self, OracleError> {
        let (dim, e, f) = match (sys.kind(), sys.rank()) {
            ('A', n) => {
                let e: Vec<Matrix> =
                    (1..=n).map(|i| Matrix::from_units(n + 1, &[(i - 1, i, 1)])).collect();
                let f: Vec<Matrix> =
                    (1..=n).map(|i| Matrix::from_units(n + 1, &[(i, i - 1, 1)])).collect();
                (n + 1, e, f)
            }
            ('G', 2) => {
                // Basis: weight-ordered 7-dimensional representation. α_1 is
                // the long simple root, α_2 the short one.
                let e1 = Matrix::from_units(7, &[(1, 2, 1), (4, 5, 1)]);
                let f1 = Matrix::from_units(7, &[(2, 1, 1), (5, 4, 1)]);
                let e2 = Matrix::from_units(7, &[(0, 1, 1), (2, 3, 2), (3, 4, 1), (5, 6, 1)]);
                let f2 = Matrix::from_units(7, &[(1, 0, 1), (3, 2, 1), (4, 3, 2), (6, 5, 1)]);
                (7, vec![e1, e2], vec![f1, f2])
            }
            (kind, rank) => return Err(OracleError::Unsupported { kind, rank }),
        };
        let h: Vec<Matrix> = e.iter().zip(&f).map(|(ei, fi)| ei.commutator(fi)).collect();
        let f_roots = positive_root_vectors(sys, &f)?;
        // Also build the raising side purely for its nonvanishing checks.
        positive_root_vectors(sys, &e)?;
        let lowest = f_roots.get(sys.theta()).expect("θ is a positive root").clone();
        let model = Self { dim, e, f, h, lowest };
        model.self_check(sys)?;
        Ok(model)
    }

    /// The dimension of the underlying representation.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The base matrix of a letter: `α_0 ↦ f_θ ⊗ t` and `α_i ↦ e_i ⊗ t^0`.
    pub fn letter(&self, sys: &AffineSystem, letter: Letter) -> Result<LoopMatrix, OracleError> {
        let id = letter.0 as usize;
        if id > sys.rank() {
            return Err(OracleError::Word(WordError::LetterOutOfRange {
                letter: letter.0,
                alphabet: sys.rank() + 1,
            }));
        }
        Ok(if id == 0 {
            LoopMatrix { mat: self.lowest.clone(), tdeg: 1 }
        } else {
            LoopMatrix { mat: self.e[id - 1].clone(), tdeg: 0 }
        })
    }

    /// The full-scalar bracketing of a Lyndon word: single letters map to
    /// their base matrices, longer words split by the chosen factorization
    /// and bracket the two sides.
    pub fn bracketing(
        &self,
        sys: &AffineSystem,
        w: &Word,
        mode: BracketingRecursion,
    ) -> Result<LoopMatrix, OracleError> {
        if w.len() == 1 {
            return self.letter(sys, w.letters()[0]);
        }
        let (l, r) = match mode {
            BracketingRecursion::Costandard => costandard_factorization(w, sys.order())?,
            BracketingRecursion::Standard => standard_factorization(w, sys.order())?,
        };
        let left = self.bracketing(sys, &l, mode)?;
        let right = self.bracketing(sys, &r, mode)?;
        Ok(left.commutator(&right))
    }

    /// Verifies the Chevalley–Serre presentation on the stored generators.
    fn self_check(&self, sys: &AffineSystem) -> Result<(), OracleError> {
        let rank = sys.rank();
        let a = sys.cartan();
        for i in 0..rank {
            if self.h[i].diagonal().is_none() {
                return Err(OracleError::Model(format!("h_{} is not diagonal", i + 1)));
            }
            for j in 0..rank {
                if self.h[i].commutator(&self.e[j]) != self.e[j].scaled(a[i][j] as i128) {
                    return Err(OracleError::Model(format!(
                        "[h_{}, e_{}] ≠ a_{{{}{}}}·e_{}",
                        i + 1,
                        j + 1,
                        i + 1,
                        j + 1,
                        j + 1
                    )));
                }
                if self.h[i].commutator(&self.f[j]) != self.f[j].scaled(-(a[i][j] as i128)) {
                    return Err(OracleError::Model(format!(
                        "[h_{}, f_{}] ≠ −a_{{{}{}}}·f_{}",
                        i + 1,
                        j + 1,
                        i + 1,
                        j + 1,
                        j + 1
                    )));
                }
                if i == j {
                    continue;
                }
                if !self.e[i].commutator(&self.f[j]).is_zero() {
                    return Err(OracleError::Model(format!("[e_{}, f_{}] ≠ 0", i + 1, j + 1)));
                }
                // Serre: (ad x_i)^{1−a_{ij}} x_j = 0, all lower powers ≠ 0.
                let steps = 1 - a[i][j];
                for (gens, tag) in [(&self.e, "e"), (&self.f, "f")] {
                    let mut acc = gens[j].clone();
                    for step in 1..=steps {
                        acc = gens[i].commutator(&acc);
                        if (step == steps) != acc.is_zero() {
                            return Err(OracleError::Model(format!(
                                "Serre relation fails at (ad {tag}_{})^{step} {tag}_{}",
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                }
            }
        }
        // The lowest vector carries the weight −θ.
        for i in 0..rank {
            let pairing: i64 = (0..rank).map(|j| a[i][j] * sys.theta()[j]).sum();
            if self.h[i].commutator(&self.lowest) != self.lowest.scaled(-(pairing as i128)) {
                return Err(OracleError::Model(format!(
                    "[h_{}, f_θ] does not act by the weight −θ",
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

/// Root vectors for every classical positive root, built by height as
/// `x_γ = [x_i, x_{γ−α_i}]` for the first simple `α_i` with `γ − α_i` still a
/// positive root. Fails if any nested commutator vanishes: in a faithful
/// representation each must be a nonzero multiple of the Chevalley vector.
fn positive_root_vectors(
    sys: &AffineSystem,
    gens: &[Matrix],
) -> Result<BTreeMap<Vec<i64>, Matrix>, OracleError> {
    let rank = sys.rank();
    let mut roots: Vec<Vec<i64>> = sys.positive_roots().to_vec();
    roots.sort_by_key(|c| c.iter().sum::<i64>());
    let mut out: BTreeMap<Vec<i64>, Matrix> = BTreeMap::new();
    for gamma in roots {
        let height: i64 = gamma.iter().sum();
        if height == 1 {
            let i = gamma.iter().position(|&x| x == 1).expect("simple root");
            out.insert(gamma, gens[i].clone());
            continue;
        }
        let mut vector = None;
        for i in 0..rank {
            if gamma[i] == 0 {
                continue;
            }
            let mut rest = gamma.clone();
            rest[i] -= 1;
            if let Some(m) = out.get(&rest) {
                vector = Some(gens[i].commutator(m));
                break;
            }
        }
        let m = vector
            .ok_or_else(|| OracleError::Model(format!("no simple step below root {gamma:?}")))?;
        if m.is_zero() {
            return Err(OracleError::Model(format!("vanishing root vector at {gamma:?}")));
        }
        out.insert(gamma, m);
    }
    Ok(out)
}

/// An exact integer row span kept in echelon form (fraction-free elimination
/// with gcd-normalized rows), used for rank bookkeeping over `i128`
/// diagonals.
struct IntSpan {
    dim: usize,
    /// Rows sorted by pivot column; each starts with zeros up to its pivot.
    rows: Vec<Vec<i128>>,
}

impl IntSpan {
    fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span and inserts the remainder when nonzero.
    /// Returns whether the span grew.
    fn try_extend(&mut self, v: &[i128]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut v = v.to_vec();
        for row in &self.rows {
            let p = row.iter().position(|&x| x != 0).expect("echelon row");
            if v[p] != 0 {
                let (a, b) = (row[p], v[p]);
                for c in 0..self.dim {
                    v[c] = v[c] * a - row[c] * b;
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let g = v.iter().fold(0i128, |acc, &x| gcd(acc, x));
        let scale = if v[p] < 0 { -g } else { g };
        for x in &mut v {
            *x /= scale;
        }
        let at = self
            .rows
            .iter()
            .position(|row| row.iter().position(|&x| x != 0).expect("echelon row") > p)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, v);
        true
    }
}

/// Advances `a` to its next lexicographic permutation, returning `false`
/// (and leaving `a` sorted descending) once the last one has been reached.
fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All Lyndon words whose letter content is given by `degree` (letter `i`
/// occurs `degree[i]` times), under the system's alphabet order.
///
/// A Lyndon word always starts with the order-minimal letter it contains, so
/// the enumeration pins one copy of that letter up front and runs through the
/// permutations of the rest.
///
/// # Panics
/// Panics when `degree` has the wrong length or a negative entry.
pub fn lyndon_words_of_degree(sys: &AffineSystem, degree: &DegreeVector) -> Vec<Word> {
    assert_eq!(degree.len(), sys.rank() + 1, "degree length mismatch");
    let order = sys.order();
    let mut letters: Vec<Letter> = Vec::new();
    for (i, &mult) in degree.0.iter().enumerate() {
        assert!(mult >= 0, "negative letter multiplicity");
        letters.extend(std::iter::repeat(Letter(i as u8)).take(mult as usize));
    }
    if letters.is_empty() {
        return Vec::new();
    }
    let first = letters
        .iter()
        .copied()
        .min_by(|&a, &b| order.cmp_letters(a, b))
        .expect("nonempty content");
    let pos = letters.iter().position(|&l| l == first).expect("present");
    letters.remove(pos);
    letters.sort();
    let mut out = Vec::new();
    loop {
        let mut candidate = Vec::with_capacity(letters.len() + 1);
        candidate.push(first);
        candidate.extend_from_slice(&letters);
        let w = Word::new(candidate).expect("nonempty word");
        if is_lyndon(&w, order) {
            out.push(w);
        }
        if !next_permutation(&mut letters) {
            break;
        }
    }
    out
}

/// A standard-Lyndon table derived by brute force, with no use of the
/// incremental engine.
pub struct BruteWords {
    /// The standard word of every real root covered by the derivation.
    pub real: BTreeMap<DegreeVector, Word>,
    /// `imaginary[k − 1]` lists the level-`k` slot words in slot order.
    pub imaginary: Vec<Vec<Word>>,
}

/// Re-derives the standard Lyndon table for every extended root of height at
/// most `max_k · |δ|`, straight from the definition.
///
/// * Real degree: the largest Lyndon word of that degree (in the induced
///   order) whose bracketing is nonzero as an honest matrix.
/// * Imaginary level `k`: scan all Lyndon words of degree `kδ` in decreasing
///   order and keep each word whose (diagonal) bracketing value enlarges the
///   integer span of the values kept so far, until `rank` slots are filled.
///
/// The cost is dominated by the permutation enumeration, which is
/// exponential in the word length; heights up to `3|δ|` in rank ≤ 2 stay
/// comfortable.
pub fn brute_force_table(
    sys: &AffineSystem,
    max_k: i64,
    mode: BracketingRecursion,
) -> Result<BruteWords, OracleError> {
    let model = MatrixModel::for_system(sys)?;
    let mut real = BTreeMap::new();
    for root in sys.enumerate_ext(max_k) {
        let ExtRoot::Real(v) = root else { continue };
        let mut candidates = lyndon_words_of_degree(sys, &v);
        candidates.sort_by(|x, y| compare(y, x, sys.order()));
        let mut found = None;
        for w in &candidates {
            if !model.bracketing(sys, w, mode)?.is_zero() {
                found = Some(w.clone());
                break;
            }
        }
        let w = found.ok_or_else(|| {
            OracleError::Derivation(format!("no Lyndon word of degree {v} brackets to nonzero"))
        })?;
        real.insert(v, w);
    }
    let mut imaginary = Vec::new();
    for k in 1..=max_k {
        let mut candidates = lyndon_words_of_degree(sys, &sys.delta().scaled(k));
        candidates.sort_by(|x, y| compare(y, x, sys.order()));
        let mut span = IntSpan::new(model.dim());
        let mut slots = Vec::new();
        for w in &candidates {
            if slots.len() == sys.rank() {
                break;
            }
            let b = model.bracketing(sys, w, mode)?;
            if b.is_zero() {
                continue;
            }
            let diag = b.mat.diagonal().ok_or_else(|| {
                OracleError::Derivation(format!("imaginary bracketing of {w} is not diagonal"))
            })?;
            if span.try_extend(&diag) {
                slots.push(w.clone());
            }
        }
        if slots.len() < sys.rank() {
            return Err(OracleError::Derivation(format!(
                "level {k}: only {} independent imaginary words found",
                slots.len()
            )));
        }
        imaginary.push(slots);
    }
    Ok(BruteWords { real, imaginary })
}

/// Compares an engine table against a brute-force derivation, over every
/// degree the brute-force table covers. Returns one line per disagreement.
pub fn compare_tables(table: &SLTable, brute: &BruteWords) -> Vec<String> {
    let mut out = Vec::new();
    for (v, w) in &brute.real {
        match table.real_word(v) {
            Some(t) if t == w => {}
            Some(t) => out.push(format!("real {v}: engine {t} vs brute-force {w}")),
            None => out.push(format!("real {v}: engine has no word")),
        }
    }
    for (idx, slots) in brute.imaginary.iter().enumerate() {
        let k = idx as i64 + 1;
        let join = |ws: &[Word]| {
            ws.iter().map(Word::to_string).collect::<Vec<_>>().join(", ")
        };
        match table.imaginary_words(k) {
            Some(t) if t == slots.as_slice() => {}
            Some(t) => out.push(format!(
                "level {k}: engine [{}] vs brute-force [{}]",
                join(t),
                join(slots)
            )),
            None => out.push(format!("level {k}: engine has no words")),
        }
    }
    out
}

/// Compares vanishing patterns: for every pair of table entries, the
/// scalar-free bracket of the stored values must vanish exactly when the
/// honest matrix commutator of the word bracketings does. Each entry's own
/// value is also checked — nonzero on both sides, with equal `t`-degree.
pub fn bracket_pattern_mismatches(
    table: &SLTable,
    model: &MatrixModel,
) -> Result<Vec<String>, OracleError> {
    let sys = table.system();
    let mode = table.mode();
    let entries = table.entries();
    let mut out = Vec::new();
    let mut engine = Vec::with_capacity(entries.len());
    let mut matrices = Vec::with_capacity(entries.len());
    for (root, word) in &entries {
        let value = table.value_of(root).expect("generated entry has a value").clone();
        let mat = model.bracketing(sys, word, mode)?;
        if value.is_zero() || mat.is_zero() {
            out.push(format!(
                "{word}: value vanishes (engine zero: {}, matrix zero: {})",
                value.is_zero(),
                mat.is_zero()
            ));
        } else if value.tdeg() != Some(mat.tdeg) {
            out.push(format!(
                "{word}: t-degree mismatch (engine {:?}, matrix {})",
                value.tdeg(),
                mat.tdeg
            ));
        }
        engine.push(value);
        matrices.push(mat);
    }
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            let engine_zero = bracket(sys, &engine[i], &engine[j]).is_zero();
            let matrix_zero = matrices[i].mat.commutator(&matrices[j].mat).is_zero();
            if engine_zero != matrix_zero {
                out.push(format!(
                    "[{}, {}]: engine bracket is {} but matrix commutator is {}",
                    entries[i].1,
                    entries[j].1,
                    if engine_zero { "zero" } else { "nonzero" },
                    if matrix_zero { "zero" } else { "nonzero" },
                ));
            }
        }
    }
    Ok(out)
}

/// Compares flag ranks: at every level `k ≤ max_k` and slot `i`, the exact
/// integer rank of the matrix diagonals of the first `i` slot words must
/// equal the engine's flag-step rank, which in turn must be `i`.
pub fn flag_rank_mismatches(
    table: &SLTable,
    model: &MatrixModel,
    max_k: i64,
) -> Result<Vec<String>, OracleError> {
    let sys = table.system();
    let mode = table.mode();
    let mut out = Vec::new();
    for k in 1..=max_k {
        let words = table
            .imaginary_words(k)
            .ok_or_else(|| OracleError::Derivation(format!("level {k} not generated")))?;
        let flags = table
            .flag(k)
            .ok_or_else(|| OracleError::Derivation(format!("flag {k} not generated")))?;
        let mut span = IntSpan::new(model.dim());
        for (i, w) in words.iter().enumerate() {
            let b = model.bracketing(sys, w, mode)?;
            let diag = b.mat.diagonal().ok_or_else(|| {
                OracleError::Derivation(format!("imaginary bracketing of {w} is not diagonal"))
            })?;
            span.try_extend(&diag);
            let engine_rank = flags[i].rank();
            if span.rank() != engine_rank || engine_rank != i + 1 {
                out.push(format!(
                    "level {k} slot {}: matrix rank {} vs engine rank {engine_rank}",
                    i + 1,
                    span.rank()
                ));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slw::SLTable;

    fn sys(d: &str) -> AffineSystem {
        AffineSystem::from_descriptor(d).unwrap()
    }

    #[test]
    fn models_pass_their_self_checks() {
        for d in ["A1:0,1", "A2:0,1,2", "A3:0,1,2,3", "G2:0,1,2"] {
            MatrixModel::for_system(&sys(d)).unwrap();
        }
    }

    #[test]
    fn unsupported_types_are_reported() {
        let err = MatrixModel::for_system(&sys("C2:0,1,2")).unwrap_err();
        assert!(matches!(err, OracleError::Unsupported { kind: 'C', rank: 2 }));
    }

    #[test]
    fn next_permutation_enumerates_multisets() {
        let mut a = vec![0u8, 1, 1];
        let mut seen = vec![a.clone()];
        while next_permutation(&mut a) {
            seen.push(a.clone());
        }
        assert_eq!(seen, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert!(!next_permutation(&mut [1u8]));
    }

    #[test]
    fn lyndon_enumeration_matches_the_necklace_count() {
        // The content of δ in G₂ is (1, 2, 3) with gcd 1, so every necklace
        // is aperiodic and the Lyndon count is 6!/(1!·2!·3!)/6 = 10 — for
        // any alphabet order.
        for d in ["G2:0,1,2", "G2:2,1,0", "G2:1,0,2"] {
            let s = sys(d);
            assert_eq!(lyndon_words_of_degree(&s, s.delta()).len(), 10);
        }
    }

    #[test]
    fn int_span_tracks_rank_exactly() {
        let mut span = IntSpan::new(3);
        assert!(span.try_extend(&[2, 4, 6]));
        assert!(!span.try_extend(&[1, 2, 3]));
        assert!(span.try_extend(&[0, 0, 5]));
        assert!(span.try_extend(&[7, 0, 0]));
        assert!(!span.try_extend(&[3, 6, 9]));
        assert_eq!(span.rank(), 3);
    }

    #[test]
    fn g2_brute_force_level_one_matches_known_words() {
        let s = sys("G2:0,1,2");
        let brute = brute_force_table(&s, 1, BracketingRecursion::Costandard).unwrap();
        let words: Vec<String> = brute.imaginary[0].iter().map(Word::to_string).collect();
        assert_eq!(words, ["012221", "012212"]);
        // The highest classical root θ = 2α_1 + 3α_2.
        let theta = s.real_degree(&[2, 3], 0);
        assert_eq!(brute.real[&theta].to_string(), "12122");
    }

    #[test]
    fn a2_engine_agrees_with_the_oracle_to_two_delta() {
        let s = sys("A2:0,1,2");
        let mut table = SLTable::new(s.clone());
        table.generate_up_to(2).unwrap();
        let model = MatrixModel::for_system(&s).unwrap();
        let brute = brute_force_table(&s, 2, BracketingRecursion::Costandard).unwrap();
        assert_eq!(compare_tables(&table, &brute), Vec::<String>::new());
        assert_eq!(bracket_pattern_mismatches(&table, &model).unwrap(), Vec::<String>::new());
        assert_eq!(flag_rank_mismatches(&table, &model, 2).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn g2_engine_agrees_with_the_oracle_at_level_one() {
        let s = sys("G2:1,2,0");
        let mut table = SLTable::new(s.clone());
        table.generate_up_to(1).unwrap();
        let model = MatrixModel::for_system(&s).unwrap();
        let brute = brute_force_table(&s, 1, BracketingRecursion::Costandard).unwrap();
        assert_eq!(compare_tables(&table, &brute), Vec::<String>::new());
        assert_eq!(bracket_pattern_mismatches(&table, &model).unwrap(), Vec::<String>::new());
        assert_eq!(flag_rank_mismatches(&table, &model, 1).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn standard_recursion_brute_force_agrees_too() {
        let s = sys("A2:0,1,2");
        let mut table = SLTable::with_mode(s.clone(), BracketingRecursion::Standard);
        table.generate_up_to(1).unwrap();
        let brute = brute_force_table(&s, 1, BracketingRecursion::Standard).unwrap();
        assert!(compare_tables(&table, &brute).is_empty());
    }
}
