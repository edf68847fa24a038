//! Order-parametric combinatorics on words.
//!
//! A [`Word`] is a nonempty sequence of [`Letter`]s. Letters carry no
//! intrinsic order: every comparison takes an explicit [`AlphabetOrder`], so
//! the same word can be inspected under several total orders of the same
//! alphabet. The module provides lexicographic [`compare`], the Lyndon test,
//! Duval's canonical factorization, and the costandard/standard factorizations
//! of Lyndon words, together with a suite of testable factorization laws in
//! [`laws`].
//!
//! # Comparison convention
//!
//! Words are compared letter by letter under the alphabet order; the first
//! differing position decides. If one word is a proper prefix of the other,
//! the *shorter* word is smaller. This branch is load-bearing for
//! factorization laws and is implemented directly from the case split — never
//! via sentinel padding.
//!
//! ```
//! use aslw::words::{compare, is_lyndon, AlphabetOrder, Word};
//! use std::cmp::Ordering;
//!
//! let order = AlphabetOrder::from_ascending(&[0, 1, 2])?;
//! let u = Word::parse("01")?;
//! let v = Word::parse("012")?;
//! assert_eq!(compare(&u, &v, &order), Ordering::Less); // proper prefix
//! assert!(is_lyndon(&v, &order));
//! # Ok::<(), aslw::words::WordError>(())
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors produced by word construction, parsing, and factorization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    /// Public word operations require at least one letter.
    #[error("words must contain at least one letter")]
    Empty,
    /// A letter id does not fit the alphabet it is used with.
    #[error("letter {letter} does not belong to an alphabet of size {alphabet}")]
    LetterOutOfRange {
        /// The offending letter id.
        letter: u8,
        /// The size of the alphabet against which it was checked.
        alphabet: usize,
    },
    /// An order sequence must list every letter id `0..n` exactly once.
    #[error("`{0}` is not a permutation of 0..n")]
    NotAPermutation(String),
    /// The string form could not be parsed back into a word.
    #[error("cannot parse `{0}` as a word")]
    Parse(String),
    /// Costandard/standard factorizations need at least two letters.
    #[error("factorizations require at least two letters")]
    TooShort,
    /// Costandard/standard factorizations are defined on Lyndon words only.
    #[error("`{0}` is not a Lyndon word under the given order")]
    NotLyndon(String),
}

/// A letter of the extended simple-root alphabet, identified by a small id.
///
/// The derived `Ord` is the *identity* order on ids (useful for deterministic
/// bookkeeping); lexicographic questions must go through an
/// [`AlphabetOrder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A total order on the alphabet `{0, 1, …, n−1}`, given as the ascending
/// list of letter ids.
///
/// ```
/// use aslw::words::{AlphabetOrder, Letter};
/// use std::cmp::Ordering;
///
/// // The order 1 < 2 < 0.
/// let order = AlphabetOrder::from_ascending(&[1, 2, 0])?;
/// assert_eq!(order.cmp_letters(Letter(2), Letter(0)), Ordering::Less);
/// assert_eq!(order.rank(Letter(1)), 0);
/// # Ok::<(), aslw::words::WordError>(())
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphabetOrder {
    /// Letters listed from smallest to largest.
    ascending: Vec<Letter>,
    /// `rank_of[id]` = position of letter `id` in `ascending`.
    rank_of: Vec<usize>,
}

impl AlphabetOrder {
    /// Builds an order from the ascending letter list, which must be a
    /// permutation of `0..seq.len()`.
    pub fn from_ascending(seq: &[u8]) -> Result<Self, WordError> {
        let n = seq.len();
        if n == 0 {
            return Err(WordError::Empty);
        }
        let mut rank_of = vec![usize::MAX; n];
        for (rank, &id) in seq.iter().enumerate() {
            if (id as usize) >= n || rank_of[id as usize] != usize::MAX {
                return Err(WordError::NotAPermutation(format!("{seq:?}")));
            }
            rank_of[id as usize] = rank;
        }
        Ok(Self {
            ascending: seq.iter().map(|&id| Letter(id)).collect(),
            rank_of,
        })
    }

    /// The natural order `0 < 1 < … < n−1`.
    pub fn natural(size: usize) -> Self {
        let seq: Vec<u8> = (0..size as u8).collect();
        Self::from_ascending(&seq).expect("0..n is a permutation")
    }

    /// Number of letters in the alphabet.
    pub fn size(&self) -> usize {
        self.ascending.len()
    }

    /// Letters from smallest to largest.
    pub fn ascending(&self) -> &[Letter] {
        &self.ascending
    }

    /// The smallest letter of the alphabet.
    pub fn smallest(&self) -> Letter {
        self.ascending[0]
    }

    /// Position of `l` in the ascending order (0 = smallest).
    ///
    /// # Panics
    /// Panics if `l` lies outside the alphabet.
    pub fn rank(&self, l: Letter) -> usize {
        self.rank_of[l.0 as usize]
    }

    /// Compares two letters under this order.
    pub fn cmp_letters(&self, a: Letter, b: Letter) -> Ordering {
        self.rank(a).cmp(&self.rank(b))
    }

    /// Returns the order as the comma-separated ascending id list,
    /// e.g. `"1,2,0"`.
    pub fn descriptor(&self) -> String {
        let ids: Vec<String> = self.ascending.iter().map(|l| l.0.to_string()).collect();
        ids.join(",")
    }

    /// Every total order of an alphabet of the given size, sorted
    /// lexicographically by ascending sequence (`size!` orders).
    pub fn all(size: usize) -> Vec<AlphabetOrder> {
        fn permute(pool: &mut Vec<u8>, prefix: &mut Vec<u8>, out: &mut Vec<AlphabetOrder>) {
            if pool.is_empty() {
                out.push(AlphabetOrder::from_ascending(prefix).expect("permutation by construction"));
                return;
            }
            for idx in 0..pool.len() {
                let id = pool.remove(idx);
                prefix.push(id);
                permute(pool, prefix, out);
                prefix.pop();
                pool.insert(idx, id);
            }
        }
        let mut out = Vec::new();
        permute(&mut (0..size as u8).collect(), &mut Vec::new(), &mut out);
        out
    }
}

/// A nonempty word over the letter alphabet.
///
/// Equality and hashing are letter-wise; lexicographic questions go through
/// [`compare`] with an explicit [`AlphabetOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// Builds a word from letters; rejects the empty sequence.
    pub fn new(letters: Vec<Letter>) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::Empty);
        }
        Ok(Self { letters })
    }

    /// Builds a word from raw letter ids.
    pub fn from_ids(ids: &[u8]) -> Result<Self, WordError> {
        Self::new(ids.iter().map(|&id| Letter(id)).collect())
    }

    /// Parses the text form: either a digit string (`"012221"`, every letter
    /// a single decimal digit) or comma-separated ids (`"10,2,0"`).
    pub fn parse(s: &str) -> Result<Self, WordError> {
        if s.is_empty() {
            return Err(WordError::Empty);
        }
        let ids: Result<Vec<u8>, WordError> = if s.contains(',') {
            s.split(',')
                .map(|part| part.trim().parse::<u8>().map_err(|_| WordError::Parse(s.to_string())))
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| WordError::Parse(s.to_string()))
                })
                .collect()
        };
        Self::from_ids(&ids?)
    }

    /// The letter sequence.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of letters.
    #[allow(clippy::len_without_is_empty)] // words are never empty
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// The concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The factor `self[range]`; the range must be nonempty and in bounds.
    ///
    /// # Panics
    /// Panics on an empty or out-of-bounds range.
    pub fn subword(&self, range: std::ops::Range<usize>) -> Word {
        assert!(range.start < range.end && range.end <= self.len(), "empty or out-of-bounds factor");
        Word { letters: self.letters[range].to_vec() }
    }

    /// The left rotation by `r` letters: `self[r..] · self[..r]`.
    pub fn rotated_left(&self, r: usize) -> Word {
        let r = r % self.len();
        let mut letters = self.letters[r..].to_vec();
        letters.extend_from_slice(&self.letters[..r]);
        Word { letters }
    }

    /// The word repeated `times` times; `times` must be positive.
    pub fn repeated(&self, times: usize) -> Result<Word, WordError> {
        if times == 0 {
            return Err(WordError::Empty);
        }
        let mut letters = Vec::with_capacity(self.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.letters);
        }
        Ok(Word { letters })
    }

    /// Letter multiplicities over an alphabet of the given size.
    pub fn content(&self, alphabet: usize) -> Result<Vec<i64>, WordError> {
        let mut counts = vec![0i64; alphabet];
        for l in &self.letters {
            let id = l.0 as usize;
            if id >= alphabet {
                return Err(WordError::LetterOutOfRange { letter: l.0, alphabet });
            }
            counts[id] += 1;
        }
        Ok(counts)
    }
}

impl fmt::Display for Word {
    /// Digit string when every id fits one decimal digit, comma-separated
    /// ids otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|l| l.0 <= 9) {
            for l in &self.letters {
                write!(f, "{}", l.0)?;
            }
            Ok(())
        } else {
            let ids: Vec<String> = self.letters.iter().map(|l| l.0.to_string()).collect();
            write!(f, "{}", ids.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

/// Lexicographic comparison of `a` and `b` under `order`.
///
/// The first differing letter decides; a proper prefix is smaller than the
/// longer word.
pub fn compare(a: &Word, b: &Word, order: &AlphabetOrder) -> Ordering {
    for (&x, &y) in a.letters.iter().zip(&b.letters) {
        match order.cmp_letters(x, y) {
            Ordering::Equal => continue,
            decided => return decided,
        }
    }
    a.len().cmp(&b.len())
}

/// Whether `w` is strictly smaller than every proper suffix of itself.
///
/// Single letters are Lyndon; a word with a period (e.g. `"0101"`) never is.
pub fn is_lyndon(w: &Word, order: &AlphabetOrder) -> bool {
    let s = &w.letters;
    let n = s.len();
    'suffixes: for start in 1..n {
        for k in 0..(n - start) {
            match order.cmp_letters(s[k], s[start + k]) {
                Ordering::Less => continue 'suffixes,
                Ordering::Greater => return false,
                Ordering::Equal => {}
            }
        }
        // The suffix ran out without a difference, so it is a proper prefix
        // of w and therefore smaller than w.
        return false;
    }
    true
}

/// The canonical factorization of `w` into a non-increasing sequence of
/// Lyndon words (Duval's algorithm, linear time).
///
/// ```
/// use aslw::words::{canonical_factorization, AlphabetOrder, Word};
///
/// let order = AlphabetOrder::from_ascending(&[0, 1])?;
/// let w = Word::parse("100")?;
/// let factors: Vec<String> =
///     canonical_factorization(&w, &order).iter().map(|f| f.to_string()).collect();
/// assert_eq!(factors, ["1", "0", "0"]);
/// # Ok::<(), aslw::words::WordError>(())
/// ```
pub fn canonical_factorization(w: &Word, order: &AlphabetOrder) -> Vec<Word> {
    let s = &w.letters;
    let n = s.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && order.cmp_letters(s[k], s[j]) != Ordering::Greater {
            if order.cmp_letters(s[k], s[j]) == Ordering::Less {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            factors.push(Word { letters: s[i..i + period].to_vec() });
            i += period;
        }
    }
    factors
}

fn require_factorable(l: &Word, order: &AlphabetOrder) -> Result<(), WordError> {
    if l.len() < 2 {
        return Err(WordError::TooShort);
    }
    if !is_lyndon(l, order) {
        return Err(WordError::NotLyndon(l.to_string()));
    }
    Ok(())
}

/// The costandard factorization `ℓ = ℓ^l · ℓ^r` of a Lyndon word: `ℓ^r` is
/// the longest proper suffix that is Lyndon, equivalently the smallest
/// proper suffix.
///
/// ```
/// use aslw::words::{costandard_factorization, AlphabetOrder, Word};
///
/// let order = AlphabetOrder::from_ascending(&[2, 1, 0])?;
/// let l = Word::parse("221210")?;
/// let (left, right) = costandard_factorization(&l, &order)?;
/// assert_eq!((left.to_string(), right.to_string()), ("2".into(), "21210".into()));
/// # Ok::<(), aslw::words::WordError>(())
/// ```
pub fn costandard_factorization(l: &Word, order: &AlphabetOrder) -> Result<(Word, Word), WordError> {
    require_factorable(l, order)?;
    // The smallest proper suffix of a word is the last factor of the Duval
    // factorization of the tail l[1..].
    let tail = l.subword(1..l.len());
    let factors = canonical_factorization(&tail, order);
    let right = factors.last().expect("tail is nonempty").clone();
    let left = l.subword(0..l.len() - right.len());
    debug_assert!(is_lyndon(&left, order), "costandard left part must be Lyndon");
    debug_assert!(is_lyndon(&right, order), "costandard right part must be Lyndon");
    Ok((left, right))
}

/// The standard factorization `ℓ = ℓ^{ls} · ℓ^{rs}` of a Lyndon word:
/// `ℓ^{ls}` is the longest proper prefix that is Lyndon.
///
/// ```
/// use aslw::words::{standard_factorization, AlphabetOrder, Word};
///
/// let order = AlphabetOrder::from_ascending(&[2, 1, 0])?;
/// let l = Word::parse("221210")?;
/// let (left, right) = standard_factorization(&l, &order)?;
/// assert_eq!((left.to_string(), right.to_string()), ("22121".into(), "0".into()));
/// # Ok::<(), aslw::words::WordError>(())
/// ```
pub fn standard_factorization(l: &Word, order: &AlphabetOrder) -> Result<(Word, Word), WordError> {
    require_factorable(l, order)?;
    for cut in (1..l.len()).rev() {
        let left = l.subword(0..cut);
        if is_lyndon(&left, order) {
            let right = l.subword(cut..l.len());
            debug_assert!(is_lyndon(&right, order), "standard right part must be Lyndon");
            return Ok((left, right));
        }
    }
    unreachable!("the single first letter is always a Lyndon prefix")
}

/// Whether the Lyndon word `l` is strictly greater than the word `w`,
/// computed by comparing `l` against the *first canonical factor* of `w`.
///
/// Requires `l` to be Lyndon; in debug builds the result is checked against
/// the direct comparison.
pub fn lyndon_greater_than_word(l: &Word, w: &Word, order: &AlphabetOrder) -> bool {
    debug_assert!(is_lyndon(l, order), "lyndon_greater_than_word requires a Lyndon word");
    let first = canonical_factorization(w, order).into_iter().next().expect("w is nonempty");
    let via_factor = compare(l, &first, order) == Ordering::Greater;
    debug_assert_eq!(
        via_factor,
        compare(l, w, order) == Ordering::Greater,
        "first-factor comparison must agree with the direct one",
    );
    via_factor
}

/// The unique Lyndon cyclic rotation of `w` with its left-rotation offset,
/// or `None` when no rotation is Lyndon (exactly the periodic words).
///
/// ```
/// use aslw::words::{lyndon_rotation, AlphabetOrder, Word};
///
/// let order = AlphabetOrder::from_ascending(&[0, 1])?;
/// let (rot, offset) = lyndon_rotation(&Word::parse("10")?, &order).unwrap();
/// assert_eq!((rot.to_string(), offset), ("01".into(), 1));
/// assert!(lyndon_rotation(&Word::parse("0101")?, &order).is_none());
/// # Ok::<(), aslw::words::WordError>(())
/// ```
pub fn lyndon_rotation(w: &Word, order: &AlphabetOrder) -> Option<(Word, usize)> {
    (0..w.len()).map(|r| (w.rotated_left(r), r)).find(|(rot, _)| is_lyndon(rot, order))
}

pub mod laws {
    //! Factorization laws as boolean checkers.
    //!
    //! Each function states a structural law about Lyndon factorizations and
    //! returns whether its conclusion holds for the given input; inputs are
    //! expected to satisfy the documented preconditions (callers typically
    //! generate random words and filter). The laws back the randomized
    //! property suite and double as executable documentation.

    use super::*;

    /// Precondition: `l1`, `l2` Lyndon with `l1 < l2`.
    /// Law: `l1·l2` is Lyndon and `l1·l2 < l2·l1`.
    pub fn concat_of_increasing_lyndon_pair_is_lyndon(
        l1: &Word,
        l2: &Word,
        order: &AlphabetOrder,
    ) -> bool {
        let cat = l1.concat(l2);
        let swapped = l2.concat(l1);
        is_lyndon(&cat, order) && compare(&cat, &swapped, order) == Ordering::Less
    }

    /// Precondition: `l` Lyndon with `|l| ≥ 2`.
    /// Law: the costandard right part is the smallest proper suffix, and also
    /// the longest proper Lyndon suffix.
    pub fn right_factor_is_smallest_proper_suffix(l: &Word, order: &AlphabetOrder) -> bool {
        let (_, right) = costandard_factorization(l, order).expect("precondition");
        let n = l.len();
        let min_suffix = (1..n)
            .map(|start| l.subword(start..n))
            .min_by(|a, b| compare(a, b, order))
            .expect("|l| >= 2");
        let longest_lyndon_suffix = (1..n)
            .map(|start| l.subword(start..n))
            .find(|s| is_lyndon(s, order))
            .expect("the last letter is a Lyndon suffix");
        right == min_suffix && right == longest_lyndon_suffix
    }

    /// Precondition: `l` Lyndon with `|l^l| > 1`.
    /// Law: `l^{lr} ≥ l^r` (the right factor of the left part dominates).
    pub fn right_factor_of_left_part_dominates(l: &Word, order: &AlphabetOrder) -> bool {
        let (left, right) = costandard_factorization(l, order).expect("precondition");
        let (_, left_right) = costandard_factorization(&left, order).expect("|l^l| > 1");
        compare(&left_right, &right, order) != Ordering::Less
    }

    /// Precondition: `l` Lyndon with `|l| ≥ 2`.
    /// Law: the standard left part is the longest proper Lyndon prefix.
    pub fn left_factor_is_biggest_lyndon_prefix(l: &Word, order: &AlphabetOrder) -> bool {
        let (left, _) = standard_factorization(l, order).expect("precondition");
        let longest = (1..l.len())
            .rev()
            .map(|cut| l.subword(0..cut))
            .find(|p| is_lyndon(p, order))
            .expect("single letters are Lyndon");
        left == longest
    }

    /// Precondition: `l` Lyndon with `|l^{rs}| > 1`.
    /// Law: `(l^{rs})^{ls} ≤ l^{ls}` (the left factor of the right part
    /// shrinks).
    pub fn left_factor_of_right_part_shrinks(l: &Word, order: &AlphabetOrder) -> bool {
        let (left, right) = standard_factorization(l, order).expect("precondition");
        let (right_left, _) = standard_factorization(&right, order).expect("|l^{rs}| > 1");
        compare(&right_left, &left, order) != Ordering::Greater
    }

    /// The suffix ladder of a splitting `l = l1·l2`: the words
    /// `l2, l1^r·l2, l1^{lr}·l1^r·l2, …`, obtained by repeatedly peeling the
    /// costandard right factor off what remains of `l1`.
    fn suffix_ladder(l1: &Word, l2: &Word, order: &AlphabetOrder) -> Vec<Word> {
        let mut ladder = vec![l2.clone()];
        let mut rem = l1.clone();
        let mut acc = l2.clone();
        while rem.len() > 1 {
            let (left, right) = costandard_factorization(&rem, order).expect("rem is Lyndon");
            acc = right.concat(&acc);
            ladder.push(acc.clone());
            rem = left;
        }
        ladder
    }

    /// Precondition: `l1`, `l2` and `l = l1·l2` all Lyndon.
    /// Law: `l^r` lies on the suffix ladder of the splitting, and every
    /// ladder element up to `l^r` is Lyndon.
    pub fn right_factor_lies_on_suffix_ladder(
        l1: &Word,
        l2: &Word,
        order: &AlphabetOrder,
    ) -> bool {
        let l = l1.concat(l2);
        let (_, right) = costandard_factorization(&l, order).expect("l is Lyndon");
        let ladder = suffix_ladder(l1, l2, order);
        let Some(pos) = ladder.iter().position(|u| *u == right) else {
            return false;
        };
        ladder[..=pos].iter().all(|u| is_lyndon(u, order))
    }

    /// Precondition: `l1`, `l2` and `l = l1·l2` all Lyndon, `|l1| > 1`.
    /// Law: `l2 = l^r ⟺ l1^r ≥ l2`.
    pub fn right_factor_ladder_alternative(l1: &Word, l2: &Word, order: &AlphabetOrder) -> bool {
        let l = l1.concat(l2);
        let (_, right) = costandard_factorization(&l, order).expect("l is Lyndon");
        let (_, l1_right) = costandard_factorization(l1, order).expect("|l1| > 1");
        let is_costandard = right == *l2;
        let dominates = compare(&l1_right, l2, order) != Ordering::Less;
        is_costandard == dominates
    }

    /// Precondition: `l1`, `l2` and `l = l1·l2` all Lyndon, `|l1| > 1`,
    /// and `l2 ≠ l^r`.
    /// Law: with `u = l1^l`, `v = l1^r`: `v·l2` is Lyndon, `u·l2` is Lyndon,
    /// and both rearrangements `u·l2·v` and `v·u·l2` exceed `l`.
    pub fn rotated_splits_exceed(l1: &Word, l2: &Word, order: &AlphabetOrder) -> bool {
        let l = l1.concat(l2);
        let (u, v) = costandard_factorization(l1, order).expect("|l1| > 1");
        let v_l2 = v.concat(l2);
        let u_l2 = u.concat(l2);
        let u_l2_v = u_l2.concat(&v);
        let v_u_l2 = v.concat(&u_l2);
        is_lyndon(&v_l2, order)
            && is_lyndon(&u_l2, order)
            && compare(&u_l2_v, &l, order) == Ordering::Greater
            && compare(&v_u_l2, &l, order) == Ordering::Greater
    }

    /// Precondition: `l1`, `l2` and `l = l1·l2` all Lyndon.
    /// Law: the prefix ladder `u_1 = l1, v_1 = l2`,
    /// `u_{i+1} = u_i·v_i^{ls}, v_{i+1} = v_i^{rs}` (running while
    /// `|v_i| > 1` and `v_i^{ls} > u_i`) consists of Lyndon words and stops
    /// exactly at `u_n = l^{ls}`.
    pub fn prefix_ladder_reaches_left_factor(
        l1: &Word,
        l2: &Word,
        order: &AlphabetOrder,
    ) -> bool {
        let l = l1.concat(l2);
        let (target, _) = standard_factorization(&l, order).expect("l is Lyndon");
        let mut u = l1.clone();
        let mut v = l2.clone();
        loop {
            if !is_lyndon(&u, order) {
                return false;
            }
            if v.len() == 1 {
                break;
            }
            let (v_left, v_right) = standard_factorization(&v, order).expect("v is Lyndon");
            if compare(&v_left, &u, order) != Ordering::Greater {
                break;
            }
            u = u.concat(&v_left);
            v = v_right;
        }
        u == target
    }

    /// Precondition: `v` Lyndon, `w` nonempty, and `v·w` Lyndon.
    /// Law: the canonical factors of `w` satisfy `w_1 ≥ … ≥ w_N > v`.
    pub fn canonical_tail_factors_dominate_head(
        v: &Word,
        w: &Word,
        order: &AlphabetOrder,
    ) -> bool {
        let factors = canonical_factorization(w, order);
        let non_increasing = factors
            .windows(2)
            .all(|pair| compare(&pair[0], &pair[1], order) != Ordering::Less);
        let last = factors.last().expect("w is nonempty");
        non_increasing && compare(last, v, order) == Ordering::Greater
    }

    /// Precondition: `v` Lyndon, `w` nonempty, and `v·w` Lyndon.
    /// Law: every partial product `v·w_1·…·w_j` over canonical factors of `w`
    /// is Lyndon.
    pub fn growing_prefixes_stay_lyndon(v: &Word, w: &Word, order: &AlphabetOrder) -> bool {
        let mut acc = v.clone();
        for factor in canonical_factorization(w, order) {
            acc = acc.concat(&factor);
            if !is_lyndon(&acc, order) {
                return false;
            }
        }
        true
    }

    /// Precondition: `w` Lyndon, `v` nonempty, and `v·w` Lyndon.
    /// Law: every partial product `v_j·…·v_N·w` over canonical factors of `v`
    /// is Lyndon.
    pub fn growing_suffixes_stay_lyndon(v: &Word, w: &Word, order: &AlphabetOrder) -> bool {
        let mut acc = w.clone();
        for factor in canonical_factorization(v, order).into_iter().rev() {
            acc = factor.concat(&acc);
            if !is_lyndon(&acc, order) {
                return false;
            }
        }
        true
    }

    /// Law (any word): if some rotation of `w` is Lyndon, its cut offset is a
    /// canonical-factor boundary of `w`.
    pub fn lyndon_rotation_cuts_at_factor_boundary(w: &Word, order: &AlphabetOrder) -> bool {
        let Some((_, offset)) = lyndon_rotation(w, order) else {
            return true;
        };
        let mut boundaries = vec![0usize];
        let mut pos = 0;
        for factor in canonical_factorization(w, order) {
            pos += factor.len();
            boundaries.push(pos);
        }
        boundaries.contains(&offset)
    }

    /// Law (any word with a Lyndon rotation `l` cut at offset `r`, any
    /// `k ≥ 1`): `w^k = w[..r] · l^{k−1} · w[r..]`.
    pub fn rotation_of_power_telescopes(w: &Word, k: usize, order: &AlphabetOrder) -> bool {
        let Some((l, offset)) = lyndon_rotation(w, order) else {
            return true;
        };
        let power = w.repeated(k.max(1)).expect("k >= 1");
        let mut expect = Vec::new();
        expect.extend_from_slice(&w.letters()[..offset]);
        for _ in 0..k.max(1) - 1 {
            expect.extend_from_slice(l.letters());
        }
        expect.extend_from_slice(&w.letters()[offset..]);
        power.letters() == expect.as_slice()
    }

    /// Precondition: `l` Lyndon.
    /// Law: `l > w` if and only if `l` exceeds the first canonical factor of
    /// `w`.
    pub fn comparison_decided_by_first_factor(l: &Word, w: &Word, order: &AlphabetOrder) -> bool {
        let first = canonical_factorization(w, order).into_iter().next().expect("w is nonempty");
        (compare(l, w, order) == Ordering::Greater)
            == (compare(l, &first, order) == Ordering::Greater)
    }

    /// Precondition: `w` and `l` Lyndon with `|w| < |l|` and `|l| ≥ 2`.
    /// Law: with `(u, _) = standard factorization of l`: `w > u ⟺ w > l`.
    pub fn longer_lyndon_decided_by_left_factor(
        w: &Word,
        l: &Word,
        order: &AlphabetOrder,
    ) -> bool {
        let (u, _) = standard_factorization(l, order).expect("precondition");
        (compare(w, &u, order) == Ordering::Greater)
            == (compare(w, l, order) == Ordering::Greater)
    }
}
