//! Standard Lyndon words of affine root systems.
//!
//! An [`SLTable`] assigns to every positive affine root its *standard Lyndon
//! word* under the system's alphabet order, by induction on height:
//!
//! * a simple root `α_i` gets the one-letter word `[i]`;
//! * a real root `α` gets the lexicographically largest concatenation
//!   `SL(γ_1)·SL(γ_2)` over all decompositions `α = γ_1 + γ_2` into positive
//!   (extended) roots with `SL(γ_1) < SL(γ_2)` whose loop-algebra bracket is
//!   nonzero;
//! * an imaginary degree `kδ` gets `rank` words `SL_1(kδ) > … > SL_n(kδ)`:
//!   candidates are the concatenations coming from real + real
//!   decompositions, scanned in decreasing order, keeping each word whose
//!   bracketing direction is independent of those already kept.
//!
//! The kept Cartan directions form the nested *flag* at level `k`, exposed
//! via [`SLTable::flag`]. Tables can be serialized to a JSON cache holding
//! only the words; loading replays every bracketing and rebuilds the flags,
//! rejecting caches that fail those checks.
//!
//! ```
//! use aslw::rootsystem::AffineSystem;
//! use aslw::slw::SLTable;
//!
//! let sys = AffineSystem::from_descriptor("A1:0,1")?;
//! let mut table = SLTable::new(sys);
//! table.generate_up_to(2)?;
//! assert_eq!(table.imaginary_words(1).unwrap()[0].to_string(), "01");
//! assert_eq!(table.real_word(&"1,2".parse()?).unwrap().to_string(), "011");
//! # Ok::<(), aslw::Error>(())
//! ```

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::io;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liealg::{
    base_letter, bracket, standard_bracketing, BracketingRecursion, DirectionSpan, LieError,
    LoopElement,
};
use crate::rootsystem::{
    AffineSystem, DegreeVector, ExtRoot, RootClass, RootSystemError,
};
use crate::words::{compare, is_lyndon, AlphabetOrder, Letter, Word, WordError};

/// Errors produced while generating or (de)serializing standard-word tables.
#[derive(Debug, Error)]
pub enum SlwError {
    /// A word-level operation failed.
    #[error(transparent)]
    Word(#[from] WordError),
    /// A root-system operation failed.
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    /// A bracketing could not be evaluated.
    #[error(transparent)]
    Lie(#[from] LieError),
    /// No decomposition of the degree admits a nonzero bracket.
    #[error("no standard-word candidate for degree {0} admits a nonzero bracketing")]
    NoAdmissibleCandidate(String),
    /// Fewer independent imaginary directions than the rank requires.
    #[error("found only {found} independent imaginary directions at level {k} (need {need})")]
    ImaginaryRankDeficit {
        /// The imaginary level `kδ`.
        k: i64,
        /// Number of independent directions found.
        found: usize,
        /// Required number (the classical rank).
        need: usize,
    },
    /// The cache belongs to a different system than requested.
    #[error("cache does not match the requested system: {0}")]
    CacheMismatch(String),
    /// The cache failed verification while being replayed.
    #[error("cache is internally inconsistent: {0}")]
    CacheCorrupt(String),
    /// An I/O failure while reading or writing a cache.
    #[error("cache I/O failure: {0}")]
    Io(#[from] io::Error),
    /// A JSON (de)serialization failure.
    #[error("cache serialization failure: {0}")]
    Json(#[from] serde_json::Error),
}

/// The table of standard Lyndon words of one affine system under one
/// alphabet order.
#[derive(Debug, Clone)]
pub struct SLTable {
    sys: AffineSystem,
    mode: BracketingRecursion,
    reals: BTreeMap<DegreeVector, Word>,
    imaginary: BTreeMap<i64, Vec<Word>>,
    values: BTreeMap<ExtRoot, LoopElement>,
    flags: BTreeMap<i64, Vec<DirectionSpan>>,
    watermark_k: i64,
}

#[derive(Serialize, Deserialize)]
struct CacheSystem {
    r#type: String,
    rank: usize,
    order: String,
}

#[derive(Serialize, Deserialize)]
struct CacheWord {
    degree: Vec<i64>,
    imagslot: Option<usize>,
    word: String,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    system: CacheSystem,
    delta: Vec<i64>,
    watermark_k: i64,
    words: Vec<CacheWord>,
}

impl SLTable {
    /// An empty table (nothing generated yet) using the costandard
    /// bracketing recursion.
    pub fn new(sys: AffineSystem) -> Self {
        Self::with_mode(sys, BracketingRecursion::Costandard)
    }

    /// An empty table evaluating bracketings with the given recursion.
    pub fn with_mode(sys: AffineSystem, mode: BracketingRecursion) -> Self {
        Self {
            sys,
            mode,
            reals: BTreeMap::new(),
            imaginary: BTreeMap::new(),
            values: BTreeMap::new(),
            flags: BTreeMap::new(),
            watermark_k: 0,
        }
    }

    /// The underlying system.
    pub fn system(&self) -> &AffineSystem {
        &self.sys
    }

    /// The bracketing recursion used for imaginary selection.
    pub fn mode(&self) -> BracketingRecursion {
        self.mode
    }

    /// Highest fully generated level: every root of height at most
    /// `watermark_k · |δ|` has its word.
    pub fn watermark_k(&self) -> i64 {
        self.watermark_k
    }

    /// The standard word of a real root, if generated.
    pub fn real_word(&self, degree: &DegreeVector) -> Option<&Word> {
        self.reals.get(degree)
    }

    /// The imaginary words `SL_1(kδ) > … > SL_n(kδ)`, if generated
    /// (index 0 holds `SL_1`).
    pub fn imaginary_words(&self, k: i64) -> Option<&[Word]> {
        self.imaginary.get(&k).map(Vec::as_slice)
    }

    /// The word of an extended root, if generated.
    pub fn word_of(&self, root: &ExtRoot) -> Option<&Word> {
        match root {
            ExtRoot::Real(v) => self.real_word(v),
            ExtRoot::Imaginary { k, slot } => {
                self.imaginary.get(k).and_then(|ws| ws.get(slot - 1))
            }
        }
    }

    /// The stored loop element of an extended root, if generated.
    pub fn value_of(&self, root: &ExtRoot) -> Option<&LoopElement> {
        self.values.get(root)
    }

    /// The nested flag of Cartan directions at level `k`: entry `i − 1` is
    /// the span of the directions of `SL_1(kδ), …, SL_i(kδ)`.
    pub fn flag(&self, k: i64) -> Option<&[DirectionSpan]> {
        self.flags.get(&k).map(Vec::as_slice)
    }

    /// Compares two generated extended roots in the induced order (by their
    /// standard words).
    ///
    /// # Panics
    /// Panics if either root has not been generated yet.
    pub fn ext_compare(&self, a: &ExtRoot, b: &ExtRoot) -> Ordering {
        let wa = self.word_of(a).expect("left root not generated");
        let wb = self.word_of(b).expect("right root not generated");
        compare(wa, wb, self.sys.order())
    }

    /// All generated entries in enumeration order (height ascending, reals
    /// before imaginary slots of the same height).
    pub fn entries(&self) -> Vec<(ExtRoot, &Word)> {
        self.sys
            .enumerate_ext(self.watermark_k)
            .into_iter()
            .filter_map(|r| self.word_of(&r).map(|w| (r.clone(), w)))
            .collect()
    }

    /// The generated chain of the real root class of `v`: words of
    /// `rep, rep + δ, rep + 2δ, …` where `rep` is the classical
    /// representative `v mod δ`.
    pub fn chain(&self, v: &DegreeVector) -> Vec<(DegreeVector, &Word)> {
        let (rep, _) = self.sys.mod_delta(v);
        let mut out = Vec::new();
        let mut deg = rep;
        while let Some(w) = self.reals.get(&deg) {
            out.push((deg.clone(), w));
            deg = deg.add(self.sys.delta());
        }
        out
    }

    /// Extends the table so that every root of height at most
    /// `max_k · |δ|` is present. Already-generated levels are kept as-is.
    pub fn generate_up_to(&mut self, max_k: i64) -> Result<(), SlwError> {
        if max_k <= self.watermark_k {
            return Ok(());
        }
        let dh = self.sys.delta_height();
        let floor_h = self.watermark_k * dh;
        for root in self.sys.enumerate_ext(max_k) {
            match &root {
                ExtRoot::Real(v) => {
                    if v.height() > floor_h {
                        self.compute_real(v)?;
                    }
                }
                ExtRoot::Imaginary { k, slot: 1 } => {
                    if *k > self.watermark_k {
                        self.compute_imaginary(*k)?;
                    }
                }
                ExtRoot::Imaginary { .. } => {}
            }
        }
        self.watermark_k = max_k;
        Ok(())
    }

    /// Makes sure the strata covering `v` (and everything below) exist.
    pub fn ensure_degree(&mut self, v: &DegreeVector) -> Result<(), SlwError> {
        let dh = self.sys.delta_height();
        let needed = (v.height() + dh - 1).div_euclid(dh);
        self.generate_up_to(needed.max(1))
    }

    /// The standard word of a real root, generating strata on demand.
    pub fn sl_real(&mut self, v: &DegreeVector) -> Result<&Word, SlwError> {
        if self.sys.classify(v) != RootClass::Real {
            return Err(SlwError::NoAdmissibleCandidate(v.to_string()));
        }
        self.ensure_degree(v)?;
        Ok(self.reals.get(v).expect("real root generated by ensure_degree"))
    }

    /// The imaginary words at level `k`, generating strata on demand.
    pub fn sl_imaginary(&mut self, k: i64) -> Result<&[Word], SlwError> {
        self.generate_up_to(k.max(1))?;
        Ok(self.imaginary.get(&k).expect("imaginary level generated").as_slice())
    }

    /// The `(word, loop element)` options an extended-degree summand
    /// contributes: one for a real degree, `rank` (one per slot) for an
    /// imaginary degree.
    fn part_options(&self, d: &DegreeVector) -> Vec<(&Word, &LoopElement)> {
        match self.sys.classify(d) {
            RootClass::Real => {
                let w = self.reals.get(d).expect("summands lie in lower strata");
                let x = self
                    .values
                    .get(&ExtRoot::Real(d.clone()))
                    .expect("value stored with word");
                vec![(w, x)]
            }
            RootClass::Imaginary(k) => {
                let words = self.imaginary.get(&k).expect("summands lie in lower strata");
                (1..=words.len())
                    .map(|slot| {
                        let x = self
                            .values
                            .get(&ExtRoot::Imaginary { k, slot })
                            .expect("value stored with word");
                        (&words[slot - 1], x)
                    })
                    .collect()
            }
            RootClass::NotRoot => unreachable!("decompositions only produce roots"),
        }
    }

    fn compute_real(&mut self, v: &DegreeVector) -> Result<(), SlwError> {
        if self.reals.contains_key(v) {
            return Ok(());
        }
        let order = self.sys.order().clone();
        if v.height() == 1 {
            let id = v.0.iter().position(|&x| x == 1).expect("height-1 degree") as u8;
            let word = Word::from_ids(&[id])?;
            let value = base_letter(&self.sys, Letter(id))?;
            self.values.insert(ExtRoot::Real(v.clone()), value);
            self.reals.insert(v.clone(), word);
            return Ok(());
        }
        let mut best: Option<(Word, LoopElement)> = None;
        for (d1, d2) in self.sys.decompositions(v) {
            for (w1, x1) in self.part_options(&d1) {
                for (w2, x2) in self.part_options(&d2) {
                    let (u, xu, w, xw) = match compare(w1, w2, &order) {
                        Ordering::Less => (w1, x1, w2, x2),
                        Ordering::Greater => (w2, x2, w1, x1),
                        Ordering::Equal => continue,
                    };
                    let cand = u.concat(w);
                    if let Some((bw, _)) = &best {
                        if compare(&cand, bw, &order) != Ordering::Greater {
                            continue;
                        }
                    }
                    let b = bracket(&self.sys, xu, xw);
                    if !b.is_zero() {
                        best = Some((cand, b));
                    }
                }
            }
        }
        let (word, value) =
            best.ok_or_else(|| SlwError::NoAdmissibleCandidate(v.to_string()))?;
        debug_assert!(is_lyndon(&word, &order), "standard words are Lyndon");
        debug_assert_eq!(self.sys.word_degree(&word).expect("valid letters"), *v);
        self.values.insert(ExtRoot::Real(v.clone()), value);
        self.reals.insert(v.clone(), word);
        Ok(())
    }

    fn compute_imaginary(&mut self, k: i64) -> Result<(), SlwError> {
        if self.imaginary.contains_key(&k) {
            return Ok(());
        }
        let order = self.sys.order().clone();
        let rank = self.sys.rank();
        let target = self.sys.delta().scaled(k);
        let mut cands: Vec<Word> = Vec::new();
        for (d1, d2) in self.sys.decompositions(&target) {
            // Imaginary degrees never split an imaginary word off: only
            // real + real decompositions compete.
            if self.sys.classify(&d1) != RootClass::Real
                || self.sys.classify(&d2) != RootClass::Real
            {
                continue;
            }
            let w1 = self.reals.get(&d1).expect("summands lie in lower strata");
            let w2 = self.reals.get(&d2).expect("summands lie in lower strata");
            let cand = match compare(w1, w2, &order) {
                Ordering::Less => w1.concat(w2),
                Ordering::Greater => w2.concat(w1),
                Ordering::Equal => continue,
            };
            cands.push(cand);
        }
        // Largest first; drop duplicate words coming from different splits.
        cands.sort_by(|a, b| compare(b, a, &order));
        cands.dedup();
        let mut span = DirectionSpan::new(rank);
        let mut words: Vec<Word> = Vec::new();
        let mut flags: Vec<DirectionSpan> = Vec::new();
        for cand in cands {
            if words.len() == rank {
                break;
            }
            let b = standard_bracketing(&self.sys, &cand, self.mode)?;
            let Some(dir) = b.cartan_direction() else { continue };
            if span.try_extend(dir) {
                self.values.insert(ExtRoot::Imaginary { k, slot: words.len() + 1 }, b.clone());
                words.push(cand);
                flags.push(span.clone());
            }
        }
        if words.len() < rank {
            return Err(SlwError::ImaginaryRankDeficit { k, found: words.len(), need: rank });
        }
        self.imaginary.insert(k, words);
        self.flags.insert(k, flags);
        Ok(())
    }

    /// Writes the table as a JSON cache (system header plus the plain words;
    /// loop elements and flags are recomputed on load).
    pub fn save_cache<W: io::Write>(&self, sink: W) -> Result<(), SlwError> {
        let mut words: Vec<CacheWord> = self
            .reals
            .iter()
            .map(|(deg, w)| CacheWord {
                degree: deg.0.clone(),
                imagslot: None,
                word: w.to_string(),
            })
            .collect();
        for (k, ws) in &self.imaginary {
            let degree = self.sys.delta().scaled(*k).0;
            for (idx, w) in ws.iter().enumerate() {
                words.push(CacheWord {
                    degree: degree.clone(),
                    imagslot: Some(idx + 1),
                    word: w.to_string(),
                });
            }
        }
        let file = CacheFile {
            system: CacheSystem {
                r#type: self.sys.kind().to_string(),
                rank: self.sys.rank(),
                order: self.sys.order().descriptor(),
            },
            delta: self.sys.delta().0.clone(),
            watermark_k: self.watermark_k,
            words,
        };
        serde_json::to_writer_pretty(sink, &file)?;
        Ok(())
    }

    /// Reads a JSON cache, replaying every bracketing and rebuilding the
    /// flags; any mismatch with the recomputed data is rejected.
    pub fn load_cache<R: io::Read>(source: R) -> Result<SLTable, SlwError> {
        let file: CacheFile = serde_json::from_reader(source)?;
        let kind = file
            .system
            .r#type
            .chars()
            .next()
            .ok_or_else(|| SlwError::CacheMismatch("empty system type".into()))?;
        let ids: Result<Vec<u8>, _> =
            file.system.order.split(',').map(|p| p.trim().parse::<u8>()).collect();
        let ids = ids.map_err(|_| {
            SlwError::CacheMismatch(format!("unreadable order `{}`", file.system.order))
        })?;
        let order = AlphabetOrder::from_ascending(&ids)
            .map_err(|e| SlwError::CacheMismatch(e.to_string()))?;
        let sys = AffineSystem::new(kind, file.system.rank, order)?;
        if sys.delta().0 != file.delta {
            return Err(SlwError::CacheMismatch(format!(
                "cache delta {:?} differs from the system's {:?}",
                file.delta,
                sys.delta().0,
            )));
        }
        let mut table = SLTable::new(sys);
        let mut imaginary: BTreeMap<i64, Vec<(usize, Word)>> = BTreeMap::new();
        for entry in &file.words {
            let degree = DegreeVector(entry.degree.clone());
            if degree.len() != table.sys.rank() + 1 {
                return Err(SlwError::CacheCorrupt(format!(
                    "degree {degree} has the wrong length",
                )));
            }
            let word = Word::parse(&entry.word)
                .map_err(|e| SlwError::CacheCorrupt(format!("word `{}`: {e}", entry.word)))?;
            if table.sys.word_degree(&word).ok() != Some(degree.clone()) {
                return Err(SlwError::CacheCorrupt(format!(
                    "word {word} does not have degree {degree}",
                )));
            }
            if !is_lyndon(&word, table.sys.order()) {
                return Err(SlwError::CacheCorrupt(format!("word {word} is not Lyndon")));
            }
            match (table.sys.classify(&degree), entry.imagslot) {
                (RootClass::Real, None) => {
                    let value = standard_bracketing(&table.sys, &word, table.mode)?;
                    match &value {
                        LoopElement::RealVec { classical, tdeg }
                            if *classical == table.sys.classical_part(&degree)
                                && *tdeg == degree.0[0] => {}
                        _ => {
                            return Err(SlwError::CacheCorrupt(format!(
                                "word {word} does not bracket to its degree {degree}",
                            )));
                        }
                    }
                    table.values.insert(ExtRoot::Real(degree.clone()), value);
                    table.reals.insert(degree, word);
                }
                (RootClass::Imaginary(k), Some(slot)) if slot >= 1 => {
                    imaginary.entry(k).or_default().push((slot, word));
                }
                _ => {
                    return Err(SlwError::CacheCorrupt(format!(
                        "degree {degree} and slot {:?} are inconsistent",
                        entry.imagslot,
                    )));
                }
            }
        }
        for (k, mut slots) in imaginary {
            slots.sort_by_key(|(slot, _)| *slot);
            let expected: Vec<usize> = (1..=table.sys.rank()).collect();
            let got: Vec<usize> = slots.iter().map(|(slot, _)| *slot).collect();
            if got != expected {
                return Err(SlwError::CacheCorrupt(format!(
                    "imaginary level {k} lists slots {got:?}",
                )));
            }
            let mut span = DirectionSpan::new(table.sys.rank());
            let mut words = Vec::new();
            let mut flags = Vec::new();
            for (slot, word) in slots {
                let b = standard_bracketing(&table.sys, &word, table.mode)?;
                let Some(dir) = b.cartan_direction() else {
                    return Err(SlwError::CacheCorrupt(format!(
                        "imaginary word {word} has no Cartan direction",
                    )));
                };
                if !span.try_extend(dir) {
                    return Err(SlwError::CacheCorrupt(format!(
                        "imaginary word {word} repeats a direction at level {k}",
                    )));
                }
                table.values.insert(ExtRoot::Imaginary { k, slot }, b);
                words.push(word);
                flags.push(span.clone());
            }
            table.imaginary.insert(k, words);
            table.flags.insert(k, flags);
        }
        // The cache must cover exactly the roots up to its watermark.
        for root in table.sys.enumerate_ext(file.watermark_k) {
            if table.word_of(&root).is_none() {
                return Err(SlwError::CacheCorrupt(format!(
                    "missing word for {root:?} below watermark {}",
                    file.watermark_k,
                )));
            }
        }
        table.watermark_k = file.watermark_k;
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(desc: &str, k: i64) -> SLTable {
        let sys = AffineSystem::from_descriptor(desc).unwrap();
        let mut t = SLTable::new(sys);
        t.generate_up_to(k).unwrap();
        t
    }

    fn deg(s: &str) -> DegreeVector {
        s.parse().unwrap()
    }

    #[test]
    fn a1_small_table() {
        let t = table("A1:0,1", 2);
        assert_eq!(t.real_word(&deg("0,1")).unwrap().to_string(), "1");
        assert_eq!(t.real_word(&deg("1,0")).unwrap().to_string(), "0");
        assert_eq!(t.imaginary_words(1).unwrap()[0].to_string(), "01");
        assert_eq!(t.real_word(&deg("1,2")).unwrap().to_string(), "011");
        assert_eq!(t.real_word(&deg("2,1")).unwrap().to_string(), "001");
        assert_eq!(t.imaginary_words(2).unwrap()[0].to_string(), "0011");
    }

    #[test]
    fn g2_natural_order_goldens() {
        let t = table("G2:0,1,2", 3);
        let delta_words: Vec<String> =
            t.imaginary_words(1).unwrap().iter().map(Word::to_string).collect();
        assert_eq!(delta_words, ["012221", "012212"]);
        // α_0 + 2δ.
        assert_eq!(t.real_word(&deg("3,4,6")).unwrap().to_string(), "0122012201221");
        // α_1 + kδ = X^k 1 and α_2 + kδ = X^k 2 with X = SL_1(δ).
        assert_eq!(t.real_word(&deg("1,3,3")).unwrap().to_string(), "0122211");
        assert_eq!(t.real_word(&deg("2,5,6")).unwrap().to_string(), "0122210122211");
        assert_eq!(t.real_word(&deg("1,2,4")).unwrap().to_string(), "0122212");
        // (kδ, slot) rows for k = 2.
        let level2: Vec<String> =
            t.imaginary_words(2).unwrap().iter().map(Word::to_string).collect();
        assert_eq!(level2, ["012220122211", "012210122212"]);
    }

    #[test]
    fn f4_and_e6_delta_words() {
        let f4 = table("F4:3,4,0,2,1", 1);
        assert_eq!(f4.imaginary_words(1).unwrap()[0].to_string(), "343210432132");
        let e6 = table("E6:3,0,1,5,4,6,2", 1);
        assert_eq!(e6.imaginary_words(1).unwrap()[0].to_string(), "364503264132");
    }

    #[test]
    fn b4_order_alpha0_plus_8delta() {
        // Deep stratum golden under the order 1 < 2 < 0.
        let sys = AffineSystem::from_descriptor("G2:1,2,0").unwrap();
        let mut t = SLTable::new(sys);
        let target = deg("9,16,24"); // α_0 + 8δ
        t.ensure_degree(&target).unwrap();
        assert_eq!(
            t.real_word(&target).unwrap().to_string(),
            "1222101222102122210101222101222102122210101222102",
        );
    }

    #[test]
    fn chains_follow_mod_delta() {
        // Watermark 4 covers heights up to 24, so the chain of α_1 reaches
        // α_1 + 3δ (height 19).
        let t = table("G2:0,1,2", 4);
        let chain = t.chain(&deg("0,1,0"));
        let words: Vec<String> = chain.iter().map(|(_, w)| w.to_string()).collect();
        assert_eq!(words, ["1", "0122211", "0122210122211", "0122210122210122211"]);
        // Same chain when asked from a deep member.
        assert_eq!(t.chain(&deg("2,5,6")).len(), chain.len());
    }

    #[test]
    fn generation_is_idempotent_and_extensible() {
        let sys = AffineSystem::from_descriptor("G2:0,1,2").unwrap();
        let mut t = SLTable::new(sys);
        t.generate_up_to(2).unwrap();
        let before = t.entries().len();
        t.generate_up_to(1).unwrap();
        assert_eq!(t.entries().len(), before);
        assert_eq!(t.watermark_k(), 2);
        t.generate_up_to(3).unwrap();
        assert!(t.entries().len() > before);
        // Everything enumerable is present.
        for root in t.system().enumerate_ext(3) {
            assert!(t.word_of(&root).is_some(), "{root:?}");
        }
    }

    #[test]
    fn words_are_lyndon_of_their_degree() {
        let t = table("C3:0,1,2,3", 2);
        for (root, w) in t.entries() {
            assert!(is_lyndon(w, t.system().order()), "{w}");
            assert_eq!(
                t.system().word_degree(w).unwrap(),
                root.degree(t.system()),
                "{w}",
            );
        }
        // Imaginary words at a level strictly decrease.
        for k in 1..=2 {
            let ws = t.imaginary_words(k).unwrap();
            for pair in ws.windows(2) {
                assert_eq!(
                    compare(&pair[0], &pair[1], t.system().order()),
                    Ordering::Greater,
                );
            }
        }
    }

    #[test]
    fn flags_are_nested_and_full() {
        let t = table("G2:0,1,2", 3);
        for k in 1..=3 {
            let flags = t.flag(k).unwrap();
            assert_eq!(flags.len(), 2);
            assert_eq!(flags[0].rank(), 1);
            assert_eq!(flags[1].rank(), 2);
            for row in flags[0].rows() {
                assert!(flags[1].contains(row));
            }
        }
    }

    #[test]
    fn ext_compare_orders_by_word() {
        let t = table("G2:0,1,2", 2);
        let a = ExtRoot::Real(deg("1,0,0"));
        let b = ExtRoot::Real(deg("0,1,0"));
        assert_eq!(t.ext_compare(&a, &b), Ordering::Less); // "0" < "1"
        let d1 = ExtRoot::Imaginary { k: 1, slot: 1 };
        let d2 = ExtRoot::Imaginary { k: 1, slot: 2 };
        assert_eq!(t.ext_compare(&d1, &d2), Ordering::Greater); // slots decrease
    }

    #[test]
    fn cache_round_trip() {
        let t = table("G2:1,2,0", 3);
        let mut buf = Vec::new();
        t.save_cache(&mut buf).unwrap();
        let loaded = SLTable::load_cache(buf.as_slice()).unwrap();
        assert_eq!(loaded.watermark_k(), 3);
        assert_eq!(loaded.system().descriptor(), "G2:1,2,0");
        for (root, w) in t.entries() {
            assert_eq!(loaded.word_of(&root), Some(w), "{root:?}");
        }
        for k in 1..=3 {
            assert_eq!(t.flag(k).unwrap(), loaded.flag(k).unwrap());
        }
    }

    #[test]
    fn cache_rejects_tampering() {
        let t = table("A1:0,1", 2);
        let mut buf = Vec::new();
        t.save_cache(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        // Swap the word of α_1 + δ for a word of the wrong degree.
        let bad = text.replace("\"011\"", "\"001\"");
        assert_ne!(text, bad);
        match SLTable::load_cache(bad.as_bytes()) {
            Err(SlwError::CacheCorrupt(_)) => {}
            other => panic!("expected corruption error, got {other:?}"),
        }
    }

    #[test]
    fn sl_real_on_demand() {
        let sys = AffineSystem::from_descriptor("G2:0,1,2").unwrap();
        let mut t = SLTable::new(sys);
        assert_eq!(t.sl_real(&deg("3,4,6")).unwrap().to_string(), "0122012201221");
        // Imaginary degrees are rejected by sl_real.
        assert!(matches!(
            t.sl_real(&deg("1,2,3")),
            Err(SlwError::NoAdmissibleCandidate(_)),
        ));
    }
}
