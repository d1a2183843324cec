//! Binary words over the ordered alphabet `A < B`.
//!
//! A [`Word`] packs its symbols into a `u64` with `A = 0`, `B = 1` and the
//! first symbol in the most significant of the `len` used bits, so numeric
//! order of equal-length words is lexicographic order. Positions in every
//! moment-style statistic are 1-based.

use std::borrow::Borrow;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::codes::CodeSpec;
use crate::numtheory::binomial;
use crate::qpoly::QPoly;
use crate::{Error, Exec, Result};

/// Longest supported word.
pub const MAX_LEN: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    A,
    B,
}

impl Symbol {
    fn bit(self) -> u64 {
        match self {
            Symbol::A => 0,
            Symbol::B => 1,
        }
    }
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn shl(x: u64, n: usize) -> u64 {
    if n >= 64 {
        0
    } else {
        x << n
    }
}

fn shr(x: u64, n: usize) -> u64 {
    if n >= 64 {
        0
    } else {
        x >> n
    }
}

/// `Σ i·y_i` over 1-based positions of a 01-sequence.
pub fn moment(bits: impl IntoIterator<Item = bool>) -> u64 {
    bits.into_iter()
        .zip(1u64..)
        .filter(|(b, _)| *b)
        .map(|(_, i)| i)
        .sum()
}

// Field order matters: derived `Ord` compares length first, then the packed
// bits, which is lexicographic within a length.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from its packed form; bits above `len` must be clear.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::TooLong(len));
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::LengthMismatch {
                expected: len,
                actual: 64 - bits.leading_zeros() as usize,
            });
        }
        Ok(Word {
            len: len as u8,
            bits,
        })
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Result<Self> {
        if symbols.len() > MAX_LEN {
            return Err(Error::TooLong(symbols.len()));
        }
        let bits = symbols.iter().fold(0u64, |acc, s| (acc << 1) | s.bit());
        Ok(Word {
            len: symbols.len() as u8,
            bits,
        })
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Symbol at 0-based index `i`.
    pub fn get(&self, i: usize) -> Option<Symbol> {
        (i < self.len()).then(|| {
            if (self.bits >> (self.len() - 1 - i)) & 1 == 1 {
                Symbol::B
            } else {
                Symbol::A
            }
        })
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.len()).map(|i| self.get(i).expect("index in range"))
    }

    pub fn count_b(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn count_a(&self) -> usize {
        self.len() - self.count_b()
    }

    /// Moment of the word read as a 01-sequence (`A = 0`, `B = 1`).
    pub fn moment(&self) -> u64 {
        moment(self.symbols().map(|s| s == Symbol::B))
    }

    /// Packed descent flags: bit `t` is set iff the symbols at shifts `t + 1`
    /// and `t` are `B` then `A`.
    fn descent_bits(&self) -> u64 {
        if self.len < 2 {
            return 0;
        }
        (self.bits >> 1) & !self.bits & low_mask(self.len() - 1)
    }

    pub fn descent_vector(&self) -> DescentVector {
        let len = self.len().saturating_sub(1);
        DescentVector(Word {
            len: len as u8,
            bits: self.descent_bits(),
        })
    }

    /// Major index: the sum of the 1-based positions `i` with
    /// `x_i = B, x_{i+1} = A`.
    pub fn major_index(&self) -> u64 {
        let mut desc = self.descent_bits();
        let top = (self.len() as u64).saturating_sub(1);
        let mut sum = 0;
        while desc != 0 {
            let t = desc.trailing_zeros() as u64;
            sum += top - t;
            desc &= desc - 1;
        }
        sum
    }

    /// Number of maximal blocks of equal symbols.
    pub fn run_number(&self) -> usize {
        if self.len == 0 {
            return 0;
        }
        let changes = (self.bits ^ (self.bits >> 1)) & low_mask(self.len() - 1);
        1 + changes.count_ones() as usize
    }

    /// Removes the symbol at 0-based index `i`.
    pub fn delete(&self, i: usize) -> Result<Word> {
        let len = self.len();
        if i >= len {
            return Err(Error::LengthMismatch {
                expected: len,
                actual: i,
            });
        }
        let high = shr(self.bits, len - i);
        let low = self.bits & low_mask(len - 1 - i);
        Ok(Word {
            len: (len - 1) as u8,
            bits: shl(high, len - 1 - i) | low,
        })
    }

    /// Inserts `symbol` so that it lands at 0-based index `i`.
    pub fn insert(&self, i: usize, symbol: Symbol) -> Result<Word> {
        let len = self.len();
        if len >= MAX_LEN {
            return Err(Error::TooLong(len + 1));
        }
        if i > len {
            return Err(Error::LengthMismatch {
                expected: len,
                actual: i,
            });
        }
        let high = shr(self.bits, len - i);
        let low = self.bits & low_mask(len - i);
        Ok(Word {
            len: (len + 1) as u8,
            bits: shl(high, len - i + 1) | (symbol.bit() << (len - i)) | low,
        })
    }

    /// Distinct words reachable by deleting one symbol.
    pub fn deletion_sphere(&self) -> BTreeSet<Word> {
        (0..self.len())
            .map(|i| self.delete(i).expect("index in range"))
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            f.write_str(match s {
                Symbol::A => "A",
                Symbol::B => "B",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Parses `A`/`B`, accepting `0`/`1` as synonyms.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| match c {
                'A' | '0' => Ok(Symbol::A),
                'B' | '1' => Ok(Symbol::B),
                other => Err(Error::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        Word::from_symbols(&symbols)
    }
}

/// The 01-vector marking descents of a word; length is one less than the
/// word's (zero for words of length at most one).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DescentVector(Word);

impl DescentVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.symbols().map(|s| s == Symbol::B)
    }

    pub fn moment(&self) -> u64 {
        self.0.moment()
    }

    /// The same bits viewed as a word (`0 = A`, `1 = B`).
    pub fn as_word(&self) -> Word {
        self.0
    }
}

impl fmt::Display for DescentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DescentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DescentVector({self})")
    }
}

/// A set of distinct words of one common length.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WordSet {
    word_len: Option<usize>,
    words: BTreeSet<Word>,
}

impl WordSet {
    pub fn new() -> Self {
        WordSet::default()
    }

    pub fn from_words(words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let mut set = WordSet::new();
        for w in words {
            set.insert(w)?;
        }
        Ok(set)
    }

    /// Inserts `w`, returning whether it was new.
    pub fn insert(&mut self, w: Word) -> Result<bool> {
        match self.word_len {
            Some(l) if l != w.len() => return Err(Error::MixedLengths(l, w.len())),
            _ => self.word_len = Some(w.len()),
        }
        Ok(self.words.insert(w))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Common length of the members, `None` while empty.
    pub fn word_len(&self) -> Option<usize> {
        self.word_len
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    /// Members in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Word> + '_ {
        self.words.iter()
    }
}

impl fmt::Debug for WordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.words.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a WordSet {
    type Item = &'a Word;
    type IntoIter = std::collections::btree_set::Iter<'a, Word>;
    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// All words reachable from some member of `c` by one deletion.
pub fn deletion_sphere(c: &WordSet) -> Result<WordSet> {
    let mut out = WordSet::new();
    for w in c {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        for d in w.deletion_sphere() {
            out.insert(d)?;
        }
    }
    Ok(out)
}

/// Lexicographic stream of the words with `alpha` A's and `beta` B's.
#[derive(Debug, Clone)]
pub struct ConstantWeight {
    len: usize,
    next: Option<u64>,
    last: u64,
}

impl ConstantWeight {
    pub fn new(alpha: usize, beta: usize) -> Result<Self> {
        Self::starting_at(alpha, beta, 0)
    }

    /// Stream that begins at the word of lexicographic rank `rank`.
    pub fn starting_at(alpha: usize, beta: usize, rank: u128) -> Result<Self> {
        let len = alpha + beta;
        if len > MAX_LEN {
            return Err(Error::TooLong(len));
        }
        let last = shl(low_mask(beta), alpha);
        let next = unrank_constant_weight(alpha, beta, rank)?.map(|w| w.bits);
        Ok(ConstantWeight { len, next, last })
    }
}

impl Iterator for ConstantWeight {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let x = self.next?;
        self.next = if x == self.last {
            None
        } else {
            // Gosper's hack: next larger integer with the same popcount
            let x = x as u128;
            let c = x & x.wrapping_neg();
            let r = x + c;
            Some(((((r ^ x) >> 2) / c) | r) as u64)
        };
        Some(Word {
            len: self.len as u8,
            bits: x,
        })
    }
}

/// Number of words with `alpha` A's and `beta` B's.
pub fn constant_weight_count(alpha: usize, beta: usize) -> u128 {
    binomial((alpha + beta) as u64, beta as u64).expect("bounded by MAX_LEN")
}

/// The word of lexicographic rank `rank` among those with `alpha` A's and
/// `beta` B's, or `None` past the end.
pub fn unrank_constant_weight(alpha: usize, beta: usize, rank: u128) -> Result<Option<Word>> {
    if alpha + beta > MAX_LEN {
        return Err(Error::TooLong(alpha + beta));
    }
    if rank >= constant_weight_count(alpha, beta) {
        return Ok(None);
    }
    let (mut a, mut b, mut r) = (alpha, beta, rank);
    let mut bits = 0u64;
    while a + b > 0 {
        // words continuing with A come first
        let with_a = if a > 0 {
            constant_weight_count(a - 1, b)
        } else {
            0
        };
        bits <<= 1;
        if r < with_a {
            a -= 1;
        } else {
            r -= with_a;
            bits |= 1;
            b -= 1;
        }
    }
    Ok(Some(Word {
        len: (alpha + beta) as u8,
        bits,
    }))
}

/// Words with `alpha` A's and `beta` B's, lexicographically.
pub fn enumerate_constant_weight(alpha: usize, beta: usize) -> Result<ConstantWeight> {
    ConstantWeight::new(alpha, beta)
}

/// Codewords of `C(α, β, m)`, lexicographically.
pub fn enumerate_code(spec: &CodeSpec) -> impl Iterator<Item = Word> + '_ {
    let n = spec.length() as u64;
    ConstantWeight::new(spec.alpha(), spec.beta())
        .expect("CodeSpec bounds the length")
        .filter(move |w| w.major_index() % n == spec.m() as u64)
}

/// Folds every word of `C(α, β)` in index-ordered chunks and merges the
/// partial results left to right. With `Exec::Parallel` the chunks run on
/// the rayon pool; the merge order keeps results deterministic.
pub fn fold_constant_weight<T, I, F, M>(
    alpha: usize,
    beta: usize,
    exec: Exec,
    init: I,
    fold: F,
    merge: M,
) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, Word) + Sync + Send,
    M: Fn(T, T) -> T,
{
    if alpha + beta > MAX_LEN {
        return Err(Error::TooLong(alpha + beta));
    }
    let total = u64::try_from(constant_weight_count(alpha, beta))
        .map_err(|_| Error::Overflow("constant-weight enumeration size"))?;
    let parts = exec.chunked(total, |lo, hi| {
        let mut acc = init();
        let words = ConstantWeight::starting_at(alpha, beta, lo as u128).expect("length checked");
        for w in words.take((hi - lo) as usize) {
            fold(&mut acc, w);
        }
        acc
    });
    Ok(parts.into_iter().fold(init(), merge))
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn bump(counts: &mut Vec<u64>, k: usize, by: u64) {
    if counts.len() <= k {
        counts.resize(k + 1, 0);
    }
    counts[k] += by;
}

/// `DM(C) = Σ_{x ∈ C} q^{maj(x)}`.
pub fn dm_distribution<I>(c: I) -> QPoly
where
    I: IntoIterator,
    I::Item: Borrow<Word>,
{
    let mut counts = Vec::new();
    for w in c {
        bump(&mut counts, w.borrow().major_index() as usize, 1);
    }
    QPoly::from_coeffs(counts)
}

/// `Σ_{x ∈ C} ||x|| q^{maj(x)}`.
pub fn run_weighted_dm<I>(c: I) -> QPoly
where
    I: IntoIterator,
    I::Item: Borrow<Word>,
{
    let mut counts = Vec::new();
    for w in c {
        let w = w.borrow();
        bump(&mut counts, w.major_index() as usize, w.run_number() as u64);
    }
    QPoly::from_coeffs(counts)
}

/// DM of all of `C(α, β)` without materialising the word set.
pub fn constant_weight_dm(alpha: usize, beta: usize, exec: Exec) -> Result<QPoly> {
    let counts = fold_constant_weight(
        alpha,
        beta,
        exec,
        Vec::new,
        |acc, w| bump(acc, w.major_index() as usize, 1),
        add_counts,
    )?;
    Ok(QPoly::from_coeffs(counts))
}

/// Brute-force `R_r(q)`: DM of the words of `C(α, β)` with exactly `r` runs.
pub fn run_class_dm(alpha: usize, beta: usize, r: usize) -> Result<QPoly> {
    run_class_dm_with(alpha, beta, r, Exec::default())
}

pub fn run_class_dm_with(alpha: usize, beta: usize, r: usize, exec: Exec) -> Result<QPoly> {
    let counts = fold_constant_weight(
        alpha,
        beta,
        exec,
        Vec::new,
        |acc, w| {
            if w.run_number() == r {
                bump(acc, w.major_index() as usize, 1);
            }
        },
        add_counts,
    )?;
    Ok(QPoly::from_coeffs(counts))
}

/// All run classes of `C(α, β)` at once: entry `r` is `R_r(q)` (entries 0
/// and 1 are zero whenever both counts are positive).
pub fn run_class_table(alpha: usize, beta: usize, exec: Exec) -> Result<Vec<QPoly>> {
    let n = alpha + beta;
    let width = n * n.saturating_sub(1) / 2 + 1;
    let flat = fold_constant_weight(
        alpha,
        beta,
        exec,
        || vec![0u64; (n + 1) * width],
        |acc, w| acc[w.run_number() * width + w.major_index() as usize] += 1,
        add_counts,
    )?;
    Ok(flat
        .chunks(width)
        .map(|row| QPoly::from_coeffs(row.iter().copied()))
        .collect())
}
