//! Words over a small alphabet and the elementary tandem-duplication
//! operations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_symbol, Error, Result};

/// A symbol of `Σ_q = {0, .., q-1}`.
pub type Symbol = u8;

/// Largest supported alphabet.
pub const MAX_ALPHABET: u8 = 36;

/// A finite word over `{0, .., q-1}`.
///
/// Words built through the public constructors are never empty. Internal
/// intermediates (for example the `w` part of a region) may be.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    symbols: Vec<Symbol>,
    q: u8,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, q: u8) -> Result<Self> {
        check_alphabet(q)?;
        if symbols.is_empty() {
            return Err(Error::EmptyWord);
        }
        for &s in &symbols {
            check_symbol(s, q)?;
        }
        Ok(Word { symbols, q })
    }

    /// Ternary word from its symbols.
    pub fn ternary(symbols: &[Symbol]) -> Result<Self> {
        Word::new(symbols.to_vec(), 3)
    }

    /// Unchecked constructor; callers guarantee every symbol is below `q`.
    pub(crate) fn from_raw(symbols: Vec<Symbol>, q: u8) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < q));
        Word { symbols, q }
    }

    /// Parses the text form: decimal digits when `q <= 10`, comma-separated
    /// integers otherwise (commas are also accepted for small alphabets).
    pub fn parse(text: &str, q: u8) -> Result<Self> {
        check_alphabet(q)?;
        let text = text.trim();
        let err = |reason: String| Error::Parse {
            text: text.to_string(),
            reason,
        };
        if text.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut symbols = Vec::with_capacity(text.len());
        if text.contains(',') || q > 10 {
            for part in text.split(',') {
                let v: u32 = part
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("{part:?} is not a symbol")))?;
                if v >= q as u32 {
                    return Err(Error::SymbolOutOfRange { symbol: v, q });
                }
                symbols.push(v as Symbol);
            }
        } else {
            for c in text.chars() {
                let v = c
                    .to_digit(10)
                    .ok_or_else(|| err(format!("{c:?} is not a digit")))?;
                if v >= q as u32 {
                    return Err(Error::SymbolOutOfRange { symbol: v, q });
                }
                symbols.push(v as Symbol);
            }
        }
        Word::new(symbols, q)
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn last(&self) -> Option<Symbol> {
        self.symbols.last().copied()
    }

    /// Number of distinct symbols occurring in the word.
    pub fn distinct_symbols(&self) -> usize {
        distinct_count(&self.symbols)
    }

    /// Same alphabet, new symbols.
    pub(crate) fn with_symbols(&self, symbols: Vec<Symbol>) -> Word {
        Word::from_raw(symbols, self.q)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut s = self.symbols.clone();
        s.extend_from_slice(&other.symbols);
        Word::from_raw(s, self.q.max(other.q))
    }
}

fn check_alphabet(q: u8) -> Result<()> {
    if !(2..=MAX_ALPHABET).contains(&q) {
        return Err(Error::BadAlphabet(q as u32));
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbols(&self.symbols, self.q))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Renders symbols in the word text format for alphabet `q`.
pub fn format_symbols(symbols: &[Symbol], q: u8) -> String {
    if q <= 10 {
        symbols.iter().map(|&s| (b'0' + s) as char).collect()
    } else {
        symbols
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub(crate) fn distinct_count(symbols: &[Symbol]) -> usize {
    let mut seen = [false; 256];
    let mut n = 0;
    for &s in symbols {
        if !seen[s as usize] {
            seen[s as usize] = true;
            n += 1;
        }
    }
    n
}

/// A single tandem duplication `T_{i,k}`: the factor of length `length`
/// starting at `index` is inserted again right after itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DuplicationStep {
    pub index: usize,
    pub length: usize,
}

impl DuplicationStep {
    pub fn new(index: usize, length: usize) -> Self {
        DuplicationStep { index, length }
    }

    pub fn fits(&self, word_len: usize) -> bool {
        self.length >= 1 && self.index + self.length <= word_len
    }
}

/// `T_{i,k}(uvw) = uvvw` with `|u| = i` and `|v| = k`.
pub fn tandem_duplicate(x: &Word, step: DuplicationStep) -> Result<Word> {
    if !step.fits(x.len()) {
        return Err(Error::StepOutOfRange {
            index: step.index,
            length: step.length,
            word_len: x.len(),
        });
    }
    Ok(x.with_symbols(duplicate_slice(x.as_slice(), step)))
}

pub(crate) fn duplicate_slice(x: &[Symbol], step: DuplicationStep) -> Vec<Symbol> {
    let DuplicationStep { index: i, length: k } = step;
    let mut out = Vec::with_capacity(x.len() + k);
    out.extend_from_slice(&x[..i + k]);
    out.extend_from_slice(&x[i..]);
    out
}

/// Whether `x[i..i+k] == x[i+k..i+2k]`.
#[inline]
pub(crate) fn square_at(x: &[Symbol], i: usize, k: usize) -> bool {
    i + 2 * k <= x.len() && x[i..i + k] == x[i + k..i + 2 * k]
}

#[inline]
pub(crate) fn has_suffix_square(x: &[Symbol], k: usize) -> bool {
    let n = x.len();
    n >= 2 * k && x[n - 2 * k..n - k] == x[n - k..]
}

/// Removes every `k`-duplicate in one left-to-right sweep.
///
/// The sweep keeps the already-reduced prefix in an output buffer and only
/// ever inspects the square that ends at the newest symbol, which is the
/// only place a cascade can create one.
pub fn remove_duplicates_pass(x: &Word, k: usize) -> Word {
    x.with_symbols(dedup_pass(x.as_slice(), k))
}

pub(crate) fn dedup_pass(x: &[Symbol], k: usize) -> Vec<Symbol> {
    assert!(k >= 1, "duplication length must be positive");
    let mut out: Vec<Symbol> = Vec::with_capacity(x.len());
    for &s in x {
        out.push(s);
        if has_suffix_square(&out, k) {
            out.truncate(out.len() - k);
        }
    }
    out
}

/// How [`is_irreducible`] interprets `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reducibility {
    /// No factor `vv` with `|v| = k`.
    Exact,
    /// No factor `vv` with `|v| <= k`.
    AtMost,
}

pub fn is_irreducible(x: &Word, k: usize, mode: Reducibility) -> bool {
    match mode {
        Reducibility::Exact => !contains_square(x.as_slice(), k),
        Reducibility::AtMost => (1..=k).all(|j| !contains_square(x.as_slice(), j)),
    }
}

pub(crate) fn contains_square(x: &[Symbol], k: usize) -> bool {
    if k == 0 || x.len() < 2 * k {
        return false;
    }
    (0..=x.len() - 2 * k).any(|i| square_at(x, i, k))
}

pub(crate) fn is_le_irreducible(x: &[Symbol], k: usize) -> bool {
    (1..=k).all(|j| !contains_square(x, j))
}

/// `ξ_i(x)`: `x` followed by `i` more copies of its last symbol.
pub fn pad_xi(x: &Word, i: usize) -> Result<Word> {
    let last = x.last().ok_or(Error::EmptyWord)?;
    let mut s = x.as_slice().to_vec();
    s.resize(x.len() + i, last);
    Ok(x.with_symbols(s))
}

pub fn reverse(x: &Word) -> Word {
    let mut s = x.as_slice().to_vec();
    s.reverse();
    x.with_symbols(s)
}
