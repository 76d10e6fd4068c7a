//! Duplication roots.
//!
//! For every `k` the `k`-root of a word is unique, and so is the `<=k`-root
//! for `k <= 3`. Both are computed by removing duplicates of increasing
//! length; [`StreamingRoot`] maintains the `<=k`-root of a growing prefix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{dedup_pass, has_suffix_square, Symbol, Word};

/// Bound on the duplication length for `<=k`-roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootMode {
    Le1,
    Le2,
    Le3,
}

impl RootMode {
    pub fn k(self) -> usize {
        match self {
            RootMode::Le1 => 1,
            RootMode::Le2 => 2,
            RootMode::Le3 => 3,
        }
    }

    pub fn from_k(k: usize) -> Option<Self> {
        match k {
            1 => Some(RootMode::Le1),
            2 => Some(RootMode::Le2),
            3 => Some(RootMode::Le3),
            _ => None,
        }
    }
}

/// `R_{<=k}(x)`: remove all 1-duplicates, then all 2-duplicates, and so on
/// up to `k`.
pub fn root_le_k(x: &Word, mode: RootMode) -> Word {
    x.with_symbols(root_le_slice(x.as_slice(), mode))
}

pub(crate) fn root_le_slice(x: &[Symbol], mode: RootMode) -> Vec<Symbol> {
    let mut r = dedup_pass(x, 1);
    for k in 2..=mode.k() {
        r = dedup_pass(&r, k);
    }
    r
}

/// `R_k(x)`: the unique word obtained by removing `k`-duplicates until none
/// remain.
pub fn root_exact_k(x: &Word, k: usize) -> Word {
    x.with_symbols(dedup_pass(x.as_slice(), k.max(1)))
}

/// Streaming single-pass `<=3`-root, used on the hot paths.
pub(crate) fn root3(x: &[Symbol]) -> Vec<Symbol> {
    let mut s = StreamingRoot::new(RootMode::Le3);
    for &c in x {
        s.push(c);
    }
    s.into_stack()
}

pub(crate) fn root2(x: &[Symbol]) -> Vec<Symbol> {
    let mut s = StreamingRoot::new(RootMode::Le2);
    for &c in x {
        s.push(c);
    }
    s.into_stack()
}

/// The `<=k`-root of the prefix consumed so far.
///
/// Each push can only create a square that ends at the new symbol, so after
/// a push it suffices to look for suffix squares of half-length `1..=k` and
/// drop the second copy.
///
/// Optionally tracks whether the stack equals a fixed target word in O(1)
/// per push: a flag per stack entry records whether the stack prefix ending
/// there agrees with the target.
#[derive(Debug, Clone)]
pub struct StreamingRoot {
    mode: RootMode,
    stack: Vec<Symbol>,
    target: Vec<Symbol>,
    agrees: Vec<bool>,
    tracking: bool,
}

impl StreamingRoot {
    pub fn new(mode: RootMode) -> Self {
        StreamingRoot {
            mode,
            stack: Vec::new(),
            target: Vec::new(),
            agrees: Vec::new(),
            tracking: false,
        }
    }

    /// A streaming root that can answer "is the root equal to `target`".
    pub fn with_target(mode: RootMode, target: &[Symbol]) -> Self {
        StreamingRoot {
            mode,
            stack: Vec::new(),
            target: target.to_vec(),
            agrees: Vec::new(),
            tracking: true,
        }
    }

    /// Restarts from the empty prefix, keeping mode and target.
    pub fn clear(&mut self) {
        self.stack.clear();
        self.agrees.clear();
    }

    pub(crate) fn reset_target(&mut self, target: &[Symbol]) {
        self.clear();
        self.target.clear();
        self.target.extend_from_slice(target);
        self.tracking = true;
    }

    pub fn mode(&self) -> RootMode {
        self.mode
    }

    pub fn stack(&self) -> &[Symbol] {
        &self.stack
    }

    pub fn len(&self) -> usize {
        self.stack.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stack.is_empty()
    }

    pub fn into_stack(self) -> Vec<Symbol> {
        self.stack
    }

    pub fn push(&mut self, s: Symbol) {
        self.stack.push(s);
        if self.tracking {
            let i = self.stack.len() - 1;
            let prev = i == 0 || self.agrees[i - 1];
            self.agrees
                .push(prev && i < self.target.len() && self.target[i] == s);
        }
        while let Some(j) = self.suffix_square() {
            let keep = self.stack.len() - j;
            self.stack.truncate(keep);
            if self.tracking {
                self.agrees.truncate(keep);
            }
        }
    }

    /// Consumes a whole word.
    pub fn extend(&mut self, symbols: &[Symbol]) {
        for &s in symbols {
            self.push(s);
        }
    }

    /// True when the current root equals the tracked target.
    pub fn at_target(&self) -> bool {
        debug_assert!(self.tracking, "no target configured");
        let n = self.stack.len();
        n == self.target.len() && (n == 0 || self.agrees[n - 1])
    }

    fn suffix_square(&self) -> Option<usize> {
        (1..=self.mode.k()).find(|&j| has_suffix_square(&self.stack, j))
    }
}

/// `push` as a value-to-value step.
pub fn streaming_push(mut state: StreamingRoot, s: Symbol) -> StreamingRoot {
    state.push(s);
    state
}

/// Which root equality [`confusable_root_based`] should test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootKind {
    /// `k`-confusability for a fixed duplication length.
    Exact(usize),
    Le1,
    Le2,
    /// Rejected: equal `<=3`-roots are necessary but not sufficient.
    Le3,
}

/// Confusability decided by root equality, valid for exact-`k` and for
/// `<=1`, `<=2`.
pub fn confusable_root_based(x: &Word, y: &Word, kind: RootKind) -> Result<bool> {
    if x.q() != y.q() {
        return Err(Error::AlphabetMismatch(x.q(), y.q()));
    }
    let (a, b) = (x.as_slice(), y.as_slice());
    Ok(match kind {
        RootKind::Exact(k) => dedup_pass(a, k.max(1)) == dedup_pass(b, k.max(1)),
        RootKind::Le1 => root_le_slice(a, RootMode::Le1) == root_le_slice(b, RootMode::Le1),
        RootKind::Le2 => root_le_slice(a, RootMode::Le2) == root_le_slice(b, RootMode::Le2),
        RootKind::Le3 => {
            return Err(Error::UnsupportedKind(
                "<=3 (use the confusability decision procedure)",
            ))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    fn stream(mode: RootMode, s: &str) -> StreamingRoot {
        let mut st = StreamingRoot::new(mode);
        st.extend(w(s).as_slice());
        st
    }

    #[test]
    fn le_roots() {
        assert_eq!(root_le_k(&w("01012012"), RootMode::Le3), w("012"));
        assert_eq!(root_le_k(&w("012012"), RootMode::Le2), w("012012"));
        assert_eq!(root_le_k(&w("0"), RootMode::Le3), w("0"));
    }

    #[test]
    fn exact_roots() {
        assert_eq!(root_exact_k(&w("01211210"), 3), w("01210"));
        assert_eq!(root_exact_k(&w("0101"), 2), w("01"));
        assert_eq!(root_exact_k(&w("012"), 5), w("012"));
    }

    #[test]
    fn streaming_examples() {
        let st = stream(RootMode::Le2, "012");
        let st = streaming_push(streaming_push(st, 1), 2);
        assert_eq!(st.stack(), &[0, 1, 2]);

        let st = streaming_push(stream(RootMode::Le3, "01201"), 2);
        assert_eq!(st.stack(), &[0, 1, 2]);

        let st = streaming_push(stream(RootMode::Le1, "0"), 0);
        assert_eq!(st.stack(), &[0]);
    }

    #[test]
    fn target_tracking() {
        let mut st = StreamingRoot::with_target(RootMode::Le3, &[0, 1, 2]);
        let mut hits = vec![];
        for &c in w("0121201212").as_slice() {
            st.push(c);
            hits.push(st.at_target());
        }
        // prefixes 012, 01212, 0121201212 reduce to 012
        let expect: Vec<bool> = (1..=10)
            .map(|n| root3(&w("0121201212").as_slice()[..n]) == vec![0, 1, 2])
            .collect();
        assert_eq!(hits, expect);
        assert!(hits[2] && hits[4]);
    }

    #[test]
    fn root_based_confusability() {
        assert!(!confusable_root_based(&w("012012"), &w("011112"), RootKind::Le2).unwrap());
        for kind in [RootKind::Exact(2), RootKind::Le1, RootKind::Le2] {
            assert!(confusable_root_based(&w("0120"), &w("0120"), kind).unwrap());
        }
        assert!(!confusable_root_based(&w("01012012"), &w("012"), RootKind::Le1).unwrap());
        // no two adjacent symbols agree, so the 1-root is the word itself
        assert_eq!(root_le_k(&w("01012012"), RootMode::Le1), w("01012012"));
        assert!(matches!(
            confusable_root_based(&w("0"), &w("0"), RootKind::Le3),
            Err(Error::UnsupportedKind(_))
        ));
    }
}
