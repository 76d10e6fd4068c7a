//! Extended regions, special prefixes and triple counts.

use crate::confusability::region::{parse_region, RegionDescriptor};
use crate::error::{Error, Result};
use crate::roots::{root2, RootMode, StreamingRoot};
use crate::word::{format_symbols, Symbol, Word};

/// A `<=3` root stack never shrinks by more than this many symbols below its
/// current length, whatever is pushed next. Checked exhaustively in the tests.
pub(crate) const MAX_EROSION: usize = 3;

/// Reusable scanner for `Ext(reg, x)`.
#[derive(Debug, Clone)]
pub(crate) struct ExtScanner {
    root: StreamingRoot,
    early_exit: bool,
}

impl ExtScanner {
    pub(crate) fn new(early_exit: bool) -> Self {
        ExtScanner {
            root: StreamingRoot::with_target(RootMode::Le3, &[]),
            early_exit,
        }
    }

    /// Length of the longest prefix of `x` whose `<=3`-root is `reg`, and the
    /// number of symbols consumed to find it.
    ///
    /// With early exit, scanning stops once the stack is longer than
    /// `|reg| + MAX_EROSION`: no continuation can bring it back to `reg`.
    pub(crate) fn scan(&mut self, reg: &[Symbol], x: &[Symbol]) -> (Option<usize>, usize) {
        self.root.reset_target(reg);
        let limit = reg.len() + MAX_EROSION;
        let mut best = None;
        let mut scanned = 0;
        for (i, &s) in x.iter().enumerate() {
            self.root.push(s);
            scanned = i + 1;
            if self.root.at_target() {
                best = Some(i + 1);
            } else if self.early_exit && self.root.len() > limit {
                break;
            }
        }
        (best, scanned)
    }
}

/// Everything one region contributes: the extended region `p`, the cut
/// point of the special prefix, and the count/sign pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct RegionStep {
    pub ext_len: usize,
    pub star_len: usize,
    pub count: u32,
    pub plus: bool,
    pub scanned: usize,
}

pub(crate) fn region_step(
    scanner: &mut ExtScanner,
    desc: &RegionDescriptor,
    x: &[Symbol],
) -> Result<RegionStep> {
    let (ext, scanned) = scanner.scan(desc.reg(), x);
    let ext_len = ext.ok_or_else(|| Error::MalformedInput(format_symbols(desc.reg(), 36)))?;
    let p = &x[..ext_len];
    let star_len = p
        .iter()
        .rposition(|&s| s == desc.a())
        .expect("reg ends with ab, so a occurs in p");
    let main = desc.main();
    let count = count_slice(&main, &root2(p), false) as u32;
    let plus = count_slice(&main, p, true) > 0;
    Ok(RegionStep {
        ext_len,
        star_len,
        count,
        plus,
        scanned,
    })
}

#[inline]
fn is_rotation(t: &[Symbol; 3], f: &[Symbol]) -> bool {
    (0..3).any(|k| f[0] == t[k] && f[1] == t[(k + 1) % 3] && f[2] == t[(k + 2) % 3])
}

pub(crate) fn count_slice(t: &[Symbol; 3], x: &[Symbol], rotations: bool) -> usize {
    x.windows(3)
        .filter(|f| {
            if rotations {
                is_rotation(t, f)
            } else {
                *f == &t[..]
            }
        })
        .count()
}

/// Overlapping occurrences of `t` in `x`, or of any rotation of `t` when
/// `rotations` is set.
pub fn count_occurrences(t: &[Symbol; 3], x: &Word, rotations: bool) -> usize {
    count_slice(t, x.as_slice(), rotations)
}

/// `Ext(Reg(r), x)`: the longest prefix of `x` whose `<=3`-root is `reg`.
pub fn ext_prefix(desc: &RegionDescriptor, x: &Word) -> Result<Word> {
    let mut scanner = ExtScanner::new(false);
    let (ext, _) = scanner.scan(desc.reg(), x.as_slice());
    let n = ext.ok_or_else(|| Error::MalformedInput(format_symbols(desc.reg(), x.q())))?;
    Ok(x.with_symbols(x.as_slice()[..n].to_vec()))
}

/// `*Pref(r, x)`: the extended region cut before its last `a`.
pub fn star_pref(r: &Word, x: &Word) -> Result<Word> {
    let desc = parse_region(r.as_slice())?;
    let mut scanner = ExtScanner::new(false);
    let step = region_step(&mut scanner, &desc, x.as_slice())?;
    Ok(x.with_symbols(x.as_slice()[..step.star_len].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::confusability::region::main_and_region;
    use crate::oracle::enumerate_irreducible;
    use crate::roots::RootMode;
    use std::collections::HashSet;

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    #[test]
    fn ext_examples() {
        let d = main_and_region(&w("010201")).unwrap();
        assert_eq!(
            ext_prefix(&d, &w("01102021020120111")).unwrap(),
            w("0110202102")
        );
        let d = main_and_region(&w("012")).unwrap();
        assert_eq!(ext_prefix(&d, &w("012")).unwrap(), w("012"));
        assert_eq!(ext_prefix(&d, &w("0121")).unwrap(), w("012"));
    }

    #[test]
    fn star_pref_examples() {
        assert_eq!(
            star_pref(&w("010201"), &w("01102021020120111")).unwrap(),
            w("01102021")
        );
        let cut = star_pref(&w("012"), &w("012")).unwrap();
        assert_eq!(cut.as_slice(), &[0]);
        assert_eq!(star_pref(&w("012"), &w("012012")).unwrap(), w("0120"));
    }

    #[test]
    fn ext_without_match_is_malformed() {
        let d = main_and_region(&w("012")).unwrap();
        assert!(matches!(
            ext_prefix(&d, &w("0210")),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn counts() {
        assert_eq!(count_occurrences(&[0, 1, 2], &w("0120120"), false), 2);
        assert_eq!(count_occurrences(&[0, 1, 2], &w("120"), true), 1);
        assert_eq!(count_occurrences(&[0, 1, 2], &w("2222"), false), 0);
        assert_eq!(count_occurrences(&[0, 1, 2], &w("01"), true), 0);
    }

    fn push(mut st: Vec<Symbol>, c: Symbol) -> Vec<Symbol> {
        let mut s = StreamingRoot::new(RootMode::Le3);
        s.extend(&st);
        s.push(c);
        st.clear();
        st.extend_from_slice(s.stack());
        st
    }

    /// From every irreducible stack of length <= 12, explore all continuations
    /// that keep the stack within `len + 4`; the stack never drops more than
    /// `MAX_EROSION` below its starting length. Squares have half-length at
    /// most 3, so a deeper erosion would already show up on a suffix of this
    /// length.
    #[test]
    fn erosion_bound_is_exhaustive() {
        for len in 1..=12 {
            for start in enumerate_irreducible(len, 3, RootMode::Le3) {
                if start.as_slice()[0] != 0 {
                    continue;
                }
                let start = start.into_symbols();
                let mut seen: HashSet<Vec<Symbol>> = HashSet::new();
                let mut frontier = vec![start.clone()];
                seen.insert(start);
                while let Some(st) = frontier.pop() {
                    for c in 0..3 {
                        let next = push(st.clone(), c);
                        assert!(next.len() + MAX_EROSION >= len);
                        if next.len() <= len + 4 && seen.insert(next.clone()) {
                            frontier.push(next);
                        }
                    }
                }
            }
        }
    }
}
