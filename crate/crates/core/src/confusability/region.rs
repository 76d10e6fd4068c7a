//! The leading region of a `<=3`-irreducible root.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{distinct_count, format_symbols, Symbol, Word};

/// Parse of the first region of a root `r`: `main(r)`, `Reg(r)` and the
/// factorization `Reg(r) = w (abc)^ell ab`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegionDescriptor {
    main: [Symbol; 3],
    reg: [Symbol; 6],
    reg_len: u8,
    w: [Symbol; 3],
    w_len: u8,
    abc: [Symbol; 3],
    ell: u8,
}

impl RegionDescriptor {
    /// First factor of the root with three distinct symbols.
    pub fn main(&self) -> [Symbol; 3] {
        self.main
    }

    pub fn reg(&self) -> &[Symbol] {
        &self.reg[..self.reg_len as usize]
    }

    /// May be empty.
    pub fn w(&self) -> &[Symbol] {
        &self.w[..self.w_len as usize]
    }

    pub fn abc(&self) -> [Symbol; 3] {
        self.abc
    }

    /// The symbol whose last occurrence in the extended region ends the
    /// special prefix.
    pub fn a(&self) -> Symbol {
        self.abc[0]
    }

    pub fn c(&self) -> Symbol {
        self.abc[2]
    }

    pub fn ell(&self) -> usize {
        self.ell as usize
    }

    /// Length of `w (abc)^ell`, the part of the root consumed by this region.
    pub fn consumed(&self) -> usize {
        self.w_len as usize + 3 * self.ell as usize
    }

    pub fn main_word(&self, q: u8) -> Word {
        Word::from_raw(self.main.to_vec(), q)
    }

    pub fn reg_word(&self, q: u8) -> Word {
        Word::from_raw(self.reg().to_vec(), q)
    }

    pub fn w_word(&self, q: u8) -> Word {
        Word::from_raw(self.w().to_vec(), q)
    }

    pub fn abc_word(&self, q: u8) -> Word {
        Word::from_raw(self.abc.to_vec(), q)
    }
}

impl fmt::Debug for RegionDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = 36;
        f.debug_struct("RegionDescriptor")
            .field("main", &format_symbols(&self.main, q))
            .field("reg", &format_symbols(self.reg(), q))
            .field("w", &format_symbols(self.w(), q))
            .field("abc", &format_symbols(&self.abc, q))
            .field("ell", &self.ell)
            .finish()
    }
}

/// Whether the root has at most two distinct symbols. Irreducible words of
/// length four or more always carry three distinct symbols in their first
/// four positions, so only that window is inspected.
#[inline]
pub(crate) fn is_base_root(r: &[Symbol]) -> bool {
    distinct_count(&r[..r.len().min(4)]) < 3
}

/// Slice-level parse. `r` must be `<=3`-irreducible.
pub(crate) fn parse_region(r: &[Symbol]) -> Result<RegionDescriptor> {
    if r.len() < 3 || is_base_root(r) {
        return Err(Error::NoRegion);
    }
    // a missing position compares unequal to everything
    let at = |i: usize| r.get(i).copied();
    let (main, reg_len, w_len, abc, ell): ([Symbol; 3], usize, usize, [Symbol; 3], u8) =
        if r[0] == r[2] {
            let main = [r[1], r[2], r[3]];
            if at(4) != Some(r[1]) {
                (main, 4, 2, [r[0], r[3], r[1]], 0)
            } else if at(5) != Some(r[2]) {
                (main, 5, 3, [r[3], r[1], r[0]], 0)
            } else {
                (main, 6, 1, [r[1], r[0], r[3]], 1)
            }
        } else {
            let main = [r[0], r[1], r[2]];
            if at(3) != Some(r[0]) {
                (main, 3, 1, [r[1], r[2], r[0]], 0)
            } else if at(4) != Some(r[1]) {
                (main, 4, 2, [r[2], r[0], r[1]], 0)
            } else {
                (main, 5, 0, [r[0], r[1], r[2]], 1)
            }
        };
    if distinct_count(&main) != 3 {
        return Err(Error::NoRegion);
    }
    let mut desc = RegionDescriptor {
        main,
        reg: [0; 6],
        reg_len: reg_len as u8,
        w: [0; 3],
        w_len: w_len as u8,
        abc,
        ell,
    };
    desc.reg[..reg_len].copy_from_slice(&r[..reg_len]);
    desc.w[..w_len].copy_from_slice(&r[..w_len]);
    debug_assert!(reg_matches_parse(&desc));
    Ok(desc)
}

/// `reg == w (abc)^ell ab`.
pub(crate) fn reg_matches_parse(d: &RegionDescriptor) -> bool {
    let mut rebuilt = d.w().to_vec();
    for _ in 0..d.ell {
        rebuilt.extend_from_slice(&d.abc);
    }
    rebuilt.extend_from_slice(&d.abc[..2]);
    rebuilt == d.reg()
}

/// `main(r)` and `Reg(r)` of a `<=3`-irreducible root.
pub fn main_and_region(r: &Word) -> Result<RegionDescriptor> {
    parse_region(r.as_slice())
}

/// Number of regions: how many times the leading region can be peeled
/// (`r <- r \ w(abc)^ell`) before fewer than three distinct symbols remain.
pub fn count_regions(r: &Word) -> usize {
    count_regions_slice(r.as_slice())
}

pub(crate) fn count_regions_slice(mut r: &[Symbol]) -> usize {
    let mut m = 0;
    while let Ok(d) = parse_region(r) {
        m += 1;
        r = &r[d.consumed()..];
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    fn check(r: &str, main: &str, reg: &str, wpart: &str, abc: &str, ell: usize) {
        let d = main_and_region(&w(r)).unwrap();
        assert_eq!(d.main_word(3).to_string(), main, "main of {r}");
        assert_eq!(d.reg_word(3).to_string(), reg, "reg of {r}");
        assert_eq!(d.w_word(3).to_string(), wpart, "w of {r}");
        assert_eq!(d.abc_word(3).to_string(), abc, "abc of {r}");
        assert_eq!(d.ell(), ell, "ell of {r}");
    }

    #[test]
    fn region_examples() {
        check("010201", "102", "0102", "01", "021", 0);
        check("012", "012", "012", "0", "120", 0);
        check("01201", "012", "01201", "", "012", 1);
    }

    #[test]
    fn region_case_table() {
        // r1 = r3 branches
        check("0102", "102", "0102", "01", "021", 0);
        check("01021", "102", "01021", "010", "210", 0);
        check("010210", "102", "010210", "0", "102", 1);
        // r1 != r3 branches
        check("0121", "012", "012", "0", "120", 0);
        check("0120", "012", "0120", "01", "201", 0);
        check("012010", "012", "01201", "", "012", 1);
    }

    #[test]
    fn no_region() {
        assert_eq!(main_and_region(&w("010")), Err(Error::NoRegion));
        assert_eq!(main_and_region(&w("01")), Err(Error::NoRegion));
        assert_eq!(main_and_region(&w("0")), Err(Error::NoRegion));
    }

    #[test]
    fn region_counts() {
        assert_eq!(count_regions(&w("01210")), 2);
        assert_eq!(count_regions(&w("012")), 1);
        assert_eq!(count_regions(&w("010")), 0);
        assert_eq!(count_regions(&w("0")), 0);
    }
}
