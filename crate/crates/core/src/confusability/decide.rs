//! The recursive `<=3`-confusability decision.

use serde::{Deserialize, Serialize};

use crate::confusability::ext::{region_step, ExtScanner};
use crate::confusability::region::{is_base_root, parse_region};
use crate::error::Result;
use crate::roots::root3;
use crate::word::{Symbol, Word};

/// Work counters from one run of [`confuse_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfuseStats {
    /// Regions examined before the answer was known.
    pub levels: usize,
    /// Sum of `|p| + |q|` over all examined regions.
    pub prefix_total: usize,
    /// Symbols pushed through the Ext scanner.
    pub scanned_total: usize,
}

/// Decides whether `x` and `y` share a common `<=3`-descendant.
pub fn confuse(x: &Word, y: &Word) -> bool {
    confuse_with_stats(x, y).0
}

pub fn confuse_with_stats(x: &Word, y: &Word) -> (bool, ConfuseStats) {
    let mut scanner = ExtScanner::new(true);
    let mut stats = ConfuseStats::default();
    let answer = confuse_slices(&mut scanner, x.as_slice(), y.as_slice(), &mut stats)
        .expect("words with a common root always generate their leading regions");
    (answer, stats)
}

/// Same as [`confuse`] with the Ext scan running to the end of every suffix.
pub fn confuse_full_scan(x: &Word, y: &Word) -> bool {
    let mut scanner = ExtScanner::new(false);
    let mut stats = ConfuseStats::default();
    confuse_slices(&mut scanner, x.as_slice(), y.as_slice(), &mut stats)
        .expect("words with a common root always generate their leading regions")
}

pub(crate) fn confuse_slices(
    scanner: &mut ExtScanner,
    x: &[Symbol],
    y: &[Symbol],
    stats: &mut ConfuseStats,
) -> Result<bool> {
    let r = root3(x);
    if r != root3(y) {
        return Ok(false);
    }
    let (mut xs, mut ys, mut rs) = (x, y, &r[..]);
    while !is_base_root(rs) {
        let desc = parse_region(rs)?;
        let p = region_step(scanner, &desc, xs)?;
        let q = region_step(scanner, &desc, ys)?;
        stats.levels += 1;
        stats.prefix_total += p.ext_len + q.ext_len;
        stats.scanned_total += p.scanned + q.scanned;
        let go_on = p.count == q.count
            || (p.count < q.count && p.plus)
            || (p.count > q.count && q.plus);
        if !go_on {
            return Ok(false);
        }
        xs = &xs[p.star_len..];
        ys = &ys[q.star_len..];
        rs = &rs[desc.consumed()..];
    }
    Ok(true)
}
