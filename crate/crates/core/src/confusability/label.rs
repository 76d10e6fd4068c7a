//! Labels: the per-region (count, sign) fingerprint of a word.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::confusability::ext::{region_step, ExtScanner};
use crate::confusability::region::{is_base_root, parse_region};
use crate::error::{Error, Result};
use crate::roots::root3;
use crate::word::{Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabelEntry {
    pub count: u32,
    pub sign: Sign,
}

impl LabelEntry {
    pub fn new(count: u32, sign: Sign) -> Self {
        LabelEntry { count, sign }
    }
}

/// `(root, (c_1, s_1), ..., (c_m, s_m))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    pub root: Word,
    pub entries: Vec<LabelEntry>,
}

impl Label {
    pub fn regions(&self) -> usize {
        self.entries.len()
    }

    pub fn total_count(&self) -> u64 {
        self.entries.iter().map(|e| e.count as u64).sum()
    }

    pub fn all_plus(&self) -> bool {
        self.entries.iter().all(|e| e.sign.is_plus())
    }

    /// Parses `root:(c,s)(c,s)...`. Accepts `−` (U+2212) as a minus sign.
    pub fn parse(text: &str, q: u8) -> Result<Label> {
        let bad = |reason: &str| Error::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let (root, rest) = text.trim().split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let root = Word::parse(root, q)?;
        let mut entries = Vec::new();
        let mut rest = rest.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed entry"))?;
            let (count, sign) = body[..close]
                .split_once(',')
                .ok_or_else(|| bad("entry needs count and sign"))?;
            let count: u32 = count.trim().parse().map_err(|_| bad("bad count"))?;
            let sign = match sign.trim() {
                "+" => Sign::Plus,
                "-" | "\u{2212}" => Sign::Minus,
                _ => return Err(bad("sign must be + or -")),
            };
            entries.push(LabelEntry { count, sign });
            rest = body[close + 1..].trim_start();
        }
        Ok(Label { root, entries })
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.root)?;
        for e in &self.entries {
            write!(f, "({},{})", e.count, e.sign.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::parse(s, 3)
    }
}

/// Label entries of `x` given its `<=3`-root `r`.
pub(crate) fn label_entries(
    scanner: &mut ExtScanner,
    x: &[Symbol],
    r: &[Symbol],
) -> Result<Vec<LabelEntry>> {
    let mut entries = Vec::new();
    let (mut xs, mut rs) = (x, r);
    while !is_base_root(rs) {
        let desc = parse_region(rs)?;
        let step = region_step(scanner, &desc, xs)?;
        entries.push(LabelEntry {
            count: step.count,
            sign: if step.plus { Sign::Plus } else { Sign::Minus },
        });
        xs = &xs[step.star_len..];
        rs = &rs[desc.consumed()..];
        debug_assert!(xs.len() > 64 || root3(xs) == rs, "derived root mismatch");
    }
    Ok(entries)
}

/// `Label(x)`.
pub fn compute_label(x: &Word) -> Label {
    let r = root3(x.as_slice());
    let mut scanner = ExtScanner::new(true);
    let entries = label_entries(&mut scanner, x.as_slice(), &r)
        .expect("every word generates a prefix from its own leading region");
    Label {
        root: x.with_symbols(r),
        entries,
    }
}

/// Entry-wise confusability test on two labels sharing a root.
pub(crate) fn entries_confusable(a: &[LabelEntry], b: &[LabelEntry]) -> bool {
    !a.iter().zip(b).any(|(x, y)| {
        (x.count < y.count && x.sign == Sign::Minus) || (x.count > y.count && y.sign == Sign::Minus)
    })
}

/// Confusability of the words behind two labels. Different roots are never
/// confusable.
pub fn label_confusable(a: &Label, b: &Label) -> Result<bool> {
    if a.root != b.root {
        return Ok(false);
    }
    if a.entries.len() != b.entries.len() {
        return Err(Error::LabelMismatch(a.entries.len(), b.entries.len()));
    }
    Ok(entries_confusable(&a.entries, &b.entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    fn label(s: &str) -> Label {
        Label::parse(s, 3).unwrap()
    }

    #[test]
    fn worked_labels() {
        assert_eq!(compute_label(&w("01210210")), label("01210:(1,+)(2,+)"));
        assert_eq!(compute_label(&w("01201210")), label("01210:(2,+)(1,+)"));
        assert_eq!(compute_label(&w("01210")), label("01210:(1,+)(1,+)"));
        assert_eq!(compute_label(&w("01112110")), label("01210:(1,-)(1,-)"));
    }

    #[test]
    fn zero_region_label() {
        let l = compute_label(&w("0101"));
        assert_eq!(l.to_string(), "01:");
        assert!(l.entries.is_empty());
        assert!(label_confusable(&l, &l).unwrap());
    }

    #[test]
    fn label_text_round_trip() {
        let l = label("01210:(1,\u{2212})(2,+)");
        assert_eq!(l.to_string(), "01210:(1,-)(2,+)");
        assert_eq!(l.to_string().parse::<Label>().unwrap(), l);
        assert!(Label::parse("01210(1,+)", 3).is_err());
        assert!(Label::parse("01210:(1,*)", 3).is_err());
    }

    #[test]
    fn prop13_examples() {
        let a = label("01210:(1,+)(2,+)");
        let b = label("01210:(2,+)(1,+)");
        let c = label("01210:(1,-)(1,-)");
        assert!(label_confusable(&a, &b).unwrap());
        assert!(!label_confusable(&c, &a).unwrap());
        assert!(label_confusable(&a, &a).unwrap());
        assert!(!label_confusable(&a, &label("012:(1,+)")).unwrap());
        assert_eq!(
            label_confusable(&a, &label("01210:(1,+)")),
            Err(Error::LabelMismatch(2, 1))
        );
    }
}
