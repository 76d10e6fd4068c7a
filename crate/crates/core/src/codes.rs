//! Tandem-duplication code constructions and code validation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::confusability::confuse;
use crate::error::{Error, Result};
use crate::oracle::{canonical_irreducible, canonical_slice, decanonicalizer, enumerate_irreducible};
use crate::roots::{root3, RootMode};
use crate::word::{is_le_irreducible, Symbol, Word};

/// Where a code came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    /// Padded irreducible words, `<=k`.
    Irreducible { k: usize },
    Pair { root: String },
    OneRegion { root: String },
    Recursive { root: String },
    Clique { root: String },
    Assembled,
    Custom(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Irreducible { k } => write!(f, "irr:{k}"),
            Provenance::Pair { root } => write!(f, "pair:{root}"),
            Provenance::OneRegion { root } => write!(f, "one-region:{root}"),
            Provenance::Recursive { root } => write!(f, "recursive:{root}"),
            Provenance::Clique { root } => write!(f, "clique:{root}"),
            Provenance::Assembled => f.write_str("assembled"),
            Provenance::Custom(s) => f.write_str(s),
        }
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let root = |r: &str| r.to_string();
        Ok(match s.split_once(':') {
            Some(("irr", k)) => Provenance::Irreducible {
                k: k.parse().map_err(|_| Error::Parse {
                    text: s.into(),
                    reason: "bad duplication bound".into(),
                })?,
            },
            Some(("pair", r)) => Provenance::Pair { root: root(r) },
            Some(("one-region", r)) => Provenance::OneRegion { root: root(r) },
            Some(("recursive", r)) => Provenance::Recursive { root: root(r) },
            Some(("clique", r)) => Provenance::Clique { root: root(r) },
            _ if s == "assembled" => Provenance::Assembled,
            _ => Provenance::Custom(s.to_string()),
        })
    }
}

/// A set of equal-length words meant to be pairwise non-confusable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Code {
    pub n: usize,
    pub q: u8,
    pub words: BTreeSet<Word>,
    pub provenance: Provenance,
}

impl Code {
    pub fn new(n: usize, q: u8, provenance: Provenance) -> Self {
        Code {
            n,
            q,
            words: BTreeSet::new(),
            provenance,
        }
    }

    fn from_symbols(n: usize, q: u8, provenance: Provenance, words: impl IntoIterator<Item = Vec<Symbol>>) -> Self {
        Code {
            n,
            q,
            words: words.into_iter().map(|w| Word::from_raw(w, q)).collect(),
            provenance,
        }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Header `n q size provenance`, then one word per line in
    /// lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {} {}\n", self.n, self.q, self.words.len(), self.provenance);
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Code> {
        let bad = |reason: &str| Error::Parse {
            text: text.lines().next().unwrap_or("").to_string(),
            reason: reason.to_string(),
        };
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| bad("missing header"))?;
        let fields: Vec<&str> = header.splitn(4, ' ').collect();
        if fields.len() < 3 {
            return Err(bad("header needs n, q and size"));
        }
        let n: usize = fields[0].parse().map_err(|_| bad("bad length"))?;
        let q: u8 = fields[1].parse().map_err(|_| bad("bad alphabet size"))?;
        let size: usize = fields[2].parse().map_err(|_| bad("bad size"))?;
        let provenance = fields.get(3).map_or(Ok(Provenance::Custom(String::new())), |p| p.parse())?;
        let mut code = Code::new(n, q, provenance);
        for line in lines {
            let w = Word::parse(line, q)?;
            if w.len() != n {
                return Err(bad(&format!("word {w} has length {} not {n}", w.len())));
            }
            code.words.insert(w);
        }
        if code.words.len() != size {
            return Err(bad(&format!("header says {size} words, found {}", code.words.len())));
        }
        Ok(code)
    }
}

/// Result of [`validate_code`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Validation {
    Valid,
    WrongLength(Word),
    Confusable(Word, Word),
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        *self == Validation::Valid
    }
}

/// Checks lengths and every pair of words sharing a `<=3`-root (words with
/// different roots are never confusable).
pub fn validate_code(code: &Code) -> Validation {
    let mut groups: HashMap<Vec<Symbol>, Vec<&Word>> = HashMap::new();
    for w in &code.words {
        if w.len() != code.n {
            return Validation::WrongLength(w.clone());
        }
        groups.entry(root3(w.as_slice())).or_default().push(w);
    }
    let mut keys: Vec<_> = groups.keys().cloned().collect();
    keys.sort();
    for k in keys {
        let g = &groups[&k];
        for (a, x) in g.iter().enumerate() {
            for y in &g[a + 1..] {
                if confuse(x, y) {
                    return Validation::Confusable((*x).clone(), (*y).clone());
                }
            }
        }
    }
    Validation::Valid
}

fn pad(x: &[Symbol], n: usize) -> Vec<Symbol> {
    let mut v = x.to_vec();
    let last = *x.last().expect("padding a nonempty word");
    v.resize(n.max(x.len()), last);
    v
}

/// All `<=k`-irreducible words of length at most `n`, each padded with its
/// last symbol to length `n`.
pub fn construct_irreducible_code(n: usize, k: usize, q: u8) -> Result<Code> {
    let mode = RootMode::from_k(k).ok_or_else(|| Error::Unsupported(format!("duplication bound {k}")))?;
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    if !(2..=crate::word::MAX_ALPHABET).contains(&q) {
        return Err(Error::BadAlphabet(q as u32));
    }
    let mut words = Vec::new();
    for i in 1..=n {
        words.extend(enumerate_irreducible(i, q, mode).into_iter().map(|x| pad(x.as_slice(), n)));
    }
    Ok(Code::from_symbols(n, q, Provenance::Irreducible { k }, words))
}

fn check_root(r: &Word) -> Result<()> {
    if r.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_le_irreducible(r.as_slice(), 3) {
        return Err(Error::Unsupported(format!("{r} is not <=3-irreducible")));
    }
    Ok(())
}

fn pair_words(r: &[Symbol]) -> [Vec<Symbol>; 2] {
    let i = r.len();
    if r[0] != r[2] {
        let mut x = r[..3].to_vec();
        x.extend_from_slice(r);
        let mut y = vec![r[0]];
        for &s in &r[1..4] {
            y.extend([s, s]);
        }
        y.extend_from_slice(&r[4..]);
        [x, y]
    } else if i == 4 {
        let (a, b, d) = (r[0], r[1], r[3]);
        [vec![a, b, a, d, b, a, d], vec![a, b, a, a, d, d, d]]
    } else {
        let mut x = r[..4].to_vec();
        x.extend_from_slice(&r[1..]);
        let mut y = vec![r[0], r[1], r[0], r[0], r[3], r[3], r[4], r[4]];
        y.extend_from_slice(&r[5..]);
        [x, y]
    }
}

/// Two non-confusable descendants of `r` at length `|r| + 3`.
pub fn construct_pair_code(r: &Word) -> Result<Code> {
    check_root(r)?;
    if r.len() < 4 {
        return Err(Error::Unsupported(format!("root {r} is shorter than 4")));
    }
    Ok(Code::from_symbols(
        r.len() + 3,
        r.q(),
        Provenance::Pair { root: r.to_string() },
        pair_words(r.as_slice()),
    ))
}

/// A root shape with exactly one region, with the two word families that
/// realize an optimal code for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OneRegionPattern {
    base: &'static str,
    x_suffix: &'static str,
    z_suffix: &'static str,
}

const fn pattern(base: &'static str, x_suffix: &'static str, z_suffix: &'static str) -> OneRegionPattern {
    OneRegionPattern {
        base,
        x_suffix,
        z_suffix,
    }
}

static ONE_REGION: [OneRegionPattern; 12] = [
    pattern("012", "112", ""),
    pattern("0120", "11220", "0"),
    pattern("01201", "1122001", "01"),
    pattern("1012", "112", ""),
    pattern("10120", "11220", "0"),
    pattern("101201", "1122001", "01"),
    pattern("0121", "1121", "1"),
    pattern("01202", "112202", "02"),
    pattern("012010", "11220010", "010"),
    pattern("10121", "1121", "1"),
    pattern("101202", "112202", "02"),
    pattern("1012010", "11220010", "010"),
];

/// The twelve one-region root shapes; every one-region ternary root is a
/// relabeling of exactly one of them.
pub fn one_region_patterns() -> &'static [OneRegionPattern] {
    &ONE_REGION
}

fn digits(s: &str) -> impl Iterator<Item = Symbol> + '_ {
    s.bytes().map(|b| b - b'0')
}

impl OneRegionPattern {
    pub fn root(&self) -> Vec<Symbol> {
        digits(self.base).collect()
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn leading_one(&self) -> bool {
        self.base.starts_with('1')
    }

    /// `x(r, l)`: one copy of the region for `l = 1`, and `l - 1` extra
    /// `112200` blocks beyond that.
    pub fn x_word(&self, ell: usize) -> Vec<Symbol> {
        assert!(ell >= 1);
        let mut v: Vec<Symbol> = digits(if self.leading_one() { "10" } else { "0" }).collect();
        for _ in 1..ell {
            v.extend(digits("112200"));
        }
        v.extend(digits(self.x_suffix));
        v
    }

    pub fn x_len(&self, ell: usize) -> usize {
        self.leading_one() as usize + 1 + 6 * (ell - 1) + self.x_suffix.len()
    }

    /// `z(r, l)`: the region repeated `l` times.
    pub fn z_word(&self, ell: usize) -> Vec<Symbol> {
        let mut v: Vec<Symbol> = if self.leading_one() { vec![1] } else { vec![] };
        for _ in 0..ell {
            v.extend([0, 1, 2]);
        }
        v.extend(digits(self.z_suffix));
        v
    }
}

/// Closed-form size of the one-region code for a root of length `r_len`
/// whose second `x` word has length `n2`.
pub fn one_region_size(r_len: usize, n2: usize, n: usize) -> u64 {
    if n >= n2 {
        ((n - n2) / 6 + 3) as u64
    } else if n >= r_len + 3 {
        2
    } else {
        1
    }
}

/// The pattern matching `r` up to relabeling, with the symbol map taking
/// pattern symbols to `r`'s symbols.
pub fn match_one_region(r: &[Symbol]) -> Option<(&'static OneRegionPattern, [Symbol; 3])> {
    let (canon, _) = canonical_slice(r);
    ONE_REGION.iter().find_map(|p| {
        let pr = p.root();
        if pr.len() != r.len() || canonical_slice(&pr).0 != canon {
            return None;
        }
        let mut map = [0; 3];
        for (&a, &b) in pr.iter().zip(r) {
            map[a as usize] = b;
        }
        Some((p, map))
    })
}

fn one_region_words(p: &OneRegionPattern, map: [Symbol; 3], n: usize) -> Vec<Vec<Symbol>> {
    let r_len = p.len();
    let relabel = |v: Vec<Symbol>| -> Vec<Symbol> { pad(&v.into_iter().map(|s| map[s as usize]).collect::<Vec<_>>(), n) };
    if n < r_len + 3 {
        return vec![relabel(p.root())];
    }
    let mut out: Vec<Vec<Symbol>> = (1..).take_while(|&l| p.x_len(l) <= n).map(|l| relabel(p.x_word(l))).collect();
    out.push(relabel(p.z_word((n - r_len) / 3 + 1)));
    out
}

/// Optimal code for a one-region root at length `n`.
pub fn construct_one_region_code(r: &Word, n: usize) -> Result<Code> {
    check_root(r)?;
    if r.q() != 3 {
        return Err(Error::Unsupported("one-region codes are ternary".into()));
    }
    let (p, map) = match_one_region(r.as_slice())
        .ok_or_else(|| Error::Unsupported(format!("{r} does not have exactly one region")))?;
    if n < r.len() {
        return Err(Error::Unsupported(format!("length {n} is shorter than the root {r}")));
    }
    Ok(Code::from_symbols(
        n,
        3,
        Provenance::OneRegion { root: r.to_string() },
        one_region_words(p, map, n),
    ))
}

/// Exact per-root optimum supplied by an outside solver, keyed by the
/// canonical root.
pub trait ExactSource: Sync {
    /// `T(n, r)` with one witness word per codeword, over the canonical
    /// root's symbols.
    fn exact(&self, canonical_root: &Word, n: usize) -> Option<(u64, Vec<Word>)>;
}

/// Ways to prepend a fixed prefix to a code for a shorter root. The digit
/// `j` stands for `r_j`.
struct PrefixRule {
    drop: usize,
    prefixes: &'static [&'static str],
}

static RULES_A: [PrefixRule; 2] = [
    PrefixRule { drop: 1, prefixes: &["1222", "1231"] },
    PrefixRule { drop: 1, prefixes: &["12222222", "12233112", "12312312"] },
];
static RULES_B: [PrefixRule; 2] = [
    PrefixRule { drop: 2, prefixes: &["12223", "12312"] },
    PrefixRule { drop: 2, prefixes: &["1223333333", "1223311223", "1231231233"] },
];
static RULES_C: [PrefixRule; 2] = [
    PrefixRule { drop: 3, prefixes: &["122331", "123123"] },
    PrefixRule { drop: 3, prefixes: &["122331111111", "122331122331", "123123123111"] },
];
static RULE_ABA: [PrefixRule; 1] = [PrefixRule { drop: 1, prefixes: &["1"] }];

fn prefix_rules(r: &[Symbol]) -> &'static [PrefixRule] {
    if r.len() < 3 {
        &[]
    } else if r[0] == r[2] {
        &RULE_ABA
    } else if r.get(3) != Some(&r[0]) {
        &RULES_A
    } else if r.get(4) != Some(&r[1]) {
        &RULES_B
    } else {
        &RULES_C
    }
}

impl PrefixRule {
    fn prefix_len(&self) -> usize {
        self.prefixes[0].len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Choice {
    Single,
    Exact,
    OneRegion,
    Pair,
    Pad,
    Reverse,
    Prefix(u8),
}

/// Per-root lower bounds from the constructions, the prefix table, padding
/// and reversal, memoized over canonical roots.
pub struct Assembler<'a> {
    exact: Option<&'a dyn ExactSource>,
    memo: HashMap<(u128, u8), (u64, Choice)>,
}

fn pack(r: &[Symbol]) -> u128 {
    debug_assert!(r.len() <= 63);
    r.iter().fold(0u128, |k, &s| k << 2 | (s as u128 + 1))
}

fn canon(r: &[Symbol]) -> (Vec<Symbol>, Vec<Symbol>) {
    (canonical_slice(r).0, decanonicalizer(r, 3))
}

impl<'a> Assembler<'a> {
    pub fn new(exact: Option<&'a dyn ExactSource>) -> Self {
        Assembler {
            exact,
            memo: HashMap::new(),
        }
    }

    /// Lower bound on `T(n, r)` for any ternary `<=3`-irreducible `r`.
    pub fn value(&mut self, r: &Word, n: usize) -> Result<u64> {
        check_root(r)?;
        if r.len() > 63 || n > 255 {
            return Err(Error::Unsupported("roots beyond length 63 or codes beyond 255".into()));
        }
        if n < r.len() {
            return Ok(0);
        }
        Ok(self.best(&canonical_slice(r.as_slice()).0, n).0)
    }

    /// Best code for a canonical root.
    fn best(&mut self, c: &[Symbol], n: usize) -> (u64, Choice) {
        let key = (pack(c), n as u8);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut rev = c.to_vec();
        rev.reverse();
        let rev = canonical_slice(&rev).0;
        let mut out = self.core(c, n);
        if out.1 != Choice::Exact && rev != c {
            let other = self.core(&rev, n);
            if other.0 > out.0 {
                out = (other.0, Choice::Reverse);
            }
        }
        self.memo.insert(key, out);
        out
    }

    fn core(&mut self, c: &[Symbol], n: usize) -> (u64, Choice) {
        let i = c.len();
        if let Some(src) = self.exact {
            if let Some((t, _)) = src.exact(&Word::from_raw(c.to_vec(), 3), n) {
                return (t, Choice::Exact);
            }
        }
        let mut best = (1, Choice::Single);
        let offer = |v: u64, ch: Choice, best: &mut (u64, Choice)| {
            if v > best.0 {
                *best = (v, ch);
            }
        };
        if let Some((p, _)) = match_one_region(c) {
            offer(one_region_size(i, p.x_len(2), n), Choice::OneRegion, &mut best);
        }
        for (j, rule) in prefix_rules(c).iter().enumerate() {
            let (tail, m) = (&c[rule.drop..], rule.prefix_len());
            if n >= m && n - m >= tail.len() {
                let t = self.best(&canonical_slice(tail).0, n - m).0;
                offer(t * rule.prefixes.len() as u64, Choice::Prefix(j as u8), &mut best);
            }
        }
        if i >= 4 && n >= i + 3 {
            offer(2, Choice::Pair, &mut best);
        }
        if n > i {
            offer(self.best(c, n - 1).0, Choice::Pad, &mut best);
        }
        best
    }

    /// Words of the best code for a canonical root, over its symbols.
    fn words(&mut self, c: &[Symbol], n: usize) -> Vec<Vec<Symbol>> {
        let (_, choice) = self.best(c, n);
        self.words_for(c, n, choice)
    }

    fn words_for(&mut self, c: &[Symbol], n: usize, choice: Choice) -> Vec<Vec<Symbol>> {
        match choice {
            Choice::Single => vec![pad(c, n)],
            Choice::Exact => {
                let src = self.exact.expect("exact choice needs a source");
                let (_, ws) = src.exact(&Word::from_raw(c.to_vec(), 3), n).expect("exact value vanished");
                ws.into_iter().map(Word::into_symbols).collect()
            }
            Choice::OneRegion => {
                let (p, map) = match_one_region(c).expect("one-region choice");
                one_region_words(p, map, n)
            }
            Choice::Pair => pair_words(c).iter().map(|w| pad(w, n)).collect(),
            Choice::Pad => self.words(c, n - 1).into_iter().map(|w| pad(&w, n)).collect(),
            Choice::Reverse => {
                let mut rev = c.to_vec();
                rev.reverse();
                let (rc, table) = canon(&rev);
                let sub = self.core(&rc, n).1;
                self.words_for(&rc, n, sub)
                    .into_iter()
                    .map(|w| {
                        let mut w: Vec<Symbol> = w.into_iter().map(|s| table[s as usize]).collect();
                        w.reverse();
                        w
                    })
                    .collect()
            }
            Choice::Prefix(j) => {
                let rule = &prefix_rules(c)[j as usize];
                let tail = &c[rule.drop..];
                let (tc, table) = canon(tail);
                let sub = self.words(&tc, n - rule.prefix_len());
                let mut out = Vec::new();
                for p in rule.prefixes {
                    for w in &sub {
                        let mut v: Vec<Symbol> = digits(p).map(|d| c[d as usize - 1]).collect();
                        v.extend(w.iter().map(|&s| table[s as usize]));
                        out.push(v);
                    }
                }
                out
            }
        }
    }

    /// The code behind [`Assembler::value`], over `r`'s own symbols.
    pub fn code(&mut self, r: &Word, n: usize) -> Result<Code> {
        let t = self.value(r, n)?;
        if t == 0 {
            return Err(Error::Unsupported(format!("length {n} is shorter than the root {r}")));
        }
        let (c, table) = canon(r.as_slice());
        let words = self
            .words(&c, n)
            .into_iter()
            .map(|w| w.into_iter().map(|s| table[s as usize]).collect());
        let code = Code::from_symbols(n, 3, Provenance::Recursive { root: r.to_string() }, words);
        debug_assert_eq!(code.len() as u64, t);
        Ok(code)
    }
}

/// Best code for `r` at length `n` from the constructions and the
/// prefix/padding/reversal recursion, checked pairwise before it is returned.
pub fn construct_recursive(r: &Word, n: usize) -> Result<Code> {
    if r.q() != 3 {
        return Err(Error::Unsupported("recursive codes are ternary".into()));
    }
    let code = Assembler::new(None).code(r, n)?;
    match validate_code(&code) {
        Validation::Valid => Ok(code),
        v => Err(Error::Unsupported(format!("recursive code for {r} at {n} failed validation: {v:?}"))),
    }
}

/// Total lower bound on `T(n)` and optionally the full code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub n: usize,
    pub size: u64,
    /// Canonical root text to per-root size.
    pub per_root: BTreeMap<String, u64>,
    pub code: Option<Code>,
}

/// Sums the best per-root codes over all canonical roots of length at most
/// `n`, scaled by orbit size. With `validate`, every per-root code is
/// materialized and checked; with `materialize`, all relabelings are
/// collected into one code.
pub fn assemble_lower_bound(
    n: usize,
    exact: Option<&dyn ExactSource>,
    validate: bool,
    materialize: bool,
) -> Result<LowerBound> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let mut asm = Assembler::new(exact);
    let mut out = LowerBound {
        n,
        size: 0,
        per_root: BTreeMap::new(),
        code: materialize.then(|| Code::new(n, 3, Provenance::Assembled)),
    };
    for r in canonical_irreducible(n, 3, RootMode::Le3) {
        let c = r.as_slice();
        let t = asm.best(c, n).0;
        let orbit = if r.distinct_symbols() == 1 { 3 } else { 6 };
        out.size += orbit * t;
        out.per_root.insert(r.to_string(), t);
        if validate || materialize {
            let words = asm.words(c, n);
            let code = Code::from_symbols(n, 3, Provenance::Recursive { root: r.to_string() }, words);
            if code.len() as u64 != t {
                return Err(Error::Unsupported(format!("code for {r} has {} words, expected {t}", code.len())));
            }
            if validate {
                if let v @ (Validation::Confusable(..) | Validation::WrongLength(_)) = validate_code(&code) {
                    return Err(Error::Unsupported(format!("code for {r} failed validation: {v:?}")));
                }
            }
            if let Some(all) = out.code.as_mut() {
                for perm in PERMUTATIONS {
                    for w in &code.words {
                        all.words.insert(Word::from_raw(w.as_slice().iter().map(|&s| perm[s as usize]).collect(), 3));
                    }
                }
            }
        }
    }
    Ok(out)
}

const PERMUTATIONS: [[Symbol; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::confusability::{compute_label, count_regions, LabelEntry, Sign};

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    fn words(c: &Code) -> Vec<String> {
        c.words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn irreducible_code_sizes() {
        assert_eq!(construct_irreducible_code(6, 3, 3).unwrap().len(), 111);
        assert_eq!(construct_irreducible_code(5, 3, 3).unwrap().len(), 69);
        assert_eq!(words(&construct_irreducible_code(1, 2, 3).unwrap()), ["0", "1", "2"]);
        assert!(validate_code(&construct_irreducible_code(6, 3, 3).unwrap()).is_valid());
        assert!(construct_irreducible_code(6, 4, 3).is_err());
    }

    #[test]
    fn pair_code_examples() {
        assert_eq!(words(&construct_pair_code(&w("0120")).unwrap()), ["0112200", "0120120"]);
        assert_eq!(words(&construct_pair_code(&w("0102")).unwrap()), ["0100222", "0102102"]);
        assert!(construct_pair_code(&w("012")).is_err());
        assert!(construct_pair_code(&w("0112")).is_err());
    }

    #[test]
    fn pair_codes_over_all_roots() {
        for i in 4..=10 {
            for r in enumerate_irreducible(i, 3, RootMode::Le3) {
                let c = construct_pair_code(&r).unwrap();
                assert_eq!(c.len(), 2);
                assert!(validate_code(&c).is_valid(), "{r}");
                let mut firsts: Vec<LabelEntry> = c
                    .words
                    .iter()
                    .map(|x| {
                        let l = compute_label(x);
                        assert_eq!(l.root, r);
                        l.entries[0]
                    })
                    .collect();
                firsts.sort();
                assert_eq!(firsts, [LabelEntry::new(1, Sign::Minus), LabelEntry::new(2, Sign::Plus)], "{r}");
            }
        }
    }

    #[test]
    fn one_region_examples() {
        assert_eq!(construct_one_region_code(&w("012"), 10).unwrap().len(), 3);
        assert_eq!(words(&construct_one_region_code(&w("012"), 6).unwrap()), ["011222", "012012"]);
        assert_eq!(construct_one_region_code(&w("012"), 4).unwrap().len(), 1);
        assert!(construct_one_region_code(&w("01210"), 9).is_err());
    }

    #[test]
    fn patterns_cover_one_region_roots() {
        let mut seen = 0;
        for i in 1..=8 {
            for r in enumerate_irreducible(i, 3, RootMode::Le3) {
                let one = count_regions(&r) == 1;
                assert_eq!(match_one_region(r.as_slice()).is_some(), one, "{r}");
                seen += one as usize;
            }
        }
        assert_eq!(seen, 72);
        for p in one_region_patterns() {
            let r = Word::from_raw(p.root(), 3);
            for l in 1..4 {
                assert_eq!(root3(&p.x_word(l)), p.root());
                assert_eq!(root3(&p.z_word(l)), p.root());
                assert_eq!(p.x_word(l).len(), p.x_len(l));
                assert_eq!(compute_label(&Word::from_raw(p.x_word(l), 3)).entries, [LabelEntry::new(l as u32, Sign::Minus)], "{r}");
                assert_eq!(compute_label(&Word::from_raw(p.z_word(l), 3)).entries, [LabelEntry::new(l as u32, Sign::Plus)], "{r}");
            }
        }
    }

    #[test]
    fn recursive_example() {
        let c = construct_recursive(&w("01210"), 9).unwrap();
        assert!(c.len() >= 2);
        assert!(c.words.iter().all(|x| x.as_slice()[0] == 0));
        for n in 3..=16 {
            assert!(construct_recursive(&w("012"), n).unwrap().len() as u64 >= one_region_size(3, 10, n));
        }
    }

    #[test]
    fn validation_reports_pairs() {
        let mut c = Code::new(6, 3, Provenance::Custom("t".into()));
        c.words.extend([w("012012"), w("011112")]);
        assert!(validate_code(&c).is_valid());
        c.words.insert(w("012")); // wrong length
        assert_eq!(validate_code(&c), Validation::WrongLength(w("012")));
        let mut d = Code::new(6, 3, Provenance::Custom("t".into()));
        d.words.extend([w("012222"), w("011222")]);
        assert_eq!(validate_code(&d), Validation::Confusable(w("011222"), w("012222")));
    }

    #[test]
    fn code_text_round_trip() {
        let c = construct_one_region_code(&w("021"), 10).unwrap();
        let text = c.to_text();
        assert!(text.starts_with("10 3 3 one-region:021\n"));
        assert_eq!(Code::from_text(&text).unwrap(), c);
        assert!(Code::from_text("3 3 2 x\n012\n").is_err());
    }

    #[test]
    fn assembled_small() {
        assert_eq!(assemble_lower_bound(1, None, true, false).unwrap().size, 3);
        let lb = assemble_lower_bound(5, None, true, true).unwrap();
        assert_eq!(lb.size, 69);
        assert_eq!(lb.code.unwrap().len(), 69);
        let lb6 = assemble_lower_bound(6, None, true, true).unwrap();
        assert!(lb6.size >= 111);
        let code = lb6.code.unwrap();
        assert_eq!(code.len() as u64, lb6.size);
        assert!(validate_code(&code).is_valid());
    }
}
