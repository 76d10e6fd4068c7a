//! Brute-force ground truth: irreducible words, descendant cones, bounded
//! confusability search, label sets, and symbol canonicalization.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::confusability::{compute_label, Label};
use crate::error::{Error, Result};
use crate::roots::{root_le_slice, RootMode};
use crate::word::{distinct_count, duplicate_slice, has_suffix_square, DuplicationStep, Symbol, Word};

/// Default cap on stored states for cone searches.
pub const DEFAULT_STATE_BUDGET: usize = 20_000_000;

/// Extra length allowed by [`oracle_confusable_default`] beyond the longer word.
pub const DEFAULT_ORACLE_SLACK: usize = 16;

/// Depth-first walk over `<=k`-irreducible words, calling `f` on every
/// irreducible word of length `1..=n_max`.
fn walk_irreducible(n_max: usize, q: u8, k: usize, f: &mut impl FnMut(&[Symbol])) {
    fn go(buf: &mut Vec<Symbol>, n_max: usize, q: u8, k: usize, f: &mut impl FnMut(&[Symbol])) {
        for c in 0..q {
            buf.push(c);
            if !(1..=k).any(|j| has_suffix_square(buf, j)) {
                f(buf);
                if buf.len() < n_max {
                    go(buf, n_max, q, k, f);
                }
            }
            buf.pop();
        }
    }
    if n_max > 0 {
        go(&mut Vec::with_capacity(n_max), n_max, q, k, f);
    }
}

/// All `<=k`-irreducible words of length `n` over `q` symbols, in
/// lexicographic order.
pub fn enumerate_irreducible(n: usize, q: u8, mode: RootMode) -> Vec<Word> {
    let mut out = Vec::new();
    walk_irreducible(n, q, mode.k(), &mut |w| {
        if w.len() == n {
            out.push(Word::from_raw(w.to_vec(), q));
        }
    });
    out
}

/// `|Irr_{<=k}(i, q)|` for `i = 1..=n_max` (index 0 holds length 1).
pub fn irreducible_counts(n_max: usize, q: u8, mode: RootMode) -> Vec<u64> {
    let mut counts = vec![0u64; n_max];
    walk_irreducible(n_max, q, mode.k(), &mut |w| counts[w.len() - 1] += 1);
    counts
}

/// Canonical (first-occurrence ordered) `<=k`-irreducible words of length
/// `1..=n_max` over `q` symbols, shortest first and lexicographic within a
/// length.
pub fn canonical_irreducible(n_max: usize, q: u8, mode: RootMode) -> Vec<Word> {
    fn go(buf: &mut Vec<Symbol>, used: u8, n_max: usize, q: u8, k: usize, out: &mut Vec<Vec<Symbol>>) {
        for c in 0..q.min(used + 1) {
            buf.push(c);
            if !(1..=k).any(|j| has_suffix_square(buf, j)) {
                out.push(buf.clone());
                if buf.len() < n_max {
                    go(buf, used.max(c + 1), n_max, q, k, out);
                }
            }
            buf.pop();
        }
    }
    let mut out = Vec::new();
    if n_max > 0 {
        go(&mut Vec::with_capacity(n_max), 0, n_max, q, mode.k(), &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.into_iter().map(|w| Word::from_raw(w, q)).collect()
}

/// Truncated descendant cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeFrontier {
    pub origin: Word,
    pub max_len: usize,
    pub members: BTreeSet<Word>,
}

impl ConeFrontier {
    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains(w)
    }

    pub fn of_length(&self, n: usize) -> impl Iterator<Item = &Word> {
        self.members.iter().filter(move |w| w.len() == n)
    }
}

/// All descendants of `x` under duplications of length at most 3 whose
/// length does not exceed `max_len`.
pub fn descendant_cone(x: &Word, max_len: usize) -> Result<ConeFrontier> {
    descendant_cone_with_budget(x, max_len, DEFAULT_STATE_BUDGET)
}

pub fn descendant_cone_with_budget(x: &Word, max_len: usize, budget: usize) -> Result<ConeFrontier> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    if max_len < x.len() {
        return Err(Error::Unsupported(format!(
            "max_len {max_len} is shorter than the word ({})",
            x.len()
        )));
    }
    let members = cone_slices(x.as_slice(), max_len, budget)?;
    Ok(ConeFrontier {
        origin: x.clone(),
        max_len,
        members: members.into_iter().map(|s| x.with_symbols(s)).collect(),
    })
}

pub(crate) fn cone_slices(x: &[Symbol], max_len: usize, budget: usize) -> Result<HashSet<Vec<Symbol>>> {
    let mut seen: HashSet<Vec<Symbol>> = HashSet::new();
    seen.insert(x.to_vec());
    let mut stack = vec![x.to_vec()];
    while let Some(w) = stack.pop() {
        for k in 1..=3 {
            if w.len() + k > max_len {
                break;
            }
            for i in 0..(w.len() + 1).saturating_sub(k) {
                let child = duplicate_slice(&w, DuplicationStep::new(i, k));
                if !seen.contains(&child) {
                    if seen.len() >= budget {
                        return Err(Error::Resource(format!(
                            "descendant cone exceeded {budget} words"
                        )));
                    }
                    seen.insert(child.clone());
                    stack.push(child);
                }
            }
        }
    }
    Ok(seen)
}

/// Collapses runs of equal symbols.
pub(crate) fn root1(x: &[Symbol]) -> Vec<Symbol> {
    root_le_slice(x, RootMode::Le1)
}

/// Words reachable from `x` by duplicating factors of two or three pairwise
/// distinct symbols, within `max_len`, keyed by their 1-root.
///
/// Every descendant of `x` is a 1-descendant of such a word: a trace can be
/// rewritten so that its long steps copy distinct symbols and all
/// single-symbol steps come last. Distinct-factor duplications never create
/// or grow runs, so two words are confusable exactly when these maps share
/// a key.
pub fn shadow_cone(x: &[Symbol], max_len: usize, budget: usize) -> Result<HashMap<Vec<Symbol>, Vec<Symbol>>> {
    let mut seen: HashSet<Vec<Symbol>> = HashSet::new();
    let mut shadow: HashMap<Vec<Symbol>, Vec<Symbol>> = HashMap::new();
    seen.insert(x.to_vec());
    shadow.insert(root1(x), x.to_vec());
    let mut stack = vec![x.to_vec()];
    while let Some(w) = stack.pop() {
        for k in 2..=3 {
            if w.len() + k > max_len {
                break;
            }
            for i in 0..(w.len() + 1).saturating_sub(k) {
                if distinct_count(&w[i..i + k]) < k {
                    continue;
                }
                let child = duplicate_slice(&w, DuplicationStep::new(i, k));
                if seen.contains(&child) {
                    continue;
                }
                if seen.len() >= budget {
                    return Err(Error::Resource(format!("shadow cone exceeded {budget} words")));
                }
                seen.insert(child.clone());
                let key = root1(&child);
                match shadow.get(&key) {
                    Some(prev) if prev.len() <= child.len() => {}
                    _ => {
                        shadow.insert(key, child.clone());
                    }
                }
                stack.push(child);
            }
        }
    }
    Ok(shadow)
}

/// Smallest word whose runs are at least as long as those of both `a` and
/// `b`; both must share a 1-root.
pub(crate) fn merge_runs(a: &[Symbol], b: &[Symbol]) -> Vec<Symbol> {
    fn runs(x: &[Symbol]) -> Vec<(Symbol, usize)> {
        let mut out: Vec<(Symbol, usize)> = Vec::new();
        for &c in x {
            match out.last_mut() {
                Some((s, n)) if *s == c => *n += 1,
                _ => out.push((c, 1)),
            }
        }
        out
    }
    let (ra, rb) = (runs(a), runs(b));
    debug_assert_eq!(ra.len(), rb.len());
    ra.iter()
        .zip(&rb)
        .flat_map(|(&(s, n), &(_, m))| std::iter::repeat(s).take(n.max(m)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleOutcome {
    /// A common descendant of both words.
    Confusable(Word),
    /// The searched parts of the cones are disjoint.
    NoWitnessUpToBound,
}

impl OracleOutcome {
    pub fn is_confusable(&self) -> bool {
        matches!(self, OracleOutcome::Confusable(_))
    }
}

/// Bounded search for a common descendant. Both cones are explored through
/// distinct-factor duplications up to `max_len`; a shared 1-root yields a
/// witness (which may be longer than `max_len` by the total run excess of
/// the two reached words).
pub fn oracle_confusable(x: &Word, y: &Word, max_len: usize) -> Result<OracleOutcome> {
    oracle_confusable_with_budget(x, y, max_len, DEFAULT_STATE_BUDGET)
}

pub fn oracle_confusable_with_budget(
    x: &Word,
    y: &Word,
    max_len: usize,
    budget: usize,
) -> Result<OracleOutcome> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyWord);
    }
    if x.q() != y.q() {
        return Err(Error::AlphabetMismatch(x.q(), y.q()));
    }
    if x == y {
        return Ok(OracleOutcome::Confusable(x.clone()));
    }
    let max_len = max_len.max(x.len()).max(y.len());
    let sx = shadow_cone(x.as_slice(), max_len, budget)?;
    let sy = shadow_cone(y.as_slice(), max_len, budget)?;
    let (small, large) = if sx.len() <= sy.len() { (&sx, &sy) } else { (&sy, &sx) };
    let best = small
        .iter()
        .filter_map(|(k, a)| large.get(k).map(|b| merge_runs(a, b)))
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(match best {
        Some(w) => OracleOutcome::Confusable(x.with_symbols(w)),
        None => OracleOutcome::NoWitnessUpToBound,
    })
}

/// [`oracle_confusable`] with bound `max(|x|, |y|) + 16`.
pub fn oracle_confusable_default(x: &Word, y: &Word) -> Result<OracleOutcome> {
    oracle_confusable(x, y, x.len().max(y.len()) + DEFAULT_ORACLE_SLACK)
}

/// Pairwise bounded confusability for a batch of words, as one bit row per
/// word. Each word's shadow cone is computed once and shared keys mark
/// confusable pairs. Words over at most four symbols and bounds up to 31 use
/// a packed representation.
pub fn oracle_pair_matrix(words: &[Word], max_len: usize, budget: usize) -> Result<Vec<Vec<bool>>> {
    let n = words.len();
    let packed = max_len <= 31 && words.iter().all(|w| w.q() <= 4);
    let mut owners: HashMap<u64, Vec<u64>> = HashMap::new();
    let mut generic: HashMap<Vec<Symbol>, Vec<u64>> = HashMap::new();
    let blocks = n.div_ceil(64);
    for (idx, w) in words.iter().enumerate() {
        let bound = max_len.max(w.len());
        if packed && bound <= 31 {
            for key in packed_shadow_keys(w.as_slice(), bound, budget)? {
                let row = owners.entry(key).or_insert_with(|| vec![0; blocks]);
                row[idx / 64] |= 1 << (idx % 64);
            }
        } else {
            for key in shadow_cone(w.as_slice(), bound, budget)?.into_keys() {
                let row = generic.entry(key).or_insert_with(|| vec![0; blocks]);
                row[idx / 64] |= 1 << (idx % 64);
            }
        }
    }
    let mut out = vec![vec![false; n]; n];
    let mut seen_rows: HashSet<Vec<u64>> = HashSet::new();
    for row in owners.into_values().chain(generic.into_values()) {
        if row.iter().map(|b| b.count_ones()).sum::<u32>() < 2 || !seen_rows.insert(row.clone()) {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| row[i / 64] >> (i % 64) & 1 == 1).collect();
        for &i in &members {
            for &j in &members {
                out[i][j] = true;
            }
        }
    }
    for (i, r) in out.iter_mut().enumerate() {
        r[i] = true;
    }
    Ok(out)
}

fn pack(x: &[Symbol]) -> u64 {
    x.iter().fold(0u64, |acc, &s| acc << 2 | (s as u64 + 1))
}

fn unpack(mut v: u64, buf: &mut Vec<Symbol>) {
    buf.clear();
    while v != 0 {
        buf.push((v & 3) as Symbol - 1);
        v >>= 2;
    }
    buf.reverse();
}

/// Packed form of [`shadow_cone`] returning only the 1-root keys.
fn packed_shadow_keys(x: &[Symbol], max_len: usize, budget: usize) -> Result<HashSet<u64>> {
    let mut seen: HashSet<u64> = HashSet::new();
    let mut keys: HashSet<u64> = HashSet::new();
    let start = pack(x);
    seen.insert(start);
    keys.insert(pack(&root1(x)));
    let mut stack = vec![start];
    let (mut w, mut child) = (Vec::with_capacity(32), Vec::with_capacity(32));
    while let Some(v) = stack.pop() {
        unpack(v, &mut w);
        for k in 2..=3 {
            if w.len() + k > max_len {
                break;
            }
            for i in 0..(w.len() + 1).saturating_sub(k) {
                if distinct_count(&w[i..i + k]) < k {
                    continue;
                }
                child.clear();
                child.extend_from_slice(&w[..i + k]);
                child.extend_from_slice(&w[i..]);
                let c = pack(&child);
                if !seen.insert(c) {
                    continue;
                }
                if seen.len() > budget {
                    return Err(Error::Resource(format!("shadow cone exceeded {budget} words")));
                }
                let mut key = 0u64;
                let mut last = u8::MAX;
                for &s in &child {
                    if s != last {
                        key = key << 2 | (s as u64 + 1);
                        last = s;
                    }
                }
                keys.insert(key);
                stack.push(c);
            }
        }
    }
    Ok(keys)
}

/// Labels of all length-`n` descendants of `r`, by cone search.
pub fn enumerate_labels(r: &Word, n: usize) -> Result<BTreeSet<Label>> {
    enumerate_labels_with_budget(r, n, DEFAULT_STATE_BUDGET)
}

pub fn enumerate_labels_with_budget(r: &Word, n: usize, budget: usize) -> Result<BTreeSet<Label>> {
    let cone = cone_slices(r.as_slice(), n, budget)?;
    Ok(cone
        .into_iter()
        .filter(|w| w.len() == n)
        .map(|w| compute_label(&r.with_symbols(w)))
        .collect())
}

/// Relabels symbols by order of first occurrence and returns the size of the
/// orbit under alphabet permutations, `q! / (q - d)!`.
pub fn canonical_form(x: &Word) -> (Word, u64) {
    let (canon, d) = canonical_slice(x.as_slice());
    let q = x.q() as u64;
    let orbit = (0..d as u64).map(|j| q - j).product();
    (x.with_symbols(canon), orbit)
}

/// Canonical relabeling and the number of distinct symbols.
pub(crate) fn canonical_slice(x: &[Symbol]) -> (Vec<Symbol>, usize) {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    let canon = x
        .iter()
        .map(|&s| {
            if map[s as usize] == u8::MAX {
                map[s as usize] = next;
                next += 1;
            }
            map[s as usize]
        })
        .collect();
    (canon, next as usize)
}

/// The permutation (as a lookup table) sending `x`'s canonical form back to
/// `x`.
pub(crate) fn decanonicalizer(x: &[Symbol], q: u8) -> Vec<Symbol> {
    let mut table = Vec::with_capacity(q as usize);
    for &s in x {
        if !table.contains(&s) {
            table.push(s);
        }
    }
    for s in 0..q {
        if !table.contains(&s) {
            table.push(s);
        }
    }
    table
}
