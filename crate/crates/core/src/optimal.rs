//! Exact `T(n, r)` by maximum clique on label graphs, and `T(n)` by summing
//! over canonical roots.

use std::collections::{BTreeMap, HashMap};
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{Code, ExactSource, Provenance};
use crate::confusability::{entries_confusable, label_entries, ExtScanner, Label, LabelEntry};
use crate::error::{Error, Result};
use crate::oracle::{canonical_slice, cone_slices, decanonicalizer, DEFAULT_STATE_BUDGET};
use crate::roots::root3;
use crate::word::{is_le_irreducible, Symbol, Word};

/// Environment variable naming the cache file.
pub const CACHE_ENV: &str = "TDCODE_CACHE";

type Bits = Vec<u64>;

fn bit(b: &[u64], i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set(b: &mut [u64], i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn clear(b: &mut [u64], i: usize) {
    b[i / 64] &= !(1 << (i % 64));
}

fn ones(b: &[u64]) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(j, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                j * 64 + t
            })
        })
    })
}

fn count(b: &[u64]) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

/// Labels of the length-`n` descendants of one root; an edge joins two
/// labels whose words are not confusable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelGraph {
    pub root: Word,
    pub n: usize,
    pub vertices: Vec<Label>,
    /// One descendant per label.
    pub witnesses: Vec<Word>,
    adj: Vec<Bits>,
}

impl LabelGraph {
    /// Builds the graph from labels (all with root `root`) and a word for
    /// each.
    pub fn from_labels(root: Word, n: usize, labeled: Vec<(Label, Word)>) -> Result<Self> {
        let v = labeled.len();
        let blocks = v.div_ceil(64).max(1);
        let mut adj = vec![vec![0u64; blocks]; v];
        for a in 0..v {
            for b in a + 1..v {
                let (la, lb) = (&labeled[a].0, &labeled[b].0);
                if la.entries.len() != lb.entries.len() {
                    return Err(Error::LabelMismatch(la.entries.len(), lb.entries.len()));
                }
                if !entries_confusable(&la.entries, &lb.entries) {
                    set(&mut adj[a], b);
                    set(&mut adj[b], a);
                }
            }
        }
        let (vertices, witnesses) = labeled.into_iter().unzip();
        Ok(LabelGraph {
            root,
            n,
            vertices,
            witnesses,
            adj,
        })
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        bit(&self.adj[a], b)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| count(r)).sum::<usize>() / 2
    }
}

/// Enumerates the length-`n` descendants of `r` by cone search.
pub fn build_graph(r: &Word, n: usize) -> Result<LabelGraph> {
    build_graph_with_budget(r, n, DEFAULT_STATE_BUDGET)
}

pub fn build_graph_with_budget(r: &Word, n: usize, budget: usize) -> Result<LabelGraph> {
    check_root(r, n)?;
    let mut by_label: BTreeMap<Vec<LabelEntry>, Vec<Symbol>> = BTreeMap::new();
    let mut scanner = ExtScanner::new(true);
    for w in cone_slices(r.as_slice(), n, budget)? {
        if w.len() == n {
            let e = label_entries(&mut scanner, &w, r.as_slice())?;
            match by_label.get_mut(&e) {
                Some(old) if *old <= w => {}
                Some(old) => *old = w,
                None => {
                    by_label.insert(e, w);
                }
            }
        }
    }
    graph_from_map(r, n, by_label)
}

fn graph_from_map(r: &Word, n: usize, by_label: BTreeMap<Vec<LabelEntry>, Vec<Symbol>>) -> Result<LabelGraph> {
    let labeled = by_label
        .into_iter()
        .map(|(entries, w)| {
            (
                Label {
                    root: r.clone(),
                    entries,
                },
                r.with_symbols(w),
            )
        })
        .collect();
    LabelGraph::from_labels(r.clone(), n, labeled)
}

fn check_root(r: &Word, n: usize) -> Result<()> {
    if r.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_le_irreducible(r.as_slice(), 3) {
        return Err(Error::Unsupported(format!("{r} is not <=3-irreducible")));
    }
    if n < r.len() {
        return Err(Error::Unsupported(format!("length {n} is shorter than the root {r}")));
    }
    Ok(())
}

/// A maximum clique: its size and vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clique {
    pub size: usize,
    pub vertices: Vec<usize>,
}

/// Exact maximum clique by branch and bound with greedy coloring bounds;
/// vertices are renumbered by nonincreasing degree first.
pub fn max_clique(g: &LabelGraph) -> Clique {
    let v = g.order();
    if v == 0 {
        return Clique {
            size: 0,
            vertices: vec![],
        };
    }
    let mut order: Vec<usize> = (0..v).collect();
    order.sort_by_key(|&a| (std::cmp::Reverse(count(&g.adj[a])), a));
    let blocks = v.div_ceil(64);
    let mut adj = vec![vec![0u64; blocks]; v];
    for (a, &oa) in order.iter().enumerate() {
        for (b, &ob) in order.iter().enumerate() {
            if g.adjacent(oa, ob) {
                set(&mut adj[a], b);
            }
        }
    }
    let mut all = vec![0u64; blocks];
    for a in 0..v {
        set(&mut all, a);
    }
    let mut search = Search {
        adj: &adj,
        best: vec![0],
        current: vec![],
    };
    search.expand(all);
    let mut vertices: Vec<usize> = search.best.iter().map(|&a| order[a]).collect();
    vertices.sort_unstable();
    Clique {
        size: vertices.len(),
        vertices,
    }
}

struct Search<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    /// Greedy sequential coloring; returns vertices in color order with
    /// their color numbers.
    fn color(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(count(cand));
        let mut uncolored = cand.to_vec();
        let mut k = 0;
        while count(&uncolored) > 0 {
            k += 1;
            let mut q = uncolored.clone();
            loop {
                let Some(a) = ones(&q).next() else { break };
                clear(&mut q, a);
                clear(&mut uncolored, a);
                for (x, y) in q.iter_mut().zip(&self.adj[a]) {
                    *x &= !y;
                }
                out.push((a, k));
            }
        }
        out
    }

    fn expand(&mut self, mut cand: Bits) {
        let colored = self.color(&cand);
        for &(a, k) in colored.iter().rev() {
            if self.current.len() + k <= self.best.len() {
                return;
            }
            self.current.push(a);
            let next: Bits = cand.iter().zip(&self.adj[a]).map(|(x, y)| x & y).collect();
            if count(&next) == 0 {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            clear(&mut cand, a);
        }
    }
}

/// Cached optimum for one canonical root and length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub t: u64,
    pub labels: Vec<Label>,
    pub words: Vec<Word>,
}

/// Line-oriented store of per-root optima: `root<TAB>n<TAB>T<TAB>labels`
/// with `;`-separated labels and an optional fifth column of witness
/// words.
#[derive(Debug, Default)]
pub struct TCache {
    path: Option<PathBuf>,
    entries: RwLock<HashMap<(Vec<Symbol>, usize), CacheEntry>>,
    writer: Mutex<()>,
}

impl TCache {
    /// An in-memory cache.
    pub fn memory() -> Self {
        TCache::default()
    }

    /// Opens (or starts) a cache file; new entries are appended to it.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut cache = if path.exists() { TCache::load(&path)? } else { TCache::memory() };
        cache.path = Some(path);
        Ok(cache)
    }

    /// Reads a cache file into memory without writing back to it.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        let mut map = HashMap::new();
        for (no, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let (key, entry) = parse_line(line).map_err(|e| Error::Cache(format!("{}:{}: {e}", path.display(), no + 1)))?;
            map.insert(key, entry);
        }
        Ok(TCache {
            entries: RwLock::new(map),
            ..TCache::default()
        })
    }

    /// Opens the file named by `TDCODE_CACHE`, or an in-memory cache when it
    /// is unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CACHE_ENV) {
            Some(p) if !p.is_empty() => TCache::open(p),
            _ => Ok(TCache::memory()),
        }
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, canonical_root: &[Symbol], n: usize) -> Option<CacheEntry> {
        self.entries.read().unwrap().get(&(canonical_root.to_vec(), n)).cloned()
    }

    pub fn insert(&self, canonical_root: &[Symbol], n: usize, entry: CacheEntry) -> Result<()> {
        let key = (canonical_root.to_vec(), n);
        if self.entries.read().unwrap().contains_key(&key) {
            return Ok(());
        }
        let _guard = self.writer.lock().unwrap();
        if let Some(path) = &self.path {
            let line = format_line(canonical_root, n, &entry);
            let mut f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
            writeln!(f, "{line}").map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        }
        self.entries.write().unwrap().insert(key, entry);
        Ok(())
    }
}

fn format_line(root: &[Symbol], n: usize, e: &CacheEntry) -> String {
    let join = |v: Vec<String>| v.join(";");
    format!(
        "{}\t{n}\t{}\t{}\t{}",
        crate::word::format_symbols(root, 3),
        e.t,
        join(e.labels.iter().map(|l| l.to_string()).collect()),
        join(e.words.iter().map(|w| w.to_string()).collect()),
    )
}

fn parse_line(line: &str) -> Result<((Vec<Symbol>, usize), CacheEntry)> {
    let bad = |reason: &str| Error::Parse {
        text: line.to_string(),
        reason: reason.to_string(),
    };
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() < 4 {
        return Err(bad("expected at least four tab-separated columns"));
    }
    let root = Word::parse(cols[0], 3)?;
    let n: usize = cols[1].parse().map_err(|_| bad("bad length"))?;
    let t: u64 = cols[2].parse().map_err(|_| bad("bad size"))?;
    let split = |s: &str| -> Vec<String> { s.split(';').filter(|x| !x.is_empty()).map(String::from).collect() };
    let labels = split(cols[3]).iter().map(|l| Label::parse(l, 3)).collect::<Result<Vec<_>>>()?;
    let words = cols
        .get(4)
        .map(|c| split(c).iter().map(|w| Word::parse(w, 3)).collect::<Result<Vec<_>>>())
        .transpose()?
        .unwrap_or_default();
    if labels.len() as u64 != t || !(words.is_empty() || words.len() as u64 == t) {
        return Err(bad("witness count differs from the size"));
    }
    Ok(((root.into_symbols(), n), CacheEntry { t, labels, words }))
}

impl ExactSource for TCache {
    fn exact(&self, canonical_root: &Word, n: usize) -> Option<(u64, Vec<Word>)> {
        let e = self.get(canonical_root.as_slice(), n)?;
        (e.words.len() as u64 == e.t).then_some((e.t, e.words))
    }
}

fn solve(r: &Word, n: usize, g: &LabelGraph) -> CacheEntry {
    let c = max_clique(g);
    debug_assert!(c.size >= 1 && g.root == *r && g.n == n);
    CacheEntry {
        t: c.size as u64,
        labels: c.vertices.iter().map(|&a| g.vertices[a].clone()).collect(),
        words: c.vertices.iter().map(|&a| g.witnesses[a].clone()).collect(),
    }
}

/// `T(n, r)` with a witness code over `r`'s symbols.
pub fn t_of_root_code(r: &Word, n: usize, cache: &TCache, budget: usize) -> Result<(u64, Code)> {
    if r.q() != 3 {
        return Err(Error::Unsupported("exact search is ternary".into()));
    }
    check_root(r, n)?;
    let (canon, _) = canonical_slice(r.as_slice());
    let entry = match cache.get(&canon, n) {
        Some(e) if e.words.len() as u64 == e.t => e,
        _ => {
            let cr = r.with_symbols(canon.clone());
            let e = solve(&cr, n, &build_graph_with_budget(&cr, n, budget)?);
            cache.insert(&canon, n, e.clone())?;
            e
        }
    };
    let table = decanonicalizer(r.as_slice(), 3);
    let code = Code {
        n,
        q: 3,
        words: entry
            .words
            .iter()
            .map(|w| r.with_symbols(w.as_slice().iter().map(|&s| table[s as usize]).collect()))
            .collect(),
        provenance: Provenance::Clique { root: r.to_string() },
    };
    Ok((entry.t, code))
}

pub fn t_of_root(r: &Word, n: usize, cache: &TCache) -> Result<u64> {
    Ok(t_of_root_code(r, n, cache, DEFAULT_STATE_BUDGET)?.0)
}

/// `T(n)` with its per-root terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TofN {
    pub n: usize,
    pub total: u64,
    /// Canonical root text to (orbit size, `T(n, r)`).
    pub per_root: BTreeMap<String, (u64, u64)>,
}

fn orbit(canonical_root: &[Symbol]) -> u64 {
    if canonical_root.iter().all(|&s| s == 0) {
        3
    } else {
        6
    }
}

/// Canonical words of length `n` whose first `depth` symbols are fixed,
/// visited depth first.
fn walk_canonical(prefix: &mut Vec<Symbol>, used: u8, n: usize, f: &mut impl FnMut(&[Symbol])) {
    if prefix.len() == n {
        f(prefix);
        return;
    }
    for c in 0..3.min(used + 1) {
        prefix.push(c);
        walk_canonical(prefix, used.max(c + 1), n, f);
        prefix.pop();
    }
}

fn canonical_prefixes(len: usize) -> Vec<(Vec<Symbol>, u8)> {
    let mut out = Vec::new();
    walk_canonical(&mut Vec::new(), 0, len, &mut |p| {
        out.push((p.to_vec(), p.iter().max().map_or(0, |&m| m + 1)));
    });
    out
}

type RootLabels = HashMap<Vec<Symbol>, BTreeMap<Vec<LabelEntry>, Vec<Symbol>>>;

fn merge_labels(mut a: RootLabels, b: RootLabels) -> RootLabels {
    for (r, m) in b {
        let slot = a.entry(r).or_default();
        for (e, w) in m {
            match slot.get_mut(&e) {
                Some(old) if *old <= w => {}
                Some(old) => *old = w,
                None => {
                    slot.insert(e, w);
                }
            }
        }
    }
    a
}

/// Labels of every canonical ternary word of length `n`, grouped by root.
/// A word is canonical exactly when its root is, so this covers every
/// canonical root of length at most `n`.
pub fn labels_by_root(n: usize, budget: usize) -> Result<RootLabels> {
    let words = 3f64.powi(n as i32) / 6.0;
    if words > budget as f64 {
        return Err(Error::Resource(format!(
            "{} canonical words of length {n} exceed the budget of {budget}",
            words.ceil() as u64
        )));
    }
    let split = n.min(8);
    let map = canonical_prefixes(split)
        .into_par_iter()
        .map(|(mut prefix, used)| {
            let mut local: RootLabels = HashMap::new();
            let mut scanner = ExtScanner::new(true);
            walk_canonical(&mut prefix, used, n, &mut |w| {
                let r = root3(w);
                let e = label_entries(&mut scanner, w, &r).expect("a word's own root generates its prefix");
                local.entry(r).or_default().entry(e).or_insert_with(|| w.to_vec());
            });
            local
        })
        .reduce(HashMap::new, merge_labels);
    Ok(map)
}

/// `T(n)`: exact sum over canonical roots of orbit size times `T(n, r)`.
/// Roots already in the cache are not recomputed.
pub fn t_of_n(n: usize, cache: &TCache, budget: usize) -> Result<TofN> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let roots = crate::oracle::canonical_irreducible(n, 3, crate::roots::RootMode::Le3);
    let missing = roots.iter().any(|r| cache.get(r.as_slice(), n).is_none());
    let mut per_root = BTreeMap::new();
    if missing {
        let labels = labels_by_root(n, budget)?;
        let results: Vec<(Vec<Symbol>, CacheEntry)> = labels
            .into_par_iter()
            .filter(|(r, _)| cache.get(r, n).is_none())
            .map(|(r, m)| {
                let rw = Word::from_raw(r.clone(), 3);
                let g = graph_from_map(&rw, n, m)?;
                Ok((r, solve(&rw, n, &g)))
            })
            .collect::<Result<_>>()?;
        for (r, e) in results {
            cache.insert(&r, n, e)?;
        }
    }
    let mut total = 0;
    for r in &roots {
        let e = cache
            .get(r.as_slice(), n)
            .ok_or_else(|| Error::Resource(format!("no value for root {r} at length {n}")))?;
        let o = orbit(r.as_slice());
        total += o * e.t;
        per_root.insert(r.to_string(), (o, e.t));
    }
    Ok(TofN { n, total, per_root })
}
