//! Word generators shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use tdcode::{Symbol, Word};

/// Every ternary word of length `1..=max_len`, shortest first.
pub fn all_words(max_len: usize) -> Vec<Vec<Symbol>> {
    let mut out = Vec::new();
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|v: Vec<Symbol>| {
                (0..3).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn word(s: &str) -> Word {
    Word::parse(s, 3).unwrap()
}

fn suffix_square(x: &[Symbol]) -> bool {
    let n = x.len();
    (1..=3).any(|k| n >= 2 * k && x[n - 2 * k..n - k] == x[n - k..])
}

/// A uniformly-stepped random `<=3`-irreducible ternary word of length `n`,
/// by random extension with backtracking.
pub fn random_irreducible(rng: &mut impl Rng, n: usize) -> Vec<Symbol> {
    let mut w: Vec<Symbol> = Vec::with_capacity(n);
    // tried[i]: symbols already attempted at position i
    let mut tried: Vec<u8> = vec![0];
    while w.len() < n {
        let i = w.len();
        let free: Vec<Symbol> = (0..3).filter(|&c| tried[i] >> c & 1 == 0).collect();
        if free.is_empty() {
            tried.pop();
            w.pop();
            continue;
        }
        let c = free[rng.gen_range(0..free.len())];
        tried[i] |= 1 << c;
        w.push(c);
        if suffix_square(&w) {
            w.pop();
        } else {
            tried.push(0);
        }
    }
    w
}

/// A random descendant of `x`: while copying `x`, duplicate the last one to
/// three emitted symbols with probability `p` after each step.
pub fn random_descendant(rng: &mut impl Rng, x: &[Symbol], p: f64) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(x.len() * 2);
    for &s in x {
        out.push(s);
        while rng.gen_bool(p) {
            let k = rng.gen_range(1..=3.min(out.len()));
            let start = out.len() - k;
            out.extend_from_within(start..);
        }
    }
    out
}
