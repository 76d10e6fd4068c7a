//! Input generators for the benchmarks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tdcode::{construct_pair_code, Symbol, Word};

fn suffix_square(x: &[Symbol]) -> bool {
    let n = x.len();
    (1..=3).any(|k| n >= 2 * k && x[n - 2 * k..n - k] == x[n - k..])
}

/// Random `<=3`-irreducible ternary word of length `n`.
pub fn random_root(rng: &mut impl Rng, n: usize) -> Word {
    let mut w: Vec<Symbol> = Vec::with_capacity(n);
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
    Word::ternary(&w).unwrap()
}

/// Random descendant: after each copied symbol, duplicate a suffix of
/// length 1 to 3 with probability `p`, repeatedly.
pub fn random_descendant(rng: &mut impl Rng, x: &Word, p: f64) -> Word {
    let mut out: Vec<Symbol> = Vec::with_capacity(x.len() * 2);
    for &s in x.as_slice() {
        out.push(s);
        while rng.gen_bool(p) {
            let k = rng.gen_range(1..=3.min(out.len()));
            out.extend_from_within(out.len() - k..);
        }
    }
    Word::ternary(&out).unwrap()
}

/// A confusable pair `(x, y)` and a word `z` not confusable with `x`, all of
/// total length roughly `len`, from a fixed seed.
pub fn confuse_inputs(len: usize, seed: u64) -> (Word, Word, Word) {
    let mut rng = StdRng::seed_from_u64(seed);
    let r = random_root(&mut rng, (len / 3).max(4));
    let pair = construct_pair_code(&r).unwrap();
    let mut it = pair.words.iter();
    let (a, b) = (it.next().unwrap(), it.next().unwrap());
    let x = random_descendant(&mut rng, a, 0.3);
    let y = random_descendant(&mut rng, &x, 0.05);
    let z = random_descendant(&mut rng, b, 0.3);
    (x, y, z)
}
