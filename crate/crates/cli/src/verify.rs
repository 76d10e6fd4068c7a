//! Golden-fixture checks: the size table and the worked examples.

use std::fs;
use std::path::Path;

use tdcode::{
    assemble_lower_bound, compute_label, confuse, constr1_size, eq1_upper, ext_prefix, main_and_region,
    prop4_upper, root_le_k, star_pref, t_of_n, tandem_duplicate, DuplicationStep, RootMode, TCache, Word,
};

use crate::Failure;

pub const TABLE: &str = "table1.tsv";
pub const EXAMPLES: &str = "examples.tsv";

#[derive(Debug, Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    fn record(&mut self, name: &str, want: &str, got: &str) {
        if want == got {
            self.passed += 1;
            self.lines.push(format!("PASS {name}"));
        } else {
            self.failed += 1;
            self.lines.push(format!("FAIL {name}: expected {want}, got {got}"));
        }
    }

    fn info(&mut self, line: String) {
        self.lines.push(format!("INFO {line}"));
    }
}

fn read(dir: &Path, name: &str) -> Result<String, Failure> {
    let p = dir.join(name);
    fs::read_to_string(&p).map_err(|e| Failure::Invalid(format!("missing fixture {}: {e}", p.display())))
}

fn rows(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).map(|l| l.split('\t').collect())
}

fn word(s: &str) -> Result<Word, Failure> {
    Ok(Word::parse(s, 3)?)
}

/// Checks the fixtures in `dir`. Optima up to `exact_max` are recomputed;
/// when the `stored` cache file exists its per-root optima are checked
/// against the table too and feed the lower bounds.
pub fn run(dir: &Path, exact_max: usize, budget: usize, stored: &Path) -> Result<Report, Failure> {
    let table = read(dir, TABLE)?;
    let examples = read(dir, EXAMPLES)?;
    let mut rep = Report::default();
    let stored = if stored.exists() {
        Some(TCache::load(stored)?)
    } else {
        rep.info(format!("no stored optima at {}", stored.display()));
        None
    };
    check_table(&mut rep, &table, exact_max, budget, stored.as_ref())?;
    check_examples(&mut rep, &examples)?;
    Ok(rep)
}

/// Columns `n constr1 lower eq1 prop4 optimal`; `optimal` may be `-`.
fn check_table(
    rep: &mut Report,
    text: &str,
    exact_max: usize,
    budget: usize,
    stored: Option<&TCache>,
) -> Result<(), Failure> {
    let fresh = TCache::memory();
    for cols in rows(text).skip(1) {
        let [n, c1, lower, eq1, p4, opt] = cols[..] else {
            return Err(Failure::Invalid(format!("{TABLE}: expected 6 columns, got {cols:?}")));
        };
        let n: usize = n.parse().map_err(|_| Failure::Invalid(format!("{TABLE}: bad length {n}")))?;
        rep.record(&format!("table n={n} constr1"), c1, &constr1_size(n).to_string());
        rep.record(&format!("table n={n} eq1"), eq1, &eq1_upper(n).to_string());
        rep.record(&format!("table n={n} prop4"), p4, &prop4_upper(n).to_string());
        if opt != "-" && n <= exact_max {
            rep.record(&format!("table n={n} optimal"), opt, &t_of_n(n, &fresh, budget)?.total.to_string());
        }
        if let (Some(c), true) = (stored, opt != "-") {
            // budget 0: stored values only, nothing is recomputed
            rep.record(&format!("table n={n} optimal (stored)"), opt, &t_of_n(n, c, 0)?.total.to_string());
        }
        let source = stored.unwrap_or(&fresh);
        let ours = assemble_lower_bound(n, Some(source), false, false)?.size;
        rep.record(&format!("table n={n} lower >= constr1"), "true", &(ours >= constr1_size(n)).to_string());
        if stored.is_some() {
            rep.record(&format!("table n={n} lower"), lower, &ours.to_string());
        } else if ours.to_string() != lower {
            rep.info(format!("table n={n} lower: assembled {ours}, published {lower}"));
        }
    }
    Ok(())
}

fn check_examples(rep: &mut Report, text: &str) -> Result<(), Failure> {
    for cols in rows(text) {
        let [op, args, want] = cols[..] else {
            return Err(Failure::Invalid(format!("{EXAMPLES}: expected 3 columns, got {cols:?}")));
        };
        let a: Vec<&str> = args.split_whitespace().collect();
        let arg = |i: usize| a.get(i).copied().ok_or_else(|| Failure::Invalid(format!("{op}: missing argument")));
        let num = |i: usize| -> Result<usize, Failure> {
            arg(i)?.parse().map_err(|_| Failure::Invalid(format!("{op}: bad number")))
        };
        let got = match op {
            "dup" => tandem_duplicate(&word(arg(0)?)?, DuplicationStep::new(num(1)?, num(2)?))?.to_string(),
            "root2" => root_le_k(&word(arg(0)?)?, RootMode::Le2).to_string(),
            "root3" => root_le_k(&word(arg(0)?)?, RootMode::Le3).to_string(),
            "confuse" => {
                if confuse(&word(arg(0)?)?, &word(arg(1)?)?) { "confusable" } else { "not-confusable" }.to_string()
            }
            "label" => compute_label(&word(arg(0)?)?).to_string(),
            "main" => main_and_region(&word(arg(0)?)?)?.main_word(3).to_string(),
            "reg" => main_and_region(&word(arg(0)?)?)?.reg_word(3).to_string(),
            "ext" => ext_prefix(&main_and_region(&word(arg(0)?)?)?, &word(arg(1)?)?)?.to_string(),
            "pref" => star_pref(&word(arg(0)?)?, &word(arg(1)?)?)?.to_string(),
            _ => return Err(Failure::Invalid(format!("{EXAMPLES}: unknown operation {op}"))),
        };
        rep.record(&format!("{op} {args}"), want, &got);
    }
    Ok(())
}
