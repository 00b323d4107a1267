//! Frozen word corpora. Files are regenerated only on request and compared
//! byte for byte in the test suite.
//!
//! * `oracle_sample_g2.txt`: one word literal per line, half random reduced
//!   words and half random trivial words, all of length at most 12.
//! * `regression_g{g}_k{k}.tsv`: `word <TAB> verdict <TAB> z-exponent`,
//!   where the exponent is `-` for nontrivial words.

use std::fmt::Write as _;

use rand::Rng;

use crate::bundle::BundleContext;
use crate::error::{Error, Result};
use crate::maps::iota;
use crate::sample::{random_trivial_word, random_word_up_to, trial_rng};
use crate::surface::SurfaceContext;
use crate::word::{Alphabet, FreeWord};

pub const ORACLE_SAMPLE_FILE: &str = "oracle_sample_g2.txt";
pub const ORACLE_SAMPLE_SEED: u64 = 20_240_611;
pub const ORACLE_SAMPLE_SIZE: usize = 10_000;
pub const ORACLE_SAMPLE_MAX_LEN: usize = 12;

pub const REGRESSION_SEED: u64 = 97;
pub const REGRESSION_SIZE: usize = 200;
pub const REGRESSION_MAX_LEN: usize = 10;
pub const REGRESSION_CONTEXTS: [(usize, i64); 6] =
    [(1, 1), (1, 2), (2, 1), (2, 3), (2, -2), (3, 4)];

/// Deterministic mixed sample of words over genus `genus`.
pub fn word_sample(genus: usize, seed: u64, count: usize, max_len: usize) -> Result<Vec<FreeWord>> {
    let surface = SurfaceContext::new(genus)?;
    Ok((0..count)
        .map(|i| {
            let mut rng = trial_rng(seed, i as u64);
            if rng.random_bool(0.5) {
                random_trivial_word(&mut rng, &surface, max_len)
            } else {
                random_word_up_to(&mut rng, genus, max_len)
            }
        })
        .collect())
}

pub fn oracle_sample() -> Vec<FreeWord> {
    word_sample(
        2,
        ORACLE_SAMPLE_SEED,
        ORACLE_SAMPLE_SIZE,
        ORACLE_SAMPLE_MAX_LEN,
    )
    .expect("genus 2 is valid")
}

pub fn render_word_list(genus: usize, seed: u64, max_len: usize, words: &[FreeWord]) -> String {
    let mut out = format!(
        "# genus {genus}\n# seed {seed}\n# max length {max_len}\n# count {}\n",
        words.len()
    );
    for w in words {
        out.push_str(&w.to_literal(Alphabet::Surface));
        out.push('\n');
    }
    out
}

/// Reads a word list, skipping `#` comments and blank lines.
pub fn parse_word_list(text: &str, genus: usize) -> Result<Vec<FreeWord>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| FreeWord::parse(l, genus))
        .collect()
}

pub fn render_oracle_sample() -> String {
    render_word_list(
        2,
        ORACLE_SAMPLE_SEED,
        ORACLE_SAMPLE_MAX_LEN,
        &oracle_sample(),
    )
}

pub fn regression_file_name(genus: usize, euler: i64) -> String {
    format!("regression_g{genus}_k{euler}.tsv")
}

/// Verdict and `z`-exponent of the lift of `w` in the bundle group.
pub fn classify(ctx: &BundleContext, w: &FreeWord) -> Option<i64> {
    ctx.z_exponent(&iota(w)).ok()
}

pub fn render_regression(genus: usize, euler: i64) -> Result<String> {
    let ctx = BundleContext::new(genus, euler)?;
    let words = word_sample(genus, REGRESSION_SEED, REGRESSION_SIZE, REGRESSION_MAX_LEN)?;
    let mut out = format!(
        "# genus {genus}, euler number {euler}, seed {REGRESSION_SEED}\n# word\tverdict\tz\n"
    );
    for w in &words {
        let lit = w.to_literal(Alphabet::Surface);
        match classify(&ctx, w) {
            Some(m) => writeln!(out, "{lit}\ttrivial\t{m}"),
            None => writeln!(out, "{lit}\tnontrivial\t-"),
        }
        .expect("writing to a String");
    }
    Ok(out)
}

/// One parsed regression row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegressionRow {
    pub word: FreeWord,
    pub z_exponent: Option<i64>,
}

pub fn parse_regression(text: &str, genus: usize) -> Result<Vec<RegressionRow>> {
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        let bad = || Error::Malformed(format!("regression line {}: {line:?}", n + 1));
        if cols.len() != 3 {
            return Err(bad());
        }
        let word = FreeWord::parse(cols[0], genus)?;
        let z_exponent = match (cols[1], cols[2]) {
            ("trivial", z) => Some(z.parse().map_err(|_| bad())?),
            ("nontrivial", "-") => None,
            _ => return Err(bad()),
        };
        rows.push(RegressionRow { word, z_exponent });
    }
    Ok(rows)
}

/// Every fixture as `(file name, contents)`.
pub fn all_fixtures() -> Result<Vec<(String, String)>> {
    let mut out = vec![(ORACLE_SAMPLE_FILE.to_string(), render_oracle_sample())];
    for (g, k) in REGRESSION_CONTEXTS {
        out.push((regression_file_name(g, k), render_regression(g, k)?));
    }
    Ok(out)
}
