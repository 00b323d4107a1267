//! Brute-force triviality certificates, independent of Dehn's algorithm.
//!
//! States are freely reduced words. A move inserts one rotation of the
//! relator or its inverse at any position and freely reduces; this covers
//! both insertion and deletion of relator copies, and every replacement of
//! a relator piece by its complement. Reaching the empty word proves the
//! input trivial, and the accumulated signs give its relator count.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::surface::SurfaceContext;
use crate::word::{FreeWord, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of relator events along a derivation.
    pub depth: usize,
    /// Abort once this many distinct words have been visited.
    pub frontier_cap: usize,
    /// Intermediate words may exceed the input length by at most this much.
    /// `None` means `4g`.
    pub length_slack: Option<usize>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            depth: 6,
            frontier_cap: 1_000_000,
            length_slack: None,
        }
    }
}

impl OracleConfig {
    pub fn with_depth(depth: usize) -> Self {
        OracleConfig {
            depth,
            ..OracleConfig::default()
        }
    }
}

/// Breadth-first search for a derivation of the identity from `w`.
///
/// Returns the signed relator count of the first derivation found, `None`
/// if no derivation exists within the bounds, or a resource-limit error.
pub fn bfs_oracle_trivial(
    ctx: &SurfaceContext,
    w: &FreeWord,
    config: &OracleConfig,
) -> Result<Option<i64>> {
    w.check_genus(ctx.genus())?;
    if w.is_empty() {
        return Ok(Some(0));
    }
    // Relator moves preserve exponent sums.
    if w.exponent_sums(ctx.genus()).iter().any(|&e| e != 0) {
        return Ok(None);
    }
    let rel_len = ctx.relator().len();
    let max_len = w.len() + config.length_slack.unwrap_or(rel_len);
    let insertions: Vec<(&[Letter], i64)> = ctx
        .rotations()
        .iter()
        .map(|r| (r.word.letters(), r.sign))
        .collect();

    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    seen.insert(w.letters().to_vec());
    // (word, count so far)
    let mut frontier: Vec<(Vec<Letter>, i64)> = vec![(w.letters().to_vec(), 0)];
    let mut scratch = Vec::with_capacity(max_len + rel_len);

    for level in 0..config.depth {
        let remaining = config.depth - level - 1;
        let mut next = Vec::new();
        for (word, count) in &frontier {
            for pos in 0..=word.len() {
                for &(rot, sign) in &insertions {
                    insert_reduced(&mut scratch, word, pos, rot);
                    // Inserting a copy of relator^sign means the old word equals the new one times relator^-sign.
                    let new_count = count - sign;
                    if scratch.is_empty() {
                        return Ok(Some(new_count));
                    }
                    if scratch.len() > max_len || scratch.len() > rel_len * remaining {
                        continue;
                    }
                    if seen.contains(scratch.as_slice()) {
                        continue;
                    }
                    if seen.len() >= config.frontier_cap {
                        return Err(Error::ResourceLimit {
                            what: "oracle frontier",
                            limit: config.frontier_cap,
                        });
                    }
                    seen.insert(scratch.clone());
                    next.push((scratch.clone(), new_count));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(None)
}

/// `out = reduce(word[..pos] ++ piece ++ word[pos..])`.
fn insert_reduced(out: &mut Vec<Letter>, word: &[Letter], pos: usize, piece: &[Letter]) {
    out.clear();
    out.extend_from_slice(&word[..pos]);
    for &l in piece.iter().chain(&word[pos..]) {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(g: usize) -> SurfaceContext {
        SurfaceContext::new(g).unwrap()
    }

    fn oracle(c: &SurfaceContext, w: &FreeWord) -> Option<i64> {
        bfs_oracle_trivial(c, w, &OracleConfig::default()).unwrap()
    }

    #[test]
    fn relator_and_inverse() {
        let c = ctx(2);
        assert_eq!(oracle(&c, c.relator()), Some(1));
        assert_eq!(oracle(&c, &c.relator().inverse()), Some(-1));
    }

    #[test]
    fn relator_times_inverse_rotation() {
        let c = ctx(2);
        let w = c.relator().concat(&c.relator().rotate(3).inverse());
        assert!(!w.is_empty());
        assert_eq!(oracle(&c, &w), Some(0));
    }

    #[test]
    fn nontrivial_words() {
        let c = ctx(2);
        assert_eq!(oracle(&c, &FreeWord::parse("a1", 2).unwrap()), None);
        assert_eq!(
            oracle(&c, &FreeWord::parse("a1 a2 ~a1 ~a2", 2).unwrap()),
            None
        );
    }

    #[test]
    fn genus_one_commutators() {
        let c = ctx(1);
        assert_eq!(
            oracle(&c, &FreeWord::parse("a1 b1 ~a1 ~b1", 1).unwrap()),
            Some(1)
        );
        assert_eq!(
            oracle(&c, &FreeWord::parse("b1 a1 ~b1 ~a1", 1).unwrap()),
            Some(-1)
        );
        // [a^2, b] has area 2.
        assert_eq!(
            oracle(&c, &FreeWord::parse("a1 a1 b1 ~a1 ~a1 ~b1", 1).unwrap()),
            Some(2)
        );
    }

    #[test]
    fn frontier_cap_is_enforced() {
        let c = ctx(2);
        let cfg = OracleConfig {
            depth: 6,
            frontier_cap: 10,
            length_slack: None,
        };
        let w = FreeWord::parse("a1 a2 ~a1 ~a2", 2).unwrap();
        assert!(matches!(
            bfs_oracle_trivial(&c, &w, &cfg),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
