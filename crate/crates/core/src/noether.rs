//! Kunz sets, the numerical Max Noether decomposition, and the parameter
//! count behind the covering-gonality bound.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{NumericalSemigroup, SemigroupRecord};

/// `K = { a : c - 1 - a not in S }`. Every integer `>= c` lies in `K`, so only
/// the part below the conductor is stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KunzData {
    pub semigroup: SemigroupRecord,
    pub k_below_c: Vec<u64>,
}

impl KunzData {
    pub fn contains(&self, a: i64) -> bool {
        let c = self.semigroup.conductor as i64;
        if a < 0 {
            false
        } else if a >= c {
            true
        } else {
            self.k_below_c.binary_search(&(a as u64)).is_ok()
        }
    }
}

pub fn kunz_set(sg: &NumericalSemigroup) -> KunzData {
    let c = sg.conductor() as i64;
    let k_below_c = (0..c)
        .filter(|&a| !sg.contains(c - 1 - a))
        .map(|a| a as u64)
        .collect();
    KunzData {
        semigroup: sg.record(),
        k_below_c,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NoetherEntry {
    pub n: u64,
    /// Lexicographically smallest `(k1, k2)`, or `None` if no split exists.
    pub witness: Option<(u64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NoetherReport {
    pub semigroup: SemigroupRecord,
    /// Inclusive range `[c, 2c - 3]`; `None` when it is empty.
    pub range: Option<(u64, u64)>,
    pub entries: Vec<NoetherEntry>,
    pub passed: bool,
}

impl NoetherReport {
    pub fn failures(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().filter(|e| e.witness.is_none()).map(|e| e.n)
    }
}

/// Try to write each `n` in `[c, 2c - 3]` as `k1 + k2` with `k_i` in `K`, `k_i < c`.
///
/// A missing split is reported in the result, never raised.
pub fn max_noether_check(sg: &NumericalSemigroup) -> NoetherReport {
    let kunz = kunz_set(sg);
    let c = sg.conductor();
    let mut entries = Vec::new();
    let range = (c >= 3).then(|| (c, 2 * c - 3));
    if let Some((lo, hi)) = range {
        for n in lo..=hi {
            let witness = kunz
                .k_below_c
                .iter()
                .map(|&k1| (k1, n.wrapping_sub(k1)))
                .find(|&(k1, k2)| k1 <= n && k2 < c && kunz.k_below_c.binary_search(&k2).is_ok());
            entries.push(NoetherEntry { n, witness });
        }
    }
    let passed = entries.iter().all(|e| e.witness.is_some());
    NoetherReport {
        semigroup: kunz.semigroup,
        range,
        entries,
        passed,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringCounts {
    pub variables: i64,
    pub equations: i64,
    /// `variables > equations`; a heuristic for solvability, not a proof.
    pub heuristic_solvable: bool,
}

/// Unknowns and equations when a degree-`k` function is sought at a point of
/// multiplicity `m` on a genus-`g` curve.
pub fn covering_counts(g: u64, m: u64, k: u64) -> Result<CoveringCounts> {
    if g == 0 {
        return Err(Error::Validation("genus must be at least 1".into()));
    }
    if m == 0 {
        return Err(Error::Validation("multiplicity must be at least 1".into()));
    }
    if m > k {
        return Err(Error::Validation(format!("multiplicity {m} exceeds degree {k}")));
    }
    let (g, m, k) = (g as i64, m as i64, k as i64);
    let variables = (k - m + 1) + k + (g - 1);
    let equations = 2 * g - m;
    Ok(CoveringCounts {
        variables,
        equations,
        heuristic_solvable: variables > equations,
    })
}

/// `ceil((g + 1) / 2)`.
pub fn covering_bound(g: u64) -> u64 {
    (g + 2) / 2
}
