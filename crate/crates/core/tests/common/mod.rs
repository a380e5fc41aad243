//! Independent brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cuspidal::curve::MonomialCurve;
use cuspidal::NumericalSemigroup;
use num_rational::Ratio;

/// Gap sets of every genus-`g` semigroup, found by testing all `g`-subsets of
/// `[1, 2g - 1]` for closure of their complement.
pub fn gap_sets_by_subsets(g: u64) -> Vec<Vec<u64>> {
    if g == 0 {
        return vec![vec![]];
    }
    let top = 2 * g - 1;
    let mut out = Vec::new();
    for mask in 0u64..(1 << top) {
        if mask.count_ones() as u64 != g {
            continue;
        }
        let is_gap = |x: u64| x >= 1 && x <= top && mask >> (x - 1) & 1 == 1;
        let closed = (1..=top).filter(|&a| !is_gap(a)).all(|a| {
            (a..=top).filter(|&b| !is_gap(b)).all(|b| !is_gap(a + b))
        });
        if closed {
            out.push((1..=top).filter(|&x| is_gap(x)).collect());
        }
    }
    out.sort();
    out
}

/// Rank over the rationals by plain Gaussian elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Ratio<i128>>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(x as i128)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][col] != Ratio::from_integer(0)) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col] != Ratio::from_integer(0) {
                let f = row[col] / pivot_row[col];
                for (x, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A unicuspidal monomial curve whose cusp has semigroup `sg`: the exponents
/// are 0 and every member up to one past both the conductor and the largest
/// minimal generator.
pub fn unicuspidal_curve(sg: &NumericalSemigroup) -> MonomialCurve {
    let top = sg.conductor().max(*sg.minimal_generators().last().unwrap()) + 1;
    let exps: Vec<u64> = sg.members_in(0, top + 1).collect();
    MonomialCurve::new(exps).unwrap()
}

/// All factorizations of `s` found by scanning the whole box
/// `prod [0, s / g_i]`.
pub fn box_fiber(ground: &[u64], s: u64) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    let mut v = vec![0u64; ground.len()];
    loop {
        let total: u64 = v.iter().zip(ground).map(|(a, g)| a * g).sum();
        if total == s {
            out.insert(v.clone());
        }
        let mut i = 0;
        loop {
            if i == v.len() {
                return out;
            }
            if (v[i] + 1) * ground[i] <= s {
                v[i] += 1;
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

fn is_progression(block: &[u64]) -> Option<Option<u64>> {
    if block.len() < 2 {
        return Some(None);
    }
    let d = block[1] - block[0];
    block.windows(2).all(|w| w[1] - w[0] == d).then_some(Some(d))
}

/// Fewest blocks in a partition of `set` into progressions sharing one
/// common difference, by visiting every set partition.
pub fn min_progression_partition(set: &[u64]) -> usize {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    let mut best = usize::MAX;
    let mut blocks: Vec<Vec<u64>> = Vec::new();
    visit_partitions(&sorted, 0, &mut blocks, &mut |bs| {
        let mut common = None;
        for b in bs {
            match is_progression(b) {
                None => return,
                Some(None) => {}
                Some(Some(d)) => match common {
                    None => common = Some(d),
                    Some(c) if c != d => return,
                    _ => {}
                },
            }
        }
        best = best.min(bs.len());
    });
    best
}

fn visit_partitions<F: FnMut(&[Vec<u64>])>(
    set: &[u64],
    i: usize,
    blocks: &mut Vec<Vec<u64>>,
    f: &mut F,
) {
    if i == set.len() {
        f(blocks);
        return;
    }
    for k in 0..blocks.len() {
        blocks[k].push(set[i]);
        visit_partitions(set, i + 1, blocks, f);
        blocks[k].pop();
    }
    blocks.push(vec![set[i]]);
    visit_partitions(set, i + 1, blocks, f);
    blocks.pop();
}

/// Symmetry checked straight from the definition.
pub fn symmetric_by_definition(sg: &NumericalSemigroup) -> bool {
    let f = sg.frobenius();
    (0..=f.max(0)).all(|x| sg.contains(x) != sg.contains(f - x))
}
