//! Numerical semigroups: cofinite additive submonoids of the naturals.
//!
//! A semigroup is stored canonically by its membership table on `[0, c]`,
//! where `c` is the conductor. Everything at or above the conductor is a
//! member, so the table never needs to grow past it.

use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest genus [`enumerate_genus`] will walk to unless told otherwise.
pub const DEFAULT_GENUS_LIMIT: u64 = 18;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gaps: Vec<u64>,
    conductor: u64,
    members: Vec<bool>,
}

impl NumericalSemigroup {
    /// The full semigroup of natural numbers.
    pub fn naturals() -> Self {
        Self::from_table(vec![true])
    }

    /// Canonical representation of the semigroup generated by `gens`.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Validation("generator list is empty".into()));
        }
        if gens.contains(&0) {
            return Err(Error::Validation("generators must be positive".into()));
        }
        let gcd = gens.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NotCofinite { gcd });
        }

        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let multiplicity = sorted[0] as usize;

        // Sieve until `multiplicity` consecutive members appear; from there on
        // every integer is reachable by adding the smallest generator.
        let mut table = vec![true];
        let mut run = 1usize;
        let mut x = 0usize;
        while run < multiplicity {
            x += 1;
            let member = sorted
                .iter()
                .take_while(|&&g| g as usize <= x)
                .any(|&g| table[x - g as usize]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
        }
        let conductor = table.len() - run;
        table.truncate(conductor + 1);
        Ok(Self::from_table(table))
    }

    /// Semigroup whose complement in the naturals is exactly `gaps`.
    pub fn from_gaps<I: IntoIterator<Item = u64>>(gaps: I) -> Result<Self> {
        let mut gaps: Vec<u64> = gaps.into_iter().collect();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(Error::InvalidGapSet("0 always belongs to a semigroup".into()));
        }
        let conductor = gaps.last().map_or(0, |&g| g + 1) as usize;
        let mut table = vec![true; conductor + 1];
        for &g in &gaps {
            table[g as usize] = false;
        }
        for x in 1..conductor {
            if !table[x] {
                continue;
            }
            for y in x..conductor - x {
                if table[y] && !table[x + y] {
                    return Err(Error::InvalidGapSet(format!(
                        "{x} + {y} = {} is listed as a gap",
                        x + y
                    )));
                }
            }
        }
        Ok(Self::from_table(table))
    }

    /// Rebuild a genus-`g` semigroup from its membership on `[1, 2g]`.
    ///
    /// `members[i]` records whether `i + 1` belongs to the semigroup.
    pub fn from_truncation(members: &[bool], genus: u64) -> Result<Self> {
        if members.len() as u64 != 2 * genus {
            return Err(Error::Validation(format!(
                "truncation of a genus-{genus} semigroup needs {} entries, got {}",
                2 * genus,
                members.len()
            )));
        }
        let gaps: Vec<u64> = members
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(i, _)| i as u64 + 1)
            .collect();
        if gaps.len() as u64 != genus {
            return Err(Error::Validation(format!(
                "table lists {} gaps, expected {genus}",
                gaps.len()
            )));
        }
        Self::from_gaps(gaps)
    }

    /// Semigroup minimally generated by the products `(a_1 ... a_n) / a_i`.
    pub fn supersymmetric(a: &[u64]) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::Validation("supersymmetric semigroups need at least two factors".into()));
        }
        if a.iter().any(|&x| x < 2) {
            return Err(Error::Validation("supersymmetric factors must be at least 2".into()));
        }
        check_pairwise_coprime(a)?;
        let product: u64 = a.iter().product();
        let gens: Vec<u64> = a.iter().map(|&x| product / x).collect();
        let sg = Self::from_generators(&gens)?;
        if a.len() == 3 {
            let expected = supersymmetric_conductor(a[0], a[1], a[2]);
            if sg.conductor as i64 != expected {
                return Err(Error::Domain(format!(
                    "sieved conductor {} disagrees with closed form {expected}",
                    sg.conductor
                )));
            }
        }
        Ok(sg)
    }

    fn from_table(table: Vec<bool>) -> Self {
        debug_assert!(table.last() == Some(&true));
        let conductor = table.len() as u64 - 1;
        let gaps: Vec<u64> = (1..conductor).filter(|&x| !table[x as usize]).collect();
        let mut sg = NumericalSemigroup {
            generators: Vec::new(),
            gaps,
            conductor,
            members: table,
        };
        let multiplicity = sg.multiplicity();
        sg.generators = (1..=conductor + multiplicity)
            .filter(|&s| sg.is_member(s))
            .filter(|&s| !(1..=s / 2).any(|y| sg.is_member(y) && sg.is_member(s - y)))
            .collect();
        sg
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, or -1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> u64 {
        (1..).find(|&x| self.is_member(x)).unwrap()
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.is_member(x as u64)
    }

    pub fn is_member(&self, x: u64) -> bool {
        x >= self.conductor || self.members[x as usize]
    }

    /// Members in `[lo, hi)`.
    pub fn members_in(&self, lo: u64, hi: u64) -> impl Iterator<Item = u64> + '_ {
        (lo..hi).filter(move |&x| self.is_member(x))
    }

    /// Number of gaps strictly greater than the member `s`.
    pub fn rho(&self, s: u64) -> Result<u64> {
        if !self.is_member(s) {
            return Err(Error::Domain(format!("{s} is not a member of {self}")));
        }
        Ok(self.gaps_above(s))
    }

    pub(crate) fn gaps_above(&self, s: u64) -> u64 {
        (self.gaps.len() - self.gaps.partition_point(|&h| h <= s)) as u64
    }

    /// Every `x` has exactly one of `x`, `c - 1 - x` in the semigroup.
    pub fn is_symmetric(&self) -> bool {
        let c = self.conductor as i64;
        (0..c).all(|x| self.contains(x) != self.contains(c - 1 - x))
    }

    pub fn is_hyperelliptic(&self) -> bool {
        self.is_member(2)
    }

    /// Membership of `1..=2g`, the data that determines the semigroup.
    pub fn truncation(&self) -> Vec<bool> {
        (1..=2 * self.genus()).map(|i| self.is_member(i)).collect()
    }

    /// Lattice path reading membership of `1..=2g` as right/up steps.
    pub fn dyck_path(&self) -> DyckPath {
        let g = self.genus();
        let mut steps = Vec::with_capacity(2 * g as usize);
        let mut columns = Vec::new();
        let mut height = 0;
        for i in 1..=2 * g {
            if self.is_member(i) {
                steps.push(DyckStep::Right);
                columns.push(DyckColumn {
                    member: i,
                    squares_above: g - height,
                });
            } else {
                steps.push(DyckStep::Up);
                height += 1;
            }
        }
        DyckPath { genus: g, steps, columns }
    }

    /// Children in the semigroup tree: remove one minimal generator above the
    /// Frobenius number. Ordered by the removed generator.
    pub fn children(&self) -> Vec<NumericalSemigroup> {
        let frob = self.frobenius();
        self.generators
            .iter()
            .filter(|&&x| x as i64 > frob)
            .map(|&x| {
                let mut table = self.members.clone();
                table.resize(x as usize + 2, true);
                table[x as usize] = false;
                Self::from_table(table)
            })
            .collect()
    }

    pub fn record(&self) -> SemigroupRecord {
        SemigroupRecord {
            generators: self.generators.clone(),
            gaps: self.gaps.clone(),
            genus: self.genus(),
            conductor: self.conductor,
            frobenius: self.frobenius(),
        }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(u64::to_string).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.record().serialize(serializer)
    }
}

/// Wire form of a semigroup. Field order is part of the format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupRecord {
    pub generators: Vec<u64>,
    pub gaps: Vec<u64>,
    pub genus: u64,
    pub conductor: u64,
    pub frobenius: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DyckStep {
    Right,
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DyckColumn {
    pub member: u64,
    pub squares_above: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyckPath {
    pub genus: u64,
    pub steps: Vec<DyckStep>,
    /// One entry per right step, in path order.
    pub columns: Vec<DyckColumn>,
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(match step {
                DyckStep::Right => "R",
                DyckStep::Up => "U",
            })?;
        }
        Ok(())
    }
}

/// Conductor of `<a1 a2, a1 a3, a2 a3>` for pairwise coprime factors.
pub fn supersymmetric_conductor(a1: u64, a2: u64, a3: u64) -> i64 {
    let (a1, a2, a3) = (a1 as i64, a2 as i64, a3 as i64);
    2 * a1 * a2 * a3 - (a1 * a2 + a1 * a3 + a2 * a3) + 1
}

pub(crate) fn check_pairwise_coprime(a: &[u64]) -> Result<()> {
    for (i, &x) in a.iter().enumerate() {
        for &y in &a[i + 1..] {
            if x.gcd(&y) != 1 {
                return Err(Error::Validation(format!("{x} and {y} are not coprime")));
            }
        }
    }
    Ok(())
}

/// All semigroups of genus exactly `g`, walking the semigroup tree.
pub fn enumerate_genus(g: u64) -> Result<Vec<NumericalSemigroup>> {
    enumerate_genus_with_limit(g, DEFAULT_GENUS_LIMIT)
}

pub fn enumerate_genus_with_limit(g: u64, limit: u64) -> Result<Vec<NumericalSemigroup>> {
    if g > limit {
        return Err(Error::ResourceExceeded { requested: g, limit });
    }
    let mut level = vec![NumericalSemigroup::naturals()];
    for _ in 0..g {
        level = level.iter().flat_map(NumericalSemigroup::children).collect();
    }
    Ok(level)
}

/// All semigroups of genus at most `max_genus`, ordered by genus.
pub fn enumerate_up_to_genus(max_genus: u64) -> Result<Vec<NumericalSemigroup>> {
    if max_genus > DEFAULT_GENUS_LIMIT {
        return Err(Error::ResourceExceeded { requested: max_genus, limit: DEFAULT_GENUS_LIMIT });
    }
    let mut all = Vec::new();
    let mut level = vec![NumericalSemigroup::naturals()];
    for _ in 0..max_genus {
        let next: Vec<_> = level.iter().flat_map(NumericalSemigroup::children).collect();
        all.append(&mut level);
        level = next;
    }
    all.append(&mut level);
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn naturals_from_one() {
        let n = sg(&[1]);
        assert_eq!(n, NumericalSemigroup::naturals());
        assert_eq!(n.genus(), 0);
        assert_eq!(n.conductor(), 0);
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.minimal_generators(), &[1]);
    }

    #[test]
    fn five_seven_eight() {
        let s = sg(&[5, 7, 8]);
        assert_eq!(s.genus(), 7);
        assert_eq!(s.gaps(), &[1, 2, 3, 4, 6, 9, 11]);
        assert_eq!(s.conductor(), 12);
        assert!(!s.contains(6));
        assert!(s.contains(12));
        assert!(s.contains(0));
        assert!(!s.contains(-3));
    }

    #[test]
    fn two_fifteen() {
        let s = sg(&[2, 15]);
        assert_eq!(s.genus(), 7);
        assert_eq!(s.gaps(), &[1, 3, 5, 7, 9, 11, 13]);
        assert_eq!(s.conductor(), 14);
        assert_eq!(s.rho(4).unwrap(), 5);
        assert!(s.is_symmetric());
        assert!(s.is_hyperelliptic());
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let s = sg(&[6, 4, 8, 7, 12, 9]);
        assert_eq!(s.minimal_generators(), &[4, 6, 7, 9]);
    }

    #[test]
    fn generator_errors() {
        assert!(matches!(NumericalSemigroup::from_generators(&[]), Err(Error::Validation(_))));
        assert!(matches!(NumericalSemigroup::from_generators(&[0, 3]), Err(Error::Validation(_))));
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotCofinite { gcd: 2 })
        );
    }

    #[test]
    fn gaps_round_trip() {
        assert_eq!(NumericalSemigroup::from_gaps([]).unwrap(), NumericalSemigroup::naturals());
        assert_eq!(NumericalSemigroup::from_gaps([1, 2, 3, 4, 6, 9, 11]).unwrap(), sg(&[5, 7, 8]));
        assert_eq!(NumericalSemigroup::from_gaps([1, 2]).unwrap(), sg(&[3, 4, 5]));
    }

    #[test]
    fn gaps_not_closed() {
        // 2 + 2 = 4 is claimed to be a gap.
        assert!(matches!(NumericalSemigroup::from_gaps([1, 3, 4]), Err(Error::InvalidGapSet(_))));
        assert!(matches!(NumericalSemigroup::from_gaps([0, 1]), Err(Error::InvalidGapSet(_))));
    }

    #[test]
    fn rho_values() {
        let s = sg(&[6, 14, 21]);
        assert_eq!(s.conductor(), 44);
        assert_eq!(s.rho(42).unwrap(), 1);
        assert_eq!(s.rho(0).unwrap(), s.genus());
        assert_eq!(s.rho(44).unwrap(), 0);
        assert!(matches!(s.rho(43), Err(Error::Domain(_))));
    }

    #[test]
    fn symmetry() {
        assert!(sg(&[6, 10, 15]).is_symmetric());
        assert!(!sg(&[3, 5, 7]).is_symmetric());
        assert!(NumericalSemigroup::naturals().is_symmetric());
    }

    #[test]
    fn hyperelliptic_flag() {
        assert!(!sg(&[5, 7, 8]).is_hyperelliptic());
        assert!(NumericalSemigroup::naturals().is_hyperelliptic());
    }

    #[test]
    fn supersymmetric_examples() {
        let s = NumericalSemigroup::supersymmetric(&[2, 3, 5]).unwrap();
        assert_eq!(s.minimal_generators(), &[6, 10, 15]);
        assert_eq!(s.conductor(), 30);
        let s = NumericalSemigroup::supersymmetric(&[2, 3, 7]).unwrap();
        assert_eq!(s.minimal_generators(), &[6, 14, 21]);
        assert_eq!(s.conductor(), 44);
        let s = NumericalSemigroup::supersymmetric(&[2, 3]).unwrap();
        assert_eq!(s, sg(&[2, 3]));
        assert_eq!(s.genus(), 1);
        assert!(matches!(
            NumericalSemigroup::supersymmetric(&[2, 4, 5]),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn dyck_paths() {
        let s = sg(&[2, 15]);
        let path = s.dyck_path();
        assert_eq!(path.to_string(), "URURURURURURUR");
        let col = path.columns.iter().find(|c| c.member == 4).unwrap();
        assert_eq!(col.squares_above, 5);
        assert_eq!(sg(&[2, 3]).dyck_path().to_string(), "UR");
        assert!(NumericalSemigroup::naturals().dyck_path().steps.is_empty());
    }

    #[test]
    fn small_genus_enumeration() {
        assert_eq!(enumerate_genus(0).unwrap(), vec![NumericalSemigroup::naturals()]);
        assert_eq!(enumerate_genus(1).unwrap(), vec![sg(&[2, 3])]);
        let mut g3: Vec<Vec<u64>> = enumerate_genus(3)
            .unwrap()
            .iter()
            .map(|s| s.minimal_generators().to_vec())
            .collect();
        g3.sort();
        assert_eq!(g3, vec![vec![2, 7], vec![3, 4], vec![3, 5, 7], vec![4, 5, 6, 7]]);
        assert_eq!(
            enumerate_genus(19),
            Err(Error::ResourceExceeded { requested: 19, limit: 18 })
        );
    }

    #[test]
    fn truncation_examples() {
        for s in [sg(&[5, 7, 8]), sg(&[2, 15]), NumericalSemigroup::naturals()] {
            let t = s.truncation();
            assert_eq!(NumericalSemigroup::from_truncation(&t, s.genus()).unwrap(), s);
        }
        // wrong length
        assert!(NumericalSemigroup::from_truncation(&[false, true], 2).is_err());
        // wrong gap count
        assert!(NumericalSemigroup::from_truncation(&[false, true, true, true], 2).is_err());
        // complement not closed: 2 member, 4 gap
        assert!(NumericalSemigroup::from_truncation(&[false, true, false, false], 2).is_err());
    }

    #[test]
    fn record_field_order() {
        let json = serde_json::to_string(&sg(&[5, 7, 8])).unwrap();
        assert_eq!(
            json,
            r#"{"generators":[5,7,8],"gaps":[1,2,3,4,6,9,11],"genus":7,"conductor":12,"frobenius":11}"#
        );
    }
}
