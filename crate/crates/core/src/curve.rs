//! Rational monomial curves `t -> (1 : t^a1 : ... : t^an)`.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCurve {
    exponents: Vec<u64>,
}

impl MonomialCurve {
    pub fn new(exponents: Vec<u64>) -> Result<Self> {
        if exponents.len() < 2 {
            return Err(Error::Validation("a monomial curve needs at least two exponents".into()));
        }
        if exponents[0] != 0 {
            return Err(Error::Validation("exponents must start at 0".into()));
        }
        if exponents.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Validation("exponents must be strictly increasing".into()));
        }
        Ok(MonomialCurve { exponents })
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Semigroups at `(1:0:...:0)` and `(0:...:0:1)`.
    pub fn singularity_semigroups(&self) -> Result<(NumericalSemigroup, NumericalSemigroup)> {
        let gcd = self.exponents.iter().fold(0u64, |acc, a| acc.gcd(a));
        if gcd != 1 {
            return Err(Error::NotBirational { gcd });
        }
        let top = *self.exponents.last().unwrap();
        let near = NumericalSemigroup::from_generators(&self.exponents[1..])?;
        let far: Vec<u64> = self.exponents[..self.exponents.len() - 1]
            .iter()
            .map(|a| top - a)
            .collect();
        let far = NumericalSemigroup::from_generators(&far)?;
        Ok((near, far))
    }

    pub fn arithmetic_genus(&self) -> Result<u64> {
        let (p1, p2) = self.singularity_semigroups()?;
        Ok(p1.genus() + p2.genus())
    }

    /// The only singular point is `(1:0:...:0)`.
    pub fn is_unicuspidal(&self) -> Result<bool> {
        let (_, p2) = self.singularity_semigroups()?;
        Ok(p2.genus() == 0)
    }

    /// Exponents of the canonical model in `P^{g-1}`: `gamma - G_1` together
    /// with `gamma + G_2`, with `gamma` the Frobenius number at the first point.
    pub fn canonical_model(&self) -> Result<Vec<u64>> {
        let (p1, p2) = self.singularity_semigroups()?;
        if p1.genus() + p2.genus() == 0 {
            return Err(Error::CanonicalModelUndefined);
        }
        let gamma = p1.frobenius();
        let exps: BTreeSet<i64> = p1
            .gaps()
            .iter()
            .map(|&h| gamma - h as i64)
            .chain(p2.gaps().iter().map(|&h| gamma + h as i64))
            .collect();
        debug_assert!(exps.iter().all(|&e| e >= 0));
        Ok(exps.into_iter().map(|e| e as u64).collect())
    }

    pub fn gonality(&self) -> Result<Gonality> {
        let (p1, p2) = self.singularity_semigroups()?;
        if p2.genus() != 0 {
            return Err(Error::Multicuspidal);
        }
        Ok(gonality_of(&p1))
    }

    pub fn scroll(&self) -> Result<ScrollPartition> {
        Ok(scroll_partition(&self.canonical_model()?))
    }

    pub fn record(&self) -> Result<CurveRecord> {
        let genus = self.arithmetic_genus()?;
        let canonical_model = if genus > 0 { Some(self.canonical_model()?) } else { None };
        let gonality = match self.gonality() {
            Ok(g) => Some(g),
            Err(Error::Multicuspidal) => None,
            Err(e) => return Err(e),
        };
        let scroll = canonical_model.as_deref().map(scroll_partition).map(|s| ScrollRecord {
            mu: s.mu,
            parts: s.parts.iter().map(Progression::elements).collect(),
        });
        Ok(CurveRecord {
            exponents: self.exponents.clone(),
            genus,
            canonical_model,
            gonality,
            scroll,
        })
    }
}

/// Degree of the sheaf generated by `1` and `t^mu` on a unicuspidal monomial
/// curve with semigroup `sg`: `#((S + mu) \ S) + mu`.
pub fn sheaf_degree(sg: &NumericalSemigroup, mu: u64) -> Result<u64> {
    if mu == 0 {
        return Err(Error::Validation("mu must be positive".into()));
    }
    Ok(shifted_outside(sg, mu).count() as u64 + mu)
}

/// Elements of `(S + mu) \ S`, ascending. All lie below `c + mu`.
pub fn shifted_outside(sg: &NumericalSemigroup, mu: u64) -> impl Iterator<Item = u64> + '_ {
    sg.members_in(0, sg.conductor())
        .map(move |s| s + mu)
        .filter(|&x| !sg.is_member(x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gonality {
    pub d: u64,
    /// Every `mu` whose sheaf reaches the minimum.
    pub mu: Vec<u64>,
}

/// Minimum of [`sheaf_degree`] over `mu >= 1`.
///
/// The degree is at least `mu`, so once a degree `d` is found no `mu > d`
/// can beat or tie it.
pub fn gonality_of(sg: &NumericalSemigroup) -> Gonality {
    let mut best = sheaf_degree(sg, 1).unwrap();
    let mut witnesses = vec![1];
    let mut mu = 2;
    while mu <= best {
        let d = sheaf_degree(sg, mu).unwrap();
        if d < best {
            best = d;
            witnesses.clear();
        }
        if d == best {
            witnesses.push(mu);
        }
        mu += 1;
    }
    Gonality { d: best, mu: witnesses }
}

/// Maximal run `start, start + step, ..., start + (len - 1) step`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Progression {
    pub start: u64,
    pub step: u64,
    pub len: u64,
}

impl Progression {
    pub fn elements(&self) -> Vec<u64> {
        (0..self.len).map(|i| self.start + i * self.step).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScrollPartition {
    pub mu: u64,
    pub fold: usize,
    pub parts: Vec<Progression>,
}

/// Split `exponents` into maximal runs of common difference `mu`. This is the
/// fewest progressions of difference `mu` that cover the set.
pub fn progressions_with_step(exponents: &[u64], mu: u64) -> Vec<Progression> {
    let set: BTreeSet<u64> = exponents.iter().copied().collect();
    set.iter()
        .filter(|&&e| e < mu || !set.contains(&(e - mu)))
        .map(|&start| {
            let len = (0..).take_while(|i| set.contains(&(start + i * mu))).count() as u64;
            Progression { start, step: mu, len }
        })
        .collect()
}

/// Fewest same-difference progressions covering `exponents`, smallest `mu` on ties.
pub fn scroll_partition(exponents: &[u64]) -> ScrollPartition {
    let lo = exponents.iter().copied().min().unwrap_or(0);
    let hi = exponents.iter().copied().max().unwrap_or(0);
    (1..=(hi - lo).max(1))
        .map(|mu| (mu, progressions_with_step(exponents, mu)))
        .min_by_key(|(mu, parts)| (parts.len(), *mu))
        .map(|(mu, parts)| ScrollPartition { mu, fold: parts.len(), parts })
        .unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub gonality: Gonality,
    pub scroll_fold: usize,
    pub scroll_mu: u64,
    /// Fold of the canonical model for each gonality-realizing `mu`.
    pub fold_per_mu: Vec<(u64, usize)>,
    pub consistent: bool,
}

/// Compare the gonality with one more than the minimal scroll fold of the
/// canonical model.
pub fn gonality_scroll_consistency(curve: &MonomialCurve) -> Result<ConsistencyReport> {
    let (p1, p2) = curve.singularity_semigroups()?;
    if p2.genus() != 0 {
        return Err(Error::Multicuspidal);
    }
    let g = p1.genus();
    if g < 3 {
        return Err(Error::CheckSkipped(format!("genus {g} is below 3")));
    }
    if p1.is_hyperelliptic() {
        return Err(Error::CheckSkipped("canonical model not birational".into()));
    }
    let gonality = gonality_of(&p1);
    let model = curve.canonical_model()?;
    let scroll = scroll_partition(&model);
    let fold_per_mu: Vec<(u64, usize)> = gonality
        .mu
        .iter()
        .map(|&mu| (mu, progressions_with_step(&model, mu).len()))
        .collect();
    let consistent = scroll.fold as u64 + 1 == gonality.d
        && fold_per_mu.iter().all(|&(_, f)| f as u64 + 1 == gonality.d);
    Ok(ConsistencyReport {
        gonality,
        scroll_fold: scroll.fold,
        scroll_mu: scroll.mu,
        fold_per_mu,
        consistent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScrollRecord {
    pub mu: u64,
    pub parts: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveRecord {
    pub exponents: Vec<u64>,
    pub genus: u64,
    pub canonical_model: Option<Vec<u64>>,
    pub gonality: Option<Gonality>,
    pub scroll: Option<ScrollRecord>,
}
