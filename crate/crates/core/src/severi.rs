//! Codimension of the locus of unicuspidal rational curves with a prescribed
//! cusp type `(S, r)`, itemized down to the rank jumps of the Betti matrices.
//!
//! The count is
//!
//! ```text
//! sum_i (r_i - i) + sum_{b in B} phi(b) rho(b) - sum_{s in r_bullet} rho(s) - 1
//! ```
//!
//! where `B` holds the Betti elements of the ground set `r ++ r*` below the
//! conductor, `phi(b)` is the rank gained when the difference matrix of `b`
//! is stacked under those of the smaller Betti elements, and `rho` counts
//! gaps above an element.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorization::{self, FiberAnalysis, GroundSet};
use crate::linalg::integer_rank;
use crate::semigroup::{check_pairwise_coprime, NumericalSemigroup, SemigroupRecord};

/// A semigroup together with a ramification profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspType {
    semigroup: NumericalSemigroup,
    profile: Vec<u64>,
}

impl CuspType {
    pub fn new(semigroup: NumericalSemigroup, profile: Vec<u64>) -> Result<Self> {
        if profile.is_empty() {
            return Err(Error::Validation("ramification profile is empty".into()));
        }
        if let Some(&r) = profile.iter().find(|&&r| r == 0) {
            return Err(Error::Validation(format!("profile entry {r} is not positive")));
        }
        if let Some(w) = profile.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Validation(format!(
                "profile must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        if let Some(&r) = profile.iter().find(|&&r| !semigroup.is_member(r)) {
            return Err(Error::Validation(format!("profile entry {r} is not in {semigroup}")));
        }
        Ok(CuspType { semigroup, profile })
    }

    /// `<2, 2g+1>` with profile `(2, 4, ..., 2n)`.
    pub fn hyperelliptic(genus: u64, n: u64) -> Result<Self> {
        let sg = NumericalSemigroup::from_generators(&[2, 2 * genus + 1])?;
        Self::new(sg, (1..=n).map(|i| 2 * i).collect())
    }

    /// `<a1 a2, a1 a3, a2 a3>` with its minimal generators as profile.
    pub fn supersymmetric(a: [u64; 3]) -> Result<Self> {
        let sg = NumericalSemigroup::supersymmetric(&a)?;
        let profile = sg.minimal_generators().to_vec();
        Self::new(sg, profile)
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn profile(&self) -> &[u64] {
        &self.profile
    }

    pub fn n(&self) -> usize {
        self.profile.len()
    }

    /// Minimal generators below the conductor that are not in the profile.
    pub fn rstar(&self) -> Vec<u64> {
        let c = self.semigroup.conductor();
        self.semigroup
            .minimal_generators()
            .iter()
            .copied()
            .filter(|g| *g < c && !self.profile.contains(g))
            .collect()
    }

    /// Profile followed by `r*`; positions are the matrix columns.
    pub fn ground(&self) -> GroundSet {
        let mut elements = self.profile.clone();
        elements.extend(self.rstar());
        GroundSet::new(elements).expect("profile is strictly increasing and r* avoids it")
    }
}

/// One Betti element of the ground set below the conductor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiColumn {
    pub element: u64,
    pub class_count: usize,
    /// Rows `v_j - v_1`; `v_1` is the lexicographically largest representative.
    pub matrix: Vec<Vec<i64>>,
    pub stacked_rank: usize,
    pub phi: usize,
    pub rho: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BulletTrigger {
    /// Some element of `B'` lies strictly between `r_{i-1}` and `r_i`.
    Interval,
    /// More elements of `B'` lie below `r_i` than `(i - n) - 1`.
    Count,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BulletElement {
    pub element: u64,
    /// 1-based position in the ground set.
    pub index: usize,
    pub rho: u64,
    pub trigger: BulletTrigger,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeHypothesis {
    pub degree: u64,
    pub required: u64,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodimReport {
    pub semigroup: SemigroupRecord,
    pub profile: Vec<u64>,
    pub n: usize,
    pub ram_sum: i64,
    pub rstar: Vec<u64>,
    pub ground: Vec<u64>,
    pub betti_b: Vec<BettiColumn>,
    pub b_prime: Vec<u64>,
    pub r_bullet: Vec<BulletElement>,
    pub codimension: i64,
    /// The count is only claimed for `d >= max(n, 2g - 2)`; it does not
    /// depend on `d` otherwise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_hypothesis: Option<DegreeHypothesis>,
}

impl CodimReport {
    pub fn weighted_betti_sum(&self) -> i64 {
        self.betti_b.iter().map(|b| (b.phi as u64 * b.rho) as i64).sum()
    }

    pub fn bullet_sum(&self) -> i64 {
        self.r_bullet.iter().map(|s| s.rho as i64).sum()
    }

    /// The total rebuilt from the itemized parts.
    pub fn total_from_parts(&self) -> i64 {
        self.ram_sum + self.weighted_betti_sum() - self.bullet_sum() - 1
    }
}

/// Betti columns using the lexicographically smallest member of each class.
pub fn phi_table(cusp: &CuspType) -> Vec<BettiColumn> {
    phi_table_with(cusp, |_, _| 0)
}

/// Betti columns with caller-chosen representatives.
///
/// `pick(analysis, class)` returns a position inside that class (indexing the
/// class's members in ascending order).
pub fn phi_table_with<F>(cusp: &CuspType, mut pick: F) -> Vec<BettiColumn>
where
    F: FnMut(&FiberAnalysis, usize) -> usize,
{
    let sg = cusp.semigroup();
    let ground = cusp.ground();
    let mut stacked: Vec<Vec<i64>> = Vec::new();
    let mut rank = 0;
    let mut columns = Vec::new();

    for b in 0..sg.conductor() {
        let analysis = factorization::analyze(&ground, b);
        if !analysis.is_betti() {
            continue;
        }
        let reps: Vec<&[u64]> = (0..analysis.class_count())
            .map(|k| {
                let class = &analysis.classes[k];
                let at = pick(&analysis, k);
                analysis.factorizations[class[at]].exponents.as_slice()
            })
            .collect();
        let anchor = (0..reps.len()).max_by_key(|&k| reps[k]).unwrap();
        let matrix: Vec<Vec<i64>> = reps
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != anchor)
            .map(|(_, v)| {
                v.iter()
                    .zip(reps[anchor])
                    .map(|(&x, &y)| x as i64 - y as i64)
                    .collect()
            })
            .collect();

        stacked.extend(matrix.iter().cloned());
        let new_rank = integer_rank(&stacked);
        columns.push(BettiColumn {
            element: b,
            class_count: analysis.class_count(),
            matrix,
            stacked_rank: new_rank,
            phi: new_rank - rank,
            rho: sg.gaps_above(b),
        });
        rank = new_rank;
    }
    columns
}

/// Elements of `r*` that are discounted, with the clause that fired.
pub fn r_bullet(cusp: &CuspType, columns: &[BettiColumn]) -> Vec<BulletElement> {
    let b_prime: Vec<u64> = columns.iter().filter(|c| c.phi >= 1).map(|c| c.element).collect();
    let n = cusp.n();
    let ground = cusp.ground();
    let r = ground.elements();
    let mut out = Vec::new();
    for i in n + 1..=r.len() {
        let (lo, hi) = (r[i - 2], r[i - 1]);
        let interval = b_prime.iter().any(|&b| lo < b && b < hi);
        let below = b_prime.iter().filter(|&&b| b < hi).count();
        let count = below as i64 > (i - n) as i64 - 1;
        let trigger = match (interval, count) {
            (true, true) => BulletTrigger::Both,
            (true, false) => BulletTrigger::Interval,
            (false, true) => BulletTrigger::Count,
            (false, false) => continue,
        };
        out.push(BulletElement {
            element: hi,
            index: i,
            rho: cusp.semigroup().gaps_above(hi),
            trigger,
        });
    }
    out
}

pub fn codimension(cusp: &CuspType) -> CodimReport {
    build_report(cusp, phi_table(cusp), None)
}

/// As [`codimension`], recording whether `degree` meets `d >= max(n, 2g - 2)`.
pub fn codimension_with_degree(cusp: &CuspType, degree: u64) -> CodimReport {
    let g = cusp.semigroup().genus();
    let required = (cusp.n() as u64).max((2 * g).saturating_sub(2));
    let hypothesis = DegreeHypothesis {
        degree,
        required,
        satisfied: degree >= required,
    };
    build_report(cusp, phi_table(cusp), Some(hypothesis))
}

pub fn codimension_with<F>(cusp: &CuspType, pick: F) -> CodimReport
where
    F: FnMut(&FiberAnalysis, usize) -> usize,
{
    build_report(cusp, phi_table_with(cusp, pick), None)
}

fn build_report(
    cusp: &CuspType,
    columns: Vec<BettiColumn>,
    degree_hypothesis: Option<DegreeHypothesis>,
) -> CodimReport {
    let ram_sum = cusp
        .profile()
        .iter()
        .enumerate()
        .map(|(i, &r)| r as i64 - (i as i64 + 1))
        .sum();
    let bullets = r_bullet(cusp, &columns);
    let mut report = CodimReport {
        semigroup: cusp.semigroup().record(),
        profile: cusp.profile().to_vec(),
        n: cusp.n(),
        ram_sum,
        rstar: cusp.rstar(),
        ground: cusp.ground().elements().to_vec(),
        b_prime: columns.iter().filter(|c| c.phi >= 1).map(|c| c.element).collect(),
        betti_b: columns,
        r_bullet: bullets,
        codimension: 0,
        degree_hypothesis,
    };
    report.codimension = report.total_from_parts();
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperellipticCell {
    pub genus: u64,
    pub n: u64,
    pub codimension: i64,
    pub expected: i64,
    pub pass: bool,
}

/// Compare the count for `<2, 2g+1>`, `(2, ..., 2n)` against `(n - 1) g` over
/// `1 <= g <= g_max`, `2 <= n <= min(2g, n_max)`.
pub fn verify_hyperelliptic(g_max: u64, n_max: u64) -> Vec<HyperellipticCell> {
    let mut cells = Vec::new();
    for g in 1..=g_max {
        for n in 2..=n_max.min(2 * g) {
            let cusp = CuspType::hyperelliptic(g, n).expect("hyperelliptic family is well formed");
            let codimension = codimension(&cusp).codimension;
            let expected = ((n - 1) * g) as i64;
            cells.push(HyperellipticCell {
                genus: g,
                n,
                codimension,
                expected,
                pass: codimension == expected,
            });
        }
    }
    cells
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupersymmetricCheck {
    pub a: [u64; 3],
    pub rho: u64,
    pub codimension: i64,
    pub closed_form: i64,
    pub pass: bool,
}

/// Compare the count against `2 rho(a1 a2 a3) + a1 a2 + a1 a3 + a2 a3 - 7`.
pub fn verify_supersymmetric(a: [u64; 3]) -> Result<SupersymmetricCheck> {
    if a.iter().any(|&x| x < 2) {
        return Err(Error::Validation("supersymmetric factors must be at least 2".into()));
    }
    check_pairwise_coprime(&a)?;
    let mut a = a;
    a.sort_unstable();
    let cusp = CuspType::supersymmetric(a)?;
    let product = a[0] * a[1] * a[2];
    let rho = cusp.semigroup().rho(product)?;
    let pairwise = (a[0] * a[1] + a[0] * a[2] + a[1] * a[2]) as i64;
    let closed_form = 2 * rho as i64 + pairwise - 7;
    let codimension = codimension(&cusp).codimension;
    Ok(SupersymmetricCheck {
        a,
        rho,
        codimension,
        closed_form,
        pass: codimension == closed_form,
    })
}

/// Increasing pairwise coprime triples of integers `>= 2` with product at most `max_product`.
pub fn coprime_triples(max_product: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for a1 in 2u64.. {
        if a1 * (a1 + 1) * (a1 + 2) > max_product {
            break;
        }
        for a2 in a1 + 1.. {
            if a1 * a2 * (a2 + 1) > max_product {
                break;
            }
            for a3 in a2 + 1..=max_product / (a1 * a2) {
                if check_pairwise_coprime(&[a1, a2, a3]).is_ok() {
                    out.push([a1, a2, a3]);
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodalComparison {
    pub codimension: i64,
    pub genus: u64,
    pub n: usize,
    /// Codimension strictly below that of the g-nodal locus.
    pub below_nodal: bool,
    /// `(n - 1) g`.
    pub hyperelliptic_bound: i64,
    pub at_hyperelliptic_bound: bool,
    pub exceeds_hyperelliptic_bound: bool,
}

pub fn compare_nodal(cusp: &CuspType) -> NodalComparison {
    let codim = codimension(cusp).codimension;
    let genus = cusp.semigroup().genus();
    let bound = (cusp.n() as i64 - 1) * genus as i64;
    NodalComparison {
        codimension: codim,
        genus,
        n: cusp.n(),
        below_nodal: codim < genus as i64,
        hyperelliptic_bound: bound,
        at_hyperelliptic_bound: codim == bound,
        exceeds_hyperelliptic_bound: codim > bound,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpeculationCell {
    pub semigroup: SemigroupRecord,
    pub profile: Vec<u64>,
    pub comparison: NodalComparison,
    pub hyperelliptic: bool,
}

/// Cusp types whose count reaches `(n - 1) g`.
///
/// Scans every semigroup of genus `1..=max_genus` with the profile made of
/// its `n` smallest positive members, `2 <= n <= min(2g, n_max)`. Cells
/// reaching the bound with a non-hyperelliptic semigroup, or exceeding it at
/// all, are the ones that would contradict the expected extremality of
/// `<2, 2g+1>`.
pub fn speculation_scan(max_genus: u64, n_max: u64) -> Result<Vec<SpeculationCell>> {
    let mut out = Vec::new();
    for sg in crate::semigroup::enumerate_up_to_genus(max_genus)? {
        let g = sg.genus();
        for n in 2..=n_max.min(2 * g) {
            let profile: Vec<u64> = sg.members_in(1, u64::MAX).take(n as usize).collect();
            let cusp = CuspType::new(sg.clone(), profile.clone())?;
            let comparison = compare_nodal(&cusp);
            if comparison.codimension >= comparison.hyperelliptic_bound {
                out.push(SpeculationCell {
                    semigroup: sg.record(),
                    profile,
                    hyperelliptic: sg.is_hyperelliptic(),
                    comparison,
                });
            }
        }
    }
    Ok(out)
}
