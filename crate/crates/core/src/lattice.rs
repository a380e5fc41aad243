//! Lattice points of the simplex attached to a supersymmetric triple.
//!
//! For `S = <a1 a2, a1 a3, a2 a3>` the gaps above `a1 a2 a3` pair off, by
//! symmetry, with members of `S` below `a1 a2 a3 - (a1 a2 + a1 a3 + a2 a3)`,
//! and those members factor uniquely. Counting gaps above the Betti element
//! is therefore counting points `(x, y, z) >= 0` with
//! `x a1 a2 + y a1 a3 + z a2 a3 < bound`.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::semigroup::check_pairwise_coprime;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimplexSpec {
    pub a: [u64; 3],
    pub bound: i64,
    pub coefficients: [u64; 3],
}

impl SimplexSpec {
    pub fn new(a1: u64, a2: u64, a3: u64) -> Result<Self> {
        let a = [a1, a2, a3];
        if a.iter().any(|&x| x < 2) {
            return Err(Error::Validation("simplex factors must be at least 2".into()));
        }
        check_pairwise_coprime(&a)?;
        let coefficients = [a1 * a2, a1 * a3, a2 * a3];
        let bound = (a1 * a2 * a3) as i64 - coefficients.iter().sum::<u64>() as i64;
        Ok(SimplexSpec { a, bound, coefficients })
    }

    pub fn product(&self) -> u64 {
        self.a.iter().product()
    }
}

pub fn simplex_lattice_count(spec: &SimplexSpec) -> u64 {
    if spec.bound <= 0 {
        return 0;
    }
    let bound = spec.bound as u64;
    let [cx, cy, cz] = spec.coefficients;
    let mut count = 0;
    for x in 0..=bound / cx {
        let rx = bound - x * cx;
        for y in 0..=rx / cy {
            let ry = rx - y * cy;
            for z in 0..=ry / cz {
                if z * cz < ry {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Euclidean volume `bound^3 / (6 (a1 a2 a3)^2)`, or 0 when the region is empty.
pub fn simplex_volume(spec: &SimplexSpec) -> Ratio<i128> {
    if spec.bound <= 0 {
        return Ratio::from_integer(0);
    }
    let b = spec.bound as i128;
    let p = spec.product() as i128;
    Ratio::new(b * b * b, 6 * p * p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplexRecord {
    pub a: [u64; 3],
    pub bound: i64,
    pub count: u64,
    #[serde(serialize_with = "ratio_string")]
    pub volume: Ratio<i128>,
}

fn ratio_string<S: Serializer>(r: &Ratio<i128>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

pub fn simplex_record(spec: &SimplexSpec) -> SimplexRecord {
    SimplexRecord {
        a: spec.a,
        bound: spec.bound,
        count: simplex_lattice_count(spec),
        volume: simplex_volume(spec),
    }
}
