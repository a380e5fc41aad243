//! Factorizations over a finite ground set of positive integers and the
//! shared-support equivalence that defines Betti elements.

use serde::Serialize;

use crate::error::{Error, Result};

/// Ordered ground set `(t_1, ..., t_l)`; positions are factorization coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet(Vec<u64>);

impl GroundSet {
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Validation("ground set is empty".into()));
        }
        if elements.contains(&0) {
            return Err(Error::Validation("ground set elements must be positive".into()));
        }
        for (i, x) in elements.iter().enumerate() {
            if elements[..i].contains(x) {
                return Err(Error::Validation(format!("ground set repeats {x}")));
            }
        }
        Ok(GroundSet(elements))
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factorization(&self, exponents: Vec<u64>) -> Result<Factorization> {
        if exponents.len() != self.len() {
            return Err(Error::Validation(format!(
                "expected {} exponents, got {}",
                self.len(),
                exponents.len()
            )));
        }
        let value = exponents.iter().zip(&self.0).map(|(e, t)| e * t).sum();
        Ok(Factorization { exponents, value })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    pub exponents: Vec<u64>,
    pub value: u64,
}

impl Factorization {
    pub fn shares_support(&self, other: &Factorization) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .any(|(&a, &b)| a != 0 && b != 0)
    }
}

/// All exponent vectors `v` with `v . T = s`, lexicographically ascending.
pub fn fiber(ground: &GroundSet, s: u64) -> Vec<Factorization> {
    fn walk(t: &[u64], rest: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        match t.split_first() {
            None => {
                if rest == 0 {
                    out.push(prefix.clone());
                }
            }
            Some((&head, tail)) => {
                for e in 0..=rest / head {
                    prefix.push(e);
                    walk(tail, rest - e * head, prefix, out);
                    prefix.pop();
                }
            }
        }
    }

    let mut out = Vec::new();
    walk(ground.elements(), s, &mut Vec::with_capacity(ground.len()), &mut out);
    out.into_iter()
        .map(|exponents| Factorization { exponents, value: s })
        .collect()
}

/// A fiber split into its shared-support classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberAnalysis {
    pub element: u64,
    #[serde(serialize_with = "exponent_lists")]
    pub factorizations: Vec<Factorization>,
    /// Indices into `factorizations`, ascending within a class; classes are
    /// ordered by their representative.
    pub classes: Vec<Vec<usize>>,
    /// Lexicographically smallest member of each class.
    #[serde(serialize_with = "exponent_lists")]
    pub representatives: Vec<Factorization>,
}

fn exponent_lists<S: serde::Serializer>(
    fs: &[Factorization],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(fs.iter().map(|f| &f.exponents))
}

impl FiberAnalysis {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_betti(&self) -> bool {
        self.classes.len() >= 2
    }

    pub fn class_members(&self, class: usize) -> impl Iterator<Item = &Factorization> {
        self.classes[class].iter().map(|&i| &self.factorizations[i])
    }
}

/// Connected components of the graph joining factorizations whose supports meet.
pub fn classes(factorizations: Vec<Factorization>) -> Result<FiberAnalysis> {
    let element = factorizations.first().map_or(0, |f| f.value);
    if let Some(bad) = factorizations.iter().find(|f| f.value != element) {
        return Err(Error::Domain(format!(
            "fiber mixes values {element} and {}",
            bad.value
        )));
    }

    let n = factorizations.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if factorizations[i].shares_support(&factorizations[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }

    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(i);
    }

    let mut keyed: Vec<(Factorization, Vec<usize>)> = groups
        .into_iter()
        .map(|g| {
            let rep = g.iter().map(|&i| &factorizations[i]).min().unwrap().clone();
            (rep, g)
        })
        .collect();
    keyed.sort();
    let (representatives, classes) = keyed.into_iter().unzip();

    Ok(FiberAnalysis {
        element,
        factorizations,
        classes,
        representatives,
    })
}

pub fn analyze(ground: &GroundSet, s: u64) -> FiberAnalysis {
    classes(fiber(ground, s)).expect("a fiber has a single value")
}

/// Elements below `bound` whose fibers split into at least two classes.
pub fn betti_elements(ground: &GroundSet, bound: u64) -> Vec<u64> {
    (0..bound).filter(|&s| analyze(ground, s).is_betti()).collect()
}
