//! The quotient Boolean ring `P(X)/I` on finite grounds.

use alloc::vec::Vec;

use crate::error::Error;
use crate::fault::{self, Fault};
use crate::finset::FinSet;
use crate::ideal::Ideal;
use crate::union_find::UnionFind;

/// Cosets of `I` in `P(X)`, one least representative per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    pub ideal: Ideal,
    pub cosets: Vec<FinSet>,
    classes: Vec<Vec<FinSet>>,
}

impl QuotientRing {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// The classes themselves, each ascending, ordered by representative.
    pub fn classes(&self) -> &[Vec<FinSet>] {
        &self.classes
    }

    /// Representative of the class containing `set`.
    pub fn representative(&self, set: FinSet) -> Option<FinSet> {
        self.classes
            .iter()
            .find(|c| c.binary_search(&set).is_ok())
            .map(|c| c[0])
    }
}

/// `Y △ Z`.
pub fn symdiff(a: FinSet, b: FinSet) -> FinSet {
    a ^ b
}

/// Partitions `P(X)` by the closeness relation `Y ~ Z iff Y △ Z ∈ I`.
pub fn quotient_cosets(ideal: &Ideal) -> Result<QuotientRing, Error> {
    quotient_cosets_with(ideal, None)
}

pub fn quotient_cosets_with(ideal: &Ideal, fault: Option<Fault>) -> Result<QuotientRing, Error> {
    if !ideal.ground.is_finite() {
        return Err(Error::FiniteGroundRequired);
    }
    ideal.require_valid()?;
    let subsets = ideal.ground.subsets()?;
    let members = ideal.members()?;
    let by_union = fault::active(fault, Fault::QuotientByUnion);
    let mut uf = UnionFind::new(subsets.len());
    // The window is [0, n), so a subset's bit pattern is its index.
    for &y in &subsets {
        if by_union {
            if ideal.contains(y) {
                for &z in &members {
                    uf.union(y.bits() as usize, z.bits() as usize);
                }
            }
        } else {
            for &j in &members {
                uf.union(y.bits() as usize, symdiff(y, j).bits() as usize);
            }
        }
    }
    let classes: Vec<Vec<FinSet>> = uf
        .classes()
        .into_iter()
        .map(|c| c.into_iter().map(|i| FinSet::from_bits(i as u64)).collect())
        .collect();
    let cosets = classes.iter().map(|c: &Vec<FinSet>| c[0]).collect();
    Ok(QuotientRing {
        ideal: ideal.clone(),
        cosets,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{all_finite_ideals, GroundSet};

    fn set(xs: &[u32]) -> FinSet {
        FinSet::from_elements(xs.iter().copied())
    }

    /// Pairwise sweep of the relation, independent of the coset shortcut.
    fn brute_classes(ideal: &Ideal) -> Vec<Vec<FinSet>> {
        let all = ideal.ground.subsets().unwrap();
        let mut uf = UnionFind::new(all.len());
        for (i, &y) in all.iter().enumerate() {
            for (j, &z) in all.iter().enumerate() {
                if ideal.contains(y ^ z) {
                    uf.union(i, j);
                }
            }
        }
        uf.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|i| all[i]).collect())
            .collect()
    }

    #[test]
    fn principal_on_four_points_has_four_cosets() {
        let ideal = Ideal::principal(GroundSet::Finite(4), set(&[0, 1])).unwrap();
        let q = quotient_cosets(&ideal).unwrap();
        assert_eq!(q.len(), 4);
        assert_eq!(q.cosets, [set(&[]), set(&[2]), set(&[3]), set(&[2, 3])]);
        assert!(q.classes().iter().all(|c| c.len() == 4));
    }

    #[test]
    fn zero_ideal_gives_singleton_classes() {
        let ideal = Ideal::principal(GroundSet::Finite(3), FinSet::EMPTY).unwrap();
        assert_eq!(quotient_cosets(&ideal).unwrap().len(), 8);
    }

    #[test]
    fn maximal_ideal_gives_two_cosets() {
        for n in 1..=5 {
            for x in 0..n {
                let q = quotient_cosets(&Ideal::maximal(n, x).unwrap()).unwrap();
                assert_eq!(q.len(), 2);
            }
        }
    }

    #[test]
    fn matches_pairwise_relation_sweep() {
        for n in 1..=4 {
            for ideal in all_finite_ideals(n).unwrap() {
                let q = quotient_cosets(&ideal).unwrap();
                assert_eq!(q.classes(), brute_classes(&ideal).as_slice(), "{ideal:?}");
                for (i, &a) in q.cosets.iter().enumerate() {
                    for &b in &q.cosets[i + 1..] {
                        assert!(!ideal.contains(a ^ b));
                    }
                }
            }
        }
    }

    #[test]
    fn union_fault_changes_the_count() {
        let ideal = Ideal::principal(GroundSet::Finite(4), set(&[0, 1])).unwrap();
        let q = quotient_cosets_with(&ideal, Some(Fault::QuotientByUnion)).unwrap();
        assert_ne!(q.len(), 4);
    }

    #[test]
    fn naturals_are_rejected() {
        assert_eq!(
            quotient_cosets(&Ideal::frechet(8).unwrap()),
            Err(Error::FiniteGroundRequired)
        );
    }
}
