use serde::{Deserialize, Serialize};

use super::{exp_star, HyperBallean, HyperRule};
use crate::ballean::components;
use crate::error::Error;
use crate::fault::Fault;
use crate::finset::FinSet;
use crate::ideal::Ideal;
use crate::quotient::{quotient_cosets_with, symdiff};

/// Largest ground for which components are found by closing balls directly.
pub const MAX_COMPONENT_GROUND: u32 = 10;

/// A hyperballean read as a whole (`exp`, `C`) or without the empty set (`exp*`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Flavor {
    PointIdeal,
    Iary,
    Cartesian,
    ExpStarPointIdeal,
    ExpStarIary,
}

impl Flavor {
    pub fn rule(self) -> HyperRule {
        match self {
            Flavor::PointIdeal | Flavor::ExpStarPointIdeal => HyperRule::PointIdeal,
            Flavor::Iary | Flavor::ExpStarIary => HyperRule::Iary,
            Flavor::Cartesian => HyperRule::Cartesian,
        }
    }

    pub fn is_star(self) -> bool {
        matches!(self, Flavor::ExpStarPointIdeal | Flavor::ExpStarIary)
    }

    /// Whether the empty set is an isolated point of the flavor.
    pub fn isolates_empty(self) -> bool {
        self != Flavor::Cartesian
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum DscMethod {
    /// Close balls to a fixed point and count classes.
    Components,
    /// Count cosets of `P(X)/I`.
    Quotient,
    /// `2^ι(I)`: one factor `Z_2` per point the ideal misses.
    Crt,
}

impl DscMethod {
    pub fn name(self) -> &'static str {
        match self {
            DscMethod::Components => "components",
            DscMethod::Quotient => "quotient",
            DscMethod::Crt => "crt",
        }
    }
}

/// Closeness of `Y` and `Z`: `Y △ Z ∈ I`. Flavors that isolate `∅` reject it.
pub fn are_close(ideal: &Ideal, y: FinSet, z: FinSet, flavor: Flavor) -> Result<bool, Error> {
    if flavor.isolates_empty() && (y.is_empty() || z.is_empty()) {
        return Err(Error::EmptySetFlavorMismatch);
    }
    Ok(ideal.contains(symdiff(y, z)))
}

pub fn dsc(ideal: &Ideal, flavor: Flavor, method: DscMethod) -> Result<u64, Error> {
    dsc_with(ideal, flavor, method, None)
}

/// Number of connected components of the flavor's hyperballean.
///
/// `Components` counts classes directly. The counting methods evaluate the
/// identities `dsc(exp) = dsc(exp*) + 1 = dsc(C) + 1`, adding the isolated
/// `∅` only when `I` has a non-empty member (otherwise the coset `{∅}`
/// already counts it). For the point-ideal flavors those identities need
/// every point to lie in some member of `I`, which no finite model
/// satisfies: there a set missing `∪I` is isolated, and the direct count is
/// `2^(ι+1)` rather than `2^ι + 1`.
pub fn dsc_with(ideal: &Ideal, flavor: Flavor, method: DscMethod, fault: Option<Fault>) -> Result<u64, Error> {
    if !ideal.ground.is_finite() {
        return Err(Error::MethodUnavailable {
            method: method.name(),
        });
    }
    ideal.require_valid()?;
    if method == DscMethod::Components {
        let size = ideal.ground.window_size();
        if size > MAX_COMPONENT_GROUND {
            return Err(Error::WindowTooLarge { size });
        }
        let h = HyperBallean::with_fault(ideal, flavor.rule(), fault)?;
        let count = if flavor.is_star() {
            components(&exp_star(&h)?).len()
        } else {
            components(&h).len()
        };
        return Ok(count as u64);
    }
    let cartesian = match method {
        DscMethod::Quotient => quotient_cosets_with(ideal, fault)?.len() as u64,
        _ => 1u64 << ideal.iota()?,
    };
    let extra = u64::from(!ideal.cover().is_empty());
    Ok(match flavor {
        Flavor::Cartesian => cartesian,
        Flavor::PointIdeal | Flavor::Iary => cartesian + extra,
        Flavor::ExpStarPointIdeal | Flavor::ExpStarIary => cartesian + extra - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{all_finite_ideals, GroundSet};

    fn set(xs: &[u32]) -> FinSet {
        FinSet::from_elements(xs.iter().copied())
    }

    #[test]
    fn counts_for_a_two_point_cover() {
        let i = Ideal::principal(GroundSet::Finite(4), set(&[0, 1])).unwrap();
        for m in [DscMethod::Components, DscMethod::Quotient, DscMethod::Crt] {
            assert_eq!(dsc(&i, Flavor::Cartesian, m).unwrap(), 4);
            assert_eq!(dsc(&i, Flavor::Iary, m).unwrap(), 5);
            assert_eq!(dsc(&i, Flavor::ExpStarIary, m).unwrap(), 4);
        }
    }

    #[test]
    fn methods_agree_on_small_grounds() {
        for n in 1..=4 {
            for i in all_finite_ideals(n).unwrap() {
                for f in [Flavor::Iary, Flavor::Cartesian, Flavor::ExpStarIary] {
                    let c = dsc(&i, f, DscMethod::Components).unwrap();
                    assert_eq!(c, dsc(&i, f, DscMethod::Quotient).unwrap(), "{f:?} {i:?}");
                    assert_eq!(c, dsc(&i, f, DscMethod::Crt).unwrap(), "{f:?} {i:?}");
                }
            }
        }
    }

    #[test]
    fn point_ideal_components_on_finite_models() {
        for n in 1..=4 {
            for i in all_finite_ideals(n).unwrap() {
                let iota = i.iota().unwrap();
                let expected = if i.cover().is_empty() { 1 << n } else { 2 << iota };
                let got = dsc(&i, Flavor::PointIdeal, DscMethod::Components).unwrap();
                assert_eq!(got, expected, "{i:?}");
                let star = dsc(&i, Flavor::ExpStarPointIdeal, DscMethod::Components).unwrap();
                assert_eq!(star + 1, got);
                assert_eq!(
                    dsc(&i, Flavor::PointIdeal, DscMethod::Quotient).unwrap(),
                    dsc(&i, Flavor::PointIdeal, DscMethod::Crt).unwrap()
                );
            }
        }
    }

    #[test]
    fn maximal_and_zero_ideals() {
        let m = Ideal::maximal(5, 2).unwrap();
        assert_eq!(dsc(&m, Flavor::Cartesian, DscMethod::Quotient).unwrap(), 2);
        let z = Ideal::principal(GroundSet::Finite(3), FinSet::EMPTY).unwrap();
        assert_eq!(dsc(&z, Flavor::Cartesian, DscMethod::Components).unwrap(), 8);
        // With no non-empty member the isolated ∅ is already a coset.
        assert_eq!(dsc(&z, Flavor::PointIdeal, DscMethod::Components).unwrap(), 8);
    }

    #[test]
    fn closeness() {
        let i = Ideal::principal(GroundSet::Finite(3), set(&[0, 2])).unwrap();
        assert!(are_close(&i, set(&[0, 1]), set(&[1, 2]), Flavor::Iary).unwrap());
        assert!(are_close(&i, set(&[1]), set(&[1]), Flavor::PointIdeal).unwrap());
        assert!(are_close(&i, FinSet::EMPTY, set(&[0]), Flavor::Cartesian).unwrap());
        assert_eq!(
            are_close(&i, FinSet::EMPTY, set(&[0]), Flavor::Iary),
            Err(Error::EmptySetFlavorMismatch)
        );
    }

    #[test]
    fn naturals_have_no_method() {
        let fr = Ideal::frechet(8).unwrap();
        for m in [DscMethod::Components, DscMethod::Quotient, DscMethod::Crt] {
            assert!(matches!(
                dsc(&fr, Flavor::Cartesian, m),
                Err(Error::MethodUnavailable { .. })
            ));
        }
    }
}
