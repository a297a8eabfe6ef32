//! Spherical invariant dimensions, the λ₁ search, the fast lower-bound
//! paths, and the conformal ν-classification.

use crate::casimir::enumerate_dominant_below;
use crate::einstein::SpaceSpec;
use crate::error::{Error, Result};
use crate::lattice::GroupForm;
use crate::rat::{rint, Rat};
use crate::rep::{decompose, restrict, weight_system};
use crate::root_system::Family;
use crate::weight::Weight;
use std::collections::BTreeSet;
use std::fmt;

/// dim V_{π_Λ}^H: the multiplicity of the trivial representation in the
/// branching of π_Λ along the space's restriction map. H is connected, so
/// this equals the 𝔥-invariant dimension.
pub fn invariant_dim(space: &SpaceSpec, lambda: &Weight) -> Result<u64> {
    let rs = space.root_system();
    rs.assert_dominant_integral(lambda)?;
    if !space.lattice().contains(lambda) {
        return Err(Error::NotInLattice(lambda.to_string()));
    }
    invariant_dim_unchecked(space, lambda)
}

fn invariant_dim_unchecked(space: &SpaceSpec, lambda: &Weight) -> Result<u64> {
    let ws = weight_system(space.root_system(), lambda)?;
    let restricted = restrict(&ws, &space.f)?;
    let dec = decompose(&space.h, &restricted)?;
    Ok(dec.trivial_multiplicity())
}

/// Result of the λ₁ search: either the exact smallest positive eigenvalue
/// with a witness weight, or the statement that no spherical representation
/// exists with eigenvalue at or below the cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lambda1 {
    Value {
        eigenvalue: Rat,
        witness: Weight,
        witness_coeffs: Vec<i64>,
    },
    GreaterThan(Rat),
}

impl fmt::Display for Lambda1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda1::Value { eigenvalue, .. } => write!(f, "{eigenvalue}"),
            Lambda1::GreaterThan(cap) => write!(f, "> {cap}"),
        }
    }
}

/// Increasing-eigenvalue sweep with doubling bounds: enumerate all nonzero
/// dominant lattice weights with λ ≤ bound (complete), scan them in
/// eigenvalue order, and return the first spherical one. Completeness of
/// the enumeration makes the first hit the minimum.
pub fn lambda1(space: &SpaceSpec, cap: &Rat) -> Result<Lambda1> {
    let rs = space.root_system();
    let lat = space.lattice();
    let mut bound = rint(1);
    let mut checked: BTreeSet<Vec<i64>> = BTreeSet::new();
    loop {
        if bound > *cap {
            bound = cap.clone();
        }
        let candidates = enumerate_dominant_below(rs, lat, &bound, false);
        for rec in &candidates {
            if !checked.insert(rec.coeffs.clone()) {
                continue;
            }
            let d = invariant_dim_unchecked(space, &rec.highest_weight)?;
            if d > 0 {
                return Ok(Lambda1::Value {
                    eigenvalue: rec.eigenvalue.clone(),
                    witness: rec.highest_weight.clone(),
                    witness_coeffs: rec.coeffs.clone(),
                });
            }
        }
        if bound == *cap {
            return Ok(Lambda1::GreaterThan(cap.clone()));
        }
        bound = bound * rint(2);
    }
}

/// A certificate that λ₁ ≥ 1, naming the sufficient-condition item that
/// applied and the invariant dimensions it checked.
#[derive(Debug, Clone)]
pub struct LowerBoundCertificate {
    pub item: usize,
    pub checked: Vec<(Vec<i64>, u64)>,
}

impl fmt::Display for LowerBoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.checked.is_empty() {
            write!(f, "item ({}) unconditional", self.item)
        } else {
            let ws: Vec<String> = self
                .checked
                .iter()
                .map(|(c, _)| {
                    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    format!("({})", parts.join(","))
                })
                .collect();
            write!(f, "item ({}), vanishing at {}", self.item, ws.join(" "))
        }
    }
}

fn check_vanishing(
    space: &SpaceSpec,
    item: usize,
    weights: &[Vec<i64>],
) -> Result<Option<LowerBoundCertificate>> {
    let rs = space.root_system();
    let mut checked = Vec::new();
    for coeffs in weights {
        let w = rs.weight_from_coeffs(coeffs)?;
        let d = invariant_dim_unchecked(space, &w)?;
        if d > 0 {
            return Ok(None);
        }
        checked.push((coeffs.clone(), d));
    }
    Ok(Some(LowerBoundCertificate { item, checked }))
}

fn unit_coeffs(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; rank];
    v[i] = 1;
    v
}

/// The unconditional items, which depend on the quotient form alone and
/// need no embedding data: usable even for entries whose restriction
/// matrix is still pending.
pub fn form_level_lower_bound(
    t: crate::root_system::SimpleLieType,
    form: GroupForm,
) -> Option<LowerBoundCertificate> {
    let unconditional = |item: usize| {
        Some(LowerBoundCertificate {
            item,
            checked: vec![],
        })
    };
    match (t.family, form) {
        (Family::A, GroupForm::SuQuotient(d)) => {
            let nn = (t.rank + 1) as u64;
            if d != 1 && d != 2 && d != 3 {
                unconditional(3)
            } else if nn > 7 && d != 1 && d != 2 {
                unconditional(4)
            } else {
                None
            }
        }
        (Family::D, GroupForm::SoZ2) => unconditional(13),
        (Family::E8, _) => unconditional(14),
        (Family::E7, GroupForm::E7Z2) => unconditional(16),
        (Family::E6, GroupForm::E6Z3) => unconditional(18),
        _ => None,
    }
}

/// Dispatch over the twenty sufficient-condition items. Items keyed to a
/// quotient form are tried first (several are unconditional); the
/// algebra-level items check the finite list of invariant-dimension
/// vanishings. Returns the certificate or nothing.
///
/// For type D with even rank the half-spin weights are not dual to each
/// other, so the small-rank orthogonal item checks both of them; this is a
/// strictly stronger condition and keeps the certificate sound.
pub fn fast_lower_bound(space: &SpaceSpec) -> Result<Option<LowerBoundCertificate>> {
    let t = space.g_type;
    let n = t.rank;
    let unit = |i: usize| unit_coeffs(n, i);

    if let Some(cert) = form_level_lower_bound(t, space.form) {
        return Ok(Some(cert));
    }

    // remaining form-specific items
    match (t.family, space.form) {
        (Family::A, GroupForm::SuQuotient(d)) => {
            let nn = (n + 1) as u64;
            if d == 2 && nn % 2 == 0 {
                return check_vanishing(space, 5, &[unit(1)]);
            }
            if d == 3 && nn == 6 {
                return check_vanishing(space, 6, &[unit(2)]);
            }
        }
        (Family::C, GroupForm::SpZ2) => {
            return check_vanishing(space, 9, &[unit(1)]);
        }
        (Family::B, GroupForm::So) => {
            return check_vanishing(space, 12, &[unit(0)]);
        }
        (Family::D, GroupForm::So) => {
            return check_vanishing(space, 12, &[unit(0)]);
        }
        _ => {}
    }

    // algebra-level items
    match t.family {
        Family::A => {
            let nn = n + 1;
            if nn == 6 || nn == 7 {
                check_vanishing(space, 2, &[unit(0), unit(1), unit(2)])
            } else {
                check_vanishing(space, 1, &[unit(0), unit(1)])
            }
        }
        Family::C => {
            if n == 3 {
                check_vanishing(space, 8, &[unit(0), unit(1), unit(2)])
            } else {
                check_vanishing(space, 7, &[unit(0), unit(1)])
            }
        }
        Family::B => {
            let big_n = 2 * n + 1;
            if big_n >= 15 {
                check_vanishing(space, 10, &[unit(0)])
            } else {
                check_vanishing(space, 11, &[unit(0), unit(n - 1)])
            }
        }
        Family::D => {
            let big_n = 2 * n;
            if big_n >= 15 {
                check_vanishing(space, 10, &[unit(0)])
            } else if n % 2 == 0 {
                check_vanishing(space, 11, &[unit(0), unit(n - 2), unit(n - 1)])
            } else {
                check_vanishing(space, 11, &[unit(0), unit(n - 1)])
            }
        }
        Family::E8 => Ok(Some(LowerBoundCertificate {
            item: 14,
            checked: vec![],
        })),
        Family::E7 => check_vanishing(space, 15, &[unit(6)]),
        Family::E6 => check_vanishing(space, 17, &[unit(0)]),
        Family::F4 => check_vanishing(space, 19, &[unit(3)]),
        Family::G2 => check_vanishing(space, 20, &[unit(0)]),
    }
}

/// How λ₁ compares with 2E in conformal directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConformalClass {
    /// λ₁ < 2E and the space is not a round sphere.
    UnstableDirections,
    /// λ₁ < 2E but the space is a round sphere: ν-stable regardless.
    RoundSphereException,
    /// λ₁ = 2E.
    Neutral,
    /// λ₁ > 2E (or a lower bound already above 2E).
    NoUnstableDirections,
    /// Only λ₁ > cap is known and cap < 2E: undecided.
    Undecided,
}

impl fmt::Display for ConformalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConformalClass::UnstableDirections => "unstable conformal directions exist",
            ConformalClass::RoundSphereException => "round-sphere exception",
            ConformalClass::Neutral => "neutral in conformal directions",
            ConformalClass::NoUnstableDirections => "no unstable conformal directions",
            ConformalClass::Undecided => "undecided (cap below 2E)",
        };
        write!(f, "{s}")
    }
}

/// Joined classification: the conformal verdict from λ₁ vs 2E, the imported
/// Lichnerowicz-side verdict, and the resulting ν-label when derivable.
#[derive(Debug, Clone)]
pub struct Classification {
    pub conformal: ConformalClass,
    pub nu_label: Option<String>,
    /// Set when the space's effective realization may be a proper quotient;
    /// λ₁ of the quotient is then only bounded below by the computed value.
    pub cover_caveat: bool,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.conformal)?;
        if let Some(nu) = &self.nu_label {
            write!(f, "; {nu}")?;
        }
        if self.cover_caveat {
            write!(f, " [simply connected presentation; lower bound for quotients]")?;
        }
        Ok(())
    }
}

/// Compare λ₁ with 2E and join the imported H-stability verdict into a
/// ν-label where the combination decides one.
pub fn classify_conformal(space: &SpaceSpec, lambda1: &Lambda1) -> Classification {
    let two_e = &space.two_e;
    let conformal = match lambda1 {
        Lambda1::Value { eigenvalue, .. } => {
            if eigenvalue < two_e {
                if space.round_sphere {
                    ConformalClass::RoundSphereException
                } else {
                    ConformalClass::UnstableDirections
                }
            } else if eigenvalue == two_e {
                ConformalClass::Neutral
            } else {
                ConformalClass::NoUnstableDirections
            }
        }
        Lambda1::GreaterThan(cap) => {
            if cap >= two_e {
                ConformalClass::NoUnstableDirections
            } else {
                ConformalClass::Undecided
            }
        }
    };

    let h_verdict = space.imported.h_stability.as_deref().unwrap_or("");
    let nu_label = match conformal {
        ConformalClass::UnstableDirections => Some("nu-unstable".to_string()),
        ConformalClass::RoundSphereException => Some("nu-stable (round sphere)".to_string()),
        ConformalClass::Neutral | ConformalClass::NoUnstableDirections => {
            let lambda_l_below = h_verdict.contains("unstable");
            let lambda_l_above = h_verdict == "H.stable";
            let lambda_l_neutral = h_verdict.contains("n.") || h_verdict.contains("semistable");
            if lambda_l_below {
                Some("nu-unstable".to_string())
            } else if lambda_l_above {
                if conformal == ConformalClass::Neutral {
                    Some("neutrally nu-stable".to_string())
                } else {
                    Some("nu-stable".to_string())
                }
            } else if lambda_l_neutral {
                Some("nu-semistable".to_string())
            } else {
                None
            }
        }
        ConformalClass::Undecided => None,
    };

    Classification {
        conformal,
        nu_label,
        cover_caveat: space.cover_semantics,
    }
}
