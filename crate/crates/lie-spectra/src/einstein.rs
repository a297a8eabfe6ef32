//! Einstein constant of a standard homogeneous space from the Wang–Ziller
//! expression, stored as 2E (the comparison quantity for λ₁ throughout).

use crate::embedding::{
    killing_ratios, restriction_map, validate_embedding, EmbeddingSpec, ReductiveSubalgebra,
    RestrictionMap,
};
use crate::error::{Error, Result};
use crate::lattice::{lattice_of, GroupForm, LatticeSpec};
use crate::rat::{rat, rint, Rat};
use crate::root_system::{build_root_system, RootSystem, SimpleLieType};
use num_traits::Zero;

/// Imported stability verdicts from the literature; catalog data, never
/// computed here.
#[derive(Debug, Clone, Default)]
pub struct ImportedVerdicts {
    pub h_stability: Option<String>,
    pub nu_stability: Option<String>,
}

/// A fully instantiated and validated standard homogeneous space.
#[derive(Debug, Clone)]
pub struct SpaceSpec {
    pub label: String,
    pub g_type: SimpleLieType,
    pub form: GroupForm,
    pub h: ReductiveSubalgebra,
    pub f: RestrictionMap,
    pub dim_p: usize,
    /// Killing ratios cᵢ of the simple ideals (the center contributes c₀ = 0).
    pub c: Vec<Rat>,
    pub two_e: Rat,
    pub round_sphere: bool,
    pub locally_symmetric: bool,
    /// Results hold for the simply connected presentation with connected H;
    /// when the effective realization is a proper quotient, λ₁ values are
    /// lower bounds for it.
    pub cover_semantics: bool,
    pub imported: ImportedVerdicts,
    g_rs: RootSystem,
    lat: LatticeSpec,
}

impl SpaceSpec {
    /// Instantiate a space: build the restriction map, gate it through
    /// `validate_embedding`, compute the Killing ratios and 2E.
    pub fn build(
        label: &str,
        g_type: SimpleLieType,
        form: GroupForm,
        h: ReductiveSubalgebra,
        spec: &EmbeddingSpec,
    ) -> Result<SpaceSpec> {
        let g_rs = build_root_system(g_type);
        let lat = lattice_of(&g_rs, form)?;
        let f = restriction_map(g_type, &h, spec)?;
        let report = validate_embedding(&g_rs, &h, &f)?;
        if !report.ok {
            return Err(Error::EmbeddingInvalid(format!(
                "{label}: {}",
                report.messages.join("; ")
            )));
        }
        let c = killing_ratios(&g_rs, &h, &f)?;
        let dim_p = report.dim_p;
        let two_e = einstein_constant_from_parts(&h, &c, dim_p, false)?;
        Ok(SpaceSpec {
            label: label.to_string(),
            g_type,
            form,
            h,
            f,
            dim_p,
            c,
            two_e,
            round_sphere: false,
            locally_symmetric: false,
            cover_semantics: false,
            imported: ImportedVerdicts::default(),
            g_rs,
            lat,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.g_rs
    }

    pub fn lattice(&self) -> &LatticeSpec {
        &self.lat
    }
}

/// 2E = 1/2 + Σᵢ dim 𝔥ᵢ (1 − cᵢ) / dim 𝔭, the abelian part entering with
/// c₀ = 0. The Wang–Ziller bounds 1/2 ≤ 2E ≤ 1 are asserted, with 2E = 1
/// only for locally symmetric spaces.
pub fn einstein_constant_from_parts(
    h: &ReductiveSubalgebra,
    c: &[Rat],
    dim_p: usize,
    locally_symmetric: bool,
) -> Result<Rat> {
    let mut acc = Rat::zero();
    for (i, _) in h.ideals.iter().enumerate() {
        let dim_hi = rint(h.root_system(i).dim() as i64);
        acc += dim_hi * (rint(1) - &c[i]);
    }
    acc += rint(h.abelian_rank as i64);
    let two_e = rat(1, 2) + acc / rint(dim_p as i64);
    let low = rat(1, 2);
    let high = rint(1);
    if two_e < low || two_e > high || (two_e == high && !locally_symmetric) {
        return Err(Error::EinsteinBounds(two_e.to_string()));
    }
    Ok(two_e)
}

/// Einstein constant of an instantiated space.
pub fn einstein_constant(space: &SpaceSpec) -> Result<Rat> {
    einstein_constant_from_parts(&space.h, &space.c, space.dim_p, space.locally_symmetric)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::Summand;

    #[test]
    fn flag_su3_two_e() {
        let t = ReductiveSubalgebra::torus(2);
        let space = SpaceSpec::build(
            "flag-su3",
            SimpleLieType::a(2),
            GroupForm::SimplyConnected,
            t,
            &EmbeddingSpec::MaxTorus,
        )
        .unwrap();
        assert_eq!(space.two_e, rat(5, 6));
        assert_eq!(space.dim_p, 6);
    }

    #[test]
    fn spin7_over_g2() {
        let h = ReductiveSubalgebra::new(vec![SimpleLieType::g2()], 0);
        let spec = EmbeddingSpec::DefiningRep(vec![Summand {
            per_ideal_coeffs: vec![vec![1, 0]],
            charges: vec![],
        }]);
        let space = SpaceSpec::build(
            "spin7/g2",
            SimpleLieType::b(3),
            GroupForm::SimplyConnected,
            h,
            &spec,
        )
        .unwrap();
        assert_eq!(space.two_e, rat(9, 10));
    }

    #[test]
    fn bounds_violation_is_an_error() {
        // a vanishing Killing ratio on a large ideal pushes 2E past 1
        let h = ReductiveSubalgebra::new(vec![SimpleLieType::a(1)], 0);
        let err = einstein_constant_from_parts(&h, &[Rat::zero()], 1, false);
        assert!(matches!(err, Err(Error::EinsteinBounds(_))));
    }

    #[test]
    fn family_xiii_smallest() {
        let h = ReductiveSubalgebra::new(vec![SimpleLieType::a(1); 3], 0);
        let summands: Vec<Summand> = (0..3)
            .map(|i| {
                let mut per = vec![vec![0]; 3];
                per[i] = vec![1];
                Summand {
                    per_ideal_coeffs: per,
                    charges: vec![],
                }
            })
            .collect();
        let space = SpaceSpec::build(
            "sp3/3sp1",
            SimpleLieType::c(3),
            GroupForm::SimplyConnected,
            h,
            &EmbeddingSpec::DefiningRep(summands),
        )
        .unwrap();
        assert_eq!(space.two_e, rat(7, 8));
    }
}
