//! Casimir eigenvalues λ^π = κ*(Λ, Λ+2ρ) and the complete enumeration of
//! all nonzero dominant G-integral weights with eigenvalue below a bound.
//!
//! The search is a depth-first scan over Bourbaki coefficient vectors with
//! per-coordinate pruning. Soundness of the pruning is the monotonicity
//! λ^{Λ+ωᵢ} > λ^Λ for dominant Λ, which holds because the fundamental
//! weights have pairwise non-negative κ*-products and κ*(ωᵢ, ρ) > 0; this
//! gives provable completeness below any bound.

use crate::error::Result;
use crate::lattice::LatticeSpec;
use crate::rat::{rint, Rat};
use crate::root_system::{build_root_system, RootSystem, SimpleLieType};
use crate::weight::Weight;
use num_traits::Zero;

/// One enumerated dominant weight with its Casimir eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueRecord {
    pub coeffs: Vec<i64>,
    pub highest_weight: Weight,
    pub eigenvalue: Rat,
}

/// λ^π of the irreducible representation with highest weight Λ.
pub fn casimir_eigenvalue(rs: &RootSystem, lambda: &Weight) -> Result<Rat> {
    rs.assert_dominant_integral(lambda)?;
    let arg = lambda + &rs.rho.scaled(&rint(2));
    rs.kappa_star(lambda, &arg)
}

fn eigenvalue_of_coeffs(rs: &RootSystem, coeffs: &[i64]) -> Rat {
    let lambda = rs.weight_from_coeffs(coeffs).expect("rank checked");
    let arg = &lambda + &rs.rho.scaled(&rint(2));
    &rs.kappa_scale * &lambda.dot(&arg)
}

fn within(bound: &Rat, strict: bool, value: &Rat) -> bool {
    if strict {
        value < bound
    } else {
        value <= bound
    }
}

/// Complete list of all nonzero dominant weights of `lat` with λ ≤ bound
/// (strictly below when `strict`), sorted by eigenvalue then coefficients.
pub fn enumerate_dominant_below(
    rs: &RootSystem,
    lat: &LatticeSpec,
    bound: &Rat,
    strict: bool,
) -> Vec<EigenvalueRecord> {
    let n = rs.rank();
    let mut coeffs = vec![0i64; n];
    let mut out = Vec::new();
    dfs(rs, lat, bound, strict, &mut coeffs, 0, &mut out);
    out.sort_by(|a, b| {
        a.eigenvalue
            .cmp(&b.eigenvalue)
            .then_with(|| a.coeffs.cmp(&b.coeffs))
    });
    out
}

fn dfs(
    rs: &RootSystem,
    lat: &LatticeSpec,
    bound: &Rat,
    strict: bool,
    coeffs: &mut Vec<i64>,
    idx: usize,
    out: &mut Vec<EigenvalueRecord>,
) {
    let mut a = 0i64;
    loop {
        coeffs[idx] = a;
        let lam = eigenvalue_of_coeffs(rs, coeffs);
        // increasing aᵢ strictly increases λ, so the first overflow ends the row
        if !within(bound, strict, &lam) {
            break;
        }
        if idx + 1 < coeffs.len() {
            dfs(rs, lat, bound, strict, coeffs, idx + 1, out);
        } else if !lam.is_zero() {
            let w = rs.weight_from_coeffs(coeffs).expect("rank checked");
            if lat.contains(&w) {
                out.push(EigenvalueRecord {
                    coeffs: coeffs.clone(),
                    highest_weight: w,
                    eigenvalue: lam,
                });
            }
        }
        a += 1;
    }
    coeffs[idx] = 0;
}

/// One row group of the λ^π ≤ 1 table.
#[derive(Debug, Clone)]
pub struct SmallTableRow {
    pub lie_type: SimpleLieType,
    pub records: Vec<EigenvalueRecord>,
}

/// For each simple type of rank up to `rank_cap`, the exact set of nonzero
/// dominant algebraically integral weights with λ ≤ 1.
pub fn regenerate_small_table(rank_cap: usize) -> Vec<SmallTableRow> {
    let mut types = Vec::new();
    for n in 1..=rank_cap {
        types.push(SimpleLieType::a(n));
    }
    for n in 2..=rank_cap {
        types.push(SimpleLieType::b(n));
    }
    for n in 2..=rank_cap {
        types.push(SimpleLieType::c(n));
    }
    for n in 3..=rank_cap {
        types.push(SimpleLieType::d(n));
    }
    if rank_cap >= 6 {
        types.push(SimpleLieType::e6());
    }
    if rank_cap >= 7 {
        types.push(SimpleLieType::e7());
    }
    if rank_cap >= 8 {
        types.push(SimpleLieType::e8());
    }
    if rank_cap >= 4 {
        types.push(SimpleLieType::f4());
    }
    types.push(SimpleLieType::g2());

    types
        .into_iter()
        .map(|t| {
            let rs = build_root_system(t);
            let lat = crate::lattice::lattice_of(&rs, crate::lattice::GroupForm::SimplyConnected)
                .expect("sc lattice always exists");
            let records = enumerate_dominant_below(&rs, &lat, &rint(1), false);
            SmallTableRow {
                lie_type: t,
                records,
            }
        })
        .collect()
}

/// Render the small table in the stable record format used by the CLI and
/// the golden file.
pub fn render_small_table(rows: &[SmallTableRow]) -> String {
    let mut s = String::new();
    for row in rows {
        let rs = build_root_system(row.lie_type);
        for rec in &row.records {
            let dim = rs.weyl_dim(&rec.highest_weight).expect("dominant integral");
            let coeffs: Vec<String> = rec.coeffs.iter().map(|c| c.to_string()).collect();
            s.push_str(&format!(
                "{} a=({}) lambda={} dim={}\n",
                row.lie_type,
                coeffs.join(","),
                rec.eigenvalue,
                dim
            ));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{lattice_of, GroupForm};
    use crate::rat::rat;

    #[test]
    fn headline_eigenvalues() {
        let b3 = build_root_system(SimpleLieType::b(3));
        assert_eq!(
            casimir_eigenvalue(&b3, &b3.fundamental_weights[2]).unwrap(),
            rat(21, 40)
        );
        let g2 = build_root_system(SimpleLieType::g2());
        assert_eq!(
            casimir_eigenvalue(&g2, &g2.fundamental_weights[0]).unwrap(),
            rat(1, 2)
        );
        let f4 = build_root_system(SimpleLieType::f4());
        assert_eq!(
            casimir_eigenvalue(&f4, &f4.fundamental_weights[3]).unwrap(),
            rat(2, 3)
        );
        let e6 = build_root_system(SimpleLieType::e6());
        assert_eq!(
            casimir_eigenvalue(&e6, &e6.fundamental_weights[0]).unwrap(),
            rat(13, 18)
        );
        let e7 = build_root_system(SimpleLieType::e7());
        assert_eq!(
            casimir_eigenvalue(&e7, &e7.fundamental_weights[6]).unwrap(),
            rat(19, 24)
        );
    }

    #[test]
    fn eigenvalue_zero_iff_zero_weight() {
        let c3 = build_root_system(SimpleLieType::c(3));
        let zero = Weight::zero(3);
        assert!(casimir_eigenvalue(&c3, &zero).unwrap().is_zero());
        for w in &c3.fundamental_weights {
            assert!(!casimir_eigenvalue(&c3, w).unwrap().is_zero());
        }
    }

    #[test]
    fn e8_below_one_strict_is_empty() {
        let e8 = build_root_system(SimpleLieType::e8());
        let lat = lattice_of(&e8, GroupForm::SimplyConnected).unwrap();
        let found = enumerate_dominant_below(&e8, &lat, &rint(1), true);
        assert!(found.is_empty());
    }

    #[test]
    fn c3_below_one_strict() {
        let c3 = build_root_system(SimpleLieType::c(3));
        let lat = lattice_of(&c3, GroupForm::SimplyConnected).unwrap();
        let found = enumerate_dominant_below(&c3, &lat, &rint(1), true);
        let got: Vec<(Vec<i64>, Rat)> = found
            .iter()
            .map(|r| (r.coeffs.clone(), r.eigenvalue.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![1, 0, 0], rat(7, 16)),
                (vec![0, 1, 0], rat(3, 4)),
                (vec![0, 0, 1], rat(15, 16)),
            ]
        );
    }

    #[test]
    fn g2_below_one_strict() {
        let g2 = build_root_system(SimpleLieType::g2());
        let lat = lattice_of(&g2, GroupForm::SimplyConnected).unwrap();
        let found = enumerate_dominant_below(&g2, &lat, &rint(1), true);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].coeffs, vec![1, 0]);
        assert_eq!(found[0].eigenvalue, rat(1, 2));
    }

    #[test]
    fn lattice_filter_respected() {
        // on Sp(3)/Z2 only ω2 survives below 1
        let c3 = build_root_system(SimpleLieType::c(3));
        let lat = lattice_of(&c3, GroupForm::SpZ2).unwrap();
        let found = enumerate_dominant_below(&c3, &lat, &rint(1), true);
        let coeffs: Vec<Vec<i64>> = found.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(coeffs, vec![vec![0, 1, 0]]);
    }

    #[test]
    fn table2_spot_rows() {
        let rows = regenerate_small_table(8);
        let find = |t: SimpleLieType| rows.iter().find(|r| r.lie_type == t).unwrap();
        // D4 standard: 7/12
        let d4 = find(SimpleLieType::d(4));
        assert!(d4
            .records
            .iter()
            .any(|r| r.coeffs == vec![1, 0, 0, 0] && r.eigenvalue == rat(7, 12)));
        // E6 row [27]: 13/18, twice (ω1 and ω6)
        let e6 = find(SimpleLieType::e6());
        let count = e6
            .records
            .iter()
            .filter(|r| r.eigenvalue == rat(13, 18))
            .count();
        assert_eq!(count, 2);
        // E7 row [56]: 19/24
        let e7 = find(SimpleLieType::e7());
        assert!(e7.records.iter().any(|r| r.eigenvalue == rat(19, 24)));
    }
}
