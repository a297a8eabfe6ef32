//! Integral weight lattices P(G) for every connected compact simple group
//! form, with exact membership tests.
//!
//! A lattice is stored as an integer generator matrix (scaled by the type's
//! coordinate denominator) plus a finite list of coset translates; the type-A
//! quotients SU(N)/Γ_d keep the coset union ∪_{d|p} (ω_p + 𝔸_{N−1}) so the
//! d | p filter stays auditable. Membership reduces to an integer linear
//! solve against a Hermite normal form computed once per lattice.

use crate::error::{Error, Result};
use crate::rat::rint;
use crate::root_system::{Family, RootSystem, SimpleLieType};
use crate::weight::Weight;
use num_traits::ToPrimitive;
use std::fmt;

/// Connected group form per the integral-weight-lattice classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupForm {
    /// Simply connected: SU(N), Spin(N), Sp(N), E6, E7, E8, F4, G2.
    SimplyConnected,
    /// SU(N)/Γ_d with d | N (d = 1 is SU(N), d = N the adjoint group).
    SuQuotient(u64),
    /// Sp(N)/ℤ₂.
    SpZ2,
    /// SO(N), both parities.
    So,
    /// SO(2m)/ℤ₂.
    SoZ2,
    /// Spin(2m)/{1,z} and Spin(2m)/{1,−z}, m even (the half-spin quotients).
    HalfSpinPlus,
    HalfSpinMinus,
    /// E7/ℤ₂.
    E7Z2,
    /// E6/ℤ₃.
    E6Z3,
}

impl GroupForm {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        Ok(match s {
            "sc" | "spin" => GroupForm::SimplyConnected,
            "sp-z2" | "sp/z2" => GroupForm::SpZ2,
            "so" => GroupForm::So,
            "so-z2" | "so/z2" => GroupForm::SoZ2,
            "spin+" | "half-spin+" => GroupForm::HalfSpinPlus,
            "spin-" | "half-spin-" => GroupForm::HalfSpinMinus,
            "e7-z2" | "e7/z2" => GroupForm::E7Z2,
            "e6-z3" | "e6/z3" => GroupForm::E6Z3,
            _ => {
                if let Some(d) = s.strip_prefix("su/") {
                    let d: u64 = d
                        .parse()
                        .map_err(|_| Error::Input(format!("bad form '{s}'")))?;
                    GroupForm::SuQuotient(d)
                } else {
                    return Err(Error::Input(format!("unknown group form '{s}'")));
                }
            }
        })
    }
}

impl fmt::Display for GroupForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupForm::SimplyConnected => write!(f, "sc"),
            GroupForm::SuQuotient(d) => write!(f, "su/{d}"),
            GroupForm::SpZ2 => write!(f, "sp-z2"),
            GroupForm::So => write!(f, "so"),
            GroupForm::SoZ2 => write!(f, "so-z2"),
            GroupForm::HalfSpinPlus => write!(f, "spin+"),
            GroupForm::HalfSpinMinus => write!(f, "spin-"),
            GroupForm::E7Z2 => write!(f, "e7-z2"),
            GroupForm::E6Z3 => write!(f, "e6-z3"),
        }
    }
}

/// Membership structure: integer basis (columns, scaled by `denom`) in
/// Hermite normal form, plus coset representatives.
#[derive(Debug, Clone)]
pub struct LatticeSpec {
    pub lie_type: SimpleLieType,
    pub form: GroupForm,
    /// Scale factor clearing denominators: v ∈ lattice iff denom·v is an
    /// integer vector solvable against the basis modulo a coset.
    denom: i64,
    /// HNF of the scaled generator matrix, column style; full column rank.
    hnf: Vec<Vec<i128>>,
    /// Pivot row of each HNF column (strictly increasing).
    pivots: Vec<usize>,
    /// Coset representatives; always contains the zero weight exactly once
    /// unless the lattice is a genuine union of translates (type A).
    pub cosets: Vec<Weight>,
}

fn admissibility_error(t: SimpleLieType, form: GroupForm, why: &'static str) -> Error {
    Error::BadQuotient {
        family: t.family.letter(),
        quotient: form.to_string(),
        why,
    }
}

/// Integer column-style Hermite normal form; returns (hnf, pivots).
/// Columns with zero pivot are dropped; the result has full column rank.
fn hermite_normal_form(mut m: Vec<Vec<i128>>, rows: usize) -> (Vec<Vec<i128>>, Vec<usize>) {
    let mut result: Vec<Vec<i128>> = Vec::new();
    let mut pivots = Vec::new();
    let mut row = 0;
    while row < rows && !m.is_empty() {
        // gcd elimination on the current row across all remaining columns
        loop {
            m.sort_by_key(|c| c[row].abs());
            let nonzero: Vec<usize> = (0..m.len()).filter(|&j| m[j][row] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let j0 = nonzero[0];
            let p = m[j0][row];
            for &j in &nonzero[1..] {
                let q = m[j][row] / p;
                for r in 0..rows {
                    let delta = q * m[j0][r];
                    m[j][r] -= delta;
                }
            }
        }
        if let Some(j) = (0..m.len()).find(|&j| m[j][row] != 0) {
            let mut col = m.remove(j);
            if col[row] < 0 {
                for x in col.iter_mut() {
                    *x = -*x;
                }
            }
            result.push(col);
            pivots.push(row);
        }
        row += 1;
    }
    (result, pivots)
}

impl LatticeSpec {
    fn from_generators(
        t: SimpleLieType,
        form: GroupForm,
        generators: &[Weight],
        cosets: Vec<Weight>,
    ) -> Self {
        let denom = t.coord_denominator();
        let rows = t.ambient_dim();
        let cols: Vec<Vec<i128>> = generators
            .iter()
            .map(|g| {
                (0..rows)
                    .map(|r| {
                        let x = &g.0[r] * rint(denom);
                        debug_assert!(x.is_integer(), "generator not on the denom grid");
                        x.to_integer().to_i128().unwrap()
                    })
                    .collect()
            })
            .collect();
        let (hnf, pivots) = hermite_normal_form(cols, rows);
        LatticeSpec {
            lie_type: t,
            form,
            denom,
            hnf,
            pivots,
            cosets,
        }
    }

    pub fn rank(&self) -> usize {
        self.hnf.len()
    }

    /// Exact membership: Λ − c lies in the integer span of the basis for
    /// some coset representative c. Total on valid ambient weights.
    pub fn contains(&self, w: &Weight) -> bool {
        for c in &self.cosets {
            if self.in_base_lattice(&(w - c)) {
                return true;
            }
        }
        false
    }

    fn in_base_lattice(&self, v: &Weight) -> bool {
        let rows = self.lie_type.ambient_dim();
        if v.dim() != rows {
            return false;
        }
        let mut target: Vec<i128> = Vec::with_capacity(rows);
        for x in &v.0 {
            let s = x * rint(self.denom);
            if !s.is_integer() {
                return false;
            }
            match s.to_integer().to_i128() {
                Some(n) => target.push(n),
                None => return false,
            }
        }
        // forward substitution along the pivot structure
        for (j, col) in self.hnf.iter().enumerate() {
            let p = self.pivots[j];
            // rows before this pivot must already be cleared
            let r = target[p];
            let d = col[p];
            if r % d != 0 {
                return false;
            }
            let q = r / d;
            if q != 0 {
                for i in 0..rows {
                    target[i] -= q * col[i];
                }
            }
        }
        target.iter().all(|&x| x == 0)
    }
}

/// The integral weight lattice of a group form.
pub fn lattice_of(rs: &RootSystem, form: GroupForm) -> Result<LatticeSpec> {
    let t = rs.lie_type;
    let n = t.rank;
    let d_amb = t.ambient_dim();
    let zero = vec![Weight::zero(d_amb)];
    let unit = |i: usize| {
        let mut v = Weight::zero(d_amb);
        v.0[i] = rint(1);
        v
    };
    let ints: Vec<Weight> = (0..d_amb).map(unit).collect();
    let half_all = {
        let mut v = Weight::zero(d_amb);
        for i in 0..d_amb {
            v.0[i] = crate::rat::rat(1, 2);
        }
        v
    };

    match (t.family, form) {
        // ---- simply connected: the full weight lattice P(g_C) ----
        (_, GroupForm::SimplyConnected) => Ok(LatticeSpec::from_generators(
            t,
            form,
            &rs.fundamental_weights,
            zero,
        )),

        // ---- type A quotients: coset union over d | p ----
        (Family::A, GroupForm::SuQuotient(d)) => {
            let nn = (n + 1) as u64;
            if d == 0 || nn % d != 0 {
                return Err(admissibility_error(t, form, "d must divide N"));
            }
            let mut cosets = Vec::new();
            let mut p = d;
            while p <= nn {
                if p == nn {
                    cosets.push(Weight::zero(d_amb));
                } else {
                    cosets.push(rs.fundamental_weights[(p - 1) as usize].clone());
                }
                p += d;
            }
            Ok(LatticeSpec::from_generators(
                t,
                form,
                &rs.simple_roots,
                cosets,
            ))
        }

        // ---- symplectic ----
        (Family::C, GroupForm::SpZ2) => {
            // root lattice D_n: integer vectors with even coordinate sum
            let mut gens: Vec<Weight> = rs.simple_roots.clone();
            gens.push(unit(0).scaled(&rint(2)));
            Ok(LatticeSpec::from_generators(t, form, &gens, zero))
        }

        // ---- orthogonal ----
        (Family::B, GroupForm::So) => Ok(LatticeSpec::from_generators(t, form, &ints, zero)),
        (Family::D, GroupForm::So) => Ok(LatticeSpec::from_generators(t, form, &ints, zero)),
        (Family::D, GroupForm::SoZ2) => {
            Ok(LatticeSpec::from_generators(t, form, &rs.simple_roots, zero))
        }
        (Family::D, GroupForm::HalfSpinPlus) | (Family::D, GroupForm::HalfSpinMinus) => {
            if n % 2 != 0 {
                return Err(admissibility_error(
                    t,
                    form,
                    "half-spin quotients need even rank",
                ));
            }
            let mut h = half_all;
            if form == GroupForm::HalfSpinMinus {
                h.0[n - 1] = -h.0[n - 1].clone();
            }
            let mut gens: Vec<Weight> = rs.simple_roots.clone();
            gens.push(h);
            Ok(LatticeSpec::from_generators(t, form, &gens, zero))
        }

        // ---- exceptional quotients: the root lattice ----
        (Family::E7, GroupForm::E7Z2) | (Family::E6, GroupForm::E6Z3) => {
            Ok(LatticeSpec::from_generators(t, form, &rs.simple_roots, zero))
        }

        _ => Err(admissibility_error(t, form, "form not defined for this type")),
    }
}
