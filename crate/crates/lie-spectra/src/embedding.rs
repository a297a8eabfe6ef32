//! Cartan restriction maps for an embedding 𝔥 ⊂ 𝔤, representation-type
//! detection, validation, and the Killing-ratio factors cᵢ.
//!
//! A restriction map is a rational matrix from the ε-coordinates of 𝔤 to
//! the stacked (ξ, charge)-coordinates of 𝔥. For classical 𝔤 defined by a
//! representation ρ of 𝔥 the matrix is derived from the weight multiset of
//! ρ; for exceptional 𝔤 the matrices are curated catalog data and must pass
//! `validate_embedding` before any λ₁ computation.

use crate::error::{Error, Result};
use crate::rat::{rint, Rat};
use crate::rep::{decompose, restrict, weight_system, IrrEntry, WeightSystem};
use crate::root_system::{build_root_system, Family, RootSystem, SimpleLieType};
use crate::weight::Weight;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// 𝔥 = 𝔥₀ ⊕ 𝔥₁ ⊕ ⋯ ⊕ 𝔥ᵣ with 𝔥₀ abelian of the given rank.
#[derive(Debug, Clone)]
pub struct ReductiveSubalgebra {
    pub ideals: Vec<SimpleLieType>,
    pub abelian_rank: usize,
    systems: Vec<RootSystem>,
}

impl ReductiveSubalgebra {
    pub fn new(ideals: Vec<SimpleLieType>, abelian_rank: usize) -> Self {
        let systems = ideals.iter().map(|&t| build_root_system(t)).collect();
        ReductiveSubalgebra {
            ideals,
            abelian_rank,
            systems,
        }
    }

    pub fn torus(rank: usize) -> Self {
        Self::new(Vec::new(), rank)
    }

    pub fn root_system(&self, i: usize) -> &RootSystem {
        &self.systems[i]
    }

    pub fn total_rank(&self) -> usize {
        self.ideals.iter().map(|t| t.rank).sum::<usize>() + self.abelian_rank
    }

    pub fn dim(&self) -> usize {
        self.systems.iter().map(|rs| rs.dim()).sum::<usize>() + self.abelian_rank
    }

    /// Sum of the ideals' ambient ε-dimensions (without charges).
    pub fn ideal_coords(&self) -> usize {
        self.ideals.iter().map(|t| t.ambient_dim()).sum()
    }

    /// Coordinate layout for stacked weights carrying `charges` extra
    /// abelian coordinates.
    pub fn layout(&self, charges: usize) -> HLayout {
        let mut offsets = Vec::with_capacity(self.ideals.len());
        let mut off = 0;
        for t in &self.ideals {
            offsets.push((off, t.ambient_dim()));
            off += t.ambient_dim();
        }
        HLayout {
            ideal_offsets: offsets,
            charge_offset: off,
            charges,
        }
    }

    pub fn layout_for(&self, ws: &WeightSystem) -> Result<HLayout> {
        let dim = match ws.mults.keys().next() {
            Some(w) => w.dim(),
            None => self.ideal_coords(),
        };
        let base = self.ideal_coords();
        if dim < base {
            return Err(Error::DimensionMismatch {
                expected: base,
                got: dim,
            });
        }
        Ok(self.layout(dim - base))
    }

    pub fn is_dominant_stacked(&self, layout: &HLayout, w: &Weight) -> bool {
        self.ideals.iter().enumerate().all(|(i, _)| {
            let (off, len) = layout.ideal_span(i);
            self.systems[i].is_dominant(&w.slice(off, len))
        })
    }

    /// Dimension of one irreducible entry (product of per-ideal Weyl dims).
    pub fn irr_dim(&self, entry: &IrrEntry) -> Result<u64> {
        let mut d = 1u64;
        for (i, z) in entry.per_ideal.iter().enumerate() {
            d *= self.systems[i].weyl_dim(z)?;
        }
        Ok(d)
    }

    /// The entry whose system is the adjoint of ideal `i`.
    pub fn adjoint_entry(&self, i: usize, charges: usize) -> IrrEntry {
        let per_ideal: Vec<Weight> = self
            .ideals
            .iter()
            .enumerate()
            .map(|(j, t)| {
                if j == i {
                    self.systems[j].highest_root()
                } else {
                    Weight::zero(t.ambient_dim())
                }
            })
            .collect();
        IrrEntry {
            per_ideal,
            charges: vec![Rat::zero(); charges],
        }
    }
}

impl fmt::Display for ReductiveSubalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.ideals.iter().map(|t| t.to_string()).collect();
        if self.abelian_rank > 0 {
            parts.push(format!("u1^{}", self.abelian_rank));
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// Offsets of the per-ideal coordinate blocks and the charge tail inside a
/// stacked 𝔥-weight.
#[derive(Debug, Clone)]
pub struct HLayout {
    ideal_offsets: Vec<(usize, usize)>,
    charge_offset: usize,
    charges: usize,
}

impl HLayout {
    pub fn ideal_span(&self, i: usize) -> (usize, usize) {
        self.ideal_offsets[i]
    }
    pub fn charge_span(&self) -> (usize, usize) {
        (self.charge_offset, self.charges)
    }
    pub fn total(&self) -> usize {
        self.charge_offset + self.charges
    }
}

/// One irreducible summand of a defining representation: per-ideal highest
/// weights in Bourbaki coefficients plus rational abelian charges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub per_ideal_coeffs: Vec<Vec<i64>>,
    pub charges: Vec<Rat>,
}

/// How the Cartan restriction map is specified.
#[derive(Debug, Clone)]
pub enum EmbeddingSpec {
    /// 𝔤 is the classical algebra defined by ρ = ⊕ summands.
    DefiningRep(Vec<Summand>),
    /// Curated matrix (rows = stacked 𝔥-coordinates incl. charges).
    ExplicitMatrix { rows: Vec<Vec<Rat>>, charges: usize },
    /// 𝔥 is a maximal torus; the map is the identity.
    MaxTorus,
}

/// Rational matrix from 𝔤's ε-coordinates to 𝔥's stacked coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionMap {
    pub rows: Vec<Vec<Rat>>,
    pub charges: usize,
}

impl RestrictionMap {
    pub fn g_dim(&self) -> usize {
        self.rows.first().map(|r| r.len()).unwrap_or(0)
    }

    pub fn h_dim(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, w: &Weight) -> Result<Weight> {
        if w.dim() != self.g_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.g_dim(),
                got: w.dim(),
            });
        }
        Ok(Weight(
            self.rows
                .iter()
                .map(|row| {
                    let mut acc = Rat::zero();
                    for (a, b) in row.iter().zip(w.0.iter()) {
                        acc += a * b;
                    }
                    acc
                })
                .collect(),
        ))
    }

    /// Denominator-cleared integer matrix with the common scale q:
    /// rows = q · int_rows⁻¹-free form, i.e. self = int_rows / q.
    pub fn int_form(&self) -> (Vec<Vec<i64>>, i64) {
        let mut q = 1i64;
        for row in &self.rows {
            for c in row {
                let den = c
                    .denom()
                    .to_i64()
                    .expect("restriction matrix denominator fits i64");
                q = num_integer::lcm(q, den);
            }
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        let s = c * rint(q);
                        s.to_integer().to_i64().expect("scaled matrix entry fits")
                    })
                    .collect()
            })
            .collect();
        (rows, q)
    }

    /// Compose with a linear map of 𝔤's ambient space (e.g. a Weyl element).
    pub fn compose_right(&self, m: &[Vec<Rat>]) -> RestrictionMap {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                (0..m[0].len())
                    .map(|j| {
                        let mut acc = Rat::zero();
                        for (k, cell) in row.iter().enumerate() {
                            acc += cell * &m[k][j];
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        RestrictionMap {
            rows,
            charges: self.charges,
        }
    }

    fn rational_rank(&self) -> usize {
        let mut m: Vec<Vec<Rat>> = self.rows.clone();
        let cols = self.g_dim();
        let mut rank = 0;
        for c in 0..cols {
            if let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) {
                m.swap(rank, p);
                let pivot = m[rank][c].clone();
                for r in 0..m.len() {
                    if r != rank && !m[r][c].is_zero() {
                        let factor = &m[r][c] / &pivot;
                        for cc in 0..cols {
                            let delta = &factor * &m[rank][cc];
                            m[r][cc] -= delta;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }
}

/// Real / quaternionic / complex trichotomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepType {
    Real,
    Quaternionic,
    Complex,
}

/// Type of one irreducible 𝔥-summand: complex iff not self-dual (per factor,
/// or a nonzero charge); among self-dual ones, quaternionic iff the number
/// of quaternionic simple factors is odd, where a factor is quaternionic
/// iff ⟨ζ, 2ρ∨⟩ is odd.
pub fn rep_type(h: &ReductiveSubalgebra, s: &Summand) -> Result<RepType> {
    if s.per_ideal_coeffs.len() != h.ideals.len() {
        return Err(Error::RepType(format!(
            "summand has {} factors, subalgebra has {}",
            s.per_ideal_coeffs.len(),
            h.ideals.len()
        )));
    }
    if s.charges.iter().any(|c| !c.is_zero()) {
        return Ok(RepType::Complex);
    }
    let mut quaternionic_factors = 0usize;
    for (i, coeffs) in s.per_ideal_coeffs.iter().enumerate() {
        let rs = h.root_system(i);
        let zeta = rs.weight_from_coeffs(coeffs)?;
        rs.assert_dominant_integral(&zeta)?;
        if rs.dual_weight(&zeta) != zeta {
            return Ok(RepType::Complex);
        }
        // Frobenius-Schur parity: Σ_{α>0} ⟨ζ, α∨⟩ mod 2
        let mut total = Rat::zero();
        for alpha in &rs.positive_roots {
            total += rs.coroot_pairing(&zeta, alpha);
        }
        debug_assert!(total.is_integer());
        if total.to_integer() % 2 != 0.into() {
            quaternionic_factors += 1;
        }
    }
    Ok(if quaternionic_factors % 2 == 1 {
        RepType::Quaternionic
    } else {
        RepType::Real
    })
}

fn summand_weight_list(h: &ReductiveSubalgebra, s: &Summand) -> Result<Vec<Weight>> {
    let mut sys = WeightSystem::singleton(Weight(vec![]));
    for (i, coeffs) in s.per_ideal_coeffs.iter().enumerate() {
        let rs = h.root_system(i);
        let zeta = rs.weight_from_coeffs(coeffs)?;
        sys = sys.outer(&weight_system(rs, &zeta)?);
    }
    let charge_tail = Weight(s.charges.clone());
    let mut list = Vec::new();
    for (w, m) in &sys.mults {
        let full = Weight::concat(&[w, &charge_tail]);
        for _ in 0..*m {
            list.push(full.clone());
        }
    }
    Ok(list)
}

/// Consistency of the summand types with the classical family of 𝔤:
/// complex → A, real → B/D, quaternionic → C. Non-self-dual summands must
/// occur in dual pairs for the orthogonal and symplectic targets.
fn check_defining_types(
    g_type: SimpleLieType,
    h: &ReductiveSubalgebra,
    summands: &[Summand],
) -> Result<()> {
    if matches!(g_type.family, Family::A) {
        return Ok(());
    }
    let want = match g_type.family {
        Family::B | Family::D => RepType::Real,
        Family::C => RepType::Quaternionic,
        _ => {
            return Err(Error::RepType(format!(
                "defining representations target classical types, not {g_type}"
            )))
        }
    };
    let mut unmatched_complex: Vec<&Summand> = Vec::new();
    for s in summands {
        match rep_type(h, s)? {
            RepType::Complex => {
                let dual = Summand {
                    per_ideal_coeffs: s
                        .per_ideal_coeffs
                        .iter()
                        .enumerate()
                        .map(|(i, c)| {
                            let rs = h.root_system(i);
                            let z = rs.weight_from_coeffs(c).expect("validated");
                            let dz = rs.dual_weight(&z);
                            rs.coeffs_of(&dz)
                                .iter()
                                .map(|r| crate::rat::to_i64(r).expect("integral"))
                                .collect()
                        })
                        .collect(),
                    charges: s.charges.iter().map(|c| -c).collect(),
                };
                if let Some(pos) = unmatched_complex.iter().position(|t| **t == dual) {
                    unmatched_complex.remove(pos);
                } else {
                    unmatched_complex.push(s);
                }
            }
            t if t == want => {}
            t => {
                return Err(Error::RepType(format!(
                    "self-dual summand of type {t:?} cannot define a type-{} group",
                    g_type.family.letter()
                )))
            }
        }
    }
    if !unmatched_complex.is_empty() {
        return Err(Error::RepType(
            "complex summands must occur in dual pairs for orthogonal/symplectic targets".into(),
        ));
    }
    Ok(())
}

/// Build the Cartan restriction map from an embedding spec.
///
/// For a defining representation the weights μ₁,…,μ_N of ρ are computed,
/// sorted, signed-paired for B/C/D (one lexicographically positive
/// representative per ±pair), and εᵢ ↦ μᵢ defines the matrix. The sign and
/// order ambiguity changes the map by a Weyl element of 𝔤 only.
pub fn restriction_map(
    g_type: SimpleLieType,
    h: &ReductiveSubalgebra,
    spec: &EmbeddingSpec,
) -> Result<RestrictionMap> {
    match spec {
        EmbeddingSpec::MaxTorus => {
            let d = g_type.ambient_dim();
            if !h.ideals.is_empty() {
                return Err(Error::RepType(
                    "maximal-torus embedding requires a purely abelian subalgebra".into(),
                ));
            }
            let rows: Vec<Vec<Rat>> = (0..d)
                .map(|i| {
                    let mut r = vec![Rat::zero(); d];
                    r[i] = rint(1);
                    r
                })
                .collect();
            Ok(RestrictionMap { rows, charges: d })
        }
        EmbeddingSpec::ExplicitMatrix { rows, charges } => {
            let base = h.ideal_coords();
            if rows.len() != base + charges {
                return Err(Error::DimensionMismatch {
                    expected: base + charges,
                    got: rows.len(),
                });
            }
            for row in rows {
                if row.len() != g_type.ambient_dim() {
                    return Err(Error::DimensionMismatch {
                        expected: g_type.ambient_dim(),
                        got: row.len(),
                    });
                }
            }
            let f = RestrictionMap {
                rows: rows.clone(),
                charges: *charges,
            };
            if f.rational_rank() < h.total_rank() {
                return Err(Error::EmbeddingInvalid(format!(
                    "explicit matrix has rank {} but the subalgebra has rank {}",
                    f.rational_rank(),
                    h.total_rank()
                )));
            }
            Ok(f)
        }
        EmbeddingSpec::DefiningRep(summands) => {
            check_defining_types(g_type, h, summands)?;
            let charges = summands
                .first()
                .map(|s| s.charges.len())
                .unwrap_or(0);
            let mut weights: Vec<Weight> = Vec::new();
            for s in summands {
                if s.charges.len() != charges {
                    return Err(Error::RepType(
                        "summands disagree on the number of abelian charges".into(),
                    ));
                }
                weights.extend(summand_weight_list(h, s)?);
            }
            let n_total = weights.len();
            let mus = match g_type.family {
                Family::A => {
                    if n_total != g_type.rank + 1 {
                        return Err(Error::Pairing(format!(
                            "defining rep has dimension {n_total}, type {g_type} needs {}",
                            g_type.rank + 1
                        )));
                    }
                    let mut sum = Weight::zero(weights[0].dim());
                    for w in &weights {
                        sum = &sum + w;
                    }
                    if !sum.is_zero() {
                        return Err(Error::Pairing(
                            "weights of an SU-defining rep must sum to zero".into(),
                        ));
                    }
                    weights.sort_by(|a, b| b.cmp(a));
                    weights
                }
                Family::B | Family::C | Family::D => {
                    let expect = match g_type.family {
                        Family::B => 2 * g_type.rank + 1,
                        _ => 2 * g_type.rank,
                    };
                    if n_total != expect {
                        return Err(Error::Pairing(format!(
                            "defining rep has dimension {n_total}, type {g_type} needs {expect}"
                        )));
                    }
                    signed_pairs(weights, g_type)?
                }
                _ => {
                    return Err(Error::RepType(format!(
                        "defining representations target classical types, not {g_type}"
                    )))
                }
            };
            let h_dim = h.ideal_coords() + charges;
            let rows: Vec<Vec<Rat>> = (0..h_dim)
                .map(|r| mus.iter().map(|mu| mu.0[r].clone()).collect())
                .collect();
            Ok(RestrictionMap { rows, charges })
        }
    }
}

/// Pick one lexicographically positive representative per ±pair; for B one
/// zero weight remains unpaired.
fn signed_pairs(mut weights: Vec<Weight>, g_type: SimpleLieType) -> Result<Vec<Weight>> {
    weights.sort_by(|a, b| b.cmp(a));
    let mut mus = Vec::new();
    while let Some(w) = weights.first().cloned() {
        if w.is_zero() {
            break;
        }
        weights.remove(0);
        let neg = -&w;
        match weights.iter().position(|x| *x == neg) {
            Some(p) => {
                weights.remove(p);
            }
            None => {
                return Err(Error::Pairing(format!(
                    "weight {w} has no negative partner; the rep is not self-dual"
                )))
            }
        }
        mus.push(w);
    }
    // remaining entries are zeros; B keeps one unpaired
    let zeros = weights.len();
    let pairs_of_zero = match g_type.family {
        Family::B => {
            if zeros % 2 == 0 {
                return Err(Error::Pairing(
                    "odd-dimensional orthogonal rep needs an odd number of zero weights".into(),
                ));
            }
            (zeros - 1) / 2
        }
        _ => {
            if zeros % 2 == 1 {
                return Err(Error::Pairing(
                    "even-dimensional rep needs an even number of zero weights".into(),
                ));
            }
            zeros / 2
        }
    };
    if !weights.is_empty() {
        let dim = weights[0].dim();
        for _ in 0..pairs_of_zero {
            mus.push(Weight::zero(dim));
        }
    }
    if mus.len() != g_type.rank {
        return Err(Error::Pairing(format!(
            "paired {} weights, expected rank {}",
            mus.len(),
            g_type.rank
        )));
    }
    Ok(mus)
}

/// Outcome of the consistency gate run before any λ₁ computation.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub ok: bool,
    pub messages: Vec<String>,
    pub dim_p: usize,
    /// Branching of the adjoint of 𝔤 minus the subalgebra's own adjoint
    /// pieces, i.e. the isotropy representation.
    pub isotropy: Vec<(IrrEntry, u64)>,
}

/// Checks: (a) the adjoint of 𝔤 restricted along f contains the adjoint of
/// each simple ideal exactly once and exactly `abelian_rank` trivials;
/// (b) dim 𝔭 > 0; (c) the isotropy has no trivial summand (equivalent to
/// the trivial count in (a)). Failures are reported, never silent.
pub fn validate_embedding(
    g: &RootSystem,
    h: &ReductiveSubalgebra,
    f: &RestrictionMap,
) -> Result<ValidationReport> {
    let mut messages = Vec::new();
    let mut ok = true;

    let dim_g = g.dim();
    let dim_h = h.dim();
    if dim_h >= dim_g {
        ok = false;
        messages.push(format!(
            "dim h = {dim_h} is not smaller than dim g = {dim_g}"
        ));
    }
    let dim_p = dim_g.saturating_sub(dim_h);

    let adjoint = g.highest_root();
    let ad_ws = weight_system(g, &adjoint)?;
    let restricted = restrict(&ad_ws, f)?;
    let dec = match decompose(h, &restricted) {
        Ok(d) => d,
        Err(e) => {
            return Ok(ValidationReport {
                ok: false,
                messages: vec![format!("adjoint restriction is not an h-character: {e}")],
                dim_p,
                isotropy: Vec::new(),
            })
        }
    };

    let mut isotropy: Vec<(IrrEntry, u64)> = Vec::new();
    let trivial = dec.trivial_multiplicity();
    if trivial != h.abelian_rank as u64 {
        ok = false;
        messages.push(format!(
            "adjoint branching contains {trivial} trivials, expected {} (isotropy must have none)",
            h.abelian_rank
        ));
    }
    for (i, _) in h.ideals.iter().enumerate() {
        let entry = h.adjoint_entry(i, f.charges);
        let m = dec.multiplicity_of(&entry);
        if m != 1 {
            ok = false;
            messages.push(format!(
                "adjoint of ideal {i} appears {m} times in the branching, expected exactly once"
            ));
        }
    }
    for (entry, m) in &dec.entries {
        let mut residual = *m;
        if entry.is_trivial() {
            residual -= (h.abelian_rank as u64).min(residual);
        }
        for (i, _) in h.ideals.iter().enumerate() {
            if *entry == h.adjoint_entry(i, f.charges) {
                residual -= 1.min(residual);
            }
        }
        if residual > 0 {
            isotropy.push((entry.clone(), residual));
        }
    }

    let iso_dim: u64 = isotropy
        .iter()
        .map(|(e, m)| m * h.irr_dim(e).unwrap_or(0))
        .sum();
    if iso_dim != dim_p as u64 {
        ok = false;
        messages.push(format!(
            "isotropy dimension {iso_dim} does not match dim p = {dim_p}"
        ));
    }

    Ok(ValidationReport {
        ok,
        messages,
        dim_p,
        isotropy,
    })
}

/// κ_{𝔥ᵢ} = cᵢ · κ_𝔤|_{𝔥ᵢ}: on the Cartan of each ideal both forms are the
/// root sums Σ β βᵀ, the ambient one pulled back along f. The ratio must be
/// scalar by irreducibility; a non-scalar ratio means inconsistent data.
pub fn killing_ratios(
    g: &RootSystem,
    h: &ReductiveSubalgebra,
    f: &RestrictionMap,
) -> Result<Vec<Rat>> {
    let layout = h.layout(f.charges);
    let (int_rows, q) = f.int_form();
    let g_scale = g.lie_type.coord_denominator();
    // pulled-back Gram per ideal block, accumulated on integers
    let mut pulled_int: Vec<Vec<Vec<i128>>> = h
        .ideals
        .iter()
        .map(|t| vec![vec![0i128; t.ambient_dim()]; t.ambient_dim()])
        .collect();
    for alpha in &g.positive_roots {
        let av: Vec<i64> = alpha
            .0
            .iter()
            .map(|c| {
                let s = c * rint(g_scale);
                s.to_integer().to_i64().expect("root coordinate fits")
            })
            .collect();
        let img: Vec<i128> = int_rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(av.iter())
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum()
            })
            .collect();
        for i in 0..h.ideals.len() {
            let (off, len) = layout.ideal_span(i);
            for r in 0..len {
                for c in 0..len {
                    pulled_int[i][r][c] += 2 * img[off + r] * img[off + c];
                }
            }
        }
    }
    let denom = Rat::from_integer(((q as i128 * g_scale as i128).pow(2)).into());
    let pulled: Vec<Vec<Vec<Rat>>> = pulled_int
        .into_iter()
        .map(|block| {
            block
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|x| Rat::from_integer(x.into()) / &denom)
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut ratios = Vec::with_capacity(h.ideals.len());
    for (i, t) in h.ideals.iter().enumerate() {
        let rs = h.root_system(i);
        let d = t.ambient_dim();
        let mut own = vec![vec![Rat::zero(); d]; d];
        for beta in &rs.positive_roots {
            for r in 0..d {
                for c in 0..d {
                    let term = &beta.0[r] * &beta.0[c];
                    own[r][c] += term.clone() + term;
                }
            }
        }
        // own = cᵢ · pulled, entrywise
        let mut ratio: Option<Rat> = None;
        for r in 0..d {
            for c in 0..d {
                let p = &pulled[i][r][c];
                let o = &own[r][c];
                if p.is_zero() && o.is_zero() {
                    continue;
                }
                if p.is_zero() {
                    return Err(Error::NonScalarRatio { ideal: i });
                }
                let q = o / p;
                match &ratio {
                    None => ratio = Some(q),
                    Some(prev) if *prev == q => {}
                    Some(_) => return Err(Error::NonScalarRatio { ideal: i }),
                }
            }
        }
        let c = ratio.ok_or(Error::NonScalarRatio { ideal: i })?;
        if !c.is_positive() || c > rint(1) {
            return Err(Error::EmbeddingInvalid(format!(
                "Killing ratio {c} for ideal {i} is outside (0, 1]"
            )));
        }
        ratios.push(c);
    }
    Ok(ratios)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn su2() -> ReductiveSubalgebra {
        ReductiveSubalgebra::new(vec![SimpleLieType::a(1)], 0)
    }

    #[test]
    fn rep_types_of_standard_representations() {
        // su(2) standard is quaternionic
        let h = su2();
        let s = Summand {
            per_ideal_coeffs: vec![vec![1]],
            charges: vec![],
        };
        assert_eq!(rep_type(&h, &s).unwrap(), RepType::Quaternionic);
        // so(7) standard is real
        let so7 = ReductiveSubalgebra::new(vec![SimpleLieType::b(3)], 0);
        let s = Summand {
            per_ideal_coeffs: vec![vec![1, 0, 0]],
            charges: vec![],
        };
        assert_eq!(rep_type(&so7, &s).unwrap(), RepType::Real);
        // su(3) standard is complex
        let su3 = ReductiveSubalgebra::new(vec![SimpleLieType::a(2)], 0);
        let s = Summand {
            per_ideal_coeffs: vec![vec![1, 0]],
            charges: vec![],
        };
        assert_eq!(rep_type(&su3, &s).unwrap(), RepType::Complex);
        // quaternionic ⊗ quaternionic is real
        let h2 = ReductiveSubalgebra::new(vec![SimpleLieType::a(1), SimpleLieType::a(1)], 0);
        let s = Summand {
            per_ideal_coeffs: vec![vec![1], vec![1]],
            charges: vec![],
        };
        assert_eq!(rep_type(&h2, &s).unwrap(), RepType::Real);
    }

    #[test]
    fn quaternionic_summands_have_even_dimension() {
        let h = ReductiveSubalgebra::new(vec![SimpleLieType::a(1), SimpleLieType::c(3)], 0);
        for coeffs in [vec![vec![1], vec![0, 0, 0]], vec![vec![0], vec![0, 0, 1]]] {
            let s = Summand {
                per_ideal_coeffs: coeffs,
                charges: vec![],
            };
            if rep_type(&h, &s).unwrap() == RepType::Quaternionic {
                let dim: u64 = s
                    .per_ideal_coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let rs = h.root_system(i);
                        rs.weyl_dim(&rs.weight_from_coeffs(c).unwrap()).unwrap()
                    })
                    .product();
                assert_eq!(dim % 2, 0);
            }
        }
    }

    #[test]
    fn g2_in_so7_from_defining_rep() {
        let g2 = ReductiveSubalgebra::new(vec![SimpleLieType::g2()], 0);
        let spec = EmbeddingSpec::DefiningRep(vec![Summand {
            per_ideal_coeffs: vec![vec![1, 0]],
            charges: vec![],
        }]);
        let b3 = SimpleLieType::b(3);
        let f = restriction_map(b3, &g2, &spec).unwrap();
        assert_eq!(f.h_dim(), 3);
        assert_eq!(f.g_dim(), 3);
        let rs = build_root_system(b3);
        let report = validate_embedding(&rs, &g2, &f).unwrap();
        assert!(report.ok, "{:?}", report.messages);
        assert_eq!(report.dim_p, 7);
        // isotropy is the 7-dimensional fundamental rep
        assert_eq!(report.isotropy.len(), 1);
        let c = killing_ratios(&rs, &g2, &f).unwrap();
        assert_eq!(c, vec![rat(4, 5)]);
    }

    #[test]
    fn max_torus_map_is_identity() {
        let t = ReductiveSubalgebra::torus(2);
        let g2 = SimpleLieType::g2();
        let f = restriction_map(g2, &t, &EmbeddingSpec::MaxTorus).unwrap();
        assert_eq!(f.h_dim(), 3);
        let w = Weight::from_i64(&[1, -1, 0]);
        assert_eq!(f.apply(&w).unwrap(), w);
    }

    #[test]
    fn pairing_failure_is_reported() {
        // a complex summand with no dual partner cannot define a symplectic group
        let su3 = ReductiveSubalgebra::new(vec![SimpleLieType::a(2)], 0);
        let spec = EmbeddingSpec::DefiningRep(vec![Summand {
            per_ideal_coeffs: vec![vec![1, 0]],
            charges: vec![],
        }]);
        assert!(restriction_map(SimpleLieType::c(2), &su3, &spec).is_err());
    }

    #[test]
    fn three_sp1_in_sp3() {
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
        let c3 = SimpleLieType::c(3);
        let f = restriction_map(c3, &h, &EmbeddingSpec::DefiningRep(summands)).unwrap();
        let rs = build_root_system(c3);
        let report = validate_embedding(&rs, &h, &f).unwrap();
        assert!(report.ok, "{:?}", report.messages);
        assert_eq!(report.dim_p, 21 - 9);
        let c = killing_ratios(&rs, &h, &f).unwrap();
        assert_eq!(c, vec![rat(1, 2), rat(1, 2), rat(1, 2)]);
    }
}
