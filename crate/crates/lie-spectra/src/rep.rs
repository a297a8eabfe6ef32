//! Weight systems of irreducible representations, restriction along Cartan
//! maps, decomposition into irreducibles of a reductive subalgebra, and
//! exterior/symmetric squares.
//!
//! Multiplicities come from the Freudenthal recursion evaluated on dominant
//! weights only and propagated along Weyl orbits. The recursion runs on
//! denominator-cleared integer coordinates; the rational scale of κ* cancels
//! between numerator and denominator, so the inner loop is pure integer
//! arithmetic.

use crate::embedding::{HLayout, ReductiveSubalgebra, RestrictionMap};
use crate::error::{Error, Result};
use crate::rat::{rint, Rat};
use crate::root_system::RootSystem;
use crate::weight::Weight;
use num_traits::{ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Finite weight-multiplicity map with cached total dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    pub mults: BTreeMap<Weight, u64>,
    pub total_dim: u64,
}

impl WeightSystem {
    pub fn from_mults(mults: BTreeMap<Weight, u64>) -> Self {
        let total_dim = mults.values().sum();
        WeightSystem { mults, total_dim }
    }

    pub fn singleton(w: Weight) -> Self {
        let mut m = BTreeMap::new();
        m.insert(w, 1);
        WeightSystem::from_mults(m)
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    /// Tensor product of two systems over the same coordinate space.
    pub fn tensor(&self, other: &WeightSystem) -> WeightSystem {
        let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
        for (a, ma) in &self.mults {
            for (b, mb) in &other.mults {
                *out.entry(a + b).or_insert(0) += ma * mb;
            }
        }
        WeightSystem::from_mults(out)
    }

    /// Direct sum.
    pub fn plus(&self, other: &WeightSystem) -> WeightSystem {
        let mut out = self.mults.clone();
        for (b, mb) in &other.mults {
            *out.entry(b.clone()).or_insert(0) += mb;
        }
        WeightSystem::from_mults(out)
    }

    /// Outer tensor: weights live on concatenated coordinate blocks.
    pub fn outer(&self, other: &WeightSystem) -> WeightSystem {
        let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
        for (a, ma) in &self.mults {
            for (b, mb) in &other.mults {
                *out.entry(Weight::concat(&[a, b])).or_insert(0) += ma * mb;
            }
        }
        WeightSystem::from_mults(out)
    }
}

// ---- integer-coordinate internals ----

type ZVec = Vec<i64>;

fn zdot(a: &[i64], b: &[i64]) -> i128 {
    a.iter()
        .zip(b.iter())
        .map(|(&x, &y)| x as i128 * y as i128)
        .sum()
}

fn zadd(a: &[i64], b: &[i64]) -> ZVec {
    a.iter().zip(b.iter()).map(|(&x, &y)| x + y).collect()
}

fn to_scaled(w: &Weight, d: i64) -> ZVec {
    w.0.iter()
        .map(|c| {
            let s = c * rint(d);
            debug_assert!(s.is_integer());
            s.to_integer().to_i64().expect("coordinate fits i64")
        })
        .collect()
}

fn from_scaled(v: &[i64], d: i64) -> Weight {
    Weight(v.iter().map(|&x| crate::rat::rat(x, d)).collect())
}

struct ZRootData {
    family: crate::root_system::Family,
    denom: i64,
    simple: Vec<ZVec>,
    simple_norm2: Vec<i128>,
    positive: Vec<ZVec>,
    rho: ZVec,
}

impl ZRootData {
    fn new(rs: &RootSystem) -> Self {
        let d = rs.lie_type.coord_denominator();
        let simple: Vec<ZVec> = rs.simple_roots.iter().map(|r| to_scaled(r, d)).collect();
        let simple_norm2 = simple.iter().map(|s| zdot(s, s)).collect();
        ZRootData {
            family: rs.lie_type.family,
            denom: d,
            positive: rs.positive_roots.iter().map(|r| to_scaled(r, d)).collect(),
            rho: to_scaled(&rs.rho, d),
            simple,
            simple_norm2,
        }
    }

    fn is_dominant(&self, v: &[i64]) -> bool {
        use crate::root_system::Family;
        let n = v.len();
        match self.family {
            Family::A => v.windows(2).all(|w| w[0] >= w[1]),
            Family::B | Family::C => v.windows(2).all(|w| w[0] >= w[1]) && v[n - 1] >= 0,
            Family::D => {
                v[..n - 1].windows(2).all(|w| w[0] >= w[1]) && v[n - 2] >= v[n - 1].abs()
            }
            _ => self.simple.iter().all(|s| zdot(v, s) >= 0),
        }
    }

    /// ⟨v, αᵢ∨⟩ in the scaled coordinates (exact integer).
    fn pairing(&self, v: &[i64], i: usize) -> i128 {
        2 * zdot(v, &self.simple[i]) / self.simple_norm2[i]
    }

    fn reflect(&self, v: &[i64], i: usize) -> ZVec {
        let p = self.pairing(v, i);
        v.iter()
            .zip(self.simple[i].iter())
            .map(|(&x, &s)| x - (p * s as i128) as i64)
            .collect()
    }

    /// Dominant representative. The classical Weyl groups act by
    /// (signed) permutations, so sorting replaces the reflection walk;
    /// high-rank ambient algebras hit this path millions of times.
    fn to_dominant(&self, v: &[i64]) -> ZVec {
        use crate::root_system::Family;
        match self.family {
            Family::A => {
                let mut w = v.to_vec();
                w.sort_unstable_by(|a, b| b.cmp(a));
                w
            }
            Family::B | Family::C => {
                let mut w: ZVec = v.iter().map(|x| x.abs()).collect();
                w.sort_unstable_by(|a, b| b.cmp(a));
                w
            }
            Family::D => {
                let negatives = v.iter().filter(|x| x.is_negative()).count();
                let mut w: ZVec = v.iter().map(|x| x.abs()).collect();
                w.sort_unstable_by(|a, b| b.cmp(a));
                let n = w.len();
                if negatives % 2 == 1 && w[n - 1] != 0 {
                    w[n - 1] = -w[n - 1];
                }
                w
            }
            _ => {
                let mut w = v.to_vec();
                'outer: loop {
                    for i in 0..self.simple.len() {
                        if zdot(&w, &self.simple[i]) < 0 {
                            w = self.reflect(&w, i);
                            continue 'outer;
                        }
                    }
                    return w;
                }
            }
        }
    }

    fn orbit(&self, v: &[i64]) -> Vec<ZVec> {
        use crate::root_system::Family;
        match self.family {
            Family::A => permutation_orbit(v, SignRule::None),
            Family::B | Family::C => permutation_orbit(v, SignRule::All),
            Family::D => {
                let odd = v.iter().filter(|x| x.is_negative()).count() % 2 == 1;
                if v.iter().any(|&x| x == 0) {
                    permutation_orbit(v, SignRule::All)
                } else {
                    permutation_orbit(v, SignRule::Parity(odd))
                }
            }
            _ => {
                let mut seen: BTreeSet<ZVec> = BTreeSet::new();
                let mut stack = vec![v.to_vec()];
                seen.insert(v.to_vec());
                while let Some(w) = stack.pop() {
                    for i in 0..self.simple.len() {
                        if zdot(&w, &self.simple[i]) != 0 {
                            let r = self.reflect(&w, i);
                            if seen.insert(r.clone()) {
                                stack.push(r);
                            }
                        }
                    }
                }
                seen.into_iter().collect()
            }
        }
    }
}

enum SignRule {
    /// Type A: permutations only.
    None,
    /// Types B, C, and D with a zero coordinate: all sign patterns.
    All,
    /// Type D without zeros: patterns with the given negative-count parity.
    Parity(bool),
}

/// Orbit under a signed-permutation Weyl group, enumerated directly:
/// distinct arrangements of the absolute-value multiset crossed with the
/// admissible sign patterns on nonzero entries.
fn permutation_orbit(v: &[i64], rule: SignRule) -> Vec<ZVec> {
    let mut base: ZVec = match rule {
        SignRule::None => v.to_vec(),
        _ => v.iter().map(|x| x.abs()).collect(),
    };
    base.sort_unstable();
    let mut out = Vec::new();
    loop {
        match &rule {
            SignRule::None => out.push(base.clone()),
            SignRule::All | SignRule::Parity(_) => {
                let nonzero: Vec<usize> = (0..base.len()).filter(|&i| base[i] != 0).collect();
                let k = nonzero.len();
                assert!(k < 64, "Weyl orbit too large to enumerate");
                for mask in 0u64..(1u64 << k) {
                    if let SignRule::Parity(odd) = rule {
                        if (mask.count_ones() % 2 == 1) != odd {
                            continue;
                        }
                    }
                    let mut w = base.clone();
                    for (bit, &pos) in nonzero.iter().enumerate() {
                        if mask >> bit & 1 == 1 {
                            w[pos] = -w[pos];
                        }
                    }
                    out.push(w);
                }
            }
        }
        if !next_permutation(&mut base) {
            return out;
        }
    }
}

/// Advance to the next lexicographically greater arrangement; false at the
/// last one. Handles repeated entries (distinct multiset permutations).
fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All dominant weights of π_Λ: the closure of {Λ} under subtracting
/// positive roots while staying dominant. Covers in the dominance order on
/// dominant weights differ by single positive roots, so this is complete.
fn dominant_weights(zd: &ZRootData, lambda: &[i64]) -> Vec<ZVec> {
    let mut seen: BTreeSet<ZVec> = BTreeSet::new();
    let mut stack = vec![lambda.to_vec()];
    seen.insert(lambda.to_vec());
    while let Some(w) = stack.pop() {
        for a in &zd.positive {
            let cand: ZVec = w.iter().zip(a.iter()).map(|(&x, &y)| x - y).collect();
            if zd.is_dominant(&cand) && seen.insert(cand.clone()) {
                stack.push(cand);
            }
        }
    }
    seen.into_iter().collect()
}

/// Exact multiplicity of every weight of the irreducible representation
/// with highest weight Λ. total_dim equals the Weyl dimension.
pub fn weight_system(rs: &RootSystem, lambda: &Weight) -> Result<WeightSystem> {
    rs.assert_dominant_integral(lambda)?;
    let zd = ZRootData::new(rs);
    let lam = to_scaled(lambda, zd.denom);

    let mut doms = dominant_weights(&zd, &lam);
    // process in decreasing |μ+ρ|²; ties cannot happen between comparable
    // dominant weights, and incomparable ones are independent
    let key = |v: &ZVec| -> i128 {
        let vr = zadd(v, &zd.rho);
        zdot(&vr, &vr)
    };
    doms.sort_by_key(|v| std::cmp::Reverse(key(v)));

    let lam_rho = zadd(&lam, &zd.rho);
    let lam_norm = zdot(&lam_rho, &lam_rho);

    let mut mult: HashMap<ZVec, u64> = HashMap::new();
    for mu in &doms {
        if mu == &lam {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut num: i128 = 0;
        for a in &zd.positive {
            let mut nu = zadd(mu, a);
            loop {
                let dom = zd.to_dominant(&nu);
                match mult.get(&dom) {
                    Some(&m) => {
                        num += m as i128 * zdot(&nu, a);
                        nu = zadd(&nu, a);
                    }
                    None => break,
                }
            }
        }
        let mu_rho = zadd(mu, &zd.rho);
        let den = lam_norm - zdot(&mu_rho, &mu_rho);
        debug_assert!(den > 0 && (2 * num) % den == 0);
        mult.insert(mu.clone(), (2 * num / den) as u64);
    }

    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    for (mu, m) in &mult {
        if *m == 0 {
            continue;
        }
        for w in zd.orbit(mu) {
            out.insert(from_scaled(&w, zd.denom), *m);
        }
    }
    Ok(WeightSystem::from_mults(out))
}

/// Push a weight system through a Cartan restriction map, accumulating
/// multiplicities. The total dimension is preserved. The matrix product
/// runs on denominator-cleared integers; rationals are rebuilt only for
/// the distinct image coordinates.
pub fn restrict(ws: &WeightSystem, f: &RestrictionMap) -> Result<WeightSystem> {
    let (int_rows, q) = f.int_form();
    let g_dim = f.g_dim();
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    for (w, m) in &ws.mults {
        if w.dim() != g_dim {
            return Err(crate::error::Error::DimensionMismatch {
                expected: g_dim,
                got: w.dim(),
            });
        }
        // clear this weight's denominators
        let mut d = 1i64;
        for c in &w.0 {
            let den = c.denom().to_i64().ok_or_else(|| {
                crate::error::Error::Input("weight coordinate too large".into())
            })?;
            d = num_integer::lcm(d, den);
        }
        let wv: Vec<i64> = w
            .0
            .iter()
            .map(|c| {
                let s = c * crate::rat::rint(d);
                s.to_integer().to_i64().expect("scaled coordinate fits")
            })
            .collect();
        let scale = (q as i128) * (d as i128);
        let img = Weight(
            int_rows
                .iter()
                .map(|row| {
                    let dot: i128 = row
                        .iter()
                        .zip(wv.iter())
                        .map(|(&a, &b)| a as i128 * b as i128)
                        .sum();
                    Rat::new(dot.into(), scale.into())
                })
                .collect(),
        );
        *out.entry(img).or_insert(0) += m;
    }
    Ok(WeightSystem::from_mults(out))
}

/// One irreducible of a reductive subalgebra: per-ideal highest weights
/// plus the abelian charge vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IrrEntry {
    pub per_ideal: Vec<Weight>,
    pub charges: Vec<Rat>,
}

impl IrrEntry {
    pub fn is_trivial(&self) -> bool {
        self.per_ideal.iter().all(|w| w.is_zero())
            && self.charges.iter().all(|c| c.is_zero())
    }
}

/// Multiset of irreducible entries with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrDecomposition {
    pub entries: BTreeMap<IrrEntry, u64>,
}

impl IrrDecomposition {
    pub fn trivial_multiplicity(&self) -> u64 {
        self.entries
            .iter()
            .filter(|(e, _)| e.is_trivial())
            .map(|(_, m)| *m)
            .sum()
    }

    pub fn multiplicity_of(&self, entry: &IrrEntry) -> u64 {
        self.entries.get(entry).copied().unwrap_or(0)
    }

    pub fn total_dim(&self, h: &ReductiveSubalgebra) -> u64 {
        self.entries
            .iter()
            .map(|(e, m)| m * h.irr_dim(e).unwrap_or(0))
            .sum()
    }
}

fn split_entry(h: &ReductiveSubalgebra, layout: &HLayout, w: &Weight) -> IrrEntry {
    let mut per_ideal = Vec::with_capacity(h.ideals.len());
    for (i, _) in h.ideals.iter().enumerate() {
        let (off, len) = layout.ideal_span(i);
        per_ideal.push(w.slice(off, len));
    }
    let (coff, clen) = layout.charge_span();
    IrrEntry {
        per_ideal,
        charges: w.0[coff..coff + clen].to_vec(),
    }
}

/// Full weight system of one subalgebra irreducible on the stacked
/// coordinates (product over ideals, charges constant).
pub fn entry_weight_system(
    h: &ReductiveSubalgebra,
    entry: &IrrEntry,
    cache: &mut HashMap<(usize, Weight), WeightSystem>,
) -> Result<WeightSystem> {
    let mut acc = WeightSystem::singleton(Weight(vec![]));
    for (i, zeta) in entry.per_ideal.iter().enumerate() {
        let key = (i, zeta.clone());
        if !cache.contains_key(&key) {
            let ws = weight_system(h.root_system(i), zeta)?;
            cache.insert(key.clone(), ws);
        }
        acc = acc.outer(&cache[&key]);
    }
    let charge_tail = Weight(entry.charges.clone());
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    for (w, m) in &acc.mults {
        out.insert(Weight::concat(&[w, &charge_tail]), *m);
    }
    Ok(WeightSystem::from_mults(out))
}

/// Greedy character subtraction: repeatedly take the maximal dominant
/// weight, subtract the full weight system of the corresponding subalgebra
/// irreducible, and record it. The resulting multiset does not depend on
/// tie-breaking.
pub fn decompose(h: &ReductiveSubalgebra, ws: &WeightSystem) -> Result<IrrDecomposition> {
    let layout = h.layout_for(ws)?;
    let mut rem: BTreeMap<Weight, u64> = ws
        .mults
        .iter()
        .filter(|(_, &m)| m > 0)
        .map(|(w, &m)| (w.clone(), m))
        .collect();
    let mut entries: BTreeMap<IrrEntry, u64> = BTreeMap::new();
    let mut cache: HashMap<(usize, Weight), WeightSystem> = HashMap::new();

    while !rem.is_empty() {
        // maximal candidate: per-ideal dominant, largest squared norm, then lex
        let mut best: Option<(Rat, Weight)> = None;
        for w in rem.keys() {
            if h.is_dominant_stacked(&layout, w) {
                let n2 = w.norm2();
                let better = match &best {
                    None => true,
                    Some((bn, bw)) => n2 > *bn || (n2 == *bn && w > bw),
                };
                if better {
                    best = Some((n2, w.clone()));
                }
            }
        }
        let top = match best {
            Some((_, w)) => w,
            None => {
                return Err(Error::NotACharacter(
                    "no dominant weight among remaining maxima".into(),
                ))
            }
        };
        let mult = rem[&top];
        let entry = split_entry(h, &layout, &top);
        // integrality of the candidate highest weight
        for (i, z) in entry.per_ideal.iter().enumerate() {
            if h.root_system(i).assert_dominant_integral(z).is_err() {
                return Err(Error::NotACharacter(format!(
                    "candidate highest weight {top} is not integral on ideal {i}"
                )));
            }
        }
        let sys = entry_weight_system(h, &entry, &mut cache)?;
        for (w, m) in &sys.mults {
            let need = m * mult;
            match rem.get_mut(w) {
                Some(have) if *have >= need => {
                    *have -= need;
                    if *have == 0 {
                        rem.remove(w);
                    }
                }
                _ => {
                    return Err(Error::NotACharacter(format!(
                        "subtracting {mult} copies of the irreducible at {top} drives weight {w} negative"
                    )))
                }
            }
        }
        *entries.entry(entry).or_insert(0) += mult;
    }
    Ok(IrrDecomposition { entries })
}

/// Exterior and symmetric square weight systems, computed combinatorially
/// from weight pairs (diagonal handled by binomial counts).
pub fn alt_sym_square(ws: &WeightSystem) -> (WeightSystem, WeightSystem) {
    let items: Vec<(&Weight, u64)> = ws.mults.iter().map(|(w, &m)| (w, m)).collect();
    let mut alt: BTreeMap<Weight, u64> = BTreeMap::new();
    let mut sym: BTreeMap<Weight, u64> = BTreeMap::new();
    for i in 0..items.len() {
        let (wi, mi) = items[i];
        let double = wi + wi;
        if mi >= 2 {
            *alt.entry(double.clone()).or_insert(0) += mi * (mi - 1) / 2;
        }
        *sym.entry(double).or_insert(0) += mi * (mi + 1) / 2;
        for (wj, mj) in items.iter().skip(i + 1) {
            let s = wi + wj;
            *alt.entry(s.clone()).or_insert(0) += mi * mj;
            *sym.entry(s).or_insert(0) += mi * mj;
        }
    }
    (
        WeightSystem::from_mults(alt),
        WeightSystem::from_mults(sym),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_root_system, SimpleLieType};

    #[test]
    fn rank_one_adjoint() {
        let a1 = build_root_system(SimpleLieType::a(1));
        let adj = a1.weight_from_coeffs(&[2]).unwrap();
        let ws = weight_system(&a1, &adj).unwrap();
        assert_eq!(ws.total_dim, 3);
        assert_eq!(ws.multiplicity(&Weight::zero(2)), 1);
        let alpha = &a1.simple_roots[0];
        assert_eq!(ws.multiplicity(alpha), 1);
        assert_eq!(ws.multiplicity(&-alpha), 1);
    }

    #[test]
    fn g2_seven_dim() {
        let g2 = build_root_system(SimpleLieType::g2());
        let ws = weight_system(&g2, &g2.fundamental_weights[0]).unwrap();
        assert_eq!(ws.total_dim, 7);
        assert_eq!(ws.mults.len(), 7);
        assert_eq!(ws.multiplicity(&Weight::zero(3)), 1);
    }

    #[test]
    fn g2_adjoint_zero_weight() {
        let g2 = build_root_system(SimpleLieType::g2());
        let ws = weight_system(&g2, &g2.fundamental_weights[1]).unwrap();
        assert_eq!(ws.total_dim, 14);
        assert_eq!(ws.multiplicity(&Weight::zero(3)), 2);
    }

    #[test]
    fn c3_second_fundamental() {
        let c3 = build_root_system(SimpleLieType::c(3));
        let ws = weight_system(&c3, &c3.fundamental_weights[1]).unwrap();
        assert_eq!(ws.total_dim, 14);
        assert_eq!(ws.total_dim, c3.weyl_dim(&c3.fundamental_weights[1]).unwrap());
    }

    #[test]
    fn mass_conservation_spot_checks() {
        for (t, coeffs) in [
            (SimpleLieType::b(3), vec![1i64, 0, 1]),
            (SimpleLieType::a(3), vec![1, 1, 1]),
            (SimpleLieType::d(4), vec![0, 1, 0, 1]),
            (SimpleLieType::f4(), vec![0, 0, 0, 1]),
        ] {
            let rs = build_root_system(t);
            let lam = rs.weight_from_coeffs(&coeffs).unwrap();
            let ws = weight_system(&rs, &lam).unwrap();
            assert_eq!(ws.total_dim, rs.weyl_dim(&lam).unwrap(), "type {t}");
        }
    }

    #[test]
    fn alt_square_of_su2_standard() {
        let a1 = build_root_system(SimpleLieType::a(1));
        let st = weight_system(&a1, &a1.fundamental_weights[0]).unwrap();
        let (alt, sym) = alt_sym_square(&st);
        assert_eq!(alt.total_dim, 1);
        assert_eq!(alt.multiplicity(&Weight::zero(2)), 1);
        assert_eq!(sym.total_dim, 3);
    }

    #[test]
    fn square_dims() {
        let c3 = build_root_system(SimpleLieType::c(3));
        let st = weight_system(&c3, &c3.fundamental_weights[0]).unwrap();
        let (alt, sym) = alt_sym_square(&st);
        let d = st.total_dim;
        assert_eq!(alt.total_dim, d * (d - 1) / 2);
        assert_eq!(sym.total_dim, d * (d + 1) / 2);
    }
}
