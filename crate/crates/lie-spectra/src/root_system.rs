//! Immutable Cartan data for the nine simple types in Bourbaki ε-coordinates.
//!
//! The inner product κ* induced by the Killing form is a single rational
//! scale times the Euclidean form on ε-coordinates; the scale is validated
//! for every type by the adjoint Casimir normalization κ*(θ, θ+2ρ) = 1.

use crate::error::{Error, Result};
use crate::rat::{rat, rint, Rat};
use crate::weight::Weight;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub fn letter(&self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        }
    }
}

/// A simple type with its rank. Rank is fixed for the exceptional families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleLieType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleLieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
            Family::F4 => rank == 4,
            Family::G2 => rank == 2,
        };
        if ok {
            Ok(SimpleLieType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                bound: match family {
                    Family::A => "rank >= 1",
                    Family::B | Family::C => "rank >= 2",
                    Family::D => "rank >= 3",
                    Family::E6 => "rank = 6",
                    Family::E7 => "rank = 7",
                    Family::E8 => "rank = 8",
                    Family::F4 => "rank = 4",
                    Family::G2 => "rank = 2",
                },
            })
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).unwrap()
    }
    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank).unwrap()
    }
    pub fn c(rank: usize) -> Self {
        Self::new(Family::C, rank).unwrap()
    }
    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).unwrap()
    }
    pub fn e6() -> Self {
        Self::new(Family::E6, 6).unwrap()
    }
    pub fn e7() -> Self {
        Self::new(Family::E7, 7).unwrap()
    }
    pub fn e8() -> Self {
        Self::new(Family::E8, 8).unwrap()
    }
    pub fn f4() -> Self {
        Self::new(Family::F4, 4).unwrap()
    }
    pub fn g2() -> Self {
        Self::new(Family::G2, 2).unwrap()
    }

    /// Dimension of the ambient ε-coordinate space.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::C | Family::D => self.rank,
            Family::E6 | Family::E7 | Family::E8 => 8,
            Family::F4 => 4,
            Family::G2 => 3,
        }
    }

    /// Common denominator of the ε-coordinates of all integral weights.
    pub fn coord_denominator(&self) -> i64 {
        match self.family {
            Family::A => (self.rank + 1) as i64,
            Family::B | Family::D | Family::E7 | Family::E8 | Family::F4 => 2,
            Family::C => 1,
            Family::E6 => 6,
            Family::G2 => 3,
        }
    }

    /// Parse strings like "A5", "B3", "E7", "F4".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Input(format!("cannot parse simple type '{s}'"));
        match s {
            "E6" => return Self::new(Family::E6, 6),
            "E7" => return Self::new(Family::E7, 7),
            "E8" => return Self::new(Family::E8, 8),
            "F4" => return Self::new(Family::F4, 4),
            "G2" => return Self::new(Family::G2, 2),
            _ => {}
        }
        let (fam, rest) = s.split_at(1);
        let rank: usize = rest.parse().map_err(|_| bad())?;
        let family = match fam {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            _ => return Err(bad()),
        };
        Self::new(family, rank)
    }
}

impl fmt::Display for SimpleLieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => {
                write!(f, "{}{}", self.family.letter(), self.rank)
            }
            _ => write!(f, "{}", self.family.letter()),
        }
    }
}

/// Cartan data of one simple type: simple and positive roots, fundamental
/// weights, ρ, the Killing scale on ε-coordinates, and dimensions.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub lie_type: SimpleLieType,
    pub simple_roots: Vec<Weight>,
    pub positive_roots: Vec<Weight>,
    pub fundamental_weights: Vec<Weight>,
    pub rho: Weight,
    /// Scale s with κ*(μ,ν) = s·⟨μ,ν⟩ on ε-coordinates.
    pub kappa_scale: Rat,
    pub dual_coxeter: u64,
    pub dim_g: usize,
    theta: Weight,
}

fn unit(dim: usize, i: usize) -> Weight {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    Weight(v)
}

/// pr: quotient out (1,…,1), used for type A (and nowhere else).
pub fn project_sum_zero(w: &Weight) -> Weight {
    let n = w.dim() as i64;
    let avg = w.coord_sum() / rint(n);
    Weight(w.0.iter().map(|c| c - &avg).collect())
}

fn simple_roots_of(t: SimpleLieType) -> Vec<Weight> {
    let n = t.rank;
    let d = t.ambient_dim();
    let mut roots = Vec::new();
    let e = |i: usize| unit(d, i);
    match t.family {
        Family::A => {
            for i in 0..n {
                roots.push(&e(i) - &e(i + 1));
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                roots.push(&e(i) - &e(i + 1));
            }
            roots.push(e(n - 1));
        }
        Family::C => {
            for i in 0..n - 1 {
                roots.push(&e(i) - &e(i + 1));
            }
            roots.push(e(n - 1).scaled(&rint(2)));
        }
        Family::D => {
            for i in 0..n - 1 {
                roots.push(&e(i) - &e(i + 1));
            }
            roots.push(&e(n - 2) + &e(n - 1));
        }
        Family::E6 | Family::E7 | Family::E8 => {
            // Bourbaki E8 simple roots; E6/E7 take the first 6/7 of them.
            let mut a1 = vec![rat(-1, 2); 8];
            a1[0] = rat(1, 2);
            a1[7] = rat(1, 2);
            roots.push(Weight(a1));
            roots.push(&e(0) + &e(1));
            for i in 0..6 {
                roots.push(&e(i + 1) - &e(i));
            }
            roots.truncate(n);
        }
        Family::F4 => {
            roots.push(&e(1) - &e(2));
            roots.push(&e(2) - &e(3));
            roots.push(e(3));
            let mut a4 = vec![rat(-1, 2); 4];
            a4[0] = rat(1, 2);
            roots.push(Weight(a4));
        }
        Family::G2 => {
            roots.push(&e(0) - &e(1));
            roots.push(Weight(vec![rint(-2), rint(1), rint(1)]));
        }
    }
    roots
}

/// Fundamental weights per the Bourbaki closed forms.
fn fundamental_weights_of(t: SimpleLieType) -> Vec<Weight> {
    let n = t.rank;
    let d = t.ambient_dim();
    let e = |i: usize| unit(d, i);
    let sum_to = |k: usize| {
        let mut w = Weight::zero(d);
        for i in 0..k {
            w = &w + &e(i);
        }
        w
    };
    let mut ws = Vec::with_capacity(n);
    match t.family {
        Family::A => {
            for i in 1..=n {
                ws.push(project_sum_zero(&sum_to(i)));
            }
        }
        Family::B => {
            for i in 1..n {
                ws.push(sum_to(i));
            }
            ws.push(sum_to(n).scaled(&rat(1, 2)));
        }
        Family::C => {
            for i in 1..=n {
                ws.push(sum_to(i));
            }
        }
        Family::D => {
            for i in 1..=n - 2 {
                ws.push(sum_to(i));
            }
            let mut half_minus = sum_to(n).scaled(&rat(1, 2));
            half_minus.0[n - 1] = -half_minus.0[n - 1].clone();
            ws.push(half_minus);
            ws.push(sum_to(n).scaled(&rat(1, 2)));
        }
        Family::E8 => {
            ws.push(e(7).scaled(&rint(2)));
            let mut w2 = sum_to(7).scaled(&rat(1, 2));
            w2.0[7] = rat(5, 2);
            ws.push(w2);
            let mut w3 = sum_to(7).scaled(&rat(1, 2));
            w3.0[0] = rat(-1, 2);
            w3.0[7] = rat(7, 2);
            ws.push(w3);
            for i in 4..=8usize {
                let mut w = Weight::zero(8);
                for j in (i - 1)..=7 {
                    w.0[j - 1] = Rat::one();
                }
                w.0[7] = rint((9 - i as i64).max(0));
                ws.push(w);
            }
        }
        Family::E7 => {
            let spine = |c: Rat| {
                let mut w = Weight::zero(8);
                w.0[7] = c.clone();
                w.0[6] = -c;
                w
            };
            ws.push(spine(Rat::one()));
            let mut w2 = sum_to(6).scaled(&rat(1, 2));
            w2.0[6] = rint(-1);
            w2.0[7] = rint(1);
            ws.push(w2);
            let mut w3 = sum_to(6).scaled(&rat(1, 2));
            w3.0[0] = rat(-1, 2);
            w3.0[6] = rat(-3, 2);
            w3.0[7] = rat(3, 2);
            ws.push(w3);
            for i in 4..=7usize {
                let mut w = Weight::zero(8);
                for j in (i - 1)..=6 {
                    w.0[j - 1] = Rat::one();
                }
                let c = rat(8 - i as i64, 2);
                w.0[7] = c.clone();
                w.0[6] += -c;
                ws.push(w);
            }
        }
        Family::E6 => {
            let tri = |c: Rat| {
                let mut w = Weight::zero(8);
                w.0[7] = c.clone();
                w.0[6] = -c.clone();
                w.0[5] = -c;
                w
            };
            ws.push(tri(rat(2, 3)));
            let mut w2 = sum_to(5).scaled(&rat(1, 2));
            w2.0[5] = rat(-1, 2);
            w2.0[6] = rat(-1, 2);
            w2.0[7] = rat(1, 2);
            ws.push(w2);
            let mut w3 = &tri(rat(5, 6)) + &sum_to(5).scaled(&rat(1, 2));
            w3.0[0] = &w3.0[0] - &Rat::one();
            ws.push(w3);
            for i in 4..=6usize {
                let mut w = tri(rat(7 - i as i64, 3));
                for j in (i - 1)..=5 {
                    w.0[j - 1] += Rat::one();
                }
                ws.push(w);
            }
        }
        Family::F4 => {
            ws.push(&e(0) + &e(1));
            ws.push(&(&e(0).scaled(&rint(2)) + &e(1)) + &e(2));
            ws.push(Weight(vec![rat(3, 2), rat(1, 2), rat(1, 2), rat(1, 2)]));
            ws.push(e(0));
        }
        Family::G2 => {
            ws.push(Weight(vec![rint(0), rint(-1), rint(1)]));
            ws.push(Weight(vec![rint(-1), rint(-1), rint(2)]));
        }
    }
    ws
}

fn dual_coxeter_of(t: SimpleLieType) -> u64 {
    let n = t.rank as u64;
    match t.family {
        Family::A => n + 1,
        Family::B => 2 * n - 1,
        Family::C => n + 1,
        Family::D => 2 * n - 2,
        Family::E6 => 12,
        Family::E7 => 18,
        Family::E8 => 30,
        Family::F4 => 9,
        Family::G2 => 4,
    }
}

fn kappa_scale_of(t: SimpleLieType) -> Rat {
    let n = t.rank as i64;
    match t.family {
        Family::A => rat(1, 2 * (n + 1)),
        Family::B => rat(1, 2 * (2 * n - 1)),
        Family::C => rat(1, 4 * (n + 1)),
        Family::D => rat(1, 4 * n - 4),
        Family::E6 => rat(1, 24),
        Family::E7 => rat(1, 36),
        Family::E8 => rat(1, 60),
        Family::F4 => rat(1, 18),
        Family::G2 => rat(1, 24),
    }
}

/// Generate the positive roots by closure from the simple roots: candidate
/// α+αᵢ is a root iff the αᵢ-string through α continues upward, decided by
/// the p = q − ⟨α,αᵢ∨⟩ string formula over the already-built lower levels.
/// Runs on denominator-cleared integer coordinates so that rank stays
/// unbounded for the classical types.
fn positive_roots_by_closure(t: SimpleLieType, simple: &[Weight]) -> Vec<Weight> {
    let scale = t.coord_denominator();
    let to_int = |w: &Weight| -> Vec<i64> {
        w.0.iter()
            .map(|c| {
                let s = c * rint(scale);
                debug_assert!(s.is_integer());
                s.to_integer().to_i64().expect("root coordinate fits i64")
            })
            .collect()
    };
    let zsimple: Vec<Vec<i64>> = simple.iter().map(to_int).collect();
    let norms: Vec<i64> = zsimple
        .iter()
        .map(|s| s.iter().map(|x| x * x).sum())
        .collect();
    let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let mut known: BTreeSet<Vec<i64>> = zsimple.iter().cloned().collect();
    let mut level: Vec<Vec<i64>> = zsimple.clone();
    let mut all = zsimple.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for alpha in &level {
            for (i, s) in zsimple.iter().enumerate() {
                let pairing = 2 * dot(alpha, s) / norms[i];
                // q = how far the string extends downward from alpha
                let mut q: i64 = 0;
                let mut probe: Vec<i64> = alpha.iter().zip(s).map(|(a, b)| a - b).collect();
                while known.contains(&probe) {
                    q += 1;
                    probe = probe.iter().zip(s).map(|(a, b)| a - b).collect();
                }
                if q - pairing > 0 {
                    let cand: Vec<i64> = alpha.iter().zip(s).map(|(a, b)| a + b).collect();
                    if known.insert(cand.clone()) {
                        next.push(cand.clone());
                        all.push(cand);
                    }
                }
            }
        }
        level = next;
    }
    all.sort();
    all.into_iter()
        .map(|v| Weight(v.into_iter().map(|x| rat(x, scale)).collect()))
        .collect()
}

impl RootSystem {
    pub fn dim(&self) -> usize {
        self.dim_g
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.lie_type.ambient_dim()
    }

    /// The Killing-normalized inner product κ*.
    pub fn kappa_star(&self, a: &Weight, b: &Weight) -> Result<Rat> {
        self.check_ambient(a)?;
        self.check_ambient(b)?;
        Ok(&self.kappa_scale * &a.dot(b))
    }

    /// Reject vectors outside the ambient space of this type (wrong length,
    /// or violating the linear constraints of types A, G2, E6, E7).
    pub fn check_ambient(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: w.dim(),
            });
        }
        match self.lie_type.family {
            Family::A | Family::G2 => {
                if !w.coord_sum().is_zero() {
                    return Err(Error::BadAmbient(w.to_string(), "coordinate sum must be 0"));
                }
            }
            Family::E7 => {
                if !(&w.0[6] + &w.0[7]).is_zero() {
                    return Err(Error::BadAmbient(w.to_string(), "must be orthogonal to ε7+ε8"));
                }
            }
            Family::E6 => {
                if !(&w.0[6] + &w.0[7]).is_zero()
                    || !(&w.0[5] + &w.0[6] + &(rint(2) * &w.0[7].clone())).is_zero()
                {
                    return Err(Error::BadAmbient(
                        w.to_string(),
                        "must be orthogonal to ε7+ε8 and ε6+ε7+2ε8",
                    ));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// ⟨μ, α∨⟩ = 2(μ,α)/(α,α).
    pub fn coroot_pairing(&self, mu: &Weight, alpha: &Weight) -> Rat {
        rint(2) * &(mu.dot(alpha) / alpha.norm2())
    }

    pub fn is_dominant(&self, mu: &Weight) -> bool {
        // classical simple roots only compare adjacent coordinates
        let v = &mu.0;
        let n = v.len();
        match self.lie_type.family {
            Family::A => v.windows(2).all(|w| w[0] >= w[1]),
            Family::B | Family::C => {
                v.windows(2).all(|w| w[0] >= w[1]) && !v[n - 1].is_negative()
            }
            Family::D => {
                v[..n - 1].windows(2).all(|w| w[0] >= w[1])
                    && v[n - 2] >= v[n - 1].clone().abs()
            }
            _ => self
                .simple_roots
                .iter()
                .all(|a| !self.coroot_pairing(mu, a).is_negative()),
        }
    }

    pub fn is_integral(&self, mu: &Weight) -> bool {
        self.simple_roots
            .iter()
            .all(|a| self.coroot_pairing(mu, a).is_integer())
    }

    pub fn assert_dominant_integral(&self, mu: &Weight) -> Result<()> {
        self.check_ambient(mu)?;
        if !self.is_integral(mu) {
            return Err(Error::NotIntegral(mu.to_string()));
        }
        if !self.is_dominant(mu) {
            return Err(Error::NotDominant(mu.to_string()));
        }
        Ok(())
    }

    /// Reflect into the dominant chamber.
    pub fn to_dominant(&self, mu: &Weight) -> Weight {
        let mut w = mu.clone();
        'outer: loop {
            for a in &self.simple_roots {
                let p = self.coroot_pairing(&w, a);
                if p.is_negative() {
                    w = &w - &a.scaled(&p);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Σ aᵢ ωᵢ from Bourbaki coefficients.
    pub fn weight_from_coeffs(&self, coeffs: &[i64]) -> Result<Weight> {
        if coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: coeffs.len(),
            });
        }
        let mut w = Weight::zero(self.ambient_dim());
        for (a, omega) in coeffs.iter().zip(self.fundamental_weights.iter()) {
            w = &w + &omega.scaled(&rint(*a));
        }
        Ok(w)
    }

    /// Bourbaki coefficients aᵢ = ⟨μ, αᵢ∨⟩ of an integral weight.
    pub fn coeffs_of(&self, mu: &Weight) -> Vec<Rat> {
        self.simple_roots
            .iter()
            .map(|a| self.coroot_pairing(mu, a))
            .collect()
    }

    /// The highest root θ (the long dominant root).
    pub fn highest_root(&self) -> Weight {
        self.theta.clone()
    }

    /// Weyl dimension formula, exact.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64> {
        self.assert_dominant_integral(lambda)?;
        let lr = lambda + &self.rho;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in &self.positive_roots {
            let a = lr.dot(alpha);
            let b = self.rho.dot(alpha);
            num *= a.numer() * b.denom();
            den *= a.denom() * b.numer();
        }
        let q = Rat::new(num, den);
        debug_assert!(q.is_integer());
        Ok(q.to_integer().to_u64().expect("dimension fits in u64"))
    }

    /// Full Weyl orbit of a weight (closure under simple reflections).
    pub fn weyl_orbit(&self, mu: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut stack = vec![mu.clone()];
        seen.insert(mu.clone());
        while let Some(w) = stack.pop() {
            for a in &self.simple_roots {
                let p = self.coroot_pairing(&w, a);
                if !p.is_zero() {
                    let r = &w - &a.scaled(&p);
                    if seen.insert(r.clone()) {
                        stack.push(r);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// −w₀ μ, the highest weight of the dual of π_μ.
    pub fn dual_weight(&self, mu: &Weight) -> Weight {
        self.to_dominant(&-mu)
    }
}

/// Build the full Cartan datum for one simple type.
pub fn build_root_system(t: SimpleLieType) -> RootSystem {
    let simple_roots = simple_roots_of(t);
    let positive_roots = positive_roots_by_closure(t, &simple_roots);
    let fundamental_weights = fundamental_weights_of(t);
    let rho = fundamental_weights
        .iter()
        .fold(Weight::zero(t.ambient_dim()), |acc, w| &acc + w);
    let dim_g = t.rank + 2 * positive_roots.len();
    // θ uniquely maximizes the ρ-pairing among roots
    let theta = positive_roots
        .iter()
        .max_by(|a, b| a.dot(&rho).cmp(&b.dot(&rho)))
        .expect("nonempty root system")
        .clone();
    RootSystem {
        lie_type: t,
        simple_roots,
        positive_roots,
        fundamental_weights,
        rho,
        kappa_scale: kappa_scale_of(t),
        dual_coxeter: dual_coxeter_of(t),
        dim_g,
        theta,
    }
}
