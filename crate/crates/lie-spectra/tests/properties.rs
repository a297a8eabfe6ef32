//! Property suite: the cross-cutting invariants of the pipeline, each
//! backed by an independent oracle (brute-force scan, mass counts, map
//! equality) rather than the implementation path it checks.

use lie_spectra::casimir::{casimir_eigenvalue, enumerate_dominant_below};
use lie_spectra::catalog::{load_catalog, Catalog};
use lie_spectra::expr::Params;
use lie_spectra::lattice::{lattice_of, GroupForm};
use lie_spectra::rat::{rint, Rat};
use lie_spectra::rep::{
    alt_sym_square, decompose, entry_weight_system, restrict, weight_system, WeightSystem,
};
use lie_spectra::root_system::{build_root_system, RootSystem, SimpleLieType};
use lie_spectra::spectrum::invariant_dim;
use lie_spectra::weight::Weight;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng as _};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::path::PathBuf;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[test]
fn adjoint_casimir_is_one_for_all_types() {
    let mut types = Vec::new();
    for n in 1..=8 {
        types.push(SimpleLieType::a(n));
    }
    for n in 2..=8 {
        types.push(SimpleLieType::b(n));
        types.push(SimpleLieType::c(n));
    }
    for n in 3..=8 {
        types.push(SimpleLieType::d(n));
    }
    types.extend([
        SimpleLieType::e6(),
        SimpleLieType::e7(),
        SimpleLieType::e8(),
        SimpleLieType::f4(),
        SimpleLieType::g2(),
    ]);
    for t in types {
        let rs = build_root_system(t);
        let theta = rs.highest_root();
        assert_eq!(casimir_eigenvalue(&rs, &theta).unwrap(), rint(1), "{t}");
    }
}

fn random_rank_le_4_types() -> Vec<SimpleLieType> {
    vec![
        SimpleLieType::a(1),
        SimpleLieType::a(2),
        SimpleLieType::a(3),
        SimpleLieType::a(4),
        SimpleLieType::b(2),
        SimpleLieType::b(3),
        SimpleLieType::b(4),
        SimpleLieType::c(2),
        SimpleLieType::c(3),
        SimpleLieType::c(4),
        SimpleLieType::d(3),
        SimpleLieType::d(4),
        SimpleLieType::f4(),
        SimpleLieType::g2(),
    ]
}

#[test]
fn weight_system_mass_equals_weyl_dimension() {
    // 50 random dominant weights across types of rank ≤ 4
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let types = random_rank_le_4_types();
    let mut checked = 0;
    while checked < 50 {
        let t = *types.choose(&mut rng).unwrap();
        let rs = build_root_system(t);
        let coeffs: Vec<i64> = (0..t.rank).map(|_| rng.gen_range(0..=2)).collect();
        if coeffs.iter().sum::<i64>() == 0 || coeffs.iter().sum::<i64>() > 4 {
            continue;
        }
        let lambda = rs.weight_from_coeffs(&coeffs).unwrap();
        let ws = weight_system(&rs, &lambda).unwrap();
        assert_eq!(
            ws.total_dim,
            rs.weyl_dim(&lambda).unwrap(),
            "{t} {coeffs:?}"
        );
        checked += 1;
    }
}

fn rebuild_from_decomposition(
    h: &lie_spectra::embedding::ReductiveSubalgebra,
    dec: &lie_spectra::rep::IrrDecomposition,
) -> WeightSystem {
    let mut cache = HashMap::new();
    let mut acc: Option<WeightSystem> = None;
    for (entry, mult) in &dec.entries {
        let sys = entry_weight_system(h, entry, &mut cache).unwrap();
        for _ in 0..*mult {
            acc = Some(match &acc {
                Some(a) => a.plus(&sys),
                None => sys.clone(),
            });
        }
    }
    acc.unwrap()
}

#[test]
fn decompose_round_trip_reproduces_input() {
    let irr = load_catalog(&data_dir().join("irreducible.cat")).unwrap();
    let red = load_catalog(&data_dir().join("reducible.cat")).unwrap();
    let cases: Vec<(&Catalog, &str, Params, Vec<i64>)> = vec![
        (&irr, "iso-3", Params::new(), vec![0, 0, 1]),
        (&irr, "iso-33", Params::new(), vec![1, 0]),
        (&red, "XIII", params(&[("n", 1), ("k", 3)]), vec![0, 1, 0]),
        (&red, "iso-36", Params::new(), vec![0, 0, 0, 1]),
        (&red, "iso-34", Params::new(), vec![0, 0, 0, 1]),
    ];
    for (cat, id, p, coeffs) in cases {
        let space = cat.find(id).unwrap().instantiate(&p).unwrap();
        let rs = space.root_system();
        let lambda = rs.weight_from_coeffs(&coeffs).unwrap();
        let restricted = restrict(&weight_system(rs, &lambda).unwrap(), &space.f).unwrap();
        let dec = decompose(&space.h, &restricted).unwrap();
        let rebuilt = rebuild_from_decomposition(&space.h, &dec);
        assert_eq!(rebuilt, restricted, "{id} {coeffs:?}");
    }
}

#[test]
fn invariant_dim_is_dual_invariant() {
    let red = load_catalog(&data_dir().join("reducible.cat")).unwrap();
    let irr = load_catalog(&data_dir().join("irreducible.cat")).unwrap();
    // spaces with weights that are not self-dual
    let cases: Vec<(&Catalog, &str, Params, Vec<Vec<i64>>)> = vec![
        (
            &red,
            "XIb",
            params(&[("k", 3), ("n", 2)]),
            vec![
                vec![1, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0],
                vec![1, 1, 0, 0, 0],
            ],
        ),
        (
            &red,
            "iso-40",
            Params::new(),
            vec![vec![1, 0, 0, 0, 0, 0], vec![0, 0, 1, 0, 0, 0]],
        ),
    ];
    for (cat, id, p, weights) in cases {
        let space = cat.find(id).unwrap().instantiate(&p).unwrap();
        let rs = space.root_system();
        for coeffs in weights {
            let lambda = rs.weight_from_coeffs(&coeffs).unwrap();
            let dual = rs.dual_weight(&lambda);
            assert_ne!(lambda, dual, "pick non-self-dual test weights");
            let a = invariant_dim(&space, &lambda).unwrap();
            let b = invariant_dim(&space, &dual).unwrap();
            assert_eq!(a, b, "{id} {coeffs:?}");
        }
    }
    let _ = irr;
}

/// Independent oracle: scan the full coefficient box aᵢ ≤ ⌈bound/λ(ωᵢ)⌉.
fn brute_force_box(
    rs: &RootSystem,
    lat: &lie_spectra::lattice::LatticeSpec,
    bound: &Rat,
    strict: bool,
) -> Vec<(Vec<i64>, Rat)> {
    let n = rs.rank();
    let caps: Vec<i64> = (0..n)
        .map(|i| {
            let mut c = vec![0i64; n];
            c[i] = 1;
            let w = rs.weight_from_coeffs(&c).unwrap();
            let l = casimir_eigenvalue(rs, &w).unwrap();
            (bound / l).ceil().to_integer().to_i64().unwrap() + 1
        })
        .collect();
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; n];
    loop {
        let w = rs.weight_from_coeffs(&coeffs).unwrap();
        let l = casimir_eigenvalue(rs, &w).unwrap();
        let ok = if strict { &l < bound } else { &l <= bound };
        if ok && coeffs.iter().any(|&c| c > 0) && lat.contains(&w) {
            out.push((coeffs.clone(), l));
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
                return out;
            }
            coeffs[i] += 1;
            if coeffs[i] <= caps[i] {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn enumeration_agrees_with_brute_force_box_scan() {
    let cases: Vec<(SimpleLieType, GroupForm)> = vec![
        (SimpleLieType::a(1), GroupForm::SimplyConnected),
        (SimpleLieType::a(2), GroupForm::SuQuotient(3)),
        (SimpleLieType::a(3), GroupForm::SuQuotient(2)),
        (SimpleLieType::b(2), GroupForm::So),
        (SimpleLieType::b(3), GroupForm::SimplyConnected),
        (SimpleLieType::c(2), GroupForm::SpZ2),
        (SimpleLieType::c(3), GroupForm::SimplyConnected),
        (SimpleLieType::d(3), GroupForm::So),
        (SimpleLieType::g2(), GroupForm::SimplyConnected),
    ];
    let bound = rint(2);
    for (t, form) in cases {
        let rs = build_root_system(t);
        let lat = lattice_of(&rs, form).unwrap();
        for strict in [false, true] {
            let fast: Vec<(Vec<i64>, Rat)> = enumerate_dominant_below(&rs, &lat, &bound, strict)
                .into_iter()
                .map(|r| (r.coeffs, r.eigenvalue))
                .collect();
            let slow = brute_force_box(&rs, &lat, &bound, strict);
            assert_eq!(fast, slow, "{t} {form} strict={strict}");
        }
    }
}

/// Matrix of the reflection at a simple root on ambient coordinates.
fn reflection_matrix(rs: &RootSystem, i: usize) -> Vec<Vec<Rat>> {
    let alpha = &rs.simple_roots[i];
    let d = rs.ambient_dim();
    let norm = alpha.norm2();
    (0..d)
        .map(|r| {
            (0..d)
                .map(|c| {
                    let delta = if r == c { rint(1) } else { rint(0) };
                    delta - rint(2) * &alpha.0[r] * &alpha.0[c] / &norm
                })
                .collect()
        })
        .collect()
}

fn matmul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    (0..a.len())
        .map(|r| {
            (0..b[0].len())
                .map(|c| {
                    let mut acc = rint(0);
                    for k in 0..b.len() {
                        acc += &a[r][k] * &b[k][c];
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[test]
fn branching_invariant_under_weyl_ambiguity() {
    let irr = load_catalog(&data_dir().join("irreducible.cat")).unwrap();
    let red = load_catalog(&data_dir().join("reducible.cat")).unwrap();
    let cases: Vec<(&Catalog, &str, Params, Vec<i64>)> = vec![
        (&irr, "iso-3", Params::new(), vec![0, 0, 1]),
        (&irr, "iso-33", Params::new(), vec![1, 0]),
        (&red, "XIII", params(&[("n", 1), ("k", 3)]), vec![0, 1, 0]),
        (&red, "iso-36", Params::new(), vec![0, 0, 0, 1]),
        (&red, "XIV", params(&[("n", 1)]), vec![0, 1]),
    ];
    for (cat, id, p, coeffs) in cases {
        let space = cat.find(id).unwrap().instantiate(&p).unwrap();
        let rs = space.root_system();
        // a Weyl element of g as an ambient matrix
        let w = matmul(
            &reflection_matrix(rs, 0),
            &matmul(
                &reflection_matrix(rs, rs.rank() - 1),
                &reflection_matrix(rs, 0),
            ),
        );
        let twisted = space.f.compose_right(&w);
        let lambda = rs.weight_from_coeffs(&coeffs).unwrap();
        let ws = weight_system(rs, &lambda).unwrap();
        let direct = decompose(&space.h, &restrict(&ws, &space.f).unwrap()).unwrap();
        let via_w = decompose(&space.h, &restrict(&ws, &twisted).unwrap()).unwrap();
        assert_eq!(direct, via_w, "{id}");
    }
}

fn random_small_system(rng: &mut ChaCha8Rng, rs: &RootSystem) -> WeightSystem {
    loop {
        let coeffs: Vec<i64> = (0..rs.rank()).map(|_| rng.gen_range(0..=1)).collect();
        if coeffs.iter().sum::<i64>() == 0 {
            continue;
        }
        let lambda = rs.weight_from_coeffs(&coeffs).unwrap();
        let ws = weight_system(rs, &lambda).unwrap();
        if ws.total_dim <= 40 {
            return ws;
        }
    }
}

#[test]
fn square_identities_for_sums_and_tensor_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa17e);
    let b2 = build_root_system(SimpleLieType::b(2));
    let a2 = build_root_system(SimpleLieType::a(2));
    for _ in 0..6 {
        // Λ²(θ1 ⊕ θ2) = Λ²θ1 ⊕ Λ²θ2 ⊕ θ1⊗θ2, Sym² likewise
        let t1 = random_small_system(&mut rng, &b2);
        let t2 = random_small_system(&mut rng, &b2);
        let (alt_sum, sym_sum) = alt_sym_square(&t1.plus(&t2));
        let (a1s, s1s) = alt_sym_square(&t1);
        let (a2s, s2s) = alt_sym_square(&t2);
        let cross = t1.tensor(&t2);
        assert_eq!(alt_sum, a1s.plus(&a2s).plus(&cross));
        assert_eq!(sym_sum, s1s.plus(&s2s).plus(&cross));

        // Λ²(τ1 ⊗̂ τ2) = Λ²τ1 ⊗̂ Sym²τ2 ⊕ Sym²τ1 ⊗̂ Λ²τ2, Sym² dually
        let u1 = random_small_system(&mut rng, &a2);
        let u2 = random_small_system(&mut rng, &b2);
        let (alt_outer, sym_outer) = alt_sym_square(&u1.outer(&u2));
        let (ua, us) = alt_sym_square(&u1);
        let (va, vs) = alt_sym_square(&u2);
        assert_eq!(alt_outer, ua.outer(&vs).plus(&us.outer(&va)));
        assert_eq!(sym_outer, us.outer(&vs).plus(&ua.outer(&va)));
    }
}

#[test]
fn family_iv_second_fundamental_branching() {
    // for n ≥ 7 the branching is σ_{2η1} ⊗̂ σ_{η2'} ⊕ σ_0 ⊗̂ σ_{2η1'}
    let irr = load_catalog(&data_dir().join("irreducible.cat")).unwrap();
    let space = irr
        .find("IV")
        .unwrap()
        .instantiate(&params(&[("n", 7)]))
        .unwrap();
    let rs = space.root_system();
    let omega2 = rs.weight_from_coeffs(&[0, 1, 0, 0, 0, 0, 0]).unwrap();
    let restricted = restrict(&weight_system(rs, &omega2).unwrap(), &space.f).unwrap();
    let dec = decompose(&space.h, &restricted).unwrap();
    assert_eq!(dec.entries.len(), 2);
    let su2 = space.h.root_system(0);
    let so7 = space.h.root_system(1);
    let labels: Vec<(Vec<Rat>, Vec<Rat>, u64)> = dec
        .entries
        .iter()
        .map(|(e, m)| (su2.coeffs_of(&e.per_ideal[0]), so7.coeffs_of(&e.per_ideal[1]), *m))
        .collect();
    let as_i64 = |v: &[Rat]| -> Vec<i64> { v.iter().map(|c| c.to_integer().to_i64().unwrap()).collect() };
    let mut got: Vec<(Vec<i64>, Vec<i64>, u64)> = labels
        .iter()
        .map(|(a, b, m)| (as_i64(a), as_i64(b), *m))
        .collect();
    got.sort();
    assert_eq!(
        got,
        vec![
            (vec![0], vec![2, 0, 0], 1),
            (vec![2], vec![0, 1, 0], 1),
        ]
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// λ grows strictly when any fundamental weight is added to a dominant
    /// weight; this is the soundness condition of the pruned enumeration.
    #[test]
    fn eigenvalue_monotone_under_fundamental_steps(
        type_idx in 0usize..14,
        coeffs in proptest::collection::vec(0i64..3, 4),
        step in 0usize..4,
    ) {
        let types = random_rank_le_4_types();
        let t = types[type_idx];
        let rs = build_root_system(t);
        let n = t.rank;
        let base: Vec<i64> = coeffs.iter().take(n).copied().collect();
        let step = step % n;
        let mut bumped = base.clone();
        bumped[step] += 1;
        let lam0 = casimir_eigenvalue(&rs, &rs.weight_from_coeffs(&base).unwrap()).unwrap();
        let lam1 = casimir_eigenvalue(&rs, &rs.weight_from_coeffs(&bumped).unwrap()).unwrap();
        prop_assert!(lam1 > lam0);
    }

    /// Lattice membership is closed under addition (coset bookkeeping).
    #[test]
    fn lattice_membership_closed_under_addition(
        a in proptest::collection::vec(0i64..3, 3),
        b in proptest::collection::vec(0i64..3, 3),
    ) {
        let rs = build_root_system(SimpleLieType::a(3));
        let lat = lattice_of(&rs, GroupForm::SuQuotient(2)).unwrap();
        let wa = rs.weight_from_coeffs(&a).unwrap();
        let wb = rs.weight_from_coeffs(&b).unwrap();
        if lat.contains(&wa) && lat.contains(&wb) {
            prop_assert!(lat.contains(&(&wa + &wb)));
        }
    }
}
