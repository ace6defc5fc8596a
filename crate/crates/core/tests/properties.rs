mod support;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use lefschetz_core::complex::{builtin, builtin_document, load_complex, to_json, ChainDegree, IsoClassData};
use lefschetz_core::exact_algebra::{char_poly, factor_over_q, kernel_basis, smith_normal_form, IntMatrix};
use lefschetz_core::groups::{
    all_subgroups, pi1_projection, AutElem, AutGroup, FiniteGroup, GroupRingElement, GroupRingMatrix,
    TwistData, TwistedClassSet,
};
use lefschetz_core::invariants::{
    klein_williams, lambda_invariant, lambda_of_class, normalize_terms, reidemeister_from_fixed_points,
    reidemeister_trace, universal_invariant,
};
use lefschetz_core::realize::{realize, RealizationTarget};
use lefschetz_core::uz::class_of_matrix;

use support::*;

fn big_rows(rows: Vec<Vec<i64>>) -> IntMatrix {
    if rows.is_empty() {
        return IntMatrix::zeros(0, 0);
    }
    IntMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()).unwrap()
}

fn square(min: usize, max: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (min..=max)
        .prop_flat_map(move |n| prop::collection::vec(prop::collection::vec(-bound..=bound, n), n))
        .prop_map(big_rows)
}

fn rect(max: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max, 1..=max)
        .prop_flat_map(move |(r, c)| prop::collection::vec(prop::collection::vec(-bound..=bound, c), r))
        .prop_map(big_rows)
}

type Ops = Vec<(usize, usize, i64)>;

fn ops() -> impl Strategy<Value = Ops> {
    prop::collection::vec((0usize..8, 0usize..8, -2i64..=2), 0..12)
}

/// `(U, U⁻¹)` from elementary row additions, tracked independently.
fn unimodular(n: usize, ops: &Ops) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut v = IntMatrix::identity(n);
    if n < 2 {
        return (u, v);
    }
    for &(i, j, k) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        let k = BigInt::from(k);
        for c in 0..n {
            let x = u.get(i, c) + &k * u.get(j, c);
            u.set(i, c, x);
        }
        for r in 0..n {
            let x = v.get(r, j) - &k * v.get(r, i);
            v.set(r, j, x);
        }
    }
    (u, v)
}

fn monic(max_deg: usize, bound: i64) -> impl Strategy<Value = Vec<i128>> {
    (1..=max_deg).prop_flat_map(move |d| {
        prop::collection::vec(-bound..=bound, d).prop_map(|cs| {
            let mut f: Vec<i128> = cs.into_iter().map(i128::from).collect();
            f.push(1);
            f
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn char_poly_is_a_conjugation_invariant(a in square(1, 5, 5), ops in ops()) {
        let (u, v) = unimodular(a.rows(), &ops);
        prop_assert_eq!(&u * &v, IntMatrix::identity(a.rows()));
        prop_assert_eq!(char_poly(&(&(&u * &a) * &v)).unwrap(), char_poly(&a).unwrap());
    }

    #[test]
    fn char_poly_of_block_triangular_is_a_product(b in square(1, 3, 5), d in square(1, 3, 5), seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = random_rect(&mut r, b.rows(), d.rows(), 5);
        let m = IntMatrix::block_upper(&b, &c, &d).unwrap();
        prop_assert_eq!(char_poly(&m).unwrap(), &char_poly(&b).unwrap() * &char_poly(&d).unwrap());
    }

    #[test]
    fn smith_normal_form_is_consistent(m in rect(4, 9)) {
        let s = smith_normal_form(&m);
        prop_assert!(s.left.determinant().unwrap().abs().is_one());
        prop_assert!(s.right.determinant().unwrap().abs().is_one());
        for w in s.diagonal.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(s.diagonal.iter().all(|d| d.is_positive()));
        let prod = &(&s.left * &m) * &s.right;
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let want = if i == j && i < s.diagonal.len() { s.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(prod.get(i, j), &want);
            }
        }
        let kernel = kernel_basis(&m);
        prop_assert_eq!(kernel.len(), m.cols() - s.rank());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn factorization_reconstructs_and_is_irreducible(f in monic(7, 6)) {
        let p = to_poly(&f);
        let fac = factor_over_q(&p).unwrap();
        prop_assert_eq!(fac.expand(), p);
        for (g, _) in &fac.factors {
            prop_assert!(g.is_monic());
            if g.degree().unwrap() <= 4 {
                prop_assert!(is_irreducible(&to_i128(g)), "{} is reducible", g);
            }
        }
        let mut sorted = fac.factors.clone();
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        prop_assert_eq!(sorted, fac.factors);
    }

    #[test]
    fn uz_class_is_a_conjugation_invariant(a in square(1, 4, 5), ops in ops()) {
        let (u, v) = unimodular(a.rows(), &ops);
        prop_assert_eq!(class_of_matrix(&(&(&u * &a) * &v)).unwrap(), class_of_matrix(&a).unwrap());
    }

    #[test]
    fn uz_class_is_block_additive(b in square(0, 3, 5), d in square(0, 3, 5), seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = random_rect(&mut r, b.rows(), d.rows(), 5);
        let m = IntMatrix::block_upper(&b, &c, &d).unwrap();
        let sum = &class_of_matrix(&b).unwrap() + &class_of_matrix(&d).unwrap();
        prop_assert_eq!(class_of_matrix(&m).unwrap(), sum);
        prop_assert!((&class_of_matrix(&b).unwrap() - &class_of_matrix(&b).unwrap()).is_zero());
    }

    #[test]
    fn equal_char_polys_give_equal_classes(f in monic(3, 4), g in monic(3, 4), ops in ops()) {
        // companion(fg) against a conjugated companion(f) ⊕ companion(g)
        let coeffs = |h: &[i128]| h.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        let whole = IntMatrix::companion(&coeffs(&poly_mul(&f, &g))).unwrap();
        let split = IntMatrix::block_diag(
            &IntMatrix::companion(&coeffs(&g)).unwrap(),
            &IntMatrix::companion(&coeffs(&f)).unwrap(),
        ).unwrap();
        let (u, v) = unimodular(split.rows(), &ops);
        let mixed = &(&u * &split) * &v;
        prop_assert_eq!(class_of_matrix(&whole).unwrap(), class_of_matrix(&mixed).unwrap());
    }

    #[test]
    fn twisted_representatives_are_canonical(
        k in 1usize..=2,
        phi in prop::collection::vec(-3i64..=3, 4),
        a in prop::collection::vec(-5i64..=5, 2),
        moves in prop::collection::vec((any::<bool>(), prop::collection::vec(-5i64..=5, 2)), 0..6),
        with_weyl in any::<bool>(),
    ) {
        let phi_pi = big_rows((0..k).map(|i| phi[i * 2..i * 2 + k].to_vec()).collect());
        let aut = if with_weyl {
            AutGroup::new(k, FiniteGroup::cyclic(2), vec![IntMatrix::identity(k), -&IntMatrix::identity(k)]).unwrap()
        } else {
            AutGroup::free_abelian(k)
        };
        let twist = TwistData { phi_pi: phi_pi.clone() };
        let classes = TwistedClassSet::new(&aut, &twist);
        let start: Vec<BigInt> = a[..k].iter().map(|&x| BigInt::from(x)).collect();
        let rep = classes.representative(&start);
        prop_assert_eq!(classes.representative(&rep), rep.clone());
        let shift = &phi_pi - &IntMatrix::identity(k);
        let mut cur = start;
        for (flip, m) in moves {
            let m: Vec<BigInt> = m[..k].iter().map(|&x| BigInt::from(x)).collect();
            let w = usize::from(flip && with_weyl);
            let moved = aut.theta(w).mul_vec(&cur);
            cur = moved.iter().zip(shift.mul_vec(&m)).map(|(x, y)| x + y).collect();
            prop_assert_eq!(classes.representative(&cur), rep.clone());
        }
    }

    #[test]
    fn projection_is_additive_and_ignores_non_pi1(
        xs in prop::collection::vec((-4i64..=4, any::<bool>(), -3i64..=3), 0..8),
        ys in prop::collection::vec((-4i64..=4, any::<bool>(), -3i64..=3), 0..8),
    ) {
        let aut = AutGroup::new(1, FiniteGroup::cyclic(2), vec![IntMatrix::identity(1), IntMatrix::from_i64(&[&[-1]])]).unwrap();
        let classes = TwistedClassSet::new(&aut, &TwistData { phi_pi: IntMatrix::from_i64(&[&[-1]]) });
        let build = |ts: &[(i64, bool, i64)], pi1_only: bool| {
            let mut e = GroupRingElement::zero();
            for &(v, w, c) in ts {
                if pi1_only && w {
                    continue;
                }
                e.add_term(AutElem::new(vec![BigInt::from(v)], usize::from(w)), BigInt::from(c));
            }
            e
        };
        let (x, y) = (build(&xs, false), build(&ys, false));
        let px = pi1_projection(&x, &aut, &classes).unwrap();
        let py = pi1_projection(&y, &aut, &classes).unwrap();
        prop_assert_eq!(pi1_projection(&x.add(&y), &aut, &classes).unwrap(), &px + &py);
        prop_assert_eq!(px, pi1_projection(&build(&xs, true), &aut, &classes).unwrap());
        let outside: Vec<_> = xs.iter().map(|&(v, _, c)| (v, true, c)).collect();
        prop_assert!(pi1_projection(&build(&outside, false), &aut, &classes).unwrap().is_zero());
    }

    #[test]
    fn realization_round_trips(a in square(0, 4, 5), b in square(0, 4, 5)) {
        let t = RealizationTarget::new(a.clone(), b.clone()).unwrap();
        let c = realize(&t).unwrap();
        prop_assert_eq!(&load_complex(&to_json(&c)).unwrap(), &c);
        let uz = universal_invariant(&c).unwrap().entries[0].uz.clone().unwrap();
        prop_assert_eq!(uz, &class_of_matrix(&a).unwrap() - &class_of_matrix(&b).unwrap());
    }

    #[test]
    fn universal_invariant_ignores_basis_order(name_idx in 0usize..3, seed in any::<u64>()) {
        let c = builtin(["example1", "example2", "example3"][name_idx]).unwrap();
        let mut r = rng(seed);
        for d in &c.iso_classes {
            let mut shuffled = d.clone();
            for ch in &d.chain {
                let mut perm: Vec<usize> = (0..ch.rank()).collect();
                rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut r);
                shuffled = permute_degree(&shuffled, ch.degree, &perm);
            }
            prop_assert_eq!(class_terms(d), class_terms(&shuffled));
            prop_assert_eq!(lambda_of_class(d).unwrap(), lambda_of_class(&shuffled).unwrap());
            prop_assert_eq!(reidemeister_trace(d), reidemeister_trace(&shuffled));
        }
    }

    #[test]
    fn identity_padding_cancels(a in square(0, 3, 4), b in square(0, 3, 4), p in 0usize..3, r in 1usize..3) {
        let c = realize(&RealizationTarget::new(a, b).unwrap()).unwrap();
        let d = &c.iso_classes[0];
        let padded = pad_identity(d, p, r);
        prop_assert_eq!(class_terms(d), class_terms(&padded));
    }
}

fn class_terms(d: &IsoClassData) -> Vec<(GroupRingMatrix, BigInt)> {
    let raw = d.chain.iter().map(|ch| {
        let idx = ch.unmasked();
        let sign = if ch.degree % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        (ch.map.submatrix(&idx, &idx), sign)
    });
    normalize_terms(raw).into_iter().collect()
}

/// Renumbers the basis of degree `p`; new element `i` is old element `perm[i]`.
fn permute_degree(d: &IsoClassData, p: usize, perm: &[usize]) -> IsoClassData {
    let all = |n: usize| (0..n).collect::<Vec<_>>();
    let chain: Vec<ChainDegree> = d
        .chain
        .iter()
        .map(|ch| {
            let mut ch = ch.clone();
            if ch.degree == p {
                ch.map = ch.map.submatrix(perm, perm);
                ch.mask = perm.iter().map(|&i| ch.mask[i]).collect();
                ch.isotropy = perm.iter().map(|&i| ch.isotropy[i].clone()).collect();
                ch.boundary = ch.boundary.map(|b| b.submatrix(perm, &all(b.cols())));
            } else if ch.degree == p + 1 {
                ch.boundary = ch.boundary.map(|b| b.submatrix(&all(b.rows()), perm));
            }
            ch
        })
        .collect();
    IsoClassData::new(d.key.clone(), d.aut.clone(), d.twist.clone(), chain, d.fixed_points.clone()).unwrap()
}

/// Adds `r` free cells in degrees `p` and `p + 1`, the new `p + 1` cells
/// bounding the new `p` cells, with the identity map on both.
fn pad_identity(d: &IsoClassData, p: usize, r: usize) -> IsoClassData {
    let aut = &d.aut;
    let zero = GroupRingElement::zero;
    let one = || GroupRingElement::one(aut);
    let rank = |q: usize| d.rank(q);
    let (np, nq) = (rank(p), rank(p + 1));
    let mut degrees: Vec<usize> = d.chain.iter().map(|c| c.degree).collect();
    for q in [p, p + 1] {
        if !degrees.contains(&q) {
            degrees.push(q);
        }
    }
    degrees.sort_unstable();
    let grow = |m: &GroupRingMatrix, extra_rows: usize, extra_cols: usize, diag: bool| {
        let rows: Vec<Vec<GroupRingElement>> = (0..m.rows() + extra_rows)
            .map(|i| {
                (0..m.cols() + extra_cols)
                    .map(|j| {
                        if i < m.rows() && j < m.cols() {
                            m.get(i, j).clone()
                        } else if diag && i >= m.rows() && j >= m.cols() && i - m.rows() == j - m.cols() {
                            one()
                        } else {
                            zero()
                        }
                    })
                    .collect()
            })
            .collect();
        GroupRingMatrix::from_rows(rows, m.cols() + extra_cols).unwrap()
    };
    let chain = degrees
        .into_iter()
        .map(|q| {
            let mut ch = d.degree(q).cloned().unwrap_or_else(|| {
                let mut c = ChainDegree::free(aut, q, GroupRingMatrix::zeros(0, 0));
                if q > 0 {
                    c.boundary = Some(GroupRingMatrix::zeros(0, rank(q - 1)));
                }
                c
            });
            let below = if q == 0 { 0 } else { rank(q - 1) };
            if q == p || q == p + 1 {
                ch.map = grow(&ch.map, r, r, true);
                ch.mask.extend(std::iter::repeat_n(false, r));
                ch.isotropy.extend(std::iter::repeat_n(vec![aut.identity()], r));
            }
            if q == p {
                ch.boundary = ch.boundary.map(|b| grow(&b, r, 0, false)).or_else(|| {
                    (q > 0).then(|| GroupRingMatrix::zeros(np + r, below))
                });
            } else if q == p + 1 {
                let b = ch.boundary.clone().unwrap_or_else(|| GroupRingMatrix::zeros(nq, np));
                ch.boundary = Some(grow(&b, r, r, true));
            } else if q == p + 2 {
                ch.boundary = ch.boundary.map(|b| grow(&b, 0, r, false));
            }
            ch
        })
        .collect();
    IsoClassData::new(d.key.clone(), aut.clone(), d.twist.clone(), chain, d.fixed_points.clone()).unwrap()
}

#[test]
fn weyl_orders_match_normalizers() {
    for name in ["Z2", "Z2xZ2", "Zn:6", "Sym:3", "Sym:4"] {
        let g = FiniteGroup::builtin(name).unwrap();
        for h in all_subgroups(&g) {
            let w = lefschetz_core::groups::weyl_group(&g, &h).unwrap();
            assert_eq!(w.order() * h.order(), h.normalizer(&g).order(), "{name}");
        }
    }
}

#[test]
fn builtins_round_trip() {
    for name in ["example1", "example2", "example3"] {
        let c = builtin(name).unwrap();
        let text = to_json(&c);
        assert_eq!(load_complex(&text).unwrap(), c);
        assert_eq!(to_json(&load_complex(&text).unwrap()), text);
    }
}

#[test]
fn fixed_point_traces_agree_on_the_corpus() {
    for name in ["example1", "example2", "example3"] {
        let c = builtin(name).unwrap();
        for d in c.iso_classes.iter().filter(|d| !d.fixed_points.is_empty()) {
            let classes = TwistedClassSet::pi1_only(&d.aut, &d.twist);
            assert_eq!(
                reidemeister_from_fixed_points(&d.fixed_points, &classes).unwrap(),
                reidemeister_trace(d),
                "{name} {}",
                d.key.component
            );
        }
    }
}

/// The identity on the example 1 space: ℓ at (Z2) and λ vanish with χ(S¹) = 0.
#[test]
fn identity_on_example1() {
    let mut doc: serde_json::Value = serde_json::from_str(builtin_document("example1").unwrap()).unwrap();
    for class in doc["iso_classes"].as_array_mut().unwrap() {
        for ch in class["chain"].as_array_mut().unwrap() {
            let n = ch["rank"].as_u64().unwrap() as usize;
            ch["map"] = serde_json::json!((0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect::<Vec<_>>())
                .collect::<Vec<_>>());
        }
    }
    // the identity does commute with the degree-2 boundary
    doc["iso_classes"][0]["chain"][2]["boundary"] = serde_json::json!([[1, 1]]);
    let c = load_complex(&doc.to_string()).unwrap();
    let ell = klein_williams(&c);
    assert!(ell.summands[1].is_zero());
    let lambda = lambda_invariant(&c).unwrap();
    assert!(lambda.entries[1].1.is_zero());
    // χ(S², S¹)/Z2 = 1 on the free class
    assert_eq!(lambda.entries[0].1.augmentation(), BigInt::from(1));
}
