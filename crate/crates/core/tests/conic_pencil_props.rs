//! Library results against point-enumeration and table lookups over GF(p).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use bisector_core::conic::{classify, degenerations, is_reducible, mid, Degenerations};
use bisector_core::geometry::AffineMap;
use bisector_core::oracle::brute::{
    brute_asymptotic, brute_is_trivial, brute_mid, dependent, det3, line_product,
    points_at_infinity_count, ReducibleTable,
};
use bisector_core::oracle::Plane;
use bisector_core::pencil::{are_independent, is_trivial, net_contains};
use bisector_core::quad::quadrilateral_of;
use bisector_core::{
    AsymptoticPencil, ConicKind, Field, FieldSpec, Fp, Line, LinePair, NetCoords, Pencil,
    Quadratic, Rational,
};
use proptest::prelude::*;

struct Fixture {
    plane: Plane,
    table: ReducibleTable,
}

fn fixture(p: u64) -> &'static Fixture {
    static CACHE: OnceLock<Mutex<HashMap<u64, &'static Fixture>>> = OnceLock::new();
    let mut map = CACHE.get_or_init(Default::default).lock().unwrap();
    map.entry(p).or_insert_with(|| {
        let plane = Plane::new(&FieldSpec::Prime(p)).unwrap();
        let table = ReducibleTable::new(&plane);
        Box::leak(Box::new(Fixture { plane, table }))
    })
}

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7])
}

fn quadratic_mod(p: u64) -> impl Strategy<Value = Quadratic<Fp>> {
    prop::array::uniform6(0..p).prop_filter_map("degree two", move |c| {
        Quadratic::from_coeffs(c.map(|v| Fp::new(v, p))).ok()
    })
}

fn line_mod(p: u64) -> impl Strategy<Value = Line<Fp>> {
    (0..p, 0..p, 0..p).prop_filter_map("not a line", move |(u, v, w)| {
        Line::new(Fp::new(u, p), Fp::new(v, p), Fp::new(w, p)).ok()
    })
}

fn with_prime<S: Strategy>(f: impl Fn(u64) -> S) -> impl Strategy<Value = (u64, S::Value)> {
    small_prime().prop_flat_map(move |p| (Just(p), f(p)))
}

fn pencil_mod(p: u64) -> impl Strategy<Value = Pencil<Fp>> {
    (quadratic_mod(p), quadratic_mod(p))
        .prop_filter_map("independent", |(a, b)| Pencil::new(a, b).ok())
}

/// Pencils with reducible generators, which carry most of the interesting
/// asymptotic structure.
fn reducible_pencil_mod(p: u64) -> impl Strategy<Value = Pencil<Fp>> {
    (line_mod(p), line_mod(p), line_mod(p), line_mod(p))
        .prop_filter_map("independent", |(a, b, c, d)| {
            Pencil::new(line_product(&a, &b), line_product(&c, &d)).ok()
        })
}

fn any_pencil_mod(p: u64) -> impl Strategy<Value = Pencil<Fp>> {
    prop_oneof![pencil_mod(p), reducible_pencil_mod(p)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quadratics_print_and_parse((p, f) in with_prime(quadratic_mod)) {
        let again = Quadratic::<Fp>::parse(&FieldSpec::Prime(p), &f.to_string()).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn classification_matches_counting((p, f) in with_prime(quadratic_mod)) {
        let fx = fixture(p);
        let plane = &fx.plane;
        let class = classify(&f);
        let expected = match points_at_infinity_count(plane, &f) {
            2 => ConicKind::Hyperbola,
            1 => ConicKind::Parabola,
            _ => ConicKind::Ellipse,
        };
        prop_assert_eq!(class.kind, expected);
        // conjugate parallel pairs are singular without splitting
        let degenerate = match expected {
            ConicKind::Ellipse => det3(&f).is_zero(),
            _ => fx.table.lookup(&f).is_some(),
        };
        prop_assert_eq!(class.degenerate, degenerate);
    }

    #[test]
    fn factoring_matches_the_product_table((p, f) in with_prime(quadratic_mod)) {
        let fx = fixture(p);
        let lib = is_reducible(&f);
        prop_assert_eq!(lib.as_ref(), fx.table.lookup(&f));
        if let Some(pair) = lib {
            prop_assert!(pair.product().is_scalar_multiple_of(&f));
        }
    }

    #[test]
    fn products_factor_back((_, (a, b)) in with_prime(|p| (line_mod(p), line_mod(p)))) {
        let pair = LinePair::new(a.clone(), b.clone());
        let f = line_product(&a, &b);
        prop_assert_eq!(is_reducible(&f), Some(pair.clone()));
        prop_assert!(pair.product().is_scalar_multiple_of(&f));
    }

    #[test]
    fn midpoints_match_point_enumeration((p, (f, l)) in with_prime(|p| (quadratic_mod(p), line_mod(p)))) {
        let plane = &fixture(p).plane;
        prop_assert_eq!(mid(&f, &l), brute_mid(plane, &f, &l));
    }

    #[test]
    fn degenerations_are_reducible((p, f) in with_prime(quadratic_mod)) {
        match degenerations(&f) {
            Degenerations::Hyperbola { lambda, asymptotes } => {
                let g = f.add_constant(&lambda);
                prop_assert!(asymptotes.product().is_scalar_multiple_of(&g));
            }
            Degenerations::ParallelFamily(form) => {
                for r in 0..p {
                    let (lambda, pair) = form.member(&Fp::new(r, p));
                    prop_assert!(pair.product().is_scalar_multiple_of(&f.add_constant(&lambda)));
                    prop_assert_eq!(pair.midline(), Some(form.midline()));
                }
            }
            Degenerations::None => {
                let fx = fixture(p);
                for c in 0..p {
                    prop_assert!(fx.table.lookup(&f.add_constant(&Fp::new(c, p))).is_none());
                }
            }
        }
    }

    #[test]
    fn asymptotic_pencils_match_enumeration((p, pencil) in with_prime(any_pencil_mod)) {
        let fx = fixture(p);
        let a = AsymptoticPencil::new(pencil.clone());
        let lib = a.pairs().unwrap();
        let brute = brute_asymptotic(&fx.plane, &fx.table, pencil.f1(), pencil.f2());
        prop_assert_eq!(&lib, &brute);
        prop_assert_eq!(is_trivial(&a), brute_is_trivial(&brute));
        for m in a.members().unwrap() {
            prop_assert!(pencil.member(&m.coords).is_scalar_multiple_of(&m.pair.product()));
        }
    }

    #[test]
    fn delta_vanishes_on_singular_members(
        (p, (pencil, t, u, v)) in with_prime(|p| (any_pencil_mod(p), 0..p, 0..p, 0..p))
    ) {
        let (t, u, v) = (Fp::new(t, p), Fp::new(u, p), Fp::new(v, p));
        prop_assume!(!(u.is_zero() && v.is_zero()));
        let member = pencil.member(&NetCoords::new(u, v, t).unwrap());
        prop_assert_eq!(pencil.delta_phi().eval(&t, &u, &v).is_zero(), det3(&member).is_zero());
    }

    #[test]
    fn net_membership_recovers_coordinates(
        (p, (pencil, a, b, l)) in with_prime(|p| (any_pencil_mod(p), 0..p, 0..p, 0..p))
    ) {
        let (a, b, l) = (Fp::new(a, p), Fp::new(b, p), Fp::new(l, p));
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let c = NetCoords::new(a, b, l).unwrap();
        let g = pencil.member(&c);
        let found = net_contains(&pencil, &g).unwrap();
        prop_assert!(pencil.member(&found).is_scalar_multiple_of(&g));
        prop_assert_eq!(found, c);
    }

    #[test]
    fn independence_agrees_with_brute_dependence((_, (f, g)) in with_prime(|p| (quadratic_mod(p), quadratic_mod(p)))) {
        prop_assert_eq!(are_independent(&f, &g), !dependent(&f, &g));
    }

    #[test]
    fn nontrivial_pencils_come_from_quadrilaterals((p, pencil) in with_prime(reducible_pencil_mod)) {
        let a = AsymptoticPencil::new(pencil);
        prop_assume!(!is_trivial(&a));
        let q = quadrilateral_of(&a).unwrap();
        prop_assert!(a.same_net(&q.pencil()));
        if p > 3 {
            prop_assert!(!q.is_degenerate());
        }
    }
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn rat_quadratic() -> impl Strategy<Value = Quadratic<Rational>> {
    prop::array::uniform6(-6i64..=6)
        .prop_filter_map("degree two", |c| Quadratic::from_coeffs(c.map(rat)).ok())
}

proptest! {
    #[test]
    fn class_is_affine_invariant(
        f in rat_quadratic(),
        m in prop::array::uniform4(-3i64..=3),
        t in prop::array::uniform2(-3i64..=3),
        k in 1i64..5,
    ) {
        let map = AffineMap::new([[rat(m[0]), rat(m[1])], [rat(m[2]), rat(m[3])]], t.map(rat));
        prop_assume!(map.is_ok());
        let g = bisector_core::geometry::pullback(&map.unwrap(), &f).scale(&rat(k)).unwrap();
        prop_assert_eq!(classify(&g), classify(&f));
        prop_assert_eq!(is_reducible(&g).is_some(), is_reducible(&f).is_some());
    }

    #[test]
    fn rational_hyperbolas_with_rational_asymptotes_degenerate(
        l in prop::array::uniform3(-5i64..=5),
        m in prop::array::uniform3(-5i64..=5),
        c in -5i64..=5,
    ) {
        let a = Line::new(rat(l[0]), rat(l[1]), rat(l[2]));
        let b = Line::new(rat(m[0]), rat(m[1]), rat(m[2]));
        prop_assume!(a.is_ok() && b.is_ok());
        let (a, b) = (a.unwrap(), b.unwrap());
        prop_assume!(!a.is_parallel(&b));
        let pair = LinePair::new(a, b);
        let f = pair.product().add_constant(&rat(c));
        match degenerations(&f) {
            Degenerations::Hyperbola { lambda, asymptotes } => {
                prop_assert_eq!(lambda, rat(-c));
                prop_assert_eq!(asymptotes, pair);
            }
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }
}

#[test]
fn exhaustive_gf3_factoring() {
    let fx = fixture(3);
    let mut reducible = 0;
    for c in 0..729u64 {
        let coeffs: [Fp; 6] = std::array::from_fn(|i| Fp::new(c / 3u64.pow(i as u32) % 3, 3));
        let Ok(f) = Quadratic::from_coeffs(coeffs) else {
            continue;
        };
        let lib = is_reducible(&f);
        assert_eq!(lib.as_ref(), fx.table.lookup(&f), "{f}");
        reducible += usize::from(lib.is_some());
    }
    // 78 line pairs, each with two nonzero scalings
    assert_eq!(reducible, 78 * 2);
}
