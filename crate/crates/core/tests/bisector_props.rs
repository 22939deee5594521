use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use bisector_core::binary::Param;
use bisector_core::bisector::{
    bisects_set, desargues_involution, is_bisector_arrangement, pair_through_line,
};
use bisector_core::conic::{crossing_params, degenerations, restrict, Degenerations};
use bisector_core::oracle::brute::{
    brute_asymptotic, brute_bisects, line_product, meets, net_members, ReducibleTable,
};
use bisector_core::oracle::Plane;
use bisector_core::pencil::find_hyperbolas;
use bisector_core::quad::bisects_quadrilateral;
use bisector_core::{
    AsymptoticPencil, Error, FieldSpec, Fp, Line, LinePair, NetCoords, Pencil, Quadratic,
    Quadrilateral, Rational,
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

fn line_mod(p: u64) -> impl Strategy<Value = Line<Fp>> {
    (0..p, 0..p, 0..p).prop_filter_map("not a line", move |(u, v, w)| {
        Line::new(Fp::new(u, p), Fp::new(v, p), Fp::new(w, p)).ok()
    })
}

fn quadratic_mod(p: u64) -> impl Strategy<Value = Quadratic<Fp>> {
    prop::array::uniform6(0..p).prop_filter_map("degree two", move |c| {
        Quadratic::from_coeffs(c.map(|v| Fp::new(v, p))).ok()
    })
}

fn reducible_pencil_mod(p: u64) -> impl Strategy<Value = Pencil<Fp>> {
    (line_mod(p), line_mod(p), line_mod(p), line_mod(p))
        .prop_filter_map("independent", |(a, b, c, d)| {
            Pencil::new(line_product(&a, &b), line_product(&c, &d)).ok()
        })
}

fn any_pencil_mod(p: u64) -> impl Strategy<Value = Pencil<Fp>> {
    prop_oneof![
        (quadratic_mod(p), quadratic_mod(p))
            .prop_filter_map("independent", |(a, b)| Pencil::new(a, b).ok()),
        reducible_pencil_mod(p),
    ]
}

fn prime_and<S: Strategy>(f: impl Fn(u64) -> S) -> impl Strategy<Value = (u64, S::Value)> {
    prop::sample::select(vec![5u64, 7]).prop_flat_map(move |p| (Just(p), f(p)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn set_bisection_matches_enumeration((p, (pencil, l)) in prime_and(|p| (any_pencil_mod(p), line_mod(p)))) {
        let plane = &fixture(p).plane;
        let fs = [pencil.f1().clone(), pencil.f2().clone()];
        prop_assert_eq!(bisects_set(&l, &fs), brute_bisects(plane, &l, &fs));
    }

    /// Over reducible generators, bisecting both is the same as lying on a
    /// member of the asymptotic pencil, and the located member contains it.
    #[test]
    fn bisectors_of_generators_are_asymptotic_lines(
        (p, (pencil, l)) in prime_and(|p| (reducible_pencil_mod(p), line_mod(p)))
    ) {
        let fx = fixture(p);
        let pairs = brute_asymptotic(&fx.plane, &fx.table, pencil.f1(), pencil.f2());
        let on_member = pairs.iter().any(|x| x.contains(&l));
        let fs = [pencil.f1().clone(), pencil.f2().clone()];
        prop_assert_eq!(bisects_set(&l, &fs).is_some(), on_member);
        match pair_through_line(&l, &pencil) {
            Some(m) => {
                prop_assert!(on_member);
                prop_assert!(m.pair.contains(&l));
                prop_assert!(m.ambiguous || pairs.contains(&m.pair));
            }
            None => prop_assert!(!on_member),
        }
    }

    /// A bisector of two generators it meets bisects every member of the
    /// net with the same midpoint.
    #[test]
    fn generator_bisectors_bisect_the_net((p, (pencil, l)) in prime_and(|p| (any_pencil_mod(p), line_mod(p)))) {
        let plane = &fixture(p).plane;
        prop_assume!(meets(plane, pencil.f1(), &l) && meets(plane, pencil.f2(), &l));
        let fs = [pencil.f1().clone(), pencil.f2().clone()];
        let Some(m) = bisects_set(&l, &fs) else { return Ok(()) };
        let net: Vec<Quadratic<Fp>> = net_members(plane, pencil.f1(), pencil.f2())
            .into_iter()
            .map(|x| x.quadratic)
            .collect();
        let all = brute_bisects(plane, &l, &net);
        prop_assert!(all.is_some());
        if m != bisector_core::Midpoint::Undetermined {
            prop_assert_eq!(all, Some(m));
        }
    }

    #[test]
    fn asymptotic_pencils_are_arrangements((_, pencil) in prime_and(any_pencil_mod)) {
        let pairs: Vec<LinePair<Fp>> = AsymptoticPencil::new(pencil).pairs().unwrap().into_iter().collect();
        prop_assert!(is_bisector_arrangement(&pairs));
    }

    /// Crossings of every pencil member on a line are swapped by one
    /// involution of order two.
    #[test]
    fn crossings_are_conjugate((p, (pencil, l)) in prime_and(|p| (any_pencil_mod(p), line_mod(p)))) {
        let inv = match desargues_involution(&pencil, &l) {
            Ok(inv) => inv,
            Err(Error::ThroughBasepoint) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let params: Vec<Param<Fp>> = std::iter::once(Param::Infinity)
            .chain((0..p).map(|t| Param::Finite(Fp::new(t, p))))
            .collect();
        for t in &params {
            prop_assert_eq!(&inv.apply(&inv.apply(t)), t);
        }
        for a in 0..p {
            let c = NetCoords::new(Fp::new(a, p), Fp::new(1, p), Fp::new(0, p)).unwrap();
            let g = pencil.member(&c);
            prop_assert!(inv.is_apolar(&restrict(&g, &l)));
            if let Some(roots) = crossing_params(&g, &l) {
                if let [r, s] = roots.as_slice() {
                    prop_assert_eq!(&inv.apply(r), s);
                }
            }
        }
    }
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn rat_line() -> impl Strategy<Value = Line<Rational>> {
    prop::array::uniform3(-4i64..=4).prop_filter_map("not a line", |c| {
        Line::new(rat(c[0]), rat(c[1]), rat(c[2])).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Asymptotes of the quadrilateral's hyperbolas bisect its sides.
    #[test]
    fn rational_asymptotes_bisect_the_quadrilateral(a in rat_line(), b in rat_line(), c in rat_line(), d in rat_line()) {
        let Ok(q) = Quadrilateral::new(LinePair::new(a, b), LinePair::new(c, d)) else { return Ok(()) };
        let pencil = q.pencil();
        for h in find_hyperbolas(&pencil) {
            if let Degenerations::Hyperbola { asymptotes, .. } = degenerations(&h.quadratic) {
                for l in asymptotes.lines() {
                    prop_assert!(bisects_quadrilateral(l, &q).is_some(), "{} does not bisect {}", l, q);
                    let m = pair_through_line(l, &pencil);
                    prop_assert!(m.is_some_and(|m| m.pair.contains(l)));
                }
            }
        }
    }
}
