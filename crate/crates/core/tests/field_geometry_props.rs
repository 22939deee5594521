use bisector_core::geometry::{intersect, map_line_to_y0, pullback, reflect_through, Intersection};
use bisector_core::{AffineMap, Field, FieldSpec, Fp, Line, LinePair, Point, Quadratic, Rational};
use proptest::prelude::*;

const PRIMES: [u64; 6] = [3, 5, 7, 11, 13, 101];

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(&PRIMES[..])
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn rat_point() -> impl Strategy<Value = Point<Rational>> {
    (small_rat(), small_rat()).prop_map(|(x, y)| Point::new(x, y))
}

fn rat_line() -> impl Strategy<Value = Line<Rational>> {
    (small_rat(), small_rat(), small_rat())
        .prop_filter_map("not a line", |(u, v, w)| Line::new(u, v, w).ok())
}

fn rat_quadratic() -> impl Strategy<Value = Quadratic<Rational>> {
    prop::array::uniform6(small_rat())
        .prop_filter_map("degree two", |c| Quadratic::from_coeffs(c).ok())
}

proptest! {
    #[test]
    fn prime_field_laws(p in prime(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (a, b, c) = (Fp::new(a % p, p), Fp::new(b % p, p), Fp::new(c % p, p));
        prop_assert_eq!((a + b) * c, a * c + b * c);
        prop_assert_eq!(a - b + b, a);
        prop_assert_eq!(-(-a), a);
        prop_assert_eq!(a.halve() + a.halve(), a);
        if !a.is_zero() {
            prop_assert_eq!(a * a.inv().unwrap(), Fp::new(1, p));
            prop_assert_eq!((b / a) * a, b);
        }
        match (a * a).sqrt() {
            Some(r) => prop_assert_eq!(r * r, a * a),
            None => prop_assert!(false, "a square has a root"),
        }
        if let Some(r) = a.sqrt() {
            prop_assert_eq!(r * r, a);
        }
    }

    #[test]
    fn quadratic_residues_are_exactly_the_squares(p in prime(), a in any::<u64>()) {
        let a = Fp::new(a % p, p);
        let squares: Vec<Fp> = (0..p).map(|x| Fp::new(x * x % p, p)).collect();
        prop_assert_eq!(a.sqrt().is_some(), squares.contains(&a));
    }

    #[test]
    fn scalars_print_and_parse(n in -1000i64..1000, d in 1i64..50, p in prime()) {
        let q = rat(n, d);
        prop_assert_eq!(Rational::parse(&FieldSpec::Rationals, &q.to_string()).unwrap(), q);
        let x = Fp::from_i64(n, p);
        prop_assert_eq!(Fp::parse(&FieldSpec::Prime(p), &x.to_string()).unwrap(), x);
        let spec = FieldSpec::Prime(p);
        prop_assert_eq!(spec.to_string().parse::<FieldSpec>().unwrap(), spec);
    }

    #[test]
    fn reflection_is_an_involution(m in rat_point(), p in rat_point()) {
        let once = reflect_through(&m, &p);
        prop_assert_eq!(reflect_through(&m, &once), p.clone());
        let two = rat(2, 1);
        prop_assert_eq!(once.x + p.x, two.clone() * m.x);
    }

    #[test]
    fn lines_through_points_and_meets(p in rat_point(), q in rat_point(), l in rat_line()) {
        prop_assume!(p != q);
        let pq = Line::through_points(&p, &q).unwrap();
        prop_assert!(pq.contains_point(&p) && pq.contains_point(&q));
        match intersect(&pq, &l) {
            Intersection::Point(x) => prop_assert!(pq.contains(&x) && l.contains(&x)),
            Intersection::Coincident => prop_assert_eq!(&pq, &l),
        }
    }

    #[test]
    fn line_parameterization_round_trips(l in rat_line(), t in small_rat()) {
        let x = l.point_at(&t);
        prop_assert!(l.contains_point(&x));
        prop_assert_eq!(l.parameter_of(&x).unwrap(), t);
    }

    #[test]
    fn standard_map_sends_line_to_x_axis(l in rat_line(), t in small_rat(), f in rat_quadratic()) {
        let map = map_line_to_y0(&l);
        let image = map.apply(&l.point_at(&t));
        prop_assert!(image.y.is_zero());
        // pulling back through the inverse evaluates f at the original point
        let g = pullback(&map.inverse(), &f);
        let x = l.point_at(&t);
        prop_assert_eq!(g.eval(&image.x, &image.y), f.eval(&x.x, &x.y));
    }

    #[test]
    fn affine_maps_compose_and_invert(
        m in prop::array::uniform4(small_rat()),
        t in prop::array::uniform2(small_rat()),
        p in rat_point(),
    ) {
        let map = AffineMap::new([[m[0].clone(), m[1].clone()], [m[2].clone(), m[3].clone()]], t);
        prop_assume!(map.is_ok());
        let map = map.unwrap();
        prop_assert_eq!(map.inverse().apply(&map.apply(&p)), p.clone());
        prop_assert_eq!(map.compose(&map.inverse()).apply(&p), p);
    }

    #[test]
    fn pulled_and_pushed_lines_agree(l in rat_line(), dx in small_rat(), dy in small_rat(), p in rat_point()) {
        let map = AffineMap::translation(dx, dy);
        let back = map.pull_line(&l);
        prop_assert_eq!(back.contains_point(&p), l.contains_point(&map.apply(&p)));
        prop_assert_eq!(map.push_line(&back), l);
    }

    #[test]
    fn lines_print_and_parse(a in rat_line(), b in rat_line(), p in prime(), u in any::<u64>(), v in any::<u64>()) {
        let q = FieldSpec::Rationals;
        prop_assert_eq!(Line::parse(&q, &a.to_string()).unwrap(), a.clone());
        let pair = LinePair::new(a, b);
        prop_assert_eq!(LinePair::parse(&q, &pair.to_string()).unwrap(), pair);
        let spec = FieldSpec::Prime(p);
        if let Ok(l) = Line::new(Fp::new(u % p, p), Fp::new(v % p, p), Fp::new(1, p)) {
            prop_assert_eq!(Line::parse(&spec, &l.to_string()).unwrap(), l);
        }
    }
}

#[test]
fn line_syntax_variants() {
    let q = FieldSpec::Rationals;
    let l = Line::<Rational>::parse(&q, "x+2*y=3").unwrap();
    assert_eq!(Line::parse(&q, "1,2,-3").unwrap(), l);
    assert_eq!(Line::parse(&q, "2*x + 4*y - 6").unwrap(), l);
    assert_eq!(Line::parse(&q, "3 = x + 2*y").unwrap(), l);
    assert!(Line::<Rational>::parse(&q, "x*y=1").is_err());
    assert!(Line::<Rational>::parse(&q, "5=5").is_err());
    let pair = LinePair::<Rational>::parse(&q, "1,0,0; 0,1,-1").unwrap();
    assert_eq!(pair, LinePair::parse(&q, "{x=0, y=1}").unwrap());
    assert!(LinePair::<Rational>::parse(&q, "x=0").is_err());
}
