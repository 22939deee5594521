//! Fixed inputs with hand-checked outputs over ℚ and small prime fields.

use bisector_core::bisector::{
    bisector_field_of, bisects_set, desargues_involution, field_contains, is_bisector_arrangement,
    pair_through_line,
};
use bisector_core::conic::{
    classify, degenerations, is_reducible, mid, points_at_infinity, Degenerations,
};
use bisector_core::geometry::{midline, midpoint_on_line, reflect_through};
use bisector_core::pencil::{
    asymptotic_members, delta_phi, find_hyperbolas, net_contains, net_member, shared_line,
    triviality,
};
use bisector_core::quad::{bisects_quadrilateral, quadrilateral_of};
use bisector_core::{
    AsymptoticPencil, ConicKind, Error, Field, FieldSpec, Fp, Line, LinePair, MidResult, Midpoint,
    NetCoords, Pencil, Point, ProjectivePoint, Quadratic, Quadrilateral, Rational,
};

const Q: FieldSpec = FieldSpec::Rationals;

fn f5() -> FieldSpec {
    FieldSpec::Prime(5)
}

fn quad<F: Field>(spec: &FieldSpec, s: &str) -> Quadratic<F> {
    Quadratic::parse(spec, s).unwrap()
}

fn el<F: Field>(spec: &FieldSpec, n: i64) -> F {
    F::from_int(spec, n).unwrap()
}

fn line<F: Field>(spec: &FieldSpec, u: i64, v: i64, w: i64) -> Line<F> {
    Line::new(el(spec, u), el(spec, v), el(spec, w)).unwrap()
}

fn pt<F: Field>(spec: &FieldSpec, x: i64, y: i64) -> Point<F> {
    Point::new(el(spec, x), el(spec, y))
}

fn pencil<F: Field>(spec: &FieldSpec, a: &str, b: &str) -> Pencil<F> {
    Pencil::new(quad(spec, a), quad(spec, b)).unwrap()
}

/// (XY, (X+Y−1)(X−Y−3)) over `spec`.
fn standard_pencil<F: Field>(spec: &FieldSpec) -> Pencil<F> {
    pencil(spec, "x*y", "(x+y-1)*(x-y-3)")
}

#[test]
fn square_roots_and_halves() {
    let s7 = FieldSpec::Prime(7);
    assert!(el::<Fp>(&s7, 6).sqrt().is_none());
    for n in [0, 1, 2, 4] {
        let r = el::<Fp>(&s7, n).sqrt().unwrap();
        assert_eq!(r.square(), el(&s7, n));
    }
    assert_eq!(el::<Fp>(&f5(), 3).halve(), el(&f5(), 4));
    assert_eq!(el::<Fp>(&f5(), 1).halve(), el(&f5(), 3));
}

#[test]
fn midpoints_on_lines() {
    let x0 = line::<Rational>(&Q, 1, 0, 0);
    let p = ProjectivePoint::affine(el(&Q, 0), el(&Q, 1));
    let inf = ProjectivePoint::at_infinity(el(&Q, 0), el(&Q, 1)).unwrap();
    assert_eq!(midpoint_on_line(&p, &inf, &x0).unwrap(), Midpoint::Infinite);

    let diag = line::<Fp>(&f5(), 1, -1, 0);
    let a = ProjectivePoint::affine(el(&f5(), 1), el(&f5(), 1));
    let b = ProjectivePoint::affine(el(&f5(), 2), el(&f5(), 2));
    assert_eq!(
        midpoint_on_line(&a, &b, &diag).unwrap(),
        Midpoint::Finite(pt(&f5(), 4, 4))
    );

    assert_eq!(
        reflect_through(&pt::<Rational>(&Q, 1, 0), &pt(&Q, 3, 4)),
        pt(&Q, -1, -4)
    );
    let m = midline(&line::<Fp>(&f5(), 1, 0, 0), &line(&f5(), 1, 0, -1)).unwrap();
    assert_eq!(m, line(&f5(), 1, 0, -3));
}

#[test]
fn conic_classification_and_factoring() {
    let circle5: Quadratic<Fp> = quad(&f5(), "x^2+y^2-1");
    assert_eq!(points_at_infinity(&circle5).len(), 2);
    assert_eq!(classify(&circle5).kind, ConicKind::Hyperbola);
    assert!(is_reducible(&quad::<Rational>(&Q, "x*y-1")).is_none());

    let dbl = is_reducible(&quad::<Fp>(&f5(), "x^2+x*y-y^2")).unwrap();
    let two_x_plus_y = line::<Fp>(&f5(), 2, 1, 0);
    assert_eq!(dbl, LinePair::new(two_x_plus_y.clone(), two_x_plus_y));

    match degenerations(&quad::<Rational>(&Q, "x*(x-4)")) {
        Degenerations::ParallelFamily(form) => {
            assert_eq!(form.midline(), line(&Q, 1, 0, -2));
            let (_, pair) = form.member(&el(&Q, 1));
            assert_eq!(pair, LinePair::new(line(&Q, 1, 0, -1), line(&Q, 1, 0, -3)));
        }
        other => panic!("expected a parallel family, got {other:?}"),
    }
    assert_eq!(
        degenerations(&quad::<Rational>(&Q, "x^2-y")),
        Degenerations::None
    );
}

#[test]
fn line_conic_midpoints() {
    let f: Quadratic<Rational> = quad(&Q, "(x+y-1)*(x-y-3)");
    assert_eq!(
        mid(&f, &line(&Q, 1, 0, 0)),
        MidResult::Crosses(Midpoint::Finite(pt(&Q, 0, -1)))
    );
    let xy: Quadratic<Rational> = quad(&Q, "x*y");
    assert_eq!(
        mid(&xy, &line(&Q, 0, 1, -1)),
        MidResult::Crosses(Midpoint::Infinite)
    );
    assert_eq!(mid(&xy, &line(&Q, 1, 0, 0)), MidResult::MeetsNoCross);
}

#[test]
fn net_members_and_membership() {
    let p: Pencil<Rational> = pencil(&Q, "x^2+y", "y^2+x");
    let c = NetCoords::new(el(&Q, 1), el(&Q, -1), el(&Q, 0)).unwrap();
    let g = net_member(&p, &c);
    assert_eq!(g, quad(&Q, "x^2-y^2-x+y"));
    assert_eq!(classify(&g).kind, ConicKind::Hyperbola);

    let sp: Pencil<Rational> = standard_pencil(&Q);
    assert!(net_contains(&sp, &quad(&Q, "x*y-x")).is_none());
    assert!(net_contains(&sp, &quad(&Q, "3*x*y+7")).is_some());
}

#[test]
fn delta_cubic_of_xy_and_difference_of_squares() {
    let p: Pencil<Rational> = pencil(&Q, "x*y", "x^2-y^2");
    let d = delta_phi(&p);
    let quarter = Rational::new(1.into(), 4.into());
    // Φ(U, V) = −¼U² − V²
    assert_eq!(d.phi_at(&el(&Q, 1), &el(&Q, 0)), -quarter);
    assert_eq!(d.phi_at(&el(&Q, 0), &el(&Q, 1)), el(&Q, -1));
    assert_eq!(
        d.phi_at(&el(&Q, 1), &el(&Q, 1)),
        Rational::new((-5).into(), 4.into())
    );
}

#[test]
fn hyperbolas_in_pencils() {
    let p: Pencil<Rational> = pencil(&Q, "x^2+y", "y^2+x");
    let hs = find_hyperbolas(&p);
    assert_eq!(hs.len(), 2);
    for h in &hs {
        assert_eq!(classify(&h.quadratic).kind, ConicKind::Hyperbola);
    }

    let f3 = FieldSpec::Prime(3);
    let ex: Pencil<Fp> = pencil(&f3, "x^2+y", "x*y+y^2");
    let hs = find_hyperbolas(&ex);
    assert_eq!(hs.len(), 1);
    assert!(hs[0].quadratic.is_scalar_multiple_of(&quad(&f3, "x*y+y^2")));
}

#[test]
fn small_field_asymptotic_pencils() {
    let f3 = FieldSpec::Prime(3);
    let ex = AsymptoticPencil::new(pencil::<Fp>(&f3, "x^2+y", "x*y+y^2"));
    let members = asymptotic_members(&ex).unwrap();
    assert_eq!(members.len(), 1);
    assert_eq!(
        members[0].pair,
        LinePair::new(line(&f3, 0, 1, 0), line(&f3, 1, 1, 0))
    );
    assert_eq!(shared_line(&ex).unwrap(), None);

    let a5 = AsymptoticPencil::new(pencil::<Fp>(&f5(), "x*y", "x^2-y^2"));
    let dbl = line::<Fp>(&f5(), 2, 1, 0);
    assert!(a5.contains(&LinePair::new(dbl.clone(), dbl)));
    assert!(!triviality(&a5).unwrap().is_trivial());
    assert_eq!(shared_line(&a5).unwrap(), None);
    for m in asymptotic_members(&a5).unwrap() {
        assert!(net_contains(a5.pencil(), &m.pair.product()).is_some());
    }
}

#[test]
fn triviality_over_the_rationals() {
    let a = AsymptoticPencil::new(pencil::<Rational>(&Q, "x*y", "x^2-y^2"));
    assert!(triviality(&a).unwrap().is_trivial());
    assert!(matches!(quadrilateral_of(&a), Err(Error::Trivial)));
    assert!(matches!(bisector_field_of(a.pencil()), Err(Error::Trivial)));

    let shared = AsymptoticPencil::new(pencil::<Rational>(&Q, "x*y", "x*(x+y-1)"));
    assert_eq!(shared_line(&shared).unwrap(), Some(line(&Q, 1, 0, 0)));
}

#[test]
fn quadrilateral_bisectors() {
    let q = Quadrilateral::new(
        LinePair::new(line::<Rational>(&Q, 1, 0, 0), line(&Q, 0, 1, 0)),
        LinePair::new(line(&Q, 1, 1, -1), line(&Q, 1, -1, -3)),
    )
    .unwrap();
    assert!(q
        .pencil()
        .f2()
        .is_scalar_multiple_of(&quad(&Q, "x^2-y^2-4*x-2*y+3")));
    assert_eq!(
        bisects_quadrilateral(&line(&Q, 1, 0, 0), &q),
        Some(Midpoint::Finite(pt(&Q, 0, -1)))
    );
    assert_eq!(bisects_quadrilateral(&line(&Q, 0, 1, -1), &q), None);
    assert_eq!(
        bisects_quadrilateral(&line(&Q, 0, 1, 0), &q),
        Some(Midpoint::Finite(pt(&Q, 2, 0)))
    );

    let a = AsymptoticPencil::new(standard_pencil::<Rational>(&Q));
    let back = quadrilateral_of(&a).unwrap();
    assert!(a.same_net(&back.pencil()));
}

#[test]
fn bisection_of_sets_and_pairs_through_lines() {
    let fs: Vec<Quadratic<Rational>> = vec![quad(&Q, "x*y"), quad(&Q, "(x+y-1)*(x-y-3)")];
    assert_eq!(
        bisects_set(&line(&Q, 1, 0, 0), &fs),
        Some(Midpoint::Finite(pt(&Q, 0, -1)))
    );
    assert_eq!(bisects_set(&line(&Q, 0, 1, -1), &fs), None);
    let circle = vec![quad::<Rational>(&Q, "x^2+y^2+1")];
    assert_eq!(
        bisects_set(&line(&Q, 0, 1, 0), &circle),
        Some(Midpoint::Undetermined)
    );

    let p = standard_pencil::<Rational>(&Q);
    let m = pair_through_line(&line(&Q, 1, 0, 0), &p).unwrap();
    assert_eq!(m.pair, LinePair::new(line(&Q, 1, 0, 0), line(&Q, 0, 1, 0)));
    assert_eq!(
        m.coords,
        NetCoords::new(el(&Q, 1), el(&Q, 0), el(&Q, 0)).unwrap()
    );
    assert!(pair_through_line(&line(&Q, 0, 1, -1), &p).is_none());
}

#[test]
fn arrangements() {
    let good = [
        LinePair::new(line::<Rational>(&Q, 1, 0, 0), line(&Q, 0, 1, 0)),
        LinePair::new(line(&Q, 1, 1, -1), line(&Q, 1, -1, -3)),
    ];
    assert!(is_bisector_arrangement(&good));
    let bad = [
        LinePair::new(line::<Rational>(&Q, 1, 0, 0), line(&Q, 0, 1, 0)),
        LinePair::new(line(&Q, 1, 1, -1), line(&Q, 1, 2, -5)),
        LinePair::new(line(&Q, 1, 0, -1), line(&Q, 0, 1, -5)),
    ];
    assert!(!is_bisector_arrangement(&bad));
}

#[test]
fn bisector_fields_and_involutions() {
    let field5 = bisector_field_of(&pencil::<Fp>(&f5(), "x*y", "x^2-y^2")).unwrap();
    assert!(field_contains(
        &field5,
        &LinePair::new(line(&f5(), 1, 0, 0), line(&f5(), 0, 1, 0))
    ));

    let field = bisector_field_of(&standard_pencil::<Rational>(&Q)).unwrap();
    assert!(!field_contains(
        &field,
        &LinePair::new(line(&Q, 1, 0, 0), line(&Q, 0, 1, -1))
    ));

    let f7 = FieldSpec::Prime(7);
    let p = standard_pencil::<Fp>(&f7);
    assert!(desargues_involution(&p, &line(&f7, 0, 1, -2)).is_ok());
    assert!(matches!(
        desargues_involution(&p, &line(&f7, 0, 1, -1)),
        Err(Error::ThroughBasepoint)
    ));
}
