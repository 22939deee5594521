//! Points, lines, affine maps and the midpoint calculus on projectively
//! closed lines.

use std::cmp::Ordering;
use std::fmt::{self, Display};

use crate::conic::{mul_linear, parse_polynomial, Quadratic};
use crate::error::{Error, Result};
use crate::field::{common_spec, Field, FieldSpec};

/// An affine point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<F> {
    pub x: F,
    pub y: F,
}

impl<F: Field> Point<F> {
    pub fn new(x: F, y: F) -> Self {
        Point { x, y }
    }

    pub fn to_projective(&self) -> ProjectivePoint<F> {
        ProjectivePoint::affine(self.x.clone(), self.y.clone())
    }
}

impl<F: Field> Display for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Point of the projective plane, kept with its last nonzero coordinate 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint<F> {
    x: F,
    y: F,
    z: F,
}

impl<F: Field> ProjectivePoint<F> {
    pub fn new(x: F, y: F, z: F) -> Result<Self> {
        common_spec([&x, &y, &z])?;
        let scale = if !z.is_zero() {
            z.clone()
        } else if !y.is_zero() {
            y.clone()
        } else if !x.is_zero() {
            x.clone()
        } else {
            return Err(Error::Domain(
                "[0:0:0] is not a projective point".to_string(),
            ));
        };
        Ok(ProjectivePoint {
            x: x / scale.clone(),
            y: y / scale.clone(),
            z: z / scale,
        })
    }

    pub fn affine(x: F, y: F) -> Self {
        let one = x.one_like();
        ProjectivePoint { x, y, z: one }
    }

    /// The point at infinity in direction `(dx, dy)`.
    pub fn at_infinity(dx: F, dy: F) -> Result<Self> {
        let zero = dx.zero_like();
        Self::new(dx, dy, zero)
    }

    pub fn coords(&self) -> (&F, &F, &F) {
        (&self.x, &self.y, &self.z)
    }

    pub fn is_finite(&self) -> bool {
        !self.z.is_zero()
    }

    pub fn to_affine(&self) -> Option<Point<F>> {
        self.is_finite()
            .then(|| Point::new(self.x.clone(), self.y.clone()))
    }
}

impl<F: Field> Display for ProjectivePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_affine() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "[{}:{}:{}]", self.x, self.y, self.z),
        }
    }
}

/// The affine line `u·X + v·Y + w = 0`, scaled so that the first nonzero of
/// `(u, v)` is 1. The line at infinity has no representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line<F> {
    u: F,
    v: F,
    w: F,
}

impl<F: Field> Line<F> {
    pub fn new(u: F, v: F, w: F) -> Result<Self> {
        common_spec([&u, &v, &w])?;
        let lead = if !u.is_zero() {
            u.clone()
        } else if !v.is_zero() {
            v.clone()
        } else {
            return Err(Error::NotALine);
        };
        Ok(Line {
            u: u / lead.clone(),
            v: v / lead.clone(),
            w: w / lead,
        })
    }

    /// Accepts `"u,v,w"` for `u·x + v·y + w = 0` or an equation such as
    /// `"x+2*y=3"`; without `=` the expression is set to zero.
    pub fn parse(spec: &FieldSpec, text: &str) -> Result<Self> {
        if text.contains(',') {
            let parts: Vec<&str> = text.split(',').map(str::trim).collect();
            let [u, v, w] = parts.as_slice() else {
                return Err(Error::Parse(format!(
                    "expected 3 comma-separated line coefficients, got {}",
                    parts.len()
                )));
            };
            return Line::new(F::parse(spec, u)?, F::parse(spec, v)?, F::parse(spec, w)?);
        }
        let (lhs, rhs) = text.split_once('=').unwrap_or((text, "0"));
        let l = parse_polynomial::<F>(spec, lhs)?;
        let r = parse_polynomial::<F>(spec, rhs)?;
        let d: Vec<F> = l.into_iter().zip(r).map(|(a, b)| a - b).collect();
        if d[..3].iter().any(|x| !x.is_zero()) {
            return Err(Error::NotALine);
        }
        Line::new(d[3].clone(), d[4].clone(), d[5].clone())
    }

    /// `X = c`.
    pub fn vertical(c: F) -> Self {
        let (one, zero) = (c.one_like(), c.zero_like());
        Line {
            u: one,
            v: zero,
            w: -c,
        }
    }

    /// `Y = c`.
    pub fn horizontal(c: F) -> Self {
        let (one, zero) = (c.one_like(), c.zero_like());
        Line {
            u: zero,
            v: one,
            w: -c,
        }
    }

    /// Line through two distinct projective points, unless it is the line at
    /// infinity.
    pub fn through(p: &ProjectivePoint<F>, q: &ProjectivePoint<F>) -> Result<Self> {
        let (u, v, w) = cross((&p.x, &p.y, &p.z), (&q.x, &q.y, &q.z));
        if u.is_zero() && v.is_zero() {
            return Err(if w.is_zero() {
                Error::Domain("coincident points do not determine a line".to_string())
            } else {
                Error::Domain("both points lie at infinity".to_string())
            });
        }
        Line::new(u, v, w)
    }

    pub fn through_points(p: &Point<F>, q: &Point<F>) -> Result<Self> {
        Line::through(&p.to_projective(), &q.to_projective())
    }

    pub fn coeffs(&self) -> (&F, &F, &F) {
        (&self.u, &self.v, &self.w)
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        self.u.clone() * x.clone() + self.v.clone() * y.clone() + self.w.clone()
    }

    pub fn contains(&self, p: &ProjectivePoint<F>) -> bool {
        (self.u.clone() * p.x.clone() + self.v.clone() * p.y.clone() + self.w.clone() * p.z.clone())
            .is_zero()
    }

    pub fn contains_point(&self, p: &Point<F>) -> bool {
        self.eval(&p.x, &p.y).is_zero()
    }

    /// `[-v : u : 0]`.
    pub fn point_at_infinity(&self) -> ProjectivePoint<F> {
        ProjectivePoint::at_infinity(-self.v.clone(), self.u.clone())
            .expect("a line has a nonzero direction")
    }

    pub fn is_parallel(&self, other: &Line<F>) -> bool {
        self.u == other.u && self.v == other.v
    }

    /// Base point of the standard parameterization `t ↦ base + t·direction`.
    pub fn base_point(&self) -> Point<F> {
        let zero = self.u.zero_like();
        if !self.u.is_zero() {
            Point::new(-self.w.clone(), zero)
        } else {
            Point::new(zero, -self.w.clone())
        }
    }

    pub fn direction(&self) -> (F, F) {
        (-self.v.clone(), self.u.clone())
    }

    pub fn point_at(&self, t: &F) -> Point<F> {
        let b = self.base_point();
        let (dx, dy) = self.direction();
        Point::new(b.x + t.clone() * dx, b.y + t.clone() * dy)
    }

    /// Parameter of an affine point on the line.
    pub fn parameter_of(&self, p: &Point<F>) -> Result<F> {
        if !self.contains_point(p) {
            return Err(Error::NotOnLine);
        }
        let b = self.base_point();
        // direction is (-v, u); use whichever component is nonzero
        Ok(if !self.u.is_zero() {
            (p.y.clone() - b.y) / self.u.clone()
        } else {
            (b.x - p.x.clone()) / self.v.clone()
        })
    }
}

impl<F> Line<F> {
    fn sort_key(&self) -> (&F, &F, &F) {
        (&self.v, &self.u, &self.w)
    }
}

impl<F: Ord> PartialOrd for Line<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Ord> Ord for Line<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

pub(crate) fn fmt_term<F: Field>(out: &mut String, coef: &F, var: &str) {
    if coef.is_zero() {
        return;
    }
    let s = coef.to_string();
    let (neg, mag) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    };
    if neg {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    if var.is_empty() {
        out.push_str(&mag);
    } else if mag == "1" {
        out.push_str(var);
    } else {
        out.push_str(&mag);
        out.push('*');
        out.push_str(var);
    }
}

impl<F: Field> Display for Line<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lhs = String::new();
        fmt_term(&mut lhs, &self.u, "x");
        fmt_term(&mut lhs, &self.v, "y");
        write!(f, "{}={}", lhs, -self.w.clone())
    }
}

fn cross<F: Field>(a: (&F, &F, &F), b: (&F, &F, &F)) -> (F, F, F) {
    (
        a.1.clone() * b.2.clone() - a.2.clone() * b.1.clone(),
        a.2.clone() * b.0.clone() - a.0.clone() * b.2.clone(),
        a.0.clone() * b.1.clone() - a.1.clone() * b.0.clone(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intersection<F> {
    Point(ProjectivePoint<F>),
    Coincident,
}

/// Meeting point of two lines; parallel lines meet at infinity.
pub fn intersect<F: Field>(l1: &Line<F>, l2: &Line<F>) -> Intersection<F> {
    let (x, y, z) = cross((&l1.u, &l1.v, &l1.w), (&l2.u, &l2.v, &l2.w));
    match ProjectivePoint::new(x, y, z) {
        Ok(p) => Intersection::Point(p),
        Err(_) => Intersection::Coincident,
    }
}

/// Midpoint of two points on the projective closure of a line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Midpoint<F> {
    Finite(Point<F>),
    Infinite,
    Undetermined,
}

impl<F: Field> Display for Midpoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Midpoint::Finite(p) => write!(f, "{p}"),
            Midpoint::Infinite => f.write_str("infinite"),
            Midpoint::Undetermined => f.write_str("undetermined"),
        }
    }
}

pub fn midpoint_on_line<F: Field>(
    p: &ProjectivePoint<F>,
    q: &ProjectivePoint<F>,
    line: &Line<F>,
) -> Result<Midpoint<F>> {
    if !line.contains(p) || !line.contains(q) {
        return Err(Error::NotOnLine);
    }
    Ok(match (p.to_affine(), q.to_affine()) {
        (Some(a), Some(b)) => {
            Midpoint::Finite(Point::new((a.x + b.x).halve(), (a.y + b.y).halve()))
        }
        (None, None) => Midpoint::Undetermined,
        _ => Midpoint::Infinite,
    })
}

/// `2m - p`.
pub fn reflect_through<F: Field>(m: &Point<F>, p: &Point<F>) -> Point<F> {
    let two = m.x.int_like(2);
    Point::new(
        two.clone() * m.x.clone() - p.x.clone(),
        two * m.y.clone() - p.y.clone(),
    )
}

/// Parallel line halfway between two parallel lines.
pub fn midline<F: Field>(l1: &Line<F>, l2: &Line<F>) -> Result<Line<F>> {
    if !l1.is_parallel(l2) {
        return Err(Error::NotParallel);
    }
    Ok(Line {
        u: l1.u.clone(),
        v: l1.v.clone(),
        w: (l1.w.clone() + l2.w.clone()).halve(),
    })
}

/// `p ↦ M·p + t` with `M` invertible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineMap<F> {
    m: [[F; 2]; 2],
    t: [F; 2],
}

impl<F: Field> AffineMap<F> {
    pub fn new(m: [[F; 2]; 2], t: [F; 2]) -> Result<Self> {
        common_spec(m.iter().flatten().chain(t.iter()))?;
        let map = AffineMap { m, t };
        if map.det().is_zero() {
            return Err(Error::SingularMap);
        }
        Ok(map)
    }

    pub fn identity(like: &F) -> Self {
        let (o, z) = (like.one_like(), like.zero_like());
        AffineMap {
            m: [[o.clone(), z.clone()], [z.clone(), o]],
            t: [z.clone(), z],
        }
    }

    pub fn translation(dx: F, dy: F) -> Self {
        let (o, z) = (dx.one_like(), dx.zero_like());
        AffineMap {
            m: [[o.clone(), z.clone()], [z, o]],
            t: [dx, dy],
        }
    }

    pub fn matrix(&self) -> &[[F; 2]; 2] {
        &self.m
    }

    pub fn offset(&self) -> &[F; 2] {
        &self.t
    }

    pub fn det(&self) -> F {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[0][1].clone() * self.m[1][0].clone()
    }

    pub fn apply(&self, p: &Point<F>) -> Point<F> {
        let [[a, b], [c, d]] = &self.m;
        Point::new(
            a.clone() * p.x.clone() + b.clone() * p.y.clone() + self.t[0].clone(),
            c.clone() * p.x.clone() + d.clone() * p.y.clone() + self.t[1].clone(),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap<F>) -> AffineMap<F> {
        let a = &self.m;
        let b = &other.m;
        let mul = |i: usize, j: usize| {
            a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone()
        };
        let m = [[mul(0, 0), mul(0, 1)], [mul(1, 0), mul(1, 1)]];
        let shifted = self.apply(&Point::new(other.t[0].clone(), other.t[1].clone()));
        AffineMap {
            m,
            t: [shifted.x, shifted.y],
        }
    }

    pub fn inverse(&self) -> AffineMap<F> {
        let det = self.det();
        let [[a, b], [c, d]] = &self.m;
        let m = [
            [d.clone() / det.clone(), -(b.clone()) / det.clone()],
            [-(c.clone()) / det.clone(), a.clone() / det],
        ];
        let tx = -(m[0][0].clone() * self.t[0].clone() + m[0][1].clone() * self.t[1].clone());
        let ty = -(m[1][0].clone() * self.t[0].clone() + m[1][1].clone() * self.t[1].clone());
        AffineMap { m, t: [tx, ty] }
    }

    /// The line `ℓ ∘ self`, i.e. the preimage of `ℓ`.
    pub fn pull_line(&self, line: &Line<F>) -> Line<F> {
        let [[a, b], [c, d]] = &self.m;
        let (u, v, w) = line.coeffs();
        Line::new(
            u.clone() * a.clone() + v.clone() * c.clone(),
            u.clone() * b.clone() + v.clone() * d.clone(),
            u.clone() * self.t[0].clone() + v.clone() * self.t[1].clone() + w.clone(),
        )
        .expect("invertible maps pull lines back to lines")
    }

    /// Image of a line under the map.
    pub fn push_line(&self, line: &Line<F>) -> Line<F> {
        self.inverse().pull_line(line)
    }
}

/// `f ∘ map`.
pub fn pullback<F: Field>(map: &AffineMap<F>, f: &Quadratic<F>) -> Quadratic<F> {
    let [[p1, q1], [p2, q2]] = map.m.clone();
    let [r1, r2] = map.t.clone();
    let x = [p1, q1, r1];
    let y = [p2, q2, r2];
    let [a, b, c, d, e, g] = f.coeffs().clone();
    let xx = mul_linear(&x, &x);
    let xy = mul_linear(&x, &y);
    let yy = mul_linear(&y, &y);
    let zero = a.zero_like();
    let mut out: [F; 6] = std::array::from_fn(|_| zero.clone());
    for i in 0..6 {
        out[i] = a.clone() * xx[i].clone() + b.clone() * xy[i].clone() + c.clone() * yy[i].clone();
    }
    for (k, coef) in [(3usize, 0usize), (4, 1)] {
        // X and Y contribute to the linear and constant slots
        out[k] = out[k].clone() + d.clone() * x[coef].clone() + e.clone() * y[coef].clone();
    }
    out[5] = out[5].clone() + d * x[2].clone() + e * y[2].clone() + g;
    Quadratic::from_coeffs(out).expect("invertible maps preserve degree 2")
}

/// An invertible affine map carrying `line` onto `Y = 0`.
pub fn map_line_to_y0<F: Field>(line: &Line<F>) -> AffineMap<F> {
    let (u, v, w) = (line.u.clone(), line.v.clone(), line.w.clone());
    let (o, z) = (u.one_like(), u.zero_like());
    let m = if !u.is_zero() {
        // (x, y) ↦ (y, ux + vy + w)
        [[z.clone(), o], [u, v]]
    } else {
        [[o, z.clone()], [u, v]]
    };
    AffineMap::new(m, [z, w]).expect("normalizing map is invertible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldSpec, Fp};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn line(u: i64, v: i64, w: i64) -> Line<Q> {
        Line::new(q(u), q(v), q(w)).unwrap()
    }

    fn quad(s: &str) -> Quadratic<Q> {
        Quadratic::parse(&FieldSpec::Rationals, s).unwrap()
    }

    #[test]
    fn intersections() {
        let x0 = line(1, 0, 0);
        let y0 = line(0, 1, 0);
        let x1 = line(1, 0, -1);
        assert_eq!(
            intersect(&x0, &y0),
            Intersection::Point(ProjectivePoint::affine(q(0), q(0)))
        );
        assert_eq!(
            intersect(&x0, &x1),
            Intersection::Point(ProjectivePoint::new(q(0), q(1), q(0)).unwrap())
        );
        assert_eq!(intersect(&x0, &x0), Intersection::Coincident);
    }

    #[test]
    fn line_at_infinity_is_unrepresentable() {
        assert_eq!(Line::new(q(0), q(0), q(1)), Err(Error::NotALine));
        let a = ProjectivePoint::new(q(1), q(0), q(0)).unwrap();
        let b = ProjectivePoint::new(q(0), q(1), q(0)).unwrap();
        assert!(Line::through(&a, &b).is_err());
    }

    #[test]
    fn midpoints() {
        let y0 = line(0, 1, 0);
        let m = midpoint_on_line(
            &ProjectivePoint::affine(q(1), q(0)),
            &ProjectivePoint::affine(q(3), q(0)),
            &y0,
        )
        .unwrap();
        assert_eq!(m, Midpoint::Finite(Point::new(q(2), q(0))));

        let x0 = line(1, 0, 0);
        let inf = x0.point_at_infinity();
        assert_eq!(inf, ProjectivePoint::new(q(0), q(1), q(0)).unwrap());
        let m = midpoint_on_line(&ProjectivePoint::affine(q(0), q(1)), &inf, &x0).unwrap();
        assert_eq!(m, Midpoint::Infinite);
        assert_eq!(
            midpoint_on_line(&inf, &inf, &x0).unwrap(),
            Midpoint::Undetermined
        );
        assert_eq!(
            midpoint_on_line(&ProjectivePoint::affine(q(1), q(1)), &inf, &x0),
            Err(Error::NotOnLine)
        );

        let f = |v| Fp::new(v, 5);
        let diag = Line::new(f(1), f(4), f(0)).unwrap();
        let m = midpoint_on_line(
            &ProjectivePoint::affine(f(1), f(1)),
            &ProjectivePoint::affine(f(2), f(2)),
            &diag,
        )
        .unwrap();
        assert_eq!(m, Midpoint::Finite(Point::new(f(4), f(4))));
    }

    #[test]
    fn reflections() {
        let o = Point::new(q(0), q(0));
        assert_eq!(
            reflect_through(&o, &Point::new(q(1), q(2))),
            Point::new(q(-1), q(-2))
        );
        let p = Point::new(q(5), q(-7));
        assert_eq!(reflect_through(&p, &p), p);
        assert_eq!(
            reflect_through(&Point::new(q(1), q(0)), &Point::new(q(3), q(4))),
            Point::new(q(-1), q(-4))
        );
    }

    #[test]
    fn pullbacks() {
        let shift = AffineMap::translation(q(0), q(1));
        assert_eq!(pullback(&shift, &quad("x*y")), quad("x*y + x"));
        let id = AffineMap::identity(&q(0));
        let f = quad("3x^2 - x*y + 2y - 7/2");
        assert_eq!(pullback(&id, &f), f);
        let swap = AffineMap::new([[q(0), q(1)], [q(1), q(0)]], [q(0), q(0)]).unwrap();
        assert_eq!(pullback(&swap, &quad("x^2 + y")), quad("y^2 + x"));
    }

    #[test]
    fn pullback_composition_law() {
        let m1 = AffineMap::new([[q(1), q(2)], [q(0), q(3)]], [q(1), q(-1)]).unwrap();
        let m2 = AffineMap::new([[q(0), q(1)], [q(-1), q(4)]], [q(2), q(5)]).unwrap();
        let f = quad("x^2 + 3x*y - y^2 + x - 2");
        assert_eq!(
            pullback(&m1.compose(&m2), &f),
            pullback(&m2, &pullback(&m1, &f))
        );
        let id = AffineMap::identity(&q(0));
        assert_eq!(m1.compose(&m1.inverse()), id);
    }

    #[test]
    fn lines_to_y0() {
        let y0 = line(0, 1, 0);
        for l in [line(0, 1, 0), line(1, 0, 0), line(1, 1, -1), line(2, -3, 5)] {
            let m = map_line_to_y0(&l);
            assert_eq!(m.push_line(&l), y0);
            // two sample points of l land on Y = 0
            for t in [q(0), q(7)] {
                let p = m.apply(&l.point_at(&t));
                assert!(p.y == q(0));
            }
        }
        assert_eq!(map_line_to_y0(&y0), AffineMap::identity(&q(0)));
    }

    #[test]
    fn midlines() {
        assert_eq!(
            midline(&line(1, 0, -1), &line(1, 0, -3)).unwrap(),
            line(1, 0, -2)
        );
        let f = |v| Fp::new(v, 5);
        let m = midline(
            &Line::new(f(1), f(0), f(0)).unwrap(),
            &Line::new(f(1), f(0), f(4)).unwrap(),
        )
        .unwrap();
        // X = 3 in GF(5)
        assert_eq!(m, Line::vertical(f(3)));
        let l = line(1, 1, 4);
        assert_eq!(midline(&l, &l).unwrap(), l);
        assert_eq!(
            midline(&line(1, 0, 0), &line(0, 1, 0)),
            Err(Error::NotParallel)
        );
    }

    #[test]
    fn midline_reflection_property() {
        let l1 = line(1, 2, -1);
        let l2 = line(1, 2, 7);
        let m = midline(&l1, &l2).unwrap();
        assert_eq!(m, midline(&l2, &l1).unwrap());
        for t in [q(-2), q(0), q(3)] {
            let c = m.point_at(&t);
            for s in [q(1), q(4)] {
                let p = l1.point_at(&s);
                assert!(l2.contains_point(&reflect_through(&c, &p)));
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(line(1, 0, 0).to_string(), "x=0");
        assert_eq!(line(0, 1, 0).to_string(), "y=0");
        assert_eq!(line(1, -1, -3).to_string(), "x-y=3");
        assert_eq!(line(2, 1, 0).to_string(), "x+1/2*y=0");
    }
}
