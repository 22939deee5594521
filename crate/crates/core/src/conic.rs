//! Quadratics in two variables: classification, factorization over the base
//! field, degenerations and the line-conic midpoint.

use std::fmt::{self, Display};

use crate::binary::{form_roots, Param};
use crate::error::{Error, Result};
use crate::field::{common_spec, Field, FieldSpec};
use crate::geometry::{fmt_term, midline, Line, Midpoint, Point, ProjectivePoint};

/// `a·X² + b·XY + c·Y² + d·X + e·Y + g` with `(a, b, c) ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quadratic<F> {
    coeffs: [F; 6],
}

const MONOMIALS: [&str; 6] = ["x^2", "x*y", "y^2", "x", "y", ""];

impl<F: Field> Quadratic<F> {
    pub fn new(a: F, b: F, c: F, d: F, e: F, g: F) -> Result<Self> {
        Self::from_coeffs([a, b, c, d, e, g])
    }

    pub fn from_coeffs(coeffs: [F; 6]) -> Result<Self> {
        common_spec(coeffs.iter())?;
        if coeffs[..3].iter().all(Field::is_zero) {
            return Err(Error::NotQuadratic);
        }
        Ok(Quadratic { coeffs })
    }

    /// Accepts `"a,b,c,d,e,g"` or a polynomial such as `"x*y - 1"`.
    pub fn parse(spec: &FieldSpec, text: &str) -> Result<Self> {
        if text.contains(',') {
            let parts: Vec<&str> = text.split(',').map(str::trim).collect();
            if parts.len() != 6 {
                return Err(Error::Parse(format!(
                    "expected 6 comma-separated coefficients, got {}",
                    parts.len()
                )));
            }
            let mut out = Vec::with_capacity(6);
            for p in parts {
                out.push(F::parse(spec, p)?);
            }
            let coeffs: [F; 6] = out.try_into().expect("six coefficients");
            return Self::from_coeffs(coeffs);
        }
        let poly = PolyParser::new(spec, text).parse()?;
        Self::from_coeffs(poly)
    }

    pub fn coeffs(&self) -> &[F; 6] {
        &self.coeffs
    }

    pub fn a(&self) -> &F {
        &self.coeffs[0]
    }
    pub fn b(&self) -> &F {
        &self.coeffs[1]
    }
    pub fn c(&self) -> &F {
        &self.coeffs[2]
    }
    pub fn d(&self) -> &F {
        &self.coeffs[3]
    }
    pub fn e(&self) -> &F {
        &self.coeffs[4]
    }
    pub fn g(&self) -> &F {
        &self.coeffs[5]
    }

    pub fn field_spec(&self) -> FieldSpec {
        self.coeffs[0].field_spec()
    }

    pub fn zero(&self) -> F {
        self.coeffs[0].zero_like()
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        let [a, b, c, d, e, g] = &self.coeffs;
        a.clone() * x.square()
            + b.clone() * x.clone() * y.clone()
            + c.clone() * y.square()
            + d.clone() * x.clone()
            + e.clone() * y.clone()
            + g.clone()
    }

    /// Homogenized evaluation at `[x:y:z]`.
    pub fn eval_projective(&self, p: &ProjectivePoint<F>) -> F {
        let (x, y, z) = p.coords();
        let [a, b, c, d, e, g] = &self.coeffs;
        a.clone() * x.square()
            + b.clone() * x.clone() * y.clone()
            + c.clone() * y.square()
            + d.clone() * x.clone() * z.clone()
            + e.clone() * y.clone() * z.clone()
            + g.clone() * z.square()
    }

    pub fn add_constant(&self, lambda: &F) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[5] = coeffs[5].clone() + lambda.clone();
        Quadratic { coeffs }
    }

    pub fn scale(&self, k: &F) -> Result<Self> {
        Self::from_coeffs(self.coeffs.clone().map(|x| x * k.clone()))
    }

    /// `α·f + β·g + λ`.
    pub fn combine(alpha: &F, f: &Self, beta: &F, g: &Self, lambda: &F) -> Result<Self> {
        let mut out: [F; 6] = std::array::from_fn(|i| {
            alpha.clone() * f.coeffs[i].clone() + beta.clone() * g.coeffs[i].clone()
        });
        out[5] = out[5].clone() + lambda.clone();
        Self::from_coeffs(out)
    }

    /// Scaled so the first nonzero coefficient is 1.
    pub fn canonical(&self) -> Self {
        let lead = self
            .coeffs
            .iter()
            .find(|x| !x.is_zero())
            .expect("degree-2 part is nonzero")
            .clone();
        Quadratic {
            coeffs: self.coeffs.clone().map(|x| x / lead.clone()),
        }
    }

    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// `det` of the symmetric matrix `[[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, g]]`.
    pub fn det_m(&self) -> F {
        let [a, b, c, d, e, g] = &self.coeffs;
        let four = a.int_like(4);
        a.clone() * c.clone() * g.clone()
            + (b.clone() * d.clone() * e.clone()
                - a.clone() * e.square()
                - c.clone() * d.square()
                - g.clone() * b.square())
                / four
    }

    /// `b² − 4ac`.
    pub fn discriminant(&self) -> F {
        let [a, b, c, ..] = &self.coeffs;
        b.square() - a.int_like(4) * a.clone() * c.clone()
    }

    pub fn homogeneous_part(&self) -> [F; 3] {
        [
            self.coeffs[0].clone(),
            self.coeffs[1].clone(),
            self.coeffs[2].clone(),
        ]
    }
}

impl<F: Field> Display for Quadratic<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (c, m) in self.coeffs.iter().zip(MONOMIALS) {
            fmt_term(&mut s, c, m);
        }
        f.write_str(&s)
    }
}

/// Coefficients of the product of two linear forms `[x, y, 1]`.
pub(crate) fn mul_linear<F: Field>(l1: &[F; 3], l2: &[F; 3]) -> [F; 6] {
    let [p1, q1, r1] = l1.clone();
    let [p2, q2, r2] = l2.clone();
    [
        p1.clone() * p2.clone(),
        p1.clone() * q2.clone() + q1.clone() * p2.clone(),
        q1.clone() * q2.clone(),
        p1 * r2.clone() + r1.clone() * p2,
        q1 * r2.clone() + r1.clone() * q2,
        r1 * r2,
    ]
}

struct PolyParser<'a> {
    spec: &'a FieldSpec,
    chars: Vec<char>,
    pos: usize,
}

type Poly<F> = [F; 6];

fn monomial_index(i: u32, j: u32) -> Option<usize> {
    match (i, j) {
        (2, 0) => Some(0),
        (1, 1) => Some(1),
        (0, 2) => Some(2),
        (1, 0) => Some(3),
        (0, 1) => Some(4),
        (0, 0) => Some(5),
        _ => None,
    }
}

const EXPONENTS: [(u32, u32); 6] = [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)];

impl<'a> PolyParser<'a> {
    fn new(spec: &'a FieldSpec, text: &str) -> Self {
        PolyParser {
            spec,
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn constant<F: Field>(&self, x: F) -> Poly<F> {
        let zero = x.zero_like();
        let mut p: Poly<F> = std::array::from_fn(|_| zero.clone());
        p[5] = x;
        p
    }

    fn parse<F: Field>(mut self) -> Result<Poly<F>> {
        if self.chars.is_empty() {
            return Err(Error::Parse("empty polynomial".to_string()));
        }
        let p = self.expr()?;
        if self.pos != self.chars.len() {
            return Err(self.err("unexpected character"));
        }
        Ok(p)
    }

    fn expr<F: Field>(&mut self) -> Result<Poly<F>> {
        let mut negate = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negate = c == '-';
            self.pos += 1;
        }
        let mut acc = self.term::<F>()?;
        if negate {
            acc = acc.map(|x| -x);
        }
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term::<F>()?;
            for (a, b) in acc.iter_mut().zip(t) {
                *a = if c == '+' {
                    a.clone() + b
                } else {
                    a.clone() - b
                };
            }
        }
        Ok(acc)
    }

    fn term<F: Field>(&mut self) -> Result<Poly<F>> {
        let mut acc = self.factor::<F>()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.mul(&acc, &f)?;
                }
                Some('/') => {
                    self.pos += 1;
                    let f: Poly<F> = self.factor()?;
                    if f[..5].iter().any(|x| !x.is_zero()) {
                        return Err(self.err("division by a non-constant"));
                    }
                    let inv = f[5].inv().ok_or_else(|| self.err("division by zero"))?;
                    acc = acc.map(|x| x * inv.clone());
                }
                Some(c) if c.is_ascii_digit() || matches!(c, 'x' | 'y' | 'X' | 'Y' | '(') => {
                    let f = self.factor()?;
                    acc = self.mul(&acc, &f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor<F: Field>(&mut self) -> Result<Poly<F>> {
        let base = self.atom::<F>()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let exp: u32 = self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| self.err("expected an exponent"))?;
        let one = F::from_int(self.spec, 1)?;
        let mut acc = self.constant(one);
        for _ in 0..exp {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    fn atom<F: Field>(&mut self) -> Result<Poly<F>> {
        let zero = F::from_int(self.spec, 0)?;
        let one = F::from_int(self.spec, 1)?;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(v @ ('x' | 'y' | 'X' | 'Y')) => {
                self.pos += 1;
                let mut p = self.constant(zero);
                p[if v.eq_ignore_ascii_case(&'x') { 3 } else { 4 }] = one;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                Ok(self.constant(F::parse(self.spec, &digits)?))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn mul<F: Field>(&self, p: &Poly<F>, q: &Poly<F>) -> Result<Poly<F>> {
        let mut out = self.constant(p[5].zero_like());
        for (i, a) in p.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in q.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (ea, eb) = (EXPONENTS[i], EXPONENTS[j]);
                let k = monomial_index(ea.0 + eb.0, ea.1 + eb.1)
                    .ok_or_else(|| Error::Parse("degree exceeds 2".to_string()))?;
                out[k] = out[k].clone() + a.clone() * b.clone();
            }
        }
        Ok(out)
    }
}

/// Coefficients of a polynomial of degree at most 2, in quadratic order.
pub(crate) fn parse_polynomial<F: Field>(spec: &FieldSpec, text: &str) -> Result<[F; 6]> {
    PolyParser::new(spec, text).parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConicKind {
    Hyperbola,
    Parabola,
    Ellipse,
}

impl ConicKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConicKind::Hyperbola => "hyperbola",
            ConicKind::Parabola => "parabola",
            ConicKind::Ellipse => "ellipse",
        }
    }
}

impl Display for ConicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConicClass {
    pub kind: ConicKind,
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairKind {
    Crossing,
    Parallel,
    Double,
}

impl PairKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairKind::Crossing => "crossing",
            PairKind::Parallel => "parallel",
            PairKind::Double => "double",
        }
    }
}

/// An unordered pair of lines, possibly equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinePair<F> {
    first: Line<F>,
    second: Line<F>,
}

impl<F: Ord> PartialOrd for LinePair<F> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Ord> Ord for LinePair<F> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.first, &self.second).cmp(&(&other.first, &other.second))
    }
}

impl<F: Field> LinePair<F> {
    pub fn new(l1: Line<F>, l2: Line<F>) -> Self {
        if l1 <= l2 {
            LinePair {
                first: l1,
                second: l2,
            }
        } else {
            LinePair {
                first: l2,
                second: l1,
            }
        }
    }

    /// Accepts `"{x=0, y=1}"` or `"x=0; y=1"`; use `;` between lines given
    /// as coefficient triples.
    pub fn parse(spec: &FieldSpec, text: &str) -> Result<Self> {
        let inner = text.trim();
        let inner = inner
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .unwrap_or(inner);
        let sep = if inner.contains(';') { ';' } else { ',' };
        let parts: Vec<&str> = inner.split(sep).map(str::trim).collect();
        let [a, b] = parts.as_slice() else {
            return Err(Error::Parse(format!(
                "a line pair needs two lines, got {:?}",
                text
            )));
        };
        Ok(LinePair::new(Line::parse(spec, a)?, Line::parse(spec, b)?))
    }

    pub fn lines(&self) -> [&Line<F>; 2] {
        [&self.first, &self.second]
    }

    pub fn first(&self) -> &Line<F> {
        &self.first
    }

    pub fn second(&self) -> &Line<F> {
        &self.second
    }

    pub fn kind(&self) -> PairKind {
        if self.first == self.second {
            PairKind::Double
        } else if self.first.is_parallel(&self.second) {
            PairKind::Parallel
        } else {
            PairKind::Crossing
        }
    }

    /// Intersection point of a crossing pair.
    pub fn center(&self) -> Option<Point<F>> {
        match crate::geometry::intersect(&self.first, &self.second) {
            crate::geometry::Intersection::Point(p) => p.to_affine(),
            crate::geometry::Intersection::Coincident => None,
        }
    }

    /// Midline of a parallel or double pair.
    pub fn midline(&self) -> Option<Line<F>> {
        midline(&self.first, &self.second).ok()
    }

    pub fn contains(&self, line: &Line<F>) -> bool {
        &self.first == line || &self.second == line
    }

    pub fn shared_line(&self, other: &LinePair<F>) -> Option<Line<F>> {
        self.lines()
            .into_iter()
            .find(|l| other.contains(l))
            .cloned()
    }

    /// The other line of the pair, if `line` belongs to it.
    pub fn partner(&self, line: &Line<F>) -> Option<&Line<F>> {
        if &self.first == line {
            Some(&self.second)
        } else if &self.second == line {
            Some(&self.first)
        } else {
            None
        }
    }

    pub fn product(&self) -> Quadratic<F> {
        product_quadratic(self)
    }
}

impl<F: Field> Display for LinePair<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.first, self.second)
    }
}

pub fn product_quadratic<F: Field>(pair: &LinePair<F>) -> Quadratic<F> {
    let lin = |l: &Line<F>| {
        let (u, v, w) = l.coeffs();
        [u.clone(), v.clone(), w.clone()]
    };
    Quadratic::from_coeffs(mul_linear(&lin(&pair.first), &lin(&pair.second)))
        .expect("product of two lines has degree 2")
        .canonical()
}

/// Points at infinity of `f` rational over the base field.
pub fn points_at_infinity<F: Field>(f: &Quadratic<F>) -> Vec<ProjectivePoint<F>> {
    let [a, b, c] = f.homogeneous_part();
    let roots = form_roots(&a, &b, &c);
    roots
        .roots()
        .expect("degree-2 part is nonzero")
        .iter()
        .map(|r| {
            let (x, y) = r.homogeneous(&a);
            ProjectivePoint::at_infinity(x, y).expect("root is a projective point")
        })
        .collect()
}

pub fn classify<F: Field>(f: &Quadratic<F>) -> ConicClass {
    let kind = match points_at_infinity(f).len() {
        2 => ConicKind::Hyperbola,
        1 => ConicKind::Parabola,
        _ => ConicKind::Ellipse,
    };
    let degenerate = match kind {
        ConicKind::Ellipse => f.det_m().is_zero(),
        _ => is_reducible(f).is_some(),
    };
    ConicClass { kind, degenerate }
}

/// Solution of `2a·x + b·y + d = 0`, `b·x + 2c·y + e = 0`; requires
/// `b² − 4ac ≠ 0`.
fn center_unchecked<F: Field>(f: &Quadratic<F>) -> Point<F> {
    let [a, b, c, d, e, _] = f.coeffs().clone();
    let two = a.int_like(2);
    let den = -f.discriminant();
    Point::new(
        (b.clone() * e.clone() - two.clone() * c * d.clone()) / den.clone(),
        (b * d - two * a * e) / den,
    )
}

pub fn center<F: Field>(f: &Quadratic<F>) -> Result<Point<F>> {
    if classify(f).kind != ConicKind::Hyperbola {
        return Err(Error::NotHyperbola);
    }
    Ok(center_unchecked(f))
}

/// `f = κ·(L² + m·L + g₀)` with `L = u·X + v·Y` canonically scaled; exists
/// exactly when `b² − 4ac = 0` and `det M(f) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParabolicForm<F> {
    pub kappa: F,
    pub u: F,
    pub v: F,
    pub m: F,
    pub g0: F,
}

impl<F: Field> ParabolicForm<F> {
    pub fn of(f: &Quadratic<F>) -> Option<Self> {
        if !f.discriminant().is_zero() {
            return None;
        }
        let [a, b, c, d, e, g] = f.coeffs().clone();
        let (kappa, u, v, m) = if !a.is_zero() {
            let v = b / (a.int_like(2) * a.clone());
            let m = d / a.clone();
            if e != a.clone() * m.clone() * v.clone() {
                return None;
            }
            (a.clone(), a.one_like(), v, m)
        } else {
            if !d.is_zero() {
                return None;
            }
            (c.clone(), a.zero_like(), a.one_like(), e / c)
        };
        let g0 = g / kappa.clone();
        Some(ParabolicForm { kappa, u, v, m, g0 })
    }

    /// The line `L = r`.
    pub fn level_line(&self, r: &F) -> Line<F> {
        Line::new(self.u.clone(), self.v.clone(), -r.clone()).expect("(u, v) is nonzero")
    }

    /// `L = −m/2`, shared by every degeneration.
    pub fn midline(&self) -> Line<F> {
        self.level_line(&(-self.m.halve()))
    }

    /// Factorization over the base field, when `m² − 4g₀` is a square.
    pub fn factor(&self) -> Option<LinePair<F>> {
        let disc = self.m.square() - self.m.int_like(4) * self.g0.clone();
        let s = disc.sqrt()?;
        let r1 = (-self.m.clone() + s.clone()).halve();
        let r2 = (-self.m.clone() - s).halve();
        Some(LinePair::new(self.level_line(&r1), self.level_line(&r2)))
    }
}

pub fn is_reducible<F: Field>(f: &Quadratic<F>) -> Option<LinePair<F>> {
    if !f.det_m().is_zero() {
        return None;
    }
    let disc = f.discriminant();
    if disc.is_zero() {
        return ParabolicForm::of(f)
            .expect("det M = 0 with a square homogeneous part")
            .factor();
    }
    disc.sqrt()?;
    let ctr = center_unchecked(f);
    let lines: Vec<Line<F>> = points_at_infinity(f)
        .iter()
        .map(|p| {
            let (x, y, _) = p.coords();
            Line::new(
                y.clone(),
                -x.clone(),
                -(y.clone() * ctr.x.clone() - x.clone() * ctr.y.clone()),
            )
            .expect("direction is nonzero")
        })
        .collect();
    Some(LinePair::new(lines[0].clone(), lines[1].clone()))
}

/// Reducible quadratics `f + λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degenerations<F> {
    /// The asymptotes, the unique degeneration of a hyperbola.
    Hyperbola {
        lambda: F,
        asymptotes: LinePair<F>,
    },
    /// Parallel pairs sharing a midline.
    ParallelFamily(ParabolicForm<F>),
    None,
}

impl<F: Field> ParabolicForm<F> {
    /// The degeneration through `L = r`: the pair `L = r`, `L = −m − r`,
    /// with the constant `λ` such that `f + λ` is its product.
    pub fn member(&self, r: &F) -> (F, LinePair<F>) {
        let s = -self.m.clone() - r.clone();
        let lambda = self.kappa.clone() * (r.clone() * s.clone() - self.g0.clone());
        (
            lambda,
            LinePair::new(self.level_line(r), self.level_line(&s)),
        )
    }
}

pub fn degenerations<F: Field>(f: &Quadratic<F>) -> Degenerations<F> {
    let disc = f.discriminant();
    if disc.is_zero() {
        return match ParabolicForm::of(f) {
            Some(form) => Degenerations::ParallelFamily(form),
            None => Degenerations::None,
        };
    }
    if disc.sqrt().is_none() {
        return Degenerations::None;
    }
    let [a, b, c, ..] = f.coeffs().clone();
    let slope = a * c - b.square() / b.int_like(4);
    let lambda = -f.det_m() / slope;
    let asymptotes = is_reducible(&f.add_constant(&lambda)).expect("det M vanishes at λ");
    Degenerations::Hyperbola { lambda, asymptotes }
}

/// How a line meets a conic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MidResult<F> {
    /// Midpoint of the two crossing points (a tangent point counts twice).
    Crosses(Midpoint<F>),
    /// The line is a component, or meets the conic only at infinity.
    MeetsNoCross,
    NoMeet,
}

/// Restriction of `f` to `line` along its standard parameterization:
/// `(A, B, C)` with `f(P₀ + t·D) = A·t² + B·t + C`.
pub fn restrict<F: Field>(f: &Quadratic<F>, line: &Line<F>) -> [F; 3] {
    let p0 = line.base_point();
    let (dx, dy) = line.direction();
    let [a, b, c, d, e, _] = f.coeffs().clone();
    let two = a.int_like(2);
    let qa =
        a.clone() * dx.square() + b.clone() * dx.clone() * dy.clone() + c.clone() * dy.square();
    let qb = two.clone() * a * p0.x.clone() * dx.clone()
        + b * (p0.x.clone() * dy.clone() + p0.y.clone() * dx.clone())
        + two * c * p0.y.clone() * dy.clone()
        + d * dx
        + e * dy;
    let qc = f.eval(&p0.x, &p0.y);
    [qa, qb, qc]
}

pub fn mid<F: Field>(f: &Quadratic<F>, line: &Line<F>) -> MidResult<F> {
    let [qa, qb, qc] = restrict(f, line);
    if !qa.is_zero() {
        let disc = qb.square() - qa.int_like(4) * qa.clone() * qc;
        if disc.sqrt().is_none() {
            return MidResult::NoMeet;
        }
        let t = -qb / (qa.int_like(2) * qa);
        return MidResult::Crosses(Midpoint::Finite(line.point_at(&t)));
    }
    if !qb.is_zero() {
        MidResult::Crosses(Midpoint::Infinite)
    } else {
        MidResult::MeetsNoCross
    }
}

/// Roots of the restriction of `f` to `line`, as parameters on its closure.
pub fn crossing_params<F: Field>(f: &Quadratic<F>, line: &Line<F>) -> Option<Vec<Param<F>>> {
    let [qa, qb, qc] = restrict(f, line);
    form_roots(&qa, &qb, &qc).roots().map(<[_]>::to_vec)
}
