//! Bisection of sets of conics, the line-membership criterion for asymptotic
//! pencils, bisector arrangements and fields, and the Desargues involution.

use std::collections::BTreeSet;
use std::fmt::{self, Display};

use serde_json::{json, Value};

use crate::binary::Param;
use crate::conic::{mid, restrict, LinePair, MidResult, Quadratic};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::{map_line_to_y0, pullback, Line, Midpoint};
use crate::linalg;
use crate::pencil::{triviality, AsymptoticPencil, NetCoords, Pencil};
use crate::quad::is_translation_pair;

/// Common midpoint of the crossings of `line` with each quadratic it
/// crosses; `Undetermined` when it crosses none.
pub fn bisects_set<F: Field>(line: &Line<F>, fs: &[Quadratic<F>]) -> Option<Midpoint<F>> {
    let mut common: Option<Midpoint<F>> = None;
    for f in fs {
        if let MidResult::Crosses(m) = mid(f, line) {
            match &common {
                None => common = Some(m),
                Some(c) if *c == m => {}
                Some(_) => return None,
            }
        }
    }
    Some(common.unwrap_or(Midpoint::Undetermined))
}

/// A member of the net having `line` as a component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineMember<F> {
    pub coords: NetCoords<F>,
    pub pair: LinePair<F>,
    /// Every `[α:β]` qualifies; the first in iteration order was chosen.
    pub ambiguous: bool,
}

/// The member of the asymptotic pencil containing `line`, found by solving
/// for the coefficients after moving `line` to `Y = 0`.
pub fn pair_through_line<F: Field>(line: &Line<F>, p: &Pencil<F>) -> Option<LineMember<F>> {
    let m = map_line_to_y0(line);
    let back = m.inverse();
    let g1 = pullback(&back, p.f1());
    let g2 = pullback(&back, p.f2());
    let (c1, c2) = (g1.coeffs(), g2.coeffs());
    let [a1, b1, cc1, d1, e1, k1] = c1.clone();
    let [a2, b2, cc2, d2, e2, k2] = c2.clone();
    if !(a1.clone() * d2.clone() - a2.clone() * d1.clone()).is_zero() {
        return None;
    }
    let zero = a1.zero_like();
    let one = a1.one_like();
    let (alpha, beta, ambiguous) = if !a1.is_zero() || !a2.is_zero() {
        (a2, -a1, false)
    } else if !d1.is_zero() || !d2.is_zero() {
        (d2, -d1, false)
    } else {
        (one, zero, true)
    };
    let t = alpha.clone() * b1 + beta.clone() * b2;
    let u = -(alpha.clone() * cc1 + beta.clone() * cc2);
    let v = alpha.clone() * e1 + beta.clone() * e2;
    let lambda = alpha.clone() * k1 + beta.clone() * k2;
    // α·g₁ + β·g₂ − λ = Y·(t·X − u·Y + v)
    let partner = Line::new(t, -u, v).expect("independent generators give (t, u) ≠ 0");
    let partner = m.pull_line(&partner);
    let coords = NetCoords::new(alpha, beta, -lambda).expect("(α, β) ≠ 0");
    Some(LineMember {
        coords,
        pair: LinePair::new(line.clone(), partner),
        ambiguous,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArrangementTriviality {
    NonTrivial,
    AllTranslates,
    AllConcurrent,
    AllParallel,
}

impl ArrangementTriviality {
    pub fn as_str(&self) -> &'static str {
        match self {
            ArrangementTriviality::NonTrivial => "nontrivial",
            ArrangementTriviality::AllTranslates => "all-translates",
            ArrangementTriviality::AllConcurrent => "all-concurrent",
            ArrangementTriviality::AllParallel => "all-parallel",
        }
    }
}

fn all_lines<F: Field>(pairs: &[LinePair<F>]) -> Vec<&Line<F>> {
    let set: BTreeSet<&Line<F>> = pairs.iter().flat_map(|p| p.lines()).collect();
    set.into_iter().collect()
}

pub fn classify_trivial_arrangement<F: Field>(pairs: &[LinePair<F>]) -> ArrangementTriviality {
    let translates = pairs
        .iter()
        .enumerate()
        .all(|(i, p)| pairs[i + 1..].iter().all(|q| is_translation_pair(p, q)));
    if translates {
        return ArrangementTriviality::AllTranslates;
    }
    let lines = all_lines(pairs);
    let first = lines[0];
    if lines.iter().all(|l| l.is_parallel(first)) {
        return ArrangementTriviality::AllParallel;
    }
    let concurrent = lines
        .iter()
        .find_map(|l| match crate::geometry::intersect(first, l) {
            crate::geometry::Intersection::Point(p) if p.is_finite() => Some(p),
            _ => None,
        });
    if let Some(p) = concurrent {
        if lines.iter().all(|l| l.contains(&p)) {
            return ArrangementTriviality::AllConcurrent;
        }
    }
    ArrangementTriviality::NonTrivial
}

/// Midpoint of each line of an arrangement against all pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementReport<F> {
    pub lines: Vec<(Line<F>, Option<Midpoint<F>>)>,
    pub triviality: ArrangementTriviality,
}

impl<F: Field> ArrangementReport<F> {
    pub fn is_arrangement(&self) -> bool {
        self.lines.iter().all(|(_, m)| m.is_some())
    }

    pub fn to_json(&self) -> Value {
        let lines: Vec<Value> = self
            .lines
            .iter()
            .map(|(l, m)| json!({"line": l.to_string(), "midpoint": midpoint_json(m.as_ref())}))
            .collect();
        json!({
            "lines": lines,
            "arrangement": self.is_arrangement(),
            "triviality": self.triviality.as_str(),
        })
    }
}

/// `{"finite": [x, y]}`, `"infinite"`, `"undetermined"`, or `null` when no
/// common midpoint exists.
pub fn midpoint_json<F: Field>(m: Option<&Midpoint<F>>) -> Value {
    match m {
        Some(Midpoint::Finite(p)) => json!({"finite": [p.x.to_string(), p.y.to_string()]}),
        Some(Midpoint::Infinite) => json!("infinite"),
        Some(Midpoint::Undetermined) => json!("undetermined"),
        None => Value::Null,
    }
}

pub fn arrangement_report<F: Field>(pairs: &[LinePair<F>]) -> ArrangementReport<F> {
    let products: Vec<Quadratic<F>> = pairs.iter().map(LinePair::product).collect();
    let lines = all_lines(pairs)
        .into_iter()
        .map(|l| (l.clone(), bisects_set(l, &products)))
        .collect();
    ArrangementReport {
        lines,
        triviality: classify_trivial_arrangement(pairs),
    }
}

pub fn is_bisector_arrangement<F: Field>(pairs: &[LinePair<F>]) -> bool {
    arrangement_report(pairs).is_arrangement()
}

/// A nontrivial asymptotic pencil viewed as a set of line pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisectorField<F> {
    pencil: AsymptoticPencil<F>,
}

impl<F: Field> BisectorField<F> {
    pub fn new(pencil: Pencil<F>) -> Result<Self> {
        let a = AsymptoticPencil::new(pencil);
        if triviality(&a)?.is_trivial() {
            return Err(Error::Trivial);
        }
        Ok(BisectorField { pencil: a })
    }

    pub fn asymptotic_pencil(&self) -> &AsymptoticPencil<F> {
        &self.pencil
    }

    pub fn contains(&self, pair: &LinePair<F>) -> bool {
        self.pencil.contains(pair)
    }
}

pub fn bisector_field_of<F: Field>(p: &Pencil<F>) -> Result<BisectorField<F>> {
    BisectorField::new(p.clone())
}

pub fn field_contains<F: Field>(field: &BisectorField<F>, pair: &LinePair<F>) -> bool {
    field.contains(pair)
}

/// `t ↦ (p·t + q)/(r·t − p)` on the projective line of parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Involution<F> {
    pub p: F,
    pub q: F,
    pub r: F,
}

impl<F: Field> Involution<F> {
    pub fn new(p: F, q: F, r: F) -> Result<Self> {
        if (p.square() + q.clone() * r.clone()).is_zero() {
            return Err(Error::Domain(
                "degenerate involution: p² + qr = 0".to_string(),
            ));
        }
        Ok(Involution { p, q, r })
    }

    pub fn apply(&self, t: &Param<F>) -> Param<F> {
        let (x, y) = t.homogeneous(&self.p);
        Param::from_homogeneous(
            self.p.clone() * x.clone() + self.q.clone() * y.clone(),
            self.r.clone() * x - self.p.clone() * y,
        )
    }

    /// Whether the roots of `A·t² + B·t + C` are swapped.
    pub fn is_apolar(&self, form: &[F; 3]) -> bool {
        let [a, b, c] = form;
        (self.r.clone() * c.clone() + self.p.clone() * b.clone() - self.q.clone() * a.clone())
            .is_zero()
    }

    /// Same map up to a common scalar.
    pub fn equivalent(&self, other: &Involution<F>) -> bool {
        let a = [&self.p, &self.q, &self.r];
        let b = [&other.p, &other.q, &other.r];
        (0..3).all(|i| {
            (0..3).all(|j| (a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone()).is_zero())
        })
    }
}

impl<F: Field> Display for Involution<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t -> ({}*t + {})/({}*t - {})",
            self.p, self.q, self.r, self.p
        )
    }
}

/// Resultant of two binary quadratic forms.
pub fn resultant<F: Field>(f: &[F; 3], g: &[F; 3]) -> F {
    let [a1, b1, c1] = f.clone();
    let [a2, b2, c2] = g.clone();
    (a1.clone() * c2.clone() - a2.clone() * c1.clone()).square()
        - (a1 * b2.clone() - a2 * b1.clone()) * (b1 * c2 - b2 * c1)
}

/// The involution swapping the roots of both forms.
pub fn fit_involution<F: Field>(r1: &[F; 3], r2: &[F; 3]) -> Result<Involution<F>> {
    if resultant(r1, r2).is_zero() {
        return Err(Error::ThroughBasepoint);
    }
    // r·C + p·B − q·A = 0 for unknowns (p, q, r)
    let row = |[a, b, c]: &[F; 3]| vec![b.clone(), -a.clone(), c.clone()];
    let ker = linalg::kernel(&[row(r1), row(r2)]);
    let [v] = ker.as_slice() else {
        return Err(Error::InsufficientData(
            "restrictions do not determine an involution",
        ));
    };
    Involution::new(v[0].clone(), v[1].clone(), v[2].clone())
}

/// The involution on `line` pairing the crossings of every member
/// `α·f₁ + β·f₂`, in the parameter of [`Line::point_at`].
pub fn desargues_involution<F: Field>(p: &Pencil<F>, line: &Line<F>) -> Result<Involution<F>> {
    fit_involution(&restrict(p.f1(), line), &restrict(p.f2(), line))
}
