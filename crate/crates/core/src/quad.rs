//! Complete quadrilaterals: two pairs of opposite sides.

use std::fmt::{self, Display};

use crate::binary::form_roots;
use crate::bisector::bisects_set;
use crate::conic::{LinePair, PairKind, ParabolicForm, Quadratic};
use crate::error::{Error, QuadViolation, Result};
use crate::field::Field;
use crate::geometry::{intersect, Intersection, Line, Midpoint, ProjectivePoint};
use crate::linalg;
use crate::pencil::{
    field_elements, hyperbola_asymptotes, triviality, AsymptoticPencil, NetCoords, Pencil,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quadrilateral<F> {
    sides_a: LinePair<F>,
    sides_b: LinePair<F>,
}

/// Whether some translation carries one pair onto the other.
pub fn is_translation_pair<F: Field>(p: &LinePair<F>, q: &LinePair<F>) -> bool {
    let [a1, a2] = p.lines();
    let [b1, b2] = q.lines();
    [(b1, b2), (b2, b1)].iter().any(|(t1, t2)| {
        if !a1.is_parallel(t1) || !a2.is_parallel(t2) {
            return false;
        }
        // translating uX + vY + w by (s, t) shifts w by −(u·s + v·t)
        let row = |l: &Line<F>| {
            let (u, v, _) = l.coeffs();
            vec![u.clone(), v.clone()]
        };
        let rhs = |l: &Line<F>, m: &Line<F>| l.coeffs().2.clone() - m.coeffs().2.clone();
        linalg::solve(&[row(a1), row(a2)], &[rhs(a1, t1), rhs(a2, t2)]).is_some()
    })
}

/// The common affine point of all lines, if any.
fn common_point<F: Field>(lines: &[&Line<F>]) -> Option<ProjectivePoint<F>> {
    let p = lines.iter().enumerate().find_map(|(i, l)| {
        lines[i + 1..].iter().find_map(|m| match intersect(l, m) {
            Intersection::Point(p) if p.is_finite() => Some(p),
            _ => None,
        })
    })?;
    lines.iter().all(|l| l.contains(&p)).then_some(p)
}

impl<F: Field> Quadrilateral<F> {
    /// Checks the defining clauses, naming the first one violated.
    pub fn new(sides_a: LinePair<F>, sides_b: LinePair<F>) -> Result<Self> {
        if is_translation_pair(&sides_a, &sides_b) {
            return Err(Error::Quadrilateral(QuadViolation::TranslationPair));
        }
        if sides_a.shared_line(&sides_b).is_some() {
            return Err(Error::Quadrilateral(QuadViolation::SharedLine));
        }
        let [a, a2] = sides_a.lines();
        let [b, b2] = sides_b.lines();
        let all = [a, a2, b, b2];
        if common_point(&all).is_some() {
            return Err(Error::Quadrilateral(QuadViolation::AllConcurrent));
        }
        if all.iter().all(|l| l.is_parallel(a)) {
            return Err(Error::Quadrilateral(QuadViolation::AllParallel));
        }
        Ok(Quadrilateral { sides_a, sides_b })
    }

    pub fn from_lines(a: Line<F>, a2: Line<F>, b: Line<F>, b2: Line<F>) -> Result<Self> {
        Self::new(LinePair::new(a, a2), LinePair::new(b, b2))
    }

    pub fn sides(&self) -> (&LinePair<F>, &LinePair<F>) {
        (&self.sides_a, &self.sides_b)
    }

    /// Some pair of opposite sides is a double line.
    pub fn is_degenerate(&self) -> bool {
        self.sides_a.kind() == PairKind::Double || self.sides_b.kind() == PairKind::Double
    }

    /// `A·B, A·B′, A′·B, A′·B′`.
    pub fn vertices(&self) -> [ProjectivePoint<F>; 4] {
        let [a, a2] = self.sides_a.lines();
        let [b, b2] = self.sides_b.lines();
        let meet = |l: &Line<F>, m: &Line<F>| match intersect(l, m) {
            Intersection::Point(p) => p,
            Intersection::Coincident => unreachable!("adjacent sides are distinct"),
        };
        [meet(a, b), meet(a, b2), meet(a2, b), meet(a2, b2)]
    }

    /// Lines through `A·B, A′·B′` and through `A·B′, A′·B`.
    pub fn diagonals(&self) -> Result<[Line<F>; 2]> {
        let [ab, ab2, a2b, a2b2] = self.vertices();
        let join = |p: &ProjectivePoint<F>, q: &ProjectivePoint<F>| {
            if p == q {
                Err(Error::DiagonalUndefined("opposite vertices coincide"))
            } else if !p.is_finite() && !q.is_finite() {
                Err(Error::DiagonalUndefined(
                    "both opposite vertices are at infinity",
                ))
            } else {
                Line::through(p, q)
            }
        };
        Ok([join(&ab, &a2b2)?, join(&ab2, &a2b)?])
    }

    pub fn pencil(&self) -> Pencil<F> {
        Pencil::new(self.sides_a.product(), self.sides_b.product())
            .expect("opposite-side products of a quadrilateral are independent")
    }

    pub fn products(&self) -> [Quadratic<F>; 2] {
        [self.sides_a.product(), self.sides_b.product()]
    }
}

impl<F: Field> Display for Quadrilateral<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.sides_a, self.sides_b)
    }
}

pub fn validate<F: Field>(sides_a: LinePair<F>, sides_b: LinePair<F>) -> Result<Quadrilateral<F>> {
    Quadrilateral::new(sides_a, sides_b)
}

pub fn pencil_of<F: Field>(q: &Quadrilateral<F>) -> Pencil<F> {
    q.pencil()
}

pub fn bisects_quadrilateral<F: Field>(
    line: &Line<F>,
    q: &Quadrilateral<F>,
) -> Option<Midpoint<F>> {
    bisects_set(line, &q.products())
}

/// Members `α·f₁ + β·f₂` with a square degree-2 part that degenerate to
/// parallel pairs.
pub fn parallel_families<F: Field>(p: &Pencil<F>) -> Vec<(NetCoords<F>, ParabolicForm<F>)> {
    let delta = p.delta_phi();
    let [p0, p1, p2] = delta.phi.clone();
    let roots = form_roots(&p0, &p1, &p2);
    let zero = p.zero();
    roots
        .roots()
        .unwrap_or(&[])
        .iter()
        .filter_map(|r| {
            let (alpha, beta) = r.homogeneous(&zero);
            if !delta.psi_at(&alpha, &beta).is_zero() {
                return None;
            }
            let coords = NetCoords::new(alpha, beta, zero.clone()).ok()?;
            let form = ParabolicForm::of(&p.member(&coords))?;
            Some((coords, form))
        })
        .collect()
}

/// Scalars tried as offsets of parallel pairs.
fn offsets<F: Field>(p: &Pencil<F>) -> Vec<F> {
    let spec = p.field_spec();
    field_elements::<F>(&spec).unwrap_or_else(|_| {
        let z = p.zero();
        (-8..=8).map(|n| z.int_like(n)).collect()
    })
}

/// A quadrilateral whose pencil spans the same net, preferring two
/// degenerate hyperbolas and, over fields with more than three elements,
/// nondegenerate output.
pub fn quadrilateral_of<F: Field>(a: &AsymptoticPencil<F>) -> Result<Quadrilateral<F>> {
    if triviality(a)?.is_trivial() {
        return Err(Error::Trivial);
    }
    let pencil = a.pencil();
    let crossing: Vec<LinePair<F>> = match a.members() {
        Ok(ms) => ms
            .iter()
            .filter(|m| m.pair.kind() == PairKind::Crossing)
            .map(|m| m.pair.clone())
            .collect(),
        Err(_) => hyperbola_asymptotes(pencil),
    };
    let found = crossing
        .iter()
        .enumerate()
        .find_map(|(i, c1)| {
            crossing[i + 1..]
                .iter()
                .find_map(|c2| Quadrilateral::new(c1.clone(), c2.clone()).ok())
        })
        .or_else(|| parabola_route(pencil, &crossing));
    let q = found
        .ok_or_else(|| Error::Domain("no quadrilateral found in a nontrivial pencil".into()))?;
    if !a.same_net(&q.pencil()) {
        return Err(Error::Domain(
            "extracted quadrilateral spans a different net".into(),
        ));
    }
    Ok(q)
}

fn parabola_route<F: Field>(
    pencil: &Pencil<F>,
    crossing: &[LinePair<F>],
) -> Option<Quadrilateral<F>> {
    let families = parallel_families(pencil);
    let rs = offsets(pencil);
    let allow_degenerate = [false, true];
    allow_degenerate.iter().find_map(|&degenerate_ok| {
        crossing.iter().find_map(|c| {
            families.iter().find_map(|(_, form)| {
                rs.iter().find_map(|r| {
                    let (_, pair) = form.member(r);
                    if (pair.kind() == PairKind::Double) != degenerate_ok {
                        return None;
                    }
                    Quadrilateral::new(c.clone(), pair).ok()
                })
            })
        })
    })
}
