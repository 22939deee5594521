//! Point-by-point computations over GF(p) that avoid the algebraic shortcuts
//! used by the library proper.

use std::collections::{BTreeSet, HashMap};

use crate::conic::{LinePair, MidResult, Quadratic};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, Fp};
use crate::geometry::{Line, Midpoint, Point};
use crate::pencil::field_elements;

/// The affine plane over a prime field together with its lines.
#[derive(Debug, Clone)]
pub struct Plane {
    pub spec: FieldSpec,
    pub p: u64,
    pub elems: Vec<Fp>,
    pub lines: Vec<Line<Fp>>,
}

impl Plane {
    pub fn new(spec: &FieldSpec) -> Result<Self> {
        let p = spec.order().ok_or_else(|| {
            Error::InfiniteField("the oracle enumerates finite fields only".into())
        })?;
        Ok(Plane {
            spec: *spec,
            p,
            elems: field_elements(spec)?,
            lines: enumerate_lines(spec)?,
        })
    }

    pub fn el(&self, n: i64) -> Fp {
        Fp::from_i64(n, self.p)
    }

    /// `[1:t]` for every `t`, then `[0:1]`.
    pub fn projective_line(&self) -> Vec<(Fp, Fp)> {
        let mut out: Vec<(Fp, Fp)> = self.elems.iter().map(|t| (self.el(1), *t)).collect();
        out.push((self.el(0), self.el(1)));
        out
    }

    /// Affine points of `line`.
    pub fn points_on(&self, line: &Line<Fp>) -> Vec<Point<Fp>> {
        let (u, v, w) = line.coeffs();
        if v.is_zero() {
            let x = -*w / *u;
            self.elems.iter().map(|y| Point::new(x, *y)).collect()
        } else {
            self.elems
                .iter()
                .map(|x| Point::new(*x, -(*u * *x + *w) / *v))
                .collect()
        }
    }
}

/// All `p² + p` affine lines, each once.
pub fn enumerate_lines<F: Field>(spec: &FieldSpec) -> Result<Vec<Line<F>>> {
    let elems = field_elements::<F>(spec)?;
    let zero = F::from_int(spec, 0)?;
    let one = F::from_int(spec, 1)?;
    let mut out = Vec::with_capacity(elems.len() * (elems.len() + 1));
    for w in &elems {
        out.push(Line::new(one.clone(), zero.clone(), w.clone())?);
    }
    for v in &elems {
        for w in &elems {
            out.push(Line::new(v.clone(), one.clone(), w.clone())?);
        }
    }
    out.sort();
    Ok(out)
}

/// Every unordered pair of lines, double lines included.
pub fn all_line_pairs<F: Field>(lines: &[Line<F>]) -> Vec<LinePair<F>> {
    let mut out = Vec::with_capacity(lines.len() * (lines.len() + 1) / 2);
    for (i, l) in lines.iter().enumerate() {
        for m in &lines[i..] {
            out.push(LinePair::new(l.clone(), m.clone()));
        }
    }
    out
}

/// Quadratics up to scalar: leading coefficient 1, degree-2 part nonzero.
pub fn quadratic_classes(plane: &Plane) -> Vec<Quadratic<Fp>> {
    let e = &plane.elems;
    let (zero, one) = (plane.el(0), plane.el(1));
    let mut out = Vec::new();
    let tail = |lead: [Fp; 3], out: &mut Vec<Quadratic<Fp>>| {
        for d in e {
            for ee in e {
                for g in e {
                    let q = Quadratic::new(lead[0], lead[1], lead[2], *d, *ee, *g);
                    out.push(q.expect("degree-2 part is nonzero"));
                }
            }
        }
    };
    for b in e {
        for c in e {
            tail([one, *b, *c], &mut out);
        }
    }
    for c in e {
        tail([zero, one, *c], &mut out);
    }
    tail([zero, zero, one], &mut out);
    out
}

/// `(u₁X + v₁Y + w₁)(u₂X + v₂Y + w₂)` expanded by hand.
pub fn line_product(l1: &Line<Fp>, l2: &Line<Fp>) -> Quadratic<Fp> {
    let (u1, v1, w1) = l1.coeffs();
    let (u2, v2, w2) = l2.coeffs();
    Quadratic::new(
        *u1 * *u2,
        *u1 * *v2 + *v1 * *u2,
        *v1 * *v2,
        *u1 * *w2 + *w1 * *u2,
        *v1 * *w2 + *w1 * *v2,
        *w1 * *w2,
    )
    .expect("product of two lines has degree 2")
}

pub fn combine(a: Fp, f: &Quadratic<Fp>, b: Fp, g: &Quadratic<Fp>, l: Fp) -> Option<Quadratic<Fp>> {
    let (fc, gc) = (f.coeffs(), g.coeffs());
    let mut c: [Fp; 6] = std::array::from_fn(|i| a * fc[i] + b * gc[i]);
    c[5] = c[5] + l;
    Quadratic::from_coeffs(c).ok()
}

/// Value of the degree-2 part at `(x, y)`.
pub fn hom_eval(f: &Quadratic<Fp>, x: Fp, y: Fp) -> Fp {
    let c = f.coeffs();
    c[0] * x * x + c[1] * x * y + c[2] * y * y
}

pub fn points_at_infinity_count(plane: &Plane, f: &Quadratic<Fp>) -> usize {
    plane
        .projective_line()
        .into_iter()
        .filter(|(x, y)| hom_eval(f, *x, *y).is_zero())
        .count()
}

/// Determinant of the symmetric 3×3 matrix of `f` by cofactor expansion.
pub fn det3(f: &Quadratic<Fp>) -> Fp {
    let c = f.coeffs();
    let h = |x: Fp| x.halve();
    let m = [
        [c[0], h(c[1]), h(c[3])],
        [h(c[1]), c[2], h(c[4])],
        [h(c[3]), h(c[4]), c[5]],
    ];
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Whether some nonzero combination of `f` and `g` drops below degree 2.
pub fn dependent(f: &Quadratic<Fp>, g: &Quadratic<Fp>) -> bool {
    let (a, b) = (f.coeffs(), g.coeffs());
    (a[0] * b[1] - a[1] * b[0]).is_zero()
        && (a[0] * b[2] - a[2] * b[0]).is_zero()
        && (a[1] * b[2] - a[2] * b[1]).is_zero()
}

pub fn lines_parallel(l: &Line<Fp>, m: &Line<Fp>) -> bool {
    let (u1, v1, _) = l.coeffs();
    let (u2, v2, _) = m.coeffs();
    (*u1 * *v2 - *u2 * *v1).is_zero()
}

/// Midline of a parallel or double pair; `None` for crossing lines.
pub fn brute_midline(pair: &LinePair<Fp>) -> Option<Line<Fp>> {
    let [l, m] = pair.lines();
    if !lines_parallel(l, m) {
        return None;
    }
    // canonical lines with equal direction share (u, v)
    let (u, v, w1) = l.coeffs();
    let (_, _, w2) = m.coeffs();
    Line::new(*u, *v, (*w1 + *w2).halve()).ok()
}

/// Intersection of `f` with `line` read off from the points of the line.
pub fn brute_mid(plane: &Plane, f: &Quadratic<Fp>, line: &Line<Fp>) -> MidResult<Fp> {
    let pts = plane.points_on(line);
    let zeros: Vec<&Point<Fp>> = pts
        .iter()
        .filter(|p| f.eval(&p.x, &p.y).is_zero())
        .collect();
    if zeros.len() == pts.len() {
        return MidResult::MeetsNoCross;
    }
    let (u, v, _) = line.coeffs();
    let at_infinity = hom_eval(f, -*v, *u).is_zero();
    match zeros.as_slice() {
        [] if at_infinity => MidResult::MeetsNoCross,
        [] => MidResult::NoMeet,
        [_] if at_infinity => MidResult::Crosses(Midpoint::Infinite),
        [p] => MidResult::Crosses(Midpoint::Finite((*p).clone())),
        [p, q] => MidResult::Crosses(Midpoint::Finite(Point::new(
            (p.x + q.x).halve(),
            (p.y + q.y).halve(),
        ))),
        _ => unreachable!("a conic not containing a line meets it at most twice"),
    }
}

/// Folds crossing midpoints; `None` once two disagree.
pub fn fold_mids<'a>(mids: impl IntoIterator<Item = &'a MidResult<Fp>>) -> Option<Midpoint<Fp>> {
    let mut common: Option<&Midpoint<Fp>> = None;
    for m in mids {
        if let MidResult::Crosses(m) = m {
            match common {
                None => common = Some(m),
                Some(c) if c == m => {}
                Some(_) => return None,
            }
        }
    }
    Some(common.cloned().unwrap_or(Midpoint::Undetermined))
}

pub fn brute_bisects(plane: &Plane, line: &Line<Fp>, fs: &[Quadratic<Fp>]) -> Option<Midpoint<Fp>> {
    let mids: Vec<MidResult<Fp>> = fs.iter().map(|f| brute_mid(plane, f, line)).collect();
    fold_mids(&mids)
}

/// Whether `line` meets the projective closure of `f`.
pub fn meets(plane: &Plane, f: &Quadratic<Fp>, line: &Line<Fp>) -> bool {
    !matches!(brute_mid(plane, f, line), MidResult::NoMeet)
}

/// Reducible quadratics up to scalar, keyed by their normalized form.
#[derive(Debug, Clone)]
pub struct ReducibleTable {
    map: HashMap<Quadratic<Fp>, LinePair<Fp>>,
}

impl ReducibleTable {
    pub fn new(plane: &Plane) -> Self {
        let map = all_line_pairs(&plane.lines)
            .into_iter()
            .map(|pair| {
                let [l, m] = pair.lines();
                (line_product(l, m).canonical(), pair)
            })
            .collect();
        ReducibleTable { map }
    }

    pub fn lookup(&self, f: &Quadratic<Fp>) -> Option<&LinePair<Fp>> {
        self.map.get(&f.canonical())
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Quadratic<Fp>, &LinePair<Fp>)> {
        self.map.iter()
    }
}

/// A member `α·f₁ + β·f₂ + λ` of the net.
#[derive(Debug, Clone)]
pub struct NetMember {
    pub alpha: Fp,
    pub beta: Fp,
    pub lambda: Fp,
    pub quadratic: Quadratic<Fp>,
}

/// Every member of the net, one per projective coordinate triple.
pub fn net_members(plane: &Plane, f1: &Quadratic<Fp>, f2: &Quadratic<Fp>) -> Vec<NetMember> {
    let mut out = Vec::new();
    for (alpha, beta) in plane.projective_line() {
        for lambda in &plane.elems {
            if let Some(q) = combine(alpha, f1, beta, f2, *lambda) {
                out.push(NetMember {
                    alpha,
                    beta,
                    lambda: *lambda,
                    quadratic: q,
                });
            }
        }
    }
    out
}

/// Reducible members of the net, found by table lookup.
pub fn brute_asymptotic(
    plane: &Plane,
    table: &ReducibleTable,
    f1: &Quadratic<Fp>,
    f2: &Quadratic<Fp>,
) -> BTreeSet<LinePair<Fp>> {
    net_members(plane, f1, f2)
        .iter()
        .filter_map(|m| table.lookup(&m.quadratic).cloned())
        .collect()
}

/// Same-center crossing pairs only.
pub fn brute_is_trivial(pairs: &BTreeSet<LinePair<Fp>>) -> bool {
    let mut centers = BTreeSet::new();
    for pair in pairs {
        let [l, m] = pair.lines();
        if lines_parallel(l, m) {
            return false;
        }
        let (u1, v1, w1) = l.coeffs();
        let (u2, v2, w2) = m.coeffs();
        let det = *u1 * *v2 - *u2 * *v1;
        centers.insert(((*v1 * *w2 - *v2 * *w1) / det, (*w1 * *u2 - *w2 * *u1) / det));
    }
    centers.len() <= 1
}
