//! Pencils `k·f₁ + k·f₂`, affine nets `k·f₁ + k·f₂ + k`, and asymptotic
//! pencils: the reducible members of the net.

use std::collections::BTreeSet;
use std::fmt::{self, Display};

use serde_json::{json, Value};

use crate::conic::{
    classify, degenerations, is_reducible, product_quadratic, ConicKind, Degenerations, LinePair,
    PairKind, Quadratic,
};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::geometry::{Line, Point};
use crate::linalg;

/// Two quadratics whose degree-2 parts are not proportional.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pencil<F> {
    f1: Quadratic<F>,
    f2: Quadratic<F>,
}

pub fn are_independent<F: Field>(f1: &Quadratic<F>, f2: &Quadratic<F>) -> bool {
    let h1 = f1.homogeneous_part();
    let h2 = f2.homogeneous_part();
    [(0, 1), (0, 2), (1, 2)]
        .iter()
        .any(|&(i, j)| !(h1[i].clone() * h2[j].clone() - h1[j].clone() * h2[i].clone()).is_zero())
}

/// Projective net coordinates `[α : β : λ]` with `(α, β) ≠ 0`, scaled so the
/// first nonzero of `(α, β)` is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NetCoords<F> {
    pub alpha: F,
    pub beta: F,
    pub lambda: F,
}

impl<F: Field> NetCoords<F> {
    pub fn new(alpha: F, beta: F, lambda: F) -> Result<Self> {
        let lead = if !alpha.is_zero() {
            alpha.clone()
        } else if !beta.is_zero() {
            beta.clone()
        } else {
            return Err(Error::Domain(
                "net coordinates need (α, β) ≠ (0, 0)".to_string(),
            ));
        };
        Ok(NetCoords {
            alpha: alpha / lead.clone(),
            beta: beta / lead.clone(),
            lambda: lambda / lead,
        })
    }
}

impl<F: Field> Display for NetCoords<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.alpha, self.beta, self.lambda)
    }
}

impl<F: Field> Pencil<F> {
    pub fn new(f1: Quadratic<F>, f2: Quadratic<F>) -> Result<Self> {
        let (s1, s2) = (f1.field_spec(), f2.field_spec());
        if s1 != s2 {
            return Err(Error::FieldMismatch(s1, s2));
        }
        if !are_independent(&f1, &f2) {
            return Err(Error::Dependent);
        }
        Ok(Pencil { f1, f2 })
    }

    pub fn f1(&self) -> &Quadratic<F> {
        &self.f1
    }

    pub fn f2(&self) -> &Quadratic<F> {
        &self.f2
    }

    pub fn field_spec(&self) -> FieldSpec {
        self.f1.field_spec()
    }

    pub fn zero(&self) -> F {
        self.f1.zero()
    }

    /// `α·f₁ + β·f₂ + λ`.
    pub fn member(&self, c: &NetCoords<F>) -> Quadratic<F> {
        Quadratic::combine(&c.alpha, &self.f1, &c.beta, &self.f2, &c.lambda)
            .expect("independent generators keep degree 2")
    }

    /// Net coordinates of `g`, if it lies in the net.
    pub fn contains(&self, g: &Quadratic<F>) -> Option<NetCoords<F>> {
        let zero = self.zero();
        let one = zero.one_like();
        let rows: Vec<Vec<F>> = (0..6)
            .map(|i| {
                vec![
                    self.f1.coeffs()[i].clone(),
                    self.f2.coeffs()[i].clone(),
                    if i == 5 { one.clone() } else { zero.clone() },
                ]
            })
            .collect();
        let x = linalg::solve(&rows, g.coeffs())?;
        let [alpha, beta, lambda]: [F; 3] = x.try_into().ok()?;
        NetCoords::new(alpha, beta, lambda).ok()
    }

    pub fn delta_phi(&self) -> DeltaCubic<F> {
        DeltaCubic::of(self)
    }
}

pub fn net_member<F: Field>(p: &Pencil<F>, c: &NetCoords<F>) -> Quadratic<F> {
    p.member(c)
}

pub fn net_contains<F: Field>(p: &Pencil<F>, g: &Quadratic<F>) -> Option<NetCoords<F>> {
    p.contains(g)
}

/// `Δ(T, U, V) = T·Φ(U, V) + Ψ(U, V)`: the determinant of the symmetric
/// matrix of `U·f₁ + V·f₂ + T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaCubic<F> {
    /// Coefficients of `U³, U²V, UV², V³`.
    pub psi: [F; 4],
    /// Coefficients of `U², UV, V²`.
    pub phi: [F; 3],
}

/// Binary forms in `U, V`; index `k` holds the coefficient of `U^{d−k}·V^k`.
fn form_mul<F: Field>(p: &[F], q: &[F]) -> Vec<F> {
    let zero = p[0].zero_like();
    let mut out = vec![zero; p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] = out[i + j].clone() + a.clone() * b.clone();
        }
    }
    out
}

fn form_sub<F: Field>(p: &[F], q: &[F]) -> Vec<F> {
    p.iter()
        .zip(q)
        .map(|(a, b)| a.clone() - b.clone())
        .collect()
}

fn form_add<F: Field>(p: &[F], q: &[F]) -> Vec<F> {
    p.iter()
        .zip(q)
        .map(|(a, b)| a.clone() + b.clone())
        .collect()
}

/// Symmetric matrix entries with halved mixed and linear coefficients.
fn half_matrix<F: Field>(f: &Quadratic<F>) -> [[F; 3]; 3] {
    let [a, b, c, d, e, g] = f.coeffs().clone();
    let (b, d, e) = (b.halve(), d.halve(), e.halve());
    [[a, b.clone(), d.clone()], [b, c, e.clone()], [d, e, g]]
}

impl<F: Field> DeltaCubic<F> {
    pub fn of(p: &Pencil<F>) -> Self {
        let m1 = half_matrix(&p.f1);
        let m2 = half_matrix(&p.f2);
        let entry = |i: usize, j: usize| vec![m1[i][j].clone(), m2[i][j].clone()];
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            form_sub(
                &form_mul(&entry(r1, c1), &entry(r2, c2)),
                &form_mul(&entry(r1, c2), &entry(r2, c1)),
            )
        };
        let t0 = form_mul(&entry(0, 0), &minor(1, 2, 1, 2));
        let t1 = form_mul(&entry(0, 1), &minor(1, 2, 0, 2));
        let t2 = form_mul(&entry(0, 2), &minor(1, 2, 0, 1));
        let psi = form_add(&form_sub(&t0, &t1), &t2);
        let phi = minor(0, 1, 0, 1);
        DeltaCubic {
            psi: psi.try_into().expect("cubic form"),
            phi: phi.try_into().expect("quadratic form"),
        }
    }

    pub fn phi_at(&self, u: &F, v: &F) -> F {
        let [p0, p1, p2] = &self.phi;
        p0.clone() * u.square() + p1.clone() * u.clone() * v.clone() + p2.clone() * v.square()
    }

    pub fn psi_at(&self, u: &F, v: &F) -> F {
        let [c0, c1, c2, c3] = &self.psi;
        c0.clone() * u.square() * u.clone()
            + c1.clone() * u.square() * v.clone()
            + c2.clone() * u.clone() * v.square()
            + c3.clone() * v.square() * v.clone()
    }

    /// `Δ(t, u, v)`.
    pub fn eval(&self, t: &F, u: &F, v: &F) -> F {
        t.clone() * self.phi_at(u, v) + self.psi_at(u, v)
    }

    pub fn phi_is_zero(&self) -> bool {
        self.phi.iter().all(Field::is_zero)
    }
}

pub fn delta_phi<F: Field>(p: &Pencil<F>) -> DeltaCubic<F> {
    DeltaCubic::of(p)
}

/// A hyperbola `α·f₁ + β·f₂` of the pencil.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilHyperbola<F> {
    pub alpha: F,
    pub beta: F,
    pub quadratic: Quadratic<F>,
}

/// Hyperbolas of the pencil by row reduction of the degree-2 coefficients:
/// two independent ones when the field has more than three elements, one
/// otherwise.
pub fn find_hyperbolas<F: Field>(p: &Pencil<F>) -> Vec<PencilHyperbola<F>> {
    let combos = hyperbola_combinations(p.f1(), p.f2(), false);
    combos
        .into_iter()
        .map(|(alpha, beta)| {
            let zero = alpha.zero_like();
            let quadratic = Quadratic::combine(&alpha, p.f1(), &beta, p.f2(), &zero)
                .expect("independent generators keep degree 2");
            debug_assert_eq!(classify(&quadratic).kind, ConicKind::Hyperbola);
            PencilHyperbola {
                alpha,
                beta,
                quadratic,
            }
        })
        .collect()
}

fn swap_xy<F: Field>(f: &Quadratic<F>) -> Quadratic<F> {
    let [a, b, c, d, e, g] = f.coeffs().clone();
    Quadratic::new(c, b, a, e, d, g).expect("swapping variables keeps degree 2")
}

/// `(α, β)` combinations of `f₁, f₂` that are hyperbolas.
fn hyperbola_combinations<F: Field>(
    f1: &Quadratic<F>,
    f2: &Quadratic<F>,
    swapped: bool,
) -> Vec<(F, F)> {
    let zero = f1.zero();
    let one = zero.one_like();
    let mut rows: Vec<Vec<F>> = [(f1, &one, &zero), (f2, &zero, &one)]
        .iter()
        .map(|(f, x, y)| {
            let mut r = f.homogeneous_part().to_vec();
            r.push((*x).clone());
            r.push((*y).clone());
            r
        })
        .collect();
    let pivots = linalg::rref(&mut rows);
    let combo = |r: usize| (rows[r][3].clone(), rows[r][4].clone());
    let (g1, g2) = (combo(0), combo(1));
    let lincomb = |(a1, b1): &(F, F), s: &F, (a2, b2): &(F, F)| {
        (
            a1.clone() + s.clone() * a2.clone(),
            b1.clone() + s.clone() * b2.clone(),
        )
    };
    let big = f1.field_spec().order().is_none_or(|q| q > 3);
    match pivots[..] {
        [0, 1, ..] => {
            // g₁ = X² + c₁Y² + …, g₂ = XY + c₂Y² + …
            let c1 = rows[0][2].clone();
            let c2 = rows[1][2].clone();
            let mut out = vec![g2.clone()];
            if big {
                let two = one.int_like(2);
                let r = (1..)
                    .map(|n| one.int_like(n))
                    .find(|r| {
                        !(r.clone() + c2.clone()).is_zero()
                            && !(r.square() + two.clone() * c2.clone() * r.clone() - c1.clone())
                                .is_zero()
                    })
                    .expect("a suitable r exists in fields with more than 3 elements");
                let beta = -(r.square() + c1) / (c2 + r);
                out.push(lincomb(&g1, &beta, &g2));
            }
            out
        }
        [0, 2, ..] if rows[0][1].is_zero() => {
            // g₁ = X² + …, g₂ = Y² + …
            let minus_one = -one.clone();
            let mut out = vec![lincomb(&g1, &minus_one, &g2)];
            if big {
                let t = (2..)
                    .map(|n| one.int_like(n))
                    .find(|t| !t.square().is_one())
                    .expect("some t has t² ≠ 1");
                out.push(lincomb(&g1, &(-t.square()), &g2));
            }
            out
        }
        _ => {
            assert!(
                !swapped,
                "interchanging X and Y reaches the first two echelon forms"
            );
            hyperbola_combinations(&swap_xy(f1), &swap_xy(f2), true)
        }
    }
}

/// Points of the projective line `[1:t]` for each field element `t`, then
/// `[0:1]`.
pub fn projective_line<F: Field>(spec: &FieldSpec) -> Result<Vec<(F, F)>> {
    let elems = field_elements::<F>(spec)?;
    let zero = F::from_int(spec, 0)?;
    let one = F::from_int(spec, 1)?;
    let mut out: Vec<(F, F)> = elems.into_iter().map(|t| (one.clone(), t)).collect();
    out.push((zero, one));
    Ok(out)
}

pub fn field_elements<F: Field>(spec: &FieldSpec) -> Result<Vec<F>> {
    let p = spec
        .order()
        .ok_or_else(|| Error::InfiniteField(format!("cannot enumerate {spec}")))?;
    (0..p as i64).map(|i| F::from_int(spec, i)).collect()
}

/// A reducible member of the net with its coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AsymptoticMember<F> {
    pub coords: NetCoords<F>,
    pub pair: LinePair<F>,
}

impl<F: Field> AsymptoticMember<F> {
    pub fn to_json(&self) -> Value {
        pair_record(&self.pair, Some(&self.coords))
    }
}

/// JSON record of a line pair, with net coordinates when known.
pub fn pair_record<F: Field>(pair: &LinePair<F>, coords: Option<&NetCoords<F>>) -> Value {
    let mut rec = json!({
        "kind": pair.kind().as_str(),
        "line1": pair.first().to_string(),
        "line2": pair.second().to_string(),
    });
    let obj = rec.as_object_mut().expect("object literal");
    if let Some(c) = coords {
        obj.insert("alpha".into(), json!(c.alpha.to_string()));
        obj.insert("beta".into(), json!(c.beta.to_string()));
        obj.insert("lambda".into(), json!(c.lambda.to_string()));
    }
    match pair.kind() {
        PairKind::Crossing => {
            let p = pair.center().expect("crossing lines meet");
            obj.insert("center".into(), json!([p.x.to_string(), p.y.to_string()]));
        }
        _ => {
            let m = pair.midline().expect("parallel lines have a midline");
            obj.insert("midline".into(), json!(m.to_string()));
        }
    }
    rec
}

/// Degenerations of the conics of a pencil, materialized over finite fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticPencil<F> {
    pencil: Pencil<F>,
    delta: DeltaCubic<F>,
    members: Option<Vec<AsymptoticMember<F>>>,
}

impl<F: Field> AsymptoticPencil<F> {
    pub fn new(pencil: Pencil<F>) -> Self {
        let delta = DeltaCubic::of(&pencil);
        let members = pencil
            .field_spec()
            .is_finite()
            .then(|| materialize(&pencil, &delta));
        AsymptoticPencil {
            pencil,
            delta,
            members,
        }
    }

    pub fn pencil(&self) -> &Pencil<F> {
        &self.pencil
    }

    pub fn delta(&self) -> &DeltaCubic<F> {
        &self.delta
    }

    /// Every reducible member; only available over finite fields.
    pub fn members(&self) -> Result<&[AsymptoticMember<F>]> {
        self.members.as_deref().ok_or_else(|| {
            Error::InfiniteField(
                "asymptotic pencils over Q are infinite; use membership tests".to_string(),
            )
        })
    }

    pub fn pairs(&self) -> Result<BTreeSet<LinePair<F>>> {
        Ok(self.members()?.iter().map(|m| m.pair.clone()).collect())
    }

    /// Net coordinates of the pair's product, if the pair belongs.
    pub fn coords_of(&self, pair: &LinePair<F>) -> Option<NetCoords<F>> {
        self.pencil.contains(&product_quadratic(pair))
    }

    pub fn contains(&self, pair: &LinePair<F>) -> bool {
        self.coords_of(pair).is_some()
    }

    /// Whether both pencils span the same net.
    pub fn same_net(&self, other: &Pencil<F>) -> bool {
        self.pencil.contains(other.f1()).is_some() && self.pencil.contains(other.f2()).is_some()
    }
}

fn materialize<F: Field>(pencil: &Pencil<F>, delta: &DeltaCubic<F>) -> Vec<AsymptoticMember<F>> {
    let spec = pencil.field_spec();
    let elems = field_elements::<F>(&spec).expect("finite field");
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |coords: NetCoords<F>| {
        if let Some(pair) = is_reducible(&pencil.member(&coords)) {
            if seen.insert(pair.clone()) {
                out.push(AsymptoticMember { coords, pair });
            }
        }
    };
    for (alpha, beta) in projective_line::<F>(&spec).expect("finite field") {
        let phi = delta.phi_at(&alpha, &beta);
        let psi = delta.psi_at(&alpha, &beta);
        if !phi.is_zero() {
            let lambda = -psi / phi;
            push(NetCoords::new(alpha, beta, lambda).expect("(α, β) ≠ 0"));
        } else if psi.is_zero() {
            for lambda in &elems {
                push(
                    NetCoords::new(alpha.clone(), beta.clone(), lambda.clone())
                        .expect("(α, β) ≠ 0"),
                );
            }
        }
    }
    out
}

pub fn asymptotic_members<F: Field>(a: &AsymptoticPencil<F>) -> Result<&[AsymptoticMember<F>]> {
    a.members()
}

/// Certificate for or against triviality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Triviality<F> {
    /// Only same-center degenerate hyperbolas.
    Trivial {
        center: Point<F>,
    },
    DifferentCenters(LinePair<F>, LinePair<F>),
    ParallelPair(LinePair<F>),
    DoubleLine(DoubleLineWitness<F>),
}

impl<F> Triviality<F> {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Triviality::Trivial { .. })
    }
}

/// `α·L₁L₂ + β·M₁M₂ = (e·L₁ + f·L₂)²` for two same-center crossing pairs
/// `{L₁, L₂}`, `{M₁, M₂}` with `Mᵢ` written in the basis `L₁, L₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleLineWitness<F> {
    pub first: LinePair<F>,
    pub second: LinePair<F>,
    /// `M₁ = a·L₁ + b·L₂`, `M₂ = c·L₁ + d·L₂`.
    pub abcd: [F; 4],
    pub alpha: F,
    pub beta: F,
    pub e: F,
    pub f: F,
    /// The double line `e·L₁ + f·L₂ = 0`.
    pub line: Line<F>,
}

impl<F: Field> DoubleLineWitness<F> {
    /// Checks the defining identity coefficientwise in the `L₁, L₂` basis.
    pub fn verify_expansion(&self) -> bool {
        let [a, b, c, d] = self.abcd.clone();
        let (alpha, beta, e, f) = (&self.alpha, &self.beta, &self.e, &self.f);
        let two = a.int_like(2);
        (beta.clone() * a.clone() * c.clone() - e.square()).is_zero()
            && (alpha.clone() + beta.clone() * (a * d.clone() + b.clone() * c)
                - two * e.clone() * f.clone())
            .is_zero()
            && (beta.clone() * b * d - f.square()).is_zero()
    }

    pub fn double_line(&self) -> LinePair<F> {
        LinePair::new(self.line.clone(), self.line.clone())
    }
}

/// Linear part `(u, v)` of a line.
fn linear_part<F: Field>(l: &Line<F>) -> (F, F) {
    let (u, v, _) = l.coeffs();
    (u.clone(), v.clone())
}

/// Decides triviality from two independent degenerate hyperbolas.
pub fn triviality_from_pairs<F: Field>(p1: &LinePair<F>, p2: &LinePair<F>) -> Triviality<F> {
    for p in [p1, p2] {
        if p.kind() != PairKind::Crossing {
            return Triviality::ParallelPair(p.clone());
        }
    }
    let (c1, c2) = (
        p1.center().expect("crossing"),
        p2.center().expect("crossing"),
    );
    if c1 != c2 {
        return Triviality::DifferentCenters(p1.clone(), p2.clone());
    }
    let [l1, l2] = p1.lines();
    let ((u1, v1), (u2, v2)) = (linear_part(l1), linear_part(l2));
    let det = u1.clone() * v2.clone() - u2.clone() * v1.clone();
    // coordinates of a linear form through the center in the basis L₁, L₂
    let basis = |m: &Line<F>| {
        let (u, v) = linear_part(m);
        (
            (u.clone() * v2.clone() - u2.clone() * v.clone()) / det.clone(),
            (u1.clone() * v - u * v1.clone()) / det.clone(),
        )
    };
    let [m1, m2] = p2.lines();
    let ((a, b), (c, d)) = (basis(m1), basis(m2));
    let one = a.one_like();
    let zero = a.zero_like();
    let bd = b.clone() * d.clone();
    let ac = a.clone() * c.clone();
    let ad_bc = a.clone() * d.clone() + b.clone() * c.clone();
    let (alpha, beta, e, f) = if bd.is_zero() {
        (
            -ad_bc / ac.clone(),
            one.clone() / ac,
            one.clone(),
            zero.clone(),
        )
    } else {
        match (ac / bd.clone()).sqrt() {
            Some(theta) => (
                (a.int_like(2) * bd.clone() * theta.clone() - ad_bc) / bd.clone(),
                one.clone() / bd,
                theta,
                one.clone(),
            ),
            None => return Triviality::Trivial { center: c1 },
        }
    };
    let line = Line::new(
        e.clone() * u1.clone() + f.clone() * u2.clone(),
        e.clone() * v1.clone() + f.clone() * v2.clone(),
        zero.clone(),
    )
    .expect("e·L₁ + f·L₂ is a line");
    // through the center
    let (lu, lv, _) = line.coeffs();
    let w = -(lu.clone() * c1.x.clone() + lv.clone() * c1.y.clone());
    let line = Line::new(lu.clone(), lv.clone(), w).expect("line");
    Triviality::DoubleLine(DoubleLineWitness {
        first: p1.clone(),
        second: p2.clone(),
        abcd: [a, b, c, d],
        alpha,
        beta,
        e,
        f,
        line,
    })
}

/// Triviality from two hyperbolas of the pencil and their asymptotes; needs
/// a field with more than three elements.
pub fn triviality_intensional<F: Field>(p: &Pencil<F>) -> Result<Triviality<F>> {
    let pairs = hyperbola_asymptotes(p);
    if pairs.len() < 2 {
        return Err(Error::InsufficientData(
            "the pencil yields a single hyperbola",
        ));
    }
    Ok(triviality_from_pairs(&pairs[0], &pairs[1]))
}

/// Asymptotes of the hyperbolas returned by [`find_hyperbolas`].
pub fn hyperbola_asymptotes<F: Field>(p: &Pencil<F>) -> Vec<LinePair<F>> {
    find_hyperbolas(p)
        .iter()
        .map(|h| match degenerations(&h.quadratic) {
            Degenerations::Hyperbola { asymptotes, .. } => asymptotes,
            _ => unreachable!("hyperbolas degenerate to their asymptotes"),
        })
        .collect()
}

/// Triviality by enumerating every member.
pub fn triviality_enumerated<F: Field>(a: &AsymptoticPencil<F>) -> Result<Triviality<F>> {
    let members = a.members()?;
    if let Some(m) = members.iter().find(|m| m.pair.kind() != PairKind::Crossing) {
        return Ok(if m.pair.kind() == PairKind::Double {
            match triviality_intensional(a.pencil()) {
                Ok(t @ Triviality::DoubleLine(_)) => t,
                _ => Triviality::ParallelPair(m.pair.clone()),
            }
        } else {
            Triviality::ParallelPair(m.pair.clone())
        });
    }
    let first = &members[0].pair;
    let center = first.center().expect("crossing");
    match members
        .iter()
        .find(|m| m.pair.center().as_ref() != Some(&center))
    {
        Some(m) => Ok(Triviality::DifferentCenters(first.clone(), m.pair.clone())),
        None => Ok(Triviality::Trivial { center }),
    }
}

pub fn triviality<F: Field>(a: &AsymptoticPencil<F>) -> Result<Triviality<F>> {
    if a.members.is_some() {
        triviality_enumerated(a)
    } else {
        triviality_intensional(a.pencil())
    }
}

pub fn is_trivial<F: Field>(a: &AsymptoticPencil<F>) -> bool {
    triviality(a).map(|t| t.is_trivial()).unwrap_or(false)
}

/// A line shared by two members, by scanning all members.
pub fn shared_line_enumerated<F: Field>(a: &AsymptoticPencil<F>) -> Result<Option<Line<F>>> {
    let members = a.members()?;
    for (i, m) in members.iter().enumerate() {
        for n in &members[i + 1..] {
            if let Some(l) = m.pair.shared_line(&n.pair) {
                return Ok(Some(l));
            }
        }
    }
    Ok(None)
}

/// A line shared by the asymptotes of two independent hyperbolas, confirmed
/// on their sum.
pub fn shared_line_intensional<F: Field>(p: &Pencil<F>) -> Result<Option<Line<F>>> {
    let pairs = hyperbola_asymptotes(p);
    if pairs.len() < 2 {
        return Err(Error::InsufficientData(
            "the pencil yields a single hyperbola",
        ));
    }
    let Some(line) = pairs[0].shared_line(&pairs[1]) else {
        return Ok(None);
    };
    let zero = p.zero();
    let one = zero.one_like();
    let third = Quadratic::combine(&one, &pairs[0].product(), &one, &pairs[1].product(), &zero)
        .ok()
        .and_then(|q| is_reducible(&q));
    Ok(third.filter(|t| t.contains(&line)).map(|_| line))
}

pub fn shared_line<F: Field>(a: &AsymptoticPencil<F>) -> Result<Option<Line<F>>> {
    if a.members.is_some() {
        shared_line_enumerated(a)
    } else {
        shared_line_intensional(a.pencil())
    }
}
