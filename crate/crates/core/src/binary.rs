//! Binary quadratic forms `a·x² + b·xy + c·y²` and their roots on the
//! projective line.

use crate::field::Field;

/// A point `[t:1]` or `[1:0]` of the projective line.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param<F> {
    Finite(F),
    Infinity,
}

impl<F: Field> Param<F> {
    /// Homogeneous coordinates `(x, y)` with `t = x / y`.
    pub fn homogeneous(&self, like: &F) -> (F, F) {
        match self {
            Param::Finite(t) => (t.clone(), like.one_like()),
            Param::Infinity => (like.one_like(), like.zero_like()),
        }
    }

    pub fn from_homogeneous(x: F, y: F) -> Self {
        if y.is_zero() {
            Param::Infinity
        } else {
            Param::Finite(x / y)
        }
    }
}

/// Roots of a binary quadratic form over the base field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormRoots<F> {
    /// The form is identically zero.
    All,
    /// Distinct rational roots; a single entry is a double root.
    Roots(Vec<Param<F>>),
}

impl<F> FormRoots<F> {
    pub fn roots(&self) -> Option<&[Param<F>]> {
        match self {
            FormRoots::All => None,
            FormRoots::Roots(r) => Some(r),
        }
    }
}

pub fn form_roots<F: Field>(a: &F, b: &F, c: &F) -> FormRoots<F> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return FormRoots::All;
    }
    if a.is_zero() {
        // y·(b·x + c·y)
        let mut roots = vec![Param::Infinity];
        if !b.is_zero() {
            roots.insert(0, Param::Finite(-(c.clone()) / b.clone()));
        }
        return FormRoots::Roots(roots);
    }
    let disc = b.square() - a.int_like(4) * a.clone() * c.clone();
    let Some(s) = disc.sqrt() else {
        return FormRoots::Roots(Vec::new());
    };
    let two_a = a.int_like(2) * a.clone();
    let r1 = (-(b.clone()) - s.clone()) / two_a.clone();
    let r2 = (-(b.clone()) + s) / two_a;
    let mut roots = vec![Param::Finite(r1.clone())];
    if r1 != r2 {
        roots.push(Param::Finite(r2));
    }
    roots.sort();
    FormRoots::Roots(roots)
}

pub fn eval_form<F: Field>(a: &F, b: &F, c: &F, x: &F, y: &F) -> F {
    a.clone() * x.square() + b.clone() * x.clone() * y.clone() + c.clone() * y.square()
}
