//! Seeded random pencils, lines and quadrilaterals over GF(p).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::brute::{line_product, Plane};
use crate::conic::{LinePair, Quadratic};
use crate::field::{Field, Fp};
use crate::geometry::Line;
use crate::pencil::{is_trivial, AsymptoticPencil, Pencil};
use crate::quad::Quadrilateral;

pub struct Sampler<'a> {
    rng: ChaCha8Rng,
    plane: &'a Plane,
}

impl<'a> Sampler<'a> {
    pub fn new(plane: &'a Plane, seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            plane,
        }
    }

    pub fn elem(&mut self) -> Fp {
        let i = self.rng.gen_range(0..self.plane.elems.len());
        self.plane.elems[i]
    }

    pub fn nonzero(&mut self) -> Fp {
        loop {
            let x = self.elem();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.gen_ratio(num, den)
    }

    pub fn quadratic(&mut self) -> Quadratic<Fp> {
        loop {
            let c: [Fp; 6] = std::array::from_fn(|_| self.elem());
            if let Ok(q) = Quadratic::from_coeffs(c) {
                return q;
            }
        }
    }

    pub fn line(&mut self) -> Line<Fp> {
        let i = self.index(self.plane.lines.len());
        self.plane.lines[i].clone()
    }

    /// Two lines chosen independently, so double lines occur.
    pub fn line_pair(&mut self) -> LinePair<Fp> {
        LinePair::new(self.line(), self.line())
    }

    pub fn pencil(&mut self) -> Pencil<Fp> {
        loop {
            if let Ok(p) = Pencil::new(self.quadratic(), self.quadratic()) {
                return p;
            }
        }
    }

    /// A pencil whose generators are products of line pairs.
    pub fn reducible_pencil(&mut self) -> Pencil<Fp> {
        loop {
            let (a, b) = (self.line_pair(), self.line_pair());
            let f1 = line_product(a.first(), a.second());
            let f2 = line_product(b.first(), b.second());
            if let Ok(p) = Pencil::new(f1, f2) {
                return p;
            }
        }
    }

    pub fn nontrivial_pencil(&mut self) -> Pencil<Fp> {
        loop {
            let p = if self.chance(1, 2) {
                self.pencil()
            } else {
                self.reducible_pencil()
            };
            if !is_trivial(&AsymptoticPencil::new(p.clone())) {
                return p;
            }
        }
    }

    pub fn line_through(&mut self, x0: Fp, y0: Fp) -> Line<Fp> {
        let one = self.plane.el(1);
        let (u, v) = if self.chance(1, self.plane.p as u32 + 1) {
            (self.plane.el(0), one)
        } else {
            (one, self.elem())
        };
        Line::new(u, v, -(u * x0 + v * y0)).expect("(u, v) ≠ 0")
    }

    /// Two pairs of lines through one random point.
    pub fn concentric_pencil(&mut self) -> Pencil<Fp> {
        let (x0, y0) = (self.elem(), self.elem());
        loop {
            let a = self.line_through(x0, y0);
            let b = self.line_through(x0, y0);
            let c = self.line_through(x0, y0);
            let d = self.line_through(x0, y0);
            if let Ok(p) = Pencil::new(line_product(&a, &b), line_product(&c, &d)) {
                return p;
            }
        }
    }

    /// Generators sharing a component.
    pub fn shared_line_pencil(&mut self) -> Pencil<Fp> {
        loop {
            let (l, m, n) = (self.line(), self.line(), self.line());
            if let Ok(p) = Pencil::new(line_product(&l, &m), line_product(&l, &n)) {
                return p;
            }
        }
    }

    pub fn quadrilateral(&mut self) -> Quadrilateral<Fp> {
        loop {
            if let Ok(q) = Quadrilateral::new(self.line_pair(), self.line_pair()) {
                return q;
            }
        }
    }
}
