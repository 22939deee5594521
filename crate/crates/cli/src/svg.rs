//! SVG figures of rational pencils, asymptotic pencils and arrangements.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use bisector_core::bisector::bisects_set;
use bisector_core::conic::{center, degenerations, Degenerations};
use bisector_core::{
    Field, LinePair, Midpoint, NetCoords, PairKind, QLine, QPencil, QQuadratic, Rational,
};

use crate::commands::parallel_sample;

const SIZE: f64 = 512.0;
const STEPS: usize = 256;
const MARGIN: f64 = 0.2;
const MIN_HALF_SPAN: f64 = 2.0;

pub enum Scene {
    Pencil(QPencil),
    AsymptoticPencil(QPencil),
    Arrangement(Vec<LinePair<Rational>>),
}

/// Axis-aligned square window with the y axis pointing up.
struct Window {
    x0: f64,
    y0: f64,
    span: f64,
}

impl Window {
    fn around(points: &[(f64, f64)]) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = (-1.0f64, 1.0f64, -1.0f64, 1.0f64);
        if let Some(&(x, y)) = points.first() {
            (x0, x1, y0, y1) = (x, x, y, y);
        }
        for &(x, y) in points {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
        let half = ((x1 - x0).max(y1 - y0) / 2.0 * (1.0 + 2.0 * MARGIN)).max(MIN_HALF_SPAN);
        Window {
            x0: cx - half,
            y0: cy - half,
            span: 2.0 * half,
        }
    }

    fn x1(&self) -> f64 {
        self.x0 + self.span
    }

    fn y1(&self) -> f64 {
        self.y0 + self.span
    }

    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        (
            (x - self.x0) / self.span * SIZE,
            (self.y1() - y) / self.span * SIZE,
        )
    }

    /// Points far outside the window break a polyline.
    fn near(&self, x: f64, y: f64) -> bool {
        let pad = self.span / 2.0;
        x >= self.x0 - pad && x <= self.x1() + pad && y >= self.y0 - pad && y <= self.y1() + pad
    }

    /// Segment of `u·x + v·y + w = 0` inside the window.
    fn clip(&self, (u, v, w): (f64, f64, f64)) -> Option<[(f64, f64); 2]> {
        let mut hits: Vec<(f64, f64)> = Vec::new();
        let eps = 1e-9 * self.span;
        if v != 0.0 {
            for x in [self.x0, self.x1()] {
                let y = -(u * x + w) / v;
                if y >= self.y0 - eps && y <= self.y1() + eps {
                    hits.push((x, y));
                }
            }
        }
        if u != 0.0 {
            for y in [self.y0, self.y1()] {
                let x = -(v * y + w) / u;
                if x >= self.x0 - eps && x <= self.x1() + eps {
                    hits.push((x, y));
                }
            }
        }
        let mut best: Option<[(f64, f64); 2]> = None;
        let mut far = -1.0;
        for (i, a) in hits.iter().enumerate() {
            for b in &hits[i + 1..] {
                let d = (a.0 - b.0).powi(2) + (a.1 - b.1).powi(2);
                if d > far {
                    far = d;
                    best = Some([*a, *b]);
                }
            }
        }
        best
    }
}

fn f(x: &Rational) -> f64 {
    x.to_f64().expect("rationals convert to floating point")
}

fn line_f64(l: &QLine) -> (f64, f64, f64) {
    let (u, v, w) = l.coeffs();
    (f(u), f(v), f(w))
}

/// Closest point of the line to the origin.
fn foot(l: &QLine) -> (f64, f64) {
    let (u, v, w) = line_f64(l);
    let n = u * u + v * v;
    (-w * u / n, -w * v / n)
}

/// Integer coordinates `[α:β]` in a fixed order, distinct up to scaling.
fn member_coords() -> impl Iterator<Item = (i64, i64)> {
    let base = [(1, 0), (0, 1)].into_iter();
    let rest = (1i64..).flat_map(|n| (1..=n).flat_map(move |k| [(k, n), (k, -n), (n, k), (n, -k)]));
    let mut seen = BTreeSet::new();
    base.chain(rest).filter(move |&(a, b)| {
        let g = num_integer::gcd(a, b);
        seen.insert((a / g, b / g))
    })
}

fn member(p: &QPencil, (a, b): (i64, i64)) -> QQuadratic {
    let q = |n: i64| Rational::from_integer(n.into());
    p.member(&NetCoords::new(q(a), q(b), q(0)).expect("(α, β) ≠ 0"))
}

fn sampled_members(p: &QPencil, n: usize) -> Vec<QQuadratic> {
    member_coords().take(n).map(|c| member(p, c)).collect()
}

/// Distinct degenerations of the first members of the pencil.
fn sampled_pairs(p: &QPencil, n: usize) -> Vec<LinePair<Rational>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for c in member_coords().take(64 * n.max(1)) {
        if out.len() == n {
            break;
        }
        let pair = match degenerations(&member(p, c)) {
            Degenerations::Hyperbola { asymptotes, .. } => asymptotes,
            Degenerations::ParallelFamily(form) => parallel_sample(&form).1,
            Degenerations::None => continue,
        };
        if seen.insert(pair.clone()) {
            out.push(pair);
        }
    }
    out
}

/// Polylines tracing the zero set of `g` across the window.
fn trace(g: &QQuadratic, w: &Window) -> Vec<Vec<(f64, f64)>> {
    let [a, b, c, d, e, k] = g.coeffs().clone().map(|x| f(&x));
    let mut branches: Vec<Vec<(f64, f64)>> = Vec::new();
    let mut current: [Vec<(f64, f64)>; 2] = [Vec::new(), Vec::new()];
    let flush = |run: &mut Vec<(f64, f64)>, out: &mut Vec<Vec<(f64, f64)>>| {
        if run.len() > 1 {
            out.push(std::mem::take(run));
        }
        run.clear();
    };
    if c == 0.0 && b == 0.0 {
        // a·x² + d·x + k + e·y = 0 with e = 0 is a pair of vertical lines
        if e == 0.0 {
            let disc = d * d - 4.0 * a * k;
            if disc >= 0.0 {
                for x in [
                    (-d + disc.sqrt()) / (2.0 * a),
                    (-d - disc.sqrt()) / (2.0 * a),
                ] {
                    branches.push(vec![(x, w.y0), (x, w.y1())]);
                }
            }
            return branches;
        }
    }
    if c == 0.0 && b != 0.0 {
        // the vertical line b·x + e = 0 is a component when the rest vanishes on it
        let x = -e / b;
        if (a * x * x + d * x + k).abs() <= 1e-12 * (a.abs() + d.abs() + k.abs()).max(1.0) {
            branches.push(vec![(x, w.y0), (x, w.y1())]);
        }
    }
    let disc_at = |x: f64| (b * x + e).powi(2) - 4.0 * c * (a * x * x + d * x + k);
    let mut prev_disc = 0.0;
    let mut prev_den: Option<f64> = None;
    for i in 0..=STEPS {
        let x = w.x0 + w.span * i as f64 / STEPS as f64;
        let (lin, cst) = (b * x + e, a * x * x + d * x + k);
        if c == 0.0 {
            let [run, _] = &mut current;
            if prev_den.is_some_and(|p| p * lin <= 0.0) || lin == 0.0 {
                flush(run, &mut branches);
            }
            prev_den = Some(lin);
            if lin != 0.0 {
                let y = -cst / lin;
                if w.near(x, y) {
                    run.push((x, y));
                } else {
                    flush(run, &mut branches);
                }
            }
            continue;
        }
        let disc = disc_at(x);
        if i > 0 && (disc < 0.0) != (prev_disc < 0.0) {
            // close both branches at the vertical tangent between samples
            let (mut lo, mut hi) = (x - w.span / STEPS as f64, x);
            for _ in 0..50 {
                let mid = (lo + hi) / 2.0;
                if (disc_at(mid) < 0.0) == (disc_at(lo) < 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let xt = if disc < 0.0 { lo } else { hi };
            let yt = -(b * xt + e) / (2.0 * c);
            for run in current.iter_mut() {
                run.push((xt, yt));
            }
        }
        prev_disc = disc;
        for (s, run) in [1.0, -1.0].into_iter().zip(current.iter_mut()) {
            if disc < 0.0 {
                flush(run, &mut branches);
                continue;
            }
            let y = (-lin + s * disc.sqrt()) / (2.0 * c);
            if w.near(x, y) {
                run.push((x, y));
            } else {
                flush(run, &mut branches);
            }
        }
    }
    for run in current.iter_mut() {
        flush(run, &mut branches);
    }
    branches
}

struct Svg {
    body: String,
    window: Window,
}

impl Svg {
    fn new(window: Window) -> Self {
        let mut body = String::new();
        writeln!(
            body,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
            s = SIZE
        )
        .unwrap();
        writeln!(
            body,
            r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#
        )
        .unwrap();
        Svg { body, window }
    }

    fn polyline(&mut self, pts: &[(f64, f64)]) {
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| {
                let (px, py) = self.window.px(x, y);
                format!("{px:.2},{py:.2}")
            })
            .collect();
        writeln!(
            self.body,
            r#"<polyline class="conic" fill="none" stroke="black" stroke-width="1.5" points="{}"/>"#,
            coords.join(" ")
        )
        .unwrap();
    }

    fn pair(&mut self, pair: &LinePair<Rational>) {
        writeln!(self.body, r#"<g class="pair"><title>{pair}</title>"#).unwrap();
        for l in pair.lines() {
            self.line(l);
        }
        self.body.push_str("</g>\n");
    }

    fn line(&mut self, l: &QLine) {
        let [(ax, ay), (bx, by)] = self
            .window
            .clip(line_f64(l))
            .expect("the window contains a point of every line");
        let (x1, y1) = self.window.px(ax, ay);
        let (x2, y2) = self.window.px(bx, by);
        writeln!(
            self.body,
            r#"<line class="component" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="1"/>"#
        )
        .unwrap();
    }

    fn dot(&mut self, (x, y): (f64, f64), class: &str, fill: &str) {
        let (cx, cy) = self.window.px(x, y);
        writeln!(
            self.body,
            r#"<circle class="{class}" cx="{cx:.2}" cy="{cy:.2}" r="4" fill="{fill}" stroke="black" stroke-width="1"/>"#
        )
        .unwrap();
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

fn point_f64(p: &bisector_core::Point<Rational>) -> (f64, f64) {
    (f(&p.x), f(&p.y))
}

/// Real roots of `a·t² + b·t + c`.
fn real_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    if a == 0.0 {
        return if b == 0.0 { vec![] } else { vec![-c / b] };
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return vec![];
    }
    vec![
        (-b + disc.sqrt()) / (2.0 * a),
        (-b - disc.sqrt()) / (2.0 * a),
    ]
}

/// The center, or the origin, and the crossings of the conic with the
/// horizontal and vertical lines through it.
fn landmarks(g: &QQuadratic) -> Vec<(f64, f64)> {
    let (cx, cy) = center(g).map(|p| point_f64(&p)).unwrap_or((0.0, 0.0));
    let [a, b, c, d, e, k] = g.coeffs().clone().map(|x| f(&x));
    let mut out = vec![(cx, cy)];
    for x in real_roots(a, b * cy + d, c * cy * cy + e * cy + k) {
        out.push((x, cy));
    }
    for y in real_roots(c, b * cx + e, a * cx * cx + d * cx + k) {
        out.push((cx, y));
    }
    out
}

fn render_conics(members: &[QQuadratic]) -> String {
    let points: Vec<(f64, f64)> = members.iter().flat_map(landmarks).collect();
    let mut svg = Svg::new(Window::around(&points));
    for g in members {
        for branch in trace(g, &svg.window) {
            svg.polyline(&branch);
        }
    }
    svg.finish()
}

fn render_pairs(pairs: &[LinePair<Rational>]) -> String {
    let products: Vec<QQuadratic> = pairs.iter().map(LinePair::product).collect();
    let mut midpoints = Vec::new();
    for pair in pairs {
        for l in pair.lines() {
            if let Some(Midpoint::Finite(p)) = bisects_set(l, &products) {
                midpoints.push(point_f64(&p));
            }
        }
    }
    let centers: Vec<(f64, f64)> = pairs
        .iter()
        .filter(|p| p.kind() == PairKind::Crossing)
        .filter_map(|p| p.center())
        .map(|p| point_f64(&p))
        .collect();
    let mut points: Vec<(f64, f64)> = pairs.iter().flat_map(|p| p.lines().map(foot)).collect();
    points.extend(&midpoints);
    points.extend(&centers);
    let mut svg = Svg::new(Window::around(&points));
    for pair in pairs {
        svg.pair(pair);
    }
    for m in midpoints {
        svg.dot(m, "midpoint", "black");
    }
    for c in centers {
        svg.dot(c, "center", "white");
    }
    svg.finish()
}

pub fn render(scene: &Scene, samples: usize) -> String {
    match scene {
        Scene::Pencil(p) => render_conics(&sampled_members(p, samples)),
        Scene::AsymptoticPencil(p) => render_pairs(&sampled_pairs(p, samples)),
        Scene::Arrangement(pairs) => render_pairs(pairs),
    }
}
