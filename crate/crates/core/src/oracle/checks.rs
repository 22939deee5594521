//! One checker per verified statement. Each returns a tally of instances,
//! confirming witnesses and counterexamples with replayable inputs.

use std::collections::{BTreeSet, HashMap};

use serde_json::{json, Value};

use super::arrangements::{maximal_arrangements, Universe};
use super::brute::{
    brute_asymptotic, brute_bisects, brute_is_trivial, brute_mid, brute_midline, combine,
    dependent, det3, fold_mids, hom_eval, line_product, lines_parallel, meets, net_members,
    points_at_infinity_count, quadratic_classes, Plane, ReducibleTable,
};
use super::sample::Sampler;
use crate::binary::Param;
use crate::bisector::{
    bisects_set, classify_trivial_arrangement, desargues_involution, fit_involution,
    pair_through_line, ArrangementTriviality,
};
use crate::conic::{
    classify, degenerations, restrict, ConicKind, Degenerations, LinePair, MidResult, Quadratic,
};
use crate::error::Error;
use crate::field::{Field, Fp};
use crate::geometry::{Line, Midpoint, ProjectivePoint};
use crate::pencil::{
    find_hyperbolas, triviality_intensional, AsymptoticPencil, DeltaCubic, Pencil, Triviality,
};
use crate::quad::{bisects_quadrilateral, quadrilateral_of};

const MAX_WITNESSES: usize = 8;
const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub instances: usize,
    pub failures: usize,
    pub witnesses: Vec<Value>,
    pub counterexamples: Vec<Value>,
}

impl Tally {
    /// Records one instance; any problem makes it a counterexample.
    fn instance(&mut self, input: Value, problems: Vec<Value>) {
        self.instances += 1;
        if problems.is_empty() {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(input);
            }
        } else {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples
                    .push(json!({"input": input, "problems": problems}));
            }
        }
    }

    fn note(&mut self, v: Value) {
        self.witnesses.push(v);
    }
}

fn s<T: std::fmt::Display>(x: &T) -> String {
    x.to_string()
}

fn pencil_json(p: &Pencil<Fp>) -> Value {
    json!([s(p.f1()), s(p.f2())])
}

fn pairs_json<'a>(pairs: impl IntoIterator<Item = &'a LinePair<Fp>>) -> Value {
    pairs.into_iter().map(|p| json!(s(p))).collect()
}

fn mid_json(m: &Option<Midpoint<Fp>>) -> Value {
    crate::bisector::midpoint_json(m.as_ref())
}

fn required_hyperbolas(plane: &Plane) -> usize {
    if plane.p > 3 {
        2
    } else {
        1
    }
}

fn example_pencil(plane: &Plane) -> Pencil<Fp> {
    let q = |t: &str| Quadratic::parse(&plane.spec, t).expect("literal parses");
    Pencil::new(q("x^2+y"), q("x*y+y^2")).expect("independent")
}

fn crossing_count(pairs: &BTreeSet<LinePair<Fp>>) -> usize {
    pairs
        .iter()
        .filter(|p| !lines_parallel(p.first(), p.second()))
        .count()
}

pub(crate) fn prop_2_2(plane: &Plane) -> Tally {
    let table = ReducibleTable::new(plane);
    let mut groups: HashMap<[Fp; 5], Vec<&LinePair<Fp>>> = HashMap::new();
    for (q, pair) in table.iter() {
        let c = q.coeffs();
        groups
            .entry([c[0], c[1], c[2], c[3], c[4]])
            .or_default()
            .push(pair);
    }
    let mut tally = Tally::default();
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for f in quadratic_classes(plane) {
        let c = f.coeffs();
        let degens: &[&LinePair<Fp>] = groups
            .get(&[c[0], c[1], c[2], c[3], c[4]])
            .map_or(&[], |v| v.as_slice());
        let n_inf = points_at_infinity_count(plane, &f);
        let lib = degenerations(&f);
        let kind = classify(&f).kind;
        let mut problems = Vec::new();
        let expected_kind = match n_inf {
            2 => ConicKind::Hyperbola,
            1 => ConicKind::Parabola,
            _ => ConicKind::Ellipse,
        };
        if kind != expected_kind {
            problems.push(json!(format!(
                "classified {} with {n_inf} points at infinity",
                kind.as_str()
            )));
        }
        let category = match n_inf {
            2 => {
                let ok = match (degens, &lib) {
                    ([pair], Degenerations::Hyperbola { asymptotes, .. }) => {
                        !lines_parallel(pair.first(), pair.second()) && asymptotes == *pair
                    }
                    _ => false,
                };
                if !ok {
                    problems.push(json!({"expected": "exactly the asymptotes", "found": pairs_json(degens.iter().copied())}));
                }
                "hyperbola"
            }
            1 if det3(&f).is_zero() => {
                let midlines: BTreeSet<Option<Line<Fp>>> =
                    degens.iter().map(|p| brute_midline(p)).collect();
                let ok = match (midlines.iter().next(), &lib) {
                    (Some(Some(m)), Degenerations::ParallelFamily(pf)) => {
                        midlines.len() == 1 && pf.midline() == *m
                    }
                    _ => false,
                };
                if !ok {
                    problems.push(json!({"expected": "parallel pairs on one midline", "found": pairs_json(degens.iter().copied())}));
                }
                "degenerate parabola"
            }
            n => {
                if !degens.is_empty() || lib != Degenerations::None {
                    problems.push(json!({"expected": "no degenerations", "found": pairs_json(degens.iter().copied())}));
                }
                if n == 1 {
                    "parabola"
                } else {
                    "ellipse"
                }
            }
        };
        *counts.entry(category).or_default() += 1;
        let input =
            json!({"quadratic": s(&f), "category": category, "degenerations": degens.len()});
        tally.instance(input, problems);
    }
    let mut summary: Vec<_> = counts.into_iter().collect();
    summary.sort();
    tally.note(json!({"classes": summary.into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>()}));
    tally
}

pub(crate) fn example_3_6(plane: &Plane) -> Tally {
    let mut tally = Tally::default();
    let p = example_pencil(plane);
    let table = ReducibleTable::new(plane);
    let mut members = Vec::new();
    for (alpha, beta) in plane.projective_line() {
        let g = combine(alpha, p.f1(), beta, p.f2(), plane.el(0)).expect("independent generators");
        members.push((alpha, beta, g.canonical()));
    }
    let classes: BTreeSet<_> = members.iter().map(|m| m.2.clone()).collect();
    let mut problems = Vec::new();
    if classes.len() != 4 {
        problems.push(json!(format!("{} member classes", classes.len())));
    }
    let q = |t: &str| {
        Quadratic::parse(&plane.spec, t)
            .expect("literal parses")
            .canonical()
    };
    let zero_set = |g: &Quadratic<Fp>| -> BTreeSet<(u64, u64)> {
        let mut out = BTreeSet::new();
        for x in &plane.elems {
            for y in &plane.elems {
                if g.eval(x, y).is_zero() {
                    out.insert((x.value(), y.value()));
                }
            }
        }
        out
    };
    let expected_ellipse: BTreeSet<(u64, u64)> = [(0, 0), (0, 1), (1, 1), (1, 2)].into();
    let mut records = Vec::new();
    for (alpha, beta, g) in &members {
        let n_inf = points_at_infinity_count(plane, g);
        let degenerate = det3(g).is_zero();
        let label = match (n_inf, degenerate) {
            (2, true) => "degenerate hyperbola",
            (2, false) => "hyperbola",
            (1, true) => "degenerate parabola",
            (1, false) => "parabola",
            (_, true) => "degenerate ellipse",
            (_, false) => "ellipse",
        };
        let zs = zero_set(g);
        let expected = if *g == q("x^2+y") || *g == q("(y+2x)^2+y") {
            label == "parabola"
        } else if *g == q("x*y+y^2") {
            label == "degenerate hyperbola" && table.lookup(g).is_some()
        } else {
            label == "ellipse" && zs == expected_ellipse
        };
        if !expected {
            problems.push(json!(format!("[{alpha}:{beta}] {g} classified {label}")));
        }
        records.push(json!({
            "coords": format!("[{alpha}:{beta}]"),
            "quadratic": s(g),
            "class": label,
            "zero_set": zs.iter().map(|(x, y)| json!([x, y])).collect::<Vec<_>>(),
        }));
    }
    let brute = brute_asymptotic(plane, &table, p.f1(), p.f2());
    let lib = AsymptoticPencil::new(p.clone()).pairs().unwrap_or_default();
    if brute.len() != 1 || lib != brute {
        problems
            .push(json!({"asymptotic_pencil": pairs_json(&brute), "library": pairs_json(&lib)}));
    }
    let input = json!({"pencil": pencil_json(&p), "members": records, "asymptotic_pencil": pairs_json(&brute)});
    tally.instance(input, problems);
    tally
}

pub(crate) fn prop_3_4(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let req = required_hyperbolas(plane);
    let mut pencils: Vec<Pencil<Fp>> = Vec::new();
    if plane.p == 3 {
        pencils.push(example_pencil(plane));
    }
    pencils.extend((0..count).map(|_| sampler.pencil()));
    let mut minimum = usize::MAX;
    for p in pencils {
        let mut problems = Vec::new();
        let hs = find_hyperbolas(&p);
        for h in &hs {
            let direct = combine(h.alpha, p.f1(), h.beta, p.f2(), plane.el(0));
            if direct.as_ref() != Some(&h.quadratic) {
                problems.push(json!(format!(
                    "{} is not {}·f1 + {}·f2",
                    h.quadratic, h.alpha, h.beta
                )));
            }
            if points_at_infinity_count(plane, &h.quadratic) != 2 {
                problems.push(json!(format!("{} is not a hyperbola", h.quadratic)));
            }
        }
        if hs.len() < req {
            problems.push(json!(format!(
                "{} hyperbolas found, {req} required",
                hs.len()
            )));
        }
        if hs.len() >= 2 && dependent(&hs[0].quadratic, &hs[1].quadratic) {
            problems.push(json!("returned hyperbolas are dependent"));
        }
        let directions = plane
            .projective_line()
            .into_iter()
            .filter_map(|(a, b)| combine(a, p.f1(), b, p.f2(), plane.el(0)))
            .filter(|g| points_at_infinity_count(plane, g) == 2)
            .count();
        minimum = minimum.min(directions);
        if directions < req {
            problems.push(json!(format!("only {directions} hyperbola directions")));
        }
        let input = json!({"pencil": pencil_json(&p), "hyperbolas": hs.iter().map(|h| s(&h.quadratic)).collect::<Vec<_>>(), "hyperbola_directions": directions});
        tally.instance(input, problems);
    }
    tally.note(
        json!({"minimum_hyperbola_directions": minimum, "bound": req, "tight": minimum == req}),
    );
    tally
}

pub(crate) fn cor_3_5(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let table = ReducibleTable::new(plane);
    let req = required_hyperbolas(plane);
    let mut pencils: Vec<Pencil<Fp>> = Vec::new();
    if plane.p == 3 {
        pencils.push(example_pencil(plane));
    }
    pencils.extend((0..count).map(|_| sampler.pencil()));
    let mut minimum = usize::MAX;
    for p in pencils {
        let mut problems = Vec::new();
        let brute = brute_asymptotic(plane, &table, p.f1(), p.f2());
        let lib = AsymptoticPencil::new(p.clone()).pairs().unwrap_or_default();
        if lib != brute {
            problems.push(json!({"library": pairs_json(&lib), "enumerated": pairs_json(&brute)}));
        }
        let n = crossing_count(&brute);
        minimum = minimum.min(n);
        if n < req {
            problems.push(json!(format!("{n} degenerate hyperbolas, {req} required")));
        }
        tally.instance(
            json!({"pencil": pencil_json(&p), "degenerate_hyperbolas": n}),
            problems,
        );
    }
    tally.note(
        json!({"minimum_degenerate_hyperbolas": minimum, "bound": req, "tight": minimum == req}),
    );
    tally
}

pub(crate) fn prop_3_7(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let table = ReducibleTable::new(plane);
    for _ in 0..count {
        let p = sampler.pencil();
        let delta = DeltaCubic::of(&p);
        let mut problems = Vec::new();
        let mut phi_nonzero = false;
        for (alpha, beta) in plane.projective_line() {
            let h = combine(alpha, p.f1(), beta, p.f2(), plane.el(0)).expect("independent");
            let c = h.coeffs();
            let minor = c[0] * c[2] - (c[1] * c[1]) / plane.el(4);
            phi_nonzero |= !minor.is_zero();
            if delta.phi_at(&alpha, &beta) != minor {
                problems.push(json!(format!(
                    "Φ({alpha},{beta}) disagrees with the leading minor"
                )));
            }
        }
        if !phi_nonzero || delta.phi_is_zero() {
            problems.push(json!("Φ vanishes identically"));
        }
        for m in net_members(plane, p.f1(), p.f2()) {
            let d = delta.eval(&m.lambda, &m.alpha, &m.beta);
            let det = det3(&m.quadratic);
            if d != det {
                problems.push(json!(format!(
                    "Δ = {d} but det M = {det} at [{}:{}:{}]",
                    m.alpha, m.beta, m.lambda
                )));
            }
            if table.lookup(&m.quadratic).is_some() && !d.is_zero() {
                problems.push(json!(format!("reducible member {} has Δ ≠ 0", m.quadratic)));
            }
        }
        tally.instance(json!({"pencil": pencil_json(&p)}), problems);
    }
    tally
}

pub(crate) fn prop_4_3(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let table = ReducibleTable::new(plane);
    let (mut double_lines, mut trivial, mut skipped) = (0usize, 0usize, 0usize);
    for _ in 0..count {
        let p = sampler.concentric_pencil();
        let brute = brute_asymptotic(plane, &table, p.f1(), p.f2());
        let brute_trivial = brute_is_trivial(&brute);
        let mut problems = Vec::new();
        let verdict = match triviality_intensional(&p) {
            Err(Error::InsufficientData(_)) => {
                skipped += 1;
                continue;
            }
            Err(e) => {
                problems.push(json!(e.to_string()));
                Value::Null
            }
            Ok(t) => {
                if t.is_trivial() != brute_trivial {
                    problems.push(json!(format!(
                        "decided trivial={} but enumeration says {brute_trivial}",
                        t.is_trivial()
                    )));
                }
                match &t {
                    Triviality::DoubleLine(w) => {
                        double_lines += 1;
                        if !w.verify_expansion() {
                            problems.push(json!("double-line identity fails on expansion"));
                        }
                        let dl = w.double_line();
                        if dl.first() != dl.second() || !brute.contains(&dl) {
                            problems.push(json!(format!("{dl} is not a double line of the net")));
                        }
                        json!({"double_line": s(&dl), "alpha": s(&w.alpha), "beta": s(&w.beta)})
                    }
                    Triviality::Trivial { center } => {
                        trivial += 1;
                        json!({"trivial": s(center)})
                    }
                    Triviality::DifferentCenters(..) => json!("different centers"),
                    Triviality::ParallelPair(pair) => json!({"parallel_pair": s(pair)}),
                }
            }
        };
        tally.instance(
            json!({"pencil": pencil_json(&p), "verdict": verdict}),
            problems,
        );
    }
    tally.note(json!({"double_line_witnesses": double_lines, "trivial": trivial, "single_hyperbola_skipped": skipped}));
    tally
}

pub(crate) fn lemma_3_2(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let table = ReducibleTable::new(plane);
    for _ in 0..count {
        let p = sampler.pencil();
        let (g1, g2) = loop {
            let [a, b, c, d] = [
                sampler.elem(),
                sampler.elem(),
                sampler.elem(),
                sampler.elem(),
            ];
            if (a * d - b * c).is_zero() {
                continue;
            }
            let g1 = combine(a, p.f1(), b, p.f2(), sampler.elem());
            let g2 = combine(c, p.f1(), d, p.f2(), sampler.elem());
            if let (Some(g1), Some(g2)) = (g1, g2) {
                break (g1, g2);
            }
        };
        let original = brute_asymptotic(plane, &table, p.f1(), p.f2());
        let regenerated = brute_asymptotic(plane, &table, &g1, &g2);
        let lib = AsymptoticPencil::new(p.clone()).pairs().unwrap_or_default();
        let mut problems = Vec::new();
        if original != regenerated {
            problems
                .push(json!({"from_f": pairs_json(&original), "from_g": pairs_json(&regenerated)}));
        }
        if lib != original {
            problems
                .push(json!({"library": pairs_json(&lib), "enumerated": pairs_json(&original)}));
        }
        tally.instance(json!({"pencil": pencil_json(&p), "generators": [s(&g1), s(&g2)], "pairs": original.len()}), problems);
    }
    tally
}

pub(crate) fn lemma_3_3(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let table = ReducibleTable::new(plane);
    for i in 0..count {
        let p = match i % 3 {
            0 => sampler.pencil(),
            1 => sampler.reducible_pencil(),
            _ => sampler.shared_line_pencil(),
        };
        let pairs: Vec<_> = brute_asymptotic(plane, &table, p.f1(), p.f2())
            .into_iter()
            .collect();
        let mut problems = Vec::new();
        for (i, a) in pairs.iter().enumerate() {
            for b in &pairs[i + 1..] {
                let dep = dependent(
                    &line_product(a.first(), a.second()),
                    &line_product(b.first(), b.second()),
                );
                let same_midline =
                    matches!((brute_midline(a), brute_midline(b)), (Some(x), Some(y)) if x == y);
                if dep != same_midline {
                    problems.push(json!({"pairs": [s(a), s(b)], "dependent": dep, "same_midline": same_midline}));
                }
            }
        }
        tally.instance(
            json!({"pencil": pencil_json(&p), "pairs": pairs.len()}),
            problems,
        );
    }
    tally
}

pub(crate) fn lemma_4_5(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let table = ReducibleTable::new(plane);
    let mut with_shared = 0usize;
    for i in 0..count {
        let p = match i % 4 {
            0 | 1 => sampler.shared_line_pencil(),
            2 => sampler.reducible_pencil(),
            _ => sampler.pencil(),
        };
        let pairs: Vec<_> = brute_asymptotic(plane, &table, p.f1(), p.f2())
            .into_iter()
            .collect();
        let crossing = |x: &LinePair<Fp>| !lines_parallel(x.first(), x.second());
        let share = |x: &LinePair<Fp>, y: &LinePair<Fp>| x.lines().iter().any(|l| y.contains(l));
        let (mut c1, mut c2, mut c3) = (false, false, false);
        for (i, a) in pairs.iter().enumerate() {
            for b in &pairs[i + 1..] {
                if share(a, b) {
                    c3 = true;
                    match (crossing(a), crossing(b)) {
                        (true, true) => c1 = true,
                        (true, false) | (false, true) => c2 = true,
                        _ => {}
                    }
                }
            }
        }
        let mut problems = Vec::new();
        if c1 != c2 || c2 != c3 {
            problems.push(
                json!({"two_hyperbolas": c1, "hyperbola_and_parabola": c2, "two_conics": c3}),
            );
        }
        let hyperbolas: Vec<_> = pairs.iter().filter(|x| crossing(x)).collect();
        let common: Vec<&Line<Fp>> = hyperbolas
            .first()
            .map(|h| {
                h.lines()
                    .into_iter()
                    .filter(|l| hyperbolas.iter().all(|k| k.contains(l)))
                    .collect()
            })
            .unwrap_or_default();
        let lib = crate::pencil::shared_line(&AsymptoticPencil::new(p.clone()));
        match (c3, &lib) {
            (true, Ok(Some(l))) => {
                with_shared += 1;
                if !common.contains(&l) {
                    problems.push(json!(format!("{l} is not on every degenerate hyperbola")));
                }
            }
            (false, Ok(None)) => {}
            _ => problems.push(json!({"shared_by_enumeration": c3, "library": format!("{lib:?}")})),
        }
        tally.instance(json!({"pencil": pencil_json(&p), "shared": c3}), problems);
    }
    tally.note(json!({"pencils_with_shared_line": with_shared}));
    tally
}

pub(crate) fn prop_4_6(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let table = ReducibleTable::new(plane);
    let mut nontrivial = 0usize;
    for i in 0..count {
        let p = if i % 4 == 3 {
            sampler.concentric_pencil()
        } else {
            sampler.nontrivial_pencil()
        };
        let brute = brute_asymptotic(plane, &table, p.f1(), p.f2());
        let mut problems = Vec::new();
        let result = quadrilateral_of(&AsymptoticPencil::new(p.clone()));
        let out = match (brute_is_trivial(&brute), result) {
            (true, Err(Error::Trivial)) => json!("trivial"),
            (false, Ok(q)) => {
                nontrivial += 1;
                if plane.p > 3 && q.is_degenerate() {
                    problems.push(json!("degenerate quadrilateral"));
                }
                let [g1, g2] = q.products();
                let regenerated = brute_asymptotic(plane, &table, &g1, &g2);
                if regenerated != brute {
                    problems.push(json!({"regenerated": pairs_json(&regenerated), "input": pairs_json(&brute)}));
                }
                json!(s(&q))
            }
            (t, r) => {
                problems.push(json!({"trivial": t, "result": format!("{r:?}")}));
                Value::Null
            }
        };
        tally.instance(
            json!({"pencil": pencil_json(&p), "quadrilateral": out}),
            problems,
        );
    }
    tally.note(json!({"nontrivial_round_trips": nontrivial}));
    tally
}

pub(crate) fn lemma_5_2(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let table = ReducibleTable::new(plane);
    for _ in 0..count {
        let p = sampler.reducible_pencil();
        let gens = [p.f1().clone(), p.f2().clone()];
        let brute = brute_asymptotic(plane, &table, p.f1(), p.f2());
        let mut problems = Vec::new();
        let mut members = 0;
        for line in &plane.lines {
            if !gens.iter().all(|f| meets(plane, f, line)) {
                problems.push(json!(format!("{line} misses a reducible generator")));
                continue;
            }
            let bisects = brute_bisects(plane, line, &gens).is_some();
            let component = brute.iter().any(|pair| pair.contains(line));
            let solved = pair_through_line(line, &p);
            if bisects != solved.is_some() || bisects != component {
                problems.push(json!({"line": s(line), "bisects": bisects, "solved": solved.is_some(), "component": component}));
            }
            if let Some(m) = solved {
                members += 1;
                let member = combine(
                    m.coords.alpha,
                    p.f1(),
                    m.coords.beta,
                    p.f2(),
                    m.coords.lambda,
                );
                let product = line_product(m.pair.first(), m.pair.second());
                let matches = member.is_some_and(|g| g.canonical() == product.canonical());
                if !m.pair.contains(line) || !brute.contains(&m.pair) || !matches {
                    problems
                        .push(json!({"line": s(line), "pair": s(&m.pair), "coords": s(&m.coords)}));
                }
            }
        }
        tally.instance(
            json!({"pencil": pencil_json(&p), "lines_in_members": members}),
            problems,
        );
    }
    tally
}

pub(crate) fn thm_5_4(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let mut bisectors = 0usize;
    for i in 0..count {
        let p = if i % 2 == 0 {
            sampler.pencil()
        } else {
            sampler.reducible_pencil()
        };
        let gens = [p.f1().clone(), p.f2().clone()];
        let members: Vec<Quadratic<Fp>> = net_members(plane, p.f1(), p.f2())
            .into_iter()
            .map(|m| m.quadratic)
            .collect();
        let mut problems = Vec::new();
        for line in &plane.lines {
            if !gens.iter().all(|f| meets(plane, f, line)) {
                continue;
            }
            let m = brute_bisects(plane, line, &gens);
            if bisects_set(line, &gens) != m {
                problems.push(json!({"line": s(line), "library": mid_json(&bisects_set(line, &gens)), "enumerated": mid_json(&m)}));
            }
            let Some(m) = m else { continue };
            bisectors += 1;
            let mids: Vec<MidResult<Fp>> =
                members.iter().map(|g| brute_mid(plane, g, line)).collect();
            let whole = fold_mids(&mids);
            let agrees = match &whole {
                Some(w) => m == Midpoint::Undetermined || *w == m,
                None => false,
            };
            if !agrees {
                problems.push(json!({"line": s(line), "generators": mid_json(&Some(m)), "net": mid_json(&whole)}));
            }
        }
        tally.instance(json!({"pencil": pencil_json(&p)}), problems);
    }
    tally.note(json!({"bisecting_lines_checked": bisectors}));
    tally
}

pub(crate) fn cor_5_5(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    for _ in 0..count {
        let q = sampler.quadrilateral();
        let [g1, g2] = q.products();
        let members: Vec<Quadratic<Fp>> = net_members(plane, &g1, &g2)
            .into_iter()
            .map(|m| m.quadratic)
            .collect();
        let mut problems = Vec::new();
        for line in &plane.lines {
            let lib = bisects_quadrilateral(line, &q);
            let brute = brute_bisects(plane, line, &members);
            let ok = match (&lib, &brute) {
                (Some(Midpoint::Undetermined), Some(_)) => true,
                (Some(a), Some(b)) => a == b,
                (None, None) => true,
                _ => false,
            };
            if !ok {
                problems.push(json!({"line": s(line), "quadrilateral": mid_json(&lib), "net": mid_json(&brute)}));
            }
        }
        tally.instance(json!({"quadrilateral": s(&q)}), problems);
    }
    tally
}

fn vanishes_at(f: &Quadratic<Fp>, v: &ProjectivePoint<Fp>) -> bool {
    match v.to_affine() {
        Some(pt) => f.eval(&pt.x, &pt.y).is_zero(),
        None => {
            let (x, y, _) = v.coords();
            hom_eval(f, *x, *y).is_zero()
        }
    }
}

pub(crate) fn cor_5_6(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let classes = quadratic_classes(plane);
    let mut done = 0;
    while done < count {
        let q = sampler.quadrilateral();
        let vertices = q.vertices();
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() < 4 || vertices.iter().filter(|v| !v.is_finite()).count() > 1 {
            continue;
        }
        done += 1;
        let through: Vec<&Quadratic<Fp>> = classes
            .iter()
            .filter(|f| vertices.iter().all(|v| vanishes_at(f, v)))
            .collect();
        let mut problems = Vec::new();
        for line in &plane.lines {
            let Some(m) = bisects_quadrilateral(line, &q) else {
                continue;
            };
            let mids: Vec<MidResult<Fp>> =
                through.iter().map(|f| brute_mid(plane, f, line)).collect();
            let whole = fold_mids(&mids);
            let ok = match &whole {
                Some(w) => m == Midpoint::Undetermined || *w == m,
                None => false,
            };
            if !ok {
                problems.push(json!({"line": s(line), "quadrilateral": mid_json(&Some(m)), "conics": mid_json(&whole)}));
            }
        }
        let input = json!({
            "quadrilateral": s(&q),
            "vertices": vertices.iter().map(s).collect::<Vec<_>>(),
            "conics_through_vertices": through.len(),
        });
        tally.instance(input, problems);
    }
    tally
}

/// Parameters on `line` where `g` vanishes, read off point by point.
fn crossing_parameters(
    plane: &Plane,
    g: &Quadratic<Fp>,
    line: &Line<Fp>,
) -> Option<Vec<Param<Fp>>> {
    let mut roots: Vec<Param<Fp>> = plane
        .elems
        .iter()
        .filter(|t| {
            let pt = line.point_at(t);
            g.eval(&pt.x, &pt.y).is_zero()
        })
        .map(|t| Param::Finite(*t))
        .collect();
    if roots.len() == plane.elems.len() {
        return None;
    }
    let (dx, dy) = line.direction();
    if hom_eval(g, dx, dy).is_zero() {
        roots.push(Param::Infinity);
    }
    Some(roots)
}

pub(crate) fn cor_5_7(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let mut sampler = Sampler::new(plane, seed);
    let params: Vec<Param<Fp>> = plane
        .elems
        .iter()
        .map(|t| Param::Finite(*t))
        .chain([Param::Infinity])
        .collect();
    let (mut basepoint_lines, mut attempts, mut refits) = (0usize, 0usize, 0usize);
    while tally.instances < count && attempts < count * 50 {
        attempts += 1;
        let p = sampler.pencil();
        let line = sampler.line();
        let common = params.iter().any(|t| {
            [p.f1(), p.f2()]
                .iter()
                .all(|f| crossing_parameters(plane, f, &line).is_none_or(|r| r.contains(t)))
        });
        let input = json!({"pencil": pencil_json(&p), "line": s(&line)});
        let inv = match desargues_involution(&p, &line) {
            Err(Error::ThroughBasepoint) => {
                basepoint_lines += 1;
                continue;
            }
            Err(e) => {
                tally.instance(input, vec![json!(e.to_string())]);
                continue;
            }
            Ok(inv) => inv,
        };
        let mut problems = Vec::new();
        if common {
            problems.push(json!("line passes through a rational basepoint"));
        }
        for t in &params {
            if inv.apply(&inv.apply(t)) != *t {
                problems.push(json!(format!("not an involution at {t:?}")));
            }
        }
        let mut forms = Vec::new();
        for (alpha, beta) in plane.projective_line() {
            let g = combine(alpha, p.f1(), beta, p.f2(), plane.el(0)).expect("independent");
            let Some(roots) = crossing_parameters(plane, &g, &line) else {
                continue;
            };
            let conjugate = match roots.as_slice() {
                [a, b] => inv.apply(a) == *b,
                [a] => inv.apply(a) == *a,
                _ => true,
            };
            if !conjugate {
                problems.push(json!(format!(
                    "crossings of [{alpha}:{beta}] are not conjugate"
                )));
            }
            if alpha.is_zero() || beta.is_zero() {
                continue;
            }
            let r = restrict(&g, &line);
            if r.iter().any(|x| !x.is_zero()) {
                forms.push(r);
            }
        }
        let refit = forms.iter().enumerate().find_map(|(i, a)| {
            forms[i + 1..]
                .iter()
                .find_map(|b| fit_involution(a, b).ok())
        });
        if let Some(other) = refit {
            refits += 1;
            if !other.equivalent(&inv) {
                problems.push(json!(format!("refit gives {other}, original {inv}")));
            }
        }
        tally.instance(
            json!({"pencil": pencil_json(&p), "line": s(&line), "involution": s(&inv)}),
            problems,
        );
    }
    if tally.instances < count {
        tally.failures += 1;
        tally.counterexamples.push(json!(format!(
            "only {} usable instances in {attempts} attempts",
            tally.instances
        )));
    }
    tally.note(
        json!({"lines_through_basepoints_skipped": basepoint_lines, "refits_compared": refits}),
    );
    tally
}

pub(crate) fn lemma_6_2(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let u = Universe::new(plane.clone());
    let mut sampler = Sampler::new(plane, seed);
    let n_lines = plane.lines.len();
    let mut extensions = 0usize;
    while tally.instances < count {
        let (i, j) = (sampler.index(u.pairs.len()), sampler.index(u.pairs.len()));
        if i == j {
            continue;
        }
        let base = [i, j];
        if classify_trivial_arrangement(&u.to_pairs(&base)) != ArrangementTriviality::NonTrivial {
            continue;
        }
        let state = u.state_of(&base);
        let mut problems = Vec::new();
        for q in u.extensions(&base, &state) {
            extensions += 1;
            let [a, b] = u.ends[q];
            let partners = |l: usize| -> Vec<usize> {
                (0..n_lines)
                    .filter(|&m| {
                        let idx = u.index_of(&LinePair::new(
                            plane.lines[l].clone(),
                            plane.lines[m].clone(),
                        ));
                        !base.contains(&idx) && u.consistent(&u.add(&state, idx), &[i, j, idx])
                    })
                    .collect()
            };
            let (pa, pb) = (partners(a), partners(b));
            if pa != [b] && pb != [a] {
                let named = |l: usize, ms: &[usize]| json!({"line": s(&plane.lines[l]), "partners": ms.iter().map(|&m| s(&plane.lines[m])).collect::<Vec<_>>()});
                problems.push(
                    json!({"extension": s(&u.pairs[q]), "lines": [named(a, &pa), named(b, &pb)]}),
                );
            }
        }
        tally.instance(
            json!({"arrangement": pairs_json(&u.to_pairs(&base))}),
            problems,
        );
    }
    tally.note(json!({"extending_pairs_checked": extensions}));
    tally
}

pub(crate) fn thm_6_3(plane: &Plane, seed: u64, count: usize) -> Tally {
    let mut tally = Tally::default();
    let u = Universe::new(plane.clone());
    let table = ReducibleTable::new(plane);
    let mut sampler = Sampler::new(plane, seed);
    let maximal: Option<BTreeSet<BTreeSet<LinePair<Fp>>>> =
        (plane.p == 3).then(|| backward(&u, &table, &mut tally));
    for _ in 0..count {
        let p = sampler.nontrivial_pencil();
        let lib = AsymptoticPencil::new(p.clone()).pairs().unwrap_or_default();
        let brute = brute_asymptotic(plane, &table, p.f1(), p.f2());
        let mut problems = Vec::new();
        if lib != brute {
            problems.push(json!({"library": pairs_json(&lib), "enumerated": pairs_json(&brute)}));
        }
        let set: Vec<usize> = brute.iter().map(|x| u.index_of(x)).collect();
        let state = u.state_of(&set);
        if !u.consistent(&state, &set) {
            problems.push(json!("not a bisector arrangement"));
        }
        let ext = u.extensions(&set, &state);
        if !ext.is_empty() {
            problems.push(json!({"extended_by": pairs_json(ext.iter().map(|&q| &u.pairs[q]))}));
        }
        if let Some(max) = &maximal {
            if !max.contains(&brute) {
                problems.push(json!(
                    "missing from the exhaustive list of maximal arrangements"
                ));
            }
        }
        tally.instance(
            json!({"pencil": pencil_json(&p), "pairs": brute.len()}),
            problems,
        );
    }
    tally
}

/// Every maximal nontrivial arrangement is the asymptotic pencil of any two
/// of its independent members.
fn backward(
    u: &Universe,
    table: &ReducibleTable,
    tally: &mut Tally,
) -> BTreeSet<BTreeSet<LinePair<Fp>>> {
    let plane = &u.plane;
    let all = maximal_arrangements(u).expect("GF(3)");
    let mut found = BTreeSet::new();
    let mut trivial = 0usize;
    let mut failing_without_doubles = 0usize;
    for set in &all {
        let pairs = u.to_pairs(set);
        if classify_trivial_arrangement(&pairs) != ArrangementTriviality::NonTrivial {
            trivial += 1;
            continue;
        }
        let products: Vec<Quadratic<Fp>> = pairs
            .iter()
            .map(|x| line_product(x.first(), x.second()))
            .collect();
        let spanned = products.iter().enumerate().find_map(|(i, f)| {
            products[i + 1..]
                .iter()
                .find(|g| !dependent(f, g))
                .map(|g| brute_asymptotic(plane, table, f, g))
        });
        let as_set: BTreeSet<LinePair<Fp>> = pairs.iter().cloned().collect();
        let mut problems = Vec::new();
        if spanned.as_ref() != Some(&as_set) {
            problems.push(json!({"spanned": spanned.as_ref().map(pairs_json)}));
            if pairs.iter().all(|x| x.first() != x.second()) {
                failing_without_doubles += 1;
            }
        }
        tally.instance(json!({"maximal_arrangement": pairs_json(&pairs)}), problems);
        found.insert(as_set);
    }
    tally.note(
        json!({"maximal_arrangements": all.len(), "trivial": trivial,
            "nontrivial": found.len(),
            "mismatches_without_double_lines": failing_without_doubles,
        }),
    );
    found
}
