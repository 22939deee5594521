//! JSON reports for each subcommand, generic over the scalar field.

use bisector_core::bisector::{
    arrangement_report, bisects_set, desargues_involution, midpoint_json, pair_through_line,
};
use bisector_core::conic::{classify, degenerations, mid, Degenerations, ParabolicForm};
use bisector_core::pencil::{
    find_hyperbolas, hyperbola_asymptotes, pair_record, shared_line, triviality, Triviality,
};
use bisector_core::quad::quadrilateral_of;
use bisector_core::{
    AsymptoticPencil, Field, FieldSpec, Line, LinePair, MidResult, Pencil, Point, Quadratic, Result,
};
use serde_json::{json, Value};

pub fn point_json<F: Field>(p: &Point<F>) -> Value {
    json!([p.x.to_string(), p.y.to_string()])
}

fn pair_lines<F: Field>(pair: &LinePair<F>) -> Value {
    json!([pair.first().to_string(), pair.second().to_string()])
}

/// A degeneration of the parallel family with distinct lines.
pub fn parallel_sample<F: Field>(form: &ParabolicForm<F>) -> (F, LinePair<F>) {
    let r = -form.m.halve() + form.m.one_like();
    form.member(&r)
}

pub fn classify_report<F: Field>(f: &Quadratic<F>) -> Value {
    let c = classify(f);
    json!({"class": c.kind.as_str(), "degenerate": c.degenerate})
}

pub fn asymptotes_report<F: Field>(f: &Quadratic<F>) -> Value {
    match degenerations(f) {
        Degenerations::Hyperbola { lambda, asymptotes } => {
            json!({"lines": pair_lines(&asymptotes), "lambda": lambda.to_string()})
        }
        Degenerations::ParallelFamily(form) => {
            let (lambda, pair) = parallel_sample(&form);
            json!({
                "midline": form.midline().to_string(),
                "sample": {"lines": pair_lines(&pair), "lambda": lambda.to_string()},
            })
        }
        Degenerations::None => json!({"lines": []}),
    }
}

fn triviality_json<F: Field>(t: &Triviality<F>) -> Value {
    match t {
        Triviality::Trivial { center } => json!({"kind": "trivial", "center": point_json(center)}),
        Triviality::DifferentCenters(a, b) => json!({
            "kind": "different-centers",
            "pairs": [pair_record(a, None), pair_record(b, None)],
        }),
        Triviality::ParallelPair(p) => {
            json!({"kind": "parallel-pair", "pair": pair_record(p, None)})
        }
        Triviality::DoubleLine(w) => json!({
            "kind": "double-line",
            "line": w.line.to_string(),
            "alpha": w.alpha.to_string(),
            "beta": w.beta.to_string(),
            "pairs": [pair_record(&w.first, None), pair_record(&w.second, None)],
            "verified": w.verify_expansion(),
        }),
    }
}

pub fn pencil_report<F: Field>(pencil: Pencil<F>) -> Result<Value> {
    let hyperbolas: Vec<Value> = find_hyperbolas(&pencil)
        .iter()
        .map(|h| {
            json!({
                "alpha": h.alpha.to_string(),
                "beta": h.beta.to_string(),
                "conic": h.quadratic.to_string(),
            })
        })
        .collect();
    let asymptotes: Vec<Value> = hyperbola_asymptotes(&pencil)
        .iter()
        .map(|p| pair_record(p, None))
        .collect();
    let a = AsymptoticPencil::new(pencil);
    let t = triviality(&a)?;
    let mut out = json!({
        "hyperbolas": hyperbolas,
        "asymptotes": asymptotes,
    });
    let obj = out.as_object_mut().expect("object literal");
    if let Ok(members) = a.members() {
        let members: Vec<Value> = members.iter().map(|m| m.to_json()).collect();
        obj.insert("members".into(), json!(members));
    }
    obj.insert("trivial".into(), json!(t.is_trivial()));
    obj.insert("triviality".into(), triviality_json(&t));
    let shared = shared_line(&a)?.map(|l| l.to_string());
    obj.insert("shared_line".into(), json!(shared));
    let quad = if t.is_trivial() {
        Value::Null
    } else {
        match quadrilateral_of(&a) {
            Ok(q) => {
                let (s, t) = q.sides();
                json!({"sides": [pair_lines(s), pair_lines(t)], "degenerate": q.is_degenerate()})
            }
            Err(e) => json!({"error": e.to_string()}),
        }
    };
    obj.insert("quadrilateral".into(), quad);
    Ok(out)
}

fn mid_json<F: Field>(m: &MidResult<F>) -> Value {
    match m {
        MidResult::Crosses(p) => json!({"crosses": midpoint_json(Some(p))}),
        MidResult::MeetsNoCross => json!("meets"),
        MidResult::NoMeet => json!("misses"),
    }
}

pub fn bisect_report<F: Field>(line: &Line<F>, conics: &[Quadratic<F>]) -> Value {
    let per: Vec<Value> = conics
        .iter()
        .map(|f| json!({"conic": f.to_string(), "result": mid_json(&mid(f, line))}))
        .collect();
    let m = bisects_set(line, conics);
    let mut out = json!({
        "line": line.to_string(),
        "bisects": m.is_some(),
        "midpoint": midpoint_json(m.as_ref()),
        "conics": per,
    });
    if let [f1, f2] = conics {
        if let Ok(p) = Pencil::new(f1.clone(), f2.clone()) {
            let member = pair_through_line(line, &p).map(|m| {
                let mut rec = pair_record(&m.pair, Some(&m.coords));
                rec["ambiguous"] = json!(m.ambiguous);
                rec
            });
            out["member"] = json!(member);
        }
    }
    out
}

pub fn arrangement_json<F: Field>(pairs: &[LinePair<F>]) -> Value {
    arrangement_report(pairs).to_json()
}

pub fn membership_report<F: Field>(pencil: Pencil<F>, pair: &LinePair<F>) -> Result<Value> {
    let a = AsymptoticPencil::new(pencil);
    let coords = a.coords_of(pair);
    let trivial = triviality(&a)?.is_trivial();
    Ok(json!({
        "pair": pair_record(pair, coords.as_ref()),
        "member": coords.is_some(),
        "trivial": trivial,
        "in_bisector_field": coords.is_some() && !trivial,
    }))
}

pub fn desargues_report<F: Field>(pencil: &Pencil<F>, line: &Line<F>) -> Result<Value> {
    let inv = desargues_involution(pencil, line)?;
    let (base, dir) = (line.base_point(), line.direction());
    Ok(json!({
        "line": line.to_string(),
        "parameterization": {
            "base": point_json(&base),
            "direction": [dir.0.to_string(), dir.1.to_string()],
        },
        "involution": inv.to_string(),
        "coefficients": {"p": inv.p.to_string(), "q": inv.q.to_string(), "r": inv.r.to_string()},
    }))
}

pub fn parse_quadratics<F: Field>(spec: &FieldSpec, texts: &[String]) -> Result<Vec<Quadratic<F>>> {
    texts.iter().map(|t| Quadratic::parse(spec, t)).collect()
}

pub fn parse_pairs<F: Field>(spec: &FieldSpec, texts: &[String]) -> Result<Vec<LinePair<F>>> {
    texts.iter().map(|t| LinePair::parse(spec, t)).collect()
}
