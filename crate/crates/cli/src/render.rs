//! JSON and text renderings.

use serde_json::{json, Value};
use uqgl::expr::print_monomial;
use uqgl::hopf::TensorElement;
use uqgl::pbwcore::{AMonomial, Element, KCoord, Monomial, RootTable};
use uqgl::repmod::Character;
use uqgl::rootdata::Shape;
use uqgl::rootofunity::Specialized;

fn monomial_fields(t: &RootTable, m: &Monomial) -> serde_json::Map<String, Value> {
    let mut o = serde_json::Map::new();
    o.insert("fd".into(), json!(m.fd(t)));
    o.insert("fpsi".into(), json!(m.fpsi(t)));
    o.insert("k".into(), json!(m.k_exponents()));
    o.insert("epsi".into(), json!(m.epsi(t)));
    o.insert("ed".into(), json!(m.ed(t)));
    o
}

pub fn shape_json(s: Shape) -> Value {
    json!([s.m, s.n])
}

pub fn element(x: &Element) -> Value {
    let t = RootTable::new(x.shape());
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut o = monomial_fields(&t, m);
            o.insert("coeff".into(), json!(c.to_string()));
            Value::Object(o)
        })
        .collect();
    json!({ "shape": shape_json(x.shape()), "terms": terms })
}

pub fn tensor(x: &TensorElement) -> Value {
    let t = RootTable::new(x.shape());
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|((a, b), c)| {
            json!({
                "coeff": c.to_string(),
                "left": Value::Object(monomial_fields(&t, a)),
                "right": Value::Object(monomial_fields(&t, b)),
            })
        })
        .collect();
    json!({ "shape": shape_json(x.shape()), "terms": terms })
}

pub fn tensor_text(x: &TensorElement) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let t = RootTable::new(x.shape());
    x.terms()
        .iter()
        .map(|((a, b), c)| format!("({c}) {} ⊗ {}", print_monomial(&t, a), print_monomial(&t, b)))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Character as a list of z-weights with multiplicities, sorted by z.
pub fn character(ch: &Character) -> Value {
    let rows = ch.0.iter().map(|(z, &n)| (z.clone(), n));
    Value::Array(rows.map(|(z, n)| json!({ "z": z, "mult": n })).collect())
}

pub fn character_text(ch: &Character) -> String {
    let rows = ch.0.iter().map(|(z, &n)| (z.clone(), n));
    rows.map(|(z, n)| format!("{n} × z{z:?}")).collect::<Vec<_>>().join("\n")
}

fn kcoords(k: &[KCoord]) -> Value {
    Value::Array(
        k.iter()
            .map(|c| match c {
                KCoord::Exp(e) => json!({ "exp": e }),
                KCoord::Br { delta, t } => json!([delta, t]),
            })
            .collect(),
    )
}

pub fn specialized(x: &Specialized) -> Value {
    Value::Array(
        x.iter()
            .map(|(m, c): (&AMonomial, _)| json!({ "coeff": c.to_string(), "f": m.f, "k": kcoords(&m.k), "e": m.e }))
            .collect(),
    )
}

fn amonomial_text(t: &RootTable, m: &AMonomial) -> String {
    let dp = |p: u32| if p > 1 { format!("^({p})") } else { String::new() };
    let mut parts = Vec::new();
    for id in (0..m.f.len()).rev() {
        if m.f[id] > 0 {
            let r = t.root(id);
            parts.push(format!("F[{},{}]{}", r.i, r.j, dp(m.f[id])));
        }
    }
    for (i, c) in m.k.iter().enumerate() {
        match c {
            KCoord::Exp(0) | KCoord::Br { delta: 0, t: 0 } => {}
            KCoord::Exp(e) => parts.push(format!("Ka[{}]^{e}", i + 1)),
            KCoord::Br { delta, t } => {
                if *delta == 1 {
                    parts.push(format!("Ka[{}]", i + 1));
                }
                if *t > 0 {
                    parts.push(format!("Kb[{};0;{t}]", i + 1));
                }
            }
        }
    }
    for id in 0..m.e.len() {
        if m.e[id] > 0 {
            let r = t.root(id);
            parts.push(format!("E[{},{}]{}", r.i, r.j, dp(m.e[id])));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn specialized_text(shape: Shape, x: &Specialized) -> String {
    if x.is_empty() {
        return "0".into();
    }
    let t = RootTable::new(shape);
    x.iter().map(|(m, c)| format!("({c}) {}", amonomial_text(&t, m))).collect::<Vec<_>>().join("\n")
}

pub fn ast(a: &uqgl::expr::ExprAst) -> Value {
    use uqgl::expr::{ExprAst, GenAtom};
    match a {
        ExprAst::Sum(v) => json!({ "sum": v.iter().map(ast).collect::<Vec<_>>() }),
        ExprAst::Neg(x) => json!({ "neg": ast(x) }),
        ExprAst::Product(v) => json!({ "product": v.iter().map(ast).collect::<Vec<_>>() }),
        ExprAst::Quotient(x, y) => json!({ "quotient": [ast(x), ast(y)] }),
        ExprAst::Power(x, n) => json!({ "power": { "base": ast(x), "exp": n } }),
        ExprAst::DividedPower(x, n) => json!({ "divided_power": { "base": ast(x), "exp": n } }),
        ExprAst::Scalar(c) => json!({ "scalar": c.to_string() }),
        ExprAst::Gen(g) => match g {
            GenAtom::E(i, j) => json!({ "E": [i, j] }),
            GenAtom::F(i, j) => json!({ "F": [i, j] }),
            GenAtom::K(i) => json!({ "K": i }),
            GenAtom::Kinv(i) => json!({ "Kinv": i }),
            GenAtom::Ka(i) => json!({ "Ka": i }),
            GenAtom::Kb { i, c, t } => json!({ "Kb": [i, c, t] }),
        },
    }
}
