use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;
use uqgl::braid::{braid_t, braid_t_inv};
use uqgl::checks;
use uqgl::expr::{parse, parse_element, print_canonical, ExprError};
use uqgl::hopf::{antipode, counit, delta};
use uqgl::repmod::{kac_module, simple_even_module, tensor_module, WeightModule};
use uqgl::rootdata::{Shape, Weight};
use uqgl::rootofunity::{at_root, classical_limit_check, simple_at_root, small_group_counts, specialize_element};
use uqgl::scalars::{CycloField, RatFunc};

use crate::args::{Cli, Cmd, Emit, ModuleKind};
use crate::config::{parse_config, Config};
use crate::render;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
    fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Domain(_) => "domain",
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Syntax { .. } | ExprError::IndexOutOfShape { .. } | ExprError::NegativeDividedPower { .. } => {
                CliError::Parse(e.to_string())
            }
            _ => CliError::Domain(e.to_string()),
        }
    }
}

/// Result of one command: the JSON body, the text rendering, and whether
/// every check it ran passed.
struct Outcome {
    json: Value,
    text: String,
    ok: bool,
}

fn done(json: Value, text: String) -> Result<Outcome, CliError> {
    Ok(Outcome { json, text, ok: true })
}

/// A closed stdout (e.g. piped into `head`) is not an error.
fn emit_line(s: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

pub fn run(cli: Cli) -> u8 {
    let emit = cli.emit;
    match execute(cli) {
        Ok(out) => {
            match emit {
                Emit::Text => emit_line(&out.text),
                _ => {
                    let mut body = out.json;
                    body.as_object_mut().unwrap().insert("schema".into(), json!(1));
                    emit_line(&serde_json::to_string_pretty(&body).unwrap());
                }
            }
            if out.ok {
                0
            } else {
                4
            }
        }
        Err(e) => {
            if emit == Emit::Text {
                eprintln!("error: {e}");
            } else {
                let body = json!({ "schema": 1, "error": { "kind": e.kind(), "message": e.to_string() } });
                emit_line(&serde_json::to_string_pretty(&body).unwrap());
            }
            e.code()
        }
    }
}

fn load_config(cli: &Cli) -> Result<Config, CliError> {
    let Some(path) = &cli.config else {
        return Ok(Config::default());
    };
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_config(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn execute(cli: Cli) -> Result<Outcome, CliError> {
    let cfg = load_config(&cli)?;
    let (m, n) = cli.shape.or(cfg.shape).ok_or_else(|| CliError::Parse("--shape m,n is required".into()))?;
    let shape = Shape::new(m, n).map_err(|e| CliError::Parse(e.to_string()))?;
    let el = |src: &str| parse_element(src, shape).map_err(CliError::from);
    let sh = render::shape_json(shape);
    match cli.cmd {
        Cmd::Nf { expr } => {
            if cli.emit == Emit::Ast {
                let a = parse(&expr, shape)?;
                return done(json!({ "shape": sh, "ast": render::ast(&a) }), format!("{a:?}"));
            }
            let x = el(&expr)?;
            done(render::element(&x), print_canonical(&x))
        }
        Cmd::Mul { left, right } => {
            let x = &el(&left)? * &el(&right)?;
            done(render::element(&x), print_canonical(&x))
        }
        Cmd::Delta { expr } => {
            let d = delta(&el(&expr)?);
            done(render::tensor(&d), render::tensor_text(&d))
        }
        Cmd::Antipode { expr } => {
            let x = antipode(&el(&expr)?);
            done(render::element(&x), print_canonical(&x))
        }
        Cmd::Counit { expr } => {
            let c = counit(&el(&expr)?);
            done(json!({ "shape": sh, "counit": c.to_string() }), c.to_string())
        }
        Cmd::Omega { expr } => {
            let x = el(&expr)?.omega();
            done(render::element(&x), print_canonical(&x))
        }
        Cmd::Braid { index, inverse, expr } => {
            let a = el(&expr)?;
            let x = if inverse { braid_t_inv(index, &a) } else { braid_t(index, &a) }.map_err(domain)?;
            done(render::element(&x), print_canonical(&x))
        }
        Cmd::Typical { lambda } => {
            let w = Weight::new(lambda.0.clone());
            let p = shape.p_factor(&w).map_err(domain)?;
            let t = shape.is_typical(&w).map_err(domain)?;
            done(json!({ "shape": sh, "lambda": lambda.0, "typical": t, "P": p }), format!("typical: {t}\nP: {p}"))
        }
        Cmd::Kac { lambda } => {
            let k = kac_module(shape, &lambda.0).map_err(domain)?;
            let w = Weight::new(lambda.0.clone());
            let typical = shape.is_typical(&w).map_err(domain)?;
            let z = shape.weight_to_z(&w).map_err(domain)?;
            let ch = k.character();
            let l0 = shape.even_dimension(&w);
            done(
                json!({
                    "shape": sh, "lambda": lambda.0, "z": z, "dim": k.dim(), "even_dim": l0,
                    "typical": typical, "character": render::character(&ch),
                }),
                format!("dim K = {} = 2^{} · {l0}\ntypical: {typical}\n{}", k.dim(), m * n, render::character_text(&ch)),
            )
        }
        Cmd::Simple { lambda, at_root: root } => {
            let w = Weight::new(lambda.0.clone());
            let z = shape.weight_to_z(&w).map_err(domain)?;
            let ch = match root {
                None => kac_module(shape, &lambda.0).map_err(domain)?.simple_head().map_err(domain)?.character(),
                Some(l) => simple_at_root(shape, &z, l).map_err(domain)?.character(),
            };
            let dim = ch.dimension();
            done(
                json!({ "shape": sh, "lambda": lambda.0, "z": z, "l": root, "dim": dim, "character": render::character(&ch) }),
                format!("dim = {dim}\n{}", render::character_text(&ch)),
            )
        }
        Cmd::Char { lambda, module } => {
            let ch = match module {
                ModuleKind::Kac => kac_module(shape, &lambda.0).map_err(domain)?.character(),
                ModuleKind::Simple => kac_module(shape, &lambda.0).map_err(domain)?.simple_head().map_err(domain)?.character(),
                ModuleKind::Even => simple_even_module(shape, &lambda.0).map_err(domain)?.character(),
            };
            done(
                json!({ "shape": sh, "lambda": lambda.0, "dim": ch.dimension(), "character": render::character(&ch) }),
                render::character_text(&ch),
            )
        }
        Cmd::Tensor { lambda, mu, at_root: root } => {
            let ch = match root {
                None => {
                    let a = simple_generic(shape, &lambda.0)?;
                    let b = simple_generic(shape, &mu.0)?;
                    tensor_module(&a, &b, &|c: &RatFunc| c.clone()).map_err(domain)?.character()
                }
                Some(l) => {
                    let k = CycloField::new(l).map_err(domain)?;
                    let za = shape.weight_to_z(&Weight::new(lambda.0.clone())).map_err(domain)?;
                    let zb = shape.weight_to_z(&Weight::new(mu.0.clone())).map_err(domain)?;
                    let a = simple_at_root(shape, &za, l).map_err(domain)?;
                    let b = simple_at_root(shape, &zb, l).map_err(domain)?;
                    let coeff = at_root(&k);
                    let t = tensor_module(&a, &b, &coeff).map_err(domain)?;
                    t.character()
                }
            };
            done(
                json!({ "shape": sh, "lambda": lambda.0, "mu": mu.0, "l": root, "dim": ch.dimension(), "character": render::character(&ch) }),
                render::character_text(&ch),
            )
        }
        Cmd::Specialize { l, expr } => {
            let x = specialize_element(&el(&expr)?, l).map_err(domain)?;
            done(json!({ "shape": sh, "l": l, "terms": render::specialized(&x) }), render::specialized_text(shape, &x))
        }
        Cmd::Smallgroup { counts: _, l } => {
            let c = small_group_counts(shape, l).map_err(domain)?;
            done(
                json!({
                    "shape": sh, "l": l, "u_plus": c.plus, "u_minus": c.plus, "u_zero": c.zero,
                    "u_zero_tilde": c.zero_tilde, "u": c.u, "u_tilde": c.u_tilde,
                }),
                format!("'u+ = 'u- = {}\n'u0 = {}\n'ũ0 = {}\n'u = {}\n'ũ = {}", c.plus, c.zero, c.zero_tilde, c.u, c.u_tilde),
            )
        }
        Cmd::ClassicalCheck => {
            let rep = classical_limit_check(shape).map_err(domain)?;
            let passed = rep.iter().filter(|x| x.holds).count();
            let rows: Vec<Value> =
                rep.iter().map(|x| json!({ "family": x.family, "label": x.label, "holds": x.holds })).collect();
            let text: Vec<String> =
                rep.iter().map(|x| format!("{} {} {}", if x.holds { "ok  " } else { "FAIL" }, x.family, x.label)).collect();
            Ok(Outcome {
                json: json!({ "shape": sh, "instances": rows, "passed": passed, "total": rep.len() }),
                text: format!("{}\n{passed}/{} hold", text.join("\n"), rep.len()),
                ok: passed == rep.len(),
            })
        }
        Cmd::DecomposeZ { z, l } => {
            let (a, b) = shape.frobenius_decompose(&z.0, l).map_err(domain)?;
            done(json!({ "shape": sh, "z": z.0, "l": l, "z1": a, "z2": b }), format!("z' = {a:?}\nz'' = {b:?}"))
        }
        Cmd::Selftest { seed, trials } => {
            let seed = seed.or(cfg.seed).unwrap_or(0);
            let trials = trials.unwrap_or(20);
            let depth = cfg.truncation_depth.unwrap_or(4);
            let max_deg = cfg.max_degree.unwrap_or(4);
            Ok(selftest(shape, seed, trials, depth, max_deg))
        }
    }
}

fn simple_generic(shape: Shape, lambda: &[i64]) -> Result<WeightModule<RatFunc>, CliError> {
    kac_module(shape, lambda).map_err(domain)?.simple_head().map_err(domain)
}

fn selftest(shape: Shape, seed: u64, trials: usize, depth: usize, max_deg: u32) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top: Vec<i64> = (0..shape.rank() as i64).rev().collect();
    let mut results: Vec<(&str, checks::CheckResult)> = vec![
        ("relations", checks::relation_suite(shape)),
        ("associativity", checks::associativity(shape, &mut rng, trials, max_deg)),
        ("divided_powers", checks::lemma81_identities(shape, 2)),
        ("kac_formula", checks::kac_formula(shape, 2)),
        ("bracket_shift", checks::bracket_shift_identities(shape, 2)),
        ("module_oracle", checks::module_oracle(shape, &top, &mut rng, trials, depth)),
    ];
    let classical = match classical_limit_check(shape) {
        Ok(r) => match r.iter().find(|x| !x.holds) {
            None => Ok(r.len()),
            Some(x) => Err(format!("{} {} fails", x.family, x.label)),
        },
        Err(e) => Err(e.to_string()),
    };
    results.push(("classical_limit", classical));
    let passed = results.iter().filter(|(_, r)| r.is_ok()).count();
    let rows: Vec<Value> = results
        .iter()
        .map(|(name, r)| match r {
            Ok(c) => json!({ "name": name, "passed": true, "count": c }),
            Err(e) => json!({ "name": name, "passed": false, "detail": e }),
        })
        .collect();
    let text: Vec<String> = results
        .iter()
        .map(|(name, r)| match r {
            Ok(c) => format!("ok   {name} ({c})"),
            Err(e) => format!("FAIL {name}: {e}"),
        })
        .collect();
    Outcome {
        json: json!({
            "shape": render::shape_json(shape), "seed": seed, "trials": trials,
            "checks": rows, "passed": passed, "total": results.len(),
        }),
        text: format!("{}\n{passed}/{} passed", text.join("\n"), results.len()),
        ok: passed == results.len(),
    }
}
