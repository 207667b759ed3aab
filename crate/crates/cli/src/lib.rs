//! Command-line front end: parses an expression and a field descriptor,
//! computes the requested artifacts and renders them as text or JSON.

use std::fmt::Write as _;

use bezout_gw::bezforms::{self, transition_matrices, verify_congruences, SymmetricMatrix};
use bezout_gw::degree::{
    d_from_roots, degree_sum_check, global_cauchy_index, require_split, signed_resultant, topological_degree,
    unstable_class,
};
use bezout_gw::field::{AnyField, FieldContext, FieldDescriptor};
use bezout_gw::gw::{FormInvariants, GWClass};
use bezout_gw::parse::{parse_polynomial_in, parse_rational_function};
use bezout_gw::residue::{gram_matrix, primal_monomial_gram, BasisKind};
use bezout_gw::{json, Error, Matrix, PointedRationalFunction, Scalar, SplitData};
use serde_json::{json, Map, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

pub const DEFAULT_OUTPUTS: &str = "bez,invariants,unstable";

/// One invocation of the tool.
#[derive(Clone, Debug)]
pub struct Query {
    pub expression: String,
    pub field: String,
    pub outputs: String,
    pub roots: Option<String>,
    pub json: bool,
}

impl Query {
    pub fn new(expression: &str) -> Self {
        Query {
            expression: expression.to_string(),
            field: "Q".to_string(),
            outputs: DEFAULT_OUTPUTS.to_string(),
            roots: None,
            json: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Bez,
    S,
    New,
    Van,
    Transitions,
    /// Gram matrix on the basis dual to the given one.
    Gram(BasisKind),
    /// Gram matrix on the primal twisted monomial basis.
    GramPrimal,
    Invariants,
    Degree,
    A1,
    Unstable,
    Verify,
    Cauchy,
}

impl Output {
    const EVERYTHING: [Output; 16] = [
        Output::Bez,
        Output::S,
        Output::New,
        Output::Van,
        Output::Transitions,
        Output::Gram(BasisKind::Monomial),
        Output::Gram(BasisKind::Horner),
        Output::Gram(BasisKind::Newton),
        Output::Gram(BasisKind::Vandermonde),
        Output::GramPrimal,
        Output::Invariants,
        Output::Degree,
        Output::A1,
        Output::Unstable,
        Output::Verify,
        Output::Cauchy,
    ];

    pub fn key(self) -> String {
        match self {
            Output::Bez => "bez".into(),
            Output::S => "s".into(),
            Output::New => "new".into(),
            Output::Van => "van".into(),
            Output::Transitions => "transitions".into(),
            Output::Gram(b) => format!("gram:{}", b.as_str()),
            Output::GramPrimal => "gram:primal".into(),
            Output::Invariants => "invariants".into(),
            Output::Degree => "degree".into(),
            Output::A1 => "a1".into(),
            Output::Unstable => "unstable".into(),
            Output::Verify => "verify".into(),
            Output::Cauchy => "cauchy".into(),
        }
    }

    fn parse(s: &str) -> Result<Output, String> {
        Ok(match s {
            "bez" => Output::Bez,
            "s" => Output::S,
            "new" => Output::New,
            "van" => Output::Van,
            "transitions" => Output::Transitions,
            "gram:primal" => Output::GramPrimal,
            "invariants" => Output::Invariants,
            "degree" => Output::Degree,
            "a1" => Output::A1,
            "unstable" => Output::Unstable,
            "verify" => Output::Verify,
            "cauchy" => Output::Cauchy,
            _ => match s.strip_prefix("gram:") {
                Some(b) => Output::Gram(b.parse().map_err(|_| {
                    format!("unknown basis '{b}' (expected monomial, horner, newton, vandermonde or primal)")
                })?),
                None => return Err(format!("unknown output '{s}'")),
            },
        })
    }
}

/// Requested outputs in request order. With `all`, anything that cannot be
/// computed for the given input is marked skipped instead of failing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plan {
    pub outputs: Vec<Output>,
    pub all: bool,
}

pub fn parse_outputs(list: &str) -> Result<Plan, String> {
    let mut outputs = Vec::new();
    let mut all = false;
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let items = if item == "all" {
            all = true;
            Output::EVERYTHING.to_vec()
        } else {
            vec![Output::parse(item)?]
        };
        for o in items {
            if !outputs.contains(&o) {
                outputs.push(o);
            }
        }
    }
    if outputs.is_empty() {
        return Err("no outputs requested".into());
    }
    Ok(Plan { outputs, all })
}

enum Failure {
    Input(String),
    Identity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IdentityViolated(_) => Failure::Identity(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

struct Section {
    key: String,
    json: Value,
    text: String,
}

struct Report {
    header: String,
    sections: Vec<Section>,
    verify_failed: bool,
    warnings: Vec<String>,
}

pub fn run(query: &Query) -> Outcome {
    match evaluate(query) {
        Ok(report) => {
            let stdout = if query.json {
                let obj: Map<String, Value> = report.sections.iter().map(|s| (s.key.clone(), s.json.clone())).collect();
                let mut out = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable");
                out.push('\n');
                out
            } else {
                let mut out = report.header.clone();
                for s in &report.sections {
                    out.push('\n');
                    out.push_str(&s.text);
                }
                out
            };
            let mut stderr = String::new();
            for w in &report.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            if report.verify_failed {
                stderr.push_str("error: at least one identity failed\n");
            }
            Outcome {
                code: if report.verify_failed { EXIT_VERIFY } else { EXIT_OK },
                stdout,
                stderr,
            }
        }
        Err(Failure::Input(msg)) => Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Identity(msg)) => Outcome {
            code: EXIT_VERIFY,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn evaluate(query: &Query) -> Result<Report, Failure> {
    let plan = parse_outputs(&query.outputs).map_err(Failure::Input)?;
    let field = FieldDescriptor::parse(&query.field)?.build()?;
    match &field {
        AnyField::Rational(ctx) => evaluate_in(ctx, query, &plan),
        AnyField::Prime(ctx) => evaluate_in(ctx, query, &plan),
        AnyField::RationalExt(ctx) => evaluate_in(ctx, query, &plan),
        AnyField::PrimeExt(ctx) => evaluate_in(ctx, query, &plan),
    }
}

/// Parses `"r1:m1,r2:m2,..."`; each root is a polynomial in the field
/// generator `t` and the multiplicity defaults to 1.
pub fn parse_roots<K: Scalar>(text: &str, ctx: &FieldContext<K>) -> Result<Vec<(K, usize)>, String> {
    let mut roots = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (value, mult) = match item.rsplit_once(':') {
            Some((v, m)) => (
                v,
                m.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("bad multiplicity in root '{item}'"))?,
            ),
            None => (item, 1),
        };
        let p = parse_polynomial_in(value, "t").map_err(|e| format!("root '{value}': {e}"))?;
        let p = p.embed_in(&ctx.one).map_err(|e| e.to_string())?;
        let root = match (&ctx.generator, p.degree()) {
            (_, None) => ctx.one.zero_in(),
            (_, Some(0)) => p.coeff(0),
            (Some(t), _) => p.eval(t),
            (None, _) => return Err(format!("root '{value}' uses t, but {} has no generator", ctx.name)),
        };
        roots.push((root, mult));
    }
    Ok(roots)
}

struct Context<'a, K> {
    map: PointedRationalFunction<K>,
    field: &'a FieldContext<K>,
    split: Result<SplitData<K>, String>,
    all: bool,
}

impl<K: Scalar> Context<'_, K> {
    /// Split data, or the reason it is unavailable as an input error.
    fn split(&self) -> Result<&SplitData<K>, Failure> {
        self.split.as_ref().map_err(|e| Failure::Input(e.clone()))
    }

    fn ordered(&self) -> bool {
        self.field.is_ordered()
    }
}

fn evaluate_in<K: Scalar>(ctx: &FieldContext<K>, query: &Query, plan: &Plan) -> Result<Report, Failure> {
    let (f_raw, g_raw) = parse_rational_function(&query.expression)?;
    let map = PointedRationalFunction::normalize(&f_raw.embed_in(&ctx.one)?, &g_raw.embed_in(&ctx.one)?)?;
    let split = match &query.roots {
        Some(text) => {
            let roots = parse_roots(text, ctx).map_err(Failure::Input)?;
            Ok(map.split_data(&roots)?)
        }
        None => require_split(&map).map_err(|e| e.to_string()),
    };
    let cx = Context {
        map,
        field: ctx,
        split,
        all: plan.all,
    };
    let mut sections = Vec::new();
    let mut verify_failed = false;
    for &o in &plan.outputs {
        let key = o.key();
        let section = match compute(&cx, o) {
            Ok((json, text)) => {
                if o == Output::Verify && json["passed"] == Value::Bool(false) {
                    verify_failed = true;
                }
                Section { key, json, text }
            }
            Err(Failure::Input(reason)) if cx.all => Section {
                json: json!({ "skipped": reason }),
                text: format!("{key}: skipped ({reason})\n"),
                key,
            },
            Err(e) => return Err(e),
        };
        sections.push(section);
    }
    Ok(Report {
        header: format!("F = {} over {}, mu = {}\n", cx.map, ctx.name, cx.map.mu()),
        sections,
        verify_failed,
        warnings: ctx.warnings.clone(),
    })
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}

fn matrix_text<K: Scalar>(title: &str, m: &Matrix<K>) -> String {
    format!("{title}:\n{}", indent(&m.to_string()))
}

fn symmetric<K: Scalar>(key: &str, s: &SymmetricMatrix<K>) -> (Value, String) {
    (json::matrix(&s.matrix), matrix_text(&format!("{key} ({})", s.label), &s.matrix))
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("  {k:<width$}  {v}\n")).collect()
}

fn invariants_text<K: Scalar>(inv: &FormInvariants<K>) -> String {
    let mut rows = vec![
        ("rank", inv.rank.to_string()),
        ("discriminant", inv.discriminant.to_string()),
        ("signed discriminant", inv.signed_discriminant().to_string()),
        ("signature", inv.signature.map_or("skipped".into(), |s| s.to_string())),
    ];
    if let Some(h) = &inv.hasse {
        let minus: Vec<String> = h.keys().map(ToString::to_string).collect();
        let text = if minus.is_empty() {
            "1 at every place".to_string()
        } else {
            format!("-1 at {}", minus.join(", "))
        };
        rows.push(("hasse", text));
    }
    table(&rows)
}

fn class_text<K: Scalar>(c: &GWClass<K>) -> String {
    c.to_string()
}

fn compute<K: Scalar>(cx: &Context<'_, K>, o: Output) -> Result<(Value, String), Failure> {
    let map = &cx.map;
    let key = o.key();
    match o {
        Output::Bez => Ok(symmetric(&key, &bezforms::bezout_matrix(map))),
        Output::S => Ok(symmetric(&key, &bezforms::hankel_matrix(map))),
        Output::New => Ok(symmetric(&key, &bezforms::newton_matrix(map, cx.split()?)?)),
        Output::Van => Ok(symmetric(&key, &bezforms::vandermonde_matrix(map, cx.split()?)?)),
        Output::Transitions => {
            let sd = if cx.all { cx.split.as_ref().ok() } else { Some(cx.split()?) };
            let t = transition_matrices(map, sd)?;
            let mut text = format!("{key}:\n");
            text.push_str(&indent(&matrix_text("L", &t.l)));
            for (name, m) in [("M", &t.m), ("N", &t.n), ("N0", &t.n0)] {
                match m {
                    Some(m) => {
                        text.push_str(&indent(&matrix_text(name, m)));
                        if name != "N0" {
                            text.push_str(&indent(&format!("det {name} = {}\n", m.det())));
                        }
                    }
                    None => text.push_str(&indent(&format!("{name}: skipped (roots of f unavailable)\n"))),
                }
            }
            let mut value = json::transitions(&t);
            if let (Some(m), Some(n)) = (&t.m, &t.n) {
                value["det_M"] = json::scalar(&m.det());
                value["det_N"] = json::scalar(&n.det());
            }
            Ok((value, text))
        }
        Output::Gram(which) => {
            let sd = if which.needs_split_data() { Some(cx.split()?) } else { None };
            Ok(symmetric(&key, &gram_matrix(map, which, sd)?))
        }
        Output::GramPrimal => {
            let g = primal_monomial_gram(map);
            let bez = bezforms::bezout_matrix(map).matrix;
            let identity = &g.matrix * &bez == Matrix::identity(bez.rows(), &map.one());
            let (mut value, mut text) = symmetric(&key, &g);
            value = json!({ "matrix": value, "times_bez_is_identity": identity });
            let _ = writeln!(text, "  Gram * Bez = I: {identity}");
            Ok((value, text))
        }
        Output::Invariants => {
            let inv = bezout_gw::gw::invariants(&bezforms::bezout_matrix(map).matrix)?;
            Ok((json::invariants(&inv), format!("{key} of Bez:\n{}", invariants_text(&inv))))
        }
        Output::Degree => {
            let degree = topological_degree(map)?;
            Ok((
                json!({ "degree": degree }),
                format!("{key}: {degree} (signature of Bez = Cauchy index of g/f)\n"),
            ))
        }
        Output::Cauchy => {
            let c = global_cauchy_index(map.g(), map.f())?;
            let mut rows = vec![("index", c.index.to_string())];
            let local: Vec<String> = c.local.iter().map(|(r, v)| format!("{r}: {v}")).collect();
            rows.push(("local", if local.is_empty() { "none".into() } else { local.join(", ") }));
            rows.push(("non-split factor", c.nonsplit_factor.to_string()));
            rows.push(("non-split index", c.nonsplit_index.to_string()));
            Ok((json::cauchy(&c), format!("{key} of g/f:\n{}", table(&rows))))
        }
        Output::A1 => {
            let class = GWClass::of_matrix(&bezforms::bezout_matrix(map).matrix)?;
            let mut value = json!({ "class": json::gw_class(&class) });
            let mut text = format!("{key}: {}\n", class_text(&class));
            if let Ok(sd) = &cx.split {
                let report = degree_sum_check(map, sd)?;
                for (r, c) in &report.local {
                    let _ = writeln!(text, "  local degree at {r}: {}", class_text(c));
                }
                let _ = writeln!(text, "  sum of local degrees: {} ({})", report.local_sum, report.decision.as_str());
                value["degree_sum"] = json::degree_sum(&report);
            }
            Ok((value, text))
        }
        Output::Unstable => {
            let u = unstable_class(map)?;
            Ok((
                json::unstable(&u),
                format!("{key}:\n{}", table(&[("w", class_text(&u.w)), ("d", u.d.to_string())])),
            ))
        }
        Output::Verify => verify(cx),
    }
}

fn verify<K: Scalar>(cx: &Context<'_, K>) -> Result<(Value, String), Failure> {
    let map = &cx.map;
    let sd = cx.split.as_ref().ok();
    let mut checks: Vec<(String, Result<(), String>)> = Vec::new();

    for c in verify_congruences(map, sd)?.checks {
        let outcome = match &c.failure {
            None => Ok(()),
            Some(_) => Err(c.to_string()),
        };
        checks.push((c.name.to_string(), outcome));
    }
    for which in BasisKind::ALL {
        if which.needs_split_data() && sd.is_none() {
            continue;
        }
        let outcome = match gram_matrix(map, which, sd) {
            Ok(_) => Ok(()),
            Err(Error::IdentityViolated(msg)) => Err(msg),
            Err(e) => return Err(e.into()),
        };
        let classical = match which {
            BasisKind::Monomial => "Bez",
            BasisKind::Horner => "S",
            BasisKind::Newton => "New",
            BasisKind::Vandermonde => "Van",
        };
        checks.push((format!("Gram(dual {}) = {classical}", which.as_str()), outcome));
    }
    let bez = bezforms::bezout_matrix(map).matrix;
    let identity = &primal_monomial_gram(map).matrix * &bez == Matrix::identity(bez.rows(), &map.one());
    checks.push((
        "Gram(primal monomial) Bez = I".into(),
        if identity { Ok(()) } else { Err("product is not the identity".into()) },
    ));
    let d = bez.det();
    let via_resultant = signed_resultant(map);
    checks.push((
        "det Bez = (-1)^(mu(mu-1)/2) Res(f, g)".into(),
        if d == via_resultant { Ok(()) } else { Err(format!("{d} != {via_resultant}")) },
    ));
    if let Some(sd) = sd.filter(|sd| sd.is_simple()) {
        let via_roots = d_from_roots(map, sd)?;
        checks.push((
            "d = Disc(f) prod g(r)/f'(r)".into(),
            if d == via_roots { Ok(()) } else { Err(format!("{d} != {via_roots}")) },
        ));
    }
    if let Some(sd) = sd {
        let outcome = match degree_sum_check(map, sd) {
            Ok(r) if r.passed() => Ok(()),
            Ok(r) => Err(format!("{} vs {} ({})", r.global, r.local_sum, r.decision.as_str())),
            Err(Error::IdentityViolated(msg)) => Err(msg),
            Err(e) => return Err(e.into()),
        };
        checks.push(("class of Bez = sum of local degrees".into(), outcome));
    }
    if cx.ordered() {
        let outcome = match topological_degree(map) {
            Ok(_) => Ok(()),
            Err(Error::IdentityViolated(msg)) => Err(msg),
            Err(e) => return Err(e.into()),
        };
        checks.push(("signature of Bez = Cauchy index of g/f".into(), outcome));
    }

    let passed = checks.iter().all(|(_, r)| r.is_ok());
    let mut text = String::from("verify:\n");
    let mut list = Vec::new();
    for (name, outcome) in &checks {
        match outcome {
            Ok(()) => {
                let _ = writeln!(text, "  pass  {name}");
                list.push(json!({ "identity": name, "passed": true }));
            }
            Err(detail) => {
                let _ = writeln!(text, "  FAIL  {name}: {detail}");
                list.push(json!({ "identity": name, "passed": false, "detail": detail }));
            }
        }
    }
    if sd.is_none() {
        let _ = writeln!(text, "  (Newton and Vandermonde identities need the roots of f; pass --roots)");
    }
    Ok((json!({ "passed": passed, "checks": list }), text))
}
