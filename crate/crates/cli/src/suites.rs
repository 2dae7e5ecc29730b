use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use qva_core::arith::{HalfInt, Scalar};
use qva_core::deformation::{
    filtration_e_check, gr_compare, half_basis_check, phi_commute_check, phi_inverse_check, phi_law_check,
    zf_relation_check, QSeriesSpec,
};
use qva_core::qalgebra::{confluence_check, smash_relation_check, twist_check};
use qva_core::qyb::{build_s, qybe_check, unitarity_check};
use qva_core::vacuum::{basis_up_to, character, graded_dim, u_gen, v_gen, State};
use qva_core::vertex::{
    creation_check, derivative_check, expected_central_charge, sjacobi_check, virasoro_check, weak_assoc_check,
    VertexEngine,
};
use qva_core::{CheckReport, QvaError, Status};

/// Parameters shared by every suite.
pub struct Context {
    pub spec: QSeriesSpec,
    pub max_weight: HalfInt,
    pub mode_radius: i64,
    pub box_radius: i64,
}

pub struct SuiteOutput {
    pub checks: Vec<CheckReport>,
    pub details: Value,
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, ctx: &Context) -> Result<SuiteOutput, QvaError>;
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub status: Status,
    #[serde(flatten)]
    pub report: CheckReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub status: Status,
    pub checks: Vec<CheckSummary>,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
}

#[derive(Default)]
pub struct Registry {
    suites: Vec<Box<dyn Suite>>,
}

impl Registry {
    pub fn register(&mut self, suite: impl Suite + 'static) {
        self.suites.push(Box::new(suite));
    }

    pub fn get(&self, name: &str) -> Option<&dyn Suite> {
        self.suites.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.name()).collect()
    }

    pub fn builtin() -> Registry {
        let mut r = Registry::default();
        r.register(Algebra);
        r.register(Vacuum);
        r.register(Vertex);
        r.register(Virasoro);
        r.register(Deformed);
        r.register(Filtration);
        r.register(Ybe);
        r
    }
}

/// Runs the named suites in parallel and returns results in the requested order.
pub fn run_suites(reg: &Registry, names: &[String], ctx: &Context, timings: bool) -> Vec<SuiteResult> {
    let suites: Vec<&dyn Suite> = names.iter().map(|n| reg.get(n).expect("validated suite name")).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|s| scope.spawn(|| run_one(*s, ctx, timings))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}

fn run_one(suite: &dyn Suite, ctx: &Context, timings: bool) -> SuiteResult {
    let start = Instant::now();
    let out = suite.run(ctx);
    let wall_time = timings.then(|| start.elapsed().as_secs_f64());
    match out {
        Ok(out) => {
            let status = combine(out.checks.iter().map(CheckReport::status));
            let checks = out.checks.into_iter().map(|r| CheckSummary { status: r.status(), report: r }).collect();
            SuiteResult { name: suite.name().into(), status, checks, details: out.details, wall_time }
        }
        Err(e) => SuiteResult {
            name: suite.name().into(),
            status: Status::Inconclusive,
            checks: Vec::new(),
            details: json!({ "error": e.to_string() }),
            wall_time,
        },
    }
}

pub fn combine(statuses: impl Iterator<Item = Status>) -> Status {
    let mut out = Status::Pass;
    for s in statuses {
        match s {
            Status::Fail => return Status::Fail,
            Status::Inconclusive => out = Status::Inconclusive,
            Status::Pass => {}
        }
    }
    out
}

fn generators(ctx: &Context) -> Vec<State> {
    ctx.spec.q().colors().flat_map(|c| [u_gen(c), v_gen(c)]).collect()
}

fn basis(ctx: &Context) -> Vec<State> {
    basis_up_to(ctx.spec.q(), ctx.max_weight).into_iter().map(State::from_word).collect()
}

fn modes(ctx: &Context) -> Vec<i32> {
    let r = ctx.mode_radius as i32;
    (-r..r).collect()
}

struct Algebra;

impl Suite for Algebra {
    fn name(&self) -> &'static str {
        "algebra"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, QvaError> {
        let q = ctx.spec.q();
        let modes = modes(ctx);
        let mut checks = vec![confluence_check(q, 500, 200, ctx.mode_radius as i32, 1), twist_check(q, 3, &modes)];
        if q.l() > 1 {
            checks.push(smash_relation_check(q, q, &modes));
        }
        Ok(SuiteOutput { checks, details: json!({}) })
    }
}

struct Vacuum;

impl Suite for Vacuum {
    fn name(&self) -> &'static str {
        "vacuum"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, QvaError> {
        let q = ctx.spec.q();
        let ch = character(q, ctx.max_weight);
        let mut rep = CheckReport::new("graded dimensions");
        let mut table = Vec::new();
        for tw in 0..=ctx.max_weight.twice() {
            let w = HalfInt::from_twice(tw);
            let dim = graded_dim(q, w);
            let expected = ch[tw as usize].to_string();
            rep.record(dim.to_string() == expected, || format!("weight {w}: {dim} vs character {expected}"));
            table.push(json!({ "weight": w.to_string(), "dim": dim, "character": expected }));
        }
        Ok(SuiteOutput { checks: vec![rep], details: json!({ "graded_dims": table }) })
    }
}

struct Vertex;

impl Suite for Vertex {
    fn name(&self) -> &'static str {
        "vertex"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, QvaError> {
        let eng = VertexEngine::new(ctx.spec.q().clone());
        let gens = generators(ctx);
        let basis = basis(ctx);
        let r = ctx.mode_radius;
        let mut creation = CheckReport::new("creation");
        let mut derivative = CheckReport::new("derivative");
        let mut jacobi = CheckReport::new("sjacobi");
        let mut assoc = CheckReport::new("weak associativity");
        for v in &basis {
            creation.merge(creation_check(&eng, v, r));
        }
        for u in &gens {
            for w in &basis {
                derivative.merge(derivative_check(&eng, u, w, -r..=r));
            }
            for v in &gens {
                for w in &basis {
                    jacobi.merge(sjacobi_check(&eng, u, v, w, ctx.box_radius));
                    assoc.merge(weak_assoc_check(&eng, u, v, w, ctx.box_radius));
                }
            }
        }
        Ok(SuiteOutput { checks: vec![creation, derivative, jacobi, assoc], details: json!({}) })
    }
}

struct Virasoro;

impl Suite for Virasoro {
    fn name(&self) -> &'static str {
        "virasoro"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, QvaError> {
        let q = ctx.spec.q();
        let eng = VertexEngine::new(q.clone());
        let out = virasoro_check(&eng, ctx.mode_radius, ctx.max_weight)?;
        let expected = expected_central_charge(q);
        let mut rep = out.report;
        let c = out.central_charge;
        rep.record(c == expected, || format!("central charge {c}, expected {expected}"));
        let all_odd = q.colors().all(|i| *q.q(i, i) == Scalar::from_int(-1));
        let rank_note = if all_odd {
            "central charge equals the rank: every q_ii = -1"
        } else {
            "central charge differs from the rank: some q_ii = 1"
        };
        rep.note(rank_note);
        let details = json!({
            "central_charge": c.to_string(),
            "expected": expected.to_string(),
            "rank": q.l(),
        });
        Ok(SuiteOutput { checks: vec![rep], details })
    }
}

struct Deformed;

impl Suite for Deformed {
    fn name(&self) -> &'static str {
        "deformed"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, QvaError> {
        let spec = &ctx.spec;
        let colors: Vec<u16> = spec.q().colors().collect();
        let gens = generators(ctx);
        let mut checks = Vec::new();
        for &i in &colors {
            for &j in &colors {
                checks.push(zf_relation_check(spec, i, j, ctx.box_radius, ctx.max_weight)?);
            }
        }
        for &i in &colors {
            checks.push(phi_law_check(spec, i, &gens, ctx.max_weight, ctx.mode_radius, 2));
            checks.push(phi_inverse_check(spec, i, ctx.max_weight));
            for &j in colors.iter().filter(|&&j| j > i) {
                checks.push(phi_commute_check(spec, i, j, ctx.max_weight, 2));
            }
        }
        Ok(SuiteOutput { checks, details: json!({}) })
    }
}

struct Filtration;

impl Suite for Filtration {
    fn name(&self) -> &'static str {
        "filtration"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, QvaError> {
        let spec = &ctx.spec;
        let degree = ctx.max_weight.twice();
        let gr = gr_compare(spec, ctx.max_weight, degree)?;
        let half = half_basis_check(spec, ctx.max_weight)?;
        let r = ctx.mode_radius;
        let length = filtration_e_check(spec.q(), 2, -r..=r, ctx.max_weight);
        let rows: Vec<&qva_core::deformation::GrRow> = gr.rows.iter().filter(|r| r.expected > 0 || r.found > 0).collect();
        Ok(SuiteOutput { checks: vec![gr.report, half, length], details: json!({ "graded_dims": rows }) })
    }
}

struct Ybe;

impl Suite for Ybe {
    fn name(&self) -> &'static str {
        "ybe"
    }

    fn run(&self, ctx: &Context) -> Result<SuiteOutput, QvaError> {
        let s = build_s(&ctx.spec);
        let entries: serde_json::Map<String, Value> =
            s.entries.iter().map(|((a, b), e)| (format!("{a},{b}"), Value::String(e.to_string()))).collect();
        let checks = vec![unitarity_check(&s), qybe_check(&s, ctx.box_radius)?];
        Ok(SuiteOutput { checks, details: json!({ "order": s.order, "entries": entries }) })
    }
}
