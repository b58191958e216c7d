mod args;
mod commands;
mod report;
mod suite;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use mwlab::Limits;
use serde_json::{json, Map, Value};

use args::{Cli, OutFormat};
use commands::{Ctx, InputError};
use report::Report;

fn limits(cli: &Cli) -> Result<Limits, InputError> {
    let mut limits = Limits::default();
    if let Ok(v) = std::env::var("MWLAB_BUDGET") {
        let b = v.trim().parse().map_err(|_| InputError(format!("MWLAB_BUDGET={v:?} is not a nonnegative integer")))?;
        limits = limits.with_enumeration(b);
    }
    if let Some(b) = cli.budget {
        limits = limits.with_enumeration(b);
    }
    Ok(limits)
}

fn inputs(cli: &Cli, limits: &Limits) -> Map<String, Value> {
    let mut m = Map::new();
    let files: Vec<String> = cli.inputs.iter().map(|p| p.display().to_string()).collect();
    m.insert("files".into(), json!(files));
    m.insert("budget".into(), json!(limits.enumeration));
    let mut put = |k: &str, v: Option<Value>| {
        if let Some(v) = v {
            m.insert(k.into(), v);
        }
    };
    put("q", cli.q.map(|v| json!(v)));
    put("n", cli.n.map(|v| json!(v)));
    put("m", cli.m.map(|v| json!(v)));
    put("z", cli.z.clone().map(Value::String));
    put("u", cli.u.clone().map(Value::String));
    put("eps", cli.eps.clone().map(Value::String));
    put("tol", cli.tol.clone().map(Value::String));
    put("beta", cli.beta.map(|v| json!(v)));
    put("t", cli.t.map(|v| json!(v)));
    put("terms", cli.terms.map(|v| json!(v)));
    put("seed", cli.seed.map(|v| json!(v)));
    put("count", cli.count.map(|v| json!(v)));
    put("dual", cli.dual.then_some(json!(true)));
    m
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = limits(&cli).and_then(|limits| {
        let ctx = Ctx { cli: &cli, limits };
        commands::run(&ctx).map(|o| (o, limits))
    });
    let (outcome, limits) = match outcome {
        Ok(v) => v,
        Err(InputError(msg)) => {
            eprintln!("mwlab {}: {msg}", cli.verb.name());
            return ExitCode::from(2);
        }
    };
    let report = Report {
        verb: cli.verb.name(),
        inputs: inputs(&cli, &limits),
        results: outcome.results,
        pass: outcome.pass,
        timing_ms: cli.timing.then(|| start.elapsed().as_millis() as u64),
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let written = match cli.out {
        OutFormat::Json => report.write_json(&mut lock).map_err(|e| e.to_string()),
        OutFormat::Csv => report.write_csv(&mut lock).map_err(|e| e.to_string()),
    };
    if let Err(e) = written.and_then(|_| lock.flush().map_err(|e| e.to_string())) {
        eprintln!("mwlab: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.pass == Some(false) {
        if let Some(Value::Array(f)) = report.results.get("failures") {
            for x in f {
                eprintln!("mwlab {}: failing case {x}", report.verb);
            }
        }
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
