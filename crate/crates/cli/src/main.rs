use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use critjantzen::charbox::{ch_restricted_verma, ch_simple_subgeneric, ch_verma, Character};
use critjantzen::jantzen::{linkage_check, sum_formula_rhs, verify_shapovalov, verify_sum_formula};
use critjantzen::rootdata::{Deformation, FiniteRootSystem};
use critjantzen::scalar::{fmt_rat, parse_rat};
use critjantzen::weylcalc::{down_k, integral_roots, leq, BoxCoords, Classification, WeightBox};
use critjantzen::{Error, Rat, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "critjantzen", version, about = "Restricted Jantzen sums at the critical level")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summary of a finite root system.
    Roots {
        #[arg(long)]
        series: String,
    },
    /// Right-hand side of the sum formula, optionally checked against the oracle.
    Sumformula {
        #[command(flatten)]
        weight: WeightSpec,
        #[command(flatten)]
        window: Window,
        #[arg(long)]
        verify: bool,
    },
    /// Truncated character of a Verma, restricted Verma or simple module.
    Char {
        #[command(flatten)]
        weight: WeightSpec,
        #[command(flatten)]
        window: Window,
        #[arg(long, conflicts_with = "simple")]
        restricted: bool,
        #[arg(long)]
        simple: bool,
    },
    /// Iterated down operator `α↓ᵏλ`.
    Down {
        #[command(flatten)]
        weight: WeightSpec,
        /// Finite root in simple-root coordinates, e.g. "1,1".
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Oracle Gram determinants against the product formula.
    VerifyShapovalov {
        #[command(flatten)]
        weight: WeightSpec,
        #[command(flatten)]
        window: Window,
        #[arg(long, value_parser = parse_direction, default_value = "rho")]
        direction: Deformation,
    },
    /// Randomized consistency checks on small critical weights.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        cases: usize,
    },
}

#[derive(Args)]
struct WeightSpec {
    #[arg(long)]
    series: String,
    /// Finite coroot coordinates, e.g. "0" or "1,-2/3".
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long)]
    critical: bool,
    #[arg(long, allow_hyphen_values = true)]
    level: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    ddeg: Option<String>,
}

#[derive(Args)]
struct Window {
    #[arg(long, default_value_t = 2)]
    dmax: u32,
    /// Defaults to twice `dmax`.
    #[arg(long)]
    hmax: Option<u32>,
}

impl Window {
    fn weight_box(&self) -> WeightBox {
        WeightBox::new(self.dmax, self.hmax.unwrap_or(2 * self.dmax))
    }
}

fn parse_direction(s: &str) -> Result<Deformation, String> {
    s.parse::<Deformation>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Out = Result<(Value, Vec<Vec<String>>, bool), Failure>;

fn parse_list(s: &str) -> Result<Vec<Rat>, Failure> {
    s.split(',').map(|x| parse_rat(x).map_err(Failure::from)).collect()
}

fn build(spec: &WeightSpec) -> Result<(FiniteRootSystem, Weight), Failure> {
    let sys = FiniteRootSystem::from_series(&spec.series)?;
    let finite = parse_list(&spec.weight)?;
    if finite.len() != sys.rank() {
        return Err(Error::RankMismatch(finite.len(), sys.rank()).into());
    }
    let level = match (&spec.level, spec.critical) {
        (Some(l), true) => {
            let l = parse_rat(l)?;
            if l != sys.critical_level() {
                return Err(Failure::Usage(format!(
                    "--critical forces level {} but --level {} was given",
                    fmt_rat(&sys.critical_level()),
                    fmt_rat(&l)
                )));
            }
            l
        }
        (Some(l), false) => parse_rat(l)?,
        (None, true) => sys.critical_level(),
        (None, false) => Rat::from_integer(0.into()),
    };
    let ddeg = spec.ddeg.as_deref().map(parse_rat).transpose()?.unwrap_or_else(|| Rat::from_integer(0.into()));
    Ok((sys, Weight::new(finite, level, ddeg)))
}

/// `μ` written as `λ − Σ aᵢαᵢ − mδ`.
fn offset(sys: &FiniteRootSystem, nu: &BoxCoords) -> String {
    let mut s = String::from("lambda");
    let theta = sys.theta();
    for (i, &c) in nu.cfin.iter().enumerate() {
        let a = i64::from(c) - i64::from(nu.c0) * theta[i];
        push_term(&mut s, a, &format!("alpha{}", i + 1));
    }
    push_term(&mut s, i64::from(nu.c0), "delta");
    s
}

fn push_term(s: &mut String, a: i64, name: &str) {
    match a {
        0 => {}
        1 => s.push_str(&format!(" - {name}")),
        -1 => s.push_str(&format!(" + {name}")),
        a if a > 0 => s.push_str(&format!(" - {a}*{name}")),
        a => s.push_str(&format!(" + {}*{name}", -a)),
    }
}

fn classification_name(c: &Classification) -> &'static str {
    match c {
        Classification::Generic => "generic",
        Classification::Subgeneric(_) => "subgeneric",
        Classification::General => "general",
    }
}

fn character_rows(sys: &FiniteRootSystem, ch: &Character) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["c0".into(), "cfin".into(), "mu".into(), "value".into()]];
    for (nu, v) in ch.entries() {
        let cfin: Vec<String> = nu.cfin.iter().map(u32::to_string).collect();
        rows.push(vec![nu.c0.to_string(), cfin.join(","), offset(sys, nu), v.to_string()]);
    }
    rows
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn cmd_roots(series: &str) -> Out {
    let sys = FiniteRootSystem::from_series(series)?;
    let form: Vec<Vec<String>> = sys.form_matrix().iter().map(|r| r.iter().map(fmt_rat).collect()).collect();
    let v = json!({
        "series": sys.name(),
        "rank": sys.rank(),
        "roots": sys.roots().len(),
        "positive_roots": sys.positive_roots(),
        "theta": sys.theta(),
        "dual_coxeter": sys.dual_coxeter(),
        "critical_level": fmt_rat(&sys.critical_level()),
        "form": form,
    });
    let join = |r: &[i64]| r.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    let mut rows = vec![
        vec!["series".into(), sys.name()],
        vec!["roots".into(), sys.roots().len().to_string()],
        vec!["theta".into(), join(sys.theta())],
        vec!["dual_coxeter".into(), sys.dual_coxeter().to_string()],
    ];
    for (i, r) in form.iter().enumerate() {
        rows.push(vec![format!("form{}", i + 1), r.join(",")]);
    }
    Ok((v, rows, true))
}

fn cmd_sumformula(spec: &WeightSpec, bx: WeightBox, verify: bool) -> Out {
    let (sys, lambda) = build(spec)?;
    let class = integral_roots(&sys, &lambda).classification;
    if verify {
        let rep = verify_sum_formula(&sys, &lambda, bx)?;
        let mut rows = vec![vec!["mu".into(), "lhs".into(), "rhs".into(), "match".into()]];
        for r in &rep.rows {
            let lhs = r.lhs.map_or("-".into(), |x| x.to_string());
            rows.push(vec![offset(&sys, &r.nu), lhs, r.rhs.to_string(), r.matches.to_string()]);
        }
        let mut v = to_value(&rep);
        v["classification"] = json!(classification_name(&class));
        let ok = rep.verdict;
        if !rep.verified {
            v["note"] = json!("unverified: no oracle for this series");
        }
        return Ok((v, rows, ok));
    }
    let rhs = sum_formula_rhs(&sys, &lambda, bx)?;
    let v = json!({
        "lambda": to_value(&lambda),
        "box": to_value(&bx),
        "classification": classification_name(&class),
        "character": to_value(&rhs),
    });
    Ok((v, character_rows(&sys, &rhs), true))
}

fn cmd_char(spec: &WeightSpec, bx: WeightBox, restricted: bool, simple: bool) -> Out {
    let (sys, lambda) = build(spec)?;
    let (kind, ch) = if simple {
        ("simple", ch_simple_subgeneric(&sys, &lambda, bx)?)
    } else if restricted {
        ("restricted", ch_restricted_verma(&sys, &lambda, bx)?)
    } else {
        ("verma", ch_verma(&sys, &lambda, bx))
    };
    let v = json!({ "kind": kind, "character": to_value(&ch), "box": to_value(&bx) });
    Ok((v, character_rows(&sys, &ch), true))
}

fn cmd_down(spec: &WeightSpec, alpha: &str, k: usize) -> Out {
    let (sys, lambda) = build(spec)?;
    let alpha: Vec<i64> = alpha
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Failure::Usage(format!("bad root coordinate {x:?}"))))
        .collect::<Result<_, _>>()?;
    if alpha.len() != sys.rank() || !sys.is_root(&alpha) {
        return Err(Failure::Usage(format!("{alpha:?} is not a root of {}", sys.name())));
    }
    let mu = down_k(&sys, &alpha, &lambda, k)?;
    let nu = leq(&sys, &mu, &lambda).ok_or(Error::NotBelow)?;
    let rel = offset(&sys, &nu);
    let v = json!({
        "lambda": to_value(&lambda),
        "alpha": alpha,
        "k": k,
        "mu": to_value(&mu),
        "coords": to_value(&nu),
        "relative": rel,
    });
    let rows = vec![vec!["mu".into(), mu.to_string()], vec!["relative".into(), rel]];
    Ok((v, rows, true))
}

fn cmd_shapovalov(spec: &WeightSpec, bx: WeightBox, dir: Deformation) -> Out {
    let (sys, lambda) = build(spec)?;
    let rep = verify_shapovalov(&sys, &lambda, bx, dir)?;
    let mut rows = vec![vec!["eta".into(), "oracle".into(), "formula".into(), "status".into()]];
    for r in &rep.rows {
        rows.push(vec![r.eta.to_string(), r.oracle.clone(), r.formula.clone(), format!("{:?}", r.status)]);
    }
    Ok((to_value(&rep), rows, rep.verdict))
}

fn random_weight(rng: &mut ChaCha8Rng, sys: &FiniteRootSystem) -> Weight {
    let finite = (0..sys.rank())
        .map(|_| {
            let den = [1i64, 1, 2, 3][rng.gen_range(0..4)];
            Rat::new(rng.gen_range(-3i64..=3).into(), den.into())
        })
        .collect();
    Weight::new(finite, sys.critical_level(), Rat::from_integer(0.into()))
}

fn cmd_selftest(seed: u64, cases: usize) -> Out {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut results = Vec::new();
    let mut rows = vec![vec!["series".into(), "lambda".into(), "check".into(), "ok".into()]];
    let mut all = true;
    for i in 0..cases {
        let series = if i % 2 == 0 { "A1" } else { "A2" };
        let sys = FiniteRootSystem::from_series(series)?;
        let lambda = random_weight(&mut rng, &sys);
        let bx = if series == "A1" { WeightBox::new(2, 4) } else { WeightBox::new(1, 3) };
        let start = Instant::now();
        let class = integral_roots(&sys, &lambda).classification;
        let mut checks = vec![("sum_formula", verify_sum_formula(&sys, &lambda, bx)?.verdict)];
        let link = linkage_check(&sys, &lambda, bx)?;
        checks.push(("linkage", link.verdict));
        for (name, ok) in &checks {
            all &= *ok;
            rows.push(vec![series.into(), lambda.to_string(), (*name).into(), ok.to_string()]);
        }
        results.push(json!({
            "series": series,
            "lambda": to_value(&lambda),
            "classification": classification_name(&class),
            "checks": checks.iter().map(|(n, ok)| json!({"check": n, "ok": ok})).collect::<Vec<_>>(),
            "millis": start.elapsed().as_millis() as u64,
        }));
    }
    Ok((json!({ "seed": seed, "cases": results, "verdict": all }), rows, all))
}

fn emit(format: Format, v: &Value, rows: &[Vec<String>]) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("json")),
        Format::Tsv => {
            for r in rows {
                println!("{}", r.join("\t"));
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.cmd {
        Cmd::Roots { series } => cmd_roots(series),
        Cmd::Sumformula { weight, window, verify } => cmd_sumformula(weight, window.weight_box(), *verify),
        Cmd::Char { weight, window, restricted, simple } => {
            cmd_char(weight, window.weight_box(), *restricted, *simple)
        }
        Cmd::Down { weight, alpha, k } => cmd_down(weight, alpha, *k),
        Cmd::VerifyShapovalov { weight, window, direction } => cmd_shapovalov(weight, window.weight_box(), *direction),
        Cmd::Selftest { seed, cases } => cmd_selftest(*seed, *cases),
    };
    match out {
        Ok((v, rows, ok)) => {
            emit(cli.format, &v, &rows);
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
