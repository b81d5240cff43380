mod render;

use std::collections::BTreeMap;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use dellac::bijections::{
    even_expand, even_reduce, odd_expand, odd_reduce, p_fiber, p_forward, pi_fiber, pi_forward,
};
use dellac::enumerate::{enum_sp, Enumeration};
use dellac::json::{parse_cells, parse_label_function, TableauDoc};
use dellac::seq::{c_triangle, d_poly, l_seq, median_l, median_r, p_poly, p_via_cf, p_via_pistols, r_seq};
use dellac::stats::{bar_inv, fixed_pairs, forward_labels, inv, inversions, nu_labels, tilde_inv, OddPathReport, PathReport};
use dellac::sums::{poincare, Variety};
use dellac::verify::{self, Suite};
use dellac::{DellacConfig, Kind, Tableau};

const DEFAULT_MAX_N: usize = 9;

#[derive(Parser)]
#[command(name = "dellac", version, about = "Dellac configurations: enumeration, statistics, maps and checks")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for the exhaustive sums (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest number of items `enumerate` may produce.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    limit: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Lists every configuration of a family, one per line.
    Enumerate {
        /// dc, sdc, te, to or sp.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
    },
    /// Statistics of one configuration.
    Stats {
        /// JSON document, a file path, or `-` for stdin.
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, default_value_t = Report::Paths)]
        report: Report,
    },
    /// Poincaré polynomial in q, as ascending coefficients.
    Poincare {
        /// a, sp or so.
        #[arg(long)]
        variety: String,
        #[arg(long)]
        n: usize,
    },
    /// Polynomials and integer sequences.
    Poly {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Via::Recurrence)]
        via: Via,
    },
    /// Applies one of the maps between families.
    Map {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long = "in")]
        input: String,
        /// Point set for `pi-fiber`, as a JSON list of "j:i".
        #[arg(long)]
        x: Option<String>,
        /// Label function for `p-fiber`, as a JSON object {"j": word}.
        #[arg(long)]
        l: Option<String>,
    },
    /// Runs the acceptance checks; exits nonzero if any fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Caps every size used by the checks.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Draws a configuration as SVG.
    Render {
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, default_value_t = render::Overlay::None)]
        overlay: render::Overlay,
        /// Side of one box in pixels.
        #[arg(long, default_value_t = 24)]
        cell: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Report {
    Inv,
    Paths,
    Labels,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "D")]
    D,
    #[value(name = "P")]
    P,
    #[value(name = "c")]
    C,
    #[value(name = "l")]
    L,
    #[value(name = "r")]
    R,
    #[value(name = "L")]
    MedianL,
    #[value(name = "R")]
    MedianR,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Recurrence,
    Pistols,
    Cf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    EvenExpand,
    EvenReduce,
    OddExpand,
    OddReduce,
    Pi,
    PiFiber,
    P,
    PFiber,
}

fn max_n() -> Result<usize> {
    match std::env::var("DELLAC_MAX_N") {
        Ok(v) => v.parse().with_context(|| format!("DELLAC_MAX_N={v:?} is not a size")),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn guard(n: usize) -> Result<()> {
    let cap = max_n()?;
    if n > cap {
        bail!("size {n} is above the cap {cap} (raise DELLAC_MAX_N to allow it)");
    }
    Ok(())
}

fn read_input(arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).with_context(|| format!("cannot read {arg}"))
}

fn doc(arg: &str) -> Result<TableauDoc> {
    Ok(TableauDoc::parse(&read_input(arg)?)?)
}

fn rows_csv(t: &Tableau) -> String {
    t.rows().iter().map(|c| c.map_or("0".into(), |c| c.to_string())).collect::<Vec<_>>().join(",")
}

struct Out {
    format: Format,
    buf: io::BufWriter<io::Stdout>,
}

impl Out {
    fn json(&mut self, v: &impl Serialize) -> Result<()> {
        serde_json::to_writer(&mut self.buf, v)?;
        writeln!(self.buf)?;
        Ok(())
    }

    fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.buf, "{s}")?;
        Ok(())
    }

    /// A value that is a flat list in CSV and JSON otherwise.
    fn list(&mut self, items: &[String]) -> Result<()> {
        match self.format {
            Format::Json => self.json(&items),
            Format::Csv => self.line(&items.join(",")),
        }
    }
}

fn enumerate(out: &mut Out, kind: &str, n: usize, limit: usize) -> Result<()> {
    guard(n)?;
    if kind == "sp" {
        for (k, f) in enum_sp(n)?.iter().enumerate() {
            if k == limit {
                bail!("enumeration exceeded the limit of {limit} items");
            }
            let vals: Vec<String> = f.values().iter().map(ToString::to_string).collect();
            out.list(&vals)?;
        }
        return Ok(());
    }
    let kind: Kind = kind.parse()?;
    let e = Enumeration::new(kind, n)?;
    let mut err = None;
    e.for_each_limited(limit, |t| {
        if err.is_some() {
            return;
        }
        let r = match out.format {
            Format::Json => out.json(&TableauDoc::new(kind, t)),
            Format::Csv => out.line(&rows_csv(t)),
        };
        if let Err(e) = r {
            err = Some(e);
        }
    })?;
    err.map_or(Ok(()), Err)
}

fn stats(out: &mut Out, input: &str, report: Report) -> Result<()> {
    let d = doc(input)?;
    let t = d.tableau()?;
    match report {
        Report::Inv => {
            let pairs: Vec<[String; 2]> = inversions(&t).iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect();
            let dc = matches!(d.kind, Kind::Dellac | Kind::Symmetric);
            let mut v = json!({ "inv": inv(&t), "inversions": pairs });
            if dc {
                let sym = DellacConfig::new(t.clone())?.is_symmetric();
                v["symmetric"] = json!(sym);
                v["tilde_inv"] = json!(tilde_inv(&t));
                v["bar_inv"] = json!(bar_inv(&t));
                v["fixed_pairs"] = json!(fixed_pairs(&t));
            }
            out.json(&v)
        }
        Report::Paths => match d.kind {
            Kind::EvenExtended => out.json(&PathReport::new(&d.even()?)),
            Kind::OddExtended => out.json(&OddPathReport::new(&d.odd()?)),
            _ => bail!("path statistics need an extended configuration (te or to)"),
        },
        Report::Labels => {
            let t = d.even()?;
            let rep = PathReport::new(&t);
            let fwd: BTreeMap<String, _> = forward_labels(&t, &rep).into_iter().map(|(p, l)| (p.to_string(), l)).collect();
            let nu: BTreeMap<String, _> = nu_labels(&rep).into_iter().map(|(p, l)| (p.to_string(), l)).collect();
            out.json(&json!({ "forward": fwd, "nu": nu }))
        }
    }
}

fn poly(out: &mut Out, family: Family, n: usize, via: Via) -> Result<()> {
    let int = |out: &mut Out, v: num_bigint::BigInt| out.list(&[v.to_string()]);
    match family {
        Family::D => out.list(&d_poly(n).to_strings()),
        Family::P => {
            let p = match via {
                Via::Recurrence => p_poly(n)?,
                Via::Pistols => {
                    guard(n)?;
                    p_via_pistols(n)?
                }
                Via::Cf => p_via_cf(n)?,
            };
            out.list(&p.to_strings())
        }
        Family::C => {
            let tri: Vec<Vec<String>> = c_triangle(n).iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            match out.format {
                Format::Json => out.json(&tri),
                Format::Csv => tri.iter().try_for_each(|r| out.line(&r.join(","))),
            }
        }
        Family::L => int(out, l_seq(n)?),
        Family::R => int(out, r_seq(n)?),
        Family::MedianL => int(out, median_l(n)?),
        Family::MedianR => int(out, median_r(n)?),
    }
}

fn map(out: &mut Out, op: Op, input: &str, x: Option<&str>, l: Option<&str>) -> Result<()> {
    let d = doc(input)?;
    let v = match op {
        Op::EvenExpand => {
            let s = even_expand(&d.labeled_even()?)?;
            json!(TableauDoc::new(Kind::Symmetric, s.tableau()))
        }
        Op::OddExpand => {
            let s = odd_expand(&d.labeled_odd()?)?;
            json!(TableauDoc::new(Kind::Symmetric, s.tableau()))
        }
        Op::EvenReduce => {
            let l = even_reduce(&DellacConfig::new(d.tableau()?)?)?;
            json!(TableauDoc::new(Kind::EvenExtended, l.base()).with_labels(l.labels()))
        }
        Op::OddReduce => {
            let l = odd_reduce(&DellacConfig::new(d.tableau()?)?)?;
            json!(TableauDoc::new(Kind::OddExtended, l.base()).with_labels(l.labels()))
        }
        Op::Pi => {
            let img = pi_forward(&d.even()?)?;
            json!({ "tableau": TableauDoc::new(Kind::EvenExtended, &img.tableau), "x": img.x })
        }
        Op::PiFiber => {
            let x = parse_cells(&read_input(x.ok_or_else(|| anyhow!("pi-fiber needs --x"))?)?)?;
            let f = pi_fiber(&d.even()?, &x)?;
            let labels: BTreeMap<String, _> = f.labels.iter().map(|(p, l)| (p.to_string(), *l)).collect();
            let ts: Vec<TableauDoc> = f.tableaux.iter().map(|t| TableauDoc::new(Kind::EvenExtended, t)).collect();
            json!({ "situation": f.situation, "labels": labels, "tableaux": ts })
        }
        Op::P => json!(TableauDoc::new(Kind::OddExtended, p_forward(&d.even()?)?.tableau())),
        Op::PFiber => {
            let l = parse_label_function(&read_input(l.ok_or_else(|| anyhow!("p-fiber needs --l"))?)?)?;
            json!(TableauDoc::new(Kind::EvenExtended, p_fiber(&d.odd()?, &l)?.tableau()))
        }
    };
    out.json(&v)
}

fn run_verify(out: &mut Out, suite: &str, cap: Option<usize>) -> Result<bool> {
    let suite: Suite = suite.parse()?;
    let cap = cap.unwrap_or(usize::MAX).min(max_n()?);
    let reports = verify::run(suite, cap);
    match out.format {
        Format::Json => out.json(&reports)?,
        Format::Csv => {
            out.line("id,name,status,elapsed_ms,budget_ms")?;
            for r in &reports {
                let status = if r.pass { "pass" } else { "fail" };
                out.line(&format!("{},{:?},{status},{},{}", r.id, r.name, r.elapsed_ms, r.budget_ms))?;
            }
        }
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        format: cli.format,
        buf: io::BufWriter::new(io::stdout()),
    };
    let res = (|| -> Result<bool> {
        if let Some(k) = cli.threads {
            rayon::ThreadPoolBuilder::new().num_threads(k).build_global()?;
        }
        match &cli.cmd {
            Cmd::Enumerate { kind, n } => enumerate(&mut out, kind, *n, cli.limit)?,
            Cmd::Stats { input, report } => stats(&mut out, input, *report)?,
            Cmd::Poincare { variety, n } => {
                guard(*n)?;
                let v: Variety = variety.parse()?;
                out.list(&poincare(v, *n)?.to_strings())?;
            }
            Cmd::Poly { family, n, via } => poly(&mut out, *family, *n, *via)?,
            Cmd::Map { op, input, x, l } => map(&mut out, *op, input, x.as_deref(), l.as_deref())?,
            Cmd::Verify { suite, max_n } => return run_verify(&mut out, suite, *max_n),
            Cmd::Render { input, overlay, cell } => {
                let d = doc(input)?;
                out.line(&render::svg(&d, *overlay, *cell)?)?;
            }
        }
        Ok(true)
    })();
    let flushed = out.buf.flush();
    match (res, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), _) => ExitCode::FAILURE,
        (Err(e), _) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
