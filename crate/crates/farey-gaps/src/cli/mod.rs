//! Command-line interface: argument parsing and dispatch.
//!
//! Exit status is 0 on success, 2 on invalid input and 1 when a verification fails.

pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::continuants::TupleSpec;
use crate::empirical::{scan_with, thread_count, ScanConfig};
use crate::enumeration::{build_tree, enumerate_a_circ, enumerate_bounded, CongruenceSpec};
use crate::farey_triangle::region;
use crate::proportions::{
    admissible_c1, nu_bounded, nu_closed_form, nu_from_enumeration, nu_levels, numeric_eval,
    NuResult, MAX_DIGITS,
};
use crate::ratio_string;
use verify::{run_suite, SuiteReport, VerifyOptions, SUITES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Enum,
    Closed,
    Both,
}

#[derive(Debug, Parser)]
#[command(
    name = "farey-gaps",
    version,
    about = "Gap statistics of Farey fractions with denominators in a residue class"
)]
pub struct Cli {
    /// Output encoding; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Limit proportion nu(r; D, c0).
    Nu {
        #[arg(long)]
        r: usize,
        #[arg(long = "D", default_value_t = 3)]
        d: u64,
        #[arg(long, default_value_t = 0)]
        c0: u64,
        #[arg(long, value_enum, default_value = "both")]
        route: RouteArg,
        #[arg(long, default_value_t = 10)]
        digits: usize,
        /// Index cutoff for bounded mode, required outside D in {2, 3} with c0 = 0.
        #[arg(long)]
        cutoff: Option<u64>,
    },
    /// Polygon T(k_1, ..., k_r).
    Region {
        #[arg(long)]
        tuple: TupleSpec,
        /// Also write an SVG drawing here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Degenerate tuples of length r: finite part and spike families.
    Enumerate {
        #[arg(long)]
        r: usize,
        #[arg(long = "D", default_value_t = 3)]
        d: u64,
        #[arg(long, default_value_t = 0)]
        c0: u64,
        #[arg(long)]
        c1: Option<u64>,
        #[arg(long)]
        cutoff: Option<u64>,
    },
    /// Descendant tree of a seed tuple.
    Tree {
        #[arg(long)]
        seed: TupleSpec,
        #[arg(long)]
        depth: usize,
        #[arg(long = "D", default_value_t = 3)]
        d: u64,
        #[arg(long, default_value_t = 0)]
        c0: u64,
        #[arg(long, default_value_t = 1)]
        c1: u64,
        /// Truncation of unbounded index ranges; defaults to 4 * depth + 1.
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Cyclic gap counts over one period of the Farey sequence of order Q.
    Scan {
        #[arg(long = "Q")]
        q: u64,
        #[arg(long = "D", default_value_t = 3)]
        d: u64,
        #[arg(long, default_value_t = 0)]
        c0: u64,
        #[arg(long, default_value_t = 20)]
        rmax: usize,
        #[arg(long, default_value_t = 10)]
        digits: usize,
        /// Write the CSV table here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        quiet: bool,
    },
    /// Run verification suites.
    Verify {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
        /// Order for the scan-table suite.
        #[arg(long = "Q", default_value_t = VerifyOptions::default().scan_q)]
        q: u64,
    },
    /// Table of nu(r; D, 0) as CSV or JSON.
    Table {
        #[arg(long, default_value_t = 8)]
        from: usize,
        #[arg(long, default_value_t = 80)]
        to: usize,
        #[arg(long = "D", default_value_t = 3)]
        d: u64,
        #[arg(long, value_enum, default_value = "closed")]
        route: RouteArg,
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verification(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn pick(
    format: Option<Format>,
    default: Format,
    allowed: &[Format],
    cmd: &str,
) -> Result<Format, Failure> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(usage(
            format!("{cmd} does not support --format {f:?}").to_lowercase(),
        ))
    }
}

fn print_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).unwrap())?;
    Ok(())
}

/// Parses `args` (program name first) and runs the command; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Verification(m)) => {
            let _ = writeln!(err, "verification failed: {m}");
            1
        }
        Err(Failure::Io(e)) => {
            // a reader that stops early (e.g. `head`) is not worth a message
            if e.kind() != std::io::ErrorKind::BrokenPipe {
                let _ = writeln!(err, "error: {e}");
            }
            1
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Nu {
            r,
            d,
            c0,
            route,
            digits,
            cutoff,
        } => {
            let fmt = pick(
                cli.format,
                Format::Json,
                &[Format::Json, Format::Text],
                "nu",
            )?;
            if *digits > MAX_DIGITS {
                return Err(usage(format!("--digits is limited to {MAX_DIGITS}")));
            }
            if *r == 0 {
                return Err(usage("--r must be at least 1"));
            }
            let exact = (*d == 2 || *d == 3) && *c0 == 0;
            let results: Vec<NuResult> = if let Some(k) = cutoff {
                vec![nu_bounded(*r, *d, *c0, *k).map_err(usage)?]
            } else if !exact {
                return Err(usage(format!(
                    "no exact route for D = {d}, c0 = {c0}; pass --cutoff for bounded mode"
                )));
            } else {
                let mut v = Vec::new();
                if matches!(route, RouteArg::Enum | RouteArg::Both) {
                    v.push(nu_from_enumeration(*r, *d, *c0).map_err(usage)?);
                }
                if matches!(route, RouteArg::Closed | RouteArg::Both) {
                    v.push(nu_closed_form(*r, *d, *c0).map_err(usage)?);
                }
                v
            };
            if results.len() == 2 && results[0].value != results[1].value {
                return Err(Failure::Verification(format!(
                    "routes disagree for r = {r}"
                )));
            }
            match fmt {
                Format::Json => {
                    let mut v = render::nu_json(&results[0], *digits);
                    if results.len() == 2 {
                        v["route"] = json!("both");
                        v["agree"] = json!(true);
                    }
                    print_json(out, &v)?;
                }
                _ => {
                    for res in &results {
                        let body = match &res.value {
                            crate::proportions::NuValue::Exact(v) => {
                                format!("{v} = {}", numeric_eval(v, *digits))
                            }
                            crate::proportions::NuValue::Interval { lower, upper } => {
                                format!("[{}, {}]", ratio_string(lower), ratio_string(upper))
                            }
                        };
                        writeln!(out, "nu({r}; {d}, {c0}) [{:?}] = {body}", res.route)?;
                    }
                }
            }
        }
        Command::Region { tuple, svg } => {
            let fmt = pick(
                cli.format,
                Format::Json,
                &[Format::Json, Format::Text, Format::Svg],
                "region",
            )?;
            let reg = region(tuple);
            if let Some(path) = svg {
                std::fs::write(path, render::region_svg(tuple, &reg))?;
            }
            match fmt {
                Format::Svg => write!(out, "{}", render::region_svg(tuple, &reg))?,
                Format::Text => {
                    let vs: Vec<String> = reg
                        .vertices()
                        .iter()
                        .map(|p| format!("({}, {})", p.x, p.y))
                        .collect();
                    writeln!(
                        out,
                        "T({tuple}): area {}, vertices {}",
                        ratio_string(&reg.area()),
                        vs.join(" ")
                    )?;
                }
                _ => print_json(out, &render::region_json(tuple, &reg))?,
            }
        }
        Command::Enumerate {
            r,
            d,
            c0,
            c1,
            cutoff,
        } => {
            pick(cli.format, Format::Json, &[Format::Json], "enumerate")?;
            let c1 = match c1 {
                Some(c) => *c,
                None => *admissible_c1(*d, *c0)
                    .first()
                    .ok_or_else(|| usage("no admissible c1"))?,
            };
            let spec = CongruenceSpec::new(*d, *c0, c1).map_err(usage)?;
            let dec = match cutoff {
                Some(k) => enumerate_bounded(*r, &spec, *k),
                None => enumerate_a_circ(*r, &spec),
            }
            .map_err(usage)?;
            print_json(out, &render::enumerate_json(&dec))?;
        }
        Command::Tree {
            seed,
            depth,
            d,
            c0,
            c1,
            cap,
            svg,
        } => {
            let fmt = pick(cli.format, Format::Dot, &[Format::Dot, Format::Svg], "tree")?;
            let spec = CongruenceSpec::new(*d, *c0, *c1).map_err(usage)?;
            let cap = cap.unwrap_or(4 * *depth as u64 + 1);
            let tree = build_tree(seed, &spec, *depth, cap).map_err(usage)?;
            if let Some(path) = svg {
                std::fs::write(path, render::tree_svg(&tree))?;
            }
            match fmt {
                Format::Svg => write!(out, "{}", render::tree_svg(&tree))?,
                _ => write!(out, "{}", render::tree_dot(&tree))?,
            }
        }
        Command::Scan {
            q,
            d,
            c0,
            rmax,
            digits,
            out: path,
            quiet,
        } => {
            let fmt = pick(
                cli.format,
                Format::Csv,
                &[Format::Csv, Format::Json],
                "scan",
            )?;
            let cfg = ScanConfig::new(*q, *d, *c0, *rmax).map_err(usage)?;
            let report = |done: usize, total: usize| {
                if done == total || done % 50 == 0 {
                    eprint!("\rscan Q = {}: {done}/{total} segments", cfg.q);
                    if done == total {
                        eprintln!();
                    }
                }
            };
            let h = scan_with(
                &cfg,
                thread_count(),
                if *quiet { None } else { Some(&report) },
            );
            if !h.conservation_holds() {
                return Err(Failure::Verification(
                    "scan conservation identities failed".into(),
                ));
            }
            let body = match fmt {
                Format::Json => {
                    serde_json::to_string_pretty(&render::scan_json(&h, *digits)).unwrap() + "\n"
                }
                _ => render::scan_csv(&h, *digits),
            };
            match path {
                Some(p) => {
                    std::fs::write(p, body)?;
                    writeln!(out, "coloured_total,{}", h.coloured_total)?;
                }
                None => write!(out, "{body}")?,
            }
        }
        Command::Verify { suite, seed, q } => {
            let fmt = pick(
                cli.format,
                Format::Text,
                &[Format::Text, Format::Json],
                "verify",
            )?;
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else if SUITES.contains(&suite.as_str()) {
                vec![suite.as_str()]
            } else {
                return Err(usage(format!(
                    "unknown suite {suite}; known: {}",
                    SUITES.join(", ")
                )));
            };
            let opts = VerifyOptions {
                seed: *seed,
                scan_q: *q,
            };
            let reports = run_suites(&names, &opts);
            match fmt {
                Format::Json => print_json(out, &serde_json::to_value(&reports).unwrap())?,
                _ => {
                    for rep in &reports {
                        for c in &rep.checks {
                            let mark = if c.passed { "PASS" } else { "FAIL" };
                            writeln!(out, "{mark} {}: {} ({})", rep.suite, c.name, c.detail)?;
                        }
                    }
                }
            }
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| !r.passed)
                .map(|r| r.suite.as_str())
                .collect();
            if !failed.is_empty() {
                return Err(Failure::Verification(failed.join(", ")));
            }
        }
        Command::Table {
            from,
            to,
            d,
            route,
            digits,
        } => {
            let fmt = pick(
                cli.format,
                Format::Csv,
                &[Format::Csv, Format::Json],
                "table",
            )?;
            if *from == 0 || from > to {
                return Err(usage("need 1 <= --from <= --to"));
            }
            if *d != 2 && *d != 3 {
                return Err(usage("tables exist for D = 2 and D = 3"));
            }
            let values = match route {
                RouteArg::Closed => (*from..=*to)
                    .map(|r| nu_closed_form(r, *d, 0).map(|x| x.exact().unwrap().clone()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(usage)?,
                RouteArg::Enum | RouteArg::Both => {
                    let all = nu_levels(*to, *d, 0).map_err(usage)?;
                    if *route == RouteArg::Both {
                        for r in *from..=*to {
                            if nu_closed_form(r, *d, 0).map_err(usage)?.exact() != Some(&all[r - 1])
                            {
                                return Err(Failure::Verification(format!(
                                    "routes disagree at r = {r}"
                                )));
                            }
                        }
                    }
                    all[*from - 1..].to_vec()
                }
            };
            if fmt == Format::Json {
                let rows: Vec<Value> = values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        json!({
                            "r": from + i,
                            "exact": render::symbolic_json(v),
                            "decimal": numeric_eval(v, *digits),
                        })
                    })
                    .collect();
                return print_json(out, &json!({ "D": d, "c0": 0, "rows": rows }));
            }
            writeln!(out, "r,nu,decimal")?;
            for (i, v) in values.iter().enumerate() {
                let exact = match v.as_rational() {
                    Some(q) => ratio_string(q),
                    None => v.to_string(),
                };
                writeln!(out, "{},{},{}", from + i, exact, numeric_eval(v, *digits))?;
            }
        }
    }
    Ok(())
}

/// Runs suites, concurrently when more than one thread is allowed; output keeps suite order.
pub fn run_suites(names: &[&str], opts: &VerifyOptions) -> Vec<SuiteReport> {
    let threads = thread_count();
    if threads <= 1 || names.len() == 1 {
        return names.iter().filter_map(|n| run_suite(n, opts)).collect();
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = names
            .iter()
            .map(|n| s.spawn(move || run_suite(n, opts)))
            .collect();
        handles
            .into_iter()
            .filter_map(|h| h.join().unwrap())
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("farey-gaps").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn nu_both_routes() {
        let (code, out, _) = call(&["nu", "--r", "6", "--D", "3", "--route", "both"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["exact"]["rational"], "3089/85085");
        assert_eq!(v["agree"], true);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["nu", "--r", "2", "--D", "5"]).0, 2);
        assert_eq!(call(&["region", "--tuple", "2,(1,0)^0"]).0, 2);
        assert_eq!(call(&["region", "--tuple", "1", "--format", "dot"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["verify", "--suite", "nope"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn region_json_area() {
        let (code, out, _) = call(&["region", "--tuple", "2,4,1"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["area"], "1/210");
        assert_eq!(v["vertices"][0], json!(["4/5", "3/5"]));
    }
}
