//! `ktpf`: command-line front end.
//!
//! Exit codes: 0 success, 1 failed check (identity or simulator mismatch),
//! 2 parse error, 3 invalid order or tuple, 4 budget exceeded.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ktpf::atleast::{self, AtLeastInstance, SweepRow};
use ktpf::counting::{self, CountReport};
use ktpf::enumeration::{self, DEFAULT_TPF_BUDGET};
use ktpf::{BigCount, Configuration, Error, ExactTpf, Order};

#[derive(Parser, Debug)]
#[command(name = "ktpf", version, about = "Exact k-typed parking functions")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Cap on enumerated items or simulated branches.
    #[arg(long, global = true, env = "KTPF_BUDGET")]
    budget: Option<u64>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Sim,
    Iter,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Tpfs,
    Families,
    Configs,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Park a tuple such as "(4;(0,1,1,2,2))" and print the street.
    Park {
        tpf: String,
        #[arg(long, value_enum, default_value = "sim")]
        method: Method,
    },
    /// Number of exact TPFs of an order, e.g. 1,1,1.
    Count { order: String },
    /// Number of distinct streets of an order.
    Configs { order: String },
    /// Size of the family of a tuple.
    Famsize { tpf: String },
    /// Generative multiset of a tuple.
    Gm { tpf: String },
    /// Stream every tuple, family, or street of an order.
    Enumerate {
        order: String,
        #[arg(long, value_enum, default_value = "tpfs")]
        what: What,
    },
    /// List every parking permutation of a tuple.
    Family { tpf: String },
    /// Check the family-sum identity on every order up to the given size.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
    },
    /// Streets reachable under at-least preferences (two types).
    Atleast {
        m1: usize,
        /// Comma-separated lower bounds, e.g. 2,3,4.
        prefs: Option<String>,
        /// Only print the distinct count, computed without simulating branches.
        #[arg(long)]
        count_only: bool,
        /// Tabulate every lower-bound tuple over 0..=m1 instead.
        #[arg(long, conflicts_with_all = ["prefs", "count_only"])]
        sweep: bool,
        #[arg(long, default_value_t = 0, requires = "sweep")]
        min_len: usize,
        #[arg(long, default_value_t = 3, requires = "sweep")]
        max_len: usize,
    },
}

/// Failure of a run: an error from the library, or a check that came out false.
enum Failure {
    Lib(Error),
    Check(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } | Error::IntegerRange { .. } => 2,
        Error::EmptyOrder
        | Error::ZeroPart { .. }
        | Error::InvalidTpf(_)
        | Error::InvalidConfiguration(_)
        | Error::AtLeastBound { .. } => 3,
        Error::BudgetExceeded { .. } => 4,
        Error::Overflow => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // everything but enumeration is buffered so a failure leaves stdout empty
    let mut out = Vec::new();
    let res = run(&cli, &mut out);
    let code = match res {
        Ok(()) => 0,
        Err(Failure::Lib(e)) => {
            out.clear();
            eprintln!("error: {e}");
            exit_code(&e)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            1
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            1
        }
    };
    if io::stdout().lock().write_all(&out).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}

fn tpf_arg(s: &str) -> Result<ExactTpf, Error> {
    s.parse()
}

fn order_arg(s: &str) -> Result<Order, Error> {
    s.parse()
}

fn labels(c: &Configuration) -> serde_json::Value {
    json!(c.street())
}

fn run(cli: &Cli, out: &mut Vec<u8>) -> Result<(), Failure> {
    let fmt = |default| cli.format.unwrap_or(default);
    match &cli.cmd {
        Cmd::Park { tpf, method } => {
            let a = tpf_arg(tpf)?;
            let sim = ktpf::park_simultaneous(&a)?;
            let iter = ktpf::park_iterative(&a)?;
            let shown: Vec<(&str, &Configuration)> = match method {
                Method::Sim => vec![("simultaneous", &sim)],
                Method::Iter => vec![("iterative", &iter)],
                Method::Both => vec![("simultaneous", &sim), ("iterative", &iter)],
            };
            for (name, c) in &shown {
                match fmt(Format::Plain) {
                    Format::Plain => writeln!(out, "{c}")?,
                    Format::Csv => writeln!(out, "{name},\"{c}\"")?,
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({"tpf": a.to_string(), "method": name, "config": labels(c)})
                    )?,
                }
            }
            if *method == Method::Both && sim != iter {
                return Err(Failure::Check(format!("simulators disagree on {a}: {sim} vs {iter}")));
            }
        }
        Cmd::Count { order } => {
            let o = order_arg(order)?;
            let n: BigCount = counting::count_tpfs(&o)?;
            write_count(out, fmt(Format::Plain), "order", &o.to_string(), "count", &n)?;
        }
        Cmd::Configs { order } => {
            let o = order_arg(order)?;
            let n: BigCount = counting::count_configurations(&o)?;
            write_count(out, fmt(Format::Plain), "order", &o.to_string(), "configurations", &n)?;
        }
        Cmd::Famsize { tpf } => {
            let a = tpf_arg(tpf)?;
            let n: BigCount = counting::family_size(&a)?;
            write_count(out, fmt(Format::Plain), "tpf", &a.to_string(), "family_size", &n)?;
        }
        Cmd::Gm { tpf } => {
            let a = tpf_arg(tpf)?;
            let gm = a.generative_multiset()?;
            match fmt(Format::Plain) {
                Format::Plain => writeln!(out, "{gm}")?,
                Format::Csv => {
                    writeln!(out, "type,gap,count")?;
                    for (i, pairs) in gm.0.iter().enumerate() {
                        for (g, n) in pairs {
                            writeln!(out, "{},{g},{n}", i + 2)?;
                        }
                    }
                }
                Format::Json => writeln!(out, "{}", json!({"tpf": a.to_string(), "gm": gm.0}))?,
            }
        }
        Cmd::Enumerate { order, what } => {
            let o = order_arg(order)?;
            let cap = cli.budget.unwrap_or(DEFAULT_TPF_BUDGET);
            let size: BigCount = match what {
                What::Tpfs => counting::count_tpfs(&o)?,
                What::Families | What::Configs => counting::count_configurations(&o)?,
            };
            if size > BigCount::from(cap) {
                return Err(Error::BudgetExceeded {
                    required: size.to_string(),
                    cap,
                }
                .into());
            }
            enumerate(&o, *what, fmt(Format::Json))?;
        }
        Cmd::Family { tpf } => {
            let a = tpf_arg(tpf)?;
            let size: BigCount = counting::family_size(&a)?;
            let cap = cli.budget.unwrap_or(DEFAULT_TPF_BUDGET);
            if size > BigCount::from(cap) {
                return Err(Error::BudgetExceeded {
                    required: size.to_string(),
                    cap,
                }
                .into());
            }
            let canon = a.canonicalize();
            let config = ktpf::park(&a)?;
            let f = fmt(Format::Plain);
            if f == Format::Csv {
                writeln!(out, "tpf")?;
            }
            for m in enumeration::family_members(&a) {
                match f {
                    Format::Plain | Format::Csv => writeln!(out, "{m}")?,
                    Format::Json => writeln!(out, "{}", json!({"tpf": m.to_string()}))?,
                }
            }
            match f {
                Format::Plain => writeln!(out, "size {size} canonical {canon} config {config}")?,
                Format::Csv => {}
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"canonical": canon.to_string(), "config": labels(&config), "size": size.to_string()})
                )?,
            }
        }
        Cmd::Verify { max_m, max_k } => {
            let cap = cli.budget.unwrap_or(DEFAULT_TPF_BUDGET);
            let reports = Order::all_up_to(*max_m, *max_k)
                .iter()
                .map(|o| counting::verify_identity::<BigCount>(o, cap))
                .collect::<Result<Vec<_>, _>>()?;
            write_reports(out, fmt(Format::Plain), &reports)?;
            let bad: Vec<String> = reports.iter().filter(|r| !r.ok()).map(|r| r.order.to_string()).collect();
            if !bad.is_empty() {
                return Err(Failure::Check(format!("identity fails for {}", bad.join(" "))));
            }
        }
        Cmd::Atleast {
            m1,
            prefs,
            count_only,
            sweep,
            min_len,
            max_len,
        } => {
            if *sweep {
                let cap = cli.budget.unwrap_or(atleast::DEFAULT_BRANCH_BUDGET);
                let rows = atleast::atleast_sweep(*m1, *min_len, *max_len, cap)?;
                write_sweep(out, fmt(Format::Csv), &rows)?;
                return Ok(());
            }
            let prefs = match prefs {
                Some(p) => ktpf::order::parse_uint_list(p)?,
                None => Vec::new(),
            };
            let inst = AtLeastInstance::new(*m1, prefs)?;
            let row = SweepRow {
                m1: inst.m1(),
                prefs: inst.prefs().to_vec(),
                branches: inst.branches(),
                distinct_count: atleast::atleast_count(&inst),
            };
            if *count_only {
                match fmt(Format::Plain) {
                    Format::Plain => writeln!(out, "{}", row.distinct_count)?,
                    f => write_sweep(out, f, std::slice::from_ref(&row))?,
                }
                return Ok(());
            }
            let cap = cli.budget.unwrap_or(atleast::DEFAULT_BRANCH_BUDGET);
            let set = atleast::atleast_outcomes(&inst, cap)?;
            match fmt(Format::Plain) {
                Format::Plain => {
                    for (c, n) in &set.outcomes {
                        writeln!(out, "{c} x{n}")?;
                    }
                    writeln!(out, "distinct {} branches {}", set.count(), set.branches)?;
                }
                Format::Csv => {
                    writeln!(out, "config,branches")?;
                    for (c, n) in &set.outcomes {
                        writeln!(out, "\"{c}\",{n}")?;
                    }
                }
                Format::Json => {
                    let outcomes: Vec<_> = set
                        .outcomes
                        .iter()
                        .map(|(c, n)| json!({"config": labels(c), "branches": n.to_string()}))
                        .collect();
                    let mut v = serde_json::to_value(&row).expect("plain data");
                    v["outcomes"] = json!(outcomes);
                    writeln!(out, "{v}")?;
                }
            }
        }
    }
    Ok(())
}

fn write_count(
    out: &mut Vec<u8>,
    f: Format,
    key: &str,
    input: &str,
    name: &str,
    n: &BigCount,
) -> io::Result<()> {
    match f {
        Format::Plain => writeln!(out, "{n}"),
        Format::Csv => writeln!(out, "{key},{name}\n\"{input}\",{n}"),
        Format::Json => writeln!(out, "{}", json!({key: input, name: n.to_string()})),
    }
}

fn write_reports(out: &mut Vec<u8>, f: Format, reports: &[CountReport<BigCount>]) -> io::Result<()> {
    if f == Format::Csv {
        writeln!(
            out,
            "order,total_tpfs,num_configurations,families_enumerated,identity_lhs,identity_holds,families_match"
        )?;
    }
    for r in reports {
        match f {
            Format::Plain => writeln!(
                out,
                "({}) lhs={} rhs={} L={} families={} identity_holds={}",
                r.order, r.identity_lhs, r.total_tpfs, r.num_configurations, r.families_enumerated, r.identity_holds
            )?,
            Format::Csv => writeln!(
                out,
                "\"{}\",{},{},{},{},{},{}",
                r.order,
                r.total_tpfs,
                r.num_configurations,
                r.families_enumerated,
                r.identity_lhs,
                r.identity_holds,
                r.families_match
            )?,
            Format::Json => writeln!(out, "{}", serde_json::to_string(r).expect("plain data"))?,
        }
    }
    Ok(())
}

fn write_sweep(out: &mut Vec<u8>, f: Format, rows: &[SweepRow]) -> io::Result<()> {
    match f {
        Format::Csv => {
            writeln!(out, "{}", SweepRow::CSV_HEADER)?;
            for r in rows {
                writeln!(out, "{}", r.to_csv())?;
            }
        }
        Format::Json => {
            for r in rows {
                writeln!(out, "{}", serde_json::to_string(r).expect("plain data"))?;
            }
        }
        Format::Plain => {
            for r in rows {
                writeln!(out, "({}) {} of {}", atleast::join_prefs(&r.prefs), r.distinct_count, r.branches)?;
            }
        }
    }
    Ok(())
}

/// Streams straight to stdout; the budget was checked before the first line.
fn enumerate(o: &Order, what: What, f: Format) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut w = BufWriter::new(stdout.lock());
    if f == Format::Csv {
        writeln!(w, "tpf,canonical,config")?;
    }
    let mut total: u64 = 0;
    let mut emit = |tpf: &ExactTpf, canonical: &ExactTpf, config: &Configuration| -> io::Result<()> {
        total += 1;
        match f {
            Format::Json => writeln!(
                w,
                "{}",
                json!({"tpf": tpf.to_string(), "canonical": canonical.to_string(), "config": labels(config)})
            ),
            Format::Csv => writeln!(w, "\"{tpf}\",\"{canonical}\",\"{config}\""),
            Format::Plain => match what {
                What::Configs => writeln!(w, "{config}"),
                What::Families => writeln!(w, "{canonical}"),
                What::Tpfs => writeln!(w, "{tpf}"),
            },
        }
    };
    match what {
        What::Tpfs => {
            for t in enumeration::enumerate_tpfs(o) {
                let c = t.canonicalize();
                let config = ktpf::park(&t)?;
                emit(&t, &c, &config)?;
            }
        }
        What::Families | What::Configs => {
            for c in enumeration::enumerate_families(o) {
                let config = ktpf::park(&c)?;
                emit(&c, &c, &config)?;
            }
        }
    }
    match f {
        Format::Json => writeln!(w, "{}", json!({"total": total.to_string()}))?,
        Format::Csv => {}
        Format::Plain => writeln!(w, "total {total}")?,
    }
    w.flush()?;
    Ok(())
}
