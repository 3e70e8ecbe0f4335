//! Command-line front end.
//!
//! ```text
//! frobnum count SPEC --p P (--a A | --sylow) [--json]
//! frobnum verify --theorem frobenius|kulakoff-hall|cyclic|hall-oracle|multiplicativity [--corpus FILE]
//! frobnum classify --p P (--n N | --scan N_MAX) [--corpus FILE] [--max-a A] [--json]
//! frobnum inspect SPEC
//! ```
//!
//! `SPEC` uses the group-spec grammar of [`crate::groups`], e.g. `GL2(9)`,
//! `AbelianP(3,[2,1,1])`, `FrobeniusAffine(19,3)` or
//! `Product(GL2(3),FrobeniusAffine(7,3))`. Corpus files hold one spec per line
//! with `#` comments.
//!
//! Exit codes: 0 success, 1 a checked statement was violated, 2 malformed
//! input, 3 a resource cap was hit, 4 a precondition failed. Diagnostics go to
//! the error stream only.

use std::ffi::OsString;
use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::corpus::Corpus;
use crate::counting::{count_sylow, Caps, GroupContext};
use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::perm::{is_2_transitive, is_primitive, is_transitive, orbits};
use crate::report::{to_json, CountJson, VerdictJson};
use crate::verify::{
    classify_number, evaluate_cyclic_criterion, frobenius_row, kulakoff_hall_row, scan_range,
    verify_hall_oracle, verify_sylow_multiplicativity, Verdict,
};

#[derive(Parser, Debug)]
#[command(name = "frobnum", version, about = "Count subgroups of prime-power order in small finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count the subgroups of order p^a of one group.
    #[command(group(ArgGroup::new("order").required(true).args(["a", "sylow"])))]
    Count {
        spec: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: Option<u32>,
        /// Use the full p-part of the group order.
        #[arg(long)]
        sylow: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check a congruence theorem over every group of a corpus.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Corpus file; the shipped corpus when omitted.
        #[arg(long)]
        corpus: Option<String>,
        /// Test hook: add one to the count for `SPEC:P:A`.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Decide whether n can be a count of subgroups of order p^a.
    #[command(group(ArgGroup::new("target").required(true).args(["n", "scan"])))]
    Classify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: Option<u64>,
        /// Classify every candidate up to this bound.
        #[arg(long, value_name = "N_MAX")]
        scan: Option<u64>,
        #[arg(long)]
        corpus: Option<String>,
        /// Only search exponents up to this value.
        #[arg(long)]
        max_a: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Print basic facts about one group.
    Inspect { spec: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Frobenius,
    KulakoffHall,
    Cyclic,
    HallOracle,
    Multiplicativity,
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Count { spec, p, a, sylow: _, json } => cmd_count(&spec, p, a, json, out),
        Command::Verify {
            theorem,
            corpus,
            inject_fault,
        } => cmd_verify(theorem, corpus.as_deref(), inject_fault.as_deref(), out),
        Command::Classify {
            p,
            n,
            scan,
            corpus,
            max_a,
            json,
        } => cmd_classify(p, n, scan, corpus.as_deref(), max_a, json, out),
        Command::Inspect { spec } => cmd_inspect(&spec, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
        Err(CliError::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

enum CliError {
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

type CliResult = std::result::Result<i32, CliError>;

fn parse_spec(text: &str) -> Result<GroupSpec> {
    text.parse()
}

fn load_corpus(path: Option<&str>) -> std::result::Result<Corpus, CliError> {
    match path {
        None => Ok(Corpus::default_corpus()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read corpus {path}: {e}")))?;
            Ok(Corpus::parse(&text)?)
        }
    }
}

fn cmd_count(spec: &str, p: u64, a: Option<u32>, json: bool, out: &mut dyn Write) -> CliResult {
    let spec = parse_spec(spec)?;
    let ctx = GroupContext::from_spec(&spec, Caps::default())?;
    let a = a.unwrap_or_else(|| ctx.sylow_exponent(p));
    let report = ctx.count(p, a)?;
    if json {
        writeln!(out, "{}", to_json(&CountJson::from(&*report)))?;
        return Ok(0);
    }
    writeln!(out, "group:       {} (order {})", report.spec, ctx.order())?;
    writeln!(out, "subgroups:   order {p}^{a}, Sylow order {}", report.sylow_order)?;
    writeln!(out, "count:       {}", report.count)?;
    writeln!(out, "mod {p}:       {}", report.mod_p())?;
    writeln!(out, "mod {}:      {}", p * p, report.mod_p2())?;
    writeln!(out, "classes:     {}", report.orbits.len())?;
    let mut sizes = std::collections::BTreeMap::new();
    for o in &report.orbits {
        *sizes.entry(o.orbit_len).or_insert(0u64) += 1;
    }
    for (len, classes) in sizes {
        writeln!(out, "  {classes} class(es) of {len} conjugate(s)")?;
    }
    Ok(0)
}

/// Applies `f` to every corpus entry on a few threads; results come back in corpus order.
fn par_map<T: Send>(corpus: &Corpus, f: impl Fn(&GroupSpec) -> Result<T> + Sync) -> Result<Vec<T>> {
    let n = corpus.len();
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<T>>>> = Mutex::new((0..n).map(|_| None).collect());
    let threads = std::thread::available_parallelism().map_or(1, |t| t.get()).min(8);
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let r = f(corpus.entry(i).spec());
                slots.lock().unwrap()[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every slot is filled"))
        .collect()
}

struct Fault {
    spec: String,
    p: u64,
    a: u32,
}

impl Fault {
    fn parse(text: &str) -> std::result::Result<Self, CliError> {
        let bad = || CliError::Io(format!("malformed fault {text:?}, expected SPEC:P:A"));
        let mut parts = text.rsplitn(3, ':');
        let a = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let p = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let spec = parse_spec(parts.next().ok_or_else(bad)?)?.to_string();
        Ok(Fault { spec, p, a })
    }

    fn apply(fault: Option<&Fault>, spec: &str, p: u64, a: u32, count: u64) -> u64 {
        match fault {
            Some(f) if f.spec == spec && f.p == p && f.a == a => count + 1,
            _ => count,
        }
    }
}

/// One printed line of a verification table.
struct Line {
    text: String,
    holds: bool,
}

fn cmd_verify(
    theorem: Theorem,
    corpus: Option<&str>,
    fault: Option<&str>,
    out: &mut dyn Write,
) -> CliResult {
    let corpus = load_corpus(corpus)?;
    let fault = fault.map(Fault::parse).transpose()?;
    let fault = fault.as_ref();
    let caps = corpus.caps();
    let tables = par_map(&corpus, |spec| -> Result<Vec<Line>> {
        let label = spec.to_string();
        let mut lines = Vec::new();
        match theorem {
            Theorem::Frobenius | Theorem::KulakoffHall => {
                let ctx = GroupContext::from_spec(spec, caps)?;
                if ctx.order() == 1 {
                    lines.push(Line {
                        text: format!("{label}  trivial group: 1 subgroup"),
                        holds: true,
                    });
                }
                for p in ctx.primes() {
                    let m = ctx.sylow_exponent(p);
                    let top = if theorem == Theorem::Frobenius { m + 1 } else { m };
                    for a in 0..top {
                        let count = Fault::apply(fault, &label, p, a, ctx.count(p, a)?.count);
                        let (row, modulus) = if theorem == Theorem::Frobenius {
                            (frobenius_row(p, a, count), p)
                        } else {
                            (kulakoff_hall_row(p, a, count), p * p)
                        };
                        lines.push(Line {
                            text: format!(
                                "{label}  p={p} a={a}  count={count}  mod {modulus} = {}",
                                row.residue
                            ),
                            holds: row.holds,
                        });
                    }
                }
            }
            Theorem::Cyclic => {
                let ctx = GroupContext::from_spec(spec, caps)?;
                for p in ctx.primes().into_iter().filter(|&p| p != 2) {
                    if ctx.sylow_exponent(p) < 2 {
                        continue;
                    }
                    let c = evaluate_cyclic_criterion(&ctx, p)?;
                    let shape = if c.sylow_cyclic { "cyclic" } else { "non-cyclic" };
                    for r in &c.rows {
                        let count = Fault::apply(fault, &label, p, r.a, r.count);
                        let residue = count % (p * p);
                        lines.push(Line {
                            text: format!(
                                "{label}  p={p} a={}  Sylow {shape} of order {}  count={count}  mod {} = {residue}",
                                r.a,
                                c.sylow_order,
                                p * p
                            ),
                            holds: (residue == 1) == c.sylow_cyclic,
                        });
                    }
                }
            }
            Theorem::HallOracle => {
                if spec.is_abelian_p_group().is_none() {
                    return Ok(lines);
                }
                let ctx = GroupContext::from_spec(spec, caps)?;
                let (p, _) = spec.is_abelian_p_group().unwrap();
                for r in verify_hall_oracle(&ctx)? {
                    let engine = Fault::apply(fault, &label, p, r.a, r.engine);
                    lines.push(Line {
                        text: format!("{label}  p={p} a={}  engine={engine}  formula={}", r.a, r.formula),
                        holds: r.formula == engine.into(),
                    });
                }
            }
            Theorem::Multiplicativity => {
                let GroupSpec::Product(factors) = spec else {
                    return Ok(lines);
                };
                let [left, right] = factors.as_slice() else {
                    return Ok(lines);
                };
                let ctx = GroupContext::from_spec(spec, caps)?;
                for p in ctx.primes() {
                    let m = verify_sylow_multiplicativity(left, right, p, caps)?;
                    let product = Fault::apply(fault, &label, p, ctx.sylow_exponent(p), m.product);
                    lines.push(Line {
                        text: format!("{label}  p={p}  {} * {} vs {product}", m.left, m.right),
                        holds: product == m.left * m.right,
                    });
                }
            }
        }
        Ok(lines)
    })?;
    let mut checks = 0;
    let mut violations = 0;
    for line in tables.iter().flatten() {
        checks += 1;
        if line.holds {
            writeln!(out, "ok    {}", line.text)?;
        } else {
            violations += 1;
            writeln!(out, "FAIL  {}", line.text)?;
        }
    }
    writeln!(
        out,
        "{}: {} groups, {checks} checks, {violations} violations",
        theorem.to_possible_value().unwrap().get_name(),
        corpus.len()
    )?;
    Ok(if violations == 0 { 0 } else { 1 })
}

fn print_verdict(v: &Verdict, out: &mut dyn Write) -> std::io::Result<()> {
    match &v.witness {
        Some(w) => writeln!(out, "p={} n={}: {} {} a={}", v.p, v.n, v.status, w.spec, w.a)?,
        None => writeln!(out, "p={} n={}: {}", v.p, v.n, v.status)?,
    }
    for note in &v.notes {
        writeln!(out, "  note: {note}")?;
    }
    Ok(())
}

fn cmd_classify(
    p: u64,
    n: Option<u64>,
    scan: Option<u64>,
    corpus: Option<&str>,
    max_a: Option<u32>,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let corpus = load_corpus(corpus)?;
    if let Some(n) = n {
        let v = classify_number(p, n, &corpus, max_a)?;
        if json {
            writeln!(out, "{}", to_json(&VerdictJson::from(&v)))?;
        } else {
            print_verdict(&v, out)?;
        }
        return Ok(0);
    }
    let verdicts = scan_range(p, scan.expect("clap requires --n or --scan"), &corpus, max_a)?;
    if json {
        let all: Vec<VerdictJson> = verdicts.iter().map(VerdictJson::from).collect();
        writeln!(out, "{}", to_json(&all))?;
        return Ok(0);
    }
    for v in &verdicts {
        let witness = match &v.witness {
            Some(w) => format!("{} a={}", w.spec, w.a),
            None => "none".into(),
        };
        writeln!(out, "{:>5}  {:<22}  {witness}", v.n, v.status.to_string())?;
    }
    Ok(0)
}

fn cmd_inspect(spec: &str, out: &mut dyn Write) -> CliResult {
    let spec = parse_spec(spec)?;
    let ctx = GroupContext::from_spec(&spec, Caps::default())?;
    let g = ctx.group();
    writeln!(out, "group:       {spec}")?;
    writeln!(out, "order:       {}", ctx.order())?;
    writeln!(out, "degree:      {}", g.degree())?;
    for (i, gen) in g.generators().iter().enumerate() {
        writeln!(out, "generator {i}: {gen}")?;
    }
    writeln!(out, "abelian:     {}", g.is_abelian())?;
    writeln!(out, "orbits:      {}", orbits(g).len())?;
    if is_transitive(g) {
        writeln!(out, "primitive:   {}", is_primitive(g)?)?;
        if g.degree() >= 2 {
            writeln!(out, "2-transitive: {}", is_2_transitive(g, ctx.table())?)?;
        }
    }
    for p in ctx.primes() {
        writeln!(
            out,
            "Sylow {p}:     order {}, {} conjugate(s)",
            p.pow(ctx.sylow_exponent(p)),
            count_sylow(&ctx, p)?
        )?;
    }
    Ok(0)
}
