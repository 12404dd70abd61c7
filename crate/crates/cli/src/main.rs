//! `p3iso`: compute, construct and verify P3-isolating sets.
//!
//! Exit codes: 0 pass, 1 violation, 2 input error, 3 precondition error.

use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use p3iso::constructive::ConstructiveError;
use p3iso::enumerate::{enumerate, EnumFilter, EnumSpec};
use p3iso::generators::random::eligible;
use p3iso::generators::{complete, cycle, path, GenError};
use p3iso::io::{emit_edge_list, looks_like_edge_list};
use p3iso::verify::observations::check_all;
use p3iso::verify::{verify_enumerated, verify_stream, VerificationReport};
use p3iso::{
    catalog, construction_b, emit_graph6, isolate_p3_subcubic, isolation_number, parse_edge_list,
    parse_graph6, CatalogId, Execution, Graph, IsolationFamily,
};

const PASS: u8 = 0;
const VIOLATION: u8 = 1;
const INPUT_ERROR: u8 = 2;
const PRECONDITION: u8 = 3;

/// Largest order checked without --extended.
const PLAIN_MAX: usize = 9;

#[derive(Parser)]
#[command(name = "p3iso", version, about = "3-path isolation in graphs")]
struct Cli {
    /// Worker threads (0 picks one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Run on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Path,
    Cycle,
    Complete,
    Bnp3,
    Eligible,
}

#[derive(Subcommand)]
enum Command {
    /// Smallest isolating set of a graph.
    Iota {
        /// graph6 text, an edge list file, or `-` for stdin.
        graph: Option<String>,
        #[arg(long, default_value = "p3")]
        family: String,
    },
    /// Isolating set of size at most n/4 for an eligible subcubic graph.
    Isolate {
        graph: Option<String>,
        /// Print the case trace as JSON lines.
        #[arg(long)]
        trace: bool,
    },
    /// Check the n/4 bound over enumerated or streamed graphs.
    Verify {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = PLAIN_MAX)]
        max_n: usize,
        /// graph6 corpus to read instead of enumerating.
        #[arg(long)]
        stream: Option<PathBuf>,
        /// Allow orders above 9.
        #[arg(long)]
        extended: bool,
    },
    /// Check the structural facts about the exceptional graphs.
    CheckObservations,
    /// Emit a generated graph.
    Gen {
        kind: GenKind,
        n: usize,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit the exceptional graphs.
    Catalog {
        /// Only this entry, e.g. G11 or G7_5.
        name: Option<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Enumerate graphs up to isomorphism.
    Enum {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Every graph, not just connected subcubic ones.
        #[arg(long)]
        all: bool,
        /// Skip graphs with an induced 6-cycle.
        #[arg(long)]
        no_c6: bool,
        /// Print counts per order instead of graphs.
        #[arg(long)]
        count: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

type Outcome = Result<u8, Failure>;

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: INPUT_ERROR,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        #[cfg(feature = "parallel")]
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(INPUT_ERROR);
        }
    }
    let mode = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let result = match cli.command {
        Command::Iota { graph, family } => cmd_iota(graph, &family, cli.json),
        Command::Isolate { graph, trace } => cmd_isolate(graph, trace, cli.json),
        Command::Verify {
            min_n,
            max_n,
            stream,
            extended,
        } => cmd_verify(min_n, max_n, stream, extended, mode, cli.json),
        Command::CheckObservations => cmd_check_observations(cli.json),
        Command::Gen {
            kind,
            n,
            format,
            seed,
        } => cmd_gen(kind, n, format, seed),
        Command::Catalog { name, format } => cmd_catalog(name, format),
        Command::Enum {
            max_n,
            min_n,
            all,
            no_c6,
            count,
        } => cmd_enum(max_n, min_n, all, no_c6, count, mode, cli.json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_graph(arg: Option<String>) -> Result<Graph, Failure> {
    let text = match arg.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| input_error(e.to_string()))?;
            s
        }
        Some(a) if std::path::Path::new(a).is_file() => {
            std::fs::read_to_string(a).map_err(|e| input_error(format!("{a}: {e}")))?
        }
        Some(a) => a.to_string(),
    };
    if looks_like_edge_list(&text) {
        return parse_edge_list(&text).map_err(|e| input_error(e.to_string()));
    }
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    parse_graph6(line).map_err(|e| input_error(format!("`{line}`: {e}")))
}

fn labels(set: &p3iso::VertexSet) -> String {
    let parts: Vec<String> = set.labels().iter().map(usize::to_string).collect();
    parts.join(" ")
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    );
}

fn cmd_iota(graph: Option<String>, family: &str, as_json: bool) -> Outcome {
    let fam: IsolationFamily = family
        .parse()
        .map_err(|e: p3iso::patterns::FamilyError| input_error(e.to_string()))?;
    let g = read_graph(graph)?;
    let cert = isolation_number(&g, &fam, None);
    if as_json {
        print_json(&json!({
            "graph6": emit_graph6(&g),
            "order": g.order(),
            "certificate": cert,
        }));
    } else {
        println!("iota = {}", cert.value);
        println!("set = {}", labels(&cert.set));
    }
    Ok(PASS)
}

fn cmd_isolate(graph: Option<String>, trace: bool, as_json: bool) -> Outcome {
    let g = read_graph(graph)?;
    let (cert, steps) = match isolate_p3_subcubic(&g) {
        Ok(r) => r,
        Err(ConstructiveError::PreconditionViolated(p)) => {
            return Err(Failure {
                code: PRECONDITION,
                message: p.to_string(),
            })
        }
        Err(e) => {
            return Err(Failure {
                code: VIOLATION,
                message: e.to_string(),
            })
        }
    };
    let bound = g.order() / 4;
    let within = cert.size() <= bound;
    if as_json {
        let mut v = json!({
            "graph6": emit_graph6(&g),
            "order": g.order(),
            "bound": bound,
            "size": cert.size(),
            "within_bound": within,
            "set": cert.set.labels(),
        });
        if trace {
            v["trace"] = serde_json::to_value(&steps.steps).expect("steps serialize");
        }
        print_json(&v);
    } else {
        println!("size = {} (bound {bound})", cert.size());
        println!("set = {}", labels(&cert.set));
        if trace {
            print!("{}", steps.to_json_lines());
        }
    }
    Ok(if within { PASS } else { VIOLATION })
}

fn print_report(report: &VerificationReport) {
    println!(
        "{:>5} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "n", "examined", "eligible", "exceptions", "violations", "ms"
    );
    for (n, o) in &report.orders {
        println!(
            "{n:>5} {:>10} {:>10} {:>10} {:>10} {:>10.1}",
            o.examined,
            o.eligible,
            o.exceptions.len(),
            o.violations.len(),
            o.work_ms
        );
        for e in &o.exceptions {
            println!("      exception {} {}", e.catalog, e.graph6);
        }
        for v in &o.violations {
            println!("      VIOLATION {} {}", v.graph6, v.reason);
        }
    }
    for d in &report.diagnostics {
        println!("      line {}: {}", d.line, d.message);
    }
    println!("{}", if report.passes() { "PASS" } else { "FAIL" });
}

fn cmd_verify(
    min_n: usize,
    max_n: usize,
    stream: Option<PathBuf>,
    extended: bool,
    mode: Execution,
    as_json: bool,
) -> Outcome {
    if min_n > max_n {
        return Err(input_error(format!(
            "--min-n {min_n} exceeds --max-n {max_n}"
        )));
    }
    let report = match stream {
        Some(path) => {
            let file =
                File::open(&path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            eprintln!("streaming {}", path.display());
            verify_stream(BufReader::new(file), min_n..=max_n, mode)
                .map_err(|e| input_error(e.to_string()))?
        }
        None => {
            if max_n > PLAIN_MAX && !extended {
                return Err(input_error(format!(
                    "orders above {PLAIN_MAX} need --extended"
                )));
            }
            if max_n > 16 {
                return Err(input_error("enumeration stops at 16 vertices"));
            }
            eprintln!("enumerating connected subcubic graphs, {min_n} <= n <= {max_n}");
            verify_enumerated(min_n, max_n, mode)
        }
    };
    if as_json {
        print_json(&serde_json::to_value(&report).expect("reports serialize"));
    } else {
        print_report(&report);
    }
    Ok(if report.passes() { PASS } else { VIOLATION })
}

fn cmd_check_observations(as_json: bool) -> Outcome {
    let checks = check_all();
    let ok = checks.iter().all(|c| c.passed);
    if as_json {
        print_json(&json!({ "passed": ok, "checks": checks }));
    } else {
        for c in &checks {
            println!(
                "{:<10} {} {}",
                c.name,
                if c.passed { "pass" } else { "FAIL" },
                c.detail
            );
        }
    }
    Ok(if ok { PASS } else { VIOLATION })
}

fn emit(g: &Graph, format: Format, name: Option<&str>) -> String {
    match format {
        Format::Graph6 => emit_graph6(g) + "\n",
        Format::Edges => {
            let header = name.map(|n| format!("# {n}\n")).unwrap_or_default();
            format!("{header}{}", emit_edge_list(g))
        }
        Format::Json => {
            let mut v = json!({
                "order": g.order(),
                "graph6": emit_graph6(g),
                "edges": g.labeled_edges(),
            });
            if let Some(n) = name {
                v["name"] = json!(n);
            }
            serde_json::to_string(&v).expect("json values serialize") + "\n"
        }
    }
}

fn gen_error(e: GenError) -> Failure {
    input_error(e.to_string())
}

fn cmd_gen(kind: GenKind, n: usize, format: Format, seed: u64) -> Outcome {
    let g = match kind {
        GenKind::Path => path(n).map_err(gen_error)?,
        GenKind::Cycle => cycle(n).map_err(gen_error)?,
        GenKind::Complete => complete(n).map_err(gen_error)?,
        GenKind::Bnp3 => construction_b(n, &path(3).expect("P3")).map_err(gen_error)?,
        GenKind::Eligible => {
            use rand::SeedableRng;
            eligible(&mut rand::rngs::StdRng::seed_from_u64(seed), n)
        }
    };
    print!("{}", emit(&g, format, None));
    Ok(PASS)
}

fn cmd_catalog(name: Option<String>, format: Format) -> Outcome {
    let ids: Vec<CatalogId> = match name {
        Some(n) => vec![n.parse().map_err(input_error)?],
        None => CatalogId::ALL.to_vec(),
    };
    let entries = catalog().map_err(|e| Failure {
        code: VIOLATION,
        message: e.to_string(),
    })?;
    let mut out = io::stdout().lock();
    for id in ids {
        let e = &entries[id as usize];
        write!(out, "{}", emit(&e.graph, format, Some(id.name())))
            .map_err(|e| input_error(e.to_string()))?;
    }
    Ok(PASS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_enum(
    max_n: usize,
    min_n: usize,
    all: bool,
    no_c6: bool,
    count: bool,
    mode: Execution,
    as_json: bool,
) -> Outcome {
    if max_n > 16 {
        return Err(input_error("enumeration stops at 16 vertices"));
    }
    let mut spec = if all {
        EnumSpec::all_graphs(max_n)
    } else {
        EnumSpec::connected_subcubic(max_n)
    };
    if no_c6 {
        spec = spec.with_filter(EnumFilter::NoInducedCycle(6));
    }
    let found = Mutex::new(Vec::new());
    let summary = enumerate(&spec, mode, &|g| {
        if !count && g.order() >= min_n {
            found.lock().unwrap().push((g.order(), emit_graph6(g)));
        }
    });
    let counts: Vec<(usize, u64)> = summary
        .per_order
        .iter()
        .filter(|(&n, _)| n >= min_n)
        .map(|(&n, &c)| (n, c))
        .collect();
    if count {
        if as_json {
            let m: serde_json::Map<String, Value> = counts
                .iter()
                .map(|(n, c)| (n.to_string(), json!(c)))
                .collect();
            print_json(&Value::Object(m));
        } else {
            for (n, c) in counts {
                println!("{n} {c}");
            }
        }
        return Ok(PASS);
    }
    let mut graphs = found.into_inner().unwrap();
    graphs.sort();
    let mut out = io::BufWriter::new(io::stdout().lock());
    for (_, g6) in graphs {
        writeln!(out, "{g6}").map_err(|e| input_error(e.to_string()))?;
    }
    Ok(PASS)
}
