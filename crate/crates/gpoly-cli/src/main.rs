//! gpoly: compute general position polynomials of graphs, verify the family
//! closed forms against exact enumeration, list maximal general position
//! sets, test unimodality, and scan parametric families for non-unimodal
//! instances.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input/parse error,
//! 3 resource limit exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use gpoly::{
    closed_form, gp_polynomial, intersection_census, maximal_gp_sets,
    psi_inclusion_exclusion_with_limit, FamilySpec, Graph, Polynomial, VertexSet,
};
use serde::Serialize;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "gpoly",
    version,
    about = "General position polynomials of finite graphs",
    long_about = "Computes the general position polynomial of a graph by exact enumeration,\n\
                  evaluates the closed forms of the named families, verifies the two against\n\
                  each other, enumerates maximal general position sets with their intersection\n\
                  census, tests unimodality, and scans family parameter ranges."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

const SOURCE_HELP: &str = "Graph source: a family string (e.g. 'petersen', 'broom:17,6', \
                           'corona(path:5)', optionally prefixed 'family:'), or an edge-list \
                           file ('file:PATH' or a bare path). The file format is a header line \
                           'n m' followed by m lines 'u v' with 0-based endpoints.";

#[derive(Subcommand)]
enum Command {
    /// Compute the polynomial by exact (pruned) enumeration
    Compute {
        #[arg(help = SOURCE_HELP)]
        source: String,
        /// Emit a JSON report instead of text
        #[arg(long)]
        json: bool,
        /// Refuse enumeration on graphs with more vertices than this
        #[arg(long, default_value_t = 40)]
        max_vertices: usize,
        /// Override the vertex limit
        #[arg(long)]
        force: bool,
        /// Include elapsed milliseconds in the report
        #[arg(long)]
        timing: bool,
    },
    /// Evaluate the closed-form polynomial of a family
    Family {
        /// Family string, e.g. 'kneser2:5' or 'tstar:3,2'
        family: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Compute both routes and report EQUAL or DIFFER (exit 1 on DIFFER)
    Verify {
        /// Family string with a closed form
        family: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 40)]
        max_vertices: usize,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        timing: bool,
    },
    /// List maximal general position sets and their intersection census
    Maximal {
        #[arg(help = SOURCE_HELP)]
        source: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 40)]
        max_vertices: usize,
        /// Refuse the census beyond this many maximal sets
        #[arg(long, default_value_t = 25)]
        max_sets: usize,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Test unimodality of the polynomial (closed form when available)
    Unimodal {
        #[arg(help = SOURCE_HELP)]
        source: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 40)]
        max_vertices: usize,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Scan a family's parameter ranges for non-unimodal polynomials
    Scan {
        /// Family name, e.g. 'broom'
        family: String,
        /// Parameter assignments, e.g. 'r=6' 's=1..20' (ranges inclusive)
        #[arg(required = true)]
        params: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Combine two graphs (or one, for corona) and enumerate the result
    Ops {
        /// Operation to apply
        #[arg(value_enum)]
        op: OpKind,
        #[arg(help = SOURCE_HELP)]
        a: String,
        /// Second source (not used by corona)
        b: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 40)]
        max_vertices: usize,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Union,
    Join,
    Product,
    Corona,
}

impl OpKind {
    fn name(self) -> &'static str {
        match self {
            OpKind::Union => "union",
            OpKind::Join => "join",
            OpKind::Product => "product",
            OpKind::Corona => "corona",
        }
    }
}

enum CliError {
    Input(String),
    Limit(String),
}

impl From<gpoly::Error> for CliError {
    fn from(e: gpoly::Error) -> Self {
        match e {
            gpoly::Error::TooManyMaximalSets { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Limit(msg)) => {
            eprintln!("error: {msg} (pass --force or raise the limit)");
            ExitCode::from(3)
        }
    }
}

#[derive(Serialize)]
struct GraphInfo {
    n: usize,
    m: usize,
    source: String,
}

impl GraphInfo {
    fn new(g: &Graph, source: &str) -> Self {
        GraphInfo {
            n: g.vertex_count(),
            m: g.edge_count(),
            source: source.to_string(),
        }
    }
}

#[derive(Serialize)]
struct Report {
    graph: GraphInfo,
    psi: Vec<String>,
    gp: usize,
    unimodal: bool,
    witness: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

impl Report {
    fn new(graph: GraphInfo, psi: &Polynomial, elapsed_ms: Option<u128>) -> Self {
        Report {
            graph,
            psi: psi.coeff_strings(),
            gp: psi.degree().unwrap_or(0),
            unimodal: psi.is_unimodal(),
            witness: psi.unimodal_witness().map(|(i, j)| [i, j]),
            elapsed_ms,
        }
    }

    fn print_text(&self, psi: &Polynomial) {
        println!(
            "graph: {} (n={}, m={})",
            self.graph.source, self.graph.n, self.graph.m
        );
        println!("psi: {psi}");
        println!("gp: {}", self.gp);
        match self.witness {
            None => println!("unimodal: yes"),
            Some([i, j]) => println!("unimodal: no (rise at x^{i} -> x^{j} after a fall)"),
        }
        if let Some(ms) = self.elapsed_ms {
            println!("elapsed_ms: {ms}");
        }
    }
}

fn emit_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable report"));
}

/// A graph source: family string (optionally prefixed `family:`) or an
/// edge-list file (`file:PATH` or a bare path that is not a family string).
enum Source {
    Family(FamilySpec),
    File(Graph),
}

fn resolve_source(text: &str) -> CliResult<Source> {
    if let Some(dsl) = text.strip_prefix("family:") {
        return Ok(Source::Family(dsl.parse::<FamilySpec>()?));
    }
    if let Some(path) = text.strip_prefix("file:") {
        return load_file(path);
    }
    match text.parse::<FamilySpec>() {
        Ok(spec) => Ok(Source::Family(spec)),
        Err(family_err) => {
            if std::path::Path::new(text).exists() {
                load_file(text)
            } else {
                Err(CliError::Input(format!(
                    "'{text}' is neither a family string ({family_err}) nor an existing file"
                )))
            }
        }
    }
}

fn load_file(path: &str) -> CliResult<Source> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read '{path}': {e}")))?;
    Ok(Source::File(Graph::parse_edge_list(&text)?))
}

fn build_graph(source: &Source) -> CliResult<Graph> {
    match source {
        Source::Family(spec) => Ok(spec.build()?),
        Source::File(g) => Ok(g.clone()),
    }
}

fn check_vertex_limit(g: &Graph, max_vertices: usize, force: bool) -> CliResult<()> {
    if g.vertex_count() > max_vertices && !force {
        return Err(CliError::Limit(format!(
            "graph has {} vertices, above the enumeration limit of {max_vertices}",
            g.vertex_count()
        )));
    }
    Ok(())
}

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Compute {
            source,
            json,
            max_vertices,
            force,
            timing,
        } => {
            let g = build_graph(&resolve_source(&source)?)?;
            check_vertex_limit(&g, max_vertices, force)?;
            let start = Instant::now();
            let psi = gp_polynomial(&g).polynomial();
            let elapsed = timing.then(|| start.elapsed().as_millis());
            let report = Report::new(GraphInfo::new(&g, &source), &psi, elapsed);
            if json {
                emit_json(&report);
            } else {
                report.print_text(&psi);
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Family {
            family,
            json,
            timing,
        } => {
            let spec: FamilySpec = family.parse()?;
            let g = spec.build()?;
            let start = Instant::now();
            let psi = closed_form(&spec)?;
            let elapsed = timing.then(|| start.elapsed().as_millis());
            let report = Report::new(GraphInfo::new(&g, &family), &psi, elapsed);
            if json {
                emit_json(&report);
            } else {
                report.print_text(&psi);
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            family,
            json,
            max_vertices,
            force,
            timing,
        } => {
            let spec: FamilySpec = family.parse()?;
            let g = spec.build()?;
            check_vertex_limit(&g, max_vertices, force)?;
            let start = Instant::now();
            let formula = closed_form(&spec)?;
            let enumerated = gp_polynomial(&g).polynomial();
            let elapsed = timing.then(|| start.elapsed().as_millis());
            let first_difference = first_difference(&formula, &enumerated);

            #[derive(Serialize)]
            struct VerifyReport {
                graph: GraphInfo,
                closed_form: Vec<String>,
                enumerated: Vec<String>,
                equal: bool,
                first_difference: Option<usize>,
                #[serde(skip_serializing_if = "Option::is_none")]
                elapsed_ms: Option<u128>,
            }
            let report = VerifyReport {
                graph: GraphInfo::new(&g, &family),
                closed_form: formula.coeff_strings(),
                enumerated: enumerated.coeff_strings(),
                equal: first_difference.is_none(),
                first_difference,
                elapsed_ms: elapsed,
            };
            if json {
                emit_json(&report);
            } else {
                match first_difference {
                    None => {
                        println!("EQUAL: closed form and enumeration agree for {family}");
                        println!("psi: {formula}");
                    }
                    Some(i) => {
                        println!(
                            "DIFFER at x^{i}: closed form {}, enumeration {}",
                            formula.coeff(i),
                            enumerated.coeff(i)
                        );
                        println!("closed form: {formula}");
                        println!("enumeration: {enumerated}");
                    }
                }
                if let Some(ms) = elapsed {
                    println!("elapsed_ms: {ms}");
                }
            }
            Ok(if first_difference.is_none() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Maximal {
            source,
            json,
            max_vertices,
            max_sets,
            force,
            timing,
        } => {
            let g = build_graph(&resolve_source(&source)?)?;
            check_vertex_limit(&g, max_vertices, force)?;
            let start = Instant::now();
            let sets = maximal_gp_sets(&g);
            if sets.len() > max_sets && !force {
                return Err(CliError::Limit(format!(
                    "{} maximal sets exceed the census limit of {max_sets}",
                    sets.len()
                )));
            }
            let census = intersection_census(&sets);
            // rebuild psi from the maximal sets; the cap guards the 2^m walk
            let ie_limit = if force { usize::MAX } else { max_sets };
            let psi = psi_inclusion_exclusion_with_limit(&g, ie_limit)?.polynomial();
            let elapsed = timing.then(|| start.elapsed().as_millis());

            #[derive(Serialize)]
            struct SizeCount {
                size: usize,
                count: usize,
            }
            #[derive(Serialize)]
            struct CensusCell {
                k: usize,
                t: usize,
                count: u64,
            }
            #[derive(Serialize)]
            struct MaximalReport {
                graph: GraphInfo,
                count: usize,
                psi: Vec<String>,
                sets: Vec<Vec<usize>>,
                by_size: Vec<SizeCount>,
                census: Vec<CensusCell>,
                #[serde(skip_serializing_if = "Option::is_none")]
                elapsed_ms: Option<u128>,
            }

            let mut by_size: Vec<SizeCount> = Vec::new();
            for s in &sets {
                match by_size.iter_mut().find(|sc| sc.size == s.len()) {
                    Some(sc) => sc.count += 1,
                    None => by_size.push(SizeCount {
                        size: s.len(),
                        count: 1,
                    }),
                }
            }
            by_size.sort_by_key(|sc| sc.size);

            let max_t = census.max_intersection_size().unwrap_or(0);
            let mut cells = Vec::new();
            for k in 2..=sets.len() {
                for t in 0..=max_t {
                    let c = census.count(k, t);
                    if c > 0 {
                        cells.push(CensusCell { k, t, count: c });
                    }
                }
            }

            let report = MaximalReport {
                graph: GraphInfo::new(&g, &source),
                count: sets.len(),
                psi: psi.coeff_strings(),
                sets: sets.iter().map(VertexSet::indices).collect(),
                by_size,
                census: cells,
                elapsed_ms: elapsed,
            };
            if json {
                emit_json(&report);
            } else {
                println!(
                    "graph: {} (n={}, m={})",
                    report.graph.source, report.graph.n, report.graph.m
                );
                println!("maximal general position sets: {}", report.count);
                for sc in &report.by_size {
                    println!("size {}: {} set(s)", sc.size, sc.count);
                    for s in &sets {
                        if s.len() == sc.size {
                            let names: Vec<String> =
                                s.iter().map(|v| g.vertex_name(v)).collect();
                            println!("  {{{}}}", names.join(", "));
                        }
                    }
                }
                println!("psi (by inclusion-exclusion over the maximal sets): {psi}");
                if report.count >= 2 {
                    println!("intersection census (row: sets intersected, column: intersection size)");
                    let mut header = String::from("  k\\t ");
                    for t in 0..=max_t {
                        let _ = write!(header, "{t:>8}");
                    }
                    println!("{header}");
                    for k in 2..=report.count {
                        let mut row = format!("{k:>5} ");
                        for t in 0..=max_t {
                            let _ = write!(row, "{:>8}", census.count(k, t));
                        }
                        println!("{row}");
                    }
                }
                if let Some(ms) = elapsed {
                    println!("elapsed_ms: {ms}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Unimodal {
            source,
            json,
            max_vertices,
            force,
            timing,
        } => {
            let resolved = resolve_source(&source)?;
            let g = build_graph(&resolved)?;
            let start = Instant::now();
            // closed form when the family has one, enumeration otherwise
            let psi = match &resolved {
                Source::Family(spec) => match closed_form(spec) {
                    Ok(p) => p,
                    Err(gpoly::Error::UnsupportedClosedForm(_)) => {
                        check_vertex_limit(&g, max_vertices, force)?;
                        gp_polynomial(&g).polynomial()
                    }
                    Err(e) => return Err(e.into()),
                },
                Source::File(_) => {
                    check_vertex_limit(&g, max_vertices, force)?;
                    gp_polynomial(&g).polynomial()
                }
            };
            let elapsed = timing.then(|| start.elapsed().as_millis());
            let report = Report::new(GraphInfo::new(&g, &source), &psi, elapsed);
            if json {
                emit_json(&report);
            } else {
                match report.witness {
                    None => println!("UNIMODAL"),
                    Some([i, j]) => {
                        println!("NOT UNIMODAL: rise at x^{i} -> x^{j} after a fall")
                    }
                }
                report.print_text(&psi);
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Scan {
            family,
            params,
            json,
            timing,
        } => run_scan(&family, &params, json, timing),

        Command::Ops {
            op,
            a,
            b,
            json,
            max_vertices,
            force,
            timing,
        } => {
            let ga = build_graph(&resolve_source(&a)?)?;
            let (g, source) = match op {
                OpKind::Corona => {
                    if b.is_some() {
                        return Err(CliError::Input(
                            "corona takes a single source".to_string(),
                        ));
                    }
                    (ga.corona(), format!("corona({a})"))
                }
                _ => {
                    let b = b.ok_or_else(|| {
                        CliError::Input(format!("{} needs two sources", op.name()))
                    })?;
                    let gb = build_graph(&resolve_source(&b)?)?;
                    let g = match op {
                        OpKind::Union => ga.disjoint_union(&gb),
                        OpKind::Join => ga.join(&gb),
                        OpKind::Product => ga.cartesian_product(&gb),
                        OpKind::Corona => unreachable!(),
                    };
                    (g, format!("{}({a}, {b})", op.name()))
                }
            };
            check_vertex_limit(&g, max_vertices, force)?;
            let start = Instant::now();
            let psi = gp_polynomial(&g).polynomial();
            let elapsed = timing.then(|| start.elapsed().as_millis());
            let report = Report::new(GraphInfo::new(&g, &source), &psi, elapsed);
            if json {
                emit_json(&report);
            } else {
                report.print_text(&psi);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn first_difference(a: &Polynomial, b: &Polynomial) -> Option<usize> {
    let len = a.coeffs().len().max(b.coeffs().len());
    (0..len).find(|&i| a.coeff(i) != b.coeff(i))
}

/// One inclusive parameter range, parsed from `name=lo..hi` or `name=value`.
struct ParamRange {
    name: String,
    lo: usize,
    hi: usize,
}

fn parse_param(text: &str) -> CliResult<ParamRange> {
    let (name, range) = text.split_once('=').ok_or_else(|| {
        CliError::Input(format!("bad parameter '{text}', expected name=value or name=lo..hi"))
    })?;
    let parse = |v: &str| -> CliResult<usize> {
        v.trim()
            .parse()
            .map_err(|_| CliError::Input(format!("bad number '{v}' in '{text}'")))
    };
    let (lo, hi) = match range.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi)?),
        None => {
            let v = parse(range)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(CliError::Input(format!("empty range in '{text}'")));
    }
    Ok(ParamRange {
        name: name.trim().to_string(),
        lo,
        hi,
    })
}

fn run_scan(family: &str, params: &[String], json: bool, timing: bool) -> CliResult<ExitCode> {
    let names = FamilySpec::param_names(family)
        .ok_or_else(|| CliError::Input(format!("unknown family '{family}'")))?;
    if names.is_empty() {
        return Err(CliError::Input(format!(
            "family '{family}' has no parameters to scan"
        )));
    }
    let mut ranges: Vec<Option<ParamRange>> = names.iter().map(|_| None).collect();
    for p in params {
        let range = parse_param(p)?;
        let idx = names
            .iter()
            .position(|&n| n == range.name)
            .ok_or_else(|| {
                CliError::Input(format!(
                    "family '{family}' has no parameter '{}' (expected {})",
                    range.name,
                    names.join(", ")
                ))
            })?;
        if ranges[idx].is_some() {
            return Err(CliError::Input(format!(
                "parameter '{}' given twice",
                range.name
            )));
        }
        ranges[idx] = Some(range);
    }
    let ranges: Vec<ParamRange> = names
        .iter()
        .zip(ranges)
        .map(|(&n, r)| r.ok_or_else(|| CliError::Input(format!("missing parameter '{n}'"))))
        .collect::<CliResult<_>>()?;

    #[derive(Serialize)]
    struct ScanHit {
        spec: String,
        psi: Vec<String>,
        witness: [usize; 2],
    }
    #[derive(Serialize)]
    struct ScanReport {
        family: String,
        scanned: usize,
        hits: Vec<ScanHit>,
        #[serde(skip_serializing_if = "Option::is_none")]
        elapsed_ms: Option<u128>,
    }

    let start = Instant::now();
    let mut scanned = 0;
    let mut hits: Vec<ScanHit> = Vec::new();
    let mut values: Vec<usize> = ranges.iter().map(|r| r.lo).collect();
    let mut lines: Vec<String> = Vec::new();
    loop {
        let spec = FamilySpec::from_params(family, &values)?;
        let psi = closed_form(&spec)?;
        scanned += 1;
        if let Some((i, j)) = psi.unimodal_witness() {
            lines.push(format!("{spec} NOT UNIMODAL witness ({i},{j}): {psi}"));
            hits.push(ScanHit {
                spec: spec.to_string(),
                psi: psi.coeff_strings(),
                witness: [i, j],
            });
        }
        // advance the mixed-radix counter, last parameter fastest
        let mut advanced = false;
        for pos in (0..ranges.len()).rev() {
            if values[pos] < ranges[pos].hi {
                values[pos] += 1;
                for i in pos + 1..ranges.len() {
                    values[i] = ranges[i].lo;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    let elapsed = timing.then(|| start.elapsed().as_millis());
    let report = ScanReport {
        family: family.to_string(),
        scanned,
        hits,
        elapsed_ms: elapsed,
    };
    if json {
        emit_json(&report);
    } else {
        let described: Vec<String> = ranges
            .iter()
            .map(|r| {
                if r.lo == r.hi {
                    format!("{}={}", r.name, r.lo)
                } else {
                    format!("{}={}..{}", r.name, r.lo, r.hi)
                }
            })
            .collect();
        println!(
            "scan {family} over {}: {} instance(s), {} non-unimodal",
            described.join(", "),
            report.scanned,
            report.hits.len()
        );
        for line in &lines {
            println!("{line}");
        }
        if let Some(ms) = elapsed {
            println!("elapsed_ms: {ms}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
