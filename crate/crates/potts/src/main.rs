use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use potts_core::pointcount::{self, FIXED_Q};
use potts_core::{cone, motivic, tutte, Error, FamilySpec, MPoly, MultiGraph, PointCounter};

use potts::edgelist;
use potts::family::{Family, FamilyKind};
use potts::report::{self, ChiReport, ChiRow, ClassOut, ClassReport, ConeReport, CountOut, VerifyReport, ZReport};
use potts::verify;
use potts::ParallelCounter;

/// Potts partition polynomials, Grothendieck classes and their point-count checks.
#[derive(Parser)]
#[command(name = "potts", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a polynomial attached to a graph.
    Z {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "z")]
        which: Which,
        #[arg(long)]
        json: bool,
    },
    /// Class of the hypersurface complement, as a polynomial in T.
    Class {
        #[command(flatten)]
        source: Source,
        /// The slice at q = 2 instead of the full complement.
        #[arg(long, conflicts_with = "variable_q")]
        fixed_q: bool,
        #[arg(long)]
        variable_q: bool,
        /// Count points even when a closed form is known.
        #[arg(long)]
        oracle: bool,
    },
    /// Tangent-cone classes {V}, {W} and {Y} by point counting.
    Cone {
        #[command(flatten)]
        source: Source,
    },
    /// Euler characteristics with compact support of chain loci.
    Chi {
        #[arg(long, value_enum)]
        family: ChainFamily,
        /// A value, a list `0,2,3` or a range `0-4`.
        #[arg(long, default_value = "0")]
        m: String,
        #[arg(long, default_value = "0")]
        k: String,
        #[arg(long = "N", default_value = "1")]
        n: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Point counts and the interpolated class of the complement.
    Count {
        #[command(flatten)]
        source: Source,
        /// Sample primes; the default is the smallest admissible ladder.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        #[arg(long, requires = "primes")]
        check: Option<u64>,
        #[arg(long)]
        fixed_q: bool,
        #[arg(long, default_value_t = FIXED_Q, requires = "fixed_q")]
        q0: u64,
    },
    /// Run the invariant suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest ambient dimension counted by the oracle suites.
        #[arg(long, default_value_t = 5)]
        max_dim: usize,
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
}

#[derive(Args)]
#[group(skip)]
#[command(group(ArgGroup::new("input").args(["file", "family"]).required(true)))]
struct Source {
    /// Graph in the edge-list format.
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    #[arg(long)]
    family: Option<FamilyKind>,
    #[arg(long, default_value_t = 0, requires = "family")]
    m: usize,
    #[arg(long, default_value_t = 0, requires = "family")]
    k: usize,
    #[arg(long = "N", default_value_t = 1, requires = "family")]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Z,
    ZTilde,
    Phi,
    Psi,
    PLeading,
    QReduced,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChainFamily {
    ChainPolygon,
    ChainBanana,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

enum Failure {
    Verification(String),
    Usage(String),
    Budget(String),
    Oracle(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
            Failure::Oracle(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Budget(m) | Failure::Oracle(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Failure::Budget(format!("{e}; raise POTTS_BUDGET to allow it")),
            Error::NotPolynomialCount(_) | Error::ExactDivisionFailure(_) => Failure::Oracle(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

struct Resolved {
    label: String,
    graph: MultiGraph,
    family: Option<Family>,
}

impl Source {
    fn resolve(&self) -> Result<Resolved, Failure> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let graph = edgelist::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            return Ok(Resolved { label: path.display().to_string(), graph, family: None });
        }
        let kind = self.family.expect("clap requires a source");
        let family = Family::new(kind, self.m, self.k, self.n);
        Ok(Resolved { label: family.label(), graph: family.graph()?, family: Some(family) })
    }
}

fn counter() -> Result<ParallelCounter, Failure> {
    ParallelCounter::from_env().map_err(Failure::Usage)
}

fn cmd_z(source: &Source, which: Which, json: bool) -> Outcome {
    let r = source.resolve()?;
    let g = &r.graph;
    let (name, poly): (&str, MPoly) = match which {
        Which::Z => ("z", tutte::z_delcon(g)),
        Which::ZTilde => ("z-tilde", tutte::z_tilde(g)?),
        Which::Phi => ("phi", tutte::phi(g)?),
        Which::Psi => ("psi", tutte::psi(g)?),
        Which::PLeading => ("p-leading", tutte::p_leading(g)?),
        Which::QReduced => ("q-reduced", tutte::q_reduced(g)?),
    };
    if json {
        Ok(report::to_json(&ZReport { source: r.label, which: name.into(), polynomial: poly.to_string() }))
    } else {
        Ok(format!("{poly}\n"))
    }
}

fn cmd_class(source: &Source, fixed_q: bool, force_oracle: bool) -> Outcome {
    let r = source.resolve()?;
    let edges = r.graph.edge_count();
    let formula = match (&r.family, force_oracle) {
        (Some(f), false) => Some(if fixed_q { f.class_fixed_q()? } else { f.class()? }),
        _ => None,
    };
    let (class, oracle) = match formula {
        Some(c) => (c, None),
        None => {
            let c = counter()?;
            let z = tutte::z_delcon(&r.graph);
            let rep = if fixed_q {
                pointcount::fixed_q_class(&c, &z, edges)?
            } else {
                pointcount::complement_class(&c, &z, edges + 1)?
            };
            (rep.interpolated.clone(), Some(CountOut::from(&rep)))
        }
    };
    Ok(report::to_json(&ClassReport {
        source: r.label,
        edges,
        fixed_q,
        method: if oracle.is_some() { "oracle" } else { "formula" }.into(),
        chi: report::number(&motivic::chi_complex(&class)),
        chi_c: report::number(&motivic::chi_c_real(&class)),
        class: (&class).into(),
        oracle,
    }))
}

fn cmd_cone(source: &Source) -> Outcome {
    let r = source.resolve()?;
    let classes = cone::cone_classes(&counter()?, &r.graph)?;
    let formula = r.family.and_then(|f| f.cone_class());
    Ok(report::to_json(&ConeReport {
        source: r.label,
        edges: r.graph.edge_count(),
        v: (&classes.v).into(),
        w: (&classes.w).into(),
        y: (&classes.y).into(),
        consistent: classes.consistent(),
        formula_agrees: formula.as_ref().map(|f| *f == classes.v),
        formula: formula.as_ref().map(ClassOut::from),
    }))
}

/// `3`, `0,2,5` or `1-4`.
fn parse_grid(flag: &str, s: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Usage(format!("--{flag} {s:?}: expected a value, a list a,b,c or a range a-b"));
    let mut out = Vec::new();
    for part in s.split(',') {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.trim().parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

fn cmd_chi(family: ChainFamily, m: &str, k: &str, n: &str, format: TableFormat) -> Outcome {
    let (ms, ks, ns) = (parse_grid("m", m)?, parse_grid("k", k)?, parse_grid("N", n)?);
    let kind = match family {
        ChainFamily::ChainPolygon => FamilyKind::ChainPolygon,
        ChainFamily::ChainBanana => FamilyKind::ChainBanana,
    };
    let mut rows = Vec::new();
    for &m in &ms {
        for &k in &ks {
            for &n in &ns {
                let spec = FamilySpec::new(m, k, n)?;
                let fam = Family::new(kind, m, k, n);
                let class = fam.class_fixed_q()?;
                let edges = spec.edge_count();
                let locus = motivic::chi_c_real_locus(&class, edges);
                let closed = match kind {
                    FamilyKind::ChainPolygon => motivic::chi_c_chain_polygons(spec),
                    _ => motivic::chi_c_chain_bananas(spec),
                };
                rows.push(ChiRow {
                    m,
                    k,
                    n,
                    edges,
                    class_at_minus_two: report::number(&motivic::chi_c_real(&class)),
                    chi_c_locus: report::number(&locus),
                    agree: locus == closed,
                    closed_form: report::number(&closed),
                    decision_bound: motivic::decision_bound(&locus, edges as i64).to_string(),
                });
            }
        }
    }
    match format {
        TableFormat::Json => Ok(report::to_json(&ChiReport { family: kind.name().into(), rows })),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::Usage(e.to_string());
            w.write_record(ChiRow::CSV_HEADER).map_err(io)?;
            for row in &rows {
                w.write_record(row.csv_record()).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

fn cmd_count(source: &Source, primes: &[u64], check: Option<u64>, fixed_q: bool, q0: u64) -> Outcome {
    let r = source.resolve()?;
    let c = counter()?;
    let z = tutte::z_delcon(&r.graph);
    let dim = r.graph.edge_count() + usize::from(!fixed_q);
    let (primes, check) = if primes.is_empty() {
        pointcount::ladder(dim, if fixed_q { q0 + 1 } else { 2 })
    } else {
        let check = check.ok_or_else(|| Failure::Usage("--primes needs --check".into()))?;
        (primes.to_vec(), check)
    };
    if fixed_q {
        if let Some(p) = primes.iter().chain([&check]).find(|&&p| q0 % p < 2) {
            return Err(Failure::Usage(format!("q0 = {q0} is 0 or 1 modulo {p}")));
        }
    }
    let count = |p: u64| -> potts_core::Result<u64> {
        if fixed_q {
            c.count_fixed_q(&z, q0, dim, p)
        } else {
            c.count_complement(&z, dim, p)
        }
    };
    let rep = pointcount::interpolate_class(count, dim, &primes, check)?;
    Ok(report::to_json(&CountOut::from(&rep)))
}

fn cmd_verify(suite: &str, max_dim: usize, inject_failure: bool) -> Outcome {
    let mut checks = verify::run(suite, max_dim).map_err(Failure::Usage)?;
    if inject_failure {
        checks.push(potts::report::Check {
            suite: "injected".into(),
            name: "deliberate failure".into(),
            passed: false,
            detail: "requested with --inject-failure".into(),
        });
    }
    let rep = VerifyReport::new(suite, checks);
    let json = report::to_json(&rep);
    if rep.passed {
        return Ok(json);
    }
    print!("{json}");
    let names: Vec<String> =
        rep.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {} ({})", c.suite, c.name, c.detail)).collect();
    Err(Failure::Verification(format!("{} check(s) failed:\n  {}", rep.failures, names.join("\n  "))))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Z { source, which, json } => cmd_z(&source, which, json),
        Command::Class { source, fixed_q, variable_q: _, oracle } => cmd_class(&source, fixed_q, oracle),
        Command::Cone { source } => cmd_cone(&source),
        Command::Chi { family, m, k, n, format } => cmd_chi(family, &m, &k, &n, format),
        Command::Count { source, primes, check, fixed_q, q0 } => cmd_count(&source, &primes, check, fixed_q, q0),
        Command::Verify { suite, max_dim, inject_failure } => cmd_verify(&suite, max_dim, inject_failure),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::from(Error::NotPolynomialCount("x".into())).code(), 4);
        assert_eq!(Failure::from(Error::ResourceLimit { needed: 2, budget: 1 }).code(), 3);
        assert_eq!(Failure::from(Error::InvalidParameter("x".into())).code(), 2);
        assert_eq!(Failure::Verification(String::new()).code(), 1);
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("m", "3").ok(), Some(vec![3]));
        assert_eq!(parse_grid("m", "0-2,5").ok(), Some(vec![0, 1, 2, 5]));
        assert!(parse_grid("m", "2-1").is_err());
        assert!(parse_grid("m", "x").is_err());
    }
}
