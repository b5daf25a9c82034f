//! The `zcolor` command line: `color`, `verify`, `exact`, `atoms gen`,
//! `atoms bound`, `family gen` and `bench`.
//!
//! Exit status is 0 on success, 1 when a checked property fails and 2 on
//! usage, input or parse errors. Everything written to stdout and to
//! output files is a pure function of the arguments; wall-clock times go to
//! stderr, or into the bench table only when `--timings` is given.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::atoms::{self, AtomCatalog, GenerateOptions};
use crate::coloring::Coloring;
use crate::error::Error;
use crate::families::{FamilyName, FamilySpec};
use crate::graph::Graph;
use crate::io;
use crate::oracle::{self, Param};
use crate::random;
use crate::reduce::{self, ComplementaryOptions};
use crate::verify::{self, Verdict};

#[derive(Debug, Parser)]
#[command(name = "zcolor", version, about = "Grundy, b- and z-colorings of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color a DIMACS graph with one of the heuristics.
    Color(ColorArgs),
    /// Check a coloring record against a graph.
    Verify(VerifyArgs),
    /// Exact chromatic, Grundy, b-chromatic or z-number of a small graph.
    Exact(ExactArgs),
    /// Generate atom catalogs or use them to bound the z-number.
    #[command(subcommand)]
    Atoms(AtomsCommand),
    /// Build members of the named graph families.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Compare heuristics over a list of instances.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Heuristic {
    /// First-fit in vertex order.
    Greedy,
    /// Greedy followed by the Grundy reduction.
    Grundy,
    /// Grundy reduction followed by the color-dominating transform.
    Gcd,
    /// The full z-coloring heuristic.
    Z,
    /// The iterated z-coloring heuristic.
    Iz,
}

impl Heuristic {
    fn name(self) -> &'static str {
        match self {
            Heuristic::Greedy => "greedy",
            Heuristic::Grundy => "grundy",
            Heuristic::Gcd => "gcd",
            Heuristic::Z => "z",
            Heuristic::Iz => "iz",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Proper,
    Grundy,
    Cd,
    Z,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    /// DIMACS `.col` file.
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value = "z")]
    pub heuristic: Heuristic,
    /// Rounds for `iz`.
    #[arg(long, default_value_t = 10)]
    pub rounds: usize,
    /// Tuple budget for `--complementary`.
    #[arg(long, default_value_t = 1000)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Follow up with complementary augmentation (`z` and `iz` only).
    #[arg(long)]
    pub complementary: bool,
    /// Write the coloring record here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    /// Coloring record (JSON).
    pub coloring: PathBuf,
    #[arg(long, value_enum, default_value = "z")]
    pub level: Level,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    pub graph: PathBuf,
    #[arg(long, value_parser = parse_param)]
    pub param: Param,
    /// Vertex limit; defaults to 14 for `z` and 12 otherwise.
    #[arg(long)]
    pub limit: Option<usize>,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
}

fn parse_param(s: &str) -> Result<Param, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum AtomsCommand {
    /// Generate the atom catalog for z-number `t`.
    Gen {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        triangle_free: bool,
        /// Lift the size cap (full catalog at t = 4, or t > 4).
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Try to prove z(G) <= t-1 with a catalog for `t`.
    Bound {
        graph: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// Emit a family member as DIMACS.
    Gen {
        #[arg(long, value_parser = parse_family)]
        name: FamilyName,
        #[arg(long)]
        k: usize,
        /// DIMACS destination (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Coloring record destination for the colored families (Rk, Tk).
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
}

fn parse_family(s: &str) -> Result<FamilyName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// DIMACS instances.
    pub instances: Vec<PathBuf>,
    /// Random instance `n,p,seed` (G(n,p)); repeatable.
    #[arg(long, value_parser = parse_random)]
    pub random: Vec<RandomSpec>,
    /// Random tree `n,seed`; repeatable.
    #[arg(long, value_parser = parse_random_tree)]
    pub random_tree: Vec<(usize, u64)>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "greedy,z")]
    pub heuristics: Vec<Heuristic>,
    #[arg(long, default_value_t = 10)]
    pub rounds: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
    /// Include wall-clock times (makes the output run-dependent).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

fn parse_random(s: &str) -> Result<RandomSpec, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [n, p, seed] = parts[..] else {
        return Err("expected n,p,seed".into());
    };
    let n = n.trim().parse().map_err(|_| format!("bad vertex count `{n}`"))?;
    let p: f64 = p.trim().parse().map_err(|_| format!("bad probability `{p}`"))?;
    if !(0.0..=1.0).contains(&p) {
        return Err(format!("probability {p} outside [0, 1]"));
    }
    let seed = seed.trim().parse().map_err(|_| format!("bad seed `{seed}`"))?;
    Ok(RandomSpec { n, p, seed })
}

fn parse_random_tree(s: &str) -> Result<(usize, u64), String> {
    let (n, seed) = s.split_once(',').ok_or("expected n,seed")?;
    Ok((
        n.trim().parse().map_err(|_| format!("bad vertex count `{n}`"))?,
        seed.trim().parse().map_err(|_| format!("bad seed `{seed}`"))?,
    ))
}

/// Outcome of a subcommand: text for stdout and the exit status.
struct Outcome {
    stdout: String,
    status: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, status: 0 }
    }
}

/// Failure carrying its exit status.
struct Failure {
    msg: String,
    status: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { msg: e.to_string(), status: 2 }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { msg: msg.into(), status: 2 }
}

fn breach(msg: impl Into<String>) -> Failure {
    Failure { msg: msg.into(), status: 1 }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    io::parse_dimacs(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Parses arguments, runs the command and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.status
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            f.status
        }
    }
}

fn execute(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Color(a) => cmd_color(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Atoms(AtomsCommand::Gen { t, triangle_free, allow_large, out }) => {
            cmd_atoms_gen(*t, *triangle_free, *allow_large, out)
        }
        Command::Atoms(AtomsCommand::Bound { graph, t, catalog, format }) => {
            cmd_atoms_bound(graph, *t, catalog, *format)
        }
        Command::Family(FamilyCommand::Gen { name, k, out, coloring_out }) => {
            cmd_family(*name, *k, out.as_deref(), coloring_out.as_deref())
        }
        Command::Bench(a) => cmd_bench(a),
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
struct Flags {
    proper: bool,
    grundy: bool,
    cd: bool,
    z: bool,
}

fn flags(g: &Graph, c: &Coloring) -> Flags {
    let proper = c.is_proper(g);
    let passes = |v: crate::Result<Verdict>| v.is_ok_and(|v| v.pass);
    Flags {
        proper,
        grundy: proper && passes(verify::check_grundy(g, c)),
        cd: proper && passes(verify::check_cd(g, c)),
        z: verify::check_z(g, c).pass,
    }
}

/// Runs a heuristic and re-verifies the guarantee it makes.
fn run_heuristic(g: &Graph, h: Heuristic, rounds: usize, seed: u64) -> Result<(Coloring, Flags), Failure> {
    let identity: Vec<usize> = g.vertices().collect();
    let c = match h {
        Heuristic::Greedy => reduce::greedy(g, &identity)?,
        Heuristic::Grundy => reduce::grundy_reduce(g, &reduce::greedy(g, &identity)?)?.0,
        Heuristic::Gcd => {
            let grundy = reduce::grundy_reduce(g, &reduce::greedy(g, &identity)?)?.0;
            reduce::cd_gcd_transform(g, &grundy)?.0
        }
        Heuristic::Z => reduce::z_heuristic(g, None)?.0,
        Heuristic::Iz => reduce::iterated_z(g, rounds, seed)?.best,
    };
    let f = flags(g, &c);
    let promised = match h {
        Heuristic::Greedy | Heuristic::Grundy => f.grundy,
        Heuristic::Gcd => f.grundy && f.cd,
        Heuristic::Z | Heuristic::Iz => f.z,
    };
    if !promised {
        return Err(breach(format!("{} produced a coloring that fails its own guarantee", h.name())));
    }
    Ok((c, f))
}

fn cmd_color(a: &ColorArgs) -> Result<Outcome, Failure> {
    let g = read_graph(&a.graph)?;
    if a.complementary && !matches!(a.heuristic, Heuristic::Z | Heuristic::Iz) {
        return Err(usage("--complementary needs --heuristic z or iz"));
    }
    let start = Instant::now();
    let (mut c, mut f) = run_heuristic(&g, a.heuristic, a.rounds, a.seed)?;
    if a.complementary {
        c = reduce::complementary(&g, &c, ComplementaryOptions { budget: a.budget, seed: a.seed })?;
        f = flags(&g, &c);
        if !f.proper {
            return Err(breach("complementary augmentation produced an improper coloring"));
        }
    }
    eprintln!("elapsed: {:.3?}", start.elapsed());
    let star = if f.z { verify::find_star(&g, &c) } else { None };
    let record = io::serialize_coloring(&g, &c, star.as_deref());
    io::parse_coloring(&record).map_err(|e| breach(format!("record does not round-trip: {e}")))?;

    let mut out = String::new();
    match a.format {
        Format::Machine => {
            #[derive(Serialize)]
            struct Summary {
                heuristic: Heuristic,
                complementary: bool,
                n: usize,
                m: usize,
                k: u32,
                #[serde(flatten)]
                flags: Flags,
            }
            let s = Summary {
                heuristic: a.heuristic,
                complementary: a.complementary,
                n: g.n(),
                m: g.m(),
                k: c.k(),
                flags: f,
            };
            match &a.out {
                Some(path) => {
                    write(path, &record)?;
                    out.push_str(&serde_json::to_string(&s).expect("serializable"));
                    out.push('\n');
                }
                None => out.push_str(&record),
            }
        }
        Format::Human => {
            writeln!(out, "graph      {} ({} vertices, {} edges)", a.graph.display(), g.n(), g.m()).unwrap();
            let suffix = if a.complementary { " + complementary" } else { "" };
            writeln!(out, "heuristic  {}{suffix}", a.heuristic.name()).unwrap();
            writeln!(out, "colors     {}", c.k()).unwrap();
            let yn = |b: bool| if b { "pass" } else { "fail" };
            writeln!(
                out,
                "checks     proper {}, grundy {}, cd {}, z {}",
                yn(f.proper),
                yn(f.grundy),
                yn(f.cd),
                yn(f.z)
            )
            .unwrap();
            match &a.out {
                Some(path) => {
                    write(path, &record)?;
                    writeln!(out, "record     {}", path.display()).unwrap();
                }
                None => out.push_str(&record),
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn render_verdict(v: &Verdict, format: Format, headline: &str) -> String {
    match format {
        Format::Machine => format!("{}\n", v.to_json()),
        Format::Human => {
            let mut s = format!("{}: {headline}\n", if v.pass { "PASS" } else { "FAIL" });
            for viol in &v.violations {
                writeln!(s, "  {}", serde_json::to_string(viol).expect("serializable")).unwrap();
            }
            if let Some(w) = &v.witness {
                writeln!(s, "  witness {}", serde_json::to_string(w).expect("serializable")).unwrap();
            }
            s
        }
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let g = read_graph(&a.graph)?;
    let (rg, c, _) = io::parse_coloring(&read(&a.coloring)?)
        .map_err(|e| usage(format!("{}: {e}", a.coloring.display())))?;
    if rg != g {
        return Err(usage("the coloring record describes a different graph"));
    }
    let proper = verify::check_proper(&g, &c)?;
    let verdict = match a.level {
        Level::Proper => proper,
        _ if !proper.pass => proper,
        Level::Grundy => verify::check_grundy(&g, &c)?,
        Level::Cd => verify::check_cd(&g, &c)?,
        Level::Z => verify::check_z(&g, &c),
    };
    let level = format!("{:?}", a.level).to_lowercase();
    let stdout = render_verdict(&verdict, a.format, &format!("level {level}"));
    Ok(Outcome { stdout, status: if verdict.pass { 0 } else { 1 } })
}

fn cmd_exact(a: &ExactArgs) -> Result<Outcome, Failure> {
    let g = read_graph(&a.graph)?;
    let limit = a.limit.unwrap_or(a.param.default_limit());
    let r = oracle::exact(&g, a.param, limit)?;
    let stdout = match a.format {
        Format::Machine => {
            #[derive(Serialize)]
            struct Out<'a> {
                param: &'static str,
                value: u32,
                explored: u64,
                witness: &'a [u32],
            }
            let o = Out {
                param: a.param.name(),
                value: r.value,
                explored: r.explored,
                witness: r.witness.colors(),
            };
            format!("{}\n", serde_json::to_string(&o).expect("serializable"))
        }
        Format::Human => format!(
            "{} = {}\nexplored {} nodes\nwitness {:?}\n",
            a.param.name(),
            r.value,
            r.explored,
            r.witness.colors()
        ),
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_atoms_gen(t: usize, triangle_free: bool, allow_large: bool, out: &Path) -> Result<Outcome, Failure> {
    let cat = atoms::generate_atoms(t, GenerateOptions { triangle_free, allow_large })?;
    write(out, &cat.to_jsonl())?;
    let s = cat.stats;
    let mut text = format!(
        "t = {t}{}: {} atoms, largest order {}\n",
        if triangle_free { " (triangle-free)" } else { "" },
        cat.atoms.len(),
        cat.max_order()
    );
    writeln!(
        text,
        "phase I {}, candidates {}, removed: not z {}, triangle {}, not edge-minimal {}, duplicate {}",
        s.phase1,
        s.candidates,
        s.removed_not_z,
        s.removed_triangle,
        s.removed_not_minimal,
        s.removed_duplicates
    )
    .unwrap();
    writeln!(text, "catalog {}", out.display()).unwrap();
    Ok(Outcome::ok(text))
}

fn cmd_atoms_bound(graph: &Path, t: usize, catalog: &Path, format: Format) -> Result<Outcome, Failure> {
    let g = read_graph(graph)?;
    let cat =
        AtomCatalog::from_jsonl(&read(catalog)?).map_err(|e| usage(format!("{}: {e}", catalog.display())))?;
    let v = atoms::prove_upper_bound(&g, t, &cat)?;
    let headline = if v.pass { format!("z <= {}", t - 1) } else { "inconclusive".to_string() };
    Ok(Outcome { stdout: render_verdict(&v, format, &headline), status: if v.pass { 0 } else { 1 } })
}

fn cmd_family(
    name: FamilyName,
    k: usize,
    out: Option<&Path>,
    coloring_out: Option<&Path>,
) -> Result<Outcome, Failure> {
    let (g, colored) = FamilySpec { name, parameter: k }.build()?;
    let dimacs = io::write_dimacs(&g);
    let mut stdout = String::new();
    match out {
        Some(p) => write(p, &dimacs)?,
        None => stdout.push_str(&dimacs),
    }
    if let Some(p) = coloring_out {
        let cg = colored.ok_or_else(|| usage("only Rk and Tk carry a coloring"))?;
        write(p, &io::serialize_colored(&cg))?;
    }
    Ok(Outcome::ok(stdout))
}

struct Instance {
    name: String,
    graph: Graph,
}

#[derive(Serialize)]
struct Cell {
    heuristic: Heuristic,
    colors: Option<u32>,
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    millis: Option<f64>,
}

fn cmd_bench(a: &BenchArgs) -> Result<Outcome, Failure> {
    let mut instances = Vec::new();
    for p in &a.instances {
        instances.push(Instance { name: p.display().to_string(), graph: read_graph(p)? });
    }
    for r in &a.random {
        let graph = random::gnp(r.n, r.p, &mut random::seeded(r.seed));
        instances.push(Instance { name: format!("gnp({},{},{})", r.n, r.p, r.seed), graph });
    }
    for &(n, seed) in &a.random_tree {
        let graph = random::random_tree(n, &mut random::seeded(seed));
        instances.push(Instance { name: format!("tree({n},{seed})"), graph });
    }
    let rows: Vec<Vec<Cell>> = instances
        .par_iter()
        .map(|inst| {
            a.heuristics
                .iter()
                .map(|&h| {
                    let start = Instant::now();
                    let res = run_heuristic(&inst.graph, h, a.rounds, a.seed);
                    let millis = a.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
                    match res {
                        Ok((c, _)) => Cell { heuristic: h, colors: Some(c.k()), error: None, millis },
                        Err(f) => Cell { heuristic: h, colors: None, error: Some(f.msg), millis },
                    }
                })
                .collect()
        })
        .collect();

    let mut out = String::new();
    match a.format {
        Format::Machine => {
            #[derive(Serialize)]
            struct Row<'a> {
                instance: &'a str,
                n: usize,
                m: usize,
                #[serde(flatten)]
                cell: &'a Cell,
            }
            for (inst, cells) in instances.iter().zip(&rows) {
                for cell in cells {
                    let row = Row { instance: &inst.name, n: inst.graph.n(), m: inst.graph.m(), cell };
                    out.push_str(&serde_json::to_string(&row).expect("serializable"));
                    out.push('\n');
                }
            }
        }
        Format::Human => {
            if instances.is_empty() {
                return Ok(Outcome::ok(out));
            }
            let width = instances.iter().map(|i| i.name.len()).max().unwrap_or(8).max(8);
            write!(out, "{:<width$} {:>5} {:>6}", "instance", "n", "m").unwrap();
            for h in &a.heuristics {
                write!(out, " {:>8}", h.name()).unwrap();
                if a.timings {
                    write!(out, " {:>9}", "ms").unwrap();
                }
            }
            out.push('\n');
            for (inst, cells) in instances.iter().zip(&rows) {
                write!(out, "{:<width$} {:>5} {:>6}", inst.name, inst.graph.n(), inst.graph.m()).unwrap();
                for cell in cells {
                    match cell.colors {
                        Some(k) => write!(out, " {k:>8}").unwrap(),
                        None => write!(out, " {:>8}", "error").unwrap(),
                    }
                    if let Some(ms) = cell.millis {
                        write!(out, " {ms:>9.2}").unwrap();
                    }
                }
                out.push('\n');
            }
        }
    }
    Ok(Outcome::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argument_parsing() {
        assert!(Cli::try_parse_from(["zcolor", "color", "g.col", "--heuristic", "iz"]).is_ok());
        assert!(Cli::try_parse_from(["zcolor", "color", "g.col", "--heuristic", "dsatur"]).is_err());
        assert!(Cli::try_parse_from(["zcolor", "exact", "g.col", "--param", "gamma"]).is_ok());
        assert!(Cli::try_parse_from(["zcolor", "exact", "g.col", "--param", "omega"]).is_err());
        let b =
            Cli::try_parse_from(["zcolor", "bench", "--random", "30,0.5,7", "--heuristics", "z,iz"]).unwrap();
        match b.command {
            Command::Bench(a) => {
                assert_eq!(a.random, vec![RandomSpec { n: 30, p: 0.5, seed: 7 }]);
                assert_eq!(a.heuristics, vec![Heuristic::Z, Heuristic::Iz]);
            }
            _ => panic!("expected bench"),
        }
        assert!(parse_random("3,1.5,0").is_err());
        assert_eq!(run(["zcolor", "bench"]), 0);
        assert_eq!(run(["zcolor", "frobnicate"]), 2);
    }
}
