use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use ribbonball::catalog::{self, CatalogId};
use ribbonball::classify::{self, Certification, DEFAULT_DART_CAP};
use ribbonball::covers::{self, verify_covering, CoveringMap};
use ribbonball::monodromy::{self, DEFAULT_POINT_CAP};
use ribbonball::perm::Perm;
use ribbonball::ribbon::validate;
use ribbonball::surgery::{self, CROSS_JOIN_FIXTURE, REORDER_BLACK_FIXTURE};
use ribbonball::{rgf, Color, Error, PatternType, RibbonGraph, Role};

#[derive(Parser)]
#[command(name = "ribbonball", version, about = "Football patterns as colored ribbon graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a catalog entry as RGF.
    Build {
        /// Table row (1-20), a Platonic solid, `american_football`, `gamma0` or `painted_octahedron`.
        name: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the surface summary and vertex counts.
    Info(InputArgs),
    /// Check a graph against a pattern type; exits 1 when it is not a valid pattern.
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        pattern: TypeArgs,
    },
    /// Write the dual graph.
    Dual {
        #[arg(short, long, default_value = "-")]
        r#in: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    #[command(subcommand)]
    Cover(CoverCommand),
    /// Lift a graph along random or given permutation voltages.
    Lift {
        #[arg(short, long, default_value = "-")]
        r#in: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, conflicts_with = "volt")]
        seed: Option<u64>,
        /// JSON array with one permutation (array of images) per dart.
        #[arg(long)]
        volt: Option<PathBuf>,
        /// Which connected component of the lift to write.
        #[arg(long, default_value_t = 0)]
        component: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a surgery move.
    Surgery {
        kind: SurgeryKind,
        #[arg(short, long, default_value = "-")]
        r#in: PathBuf,
        /// Dart of the edge to act on; cross-join takes two.
        #[arg(long, num_args = 1..=2)]
        edge: Vec<usize>,
        /// New cyclic order at a black vertex, as darts.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        order: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    #[command(subcommand)]
    Mono(MonoCommand),
    /// Print the classification of feasible pattern types on the sphere.
    Classify {
        #[arg(long = "kmax", env = "RIBBONBALL_KMAX", default_value_t = 12)]
        k_max: usize,
        #[arg(long, default_value_t = DEFAULT_DART_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate every spherical pattern of one type and black count; exits 1 when none exist.
    Search {
        #[command(flatten)]
        pattern: TypeArgs,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = DEFAULT_DART_CAP)]
        cap: usize,
        /// Directory receiving one RGF file per pattern found.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Export as a DOT graph with the RGF embedded in a comment.
    Export {
        #[arg(long, required = true)]
        dot: bool,
        #[arg(short, long, default_value = "-")]
        r#in: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CoverCommand {
    /// Search for a covering map; exits 1 when there is none.
    Find {
        #[arg(long)]
        src: PathBuf,
        #[arg(long)]
        dst: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum MonoCommand {
    /// Print the monodromy permutations of a graph.
    Encode(InputArgs),
    /// Order and simplicity of the monodromy group.
    Order {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_POINT_CAP)]
        cap: usize,
    },
    /// Diagonal orbit of a point pair, as a common covering of both graphs.
    Fiber {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, default_value_t = 0)]
        x: usize,
        #[arg(long, default_value_t = 0)]
        y: usize,
        /// Write the decoded common covering as RGF.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct InputArgs {
    /// RGF file, `-` for standard input.
    #[arg(short, long, default_value = "-")]
    r#in: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TypeArgs {
    #[arg(long, default_value_t = 5)]
    k: usize,
    #[arg(long, default_value_t = 6)]
    l: usize,
    #[arg(long, default_value_t = 2)]
    n: usize,
}

impl TypeArgs {
    fn pattern_type(&self) -> Result<PatternType, Failure> {
        Ok(PatternType::new(self.k, self.l, self.n)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SurgeryKind {
    CrossJoin,
    ReorderBlack,
    RotateWhites,
    HalfTwist,
    AntipodalQuotient,
    DoubleCover,
}

enum Failure {
    /// A well-formed question whose answer is no.
    Negative(String),
    Error(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Error(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Error(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Error(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> Result<RibbonGraph, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))?
    };
    // A DOT export carries its RGF in the leading comment block.
    let text = match text.strip_prefix("/* rgf\n").and_then(|rest| rest.split_once("*/")) {
        Some((embedded, _)) => embedded.to_string(),
        None => text,
    };
    rgf::parse(&text).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))
}

fn write_out(output: Option<&Path>, text: &str) -> Outcome {
    match output {
        Some(p) if p != Path::new("-") => fs::write(p, text)?,
        _ => match io::stdout().write_all(text.as_bytes()) {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => return Err(e.into()),
            _ => {}
        },
    }
    Ok(())
}

fn print_json<T: Serialize>(value: &T) -> Outcome {
    // Going through `Value` sorts object keys.
    let value = serde_json::to_value(value)?;
    write_out(None, &(serde_json::to_string_pretty(&value)? + "\n"))
}

/// Pattern-role graphs are dualized so that black and white polygons become vertices.
fn colored(g: RibbonGraph) -> Result<RibbonGraph, Failure> {
    Ok(if g.role() == Role::Pattern { g.dual()? } else { g })
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Build { name, k, output } => {
            let g = if name == "painted_octahedron" {
                catalog::painted_octahedron()?
            } else {
                catalog::build(CatalogId::parse(&name, k)?)?
            };
            write_out(output.as_deref(), &rgf::to_string(&g))
        }
        Command::Info(input) => info(&read_graph(&input.r#in)?, input.json),
        Command::Validate { input, pattern } => {
            let report = validate(&read_graph(&input.r#in)?, pattern.pattern_type()?)?;
            if input.json {
                print_json(&report)?;
            } else {
                for v in &report.violations {
                    println!("{v:?}");
                }
            }
            if report.valid {
                if !input.json {
                    println!("valid {} pattern", report.pattern_type);
                }
                Ok(())
            } else {
                Err(Failure::Negative(format!("not a valid {} pattern", report.pattern_type)))
            }
        }
        Command::Dual { r#in, output } => {
            let g = read_graph(&r#in)?;
            write_out(output.as_deref(), &rgf::to_string(&g.dual()?))
        }
        Command::Cover(CoverCommand::Find { src, dst, json }) => {
            let g = colored(read_graph(&src)?)?;
            let h = colored(read_graph(&dst)?)?;
            match covers::find_covering(&g, &h)? {
                Some(c) => report_covering(&c, json),
                None => Err(Failure::Negative("no covering".into())),
            }
        }
        Command::Lift {
            r#in,
            degree,
            seed,
            volt,
            component,
            output,
            json,
        } => {
            let g = colored(read_graph(&r#in)?)?;
            let voltages = match volt {
                Some(path) => {
                    let images: Vec<Vec<usize>> = serde_json::from_str(&fs::read_to_string(path)?)?;
                    images
                        .into_iter()
                        .map(Perm::from_images)
                        .collect::<ribbonball::Result<Vec<_>>>()?
                }
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
                    covers::random_voltages(&g, degree, &mut rng)
                }
            };
            let parts = covers::voltage_lift(&g, degree, &voltages)?;
            let count = parts.len();
            let (lift, cover) = parts.into_iter().nth(component).ok_or_else(|| {
                Failure::Error(format!("lift has {count} components, no component {component}"))
            })?;
            if let Some(path) = output.as_deref() {
                write_out(Some(path), &rgf::to_string(&lift))?;
            }
            if json {
                let summary = lift.trace_faces();
                print_json(&json!({
                    "components": count,
                    "component": component,
                    "degree": cover.degree,
                    "counts": lift.counts(),
                    "euler": summary.euler,
                    "genus": summary.genus,
                    "orientable": summary.orientable,
                    "branches": cover.branch_points(),
                    "passed": verify_covering(&cover).passed,
                }))
            } else if output.is_none() {
                write_out(None, &rgf::to_string(&lift))
            } else {
                eprintln!("component {component} of {count}, degree {}", cover.degree);
                Ok(())
            }
        }
        Command::Surgery {
            kind,
            r#in,
            edge,
            order,
            output,
        } => {
            let load = || -> Result<RibbonGraph, Failure> { colored(read_graph(&r#in)?) };
            let g = match kind {
                SurgeryKind::CrossJoin => {
                    let (a, b) = match edge[..] {
                        [a, b] => (a, b),
                        [] => CROSS_JOIN_FIXTURE,
                        _ => return Err(Failure::Error("cross-join takes two --edge darts".into())),
                    };
                    surgery::cross_join(&load()?, a, b)?
                }
                SurgeryKind::ReorderBlack => {
                    let order = if order.is_empty() {
                        REORDER_BLACK_FIXTURE.to_vec()
                    } else {
                        order
                    };
                    surgery::reorder_black(&load()?, &order)?
                }
                SurgeryKind::RotateWhites => surgery::rotate_whites(&load()?)?,
                SurgeryKind::HalfTwist => {
                    let [dart] = edge[..] else {
                        return Err(Failure::Error("half-twist takes one --edge dart".into()));
                    };
                    surgery::half_twist(&load()?, dart)?
                }
                SurgeryKind::AntipodalQuotient => surgery::antipodal_quotient()?,
                SurgeryKind::DoubleCover => surgery::orientation_double_cover(&load()?)?.graph,
            };
            write_out(output.as_deref(), &rgf::to_string(&g))
        }
        Command::Mono(cmd) => mono(cmd),
        Command::Classify { k_max, cap, json } => {
            let c = classify::feasible_rows_with_cap(k_max, cap)?;
            if json {
                return print_json(&c);
            }
            println!("{:>4} {:>10} {:>5} {:>5}  {:<13} name", "row", "(k,l,n)", "b", "w", "certified");
            for r in &c.rows {
                let row = r.row.map_or("-".to_string(), |x| x.to_string());
                let cert = match r.certification {
                    Certification::Arithmetic => "arithmetic",
                    Certification::Search => "search",
                    Certification::Table => "table",
                };
                println!(
                    "{row:>4} {:>10} {:>5} {:>5}  {cert:<13} {}",
                    r.pattern_type().to_string(),
                    r.minimal_b,
                    r.minimal_w,
                    r.name.as_deref().unwrap_or("")
                );
            }
            println!("{} feasible, {} infeasible", c.rows.len(), c.infeasible.len());
            Ok(())
        }
        Command::Search {
            pattern,
            b,
            cap,
            out_dir,
            json,
        } => {
            let t = pattern.pattern_type()?;
            let found = classify::exhaustive_search(t, b, cap)?;
            if let Some(dir) = out_dir {
                fs::create_dir_all(&dir)?;
                for (i, g) in found.iter().enumerate() {
                    fs::write(dir.join(format!("pattern_{i}.rgf")), rgf::to_string(g))?;
                }
            }
            if json {
                print_json(&json!({ "type": t, "b": b, "count": found.len() }))?;
            } else {
                println!("{} pattern(s) of type {t} with b = {b}", found.len());
            }
            if found.is_empty() {
                Err(Failure::Negative(format!("no {t} pattern with b = {b}")))
            } else {
                Ok(())
            }
        }
        Command::Export { dot: _, r#in, output } => {
            let g = read_graph(&r#in)?;
            write_out(output.as_deref(), &to_dot(&g))
        }
    }
}

fn info(g: &RibbonGraph, json: bool) -> Outcome {
    let summary = g.trace_faces();
    let counts = if g.role() == Role::Pattern { g.dual()?.counts() } else { g.counts() };
    if json {
        return print_json(&json!({ "summary": summary, "counts": counts }));
    }
    let mut out = String::new();
    let _ = writeln!(out, "role {:?}, {} darts", g.role(), g.num_darts());
    let _ = writeln!(
        out,
        "V = {}, E = {}, F = {}, χ = {}",
        summary.vertices, summary.edges, summary.faces, summary.euler
    );
    let _ = writeln!(
        out,
        "{} {}, {} component(s)",
        if summary.orientable { "orientable, genus" } else { "non-orientable, crosscaps" },
        summary.genus,
        summary.components
    );
    let profile: Vec<String> = summary.face_profile().iter().map(|(l, c)| format!("{l}:{c}")).collect();
    let _ = writeln!(out, "faces {{{}}}", profile.join(", "));
    let d = counts.d.map_or("-".to_string(), |d| d.to_string());
    let _ = writeln!(
        out,
        "b = {}, w = {}, e = {}, e1 = {}, e2 = {}, d = {d}",
        counts.b, counts.w, counts.e, counts.e1, counts.e2
    );
    write_out(None, &out)
}

fn report_covering(c: &CoveringMap, json: bool) -> Outcome {
    let report = verify_covering(c);
    if json {
        return print_json(&json!({
            "degree": c.degree,
            "dart_map": c.dart_map,
            "branches": c.branch_points(),
            "report": report,
        }));
    }
    println!("covering of degree {}", c.degree);
    for b in c.branch_points() {
        println!(
            "face {} ({}-gon) over face {} ({}-gon), order {}",
            b.source_face, b.source_length, b.target_face, b.target_length, b.order
        );
    }
    for check in &report.checks {
        println!("{} {}", if check.passed { "ok  " } else { "FAIL" }, check.name);
    }
    Ok(())
}

fn mono(cmd: MonoCommand) -> Outcome {
    match cmd {
        MonoCommand::Encode(input) => {
            let enc = monodromy::encode(&colored(read_graph(&input.r#in)?)?)?;
            let stats = json!({
                "size": enc.size(),
                "orders": enc.orders(),
                "transitive": enc.is_transitive(),
            });
            if input.json {
                print_json(&json!({ "encoding": enc, "stats": stats }))
            } else {
                let (r, s, t) = enc.orders();
                println!(
                    "|X| = {}, orders (r, s, t) = ({r}, {s}, {t}), transitive: {}",
                    enc.size(),
                    enc.is_transitive()
                );
                Ok(())
            }
        }
        MonoCommand::Order { input, cap } => {
            let enc = monodromy::encode(&colored(read_graph(&input.r#in)?)?)?;
            let info = monodromy::group_order(&enc, cap)?;
            if input.json {
                print_json(&json!({ "size": enc.size(), "group": info }))
            } else {
                println!("group order {}, simple: {}", info.order, info.simple);
                Ok(())
            }
        }
        MonoCommand::Fiber {
            left,
            right,
            x,
            y,
            output,
            json,
        } => {
            let a = monodromy::encode(&colored(read_graph(&left)?)?)?;
            let b = monodromy::encode(&colored(read_graph(&right)?)?)?;
            let fp = monodromy::fiber_product(&a, &b, x, y)?;
            if let Some(path) = output.as_deref() {
                write_out(Some(path), &rgf::to_string(&monodromy::decode(&fp.encoding)?))?;
            }
            let value: Value = json!({
                "orbit": fp.orbit_size(),
                "degree_left": fp.degree_left,
                "degree_right": fp.degree_right,
            });
            if json {
                print_json(&value)
            } else {
                println!(
                    "orbit {}, degree {} over left, {} over right",
                    fp.orbit_size(),
                    fp.degree_left,
                    fp.degree_right
                );
                Ok(())
            }
        }
    }
}

fn color_name(c: Color) -> &'static str {
    match c {
        Color::Black => "black",
        Color::White => "white",
        Color::None => "none",
    }
}

/// Vertices are `v<i>` in [`RibbonGraph::vertices`] order and edges are named by their
/// smaller dart, so re-exporting a parsed export yields the same ids.
fn to_dot(g: &RibbonGraph) -> String {
    let mut out = String::from("/* rgf\n");
    out.push_str(&rgf::to_string(g));
    out.push_str("*/\ngraph ribbon {\n");
    let vertices = g.vertices();
    let mut vertex_of = vec![0; g.num_darts()];
    for (i, orbit) in vertices.iter().enumerate() {
        for &d in orbit {
            vertex_of[d] = i;
        }
        let color = color_name(g.vertex_color(orbit[0]));
        let fill = match g.vertex_color(orbit[0]) {
            Color::Black => "black",
            _ => "white",
        };
        let _ = writeln!(
            out,
            "  v{i} [color=\"{color}\", style=filled, fillcolor={fill}, valence={}];",
            orbit.len()
        );
    }
    for (a, b) in g.edges() {
        let id = a.min(b);
        let twist = if g.is_twisted(a) { ", twist=true, style=dashed" } else { "" };
        let _ = writeln!(out, "  v{} -- v{} [id=\"e{id}\"{twist}];", vertex_of[a], vertex_of[b]);
    }
    out.push_str("}\n");
    out
}
