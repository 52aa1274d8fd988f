//! Checking, dimension search, and exact embeddings of finite convex
//! geometries, over JSON files.
//!
//! Exit codes: 0 success, 1 a verification failed (JSON report on stdout),
//! 2 usage or data errors (message on stderr).

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cgx::formats::{
    parse_rational, point_strings, subset_names, EmbeddingDoc, GeometryDoc, OrderingsDoc,
    PolygonDoc,
};
use cgx::sample;
use cgx_core::generators::{
    circle_points, d_relation, line_points, planar_points_geometry, three_level_poset,
};
use cgx_core::svg::render_svg;
use cgx_core::{
    cdim, compatible_orderings, dim_report, embed_polygons, verify_polygons, ConvexGeometry,
    Error as CoreError, GroundSet, OrderingFamily, ShellingEmbedding, Subset,
};

const DEFAULT_LIMIT: usize = 12;

#[derive(Parser)]
#[command(
    name = "cgx",
    version,
    about = "Finite convex geometries: checking, dimension, exact embeddings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Ground-set size guard for exponential searches (default: CGX_LIMIT or 12).
    #[arg(long, global = true, value_name = "N")]
    limit: Option<usize>,
    /// Emit machine-readable JSON (the default and only output mode).
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the convex-geometry axioms and the anti-exchange property.
    Check {
        /// Geometry or orderings JSON ("-" for stdin).
        file: PathBuf,
    },
    /// Closure of the given elements.
    Closure {
        file: PathBuf,
        /// Element names.
        elements: Vec<String>,
    },
    /// Exact convex dimension with a minimal generating family.
    Cdim { file: PathBuf },
    /// All orderings whose prefixes are convex.
    Compat { file: PathBuf },
    /// Geometric dimension: exact where decided, bounds otherwise.
    Dim { file: PathBuf },
    /// Build an embedding.
    #[command(subcommand)]
    Embed(EmbedCmd),
    /// Verify an embedding file against a geometry file.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Generate geometries and ordering families.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Closure dependence pairs and their cycles.
    Drel { file: PathBuf },
    /// A single element extending the given convex set.
    Ext {
        file: PathBuf,
        /// Element names of a convex set.
        elements: Vec<String>,
    },
}

#[derive(Subcommand)]
enum EmbedCmd {
    /// Generalized convex shelling: integer points, one dimension per ordering.
    Shelling {
        /// Orderings JSON.
        file: PathBuf,
        /// Scale for the external point set Q, default (M+1)^(M+1).
        #[arg(long, value_name = "R")]
        lambda: Option<String>,
        /// Write the embedding here instead of stdout.
        #[arg(short = 'o', value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Convex polygons in the plane inducing the geometry.
    Polygons {
        /// Geometry or orderings JSON.
        file: PathBuf,
        /// Also render the polygons as SVG.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Write the polygon map here instead of stdout.
        #[arg(short = 'o', value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Check that a shelling embedding induces exactly the given geometry.
    Shelling {
        embedding: PathBuf,
        geometry: PathBuf,
    },
    /// Check vertex-disjointness and that the polygons induce the geometry.
    Polygons { map: PathBuf, geometry: PathBuf },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Order-convex sets of a three-level poset with level sizes A,B,C.
    Poset {
        #[arg(long, value_name = "A,B,C")]
        levels: String,
        #[arg(short = 'o', value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Collinear points: the interval geometry.
    Line {
        #[arg(long)]
        n: usize,
        #[arg(short = 'o', value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Points in convex position: the full power set.
    Circle {
        #[arg(long)]
        n: usize,
        #[arg(short = 'o', value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// The geometry generated by an ordering family.
    Orderings {
        file: PathBuf,
        #[arg(short = 'o', value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Seeded random ordering family over n elements.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

/// A failed command: bad data (exit 2) or a failed verification whose JSON
/// report belongs on stdout (exit 1).
enum Trouble {
    Data(anyhow::Error),
    Failure(Value),
}

impl From<anyhow::Error> for Trouble {
    fn from(e: anyhow::Error) -> Trouble {
        Trouble::Data(e)
    }
}

fn core_data(e: CoreError) -> Trouble {
    Trouble::Data(anyhow::Error::new(e))
}

type CmdOut = Result<Option<Value>, Trouble>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limit = match resolve_limit(cli.limit) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    match run(cli.cmd, limit) {
        Ok(Some(v)) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(Trouble::Failure(v)) => {
            println!("{v}");
            ExitCode::from(1)
        }
        Err(Trouble::Data(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn resolve_limit(flag: Option<usize>) -> anyhow::Result<usize> {
    if let Some(l) = flag {
        return Ok(l);
    }
    match std::env::var("CGX_LIMIT") {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("CGX_LIMIT is not a size: {s:?}")),
        Err(_) => Ok(DEFAULT_LIMIT),
    }
}

fn ensure_limit(n: usize, limit: usize) -> anyhow::Result<()> {
    if n > 32 {
        bail!("ground sets above 32 elements are unsupported");
    }
    if n > limit {
        bail!("ground set size {n} exceeds limit {limit} (raise with --limit or CGX_LIMIT)");
    }
    Ok(())
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        Ok(buf)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// Accepts a geometry document, or an orderings document whose generated
/// geometry is used.
fn load_geometry(path: &Path, limit: usize) -> anyhow::Result<ConvexGeometry> {
    let text = read_input(path)?;
    let value: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    if value.get("convex").is_some() {
        let doc: GeometryDoc = serde_json::from_value(value)
            .with_context(|| format!("parsing {} as a geometry document", path.display()))?;
        doc.to_geometry()
    } else if value.get("orderings").is_some() {
        let f = orderings_from_value(value, path)?;
        ensure_limit(f.ground().len(), limit)?;
        Ok(f.generate())
    } else {
        bail!(
            "{}: expected a geometry document (\"convex\") or orderings document (\"orderings\")",
            path.display()
        )
    }
}

fn load_orderings(path: &Path) -> anyhow::Result<OrderingFamily> {
    let text = read_input(path)?;
    let value: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    orderings_from_value(value, path)
}

fn orderings_from_value(value: Value, path: &Path) -> anyhow::Result<OrderingFamily> {
    let doc: OrderingsDoc = serde_json::from_value(value)
        .with_context(|| format!("parsing {} as an orderings document", path.display()))?;
    doc.to_family()
}

fn emit<T: serde::Serialize>(doc: &T, out: Option<&Path>) -> CmdOut {
    let value = serde_json::to_value(doc).map_err(|e| Trouble::Data(e.into()))?;
    match out {
        Some(path) => {
            fs::write(path, format!("{value:#}\n"))
                .with_context(|| format!("writing {}", path.display()))?;
            Ok(None)
        }
        None => Ok(Some(value)),
    }
}

fn run(cmd: Cmd, limit: usize) -> CmdOut {
    match cmd {
        Cmd::Check { file } => check_cmd(&file, limit),
        Cmd::Closure { file, elements } => closure_cmd(&file, &elements, limit),
        Cmd::Cdim { file } => cdim_cmd(&file, limit),
        Cmd::Compat { file } => compat_cmd(&file, limit),
        Cmd::Dim { file } => dim_cmd(&file, limit),
        Cmd::Embed(EmbedCmd::Shelling { file, lambda, out }) => {
            embed_shelling_cmd(&file, lambda.as_deref(), out.as_deref())
        }
        Cmd::Embed(EmbedCmd::Polygons { file, svg, out }) => {
            embed_polygons_cmd(&file, svg.as_deref(), out.as_deref(), limit)
        }
        Cmd::Verify(VerifyCmd::Shelling {
            embedding,
            geometry,
        }) => verify_shelling_cmd(&embedding, &geometry, limit),
        Cmd::Verify(VerifyCmd::Polygons { map, geometry }) => {
            verify_polygons_cmd(&map, &geometry, limit)
        }
        Cmd::Gen(GenCmd::Poset { levels, out }) => gen_poset_cmd(&levels, out.as_deref(), limit),
        Cmd::Gen(GenCmd::Line { n, out }) => gen_points_cmd(n, false, out.as_deref(), limit),
        Cmd::Gen(GenCmd::Circle { n, out }) => gen_points_cmd(n, true, out.as_deref(), limit),
        Cmd::Gen(GenCmd::Orderings { file, out }) => {
            gen_orderings_cmd(&file, out.as_deref(), limit)
        }
        Cmd::Gen(GenCmd::Random { n, m, seed, out }) => {
            gen_random_cmd(n, m, seed, out.as_deref(), limit)
        }
        Cmd::Drel { file } => drel_cmd(&file, limit),
        Cmd::Ext { file, elements } => ext_cmd(&file, &elements, limit),
    }
}

fn check_cmd(file: &Path, limit: usize) -> CmdOut {
    let g = load_geometry(file, limit)?;
    let ax = g.check_axioms();
    let anti = g.anti_exchange_report_unchecked();
    if ax.pass() && anti.pass() {
        return Ok(Some(json!({ "pass": true })));
    }
    let ground = g.ground();
    Err(Trouble::Failure(json!({
        "pass": false,
        "axioms": {
            "contains_empty_and_ground": ax.contains_empty_and_ground,
            "intersection_violation": ax.intersection_violation.map(|(x, y)| {
                json!([subset_names(ground, x), subset_names(ground, y)])
            }),
            "extension_violation": ax.extension_violation.map(|x| subset_names(ground, x)),
        },
        "anti_exchange": {
            "violation": anti.violation.map(|w| json!({
                "base": subset_names(ground, w.base),
                "y": ground.name(w.y),
                "z": ground.name(w.z),
            })),
        },
    })))
}

fn closure_cmd(file: &Path, elements: &[String], limit: usize) -> CmdOut {
    let g = load_geometry(file, limit)?;
    let x = g.ground().subset_of_names(elements).map_err(core_data)?;
    Ok(Some(json!({
        "closure": subset_names(g.ground(), g.closure(x))
    })))
}

fn witness_lists(f: &OrderingFamily) -> Vec<Vec<String>> {
    f.orders()
        .iter()
        .map(|o| {
            o.ranked()
                .iter()
                .map(|&e| f.ground().name(e).to_string())
                .collect()
        })
        .collect()
}

fn cdim_cmd(file: &Path, limit: usize) -> CmdOut {
    let g = load_geometry(file, limit)?;
    let r = cdim(&g, limit).map_err(core_data)?;
    Ok(Some(json!({
        "cdim": r.cdim,
        "witness": witness_lists(&r.witness),
    })))
}

fn compat_cmd(file: &Path, limit: usize) -> CmdOut {
    let g = load_geometry(file, limit)?;
    ensure_limit(g.ground().len(), limit)?;
    let list = compatible_orderings(&g);
    let names: Vec<Vec<String>> = list
        .iter()
        .map(|o| {
            o.ranked()
                .iter()
                .map(|&e| g.ground().name(e).to_string())
                .collect()
        })
        .collect();
    Ok(Some(json!({
        "count": names.len(),
        "orderings": names,
    })))
}

fn dim_cmd(file: &Path, limit: usize) -> CmdOut {
    let g = load_geometry(file, limit)?;
    let r = dim_report(&g, limit).map_err(core_data)?;
    Ok(Some(json!({
        "cdim": r.cdim,
        "upper_bound": r.upper_bound,
        "exact": r.exact,
        "bounds": [r.bounds.0, r.bounds.1],
        "line_witness": r.line_witness.map(|w| json!({
            "left_to_right": w.left_to_right
                .iter()
                .map(|&e| g.ground().name(e))
                .collect::<Vec<_>>(),
            "gap": w.gap,
        })),
    })))
}

fn embed_shelling_cmd(file: &Path, lambda: Option<&str>, out: Option<&Path>) -> CmdOut {
    let f = load_orderings(file)?;
    let lam = lambda.map(parse_rational).transpose()?;
    let e = ShellingEmbedding::new(&f, lam).map_err(core_data)?;
    emit(&EmbeddingDoc::from_embedding(&e), out)
}

fn embed_polygons_cmd(file: &Path, svg: Option<&Path>, out: Option<&Path>, limit: usize) -> CmdOut {
    let g = load_geometry(file, limit)?;
    let m = match embed_polygons(&g, limit) {
        Ok(m) => m,
        Err(CoreError::RetriesExhausted(subset)) => {
            return Err(Trouble::Failure(json!({
                "pass": false,
                "reason": "polygon embedding failed verification after all retries",
                "subset": subset.map(|s| subset_names(g.ground(), s)),
            })));
        }
        Err(e) => return Err(core_data(e)),
    };
    if let Some(path) = svg {
        fs::write(path, render_svg(&m)).with_context(|| format!("writing {}", path.display()))?;
    }
    emit(&PolygonDoc::from_map(&m), out)
}

fn verify_shelling_cmd(embedding: &Path, geometry: &Path, limit: usize) -> CmdOut {
    let text = read_input(embedding)?;
    let doc: EmbeddingDoc = serde_json::from_str(&text)
        .with_context(|| format!("parsing {} as an embedding document", embedding.display()))?;
    let inst = doc.to_instance()?;
    let g = load_geometry(geometry, limit)?;
    if inst.ground().names() != g.ground().names() {
        return Err(Trouble::Data(anyhow!(
            "embedding and geometry use different ground sets"
        )));
    }
    let n = g.ground().len();
    ensure_limit(n, limit)?;
    let induced = inst.shelling_geometry();
    if induced.equals(&g) {
        return Ok(Some(json!({ "pass": true })));
    }
    let (subset, shelling_convex, generated) = (0..(1u64 << n))
        .map(Subset::from_bits)
        .find_map(|s| {
            let a = induced.contains(s);
            let b = g.contains(s);
            (a != b).then_some((s, a, b))
        })
        .expect("unequal families differ on some subset");
    Err(Trouble::Failure(json!({
        "pass": false,
        "subset": subset_names(g.ground(), subset),
        "shelling_convex": shelling_convex,
        "generated": generated,
    })))
}

fn verify_polygons_cmd(map: &Path, geometry: &Path, limit: usize) -> CmdOut {
    let text = read_input(map)?;
    let doc: PolygonDoc = serde_json::from_str(&text)
        .with_context(|| format!("parsing {} as a polygon map", map.display()))?;
    let m = doc.to_map()?;
    let g = load_geometry(geometry, limit)?;
    if m.ground().names() != g.ground().names() {
        return Err(Trouble::Data(anyhow!(
            "polygon map and geometry use different ground sets"
        )));
    }
    ensure_limit(g.ground().len(), limit)?;
    let report = verify_polygons(&m, &g).map_err(core_data)?;
    if report.pass() {
        return Ok(Some(json!({ "pass": true })));
    }
    let ground = g.ground();
    Err(Trouble::Failure(json!({
        "pass": false,
        "shared_vertex": report.shared_vertex.as_ref().map(|v| json!({
            "first": ground.name(v.first),
            "second": ground.name(v.second),
            "vertex": point_strings(&v.vertex),
        })),
        "mismatch": report.mismatch.as_ref().map(|mm| json!({
            "subset": subset_names(ground, mm.subset),
            "from_polygons": mm.from_polygons,
            "expected": mm.expected,
        })),
    })))
}

fn gen_poset_cmd(levels: &str, out: Option<&Path>, limit: usize) -> CmdOut {
    let sizes = levels
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("bad --levels value {levels:?}, expected A,B,C"))?;
    let [a, b, c] = sizes[..] else {
        return Err(Trouble::Data(anyhow!(
            "--levels takes exactly three sizes, got {levels:?}"
        )));
    };
    ensure_limit(a + b + c, limit)?;
    let g = three_level_poset(a, b, c).map_err(core_data)?.geometry();
    emit(&GeometryDoc::from_geometry(&g), out)
}

fn gen_points_cmd(n: usize, circle: bool, out: Option<&Path>, limit: usize) -> CmdOut {
    ensure_limit(n, limit)?;
    let ground = GroundSet::letters(n).map_err(core_data)?;
    let points = if circle {
        circle_points(n)
    } else {
        line_points(n)
    };
    let g = planar_points_geometry(ground, &points).map_err(core_data)?;
    emit(&GeometryDoc::from_geometry(&g), out)
}

fn gen_orderings_cmd(file: &Path, out: Option<&Path>, limit: usize) -> CmdOut {
    let f = load_orderings(file)?;
    ensure_limit(f.ground().len(), limit)?;
    emit(&GeometryDoc::from_geometry(&f.generate()), out)
}

fn gen_random_cmd(n: usize, m: usize, seed: u64, out: Option<&Path>, limit: usize) -> CmdOut {
    ensure_limit(n, limit)?;
    if m == 0 {
        return Err(Trouble::Data(anyhow!("--m must be at least 1")));
    }
    let f = sample::random_family(&mut sample::seeded(seed), n, m);
    emit(&OrderingsDoc::from_family(&f), out)
}

fn drel_cmd(file: &Path, limit: usize) -> CmdOut {
    let g = load_geometry(file, limit)?;
    let rep = d_relation(&g, limit).map_err(core_data)?;
    let ground = g.ground();
    Ok(Some(json!({
        "pairs": rep.pairs
            .iter()
            .map(|&(a, b)| json!([ground.name(a), ground.name(b)]))
            .collect::<Vec<_>>(),
        "acyclic": rep.is_acyclic(),
        "cycle": rep.cycle.as_ref().map(|cyc| {
            cyc.iter().map(|&e| ground.name(e)).collect::<Vec<_>>()
        }),
    })))
}

fn ext_cmd(file: &Path, elements: &[String], limit: usize) -> CmdOut {
    let g = load_geometry(file, limit)?;
    let x = g.ground().subset_of_names(elements).map_err(core_data)?;
    if !g.contains(x) {
        return Err(Trouble::Data(anyhow!(
            "{} is not convex in this geometry",
            g.ground().format_subset(x)
        )));
    }
    let full = g.ground().full();
    if x == full {
        return Err(Trouble::Data(anyhow!(
            "the full ground set cannot be extended"
        )));
    }
    let e = full
        .difference(x)
        .iter()
        .find(|&e| g.contains(x.with(e)))
        .ok_or_else(|| {
            anyhow!(
                "no single-element extension of {} exists; the family violates the axioms",
                g.ground().format_subset(x)
            )
        })?;
    Ok(Some(json!({ "element": g.ground().name(e) })))
}
