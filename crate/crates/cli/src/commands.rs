//! Command implementations. Every command resolves its input image, runs
//! the library, and renders a deterministic text or JSON report.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use serde_json::{json, Value};

use dtop::analysis::{
    connected_ray_orders, count_zero_manifold_orientations, enumerate_zero_manifold_orientations,
    verify_partition_of_unity, RAY_ORDER_DEFAULT_BOUND,
};
use dtop::error::Error;
use dtop::io;
use dtop::lattice::{
    components as image_components, gen_box, gen_cross, gen_interval, gen_sphere,
    is_totally_disconnected, neighborhood, remove_points, simplex_census, Adjacency, DigitalImage,
    LatticePoint,
};
use dtop::manifold::{classify_point, manifold_report_exempt, truncation_rim, ManifoldReport};
use dtop::models::minimum_class_size;
use dtop::morphisms::{find_isomorphism, is_continuous, is_isomorphism, verify_homotopy};

type CliResult = Result<u8, String>;

// ---------------------------------------------------------------- arguments

#[derive(Args)]
pub struct InputArgs {
    /// Image file: JSON, or plain text (one point per line) with the
    /// adjacency given via --adjacency/--kl
    #[arg(long, value_name = "PATH", conflicts_with = "gen")]
    pub file: Option<PathBuf>,
    /// Generated image: interval:A:B, sphere:N, box:LO:HI[,LO:HI...], cross:K
    #[arg(long, value_name = "NAME:ARGS")]
    pub gen: Option<String>,
    /// Adjacency by conventional name (2, 4, 8, 6, 18, 26, ...); a plain
    /// kappa parameter is accepted where no name matches
    #[arg(long, value_name = "N", conflicts_with = "kl")]
    pub adjacency: Option<usize>,
    /// Adjacency by kappa parameter
    #[arg(long, value_name = "L")]
    pub kl: Option<usize>,
    /// Points to remove from the image, e.g. "(2,2),(0,0)"
    #[arg(long, value_name = "LIST")]
    pub minus: Option<String>,
}

#[derive(Args)]
pub struct OutputArgs {
    /// Emit JSON
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    /// Emit text (the default)
    #[arg(long)]
    pub text: bool,
}

#[derive(Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Model adjacency parameter lambda for the comparison neighborhoods
    #[arg(long, value_name = "L", default_value_t = 1)]
    pub model_adjacency: usize,
    /// Allow boundary models (the non-negative orthant)
    #[arg(long)]
    pub with_boundary: bool,
    /// Cap the dimension scan (default: largest neighborhood size)
    #[arg(long, value_name = "N")]
    pub n_cap: Option<usize>,
    /// Per-point classification of the listed points instead of a global verdict
    #[arg(long, value_name = "LIST")]
    pub points: Option<String>,
    /// Report every (dimension, model adjacency) pair that classifies the image
    #[arg(long, conflicts_with = "points")]
    pub sweep: bool,
    /// Require truncation-rim points to match models too
    #[arg(long)]
    pub include_rim: bool,
}

#[derive(Args)]
pub struct EulerArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct ComponentsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct OrientArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Cap on the image size for ray-order enumeration
    #[arg(long, value_name = "B", default_value_t = RAY_ORDER_DEFAULT_BOUND)]
    pub bound: usize,
    /// List the orders themselves, not just the count
    #[arg(long)]
    pub list: bool,
}

#[derive(Args)]
pub struct CheckMapArgs {
    /// Map file to verify
    #[arg(long, value_name = "PATH")]
    pub map: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct CheckIsoArgs {
    /// Verify this map file as an isomorphism
    #[arg(long, value_name = "PATH", conflicts_with_all = ["file", "with"])]
    pub map: Option<PathBuf>,
    /// Search mode: first image (JSON)
    #[arg(long, value_name = "PATH", requires = "with")]
    pub file: Option<PathBuf>,
    /// Search mode: second image (JSON)
    #[arg(long, value_name = "PATH", requires = "file")]
    pub with: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct CheckPouArgs {
    /// Partition file to verify
    #[arg(long, value_name = "PATH")]
    pub file: PathBuf,
    /// Check the neighborhood condition on these points (default: everywhere)
    #[arg(long, value_name = "LIST")]
    pub points: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct CheckHomotopyArgs {
    /// Homotopy table file
    #[arg(long, value_name = "PATH")]
    pub homotopy: PathBuf,
    /// Map file for the step-0 end
    #[arg(long, value_name = "PATH")]
    pub from: PathBuf,
    /// Map file for the step-j end
    #[arg(long, value_name = "PATH")]
    pub to: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct GenArgs {
    /// Generator spec: interval:A:B, sphere:N, box:LO:HI[,LO:HI...], cross:K
    #[arg(value_name = "NAME:ARGS")]
    pub spec: String,
    /// Adjacency by conventional name
    #[arg(long, value_name = "N", conflicts_with = "kl")]
    pub adjacency: Option<usize>,
    /// Adjacency by kappa parameter
    #[arg(long, value_name = "L")]
    pub kl: Option<usize>,
    /// Points to remove
    #[arg(long, value_name = "LIST")]
    pub minus: Option<String>,
}

#[derive(Args)]
pub struct CorpusArgs {
    /// Only run cases whose name contains this substring
    #[arg(long, value_name = "SUBSTR")]
    pub filter: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

// -------------------------------------------------------------- input layer

fn fail<T>(message: impl Into<String>) -> Result<T, String> {
    Err(message.into())
}

fn lib_err(context: &str, error: Error) -> String {
    format!("{context}: {error}")
}

fn read_file(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// "(0,0),(2,0)" -> points. Whitespace is ignored.
pub fn parse_points(text: &str) -> Result<Vec<LatticePoint>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut points = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('(') else {
            return fail(format!("expected '(' at {rest:?}"));
        };
        let Some(end) = stripped.find(')') else {
            return fail(format!("missing ')' in {text:?}"));
        };
        let inside = &stripped[..end];
        let coords = inside
            .split(',')
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| format!("bad coordinate {tok:?} in {text:?}"))
            })
            .collect::<Result<Vec<i64>, String>>()?;
        if coords.is_empty() {
            return fail(format!("empty point in {text:?}"));
        }
        points.push(LatticePoint::new(coords));
        rest = &stripped[end + 1..];
        rest = rest.strip_prefix(',').unwrap_or(rest);
    }
    if points.is_empty() {
        return fail("no points given");
    }
    Ok(points)
}

/// Conventional names resolve first (4/8 in the plane, 6/18/26 in space);
/// otherwise the value is taken as a kappa parameter.
fn resolve_adjacency(value: usize, dim: usize) -> Result<Adjacency, String> {
    if let Ok(adjacency) = Adjacency::named(value, dim) {
        return Ok(adjacency);
    }
    Adjacency::new(value, dim).map_err(|_| {
        let names: Vec<String> = (1..=dim)
            .map(|l| Adjacency::new(l, dim).unwrap().name().to_string())
            .collect();
        format!(
            "no {value}-adjacency in Z^{dim}: named adjacencies here are {} (or kappa 1..={dim})",
            names.join(", ")
        )
    })
}

enum GenSpec {
    Interval(i64, i64),
    Sphere(usize),
    Box(Vec<(i64, i64)>),
    Cross(i64),
}

impl GenSpec {
    fn parse(spec: &str) -> Result<Self, String> {
        let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
        let parts: Vec<&str> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(':').collect()
        };
        let int = |tok: &str| {
            tok.parse::<i64>()
                .map_err(|_| format!("bad integer {tok:?} in generator {spec:?}"))
        };
        match name {
            "interval" => {
                if parts.len() != 2 {
                    return fail("usage: interval:A:B");
                }
                Ok(GenSpec::Interval(int(parts[0])?, int(parts[1])?))
            }
            "sphere" => {
                if parts.len() != 1 {
                    return fail("usage: sphere:N");
                }
                let n = int(parts[0])?;
                if n < 0 {
                    return fail("sphere dimension must be non-negative");
                }
                Ok(GenSpec::Sphere(n as usize))
            }
            "box" => {
                if args.is_empty() {
                    return fail("usage: box:LO:HI[,LO:HI...]");
                }
                let ranges = args
                    .split(',')
                    .map(|range| {
                        let (lo, hi) = range
                            .split_once(':')
                            .ok_or_else(|| format!("bad range {range:?}, want LO:HI"))?;
                        Ok((int(lo)?, int(hi)?))
                    })
                    .collect::<Result<Vec<(i64, i64)>, String>>()?;
                Ok(GenSpec::Box(ranges))
            }
            "cross" => {
                if parts.len() != 1 {
                    return fail("usage: cross:K");
                }
                Ok(GenSpec::Cross(int(parts[0])?))
            }
            other => fail(format!(
                "unknown generator {other:?}: expected interval, sphere, box, or cross"
            )),
        }
    }

    fn dim(&self) -> usize {
        match self {
            GenSpec::Interval(..) => 1,
            GenSpec::Sphere(n) => n + 1,
            GenSpec::Box(ranges) => ranges.len(),
            GenSpec::Cross(_) => 2,
        }
    }

    fn build(&self, l: usize) -> Result<DigitalImage, String> {
        let built = match self {
            GenSpec::Interval(a, b) => gen_interval(*a, *b),
            GenSpec::Sphere(n) => gen_sphere(*n, l),
            GenSpec::Box(ranges) => gen_box(ranges, l),
            GenSpec::Cross(k) => gen_cross(*k, l),
        };
        built.map_err(|e| lib_err("generator", e))
    }
}

/// Box spec "box:LO:HI,..." uses ',' between ranges, so the generator
/// argument grammar stays unambiguous. Example: box:0:4,0:4.
struct LoadedImage {
    image: DigitalImage,
    /// Rim of a generated truncation (cross only); empty otherwise.
    rim: BTreeSet<LatticePoint>,
}

fn load_image(args: &InputArgs) -> Result<LoadedImage, String> {
    let flag_adjacency = |dim: usize| -> Result<Option<Adjacency>, String> {
        if let Some(l) = args.kl {
            return Adjacency::new(l, dim)
                .map(Some)
                .map_err(|e| lib_err("--kl", e));
        }
        if let Some(name) = args.adjacency {
            return resolve_adjacency(name, dim).map(Some);
        }
        Ok(None)
    };

    let mut loaded = match (&args.file, &args.gen) {
        (Some(path), None) => {
            let text = read_file(path)?;
            let looks_like_json = text.trim_start().starts_with('{');
            let image = if looks_like_json {
                let image =
                    io::parse_image_json(&text).map_err(|e| format!("{}: {e}", path.display()))?;
                match flag_adjacency(image.dim())? {
                    Some(adjacency) => image
                        .with_adjacency(adjacency)
                        .map_err(|e| lib_err("adjacency override", e))?,
                    None => image,
                }
            } else {
                let probe = io::parse_image_text(&text, Adjacency::new(1, 1).unwrap());
                let dim = match &probe {
                    Ok(image) => image.dim(),
                    Err(_) => {
                        // re-parse to learn the dimension from the first point
                        text.lines()
                            .map(str::trim)
                            .find(|l| !l.is_empty() && !l.starts_with('#'))
                            .map(|l| l.split_whitespace().count())
                            .unwrap_or(1)
                    }
                };
                let adjacency = flag_adjacency(dim)?.ok_or_else(|| {
                    format!("{}: text images need --adjacency or --kl", path.display())
                })?;
                io::parse_image_text(&text, adjacency)
                    .map_err(|e| format!("{}: {e}", path.display()))?
            };
            LoadedImage {
                image,
                rim: BTreeSet::new(),
            }
        }
        (None, Some(spec)) => {
            let spec = GenSpec::parse(spec)?;
            let adjacency =
                flag_adjacency(spec.dim())?.ok_or("generated images need --adjacency or --kl")?;
            let image = spec.build(adjacency.l())?;
            let rim = match spec {
                GenSpec::Cross(_) => truncation_rim(&image),
                _ => BTreeSet::new(),
            };
            LoadedImage { image, rim }
        }
        _ => return fail("exactly one of --file or --gen is required"),
    };

    if let Some(minus) = &args.minus {
        let removal = parse_points(minus)?;
        loaded.image = remove_points(&loaded.image, &removal);
        loaded.rim = loaded
            .rim
            .difference(&removal.into_iter().collect())
            .cloned()
            .collect();
    }
    Ok(loaded)
}

// ------------------------------------------------------------------- output

fn emit(output: &OutputArgs, value: Value, text: String) -> u8 {
    if output.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("serializable")
        );
    } else {
        print!("{text}");
    }
    0
}

fn points_line(points: &BTreeSet<LatticePoint>) -> String {
    if points.is_empty() {
        "-".to_string()
    } else {
        points
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn report_text(report: &ManifoldReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "verdict: {}",
        if report.verdict {
            "manifold"
        } else {
            "not a manifold"
        }
    );
    let _ = writeln!(
        out,
        "dimension: {}",
        report
            .dimension
            .map_or("none".to_string(), |n| n.to_string())
    );
    let _ = writeln!(out, "model adjacency: kappa_{}", report.model_adjacency);
    let _ = writeln!(out, "with boundary: {}", report.with_boundary);
    let _ = writeln!(out, "dimension cap: {}", report.n_cap);
    let _ = writeln!(
        out,
        "interior ({}): {}",
        report.interior.len(),
        points_line(&report.interior)
    );
    let _ = writeln!(
        out,
        "boundary ({}): {}",
        report.boundary.len(),
        points_line(&report.boundary)
    );
    if report.failures.is_empty() {
        let _ = writeln!(out, "failures: none");
    } else {
        let _ = writeln!(out, "failures ({}):", report.failures.len());
        for failure in &report.failures {
            let _ = writeln!(
                out,
                "  {} (neighborhood size {})",
                failure.point, failure.neighborhood_size
            );
        }
    }
    if !report.exempt.is_empty() {
        let _ = writeln!(
            out,
            "rim (excluded from verdict) ({}): {}",
            report.exempt.len(),
            points_line(&report.exempt)
        );
        if !report.exempt_unmatched.is_empty() {
            let _ = writeln!(
                out,
                "rim without a model: {}",
                points_line(&report.exempt_unmatched)
            );
        }
    }
    out
}

// ----------------------------------------------------------------- commands

pub fn analyze(args: AnalyzeArgs) -> CliResult {
    let loaded = load_image(&args.input)?;
    let image = &loaded.image;

    if let Some(list) = &args.points {
        return analyze_points(&args, image, list);
    }
    if args.sweep {
        return analyze_sweep(&args, image, &loaded.rim);
    }

    let exempt = if args.include_rim {
        BTreeSet::new()
    } else {
        loaded.rim.clone()
    };
    let report = manifold_report_exempt(
        image,
        args.model_adjacency,
        args.with_boundary,
        args.n_cap,
        &exempt,
    )
    .map_err(|e| lib_err("analyze", e))?;

    let mut value = io::manifold_report_value(&report);
    let mut text = report_text(&report);
    if args.include_rim && !loaded.rim.is_empty() {
        // the rim was not exempted, but still gets labeled
        let object = value.as_object_mut().expect("report object");
        object.insert("rim".into(), io::points_value(&loaded.rim));
        let _ = writeln!(
            text,
            "rim (included in verdict) ({}): {}",
            loaded.rim.len(),
            points_line(&loaded.rim)
        );
    }
    Ok(emit(&args.output, value, text))
}

fn analyze_points(args: &AnalyzeArgs, image: &DigitalImage, list: &str) -> CliResult {
    let points = parse_points(list)?;
    let cap = args.n_cap.unwrap_or_else(|| {
        image
            .points()
            .iter()
            .map(|p| neighborhood(image, p).map(|n| n.len()).unwrap_or(0))
            .max()
            .unwrap_or(0)
    });
    let mut rows = Vec::new();
    let mut text = String::new();
    for point in &points {
        let mut matches = Vec::new();
        let mut lines = Vec::new();
        let mut size = 0usize;
        for n in 0..=cap {
            if n > 0
                && (args.model_adjacency > n || minimum_class_size(n, args.model_adjacency) > cap)
            {
                continue;
            }
            let classified =
                classify_point(image, point, n, args.model_adjacency, args.with_boundary)
                    .map_err(|e| lib_err("analyze --points", e))?;
            size = classified.neighborhood_size;
            if classified.is_matched() {
                let zero_counts: Vec<usize> = classified
                    .matches
                    .iter()
                    .map(|m| m.class.zero_count())
                    .collect();
                lines.push(format!(
                    "  n={n}: matches model zero-counts {:?}",
                    zero_counts
                ));
                matches.push(json!({ "n": n, "zero_counts": zero_counts }));
            }
        }
        let _ = writeln!(text, "point {point}: neighborhood size {size}");
        if lines.is_empty() {
            let _ = writeln!(text, "  no model matches up to dimension {cap}");
        } else {
            for line in &lines {
                let _ = writeln!(text, "{line}");
            }
        }
        rows.push(json!({
            "point": io::point_value(point),
            "neighborhood_size": size,
            "matches": matches,
        }));
    }
    let value = json!({
        "model_adjacency": args.model_adjacency,
        "with_boundary": args.with_boundary,
        "n_cap": cap,
        "points": rows,
    });
    Ok(emit(&args.output, value, text))
}

fn analyze_sweep(
    args: &AnalyzeArgs,
    image: &DigitalImage,
    rim: &BTreeSet<LatticePoint>,
) -> CliResult {
    let exempt = if args.include_rim {
        BTreeSet::new()
    } else {
        rim.clone()
    };
    let largest = image
        .points()
        .iter()
        .map(|p| neighborhood(image, p).map(|n| n.len()).unwrap_or(0))
        .max()
        .unwrap_or(0);
    let cap = args.n_cap.unwrap_or(largest);
    let mut passing = Vec::new();
    for n in 0..=cap {
        for lambda in 1..=n.max(1) {
            if n > 0 && (lambda > n || minimum_class_size(n, lambda) > largest) {
                continue;
            }
            let report =
                manifold_report_exempt(image, lambda, args.with_boundary, Some(n), &exempt)
                    .map_err(|e| lib_err("sweep", e))?;
            if report.verdict && report.dimension == Some(n) {
                passing.push((n, lambda));
            }
            if n == 0 {
                break; // dimension 0 is lambda-independent
            }
        }
    }
    let mut text = String::new();
    let _ = writeln!(
        text,
        "passing (dimension, model adjacency) pairs: {}",
        passing.len()
    );
    for (n, lambda) in &passing {
        let _ = writeln!(text, "  n={n} kappa_{lambda}");
    }
    let value = json!({
        "with_boundary": args.with_boundary,
        "n_cap": cap,
        "passing": passing
            .iter()
            .map(|(n, lambda)| json!({ "n": n, "model_adjacency": lambda }))
            .collect::<Vec<Value>>(),
    });
    Ok(emit(&args.output, value, text))
}

pub fn euler(args: EulerArgs) -> CliResult {
    let loaded = load_image(&args.input)?;
    let census = simplex_census(&loaded.image);
    let mut text = String::new();
    let _ = writeln!(text, "simplex census: {:?}", census.counts());
    let _ = writeln!(text, "euler characteristic: {}", census.euler());
    Ok(emit(&args.output, io::census_value(&census), text))
}

pub fn components(args: ComponentsArgs) -> CliResult {
    let loaded = load_image(&args.input)?;
    let blocks = image_components(&loaded.image);
    let mut text = String::new();
    let _ = writeln!(text, "components: {}", blocks.len());
    let _ = writeln!(text, "connected: {}", blocks.len() <= 1);
    let _ = writeln!(
        text,
        "totally disconnected: {}",
        is_totally_disconnected(&loaded.image)
    );
    for block in &blocks {
        let _ = writeln!(text, "  {}", points_line(block));
    }
    let value = json!({
        "count": blocks.len(),
        "connected": blocks.len() <= 1,
        "totally_disconnected": is_totally_disconnected(&loaded.image),
        "components": blocks.iter().map(io::points_value).collect::<Vec<Value>>(),
    });
    Ok(emit(&args.output, value, text))
}

pub fn orient(args: OrientArgs) -> CliResult {
    let loaded = load_image(&args.input)?;
    match count_zero_manifold_orientations(&loaded.image) {
        Ok(count) => {
            let mut text = String::new();
            let _ = writeln!(text, "zero-manifold orientations: {count}");
            let count_value = u64::try_from(count)
                .map(Value::from)
                .unwrap_or_else(|_| Value::from(count.to_string()));
            let mut value = json!({ "kind": "orientations", "count": count_value });
            if args.list {
                let listed = enumerate_zero_manifold_orientations(&loaded.image)
                    .map_err(|e| lib_err("orient --list", e))?;
                for orientation in &listed {
                    let signs: Vec<String> = orientation
                        .iter()
                        .map(|(p, s)| format!("{p}:{s:+}"))
                        .collect();
                    let _ = writeln!(text, "  {}", signs.join(" "));
                }
                let rows: Vec<Value> = listed
                    .iter()
                    .map(|orientation| {
                        Value::Array(
                            orientation
                                .iter()
                                .map(|(p, s)| json!([io::point_value(p), s]))
                                .collect(),
                        )
                    })
                    .collect();
                value
                    .as_object_mut()
                    .unwrap()
                    .insert("orientations".into(), Value::Array(rows));
            }
            Ok(emit(&args.output, value, text))
        }
        Err(Error::NotZeroManifold) => {
            let orders = connected_ray_orders(&loaded.image, args.bound)
                .map_err(|e| lib_err("orient", e))?;
            let mut text = String::new();
            let _ = writeln!(text, "connected-ray linear orders: {}", orders.len());
            if args.list {
                for order in &orders {
                    let line: Vec<String> =
                        order.sequence().iter().map(ToString::to_string).collect();
                    let _ = writeln!(text, "  {}", line.join(" < "));
                }
            }
            let mut value = json!({ "kind": "ray_orders", "count": orders.len() });
            if args.list {
                let listed: Vec<Value> = orders
                    .iter()
                    .map(|order| {
                        Value::Array(order.sequence().iter().map(io::point_value).collect())
                    })
                    .collect();
                value
                    .as_object_mut()
                    .unwrap()
                    .insert("orders".into(), Value::Array(listed));
            }
            Ok(emit(&args.output, value, text))
        }
        Err(e) => Err(lib_err("orient", e)),
    }
}

pub fn check_map(args: CheckMapArgs) -> CliResult {
    let map = io::parse_map_json(&read_file(&args.map)?)
        .map_err(|e| format!("{}: {e}", args.map.display()))?;
    let continuous = is_continuous(&map);
    let value = json!({ "continuous": continuous });
    let text = format!(
        "map is {}digitally continuous\n",
        if continuous { "" } else { "NOT " }
    );
    emit(&args.output, value, text);
    Ok(u8::from(!continuous))
}

pub fn check_iso(args: CheckIsoArgs) -> CliResult {
    if let Some(path) = &args.map {
        let map = io::parse_map_json(&read_file(path)?)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        let ok = is_isomorphism(&map);
        let value = json!({ "isomorphism": ok });
        let text = format!(
            "map is {}a digital isomorphism\n",
            if ok { "" } else { "NOT " }
        );
        emit(&args.output, value, text);
        return Ok(u8::from(!ok));
    }
    let (Some(first), Some(second)) = (&args.file, &args.with) else {
        return fail("check-iso needs either --map, or --file and --with");
    };
    let a = io::parse_image_json(&read_file(first)?)
        .map_err(|e| format!("{}: {e}", first.display()))?;
    let b = io::parse_image_json(&read_file(second)?)
        .map_err(|e| format!("{}: {e}", second.display()))?;
    match find_isomorphism(&a, &b) {
        Some(witness) => {
            let pairs: Vec<Value> = witness
                .table()
                .iter()
                .map(|(p, q)| json!([io::point_value(p), io::point_value(q)]))
                .collect();
            let value = json!({ "isomorphic": true, "witness": pairs });
            let mut text = String::from("images are digitally isomorphic\n");
            for (p, q) in witness.table() {
                let _ = writeln!(text, "  {p} -> {q}");
            }
            emit(&args.output, value, text);
            Ok(0)
        }
        None => {
            let value = json!({ "isomorphic": false });
            emit(
                &args.output,
                value,
                "images are NOT digitally isomorphic\n".into(),
            );
            Ok(1)
        }
    }
}

pub fn check_pou(args: CheckPouArgs) -> CliResult {
    let candidate = io::parse_partition_json(&read_file(&args.file)?)
        .map_err(|e| format!("{}: {e}", args.file.display()))?;
    let check_domain: BTreeSet<LatticePoint> = match &args.points {
        Some(list) => parse_points(list)?.into_iter().collect(),
        None => candidate.domain().points().clone(),
    };
    let report = verify_partition_of_unity(&candidate, &check_domain)
        .map_err(|e| lib_err("check-pou", e))?;
    let passes = report.passes();
    let value = json!({
        "passes": passes,
        "nonnegative": report.nonnegative(),
        "supports_meet_neighborhoods": report.supports_meet_neighborhoods(),
        "sums_to_target": report.sums_to_target(),
        "subordinate": report.subordinate(),
        "neighborhood_failures": report
            .neighborhood_failures
            .iter()
            .map(|(i, p)| json!({ "function": i, "point": io::point_value(p) }))
            .collect::<Vec<Value>>(),
    });
    let mut text = String::new();
    let _ = writeln!(
        text,
        "condition 1, nonnegativity: {}",
        verdict_word(report.nonnegative())
    );
    let _ = writeln!(
        text,
        "condition 2, supports meet neighborhoods: {}",
        verdict_word(report.supports_meet_neighborhoods())
    );
    let _ = writeln!(
        text,
        "condition 3, sums to target: {}",
        verdict_word(report.sums_to_target())
    );
    match report.subordinate() {
        Some(ok) => {
            let _ = writeln!(
                text,
                "condition 4, subordinate to cover: {}",
                verdict_word(ok)
            );
        }
        None => {
            let _ = writeln!(text, "condition 4, subordinate to cover: no cover given");
        }
    }
    let _ = writeln!(text, "overall: {}", verdict_word(passes));
    emit(&args.output, value, text);
    Ok(u8::from(!passes))
}

fn verdict_word(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn check_homotopy(args: CheckHomotopyArgs) -> CliResult {
    let from = io::parse_map_json(&read_file(&args.from)?)
        .map_err(|e| format!("{}: {e}", args.from.display()))?;
    let to = io::parse_map_json(&read_file(&args.to)?)
        .map_err(|e| format!("{}: {e}", args.to.display()))?;
    let homotopy_file = io::parse_homotopy_json(&read_file(&args.homotopy)?)
        .map_err(|e| format!("{}: {e}", args.homotopy.display()))?;
    let table = homotopy_file
        .into_table(from.source().clone(), from.target().clone())
        .map_err(|e| format!("{}: {e}", args.homotopy.display()))?;
    let report = verify_homotopy(&table, &from, &to).map_err(|e| lib_err("check-homotopy", e))?;
    let valid = report.is_valid();
    let value = json!({
        "valid": valid,
        "endpoint_mismatches": report.endpoint_mismatches.len(),
        "track_failures": report.track_failures.len(),
        "slice_failures": report.slice_failures.len(),
    });
    let mut text = String::new();
    let _ = writeln!(
        text,
        "endpoint mismatches: {}",
        report.endpoint_mismatches.len()
    );
    for (p, t) in report.endpoint_mismatches.iter().take(10) {
        let _ = writeln!(text, "  at ({p}, step {t})");
    }
    let _ = writeln!(
        text,
        "time-track continuity failures: {}",
        report.track_failures.len()
    );
    let _ = writeln!(
        text,
        "slice continuity failures: {}",
        report.slice_failures.len()
    );
    let _ = writeln!(
        text,
        "overall: {}",
        if valid {
            "valid homotopy"
        } else {
            "NOT a homotopy"
        }
    );
    emit(&args.output, value, text);
    Ok(u8::from(!valid))
}

pub fn gen(args: GenArgs) -> CliResult {
    let input = InputArgs {
        file: None,
        gen: Some(args.spec),
        adjacency: args.adjacency,
        kl: args.kl,
        minus: args.minus,
    };
    let loaded = load_image(&input)?;
    println!("{}", io::image_to_json(&loaded.image));
    Ok(0)
}

pub fn corpus_run(args: CorpusArgs) -> CliResult {
    let cases = crate::corpus::cases();
    let filter = args.filter.as_deref().unwrap_or("");
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut failures = 0usize;
    let mut discrepancies = 0usize;
    let mut passes = 0usize;
    for case in cases {
        if !case.name.contains(filter) {
            continue;
        }
        let outcome = (case.run)();
        let (status, detail) = match &outcome {
            crate::corpus::Outcome::Pass(detail) => {
                passes += 1;
                ("PASS", detail.clone())
            }
            crate::corpus::Outcome::Fail(detail) => {
                failures += 1;
                ("FAIL", detail.clone())
            }
            crate::corpus::Outcome::Discrepancy {
                claimed,
                computed,
                reproduced,
            } => {
                if *reproduced {
                    discrepancies += 1;
                    (
                        "DISCREPANCY-EXPECTED",
                        format!("claimed {claimed}; computed {computed}"),
                    )
                } else {
                    failures += 1;
                    (
                        "FAIL",
                        format!("claimed {claimed}; computed {computed} (regression)"),
                    )
                }
            }
        };
        let _ = writeln!(text, "{:<34} {:<22} {}", case.name, status, detail);
        let _ = writeln!(text, "{:<34}   source: {}", "", case.provenance.describe());
        rows.push(json!({
            "name": case.name,
            "status": status,
            "detail": detail,
            "provenance": case.provenance.describe(),
        }));
    }
    let _ = writeln!(
        text,
        "{passes} pass, {discrepancies} expected discrepancies, {failures} fail"
    );
    let value = json!({
        "cases": rows,
        "pass": passes,
        "expected_discrepancies": discrepancies,
        "fail": failures,
    });
    emit(&args.output, value, text);
    Ok(u8::from(failures > 0))
}
