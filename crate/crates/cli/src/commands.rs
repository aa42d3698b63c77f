use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context};
use serde_json::{json, Value};
use string_complex::complex::{connected_components, euler_characteristic};
use string_complex::construct::{sphere_four_points, surface_library};
use string_complex::gapspace::{
    circle_arc_metric, collinear_points, digraph_gaps, polygon_points, regular_polygon_points, two_parallel_lines,
    uniform_metric,
};
use string_complex::io as formats;
use string_complex::random::{random_digraph, random_grid_metric, random_metric, seeded_rng};
use string_complex::strings::oracle_enumerate;
use string_complex::*;

use crate::args::*;
use crate::input::*;

macro_rules! dispatch {
    ($mode:expr, $f:ident ( $($arg:expr),* $(,)? )) => {
        match $mode {
            Mode::Exact => $f::<Exact>($($arg),*),
            Mode::Float => $f::<f64>($($arg),*),
        }
    };
}

fn write_atomic(path: &Path, content: &str) -> anyhow::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating a file in {}", dir.display()))?;
    tmp.write_all(content.as_bytes())?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Machine output to the file or standard output; the summary goes to
/// whichever stream the machine output does not use.
fn emit(output: &OutputArgs, machine: &str, summary: &str) -> anyhow::Result<()> {
    match &output.output {
        Some(path) => {
            write_atomic(path, machine)?;
            print!("{summary}");
        }
        None => {
            print!("{machine}");
            eprint!("{summary}");
        }
    }
    Ok(())
}

/// A human report always goes to standard output; JSON only to the file.
pub fn report(output: &OutputArgs, table: &str, doc: &Value) -> anyhow::Result<()> {
    if let Some(path) = &output.output {
        write_atomic(path, &pretty(doc))?;
    }
    print!("{table}");
    Ok(())
}

fn resolve_mode(scalar: &ScalarArgs, src: Option<&Source>) -> anyhow::Result<Mode> {
    let declared = match src {
        Some(s) => s.declared_mode()?,
        None => None,
    };
    Ok(match (scalar.mode, declared) {
        (Some(ModeArg::Exact), _) => Mode::Exact,
        (Some(ModeArg::Float), _) => Mode::Float,
        (None, Some(m)) => m,
        (None, None) => Mode::Exact,
    })
}

fn coefficients(c: CoefficientsArg) -> Coefficients {
    match c {
        CoefficientsArg::Mod2 => Coefficients::Mod2,
        CoefficientsArg::Int => Coefficients::Integer,
    }
}

pub fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Validate { input, output, scalar } => {
            let src = Source::read(&input.input)?;
            dispatch!(resolve_mode(&scalar, Some(&src))?, validate_cmd(&src, &scalar, &output))
        }
        Command::Generate { generator, output, scalar } => generate_cmd(&generator, &output, &scalar),
        Command::Strings { input, output, scalar, epsilon, max_size, oracle_limit } => {
            let src = Source::read(&input.input)?;
            let mode = resolve_mode(&scalar, Some(&src))?;
            dispatch!(mode, strings_cmd(&src, &scalar, &output, &epsilon, max_size, oracle_limit))
        }
        Command::Complex { input, output, scalar, epsilon, max_dim, format } => {
            let src = Source::read(&input.input)?;
            let mode = resolve_mode(&scalar, Some(&src))?;
            dispatch!(mode, complex_cmd(&src, &scalar, &output, epsilon.as_deref(), max_dim, format))
        }
        Command::Homology { input, output, scalar, epsilon, max_dim, coefficients: c } => {
            let src = Source::read(&input.input)?;
            let mode = resolve_mode(&scalar, Some(&src))?;
            dispatch!(mode, homology_cmd(&src, &scalar, &output, epsilon.as_deref(), max_dim, coefficients(c)))
        }
        Command::Barcode { input, output, scalar, max_dim, format } => {
            let src = Source::read(&input.input)?;
            let mode = resolve_mode(&scalar, Some(&src))?;
            dispatch!(mode, barcode_cmd(&src, &scalar, &output, max_dim, format))
        }
        Command::Realize { input, surface, output, scalar, k, u, v, infer_edges, report } => {
            let tri = match (&input, &surface) {
                (Some(path), _) => read_triangulation(path, infer_edges)?,
                (None, Some(name)) => surface_library(name).map_err(|e| input_error(e.to_string()))?,
                (None, None) => return Err(input_error("give --input or --surface")),
            };
            let mode = resolve_mode(&scalar, None)?;
            dispatch!(mode, realize_cmd(&tri, &output, &scalar, [&k, &u, &v], report.as_deref()))
        }
        Command::Endpoint { input, output, scalar, x, y, coefficients: c } => {
            let src = Source::read(&input.input)?;
            let mode = resolve_mode(&scalar, Some(&src))?;
            dispatch!(mode, endpoint_cmd(&src, &scalar, &output, &x, &y, coefficients(c)))
        }
        Command::WorkedExamples { output } => crate::worked::run(&output),
    }
}

fn validate_cmd<S: Scalar>(src: &Source, scalar: &ScalarArgs, output: &OutputArgs) -> anyhow::Result<ExitCode> {
    let (rows, labels) = load_matrix::<S>(src)?;
    let tol = scalar.tolerance.or(src.declared_tolerance()).unwrap_or(DEFAULT_TOLERANCE);
    let result = validate(&rows, tol).map_err(|e| input_error(format!("{}: {e}", src.name)))?;
    let n = rows.len();
    let symmetric = (0..n).all(|i| (0..n).all(|j| rows[i][j].approx_eq(&rows[j][i], tol)));
    // in a symmetric matrix (x,y,z) fails exactly when (z,y,x) does
    let shown: Vec<_> = result.violations.iter().filter(|v| !symmetric || v.x <= v.z).collect();
    let name = |i: usize| labels.as_ref().and_then(|l| l.get(i).cloned()).unwrap_or_else(|| i.to_string());
    let mut table = String::new();
    if result.ok {
        writeln!(table, "ok: {n} points satisfy the triangle inequality")?;
    } else {
        writeln!(table, "{} violation(s) of the triangle inequality:", shown.len())?;
        for v in &shown {
            let (x, y, z) = (name(v.x), name(v.y), name(v.z));
            writeln!(table, "  d({x},{y}) + d({y},{z}) = {} < d({x},{z}) = {}", v.lhs, v.rhs)?;
        }
        if symmetric && shown.len() < result.violations.len() {
            writeln!(table, "  (symmetric matrix: mirror-image triples not listed)")?;
        }
    }
    let doc = json!({
        "ok": result.ok,
        "points": n,
        "symmetric": symmetric,
        "violations": shown.iter().map(|v| json!({
            "x": v.x, "y": v.y, "z": v.z, "lhs": v.lhs.to_json(), "rhs": v.rhs.to_json(),
        })).collect::<Vec<_>>(),
        "ordered_violations": result.violations.len(),
    });
    report(output, &table, &doc)?;
    Ok(if result.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn float_generator(g: &Generator) -> bool {
    matches!(g, Generator::ParallelLines { .. } | Generator::Polygon { .. } | Generator::RegularPolygon { .. })
}

fn parse_vertex(text: &str) -> anyhow::Result<(f64, f64)> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [x, y] => Ok((
            x.parse().map_err(|_| input_error(format!("--vertex {text}: bad x")))?,
            y.parse().map_err(|_| input_error(format!("--vertex {text}: bad y")))?,
        )),
        _ => Err(input_error(format!("--vertex {text}: expected x,y"))),
    }
}

fn generate_float(g: &Generator) -> Result<FloatSpace> {
    match g {
        Generator::ParallelLines { m, n, separation, spacing } => two_parallel_lines(*m, *n, *separation, *spacing),
        Generator::RegularPolygon { sides, interior } => regular_polygon_points(*sides, *interior),
        _ => unreachable!("only float generators reach here"),
    }
}

fn generate_exact<S: Scalar>(g: &Generator) -> anyhow::Result<GapSpace<S>> {
    Ok(match g {
        Generator::Uniform { n } => uniform_metric(*n)?,
        Generator::Collinear { values } => collinear_points(&parse_list::<S>("values", values)?)?,
        Generator::CircleArc { positions, circumference } => circle_arc_metric(
            &parse_list::<S>("positions", positions)?,
            parse_scalar("circumference", circumference)?,
        )?,
        Generator::Digraph { nodes, arcs } => {
            let arcs = arcs
                .iter()
                .map(|a| {
                    let parts: Vec<&str> = a.split(',').map(str::trim).collect();
                    let [from, to, len] = parts.as_slice() else {
                        return Err(input_error(format!("--arc {a}: expected from,to,length")));
                    };
                    let idx = |t: &str| t.parse::<usize>().map_err(|_| input_error(format!("--arc {a}: bad node `{t}`")));
                    Ok((idx(from)?, idx(to)?, parse_scalar::<S>("arc", len)?))
                })
                .collect::<anyhow::Result<Vec<_>>>()?;
            digraph_gaps(*nodes, &arcs)?
        }
        Generator::RandomMetric { n, max_weight, seed } => random_metric(*n, *max_weight, &mut seeded_rng(*seed))?,
        Generator::RandomGrid { n, side, seed } => random_grid_metric(*n, *side, &mut seeded_rng(*seed))?,
        Generator::RandomDigraph { n, max_weight, density, seed } => {
            random_digraph(*n, *max_weight, *density, &mut seeded_rng(*seed))?
        }
        Generator::Sphere4 => sphere_four_points(),
        _ => unreachable!("float generators are handled separately"),
    })
}

fn generate_cmd(g: &Generator, output: &OutputArgs, scalar: &ScalarArgs) -> anyhow::Result<ExitCode> {
    let tol = scalar.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    let (doc, summary) = if float_generator(g) {
        if scalar.mode == Some(ModeArg::Exact) {
            return Err(input_error("Euclidean generators need --mode float (distances are irrational)"));
        }
        let space = match g {
            Generator::Polygon { counts, vertices } => {
                let counts = counts
                    .split(',')
                    .map(|c| c.trim().parse::<usize>().map_err(|_| input_error(format!("--counts {counts}: bad count"))))
                    .collect::<anyhow::Result<Vec<_>>>()?;
                let vertices = vertices.iter().map(|v| parse_vertex(v)).collect::<anyhow::Result<Vec<_>>>()?;
                polygon_points(&counts, &vertices)?
            }
            _ => generate_float(g)?,
        };
        let space = GapSpace::with_tolerance(space.rows(), tol)?.with_labels((0..space.len()).map(|i| space.label(i)).collect())?;
        (formats::space_to_json(&space), space_summary(&space))
    } else {
        match resolve_mode(scalar, None)? {
            Mode::Exact => {
                let s = generate_exact::<Exact>(g)?;
                (formats::space_to_json(&s), space_summary(&s))
            }
            Mode::Float => {
                let s = generate_exact::<f64>(g)?;
                let s = GapSpace::with_tolerance(s.rows(), tol)?.with_labels((0..s.len()).map(|i| s.label(i)).collect())?;
                (formats::space_to_json(&s), space_summary(&s))
            }
        }
    };
    emit(output, &pretty(&doc), &summary)?;
    Ok(ExitCode::SUCCESS)
}

fn space_summary<S: Scalar>(space: &GapSpace<S>) -> String {
    let kind = if space.is_metric() {
        "metric space"
    } else if space.is_symmetric() {
        "symmetric gap space"
    } else {
        "gap space"
    };
    format!("{} points, {kind}, {} mode\n", space.len(), S::MODE)
}

fn size_table<S: Scalar>(strings: &StringSet<S>) -> String {
    let mut out = format!("{} ε-strings\n", strings.len());
    for k in 1..=strings.max_size() {
        let c = strings.count_of_size(k);
        if c > 0 {
            let _ = writeln!(out, "  size {k}: {c}");
        }
    }
    out
}

fn strings_cmd<S: Scalar>(
    src: &Source,
    scalar: &ScalarArgs,
    output: &OutputArgs,
    epsilon: &str,
    max_size: Option<usize>,
    oracle_limit: Option<usize>,
) -> anyhow::Result<ExitCode> {
    let space = load_space::<S>(src, scalar.tolerance)?;
    let eps: S = parse_scalar("epsilon", epsilon)?;
    let strings = enumerate_eps_strings(&space, &eps, max_size)?;
    let mut summary = size_table(&strings);
    if let Some(limit) = oracle_limit {
        let mut oracle = oracle_enumerate(&space, &eps, limit)?;
        if let Some(cap) = max_size {
            oracle.truncate_size(cap);
        }
        if oracle.sets().ne(strings.sets()) {
            bail!("the pruned enumerator and the brute-force oracle disagree");
        }
        summary.push_str("brute-force oracle agrees\n");
    }
    emit(output, &pretty(&formats::strings_to_json(&strings)), &summary)?;
    Ok(ExitCode::SUCCESS)
}

/// The complex an input stands for: the ε-string complex of a space, the
/// complex of a string list (restricted to births at most ε when ε is
/// given) or a complex as read.
fn complex_of<S: Scalar>(
    src: &Source,
    scalar: &ScalarArgs,
    epsilon: Option<&str>,
    max_dim: Option<usize>,
) -> anyhow::Result<(StringComplex<S>, usize)> {
    let eps: Option<S> = epsilon.map(|e| parse_scalar("epsilon", e)).transpose()?;
    let tol = scalar.tolerance.or(src.declared_tolerance()).unwrap_or(DEFAULT_TOLERANCE);
    let (complex, points) = match load::<S>(src, scalar.tolerance)? {
        Loaded::Space(space) => {
            let eps = eps.unwrap_or_else(S::zero);
            let strings = enumerate_eps_strings(&space, &eps, max_dim.map(|d| d + 1))?;
            (build_complex(&strings)?.with_labels(space.labels()), space.len())
        }
        Loaded::Strings(strings) => {
            let points = strings.points();
            let c = build_complex(&strings)?;
            (eps.map_or(c.clone(), |e| c.sublevel(&e, tol)), points)
        }
        Loaded::Complex(c) => {
            let points = c.vertices().last().map_or(0, |v| v + 1);
            (eps.map_or(c.clone(), |e| c.sublevel(&e, tol)), points)
        }
    };
    let complex = match max_dim {
        Some(d) => StringComplex::from_simplices(
            complex.iter().filter(|(s, _)| s.len() <= d + 1).map(|(s, b)| (s.clone(), b.clone())),
        )?
        .with_labels(complex.labels()),
        None => complex,
    };
    Ok((complex, points))
}

fn complex_cmd<S: Scalar>(
    src: &Source,
    scalar: &ScalarArgs,
    output: &OutputArgs,
    epsilon: Option<&str>,
    max_dim: Option<usize>,
    format: ComplexFormat,
) -> anyhow::Result<ExitCode> {
    let (complex, points) = complex_of::<S>(src, scalar, epsilon, max_dim)?;
    let comps = connected_components(&complex, points);
    let summary = format!(
        "f-vector {:?}, Euler characteristic {}, {} component(s)\n",
        complex.f_vector(),
        euler_characteristic(&complex),
        comps.count
    );
    let machine = match format {
        ComplexFormat::Json => pretty(&formats::complex_to_json(&complex)),
        ComplexFormat::Faces => formats::complex_to_faces(&complex),
    };
    emit(output, &machine, &summary)?;
    Ok(ExitCode::SUCCESS)
}

pub fn homology_table(h: &HomologyResult) -> String {
    let mut out = String::new();
    match &h.integer {
        None => {
            let _ = writeln!(out, "degree  betti(Z/2)");
            for (d, b) in h.betti_mod2.iter().enumerate() {
                let _ = writeln!(out, "{d:>6}  {b:>10}");
            }
        }
        Some(z) => {
            let _ = writeln!(out, "degree  betti(Z/2)  rank(Z)  torsion");
            for (d, b) in h.betti_mod2.iter().enumerate() {
                let torsion = if z.torsion[d].is_empty() {
                    "-".to_string()
                } else {
                    z.torsion[d].iter().map(|t| format!("Z/{t}")).collect::<Vec<_>>().join(" + ")
                };
                let _ = writeln!(out, "{d:>6}  {b:>10}  {:>7}  {torsion}", z.ranks[d]);
            }
        }
    }
    if h.betti_mod2.is_empty() {
        out.push_str("(empty complex)\n");
    }
    let _ = writeln!(out, "Euler characteristic {}", h.euler_characteristic());
    out
}

fn homology_cmd<S: Scalar>(
    src: &Source,
    scalar: &ScalarArgs,
    output: &OutputArgs,
    epsilon: Option<&str>,
    max_dim: Option<usize>,
    coeffs: Coefficients,
) -> anyhow::Result<ExitCode> {
    let (complex, _) = complex_of::<S>(src, scalar, epsilon, max_dim)?;
    let h = homology(&complex, coeffs)?;
    report(output, &homology_table(&h), &formats::homology_to_json(&h))?;
    Ok(ExitCode::SUCCESS)
}

const BARCODE_POINTS_UNCAPPED: usize = 12;
const BARCODE_DEFAULT_CAP: usize = 3;

fn barcode_cmd<S: Scalar>(
    src: &Source,
    scalar: &ScalarArgs,
    output: &OutputArgs,
    max_dim: Option<usize>,
    format: BarcodeFormat,
) -> anyhow::Result<ExitCode> {
    let space = load_space::<S>(src, scalar.tolerance)?;
    let cap = max_dim.or_else(|| {
        (space.len() > BARCODE_POINTS_UNCAPPED).then(|| {
            eprintln!(
                "note: {} points; capping the filtration at dimension {BARCODE_DEFAULT_CAP} (use --max-dim to change)",
                space.len()
            );
            BARCODE_DEFAULT_CAP
        })
    });
    let filtration = build_filtration(&space, cap)?;
    let bars = barcode(&filtration)?;
    let mut summary = format!("{} simplices, {} intervals", filtration.len(), bars.intervals.len());
    if bars.zero_length > 0 {
        let _ = write!(summary, " ({} zero-length pairs not listed)", bars.zero_length);
    }
    summary.push('\n');
    for d in 0..=bars.max_degree().unwrap_or(0) {
        let n = bars.of_degree(d).count();
        if n > 0 {
            let _ = writeln!(summary, "  degree {d}: {n}");
        }
    }
    let machine = match format {
        BarcodeFormat::Json => pretty(&formats::barcode_to_json(&bars)),
        BarcodeFormat::Text => formats::barcode_to_text(&bars),
    };
    emit(output, &machine, &summary)?;
    Ok(ExitCode::SUCCESS)
}

fn read_triangulation(path: &Path, infer_edges: bool) -> anyhow::Result<Triangulation2D> {
    let text = read_text(path)?;
    let name = path.display();
    let is_off = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("off")) || text.trim_start().starts_with("OFF");
    let parsed = if is_off {
        formats::triangulation_from_off(&text)
    } else {
        let doc: Value = serde_json::from_str(&text)
            .map_err(|e| input_error(format!("{name}: invalid JSON at line {}, column {}: {e}", e.line(), e.column())))?;
        formats::triangulation_from_json(&doc, infer_edges)
    };
    parsed.map_err(|e| input_error(format!("{name}: {e}")))
}

fn realize_cmd<S: Scalar>(
    tri: &Triangulation2D,
    output: &OutputArgs,
    scalar: &ScalarArgs,
    [k, u, v]: [&str; 3],
    report_path: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let params = RealizationParams::new(parse_scalar::<S>("k", k)?, parse_scalar("u", u)?, parse_scalar("v", v)?)?;
    let space = realize(tri, &params)?;
    let space = GapSpace::with_tolerance(space.rows(), scalar.tolerance.unwrap_or(DEFAULT_TOLERANCE))?
        .with_labels(tri.simplex_labels())?;
    let check = check_realization(&space, tri)?;
    if let Some(path) = report_path {
        write_atomic(path, &pretty(&formats::verification_to_json(&check)))?;
    }
    let summary = if check.passed() {
        format!("verified: {} flags, isomorphic to barycentric subdivision\n", check.flags)
    } else {
        format!("verification FAILED: {check:?}\n")
    };
    emit(output, &pretty(&formats::space_to_json(&space)), &summary)?;
    if !check.passed() {
        bail!("the realized space failed verification");
    }
    Ok(ExitCode::SUCCESS)
}

fn endpoint_cmd<S: Scalar>(
    src: &Source,
    scalar: &ScalarArgs,
    output: &OutputArgs,
    x: &str,
    y: &str,
    coeffs: Coefficients,
) -> anyhow::Result<ExitCode> {
    let space = load_space::<S>(src, scalar.tolerance)?;
    let (x, y) = (point(&space, x)?, point(&space, y)?);
    let strings = enumerate_eps_strings(&space, &S::zero(), None)?;
    let sub = endpoint_subcomplex(&space, &strings, x, y)?;
    let complex = sub.complex.clone().with_labels(space.labels());
    let h = homology(&complex, coeffs)?;
    let mut table = format!(
        "endpoints {}, {}: {} string(s), f-vector {:?}\n",
        space.label(x),
        space.label(y),
        sub.generators.len(),
        complex.f_vector()
    );
    table.push_str(&homology_table(&h));
    let doc = json!({
        "x": x,
        "y": y,
        "generators": sub.generators,
        "complex": formats::complex_to_json(&complex),
        "homology": formats::homology_to_json(&h),
    });
    report(output, &table, &doc)?;
    Ok(ExitCode::SUCCESS)
}
