use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "strcx", version, about = "String complexes, ε-filtrations and barcodes of finite gap spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Input file (`-` for standard input). JSON is detected by content, CSV
    /// by the `.csv` extension, face lists by their shape.
    #[arg(long, short)]
    pub input: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Output file, written atomically. Without it machine output goes to
    /// standard output and the summary to standard error.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ScalarArgs {
    /// Scalar mode; defaults to the input's declared mode, then to exact.
    #[arg(long, value_enum, global = true)]
    pub mode: Option<ModeArg>,
    /// Relative tolerance for float comparisons.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoefficientsArg {
    #[default]
    Mod2,
    Int,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ComplexFormat {
    #[default]
    Json,
    Faces,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BarcodeFormat {
    #[default]
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the triangle inequality over all ordered triples.
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        scalar: ScalarArgs,
    },
    /// Write a generated gap space.
    Generate {
        #[command(subcommand)]
        generator: Generator,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        scalar: ScalarArgs,
    },
    /// Enumerate the ε-strings of a gap space.
    Strings {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        scalar: ScalarArgs,
        #[arg(long, short, default_value = "0")]
        epsilon: String,
        /// Largest string size to report.
        #[arg(long)]
        max_size: Option<usize>,
        /// Cross-check against the brute-force enumerator (spaces of at most
        /// this many points).
        #[arg(long)]
        oracle_limit: Option<usize>,
    },
    /// Build the string complex of a gap space or string set.
    Complex {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        scalar: ScalarArgs,
        /// Filtration level; defaults to 0 for a gap space and to every
        /// simplex for a string set or complex.
        #[arg(long, short)]
        epsilon: Option<String>,
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: ComplexFormat,
    },
    /// Homology of the string complex of a gap space, string set or complex.
    Homology {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        scalar: ScalarArgs,
        /// Filtration level; defaults to 0 for a gap space and to every
        /// simplex for a string set or complex.
        #[arg(long, short)]
        epsilon: Option<String>,
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        coefficients: CoefficientsArg,
    },
    /// Persistence barcode of the ε-filtration over ℤ/2.
    Barcode {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        scalar: ScalarArgs,
        /// Largest simplex dimension; defaults to all, or 3 above 12 points.
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: BarcodeFormat,
    },
    /// Realize an admissible 2-dimensional triangulation as a metric space
    /// and verify its string complex.
    Realize {
        /// Triangulation file (JSON or OFF).
        #[arg(long, short, conflicts_with = "surface", required_unless_present = "surface")]
        input: Option<PathBuf>,
        /// A built-in surface instead of a file.
        #[arg(long)]
        surface: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        scalar: ScalarArgs,
        #[arg(long, default_value = "1")]
        k: String,
        #[arg(long, default_value = "3/5")]
        u: String,
        #[arg(long, default_value = "7/10")]
        v: String,
        /// Take the edges of a JSON triangulation from its triangles.
        #[arg(long)]
        infer_edges: bool,
        /// Also write the verification report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Subcomplex spanned by the strings with the given endpoints.
    Endpoint {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        scalar: ScalarArgs,
        /// Point index or label.
        #[arg(long, short)]
        x: String,
        /// Point index or label.
        #[arg(long, short)]
        y: String,
        #[arg(long, value_enum, default_value_t)]
        coefficients: CoefficientsArg,
    },
    /// Rebuild the reference spaces and surface realizations and report on
    /// each.
    WorkedExamples {
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum Generator {
    /// Every distinct pair at gap 1.
    Uniform {
        #[arg(long, short)]
        n: usize,
    },
    /// Points of the real line.
    Collinear {
        /// Comma-separated values, e.g. `0,1/2,3`.
        #[arg(long)]
        values: String,
    },
    /// Two parallel rows of equally spaced points in the plane (float).
    ParallelLines {
        #[arg(long, short)]
        m: usize,
        #[arg(long, short)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        separation: f64,
        #[arg(long, default_value_t = 1.0)]
        spacing: f64,
    },
    /// Points on the boundary of a strictly convex polygon (float).
    Polygon {
        /// Points per edge including both corners, comma-separated.
        #[arg(long)]
        counts: String,
        /// Corner as `x,y`; repeat once per corner, counterclockwise or clockwise.
        #[arg(long = "vertex", allow_hyphen_values = true)]
        vertices: Vec<String>,
    },
    /// Regular polygon with the same number of interior points on each edge (float).
    RegularPolygon {
        #[arg(long)]
        sides: usize,
        #[arg(long, default_value_t = 1)]
        interior: usize,
    },
    /// Shortest-arc distance between points of a circle.
    CircleArc {
        #[arg(long)]
        positions: String,
        #[arg(long)]
        circumference: String,
    },
    /// Shortest-path gaps of a strongly connected digraph.
    Digraph {
        #[arg(long)]
        nodes: usize,
        /// Arc as `from,to,length`; repeat for each arc.
        #[arg(long = "arc")]
        arcs: Vec<String>,
    },
    /// Shortest-path metric of a complete graph with random integer weights.
    RandomMetric {
        #[arg(long, short)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_weight: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random points of an integer grid under the ℓ¹ distance.
    RandomGrid {
        #[arg(long, short)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        side: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Shortest-path gaps of a random strongly connected digraph.
    RandomDigraph {
        #[arg(long, short)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        max_weight: u32,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The four-point circle whose string complex is a 2-sphere.
    Sphere4,
}
