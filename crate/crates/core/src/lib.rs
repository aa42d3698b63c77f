//! String complexes of finite gap spaces.
//!
//! A subset of three or more points is an ε-string when some ordering of it
//! loses at most ε against the direct gap from its first to its last point.
//! The ε-strings of a space, closed under faces, form a simplicial complex;
//! letting ε grow gives a filtration whose persistence barcode is computed
//! here, along with a construction realizing any admissible 2-dimensional
//! triangulation (after one barycentric subdivision) as the string complex of
//! a finite metric space.
//!
//! Everything is generic over [`Scalar`]: exact rationals (the default for
//! reproducible results) or `f32`/`f64` with a relative tolerance.
//!
//! ```
//! use string_complex::{build_complex, enumerate_eps_strings, homology, Coefficients, Exact, ExactSpace};
//! use string_complex::gapspace::circle_arc_metric;
//!
//! let q = |v: i64| Exact::from_integer(v.into());
//! let space: ExactSpace = circle_arc_metric(&[q(0), q(2), q(6), q(8)], q(12)).unwrap();
//! let strings = enumerate_eps_strings(&space, &q(0), None).unwrap();
//! let complex = build_complex(&strings).unwrap();
//! assert_eq!(homology(&complex, Coefficients::Mod2).unwrap().betti_mod2, vec![1, 0, 1]);
//! ```

pub mod complex;
pub mod construct;
pub mod error;
pub mod gapspace;
pub mod io;
pub mod persistence;
pub mod random;
pub mod scalar;
pub mod strings;

pub use complex::{
    build_complex, connected_components, endpoint_subcomplex, homology, Coefficients, HomologyResult,
    StringComplex,
};
pub use construct::{
    barycentric_subdivision, check_realization, realize, surface_library, verify_realization,
    RealizationParams, Triangulation2D,
};
pub use error::{Error, Result};
pub use gapspace::{validate, GapSpace, DEFAULT_TOLERANCE};
pub use persistence::{barcode, betti_curve, build_filtration, Barcode, Filtration, Interval, TieBreak};
pub use scalar::{Mode, Scalar};
pub use strings::{
    birth, direct_orders, endpoints, enumerate_eps_strings, excess, is_eps_string, is_string, Level,
    StringSet,
};

/// Arbitrary-precision rationals.
pub type Exact = num_rational::BigRational;
pub type ExactSpace = GapSpace<Exact>;
pub type FloatSpace = GapSpace<f64>;
pub type ExactStrings = StringSet<Exact>;
pub type FloatStrings = StringSet<f64>;
pub type ExactComplex = StringComplex<Exact>;
pub type FloatComplex = StringComplex<f64>;
pub type ExactBarcode = Barcode<Exact>;
pub type FloatBarcode = Barcode<f64>;
