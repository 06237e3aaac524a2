//! Exact computations for linkage extensions of polynomial ideals.
//!
//! The layers build on one another:
//!
//! - [`field`], [`monomial`], [`ring`], [`poly`]: coefficients in `Q` or `F_p`,
//!   monomial orders and sparse polynomials;
//! - [`groebner`]: Buchberger's algorithm over free modules, normal forms, syzygies;
//! - [`ideal`], [`hilbert`]: sums, products, intersections, colons, saturation,
//!   elimination, Hilbert series, dimension and degree;
//! - [`local`]: invariants at a rational point (μ, length, socle, Gorenstein and
//!   complete-intersection verdicts);
//! - [`linkage`]: linked triples `(I_B; I1, I2)` and their checks;
//! - [`double_lines`]: deciding when two double lines in `P^3` are locally
//!   algebraically linked, by explicit conditions and by a geometric oracle;
//! - [`session`], [`cli`]: the session file format and the command surface.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod double_lines;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod instances;
pub mod linalg;
pub mod linkage;
pub mod local;
pub mod monomial;
pub mod poly;
pub mod ring;
pub mod session;

pub use error::{Error, Result};
pub use field::{Coeff, Field};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::{make_ring, Ring};
