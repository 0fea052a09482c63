//! Truncated power series in `q` with Laurent polynomial coefficients in `x`
//! and `y`, exact over the integers.

mod compare;
mod enumerative;
mod laurent;
mod named;
mod series;

pub use compare::{
    assert_equal, cyclic_reduce_check, residue_totals, Comparison, CyclicFailure, CyclicVerdict,
    Progression, Split,
};
pub use enumerative::{
    crank_weight, enumerative_series, enumerative_series_with, Weighting, ENUMERATION_BUDGET,
};
pub use laurent::{LaurentPoly, Var};
pub use named::{build_named_series, NamedSeries};
pub use series::{pochhammer_inf, QMonomial, Series};
