//! t-cores, t-quotients and the 5-core machinery.

mod abacus;
mod five;
mod vectors;

pub use abacus::{
    core_by_rim_hooks, is_t_core, littlewood_compose, littlewood_decompose, residue_vector,
    strip_rim_hook, CoreQuotient,
};
pub use five::{
    alpha_compose, alpha_decompose, core_counts, cores_matching, five_core_crank,
    five_core_crank_forms, orbit_of, orbit_op, orbits, quadrupling_map, quadrupling_nvector,
    shift_quotient, srank_decompose, srank_decompose_alpha, srank_from_alpha, srank_from_nvector,
    theta_map, theta_nvector, AlphaQuotient, CoreFilter, Orbit, OrbitVariant,
};
pub use vectors::{
    alpha_from_n, n_from_alpha, nvectors_up_to, phi2, phi2_inverse, t_cores, AlphaVector, NVector,
    RVector,
};

pub(crate) use abacus::check_t;
pub(crate) use vectors::isqrt;
