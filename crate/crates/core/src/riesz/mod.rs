//! Positive operators between multi-wedged spaces, the Riesz decomposition
//! property and Riesz–Kantorovich multi-suprema.

mod kantorovich;
mod operator;
mod rdp;

pub use kantorovich::{
    functional_msup, op_minf, op_msup, op_multi_upper_bound, projections, rk_value, OperatorMSupResult, ProjectionPair,
};
pub use operator::{
    extend_additive, extend_additive_ordered, op_is_positive, op_wedge_is_cone, op_wedge_lineality, LinearOperator,
};
pub use rdp::{fs_decompose, rdp_check, rdp_search, Decomposition, RdpInstance, RdpOutcome, RdpSearchOutcome};
