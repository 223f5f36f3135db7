//! Spin networks built from 3j- and 2j-nodes: construction, JSON format,
//! exact contraction and diagrammatic rewrites.

pub mod builders;
mod eval;
mod json;
mod model;
mod rewrite;

pub use eval::{evaluate_closed, evaluate_closed_with_cap, DEFAULT_EVAL_STEP_CAP};
pub use json::{parse, serialize, to_value};
pub use model::{Arrow, Edge, Endpoint, Node, NodeKind, Orientation, SpinNetwork, Stub, Terminal};
pub use rewrite::{
    cancel_stub_pairs, flip_arrow, flip_stub, hermitian_conjugate, invert_stub, is_standard_form,
    reverse_arrow, to_standard_form,
};
