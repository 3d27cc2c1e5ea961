//! Skew shapes, hook diagrams, admissible Gelfand-Tsetlin tableaux and
//! their semistandard-tableau description.

mod graph;
mod gt;
mod hook;
mod shape;
mod ssyt;

pub use graph::{basis_index, is_connected, raising_transitions, transformation_graph, Transition, TransformationGraph};
pub use gt::{
    check_admissible, check_admissible_with, enumerate_tableaux, enumerate_tableaux_with, is_admissible, A3Reading,
    ContentTable, GtTableau, Violation,
};
pub use hook::{hook_diagram, weight_of_hook, Partition};
pub use shape::{check_covariant, parity_sign, shapes_up_to, SkewShape};
pub use ssyt::{enumerate_ssyt, ssyt_to_tableau, tableau_to_ssyt, Ssyt};
