//! Decompositions from tree decompositions, clique-width expressions,
//! leaf powers, interval models, and the Hamiltonian cycle instances of
//! linear mim-width 1.

mod cwd;
mod hamcyc;
mod interval;
mod nice_td;
mod power;
mod random;

pub use cwd::{branchdec_from_cwd, random_expression, CliqueWidthExpression, CwdNode};
pub use hamcyc::{hamcyc_construct, named_source, random_source, HamCycInstance};
pub use interval::{interval_linear_order, random_intervals};
pub use nice_td::{
    branchdec_from_nice_td, read_nice_td, separator_witness, tree_nice_td, write_nice_td, NiceKind,
    NiceTreeDecomposition, TdConversion, TreeDecomposition,
};
pub use power::{leaf_power_instance, named_tree, power_instance, tree_power_instance, LeafPower};
pub use random::{random_tree, random_tw2};
