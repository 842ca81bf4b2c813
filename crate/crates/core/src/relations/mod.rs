//! Machine checks of the linear identities satisfied by φ and by the sl(2)
//! weight system.
//!
//! A dashed pair in a drawn identity stands for the difference "pair present
//! minus pair absent"; [`expand_dashed`] turns such a picture into an
//! explicit [`FormalSum`] of graphs, which is then evaluated exactly.

mod checks;
mod formal;
mod report;
mod sweeps;

pub use checks::{
    attach, check_4t, check_6t, check_delcont, check_delcont_var, check_triangle, delcont_relation,
    delcont_var_relation, four_t_relation, six_t_difference_is_triangle, six_t_relation,
    triangle_relation, Relation, SixTVariant,
};
pub use formal::{eval_sum, expand_dashed, FormalSum};
pub use report::{Failure, SuiteReport};
pub use sweeps::{
    bound_sweep, bridge_scan, chord_four_t, chord_graph_consistency, chord_leaf_deletion,
    chord_products, chord_suite, conjecture_scan, cv_axioms, delcont_sweep, delcont_var_sweep,
    evaluator_agreement, four_t_sweep, six_t_sweep, triangle_sweep, GadgetSweep,
    MAX_EXHAUSTIVE_HOST,
};
