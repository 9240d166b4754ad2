//! Operators on the rational line: intervals, sign cones, point/ray value
//! sets and piecewise graphs, all analysed exactly.

pub mod cone;
pub mod interval;
pub mod piecewise;
pub mod sign;
pub mod solution;
pub mod values;

pub use cone::{Cone1D, Side};
pub use interval::{Bound, Endpoint, Interval1D};
pub use piecewise::{
    atom_member, cells, forall_piece_related, pw_classify, pw_hat, pw_hat_fiber, pw_is_class, pw_is_d_maximal,
    pw_is_pseudomonotone, pw_is_subset, pw_missing, pw_polar, pw_polar_fiber, pw_polar_member, pw_same_graph,
    DMaxVerdict, Piece, PiecewiseOperator1D, PwClassification, PwVerdict,
};
pub use solution::SolutionSet1D;
pub use values::{Atom, Direction, ValueSet1D};
