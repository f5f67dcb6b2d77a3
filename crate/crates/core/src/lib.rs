//! Perfect Roman domination on trees.
//!
//! A perfect Roman dominating function labels every vertex 0, 1 or 2 so that
//! each 0-vertex has exactly one neighbor labelled 2. This crate computes the
//! minimum weight of such a function on forests in linear time, decides
//! whether that minimum survives the deletion of any single vertex
//! ("stability"), and builds and recognizes the stable trees constructively.
//!
//! * [`graph`]: trees, forests, parsers, canonical forms, free-tree enumeration.
//! * [`solver`]: the tree DP, forced-value queries and the forced-zero set.
//! * [`oracle`]: exhaustive search used as ground truth on small graphs.
//! * [`stability`]: vertex-deletion reports and pendant attachments.
//! * [`family`]: the pendant-`P3` construction, recognizer and certificates.
//! * [`verify`]: exhaustive sweeps tying all of the above together.

pub mod family;
pub mod graph;
pub mod oracle;
pub mod solver;
pub mod stability;
pub mod verify;

pub use family::{
    apply_o1, check_corollary, enumerate_family, random_family_tree, recognize, replay_certificate, FamilyError,
    FamilyIndex, PeelCertificate, PeelStep, Recognition, RejectReason,
};
pub use graph::{canonical_form, CanonicalForm, Forest, Graph, GraphError, Tree, Vertex};
pub use oracle::{brute_force, OracleResult};
pub use solver::{optimal_assignment, prdf_number, prdf_number_forced, w_set, PrdfAssignment, SolverError, WSet, Weight};
pub use stability::{check_observation1, stability_report, StabilityReport};
