//! Exact calculus for Seifert surgeries on knots.
//!
//! The crate computes with the algebra that drives the Seifert Surgery
//! Network: continued-fraction parameters of rational tangles, covering
//! slopes of untangle surgeries, Seifert invariants of two-fold branched
//! covers of Montesinos(-m) links, the three surgery families EMI, EMII and
//! EMIII, twist transformations along seiferters, annular pairs and Hopf
//! pairs, and explicit network paths from each family vertex to a surgery on
//! a torus knot or the unknot.
//!
//! All arithmetic is exact over Q ∪ {∞} with arbitrary-precision integers;
//! every value is immutable and every operation is a pure function, so the
//! whole API is safe to share across threads.

pub mod cf;
pub mod error;
pub mod families;
pub mod network;
pub mod rational;
pub mod seifert;
pub mod twist;

pub use cf::ContinuedFraction;
pub use error::{Error, Result};
pub use families::{
    em1_vertex, em2_vertex, em3_surgery_description, em3_trivializable, em3_vertex,
    torus_reducible_surgery, Em3Case, KnotId, Slope, SurgeryDescription, SurgeryResult,
    SurgeryVertex,
};
pub use network::{
    build_graph, em1_path, em2_path, em3_anchor, em3_path, export_graph, GraphFamily,
    GraphFormat, GraphSpec, NetworkGraph, NetworkPath, ParamRange, PathStep, SeiferterName,
    TwistMove,
};
pub use rational::{covering_slope, meridian_lift, ExtendedRational, HomologyPair};
pub use seifert::{
    is_homeomorphic, lens_equivalent, montesinos_to_sfs, normalize, recognize, BaseSurface,
    LensParams, SeifertInvariants, SfsClassification,
};
pub use twist::{
    annular_twist, decompose, hopf_twist_a, hopf_twist_b, seiferter_twist_slope,
    AnnularTwistSurgeries, HopfComponent, HopfPairState, TwistSequence, TwistStep,
};
