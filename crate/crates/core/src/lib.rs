//! Graph labellings, maximal-planar-graph surgery, Kempe equivalence and
//! key/lock graphical passwords built from labelled graphs.
//!
//! The modules map onto the main capabilities:
//!
//! - [`graph`]: graphs, labelled graphs, matrices and canonical codes
//! - [`labelling`]: graceful / odd-graceful verification and search
//! - [`coloring`]: proper colourings, Kempe changes, Klein-four edge colourings
//! - [`planar`]: rotation-system embeddings and the surgery operations on them
//! - [`keylock`]: twin key/lock authentication, walk passwords, chains
//! - [`space`]: tree enumeration and password-space arithmetic
//! - [`authd`]: the multi-round authentication service
//! - [`cli`]: the `topsnut` command-line front end

pub mod authd;
pub mod cli;
pub mod coloring;
pub mod graph;
pub mod keylock;
pub mod labelling;
pub mod planar;
pub mod space;
