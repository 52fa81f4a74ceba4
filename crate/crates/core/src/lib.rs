//! Model checking for single-operator fragments of CTL.
//!
//! The [`semantics`] module is a complete fixpoint checker. The
//! [`fastcheck`] engines decide individual fragments through their normal
//! forms, [`reductions`] turns alternating slice graphs into hard
//! model-checking instances, and [`classify`] assigns every fragment its
//! Boolean clone and complexity class.

pub mod altgraph;
pub mod classify;
pub mod cli;
pub mod compare;
pub mod fastcheck;
pub mod kripke;
pub mod reductions;
pub mod sampling;
pub mod semantics;
pub mod syntax;
