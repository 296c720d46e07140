//! Base sizes of primitive actions of simple algebraic groups.
//!
//! For a simple algebraic group `G` acting on `Omega = G/H` three base
//! measures are tracked: the connected base size `b^0` (finite pointwise
//! stabilizer), the base size `b` (trivial pointwise stabilizer for some
//! tuple) and the generic base size `b^1` (trivial for a dense open set of
//! tuples), with `b^0 <= b <= b^1`.
//!
//! Modules:
//! - [`rootsys`]: root systems, parabolic and subsystem dimensions;
//! - [`classdata`]: curated class-fusion datasets and involution tables;
//! - [`bounds`]: dimension bounds and the fixed-point-ratio criterion;
//! - [`formulas`]: closed forms for every action class;
//! - [`linalg`]: exact matrices over prime fields and the rationals;
//! - [`genstab`]: sampled generic configurations and stabilizer algebras;
//! - [`finitecheck`]: small finite matrix groups and exact base sizes;
//! - [`cli`]: the `basesize` command-line front end.

pub mod bounds;
pub mod classdata;
pub mod cli;
pub mod finitecheck;
pub mod formulas;
pub mod genstab;
pub mod linalg;
pub mod rootsys;
