//! Exact coadjoint stabilizers for free step-two nilpotent Lie algebras and
//! the rational-ideal test deciding whether an irreducible representation
//! stays irreducible on the integer lattice.

pub mod exact_arith;
pub mod lie_core;
pub mod coadjoint;
pub mod criterion;
pub mod schrodinger;
pub mod cli;
