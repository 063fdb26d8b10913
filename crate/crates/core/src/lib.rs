//! Splitting types of primes in extensions of `F_q(T)`, their model as
//! double-coset fibres in a permutation group, and Euler factors of the Goss
//! zeta function and its Teichmüller lift.

pub mod ffpoly;
pub mod permgrp;
pub mod goss;
pub mod splitting;
pub mod harness;
