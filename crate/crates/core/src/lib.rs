//! Templicial A∞-nerves of finite strictly unital A∞-categories over exact fields.

pub mod exactlin;
pub mod necklace;
pub mod ainfty;
pub mod nerve;
pub mod quasicat;
pub mod io;
pub mod selftest;
pub mod cli;
