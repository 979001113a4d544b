#![allow(dead_code)]

pub mod dg;
pub mod oracle;
