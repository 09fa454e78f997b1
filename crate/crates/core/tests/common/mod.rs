#![allow(dead_code)]

pub mod fexpand;
pub mod oracle;
