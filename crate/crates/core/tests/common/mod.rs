#![allow(dead_code)]

pub mod corpus;
pub mod null_cases;
pub mod relations_oracle;
