//! Runs every fenced Rust snippet in the guide (`book/src/*.md`) as a
//! doctest, so `cargo test --workspace` keeps the book in sync with the
//! library. Each chapter gets its own module so a failure names its source
//! file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/general-position.md")]
pub mod general_position {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/operations.md")]
pub mod operations {}

#[doc = include_str!("../../../book/src/unimodality.md")]
pub mod unimodality {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
