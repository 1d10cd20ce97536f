//! Compiles every Rust snippet of the guide in `book/src` as a doc-test, so
//! the guide cannot drift from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/roots.md")]
pub mod roots {}

#[doc = include_str!("../../../book/src/weyl.md")]
pub mod weyl {}

#[doc = include_str!("../../../book/src/characters.md")]
pub mod characters {}

#[doc = include_str!("../../../book/src/star.md")]
pub mod star {}

#[doc = include_str!("../../../book/src/normal-spaces.md")]
pub mod normal_spaces {}

#[doc = include_str!("../../../book/src/folded-equation.md")]
pub mod folded_equation {}

#[doc = include_str!("../../../book/src/langlands.md")]
pub mod langlands {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
