//! Runs the code in the guide as doc tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/integers.md")]
pub mod integers {}
#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}
#[doc = include_str!("../../../book/src/gamma.md")]
pub mod gamma {}
#[doc = include_str!("../../../book/src/ext.md")]
pub mod ext {}
#[doc = include_str!("../../../book/src/systems.md")]
pub mod systems {}
#[doc = include_str!("../../../book/src/sequence.md")]
pub mod sequence {}
#[doc = include_str!("../../../book/src/ladders.md")]
pub mod ladders {}
#[doc = include_str!("../../../book/src/four.md")]
pub mod four {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
