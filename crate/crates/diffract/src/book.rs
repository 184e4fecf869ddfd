//! The user guide, chapter by chapter.
//!
//! Each module below holds one chapter of the book in `book/` at the
//! repository root, pulled in verbatim. Keeping the text here means
//! every Rust snippet in the guide is compiled and run as a doc-test,
//! so the prose cannot drift from the code it describes. Read the
//! rendered version with `mdbook serve book`, or browse the modules in
//! rustdoc.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/finite-groups.md")]
pub mod finite_groups {}

#[doc = include_str!("../../../book/src/cosets-and-representatives.md")]
pub mod cosets_and_representatives {}

#[doc = include_str!("../../../book/src/the-fibration.md")]
pub mod the_fibration {}

#[doc = include_str!("../../../book/src/the-pair-group.md")]
pub mod the_pair_group {}

#[doc = include_str!("../../../book/src/the-law-suite.md")]
pub mod the_law_suite {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}

#[doc = include_str!("../../../book/src/file-formats.md")]
pub mod file_formats {}
