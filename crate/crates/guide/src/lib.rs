//! Empty outside of `cargo test`: each chapter of the book becomes the doc
//! comment of a module, so rustdoc compiles and runs every snippet in it.
//! One module per chapter keeps failures traceable to their file.

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/lattices.md")]
mod lattices {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/dynamics.md")]
mod dynamics {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/surfaces.md")]
mod surfaces {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/curves.md")]
mod curves {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
