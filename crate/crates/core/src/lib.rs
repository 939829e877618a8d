//! A workbench for finite strict double categories and truncated bisimplicial
//! sets: standard shapes and their horns, nerves, the free-living
//! companionship and conjunction, the squares construction on locally posetal
//! 2-categories, Gray grids, functor double categories, and exhaustive
//! verification of the coherence statements these structures satisfy.

pub mod bisimplicial;
pub mod double_cat;
pub mod error;
pub mod fixtures;
pub mod freeliving;
pub mod functor_dbl;
pub mod gray;
pub mod io;
pub mod simplex;

pub use error::{Error, Result};
