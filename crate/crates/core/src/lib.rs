//! Finite multi-spaces: unions of component sets, each carrying its own
//! partial binary operations, with verifiers, builders and analyses for
//! multi-groups, multi-rings, multi-vector spaces and multi-metric spaces.
//!
//! Elements are interned in a [`FiniteUniverse`] and referred to by index.
//! A product that an operation leaves undefined is `None`, never an error.
//!
//! ```
//! use multispace::constructions::{latin_multispace, LatinSquare};
//! use multispace::{eval_chain, ExprChain, FiniteUniverse};
//!
//! let s = FiniteUniverse::new(["1", "2", "3"]).unwrap();
//! let l1 = LatinSquare::new(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
//! let ms = latin_multispace(&s, &[l1]).unwrap();
//! let chain = ExprChain::from_tokens(&ms, &["2", "x1", "3"]).unwrap();
//! assert_eq!(eval_chain(&ms, &chain).unwrap(), Some(0));
//! ```

pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod format;
pub mod foundations;
pub mod multigroup;
pub mod multimetric;
pub mod multiring;
pub mod multivector;

/// Index of an element in its universe.
pub type Elem = usize;

pub use algebra::automorphism::{automorphisms, AutomorphismOptions, Automorphisms};
pub use algebra::group::GroupView;
pub use algebra::space::{
    eval_chain, solve_equation, solve_system, Component, Equation, ExprChain, MultiSpace,
    Operations, Solution, SystemSolution, Term,
};
pub use algebra::table::{
    classify_table, find_inverses, find_units, is_faithful, Classification, OpTable, Side,
    TableKind,
};
pub use error::{Error, Result};
pub use foundations::{BinaryRelation, FiniteUniverse};
