pub mod arith;
pub mod error;
pub mod gen;
mod hnf;
pub mod ideal;
pub mod index;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod verify;
pub mod ring;

pub use arith::{FieldElem, QuadElement, Rational};
pub use error::{Error, Result};
pub use ideal::FractionalIdeal;
pub use lattice::{PseudoLattice, SteinitzForm};
pub use ring::RingConfig;
