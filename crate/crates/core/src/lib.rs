pub mod caps;
pub mod combinatorics;
pub mod error;
pub mod finfree;
pub mod immanant;
pub mod matrix;
pub mod oracle;
pub mod rational;
pub mod symfunc;
pub mod symgroup;
pub mod verify;
pub mod weingarten;

pub use caps::Caps;
pub use error::{Error, Result};
