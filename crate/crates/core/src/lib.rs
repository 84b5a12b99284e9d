pub mod algebra;
pub mod error;
pub mod generalized;
pub mod krawtchouk;
pub mod macwilliams;
pub mod pathsum;
pub mod pyramid;
pub mod quaternion;
pub mod report;
pub mod spectral;
pub mod sympow;
pub mod verify;

pub use error::{Error, Result};
