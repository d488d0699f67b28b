pub mod agm;
pub mod cli;
pub mod conic;
pub mod elliptic;
pub mod error;
pub mod lemniscate;
pub mod quad;
pub mod tolerance;
pub mod transform;
