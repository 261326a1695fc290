//! Homological algebra in the quasi-abelian category of finite-dimensional
//! filtered rational vector spaces.

pub mod complexes;
pub mod dglie;
pub mod filtvect;
pub mod graded;
pub mod koszul;
pub mod linalg;
pub mod model;
pub mod random;
