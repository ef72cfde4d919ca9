//! Generic numerical kernels: quadrature, fixed-step RK4, derivative-free
//! minimization and bracketing root search.

pub mod minimize;
pub mod ode;
pub mod quadrature;
pub mod roots;
