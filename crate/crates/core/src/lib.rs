//! Exact symbolic computation in the quantum general linear supergroup U_q(gl(m,n)).

pub mod braid;
pub mod checks;
pub mod expr;
pub mod hopf;
pub mod linalg;
pub mod pbwcore;
pub mod repmod;
pub mod rootdata;
pub mod rootofunity;
pub mod scalars;
