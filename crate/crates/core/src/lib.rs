pub mod braid;
pub mod distinguish;
pub mod error;
pub mod fibered;
pub mod fox;
pub mod homcount;
pub mod knot;
pub mod laurent;
pub mod perm;
pub mod presentation;
pub mod snf;
pub mod surgery;
pub mod target;
pub mod tietze;
pub mod word;
