//! Closed forms and generating functions for the tree families.

mod horton;
mod marked;
mod retakh;
mod ternary;

pub use horton::{horton_average, horton_average_f64, horton_rp, horton_sp, horton_sp_coeff, unary_binary_count};
pub use marked::{
    marked_count_series, marked_height_average, marked_height_ph, marked_height_ph_rec, marked_height_total,
    marked_leaf_average, marked_leaf_series, marked_leaf_total,
};
pub use retakh::{
    retakh_bounded, retakh_full, retakh_gk, retakh_gk_rec, retakh_height_average, retakh_height_total,
    retakh_leaf_average, retakh_leaf_series,
};
pub use ternary::{ternary_factorization_check, ternary_root_series, ternary_t, ternary_t_of_x, ternary_xi, TernaryRoot};
