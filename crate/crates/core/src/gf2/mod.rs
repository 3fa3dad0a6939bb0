//! Exact arithmetic on `Z_2^n` words and GF(2) generator matrices.

pub mod enumerate;
pub mod matrix;
pub mod ops;
pub mod text;
pub mod word;

#[cfg(test)]
pub(crate) mod testing;

pub use enumerate::{
    for_each_codeword, light_codewords, min_distance, min_distance_at_least, weight_distribution, CodeSummary,
};
pub use matrix::{Echelon, GenMatrix};
pub use ops::{extend_parity, puncture, shorten};
pub use text::{format_matrix, parse_matrix};
pub use word::Gf2Word;

/// The `5 x 11` generator matrix whose rows are the images of five involutions
/// with no weight-3 element and an isolated weight-4 first row.
pub fn remark_matrix() -> GenMatrix {
    GenMatrix::from_strs(&[
        "11110000000",
        "11001111111",
        "00001111000",
        "00001100110",
        "00001010101",
    ])
    .expect("static matrix is well formed")
}
