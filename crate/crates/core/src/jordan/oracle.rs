use alloc::vec::Vec;

use super::JordanError;
use crate::exact::Rational;
use crate::linalg::{fraction_free_rank, SparseMatrix};

/// Jordan type of a nilpotent operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanProfile {
    /// Weakly decreasing; sums to the dimension.
    pub chain_lengths: Vec<usize>,
    /// `dim ker N^{k+1} - dim ker N^k` for `k = 0, 1, ...`; weakly decreasing.
    pub grade_dims: Vec<usize>,
}

/// Jordan type of a nilpotent matrix from the ranks of its powers:
/// `#{chains of length ≥ k} = rank N^{k-1} - rank N^k`.
pub fn jordan_oracle(m: &SparseMatrix<Rational>) -> Result<JordanProfile, JordanError> {
    if !m.is_square() {
        return Err(JordanError::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    let dim = m.nrows();
    let mut ranks = alloc::vec![dim];
    let mut power = m.clone();
    while *ranks.last().expect("nonempty") > 0 {
        let r = fraction_free_rank(&power.to_dense());
        if r == *ranks.last().expect("nonempty") {
            return Err(JordanError::NotNilpotent { dim });
        }
        ranks.push(r);
        power = power.mul(m);
    }
    let grade_dims: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut chain_lengths = Vec::new();
    for (k, &g) in grade_dims.iter().enumerate() {
        let longer = grade_dims.get(k + 1).copied().unwrap_or(0);
        chain_lengths.extend(core::iter::repeat(k + 1).take(g - longer));
    }
    chain_lengths.reverse();
    Ok(JordanProfile { chain_lengths, grade_dims })
}
