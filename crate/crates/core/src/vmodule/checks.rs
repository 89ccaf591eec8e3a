use alloc::vec;
use alloc::vec::Vec;

use super::{ModeSource, VModule};
use crate::combin::{hall_littlewood_r, CombinError};
use crate::exact::{Field, Sign, USeries};
use crate::linalg::Echelon;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeightReport {
    /// Modes `t` with `|t| ≤ R` for which `x^+_t V_∅ ≠ 0`.
    pub not_annihilated: Vec<i64>,
    /// Whether `φ^±(u) V_∅` matches `q^{deg P} P(u q⁻¹) / P(u q)` through order `R`, per sign.
    pub eigenvalue_matches: [bool; 2],
    /// Whether `V_∅` is an eigenvector of every Cartan mode.
    pub is_eigenvector: bool,
    /// Dimension of the span of all `x^-`-words applied to `V_∅`.
    pub span_rank: usize,
    pub dim: usize,
}

impl HighestWeightReport {
    pub fn passed(&self) -> bool {
        self.not_annihilated.is_empty() && self.eigenvalue_matches == [true, true] && self.is_eigenvector && self.span_rank == self.dim
    }
}

fn basis_vector<F: Field>(dim: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); dim];
    v[i] = F::one();
    v
}

/// Highest l-weight checks for the vector with index 0 (`V_∅`, or `Z_∅` in
/// the limit) up to the truncation order.
///
/// The expected eigenvalue is built as a single quotient of polynomials
/// `∏(q - q⁻¹ a_i u) / ∏(1 - a_i u)` and expanded, independently of the way
/// the module assembles its Cartan modes.
pub fn verify_highest_weight<F: Field, S: ModeSource<F>>(src: &S, truncation: usize) -> HighestWeightReport {
    let dim = src.dim();
    let top = basis_vector::<F>(dim, 0);
    let r = truncation as i64;
    let not_annihilated = (-r..=r).filter(|&t| src.xplus(t).mul_vec(&top).iter().any(|x| !x.is_zero())).collect();

    let q = src.q();
    let qi = q.inv();
    let a = src.spectral_values();
    let mut num = vec![F::one()];
    let mut den = vec![F::one()];
    for ai in &a {
        num = poly_mul(&num, &[q.clone(), -(qi.clone() * ai.clone())]);
        den = poly_mul(&den, &[F::one(), -ai.clone()]);
    }
    let mut eigenvalue_matches = [true, true];
    let mut is_eigenvector = true;
    for (slot, sign) in [Sign::Plus, Sign::Minus].into_iter().enumerate() {
        let expected = USeries::from_rational(&num, &den, sign, truncation).expect("roots are nonzero");
        for (k, m) in src.phi_modes(sign, truncation).iter().enumerate() {
            let image = m.mul_vec(&top);
            if image.iter().skip(1).any(|x| !x.is_zero()) {
                is_eigenvector = false;
            }
            if image[0] != expected.coeffs()[k] {
                eigenvalue_matches[slot] = false;
            }
        }
    }

    // close the span of V_∅ under x^-_t, t = 0..n-1 (enough modes, since the
    // a_i are distinct, to separate all directions)
    let lowering: Vec<_> = (0..a.len().max(1) as i64).map(|t| src.xminus(t)).collect();
    let mut span = Echelon::new(dim);
    span.insert(&top);
    let mut queue = vec![top];
    while let Some(v) = queue.pop() {
        for x in &lowering {
            let w = x.mul_vec(&v);
            if span.insert(&w) {
                queue.push(w);
            }
        }
    }
    HighestWeightReport { not_annihilated, eigenvalue_matches, is_eigenvector, span_rank: span.rank(), dim }
}

fn poly_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoweringReport {
    pub tau: Vec<i64>,
    /// Basis indices where `x^-_{τ_m} ... x^-_{τ_1} V_∅` (`τ_1` applied
    /// first) differs from `Σ R_τ(a_B) V_B`.
    pub mismatches_first_applied_first: Vec<usize>,
    /// The same with the word reversed, `x^-_{τ_1} ... x^-_{τ_m} V_∅`.
    pub mismatches_last_applied_first: Vec<usize>,
}

impl LoweringReport {
    /// Whether the word with `τ_1` applied first matches.
    pub fn holds_as_written(&self) -> bool {
        self.mismatches_first_applied_first.is_empty()
    }

    /// Whether the word with `τ_m` applied first matches.
    pub fn holds_reversed(&self) -> bool {
        self.mismatches_last_applied_first.is_empty()
    }
}

/// Compares `x^-`-words applied to `V_∅` with `Σ_{|B|=m} R_τ(a_B) V_B`, in
/// both orders of application.
///
/// With the V-basis action the identity holds when `τ_m` is applied first;
/// for `τ` that is not constant the other order generally differs.
pub fn verify_lowering_identity<F: Field>(module: &VModule<F>, tau: &[i64]) -> Result<LoweringReport, CombinError> {
    let basis = module.basis();
    let dim = basis.len();
    let q = F::from_rational(module.config().q());
    let a = module.values();
    let mut expected = Vec::with_capacity(dim);
    for i in 0..dim {
        let mask = basis.mask(i);
        expected.push(if mask.count_ones() as usize == tau.len() {
            let ys: Vec<F> = (0..a.len()).filter(|&j| mask >> j & 1 == 1).map(|j| a[j].clone()).collect();
            hall_littlewood_r(tau, &ys, &q)?
        } else {
            F::zero()
        });
    }
    let word = |order: &mut dyn Iterator<Item = &i64>| -> Vec<usize> {
        let mut v = basis_vector::<F>(dim, 0);
        for &t in order {
            v = module.xminus(t).mul_vec(&v);
        }
        (0..dim).filter(|&i| v[i] != expected[i]).collect()
    };
    Ok(LoweringReport {
        tau: tau.to_vec(),
        mismatches_first_applied_first: word(&mut tau.iter()),
        mismatches_last_applied_first: word(&mut tau.iter().rev()),
    })
}
