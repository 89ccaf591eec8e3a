use alloc::vec;
use alloc::vec::Vec;

use super::{CombinError, Partition};
use crate::exact::Field;
use crate::linalg::determinant;

/// `s_λ(z_1, ..., z_m)` where `m` is the stored number of parts of `λ`.
///
/// Uses the ratio of alternants when the values are pairwise distinct and the
/// tableau expansion otherwise.
pub fn schur_eval<F: Field>(lambda: &Partition, zs: &[F]) -> Result<F, CombinError> {
    match schur_eval_bialternant(lambda, zs)? {
        Some(v) => Ok(v),
        None => schur_eval_tableau(lambda, zs),
    }
}

/// Ratio of alternants; `None` if two of the values coincide.
pub fn schur_eval_bialternant<F: Field>(lambda: &Partition, zs: &[F]) -> Result<Option<F>, CombinError> {
    let m = lambda.len();
    if zs.len() != m {
        return Err(CombinError::ArityMismatch { expected: m, got: zs.len() });
    }
    if !pairwise_distinct(zs) {
        return Ok(None);
    }
    let num: Vec<Vec<F>> = (1..=m)
        .map(|i| zs.iter().map(|z| z.powi((lambda.part(m + 1 - i) + i - 1) as i64)).collect())
        .collect();
    let den: Vec<Vec<F>> = (1..=m).map(|i| zs.iter().map(|z| z.powi(i as i64 - 1)).collect()).collect();
    Ok(Some(determinant(num) / determinant(den)))
}

/// Sum over semistandard tableaux, organised by stripping the boxes that
/// hold the largest entry: `s_λ(z_1..z_m) = Σ_μ s_μ(z_1..z_{m-1}) z_m^{|λ|-|μ|}`
/// over `μ` interlacing `λ`.
pub fn schur_eval_tableau<F: Field>(lambda: &Partition, zs: &[F]) -> Result<F, CombinError> {
    let m = lambda.len();
    if zs.len() != m {
        return Err(CombinError::ArityMismatch { expected: m, got: zs.len() });
    }
    Ok(tableau_sum(lambda.parts(), zs))
}

fn tableau_sum<F: Field>(parts: &[usize], zs: &[F]) -> F {
    let m = parts.len();
    if m == 0 {
        return F::one();
    }
    let last = &zs[m - 1];
    let total: usize = parts.iter().sum();
    let mut acc = F::zero();
    let mut mu = vec![0usize; m - 1];
    interlacing(parts, 0, &mut mu, &mut |mu: &[usize]| {
        let sz: usize = mu.iter().sum();
        let inner = tableau_sum(mu, &zs[..m - 1]);
        if !inner.is_zero() {
            acc = acc.clone() + inner * last.powi((total - sz) as i64);
        }
    });
    acc
}

// all μ of length m-1 with λ_{i+1} ≤ μ_i ≤ λ_i
fn interlacing(lam: &[usize], i: usize, mu: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if i == mu.len() {
        visit(mu);
        return;
    }
    for v in lam[i + 1]..=lam[i] {
        mu[i] = v;
        interlacing(lam, i + 1, mu, visit);
    }
}

fn pairwise_distinct<F: Field>(zs: &[F]) -> bool {
    (0..zs.len()).all(|i| (i + 1..zs.len()).all(|j| zs[i] != zs[j]))
}

/// Elementary symmetric polynomial `e_r`.
pub fn elem_eval<F: Field>(r: usize, zs: &[F]) -> F {
    if r > zs.len() {
        return F::zero();
    }
    // e[k] = e_k of the values seen so far
    let mut e = vec![F::zero(); r + 1];
    e[0] = F::one();
    for z in zs {
        for k in (1..=r).rev() {
            e[k] = e[k].clone() + z.clone() * e[k - 1].clone();
        }
    }
    e[r].clone()
}

/// Complete homogeneous symmetric polynomial `h_r`.
pub fn complete_eval<F: Field>(r: usize, zs: &[F]) -> F {
    let mut h = vec![F::zero(); r + 1];
    h[0] = F::one();
    for z in zs {
        for k in 1..=r {
            h[k] = h[k].clone() + z.clone() * h[k - 1].clone();
        }
    }
    h[r].clone()
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(m), &mut vec![false; m], &mut out);
    out
}

/// `R_τ(y) = Σ_σ ∏_i y_{σi}^{τ_i} ∏_{i<j} (q y_{σj} - q⁻¹ y_{σi}) / (y_{σj} - y_{σi})`.
pub fn hall_littlewood_r<F: Field>(tau: &[i64], ys: &[F], q: &F) -> Result<F, CombinError> {
    let m = tau.len();
    if ys.len() != m {
        return Err(CombinError::ArityMismatch { expected: m, got: ys.len() });
    }
    if !pairwise_distinct(ys) {
        return Err(CombinError::RequiresLimit);
    }
    if ys.iter().any(|y| y.is_zero()) && tau.iter().any(|&t| t < 0) {
        return Err(CombinError::ZeroVariable);
    }
    let qi = q.inv();
    let mut total = F::zero();
    for sigma in permutations(m) {
        let mut term = F::one();
        for (i, &t) in tau.iter().enumerate() {
            term = term * ys[sigma[i]].powi(t);
        }
        for i in 0..m {
            for j in i + 1..m {
                let (yi, yj) = (&ys[sigma[i]], &ys[sigma[j]]);
                term = term * (q.clone() * yj.clone() - qi.clone() * yi.clone()) / (yj.clone() - yi.clone());
            }
        }
        total = total + term;
    }
    Ok(total)
}
