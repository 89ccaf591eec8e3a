use num_traits::{One, Zero};

use crate::combin::{binomial, pieri_e, pieri_h, Subset};
use crate::exact::{Field, Rational, Sign};
use crate::linalg::SparseMatrix;
use crate::vmodule::{Basis, SpectralConfig};

/// How the sign pair in `𝒞^∓(r, p, t, m)` is matched to `x^∓`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientReading {
    /// `𝒞^-` takes the upper signs (`q^{+(...)}`, `q - q⁻¹`), `𝒞^+` the lower.
    UpperForMinus,
    /// The opposite assignment.
    LowerForMinus,
}

// 𝒞(r,p,t,m) = a^{t+m-r-p} Σ_s (-1)^{p-s} q^{e(r-p+s)} (q^e - q^{-e})^{m+s-r-p} C(t,s) C(m-r,p-s), e = ±1
fn coefficient(e: i64, r: i64, p: i64, t: i64, m: i64, a: &Rational, q: &Rational) -> Rational {
    let qe = q.powi(e);
    let diff = &qe - qe.recip();
    let mut sum = Rational::zero();
    for s in 0..=p {
        let b = binomial(t, s) * binomial(m - r, p - s);
        if b.is_zero() {
            continue;
        }
        let sign = if (p - s) % 2 == 0 { Rational::one() } else { -Rational::one() };
        sum += sign * qe.powi(r - p + s) * diff.powi(m + s - r - p) * Rational::from_integer(b);
    }
    a.powi(t + m - r - p) * sum
}

/// The closed-form limit action of `x^±_t` on the Z-basis of a single
/// coincident group, as stated without derivation:
///
/// `x^-_t Z_A = Σ_p (-1)^{#{j∈A : j<p+1}} Σ_r 𝒞^-(r,p,t,|A|) Σ_{C∖{p+1} ∈ e(A,r)} Z_C`
///
/// `x^+_t Z_A = (-1)^{|Ā|} Σ_p (-1)^{#{j∈A : j>n-p}} Σ_r (-1)^r 𝒞^+(r,p,t,|Ā|) Σ_{C∪{n-p} ∈ h(A,r)} Z_C`
///
/// with `a` the coincident spectral value. Returns `None` for more than one
/// group.
pub fn x_closed_form(cfg: &SpectralConfig, which: Sign, t: i64, reading: CoefficientReading) -> Option<SparseMatrix<Rational>> {
    if cfg.groups().len() != 1 {
        return None;
    }
    let n = cfg.degree();
    let a = cfg.center(0);
    let q = cfg.q();
    let basis = Basis::new(&[n]);
    let mut out = SparseMatrix::zeros(basis.len(), basis.len());
    let e_minus = match reading {
        CoefficientReading::UpperForMinus => 1,
        CoefficientReading::LowerForMinus => -1,
    };
    for col in 0..basis.len() {
        let a_set = Subset::from_mask(n, basis.mask(col));
        let m = a_set.len() as i64;
        for p in 0..n {
            match which {
                Sign::Minus => {
                    let new = p + 1;
                    let below = a_set.elements().iter().filter(|&&j| j < new).count();
                    let sign = if below % 2 == 0 { Rational::one() } else { -Rational::one() };
                    for r in 0..=a_set.len() {
                        let c = coefficient(e_minus, r as i64, p as i64, t, m, &a, q);
                        for d in pieri_e(&a_set, r) {
                            if d.contains(new) {
                                continue;
                            }
                            let row = basis.index_of(d.with(new).mask()).expect("in basis");
                            out.add_to(row, col, &sign * &c);
                        }
                    }
                }
                Sign::Plus => {
                    let gone = n - p;
                    let mc = (n - a_set.len()) as i64;
                    let above = a_set.elements().iter().filter(|&&j| j > gone).count() as i64;
                    for r in 0..=(n - a_set.len()) {
                        let exp = mc + above + r as i64;
                        let sign = if exp % 2 == 0 { Rational::one() } else { -Rational::one() };
                        let c = coefficient(-e_minus, r as i64, p as i64, t, mc, &a, q);
                        for d in pieri_h(&a_set, r) {
                            if !d.contains(gone) {
                                continue;
                            }
                            let row = basis.index_of(d.without(gone).mask()).expect("in basis");
                            out.add_to(row, col, &sign * &c);
                        }
                    }
                }
            }
        }
    }
    Some(out)
}
