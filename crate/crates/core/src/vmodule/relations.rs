use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::ModeSource;
use crate::exact::{Field, Sign};
use crate::linalg::SparseMatrix;

/// The families of defining relations, checked mode by mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// Cartan modes commute.
    PhiPhi,
    /// `(q⁻¹ - q uv) φ^±(u) x^+(v) = (q - q⁻¹ uv) x^+(v) φ^±(u)`
    PhiXPlus,
    /// `(q - q⁻¹ uv) φ^±(u) x^-(v) = (q⁻¹ - q uv) x^-(v) φ^±(u)`
    PhiXMinus,
    /// `[x^+_m, x^-_k] = (φ^+_{m+k} - φ^-_{m+k}) / (q - q⁻¹)`
    XPlusXMinus,
    /// `(u - q^2 v) x^+(u) x^+(v) = (q^2 u - v) x^+(v) x^+(u)`
    XPlusXPlus,
    /// `(u - q^-2 v) x^-(u) x^-(v) = (q^-2 u - v) x^-(v) x^-(u)`
    XMinusXMinus,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::PhiPhi => "phi-phi",
            Relation::PhiXPlus => "phi-x+",
            Relation::PhiXMinus => "phi-x-",
            Relation::XPlusXMinus => "x+x-",
            Relation::XPlusXPlus => "x+x+",
            Relation::XMinusXMinus => "x-x-",
        };
        f.write_str(s)
    }
}

/// First nonzero entry of a failed identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

/// One instance of a relation. `indices` are the mode indices involved;
/// for the Cartan relations a `φ^±_{±r}` is written as the signed index
/// `±r` together with its sign in `signs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: Relation,
    pub signs: Vec<Sign>,
    pub indices: Vec<i64>,
    pub residual: Option<Residual>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub window: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Number of checks per relation family, and how many of them failed.
    pub fn summary(&self) -> Vec<(Relation, usize, usize)> {
        let mut out: Vec<(Relation, usize, usize)> = Vec::new();
        for c in &self.checks {
            match out.iter_mut().find(|e| e.0 == c.relation) {
                Some(e) => {
                    e.1 += 1;
                    e.2 += usize::from(!c.passed());
                }
                None => out.push((c.relation, 1, usize::from(!c.passed()))),
            }
        }
        out
    }
}

fn residual<F: Field>(m: &SparseMatrix<F>) -> Option<Residual> {
    m.iter().next().map(|(row, col, v)| Residual { row, col, value: format!("{v}") })
}

/// Checks every defining relation on the mode window `[-window, window]`.
///
/// Relation (φ, x) is used in its mode form: with `φ^±(u) = Σ_s Φ_s u^s`
/// (`Φ_s = 0` on the wrong side of zero) and `x(v) = Σ_k x_k v^{-k}`, the
/// coefficient of `u^s v^{-k}` reads
/// `q⁻¹ Φ_s x^+_k - q Φ_{s-1} x^+_{k+1} = q x^+_k Φ_s - q⁻¹ x^+_{k+1} Φ_{s-1}`
/// and the same with `q ↔ q⁻¹` for `x^-`. It is checked for
/// `s ∈ [-window, window + 1]` and `k ∈ [-window, window]`.
///
/// Cartan modes up to order `max(truncation, 2·window + 1)` are built.
pub fn verify_relations<F: Field, S: ModeSource<F>>(src: &S, window: usize, truncation: usize) -> RelationReport {
    let w = window as i64;
    let order = truncation.max(2 * window + 1);
    let dim = src.dim();
    let q = src.q();
    let qi = q.inv();
    let plus = src.phi_modes(Sign::Plus, order);
    let minus = src.phi_modes(Sign::Minus, order);
    let zero = SparseMatrix::<F>::zeros(dim, dim);
    // Φ_s for the series φ^±(u)
    let cartan = |sign: Sign, s: i64| -> &SparseMatrix<F> {
        match sign {
            Sign::Plus if s >= 0 => &plus[s as usize],
            Sign::Minus if s <= 0 => &minus[(-s) as usize],
            _ => &zero,
        }
    };
    let xp: Vec<SparseMatrix<F>> = (-w..=w + 1).map(|t| src.xplus(t)).collect();
    let xm: Vec<SparseMatrix<F>> = (-w..=w + 1).map(|t| src.xminus(t)).collect();
    let at = |v: &[SparseMatrix<F>], t: i64| v[(t + w) as usize].clone();

    let mut checks = Vec::new();
    let mut push = |relation, signs: Vec<Sign>, indices: Vec<i64>, diff: SparseMatrix<F>| {
        checks.push(RelationCheck { relation, signs, indices, residual: residual(&diff) });
    };

    // Cartan modes in the window
    let mut modes: Vec<(Sign, i64)> = (0..=w).map(|r| (Sign::Plus, r)).collect();
    modes.extend((0..=w).map(|r| (Sign::Minus, -r)));
    for (i, &(si, ri)) in modes.iter().enumerate() {
        for &(sj, rj) in &modes[i + 1..] {
            let d = cartan(si, ri).commutator(cartan(sj, rj));
            push(Relation::PhiPhi, vec![si, sj], vec![ri, rj], d);
        }
    }

    for sign in [Sign::Plus, Sign::Minus] {
        for s in -w..=w + 1 {
            let (p0, p1) = (cartan(sign, s), cartan(sign, s - 1));
            for k in -w..=w {
                let (x0, x1) = (at(&xp, k), at(&xp, k + 1));
                let lhs = p0.mul(&x0).scale(&qi).sub(&p1.mul(&x1).scale(&q));
                let rhs = x0.mul(p0).scale(&q).sub(&x1.mul(p1).scale(&qi));
                push(Relation::PhiXPlus, vec![sign], vec![s, k], lhs.sub(&rhs));

                let (x0, x1) = (at(&xm, k), at(&xm, k + 1));
                let lhs = p0.mul(&x0).scale(&q).sub(&p1.mul(&x1).scale(&qi));
                let rhs = x0.mul(p0).scale(&qi).sub(&x1.mul(p1).scale(&q));
                push(Relation::PhiXMinus, vec![sign], vec![s, k], lhs.sub(&rhs));
            }
        }
    }

    let inv_diff = (q.clone() - qi.clone()).inv();
    for m in -w..=w {
        for k in -w..=w {
            let lhs = at(&xp, m).commutator(&at(&xm, k));
            let rhs = cartan(Sign::Plus, m + k).sub(cartan(Sign::Minus, m + k)).scale(&inv_diff);
            push(Relation::XPlusXMinus, vec![], vec![m, k], lhs.sub(&rhs));
        }
    }

    let q2 = q.clone() * q.clone();
    let qi2 = qi.clone() * qi.clone();
    for (relation, x, c) in [(Relation::XPlusXPlus, &xp, &q2), (Relation::XMinusXMinus, &xm, &qi2)] {
        for m in -w..=w {
            for k in -w..=w {
                let lhs = at(x, m + 1).mul(&at(x, k)).sub(&at(x, m).mul(&at(x, k + 1)).scale(c));
                let rhs = at(x, k).mul(&at(x, m + 1)).scale(c).sub(&at(x, k + 1).mul(&at(x, m)));
                push(relation, vec![], vec![m, k], lhs.sub(&rhs));
            }
        }
    }

    RelationReport { window, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rational, EpsRational, Rational};
    use crate::vmodule::{SpectralConfig, VModule, DEFAULT_MAX_DEGREE};

    fn cfg(roots: &[(i64, usize)], q: Rational) -> SpectralConfig {
        let roots: Vec<(Rational, usize)> = roots.iter().map(|&(a, m)| (rational(a, 1), m)).collect();
        SpectralConfig::from_roots(q, &roots, &rational(0, 1), None, DEFAULT_MAX_DEGREE).unwrap()
    }

    #[test]
    fn one_factor_window_two() {
        let c = cfg(&[(1, 1)], rational(2, 1));
        let m = VModule::specialized(&c);
        let rep = verify_relations(&m, 2, c.truncation());
        assert!(rep.passed(), "{:?}", rep.failures().next());
        assert_eq!(rep.summary().len(), 6);
    }

    #[test]
    fn three_factors() {
        for q in [rational(2, 1), rational(5, 2)] {
            let c = cfg(&[(3, 1), (5, 1), (7, 1)], q);
            let m = VModule::specialized(&c);
            assert!(verify_relations(&m, 2, c.truncation()).passed());
        }
    }

    #[test]
    fn symbolic_in_eps() {
        let c = cfg(&[(1, 2)], rational(3, 1));
        let m: VModule<EpsRational> = VModule::symbolic(&c);
        assert!(verify_relations(&m, 1, c.truncation()).passed());
    }

    struct Scaled(VModule<Rational>);

    impl ModeSource<Rational> for Scaled {
        fn dim(&self) -> usize {
            self.0.basis().len()
        }
        fn q(&self) -> Rational {
            ModeSource::q(&self.0)
        }
        fn spectral_values(&self) -> Vec<Rational> {
            self.0.values().to_vec()
        }
        fn xplus(&self, t: i64) -> SparseMatrix<Rational> {
            self.0.xplus(t).scale(&rational(2, 1))
        }
        fn xminus(&self, t: i64) -> SparseMatrix<Rational> {
            self.0.xminus(t)
        }
        fn phi_modes(&self, sign: Sign, order: usize) -> Vec<SparseMatrix<Rational>> {
            self.0.phi_modes(sign, order)
        }
    }

    #[test]
    fn corrupted_xplus_breaks_the_commutator() {
        let c = cfg(&[(3, 1), (5, 1)], rational(2, 1));
        let rep = verify_relations(&Scaled(VModule::specialized(&c)), 2, c.truncation());
        let bad = rep.failures().find(|f| f.relation == Relation::XPlusXMinus).expect("commutator must fail");
        assert!(bad.residual.as_ref().unwrap().value != "0");
    }
}
