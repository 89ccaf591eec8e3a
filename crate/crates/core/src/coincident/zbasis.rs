use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::combin::{lambda_of, schur_eval, sign_w, Subset};
use crate::exact::{EpsPoly, EpsRational, Rational};
use crate::linalg::SparseMatrix;
use crate::vmodule::{Basis, SpectralConfig};

/// The change of basis `Z_A = Σ_B M^B_A V_B` with
/// `M^B_A = ∏_s s_{λ^{A^(s)}}(z_{B^(s)})`, `z_i = ε α_i`, for tuples in the
/// same sector, and its inverse in closed form.
///
/// Homogeneity of Schur polynomials gives `M = M_0 · D` and
/// `M⁻¹ = D⁻¹ · M_0⁻¹` with `D = diag(ε^{grade})` and `M_0`, `M_0⁻¹` rational;
/// both factorizations are kept.
#[derive(Clone, Debug)]
pub struct ZChangeOfBasis {
    cfg: SpectralConfig,
    basis: Basis,
    m: SparseMatrix<EpsRational>,
    minv: SparseMatrix<EpsRational>,
    m0: SparseMatrix<Rational>,
    minv0: SparseMatrix<Rational>,
}

fn pick(alphas: &[Rational], a: &Subset) -> Vec<Rational> {
    a.elements().into_iter().map(|i| alphas[i - 1].clone()).collect()
}

impl ZChangeOfBasis {
    pub fn build(cfg: &SpectralConfig) -> Self {
        let basis = Basis::new(&cfg.group_sizes());
        let groups = cfg.groups();
        let dim = basis.len();
        let mut m0 = SparseMatrix::zeros(dim, dim);
        let mut minv0 = SparseMatrix::zeros(dim, dim);
        for (_, range) in basis.sectors() {
            for a in range.clone() {
                let pa = basis.parts(a);
                for b in range.clone() {
                    let pb = basis.parts(b);
                    // Z_A in terms of V_B: homogeneity pulls out ε^{|λ^A|}
                    let mut c = Rational::one();
                    for (s, g) in groups.iter().enumerate() {
                        c *= schur_eval(&lambda_of(&pa[s]), &pick(g.alphas(), &pb[s])).expect("sizes match");
                    }
                    m0.set(b, a, c);

                    // V_A in terms of Z_B: per group
                    // ε(w_{B̄}) s_{λ^{B̄}}(z_{Ā}) / ∏_{i∈A, j∉A} (z_i - z_j)
                    let mut c = Rational::one();
                    for (s, g) in groups.iter().enumerate() {
                        let (ga, gb) = (&pa[s], &pb[s]);
                        let al = g.alphas();
                        let comp_a = ga.complement();
                        let comp_b = gb.complement();
                        let mut vdm = Rational::one();
                        for i in ga.elements() {
                            for j in comp_a.elements() {
                                vdm *= &al[i - 1] - &al[j - 1];
                            }
                        }
                        let s_val = schur_eval(&lambda_of(&comp_b), &pick(al, &comp_a)).expect("sizes match");
                        c *= Rational::from_integer(sign_w(&comp_b).into()) * s_val / vdm;
                    }
                    minv0.set(b, a, c);
                }
            }
        }
        let m = m0.try_map::<_, ()>(|_, a, c| Ok(EpsRational::eps_power(c.clone(), basis.grade(a) as i64))).expect("infallible");
        let minv = minv0.try_map::<_, ()>(|b, _, c| Ok(EpsRational::eps_power(c.clone(), -(basis.grade(b) as i64)))).expect("infallible");
        ZChangeOfBasis { cfg: cfg.clone(), basis, m, minv, m0, minv0 }
    }

    pub fn config(&self) -> &SpectralConfig {
        &self.cfg
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    /// Columns are the Z-vectors in V-coordinates.
    pub fn m(&self) -> &SparseMatrix<EpsRational> {
        &self.m
    }

    pub fn minv(&self) -> &SparseMatrix<EpsRational> {
        &self.minv
    }

    pub fn m0(&self) -> &SparseMatrix<Rational> {
        &self.m0
    }

    pub fn minv0(&self) -> &SparseMatrix<Rational> {
        &self.minv0
    }

    /// `M⁻¹ · ρ · M` by direct products over `ℚ(ε)`.
    pub fn conjugate(&self, rho: &SparseMatrix<EpsRational>) -> SparseMatrix<EpsRational> {
        self.minv.mul(&rho.mul(&self.m))
    }

    /// The same conjugate computed over a common denominator: with
    /// `ρ = N / L` for a polynomial matrix `N`, entry `(C, A)` is
    /// `ε^{g(A) - g(C)} (M_0⁻¹ N M_0)_{CA} / L`, reduced to lowest terms.
    pub fn conjugate_reduced(&self, rho: &SparseMatrix<EpsRational>) -> SparseMatrix<EpsRational> {
        let mut out = SparseMatrix::zeros(self.basis.len(), self.basis.len());
        for (c, a, num, den) in self.conjugate_parts(rho) {
            out.set(c, a, EpsRational::new(num, den).expect("nonzero denominator"));
        }
        out
    }

    /// Value of [`Self::conjugate`] at `ε = 0`, or the position of an entry
    /// with a pole there. Only powers of `ε` can cancel at `ε = 0`, so each
    /// entry is settled by comparing valuations.
    pub fn conjugate_at_zero(&self, rho: &SparseMatrix<EpsRational>) -> Result<SparseMatrix<Rational>, (usize, usize)> {
        let mut out = SparseMatrix::zeros(self.basis.len(), self.basis.len());
        for (c, a, num, den) in self.conjugate_parts(rho) {
            let vn = num.eps_valuation().expect("nonzero numerator");
            let vd = den.eps_valuation().expect("nonzero denominator");
            match vn.cmp(&vd) {
                core::cmp::Ordering::Less => return Err((c, a)),
                core::cmp::Ordering::Equal => out.set(c, a, num.coeff(vn) / den.coeff(vd)),
                core::cmp::Ordering::Greater => {}
            }
        }
        Ok(out)
    }

    // nonzero entries (C, A, numerator, denominator), unreduced
    fn conjugate_parts(&self, rho: &SparseMatrix<EpsRational>) -> Vec<(usize, usize, EpsPoly, EpsPoly)> {
        let dim = self.basis.len();
        let mut dens: Vec<EpsPoly> = Vec::new();
        for (_, _, v) in rho.iter() {
            if !dens.contains(v.den()) {
                dens.push(v.den().clone());
            }
        }
        let l = dens.iter().fold(EpsPoly::one(), |acc, d| {
            let g = EpsPoly::gcd(&acc, d);
            &acc * &d.div_rem(&g).0
        });
        // N · M_0, row by row
        let mut t: Vec<BTreeMap<usize, EpsPoly>> = vec_of_maps(dim);
        for (i, k, v) in rho.iter() {
            let n = v.num() * &l.div_rem(v.den()).0;
            for (&j, c) in self.m0.row(k) {
                add_poly(&mut t[i], j, n.scale(c));
            }
        }
        // M_0⁻¹ · (N · M_0)
        let mut out = Vec::new();
        for c in 0..dim {
            let mut row = BTreeMap::new();
            for (&k, w) in self.minv0.row(c) {
                for (&a, poly) in &t[k] {
                    add_poly(&mut row, a, poly.scale(w));
                }
            }
            for (a, poly) in row {
                if poly.is_zero() {
                    continue;
                }
                let d = self.basis.grade(a) as i64 - self.basis.grade(c) as i64;
                let shift = |p: &EpsPoly, k: i64| {
                    if k > 0 {
                        p * &EpsPoly::monomial(Rational::one(), k as usize)
                    } else {
                        p.clone()
                    }
                };
                out.push((c, a, shift(&poly, d), shift(&l, -d)));
            }
        }
        out
    }
}

fn vec_of_maps(n: usize) -> Vec<BTreeMap<usize, EpsPoly>> {
    (0..n).map(|_| BTreeMap::new()).collect()
}

fn add_poly(row: &mut BTreeMap<usize, EpsPoly>, j: usize, p: EpsPoly) {
    match row.get_mut(&j) {
        Some(e) => *e = &*e + &p,
        None => {
            row.insert(j, p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rational, Field};
    use crate::linalg::rref;

    fn cfg(roots: &[(i64, usize)]) -> SpectralConfig {
        let roots: Vec<(Rational, usize)> = roots.iter().map(|&(a, m)| (rational(a, 1), m)).collect();
        SpectralConfig::from_roots(rational(2, 1), &roots, &rational(0, 1), None, 10).unwrap()
    }

    #[test]
    fn one_factor_is_identity() {
        let z = ZChangeOfBasis::build(&cfg(&[(1, 1)]));
        assert_eq!(z.m(), &SparseMatrix::identity(2));
        assert_eq!(z.minv(), &SparseMatrix::identity(2));
    }

    #[test]
    fn two_factor_columns() {
        let z = ZChangeOfBasis::build(&cfg(&[(1, 2)]));
        let b = z.basis();
        let (v1, v2) = (b.index_of(0b01).unwrap(), b.index_of(0b10).unwrap());
        // Z_{1} = V_{1} + V_{2}; Z_{2} = z_1 V_{1} + z_2 V_{2} with α = (1, 2)
        assert_eq!(z.m().entry(v1, v1), EpsRational::one());
        assert_eq!(z.m().entry(v2, v1), EpsRational::one());
        assert_eq!(z.m().entry(v1, v2), EpsRational::eps());
        assert_eq!(z.m().entry(v2, v2), EpsRational::eps_power(rational(2, 1), 1));
    }

    #[test]
    fn inverse_is_exact() {
        for roots in [&[(1, 3)][..], &[(1, 4)], &[(1, 2), (3, 2)], &[(1, 1), (3, 2)]] {
            let z = ZChangeOfBasis::build(&cfg(roots));
            let n = z.basis().len();
            assert_eq!(z.m().mul(z.minv()), SparseMatrix::identity(n), "{roots:?}");
            assert_eq!(z.minv().mul(z.m()), SparseMatrix::identity(n));
        }
    }

    #[test]
    fn both_conjugations_agree() {
        use crate::vmodule::VModule;
        for roots in [&[(1, 3)][..], &[(1, 2), (3, 1)]] {
            let c = cfg(roots);
            let z = ZChangeOfBasis::build(&c);
            let v = VModule::symbolic(&c);
            for t in -1..=1 {
                assert_eq!(z.conjugate(&v.xplus(t)), z.conjugate_reduced(&v.xplus(t)));
                assert_eq!(z.conjugate(&v.xminus(t)), z.conjugate_reduced(&v.xminus(t)));
            }
            let phi = v.phi(crate::exact::Sign::Minus, 2);
            assert_eq!(z.conjugate(&phi), z.conjugate_reduced(&phi));
            let direct = z.conjugate(&v.xplus(1)).try_map(|_, _, e| e.eval_at_zero()).unwrap();
            assert_eq!(z.conjugate_at_zero(&v.xplus(1)).unwrap(), direct);
        }
    }

    // the closed-form inverse against Gauss-Jordan inversion over ℚ(ε)
    #[test]
    fn inverse_matches_elimination() {
        let z = ZChangeOfBasis::build(&cfg(&[(1, 4)]));
        let n = z.basis().len();
        let dense = z.m().to_dense();
        let aug: Vec<Vec<EpsRational>> = (0..n)
            .map(|i| {
                let mut row = dense[i].clone();
                row.extend((0..n).map(|j| if i == j { EpsRational::one() } else { EpsRational::from_int(0) }));
                row
            })
            .collect();
        let (red, pivots) = rref(aug);
        assert_eq!(pivots, (0..n).collect::<Vec<_>>());
        let inv: Vec<Vec<EpsRational>> = red.into_iter().map(|r| r[n..].to_vec()).collect();
        assert_eq!(SparseMatrix::from_dense(&inv), *z.minv());
    }
}
