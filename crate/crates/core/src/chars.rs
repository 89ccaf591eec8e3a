//! q-characters and q,t-characters of standard modules, and their comparison
//! with the Jordan grades.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::combin::gaussian_binomial;
use crate::exact::{Rational, TPoly};
use crate::jordan::ThxReport;
use crate::vmodule::{Basis, Sector, SpectralConfig};

/// `∏_a Y_a^{e_a}` with rational subscripts; zero exponents are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YMonomial(BTreeMap<Rational, i64>);

impl YMonomial {
    pub fn one() -> Self {
        YMonomial(BTreeMap::new())
    }

    /// `Y_a^e`.
    pub fn y(a: Rational, e: i64) -> Self {
        let mut m = Self::one();
        m.mul_y(a, e);
        m
    }

    fn mul_y(&mut self, a: Rational, e: i64) {
        if e == 0 {
            return;
        }
        let v = self.0.entry(a.clone()).or_insert(0);
        *v += e;
        if *v == 0 {
            self.0.remove(&a);
        }
    }

    pub fn mul(&self, rhs: &YMonomial) -> YMonomial {
        let mut out = self.clone();
        for (a, &e) in &rhs.0 {
            out.mul_y(a.clone(), e);
        }
        out
    }

    pub fn exponent(&self, a: &Rational) -> i64 {
        self.0.get(a).copied().unwrap_or(0)
    }

    /// `(a, e)` pairs in increasing order of `a`.
    pub fn exponents(&self) -> impl Iterator<Item = (&Rational, i64)> {
        self.0.iter().map(|(a, &e)| (a, e))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (a, e)) in self.exponents().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            match e {
                1 => write!(f, "Y[{a}]")?,
                _ => write!(f, "Y[{a}]^{e}")?,
            }
        }
        Ok(())
    }
}

/// `Σ_γ P_γ(t) m_γ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QTChar {
    terms: BTreeMap<YMonomial, TPoly>,
}

impl QTChar {
    pub fn terms(&self) -> &BTreeMap<YMonomial, TPoly> {
        &self.terms
    }

    pub fn get(&self, m: &YMonomial) -> Option<&TPoly> {
        self.terms.get(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The q-character obtained at `t = 1`.
    pub fn at_t_one(&self) -> BTreeMap<YMonomial, u64> {
        self.terms.iter().map(|(m, p)| (m.clone(), p.eval_one())).collect()
    }

    fn add(&mut self, m: YMonomial, p: TPoly) {
        let e = self.terms.entry(m).or_insert_with(TPoly::zero);
        *e = &*e + &p;
    }
}

/// `∏_s Y_{a_s}^{n_s - m_s} Y_{a_s q²}^{-m_s}` for the Drinfeld roots `a_s`.
pub fn sector_monomial(cfg: &SpectralConfig, sector: &Sector) -> YMonomial {
    let q2 = cfg.q() * cfg.q();
    let mut m = YMonomial::one();
    for (g, &ms) in cfg.groups().iter().zip(&sector.0) {
        m.mul_y(g.root().clone(), (g.size() - ms) as i64);
        m.mul_y(g.root() * &q2, -(ms as i64));
    }
    m
}

/// Expansion of `∏_s (Y_{a_s} + Y_{a_s q²}^{-1})^{n_s}`, one factor at a time.
pub fn qchar_standard(cfg: &SpectralConfig) -> BTreeMap<YMonomial, u64> {
    let q2 = cfg.q() * cfg.q();
    let mut acc: BTreeMap<YMonomial, u64> = BTreeMap::from([(YMonomial::one(), 1)]);
    for g in cfg.groups() {
        let up = YMonomial::y(g.root().clone(), 1);
        let down = YMonomial::y(g.root() * &q2, -1);
        for _ in 0..g.size() {
            let mut next = BTreeMap::new();
            for (m, c) in &acc {
                for f in [&up, &down] {
                    *next.entry(m.mul(f)).or_insert(0) += c;
                }
            }
            acc = next;
        }
    }
    acc
}

/// Each sector contributes its monomial with `∏_s [n_s choose m_s]_{t²}`.
pub fn qtchar_standard(cfg: &SpectralConfig) -> QTChar {
    let basis = Basis::new(&cfg.group_sizes());
    let mut out = QTChar::default();
    for (sector, _) in basis.sectors() {
        let p = cfg
            .group_sizes()
            .iter()
            .zip(&sector.0)
            .fold(TPoly::one(), |acc, (&n, &m)| &acc * &gaussian_binomial(n, m).substitute_power(2));
        out.add(sector_monomial(cfg, sector), p);
    }
    out
}

/// Comparison on one l-weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorTh {
    pub sector: Sector,
    pub monomial: YMonomial,
    pub tpoly: TPoly,
    /// Coefficients of `t^0, t^2, t^4, ...` in weakly decreasing order.
    pub sorted: Vec<u64>,
    /// `sorted[k]` is the coefficient of `t^{2 σ(k)}`; ties keep their order.
    pub sigma: Vec<usize>,
    /// Jordan grade dimensions of `ψ^+_1` on the sector.
    pub grade_dims: Vec<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThReport {
    pub sectors: Vec<SectorTh>,
    /// `χ_{q,t}` at `t = 1` equals the independently expanded `χ_q`.
    pub t_one_matches_qchar: bool,
    pub total_dim: u64,
    pub expected_total: u64,
}

impl ThReport {
    pub fn passed(&self) -> bool {
        self.t_one_matches_qchar && self.total_dim == self.expected_total && self.sectors.iter().all(|s| s.passed)
    }
}

/// Stable permutation listing the indices of `v` by decreasing value.
pub fn decreasing_order(v: &[u64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by(|&i, &j| v[j].cmp(&v[i]));
    idx
}

/// Compares, on every sector, the sorted `t²`-coefficients of the
/// q,t-character with the Jordan grades of `ψ^+_1` from `thx`.
pub fn verify_theorem_th(cfg: &SpectralConfig, thx: &ThxReport) -> ThReport {
    let chi = qtchar_standard(cfg);
    let mut sectors = Vec::new();
    for s in &thx.sectors {
        let monomial = sector_monomial(cfg, &s.sector);
        let tpoly = chi.get(&monomial).cloned().unwrap_or_else(TPoly::zero);
        let coeffs = tpoly.even_coeffs();
        let sigma = decreasing_order(&coeffs);
        let sorted: Vec<u64> = sigma.iter().map(|&i| coeffs[i]).collect();
        let grade_dims = s.modes.iter().find(|m| m.r == 1).map(|m| m.profile.grade_dims.clone()).unwrap_or_default();
        let passed = tpoly.has_only_even_powers()
            && sorted.len() == grade_dims.len()
            && sorted.iter().zip(&grade_dims).all(|(&a, &b)| a == b as u64);
        sectors.push(SectorTh { sector: s.sector.clone(), monomial, tpoly, sorted, sigma, grade_dims, passed });
    }
    let total_dim = chi.terms().values().map(TPoly::eval_one).sum();
    ThReport {
        sectors,
        t_one_matches_qchar: chi.at_t_one() == qchar_standard(cfg),
        total_dim,
        expected_total: 1u64 << cfg.degree(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::jordan::{verify_theorem_thx, ThxOptions};
    use alloc::vec;

    fn cfg(q: i64, roots: &[(i64, usize)]) -> SpectralConfig {
        let roots: Vec<(Rational, usize)> = roots.iter().map(|&(a, m)| (rational(a, 1), m)).collect();
        SpectralConfig::from_roots(rational(q, 1), &roots, &rational(0, 1), None, 10).unwrap()
    }

    #[test]
    fn monomials() {
        let m = YMonomial::y(rational(1, 1), 2).mul(&YMonomial::y(rational(4, 1), -1));
        assert_eq!(m.exponent(&rational(1, 1)), 2);
        assert_eq!(format!("{m}"), "Y[1]^2 Y[4]^-1");
        assert!(m.mul(&YMonomial::y(rational(4, 1), 1)).mul(&YMonomial::y(rational(1, 1), -2)).is_one());
    }

    #[test]
    fn fundamental_and_power() {
        let c = cfg(2, &[(3, 1)]);
        let chi = qchar_standard(&c);
        assert_eq!(chi.len(), 2);
        assert_eq!(chi[&YMonomial::y(rational(3, 1), 1)], 1);
        assert_eq!(chi[&YMonomial::y(rational(12, 1), -1)], 1);
        // (1 - a q⁻¹ u)^n with a = 2, q = 2: Y_1 and Y_4^{-1}
        let c = cfg(2, &[(1, 4)]);
        let chi = qchar_standard(&c);
        for k in 0..=4i64 {
            let m = YMonomial::y(rational(1, 1), 4 - k).mul(&YMonomial::y(rational(4, 1), -k));
            assert_eq!(chi[&m], [1, 4, 6, 4, 1][k as usize]);
        }
        assert_eq!(qchar_standard(&cfg(2, &[(1, 1), (3, 1)])).values().collect::<Vec<_>>(), [&1, &1, &1, &1]);
    }

    #[test]
    fn qt_examples() {
        let chi = qtchar_standard(&cfg(2, &[(1, 2)]));
        assert_eq!(chi.len(), 3);
        let mid = YMonomial::y(rational(1, 1), 1).mul(&YMonomial::y(rational(4, 1), -1));
        assert_eq!(format!("{}", chi.get(&mid).unwrap()), "1 + t^2");
        let chi = qtchar_standard(&cfg(2, &[(1, 4)]));
        let mid = YMonomial::y(rational(1, 1), 2).mul(&YMonomial::y(rational(4, 1), -2));
        assert_eq!(chi.get(&mid).unwrap().coeffs(), &[1, 0, 1, 0, 2, 0, 1, 0, 1]);
        for p in chi.terms().values() {
            assert!(p.is_palindromic());
        }
    }

    #[test]
    fn sort_permutation_is_stable() {
        assert_eq!(decreasing_order(&[1, 1, 2, 1, 1]), [2, 0, 1, 3, 4]);
        assert_eq!(decreasing_order(&[]), Vec::<usize>::new());
    }

    #[test]
    fn theorem_on_small_family() {
        for (q, roots) in [(2, vec![(1, 2)]), (2, vec![(1, 6)]), (3, vec![(1, 2), (4, 3)]), (2, vec![(1, 1), (3, 2), (5, 1)])] {
            let c = cfg(q, &roots);
            let thx = verify_theorem_thx(&c, &ThxOptions { modes: vec![1], window: 1, ..ThxOptions::default() }).unwrap();
            let th = verify_theorem_th(&c, &thx);
            assert!(th.passed(), "{roots:?}");
            assert_eq!(th.total_dim, 1 << c.degree());
        }
        let c = cfg(2, &[(1, 6)]);
        let thx = verify_theorem_thx(&c, &ThxOptions { modes: vec![1], window: 1, ..ThxOptions::default() }).unwrap();
        let th = verify_theorem_th(&c, &thx);
        let s3 = th.sectors.iter().find(|s| s.sector.0 == [3]).unwrap();
        // [6 choose 3]_t = 1 + t + 2t^2 + 3t^3 + 3t^4 + 3t^5 + 3t^6 + 2t^7 + t^8 + t^9
        assert_eq!(s3.sorted, [3, 3, 3, 3, 2, 2, 1, 1, 1, 1]);
        assert_eq!(s3.sigma, [3, 4, 5, 6, 2, 7, 0, 1, 8, 9]);
    }
}
