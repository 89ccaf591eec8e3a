use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::combin::{pieri_e, pieri_h, Subset};
use crate::exact::{Rational, Sign, USeries};
use crate::linalg::SparseMatrix;
use crate::vmodule::{Basis, Sector, SpectralConfig};

type Series = USeries<Rational>;

// operator on the subsets of one group: (to, from) -> series
type LocalOp = BTreeMap<(u64, u64), Series>;

fn series(num: &[Rational], den: &[Rational], sign: Sign, order: usize) -> Series {
    USeries::from_rational(num, den, sign, order).expect("expandable for nonzero a")
}

/// `γ(u) = ∏_s (q⁻¹ - q a_s u)^{m_s} (q - q⁻¹ a_s u)^{n_s - m_s} / (1 - a_s u)^{n_s}`
/// with `a_s = a^(s) q` the coincident spectral value of group `s`.
pub fn gamma_series(cfg: &SpectralConfig, sector: &Sector, sign: Sign, order: usize) -> Series {
    let q = cfg.q().clone();
    let qi = q.recip();
    let mut acc = Series::one(sign, order);
    for (s, g) in cfg.groups().iter().enumerate() {
        let a = cfg.center(s);
        let m = sector.0[s];
        let inside = series(&[qi.clone(), -(&q * &a)], &[Rational::one(), -a.clone()], sign, order);
        let outside = series(&[q.clone(), -(&qi * &a)], &[Rational::one(), -a.clone()], sign, order);
        acc = acc.try_mul(&inside.pow(m as u32)).expect("same sign");
        acc = acc.try_mul(&outside.pow((g.size() - m) as u32)).expect("same sign");
    }
    acc
}

// Σ_t Σ_{C ∈ moves(A, t)} w^t Z_C on all subsets of {1..n}
fn pieri_op(n: usize, w: &Series, moves: fn(&Subset, usize) -> Vec<Subset>) -> LocalOp {
    let sign = w.sign();
    let order = w.order();
    let mut out = LocalOp::new();
    for mask in 0..1u64 << n {
        let a = Subset::from_mask(n, mask);
        let mut wt = Series::one(sign, order);
        for t in 0..=a.len() * (n - a.len()) {
            for c in moves(&a, t) {
                let e = out.entry((c.mask(), mask)).or_insert_with(|| Series::zero(sign, order));
                *e = e.try_add(&wt).expect("same sign");
            }
            wt = wt.try_mul(w).expect("same sign");
        }
    }
    out
}

fn compose(x: &LocalOp, y: &LocalOp) -> LocalOp {
    // (x ∘ y)(to, from) = Σ_mid x(to, mid) y(mid, from)
    let mut by_source: BTreeMap<u64, Vec<(u64, &Series)>> = BTreeMap::new();
    for (&(to, mid), xs) in x {
        by_source.entry(mid).or_default().push((to, xs));
    }
    let mut out = LocalOp::new();
    for (&(mid, from), ys) in y {
        for &(to, xs) in by_source.get(&mid).into_iter().flatten() {
            let p = xs.try_mul(ys).expect("same sign");
            match out.get_mut(&(to, from)) {
                Some(e) => *e = e.try_add(&p).expect("same sign"),
                None => {
                    out.insert((to, from), p);
                }
            }
        }
    }
    out.retain(|_, s| s.coeffs().iter().any(|c| !c.is_zero()));
    out
}

struct GroupFactors {
    inner: LocalOp,
    wh: LocalOp,
}

fn group_factors(cfg: &SpectralConfig, s: usize, sign: Sign, order: usize) -> GroupFactors {
    let q = cfg.q().clone();
    let qi = q.recip();
    let a = cfg.center(s);
    let zero = Rational::zero();
    // -q u / (q⁻¹ - q a u) and q⁻¹ u / (q - q⁻¹ a u)
    let w_in = series(&[zero.clone(), -q.clone()], &[qi.clone(), -(&q * &a)], sign, order);
    let w_wh = series(&[zero, qi.clone()], &[q.clone(), -(&qi * &a)], sign, order);
    let n = cfg.groups()[s].size();
    GroupFactors { inner: pieri_op(n, &w_in, pieri_e), wh: pieri_op(n, &w_wh, pieri_h) }
}

/// Whether the two Pieri factors of every group commute through `order`.
pub fn pieri_factors_commute(cfg: &SpectralConfig, sign: Sign, order: usize) -> bool {
    (0..cfg.groups().len()).all(|s| {
        let f = group_factors(cfg, s, sign, order);
        compose(&f.inner, &f.wh) == compose(&f.wh, &f.inner)
    })
}

/// All modes `φ^±_{±r}`, `r ≤ order`, of
/// `φ^±(u) = γ(u) · ∏_s φ_in^(s)(u) ∘ φ_wh^(s)(u)` on the Z-basis, where
/// `φ_in` moves `A^(s)` to `C ∈ e(A^(s), t)` with weight
/// `(-q u / (q⁻¹ - q a_s u))^t` and `φ_wh` moves it to `C ∈ h(A^(s), t)` with
/// weight `(q⁻¹ u / (q - q⁻¹ a_s u))^t`.
pub fn phi_combinatorial_modes(cfg: &SpectralConfig, sign: Sign, order: usize) -> Vec<SparseMatrix<Rational>> {
    let basis = Basis::new(&cfg.group_sizes());
    let dim = basis.len();
    // per group: source mask -> [(target mask, series)]
    let local: Vec<BTreeMap<u64, Vec<(u64, Series)>>> = (0..cfg.groups().len())
        .map(|s| {
            let f = group_factors(cfg, s, sign, order);
            let mut by_source: BTreeMap<u64, Vec<(u64, Series)>> = BTreeMap::new();
            for ((to, from), w) in compose(&f.inner, &f.wh) {
                by_source.entry(from).or_default().push((to, w));
            }
            by_source
        })
        .collect();
    let mut modes = vec![SparseMatrix::zeros(dim, dim); order + 1];
    for (sector, range) in basis.sectors() {
        let gamma = gamma_series(cfg, sector, sign, order);
        for col in range.clone() {
            let parts = basis.parts(col);
            // expand the tensor product group by group: (target parts, series)
            let mut acc: Vec<(Vec<Subset>, Series)> = vec![(Vec::new(), gamma.clone())];
            for (s, a) in parts.iter().enumerate() {
                let n = a.n();
                let mut next = Vec::new();
                for (to_parts, ser) in &acc {
                    for (to, w) in local[s].get(&a.mask()).into_iter().flatten() {
                        let to = *to;
                        let mut tp = to_parts.clone();
                        tp.push(Subset::from_mask(n, to));
                        next.push((tp, ser.try_mul(w).expect("same sign")));
                    }
                }
                acc = next;
            }
            for (to_parts, ser) in acc {
                let row = basis.index_of(basis.join(&to_parts)).expect("sector preserved");
                for (r, c) in ser.coeffs().iter().enumerate() {
                    modes[r].add_to(row, col, c.clone());
                }
            }
        }
    }
    modes
}

pub fn phi_combinatorial(cfg: &SpectralConfig, sign: Sign, r: usize) -> SparseMatrix<Rational> {
    phi_combinatorial_modes(cfg, sign, r).pop().expect("mode 0 exists")
}
