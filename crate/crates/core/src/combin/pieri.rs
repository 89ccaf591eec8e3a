use alloc::vec::Vec;

use super::{lambda_of, subset_of, Partition, Subset};

/// Subsets whose diagram is that of `A` plus `r` boxes, no two in one row,
/// inside the `|A| × (n - |A|)` frame.
pub fn pieri_e(a: &Subset, r: usize) -> Vec<Subset> {
    let lam = lambda_of(a);
    let m = lam.len();
    let width = a.n() - m;
    let mut out = Vec::new();
    let mut cur = lam.parts().to_vec();
    vertical(&lam, width, 0, r, &mut cur, &mut out, a.n());
    out.sort();
    out
}

fn vertical(lam: &Partition, width: usize, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Subset>, n: usize) {
    let m = cur.len();
    if left == 0 {
        out.push(subset_of(&Partition::new(cur.clone()), n).expect("stays in frame"));
        return;
    }
    if m - row < left {
        return;
    }
    // skip this row
    vertical(lam, width, row + 1, left, cur, out, n);
    // or add a box to it; the row above must still be at least as long
    let grown = lam.parts()[row] + 1;
    let above_ok = row == 0 || cur[row - 1] >= grown;
    if grown <= width && above_ok {
        cur[row] = grown;
        vertical(lam, width, row + 1, left - 1, cur, out, n);
        cur[row] = lam.parts()[row];
    }
}

/// Subsets whose diagram is that of `A` plus `r` boxes, no two in one
/// column, inside the `|A| × (n - |A|)` frame.
pub fn pieri_h(a: &Subset, r: usize) -> Vec<Subset> {
    let lam = lambda_of(a);
    let width = a.n() - lam.len();
    let mut out = Vec::new();
    let mut cur = lam.parts().to_vec();
    horizontal(&lam, width, 0, r, &mut cur, &mut out, a.n());
    out.sort();
    out
}

fn horizontal(lam: &Partition, width: usize, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Subset>, n: usize) {
    if row == cur.len() {
        if left == 0 {
            out.push(subset_of(&Partition::new(cur.clone()), n).expect("stays in frame"));
        }
        return;
    }
    // interlacing: λ_i ≤ μ_i ≤ λ_{i-1}
    let base = lam.parts()[row];
    let cap = if row == 0 { width } else { lam.parts()[row - 1] };
    for add in 0..=left.min(cap - base) {
        cur[row] = base + add;
        horizontal(lam, width, row + 1, left - add, cur, out, n);
    }
    cur[row] = base;
}
