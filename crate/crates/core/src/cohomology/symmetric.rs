use crate::lie::{generating_set, BilinearForm, LieAlgebra};
use crate::linalg::{Matrix, Rational, RowEchelon};

fn var(n: usize, a: usize, b: usize) -> usize {
    let (i, j) = if a <= b { (a, b) } else { (b, a) };
    // row-major index into the upper triangle
    i * n - i * (i + 1) / 2 + j
}

/// Basis of the invariant symmetric bilinear forms on `k`.
pub fn invariant_symmetric_forms(k: &LieAlgebra) -> Vec<BilinearForm> {
    let n = k.dim();
    let vars = n * (n + 1) / 2;
    let mut e = RowEchelon::new(vars);
    for x in generating_set(k) {
        for y in 0..n {
            for z in y..n {
                // B([x,y], z) + B(y, [x,z])
                let mut row: Vec<(usize, Rational)> = Vec::new();
                for (l, c) in k.bracket_basis(x, y) {
                    row.push((var(n, *l, z), c.clone()));
                }
                for (l, c) in k.bracket_basis(x, z) {
                    row.push((var(n, y, *l), c.clone()));
                }
                row.sort_by_key(|e| e.0);
                let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(row.len());
                for (i, v) in row {
                    match merged.last_mut() {
                        Some((j, w)) if *j == i => *w += v,
                        _ => merged.push((i, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                if !merged.is_empty() {
                    e.insert_sparse(&merged);
                }
            }
        }
    }
    e.kernel_basis()
        .into_iter()
        .map(|sol| {
            let mut g = Matrix::zeros(n, n);
            for a in 0..n {
                for b in 0..n {
                    g.set(a, b, sol[var(n, a, b)].clone());
                }
            }
            BilinearForm::new(g)
        })
        .collect()
}
