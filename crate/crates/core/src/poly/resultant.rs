use super::{Coefficient, MultiPoly};

/// Sylvester matrix of `f` and `g` with respect to `var`: `deg g` shifted
/// rows of `f`'s coefficients followed by `deg f` shifted rows of `g`'s,
/// highest degree first.
pub fn sylvester_matrix<C: Coefficient>(
    f: &MultiPoly<C>,
    g: &MultiPoly<C>,
    var: usize,
) -> Vec<Vec<MultiPoly<C>>> {
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let m = fc.len().saturating_sub(1);
    let n = gc.len().saturating_sub(1);
    let size = m + n;
    let zero = f.zero_like();
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in fc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in gc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Fraction-free (Bareiss) determinant over polynomial entries.
fn bareiss_determinant<C: Coefficient>(mut a: Vec<Vec<MultiPoly<C>>>, one: MultiPoly<C>) -> MultiPoly<C> {
    let n = a.len();
    if n == 0 {
        return one;
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return prev.zero_like();
            };
            a.swap(k, pivot);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = &a[i][j] * &a[k][k];
                let rhs = &a[i][k] * &a[k][j];
                let num = &lhs - &rhs;
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step divides exactly");
            }
            a[i][k] = prev.zero_like();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Resultant of `f` and `g` eliminating `var`.
pub fn resultant<C: Coefficient>(f: &MultiPoly<C>, g: &MultiPoly<C>, var: usize) -> MultiPoly<C> {
    if f.is_zero() || g.is_zero() {
        return f.zero_like();
    }
    let m = f.degree_in(var);
    let n = g.degree_in(var);
    match (m, n) {
        (0, 0) => f.one_like(),
        (_, 0) => g.pow(m),
        (0, _) => f.pow(n),
        _ => bareiss_determinant(sylvester_matrix(f, g, var), f.one_like()),
    }
}
