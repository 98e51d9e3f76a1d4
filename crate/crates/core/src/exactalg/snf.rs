use super::matrix::{rational_rank, PolyMatrix};
use super::poly::Poly;

/// Smith normal form over `Q[t]`.
///
/// Returns `min(rows, cols)` monic divisors `d_1 | d_2 | ...`, zeros last.
pub fn smith_normal_form(m: &PolyMatrix) -> Vec<Poly> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let r = rows.min(cols);
    let mut diag = Vec::with_capacity(r);

    for p in 0..r {
        let Some((pr, pc)) = min_degree_entry(&a, p) else {
            diag.resize(r, Poly::zero());
            break;
        };
        a.swap_rows(p, pr);
        a.swap_cols(p, pc);

        loop {
            let mut dirty = false;

            for i in p + 1..rows {
                if a[(i, p)].is_zero() {
                    continue;
                }
                let (q, rem) = a[(i, p)].div_rem(&a[(p, p)]);
                a.add_row_multiple(i, p, &-q);
                if !rem.is_zero() {
                    a.swap_rows(p, i);
                    dirty = true;
                }
            }
            for j in p + 1..cols {
                if a[(p, j)].is_zero() {
                    continue;
                }
                let (q, rem) = a[(p, j)].div_rem(&a[(p, p)]);
                a.add_col_multiple(j, p, &-q);
                if !rem.is_zero() {
                    a.swap_cols(p, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }

            // Pivot row and column are clear; enforce divisibility of the rest.
            let offender = (p + 1..rows)
                .flat_map(|i| (p + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(p, p)].divides(&a[(i, j)]));
            match offender {
                Some((i, _)) => a.add_row_multiple(p, i, &Poly::one()),
                None => break,
            }
        }
        diag.push(a[(p, p)].monic());
    }
    diag
}

fn min_degree_entry(a: &PolyMatrix, p: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, (usize, usize))> = None;
    for i in p..a.rows() {
        for j in p..a.cols() {
            if let Some(d) = a[(i, j)].degree() {
                if best.is_none_or(|(bd, _)| d < bd) {
                    best = Some((d, (i, j)));
                }
            }
        }
    }
    best.map(|(_, pos)| pos)
}

/// Rank over `Q` of the constant-term matrix `m(0)`.
pub fn rank_at_zero(m: &PolyMatrix) -> usize {
    rational_rank(m.at_zero())
}

/// Sum of the degrees of the nonzero Smith divisors, i.e. the dimension of the
/// torsion part of the cokernel.
pub fn torsion_dimension(m: &PolyMatrix) -> usize {
    smith_normal_form(m).iter().filter_map(Poly::degree).sum()
}
