//! Exact linear algebra over `Q(q, z)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::coeff::RationalFn;

/// Outcome of a span-membership query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanResult<K> {
    /// Coefficients `c_j` with `Σ c_j · column_j = target`.
    InSpan(Vec<RationalFn>),
    /// The target is not a combination of the columns; `residual` holds the
    /// inconsistent coordinates after elimination.
    NotInSpan { residual: BTreeMap<K, RationalFn> },
}

/// Solves `Σ_j x_j · cols[j] = target` for sparse vectors indexed by `K`.
///
/// Gauss–Jordan elimination with full pivoting: each step takes the nonzero
/// entry of lowest [`RationalFn::complexity`] among the unused rows and
/// columns. Free variables are set to zero.
pub fn span_solve<K: Ord + Clone>(cols: &[BTreeMap<K, RationalFn>], target: &BTreeMap<K, RationalFn>) -> SpanResult<K> {
    let keys: Vec<K> = cols
        .iter()
        .flat_map(|c| c.keys())
        .chain(target.keys())
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let ncols = cols.len();
    let mut rows: Vec<Vec<RationalFn>> = keys
        .iter()
        .map(|k| {
            cols.iter()
                .chain([target])
                .map(|c| c.get(k).cloned().unwrap_or_default())
                .collect()
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row_used = vec![false; rows.len()];
    let mut col_used = vec![false; ncols];
    loop {
        let pick = rows
            .iter()
            .enumerate()
            .filter(|(r, _)| !row_used[*r])
            .flat_map(|(r, row)| {
                (0..ncols)
                    .filter(|&c| !col_used[c] && !row[c].is_zero())
                    .map(move |c| (row[c].complexity(), r, c))
            })
            .min();
        let Some((_, pr, pc)) = pick else { break };
        row_used[pr] = true;
        col_used[pc] = true;
        let inv = rows[pr][pc].inverse().expect("pivot is nonzero");
        for x in rows[pr].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let prow = rows[pr].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pr || row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push((pr, pc));
    }

    let residual: BTreeMap<K, RationalFn> = rows
        .iter()
        .enumerate()
        .filter(|(r, row)| !row_used[*r] && !row[ncols].is_zero())
        .map(|(r, row)| (keys[r].clone(), row[ncols].clone()))
        .collect();
    if !residual.is_empty() {
        return SpanResult::NotInSpan { residual };
    }
    let mut x = vec![RationalFn::zero(); ncols];
    for (r, c) in pivots {
        x[c] = rows[r][ncols].clone();
    }
    SpanResult::InSpan(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_rational;

    fn v(entries: &[(u32, &str)]) -> BTreeMap<u32, RationalFn> {
        entries.iter().map(|(k, s)| (*k, parse_rational(s).unwrap())).collect()
    }

    #[test]
    fn solves_and_detects_inconsistency() {
        let cols = vec![v(&[(0, "q"), (1, "1")]), v(&[(1, "z"), (2, "q - 1")])];
        let target = v(&[(0, "q^2"), (1, "q + z^2"), (2, "z*(q - 1)")]);
        match span_solve(&cols, &target) {
            SpanResult::InSpan(c) => {
                assert_eq!(c[0], parse_rational("q").unwrap());
                assert_eq!(c[1], parse_rational("z").unwrap());
            }
            other => panic!("{other:?}"),
        }
        let bad = v(&[(0, "q^2"), (1, "q + z^2"), (2, "z*(q - 1) + 1")]);
        assert!(matches!(span_solve(&cols, &bad), SpanResult::NotInSpan { .. }));
    }

    #[test]
    fn dependent_columns() {
        let cols = vec![v(&[(0, "1")]), v(&[(0, "q")])];
        let target = v(&[(0, "q + 1")]);
        match span_solve(&cols, &target) {
            SpanResult::InSpan(c) => {
                let lhs = &c[0] + &(&c[1] * &parse_rational("q").unwrap());
                assert_eq!(lhs, parse_rational("q + 1").unwrap());
            }
            other => panic!("{other:?}"),
        }
    }
}
