use num_traits::{One, Zero};

use super::matrix::{left_null_vector, rref, Matrix};
use super::poly::{Field, Poly, Valuation};
use crate::{Error, Result};

/// Determinant by Bareiss fraction-free elimination; every intermediate
/// division is exact in `F[t]`.
pub fn det_exact<F: Field>(m: &Matrix<Poly<F>>) -> Result<Poly<F>> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Poly::zero());
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step is exact");
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// `ord_t` of the determinant.
pub fn ord_det<F: Field>(m: &Matrix<Poly<F>>) -> Result<Valuation> {
    Ok(det_exact(m)?.ord_t())
}

fn make_primitive<F: Field>(row: &mut [Poly<F>]) {
    let mut g = Poly::zero();
    for p in row.iter() {
        if !p.is_zero() {
            g = Poly::gcd(&g, p);
            if g.degree() == Some(0) {
                break;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for p in row.iter_mut() {
        *p = p.div_exact(&g).expect("content divides");
    }
}

/// Fraction-free reduced echelon form over `F(t)`.
///
/// Returns nonzero primitive rows spanning the same `F(t)`-space as the input
/// and their pivot columns; in each pivot column only the pivot row is
/// nonzero.
pub fn reduced_echelon<F: Field>(
    rows: &[Vec<Poly<F>>],
    cols: usize,
) -> (Vec<Vec<Poly<F>>>, Vec<usize>) {
    let mut rows: Vec<Vec<Poly<F>>> = rows.to_vec();
    for r in rows.iter_mut() {
        make_primitive(r);
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| (rows[i][c].degree(), i))
        else {
            continue;
        };
        rows.swap(r, p);
        let a = rows[r][c].clone();
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let b = rows[i][c].clone();
            let new: Vec<Poly<F>> = rows[i]
                .iter()
                .zip(&rows[r])
                .map(|(x, y)| &(&a * x) - &(&b * y))
                .collect();
            rows[i] = new;
            make_primitive(&mut rows[i]);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Rank over the fraction field `F(t)`.
pub fn rank<F: Field>(m: &Matrix<Poly<F>>) -> usize {
    reduced_echelon(&m.to_rows(), m.cols()).0.len()
}

/// Basis of the right kernel over `F(t)`, as primitive polynomial vectors.
pub fn kernel_basis<F: Field>(m: &Matrix<Poly<F>>) -> Vec<Vec<Poly<F>>> {
    let cols = m.cols();
    let (rows, pivots) = reduced_echelon(&m.to_rows(), cols);
    let mut out = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut l = Poly::one();
        for (i, &pc) in pivots.iter().enumerate() {
            if !rows[i][f].is_zero() {
                let p = &rows[i][pc];
                let g = Poly::gcd(&l, p);
                l = (&l * p).div_exact(&g).unwrap();
            }
        }
        let mut v = vec![Poly::zero(); cols];
        v[f] = l.clone();
        for (i, &pc) in pivots.iter().enumerate() {
            if !rows[i][f].is_zero() {
                let q = l.div_exact(&rows[i][pc]).unwrap();
                v[pc] = -(&rows[i][f] * &q);
            }
        }
        make_primitive(&mut v);
        out.push(v);
    }
    out
}

/// Basis of the saturation `(span ⊗ F(t)) ∩ R^d` over the local ring `R`
/// at `(t)`.
///
/// Rows are first made independent over `F(t)`; then while their values at
/// `t = 0` are linearly dependent, the dependent combination is divided by
/// `t` and replaces one of its rows. On exit the constant terms of the rows
/// are independent, which is exactly saturation over `R`.
pub fn saturate_at_t<F: Field>(span: &Matrix<Poly<F>>, ambient_dim: usize) -> Matrix<Poly<F>> {
    if span.rows() == 0 {
        return Matrix::with_cols(Vec::new(), ambient_dim);
    }
    assert_eq!(span.cols(), ambient_dim);
    let (mut rows, _) = reduced_echelon(&span.to_rows(), ambient_dim);
    loop {
        let at_zero: Vec<Vec<F>> =
            rows.iter().map(|r| r.iter().map(|p| p.constant_term()).collect()).collect();
        let Some(c) = left_null_vector(&at_zero, ambient_dim) else {
            break;
        };
        let i = c.iter().position(|x| !x.is_zero()).unwrap();
        let mut comb = vec![Poly::zero(); ambient_dim];
        for (cj, row) in c.iter().zip(&rows) {
            if cj.is_zero() {
                continue;
            }
            for (acc, p) in comb.iter_mut().zip(row) {
                *acc += &p.scale_by(cj);
            }
        }
        rows[i] = comb.iter().map(|p| p.shift_down(1)).collect();
    }
    Matrix::with_cols(rows, ambient_dim)
}

/// `ord_t` of the elementary divisors over the local ring at `(t)`, in
/// ascending order, one per unit of rank.
///
/// Pivots on an entry of minimal valuation, clears its column with
/// unit-scaled row operations, and drops the pivot row and column.
pub fn local_smith_ords<F: Field>(m: &Matrix<Poly<F>>) -> Vec<u32> {
    let mut rows = m.to_rows();
    let mut live_rows: Vec<usize> = (0..m.rows()).collect();
    let mut live_cols: Vec<usize> = (0..m.cols()).collect();
    let mut out = Vec::new();
    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        for &i in &live_rows {
            for &j in &live_cols {
                if let Valuation::Finite(k) = rows[i][j].ord_t() {
                    if best.is_none_or(|(b, _, _)| k < b) {
                        best = Some((k, i, j));
                    }
                }
            }
        }
        let Some((k, pi, pj)) = best else { break };
        out.push(k);
        let unit = rows[pi][pj].shift_down(k as usize);
        for &i in &live_rows {
            if i == pi || rows[i][pj].is_zero() {
                continue;
            }
            let b = rows[i][pj].shift_down(k as usize);
            let new: Vec<Poly<F>> = live_cols
                .iter()
                .map(|&j| &(&unit * &rows[i][j]) - &(&b * &rows[pi][j]))
                .collect();
            for (&j, v) in live_cols.iter().zip(new) {
                rows[i][j] = v;
            }
        }
        live_rows.retain(|&i| i != pi);
        live_cols.retain(|&j| j != pj);
    }
    out.sort_unstable();
    out
}

/// Rows are independent at `t = 0`, i.e. span a saturated submodule over
/// the local ring.
pub fn is_saturated<F: Field>(rows: &Matrix<Poly<F>>) -> bool {
    let at_zero: Vec<Vec<F>> = rows.to_rows().iter().map(|r| r.iter().map(|p| p.constant_term()).collect()).collect();
    left_null_vector(&at_zero, rows.cols()).is_none()
}

fn check_radical<F: Field>(gram: &Matrix<Poly<F>>, sub: &Matrix<Poly<F>>) -> Result<()> {
    if sub.rows() > 0 && !sub.mul(gram).is_zero() {
        return Err(Error::NotInRadical);
    }
    Ok(())
}

fn check_shapes<F: Field>(gram: &Matrix<Poly<F>>, sub: &Matrix<Poly<F>>) -> Result<()> {
    if !gram.is_square() {
        return Err(Error::NonSquare { rows: gram.rows(), cols: gram.cols() });
    }
    if sub.rows() > 0 && sub.cols() != gram.rows() {
        return Err(Error::Dimension(format!(
            "submodule rows have length {}, ambient dimension is {}",
            sub.cols(),
            gram.rows()
        )));
    }
    Ok(())
}

/// `ord_t` of the determinant of the form induced on `lattice / sub`.
///
/// `sub` must be saturated and lie in the radical of `gram`. The complement
/// is spanned by the standard basis vectors outside the pivot columns of
/// `sub` at `t = 0`.
pub fn complement_gram_ord<F: Field>(
    gram: &Matrix<Poly<F>>,
    sub: &Matrix<Poly<F>>,
) -> Result<Valuation> {
    check_shapes(gram, sub)?;
    if sub.rows() == 0 {
        return ord_det(gram);
    }
    if !is_saturated(sub) {
        return Err(Error::NotSaturated);
    }
    check_radical(gram, sub)?;
    let (_, pivots) = rref(sub.eval_at_zero().to_rows(), sub.cols());
    let comp: Vec<usize> = (0..gram.rows()).filter(|c| !pivots.contains(c)).collect();
    ord_det(&gram.submatrix(&comp, &comp))
}

/// Same as [`complement_gram_ord`] with an explicit complement basis; the
/// rows of `sub` and `complement` together must be a basis of the lattice
/// over the local ring.
pub fn complement_gram_ord_with<F: Field>(
    gram: &Matrix<Poly<F>>,
    sub: &Matrix<Poly<F>>,
    complement: &Matrix<Poly<F>>,
) -> Result<Valuation> {
    check_shapes(gram, sub)?;
    if sub.rows() > 0 && !is_saturated(sub) {
        return Err(Error::NotSaturated);
    }
    check_radical(gram, sub)?;
    let n = gram.rows();
    if sub.rows() + complement.rows() != n || complement.cols() != n {
        return Err(Error::BadComplement);
    }
    let mut all = sub.to_rows();
    all.extend(complement.to_rows());
    let basis = Matrix::with_cols(all, n);
    if !det_exact(&basis)?.is_unit_at_zero() {
        return Err(Error::BadComplement);
    }
    let induced = complement.mul(gram).mul(&complement.transpose());
    ord_det(&induced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::{LocalMatrix, PolyT, Rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(cs: &[i64]) -> PolyT {
        Poly::new(cs.iter().map(|&c| int(c)).collect())
    }

    fn m(rows: Vec<Vec<PolyT>>) -> LocalMatrix {
        Matrix::from_rows(rows)
    }

    fn cofactor_det(a: &[Vec<PolyT>]) -> PolyT {
        let n = a.len();
        if n == 0 {
            return Poly::one();
        }
        let mut acc = Poly::zero();
        for j in 0..n {
            let minor: Vec<Vec<PolyT>> = a[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &a[0][j] * &cofactor_det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn det_examples() {
        let tri = m(vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[]), p(&[0, 1])]]);
        assert_eq!(det_exact(&tri).unwrap(), p(&[0, 0, 1]));
        assert_eq!(det_exact(&m(vec![vec![p(&[1])]])).unwrap(), p(&[1]));
        let rect = Matrix::with_cols(vec![vec![p(&[1]), p(&[2])]], 2);
        assert_eq!(det_exact(&rect), Err(Error::NonSquare { rows: 1, cols: 2 }));
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=4 {
            for _ in 0..20 {
                let rows: Vec<Vec<PolyT>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                let deg = rng.gen_range(0..3);
                                Poly::new(
                                    (0..=deg)
                                        .map(|_| Rat::new(rng.gen_range(-3..=3).into(), rng.gen_range(1..=3).into()))
                                        .collect(),
                                )
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(det_exact(&m(rows.clone())).unwrap(), cofactor_det(&rows));
            }
        }
    }

    #[test]
    fn saturation_examples() {
        let s = saturate_at_t(&m(vec![vec![p(&[0, 1]), p(&[0, 1])]]), 2);
        assert_eq!(s.to_rows(), vec![vec![p(&[1]), p(&[1])]]);
        let s = saturate_at_t(&m(vec![vec![p(&[1]), p(&[])]]), 2);
        assert_eq!(s.to_rows(), vec![vec![p(&[1]), p(&[])]]);
        let empty = saturate_at_t(&Matrix::<PolyT>::with_cols(vec![], 3), 3);
        assert_eq!(empty.rows(), 0);
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[0, 0, 1]), p(&[0, 1])]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 1);
        let v = Matrix::with_cols(k.clone(), 2).transpose();
        assert!(a.mul(&v).is_zero());
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn smith_ords_diagonal() {
        let a = m(vec![vec![p(&[0, 0, 1]), p(&[])], vec![p(&[]), p(&[0, 1])]]);
        assert_eq!(local_smith_ords(&a), vec![1, 2]);
        let b = m(vec![vec![p(&[0, 1]), p(&[1])]]);
        assert_eq!(local_smith_ords(&b), vec![0]);
    }

    #[test]
    fn complement_examples() {
        let g = m(vec![vec![p(&[0, 1])]]);
        let empty = Matrix::with_cols(vec![], 1);
        assert_eq!(complement_gram_ord(&g, &empty).unwrap(), Valuation::Finite(1));
        let id = Matrix::<PolyT>::identity(2);
        assert_eq!(complement_gram_ord(&id, &Matrix::with_cols(vec![], 2)).unwrap(), Valuation::Finite(0));
    }

    #[test]
    fn complement_rejects_unsaturated_and_non_radical() {
        // gram with radical (1,1)
        let g = m(vec![vec![p(&[0, 1]), p(&[0, -1])], vec![p(&[0, -1]), p(&[0, 1])]]);
        let unsat = m(vec![vec![p(&[0, 1]), p(&[0, 1])]]);
        assert_eq!(complement_gram_ord(&g, &unsat), Err(Error::NotSaturated));
        let off = m(vec![vec![p(&[1]), p(&[])]]);
        assert_eq!(complement_gram_ord(&g, &off), Err(Error::NotInRadical));
        let good = m(vec![vec![p(&[1]), p(&[1])]]);
        assert_eq!(complement_gram_ord(&g, &good).unwrap(), Valuation::Finite(1));
    }
}
