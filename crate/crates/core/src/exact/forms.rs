use num_traits::{Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;

/// Signature of a symmetric rational form by exact congruence diagonalization.
pub fn form_signature(m: &RatMatrix) -> Result<i64> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} form is not square", m.rows(), m.cols())));
    }
    let n = m.rows();
    for i in 0..n {
        for j in i + 1..n {
            if m[(i, j)] != m[(j, i)] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    let mut a = m.clone();
    let mut sig = 0i64;
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(p) = (k + 1..n).find(|&p| !a[(p, p)].is_zero()) {
                a.swap_rows(k, p);
                a.swap_cols(k, p);
            } else if let Some((i, j)) = first_offdiag(&a, k) {
                // All remaining diagonal entries vanish, so e_i + e_j has value 2·a_ij ≠ 0.
                let one = Rational::from_integer(1.into());
                a.swap_rows(k, i);
                a.swap_cols(k, i);
                a.add_row_multiple(k, j, &one);
                a.add_col_multiple(k, j, &one);
            } else {
                break;
            }
        }
        let pivot = a[(k, k)].clone();
        if pivot.is_zero() {
            continue;
        }
        sig += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = -(&a[(i, k)] / &pivot);
            a.add_row_multiple(i, k, &f);
            a.add_col_multiple(i, k, &f);
        }
    }
    Ok(sig)
}

fn first_offdiag(a: &RatMatrix, k: usize) -> Option<(usize, usize)> {
    let n = a.rows();
    for i in k..n {
        for j in i + 1..n {
            if !a[(i, j)].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::integer;

    fn form(rows: &[Vec<i64>]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| integer(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(form_signature(&form(&[vec![1, 0], vec![0, -1]])).unwrap(), 0);
        assert_eq!(form_signature(&form(&[vec![0, 1], vec![1, 0]])).unwrap(), 0);
        assert_eq!(form_signature(&form(&[vec![2, 1], vec![1, 2]])).unwrap(), 2);
        assert_eq!(form_signature(&form(&[vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0]])).unwrap(), 0);
        assert_eq!(form_signature(&form(&[vec![0, 0, 1], vec![0, -1, 0], vec![1, 0, 0]])).unwrap(), -1);
        assert_eq!(form_signature(&RatMatrix::zeros(0, 0)).unwrap(), 0);
        assert_eq!(
            form_signature(&form(&[vec![1, 2], vec![3, 1]])),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        );
    }
}
