use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

fn pair(form: &IntMatrix, u: &[BigInt], v: &[BigInt]) -> BigInt {
    let fv = form.mul_vec(v);
    u.iter().zip(&fv).map(|(a, b)| a * b).sum()
}

fn axpy(y: &mut [BigInt], a: &BigInt, x: &[BigInt]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

/// Integral symplectic Gram–Schmidt: `P` with `Pᵀ · pairing · P = J`.
///
/// The columns of `P` are `e₁ … e_g, f₁ … f_g` with `⟨eᵢ, fᵢ⟩ = 1`. For the
/// standard form the result is the identity.
pub fn symplectic_basis(pairing: &IntMatrix) -> Result<IntMatrix> {
    let n = pairing.rows();
    if !pairing.is_square() || !n.is_multiple_of(2) {
        return Err(Error::NotUnimodular(format!("{}x{} pairing is not square of even size", n, pairing.cols())));
    }
    if &pairing.transpose() + pairing != IntMatrix::zeros(n, n) {
        return Err(Error::NotUnimodular("pairing is not skew-symmetric".into()));
    }
    let mut pool: Vec<Vec<BigInt>> = (0..n).map(|k| IntMatrix::identity(n).column(k)).collect();
    let mut es = Vec::new();
    let mut fs = Vec::new();
    while !pool.is_empty() {
        let e = pool.remove(0);
        // Euclid on the values ⟨e, v⟩ until a single vector pairs to ±1.
        loop {
            let vals: Vec<BigInt> = pool.iter().map(|v| pair(pairing, &e, v)).collect();
            let Some(k) = (0..pool.len())
                .filter(|&k| !vals[k].is_zero())
                .min_by_key(|&k| vals[k].abs())
            else {
                return Err(Error::NotUnimodular("degenerate pairing".into()));
            };
            let mut reduced = false;
            for l in 0..pool.len() {
                if l == k || vals[l].is_zero() {
                    continue;
                }
                let q = vals[l].div_floor(&vals[k]);
                let pk = pool[k].clone();
                axpy(&mut pool[l], &-q, &pk);
                reduced = true;
            }
            if !reduced {
                if !vals[k].abs().is_one() {
                    return Err(Error::NotUnimodular(format!("pairing has elementary divisor {}", vals[k].abs())));
                }
                let mut f = pool.remove(k);
                if vals[k].is_negative() {
                    f.iter_mut().for_each(|x| *x = -x.clone());
                }
                for v in pool.iter_mut() {
                    let a = pair(pairing, &f, v);
                    let b = pair(pairing, &e, v);
                    axpy(v, &a, &e);
                    axpy(v, &-b, &f);
                }
                es.push(e);
                fs.push(f);
                break;
            }
        }
    }
    let cols: Vec<Vec<BigInt>> = es.into_iter().chain(fs).collect();
    Ok(IntMatrix::from_columns(n, &cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::standard_form;

    #[test]
    fn standard_form_gives_identity() {
        for g in 1..4 {
            assert_eq!(symplectic_basis(&standard_form(g)).unwrap(), IntMatrix::identity(2 * g));
        }
    }

    #[test]
    fn rejects_degenerate_forms() {
        let two = IntMatrix::from_i64(&[vec![0, 2], vec![-2, 0]]);
        assert!(matches!(symplectic_basis(&two), Err(Error::NotUnimodular(_))));
        let sym = IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert!(symplectic_basis(&sym).is_err());
    }

    #[test]
    fn scrambled_form() {
        let omega = IntMatrix::from_i64(&[
            vec![0, 3, 2, 1],
            vec![-3, 0, 1, 1],
            vec![-2, -1, 0, 1],
            vec![-1, -1, -1, 0],
        ]);
        // det = (3·1 − 2·1 + 1·1)² = 4; not unimodular.
        assert!(symplectic_basis(&omega).is_err());
        let omega = IntMatrix::from_i64(&[
            vec![0, 3, 2, 1],
            vec![-3, 0, 1, 1],
            vec![-2, -1, 0, 0],
            vec![-1, -1, 0, 0],
        ]);
        let p = symplectic_basis(&omega).unwrap();
        assert_eq!(&(&p.transpose() * &omega) * &p, standard_form(2));
    }
}
