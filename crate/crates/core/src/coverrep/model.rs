//! Chain-level model of the cyclic branched cover and its homology.
//!
//! Base: the sphere with branch points `α_0 … α_{m−1}` (0-based here) and
//! generators `x_j` of the free fundamental group, each a loop around `α_j`.
//! The cover is cut along slits between consecutive branch points; the dual
//! cell complex has one vertex per sheet, edges `E_i^a` crossing slit `i`
//! from sheet `a` to sheet `a + s_i` with `s_i = l_0 + … + l_i`, and one face
//! around each branch point. A homeomorphism of the base acts on the free
//! group; its lift fixing the fiber over the base point acts on lifted loops
//! through Fox calculus, and the map `F` below carries lifted loops to dual
//! chains.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::basis::symplectic_basis;
use crate::error::{Error, Result};
use crate::linalg::{diagonalize, int_kernel, int_solve, IntMatrix};
use crate::symplectic::{check_symplectic, standard_form, SpMatrix};

/// Element of the free group: `(generator, inverted)` letters.
pub(crate) type FreeWord = Vec<(usize, bool)>;

fn reduce(w: FreeWord) -> FreeWord {
    let mut out: FreeWord = Vec::with_capacity(w.len());
    for l in w {
        if out.last() == Some(&(l.0, !l.1)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn invert(w: &FreeWord) -> FreeWord {
    w.iter().rev().map(|&(g, inv)| (g, !inv)).collect()
}

/// Free group automorphism given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Automorphism(pub(crate) Vec<FreeWord>);

impl Automorphism {
    pub(crate) fn identity(m: usize) -> Automorphism {
        Automorphism((0..m).map(|j| vec![(j, false)]).collect())
    }

    /// Half twist exchanging `α_i` and `α_{i+1}` counterclockwise.
    pub(crate) fn half_twist(m: usize, i: usize, inverse: bool) -> Automorphism {
        let mut imgs = Automorphism::identity(m).0;
        if inverse {
            imgs[i] = vec![(i, true), (i + 1, false), (i, false)];
            imgs[i + 1] = vec![(i, false)];
        } else {
            imgs[i] = vec![(i + 1, false)];
            imgs[i + 1] = vec![(i + 1, false), (i, false), (i + 1, true)];
        }
        Automorphism(imgs)
    }

    pub(crate) fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = Vec::new();
        for &(g, inv) in w {
            if inv {
                out.extend(invert(&self.0[g]));
            } else {
                out.extend(self.0[g].iter().copied());
            }
        }
        reduce(out)
    }

    /// `self ∘ other`.
    pub(crate) fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism(other.0.iter().map(|w| self.apply(w)).collect())
    }
}

/// Homology model of one cover, with a fixed symplectic basis.
pub(crate) struct Model {
    d: usize,
    m: usize,
    labels: Vec<usize>,
    genus: usize,
    /// Fox lifts to dual chains.
    fox_to_dual: IntMatrix,
    /// Columns: Fox cycles mapping to the symplectic basis of H₁.
    lifts: IntMatrix,
    /// Dual cycles to symplectic coordinates.
    projection: IntMatrix,
    /// Dual cycles representing the symplectic basis.
    basis_cycles: IntMatrix,
}

impl Model {
    pub(crate) fn build(d: usize, labels: &[usize], genus: usize) -> Result<Model> {
        let m = labels.len();
        let ne = d * (m - 1);
        let shift: Vec<usize> = labels.iter().scan(0, |s, &l| {
            *s = (*s + l) % d;
            Some(*s)
        }).collect();
        let edge = |a: usize, i: usize| (a % d) * (m - 1) + i;

        let mut d1 = IntMatrix::zeros(d, ne);
        for a in 0..d {
            for i in 0..m - 1 {
                d1[((a + shift[i]) % d, edge(a, i))] += BigInt::one();
                d1[(a, edge(a, i))] -= BigInt::one();
            }
        }
        let mut fox_to_dual = IntMatrix::zeros(ne, d * m);
        for a in 0..d {
            for i in 0..m {
                let col = a * m + i;
                if i + 1 < m {
                    fox_to_dual[(edge(a, i), col)] += BigInt::one();
                }
                if i >= 1 {
                    fox_to_dual[(edge(a + labels[i], i - 1), col)] -= BigInt::one();
                }
            }
        }
        let mut d2 = IntMatrix::zeros(ne, m);
        for i in 0..m {
            for a in 0..d {
                for r in 0..ne {
                    let v = fox_to_dual[(r, a * m + i)].clone();
                    d2[(r, i)] += v;
                }
            }
        }
        if !(&d1 * &d2).is_zero() {
            return Err(Error::ModelInconsistent("dual complex boundary maps do not compose to zero".into()));
        }

        // H₁ = Z₁ / B₁ in coordinates on the cycle lattice.
        let z1 = int_kernel(&d1);
        let r = z1.cols();
        let zdz = diagonalize(&z1);
        if zdz.rank != r || zdz.diag.iter().any(|x| !(x.is_one() || (-x).is_one())) {
            return Err(Error::ModelInconsistent("cycle lattice is not saturated".into()));
        }
        // Left inverse of Z₁: V D⁻¹ (first r rows of U).
        let dinv = IntMatrix::from_fn(r, r, |i, j| if i == j { zdz.diag[i].clone() } else { BigInt::zero() });
        let zleft = &(&zdz.v * &dinv) * &zdz.u.row_block(0..r);
        let bcoords = &zleft * &d2;
        let bdz = diagonalize(&bcoords);
        let rho = bdz.rank;
        if bdz.diag[..rho].iter().any(|x| !(x.is_one() || (-x).is_one())) {
            return Err(Error::ModelInconsistent("H₁ of the closed surface has torsion".into()));
        }
        if r - rho != 2 * genus {
            return Err(Error::ModelInconsistent(format!("rank H₁ = {} but 2g = {}", r - rho, 2 * genus)));
        }
        let n = 2 * genus;
        let proj = &bdz.u.row_block(rho..r) * &zleft;
        let mut cycles = Vec::with_capacity(n);
        for k in 0..n {
            let mut e = vec![BigInt::zero(); r];
            e[rho + k] = BigInt::one();
            let w = int_solve(&bdz.u, &e).ok_or_else(|| Error::ModelInconsistent("singular transform".into()))?;
            cycles.push(z1.mul_vec(&w));
        }
        let cycles = IntMatrix::from_columns(ne, &cycles);

        let mut model = Model {
            d,
            m,
            labels: labels.to_vec(),
            genus,
            fox_to_dual,
            lifts: IntMatrix::zeros(d * m, n),
            projection: proj,
            basis_cycles: cycles,
        };
        let omega = model.intersection_matrix(&shift);
        let p = symplectic_basis(&omega)
            .map_err(|e| Error::ModelInconsistent(format!("intersection form: {e}")))?;
        // P⁻¹ = −J Pᵀ Ω.
        let pinv = -&(&(&standard_form(genus) * &p.transpose()) * &omega);
        model.basis_cycles = &model.basis_cycles * &p;
        model.projection = &pinv * &model.projection;

        // Fox cycles over each basis cycle, modulo boundaries.
        let fox_boundary = {
            let mut b = IntMatrix::zeros(d, d * m);
            for a in 0..d {
                for i in 0..m {
                    b[((a + labels[i]) % d, a * m + i)] += BigInt::one();
                    b[(a, a * m + i)] -= BigInt::one();
                }
            }
            b
        };
        let kf = int_kernel(&fox_boundary);
        let system = (&model.fox_to_dual * &kf).hstack(&d2);
        let mut lifts = Vec::with_capacity(n);
        for k in 0..n {
            let z = model.basis_cycles.column(k);
            let sol = int_solve(&system, &z)
                .ok_or_else(|| Error::ModelInconsistent("basis cycle is not a lifted loop".into()))?;
            lifts.push(kf.mul_vec(&sol[..kf.cols()]));
        }
        model.lifts = IntMatrix::from_columns(d * m, &lifts);

        let check = model.intersection_matrix(&shift);
        if check != standard_form(genus) {
            return Err(Error::ModelInconsistent("symplectic basis does not realize J".into()));
        }
        Ok(model)
    }

    pub(crate) fn genus(&self) -> usize {
        self.genus
    }

    /// Fox vector of a loop lifted from sheet 0: index `a·m + j`.
    fn fox_vector(&self, w: &FreeWord) -> (Vec<BigInt>, usize) {
        let (d, m) = (self.d, self.m);
        let mut v = vec![BigInt::zero(); d * m];
        let mut sheet = 0;
        for &(j, inv) in w {
            if inv {
                sheet = (sheet + d - self.labels[j]) % d;
                v[sheet * m + j] -= BigInt::one();
            } else {
                v[sheet * m + j] += BigInt::one();
                sheet = (sheet + self.labels[j]) % d;
            }
        }
        (v, sheet)
    }

    /// Action on H₁ of the lift of `h` fixing the fiber over the base point.
    pub(crate) fn action(&self, h: &Automorphism) -> Result<SpMatrix> {
        let (d, m) = (self.d, self.m);
        let mut lifted = IntMatrix::zeros(d * m, d * m);
        for j in 0..m {
            let (v, end) = self.fox_vector(&h.0[j]);
            if end != self.labels[j] % d {
                return Err(Error::InvalidWord(format!(
                    "the map does not preserve the cover monodromy at branch point {}",
                    j + 1
                )));
            }
            for a in 0..d {
                for b in 0..d {
                    for k in 0..m {
                        if !v[b * m + k].is_zero() {
                            lifted[(((a + b) % d) * m + k, a * m + j)] += v[b * m + k].clone();
                        }
                    }
                }
            }
        }
        let image = &self.fox_to_dual * &(&lifted * &self.lifts);
        let mat = &self.projection * &image;
        check_symplectic(mat).map_err(|e| Error::ModelInconsistent(format!("generator action: {e}")))
    }

    /// Intersection numbers of the current basis cycles.
    fn intersection_matrix(&self, shift: &[usize]) -> IntMatrix {
        let n = self.basis_cycles.cols();
        let cols: Vec<Vec<BigInt>> = (0..n).map(|k| self.basis_cycles.column(k)).collect();
        let ports: Vec<Vec<(usize, usize, BigInt)>> = cols.iter().map(|z| self.ports(z, shift)).collect();
        IntMatrix::from_fn(n, n, |a, b| self.intersect(&ports[a], &ports[b]))
    }

    /// Port coefficients `(sheet, port position, coefficient)`.
    ///
    /// Ports around the vertex of each sheet are ordered counterclockwise:
    /// the upper sides of slits `0 … m−2`, then the lower sides in reverse.
    fn ports(&self, z: &[BigInt], shift: &[usize]) -> Vec<(usize, usize, BigInt)> {
        let (d, m) = (self.d, self.m);
        let top = |i: usize| i;
        let bot = |i: usize| 2 * (m - 1) - 1 - i;
        let mut out = Vec::new();
        for a in 0..d {
            for i in 0..m - 1 {
                let c = &z[a * (m - 1) + i];
                if c.is_zero() {
                    continue;
                }
                out.push((a, bot(i), c.clone()));
                out.push(((a + shift[i]) % d, top(i), -c.clone()));
            }
        }
        out
    }

    fn intersect(&self, p: &[(usize, usize, BigInt)], q: &[(usize, usize, BigInt)]) -> BigInt {
        let m = self.m;
        let mut total = BigInt::zero();
        for (sa, pa, ca) in p {
            for (sb, pb, cb) in q {
                if sa != sb {
                    continue;
                }
                let is_top = *pb < m - 1;
                if pa < pb || (pa == pb && is_top) {
                    total += ca * cb;
                }
            }
        }
        total
    }

    #[cfg(test)]
    fn dual_edges(&self) -> usize {
        self.d * (self.m - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_twist_inverse() {
        for i in 0..3 {
            let a = Automorphism::half_twist(4, i, false);
            let b = Automorphism::half_twist(4, i, true);
            assert_eq!(a.compose(&b), Automorphism::identity(4));
            assert_eq!(b.compose(&a), Automorphism::identity(4));
        }
    }

    #[test]
    fn builds_genus_one_double_cover() {
        let model = Model::build(2, &[1, 1, 1, 1], 1).unwrap();
        assert_eq!(model.genus(), 1);
        assert_eq!(model.dual_edges(), 6);
    }
}
