//! The Drinfel'd center of modular data, realized as the Deligne square
//! `Z = C x C~` with paired labels, together with the forgetful matrix `A`.

use crate::cyclo::{CycloSum, Cyclotomic, RootOfUnity};
use crate::error::{Error, Result};
use crate::fusion_ring::FusionRing;
use crate::matrix::Matrix;
use crate::modular_data::ModularData;

/// Modular data of `Z = C x C~` and the forgetful multiplicities.
///
/// Pairs `(a, b)` are flattened row-major: index `a * r + b`.
#[derive(Clone, Debug)]
pub struct CenterData {
    base: ModularData,
    base_ring: FusionRing,
    md: ModularData,
    /// `a[(a, b)][c] = N^c_{a,b}`, flat with row length `r`.
    forget: Vec<u64>,
    central_charge: RootOfUnity,
}

impl CenterData {
    /// Build `Z(C)` from modular `C` and its Verlinde fusion ring.
    ///
    /// `S_Z[(a,b),(c,d)] = S[a][c] S[dual b][d]`, `theta_Z(a,b) = theta_a / theta_b`,
    /// unit `(unit, unit)`, dual `(dual a, dual b)`. The central charge of
    /// `Z` must be 1.
    pub fn deligne_square(md: &ModularData, fr: &FusionRing) -> Result<Self> {
        let r = md.rank();
        if fr.rank() != r {
            return Err(Error::Dimension("fusion ring rank differs from modular data".into()));
        }
        let s = md.s();
        let theta = md.theta();
        let mut labels = Vec::with_capacity(r * r);
        let mut twists = Vec::with_capacity(r * r);
        let mut dual = Vec::with_capacity(r * r);
        for a in 0..r {
            for b in 0..r {
                labels.push(format!("({},{})", md.label(a), md.label(b)));
                twists.push(theta[a] * theta[b].inv());
                dual.push(md.dual(a) * r + md.dual(b));
            }
        }
        let s_z = Matrix::from_fn(r * r, r * r, |i, j| {
            let (a, b) = (i / r, i % r);
            let (c, d) = (j / r, j % r);
            s.get(a, c) * s.get(md.dual(b), d)
        });
        let unit = md.unit() * r + md.unit();
        let z = ModularData::from_parts(labels, s_z, twists, unit, dual);
        let central_charge = z.derive_invariants()?.central_charge;
        if !central_charge.is_one() {
            return Err(Error::Internal(format!(
                "central charge of the Deligne square is {central_charge}, expected 1"
            )));
        }
        let mut forget = Vec::with_capacity(r * r * r);
        for a in 0..r {
            for b in 0..r {
                forget.extend((0..r).map(|c| fr.n(c, a, b)));
            }
        }
        Ok(CenterData {
            base: md.clone(),
            base_ring: fr.clone(),
            md: z,
            forget,
            central_charge,
        })
    }

    /// Convenience: Verlinde fusion ring, then [`deligne_square`](Self::deligne_square).
    pub fn of(md: &ModularData) -> Result<Self> {
        let fr = FusionRing::verlinde(md)?;
        Self::deligne_square(md, &fr)
    }

    pub fn base(&self) -> &ModularData {
        &self.base
    }

    pub fn base_ring(&self) -> &FusionRing {
        &self.base_ring
    }

    pub fn md(&self) -> &ModularData {
        &self.md
    }

    pub fn base_rank(&self) -> usize {
        self.base.rank()
    }

    pub fn rank(&self) -> usize {
        self.md.rank()
    }

    pub fn central_charge(&self) -> RootOfUnity {
        self.central_charge
    }

    pub fn pair_index(&self, a: usize, b: usize) -> usize {
        a * self.base_rank() + b
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        (i / self.base_rank(), i % self.base_rank())
    }

    pub fn theta(&self, i: usize) -> RootOfUnity {
        self.md.theta()[i]
    }

    /// `A[(a, b)][c] = dim Hom(Forget(a x b~), c) = N^c_{a,b}`.
    pub fn forget(&self, i: usize, c: usize) -> u64 {
        self.forget[i * self.base_rank() + c]
    }

    /// The forgetful matrix as a cyclotomic matrix.
    pub fn forget_matrix(&self) -> Matrix {
        Matrix::from_fn(self.rank(), self.base_rank(), |i, c| {
            Cyclotomic::from_integer(self.forget(i, c) as i64)
        })
    }

    /// `S_Z * x` using the Kronecker factorization of `S_Z`, at
    /// `O(r^3)` per column instead of `O(r^4)`.
    pub fn apply_s(&self, x: &Matrix) -> Result<Matrix> {
        let r = self.base_rank();
        if x.rows() != r * r {
            return Err(Error::Dimension(format!(
                "S_Z acts on {} rows, got {}",
                r * r,
                x.rows()
            )));
        }
        let s = self.base.s();
        let cols = x.cols();
        // w[(c, b)] = sum_d S[dual b][d] x[(c, d)]
        let mut w = Vec::with_capacity(r * r * cols);
        for c in 0..r {
            for b in 0..r {
                let bd = self.base.dual(b);
                for k in 0..cols {
                    let mut acc = CycloSum::new();
                    for d in 0..r {
                        acc.add_product(s.get(bd, d), x.get(c * r + d, k));
                    }
                    w.push(acc.finish());
                }
            }
        }
        let w = Matrix::new(r * r, cols, w)?;
        Ok(Matrix::from_fn(r * r, cols, |i, k| {
            let (a, b) = (i / r, i % r);
            let mut acc = CycloSum::new();
            for c in 0..r {
                acc.add_product(s.get(a, c), w.get(c * r + b, k));
            }
            acc.finish()
        }))
    }

    /// `T_Z^k * x`.
    pub fn apply_t(&self, x: &Matrix, k: i64) -> Result<Matrix> {
        x.scale_rows(self.md.theta(), k)
    }
}
