//! Discrete Fourier transform over Q(zeta_N).
//!
//! Vectors are indexed `1..=N` as in `F(x)_k = sum_m x_m zeta^(m k)`; slot
//! `i` of a slice holds index `i + 1`.

use malachite_q::Rational;

use super::{CycloSum, Cyclotomic};
use crate::error::{Error, Result};

fn transform(x: &[Cyclotomic], sign: i64) -> Result<Vec<Cyclotomic>> {
    let n = x.len();
    if n == 0 {
        return Err(Error::Domain("empty DFT input".into()));
    }
    let n32 = u32::try_from(n).map_err(|_| Error::Domain("DFT length too large".into()))?;
    super::field::check_order(n as u64)?;
    Ok((1..=n as i64)
        .map(|k| {
            let mut s = CycloSum::new();
            for (i, xm) in x.iter().enumerate() {
                let m = i as i64 + 1;
                s.add_shifted(xm, n32, sign * m * k);
            }
            s.finish()
        })
        .collect())
}

/// `F(x)_k = sum_{m=1}^{N} x_m zeta_N^(m k)`.
pub fn dft(x: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    transform(x, 1)
}

/// `F^-1(X)_k = (1/N) sum_{m=1}^{N} X_m zeta_N^(-m k)`.
pub fn inverse_dft(x: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    let inv_n = Rational::from_unsigneds(1u64, x.len().max(1) as u64);
    Ok(transform(x, -1)?.into_iter().map(|v| v.scale(&inv_n)).collect())
}

/// Eigenvalue multiplicities of a diagonalizable operator with N-th root of
/// unity eigenvalues, from the traces `Tr(L^k)` for `k = 1..=N`. Slot `m-1`
/// of the result is the multiplicity of `zeta_N^m`.
pub fn multiplicities_from_traces(traces: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    inverse_dft(traces)
}
