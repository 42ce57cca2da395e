//! Fusion rings: Verlinde fusion rules, tensor powers, hom dimensions.

use serde::{Deserialize, Serialize};

use crate::cyclo::{CycloSum, Cyclotomic};
use crate::error::{Error, Result};
use crate::modular_data::ModularData;

/// Structure constants `N^c_{a,b}` of a based ring with unit and duality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    rank: usize,
    unit: usize,
    dual: Vec<usize>,
    /// Flat `[c][a][b]`.
    n: Vec<u64>,
}

/// A semisimple object `sum m_i x_i`, stored densely by simple index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ObjectMultiset {
    counts: Vec<u64>,
}

impl ObjectMultiset {
    pub fn zero(rank: usize) -> Self {
        ObjectMultiset {
            counts: vec![0; rank],
        }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut m = Self::zero(rank);
        m.counts[i] = 1;
        m
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        ObjectMultiset { counts }
    }

    pub fn rank(&self) -> usize {
        self.counts.len()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.counts[i]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `(index, multiplicity)` for every simple that occurs.
    pub fn entries(&self) -> Vec<(usize, u64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i, m))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&m| m == 0)
    }

    pub fn add(&mut self, other: &ObjectMultiset) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }
}

impl FusionRing {
    /// Fusion rules of modular data by the Verlinde formula
    /// `N^a_{c,d} = sum_e S[c][e] S[d][e] conj(S[a][e]) / S[unit][e]`.
    ///
    /// Every entry must come out a non-negative integer; the first one that
    /// does not is reported as a [`Error::ModularityViolation`].
    pub fn verlinde(md: &ModularData) -> Result<Self> {
        let r = md.rank();
        let u = md.unit();
        let s = md.s();
        let inv_unit: Vec<Cyclotomic> = (0..r)
            .map(|e| s.get(u, e).inverse())
            .collect::<Result<_>>()?;
        let conj: Vec<Vec<Cyclotomic>> = (0..r)
            .map(|a| s.row(a).iter().map(Cyclotomic::conj).collect())
            .collect();
        let mut n = vec![0u64; r * r * r];
        for c in 0..r {
            for d in c..r {
                let w: Vec<Cyclotomic> = (0..r)
                    .map(|e| &(s.get(c, e) * s.get(d, e)) * &inv_unit[e])
                    .collect();
                for a in 0..r {
                    let mut acc = CycloSum::new();
                    for e in 0..r {
                        acc.add_product(&w[e], &conj[a][e]);
                    }
                    let v = acc.finish();
                    let m = v
                        .as_integer()
                        .and_then(|i| u64::try_from(&i).ok())
                        .ok_or_else(|| Error::ModularityViolation {
                            a,
                            c,
                            d,
                            value: v.to_string(),
                        })?;
                    n[(a * r + c) * r + d] = m;
                    n[(a * r + d) * r + c] = m;
                }
            }
        }
        Self::from_tensor(r, u, md.duals().to_vec(), n)
    }

    /// Wrap a tensor `n[(c * r + a) * r + b] = N^c_{a,b}`, checking the
    /// fusion-ring axioms.
    pub fn from_tensor(rank: usize, unit: usize, dual: Vec<usize>, n: Vec<u64>) -> Result<Self> {
        if n.len() != rank * rank * rank || dual.len() != rank || unit >= rank {
            return Err(Error::Dimension("fusion tensor shape".into()));
        }
        let fr = FusionRing { rank, unit, dual, n };
        fr.check_axioms()?;
        Ok(fr)
    }

    /// Verify unit, duality, associativity and the `N^c_{a,b} = N^{c*}_{b*,a*}`
    /// symmetry.
    pub fn check_axioms(&self) -> Result<()> {
        let r = self.rank;
        let (u, d) = (self.unit, &self.dual);
        let fail = |msg: String| Err(Error::Data(format!("fusion ring axiom: {msg}")));
        for a in 0..r {
            for c in 0..r {
                let delta = (a == c) as u64;
                if self.n(c, a, u) != delta || self.n(c, u, a) != delta {
                    return fail(format!("unit law at ({}, {})", a + 1, c + 1));
                }
            }
            for b in 0..r {
                if self.n(u, a, b) != (b == d[a]) as u64 {
                    return fail(format!("duality at ({}, {})", a + 1, b + 1));
                }
                for c in 0..r {
                    if self.n(c, a, b) != self.n(d[c], d[b], d[a]) {
                        return fail(format!("conjugation symmetry at ({}, {}, {})", c + 1, a + 1, b + 1));
                    }
                }
            }
        }
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for x in 0..r {
                        let left: u64 = (0..r).map(|e| self.n(x, a, e) * self.n(e, b, c)).sum();
                        let right: u64 = (0..r).map(|e| self.n(e, a, b) * self.n(x, e, c)).sum();
                        if left != right {
                            return fail(format!(
                                "associativity at ({}, {}, {}; {})",
                                a + 1,
                                b + 1,
                                c + 1,
                                x + 1
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    /// `N^c_{a,b}`.
    pub fn n(&self, c: usize, a: usize, b: usize) -> u64 {
        self.n[(c * self.rank + a) * self.rank + b]
    }

    /// `x (x) y`.
    pub fn fuse(&self, x: &ObjectMultiset, y: &ObjectMultiset) -> ObjectMultiset {
        let r = self.rank;
        let mut out = vec![0u64; r];
        for (a, ma) in x.entries() {
            for (b, mb) in y.entries() {
                for (c, slot) in out.iter_mut().enumerate() {
                    *slot += ma * mb * self.n(c, a, b);
                }
            }
        }
        ObjectMultiset::from_counts(out)
    }

    /// `x^{(x) n}`; the zeroth power is the unit.
    pub fn power_multiset(&self, x: &ObjectMultiset, n: u32) -> ObjectMultiset {
        let mut acc = ObjectMultiset::simple(self.rank, self.unit);
        for _ in 0..n {
            acc = self.fuse(&acc, x);
        }
        acc
    }

    /// Decomposition of `a^{(x) n}` into simples.
    pub fn power_decompose(&self, a: usize, n: u32) -> ObjectMultiset {
        self.power_multiset(&ObjectMultiset::simple(self.rank, a), n)
    }

    /// `dim Hom(b, a^{(x) n})`.
    pub fn hom_dim(&self, b: usize, a: usize, n: u32) -> u64 {
        self.power_decompose(a, n).get(b)
    }

    /// `N^b_{a_1, ..., a_k} = dim Hom(a_1 (x) ... (x) a_k, b)`.
    pub fn multi_hom_dim(&self, b: usize, factors: &[usize]) -> u64 {
        let mut acc = ObjectMultiset::simple(self.rank, self.unit);
        for &a in factors {
            acc = self.fuse(&acc, &ObjectMultiset::simple(self.rank, a));
        }
        acc.get(b)
    }
}
