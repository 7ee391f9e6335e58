//! α-determinants: Σ_σ α^{ν(σ)} x_{σ(1)1} ⋯ x_{σ(m)m}.
//!
//! `adet` enumerates permutations directly over any ring (capped); it is the
//! definitional reference everything faster is checked against.
//! `adet_mod_p` is an independent algorithm for numeric matrices — a
//! subset-convolution over cycle supports — used to cross-check the large
//! monomial wreath cases through evaluation and interpolation.

use crate::exactalg::modular::{add_mod, mul_mod};
use crate::exactalg::{Rational, Ring};

use super::{PolyMatrix, WreathError};

/// Cap on the matrix size for full permutation enumeration with ring entries.
pub const ADET_CAP: usize = 10;

/// α-determinant by direct enumeration. Zero entries prune the recursion, so
/// structured matrices (many zeros) run far below the m! worst case.
pub fn adet<R: Ring>(alpha: &Rational, a: &PolyMatrix<R>) -> Result<R, WreathError> {
    if !a.is_square() {
        return Err(WreathError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let m = a.rows();
    if m > ADET_CAP {
        return Err(WreathError::CapExceeded {
            what: "adet enumeration",
            got: m,
            cap: ADET_CAP,
        });
    }
    if m == 0 {
        return Ok(R::ring_one());
    }
    // α^ν for ν = 0..m-1, lifted into the ring once
    let mut alpha_pows: Vec<R> = Vec::with_capacity(m);
    let mut acc = Rational::from_integer(1.into());
    for _ in 0..m {
        alpha_pows.push(R::ring_from_rational(&acc));
        acc *= alpha;
    }

    struct Walk<'a, R: Ring> {
        a: &'a PolyMatrix<R>,
        m: usize,
        alpha_pows: &'a [R],
        total: R,
        // chain endpoints for incremental cycle counting
        path_start: Vec<usize>,
        path_end: Vec<usize>,
    }

    impl<R: Ring> Walk<'_, R> {
        fn go(&mut self, col: usize, used: u32, prod: &R, cycles: usize) {
            if col == self.m {
                let nu = self.m - cycles;
                self.total = self.total.ring_add(&prod.ring_mul(&self.alpha_pows[nu]));
                return;
            }
            for r in 0..self.m {
                if used & (1 << r) != 0 {
                    continue;
                }
                let entry = self.a.get(r, col);
                if entry.ring_is_zero() {
                    continue;
                }
                let next = prod.ring_mul(entry);
                // add edge col -> r in the functional graph of σ
                let s1 = self.path_start[col];
                let e2 = self.path_end[r];
                if s1 == r {
                    self.go(col + 1, used | (1 << r), &next, cycles + 1);
                } else {
                    self.path_end[s1] = e2;
                    self.path_start[e2] = s1;
                    self.go(col + 1, used | (1 << r), &next, cycles);
                    self.path_end[s1] = col;
                    self.path_start[e2] = r;
                }
            }
        }
    }

    let mut w = Walk {
        a,
        m,
        alpha_pows: &alpha_pows,
        total: R::ring_zero(),
        path_start: (0..m).collect(),
        path_end: (0..m).collect(),
    };
    let one = R::ring_one();
    w.go(0, 0, &one, 0);
    Ok(w.total)
}

/// α-determinant of a numeric matrix modulo a prime, by the cycle-support
/// subset convolution: adet = Σ over partitions of {0..m-1} into cycles,
/// each cycle C led by its minimum contributing (Σ closed walks)·α^{|C|-1}.
///
/// Independent of the enumeration order used by `adet` and by the wreath
/// fast path, which is the point: it cross-checks both.
pub fn adet_mod_p(entries: &[u64], m: usize, alpha: u64, p: u64) -> u64 {
    assert_eq!(entries.len(), m * m);
    assert!(m <= 16, "subset DP caps at 16 points");
    if m == 0 {
        return 1 % p;
    }
    let e = |i: usize, j: usize| entries[i * m + j] % p;
    let full = 1usize << m;
    // cyc[r][mask]: sum over cycles with support {r} ∪ mask (mask ⊆ {r+1..})
    // of the product of entries along the cycle, where the cycle is traversed
    // as r -> v1 -> ... -> r with edge j -> σ(j) weighted e(σ(j), j).
    let mut cyc: Vec<std::collections::HashMap<usize, u64>> = vec![Default::default(); m];
    for r in 0..m {
        let above: Vec<usize> = (r + 1..m).collect();
        let na = above.len();
        // h[mask][v-index]: paths r -> ... -> above[v], visiting mask exactly
        let mut h: Vec<Vec<u64>> = vec![vec![0; na]; 1 << na];
        for (vi, &v) in above.iter().enumerate() {
            h[1 << vi][vi] = e(v, r); // edge r -> v: entry (σ(r)=v, r)
        }
        for mask in 1usize..(1 << na) {
            for vi in 0..na {
                if mask & (1 << vi) == 0 || h[mask][vi] == 0 {
                    continue;
                }
                let w = h[mask][vi];
                let v = above[vi];
                for ui in 0..na {
                    if mask & (1 << ui) != 0 {
                        continue;
                    }
                    let u = above[ui];
                    let step = e(u, v);
                    if step != 0 {
                        let nm = mask | (1 << ui);
                        h[nm][ui] = add_mod(h[nm][ui], mul_mod(w, step, p), p);
                    }
                }
            }
        }
        // close cycles back to r
        let selfloop = e(r, r);
        if selfloop != 0 {
            cyc[r].insert(0, selfloop);
        }
        for mask in 1usize..(1 << na) {
            let mut total = 0u64;
            for vi in 0..na {
                if mask & (1 << vi) != 0 && h[mask][vi] != 0 {
                    let back = e(r, above[vi]);
                    if back != 0 {
                        total = add_mod(total, mul_mod(h[mask][vi], back, p), p);
                    }
                }
            }
            if total != 0 {
                // translate mask over `above` into a global element mask
                let mut gmask = 0usize;
                for (vi, &v) in above.iter().enumerate() {
                    if mask & (1 << vi) != 0 {
                        gmask |= 1 << v;
                    }
                }
                cyc[r].insert(gmask, total);
            }
        }
    }
    // assemble: f[S] = Σ_{C ∋ min(S), C ⊆ S} cyc[min(S)][C'] · α^{|C|-1} · f[S∖C]
    let mut alpha_pows = vec![1u64; m + 1];
    for i in 1..=m {
        alpha_pows[i] = mul_mod(alpha_pows[i - 1], alpha, p);
    }
    let mut f = vec![0u64; full];
    f[0] = 1 % p;
    for s in 1..full {
        let r = s.trailing_zeros() as usize;
        let rest = s & !(1 << r);
        let mut acc = 0u64;
        // iterate subsets of rest as the remainder of the cycle through r
        for (&cmask, &w) in cyc[r].iter() {
            if cmask & !rest != 0 {
                continue;
            }
            let csize = cmask.count_ones() as usize + 1;
            let fr = f[rest & !cmask];
            if fr != 0 {
                acc = add_mod(acc, mul_mod(mul_mod(w, fr, p), alpha_pows[csize - 1], p), p);
            }
        }
        f[s] = acc;
    }
    f[full - 1]
}
