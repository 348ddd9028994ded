//! Canonical triangular bases for submodules of `(Z/n)^k`.
//!
//! A submodule of a free module over `Z/n` has a unique echelon basis once
//! three conditions are imposed: pivot entries divide `n`, entries above a
//! pivot are reduced modulo that pivot, and the basis is *saturated* — for
//! every basis row with pivot `d`, the shifted row `(n/d)·row` (whose pivot
//! vanishes) again lies in the span of the later rows. Saturation is what
//! makes prefix-based reasoning sound over `Z/n`, where zero divisors break
//! the field intuition: it guarantees that every member of the module whose
//! first nonzero coordinate is at column `j` is a combination of the basis
//! rows with pivots at column `j` or later.
//!
//! That uniqueness is what the rest of the crate relies on: two-sided ideals
//! of a convolution algebra are stored as [`ModBasis`] values (one per prime
//! ring factor), so ideal equality is plain structural equality.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

/// Canonical basis of a submodule of `(Z/n)^cols`.
///
/// Constructed by [`ModBasis::from_rows`] or grown with [`ModBasis::insert`];
/// the stored rows are always in canonical form, so `==` decides equality of
/// the underlying modules.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ModBasis {
    n: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn submod(a: u64, b: u64, n: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        n - (b - a)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Extended gcd on non-negative inputs: returns `(g, x, y)` with
/// `x*a + y*b = g` over the integers.
fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = xgcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn modinv(a: u64, n: u64) -> u64 {
    let (g, x, _) = xgcd(a as i128, n as i128);
    debug_assert_eq!(g, 1);
    (x.rem_euclid(n as i128)) as u64
}

/// A unit `u` of `Z/n` with `u*a = gcd(a, n) (mod n)`.
///
/// With `g = gcd(a, n)` and `a = g·a'`, `n = g·n'`, any lift of
/// `a'^{-1} (mod n')` that is coprime to `n` works; lifts differ by
/// multiples of `n'` and each prime of `n` rules out at most one residue,
/// so the scan below terminates quickly.
fn stabilizing_unit(a: u64, n: u64) -> u64 {
    let g = gcd(a, n);
    debug_assert!(g < n, "caller must not pass a = 0 (mod n)");
    let n1 = n / g;
    let mut u = modinv((a / g) % n1, n1);
    if u == 0 {
        u = 1; // n1 == 1 cannot happen (g < n), but keep u a unit regardless
    }
    while gcd(u, n) != 1 {
        u += n1;
    }
    u % n
}

impl ModBasis {
    /// The zero submodule of `(Z/n)^cols`. Requires `n >= 2`.
    pub fn zero(n: u64, cols: usize) -> Self {
        assert!(n >= 2, "modulus must be at least 2");
        ModBasis { n, cols, rows: Vec::new() }
    }

    /// The full module `(Z/n)^cols`.
    pub fn full(n: u64, cols: usize) -> Self {
        let mut basis = Self::zero(n, cols);
        for j in 0..cols {
            let mut e = vec![0; cols];
            e[j] = 1;
            basis.insert(e);
        }
        basis
    }

    /// Canonical basis of the row span of `rows`.
    pub fn from_rows(n: u64, cols: usize, rows: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let mut basis = Self::zero(n, cols);
        for row in rows {
            basis.insert(row);
        }
        basis
    }

    /// Modulus of the ambient module.
    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Rank of the ambient free module.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The canonical basis rows, pivots ordered left to right.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Adds `row` to the generating set, restoring canonical form.
    /// Returns `true` if the module strictly grew.
    pub fn insert(&mut self, row: Vec<u64>) -> bool {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        let mut pivots: BTreeMap<usize, Vec<u64>> = self
            .rows
            .drain(..)
            .map(|r| (r.iter().position(|&x| x != 0).expect("canonical rows are nonzero"), r))
            .collect();
        let grew = self.insert_into(&mut pivots, row);
        self.rows = pivots.into_values().collect();
        self.normalize();
        grew
    }

    fn insert_into(&self, pivots: &mut BTreeMap<usize, Vec<u64>>, row: Vec<u64>) -> bool {
        let n = self.n;
        let mut grew = false;
        let mut work = vec![row];
        while let Some(mut row) = work.pop() {
            for x in row.iter_mut() {
                *x %= n;
            }
            let mut j = 0;
            while j < self.cols {
                if row[j] == 0 {
                    j += 1;
                    continue;
                }
                match pivots.get(&j) {
                    Some(b) => {
                        let (a, c) = (b[j], row[j]);
                        if c % a == 0 {
                            let q = c / a;
                            for k in j..self.cols {
                                row[k] = submod(row[k], mulmod(q, b[k], n), n);
                            }
                            // row[j] is now 0; keep scanning to the right
                        } else {
                            // Replace the pivot row by the gcd combination and
                            // queue both the complementary row and the
                            // saturation shift of the new pivot.
                            let (g, x, y) = xgcd(a as i128, c as i128);
                            let g = g as u64;
                            let (x, y) = (x.rem_euclid(n as i128) as u64, y.rem_euclid(n as i128) as u64);
                            let mut nb = vec![0; self.cols];
                            let mut nr = vec![0; self.cols];
                            for k in j..self.cols {
                                nb[k] = (mulmod(x, b[k], n) + mulmod(y, row[k], n)) % n;
                                nr[k] = submod(mulmod(c / g, b[k], n), mulmod(a / g, row[k], n), n);
                            }
                            debug_assert_eq!(nb[j], g % n);
                            debug_assert_eq!(nr[j], 0);
                            work.push(nr);
                            work.push(nb.iter().map(|&v| mulmod(n / g, v, n)).collect());
                            pivots.insert(j, nb);
                            grew = true;
                            break;
                        }
                    }
                    None => {
                        let d = gcd(row[j], n);
                        let u = stabilizing_unit(row[j], n);
                        let row: Vec<u64> = row.iter().map(|&v| mulmod(u, v, n)).collect();
                        debug_assert_eq!(row[j], d);
                        work.push(row.iter().map(|&v| mulmod(n / d, v, n)).collect());
                        pivots.insert(j, row);
                        grew = true;
                        break;
                    }
                }
            }
        }
        grew
    }

    /// Reduces entries above each pivot modulo that pivot.
    fn normalize(&mut self) {
        let n = self.n;
        for i in 0..self.rows.len() {
            let j = self.rows[i].iter().position(|&x| x != 0).expect("nonzero row");
            let d = self.rows[i][j];
            debug_assert_eq!(n % d, 0, "pivot must divide the modulus");
            for k in 0..i {
                let q = self.rows[k][j] / d;
                if q != 0 {
                    let pivot_row = self.rows[i].clone();
                    for (dst, src) in self.rows[k][j..].iter_mut().zip(&pivot_row[j..]) {
                        *dst = submod(*dst, mulmod(q, *src, n), n);
                    }
                }
            }
        }
    }

    /// Canonical coset representative of `v` modulo this submodule.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let n = self.n;
        let mut v: Vec<u64> = v.iter().map(|&x| x % n).collect();
        for row in &self.rows {
            let j = row.iter().position(|&x| x != 0).expect("nonzero row");
            let q = v[j] / row[j];
            if q != 0 {
                for k in j..self.cols {
                    v[k] = submod(v[k], mulmod(q, row[k], n), n);
                }
            }
        }
        v
    }

    /// Membership test.
    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Whether `other` is a submodule of `self`.
    pub fn contains_module(&self, other: &ModBasis) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Smallest submodule containing both operands.
    pub fn sum(&self, other: &ModBasis) -> ModBasis {
        assert_eq!((self.n, self.cols), (other.n, other.cols), "ambient module mismatch");
        let mut out = self.clone();
        for row in &other.rows {
            out.insert(row.clone());
        }
        out
    }

    /// Intersection of two submodules.
    ///
    /// Stacks both bases into one matrix `B` and reads the intersection off
    /// the left kernel of `B`: a relation `a·rows(self) + b·rows(other) = 0`
    /// exhibits `a·rows(self)` as an element of both modules, and every
    /// common element arises that way.
    pub fn intersect(&self, other: &ModBasis) -> ModBasis {
        assert_eq!((self.n, self.cols), (other.n, other.cols), "ambient module mismatch");
        let stacked: Vec<Vec<u64>> = self.rows.iter().chain(&other.rows).cloned().collect();
        let kernel = left_kernel(self.n, self.cols, &stacked);
        let r1 = self.rows.len();
        ModBasis::from_rows(
            self.n,
            self.cols,
            kernel.rows().iter().map(|rel| {
                let mut v = vec![0; self.cols];
                for (coef, row) in rel[..r1].iter().zip(&self.rows) {
                    for k in 0..self.cols {
                        v[k] = (v[k] + mulmod(*coef, row[k], self.n)) % self.n;
                    }
                }
                v
            }),
        )
    }

    /// Whether this is the whole ambient module.
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols && self.rows.iter().all(|r| r.iter().filter(|&&x| x != 0).eq([&1]))
    }

    /// Whether this is the zero module.
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of elements of the submodule.
    pub fn element_count(&self) -> u128 {
        self.rows
            .iter()
            .map(|r| {
                let d = r.iter().find(|&&x| x != 0).expect("nonzero row");
                (self.n / d) as u128
            })
            .product()
    }

    /// Every element of the submodule, in no particular order. Intended for
    /// small modules; panics if the module has more than `2^22` elements.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let count = self.element_count();
        assert!(count <= 1 << 22, "module too large to list ({count} elements)");
        let mut out = vec![vec![0; self.cols]];
        for row in &self.rows {
            let d = row.iter().find(|&&x| x != 0).expect("nonzero row");
            let reps = self.n / d;
            let mut next = Vec::with_capacity(out.len() * reps as usize);
            for base in &out {
                for t in 0..reps {
                    next.push(
                        base.iter()
                            .zip(row)
                            .map(|(&b, &r)| (b + mulmod(t, r, self.n)) % self.n)
                            .collect(),
                    );
                }
            }
            out = next;
        }
        out
    }
}

/// Generators of the left kernel `{ y : y·A = 0 }` of the `rows.len() x cols`
/// matrix `A` over `Z/n`.
///
/// Computed by reducing the block matrix `[A | I]` to canonical form; the
/// saturation property guarantees that the canonical rows whose `A`-part is
/// zero span the full kernel, not just the relations an echelon pass happens
/// to stumble on.
pub fn left_kernel(n: u64, cols: usize, rows: &[Vec<u64>]) -> ModBasis {
    let r = rows.len();
    let augmented = ModBasis::from_rows(
        n,
        cols + r,
        rows.iter().enumerate().map(|(i, row)| {
            assert_eq!(row.len(), cols, "row length mismatch");
            let mut aug = Vec::with_capacity(cols + r);
            aug.extend_from_slice(row);
            aug.extend((0..r).map(|k| u64::from(k == i)));
            aug
        }),
    );
    ModBasis::from_rows(
        n,
        r,
        augmented
            .rows()
            .iter()
            .filter(|row| row[..cols].iter().all(|&x| x == 0))
            .map(|row| row[cols..].to_vec()),
    )
}

/// Image of a module under a linear map, given as a function on basis rows.
pub fn apply_map(n: u64, out_cols: usize, basis: &ModBasis, map: impl Fn(&[u64]) -> Vec<u64>) -> ModBasis {
    ModBasis::from_rows(
        n,
        out_cols,
        basis.rows().iter().map(|r| {
            let v = map(r);
            assert_eq!(v.len(), out_cols, "map produced a vector of the wrong length");
            v
        }),
    )
}
