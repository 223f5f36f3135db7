//! Exact 2j, 3j and 6j symbols, coupling ranges and intertwiner dimensions.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, ExactRadical, FactorialRatio, HalfInt, RadicalSum};

/// Four angular momenta `(j1, j2, j3, j4)` coupled to total zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JQuad {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j3: HalfInt,
    pub j4: HalfInt,
}

impl JQuad {
    pub fn new(j1: HalfInt, j2: HalfInt, j3: HalfInt, j4: HalfInt) -> Self {
        JQuad { j1, j2, j3, j4 }
    }

    pub fn from_twice(t: [i64; 4]) -> Self {
        JQuad::new(
            HalfInt::from_twice(t[0]),
            HalfInt::from_twice(t[1]),
            HalfInt::from_twice(t[2]),
            HalfInt::from_twice(t[3]),
        )
    }

    pub fn as_array(&self) -> [HalfInt; 4] {
        [self.j1, self.j2, self.j3, self.j4]
    }

    /// Whether `j1 + j2 + j3 + j4` is an integer.
    pub fn has_integer_sum(&self) -> bool {
        self.as_array().iter().map(|j| j.twice()).sum::<i64>() % 2 == 0
    }
}

/// Arguments of the 6j-symbol in the coupling layout
/// `{ j1 j2 j12 ; j3 j4 j23 }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SixJArgs {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j12: HalfInt,
    pub j3: HalfInt,
    pub j4: HalfInt,
    pub j23: HalfInt,
}

impl SixJArgs {
    pub fn new(j1: HalfInt, j2: HalfInt, j12: HalfInt, j3: HalfInt, j4: HalfInt, j23: HalfInt) -> Self {
        SixJArgs { j1, j2, j12, j3, j4, j23 }
    }

    /// From the symbol read row by row, `{a b c; d e f}`.
    pub fn symbol(a: HalfInt, b: HalfInt, c: HalfInt, d: HalfInt, e: HalfInt, f: HalfInt) -> Self {
        SixJArgs::new(a, b, c, d, e, f)
    }

    /// From twice-values read row by row.
    pub fn from_twice(t: [i64; 6]) -> Self {
        let h = t.map(HalfInt::from_twice);
        SixJArgs::new(h[0], h[1], h[2], h[3], h[4], h[5])
    }

    pub fn from_ints(t: [i64; 6]) -> Self {
        Self::from_twice(t.map(|x| 2 * x))
    }

    /// Row-major `[a, b, c, d, e, f]` of `{a b c; d e f}`.
    pub fn as_array(&self) -> [HalfInt; 6] {
        [self.j1, self.j2, self.j12, self.j3, self.j4, self.j23]
    }

    pub fn quad(&self) -> JQuad {
        JQuad::new(self.j1, self.j2, self.j3, self.j4)
    }

    /// The four triads `(j1,j2,j12)`, `(j3,j4,j12)`, `(j2,j3,j23)`, `(j1,j4,j23)`.
    pub fn triads(&self) -> [[HalfInt; 3]; 4] {
        [
            [self.j1, self.j2, self.j12],
            [self.j3, self.j4, self.j12],
            [self.j2, self.j3, self.j23],
            [self.j1, self.j4, self.j23],
        ]
    }

    /// Every triad satisfies the triangle inequalities with integer perimeter.
    pub fn is_admissible(&self) -> bool {
        self.triads().iter().all(|t| triangle(t[0], t[1], t[2]))
    }

    fn check_nonnegative(&self) -> Result<()> {
        match self.as_array().iter().find(|j| j.twice() < 0) {
            Some(j) => Err(Error::Domain(format!("negative angular momentum {j}"))),
            None => Ok(()),
        }
    }
}

impl std::fmt::Display for SixJArgs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{{{} {} {}; {} {} {}}}",
            self.j1, self.j2, self.j12, self.j3, self.j4, self.j23
        )
    }
}

/// Triangle inequalities with integer perimeter.
pub fn triangle(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    let (a, b, c) = (a.twice(), b.twice(), c.twice());
    a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && c <= a + b && c >= (a - b).abs()
}

/// `n!` for a value known to be a nonnegative integer (given as twice).
fn fact_twice(twice: i64) -> BigInt {
    debug_assert!(twice >= 0 && twice % 2 == 0);
    BigInt::from(factorial((twice / 2) as usize))
}

fn idx(twice: i64) -> usize {
    debug_assert!(twice >= 0 && twice % 2 == 0);
    (twice / 2) as usize
}

fn sign_of_twice(twice_exponent: i64) -> i64 {
    debug_assert!(twice_exponent % 2 == 0);
    if (twice_exponent / 2).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Pushes the triangle coefficient `(a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!`.
fn push_delta(r: &mut FactorialRatio, a: i64, b: i64, c: i64) {
    r.mul_factorial(idx(a + b - c))
        .mul_factorial(idx(a - b + c))
        .mul_factorial(idx(-a + b + c))
        .div_factorial(idx(a + b + c) + 1);
}

/// The 2j-symbol `(j j; m m')`: `(-1)^{j-m}/√(2j+1)` when `m = -m'`, else 0.
pub fn two_j_symbol(j: HalfInt, m: HalfInt, mp: HalfInt) -> Result<ExactRadical> {
    HalfInt::check_projection(j, m)?;
    HalfInt::check_projection(j, mp)?;
    if m != -mp {
        return Ok(ExactRadical::zero());
    }
    let s = sign_of_twice((j - m).twice());
    ExactRadical::new(
        BigRational::from_integer(BigInt::from(s)),
        BigRational::new(BigInt::one(), BigInt::from(j.multiplicity())),
    )
}

/// `√(2j+1)` times the 2j-symbol: `(-1)^{j-m} δ_{m,-m'}` as an integer.
pub(crate) fn two_j_component(j: HalfInt, m: HalfInt, mp: HalfInt) -> i64 {
    if m != -mp {
        0
    } else {
        sign_of_twice((j - m).twice())
    }
}

/// The Wigner 3j-symbol, from the Racah closed form.
pub fn three_j_symbol(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
    m3: HalfInt,
) -> Result<ExactRadical> {
    HalfInt::check_projection(j1, m1)?;
    HalfInt::check_projection(j2, m2)?;
    HalfInt::check_projection(j3, m3)?;
    Ok(three_j_unchecked(
        [j1.twice(), j2.twice(), j3.twice()],
        [m1.twice(), m2.twice(), m3.twice()],
    ))
}

/// 3j-symbol on twice-values, assuming each `m` is a projection of its `j`.
fn three_j_unchecked(j: [i64; 3], m: [i64; 3]) -> ExactRadical {
    let [j1, j2, j3] = j;
    let [m1, m2, m3] = m;
    if m1 + m2 + m3 != 0 || !triangle(HalfInt::from_twice(j1), HalfInt::from_twice(j2), HalfInt::from_twice(j3)) {
        return ExactRadical::zero();
    }
    let mut ratio = FactorialRatio::new();
    push_delta(&mut ratio, j1, j2, j3);
    for (jj, mm) in [(j1, m1), (j2, m2), (j3, m3)] {
        ratio.mul_factorial(idx(jj + mm)).mul_factorial(idx(jj - mm));
    }
    let (a, b, s) = ratio.sqrt_split();

    // k ranges where every factorial argument is nonnegative
    let kmin = 0.max(j2 - j3 - m1).max(j1 - j3 + m2);
    let kmax = (j1 + j2 - j3).min(j1 - m1).min(j2 + m2);
    let mut sum = BigRational::zero();
    let mut k = kmin;
    while k <= kmax {
        let den = fact_twice(k)
            * fact_twice(j3 - j2 + k + m1)
            * fact_twice(j3 - j1 + k - m2)
            * fact_twice(j1 + j2 - j3 - k)
            * fact_twice(j1 - k - m1)
            * fact_twice(j2 - k + m2);
        let term = BigRational::new(BigInt::from(sign_of_twice(k)), den);
        sum += term;
        k += 2;
    }
    let sign = sign_of_twice(j1 - j2 - m3);
    let coef = sum
        * BigRational::new(BigInt::from(sign) * BigInt::from(a), BigInt::from(b));
    ExactRadical::from_parts_unchecked(coef, s)
}

const THREE_J_CACHE_LIMIT: usize = 1 << 20;

thread_local! {
    static THREE_J_CACHE: RefCell<HashMap<[i64; 6], ExactRadical>> = RefCell::new(HashMap::new());
}

/// Memoized 3j-symbol on twice-values (per thread).
pub(crate) fn three_j_cached(j: [i64; 3], m: [i64; 3]) -> ExactRadical {
    let key = [j[0], j[1], j[2], m[0], m[1], m[2]];
    if let Some(v) = THREE_J_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let v = three_j_unchecked(j, m);
    THREE_J_CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= THREE_J_CACHE_LIMIT {
            c.clear();
        }
        c.insert(key, v.clone());
    });
    v
}

/// Default largest m-lattice (product of `2j+1` over the six edges) that
/// [`six_j_msum`] will enumerate.
pub const DEFAULT_MSUM_LATTICE_CAP: u64 = 1_000_000_000;

static MSUM_LATTICE_CAP: AtomicU64 = AtomicU64::new(DEFAULT_MSUM_LATTICE_CAP);

pub fn set_msum_lattice_cap(cap: u64) {
    MSUM_LATTICE_CAP.store(cap, Ordering::Relaxed);
}

pub fn msum_lattice_cap() -> u64 {
    MSUM_LATTICE_CAP.load(Ordering::Relaxed)
}

/// Table of a 3j-symbol over its first two projections; the third is fixed by
/// the selection rule `m1 + m2 + m3 = 0` after the supplied sign flips.
struct NodeTable {
    j: [i64; 3],
    values: Vec<Option<ExactRadical>>,
}

impl NodeTable {
    /// Values of `(j0 j1 j2; s0·a, s1·b, m2)` indexed by `(a, b)`, where
    /// `m2 = -(s0·a + s1·b)`.
    fn build(j: [i64; 3], s0: i64, s1: i64) -> Self {
        let n0 = (j[0] + 1) as usize;
        let n1 = (j[1] + 1) as usize;
        let mut values = Vec::with_capacity(n0 * n1);
        for ia in 0..n0 {
            let a = j[0] - 2 * ia as i64;
            for ib in 0..n1 {
                let b = j[1] - 2 * ib as i64;
                let (ma, mb) = (s0 * a, s1 * b);
                let mc = -(ma + mb);
                if mc.abs() > j[2] {
                    values.push(None);
                    continue;
                }
                let v = three_j_cached(j, [ma, mb, mc]);
                values.push((!v.is_zero()).then_some(v));
            }
        }
        NodeTable { j, values }
    }

    fn get(&self, a: i64, b: i64) -> Option<&ExactRadical> {
        let ia = ((self.j[0] - a) / 2) as usize;
        let ib = ((self.j[1] - b) / 2) as usize;
        self.values[ia * (self.j[1] + 1) as usize + ib].as_ref()
    }
}

/// The 6j-symbol as an explicit sum over all projections of four 3j-symbols
/// and six 2j-symbols, with the prefactor `Π √(2j_r+1)`.
///
/// Written in the symmetric labeling `{j1 j2 j3; j4 j5 j6}` the summand is
/// `(j1 j2 j3; m1 m2 m3)(j1 j5 j6; m1' m5' m6)(j2 j6 j4; m2' m6' m4)
/// (j3 j4 j5; m3' m4' m5)` times the six 2j-symbols `(j_r j_r; m_r m_r')`.
/// Since each 2j-symbol forces `m_r' = -m_r`, only the unprimed projections
/// are enumerated, and only where no 3j factor vanishes by selection.
pub fn six_j_msum(args: &SixJArgs) -> Result<ExactRadical> {
    args.check_nonnegative()?;
    if !args.is_admissible() {
        return Ok(ExactRadical::zero());
    }
    let t = args.as_array().map(|j| j.twice());
    let lattice = t.iter().fold(1u64, |acc, &x| acc.saturating_mul(x as u64 + 1));
    if lattice > msum_lattice_cap() {
        return Err(Error::ResourceLimit(format!(
            "m-lattice of {args} has {lattice} points (cap {})",
            msum_lattice_cap()
        )));
    }
    let [j1, j2, j3, j4, j5, j6] = t;

    // (j1 j2 j3; m1 m2 m3)
    let node_a = NodeTable::build([j1, j2, j3], 1, 1);
    // (j1 j5 j6; -m1 -m5 m6)
    let node_b = NodeTable::build([j1, j5, j6], -1, -1);
    // (j2 j6 j4; -m2 -m6 m4)
    let node_c = NodeTable::build([j2, j6, j4], -1, -1);
    // (j3 j4 j5; -m3 -m4 m5)
    let node_d = NodeTable::build([j3, j4, j5], -1, -1);

    let proj = |j: i64| (0..=j).map(move |k| j - 2 * k);
    let mut acc = RadicalSum::new();
    for m1 in proj(j1) {
        for m2 in proj(j2) {
            let Some(va) = node_a.get(m1, m2) else { continue };
            let m3 = -m1 - m2;
            for m5 in proj(j5) {
                let Some(vb) = node_b.get(m1, m5) else { continue };
                let m6 = m1 + m5;
                let Some(vc) = node_c.get(m2, m6) else { continue };
                let m4 = m2 + m6;
                if m4.abs() > j4 {
                    continue;
                }
                let Some(vd) = node_d.get(m3, m4) else { continue };
                // Π √(2j_r+1)·(j_r j_r; m_r, -m_r) = Π (-1)^{j_r - m_r}
                let phase = sign_of_twice((j1 - m1) + (j2 - m2) + (j3 - m3) + (j4 - m4) + (j5 - m5) + (j6 - m6));
                let term = va.mul(vb).mul(vc).mul(vd);
                acc.push(&if phase < 0 { -term } else { term });
            }
        }
    }
    acc.into_radical()
}

/// The 6j-symbol from Racah's single-sum closed form.
pub fn six_j_racah(args: &SixJArgs) -> Result<ExactRadical> {
    args.check_nonnegative()?;
    if !args.is_admissible() {
        return Ok(ExactRadical::zero());
    }
    let [a, b, c, d, e, f] = args.as_array().map(|j| j.twice());
    let mut ratio = FactorialRatio::new();
    push_delta(&mut ratio, a, b, c);
    push_delta(&mut ratio, a, e, f);
    push_delta(&mut ratio, d, b, f);
    push_delta(&mut ratio, d, e, c);
    let (ra, rb, s) = ratio.sqrt_split();

    let alpha = [a + b + c, a + e + f, d + b + f, d + e + c];
    let beta = [a + b + d + e, b + c + e + f, c + a + f + d];
    let tmin = *alpha.iter().max().unwrap();
    let tmax = *beta.iter().min().unwrap();
    let mut sum = BigRational::zero();
    let mut t = tmin;
    while t <= tmax {
        let mut den = BigInt::one();
        for al in alpha {
            den *= fact_twice(t - al);
        }
        for be in beta {
            den *= fact_twice(be - t);
        }
        let num = BigInt::from(sign_of_twice(t)) * fact_twice(t + 2);
        sum += BigRational::new(num, den);
        t += 2;
    }
    let coef = sum * BigRational::new(BigInt::from(ra), BigInt::from(rb));
    Ok(ExactRadical::from_parts_unchecked(coef, s))
}

/// `(j12_min, j12_max)`; the range is empty when `min > max`.
pub fn j12_bounds(q: &JQuad) -> (HalfInt, HalfInt) {
    (
        (q.j1 - q.j2).abs().max((q.j3 - q.j4).abs()),
        (q.j1 + q.j2).min(q.j3 + q.j4),
    )
}

/// `(j23_min, j23_max)`; the range is empty when `min > max`.
pub fn j23_bounds(q: &JQuad) -> (HalfInt, HalfInt) {
    (
        (q.j2 - q.j3).abs().max((q.j1 - q.j4).abs()),
        (q.j2 + q.j3).min(q.j1 + q.j4),
    )
}

/// Dimension of the space of rotational invariants in the four-fold tensor
/// product, from the `j12` range. Zero unless `Σ j_r` is an integer.
pub fn dim_zs(q: &JQuad) -> i64 {
    if !q.has_integer_sum() {
        return 0;
    }
    let (lo, hi) = j12_bounds(q);
    ((hi - lo).twice() / 2 + 1).max(0)
}

/// Same dimension from the `j23` range.
pub fn dim_zs_j23(q: &JQuad) -> i64 {
    if !q.has_integer_sum() {
        return 0;
    }
    let (lo, hi) = j23_bounds(q);
    ((hi - lo).twice() / 2 + 1).max(0)
}

/// Dimension from the formula symmetric in the four spins:
/// `2 min(j_r, s - j_r) + 1` with `s` the semiperimeter.
pub fn dim_zs_symmetric(q: &JQuad) -> i64 {
    if !q.has_integer_sum() {
        return 0;
    }
    let t = q.as_array().map(|j| j.twice());
    let twice_s: i64 = t.iter().sum::<i64>() / 2;
    let m = t
        .iter()
        .flat_map(|&x| [x, twice_s - x])
        .min()
        .unwrap();
    // 2·min + 1 with min = m/2
    (m + 1).max(0)
}

/// The scalar product `⟨B|A⟩ = (-1)^{j1+j2+j3+j4} √((2j12+1)(2j23+1)) {6j}`
/// between the `j12`-coupled and `j23`-coupled invariants.
pub fn scalar_product_ba(args: &SixJArgs) -> Result<ExactRadical> {
    let six = six_j_racah(args)?;
    if six.is_zero() {
        return Ok(six);
    }
    let sign = sign_of_twice(args.quad().as_array().iter().map(|j| j.twice()).sum());
    let root = ExactRadical::sqrt_of(BigRational::from_integer(BigInt::from(
        args.j12.multiplicity() * args.j23.multiplicity(),
    )))?;
    Ok(six.mul(&root).scale_int(sign))
}

/// Time reversal on the standard basis: `Θ|j m⟩ = (-1)^{j-m} |j, -m⟩`.
/// Returns the sign and the image projection.
pub fn time_reversal_phase(j: HalfInt, m: HalfInt) -> Result<(i64, HalfInt)> {
    HalfInt::check_projection(j, m)?;
    Ok((sign_of_twice((j - m).twice()), -m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn rad(c: (i64, i64), s: (i64, i64)) -> ExactRadical {
        ExactRadical::new(rat(c.0, c.1), rat(s.0, s.1)).unwrap()
    }

    #[test]
    fn two_j_values() {
        assert_eq!(two_j_symbol(h(1), h(1), h(-1)).unwrap(), rad((1, 1), (1, 2)));
        assert_eq!(two_j_symbol(h(2), h(0), h(0)).unwrap(), rad((-1, 1), (1, 3)));
        assert!(two_j_symbol(h(2), h(2), h(2)).unwrap().is_zero());
        assert!(two_j_symbol(h(2), h(1), h(-1)).is_err());
        assert!(two_j_symbol(h(2), h(4), h(-4)).is_err());
    }

    #[test]
    fn two_j_component_is_scaled_symbol() {
        for tj in 0..=8 {
            let j = h(tj);
            let root = ExactRadical::sqrt_of(rat(j.multiplicity(), 1)).unwrap();
            for m in j.projections() {
                for mp in j.projections() {
                    let lhs = two_j_symbol(j, m, mp).unwrap().mul(&root);
                    assert_eq!(lhs, ExactRadical::from_integer(two_j_component(j, m, mp)));
                }
            }
        }
    }

    #[test]
    fn three_j_known_values() {
        // (1 1 1; 1 0 -1) = -1/√6
        let v = three_j_symbol(h(2), h(2), h(2), h(2), h(0), h(-2)).unwrap();
        assert_eq!(v, rad((-1, 1), (1, 6)));
        // (1/2 1/2 1; 1/2 -1/2 0) = 1/√6
        let v = three_j_symbol(h(1), h(1), h(2), h(1), h(-1), h(0)).unwrap();
        assert_eq!(v, rad((1, 1), (1, 6)));
        // (1 1 0; 0 0 0) = -1/√3
        let v = three_j_symbol(h(2), h(2), h(0), h(0), h(0), h(0)).unwrap();
        assert_eq!(v, rad((-1, 1), (1, 3)));
        // (2 2 2; 0 0 0) = -√(2/35)
        let v = three_j_symbol(h(4), h(4), h(4), h(0), h(0), h(0)).unwrap();
        assert_eq!(v, rad((-1, 1), (2, 35)));
        assert!(three_j_symbol(h(2), h(2), h(2), h(2), h(0), h(0)).unwrap().is_zero());
        assert!(three_j_symbol(h(2), h(2), h(2), h(0), h(0), h(0)).unwrap().is_zero());
    }

    #[test]
    fn three_j_reduces_to_two_j() {
        for tj in 0..=10 {
            let j = h(tj);
            for m in j.projections() {
                let a = three_j_symbol(j, j, HalfInt::ZERO, m, -m, HalfInt::ZERO).unwrap();
                let b = two_j_symbol(j, m, -m).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn three_j_column_orthogonality() {
        for t1 in 0..=8 {
            for t2 in 0..=8 {
                for t3 in 0..=8 {
                    let (j1, j2, j3) = (h(t1), h(t2), h(t3));
                    if !triangle(j1, j2, j3) {
                        continue;
                    }
                    for m3 in j3.projections() {
                        let mut total = BigRational::zero();
                        for m1 in j1.projections() {
                            let m2 = -m1 - m3;
                            if m2.abs() > j2 {
                                continue;
                            }
                            total += three_j_symbol(j1, j2, j3, m1, m2, m3).unwrap().square();
                        }
                        assert_eq!(total * rat(j3.multiplicity(), 1), rat(1, 1));
                    }
                }
            }
        }
    }

    #[test]
    fn six_j_examples() {
        let ones = SixJArgs::from_ints([1; 6]);
        assert_eq!(six_j_msum(&ones).unwrap(), ExactRadical::new(rat(1, 6), rat(1, 1)).unwrap());
        assert_eq!(six_j_racah(&ones).unwrap(), six_j_msum(&ones).unwrap());
        let twos = SixJArgs::from_ints([2; 6]);
        assert_eq!(six_j_racah(&twos).unwrap(), ExactRadical::from_rational(rat(-3, 70)));
        assert_eq!(six_j_msum(&twos).unwrap(), ExactRadical::from_rational(rat(-3, 70)));
        // {a b c; 0 c b} = (-1)^{a+b+c}/√((2b+1)(2c+1))
        let red = SixJArgs::from_ints([1, 1, 1, 0, 1, 1]);
        assert_eq!(six_j_msum(&red).unwrap(), ExactRadical::from_rational(rat(-1, 3)));
        // triangle violation
        assert!(six_j_msum(&SixJArgs::from_ints([1, 1, 3, 1, 1, 1])).unwrap().is_zero());
        // odd perimeter
        assert!(six_j_racah(&SixJArgs::from_twice([1, 1, 1, 1, 1, 1])).unwrap().is_zero());
    }

    #[test]
    fn six_j_half_integer_values() {
        // {1/2 1/2 1; 1/2 1/2 0} = 1/2 ; {1/2 1/2 0; 1/2 1/2 1} = 1/2
        let a = SixJArgs::from_twice([1, 1, 2, 1, 1, 0]);
        assert_eq!(six_j_racah(&a).unwrap(), ExactRadical::from_rational(rat(1, 2)));
        assert_eq!(six_j_msum(&a).unwrap(), ExactRadical::from_rational(rat(1, 2)));
        // {1/2 1/2 1; 1/2 1/2 1} = 1/6
        let b = SixJArgs::from_twice([1, 1, 2, 1, 1, 2]);
        assert_eq!(six_j_racah(&b).unwrap(), ExactRadical::from_rational(rat(1, 6)));
        assert_eq!(six_j_msum(&b).unwrap(), ExactRadical::from_rational(rat(1, 6)));
    }

    #[test]
    fn msum_resource_limit() {
        set_msum_lattice_cap(100);
        let r = six_j_msum(&SixJArgs::from_ints([2; 6]));
        set_msum_lattice_cap(DEFAULT_MSUM_LATTICE_CAP);
        assert!(matches!(r, Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn bounds_and_dims() {
        let q = JQuad::from_twice([9, 6, 11, 12]);
        assert_eq!(j12_bounds(&q), (h(3), h(15)));
        assert_eq!(dim_zs(&q), 7);
        assert_eq!(dim_zs_symmetric(&q), 7);
        assert_eq!(dim_zs_j23(&q), 7);
        let q = JQuad::from_twice([2, 2, 2, 2]);
        assert_eq!(j12_bounds(&q), (h(0), h(4)));
        assert_eq!(dim_zs(&q), 3);
        assert_eq!(j12_bounds(&JQuad::from_twice([1; 4])), (h(0), h(2)));
        assert_eq!(dim_zs(&JQuad::from_twice([0, 0, 0, 2])), 0);
        assert_eq!(dim_zs_symmetric(&JQuad::from_twice([0, 0, 0, 2])), 0);
    }

    #[test]
    fn scalar_product_values() {
        assert_eq!(
            scalar_product_ba(&SixJArgs::from_ints([1; 6])).unwrap(),
            ExactRadical::from_rational(rat(1, 2))
        );
        assert!(scalar_product_ba(&SixJArgs::from_ints([1, 1, 3, 1, 1, 1])).unwrap().is_zero());
        let mut total = BigRational::zero();
        for j12 in 0..=2 {
            total += scalar_product_ba(&SixJArgs::from_ints([1, 1, j12, 1, 1, 1])).unwrap().square();
        }
        assert_eq!(total, rat(1, 1));
    }

    #[test]
    fn time_reversal() {
        assert_eq!(time_reversal_phase(h(1), h(1)).unwrap(), (1, h(-1)));
        assert_eq!(time_reversal_phase(h(2), h(0)).unwrap(), (-1, h(0)));
        assert_eq!(time_reversal_phase(h(6), h(6)).unwrap(), (1, h(-6)));
        assert!(time_reversal_phase(h(2), h(1)).is_err());
    }
}
