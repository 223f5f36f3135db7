//! Cached factorials and prime-exponent bookkeeping for products of factorials.
//!
//! The cache is grow-only: readers take a shared lock, and a writer only ever
//! appends entries, so a value once handed out never changes.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;

/// Default largest `n` whose factorial is kept in the cache.
pub const DEFAULT_FACTORIAL_CAP: usize = 600;

static CAP: AtomicUsize = AtomicUsize::new(DEFAULT_FACTORIAL_CAP);

fn table() -> &'static RwLock<Vec<BigUint>> {
    static TABLE: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigUint::one()]))
}

/// Sets the factorial cache cap. Entries already cached are kept.
pub fn set_factorial_cache_cap(cap: usize) {
    CAP.store(cap, Ordering::Relaxed);
}

pub fn factorial_cache_cap() -> usize {
    CAP.load(Ordering::Relaxed)
}

/// `n!`. Values up to the cache cap are memoized; larger ones are computed
/// from the largest cached entry.
pub fn factorial(n: usize) -> BigUint {
    {
        let t = table().read().expect("factorial cache poisoned");
        if n < t.len() {
            return t[n].clone();
        }
    }
    let cap = factorial_cache_cap();
    let mut t = table().write().expect("factorial cache poisoned");
    while t.len() <= n.min(cap) {
        let k = t.len();
        let next = &t[k - 1] * BigUint::from(k);
        t.push(next);
    }
    if n < t.len() {
        return t[n].clone();
    }
    let mut acc = t[t.len() - 1].clone();
    for k in t.len()..=n {
        acc *= BigUint::from(k);
    }
    acc
}

fn primes_up_to(n: usize) -> Vec<usize> {
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut k = i * i;
            while k <= n {
                sieve[k] = false;
                k += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(p, &is_p)| is_p.then_some(p))
        .collect()
}

/// Primes `<= n`, from a shared grow-only table.
pub(crate) fn primes(n: usize) -> Vec<usize> {
    static PRIMES: OnceLock<RwLock<(usize, Vec<usize>)>> = OnceLock::new();
    let lock = PRIMES.get_or_init(|| RwLock::new((1, Vec::new())));
    {
        let g = lock.read().expect("prime table poisoned");
        if g.0 >= n {
            return g.1.iter().copied().take_while(|&p| p <= n).collect();
        }
    }
    let mut g = lock.write().expect("prime table poisoned");
    if g.0 < n {
        let bound = n.max(2 * g.0);
        *g = (bound, primes_up_to(bound));
    }
    g.1.iter().copied().take_while(|&p| p <= n).collect()
}

/// Exponent of prime `p` in `n!` (Legendre).
fn legendre(n: usize, p: usize) -> i64 {
    let mut e = 0i64;
    let mut q = n / p;
    while q > 0 {
        e += q as i64;
        q /= p;
    }
    e
}

/// A rational number of the form `Π nᵢ! / Π mᵢ!`, tracked as prime exponents.
#[derive(Clone, Debug, Default)]
pub struct FactorialRatio {
    num: Vec<usize>,
    den: Vec<usize>,
}

impl FactorialRatio {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn mul_factorial(&mut self, n: usize) -> &mut Self {
        self.num.push(n);
        self
    }

    pub fn div_factorial(&mut self, n: usize) -> &mut Self {
        self.den.push(n);
        self
    }

    fn exponents(&self) -> Vec<(usize, i64)> {
        let top = self.num.iter().chain(&self.den).copied().max().unwrap_or(0);
        primes(top)
            .into_iter()
            .map(|p| {
                let e: i64 = self.num.iter().map(|&n| legendre(n, p)).sum::<i64>()
                    - self.den.iter().map(|&n| legendre(n, p)).sum::<i64>();
                (p, e)
            })
            .filter(|&(_, e)| e != 0)
            .collect()
    }

    /// Splits `√(self)` as `(a/b)·√s` with `s` a squarefree integer.
    ///
    /// Returns `(a, b, s)`.
    pub fn sqrt_split(&self) -> (BigUint, BigUint, BigUint) {
        let mut a = BigUint::one();
        let mut b = BigUint::one();
        let mut s = BigUint::one();
        for (p, e) in self.exponents() {
            let pb = BigUint::from(p);
            if e > 0 {
                a *= pb.pow((e / 2) as u32);
                if e % 2 == 1 {
                    s *= &pb;
                }
            } else {
                let e = -e;
                // 1/p^(2k+1) = p/p^(2k+2)
                b *= pb.pow(((e + 1) / 2) as u32);
                if e % 2 == 1 {
                    s *= &pb;
                }
            }
        }
        (a, b, s)
    }
}
